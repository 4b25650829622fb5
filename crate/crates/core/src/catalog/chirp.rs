//! Identities with a Gaussian chirp `sin(av²)`, `cos(av²)` or `e^{iav²}`
//! against hyperbolic kernels, and the cosh-pair family with a cut power.
//!
//! Each carries an exponential growth `e^{av}` (or `e^{2av}`) that must stay
//! below the kernel's decay; windows stop at 80% of that threshold.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::Result;
use crate::numerics::{gamma_real, sign_pow, ComplexValue};
use crate::quadrature::{integrate_oscillatory_gaussian, OscillatorySpec, QuadratureOptions, QuadratureResult};

use super::{c, get, geti, re, real, violation, CatalogEntry, ParamSpec, Params, Recipe, ToleranceClass};

const CAP: f64 = 0.8;

fn osc<F: Fn(f64) -> f64>(f: F, chirp: f64, growth: f64, decay: f64, o: &QuadratureOptions) -> Result<QuadratureResult> {
    integrate_oscillatory_gaussian(real(f), OscillatorySpec { chirp, growth, kernel_decay: decay }, o)
}

/// `∫_{-∞}^{∞} f` as `∫₀^∞ f(v) + f(-v)`.
fn osc_full<F: Fn(f64) -> f64>(f: F, chirp: f64, growth: f64, decay: f64, o: &QuadratureOptions) -> Result<QuadratureResult> {
    osc(|v| f(v) + f(-v), chirp, growth, decay, o)
}

/// `∫₀^∞ v^{s-1} g(v)` for `g` bounded at the origin with `g(0) = g0`.
///
/// For small s most of the mass sits at v far below any double, so
/// `g0 v^{s-1} e^{-λv}` is taken out in closed form (`g0 Γ(s) λ^{-s}`) and
/// only the `O(v^s)` remainder is integrated.
fn osc_origin_power<G: Fn(f64) -> f64>(
    g: G,
    g0: f64,
    s: f64,
    chirp: f64,
    growth: f64,
    decay: f64,
    o: &QuadratureOptions,
) -> Result<QuadratureResult> {
    let lambda = decay - growth;
    let mut r = osc(
        |v| {
            // The remainder is O(v^s) and its weight O(v); nothing left to gain here.
            if v < 1e-200 {
                return 0.0;
            }
            v.powf(s - 1.0) * (g(v) - g0 * (-lambda * v).exp())
        },
        chirp,
        growth,
        decay,
        o,
    )?;
    r.value += g0 * gamma_real(s)? * lambda.powf(-s);
    Ok(r)
}

/// `v/sinh(2kπv)`, finite at the origin.
fn v_over_sinh(k: i64, v: f64) -> f64 {
    let x = 2.0 * PI * k as f64 * v;
    if x < 1e-8 {
        1.0 / (2.0 * PI * k as f64)
    } else {
        v / x.sinh()
    }
}

/// `v^s (v²+1)^{s/2}`.
fn cut_pow(v: f64, s: f64) -> f64 {
    v.powf(s) * (v * v + 1.0).powf(s / 2.0)
}

fn ks(p: &Params) -> (i64, f64) {
    (geti(p, "k"), get(p, "s"))
}

fn ksa(p: &Params) -> (i64, f64, f64) {
    (geti(p, "k"), get(p, "s"), get(p, "a"))
}

fn cap_a(p: &Params, threshold: f64) -> Result<()> {
    let a = get(p, "a");
    if a > CAP * threshold {
        return Err(violation("a", a, format!("a <= {:.4} (80% of the growth threshold {threshold:.4})", CAP * threshold)));
    }
    Ok(())
}

fn sinh_guard(p: &Params) -> Result<()> {
    cap_a(p, 2.0 * PI * get(p, "k"))
}

fn half_sinh_guard(p: &Params) -> Result<()> {
    // e^{2av} against 1/sinh(kπv).
    cap_a(p, PI * get(p, "k") / 2.0)
}

fn cosh_guard(p: &Params) -> Result<()> {
    cap_a(p, PI * (2.0 * get(p, "k") - 1.0))
}

/// `Σ_{n=1}^{k-1} (-1)^n (k²-n²)^e · g((k²-n²)/k²)`.
fn sinh_sum(k: i64, e: f64, g: impl Fn(f64) -> f64) -> f64 {
    (1..k)
        .map(|n| {
            let m = (k * k - n * n) as f64;
            sign_pow(n) * m.powf(e) * g(m / (k * k) as f64)
        })
        .sum()
}

/// `Σ_{n=1}^{k-1} (-1)^n (c²-4n²)^e · g((c²-4n²)/c²)` with `c = 2k-1`.
fn cosh_sum(k: i64, e: f64, g: impl Fn(f64) -> f64) -> f64 {
    let cc = (2 * k - 1) as f64;
    (1..k)
        .map(|n| {
            let m = cc * cc - (4 * n * n) as f64;
            sign_pow(n) * m.powf(e) * g(m / (cc * cc))
        })
        .sum()
}

fn zs_sin_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (k, s, a) = ksa(p);
    osc(
        |v| {
            let t = s * (1.0 / v).atan();
            let w = a * v * v;
            cut_pow(v, s) * (t.sin() * w.sin() * (a * v).cosh() + t.cos() * w.cos() * (a * v).sinh())
                / (2.0 * PI * k as f64 * v).sinh()
        },
        a,
        a,
        2.0 * PI * k as f64,
        o,
    )
}

fn zs_sin_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (k, s, a) = ksa(p);
    let kf = k as f64;
    let sg = sign_pow(k + 1);
    Ok(re(sg * (a / 4.0).sin() / (4f64.powf(s + 1.0) * kf)
        + sg / (2.0 * kf).powf(1.0 + 2.0 * s) * sinh_sum(k, s, |m| (a * m / 4.0).sin())))
}

fn zs_cos_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (k, s, a) = ksa(p);
    let decay = 2.0 * PI * k as f64;
    osc_origin_power(
        |v| {
            let t = s * (1.0 / v).atan();
            let w = a * v * v;
            (v * v + 1.0).powf(s / 2.0)
                * v_over_sinh(k, v)
                * (t.sin() * w.cos() * (a * v).cosh() - t.cos() * w.sin() * (a * v).sinh())
        },
        (s * PI / 2.0).sin() / decay,
        s,
        a,
        a,
        decay,
        o,
    )
}

fn zs_cos_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (k, s, a) = ksa(p);
    let kf = k as f64;
    let sg = sign_pow(k + 1);
    Ok(re(sg * (a / 4.0).cos() / (2f64.powf(2.0 * s + 2.0) * kf)
        + sg / (2.0 * kf).powf(1.0 + 2.0 * s) * sinh_sum(k, s, |m| (a * m / 4.0).cos())))
}

fn zs_sin_o1_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (k, s) = ks(p);
    let (ss, cs) = ((s * PI / 2.0).sin(), (s * PI / 2.0).cos());
    osc(
        |v| {
            let t = s * v.atan();
            let w = (v * v + 1.0).powf(s / 2.0) * v.powf(s + 1.0) / (2.0 * PI * k as f64 * v).sinh();
            w * (ss * (v * t.cos() + t.sin()) + cs * (t.cos() - v * t.sin()))
        },
        0.0,
        0.0,
        2.0 * PI * k as f64,
        o,
    )
}

fn zs_sin_o1_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (k, s) = ks(p);
    let kf = k as f64;
    Ok(re(sign_pow(k + 1) / (2.0 * kf).powf(2.0 * s + 3.0) * sinh_sum(k, s + 1.0, |_| 1.0)
        - sign_pow(k) / (2f64.powf(2.0 * s + 4.0) * kf)))
}

fn zs_cos_a0_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (k, s) = ks(p);
    let (ss, cs) = ((s * PI / 2.0).sin(), (s * PI / 2.0).cos());
    let decay = 2.0 * PI * k as f64;
    osc_origin_power(
        |v| {
            let t = s * v.atan();
            (v * v + 1.0).powf(s / 2.0) * v_over_sinh(k, v) * (ss * t.cos() - cs * t.sin())
        },
        ss / decay,
        s,
        0.0,
        0.0,
        decay,
        o,
    )
}

fn zs_cos_a0_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (k, s) = ks(p);
    let kf = k as f64;
    Ok(re(sign_pow(k + 1) * (2.0 * kf).powf(-2.0 * s - 1.0) * sinh_sum(k, s, |_| 1.0)
        - sign_pow(k) * 2f64.powf(-2.0 * s - 2.0) / kf))
}

fn fresnel_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (k, a) = (geti(p, "k"), get(p, "a"));
    osc(
        |v| (a * v * v).cos() * (2.0 * a * v).sinh() / (k as f64 * PI * v).sinh(),
        a,
        2.0 * a,
        PI * k as f64,
        o,
    )
}

fn fresnel_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (k, a) = (geti(p, "k"), get(p, "a"));
    let kf = k as f64;
    let sum: f64 = (1..k).map(|n| sign_pow(n) * (a * (k * k - n * n) as f64 / (kf * kf)).sin()).sum();
    Ok(re(sign_pow(k + 1) / kf * sum + sign_pow(k + 1) * a.sin() / (2.0 * kf)))
}

fn zs_sin_cosh_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (k, s, a) = ksa(p);
    let cc = (2 * k - 1) as f64;
    let r = osc(
        |v| {
            let t = s * (1.0 / v).atan();
            let w = a * v * v;
            cut_pow(v, s) * (w.sin() * t.cos() * (a * v).cosh() - w.cos() * t.sin() * (a * v).sinh()) / (PI * cc * v).cosh()
        },
        a,
        a,
        PI * cc,
        o,
    )?;
    Ok(r.scaled(re(4f64.powf(s))))
}

fn zs_sin_cosh_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (k, s, a) = ksa(p);
    let cc = (2 * k - 1) as f64;
    let sg = sign_pow(k + 1);
    Ok(re(sg / cc.powf(2.0 * s + 1.0) * cosh_sum(k, s, |m| (a * m / 4.0).sin()) + sg * (a / 4.0).sin() / (2.0 * cc)))
}

fn zs_cos_cosh_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (k, s, a) = ksa(p);
    let cc = (2 * k - 1) as f64;
    let r = osc(
        |v| {
            let t = s * (1.0 / v).atan();
            let w = a * v * v;
            cut_pow(v, s) * (w.cos() * t.cos() * (a * v).cosh() + w.sin() * t.sin() * (a * v).sinh()) / (PI * cc * v).cosh()
        },
        a,
        a,
        PI * cc,
        o,
    )?;
    Ok(r.scaled(re(4f64.powf(s))))
}

fn zs_cos_cosh_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (k, s, a) = ksa(p);
    let cc = (2 * k - 1) as f64;
    let sg = sign_pow(k + 1);
    Ok(re(sg / cc.powf(2.0 * s + 1.0) * cosh_sum(k, s, |m| (a * m / 4.0).cos()) + sg * (a / 4.0).cos() / (2.0 * cc)))
}

fn exp_quad_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (k, a) = (geti(p, "k"), get(p, "a"));
    let cc = (2 * k - 1) as f64;
    integrate_oscillatory_gaussian(
        |v| Ok(Complex64::from_polar(1.0, a * v * v) * ((a * v).cosh() / (cc * PI * v).cosh())),
        OscillatorySpec { chirp: a, growth: a, kernel_decay: PI * cc },
        o,
    )
}

fn exp_quad_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (k, a) = (geti(p, "k"), get(p, "a"));
    let cc = (2 * k - 1) as f64;
    let mut sum = c(0.5, 0.0);
    for n in 1..k {
        sum += Complex64::from_polar(sign_pow(n), -a * (n * n) as f64 / (cc * cc));
    }
    Ok(Complex64::from_polar(sign_pow(k + 1) / cc, a / 4.0) * sum)
}

fn gauss_cos_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let a = get(p, "a");
    osc(|v| (-a * v * v).exp() * (a * v).cos() / (PI * v).cosh(), 0.0, 0.0, PI, o)
}

fn gauss_cos_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    Ok(re((-get(p, "a") / 4.0).exp() / 2.0))
}

/// Pole data of the cosh-pair kernel `cosh(πcv)/(cosh 2πb + cosh 2πcv)` with
/// `c = 2k-1`, for n = 1..2k-1: `(T_n, A_n, B_n, X_n)`.
fn pair_terms(k: i64, b: f64, s: f64, a: f64) -> Vec<(f64, f64, f64, f64)> {
    let cc = (2 * k - 1) as f64;
    let kf = k as f64;
    (1..2 * k)
        .map(|n| {
            let nf = n as f64;
            let t = -(2.0 * b * (kf - nf) / (b * b - nf * nf + 0.25 + 2.0 * kf * nf - kf)).atan();
            let aa = a * (4.0 * b * b - 4.0 * nf * nf + 1.0 + 8.0 * kf * nf - 4.0 * kf) / (4.0 * cc * cc);
            let bb = (((2.0 * nf - 1.0).powi(2) + 4.0 * b * b)
                * (4.0 * b * b - 16.0 * kf * nf + 4.0 * nf * nf - 8.0 * kf + 1.0 + 16.0 * kf * kf + 4.0 * nf))
                .powf(s / 2.0);
            let x = 2.0 * a * b * (kf - nf) / (cc * cc);
            (t, aa, bb, x)
        })
        .collect()
}

fn pair_den(b: f64, cc: f64, v: f64) -> f64 {
    // cosh(πcv)/(cosh 2πb + cosh 2πcv), stable for large |v|.
    let e = (-PI * cc * v.abs()).exp();
    e * (1.0 + e * e) / (1.0 + 2.0 * (2.0 * PI * b).cosh() * e * e + e.powi(4))
}

fn kbsa(p: &Params) -> (i64, f64, f64, f64, f64) {
    let k = geti(p, "k");
    (k, (2 * k - 1) as f64, get(p, "b"), p.get("s").copied().unwrap_or(0.0), get(p, "a"))
}

fn c7_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (_, cc, b, s, a) = kbsa(p);
    osc_full(
        |v| {
            pair_den(b, cc, v) * cut_pow(v.abs(), s) * (-a * v).exp() * (s * (1.0 / v).atan() + a * v * v).sin()
        },
        a,
        a,
        PI * cc,
        o,
    )
}

fn c7_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (k, cc, b, s, a) = kbsa(p);
    let sum: f64 = pair_terms(k, b, s, a)
        .iter()
        .enumerate()
        .map(|(i, &(t, aa, bb, x))| {
            bb * sign_pow(i as i64 + 1) * ((s * t - aa).sin() * (-x).exp() - (s * t + aa).sin() * x.exp())
        })
        .sum();
    Ok(re(sum / ((PI * b).cosh() * cc.powf(2.0 * s + 1.0) * 2f64.powf(2.0 * s + 2.0))))
}

fn c7a_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (_, cc, b, s, a) = kbsa(p);
    osc_full(
        |v| {
            pair_den(b, cc, v) * cut_pow(v.abs(), s) * (-a * v).exp() * (s * (1.0 / v).atan() + a * v * v).cos()
        },
        a,
        a,
        PI * cc,
        o,
    )
}

fn c7a_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (k, cc, b, s, a) = kbsa(p);
    let sum: f64 = pair_terms(k, b, s, a)
        .iter()
        .enumerate()
        .map(|(i, &(t, aa, bb, x))| {
            bb * sign_pow(i as i64 + 1) * ((s * t).cos() * aa.cos() * x.cosh() - (s * t).sin() * aa.sin() * x.sinh())
        })
        .sum();
    Ok(re(-sum / (2f64.powf(2.0 * s + 1.0) * cc.powf(2.0 * s + 1.0) * (PI * b).cosh())))
}

fn c7_s0_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (_, cc, b, _, a) = kbsa(p);
    osc(|v| pair_den(b, cc, v) * (a * v * v).sin() * (a * v).cosh(), a, a, PI * cc, o)
}

fn c7_s0_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (k, cc, b, _, a) = kbsa(p);
    let sum: f64 =
        pair_terms(k, b, 0.0, a).iter().enumerate().map(|(i, &(_, aa, _, x))| sign_pow(i as i64 + 1) * aa.sin() * x.cosh()).sum();
    Ok(re(-sum / (4.0 * cc * (PI * b).cosh())))
}

fn c7a2_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (_, cc, b, _, a) = kbsa(p);
    osc(|v| pair_den(b, cc, v) * (a * v * v).cos() * (a * v).cosh(), a, a, PI * cc, o)
}

fn c7a2_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (k, cc, b, _, a) = kbsa(p);
    let sum: f64 =
        pair_terms(k, b, 0.0, a).iter().enumerate().map(|(i, &(_, aa, _, x))| sign_pow(i as i64 + 1) * aa.cos() * x.cosh()).sum();
    Ok(re(-sum / (4.0 * cc * (PI * b).cosh())))
}

fn c7_s1k1_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (b, a) = (get(p, "b"), get(p, "a"));
    osc(
        |v| pair_den(b, 1.0, v) * v * (v * (a * v).cosh() * (a * v * v).sin() - (a * v).sinh() * (a * v * v).cos()),
        a,
        a,
        PI,
        o,
    )
}

fn c7_s1k1_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (b, a) = (get(p, "b"), get(p, "a"));
    let m = 1.0 + 4.0 * b * b;
    Ok(re(m * (a * m / 4.0).sin() / (16.0 * (PI * b).cosh())))
}

fn c7_a0_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (k, b) = (geti(p, "k"), get(p, "b"));
    let cc = (2 * k - 1) as f64;
    osc(|v| pair_den(b, cc, v) * v * v * (v * v - 1.0), 0.0, 0.0, PI * cc, o)
}

fn c7_a0_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (k, b) = (geti(p, "k"), get(p, "b"));
    let (cc, kf) = ((2 * k - 1) as f64, k as f64);
    let m = 1.0 + 4.0 * b * b;
    Ok(re(m * (4.0 * b * b + 1.0 - 16.0 * kf * kf + 16.0 * kf) / (64.0 * cc.powi(5) * (PI * b).cosh())))
}

pub(super) fn entries() -> Vec<CatalogEntry> {
    let e = |id, label, params: Vec<ParamSpec>, guard: Option<super::Guard>, lhs, rhs| CatalogEntry {
        id,
        label,
        params,
        tolerance: ToleranceClass::Oscillatory,
        guard,
        note: None,
        recipe: Recipe::Direct { lhs, rhs },
    };
    let k = ParamSpec::int("k", 1.0, 3.0, 2.0);
    let s = ParamSpec::closed("s", -0.5, 1.5, 0.4);
    let s_pos = ParamSpec::closed("s", 0.0, 1.5, 0.4).open_lo();
    let a = ParamSpec::closed("a", 0.0, 16.0, 1.0);
    let b = ParamSpec::closed("b", 0.0, 1.5, 0.3);
    let sg = Some(sinh_guard as super::Guard);
    let cg = Some(cosh_guard as super::Guard);
    vec![
        e("ZS-SIN", "cut power with sin(av²) against 1/sinh(2kπv)", vec![k, s, a], sg, zs_sin_lhs, zs_sin_rhs),
        e("ZS-COS", "cut power with cos(av²) against 1/sinh(2kπv)", vec![k, s_pos, a], sg, zs_cos_lhs, zs_cos_rhs),
        e("ZS-SIN-O1", "a → 0 form of the sine case, shifted power", vec![k, s], None, zs_sin_o1_lhs, zs_sin_o1_rhs),
        e("ZS-COS-A0", "a → 0 form of the cosine case", vec![k, s_pos], None, zs_cos_a0_lhs, zs_cos_a0_rhs),
        e(
            "FRESNEL-SINH",
            "cos(av²) sinh(2av)/sinh(kπv)",
            vec![k, ParamSpec::closed("a", 0.0, 4.0, 1.0)],
            Some(half_sinh_guard),
            fresnel_lhs,
            fresnel_rhs,
        ),
        e("ZS-SIN-COSH", "cut power with sin(av²) against 1/cosh((2k-1)πv)", vec![k, s, a], cg, zs_sin_cosh_lhs, zs_sin_cosh_rhs),
        e("ZS-COS-COSH", "cut power with cos(av²) against 1/cosh((2k-1)πv)", vec![k, s, a], cg, zs_cos_cosh_lhs, zs_cos_cosh_rhs),
        e("EXP-QUAD", "e^(iav²) cosh(av)/cosh((2k-1)πv), complex valued", vec![k, a], cg, exp_quad_lhs, exp_quad_rhs),
        CatalogEntry {
            tolerance: ToleranceClass::Tight,
            ..e(
                "GAUSS-COS",
                "e^(-av²) cos(av)/cosh(πv)",
                vec![ParamSpec::closed("a", 0.0, 10.0, 1.0)],
                None,
                gauss_cos_lhs,
                gauss_cos_rhs,
            )
        },
        e("C7", "cosh-pair kernel, sine of cut phase plus chirp, full line", vec![k, b, s, a], cg, c7_lhs, c7_rhs),
        e("C7A", "cosh-pair kernel, cosine of cut phase plus chirp, full line", vec![k, b, s, a], cg, c7a_lhs, c7a_rhs),
        e("C7-S0", "cosh-pair kernel, s = 0 sine form", vec![k, b, a], cg, c7_s0_lhs, c7_s0_rhs),
        e("C7A2", "cosh-pair kernel, s = 0 cosine form", vec![k, b, a], cg, c7a2_lhs, c7a2_rhs),
        e(
            "C7-S1K1",
            "cosh-pair kernel, s = 1 and k = 1",
            vec![b, ParamSpec::closed("a", 0.0, 2.5, 0.5)],
            Some(|p: &Params| cap_a(p, PI)),
            c7_s1k1_lhs,
            c7_s1k1_rhs,
        ),
        e("C7-A0", "cosh-pair kernel, a = 0 polynomial moment", vec![k, b], None, c7_a0_lhs, c7_a0_rhs),
    ]
}
