//! Square-wave and polynomial-moment identities from the real-p sinh kernel,
//! the zeta-like family, and the cosine-product case.

use std::f64::consts::PI;

use crate::error::Result;
use crate::numerics::{floor_int, sign_pow, zeta_real, ComplexValue};
use crate::quadrature::{integrate_half_line_auto, QuadratureOptions, QuadratureResult};

use super::{get, geti, re, real, CatalogEntry, ParamSpec, Params, Recipe, ToleranceClass};

/// `sech u`, `tanh u` and `cos²(πp)·sech²u - 1`, the squared-sinh denominator
/// `cos²(πp) - cosh²u` divided by `cosh²u` (finite for any u).
fn sq_den(p: f64, u: f64) -> (f64, f64, f64) {
    let sech = 1.0 / u.cosh();
    let cp = (PI * p).cos();
    (sech, u.tanh(), cp * cp * sech * sech - 1.0)
}

fn half<F: Fn(f64) -> f64>(f: F, opts: &QuadratureOptions) -> Result<QuadratureResult> {
    integrate_half_line_auto(real(f), opts)
}

/// `Σ_{n=⌊-p⌋}^{⌊p⌋-1} (-1)^n ((n+1)² - p²)^e` with strict floors.
fn moment_sum(p: f64, e: i32) -> Result<f64> {
    let mut acc = 0.0;
    for n in floor_int(-p)?..floor_int(p)? {
        let m = (n + 1) as f64;
        acc += sign_pow(n) * (m * m - p * p).powi(e);
    }
    Ok(acc)
}

fn x1_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let pp = get(p, "p");
    let r = half(
        |t| {
            // cosh(πpt)/(cos(2πp) - cosh(2πpt)) in powers of e^{-πpt}.
            let e = (-PI * pp * t).exp();
            let e2 = e * e;
            e * (1.0 + e2) / (2.0 * (2.0 * PI * pp).cos() * e2 - 1.0 - e2 * e2)
        },
        o,
    )?;
    Ok(r.scaled(re(4.0 * pp * (PI * pp).sin())))
}

fn x1_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let pp = get(p, "p");
    Ok(re(0.5 * (sign_pow(floor_int(-pp)?) - sign_pow(floor_int(pp)?))))
}

fn x2a_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (j, pp) = (geti(p, "j") as i32, get(p, "p"));
    let (sp, cp) = ((PI * pp).sin(), (PI * pp).cos());
    half(
        |t| {
            let (sech, tanh, den) = sq_den(pp, 2.0 * PI * pp * t);
            let th = 2.0 * j as f64 * t.atan();
            let poly = t.powi(2 * j) * (t * t + 1.0).powi(j);
            poly * sech * (th.sin() * tanh * cp + th.cos() * sp) / den
        },
        o,
    )
}

fn x2a_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (j, pp) = (geti(p, "j") as i32, get(p, "p"));
    Ok(re(sign_pow(j as i64) / (2.0 * (2.0 * pp).powi(4 * j + 1)) * moment_sum(pp, 2 * j)?))
}

fn x2b_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (j, pp) = (geti(p, "j") as i32, get(p, "p"));
    let k = 2 * j - 1;
    let (sp, cp) = ((PI * pp).sin(), (PI * pp).cos());
    half(
        |t| {
            let (sech, tanh, den) = sq_den(pp, 2.0 * PI * pp * t);
            let th = k as f64 * t.atan();
            let poly = t.powi(k) * (t * t + 1.0).powf(k as f64 / 2.0);
            poly * sech * (th.cos() * tanh * cp - th.sin() * sp) / den
        },
        o,
    )
}

fn x2b_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (j, pp) = (geti(p, "j") as i32, get(p, "p"));
    let k = 2 * j - 1;
    Ok(re(sign_pow(j as i64 + 1) / (2.0 * (2.0 * pp).powi(2 * k + 1)) * moment_sum(pp, k)?))
}

/// `Σ_{n=-k}^{k-2} (-1)^n ((2n+1+2k)(2k-2n-3))^e`.
fn odd_sum(k: i64, e: i32) -> f64 {
    (-k..=k - 2).map(|n| sign_pow(n) * (((2 * n + 1 + 2 * k) * (2 * k - 2 * n - 3)) as f64).powi(e)).sum()
}

/// `Σ_{n=-k}^{k-1} (-1)^n (k² - (n+1)²)^e`.
fn even_sum(k: i64, e: i32) -> f64 {
    (-k..=k - 1).map(|n| sign_pow(n) * ((k * k - (n + 1) * (n + 1)) as f64).powi(e)).sum()
}

fn x2a1_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (j, k) = (geti(p, "j") as i32, geti(p, "k"));
    half(
        |t| {
            let th = 2.0 * j as f64 * t.atan();
            t.powi(2 * j) * (t * t + 1.0).powi(j) * th.cos() / (PI * (2 * k - 1) as f64 * t).cosh()
        },
        o,
    )
}

fn x2a1_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (j, k) = (geti(p, "j") as i32, geti(p, "k"));
    Ok(re(sign_pow(j as i64 + k) * odd_sum(k, 2 * j) / ((4 * k - 2) as f64).powi(4 * j + 1)))
}

fn x2a2_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (j, k) = (geti(p, "j") as i32, geti(p, "k"));
    half(
        |t| {
            let th = 2.0 * j as f64 * t.atan();
            t.powi(2 * j) * (t * t + 1.0).powi(j) * th.sin() / (2.0 * PI * k as f64 * t).sinh()
        },
        o,
    )
}

fn x2a2_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (j, k) = (geti(p, "j") as i32, geti(p, "k"));
    Ok(re(sign_pow(j as i64 + k + 1) * even_sum(k, 2 * j) / (2.0 * ((2 * k) as f64).powi(4 * j + 1))))
}

fn x2b1_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (j, k) = (geti(p, "j") as i32, geti(p, "k"));
    half(
        |t| {
            let th = (2 * j - 1) as f64 * t.atan();
            t.powi(2 * j - 1) * (t * t + 1.0).powf(j as f64 - 0.5) * th.sin() / (PI * (2 * k - 1) as f64 * t).cosh()
        },
        o,
    )
}

fn x2b1_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (j, k) = (geti(p, "j") as i32, geti(p, "k"));
    Ok(re(sign_pow(j as i64 + k + 1) * odd_sum(k, 2 * j - 1) / ((4 * k - 2) as f64).powi(4 * j - 1)))
}

fn x2b2_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (j, k) = (geti(p, "j") as i32, geti(p, "k"));
    half(
        |t| {
            let th = (2 * j - 1) as f64 * t.atan();
            t.powi(2 * j - 1) * (t * t + 1.0).powf(j as f64 - 0.5) * th.cos() / (2.0 * PI * k as f64 * t).sinh()
        },
        o,
    )
}

fn x2b2_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (j, k) = (geti(p, "j") as i32, geti(p, "k"));
    Ok(re(sign_pow(j as i64 + k + 1) * even_sum(k, 2 * j - 1) / (2.0 * ((2 * k) as f64).powi(4 * j - 1))))
}

fn zeta_like_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (s, k) = (get(p, "s"), geti(p, "k"));
    half(
        |t| t.powf(-s) * (t * t + 1.0).powf(-s / 2.0) * (s * (1.0 / t).atan()).cos() / (PI * (2 * k - 1) as f64 * t).cosh(),
        o,
    )
}

fn zeta_like_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (s, k) = (get(p, "s"), geti(p, "k"));
    let cc = (2 * k - 1) as f64;
    let sum: f64 = (1..k).map(|n| sign_pow(n) * (1.0 / (cc * cc - 4.0 * (n * n) as f64)).powf(s)).sum();
    let sg = sign_pow(k + 1);
    Ok(re(2f64.powf(2.0 * s) * sg * cc.powf(2.0 * s - 1.0) * sum + 2f64.powf(2.0 * s - 1.0) * sg / cc))
}

fn eta_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let s = get(p, "s");
    let r = half(|t| (s * t.atan()).cos() * (t * t + 1.0).powf(-s / 2.0) / (PI * t / 2.0).cosh(), o)?;
    Ok(r.scaled(re(2f64.powf(s - 1.0) / (1.0 - 2f64.powf(1.0 - s)))))
}

fn eta_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    Ok(re(zeta_real(get(p, "s"))?))
}

fn cosprod_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (a, q) = (get(p, "a"), get(p, "q"));
    let (sq, cq) = ((PI * q).sin(), (PI * q).cos());
    half(
        |v| {
            // Both integrals over cosh²(2πqv) - cos²(πq), divided through by cosh².
            let (sech, tanh, den) = sq_den(q, 2.0 * PI * q * v);
            let den = -den;
            let ca = (a * v).cos();
            (2.0 * sq * a.cosh() * ca * ca * sech + cq * a.sinh() * (2.0 * a * v).sin() * tanh * sech) / den
        },
        o,
    )
}

fn cosprod_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (a, q) = (get(p, "a"), get(p, "q"));
    let fq = floor_int(q)?;
    let f = fq as f64;
    let num = 2.0 * ((a * f + a) / q).cosh()
        + 2.0 * (a * f / q).cosh()
        + ((a * q - a) / q).cosh()
        + ((a * q + a) / q).cosh()
        + 2.0 * a.cosh();
    Ok(re(num / (8.0 * q * sign_pow(fq) * ((a / q).cosh() + 1.0))))
}

fn cosprod_cosh_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let a = get(p, "a");
    half(|t| ((a * t).cos() + 1.0) / t.cosh(), o)
}

fn cosprod_cosh_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let a = get(p, "a");
    Ok(re(PI * ((PI * a).cosh() + 1.0) / (3.0 * (PI * a / 2.0).cosh() + (3.0 * PI * a / 2.0).cosh()) + PI / 2.0))
}

fn sin_sinh_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let a = get(p, "a");
    half(|t| (a * t).sin() / t.sinh(), o)
}

fn sin_sinh_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let a = get(p, "a");
    Ok(re(PI / 2.0 * (PI * a).sinh() / ((PI * a).cosh() + 1.0)))
}

pub(super) fn entries() -> Vec<CatalogEntry> {
    let e = |id, label, params: Vec<ParamSpec>, tolerance, lhs, rhs| CatalogEntry {
        id,
        label,
        params,
        tolerance,
        guard: None,
        note: None,
        recipe: Recipe::Direct { lhs, rhs },
    };
    let j = ParamSpec::int("j", 1.0, 3.0, 1.0);
    let k = ParamSpec::int("k", 1.0, 4.0, 2.0);
    let p = ParamSpec::closed("p", 0.2, 3.0, 0.7).no_integers();
    use ToleranceClass::{Standard, Tight};
    vec![
        e(
            "X1",
            "square wave of unit amplitude and period two in p",
            vec![ParamSpec::closed("p", 0.0, 5.0, 0.7).open_lo().no_integers()],
            Standard,
            x1_lhs,
            x1_rhs,
        ),
        e("X2A", "even moments against the squared-sinh denominator", vec![j, p], Standard, x2a_lhs, x2a_rhs),
        CatalogEntry {
            note: Some("sign prefactor (-1)^(j+1) for k = 2j-1; approximates a sawtooth in p"),
            ..e("X2B-ODD", "odd moments against the squared-sinh denominator", vec![j, p], Standard, x2b_lhs, x2b_rhs)
        },
        e("X2A1", "even moments against 1/cosh((2k-1)πt)", vec![j, k], Tight, x2a1_lhs, x2a1_rhs),
        e("X2A2", "even moments against 1/sinh(2kπt)", vec![j, k], Tight, x2a2_lhs, x2a2_rhs),
        e("X2B1", "odd moments against 1/cosh((2k-1)πt)", vec![j, k], Tight, x2b1_lhs, x2b1_rhs),
        e("X2B2", "odd moments against 1/sinh(2kπt)", vec![j, k], Tight, x2b2_lhs, x2b2_rhs),
        e(
            "ZETA-LIKE",
            "cut power t^(-s)(t²+1)^(-s/2) against 1/cosh((2k-1)πt)",
            vec![ParamSpec::closed("s", -1.5, 0.8, 0.3), ParamSpec::int("k", 1.0, 4.0, 2.0)],
            Standard,
            zeta_like_lhs,
            zeta_like_rhs,
        ),
        e(
            "ETA-REF",
            "integral representation of the Riemann zeta function",
            vec![ParamSpec::closed("s", 1.5, 8.0, 2.0)],
            Tight,
            eta_lhs,
            eta_rhs,
        ),
        e(
            "COSPROD",
            "cosine-product variation with the real-p kernel",
            vec![ParamSpec::closed("a", 0.0, 2.0, 0.5).open_lo(), ParamSpec::closed("q", 0.3, 3.0, 0.7).no_integers()],
            Standard,
            cosprod_lhs,
            cosprod_rhs,
        ),
        e(
            "COSPROD-COSH",
            "(cos(at)+1)/cosh(t) on the half line",
            vec![ParamSpec::closed("a", 0.0, 3.0, 0.3)],
            Tight,
            cosprod_cosh_lhs,
            cosprod_cosh_rhs,
        ),
        e(
            "SIN-SINH",
            "sin(at)/sinh(t) on the half line",
            vec![ParamSpec::closed("a", 0.0, 3.0, 0.3)],
            Tight,
            sin_sinh_lhs,
            sin_sinh_rhs,
        ),
    ]
}
