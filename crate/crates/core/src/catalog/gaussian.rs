//! Gaussian-weighted identities from the theorems with `F(z) = e^{-bz}`, and
//! the Gamma-function contour and series.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{floor_int, ln_gamma, gamma_real, sign_pow, ComplexValue};
use crate::quadrature::{
    integrate_half_line_auto, integrate_vertical_line, sum_alternating, QuadratureOptions, QuadratureResult,
};
use crate::theorems::{gamma_series_closed_form, gamma_series_transform};

use super::{get, geti, re, real, real_series, violation, CatalogEntry, ParamSpec, Params, Recipe, ToleranceClass};

fn half<F: Fn(f64) -> f64>(f: F, o: &QuadratureOptions) -> Result<QuadratureResult> {
    integrate_half_line_auto(real(f), o)
}

fn bsr(p: &Params) -> (f64, f64, f64) {
    (get(p, "b"), get(p, "s"), get(p, "r"))
}

fn exp_s_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (b, s, r) = bsr(p);
    let (ch, sh) = ((PI * r).cosh(), (PI * r).sinh());
    half(
        |v| {
            let ph = b * v - s * (1.0 / v).atan();
            let cw = (2.0 * PI * r * v).cos();
            (-b * v * v).exp() * v.powf(s) * (v * v + 1.0).powf(s / 2.0)
                * (ph.cos() * cw * sh + ph.sin() * (2.0 * PI * r * v).sin() * ch)
                / (ch * ch - cw * cw)
        },
        o,
    )
}

fn exp_s_rhs(p: &Params, o: &QuadratureOptions) -> Result<ComplexValue> {
    let (b, s, r) = bsr(p);
    let g = (-b / 4.0).exp();
    let sum = real_series(
        |n| {
            let n2 = (n * n) as f64;
            sign_pow(n) * (n2 + r * r).powf(s) * (-b * n2 / (4.0 * r * r)).exp()
        },
        1,
        o,
    )?;
    Ok(re(4f64.powf(-s - 1.0) * g / r + g / (2.0 * r).powf(2.0 * s + 1.0) * sum))
}

fn exp_s0_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (b, r) = (get(p, "b"), get(p, "r"));
    let (ch, sh) = ((PI * r).cosh(), (PI * r).sinh());
    half(
        |v| {
            let cw = (2.0 * PI * r * v).cos();
            (-b * v * v).exp() * (sh * cw * (b * v).cos() + ch * (2.0 * PI * r * v).sin() * (b * v).sin()) / (cw * cw - ch * ch)
        },
        o,
    )
}

fn exp_s0_rhs(p: &Params, o: &QuadratureOptions) -> Result<ComplexValue> {
    let (b, r) = (get(p, "b"), get(p, "r"));
    let g = (-b / 4.0).exp();
    let sum = real_series(|n| sign_pow(n) * (-b * (n * n) as f64 / (4.0 * r * r)).exp(), 1, o)?;
    Ok(re(-g / (4.0 * r) - g / (2.0 * r) * sum))
}

fn exp_r0_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let b = get(p, "b");
    half(|v| (-b * v * v).exp() * ((b * v).cos() + 2.0 * v * (b * v).sin()) / (4.0 * v * v + 1.0), o)
}

fn exp_r0_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    Ok(re(PI / 4.0 * (-get(p, "b") / 4.0).exp()))
}

fn exp_im_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (b, q) = (get(p, "b"), get(p, "q"));
    let (sq, cq) = ((PI * q).sin(), (PI * q).cos());
    half(
        |v| {
            // Numerator and sinh²(2πqv) + sin²(πq) both divided by cosh²(2πqv).
            let u = 2.0 * PI * q * v;
            let (sech, tanh) = (1.0 / u.cosh(), u.tanh());
            (-b * v * v).exp() * sech * (tanh * cq * (b * v).sin() + sq * (b * v).cos())
                / (tanh * tanh + sq * sq * sech * sech)
        },
        o,
    )
}

fn exp_im_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (b, q) = (get(p, "b"), get(p, "q"));
    let sum: f64 =
        (1..=floor_int(q)?).map(|n| sign_pow(n) * (b * ((n * n) as f64 - q * q) / (4.0 * q * q)).exp()).sum();
    Ok(re(((-b / 4.0).exp() + 2.0 * sum) / (4.0 * q)))
}

fn sjb(p: &Params) -> (f64, i64, f64) {
    (get(p, "s"), geti(p, "j"), p.get("b").copied().unwrap_or(0.0))
}

fn exp_sinh_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (s, j, b) = sjb(p);
    half(
        |v| {
            let t = s * (1.0 / v).atan();
            v.powf(s) * (v * v + 1.0).powf(s / 2.0) * (-b * v * v).exp() * (t.sin() * (b * v).cos() - t.cos() * (b * v).sin())
                / (2.0 * PI * j as f64 * v).sinh()
        },
        o,
    )
}

/// Shared right-hand side; `b = 0` gives the limit case.
fn exp_sinh_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (s, j, b) = sjb(p);
    let jf = j as f64;
    let sum: f64 = (1..=j)
        .map(|n| {
            let m = (j * j - n * n) as f64;
            sign_pow(n) * m.powf(s) * (-b * m / (4.0 * jf * jf)).exp()
        })
        .sum();
    Ok(re(sign_pow(j + 1) * 4f64.powf(-1.0 - s) * ((-b / 4.0).exp() + 2.0 * jf.powf(-2.0 * s) * sum) / jf))
}

fn exp_b0_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (s, j, _) = sjb(p);
    half(
        |v| v.powf(s) * (v * v + 1.0).powf(s / 2.0) * (s * (1.0 / v).atan()).sin() / (2.0 * PI * j as f64 * v).sinh(),
        o,
    )
}

fn contour_guard(p: &Params) -> Result<()> {
    let (alpha, cc) = (get(p, "alpha"), get(p, "c"));
    let reach = ((1.0 + 4.0 * alpha).sqrt() - 1.0) / 2.0;
    if reach <= cc.abs() + 0.05 {
        return Err(violation("c", cc, format!("|c| < {:.4} so the line passes between the poles", reach - 0.05)));
    }
    Ok(())
}

fn contour_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (alpha, beta, cc) = (get(p, "alpha"), get(p, "beta"), get(p, "c"));
    integrate_vertical_line(
        |t| {
            let w = t * (Complex64::new(1.0, 0.0) - t);
            let ratio = (ln_gamma(w + alpha)? - ln_gamma(w + beta)?).exp();
            Ok(ratio / (t * PI).cos())
        },
        cc,
        o,
    )
}

fn contour_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (alpha, beta) = (get(p, "alpha"), get(p, "beta"));
    Ok(re(gamma_real(alpha + 0.25)? / (2.0 * PI * gamma_real(beta + 0.25)?)))
}

fn series_guard(p: &Params) -> Result<()> {
    let (a, b) = (get(p, "a"), get(p, "b"));
    // Below this gap both series converge too slowly to sum within budget.
    if b < a + 0.15 {
        return Err(violation("b", b, format!("b >= a + 0.15 = {}", a + 0.15)));
    }
    Ok(())
}

fn series_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    Ok(gamma_series_transform(get(p, "a"), get(p, "b"), o)?.0)
}

fn series_rhs(p: &Params, o: &QuadratureOptions) -> Result<ComplexValue> {
    Ok(gamma_series_transform(get(p, "a"), get(p, "b"), o)?.1.value)
}

fn finite_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (k, a) = (geti(p, "k"), get(p, "a"));
    sum_alternating(
        |n| {
            let n2 = (n * n) as f64;
            let prod: f64 = (0..k).map(|j| a + j as f64 - n2).product();
            if prod == 0.0 {
                return Err(Error::Resonance(format!("a + j = n² at n = {n}")));
            }
            Ok(re(sign_pow(n) / prod))
        },
        0,
        o,
    )
}

fn finite_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    Ok(re(gamma_series_closed_form(get(p, "a"), geti(p, "k") as u32)?))
}

pub(super) fn entries() -> Vec<CatalogEntry> {
    let e = |id, label, params: Vec<ParamSpec>, lhs, rhs| CatalogEntry {
        id,
        label,
        params,
        tolerance: ToleranceClass::Standard,
        guard: None,
        note: None,
        recipe: Recipe::Direct { lhs, rhs },
    };
    let b = ParamSpec::closed("b", 0.3, 3.0, 1.0);
    let r = ParamSpec::closed("r", 0.3, 2.0, 0.7);
    let s = ParamSpec::closed("s", 0.0, 1.5, 0.5);
    let sj = ParamSpec::closed("s", 0.2, 2.0, 0.5);
    let j = ParamSpec::int("j", 1.0, 3.0, 2.0);
    vec![
        e("EXP-S", "e^(-bz) with a cut power against the q = 0 kernel", vec![b, s, r], exp_s_lhs, exp_s_rhs),
        e("EXP-S0", "s = 0 case, Gaussian theta-type series", vec![b, r], exp_s0_lhs, exp_s0_rhs),
        e("EXP-R0", "r → 0 limit, closed form (π/4)e^(-b/4)", vec![ParamSpec::closed("b", 0.1, 5.0, 1.0)], exp_r0_lhs, exp_r0_rhs),
        e(
            "EXP-IM",
            "e^(-bz) against the real-p kernel, finite Gaussian sum",
            vec![b, ParamSpec::closed("q", 0.2, 4.0, 2.0).open_lo()],
            exp_im_lhs,
            exp_im_rhs,
        ),
        e(
            "EXP-SINH",
            "e^(-bz) with a cut power against 1/sinh(2jπv)",
            vec![sj, j, ParamSpec::closed("b", 0.0, 3.0, 1.0)],
            exp_sinh_lhs,
            exp_sinh_rhs,
        ),
        e("EXP-B0", "b → 0 limit against 1/sinh(2jπv)", vec![sj, j], exp_b0_lhs, exp_sinh_rhs),
        CatalogEntry {
            guard: Some(contour_guard),
            ..e(
                "GAMMA-CONTOUR",
                "vertical-line integral of Γ(α+t(1-t))/Γ(β+t(1-t)) against 1/cos(πt)",
                vec![
                    ParamSpec::closed("alpha", 0.3, 4.0, 1.0),
                    ParamSpec::closed("beta", 0.3, 5.0, 2.0),
                    ParamSpec::closed("c", -0.5, 0.5, -0.25).open_lo().open_hi(),
                ],
                contour_lhs,
                contour_rhs,
            )
        },
        CatalogEntry {
            guard: Some(series_guard),
            ..e(
                "GAMMA-SERIES",
                "Σ (-1)^n Γ(a-n²)/Γ(b-n²) and its transformed series",
                vec![ParamSpec::closed("a", 0.5, 3.0, 0.8).open_lo().no_integers(), ParamSpec::closed("b", 0.65, 6.0, 2.8)],
                series_lhs,
                series_rhs,
            )
        },
        CatalogEntry {
            tolerance: ToleranceClass::Tight,
            ..e(
                "GAMMA-FINITE",
                "Σ (-1)^n / Π_j (a+j-n²), closed form in csc(π√(a+n))",
                vec![ParamSpec::int("k", 1.0, 3.0, 2.0), ParamSpec::closed("a", 0.05, 0.95, 0.3)],
                finite_lhs,
                finite_rhs,
            )
        },
    ]
}
