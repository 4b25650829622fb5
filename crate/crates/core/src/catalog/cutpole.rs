//! The q = 0 kernel against `(z - ib)^{-s}`, whose branch cut meets a pole of
//! the kernel, and the r → 0 and b → 0 limits of that family.

use std::f64::consts::{LN_2, PI};

use crate::error::Result;
use crate::numerics::{dilog, sign_pow, ComplexValue};
use crate::quadrature::{
    integrate_half_line_algebraic, integrate_panels, integrate_real_line_algebraic, QuadratureOptions,
    QuadratureResult,
};

use super::{get, re, real, real_series, CatalogEntry, ParamSpec, Params, Recipe, ToleranceClass};

/// Argument and modulus power of `a x(x+i) - ib` evaluated on the real line:
/// `θ = atan2(ax - b, ax²)` and `R = (a²x⁴ + (ax-b)²)^{s/2}`.
fn cut(a: f64, b: f64, s: f64, x: f64) -> (f64, f64) {
    let (u, v) = (a * x * x, a * x - b);
    (v.atan2(u), (u * u + v * v).powf(s / 2.0))
}

/// `∫_{-∞}^{∞} g` for g carrying the antiperiodic factor of the q = 0 kernel,
/// summed over half periods `1/(2r)` of `g(x) + g(-x)`.
fn over_half_periods<G: Fn(f64) -> f64>(g: G, r: f64, opts: &QuadratureOptions) -> Result<QuadratureResult> {
    let h = 0.5 / r;
    integrate_panels(real(|x| g(x) + g(-x)), |m| m as f64 * h, opts)
}

fn abs_r(p: &Params) -> (f64, f64, f64, f64) {
    (get(p, "a"), get(p, "b"), get(p, "s"), get(p, "r"))
}

/// `Σ_{n≥1} (-1)^n trig(s·atan(4br²/(a(r²+n²)))) / (a²(r²+n²)² + 16b²r⁴)^{s/2}`.
fn cut_series(a: f64, b: f64, s: f64, r: f64, trig: fn(f64) -> f64, opts: &QuadratureOptions) -> Result<f64> {
    let r2 = r * r;
    real_series(
        |n| {
            let m = r2 + (n * n) as f64;
            sign_pow(n) * trig(s * (4.0 * b * r2 / (a * m)).atan())
                / (a * a * m * m + 16.0 * b * b * r2 * r2).powf(s / 2.0)
        },
        1,
        opts,
    )
}

fn centre(a: f64, b: f64, s: f64) -> (f64, f64) {
    let ang = s * (4.0 * b / a).atan();
    let m = 2f64.powf(2.0 * s - 1.0) / (a * a + 16.0 * b * b).powf(s / 2.0);
    (ang, m)
}

fn re_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (a, b, s, r) = abs_r(p);
    let (ch, sh) = ((PI * r).cosh(), (PI * r).sinh());
    over_half_periods(
        |x| {
            let (th, rr) = cut(a, b, s, x);
            let d = (2.0 * PI * r).cosh() - (4.0 * PI * r * x).cos();
            2.0 * (ch * (s * th).cos() * (2.0 * PI * r * x).sin() - sh * (2.0 * PI * r * x).cos() * (s * th).sin()) / (rr * d)
        },
        r,
        o,
    )
}

fn re_rhs(p: &Params, o: &QuadratureOptions) -> Result<ComplexValue> {
    let (a, b, s, r) = abs_r(p);
    let (ang, m) = centre(a, b, s);
    Ok(re(4f64.powf(s) * r.powf(2.0 * s - 1.0) * cut_series(a, b, s, r, f64::sin, o)? + ang.sin() * m / r))
}

fn im_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (a, b, s, r) = abs_r(p);
    let (ch, sh) = ((PI * r).cosh(), (PI * r).sinh());
    over_half_periods(
        |x| {
            let (th, rr) = cut(a, b, s, x);
            let d = (2.0 * PI * r).cosh() - (4.0 * PI * r * x).cos();
            2.0 * (ch * (s * th).sin() * (2.0 * PI * r * x).sin() + sh * (2.0 * PI * r * x).cos() * (s * th).cos()) / (rr * d)
        },
        r,
        o,
    )
}

fn im_rhs(p: &Params, o: &QuadratureOptions) -> Result<ComplexValue> {
    let (a, b, s, r) = abs_r(p);
    let (ang, m) = centre(a, b, s);
    Ok(re(4f64.powf(s) * r.powf(2.0 * s - 1.0) * cut_series(a, b, s, r, f64::cos, o)? + ang.cos() * m / r))
}

fn abs0(p: &Params) -> (f64, f64, f64) {
    (get(p, "a"), get(p, "b"), get(p, "s"))
}

fn re_r0_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (a, b, s) = abs0(p);
    integrate_real_line_algebraic(
        real(|x| {
            let (th, rr) = cut(a, b, s, x);
            (2.0 * (s * th).cos() * x - (s * th).sin()) / (rr * (4.0 * x * x + 1.0))
        }),
        o,
    )
}

fn re_r0_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (a, b, s) = abs0(p);
    let (ang, m) = centre(a, b, s);
    Ok(re(PI * ang.sin() * m))
}

fn im_r0_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (a, b, s) = abs0(p);
    integrate_real_line_algebraic(
        real(|x| {
            let (th, rr) = cut(a, b, s, x);
            (2.0 * (s * th).sin() * x + (s * th).cos()) / (rr * (4.0 * x * x + 1.0))
        }),
        o,
    )
}

fn im_r0_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (a, b, s) = abs0(p);
    let (ang, m) = centre(a, b, s);
    Ok(re(PI * ang.cos() * m))
}

fn log_arctan_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (a, b) = (get(p, "a"), get(p, "b"));
    let r = integrate_real_line_algebraic(
        real(|x| {
            let (u, v) = (a * x * x, a * x - b);
            (x * v.atan2(u) - (u * u + v * v).ln() / 4.0) / (4.0 * x * x + 1.0)
        }),
        o,
    )?;
    Ok(r.scaled(re(2.0 / PI)))
}

fn log_arctan_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (a, b) = (get(p, "a"), get(p, "b"));
    Ok(re(LN_2 - (a * a + 16.0 * b * b).ln() / 4.0))
}

fn rational_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (a, b) = (get(p, "a"), get(p, "b"));
    integrate_real_line_algebraic(
        real(|x| {
            let (u, v) = (a * x * x, a * x - b);
            (3.0 * a * x - 2.0 * b) * x / ((u * u + v * v) * (4.0 * x * x + 1.0))
        }),
        o,
    )
}

fn rational_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (a, b) = (get(p, "a"), get(p, "b"));
    Ok(re(2.0 * a * PI / (a * a + 16.0 * b * b)))
}

fn log_dilog_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let a = get(p, "a");
    integrate_half_line_algebraic(
        real(|v| {
            let l = (a * a * (v * v + 1.0) * v * v).ln();
            l * (8.0 * v * (1.0 / v).atan() - l) / (4.0 * v * v + 1.0)
        }),
        o,
    )
}

fn log_dilog_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let l = (4.0 / get(p, "a")).ln();
    Ok(re(-PI.powi(3) / 12.0 - PI * (l * l + dilog(1.0 / 3.0)?)))
}

fn b0_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (s, r) = (get(p, "s"), get(p, "r"));
    let (ch, sh) = ((PI * r).cosh(), (PI * r).sinh());
    let h = 0.5 / r;
    integrate_panels(
        real(|v| {
            let t = s * (1.0 / v).atan();
            let w = v.powf(-s) * (v * v + 1.0).powf(-s / 2.0);
            let d = (4.0 * PI * r * v).cos() - (2.0 * PI * r).cosh();
            4.0 * w * (ch * t.sin() * (2.0 * PI * r * v).sin() + sh * (2.0 * PI * r * v).cos() * t.cos()) / d
        }),
        |m| m as f64 * h,
        o,
    )
}

fn b0_rhs(p: &Params, o: &QuadratureOptions) -> Result<ComplexValue> {
    let (s, r) = (get(p, "s"), get(p, "r"));
    let sum = real_series(|n| -sign_pow(n) * (r * r + (n * n) as f64).powf(-s), 1, o)?;
    Ok(re(4f64.powf(s) * r.powf(2.0 * s - 1.0) * sum - 2f64.powf(2.0 * s - 1.0) / r))
}

fn arm_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let s = get(p, "s");
    integrate_half_line_algebraic(
        real(|v| {
            let t = s * (1.0 / v).atan();
            (t.cos() + 2.0 * v * t.sin()) / (v.powf(s) * (v * v + 1.0).powf(s / 2.0) * (1.0 + 4.0 * v * v))
        }),
        o,
    )
}

fn arm_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    Ok(re(2f64.powf(2.0 * get(p, "s") - 2.0) * PI))
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
    let a = ParamSpec::closed("a", 0.5, 3.0, 1.0);
    let b = ParamSpec::closed("b", 0.2, 2.0, 0.5);
    let s = ParamSpec::closed("s", 0.4, 2.0, 0.6);
    let r = ParamSpec::closed("r", 0.3, 2.0, 0.8);
    let s0 = ParamSpec::closed("s", -0.3, 1.5, 0.6);
    vec![
        e("CUTPOLE-RE", "real part, (z - ib)^(-s) against the q = 0 kernel", vec![a, b, s, r], re_lhs, re_rhs),
        e("CUTPOLE-IM", "imaginary part, (z - ib)^(-s) against the q = 0 kernel", vec![a, b, s, r], im_lhs, im_rhs),
        e("CUTPOLE-RE-R0", "r → 0 limit of the real part", vec![a, b, s0], re_r0_lhs, re_r0_rhs),
        e("CUTPOLE-IM-R0", "r → 0 limit of the imaginary part", vec![a, b, s0], im_r0_lhs, im_r0_rhs),
        e("LOG-ARCTAN", "s-derivative at s = 0 of the r → 0 limit", vec![a, b], log_arctan_lhs, log_arctan_rhs),
        CatalogEntry {
            note: Some("right-hand side 2aπ/(a²+16b²)"),
            ..e("RATIONAL-S1", "s = 1 case of the r → 0 limit, rational integrand", vec![a, b], rational_lhs, rational_rhs)
        },
        e(
            "LOG-DILOG",
            "second s-derivative at b = 0, closed form with Li₂(1/3)",
            vec![ParamSpec::closed("a", 0.2, 4.0, 1.0)],
            log_dilog_lhs,
            log_dilog_rhs,
        ),
        e(
            "B0-LIMIT",
            "b → 0 limit, alternating power series on the right",
            vec![ParamSpec::closed("s", 0.55, 0.95, 0.75), r],
            b0_lhs,
            b0_rhs,
        ),
        CatalogEntry {
            note: Some("converges for -1/2 < s < 1; the window stops short of both ends, where decay or the endpoint power degenerates"),
            ..e("ARM1", "b → 0 and r → 0 limit", vec![ParamSpec::closed("s", -0.45, 0.95, 0.2)], arm_lhs, arm_rhs)
        },
    ]
}
