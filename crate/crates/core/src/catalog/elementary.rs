//! Real-line forms of the real-p theorem for a handful of elementary
//! integrands: Gaussian, products and sums of cosh, squares.
//!
//! All share the denominator `D = cos²(πp) - cosh²(2πpv)` and the finite
//! range `n = ⌊-p⌋ … ⌊p⌋-1` (strict floors).

use std::f64::consts::PI;

use crate::error::Result;
use crate::numerics::{floor_int, sign_pow, ComplexValue};
use crate::quadrature::{integrate_half_line_auto, QuadratureOptions, QuadratureResult};

use super::{get, re, real, violation, CatalogEntry, ParamSpec, Params, Recipe, ToleranceClass};

/// Past this the kernel has underflowed against any admissible growth.
const U_MAX: f64 = 600.0;

/// The pieces of an integrand over D, each divided by cosh²(2πpv):
/// `C/D = sech/den`, `S/D = tanh·sech/den`.
struct Kern {
    sp: f64,
    cp: f64,
    c_over_d: f64,
    s_over_d: f64,
}

fn integrate<F: Fn(f64, &Kern) -> f64>(p: f64, f: F, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (sp, cp) = ((PI * p).sin(), (PI * p).cos());
    integrate_half_line_auto(
        real(|v| {
            let u = 2.0 * PI * p * v;
            if u > U_MAX {
                return 0.0;
            }
            let sech = 1.0 / u.cosh();
            let den = cp * cp * sech * sech - 1.0;
            f(v, &Kern { sp, cp, c_over_d: sech / den, s_over_d: u.tanh() * sech / den })
        }),
        o,
    )
}

fn range(p: f64) -> Result<std::ops::Range<i64>> {
    Ok(floor_int(-p)?..floor_int(p)?)
}

/// `Σ_n (-1)^n term(n+1)` over the finite range.
fn alt(p: f64, term: impl Fn(f64) -> f64) -> Result<f64> {
    Ok(range(p)?.map(|n| sign_pow(n) * term((n + 1) as f64)).sum())
}

fn pb(p: &Params) -> (f64, f64) {
    (get(p, "p"), get(p, "b"))
}

fn growth_guard(p: &Params) -> Result<()> {
    let (pp, b) = pb(p);
    if b > 0.8 * PI * pp {
        return Err(violation("b", b, format!("b <= 0.8πp = {:.4}", 0.8 * PI * pp)));
    }
    Ok(())
}

fn elem1_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (pp, b) = pb(p);
    integrate(pp, |v, k| (-b * v * v).exp() * ((b * v).sin() * k.s_over_d * k.cp + (b * v).cos() * k.c_over_d * k.sp), o)
}

fn elem1_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (pp, b) = pb(p);
    Ok(re(alt(pp, |m| (b * (m * m - pp * pp) / (4.0 * pp * pp)).exp())? / (4.0 * pp)))
}

fn elem2_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (pp, b) = pb(p);
    integrate(
        pp,
        |v, k| {
            let ch = (b * v).cosh();
            -b.sin() * k.s_over_d * k.cp * (2.0 * b * v).sinh() + 2.0 * ch * ch * b.cos() * k.c_over_d * k.sp
        },
        o,
    )
}

fn elem2_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (pp, b) = pb(p);
    let s = alt(pp, |m| (b * (m - pp) / (2.0 * pp)).cos() * (b * (m + pp) / (2.0 * pp)).cos())?;
    Ok(re(s / (2.0 * pp)))
}

fn elem3_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (pp, b) = pb(p);
    integrate(
        pp,
        |v, k| {
            let sh = (b * v).sinh();
            2.0 * b.cos() * k.c_over_d * k.sp * sh * sh - b.sin() * k.s_over_d * k.cp * (2.0 * b * v).sinh()
        },
        o,
    )
}

fn elem3_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (pp, b) = pb(p);
    let s = alt(pp, |m| (b * (m - pp) / (2.0 * pp)).sin() * (b * (m + pp) / (2.0 * pp)).sin())?;
    Ok(re(-s / (2.0 * pp)))
}

fn elem4_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (pp, b) = pb(p);
    integrate(
        pp,
        |v, k| {
            let ch = (b * v).cosh();
            // sinh(2bv)/cosh(bv) = 2 sinh(bv)
            -b.sin() * k.s_over_d * k.cp * 2.0 * (b * v).sinh() + 2.0 * ch * (1.0 + b.cos()) * k.c_over_d * k.sp
        },
        o,
    )
}

fn elem4_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (pp, b) = pb(p);
    Ok(re((b / 2.0).cos() * alt(pp, |m| (b * m / (2.0 * pp)).cos())? / pp))
}

fn elem5_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (pp, b) = pb(p);
    integrate(
        pp,
        |v, k| k.cp * (b.cos() - 1.0) * k.s_over_d * (b * v).sinh() + b.sin() * (b * v).cosh() * k.c_over_d * k.sp,
        o,
    )
}

fn elem5_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (pp, b) = pb(p);
    Ok(re((b / 2.0).sin() * alt(pp, |m| (b * m / (2.0 * pp)).cos())? / (2.0 * pp)))
}

fn elem6_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let (pp, b) = pb(p);
    integrate(
        pp,
        |v, k| {
            let cb = b.cos();
            cb * b.sin() * k.s_over_d * k.cp * (2.0 * b * v).sinh() - k.c_over_d * k.sp * (cb * cb * (2.0 * b * v).cosh() - 1.0)
        },
        o,
    )
}

fn elem6_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let (pp, b) = pb(p);
    let s = alt(pp, |m| (b * (m - pp) / (2.0 * pp)).sin().powi(2) + (b * (m + pp) / (2.0 * pp)).sin().powi(2))?;
    Ok(re(s / (4.0 * pp)))
}

fn elem7_lhs(p: &Params, o: &QuadratureOptions) -> Result<QuadratureResult> {
    let pp = get(p, "p");
    integrate(pp, |_, k| k.sp * k.c_over_d, o)
}

fn elem7_rhs(p: &Params, _: &QuadratureOptions) -> Result<ComplexValue> {
    let pp = get(p, "p");
    Ok(re(-(sign_pow(floor_int(pp)?) - sign_pow(floor_int(-pp)?)) / (8.0 * pp)))
}

pub(super) fn entries() -> Vec<CatalogEntry> {
    let pspec = ParamSpec::closed("p", 0.3, 3.0, 1.6).no_integers();
    let b = ParamSpec::closed("b", 0.0, 1.5, 0.5);
    let e = |id, label, guarded: bool, lhs, rhs| CatalogEntry {
        id,
        label,
        params: vec![pspec, b],
        tolerance: ToleranceClass::Standard,
        guard: if guarded { Some(growth_guard as super::Guard) } else { None },
        note: None,
        recipe: Recipe::Direct { lhs, rhs },
    };
    vec![
        e("ELEM-1", "Gaussian e^(-bv²) against the real-p kernel", false, elem1_lhs, elem1_rhs),
        e("ELEM-2", "cosh(bx)cosh(b(x+i))", true, elem2_lhs, elem2_rhs),
        e("ELEM-3", "sinh(bx)sinh(b(x+i))", true, elem3_lhs, elem3_rhs),
        e("ELEM-4", "cosh(bx) + cosh(b(x+i))", true, elem4_lhs, elem4_rhs),
        e("ELEM-5", "sinh(bx) - sinh(b(x+i))", true, elem5_lhs, elem5_rhs),
        e("ELEM-6", "sinh²(bx) + sinh²(b(x+i))", true, elem6_lhs, elem6_rhs),
        CatalogEntry {
            params: vec![pspec],
            ..e("ELEM-7", "constant integrand, a square wave in p", false, elem7_lhs, elem7_rhs)
        },
    ]
}
