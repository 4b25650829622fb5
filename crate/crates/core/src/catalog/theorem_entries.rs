//! The theorems themselves, each with `F(z) = e^{-wz}` (or `z e^{-wz}` where
//! the integrand must vanish at the origin).

use std::f64::consts::PI;

use crate::error::Result;
use crate::integrand::{IntegrandSpec, VariationMode};
use crate::kernels::KernelSpec;
use crate::numerics::near_integer;
use crate::theorems::{TheoremId, TheoremInstance};

use super::{c, get, geti, re, violation, CatalogEntry, ParamSpec, Params, Recipe, ToleranceClass};

const A: ParamSpec = ParamSpec::closed("a", 0.0, 4.0, 1.0).open_lo();
const W: ParamSpec = ParamSpec::closed("w", 0.0, 3.0, 1.0);
const K: ParamSpec = ParamSpec::int("k", 1.0, 4.0, 2.0);
const Q: ParamSpec = ParamSpec::closed("q", 0.2, 2.0, 0.6);
const R: ParamSpec = ParamSpec::closed("r", -1.0, 1.0, 0.8);

fn exp(p: &Params) -> IntegrandSpec {
    IntegrandSpec::ExpLinear { b: re(get(p, "w")) }
}

fn single(id: TheoremId, kernel: KernelSpec, f: IntegrandSpec, p: &Params) -> Result<TheoremInstance> {
    TheoremInstance::new(id, kernel, f, VariationMode::Single, re(get(p, "a")))
}

/// Keeps the outermost pole pair of the complex-p kernels off the contour.
fn off_contour(p: &Params) -> Result<()> {
    let (q, r) = (get(p, "q"), get(p, "r"));
    let bound = (q * q + r * r) / q;
    if near_integer(bound, 0.05) {
        return Err(violation("q", q, format!("(q²+r²)/q = {bound:.4} must stay 0.05 away from an integer")));
    }
    Ok(())
}

fn q0_guard(p: &Params) -> Result<()> {
    let wa = get(p, "w") * get(p, "a");
    if wa < 0.1 {
        return Err(violation("w", get(p, "w"), "w·a >= 0.1 (the integrand must supply the decay)".into()));
    }
    Ok(())
}

fn var_guard(p: &Params) -> Result<()> {
    off_contour(p)?;
    let (b, a, q) = (get(p, "b"), get(p, "a"), get(p, "q"));
    if b * a > 0.8 * PI * q {
        return Err(violation("b", b, format!("b·a <= 0.8πq = {:.4}", 0.8 * PI * q)));
    }
    Ok(())
}

fn real_var_guard(p: &Params) -> Result<()> {
    let (b, a, pp) = (get(p, "b"), get(p, "a"), get(p, "p"));
    if b * a > 0.8 * PI * pp {
        return Err(violation("b", b, format!("b·a <= 0.8πp = {:.4}", 0.8 * PI * pp)));
    }
    Ok(())
}

/// A variation of the real-p theorem with `cosh(bz)` or `sinh(bz)` as F.
fn real_var(p: &Params, odd: bool, mode: VariationMode) -> Result<TheoremInstance> {
    let b = get(p, "b");
    let f = if odd { IntegrandSpec::OddFactor { b } } else { IntegrandSpec::EvenFactor { b } };
    TheoremInstance::new(TheoremId::VarGeneral, KernelSpec::SinhP { p: get(p, "p") }, f, mode, re(get(p, "a")))
}

pub(super) fn entries() -> Vec<CatalogEntry> {
    let e = |id, label, params: Vec<ParamSpec>, build: fn(&Params) -> Result<TheoremInstance>| CatalogEntry {
        id,
        label,
        params,
        tolerance: ToleranceClass::Tight,
        guard: None,
        note: None,
        recipe: Recipe::Theorem(build),
    };
    let var = |id, label, build: fn(&Params) -> Result<TheoremInstance>| CatalogEntry {
        guard: Some(real_var_guard),
        ..e(
            id,
            label,
            vec![
                ParamSpec::closed("p", 0.3, 3.0, 1.6).no_integers(),
                ParamSpec::closed("b", 0.0, 1.0, 0.5),
                ParamSpec::closed("a", 0.0, 2.0, 1.0).open_lo(),
            ],
            build,
        )
    };
    vec![
        e("FCOSH", "master theorem, 1/cosh(πx) kernel", vec![A, W], |p| {
            single(TheoremId::Fcosh, KernelSpec::CoshPi, exp(p), p)
        }),
        e(
            "COROLLARY",
            "vertical-line form against 1/cos(πt)",
            vec![A, W, ParamSpec::closed("c", -0.5, 0.5, 0.25).open_lo().open_hi()],
            |p| TheoremInstance::corollary(exp(p), VariationMode::Single, re(get(p, "a")), get(p, "c")),
        ),
        e(
            "GEN1",
            "sinh(πp(2x+i)) kernel with one interior pole",
            vec![ParamSpec::closed("p", 0.0, 1.0, 0.7).open_lo().open_hi(), A, W],
            |p| single(TheoremId::Gen1, KernelSpec::SinhP { p: get(p, "p") }, exp(p), p),
        ),
        e(
            "GEN1A",
            "sinh(πp(2x+i)) kernel, real p, finite residue sum",
            vec![ParamSpec::closed("p", 0.2, 4.0, 2.5).no_integers(), A, W],
            |p| single(TheoremId::Gen1a, KernelSpec::SinhP { p: get(p, "p") }, exp(p), p),
        ),
        CatalogEntry {
            guard: Some(off_contour),
            ..e("GEN2", "sinh(π(q+ir)(2x+i)) kernel, complex p", vec![Q, R, A, W], |p| {
                single(TheoremId::Gen2, KernelSpec::SinhPQ { q: get(p, "q"), r: get(p, "r") }, exp(p), p)
            })
        },
        CatalogEntry {
            guard: Some(q0_guard),
            ..e(
                "Q0",
                "q = 0 limit, infinite alternating residue series",
                vec![
                    ParamSpec::closed("r", 0.3, 2.0, 1.0),
                    ParamSpec::closed("a", 0.5, 4.0, 1.0),
                    ParamSpec::closed("w", 0.2, 3.0, 1.0),
                ],
                |p| single(TheoremId::Q0, KernelSpec::SinhPQ { q: 0.0, r: get(p, "r") }, exp(p), p),
            )
        },
        CatalogEntry {
            guard: Some(off_contour),
            ..e(
                "CUBED",
                "third-order sinh kernel, derivative terms",
                vec![Q, ParamSpec::closed("r", -1.0, 1.0, 0.3), A, W],
                |p| single(TheoremId::Cubed, KernelSpec::SinhCubed { q: get(p, "q"), r: get(p, "r") }, exp(p), p),
            )
        },
        e("A1", "sinh(2kπx) kernel, principal value, F(0) = 0", vec![K, A, W], |p| {
            let f = IntegrandSpec::PowerExp { s: re(1.0), b: re(get(p, "w")) };
            single(TheoremId::A1, KernelSpec::Sinh4k { k: geti(p, "k") as u32 }, f, p)
        }),
        e("A3", "cosh((2k-1)πx) kernel", vec![K, A, W], |p| {
            single(TheoremId::A3, KernelSpec::CoshOdd { k: geti(p, "k") as u32 }, exp(p), p)
        }),
        e(
            "A4",
            "cosh((2k-1)πx)/(cosh²(πb)+sinh²((2k-1)πx)) kernel",
            vec![K, ParamSpec::closed("b", 0.0, 2.0, 0.5), A, W],
            |p| {
                let kernel = KernelSpec::CoshPair { k: geti(p, "k") as u32, b: get(p, "b") };
                single(TheoremId::A4, kernel, exp(p), p)
            },
        ),
        CatalogEntry {
            guard: Some(var_guard),
            ..e(
                "VAR1",
                "product variation cosh(abx)cosh(ab(x+i)) against the complex-p kernel",
                vec![Q, R, ParamSpec::closed("b", 0.0, 1.0, 0.5), ParamSpec::closed("a", 0.0, 2.0, 1.0).open_lo()],
                |p| {
                    TheoremInstance::new(
                        TheoremId::VarGeneral,
                        KernelSpec::SinhPQ { q: get(p, "q"), r: get(p, "r") },
                        IntegrandSpec::EvenFactor { b: get(p, "b") },
                        VariationMode::ProductParity,
                        c(get(p, "a"), 0.0),
                    )
                },
            )
        },
        var("VAR-FE-FE", "product Fe(ax)Fe(a(x+i)) against the real-p kernel", |p| {
            real_var(p, false, VariationMode::ProductParity)
        }),
        var("VAR-FO-FO", "product Fo(ax)Fo(a(x+i)) against the real-p kernel", |p| {
            real_var(p, true, VariationMode::ProductParity)
        }),
        var("VAR-FE-SUM", "sum Fe(ax)+Fe(a(x+i)) against the real-p kernel", |p| {
            real_var(p, false, VariationMode::SumEven)
        }),
        var("VAR-FO-DIFF", "difference Fo(ax)-Fo(a(x+i)) against the real-p kernel", |p| {
            real_var(p, true, VariationMode::DiffOdd)
        }),
        var("VAR-FO-SQ", "squares Fo(ax)²+Fo(a(x+i))² against the real-p kernel", |p| {
            real_var(p, true, VariationMode::SumOddSquares)
        }),
        var("VAR-CROSS", "cross term Fo(ax)Fe(a(x+i))-Fe(ax)Fo(a(x+i)) against the real-p kernel", |p| {
            real_var(p, true, VariationMode::CrossParity)
        }),
    ]
}
