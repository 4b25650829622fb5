//! Closed-form right-hand sides of the master theorems and their variations.
//!
//! Each evaluator writes out the finite (or, for `q = 0`, infinite) residue sum
//! in its displayed form. [`KernelSpec::residue_sum`] computes the same numbers
//! from the pole census, which gives two independent routes to every value.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::integrand::{check_mode, combined_eval, pair_eval, validate_growth_with_rate, IntegrandSpec, VariationMode};
use crate::kernels::KernelSpec;
use crate::numerics::{floor_int, gamma_real, ln_gamma_real, near_integer, sign_pow, ComplexValue, I};
use crate::quadrature::{
    integrate_panels, integrate_pv_origin, integrate_real_line_auto, integrate_vertical_line, sum_alternating,
    QuadratureOptions, QuadratureResult,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "FCOSH")]
    Fcosh,
    #[serde(rename = "COROLLARY")]
    Corollary,
    #[serde(rename = "GEN1")]
    Gen1,
    #[serde(rename = "GEN1A")]
    Gen1a,
    #[serde(rename = "GEN2")]
    Gen2,
    #[serde(rename = "Q0")]
    Q0,
    #[serde(rename = "CUBED")]
    Cubed,
    #[serde(rename = "A1")]
    A1,
    #[serde(rename = "A3")]
    A3,
    #[serde(rename = "A4")]
    A4,
    #[serde(rename = "VAR_GENERAL")]
    VarGeneral,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::Fcosh,
        TheoremId::Corollary,
        TheoremId::Gen1,
        TheoremId::Gen1a,
        TheoremId::Gen2,
        TheoremId::Q0,
        TheoremId::Cubed,
        TheoremId::A1,
        TheoremId::A3,
        TheoremId::A4,
        TheoremId::VarGeneral,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TheoremId::Fcosh => "FCOSH",
            TheoremId::Corollary => "COROLLARY",
            TheoremId::Gen1 => "GEN1",
            TheoremId::Gen1a => "GEN1A",
            TheoremId::Gen2 => "GEN2",
            TheoremId::Q0 => "Q0",
            TheoremId::Cubed => "CUBED",
            TheoremId::A1 => "A1",
            TheoremId::A3 => "A3",
            TheoremId::A4 => "A4",
            TheoremId::VarGeneral => "VAR_GENERAL",
        }
    }

    fn admits(&self, kernel: &KernelSpec) -> bool {
        match (self, *kernel) {
            (TheoremId::Fcosh | TheoremId::Corollary, KernelSpec::CoshPi) => true,
            (TheoremId::Gen1, KernelSpec::SinhP { p }) => p > 0.0 && p < 1.0,
            (TheoremId::Gen1a, KernelSpec::SinhP { .. }) => true,
            (TheoremId::Gen2, KernelSpec::SinhPQ { q, .. }) => q != 0.0,
            (TheoremId::Q0, KernelSpec::SinhPQ { q, r }) => q == 0.0 && r != 0.0,
            (TheoremId::Cubed, KernelSpec::SinhCubed { q, .. }) => q != 0.0,
            (TheoremId::A1, KernelSpec::Sinh4k { .. }) => true,
            (TheoremId::A3, KernelSpec::CoshOdd { .. }) => true,
            (TheoremId::A4, KernelSpec::CoshPair { .. }) => true,
            (TheoremId::VarGeneral, KernelSpec::SinhP { .. }) => true,
            (TheoremId::VarGeneral, KernelSpec::SinhPQ { q, .. }) => q != 0.0,
            _ => false,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown theorem '{s}'")))
    }
}

/// A theorem applied to one kernel, integrand, variation mode and scale `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoremInstance {
    pub id: TheoremId,
    pub kernel: KernelSpec,
    pub integrand: IntegrandSpec,
    pub mode: VariationMode,
    pub a: ComplexValue,
    /// Abscissa of the vertical contour; used by COROLLARY only.
    pub abscissa: f64,
}

/// A point with c ≤ Re t ≤ 1/2 where `F(a t(1-t))` is singular, if any. Moving
/// the line Re t = c to the centre sweeps that band and its mirror image.
fn swept_singularity(f: &IntegrandSpec, a: ComplexValue, c: f64) -> Option<ComplexValue> {
    let root = |w: ComplexValue| (1.0 - (1.0 - w * 4.0 / a).sqrt()) * 0.5;
    f.singularities().into_iter().find_map(|(w, cut)| {
        let reach = if cut { 40 } else { 1 };
        (0..reach)
            .map(|k| if k == 0 { w } else { w - 1e-3 * 2f64.powi(k - 1) })
            .map(root)
            .find(|t| t.re >= c)
    })
}

impl TheoremInstance {
    pub fn new(
        id: TheoremId,
        kernel: KernelSpec,
        integrand: IntegrandSpec,
        mode: VariationMode,
        a: ComplexValue,
    ) -> Result<Self> {
        if !id.admits(&kernel) {
            return Err(Error::Premise(format!("{id} does not apply to kernel {kernel}")));
        }
        if id == TheoremId::VarGeneral && mode == VariationMode::Single {
            return Err(Error::Parity("VAR_GENERAL needs a two-argument variation mode".into()));
        }
        check_mode(&integrand, mode)?;
        Ok(TheoremInstance { id, kernel, integrand, mode, a, abscissa: 0.0 })
    }

    /// COROLLARY instance on the line Re t = c.
    pub fn corollary(integrand: IntegrandSpec, mode: VariationMode, a: ComplexValue, c: f64) -> Result<Self> {
        if !(c.abs() < 0.5) {
            return Err(Error::ParamWindow { name: "c".into(), value: c, window: "(-1/2, 1/2)".into() });
        }
        let mut inst = TheoremInstance::new(TheoremId::Corollary, KernelSpec::CoshPi, integrand, mode, a)?;
        inst.abscissa = c;
        if mode == VariationMode::Single {
            if let Some(t) = swept_singularity(&integrand, a, c) {
                return Err(Error::Premise(format!(
                    "F(a t(1-t)) is singular at t = {t} between the line Re t = {c} and the centre"
                )));
            }
        }
        Ok(inst)
    }

    /// Decay rate of the kernel in the theorem variable x.
    pub fn kernel_decay(&self) -> f64 {
        self.kernel.decay_rate() / self.kernel.scale()
    }

    /// False when the integrand grows fast enough that the left-hand integral
    /// cannot exist; the right-hand side is then only an analytic continuation.
    pub fn lhs_exists(&self) -> bool {
        if self.id == TheoremId::Q0 {
            // The kernel does not decay; the integrand alone must.
            return (self.integrand_factor(c(40.0, 0.0)).map(|v| v.norm()).unwrap_or(f64::INFINITY)) < 1e-6;
        }
        validate_growth_with_rate(&self.integrand, self.mode, self.a, self.kernel_decay()).0
    }

    /// `G(x)`: `F(a x(x+i))` or the mode's pair combination.
    pub fn integrand_factor(&self, x: ComplexValue) -> Result<ComplexValue> {
        combined_eval(&self.integrand, self.mode, self.a, x)
    }

    /// The integrand `G(x)·K(x)` of the real-line integral.
    pub fn lhs_integrand(&self, x: f64) -> Result<ComplexValue> {
        let x = c(x, 0.0);
        Ok(self.integrand_factor(x)? * self.kernel.eval_unchecked(x / self.kernel.scale()))
    }

    /// Point value used by the displayed formulas. `z` is the displayed argument
    /// `a·x(x+i)` for the single mode; other modes combine `F(ax)` and `F(a(x+i))`.
    fn point(&self, x: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
        match self.mode {
            VariationMode::Single => self.integrand.eval(z),
            mode => pair_eval(&self.integrand, mode, self.a * x, self.a * (x + I)),
        }
    }

    /// Value at the central pole x = -i/2.
    fn centre(&self) -> Result<ComplexValue> {
        self.point(c(0.0, -0.5), self.a * 0.25)
    }
}

fn c(re: f64, im: f64) -> ComplexValue {
    Complex64::new(re, im)
}

fn kernel_p(inst: &TheoremInstance) -> ComplexValue {
    match inst.kernel {
        KernelSpec::SinhP { p } => c(p, 0.0),
        KernelSpec::SinhPQ { q, r } | KernelSpec::SinhCubed { q, r } => c(q, r),
        _ => c(0.0, 0.0),
    }
}

fn expect(inst: &TheoremInstance, ids: &[TheoremId]) -> Result<()> {
    if ids.contains(&inst.id) && inst.id.admits(&inst.kernel) {
        Ok(())
    } else {
        Err(Error::Premise(format!("{} instance passed to a {} evaluator", inst.id, ids[0])))
    }
}

/// Upper limit M of the paired sums: the strict floor of |p|²/|q|. When the
/// bound is itself an integer the outermost poles sit on the contour, which is
/// only harmless if the integrand factor vanishes there.
fn pair_limit(inst: &TheoremInstance, p: ComplexValue) -> Result<i64> {
    let bound = p.norm_sqr() / p.re.abs();
    if near_integer(bound, 1e-12) {
        let m = bound.round();
        let x_edge = I * (p.conj() * m / p.norm_sqr() - 1.0) * 0.5;
        let g = inst.integrand_factor(x_edge)?;
        if g.norm() > 1e-14 {
            return Err(Error::OnContour);
        }
    }
    floor_int(bound)
}

/// F(a/4), or `F(-ia/2)·F(ia/2)`-style pair values under a variation.
pub fn rhs_fcosh(inst: &TheoremInstance) -> Result<ComplexValue> {
    expect(inst, &[TheoremId::Fcosh, TheoremId::Corollary])?;
    inst.centre()
}

/// The vertical-line form: `F(a/4)/(2π)`.
pub fn rhs_corollary(inst: &TheoremInstance) -> Result<ComplexValue> {
    expect(inst, &[TheoremId::Corollary])?;
    Ok(inst.centre()? / (2.0 * PI))
}

/// Single interior pole, 0 < p < 1: `-iF(a/4)/(2p)`.
pub fn rhs_gen1(inst: &TheoremInstance) -> Result<ComplexValue> {
    expect(inst, &[TheoremId::Gen1])?;
    let p = kernel_p(inst);
    Ok(-I * inst.centre()? / (p * 2.0))
}

/// `i/(2p) Σ_{n=⌊-p⌋}^{⌊p-1⌋} (-1)^n F(-a((n+1)²-p²)/(4p²))` with strict floors.
pub fn rhs_gen1a(inst: &TheoremInstance) -> Result<ComplexValue> {
    expect(inst, &[TheoremId::Gen1a, TheoremId::Gen1, TheoremId::VarGeneral])?;
    let p = match inst.kernel {
        KernelSpec::SinhP { p } => p,
        _ => return Err(Error::Premise("the real-p sum needs a SinhP kernel".into())),
    };
    if p == p.round() && inst.integrand_factor(c(0.0, 0.0))?.norm() > 1e-14 {
        return Err(Error::OnContour);
    }
    let mut acc = c(0.0, 0.0);
    for n in floor_int(-p)?..=floor_int(p - 1.0)? {
        let m = (n + 1) as f64;
        let x = I * (m - p) / (2.0 * p);
        let z = -inst.a * (m * m - p * p) / (4.0 * p * p);
        acc += inst.point(x, z)? * sign_pow(n);
    }
    Ok(I / (2.0 * p) * acc)
}

/// `-(i/2)F(a/4)/p - (i/p) Σ_{n=1}^{M} (-1)^n F(a(p²-n²)/(4p²))`, p = q + ir.
pub fn rhs_gen2(inst: &TheoremInstance) -> Result<ComplexValue> {
    expect(inst, &[TheoremId::Gen2, TheoremId::VarGeneral])?;
    let p = kernel_p(inst);
    let m_max = pair_limit(inst, p)?;
    let mut acc = c(0.0, 0.0);
    for n in 1..=m_max {
        let nf = n as f64;
        let x = I * (p * -1.0 + nf) / (p * 2.0);
        let z = inst.a * (p * p - nf * nf) / (p * p * 4.0);
        acc += inst.point(x, z)? * sign_pow(n);
    }
    Ok(-I * 0.5 * inst.centre()? / p - I / p * acc)
}

/// The `q = 0` limit. The displayed identity is
/// `ir ∫ G/sin(rπ(i+2x)) dx = Σ_{n≥1} (-1)^n F(a(r²+n²)/(4r²)) + F(a/4)/2`;
/// since `sinh(iπr(2x+i)) = i sin(πr(2x+i))` the integral against the
/// `SinhPQ{0, r}` kernel is `-S/r`, which is what is returned.
pub fn rhs_q0(inst: &TheoremInstance, opts: &QuadratureOptions) -> Result<ComplexValue> {
    expect(inst, &[TheoremId::Q0])?;
    let r = match inst.kernel {
        KernelSpec::SinhPQ { r, .. } => r,
        _ => unreachable!(),
    };
    let term = |n: i64| -> Result<ComplexValue> {
        let nf = n as f64;
        let x = c(nf / (2.0 * r), -0.5);
        let z = inst.a * (r * r + nf * nf) / (4.0 * r * r);
        Ok(inst.point(x, z)? * sign_pow(n))
    };
    let series = sum_alternating(term, 1, opts)?;
    let s = series.value + inst.centre()? * 0.5;
    Ok(-s / r)
}

/// Third-order kernel: the five-term display divided by π.
pub fn rhs_cubed(inst: &TheoremInstance) -> Result<ComplexValue> {
    expect(inst, &[TheoremId::Cubed])?;
    if inst.mode != VariationMode::Single {
        return Err(Error::Parity("the third-order display is written for F(a x(x+i)) only".into()));
    }
    let f = &inst.integrand;
    let p = kernel_p(inst);
    let a = inst.a;
    let m_max = pair_limit(inst, p)?;
    let quarter = a * 0.25;
    let (p3, p5) = (p * p * p, p * p * p * p * p);
    let mut total = I * PI * f.eval(quarter)? / (p * 4.0) - I * a * f.deriv(1, quarter)? / (p3 * 8.0 * PI);
    let (mut s0, mut s1, mut s2) = (c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0));
    for n in 1..=m_max {
        let nf = n as f64;
        let an = a * (p - nf) * (p + nf) / (p * p) * 0.25;
        let sg = sign_pow(n);
        s0 += f.eval(an)? * sg;
        s1 += f.deriv(1, an)? * sg;
        s2 += f.deriv(2, an)? * (sg * nf * nf);
    }
    total += I * PI / (p * 2.0) * s0 - I * a / (p3 * 4.0 * PI) * s1 + I * a * a / (p5 * 8.0 * PI) * s2;
    Ok(total / PI)
}

/// Edge poles of the `sinh(2kπx)` kernel need `F(0) = 0`; the integral is then
/// `-(i(-1)^k/k)(Σ_{n=1}^{k-1} (-1)^n F(a(k²-n²)/(4k²)) + F(a/4)/2)`.
pub fn rhs_a1(inst: &TheoremInstance) -> Result<ComplexValue> {
    expect(inst, &[TheoremId::A1])?;
    let k = match inst.kernel {
        KernelSpec::Sinh4k { k } => k as i64,
        _ => unreachable!(),
    };
    if inst.integrand_factor(c(0.0, 0.0))?.norm() > 1e-14 {
        return Err(Error::Premise(format!(
            "{} does not vanish at the on-contour pole x = 0",
            inst.integrand
        )));
    }
    let kf = k as f64;
    let mut acc = c(0.0, 0.0);
    for n in 1..k {
        let nf = n as f64;
        let x = I * (nf - kf) / (2.0 * kf);
        let z = inst.a * (kf * kf - nf * nf) / (4.0 * kf * kf);
        acc += inst.point(x, z)? * sign_pow(n);
    }
    Ok(-I * sign_pow(k) / kf * (acc + inst.centre()? * 0.5))
}

/// `(-1)^{k+1}F(a/4)/(2k-1) - (2(-1)^k/(2k-1)) Σ_{n=1}^{k-1} (-1)^n F(a((2k-1)²-4n²)/(4(2k-1)²))`.
pub fn rhs_a3(inst: &TheoremInstance) -> Result<ComplexValue> {
    expect(inst, &[TheoremId::A3])?;
    let k = match inst.kernel {
        KernelSpec::CoshOdd { k } => k as i64,
        _ => unreachable!(),
    };
    a3_sum(inst, k)
}

fn a3_sum(inst: &TheoremInstance, k: i64) -> Result<ComplexValue> {
    let cc = (2 * k - 1) as f64;
    let mut acc = c(0.0, 0.0);
    for n in 1..k {
        let nf = n as f64;
        let x = I * (2.0 * nf - cc) / (2.0 * cc);
        let z = inst.a * (cc * cc - 4.0 * nf * nf) / (4.0 * cc * cc);
        acc += inst.point(x, z)? * sign_pow(n);
    }
    Ok(inst.centre()? * (sign_pow(k + 1) / cc) - acc * (2.0 * sign_pow(k) / cc))
}

/// `(1/(cosh(πb)(2k-1))) Σ_{n=1}^{2k-1} (-1)^{n+1} F(-ia(2ib-2n-1+4k)(i(2n-1)+2b)/(4(2k-1)²))`.
pub fn rhs_a4(inst: &TheoremInstance) -> Result<ComplexValue> {
    expect(inst, &[TheoremId::A4])?;
    let (k, b) = match inst.kernel {
        KernelSpec::CoshPair { k, b } => (k as i64, b),
        _ => unreachable!(),
    };
    let cc = (2 * k - 1) as f64;
    let mut acc = c(0.0, 0.0);
    for n in 1..=(2 * k - 1) {
        let nf = n as f64;
        let x = c(b, nf + 0.5 - 2.0 * k as f64) / cc;
        let z = -I * inst.a * (c(-2.0 * nf - 1.0 + 4.0 * k as f64, 2.0 * b)) * c(2.0 * b, 2.0 * nf - 1.0)
            / (4.0 * cc * cc);
        acc += inst.point(x, z)? * sign_pow(n + 1);
    }
    Ok(acc / ((PI * b).cosh() * cc))
}

/// Variation of the sinh kernels: F(ax(x+i)) replaced by a parity
/// combination of `F(ax)` and `F(a(x+i))`, each sum term evaluated at the pair
/// `a·i(n+1∓p)/(2p)` (real p) or `a·i(n∓p)/(2p)` (complex p).
pub fn rhs_variation(inst: &TheoremInstance) -> Result<ComplexValue> {
    if inst.mode == VariationMode::Single {
        return Err(Error::Parity("a variation needs a two-argument mode".into()));
    }
    check_mode(&inst.integrand, inst.mode)?;
    match inst.kernel {
        KernelSpec::SinhP { .. } => rhs_gen1a(inst),
        KernelSpec::SinhPQ { .. } => rhs_gen2(inst),
        _ => Err(Error::Premise(format!("no variation form for kernel {}", inst.kernel))),
    }
}

/// Dispatches on the theorem id.
pub fn rhs(inst: &TheoremInstance, opts: &QuadratureOptions) -> Result<ComplexValue> {
    match inst.id {
        TheoremId::Fcosh => rhs_fcosh(inst),
        TheoremId::Corollary => rhs_corollary(inst),
        TheoremId::Gen1 => rhs_gen1(inst),
        TheoremId::Gen1a => rhs_gen1a(inst),
        TheoremId::Gen2 => rhs_gen2(inst),
        TheoremId::Q0 => rhs_q0(inst, opts),
        TheoremId::Cubed => rhs_cubed(inst),
        TheoremId::A1 => rhs_a1(inst),
        TheoremId::A3 => rhs_a3(inst),
        TheoremId::A4 => rhs_a4(inst),
        TheoremId::VarGeneral => rhs_variation(inst),
    }
}

/// Left-hand side by quadrature.
///
/// Kernels with a pole on the real axis are integrated as principal values at
/// the origin; the non-decaying `q = 0` kernel is integrated over its
/// antiperiodic half periods with alternating acceleration.
pub fn integrate_lhs(inst: &TheoremInstance, opts: &QuadratureOptions) -> Result<QuadratureResult> {
    let f = |x: f64| inst.lhs_integrand(x);
    match (inst.id, inst.kernel) {
        (TheoremId::Corollary, _) => {
            let (a, mode, cc) = (inst.a, inst.mode, inst.abscissa);
            // x = -it maps cosh(πx) to cos(πt) and x(x+i) to t(1-t).
            let g = move |t: ComplexValue| -> Result<ComplexValue> {
                Ok(combined_eval(&inst.integrand, mode, a, -I * t)? / (t * PI).cos())
            };
            integrate_vertical_line(g, cc, opts)
        }
        (_, KernelSpec::SinhPQ { q, r }) if q == 0.0 => {
            let half = 0.5 / r.abs();
            integrate_panels(move |x| Ok(f(x)? + f(-x)?), move |m| m as f64 * half, opts)
        }
        (_, KernelSpec::Sinh4k { .. }) => integrate_pv_origin(f, inst.kernel_decay(), opts),
        (_, KernelSpec::SinhP { p }) if p == p.round() => integrate_pv_origin(f, inst.kernel_decay(), opts),
        (_, KernelSpec::SinhPQ { q, r } | KernelSpec::SinhCubed { q, r }) => {
            let bound = (q * q + r * r) / q.abs();
            if near_integer(bound, 1e-9) {
                let x0 = bound.round() * r / (2.0 * (q * q + r * r));
                return Err(Error::SingularOnPath { at: x0 });
            }
            integrate_real_line_auto(f, opts)
        }
        _ => integrate_real_line_auto(f, opts),
    }
}

/// `(1/2)Γ(a)/Γ(a+k) + (π/(2(k-1)!)) Σ_{n=0}^{k-1} (-1)^n C(k-1,n) csc(π√(a+n))/√(a+n)`,
/// the closed form of `Σ_{n≥0} (-1)^n / Π_{j<k}(a+j-n²)`.
pub fn gamma_series_closed_form(alpha: f64, k: u32) -> Result<f64> {
    if !(alpha > 0.0) || k == 0 {
        return Err(Error::Premise(format!("need a > 0 and k >= 1, got a = {alpha}, k = {k}")));
    }
    let k = k as i64;
    let head = 0.5 / (0..k).map(|j| alpha + j as f64).product::<f64>();
    let mut binom = 1.0;
    let mut fact = 1.0;
    for j in 1..k {
        fact *= j as f64;
    }
    let mut acc = 0.0;
    for n in 0..k {
        let root = (alpha + n as f64).sqrt();
        if near_integer(root, 1e-12) {
            return Err(Error::Resonance(format!("a + {n} = {} is a perfect square", alpha + n as f64)));
        }
        acc += sign_pow(n) * binom / ((PI * root).sin() * root);
        binom = binom * (k - 1 - n) as f64 / (n + 1) as f64;
    }
    Ok(head + PI / (2.0 * fact) * acc)
}

/// `Γ(a-N)/Γ(b-N)` for b > a, by reflection once both arguments drop below 1/2:
/// the two sines differ only by the factor `sin(πb)/sin(πa)`.
fn shifted_gamma_ratio(alpha: f64, beta: f64, big_n: f64) -> Result<f64> {
    let (x, y) = (alpha - big_n, beta - big_n);
    if x >= 0.5 {
        return Ok((ln_gamma_real(x)? - ln_gamma_real(y)?).exp());
    }
    if x == x.round() {
        return Err(Error::Pole { function: "gamma", at: c(x, 0.0) });
    }
    if y >= 0.5 {
        return Ok(gamma_real(x)? / gamma_real(y)?);
    }
    let ratio = (PI * beta).sin() / (PI * alpha).sin();
    Ok(ratio * (ln_gamma_real(1.0 - y)? - ln_gamma_real(1.0 - x)?).exp())
}

/// `1/(n! Γ(d-n))`; past n = d it is `(-1)^n sin(πd)Γ(n+1-d)/(π n!)`.
fn inv_factorial_gamma(n: i64, d: f64) -> Result<f64> {
    let nf = n as f64;
    if d - nf >= 0.5 {
        return Ok((-ln_gamma_real(nf + 1.0)? - ln_gamma_real(d - nf)?).exp());
    }
    let s = (PI * d).sin();
    if s == 0.0 || (d - nf) == (d - nf).round() {
        return Ok(0.0);
    }
    Ok(sign_pow(n) * s / PI * (ln_gamma_real(nf + 1.0 - d)? - ln_gamma_real(nf + 1.0)?).exp())
}

/// Both sides of `Σ_{n≥0} (-1)^n Γ(a-n²)/Γ(b-n²) = Γ(a)/(2Γ(b)) + (π/2) Σ_{n≥0} (-1)^n csc(π√(a+n))/(n!√(a+n)Γ(b-a-n))`.
///
/// The left series alternates. The right one does not, but its terms keep a
/// constant sign while `√(a+n)` stays between consecutive integers, so it is
/// summed in those blocks, which do alternate.
pub fn gamma_series_transform(alpha: f64, beta: f64, opts: &QuadratureOptions) -> Result<(QuadratureResult, QuadratureResult)> {
    if !(beta > alpha && alpha > 0.5) {
        return Err(Error::Premise(format!("need b > a > 1/2, got a = {alpha}, b = {beta}")));
    }
    let lhs = sum_alternating(
        |n| {
            let n2 = (n * n) as f64;
            Ok(c(sign_pow(n) * shifted_gamma_ratio(alpha, beta, n2)?, 0.0))
        },
        0,
        opts,
    )?;
    let d = beta - alpha;
    let term = |n: i64| -> Result<f64> {
        let root = (alpha + n as f64).sqrt();
        if near_integer(root, 1e-12) {
            return Err(Error::Resonance(format!("a + {n} is a perfect square")));
        }
        let inv = inv_factorial_gamma(n, d)?;
        Ok(sign_pow(n) * inv / ((PI * root).sin() * root))
    };
    // Block m collects the n with m ≤ √(a+n) < m+1.
    let first = |m: i64| -> i64 { ((m * m) as f64 - alpha).ceil().max(0.0) as i64 };
    let m0 = alpha.sqrt().floor() as i64;
    // Blocks grow like 2m, so the term count is what has to be bounded.
    let used = std::cell::Cell::new(0usize);
    let block = |j: i64| -> Result<ComplexValue> {
        let m = m0 + j;
        let mut s = 0.0;
        for n in first(m).max(0)..first(m + 1) {
            s += term(n)?;
        }
        used.set(used.get() + (first(m + 1) - first(m).max(0)) as usize);
        if used.get() > opts.max_evaluations {
            return Err(Error::NonConvergence { estimate: f64::NAN, evaluations: used.get() });
        }
        Ok(c(s, 0.0))
    };
    let mut rhs = sum_alternating(block, 0, opts)?;
    rhs.value = rhs.value * (PI / 2.0) + shifted_gamma_ratio(alpha, beta, 0.0)? * 0.5;
    rhs.abs_error_estimate *= PI / 2.0;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(id: TheoremId, kernel: KernelSpec, f: IntegrandSpec) -> TheoremInstance {
        TheoremInstance::new(id, kernel, f, VariationMode::Single, c(1.0, 0.0)).unwrap()
    }

    fn close(a: ComplexValue, b: ComplexValue, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + b.norm())
    }

    #[test]
    fn fcosh_constant_and_power() {
        let i = inst(TheoremId::Fcosh, KernelSpec::CoshPi, IntegrandSpec::Constant);
        assert_eq!(rhs_fcosh(&i).unwrap(), c(1.0, 0.0));
        let i = inst(TheoremId::Fcosh, KernelSpec::CoshPi, IntegrandSpec::PowerZ { s: c(2.0, 0.0) });
        assert!(close(rhs_fcosh(&i).unwrap(), c(1.0 / 16.0, 0.0), 1e-15));
    }

    #[test]
    fn gen1a_examples() {
        let i = inst(TheoremId::Gen1a, KernelSpec::SinhP { p: 2.5 }, IntegrandSpec::Constant);
        // Σ_{n=-3}^{1} (-1)^n = -1.
        assert!(close(rhs_gen1a(&i).unwrap(), c(0.0, -0.2), 1e-15));
        let i = inst(TheoremId::Gen1a, KernelSpec::SinhP { p: 0.7 }, IntegrandSpec::Constant);
        assert!(close(rhs_gen1a(&i).unwrap(), c(0.0, -1.0 / 1.4), 1e-15));
        let i = inst(TheoremId::Gen1a, KernelSpec::SinhP { p: 2.0 }, IntegrandSpec::Constant);
        assert_eq!(rhs_gen1a(&i), Err(Error::OnContour));
    }

    #[test]
    fn cubed_constant() {
        let i = inst(TheoremId::Cubed, KernelSpec::SinhCubed { q: 0.5, r: 0.0 }, IntegrandSpec::Constant);
        assert!(close(rhs_cubed(&i).unwrap(), c(0.0, 0.5), 1e-15));
    }

    #[test]
    fn a1_premise_and_value() {
        let i = inst(TheoremId::A1, KernelSpec::Sinh4k { k: 2 }, IntegrandSpec::Constant);
        assert!(matches!(rhs_a1(&i), Err(Error::Premise(_))));
        let i = inst(TheoremId::A1, KernelSpec::Sinh4k { k: 3 }, IntegrandSpec::PowerZ { s: c(1.0, 0.0) });
        let x = |n: f64| (9.0 - n * n) / 36.0;
        let want = -I * -1.0 / 3.0 * (-x(1.0) + x(2.0) + 0.25 * 0.5);
        assert!(close(rhs_a1(&i).unwrap(), want, 1e-15));
    }

    #[test]
    fn a3_k2_constant() {
        let i = inst(TheoremId::A3, KernelSpec::CoshOdd { k: 2 }, IntegrandSpec::Constant);
        assert!(close(rhs_a3(&i).unwrap(), c(1.0 / 3.0, 0.0), 1e-15));
    }

    #[test]
    fn a4_single_term() {
        let i = inst(TheoremId::A4, KernelSpec::CoshPair { k: 1, b: 0.5 }, IntegrandSpec::Constant);
        assert!(close(rhs_a4(&i).unwrap(), c(1.0 / (PI * 0.5).cosh(), 0.0), 1e-15));
    }

    #[test]
    fn q0_constant_diverges() {
        let i = inst(TheoremId::Q0, KernelSpec::SinhPQ { q: 0.0, r: 1.0 }, IntegrandSpec::Constant);
        assert!(matches!(rhs_q0(&i, &QuadratureOptions::default()), Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn wrong_kernel_rejected() {
        let r = TheoremInstance::new(
            TheoremId::Gen1,
            KernelSpec::SinhP { p: 1.5 },
            IntegrandSpec::Constant,
            VariationMode::Single,
            c(1.0, 0.0),
        );
        assert!(matches!(r, Err(Error::Premise(_))));
    }

    #[test]
    fn gamma_closed_form_quarter() {
        let v = gamma_series_closed_form(0.25, 1).unwrap();
        assert!((v - (2.0 + PI)).abs() < 1e-12);
        assert!(matches!(gamma_series_closed_form(4.0, 1), Err(Error::Resonance(_))));
    }

    #[test]
    fn gamma_transform_sides_agree() {
        let (l, r) = gamma_series_transform(0.8, 2.8, &QuadratureOptions::default()).unwrap();
        assert!((l.value - r.value).norm() < 1e-9, "{l:?} {r:?}");
    }

    #[test]
    fn gamma_transform_equal_parameters_diverge() {
        assert!(gamma_series_transform(0.8, 0.8, &QuadratureOptions::default()).is_err());
    }
}
