//! Kernels that are antisymmetric under reflection through the strip centre,
//! their poles, and residue contributions.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::integrand::{combined_derivs, fmt_complex, parse_call, Args, IntegrandSpec, VariationMode};
use crate::numerics::{floor_int, sign_pow, ComplexValue, I};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KernelSpec {
    /// 1/cosh(πx)
    CoshPi,
    /// 1/sinh(πp(2x+i)), p > 0
    SinhP { p: f64 },
    /// 1/sinh(π(q+ir)(2x+i))
    SinhPQ { q: f64, r: f64 },
    /// 1/sinh³(π(q+ir)(2x+i))
    SinhCubed { q: f64, r: f64 },
    /// 1/sinh(4kπy) on the half strip; the variable is y = x/2 of the
    /// `1/sinh(2kπx)` integral, so the integrand argument is `4a y(y+i/2)`.
    Sinh4k { k: u32 },
    /// 1/cosh((2k-1)πx)
    CoshOdd { k: u32 },
    /// cosh((2k-1)πx)/(cosh²(πb) + sinh²((2k-1)πx))
    CoshPair { k: u32, b: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryLaw {
    /// K(-x-i) = -K(x) on the strip -1 ≤ Im x ≤ 0
    FullShift,
    /// K(-x-i/2) = -K(x) on the strip -1/2 ≤ Im x ≤ 0
    HalfShift,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleInfo {
    pub location: ComplexValue,
    pub order: u32,
    /// Leading Laurent coefficient, the residue for simple poles.
    pub weight: ComplexValue,
    /// Laurent coefficients c₋₁, c₋₂, c₋₃.
    pub laurent: [ComplexValue; 3],
    /// The pole lies on an edge of the strip and takes half weight.
    pub on_contour: bool,
    pub index: i64,
}

fn c(re: f64, im: f64) -> ComplexValue {
    Complex64::new(re, im)
}

const EDGE_TOL: f64 = 1e-12;

impl KernelSpec {
    pub fn law(&self) -> SymmetryLaw {
        match self {
            KernelSpec::Sinh4k { .. } => SymmetryLaw::HalfShift,
            _ => SymmetryLaw::FullShift,
        }
    }

    /// Imaginary extent (bottom, top) of the strip.
    pub fn strip(&self) -> (f64, f64) {
        match self.law() {
            SymmetryLaw::FullShift => (-1.0, 0.0),
            SymmetryLaw::HalfShift => (-0.5, 0.0),
        }
    }

    /// Ratio between the theorem variable and the kernel variable.
    pub fn scale(&self) -> f64 {
        match self {
            KernelSpec::Sinh4k { .. } => 2.0,
            _ => 1.0,
        }
    }

    pub fn image(&self, x: ComplexValue) -> ComplexValue {
        match self.law() {
            SymmetryLaw::FullShift => -x - I,
            SymmetryLaw::HalfShift => -x - I * 0.5,
        }
    }

    /// Exponential decay rate of |K(x)| along the real axis.
    pub fn decay_rate(&self) -> f64 {
        match *self {
            KernelSpec::CoshPi => PI,
            KernelSpec::SinhP { p } => 2.0 * PI * p,
            KernelSpec::SinhPQ { q, .. } => 2.0 * PI * q.abs(),
            KernelSpec::SinhCubed { q, .. } => 6.0 * PI * q.abs(),
            KernelSpec::Sinh4k { k } => 4.0 * PI * k as f64,
            KernelSpec::CoshOdd { k } | KernelSpec::CoshPair { k, .. } => PI * (2 * k - 1) as f64,
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |name: &str, value: f64, window: &str| {
            Err(Error::ParamWindow { name: name.into(), value, window: window.into() })
        };
        match *self {
            KernelSpec::SinhP { p } if !(p > 0.0 && p.is_finite()) => bad("p", p, "(0, inf)"),
            KernelSpec::SinhPQ { q, r } | KernelSpec::SinhCubed { q, r } if q == 0.0 && r == 0.0 => {
                bad("q", q, "q + ir != 0")
            }
            KernelSpec::Sinh4k { k } | KernelSpec::CoshOdd { k } | KernelSpec::CoshPair { k, .. } if k == 0 => {
                bad("k", 0.0, "k >= 1")
            }
            _ => Ok(()),
        }
    }

    fn p(&self) -> ComplexValue {
        match *self {
            KernelSpec::SinhP { p } => c(p, 0.0),
            KernelSpec::SinhPQ { q, r } | KernelSpec::SinhCubed { q, r } => c(q, r),
            _ => c(0.0, 0.0),
        }
    }

    /// Kernel value without the near-pole check.
    pub fn eval_unchecked(&self, x: ComplexValue) -> ComplexValue {
        let arg_guard = |u: ComplexValue| u.re.abs() > 700.0;
        match *self {
            KernelSpec::CoshPi => {
                let u = x * PI;
                if arg_guard(u) {
                    return c(0.0, 0.0);
                }
                u.cosh().inv()
            }
            KernelSpec::SinhP { .. } | KernelSpec::SinhPQ { .. } => {
                let u = self.p() * PI * (x * 2.0 + I);
                if arg_guard(u) {
                    return c(0.0, 0.0);
                }
                u.sinh().inv()
            }
            KernelSpec::SinhCubed { .. } => {
                let u = self.p() * PI * (x * 2.0 + I);
                if arg_guard(u * 3.0) {
                    return c(0.0, 0.0);
                }
                let s = u.sinh();
                (s * s * s).inv()
            }
            KernelSpec::Sinh4k { k } => {
                let u = x * (4.0 * PI * k as f64);
                if arg_guard(u) {
                    return c(0.0, 0.0);
                }
                u.sinh().inv()
            }
            KernelSpec::CoshOdd { k } => {
                let u = x * (PI * (2 * k - 1) as f64);
                if arg_guard(u) {
                    return c(0.0, 0.0);
                }
                u.cosh().inv()
            }
            KernelSpec::CoshPair { k, b } => {
                let u = x * (PI * (2 * k - 1) as f64);
                if arg_guard(u * 2.0) {
                    return c(0.0, 0.0);
                }
                let ch = (PI * b).cosh();
                let sh = u.sinh();
                u.cosh() / (ch * ch + sh * sh)
            }
        }
    }

    /// Distance from x to the nearest pole, or infinity when there is none nearby.
    fn nearest_pole_distance(&self, x: ComplexValue) -> f64 {
        if let KernelSpec::SinhPQ { q, r } = *self {
            if q == 0.0 {
                // Poles at m/(2r) - i/2 for every integer m.
                let m = (2.0 * r * x.re).round();
                return (x - c(m / (2.0 * r), -0.5)).norm();
            }
        }
        match self.poles_in_strip() {
            Ok(poles) => poles.iter().map(|p| (p.location - x).norm()).fold(f64::INFINITY, f64::min),
            Err(_) => f64::INFINITY,
        }
    }

    /// K(x) for x in the closed strip, refusing points within 1e-12 of a pole.
    pub fn kernel_eval(&self, x: ComplexValue) -> Result<ComplexValue> {
        self.validate()?;
        let (lo, hi) = self.strip();
        if x.im < lo - EDGE_TOL || x.im > hi + EDGE_TOL {
            return Err(Error::Domain { function: "kernel_eval", value: x.im });
        }
        let v = self.eval_unchecked(x);
        if !v.re.is_finite() || !v.im.is_finite() || v.norm() > 1e9 {
            if self.nearest_pole_distance(x) < 1e-12 || !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::NearPole { at: x });
            }
        }
        Ok(v)
    }

    /// Every pole in the closed strip, sorted by imaginary then real part.
    pub fn poles_in_strip(&self) -> Result<Vec<PoleInfo>> {
        self.validate()?;
        let mut out = Vec::new();
        match *self {
            KernelSpec::CoshPi => {
                let res = c(0.0, 1.0 / PI);
                out.push(simple(c(0.0, -0.5), res, false, 0));
            }
            KernelSpec::SinhP { .. } | KernelSpec::SinhPQ { .. } | KernelSpec::SinhCubed { .. } => {
                let p = self.p();
                if p.re == 0.0 {
                    return Err(Error::InfiniteCensus);
                }
                let n2 = p.norm_sqr();
                let bound = n2 / p.re.abs();
                let m_max = floor_int(bound)? + 1;
                for m in -m_max..=m_max {
                    let mf = m as f64;
                    if mf.abs() > bound + EDGE_TOL * bound.max(1.0) {
                        continue;
                    }
                    let on_contour = (mf.abs() - bound).abs() <= EDGE_TOL * bound.max(1.0);
                    let loc = c(mf * p.im / n2, mf * p.re / n2 - 1.0) * 0.5;
                    let sgn = sign_pow(m);
                    if let KernelSpec::SinhCubed { .. } = self {
                        let tpp = p * (2.0 * PI);
                        let c3 = sgn / (tpp * tpp * tpp);
                        let c1 = -sgn / (p * (4.0 * PI));
                        out.push(PoleInfo {
                            location: loc,
                            order: 3,
                            weight: c3,
                            laurent: [c1, c(0.0, 0.0), c3],
                            on_contour,
                            index: m,
                        });
                    } else {
                        out.push(simple(loc, sgn / (p * (2.0 * PI)), on_contour, m));
                    }
                }
            }
            KernelSpec::Sinh4k { k } => {
                let kk = k as f64;
                for m in 0..=(2 * k as i64) {
                    let loc = c(0.0, -(m as f64) / (4.0 * kk));
                    let res = c(sign_pow(m) / (4.0 * kk * PI), 0.0);
                    out.push(simple(loc, res, m == 0 || m == 2 * k as i64, m));
                }
            }
            KernelSpec::CoshOdd { k } => {
                let cc = (2 * k - 1) as f64;
                for j in -(2 * k as i64 - 1)..=-1 {
                    let loc = c(0.0, (j as f64 + 0.5) / cc);
                    let res = ((loc * (PI * cc)).sinh() * (PI * cc)).inv();
                    out.push(simple(loc, res, false, j));
                }
            }
            KernelSpec::CoshPair { k, b } => {
                if b == 0.0 {
                    return KernelSpec::CoshOdd { k }.poles_in_strip();
                }
                let cc = (2 * k - 1) as f64;
                let res_at = |x0: ComplexValue| ((x0 * (PI * cc)).sinh() * (2.0 * PI * cc)).inv();
                for j in -(2 * k as i64 - 1)..=-1 {
                    let loc = c(-b, j as f64 + 0.5) / cc;
                    out.push(simple(loc, res_at(loc), false, j));
                }
                for j in 0..(2 * k as i64 - 1) {
                    let loc = c(b, -(j as f64 + 0.5)) / cc;
                    out.push(simple(loc, res_at(loc), false, j + 1000));
                }
            }
        }
        out.sort_by(|a, b| {
            a.location
                .im
                .partial_cmp(&b.location.im)
                .unwrap()
                .then(a.location.re.partial_cmp(&b.location.re).unwrap())
        });
        Ok(out)
    }

    /// `-πi·σ·w·Res[G(σy)K(y), pole]` with σ the variable scale and w = 1/2 for
    /// edge poles, so that summing over the census gives the integral
    /// `∫ G(x) K_σ(x) dx` of the theorem variable.
    pub fn residue_contribution(
        &self,
        pole: &PoleInfo,
        f: &IntegrandSpec,
        mode: VariationMode,
        a: ComplexValue,
    ) -> Result<ComplexValue> {
        let sigma = self.scale();
        let y0 = pole.location;
        let res = if pole.order == 1 {
            crate::integrand::combined_eval(f, mode, a, y0 * sigma)? * pole.laurent[0]
        } else {
            let g = combined_derivs(f, mode, a, y0 * sigma)?;
            pole.laurent[0] * g[0] + pole.laurent[1] * g[1] * sigma + pole.laurent[2] * g[2] * (sigma * sigma) * 0.5
        };
        let w = if pole.on_contour { 0.5 } else { 1.0 };
        Ok(c(0.0, -PI) * sigma * w * res)
    }

    /// Sum of residue contributions over the census.
    pub fn residue_sum(&self, f: &IntegrandSpec, mode: VariationMode, a: ComplexValue) -> Result<ComplexValue> {
        let mut acc = c(0.0, 0.0);
        for pole in self.poles_in_strip()? {
            acc += self.residue_contribution(&pole, f, mode, a)?;
        }
        Ok(acc)
    }

    /// |K(x) + K(image(x))|, zero up to rounding when the symmetry law holds.
    pub fn symmetry_defect(&self, x: ComplexValue) -> Result<f64> {
        self.validate()?;
        let y = self.image(x);
        for z in [x, y] {
            if self.nearest_pole_distance(z) < 1e-6 {
                return Err(Error::NearPole { at: z });
            }
        }
        Ok((self.eval_unchecked(x) + self.eval_unchecked(y)).norm())
    }

    /// Denominator of the kernel, an entire function whose zeros in the strip are the poles.
    pub fn denominator(&self, x: ComplexValue) -> ComplexValue {
        match *self {
            KernelSpec::CoshPi => (x * PI).cosh(),
            KernelSpec::SinhP { .. } | KernelSpec::SinhPQ { .. } => (self.p() * PI * (x * 2.0 + I)).sinh(),
            KernelSpec::SinhCubed { .. } => (self.p() * PI * (x * 2.0 + I)).sinh().powi(3),
            KernelSpec::Sinh4k { k } => (x * (4.0 * PI * k as f64)).sinh(),
            KernelSpec::CoshOdd { k } => (x * (PI * (2 * k - 1) as f64)).cosh(),
            KernelSpec::CoshPair { k, b } => {
                let ch = (PI * b).cosh();
                let sh = (x * (PI * (2 * k - 1) as f64)).sinh();
                ch * ch + sh * sh
            }
        }
    }
}

fn simple(location: ComplexValue, res: ComplexValue, on_contour: bool, index: i64) -> PoleInfo {
    PoleInfo { location, order: 1, weight: res, laurent: [res, c(0.0, 0.0), c(0.0, 0.0)], on_contour, index }
}

impl fmt::Display for KernelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            KernelSpec::CoshPi => write!(f, "cosh_pi"),
            KernelSpec::SinhP { p } => write!(f, "sinh_p(p={p})"),
            KernelSpec::SinhPQ { q, r } => write!(f, "sinh_pq(q={q},r={r})"),
            KernelSpec::SinhCubed { q, r } => write!(f, "sinh_cubed(q={q},r={r})"),
            KernelSpec::Sinh4k { k } => write!(f, "sinh_4k(k={k})"),
            KernelSpec::CoshOdd { k } => write!(f, "cosh_odd(k={k})"),
            KernelSpec::CoshPair { k, b } => write!(f, "cosh_pair(k={k},b={})", fmt_complex(c(b, 0.0))),
        }
    }
}

impl FromStr for KernelSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (name, args) = parse_call(text)?;
        let a = Args::new(args, &name);
        let k_of = |a: &Args| -> Result<u32> {
            let k = a.real("k")?;
            if k >= 1.0 && k == k.round() && k < 1e6 {
                Ok(k as u32)
            } else {
                Err(Error::Parse(format!("k must be a positive integer, got {k}")))
            }
        };
        let spec = match name.as_str() {
            "cosh_pi" => {
                a.only(&[])?;
                KernelSpec::CoshPi
            }
            "sinh_p" => {
                a.only(&["p"])?;
                KernelSpec::SinhP { p: a.real("p")? }
            }
            "sinh_pq" => {
                a.only(&["q", "r"])?;
                KernelSpec::SinhPQ { q: a.real("q")?, r: a.real("r")? }
            }
            "sinh_cubed" => {
                a.only(&["q", "r"])?;
                KernelSpec::SinhCubed { q: a.real("q")?, r: a.real("r")? }
            }
            "sinh_4k" => {
                a.only(&["k"])?;
                KernelSpec::Sinh4k { k: k_of(&a)? }
            }
            "cosh_odd" => {
                a.only(&["k"])?;
                KernelSpec::CoshOdd { k: k_of(&a)? }
            }
            "cosh_pair" => {
                a.only(&["k", "b"])?;
                KernelSpec::CoshPair { k: k_of(&a)?, b: a.real("b")? }
            }
            other => return Err(Error::Parse(format!("unknown kernel {other:?}"))),
        };
        spec.validate().map_err(|e| Error::Parse(e.to_string()))?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosh_pi_census() {
        let poles = KernelSpec::CoshPi.poles_in_strip().unwrap();
        assert_eq!(poles.len(), 1);
        assert!((poles[0].location - c(0.0, -0.5)).norm() < 1e-15);
        assert!((poles[0].weight - c(0.0, 1.0 / PI)).norm() < 1e-15);
    }

    #[test]
    fn sinh_p_census_half_integer() {
        let poles = KernelSpec::SinhP { p: 2.5 }.poles_in_strip().unwrap();
        assert_eq!(poles.len(), 5);
        assert!(poles.iter().all(|p| !p.on_contour));
    }

    #[test]
    fn sinh_p_census_integer_has_edge_poles() {
        let poles = KernelSpec::SinhP { p: 2.0 }.poles_in_strip().unwrap();
        assert_eq!(poles.len(), 5);
        let edges: Vec<_> = poles.iter().filter(|p| p.on_contour).collect();
        assert_eq!(edges.len(), 2);
        assert!((poles[2].location - c(0.0, -0.5)).norm() < 1e-15);
        assert!((poles[3].location - c(0.0, -0.25)).norm() < 1e-15);
    }

    #[test]
    fn q_zero_is_infinite() {
        assert_eq!(KernelSpec::SinhPQ { q: 0.0, r: 1.0 }.poles_in_strip(), Err(Error::InfiniteCensus));
    }

    #[test]
    fn cosh_pair_counts() {
        assert_eq!(KernelSpec::CoshPair { k: 2, b: 0.4 }.poles_in_strip().unwrap().len(), 6);
        assert_eq!(KernelSpec::CoshPair { k: 2, b: 0.0 }.poles_in_strip().unwrap().len(), 3);
    }

    #[test]
    fn near_pole_refused() {
        let r = KernelSpec::CoshPi.kernel_eval(c(0.0, -0.5));
        assert!(matches!(r, Err(Error::NearPole { .. })));
        let r = KernelSpec::SinhP { p: 1.5 }.kernel_eval(c(1e-14, 0.0));
        assert!(r.is_ok());
    }

    #[test]
    fn constant_residue_is_one() {
        let v = KernelSpec::CoshPi
            .residue_sum(&IntegrandSpec::Constant, VariationMode::Single, c(1.0, 0.0))
            .unwrap();
        assert!((v - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn text_forms() {
        for t in [
            "cosh_pi",
            "sinh_p(p=2.5)",
            "sinh_pq(q=0.5,r=-1)",
            "sinh_cubed(q=1,r=0.25)",
            "sinh_4k(k=2)",
            "cosh_odd(k=3)",
            "cosh_pair(k=2,b=0.4)",
        ] {
            let k: KernelSpec = t.parse().unwrap();
            assert_eq!(k.to_string(), t);
        }
        assert!("sinh_p(p=-1)".parse::<KernelSpec>().is_err());
        assert!("cosh_odd(k=1.5)".parse::<KernelSpec>().is_err());
    }
}
