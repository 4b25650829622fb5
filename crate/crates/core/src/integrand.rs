//! Integrand families `F` and the parity combinations built from them.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{cpow, digamma, ln_gamma, trigamma, ComplexValue, I};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IntegrandSpec {
    /// F(z) = 1
    Constant,
    /// F(z) = z^s (principal branch)
    PowerZ { s: ComplexValue },
    /// F(z) = (z - ib)^(-s)
    ShiftedPower { s: ComplexValue, b: f64 },
    /// F(z) = e^(-bz)
    ExpLinear { b: ComplexValue },
    /// F(z) = z^s sin z
    PowerSin { s: ComplexValue },
    /// F(z) = z^s cos z
    PowerCos { s: ComplexValue },
    /// F(z) = z^s e^(-bz)
    PowerExp { s: ComplexValue, b: ComplexValue },
    /// F(z) = Γ(α+z)/Γ(β+z)
    GammaRatio { alpha: f64, beta: f64 },
    /// F(z) = cosh(bz)
    EvenFactor { b: f64 },
    /// F(z) = sinh(bz)
    OddFactor { b: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
    Neither,
}

/// How F enters the integrand. `Single` is `F(a x(x+i))`; the others combine
/// `F(ax)` and `F(a(x+i))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VariationMode {
    Single,
    /// F(ax)·F(a(x+i)), F even or odd
    ProductParity,
    /// F(ax) + F(a(x+i)), F even
    SumEven,
    /// F(ax) - F(a(x+i)), F odd
    DiffOdd,
    /// F(ax)² + F(a(x+i))², F odd
    SumOddSquares,
    /// Fo(ax)·Fe(a(x+i)) - Fe(ax)·Fo(a(x+i)) for a matched odd/even pair
    CrossParity,
}

impl VariationMode {
    pub const ALL: [VariationMode; 6] = [
        VariationMode::Single,
        VariationMode::ProductParity,
        VariationMode::SumEven,
        VariationMode::DiffOdd,
        VariationMode::SumOddSquares,
        VariationMode::CrossParity,
    ];
}

fn is_int(s: ComplexValue) -> Option<i64> {
    (s.im == 0.0 && s.re == s.re.round() && s.re.abs() < 1e6).then_some(s.re as i64)
}

fn zero() -> ComplexValue {
    Complex64::new(0.0, 0.0)
}

impl IntegrandSpec {
    /// Principal power `z^s` with the pole and cut checks shared by the power families.
    fn power(s: ComplexValue, z: ComplexValue, name: &'static str) -> Result<ComplexValue> {
        if z == zero() {
            return if s == zero() {
                Ok(Complex64::new(1.0, 0.0))
            } else if s.re > 0.0 {
                Ok(zero())
            } else {
                Err(Error::Pole { function: name, at: z })
            };
        }
        if is_int(s).is_none() && z.im == 0.0 && z.re < 0.0 {
            return Err(Error::BranchCut { at: z });
        }
        Ok(cpow(z, s))
    }

    pub fn eval(&self, z: ComplexValue) -> Result<ComplexValue> {
        let v = match *self {
            IntegrandSpec::Constant => Complex64::new(1.0, 0.0),
            IntegrandSpec::PowerZ { s } => Self::power(s, z, "powz")?,
            IntegrandSpec::ShiftedPower { s, b } => Self::power(-s, z - I * b, "shifted_pow")?,
            IntegrandSpec::ExpLinear { b } => (-b * z).exp(),
            IntegrandSpec::PowerSin { s } => Self::power(s, z, "powsin")? * z.sin(),
            IntegrandSpec::PowerCos { s } => Self::power(s, z, "powcos")? * z.cos(),
            IntegrandSpec::PowerExp { s, b } => Self::power(s, z, "powexp")? * (-b * z).exp(),
            IntegrandSpec::GammaRatio { alpha, beta } => {
                let num = ln_gamma(z + alpha).map_err(|_| Error::Pole { function: "gamma_ratio", at: z })?;
                match ln_gamma(z + beta) {
                    Ok(den) => (num - den).exp(),
                    Err(Error::Pole { .. }) => zero(),
                    Err(e) => return Err(e),
                }
            }
            IntegrandSpec::EvenFactor { b } => (z * b).cosh(),
            IntegrandSpec::OddFactor { b } => (z * b).sinh(),
        };
        Ok(v)
    }

    /// Closed-form derivative of order 1 or 2.
    pub fn deriv(&self, order: u32, z: ComplexValue) -> Result<ComplexValue> {
        if order == 0 {
            return self.eval(z);
        }
        if order > 2 {
            return Err(Error::DerivativeUnavailable { order });
        }
        let one = Complex64::new(1.0, 0.0);
        // z^s and its first two derivatives.
        let pw = |s: ComplexValue, name| -> Result<[ComplexValue; 3]> {
            Ok([
                Self::power(s, z, name)?,
                if s == zero() { zero() } else { s * Self::power(s - one, z, name)? },
                if s == zero() || s == one { zero() } else { s * (s - one) * Self::power(s - 2.0, z, name)? },
            ])
        };
        let v = match *self {
            IntegrandSpec::Constant => zero(),
            IntegrandSpec::PowerZ { s } => pw(s, "powz")?[order as usize],
            IntegrandSpec::ShiftedPower { s, b } => {
                let w = z - I * b;
                if order == 1 {
                    -s * Self::power(-s - one, w, "shifted_pow")?
                } else {
                    s * (s + one) * Self::power(-s - 2.0, w, "shifted_pow")?
                }
            }
            IntegrandSpec::ExpLinear { b } => {
                let e = (-b * z).exp();
                if order == 1 {
                    -b * e
                } else {
                    b * b * e
                }
            }
            IntegrandSpec::PowerSin { s } => {
                let p = pw(s, "powsin")?;
                let (sn, cs) = (z.sin(), z.cos());
                if order == 1 {
                    p[1] * sn + p[0] * cs
                } else {
                    p[2] * sn + p[1] * cs * 2.0 - p[0] * sn
                }
            }
            IntegrandSpec::PowerCos { s } => {
                let p = pw(s, "powcos")?;
                let (sn, cs) = (z.sin(), z.cos());
                if order == 1 {
                    p[1] * cs - p[0] * sn
                } else {
                    p[2] * cs - p[1] * sn * 2.0 - p[0] * cs
                }
            }
            IntegrandSpec::PowerExp { s, b } => {
                let p = pw(s, "powexp")?;
                let e = (-b * z).exp();
                if order == 1 {
                    (p[1] - b * p[0]) * e
                } else {
                    (p[2] - b * p[1] * 2.0 + b * b * p[0]) * e
                }
            }
            IntegrandSpec::GammaRatio { alpha, beta } => {
                let f = self.eval(z)?;
                let d = digamma(z + alpha)? - digamma(z + beta)?;
                if order == 1 {
                    f * d
                } else {
                    f * (d * d + trigamma(z + alpha)? - trigamma(z + beta)?)
                }
            }
            IntegrandSpec::EvenFactor { b } => {
                if order == 1 {
                    (z * b).sinh() * b
                } else {
                    (z * b).cosh() * b * b
                }
            }
            IntegrandSpec::OddFactor { b } => {
                if order == 1 {
                    (z * b).cosh() * b
                } else {
                    (z * b).sinh() * b * b
                }
            }
        };
        Ok(v)
    }

    pub fn parity(&self) -> Parity {
        let by_int = |s: ComplexValue, shift: i64| match is_int(s) {
            Some(n) if n >= 0 => {
                if (n + shift) % 2 == 0 {
                    Parity::Even
                } else {
                    Parity::Odd
                }
            }
            _ => Parity::Neither,
        };
        match *self {
            IntegrandSpec::Constant => Parity::Even,
            IntegrandSpec::PowerZ { s } => by_int(s, 0),
            IntegrandSpec::PowerSin { s } => by_int(s, 1),
            IntegrandSpec::PowerCos { s } => by_int(s, 0),
            IntegrandSpec::ExpLinear { b } if b == zero() => Parity::Even,
            IntegrandSpec::PowerExp { s, b } if b == zero() => by_int(s, 0),
            IntegrandSpec::EvenFactor { .. } => Parity::Even,
            IntegrandSpec::OddFactor { .. } => Parity::Odd,
            _ => Parity::Neither,
        }
    }

    /// Finite singular points of F, each with whether a principal-branch cut
    /// runs from it towards -∞. Gamma-ratio poles are listed up to 64 deep and
    /// possible cancellations against the denominator are ignored.
    pub fn singularities(&self) -> Vec<(ComplexValue, bool)> {
        let at_origin = |s: ComplexValue| match is_int(s) {
            Some(n) if n >= 0 => vec![],
            Some(_) => vec![(zero(), false)],
            None => vec![(zero(), true)],
        };
        match *self {
            IntegrandSpec::Constant
            | IntegrandSpec::ExpLinear { .. }
            | IntegrandSpec::EvenFactor { .. }
            | IntegrandSpec::OddFactor { .. } => vec![],
            IntegrandSpec::PowerZ { s }
            | IntegrandSpec::PowerSin { s }
            | IntegrandSpec::PowerCos { s }
            | IntegrandSpec::PowerExp { s, .. } => at_origin(s),
            IntegrandSpec::ShiftedPower { s, b } => {
                at_origin(-s).into_iter().map(|(_, cut)| (I * b, cut)).collect()
            }
            IntegrandSpec::GammaRatio { alpha, .. } => {
                (0..64).map(|n| (Complex64::new(-alpha - n as f64, 0.0), false)).collect()
            }
        }
    }

    /// The (odd, even) pair used by [`VariationMode::CrossParity`].
    pub fn cross_pair(&self) -> Option<(IntegrandSpec, IntegrandSpec)> {
        match *self {
            IntegrandSpec::EvenFactor { b } | IntegrandSpec::OddFactor { b } => {
                Some((IntegrandSpec::OddFactor { b }, IntegrandSpec::EvenFactor { b }))
            }
            IntegrandSpec::PowerSin { s } | IntegrandSpec::PowerCos { s } => match is_int(s) {
                Some(n) if n >= 0 && n % 2 == 0 => Some((IntegrandSpec::PowerSin { s }, IntegrandSpec::PowerCos { s })),
                _ => None,
            },
            _ => None,
        }
    }

}

/// Checks that F has the parity the mode needs.
pub fn check_mode(f: &IntegrandSpec, mode: VariationMode) -> Result<()> {
    let p = f.parity();
    let ok = match mode {
        VariationMode::Single => true,
        VariationMode::ProductParity => p != Parity::Neither,
        VariationMode::SumEven => p == Parity::Even,
        VariationMode::DiffOdd | VariationMode::SumOddSquares => p == Parity::Odd,
        VariationMode::CrossParity => f.cross_pair().is_some(),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Parity(format!("{mode:?} is not defined for {f} (parity {p:?})")))
    }
}

/// The combination for a variation mode evaluated at `u = ax`, `v = a(x+i)`.
/// Not defined for `Single`, which needs the product argument instead.
pub fn pair_eval(f: &IntegrandSpec, mode: VariationMode, u: ComplexValue, v: ComplexValue) -> Result<ComplexValue> {
    check_mode(f, mode)?;
    Ok(match mode {
        VariationMode::Single => {
            return Err(Error::Parity("pair_eval needs a two-argument mode".into()));
        }
        VariationMode::ProductParity => f.eval(u)? * f.eval(v)?,
        VariationMode::SumEven => f.eval(u)? + f.eval(v)?,
        VariationMode::DiffOdd => f.eval(u)? - f.eval(v)?,
        VariationMode::SumOddSquares => {
            let (fu, fv) = (f.eval(u)?, f.eval(v)?);
            fu * fu + fv * fv
        }
        VariationMode::CrossParity => {
            let (fo, fe) = f.cross_pair().expect("checked");
            fo.eval(u)? * fe.eval(v)? - fe.eval(u)? * fo.eval(v)?
        }
    })
}

/// The integrand factor `G(x)` for a mode: `F(a x(x+i))` for `Single`, otherwise
/// the pair combination at `ax`, `a(x+i)`.
pub fn combined_eval(f: &IntegrandSpec, mode: VariationMode, a: ComplexValue, x: ComplexValue) -> Result<ComplexValue> {
    match mode {
        VariationMode::Single => f.eval(a * x * (x + I)),
        _ => pair_eval(f, mode, a * x, a * (x + I)),
    }
}

/// `[G, G', G'']` with derivatives taken in x.
pub fn combined_derivs(
    f: &IntegrandSpec,
    mode: VariationMode,
    a: ComplexValue,
    x: ComplexValue,
) -> Result<[ComplexValue; 3]> {
    check_mode(f, mode)?;
    if mode == VariationMode::Single {
        let z = a * x * (x + I);
        let dz = a * (x * 2.0 + I);
        let ddz = a * 2.0;
        let (f0, f1, f2) = (f.eval(z)?, f.deriv(1, z)?, f.deriv(2, z)?);
        return Ok([f0, f1 * dz, f2 * dz * dz + f1 * ddz]);
    }
    let (u, v) = (a * x, a * (x + I));
    let d = |g: &IntegrandSpec, w: ComplexValue| -> Result<[ComplexValue; 3]> {
        Ok([g.eval(w)?, g.deriv(1, w)? * a, g.deriv(2, w)? * a * a])
    };
    // Product rule for g(u)·h(v).
    let prod = |g: [ComplexValue; 3], h: [ComplexValue; 3]| -> [ComplexValue; 3] {
        [g[0] * h[0], g[1] * h[0] + g[0] * h[1], g[2] * h[0] + g[1] * h[1] * 2.0 + g[0] * h[2]]
    };
    Ok(match mode {
        VariationMode::Single => unreachable!(),
        VariationMode::ProductParity => prod(d(f, u)?, d(f, v)?),
        VariationMode::SumEven => {
            let (p, q) = (d(f, u)?, d(f, v)?);
            [p[0] + q[0], p[1] + q[1], p[2] + q[2]]
        }
        VariationMode::DiffOdd => {
            let (p, q) = (d(f, u)?, d(f, v)?);
            [p[0] - q[0], p[1] - q[1], p[2] - q[2]]
        }
        VariationMode::SumOddSquares => {
            let (p, q) = (d(f, u)?, d(f, v)?);
            let (pp, qq) = (prod(p, p), prod(q, q));
            [pp[0] + qq[0], pp[1] + qq[1], pp[2] + qq[2]]
        }
        VariationMode::CrossParity => {
            let (fo, fe) = f.cross_pair().expect("checked");
            let l = prod(d(&fo, u)?, d(&fe, v)?);
            let r = prod(d(&fe, u)?, d(&fo, v)?);
            [l[0] - r[0], l[1] - r[1], l[2] - r[2]]
        }
    })
}

/// Heuristic check that `G(x)` grows more slowly than `e^{π|x|}/|x|` on both
/// edges of the strip, the decay premise of the main theorem.
pub fn validate_growth(f: &IntegrandSpec, mode: VariationMode, a: ComplexValue) -> (bool, String) {
    validate_growth_with_rate(f, mode, a, std::f64::consts::PI)
}

/// As [`validate_growth`] against a kernel decaying like `e^{-rate|x|}`.
pub fn validate_growth_with_rate(f: &IntegrandSpec, mode: VariationMode, a: ComplexValue, rate: f64) -> (bool, String) {
    if check_mode(f, mode).is_err() {
        return (false, format!("mode {mode:?} does not apply to {f}"));
    }
    let radii = [5.0, 10.0, 20.0, 40.0];
    let mut worst = [0.0_f64; 4];
    for (k, &r) in radii.iter().enumerate() {
        for &re in &[r, -r] {
            for &im in &[0.0, -1.0] {
                let x = Complex64::new(re, im);
                let m = match combined_eval(f, mode, a, x) {
                    Ok(g) => g.norm() * r * (-rate * r).exp(),
                    Err(_) => 0.0,
                };
                let m = if m.is_finite() { m } else { f64::INFINITY };
                worst[k] = worst[k].max(m);
            }
        }
    }
    let decreasing = worst[2] <= worst[1] * 1.0001 + 1e-300 && worst[3] <= worst[2] * 1.0001 + 1e-300;
    let ok = decreasing && worst[3] < 1e-6;
    (
        ok,
        format!(
            "|G(x)|·|x|·e^(-{rate}|x|) at |x| = 5, 10, 20, 40: {:.3e}, {:.3e}, {:.3e}, {:.3e}",
            worst[0], worst[1], worst[2], worst[3]
        ),
    )
}

// Text form ----------------------------------------------------------------

pub(crate) fn fmt_complex(z: ComplexValue) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}i", z.im)
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

pub(crate) fn parse_complex(text: &str) -> Result<ComplexValue> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("not a number: {text:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|r| Complex64::new(r, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let im_of = |s: &str| -> Result<f64> {
        match s {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => s.parse::<f64>().map_err(|_| bad()),
        }
    };
    match split {
        Some(k) => {
            let re = body[..k].parse::<f64>().map_err(|_| bad())?;
            Ok(Complex64::new(re, im_of(&body[k..])?))
        }
        None => Ok(Complex64::new(0.0, im_of(body)?)),
    }
}

/// Splits `name(k=v, ...)` into the name and its key/value pairs.
pub(crate) fn parse_call(text: &str) -> Result<(String, Vec<(String, String)>)> {
    let t = text.trim();
    let Some(open) = t.find('(') else {
        return Ok((t.to_string(), Vec::new()));
    };
    let inner = t[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| Error::Parse(format!("missing ')' in {text:?}")))?;
    let mut args = Vec::new();
    for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got {part:?}")))?;
        args.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok((t[..open].trim().to_string(), args))
}

pub(crate) struct Args(Vec<(String, String)>, String);

impl Args {
    pub(crate) fn new(args: Vec<(String, String)>, name: &str) -> Self {
        Args(args, name.to_string())
    }

    pub(crate) fn complex(&self, key: &str) -> Result<ComplexValue> {
        let v = self
            .0
            .iter()
            .find(|(k, _)| k == key)
            .ok_or_else(|| Error::Parse(format!("{} needs {key}", self.1)))?;
        parse_complex(&v.1)
    }

    pub(crate) fn real(&self, key: &str) -> Result<f64> {
        let z = self.complex(key)?;
        if z.im != 0.0 {
            return Err(Error::Parse(format!("{key} must be real in {}", self.1)));
        }
        Ok(z.re)
    }

    pub(crate) fn only(&self, keys: &[&str]) -> Result<()> {
        match self.0.iter().find(|(k, _)| !keys.contains(&k.as_str())) {
            Some((k, _)) => Err(Error::Parse(format!("unexpected key {k} for {}", self.1))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for IntegrandSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = fmt_complex;
        match *self {
            IntegrandSpec::Constant => write!(f, "const"),
            IntegrandSpec::PowerZ { s } => write!(f, "powz(s={})", c(s)),
            IntegrandSpec::ShiftedPower { s, b } => write!(f, "shifted_pow(s={},b={})", c(s), b),
            IntegrandSpec::ExpLinear { b } => write!(f, "expl(b={})", c(b)),
            IntegrandSpec::PowerSin { s } => write!(f, "powsin(s={})", c(s)),
            IntegrandSpec::PowerCos { s } => write!(f, "powcos(s={})", c(s)),
            IntegrandSpec::PowerExp { s, b } => write!(f, "powexp(s={},b={})", c(s), c(b)),
            IntegrandSpec::GammaRatio { alpha, beta } => write!(f, "gamma_ratio(alpha={alpha},beta={beta})"),
            IntegrandSpec::EvenFactor { b } => write!(f, "even_cosh(b={b})"),
            IntegrandSpec::OddFactor { b } => write!(f, "odd_sinh(b={b})"),
        }
    }
}

impl FromStr for IntegrandSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (name, args) = parse_call(text)?;
        let a = Args::new(args, &name);
        let spec = match name.as_str() {
            "const" => {
                a.only(&[])?;
                IntegrandSpec::Constant
            }
            "powz" => {
                a.only(&["s"])?;
                IntegrandSpec::PowerZ { s: a.complex("s")? }
            }
            "shifted_pow" => {
                a.only(&["s", "b"])?;
                IntegrandSpec::ShiftedPower { s: a.complex("s")?, b: a.real("b")? }
            }
            "expl" => {
                a.only(&["b"])?;
                IntegrandSpec::ExpLinear { b: a.complex("b")? }
            }
            "powsin" => {
                a.only(&["s"])?;
                IntegrandSpec::PowerSin { s: a.complex("s")? }
            }
            "powcos" => {
                a.only(&["s"])?;
                IntegrandSpec::PowerCos { s: a.complex("s")? }
            }
            "powexp" => {
                a.only(&["s", "b"])?;
                IntegrandSpec::PowerExp { s: a.complex("s")?, b: a.complex("b")? }
            }
            "gamma_ratio" => {
                a.only(&["alpha", "beta"])?;
                IntegrandSpec::GammaRatio { alpha: a.real("alpha")?, beta: a.real("beta")? }
            }
            "even_cosh" => {
                a.only(&["b"])?;
                IntegrandSpec::EvenFactor { b: a.real("b")? }
            }
            "odd_sinh" => {
                a.only(&["b"])?;
                IntegrandSpec::OddFactor { b: a.real("b")? }
            }
            other => return Err(Error::Parse(format!("unknown integrand {other:?}"))),
        };
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        Complex64::new(re, im)
    }

    #[test]
    fn constant_at_centre() {
        let g = combined_eval(&IntegrandSpec::Constant, VariationMode::Single, c(1.0, 0.0), c(0.0, -0.5)).unwrap();
        assert_eq!(g, c(1.0, 0.0));
    }

    #[test]
    fn power_square() {
        let v = IntegrandSpec::PowerZ { s: c(2.0, 0.0) }.eval(c(1.0, 1.0)).unwrap();
        assert!((v - c(0.0, 2.0)).norm() < 1e-15);
    }

    #[test]
    fn power_pole_at_zero() {
        let r = IntegrandSpec::PowerZ { s: c(-1.0, 0.0) }.eval(c(0.0, 0.0));
        assert!(matches!(r, Err(Error::Pole { .. })));
    }

    #[test]
    fn gamma_ratio_pole() {
        let f = IntegrandSpec::GammaRatio { alpha: 0.5, beta: 1.5 };
        assert!(matches!(f.eval(c(-0.5, 0.0)), Err(Error::Pole { .. })));
        let v = f.eval(c(0.0, 0.0)).unwrap();
        assert!((v.re - 2.0).abs() < 1e-14);
    }

    #[test]
    fn product_mode_needs_parity() {
        let f = IntegrandSpec::ExpLinear { b: c(1.0, 0.0) };
        assert!(matches!(
            combined_eval(&f, VariationMode::ProductParity, c(1.0, 0.0), c(0.3, -0.2)),
            Err(Error::Parity(_))
        ));
    }

    #[test]
    fn growth_checks() {
        let (ok, _) = validate_growth(&IntegrandSpec::PowerSin { s: c(0.0, 0.0) }, VariationMode::Single, c(8.0, 0.0));
        assert!(!ok);
        let (ok, _) = validate_growth(&IntegrandSpec::ExpLinear { b: c(1.0, 0.0) }, VariationMode::Single, c(1.0, 0.0));
        assert!(ok);
        let (ok, _) = validate_growth(&IntegrandSpec::Constant, VariationMode::Single, c(1.0, 0.0));
        assert!(ok);
    }

    #[test]
    fn text_round_trip() {
        for text in [
            "const",
            "powz(s=1.5)",
            "expl(b=2)",
            "gamma_ratio(alpha=0.8,beta=2.8)",
            "shifted_pow(s=0.5+0.25i,b=1)",
            "powexp(s=1,b=-0.5i)",
            "even_cosh(b=0.3)",
            "odd_sinh(b=0.3)",
        ] {
            let f: IntegrandSpec = text.parse().unwrap();
            assert_eq!(f.to_string(), text);
        }
        assert!("nope(s=1)".parse::<IntegrandSpec>().is_err());
        assert!("powz(t=1)".parse::<IntegrandSpec>().is_err());
    }

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("1.5").unwrap(), c(1.5, 0.0));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("1e-3-2i").unwrap(), c(1e-3, -2.0));
        assert_eq!(parse_complex("2.5e+1+1e-2i").unwrap(), c(25.0, 0.01));
        assert!(parse_complex("x").is_err());
    }
}
