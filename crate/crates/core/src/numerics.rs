//! Special functions used by the closed forms.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex value used throughout the crate.
pub type ComplexValue = Complex64;

pub const I: ComplexValue = Complex64 { re: 0.0, im: 1.0 };

// Lanczos approximation, g = 671/128, 14 terms. Accurate to a few ulps of
// log Γ on Re z > 0.
const LANCZOS_G: f64 = 5.242_187_5;
const LANCZOS_C0: f64 = 0.999_999_999_999_997_1;
const LANCZOS: [f64; 14] = [
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_8e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_6e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];
const SQRT_2PI: f64 = 2.506_628_274_631_000_5;

fn ln_gamma_right(z: ComplexValue) -> ComplexValue {
    let mut y = z;
    let t = z + LANCZOS_G;
    let head = (z + 0.5) * t.ln() - t;
    let mut ser = Complex64::new(LANCZOS_C0, 0.0);
    for c in LANCZOS {
        y += 1.0;
        ser += c / y;
    }
    head + (ser * SQRT_2PI / z).ln()
}

fn ln_gamma_right_real(x: f64) -> f64 {
    let mut y = x;
    let t = x + LANCZOS_G;
    let head = (x + 0.5) * t.ln() - t;
    let mut ser = LANCZOS_C0;
    for c in LANCZOS {
        y += 1.0;
        ser += c / y;
    }
    head + (SQRT_2PI * ser / x).ln()
}

/// `ln sin(πz)` without overflow for large |Im z|; any branch.
fn ln_sin_pi(z: ComplexValue) -> ComplexValue {
    if z.im.abs() < 20.0 {
        return (z * PI).sin().ln();
    }
    // sin(πz) = e^{∓iπz}(1 - e^{±2iπz}) / (±2i), choosing the decaying exponential.
    let s = if z.im > 0.0 { 1.0 } else { -1.0 };
    let w = I * PI * z * s;
    let small = (w * 2.0).exp();
    -w + ((Complex64::new(1.0, 0.0) - small) / (I * 2.0 * s)).ln()
}

fn is_nonpositive_integer(z: ComplexValue) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// A logarithm of Γ(z). The imaginary part is not normalised to the principal
/// branch of log Γ, so only `exp` of this value (or of differences) is meaningful.
pub fn ln_gamma(z: ComplexValue) -> Result<ComplexValue> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain { function: "ln_gamma", value: z.re });
    }
    if is_nonpositive_integer(z) {
        return Err(Error::Pole { function: "ln_gamma", at: z });
    }
    if z.re >= 0.5 {
        Ok(ln_gamma_right(z))
    } else {
        let one = Complex64::new(1.0, 0.0);
        Ok(Complex64::new(PI.ln(), 0.0) - ln_sin_pi(z) - ln_gamma_right(one - z))
    }
}

/// `ln |Γ(x)|` for real x.
pub fn ln_gamma_real(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain { function: "ln_gamma_real", value: x });
    }
    if x <= 0.0 && x == x.round() {
        return Err(Error::Pole { function: "ln_gamma_real", at: Complex64::new(x, 0.0) });
    }
    if x >= 0.5 {
        Ok(ln_gamma_right_real(x))
    } else {
        Ok(PI.ln() - (PI * x).sin().abs().ln() - ln_gamma_right_real(1.0 - x))
    }
}

/// Γ(x) for real x.
pub fn gamma_real(x: f64) -> Result<f64> {
    if x <= 0.0 && x == x.round() {
        return Err(Error::Pole { function: "gamma", at: Complex64::new(x, 0.0) });
    }
    let v = if x >= 0.5 {
        ln_gamma_right_real(x).exp()
    } else {
        PI / ((PI * x).sin() * ln_gamma_right_real(1.0 - x).exp())
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain { function: "gamma", value: x })
    }
}

/// Complex Γ(z) via Lanczos with reflection for Re z < 1/2.
pub fn gamma(z: ComplexValue) -> Result<ComplexValue> {
    if z.im == 0.0 {
        return gamma_real(z.re).map(|v| Complex64::new(v, 0.0));
    }
    let v = if z.re >= 0.5 {
        ln_gamma_right(z).exp()
    } else {
        let one = Complex64::new(1.0, 0.0);
        PI / ((z * PI).sin() * ln_gamma_right(one - z).exp())
    };
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain { function: "gamma", value: z.re })
    }
}

/// ψ(z) = Γ'(z)/Γ(z).
pub fn digamma(z: ComplexValue) -> Result<ComplexValue> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole { function: "digamma", at: z });
    }
    let one = Complex64::new(1.0, 0.0);
    if z.re < 0.5 {
        // ψ(z) = ψ(1-z) - π cot(πz)
        let w = z * PI;
        return Ok(digamma(one - z)? - PI * w.cos() / w.sin());
    }
    let mut z = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while z.norm() < 15.0 {
        acc -= one / z;
        z += 1.0;
    }
    let r = one / z;
    let r2 = r * r;
    let tail = r2
        * (-1.0 / 12.0
            + r2 * (1.0 / 120.0
                + r2 * (-1.0 / 252.0
                    + r2 * (1.0 / 240.0 + r2 * (-1.0 / 132.0 + r2 * (691.0 / 32760.0 - r2 / 12.0))))));
    Ok(acc + z.ln() - r * 0.5 + tail)
}

/// ψ'(z).
pub fn trigamma(z: ComplexValue) -> Result<ComplexValue> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole { function: "trigamma", at: z });
    }
    let one = Complex64::new(1.0, 0.0);
    if z.re < 0.5 {
        // ψ'(z) = π²/sin²(πz) - ψ'(1-z)
        let s = (z * PI).sin();
        return Ok(PI * PI / (s * s) - trigamma(one - z)?);
    }
    let mut z = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while z.norm() < 15.0 {
        acc += one / (z * z);
        z += 1.0;
    }
    let r = one / z;
    let r2 = r * r;
    let tail = r
        + r2 * 0.5
        + r2 * r
            * (1.0 / 6.0
                + r2 * (-1.0 / 30.0
                    + r2 * (1.0 / 42.0
                        + r2 * (-1.0 / 30.0 + r2 * (5.0 / 66.0 + r2 * (-691.0 / 2730.0 + r2 * 7.0 / 6.0))))));
    Ok(acc + tail)
}

/// Series Σ xⁿ/n² for |x| ≤ 1/2.
fn dilog_series(x: f64) -> f64 {
    let mut term = x;
    let mut sum = 0.0;
    let mut n = 1.0_f64;
    while n < 200.0 {
        let add = term / (n * n);
        sum += add;
        if add.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
        term *= x;
        n += 1.0;
    }
    sum
}

/// Real dilogarithm Li₂(x) = -∫₀ˣ ln(1-t)/t dt for x ≤ 1.
pub fn dilog(x: f64) -> Result<f64> {
    if !(x <= 1.0) {
        return Err(Error::Domain { function: "dilog", value: x });
    }
    let z2 = PI * PI / 6.0;
    if x == 1.0 {
        return Ok(z2);
    }
    if x < 0.0 {
        // Landen: Li₂(x) = -Li₂(x/(x-1)) - ½ ln²(1-x), with x/(x-1) in (0, 1).
        let y = x / (x - 1.0);
        let l = (-x).ln_1p();
        return Ok(-dilog(y)? - 0.5 * l * l);
    }
    if x <= 0.5 {
        Ok(dilog_series(x))
    } else {
        // Euler reflection.
        Ok(z2 - x.ln() * (-x).ln_1p() - dilog_series(1.0 - x))
    }
}

/// Riemann ζ(s) for real s > 1, through the alternating η series accelerated
/// with Borwein's weights.
pub fn zeta_real(s: f64) -> Result<f64> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::Domain { function: "zeta_real", value: s });
    }
    const N: usize = 50;
    let n = N as f64;
    let mut d = [0.0_f64; N + 1];
    let mut term = 1.0_f64;
    let mut acc = 1.0_f64;
    d[0] = 1.0;
    for i in 1..=N {
        let fi = i as f64;
        term *= 4.0 * (n + fi - 1.0) * (n - fi + 1.0) / ((2.0 * fi) * (2.0 * fi - 1.0));
        acc += term;
        d[i] = acc;
    }
    let dn = d[N];
    let mut eta = 0.0;
    for k in 0..N {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        eta += sign * (dn - d[k]) / ((k + 1) as f64).powf(s);
    }
    eta /= dn;
    let denom = -((1.0 - s) * std::f64::consts::LN_2).exp_m1();
    Ok(eta / denom)
}

/// Strict floor: the greatest integer strictly less than x, so `floor_int(2.0) == 1`.
pub fn floor_int(x: f64) -> Result<i64> {
    if !x.is_finite() || x.abs() > 9.0e15 {
        return Err(Error::Domain { function: "floor_int", value: x });
    }
    let f = x.floor();
    Ok(if f == x { f as i64 - 1 } else { f as i64 })
}

/// `(-1)^n` as f64.
#[inline]
pub fn sign_pow(n: i64) -> f64 {
    if n.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// True when x is within `tol` of an integer.
pub fn near_integer(x: f64, tol: f64) -> bool {
    (x - x.round()).abs() <= tol
}

/// Principal power `z^s`, exact for integer real exponents.
pub fn cpow(z: ComplexValue, s: ComplexValue) -> ComplexValue {
    if s.im == 0.0 && s.re == s.re.round() && s.re.abs() < 64.0 {
        return z.powi(s.re as i32);
    }
    if z.re == 0.0 && z.im == 0.0 {
        return if s.re > 0.0 { Complex64::new(0.0, 0.0) } else { Complex64::new(f64::INFINITY, 0.0) };
    }
    (s * z.ln()).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strict_floor() {
        assert_eq!(floor_int(2.0).unwrap(), 1);
        assert_eq!(floor_int(2.3).unwrap(), 2);
        assert_eq!(floor_int(-2.5).unwrap(), -3);
        assert_eq!(floor_int(-2.0).unwrap(), -3);
        assert_eq!(floor_int(0.0).unwrap(), -1);
        assert!(floor_int(f64::NAN).is_err());
    }

    #[test]
    fn gamma_small_integers() {
        let mut f = 1.0;
        for n in 1..20 {
            let g = gamma(Complex64::new(n as f64, 0.0)).unwrap();
            assert!((g.re - f).abs() <= 1e-14 * f, "n={n}");
            f *= n as f64;
        }
    }

    #[test]
    fn gamma_pole() {
        assert!(matches!(gamma(Complex64::new(-3.0, 0.0)), Err(Error::Pole { .. })));
        assert!(matches!(gamma(Complex64::new(0.0, 0.0)), Err(Error::Pole { .. })));
    }

    #[test]
    fn gamma_half() {
        let g = gamma(Complex64::new(0.5, 0.0)).unwrap();
        assert!((g.re - PI.sqrt()).abs() < 1e-15);
        let g = gamma(Complex64::new(-0.5, 0.0)).unwrap();
        assert!((g.re + 2.0 * PI.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn dilog_special_values() {
        assert!((dilog(1.0).unwrap() - PI * PI / 6.0).abs() < 1e-15);
        assert!((dilog(-1.0).unwrap() + PI * PI / 12.0).abs() < 1e-15);
        let l2 = std::f64::consts::LN_2;
        assert!((dilog(0.5).unwrap() - (PI * PI / 12.0 - l2 * l2 / 2.0)).abs() < 1e-15);
        assert_eq!(dilog(0.0).unwrap(), 0.0);
        assert!(dilog(1.5).is_err());
    }

    #[test]
    fn zeta_values() {
        assert!((zeta_real(2.0).unwrap() - PI * PI / 6.0).abs() < 1e-14);
        assert!((zeta_real(4.0).unwrap() - PI.powi(4) / 90.0).abs() < 1e-14);
        assert!(zeta_real(1.0).is_err());
    }

    #[test]
    fn digamma_trigamma() {
        let euler = 0.577_215_664_901_532_9;
        let d = digamma(Complex64::new(1.0, 0.0)).unwrap();
        assert!((d.re + euler).abs() < 1e-14);
        let t = trigamma(Complex64::new(1.0, 0.0)).unwrap();
        assert!((t.re - PI * PI / 6.0).abs() < 1e-14);
        let t = trigamma(Complex64::new(0.5, 0.0)).unwrap();
        assert!((t.re - PI * PI / 2.0).abs() < 1e-13);
        let d = digamma(Complex64::new(-0.5, 0.0)).unwrap();
        assert!((d.re - (2.0 - euler - 2.0 * std::f64::consts::LN_2)).abs() < 1e-13);
    }
}
