//! Registry of named identities. Each entry pairs a quadrature recipe for the
//! left-hand side with a closed form for the right-hand side, over a window of
//! admissible parameters.

mod chirp;
mod cutpole;
mod elementary;
mod gaussian;
mod io;
mod squares;
mod theorem_entries;

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::Instant;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::ComplexValue;
use crate::quadrature::{QuadratureOptions, QuadratureResult};
use crate::theorems::{integrate_lhs, rhs as theorem_rhs, TheoremInstance};

pub use io::{
    records_from_csv, records_from_json, records_to_csv, records_to_json, sweep_from_csv, sweep_to_csv, SweepRow,
};

pub type Params = BTreeMap<String, f64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ToleranceClass {
    Tight,
    Standard,
    Oscillatory,
}

impl ToleranceClass {
    pub fn tol(self) -> f64 {
        match self {
            ToleranceClass::Tight => 1e-9,
            ToleranceClass::Standard => 1e-7,
            ToleranceClass::Oscillatory => 1e-5,
        }
    }
}

/// A named parameter with its admissible window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub lo: f64,
    pub hi: f64,
    pub lo_open: bool,
    pub hi_open: bool,
    pub integer: bool,
    pub exclude_integers: bool,
    pub default: f64,
}

impl ParamSpec {
    pub const fn closed(name: &'static str, lo: f64, hi: f64, default: f64) -> Self {
        ParamSpec { name, lo, hi, lo_open: false, hi_open: false, integer: false, exclude_integers: false, default }
    }

    pub const fn int(name: &'static str, lo: f64, hi: f64, default: f64) -> Self {
        ParamSpec { integer: true, ..ParamSpec::closed(name, lo, hi, default) }
    }

    pub const fn open_lo(self) -> Self {
        ParamSpec { lo_open: true, ..self }
    }

    pub const fn open_hi(self) -> Self {
        ParamSpec { hi_open: true, ..self }
    }

    pub const fn no_integers(self) -> Self {
        ParamSpec { exclude_integers: true, ..self }
    }

    pub fn contains(&self, v: f64) -> bool {
        let above = if self.lo_open { v > self.lo } else { v >= self.lo };
        let below = if self.hi_open { v < self.hi } else { v <= self.hi };
        let int_ok = !self.integer || v == v.round();
        let excl_ok = !self.exclude_integers || v != v.round();
        v.is_finite() && above && below && int_ok && excl_ok
    }

    pub fn window(&self) -> String {
        let mut w = format!(
            "{}{}, {}{}",
            if self.lo_open { "(" } else { "[" },
            self.lo,
            self.hi,
            if self.hi_open { ")" } else { "]" }
        );
        if self.integer {
            w.push_str(" integer");
        }
        if self.exclude_integers {
            w.push_str(" non-integer");
        }
        w
    }

    fn check(&self, v: f64) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::ParamWindow { name: self.name.to_string(), value: v, window: self.window() })
        }
    }
}

pub type Lhs = fn(&Params, &QuadratureOptions) -> Result<QuadratureResult>;
pub type Rhs = fn(&Params, &QuadratureOptions) -> Result<ComplexValue>;
pub type Guard = fn(&Params) -> Result<()>;

/// How the two sides of an entry are computed.
#[derive(Clone, Copy)]
pub enum Recipe {
    /// Both sides come from a theorem instance built from the parameters.
    Theorem(fn(&Params) -> Result<TheoremInstance>),
    Direct { lhs: Lhs, rhs: Rhs },
}

#[derive(Clone)]
pub struct CatalogEntry {
    pub id: &'static str,
    /// Short description of the identity.
    pub label: &'static str,
    pub params: Vec<ParamSpec>,
    pub tolerance: ToleranceClass,
    /// Joint constraints that a per-parameter window cannot express.
    pub guard: Option<Guard>,
    /// Caveats, e.g. where the window departs from the literal statement.
    pub note: Option<&'static str>,
    pub recipe: Recipe,
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry").field("id", &self.id).field("params", &self.params).finish()
    }
}

impl CatalogEntry {
    pub fn defaults(&self) -> Params {
        self.params.iter().map(|p| (p.name.to_string(), p.default)).collect()
    }

    pub fn param(&self, name: &str) -> Option<&ParamSpec> {
        self.params.iter().find(|p| p.name == name)
    }

    /// Defaults overridden by `given`, checked against every window and the guard.
    pub fn bind(&self, given: &Params) -> Result<Params> {
        let mut out = self.defaults();
        for (k, v) in given {
            match out.get_mut(k) {
                Some(slot) => *slot = *v,
                None => {
                    return Err(Error::ParamWindow {
                        name: k.clone(),
                        value: *v,
                        window: format!("not a parameter of {}", self.id),
                    })
                }
            }
        }
        for spec in &self.params {
            spec.check(out[spec.name])?;
        }
        if let Some(g) = self.guard {
            g(&out)?;
        }
        Ok(out)
    }

    pub fn lhs(&self, p: &Params, opts: &QuadratureOptions) -> Result<QuadratureResult> {
        match self.recipe {
            Recipe::Theorem(build) => integrate_lhs(&build(p)?, opts),
            Recipe::Direct { lhs, .. } => lhs(p, opts),
        }
    }

    pub fn rhs(&self, p: &Params, opts: &QuadratureOptions) -> Result<ComplexValue> {
        match self.recipe {
            Recipe::Theorem(build) => theorem_rhs(&build(p)?, opts),
            Recipe::Direct { rhs, .. } => rhs(p, opts),
        }
    }
}

/// Every registered identity, in a fixed order.
pub fn entries() -> &'static [CatalogEntry] {
    static REGISTRY: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut v = theorem_entries::entries();
        v.extend(squares::entries());
        v.extend(cutpole::entries());
        v.extend(chirp::entries());
        v.extend(gaussian::entries());
        v.extend(elementary::entries());
        v
    })
}

pub fn find(id: &str) -> Result<&'static CatalogEntry> {
    entries()
        .iter()
        .find(|e| e.id.eq_ignore_ascii_case(id.trim()))
        .ok_or_else(|| Error::UnknownCase(id.to_string()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LhsSummary {
    #[serde(with = "nullable")]
    pub re: f64,
    #[serde(with = "nullable")]
    pub im: f64,
    #[serde(with = "nullable")]
    pub err: f64,
    pub evals: u64,
    pub flags: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RhsSummary {
    #[serde(with = "nullable")]
    pub re: f64,
    #[serde(with = "nullable")]
    pub im: f64,
}

/// One comparison of the two sides of an entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub case: String,
    pub params: Params,
    pub lhs: LhsSummary,
    pub rhs: RhsSummary,
    #[serde(with = "nullable")]
    pub abs_err: f64,
    #[serde(with = "nullable")]
    pub rel_err: f64,
    pub pass: bool,
    pub ms: f64,
    /// Set when either side could not be evaluated.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl VerificationRecord {
    pub fn lhs_value(&self) -> ComplexValue {
        Complex64::new(self.lhs.re, self.lhs.im)
    }

    pub fn rhs_value(&self) -> ComplexValue {
        Complex64::new(self.rhs.re, self.rhs.im)
    }

    fn failed(case: &str, params: Params, err: &Error, ms: f64) -> Self {
        VerificationRecord {
            case: case.to_string(),
            params,
            lhs: LhsSummary { re: f64::NAN, im: f64::NAN, err: f64::NAN, evals: 0, flags: Vec::new() },
            rhs: RhsSummary { re: f64::NAN, im: f64::NAN },
            abs_err: f64::NAN,
            rel_err: f64::NAN,
            pass: false,
            ms,
            error: Some(err.to_string()),
        }
    }
}

/// Non-finite numbers travel as JSON `null`.
mod nullable {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
    }
}

fn elapsed_ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Evaluates both sides of `id` at `params` (missing names take their defaults)
/// and compares them at the entry's tolerance class.
pub fn verify(id: &str, params: &Params, opts: &QuadratureOptions) -> Result<VerificationRecord> {
    verify_with_tol(id, params, opts, None)
}

/// As [`verify`], with an optional tolerance overriding the entry's class.
pub fn verify_with_tol(id: &str, params: &Params, opts: &QuadratureOptions, tol: Option<f64>) -> Result<VerificationRecord> {
    let entry = find(id)?;
    let p = entry.bind(params)?;
    let start = Instant::now();
    let lhs = entry.lhs(&p, opts)?;
    let rhs = entry.rhs(&p, opts)?;
    let ms = elapsed_ms(start);
    let abs_err = (lhs.value - rhs).norm();
    let scale = rhs.norm();
    let rel_err = if scale > 0.0 { abs_err / scale } else { abs_err };
    let tol = tol.unwrap_or(entry.tolerance.tol());
    Ok(VerificationRecord {
        case: entry.id.to_string(),
        params: p,
        lhs: LhsSummary {
            re: lhs.value.re,
            im: lhs.value.im,
            err: lhs.abs_error_estimate,
            evals: lhs.evaluations as u64,
            flags: lhs.flags.labels(),
        },
        rhs: RhsSummary { re: rhs.re, im: rhs.im },
        abs_err,
        rel_err,
        pass: abs_err <= tol * (1.0 + scale),
        ms,
        error: None,
    })
}

/// Like [`verify_with_tol`] but evaluation errors become failed records.
pub fn verify_record(id: &str, params: &Params, opts: &QuadratureOptions, tol: Option<f64>) -> VerificationRecord {
    let start = Instant::now();
    match verify_with_tol(id, params, opts, tol) {
        Ok(r) => r,
        Err(e) => {
            let case = find(id).map(|e| e.id).unwrap_or(id);
            VerificationRecord::failed(case, params.clone(), &e, elapsed_ms(start))
        }
    }
}

/// Points `lo, lo+step, …` up to `hi` (inclusive within rounding).
pub fn grid(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !(hi >= lo) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Parse(format!("bad range {lo}:{hi}:{step}")));
    }
    let n = ((hi - lo) / step + 1e-9).floor() as usize;
    // Snap to 12 decimals so that accumulated rounding cannot nudge a point
    // off an integer (1.0000000000000002 would escape the integer exclusion).
    Ok((0..=n).map(|i| ((lo + step * i as f64) * 1e12).round() / 1e12).collect())
}

/// One record per grid point, in grid order. Points that fall in an excluded
/// integer set of the parameter are skipped; other failures are recorded.
pub fn sweep(
    id: &str,
    param: &str,
    values: &[f64],
    base: &Params,
    opts: &QuadratureOptions,
    tol: Option<f64>,
) -> Result<Vec<VerificationRecord>> {
    let entry = find(id)?;
    let spec = entry.param(param).ok_or_else(|| Error::ParamWindow {
        name: param.to_string(),
        value: f64::NAN,
        window: format!("not a parameter of {}", entry.id),
    })?;
    let points: Vec<f64> = values.iter().copied().filter(|v| !(spec.exclude_integers && *v == v.round())).collect();
    Ok(points
        .par_iter()
        .map(|&v| {
            let mut p = base.clone();
            p.insert(param.to_string(), v);
            verify_record(entry.id, &p, opts, tol)
        })
        .collect())
}

/// Every entry at its default parameters.
pub fn suite(opts: &QuadratureOptions, tol: Option<f64>) -> Vec<VerificationRecord> {
    entries().par_iter().map(|e| verify_record(e.id, &Params::new(), opts, tol)).collect()
}

/// The registry as a JSON document.
pub fn export_json() -> serde_json::Value {
    let list: Vec<serde_json::Value> = entries()
        .iter()
        .map(|e| {
            let params: Vec<serde_json::Value> = e
                .params
                .iter()
                .map(|p| {
                    serde_json::json!({
                        "name": p.name,
                        "window": p.window(),
                        "lo": p.lo,
                        "hi": p.hi,
                        "integer": p.integer,
                        "exclude_integers": p.exclude_integers,
                        "default": p.default,
                    })
                })
                .collect();
            serde_json::json!({
                "id": e.id,
                "label": e.label,
                "params": params,
                "tolerance_class": e.tolerance,
                "tolerance": e.tolerance.tol(),
                "note": e.note,
            })
        })
        .collect();
    serde_json::Value::Array(list)
}

// Helpers shared by the entry modules.

pub(crate) fn c(re: f64, im: f64) -> ComplexValue {
    Complex64::new(re, im)
}

pub(crate) fn re(x: f64) -> ComplexValue {
    Complex64::new(x, 0.0)
}

pub(crate) fn get(p: &Params, name: &str) -> f64 {
    p[name]
}

pub(crate) fn geti(p: &Params, name: &str) -> i64 {
    p[name] as i64
}

/// Window violation for a joint constraint.
pub(crate) fn violation(name: &str, value: f64, window: String) -> Error {
    Error::ParamWindow { name: name.to_string(), value, window }
}

/// `Σ_{n ≥ start} term(n)` for a real alternating series.
pub(crate) fn real_series<T>(term: T, start: i64, opts: &QuadratureOptions) -> Result<f64>
where
    T: Fn(i64) -> f64,
{
    Ok(crate::quadrature::sum_alternating(|n| Ok(re(term(n))), start, opts)?.value.re)
}

/// Real integrand adapter.
pub(crate) fn real<F: Fn(f64) -> f64>(f: F) -> impl Fn(f64) -> Result<ComplexValue> {
    move |x| Ok(re(f(x)))
}
