//! Structured outcomes of identity checks.
//!
//! A check says what it verified, at which parameters, in which mode, and
//! with what residual: the exact-zero flag in exact mode, the max
//! relative residual in float mode. The [`Checker`] accumulates the
//! individual assertions of one check into a single report.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::matrix::QMatrix;
use crate::scalar::{Mode, QScalar, FLOAT_REL_TOL};

/// Residual of a completed check.
#[derive(Clone, Debug, PartialEq)]
pub enum Residual {
    /// Exact mode, every assertion held with exact equality.
    ExactZero,
    /// Exact mode, some assertion failed.
    ExactNonzero,
    /// Float mode: the worst relative residual across all assertions.
    Float(f64),
}

impl Residual {
    pub fn to_json(&self) -> Value {
        match self {
            Residual::ExactZero => json!("0"),
            Residual::ExactNonzero => json!("nonzero"),
            Residual::Float(x) => json!(x),
        }
    }
}

/// Outcome of one identity check at one parameter point.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub mode: Mode,
    pub passed: bool,
    pub residual: Residual,
    /// Wall-clock milliseconds; zero unless timing was requested.
    pub millis: u64,
    /// First failing assertion, when any.
    pub detail: Option<String>,
}

impl VerificationReport {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "identity": self.identity,
            "params": self.params,
            "mode": self.mode.to_string(),
            "pass": self.passed,
            "residual": self.residual.to_json(),
            "ms": self.millis,
        });
        if let Some(d) = &self.detail {
            v["detail"] = json!(d);
        }
        v
    }
}

/// Accumulates assertions for one report.
///
/// Exact mode demands exact equality (a float sneaking into an exact run
/// counts as a failure); float mode tracks the worst relative residual
/// against [`FLOAT_REL_TOL`].
pub struct Checker {
    mode: Mode,
    tol: f64,
    exact_ok: bool,
    worst: f64,
    worst_label: Option<String>,
    first_failure: Option<String>,
    assertions: usize,
}

impl Checker {
    pub fn new(mode: Mode) -> Self {
        Checker {
            mode,
            tol: FLOAT_REL_TOL,
            exact_ok: true,
            worst: 0.0,
            worst_label: None,
            first_failure: None,
            assertions: 0,
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    fn record_failure(&mut self, label: &str) {
        self.exact_ok = false;
        if self.first_failure.is_none() {
            self.first_failure = Some(label.to_string());
        }
    }

    fn note_residual(&mut self, label: &str, rel: f64) {
        if rel > self.worst || self.worst_label.is_none() {
            self.worst = self.worst.max(rel);
            self.worst_label = Some(format!("{label} (rel residual {rel:.3e})"));
        }
        if !(rel <= self.tol) && self.first_failure.is_none() {
            self.first_failure = Some(format!("{label} (rel residual {rel:.3e})"));
        }
    }

    /// Equality with an explicit scale hint: in float mode the residual
    /// is |lhs - rhs| / max(1, |lhs|, |rhs|, hint). The hint carries the
    /// magnitude of the intermediates that produced the values (the
    /// backward-error scale); pass 0.0 when there is no cancellation.
    pub fn eq_scalar_scaled(&mut self, label: &str, lhs: &QScalar, rhs: &QScalar, hint: f64) {
        self.assertions += 1;
        match self.mode {
            Mode::Exact => match (lhs.as_exact(), rhs.as_exact()) {
                (Some(a), Some(b)) => {
                    if a != b {
                        self.record_failure(label);
                    }
                }
                _ => self.record_failure(&format!("{label}: float value in exact run")),
            },
            Mode::Float => {
                let (a, b) = (lhs.to_f64(), rhs.to_f64());
                let scale = 1f64.max(a.abs()).max(b.abs()).max(hint);
                let rel = if a == b { 0.0 } else { (a - b).abs() / scale };
                self.note_residual(label, rel);
            }
        }
    }

    pub fn eq_scalar(&mut self, label: &str, lhs: &QScalar, rhs: &QScalar) {
        self.eq_scalar_scaled(label, lhs, rhs, 0.0);
    }

    pub fn zero_scalar(&mut self, label: &str, s: &QScalar) {
        self.eq_scalar(label, s, &QScalar::zero());
    }

    /// Matrix equality with a scale hint; the float residual is the max
    /// entry of the difference over max(1, matrix norms, hint).
    pub fn eq_matrix_scaled(&mut self, label: &str, lhs: &QMatrix, rhs: &QMatrix, hint: f64) {
        self.assertions += 1;
        if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
            self.record_failure(&format!("{label}: shape mismatch"));
            if self.mode == Mode::Float {
                self.worst = f64::INFINITY;
            }
            return;
        }
        match self.mode {
            Mode::Exact => {
                let ok = lhs
                    .entries()
                    .iter()
                    .zip(rhs.entries())
                    .all(|(a, b)| match (a.as_exact(), b.as_exact()) {
                        (Some(x), Some(y)) => x == y,
                        _ => false,
                    });
                if !ok {
                    self.record_failure(label);
                }
            }
            Mode::Float => {
                let scale = 1f64
                    .max(lhs.max_abs_f64())
                    .max(rhs.max_abs_f64())
                    .max(hint);
                let max_diff = lhs
                    .entries()
                    .iter()
                    .zip(rhs.entries())
                    .map(|(a, b)| (a.to_f64() - b.to_f64()).abs())
                    .fold(0.0, f64::max);
                self.note_residual(label, max_diff / scale);
            }
        }
    }

    pub fn eq_matrix(&mut self, label: &str, lhs: &QMatrix, rhs: &QMatrix) {
        self.eq_matrix_scaled(label, lhs, rhs, 0.0);
    }

    pub fn zero_matrix(&mut self, label: &str, m: &QMatrix) {
        let zero = QMatrix::zeros(m.rows(), m.cols());
        self.eq_matrix(label, m, &zero);
    }

    /// Zero assertion for a value produced by large cancelling
    /// intermediates; `hint` is their magnitude.
    pub fn zero_matrix_scaled(&mut self, label: &str, m: &QMatrix, hint: f64) {
        let zero = QMatrix::zeros(m.rows(), m.cols());
        self.eq_matrix_scaled(label, m, &zero, hint);
    }

    /// Structural assertion (a dimension, an ordering, a tridiagonal
    /// profile); failure poisons the report outright.
    pub fn require(&mut self, label: &str, ok: bool) {
        self.assertions += 1;
        if !ok {
            self.record_failure(label);
            if self.mode == Mode::Float {
                self.worst = f64::INFINITY;
            }
        }
    }

    /// Record an error from a fallible construction step.
    pub fn fail(&mut self, label: &str) {
        self.require(label, false);
    }

    pub fn passed(&self) -> bool {
        match self.mode {
            Mode::Exact => self.exact_ok,
            Mode::Float => self.exact_ok && self.worst <= self.tol,
        }
    }

    pub fn assertions(&self) -> usize {
        self.assertions
    }

    pub fn worst_residual(&self) -> f64 {
        self.worst
    }

    pub fn into_report(self, identity: &str, params: BTreeMap<String, String>) -> VerificationReport {
        let passed = self.passed();
        VerificationReport {
            identity: identity.to_string(),
            params,
            mode: self.mode,
            passed,
            residual: match self.mode {
                Mode::Exact => {
                    if passed {
                        Residual::ExactZero
                    } else {
                        Residual::ExactNonzero
                    }
                }
                Mode::Float => Residual::Float(self.worst),
            },
            millis: 0,
            detail: match (self.mode, passed) {
                (_, true) => None,
                (Mode::Exact, false) => self.first_failure,
                (Mode::Float, false) => self.worst_label.or(self.first_failure),
            },
        }
    }
}

/// Convenience for building the params map.
pub fn params_of<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

/// Run a check body against a fresh [`Checker`]; a construction error is
/// recorded as a failed assertion instead of aborting the report.
pub fn guarded(
    mode: Mode,
    identity: &str,
    params: BTreeMap<String, String>,
    body: impl FnOnce(&mut Checker) -> crate::error::Result<()>,
) -> VerificationReport {
    let mut checker = Checker::new(mode);
    if let Err(e) = body(&mut checker) {
        checker.fail(&format!("construction error: {e}"));
    }
    checker.into_report(identity, params)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_checker_flags_mismatch() {
        let mut c = Checker::new(Mode::Exact);
        c.eq_scalar("ok", &QScalar::ratio(1, 2), &QScalar::ratio(2, 4));
        assert!(c.passed());
        c.eq_scalar("bad", &QScalar::int(1), &QScalar::int(2));
        assert!(!c.passed());
        let r = c.into_report("test", params_of([("u", "3/5".into())]));
        assert_eq!(r.residual, Residual::ExactNonzero);
        assert!(r.detail.unwrap().contains("bad"));
    }

    #[test]
    fn float_checker_tracks_worst_residual() {
        let mut c = Checker::new(Mode::Float);
        c.eq_scalar("close", &QScalar::float(1.0), &QScalar::float(1.0 + 1e-12));
        assert!(c.passed());
        c.eq_scalar("far", &QScalar::float(1.0), &QScalar::float(1.001));
        assert!(!c.passed());
        match c.into_report("test", Default::default()).residual {
            Residual::Float(x) => assert!(x > 1e-4),
            _ => panic!("expected float residual"),
        }
    }

    #[test]
    fn float_leak_fails_exact_run() {
        let mut c = Checker::new(Mode::Exact);
        c.eq_scalar("leak", &QScalar::float(1.0), &QScalar::int(1));
        assert!(!c.passed());
    }
}
