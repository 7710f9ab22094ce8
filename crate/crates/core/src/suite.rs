//! Identity-suite assembly: a deterministic case grid over spins, weight
//! pairs, model parameters and evaluation points, with a machine-readable
//! JSON report.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::braided::{check_intertwining, check_spectral_decomposition, check_ybe};
use crate::centralizer::{
    check_aw_relations, check_centralizer_membership, check_multiplicity_spaces,
    check_rcheck_vs_s, check_restricted_pair,
};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::model::{
    check_addition, check_aw_model, check_corollary35, check_degree_one_regression,
    check_duality, check_model_invariants, check_orthogonality, check_prop31, check_prop33,
    check_q_inversion, check_recurrence_transition, check_theorem34, ModelRep,
};
use crate::qseries::check_qseries_identities;
use crate::report::{guarded, params_of, VerificationReport};
use crate::scalar::{Mode, QPoint};
use crate::uqsl2::{
    check_coassociativity, check_ladder_identity, check_tensor_decomposition,
    check_uqsl2_relations, decomposition_data, SpinRep,
};

/// Default exact sample points u = 3/5, 2/7, 5/9.
pub const DEFAULT_U_SAMPLES: [(i64, i64); 3] = [(3, 5), (2, 7), (5, 9)];

/// Default seed for the randomized q-series arguments.
pub const DEFAULT_SEED: u64 = 7;

/// How each identity is parameterized across the grid.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum CaseKind {
    /// One case per sample point.
    Global,
    /// One case per spin and sample point.
    Spin,
    /// One case per (spin, weight) pair and sample point.
    SpinPair,
    /// One case per (a, N) cell and sample point.
    Model,
    /// One case per a at N = 1 and sample point.
    DegreeOne,
}

const IDENTITIES: &[(&str, CaseKind)] = &[
    ("qseries", CaseKind::Global),
    ("uqsl2_relations", CaseKind::Spin),
    ("coassociativity", CaseKind::Spin),
    ("tensor_decomposition", CaseKind::Spin),
    ("ladder_identity", CaseKind::Spin),
    ("intertwining", CaseKind::Spin),
    ("yang_baxter", CaseKind::Spin),
    ("spectral_decomposition", CaseKind::Spin),
    ("aw_relations", CaseKind::Spin),
    ("centralizer_membership", CaseKind::Spin),
    ("multiplicity_spaces", CaseKind::Spin),
    ("restricted_pair", CaseKind::SpinPair),
    ("rcheck_vs_s", CaseKind::SpinPair),
    ("model_invariants", CaseKind::Model),
    ("transition_similarity", CaseKind::Model),
    ("braid_relation", CaseKind::Model),
    ("braid_transition", CaseKind::Model),
    ("braid_entries", CaseKind::Model),
    ("orthogonality", CaseKind::Model),
    ("addition_formula", CaseKind::Model),
    ("recurrence_transition", CaseKind::Model),
    ("q_inversion", CaseKind::Model),
    ("qracah_duality", CaseKind::Model),
    ("aw_model", CaseKind::Model),
    ("degree_one_regression", CaseKind::DegreeOne),
];

/// Names of all identities the suite can run, in execution order.
pub fn identity_names() -> Vec<&'static str> {
    IDENTITIES.iter().map(|&(name, _)| name).collect()
}

/// Suite configuration: grid bounds, sample points, mode, filter and
/// execution knobs.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub max_s: HalfInt,
    pub max_a: u32,
    pub max_n: u32,
    /// Sample points u as exact rationals; converted to binary64 in
    /// float mode.
    pub u_samples: Vec<(i64, i64)>,
    pub mode: Mode,
    /// None runs everything; an explicit list runs only those names (an
    /// empty list is a no-op).
    pub only: Option<Vec<String>>,
    pub seed: u64,
    /// Maximum degree for the q-series battery.
    pub qseries_degree: u32,
    /// Worker threads; 0 picks the default pool.
    pub jobs: usize,
    /// Record wall-clock per case. Off by default so that reports are
    /// byte-identical across runs.
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_s: HalfInt::from_twice(3),
            max_a: 3,
            max_n: 6,
            u_samples: DEFAULT_U_SAMPLES.to_vec(),
            mode: Mode::Exact,
            only: None,
            seed: DEFAULT_SEED,
            qseries_degree: 8,
            jobs: 0,
            timing: false,
        }
    }
}

impl SuiteConfig {
    /// Bound for the admissibility guard: every denominator appearing on
    /// the configured grid divides some 1 - q^k with k below this.
    pub fn admissibility_bound(&self) -> u32 {
        4 * (3 * self.max_a + self.max_n + 2)
    }

    fn point(&self, num: i64, den: i64) -> Result<QPoint> {
        let point = match self.mode {
            Mode::Exact => QPoint::exact(num, den)?,
            Mode::Float => QPoint::float(num as f64 / den as f64)?,
        };
        point.ensure_admissible(self.admissibility_bound())?;
        Ok(point)
    }

    fn spins(&self) -> Vec<HalfInt> {
        (0..=self.max_s.twice()).map(HalfInt::from_twice).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "max_s": self.max_s.to_string(),
            "max_a": self.max_a,
            "max_n": self.max_n,
            "u": self
                .u_samples
                .iter()
                .map(|(n, d)| format!("{n}/{d}"))
                .collect::<Vec<_>>(),
            "mode": self.mode.to_string(),
            "only": self.only,
            "seed": self.seed,
            "qseries_degree": self.qseries_degree,
            "jobs": self.jobs,
            "timing": self.timing,
        })
    }
}

#[derive(Clone, Debug)]
struct Case {
    identity: &'static str,
    point: QPoint,
    spin: Option<HalfInt>,
    weight: Option<HalfInt>,
    model: Option<(u32, u32)>,
}

fn case_list(config: &SuiteConfig) -> Result<Vec<Case>> {
    if let Some(filter) = &config.only {
        let known = identity_names();
        for name in filter {
            if !known.contains(&name.as_str()) {
                return Err(Error::Config(format!(
                    "unknown identity '{name}'; valid names: {}",
                    known.join(", ")
                )));
            }
        }
    }
    let selected = |name: &str| match &config.only {
        None => true,
        Some(filter) => filter.iter().any(|f| f == name),
    };

    let mut points = Vec::new();
    for &(num, den) in &config.u_samples {
        points.push(config.point(num, den)?);
    }

    let mut cases = Vec::new();
    for &(name, kind) in IDENTITIES {
        if !selected(name) {
            continue;
        }
        for point in &points {
            match kind {
                CaseKind::Global => cases.push(Case {
                    identity: name,
                    point: point.clone(),
                    spin: None,
                    weight: None,
                    model: None,
                }),
                CaseKind::Spin => {
                    for s in config.spins() {
                        cases.push(Case {
                            identity: name,
                            point: point.clone(),
                            spin: Some(s),
                            weight: None,
                            model: None,
                        });
                    }
                }
                CaseKind::SpinPair => {
                    for s in config.spins() {
                        for l in decomposition_data(s).spins() {
                            cases.push(Case {
                                identity: name,
                                point: point.clone(),
                                spin: Some(s),
                                weight: Some(l),
                                model: None,
                            });
                        }
                    }
                }
                CaseKind::Model => {
                    for a in 0..=config.max_a {
                        for n in 0..=config.max_n {
                            cases.push(Case {
                                identity: name,
                                point: point.clone(),
                                spin: None,
                                weight: None,
                                model: Some((a, n)),
                            });
                        }
                    }
                }
                CaseKind::DegreeOne => {
                    for a in 0..=config.max_a {
                        cases.push(Case {
                            identity: name,
                            point: point.clone(),
                            spin: None,
                            weight: None,
                            model: Some((a, 1)),
                        });
                    }
                }
            }
        }
    }
    Ok(cases)
}

/// Models are expensive to assemble and shared by many identities; the
/// cache keys them by parameters and evaluation point.
#[derive(Default)]
struct ModelCache {
    map: Mutex<HashMap<(u32, u32, String), Arc<ModelRep>>>,
}

impl ModelCache {
    fn get(&self, a: u32, n: u32, point: &QPoint) -> crate::error::Result<Arc<ModelRep>> {
        let key = (a, n, point.to_string());
        if let Some(model) = self.map.lock().unwrap().get(&key) {
            return Ok(model.clone());
        }
        let model = Arc::new(ModelRep::new(a, n, point)?);
        self.map
            .lock()
            .unwrap()
            .entry(key)
            .or_insert(model.clone());
        Ok(model)
    }
}

fn run_case(config: &SuiteConfig, case: &Case, cache: &ModelCache) -> VerificationReport {
    let start = Instant::now();
    let mut report = dispatch(config, case, cache);
    if config.timing {
        report.millis = start.elapsed().as_millis() as u64;
    }
    report
}

fn dispatch(config: &SuiteConfig, case: &Case, cache: &ModelCache) -> VerificationReport {
    let point = &case.point;
    let with_rep = |f: &dyn Fn(&SpinRep) -> VerificationReport| -> VerificationReport {
        let s = case.spin.expect("spin case");
        match SpinRep::new(s, point) {
            Ok(rep) => f(&rep),
            Err(e) => guarded(
                point.mode(),
                case.identity,
                params_of([("s", s.to_string()), ("u", point.to_string())]),
                |c| {
                    c.fail(&format!("representation unavailable: {e}"));
                    Ok(())
                },
            ),
        }
    };
    let with_model = |f: &dyn Fn(&ModelRep) -> VerificationReport| -> VerificationReport {
        let (a, n) = case.model.expect("model case");
        match cache.get(a, n, point) {
            Ok(model) => f(&model),
            Err(e) => guarded(
                point.mode(),
                case.identity,
                params_of([
                    ("a", a.to_string()),
                    ("N", n.to_string()),
                    ("u", point.to_string()),
                ]),
                |c| {
                    c.fail(&format!("model unavailable: {e}"));
                    Ok(())
                },
            ),
        }
    };

    match case.identity {
        "qseries" => check_qseries_identities(point, config.qseries_degree, config.seed),
        "uqsl2_relations" => with_rep(&check_uqsl2_relations),
        "coassociativity" => with_rep(&check_coassociativity),
        "tensor_decomposition" => with_rep(&check_tensor_decomposition),
        "ladder_identity" => with_rep(&check_ladder_identity),
        "intertwining" => with_rep(&check_intertwining),
        "yang_baxter" => with_rep(&check_ybe),
        "spectral_decomposition" => with_rep(&check_spectral_decomposition),
        "aw_relations" => with_rep(&check_aw_relations),
        "centralizer_membership" => with_rep(&check_centralizer_membership),
        "multiplicity_spaces" => with_rep(&check_multiplicity_spaces),
        "restricted_pair" => {
            with_rep(&|rep| check_restricted_pair(rep, case.weight.expect("weight")))
        }
        "rcheck_vs_s" => with_rep(&|rep| check_rcheck_vs_s(rep, case.weight.expect("weight"))),
        "model_invariants" => with_model(&check_model_invariants),
        "transition_similarity" => with_model(&check_prop31),
        "braid_relation" => with_model(&check_prop33),
        "braid_transition" => with_model(&check_theorem34),
        "braid_entries" => with_model(&check_corollary35),
        "orthogonality" => with_model(&check_orthogonality),
        "addition_formula" => with_model(&check_addition),
        "recurrence_transition" => with_model(&check_recurrence_transition),
        "q_inversion" => with_model(&check_q_inversion),
        "qracah_duality" => with_model(&check_duality),
        "aw_model" => with_model(&check_aw_model),
        "degree_one_regression" => {
            let (a, _) = case.model.expect("model case");
            check_degree_one_regression(point, a)
        }
        other => unreachable!("unknown identity '{other}' escaped validation"),
    }
}

/// Results of a full suite run.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub config: Value,
    pub results: Vec<VerificationReport>,
}

impl SuiteReport {
    pub fn passes(&self) -> usize {
        self.results.iter().filter(|r| r.passed).count()
    }

    pub fn failures(&self) -> usize {
        self.results.len() - self.passes()
    }

    pub fn all_passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "config": self.config,
            "results": self.results.iter().map(VerificationReport::to_json).collect::<Vec<_>>(),
            "summary": {"pass": self.passes(), "fail": self.failures()},
        })
    }

    /// Pretty JSON with a trailing newline; deterministic for a fixed
    /// config (results are grid-ordered, maps are sorted).
    pub fn to_json_string(&self) -> String {
        let mut s =
            serde_json::to_string_pretty(&self.to_json()).expect("report serialization");
        s.push('\n');
        s
    }
}

/// Run every selected identity over the configured grid. Cases are
/// independent and run on a thread pool; results keep grid order.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let cases = case_list(config)?;
    let cache = ModelCache::default();
    let run_all = || -> Vec<VerificationReport> {
        cases.par_iter().map(|c| run_case(config, c, &cache)).collect()
    };
    let results = match config.jobs {
        0 => run_all(),
        1 => cases.iter().map(|c| run_case(config, c, &cache)).collect(),
        n => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Config(format!("thread pool: {e}")))?
            .install(run_all),
    };
    Ok(SuiteReport {
        config: config.to_json(),
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_filter_is_a_noop() {
        let config = SuiteConfig {
            only: Some(vec![]),
            ..SuiteConfig::default()
        };
        let report = run_suite(&config).unwrap();
        assert!(report.results.is_empty());
        assert!(report.all_passed());
    }

    #[test]
    fn unknown_identity_is_a_config_error() {
        let config = SuiteConfig {
            only: Some(vec!["no_such_identity".into()]),
            ..SuiteConfig::default()
        };
        assert!(matches!(run_suite(&config), Err(Error::Config(_))));
    }

    #[test]
    fn inadmissible_sample_point_is_rejected_before_running() {
        let config = SuiteConfig {
            u_samples: vec![(1, 1)],
            only: Some(vec!["qseries".into()]),
            ..SuiteConfig::default()
        };
        assert!(matches!(
            run_suite(&config),
            Err(Error::InadmissiblePoint(_))
        ));
    }

    #[test]
    fn small_exact_slice_passes_and_is_deterministic() {
        let config = SuiteConfig {
            max_s: HalfInt::ONE,
            max_a: 1,
            max_n: 2,
            u_samples: vec![(3, 5)],
            qseries_degree: 4,
            only: Some(vec![
                "qseries".into(),
                "uqsl2_relations".into(),
                "transition_similarity".into(),
                "braid_relation".into(),
                "qracah_duality".into(),
            ]),
            ..SuiteConfig::default()
        };
        let first = run_suite(&config).unwrap();
        assert!(first.all_passed(), "{}", first.to_json_string());
        let second = run_suite(&config).unwrap();
        assert_eq!(first.to_json_string(), second.to_json_string());
    }

    #[test]
    fn jobs_do_not_change_the_report() {
        let base = SuiteConfig {
            max_s: HalfInt::HALF,
            max_a: 1,
            max_n: 1,
            u_samples: vec![(3, 5)],
            qseries_degree: 3,
            only: Some(vec!["qseries".into(), "braid_transition".into()]),
            ..SuiteConfig::default()
        };
        let serial = run_suite(&SuiteConfig { jobs: 1, ..base.clone() }).unwrap();
        let parallel = run_suite(&SuiteConfig { jobs: 2, ..base.clone() }).unwrap();
        // The jobs knob is echoed in the config block; the results must
        // be identical.
        let serial_results: Vec<Value> =
            serial.results.iter().map(VerificationReport::to_json).collect();
        let parallel_results: Vec<Value> =
            parallel.results.iter().map(VerificationReport::to_json).collect();
        assert_eq!(serial_results, parallel_results);
    }
}
