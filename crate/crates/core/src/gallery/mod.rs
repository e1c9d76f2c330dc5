//! Executable counterexample scenarios. Each scenario builds its objects,
//! runs a list of decidable checks and reports a verdict and witness per
//! check. Infinite objects are truncated; checks that only cover samples
//! or a truncation are labelled `witness-level`.

mod random;
mod scenarios;

use std::time::Instant;

use serde::Serialize;
use serde_json::Value as Json;

use crate::error::{Error, Result};
use crate::groebner::Engine;

pub use random::random_poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Level {
    Exact,
    WitnessLevel,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Claim {
    pub name: String,
    pub anchor: &'static str,
    pub verdict: Verdict,
    pub level: Level,
    pub witness: Json,
}

impl Claim {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    /// Truncation level.
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub degree: u32,
    /// Bound on exponents/powers in per-element checks.
    pub bound: u32,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParamOverrides {
    pub n: Option<usize>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub degree: Option<u32>,
    pub bound: Option<u32>,
}

impl Params {
    pub fn apply(mut self, o: &ParamOverrides) -> Self {
        self.n = o.n.unwrap_or(self.n);
        self.samples = o.samples.unwrap_or(self.samples);
        self.seed = o.seed.unwrap_or(self.seed);
        self.degree = o.degree.unwrap_or(self.degree);
        self.bound = o.bound.unwrap_or(self.bound);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExampleReport {
    pub id: String,
    pub params: Params,
    pub claims: Vec<Claim>,
    pub notes: Vec<String>,
    pub passed: bool,
    pub elapsed_ms: u128,
}

impl ExampleReport {
    pub fn to_json(&self) -> Json {
        serde_json::to_value(self).expect("reports serialize")
    }

    /// The report without timing, for reproducibility comparisons.
    pub fn stable_json(&self) -> Json {
        let mut j = self.to_json();
        j.as_object_mut().unwrap().remove("elapsed_ms");
        j
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScenarioInfo {
    pub id: &'static str,
    pub title: &'static str,
    pub claims: Vec<&'static str>,
    pub defaults: Params,
}

pub(crate) type Runner = fn(&Engine, &Params) -> Result<(Vec<Claim>, Vec<String>)>;

struct Entry {
    info: ScenarioInfo,
    run: Runner,
}

fn defaults(n: usize, samples: usize, degree: u32, bound: u32) -> Params {
    Params {
        n,
        samples,
        seed: 42,
        degree,
        bound,
    }
}

fn catalog() -> Vec<Entry> {
    use scenarios::*;
    let e = |id, title, claims: &[&'static str], d, run| Entry {
        info: ScenarioInfo {
            id,
            title,
            claims: claims.to_vec(),
            defaults: d,
        },
        run,
    };
    vec![
        e(
            "rank2-valuation",
            "(0) indecomposable in R/R*pi_1 over a rank 2 valuation ring, but not coprimary",
            &["indecomposable", "zero-divisor", "not-nilpotent"],
            defaults(0, 0, 0, 64),
            rank2_valuation,
        ),
        e(
            "ass-vs-ass1-directsum",
            "sum of R/(x_1..x_i): the union prime is associated but not weakly associated",
            &["pi-in-ass0", "annihilators-below-p", "p-not-in-ass1", "p-is-union"],
            defaults(4, 100, 3, 0),
            ass_vs_ass1_directsum,
        ),
        e(
            "ass-vs-ass1-cyclic",
            "k[x_i,y_i]/(x_i*y_i, y_i^2): a cyclic module with Ass larger than Ass_1",
            &["basis-A", "no-zero-divisors-outside-p", "p-membership", "not-nilpotent"],
            defaults(3, 60, 5, 6),
            ass_vs_ass1_cyclic,
        ),
        e(
            "valuation-Q",
            "R/{v >= 1} over a valuation ring with value group Q",
            &["zero-primary", "ass0-empty", "ass-equals-ass1", "no-annihilator-is-P"],
            defaults(0, 50, 0, 0),
            valuation_q,
        ),
        e(
            "local-noetherian",
            "sum of R/(p) over principal primes of k[X,Y] localized at (X,Y)",
            &[
                "ann-of-generators",
                "annihilators-in-principal-primes",
                "m-elements-are-zero-divisors",
                "m-not-minimal",
            ],
            defaults(0, 30, 2, 0),
            local_noetherian,
        ),
        e(
            "ass-not-exact",
            "Ass(N + L) is not inside Ass(N) union Ass(L)",
            &["m-certificate-for-sum", "ass-of-N", "X-injective-on-L"],
            defaults(0, 30, 2, 0),
            ass_not_exact,
        ),
        e(
            "rad-zero-supp",
            "sum of Z/(p): radical of (0) is (0) but (0) is not in the support",
            &["zero-not-in-supp", "supp-is-nonzero-primes", "radical-is-zero"],
            defaults(25, 100, 0, 8),
            rad_zero_supp,
        ),
        e(
            "QmodZ",
            "Q/Z: annihilator (0) but (0) is not in the support",
            &["annihilator-zero", "torsion"],
            defaults(0, 100, 0, 0),
            q_mod_z,
        ),
        e(
            "no-min-supp",
            "sum of R/(X_i, X_i+1, ...): no minimal elements in the support",
            &["descending-chain", "supp-is-union"],
            defaults(5, 0, 0, 0),
            no_min_supp,
        ),
        e(
            "quotR-module",
            "Quot(R)/R over a discrete valuation ring",
            &[
                "ann-zero-prime",
                "coprimary",
                "zero-essential-for-ann",
                "zero-not-in-ass",
            ],
            defaults(0, 20, 0, 0),
            quot_r_module,
        ),
        e(
            "scomp-not-additive",
            "S-components for S = powers of x+y are not additive",
            &["S(N)=N", "S(N~)=N~", "S(N+N~)=R"],
            defaults(0, 0, 0, 0),
            scomp_not_additive,
        ),
    ]
}

pub fn list_examples() -> Vec<ScenarioInfo> {
    catalog().into_iter().map(|e| e.info).collect()
}

pub fn run_example(engine: &Engine, id: &str, overrides: &ParamOverrides) -> Result<ExampleReport> {
    let entry = catalog()
        .into_iter()
        .find(|e| e.info.id == id)
        .ok_or_else(|| Error::UnknownExample(id.to_string()))?;
    let params = entry.info.defaults.apply(overrides);
    let start = Instant::now();
    let (claims, notes) = (entry.run)(engine, &params)?;
    let passed = claims.iter().all(Claim::passed);
    Ok(ExampleReport {
        id: id.to_string(),
        params,
        claims,
        notes,
        passed,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Every scenario, one thread each; results in catalog order.
pub fn run_all(engine: &Engine, overrides: &ParamOverrides) -> Vec<Result<ExampleReport>> {
    let ids: Vec<&'static str> = list_examples().iter().map(|s| s.id).collect();
    std::thread::scope(|s| {
        let handles: Vec<_> = ids
            .iter()
            .map(|id| s.spawn(move || run_example(engine, id, overrides)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scenario thread panicked"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_has_eleven_unique_ids() {
        let list = list_examples();
        assert_eq!(list.len(), 11);
        let mut ids: Vec<_> = list.iter().map(|s| s.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 11);
        let r2 = list.iter().find(|s| s.id == "rank2-valuation").unwrap();
        assert_eq!(r2.claims, vec!["indecomposable", "zero-divisor", "not-nilpotent"]);
    }

    #[test]
    fn unknown_id() {
        let e = Engine::default();
        assert!(matches!(
            run_example(&e, "nope", &ParamOverrides::default()),
            Err(Error::UnknownExample(_))
        ));
    }

    #[test]
    fn scomp_scenario_passes() {
        let e = Engine::default();
        let r = run_example(&e, "scomp-not-additive", &ParamOverrides::default()).unwrap();
        assert!(r.passed, "{:#}", r.to_json());
    }

    #[test]
    fn every_scenario_passes_with_defaults() {
        let e = Engine::default();
        for r in run_all(&e, &ParamOverrides::default()) {
            let r = r.unwrap();
            assert!(r.passed, "{:#}", r.to_json());
        }
    }
}
