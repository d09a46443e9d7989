//! Metaheuristic search over the 36-bit candidate space of one construction.
//!
//! Both engines share the same contract: all randomness comes from one
//! seeded [`ChaCha8Rng`] owned by the main loop, fitness evaluation is a pure
//! function of the candidate (so batches may run in parallel), and every
//! candidate is evaluated at most once per run.

mod ga;
mod population;
mod voa;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::analysis::{self, CodeReport, EnumeratorParams, ExtractOptions, InformationSets};
use crate::groupring::{CandidateVector, Construction};
use crate::Error;

pub use ga::{ga_run, GaConfig};
pub use voa::{voa_run, VoaConfig};

pub use rand_chacha::ChaCha8Rng;

/// Identifier of the generator recorded in every [`RunLog`].
pub const RNG_ID: &str = "ChaCha8Rng";

/// Minimum distance a hit must reach.
pub const TARGET_DISTANCE: u32 = 12;

/// Outcome of the staged fitness evaluation.
///
/// `valid == false` implies `score == 0`; `confirmed_d12` implies `score == 12`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FitnessResult {
    pub valid: bool,
    pub score: u32,
    pub confirmed_d12: bool,
}

impl FitnessResult {
    pub const INVALID: Self = Self { valid: false, score: 0, confirmed_d12: false };
}

/// Stage 1: `A * A^T = I`. Stage 2: `min(d, 12)` from both information sets,
/// stopping as soon as the minimum is certified.
pub fn evaluate_fitness(k: &Construction, c: CandidateVector) -> FitnessResult {
    let g = k.generator(c);
    if !analysis::is_self_dual(&g).unwrap_or(false) {
        return FitnessResult::INVALID;
    }
    let Ok(sets) = InformationSets::new(&g) else {
        return FitnessResult::INVALID;
    };
    let (score, certified) = sets.capped_min_weight(TARGET_DISTANCE);
    FitnessResult { valid: true, score, confirmed_d12: certified }
}

/// Which engine produced a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Algorithm {
    Voa,
    Ga,
}

impl Algorithm {
    pub const ALL: [Algorithm; 2] = [Algorithm::Voa, Algorithm::Ga];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Voa => "voa",
            Algorithm::Ga => "ga",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "voa" => Some(Algorithm::Voa),
            "ga" => Some(Algorithm::Ga),
            _ => None,
        }
    }
}

/// Configuration echoed into a [`RunLog`].
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "algorithm", rename_all = "lowercase"))]
pub enum RunConfig {
    Voa(VoaConfig),
    Ga(GaConfig),
}

/// A candidate certified as a self-dual code with `d >= 12`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Hit {
    pub iteration: u32,
    pub candidate: CandidateVector,
    pub report: CodeReport,
}

impl Hit {
    /// Enumerator parameters, when the counts fit an admissible enumerator.
    pub fn params(&self) -> Option<EnumeratorParams> {
        self.report.params()
    }
}

/// A population member with its fitness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Member {
    pub candidate: CandidateVector,
    pub fitness: FitnessResult,
}

/// Everything a run produced, in a deterministic order.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RunLog {
    pub construction: String,
    pub rng: String,
    pub config: RunConfig,
    /// Best score after initialisation (index 0) and after each iteration.
    pub best_per_iteration: Vec<u32>,
    /// Sorted by `(iteration, candidate)`.
    pub hits: Vec<Hit>,
    /// Distinct candidates evaluated.
    pub evaluations: u64,
    /// Ranked best first.
    pub final_population: Vec<Member>,
    /// Filled in by callers that measure time; never set by the engines.
    pub wall_time_ms: Option<u64>,
}

impl RunLog {
    pub fn algorithm(&self) -> Algorithm {
        match self.config {
            RunConfig::Voa(_) => Algorithm::Voa,
            RunConfig::Ga(_) => Algorithm::Ga,
        }
    }

    /// Distinct enumerator parameters among the hits.
    pub fn distinct_params(&self) -> BTreeSet<EnumeratorParams> {
        self.hits.iter().filter_map(Hit::params).collect()
    }
}

/// Builds the report stored with a hit.
fn hit_report(k: &Construction, c: CandidateVector) -> CodeReport {
    let g = k.generator(c);
    let mut report = match analysis::analyze(&g, 0, ExtractOptions::default()) {
        Ok(r) => r,
        Err(_) => bare_report(&g),
    };
    report.construction = Some(String::from(k.id));
    report.candidate = Some(c);
    report
}

fn bare_report(g: &crate::BitMatrix) -> CodeReport {
    CodeReport {
        construction: None,
        candidate: None,
        length: g.ncols(),
        dimension: g.nrows(),
        self_dual: true,
        min_distance: None,
        doubly_even: None,
        counts: BTreeMap::new(),
        family: None,
        gamma: None,
        beta: None,
        alpha: None,
    }
}

/// Search budget shared by both engines in [`compare`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub population_size: usize,
    pub iterations: u32,
}

/// One row of a comparison table.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ComparisonRow {
    pub construction: String,
    pub algorithm: Algorithm,
    pub runs: u32,
    /// Hits over all runs, counting each run separately.
    pub total_hits: u64,
    /// Distinct enumerator parameters over all runs.
    pub distinct_hits: u64,
    pub evaluations: u64,
}

/// Runs every `(construction, algorithm)` pair `runs` times with seeds
/// `seed0..seed0 + runs` and aggregates distinct hits by enumerator parameters.
pub fn compare(
    constructions: &[&Construction],
    algorithms: &[Algorithm],
    runs: u32,
    seed0: u64,
    budget: Budget,
) -> Result<Vec<ComparisonRow>, Error> {
    if runs == 0 {
        return Err(Error::Contract("runs must be at least 1".into()));
    }
    let mut rows = Vec::new();
    for k in constructions {
        for &algo in algorithms {
            let mut distinct = BTreeSet::new();
            let (mut total_hits, mut evaluations) = (0u64, 0u64);
            for run in 0..runs as u64 {
                let log = run_with(k, algo, seed0 + run, budget)?;
                total_hits += log.hits.len() as u64;
                evaluations += log.evaluations;
                distinct.extend(log.distinct_params());
            }
            rows.push(ComparisonRow {
                construction: String::from(k.id),
                algorithm: algo,
                runs,
                total_hits,
                distinct_hits: distinct.len() as u64,
                evaluations,
            });
        }
    }
    Ok(rows)
}

fn run_with(k: &Construction, algo: Algorithm, seed: u64, budget: Budget) -> Result<RunLog, Error> {
    match algo {
        Algorithm::Voa => voa_run(
            k,
            &VoaConfig {
                population_size: budget.population_size,
                iterations: budget.iterations,
                seed,
                ..VoaConfig::default()
            },
        ),
        Algorithm::Ga => ga_run(
            k,
            &GaConfig {
                population_size: budget.population_size,
                iterations: budget.iterations,
                seed,
                ..GaConfig::default()
            },
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupring::lookup;

    #[test]
    fn zero_candidate_is_invalid() {
        let k = lookup("G1.1").unwrap();
        assert_eq!(evaluate_fitness(k, CandidateVector::zero()), FitnessResult::INVALID);
    }

    #[test]
    fn identity_redundancy_scores_two() {
        let k = lookup("G3.1").unwrap();
        let c = CandidateVector::zero().flip(1);
        assert_eq!(evaluate_fitness(k, c), FitnessResult { valid: true, score: 2, confirmed_d12: false });
    }

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(Algorithm::parse(a.name()), Some(a));
        }
        assert_eq!(Algorithm::parse("pso"), None);
    }

    #[test]
    fn compare_rejects_zero_runs() {
        let k = lookup("G2.1").unwrap();
        let budget = Budget { population_size: 4, iterations: 0 };
        assert!(compare(&[k], &[Algorithm::Voa], 0, 0, budget).is_err());
    }
}
