use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::population::{best_score, fresh_distinct, mutate, rank, rank_key, Evaluator};
use super::{Member, RunConfig, RunLog, RNG_ID};
use crate::groupring::{CandidateVector, Construction};
use crate::Error;

/// Generational elitist GA: the `elite_count` best members survive, the rest
/// are children of tournament-selected parents with single-point crossover
/// and per-bit mutation.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GaConfig {
    pub population_size: usize,
    pub iterations: u32,
    pub tournament_size: usize,
    pub crossover_prob: f64,
    pub mutation_flip_prob: f64,
    pub elite_count: usize,
    pub seed: u64,
}

impl Default for GaConfig {
    fn default() -> Self {
        Self {
            population_size: 500,
            iterations: 100,
            tournament_size: 3,
            crossover_prob: 0.9,
            mutation_flip_prob: 1.0 / 36.0,
            elite_count: 2,
            seed: 0,
        }
    }
}

impl GaConfig {
    pub fn validate(&self) -> Result<(), Error> {
        let fail = |m: &str| Err(Error::Contract(m.into()));
        if self.population_size == 0 || self.tournament_size == 0 {
            return fail("population_size and tournament_size must be positive");
        }
        if self.elite_count == 0 || self.elite_count > self.population_size {
            return fail("elite_count must satisfy 0 < elite_count <= population_size");
        }
        let unit = |p: f64| (0.0..=1.0).contains(&p);
        if !unit(self.crossover_prob) || !unit(self.mutation_flip_prob) {
            return fail("probabilities must lie in [0, 1]");
        }
        Ok(())
    }
}

/// Runs the genetic algorithm for one construction.
pub fn ga_run(k: &Construction, cfg: &GaConfig) -> Result<RunLog, Error> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut eval = Evaluator::new(k);
    let n = cfg.population_size;

    let initial = fresh_distinct(&mut rng, n, &BTreeSet::new());
    let mut population = eval.evaluate(&initial, 0);
    rank(&mut population);
    let mut best = alloc::vec![best_score(&population)];

    for it in 1..=cfg.iterations {
        let mut children = Vec::with_capacity(n - cfg.elite_count + 1);
        while children.len() < n - cfg.elite_count {
            let p1 = tournament(&mut rng, &population, cfg.tournament_size);
            let p2 = tournament(&mut rng, &population, cfg.tournament_size);
            let (c1, c2) = if rng.gen_bool(cfg.crossover_prob) {
                crossover(p1, p2, rng.gen_range(1..CandidateVector::BITS))
            } else {
                (p1, p2)
            };
            children.push(mutate(&mut rng, c1, cfg.mutation_flip_prob));
            children.push(mutate(&mut rng, c2, cfg.mutation_flip_prob));
        }
        children.truncate(n - cfg.elite_count);
        let children = eval.evaluate(&children, it);
        population.truncate(cfg.elite_count);
        population.extend(children);
        rank(&mut population);
        best.push(best_score(&population));
    }

    let evaluations = eval.evaluations();
    let mut hits = eval.into_hits();
    hits.sort_by_key(|h| (h.iteration, h.candidate));
    Ok(RunLog {
        construction: String::from(k.id),
        rng: String::from(RNG_ID),
        config: RunConfig::Ga(cfg.clone()),
        best_per_iteration: best,
        hits,
        evaluations,
        final_population: population,
        wall_time_ms: None,
    })
}

/// Best of `size` members drawn uniformly with replacement.
fn tournament(rng: &mut impl Rng, population: &[Member], size: usize) -> CandidateVector {
    (0..size)
        .map(|_| &population[rng.gen_range(0..population.len())])
        .min_by_key(|m| rank_key(m))
        .map(|m| m.candidate)
        .expect("tournament size is positive")
}

/// Children taking `a_1..a_cut` from one parent and the rest from the other.
fn crossover(p1: CandidateVector, p2: CandidateVector, cut: usize) -> (CandidateVector, CandidateVector) {
    let tail = (1u64 << (CandidateVector::BITS - cut)) - 1;
    let head = CandidateVector::MASK & !tail;
    (
        CandidateVector::from_masked(p1.bits() & head | p2.bits() & tail),
        CandidateVector::from_masked(p2.bits() & head | p1.bits() & tail),
    )
}
