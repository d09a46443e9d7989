use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::population::{best_score, fresh_distinct, mutate, rank, Evaluator};
use super::{Member, RunConfig, RunLog, RNG_ID};
use crate::groupring::Construction;
use crate::Error;

/// Virus optimisation over binary candidates.
///
/// Strong viruses are the `strong_count` best members; they replicate with a
/// low flip rate. All other members are common viruses with a higher flip
/// rate. After `stagnation_window` iterations without improvement the common
/// flip rate is halved (never below the strong rate) and the worst half of
/// the population is replaced by fresh random candidates.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VoaConfig {
    pub population_size: usize,
    pub iterations: u32,
    pub strong_count: usize,
    pub strong_offspring: usize,
    pub common_offspring: usize,
    pub strong_flip_prob: f64,
    pub common_flip_prob: f64,
    pub stagnation_window: u32,
    pub seed: u64,
}

impl Default for VoaConfig {
    fn default() -> Self {
        Self {
            population_size: 500,
            iterations: 100,
            strong_count: 10,
            strong_offspring: 5,
            common_offspring: 1,
            strong_flip_prob: 1.0 / 36.0,
            common_flip_prob: 3.0 / 36.0,
            stagnation_window: 5,
            seed: 0,
        }
    }
}

impl VoaConfig {
    pub fn validate(&self) -> Result<(), Error> {
        let fail = |m: &str| Err(Error::Contract(m.into()));
        if self.strong_count == 0 || self.strong_count >= self.population_size {
            return fail("strong_count must satisfy 0 < strong_count < population_size");
        }
        if self.strong_offspring == 0 || self.common_offspring == 0 || self.stagnation_window == 0 {
            return fail("offspring counts and stagnation_window must be positive");
        }
        let open_unit = |p: f64| p > 0.0 && p < 1.0;
        if !open_unit(self.strong_flip_prob) || !open_unit(self.common_flip_prob) {
            return fail("flip probabilities must lie in (0, 1)");
        }
        Ok(())
    }
}

/// Runs the virus optimisation for one construction.
pub fn voa_run(k: &Construction, cfg: &VoaConfig) -> Result<RunLog, Error> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut eval = Evaluator::new(k);
    let n = cfg.population_size;

    let initial = fresh_distinct(&mut rng, n, &BTreeSet::new());
    let mut population = eval.evaluate(&initial, 0);
    rank(&mut population);
    let mut best = alloc::vec![best_score(&population)];
    let mut common_flip = cfg.common_flip_prob;
    let mut stagnant = 0u32;

    for it in 1..=cfg.iterations {
        // Replication.
        let mut offspring = Vec::with_capacity(cfg.strong_count * cfg.strong_offspring + n * cfg.common_offspring);
        for (i, m) in population.iter().enumerate() {
            let (copies, p) = if i < cfg.strong_count {
                (cfg.strong_offspring, cfg.strong_flip_prob)
            } else {
                (cfg.common_offspring, common_flip)
            };
            for _ in 0..copies {
                offspring.push(mutate(&mut rng, m.candidate, p));
            }
        }
        let offspring = eval.evaluate(&offspring, it);

        // Maintenance: dedup, keep the best `n`, pad if short.
        population.extend(offspring);
        population = dedup_ranked(population);
        population.truncate(n);
        if population.len() < n {
            let taken = taken(&population);
            let pad = fresh_distinct(&mut rng, n - population.len(), &taken);
            population.extend(eval.evaluate(&pad, it));
            rank(&mut population);
        }

        // Intensified antivirus on stagnation.
        let score = best_score(&population);
        if score > *best.last().unwrap_or(&0) {
            stagnant = 0;
        } else {
            stagnant += 1;
        }
        if stagnant >= cfg.stagnation_window {
            stagnant = 0;
            common_flip = cfg.strong_flip_prob.max(common_flip / 2.0);
            let keep = n - n / 2;
            population.truncate(keep);
            let taken = taken(&population);
            let fresh = fresh_distinct(&mut rng, n - keep, &taken);
            population.extend(eval.evaluate(&fresh, it));
            rank(&mut population);
        }
        best.push(best_score(&population));
    }

    let evaluations = eval.evaluations();
    let mut hits = eval.into_hits();
    hits.sort_by_key(|h| (h.iteration, h.candidate));
    Ok(RunLog {
        construction: String::from(k.id),
        rng: String::from(RNG_ID),
        config: RunConfig::Voa(cfg.clone()),
        best_per_iteration: best,
        hits,
        evaluations,
        final_population: population,
        wall_time_ms: None,
    })
}

fn taken(population: &[Member]) -> BTreeSet<u64> {
    population.iter().map(|m| m.candidate.bits()).collect()
}

/// Ranks and keeps the first occurrence of each candidate.
fn dedup_ranked(mut members: Vec<Member>) -> Vec<Member> {
    rank(&mut members);
    members.dedup_by_key(|m| m.candidate);
    members
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupring::lookup;

    fn small(seed: u64) -> VoaConfig {
        VoaConfig { population_size: 40, iterations: 6, strong_count: 4, seed, ..VoaConfig::default() }
    }

    #[test]
    fn defaults_are_valid() {
        assert!(VoaConfig::default().validate().is_ok());
        let bad = VoaConfig { strong_count: 500, ..VoaConfig::default() };
        assert!(bad.validate().is_err());
        let bad = VoaConfig { common_flip_prob: 1.0, ..VoaConfig::default() };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn zero_iterations_only_evaluates_initial_population() {
        let k = lookup("G2.1").unwrap();
        let cfg = VoaConfig { iterations: 0, ..small(3) };
        let log = voa_run(k, &cfg).unwrap();
        assert_eq!(log.best_per_iteration.len(), 1);
        assert_eq!(log.evaluations, 40);
        assert_eq!(log.final_population.len(), 40);
    }

    #[test]
    fn seeded_runs_repeat_and_stay_elitist() {
        let k = lookup("G2.1").unwrap();
        let a = voa_run(k, &small(11)).unwrap();
        let b = voa_run(k, &small(11)).unwrap();
        assert_eq!(a, b);
        assert!(a.best_per_iteration.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(a.final_population.len(), 40);
        let distinct: BTreeSet<_> = a.final_population.iter().map(|m| m.candidate).collect();
        assert_eq!(distinct.len(), 40);
    }
}
