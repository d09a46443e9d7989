use std::collections::BTreeSet;

use sdforge_core::analysis::{is_self_dual, min_distance};
use sdforge_core::groupring::lookup;
use sdforge_core::search::{
    compare, evaluate_fitness, ga_run, voa_run, Algorithm, Budget, FitnessResult, GaConfig, RunLog, VoaConfig,
};
use sdforge_core::CandidateVector;

fn voa(id: &str, seed: u64, pop: usize, iters: u32) -> RunLog {
    let cfg = VoaConfig { population_size: pop, iterations: iters, seed, ..VoaConfig::default() };
    voa_run(lookup(id).unwrap(), &cfg).unwrap()
}

fn ga(id: &str, seed: u64, pop: usize, iters: u32) -> RunLog {
    let cfg = GaConfig { population_size: pop, iterations: iters, seed, ..GaConfig::default() };
    ga_run(lookup(id).unwrap(), &cfg).unwrap()
}

/// Recomputes `d` from scratch and checks the fitness contract against it.
fn audit_member(id: &str, c: CandidateVector, f: FitnessResult) {
    let g = lookup(id).unwrap().generator(c);
    let self_dual = is_self_dual(&g).unwrap();
    assert_eq!(f.valid, self_dual, "{id} {c}");
    if !self_dual {
        assert_eq!(f, FitnessResult::INVALID);
        return;
    }
    let d = min_distance(&g).unwrap();
    assert_eq!(f.score, d.min(12), "{id} {c}");
    assert_eq!(f.confirmed_d12, d >= 12, "{id} {c}");
}

#[test]
fn published_candidate_is_confirmed() {
    let c = CandidateVector::from_bit_string("010111110111010000;101111010010111010").unwrap();
    let f = evaluate_fitness(lookup("G1.1").unwrap(), c);
    assert_eq!(f, FitnessResult { valid: true, score: 12, confirmed_d12: true });
}

#[test]
fn runs_are_reproducible_elitist_and_audited() {
    type Engine = fn(&str, u64, usize, u32) -> RunLog;
    let runs: [(Engine, &str, u64, usize, u32); 4] =
        [(voa, "G8.1", 1, 300, 40), (voa, "G2.1", 1, 200, 30), (ga, "G8.1", 3, 300, 40), (ga, "G6.1", 3, 200, 30)];
    let mut audited_hits = 0;
    for (engine, id, seed, pop, iters) in runs {
        let log = engine(id, seed, pop, iters);
        audited_hits += log.hits.len();
        assert_eq!(log, engine(id, seed, pop, iters));
        assert!(log.best_per_iteration.windows(2).all(|w| w[0] <= w[1]), "{id}");
        assert_eq!(log.best_per_iteration.len(), iters as usize + 1);
        for hit in &log.hits {
            let g = lookup(id).unwrap().generator(hit.candidate);
            assert!(is_self_dual(&g).unwrap());
            assert_eq!(min_distance(&g).unwrap(), 12);
            assert_eq!(hit.report.min_distance, Some(12));
            assert!(hit.params().is_some());
        }
        let distinct: BTreeSet<_> = log.hits.iter().map(|h| h.candidate).collect();
        assert_eq!(distinct.len(), log.hits.len());
        for m in log.final_population.iter().filter(|m| m.fitness.valid).take(40) {
            audit_member(id, m.candidate, m.fitness);
        }
    }
    assert!(audited_hits > 0);
}

#[test]
fn voa_population_size_is_exact() {
    for seed in 0..4 {
        let log = voa("G7.2", seed, 64, 12);
        assert_eq!(log.final_population.len(), 64);
        let distinct: BTreeSet<_> = log.final_population.iter().map(|m| m.candidate).collect();
        assert_eq!(distinct.len(), 64);
    }
}

#[test]
fn comparison_aggregates_per_run_hit_sets() {
    let k = lookup("G8.1").unwrap();
    let budget = Budget { population_size: 200, iterations: 20 };
    let rows = compare(&[k], &[Algorithm::Voa], 3, 10, budget).unwrap();
    assert_eq!(rows.len(), 1);
    let mut union = BTreeSet::new();
    let mut total = 0;
    for seed in 10..13 {
        let log = voa("G8.1", seed, 200, 20);
        total += log.hits.len() as u64;
        union.extend(log.distinct_params());
    }
    assert_eq!(rows[0].total_hits, total);
    assert_eq!(rows[0].distinct_hits, union.len() as u64);
    assert_eq!(rows[0].runs, 3);
}
