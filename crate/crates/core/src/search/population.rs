use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::cmp::Reverse;

use rand::{Rng, RngCore};

use super::{evaluate_fitness, hit_report, FitnessResult, Hit, Member};
use crate::groupring::{CandidateVector, Construction};

/// Memoised fitness evaluation that records a hit the first time a
/// candidate is confirmed.
pub(super) struct Evaluator<'a> {
    construction: &'a Construction,
    memo: BTreeMap<u64, FitnessResult>,
    hits: Vec<Hit>,
}

impl<'a> Evaluator<'a> {
    pub fn new(construction: &'a Construction) -> Self {
        Self { construction, memo: BTreeMap::new(), hits: Vec::new() }
    }

    /// Members for `candidates`, in input order.
    pub fn evaluate(&mut self, candidates: &[CandidateVector], iteration: u32) -> Vec<Member> {
        let fresh: Vec<CandidateVector> = candidates
            .iter()
            .filter(|c| !self.memo.contains_key(&c.bits()))
            .map(|c| c.bits())
            .collect::<BTreeSet<u64>>()
            .into_iter()
            .map(CandidateVector::from_masked)
            .collect();
        let k = self.construction;
        let results = map(&fresh, |&c| evaluate_fitness(k, c));
        let confirmed: Vec<CandidateVector> =
            fresh.iter().zip(&results).filter(|(_, f)| f.confirmed_d12).map(|(c, _)| *c).collect();
        let reports = map(&confirmed, |&c| hit_report(k, c));
        self.hits.extend(confirmed.into_iter().zip(reports).map(|(candidate, report)| Hit {
            iteration,
            candidate,
            report,
        }));
        for (c, f) in fresh.iter().zip(results) {
            self.memo.insert(c.bits(), f);
        }
        candidates.iter().map(|&candidate| Member { candidate, fitness: self.memo[&candidate.bits()] }).collect()
    }

    pub fn evaluations(&self) -> u64 {
        self.memo.len() as u64
    }

    pub fn into_hits(self) -> Vec<Hit> {
        self.hits
    }
}

#[cfg(feature = "parallel")]
fn map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map<T, U>(items: &[T], f: impl Fn(&T) -> U) -> Vec<U> {
    items.iter().map(f).collect()
}

/// Total order used for ranking: higher score first, then ascending bits.
pub(super) fn rank_key(m: &Member) -> (Reverse<u32>, u64) {
    (Reverse(m.fitness.score), m.candidate.bits())
}

pub(super) fn rank(members: &mut [Member]) {
    members.sort_by_key(rank_key);
}

pub(super) fn best_score(members: &[Member]) -> u32 {
    members.iter().map(|m| m.fitness.score).max().unwrap_or(0)
}

pub(super) fn random_candidate(rng: &mut impl RngCore) -> CandidateVector {
    CandidateVector::from_masked(rng.next_u64())
}

/// Flips each of the 36 bits independently with probability `p`.
pub(super) fn mutate(rng: &mut impl Rng, c: CandidateVector, p: f64) -> CandidateVector {
    let mut bits = c.bits();
    for i in 0..CandidateVector::BITS {
        if rng.gen_bool(p) {
            bits ^= 1 << i;
        }
    }
    CandidateVector::from_masked(bits)
}

/// `count` uniform candidates, distinct from each other and from `taken`.
pub(super) fn fresh_distinct(rng: &mut impl RngCore, count: usize, taken: &BTreeSet<u64>) -> Vec<CandidateVector> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let c = random_candidate(rng);
        if !taken.contains(&c.bits()) && seen.insert(c.bits()) {
            out.push(c);
        }
    }
    out
}
