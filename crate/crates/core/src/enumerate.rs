//! Low-weight row-combination enumeration in revolving-door order.
//!
//! Combinations of a fixed size are produced by Knuth's revolving-door
//! algorithm: each step removes one row and inserts another, so the running
//! XOR accumulator is updated with two row XORs and one popcount per visit.
//! Levels run in increasing size.
//!
//! The combinations of size `t` split into disjoint partitions keyed by their
//! largest row index ("top"). [`for_each_with_top`] walks one partition, which
//! is what parallel callers distribute across workers.

use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::bits::BitVector;
use crate::matrix::BitMatrix;

/// One transition of a [`RevolvingDoor`] sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    /// The first combination `{0, 1, .., t-1}`.
    Start,
    /// Row `out` left the combination and row `into` joined it.
    Swap { out: usize, into: usize },
}

/// Revolving-door generator of the `t`-subsets of `{0, .., n-1}`.
#[derive(Debug, Clone)]
pub struct RevolvingDoor {
    n: usize,
    t: usize,
    /// 1-based `c[1..=t]` in increasing order, with sentinel `c[t+1] = n`.
    c: Vec<usize>,
    started: bool,
    done: bool,
}

impl RevolvingDoor {
    pub fn new(n: usize, t: usize) -> Self {
        let mut c: Vec<usize> = (0..t + 2).map(|j| j.saturating_sub(1)).collect();
        c[t + 1] = n;
        Self { n, t, c, started: false, done: t > n }
    }

    /// Current combination in increasing order.
    pub fn current(&self) -> &[usize] {
        &self.c[1..=self.t]
    }

    fn swap(&mut self, out: usize, into: usize) -> Option<Step> {
        Some(Step::Swap { out, into })
    }

    /// Advances to the next combination.
    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> Option<Step> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(Step::Start);
        }
        let t = self.t;
        if t == 0 || t == self.n {
            self.done = true;
            return None;
        }
        let c = &mut self.c;
        // Easy cases on c[1].
        let mut j = 2;
        let mut try_decrease;
        if t % 2 == 1 {
            if c[1] + 1 < c[2] {
                c[1] += 1;
                let v = c[1];
                return self.swap(v - 1, v);
            }
            try_decrease = true;
        } else {
            if c[1] > 0 {
                c[1] -= 1;
                let v = c[1];
                return self.swap(v + 1, v);
            }
            try_decrease = false;
        }
        loop {
            if j > t {
                self.done = true;
                return None;
            }
            if try_decrease {
                // c[j] == c[j-1] + 1
                if c[j] >= j {
                    let out = c[j];
                    c[j] = c[j - 1];
                    c[j - 1] = j - 2;
                    return self.swap(out, j - 2);
                }
                j += 1;
                try_decrease = false;
            } else {
                // c[j-1] == j - 2
                if c[j] + 1 < c[j + 1] {
                    let out = c[j - 1];
                    c[j - 1] = c[j];
                    c[j] += 1;
                    let into = c[j];
                    return self.swap(out, into);
                }
                j += 1;
                try_decrease = true;
            }
        }
    }
}

/// Visits the XOR of every `t`-subset of `rows`, each XORed into `seed`.
pub fn try_for_each_level<B>(
    rows: &[BitVector],
    t: usize,
    seed: BitVector,
    mut visit: impl FnMut(&BitVector) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let mut door = RevolvingDoor::new(rows.len(), t);
    let mut acc = seed;
    while let Some(step) = door.next() {
        match step {
            Step::Start => {
                for r in &rows[..t] {
                    acc.xor_assign(r);
                }
            }
            Step::Swap { out, into } => {
                acc.xor_assign(&rows[out]);
                acc.xor_assign(&rows[into]);
            }
        }
        visit(&acc)?;
    }
    ControlFlow::Continue(())
}

/// Visits every `t`-subset of `rows` whose largest index is `top`.
pub fn try_for_each_with_top<B>(
    rows: &[BitVector],
    t: usize,
    top: usize,
    visit: impl FnMut(&BitVector) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if t == 0 || top >= rows.len() || top + 1 < t {
        return ControlFlow::Continue(());
    }
    try_for_each_level(&rows[..top], t - 1, rows[top], visit)
}

/// Visits every `t`-subset of `rows` whose largest index is `top`.
pub fn for_each_with_top(rows: &[BitVector], t: usize, top: usize, mut visit: impl FnMut(&BitVector)) {
    let _ = try_for_each_with_top::<()>(rows, t, top, |v| {
        visit(v);
        ControlFlow::Continue(())
    });
}

/// Calls `visit(acc, level)` once for every nonempty subset of the rows of
/// `base` with at most `max_level` members, where `acc` is the XOR of the
/// subset. Levels run from 1 to `max_level`.
pub fn enumerate_combinations(base: &BitMatrix, max_level: usize, mut visit: impl FnMut(&BitVector, usize)) {
    let _ = try_enumerate_combinations::<()>(base, max_level, |v, level| {
        visit(v, level);
        ControlFlow::Continue(())
    });
}

/// Like [`enumerate_combinations`], stopping early on `ControlFlow::Break`.
pub fn try_enumerate_combinations<B>(
    base: &BitMatrix,
    max_level: usize,
    mut visit: impl FnMut(&BitVector, usize) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let max_level = max_level.min(base.nrows());
    for level in 1..=max_level {
        try_for_each_level(base.rows(), level, BitVector::zeros(base.ncols()), |v| visit(v, level))?;
    }
    ControlFlow::Continue(())
}

/// `C(n, k)` in `u64`, saturating on overflow.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use proptest::prelude::*;

    fn all_subsets(n: usize, t: usize) -> Vec<Vec<usize>> {
        let mut door = RevolvingDoor::new(n, t);
        let mut out = Vec::new();
        while door.next().is_some() {
            out.push(door.current().to_vec());
        }
        out
    }

    #[test]
    fn identity_level_one_visits_unit_vectors() {
        let mut seen = Vec::new();
        enumerate_combinations(&BitMatrix::identity(3), 1, |v, level| {
            assert_eq!(level, 1);
            seen.push(*v);
        });
        seen.sort();
        let mut expected: Vec<_> = (0..3).map(|i| BitVector::unit(3, i)).collect();
        expected.sort();
        assert_eq!(seen, expected);
    }

    #[test]
    fn visit_count_matches_binomial_sum() {
        let expected: u64 = (1..=5).map(|i| binomial(36, i)).sum();
        assert_eq!(expected, 443_703);
        let mut count = 0u64;
        let mut weight_ok = true;
        enumerate_combinations(&BitMatrix::identity(36), 5, |v, level| {
            count += 1;
            weight_ok &= v.weight() as usize == level;
        });
        assert_eq!(count, expected);
        assert!(weight_ok);
    }

    #[test]
    fn full_depth_visits_every_nonempty_subset() {
        let base = BitMatrix::identity(10);
        let mut seen = BTreeSet::new();
        enumerate_combinations(&base, 10, |v, _| {
            assert!(seen.insert(*v));
        });
        assert_eq!(seen.len(), (1 << 10) - 1);
    }

    #[test]
    fn early_break_stops() {
        let mut count = 0;
        let r = try_enumerate_combinations(&BitMatrix::identity(20), 4, |_, level| {
            count += 1;
            if level == 2 {
                ControlFlow::Break(level)
            } else {
                ControlFlow::Continue(())
            }
        });
        assert_eq!(r, ControlFlow::Break(2));
        assert_eq!(count, 21);
    }

    proptest! {
        #[test]
        fn revolving_door_is_exhaustive_and_minimal_change(n in 0usize..13, t in 0usize..14) {
            let subsets = all_subsets(n, t);
            prop_assert_eq!(subsets.len() as u64, binomial(n as u64, t as u64));
            let distinct: BTreeSet<_> = subsets.iter().cloned().collect();
            prop_assert_eq!(distinct.len(), subsets.len());
            for s in &subsets {
                prop_assert!(s.windows(2).all(|w| w[0] < w[1]));
                prop_assert!(s.iter().all(|&x| x < n));
            }
            for w in subsets.windows(2) {
                let a: BTreeSet<_> = w[0].iter().collect();
                let b: BTreeSet<_> = w[1].iter().collect();
                prop_assert_eq!(a.symmetric_difference(&b).count(), 2);
            }
        }

        #[test]
        fn accumulator_equals_naive_fold(words in proptest::collection::vec(any::<[u64; 2]>(), 14), t in 1usize..6, probe in 0usize..1000) {
            let rows: Vec<_> = words.iter().map(|&w| BitVector::from_words(w, 72)).collect();
            let mut door = RevolvingDoor::new(rows.len(), t);
            let mut visited = Vec::new();
            let _ = try_for_each_level::<()>(&rows, t, BitVector::zeros(72), |v| {
                visited.push(*v);
                ControlFlow::Continue(())
            });
            let mut subsets = Vec::new();
            while door.next().is_some() {
                subsets.push(door.current().to_vec());
            }
            prop_assert_eq!(visited.len(), subsets.len());
            let i = probe % subsets.len();
            let mut naive = BitVector::zeros(72);
            for &r in &subsets[i] {
                naive.xor_assign(&rows[r]);
            }
            prop_assert_eq!(visited[i], naive);
        }

        #[test]
        fn partitions_by_top_cover_the_level(words in proptest::collection::vec(any::<[u64; 2]>(), 11), t in 1usize..6) {
            let rows: Vec<_> = words.iter().map(|&w| BitVector::from_words(w, 40)).collect();
            let mut sequential = Vec::new();
            let _ = try_for_each_level::<()>(&rows, t, BitVector::zeros(40), |v| {
                sequential.push(*v);
                ControlFlow::Continue(())
            });
            let mut partitioned = Vec::new();
            for top in 0..rows.len() {
                for_each_with_top(&rows, t, top, |v| partitioned.push(*v));
            }
            sequential.sort();
            partitioned.sort();
            prop_assert_eq!(sequential, partitioned);
        }
    }
}
