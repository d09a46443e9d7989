//! Certification of `[2k, k]` codes given as `[I_k | A]`: self-duality,
//! doubly-evenness, exact minimum distance and low-weight counts, and the
//! weight-enumerator parameters of extremal `[72, 36, 12]` self-dual codes.
//!
//! Distances and counts use the two disjoint information sets formed by the
//! left and right halves (both are information sets once `A` is invertible,
//! which self-duality guarantees). A codeword of weight `w` has at most
//! `floor(w/2)` ones on one of the halves, so combining small row
//! combinations of the two systematic generators finds every low-weight word.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::bits::BitVector;
use crate::enumerate;
use crate::groupring::CandidateVector;
use crate::matrix::BitMatrix;
use crate::Error;

/// Singly-even (Type I) or doubly-even (Type II).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum SelfDualType {
    I,
    II,
}

/// Which of the possible `[72,36,12]` weight enumerators a code has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum EnumeratorFamily {
    /// `1 + 2b y^12 + (8640 - 64g) y^14 + (124281 - 24b + 384g) y^16 + ...`
    #[cfg_attr(feature = "serde", serde(rename = "W72_1"))]
    W72_1,
    /// `1 + 2b y^12 + (7616 - 64g) y^14 + (134521 - 24b + 384g) y^16 + ...`
    #[cfg_attr(feature = "serde", serde(rename = "W72_2"))]
    W72_2,
    /// `1 + (4398 + a) y^12 + (197073 - 12a) y^16 + ...`
    #[cfg_attr(feature = "serde", serde(rename = "TYPE_II"))]
    TypeII,
}

impl EnumeratorFamily {
    pub fn name(self) -> &'static str {
        match self {
            EnumeratorFamily::W72_1 => "W72_1",
            EnumeratorFamily::W72_2 => "W72_2",
            EnumeratorFamily::TypeII => "TYPE_II",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.trim() {
            "W72_1" | "W72,1" | "W_{72,1}" => Some(EnumeratorFamily::W72_1),
            "W72_2" | "W72,2" | "W_{72,2}" => Some(EnumeratorFamily::W72_2),
            "TYPE_II" | "II" => Some(EnumeratorFamily::TypeII),
            _ => None,
        }
    }

    pub fn self_dual_type(self) -> SelfDualType {
        match self {
            EnumeratorFamily::TypeII => SelfDualType::II,
            _ => SelfDualType::I,
        }
    }

    /// `(A_12, A_14, A_16)` for a Type I family with parameters `gamma`, `beta`.
    pub fn type_i_coefficients(self, gamma: i64, beta: i64) -> Option<(i64, i64, i64)> {
        match self {
            EnumeratorFamily::W72_1 => Some((2 * beta, 8640 - 64 * gamma, 124_281 - 24 * beta + 384 * gamma)),
            EnumeratorFamily::W72_2 => Some((2 * beta, 7616 - 64 * gamma, 134_521 - 24 * beta + 384 * gamma)),
            EnumeratorFamily::TypeII => None,
        }
    }

    /// `(A_12, A_16)` for the Type II family with parameter `alpha`.
    pub fn type_ii_coefficients(alpha: i64) -> (i64, i64) {
        (4398 + alpha, 197_073 - 12 * alpha)
    }
}

/// Weight-enumerator parameters of an extremal `[72,36,12]` code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum EnumeratorParams {
    TypeI { family: EnumeratorFamily, gamma: i64, beta: i64 },
    TypeII { alpha: i64 },
}

impl EnumeratorParams {
    pub fn family(&self) -> EnumeratorFamily {
        match *self {
            EnumeratorParams::TypeI { family, .. } => family,
            EnumeratorParams::TypeII { .. } => EnumeratorFamily::TypeII,
        }
    }
}

/// Verdict for one generator matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CodeReport {
    pub construction: Option<String>,
    pub candidate: Option<CandidateVector>,
    pub length: usize,
    pub dimension: usize,
    pub self_dual: bool,
    pub min_distance: Option<u32>,
    pub doubly_even: Option<bool>,
    /// Exact `A_w` for every `w` up to the counting bound (zero weights omitted).
    pub counts: BTreeMap<u32, u64>,
    pub family: Option<EnumeratorFamily>,
    pub gamma: Option<i64>,
    pub beta: Option<i64>,
    pub alpha: Option<i64>,
}

impl CodeReport {
    pub fn count(&self, w: u32) -> u64 {
        self.counts.get(&w).copied().unwrap_or(0)
    }

    pub fn params(&self) -> Option<EnumeratorParams> {
        match (self.family?, self.gamma, self.beta, self.alpha) {
            (EnumeratorFamily::TypeII, _, _, Some(alpha)) => Some(EnumeratorParams::TypeII { alpha }),
            (family, Some(gamma), Some(beta), _) => Some(EnumeratorParams::TypeI { family, gamma, beta }),
            _ => None,
        }
    }
}

/// Upper bound on the minimum distance of a self-dual binary code of even length `n`.
pub fn extremal_bound(n: usize, ty: SelfDualType) -> Result<u32, Error> {
    if n % 2 == 1 {
        return Err(Error::Contract(alloc::format!("self-dual codes have even length, got {n}")));
    }
    let base = 4 * (n / 24) as u32 + 4;
    Ok(match ty {
        SelfDualType::I if n % 24 == 22 => base + 2,
        _ => base,
    })
}

/// Returns `A` for a generator `[I_k | A]`.
pub fn redundancy_part(g: &BitMatrix) -> Result<BitMatrix, Error> {
    let k = g.nrows();
    if g.ncols() != 2 * k {
        return Err(Error::Contract(alloc::format!("expected a k x 2k generator, got {}x{}", k, g.ncols())));
    }
    if !g.columns(0, k).is_identity() {
        return Err(Error::Contract("left half of the generator is not the identity".into()));
    }
    Ok(g.columns(k, k))
}

/// `A * A^T = I` for `G = [I | A]`.
pub fn is_self_dual(g: &BitMatrix) -> Result<bool, Error> {
    let a = redundancy_part(g)?;
    Ok(a.mul(&a.transpose())?.is_identity())
}

/// Self-duality by the definition: `G * G^T = 0` and `rank(G) = n / 2`.
pub fn is_self_dual_by_gram(g: &BitMatrix) -> bool {
    g.ncols() == 2 * g.nrows() && g.mul(&g.transpose()).map(|m| m.is_zero()).unwrap_or(false) && g.rank() == g.nrows()
}

/// For a self-dual `G`, all codewords have weight divisible by 4 iff every row does.
pub fn classify_doubly_even(g: &BitMatrix) -> Result<bool, Error> {
    if !is_self_dual(g)? {
        return Err(Error::NotSelfDual);
    }
    Ok(g.rows().iter().all(|r| r.weight() % 4 == 0))
}

/// Which half of the coordinates an enumeration runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The two systematic generators `[I | A]` and `[B | I]` of one code, kept
/// as the `k`-column non-identity parts `A` and `B`.
///
/// A combination of `t` rows on one side gives a codeword of weight
/// `t + weight(XOR of those rows of A or B)`.
#[derive(Debug, Clone)]
pub struct InformationSets {
    k: usize,
    left: Vec<BitVector>,
    right: Vec<BitVector>,
}

impl InformationSets {
    /// Requires `G = [I | A]` with `A` invertible.
    pub fn new(g: &BitMatrix) -> Result<Self, Error> {
        let a = redundancy_part(g)?;
        let k = a.nrows();
        let pivots: Vec<usize> = (k..2 * k).collect();
        let right = g
            .systematic_form(&pivots)?
            .ok_or_else(|| Error::Contract("right half is not an information set".into()))?
            .columns(0, k);
        Ok(Self { k, left: a.rows().to_vec(), right: right.rows().to_vec() })
    }

    /// Like [`InformationSets::new`] but first checks `A * A^T = I`.
    pub fn for_self_dual(g: &BitMatrix) -> Result<Self, Error> {
        if !is_self_dual(g)? {
            return Err(Error::NotSelfDual);
        }
        Self::new(g)
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    fn rows(&self, side: Side) -> &[BitVector] {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    /// Visits the total weight of every codeword with exactly `level` ones on `side`.
    pub fn try_scan<B>(
        &self,
        side: Side,
        level: usize,
        mut visit: impl FnMut(u32) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let t = level as u32;
        enumerate::try_for_each_level(self.rows(side), level, BitVector::zeros(self.k), |acc| visit(t + acc.weight()))
    }

    /// Partition of [`InformationSets::try_scan`] by the largest row index.
    fn scan_top(&self, side: Side, level: usize, top: usize, mut visit: impl FnMut(u32)) {
        let t = level as u32;
        enumerate::for_each_with_top(self.rows(side), level, top, |acc| visit(t + acc.weight()));
    }

    /// Minimum weight over one level of one side.
    fn level_min(&self, side: Side, level: usize) -> u32 {
        let tops = level.saturating_sub(1)..self.k;
        let part = |top: usize| {
            let mut best = u32::MAX;
            self.scan_top(side, level, top, |w| best = best.min(w));
            best
        };
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            tops.into_par_iter().map(part).min().unwrap_or(u32::MAX)
        }
        #[cfg(not(feature = "parallel"))]
        {
            tops.map(part).min().unwrap_or(u32::MAX)
        }
    }

    /// Histogram of total weights (`<= w_max`) over one level of one side,
    /// keeping only words whose `side` support is at most `limit(w)`.
    fn level_histogram(&self, side: Side, level: usize, w_max: u32, limit: impl Fn(u32) -> u32 + Sync) -> Vec<u64> {
        let tops = level.saturating_sub(1)..self.k;
        let size = w_max as usize + 1;
        let lvl = level as u32;
        let part = |top: usize| {
            let mut h = alloc::vec![0u64; size];
            self.scan_top(side, level, top, |w| {
                if w <= w_max && lvl <= limit(w) {
                    h[w as usize] += 1;
                }
            });
            h
        };
        let add = |mut a: Vec<u64>, b: Vec<u64>| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        };
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            tops.into_par_iter().map(part).reduce(|| alloc::vec![0u64; size], add)
        }
        #[cfg(not(feature = "parallel"))]
        {
            tops.map(part).fold(alloc::vec![0u64; size], add)
        }
    }

    /// Exact minimum distance.
    pub fn min_distance(&self) -> u32 {
        let mut best = u32::MAX;
        for level in 1..=self.k {
            best = best.min(self.level_min(Side::Left, level));
            best = best.min(self.level_min(Side::Right, level));
            // Any word not yet seen has more than `level` ones on both halves.
            if best <= 2 * (level as u32 + 1) {
                break;
            }
        }
        best
    }

    /// Exact `A_w` for all `w <= w_max` (index `w` of the result).
    pub fn count_low_weights(&self, w_max: u32) -> Vec<u64> {
        let k = self.k as u32;
        let mut counts = alloc::vec![0u64; w_max as usize + 1];
        // Left class: at most floor(w/2) ones on the left half.
        for level in 1..=(w_max / 2).min(k) {
            let h = self.level_histogram(Side::Left, level as usize, w_max, |w| w / 2);
            counts.iter_mut().zip(h).for_each(|(c, x)| *c += x);
        }
        // Right class: more than floor(w/2) on the left, so at most ceil(w/2) - 1 on the right.
        for level in 1..=(w_max.div_ceil(2).saturating_sub(1)).min(k) {
            let h = self.level_histogram(Side::Right, level as usize, w_max, |w| w.div_ceil(2).saturating_sub(1));
            counts.iter_mut().zip(h).for_each(|(c, x)| *c += x);
        }
        counts
    }

    /// `min(d, cap)`, scanning only as deep as needed. The flag is true
    /// when no nonzero codeword is lighter than `cap`.
    pub fn capped_min_weight(&self, cap: u32) -> (u32, bool) {
        let mut best = cap;
        for level in 1..=self.k {
            // Every word not yet seen weighs at least `floor`.
            let floor = 2 * level as u32;
            if best <= floor {
                break;
            }
            for side in [Side::Left, Side::Right] {
                let stop = self.try_scan(side, level, |w| {
                    best = best.min(w);
                    if best <= floor {
                        ControlFlow::Break(())
                    } else {
                        ControlFlow::Continue(())
                    }
                });
                if stop.is_break() {
                    break;
                }
            }
        }
        (best, best >= cap)
    }
}

/// Exact minimum distance of a self-dual `[I | A]` code.
pub fn min_distance(g: &BitMatrix) -> Result<u32, Error> {
    Ok(InformationSets::for_self_dual(g)?.min_distance())
}

/// Exact `A_w` for every `w <= w_max` of a self-dual `[I | A]` code.
pub fn count_low_weights(g: &BitMatrix, w_max: u32) -> Result<BTreeMap<u32, u64>, Error> {
    if w_max as usize > g.ncols() {
        return Err(Error::Contract(alloc::format!("w_max {w_max} exceeds length {}", g.ncols())));
    }
    let counts = InformationSets::for_self_dual(g)?.count_low_weights(w_max);
    Ok(to_map(&counts))
}

fn to_map(counts: &[u64]) -> BTreeMap<u32, u64> {
    counts.iter().enumerate().skip(1).filter(|(_, &c)| c > 0).map(|(w, &c)| (w as u32, c)).collect()
}

/// Options for [`extract_params`].
#[derive(Debug, Clone, Copy)]
pub struct ExtractOptions {
    /// Count weight-16 words (separates the two Type I families).
    pub with_a16: bool,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        Self { with_a16: true }
    }
}

/// Solves the enumerator parameters from low-weight counts of a `[72,36,12]`
/// self-dual code. `a16` is required to tell `W72_1` from `W72_2` whenever
/// both are admissible; without it `W72_1` is preferred.
pub fn params_from_counts(doubly_even: bool, a12: u64, a14: u64, a16: Option<u64>) -> Result<EnumeratorParams, Error> {
    let inconsistent = || Error::InconsistentEnumerator { a12, a14 };
    let (a12i, a14i) = (a12 as i64, a14 as i64);
    if doubly_even {
        if a14 != 0 {
            return Err(inconsistent());
        }
        let alpha = a12i - 4398;
        if let Some(a16) = a16 {
            if EnumeratorFamily::type_ii_coefficients(alpha).1 != a16 as i64 {
                return Err(inconsistent());
            }
        }
        return Ok(EnumeratorParams::TypeII { alpha });
    }
    if a12 % 2 == 1 {
        return Err(inconsistent());
    }
    let beta = a12i / 2;
    for (family, base) in [(EnumeratorFamily::W72_1, 8640), (EnumeratorFamily::W72_2, 7616)] {
        let diff = base - a14i;
        if diff < 0 || diff % 64 != 0 {
            continue;
        }
        let gamma = diff / 64;
        let (_, _, expected16) = family.type_i_coefficients(gamma, beta).expect("type I family");
        if a16.is_none_or(|a16| a16 as i64 == expected16) {
            return Ok(EnumeratorParams::TypeI { family, gamma, beta });
        }
    }
    Err(inconsistent())
}

/// Full report for a generator `[I_k | A]`.
///
/// Non-self-dual inputs get `self_dual = false` and nothing else. Self-dual
/// inputs get `d`, the Type, and exact counts up to `w_max`; the enumerator
/// parameters are filled in when the code is a `[72,36,12]` code whose counts
/// fit one of the admissible enumerators.
pub fn analyze(g: &BitMatrix, w_max: u32, opts: ExtractOptions) -> Result<CodeReport, Error> {
    let k = g.nrows();
    let mut report = CodeReport {
        construction: None,
        candidate: None,
        length: g.ncols(),
        dimension: k,
        self_dual: false,
        min_distance: None,
        doubly_even: None,
        counts: BTreeMap::new(),
        family: None,
        gamma: None,
        beta: None,
        alpha: None,
    };
    if !is_self_dual(g)? {
        return Ok(report);
    }
    report.self_dual = true;
    let sets = InformationSets::new(g)?;
    let d = sets.min_distance();
    let doubly_even = g.rows().iter().all(|r| r.weight() % 4 == 0);
    report.min_distance = Some(d);
    report.doubly_even = Some(doubly_even);
    let extremal72 = k == 36 && d == 12;
    let w_max = if extremal72 {
        let needed = if opts.with_a16 {
            16
        } else if doubly_even {
            12
        } else {
            14
        };
        w_max.max(needed)
    } else {
        w_max
    }
    .min(g.ncols() as u32);
    let counts = sets.count_low_weights(w_max);
    report.counts = to_map(&counts);
    if extremal72 {
        let a16 = opts.with_a16.then(|| counts[16]);
        if let Ok(params) = params_from_counts(doubly_even, counts[12], counts[14], a16) {
            apply_params(&mut report, params);
        }
    }
    Ok(report)
}

fn apply_params(report: &mut CodeReport, params: EnumeratorParams) {
    report.family = Some(params.family());
    match params {
        EnumeratorParams::TypeI { gamma, beta, .. } => {
            report.gamma = Some(gamma);
            report.beta = Some(beta);
        }
        EnumeratorParams::TypeII { alpha } => report.alpha = Some(alpha),
    }
}

/// Report for a self-dual `[72,36,12]` code, with the enumerator parameters.
pub fn extract_params(g: &BitMatrix, opts: ExtractOptions) -> Result<CodeReport, Error> {
    if !is_self_dual(g)? {
        return Err(Error::NotSelfDual);
    }
    let report = analyze(g, 0, opts)?;
    match report.min_distance {
        Some(12) if g.nrows() == 36 && report.family.is_some() => Ok(report),
        Some(12) if g.nrows() == 36 => {
            Err(Error::InconsistentEnumerator { a12: report.count(12), a14: report.count(14) })
        }
        Some(d) => Err(Error::NotExtremal { min_distance: d }),
        None => Err(Error::NotSelfDual),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i_i(k: usize) -> BitMatrix {
        BitMatrix::identity(k).hconcat(&BitMatrix::identity(k)).unwrap()
    }

    #[test]
    fn extremal_bounds() {
        assert_eq!(extremal_bound(72, SelfDualType::II).unwrap(), 16);
        assert_eq!(extremal_bound(72, SelfDualType::I).unwrap(), 16);
        assert_eq!(extremal_bound(22, SelfDualType::I).unwrap(), 6);
        assert_eq!(extremal_bound(24, SelfDualType::II).unwrap(), 8);
        assert_eq!(extremal_bound(46, SelfDualType::I).unwrap(), 10);
        assert_eq!(extremal_bound(46, SelfDualType::II).unwrap(), 8);
        assert!(extremal_bound(71, SelfDualType::I).is_err());
    }

    #[test]
    fn identity_pair_code() {
        let g = i_i(36);
        assert!(is_self_dual(&g).unwrap());
        assert!(is_self_dual_by_gram(&g));
        assert!(!classify_doubly_even(&g).unwrap());
        assert_eq!(min_distance(&g).unwrap(), 2);
    }

    #[test]
    fn zero_redundancy_is_not_self_dual() {
        let g = BitMatrix::identity(36).hconcat(&BitMatrix::zeros(36, 36)).unwrap();
        assert!(!is_self_dual(&g).unwrap());
        assert!(!is_self_dual_by_gram(&g));
        assert!(matches!(min_distance(&g), Err(Error::NotSelfDual)));
        assert!(matches!(classify_doubly_even(&g), Err(Error::NotSelfDual)));
    }

    #[test]
    fn malformed_shape_is_rejected() {
        assert!(is_self_dual(&BitMatrix::identity(4)).is_err());
        let g = BitMatrix::zeros(4, 8);
        assert!(is_self_dual(&g).is_err());
    }

    #[test]
    fn counts_of_the_length_8_repetition_pairs() {
        // Codewords are (x | x): A_{2t} = C(4, t).
        let counts = count_low_weights(&i_i(4), 8).unwrap();
        assert_eq!(counts.get(&2), Some(&4));
        assert_eq!(counts.get(&4), Some(&6));
        assert_eq!(counts.get(&6), Some(&4));
        assert_eq!(counts.get(&8), Some(&1));
        assert!(counts.keys().all(|w| w % 2 == 0));
    }

    #[test]
    fn parameter_inversion() {
        assert_eq!(
            params_from_counts(false, 0, 8640, None).unwrap(),
            EnumeratorParams::TypeI { family: EnumeratorFamily::W72_1, gamma: 0, beta: 0 }
        );
        assert_eq!(params_from_counts(true, 1602, 0, None).unwrap(), EnumeratorParams::TypeII { alpha: -2796 });
        // gamma = 20 under W72_1 or 4 under W72_2; A16 decides.
        let (a12, a14, a16_2) = EnumeratorFamily::W72_2.type_i_coefficients(4, 300).unwrap();
        assert_eq!(a14, 8640 - 64 * 20);
        assert_eq!(
            params_from_counts(false, a12 as u64, a14 as u64, Some(a16_2 as u64)).unwrap(),
            EnumeratorParams::TypeI { family: EnumeratorFamily::W72_2, gamma: 4, beta: 300 }
        );
        assert_eq!(params_from_counts(false, a12 as u64, a14 as u64, None).unwrap().family(), EnumeratorFamily::W72_1);
        assert!(params_from_counts(false, 3, 8640, None).is_err());
        assert!(params_from_counts(false, 2, 8641, None).is_err());
        assert!(params_from_counts(false, 2, 8640, Some(1)).is_err());
    }

    #[test]
    fn extract_rejects_non_extremal() {
        assert!(matches!(
            extract_params(&i_i(36), ExtractOptions::default()),
            Err(Error::NotExtremal { min_distance: 2 })
        ));
    }
}
