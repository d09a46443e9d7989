//! Random self-dual codes and brute-force oracles shared by the integration tests.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use sdforge_core::{BitMatrix, BitVector};

pub fn random_vector(rng: &mut impl Rng, len: usize) -> BitVector {
    BitVector::from_bits((0..len).map(|_| rng.gen_bool(0.5)))
}

pub fn random_matrix(rng: &mut impl Rng, nrows: usize, ncols: usize) -> BitMatrix {
    BitMatrix::from_rows((0..nrows).map(|_| random_vector(rng, ncols)).collect(), ncols).unwrap()
}

/// A random self-dual `[2k, k]` code generator, not in systematic form.
///
/// Building-up: from rows `r_i` of a self-dual code of length `2n` and any
/// odd-weight `x`, the rows `(1, 0, x)` and `(x.r_i, x.r_i, r_i)` generate a
/// self-dual code of length `2n + 2`.
pub fn building_up(rng: &mut impl Rng, k: usize) -> BitMatrix {
    let mut rows = vec![BitVector::from_bits([true, true])];
    for n in 1..k {
        let len = 2 * n;
        let x = loop {
            let x = random_vector(rng, len);
            if x.weight() % 2 == 1 {
                break x;
            }
        };
        let mut next = vec![BitVector::from_bits([true, false]).concat(&x)];
        for r in &rows {
            let y = x.dot(r);
            next.push(BitVector::from_bits([y, y]).concat(r));
        }
        rows = next;
    }
    BitMatrix::from_rows(rows, 2 * k).unwrap()
}

/// A random self-dual code in the form `[I_k | A]`, after a random column
/// permutation of a building-up code.
pub fn random_self_dual(rng: &mut impl Rng, k: usize) -> BitMatrix {
    let g = building_up(rng, k);
    let pivots: Vec<usize> = (0..k).collect();
    loop {
        let mut perm: Vec<usize> = (0..2 * k).collect();
        perm.shuffle(rng);
        let permuted = permute_columns(&g, &perm);
        if let Some(s) = permuted.systematic_form(&pivots).unwrap() {
            return s;
        }
    }
}

pub fn permute_columns(g: &BitMatrix, perm: &[usize]) -> BitMatrix {
    let rows = g.rows().iter().map(|r| BitVector::from_bits(perm.iter().map(|&c| r.get(c)))).collect();
    BitMatrix::from_rows(rows, g.ncols()).unwrap()
}

/// `A_w` for every `w` by summing all `2^k` row combinations.
pub fn brute_force_distribution(g: &BitMatrix) -> Vec<u64> {
    let k = g.nrows();
    assert!(k <= 16, "brute force is for small codes");
    let mut dist = vec![0u64; g.ncols() + 1];
    for mask in 0u32..(1 << k) {
        let mut word = BitVector::zeros(g.ncols());
        for i in 0..k {
            if mask >> i & 1 == 1 {
                word.xor_assign(g.row(i));
            }
        }
        dist[word.weight() as usize] += 1;
    }
    dist
}

/// Smallest nonzero weight of a distribution.
pub fn brute_force_min_distance(dist: &[u64]) -> u32 {
    (1..dist.len()).find(|&w| dist[w] > 0).expect("nonzero code") as u32
}
