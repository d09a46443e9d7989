//! The groups of order 12, each with a fixed element ordering.
//!
//! Orderings determine how the coefficient blocks land in `sigma_3(v)`:
//!
//! | case        | ordering                                             |
//! |-------------|------------------------------------------------------|
//! | D12 case 1  | `1, b^5, b^4, .., b, a, ab, .., ab^5`                |
//! | D12 case 2  | `1, b, .., b^5, a, ab, .., ab^5`                     |
//! | C12 case 1  | `1, g^2, g^4, .., g^10, g, g^3, .., g^11`            |
//! | C12 case 2  | `1, g^4, g^8, g, g^5, g^9, g^2, g^6, g^10, g^3, g^7, g^11` |
//! | C6 x C2     | `(x^i, 1)` for `i = 0..5`, then `(x^i, z)`           |
//! | C3 x C4     | `(u^m, w^k)` with `k` outer, `m` inner               |
//! | A4          | fitted to the first ten rows of the published group matrix (see below) |
//! | Dic12       | `1, x, .., x^5, y, yx, .., yx^5`                     |
//!
//! D12 is `<a, b | a^2 = b^6 = 1, ab = b^-1 a>`; Dic12 is
//! `<x, y | x^6 = 1, y^2 = x^3, y^-1 x y = x^-1>`.

use core::fmt;

/// A group of order 12 given by its Cayley table under a fixed ordering.
/// Element 0 is the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: &'static str,
    pub labels: [&'static str; 12],
    /// `cayley[i][j]` is the index of `g_i * g_j`.
    pub cayley: [[u8; 12]; 12],
    /// `inverse[i]` is the index of `g_i^-1`.
    pub inverse: [u8; 12],
}

impl fmt::Debug for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupSpec").field("name", &self.name).field("labels", &self.labels).finish()
    }
}

impl GroupSpec {
    fn from_elements<T: Copy + PartialEq>(
        name: &'static str,
        labels: [&'static str; 12],
        elements: [T; 12],
        mul: impl Fn(T, T) -> T,
    ) -> Self {
        let index = |x: T| elements.iter().position(|&e| e == x).expect("group not closed under multiplication") as u8;
        let mut cayley = [[0u8; 12]; 12];
        for (i, &gi) in elements.iter().enumerate() {
            for (j, &gj) in elements.iter().enumerate() {
                cayley[i][j] = index(mul(gi, gj));
            }
        }
        let mut inverse = [0u8; 12];
        for i in 0..12 {
            inverse[i] = (0..12).find(|&j| cayley[i][j] == 0).expect("identity must be element 0") as u8;
        }
        Self { name, labels, cayley, inverse }
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.cayley[i][j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    /// Every row and column of the Cayley table is a permutation.
    pub fn is_latin_square(&self) -> bool {
        (0..12).all(|i| {
            let mut row = 0u16;
            let mut col = 0u16;
            for j in 0..12 {
                row |= 1 << self.cayley[i][j];
                col |= 1 << self.cayley[j][i];
            }
            row == 0xfff && col == 0xfff
        })
    }

    /// Element 0 is a two-sided identity and `inverse` is consistent.
    pub fn is_consistent(&self) -> bool {
        (0..12).all(|i| {
            self.mul(0, i) == i && self.mul(i, 0) == i && self.mul(self.inv(i), i) == 0 && self.mul(i, self.inv(i)) == 0
        })
    }

    pub fn is_associative(&self) -> bool {
        (0..12).all(|a| (0..12).all(|b| (0..12).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))))
    }

    /// `D12` with ordering `1, b^5, .., b, a, ab, .., ab^5`.
    pub fn dihedral_case1() -> Self {
        let els = [(0, 0), (0, 5), (0, 4), (0, 3), (0, 2), (0, 1), (1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5)];
        Self::from_elements(
            "D12 (case 1)",
            ["1", "b^5", "b^4", "b^3", "b^2", "b", "a", "ab", "ab^2", "ab^3", "ab^4", "ab^5"],
            els,
            dihedral_mul,
        )
    }

    /// `D12` with ordering `1, b, .., b^5, a, ab, .., ab^5`.
    pub fn dihedral_case2() -> Self {
        let els = [(0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5)];
        Self::from_elements(
            "D12 (case 2)",
            ["1", "b", "b^2", "b^3", "b^4", "b^5", "a", "ab", "ab^2", "ab^3", "ab^4", "ab^5"],
            els,
            dihedral_mul,
        )
    }

    /// `C12` in the natural ordering `1, g, .., g^11`.
    pub fn cyclic_natural() -> Self {
        Self::cyclic(
            "C12",
            ["1", "g", "g^2", "g^3", "g^4", "g^5", "g^6", "g^7", "g^8", "g^9", "g^10", "g^11"],
            [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
        )
    }

    /// `C12` with even powers first: a 2x2 arrangement of 6-block circulants.
    pub fn cyclic_case1() -> Self {
        Self::cyclic(
            "C12 (case 1)",
            ["1", "g^2", "g^4", "g^6", "g^8", "g^10", "g", "g^3", "g^5", "g^7", "g^9", "g^11"],
            [0, 2, 4, 6, 8, 10, 1, 3, 5, 7, 9, 11],
        )
    }

    /// `C12` ordered by cosets `g^k <g^4>`: a 4x4 arrangement of 3-block circulants.
    pub fn cyclic_case2() -> Self {
        Self::cyclic(
            "C12 (case 2)",
            ["1", "g^4", "g^8", "g", "g^5", "g^9", "g^2", "g^6", "g^10", "g^3", "g^7", "g^11"],
            [0, 4, 8, 1, 5, 9, 2, 6, 10, 3, 7, 11],
        )
    }

    fn cyclic(name: &'static str, labels: [&'static str; 12], powers: [u8; 12]) -> Self {
        Self::from_elements(name, labels, powers, |a, b| (a + b) % 12)
    }

    /// `C6 x C2 = <x> x <z>`, with the `z`-component outer.
    pub fn c6_x_c2() -> Self {
        let els = [(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (5, 0), (0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1)];
        Self::from_elements(
            "C6 x C2",
            ["1", "x", "x^2", "x^3", "x^4", "x^5", "z", "xz", "x^2z", "x^3z", "x^4z", "x^5z"],
            els,
            |(a, b): (u8, u8), (c, d): (u8, u8)| ((a + c) % 6, (b + d) % 2),
        )
    }

    /// `C3 x C4 = <u> x <w>`, with the `w`-component outer.
    pub fn c3_x_c4() -> Self {
        let els = [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1), (0, 2), (1, 2), (2, 2), (0, 3), (1, 3), (2, 3)];
        Self::from_elements(
            "C3 x C4",
            ["1", "u", "u^2", "w", "uw", "u^2w", "w^2", "uw^2", "u^2w^2", "w^3", "uw^3", "u^2w^3"],
            els,
            |(a, b): (u8, u8), (c, d): (u8, u8)| ((a + c) % 3, (b + d) % 4),
        )
    }

    /// `A4` as even permutations of `{0,1,2,3}` (image lists), ordered so that
    /// the group matrix reproduces the published `A4` block matrix. The
    /// product `p * q` applies `q` first.
    pub fn alternating() -> Self {
        let els: [[u8; 4]; 12] = [
            [0, 1, 2, 3],
            [0, 2, 3, 1],
            [0, 3, 1, 2],
            [1, 0, 3, 2],
            [1, 3, 2, 0],
            [1, 2, 0, 3],
            [2, 3, 0, 1],
            [2, 0, 1, 3],
            [2, 1, 3, 0],
            [3, 2, 1, 0],
            [3, 1, 0, 2],
            [3, 0, 2, 1],
        ];
        Self::from_elements(
            "A4",
            [
                "()",
                "(1 2 3)",
                "(1 3 2)",
                "(0 1)(2 3)",
                "(0 1 3)",
                "(0 1 2)",
                "(0 2)(1 3)",
                "(0 2 1)",
                "(0 2 3)",
                "(0 3)(1 2)",
                "(0 3 2)",
                "(0 3 1)",
            ],
            els,
            |p, q| [p[q[0] as usize], p[q[1] as usize], p[q[2] as usize], p[q[3] as usize]],
        )
    }

    /// `Dic12` with ordering `1, x, .., x^5, y, yx, .., yx^5`.
    pub fn dicyclic() -> Self {
        let els = [(0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5)];
        Self::from_elements(
            "Dic12",
            ["1", "x", "x^2", "x^3", "x^4", "x^5", "y", "yx", "yx^2", "yx^3", "yx^4", "yx^5"],
            els,
            dicyclic_mul,
        )
    }
}

/// `(s, r)` is `a^s b^r`; uses `b^r a = a b^-r`.
fn dihedral_mul((s1, r1): (u8, u8), (s2, r2): (u8, u8)) -> (u8, u8) {
    let r1 = if s2 == 1 { (6 - r1) % 6 } else { r1 };
    ((s1 + s2) % 2, (r1 + r2) % 6)
}

/// `(e, k)` is `y^e x^k`; uses `x^k y = y x^-k` and `y^2 = x^3`.
fn dicyclic_mul((e1, k1): (u8, u8), (e2, k2): (u8, u8)) -> (u8, u8) {
    match (e1, e2) {
        (_, 0) => (e1, (k1 + k2) % 6),
        (0, _) => (1, (6 - k1 + k2) % 6),
        _ => (0, (3 + 6 - k1 + k2) % 6),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all() -> [GroupSpec; 9] {
        [
            GroupSpec::dihedral_case1(),
            GroupSpec::dihedral_case2(),
            GroupSpec::cyclic_natural(),
            GroupSpec::cyclic_case1(),
            GroupSpec::cyclic_case2(),
            GroupSpec::c6_x_c2(),
            GroupSpec::c3_x_c4(),
            GroupSpec::alternating(),
            GroupSpec::dicyclic(),
        ]
    }

    fn order(g: &GroupSpec, i: usize) -> usize {
        let mut x = i;
        let mut n = 1;
        while x != 0 {
            x = g.mul(x, i);
            n += 1;
        }
        n
    }

    fn order_profile(g: &GroupSpec) -> [usize; 13] {
        let mut p = [0; 13];
        for i in 0..12 {
            p[order(g, i)] += 1;
        }
        p
    }

    #[test]
    fn groups_are_groups() {
        for g in all() {
            assert!(g.is_latin_square(), "{}", g.name);
            assert!(g.is_consistent(), "{}", g.name);
            assert!(g.is_associative(), "{}", g.name);
        }
    }

    #[test]
    fn element_order_profiles_identify_the_groups() {
        let commutative = |g: &GroupSpec| (0..12).all(|i| (0..12).all(|j| g.mul(i, j) == g.mul(j, i)));
        let d = GroupSpec::dihedral_case1();
        assert!(!commutative(&d));
        // D12: 1 identity, 7 involutions, 2 of order 3, 2 of order 6.
        assert_eq!(order_profile(&d), [0, 1, 7, 2, 0, 0, 2, 0, 0, 0, 0, 0, 0]);
        assert_eq!(order_profile(&GroupSpec::cyclic_case2())[12], 4);
        assert_eq!(order_profile(&GroupSpec::c3_x_c4())[12], 4);
        assert_eq!(order_profile(&GroupSpec::c6_x_c2())[2], 3);
        // A4: 3 involutions, 8 elements of order 3.
        assert_eq!(order_profile(&GroupSpec::alternating()), [0, 1, 3, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        // Dic12: a single involution, 6 elements of order 4.
        let dic = GroupSpec::dicyclic();
        assert!(!commutative(&dic));
        assert_eq!(order_profile(&dic), [0, 1, 1, 2, 6, 0, 2, 0, 0, 0, 0, 0, 0]);
    }
}
