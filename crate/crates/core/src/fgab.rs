//! Finitely generated abelian groups and exact integer-matrix homomorphisms.
//!
//! Every group is stored in invariant-factor normal form: a free rank together
//! with a chain of torsion coefficients `d_1 | d_2 | ... | d_t`, each `>= 2`.
//! The normal form is unique, so abstract isomorphism is plain equality.
//! Smith normal form over arbitrary-precision integers drives kernels,
//! cokernels and the renormalization of direct sums.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A finitely generated abelian group `Z^rank + Z_{d_1} + ... + Z_{d_t}`
/// in invariant-factor normal form (`d_i | d_{i+1}`, every `d_i >= 2`).
///
/// Construction normalizes arbitrary factor lists, so two values compare
/// equal exactly when the groups are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AbelianGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    /// Builds the group `Z^rank + Z_{f_1} + ...` from any list of cyclic factors.
    ///
    /// Factors are taken up to sign, `1`s are dropped, `0`s count toward the
    /// free rank, and the rest is renormalized into a divisibility chain.
    pub fn new<I, T>(rank: usize, factors: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut free = rank;
        let mut torsion = Vec::new();
        for f in factors {
            let f: BigInt = f.into();
            if f.is_zero() {
                free += 1;
            } else if !f.abs().is_one() {
                torsion.push(f.abs());
            }
        }
        Self {
            rank: free,
            torsion: normalize_chain(torsion),
        }
    }

    /// The zero group.
    pub fn zero() -> Self {
        Self::free(0)
    }

    /// The free group `Z^rank`.
    pub fn free(rank: usize) -> Self {
        Self {
            rank,
            torsion: Vec::new(),
        }
    }

    /// The cyclic group `Z_{|d|}`, with `Z_0 = Z` and `Z_1 = 0`.
    pub fn cyclic(d: i64) -> Self {
        Self::new(0, [d])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Invariant factors, each `>= 2`, in divisibility order.
    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z_{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Dense integer matrix with arbitrary-precision entries, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::new(
            rows,
            cols,
            entries.iter().map(|&e| BigInt::from(e)).collect(),
        )
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Square diagonal matrix with the given entries.
    pub fn diagonal(entries: &[BigInt]) -> Self {
        let n = entries.len();
        let mut m = Self::zero(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.at(i, k) * other.at(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.entries.clone();
        let at = |m: &Vec<BigInt>, i: usize, j: usize| m[i * n + j].clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if at(&m, k, k).is_zero() {
                match (k + 1..n).find(|&i| !at(&m, i, k).is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            m.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (at(&m, i, j) * at(&m, k, k) - at(&m, i, k) * at(&m, k, j)) / &prev;
                    m[i * n + j] = v;
                }
            }
            prev = at(&m, k, k);
        }
        sign * at(&m, n - 1, n - 1)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] -= q * row[source]
    fn row_submul(&mut self, target: usize, source: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = self.at(target, j) - q * self.at(source, j);
            self.set(target, j, v);
        }
    }

    /// col[target] -= q * col[source]
    fn col_submul(&mut self, target: usize, source: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = self.at(i, target) - q * self.at(i, source);
            self.set(i, target, v);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.at(r, j);
            self.set(r, j, v);
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Decomposition `left * a * right = diagonal` with unimodular transforms and
/// the diagonal in invariant-factor order.
#[derive(Clone, Debug)]
pub struct SmithNormalForm {
    pub left: IntMatrix,
    pub diagonal: IntMatrix,
    pub right: IntMatrix,
}

/// Smith normal form of an arbitrary (possibly empty or zero) integer matrix.
///
/// Each sweep moves a minimal-absolute-value nonzero entry of the trailing
/// submatrix to the pivot and reduces its row and column with rounded
/// division, so leftover remainders are at most half the pivot and the
/// selected pivot at least halves between sweeps. Once the pivot row and
/// column are clear it is forced to divide the whole remaining submatrix,
/// which yields the divisibility chain by construction. Diagonal entries are
/// normalized to be non-negative.
pub fn smith_normal_form(a: &IntMatrix) -> SmithNormalForm {
    let mut d = a.clone();
    let mut left = IntMatrix::identity(d.rows);
    let mut right = IntMatrix::identity(d.cols);

    let steps = d.rows.min(d.cols);
    'columns: for t in 0..steps {
        loop {
            let Some((pi, pj)) = min_abs_entry(&d, t) else {
                break 'columns; // the whole trailing submatrix is zero
            };
            d.swap_rows(t, pi);
            left.swap_rows(t, pi);
            d.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..d.rows {
                if d.at(i, t).is_zero() {
                    continue;
                }
                let q = div_rounded(d.at(i, t), d.at(t, t));
                if !q.is_zero() {
                    d.row_submul(i, t, &q);
                    left.row_submul(i, t, &q);
                }
                if !d.at(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..d.cols {
                if d.at(t, j).is_zero() {
                    continue;
                }
                let q = div_rounded(d.at(t, j), d.at(t, t));
                if !q.is_zero() {
                    d.col_submul(j, t, &q);
                    right.col_submul(j, t, &q);
                }
                if !d.at(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue; // a remainder smaller than the pivot is now available
            }
            // pivot row/column are clear; force pivot | remaining submatrix
            match first_nondivisible(&d, t) {
                Some(i) => {
                    let minus_one = BigInt::from(-1);
                    d.row_submul(t, i, &minus_one);
                    left.row_submul(t, i, &minus_one);
                }
                None => break,
            }
        }
    }

    for i in 0..steps {
        if d.at(i, i).is_negative() {
            d.negate_row(i);
            left.negate_row(i);
        }
    }

    SmithNormalForm {
        left,
        diagonal: d,
        right,
    }
}

/// Quotient minimizing the remainder: `|a - q*p| <= |p| / 2`.
fn div_rounded(a: &BigInt, p: &BigInt) -> BigInt {
    let q = a / p;
    let r = a - &q * p;
    if r.is_zero() || (&r * 2u8).abs() <= p.abs() {
        return q;
    }
    if r.sign() == p.sign() {
        q + 1
    } else {
        q - 1
    }
}

/// Position of a minimal-|.|-value nonzero entry of the trailing submatrix.
fn min_abs_entry(m: &IntMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in from..m.rows {
        for j in from..m.cols {
            let v = m.at(i, j);
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m.at(bi, bj).abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Row index of some entry below/right of the pivot not divisible by it.
fn first_nondivisible(m: &IntMatrix, t: usize) -> Option<usize> {
    let p = m.at(t, t);
    for i in t + 1..m.rows {
        for j in t + 1..m.cols {
            if !(m.at(i, j) % p).is_zero() {
                return Some(i);
            }
        }
    }
    None
}

/// Nonzero diagonal entries of the Smith normal form, in chain order.
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    let snf = smith_normal_form(a);
    (0..a.rows.min(a.cols))
        .map(|i| snf.diagonal.at(i, i).clone())
        .filter(|d| !d.is_zero())
        .collect()
}

/// Kernel and cokernel of a homomorphism `f : Z^a -> Z^b` given as a `b x a`
/// matrix. The kernel of a map between free groups is free; the cokernel
/// carries the nontrivial invariant factors of `f` as torsion.
pub fn kernel_cokernel(f: &IntMatrix) -> (AbelianGroup, AbelianGroup) {
    let factors = invariant_factors(f);
    let rank_q = factors.len();
    let ker = AbelianGroup::free(f.cols - rank_q);
    let coker = AbelianGroup::new(f.rows - rank_q, factors);
    (ker, coker)
}

/// Direct sum of any list of groups, renormalized into a single chain.
pub fn direct_sum(groups: &[AbelianGroup]) -> AbelianGroup {
    let rank = groups.iter().map(AbelianGroup::rank).sum();
    let factors: Vec<BigInt> = groups
        .iter()
        .flat_map(|g| g.torsion.iter().cloned())
        .collect();
    AbelianGroup {
        rank,
        torsion: normalize_chain(factors),
    }
}

/// Abstract isomorphism test: equality of invariant-factor normal forms.
pub fn is_isomorphic(a: &AbelianGroup, b: &AbelianGroup) -> bool {
    a == b
}

/// Renormalizes positive factors (each >= 2) into a divisibility chain via the
/// Smith normal form of the diagonal matrix they span.
fn normalize_chain(factors: Vec<BigInt>) -> Vec<BigInt> {
    debug_assert!(factors.iter().all(|f| f > &BigInt::one()));
    if factors.len() <= 1 {
        return factors;
    }
    if factors
        .windows(2)
        .all(|w| (&w[1] % &w[0]).is_zero())
    {
        return factors; // already a chain
    }
    invariant_factors(&IntMatrix::diagonal(&factors))
        .into_iter()
        .filter(|d| !d.is_one())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn diagonal_entries(snf: &SmithNormalForm) -> Vec<BigInt> {
        let d = &snf.diagonal;
        (0..d.rows().min(d.cols())).map(|i| d.at(i, i).clone()).collect()
    }

    fn check_snf(a: &IntMatrix) -> SmithNormalForm {
        let snf = smith_normal_form(a);
        assert_eq!(snf.left.mul(a).mul(&snf.right), snf.diagonal, "U*A*V != D");
        assert!(snf.left.determinant().abs().is_one(), "U not unimodular");
        assert!(snf.right.determinant().abs().is_one(), "V not unimodular");
        let diag = diagonal_entries(&snf);
        for w in diag.windows(2) {
            assert!(
                !w[0].is_zero() || w[1].is_zero(),
                "zero before nonzero on the diagonal"
            );
            if !w[0].is_zero() {
                assert!((&w[1] % &w[0]).is_zero(), "chain violated: {} | {}", w[0], w[1]);
            }
        }
        assert!(diag.iter().all(|d| !d.is_negative()));
        // off-diagonal must vanish
        for i in 0..snf.diagonal.rows() {
            for j in 0..snf.diagonal.cols() {
                if i != j {
                    assert!(snf.diagonal.at(i, j).is_zero());
                }
            }
        }
        snf
    }

    /// Independent oracle: d_k = D_k / D_{k-1} where D_k is the gcd of all
    /// k x k minors (determinantal divisors).
    fn snf_via_minor_gcds(a: &IntMatrix) -> Vec<BigInt> {
        fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
            combos_from(0, n, k)
        }
        fn combos_from(from: usize, n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in from..n {
                for mut rest in combos_from(first + 1, n, k - 1) {
                    let mut c = vec![first];
                    c.append(&mut rest);
                    out.push(c);
                }
            }
            out
        }
        use num_integer::Integer;
        let max_k = a.rows().min(a.cols());
        let mut divisors = Vec::new();
        let mut prev = BigInt::one();
        for k in 1..=max_k {
            let mut g = BigInt::zero();
            for rows in combos(a.rows(), k) {
                for cols in combos(a.cols(), k) {
                    let mut sub = IntMatrix::zero(k, k);
                    for (i, &r) in rows.iter().enumerate() {
                        for (j, &c) in cols.iter().enumerate() {
                            sub.set(i, j, a.at(r, c).clone());
                        }
                    }
                    g = g.gcd(&sub.determinant());
                }
            }
            if g.is_zero() {
                break;
            }
            divisors.push(&g / &prev);
            prev = g;
        }
        divisors
    }

    #[test]
    fn snf_one_by_one() {
        let a = IntMatrix::from_i64(1, 1, &[6]);
        let snf = check_snf(&a);
        assert_eq!(diagonal_entries(&snf), vec![big(6)]);
        assert_eq!(snf.left, IntMatrix::identity(1));
        assert_eq!(snf.right, IntMatrix::identity(1));
    }

    #[test]
    fn snf_two_by_two() {
        let a = IntMatrix::from_i64(2, 2, &[2, 4, 6, 8]);
        let snf = check_snf(&a);
        assert_eq!(diagonal_entries(&snf), vec![big(2), big(4)]);
        // determinantal-divisor oracle agrees
        assert_eq!(snf_via_minor_gcds(&a), vec![big(2), big(4)]);
    }

    #[test]
    fn snf_zero_matrix() {
        let a = IntMatrix::zero(2, 2);
        let snf = check_snf(&a);
        assert_eq!(snf.diagonal, IntMatrix::zero(2, 2));
    }

    #[test]
    fn snf_empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let a = IntMatrix::zero(r, c);
            let snf = check_snf(&a);
            assert_eq!(snf.diagonal.rows(), r);
            assert_eq!(snf.diagonal.cols(), c);
        }
    }

    #[test]
    fn snf_matches_minor_gcd_oracle() {
        // deterministic small sweep, exercising negative and redundant entries
        let samples: &[(usize, usize, &[i64])] = &[
            (2, 3, &[4, -6, 10, 0, 8, -2]),
            (3, 2, &[3, 3, 3, 3, 3, 3]),
            (3, 3, &[2, 0, 0, 0, 3, 0, 0, 0, 5]),
            (3, 3, &[-1, 2, -3, 4, -5, 6, -7, 8, -9]),
            (2, 2, &[0, 7, -7, 0]),
            (3, 4, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]),
        ];
        for &(r, c, entries) in samples {
            let a = IntMatrix::from_i64(r, c, entries);
            let snf = check_snf(&a);
            let nonzero: Vec<BigInt> = diagonal_entries(&snf)
                .into_iter()
                .filter(|d| !d.is_zero())
                .collect();
            assert_eq!(nonzero, snf_via_minor_gcds(&a), "oracle mismatch for {a}");
        }
    }

    #[test]
    fn kernel_cokernel_examples() {
        // x6 : Z -> Z
        let (ker, coker) = kernel_cokernel(&IntMatrix::from_i64(1, 1, &[6]));
        assert_eq!(ker, AbelianGroup::zero());
        assert_eq!(coker, AbelianGroup::cyclic(6));

        // x0 : Z -> Z
        let (ker, coker) = kernel_cokernel(&IntMatrix::from_i64(1, 1, &[0]));
        assert_eq!(ker, AbelianGroup::free(1));
        assert_eq!(coker, AbelianGroup::free(1));

        // diag(2,3) : Z^2 -> Z^2 has cokernel Z_6
        let (ker, coker) = kernel_cokernel(&IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]));
        assert_eq!(ker, AbelianGroup::zero());
        assert_eq!(coker, AbelianGroup::cyclic(6));
    }

    #[test]
    fn direct_sum_examples() {
        let sum = direct_sum(&[AbelianGroup::cyclic(4), AbelianGroup::cyclic(6)]);
        assert_eq!(sum, AbelianGroup::new(0, [2, 12]));

        let sum = direct_sum(&[AbelianGroup::free(1), AbelianGroup::cyclic(6)]);
        assert_eq!(sum.rank(), 1);
        assert_eq!(sum.torsion(), &[big(6)]);

        assert_eq!(direct_sum(&[]), AbelianGroup::zero());
    }

    #[test]
    fn isomorphism_examples() {
        let a = direct_sum(&[AbelianGroup::cyclic(2), AbelianGroup::cyclic(12)]);
        let b = direct_sum(&[AbelianGroup::cyclic(4), AbelianGroup::cyclic(6)]);
        assert!(is_isomorphic(&a, &b));
        assert!(!is_isomorphic(&AbelianGroup::free(1), &AbelianGroup::zero()));
        assert!(is_isomorphic(&AbelianGroup::cyclic(6), &AbelianGroup::cyclic(6)));
    }

    #[test]
    fn cyclic_degenerate_factors() {
        assert_eq!(AbelianGroup::cyclic(0), AbelianGroup::free(1));
        assert_eq!(AbelianGroup::cyclic(1), AbelianGroup::zero());
        assert_eq!(AbelianGroup::cyclic(-6), AbelianGroup::cyclic(6));
    }

    #[test]
    fn display_normal_form() {
        assert_eq!(AbelianGroup::zero().to_string(), "0");
        assert_eq!(AbelianGroup::free(1).to_string(), "Z");
        assert_eq!(AbelianGroup::new(2, [2, 12]).to_string(), "Z^2 + Z_2 + Z_12");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_matrix() -> impl Strategy<Value = IntMatrix> {
            (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
                proptest::collection::vec(-20i64..=20, r * c)
                    .prop_map(move |e| IntMatrix::from_i64(r, c, &e))
            })
        }

        proptest! {
            #[test]
            fn snf_identity_and_chain(a in arb_matrix()) {
                check_snf(&a);
            }

            #[test]
            fn rank_nullity(a in arb_matrix()) {
                let (ker, _) = kernel_cokernel(&a);
                let rank_q = invariant_factors(&a).len();
                prop_assert_eq!(ker.rank() + rank_q, a.cols());
            }

            #[test]
            fn direct_sum_is_commutative_and_associative(
                factors in proptest::collection::vec((0usize..=2, proptest::collection::vec(2i64..=18, 0..=3)), 1..=4)
            ) {
                let groups: Vec<AbelianGroup> = factors
                    .iter()
                    .map(|(r, t)| AbelianGroup::new(*r, t.iter().copied()))
                    .collect();
                let forward = direct_sum(&groups);
                let mut reversed = groups.clone();
                reversed.reverse();
                prop_assert_eq!(&forward, &direct_sum(&reversed));
                // fold pairwise in arbitrary association
                let folded = groups
                    .iter()
                    .fold(AbelianGroup::zero(), |acc, g| direct_sum(&[acc, g.clone()]));
                prop_assert_eq!(&forward, &folded);
            }
        }
    }
}
