//! Degree-indexed cohomology models, parity aggregation and the twisted
//! cohomology of a top-degree flux.
//!
//! The twisted differential of a top-degree class acts only from degree 0 to
//! the top degree (every other cup component lands above the top degree and
//! vanishes, and the square is zero for the same reason), so it is implemented
//! as the single multiplication map `x h : H^0 -> H^top`. No cup-product
//! structure is stored.

use crate::fgab::{direct_sum, kernel_cokernel, AbelianGroup, IntMatrix};
use thiserror::Error;

/// A graded abelian group `H^0 .. H^top`; degrees outside the range are zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedGroup {
    groups: Vec<AbelianGroup>,
}

impl GradedGroup {
    /// All-zero graded group with the given top degree.
    pub fn zero(top: usize) -> Self {
        Self {
            groups: vec![AbelianGroup::zero(); top + 1],
        }
    }

    /// Builds from (degree, group) pairs; unlisted degrees are zero.
    pub fn from_entries<I>(top: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, AbelianGroup)>,
    {
        let mut g = Self::zero(top);
        for (degree, group) in entries {
            assert!(degree <= top, "degree {degree} above top {top}");
            g.groups[degree] = group;
        }
        g
    }

    pub fn top(&self) -> usize {
        self.groups.len() - 1
    }

    /// The group in one degree; zero outside `0..=top`.
    pub fn group(&self, degree: usize) -> AbelianGroup {
        self.groups.get(degree).cloned().unwrap_or_else(AbelianGroup::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &AbelianGroup)> {
        self.groups.iter().enumerate()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.groups.iter().all(AbelianGroup::is_torsion_free)
    }

    /// Sum of free ranks over all degrees.
    pub fn total_rank(&self) -> usize {
        self.groups.iter().map(AbelianGroup::rank).sum()
    }
}

/// Closed oriented connected manifold of dimension `2 * half_dim`, modeled by
/// its integral cohomology.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BaseManifold {
    pub name: String,
    pub half_dim: usize,
    pub cohomology: GradedGroup,
    pub torsion_free: bool,
}

impl BaseManifold {
    /// Builds a model and derives the torsion-free flag from the cohomology.
    pub fn new(name: impl Into<String>, half_dim: usize, cohomology: GradedGroup) -> Self {
        let torsion_free = cohomology.is_torsion_free();
        Self {
            name: name.into(),
            half_dim,
            cohomology,
            torsion_free,
        }
    }
}

/// Checks the closed-oriented-manifold invariants; returns one description per
/// violation (empty means valid).
pub fn validate_base(m: &BaseManifold) -> Vec<String> {
    let mut violations = Vec::new();
    if m.half_dim < 2 {
        violations.push(format!("half dimension must be >= 2, got {}", m.half_dim));
    }
    let dim = 2 * m.half_dim;
    if m.cohomology.top() != dim {
        violations.push(format!(
            "top degree {} does not match manifold dimension {}",
            m.cohomology.top(),
            dim
        ));
        return violations; // degree bookkeeping below assumes top = 2n
    }
    let z = AbelianGroup::free(1);
    if m.cohomology.group(0) != z {
        violations.push("H^0 must be Z".to_string());
    }
    if m.cohomology.group(dim) != z {
        violations.push(format!("H^{dim} must be Z"));
    }
    for j in 0..=m.half_dim {
        let low = m.cohomology.group(j).rank();
        let high = m.cohomology.group(dim - j).rank();
        if low != high {
            violations.push(format!(
                "rational duality violated: rank H^{j} = {low} but rank H^{} = {high}",
                dim - j
            ));
        }
    }
    if m.torsion_free != m.cohomology.is_torsion_free() {
        violations.push("torsion_free flag does not match the cohomology".to_string());
    }
    violations
}

/// Direct sums of the even-degree and odd-degree parts, in that order.
pub fn parity_parts(g: &GradedGroup) -> (AbelianGroup, AbelianGroup) {
    let split = |parity: usize| {
        let parts: Vec<AbelianGroup> = g
            .iter()
            .filter(|(degree, _)| degree % 2 == parity)
            .map(|(_, group)| group.clone())
            .collect();
        direct_sum(&parts)
    };
    (split(0), split(1))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwistError {
    #[error("degree 0 of the total space must be Z")]
    DegreeZeroNotZ,
    #[error("top degree of the total space must be Z")]
    TopNotZ,
}

/// Z_2-graded cohomology of `(H^*(Z), cup h)` for a top-degree flux integer.
///
/// Returns `(even, odd)`: the kernel of `x h` on degree 0 joins the remaining
/// even degrees, the cokernel on the top degree joins the remaining odd
/// degrees. Requires `H^0 = H^top = Z` (a sphere-bundle total space).
pub fn twisted_cohomology(
    g: &GradedGroup,
    h: i64,
) -> Result<(AbelianGroup, AbelianGroup), TwistError> {
    let top = g.top();
    debug_assert!(top % 2 == 1, "total space of an odd sphere bundle has odd top degree");
    let z = AbelianGroup::free(1);
    if g.group(0) != z {
        return Err(TwistError::DegreeZeroNotZ);
    }
    if g.group(top) != z {
        return Err(TwistError::TopNotZ);
    }
    let (ker, coker) = kernel_cokernel(&IntMatrix::from_i64(1, 1, &[h]));

    let mut even_parts = vec![ker];
    let mut odd_parts = vec![coker];
    for (degree, group) in g.iter() {
        if degree == 0 || degree == top {
            continue;
        }
        if degree % 2 == 0 {
            even_parts.push(group.clone());
        } else {
            odd_parts.push(group.clone());
        }
    }
    Ok((direct_sum(&even_parts), direct_sum(&odd_parts)))
}
