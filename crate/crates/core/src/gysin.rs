//! Cohomology of an oriented `S^{2n-1}`-bundle over a closed `2n`-manifold,
//! solved degreewise from the Gysin sequence.
//!
//! Cup product with the Euler class is nonzero only on `H^0(M)` (its target in
//! any other degree lies above the top degree of the base), so the whole
//! sequence decouples into split short exact sequences. The one genuine
//! extension, in degree `2n`, of `H^1(M)` by the Euler cokernel, is resolved
//! as split: for torsion-free bases the quotient is free and the splitting is
//! forced, matching the summary formulas; for bases with torsion this is a
//! documented convention.

use crate::fgab::{direct_sum, kernel_cokernel, AbelianGroup, IntMatrix};
use crate::graded::{validate_base, BaseManifold, GradedGroup};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GysinError {
    #[error("Euler number must be even for n={n}")]
    InadmissibleEuler { n: usize, e: i64 },
    #[error("invalid base manifold: {0}")]
    InvalidBase(String),
}

/// Whether `e` can occur as the Euler number of an oriented `S^{2n-1}`-bundle:
/// any integer for `n = 2` (principal SU(2) bundles) and `n = 4` (the Hopf
/// bundle over `S^8` has odd Euler number); an even integer otherwise.
pub fn admissible_euler(n: usize, e: i64) -> bool {
    assert!(n >= 2, "sphere bundles considered here need n >= 2");
    match n {
        2 | 4 => true,
        _ => e % 2 == 0,
    }
}

/// An oriented `S^{2n-1}`-bundle `Z` over a `2n`-dimensional base, with Euler
/// number `e` and a top-degree flux `h` on the total space
/// (`H^{4n-1}(Z;Z) ~ Z`). Only valid combinations can be constructed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BundleWithFlux {
    base: BaseManifold,
    e: i64,
    h: i64,
}

impl BundleWithFlux {
    pub fn new(base: BaseManifold, e: i64, h: i64) -> Result<Self, GysinError> {
        let violations = validate_base(&base);
        if !violations.is_empty() {
            return Err(GysinError::InvalidBase(violations.join("; ")));
        }
        if !admissible_euler(base.half_dim, e) {
            return Err(GysinError::InadmissibleEuler {
                n: base.half_dim,
                e,
            });
        }
        Ok(Self { base, e, h })
    }

    pub fn base(&self) -> &BaseManifold {
        &self.base
    }

    /// The `n` of the fibre `S^{2n-1}`, equal to half the base dimension.
    pub fn n(&self) -> usize {
        self.base.half_dim
    }

    pub fn euler(&self) -> i64 {
        self.e
    }

    pub fn flux(&self) -> i64 {
        self.h
    }

    /// The flux pushed forward to `H^{2n}(M;Z) ~ Z`; the pushforward from the
    /// top degree of the total space is an isomorphism, the identity on the
    /// stored integer.
    pub fn pushforward_flux(&self) -> i64 {
        self.h
    }

    /// `H^*(Z;Z)` for the total space, top degree `4n - 1`.
    ///
    /// Degreewise: `H^j(Z) = H^j(M) + ker(x e : H^{j+1-2n}(M) -> H^{j+1}(M))`
    /// for `j != 2n`, and `H^{2n}(Z) = coker(x e : H^0(M) -> H^{2n}(M)) + H^1(M)`.
    pub fn total_space_cohomology(&self) -> GradedGroup {
        let n = self.n();
        let hm = &self.base.cohomology;
        let top = 4 * n - 1;
        let (euler_kernel, euler_cokernel) =
            kernel_cokernel(&IntMatrix::from_i64(1, 1, &[self.e]));

        let mut entries = Vec::with_capacity(top + 1);
        for j in 0..=top {
            let group = if j == 2 * n {
                direct_sum(&[euler_cokernel.clone(), hm.group(1)])
            } else {
                // the kernel summand: x e out of H^{j+1-2n}(M) is nonzero only
                // out of degree 0, everywhere else it is the zero map
                let shifted = (j + 1).checked_sub(2 * n);
                let kernel_part = match shifted {
                    None => AbelianGroup::zero(),
                    Some(0) => euler_kernel.clone(),
                    Some(i) => hm.group(i),
                };
                direct_sum(&[hm.group(j), kernel_part])
            };
            entries.push((j, group));
        }
        GradedGroup::from_entries(top, entries)
    }
}
