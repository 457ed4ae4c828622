//! Spherical T-dual pairs and verification of the degree-shifting
//! isomorphisms of twisted cohomology and twisted K-theory.
//!
//! The dual of a bundle with Euler number `e` and flux `h` over the same base
//! is the bundle with Euler number `h` and flux `e`; it exists exactly when
//! `h` satisfies the Euler admissibility rule for the given `n`.

use crate::ahss::{assemble_k, e2_page, run_to_infinity, AhssError};
use crate::fgab::{is_isomorphic, AbelianGroup};
use crate::graded::{twisted_cohomology, TwistError};
use crate::gysin::{admissible_euler, BundleWithFlux, GysinError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TdualError {
    #[error("dual Euler number {flux} is inadmissible for n={n} (flux must be even)")]
    InadmissibleDualEuler { n: usize, flux: i64 },
    #[error("twisted K-theory needs a torsion-free base")]
    TorsionBase,
    #[error(transparent)]
    Gysin(#[from] GysinError),
    #[error(transparent)]
    Twist(#[from] TwistError),
    #[error(transparent)]
    Ahss(#[from] AhssError),
}

/// Both sides of a duality check, with the verdict derived, never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualityReport {
    pub lhs_even: AbelianGroup,
    pub lhs_odd: AbelianGroup,
    pub rhs_even: AbelianGroup,
    pub rhs_odd: AbelianGroup,
}

impl DualityReport {
    /// True when the sides match with a degree shift:
    /// `lhs_even ~ rhs_odd` and `lhs_odd ~ rhs_even`.
    pub fn crossed_isomorphism_holds(&self) -> bool {
        is_isomorphic(&self.lhs_even, &self.rhs_odd)
            && is_isomorphic(&self.lhs_odd, &self.rhs_even)
    }
}

/// The spherical T-dual: same base, Euler number and flux exchanged.
pub fn dualize(bundle: &BundleWithFlux) -> Result<BundleWithFlux, TdualError> {
    let n = bundle.n();
    let flux = bundle.flux();
    if !admissible_euler(n, flux) {
        return Err(TdualError::InadmissibleDualEuler { n, flux });
    }
    Ok(BundleWithFlux::new(bundle.base().clone(), flux, bundle.euler())?)
}

/// Twisted cohomology of both sides of the dual pair.
pub fn verify_cohomology_duality(bundle: &BundleWithFlux) -> Result<DualityReport, TdualError> {
    let dual = dualize(bundle)?;
    let (lhs_even, lhs_odd) =
        twisted_cohomology(&bundle.total_space_cohomology(), bundle.flux())?;
    let (rhs_even, rhs_odd) = twisted_cohomology(&dual.total_space_cohomology(), dual.flux())?;
    Ok(DualityReport {
        lhs_even,
        lhs_odd,
        rhs_even,
        rhs_odd,
    })
}

/// Twisted K-theory of one bundle through the spectral sequence.
pub fn twisted_k(bundle: &BundleWithFlux) -> Result<(AbelianGroup, AbelianGroup), TdualError> {
    if !bundle.base().torsion_free {
        return Err(TdualError::TorsionBase);
    }
    let page = e2_page(&bundle.total_space_cohomology(), bundle.n())?;
    let limit = run_to_infinity(&page, bundle.flux())?;
    Ok(assemble_k(&limit))
}

/// Twisted K-theory of both sides of the dual pair (torsion-free bases only).
pub fn verify_k_duality(bundle: &BundleWithFlux) -> Result<DualityReport, TdualError> {
    if !bundle.base().torsion_free {
        return Err(TdualError::TorsionBase);
    }
    let dual = dualize(bundle)?;
    let (lhs_even, lhs_odd) = twisted_k(bundle)?;
    let (rhs_even, rhs_odd) = twisted_k(&dual)?;
    Ok(DualityReport {
        lhs_even,
        lhs_odd,
        rhs_even,
        rhs_odd,
    })
}
