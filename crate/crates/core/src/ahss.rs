//! The twisted Atiyah-Hirzebruch spectral sequence of a sphere-bundle total
//! space, at the level of its computed pages.
//!
//! With point K-theory in the coefficients, odd rows vanish and even rows are
//! all equal by Bott periodicity, so a page is stored with the `q`-axis
//! collapsed to one group per column `p`. Every differential below the top one
//! vanishes on these total spaces (even-index ones because odd rows vanish,
//! odd-index ones below the top because they are torsion operators into free
//! targets), leaving the single differential `d_{4n-1} = cup h` from column 0
//! to column `4n-1`. Filtration extensions are split for torsion-free bases
//! (free quotients); pages carrying torsion outside column `2n` are refused
//! rather than guessed at.

use crate::fgab::{direct_sum, kernel_cokernel, AbelianGroup, IntMatrix};
use crate::graded::{parity_parts, GradedGroup};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AhssError {
    #[error("graded group has top degree {got}, expected {expected}")]
    TopDegreeMismatch { expected: usize, got: usize },
    #[error("base manifold must be torsion free (torsion found outside degree 2n)")]
    TorsionBase,
    #[error("columns 0 and 4n-1 must each be 0 or Z")]
    UnsupportedPageShape,
}

/// One page of the spectral sequence, `q`-axis collapsed: `entries[p]` is the
/// common even-row group in column `p`, for `0 <= p <= 4n-1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BigradedPage {
    r: usize,
    n: usize,
    entries: Vec<AbelianGroup>,
}

impl BigradedPage {
    pub fn page_index(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn top_column(&self) -> usize {
        4 * self.n - 1
    }

    /// Group in column `p`; zero outside `0..=4n-1`.
    pub fn column(&self, p: usize) -> AbelianGroup {
        self.entries.get(p).cloned().unwrap_or_else(AbelianGroup::zero)
    }

    /// Terminal pages hold the limit values.
    pub fn is_terminal(&self) -> bool {
        self.r >= 4 * self.n
    }
}

/// The `E_2` page: column `p` is `H^p(Z;Z)`.
pub fn e2_page(hz: &GradedGroup, n: usize) -> Result<BigradedPage, AhssError> {
    let expected = 4 * n - 1;
    if hz.top() != expected {
        return Err(AhssError::TopDegreeMismatch {
            expected,
            got: hz.top(),
        });
    }
    Ok(BigradedPage {
        r: 2,
        n,
        entries: (0..=expected).map(|p| hz.group(p)).collect(),
    })
}

/// Runs the sequence to the limit page for flux `h`.
///
/// All differentials up to `d_{4n-2}` act as zero; `d_{4n-1}` is
/// multiplication by `h` from column 0 to column `4n-1`, replacing those
/// columns by its kernel and cokernel.
pub fn run_to_infinity(page: &BigradedPage, h: i64) -> Result<BigradedPage, AhssError> {
    let n = page.n;
    let top = page.top_column();
    for p in 0..=top {
        if p != 2 * n && !page.column(p).is_torsion_free() {
            return Err(AhssError::TorsionBase);
        }
    }
    let z = AbelianGroup::free(1);
    let first = page.column(0);
    let last = page.column(top);
    let (new_first, new_last) = if first == z && last == z {
        let (ker, coker) = kernel_cokernel(&IntMatrix::from_i64(1, 1, &[h]));
        (ker, coker)
    } else if first.is_zero() || last.is_zero() {
        // the differential out of or into a zero group is the zero map
        (first, last)
    } else {
        return Err(AhssError::UnsupportedPageShape);
    };

    let mut entries = page.entries.clone();
    entries[0] = new_first;
    entries[top] = new_last;
    Ok(BigradedPage {
        r: 4 * n,
        n,
        entries,
    })
}

/// Assembles `(K^0, K^1)` from a terminal page: direct sums of the even and
/// odd columns, all filtration extensions split.
pub fn assemble_k(page: &BigradedPage) -> (AbelianGroup, AbelianGroup) {
    debug_assert!(page.is_terminal(), "assembly needs the limit page");
    let split = |parity: usize| {
        let cols: Vec<AbelianGroup> = (0..=page.top_column())
            .filter(|p| p % 2 == parity)
            .map(|p| page.column(p))
            .collect();
        direct_sum(&cols)
    };
    (split(0), split(1))
}

/// Untwisted K-theory of the total space for a torsion-free base: the zero
/// twist collapses the sequence, so `(K^even, K^odd)` are the parity parts of
/// `H^*(Z;Z)`.
pub fn untwisted_k(
    hz: &GradedGroup,
    n: usize,
) -> Result<(AbelianGroup, AbelianGroup), AhssError> {
    let expected = 4 * n - 1;
    if hz.top() != expected {
        return Err(AhssError::TopDegreeMismatch {
            expected,
            got: hz.top(),
        });
    }
    for (degree, group) in hz.iter() {
        if degree != 2 * n && !group.is_torsion_free() {
            return Err(AhssError::TorsionBase);
        }
    }
    Ok(parity_parts(hz))
}
