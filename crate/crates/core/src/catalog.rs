//! Built-in base-manifold models used by the command line and the test sweeps.
//!
//! All entries are closed oriented even-dimensional manifolds given by their
//! integral cohomology. `Tor6` is a synthetic base with 2-torsion in degree 2;
//! it satisfies the rational duality ranks and exists solely to exercise the
//! torsion-refusal paths of the K-theory pipeline.

use crate::fgab::AbelianGroup;
use crate::graded::{BaseManifold, GradedGroup};

fn z() -> AbelianGroup {
    AbelianGroup::free(1)
}

fn free(rank: usize) -> AbelianGroup {
    AbelianGroup::free(rank)
}

/// Even sphere `S^{2n}`.
fn sphere(name: &str, n: usize) -> BaseManifold {
    BaseManifold::new(
        name,
        n,
        GradedGroup::from_entries(2 * n, [(0, z()), (2 * n, z())]),
    )
}

/// Complex projective space `CP^n`, one `Z` in every even degree.
fn complex_projective(name: &str, n: usize) -> BaseManifold {
    let entries = (0..=n).map(|i| (2 * i, z()));
    BaseManifold::new(name, n, GradedGroup::from_entries(2 * n, entries))
}

/// All built-in bases.
pub fn builtin() -> Vec<BaseManifold> {
    vec![
        sphere("S4", 2),
        sphere("S6", 3),
        sphere("S8", 4),
        sphere("S10", 5),
        BaseManifold::new(
            "S2xS4",
            3,
            GradedGroup::from_entries(6, [(0, z()), (2, z()), (4, z()), (6, z())]),
        ),
        BaseManifold::new(
            "S2xS6",
            4,
            GradedGroup::from_entries(8, [(0, z()), (2, z()), (6, z()), (8, z())]),
        ),
        BaseManifold::new(
            "S4xS4",
            4,
            GradedGroup::from_entries(8, [(0, z()), (4, free(2)), (8, z())]),
        ),
        BaseManifold::new(
            "S3xS3",
            3,
            GradedGroup::from_entries(6, [(0, z()), (3, free(2)), (6, z())]),
        ),
        complex_projective("CP3", 3),
        BaseManifold::new(
            "CP2xS2",
            3,
            GradedGroup::from_entries(
                6,
                [(0, z()), (2, free(2)), (4, free(2)), (6, z())],
            ),
        ),
        complex_projective("CP4", 4),
        // synthetic 6-manifold model with Z_2 in degree 2
        BaseManifold::new(
            "Tor6",
            3,
            GradedGroup::from_entries(6, [(0, z()), (2, AbelianGroup::cyclic(2)), (6, z())]),
        ),
    ]
}

/// Looks a base up by name (case-sensitive).
pub fn lookup(name: &str) -> Option<BaseManifold> {
    builtin().into_iter().find(|m| m.name == name)
}
