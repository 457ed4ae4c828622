//! Exact-arithmetic toolkit for odd-dimensional sphere bundles with top-degree flux:
//! integral cohomology via the Gysin sequence, higher twisted cohomology, higher
//! twisted K-theory through the Atiyah-Hirzebruch spectral sequence, spherical
//! T-dual pairs, and a formal graded-commutative algebra that checks the Chern
//! series recursions symbolically.
//!
//! All group arithmetic is exact: finitely generated abelian groups are kept in
//! invariant-factor normal form over arbitrary-precision integers, so every
//! isomorphism test is a literal comparison of normal forms.

pub mod ahss;
pub mod catalog;
pub mod chern;
pub mod fgab;
pub mod graded;
pub mod gysin;
pub mod tduality;
