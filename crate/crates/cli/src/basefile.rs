//! Inline base-manifold descriptions: a JSON document listing, per degree,
//! the rank and torsion coefficients of the cohomology.

use serde::Deserialize;
use sphere_tdual::fgab::AbelianGroup;
use sphere_tdual::graded::{BaseManifold, GradedGroup};
use std::path::Path;

#[derive(Deserialize)]
struct BaseFile {
    name: String,
    dim: usize,
    groups: Vec<DegreeEntry>,
}

#[derive(Deserialize)]
struct DegreeEntry {
    degree: usize,
    rank: usize,
    #[serde(default)]
    torsion: Vec<i64>,
}

/// Reads a base manifold from a JSON file. Unlisted degrees are zero.
pub fn read_base_file(path: &Path) -> Result<BaseManifold, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let parsed: BaseFile =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    if !parsed.dim.is_multiple_of(2) || parsed.dim < 4 {
        return Err(format!(
            "base dimension must be an even integer >= 4, got {}",
            parsed.dim
        ));
    }
    let mut entries = Vec::new();
    for g in &parsed.groups {
        if g.degree > parsed.dim {
            return Err(format!(
                "degree {} exceeds the manifold dimension {}",
                g.degree, parsed.dim
            ));
        }
        entries.push((g.degree, AbelianGroup::new(g.rank, g.torsion.iter().copied())));
    }
    Ok(BaseManifold::new(
        parsed.name,
        parsed.dim / 2,
        GradedGroup::from_entries(parsed.dim, entries),
    ))
}
