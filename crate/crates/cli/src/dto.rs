//! Machine-readable document types. Every command emits
//! `{"command": ..., "inputs": ..., "results": ...}` and each document
//! round-trips through serde unchanged.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use sphere_tdual::fgab::AbelianGroup;

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct GroupDto {
    pub rank: usize,
    pub torsion: Vec<u128>,
}

impl From<&AbelianGroup> for GroupDto {
    fn from(g: &AbelianGroup) -> Self {
        Self {
            rank: g.rank(),
            torsion: g
                .torsion()
                .iter()
                .map(|d| d.to_u128().expect("torsion coefficient exceeds u128"))
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct Document<I, R> {
    pub command: String,
    pub inputs: I,
    pub results: R,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct BundleInputs {
    pub base: String,
    pub n: usize,
    pub e: i64,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct TwistedInputs {
    pub base: String,
    pub n: usize,
    pub e: i64,
    pub h: i64,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct ChernInputs {
    pub k: u32,
    #[serde(rename = "N")]
    pub truncation: u32,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct DegreeGroup {
    pub degree: usize,
    pub group: GroupDto,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct CohomologyResults {
    pub cohomology: Vec<DegreeGroup>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct TwistedResults {
    pub even_h: GroupDto,
    pub odd_h: GroupDto,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k0: Option<GroupDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k1: Option<GroupDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notice: Option<String>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct DualitySide {
    pub even: GroupDto,
    pub odd: GroupDto,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct DualityDto {
    pub lhs: DualitySide,
    pub rhs: DualitySide,
    pub ok: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct TdualResults {
    pub dual_e: i64,
    pub dual_h: i64,
    pub cohomology: DualityDto,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ktheory: Option<DualityDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notice: Option<String>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct ChernResults {
    pub d_squared_holds: bool,
    pub closure_sign: i8,
    pub plus_sign_convention_agrees: bool,
    /// Exact rationals rendered as `numerator/denominator`.
    pub odd_coefficients: Vec<String>,
    pub factorial_odd_series_closes: bool,
    pub lambda_weighted_odd_series_closes: bool,
}
