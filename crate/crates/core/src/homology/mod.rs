//! Simplicial homology over ℤ.
//!
//! Boundary maps are reduced from the top dimension down. A unit pivot of
//! `∂ᵢ₊₁` in row `r` marks a cycle whose leading face is `r`, so column `r`
//! of `∂ᵢ` can be skipped outright: replacing it by that cycle's boundary is
//! a unimodular change of basis that turns it into zero.

mod chain;
mod dense;
mod reduce;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::limits::Limits;

pub use chain::{boundary_matrices, boundary_matrices_with, ChainComplexZ, SparseMatrix};
pub use dense::{bareiss_rank, smith_normal_form, IntMatrix, SmithForm};

/// Betti numbers and torsion of a complex.
///
/// `betti[i]` and `torsion[i]` cover degrees `0..=dim`. For the empty
/// complex both are empty and `empty_complex` is set; in reduced mode that
/// flag stands for the rank-one group in degree −1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologySummary {
    pub reduced: bool,
    pub betti: Vec<usize>,
    #[serde(serialize_with = "torsion_json")]
    pub torsion: Vec<Vec<BigInt>>,
    #[serde(rename = "empty")]
    pub empty_complex: bool,
}

impl HomologySummary {
    /// Rank in degree `i`, zero above the top dimension.
    pub fn betti(&self, i: usize) -> usize {
        self.betti.get(i).copied().unwrap_or(0)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }

    /// `Σ (−1)ⁱ bettiᵢ`, counting the degree −1 class of the empty complex
    /// in reduced mode.
    pub fn euler_characteristic(&self) -> i128 {
        let sum = self
            .betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i128 } else { -(b as i128) })
            .sum::<i128>();
        if self.reduced && self.empty_complex {
            sum - 1
        } else {
            sum
        }
    }
}

/// Torsion factors go out as JSON numbers, or as decimal strings when too
/// large for `u64`.
fn torsion_json<S: Serializer>(torsion: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    #[serde(untagged)]
    enum Factor {
        Small(u64),
        Large(String),
    }
    let mut seq = s.serialize_seq(Some(torsion.len()))?;
    for degree in torsion {
        let row: Vec<Factor> = degree
            .iter()
            .map(|d| d.to_u64().map_or_else(|| Factor::Large(d.to_string()), Factor::Small))
            .collect();
        seq.serialize_element(&row)?;
    }
    seq.end()
}

pub fn homology(k: &SimplicialComplex, reduced: bool) -> Result<HomologySummary> {
    homology_with(k, reduced, &Limits::default())
}

/// Full homology: ranks and torsion in every degree.
pub fn homology_with(k: &SimplicialComplex, reduced: bool, limits: &Limits) -> Result<HomologySummary> {
    compute(k, reduced, true, limits)
}

/// Ranks only. Skips the torsion pass, otherwise identical to
/// [`homology_with`].
pub fn betti_numbers(k: &SimplicialComplex, reduced: bool, limits: &Limits) -> Result<Vec<usize>> {
    Ok(compute(k, reduced, false, limits)?.betti)
}

fn compute(k: &SimplicialComplex, reduced: bool, torsion: bool, limits: &Limits) -> Result<HomologySummary> {
    let cx = boundary_matrices_with(k, limits)?;
    Ok(from_chain_complex(&cx, reduced, torsion))
}

pub(crate) fn from_chain_complex(cx: &ChainComplexZ, reduced: bool, with_torsion: bool) -> HomologySummary {
    let Some(d) = cx.dims() else {
        return HomologySummary {
            reduced,
            betti: Vec::new(),
            torsion: Vec::new(),
            empty_complex: true,
        };
    };
    // rank[i] = rank ∂ᵢ, with ∂₀ the augmentation and ∂_{d+1} = 0
    let mut rank = vec![0usize; d + 2];
    let mut torsion = vec![Vec::new(); d + 1];
    let mut skip: Vec<bool> = Vec::new();
    for i in (1..=d).rev() {
        let m = &cx.boundaries[i];
        let red = reduce::reduce(m.rows(), m.columns(), &skip, with_torsion);
        rank[i] = red.rank;
        torsion[i - 1] = red.torsion;
        skip = vec![false; m.rows()];
        for r in red.unit_rows {
            skip[r as usize] = true;
        }
    }
    if reduced && cx.rank(0) > 0 {
        rank[0] = 1;
    }
    let betti = (0..=d).map(|i| cx.rank(i) - rank[i] - rank[i + 1]).collect();
    HomologySummary {
        reduced,
        betti,
        torsion,
        empty_complex: false,
    }
}
