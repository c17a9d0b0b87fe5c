use std::collections::BTreeMap;

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::limits::Limits;
use crate::par;

use super::dense::IntMatrix;

/// Column-major sparse integer matrix. Each column lists `(row, value)` with
/// strictly increasing rows and no zero values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, columns: Vec<Vec<(u32, i64)>>) -> Self {
        debug_assert!(columns
            .iter()
            .all(|c| c.windows(2).all(|w| w[0].0 < w[1].0) && c.iter().all(|&(r, v)| (r as usize) < rows && v != 0)));
        SparseMatrix { rows, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[(u32, i64)] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vec<(u32, i64)>] {
        &self.columns
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols());
        for (j, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                m.set(r as usize, j, v.into());
            }
        }
        m
    }

    /// `self · rhs`, with `i128` accumulation.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols(), rhs.rows, "dimension mismatch");
        let columns = par::map(&rhs.columns, |col| {
            let mut acc: BTreeMap<u32, i128> = BTreeMap::new();
            for &(k, x) in col {
                for &(r, y) in &self.columns[k as usize] {
                    *acc.entry(r).or_default() += x as i128 * y as i128;
                }
            }
            acc.into_iter()
                .filter(|&(_, v)| v != 0)
                .map(|(r, v)| (r, i64::try_from(v).expect("product entry fits in i64")))
                .collect()
        });
        SparseMatrix {
            rows: self.rows,
            columns,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }
}

/// Simplicial chain complex over ℤ.
///
/// `bases[i]` lists the `i`-faces in lexicographic order. `boundaries[i]` is
/// `∂ᵢ : Cᵢ → Cᵢ₋₁` for `i ≥ 1`; `boundaries[0]` is the augmentation
/// `C₀ → ℤ`, a single row of ones, used only for reduced homology.
#[derive(Debug, Clone)]
pub struct ChainComplexZ {
    pub bases: Vec<Vec<Vec<usize>>>,
    pub boundaries: Vec<SparseMatrix>,
}

impl ChainComplexZ {
    /// Top face dimension, `None` when there are no faces.
    pub fn dims(&self) -> Option<usize> {
        self.bases.len().checked_sub(1)
    }

    pub fn rank(&self, i: usize) -> usize {
        self.bases.get(i).map_or(0, Vec::len)
    }
}

pub fn boundary_matrices(k: &SimplicialComplex) -> Result<ChainComplexZ> {
    boundary_matrices_with(k, &Limits::default())
}

/// Boundary maps with the sign `(−1)ʲ` for deleting the `j`-th vertex of a
/// sorted face.
pub fn boundary_matrices_with(k: &SimplicialComplex, limits: &Limits) -> Result<ChainComplexZ> {
    let bases = k.faces_with(limits)?;
    Ok(from_bases(bases))
}

pub(crate) fn from_bases(bases: Vec<Vec<Vec<usize>>>) -> ChainComplexZ {
    let mut boundaries = Vec::with_capacity(bases.len());
    if let Some(vertices) = bases.first() {
        boundaries.push(SparseMatrix::new(1, vec![vec![(0, 1)]; vertices.len()]));
    }
    for i in 1..bases.len() {
        let lower = &bases[i - 1];
        let columns = par::map(&bases[i], |face| {
            let mut col: Vec<(u32, i64)> = (0..face.len())
                .map(|j| {
                    let mut g = face.clone();
                    g.remove(j);
                    let row = lower.binary_search(&g).expect("boundary face is present");
                    (row as u32, if j % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable_by_key(|&(r, _)| r);
            col
        });
        boundaries.push(SparseMatrix::new(lower.len(), columns));
    }
    ChainComplexZ { bases, boundaries }
}
