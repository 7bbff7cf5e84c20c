use num_traits::Zero;

use super::LieElement;
use crate::linalg::{rref, Q};

/// A subspace stored in reduced row echelon form, so two subspaces are equal
/// exactly when their bases are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<LieElement>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn span(ambient: usize, vectors: Vec<LieElement>) -> Self {
        let (rows, pivots) = rref(vectors.into_iter().map(|v| v.0).collect(), ambient);
        Subspace {
            ambient,
            rows: rows.into_iter().map(LieElement).collect(),
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> Vec<LieElement> {
        self.rows.clone()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the echelon rows so that every pivot coordinate is zero.
    pub fn reduce(&self, v: &LieElement) -> LieElement {
        let mut out = v.0.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f: Q = out[p].clone();
            for (x, r) in out.iter_mut().zip(&row.0) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        LieElement(out)
    }

    pub fn contains(&self, v: &LieElement) -> bool {
        v.dim() == self.ambient && self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Non-pivot coordinates; the matching basis vectors span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    pub fn is_whole(&self) -> bool {
        self.dim() == self.ambient
    }
}
