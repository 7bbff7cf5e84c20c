//! Finite-dimensional Lie algebras over the rationals, given by structure
//! constants `[e_i, e_j] = Σ_k c_ij^k e_k`. All arithmetic is exact.

mod catalog;
mod io;
mod sampling;
mod subspace;

use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{mat_mul, nullspace, trace, Q};

pub use catalog::{
    abelian, borel_sl2, direct_sum, gl2, heisenberg, parse_algebra_name, sl2, two_dim_nonabelian,
    LIE_CATALOG,
};
pub use io::{algebra_from_json, algebra_to_json};
pub use sampling::{
    pairs_witness_search, radical_membership_vtest, random_element, v_vanishing_index, PairsSearch,
    VTest, VTEST_SAMPLES,
};
pub use subspace::Subspace;

/// Coordinates in the algebra's basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LieElement(pub Vec<Q>);

impl LieElement {
    pub fn zero(dim: usize) -> Self {
        LieElement(vec![Q::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = vec![Q::zero(); dim];
        v[i] = crate::linalg::q(1);
        LieElement(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        crate::linalg::is_zero_vec(&self.0)
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    /// Parses comma-separated rationals such as `1,-1/2,0`.
    pub fn parse(text: &str) -> Result<LieElement> {
        text.split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<Q>()
                    .map_err(|_| Error::Lie(format!("bad rational {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(LieElement)
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        LieElement(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, c: &Q) -> LieElement {
        LieElement(self.0.iter().map(|a| a * c).collect())
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl Serialize for LieElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A Lie algebra validated for antisymmetry and the Jacobi identity.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    /// `consts[(i * dim + j) * dim + k] = c_ij^k`
    consts: Vec<Q>,
}

impl LieAlgebra {
    /// `table[i][j]` holds the coordinates of `[e_i, e_j]`.
    pub fn new(labels: Vec<String>, table: Vec<Vec<Vec<Q>>>) -> Result<Self> {
        let dim = labels.len();
        if table.len() != dim || table.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim)) {
            return Err(Error::Lie(format!("structure table is not {dim}x{dim}x{dim}")));
        }
        let consts: Vec<Q> = table.into_iter().flatten().flatten().collect();
        let alg = LieAlgebra { dim, labels, consts };
        alg.validate()?;
        Ok(alg)
    }

    /// Builds an algebra from the brackets `[e_i, e_j]` with `i < j`; the
    /// rest of the table follows from antisymmetry.
    pub fn from_upper_brackets(
        labels: Vec<String>,
        brackets: &[(usize, usize, Vec<(usize, Q)>)],
    ) -> Result<Self> {
        let dim = labels.len();
        let mut table = vec![vec![vec![Q::zero(); dim]; dim]; dim];
        for (i, j, terms) in brackets {
            let (i, j) = (*i, *j);
            for (k, c) in terms {
                let k = *k;
                if i >= dim || j >= dim || k >= dim {
                    return Err(Error::Lie(format!("index out of range at ({i},{j},{k})")));
                }
                if i >= j {
                    return Err(Error::Lie(format!(
                        "bracket ({i},{j},{k}) must list i < j"
                    )));
                }
                table[i][j][k] += c;
                table[j][i][k] -= c;
            }
        }
        LieAlgebra::new(labels, table)
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i == j && !self.c(i, i, k).is_zero() {
                        return Err(Error::Lie(format!("antisymmetry fails at ({i},{i},{k})")));
                    }
                    if *self.c(i, j, k) != -self.c(j, i, k).clone() {
                        return Err(Error::Lie(format!("antisymmetry fails at ({i},{j},{k})")));
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (a, b, c) = (self.e(i), self.e(j), self.e(k));
                    let sum = self
                        .br(&self.br(&a, &b), &c)
                        .add(&self.br(&self.br(&b, &c), &a))
                        .add(&self.br(&self.br(&c, &a), &b));
                    if !sum.is_zero() {
                        return Err(Error::Lie(format!("Jacobi identity fails at ({i},{j},{k})")));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    fn c(&self, i: usize, j: usize, k: usize) -> &Q {
        &self.consts[(i * self.dim + j) * self.dim + k]
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Q {
        self.c(i, j, k)
    }

    pub fn e(&self, i: usize) -> LieElement {
        LieElement::basis(self.dim, i)
    }

    pub fn zero(&self) -> LieElement {
        LieElement::zero(self.dim)
    }

    pub fn basis(&self) -> Vec<LieElement> {
        (0..self.dim).map(|i| self.e(i)).collect()
    }

    pub fn check(&self, x: &LieElement) -> Result<()> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            });
        }
        Ok(())
    }

    /// Bilinear expansion through the structure constants.
    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> Result<LieElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.br(x, y))
    }

    pub(crate) fn br(&self, x: &LieElement, y: &LieElement) -> LieElement {
        let n = self.dim;
        let mut out = vec![Q::zero(); n];
        for (i, xi) in x.0.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.0.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let w = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        LieElement(out)
    }

    /// Matrix of `ad x`; column `j` holds `[x, e_j]`.
    pub fn ad_matrix(&self, x: &LieElement) -> Result<Vec<Vec<Q>>> {
        self.check(x)?;
        let n = self.dim;
        let mut m = vec![vec![Q::zero(); n]; n];
        for j in 0..n {
            let col = self.br(x, &self.e(j));
            for (k, v) in col.0.into_iter().enumerate() {
                m[k][j] = v;
            }
        }
        Ok(m)
    }

    /// `κ(x, y) = tr(ad x · ad y)`.
    pub fn killing(&self, x: &LieElement, y: &LieElement) -> Result<Q> {
        Ok(trace(&mat_mul(&self.ad_matrix(x)?, &self.ad_matrix(y)?)))
    }

    pub fn killing_matrix(&self) -> Vec<Vec<Q>> {
        let ads: Vec<_> = self
            .basis()
            .iter()
            .map(|b| self.ad_matrix(b).unwrap())
            .collect();
        (0..self.dim)
            .map(|a| {
                (0..self.dim)
                    .map(|b| trace(&mat_mul(&ads[a], &ads[b])))
                    .collect()
            })
            .collect()
    }

    pub fn whole(&self) -> Subspace {
        Subspace::span(self.dim, self.basis())
    }

    /// `[L, L]`, spanned by all basis brackets.
    pub fn derived_algebra(&self) -> Subspace {
        self.derived_of(&self.whole())
    }

    fn derived_of(&self, s: &Subspace) -> Subspace {
        let b = s.basis();
        let mut brackets = Vec::new();
        for (i, x) in b.iter().enumerate() {
            for y in &b[i + 1..] {
                brackets.push(self.br(x, y));
            }
        }
        Subspace::span(self.dim, brackets)
    }

    /// Least subalgebra containing `gens`: adjoin brackets of basis pairs
    /// until the dimension stops growing.
    pub fn subalgebra_closure(&self, gens: &[LieElement]) -> Result<Subspace> {
        for g in gens {
            self.check(g)?;
        }
        let mut current = Subspace::span(self.dim, gens.to_vec());
        loop {
            let b = current.basis();
            let mut vectors = b.clone();
            for (i, x) in b.iter().enumerate() {
                for y in &b[i + 1..] {
                    vectors.push(self.br(x, y));
                }
            }
            let next = Subspace::span(self.dim, vectors);
            if next.dim() == current.dim() {
                return Ok(current);
            }
            current = next;
        }
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let b = s.basis();
        b.iter()
            .enumerate()
            .all(|(i, x)| b[i + 1..].iter().all(|y| s.contains(&self.br(x, y))))
    }

    /// `[L, I] ⊆ I`.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        let b = s.basis();
        (0..self.dim).all(|i| b.iter().all(|y| s.contains(&self.br(&self.e(i), y))))
    }

    /// Derived series of `s`, ending at zero or at a perfect term.
    pub fn derived_series_of(&self, s: &Subspace) -> Result<Vec<Subspace>> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.ambient_dim(),
            });
        }
        if !self.is_subalgebra(s) {
            return Err(Error::Lie("subspace is not closed under the bracket".into()));
        }
        let mut series = vec![s.clone()];
        loop {
            let last = series.last().unwrap();
            if last.dim() == 0 {
                break;
            }
            let next = self.derived_of(last);
            if next.dim() == last.dim() {
                break;
            }
            series.push(next);
        }
        Ok(series)
    }

    pub fn is_solvable_subalgebra(&self, s: &Subspace) -> Result<bool> {
        Ok(self.derived_series_of(s)?.last().unwrap().dim() == 0)
    }

    pub fn is_solvable(&self) -> bool {
        self.is_solvable_subalgebra(&self.whole()).unwrap()
    }

    /// Solvable radical as the Killing-orthogonal complement of `[L, L]`.
    /// The result is checked to be a solvable ideal.
    pub fn killing_radical(&self) -> Result<Subspace> {
        let kappa = self.killing_matrix();
        let derived = self.derived_algebra();
        // x ∈ R iff Σ_ab x_a κ_ab d_b = 0 for every basis vector d of [L, L]
        let rows: Vec<Vec<Q>> = derived
            .basis()
            .iter()
            .map(|d| {
                (0..self.dim)
                    .map(|a| {
                        kappa[a]
                            .iter()
                            .zip(&d.0)
                            .fold(Q::zero(), |acc, (k, x)| acc + k * x)
                    })
                    .collect()
            })
            .collect();
        let radical = Subspace::span(
            self.dim,
            nullspace(rows, self.dim).into_iter().map(LieElement).collect(),
        );
        if !self.is_ideal(&radical) {
            return Err(Error::InternalInconsistency(
                "Killing radical is not an ideal".into(),
            ));
        }
        if !self.is_solvable_subalgebra(&radical)? {
            return Err(Error::InternalInconsistency(
                "Killing radical is not solvable".into(),
            ));
        }
        Ok(radical)
    }

    /// `v_1 = x`, `v_{n+1} = [v_n, [x, y]]`.
    pub fn v_word(&self, x: &LieElement, y: &LieElement, n: usize) -> Result<LieElement> {
        if n == 0 {
            return Err(Error::Lie("v_n is defined for n >= 1".into()));
        }
        self.check(x)?;
        self.check(y)?;
        let c = self.br(x, y);
        let mut v = x.clone();
        for _ in 1..n {
            if v.is_zero() {
                break;
            }
            v = self.br(&v, &c);
        }
        Ok(v)
    }

    /// `v_1, …, v_n`, stopping early after the first zero term.
    pub fn v_sequence(&self, x: &LieElement, y: &LieElement, n: usize) -> Result<Vec<LieElement>> {
        self.check(x)?;
        self.check(y)?;
        let c = self.br(x, y);
        let mut out = vec![x.clone()];
        while out.len() < n && !out.last().unwrap().is_zero() {
            out.push(self.br(out.last().unwrap(), &c));
        }
        Ok(out)
    }

    /// Structure constants of `L / I` on the basis vectors `e_k` with `k`
    /// not a pivot column of `I`.
    pub fn quotient_algebra(&self, ideal: &Subspace) -> Result<LieAlgebra> {
        if ideal.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: ideal.ambient_dim(),
            });
        }
        if !self.is_ideal(ideal) {
            return Err(Error::Lie("quotient by a subspace that is not an ideal".into()));
        }
        let keep = ideal.complement_indices();
        let m = keep.len();
        let mut table = vec![vec![vec![Q::zero(); m]; m]; m];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                let reduced = ideal.reduce(&self.br(&self.e(i), &self.e(j)));
                for (c, &k) in keep.iter().enumerate() {
                    table[a][b][c] = reduced.0[k].clone();
                }
            }
        }
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        LieAlgebra::new(labels, table)
    }
}
