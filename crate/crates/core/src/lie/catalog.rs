//! Built-in algebras with fixed structure-constant tables.

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{q, Q};

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn abelian(n: usize) -> LieAlgebra {
    let names: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    LieAlgebra::from_upper_brackets(names, &[]).expect("abelian algebra is valid")
}

/// Basis `(e, f)` with `[e, f] = f`.
pub fn two_dim_nonabelian() -> LieAlgebra {
    LieAlgebra::from_upper_brackets(labels(&["e", "f"]), &[(0, 1, vec![(1, q(1))])])
        .expect("valid table")
}

/// Basis `(x, y, z)` with `[x, y] = z` and `z` central.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_upper_brackets(labels(&["x", "y", "z"]), &[(0, 1, vec![(2, q(1))])])
        .expect("valid table")
}

/// Basis `(e, h, f)` with `[h, e] = 2e`, `[h, f] = −2f`, `[e, f] = h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_upper_brackets(
        labels(&["e", "h", "f"]),
        &[
            (0, 1, vec![(0, q(-2))]), // [e,h] = -2e
            (0, 2, vec![(1, q(1))]),  // [e,f] = h
            (1, 2, vec![(2, q(-2))]), // [h,f] = -2f
        ],
    )
    .expect("valid table")
}

/// `sl2 ⊕ k·z` with basis `(e, h, f, z)`, `z` the scalar matrices.
pub fn gl2() -> LieAlgebra {
    let sum = direct_sum(&sl2(), &abelian(1));
    LieAlgebra::new(labels(&["e", "h", "f", "z"]), table_of(&sum)).expect("valid table")
}

/// Upper triangular part of sl2: basis `(h, e)` with `[h, e] = 2e`.
pub fn borel_sl2() -> LieAlgebra {
    LieAlgebra::from_upper_brackets(labels(&["h", "e"]), &[(0, 1, vec![(1, q(2))])])
        .expect("valid table")
}

fn table_of(l: &LieAlgebra) -> Vec<Vec<Vec<Q>>> {
    let n = l.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| l.structure_constant(i, j, k).clone()).collect())
                .collect()
        })
        .collect()
}

/// `A ⊕ B` with `A`'s basis first.
pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> LieAlgebra {
    let (m, n) = (a.dim(), b.dim());
    let d = m + n;
    let mut table = vec![vec![vec![q(0); d]; d]; d];
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                table[i][j][k] = a.structure_constant(i, j, k).clone();
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                table[m + i][m + j][m + k] = b.structure_constant(i, j, k).clone();
            }
        }
    }
    let mut names: Vec<String> = a.labels().to_vec();
    names.extend(b.labels().iter().map(|l| {
        if a.labels().contains(l) {
            format!("{l}'")
        } else {
            l.clone()
        }
    }));
    LieAlgebra::new(names, table).expect("direct sum of valid algebras is valid")
}

pub const LIE_CATALOG: &[(&str, &str)] = &[
    ("abelianN", "abelian algebra of dimension N"),
    ("nonab2", "two-dimensional nonabelian algebra, [e,f] = f"),
    ("h3", "Heisenberg algebra, [x,y] = z"),
    ("sl2", "sl(2) in the basis e, h, f"),
    ("gl2", "gl(2) = sl(2) + scalars, basis e, h, f, z"),
    ("borel", "Borel subalgebra of sl(2), basis h, e"),
    ("A+B", "direct sum, e.g. sl2+h3"),
];

/// Parses names like `sl2`, `abelian3` or `sl2+h3`.
pub fn parse_algebra_name(name: &str) -> Result<LieAlgebra> {
    let mut acc: Option<LieAlgebra> = None;
    for part in name.split('+') {
        let part = part.trim();
        let alg = match part {
            "nonab2" => two_dim_nonabelian(),
            "h3" => heisenberg(),
            "sl2" => sl2(),
            "gl2" => gl2(),
            "borel" => borel_sl2(),
            _ => match part.strip_prefix("abelian").map(str::parse::<usize>) {
                Some(Ok(n)) if n >= 1 => abelian(n),
                _ => return Err(Error::Lie(format!("unknown algebra {part:?}"))),
            },
        };
        acc = Some(match acc {
            None => alg,
            Some(a) => direct_sum(&a, &alg),
        });
    }
    acc.ok_or_else(|| Error::Lie("empty algebra name".into()))
}
