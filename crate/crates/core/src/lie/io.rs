//! JSON algebra files:
//!
//! ```json
//! {"dim": 3, "labels": ["e", "h", "f"],
//!  "brackets": [[0, 1, [[0, -2, 1]]], [0, 2, [[1, 1, 1]]], [1, 2, [[2, -2, 1]]]]}
//! ```
//!
//! Each bracket entry is `[i, j, [[k, num, den], …]]` with 0-based `i < j`,
//! meaning `[e_i, e_j] = Σ (num/den) e_k`. Pairs that are not listed bracket
//! to zero.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Q;

#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    dim: usize,
    #[serde(default)]
    labels: Option<Vec<String>>,
    brackets: Vec<(usize, usize, Vec<(usize, i64, i64)>)>,
}

pub fn algebra_from_json(text: &str) -> Result<LieAlgebra> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| Error::Lie(format!("algebra file: {e}")))?;
    let labels = match file.labels {
        Some(l) if l.len() == file.dim => l,
        Some(l) => {
            return Err(Error::Lie(format!(
                "{} labels for dimension {}",
                l.len(),
                file.dim
            )))
        }
        None => (0..file.dim).map(|i| format!("b{i}")).collect(),
    };
    let mut brackets = Vec::with_capacity(file.brackets.len());
    for (i, j, terms) in file.brackets {
        let mut parsed = Vec::with_capacity(terms.len());
        for (k, num, den) in terms {
            if den == 0 {
                return Err(Error::Lie(format!("zero denominator at ({i},{j},{k})")));
            }
            parsed.push((k, Q::new(BigInt::from(num), BigInt::from(den))));
        }
        brackets.push((i, j, parsed));
    }
    LieAlgebra::from_upper_brackets(labels, &brackets)
}

/// Serializes to the file format. Panics if a constant does not fit `i64`.
pub fn algebra_to_json(alg: &LieAlgebra) -> serde_json::Value {
    let n = alg.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let terms: Vec<(usize, i64, i64)> = (0..n)
                .filter_map(|k| {
                    let c = alg.structure_constant(i, j, k);
                    (!c.is_zero()).then(|| {
                        let num: i64 = c.numer().try_into().expect("numerator fits i64");
                        let den: i64 = c.denom().abs().try_into().expect("denominator fits i64");
                        (k, num, den)
                    })
                })
                .collect();
            if !terms.is_empty() {
                brackets.push((i, j, terms));
            }
        }
    }
    serde_json::to_value(AlgebraFile {
        dim: n,
        labels: Some(alg.labels().to_vec()),
        brackets,
    })
    .expect("algebra serializes")
}
