//! Exact row reduction over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot
/// columns; the result depends only on the row space.
pub fn rref(mut rows: Vec<Vec<Q>>, ncols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of `{x : A x = 0}` for `A` given by rows with `ncols` columns.
pub fn nullspace(rows: Vec<Vec<Q>>, ncols: usize) -> Vec<Vec<Q>> {
    let (reduced, pivots) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, _)| !x.is_zero())
                        .fold(Q::zero(), |acc, (x, brow)| acc + x * &brow[j])
                })
                .collect()
        })
        .collect()
}

pub fn trace(a: &[Vec<Q>]) -> Q {
    a.iter()
        .enumerate()
        .fold(Q::zero(), |acc, (i, row)| acc + &row[i])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rref_is_canonical() {
        let (a, pa) = rref(vec![row(&[1, 2, 3]), row(&[2, 4, 7])], 3);
        let (b, pb) = rref(vec![row(&[3, 6, 10]), row(&[0, 0, 5]), row(&[1, 2, 3])], 3);
        assert_eq!(a, b);
        assert_eq!(pa, vec![0, 2]);
        assert_eq!(pb, pa);
        assert_eq!(a[0], row(&[1, 2, 0]));
    }

    #[test]
    fn nullspace_basis() {
        let ns = nullspace(vec![row(&[1, 2, 3]), row(&[2, 4, 6])], 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot: Q = v.iter().zip(row(&[1, 2, 3])).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
        assert!(nullspace(vec![row(&[1, 0]), row(&[0, 1])], 2).is_empty());
        assert_eq!(nullspace(vec![], 2).len(), 2);
    }

    #[test]
    fn products_and_traces() {
        let a = vec![row(&[1, 2]), row(&[3, 4])];
        let b = vec![row(&[0, 1]), row(&[1, 0])];
        assert_eq!(mat_mul(&a, &b), vec![row(&[2, 1]), row(&[4, 3])]);
        assert_eq!(trace(&a), q(5));
        assert_eq!(frac(2, 4), frac(1, 2));
    }
}
