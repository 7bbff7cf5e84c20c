//! Seeded searches over random rational elements.
//!
//! Coordinates are drawn as `num/den` with `num` uniform on `[-9, 9]` and
//! `den` uniform on `[1, 9]`. Searches of this kind can only ever certify
//! that something exists; a failed search is inconclusive.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{LieAlgebra, LieElement};
use crate::error::{Error, Result};
use crate::linalg::Q;

/// Default number of sampled `x` for the membership test.
pub const VTEST_SAMPLES: usize = 100;

pub fn random_element<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> LieElement {
    LieElement(
        (0..dim)
            .map(|_| {
                let num: i64 = rng.random_range(-9..=9);
                let den: i64 = rng.random_range(1..=9);
                Q::new(BigInt::from(num), BigInt::from(den))
            })
            .collect(),
    )
}

/// Least `n ≤ nmax` with `v_n(x, y) = 0`.
pub fn v_vanishing_index(
    alg: &LieAlgebra,
    x: &LieElement,
    y: &LieElement,
    nmax: usize,
) -> Result<Option<usize>> {
    let seq = alg.v_sequence(x, y, nmax)?;
    Ok(seq.iter().position(LieElement::is_zero).map(|i| i + 1))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum VTest {
    /// `x` keeps every `v_n(x, y)` nonzero up to `nmax` and `⟨x, y⟩` is not
    /// solvable, so `y` is outside the radical.
    CertifiedOut { witness: LieElement, samples_used: usize },
    /// No sample certified `y` out.
    ConsistentWithIn {
        samples: usize,
        /// Samples whose `v_n` reached zero within `nmax`.
        vanished: usize,
    },
}

impl VTest {
    pub fn is_certified_out(&self) -> bool {
        matches!(self, VTest::CertifiedOut { .. })
    }
}

/// One-sided radical membership test through the words `v_n`.
pub fn radical_membership_vtest(
    alg: &LieAlgebra,
    y: &LieElement,
    nmax: usize,
    samples: usize,
    seed: u64,
) -> Result<VTest> {
    alg.check(y)?;
    if nmax == 0 || samples == 0 {
        return Err(Error::Lie("nmax and samples must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vanished = 0;
    for used in 1..=samples {
        let x = random_element(alg.dim(), &mut rng);
        if v_vanishing_index(alg, &x, y, nmax)?.is_some() {
            vanished += 1;
            continue;
        }
        let closure = alg.subalgebra_closure(&[x.clone(), y.clone()])?;
        if !alg.is_solvable_subalgebra(&closure)? {
            return Ok(VTest::CertifiedOut {
                witness: x,
                samples_used: used,
            });
        }
    }
    Ok(VTest::ConsistentWithIn { samples, vanished })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum PairsSearch {
    Witness { y: LieElement, samples_used: usize },
    BudgetExhausted { samples: usize },
}

/// Samples `y` until `⟨x, y⟩` is nonsolvable for every `x` in `xs`. Every
/// `x` must lie outside the Killing radical.
pub fn pairs_witness_search(
    alg: &LieAlgebra,
    xs: &[LieElement],
    samples: usize,
    seed: u64,
) -> Result<PairsSearch> {
    let radical = alg.killing_radical()?;
    for x in xs {
        alg.check(x)?;
        if radical.contains(x) {
            return Err(Error::Precondition(format!("{x} lies in the solvable radical")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for used in 1..=samples {
        let y = random_element(alg.dim(), &mut rng);
        let mut all = true;
        for x in xs {
            let closure = alg.subalgebra_closure(&[x.clone(), y.clone()])?;
            if alg.is_solvable_subalgebra(&closure)? {
                all = false;
                break;
            }
        }
        if all {
            return Ok(PairsSearch::Witness {
                y,
                samples_used: used,
            });
        }
    }
    Ok(PairsSearch::BudgetExhausted { samples })
}
