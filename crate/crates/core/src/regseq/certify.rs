//! Sampling linear forms and checking the transversal rank condition.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linear::{rank_of_forms, LinearForm, ProductOfLinearForms};

use super::DegreeTwoDecomposition;

pub const MAX_PRIME_SIZE: usize = 20;

/// Coefficient range `2 g^2 2^g`, large enough that one draw satisfies all
/// `2^g` rank conditions with probability above 1/2.
pub fn default_coefficient_range(g: usize) -> u64 {
    ((2 * (g as u64).pow(2)) << g).max(1)
}

/// `l_i = sum_{x in V_i} c_x x` with `c_x` uniform in `1..=range`; a
/// one-dimensional `V_i` yields the bare variable.
pub fn sample_forms(dec: &DegreeTwoDecomposition, seed: u64, range: u64) -> Result<Vec<LinearForm>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    dec.spaces
        .iter()
        .enumerate()
        .map(|(i, space)| {
            if space.is_empty() {
                return Err(Error::EmptySpace(i + 1));
            }
            let mut coeffs = vec![BigRational::zero(); dec.n];
            if space.len() == 1 {
                coeffs[space[0]] = BigRational::from_integer(BigInt::from(1));
            } else {
                for &x in space {
                    let c: u64 = rng.gen_range(1..=range.max(1));
                    coeffs[x] = BigRational::from_integer(BigInt::from(c));
                }
            }
            Ok(LinearForm::new(coeffs))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarOutcome {
    Certified { subsets_checked: u64 },
    /// First failing subset in increasing bitmask order, as prime positions.
    Failed { subset: Vec<usize> },
}

/// Rank of `{x_{p_i} : i in A} ∪ {l_i : i not in A}` for one subset `A`.
pub(crate) fn subset_rank(
    n: usize,
    prime: &[usize],
    forms: &[LinearForm],
    subset: u64,
    field: Field,
) -> Result<usize> {
    let vars: Vec<LinearForm> = prime
        .iter()
        .enumerate()
        .filter(|(i, _)| subset >> i & 1 == 1)
        .map(|(_, &p)| LinearForm::variable(n, p))
        .collect();
    let mut rows: Vec<&LinearForm> = vars.iter().collect();
    rows.extend(
        forms
            .iter()
            .enumerate()
            .filter(|(i, _)| subset >> i & 1 == 0)
            .map(|(_, f)| f),
    );
    rank_of_forms(&rows, field)
}

/// Check that every `A ⊆ [g]` gives rank `g`.
pub fn verify_condition_star(
    n: usize,
    prime: &[usize],
    forms: &[LinearForm],
    field: Field,
) -> Result<StarOutcome> {
    let g = prime.len();
    if forms.len() != g {
        return Err(Error::InvalidInput(format!(
            "{} forms for a prime of size {g}",
            forms.len()
        )));
    }
    if g > MAX_PRIME_SIZE {
        return Err(Error::BudgetExceeded(format!(
            "2^{g} subsets (at most 2^{MAX_PRIME_SIZE})"
        )));
    }
    if let Some(f) = forms.iter().find(|f| f.n() != n) {
        return Err(Error::AmbientMismatch(n, f.n()));
    }
    let total = 1u64 << g;
    for subset in 0..total {
        if subset_rank(n, prime, forms, subset, field)? != g {
            return Ok(StarOutcome::Failed {
                subset: (0..g).filter(|i| subset >> i & 1 == 1).collect(),
            });
        }
    }
    Ok(StarOutcome::Certified {
        subsets_checked: total,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TransversalCheck {
    Regular { choices_checked: u64 },
    /// `choice[k]` is the index of the factor picked from product `k`.
    Dependent { choice: Vec<usize>, forms: Vec<LinearForm> },
}

impl TransversalCheck {
    pub fn is_regular(&self) -> bool {
        matches!(self, TransversalCheck::Regular { .. })
    }
}

/// Products of linear forms form a regular sequence iff every choice of one
/// factor per product is linearly independent.
pub fn is_regular_sequence_of_products(
    products: &[ProductOfLinearForms],
    field: Field,
) -> Result<TransversalCheck> {
    let r = products.len();
    let mut choice = vec![0usize; r];
    let mut checked = 0u64;
    loop {
        let forms: Vec<&LinearForm> = choice
            .iter()
            .zip(products)
            .map(|(&c, p)| &p.factors()[c])
            .collect();
        checked += 1;
        if rank_of_forms(&forms, field)? != r {
            return Ok(TransversalCheck::Dependent {
                forms: forms.into_iter().cloned().collect(),
                choice,
            });
        }
        // odometer, last product varies fastest
        let mut k = r;
        loop {
            if k == 0 {
                return Ok(TransversalCheck::Regular {
                    choices_checked: checked,
                });
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < products[k].degree() {
                break;
            }
            choice[k] = 0;
        }
    }
}
