//! Regular sequences `x_{p_1} l_1, ..., x_{p_g} l_g` inside a quadratic
//! monomial ideal of height `g`.
//!
//! The linear forms `l_i` live in the spaces `V_i` of the degree-two
//! decomposition. They are drawn at random and then certified exactly: for
//! every `A ⊆ [g]` the forms `{x_{p_i} : i ∈ A} ∪ {l_i : i ∉ A}` must span a
//! `g`-dimensional space. If sampling keeps failing, a deterministic search
//! perturbs the forms along perfect matchings of the graphs `G_A`.

mod certify;
mod decompose;
mod matching;

pub use certify::{
    default_coefficient_range, is_regular_sequence_of_products, sample_forms,
    verify_condition_star, StarOutcome, TransversalCheck, MAX_PRIME_SIZE,
};
pub use decompose::{check_height_inequality, decompose_degree_two, DegreeTwoDecomposition};
pub use matching::{build_ga, find_matching, MatchingInstance, MatchingOutcome};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linear::{LinearForm, ProductOfLinearForms};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::primes::{height, minimal_primes, smallest_minimal_prime};

use certify::subset_rank;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularSequenceCertificate {
    pub ideal: MonomialIdeal,
    /// 0-based prime variables `p_1 < ... < p_g`.
    pub prime: Vec<usize>,
    /// `forms[i]` is `l_i`; the sequence is `x_{p_i} * l_i`.
    pub forms: Vec<LinearForm>,
    pub subsets_checked: u64,
    pub field: Field,
    pub seed: u64,
    /// Number of random draws made (at most `retries + 1`).
    pub attempts: u32,
    /// Whether the matching-guided deterministic search produced the forms.
    pub fallback: bool,
}

impl RegularSequenceCertificate {
    pub fn g(&self) -> usize {
        self.prime.len()
    }

    pub fn products(&self) -> Vec<ProductOfLinearForms> {
        let n = self.ideal.n();
        self.prime
            .iter()
            .zip(&self.forms)
            .map(|(&p, l)| {
                ProductOfLinearForms::new(vec![LinearForm::variable(n, p), l.clone()]).unwrap()
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct RegseqOptions {
    pub seed: u64,
    pub retries: u32,
    pub field: Field,
    /// Override the default (lexicographically smallest) minimal prime.
    pub prime: Option<Vec<usize>>,
    /// Skip random sampling and go straight to the deterministic search.
    pub deterministic: bool,
}

impl Default for RegseqOptions {
    fn default() -> Self {
        RegseqOptions {
            seed: 0,
            retries: 8,
            field: Field::Rationals,
            prime: None,
            deterministic: false,
        }
    }
}

/// Ideal must be nonzero, proper and generated by quadrics.
pub(crate) fn check_quadratic(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if let Some(g) = ideal.gens().iter().find(|g| g.degree() != 2) {
        return Err(Error::NotQuadratic(g.to_string()));
    }
    Ok(())
}

pub fn find_regular_sequence(
    ideal: &MonomialIdeal,
    options: &RegseqOptions,
) -> Result<RegularSequenceCertificate> {
    check_quadratic(ideal)?;
    let prime = match &options.prime {
        None => smallest_minimal_prime(ideal)?,
        Some(p) => {
            let mut p = p.clone();
            p.sort_unstable();
            let primes = minimal_primes(ideal)?;
            if !primes.contains(&p) || p.len() != height(ideal)? {
                return Err(Error::InvalidInput(format!(
                    "{:?} is not a minimal prime of minimum size",
                    p.iter().map(|v| v + 1).collect::<Vec<_>>()
                )));
            }
            p
        }
    };
    if prime.len() > MAX_PRIME_SIZE {
        return Err(Error::BudgetExceeded(format!(
            "height {} exceeds {MAX_PRIME_SIZE}",
            prime.len()
        )));
    }
    let dec = decompose_degree_two(ideal, &prime)?;
    let n = ideal.n();
    let range = default_coefficient_range(dec.g());

    let mut attempts = 0;
    let mut found = None;
    if !options.deterministic {
        for k in 0..=options.retries {
            attempts += 1;
            let forms = sample_forms(&dec, options.seed.wrapping_add(k as u64), range)?;
            if let StarOutcome::Certified { .. } =
                verify_condition_star(n, &dec.prime, &forms, options.field)?
            {
                found = Some(forms);
                break;
            }
        }
    }
    let fallback = found.is_none();
    let forms = match found {
        Some(f) => f,
        None => matching_guided_forms(&dec, options.field)?,
    };

    let cert = RegularSequenceCertificate {
        ideal: ideal.clone(),
        prime: dec.prime.clone(),
        forms,
        subsets_checked: 1u64 << dec.g(),
        field: options.field,
        seed: options.seed,
        attempts,
        fallback,
    };
    check_certificate(&cert)?;
    Ok(cert)
}

/// Deterministic construction: start from `l_i = sum V_i` and, for the first
/// subset `A` failing the rank condition, add `λ x_{i_j}` to `l_j` (`j ∉ A`)
/// along a perfect matching of `G_{[g] \ A}`. Each subset's rank condition
/// fails for at most `g` values of `λ`, so `λ ≤ g 2^g + 1` always works.
pub fn matching_guided_forms(dec: &DegreeTwoDecomposition, field: Field) -> Result<Vec<LinearForm>> {
    let g = dec.g();
    let n = dec.n;
    let mut forms: Vec<LinearForm> = dec
        .spaces
        .iter()
        .enumerate()
        .map(|(i, space)| {
            if space.is_empty() {
                return Err(Error::EmptySpace(i + 1));
            }
            let mut c = vec![BigRational::zero(); n];
            for &x in space {
                c[x] = BigRational::one();
            }
            Ok(LinearForm::new(c))
        })
        .collect::<Result<_>>()?;

    let total = 1u64 << g;
    let lambda_limit = g as u64 * total + 1;
    let mut start = 0u64;
    'outer: loop {
        let mut first_failure = None;
        for a in start..total {
            if subset_rank(n, &dec.prime, &forms, a, field)? != g {
                first_failure = Some(a);
                break;
            }
        }
        let Some(failing) = first_failure else {
            return Ok(forms);
        };
        let complement = !failing & (total - 1);
        let matching = match find_matching(&build_ga(dec, complement)) {
            MatchingOutcome::Perfect(m) => m.matching.expect("perfect matching"),
            MatchingOutcome::Deficient { deficient, .. } => {
                return Err(Error::CertificateFailed(format!(
                    "Hall condition fails for positions {:?}; the prime is not a minimal prime of minimum size",
                    deficient.iter().map(|j| j + 1).collect::<Vec<_>>()
                )))
            }
        };
        for lambda in 1..=lambda_limit {
            let shift = BigRational::from_integer(BigInt::from(lambda));
            let candidate: Vec<LinearForm> = forms
                .iter()
                .enumerate()
                .map(|(j, l)| {
                    if complement >> j & 1 == 1 {
                        let mut c = l.coeffs().to_vec();
                        c[matching[j]] += &shift;
                        LinearForm::new(c)
                    } else {
                        l.clone()
                    }
                })
                .collect();
            let mut ok = true;
            for a in 0..=failing {
                if subset_rank(n, &dec.prime, &candidate, a, field)? != g {
                    ok = false;
                    break;
                }
            }
            if ok {
                forms = candidate;
                start = failing + 1;
                continue 'outer;
            }
        }
        return Err(Error::CertificateFailed(format!(
            "no perturbation up to {lambda_limit} repairs subset {failing:#b}"
        )));
    }
}

/// Re-verify a certificate from scratch: the rank condition for all subsets,
/// the subset count, and membership of every monomial of every product.
pub fn check_certificate(cert: &RegularSequenceCertificate) -> Result<()> {
    let n = cert.ideal.n();
    match verify_condition_star(n, &cert.prime, &cert.forms, cert.field)? {
        StarOutcome::Certified { subsets_checked } => {
            if subsets_checked != cert.subsets_checked {
                return Err(Error::CertificateFailed(format!(
                    "subsets_checked is {} but 2^g = {subsets_checked}",
                    cert.subsets_checked
                )));
            }
        }
        StarOutcome::Failed { subset } => {
            return Err(Error::CertificateFailed(format!(
                "rank condition fails for A = {:?}",
                subset.iter().map(|i| i + 1).collect::<Vec<_>>()
            )))
        }
    }
    for (&p, l) in cert.prime.iter().zip(&cert.forms) {
        if l.is_zero() {
            return Err(Error::CertificateFailed(format!("l for x{} is zero", p + 1)));
        }
        for v in l.support() {
            let m = Monomial::from_pairs(n, &[(p, 1), (v, 1)]);
            if !cert.ideal.contains(&m) {
                return Err(Error::CertificateFailed(format!("{m} is not in the ideal")));
            }
        }
    }
    Ok(())
}
