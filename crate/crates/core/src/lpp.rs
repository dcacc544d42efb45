//! Lex-plus-powers ideals.
//!
//! Given a Hilbert function, the lex-plus-powers ideal is built degree by
//! degree inside `S / (x_1^{d_1}, ..., x_g^{d_g})`: in each degree the
//! ideal must be an initial lex segment of the surviving monomials, so the
//! new generators are the lex-first monomials not already in the ideal.

use crate::error::{Error, Result};
use crate::field::Field;
use num_traits::ToPrimitive;

use crate::hilbert::{exact_value, hilbert_function, hilbert_numerator, HilbertData};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::primes::height;
use crate::regseq::check_quadratic;
use crate::simplicial::projective_dimension;

/// Largest number of lex generators picked in one construction.
pub const MAX_GENERATORS: usize = 200_000;

/// Degree-`d` monomials in `n` variables not divisible by any `x_i^{powers[i]}`,
/// in descending lex order (`x1 > x2 > ... > xn`).
pub fn quotient_monomials(n: usize, powers: &[u32], d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut exps = vec![0u32; n];
    fill(0, d, powers, &mut exps, &mut out);
    out
}

fn fill(var: usize, remaining: u32, powers: &[u32], exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    let n = exps.len();
    let cap = exponent_cap(powers, var, remaining);
    if var == n - 1 {
        if remaining <= cap {
            exps[var] = remaining;
            out.push(Monomial::new(exps.clone()).unwrap());
            exps[var] = 0;
        }
        return;
    }
    for e in (0..=cap).rev() {
        exps[var] = e;
        fill(var + 1, remaining - e, powers, exps, out);
    }
    exps[var] = 0;
}

fn exponent_cap(powers: &[u32], var: usize, remaining: u32) -> u32 {
    powers.get(var).map_or(remaining, |&p| remaining.min(p.saturating_sub(1)))
}

/// Ranks monomials of one degree in the descending lex order of
/// [`quotient_monomials`] without listing them.
struct LexSlice<'a> {
    powers: &'a [u32],
    d: u32,
    /// `counts[v][r]`: monomials of degree `r` in `x_v, ..., x_n` below the powers.
    counts: Vec<Vec<u128>>,
}

impl<'a> LexSlice<'a> {
    fn new(n: usize, powers: &'a [u32], d: u32) -> Self {
        let width = d as usize + 1;
        let mut counts = vec![vec![0u128; width]; n + 1];
        counts[n][0] = 1;
        for v in (0..n).rev() {
            // prefix[r] = counts[v + 1][0] + ... + counts[v + 1][r - 1]
            let mut prefix = vec![0u128; width + 1];
            for r in 0..width {
                prefix[r + 1] = prefix[r] + counts[v + 1][r];
            }
            for r in 0..width {
                let cap = exponent_cap(powers, v, r as u32) as usize;
                counts[v][r] = prefix[r + 1] - prefix[r - cap];
            }
        }
        LexSlice { powers, d, counts }
    }

    fn size(&self) -> u128 {
        self.counts[0][self.d as usize]
    }

    /// Position of a quotient monomial of degree `d`.
    fn rank(&self, m: &Monomial) -> u128 {
        let mut rank = 0;
        let mut left = self.d;
        for (v, &e) in m.exps().iter().enumerate() {
            for above in e + 1..=exponent_cap(self.powers, v, left) {
                rank += self.counts[v + 1][(left - above) as usize];
            }
            left -= e;
        }
        rank
    }

    /// The monomial at position `rank` (0 is the lex-largest).
    fn unrank(&self, mut rank: u128) -> Monomial {
        let n = self.counts.len() - 1;
        let mut exps = vec![0u32; n];
        let mut left = self.d;
        for (v, slot) in exps.iter_mut().enumerate() {
            for e in (0..=exponent_cap(self.powers, v, left)).rev() {
                let below = self.counts[v + 1][(left - e) as usize];
                if rank < below {
                    *slot = e;
                    left -= e;
                    break;
                }
                rank -= below;
            }
        }
        Monomial::new(exps).unwrap()
    }
}

#[derive(Clone, Debug)]
pub struct LppTarget {
    pub n: usize,
    /// `d_1 <= ... <= d_g` for the variables `x_1, ..., x_g`.
    pub powers: Vec<u32>,
    pub target: HilbertData,
}

impl LppTarget {
    pub fn new(n: usize, powers: Vec<u32>, target: HilbertData) -> Result<Self> {
        if powers.len() > n {
            return Err(Error::InvalidInput(format!(
                "{} powers in {n} variables",
                powers.len()
            )));
        }
        if powers.windows(2).any(|w| w[0] > w[1]) || powers.contains(&0) {
            return Err(Error::InvalidInput(
                "powers must be positive and non-decreasing".into(),
            ));
        }
        if target.n != n {
            return Err(Error::AmbientMismatch(n, target.n));
        }
        Ok(LppTarget { n, powers, target })
    }

    /// Squares of the first `g` variables.
    pub fn squares(n: usize, g: usize, target: HilbertData) -> Result<Self> {
        Self::new(n, vec![2; g], target)
    }

    fn powers_ideal(&self) -> MonomialIdeal {
        let gens = self
            .powers
            .iter()
            .enumerate()
            .map(|(i, &d)| Monomial::from_pairs(self.n, &[(i, d)]))
            .collect();
        MonomialIdeal::from_unchecked(self.n, gens)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LppResult {
    pub ideal: MonomialIdeal,
    /// Number of powers `g`.
    pub powers: usize,
    /// New lex generators picked in each degree, up to the last degree
    /// that needed one.
    pub picked_per_degree: Vec<usize>,
    pub degree_limit: usize,
    /// Exact Hilbert-series agreement with the target.
    pub series_equal: bool,
}

/// Build the lex-plus-powers ideal with the target Hilbert function, degree
/// by degree, stopping once the Hilbert series agree or after `max_degree`.
///
/// Modulo the powers, the degree-`d` part of the ideal generated so far is an
/// initial lex segment (Clements–Lindström), so the new generators are the
/// next quotient monomials in lex order, found by rank. When the last
/// variable is free, the segment generated from degree `d - 1` ends at
/// `m * x_n` for the last monomial `m` of that degree.
pub fn construct_lex_plus_powers(target: &LppTarget, max_degree: usize) -> Result<LppResult> {
    let n = target.n;
    let free_last = target.powers.len() < n;
    let mut gens: Vec<Monomial> = target.powers_ideal().gens().to_vec();
    let mut picked_per_degree = Vec::new();
    let ambient = HilbertData::from_numerator(n, hilbert_numerator(&target.powers_ideal()), 0);
    // numerator of the ideal generated by `gens`, when up to date
    let mut numerator = Some(ambient.numerator.clone());
    // lex-last quotient monomial of the ideal in the previous degree
    let mut last: Option<Monomial> = None;
    let mut series_equal = false;

    for d in 0..=max_degree {
        let size = slice_value(n, &ambient.numerator, d)?;
        let wanted = slice_value(n, &target.target.numerator, d)?;
        if wanted > size {
            return Err(Error::Unattainable {
                degree: d,
                reason: format!("target {wanted} exceeds the {size} monomials of the quotient"),
            });
        }
        let in_ideal = size - wanted;
        let slice = LexSlice::new(n, &target.powers, d as u32);
        debug_assert_eq!(slice.size(), size);
        let already = if free_last {
            last.as_ref()
                .map_or(0, |m| slice.rank(&m.mul(&Monomial::var(n, n - 1))) + 1)
        } else {
            let num = numerator
                .get_or_insert_with(|| hilbert_numerator(&MonomialIdeal::from_unchecked(n, gens.clone())));
            size - slice_value(n, num, d)?
        };
        if already > in_ideal {
            return Err(Error::Unattainable {
                degree: d,
                reason: format!(
                    "earlier generators already cover {already} monomials, target leaves room for {in_ideal}"
                ),
            });
        }
        let fresh = usize::try_from(in_ideal - already).unwrap_or(usize::MAX);
        if fresh == 0 {
            let num = numerator
                .get_or_insert_with(|| hilbert_numerator(&MonomialIdeal::from_unchecked(n, gens.clone())));
            if *num == target.target.numerator {
                // every later degree already agrees
                series_equal = true;
                break;
            }
        } else {
            if fresh > MAX_GENERATORS - gens.len().min(MAX_GENERATORS) {
                return Err(Error::BudgetExceeded(format!(
                    "more than {MAX_GENERATORS} lex generators by degree {d}"
                )));
            }
            gens.extend((already..in_ideal).map(|r| slice.unrank(r)));
            numerator = None;
        }
        picked_per_degree.push(fresh);
        last = (in_ideal > 0).then(|| slice.unrank(in_ideal - 1));
    }

    let ideal = MonomialIdeal::from_unchecked(n, gens);
    if !series_equal {
        let num = numerator.unwrap_or_else(|| hilbert_numerator(&ideal));
        series_equal = num == target.target.numerator;
    }
    while picked_per_degree.last() == Some(&0) {
        picked_per_degree.pop();
    }
    Ok(LppResult {
        series_equal,
        ideal,
        powers: target.powers.len(),
        picked_per_degree,
        degree_limit: max_degree,
    })
}

fn slice_value(n: usize, numerator: &[i64], d: usize) -> Result<u128> {
    exact_value(n, numerator, d).to_u128().ok_or_else(|| {
        Error::BudgetExceeded(format!("Hilbert function in degree {d} overflows 128 bits"))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EghReport {
    pub source: MonomialIdeal,
    pub height: usize,
    /// Window `D` for the reported Hilbert function values.
    pub window: usize,
    pub result: LppResult,
    /// `pd(S/I)`.
    pub pd_source: usize,
    /// `pd(S/J)`.
    pub pd_result: usize,
}

impl EghReport {
    pub fn pd_matches(&self) -> bool {
        self.pd_source == self.pd_result
    }
}

#[derive(Clone, Debug)]
pub struct EghOptions {
    pub field: Field,
    /// Cap on the number of variables.
    pub budget: usize,
    /// Last degree in which generators may be picked; by default the
    /// construction runs until the series match, up to
    /// [`MAX_CONSTRUCTION_DEGREE`].
    pub max_degree: Option<usize>,
}

impl Default for EghOptions {
    fn default() -> Self {
        EghOptions {
            field: Field::Rationals,
            budget: crate::simplicial::DEFAULT_VARIABLE_BUDGET,
            max_degree: None,
        }
    }
}

pub const MAX_CONSTRUCTION_DEGREE: usize = 20_000;

/// `max(2n, deg N + 1)` for the Hilbert numerator `N` of `S/I`.
pub fn construction_degree_bound(ideal: &MonomialIdeal) -> usize {
    let num = hilbert_numerator(ideal);
    (2 * ideal.n()).max(num.len())
}

/// Lex-plus-powers ideal `J ⊇ (x_1^2, ..., x_g^2)`, `g = ht I`, with the
/// Hilbert function of a quadratic monomial ideal `I`.
pub fn egh_for_quadratic(ideal: &MonomialIdeal, options: &EghOptions) -> Result<EghReport> {
    check_quadratic(ideal)?;
    if ideal.n() > options.budget {
        return Err(Error::BudgetExceeded(format!(
            "{} variables (budget {})",
            ideal.n(),
            options.budget
        )));
    }
    let g = height(ideal)?;
    let window = construction_degree_bound(ideal);
    let limit = options.max_degree.unwrap_or(MAX_CONSTRUCTION_DEGREE);
    let target = LppTarget::squares(ideal.n(), g, hilbert_function(ideal, window))?;
    let result = construct_lex_plus_powers(&target, limit)?;
    if options.max_degree.is_none() && !result.series_equal {
        return Err(Error::BudgetExceeded(format!(
            "series still differ after degree {MAX_CONSTRUCTION_DEGREE}"
        )));
    }
    let pd = |i: &MonomialIdeal| -> Result<usize> {
        projective_dimension(i, options.field, options.budget)
    };
    Ok(EghReport {
        source: ideal.clone(),
        height: g,
        window,
        pd_source: pd(ideal)?,
        pd_result: pd(&result.ideal)?,
        result,
    })
}
