//! Hilbert functions and Hilbert series of `S/I` for monomial ideals `I`.
//!
//! The series is `N(t) / (1 - t)^n`; the numerator `N` is computed by pivot
//! recursion on a power `x^e` of the most frequent variable:
//!
//! ```text
//! N(I) = N(I + (x^e)) + t^e * N(I : x^e)
//! ```
//!
//! bottoming out at ideals with pairwise coprime generators, whose numerator
//! is `prod (1 - t^deg)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub n: usize,
    /// `dim (S/I)_d` for `d = 0..=D`.
    pub window: Vec<u64>,
    /// Numerator coefficients, lowest degree first, trailing zeros trimmed.
    pub numerator: Vec<i64>,
}

impl HilbertData {
    pub fn from_numerator(n: usize, numerator: Vec<i64>, max_degree: usize) -> Self {
        let numerator = trim(numerator);
        let window = expand_window(n, &numerator, max_degree);
        HilbertData {
            n,
            window,
            numerator,
        }
    }

    /// Hilbert data of an Artinian quotient of `K[x1..xn]` with the given
    /// (finite) Hilbert function.
    pub fn artinian(n: usize, values: &[u64], max_degree: usize) -> Self {
        let mut num: Vec<i64> = values.iter().map(|&v| v as i64).collect();
        for _ in 0..n {
            num = poly_mul(&num, &[1, -1]);
        }
        Self::from_numerator(n, num, max_degree)
    }

    pub fn value(&self, d: usize) -> u64 {
        window_value(self.n, &self.numerator, d)
    }

    /// Degree of the numerator, 0 for the zero polynomial.
    pub fn numerator_degree(&self) -> usize {
        self.numerator.len().saturating_sub(1)
    }

    pub fn same_series(&self, other: &HilbertData) -> bool {
        self.n == other.n && self.numerator == other.numerator
    }
}

/// Default display window: `n + max generator degree`.
pub fn default_degree_bound(ideal: &MonomialIdeal) -> usize {
    ideal.n() + ideal.max_degree() as usize
}

pub fn hilbert_function(ideal: &MonomialIdeal, max_degree: usize) -> HilbertData {
    HilbertData::from_numerator(ideal.n(), hilbert_numerator(ideal), max_degree)
}

/// True iff `S/I` and `S/J` have the same Hilbert series.
pub fn hilbert_series_equal(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<bool> {
    if i.n() != j.n() {
        return Err(Error::AmbientMismatch(i.n(), j.n()));
    }
    Ok(hilbert_numerator(i) == hilbert_numerator(j))
}

/// Largest number of summands used when splitting off pure powers.
const MAX_SPLIT_CELLS: u64 = 4096;

/// Numerator of the Hilbert series of `S/I` over `(1 - t)^n`.
///
/// Pure powers are split off first: if `R` is the ring in the remaining
/// `k` variables, `HS(S/I) = sum_e t^|e| HS(R/(I : x^e))`, so
/// `N = (1 - t)^(n - k) * sum_e t^|e| N_e`.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> Vec<i64> {
    let Some(split) = ideal.split_pure_powers(MAX_SPLIT_CELLS) else {
        return trim(summand_numerator(ideal));
    };
    let mut total = vec![0i64];
    for (shift, colon) in &split.summands {
        let part = colon.as_ref().map_or_else(|| vec![1], summand_numerator);
        let shift = *shift as usize;
        if total.len() < part.len() + shift {
            total.resize(part.len() + shift, 0);
        }
        for (i, c) in part.iter().enumerate() {
            total[i + shift] += c;
        }
    }
    for _ in 0..split.nilpotent {
        total = poly_mul(&total, &[1, -1]);
    }
    trim(total)
}

/// Strongly stable ideals have the Eliahou–Kervaire numerator
/// `1 - sum_u t^deg(u) (1 - t)^(m(u) - 1)`, `m(u)` the last variable of `u`;
/// anything else goes through the pivot recursion.
fn summand_numerator(ideal: &MonomialIdeal) -> Vec<i64> {
    if ideal.is_unit() || !ideal.is_strongly_stable() {
        return numerator_rec(ideal.gens().to_vec(), &mut HashMap::new());
    }
    let mut out = vec![1i64];
    for u in ideal.gens() {
        let last = *u.support().last().unwrap();
        let mut term = vec![0i64; u.degree() as usize];
        term.push(-1);
        for _ in 0..last {
            term = poly_mul(&term, &[1, -1]);
        }
        if out.len() < term.len() {
            out.resize(term.len(), 0);
        }
        for (i, c) in term.iter().enumerate() {
            out[i] += c;
        }
    }
    out
}

type Memo = HashMap<Vec<Vec<u32>>, Vec<i64>>;

fn numerator_rec(gens: Vec<Monomial>, memo: &mut Memo) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return vec![0];
    }
    let key: Vec<Vec<u32>> = gens.iter().map(|g| g.exps().to_vec()).collect();
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }

    let n = gens[0].n();
    let mut counts = vec![0usize; n];
    for g in &gens {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let (pivot, &best) = counts
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .unwrap();

    let result = if best <= 1 {
        // pairwise coprime
        gens.iter().fold(vec![1], |acc, g| {
            let mut f = vec![0i64; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            poly_mul(&acc, &f)
        })
    } else {
        // pivot x^e with e the median exponent of x among generators that
        // are not pure powers of x, so both branches lose degree
        let mut exps: Vec<u32> = gens
            .iter()
            .filter(|g| g.exp(pivot) > 0 && g.degree() > g.exp(pivot))
            .map(|g| g.exp(pivot))
            .collect();
        exps.sort_unstable();
        let e = exps[exps.len() / 2];
        let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exp(pivot) < e).cloned().collect();
        plus.push(Monomial::from_pairs(n, &[(pivot, e)]));
        let plus = MonomialIdeal::from_unchecked(n, plus);

        let colon: Vec<Monomial> = gens
            .iter()
            .map(|g| {
                let mut x = g.exps().to_vec();
                x[pivot] = x[pivot].saturating_sub(e);
                Monomial::new(x).unwrap()
            })
            .collect();
        let colon = MonomialIdeal::from_unchecked(n, colon);

        let a = numerator_rec(plus.gens().to_vec(), memo);
        let b = numerator_rec(colon.gens().to_vec(), memo);
        let shift = e as usize;
        let mut out = vec![0i64; a.len().max(b.len() + shift)];
        for (i, c) in a.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            out[i + shift] += c;
        }
        out
    };
    memo.insert(key, result.clone());
    result
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// `dim (S/I)_d`, saturating at `u64::MAX`.
pub(crate) fn window_value(n: usize, numerator: &[i64], d: usize) -> u64 {
    exact_value(n, numerator, d).to_u64().unwrap_or(u64::MAX)
}

/// `dim (S/I)_d` without saturation.
pub(crate) fn exact_value(n: usize, numerator: &[i64], d: usize) -> BigInt {
    let mut total = BigInt::zero();
    for (k, &c) in numerator.iter().enumerate().take(d + 1) {
        let basis = if n == 0 {
            BigInt::from((k == d) as u8)
        } else {
            num_integer::binomial(BigInt::from(d - k + n - 1), BigInt::from(n - 1))
        };
        total += BigInt::from(c) * basis;
    }
    debug_assert!(!total.is_negative(), "negative Hilbert function value");
    if total.is_negative() {
        return BigInt::zero();
    }
    total
}

fn expand_window(n: usize, numerator: &[i64], max_degree: usize) -> Vec<u64> {
    (0..=max_degree).map(|d| window_value(n, numerator, d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::parse(n, gens).unwrap()
    }

    #[test]
    fn windows() {
        assert_eq!(hilbert_function(&ideal(2, &["x1^2", "x2^2"]), 3).window, vec![1, 2, 1, 0]);
        assert_eq!(hilbert_function(&MonomialIdeal::zero(3), 2).window, vec![1, 3, 6]);
        assert_eq!(hilbert_function(&ideal(3, &["x1*x2", "x2*x3"]), 2).window, vec![1, 3, 4]);
        assert_eq!(hilbert_function(&MonomialIdeal::unit(2), 2).window, vec![0, 0, 0]);
    }

    #[test]
    fn series_equality() {
        let a = ideal(2, &["x1*x2"]);
        let b = ideal(2, &["x1^2"]);
        let c = ideal(2, &["x1"]);
        assert!(hilbert_series_equal(&a, &b).unwrap());
        assert!(!hilbert_series_equal(&c, &b).unwrap());
        assert!(hilbert_series_equal(&a, &a).unwrap());
        assert_eq!(hilbert_numerator(&a), vec![1, 0, -1]);
        assert!(hilbert_series_equal(&a, &ideal(3, &["x1^2"])).is_err());
    }

    #[test]
    fn artinian_targets() {
        let h = HilbertData::artinian(3, &[1, 3, 3, 1], 5);
        assert_eq!(h.window, vec![1, 3, 3, 1, 0, 0]);
        let squares = ideal(3, &["x1^2", "x2^2", "x3^2"]);
        assert!(h.same_series(&hilbert_function(&squares, 5)));
        let point = HilbertData::artinian(0, &[1], 2);
        assert_eq!(point.window, vec![1, 0, 0]);
    }
}
