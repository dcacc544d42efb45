//! Minimal primes and height of monomial ideals.
//!
//! The minimal primes of a monomial ideal are generated by variables and
//! correspond to the minimal transversals (vertex covers) of the hypergraph
//! formed by the generator supports.

use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;

pub(crate) const MAX_VARS: usize = 64;

pub(crate) fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// All inclusion-minimal sets meeting every edge, sorted by size and then
/// lexicographically (as sorted index lists).
///
/// No edges yields the single empty transversal; an empty edge yields none.
pub(crate) fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    if edges.contains(&0) {
        return Vec::new();
    }
    let mut edges = edges.to_vec();
    edges.sort_by_key(|e| e.count_ones());
    edges.dedup();
    let mut found: Vec<u64> = Vec::new();
    branch(&edges, 0, &mut found);

    let mut minimal: Vec<u64> = found
        .iter()
        .copied()
        .filter(|&c| !found.iter().any(|&o| o != c && o & c == o))
        .collect();
    minimal.sort_by(|a, b| {
        a.count_ones()
            .cmp(&b.count_ones())
            .then_with(|| mask_to_vec(*a).cmp(&mask_to_vec(*b)))
    });
    minimal.dedup();
    minimal
}

fn branch(edges: &[u64], cover: u64, found: &mut Vec<u64>) {
    if found.iter().any(|&f| f | cover == cover) {
        return;
    }
    match edges.iter().find(|&&e| e & cover == 0) {
        None => found.push(cover),
        Some(&e) => {
            let mut rest = e;
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                branch(edges, cover | 1 << v, found);
            }
        }
    }
}

fn support_edges(ideal: &MonomialIdeal) -> Result<Vec<u64>> {
    if ideal.n() > MAX_VARS {
        return Err(Error::BudgetExceeded(format!(
            "{} variables (at most {MAX_VARS} supported)",
            ideal.n()
        )));
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(ideal.gens().iter().map(|g| g.support_mask()).collect())
}

/// Minimal primes as sorted lists of 0-based variable indices.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<Vec<usize>>> {
    let edges = support_edges(ideal)?;
    Ok(minimal_transversals(&edges)
        .into_iter()
        .map(mask_to_vec)
        .collect())
}

pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    let primes = minimal_primes(ideal)?;
    Ok(primes.iter().map(Vec::len).min().unwrap_or(0))
}

/// The lexicographically smallest minimal prime of minimum cardinality.
pub fn smallest_minimal_prime(ideal: &MonomialIdeal) -> Result<Vec<usize>> {
    // minimal_primes is sorted by size, then lex
    Ok(minimal_primes(ideal)?.into_iter().next().unwrap_or_default())
}
