//! Graded Betti numbers, projective dimension and depth of `S/I`.
//!
//! Two independent routes are provided:
//!
//! * [`hochster_betti`]: Hochster's formula for squarefree `I`,
//!   `β_{i,σ}(S/I) = β̃_{|σ|-i-1}(Δ|_σ)`, summed over every `σ ⊆ [n]`.
//! * [`betti_numbers`]: the multigraded formula
//!   `β_{i,b}(I) = β̃_{i-1}(K^b)` with `K^b = {τ ⊆ supp b : x^{b-τ} ∈ I}`,
//!   evaluated only at the lcms of generators (all other multidegrees
//!   vanish). This works for any monomial ideal, is Hochster's formula after
//!   polarization, and only builds complexes on at most `n` vertices.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialIdeal};

use super::homology::homology_of_faces;
use super::SimplicialComplex;

/// Default cap on the number of variables for Betti computations.
pub const DEFAULT_VARIABLE_BUDGET: usize = 16;

/// Total graded Betti numbers `β_{i,j}(S/I)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    /// `(i, j) -> β_{i,j}`, nonzero entries only.
    pub entries: BTreeMap<(usize, u32), u64>,
}

impl BettiTable {
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Totals `β_i = sum_j β_{i,j}`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.projective_dimension() + 1];
        for (&(i, _), &b) in &self.entries {
            out[i] += b;
        }
        out
    }

    fn add(&mut self, i: usize, j: u32, b: u64) {
        if b > 0 {
            *self.entries.entry((i, j)).or_insert(0) += b;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthPd {
    pub depth: usize,
    pub projective_dimension: usize,
    pub betti: BettiTable,
}

/// Depth and projective dimension of `S/I` (Auslander–Buchsbaum: depth = n - pd).
pub fn depth_and_pd(ideal: &MonomialIdeal, field: Field, budget: usize) -> Result<DepthPd> {
    let betti = betti_numbers(ideal, field, budget)?;
    let pd = betti.projective_dimension();
    Ok(DepthPd {
        depth: ideal.n() - pd,
        projective_dimension: pd,
        betti,
    })
}

/// Projective dimension of `S/I` alone.
///
/// Variables with a pure power `x_i^a` in `I` act nilpotently, so over the
/// polynomial ring `R` in the other variables `S/I` splits as a sum of
/// `R/(I : x^e)` for the monomials `x^e` below those powers. Depth is the
/// minimum over the summands. A strongly stable summand has `pd` equal to
/// the largest last variable of a generator (Eliahou–Kervaire); the others
/// go through the lcm lattice.
pub fn projective_dimension(ideal: &MonomialIdeal, field: Field, budget: usize) -> Result<usize> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    check_budget(ideal.n(), budget)?;
    let n = ideal.n();
    let Some(split) = ideal.split_pure_powers(1u64 << budget) else {
        return stable_or_lattice_pd(ideal, field, budget);
    };
    let mut seen: HashMap<&[Monomial], usize> = HashMap::new();
    let mut depth = split.free;
    for (_, colon) in &split.summands {
        let d = match colon {
            // a copy of the field
            None => 0,
            Some(c) => match seen.get(c.gens()) {
                Some(&d) => d,
                None => {
                    let d = split.free - stable_or_lattice_pd(c, field, budget)?;
                    seen.insert(c.gens(), d);
                    d
                }
            },
        };
        depth = depth.min(d);
    }
    Ok(n - depth)
}

fn stable_or_lattice_pd(ideal: &MonomialIdeal, field: Field, budget: usize) -> Result<usize> {
    if ideal.is_strongly_stable() {
        return Ok(ideal
            .gens()
            .iter()
            .filter_map(|g| g.support().last().map(|&v| v + 1))
            .max()
            .unwrap_or(0));
    }
    Ok(betti_numbers(ideal, field, budget)?.projective_dimension())
}

fn check_budget(n: usize, budget: usize) -> Result<()> {
    if n > budget || n >= 64 {
        return Err(Error::BudgetExceeded(format!(
            "2^{n} subsets exceeds the budget of 2^{budget}"
        )));
    }
    Ok(())
}

/// Graded Betti numbers of `S/I` through the lcm lattice of the generators.
pub fn betti_numbers(ideal: &MonomialIdeal, field: Field, budget: usize) -> Result<BettiTable> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    check_budget(ideal.n(), budget)?;
    let mut table = BettiTable {
        entries: BTreeMap::new(),
    };
    table.add(0, 0, 1);
    for b in lcm_lattice(ideal, 1usize << budget)? {
        let support = b.support();
        let k = support.len();
        let mut faces = Vec::new();
        for tau in 0u64..(1u64 << k) {
            let mut exps = b.exps().to_vec();
            for (pos, &v) in support.iter().enumerate() {
                if tau >> pos & 1 == 1 {
                    exps[v] -= 1;
                }
            }
            if ideal.contains(&Monomial::new(exps).unwrap()) {
                faces.push(tau);
            }
        }
        let homology = homology_of_faces(&faces, field);
        // β_{i,b}(I) = β̃_{i-1}(K^b), and β_{i+1,b}(S/I) = β_{i,b}(I)
        for i in 0..=k {
            table.add(i + 1, b.degree(), homology.betti(i as isize - 1) as u64);
        }
    }
    Ok(table)
}

/// lcms of all nonempty subsets of the generators.
fn lcm_lattice(ideal: &MonomialIdeal, cap: usize) -> Result<Vec<Monomial>> {
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut order: Vec<Monomial> = Vec::new();
    for g in ideal.gens() {
        let mut fresh = vec![g.clone()];
        fresh.extend(order.iter().map(|l| l.lcm(g)));
        for m in fresh {
            if seen.insert(m.clone()) {
                order.push(m);
                if order.len() > cap {
                    return Err(Error::BudgetExceeded(format!(
                        "lcm lattice has more than {cap} elements"
                    )));
                }
            }
        }
    }
    Ok(order)
}

/// Hochster's formula over every vertex subset; `I` must be squarefree.
pub fn hochster_betti(ideal: &MonomialIdeal, field: Field, budget: usize) -> Result<BettiTable> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    check_budget(ideal.n(), budget)?;
    let n = ideal.n();
    let delta = SimplicialComplex::of_ideal(ideal)?;
    let mut table = BettiTable {
        entries: BTreeMap::new(),
    };
    for sigma in 0u64..(1u64 << n) {
        let size = sigma.count_ones() as isize;
        let restricted = delta.restriction(sigma);
        let homology = homology_of_faces(&restricted.faces(), field);
        for i in 0..=size {
            let b = homology.betti(size - i - 1);
            table.add(i as usize, size as u32, b as u64);
        }
    }
    Ok(table)
}
