//! Balanced colorings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::SimplicialComplex;

/// Colors `1..=d` per vertex, indexed by 0-based vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring(pub Vec<usize>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BalanceCheck {
    Balanced(Coloring),
    Failed(String),
}

impl BalanceCheck {
    pub fn is_balanced(&self) -> bool {
        matches!(self, BalanceCheck::Balanced(_))
    }
}

/// Verify `coloring` if given, otherwise search for a proper
/// `(dim + 1)`-coloring of the 1-skeleton.
pub fn check_balanced(
    complex: &SimplicialComplex,
    coloring: Option<&Coloring>,
) -> Result<BalanceCheck> {
    let dim = complex.dim().ok_or(Error::VoidComplex)?;
    let colors = (dim + 1) as usize;
    match coloring {
        Some(c) => Ok(verify(complex, c, colors)),
        None => Ok(search(complex, colors)),
    }
}

fn verify(complex: &SimplicialComplex, coloring: &Coloring, colors: usize) -> BalanceCheck {
    let c = &coloring.0;
    if c.len() != complex.vertex_count() {
        return BalanceCheck::Failed(format!(
            "coloring has {} entries for {} vertices",
            c.len(),
            complex.vertex_count()
        ));
    }
    let used = complex.used_vertices();
    for v in 0..c.len() {
        if used >> v & 1 == 1 && !(1..=colors).contains(&c[v]) {
            return BalanceCheck::Failed(format!(
                "vertex {} has color {} outside 1..={colors}",
                v + 1,
                c[v]
            ));
        }
    }
    for facet in complex.facets() {
        let mut seen = vec![false; colors + 1];
        for &v in &facet {
            if seen[c[v]] {
                return BalanceCheck::Failed(format!(
                    "facet {:?} repeats color {}",
                    facet.iter().map(|v| v + 1).collect::<Vec<_>>(),
                    c[v]
                ));
            }
            seen[c[v]] = true;
        }
    }
    BalanceCheck::Balanced(coloring.clone())
}

fn search(complex: &SimplicialComplex, colors: usize) -> BalanceCheck {
    let n = complex.vertex_count();
    let mut adjacent = vec![0u64; n];
    for &f in complex.facet_masks() {
        let mut rest = f;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            adjacent[v] |= f & !(1 << v);
        }
    }
    let used = complex.used_vertices();
    let order: Vec<usize> = (0..n).filter(|&v| used >> v & 1 == 1).collect();
    let mut assignment = vec![1usize; n];
    if colors == 0 {
        // {∅}: nothing to color
        return BalanceCheck::Balanced(Coloring(assignment));
    }
    if backtrack(&order, 0, &adjacent, colors, &mut assignment) {
        BalanceCheck::Balanced(Coloring(assignment))
    } else {
        BalanceCheck::Failed(format!("1-skeleton is not {colors}-colorable"))
    }
}

fn backtrack(
    order: &[usize],
    pos: usize,
    adjacent: &[u64],
    colors: usize,
    assignment: &mut [usize],
) -> bool {
    let Some(&v) = order.get(pos) else {
        return true;
    };
    for c in 1..=colors {
        let clash = order[..pos]
            .iter()
            .any(|&u| adjacent[v] >> u & 1 == 1 && assignment[u] == c);
        if clash {
            continue;
        }
        assignment[v] = c;
        if backtrack(order, pos + 1, adjacent, colors, assignment) {
            return true;
        }
    }
    false
}
