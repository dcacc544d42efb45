//! The bipartite graphs `G_A` and their perfect matchings.

use super::DegreeTwoDecomposition;

/// Right vertices are prime positions `0..g`, left vertices are variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingInstance {
    /// Bitmask over prime positions.
    pub subset: u64,
    /// `adjacency[j]`: variables adjacent to right vertex `j`.
    pub adjacency: Vec<Vec<usize>>,
    /// `matching[j]`: variable matched to `j`, when a perfect matching is known.
    pub matching: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchingOutcome {
    Perfect(MatchingInstance),
    /// Hall violation: `|neighbors| < |deficient|`.
    Deficient {
        deficient: Vec<usize>,
        neighbors: Vec<usize>,
    },
}

/// `{x, j}` is an edge iff `x ∈ V_j` when `j ∈ A`, and `x = x_{p_j}` otherwise.
pub fn build_ga(dec: &DegreeTwoDecomposition, subset: u64) -> MatchingInstance {
    let adjacency = (0..dec.g())
        .map(|j| {
            if subset >> j & 1 == 1 {
                dec.spaces[j].clone()
            } else {
                vec![dec.prime[j]]
            }
        })
        .collect();
    MatchingInstance {
        subset,
        adjacency,
        matching: None,
    }
}

/// Augmenting-path maximum matching; either saturates the right side or
/// returns a Hall-violating set.
pub fn find_matching(inst: &MatchingInstance) -> MatchingOutcome {
    let g = inst.adjacency.len();
    let left = inst
        .adjacency
        .iter()
        .flatten()
        .copied()
        .max()
        .map_or(0, |m| m + 1);
    let mut owner: Vec<Option<usize>> = vec![None; left];
    let mut matched: Vec<Option<usize>> = vec![None; g];

    for j in 0..g {
        let mut visited = vec![false; left];
        augment(j, &inst.adjacency, &mut visited, &mut owner, &mut matched);
    }

    if let Some(free) = (0..g).find(|&j| matched[j].is_none()) {
        // alternating reachability from the free right vertex
        let mut in_set = vec![false; g];
        let mut seen_left = vec![false; left];
        let mut stack = vec![free];
        in_set[free] = true;
        while let Some(j) = stack.pop() {
            for &x in &inst.adjacency[j] {
                if seen_left[x] {
                    continue;
                }
                seen_left[x] = true;
                if let Some(k) = owner[x] {
                    if !in_set[k] {
                        in_set[k] = true;
                        stack.push(k);
                    }
                }
            }
        }
        return MatchingOutcome::Deficient {
            deficient: (0..g).filter(|&j| in_set[j]).collect(),
            neighbors: (0..left).filter(|&x| seen_left[x]).collect(),
        };
    }

    let mut out = inst.clone();
    out.matching = Some(matched.into_iter().map(Option::unwrap).collect());
    MatchingOutcome::Perfect(out)
}

fn augment(
    j: usize,
    adjacency: &[Vec<usize>],
    visited: &mut [bool],
    owner: &mut [Option<usize>],
    matched: &mut [Option<usize>],
) -> bool {
    for &x in &adjacency[j] {
        if visited[x] {
            continue;
        }
        visited[x] = true;
        let free = match owner[x] {
            None => true,
            Some(k) => augment(k, adjacency, visited, owner, matched),
        };
        if free {
            owner[x] = Some(j);
            matched[j] = Some(x);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> DegreeTwoDecomposition {
        DegreeTwoDecomposition {
            n: 3,
            prime: vec![0, 1],
            spaces: vec![vec![1, 2], vec![2]],
        }
    }

    #[test]
    fn adjacency_rule() {
        let dec = triangle();
        assert_eq!(build_ga(&dec, 0b10).adjacency, vec![vec![0], vec![2]]);
        assert_eq!(build_ga(&dec, 0).adjacency, vec![vec![0], vec![1]]);
        assert_eq!(build_ga(&dec, 0b11).adjacency, vec![vec![1, 2], vec![2]]);
    }

    #[test]
    fn matchings() {
        let dec = triangle();
        let MatchingOutcome::Perfect(m) = find_matching(&build_ga(&dec, 0b11)) else {
            panic!("expected a matching");
        };
        assert_eq!(m.matching, Some(vec![1, 2]));
        let MatchingOutcome::Perfect(m) = find_matching(&build_ga(&dec, 0)) else {
            panic!("expected a matching");
        };
        assert_eq!(m.matching, Some(vec![0, 1]));
    }

    #[test]
    fn hall_violation_witness() {
        let dec = DegreeTwoDecomposition {
            n: 3,
            prime: vec![0, 1],
            spaces: vec![vec![1], vec![1]],
        };
        match find_matching(&build_ga(&dec, 0b11)) {
            MatchingOutcome::Deficient {
                deficient,
                neighbors,
            } => {
                assert_eq!(deficient, vec![0, 1]);
                assert_eq!(neighbors, vec![1]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
