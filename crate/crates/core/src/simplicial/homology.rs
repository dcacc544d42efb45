//! Reduced simplicial homology over a field.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{rank_integer, Field};

use super::SimplicialComplex;

/// Reduced Betti numbers `β̃_i` for `i = -1, 0, ..., dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedHomology {
    /// `ranks[i + 1] = β̃_i`.
    ranks: Vec<usize>,
}

impl ReducedHomology {
    pub fn betti(&self, i: isize) -> usize {
        if i < -1 {
            return 0;
        }
        self.ranks.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// `(β̃_0, ..., β̃_dim)`.
    pub fn by_dimension(&self) -> &[usize] {
        self.ranks.get(1..).unwrap_or(&[])
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    /// `sum (-1)^i β̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { -(b as i64) } else { b as i64 })
            .sum()
    }
}

pub fn reduced_homology_ranks(complex: &SimplicialComplex, field: Field) -> Result<ReducedHomology> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    Ok(homology_of_faces(&complex.faces(), field))
}

/// Reduced homology of the complex whose face list (closed under subsets,
/// `∅` included unless void) is `faces`.
pub(crate) fn homology_of_faces(faces: &[u64], field: Field) -> ReducedHomology {
    let top = faces.iter().map(|f| f.count_ones()).max();
    let Some(top) = top else {
        return ReducedHomology { ranks: Vec::new() };
    };
    // by_size[s] = faces with s vertices, i.e. dimension s - 1
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top as usize + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    let index: Vec<HashMap<u64, usize>> = by_size
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, &f)| (f, i)).collect())
        .collect();

    // boundary_rank[s] = rank of the map from size-s faces to size-(s-1) faces
    let mut boundary_rank = vec![0usize; top as usize + 2];
    for s in 1..=top as usize {
        let rows = by_size[s - 1].len();
        let cols = by_size[s].len();
        if rows == 0 || cols == 0 {
            continue;
        }
        let mut m = vec![vec![0i64; cols]; rows];
        for (c, &face) in by_size[s].iter().enumerate() {
            let mut rest = face;
            let mut pos = 0;
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                let r = index[s - 1][&(face & !(1u64 << v))];
                m[r][c] = if pos % 2 == 0 { 1 } else { -1 };
                pos += 1;
            }
        }
        boundary_rank[s] = rank_integer(&m, field);
    }
    let ranks = (0..=top as usize)
        .map(|s| by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1])
        .collect();
    ReducedHomology { ranks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_boundary() {
        let c = SimplicialComplex::new(3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        let h = reduced_homology_ranks(&c, Field::Rationals).unwrap();
        assert_eq!(h.by_dimension(), &[0, 1]);
        assert_eq!(h.betti(-1), 0);
    }

    #[test]
    fn points() {
        let one = SimplicialComplex::new(1, vec![vec![0]]).unwrap();
        assert!(reduced_homology_ranks(&one, Field::Rationals).unwrap().is_acyclic());
        let two = SimplicialComplex::new(2, vec![vec![0], vec![1]]).unwrap();
        let h = reduced_homology_ranks(&two, Field::Prime(2)).unwrap();
        assert_eq!(h.by_dimension(), &[1]);
        let empty = SimplicialComplex::empty(0);
        assert_eq!(reduced_homology_ranks(&empty, Field::Rationals).unwrap().betti(-1), 1);
        assert!(reduced_homology_ranks(&SimplicialComplex::void(1), Field::Rationals).is_err());
    }

    #[test]
    fn projective_plane_is_field_dependent() {
        // six-vertex triangulation of RP^2
        let facets = vec![
            vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 4], vec![0, 4, 5], vec![0, 1, 5],
            vec![1, 2, 4], vec![2, 3, 5], vec![1, 3, 4], vec![2, 4, 5], vec![1, 3, 5],
        ];
        let rp2 = SimplicialComplex::new(6, facets).unwrap();
        let q = reduced_homology_ranks(&rp2, Field::Rationals).unwrap();
        let f2 = reduced_homology_ranks(&rp2, Field::Prime(2)).unwrap();
        assert_eq!(q.by_dimension(), &[0, 0, 0]);
        assert_eq!(f2.by_dimension(), &[0, 1, 1]);
    }
}
