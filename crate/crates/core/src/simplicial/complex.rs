use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::primes::{mask_to_vec, minimal_transversals, MAX_VARS};

/// A simplicial complex on vertices `0..vertices`, stored by its facets.
///
/// No facets is the void complex; the single facet `∅` is the empty complex
/// `{∅}`. Vertices that lie in no face are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: usize,
    facets: Vec<u64>,
}

fn lex_key(mask: u64) -> Vec<usize> {
    mask_to_vec(mask)
}

fn maximal(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
    sets.dedup();
    let mut out: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|&f| f & s == s) {
            out.push(s);
        }
    }
    out.sort_by_key(|&f| lex_key(f));
    out
}

impl SimplicialComplex {
    pub fn new(vertices: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        if vertices > MAX_VARS {
            return Err(Error::BudgetExceeded(format!(
                "{vertices} vertices (at most {MAX_VARS} supported)"
            )));
        }
        let mut masks = Vec::with_capacity(facets.len());
        for f in facets {
            let mut m = 0u64;
            for v in f {
                if v >= vertices {
                    return Err(Error::InvalidInput(format!(
                        "vertex {} outside 1..={vertices}",
                        v + 1
                    )));
                }
                m |= 1 << v;
            }
            masks.push(m);
        }
        Ok(Self::from_masks(vertices, masks))
    }

    pub(crate) fn from_masks(vertices: usize, facets: Vec<u64>) -> Self {
        SimplicialComplex {
            vertices,
            facets: maximal(facets),
        }
    }

    pub fn void(vertices: usize) -> Self {
        SimplicialComplex {
            vertices,
            facets: Vec::new(),
        }
    }

    /// The complex `{∅}`.
    pub fn empty(vertices: usize) -> Self {
        SimplicialComplex {
            vertices,
            facets: vec![0],
        }
    }

    pub fn simplex(vertices: usize) -> Self {
        let full = if vertices == 64 { u64::MAX } else { (1u64 << vertices) - 1 };
        SimplicialComplex {
            vertices,
            facets: vec![full],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Facets as sorted 0-based vertex lists.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| mask_to_vec(f)).collect()
    }

    pub(crate) fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    /// `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize - 1)
            .max()
    }

    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(|f| f.count_ones());
        match sizes.next() {
            None => true,
            Some(s) => sizes.all(|t| t == s),
        }
    }

    pub fn contains_face(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| f & face == face)
    }

    /// Every face (including `∅`), sorted by size then lexicographically.
    pub fn faces(&self) -> Vec<u64> {
        let mut set: HashSet<u64> = HashSet::new();
        for &f in &self.facets {
            // all submasks of f
            let mut s = f;
            loop {
                set.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        let mut faces: Vec<u64> = set.into_iter().collect();
        faces.sort_by(|a, b| {
            a.count_ones()
                .cmp(&b.count_ones())
                .then_with(|| lex_key(*a).cmp(&lex_key(*b)))
        });
        faces
    }

    /// Vertices that lie in some face.
    pub fn used_vertices(&self) -> u64 {
        self.facets.iter().fold(0, |a, &f| a | f)
    }

    /// `(f_{-1}, f_0, ..., f_{dim})`.
    pub fn f_vector(&self) -> Result<Vec<u64>> {
        let dim = self.dim().ok_or(Error::VoidComplex)?;
        let mut f = vec![0u64; (dim + 2) as usize];
        for face in self.faces() {
            f[face.count_ones() as usize] += 1;
        }
        Ok(f)
    }

    /// `(h_0, ..., h_d)` with `d = dim + 1`.
    pub fn h_vector(&self) -> Result<Vec<i64>> {
        let f = self.f_vector()?;
        Ok(h_from_f(&f))
    }

    /// Reduced Euler characteristic `sum (-1)^i f_i`, `i >= -1`.
    pub fn reduced_euler_characteristic(&self) -> Result<i64> {
        let f = self.f_vector()?;
        Ok(f.iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { -(c as i64) } else { c as i64 })
            .sum())
    }

    pub fn link(&self, face: u64) -> SimplicialComplex {
        let facets = self
            .facets
            .iter()
            .filter(|&&f| f & face == face)
            .map(|&f| f & !face)
            .collect();
        Self::from_masks(self.vertices, facets)
    }

    /// Induced subcomplex on the vertex set `mask`.
    pub fn restriction(&self, mask: u64) -> SimplicialComplex {
        let facets = self.facets.iter().map(|&f| f & mask).collect();
        Self::from_masks(self.vertices, facets)
    }

    /// Join with a simplex on `k` new vertices appended after the existing ones.
    pub fn join_simplex(&self, k: usize) -> Result<SimplicialComplex> {
        let vertices = self.vertices + k;
        if vertices > MAX_VARS {
            return Err(Error::BudgetExceeded(format!("{vertices} vertices")));
        }
        let apex: u64 = (self.vertices..vertices).fold(0, |m, v| m | 1 << v);
        Ok(Self::from_masks(
            vertices,
            self.facets.iter().map(|&f| f | apex).collect(),
        ))
    }

    pub fn minimal_nonfaces(&self) -> Vec<u64> {
        let faces = self.faces();
        let lookup: HashSet<u64> = faces.iter().copied().collect();
        let mut found: HashSet<u64> = HashSet::new();
        for &f in &faces {
            for v in 0..self.vertices {
                if f >> v & 1 == 1 {
                    continue;
                }
                let cand = f | 1 << v;
                if lookup.contains(&cand) {
                    continue;
                }
                let mut rest = cand;
                let mut minimal = true;
                while rest != 0 {
                    let u = rest.trailing_zeros();
                    rest &= rest - 1;
                    if !lookup.contains(&(cand & !(1 << u))) {
                        minimal = false;
                        break;
                    }
                }
                if minimal {
                    found.insert(cand);
                }
            }
        }
        if self.is_void() {
            found.insert(0);
        }
        let mut out: Vec<u64> = found.into_iter().collect();
        out.sort_by(|a, b| {
            a.count_ones()
                .cmp(&b.count_ones())
                .then_with(|| lex_key(*a).cmp(&lex_key(*b)))
        });
        out
    }

    /// Minimal non-faces have exactly two vertices.
    pub fn is_flag(&self) -> bool {
        self.minimal_nonfaces().iter().all(|m| m.count_ones() == 2)
    }

    /// The first minimal non-face whose size is not 2, if any.
    pub fn flag_violation(&self) -> Option<Vec<usize>> {
        self.minimal_nonfaces()
            .into_iter()
            .find(|m| m.count_ones() != 2)
            .map(mask_to_vec)
    }

    /// Stanley–Reisner ideal in `vertex_count()` variables.
    pub fn stanley_reisner(&self) -> Result<MonomialIdeal> {
        if self.vertices == 0 {
            if self.is_void() {
                return Err(Error::InvalidInput(
                    "void complex on zero vertices has no Stanley-Reisner ideal".into(),
                ));
            }
            return Ok(MonomialIdeal::zero(0));
        }
        let gens = self
            .minimal_nonfaces()
            .into_iter()
            .map(|m| {
                let mut exps = vec![0u32; self.vertices];
                for v in mask_to_vec(m) {
                    exps[v] = 1;
                }
                Monomial::new(exps).unwrap()
            })
            .collect();
        MonomialIdeal::new(self.vertices, gens)
    }

    /// Inverse of [`stanley_reisner`](Self::stanley_reisner).
    pub fn of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if ideal.n() > MAX_VARS {
            return Err(Error::BudgetExceeded(format!("{} variables", ideal.n())));
        }
        let n = ideal.n();
        let all: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let edges: Vec<u64> = ideal.gens().iter().map(|g| g.support_mask()).collect();
        let facets = minimal_transversals(&edges)
            .into_iter()
            .map(|c| all & !c)
            .collect();
        Ok(Self::from_masks(n, facets))
    }

    pub fn independence_complex(graph: &Graph) -> Result<SimplicialComplex> {
        Self::of_ideal(&graph.edge_ideal()?)
    }

    pub fn to_spec(&self) -> ComplexSpec {
        ComplexSpec {
            vertices: self.vertices,
            facets: self
                .facets()
                .into_iter()
                .map(|f| f.into_iter().map(|v| v + 1).collect())
                .collect(),
        }
    }
}

pub(crate) fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// `h_k = sum_{i=0..k} (-1)^{k-i} C(d-i, k-i) f_{i-1}`.
pub fn h_from_f(f: &[u64]) -> Vec<i64> {
    let d = f.len() as i64 - 1;
    (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d - i, k - i) * f[i as usize] as i64
                })
                .sum()
        })
        .collect()
}

/// h-vector with trailing zeros removed (the h-polynomial).
pub fn h_polynomial(h: &[i64]) -> Vec<i64> {
    let mut v = h.to_vec();
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// A simple graph on vertices `0..vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        for &(a, b) in &edges {
            if a >= vertices || b >= vertices || a == b {
                return Err(Error::InvalidInput(format!(
                    "bad edge {{{}, {}}} on {vertices} vertices",
                    a + 1,
                    b + 1
                )));
            }
        }
        Ok(Graph { vertices, edges })
    }

    pub fn edge_ideal(&self) -> Result<MonomialIdeal> {
        let gens = self
            .edges
            .iter()
            .map(|&(a, b)| Monomial::from_pairs(self.vertices, &[(a, 1), (b, 1)]))
            .collect();
        MonomialIdeal::new(self.vertices, gens)
    }
}

/// JSON form: `{"vertices": 6, "facets": [[1,3,5], ...]}` (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexSpec {
    pub vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

impl ComplexSpec {
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        let facets = self
            .facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|&v| {
                        if v == 0 {
                            Err(Error::InvalidInput("vertices are 1-based".into()))
                        } else {
                            Ok(v - 1)
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::new(self.vertices, facets)
    }
}

/// JSON form: `{"vertices": 6, "edges": [[1,2], ...]}` (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphSpec {
    pub fn to_graph(&self) -> Result<Graph> {
        let edges = self
            .edges
            .iter()
            .map(|&[a, b]| {
                if a == 0 || b == 0 {
                    Err(Error::InvalidInput("vertices are 1-based".into()))
                } else {
                    Ok((a - 1, b - 1))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Graph::new(self.vertices, edges)
    }
}
