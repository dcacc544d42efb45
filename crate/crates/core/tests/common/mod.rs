//! Independent oracles and seeded generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use egh_core::simplicial::Graph;
use egh_core::{MonomialIdeal, SimplicialComplex};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Quadratic monomial ideal with `n` variables and up to `gens` generators,
/// squarefree or not with equal odds per generator.
pub fn random_quadratic(rng: &mut ChaCha8Rng, n: usize, gens: usize) -> MonomialIdeal {
    let mut text = Vec::new();
    for _ in 0..gens {
        let i = rng.gen_range(0..n);
        let j = if rng.gen_bool(0.25) { i } else { rng.gen_range(0..n) };
        let (a, b) = (i.min(j), i.max(j));
        text.push(if a == b {
            format!("x{}^2", a + 1)
        } else {
            format!("x{}*x{}", a + 1, b + 1)
        });
    }
    MonomialIdeal::parse(n, &text).unwrap()
}

/// Arbitrary monomial ideal with exponents up to `max_exp`.
pub fn random_ideal(rng: &mut ChaCha8Rng, n: usize, gens: usize, max_exp: u32) -> MonomialIdeal {
    let mut text = Vec::new();
    for _ in 0..gens {
        let parts: Vec<String> = (0..n)
            .filter_map(|v| {
                let e = rng.gen_range(0..=max_exp);
                (e > 0).then(|| format!("x{}^{e}", v + 1))
            })
            .collect();
        if parts.is_empty() {
            continue;
        }
        text.push(parts.join("*"));
    }
    MonomialIdeal::parse(n, &text).unwrap()
}

pub fn random_complex(rng: &mut ChaCha8Rng, vertices: usize, facets: usize) -> SimplicialComplex {
    let all: Vec<usize> = (0..vertices).collect();
    let list = (0..facets)
        .map(|_| {
            let size = rng.gen_range(0..=vertices.min(4));
            let mut f: Vec<usize> = all.choose_multiple(rng, size).copied().collect();
            f.sort_unstable();
            f
        })
        .collect();
    SimplicialComplex::new(vertices, list).unwrap()
}

/// `dim (S/I)_d` by listing every degree-`d` monomial.
pub fn brute_hilbert(ideal: &MonomialIdeal, d: u32) -> u64 {
    let gens: Vec<Vec<u32>> = ideal.gens().iter().map(|g| g.exps().to_vec()).collect();
    let mut exps = vec![0u32; ideal.n()];
    let mut count = 0;
    walk(0, d, &mut exps, &gens, &mut count);
    count
}

fn walk(v: usize, left: u32, exps: &mut Vec<u32>, gens: &[Vec<u32>], count: &mut u64) {
    if v + 1 >= exps.len() {
        if exps.is_empty() {
            *count += (left == 0 && gens.is_empty()) as u64;
            return;
        }
        exps[v] = left;
        let inside = gens
            .iter()
            .any(|g| g.iter().zip(exps.iter()).all(|(a, b)| a <= b));
        *count += !inside as u64;
        return;
    }
    for e in 0..=left {
        exps[v] = e;
        walk(v + 1, left - e, exps, gens, count);
    }
    exps[v] = 0;
}

/// All faces (including the empty face) as sorted vertex lists.
pub fn all_faces(complex: &SimplicialComplex) -> BTreeSet<Vec<usize>> {
    let mut faces = BTreeSet::new();
    for facet in complex.facets() {
        for mask in 0u32..1 << facet.len() {
            faces.insert(
                facet
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect(),
            );
        }
    }
    faces
}

pub enum OracleField {
    Rationals,
    Two,
}

/// Reduced Betti numbers `β̃_{-1}, ..., β̃_dim` from boundary ranks.
pub fn oracle_homology(complex: &SimplicialComplex, field: OracleField) -> Vec<usize> {
    let faces = all_faces(complex);
    let top = faces.iter().map(Vec::len).max().unwrap();
    let by_size: Vec<Vec<Vec<usize>>> = (0..=top)
        .map(|s| faces.iter().filter(|f| f.len() == s).cloned().collect())
        .collect();
    // rank of the boundary from faces of size s to size s - 1
    let rank = |s: usize| -> usize {
        if s == 0 || s > top {
            return 0;
        }
        let rows: Vec<Vec<i64>> = by_size[s]
            .iter()
            .map(|f| {
                by_size[s - 1]
                    .iter()
                    .map(|g| {
                        match (0..f.len()).find(|&k| {
                            let mut h = f.clone();
                            h.remove(k);
                            h == *g
                        }) {
                            Some(k) if k % 2 == 0 => 1,
                            Some(_) => -1,
                            None => 0,
                        }
                    })
                    .collect()
            })
            .collect();
        match field {
            OracleField::Rationals => rank_q(rows),
            OracleField::Two => rank_f2(rows),
        }
    };
    (0..=top)
        .map(|s| by_size[s].len() - rank(s) - rank(s + 1))
        .collect()
}

fn rank_q(rows: Vec<Vec<i64>>) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = BigRational::one() / m[r][c].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone() * &inv;
                for k in 0..cols {
                    let sub = factor.clone() * &m[r][k];
                    m[i][k] -= sub;
                }
            }
        }
        r += 1;
    }
    r
}

fn rank_f2(rows: Vec<Vec<i64>>) -> usize {
    let mut m: Vec<Vec<bool>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.rem_euclid(2) == 1).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c]) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] {
                for k in 0..cols {
                    m[i][k] ^= m[r][k];
                }
            }
        }
        r += 1;
    }
    r
}

/// One representative per isomorphism class of graphs on `n` vertices.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&e| e == (a.min(b), a.max(b))).unwrap();
    let images: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|p| pairs.iter().map(|&(a, b)| index(p[a], p[b])).collect())
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let canonical = images
            .iter()
            .map(|img| {
                img.iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .fold(0u32, |m, (_, &t)| m | 1 << t)
            })
            .min()
            .unwrap();
        if seen.insert(canonical) {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            out.push(Graph::new(n, edges).unwrap());
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn octahedron() -> SimplicialComplex {
    let mut facets = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                facets.push(vec![a, b, c]);
            }
        }
    }
    SimplicialComplex::new(6, facets).unwrap()
}
