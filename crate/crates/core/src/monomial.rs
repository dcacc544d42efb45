//! Monomials and monomial ideals in `K[x1, ..., xn]`.
//!
//! Monomials are exponent vectors. Ideals always carry a minimal generating
//! set in a canonical order (by degree, then descending lex with
//! `x1 > x2 > ... > xn`), so two equal ideals compare equal structurally.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::InvalidInput(
                "monomial needs at least one variable".into(),
            ));
        }
        Ok(Monomial { exps })
    }

    pub fn one(n: usize) -> Self {
        assert!(n > 0, "constant monomial needs n > 0");
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_{var+1}` (0-based `var`).
    pub fn var(n: usize, var: usize) -> Self {
        let mut exps = vec![0; n];
        exps[var] = 1;
        Monomial { exps }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, u32)]) -> Self {
        let mut exps = vec![0; n];
        for &(v, e) in pairs {
            exps[v] += e;
        }
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// Support as a sorted list of 0-based variable indices.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1 << i))
    }

    /// Factors as a multiset of variables, in increasing index order.
    pub fn factors(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect()
    }

    /// Lex comparison with `x1 > x2 > ... > xn`.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }

    /// Parse `x3^2*x5` (1-based indices, `^1` optional, `1` for the constant).
    pub fn parse(text: &str, n: usize) -> Result<Monomial> {
        parse_monomial(text, n)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

fn parse_monomial(text: &str, n: usize) -> Result<Monomial> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let err = |pos: usize, msg: &str| Error::Parse {
        pos,
        msg: format!("{msg} in monomial {text:?}"),
    };
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let read_number = |pos: &mut usize| -> Option<u64> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        text[start..*pos].parse().ok()
    };
    if n == 0 {
        return Err(err(0, "no variables available"));
    }

    let mut exps = vec![0u32; n];
    skip_ws(&mut pos);
    if pos < bytes.len() && bytes[pos] == b'1' {
        pos += 1;
        skip_ws(&mut pos);
        if pos != bytes.len() {
            return Err(err(pos, "trailing characters after constant"));
        }
        return Ok(Monomial { exps });
    }
    loop {
        skip_ws(&mut pos);
        if pos >= bytes.len() || bytes[pos] != b'x' {
            return Err(err(pos, "expected 'x'"));
        }
        pos += 1;
        let var_pos = pos;
        let var = read_number(&mut pos).ok_or_else(|| err(var_pos, "expected variable index"))?;
        if var == 0 || var as usize > n {
            return Err(err(var_pos, &format!("variable index {var} outside 1..={n}")));
        }
        skip_ws(&mut pos);
        let mut e = 1u64;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            skip_ws(&mut pos);
            let exp_pos = pos;
            e = read_number(&mut pos).ok_or_else(|| err(exp_pos, "expected exponent"))?;
            if e > u32::MAX as u64 / 2 {
                return Err(err(exp_pos, "exponent too large"));
            }
            skip_ws(&mut pos);
        }
        exps[var as usize - 1] += e as u32;
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b'*' {
            return Err(err(pos, "expected '*'"));
        }
        pos += 1;
    }
    Ok(Monomial { exps })
}

/// A monomial ideal with a minimal generating set.
///
/// `n` may be zero only for the zero ideal of the field `K` itself.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| b.lex_cmp(a))
}

/// Trie on exponent vectors, one variable per level, answering "does some
/// stored monomial divide `m`".
struct DivisorIndex {
    n: usize,
    /// `children[node]`: `(exponent, child)` pairs.
    children: Vec<Vec<(u32, usize)>>,
    stored: bool,
}

impl DivisorIndex {
    fn new(n: usize) -> Self {
        DivisorIndex {
            n,
            children: vec![Vec::new()],
            stored: false,
        }
    }

    fn insert(&mut self, m: &Monomial) {
        self.stored = true;
        let mut node = 0;
        for &e in &m.exps {
            node = match self.children[node].iter().find(|&&(x, _)| x == e) {
                Some(&(_, child)) => child,
                None => {
                    let child = self.children.len();
                    self.children.push(Vec::new());
                    self.children[node].push((e, child));
                    child
                }
            };
        }
    }

    fn has_divisor(&self, m: &Monomial) -> bool {
        self.stored && self.search(0, 0, m)
    }

    fn search(&self, node: usize, var: usize, m: &Monomial) -> bool {
        if var == self.n {
            return true;
        }
        self.children[node]
            .iter()
            .any(|&(e, child)| e <= m.exps[var] && self.search(child, var + 1, m))
    }
}

/// See [`MonomialIdeal::split_pure_powers`].
pub(crate) struct PowerSplit {
    /// Number of variables of `R`.
    pub free: usize,
    /// Number of variables with a pure power.
    pub nilpotent: usize,
    /// `(deg x^e, I : x^e in R)` for each proper colon; the ideal is `None`
    /// when `R` is the field itself.
    pub summands: Vec<(u32, Option<MonomialIdeal>)>,
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.n() != n {
                return Err(Error::AmbientMismatch(n, g.n()));
            }
        }
        Ok(Self::from_unchecked(n, gens))
    }

    pub(crate) fn from_unchecked(n: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_by(canonical_cmp);
        gens.dedup();
        // after sorting by degree, a divisor always precedes its multiples
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        if gens.len() <= 32 {
            for g in gens {
                if !minimal.iter().any(|m| m.divides(&g)) {
                    minimal.push(g);
                }
            }
        } else {
            let mut index = DivisorIndex::new(n);
            for g in gens {
                if !index.has_divisor(&g) {
                    index.insert(&g);
                    minimal.push(g);
                }
            }
        }
        MonomialIdeal { n, gens: minimal }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// Parse a list of monomial strings in `n` variables.
    pub fn parse<S: AsRef<str>>(n: usize, gens: &[S]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|s| Monomial::parse(s.as_ref(), n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Closed under `x_{j-1} * u / x_j` for generators `u` with `x_j | u`,
    /// hence under every move towards a smaller variable.
    pub fn is_strongly_stable(&self) -> bool {
        let mut index = DivisorIndex::new(self.n);
        for g in &self.gens {
            index.insert(g);
        }
        self.gens.iter().all(|u| {
            u.support().into_iter().filter(|&j| j > 0).all(|j| {
                let mut exps = u.exps.clone();
                exps[j] -= 1;
                exps[j - 1] += 1;
                index.has_divisor(&Monomial { exps })
            })
        })
    }

    /// `S/I` as a module over the polynomial ring `R` in the variables with no
    /// pure power in `I`: a direct sum of `x^e * R/(I : x^e)` over the
    /// monomials `x^e` below those powers. `None` when no variable has a pure
    /// power or there are more than `max_cells` monomials `x^e`.
    pub(crate) fn split_pure_powers(&self, max_cells: u64) -> Option<PowerSplit> {
        let mut powers = vec![0u32; self.n];
        for g in &self.gens {
            if let [v] = g.support()[..] {
                powers[v] = g.exp(v);
            }
        }
        let nilpotent: Vec<usize> = (0..self.n).filter(|&v| powers[v] > 0).collect();
        let free: Vec<usize> = (0..self.n).filter(|&v| powers[v] == 0).collect();
        let cells = nilpotent
            .iter()
            .try_fold(1u64, |acc, &v| acc.checked_mul(powers[v] as u64))
            .filter(|&c| c <= max_cells)?;
        if nilpotent.is_empty() {
            return None;
        }
        let mut summands = Vec::new();
        let mut offset = vec![0u32; nilpotent.len()];
        for _ in 0..cells {
            let mut gens = Vec::new();
            let mut unit = false;
            for g in &self.gens {
                if nilpotent.iter().zip(&offset).all(|(&v, &e)| g.exp(v) <= e) {
                    let exps: Vec<u32> = free.iter().map(|&v| g.exp(v)).collect();
                    unit |= exps.iter().all(|&e| e == 0);
                    gens.push(Monomial { exps });
                }
            }
            if !unit {
                let colon = (!free.is_empty()).then(|| Self::from_unchecked(free.len(), gens));
                summands.push((offset.iter().sum(), colon));
            }
            for (slot, &v) in offset.iter_mut().zip(&nilpotent) {
                *slot += 1;
                if *slot < powers[v] {
                    break;
                }
                *slot = 0;
            }
        }
        Some(PowerSplit {
            free: free.len(),
            nilpotent: nilpotent.len(),
            summands,
        })
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_generated_in_degree(&self, d: u32) -> bool {
        self.gens.iter().all(|g| g.degree() == d)
    }

    /// Ideal sum `self + other`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::from_unchecked(self.n, gens))
    }

    /// The extension of this ideal to a ring with `n` variables, `n >= self.n()`.
    pub fn extend_to(&self, n: usize) -> MonomialIdeal {
        assert!(n >= self.n);
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut exps = g.exps.clone();
                exps.resize(n, 0);
                Monomial { exps }
            })
            .collect();
        MonomialIdeal { n, gens }
    }

    pub fn to_spec(&self) -> IdealSpec {
        IdealSpec {
            n: self.n,
            generators: self.gens.iter().map(|g| g.to_string()).collect(),
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// JSON form of an ideal: `{"n": 4, "generators": ["x1*x2", "x3^2"]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSpec {
    pub n: usize,
    pub generators: Vec<String>,
}

impl IdealSpec {
    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::parse(self.n, &self.generators)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let m = Monomial::parse("x3^2*x5", 5).unwrap();
        assert_eq!(m.exps(), &[0, 0, 2, 0, 1]);
        assert_eq!(m.to_string(), "x3^2*x5");
        assert_eq!(Monomial::parse(" x1 * x1^1 ", 2).unwrap().to_string(), "x1^2");
        assert!(Monomial::parse("1", 3).unwrap().is_one());
    }

    #[test]
    fn parse_errors_carry_position() {
        match Monomial::parse("x1*y2", 3) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("unexpected {other:?}"),
        }
        match Monomial::parse("x4", 3) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Monomial::parse("x1^", 3).is_err());
        assert!(Monomial::parse("", 3).is_err());
        assert!(Monomial::parse("x0", 3).is_err());
    }

    #[test]
    fn generators_are_minimalized() {
        let i = MonomialIdeal::parse(3, &["x1*x2*x3", "x1*x2", "x1*x2", "x3^2"]).unwrap();
        assert_eq!(i.to_string(), "(x1*x2, x3^2)");
        assert!(i.contains(&Monomial::parse("x1^2*x2", 3).unwrap()));
        assert!(!i.contains(&Monomial::parse("x1*x3", 3).unwrap()));
    }

    #[test]
    fn empty_exponent_vector_rejected() {
        assert!(Monomial::new(vec![]).is_err());
    }
}
