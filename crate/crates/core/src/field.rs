//! Coefficient fields and exact rank computations.
//!
//! All linear algebra in the crate goes through this module. Over the
//! rationals ranks are computed by fraction-free (Bareiss) elimination,
//! first in checked `i128` and, on overflow, in arbitrary precision.
//! Over a prime field elimination is plain modular Gaussian elimination.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u64 = 32003;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not a prime")));
        }
        if p >= 1 << 32 {
            return Err(Error::InvalidInput(format!(
                "prime {p} too large (must be below 2^32)"
            )));
        }
        Ok(Field::Prime(p))
    }

    /// Short tag used in JSON reports: `q` or `p:<prime>`.
    pub fn tag(&self) -> String {
        match self {
            Field::Rationals => "q".into(),
            Field::Prime(p) => format!("p:{p}"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rationals);
        }
        if let Some(rest) = s.strip_prefix("p:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad prime in field spec {s:?}")))?;
            return Field::prime(p);
        }
        if s == "p" {
            return Ok(Field::Prime(DEFAULT_PRIME));
        }
        Err(Error::InvalidInput(format!(
            "unknown field {s:?} (expected q or p:<prime>)"
        )))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Rank of a dense integer matrix over `field`.
pub fn rank_integer(rows: &[Vec<i64>], field: Field) -> usize {
    if rows.is_empty() {
        return 0;
    }
    match field {
        Field::Prime(p) => {
            let m: Vec<Vec<u64>> = rows
                .iter()
                .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
                .collect();
            rank_mod_p(m, p)
        }
        Field::Rationals => {
            let m: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| r.iter().map(|&x| x as i128).collect())
                .collect();
            match bareiss_i128(m) {
                Some(r) => r,
                None => bareiss_big(
                    rows.iter()
                        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                        .collect(),
                ),
            }
        }
    }
}

/// Rank of a matrix with rational entries over `field`.
///
/// Over a prime field every denominator must be invertible.
pub fn rank_rational(rows: &[Vec<BigRational>], field: Field) -> Result<usize> {
    if rows.is_empty() {
        return Ok(0);
    }
    match field {
        Field::Rationals => {
            let ints = rows.iter().map(|r| clear_denominators(r)).collect();
            Ok(bareiss_big(ints))
        }
        Field::Prime(p) => {
            let m = rows
                .iter()
                .map(|r| r.iter().map(|x| rational_mod_p(x, p)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            Ok(rank_mod_p(m, p))
        }
    }
}

fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let l = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| x.numer() * (&l / x.denom()))
        .collect()
}

pub(crate) fn rational_mod_p(x: &BigRational, p: u64) -> Result<u64> {
    let pb = BigInt::from(p);
    let num = x.numer().mod_floor(&pb).to_u64().unwrap();
    let den = x.denom().mod_floor(&pb).to_u64().unwrap();
    if den == 0 {
        return Err(Error::InvalidInput(format!(
            "denominator of {x} vanishes modulo {p}"
        )));
    }
    Ok(mul_mod(num, inv_mod(den, p), p))
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(result, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    result
}

fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = inv_mod(m[rank][c], p);
        for j in c..ncols {
            m[rank][j] = mul_mod(m[rank][j], inv, p);
        }
        for i in rank + 1..nrows {
            let f = m[i][c];
            if f == 0 {
                continue;
            }
            for j in c..ncols {
                let sub = mul_mod(f, m[rank][j], p);
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Fraction-free elimination; `None` on overflow.
fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let p = m[rank][c];
        for i in rank + 1..nrows {
            let f = m[i][c];
            for j in c + 1..ncols {
                let a = p.checked_mul(m[i][j])?;
                let b = f.checked_mul(m[rank][j])?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
            m[i][c] = 0;
        }
        prev = p;
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    Some(rank)
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let p = m[rank][c].clone();
        for i in rank + 1..nrows {
            let f = m[i][c].clone();
            for j in c + 1..ncols {
                let v = (&p * &m[i][j] - &f * &m[rank][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = p;
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}
