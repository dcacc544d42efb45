use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;

/// `I_2 = x_{p_1} V_1 ⊕ ... ⊕ x_{p_g} V_g` for a minimal prime `(x_{p_1}, ..., x_{p_g})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTwoDecomposition {
    pub n: usize,
    /// 0-based variables of the prime, increasing.
    pub prime: Vec<usize>,
    /// `spaces[i]` holds the 0-based variables spanning `V_i`, increasing.
    pub spaces: Vec<Vec<usize>>,
}

impl DegreeTwoDecomposition {
    pub fn g(&self) -> usize {
        self.prime.len()
    }
}

/// Assign each generator `x_a x_b` to the smallest prime variable dividing it
/// and collect the cofactors.
pub fn decompose_degree_two(
    ideal: &MonomialIdeal,
    prime: &[usize],
) -> Result<DegreeTwoDecomposition> {
    let mut prime = prime.to_vec();
    prime.sort_unstable();
    prime.dedup();
    let mut spaces: Vec<Vec<usize>> = vec![Vec::new(); prime.len()];
    for gen in ideal.gens() {
        if gen.degree() != 2 {
            return Err(Error::NotQuadratic(gen.to_string()));
        }
        let factors = gen.factors();
        let (pos, var) = prime
            .iter()
            .enumerate()
            .find(|(_, &p)| gen.exp(p) > 0)
            .ok_or_else(|| Error::NotInPrime(gen.to_string()))?;
        let cofactor = if factors[0] == *var { factors[1] } else { factors[0] };
        spaces[pos].push(cofactor);
    }
    for s in &mut spaces {
        s.sort_unstable();
        s.dedup();
    }
    Ok(DegreeTwoDecomposition {
        n: ideal.n(),
        prime,
        spaces,
    })
}

/// `dim (sum_{i in A} V_i + sum_{j not in A} <x_{p_j}>) >= g`, with `A` a
/// bitmask over prime positions.
pub fn check_height_inequality(dec: &DegreeTwoDecomposition, subset: u64) -> bool {
    let mut span = vec![false; dec.n];
    for (pos, &p) in dec.prime.iter().enumerate() {
        if subset >> pos & 1 == 1 {
            for &v in &dec.spaces[pos] {
                span[v] = true;
            }
        } else {
            span[p] = true;
        }
    }
    span.iter().filter(|&&b| b).count() >= dec.g()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::parse(n, gens).unwrap()
    }

    #[test]
    fn triangle() {
        let dec = decompose_degree_two(&ideal(3, &["x1*x2", "x1*x3", "x2*x3"]), &[0, 1]).unwrap();
        assert_eq!(dec.spaces, vec![vec![1, 2], vec![2]]);
        assert!(check_height_inequality(&dec, 0b11));
        assert!(check_height_inequality(&dec, 0));
    }

    #[test]
    fn squares_and_star() {
        let dec = decompose_degree_two(&ideal(3, &["x1^2", "x2^2", "x3^2"]), &[0, 1, 2]).unwrap();
        assert_eq!(dec.spaces, vec![vec![0], vec![1], vec![2]]);
        let dec = decompose_degree_two(&ideal(3, &["x1*x3", "x2*x3"]), &[2]).unwrap();
        assert_eq!(dec.spaces, vec![vec![0, 1]]);
    }

    #[test]
    fn violations() {
        let artificial = DegreeTwoDecomposition {
            n: 3,
            prime: vec![0, 1],
            spaces: vec![vec![1], vec![1]],
        };
        assert!(!check_height_inequality(&artificial, 0b11));
        assert!(matches!(
            decompose_degree_two(&ideal(3, &["x1*x2", "x3^2"]), &[0]),
            Err(Error::NotInPrime(_))
        ));
        assert!(matches!(
            decompose_degree_two(&ideal(3, &["x1*x2*x3"]), &[0]),
            Err(Error::NotQuadratic(_))
        ));
    }
}
