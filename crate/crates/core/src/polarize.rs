//! Polarization of monomial ideals.

use crate::monomial::{Monomial, MonomialIdeal};

/// Result of polarizing an ideal in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    /// `classes[i]` lists the new (0-based) variables `x_{i,1}, x_{i,2}, ...`
    /// replacing the original variable `x_i`, in order.
    pub classes: Vec<Vec<usize>>,
}

impl Polarization {
    /// Original variable that a polarization variable came from.
    pub fn class_of(&self, new_var: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&new_var))
    }
}

/// Replace each `x_i^a` by `x_{i,1} * ... * x_{i,a}`.
///
/// Variable `x_i` receives `max(1, e_i)` new variables, `e_i` its largest
/// exponent among the generators, so a squarefree ideal polarizes to itself.
pub fn polarize(ideal: &MonomialIdeal) -> Polarization {
    let n = ideal.n();
    let mut widths = vec![1u32; n];
    for g in ideal.gens() {
        for (i, &e) in g.exps().iter().enumerate() {
            widths[i] = widths[i].max(e);
        }
    }
    let mut classes = Vec::with_capacity(n);
    let mut next = 0usize;
    for &w in &widths {
        classes.push((next..next + w as usize).collect::<Vec<_>>());
        next += w as usize;
    }
    let total = next;
    let gens = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut exps = vec![0u32; total];
            for (i, &e) in g.exps().iter().enumerate() {
                for j in 0..e as usize {
                    exps[classes[i][j]] = 1;
                }
            }
            Monomial::new(exps).unwrap()
        })
        .collect();
    Polarization {
        ideal: MonomialIdeal::from_unchecked(total, gens),
        classes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_power() {
        let p = polarize(&MonomialIdeal::parse(1, &["x1^2"]).unwrap());
        assert_eq!(p.ideal.to_string(), "(x1*x2)");
        assert_eq!(p.classes, vec![vec![0, 1]]);
    }

    #[test]
    fn mixed_generators() {
        let p = polarize(&MonomialIdeal::parse(2, &["x1^2", "x2^2", "x1*x2"]).unwrap());
        // x_{1,1}=x1, x_{1,2}=x2, x_{2,1}=x3, x_{2,2}=x4
        let expected = MonomialIdeal::parse(4, &["x1*x2", "x3*x4", "x1*x3"]).unwrap();
        assert_eq!(p.ideal, expected);
        assert_eq!(p.class_of(2), Some(1));
    }

    #[test]
    fn squarefree_is_fixed() {
        let i = MonomialIdeal::parse(4, &["x1*x2", "x2*x3*x4"]).unwrap();
        let p = polarize(&i);
        assert_eq!(p.ideal, i);
        assert!(p.classes.iter().all(|c| c.len() == 1));
    }
}
