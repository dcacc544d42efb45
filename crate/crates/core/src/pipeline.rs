//! From a flag Cohen–Macaulay complex to a balanced Cohen–Macaulay complex
//! with the same h-vector.
//!
//! The h-vector of `Δ` is realized as the Hilbert function of an Artinian
//! lex-plus-squares ideal `J'` in `g = ht I_Δ` variables. Polarizing `J'`
//! gives a squarefree ideal whose complex `Γ` is colored by polarization
//! class. When `Γ` is smaller than `Δ` it is coned with fresh vertices, each
//! in its own color class.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hilbert::HilbertData;
use crate::lpp::{construct_lex_plus_powers, LppTarget};
use crate::monomial::IdealSpec;
use crate::polarize::polarize;
use crate::primes::height;
use crate::simplicial::{
    check_balanced, h_polynomial, is_cohen_macaulay, BalanceCheck, CmCertificate, Coloring,
    ComplexSpec, SimplicialComplex,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalanceReport {
    pub field: String,
    pub input: ComplexSpec,
    pub f_vector: Vec<u64>,
    pub h_vector: Vec<i64>,
    pub height: usize,
    pub stanley_reisner: IdealSpec,
    /// `J'` in `height` variables.
    pub artinian_ideal: IdealSpec,
    pub polarized_ideal: IdealSpec,
    pub gamma: ComplexSpec,
    pub gamma_f_vector: Vec<u64>,
    pub gamma_h_vector: Vec<i64>,
    /// Color of each vertex of `Γ`, 1-based.
    pub coloring: Vec<usize>,
    /// `classes[i]`: vertices of `Γ` (1-based) polarizing variable `i + 1` of `J'`.
    pub classes: Vec<Vec<usize>>,
    /// Cone vertices of `Γ` (1-based).
    pub cone_vertices: Vec<usize>,
    pub cm_input: CmCertificate,
    pub cm_gamma: CmCertificate,
    pub h_equal: bool,
    pub balanced: bool,
}

impl BalanceReport {
    pub fn gamma_complex(&self) -> Result<SimplicialComplex> {
        self.gamma.to_complex()
    }
}

fn not_cm(cert: &CmCertificate) -> Error {
    let f = &cert.failures[0];
    Error::NotCohenMacaulay {
        field: cert.field.clone(),
        face: f.face.iter().map(|v| v + 1).collect(),
        degree: f.degree.max(0) as usize,
    }
}

pub fn balance(complex: &SimplicialComplex, field: Field) -> Result<BalanceReport> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if let Some(face) = complex.flag_violation() {
        let size = face.len();
        return Err(Error::NotFlag(face.iter().map(|v| v + 1).collect(), size));
    }
    let cm_input = is_cohen_macaulay(complex, field)?;
    if !cm_input.cohen_macaulay {
        return Err(not_cm(&cm_input));
    }

    let sr = complex.stanley_reisner()?;
    let g = if sr.is_zero() { 0 } else { height(&sr)? };
    let h = complex.h_vector()?;
    let h_poly = h_polynomial(&h);
    let values: Vec<u64> = h_poly
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            u64::try_from(v).map_err(|_| Error::Unattainable {
                degree: k,
                reason: format!("negative h-vector entry {v}"),
            })
        })
        .collect::<Result<_>>()?;

    let bound = values.len() + 1;
    let target = LppTarget::squares(g, g, HilbertData::artinian(g, &values, bound))?;
    let lpp = construct_lex_plus_powers(&target, bound)?;
    if !lpp.series_equal {
        return Err(Error::Unattainable {
            degree: bound,
            reason: "h-vector not reached within the degree bound".into(),
        });
    }
    let artinian = lpp.ideal;
    let pol = polarize(&artinian);
    let raw = SimplicialComplex::of_ideal(&pol.ideal)?;

    // drop polarization variables lying in no face
    let used = raw.used_vertices();
    let mut relabel = vec![usize::MAX; pol.ideal.n()];
    let mut classes: Vec<Vec<usize>> = Vec::with_capacity(g);
    let mut coloring = Vec::new();
    let mut next = 0;
    for class in &pol.classes {
        let kept: Vec<usize> = class.iter().copied().filter(|&v| used >> v & 1 == 1).collect();
        if !kept.is_empty() {
            let color = coloring.iter().max().map_or(1, |c| c + 1);
            for &v in &kept {
                relabel[v] = next;
                next += 1;
                coloring.push(color);
            }
        }
        classes.push(kept.iter().map(|&v| relabel[v] + 1).collect());
    }
    let facets = raw
        .facets()
        .into_iter()
        .map(|f| f.into_iter().map(|v| relabel[v]).collect())
        .collect();
    let mut gamma = SimplicialComplex::new(next, facets)?;

    let d_input = (complex.dim().unwrap() + 1) as usize;
    let d_gamma = (gamma.dim().unwrap() + 1) as usize;
    let mut cone_vertices = Vec::new();
    if d_gamma < d_input {
        let extra = d_input - d_gamma;
        let first_color = coloring.iter().max().map_or(1, |c| c + 1);
        for k in 0..extra {
            cone_vertices.push(next + k + 1);
            coloring.push(first_color + k);
        }
        gamma = gamma.join_simplex(extra)?;
    }

    let gamma_h = gamma.h_vector()?;
    let h_equal = h_polynomial(&gamma_h) == h_poly;
    let coloring = Coloring(coloring);
    let balanced = check_balanced(&gamma, Some(&coloring))?;
    let cm_gamma = is_cohen_macaulay(&gamma, field)?;

    if !h_equal {
        return Err(Error::CertificateFailed(format!(
            "h-vector of the balanced complex is {gamma_h:?}, expected {h:?}"
        )));
    }
    if let BalanceCheck::Failed(why) = balanced {
        return Err(Error::CertificateFailed(format!("coloring is not balanced: {why}")));
    }
    if !cm_gamma.cohen_macaulay {
        return Err(Error::CertificateFailed(format!(
            "balanced complex is not Cohen-Macaulay: {}",
            not_cm(&cm_gamma)
        )));
    }

    Ok(BalanceReport {
        field: field.tag(),
        input: complex.to_spec(),
        f_vector: complex.f_vector()?,
        h_vector: h,
        height: g,
        stanley_reisner: sr.to_spec(),
        artinian_ideal: artinian.to_spec(),
        polarized_ideal: pol.ideal.to_spec(),
        gamma_f_vector: gamma.f_vector()?,
        gamma_h_vector: gamma_h,
        gamma: gamma.to_spec(),
        coloring: coloring.0,
        classes,
        cone_vertices,
        cm_input,
        cm_gamma,
        h_equal,
        balanced: true,
    })
}
