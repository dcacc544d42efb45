//! Cohen–Macaulay test via Reisner's criterion.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::primes::mask_to_vec;

use super::homology::homology_of_faces;
use super::SimplicialComplex;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkFailure {
    /// 0-based vertices of the face whose link fails.
    pub face: Vec<usize>,
    /// Degree `i < dim link` with `β̃_i(link) != 0`.
    pub degree: isize,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmCertificate {
    pub field: String,
    pub cohen_macaulay: bool,
    pub faces_checked: usize,
    pub failures: Vec<LinkFailure>,
}

/// Reisner's criterion: `β̃_i(lk F) = 0` for every face `F` and `i < dim lk F`.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: Field) -> Result<CmCertificate> {
    reisner(complex, field, false)
}

/// Like [`is_cohen_macaulay`] but stops at the first failing link.
pub fn first_cm_failure(complex: &SimplicialComplex, field: Field) -> Result<CmCertificate> {
    reisner(complex, field, true)
}

fn reisner(complex: &SimplicialComplex, field: Field, stop_early: bool) -> Result<CmCertificate> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let mut failures = Vec::new();
    let mut checked = 0;
    for face in complex.faces() {
        checked += 1;
        let link = complex.link(face);
        let dim = link.dim().expect("link of a face is nonvoid");
        if dim <= 0 {
            // only β̃_{-1} to check, which vanishes for nonempty links
            continue;
        }
        let homology = homology_of_faces(&link.faces(), field);
        for i in -1..dim {
            let rank = homology.betti(i);
            if rank != 0 {
                failures.push(LinkFailure {
                    face: mask_to_vec(face),
                    degree: i,
                    rank,
                });
            }
        }
        if stop_early && !failures.is_empty() {
            break;
        }
    }
    Ok(CmCertificate {
        field: field.tag(),
        cohen_macaulay: failures.is_empty(),
        faces_checked: checked,
        failures,
    })
}
