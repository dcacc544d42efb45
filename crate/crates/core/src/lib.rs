//! Exact tools for quadratic monomial ideals and flag simplicial complexes.
//!
//! * [`regseq`] finds and certifies a regular sequence `x_i * l_i` of
//!   products of linear forms inside a quadratic monomial ideal.
//! * [`lpp`] builds the lex-plus-powers ideal containing `x_1^2, ..., x_g^2`
//!   with the same Hilbert function.
//! * [`pipeline`] turns a Cohen–Macaulay flag complex into a Cohen–Macaulay
//!   balanced complex with the same h-vector.
//!
//! Every result is checked by exact computation over `Q` or a prime field.

pub mod error;
pub mod field;
pub mod hilbert;
pub mod linear;
pub mod lpp;
pub mod monomial;
pub mod pipeline;
pub mod polarize;
pub mod primes;
pub mod regseq;
pub mod report;
pub mod simplicial;

pub use error::{Error, Result};
pub use field::Field;
pub use hilbert::{hilbert_function, hilbert_series_equal, HilbertData};
pub use lpp::{construct_lex_plus_powers, egh_for_quadratic, LppResult, LppTarget};
pub use linear::{rank_of_forms, LinearForm, ProductOfLinearForms};
pub use monomial::{IdealSpec, Monomial, MonomialIdeal};
pub use pipeline::{balance, BalanceReport};
pub use polarize::{polarize, Polarization};
pub use primes::{height, minimal_primes};
pub use report::{verify_report, Report, Verification};
pub use simplicial::SimplicialComplex;
