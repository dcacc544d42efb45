//! JSON reports and their verification.
//!
//! Reports are serialized through `serde_json::Value`, whose maps keep keys
//! sorted, so identical inputs give byte-identical output. `verify_report`
//! rechecks a report from its JSON alone: the mathematical certificates are
//! checked first, then the whole report is recomputed and compared.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hilbert::{hilbert_function, hilbert_series_equal};
use crate::linear::LinearForm;
use crate::lpp::{egh_for_quadratic, EghOptions, EghReport};
use crate::monomial::{IdealSpec, Monomial, MonomialIdeal};
use crate::pipeline::{balance, BalanceReport};
use crate::primes::{height, minimal_primes};
use crate::regseq::{
    find_regular_sequence, verify_condition_star, RegseqOptions, RegularSequenceCertificate,
    StarOutcome,
};
use crate::simplicial::{
    check_balanced, depth_and_pd, h_polynomial, is_cohen_macaulay, reduced_homology_ranks,
    BalanceCheck, CmCertificate, Coloring, ComplexSpec, SimplicialComplex,
};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Report {
    Analyze(AnalyzeReport),
    Regseq(RegseqReport),
    Egh(EghJson),
    Balance(BalanceReport),
}

impl Report {
    pub fn kind(&self) -> &'static str {
        match self {
            Report::Analyze(_) => "analyze",
            Report::Regseq(_) => "regseq",
            Report::Egh(_) => "egh",
            Report::Balance(_) => "balance",
        }
    }

    /// Compact JSON with sorted keys.
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&serde_json::to_value(self)?)?)
    }

    pub fn to_json_pretty(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&serde_json::to_value(self)?)?)
    }

    pub fn from_json(text: &str) -> Result<Report> {
        Ok(serde_json::from_str(text)?)
    }
}

// ---------------------------------------------------------------- regseq

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    /// 1-based prime variable multiplying the form.
    pub times_variable: usize,
    /// Nonzero coefficients keyed by variable name; integers are numbers,
    /// other rationals are `"p/q"` strings.
    pub coefficients: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegseqReport {
    pub ideal: IdealSpec,
    pub prime: Vec<usize>,
    pub forms: Vec<FormJson>,
    pub products: Vec<String>,
    pub seed: u64,
    pub attempts: u32,
    pub fallback: bool,
    pub field: String,
    pub subsets_checked: u64,
}

fn coefficient_json(c: &BigRational) -> Value {
    if c.is_integer() {
        if let Some(v) = c.to_integer().to_i64() {
            return Value::from(v);
        }
    }
    Value::from(c.to_string())
}

fn coefficient_from_json(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(BigInt::from(i)))
            .ok_or_else(|| Error::InvalidInput(format!("coefficient {n} is not an integer"))),
        Value::String(s) => BigRational::from_str(s)
            .map_err(|_| Error::InvalidInput(format!("bad rational coefficient {s:?}"))),
        other => Err(Error::InvalidInput(format!("bad coefficient {other}"))),
    }
}

fn variable_index(name: &str, n: usize) -> Result<usize> {
    let m = Monomial::parse(name, n)?;
    match m.factors().as_slice() {
        [v] => Ok(*v),
        _ => Err(Error::InvalidInput(format!("{name:?} is not a single variable"))),
    }
}

impl RegseqReport {
    pub fn from_certificate(cert: &RegularSequenceCertificate) -> Self {
        let forms = cert
            .prime
            .iter()
            .zip(&cert.forms)
            .map(|(&p, l)| FormJson {
                times_variable: p + 1,
                coefficients: l
                    .coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (format!("x{}", i + 1), coefficient_json(c)))
                    .collect(),
            })
            .collect();
        RegseqReport {
            ideal: cert.ideal.to_spec(),
            prime: cert.prime.iter().map(|p| p + 1).collect(),
            forms,
            products: cert.products().iter().map(|p| p.to_string()).collect(),
            seed: cert.seed,
            attempts: cert.attempts,
            fallback: cert.fallback,
            field: cert.field.tag(),
            subsets_checked: cert.subsets_checked,
        }
    }

    pub fn to_certificate(&self) -> Result<RegularSequenceCertificate> {
        let ideal = self.ideal.to_ideal()?;
        let n = ideal.n();
        let prime = self
            .prime
            .iter()
            .map(|&p| {
                if (1..=n).contains(&p) {
                    Ok(p - 1)
                } else {
                    Err(Error::InvalidInput(format!("prime variable {p} outside 1..={n}")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if self.forms.len() != prime.len() {
            return Err(Error::InvalidInput(format!(
                "{} forms for a prime of size {}",
                self.forms.len(),
                prime.len()
            )));
        }
        let mut forms = Vec::with_capacity(prime.len());
        for (f, &p) in self.forms.iter().zip(&prime) {
            if f.times_variable != p + 1 {
                return Err(Error::InvalidInput(format!(
                    "form multiplies x{} but the prime lists x{}",
                    f.times_variable,
                    p + 1
                )));
            }
            let mut coeffs = vec![BigRational::zero(); n];
            for (name, value) in &f.coefficients {
                coeffs[variable_index(name, n)?] = coefficient_from_json(value)?;
            }
            forms.push(LinearForm::new(coeffs));
        }
        Ok(RegularSequenceCertificate {
            ideal,
            prime,
            forms,
            subsets_checked: self.subsets_checked,
            field: Field::from_str(&self.field)?,
            seed: self.seed,
            attempts: self.attempts,
            fallback: self.fallback,
        })
    }
}

// ---------------------------------------------------------------- egh

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EghJson {
    pub ideal: IdealSpec,
    pub height: usize,
    /// Number of squares `x_1^2, ..., x_g^2` in the result.
    pub powers: usize,
    pub generators: Vec<String>,
    pub series_equal: bool,
    pub numerator: Vec<i64>,
    pub hilbert_window: Vec<u64>,
    /// Window `D` of `hilbert_window`.
    pub degree_bound: usize,
    /// Explicit construction limit, if one was given.
    pub max_degree: Option<usize>,
    pub picked_per_degree: Vec<usize>,
    pub pd_source: usize,
    pub pd_result: usize,
    pub pd_equal: bool,
    pub field: String,
    pub budget: usize,
}

impl EghJson {
    pub fn from_report(r: &EghReport, options: &EghOptions) -> Self {
        let bound = r.window;
        let hf = hilbert_function(&r.source, bound);
        EghJson {
            ideal: r.source.to_spec(),
            height: r.height,
            powers: r.result.powers,
            generators: r.result.ideal.to_spec().generators,
            series_equal: r.result.series_equal,
            numerator: hf.numerator,
            hilbert_window: hf.window,
            degree_bound: bound,
            max_degree: options.max_degree,
            picked_per_degree: r.result.picked_per_degree.clone(),
            pd_source: r.pd_source,
            pd_result: r.pd_result,
            pd_equal: r.pd_matches(),
            field: options.field.tag(),
            budget: options.budget,
        }
    }

    pub fn options(&self) -> Result<EghOptions> {
        Ok(EghOptions {
            field: Field::from_str(&self.field)?,
            budget: self.budget,
            max_degree: self.max_degree,
        })
    }
}

// ---------------------------------------------------------------- analyze

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealAnalysis {
    pub ideal: IdealSpec,
    /// 1-based variables of each minimal prime.
    pub minimal_primes: Vec<Vec<usize>>,
    pub height: usize,
    pub numerator: Vec<i64>,
    pub hilbert_window: Vec<u64>,
    pub depth: usize,
    pub projective_dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexAnalysis {
    pub complex: ComplexSpec,
    pub dimension: isize,
    pub f_vector: Vec<u64>,
    pub h_vector: Vec<i64>,
    pub pure: bool,
    pub flag: bool,
    /// 1-based minimal non-face of size other than 2.
    pub flag_violation: Option<Vec<usize>>,
    /// `β̃_{-1}, β̃_0, ..., β̃_dim`.
    pub reduced_homology: Vec<usize>,
    /// Failing faces are 1-based.
    pub cohen_macaulay: CmCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub field: String,
    pub budget: usize,
    pub ideal: IdealAnalysis,
    /// Present for complexes and squarefree ideals.
    pub complex: Option<ComplexAnalysis>,
}

/// Summary of a monomial ideal, plus its Stanley–Reisner complex when
/// squarefree.
pub fn analyze_ideal(ideal: &MonomialIdeal, field: Field, budget: usize) -> Result<AnalyzeReport> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let complex = if ideal.is_squarefree() {
        Some(analyze_complex_only(&SimplicialComplex::of_ideal(ideal)?, field)?)
    } else {
        None
    };
    Ok(AnalyzeReport {
        field: field.tag(),
        budget,
        ideal: ideal_only(ideal, field, budget)?,
        complex,
    })
}

pub fn analyze_complex(complex: &SimplicialComplex, field: Field, budget: usize) -> Result<AnalyzeReport> {
    let sr = complex.stanley_reisner()?;
    if sr.is_unit() {
        return Err(Error::VoidComplex);
    }
    Ok(AnalyzeReport {
        field: field.tag(),
        budget,
        ideal: ideal_only(&sr, field, budget)?,
        complex: Some(analyze_complex_only(complex, field)?),
    })
}

fn ideal_only(ideal: &MonomialIdeal, field: Field, budget: usize) -> Result<IdealAnalysis> {
    let primes = if ideal.is_zero() {
        vec![vec![]]
    } else {
        minimal_primes(ideal)?
            .into_iter()
            .map(|p| p.into_iter().map(|v| v + 1).collect())
            .collect()
    };
    let g = if ideal.is_zero() { 0 } else { height(ideal)? };
    let hf = hilbert_function(ideal, crate::hilbert::default_degree_bound(ideal));
    let betti = depth_and_pd(ideal, field, budget)?;
    Ok(IdealAnalysis {
        ideal: ideal.to_spec(),
        minimal_primes: primes,
        height: g,
        numerator: hf.numerator,
        hilbert_window: hf.window,
        depth: betti.depth,
        projective_dimension: betti.projective_dimension,
    })
}

fn analyze_complex_only(complex: &SimplicialComplex, field: Field) -> Result<ComplexAnalysis> {
    let dim = complex.dim().ok_or(Error::VoidComplex)?;
    let violation = complex.flag_violation();
    let mut cm = is_cohen_macaulay(complex, field)?;
    for f in &mut cm.failures {
        for v in &mut f.face {
            *v += 1;
        }
    }
    let homology = reduced_homology_ranks(complex, field)?;
    Ok(ComplexAnalysis {
        complex: complex.to_spec(),
        dimension: dim,
        f_vector: complex.f_vector()?,
        h_vector: complex.h_vector()?,
        pure: complex.is_pure(),
        flag: violation.is_none(),
        flag_violation: violation.map(|f| f.into_iter().map(|v| v + 1).collect()),
        reduced_homology: (-1..=dim).map(|i| homology.betti(i)).collect(),
        cohen_macaulay: cm,
    })
}

// ---------------------------------------------------------------- verify

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub kind: String,
    pub valid: bool,
    pub reason: Option<String>,
    /// 1-based prime positions of the first subset failing the rank check.
    pub failing_subset: Option<Vec<usize>>,
}

impl Verification {
    fn ok(kind: &str) -> Self {
        Verification {
            kind: kind.into(),
            valid: true,
            reason: None,
            failing_subset: None,
        }
    }

    fn bad(kind: &str, reason: impl Into<String>) -> Self {
        Verification {
            kind: kind.into(),
            valid: false,
            reason: Some(reason.into()),
            failing_subset: None,
        }
    }
}

/// Recheck a report given as JSON.
///
/// Malformed input is an `Err`; a well-formed report whose claims do not
/// hold yields `valid: false`.
pub fn verify_report(text: &str) -> Result<Verification> {
    let value: Value = serde_json::from_str(text)?;
    let report: Report = serde_json::from_value(value.clone())?;
    let kind = report.kind();
    let checked = match &report {
        Report::Regseq(r) => verify_regseq(r)?,
        Report::Egh(r) => verify_egh(r)?,
        Report::Balance(r) => verify_balance(r)?,
        Report::Analyze(_) => None,
    };
    if let Some(v) = checked {
        return Ok(v);
    }
    let recomputed = match recompute(&report) {
        Ok(r) => r,
        Err(Error::BudgetExceeded(m)) => return Err(Error::BudgetExceeded(m)),
        Err(e) => return Ok(Verification::bad(kind, format!("recomputation failed: {e}"))),
    };
    let fresh = serde_json::to_value(&recomputed)?;
    if fresh != value {
        let field = first_difference(&value, &fresh).unwrap_or_default();
        return Ok(Verification::bad(
            kind,
            format!("report differs from recomputation at {field}"),
        ));
    }
    Ok(Verification::ok(kind))
}

fn recompute(report: &Report) -> Result<Report> {
    Ok(match report {
        Report::Regseq(r) => {
            let cert = r.to_certificate()?;
            let options = RegseqOptions {
                seed: cert.seed,
                retries: cert.attempts.saturating_sub(1),
                field: cert.field,
                prime: Some(cert.prime.clone()),
                deterministic: cert.attempts == 0,
            };
            Report::Regseq(RegseqReport::from_certificate(&find_regular_sequence(
                &cert.ideal,
                &options,
            )?))
        }
        Report::Egh(r) => {
            let options = r.options()?;
            let fresh = egh_for_quadratic(&r.ideal.to_ideal()?, &options)?;
            Report::Egh(EghJson::from_report(&fresh, &options))
        }
        Report::Balance(r) => {
            Report::Balance(balance(&r.input.to_complex()?, Field::from_str(&r.field)?)?)
        }
        Report::Analyze(r) => {
            let field = Field::from_str(&r.field)?;
            match &r.complex {
                Some(c) if r.ideal.ideal == c.complex.to_complex()?.stanley_reisner()?.to_spec() => {
                    Report::Analyze(analyze_complex(&c.complex.to_complex()?, field, r.budget)?)
                }
                _ => Report::Analyze(analyze_ideal(&r.ideal.ideal.to_ideal()?, field, r.budget)?),
            }
        }
    })
}

fn first_difference(a: &Value, b: &Value) -> Option<String> {
    match (a, b) {
        (Value::Object(x), Value::Object(y)) => {
            let keys: std::collections::BTreeSet<&String> = x.keys().chain(y.keys()).collect();
            for k in keys {
                match (x.get(k), y.get(k)) {
                    (Some(u), Some(v)) if u == v => continue,
                    (Some(u), Some(v)) => {
                        let inner = first_difference(u, v);
                        return Some(match inner {
                            Some(rest) if !rest.is_empty() => format!("{k}.{rest}"),
                            _ => k.clone(),
                        });
                    }
                    _ => return Some(k.clone()),
                }
            }
            None
        }
        (Value::Array(x), Value::Array(y)) => {
            if x.len() != y.len() {
                return Some(String::new());
            }
            x.iter().zip(y).enumerate().find_map(|(i, (u, v))| {
                if u == v {
                    None
                } else {
                    Some(match first_difference(u, v) {
                        Some(rest) if !rest.is_empty() => format!("{i}.{rest}"),
                        _ => i.to_string(),
                    })
                }
            })
        }
        _ if a == b => None,
        _ => Some(String::new()),
    }
}

fn verify_regseq(r: &RegseqReport) -> Result<Option<Verification>> {
    let kind = "regseq";
    let cert = match r.to_certificate() {
        Ok(c) => c,
        Err(e @ Error::Parse { .. }) => return Err(e),
        Err(e) => return Ok(Some(Verification::bad(kind, e.to_string()))),
    };
    let n = cert.ideal.n();
    match verify_condition_star(n, &cert.prime, &cert.forms, cert.field)? {
        StarOutcome::Failed { subset } => {
            let subset: Vec<usize> = subset.into_iter().map(|i| i + 1).collect();
            let mut v = Verification::bad(
                kind,
                format!("forms lose rank for A = {subset:?}"),
            );
            v.failing_subset = Some(subset);
            return Ok(Some(v));
        }
        StarOutcome::Certified { subsets_checked } if subsets_checked != cert.subsets_checked => {
            return Ok(Some(Verification::bad(
                kind,
                format!(
                    "subsets_checked is {} but there are {subsets_checked} subsets",
                    cert.subsets_checked
                ),
            )));
        }
        StarOutcome::Certified { .. } => {}
    }
    for (&p, l) in cert.prime.iter().zip(&cert.forms) {
        for v in l.support() {
            let m = Monomial::from_pairs(n, &[(p, 1), (v, 1)]);
            if !cert.ideal.contains(&m) {
                return Ok(Some(Verification::bad(kind, format!("{m} is not in the ideal"))));
            }
        }
        if l.is_zero() {
            return Ok(Some(Verification::bad(kind, format!("form for x{} is zero", p + 1))));
        }
    }
    if cert.ideal.is_zero() || cert.ideal.is_unit() || cert.prime.len() != height(&cert.ideal)? {
        return Ok(Some(Verification::bad(kind, "prime size differs from the height")));
    }
    Ok(None)
}

fn verify_egh(r: &EghJson) -> Result<Option<Verification>> {
    let kind = "egh";
    let source = r.ideal.to_ideal()?;
    let result = MonomialIdeal::parse(source.n(), &r.generators)?;
    let g = if source.is_zero() { 0 } else { height(&source)? };
    if r.height != g || r.powers != g {
        return Ok(Some(Verification::bad(kind, format!("height is {g}"))));
    }
    for i in 0..g {
        let square = Monomial::from_pairs(source.n(), &[(i, 2)]);
        if !result.contains(&square) {
            return Ok(Some(Verification::bad(kind, format!("{square} is not in the result"))));
        }
    }
    let equal = hilbert_series_equal(&source, &result)?;
    if equal != r.series_equal || !equal {
        return Ok(Some(Verification::bad(
            kind,
            format!("Hilbert series equality is {equal}"),
        )));
    }
    Ok(None)
}

fn verify_balance(r: &BalanceReport) -> Result<Option<Verification>> {
    let kind = "balance";
    let field = Field::from_str(&r.field)?;
    let input = r.input.to_complex()?;
    let gamma = r.gamma.to_complex()?;
    if gamma.is_void() {
        return Ok(Some(Verification::bad(kind, "balanced complex is void")));
    }
    let h_in = h_polynomial(&input.h_vector()?);
    let h_out = h_polynomial(&gamma.h_vector()?);
    if h_in != h_out {
        return Ok(Some(Verification::bad(
            kind,
            format!("h-vectors differ: {h_in:?} vs {h_out:?}"),
        )));
    }
    if let BalanceCheck::Failed(why) = check_balanced(&gamma, Some(&Coloring(r.coloring.clone())))? {
        return Ok(Some(Verification::bad(kind, why)));
    }
    let cm = is_cohen_macaulay(&gamma, field)?;
    if !cm.cohen_macaulay {
        return Ok(Some(Verification::bad(kind, "balanced complex is not Cohen-Macaulay")));
    }
    Ok(None)
}
