//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//!
//! Run with `cargo test -p egh-core --test acceptance`.

mod common;

use std::time::{Duration, Instant};

use common::{
    brute_hilbert, graphs_up_to_iso, octahedron, oracle_homology, random_complex, random_ideal,
    random_quadratic, rng, OracleField,
};
use egh_core::linear::{LinearForm, ProductOfLinearForms};
use egh_core::lpp::{egh_for_quadratic, EghOptions};
use egh_core::primes::{height, smallest_minimal_prime};
use egh_core::regseq::{
    build_ga, check_certificate, decompose_degree_two, find_matching, find_regular_sequence,
    is_regular_sequence_of_products, MatchingOutcome, RegseqOptions, TransversalCheck,
};
use egh_core::report::{EghJson, RegseqReport, Report};
use egh_core::simplicial::{check_balanced, is_cohen_macaulay, reduced_homology_ranks, Coloring};
use egh_core::{balance, hilbert_function, hilbert_series_equal, Field, Monomial, MonomialIdeal, SimplicialComplex};
use rand::Rng;

struct Outcome {
    name: &'static str,
    failures: Vec<String>,
    elapsed: Duration,
    limit: Duration,
}

impl Outcome {
    fn passed(&self) -> bool {
        self.failures.is_empty() && self.elapsed <= self.limit
    }

    fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} {} ({:.2?}, limit {:.0?})",
            self.name, self.elapsed, self.limit
        );
        if self.elapsed > self.limit {
            line.push_str(" over time");
        }
        for f in self.failures.iter().take(5) {
            line.push_str(&format!("\n     {f}"));
        }
        line
    }
}

fn timed(name: &'static str, limit: Duration, run: impl FnOnce() -> Vec<String>) -> Outcome {
    let start = Instant::now();
    let failures = run();
    Outcome {
        name,
        failures,
        elapsed: start.elapsed(),
        limit,
    }
}

fn worked_example() -> Vec<String> {
    let ideal = MonomialIdeal::parse(3, &["x1^2*x2", "x2^2*x3", "x1*x3^2"]).unwrap();
    let gens = ideal.gens().to_vec();
    let mut failures = Vec::new();
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let pair: Vec<ProductOfLinearForms> = [&gens[a], &gens[b]]
            .iter()
            .map(|m| ProductOfLinearForms::from_monomial(m).unwrap())
            .collect();
        let shared = (0..3)
            .find(|&v| gens[a].exp(v) > 0 && gens[b].exp(v) > 0)
            .unwrap();
        let x = LinearForm::variable(3, shared);
        match is_regular_sequence_of_products(&pair, Field::Rationals).unwrap() {
            TransversalCheck::Dependent { forms, .. } if forms == vec![x.clone(), x] => {}
            other => failures.push(format!("({}, {}): {other:?}", gens[a], gens[b])),
        }
    }
    failures
}

/// Random quadratic ideals for the regular-sequence and lex-plus-squares sweep.
fn sweep_ideals() -> Vec<(MonomialIdeal, u64)> {
    let mut r = rng(2024);
    (0..500)
        .map(|_| {
            let n = r.gen_range(1..=8);
            let gens = r.gen_range(1..=12);
            let seed = r.gen();
            (random_quadratic(&mut rng(seed), n, gens), seed)
        })
        .collect()
}

fn regseq_and_lex(reports: &mut Vec<String>) -> Vec<String> {
    let mut failures = Vec::new();
    for (ideal, seed) in sweep_ideals() {
        let cert = match find_regular_sequence(&ideal, &RegseqOptions { seed, ..Default::default() }) {
            Ok(c) => c,
            Err(e) => {
                failures.push(format!("{ideal}: {e}"));
                continue;
            }
        };
        if let Err(e) = check_certificate(&cert) {
            failures.push(format!("{ideal}: {e}"));
        }
        if !is_regular_sequence_of_products(&cert.products(), Field::Rationals)
            .unwrap()
            .is_regular()
        {
            failures.push(format!("{ideal}: products are not a regular sequence"));
        }
        reports.push(Report::Regseq(RegseqReport::from_certificate(&cert)).to_json().unwrap());

        let options = EghOptions::default();
        let r = match egh_for_quadratic(&ideal, &options) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{ideal}: {e}"));
                continue;
            }
        };
        let j = &r.result.ideal;
        let squares = (0..r.height).all(|v| j.contains(&Monomial::from_pairs(ideal.n(), &[(v, 2)])));
        if !squares || !r.result.series_equal || !hilbert_series_equal(&ideal, j).unwrap() {
            failures.push(format!("{ideal}: lex-plus-squares ideal is wrong"));
        }
        reports.push(Report::Egh(EghJson::from_report(&r, &options)).to_json().unwrap());
    }
    failures
}

fn flag_complexes(reports: &mut Vec<String>) -> Vec<String> {
    let mut failures = Vec::new();
    let mut balanced = 0;
    for n in 1..=6 {
        for graph in graphs_up_to_iso(n) {
            let delta = SimplicialComplex::independence_complex(&graph).unwrap();
            if !is_cohen_macaulay(&delta, Field::Rationals).unwrap().cohen_macaulay {
                continue;
            }
            balanced += 1;
            let r = match balance(&delta, Field::Rationals) {
                Ok(r) => r,
                Err(e) => {
                    failures.push(format!("{graph:?}: {e}"));
                    continue;
                }
            };
            let gamma = r.gamma_complex().unwrap();
            let same_h = egh_core::simplicial::h_polynomial(&gamma.h_vector().unwrap())
                == egh_core::simplicial::h_polynomial(&delta.h_vector().unwrap());
            let colored = check_balanced(&gamma, Some(&Coloring(r.coloring.clone())))
                .unwrap()
                .is_balanced();
            let cm = is_cohen_macaulay(&gamma, Field::Rationals).unwrap().cohen_macaulay;
            if !(same_h && colored && cm) {
                failures.push(format!("{graph:?}: h {same_h}, balanced {colored}, CM {cm}"));
            }
            reports.push(Report::Balance(r).to_json().unwrap());
        }
    }
    if balanced == 0 {
        failures.push("no CM independence complexes found".into());
    }
    failures
}

fn octahedron_golden(reports: &mut Vec<String>) -> Vec<String> {
    let r = balance(&octahedron(), Field::Rationals).unwrap();
    let mut failures = Vec::new();
    if r.h_vector != vec![1, 3, 3, 1] {
        failures.push(format!("h = {:?}", r.h_vector));
    }
    if r.height != 3 {
        failures.push(format!("g = {}", r.height));
    }
    if r.artinian_ideal.generators != ["x1^2", "x2^2", "x3^2"] {
        failures.push(format!("J' = {:?}", r.artinian_ideal.generators));
    }
    if r.gamma_f_vector != vec![1, 6, 12, 8] {
        failures.push(format!("f(Gamma) = {:?}", r.gamma_f_vector));
    }
    reports.push(Report::Balance(r).to_json().unwrap());
    failures
}

fn oracles() -> Vec<String> {
    let mut failures = Vec::new();
    let mut r = rng(7);
    for _ in 0..200 {
        let n = r.gen_range(1..=5);
        let gens = r.gen_range(0..=6);
        let ideal = random_ideal(&mut r, n, gens, 3);
        let hf = hilbert_function(&ideal, 8);
        for d in 0..=8 {
            if hf.window[d] != brute_hilbert(&ideal, d as u32) {
                failures.push(format!("{ideal}: degree {d}"));
            }
        }
    }
    for _ in 0..100 {
        let v = r.gen_range(1..=7);
        let f = r.gen_range(1..=6);
        let c = random_complex(&mut r, v, f);
        for (field, oracle) in [(Field::Rationals, OracleField::Rationals), (Field::Prime(2), OracleField::Two)] {
            let h = reduced_homology_ranks(&c, field).unwrap();
            let ours: Vec<usize> = (-1..=c.dim().unwrap()).map(|i| h.betti(i)).collect();
            if ours != oracle_homology(&c, oracle) {
                failures.push(format!("{:?} over {field}", c.facets()));
            }
        }
    }
    failures
}

fn hall_guarantee() -> Vec<String> {
    let mut failures = Vec::new();
    let mut r = rng(11);
    let mut kept = 0;
    while kept < 200 {
        let n = r.gen_range(2..=8);
        let gens = r.gen_range(1..=12);
        let ideal = random_quadratic(&mut r, n, gens);
        if height(&ideal).unwrap() > 6 {
            continue;
        }
        kept += 1;
        let prime = smallest_minimal_prime(&ideal).unwrap();
        let dec = decompose_degree_two(&ideal, &prime).unwrap();
        for a in 0..1u64 << dec.g() {
            if let MatchingOutcome::Deficient { .. } = find_matching(&build_ga(&dec, a)) {
                failures.push(format!("{ideal}: subset mask {a:#b}"));
            }
        }
    }
    failures
}

fn main() {
    let mut first = Vec::new();
    let mut outcomes = vec![
        timed("1 worked example: every generator pair is dependent", Duration::from_secs(1), worked_example),
        timed("2 regular sequences and lex-plus-squares on 500 ideals", Duration::from_secs(300), || {
            regseq_and_lex(&mut first)
        }),
        timed("3 balancing CM flag complexes on <= 6 vertices", Duration::from_secs(600), || {
            flag_complexes(&mut first)
        }),
        timed("4 octahedron golden values", Duration::from_secs(60), || octahedron_golden(&mut first)),
        timed("5 Hilbert and homology oracles", Duration::from_secs(120), oracles),
        timed("6 Hall condition on 200 ideals", Duration::from_secs(120), hall_guarantee),
    ];
    outcomes.push(timed("7 repeated runs give byte-identical JSON", Duration::from_secs(900), || {
        let mut second = Vec::new();
        regseq_and_lex(&mut second);
        flag_complexes(&mut second);
        octahedron_golden(&mut second);
        if second.len() != first.len() {
            return vec![format!("{} reports, then {}", first.len(), second.len())];
        }
        first
            .iter()
            .zip(&second)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(k, (a, _))| format!("report {k} differs: {}", &a[..a.len().min(80)]))
            .collect()
    }));
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    println!("{} of {} criteria passed", outcomes.len() - failed, outcomes.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
