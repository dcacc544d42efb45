//! `egh`: regular sequences, lex-plus-powers ideals and balanced complexes
//! for quadratic monomial ideals.
//!
//! Exit status: 0 success, 1 verified negative, 2 input error,
//! 3 budget exceeded.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use egh_core::lpp::{egh_for_quadratic, EghOptions};
use egh_core::regseq::{find_regular_sequence, RegseqOptions};
use egh_core::report::{analyze_complex, analyze_ideal, EghJson, RegseqReport};
use egh_core::simplicial::{ComplexSpec, GraphSpec, DEFAULT_VARIABLE_BUDGET};
use egh_core::{
    balance, verify_report, Error, Field, IdealSpec, MonomialIdeal, Report, SimplicialComplex,
};
use serde_json::Value;

#[derive(Parser)]
#[command(name = "egh", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Coefficient field: `q` or `p:<prime>`.
    #[arg(long, global = true, default_value = "q")]
    field: String,
    /// Largest number of variables accepted by `analyze` and `egh`.
    #[arg(long, global = true, default_value_t = DEFAULT_VARIABLE_BUDGET)]
    budget: usize,
    /// Emit compact JSON on stdout (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Print a summary table on stdout; JSON goes to `--out` or stderr.
    #[arg(long, global = true)]
    pretty: bool,
    /// Write the JSON report to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// f/h-vectors, height, flagness, Cohen-Macaulay certificate.
    Analyze {
        /// JSON input file; read from stdin when omitted.
        input: Option<PathBuf>,
    },
    /// Certified regular sequence of products of linear forms.
    Regseq {
        /// JSON input file; read from stdin when omitted.
        input: Option<PathBuf>,
        /// Seed for the coefficient sampler.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Extra draws before falling back to the deterministic search.
        #[arg(long, default_value_t = 8)]
        retries: u32,
        /// Minimal prime as 1-based variables, e.g. `1,3`.
        #[arg(long, value_delimiter = ',')]
        prime: Option<Vec<usize>>,
        /// Skip sampling and use the matching-guided construction.
        #[arg(long)]
        deterministic: bool,
    },
    /// Lex-plus-squares ideal with the same Hilbert function.
    Egh {
        /// JSON input file; read from stdin when omitted.
        input: Option<PathBuf>,
        /// Last degree allowed to receive lex generators [default: until the series agree]
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Balanced Cohen-Macaulay complex with the same h-vector.
    Balance {
        /// JSON input file; read from stdin when omitted.
        input: Option<PathBuf>,
    },
    /// Recheck a report produced by another subcommand.
    Verify {
        /// JSON input file; read from stdin when omitted.
        input: Option<PathBuf>,
    },
}

enum Input {
    Ideal(MonomialIdeal),
    Complex(SimplicialComplex),
    Graph(SimplicialComplex, MonomialIdeal),
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Error> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text = fs::read_to_string(p)
                .map_err(|e| Error::InvalidInput(format!("{}: {e}", p.display())))?
        }
        None => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::InvalidInput(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn parse_input(text: &str) -> Result<Input, Error> {
    let value: Value = serde_json::from_str(text)?;
    let has = |k: &str| value.get(k).is_some();
    if has("facets") {
        let spec: ComplexSpec = serde_json::from_value(value)?;
        Ok(Input::Complex(spec.to_complex()?))
    } else if has("edges") {
        let graph = serde_json::from_value::<GraphSpec>(value)?.to_graph()?;
        Ok(Input::Graph(
            SimplicialComplex::independence_complex(&graph)?,
            graph.edge_ideal()?,
        ))
    } else if has("generators") {
        let spec: IdealSpec = serde_json::from_value(value)?;
        Ok(Input::Ideal(spec.to_ideal()?))
    } else {
        Err(Error::InvalidInput(
            "expected an object with \"facets\", \"edges\" or \"generators\"".into(),
        ))
    }
}

fn as_ideal(input: Input) -> Result<MonomialIdeal, Error> {
    match input {
        Input::Ideal(i) | Input::Graph(_, i) => Ok(i),
        Input::Complex(c) => c.stanley_reisner(),
    }
}

fn as_complex(input: Input) -> Result<SimplicialComplex, Error> {
    match input {
        Input::Complex(c) | Input::Graph(c, _) => Ok(c),
        Input::Ideal(i) => SimplicialComplex::of_ideal(&i),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded(_) => 3,
        Error::NotCohenMacaulay { .. } | Error::Unattainable { .. } | Error::CertificateFailed(_) => 1,
        _ => 2,
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    let field = Field::from_str(&cli.common.field)?;
    let budget = cli.common.budget;
    let (report, code) = match &cli.command {
        Command::Analyze { input } => {
            let report = match parse_input(&read_input(input)?)? {
                Input::Ideal(i) => analyze_ideal(&i, field, budget)?,
                Input::Complex(c) | Input::Graph(c, _) => analyze_complex(&c, field, budget)?,
            };
            (Report::Analyze(report), 0)
        }
        Command::Regseq {
            input,
            seed,
            retries,
            prime,
            deterministic,
        } => {
            let ideal = as_ideal(parse_input(&read_input(input)?)?)?;
            let prime = match prime {
                Some(p) if p.iter().any(|&v| v == 0 || v > ideal.n()) => {
                    return Err(Error::InvalidInput(format!(
                        "prime variables must lie in 1..={}",
                        ideal.n()
                    )))
                }
                Some(p) => Some(p.iter().map(|v| v - 1).collect()),
                None => None,
            };
            let options = RegseqOptions {
                seed: *seed,
                retries: *retries,
                field,
                prime,
                deterministic: *deterministic,
            };
            let cert = find_regular_sequence(&ideal, &options)?;
            (Report::Regseq(RegseqReport::from_certificate(&cert)), 0)
        }
        Command::Egh { input, max_degree } => {
            let ideal = as_ideal(parse_input(&read_input(input)?)?)?;
            let options = EghOptions {
                field,
                budget,
                max_degree: *max_degree,
            };
            let r = egh_for_quadratic(&ideal, &options)?;
            (Report::Egh(EghJson::from_report(&r, &options)), 0)
        }
        Command::Balance { input } => {
            let complex = as_complex(parse_input(&read_input(input)?)?)?;
            (Report::Balance(balance(&complex, field)?), 0)
        }
        Command::Verify { input } => {
            let v = verify_report(&read_input(input)?)?;
            let code = if v.valid { 0 } else { 1 };
            let text = serde_json::to_string(&serde_json::to_value(&v)?)?;
            emit(cli, &text, &verification_table(&v))?;
            return Ok(code);
        }
    };
    let text = report.to_json()?;
    emit(cli, &text, &summary_table(&report))?;
    Ok(code)
}

fn emit(cli: &Cli, json: &str, table: &str) -> Result<(), Error> {
    if let Some(path) = &cli.common.out {
        fs::write(path, format!("{json}\n"))
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    }
    if cli.common.pretty {
        print!("{table}");
        if cli.common.out.is_none() {
            eprintln!("{json}");
        }
    } else if cli.common.out.is_none() {
        println!("{json}");
    }
    Ok(())
}

fn row(out: &mut String, key: &str, value: impl std::fmt::Display) {
    out.push_str(&format!("{key:<22}{value}\n"));
}

fn list<T: std::fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn summary_table(report: &Report) -> String {
    let mut out = String::new();
    row(&mut out, "report", report.kind());
    match report {
        Report::Analyze(a) => {
            row(&mut out, "ideal", format!("({})", a.ideal.ideal.generators.join(", ")));
            row(&mut out, "height", a.ideal.height);
            row(&mut out, "pd(S/I)", a.ideal.projective_dimension);
            if let Some(c) = &a.complex {
                row(&mut out, "dimension", c.dimension);
                row(&mut out, "f-vector", list(&c.f_vector));
                row(&mut out, "h-vector", list(&c.h_vector));
                row(&mut out, "flag", c.flag);
                row(
                    &mut out,
                    "Cohen-Macaulay",
                    format!("{} over {}", c.cohen_macaulay.cohen_macaulay, a.field),
                );
            }
        }
        Report::Regseq(r) => {
            row(&mut out, "prime", list(&r.prime));
            for p in &r.products {
                row(&mut out, "product", p);
            }
            row(&mut out, "subsets checked", r.subsets_checked);
            row(&mut out, "fallback", r.fallback);
        }
        Report::Egh(e) => {
            row(&mut out, "height", e.height);
            row(&mut out, "result", format!("({})", e.generators.join(", ")));
            row(&mut out, "series equal", e.series_equal);
            row(&mut out, "pd(S/I)", e.pd_source);
            row(&mut out, "pd(S/J)", e.pd_result);
        }
        Report::Balance(b) => {
            row(&mut out, "f-vector", list(&b.f_vector));
            row(&mut out, "h-vector", list(&b.h_vector));
            row(&mut out, "height", b.height);
            row(&mut out, "artinian ideal", format!("({})", b.artinian_ideal.generators.join(", ")));
            row(&mut out, "balanced f-vector", list(&b.gamma_f_vector));
            row(&mut out, "balanced h-vector", list(&b.gamma_h_vector));
            row(&mut out, "h equal", b.h_equal);
            row(&mut out, "balanced", b.balanced);
            row(&mut out, "Cohen-Macaulay", format!("{} over {}", b.cm_gamma.cohen_macaulay, b.field));
        }
    }
    out
}

fn verification_table(v: &egh_core::Verification) -> String {
    let mut out = String::new();
    row(&mut out, "report", &v.kind);
    row(&mut out, "valid", v.valid);
    if let Some(r) = &v.reason {
        row(&mut out, "reason", r);
    }
    if let Some(a) = &v.failing_subset {
        row(&mut out, "failing subset", list(a));
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
