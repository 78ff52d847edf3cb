//! Command-line front end: model catalog, classification reports, and the
//! randomized identity-verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error,
//! 3 invariant violation, 4 unknown model/algebra/suite.

use clap::{Parser, Subcommand};
use serde::Serialize;
use std::process::ExitCode;
use symcoh::classify::{self, Algebra, CohomologyData, H1Algebra};
use symcoh::modelfile::{format_rational, ModelFile};
use symcoh::randgen::DEFAULT_SEED;
use symcoh::verify::{run_suite, Suite};
use symcoh::{ce, Rat};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_INVARIANT: u8 = 3;
const EXIT_UNKNOWN: u8 = 4;

#[derive(Parser)]
#[command(
    name = "symcoh",
    about = "Exact workbench for symplectic Hodge calculus and Lie algebra 2-cocycles"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the built-in models
    Catalog {
        #[arg(long)]
        json: bool,
    },
    /// Cohomology / classification report for a model
    Report {
        /// Built-in name (see `catalog`) or path to a model JSON file
        model: String,
        /// poisson-c | poisson | ham | sp | h1:<tag> | center
        #[arg(long)]
        algebra: String,
        /// Remove a point before classifying
        #[arg(long)]
        puncture: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run the randomized identity suites (exact defects, zero tolerance)
    Verify {
        /// brylinski | bracket | cocycle | all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Random seed (overrides SYMCOH_SEED; default 0xC0FFEE)
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 200)]
        cases: usize,
        /// Restrict to one chart/torus dimension (2 or 4; default both)
        #[arg(long)]
        dim: Option<usize>,
    },
}

fn builtin_names() -> Vec<String> {
    let mut names: Vec<String> = ce::catalog().iter().map(|m| m.name.clone()).collect();
    names.extend(["sphere", "surface1", "surface2", "surface3"].map(String::from));
    let punctured: Vec<String> = names.iter().map(|n| format!("punctured-{}", n)).collect();
    names.extend(punctured);
    names
}

enum ResolveError {
    Unknown(String),
    Parse(String),
    Invariant(String),
}

fn resolve_data(reference: &str, puncture: bool) -> Result<CohomologyData, ResolveError> {
    let (reference, puncture) = match reference.strip_prefix("punctured-") {
        Some(rest) => (rest, true),
        None => (reference, puncture),
    };
    let data = if let Some(genus) = reference.strip_prefix("surface") {
        let genus: usize = genus
            .parse()
            .map_err(|_| ResolveError::Unknown(reference.to_string()))?;
        classify::surface(genus)
    } else if reference == "sphere" {
        classify::sphere()
    } else if let Some(model) = ce::catalog().into_iter().find(|m| m.name == reference) {
        CohomologyData::from_ce_model(&model)
            .map_err(|e| ResolveError::Invariant(e.to_string()))?
    } else if reference.ends_with(".json") || std::path::Path::new(reference).exists() {
        let text = std::fs::read_to_string(reference)
            .map_err(|e| ResolveError::Parse(format!("{}: {}", reference, e)))?;
        let model = ModelFile::from_json(&text)
            .and_then(|f| f.to_model())
            .map_err(|e| ResolveError::Parse(e.to_string()))?;
        let report = model.validate();
        if !report.passed() {
            return Err(ResolveError::Invariant(report.failures.join("; ")));
        }
        CohomologyData::from_ce_model(&model)
            .map_err(|e| ResolveError::Invariant(e.to_string()))?
    } else {
        return Err(ResolveError::Unknown(reference.to_string()));
    };
    if puncture {
        data.puncture()
            .map_err(|e| ResolveError::Invariant(e.to_string()))
    } else {
        Ok(data)
    }
}

#[derive(Serialize)]
struct ComponentDoc {
    label: String,
    dim: usize,
    basis: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct ReportDocument {
    model: String,
    algebra: String,
    total_dim: usize,
    components: Vec<ComponentDoc>,
    tau_exponent: Option<i64>,
}

fn basis_doc(basis: &[Vec<Rat>]) -> Vec<Vec<String>> {
    basis
        .iter()
        .map(|v| v.iter().map(format_rational).collect())
        .collect()
}

fn make_report(data: &CohomologyData, algebra: &str) -> Option<ReportDocument> {
    let doc = if let Some(tag) = algebra.strip_prefix("h1:") {
        let alg = match tag {
            "poisson-c0" => H1Algebra::PoissonC0,
            "poisson-c" => H1Algebra::PoissonC,
            "poisson" => H1Algebra::Poisson,
            "ham" => H1Algebra::Ham,
            _ => return None,
        };
        let rep = data.h1(alg);
        ReportDocument {
            model: data.name.clone(),
            algebra: algebra.to_string(),
            total_dim: rep.dim,
            components: vec![ComponentDoc {
                label: "H¹".into(),
                dim: rep.dim,
                basis: Vec::new(),
            }],
            tau_exponent: None,
        }
    } else if algebra == "center" {
        let dim = data.center_dim();
        ReportDocument {
            model: data.name.clone(),
            algebra: algebra.to_string(),
            total_dim: dim,
            components: vec![ComponentDoc {
                label: "𝔷".into(),
                dim,
                basis: Vec::new(),
            }],
            tau_exponent: None,
        }
    } else {
        let alg = match algebra {
            "poisson-c" => Algebra::PoissonC,
            "poisson" => Algebra::Poisson,
            "ham" => Algebra::Ham,
            "sp" => Algebra::Sp,
            _ => return None,
        };
        let rep = data.h2(alg);
        ReportDocument {
            model: data.name.clone(),
            algebra: algebra.to_string(),
            total_dim: rep.total_dim,
            components: rep
                .components
                .iter()
                .map(|c| ComponentDoc {
                    label: c.label.clone(),
                    dim: c.dim,
                    basis: basis_doc(&c.basis),
                })
                .collect(),
            tau_exponent: None,
        }
    };
    Some(doc)
}

fn print_report(doc: &ReportDocument, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(doc).expect("serializable"));
        return;
    }
    println!("model:    {}", doc.model);
    println!("algebra:  {}", doc.algebra);
    println!("total:    {}", doc.total_dim);
    for c in &doc.components {
        print!("  {:<16} dim {}", c.label, c.dim);
        if !c.basis.is_empty() {
            let vectors: Vec<String> = c
                .basis
                .iter()
                .map(|v| format!("({})", v.join(", ")))
                .collect();
            print!("  basis {}", vectors.join(" "));
        }
        println!();
    }
}

fn cmd_catalog(json: bool) -> ExitCode {
    let names = builtin_names();
    if json {
        println!("{}", serde_json::to_string_pretty(&names).expect("serializable"));
    } else {
        for n in &names {
            println!("{}", n);
        }
    }
    ExitCode::SUCCESS
}

fn cmd_report(model: &str, algebra: &str, puncture: bool, json: bool) -> ExitCode {
    let data = match resolve_data(model, puncture) {
        Ok(d) => d,
        Err(ResolveError::Unknown(m)) => {
            eprintln!("unknown model: {}", m);
            return ExitCode::from(EXIT_UNKNOWN);
        }
        Err(ResolveError::Parse(m)) => {
            eprintln!("parse error: {}", m);
            return ExitCode::from(EXIT_PARSE);
        }
        Err(ResolveError::Invariant(m)) => {
            eprintln!("invariant violation: {}", m);
            return ExitCode::from(EXIT_INVARIANT);
        }
    };
    match make_report(&data, algebra) {
        Some(doc) => {
            print_report(&doc, json);
            ExitCode::SUCCESS
        }
        None => {
            eprintln!("unknown algebra: {}", algebra);
            ExitCode::from(EXIT_UNKNOWN)
        }
    }
}

fn cmd_verify(suite: &str, seed: Option<u64>, cases: usize, dim: Option<usize>) -> ExitCode {
    let Some(suite) = Suite::parse(suite) else {
        eprintln!("unknown suite: {}", suite);
        return ExitCode::from(EXIT_UNKNOWN);
    };
    let dims: Vec<usize> = match dim {
        Some(d @ (2 | 4)) => vec![d],
        Some(d) => {
            eprintln!("unsupported dimension {} (use 2 or 4)", d);
            return ExitCode::from(EXIT_PARSE);
        }
        None => vec![2, 4],
    };
    let seed = seed
        .or_else(|| {
            std::env::var("SYMCOH_SEED")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(DEFAULT_SEED);
    let results = run_suite(suite, seed, cases, &dims);
    let mut ok = true;
    for r in &results {
        println!("{}", r);
        ok &= r.passed();
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    println!(
        "{} checks, {} failed (seed {:#x}, {} cases each)",
        results.len(),
        failed,
        seed,
        cases
    );
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY_FAILED)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Catalog { json } => cmd_catalog(json),
        Cmd::Report {
            model,
            algebra,
            puncture,
            json,
        } => cmd_report(&model, &algebra, puncture, json),
        Cmd::Verify {
            suite,
            seed,
            cases,
            dim,
        } => cmd_verify(&suite, seed, cases, dim),
    }
}
