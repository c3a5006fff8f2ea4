//! `eccspec`: inspect eccentricity spectra, classify graphs, enumerate
//! small graphs and run the verification suite.
//!
//! Exit codes: 0 success or pass, 1 counterexamples found, 2 usage or
//! parse error, 3 unmet precondition (e.g. a disconnected graph).

mod input;

use std::fs;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use eccspec::classify::{classify, Classification, ClauseReading};
use eccspec::enumeration::{census_upto, LabeledGraphs, MAX_ENUM_ORDER};
use eccspec::numeric::{eigenvalues_symmetric, DEFAULT_ZERO_TOL};
use eccspec::verify::{self, RunOptions, RESULT_IDS};
use eccspec::{eccentricity_matrix, parse_graph6, to_graph6, Error, Exec, Graph};

use input::GraphInput;

const SCHEMA: &str = "1";

#[derive(Debug, Parser)]
#[command(name = "eccspec", version, about = "Eccentricity-matrix spectra of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the eccentricity matrix, characteristic polynomial, inertia and spectrum.
    Spec {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Predict "exactly one positive eigenvalue" and compare with exact inertia.
    Classify {
        #[command(flatten)]
        input: GraphInput,
        /// read graph6 lines from standard input
        #[arg(long, conflicts_with_all = ["g6", "family", "edges"])]
        stdin: bool,
        #[arg(long, default_value = "literal")]
        reading: ClauseReading,
    },
    /// Run one check, or `all`.
    Verify {
        #[arg(value_name = "RESULT")]
        id: String,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        rmax: Option<usize>,
        #[arg(long)]
        mmax: Option<usize>,
        #[arg(long)]
        kmax: Option<usize>,
        /// worker threads (1 runs sequentially; default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value = "literal")]
        reading: ClauseReading,
        #[arg(long)]
        json: bool,
        /// write counterexample graph6 lines here instead of stderr
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Write connected graphs on `n` vertices as graph6 lines.
    Enumerate {
        n: usize,
        /// one graph per isomorphism class
        #[arg(long)]
        dedup: bool,
        #[arg(long)]
        include_disconnected: bool,
    },
}

/// An error with its exit code.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. }
            | Error::MalformedGraph6(_)
            | Error::InvalidParameters(_)
            | Error::InvalidType(_)
            | Error::SizeLimitExceeded { .. } => 2,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(format!("i/o error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Spec { input, json } => cmd_spec(&input, json),
        Command::Classify { input, stdin, reading } => cmd_classify(&input, stdin, reading),
        Command::Verify { id, nmax, rmax, mmax, kmax, jobs, reading, json, out } => {
            let options = RunOptions { n_max: nmax, r_max: rmax, m_max: mmax, k_max: kmax, reading, exec: Exec::from_jobs(jobs) };
            cmd_verify(&id, &options, json, out)
        }
        Command::Enumerate { n, dedup, include_disconnected } => cmd_enumerate(n, dedup, include_disconnected),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) if f.message.contains("Broken pipe") => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn cmd_spec(input: &GraphInput, as_json: bool) -> Result<u8, Failure> {
    let g = input.load()?;
    let e = eccentricity_matrix(&g)?;
    let m = e.to_int();
    let poly = m.char_poly();
    let inertia = m.inertia();
    let mut spectrum = eigenvalues_symmetric(&m, 1e-13)?.eigenvalues;
    spectrum.sort_by(|a, b| b.total_cmp(a));
    // Print tiny values as exact zeros.
    for x in &mut spectrum {
        if x.abs() < DEFAULT_ZERO_TOL {
            *x = 0.0;
        }
    }
    let mut out = io::stdout().lock();
    if as_json {
        let v = json!({
            "schema": SCHEMA,
            "n": g.n(),
            "graph6": to_graph6(&g).ok(),
            "ecc_matrix": e.rows(),
            "char_poly": poly.to_string(),
            "char_poly_coefficients": poly,
            "inertia": [inertia.plus, inertia.zero, inertia.minus],
            "spectrum": spectrum,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"))?;
    } else {
        writeln!(out, "n          : {}", g.n())?;
        if let Ok(s) = to_graph6(&g) {
            writeln!(out, "graph6     : {s}")?;
        }
        writeln!(out, "char poly  : {poly}")?;
        writeln!(out, "inertia    : {inertia}")?;
        let shown: Vec<String> = spectrum.iter().map(|x| format!("{x:.6}")).collect();
        writeln!(out, "spectrum   : {}", shown.join(" "))?;
        writeln!(out, "ecc matrix :")?;
        write!(out, "{e}")?;
    }
    Ok(0)
}

fn classification_json(g: &Graph, c: &Classification) -> Value {
    json!({
        "schema": SCHEMA,
        "graph6": to_graph6(g).ok(),
        "n": g.n(),
        "predicted": c.predicted,
        "ground_truth": c.ground_truth,
        "inertia": [c.inertia.plus, c.inertia.zero, c.inertia.minus],
        "reading": c.reading,
        "decomposition": c.decomposition,
        "typings": c.typings,
    })
}

fn cmd_classify(input: &GraphInput, stdin: bool, reading: ClauseReading) -> Result<u8, Failure> {
    let mut out = BufWriter::new(io::stdout().lock());
    if !stdin {
        if !input.is_given() {
            return Err(Failure::usage("one of --g6, --family, --edges or --stdin is required"));
        }
        let g = input.load()?;
        let c = classify(&g, reading)?;
        writeln!(out, "{}", classification_json(&g, &c))?;
        return Ok(0);
    }
    let mut worst = 0u8;
    for (i, line) in io::stdin().lock().lines().enumerate() {
        let line = line?;
        let trimmed = line.trim_end();
        if trimmed.is_empty() || trimmed == eccspec::enumeration::GRAPH6_HEADER {
            continue;
        }
        let result = parse_graph6(trimmed).and_then(|g| classify(&g, reading).map(|c| (g, c)));
        match result {
            Ok((g, c)) => writeln!(out, "{}", classification_json(&g, &c))?,
            Err(e) => {
                let f = Failure::from(e);
                eprintln!("line {}: {}", i + 1, f.message);
                worst = worst.max(f.code);
            }
        }
    }
    out.flush()?;
    Ok(worst)
}

fn cmd_verify(id: &str, options: &RunOptions, as_json: bool, out: Option<PathBuf>) -> Result<u8, Failure> {
    let ids: Vec<&str> = if id == "all" { RESULT_IDS.to_vec() } else { vec![id] };
    if let Some(bad) = ids.iter().find(|i| !RESULT_IDS.contains(i)) {
        return Err(Failure::usage(format!("unknown result id {bad:?}; known: all, {}", RESULT_IDS.join(", "))));
    }
    let mut reports = Vec::new();
    for id in ids {
        reports.push(verify::run(id, options)?);
    }
    let mut stdout = io::stdout().lock();
    if as_json {
        if reports.len() == 1 {
            writeln!(stdout, "{}", reports[0].to_json())?;
        } else {
            let v = json!({"schema": SCHEMA, "reports": reports});
            writeln!(stdout, "{}", serde_json::to_string_pretty(&v).expect("json"))?;
        }
    } else {
        for (i, r) in reports.iter().enumerate() {
            if i > 0 {
                writeln!(stdout)?;
            }
            write!(stdout, "{}", r.to_text())?;
        }
    }
    let lines: String = reports
        .iter()
        .flat_map(|r| r.counterexamples.iter().map(move |c| format!("{}\t{}\t{}\n", c.graph6, r.id, c.diagnostic)))
        .collect();
    match out {
        Some(path) => fs::write(&path, lines).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?,
        None => eprint!("{lines}"),
    }
    Ok(if reports.iter().all(|r| r.passed) { 0 } else { 1 })
}

fn cmd_enumerate(n: usize, dedup: bool, include_disconnected: bool) -> Result<u8, Failure> {
    if n == 0 || n > MAX_ENUM_ORDER {
        return Err(Failure::usage(format!("n must be in 1..={MAX_ENUM_ORDER}, got {n}")));
    }
    let mut out = BufWriter::new(io::stdout().lock());
    if dedup {
        let levels = census_upto(n, !include_disconnected, Exec::default())?;
        for g in levels.last().into_iter().flatten() {
            writeln!(out, "{}", to_graph6(g)?)?;
        }
    } else {
        for g in LabeledGraphs::new(n, !include_disconnected)? {
            writeln!(out, "{}", to_graph6(&g)?)?;
        }
    }
    out.flush()?;
    Ok(0)
}
