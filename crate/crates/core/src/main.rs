//! Command-line front end. Exit codes: 0 success or all verified, 1 any
//! counterexample, 2 undefined value or domain exhausted, 3 usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;

use quasidet::contfrac::{rogers_ramanujan_by_convergents, rogers_ramanujan_ratio};
use quasidet::harness::{self, replay, run_identities, Report, RunConfig};
use quasidet::io::MatrixFile;
use quasidet::matrix::NcMatrix;
use quasidet::pluecker::{gauss_decompose, left_qpc, right_qpc, Pivot};
use quasidet::scalar::{Codec, QRing, QSeriesRing};
use quasidet::{qdet, Error, FormulaRing, Method};

#[derive(Parser)]
#[command(name = "quasidet", version, about = "Exact quasideterminants and identity verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Quasideterminant |A|_pq of a matrix file.
    Qdet {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value = "auto")]
        method: Method,
    },
    /// Left or right quasi-Plücker coordinate.
    Qpc {
        side: Side,
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        /// Comma-separated labels; empty for k = 1.
        #[arg(long, default_value = "", value_delimiter = ',')]
        set: Vec<String>,
        /// Fixed pivot row (left) or column (right); first defined one if absent.
        #[arg(long)]
        pivot: Option<usize>,
        #[arg(long, default_value = "auto")]
        method: Method,
    },
    /// Gauss decomposition A = U Y L, printed as JSON.
    Gauss {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value = "auto")]
        method: Method,
    },
    /// Symmetric-function checks at one size and dimension.
    Symm {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long)]
        check: SymmCheck,
        #[arg(long, default_value_t = 0xC0FFEE)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Continued-fraction and almost-triangular checks at one size and dimension.
    Contfrac {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 0xC0FFEE)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Rogers-Ramanujan coefficients from both sides.
    Rr {
        #[arg(long, default_value_t = 6)]
        order: usize,
        #[arg(long, default_value_t = 10)]
        depth: usize,
    },
    /// Run the identity catalog.
    Verify {
        /// Comma-separated identity IDs.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0xC0FFEE)]
        seed: u64,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Print every identity with its reference and anchor.
    ListIdentities,
    /// Re-evaluate a stored counterexample.
    Replay {
        #[arg(long)]
        report: PathBuf,
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum SymmCheck {
    Vieta,
    Bezout,
    Lambda,
    Complete,
    Ribbon,
}

impl SymmCheck {
    fn ids(self) -> &'static [&'static str] {
        match self {
            SymmCheck::Vieta => &["VIETA-33", "VIETA-35", "VIETA-CRAMER", "ROOT-ANNIHILATION"],
            SymmCheck::Bezout => &["BEZOUT", "BEZOUT-THM", "HAT-LEMMA"],
            SymmCheck::Lambda => &["LAMBDA-SYMMETRY"],
            SymmCheck::Complete => &["S-SYMMETRY", "S-ROUTES"],
            SymmCheck::Ribbon => &["RIBBON-SYMMETRY", "RIBBON-BASIS"],
        }
    }
}

const CONTFRAC_IDS: &[&str] =
    &["CF-CONVERGENTS", "CF-NESTED", "CF-JACOBI", "ALMOST-TRI-47", "ALMOST-TRI-48-UNIT", "ALMOST-TRI-48"];

/// A failure with its exit code.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(if e.is_domain() { 2 } else { 3 }, e.to_string())
    }
}

type CliResult = Result<u8, Fail>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cmd: Command) -> CliResult {
    match cmd {
        Command::Qdet { matrix, p, q, method } => {
            let file = read_matrix(&matrix)?;
            match file.rationals()? {
                Some(a) => println!("{}", encode_str(&QRing, &qdet(&QRing, &a, p, q, method)?)),
                None => println!("{}", qdet(&FormulaRing, &file.formulas()?, p, q, method)?),
            }
            Ok(0)
        }
        Command::Qpc { side, matrix, i, j, set, pivot, method } => {
            let a = read_matrix(&matrix)?.rationals()?.ok_or_else(|| usage("qpc needs constant entries"))?;
            let set = parse_labels(&set)?;
            let pivot = pivot.map_or(Pivot::Auto, Pivot::Fixed);
            let v = match side {
                Side::Left => left_qpc(&QRing, &a, i, j, &set, pivot, method)?,
                Side::Right => right_qpc(&QRing, &a, i, j, &set, pivot, method)?,
            };
            println!("{}", encode_str(&QRing, &v));
            Ok(0)
        }
        Command::Gauss { matrix, method } => {
            let a = read_matrix(&matrix)?.rationals()?.ok_or_else(|| usage("gauss needs constant entries"))?;
            let (u, y, l) = gauss_decompose(&QRing, &a, method)?;
            let out = json!({ "U": as_json(&u), "Y": as_json(&y), "L": as_json(&l) });
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
            Ok(0)
        }
        Command::Symm { n, d, check, seed, samples } => run_ids(check.ids(), n, d, seed, samples),
        Command::Contfrac { n, d, seed, samples } => run_ids(CONTFRAC_IDS, n, d, seed, samples),
        Command::Rr { order, depth } => {
            let ring = QSeriesRing::new(order);
            let lhs = rogers_ramanujan_by_convergents(&ring, depth)?;
            let rhs = rogers_ramanujan_ratio(&ring)?;
            let mut all = true;
            for (k, (l, r)) in lhs.iter().zip(&rhs).enumerate() {
                let ok = l == r;
                all &= ok;
                println!("z^{k}: {l} | {r} {}", if ok { "match" } else { "MISMATCH" });
            }
            Ok(if all { 0 } else { 1 })
        }
        Command::Verify { only, sizes, dims, samples, seed, report } => {
            let config = RunConfig { seed, dims, sizes, samples, only, ..RunConfig::default() };
            let rep = harness::run_suite(&config)?;
            print_report(&rep);
            if let Some(path) = report {
                fs::write(&path, rep.to_json()).map_err(|e| usage(&format!("{}: {e}", path.display())))?;
            }
            Ok(rep.exit_code() as u8)
        }
        Command::ListIdentities => {
            for e in harness::catalog() {
                let i = e.info();
                println!("{}\t{}\t{}", i.id, i.reference, i.anchor);
            }
            Ok(0)
        }
        Command::Replay { report, id, index } => {
            let text = fs::read_to_string(&report).map_err(|e| usage(&format!("{}: {e}", report.display())))?;
            let rep = Report::from_json(&text)?;
            let out = replay(&rep, &id, index)?;
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
            Ok(if out.reproduced { 0 } else { 1 })
        }
    }
}

fn usage(msg: &str) -> Fail {
    Fail(3, msg.to_string())
}

fn read_matrix(path: &PathBuf) -> Result<MatrixFile, Fail> {
    let text = fs::read_to_string(path).map_err(|e| usage(&format!("{}: {e}", path.display())))?;
    Ok(MatrixFile::from_json(&text)?)
}

fn parse_labels(items: &[String]) -> Result<Vec<usize>, Fail> {
    items
        .iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse().map_err(|_| usage(&format!("bad label `{s}`"))))
        .collect()
}

fn encode_str<R: Codec>(ring: &R, x: &R::Elem) -> String {
    match ring.encode(x) {
        serde_json::Value::String(s) => s,
        v => v.to_string(),
    }
}

fn as_json(m: &NcMatrix<BigRational>) -> serde_json::Value {
    serde_json::to_value(MatrixFile::from_matrix(&QRing, m)).expect("json")
}

fn run_ids(ids: &[&str], n: usize, d: usize, seed: u64, samples: usize) -> CliResult {
    let all = harness::catalog();
    let chosen: Vec<&dyn harness::Identity> =
        all.iter().filter(|e| ids.contains(&e.info().id.as_str())).map(|e| e.as_ref()).collect();
    let config = RunConfig { seed, dims: vec![d], sizes: Some(vec![n]), samples, ..RunConfig::default() };
    let (verdicts, _) = run_identities(&chosen, &config);
    let rep = Report::new(config, verdicts, 0.0, Vec::new());
    print_report(&rep);
    Ok(rep.exit_code() as u8)
}

fn print_report(rep: &Report) {
    for v in &rep.verdicts {
        let cells: Vec<String> = v.cells.iter().map(|c| format!("n{}d{}:{:?}", c.n, c.d, c.status)).collect();
        println!(
            "{:<4} {:<26} {:<16} {}/{} {}",
            if v.passed { "ok" } else { "FAIL" },
            v.id,
            format!("{:?}", v.status),
            v.samples_succeeded,
            v.samples_attempted,
            cells.join(" ")
        );
        for c in &v.cells {
            if let Some(e) = &c.error {
                println!("     n={} d={} error: {e}", c.n, c.d);
            }
        }
    }
    let s = &rep.summary;
    println!(
        "{} identities, {} passed, {} failed; cells: {} verified, {} counterexample, {} exhausted, {} error",
        s.identities, s.passed, s.failed, s.verified_cells, s.counterexample_cells, s.domain_exhausted_cells, s.error_cells
    );
}
