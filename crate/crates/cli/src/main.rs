use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use splab::exec::Exec;
use splab::insertion::{mixed_insert_word, Word};
use splab::mixed_jdt::{mixed_rectify_traced, JdtError};
use splab::sagan_worley::{preimage_count, skew_plactic_schur_p, sw_rectify};
use splab::symfunc::b_coeffs;
use splab::tableau::{enumerate_tableaux, is_q_tableau, parse_tableau, print_tableau, standardize, Mode};
use splab::verify::{run_suite, Suite, VerifyConfig};
use splab::{ShiftedTableau, SkewShape};

/// Stdout writes that tolerate a closed pipe.
macro_rules! out {
    () => {{
        let _ = writeln!(io::stdout());
    }};
    ($($arg:tt)*) => {{
        let _ = writeln!(io::stdout(), $($arg)*);
    }};
}

macro_rules! out_raw {
    ($($arg:tt)*) => {{
        let _ = write!(io::stdout(), $($arg)*);
    }};
}

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNKNOWN_SUITE: u8 = 3;

#[derive(Parser)]
#[command(name = "splab", version, about = "Shifted tableaux, mixed insertion and jeu de taquin")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for sweeps; 1 runs sequentially.
    #[arg(long, global = true, value_name = "K")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mixed insertion tableau of a word.
    Insert { word: Vec<String> },
    /// Mixed rectification of a semistandard skew tableau.
    RectifyMixed {
        file: String,
        /// Print every slide as it happens.
        #[arg(long)]
        trace: bool,
    },
    /// Extended Sagan-Worley rectification of a Q-tableau.
    RectifySw { file: String },
    /// Standardization of a Q-tableau.
    Standardize { file: String },
    /// All tableaux of a shape with values at most n.
    Enumerate {
        shape: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = ModeArg::Semistandard)]
        mode: ModeArg,
    },
    /// Shifted Littlewood-Richardson numbers b of a skew shape.
    ExpandSkew {
        shape: String,
        /// Compare each b with rectification preimage counts.
        #[arg(long)]
        check_sw: bool,
        /// Largest value used by --check-sw.
        #[arg(long, default_value_t = 3)]
        n: u32,
    },
    /// The skew plactic Schur P-function as a sum of classes.
    PlacticSkew {
        shape: String,
        #[arg(short = 'n', long)]
        n: u32,
    },
    /// Run a bounded exhaustive verification suite.
    Verify {
        suite: String,
        #[command(flatten)]
        bounds: Bounds,
    },
}

#[derive(Args)]
struct Bounds {
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    len: Option<usize>,
    #[arg(long)]
    max_size: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Semistandard,
    Qtableau,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Semistandard => Mode::Semistandard,
            ModeArg::Qtableau => Mode::QTableau,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn exec_for(jobs: Option<usize>) -> Result<Exec, Failure> {
    match jobs {
        Some(0) => Err(Failure::usage("--jobs must be positive")),
        Some(1) => Ok(Exec::Sequential),
        #[cfg(feature = "parallel")]
        Some(k) => {
            rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build_global()
                .map_err(Failure::usage)?;
            Ok(Exec::Parallel)
        }
        #[cfg(not(feature = "parallel"))]
        Some(_) => Ok(Exec::Sequential),
        None => Ok(Exec::default()),
    }
}

fn run(cli: Cli) -> Outcome {
    let exec = exec_for(cli.jobs)?;
    let json = cli.json;
    match cli.command {
        Command::Insert { word } => {
            let w: Word = word.join(" ").parse().map_err(Failure::usage)?;
            emit_tableau(&mixed_insert_word(&w.0), json);
            Ok(0)
        }
        Command::RectifyMixed { file, trace } => rectify_mixed(&file, trace, json),
        Command::RectifySw { file } => {
            let t = read_tableau(&file)?;
            if !is_q_tableau(&t) {
                return Err(Failure::usage("input is not a Q-tableau"));
            }
            emit_tableau(&sw_rectify(&t), json);
            Ok(0)
        }
        Command::Standardize { file } => {
            let t = read_tableau(&file)?;
            if !is_q_tableau(&t) {
                return Err(Failure::usage("input is not a Q-tableau"));
            }
            emit_tableau(&standardize(&t), json);
            Ok(0)
        }
        Command::Enumerate { shape, n, mode } => {
            let shape = parse_shape(&shape)?;
            if n == 0 {
                return Err(Failure::usage("--n must be positive"));
            }
            let all: Vec<ShiftedTableau> = enumerate_tableaux(&shape, n, mode.into()).collect();
            if json {
                out!("{}", serde_json::to_string(&all).expect("serializable"));
            } else {
                for (i, t) in all.iter().enumerate() {
                    if i > 0 {
                        out!();
                    }
                    out_raw!("{}", print_tableau(t));
                }
                eprintln!("{} tableaux", all.len());
            }
            Ok(0)
        }
        Command::ExpandSkew { shape, check_sw, n } => expand_skew(&shape, check_sw, n, json),
        Command::PlacticSkew { shape, n } => {
            let shape = parse_shape(&shape)?;
            if n == 0 {
                return Err(Failure::usage("-n must be positive"));
            }
            let sum = skew_plactic_schur_p(&shape, n, exec);
            if json {
                let terms: Vec<_> = sum
                    .terms()
                    .map(|(t, c)| json!({ "tableau": t, "coefficient": c.to_string() }))
                    .collect();
                out!("{}", serde_json::to_string(&terms).expect("serializable"));
            } else {
                for (t, c) in sum.terms() {
                    out!("{}\t{c}", inline(t));
                }
            }
            Ok(0)
        }
        Command::Verify { suite, bounds } => {
            let suite: Suite = suite.parse().map_err(|e| Failure {
                code: EXIT_UNKNOWN_SUITE,
                message: format!("{e}; known suites: {}", Suite::ALL.map(|s| s.name()).join(", ")),
            })?;
            if [bounds.n, bounds.max_size].contains(&Some(0)) || bounds.len == Some(0) {
                return Err(Failure::usage("bounds must be positive"));
            }
            let config = VerifyConfig {
                n: bounds.n,
                len: bounds.len,
                max_size: bounds.max_size,
                exec,
            };
            let report = run_suite(suite, &config);
            if json {
                out!("{}", serde_json::to_string(&report).expect("serializable"));
            } else {
                out_raw!("{report}");
            }
            Ok(if report.passed() { 0 } else { EXIT_COUNTEREXAMPLE })
        }
    }
}

fn rectify_mixed(file: &str, trace: bool, json: bool) -> Outcome {
    let t = read_tableau(file)?;
    let rec = match mixed_rectify_traced(&t) {
        Ok(rec) => rec,
        Err(e @ (JdtError::NotSemistandard | JdtError::LowLetter(_))) => return Err(Failure::usage(e)),
        Err(e) => {
            return Err(Failure {
                code: EXIT_COUNTEREXAMPLE,
                message: e.to_string(),
            })
        }
    };
    if json {
        let mut out = json!({ "result": rec.result });
        if trace {
            out["trace"] = json!(rec.trace().iter().map(|e| e.to_string()).collect::<Vec<_>>());
        }
        out!("{out}");
    } else {
        if trace {
            for event in rec.trace() {
                out!("{event}");
            }
        }
        out_raw!("{}", print_tableau(&rec.result));
    }
    Ok(0)
}

fn expand_skew(shape: &str, check_sw: bool, n: u32, json: bool) -> Outcome {
    let shape = parse_shape(shape)?;
    let b = b_coeffs(shape.outer(), shape.inner()).map_err(|e| Failure {
        code: EXIT_COUNTEREXAMPLE,
        message: e.to_string(),
    })?;
    let mut all_ok = true;
    let mut rows = Vec::new();
    for (lambda, coeff) in &b {
        let mut line = format!("{lambda}\t{coeff}");
        let mut check = None;
        if check_sw {
            let straight = SkewShape::straight(lambda.clone());
            let ok = enumerate_tableaux(&straight, n, Mode::QTableau)
                .all(|t| preimage_count(&t, &shape, n).to_string() == coeff.to_string());
            all_ok &= ok;
            line.push_str(if ok { "\tPASS" } else { "\tFAIL" });
            check = Some(ok);
        }
        rows.push(json!({ "lambda": lambda.to_string(), "b": coeff.to_string(), "check": check }));
        if !json {
            out!("{line}");
        }
    }
    if json {
        out!("{}", serde_json::to_string(&rows).expect("serializable"));
    }
    Ok(if all_ok { 0 } else { EXIT_COUNTEREXAMPLE })
}

fn parse_shape(s: &str) -> Result<SkewShape, Failure> {
    s.parse().map_err(|e| Failure::usage(format!("bad shape {s:?}: {e}")))
}

/// Reads a tableau from a file, or from stdin when the path is `-`.
fn read_tableau(path: &str) -> Result<ShiftedTableau, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(Failure::usage)?;
        s
    } else {
        fs::read_to_string(Path::new(path)).map_err(|e| Failure::usage(format!("{path}: {e}")))?
    };
    parse_tableau(&text).map_err(|e| Failure::usage(format!("{path}: {e}")))
}

fn emit_tableau(t: &ShiftedTableau, json: bool) {
    if json {
        out!("{}", serde_json::to_string(t).expect("serializable"));
    } else {
        out_raw!("{}", print_tableau(t));
    }
}

/// One-line form with rows separated by ` / `.
fn inline(t: &ShiftedTableau) -> String {
    print_tableau(t).lines().collect::<Vec<_>>().join(" / ")
}
