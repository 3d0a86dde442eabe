use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fockcalc::oracle::{
    DEFAULT_GRID_POINTS, DEFAULT_HALF_WIDTH, DEFAULT_ORDER_1D, DEFAULT_ORDER_2D,
};
use fockcalc::{
    berezin, format_symbol, integrate, lemma_l1_check, parse_complex, parse_symbol, quad_integral,
    sharp, Complex64, HoloSymbol, OpChain, Symbol,
};
use fockcalc_cli::{run_suite, SuiteConfig, SuiteError};
use serde_json::json;

/// Toeplitz operator calculus on the Fock space.
#[derive(Parser, Debug)]
#[command(name = "fockcalc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Shared {
    /// Complex dimension.
    #[arg(long, default_value_t = 2, global = true)]
    n: usize,
    /// Symbol in the text syntax; repeat for several.
    #[arg(short = 's', long = "symbol", global = true)]
    symbols: Vec<String>,
    /// Evaluation point, comma-separated complex values.
    #[arg(long, global = true, allow_hyphen_values = true)]
    at: Option<String>,
    /// Basis degree bound.
    #[arg(long, default_value_t = 6, global = true)]
    degree: u32,
    #[arg(long, default_value_t = fockcalc::sample::DEFAULT_SEED, global = true)]
    seed: u64,
    #[arg(long, default_value_t = 1e-9, global = true)]
    tol: f64,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Berezin transform of one symbol.
    Berezin(Shared),
    /// Sharp product of two holomorphic symbols.
    Sharp(Shared),
    /// Apply a chain of Toeplitz operators; the last -s is the function.
    ToeplitzApply(Shared),
    /// Gaussian integral of a symbol by closed form.
    Moment(Shared),
    /// Quadrature check of one symbol, or the Fourier check of a pair (n = 1).
    Oracle(Shared),
    /// Run a verification suite.
    Verify {
        #[command(flatten)]
        shared: Shared,
        /// Suite name or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        /// Also write the JSON report to this path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parse symbols and print their canonical form.
    Parse(Shared),
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Failed,
}

impl From<fockcalc::FockError> for Failure {
    fn from(e: fockcalc::FockError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn symbols(shared: &Shared, count: Option<usize>) -> Result<Vec<Symbol>, Failure> {
    if shared.n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    if let Some(k) = count {
        if shared.symbols.len() != k {
            return Err(usage(format!(
                "expected {k} -s/--symbol argument(s), got {}",
                shared.symbols.len()
            )));
        }
    } else if shared.symbols.is_empty() {
        return Err(usage("expected at least one -s/--symbol argument"));
    }
    shared
        .symbols
        .iter()
        .map(|text| parse_symbol(text, shared.n).map_err(|e| usage(format!("in '{text}': {e}"))))
        .collect()
}

fn holomorphic(s: Symbol) -> Result<HoloSymbol, Failure> {
    let text = format_symbol(&s);
    HoloSymbol::new(s).map_err(|_| usage(format!("'{text}' is not holomorphic")))
}

fn point(shared: &Shared) -> Result<Option<Vec<Complex64>>, Failure> {
    let Some(text) = &shared.at else {
        return Ok(None);
    };
    let values = text
        .split(',')
        .map(|part| parse_complex(part).map_err(|e| usage(format!("--at '{part}': {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != shared.n {
        return Err(usage(format!(
            "--at has {} values, expected {}",
            values.len(),
            shared.n
        )));
    }
    Ok(Some(values))
}

fn complex_json(v: Complex64) -> serde_json::Value {
    json!([v.re, v.im])
}

fn fmt_complex(v: Complex64) -> String {
    format!("{:.16e} {:+.16e}i", v.re, v.im)
}

/// Prints a symbol result, with its value at `--at` when given.
fn emit_symbol(shared: &Shared, s: &Symbol) -> Result<(), Failure> {
    let value = match point(shared)? {
        Some(z) => Some(s.eval(&z)?),
        None => None,
    };
    if shared.json {
        let mut out = json!({ "symbol": format_symbol(s) });
        if let Some(v) = value {
            out["value"] = complex_json(v);
        }
        println!("{out}");
    } else {
        println!("{}", format_symbol(s));
        if let Some(v) = value {
            println!("value: {}", fmt_complex(v));
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Berezin(shared) => {
            let s = symbols(&shared, Some(1))?.remove(0);
            emit_symbol(&shared, &berezin(&s))
        }
        Command::Sharp(shared) => {
            let mut list = symbols(&shared, Some(2))?;
            let g = holomorphic(list.remove(1))?;
            let f = holomorphic(list.remove(0))?;
            emit_symbol(&shared, &sharp(&f, &g)?)
        }
        Command::ToeplitzApply(shared) => {
            let mut list = symbols(&shared, None)?;
            if list.len() < 2 {
                return Err(usage(
                    "toeplitz-apply needs at least one operator symbol and a function",
                ));
            }
            let u = holomorphic(list.pop().expect("nonempty"))?;
            let image = OpChain::new(list)?.apply(&u)?;
            emit_symbol(&shared, image.as_symbol())
        }
        Command::Moment(shared) => {
            let s = symbols(&shared, Some(1))?.remove(0);
            let v = integrate(&s)?;
            if shared.json {
                println!("{}", json!({ "integral": complex_json(v) }));
            } else {
                println!("{}", fmt_complex(v));
            }
            Ok(())
        }
        Command::Oracle(shared) => oracle(&shared),
        Command::Verify { shared, suite, out } => {
            let cfg = SuiteConfig {
                n: shared.n,
                degree: shared.degree,
                seed: shared.seed,
                tol: shared.tol,
            };
            let report = run_suite(&suite, &cfg).map_err(|e| match e {
                SuiteError::Compute(inner) => usage(format!("suite aborted: {inner}")),
                other => usage(other.to_string()),
            })?;
            let text = report.to_json();
            if let Some(path) = out {
                std::fs::write(&path, format!("{text}\n"))
                    .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            }
            if shared.json {
                println!("{text}");
            } else {
                for case in &report.cases {
                    let mark = if case.pass { "PASS" } else { "FAIL" };
                    println!(
                        "{mark}  {:<52} residual {:.3e}  tol {:.1e}",
                        case.name, case.residual, case.tol
                    );
                }
                let passed = report.cases.iter().filter(|c| c.pass).count();
                println!(
                    "{}: {passed}/{} cases passed in {} ms",
                    report.suite,
                    report.cases.len(),
                    report.duration_ms
                );
            }
            if report.pass {
                Ok(())
            } else {
                Err(Failure::Failed)
            }
        }
        Command::Parse(shared) => {
            for s in symbols(&shared, None)? {
                if shared.json {
                    println!(
                        "{}",
                        json!({ "symbol": format_symbol(&s), "terms": s.len() })
                    );
                } else {
                    println!("{}", format_symbol(&s));
                }
            }
            Ok(())
        }
    }
}

fn oracle(shared: &Shared) -> Result<(), Failure> {
    let list = symbols(shared, None)?;
    match list.len() {
        1 => {
            let order = if shared.n == 1 {
                DEFAULT_ORDER_1D
            } else {
                DEFAULT_ORDER_2D
            };
            let exact = integrate(&list[0])?;
            let quad = quad_integral(&list[0], order)?;
            let diff = (exact - quad).norm();
            if shared.json {
                println!(
                    "{}",
                    json!({ "closed_form": complex_json(exact), "quadrature": complex_json(quad), "difference": diff })
                );
            } else {
                println!("closed form: {}", fmt_complex(exact));
                println!("quadrature:  {}", fmt_complex(quad));
                println!("difference:  {diff:.3e}");
            }
            Ok(())
        }
        2 => {
            let mut list = list;
            let g = holomorphic(list.remove(1))?;
            let f = holomorphic(list.remove(0))?;
            let r = lemma_l1_check(&f, &g, DEFAULT_HALF_WIDTH, DEFAULT_GRID_POINTS)?;
            if shared.json {
                println!("{}", json!({ "fourier_residual": r }));
            } else {
                println!("fourier residual: {r:.3e}");
            }
            Ok(())
        }
        k => Err(usage(format!("oracle takes one or two symbols, got {k}"))),
    }
}

fn init_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("FOCKCALC_THREADS") else {
        return Ok(());
    };
    let threads: usize = value.trim().parse().map_err(|_| {
        usage(format!(
            "FOCKCALC_THREADS must be a positive integer, got '{value}'"
        ))
    })?;
    if threads == 0 {
        return Err(usage("FOCKCALC_THREADS must be positive"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match init_threads().and_then(|()| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Failed) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
