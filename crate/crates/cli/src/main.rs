use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ratlimit::arith::rint;
use ratlimit::bench;
use ratlimit::limit::{bilimit_with, LimitOptions};
use ratlimit::puiseux::{expand, sound_level};
use ratlimit::report::outcome_json;
use ratlimit::{parse_poly, BiPoly, Rational, Side};

const EXISTS: u8 = 0;
const USAGE: u8 = 1;
const NO_LIMIT: u8 = 2;

#[derive(Parser)]
#[command(name = "ratlimit", version, about = "Exact limits of bivariate rational functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide lim f/g at a point and report the limit or the range.
    Limit {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        /// Point as `a,b` with rational coordinates.
        #[arg(long, default_value = "0,0")]
        at: String,
        #[arg(long)]
        json: bool,
        /// Compute the range even when the limit exists.
        #[arg(long)]
        range: bool,
    },
    /// Print the truncated real Puiseux branches of f at the origin.
    Branches {
        #[arg(long)]
        f: String,
        /// Truncation level; defaults to the sound level for the degree.
        #[arg(short = 'N', long = "level")]
        level: Option<String>,
        #[arg(long, value_enum)]
        side: Option<SideArg>,
    },
    /// Run the built-in benchmark corpus.
    Bench {
        #[arg(long)]
        json: bool,
        #[arg(long = "case")]
        case: Option<u32>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Plus,
    Minus,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { EXISTS });
        }
    };
    let code = match cli.command {
        Command::Limit { f, g, at, json, range } => cmd_limit(&f, &g, &at, json, range),
        Command::Branches { f, level, side } => cmd_branches(&f, level.as_deref(), side),
        Command::Bench { json, case } => cmd_bench(json, case),
    };
    ExitCode::from(code.unwrap_or_else(|msg| {
        eprintln!("error: {msg}");
        USAGE
    }))
}

fn poly(label: &str, src: &str) -> Result<BiPoly, String> {
    parse_poly(src).map_err(|e| format!("{label}: {e}"))
}

fn rational(s: &str) -> Result<Rational, String> {
    Rational::from_str(s.trim()).map_err(|_| format!("not a rational number: {s:?}"))
}

fn point(s: &str) -> Result<(Rational, Rational), String> {
    match s.split_once(',') {
        Some((a, b)) => Ok((rational(a)?, rational(b)?)),
        None => Err(format!("point must be `a,b`, got {s:?}")),
    }
}

fn cmd_limit(f: &str, g: &str, at: &str, json: bool, range: bool) -> Result<u8, String> {
    let (f, g) = (poly("--f", f)?, poly("--g", g)?);
    if g.is_zero() {
        return Err("--g is identically zero".into());
    }
    let (a, b) = point(at)?;
    let start = Instant::now();
    let out = bilimit_with(&f, &g, (&a, &b), &LimitOptions { compute_range: range }).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if json {
        println!("{}", outcome_json(&out, elapsed));
    } else {
        println!("{out}");
    }
    Ok(if out.exists() { EXISTS } else { NO_LIMIT })
}

/// First shear `f(x + c y, y)` with `c` in 0, 1, -1, 2, -2, ... making `f` y-regular.
fn y_regular_shear(f: &BiPoly) -> Result<(Rational, BiPoly), String> {
    for k in 0..64i64 {
        let c = rint(if k % 2 == 1 { (k + 1) / 2 } else { -k / 2 });
        let h = f.shear_x(&c);
        if h.is_y_regular().map_err(|e| e.to_string())? {
            return Ok((c, h));
        }
    }
    Err("no shear makes the polynomial y-regular".into())
}

fn cmd_branches(f: &str, level: Option<&str>, side: Option<SideArg>) -> Result<u8, String> {
    let f = poly("--f", f)?;
    if f.is_zero() {
        return Err("--f is identically zero".into());
    }
    if f.constant_term() != rint(0) {
        println!("f does not vanish at the origin; no branches");
        return Ok(EXISTS);
    }
    let (c, h) = y_regular_shear(&f)?;
    if c != rint(0) {
        println!("note: f is not y-regular; showing branches of f(x + ({c})*y, y)");
    }
    let n = match level {
        Some(s) => rational(s)?,
        None => rint(sound_level(h.total_degree().unwrap_or(1)).into()),
    };
    let sides: &[Side] = match side {
        Some(SideArg::Plus) => &[Side::Plus],
        Some(SideArg::Minus) => &[Side::Minus],
        None => &Side::BOTH,
    };
    let mut any = false;
    for &s in sides {
        let set = expand(&h, &n, s).map_err(|e| e.to_string())?;
        if set.is_empty() {
            continue;
        }
        any = true;
        println!("{}", if s == Side::Plus { "x -> 0+:" } else { "x -> 0- (series of f(-x, y)):" });
        for b in &set.branches {
            println!("  {b}");
        }
    }
    if !any {
        println!("no real branches");
    }
    Ok(EXISTS)
}

fn cmd_bench(json: bool, case: Option<u32>) -> Result<u8, String> {
    let cases: Vec<_> = bench::cases().into_iter().filter(|c| case.is_none_or(|id| c.id == id)).collect();
    if cases.is_empty() {
        return Err(format!("no benchmark case {}", case.unwrap_or_default()));
    }
    let mut all_passed = true;
    let mut rows = Vec::new();
    for c in &cases {
        let r = c.run().map_err(|e| format!("case {}: {e}", c.id))?;
        all_passed &= r.passed;
        if json {
            rows.push(json!({
                "id": r.id,
                "passed": r.passed,
                "result": match &r.outcome {
                    Ok(out) => outcome_json(out, r.elapsed),
                    Err(e) => json!({"error": e.to_string()}),
                },
            }));
        } else {
            let verdict = match &r.outcome {
                Ok(out) => out.to_string(),
                Err(e) => format!("error: {e}"),
            };
            let status = if r.passed { "PASS" } else { "FAIL" };
            println!("case {:>2}: {status}  {:>9.2} ms  {verdict}", r.id, r.elapsed.as_secs_f64() * 1000.0);
        }
    }
    if json {
        println!("{}", serde_json::Value::Array(rows));
    }
    Ok(if all_passed { EXISTS } else { NO_LIMIT })
}
