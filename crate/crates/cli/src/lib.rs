//! Command-line front end: script runner, axiom suite, Steiner-Lehmus
//! harness and real-number approximation.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use apartness::construct::build_sl_instance;
use apartness::script::{default_fuel, eval_script, parse_expr, parse_script, ScriptError};
use apartness::verify::{run_suite, AxiomId};
use apartness::{Fuel, Point, Rational, Scalar, Surd};
use clap::{Parser, Subcommand};

/// Exit status when every assertion or check passes.
pub const EXIT_OK: i32 = 0;
/// Exit status when an assertion or check fails or stays undecided.
pub const EXIT_FAIL: i32 = 1;
/// Exit status for usage, parse and I/O errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "apartness", version, about = "Constructive plane geometry over exact and constructive reals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a .geo script.
    Run {
        file: PathBuf,
        /// Largest witness index probed by each check.
        #[arg(long)]
        fuel: Option<u64>,
        /// Bits of precision for derived quantities.
        #[arg(long)]
        precision: Option<u32>,
        /// Print the JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Replay the axioms and auxiliary theorems on generated instances.
    CheckAxioms {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Comma-separated axiom names; all when omitted.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long)]
        fuel: Option<u64>,
    },
    /// Build both bisector feet of a triangle and compare them.
    SteinerLehmus {
        /// "(ax,ay),(bx,by),(cx,cy)" with rational coordinates.
        #[arg(long, allow_hyphen_values = true)]
        triangle: Option<String>,
        /// Also check the sign law on this many generated triangles.
        #[arg(long)]
        sweep: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Approximate an expression within 1/K.
    Approx {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = 1_000_000)]
        k: u64,
    },
}

/// Runs the command line `args` (program name first) and returns the exit
/// status. Reports go to `out`, diagnostics to `err`.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Run { file, fuel, precision, json } => run(&file, fuel, precision, json, out),
        Command::CheckAxioms { samples, seed, only, fuel } => check_axioms(samples, seed, &only, fuel, out),
        Command::SteinerLehmus { triangle, sweep, seed } => steiner_lehmus(triangle.as_deref(), sweep, seed, out),
        Command::Approx { expr, k } => approx(&expr, k, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

struct Failure(i32, String);

fn usage(msg: impl ToString) -> Failure {
    Failure(EXIT_USAGE, msg.to_string())
}

fn fuel_with(max_index: Option<u64>, precision: Option<u32>) -> Result<Fuel, Failure> {
    let base = default_fuel();
    Fuel::new(max_index.unwrap_or(base.max_index), precision.unwrap_or(base.precision_bits)).map_err(usage)
}

fn coords(p: &Point, digits: usize) -> String {
    let k = 10u64.saturating_pow(digits as u32);
    let (ax, ay) = p.approx(k.saturating_mul(10));
    let exact = p.exact();
    let show = |e: Option<&Surd>, a: &Rational| match e.and_then(|e| e.as_rational()) {
        Some(q) => q.to_string(),
        None => format!("~{}", a.to_decimal(digits)),
    };
    let (ex, ey) = (exact.map(|(x, _)| x), exact.map(|(_, y)| y));
    format!("({}, {})", show(ex, &ax), show(ey, &ay))
}

fn run(file: &PathBuf, fuel: Option<u64>, precision: Option<u32>, json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| usage(format!("{}: {e}", file.display())))?;
    let fuel = fuel_with(fuel, precision)?;
    let prog = parse_script(&text).map_err(|e| usage(format!("{}:{e}", file.display())))?;
    let env = match eval_script(&prog, &fuel) {
        Ok(env) => env,
        Err(e) => return Err(Failure(EXIT_FAIL, format!("{}:{e}", file.display()))),
    };
    env.write_emits(std::path::Path::new(".")).map_err(|e: ScriptError| usage(e))?;
    if json {
        let _ = writeln!(out, "{}", env.report_json());
    } else {
        let digits = ((fuel.precision_bits as f64) * std::f64::consts::LOG10_2).floor().clamp(1.0, 18.0) as usize;
        for c in &env.constructions {
            for (name, p) in c.outputs.iter().zip(&c.points) {
                let _ = writeln!(out, "{name} = {}", coords(p, digits));
            }
        }
        for r in &env.results {
            let _ = writeln!(out, "line {}: {} {}: {}", r.line, r.relation, r.args.join(" "), r.verdict.label());
        }
    }
    Ok(if env.ok() { EXIT_OK } else { EXIT_FAIL })
}

fn check_axioms(samples: usize, seed: u64, only: &[String], fuel: Option<u64>, out: &mut dyn Write) -> Result<i32, Failure> {
    let axioms: Vec<AxiomId> = if only.is_empty() {
        AxiomId::ALL.to_vec()
    } else {
        only.iter().map(|s| s.trim().parse::<AxiomId>()).collect::<Result<_, _>>().map_err(usage)?
    };
    let fuel = fuel_with(fuel, None)?;
    let report = run_suite(&axioms, samples, seed, &fuel).map_err(usage)?;
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    Ok(if report.ok() { EXIT_OK } else { EXIT_FAIL })
}

fn parse_triangle(s: &str) -> Result<[Point; 3], Failure> {
    let bad = || usage(format!("expected \"(ax,ay),(bx,by),(cx,cy)\", got {s:?}"));
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut points = Vec::new();
    let mut rest = cleaned.as_str();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(bad)?;
        let close = body.find(')').ok_or_else(bad)?;
        let (x, y) = body[..close].split_once(',').ok_or_else(bad)?;
        let x: Rational = x.parse().map_err(|_| bad())?;
        let y: Rational = y.parse().map_err(|_| bad())?;
        points.push(Point::rational(x, y));
        rest = &body[close + 1..];
        rest = rest.strip_prefix(',').unwrap_or(rest);
    }
    points.try_into().map_err(|_| bad())
}

fn exact_or_approx(s: &Scalar) -> String {
    match s.as_exact() {
        Some(e) => e.to_string(),
        None => format!("~{}", s.approx(1 << 40).to_decimal(12)),
    }
}

fn steiner_lehmus(triangle: Option<&str>, sweep: Option<usize>, seed: u64, out: &mut dyn Write) -> Result<i32, Failure> {
    if triangle.is_none() && sweep.is_none() {
        return Err(usage("give --triangle, --sweep, or both"));
    }
    let fuel = default_fuel();
    let mut ok = true;
    if let Some(t) = triangle {
        let [a, b, c] = parse_triangle(t)?;
        let sl = build_sl_instance(&a, &b, &c, &fuel).map_err(|e| Failure(EXIT_FAIL, e.to_string()))?;
        let isosceles = match sl.side_sign() {
            Some(0) => "yes",
            Some(_) => "no",
            None => "undecided",
        };
        let _ = writeln!(out, "x = {}", coords(&sl.x, 6));
        let _ = writeln!(out, "y = {}", coords(&sl.y, 6));
        let _ = writeln!(out, "|ay|² = {}", exact_or_approx(&sl.ay_sq));
        let _ = writeln!(out, "|cx|² = {}", exact_or_approx(&sl.cx_sq));
        let _ = writeln!(out, "|ab|² = {}", exact_or_approx(&sl.ab_sq));
        let _ = writeln!(out, "|cb|² = {}", exact_or_approx(&sl.cb_sq));
        let _ = writeln!(out, "isosceles: {isosceles}");
        let _ = writeln!(out, "certificates: {}", if sl.all_hold() { "hold" } else { "fail" });
        ok &= sl.all_hold();
    }
    if let Some(n) = sweep {
        let report = run_suite(&[AxiomId::SteinerLehmus], n, seed, &fuel).map_err(usage)?;
        let s = &report.axioms[0];
        let _ = writeln!(
            out,
            "sweep: {} triangles, {} passed, {} failed, {} vacuous, {} unknown",
            s.samples(),
            s.passed,
            s.failed,
            s.vacuous,
            s.unknown
        );
        ok &= report.ok();
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}

fn approx(expr: &str, k: u64, out: &mut dyn Write) -> Result<i32, Failure> {
    if k == 0 {
        return Err(usage("--k must be at least 1"));
    }
    let e = parse_expr(expr).map_err(usage)?;
    let fuel = default_fuel();
    let v = e.eval(&fuel).map_err(|e| Failure(EXIT_FAIL, e.to_string()))?;
    let grid = Rational::from_integer(k);
    let q = Rational::new((&v.approx(k.saturating_mul(2)) * &grid).round_half_away(), k).expect("k is positive");
    let digits = (k as f64).log10().ceil() as usize;
    let _ = writeln!(out, "{q}");
    let _ = writeln!(out, "≈ {}", q.to_decimal(digits));
    if let Some(s) = v.as_exact() {
        let _ = writeln!(out, "exact: {s}");
    }
    Ok(EXIT_OK)
}
