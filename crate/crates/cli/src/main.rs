use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use eqproj::grading::{d_slice, Extended, Grading};
use eqproj::maps::{self, LewisGenerator};
use eqproj::ring::{basis_slice, normalize_graded, parse_expr, Element, RingParams};
use eqproj::scalar::CoefficientMode;
use eqproj::verify::{self, CheckReport};
use eqproj::{Element64, Error, RawExpr64};

mod grid;

#[derive(Parser)]
#[command(name = "eqproj", version, about = "Equivariant cohomology of the projective spaces X_{p,q}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the additive basis, plane by plane.
    Basis {
        #[command(flatten)]
        space: Space,
        /// Planes to print, as `n0..n1`.
        #[arg(long, default_value = "-3..3", value_parser = parse_range, allow_hyphen_values = true)]
        plane: RangeInclusive<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Normalize an expression.
    Mul {
        #[command(flatten)]
        space: Space,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Restrict along an inclusion X_{to} ⊆ X_{from}.
    Restrict {
        #[command(flatten)]
        maps: MapArgs,
    },
    /// Push forward along an inclusion X_{from} ⊆ X_{to}.
    Push {
        #[command(flatten)]
        maps: MapArgs,
    },
    /// Restrict to the fixed set, in the two Laurent models.
    Eta {
        #[command(flatten)]
        space: Space,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Lewis's generators γ and Γ(k) in terms of the extended generators.
    Lewis {
        #[command(flatten)]
        space: Space,
        /// Print the whole dictionary (the default).
        #[arg(long)]
        table: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run verification suites.
    Check {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        pmax: u32,
        #[arg(long, default_value_t = 4)]
        qmax: u32,
        #[arg(long, default_value = "-12..12", value_parser = parse_range, allow_hyphen_values = true)]
        window: RangeInclusive<i64>,
        /// Random seed; the EQPROJ_SEED environment variable takes precedence.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random trials per parameter set for the ring suite.
        #[arg(long, default_value_t = 2000)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct Space {
    /// Number of trivial summands (an integer or `inf`).
    #[arg(long)]
    p: Extended,
    /// Number of sign summands (an integer or `inf`).
    #[arg(long)]
    q: Extended,
    #[arg(long, value_enum, default_value_t = Mode::Burnside)]
    mode: Mode,
}

#[derive(Args)]
struct MapArgs {
    /// Source parameters `p,q`.
    #[arg(long, value_parser = parse_pair)]
    from: (Extended, Extended),
    /// Target parameters `p,q`.
    #[arg(long, value_parser = parse_pair)]
    to: (Extended, Extended),
    #[arg(long, allow_hyphen_values = true)]
    expr: String,
    #[arg(long, value_enum, default_value_t = Mode::Burnside)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Burnside,
    Constz,
}

impl From<Mode> for CoefficientMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Burnside => CoefficientMode::Burnside,
            Mode::Constz => CoefficientMode::ConstantZ,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
    Grid,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Grading,
    Boundedness,
    Ring,
    Relations,
    Maps,
    Lewis,
    Splitting,
    Cancellation,
    All,
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected `n0..n1`, got `{s}`"))?;
    let a: i64 = a.trim().parse().map_err(|e| format!("bad range start `{a}`: {e}"))?;
    let b: i64 = b.trim().parse().map_err(|e| format!("bad range end `{b}`: {e}"))?;
    if a > b {
        return Err(format!("empty range `{s}`"));
    }
    Ok(a..=b)
}

fn parse_pair(s: &str) -> Result<(Extended, Extended), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `p,q`, got `{s}`"))?;
    Ok((a.trim().parse()?, b.trim().parse()?))
}

/// Failures, split by exit status.
enum Failure {
    Usage(String),
    Compute(String),
    CheckFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EmptySpace => Failure::Usage(e.to_string()),
            other => Failure::Compute(other.to_string()),
        }
    }
}

type Out = Result<String, Failure>;

fn params(p: Extended, q: Extended, mode: Mode) -> Result<RingParams, Failure> {
    Ok(RingParams::new(p, q, mode.into())?)
}

fn read_expr(text: &str, params: &RingParams) -> Result<RawExpr64, Failure> {
    let raw: RawExpr64 = parse_expr(text)?;
    if params.mode == CoefficientMode::ConstantZ && raw.mentions_kappa() {
        return Err(Failure::Usage("kappa is not available with constant-Z coefficients".into()));
    }
    Ok(raw)
}

/// Normalizes a possibly inhomogeneous expression to its nonzero components.
fn components(raw: &RawExpr64, params: &RingParams) -> Result<Vec<Element64>, Failure> {
    Ok(normalize_graded(raw, params)?.into_iter().filter(|e| !e.is_zero()).collect())
}

fn render_elements(xs: &[Element64], format: Format) -> String {
    match format {
        Format::Json => {
            let items: Vec<Value> = xs.iter().map(Element::to_json).collect();
            format!("{}\n", Value::Array(items))
        }
        Format::Latex if xs.is_empty() => "0\n".into(),
        Format::Latex => xs.iter().map(|x| format!("{}\n", x.to_latex())).collect(),
        _ if xs.is_empty() => "0\n".into(),
        _ => xs.iter().map(|x| format!("{x}    [{}]\n", x.grading())).collect(),
    }
}

fn cmd_basis(space: &Space, planes: RangeInclusive<i64>, format: Format) -> Out {
    let params = params(space.p, space.q, space.mode)?;
    let (p, q) = params.require_finite()?;
    let mut text = String::new();
    let mut json_planes = Vec::new();
    for n in planes.clone().rev() {
        let slice = basis_slice::<i64>(&params, n)?;
        match format {
            Format::Text => {
                let _ = writeln!(text, "plane {n}:");
                for (g, x) in &slice {
                    let _ = writeln!(text, "  {g}  {x}");
                }
            }
            Format::Latex => {
                let _ = writeln!(text, "% plane {n}");
                for (g, x) in &slice {
                    let _ = writeln!(text, "${}$: ${}$", g, x.to_latex());
                }
            }
            Format::Grid => {
                let _ = writeln!(text, "plane {n}:");
                text.push_str(&grid::render(&slice));
            }
            Format::Json => {
                let basis: Vec<Value> =
                    slice.iter().map(|(g, x)| json!({ "grading": [g.a, g.b, g.c], "element": x.to_json() })).collect();
                json_planes.push(json!({ "n": n, "basis": basis }));
            }
        }
        debug_assert_eq!(slice.iter().map(|(g, _)| *g).collect::<Vec<Grading>>(), d_slice(p, q, n).unwrap_or_default());
    }
    if format == Format::Json {
        text = format!("{}\n", json!({ "p": p, "q": q, "planes": json_planes }));
    }
    Ok(text)
}

fn cmd_mul(space: &Space, expr: &str, format: Format) -> Out {
    let params = params(space.p, space.q, space.mode)?;
    let raw = read_expr(expr, &params)?;
    Ok(render_elements(&components(&raw, &params)?, format))
}

fn map_params(args: &MapArgs) -> Result<(RingParams, RingParams, Vec<Element64>), Failure> {
    let from = params(args.from.0, args.from.1, args.mode)?;
    let to = params(args.to.0, args.to.1, args.mode)?;
    let raw = read_expr(&args.expr, &from)?;
    Ok((from, to, components(&raw, &from)?))
}

fn cmd_restrict(args: &MapArgs) -> Out {
    let (from, to, xs) = map_params(args)?;
    let mut out = Vec::new();
    for x in &xs {
        let y = maps::restrict(&from, &to, x)?;
        if !y.is_zero() {
            out.push(y);
        }
    }
    Ok(render_elements(&out, args.format))
}

fn cmd_push(args: &MapArgs) -> Out {
    let (from, to, xs) = map_params(args)?;
    let mut unit = None;
    let mut out = Vec::new();
    for x in &xs {
        let (u, y) = maps::pushforward_composite(&from, &to, x)?;
        unit = Some(u);
        if !y.is_zero() {
            out.push(y);
        }
    }
    if unit.is_none() {
        // the unit does not depend on the element; compute it from 1
        let one = Element64::zero(Grading::ZERO);
        unit = Some(maps::pushforward_composite(&from, &to, &one)?.0);
    }
    let unit = unit.expect("unit computed").to_string();
    Ok(match args.format {
        Format::Json => {
            let items: Vec<Value> = out.iter().map(Element::to_json).collect();
            format!("{}\n", json!({ "unit": unit, "value": items }))
        }
        f => format!("unit: {unit}\nvalue:\n{}", render_elements(&out, f)),
    })
}

fn cmd_eta(space: &Space, expr: &str, format: Format) -> Out {
    let params = params(space.p, space.q, space.mode)?;
    let raw = read_expr(expr, &params)?;
    let x = match components(&raw, &params)?.as_slice() {
        [] => Element64::zero(Grading::ZERO),
        [x] => x.clone(),
        _ => return Err(Failure::Usage("eta takes a homogeneous expression".into())),
    };
    let (side0, side1) = maps::eta(&params, &x)?;
    Ok(match format {
        Format::Json => format!("{}\n", json!({ "side0": side0.to_string(), "side1": side1.to_string() })),
        _ => format!("side0: {side0}\nside1: {side1}\n"),
    })
}

fn cmd_lewis(space: &Space, format: Format) -> Out {
    let params = params(space.p, space.q, space.mode)?;
    let (p, _) = params.require_finite()?;
    let mut rows = vec![("gamma".to_string(), maps::lewis_generator::<i64>(&params, LewisGenerator::Gamma)?)];
    for k in 1..p {
        rows.push((format!("Gamma({k})"), maps::lewis_generator(&params, LewisGenerator::BigGamma(k))?));
    }
    Ok(match format {
        Format::Json => {
            let map: serde_json::Map<String, Value> =
                rows.iter().map(|(name, x)| (name.clone(), x.to_json())).collect();
            format!("{}\n", Value::Object(map))
        }
        Format::Latex => rows
            .iter()
            .map(|(name, x)| {
                let tex = if name == "gamma" { "\\gamma".to_string() } else { format!("\\Gamma{}", &name[5..]) };
                format!("{tex} = {}\n", x.to_latex())
            })
            .collect(),
        _ => rows.iter().map(|(name, x)| format!("{name} = {x}    [{}]\n", x.grading())).collect(),
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_check(
    suite: Suite,
    pmax: u32,
    qmax: u32,
    window: RangeInclusive<i64>,
    seed: u64,
    trials: usize,
    format: Format,
) -> Out {
    let each = |f: &dyn Fn(u32, u32) -> Option<CheckReport>| -> Vec<CheckReport> {
        (0..=pmax)
            .flat_map(|p| (0..=qmax).map(move |q| (p, q)))
            .filter(|&(p, q)| p + q > 0)
            .filter_map(|(p, q)| f(p, q))
            .collect()
    };
    let reports = match suite {
        Suite::All => verify::run_all(pmax, qmax, window, trials, seed),
        Suite::Grading => vec![verify::check_grading_suite(pmax, qmax, window, seed)],
        Suite::Boundedness => vec![verify::check_boundedness((pmax + qmax).max(1), window)],
        Suite::Splitting => {
            each(&|p, q| (p >= 1 && q >= 1).then(|| verify::check_splitting_vanishing(p, q, window.clone())))
        }
        Suite::Cancellation => each(&|p, q| Some(verify::check_cancellation_nonvanishing(p, q, window.clone()))),
        Suite::Relations => each(&|p, q| Some(verify::check_relations_table(p, q))),
        Suite::Maps => each(&|p, q| Some(verify::check_maps_table(p, q, 3))),
        Suite::Lewis => each(&|p, q| (q <= p).then(|| verify::check_lewis(p, q))),
        Suite::Ring => each(&|p, q| {
            let params = RingParams::finite(p, q).ok()?;
            Some(verify::check_ring_suite(&params, trials, seed.wrapping_add(u64::from(p * 31 + q))))
        }),
    };
    let passed = reports.iter().all(CheckReport::passed);
    let text = match format {
        Format::Json => format!("{}\n", Value::Array(reports.iter().map(CheckReport::to_json).collect())),
        _ => {
            let mut text = String::new();
            for r in &reports {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    text,
                    "{status} {} [{}] cases={} failures={}",
                    r.name,
                    r.params,
                    r.cases,
                    r.failures.len()
                );
                for f in r.failures.iter().take(10) {
                    let _ = writeln!(text, "    {f}");
                }
            }
            text
        }
    };
    if passed {
        Ok(text)
    } else {
        print!("{text}");
        Err(Failure::CheckFailed)
    }
}

fn seed_override(seed: u64) -> Result<u64, Failure> {
    match std::env::var("EQPROJ_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("EQPROJ_SEED must be an integer, got `{v}`"))),
        Err(_) => Ok(seed),
    }
}

fn run(cli: Cli) -> Out {
    match cli.command {
        Command::Basis { space, plane, format } => cmd_basis(&space, plane, format),
        Command::Mul { space, expr, format } => cmd_mul(&space, &expr, format),
        Command::Restrict { maps } => cmd_restrict(&maps),
        Command::Push { maps } => cmd_push(&maps),
        Command::Eta { space, expr, format } => cmd_eta(&space, &expr, format),
        Command::Lewis { space, table: _, format } => cmd_lewis(&space, format),
        Command::Check { suite, pmax, qmax, window, seed, trials, format } => {
            cmd_check(suite, pmax, qmax, window, seed_override(seed)?, trials, format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::CheckFailed) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
