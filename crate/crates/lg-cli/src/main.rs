use clap::{Parser, Subcommand, ValueEnum};
use lg_core::knots::lookup;
use lg_core::ring::{render, Degree, LaurentBi, Ring, Style};
use lg_core::tangle::{
    admissible_eval, lg_from_braid_with, lg_from_program, surface_pipeline, AdmissibleDiagram, BottomTangle, BraidWord, EvalOptions,
    LGValue, Mode, TangleError, TangleProgram,
};
use lg_core::topo::{alexander_from_braid, check_specializations, genus_lower_bound, improves_alexander, AlexPoly, SpecCheck};
use lg_core::verify::{self, Suite};
use serde_json::{json, Value};
use std::process::ExitCode;
use thiserror::Error;

#[derive(Parser)]
#[command(name = "lg", version, about = "Links-Gould invariant LG^{2,1} of knots and links")]
#[command(args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    cmd: Option<Cmd>,
    /// Knot name from the built-in table, or a JSON file (braid, tangle program,
    /// bottom tangle or admissible diagram).
    input: Option<String>,
    /// Braid as inline JSON {"strands": n, "word": [...]}.
    #[arg(long, conflicts_with = "input")]
    braid: Option<String>,
    #[arg(long, value_enum, default_value_t = StyleArg::T0t1)]
    style: StyleArg,
    #[arg(long)]
    json: bool,
    /// Compare both one-variable specializations with the Alexander polynomial.
    #[arg(long)]
    check_alexander: bool,
    /// Also report the Alexander genus bound.
    #[arg(long)]
    genus_bound: bool,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    mode: ModeArg,
    #[arg(long, default_value_t = 8)]
    max_strands: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a regression suite: matrices, relations, braiding or degrees.
    Verify {
        suite: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StyleArg {
    Qqa,
    T0t1,
    Su,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Auto,
    Exact,
    Interp,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Engine(String),
}

impl From<TangleError> for CliError {
    fn from(e: TangleError) -> Self {
        match e {
            TangleError::Parse(_) | TangleError::BadBraid(_) | TangleError::NonComposable(_) => CliError::Parse(e.to_string()),
            _ => CliError::Engine(e.to_string()),
        }
    }
}

enum Input {
    Braid(BraidWord),
    Program(TangleProgram),
    Surface(BottomTangle),
    Admissible(AdmissibleDiagram),
}

fn read_input(cli: &Cli) -> Result<Input, CliError> {
    if let Some(b) = &cli.braid {
        return Ok(Input::Braid(BraidWord::from_json(b)?));
    }
    let name = cli.input.as_deref().ok_or_else(|| CliError::Parse("no input given".into()))?;
    if let Some(k) = lookup(name) {
        return Ok(Input::Braid(k.braid()));
    }
    let text = std::fs::read_to_string(name).map_err(|e| CliError::Parse(format!("{name}: not a known knot or readable file ({e})")))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{name}: {e}")))?;
    let has = |k: &str| v.get(k).is_some();
    Ok(if has("strands") {
        Input::Braid(BraidWord::from_json(&text)?)
    } else if has("disks") {
        let d: AdmissibleDiagram = serde_json::from_value(v).map_err(|e| CliError::Parse(e.to_string()))?;
        d.program.words()?;
        Input::Admissible(d)
    } else if has("ops") {
        Input::Surface(BottomTangle::from_json(&text)?)
    } else if has("slices") {
        Input::Program(TangleProgram::from_json(&text)?)
    } else {
        return Err(CliError::Parse(format!("{name}: unrecognized JSON input")));
    })
}

fn fmt_deg(d: Degree) -> Value {
    d.map_or(Value::Null, |r| Value::String(r.to_string()))
}

fn style(s: StyleArg) -> Style {
    match s {
        StyleArg::Qqa => Style::Qqa,
        StyleArg::T0t1 => Style::T0T1,
        StyleArg::Su => Style::Su,
    }
}

fn cmd_lg(cli: &Cli) -> Result<(), CliError> {
    let opts = EvalOptions {
        mode: match cli.mode {
            ModeArg::Auto => Mode::Auto,
            ModeArg::Exact => Mode::Exact,
            ModeArg::Interp => Mode::Interp,
        },
        max_strands: cli.max_strands,
    };
    let input = read_input(cli)?;
    let (lg, braid): (LGValue, Option<BraidWord>) = match input {
        Input::Braid(b) => (lg_from_braid_with(&b, &opts)?, Some(b)),
        Input::Program(p) => (lg_from_program(&p, &opts)?, None),
        Input::Surface(b) => (surface_pipeline(&b)?.lg, None),
        Input::Admissible(d) => (admissible_eval(&d, &opts)?.lg, None),
    };
    let v: &LaurentBi = &lg.value;
    let span = if v.is_zero() { None } else { Some(v.span_q2alpha().map_err(|e| CliError::Engine(e.to_string()))?) };
    let knot = braid.as_ref().is_none_or(|b| b.is_knot());
    let genus = match (&lg.t0t1, knot) {
        (Some(t), true) if !v.is_zero() => Some(genus_lower_bound(t).map_err(|e| CliError::Engine(e.to_string()))?),
        _ => None,
    };
    let alex: Option<AlexPoly> = match &braid {
        Some(b) if cli.check_alexander || cli.genus_bound => {
            Some(alexander_from_braid(b).map_err(|e| CliError::Engine(e.to_string()))?)
        }
        _ => None,
    };
    if (cli.check_alexander || cli.genus_bound) && alex.is_none() {
        return Err(CliError::Parse("Alexander checks need a braid input".into()));
    }
    let specs: Option<Vec<SpecCheck>> = match (&alex, &lg.t0t1) {
        (Some(a), Some(t)) if cli.check_alexander => Some(check_specializations(t, a)),
        (Some(_), None) if cli.check_alexander => return Err(CliError::Engine("value is off the (t0, t1) lattice".into())),
        _ => None,
    };
    let alex_bound = alex.as_ref().filter(|_| cli.genus_bound).map(|a| {
        let improves = lg.t0t1.as_ref().and_then(|t| improves_alexander(t, a).ok());
        ((a.breadth() + 1) / 2, improves)
    });
    let rendered = render(v, style(cli.style));
    if cli.json {
        let mut out = json!({
            "lg_qqa": render(v, Style::Qqa),
            "lg_t0t1": lg.t0t1.as_ref().map(|t| t.to_string()),
            "span": span.map(|s| s.to_string()),
            "genus_lower_bound": genus,
            "dz": fmt_deg(v.deg_z()),
            "dt": fmt_deg(v.deg_t()),
        });
        if let Some(s) = &specs {
            out["specializations"] = serde_json::to_value(s).unwrap();
        }
        if let Some((b, imp)) = alex_bound {
            out["alexander_genus_bound"] = json!(b);
            out["improves_alexander"] = json!(imp);
        }
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        let span_s = span.map_or("none (LG = 0)".to_string(), |s| s.to_string());
        match genus {
            Some(g) => println!("LG = {rendered}, span {span_s}, genus ≥ {g}"),
            None => println!("LG = {rendered}, span {span_s}"),
        }
        if let Some(s) = &specs {
            for c in s {
                let status = if c.status { "pass" } else { "FAIL" };
                println!("  {status}  {}  (residual {})", c.check, c.residual);
            }
        }
        if let Some((b, imp)) = alex_bound {
            let cmp = match imp {
                Some(true) => "LG bound is at least as strong",
                Some(false) => "Alexander bound is stronger",
                None => "no comparison",
            };
            println!("  Alexander genus bound ≥ {b}; {cmp}");
        }
    }
    if specs.is_some_and(|s| s.iter().any(|c| !c.status)) {
        return Err(CliError::Engine("specialization check failed".into()));
    }
    Ok(())
}

fn cmd_verify(suite: &str, as_json: bool) -> Result<(), CliError> {
    let s: Suite = suite.parse().map_err(CliError::Parse)?;
    let checks = verify::run(s);
    if as_json {
        println!("{}", serde_json::to_string_pretty(&checks).unwrap());
    } else {
        for c in &checks {
            let status = if c.pass { "pass" } else { "FAIL" };
            if c.detail.is_empty() {
                println!("{status}  {}", c.name);
            } else {
                println!("{status}  {}  ({})", c.name, c.detail);
            }
        }
    }
    let failed = checks.iter().filter(|c| !c.pass).count();
    if failed > 0 {
        return Err(CliError::Engine(format!("{failed} of {} checks failed", checks.len())));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match &cli.cmd {
        Some(Cmd::Verify { suite, json }) => cmd_verify(suite, *json),
        None => cmd_lg(&cli),
    };
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                CliError::Parse(_) => 2,
                CliError::Engine(_) => 3,
            })
        }
    }
}
