//! `qpwalks`: classify, analyse and count quarter-plane walk models.

mod count;
mod report;

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use qpwalks::fixtures::{self, ModelEntry};
use qpwalks::par::Exec;
use qpwalks::prover::{decide, Decision, GroupCertificate};
use qpwalks::stepset::{ClassLabel, StepSet};
use qpwalks::suites::{Suite, SuiteReport};

use count::{Counts, Method, Selector};
use report::{Report, Status};

/// Default ceiling on walk lengths.
const DEFAULT_CEILING: usize = 40;

#[derive(Parser, Debug)]
#[command(
    name = "qpwalks",
    version,
    about = "Walks with small steps in the quarter plane"
)]
struct Cli {
    /// Emit a versioned JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the 79 non-equivalent models.
    List(ListArgs),
    /// Decide whether the group of a model is finite, with a certificate.
    Group {
        /// Comma-separated compass steps (`N,SE,W`) or an 8-character mask.
        stepset: String,
    },
    /// Count walks confined to the quarter plane.
    Count(CountArgs),
    /// Run a verification suite.
    Verify {
        /// A suite name, or one of `table5`, `orbit-sums`, `all`.
        suite: String,
    },
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("group_filter").args(["finite", "infinite"])))]
struct ListArgs {
    /// Only models with a finite group.
    #[arg(long)]
    finite: bool,
    /// Only models with an infinite group.
    #[arg(long)]
    infinite: bool,
    /// Only models whose group has this order.
    #[arg(long, value_name = "K")]
    order: Option<u32>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("selector").args(["at", "row", "col", "total"])))]
struct CountArgs {
    /// Comma-separated compass steps or an 8-character mask.
    stepset: String,
    /// Largest walk length; defaults to the ceiling.
    #[arg(short = 'n', long = "length", value_name = "N")]
    length: Option<usize>,
    /// Largest length accepted.
    #[arg(long, env = "QPWALKS_TRUNC", default_value_t = DEFAULT_CEILING)]
    ceiling: usize,
    /// Walks ending at `(i, j)`.
    #[arg(long, value_name = "I,J", value_parser = parse_point)]
    at: Option<(usize, usize)>,
    /// Walks ending at height `j`.
    #[arg(long, value_name = "J")]
    row: Option<usize>,
    /// Walks ending at abscissa `i`.
    #[arg(long, value_name = "I")]
    col: Option<usize>,
    /// All walks, whatever their endpoint.
    #[arg(long)]
    total: bool,
    #[arg(long, value_enum, default_value_t = Method::Dp)]
    method: Method,
    /// Run every applicable method and fail unless they agree.
    #[arg(long, conflicts_with = "method")]
    cross_check: bool,
}

impl CountArgs {
    fn selector(&self) -> Selector {
        match (self.at, self.row, self.col, self.total) {
            (Some((i, j)), ..) => Selector::At { i, j },
            (_, Some(j), ..) => Selector::Row { j },
            (_, _, Some(i), _) => Selector::Col { i },
            (.., true) => Selector::Total,
            _ => Selector::Table,
        }
    }
}

fn parse_point(text: &str) -> std::result::Result<(usize, usize), String> {
    let (i, j) = text
        .split_once(',')
        .ok_or_else(|| format!("expected I,J but got `{text}`"))?;
    let coord = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad coordinate `{s}`: {e}"))
    };
    Ok((coord(i)?, coord(j)?))
}

fn parse_stepset(text: &str) -> Result<StepSet> {
    text.parse()
        .with_context(|| format!("invalid step set `{text}`"))
}

/// What a command produced: text for humans, a payload for `--json`.
struct Outcome {
    models: Vec<StepSet>,
    status: Status,
    text: String,
    payload: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command: Vec<String> = std::env::args().skip(1).collect();
    match run(&cli.command) {
        Ok(out) => {
            if cli.json {
                let models = out.models.iter().map(|m| m.to_binary()).collect();
                let report = Report::new(command, models, out.status, out.payload);
                emit(&format!("{}\n", report.to_json()));
            } else {
                emit(&out.text);
            }
            match out.status {
                Status::Ok => ExitCode::SUCCESS,
                Status::Failed => ExitCode::FAILURE,
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Write to stdout, treating a closed pipe (`qpwalks list | head`) as normal.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::List(args) => Ok(list(args)),
        Command::Group { stepset } => group(parse_stepset(stepset)?),
        Command::Count(args) => count(args),
        Command::Verify { suite } => verify(suite),
    }
}

#[derive(Serialize)]
struct ListRow {
    id: String,
    model: StepSet,
    steps: String,
    size: usize,
    /// `null` for an infinite group.
    group_order: Option<u32>,
    xy_symmetric: bool,
}

fn list(args: &ListArgs) -> Outcome {
    let keep = |m: &ModelEntry| {
        (!args.finite || m.group_order.is_some())
            && (!args.infinite || m.group_order.is_none())
            && args.order.is_none_or(|k| m.group_order == Some(k))
    };
    let rows: Vec<ListRow> = fixtures::models()
        .iter()
        .filter(|m| keep(m))
        .map(|m| ListRow {
            id: m.id(),
            model: m.listed,
            steps: m.listed.to_compass(),
            size: m.listed.len(),
            group_order: m.group_order,
            xy_symmetric: m.listed.is_xy_symmetric(),
        })
        .collect();

    let mut text = format!(
        "{:<7} {:<9} {:<24} {:>4} {:>5} {}\n",
        "id", "mask", "steps", "size", "group", "x/y-sym"
    );
    for r in &rows {
        let order = r.group_order.map_or("inf".to_string(), |k| k.to_string());
        let sym = if r.xy_symmetric { "yes" } else { "" };
        let _ = writeln!(
            text,
            "{:<7} {:<9} {:<24} {:>4} {:>5} {}",
            r.id,
            r.model.to_binary(),
            r.steps,
            r.size,
            order,
            sym
        );
    }
    let _ = writeln!(text, "{} models", rows.len());
    Outcome {
        models: rows.iter().map(|r| r.model).collect(),
        status: Status::Ok,
        payload: json!({ "count": rows.len(), "rows": rows }),
        text,
    }
}

fn group(s: StepSet) -> Result<Outcome> {
    let label = s.classify().label;
    if label != ClassLabel::GenuineQuarterPlane {
        bail!(
            "{s} {{{}}} is not a quarter-plane model: {}",
            s.to_compass(),
            serde_name(&label)
        );
    }
    let certificate = decide(s)?;
    let mut text = format!("model {s} {{{}}}\n", s.to_compass());
    describe_certificate(&mut text, &certificate, "");
    let status = match certificate {
        GroupCertificate::Undetermined => Status::Failed,
        _ => Status::Ok,
    };
    let decision = Decision {
        model: s,
        certificate,
    };
    Ok(Outcome {
        models: vec![s],
        status,
        payload: serde_json::to_value(&decision)?,
        text,
    })
}

fn describe_certificate(text: &mut String, c: &GroupCertificate, indent: &str) {
    match c {
        GroupCertificate::Finite { order, orbit } => {
            let _ = writeln!(
                text,
                "{indent}finite group of order {order}; orbit of (x, y):"
            );
            for (k, e) in orbit.render().iter().enumerate() {
                let _ = writeln!(text, "{indent}  {k}: {e}");
            }
        }
        GroupCertificate::InfiniteValuation { start, trace } => {
            let _ = writeln!(
                text,
                "{indent}infinite: valuations from {start:?} escape after {} steps",
                trace.len()
            );
            if let Some(last) = trace.last() {
                let _ = writeln!(text, "{indent}  last valuation pair {last:?}");
            }
        }
        GroupCertificate::InfiniteFixedPoint { spec, chi_bar } => {
            let _ = writeln!(text, "{indent}infinite: non-torsion fixed point {spec}");
            let _ = writeln!(
                text,
                "{indent}  reduced characteristic polynomial {}",
                chi_bar.display_in("X")
            );
        }
        GroupCertificate::InfiniteBySymmetry {
            symmetry,
            base,
            certificate,
        } => {
            let _ = writeln!(
                text,
                "{indent}infinite: image {base} under {} is infinite",
                serde_name(symmetry)
            );
            describe_certificate(text, certificate, &format!("{indent}  "));
        }
        GroupCertificate::Undetermined => {
            let _ = writeln!(text, "{indent}undetermined: no certificate found");
        }
    }
}

/// The name a value serialises to, for enums of unit variants.
fn serde_name<T: Serialize>(value: &T) -> String {
    match serde_json::to_value(value) {
        Ok(Value::String(name)) => name,
        _ => String::from("?"),
    }
}

fn count(args: &CountArgs) -> Result<Outcome> {
    let s = parse_stepset(&args.stepset)?;
    let max_len = args.length.unwrap_or(args.ceiling);
    if max_len > args.ceiling {
        bail!(
            "length {max_len} exceeds the ceiling {} (raise it with --ceiling or QPWALKS_TRUNC)",
            args.ceiling
        );
    }
    let selector = args.selector();
    let (counts, check) = if args.cross_check {
        let (c, check) = count::cross_check(s, max_len, selector)?;
        (c, Some(check))
    } else {
        (count::compute(s, max_len, selector, args.method)?, None)
    };

    let mut text = match &counts {
        Counts::Table(_) => counts.to_csv(),
        Counts::Sequence(v) => {
            let joined: Vec<String> = v.iter().map(|c| c.to_string()).collect();
            format!("{}\n", joined.join(","))
        }
    };
    let mut status = Status::Ok;
    if let Some(check) = &check {
        let names: Vec<String> = check
            .methods
            .iter()
            .map(|m| format!("{m:?}").to_lowercase())
            .collect();
        if check.agree {
            let _ = writeln!(text, "cross-check: {} agree", names.join(", "));
        } else {
            status = Status::Failed;
            let _ = writeln!(text, "cross-check: {} DISAGREE", names.join(", "));
        }
    }
    let method = if args.cross_check {
        None
    } else {
        Some(args.method)
    };
    Ok(Outcome {
        models: vec![s],
        status,
        payload: json!({
            "max_length": max_len,
            "selector": selector,
            "method": method,
            "cross_check": check,
            "counts": counts,
        }),
        text,
    })
}

fn verify(name: &str) -> Result<Outcome> {
    let suites = Suite::select(name)?;
    let reports: Vec<SuiteReport> = Exec::default().map(&suites, |s| s.run());
    let mut text = String::new();
    for r in &reports {
        let total = r.checks.len();
        let verdict = if r.passed() { "ok" } else { "FAILED" };
        let _ = writeln!(
            text,
            "{}: {}/{total} checks pass ({verdict})",
            r.suite,
            r.passed_count()
        );
        for f in r.failures() {
            let _ = writeln!(text, "  failed: {}: {}", f.name, f.detail);
        }
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    let _ = writeln!(text, "{passed}/{} suites pass", reports.len());
    Ok(Outcome {
        models: Vec::new(),
        status: if passed == reports.len() {
            Status::Ok
        } else {
            Status::Failed
        },
        payload: json!({ "suites": reports }),
        text,
    })
}
