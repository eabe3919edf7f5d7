//! The `konvex` command line: load carriers, run the subset operations,
//! decide convexity, compute hulls, separate disjoint sets, build
//! quotients, and replay the whole verification suite.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use konvex_cli::input::{load_cayley_file, parse_carrier, parse_multipliers, parse_set};
use konvex_cli::report::{RunReport, EXIT_OK, EXIT_USER, EXIT_VIOLATION};
use konvex_cli::verify;
use konvex_core::carrier::{Elem, Semigroup, Subset};
use konvex_core::convexity::{
    decide_convex_all_n, decide_konvex_all_n, n_convex_witness, n_konvex_witness, sweep_convex,
    sweep_konvex,
};
use konvex_core::error::Error;
use konvex_core::hull::{hull_fixedpoint, hull_formula, quotient, check_cancellation};
use konvex_core::separation::{stone_separate, verify_certificate, Side};
use konvex_core::setalg::{
    preimage_report, scale_report, sumset_power_report, sumset_report, OpReport,
};

#[derive(Parser)]
#[command(
    name = "konvex",
    version,
    about = "Workbench for convex and konvex subsets of commutative semigroups"
)]
struct Cli {
    /// Emit the report as JSON instead of indented text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Load a Cayley-table carrier file and validate it.
    Validate {
        file: PathBuf,
    },
    /// Run one subset operation: scale, preimage, sumset or power.
    Op(OpArgs),
    /// Decide n-convexity or n-konvexity of a set.
    Check(CheckArgs),
    /// Compute the convex hull of a set.
    Hull(HullArgs),
    /// Extend two all-n disjoint sets to complementary convex sides.
    Separate(SeparateArgs),
    /// Build the quotient by the singleton-hull partition.
    Quotient(QuotientArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    Scale,
    Preimage,
    Sumset,
    Power,
}

#[derive(Args)]
struct OpArgs {
    #[arg(value_enum)]
    op: OpKind,
    /// Carrier expression, e.g. cyclic(6) or @table.json.
    #[arg(long)]
    carrier: String,
    /// Multiplier for scale, preimage and power.
    #[arg(short, long)]
    n: Option<u64>,
    /// One set of comma-separated labels; two for sumset.
    #[arg(num_args = 1..=2)]
    sets: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckMode {
    Convex,
    Konvex,
}

#[derive(Args)]
#[command(group(ArgGroup::new("range").required(true).args(["n", "all_n", "n_max"])))]
struct CheckArgs {
    #[arg(value_enum)]
    mode: CheckMode,
    #[arg(long)]
    carrier: String,
    set: String,
    /// Check one multiplier.
    #[arg(long)]
    n: Option<u64>,
    /// Decide every multiplier at once (finite carriers).
    #[arg(long)]
    all_n: bool,
    /// Sweep multipliers 1..=N; evidence, not an all-n proof.
    #[arg(long)]
    n_max: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum HullRoute {
    Formula,
    Fixpoint,
    Both,
}

#[derive(Args)]
struct HullArgs {
    #[arg(long)]
    carrier: String,
    set: String,
    /// ALL, or generators of a multiplicative semigroup, e.g. 2,3.
    #[arg(long, default_value = "ALL")]
    multipliers: String,
    #[arg(long, value_enum, default_value_t = HullRoute::Both)]
    method: HullRoute,
}

#[derive(Args)]
struct SeparateArgs {
    #[arg(long)]
    carrier: String,
    a0: String,
    b0: String,
    /// Write the certificate as JSON.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct QuotientArgs {
    #[arg(long)]
    carrier: String,
    #[arg(long, default_value = "ALL")]
    multipliers: String,
    /// Write classes and the quotient table as JSON.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest carrier order the sampled checks draw from.
    #[arg(long, default_value_t = 8)]
    order_cap: usize,
    /// Sampling seed; falls back to KONVEX_SEED, then a fixed default.
    #[arg(long)]
    seed: Option<u64>,
    /// Corrupt one frozen expectation to prove failures are detected.
    #[arg(long)]
    inject_fault: bool,
}

fn labels(s: &Semigroup, set: &Subset) -> Value {
    json!(s.sorted_labels(set))
}

fn op_outcome(s: &Semigroup, rep: &OpReport) -> Value {
    json!({ "result": labels(s, &rep.result), "saturated": rep.saturated })
}

fn cmd_validate(file: &Path) -> Result<RunReport, Error> {
    let s = load_cayley_file(file)?;
    Ok(RunReport {
        command: "validate".into(),
        inputs: json!({ "file": file.display().to_string() }),
        outcome: json!({
            "name": s.name(),
            "order": s.order(),
            "elements": s.labels().map(<[String]>::to_vec),
        }),
        properties: vec![
            "operation is commutative".into(),
            "operation is associative".into(),
        ],
        exit_code: EXIT_OK,
    })
}

fn cmd_op(args: &OpArgs) -> Result<RunReport, Error> {
    let s = parse_carrier(&args.carrier)?;
    let need = |label: &str| {
        args.n
            .ok_or_else(|| Error::BadParams(format!("{label} needs a multiplier (-n)")))
    };
    let (name, property, inputs, rep) = match args.op {
        OpKind::Sumset => {
            if args.sets.len() != 2 {
                return Err(Error::BadParams("sumset takes two sets".into()));
            }
            if args.n.is_some() {
                return Err(Error::BadParams("sumset takes no multiplier".into()));
            }
            let a = parse_set(&s, &args.sets[0])?;
            let b = parse_set(&s, &args.sets[1])?;
            let inputs = json!({ "carrier": s.name(), "A": labels(&s, &a), "B": labels(&s, &b) });
            ("sumset", "A+B = {a+b : a in A, b in B}", inputs, sumset_report(&s, &a, &b)?)
        }
        kind => {
            if args.sets.len() != 1 {
                return Err(Error::BadParams("this operation takes one set".into()));
            }
            let a = parse_set(&s, &args.sets[0])?;
            let (name, property, rep) = match kind {
                OpKind::Scale => {
                    ("scale", "nA = {nx : x in A}", scale_report(&s, need("scale")?, &a)?)
                }
                OpKind::Preimage => (
                    "preimage",
                    "n^-1 A = {x : nx in A}",
                    preimage_report(&s, need("preimage")?, &a)?,
                ),
                OpKind::Power => (
                    "power",
                    "[n]A = A + ... + A, n summands",
                    sumset_power_report(&s, need("power")?, &a)?,
                ),
                OpKind::Sumset => unreachable!(),
            };
            let inputs = json!({ "carrier": s.name(), "n": args.n, "A": labels(&s, &a) });
            (name, property, inputs, rep)
        }
    };
    Ok(RunReport {
        command: format!("op {name}"),
        inputs,
        outcome: op_outcome(&s, &rep),
        properties: vec![property.into()],
        exit_code: EXIT_OK,
    })
}

fn cmd_check(args: &CheckArgs) -> Result<RunReport, Error> {
    let s = parse_carrier(&args.carrier)?;
    let a = parse_set(&s, &args.set)?;
    let (mode, defining) = match args.mode {
        CheckMode::Convex => ("convex", "n-convex: n^-1([n]A) <= A"),
        CheckMode::Konvex => ("konvex", "n-konvex: [n]A <= nA"),
    };
    let mut properties = vec![defining.to_string()];
    let (range, outcome) = if let Some(n) = args.n {
        let witness = match args.mode {
            CheckMode::Convex => n_convex_witness(&s, n, &a)?,
            CheckMode::Konvex => n_konvex_witness(&s, n, &a)?,
        };
        let o = match witness {
            None => json!({ "verdict": "holds" }),
            Some(w) => json!({ "verdict": "fails", "witness": s.label(w) }),
        };
        (json!({ "n": n }), o)
    } else if args.all_n {
        let d = match args.mode {
            CheckMode::Convex => decide_convex_all_n(&s, &a)?,
            CheckMode::Konvex => decide_konvex_all_n(&s, &a)?,
        };
        properties.push("eventually periodic orbit: tail + one cycle settles every n".into());
        let o = if d.holds() {
            json!({ "verdict": "holds for all n", "tail": d.tail, "cycle": d.cycle })
        } else {
            json!({
                "verdict": "fails",
                "witness_n": d.witness_n,
                "witness": d.witness_element.map(|w| s.label(w)),
                "tail": d.tail,
                "cycle": d.cycle,
            })
        };
        (json!({ "all_n": true }), o)
    } else {
        let n_max = args.n_max.expect("range group guarantees one");
        let first = match args.mode {
            CheckMode::Convex => sweep_convex(&s, &a, n_max)?,
            CheckMode::Konvex => sweep_konvex(&s, &a, n_max)?,
        };
        properties.push("bounded sweep: evidence only, not an all-n proof".into());
        let o = match first {
            None => json!({ "verdict": format!("holds for n <= {n_max}") }),
            Some((n, w)) => {
                json!({ "verdict": "fails", "first_n": n, "witness": s.label(w) })
            }
        };
        (json!({ "n_max": n_max }), o)
    };
    Ok(RunReport {
        command: format!("check {mode}"),
        inputs: json!({ "carrier": s.name(), "A": labels(&s, &a), "range": range }),
        outcome,
        properties,
        exit_code: EXIT_OK,
    })
}

fn cmd_hull(args: &HullArgs) -> Result<RunReport, Error> {
    let s = parse_carrier(&args.carrier)?;
    let a = parse_set(&s, &args.set)?;
    let f = parse_multipliers(&args.multipliers)?;
    let inputs = json!({
        "carrier": s.name(),
        "A": labels(&s, &a),
        "multipliers": args.multipliers,
    });
    let mut properties = vec![
        "hull is the least F-convex superset: extensive, monotone, idempotent".into(),
    ];
    let (outcome, exit_code) = match args.method {
        HullRoute::Formula => {
            let h = hull_formula(&s, &f, &a)?;
            properties.push("closed multiplier set: hull = union of n^-1([n]A)".into());
            (
                json!({ "hull": labels(&s, &h.set), "contributing": h.contributing }),
                EXIT_OK,
            )
        }
        HullRoute::Fixpoint => {
            let h = hull_fixedpoint(&s, &f, &a)?;
            (
                json!({ "hull": labels(&s, &h.set), "rounds": h.rounds }),
                EXIT_OK,
            )
        }
        HullRoute::Both => {
            let formula = hull_formula(&s, &f, &a)?;
            let fixed = hull_fixedpoint(&s, &f, &a)?;
            properties.push("two independent routes computed the same set".into());
            if formula.set == fixed.set {
                (
                    json!({
                        "hull": labels(&s, &formula.set),
                        "contributing": formula.contributing,
                        "rounds": fixed.rounds,
                        "methods_agree": true,
                    }),
                    EXIT_OK,
                )
            } else {
                (
                    json!({
                        "methods_agree": false,
                        "formula": labels(&s, &formula.set),
                        "fixpoint": labels(&s, &fixed.set),
                    }),
                    EXIT_VIOLATION,
                )
            }
        }
    };
    Ok(RunReport { command: "hull".into(), inputs, outcome, properties, exit_code })
}

fn side_label(side: Side) -> &'static str {
    match side {
        Side::A => "A",
        Side::B => "B",
    }
}

fn cmd_separate(args: &SeparateArgs) -> Result<RunReport, Error> {
    let s = parse_carrier(&args.carrier)?;
    let a0 = parse_set(&s, &args.a0)?;
    let b0 = parse_set(&s, &args.b0)?;
    let cert = stone_separate(&s, &a0, &b0)?;
    let violations = verify_certificate(&s, &cert, &a0, &b0)?;

    let log: Vec<Value> = cert
        .log
        .iter()
        .map(|e| json!({ "element": s.label(e.element), "side": side_label(e.side) }))
        .collect();
    let mut certificate = json!({
        "A": labels(&s, &cert.a),
        "B": labels(&s, &cert.b),
        "insertion_log": log,
        "evidence": { "tail": cert.evidence.tail, "cycle": cert.evidence.cycle },
        "convex": { "A": cert.convex_a, "B": cert.convex_b },
    });
    if let (Some(ka), Some(kb)) = (cert.konvex_a, cert.konvex_b) {
        certificate["konvex"] = json!({ "S": cert.carrier_konvex, "A": ka, "B": kb });
    }
    if let Some(path) = &args.out {
        write_json(path, &certificate)?;
    }

    let mut properties = vec![
        "sides are complementary and contain the inputs".into(),
        "no [n]A meets [n]B, certified over tail + cycle".into(),
        "both sides are convex".into(),
    ];
    if cert.carrier_konvex {
        properties.push("konvex carrier: both sides are konvex".into());
    }
    let exit_code = if violations.is_empty() { EXIT_OK } else { EXIT_VIOLATION };
    Ok(RunReport {
        command: "separate".into(),
        inputs: json!({
            "carrier": s.name(),
            "A0": labels(&s, &a0),
            "B0": labels(&s, &b0),
            "out": args.out.as_ref().map(|p| p.display().to_string()),
        }),
        outcome: json!({ "certificate": certificate, "violations": violations }),
        properties,
        exit_code,
    })
}

fn carrier_json(s: &Semigroup) -> Result<Value, Error> {
    let labels = s
        .labels()
        .ok_or(Error::SymbolicUnsupported)?
        .to_vec();
    let order = labels.len() as u32;
    let mut table = Vec::with_capacity(order as usize);
    for i in 0..order {
        let mut row = Vec::with_capacity(order as usize);
        for j in 0..order {
            row.push(s.label(s.add(Elem::Idx(i), Elem::Idx(j))?));
        }
        table.push(row);
    }
    Ok(json!({ "elements": labels, "table": table }))
}

fn cmd_quotient(args: &QuotientArgs) -> Result<RunReport, Error> {
    let s = parse_carrier(&args.carrier)?;
    let f = parse_multipliers(&args.multipliers)?;
    let q = quotient(&s, &f)?;
    let cancellation = check_cancellation(&s, &f, &q)?;
    let classes: Vec<Value> = q.classes.iter().map(|c| labels(&s, c)).collect();
    let payload = json!({ "classes": classes, "quotient": carrier_json(&q.quotient)? });
    if let Some(path) = &args.out {
        write_json(path, &payload)?;
    }
    let exit_code = if cancellation.is_empty() { EXIT_OK } else { EXIT_VIOLATION };
    Ok(RunReport {
        command: "quotient".into(),
        inputs: json!({
            "carrier": s.name(),
            "multipliers": args.multipliers,
            "out": args.out.as_ref().map(|p| p.display().to_string()),
        }),
        outcome: json!({
            "classes": payload["classes"],
            "quotient_order": q.classes.len(),
            "quotient": payload["quotient"],
            "cancellation_violations": cancellation.len(),
        }),
        properties: vec![
            "singleton hulls partition the carrier".into(),
            "class addition is independent of representatives".into(),
            "multiplication by every n in F cancels in the quotient".into(),
        ],
        exit_code,
    })
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, Error> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("KONVEX_SEED") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| Error::BadParams(format!("KONVEX_SEED must be an integer, got {text:?}"))),
        Err(_) => Ok(verify::DEFAULT_SEED),
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<RunReport, Error> {
    let seed = resolve_seed(args.seed)?;
    let outcomes = verify::run_all(args.order_cap, seed, args.inject_fault);
    let checks: Vec<Value> = outcomes
        .iter()
        .map(|o| json!({ "index": o.index, "name": o.name, "pass": o.pass, "detail": o.detail }))
        .collect();
    let passed = outcomes.iter().filter(|o| o.pass).count();
    let exit_code = if verify::all_pass(&outcomes) { EXIT_OK } else { EXIT_VIOLATION };
    Ok(RunReport {
        command: "verify".into(),
        inputs: json!({
            "order_cap": args.order_cap,
            "seed": seed,
            "inject_fault": args.inject_fault,
        }),
        outcome: json!({
            "checks": checks,
            "passed": passed,
            "failed": outcomes.len() - passed,
        }),
        properties: vec![],
        exit_code,
    })
}

fn write_json(path: &Path, value: &Value) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value).expect("value serializes");
    std::fs::write(path, text + "\n")
        .map_err(|e| Error::BadParams(format!("cannot write {}: {e}", path.display())))
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Validate { .. } => "validate",
        Command::Op(_) => "op",
        Command::Check(_) => "check",
        Command::Hull(_) => "hull",
        Command::Separate(_) => "separate",
        Command::Quotient(_) => "quotient",
        Command::Verify(_) => "verify",
    }
}

fn dispatch(command: &Command) -> Result<RunReport, Error> {
    match command {
        Command::Validate { file } => cmd_validate(file),
        Command::Op(args) => cmd_op(args),
        Command::Check(args) => cmd_check(args),
        Command::Hull(args) => cmd_hull(args),
        Command::Separate(args) => cmd_separate(args),
        Command::Quotient(args) => cmd_quotient(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = dispatch(&cli.command).unwrap_or_else(|e| {
        let exit_code = if e.is_violation() { EXIT_VIOLATION } else { EXIT_USER };
        RunReport {
            command: command_name(&cli.command).into(),
            inputs: Value::Null,
            outcome: json!({ "error": e.to_string() }),
            properties: vec![],
            exit_code,
        }
    });
    report.print(cli.json);
    ExitCode::from(report.exit_code as u8)
}
