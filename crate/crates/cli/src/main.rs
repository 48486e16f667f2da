use std::collections::HashMap;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use flc_core::characters::{self, char_so_even};
use flc_core::tableaux;
use flc_core::verify::{self, Fault, VerifyOptions};
use flc_core::{CharSpec, Group, HKind, Method, Poly, Tableau, VarId};

/// Factorial characters of gl(n), sp(2n), so(2n+1), o(2n) and so(2n)±.
#[derive(Parser)]
#[command(name = "flc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a character.
    Char(CharArgs),
    /// List the weighted tableaux of a character.
    Tableaux(TargetArgs),
    /// Run the identity suites.
    Verify(VerifyArgs),
    /// Dimension of the classical module (a = 0, x = xb = 1).
    Dim(TargetArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct TargetArgs {
    /// gl, sp, so-odd, o-even, o-even-diff, so-even-plus, so-even-minus
    /// (also oo, eo, eod).
    #[arg(long, value_parser = parse_group)]
    group: Group,
    #[arg(long)]
    rank: u32,
    /// Comma-separated parts, padded with zeros to the rank.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

impl TargetArgs {
    fn spec(&self) -> anyhow::Result<CharSpec> {
        CharSpec::parse(self.group, self.rank, &self.lambda).context("invalid --lambda")
    }
}

#[derive(Args)]
struct CharArgs {
    #[command(flatten)]
    target: TargetArgs,
    /// alternant, jacobi-trudi, tableaux, raw, or all.
    #[arg(long, default_value = "jacobi-trudi")]
    method: String,
    /// Set every a_j to zero.
    #[arg(long)]
    zero_a: bool,
    /// Substitute integers, e.g. `--eval x1=2,a1=0`.
    #[arg(long, value_delimiter = ',')]
    eval: Vec<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 3)]
    max_rank: u32,
    #[arg(long, default_value_t = 3)]
    max_part: u32,
    /// Comma-separated group names; all groups when omitted.
    #[arg(long, value_delimiter = ',', value_parser = parse_group)]
    groups: Vec<Group>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Negative control: shifts every unbarred tableau weight index.
    #[arg(long, hide = true, default_value_t = 0, allow_hyphen_values = true)]
    inject_fault: i32,
}

fn parse_group(s: &str) -> Result<Group, String> {
    s.parse().map_err(|e: flc_core::Error| e.to_string())
}

/// Outcome of a successful run: whether to report a disagreement.
enum Status {
    Ok,
    Mismatch,
}

fn header(spec: &CharSpec) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("group".into(), json!(spec.group.name()));
    m.insert("rank".into(), json!(spec.rank));
    m.insert("lambda".into(), json!(spec.lambda.parts()));
    m
}

fn parse_point(assignments: &[String]) -> anyhow::Result<HashMap<VarId, BigInt>> {
    assignments
        .iter()
        .filter(|s| !s.is_empty())
        .map(|s| {
            let (var, value) = s
                .split_once('=')
                .ok_or_else(|| anyhow!("expected var=int, got `{s}`"))?;
            let var: VarId = var.trim().parse().with_context(|| format!("bad variable in `{s}`"))?;
            let value: BigInt = value.trim().parse().with_context(|| format!("bad integer in `{s}`"))?;
            Ok((var, value))
        })
        .collect()
}

fn compute(spec: &CharSpec, method: Method) -> flc_core::Result<Poly> {
    match spec.group {
        Group::SoEvenPlus | Group::SoEvenMinus => char_so_even(spec, method),
        _ => characters::character(spec, method),
    }
}

fn cmd_char(args: &CharArgs) -> anyhow::Result<Status> {
    let spec = args.target.spec()?;
    let point = parse_point(&args.eval)?;
    let finish = |p: Poly| {
        let p = if args.zero_a { p.zero_a() } else { p };
        p.substitute_integers(&point)
    };
    let methods: Vec<Method> = if args.method == "all" {
        Method::ALL.to_vec()
    } else {
        vec![args.method.parse().context("invalid --method")?]
    };
    let results = methods
        .iter()
        .map(|&m| compute(&spec, m).map(&finish).with_context(|| format!("{m} failed")))
        .collect::<anyhow::Result<Vec<Poly>>>()?;

    if let [single] = results.as_slice() {
        match args.target.format {
            Format::Text => println!("{single}"),
            Format::Json => {
                let mut doc = header(&spec);
                doc.insert("polynomial".into(), single.to_json());
                println!("{}", Value::Object(doc));
            }
        }
        return Ok(Status::Ok);
    }

    // gl is compared structurally; the paired families as Laurent polynomials
    let agree = results.windows(2).all(|w| {
        if spec.group == Group::Gl {
            w[0] == w[1]
        } else {
            w[0].eq_mod_inverse_pairs(&w[1])
        }
    });
    let verdict = if agree { "AGREE" } else { "DISAGREE" };
    match args.target.format {
        Format::Text => {
            for (m, p) in methods.iter().zip(&results) {
                println!("{m}: {p}");
            }
            println!("{verdict}");
        }
        Format::Json => {
            let mut doc = header(&spec);
            let per: serde_json::Map<String, Value> = methods
                .iter()
                .zip(&results)
                .map(|(m, p)| (m.name().to_string(), p.to_json()))
                .collect();
            doc.insert("methods".into(), Value::Object(per));
            doc.insert("verdict".into(), json!(verdict));
            println!("{}", Value::Object(doc));
        }
    }
    Ok(if agree { Status::Ok } else { Status::Mismatch })
}

/// The weight as a product of its non-trivial cell factors.
fn factored(t: &Tableau, kind: HKind, n: u32) -> String {
    let factors: Vec<Poly> = tableaux::weight_factors(t, kind, n)
        .into_iter()
        .flatten()
        .filter(|f| !f.is_one())
        .collect();
    match factors.as_slice() {
        [] => "1".to_string(),
        [single] => single.to_string(),
        _ => factors
            .iter()
            .map(|f| if f.len() > 1 { format!("({f})") } else { format!("{f}*") })
            .collect::<String>()
            .replace("*(", "(")
            .trim_end_matches('*')
            .to_string(),
    }
}

fn cmd_tableaux(args: &TargetArgs) -> anyhow::Result<Status> {
    let spec = args.spec()?;
    let kind = match spec.group.hkind() {
        Some(HKind::Eod) | None => HKind::Eo,
        Some(k) => k,
    };
    let list = tableaux::weighted_tableaux(&spec)?;
    let sum: Poly = list
        .iter()
        .map(|w| w.weight.scale(&BigInt::from(w.coeff)))
        .sum();
    match args.format {
        Format::Text => {
            for w in &list {
                println!(
                    "{}  weight: {}  zeta: {}  bar: {}  c: {}",
                    w.tableau.render_inline(),
                    factored(&w.tableau, kind, spec.rank),
                    w.stats.zeta,
                    w.stats.bar,
                    w.coeff
                );
            }
            println!("count: {}  sum: {sum}", list.len());
        }
        Format::Json => {
            let mut doc = header(&spec);
            let entries: Vec<Value> = list
                .iter()
                .map(|w| {
                    json!({
                        "tableau": w.tableau.to_json(),
                        "weight": w.weight.to_json(),
                        "zeta": w.stats.zeta,
                        "bar": w.stats.bar,
                        "coeff": w.coeff,
                    })
                })
                .collect();
            doc.insert("tableaux".into(), Value::Array(entries));
            doc.insert("count".into(), json!(list.len()));
            doc.insert("sum".into(), sum.to_json());
            println!("{}", Value::Object(doc));
        }
    }
    Ok(Status::Ok)
}

fn cmd_verify(args: &VerifyArgs) -> anyhow::Result<Status> {
    if args.max_rank == 0 {
        bail!("--max-rank must be at least 1");
    }
    let opts = VerifyOptions {
        max_rank: args.max_rank,
        max_part: args.max_part,
        groups: (!args.groups.is_empty()).then(|| args.groups.clone()),
        fault: Fault(args.inject_fault),
    };
    let report = verify::run(&opts);
    match args.format {
        Format::Text => print!("{report}"),
        Format::Json => println!("{}", serde_json::to_string(&report)?),
    }
    Ok(if report.all_passed() {
        Status::Ok
    } else {
        Status::Mismatch
    })
}

fn cmd_dim(args: &TargetArgs) -> anyhow::Result<Status> {
    let spec = args.spec()?;
    if spec.group == Group::OEvenDiff {
        bail!("o-even-diff is a virtual character; use so-even-plus or so-even-minus");
    }
    let c = compute(&spec, Method::JacobiTrudi)?;
    let point = c
        .variables()
        .into_iter()
        .map(|v| (v, BigInt::from(u8::from(!v.is_a()))))
        .collect();
    let d = c.eval_integer(&point)?;
    match args.format {
        Format::Text => println!("{d}"),
        Format::Json => {
            let mut doc = header(&spec);
            doc.insert("dimension".into(), json!(d.to_string()));
            println!("{}", Value::Object(doc));
        }
    }
    Ok(Status::Ok)
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var("FLC_THREADS") {
        let n: usize = v.parse().context("FLC_THREADS must be a positive integer")?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring the thread pool")?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let run = || -> anyhow::Result<Status> {
        configure_threads()?;
        match &cli.command {
            Command::Char(a) => cmd_char(a),
            Command::Tableaux(a) => cmd_tableaux(a),
            Command::Verify(a) => cmd_verify(a),
            Command::Dim(a) => cmd_dim(a),
        }
    };
    match run() {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Mismatch) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
