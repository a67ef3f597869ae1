use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use semiclose::classifier;
use semiclose::invariants::{self, StructureReport};
use semiclose::kernel::{self, io, ElementSet, FiniteSemigroup};
use semiclose::oracle::{self, EnumerationSpec, SuiteReport};
use semiclose::symbolic::{self, Engine, DEFAULT_EXPANSION_LIMIT};
use semiclose::SymbolicSemigroup;

const EXIT_COUNTEREXAMPLES: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "semiclose",
    version,
    about = "Structure and closedness analysis of semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural report: idempotents, subgroups, centers, viability, reflection, exponent.
    Analyze(ReportArgs),
    /// Closedness verdicts with the conditions behind them.
    Classify(ReportArgs),
    /// Run the law-checking suite over every semigroup up to an order.
    Verify(VerifyArgs),
    /// Count or dump the semigroups of one order.
    Enumerate(EnumerateArgs),
    /// Quotient of a finite semigroup by an ideal or a generated congruence.
    Quotient(QuotientArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Cayley table file (JSON or plain text).
    #[arg(long)]
    table: Option<PathBuf>,
    /// Term such as "Sum(omega, C(2)) * OmegaChain".
    #[arg(long)]
    expr: Option<String>,
}

#[derive(Args)]
struct OutputArgs {
    /// Write here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Args)]
struct ReportArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    out: OutputArgs,
    /// Largest finite term multiplied out into a table.
    #[arg(long, default_value_t = DEFAULT_EXPANSION_LIMIT)]
    expansion_limit: usize,
}

#[derive(Args)]
struct SpecArgs {
    /// Largest order (verify) or the order (enumerate).
    #[arg(long)]
    order: usize,
    #[arg(long)]
    commutative: bool,
    #[arg(long)]
    up_to_iso: bool,
}

impl SpecArgs {
    fn spec(&self) -> EnumerationSpec {
        EnumerationSpec {
            order: self.order,
            commutative_only: self.commutative,
            up_to_isomorphism: self.up_to_iso,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Emit every table as one JSON line instead of the count.
    #[arg(long)]
    dump: bool,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
#[group(id = "collapse", required = true, multiple = false, args = ["ideal", "pairs"])]
struct QuotientArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Comma-separated elements of an ideal to collapse, e.g. "0,2".
    #[arg(long)]
    ideal: Option<String>,
    /// Comma-separated pairs generating a congruence, e.g. "0:1,2:3".
    #[arg(long)]
    pairs: Option<String>,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Analyze(args) => analyze(&args),
        Command::Classify(args) => classify(&args),
        Command::Verify(args) => verify(&args),
        Command::Enumerate(args) => enumerate(&args),
        Command::Quotient(args) => quotient(&args),
    }
}

fn load_input(input: &InputArgs) -> Result<SymbolicSemigroup> {
    match (&input.table, &input.expr) {
        (Some(path), None) => {
            let s = io::load_table(path).with_context(|| format!("loading {}", path.display()))?;
            Ok(SymbolicSemigroup::table(path.display().to_string(), s))
        }
        (None, Some(text)) => {
            symbolic::parse_dsl(text).with_context(|| format!("parsing {text:?}"))
        }
        _ => bail!("exactly one of --table and --expr is required"),
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<()> {
    let text = if text.ends_with('\n') {
        text.to_string()
    } else {
        format!("{text}\n")
    };
    match output {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn set_text(s: &FiniteSemigroup, set: &ElementSet) -> String {
    let items: Vec<String> = set.iter().map(|x| s.label(x)).collect();
    format!("{{{}}}", items.join(", "))
}

fn structure_markdown(input: &str, s: &FiniteSemigroup, r: &StructureReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Structure of `{input}`\n");
    let _ = writeln!(out, "- order: {}", r.order);
    let _ = writeln!(out, "- commutative: {}", r.commutative);
    let _ = writeln!(out, "- E: {}", set_text(s, &r.idempotents));
    let hasse: Vec<String> = r
        .natural_order_hasse
        .iter()
        .map(|&(e, f)| format!("{} < {}", s.label(e), s.label(f)))
        .collect();
    let _ = writeln!(out, "- natural order covers: {}", hasse.join(", "));
    let groups: Vec<String> = r
        .maximal_subgroup_orders
        .iter()
        .map(|g| format!("|H_{}| = {}", s.label(g.idempotent), g.order))
        .collect();
    let _ = writeln!(out, "- maximal subgroups: {}", groups.join(", "));
    let _ = writeln!(out, "- H: {}", set_text(s, &r.clifford_part));
    let _ = writeln!(out, "- Z: {}", set_text(s, &r.center));
    let _ = writeln!(out, "- IZ: {}", set_text(s, &r.ideal_center));
    let _ = writeln!(out, "- VE: {}", set_text(s, &r.viable_idempotents));
    let _ = writeln!(
        out,
        "- semilattice reflection order: {}",
        r.reflection_order
    );
    let exponent = match r.exponent.finite() {
        Some(n) => n.to_string(),
        None => "unbounded".to_string(),
    };
    let _ = writeln!(out, "- exponent: {exponent}");
    out
}

fn analyze(args: &ReportArgs) -> Result<ExitCode> {
    let term = load_input(&args.input)?;
    let input = term.to_string();
    let text = match term.to_finite(args.expansion_limit) {
        Some(s) => {
            let report = invariants::structure_report(&s);
            match args.out.format {
                Format::Json => serde_json::to_string_pretty(&serde_json::json!({
                    "input": input,
                    "finite": true,
                    "structure": report,
                }))?,
                Format::Markdown => structure_markdown(&input, &s, &report),
            }
        }
        None => {
            let engine = Engine {
                expand_finite: true,
                expansion_limit: args.expansion_limit,
            };
            let verdicts = engine.eval_all(&term);
            match args.out.format {
                Format::Json => {
                    let predicates: serde_json::Map<String, serde_json::Value> = verdicts
                        .iter()
                        .map(|(p, v)| Ok((p.key().to_string(), serde_json::to_value(v)?)))
                        .collect::<Result<_, serde_json::Error>>()?;
                    serde_json::to_string_pretty(&serde_json::json!({
                        "input": input,
                        "finite": false,
                        "predicates": predicates,
                    }))?
                }
                Format::Markdown => {
                    let mut out = format!("# Predicates of `{input}`\n\n| predicate | verdict | rule | reason |\n|---|---|---|---|\n");
                    for (p, v) in &verdicts {
                        let reason = match v.exponent {
                            Some(n) => format!("{} (exponent {n})", v.citation),
                            None => v.citation.clone(),
                        };
                        let _ = writeln!(
                            out,
                            "| {} | {} | {} | {} |",
                            p.label(),
                            v.value,
                            v.rule,
                            reason
                        );
                    }
                    out
                }
            }
        }
    };
    emit(&args.out.output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn classify(args: &ReportArgs) -> Result<ExitCode> {
    let term = load_input(&args.input)?;
    let engine = Engine {
        expand_finite: true,
        expansion_limit: args.expansion_limit,
    };
    let report = classifier::classify_with(&engine, &term);
    if let Err(violation) = classifier::check_implication_chain(&report) {
        bail!("internal error: report violates the implication chain: {violation}");
    }
    let text = match args.out.format {
        Format::Json => report.to_json(),
        Format::Markdown => report.to_markdown(),
    };
    emit(&args.out.output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn suite_markdown(r: &SuiteReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Law-checking suite\n\n{}\n", r.banner);
    let _ = writeln!(
        out,
        "Orders 1..={} (commutative only: {}, up to isomorphism: {}); {} semigroups in {:.2} s.\n",
        r.spec.order,
        r.spec.commutative_only,
        r.spec.up_to_isomorphism,
        r.semigroups_checked,
        r.wall_time_seconds
    );
    let _ = writeln!(
        out,
        "| check | cases | passed | failed |\n|---|---|---|---|"
    );
    for c in &r.checks {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} |",
            c.name, c.cases, c.passed, c.failed
        );
    }
    for c in &r.counterexamples {
        let _ = writeln!(out, "\n- `{}` on {:?}: {}", c.check, c.table, c.witness);
    }
    out
}

fn verify(args: &VerifyArgs) -> Result<ExitCode> {
    let report = oracle::run_lemma_suite(&args.spec.spec())?;
    let text = match args.out.format {
        Format::Json => report.to_json(),
        Format::Markdown => suite_markdown(&report),
    };
    emit(&args.out.output, &text)?;
    Ok(if report.is_clean() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_COUNTEREXAMPLES)
    })
}

fn enumerate(args: &EnumerateArgs) -> Result<ExitCode> {
    let spec = args.spec.spec();
    let all = oracle::enumerate(&spec)?;
    let text = if args.dump {
        all.iter().map(io::to_json).collect::<Vec<_>>().join("\n")
    } else {
        serde_json::to_string_pretty(&serde_json::json!({ "spec": spec, "count": all.len() }))?
    };
    emit(&args.output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn element(s: &FiniteSemigroup, token: &str) -> Result<usize> {
    let token = token.trim();
    let x = match token.parse::<usize>() {
        Ok(x) => x,
        Err(_) => s
            .names()
            .and_then(|names| names.iter().position(|n| n == token))
            .ok_or_else(|| anyhow!("{token:?} is neither an element index nor a name"))?,
    };
    s.check_element(x)?;
    Ok(x)
}

fn quotient(args: &QuotientArgs) -> Result<ExitCode> {
    let term = load_input(&args.input)?;
    let s = term.to_finite(DEFAULT_EXPANSION_LIMIT).ok_or_else(|| {
        anyhow!("{term} is not a finite semigroup of at most {DEFAULT_EXPANSION_LIMIT} elements")
    })?;
    let (q, _) = match (&args.ideal, &args.pairs) {
        (Some(ideal), None) => {
            let members = ideal
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| element(&s, t))
                .collect::<Result<Vec<_>>>()?;
            kernel::rees_quotient(&s, &ElementSet::from_indices(s.order(), members))?
        }
        (None, Some(pairs)) => {
            let pairs = pairs
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| {
                    let (a, b) = t
                        .split_once(':')
                        .ok_or_else(|| anyhow!("pair {t:?} should look like a:b"))?;
                    Ok((element(&s, a)?, element(&s, b)?))
                })
                .collect::<Result<Vec<_>>>()?;
            let cong = kernel::generated_congruence(&s, pairs)?;
            kernel::quotient(&s, &cong)?
        }
        _ => bail!("exactly one of --ideal and --pairs is required"),
    };
    emit(&args.output, &io::to_json(&q))?;
    Ok(ExitCode::SUCCESS)
}
