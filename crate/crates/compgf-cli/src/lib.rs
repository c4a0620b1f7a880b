//! The `compgf` command line: print tracked series, tabulate counts and
//! statistic totals, and run the verification suites.
//!
//! Exit codes: 0 success, 1 a verification suite found an unexpected
//! discrepancy, 2 usage error. Identical invocations produce byte-identical
//! output.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use compgf::checks::{self, CheckReport};
use compgf::engine::{self, CompositionClass, StatisticName};
use compgf::partsets::{parse_set, PartSet};
use compgf::polyseries::{Marker, TruncatedSeries};

mod output;

use output::{JsonDocument, Row};

#[derive(Parser, Debug)]
#[command(name = "compgf", version, about = "Exact composition-statistics generating functions")]
pub struct Cli {
    /// Upper bound accepted for --n-max, to bound runtime.
    #[arg(long, global = true, default_value_t = 40)]
    pub ceiling: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tabulate counts, statistic totals or the joint distribution by size.
    Table(TableArgs),
    /// Print the tracked series in canonical term order.
    Gf(GfArgs),
    /// Run a verification suite and report per-item verdicts.
    Check(CheckArgs),
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub class: ClassArg,
    /// Part alphabet: `N`, `odd`, `N\{k}`, a comma list like `1,2`, or `a..b`.
    #[arg(long)]
    pub set: String,
    #[arg(long, value_enum)]
    pub stat: StatArg,
    #[arg(long)]
    pub n_max: usize,
    /// Restrict to objects with exactly this many parts.
    #[arg(long)]
    pub parts: Option<u32>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
}

#[derive(Args, Debug)]
pub struct GfArgs {
    #[arg(long, value_enum)]
    pub class: ClassArg,
    #[arg(long)]
    pub set: String,
    #[arg(long)]
    pub n_max: usize,
    /// Marker substitutions, e.g. `y=1,r=1,l=0,d=1` (integers only).
    #[arg(long)]
    pub at: Option<String>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long, value_enum)]
    pub suite: SuiteArg,
    /// Sweep depth; defaults depend on the suite.
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassArg {
    Compositions,
    Palindromes,
    Carlitz,
    CarlitzPalindromes,
    Partitions,
}

impl ClassArg {
    fn class(self) -> CompositionClass {
        match self {
            ClassArg::Compositions => CompositionClass::Compositions,
            ClassArg::Palindromes => CompositionClass::Palindromes,
            ClassArg::Carlitz => CompositionClass::Carlitz,
            ClassArg::CarlitzPalindromes => CompositionClass::CarlitzPalindromes,
            ClassArg::Partitions => CompositionClass::Partitions,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StatArg {
    Count,
    Parts,
    Rises,
    Levels,
    Drops,
    Joint,
}

impl StatArg {
    fn statistic(self) -> Option<StatisticName> {
        match self {
            StatArg::Parts => Some(StatisticName::Parts),
            StatArg::Rises => Some(StatisticName::Rises),
            StatArg::Levels => Some(StatisticName::Levels),
            StatArg::Drops => Some(StatisticName::Drops),
            StatArg::Count | StatArg::Joint => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteArg {
    Oracle,
    Catalog,
    Identities,
    Paths,
}

impl SuiteArg {
    fn default_n_max(self) -> usize {
        match self {
            SuiteArg::Oracle => 12,
            SuiteArg::Catalog => 20,
            SuiteArg::Identities => 12,
            SuiteArg::Paths => 10,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormatArg {
    Text,
    Csv,
    Json,
}

/// Everything a run produces; `main` prints and exits accordingly.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn usage(message: impl Into<String>) -> Outcome {
    Outcome {
        stdout: String::new(),
        stderr: format!("error: {}\n", message.into()),
        code: 2,
    }
}

fn done(stdout: String) -> Outcome {
    Outcome {
        stdout,
        stderr: String::new(),
        code: 0,
    }
}

/// Parse and execute an argument vector (excluding the binary name handled
/// by clap itself).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            // clap renders its own message; --help and --version exit 0
            let code = if err.use_stderr() { 2 } else { 0 };
            let rendered = err.render().to_string();
            return if code == 0 {
                Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code,
                }
            };
        }
    };
    let ceiling = cli.ceiling;
    match cli.command {
        Command::Table(args) => run_table(args, ceiling),
        Command::Gf(args) => run_gf(args, ceiling),
        Command::Check(args) => run_check(args, ceiling),
    }
}

fn check_ceiling(n_max: usize, ceiling: usize) -> Result<(), Outcome> {
    if n_max > ceiling {
        Err(usage(format!(
            "--n-max {n_max} exceeds the ceiling {ceiling} (raise --ceiling to allow it)"
        )))
    } else {
        Ok(())
    }
}

fn parse_set_arg(spec: &str) -> Result<PartSet, Outcome> {
    parse_set(spec).map_err(|e| usage(e.to_string()))
}

fn run_table(args: TableArgs, ceiling: usize) -> Outcome {
    if let Err(out) = check_ceiling(args.n_max, ceiling) {
        return out;
    }
    let set = match parse_set_arg(&args.set) {
        Ok(s) => s,
        Err(out) => return out,
    };
    let class = args.class.class();

    let rows: Vec<Row> = match args.stat {
        StatArg::Joint => {
            if args.parts.is_some() {
                return usage("--parts cannot be combined with --stat joint");
            }
            let series = engine::joint_gf(class, &set, args.n_max);
            output::joint_rows(&series)
        }
        StatArg::Count => {
            let keep = args.parts.is_some();
            let mut series = engine::class_gf(class, &set, args.n_max)
                .eval_marker(Marker::Rises, 1)
                .eval_marker(Marker::Levels, 1)
                .eval_marker(Marker::Drops, 1);
            if !keep {
                series = series.eval_marker(Marker::Parts, 1);
            }
            match slice_if_requested(series, args.parts) {
                Ok(s) => output::value_rows(&s),
                Err(out) => return out,
            }
        }
        _ => {
            let stat = args.stat.statistic().expect("joint and count handled");
            let series =
                match engine::statistic_total(class, &set, stat, args.n_max, args.parts.is_some())
                {
                    Ok(s) => s,
                    Err(e) => return usage(e.to_string()),
                };
            match slice_if_requested(series, args.parts) {
                Ok(s) => output::value_rows(&s),
                Err(out) => return out,
            }
        }
    };

    let is_joint = args.stat == StatArg::Joint;
    let body = match args.format {
        FormatArg::Csv => output::rows_to_csv(&rows, is_joint),
        FormatArg::Text => output::rows_to_text(&rows, is_joint),
        FormatArg::Json => {
            let doc = JsonDocument::new(query_json(&args, None), rows_json(&rows), vec![]);
            doc.render()
        }
    };
    done(body)
}

fn slice_if_requested(
    series: TruncatedSeries,
    parts: Option<u32>,
) -> Result<TruncatedSeries, Outcome> {
    match parts {
        None => Ok(series),
        Some(m) => engine::per_parts_slice(&series, m).map_err(|e| usage(e.to_string())),
    }
}

fn run_gf(args: GfArgs, ceiling: usize) -> Outcome {
    if let Err(out) = check_ceiling(args.n_max, ceiling) {
        return out;
    }
    if args.format == FormatArg::Csv {
        return usage("gf output has no CSV form; use text or json");
    }
    let set = match parse_set_arg(&args.set) {
        Ok(s) => s,
        Err(out) => return out,
    };
    let mut series = engine::class_gf(args.class.class(), &set, args.n_max);
    if let Some(at) = &args.at {
        let assignments = match parse_at(at) {
            Ok(a) => a,
            Err(out) => return out,
        };
        for (marker, value) in assignments {
            series = series.eval_marker(marker, value);
        }
    }
    let body = match args.format {
        FormatArg::Text => format!("{series}\n"),
        FormatArg::Json => {
            let doc = JsonDocument::new(
                serde_json::json!({
                    "command": "gf",
                    "class": args.class,
                    "set": args.set,
                    "n_max": args.n_max,
                    "at": args.at,
                    "format": args.format,
                }),
                output::term_rows(&series)
                    .iter()
                    .map(|r| serde_json::to_value(r).expect("serializable"))
                    .collect(),
                vec![],
            );
            doc.render()
        }
        FormatArg::Csv => unreachable!(),
    };
    done(body)
}

fn parse_at(input: &str) -> Result<Vec<(Marker, i64)>, Outcome> {
    let mut out = Vec::new();
    for piece in input.split(',') {
        let piece = piece.trim();
        let Some((name, value)) = piece.split_once('=') else {
            return Err(usage(format!("bad --at assignment '{piece}': expected marker=integer")));
        };
        let marker = match name.trim() {
            "y" => Marker::Parts,
            "r" => Marker::Rises,
            "l" => Marker::Levels,
            "d" => Marker::Drops,
            other => return Err(usage(format!("unknown marker '{other}' (use y, r, l, d)"))),
        };
        let value: i64 = match value.trim().parse() {
            Ok(v) => v,
            Err(_) => {
                return Err(usage(format!("bad --at value for '{}': integers only", name.trim())))
            }
        };
        out.push((marker, value));
    }
    Ok(out)
}

fn run_check(args: CheckArgs, ceiling: usize) -> Outcome {
    let n_max = args.n_max.unwrap_or_else(|| args.suite.default_n_max());
    if let Err(out) = check_ceiling(n_max, ceiling) {
        return out;
    }
    if args.format == FormatArg::Csv {
        return usage("check output has no CSV form; use text or json");
    }
    let report: CheckReport = match args.suite {
        SuiteArg::Oracle => checks::oracle_suite(n_max),
        SuiteArg::Catalog => checks::catalog_suite(n_max),
        SuiteArg::Identities => checks::identities_suite(n_max),
        SuiteArg::Paths => checks::paths_suite(n_max),
    };
    let passed = report.passed();
    let body = match args.format {
        FormatArg::Text => output::report_to_text(&report, n_max),
        FormatArg::Json => {
            let doc = JsonDocument::new(
                serde_json::json!({
                    "command": "check",
                    "suite": args.suite,
                    "n_max": n_max,
                    "format": args.format,
                }),
                vec![],
                report.items.clone(),
            );
            doc.render()
        }
        FormatArg::Csv => unreachable!(),
    };
    Outcome {
        stdout: body,
        stderr: String::new(),
        code: if passed { 0 } else { 1 },
    }
}

fn query_json(args: &TableArgs, _: Option<()>) -> serde_json::Value {
    serde_json::json!({
        "command": "table",
        "class": args.class,
        "set": args.set,
        "stat": args.stat,
        "n_max": args.n_max,
        "parts": args.parts,
        "format": args.format,
    })
}

fn rows_json(rows: &[Row]) -> Vec<serde_json::Value> {
    rows.iter()
        .map(|r| serde_json::to_value(r).expect("serializable"))
        .collect()
}
