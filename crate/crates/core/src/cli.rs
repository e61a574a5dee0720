//! Command-line frontend.
//!
//! Exit status: 0 on success, 1 with a JSON error record when a
//! precondition fails, 2 when a verification run finds a contract
//! violation.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith;
use crate::ctbl::{self, DegreeTable};
use crate::degrees::{an_degrees, degree, degree_valuation, is_pprime_oracle};
use crate::error::{Error, Result};
use crate::hooks::{self, ScanConfig};
use crate::lie::{self, ClassicalFamily, ExceptionalFamily, Sign};
use crate::partition::{enumerate_partitions, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "ppcd", version, about = "p'-degree characters of symmetric, alternating and Lie-type groups")]
struct Cli {
    /// Override the default output format of the subcommand.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the hooks of n with degree prime to p.
    Hooks(HooksArgs),
    /// Degrees of one partition, or of every (p'-)partition of n.
    Degrees(DegreesArgs),
    /// Count p'-hooks three ways and compare.
    Count(NpArgs),
    /// Check the alternating-group bound over a grid of (n, p).
    VerifyAn(VerifyAnArgs),
    /// Check the unipotent "not both divisible" claim over a grid.
    VerifyLie(VerifyLieArgs),
    /// The character pair chosen for one group and prime.
    LiePair(LiePairArgs),
    /// cd(G) and cd_p'(G) of a degree table.
    Ctbl(CtblArgs),
}

#[derive(Debug, Args)]
struct NpArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: usize,
}

#[derive(Debug, Args)]
struct HooksArgs {
    #[command(flatten)]
    np: NpArgs,
    /// Build the list digit by digit instead of filtering binomials.
    #[arg(long)]
    layered: bool,
}

#[derive(Debug, Args)]
struct DegreesArgs {
    #[arg(long, conflicts_with = "partition", required_unless_present = "partition")]
    n: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    /// Include partitions whose degree is divisible by p.
    #[arg(long)]
    all: bool,
    /// A single partition, e.g. "3,1,1".
    #[arg(long)]
    partition: Option<String>,
}

#[derive(Debug, Args)]
struct VerifyAnArgs {
    #[arg(long, default_value_t = 7)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    #[arg(long, value_delimiter = ',', default_values_t = [5, 7, 11, 13])]
    primes: Vec<usize>,
    /// Largest n checked by a full partition scan; defaults to PPCD_SCAN_BOUND or 40.
    #[arg(long)]
    exact_bound: Option<usize>,
}

#[derive(Debug, Args)]
struct VerifyLieArgs {
    #[arg(long, default_value_t = 27)]
    q_max: u64,
    #[arg(long, default_value_t = 97)]
    p_max: u64,
    #[arg(long, default_value_t = 10)]
    rank_max: u32,
    /// Classical families to scan, e.g. A,2A,B,C,D,2D,B2even,D4.
    #[arg(long, value_delimiter = ',')]
    families: Option<Vec<String>>,
    /// Scan the small-rank and twisted families instead.
    #[arg(long)]
    exceptional: bool,
}

#[derive(Debug, Args)]
struct LiePairArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    q: u64,
    #[arg(long)]
    p: u64,
    /// Rank, for classical families.
    #[arg(long)]
    n: Option<u32>,
    /// Sign for PSL3e.
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<i64>,
}

#[derive(Debug, Args)]
struct CtblArgs {
    #[arg(long, conflicts_with_all = ["bundled", "pgl2"])]
    file: Option<PathBuf>,
    /// One of the bundled tables: A5, S5, A6.
    #[arg(long, conflicts_with = "pgl2")]
    bundled: Option<String>,
    /// The generic degree set of PGL2(p) for this prime.
    #[arg(long)]
    pgl2: Option<u64>,
    #[arg(long)]
    p: u64,
}

/// Command output plus one reproducing command line per violation found.
struct Report {
    body: String,
    violations: Vec<String>,
}

impl Report {
    fn clean(body: String) -> Self {
        Report { body, violations: Vec::new() }
    }

    fn checked(body: String, violations: Vec<String>) -> Self {
        Report { body, violations }
    }
}

/// Runs the CLI on `argv` (including the program name) and returns the
/// exit status.
pub fn dispatch<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let record = json!({"error": {"kind": "usage", "message": e.to_string().trim_end()}});
            let _ = writeln!(err, "{record}");
            return 1;
        }
    };
    match run(cli) {
        Ok(report) => {
            let _ = out.write_all(report.body.as_bytes());
            let _ = out.flush();
            for repro in &report.violations {
                let _ = writeln!(err, "{}", json!({"violation": {"reproduce": repro}}));
            }
            if report.violations.is_empty() {
                0
            } else {
                2
            }
        }
        Err(e) => {
            let record = json!({"error": {"kind": e.kind(), "message": e.to_string()}});
            let _ = writeln!(err, "{record}");
            if e.is_invariant_violation() {
                2
            } else {
                1
            }
        }
    }
}

fn run(cli: Cli) -> Result<Report> {
    let format = cli.format;
    match cli.command {
        Command::Hooks(a) => cmd_hooks(a, format.unwrap_or(Format::Json)),
        Command::Degrees(a) => cmd_degrees(a, format),
        Command::Count(a) => cmd_count(a, format.unwrap_or(Format::Json)),
        Command::VerifyAn(a) => cmd_verify_an(a, format.unwrap_or(Format::Csv)),
        Command::VerifyLie(a) => cmd_verify_lie(a, format.unwrap_or(Format::Csv)),
        Command::LiePair(a) => cmd_lie_pair(a, format.unwrap_or(Format::Json)),
        Command::Ctbl(a) => cmd_ctbl(a, format.unwrap_or(Format::Json)),
    }
}

fn json_line(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

/// Serialises `rows` as CSV with a header line.
fn csv_table<R: AsRef<[String]>>(header: &[&str], rows: &[R]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row.as_ref()).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

/// Renders homogeneous JSON objects either as JSON lines or as CSV.
fn rows_output(rows: &[Value], header: &[&str], format: Format) -> String {
    match format {
        Format::Json => rows.iter().map(json_line).collect(),
        Format::Csv => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| header.iter().map(|h| cell(&r[*h])).collect())
                .collect();
            csv_table(header, &cells)
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

fn cmd_hooks(a: HooksArgs, format: Format) -> Result<Report> {
    let NpArgs { n, p } = a.np;
    let list = if a.layered {
        hooks::layered_pprime_hooks(n, p)?
    } else {
        hooks::list_pprime_hooks(n, p)?
    };
    let rows: Vec<Value> = list
        .iter()
        .map(|h| {
            let x = h.len() - 1;
            let d = crate::degrees::hook_degree(n, x)?;
            Ok(json!({"partition": h.parts(), "leg": x, "degree": d.to_string()}))
        })
        .collect::<Result<_>>()?;
    let body = match format {
        Format::Json => json_line(&json!({"n": n, "p": p, "count": rows.len(), "hooks": rows})),
        Format::Csv => rows_output(&rows, &["partition", "leg", "degree"], Format::Csv),
    };
    Ok(Report::clean(body))
}

fn partition_row(lambda: &Partition, p: Option<usize>) -> Result<Value> {
    let d = degree(lambda)?;
    let mut row = json!({"partition": lambda.parts(), "degree": d.to_string()});
    if let Some(p) = p {
        row["valuation"] = json!(degree_valuation(lambda, p)?);
        row["pprime"] = json!(is_pprime_oracle(lambda, p)?);
    }
    Ok(row)
}

fn cmd_degrees(a: DegreesArgs, format: Option<Format>) -> Result<Report> {
    if let Some(text) = a.partition {
        let lambda: Partition = text.parse()?;
        let mut row = partition_row(&lambda, a.p)?;
        if lambda.size() >= 2 {
            let an: Vec<String> = an_degrees(&lambda)?.iter().map(ToString::to_string).collect();
            row["an_degrees"] = json!(an);
        }
        let header = ["partition", "degree", "valuation", "pprime"];
        let body = match format.unwrap_or(Format::Json) {
            Format::Json => json_line(&row),
            Format::Csv => rows_output(&[row], &header, Format::Csv),
        };
        return Ok(Report::clean(body));
    }
    let n = a.n.expect("clap enforces --n or --partition");
    if !a.all && a.p.is_none() {
        return Err(Error::OutOfRange("--p is required unless --all is given".into()));
    }
    let partitions: Vec<Partition> = enumerate_partitions(n)?.collect();
    let rows: Vec<Option<Value>> = partitions
        .par_iter()
        .map(|lambda| {
            let row = partition_row(lambda, a.p)?;
            let keep = a.all || row["pprime"] == json!(true);
            Ok(keep.then_some(row))
        })
        .collect::<Result<_>>()?;
    let rows: Vec<Value> = rows.into_iter().flatten().collect();
    let header: &[&str] = if a.p.is_some() {
        &["partition", "degree", "valuation", "pprime"]
    } else {
        &["partition", "degree"]
    };
    Ok(Report::clean(rows_output(&rows, header, format.unwrap_or(Format::Csv))))
}

fn cmd_count(a: NpArgs, format: Format) -> Result<Report> {
    let formula = hooks::count_pprime_hooks_formula(a.n, a.p)?;
    let enumerated = hooks::pprime_hook_legs(a.n, a.p)?.len() as u64;
    let layered = hooks::layered_pprime_hook_legs(a.n, a.p)?.len() as u64;
    let agree = formula == enumerated && formula == layered;
    let row = json!({"n": a.n, "p": a.p, "formula": formula, "enumerated": enumerated, "layered": layered, "agree": agree});
    let body = match format {
        Format::Json => json_line(&row),
        Format::Csv => rows_output(&[row], &["n", "p", "formula", "enumerated", "layered", "agree"], Format::Csv),
    };
    let violations = if agree { vec![] } else { vec![format!("ppcd count --n {} --p {}", a.n, a.p)] };
    Ok(Report::checked(body, violations))
}

struct AnRow {
    n: usize,
    p: usize,
    count_formula: u64,
    count_enum: u64,
    found: usize,
    ok: bool,
}

fn verify_an_row(n: usize, p: usize, config: ScanConfig) -> Result<AnRow> {
    let count_formula = hooks::count_pprime_hooks_formula(n, p)?;
    let count_enum = hooks::pprime_hook_legs(n, p)?.len() as u64;
    let report = hooks::verify_an_bound(n, p)?;
    let mut found = report.distinct_degrees.len();
    let mut ok = report.holds && count_formula == count_enum;
    if n <= config.exact_bound {
        let exact = hooks::ext_pprime_degree_set(n, p, config)?;
        found = exact.degrees.len();
        ok &= found as u64 >= count_formula / 2 && report.distinct_degrees.is_subset(&exact.degrees);
    }
    Ok(AnRow { n, p, count_formula, count_enum, found, ok })
}

fn cmd_verify_an(a: VerifyAnArgs, format: Format) -> Result<Report> {
    let config = match a.exact_bound {
        Some(exact_bound) => ScanConfig { exact_bound },
        None => ScanConfig::from_env()?,
    };
    if a.n_min < 7 || a.n_min > a.n_max {
        return Err(Error::OutOfRange(format!("need 7 <= n-min <= n-max, got {}..{}", a.n_min, a.n_max)));
    }
    let mut tuples = Vec::new();
    for &p in &a.primes {
        for n in a.n_min..=a.n_max {
            tuples.push((n, p));
        }
    }
    let rows: Vec<AnRow> = tuples
        .par_iter()
        .map(|&(n, p)| verify_an_row(n, p, config))
        .collect::<Result<_>>()?;
    let violations = rows
        .iter()
        .filter(|r| !r.ok)
        .map(|r| {
            format!(
                "ppcd verify-an --n-min {n} --n-max {n} --primes {p} --exact-bound {b}",
                n = r.n,
                p = r.p,
                b = config.exact_bound
            )
        })
        .collect();
    let values: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "n": r.n, "p": r.p, "count_formula": r.count_formula, "count_enum": r.count_enum,
                "ext_degrees_found": r.found, "bound_ok": r.ok,
            })
        })
        .collect();
    let header = ["n", "p", "count_formula", "count_enum", "ext_degrees_found", "bound_ok"];
    Ok(Report::checked(rows_output(&values, &header, format), violations))
}

fn lie_row(family: ClassicalFamily, n: u32, q: u64, p: u64) -> Result<Value> {
    let (d1, d2) = lie::table1_qprime_values(family, n, q)?;
    let ok = lie::not_both_divisible(family, n, q, p)?;
    Ok(json!({
        "family": family.label(), "n": n, "q": q, "p": p,
        "d1": d1.to_string(), "d2": d2.to_string(), "ok": ok,
    }))
}

fn exceptional_row(family: ExceptionalFamily, q: u64, p: u64) -> Option<Value> {
    let pair = lie::exceptional_pair(family, q, p).ok()?;
    Some(json!({
        "family": pair.family, "n": Value::Null, "q": q, "p": p,
        "d1": pair.chi1.degree.to_string(), "d2": pair.chi2.degree.to_string(),
        "ok": pair.satisfies_nondivisibility(),
    }))
}

fn cmd_verify_lie(a: VerifyLieArgs, format: Format) -> Result<Report> {
    let qs = arith::prime_powers_in(2, a.q_max);
    let ps = arith::primes_in(5, a.p_max);
    let rows: Vec<Value> = if a.exceptional {
        let mut tuples = Vec::new();
        for family in ExceptionalFamily::ALL {
            for &q in &qs {
                for &p in &ps {
                    tuples.push((family, q, p));
                }
            }
        }
        tuples.par_iter().filter_map(|&(f, q, p)| exceptional_row(f, q, p)).collect()
    } else {
        let families: Vec<ClassicalFamily> = match &a.families {
            Some(names) => names.iter().map(|s| s.parse()).collect::<Result<_>>()?,
            None => ClassicalFamily::ALL.to_vec(),
        };
        let mut tuples = Vec::new();
        for family in families {
            for n in family.ranks(a.rank_max) {
                for &q in &qs {
                    if !family.allows_q(n, q) {
                        continue;
                    }
                    for &p in ps.iter().filter(|&&p| q % p != 0) {
                        tuples.push((family, n, q, p));
                    }
                }
            }
        }
        tuples.par_iter().map(|&(f, n, q, p)| lie_row(f, n, q, p)).collect::<Result<_>>()?
    };
    let violations = rows
        .iter()
        .filter(|r| r["ok"] != json!(true))
        .map(|r| {
            let rank = match &r["n"] {
                Value::Null => String::new(),
                n => format!(" --n {n}"),
            };
            format!("ppcd lie-pair --family {}{rank} --q {} --p {}", cell(&r["family"]), r["q"], r["p"])
        })
        .collect();
    let header = ["family", "n", "q", "p", "d1", "d2", "ok"];
    Ok(Report::checked(rows_output(&rows, &header, format), violations))
}

fn cmd_lie_pair(a: LiePairArgs, format: Format) -> Result<Report> {
    let eps = a.eps.map(Sign::from_i64).transpose()?;
    if let Ok(family) = a.family.parse::<ClassicalFamily>() {
        let n = a.n.ok_or_else(|| Error::OutOfRange(format!("--n is required for family {family}")))?;
        let (u1, u2) = lie::table1_pair(family, n)?;
        let mut row = lie_row(family, n, a.q, a.p)?;
        row["labels"] = json!([u1.label, u2.label]);
        row["formulas"] = json!([u1.formula.to_string(), u2.formula.to_string()]);
        row["steinberg_qpower"] = json!(lie::steinberg_qpower(family, n)?);
        let ok = row["ok"] == json!(true);
        let body = match format {
            Format::Json => json_line(&row),
            Format::Csv => rows_output(&[row], &["family", "n", "q", "p", "d1", "d2", "ok"], Format::Csv),
        };
        let violations = if ok { vec![] } else { vec![format!("ppcd lie-pair --family {family} --n {n} --q {} --p {}", a.q, a.p)] };
        return Ok(Report::checked(body, violations));
    }
    let family = ExceptionalFamily::parse(&a.family, eps)?;
    let pair = lie::exceptional_pair(family, a.q, a.p)?;
    let ok = pair.satisfies_nondivisibility();
    let body = match format {
        Format::Json => {
            let mut v = serde_json::to_value(&pair).expect("serializable");
            v["nondivisible"] = json!(ok);
            json_line(&v)
        }
        Format::Csv => {
            let row = json!({
                "family": pair.family, "q": pair.q, "p": pair.p,
                "d1": pair.chi1.degree.to_string(), "d2": pair.chi2.degree.to_string(), "ok": ok,
            });
            rows_output(&[row], &["family", "q", "p", "d1", "d2", "ok"], Format::Csv)
        }
    };
    let violations = if ok { vec![] } else { {
        let eps = a.eps.map(|e| format!(" --eps {e}")).unwrap_or_default();
        vec![format!("ppcd lie-pair --family {}{eps} --q {} --p {}", a.family, a.q, a.p)]
    } };
    Ok(Report::checked(body, violations))
}

fn cmd_ctbl(a: CtblArgs, format: Format) -> Result<Report> {
    arith::check_prime(a.p)?;
    let table: DegreeTable = if let Some(path) = &a.file {
        let doc = fs::read_to_string(path)
            .map_err(|e| Error::Schema(format!("cannot read {}: {e}", path.display())))?;
        ctbl::load_degree_table(&doc)?
    } else if let Some(name) = &a.bundled {
        ctbl::bundled_table(name)?
    } else if let Some(q) = a.pgl2 {
        ctbl::pgl2_degree_set(q)?
    } else {
        return Err(Error::OutOfRange("one of --file, --bundled, --pgl2 is required".into()));
    };
    let strings = |s: std::collections::BTreeSet<num_bigint::BigUint>| -> Vec<String> {
        s.into_iter().map(|d| d.to_string()).collect()
    };
    let cd = strings(table.cd());
    let pp = strings(ctbl::cd_pprime(&table, a.p));
    let row = json!({
        "name": table.name,
        "order": table.order.as_ref().map(ToString::to_string),
        "p": a.p,
        "cd": cd,
        "cd_size": cd.len(),
        "cd_pprime": pp,
        "cd_pprime_size": pp.len(),
    });
    let body = match format {
        Format::Json => json_line(&row),
        Format::Csv => rows_output(&[row], &["name", "p", "cd_size", "cd_pprime_size", "cd_pprime"], Format::Csv),
    };
    Ok(Report::clean(body))
}
