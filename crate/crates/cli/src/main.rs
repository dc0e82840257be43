//! `dmcodes`: weight enumeration for decreasing monomial codes.
//!
//! Exit codes: 0 success, 1 usage, I/O or validation error, 2 the input
//! set is not decreasing, 3 a verification check failed.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dmcodes::oracle::{codewords_of_weight, DEFAULT_K_LIMIT, DEFAULT_ORBIT_CAP, DEFAULT_PAIR_CAP};
use dmcodes::{
    brute_force_spectrum, core_row_set, count_1p5, count_pair_coset, lambda_single, min_weight_set, one_five_census,
    orbit, orbit_cardinality, parse_row_list, union_bound, CodeSpec, Monomial, WeightReport,
};
use serde_json::json;
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(name = "dmcodes", version, about = "Exact low-weight enumeration for polar and Reed-Muller codes")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV instead of text, where the command supports it.
    #[arg(long, global = true)]
    csv: bool,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Largest code dimension accepted by exhaustive enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_K_LIMIT)]
    k_limit: usize,
    /// Replace a non-decreasing input by its decreasing closure.
    #[arg(long, global = true, conflicts_with = "strict")]
    closure: bool,
    /// Reject a non-decreasing input (the default).
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Source {
    /// Information-set file: decimal row indices, `#` comments.
    #[arg(long, requires = "m", conflicts_with = "rm")]
    rows: Option<PathBuf>,
    /// Number of variables, `N = 2^m`.
    #[arg(long)]
    m: Option<u32>,
    /// Reed-Muller code R(r, m).
    #[arg(long, num_args = 2, value_names = ["R", "M"])]
    rm: Option<Vec<u32>>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count codewords of weight w_min and 1.5 w_min.
    Enumerate {
        #[command(flatten)]
        source: Source,
        /// Print the per-pair breakdown.
        #[arg(long)]
        pairs: bool,
    },
    /// Check the closed forms against exhaustive enumeration.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Perturb the closed-form count (tests the failure path).
        #[arg(long, hide = true)]
        corrupt: bool,
    },
    /// List the orbit of a monomial under its LTA subgroup.
    Orbit {
        /// Variable indices, comma separated (empty for the constant 1).
        #[arg(long, conflicts_with = "row", allow_hyphen_values = true)]
        vars: Option<String>,
        /// Row index of the polar transform.
        #[arg(long)]
        row: Option<u32>,
        #[arg(long)]
        m: u32,
        /// Print only the cardinality.
        #[arg(long)]
        count_only: bool,
    },
    /// List the qualifying maximum-degree pairs with both per-pair counts.
    Pairs {
        #[command(flatten)]
        source: Source,
    },
    /// Truncated union bound on the ML block error rate.
    Bler {
        #[command(flatten)]
        source: Source,
        /// A JSON report produced by `enumerate --json`.
        #[arg(long, conflicts_with_all = ["rows", "rm"])]
        report: Option<PathBuf>,
        /// Code rate; defaults to K/N.
        #[arg(long)]
        rate: Option<f64>,
        /// Eb/N0 grid in dB as START:END:STEP, inclusive.
        #[arg(long, default_value = "0:10:1")]
        ebn0: String,
    },
    /// Exhaustive weight spectrum.
    Oracle {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Code(#[from] dmcodes::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Mismatch(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Code(dmcodes::Error::NotDecreasing { .. }) => 2,
            CliError::Mismatch(_) => 3,
            _ => 1,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

enum Format {
    Text,
    Json,
    Csv,
}

struct Ctx {
    format: Format,
    k_limit: usize,
    strict: bool,
}

fn read_file(path: &PathBuf) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })
}

fn load(source: &Source, ctx: &Ctx) -> CliResult<CodeSpec> {
    match (&source.rows, &source.rm) {
        (Some(path), None) => {
            let m = source.m.ok_or_else(|| CliError::Usage("--rows needs --m".into()))?;
            let rows = parse_row_list(&read_file(path)?)?;
            let ingested = CodeSpec::from_row_indices(&rows, m, ctx.strict)?;
            if !ingested.added_rows.is_empty() {
                let added: Vec<String> = ingested.added_rows.iter().map(u32::to_string).collect();
                eprintln!("closure added rows: {}", added.join(" "));
            }
            Ok(ingested.spec)
        }
        (None, Some(rm)) => Ok(CodeSpec::reed_muller(rm[0], rm[1])?),
        _ => Err(CliError::Usage("give a code with --rows FILE --m M or --rm R M".into())),
    }
}

fn enumerate(source: &Source, pairs: bool, ctx: &Ctx) -> CliResult<String> {
    let report = count_1p5(&load(source, ctx)?)?;
    Ok(match ctx.format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => {
            let mut out = String::from("f_row,g_row,h,f_over_h,g_over_h,lambda_h,lambda_f,lambda_g,alpha,count\n");
            for p in &report.pairs {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{}",
                    p.f_row,
                    p.g_row,
                    p.h,
                    p.f_over_h,
                    p.g_over_h,
                    p.lambda_h,
                    p.lambda_f_part,
                    p.lambda_g_part,
                    p.alpha,
                    p.count
                );
            }
            out
        }
        Format::Text if pairs => report.render_table(),
        Format::Text => {
            let mut summary = report.clone();
            summary.pairs.clear();
            summary.render_table()
        }
    })
}

fn verify(source: &Source, corrupt: bool, ctx: &Ctx) -> CliResult<String> {
    let spec = load(source, ctx)?;
    let spectrum = brute_force_spectrum(&spec, ctx.k_limit)?;
    let mut report = count_1p5(&spec)?;
    if corrupt {
        report.a_1p5wmin += 1;
    }
    let w15 = report.wmin * 3 / 2;
    let census = one_five_census(&spec, DEFAULT_ORBIT_CAP, DEFAULT_PAIR_CAP)?;
    let mins = min_weight_set(&spec, DEFAULT_ORBIT_CAP)?;
    let checks = [
        ("A_wmin matches the spectrum", spectrum.count(report.wmin) == report.a_wmin),
        ("A_1.5wmin matches the spectrum", spectrum.count(w15) == report.a_1p5wmin),
        ("census count matches A_1.5wmin", census.count() == report.a_1p5wmin),
        (
            "census set equals the weight-1.5 w_min codewords",
            census.words == codewords_of_weight(&spec, w15, ctx.k_limit)?,
        ),
        (
            "orbit union equals the weight-w_min codewords",
            mins == codewords_of_weight(&spec, report.wmin, ctx.k_limit)?,
        ),
    ];
    let mut out = String::new();
    match ctx.format {
        Format::Json => {
            let list: Vec<_> = checks.iter().map(|(name, ok)| json!({"check": name, "pass": ok})).collect();
            out = serde_json::to_string_pretty(&json!({ "checks": list })).expect("json") + "\n";
        }
        _ => {
            for (name, ok) in &checks {
                let _ = writeln!(out, "[{}] {name}", if *ok { "PASS" } else { "FAIL" });
            }
        }
    }
    let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    if failed.is_empty() {
        Ok(out)
    } else {
        print!("{out}");
        Err(CliError::Mismatch(failed.join("; ")))
    }
}

fn parse_vars(text: &str) -> CliResult<Monomial> {
    let mut vars = Vec::new();
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let v: u32 = tok
            .parse()
            .map_err(|_| CliError::Usage(format!("bad variable index {tok:?}")))?;
        vars.push(v);
    }
    Ok(Monomial::from_vars(vars))
}

fn orbit_cmd(vars: Option<&str>, row: Option<u32>, m: u32, count_only: bool, ctx: &Ctx) -> CliResult<String> {
    if m == 0 || m > 30 {
        return Err(CliError::Usage(format!("m must be in 1..=30, got {m}")));
    }
    let f = match (vars, row) {
        (Some(v), None) => parse_vars(v)?,
        (None, Some(r)) if u64::from(r) < 1 << m => Monomial::from_row_index(r, m),
        (None, Some(r)) => return Err(dmcodes::Error::IndexOutOfRange { row: r.into(), m }.into()),
        _ => return Err(CliError::Usage("give the monomial with --vars or --row".into())),
    };
    if f.span() > m {
        return Err(CliError::Usage(format!("{f} uses a variable outside 0..{m}")));
    }
    let lambdas: Vec<u32> = f.vars().map(|i| lambda_single(f, i)).collect();
    let lambda: u32 = lambdas.iter().sum();
    let size = orbit_cardinality(f)?;
    let polys = if count_only { Vec::new() } else { orbit(f, f, m)? };
    Ok(match ctx.format {
        Format::Json => {
            let list: Vec<String> = polys.iter().map(ToString::to_string).collect();
            let value = json!({
                "monomial": f.to_string(),
                "row": f.row_index(m),
                "m": m,
                "degree": f.degree(),
                "lambda": lambdas,
                "cardinality": size.to_string(),
                "polynomials": list,
            });
            serde_json::to_string_pretty(&value).expect("json") + "\n"
        }
        _ => {
            let mut out = format!(
                "{f} (row {}), m = {m}: |orbit| = 2^({} + {lambda}) = {size}, lambda = {lambdas:?}\n",
                f.row_index(m),
                f.degree()
            );
            for p in &polys {
                let _ = writeln!(out, "{p}");
            }
            out
        }
    })
}

fn pairs_cmd(source: &Source, ctx: &Ctx) -> CliResult<String> {
    let spec = load(source, ctx)?;
    let report = count_1p5(&spec)?;
    let rows = report
        .pairs
        .iter()
        .map(|p| {
            let kf = core_row_set(&spec, p.f_row)?;
            let kg = core_row_set(&spec, p.g_row)?;
            let coset = count_pair_coset(&spec, p.f_row, p.g_row)?;
            Ok((p, kf, kg, coset))
        })
        .collect::<CliResult<Vec<_>>>()?;
    let list = |s: &std::collections::BTreeSet<u32>| s.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
    Ok(match ctx.format {
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(p, kf, kg, coset)| {
                    json!({
                        "f_row": p.f_row, "g_row": p.g_row,
                        "K_f": kf, "K_g": kg,
                        "pair_count": p.count.to_string(),
                        "coset_count": coset.to_string(),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&json!({ "pairs": items })).expect("json") + "\n"
        }
        Format::Csv => {
            let mut out = String::from("f_row,g_row,K_f,K_g,pair_count,coset_count\n");
            for (p, kf, kg, coset) in &rows {
                let _ = writeln!(out, "{},{},{},{},{},{coset}", p.f_row, p.g_row, list(kf), list(kg), p.count);
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (p, kf, kg, coset) in &rows {
                let _ = writeln!(
                    out,
                    "{} {}: pair count {}, coset count {coset}; K_f = {{{}}}, K_g = {{{}}}",
                    p.f_row,
                    p.g_row,
                    p.count,
                    list(kf),
                    list(kg)
                );
            }
            let _ = writeln!(out, "{} pairs, total {}", rows.len(), report.a_1p5wmin);
            out
        }
    })
}

fn parse_grid(text: &str) -> CliResult<Vec<f64>> {
    let bad = || CliError::Usage(format!("--ebn0 expects START:END:STEP, got {text:?}"));
    let parts: Vec<f64> = text
        .split(':')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let [start, end, step] = parts[..] else {
        return Err(bad());
    };
    if step.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) || end < start {
        return Err(bad());
    }
    let n = ((end - start) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|i| start + i as f64 * step).collect())
}

fn bler(source: &Source, report_path: Option<&PathBuf>, rate: Option<f64>, ebn0: &str, ctx: &Ctx) -> CliResult<String> {
    let report = match report_path {
        Some(path) => WeightReport::from_json(&read_file(path)?)?,
        None => count_1p5(&load(source, ctx)?)?,
    };
    let rate = rate.unwrap_or(report.k as f64 / report.n as f64);
    let grid = parse_grid(ebn0)?;
    let values = union_bound(&report, rate, &grid)?;
    Ok(match ctx.format {
        Format::Json => {
            let points: Vec<_> = grid.iter().zip(&values).map(|(d, v)| json!({"ebn0_db": d, "bler": v})).collect();
            serde_json::to_string_pretty(&json!({ "rate": rate, "points": points })).expect("json") + "\n"
        }
        _ => {
            let mut out = format!(
                "# union bound truncated to w < 2 w_min: A_{} = {}, A_{} = {}, R = {rate}\nebn0_db,bler\n",
                report.wmin,
                report.a_wmin,
                report.wmin * 3 / 2,
                report.a_1p5wmin
            );
            for (d, v) in grid.iter().zip(&values) {
                let _ = writeln!(out, "{d},{v:e}");
            }
            out
        }
    })
}

fn oracle_cmd(source: &Source, ctx: &Ctx) -> CliResult<String> {
    let spectrum = brute_force_spectrum(&load(source, ctx)?, ctx.k_limit)?;
    Ok(match ctx.format {
        Format::Json => spectrum.to_json() + "\n",
        Format::Csv => spectrum.to_csv(),
        Format::Text => {
            let mut out = format!("N = {}, K = {}\n", spectrum.n, spectrum.k);
            for (w, c) in &spectrum.counts {
                let _ = writeln!(out, "{w:>6} {c}");
            }
            out
        }
    })
}

fn run(cli: Cli) -> CliResult<String> {
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let ctx = Ctx {
        format: if cli.json {
            Format::Json
        } else if cli.csv {
            Format::Csv
        } else {
            Format::Text
        },
        k_limit: cli.k_limit,
        strict: !cli.closure,
    };
    match &cli.command {
        Command::Enumerate { source, pairs } => enumerate(source, *pairs, &ctx),
        Command::Verify { source, corrupt } => verify(source, *corrupt, &ctx),
        Command::Orbit {
            vars,
            row,
            m,
            count_only,
        } => orbit_cmd(vars.as_deref(), *row, *m, *count_only, &ctx),
        Command::Pairs { source } => pairs_cmd(source, &ctx),
        Command::Bler {
            source,
            report,
            rate,
            ebn0,
        } => bler(source, report.as_ref(), *rate, ebn0, &ctx),
        Command::Oracle { source } => oracle_cmd(source, &ctx),
    }
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
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
