//! `spectral-lab`: build graphs, print spectra, certify bounds and run
//! exhaustive searches. Graphs travel as graph6 lines, reports as JSON.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use spectral_lab::certify::{
    certify_claim, check_claim, is_probe, round12, verify_gap_inequality, verify_radius_monotonicity,
    verify_walk_identity, Certificate, ClaimParams, Tolerances, Verdict, DEFAULT_EQUALITY_TOL,
};
use spectral_lab::graph::{
    blow_up, complete, complete_bipartite, cycle, path, rk_bipartite, split_graph, t_tree, BaseGraph, Graph,
};
use spectral_lab::graph6::{parse_stream, to_graph6};
use spectral_lab::search::{
    counterexample_scan, equality_census, extremal_radius_search, max_order, SearchOptions, SearchReport,
};
use spectral_lab::spectral::{spectrum, DEFAULT_ZERO_TOL};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "spectral-lab", version, about = "Spectral bounds for graphs without short odd cycles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one graph6 line for a named construction.
    Construct(ConstructArgs),
    /// Eigenvalues of every graph in a graph6 stream.
    Spectrum(SpectrumArgs),
    /// Certify a claim on every graph in a graph6 stream.
    Certify(CertifyArgs),
    /// Exhaustive search over all isomorphism classes of one order.
    Search(SearchArgs),
    /// Parameter-only checks: walk identity, gap inequality, radius monotonicity.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Input {
    /// Read graph6 lines from this file instead of stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Report malformed lines and keep going (the exit code is still 2).
    #[arg(long)]
    continue_on_error: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    TTree,
    Blowup,
    Rk,
    Split,
    Empty,
}

#[derive(Args)]
struct ConstructArgs {
    kind: Kind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    /// Leg lengths `a,b,c` of a T-shaped tree.
    #[arg(long, value_delimiter = ',')]
    legs: Vec<usize>,
    /// Blow-up base: p2k1, 2p2k1, p4k1 or p5k1.
    #[arg(long)]
    base: Option<String>,
    /// Class sizes of a blow-up, one per base vertex (the K_1 last).
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Eigenvalues with absolute value at most this count as zero.
    #[arg(long, default_value_t = DEFAULT_ZERO_TOL)]
    zero_tolerance: f64,
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CertifyArgs {
    /// Claim id, e.g. thm1.1, cor1.4, hong, conj_zls or all-classical.
    #[arg(long)]
    claim: String,
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Clique bound for the Bollobás–Nikiforov claims.
    #[arg(long)]
    r: Option<usize>,
    /// Relative tolerance for numeric equality.
    #[arg(long, default_value_t = DEFAULT_EQUALITY_TOL)]
    tolerance: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    output: Output,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Mode {
    Extremal,
    Census,
    Scan,
}

#[derive(Args)]
struct SearchArgs {
    mode: Mode,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Claim to scan (scan mode only).
    #[arg(long)]
    claim: Option<String>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_EQUALITY_TOL)]
    tolerance: f64,
    /// Worker threads; results do not depend on it.
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Record wall-clock time in the report.
    #[arg(long)]
    timing: bool,
    /// Also write every listed graph as graph6 to this file.
    #[arg(long)]
    sidecar: Option<PathBuf>,
    /// Also write a `graph6,role,lambda1` table to this file.
    #[arg(long)]
    emit_csv: Option<PathBuf>,
    #[command(flatten)]
    output: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Walk,
    Gap,
    Monotonicity,
}

#[derive(Args)]
struct VerifyArgs {
    check: Check,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[command(flatten)]
    output: Output,
}

/// The settings a report depends on; echoed into every JSON document.
#[derive(Serialize)]
struct RunConfig {
    command: &'static str,
    tolerance: f64,
    zero_tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_n: Option<usize>,
    format: Format,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<spectral_lab::Error> for Failure {
    fn from(e: spectral_lab::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(format!("i/o error: {e}"))
    }
}

type Outcome = Result<u8, Failure>;

fn emit(output: &Output, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports always serialize");
    s.push('\n');
    s
}

fn read_input(input: &Input) -> Result<String, Failure> {
    match &input.input {
        Some(path) => fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display()))),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

/// Parsed graphs with their line numbers; malformed lines are reported on
/// stderr and either abort or are skipped.
fn read_graphs(input: &Input) -> Result<(Vec<(usize, Graph)>, bool), Failure> {
    let text = read_input(input)?;
    let mut graphs = Vec::new();
    let mut bad = false;
    for item in parse_stream(&text) {
        match item.graph {
            Ok(g) => graphs.push((item.line, g)),
            Err(e) if input.continue_on_error => {
                eprintln!("line {}: {e}", item.line);
                bad = true;
            }
            Err(e) => return Err(Failure::usage(format!("line {}: {e}", item.line))),
        }
    }
    Ok((graphs, bad))
}

fn need(v: Option<usize>, flag: &str, kind: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::usage(format!("construct {kind} needs --{flag}")))
}

fn construct(a: &ConstructArgs) -> Outcome {
    let g = match a.kind {
        Kind::Path => path(need(a.n, "n", "path")?)?,
        Kind::Cycle => cycle(need(a.n, "n", "cycle")?)?,
        Kind::Complete => complete(need(a.n, "n", "complete")?)?,
        Kind::Empty => Graph::empty(need(a.n, "n", "empty")?),
        Kind::CompleteBipartite => complete_bipartite(
            need(a.s, "s", "complete-bipartite")?,
            need(a.t, "t", "complete-bipartite")?,
        )?,
        Kind::TTree => match a.legs[..] {
            [x, y, z] => t_tree(x, y, z)?,
            _ => return Err(Failure::usage("construct t-tree needs --legs a,b,c")),
        },
        Kind::Blowup => {
            let name = a
                .base
                .as_deref()
                .ok_or_else(|| Failure::usage("construct blowup needs --base"))?;
            let base = BaseGraph::parse(name)
                .ok_or_else(|| Failure::usage(format!("unknown base `{name}`; use p2k1, 2p2k1, p4k1 or p5k1")))?;
            blow_up(&base.graph(), &a.sizes)?
        }
        Kind::Rk => rk_bipartite(need(a.k, "k", "rk")?, need(a.s, "s", "rk")?, need(a.t, "t", "rk")?)?,
        Kind::Split => split_graph(need(a.n, "n", "split")?, need(a.k, "k", "split")?)?,
    };
    emit(&a.output, &format!("{}\n", to_graph6(&g)?))?;
    Ok(0)
}

fn fixed(x: f64, zero: f64) -> String {
    if x.abs() <= zero {
        "0".to_string()
    } else {
        format!("{x:.9}")
    }
}

#[derive(Serialize)]
struct SpectrumRow {
    line: usize,
    graph6: String,
    eigenvalues: Vec<f64>,
}

fn spectrum_cmd(a: &SpectrumArgs) -> Outcome {
    let (graphs, bad) = read_graphs(&a.input)?;
    let mut rows = Vec::new();
    for (line, g) in graphs {
        let s = spectrum(&g, a.zero_tolerance).map_err(|e| Failure::usage(format!("line {line}: {e}")))?;
        rows.push((line, to_graph6(&g)?, s.values));
    }
    let z = a.zero_tolerance;
    let text = match a.format {
        Format::Text => rows
            .iter()
            .map(|(_, _, v)| v.iter().map(|&x| fixed(x, z)).collect::<Vec<_>>().join(", ") + "\n")
            .collect(),
        Format::Csv => {
            let mut s = String::from("line,graph6,eigenvalues\n");
            for (line, code, v) in &rows {
                let vals: Vec<String> = v.iter().map(|&x| fixed(x, z)).collect();
                s.push_str(&format!("{line},{code},{}\n", vals.join(" ")));
            }
            s
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                config: RunConfig,
                spectra: Vec<SpectrumRow>,
            }
            let spectra = rows
                .into_iter()
                .map(|(line, graph6, v)| SpectrumRow {
                    line,
                    graph6,
                    eigenvalues: v.iter().map(|&x| if x.abs() <= z { 0.0 } else { round12(x) }).collect(),
                })
                .collect();
            let config = RunConfig {
                command: "spectrum",
                tolerance: DEFAULT_EQUALITY_TOL,
                zero_tolerance: z,
                max_n: None,
                format: a.format,
            };
            pretty(&Doc { config, spectra })
        }
    };
    emit(&a.output, &text)?;
    Ok(if bad { EXIT_USAGE } else { 0 })
}

fn num(x: Option<f64>) -> String {
    x.map(|v| format!("{}", round12(v))).unwrap_or_default()
}

fn certify_cmd(a: &CertifyArgs) -> Outcome {
    check_claim(&a.claim)?;
    let tol = Tolerances {
        equality: a.tolerance,
        ..Tolerances::default()
    };
    let params = ClaimParams { k: a.k, r: a.r };
    let (graphs, bad) = read_graphs(&a.input)?;
    let mut certs: Vec<Certificate> = Vec::new();
    for (line, g) in graphs {
        let c = certify_claim(&g, &a.claim, params, &tol).map_err(|e| Failure::usage(format!("line {line}: {e}")))?;
        certs.extend(c);
    }
    let violated = certs
        .iter()
        .any(|c| c.verdict == Verdict::Violated && !is_probe(&c.claim_id));
    let text = match a.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                config: RunConfig,
                certificates: &'a [Certificate],
            }
            let config = RunConfig {
                command: "certify",
                tolerance: tol.equality,
                zero_tolerance: tol.zero,
                max_n: None,
                format: a.format,
            };
            pretty(&Doc {
                config,
                certificates: &certs,
            })
        }
        Format::Csv => {
            let mut s = String::from("claim_id,graph6,applicable,lhs,rhs,margin,verdict\n");
            for c in &certs {
                s.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    c.claim_id,
                    c.inputs.graph6,
                    c.applicable,
                    num(c.lhs),
                    num(c.rhs),
                    num(c.margin),
                    c.verdict
                ));
            }
            s
        }
        Format::Text => certs
            .iter()
            .map(|c| {
                format!(
                    "{} {} {} lhs={} rhs={}\n",
                    c.claim_id,
                    c.inputs.graph6,
                    c.verdict,
                    num(c.lhs),
                    num(c.rhs)
                )
            })
            .collect(),
    };
    emit(&a.output, &text)?;
    Ok(if bad {
        EXIT_USAGE
    } else if violated {
        EXIT_VIOLATION
    } else {
        0
    })
}

fn csv_table(report: &SearchReport) -> Result<String, Failure> {
    let mut s = String::from("graph6,role,lambda1\n");
    let roles: [(&str, &[String]); 4] = [
        ("extremal", &report.extremal_graphs),
        ("equality", &report.equality_graphs),
        ("counterexample", &report.counterexamples),
        ("probe_finding", &report.probe_findings),
    ];
    for (role, graphs) in roles {
        for code in graphs {
            let g = spectral_lab::from_graph6(code)?;
            let l1 = spectrum(&g, DEFAULT_ZERO_TOL)?.lambda1();
            s.push_str(&format!("{code},{role},{}\n", round12(l1)));
        }
    }
    Ok(s)
}

fn search_cmd(a: &SearchArgs) -> Outcome {
    if a.workers == 0 {
        return Err(Failure::usage("--workers must be at least 1"));
    }
    let opts = SearchOptions {
        workers: a.workers,
        cap: max_order(),
        tol: Tolerances {
            equality: a.tolerance,
            ..Tolerances::default()
        },
        timing: a.timing,
    };
    let report = match a.mode {
        Mode::Extremal => extremal_radius_search(a.n, a.k, &opts)?,
        Mode::Census => equality_census(a.n, a.k, &opts)?,
        Mode::Scan => {
            let claim = a
                .claim
                .as_deref()
                .ok_or_else(|| Failure::usage("search scan needs --claim"))?;
            counterexample_scan(a.n, claim, ClaimParams { k: a.k, r: a.r }, &opts)?
        }
    };
    #[derive(Serialize)]
    struct Doc<'a> {
        config: RunConfig,
        report: &'a SearchReport,
    }
    let config = RunConfig {
        command: "search",
        tolerance: opts.tol.equality,
        zero_tolerance: opts.tol.zero,
        max_n: Some(opts.cap),
        format: Format::Json,
    };
    emit(&a.output, &pretty(&Doc { config, report: &report }))?;
    if let Some(path) = &a.sidecar {
        let lines: String = report.listed_graphs().iter().map(|g| format!("{g}\n")).collect();
        fs::write(path, lines).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    }
    if let Some(path) = &a.emit_csv {
        fs::write(path, csv_table(&report)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    }
    Ok(if report.confirmed { 0 } else { EXIT_VIOLATION })
}

fn verify_cmd(a: &VerifyArgs) -> Outcome {
    let (holds, text) = match a.check {
        Check::Walk => {
            let ok = verify_walk_identity(a.k)?;
            (ok, pretty(&serde_json::json!({ "check": "walk_identity", "k": a.k, "holds": ok })))
        }
        Check::Gap => {
            let g = verify_gap_inequality(a.k)?;
            (g.holds, pretty(&g))
        }
        Check::Monotonicity => {
            let s = a.s.ok_or_else(|| Failure::usage("verify monotonicity needs --s"))?;
            let t = a.t.ok_or_else(|| Failure::usage("verify monotonicity needs --t"))?;
            let m = verify_radius_monotonicity(a.k, s, t)?;
            (m.holds || !m.applicable, pretty(&m))
        }
    };
    emit(&a.output, &text)?;
    Ok(if holds { 0 } else { EXIT_VIOLATION })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Construct(a) => construct(a),
        Command::Spectrum(a) => spectrum_cmd(a),
        Command::Certify(a) => certify_cmd(a),
        Command::Search(a) => search_cmd(a),
        Command::Verify(a) => verify_cmd(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
