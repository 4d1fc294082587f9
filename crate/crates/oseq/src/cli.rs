//! The `oseq` command-line front end.
//!
//! Every subcommand emits a single JSON document on stdout (or a human
//! summary with `--format text`). Exit codes: 0 = answered, 1 = answered
//! negative (`check-o` false, `check-pure`/`classify-flat` not pure,
//! `verify` with disagreements), 2 = usage or input error, 3 = the search
//! was inconclusive within its budgets.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classify::{
    decide_flat, pq_profile, witness_flat, witness_socle2, witness_socle3, FlatQuery, Verdict,
};
use crate::order_ideal::{GeneratorSet, HVector, OrderIdeal};
use crate::search::{
    append_catalog, decide_pure_o_sequence, enumerate_pure_hvectors_with_jobs,
    verify_theorem_range, SearchLimits, VerifyReport,
};

const EXIT_OK: i32 = 0;
const EXIT_NEGATIVE: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "oseq",
    version,
    about = "Decide, witness, and enumerate pure O-sequences"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker cap for search and enumeration.
    #[arg(long, global = true, env = "PURE_O_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct SearchOpts {
    /// Node budget for the exhaustive search.
    #[arg(long, default_value_t = 10_000_000)]
    nodes: u64,

    /// Wall-clock budget in seconds.
    #[arg(long, default_value_t = 60)]
    seconds: u64,

    /// Largest ambient variable count the search will attempt.
    #[arg(long, default_value_t = 8)]
    max_vars: u32,

    /// Largest generator count the search will attempt.
    #[arg(long, default_value_t = 32)]
    max_gens: u32,
}

impl SearchOpts {
    fn limits(&self, jobs: Option<usize>) -> SearchLimits {
        SearchLimits {
            max_variables: self.max_vars,
            max_generators: self.max_gens,
            node_budget: self.nodes,
            time_budget: Duration::from_secs(self.seconds),
            jobs,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Test whether a sequence is an O-sequence (Macaulay's bound).
    CheckO {
        /// Comma-separated sequence, e.g. 1,3,6.
        sequence: String,
    },
    /// Decide pure O-sequence membership by exhaustive search.
    CheckPure {
        /// Comma-separated sequence, e.g. 1,5,5,5,3.
        sequence: String,
        /// Include the witness in the output.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        search: SearchOpts,
    },
    /// Classify (1,a,...,a,b) of socle degree n in closed form.
    ClassifyFlat { n: u32, a: u64, b: u64 },
    /// Construct an explicit witness for a classified family.
    Witness {
        #[command(subcommand)]
        kind: WitnessKind,
    },
    /// Compute the h-vector of the order ideal generated by a file of
    /// monomials.
    Hvector {
        /// Generator file: one monomial per line, '#' comments allowed.
        #[arg(long)]
        gens: PathBuf,
    },
    /// Compute the p/q counting profile of an ordered generator file.
    Pq {
        #[arg(long)]
        gens: PathBuf,
    },
    /// Enumerate pure h-vectors generated in one degree.
    Enumerate {
        /// Maximum number of variables.
        s: u32,
        /// Generator degree.
        n: u32,
        /// Maximum number of generators.
        g: u32,
        /// Append entries to this line-JSON catalog file instead of stdout.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Sweep an (a, b) grid comparing the search oracle against the
    /// closed-form classification.
    Verify {
        n: u32,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        a_max: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        b_max: u64,
        #[command(flatten)]
        search: SearchOpts,
    },
}

#[derive(Subcommand)]
enum WitnessKind {
    /// Witness for (1,a,...,a,b) of socle degree n, ceil(a/2) <= b <= a.
    Flat {
        n: u32,
        a: u64,
        b: u64,
        /// Also write the generator file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Witness for (1,a,b), ceil(a/2) <= b <= C(a+1,2).
    Socle2 {
        a: u64,
        b: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Witness for (1,a,a,b), ceil(a/3) <= b <= a.
    Socle3 {
        a: u64,
        b: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `argv` and runs one subcommand, writing to the given streams.
/// Returns the process exit code.
pub fn run<I>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = String>,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successful output, not errors.
            return if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{e}");
                EXIT_OK
            };
        }
    };
    match dispatch(&cli, stdout) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, String> {
    match &cli.command {
        Command::CheckO { sequence } => {
            let h = parse_sequence(sequence)?;
            let is_o = crate::macaulay::is_o_sequence(&h);
            emit(
                cli.format,
                out,
                &CheckOOutput {
                    h: h.clone(),
                    is_o_sequence: is_o,
                },
                |_| format!("{h} is {}an O-sequence", if is_o { "" } else { "not " }),
            )?;
            Ok(if is_o { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::CheckPure {
            sequence,
            witness,
            search,
        } => {
            let h = parse_sequence(sequence)?;
            let decision = decide_pure_o_sequence(&h, &search.limits(cli.jobs));
            let shown = if *witness {
                decision.clone()
            } else {
                decision.without_witness()
            };
            emit(cli.format, out, &shown, |d| {
                decision_text(&h.to_string(), d)
            })?;
            Ok(verdict_exit(decision.verdict))
        }
        Command::ClassifyFlat { n, a, b } => {
            let query = FlatQuery::new(*n, *a, *b).map_err(|e| format!("invalid query: {e}"))?;
            let decision = decide_flat(query);
            let label = format!("n={n} a={a} b={b}");
            emit(cli.format, out, &decision, |d| decision_text(&label, d))?;
            Ok(verdict_exit(decision.verdict))
        }
        Command::Witness { kind } => {
            let (output, out_path) = match kind {
                WitnessKind::Flat { n, a, b, out } => (
                    WitnessOutput {
                        kind: "flat",
                        n: Some(*n),
                        a: *a,
                        b: *b,
                        witness: witness_flat(*n, *a, *b).map_err(|e| e.to_string())?,
                        h: HVector::flat(*n as usize, *a, *b).map_err(|e| e.to_string())?,
                    },
                    out,
                ),
                WitnessKind::Socle2 { a, b, out } => (
                    WitnessOutput {
                        kind: "socle2",
                        n: None,
                        a: *a,
                        b: *b,
                        witness: witness_socle2(*a, *b).map_err(|e| e.to_string())?,
                        h: HVector::new(vec![1, *a, *b]).map_err(|e| e.to_string())?,
                    },
                    out,
                ),
                WitnessKind::Socle3 { a, b, out } => (
                    WitnessOutput {
                        kind: "socle3",
                        n: None,
                        a: *a,
                        b: *b,
                        witness: witness_socle3(*a, *b).map_err(|e| e.to_string())?,
                        h: HVector::new(vec![1, *a, *a, *b]).map_err(|e| e.to_string())?,
                    },
                    out,
                ),
            };
            debug_assert_eq!(OrderIdeal::closure(&output.witness).h_vector(), output.h);
            if let Some(path) = out_path {
                std::fs::write(path, output.witness.to_text())
                    .map_err(|e| format!("writing {}: {e}", path.display()))?;
            }
            emit(cli.format, out, &output, |o| {
                format!("h = {}\n{}", o.h, o.witness.to_text())
            })?;
            Ok(EXIT_OK)
        }
        Command::Hvector { gens } => {
            let set = load_generators(gens)?;
            let h = OrderIdeal::closure(&set).h_vector();
            emit(cli.format, out, &HvectorOutput { h: h.clone() }, |_| {
                format!("h = {h}")
            })?;
            Ok(EXIT_OK)
        }
        Command::Pq { gens } => {
            let set = load_generators(gens)?;
            let profile = pq_profile(&set);
            emit(cli.format, out, &profile, |p| {
                format!(
                    "p = {:?} (sum {})\nq = {:?} (sum {})",
                    p.p, p.sum_p, p.q, p.sum_q
                )
            })?;
            Ok(EXIT_OK)
        }
        Command::Enumerate { s, n, g, catalog } => {
            let entries = enumerate_pure_hvectors_with_jobs(*s, *n, *g, cli.jobs)
                .map_err(|e| e.to_string())?;
            if let Some(path) = catalog {
                append_catalog(path, &entries).map_err(|e| e.to_string())?;
                emit(
                    cli.format,
                    out,
                    &EnumerateSummary {
                        entries: entries.len(),
                        catalog: path.display().to_string(),
                    },
                    |s| format!("{} entries appended to {}", s.entries, s.catalog),
                )?;
            } else {
                for entry in &entries {
                    let line = match cli.format {
                        Format::Json => serde_json::to_string(entry).map_err(|e| e.to_string())?,
                        Format::Text => format!(
                            "h = {}  vars = {}  gens = {}  witness = {}",
                            entry.h, entry.vars, entry.gens, entry.witness
                        ),
                    };
                    write_line(out, &line)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            n,
            a_max,
            b_max,
            search,
        } => {
            if *n < 2 {
                return Err("verify requires n >= 2".into());
            }
            let report = verify_theorem_range(*n, *a_max, *b_max, &search.limits(cli.jobs));
            emit(cli.format, out, &report, verify_text)?;
            Ok(if !report.disagreements.is_empty() {
                EXIT_NEGATIVE
            } else if !report.inconclusive.is_empty() {
                EXIT_INCONCLUSIVE
            } else {
                EXIT_OK
            })
        }
    }
}

#[derive(Serialize)]
struct CheckOOutput {
    h: HVector,
    is_o_sequence: bool,
}

#[derive(Serialize)]
struct WitnessOutput {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u32>,
    a: u64,
    b: u64,
    witness: GeneratorSet,
    h: HVector,
}

#[derive(Serialize)]
struct HvectorOutput {
    h: HVector,
}

#[derive(Serialize)]
struct EnumerateSummary {
    entries: usize,
    catalog: String,
}

fn verdict_exit(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::Pure => EXIT_OK,
        Verdict::NotPure => EXIT_NEGATIVE,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn parse_sequence(text: &str) -> Result<HVector, String> {
    text.parse::<HVector>()
        .map_err(|e| format!("sequence {text:?}: {e}"))
}

/// Loads and validates a generator file; errors carry the line number.
pub fn load_generators(path: &Path) -> Result<GeneratorSet, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))?;
    GeneratorSet::parse_text(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit<T: Serialize>(
    format: Format,
    out: &mut dyn Write,
    value: &T,
    text: impl Fn(&T) -> String,
) -> Result<(), String> {
    match format {
        Format::Json => {
            let json = serde_json::to_string(value).map_err(|e| e.to_string())?;
            write_line(out, &json)
        }
        Format::Text => write_line(out, &text(value)),
    }
}

/// Writes one line; a closed pipe on the read side is not an error.
fn write_line(out: &mut dyn Write, line: &str) -> Result<(), String> {
    match writeln!(out, "{line}") {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(e.to_string()),
    }
}

fn decision_text(label: &str, d: &crate::classify::Decision) -> String {
    let mut s = match d.verdict {
        Verdict::Pure => format!("{label}: pure ({:?})", d.rule),
        Verdict::NotPure => format!(
            "{label}: not pure ({:?}, {:?})",
            d.reason.expect("not-pure decisions carry a reason"),
            d.rule
        ),
        Verdict::Inconclusive => format!(
            "{label}: inconclusive ({:?})",
            d.reason.expect("inconclusive decisions carry a reason")
        ),
    };
    if let Some(w) = &d.witness {
        s.push_str(&format!("\nwitness: {w}"));
    }
    s
}

fn verify_text(r: &VerifyReport) -> String {
    format!(
        "n={} grid {}x{}: {} agreements, {} disagreements, {} inconclusive",
        r.n,
        r.a_max,
        r.b_max,
        r.agreements.len(),
        r.disagreements.len(),
        r.inconclusive.len()
    )
}

/// Convenience wrapper used by unit and integration tests: captures stdout
/// and returns `(exit code, stdout)`.
#[cfg(test)]
pub(crate) fn run_capture(args: &[&str]) -> (i32, String) {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let argv = std::iter::once("oseq".to_string()).chain(args.iter().map(|s| s.to_string()));
    let code = run(argv, &mut stdout, &mut stderr);
    (code, String::from_utf8(stdout).unwrap())
}
