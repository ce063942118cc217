//! Command-line front end for the supercongruence catalog.
//!
//! The binary is a thin wrapper around [`run`], which parses arguments,
//! writes reports to the given sinks and returns the process exit code:
//! `0` when every checked instance holds, `1` when at least one fails and
//! `2` for usage or configuration errors.

use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use supercong_core::claims::{lookup, registry, scan, verify, CongruenceClaim, VerificationReport, DEFAULT_GUARD};
use supercong_core::hyper::fuzz::{run_suite, IdentityKind};
use supercong_core::{GammaEvaluator, Method, PRational, PrimeContext};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "supercong", version, about = "Verify p-adic supercongruences for truncated hypergeometric series")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List every catalog entry with its parameter range and modulus.
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check one claim at one prime.
    Verify {
        #[command(flatten)]
        target: ClaimArgs,
        /// The prime to check at
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check one claim at every admissible prime in a range.
    Scan {
        #[command(flatten)]
        target: ClaimArgs,
        /// Inclusive prime range such as `3..100`
        #[arg(long)]
        primes: PrimeRange,
        /// Worker threads for the scan
        #[arg(long, env = "PADIC_THREADS")]
        threads: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate the Morita p-adic Gamma function at a p-integral rational.
    Gamma {
        #[arg(long)]
        p: u64,
        /// Working precision exponent N
        #[arg(long, default_value_t = 4)]
        precision: u32,
        /// The argument, e.g. `1/3` or `-7`
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, value_enum, default_value_t = GammaMethod::Mahler)]
        method: GammaMethod,
    },
    /// Run the seeded classical-identity suites.
    Identities {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instances per identity
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}

#[derive(clap::Args, Debug)]
pub struct ClaimArgs {
    /// Claim identifier, e.g. RV2F1 or FAM5F4A
    #[arg(long)]
    pub claim: String,
    /// Family parameter for parameterised claims
    #[arg(long)]
    pub n: Option<u32>,
    /// Extra p-adic digits carried beyond the modulus
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    pub guard: u32,
}

#[derive(clap::Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GammaMethod {
    Direct,
    Mahler,
}

/// An inclusive range written `lo..hi` or `lo..=hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeRange(pub RangeInclusive<u64>);

impl FromStr for PrimeRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) =
            s.split_once("..=").or_else(|| s.split_once("..")).ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
        let parse = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("{t:?}: {e}"));
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(PrimeRange(lo..=hi))
    }
}

/// One serialized report row. Residues are decimal strings because they
/// outgrow 64 bits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub claim: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub p: u64,
    pub modulus_exponent: u32,
    pub holds: bool,
    pub valuation_achieved: i64,
    pub lhs_residue: Option<String>,
    pub rhs_residue: Option<String>,
    pub elapsed_ms: u64,
}

impl From<&VerificationReport> for Record {
    fn from(r: &VerificationReport) -> Self {
        Record {
            claim: r.claim.id.to_string(),
            n: r.claim.n,
            p: r.p,
            modulus_exponent: r.modulus_exponent,
            holds: r.holds,
            valuation_achieved: r.valuation_achieved,
            lhs_residue: r.lhs_residue.as_ref().map(ToString::to_string),
            rhs_residue: r.rhs_residue.as_ref().map(ToString::to_string),
            elapsed_ms: r.elapsed.as_millis() as u64,
        }
    }
}

pub const CSV_HEADER: &str = "claim,n,p,modulus_exponent,holds,valuation_achieved,lhs_residue,rhs_residue,elapsed_ms";

/// Renders reports in ascending `p`.
pub fn emit_report(reports: &[VerificationReport], format: Format) -> Vec<u8> {
    let mut records: Vec<Record> = reports.iter().map(Record::from).collect();
    records.sort_by_key(|r| r.p);
    emit_records(&records, format)
}

pub fn emit_records(records: &[Record], format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(records).expect("records serialize");
            out.push(b'\n');
            out
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
            w.write_record(CSV_HEADER.split(',')).expect("in-memory write");
            for r in records {
                let opt = |o: &Option<String>| o.clone().unwrap_or_default();
                w.write_record([
                    r.claim.clone(),
                    r.n.map(|n| n.to_string()).unwrap_or_default(),
                    r.p.to_string(),
                    r.modulus_exponent.to_string(),
                    r.holds.to_string(),
                    r.valuation_achieved.to_string(),
                    opt(&r.lhs_residue),
                    opt(&r.rhs_residue),
                    r.elapsed_ms.to_string(),
                ])
                .expect("in-memory write");
            }
            w.into_inner().expect("in-memory flush")
        }
        Format::Text => text_table(records).into_bytes(),
    }
}

fn text_table(records: &[Record]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<16} {:>6} {:>3} {:>5} {:>9}  {:<24} {:<24} {:>8}",
        "claim", "p", "M", "holds", "valuation", "lhs mod p^M", "rhs mod p^M", "ms"
    );
    for r in records {
        let label = match r.n {
            Some(n) => format!("{}(n={n})", r.claim),
            None => r.claim.clone(),
        };
        let show = |o: &Option<String>| o.clone().unwrap_or_else(|| "not p-integral".into());
        let _ = writeln!(
            s,
            "{:<16} {:>6} {:>3} {:>5} {:>9}  {:<24} {:<24} {:>8}",
            label,
            r.p,
            r.modulus_exponent,
            if r.holds { "yes" } else { "NO" },
            r.valuation_achieved,
            show(&r.lhs_residue),
            show(&r.rhs_residue),
            r.elapsed_ms
        );
    }
    s
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn resolve(target: &ClaimArgs) -> Result<CongruenceClaim, String> {
    lookup(&target.claim, target.n).map_err(|e| e.to_string())
}

fn deliver(bytes: &[u8], output: &OutputArgs, out: &mut dyn Write) -> Result<(), String> {
    match &output.out {
        Some(path) => std::fs::write(path, bytes).map_err(|e| format!("{}: {e}", path.display())),
        None => out.write_all(bytes).map_err(|e| e.to_string()),
    }
}

fn verdict(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(|r| r.holds) {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    match command {
        Command::List { format } => {
            list(format, out)?;
            Ok(EXIT_OK)
        }
        Command::Verify { target, p, output } => {
            let claim = resolve(&target)?;
            let report = verify(&claim, p, target.guard).map_err(|e| e.to_string())?;
            let reports = [report];
            deliver(&emit_report(&reports, output.format), &output, out)?;
            Ok(verdict(&reports))
        }
        Command::Scan { target, primes, threads, output } => {
            let claim = resolve(&target)?;
            let (lo, hi) = (*primes.0.start(), *primes.0.end());
            let summary = match threads {
                Some(t) => rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build()
                    .map_err(|e| e.to_string())?
                    .install(|| scan(&claim, lo, hi, target.guard)),
                None => scan(&claim, lo, hi, target.guard),
            };
            deliver(&emit_report(&summary.reports, output.format), &output, out)?;
            for (p, e) in &summary.errors {
                let _ = writeln!(err, "p={p}: {e}");
            }
            if !summary.errors.is_empty() {
                return Ok(EXIT_USAGE);
            }
            let failures = summary.failures();
            if !failures.is_empty() {
                let _ = writeln!(err, "{}: violated at p = {failures:?}", claim.label());
            }
            Ok(verdict(&summary.reports))
        }
        Command::Gamma { p, precision, x, method } => {
            let x: PRational = x.parse().map_err(|e: supercong_core::Error| e.to_string())?;
            let ctx = PrimeContext::new(p, precision).map_err(|e| e.to_string())?;
            let method = match method {
                GammaMethod::Direct => Method::Direct,
                GammaMethod::Mahler => Method::Mahler,
            };
            let value = GammaEvaluator::with_method(&ctx, method)
                .gamma_at(&x)
                .and_then(|v| v.residue_n())
                .map_err(|e| e.to_string())?;
            writeln!(out, "Gamma_{p}({x}) = {value} mod {p}^{precision}").map_err(|e| e.to_string())?;
            Ok(EXIT_OK)
        }
        Command::Identities { seed, count } => {
            let mut code = EXIT_OK;
            for kind in IdentityKind::ALL {
                let report = run_suite(kind, seed, count);
                let status = if report.passed() { "ok" } else { "FAILED" };
                writeln!(
                    out,
                    "{:<16} {status:<6} checked {} redrawn {} failures {}",
                    kind.name(),
                    report.checked,
                    report.redrawn,
                    report.failures.len()
                )
                .map_err(|e| e.to_string())?;
                for f in &report.failures {
                    let _ = writeln!(err, "{}: {f}", kind.name());
                }
                if !report.passed() {
                    code = EXIT_VIOLATION;
                }
            }
            Ok(code)
        }
    }
}

#[derive(Serialize)]
struct ListEntry {
    claim: &'static str,
    n: Vec<u32>,
    modulus_exponent: u32,
    status: &'static str,
}

fn list(format: Format, out: &mut dyn Write) -> Result<(), String> {
    let mut entries: Vec<ListEntry> = Vec::new();
    for c in registry() {
        match entries.last_mut() {
            Some(e) if e.claim == c.id.as_str() => e.n.extend(c.n),
            _ => entries.push(ListEntry {
                claim: c.id.as_str(),
                n: c.n.into_iter().collect(),
                modulus_exponent: c.modulus_exponent(),
                status: c.status().as_str(),
            }),
        }
    }
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&entries).map_err(|e| e.to_string())? + "\n",
        Format::Csv => {
            let mut s = String::from("claim,n,modulus_exponent,status\n");
            for e in &entries {
                let ns: Vec<String> = e.n.iter().map(u32::to_string).collect();
                let _ = writeln!(s, "{},{},{},{}", e.claim, ns.join(" "), e.modulus_exponent, e.status);
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for e in &entries {
                let ns = if e.n.is_empty() { String::from("-") } else { format!("{:?}", e.n) };
                let _ = writeln!(s, "{:<12} n={:<22} M={}  {}", e.claim, ns, e.modulus_exponent, e.status);
            }
            s
        }
    };
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_ranges() {
        assert_eq!("3..100".parse::<PrimeRange>().unwrap().0, 3..=100);
        assert_eq!("5..=7".parse::<PrimeRange>().unwrap().0, 5..=7);
        assert!("9..3".parse::<PrimeRange>().is_err());
        assert!("abc".parse::<PrimeRange>().is_err());
    }

    #[test]
    fn empty_json_is_brackets() {
        assert_eq!(emit_report(&[], Format::Json), b"[]\n");
        let csv = String::from_utf8(emit_report(&[], Format::Csv)).unwrap();
        assert_eq!(csv, format!("{CSV_HEADER}\n"));
    }
}
