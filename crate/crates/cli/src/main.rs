//! Command-line front end: build codes, verify distance claims, tabulate
//! syndromes, run censuses and rule counts, evaluate rates, and simulate.
//!
//! Exit codes: 0 for success (including a confirmed or inconclusive claim
//! check), 1 when a claim check refutes the claimed distance, 2 for invalid
//! parameters, malformed files, or usage errors.

use std::fs;
use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use overlap_shor::builder::{self, Construction, ConstructionTag, StabilizerCode};
use overlap_shor::decoder::{
    build_grouped, build_lookup, correctability_census, naive_table_size, paper_rule_count,
    DecodeOutcome, Decoder, GroupedDecoder, LookupDecoder, Syndrome,
};
use overlap_shor::json::{
    code_from_json, code_to_json, CensusReportDoc, ConstructionDoc, DistanceReportDoc,
};
use overlap_shor::simulator::{run_monte_carlo, NoiseModel};
use overlap_shor::verifier::{compute_distance, Verdict};
use overlap_shor::SCHEMA;

const BIT_ORDER_NOTE: &str = "Syndrome bit order equals the generator export order: all X-type \
groups first (outer groups before the bridge), then all Z-type groups. File arguments accept '-' \
for stdin/stdout. RAYON_NUM_THREADS sets the simulation worker count; results are identical for \
any thread count.";

#[derive(Parser)]
#[command(name = "overlap-shor", version, about = "Overlapped-repetition Shor code laboratory", after_help = BIT_ORDER_NOTE)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ConstructionArgs {
    /// Construction family: shor, outer, inner, or double
    #[arg(long)]
    construction: String,
    /// Base distance parameter d >= 2
    #[arg(long)]
    d: usize,
    /// Shared-bit count, 1 <= ell <= floor(d/2); not used by shor
    #[arg(long)]
    ell: Option<usize>,
    /// Number of logical qubits (outer construction)
    #[arg(long)]
    k: Option<usize>,
    /// Number of outer repetition codes (inner construction)
    #[arg(long)]
    t: Option<usize>,
    /// Number of logical qubits (double construction)
    #[arg(long)]
    ko: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a stabilizer code and emit its JSON document
    Build {
        #[command(flatten)]
        construction: ConstructionArgs,
        /// Output file, '-' for stdout
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Check the claimed distance of a code by exhaustive search
    Verify {
        /// Code JSON file, '-' for stdin
        #[arg(long = "in")]
        input: String,
        /// Largest error weight to enumerate
        #[arg(long)]
        wmax: usize,
    },
    /// Emit (error, syndrome) rows for the given error weights
    Tabulate {
        #[arg(long = "in")]
        input: String,
        /// Comma-separated weights, e.g. 1 or 1,2
        #[arg(long)]
        weights: String,
        /// csv or json
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Classify every weight-w error against a decoder
    Census {
        #[arg(long = "in")]
        input: String,
        /// Error weight to enumerate
        #[arg(long)]
        w: usize,
        /// Decoder: lookup:WMAX or grouped
        #[arg(long)]
        decoder: String,
    },
    /// Grouped rule count, the closed-form count, and sub-table sizes
    Rules {
        #[arg(long = "in")]
        input: String,
    },
    /// Exact asymptotic rate and its ratio to the plain Shor rate
    Rates {
        /// Construction family: shor, outer, inner, or double
        #[arg(long)]
        construction: String,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        ell: Option<usize>,
    },
    /// Monte Carlo logical-failure estimation under depolarizing noise
    Simulate {
        #[arg(long = "in")]
        input: String,
        /// Decoder: lookup:WMAX or grouped
        #[arg(long)]
        decoder: String,
        /// Comma-separated physical error probabilities
        #[arg(long)]
        p: String,
        #[arg(long)]
        shots: u64,
        #[arg(long, default_value = "0")]
        seed: u64,
        #[arg(long, default_value = "-")]
        out: String,
    },
}

/// Errors carry the exit code they map to.
struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { message: message.into(), code: 2 }
    }
}

impl From<overlap_shor::Error> for Failure {
    fn from(e: overlap_shor::Error) -> Self {
        Failure { message: e.to_string(), code: 2 }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { message: e.to_string(), code: 2 }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn write_output(path: &str, content: &str) -> Result<(), Failure> {
    if path == "-" {
        std::io::stdout().write_all(content.as_bytes())?;
        Ok(())
    } else {
        Ok(fs::write(path, content)?)
    }
}

fn load_code(path: &str) -> Result<StabilizerCode, Failure> {
    Ok(code_from_json(&read_input(path)?)?)
}

impl ConstructionArgs {
    fn to_construction(&self) -> Result<Construction, Failure> {
        let tag = ConstructionTag::parse(&self.construction)?;
        let need_ell = || {
            self.ell.ok_or_else(|| {
                Failure::usage(format!("--ell is required for the {} construction", self.construction))
            })
        };
        let forbid = |name: &str, value: Option<usize>| -> Result<(), Failure> {
            match value {
                Some(_) => Err(Failure::usage(format!(
                    "--{name} does not apply to the {} construction",
                    self.construction
                ))),
                None => Ok(()),
            }
        };
        let construction = match tag {
            ConstructionTag::Shor => {
                forbid("ell", self.ell)?;
                forbid("k", self.k)?;
                forbid("t", self.t)?;
                forbid("ko", self.ko)?;
                Construction::Shor { d: self.d }
            }
            ConstructionTag::Outer => {
                forbid("t", self.t)?;
                forbid("ko", self.ko)?;
                let k = self.k.ok_or_else(|| Failure::usage("--k is required for outer"))?;
                Construction::Outer { k, d: self.d, ell: need_ell()? }
            }
            ConstructionTag::Inner => {
                forbid("k", self.k)?;
                forbid("ko", self.ko)?;
                let t = self.t.ok_or_else(|| Failure::usage("--t is required for inner"))?;
                Construction::Inner { t, d: self.d, ell: need_ell()? }
            }
            ConstructionTag::Double => {
                forbid("k", self.k)?;
                forbid("t", self.t)?;
                let ko = self.ko.ok_or_else(|| Failure::usage("--ko is required for double"))?;
                Construction::Double { ko, d: self.d, ell: need_ell()? }
            }
        };
        Ok(construction)
    }
}

enum AnyDecoder {
    Lookup(LookupDecoder),
    Grouped(GroupedDecoder),
}

impl Decoder for AnyDecoder {
    fn decode(&self, s: &Syndrome) -> overlap_shor::Result<DecodeOutcome> {
        match self {
            AnyDecoder::Lookup(d) => d.decode(s),
            AnyDecoder::Grouped(d) => d.decode(s),
        }
    }

    fn syndrome_len(&self) -> usize {
        match self {
            AnyDecoder::Lookup(d) => d.syndrome_len(),
            AnyDecoder::Grouped(d) => d.syndrome_len(),
        }
    }

    fn descriptor(&self) -> String {
        match self {
            AnyDecoder::Lookup(d) => d.descriptor(),
            AnyDecoder::Grouped(d) => d.descriptor(),
        }
    }
}

fn build_decoder(code: &StabilizerCode, spec: &str) -> Result<AnyDecoder, Failure> {
    if spec == "grouped" {
        return Ok(AnyDecoder::Grouped(build_grouped(code)?));
    }
    if let Some(rest) = spec.strip_prefix("lookup:") {
        let w_max: usize = rest
            .parse()
            .map_err(|_| Failure::usage(format!("bad lookup weight cap {rest:?}")))?;
        return Ok(AnyDecoder::Lookup(build_lookup(code, w_max)?));
    }
    Err(Failure::usage(format!(
        "unknown decoder {spec:?}; expected lookup:WMAX or grouped"
    )))
}

fn parse_weights(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Failure::usage(format!("bad weight {part:?}")))
        })
        .collect()
}

fn parse_probabilities(text: &str) -> Result<Vec<f64>, Failure> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| Failure::usage(format!("bad probability {part:?}")))
        })
        .collect()
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Build { construction, out } => {
            let code = builder::build(&construction.to_construction()?)?;
            write_output(&out, &(code_to_json(&code) + "\n"))?;
            Ok(0)
        }
        Command::Verify { input, wmax } => {
            let code = load_code(&input)?;
            let report = compute_distance(&code, wmax)?;
            let doc = DistanceReportDoc::from_report(&report);
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            Ok(match report.verdict {
                Verdict::Refuted => 1,
                Verdict::Confirmed | Verdict::Inconclusive => 0,
            })
        }
        Command::Tabulate { input, weights, format } => {
            let code = load_code(&input)?;
            let weights = parse_weights(&weights)?;
            let mut rows = Vec::new();
            for w in weights {
                rows.extend(overlap_shor::decoder::tabulate(&code, w)?);
            }
            match format.as_str() {
                "csv" => {
                    let mut out = String::from("error,syndrome\n");
                    for (e, s) in &rows {
                        out.push_str(&format!("{},{}\n", e.canonical_string(), s.bit_string()));
                    }
                    write_output("-", &out)?;
                }
                "json" => {
                    let doc = serde_json::json!({
                        "schema": SCHEMA,
                        "rows": rows
                            .iter()
                            .map(|(e, s)| serde_json::json!({
                                "error": e.canonical_string(),
                                "syndrome": s.bit_string(),
                                "weight": e.weight(),
                            }))
                            .collect::<Vec<_>>(),
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
                }
                other => return Err(Failure::usage(format!("unknown format {other:?}"))),
            }
            Ok(0)
        }
        Command::Census { input, w, decoder } => {
            let code = load_code(&input)?;
            let decoder = build_decoder(&code, &decoder)?;
            let report = correctability_census(&code, &decoder, w)?;
            let doc = CensusReportDoc::from_report(&report);
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            Ok(0)
        }
        Command::Rules { input } => {
            let code = load_code(&input)?;
            let grouped = build_grouped(&code)?;
            let construction = *grouped.construction();
            let doc = serde_json::json!({
                "schema": SCHEMA,
                "construction": ConstructionDoc::from_construction(&construction),
                "grouped": grouped.rule_count(),
                "paper_formula": paper_rule_count(&construction)?,
                "naive": naive_table_size(&code),
                "naive_exponent": code.generator_count(),
                "sub_tables": grouped
                    .sub_table_sizes()
                    .iter()
                    .map(|(label, entries)| serde_json::json!({
                        "group": label,
                        "entries": entries,
                    }))
                    .collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            Ok(0)
        }
        Command::Rates { construction, d, ell } => {
            let tag = ConstructionTag::parse(&construction)?;
            let ell = match (tag, ell) {
                (ConstructionTag::Shor, given) => given.unwrap_or(1).min(d / 2).max(1),
                (_, Some(ell)) => ell,
                (_, None) => {
                    return Err(Failure::usage(format!(
                        "--ell is required for the {construction} construction"
                    )))
                }
            };
            let rate = builder::asymptotic_rate(tag, d, ell)?;
            let ratio = builder::rate_ratio_vs_shor(tag, d, ell)?;
            let doc = serde_json::json!({
                "schema": SCHEMA,
                "construction": construction,
                "d": d,
                "ell": ell,
                "rate": format!("{}/{}", rate.numer(), rate.denom()),
                "rate_num": rate.numer(),
                "rate_den": rate.denom(),
                "ratio_vs_shor": format!("{}/{}", ratio.numer(), ratio.denom()),
                "ratio_num": ratio.numer(),
                "ratio_den": ratio.denom(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            Ok(0)
        }
        Command::Simulate { input, decoder, p, shots, seed, out } => {
            let code = load_code(&input)?;
            let decoder = build_decoder(&code, &decoder)?;
            let probabilities = parse_probabilities(&p)?;
            let mut csv =
                String::from("p,decoder,shots,failures,detections,rate,ci_lo,ci_hi,seed\n");
            for &p in &probabilities {
                let model = NoiseModel::depolarizing(p)?;
                let summary = run_monte_carlo(&code, &decoder, &model, shots, seed)?;
                csv.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    p,
                    summary.decoder,
                    summary.shots,
                    summary.failures,
                    summary.detections,
                    summary.failure_rate,
                    summary.wilson_interval_95.0,
                    summary.wilson_interval_95.1,
                    summary.seed,
                ));
            }
            write_output(&out, &csv)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
