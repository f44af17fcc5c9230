use std::fs::File;
use std::io::{self, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use wqfs::chartable::CharTable;
use wqfs::codes::BinaryLinearCode;
use wqfs::constructions::{block_group, fpf_involution, two_subset_group};
use wqfs::distinguish::{
    sample_weak, weak_distribution_from_classes, DistReport, SAMPLER_RNG,
};
use wqfs::group::PermGroup;
use wqfs::verify::{run_verify, VerifyConfig};
use wqfs::Error;

#[derive(Parser)]
#[command(name = "wqfs", version, about = "Exact weak-Fourier-sampling analyzer for subgroups of S_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct OutArg {
    /// write output to a file instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Dump the full character table of S_n
    Chars {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[command(flatten)]
        out: OutArg,
    },
    /// Exact distinguishability report for a subgroup given by a group file
    Dh {
        /// group file (`degree: n` then one generator per line); "-" = stdin
        group: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
        /// exponent in the threshold (log₂ n!)^{-c}
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        /// also draw this many weak-measurement samples
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Minimal degree of a subgroup
    Mindeg {
        group: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Support distribution |H_k| of a subgroup
    Supportdist {
        group: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[command(flatten)]
        out: OutArg,
    },
    /// Embed a binary linear code file into S_{2ℓ} and emit a group file
    Embed {
        /// code file, one 0/1 generator row per line; "-" = stdin
        code: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Emit a group file for a named family
    Construct {
        #[arg(long)]
        family: Family,
        /// family parameters: block = "n,m"; fpf = "n"; two-subset = "l"
        #[arg(long)]
        params: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Run the verification suites and emit a JSON report
    Verify {
        /// comma-separated suite names (default: all)
        #[arg(long, value_delimiter = ',')]
        suites: Option<Vec<String>>,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 200)]
        random_subgroups: usize,
        #[arg(long, default_value_t = 50)]
        conjugation_pairs: usize,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Block,
    Fpf,
    #[value(name = "two-subset")]
    TwoSubset,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(RunError::Computation(e)) => {
            let msg = serde_json::to_string(&json!({ "error": e.to_string() }))
                .unwrap_or_else(|_| format!("{{\"error\":\"{e}\"}}"));
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(RunError::VerifyFailed) => ExitCode::from(1),
    }
}

enum RunError {
    Computation(Error),
    VerifyFailed,
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Computation(e)
    }
}

impl From<io::Error> for RunError {
    fn from(e: io::Error) -> Self {
        RunError::Computation(Error::Io(e))
    }
}

fn read_input(path: &PathBuf) -> Result<Box<dyn Read>, RunError> {
    if path.as_os_str() == "-" {
        Ok(Box::new(io::stdin()))
    } else {
        Ok(Box::new(File::open(path).map_err(Error::Io)?))
    }
}

fn read_group(path: &PathBuf) -> Result<PermGroup, RunError> {
    Ok(PermGroup::read_group_file(BufReader::new(read_input(path)?))?)
}

fn write_output(out: &OutArg, content: &str) -> Result<(), RunError> {
    match &out.out {
        Some(path) => {
            let mut f = File::create(path).map_err(Error::Io)?;
            f.write_all(content.as_bytes()).map_err(Error::Io)?;
        }
        None => {
            print!("{content}");
            io::stdout().flush().map_err(Error::Io)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct DhOutput {
    #[serde(flatten)]
    report: DistReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<SampleBlock>,
}

#[derive(Serialize)]
struct SampleBlock {
    rng: String,
    seed: u64,
    count: usize,
    counts: std::collections::BTreeMap<String, u64>,
}

fn run(command: Command) -> Result<(), RunError> {
    match command {
        Command::Chars { n, format, out } => {
            if n < 1 {
                return Err(Error::BadParameters("need n ≥ 1".into()).into());
            }
            let mut t = CharTable::new(n);
            let labels = t.partitions().to_vec();
            let content = match format {
                Format::Csv => {
                    let mut s = String::from("lambda");
                    for mu in &labels {
                        s.push(',');
                        s.push_str(&mu.to_string());
                    }
                    s.push('\n');
                    for lam in &labels {
                        s.push_str(&lam.to_string());
                        for mu in &labels {
                            s.push(',');
                            s.push_str(&t.character(lam, mu)?.to_string());
                        }
                        s.push('\n');
                    }
                    s
                }
                Format::Json => {
                    let mut rows = serde_json::Map::new();
                    for lam in &labels {
                        let mut row = serde_json::Map::new();
                        for mu in &labels {
                            row.insert(mu.to_string(), json!(t.character(lam, mu)?.to_string()));
                        }
                        rows.insert(lam.to_string(), row.into());
                    }
                    let doc = json!({ "n": n, "characters": rows });
                    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
                    s.push('\n');
                    s
                }
            };
            write_output(&out, &content)
        }
        Command::Dh {
            group,
            cap,
            c,
            samples,
            seed,
            out,
        } => {
            let g = read_group(&group)?;
            let mut t = CharTable::new(g.degree());
            let report = DistReport::build(&g, c, cap, &mut t)?;
            let samples = match samples {
                None => None,
                Some(count) => {
                    let cv = g.class_intersections(cap)?;
                    let dist = weak_distribution_from_classes(&cv, &mut t)?;
                    let counts = sample_weak(&dist, count, seed)?
                        .into_iter()
                        .map(|(lam, c)| (lam.to_string(), c))
                        .collect();
                    Some(SampleBlock {
                        rng: SAMPLER_RNG.to_string(),
                        seed,
                        count,
                        counts,
                    })
                }
            };
            let doc = DhOutput { report, samples };
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            write_output(&out, &s)
        }
        Command::Mindeg { group, cap, out } => {
            let g = read_group(&group)?;
            let m = g.minimal_degree(cap)?;
            write_output(&out, &format!("{m}\n"))
        }
        Command::Supportdist {
            group,
            cap,
            format,
            out,
        } => {
            let g = read_group(&group)?;
            let sd = g.support_distribution(cap)?;
            let content = match format {
                Format::Csv => {
                    let mut s = String::new();
                    for (k, count) in &sd.counts {
                        s.push_str(&format!("{k},{count}\n"));
                    }
                    s
                }
                Format::Json => {
                    let counts: serde_json::Map<String, serde_json::Value> = sd
                        .counts
                        .iter()
                        .map(|(k, c)| (k.to_string(), json!(c.to_string())))
                        .collect();
                    let doc = json!({
                        "n": g.degree(),
                        "total_nonidentity": sd.total.to_string(),
                        "counts": counts,
                    });
                    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
                    s.push('\n');
                    s
                }
            };
            write_output(&out, &content)
        }
        Command::Embed { code, out } => {
            let c = BinaryLinearCode::read_code_file(BufReader::new(read_input(&code)?))?;
            let g = c.embed();
            let mut buf = Vec::new();
            g.write_group_file(&mut buf)?;
            write_output(&out, &String::from_utf8(buf).expect("cycle notation is utf-8"))
        }
        Command::Construct { family, params, out } => {
            let nums: Vec<usize> = params
                .split(',')
                .map(|p| p.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| Error::BadParameters(format!("bad --params `{params}`")))?;
            let g = match (family, nums.as_slice()) {
                (Family::Block, [n, m]) => block_group(*n, *m)?,
                (Family::Fpf, [n]) => fpf_involution(*n)?,
                (Family::TwoSubset, [l]) => two_subset_group(*l)?,
                _ => {
                    return Err(Error::BadParameters(
                        "expected --params n,m (block), n (fpf) or l (two-subset)".into(),
                    )
                    .into())
                }
            };
            let mut buf = Vec::new();
            g.write_group_file(&mut buf)?;
            write_output(&out, &String::from_utf8(buf).expect("cycle notation is utf-8"))
        }
        Command::Verify {
            suites,
            cap,
            seed,
            samples,
            random_subgroups,
            conjugation_pairs,
            out,
        } => {
            let config = VerifyConfig {
                suites,
                cap,
                seed,
                samples,
                random_subgroups,
                conjugation_pairs,
            };
            let report = run_verify(&config)?;
            let mut s = serde_json::to_string_pretty(&report).expect("serializable");
            s.push('\n');
            write_output(&out, &s)?;
            if report.passed() {
                Ok(())
            } else {
                Err(RunError::VerifyFailed)
            }
        }
    }
}
