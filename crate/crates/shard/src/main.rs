use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use novelpoly_shard::{bench, cmd_decode, cmd_encode, selftest};

/// Split files into Reed-Solomon shards and rebuild them from any k of n.
#[derive(Parser)]
#[command(author, version, about, long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode a file into n = 2^r shards
    Encode {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "out")]
        out_dir: PathBuf,
        /// Symbol width in bits (8 or 16)
        #[arg(long, default_value_t = 8)]
        r: u32,
        /// Number of data shards; a power of two below 2^r
        #[arg(long, default_value_t = 128)]
        k: usize,
    },
    /// Rebuild the original file from a directory of shards
    Decode {
        #[arg(long)]
        shards: PathBuf,
        #[arg(long = "out")]
        output: PathBuf,
    },
    /// Check every fast routine against its reference implementation
    Selftest {
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Time encoding and erasure decoding
    Bench {
        #[arg(long, default_value_t = 16)]
        r: u32,
        #[arg(long, default_value_t = 1 << 15)]
        k: usize,
        /// Payload size in bytes; at least one stripe is always coded
        #[arg(long, default_value_t = 0)]
        size: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Encode { input, out_dir, r, k } => {
            if r != 8 && r != 16 {
                bail!("--r must be 8 or 16");
            }
            if !k.is_power_of_two() || k >= 1 << r {
                bail!("--k must be a power of two below 2^r");
            }
            let paths = cmd_encode(&input, &out_dir, r, k)
                .with_context(|| format!("encoding {}", input.display()))?;
            println!("wrote {} shards to {}", paths.len(), out_dir.display());
        }
        Command::Decode { shards, output } => {
            cmd_decode(&shards, &output).with_context(|| format!("decoding shards in {}", shards.display()))?;
            println!("wrote {}", output.display());
        }
        Command::Selftest { seed } => {
            let report = selftest::run(seed);
            print!("{}", report.render());
            if !report.passed() {
                bail!("self-test failed");
            }
        }
        Command::Bench { r, k, size, seed } => {
            let report = bench::run(r, k, size, seed)?;
            println!(
                "n={} k={} stripes={} encode {:.6}s ({} adds, {} muls) decode {:.6}s ({} adds, {} muls)",
                report.n,
                report.k,
                report.stripes,
                report.encode_s,
                report.encode_ops.adds,
                report.encode_ops.muls,
                report.decode_s,
                report.decode_ops.adds,
                report.decode_ops.muls
            );
            println!("{}", bench::BenchReport::CSV_HEADER);
            println!("{}", report.csv());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
