use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gfsum_core::verify::{list_identities, registry, run_grid, GridSpec, JOBS_ENV};
use gfsum_core::{gen_term, Error, SequenceSpec};

#[derive(Parser)]
#[command(name = "gfsum", version, about = "Exact generalized Fibonacci terms and sum identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the term G_m of a sequence.
    Term {
        /// `fibonacci`, `lucas` or a seed pair `g0,g1`.
        #[arg(long, value_parser = parse_seq, allow_hyphen_values = true)]
        seq: SequenceSpec,
        #[arg(short = 'm', long = "m", allow_hyphen_values = true)]
        m: i64,
    },
    /// List the identity registry.
    List {
        /// Keep ids starting with this prefix.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Check identities over a parameter grid.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// `all`, an exact id (`T2.2`) or an id prefix (`T4`); repeatable.
    #[arg(long = "identity", default_value = "all")]
    identities: Vec<String>,
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true, default_value = "-6..6")]
    m: RangeInclusive<i64>,
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true, default_value = "-6..6")]
    n: RangeInclusive<i64>,
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true, default_value = "-6..6")]
    r: RangeInclusive<i64>,
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true, default_value = "0..6")]
    k: RangeInclusive<i64>,
    /// Seeds of G; repeatable. Defaults to fibonacci and lucas.
    #[arg(long = "seq", value_parser = parse_seq, allow_hyphen_values = true)]
    seqs: Vec<SequenceSpec>,
    /// Seeds of H for two-sequence identities; defaults to the G list.
    #[arg(long = "hseq", value_parser = parse_seq, allow_hyphen_values = true)]
    hseqs: Vec<SequenceSpec>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads.
    #[arg(long, env = JOBS_ENV, default_value_t = 1)]
    jobs: usize,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn parse_seq(s: &str) -> Result<SequenceSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// `lo..hi`, inclusive on both ends.
fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let bad = || Error::MalformedRange(s.to_string()).to_string();
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn verify(args: VerifyArgs) -> ExitCode {
    let defaults = GridSpec::default();
    let grid = GridSpec {
        m: args.m,
        n: args.n,
        r: args.r,
        k: args.k,
        g_seeds: if args.seqs.is_empty() { defaults.g_seeds } else { args.seqs },
        h_seeds: args.hseqs,
        identities: args.identities,
        jobs: args.jobs,
    };
    let report = match run_grid(&grid) {
        Ok(r) => r,
        Err(e @ Error::UnknownIdentity(_)) => {
            let ids: Vec<_> = registry().iter().map(|d| d.id).collect();
            return usage_error(format!("{e}\navailable: all, {}", ids.join(", ")));
        }
        Err(e) => return usage_error(e),
    };

    let sink: Box<dyn Write> = match &args.out {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(f),
            Err(e) => return usage_error(format!("{}: {e}", path.display())),
        },
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    let written = match args.format {
        Format::Text => report.write_text(&mut sink).map_err(|e| e.to_string()),
        Format::Json => report.write_json(&mut sink).map_err(|e| e.to_string()),
        Format::Csv => report.write_csv(&mut sink).map_err(|e| e.to_string()),
    }
    .and_then(|_| sink.flush().map_err(|e| e.to_string()));
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }

    let s = report.summary;
    eprintln!("summary: pass={} fail={} skipped={}", s.pass, s.fail, s.skipped);
    if s.pass + s.fail == 0 {
        eprintln!("warning: every instance was skipped by a guard");
    }
    if s.fail > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Term { seq, m } => {
            println!("{}", gen_term(&seq, m));
            ExitCode::SUCCESS
        }
        Command::List { filter } => {
            let mut out = io::stdout().lock();
            for d in list_identities(filter.as_deref()) {
                let _ = writeln!(out, "{}\t{}\t{}", d.id, d.citation, d.guard_text);
            }
            ExitCode::SUCCESS
        }
        Command::Verify(args) => verify(args),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-5..5").unwrap(), -5..=5);
        assert_eq!(parse_range("3..3").unwrap(), 3..=3);
        assert_eq!(parse_range("0..=4").unwrap(), 0..=4);
        assert!(parse_range("5..1").is_err());
        assert!(parse_range("5").is_err());
        assert!(parse_range("a..b").is_err());
    }
}
