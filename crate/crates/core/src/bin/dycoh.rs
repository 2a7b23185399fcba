use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use dycoh::config::JobConfig;
use dycoh::error::Error;
use dycoh::field::FieldSpec;
use dycoh::job::{run, sha256_hex, Command, Overrides, Suite};

#[derive(Parser)]
#[command(name = "dycoh", version, about = "Davydov-Yetter cohomology with coalgebra coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the structure axioms of the input data.
    Validate(Common),
    /// Compute Betti numbers up to the maximal degree.
    Betti {
        #[command(flatten)]
        common: Common,
        /// Restrict to the equivariant subcomplex.
        #[arg(long)]
        equivariant: bool,
    },
    /// Run one check suite.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
    },
    /// Validate, compute both Betti tables and run every suite.
    Report(Common),
}

#[derive(Args)]
struct Common {
    /// Job configuration (JSON).
    #[arg(long)]
    config: PathBuf,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    /// Output directory for report.json, betti.csv and timings.json.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Field override, such as Q or F3.
    #[arg(long, value_parser = parse_field)]
    field: Option<FieldSpec>,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, common) = match cli.command {
        Cmd::Validate(c) => (Command::Validate, c),
        Cmd::Betti { common, equivariant } => (Command::Betti { equivariant }, common),
        Cmd::Check { common, suite } => (Command::Check { suite }, common),
        Cmd::Report(c) => (Command::Report, c),
    };
    let bytes = match std::fs::read(&common.config) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", common.config.display());
            return ExitCode::from(2);
        }
    };
    let overrides = Overrides {
        field: common.field,
        max_degree: common.max_degree,
        seed: common.seed,
        samples: common.samples,
    };
    let output = String::from_utf8(bytes.clone())
        .map_err(|_| Error::Config {
            pointer: String::new(),
            message: "configuration is not UTF-8".into(),
        })
        .and_then(|text| JobConfig::parse(&text))
        .and_then(|mut c| {
            overrides.apply(&mut c)?;
            run(command, &c, &sha256_hex(&bytes))
        });
    let output = match output {
        Ok(o) => o,
        Err(e @ Error::Config { .. }) => {
            eprintln!("config error: {e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = output.write(&common.out) {
        eprintln!("error: cannot write to {}: {e}", common.out.display());
        return ExitCode::from(1);
    }
    print!("{}", output.summary());
    if output.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
