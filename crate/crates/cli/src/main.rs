use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use monass_core::linsys::{
    build_colon_system, build_power_system, build_sat_system, DeltaLimits, IneqSystem,
    DEFAULT_MINOR_BUDGET, DEFAULT_ORDER_CAP,
};
use monass_core::powers::DEFAULT_CONFIRMATION_WINDOW;
use monass_core::{IdealSource, ParsedIdeal};

mod report;

use report::Report;

/// Associated primes of powers of monomial ideals.
///
/// IDEAL is either text such as "x1^2*x2, x2*x3" (or with single letters,
/// "a^2*b, b*c") or JSON of the form {"vars": 3, "generators": [[2,1,0],[0,1,1]]}.
#[derive(Debug, Parser)]
#[command(name = "monass", version)]
struct Cli {
    /// Number of variables, if larger than the input implies.
    #[arg(long, global = true)]
    vars: Option<usize>,

    /// Machine-readable output; all numbers are decimal strings.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Associated primes of R/I^n.
    Ass {
        ideal: String,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        power: u32,
    },
    /// Ass(R/I^n) for n = 1..N and the indices read off this prefix.
    Sequence {
        ideal: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        /// Tail length needed to call an index confirmed.
        #[arg(long, default_value_t = DEFAULT_CONFIRMATION_WINDOW)]
        window: usize,
    },
    /// Ideal parameters and both copersistence bounds.
    Bounds { ideal: String },
    /// Inequality system for powers, colon or saturation.
    System {
        ideal: String,
        #[arg(long, value_enum)]
        power_kind: Kind,
        /// Scale N of the saturation system.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        sat_n: u32,
        /// Write the dump to FILE instead of standard output.
        #[arg(long, value_name = "FILE")]
        dump: Option<PathBuf>,
    },
    /// Cross-check the characterizations and the systems for n = 1..N.
    Verify {
        ideal: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
    },
    /// Largest subdeterminant of a dumped system.
    Delta {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
        order_cap: usize,
        #[arg(long, default_value_t = DEFAULT_MINOR_BUDGET)]
        minor_budget: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Power,
    Colon,
    Sat,
}

enum Failure {
    /// Bad input or an undefined operation.
    Input(String),
    /// `verify` found a disagreement.
    Mismatch(Report),
}

impl From<monass_core::Error> for Failure {
    fn from(e: monass_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn parse(text: &str, vars: Option<usize>) -> Result<ParsedIdeal, Failure> {
    let source = if text.trim_start().starts_with('{') {
        serde_json::from_str::<IdealSource>(text)
            .map_err(|e| Failure::Input(format!("bad JSON ideal: {e}")))?
    } else {
        IdealSource::Text(text.to_string())
    };
    let parsed = source.parse(vars)?;
    if parsed.ideal.is_zero() {
        return Err(Failure::Input("empty generator list".into()));
    }
    Ok(parsed)
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Ass { ideal, power } => {
            let p = parse(ideal, cli.vars)?;
            Ok(report::ass(&p, *power)?)
        }
        Command::Sequence {
            ideal,
            max_n,
            window,
        } => {
            let p = parse(ideal, cli.vars)?;
            Ok(report::sequence(&p, *max_n, *window)?)
        }
        Command::Bounds { ideal } => {
            let p = parse(ideal, cli.vars)?;
            Ok(report::bounds(&p)?)
        }
        Command::System {
            ideal,
            power_kind,
            sat_n,
            dump,
        } => {
            let p = parse(ideal, cli.vars)?;
            let sys = match power_kind {
                Kind::Power => build_power_system(&p.ideal)?,
                Kind::Colon => build_colon_system(&p.ideal)?,
                Kind::Sat => build_sat_system(&p.ideal, *sat_n)?,
            };
            if let Some(path) = dump {
                fs::write(path, sys.to_dump())
                    .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(report::system(&p, &sys, dump.is_none()))
        }
        Command::Verify { ideal, max_n } => {
            let p = parse(ideal, cli.vars)?;
            let (rep, clean) = report::verify(&p, *max_n)?;
            if clean {
                Ok(rep)
            } else {
                Err(Failure::Mismatch(rep))
            }
        }
        Command::Delta {
            file,
            order_cap,
            minor_budget,
        } => {
            let text = fs::read_to_string(file)
                .map_err(|e| Failure::Input(format!("cannot read {}: {e}", file.display())))?;
            let sys: IneqSystem = text.parse()?;
            let limits = DeltaLimits {
                order_cap: *order_cap,
                minor_budget: *minor_budget,
            };
            Ok(report::delta(&sys, limits))
        }
    }
}

fn emit(rep: &Report, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(rep.json()).expect("report serializes")
        );
    } else {
        print!("{}", rep.text());
    }
}

fn exit_code(outcome: &Result<Report, Failure>) -> u8 {
    match outcome {
        Ok(_) => 0,
        Err(Failure::Mismatch(_)) => 1,
        Err(Failure::Input(_)) => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    match &outcome {
        Ok(rep) | Err(Failure::Mismatch(rep)) => emit(rep, cli.json),
        Err(Failure::Input(msg)) => eprintln!("error: {msg}"),
    }
    ExitCode::from(exit_code(&outcome))
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn exit_codes_by_outcome() {
        let rep = || {
            report::delta(
                &"power 1 3 1 1\n1 0 0\n0\n".parse().unwrap(),
                DeltaLimits::default(),
            )
        };
        assert_eq!(exit_code(&Ok(rep())), 0);
        assert_eq!(exit_code(&Err(Failure::Mismatch(rep()))), 1);
        assert_eq!(exit_code(&Err(Failure::Input("bad".into()))), 2);
    }

    #[test]
    fn arguments_parse() {
        Cli::command().debug_assert();
        let cli =
            Cli::try_parse_from(["monass", "--json", "sequence", "x1", "--max-n", "3"]).unwrap();
        assert!(cli.json);
        assert!(Cli::try_parse_from(["monass", "sequence", "x1", "--max-n", "0"]).is_err());
        assert!(Cli::try_parse_from(["monass", "system", "x1", "--power-kind", "cube"]).is_err());
    }
}
