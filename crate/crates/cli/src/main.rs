mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::UsageError;

const DEFAULT_TOL: f64 = 1e-10;

fn tolerance(flag: Option<f64>) -> anyhow::Result<f64> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var("TWS_LAB_TOL") {
            Ok(v) => v.trim().parse::<f64>().map_err(|_| UsageError(format!("TWS_LAB_TOL=`{v}` is not a number")))?,
            Err(_) => DEFAULT_TOL,
        },
    };
    if !(tol.is_finite() && tol > 0.0) {
        return Err(UsageError(format!("tolerance must be positive, got {tol}")).into());
    }
    Ok(tol)
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    let tol = tolerance(cli.tol)?;
    match &cli.command {
        Command::Classify(a) => commands::cmd_classify(a),
        Command::Profile(a) => commands::cmd_profile(a, tol),
        Command::Scan(a) => commands::cmd_scan(a),
        Command::Verify(a) => commands::cmd_verify(a),
        Command::Ch(c) => commands::cmd_ch(c, tol),
    }
}

/// 0 ok, 1 identity failure, 2 parse or usage, 3 domain, 4 numeric.
fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<UsageError>().is_some() {
        return 2;
    }
    match err.downcast_ref::<tws_core::Error>() {
        Some(tws_core::Error::IdentityFailed { .. }) => 1,
        Some(e) if e.is_domain() => 3,
        Some(e) if e.is_numeric() => 4,
        Some(tws_core::Error::Parse(_)) => 2,
        // Algebraic precondition failures on user input are domain problems.
        Some(_) => 3,
        // I/O on the output path: an invocation problem.
        None => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
