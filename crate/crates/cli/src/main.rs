use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use ideallab_cli::{run_script, Config, Format, Overrides, CONFIG_ENV};

/// Run an ideallab script from a file or standard input.
#[derive(Parser)]
#[command(name = "ideallab", version)]
struct Cli {
    /// Script file; `-` or absent reads standard input.
    script: Option<PathBuf>,
    /// TOML config file (overrides the IDEALLAB_CONFIG variable).
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_parser = ["text", "json"])]
    format: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// Pair-reduction budget for Gröbner computations.
    #[arg(long)]
    budget: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let flags = Overrides {
        config: cli.config,
        format: cli.format.map(|f| f.parse::<Format>().expect("validated by clap")),
        seed: cli.seed,
        budget: cli.budget,
    };
    let config = match Config::resolve(&flags, std::env::var_os(CONFIG_ENV).map(PathBuf::from)) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("config error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut src = String::new();
    let read = match cli.script.as_deref() {
        None => std::io::stdin().read_to_string(&mut src).map(|_| ()),
        Some(p) if p.as_os_str() == "-" => std::io::stdin().read_to_string(&mut src).map(|_| ()),
        Some(p) => std::fs::read_to_string(p).map(|s| src = s),
    };
    if let Err(e) = read {
        eprintln!("cannot read script: {e}");
        return ExitCode::from(2);
    }
    let code = run_script(
        &src,
        config,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
