use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use glauber_cli::config::preset_names;
use glauber_cli::{run, CliError, ExperimentConfig, OUTPUT_DIR_ENV};

#[derive(Parser)]
#[command(name = "glauber", version, about = "Two-mode oscillator dynamics via the SU(2) reduction")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment and write its CSV and metadata sidecar.
    Run(Source),
    /// Check a config and list every problem found.
    Validate(Source),
    /// List the bundled presets.
    Presets,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// JSON experiment file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Bundled experiment (fig1, fig2a, ..., fig3b).
    #[arg(long)]
    preset: Option<String>,
}

impl Source {
    fn load(&self) -> Result<ExperimentConfig, CliError> {
        match (&self.config, &self.preset) {
            (Some(path), _) => ExperimentConfig::load(path),
            (None, Some(name)) => ExperimentConfig::preset(name),
            (None, None) => unreachable!("clap requires one source"),
        }
    }
}

fn fail(e: CliError) -> ExitCode {
    eprintln!("glauber: {e}");
    ExitCode::from(e.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Presets => {
            for name in preset_names() {
                println!("{name}");
            }
            ExitCode::SUCCESS
        }
        Command::Validate(src) => match src.load() {
            Err(e) => fail(e),
            Ok(cfg) => {
                let diags = cfg.validate();
                if diags.is_empty() {
                    println!("ok");
                    ExitCode::SUCCESS
                } else {
                    for d in &diags {
                        println!("{d}");
                    }
                    ExitCode::from(2)
                }
            }
        },
        Command::Run(src) => {
            let dir = std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from);
            match src.load().and_then(|cfg| run(&cfg, dir.as_deref())) {
                Err(e) => fail(e),
                Ok(report) => {
                    println!("{} ({} rows)", report.csv.display(), report.rows);
                    ExitCode::SUCCESS
                }
            }
        }
    }
}
