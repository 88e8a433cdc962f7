use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use quartinv_cli::{hilbert, reproduce, verify_paper, GroupSpec, Inputs, ModuleSpec, Options, ReportDocument};

#[derive(Parser)]
#[command(name = "quartinv", version, about = "Invariants of GL3(F2) on ordinary quartic coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Print the JSON report on standard output.
    #[arg(long)]
    json: bool,
    /// Also write the JSON report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Highest degree for the free-module consistency checks.
    #[arg(long, default_value_t = 10)]
    degree_bound: u32,
    /// Run the degree-feasibility and optimality searches.
    #[arg(long)]
    enable_feasibility_search: bool,
    /// Record elapsed milliseconds per check (makes reports run-dependent).
    #[arg(long)]
    timings: bool,
    /// Matrix fixture file to use instead of the bundled one.
    #[arg(long)]
    fixtures: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline and report every check with its artifacts.
    Reproduce(Common),
    /// Compare against the printed objects only.
    VerifyPaper(Common),
    /// Print an exact Hilbert series.
    Hilbert {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long, value_enum)]
        module: ModuleArg,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    #[value(name = "G")]
    G,
    #[value(name = "D")]
    D,
    #[value(name = "trivial")]
    Trivial,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleArg {
    #[value(name = "W")]
    W,
    #[value(name = "Wprime")]
    Wprime,
}

fn load(common: &Common) -> Result<Inputs, ExitCode> {
    Inputs::load(common.fixtures.as_deref()).map_err(|e| {
        eprintln!("fixture error: {e}");
        ExitCode::from(2)
    })
}

fn emit(common: &Common, text: &str, json: &str) -> Result<(), ExitCode> {
    if let Some(path) = &common.out {
        std::fs::write(path, json).map_err(|e| {
            eprintln!("cannot write {}: {e}", path.display());
            ExitCode::from(2)
        })?;
    }
    print!("{}", if common.json { json } else { text });
    Ok(())
}

fn report(common: &Common, run: fn(&Inputs, &Options) -> ReportDocument) -> ExitCode {
    let inputs = match load(common) {
        Ok(i) => i,
        Err(code) => return code,
    };
    let opts = Options {
        degree_bound: common.degree_bound,
        feasibility: common.enable_feasibility_search,
        timings: common.timings,
    };
    let doc = run(&inputs, &opts);
    if let Err(code) = emit(common, &doc.to_table(), &doc.to_json()) {
        return code;
    }
    if doc.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Reproduce(common) => report(&common, reproduce),
        Command::VerifyPaper(common) => report(&common, verify_paper),
        Command::Hilbert { group, module, common } => {
            let inputs = match load(&common) {
                Ok(i) => i,
                Err(code) => return code,
            };
            let group = match group {
                GroupArg::G => GroupSpec::G,
                GroupArg::D => GroupSpec::D,
                GroupArg::Trivial => GroupSpec::Trivial,
            };
            let module = match module {
                ModuleArg::W => ModuleSpec::W,
                ModuleArg::Wprime => ModuleSpec::WPrime,
            };
            let out = match hilbert(&inputs, group, module) {
                Ok(o) => o,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            };
            let over = quartinv_core::hilbert::RationalSeries::new(out.numerator.clone(), out.hsop_degrees.clone());
            let text = format!(
                "series: {}\nover hsop degrees {{{}}}: {}\ncoefficients: {}\n",
                out.series,
                out.hsop_degrees.iter().map(u32::to_string).collect::<Vec<_>>().join(","),
                over,
                out.coefficients.join(", ")
            );
            let doc = json!({
                "series": out.series.to_string(),
                "hsop_degrees": out.hsop_degrees,
                "numerator": out.numerator.to_string(),
                "coefficients": out.coefficients,
            });
            let json = serde_json::to_string_pretty(&doc).expect("serializes") + "\n";
            match emit(&common, &text, &json) {
                Ok(()) => ExitCode::SUCCESS,
                Err(code) => code,
            }
        }
    }
}
