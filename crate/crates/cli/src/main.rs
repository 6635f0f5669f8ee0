use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use bondage_core::harness::{
    cmd_bound, cmd_curvature, cmd_table, parse_girth, render_bounds, render_curvature,
    render_table, run_campaign, BoundQuery, CampaignConfig, Checks, OutputFormat,
};
use clap::{Parser, Subcommand};

const VERIFY_COLUMNS: &str = "\
CSV columns, one row per input graph:
  id, graph6, n, m, max_degree, min_degree, girth (\"inf\" for forests),
  gamma, bondage, bondage_status (exact | budget-exceeded | edgeless),
  witness (space separated u-v edges), chi, chi_source
  (computed | supplied | unavailable), genus_h, genus_k,
  then a value and a <name>_status column for each bound:
  hr, ky, gz, gz_improved, h1, h2, sachs, girth_bound, forest,
  conj_teschner, conj_planar.
Status values: pass, fail, finding (a conjectured bound is exceeded),
unknown (bondage number not computed), skipped (bound does not apply).
JSON output has the same keys under \"rows\" plus a \"summary\" object.

Exit status: 0 when no theorem check fails, 2 when some check fails,
1 on usage or input errors.";

#[derive(Parser)]
#[command(
    name = "bondage",
    version,
    about = "Bondage number bounds for graphs on surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate the largest root r(chi) and its floor for chi = 0 down to --chi-min.
    Table {
        #[arg(long, allow_hyphen_values = true)]
        chi_min: i64,
    },
    /// Check the bounds against exact bondage numbers of graph6 catalogs.
    #[command(after_long_help = VERIFY_COLUMNS)]
    Verify {
        /// graph6 files, one graph per line.
        #[arg(long, required = true, num_args = 1..)]
        input: Vec<PathBuf>,
        /// Use this Euler characteristic for every graph instead of searching.
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<i64>,
        /// Largest edge subset tried by the bondage search (default: the Hartnell–Rall bound).
        #[arg(long)]
        budget: Option<usize>,
        /// Rotation systems the embedding search may enumerate per component.
        #[arg(long, default_value_t = 2_000_000)]
        rot_budget: u128,
        /// Also search non-orientable embeddings.
        #[arg(long)]
        nonorientable: bool,
        #[arg(long, default_value = "csv", value_parser = ["csv", "json"])]
        format: String,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma separated subset of hr,gz,h1,h2,sachs,girth,conj.
        #[arg(long, default_value = "all")]
        check: String,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exact edge curvatures of an embedding.
    Curvature {
        /// graph6 file; the first graph is used.
        #[arg(long)]
        graph: PathBuf,
        /// Rotation file: lines "v: n1 n2 ..." and optional "sig u v -1".
        #[arg(long)]
        rotation: PathBuf,
    },
    /// Evaluate the bounds for a maximum degree and surface.
    Bound {
        #[arg(long)]
        delta: u64,
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<i64>,
        /// An integer >= 3.
        #[arg(long)]
        girth: Option<String>,
        /// Orientable genus.
        #[arg(long)]
        h: Option<u64>,
        /// Non-orientable genus.
        #[arg(long)]
        k: Option<u64>,
    },
}

fn read(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<u8, String> {
    let err = |e: bondage_core::Error| e.to_string();
    match cli.command {
        Command::Table { chi_min } => {
            print!("{}", render_table(&cmd_table(chi_min).map_err(err)?));
            Ok(0)
        }
        Command::Bound {
            delta,
            chi,
            girth,
            h,
            k,
        } => {
            let girth = girth.as_deref().map(parse_girth).transpose().map_err(err)?;
            let rows = cmd_bound(&BoundQuery {
                delta,
                chi,
                girth,
                h,
                k,
            })
            .map_err(err)?;
            print!("{}", render_bounds(&rows));
            Ok(0)
        }
        Command::Curvature { graph, rotation } => {
            let (_, report) = cmd_curvature(&read(&graph)?, &read(&rotation)?).map_err(err)?;
            print!("{}", render_curvature(&report));
            Ok(0)
        }
        Command::Verify {
            input,
            chi,
            budget,
            rot_budget,
            nonorientable,
            format,
            workers,
            seed,
            check,
            output,
        } => {
            let format: OutputFormat = format.parse().map_err(err)?;
            let config = CampaignConfig {
                inputs: input,
                chi_override: chi,
                checks: check.parse::<Checks>().map_err(err)?,
                bondage_budget: budget,
                rotation_budget: rot_budget,
                allow_signatures: nonorientable,
                workers,
                format,
                seed,
            };
            let campaign = run_campaign(&config).map_err(err)?;
            let text = campaign.render(format).map_err(err)?;
            match output {
                Some(path) => {
                    fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?
                }
                None => std::io::stdout()
                    .write_all(text.as_bytes())
                    .map_err(|e| e.to_string())?,
            }
            eprintln!("{}", campaign.summary);
            Ok(campaign.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
