use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use resolvekit::certificate::{
    construct_certificate, mu_certificate, verify_certificate, CertificateJson, Method,
};
use resolvekit::graph_file::GraphFile;
use resolvekit::metric::{SolverConfig, DEFAULT_SIZE_CAP};
use resolvekit::topologies::{generate, Family, TopologySpec};
use resolvekit::Error;

/// Resolving sets and metric dimension of graphs and their line graphs.
#[derive(Parser)]
#[command(name = "resolvekit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact metric dimension of a graph file or of its line graph.
    Mu {
        file: PathBuf,
        /// Solve the input itself (default).
        #[arg(long, conflicts_with = "line")]
        exact: bool,
        /// Solve the line graph of the input.
        #[arg(long)]
        line: bool,
        /// Largest vertex count the exhaustive search accepts.
        #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
        cap: usize,
        /// Disable the multi-threaded search.
        #[arg(long)]
        sequential: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Explicit line-graph resolving set from a construction.
    Construct {
        file: PathBuf,
        /// theorem1 (digraphs), spantree or tree (graphs).
        #[arg(long)]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
        cap: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Write a generated digraph as an edge-list file.
    Gen {
        /// de_bruijn, kautz, flowered or complete.
        family: Family,
        d: usize,
        /// Word length (de_bruijn and kautz only).
        #[arg(default_value_t = 1)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check whether the given landmarks form a resolving set.
    Verify {
        file: PathBuf,
        /// Comma-separated vertex labels, or edge labels with --line.
        #[arg(long, value_delimiter = ',', required = true)]
        landmarks: Vec<String>,
        #[arg(long)]
        line: bool,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
struct Output {
    /// Emit the JSON certificate instead of the text summary.
    #[arg(long)]
    json: bool,
}

fn emit(cert: &CertificateJson, output: &Output) {
    if output.json {
        print!("{}", cert.to_json());
    } else {
        print!("{}", cert.to_text());
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Mu {
            file,
            line,
            cap,
            sequential,
            output,
            ..
        } => {
            let config = SolverConfig {
                parallel: !sequential,
                ..SolverConfig::with_cap(cap)
            };
            emit(&mu_certificate(&GraphFile::read(file)?, line, &config)?, &output);
        }
        Command::Construct {
            file,
            method,
            cap,
            output,
        } => {
            let config = SolverConfig::with_cap(cap);
            emit(&construct_certificate(&GraphFile::read(file)?, method, &config)?, &output);
        }
        Command::Gen { family, d, n, out } => {
            let topology = generate(TopologySpec { family, d, n })?;
            let text = GraphFile::from_topology(&topology).to_text();
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
        }
        Command::Verify {
            file,
            landmarks,
            line,
            output,
        } => {
            emit(&verify_certificate(&GraphFile::read(file)?, &landmarks, line)?, &output);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
