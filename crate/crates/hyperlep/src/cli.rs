//! Command-line front end.
//!
//! Exit codes are a stable contract: 0 success, 1 verification failure,
//! 2 input or parse error.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::conservation::ParticleSet;
use crate::error::Error;
use crate::refdata::load_fixtures;
use crate::render;
use crate::reproduce;
use crate::{axioms, substructures};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "hyperlep",
    about = "Derive particle-interaction hyperoperations from conservation laws and verify \
             their algebraic structure",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Particle-definition file (defaults to the bundled leptons)
    #[arg(long, global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,

    /// Output format for derive/check/violations/subgroups
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: OutputFormat,

    /// Write output to a file instead of standard output
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,

    /// Render element names with unicode glyphs
    #[arg(long, global = true)]
    pub unicode: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Derive the interaction hypertable from the conservation rules
    Derive,
    /// Check commutativity, reproduction, and associativity; classify
    Check,
    /// List all associativity violations, triple by triple
    Violations,
    /// Enumerate every closed subset, grouped by dimension
    Subgroups,
    /// Export the closed-subset inclusion lattice as a DOT digraph
    Lattice,
    /// Recompute everything and compare against the embedded reference
    /// transcription, claim by claim
    ReproducePaper {
        /// Self-test hook: corrupt one reference cell (given as `row,col`
        /// element names) before comparing
        #[arg(long, value_name = "ROW,COL", hide = true)]
        corrupt_cell: Option<String>,
    },
}

fn emit(output: &Option<PathBuf>, text: &str) -> i32 {
    match output {
        Some(path) => match fs::write(path, text) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                EXIT_INPUT
            }
        },
        None => {
            print!("{text}");
            EXIT_OK
        }
    }
}

fn load_particles(input: &Option<PathBuf>) -> Result<ParticleSet, String> {
    match input {
        None => Ok(ParticleSet::leptons()),
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            ParticleSet::parse_definition(&text).map_err(|e| e.to_string())
        }
    }
}

/// Runs one command and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match &cli.command {
        Command::Derive => {
            let ps = match load_particles(&cli.input) {
                Ok(ps) => ps,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return EXIT_INPUT;
                }
            };
            let table = ps.derive_table();
            let text = match cli.format {
                OutputFormat::Text => render::render_table_text(&table, cli.unicode),
                OutputFormat::Csv => render::render_table_csv(&table, cli.unicode),
                OutputFormat::Json => render::render_table_json(&table, cli.unicode),
            };
            emit(&cli.output, &text)
        }
        Command::Check => {
            let ps = match load_particles(&cli.input) {
                Ok(ps) => ps,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return EXIT_INPUT;
                }
            };
            let table = ps.derive_table();
            let report = axioms::classify(&table);
            let lists = axioms::associativity_violations(&table);
            let doc = render::check_doc(&table, &report, &lists, cli.unicode);
            let text = match cli.format {
                OutputFormat::Text => render::render_check_text(&doc),
                OutputFormat::Csv => render::render_check_csv(&doc),
                OutputFormat::Json => {
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&doc).expect("doc serializes")
                    )
                }
            };
            let code = emit(&cli.output, &text);
            if code != EXIT_OK {
                return code;
            }
            if report.classification.is_hv_group() {
                EXIT_OK
            } else {
                EXIT_VERIFICATION
            }
        }
        Command::Violations => {
            let ps = match load_particles(&cli.input) {
                Ok(ps) => ps,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return EXIT_INPUT;
                }
            };
            let table = ps.derive_table();
            let lists = axioms::associativity_violations(&table);
            let doc = render::violations_doc(&table, &lists, cli.unicode);
            let text = match cli.format {
                OutputFormat::Text => render::render_violations_text(&doc),
                OutputFormat::Csv => render::render_violations_csv(&doc),
                OutputFormat::Json => {
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&doc).expect("doc serializes")
                    )
                }
            };
            emit(&cli.output, &text)
        }
        Command::Subgroups => {
            let ps = match load_particles(&cli.input) {
                Ok(ps) => ps,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return EXIT_INPUT;
                }
            };
            let table = ps.derive_table();
            let census = match substructures::enumerate_subgroups(&table) {
                Ok(census) => census,
                Err(e @ Error::EnumerationBound { .. }) => {
                    eprintln!("error: {e}");
                    return EXIT_INPUT;
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_INPUT;
                }
            };
            let text = match cli.format {
                OutputFormat::Text => {
                    let fixtures = load_fixtures();
                    let reference =
                        (table.carrier() == fixtures.particles.carrier()).then_some(&fixtures);
                    render::render_census_text(&table, &census, reference, cli.unicode)
                }
                OutputFormat::Csv => render::render_census_csv(&table, &census, cli.unicode),
                OutputFormat::Json => {
                    let doc = render::census_doc(&table, &census, cli.unicode);
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&doc).expect("doc serializes")
                    )
                }
            };
            emit(&cli.output, &text)
        }
        Command::Lattice => {
            let ps = match load_particles(&cli.input) {
                Ok(ps) => ps,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return EXIT_INPUT;
                }
            };
            let table = ps.derive_table();
            let census = match substructures::enumerate_subgroups(&table) {
                Ok(census) => census,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_INPUT;
                }
            };
            let lattice = substructures::inclusion_lattice(&census);
            let dot = render::render_lattice_dot(&table, &census, &lattice, cli.unicode);
            emit(&cli.output, &dot)
        }
        Command::ReproducePaper { corrupt_cell } => {
            // always runs on the embedded reference data; --input is ignored
            let fixtures = load_fixtures();
            let corrupt = match corrupt_cell {
                None => None,
                Some(spec) => {
                    let carrier = fixtures.particles.carrier();
                    let parsed = spec.split_once(',').and_then(|(row, col)| {
                        Some((carrier.index_of(row.trim())?, carrier.index_of(col.trim())?))
                    });
                    match parsed {
                        Some(pair) => Some(pair),
                        None => {
                            eprintln!("error: --corrupt-cell expects `row,col` element names");
                            return EXIT_INPUT;
                        }
                    }
                }
            };
            let report = reproduce::run(&fixtures, corrupt);
            let text = render::render_reproduction_text(&report, &fixtures);
            let code = emit(&cli.output, &text);
            if code != EXIT_OK {
                return code;
            }
            if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_VERIFICATION
            }
        }
    }
}
