//! Command-line interface.
//!
//! Every subcommand reads one input (file or standard input), writes one
//! output (file or standard output), and keeps diagnostics on the error
//! stream. Domain failures exit with code 1 after printing a single
//! `ERROR <kind>: <detail>` line; usage errors exit with code 2.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::analytics::{self, CrossTab};
use crate::context::FormalContext;
use crate::error::Result;
use crate::implications;
use crate::io::{
    crosstab_csv, export_dot, hotspots_csv, parse_csv_table, parse_cxt, parse_scheme, plotdata_csv,
    write_cxt, Labeling,
};
use crate::lattice::{enumerate_concepts_with_limit, ConceptLattice, DEFAULT_CONCEPT_LIMIT};
use crate::scaling::{builtin_crime_scheme, builtin_geo_scheme, scale, ScalingScheme};

#[derive(Parser)]
#[command(
    name = "fca",
    version,
    about = "Formal concept analysis: scaling, concept lattices, implications, crime-by-location reports"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IoArgs {
    /// Input file (defaults to standard input)
    #[arg(short, long)]
    input: Option<PathBuf>,

    /// Output file (defaults to standard output)
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum LabelStyle {
    Full,
    Reduced,
}

#[derive(Subcommand)]
enum Command {
    /// Scale a many-valued CSV table into a formal context (CXT)
    Scale {
        #[command(flatten)]
        io: IoArgs,

        /// Scheme file path, or `builtin-crime` / `builtin-geo`
        #[arg(long)]
        scheme: String,
    },

    /// List every formal concept of a context
    Concepts {
        #[command(flatten)]
        io: IoArgs,

        /// Fail once the concept count would exceed this limit
        #[arg(long)]
        max_concepts: Option<usize>,
    },

    /// Export the concept lattice as a DOT line diagram
    Lattice {
        #[command(flatten)]
        io: IoArgs,

        /// Node labeling style
        #[arg(long, value_enum, default_value_t = LabelStyle::Reduced)]
        labels: LabelStyle,

        /// Fail once the concept count would exceed this limit
        #[arg(long)]
        max_concepts: Option<usize>,
    },

    /// Derive the attributes common to objects, or the objects common to attributes
    #[command(group(ArgGroup::new("side").required(true)))]
    Derive {
        #[command(flatten)]
        io: IoArgs,

        /// Comma-separated object names
        #[arg(long, value_delimiter = ',', group = "side")]
        objects: Option<Vec<String>>,

        /// Comma-separated attribute names
        #[arg(long, value_delimiter = ',', group = "side")]
        attributes: Option<Vec<String>>,
    },

    /// Cross-tabulate locations against crime types as CSV
    Crosstab {
        #[command(flatten)]
        io: IoArgs,

        /// Comma-separated location attribute names
        #[arg(long, value_delimiter = ',', required = true)]
        locations: Vec<String>,

        /// Comma-separated crime attribute names
        #[arg(long, value_delimiter = ',', required = true)]
        crimes: Vec<String>,
    },

    /// Rank locations by total crime count
    Hotspots {
        #[command(flatten)]
        io: IoArgs,

        /// Comma-separated location attribute names
        #[arg(long, value_delimiter = ',', required = true)]
        locations: Vec<String>,

        /// Comma-separated crime attribute names
        #[arg(long, value_delimiter = ',', required = true)]
        crimes: Vec<String>,
    },

    /// Check whether an attribute implication holds
    Implication {
        #[command(flatten)]
        io: IoArgs,

        /// Comma-separated premise attributes (empty when omitted)
        #[arg(long, value_delimiter = ',')]
        premise: Option<Vec<String>>,

        /// Comma-separated conclusion attributes (empty when omitted)
        #[arg(long, value_delimiter = ',')]
        conclusion: Option<Vec<String>>,
    },

    /// Emit per-location crime counts for charting
    Plotdata {
        #[command(flatten)]
        io: IoArgs,

        /// Comma-separated location attribute names
        #[arg(long, value_delimiter = ',', required = true)]
        locations: Vec<String>,

        /// Comma-separated crime attribute names
        #[arg(long, value_delimiter = ',', required = true)]
        crimes: Vec<String>,
    },
}

/// Parses the process arguments and runs one subcommand, returning the
/// process exit code. Usage errors exit directly through clap.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("ERROR {}: {}", err.kind(), err);
            1
        }
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String> {
    match path {
        Some(p) => Ok(fs::read_to_string(p)?),
        None => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn write_output(path: &Option<PathBuf>, data: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, data)?,
        None => io::stdout().write_all(data.as_bytes())?,
    }
    Ok(())
}

fn load_scheme(selector: &str) -> Result<ScalingScheme> {
    match selector {
        "builtin-crime" => Ok(builtin_crime_scheme()),
        "builtin-geo" => Ok(builtin_geo_scheme()),
        path => parse_scheme(&fs::read_to_string(path)?),
    }
}

fn input_context(io: &IoArgs) -> Result<FormalContext> {
    parse_cxt(&read_input(&io.input)?)
}

fn input_lattice(io: &IoArgs, max_concepts: Option<usize>) -> Result<ConceptLattice> {
    let ctx = input_context(io)?;
    enumerate_concepts_with_limit(&ctx, max_concepts.unwrap_or(DEFAULT_CONCEPT_LIMIT))
}

fn input_crosstab(io: &IoArgs, locations: &[String], crimes: &[String]) -> Result<CrossTab> {
    let ctx = input_context(io)?;
    analytics::cross_tab(&ctx, locations, crimes)
}

fn format_concepts(lattice: &ConceptLattice) -> String {
    let ctx = lattice.context();
    let mut out = String::new();
    for (i, concept) in lattice.concepts().iter().enumerate() {
        let extent = ctx
            .object_set_names(concept.extent())
            .expect("extent belongs to the lattice context");
        let intent = ctx
            .attribute_set_names(concept.intent())
            .expect("intent belongs to the lattice context");
        out.push_str(&format!(
            "{}: {{{}}} / {{{}}}\n",
            i,
            extent.join(","),
            intent.join(",")
        ));
    }
    out.push_str(&format!("total: {}\n", lattice.len()));
    out
}

fn execute(command: Command) -> Result<()> {
    match command {
        Command::Scale { io, scheme } => {
            let table = parse_csv_table(&read_input(&io.input)?)?;
            let ctx = scale(&table, &load_scheme(&scheme)?)?;
            write_output(&io.output, &write_cxt(&ctx))
        }
        Command::Concepts { io, max_concepts } => {
            let lattice = input_lattice(&io, max_concepts)?;
            write_output(&io.output, &format_concepts(&lattice))
        }
        Command::Lattice {
            io,
            labels,
            max_concepts,
        } => {
            let lattice = input_lattice(&io, max_concepts)?;
            let labeling = match labels {
                LabelStyle::Full => Labeling::Full,
                LabelStyle::Reduced => Labeling::Reduced,
            };
            write_output(&io.output, &export_dot(&lattice, labeling))
        }
        Command::Derive {
            io,
            objects,
            attributes,
        } => {
            let ctx = input_context(&io)?;
            let names = match (objects, attributes) {
                (Some(objects), None) => {
                    let set = ctx.object_set(objects.iter().map(String::as_str))?;
                    ctx.attribute_set_names(&ctx.derive_objects(&set)?)?
                }
                (None, Some(attributes)) => {
                    let set = ctx.attribute_set(attributes.iter().map(String::as_str))?;
                    ctx.object_set_names(&ctx.derive_attributes(&set)?)?
                }
                // clap's argument group guarantees exactly one side
                _ => unreachable!("argument group enforces exactly one of the two flags"),
            };
            write_output(&io.output, &format!("{}\n", names.join(",")))
        }
        Command::Crosstab {
            io,
            locations,
            crimes,
        } => {
            let xt = input_crosstab(&io, &locations, &crimes)?;
            write_output(&io.output, &crosstab_csv(&xt))
        }
        Command::Hotspots {
            io,
            locations,
            crimes,
        } => {
            let xt = input_crosstab(&io, &locations, &crimes)?;
            write_output(&io.output, &hotspots_csv(&analytics::hotspots(&xt)))
        }
        Command::Implication {
            io,
            premise,
            conclusion,
        } => {
            let ctx = input_context(&io)?;
            let premise =
                ctx.attribute_set(premise.unwrap_or_default().iter().map(String::as_str))?;
            let conclusion =
                ctx.attribute_set(conclusion.unwrap_or_default().iter().map(String::as_str))?;
            let imp = implications::Implication::new(premise, conclusion)?;
            let verdict = if implications::holds(&ctx, &imp)? {
                "holds"
            } else {
                "fails"
            };
            write_output(&io.output, &format!("{}\n", verdict))
        }
        Command::Plotdata {
            io,
            locations,
            crimes,
        } => {
            let xt = input_crosstab(&io, &locations, &crimes)?;
            write_output(&io.output, &plotdata_csv(&xt))
        }
    }
}
