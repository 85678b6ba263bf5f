//! File formats: Burmeister CXT contexts, CSV tables and reports, scheme
//! definition files, and DOT lattice diagrams.

pub mod csv;
pub mod cxt;
pub mod dot;
pub mod scheme;

pub use csv::{crosstab_csv, hotspots_csv, parse_csv_table, plotdata_csv};
pub use cxt::{parse_cxt, write_cxt};
pub use dot::{export_dot, Labeling};
pub use scheme::parse_scheme;
