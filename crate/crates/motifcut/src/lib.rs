//! File formats, motif specifications, JSON reports and the command line front
//! end for [`motifcut_core`].

pub mod cli;
pub mod io;
pub mod report;
pub mod spec;

pub use io::{parse_graph, read_graph, render_graph, write_graph, ParseError};
pub use spec::parse_motifs;
