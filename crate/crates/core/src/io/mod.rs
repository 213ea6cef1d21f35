//! Instance files, generators, SVG output and CLI reports.

pub mod format;
pub mod generate;
pub mod report;
pub mod svg;

pub use format::{parse_instance, write_instance, ParseError};
pub use generate::{generate, generate_instance, Family, GenError, GenSpec};
pub use svg::render_svg;
