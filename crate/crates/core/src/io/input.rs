use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::fca::{read_csv, read_cxt, FormalContext};
use crate::order::{json, Lattice, OrderJson};

/// A loaded input file.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug)]
pub enum Input {
    Context(FormalContext),
    Lattice(Lattice),
    /// A lattice together with a larger lattice extending it.
    Extension { lattice: Lattice, extension: Lattice },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Cxt,
    Csv,
    Json,
}

impl Format {
    pub fn from_path(path: &Path) -> Result<Format> {
        match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
            Some("cxt") => Ok(Format::Cxt),
            Some("csv") => Ok(Format::Csv),
            Some("json") => Ok(Format::Json),
            _ => Err(Error::Format(format!(
                "cannot tell the format of `{}`; expected .cxt, .csv or .json",
                path.display()
            ))),
        }
    }
}

#[derive(Deserialize)]
struct LatticeDoc {
    #[serde(flatten)]
    order: OrderJson,
    extension: Option<OrderJson>,
}

pub fn parse_input(text: &str, format: Format) -> Result<Input> {
    match format {
        Format::Cxt => read_cxt(text).map(Input::Context),
        Format::Csv => read_csv(text).map(Input::Context),
        Format::Json => {
            let doc: LatticeDoc = serde_json::from_str(text).map_err(json::json_error)?;
            let lattice = Lattice::from_poset(doc.order.to_poset()?)?;
            match doc.extension {
                None => Ok(Input::Lattice(lattice)),
                Some(ext) => Ok(Input::Extension {
                    lattice,
                    extension: Lattice::from_poset(ext.to_poset()?)?,
                }),
            }
        }
    }
}

/// Reads `source` from disk, or falls back to a bundled dataset when `source`
/// is a dataset name or a `data/<file>` path that does not exist locally.
pub fn load_input(source: &str) -> Result<Input> {
    let path = Path::new(source);
    if path.exists() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Format(format!("cannot read `{source}`: {e}")))?;
        return parse_input(&text, Format::from_path(path)?);
    }
    match super::datasets::find(source) {
        Some(d) => d.load(),
        None => Err(Error::Format(format!(
            "`{source}` is neither a readable file nor a bundled dataset"
        ))),
    }
}
