//! `{"elements": [...], "covers": [[lo, hi], ...]}` reading and writing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::lattice::Lattice;
use crate::order::poset::Poset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderJson {
    pub elements: Vec<String>,
    #[serde(default)]
    pub covers: Vec<(String, String)>,
}

impl OrderJson {
    pub fn to_poset(&self) -> Result<Poset> {
        Poset::from_pairs(self.elements.clone(), &self.covers)
    }

    /// Canonical form: labels sorted, cover pairs sorted.
    pub fn from_poset(p: &Poset) -> Self {
        let mut elements = p.labels().to_vec();
        elements.sort();
        let mut covers: Vec<(String, String)> = p
            .covers()
            .into_iter()
            .map(|(a, b)| (p.label(a).to_string(), p.label(b).to_string()))
            .collect();
        covers.sort();
        OrderJson { elements, covers }
    }
}

pub fn poset_from_json(text: &str) -> Result<Poset> {
    let doc: OrderJson = serde_json::from_str(text).map_err(json_error)?;
    doc.to_poset()
}

pub fn lattice_from_json(text: &str) -> Result<Lattice> {
    Lattice::from_poset(poset_from_json(text)?)
}

pub fn poset_to_json(p: &Poset) -> String {
    let mut s = serde_json::to_string_pretty(&OrderJson::from_poset(p)).expect("plain data serializes");
    s.push('\n');
    s
}

pub(crate) fn json_error(e: serde_json::Error) -> Error {
    Error::parse(e.line(), e.column(), e.to_string())
}
