//! Small example inputs shipped with the library.

use std::path::Path;

use crate::error::Result;
use crate::io::input::{parse_input, Format, Input};

#[derive(Clone, Copy, Debug)]
pub struct Dataset {
    pub name: &'static str,
    pub file: &'static str,
    pub provenance: &'static str,
    text: &'static str,
}

impl Dataset {
    pub fn text(&self) -> &'static str {
        self.text
    }

    pub fn load(&self) -> Result<Input> {
        parse_input(self.text, Format::from_path(Path::new(self.file))?)
    }
}

const DATASETS: &[Dataset] = &[
    Dataset {
        name: "m3",
        file: "m3.json",
        provenance: "the diamond M3: three atoms between bottom and top",
        text: include_str!("../../../../data/m3.json"),
    },
    Dataset {
        name: "n5",
        file: "n5.json",
        provenance: "the pentagon N5: 0 < a < c < 1 and 0 < b < 1",
        text: include_str!("../../../../data/n5.json"),
    },
    Dataset {
        name: "b3",
        file: "b3.json",
        provenance: "the Boolean lattice of subsets of {a, b, c}",
        text: include_str!("../../../../data/b3.json"),
    },
    Dataset {
        name: "fig4",
        file: "fig4.json",
        provenance: "seven elements: atoms j1, j2, j3; m1 = j1 v j2, m2 = j2 v j3; \
                     its up-set and down-set completions differ in size (9 vs 8)",
        text: include_str!("../../../../data/fig4.json"),
    },
    Dataset {
        name: "fig4dual",
        file: "fig4dual.json",
        provenance: "the order dual of fig4, relabelled (atoms a1, a2; coatoms c1, c2, c3)",
        text: include_str!("../../../../data/fig4dual.json"),
    },
    Dataset {
        name: "fig6",
        file: "fig6.json",
        provenance: "a 14-element lattice with a 16-element distributive order extension \
                     smaller than either completion; elements numbered as drawn",
        text: include_str!("../../../../data/fig6.json"),
    },
    Dataset {
        name: "uk",
        file: "uk.cxt",
        provenance: "administrative geography of the British Isles: 8 countries and crown \
                     dependencies by 6 geographic and legal attributes; incidence chosen so \
                     that its canonical direct basis has 3 distributive and 5 non-distributive implications",
        text: include_str!("../../../../data/uk.cxt"),
    },
];

pub fn all() -> &'static [Dataset] {
    DATASETS
}

/// Looks a dataset up by name (`uk`), file name (`uk.cxt`) or
/// `data/`-relative path (`data/uk.cxt`).
pub fn find(source: &str) -> Option<&'static Dataset> {
    let file = source.rsplit(['/', '\\']).next().unwrap_or(source);
    DATASETS.iter().find(|d| d.name == source || d.file == file)
}
