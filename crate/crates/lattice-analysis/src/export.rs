use std::fmt::Display;

use serde::{Deserialize, Serialize};

use crate::poset::{Poset, PosetError};

/// Serialised form of a poset: rendered elements, covering edges as index
/// pairs into the element list, and the bottom index.
#[derive(Serialize, Deserialize)]
struct PosetDocument {
    elements: Vec<String>,
    covers: Vec<(usize, usize)>,
    bottom: usize,
}

impl<E: Display> Poset<E> {
    fn document(&self) -> PosetDocument {
        let rendered: Vec<String> = self.elements().iter().map(E::to_string).collect();
        // Lexicographic element order makes the output independent of the
        // internal topological order.
        let mut order: Vec<usize> = (0..rendered.len()).collect();
        order.sort_by(|&a, &b| rendered[a].cmp(&rendered[b]));
        let mut rank = vec![0usize; rendered.len()];
        for (pos, &old) in order.iter().enumerate() {
            rank[old] = pos;
        }
        let mut covers: Vec<(usize, usize)> = self
            .covers()
            .iter()
            .map(|&(low, high)| (rank[low], rank[high]))
            .collect();
        covers.sort_unstable();
        PosetDocument {
            elements: order.iter().map(|&old| rendered[old].clone()).collect(),
            covers,
            bottom: rank[self.bottom()],
        }
    }

    /// Renders the poset as a JSON object with `elements` sorted
    /// lexicographically, `covers` as sorted index pairs, and `bottom`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.document()).expect("document serialisation cannot fail")
    }

    /// Renders the covering relation in Graphviz DOT, edges pointing from
    /// lower to higher element, drawn bottom-up.
    pub fn to_dot(&self) -> String {
        let doc = self.document();
        let mut dot = String::from("digraph poset {\n    rankdir=BT;\n");
        for label in &doc.elements {
            dot.push_str(&format!("    {};\n", quote(label)));
        }
        for &(low, high) in &doc.covers {
            dot.push_str(&format!(
                "    {} -> {};\n",
                quote(&doc.elements[low]),
                quote(&doc.elements[high])
            ));
        }
        dot.push_str("}\n");
        dot
    }
}

fn quote(label: &str) -> String {
    let escaped = label.replace('\\', "\\\\").replace('"', "\\\"");
    format!("\"{escaped}\"")
}

/// Loads a poset of rendered elements back from its JSON form, running the
/// full structural validation.
pub fn poset_from_json(text: &str) -> Result<Poset<String>, PosetError> {
    let doc: PosetDocument =
        serde_json::from_str(text).map_err(|e| PosetError::InvalidDocument(e.to_string()))?;
    Poset::new(doc.elements, doc.covers, doc.bottom)
}
