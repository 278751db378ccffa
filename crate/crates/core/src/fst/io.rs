//! JSON and Graphviz DOT serialization of transducers.
//!
//! JSON layout:
//!
//! ```json
//! {
//!   "input_alphabet": ["1", "2"],
//!   "output_alphabet": [],
//!   "num_states": 2,
//!   "initial": [0],
//!   "final": [1],
//!   "transitions": [[0, "1", null, 1]]
//! }
//! ```
//!
//! The mark `◊` is written as `*`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{FstError, SymbolTable, Transducer, Transition, MARK_ASCII, MARK_LABEL};

#[derive(Serialize, Deserialize)]
struct JsonAutomaton {
    input_alphabet: Vec<String>,
    output_alphabet: Vec<String>,
    num_states: usize,
    initial: Vec<u32>,
    #[serde(rename = "final")]
    finals: Vec<u32>,
    transitions: Vec<(u32, Option<String>, Option<String>, u32)>,
}

fn to_ascii(label: &str) -> String {
    if label == MARK_LABEL {
        MARK_ASCII.to_string()
    } else {
        label.to_string()
    }
}

fn from_ascii(label: &str) -> String {
    if label == MARK_ASCII {
        MARK_LABEL.to_string()
    } else {
        label.to_string()
    }
}

pub fn to_json(t: &Transducer) -> String {
    let ascii = |table: &SymbolTable| table.labels().iter().map(|l| to_ascii(l)).collect();
    let doc = JsonAutomaton {
        input_alphabet: ascii(t.input_table()),
        output_alphabet: ascii(t.output_table()),
        num_states: t.num_states(),
        initial: t.initial().to_vec(),
        finals: t.finals().collect(),
        transitions: t
            .transitions()
            .iter()
            .map(|tr| {
                (
                    tr.src,
                    tr.input.map(|a| to_ascii(t.input_table().label(a))),
                    tr.output.map(|b| to_ascii(t.output_table().label(b))),
                    tr.dst,
                )
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("automaton serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<Transducer, FstError> {
    let doc: JsonAutomaton = serde_json::from_str(text).map_err(|e| FstError::Json(e.to_string()))?;
    let input = SymbolTable::new(doc.input_alphabet.iter().map(|l| from_ascii(l)))?;
    let output = SymbolTable::new(doc.output_alphabet.iter().map(|l| from_ascii(l)))?;
    let lookup = |table: &SymbolTable, label: &Option<String>| -> Result<Option<u32>, FstError> {
        match label {
            None => Ok(None),
            Some(l) => table.index_of(l).map(Some).ok_or_else(|| FstError::UnknownSymbol(l.clone())),
        }
    };
    let transitions = doc
        .transitions
        .iter()
        .map(|(src, a, b, dst)| Ok(Transition::new(*src, lookup(&input, a)?, lookup(&output, b)?, *dst)))
        .collect::<Result<Vec<_>, FstError>>()?;
    Transducer::new(input, output, doc.num_states, doc.initial, doc.finals, transitions)
}

/// Graphviz rendering: double circles for final states, an arrow from an
/// invisible node for each initial state, edges labelled `in|out`.
pub fn to_dot(t: &Transducer, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{name}\" {{");
    let _ = writeln!(out, "  rankdir=LR;");
    for q in 0..t.num_states() as u32 {
        let shape = if t.is_final(q) { "doublecircle" } else { "circle" };
        let _ = writeln!(out, "  q{q} [label=\"{q}\", shape={shape}];");
    }
    for &q in t.initial() {
        let _ = writeln!(out, "  init{q} [shape=point, style=invis];");
        let _ = writeln!(out, "  init{q} -> q{q};");
    }
    for tr in t.transitions() {
        let i = tr.input.map_or("ε", |a| t.input_table().label(a));
        let o = tr.output.map_or("ε", |b| t.output_table().label(b));
        let _ = writeln!(out, "  q{} -> q{} [label=\"{}|{}\"];", tr.src, tr.dst, escape(i), escape(o));
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
