use std::collections::BTreeSet;

use super::{minimize, Symbol, SymbolTable, Transducer, Transition};

/// Heuristic size reduction: read each `(input?, output?)` edge label as a
/// single letter, minimize the resulting recognizer, and read the letters back.
///
/// Preserves the relation. `(ε, ε)` edges disappear. The result is not a
/// minimal transducer in general.
pub fn reduce_transducer(t: &Transducer) -> Transducer {
    let pairs: Vec<(Option<Symbol>, Option<Symbol>)> = t
        .transitions()
        .iter()
        .map(|tr| (tr.input, tr.output))
        .filter(|p| *p != (None, None))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let label = |s: Option<Symbol>, table: &SymbolTable| s.map_or("ε".to_string(), |s| table.label(s).to_string());
    let pair_table = SymbolTable::new(
        pairs
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| format!("{}|{}#{i}", label(a, t.input_table()), label(b, t.output_table()))),
    )
    .expect("pair labels are distinct");

    let letter = |tr: &Transition| -> Option<Symbol> {
        if tr.input.is_none() && tr.output.is_none() {
            None
        } else {
            Some(pairs.binary_search(&(tr.input, tr.output)).expect("pair collected above") as Symbol)
        }
    };
    let recognizer = Transducer::from_parts(
        pair_table,
        SymbolTable::empty(),
        t.num_states(),
        t.initial().to_vec(),
        (0..t.num_states() as u32).map(|q| t.is_final(q)).collect(),
        t.transitions().iter().map(|tr| Transition::new(tr.src, letter(tr), None, tr.dst)).collect(),
    );
    let min = minimize(&recognizer);
    if min.is_empty_language() {
        return Transducer::from_parts(
            t.input_table().clone(),
            t.output_table().clone(),
            1,
            vec![0],
            vec![false],
            Vec::new(),
        );
    }
    let transitions = min
        .edges()
        .map(|(q, a, d)| {
            let (i, o) = pairs[a as usize];
            Transition::new(q, i, o, d)
        })
        .collect();
    Transducer::from_parts(
        t.input_table().clone(),
        t.output_table().clone(),
        min.num_states(),
        vec![min.initial()],
        (0..min.num_states() as u32).map(|q| min.is_final(q)).collect(),
        transitions,
    )
}
