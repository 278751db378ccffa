use std::collections::HashMap;

use super::{FstError, StateId, Transducer, Transition};

/// Composition: `x -> y` in the result iff `x ->_first z` and `z ->_second y`
/// for some `z`. Written `second ∘ first` in the usual notation.
///
/// States are pairs `(q_first, q_second)` discovered by traversal from the
/// initial pairs, so only reachable pairs are materialized. Edges follow three
/// rules: `first` moves alone on an ε-output edge, `second` moves alone on an
/// ε-input edge, or both move together on a shared middle symbol.
pub fn compose(first: &Transducer, second: &Transducer) -> Result<Transducer, FstError> {
    if first.output_table() != second.input_table() {
        return Err(FstError::AlphabetMismatch {
            left: first.output_table().labels().to_vec(),
            right: second.input_table().labels().to_vec(),
        });
    }

    let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut pairs: Vec<(StateId, StateId)> = Vec::new();
    let mut intern = |p: (StateId, StateId), pairs: &mut Vec<(StateId, StateId)>| -> StateId {
        *ids.entry(p).or_insert_with(|| {
            pairs.push(p);
            (pairs.len() - 1) as StateId
        })
    };

    let mut initial = Vec::new();
    for &qu in first.initial() {
        for &qv in second.initial() {
            initial.push(intern((qu, qv), &mut pairs));
        }
    }

    let mut transitions = Vec::new();
    let mut next = 0usize;
    while next < pairs.len() {
        let (qu, qv) = pairs[next];
        let src = next as StateId;
        next += 1;

        for t in first.transitions_from(qu) {
            match t.output {
                None => {
                    let dst = intern((t.dst, qv), &mut pairs);
                    transitions.push(Transition::new(src, t.input, None, dst));
                }
                Some(b) => {
                    for s in second.transitions_on(qv, Some(b)) {
                        let dst = intern((t.dst, s.dst), &mut pairs);
                        transitions.push(Transition::new(src, t.input, s.output, dst));
                    }
                }
            }
        }
        for s in second.transitions_on(qv, None) {
            let dst = intern((qu, s.dst), &mut pairs);
            transitions.push(Transition::new(src, None, s.output, dst));
        }
    }

    let accepting = pairs
        .iter()
        .map(|&(qu, qv)| first.is_final(qu) && second.is_final(qv))
        .collect();
    Ok(Transducer::from_parts(
        first.input_table().clone(),
        second.output_table().clone(),
        pairs.len(),
        initial,
        accepting,
        transitions,
    ))
}

/// `n`-fold self-composition, trimming after every step.
pub fn power(t: &Transducer, n: usize) -> Result<Transducer, FstError> {
    if n == 0 {
        return Err(FstError::ZeroPower);
    }
    if t.input_table() != t.output_table() {
        return Err(FstError::AlphabetMismatch {
            left: t.input_table().labels().to_vec(),
            right: t.output_table().labels().to_vec(),
        });
    }
    let mut acc = t.clone();
    for _ in 1..n {
        acc = compose(&acc, t)?.trim();
    }
    Ok(acc)
}
