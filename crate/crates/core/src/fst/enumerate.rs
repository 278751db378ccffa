use std::collections::HashMap;

use super::{minimize, sort_shortlex, Dfa, FstError, StateId, SymbolTable, Transducer, Transition, Word};

/// Lists the language of a recognizer (or, after transposition, of a
/// generator) in shortlex order.
///
/// Fails with [`FstError::InfiniteLanguage`] when the minimal automaton has a
/// cycle, and with [`FstError::LimitExceeded`] when there are more than
/// `max_count` words.
pub fn enumerate_language(t: &Transducer, max_count: usize) -> Result<Vec<Word>, FstError> {
    let automaton = if t.is_recognizer() {
        minimize(t)
    } else if t.is_generator() {
        minimize(&t.transpose())
    } else {
        return Err(FstError::NotAnAutomaton);
    };
    enumerate_dfa(&automaton, max_count)
}

/// Lists the language of a DFA in shortlex order; see [`enumerate_language`].
pub fn enumerate_dfa(d: &Dfa, max_count: usize) -> Result<Vec<Word>, FstError> {
    let d = crate::fst::minimize_dfa(d);
    if d.is_empty_language() {
        return Ok(Vec::new());
    }
    let counts = path_counts(&d)?;
    let total = counts[d.initial() as usize];
    if total > max_count as u128 {
        return Err(FstError::LimitExceeded { limit: max_count });
    }
    let mut words = Vec::with_capacity(total as usize);
    let mut prefix = Vec::new();
    collect(&d, d.initial(), &mut prefix, &mut words);
    sort_shortlex(&mut words);
    Ok(words)
}

/// Number of accepted words from each state of a trim DFA, saturating; errors
/// on a cycle (every state of a minimal partial DFA is useful, so any cycle
/// pumps infinitely many words).
fn path_counts(d: &Dfa) -> Result<Vec<u128>, FstError> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }
    let n = d.num_states();
    let k = d.alphabet().len() as u32;
    let mut mark = vec![Mark::New; n];
    let mut counts = vec![0u128; n];
    // Iterative post-order DFS: (state, next symbol to try).
    let mut stack: Vec<(StateId, u32)> = vec![(d.initial(), 0)];
    mark[d.initial() as usize] = Mark::Open;
    while let Some(top) = stack.last_mut() {
        let (q, a) = *top;
        if a < k {
            top.1 += 1;
            if let Some(next) = d.next(q, a) {
                match mark[next as usize] {
                    Mark::Open => return Err(FstError::InfiniteLanguage),
                    Mark::New => {
                        mark[next as usize] = Mark::Open;
                        stack.push((next, 0));
                    }
                    Mark::Done => {}
                }
            }
        } else {
            let mut c = u128::from(d.is_final(q));
            for a in 0..k {
                if let Some(next) = d.next(q, a) {
                    c = c.saturating_add(counts[next as usize]);
                }
            }
            counts[q as usize] = c;
            mark[q as usize] = Mark::Done;
            stack.pop();
        }
    }
    Ok(counts)
}

fn collect(d: &Dfa, q: StateId, prefix: &mut Vec<u32>, out: &mut Vec<Word>) {
    if d.is_final(q) {
        out.push(Word::from(prefix.clone()));
    }
    for a in d.alphabet().symbols() {
        if let Some(next) = d.next(q, a) {
            prefix.push(a);
            collect(d, next, prefix, out);
            prefix.pop();
        }
    }
}

/// All outputs `v` with `word -> v`, in shortlex order.
///
/// The set is computed as the language of the product of `t` with the linear
/// automaton of `word`, read on the output tape. An infinite output set (an
/// output-producing ε-input cycle on an accepting path) is reported as
/// [`FstError::UnboundedTransduction`].
pub fn transduce(t: &Transducer, word: &Word, limit: usize) -> Result<Vec<Word>, FstError> {
    if !word.is_over(t.input_table()) {
        return Err(FstError::InvalidWord);
    }
    let len = word.len() as u32;
    let mut ids: HashMap<(StateId, u32), StateId> = HashMap::new();
    let mut nodes: Vec<(StateId, u32)> = Vec::new();
    let mut intern = |node: (StateId, u32), nodes: &mut Vec<(StateId, u32)>| -> StateId {
        *ids.entry(node).or_insert_with(|| {
            nodes.push(node);
            (nodes.len() - 1) as StateId
        })
    };
    let initial: Vec<StateId> = t.initial().iter().map(|&q| intern((q, 0), &mut nodes)).collect();
    let mut edges = Vec::new();
    let mut next = 0;
    while next < nodes.len() {
        let (q, pos) = nodes[next];
        let src = next as StateId;
        next += 1;
        for tr in t.transitions_on(q, None) {
            let dst = intern((tr.dst, pos), &mut nodes);
            edges.push(Transition::new(src, tr.output, None, dst));
        }
        if pos < len {
            for tr in t.transitions_on(q, Some(word[pos as usize])) {
                let dst = intern((tr.dst, pos + 1), &mut nodes);
                edges.push(Transition::new(src, tr.output, None, dst));
            }
        }
    }
    let accepting = nodes.iter().map(|&(q, pos)| pos == len && t.is_final(q)).collect();
    let outputs = Transducer::from_parts(
        t.output_table().clone(),
        SymbolTable::empty(),
        nodes.len(),
        initial,
        accepting,
        edges,
    );
    enumerate_language(&outputs, limit).map_err(|e| match e {
        FstError::InfiniteLanguage => FstError::UnboundedTransduction,
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> SymbolTable {
        SymbolTable::new(["a", "b"]).unwrap()
    }

    #[test]
    fn epsilon_only_language() {
        let eps = Transducer::new(ab(), SymbolTable::empty(), 1, [0], [0], []).unwrap();
        assert_eq!(enumerate_language(&eps, 10).unwrap(), vec![Word::empty()]);
    }

    #[test]
    fn infinite_and_limit() {
        let star = Transducer::new(ab(), SymbolTable::empty(), 1, [0], [0], [Transition::new(0, Some(0), None, 0)])
            .unwrap();
        assert!(matches!(enumerate_language(&star, 10), Err(FstError::InfiniteLanguage)));
        let two = Transducer::new(
            ab(),
            SymbolTable::empty(),
            2,
            [0],
            [1],
            [Transition::new(0, Some(0), None, 1), Transition::new(0, Some(1), None, 1)],
        )
        .unwrap();
        assert!(matches!(enumerate_language(&two, 1), Err(FstError::LimitExceeded { limit: 1 })));
        assert_eq!(enumerate_language(&two, 2).unwrap(), vec![Word::from(vec![0]), Word::from(vec![1])]);
    }

    #[test]
    fn generator_is_transposed() {
        let gen = Transducer::new(SymbolTable::empty(), ab(), 2, [0], [1], [Transition::new(0, None, Some(1), 1)])
            .unwrap();
        assert_eq!(enumerate_language(&gen, 5).unwrap(), vec![Word::from(vec![1])]);
    }

    #[test]
    fn unbounded_transduction() {
        // Inserts arbitrarily many b's.
        let t = Transducer::new(
            ab(),
            ab(),
            1,
            [0],
            [0],
            [Transition::new(0, Some(0), Some(0), 0), Transition::new(0, None, Some(1), 0)],
        )
        .unwrap();
        assert!(matches!(transduce(&t, &vec![0].into(), 100), Err(FstError::UnboundedTransduction)));
        assert!(matches!(transduce(&t, &vec![5].into(), 100), Err(FstError::InvalidWord)));
    }
}
