#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use audioactive::fst::{StateId, SymbolTable, Transducer, Transition, Word};
use rand::Rng;

/// All words over `0..k` of length at most `max_len`, shortest first.
pub fn words_upto(k: u32, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * k as usize);
        for w in &layer {
            for s in 0..k {
                let mut v = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Membership by explicit search over `(state, position)`, ε-moves included.
pub fn brute_accepts(t: &Transducer, w: &Word) -> bool {
    let mut seen = HashSet::new();
    let mut stack: Vec<(StateId, usize)> = t.initial().iter().map(|&q| (q, 0)).collect();
    while let Some((q, i)) = stack.pop() {
        if !seen.insert((q, i)) {
            continue;
        }
        if i == w.len() && t.is_final(q) {
            return true;
        }
        for tr in t.transitions() {
            if tr.src != q {
                continue;
            }
            match tr.input {
                None => stack.push((tr.dst, i)),
                Some(a) if i < w.len() && w[i] == a => stack.push((tr.dst, i + 1)),
                _ => {}
            }
        }
    }
    false
}

/// Outputs of `t` on `w` of length at most `cap`.
pub fn brute_outputs(t: &Transducer, w: &Word, cap: usize) -> BTreeSet<Vec<u32>> {
    let mut seen = HashSet::new();
    let mut out = BTreeSet::new();
    let mut stack: Vec<(StateId, usize, Vec<u32>)> = t.initial().iter().map(|&q| (q, 0, Vec::new())).collect();
    while let Some((q, i, o)) = stack.pop() {
        if !seen.insert((q, i, o.clone())) {
            continue;
        }
        if i == w.len() && t.is_final(q) {
            out.insert(o.clone());
        }
        for tr in t.transitions().iter().filter(|tr| tr.src == q) {
            let j = match tr.input {
                None => i,
                Some(a) if i < w.len() && w[i] == a => i + 1,
                _ => continue,
            };
            let mut o2 = o.clone();
            if let Some(b) = tr.output {
                if o2.len() == cap {
                    continue;
                }
                o2.push(b);
            }
            stack.push((tr.dst, j, o2));
        }
    }
    out
}

pub fn table(n: usize) -> SymbolTable {
    SymbolTable::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string())).unwrap()
}

/// A recognizer with `states` states over `alphabet`, random edges (some of
/// them ε), one or two initial states and random finals.
pub fn random_recognizer(rng: &mut impl Rng, states: usize, alphabet: &SymbolTable) -> Transducer {
    let k = alphabet.len() as u32;
    let mut edges = Vec::new();
    for q in 0..states as StateId {
        for _ in 0..rng.gen_range(0..=4) {
            let input = if rng.gen_bool(0.15) { None } else { Some(rng.gen_range(0..k)) };
            edges.push(Transition::new(q, input, None, rng.gen_range(0..states as StateId)));
        }
    }
    let initial: Vec<StateId> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(0..states as StateId)).collect();
    let finals: Vec<StateId> = (0..states as StateId).filter(|_| rng.gen_bool(0.4)).collect();
    Transducer::new(alphabet.clone(), SymbolTable::empty(), states, initial, finals, edges).unwrap()
}
