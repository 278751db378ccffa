use std::collections::{HashMap, VecDeque};

use super::{FstError, StateId, Symbol, SymbolTable, Transducer, Transition, Word};

const NONE: StateId = StateId::MAX;

/// A partial deterministic recognizer: one initial state, no ε-moves, at most
/// one successor per `(state, symbol)`. A missing successor means reject.
///
/// Values returned by [`determinize`] and [`minimize`] are numbered in
/// breadth-first discovery order from the initial state, exploring symbols in
/// table order, so two minimal automata of the same language are equal as values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: SymbolTable,
    initial: StateId,
    accepting: Vec<bool>,
    delta: Vec<StateId>,
}

impl Dfa {
    /// Builds a DFA from a successor table (`table[q][a]`).
    pub fn from_table(
        alphabet: SymbolTable,
        initial: StateId,
        accepting: Vec<bool>,
        table: &[Vec<Option<StateId>>],
    ) -> Result<Self, FstError> {
        let n = accepting.len();
        let k = alphabet.len();
        if n == 0 || table.len() != n || initial as usize >= n {
            return Err(FstError::InvalidAutomaton("malformed DFA table".into()));
        }
        let mut delta = vec![NONE; n * k];
        for (q, row) in table.iter().enumerate() {
            if row.len() != k {
                return Err(FstError::InvalidAutomaton(format!("row {q} has {} entries, expected {k}", row.len())));
            }
            for (a, dst) in row.iter().enumerate() {
                if let Some(d) = dst {
                    if (*d as usize) >= n {
                        return Err(FstError::InvalidAutomaton(format!("successor {d} out of range")));
                    }
                    delta[q * k + a] = *d;
                }
            }
        }
        Ok(Dfa { alphabet, initial, accepting, delta })
    }

    /// The minimal partial DFA of the empty language: one non-final state, no edges.
    pub fn empty_language(alphabet: SymbolTable) -> Self {
        let k = alphabet.len();
        Dfa { alphabet, initial: 0, accepting: vec![false], delta: vec![NONE; k] }
    }

    pub fn alphabet(&self) -> &SymbolTable {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.accepting[q as usize]
    }

    pub fn next(&self, q: StateId, a: Symbol) -> Option<StateId> {
        let d = self.delta[q as usize * self.alphabet.len() + a as usize];
        (d != NONE).then_some(d)
    }

    /// `(state, symbol, successor)` for every defined transition, in state then symbol order.
    pub fn edges(&self) -> impl Iterator<Item = (StateId, Symbol, StateId)> + '_ {
        let k = self.alphabet.len();
        self.delta
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != NONE)
            .map(move |(i, &d)| ((i / k) as StateId, (i % k) as Symbol, d))
    }

    pub fn accepts(&self, word: &Word) -> bool {
        let mut q = self.initial;
        for &a in word.iter() {
            if !self.alphabet.contains(a) {
                return false;
            }
            match self.next(q, a) {
                Some(d) => q = d,
                None => return false,
            }
        }
        self.is_final(q)
    }

    pub fn is_empty_language(&self) -> bool {
        !self.accepting.iter().any(|&f| f)
    }

    /// The same automaton as a recognizer transducer.
    pub fn to_transducer(&self) -> Transducer {
        let transitions = self.edges().map(|(q, a, d)| Transition::new(q, Some(a), None, d)).collect();
        Transducer::from_parts(
            self.alphabet.clone(),
            SymbolTable::empty(),
            self.num_states(),
            vec![self.initial],
            self.accepting.clone(),
            transitions,
        )
    }

    /// Renumbers states in breadth-first order from the initial state, dropping
    /// unreachable ones.
    pub fn canonical(&self) -> Dfa {
        let k = self.alphabet.len();
        let mut order = vec![NONE; self.num_states()];
        let mut queue = VecDeque::from([self.initial]);
        let mut visited = vec![self.initial];
        order[self.initial as usize] = 0;
        while let Some(q) = queue.pop_front() {
            for a in 0..k as Symbol {
                if let Some(d) = self.next(q, a) {
                    if order[d as usize] == NONE {
                        order[d as usize] = visited.len() as StateId;
                        visited.push(d);
                        queue.push_back(d);
                    }
                }
            }
        }
        let n = visited.len();
        let mut delta = vec![NONE; n * k];
        let mut accepting = vec![false; n];
        for (new, &old) in visited.iter().enumerate() {
            accepting[new] = self.is_final(old);
            for a in 0..k {
                let d = self.delta[old as usize * k + a];
                if d != NONE {
                    delta[new * k + a] = order[d as usize];
                }
            }
        }
        Dfa { alphabet: self.alphabet.clone(), initial: 0, accepting, delta }
    }

    /// Adds a non-final sink state if some transition is missing, so that every
    /// `(state, symbol)` has a successor.
    pub fn complete(&self) -> Dfa {
        if !self.delta.contains(&NONE) {
            return self.clone();
        }
        let dead = self.num_states() as StateId;
        let mut delta: Vec<StateId> = self.delta.iter().map(|&d| if d == NONE { dead } else { d }).collect();
        delta.extend(std::iter::repeat(dead).take(self.alphabet.len()));
        let mut accepting = self.accepting.clone();
        accepting.push(false);
        Dfa { alphabet: self.alphabet.clone(), initial: self.initial, accepting, delta }
    }

    /// Whether the two automata are equal up to a bijection of states, found by
    /// a parallel traversal from the initial states.
    pub fn isomorphic(&self, other: &Dfa) -> bool {
        if self.alphabet != other.alphabet || self.num_states() != other.num_states() {
            return false;
        }
        let k = self.alphabet.len() as Symbol;
        let mut fwd = vec![NONE; self.num_states()];
        let mut bwd = vec![NONE; other.num_states()];
        let mut queue = VecDeque::from([(self.initial, other.initial)]);
        fwd[self.initial as usize] = other.initial;
        bwd[other.initial as usize] = self.initial;
        let mut mapped = 1usize;
        while let Some((p, q)) = queue.pop_front() {
            if self.is_final(p) != other.is_final(q) {
                return false;
            }
            for a in 0..k {
                match (self.next(p, a), other.next(q, a)) {
                    (None, None) => {}
                    (Some(p2), Some(q2)) => {
                        let (f, b) = (fwd[p2 as usize], bwd[q2 as usize]);
                        if f == NONE && b == NONE {
                            fwd[p2 as usize] = q2;
                            bwd[q2 as usize] = p2;
                            mapped += 1;
                            queue.push_back((p2, q2));
                        } else if f != q2 || b != p2 {
                            return false;
                        }
                    }
                    _ => return false,
                }
            }
        }
        mapped == self.num_states()
    }
}

/// Plain ε-NFA used internally by the subset construction.
struct Nfa {
    symbols: usize,
    initial: Vec<StateId>,
    accepting: Vec<bool>,
    epsilon: Vec<Vec<StateId>>,
    moves: Vec<Vec<(Symbol, StateId)>>,
}

impl Nfa {
    fn with_states(symbols: usize, n: usize) -> Self {
        Nfa {
            symbols,
            initial: Vec::new(),
            accepting: vec![false; n],
            epsilon: vec![Vec::new(); n],
            moves: vec![Vec::new(); n],
        }
    }

    /// Input side of a transducer; output labels are ignored.
    fn from_input_side(t: &Transducer) -> Self {
        let mut nfa = Nfa::with_states(t.input_table().len(), t.num_states());
        nfa.initial = t.initial().to_vec();
        for q in t.finals() {
            nfa.accepting[q as usize] = true;
        }
        for tr in t.transitions() {
            match tr.input {
                None => nfa.epsilon[tr.src as usize].push(tr.dst),
                Some(a) => nfa.moves[tr.src as usize].push((a, tr.dst)),
            }
        }
        nfa
    }

    fn reversed(&self) -> Self {
        let n = self.accepting.len();
        let mut r = Nfa::with_states(self.symbols, n);
        r.initial = (0..n as StateId).filter(|&q| self.accepting[q as usize]).collect();
        for &q in &self.initial {
            r.accepting[q as usize] = true;
        }
        for q in 0..n {
            for &d in &self.epsilon[q] {
                r.epsilon[d as usize].push(q as StateId);
            }
            for &(a, d) in &self.moves[q] {
                r.moves[d as usize].push((a, q as StateId));
            }
        }
        r
    }

    fn reversed_dfa(d: &Dfa) -> Self {
        let mut r = Nfa::with_states(d.alphabet.len(), d.num_states());
        r.initial = (0..d.num_states() as StateId).filter(|&q| d.is_final(q)).collect();
        r.accepting[d.initial as usize] = true;
        for (q, a, dst) in d.edges() {
            r.moves[dst as usize].push((a, q));
        }
        r
    }
}

/// ε-closure with a generation-stamped visited array, reused across calls.
struct Closure {
    stamp: Vec<u32>,
    generation: u32,
}

impl Closure {
    fn new(n: usize) -> Self {
        Closure { stamp: vec![0; n], generation: 0 }
    }

    fn close(&mut self, nfa: &Nfa, seeds: &[StateId]) -> Vec<StateId> {
        self.generation += 1;
        let g = self.generation;
        let mut out = Vec::with_capacity(seeds.len());
        for &q in seeds {
            if self.stamp[q as usize] != g {
                self.stamp[q as usize] = g;
                out.push(q);
            }
        }
        let mut i = 0;
        while i < out.len() {
            let q = out[i];
            for &d in &nfa.epsilon[q as usize] {
                if self.stamp[d as usize] != g {
                    self.stamp[d as usize] = g;
                    out.push(d);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }
}

fn subset_construction(nfa: &Nfa, alphabet: SymbolTable) -> Dfa {
    let k = nfa.symbols;
    let mut closure = Closure::new(nfa.accepting.len());
    let start = closure.close(nfa, &nfa.initial);

    let mut ids: HashMap<Box<[StateId]>, StateId> = HashMap::new();
    let mut subsets: Vec<Box<[StateId]>> = Vec::new();
    let start: Box<[StateId]> = start.into_boxed_slice();
    ids.insert(start.clone(), 0);
    subsets.push(start);

    let mut delta: Vec<StateId> = Vec::new();
    let mut buckets: Vec<Vec<StateId>> = vec![Vec::new(); k];
    let mut next = 0usize;
    while next < subsets.len() {
        for b in buckets.iter_mut() {
            b.clear();
        }
        for &q in subsets[next].iter() {
            for &(a, d) in &nfa.moves[q as usize] {
                buckets[a as usize].push(d);
            }
        }
        for bucket in &buckets {
            if bucket.is_empty() {
                delta.push(NONE);
                continue;
            }
            let target = closure.close(nfa, bucket).into_boxed_slice();
            let id = match ids.get(&target) {
                Some(&id) => id,
                None => {
                    let id = subsets.len() as StateId;
                    ids.insert(target.clone(), id);
                    subsets.push(target);
                    id
                }
            };
            delta.push(id);
        }
        next += 1;
    }

    let accepting = subsets.iter().map(|s| s.iter().any(|&q| nfa.accepting[q as usize])).collect();
    Dfa { alphabet, initial: 0, accepting, delta }
}

/// Subset construction over the input side of `t` (output labels are
/// ignored). Only subsets reachable from the ε-closure of the initial states
/// are built, and the empty subset is never a state unless it is the initial one.
pub fn determinize(t: &Transducer) -> Dfa {
    subset_construction(&Nfa::from_input_side(t), t.input_table().clone())
}

/// Minimal partial DFA of the input language of `t`, by Brzozowski's method:
/// reverse, determinize, reverse again, determinize again.
pub fn minimize(t: &Transducer) -> Dfa {
    let nfa = Nfa::from_input_side(t);
    brzozowski(&nfa, t.input_table())
}

/// Minimal partial DFA of the language of `d`.
pub fn minimize_dfa(d: &Dfa) -> Dfa {
    brzozowski(&Nfa::reversed_dfa(d).reversed(), &d.alphabet)
}

fn brzozowski(nfa: &Nfa, alphabet: &SymbolTable) -> Dfa {
    let reversed = subset_construction(&nfa.reversed(), alphabet.clone());
    if reversed.is_empty_language() {
        return Dfa::empty_language(alphabet.clone());
    }
    let min = subset_construction(&Nfa::reversed_dfa(&reversed), alphabet.clone());
    if min.is_empty_language() {
        return Dfa::empty_language(alphabet.clone());
    }
    min
}

/// Minimal DFA of the complement of the input language of `t`.
pub fn complement(t: &Transducer) -> Dfa {
    let d = determinize(t).complete();
    let flipped = Dfa {
        alphabet: d.alphabet.clone(),
        initial: d.initial,
        accepting: d.accepting.iter().map(|&f| !f).collect(),
        delta: d.delta.clone(),
    };
    minimize_dfa(&flipped)
}

/// Language equality of the input languages of two transducers over the same input table.
pub fn equivalent(a: &Transducer, b: &Transducer) -> Result<bool, FstError> {
    if a.input_table() != b.input_table() {
        return Err(FstError::AlphabetMismatch {
            left: a.input_table().labels().to_vec(),
            right: b.input_table().labels().to_vec(),
        });
    }
    Ok(minimize(a).isomorphic(&minimize(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> SymbolTable {
        SymbolTable::new(["a", "b"]).unwrap()
    }

    fn recognizer(n: usize, init: &[u32], fin: &[u32], edges: &[(u32, Option<u32>, u32)]) -> Transducer {
        Transducer::new(
            ab(),
            SymbolTable::empty(),
            n,
            init.iter().copied(),
            fin.iter().copied(),
            edges.iter().map(|&(s, a, d)| Transition::new(s, a, None, d)),
        )
        .unwrap()
    }

    #[test]
    fn one_state_universal_is_fixed_point() {
        let all = recognizer(1, &[0], &[0], &[(0, Some(0), 0), (0, Some(1), 0)]);
        let d = determinize(&all);
        assert_eq!(d.num_states(), 1);
        assert_eq!(minimize(&all), d);
        assert!(complement(&all).is_empty_language());
        assert_eq!(complement(&all).num_states(), 1);
    }

    #[test]
    fn empty_language_has_one_state() {
        let none = recognizer(2, &[0], &[], &[(0, Some(0), 1)]);
        let m = minimize(&none);
        assert_eq!(m, Dfa::empty_language(ab()));
        let no_init = recognizer(1, &[], &[0], &[]);
        assert_eq!(minimize(&no_init).num_states(), 1);
    }

    #[test]
    fn epsilon_language() {
        let eps = recognizer(1, &[0], &[0], &[]);
        let m = minimize(&eps);
        assert_eq!(m.num_states(), 1);
        assert!(m.accepts(&Word::empty()));
        assert_eq!(minimize(&eps.reverse()), m);
    }

    #[test]
    fn minimize_merges_equivalent_states() {
        // Two parallel branches for "a" and "b", both ending in finals.
        let t = recognizer(4, &[0], &[1, 2], &[(0, Some(0), 1), (0, Some(1), 2), (1, None, 3)]);
        let m = minimize(&t);
        assert_eq!(m.num_states(), 2);
        assert_eq!(minimize_dfa(&m), m);
    }

    #[test]
    fn canonical_and_isomorphic() {
        let t = recognizer(3, &[0], &[2], &[(0, Some(0), 1), (1, Some(1), 2), (2, Some(0), 1)]);
        let d = determinize(&t);
        // Same automaton with states permuted 0->2, 1->0, 2->1.
        let table: Vec<Vec<Option<u32>>> = vec![vec![None, Some(1)], vec![Some(0), None], vec![Some(0), None]];
        let permuted = Dfa::from_table(ab(), 2, vec![false, true, false], &table).unwrap();
        assert!(d.isomorphic(&permuted));
        assert_eq!(permuted.canonical(), d);
    }

    #[test]
    fn equivalence_requires_same_alphabet() {
        let a = recognizer(1, &[0], &[0], &[]);
        let b = Transducer::new(SymbolTable::new(["x"]).unwrap(), SymbolTable::empty(), 1, [0], [0], []).unwrap();
        assert!(equivalent(&a, &b).is_err());
        assert!(equivalent(&a, &a).unwrap());
    }
}
