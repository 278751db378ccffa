use std::collections::HashSet;

use super::{FstError, Symbol, SymbolTable, Word};

pub type StateId = u32;

/// One edge `(src, input?, output?, dst)`; `None` stands for the empty word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transition {
    pub src: StateId,
    pub input: Option<Symbol>,
    pub output: Option<Symbol>,
    pub dst: StateId,
}

impl Transition {
    pub fn new(src: StateId, input: Option<Symbol>, output: Option<Symbol>, dst: StateId) -> Self {
        Transition { src, input, output, dst }
    }
}

/// A nondeterministic finite-state transducer with ε-moves on either tape.
///
/// Transitions are kept sorted by `(src, input, output, dst)` and deduplicated,
/// so two transducers built from the same edge set compare equal, and the
/// edges leaving a state on a given input form one contiguous slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transducer {
    input: SymbolTable,
    output: SymbolTable,
    num_states: usize,
    initial: Vec<StateId>,
    accepting: Vec<bool>,
    transitions: Vec<Transition>,
    offsets: Vec<usize>,
}

impl Transducer {
    /// Builds and validates a transducer. Initial states and transitions may be
    /// given in any order and with duplicates.
    pub fn new(
        input: SymbolTable,
        output: SymbolTable,
        num_states: usize,
        initial: impl IntoIterator<Item = StateId>,
        finals: impl IntoIterator<Item = StateId>,
        transitions: impl IntoIterator<Item = Transition>,
    ) -> Result<Self, FstError> {
        let check_state = |q: StateId| {
            if (q as usize) < num_states {
                Ok(q)
            } else {
                Err(FstError::InvalidAutomaton(format!("state {q} out of range (num_states = {num_states})")))
            }
        };
        let mut init = initial.into_iter().map(check_state).collect::<Result<Vec<_>, _>>()?;
        init.sort_unstable();
        init.dedup();
        let mut accepting = vec![false; num_states];
        for q in finals {
            accepting[check_state(q)? as usize] = true;
        }
        let mut edges = Vec::new();
        for t in transitions {
            check_state(t.src)?;
            check_state(t.dst)?;
            if let Some(a) = t.input {
                if !input.contains(a) {
                    return Err(FstError::InvalidAutomaton(format!("input symbol {a} out of range")));
                }
            }
            if let Some(b) = t.output {
                if !output.contains(b) {
                    return Err(FstError::InvalidAutomaton(format!("output symbol {b} out of range")));
                }
            }
            edges.push(t);
        }
        Ok(Self::from_parts(input, output, num_states, init, accepting, edges))
    }

    /// Trusted constructor for internal algorithms whose output is valid by construction.
    pub(crate) fn from_parts(
        input: SymbolTable,
        output: SymbolTable,
        num_states: usize,
        mut initial: Vec<StateId>,
        accepting: Vec<bool>,
        mut transitions: Vec<Transition>,
    ) -> Self {
        debug_assert_eq!(accepting.len(), num_states);
        initial.sort_unstable();
        initial.dedup();
        transitions.sort_unstable();
        transitions.dedup();
        let mut offsets = vec![0usize; num_states + 1];
        for t in &transitions {
            offsets[t.src as usize + 1] += 1;
        }
        for i in 0..num_states {
            offsets[i + 1] += offsets[i];
        }
        Transducer { input, output, num_states, initial, accepting, transitions, offsets }
    }

    pub fn input_table(&self) -> &SymbolTable {
        &self.input
    }

    pub fn output_table(&self) -> &SymbolTable {
        &self.output
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn initial(&self) -> &[StateId] {
        &self.initial
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.accepting[q as usize]
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        self.accepting.iter().enumerate().filter(|(_, &f)| f).map(|(q, _)| q as StateId)
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn num_transitions(&self) -> usize {
        self.transitions.len()
    }

    /// Edges leaving `q`.
    pub fn transitions_from(&self, q: StateId) -> &[Transition] {
        &self.transitions[self.offsets[q as usize]..self.offsets[q as usize + 1]]
    }

    /// Edges leaving `q` that read `input` (`None` for ε-input edges).
    pub fn transitions_on(&self, q: StateId, input: Option<Symbol>) -> &[Transition] {
        let out = self.transitions_from(q);
        let lo = out.partition_point(|t| t.input < input);
        let hi = out.partition_point(|t| t.input <= input);
        &out[lo..hi]
    }

    /// Empty output alphabet.
    pub fn is_recognizer(&self) -> bool {
        self.output.is_empty()
    }

    /// Empty input alphabet.
    pub fn is_generator(&self) -> bool {
        self.input.is_empty()
    }

    /// Same alphabet on both tapes and every edge copies its input.
    pub fn is_filter(&self) -> bool {
        self.input == self.output && self.transitions.iter().all(|t| t.input == t.output)
    }

    /// Swaps the two tapes, inverting the relation.
    pub fn transpose(&self) -> Transducer {
        let transitions = self
            .transitions
            .iter()
            .map(|t| Transition::new(t.src, t.output, t.input, t.dst))
            .collect();
        Transducer::from_parts(
            self.output.clone(),
            self.input.clone(),
            self.num_states,
            self.initial.clone(),
            self.accepting.clone(),
            transitions,
        )
    }

    /// Reverses every edge and swaps initial and final states; both tapes are mirrored.
    pub fn reverse(&self) -> Transducer {
        let initial = self.finals().collect();
        let mut accepting = vec![false; self.num_states];
        for &q in &self.initial {
            accepting[q as usize] = true;
        }
        let transitions = self
            .transitions
            .iter()
            .map(|t| Transition::new(t.dst, t.input, t.output, t.src))
            .collect();
        Transducer::from_parts(
            self.input.clone(),
            self.output.clone(),
            self.num_states,
            initial,
            accepting,
            transitions,
        )
    }

    /// Turns the input side into a filter: each edge `(q, a, _, q')` becomes
    /// `(q, a, a, q')`. Output labels, if any, are discarded.
    pub fn to_filter(&self) -> Transducer {
        let transitions = self
            .transitions
            .iter()
            .map(|t| Transition::new(t.src, t.input, t.input, t.dst))
            .collect();
        Transducer::from_parts(
            self.input.clone(),
            self.input.clone(),
            self.num_states,
            self.initial.clone(),
            self.accepting.clone(),
            transitions,
        )
    }

    /// Drops the output tape, keeping the input language.
    pub fn input_projection(&self) -> Transducer {
        let transitions = self
            .transitions
            .iter()
            .map(|t| Transition::new(t.src, t.input, None, t.dst))
            .collect();
        Transducer::from_parts(
            self.input.clone(),
            SymbolTable::empty(),
            self.num_states,
            self.initial.clone(),
            self.accepting.clone(),
            transitions,
        )
    }

    /// Keeps only states that are both reachable from an initial state and
    /// co-reachable to a final state. Surviving states keep their relative order.
    pub fn trim(&self) -> Transducer {
        let n = self.num_states;
        let mut forward = vec![false; n];
        let mut stack: Vec<StateId> = self.initial.clone();
        for &q in &stack {
            forward[q as usize] = true;
        }
        while let Some(q) = stack.pop() {
            for t in self.transitions_from(q) {
                if !forward[t.dst as usize] {
                    forward[t.dst as usize] = true;
                    stack.push(t.dst);
                }
            }
        }
        let mut preds: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for t in &self.transitions {
            preds[t.dst as usize].push(t.src);
        }
        let mut backward = vec![false; n];
        stack = self.finals().collect();
        for &q in &stack {
            backward[q as usize] = true;
        }
        while let Some(q) = stack.pop() {
            for &p in &preds[q as usize] {
                if !backward[p as usize] {
                    backward[p as usize] = true;
                    stack.push(p);
                }
            }
        }
        let mut remap = vec![StateId::MAX; n];
        let mut kept = 0usize;
        for q in 0..n {
            if forward[q] && backward[q] {
                remap[q] = kept as StateId;
                kept += 1;
            }
        }
        let initial = self
            .initial
            .iter()
            .filter(|&&q| remap[q as usize] != StateId::MAX)
            .map(|&q| remap[q as usize])
            .collect();
        let mut accepting = vec![false; kept];
        for q in self.finals() {
            if remap[q as usize] != StateId::MAX {
                accepting[remap[q as usize] as usize] = true;
            }
        }
        let transitions = self
            .transitions
            .iter()
            .filter(|t| remap[t.src as usize] != StateId::MAX && remap[t.dst as usize] != StateId::MAX)
            .map(|t| Transition::new(remap[t.src as usize], t.input, t.output, remap[t.dst as usize]))
            .collect();
        Transducer::from_parts(self.input.clone(), self.output.clone(), kept, initial, accepting, transitions)
    }

    /// States reachable from `from` through ε-input edges (including `from` itself).
    pub(crate) fn input_epsilon_closure(&self, from: &mut Vec<StateId>, seen: &mut HashSet<StateId>) {
        let mut i = 0;
        while i < from.len() {
            let q = from[i];
            for t in self.transitions_on(q, None) {
                if seen.insert(t.dst) {
                    from.push(t.dst);
                }
            }
            i += 1;
        }
    }

    /// Membership of `word` in the input language.
    pub fn accepts(&self, word: &Word) -> bool {
        let mut seen: HashSet<StateId> = self.initial.iter().copied().collect();
        let mut current: Vec<StateId> = self.initial.clone();
        self.input_epsilon_closure(&mut current, &mut seen);
        for &a in word.iter() {
            if !self.input.contains(a) {
                return false;
            }
            seen.clear();
            let mut next = Vec::new();
            for &q in &current {
                for t in self.transitions_on(q, Some(a)) {
                    if seen.insert(t.dst) {
                        next.push(t.dst);
                    }
                }
            }
            self.input_epsilon_closure(&mut next, &mut seen);
            if next.is_empty() {
                return false;
            }
            current = next;
        }
        current.iter().any(|&q| self.is_final(q))
    }
}
