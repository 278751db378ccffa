//! The concrete machines: auxiliary mark/scissors/counter transducers and the
//! audioactive transducer, over `A = {1,2,3,d}` and `B = A ∪ {◊}`.
//!
//! In both tables the symbols `1, 2, 3, d` have indices `0..4`, so a word over
//! `A` is also a word over `B`; `◊` is index 4 in `B`.

use std::fmt;
use std::str::FromStr;

use crate::fst::{StateId, Symbol, SymbolTable, Transducer, Transition, MARK_LABEL};

pub const ONE: Symbol = 0;
pub const TWO: Symbol = 1;
pub const THREE: Symbol = 2;
/// Stands for any digit 4 or larger.
pub const D: Symbol = 3;
pub const MARK: Symbol = 4;

/// Digits of `A`, in index order.
pub const DIGITS: [Symbol; 4] = [ONE, TWO, THREE, D];

pub fn alphabet_a() -> SymbolTable {
    SymbolTable::new(["1", "2", "3", "d"]).expect("static table")
}

pub fn alphabet_b() -> SymbolTable {
    SymbolTable::new(["1", "2", "3", "d", MARK_LABEL]).expect("static table")
}

fn build(
    input: SymbolTable,
    output: SymbolTable,
    num_states: usize,
    initial: &[StateId],
    finals: &[StateId],
    transitions: Vec<Transition>,
) -> Transducer {
    Transducer::new(input, output, num_states, initial.iter().copied(), finals.iter().copied(), transitions)
        .expect("machine tables are well formed")
}

fn edge(src: StateId, input: Option<Symbol>, output: Option<Symbol>, dst: StateId) -> Transition {
    Transition::new(src, input, output, dst)
}

fn copy_loops(state: StateId) -> impl Iterator<Item = Transition> {
    DIGITS.into_iter().map(move |a| edge(state, Some(a), Some(a), state))
}

/// One state, initial and final; copies every digit and inserts `◊` anywhere.
pub fn build_multi() -> Transducer {
    let mut t: Vec<Transition> = copy_loops(0).collect();
    t.push(edge(0, None, Some(MARK), 0));
    build(alphabet_a(), alphabet_b(), 1, &[0], &[0], t)
}

/// Inserts exactly one `◊` strictly inside a nonempty word; also relates ε to ε.
/// States: first, left of `◊`, right of `◊`, last.
pub fn build_mark() -> Transducer {
    let (first, left, right, last) = (0, 1, 2, 3);
    let mut t = Vec::new();
    for a in DIGITS {
        t.push(edge(first, Some(a), Some(a), left));
        t.push(edge(right, Some(a), Some(a), last));
    }
    t.extend(copy_loops(left));
    t.extend(copy_loops(right));
    t.push(edge(left, None, Some(MARK), right));
    build(alphabet_a(), alphabet_b(), 4, &[first], &[first, last], t)
}

/// `u◊v◊w -> v` for `v` free of marks.
pub fn build_scissors() -> Transducer {
    let (before, copy, after) = (0, 1, 2);
    let mut t = Vec::new();
    for a in DIGITS.into_iter().chain([MARK]) {
        t.push(edge(before, Some(a), None, before));
        t.push(edge(after, Some(a), None, after));
    }
    for a in DIGITS {
        t.push(edge(copy, Some(a), Some(a), copy));
    }
    t.push(edge(before, Some(MARK), None, copy));
    t.push(edge(copy, Some(MARK), None, after));
    build(alphabet_b(), alphabet_a(), 3, &[before], &[after], t)
}

/// Counter edges for symbol `a`, with its six states starting at `base`:
/// entry, the three branches, and exit at `base + 5`.
fn counter_edges(a: Symbol, base: StateId) -> Vec<Transition> {
    let (entry, one, two, three, three_b, exit) = (base, base + 1, base + 2, base + 3, base + 4, base + 5);
    vec![
        edge(entry, Some(a), Some(ONE), one),
        edge(entry, Some(a), Some(TWO), two),
        edge(entry, Some(a), Some(THREE), three),
        edge(one, None, Some(a), exit),
        edge(two, Some(a), Some(a), exit),
        edge(three, Some(a), Some(a), three_b),
        edge(three_b, Some(a), None, exit),
    ]
}

/// Bounded `a`-counter: exactly `a -> 1a`, `aa -> 2a`, `aaa -> 3a`.
pub fn build_counter(a: Symbol) -> Transducer {
    assert!(DIGITS.contains(&a), "counter symbol must be a digit of A");
    build(alphabet_a(), alphabet_a(), 6, &[0], &[5], counter_edges(a, 0))
}

/// One-state recognizer of `table*`.
pub fn build_sink(table: SymbolTable) -> Transducer {
    let t = table.symbols().map(|a| edge(0, Some(a), None, 0)).collect();
    build(table, SymbolTable::empty(), 1, &[0], &[0], t)
}

/// One-state generator of `table*`.
pub fn build_src(table: SymbolTable) -> Transducer {
    let t = table.symbols().map(|a| edge(0, None, Some(a), 0)).collect();
    build(SymbolTable::empty(), table, 1, &[0], &[0], t)
}

/// Entry state of the counter block for digit `a` inside Audio.
pub fn audio_block_head(a: Symbol) -> StateId {
    6 * a
}

fn audio_over(table: SymbolTable, marks: bool) -> Transducer {
    let head = audio_block_head;
    let tail = |a: Symbol| 6 * a + 5;
    // Connectors: after a run of 1 or 2 / enter a 1-or-2 run / after 3 or d / enter 3-or-d.
    let (after12, enter12, after3d, enter3d) = (24, 25, 26, 27);

    let mut t = Vec::new();
    for a in DIGITS {
        t.extend(counter_edges(a, head(a)));
    }
    let eps = |s, d| edge(s, None, None, d);
    t.extend([
        eps(tail(ONE), head(TWO)),
        eps(tail(TWO), head(ONE)),
        eps(tail(THREE), head(D)),
        eps(tail(D), head(THREE)),
        eps(tail(ONE), after12),
        eps(tail(TWO), after12),
        eps(tail(THREE), after3d),
        eps(tail(D), after3d),
        eps(after12, enter3d),
        eps(after3d, enter12),
        eps(enter12, head(ONE)),
        eps(enter12, head(TWO)),
        eps(enter3d, head(THREE)),
        eps(enter3d, head(D)),
    ]);
    if marks {
        for a in DIGITS {
            t.push(edge(head(a), Some(MARK), Some(MARK), head(a)));
        }
    }
    let finals: Vec<StateId> = DIGITS.iter().map(|&a| head(a)).collect();
    build(table.clone(), table, 28, &[enter12, enter3d], &finals, t)
}

/// The 28-state audioactive transducer on `A`: four inlined counters, one per
/// digit, chained so that consecutive runs use different digits.
pub fn build_audio() -> Transducer {
    audio_over(alphabet_a(), false)
}

/// Audio over `B`, copying `◊` at the four block heads.
pub fn build_audio_plus() -> Transducer {
    audio_over(alphabet_b(), true)
}

/// Names of the machines the command line can export.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MachineId {
    Multi,
    Mark,
    Scissors,
    Counter(Symbol),
    Sink,
    Src,
    Audio,
    AudioPlus,
    Splitting,
    Atom,
    AtomicF,
}

impl MachineId {
    pub const ALL: [MachineId; 14] = [
        MachineId::Multi,
        MachineId::Mark,
        MachineId::Scissors,
        MachineId::Counter(ONE),
        MachineId::Counter(TWO),
        MachineId::Counter(THREE),
        MachineId::Counter(D),
        MachineId::Sink,
        MachineId::Src,
        MachineId::Audio,
        MachineId::AudioPlus,
        MachineId::Splitting,
        MachineId::Atom,
        MachineId::AtomicF,
    ];

    /// Builds the machine. The derived machines (splitting, atom, atomicf) run
    /// the corresponding construction pipelines.
    pub fn build(self) -> Transducer {
        match self {
            MachineId::Multi => build_multi(),
            MachineId::Mark => build_mark(),
            MachineId::Scissors => build_scissors(),
            MachineId::Counter(a) => build_counter(a),
            MachineId::Sink => build_sink(alphabet_a()),
            MachineId::Src => build_src(alphabet_a()),
            MachineId::Audio => build_audio(),
            MachineId::AudioPlus => build_audio_plus(),
            MachineId::Splitting => crate::theorems::splitting_recognizer().to_transducer(),
            MachineId::Atom => crate::theorems::atom_recognizer().to_transducer(),
            MachineId::AtomicF => crate::theorems::atomicf_transducer(),
        }
    }
}

impl fmt::Display for MachineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MachineId::Multi => f.write_str("multi"),
            MachineId::Mark => f.write_str("mark"),
            MachineId::Scissors => f.write_str("scissors"),
            MachineId::Counter(a) => write!(f, "counter{}", alphabet_a().label(*a)),
            MachineId::Sink => f.write_str("sink"),
            MachineId::Src => f.write_str("src"),
            MachineId::Audio => f.write_str("audio"),
            MachineId::AudioPlus => f.write_str("audio+"),
            MachineId::Splitting => f.write_str("splitting"),
            MachineId::Atom => f.write_str("atom"),
            MachineId::AtomicF => f.write_str("atomicf"),
        }
    }
}

impl FromStr for MachineId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        MachineId::ALL
            .into_iter()
            .find(|m| m.to_string() == s)
            .ok_or_else(|| format!("unknown machine {s:?}"))
    }
}
