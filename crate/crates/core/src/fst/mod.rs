//! Generic nondeterministic finite-state transducers over dense symbol tables.
//!
//! Recognizers (empty output table), generators (empty input table) and
//! filters (identity edges) are all [`Transducer`] values. Language-level
//! operations (determinization, minimization, complement, equivalence) act on
//! the input side and return a canonical partial [`Dfa`].

mod compose;
mod dfa;
mod enumerate;
pub mod io;
mod reduce;
mod symbol;
mod transducer;

use thiserror::Error;

pub use compose::{compose, power};
pub use dfa::{complement, determinize, equivalent, minimize, minimize_dfa, Dfa};
pub use enumerate::{enumerate_dfa, enumerate_language, transduce};
pub use reduce::reduce_transducer;
pub use symbol::{sort_shortlex, Symbol, SymbolTable, Word, MARK_ASCII, MARK_LABEL};
pub use transducer::{StateId, Transducer, Transition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FstError {
    #[error("alphabet mismatch: {left:?} vs {right:?}")]
    AlphabetMismatch { left: Vec<String>, right: Vec<String> },
    #[error("power requires n >= 1")]
    ZeroPower,
    #[error("invalid symbol table: {0}")]
    InvalidSymbolTable(String),
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("word contains symbols outside the input alphabet")]
    InvalidWord,
    #[error("infinite language")]
    InfiniteLanguage,
    #[error("unbounded transduction: infinitely many outputs")]
    UnboundedTransduction,
    #[error("limit exceeded: more than {limit} words")]
    LimitExceeded { limit: usize },
    #[error("expected a recognizer or a generator")]
    NotAnAutomaton,
    #[error("malformed JSON: {0}")]
    Json(String),
}

/// Minimal DFA of the output language of a generator (or of any transducer),
/// by transposing, minimizing, and keeping the result as a recognizer.
pub fn minimize_generator(t: &Transducer) -> Dfa {
    minimize(&t.transpose())
}

/// Turns a DFA of a language back into a generator of that language.
pub fn dfa_to_generator(d: &Dfa) -> Transducer {
    d.to_transducer().transpose()
}
