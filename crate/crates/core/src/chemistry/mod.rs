//! Automaton-free ground truth for audioactive decay.
//!
//! Everything here works directly on integer sequences: run-length derivation,
//! bounded brute-force splitting and atom tests, atomic factorization, the
//! embedded periodic table of the 94 elements, and the growth rate of the
//! decay system. The automaton pipelines in [`crate::theorems`] are checked
//! against these functions, so nothing in this module depends on them.

mod growth;
mod oracle;
mod table;

use std::fmt;

use thiserror::Error;

use crate::fst::Word;
use crate::machines::{D, DIGITS};

pub use growth::{characteristic_root, decay_matrix, dominant_eigenvalue, growth_rate, GrowthReport};
pub use oracle::{
    atom_oracle, atomic_factorization, atomic_factorization_with, split_oracle, Oracle, SplitTest,
    DEFAULT_ORACLE_DEPTH,
};
pub use table::{Element, PeriodicTable};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ChemistryError {
    #[error("word {0:?} is not a day-one word (contains four equal consecutive symbols)")]
    NotDayOne(String),
    #[error("{0}")]
    Domain(String),
    #[error("no element with word {0:?}")]
    UnknownElement(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
}

/// A finite sequence of positive integers, not bounded by 9.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntWord(Vec<u32>);

impl IntWord {
    pub fn new(values: Vec<u32>) -> Result<Self, ChemistryError> {
        if values.contains(&0) {
            return Err(ChemistryError::Domain("entries must be positive".into()));
        }
        Ok(IntWord(values))
    }

    /// Parses a string of decimal digits 1-9, one entry per digit.
    pub fn from_digits(s: &str) -> Result<Self, ChemistryError> {
        let values = s
            .chars()
            .map(|c| match c.to_digit(10) {
                Some(v) if v > 0 => Ok(v),
                _ => Err(ChemistryError::Domain(format!("invalid digit {c:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntWord(values))
    }

    /// Reads a word over `{1,2,3,d}` with `d` taken as 4.
    pub fn from_word(w: &Word) -> Self {
        IntWord(w.iter().map(|&s| s + 1).collect())
    }

    /// Maps back to `{1,2,3,d}`; every value of 4 or more becomes `d`.
    pub fn to_word(&self) -> Word {
        self.0.iter().map(|&v| if v >= 4 { D } else { v - 1 }).collect()
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Entries above 9 are written in brackets, e.g. `[10]2`.
impl fmt::Display for IntWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.0 {
            if v > 9 {
                write!(f, "[{v}]")?;
            } else {
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// One look-and-say step: each maximal run of `k` copies of `v` becomes `k, v`.
pub fn derive(u: &IntWord) -> IntWord {
    IntWord(derive_slice(&u.0))
}

pub(crate) fn derive_slice(u: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(u.len() * 2);
    let mut i = 0;
    while i < u.len() {
        let v = u[i];
        let mut j = i + 1;
        while j < u.len() && u[j] == v {
            j += 1;
        }
        out.push((j - i) as u32);
        out.push(v);
        i = j;
    }
    out
}

pub fn derive_n(u: &IntWord, n: usize) -> IntWord {
    let mut cur = u.clone();
    for _ in 0..n {
        cur = derive(&cur);
    }
    cur
}

/// Derivation of a word over `{1,2,3,d}`, with `d` read as 4.
pub fn derive_word(w: &Word) -> Word {
    derive(&IntWord::from_word(w)).to_word()
}

/// No symbol repeated four times in a row.
pub fn is_day_one(w: &[u32]) -> bool {
    w.windows(4).all(|x| !(x[0] == x[1] && x[1] == x[2] && x[2] == x[3]))
}

/// All words over `{1,2,3,d}` (or a prefix of it) of exactly `len` symbols, in lexicographic order.
pub fn all_words(symbols: &[u32], len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| symbols.iter().map(move |&s| {
                let mut w = w.clone();
                w.push(s);
                w
            }))
            .collect();
    }
    out
}

/// Symbols of `A` other than `d`.
pub const PLAIN_DIGITS: [u32; 3] = [DIGITS[0], DIGITS[1], DIGITS[2]];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machines::alphabet_a;

    fn iw(s: &str) -> IntWord {
        IntWord::from_digits(s).unwrap()
    }

    #[test]
    fn derivation_chain() {
        assert_eq!(derive(&iw("55555")), iw("55"));
        assert_eq!(derive(&iw("55")), iw("25"));
        assert_eq!(derive(&iw("25")), iw("1215"));
        assert_eq!(derive_n(&iw("1215"), 1), iw("11121115"));
        assert_eq!(derive_n(&iw("55555"), 5), iw("31123115"));
    }

    #[test]
    fn counts_above_nine_stay_single_entries() {
        let d = derive(&iw("2222222222"));
        assert_eq!(d.values(), &[10, 2]);
        assert_eq!(d.to_string(), "[10]2");
    }

    #[test]
    fn empty_and_fixed_point() {
        assert_eq!(derive(&IntWord::default()), IntWord::default());
        assert_eq!(derive_n(&iw("22"), 100), iw("22"));
        assert_eq!(derive_n(&iw("123"), 0), iw("123"));
        assert!(IntWord::new(vec![1, 0]).is_err());
    }

    #[test]
    fn day_one_scan() {
        let a = alphabet_a();
        assert!(is_day_one(&a.parse("31123115".replace('5', "d").as_str()).unwrap()));
        assert!(!is_day_one(&a.parse("1111").unwrap()));
        assert!(is_day_one(&a.parse("333d").unwrap()));
        assert!(!is_day_one(&a.parse("2dddd").unwrap()));
    }

    #[test]
    fn d_is_carried_as_four() {
        let a = alphabet_a();
        assert_eq!(derive_word(&a.parse("d").unwrap()), a.parse("1d").unwrap());
        assert_eq!(derive_word(&a.parse("1113").unwrap()), a.parse("3113").unwrap());
    }

    #[test]
    fn word_enumeration() {
        assert_eq!(all_words(&PLAIN_DIGITS, 3).len(), 27);
        assert_eq!(all_words(&PLAIN_DIGITS, 0), vec![Word::empty()]);
    }
}
