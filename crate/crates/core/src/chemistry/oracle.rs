use super::{derive_slice, is_day_one, ChemistryError};
use crate::fst::Word;
use crate::machines::alphabet_a;

/// Oracle depth used when none is given. Nine derivations are known to be
/// enough, but the oracle is meant to be checked against that fact, not rely on it.
pub const DEFAULT_ORACLE_DEPTH: usize = 30;

fn as_ints(w: &[u32]) -> Vec<u32> {
    w.iter().map(|&s| s + 1).collect()
}

/// Bounded splitting test for `u·v` over `{1,2,3,d}` (`d` read as 4):
/// `uv` is a day-one word and `C^n(uv) = C^n(u) C^n(v)` for every `n <= depth`.
///
/// Derivation splits over `x·y` exactly when `x` or `y` is empty or the last
/// symbol of `x` differs from the first symbol of `y`. The last symbol of
/// `C^n(u)` is the last symbol of `u`, so only `v` is derived.
pub fn split_oracle(u: &Word, v: &Word, depth: usize) -> bool {
    let joined: Vec<u32> = u.iter().chain(v.iter()).copied().collect();
    if !is_day_one(&joined) {
        return false;
    }
    let Some(&last) = u.last() else { return true };
    let last = last + 1;
    let mut right = as_ints(v);
    for _ in 0..depth {
        match right.first() {
            None => return true,
            Some(&first) if first == last => return false,
            Some(_) => {}
        }
        right = derive_slice(&right);
    }
    true
}

/// A nonempty day-one word with no proper splitting point (bounded at `depth`).
pub fn atom_oracle(w: &Word, depth: usize) -> bool {
    if w.is_empty() || !is_day_one(w) {
        return false;
    }
    (1..w.len()).all(|i| !split_oracle(&Word::from(&w[..i]), &Word::from(&w[i..]), depth))
}

/// A decision procedure for splitting points and atoms, either the brute-force
/// [`Oracle`] or an automaton.
pub trait SplitTest {
    /// Whether `left·right` is a splitting of the day-one word `left right`.
    fn splits(&self, left: &Word, right: &Word) -> bool;
    fn is_atom(&self, w: &Word) -> bool;
}

/// The brute-force oracle at a fixed depth.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    pub depth: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { depth: DEFAULT_ORACLE_DEPTH }
    }
}

impl SplitTest for Oracle {
    fn splits(&self, left: &Word, right: &Word) -> bool {
        split_oracle(left, right, self.depth)
    }

    fn is_atom(&self, w: &Word) -> bool {
        atom_oracle(w, self.depth)
    }
}

/// Unique factorization into atoms, using the brute-force oracle.
pub fn atomic_factorization(w: &Word) -> Result<Vec<Word>, ChemistryError> {
    atomic_factorization_with(w, &Oracle::default())
}

/// Cuts `w` at every position where it splits, all at once, and checks that
/// every factor is an atom.
pub fn atomic_factorization_with(w: &Word, test: &impl SplitTest) -> Result<Vec<Word>, ChemistryError> {
    let a = alphabet_a();
    if w.is_empty() {
        return Err(ChemistryError::Domain("cannot factor the empty word".into()));
    }
    if !w.is_over(&a) {
        return Err(ChemistryError::Domain("word must be over {1,2,3,d}".into()));
    }
    if !is_day_one(w) {
        return Err(ChemistryError::NotDayOne(a.format(w)));
    }
    let mut factors = Vec::new();
    let mut start = 0;
    for i in 1..w.len() {
        if test.splits(&Word::from(&w[..i]), &Word::from(&w[i..])) {
            factors.push(Word::from(&w[start..i]));
            start = i;
        }
    }
    factors.push(Word::from(&w[start..]));
    if let Some(bad) = factors.iter().find(|f| !test.is_atom(f)) {
        return Err(ChemistryError::InvariantViolation(format!(
            "factor {} of {} is not an atom",
            a.format(bad),
            a.format(w)
        )));
    }
    Ok(factors)
}
