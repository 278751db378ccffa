use std::collections::BTreeMap;

use serde::Serialize;

use super::TheoremError;
use crate::chemistry::{atomic_factorization, derive_word, PeriodicTable};
use crate::fst::{
    compose, dfa_to_generator, enumerate_dfa, minimize_generator, reduce_transducer, Dfa, FstError,
    Transducer, Word,
};
use crate::machines::{alphabet_a, build_audio, build_multi, build_scissors, build_src};

/// `Atom_filter ∘ Scissors ∘ Splitting_filter ∘ Multi`, reduced: relates a word
/// over `A` to each of its atomic factors.
pub fn build_atomicf(splitting: &Dfa, atom: &Dfa) -> Result<Transducer, TheoremError> {
    let marked = compose(&build_multi(), &splitting.to_transducer().to_filter())?;
    let factors = compose(&marked, &build_scissors())?;
    let atoms = compose(&factors, &atom.to_transducer().to_filter())?;
    Ok(reduce_transducer(&atoms.trim()))
}

/// Maximum number of elements enumerated from the fixed-point language.
const ELEMENT_LIMIT: usize = 10_000;

/// State counts of the minimized `AtomicF∘Audio^n∘Src`, `n = 1..`, its first
/// fixed point, and the atoms it generates there.
#[derive(Clone, Debug)]
pub struct CosmologyReport {
    pub sizes: Vec<usize>,
    pub fixed_point_n: Option<usize>,
    /// Shortlex list of the atoms generated at the fixed point.
    pub elements: Vec<Word>,
    /// Element name of each enumerated word, when it is in the periodic table.
    pub named: Vec<(Word, Option<String>)>,
    /// `stages[n]` is the minimal recognizer of the output language at step `n`.
    pub stages: Vec<Dfa>,
}

#[derive(Serialize)]
pub(crate) struct CosmologyJson {
    pub sizes: Vec<usize>,
    pub fixed_point_n: Option<usize>,
    pub elements: Vec<String>,
    pub named: BTreeMap<String, Option<String>>,
}

impl CosmologyReport {
    pub(crate) fn json(&self) -> CosmologyJson {
        let a = alphabet_a();
        CosmologyJson {
            sizes: self.sizes.clone(),
            fixed_point_n: self.fixed_point_n,
            elements: self.elements.iter().map(|w| a.format(w)).collect(),
            named: self.named.iter().map(|(w, n)| (a.format(w), n.clone())).collect(),
        }
    }
}

/// Iterates `H(n) = AtomicF∘Audio∘H(n-1)` from `H(0) = AtomicF∘Src`, minimizing
/// each generator through its transpose, then enumerates the fixed-point language.
pub fn prove_cosmological(atomicf: &Transducer, max_n: usize) -> Result<CosmologyReport, TheoremError> {
    if max_n < 2 {
        return Err(TheoremError::InvalidArgument("max_n must be at least 2".into()));
    }
    let step = reduce_transducer(&compose(&build_audio(), atomicf)?);
    let mut stages = vec![minimize_generator(&compose(&build_src(alphabet_a()), atomicf)?)];
    let fixed_point_n = super::iterate_to_fixed_point(&mut stages, max_n, |prev| {
        Ok(minimize_generator(&compose(&dfa_to_generator(prev), &step)?))
    })?;
    let sizes = stages[1..].iter().map(Dfa::num_states).collect();
    let (elements, named) = match fixed_point_n {
        Some(n) => {
            let words = enumerate_dfa(&stages[n], ELEMENT_LIMIT).map_err(|e| match e {
                FstError::InfiniteLanguage => {
                    TheoremError::InvariantViolation("the fixed-point language is infinite".into())
                }
                other => other.into(),
            })?;
            let table = PeriodicTable::get();
            let named = words.iter().map(|w| (w.clone(), table.lookup(w).ok().map(|e| e.name.clone()))).collect();
            (words, named)
        }
        None => (Vec::new(), Vec::new()),
    };
    Ok(CosmologyReport { sizes, fixed_point_n, elements, named, stages })
}

/// Itemized comparison of an enumerated element set with the periodic table.
#[derive(Clone, Debug, Default, Serialize)]
pub struct TableVerdict {
    /// Table words that were not enumerated.
    pub missing: Vec<String>,
    /// Enumerated words that are not in the table.
    pub extra: Vec<String>,
    /// `(element, expected decay, factorization found)` for each disagreement.
    pub decay_mismatches: Vec<(String, Vec<String>, Vec<String>)>,
    /// Decay products that are not elements.
    pub not_closed: Vec<String>,
}

impl TableVerdict {
    pub fn passed(&self) -> bool {
        self.missing.is_empty()
            && self.extra.is_empty()
            && self.decay_mismatches.is_empty()
            && self.not_closed.is_empty()
    }
}

/// Checks the enumerated set against the table word for word, factors the
/// derivation of every element into atoms and compares with its decay row,
/// and checks that every decay product is an element.
pub fn verify_periodic_table(report: &CosmologyReport, table: &PeriodicTable) -> TableVerdict {
    let a = alphabet_a();
    let mut verdict = TableVerdict::default();
    for e in table.elements() {
        if !report.elements.contains(&e.word) {
            verdict.missing.push(e.word_text());
        }
    }
    for w in &report.elements {
        if table.lookup(w).is_err() {
            verdict.extra.push(a.format(w));
        }
    }
    for e in table.elements() {
        let found: Vec<String> = match atomic_factorization(&derive_word(&e.word)) {
            Ok(factors) => factors
                .iter()
                .map(|f| table.lookup(f).map(|x| x.name.clone()).unwrap_or_else(|_| a.format(f)))
                .collect(),
            Err(err) => vec![err.to_string()],
        };
        if found != e.decay {
            verdict.decay_mismatches.push((e.name.clone(), e.decay.clone(), found));
        }
        for p in &e.decay {
            if table.by_name(p).is_none() && !verdict.not_closed.contains(p) {
                verdict.not_closed.push(p.clone());
            }
        }
    }
    verdict
}

/// Minimal generator sizes of `Audio^n∘Src` for `n = 1..=n_max`, computed
/// iteratively. Aborts once a stage exceeds `limit_states`.
pub fn audit_audio_src(n_max: usize, limit_states: usize) -> Result<Vec<usize>, TheoremError> {
    if n_max == 0 {
        return Err(TheoremError::InvalidArgument("n must be at least 1".into()));
    }
    if n_max > 25 {
        return Err(TheoremError::InvalidArgument("n must be at most 25".into()));
    }
    let audio = build_audio();
    let mut current = build_src(alphabet_a());
    let mut sizes = Vec::with_capacity(n_max);
    for _ in 0..n_max {
        let dfa = minimize_generator(&compose(&current, &audio)?);
        if dfa.num_states() > limit_states {
            return Err(TheoremError::ResourceLimit { states: dfa.num_states(), limit: limit_states });
        }
        sizes.push(dfa.num_states());
        current = dfa_to_generator(&dfa);
    }
    Ok(sizes)
}
