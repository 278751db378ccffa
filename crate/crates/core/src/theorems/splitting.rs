use serde::Serialize;

use super::TheoremError;
use crate::fst::{complement, compose, minimize, Dfa};
use crate::machines::{alphabet_a, alphabet_b, build_audio, build_audio_plus, build_mark, build_sink};

/// State counts of the minimized `Sink∘Audio+^n`, `n = 1..max_n`, and the
/// recognizer at the first fixed point.
#[derive(Clone, Debug)]
pub struct SplittingReport {
    pub sizes: Vec<usize>,
    /// Smallest `n` with `Sink∘Audio+^n ≡ Sink∘Audio+^(n+1)`, if within the bound.
    pub fixed_point_n: Option<usize>,
    /// `stages[n]` is the minimized `Sink∘Audio+^n`, starting at `n = 0`.
    pub stages: Vec<Dfa>,
}

impl SplittingReport {
    pub fn splitting_recognizer(&self) -> Option<&Dfa> {
        self.fixed_point_n.map(|n| &self.stages[n])
    }

    pub fn stage(&self, n: usize) -> Option<&Dfa> {
        self.stages.get(n)
    }
}

#[derive(Serialize)]
pub(crate) struct SplittingJson<'a> {
    pub sizes: &'a [usize],
    pub fixed_point_n: Option<usize>,
}

/// Iterates `R(n+1) = minimize(R(n) after Audio+)` from `R(0) = Sink` over `B`.
/// Runs to `max_n`, and at least one step past the first fixed point.
pub fn prove_splitting(max_n: usize) -> Result<SplittingReport, TheoremError> {
    if max_n < 2 {
        return Err(TheoremError::InvalidArgument("max_n must be at least 2".into()));
    }
    let audio_plus = build_audio_plus();
    let mut stages = vec![minimize(&build_sink(alphabet_b()))];
    let fixed_point_n = super::iterate_to_fixed_point(&mut stages, max_n, |prev| {
        Ok(minimize(&compose(&audio_plus, &prev.to_transducer())?))
    })?;
    let sizes = stages[1..].iter().map(Dfa::num_states).collect();
    Ok(SplittingReport { sizes, fixed_point_n, stages })
}

/// Recognizer of the atoms: `complement(Splitting after Mark)` restricted to
/// the input language of `Sink∘Audio`.
pub fn build_atom_recognizer(splitting: &Dfa) -> Result<Dfa, TheoremError> {
    let marked = compose(&build_mark(), &splitting.to_transducer())?;
    let not_split = complement(&marked).to_transducer();
    let day_one = minimize(&compose(&build_audio(), &build_sink(alphabet_a()))?).to_transducer();
    Ok(minimize(&compose(&day_one.to_filter(), &not_split)?))
}
