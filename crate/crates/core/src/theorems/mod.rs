//! The two proof pipelines.
//!
//! [`prove_splitting`] iterates `Sink∘Audio+^n` to its fixed point, which is the
//! splitting recognizer. From it come the atom recognizer and the atomic factor
//! transducer, and [`prove_cosmological`] iterates `AtomicF∘Audio^n∘Src` to its
//! own fixed point and lists the 94 elements.

mod cosmology;
mod splitting;
mod tables;

use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::chemistry::{ChemistryError, SplitTest};
use crate::fst::{equivalent, Dfa, FstError, Transducer, Word};
use crate::machines::{alphabet_b, MARK};

pub use cosmology::{audit_audio_src, build_atomicf, prove_cosmological, verify_periodic_table, CosmologyReport, TableVerdict};
pub use splitting::{build_atom_recognizer, prove_splitting, SplittingReport};
pub use tables::{reference_atom, reference_splitting};

/// Minimized state counts of `Sink∘Audio+^n` for `n = 1..=9`; constant from there on.
pub const SPLITTING_SIZES: [usize; 9] = [13, 25, 37, 40, 37, 29, 28, 27, 21];
pub const SPLITTING_FIXED_POINT: usize = 9;
pub const SPLITTING_STATES: usize = 21;
pub const ATOM_STATES: usize = 26;
/// Minimized state counts of `AtomicF∘Audio^n∘Src` for `n = 1..=25`.
pub const COSMOLOGY_SIZES: [usize; 25] = [
    43, 138, 266, 409, 534, 592, 570, 513, 430, 361, 320, 310, 308, 278, 248, 255, 258, 266, 277, 273, 267, 258,
    251, 243, 243,
];
pub const COSMOLOGY_FIXED_POINT: usize = 24;
pub const ELEMENT_COUNT: usize = 94;
/// A splitting at eight derivations that fails at the ninth.
pub const OPTIMALITY_WITNESS: &str = "3*133";

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TheoremError {
    #[error(transparent)]
    Fst(#[from] FstError),
    #[error(transparent)]
    Chemistry(#[from] ChemistryError),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("resource limit: {states} states exceeds {limit}")]
    ResourceLimit { states: usize, limit: usize },
}

/// Pushes `stages[n] = step(stages[n-1])` until `stages` covers `1..=max_n` and
/// one step past the first `n` with `stages[n] ≡ stages[n+1]`. Returns that `n`.
/// Once reached, the fixed point must persist.
fn iterate_to_fixed_point(
    stages: &mut Vec<Dfa>,
    max_n: usize,
    mut step: impl FnMut(&Dfa) -> Result<Dfa, TheoremError>,
) -> Result<Option<usize>, TheoremError> {
    let mut fixed = None;
    let mut n = 0;
    while n < max_n || fixed.is_some_and(|f| n < f + 2) {
        let next = step(&stages[n])?;
        let same = equivalent(&stages[n].to_transducer(), &next.to_transducer())?;
        match fixed {
            None if same => fixed = Some(n),
            Some(f) if !same => {
                return Err(TheoremError::InvariantViolation(format!(
                    "fixed point at n={f} is lost at n={}",
                    n + 1
                )))
            }
            _ => {}
        }
        stages.push(next);
        n += 1;
    }
    Ok(fixed)
}

/// The minimized splitting recognizer over `B`.
pub fn splitting_recognizer() -> &'static Dfa {
    static CELL: OnceLock<Dfa> = OnceLock::new();
    CELL.get_or_init(|| {
        let report = prove_splitting(SPLITTING_FIXED_POINT + 1).expect("splitting pipeline");
        report.splitting_recognizer().expect("splitting fixed point").clone()
    })
}

/// The minimized atom recognizer over `A`.
pub fn atom_recognizer() -> &'static Dfa {
    static CELL: OnceLock<Dfa> = OnceLock::new();
    CELL.get_or_init(|| build_atom_recognizer(splitting_recognizer()).expect("atom pipeline"))
}

/// The reduced atomic factor transducer over `A`.
pub fn atomicf_transducer() -> Transducer {
    static CELL: OnceLock<Transducer> = OnceLock::new();
    CELL.get_or_init(|| build_atomicf(splitting_recognizer(), atom_recognizer()).expect("atomicf pipeline"))
        .clone()
}

/// Splitting and atom queries answered by the two recognizers.
#[derive(Clone, Copy, Debug)]
pub struct Recognizers {
    pub splitting: &'static Dfa,
    pub atom: &'static Dfa,
}

impl Recognizers {
    pub fn get() -> Self {
        Recognizers { splitting: splitting_recognizer(), atom: atom_recognizer() }
    }
}

impl SplitTest for Recognizers {
    fn splits(&self, left: &Word, right: &Word) -> bool {
        let marked: Word = left.iter().copied().chain([MARK]).chain(right.iter().copied()).collect();
        self.splitting.accepts(&marked)
    }

    fn is_atom(&self, w: &Word) -> bool {
        self.atom.accepts(w)
    }
}

/// One named pass/fail check of a proof report.
#[derive(Clone, Debug, Serialize)]
pub struct Gate {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn gate(name: &str, passed: bool, detail: String) -> Gate {
    Gate { name: name.to_string(), passed, detail }
}

/// Gates of the splitting proof: the size row, the fixed point, the
/// optimality witness, and both recognizers against the reference tables.
pub fn splitting_gates(report: &SplittingReport) -> Vec<Gate> {
    let mut gates = Vec::new();
    let head: Vec<usize> = report.sizes.iter().take(9).copied().collect();
    gates.push(gate("sizes n=1..9", head == SPLITTING_SIZES, format!("{head:?}")));
    let tenth = report.sizes.get(9).copied();
    gates.push(gate("size n=10", tenth == Some(SPLITTING_STATES), format!("{tenth:?}")));
    gates.push(gate(
        "fixed point",
        report.fixed_point_n == Some(SPLITTING_FIXED_POINT),
        format!("{:?}", report.fixed_point_n),
    ));
    let witness = alphabet_b().parse(OPTIMALITY_WITNESS).expect("witness parses");
    let (at8, at9) = match (report.stage(8), report.stage(9)) {
        (Some(a), Some(b)) => (a.accepts(&witness), b.accepts(&witness)),
        _ => (false, true),
    };
    gates.push(gate("witness 3*133", at8 && !at9, format!("accepted at 8: {at8}, at 9: {at9}")));
    match report.splitting_recognizer() {
        Some(s) => {
            gates.push(gate(
                "splitting table",
                s.num_states() == SPLITTING_STATES && s.isomorphic(&reference_splitting()),
                format!("{} states", s.num_states()),
            ));
            match build_atom_recognizer(s) {
                Ok(atom) => gates.push(gate(
                    "atom table",
                    atom.num_states() == ATOM_STATES && atom.isomorphic(&reference_atom()),
                    format!("{} states", atom.num_states()),
                )),
                Err(e) => gates.push(gate("atom table", false, e.to_string())),
            }
        }
        None => gates.push(gate("splitting table", false, "no fixed point".into())),
    }
    gates
}

/// Gates of the cosmological proof: the hard size points, the fixed point,
/// and the element set against the periodic table.
pub fn cosmology_gates(report: &CosmologyReport, verdict: &TableVerdict) -> Vec<Gate> {
    let mut gates = Vec::new();
    let size = |n: usize| report.sizes.get(n - 1).copied();
    for n in [1, 6, 24, 25] {
        let want = COSMOLOGY_SIZES[n - 1];
        gates.push(gate(&format!("size n={n}"), size(n) == Some(want), format!("{:?} (want {want})", size(n))));
    }
    let series: Vec<usize> = report.sizes.iter().take(25).copied().collect();
    gates.push(gate("sizes n=1..25", series == COSMOLOGY_SIZES, format!("{series:?}")));
    let max = series.iter().copied().max();
    gates.push(gate("maximum at n=6", max == size(6), format!("max {max:?}")));
    gates.push(gate(
        "fixed point",
        report.fixed_point_n == Some(COSMOLOGY_FIXED_POINT),
        format!("{:?}", report.fixed_point_n),
    ));
    gates.push(gate(
        "element count",
        report.elements.len() == ELEMENT_COUNT,
        format!("{}", report.elements.len()),
    ));
    gates.push(gate(
        "periodic table",
        verdict.passed(),
        format!(
            "{} missing, {} extra, {} decay mismatches, {} unclosed",
            verdict.missing.len(),
            verdict.extra.len(),
            verdict.decay_mismatches.len(),
            verdict.not_closed.len()
        ),
    ));
    gates
}

#[derive(Serialize)]
struct Report<T> {
    #[serde(flatten)]
    body: T,
    verdict: Verdict,
}

#[derive(Serialize)]
struct Verdict {
    passed: bool,
    gates: Vec<Gate>,
}

/// `{sizes, fixed_point_n, verdict}`.
pub fn splitting_report_json(report: &SplittingReport, gates: &[Gate]) -> String {
    let body = splitting::SplittingJson { sizes: &report.sizes, fixed_point_n: report.fixed_point_n };
    render(body, gates)
}

/// `{sizes, fixed_point_n, elements, named, verdict}`.
pub fn cosmology_report_json(report: &CosmologyReport, gates: &[Gate]) -> String {
    render(report.json(), gates)
}

fn render<T: Serialize>(body: T, gates: &[Gate]) -> String {
    let verdict = Verdict { passed: gates.iter().all(|g| g.passed), gates: gates.to_vec() };
    let mut s = serde_json::to_string_pretty(&Report { body, verdict }).expect("report serializes");
    s.push('\n');
    s
}
