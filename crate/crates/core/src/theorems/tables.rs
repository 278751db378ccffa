//! Reference tables of the splitting and atom recognizers, laid out with one
//! column per state and one row per input symbol. `.` is an empty cell,
//! `x` marks an initial or final state.

use crate::fst::{Dfa, StateId, SymbolTable};
use crate::machines::{alphabet_a, alphabet_b};

const SPLITTING_TABLE: &str = "
state    S a b c d e f g h i j k l m n o p q r s t
initial  x . . . . . . . . . . . . . . . . . . . .
final    x x x x x x x x x x x x x x . x . . x x .
1        a b c . a a a a a a a a a . . p q c b a .
2        d d d d e f . d d d d d d n o . f . e d .
3        g g g g g g g h i . g g g . . r i . . g .
d        j j j j j j j j j j k l . . . s l . k t l
*        S m m m o o o m m m l l l m . o . . m l .
";

const ATOM_TABLE: &str = "
state    S a b c d e f g h i j k l m n o p q r s t u v w x y
initial  x . . . . . . . . . . . . . . . . . . . . . . . . .
final    . x x x x x . . x . . . . . x x x x x . . . . x x x
1        a b c . e c . e e j k c . . a a . . . . . . . a e e
2        x d d d g f g h . l . . m h d d . . . . . . . d y h
3        w w w w i u . i i n . . . . o . . . . . . n . n i i
d        p p p p t v . t t s . . . . p p q r . t r . q p t t
";

fn parse(text: &str, alphabet: SymbolTable) -> Dfa {
    let rows: Vec<Vec<&str>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().collect())
        .collect();
    let names = &rows[0][1..];
    let index = |cell: &str| names.iter().position(|n| *n == cell).map(|i| i as StateId);
    let initial = rows[1][1..].iter().position(|c| *c == "x").expect("one initial state") as StateId;
    let accepting = rows[2][1..].iter().map(|c| *c == "x").collect();
    let mut table = vec![vec![None; alphabet.len()]; names.len()];
    for row in &rows[3..] {
        let a = alphabet.index_of(row[0]).expect("row label is a symbol") as usize;
        for (q, cell) in row[1..].iter().enumerate() {
            table[q][a] = index(cell);
        }
    }
    Dfa::from_table(alphabet, initial, accepting, &table).expect("reference table is well formed")
}

/// The 21-state splitting recognizer over `{1,2,3,d,◊}`.
pub fn reference_splitting() -> Dfa {
    parse(SPLITTING_TABLE, alphabet_b())
}

/// The 26-state atom recognizer over `{1,2,3,d}`.
pub fn reference_atom() -> Dfa {
    parse(ATOM_TABLE, alphabet_a())
}
