use std::cmp::Ordering;
use std::fmt;

use super::FstError;

/// Index of a symbol inside a [`SymbolTable`].
pub type Symbol = u32;

/// Printable label of the mark symbol.
pub const MARK_LABEL: &str = "◊";
/// ASCII spelling of the mark symbol, used on the command line and in JSON.
pub const MARK_ASCII: &str = "*";

/// Bijection between dense symbol indices `0..n` and printable labels.
///
/// The empty word is never a symbol, so it has no index here; transitions use
/// `None` for it instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SymbolTable {
    labels: Vec<String>,
}

impl SymbolTable {
    pub fn new<I, S>(labels: I) -> Result<Self, FstError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(FstError::InvalidSymbolTable("empty label".into()));
            }
            if labels[..i].contains(label) {
                return Err(FstError::InvalidSymbolTable(format!("duplicate label {label:?}")));
            }
        }
        let has_mark = labels.iter().any(|l| l == MARK_LABEL);
        let has_ascii = labels.iter().any(|l| l == MARK_ASCII);
        if has_mark && has_ascii {
            return Err(FstError::InvalidSymbolTable(format!(
                "{MARK_LABEL:?} and {MARK_ASCII:?} cannot both be labels"
            )));
        }
        Ok(SymbolTable { labels })
    }

    /// The table with no symbols: input side of a generator, output side of a recognizer.
    pub fn empty() -> Self {
        SymbolTable { labels: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, symbol: Symbol) -> &str {
        &self.labels[symbol as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> {
        0..self.labels.len() as Symbol
    }

    /// Looks a label up, accepting `*` for `◊`.
    pub fn index_of(&self, label: &str) -> Option<Symbol> {
        let label = if label == MARK_ASCII && !self.labels.iter().any(|l| l == MARK_ASCII) {
            MARK_LABEL
        } else {
            label
        };
        self.labels.iter().position(|l| l == label).map(|i| i as Symbol)
    }

    pub fn contains(&self, symbol: Symbol) -> bool {
        (symbol as usize) < self.labels.len()
    }

    /// Parses a word written with one character per symbol (all labels must be
    /// single characters for this to be unambiguous). `*` stands for `◊`.
    pub fn parse(&self, text: &str) -> Result<Word, FstError> {
        text.chars()
            .map(|c| {
                let mut buf = [0u8; 4];
                self.index_of(c.encode_utf8(&mut buf))
                    .ok_or_else(|| FstError::UnknownSymbol(c.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word::from)
    }

    pub fn format(&self, word: &Word) -> String {
        word.iter().map(|&s| self.label(s)).collect()
    }
}

/// A finite sequence of symbol indices, relative to some [`SymbolTable`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Symbol> {
        self.0.iter()
    }

    pub fn push(&mut self, symbol: Symbol) {
        self.0.push(symbol);
    }

    pub fn into_inner(self) -> Vec<Symbol> {
        self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Shortlex order: shorter words first, then lexicographic by symbol index.
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }

    /// Checks that every symbol is valid for `table`.
    pub fn is_over(&self, table: &SymbolTable) -> bool {
        self.0.iter().all(|&s| table.contains(s))
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl From<&[Symbol]> for Word {
    fn from(v: &[Symbol]) -> Self {
        Word(v.to_vec())
    }
}

impl std::ops::Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

/// Sorts words in shortlex order and removes duplicates.
pub fn sort_shortlex(words: &mut Vec<Word>) {
    words.sort_by(|a, b| a.shortlex_cmp(b));
    words.dedup();
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicate_and_empty_labels() {
        assert!(SymbolTable::new(["1", "1"]).is_err());
        assert!(SymbolTable::new(["1", ""]).is_err());
        assert!(SymbolTable::new(["◊", "*"]).is_err());
        assert!(SymbolTable::new(["1", "2", "◊"]).is_ok());
    }

    #[test]
    fn ascii_mark_parses_as_mark() {
        let t = SymbolTable::new(["1", "2", "3", "d", "◊"]).unwrap();
        let w = t.parse("3*2212").unwrap();
        assert_eq!(w.symbols(), &[2, 4, 1, 1, 0, 1]);
        assert_eq!(t.format(&w), "3◊2212");
        assert!(t.parse("35").is_err());
    }

    #[test]
    fn shortlex() {
        let mut v: Vec<Word> = vec![vec![1, 0].into(), vec![2].into(), vec![0, 0].into(), vec![2].into()];
        sort_shortlex(&mut v);
        let got: Vec<Vec<u32>> = v.into_iter().map(Word::into_inner).collect();
        assert_eq!(got, vec![vec![2], vec![0, 0], vec![1, 0]]);
    }
}
