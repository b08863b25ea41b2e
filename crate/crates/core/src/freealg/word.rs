use std::cmp::Ordering;
use std::fmt;

/// A monomial of the free associative algebra: a finite sequence of
/// generator indices, each in `1..=n`. The empty word is the unit.
///
/// Words order by degree first, then lexicographically on letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(index: u8) -> Self {
        Word(vec![index])
    }

    pub fn from_letters(letters: impl Into<Vec<u8>>) -> Self {
        Word(letters.into())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Largest letter, or 0 for the empty word.
    pub fn max_letter(&self) -> u8 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (pos, letter) in self.0.iter().enumerate() {
            if pos > 0 {
                write!(f, " ")?;
            }
            write!(f, "X{letter}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_then_lex_order() {
        let mut words = [
            Word::from_letters([2, 1]),
            Word::letter(2),
            Word::empty(),
            Word::from_letters([1, 2]),
            Word::letter(1),
            Word::from_letters([1, 1, 1]),
        ];
        words.sort();
        let rendered: Vec<String> = words.iter().map(ToString::to_string).collect();
        assert_eq!(rendered, ["1", "X1", "X2", "X1 X2", "X2 X1", "X1 X1 X1"]);
    }

    #[test]
    fn concat_appends() {
        let w = Word::from_letters([1, 2]).concat(&Word::letter(3));
        assert_eq!(w.letters(), &[1, 2, 3]);
        assert_eq!(w.degree(), 3);
        assert_eq!(w.max_letter(), 3);
    }
}
