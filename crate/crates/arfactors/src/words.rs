//! Alphabets, letters and finite words.
//!
//! A [`Letter`] is an index into an ordered [`Alphabet`]; a word is a
//! `Vec<Letter>`. Keeping letters as indices makes the declared alphabet
//! order the natural `Ord`, which every set-returning operation uses for
//! deterministic output.

use crate::error::{Error, Result};
use std::fmt;

/// A symbol of some [`Alphabet`], stored as its index in the declared order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(pub u8);

/// A finite word: a sequence of letters over one alphabet.
pub type Word = Vec<Letter>;

/// An ordered set of distinct symbols.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Alphabet {
    chars: Vec<char>,
}

impl Alphabet {
    /// Builds an alphabet from distinct characters in the given order.
    pub fn new(chars: impl IntoIterator<Item = char>) -> Result<Self> {
        let chars: Vec<char> = chars.into_iter().collect();
        if chars.is_empty() {
            return Err(Error::InvalidDirective("empty alphabet".into()));
        }
        for (i, c) in chars.iter().enumerate() {
            if chars[..i].contains(c) {
                return Err(Error::InvalidDirective(format!("repeated letter '{c}'")));
            }
        }
        Ok(Alphabet { chars })
    }

    pub fn binary() -> Self {
        Alphabet { chars: vec!['a', 'b'] }
    }

    pub fn ternary() -> Self {
        Alphabet { chars: vec!['a', 'b', 'c'] }
    }

    pub fn quaternary() -> Self {
        Alphabet { chars: vec!['a', 'b', 'c', 'd'] }
    }

    /// Number of letters, `t` in the complexity formulas.
    pub fn size(&self) -> usize {
        self.chars.len()
    }

    /// All letters in declared order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.chars.len()).map(|i| Letter(i as u8))
    }

    pub fn letter_of(&self, c: char) -> Result<Letter> {
        self.chars
            .iter()
            .position(|&x| x == c)
            .map(|i| Letter(i as u8))
            .ok_or(Error::UnknownSymbol(c))
    }

    pub fn char_of(&self, l: Letter) -> char {
        self.chars[l.0 as usize]
    }

    /// Parses a string into a word; every character must be declared.
    pub fn word(&self, s: &str) -> Result<Word> {
        s.chars().map(|c| self.letter_of(c)).collect()
    }

    /// Renders a word back into a string.
    pub fn render(&self, w: &[Letter]) -> String {
        w.iter().map(|&l| self.char_of(l)).collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.chars {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Reversal of a word.
pub fn reversed(w: &[Letter]) -> Word {
    w.iter().rev().copied().collect()
}

pub fn is_palindrome(w: &[Letter]) -> bool {
    let n = w.len();
    (0..n / 2).all(|i| w[i] == w[n - 1 - i])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_roundtrip() {
        let ab = Alphabet::binary();
        let w = ab.word("abba").unwrap();
        assert_eq!(ab.render(&w), "abba");
        assert_eq!(ab.size(), 2);
        assert!(ab.word("abc").is_err());
    }

    #[test]
    fn rejects_duplicates() {
        assert!(Alphabet::new("aba".chars()).is_err());
    }

    #[test]
    fn declared_order_is_word_order() {
        let al = Alphabet::new("ba".chars()).unwrap();
        let b = al.word("b").unwrap();
        let a = al.word("a").unwrap();
        assert!(b < a, "declared order, not codepoint order");
    }

    #[test]
    fn palindrome_check() {
        let ab = Alphabet::binary();
        assert!(is_palindrome(&ab.word("abaaba").unwrap()));
        assert!(!is_palindrome(&ab.word("ab").unwrap()));
        assert!(is_palindrome(&[]));
    }
}
