//! A small braid-word language so braiding experiments are scriptable.
//!
//! Grammar (EBNF):
//!
//! ```text
//! word    := ws* (letter (ws+ letter)*)? ws*
//! letter  := "s" integer ("^-1")?
//! integer := [1-9][0-9]*
//! ```
//!
//! `s2^-1` is the inverse generator at site 2. Application order is left to
//! right: the leftmost letter acts first on the state (text order is time
//! order), so the corresponding matrix product is accumulated in reverse.
//!
//! Script files hold one word per line; `#` starts a comment.

mod parse;

pub use parse::{parse_braid_script, parse_braid_word, BraidParseError, ScriptError};

/// One braid generator occurrence: site index (1-based) and orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub site: usize,
    pub inverse: bool,
}

/// An ordered product of braid generators; may be empty (the identity).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BraidWord {
    letters: Vec<BraidLetter>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("braid letter site must be >= 1")]
pub struct SiteZero;

impl BraidWord {
    pub fn identity() -> Self {
        BraidWord::default()
    }

    pub fn from_letters(letters: Vec<BraidLetter>) -> Result<Self, SiteZero> {
        if letters.iter().any(|l| l.site == 0) {
            return Err(SiteZero);
        }
        Ok(BraidWord { letters })
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest site index used, or 0 for the identity word.
    pub fn max_site(&self) -> usize {
        self.letters.iter().map(|l| l.site).max().unwrap_or(0)
    }

    /// Concatenation: `self` acts first, then `other`.
    pub fn then(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { letters }
    }

    /// The group inverse: letters reversed with orientations flipped.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| BraidLetter {
                    site: l.site,
                    inverse: !l.inverse,
                })
                .collect(),
        }
    }
}

/// Canonical single-space-separated text form; `parse(format(w)) == w`.
pub fn format_braid_word(word: &BraidWord) -> String {
    let mut out = String::new();
    for (i, letter) in word.letters().iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push('s');
        out.push_str(&letter.site.to_string());
        if letter.inverse {
            out.push_str("^-1");
        }
    }
    out
}

/// Cancel adjacent `(i, b)(i, !b)` pairs to a fixed point.
///
/// Uses only the group axioms (no braid relations), so the represented
/// unitary is unchanged. A single stack pass reaches the fixed point: every
/// new adjacency created by a cancellation is re-examined when the next
/// letter arrives.
pub fn free_reduce(word: &BraidWord) -> BraidWord {
    let mut stack: Vec<BraidLetter> = Vec::with_capacity(word.len());
    for &letter in word.letters() {
        match stack.last() {
            Some(top) if top.site == letter.site && top.inverse != letter.inverse => {
                stack.pop();
            }
            _ => stack.push(letter),
        }
    }
    BraidWord { letters: stack }
}
