//! Braid-word and script parsing with character-offset diagnostics.

use super::{BraidLetter, BraidWord};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidParseError {
    #[error("expected a braid letter like 's3' or 's3^-1' at offset {offset}")]
    ExpectedLetter { offset: usize },
    #[error("site index must start with a nonzero digit at offset {offset}")]
    BadSite { offset: usize },
    #[error("site index overflows at offset {offset}")]
    SiteOverflow { offset: usize },
    #[error("malformed inverse marker (expected ^-1) at offset {offset}")]
    BadInverseMarker { offset: usize },
}

/// Parse a single braid word. Offsets in errors are 0-based character
/// positions pointing at the start of the offending letter.
pub fn parse_braid_word(text: &str) -> Result<BraidWord, BraidParseError> {
    let bytes = text.as_bytes();
    let mut i = 0usize;
    let mut letters = Vec::new();
    loop {
        while i < bytes.len() && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        if i == bytes.len() {
            break;
        }
        let letter_start = i;
        if bytes[i] != b's' {
            return Err(BraidParseError::ExpectedLetter {
                offset: letter_start,
            });
        }
        i += 1;
        let digit_start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if i == digit_start || bytes[digit_start] == b'0' {
            // "s", "s0", "s01" all report the letter start, per the grammar
            return Err(BraidParseError::BadSite {
                offset: letter_start,
            });
        }
        let site: usize = text[digit_start..i]
            .parse()
            .map_err(|_| BraidParseError::SiteOverflow {
                offset: letter_start,
            })?;
        let mut inverse = false;
        if i < bytes.len() && bytes[i] == b'^' {
            if bytes[i..].starts_with(b"^-1") {
                inverse = true;
                i += 3;
            } else {
                return Err(BraidParseError::BadInverseMarker { offset: i });
            }
        }
        if i < bytes.len() && !bytes[i].is_ascii_whitespace() {
            return Err(BraidParseError::ExpectedLetter { offset: i });
        }
        letters.push(BraidLetter { site, inverse });
    }
    Ok(BraidWord { letters })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {source}")]
pub struct ScriptError {
    /// 1-based line number.
    pub line: usize,
    pub source: BraidParseError,
}

/// Parse a braid script: one word per line, `#` starts a comment, blank
/// lines are skipped. Returns the words in file order.
pub fn parse_braid_script(text: &str) -> Result<Vec<BraidWord>, ScriptError> {
    let mut words = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let word = parse_braid_word(line).map_err(|source| ScriptError {
            line: idx + 1,
            source,
        })?;
        words.push(word);
    }
    Ok(words)
}
