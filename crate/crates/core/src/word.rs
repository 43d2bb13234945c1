//! Connection words over the two-letter alphabet {x, o}.
//!
//! An edge is marked `x` when it carries no connection point and `o` when it
//! does. A word records the marks along a named list of edges; its canonical
//! integer encoding treats the first-named edge as the most significant
//! position with x = 0 and o = 1, so words of length two enumerate in the
//! order xx, xo, ox, oo. Every boundary index in this crate (partition-matrix
//! rows and columns, transfer-matrix cut states) uses this encoding.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Mark on a single tile edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeState {
    /// No connection point.
    X,
    /// A connection point at the edge midpoint.
    O,
}

impl EdgeState {
    pub fn has_point(self) -> bool {
        self == EdgeState::O
    }

    pub fn bit(self) -> usize {
        match self {
            EdgeState::X => 0,
            EdgeState::O => 1,
        }
    }

    pub fn from_bit(bit: usize) -> Self {
        if bit & 1 == 0 {
            EdgeState::X
        } else {
            EdgeState::O
        }
    }
}

impl fmt::Display for EdgeState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeState::X => "x",
            EdgeState::O => "o",
        })
    }
}

/// Requirement placed on one edge when matching tiles or boards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EdgeRequirement {
    MustX,
    MustO,
    #[default]
    Free,
}

impl EdgeRequirement {
    pub fn allows(self, state: EdgeState) -> bool {
        match self {
            EdgeRequirement::MustX => state == EdgeState::X,
            EdgeRequirement::MustO => state == EdgeState::O,
            EdgeRequirement::Free => true,
        }
    }

    /// Requirement that pins an edge to exactly `state`.
    pub fn exactly(state: EdgeState) -> Self {
        match state {
            EdgeState::X => EdgeRequirement::MustX,
            EdgeState::O => EdgeRequirement::MustO,
        }
    }
}

/// Fixed-length connection word with the canonical integer encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeWord {
    len: u8,
    /// Position 0 (the first-named edge) sits in the most significant bit.
    bits: u32,
}

/// Longest supported word; cut words and boundary words stay far below this.
pub const MAX_WORD_LEN: usize = 24;

impl EdgeWord {
    /// Decode `index` into the word of length `len`.
    pub fn from_index(len: usize, index: usize) -> Self {
        assert!(len <= MAX_WORD_LEN, "word length {len} out of range");
        assert!(index < (1usize << len), "word index {index} out of range");
        EdgeWord {
            len: len as u8,
            bits: index as u32,
        }
    }

    pub fn from_states(states: &[EdgeState]) -> Self {
        assert!(states.len() <= MAX_WORD_LEN);
        let mut bits = 0u32;
        for s in states {
            bits = (bits << 1) | s.bit() as u32;
        }
        EdgeWord {
            len: states.len() as u8,
            bits,
        }
    }

    pub fn all_x(len: usize) -> Self {
        EdgeWord::from_index(len, 0)
    }

    pub fn all_o(len: usize) -> Self {
        EdgeWord::from_index(len, (1usize << len) - 1)
    }

    /// Canonical integer encoding: first-named edge most significant.
    pub fn index(self) -> usize {
        self.bits as usize
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    /// Mark at position `i` (0-based from the first-named edge).
    pub fn state(self, i: usize) -> EdgeState {
        assert!(i < self.len());
        EdgeState::from_bit((self.bits >> (self.len() - 1 - i)) as usize)
    }

    pub fn states(self) -> impl Iterator<Item = EdgeState> {
        (0..self.len()).map(move |i| self.state(i))
    }

    /// Number of `o` positions.
    pub fn connection_count(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn has_even_parity(self) -> bool {
        self.connection_count() % 2 == 0
    }

    /// All words of length `len` in canonical order.
    pub fn enumerate(len: usize) -> impl Iterator<Item = EdgeWord> {
        (0..1usize << len).map(move |i| EdgeWord::from_index(len, i))
    }
}

impl fmt::Display for EdgeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.states() {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for EdgeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s.len() > MAX_WORD_LEN {
            return Err(Error::AsciiParse {
                reason: format!("word '{s}' is too long"),
            });
        }
        let mut states = Vec::with_capacity(s.len());
        for ch in s.chars() {
            states.push(match ch {
                'x' | 'X' => EdgeState::X,
                'o' | 'O' => EdgeState::O,
                other => {
                    return Err(Error::AsciiParse {
                        reason: format!("'{other}' is not an edge mark (expected x or o)"),
                    })
                }
            });
        }
        Ok(EdgeWord::from_states(&states))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_for_length_two() {
        let words: Vec<String> = EdgeWord::enumerate(2).map(|w| w.to_string()).collect();
        assert_eq!(words, ["xx", "xo", "ox", "oo"]);
    }

    #[test]
    fn first_named_edge_is_most_significant() {
        let w = EdgeWord::from_states(&[EdgeState::O, EdgeState::X]);
        assert_eq!(w.index(), 2);
        assert_eq!(w.state(0), EdgeState::O);
        assert_eq!(w.state(1), EdgeState::X);
    }

    #[test]
    fn parse_round_trip() {
        let w: EdgeWord = "xoox".parse().unwrap();
        assert_eq!(w.to_string(), "xoox");
        assert_eq!(w.connection_count(), 2);
    }
}
