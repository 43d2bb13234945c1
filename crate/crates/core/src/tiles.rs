//! The eleven mosaic tiles and constrained tile-matching queries.
//!
//! Every tile is classified by its connection signature: which of its four
//! edges carry a connection point. The signature multiset is fixed — one
//! blank tile, one tile for each of the six two-point signatures (four
//! adjacent pairs and two opposite pairs), and four tiles sharing the
//! four-point signature (two double arcs and two crossings). Counting never
//! looks past the signature, so the double arcs and crossings act as a
//! single signature with multiplicity four; their artwork matters only to
//! the ASCII renderer.
//!
//! Which drawing goes with which two-point identifier is a labelling
//! convention. The [`TileSet::standard`] table uses:
//!
//! | id  | connects      | glyph |
//! |-----|---------------|-------|
//! | T0  | nothing       | ` `   |
//! | T1  | left, bottom  | `7`   |
//! | T2  | bottom, right | `r`   |
//! | T3  | right, top    | `L`   |
//! | T4  | top, left     | `J`   |
//! | T5  | left, right   | `-`   |
//! | T6  | top, bottom   | `|`   |
//! | T7  | all four (double arc: top-left + bottom-right) | `S` |
//! | T8  | all four (double arc: top-right + bottom-left) | `Z` |
//! | T9  | all four (crossing, vertical strand on top)    | `+` |
//! | T10 | all four (crossing, horizontal strand on top)  | `x` |
//!
//! All counts are invariant under relabelling within a signature class;
//! [`TileSet::custom`] exists so tests can assert exactly that.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{EdgeRequirement, EdgeState, EdgeWord};

/// The four edges of a tile, in the order used by signature words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Edge {
    Top,
    Bottom,
    Left,
    Right,
}

impl Edge {
    pub const ALL: [Edge; 4] = [Edge::Top, Edge::Bottom, Edge::Left, Edge::Right];

    /// Position of this edge in a signature word.
    pub fn position(self) -> usize {
        match self {
            Edge::Top => 0,
            Edge::Bottom => 1,
            Edge::Left => 2,
            Edge::Right => 3,
        }
    }
}

/// Connection signature of one tile: the marks on (top, bottom, left, right).
///
/// Packed into a nibble with top as the most significant bit, matching the
/// canonical word encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature(u8);

impl Signature {
    pub const ALL_X: Signature = Signature(0);
    pub const ALL_O: Signature = Signature(0b1111);

    pub fn new(top: EdgeState, bottom: EdgeState, left: EdgeState, right: EdgeState) -> Self {
        Signature(
            (top.bit() << 3 | bottom.bit() << 2 | left.bit() << 1 | right.bit()) as u8,
        )
    }

    /// Signature with connection points exactly on `edges`.
    pub fn connecting(edges: &[Edge]) -> Self {
        let mut bits = 0u8;
        for e in edges {
            bits |= 1 << (3 - e.position());
        }
        Signature(bits)
    }

    pub fn from_index(index: usize) -> Self {
        assert!(index < 16);
        Signature(index as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn get(self, edge: Edge) -> EdgeState {
        EdgeState::from_bit((self.0 >> (3 - edge.position())) as usize)
    }

    pub fn top(self) -> EdgeState {
        self.get(Edge::Top)
    }

    pub fn bottom(self) -> EdgeState {
        self.get(Edge::Bottom)
    }

    pub fn left(self) -> EdgeState {
        self.get(Edge::Left)
    }

    pub fn right(self) -> EdgeState {
        self.get(Edge::Right)
    }

    /// The signature as a word over (top, bottom, left, right).
    pub fn word(self) -> EdgeWord {
        EdgeWord::from_index(4, self.index())
    }

    pub fn connection_count(self) -> u32 {
        self.0.count_ones()
    }
}

/// Identifier of one of the eleven tiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TileId {
    T0,
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
}

impl TileId {
    pub const ALL: [TileId; 11] = [
        TileId::T0,
        TileId::T1,
        TileId::T2,
        TileId::T3,
        TileId::T4,
        TileId::T5,
        TileId::T6,
        TileId::T7,
        TileId::T8,
        TileId::T9,
        TileId::T10,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Self {
        TileId::ALL[index]
    }
}

impl fmt::Display for TileId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.index())
    }
}

impl FromStr for TileId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s.strip_prefix(['T', 't']).unwrap_or(s);
        digits
            .parse::<usize>()
            .ok()
            .filter(|&n| n < 11)
            .map(TileId::from_index)
            .ok_or_else(|| Error::AsciiParse {
                reason: format!("'{s}' is not a tile id (expected T0..T10)"),
            })
    }
}

/// One mosaic tile: identifier, connection signature, and render glyph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tile {
    pub id: TileId,
    pub signature: Signature,
    pub glyph: char,
}

/// The full tile table, with a per-signature index for matching queries.
#[derive(Debug, Clone)]
pub struct TileSet {
    tiles: [Tile; 11],
    /// Tile ids grouped by signature index; at most four share one signature.
    by_signature: [([u8; 4], u8); 16],
}

const STANDARD_GLYPHS: [char; 11] = [' ', '7', 'r', 'L', 'J', '-', '|', 'S', 'Z', '+', 'x'];

fn standard_signatures() -> [Signature; 11] {
    use Edge::*;
    [
        Signature::ALL_X,
        Signature::connecting(&[Left, Bottom]),
        Signature::connecting(&[Bottom, Right]),
        Signature::connecting(&[Right, Top]),
        Signature::connecting(&[Top, Left]),
        Signature::connecting(&[Left, Right]),
        Signature::connecting(&[Top, Bottom]),
        Signature::ALL_O,
        Signature::ALL_O,
        Signature::ALL_O,
        Signature::ALL_O,
    ]
}

impl TileSet {
    /// The documented tile table (see the module docs).
    pub fn standard() -> TileSet {
        TileSet::custom(standard_signatures()).expect("standard table satisfies the 1/6/4 split")
    }

    /// Tile table with a caller-chosen assignment of signatures to ids.
    ///
    /// The multiset is still required to be the 1/6/4 split: exactly one
    /// blank, each two-point signature exactly once, the four-point
    /// signature exactly four times. Counts depend only on that multiset,
    /// so permuted assignments are interchangeable everywhere.
    pub fn custom(signatures: [Signature; 11]) -> Result<TileSet> {
        let mut multiplicity = [0u8; 16];
        for sig in &signatures {
            multiplicity[sig.index()] += 1;
        }
        for idx in 0..16 {
            let expected = match Signature::from_index(idx).connection_count() {
                0 => 1,
                2 => 1,
                4 => 4,
                _ => 0,
            };
            if multiplicity[idx] != expected {
                return Err(Error::InvalidTileTable);
            }
        }

        let mut tiles = [Tile {
            id: TileId::T0,
            signature: Signature::ALL_X,
            glyph: ' ',
        }; 11];
        let mut by_signature = [([0u8; 4], 0u8); 16];
        for (i, (&sig, &glyph)) in signatures.iter().zip(STANDARD_GLYPHS.iter()).enumerate() {
            let id = TileId::from_index(i);
            tiles[i] = Tile {
                id,
                signature: sig,
                glyph,
            };
            let (ids, len) = &mut by_signature[sig.index()];
            ids[*len as usize] = i as u8;
            *len += 1;
        }
        Ok(TileSet {
            tiles,
            by_signature,
        })
    }

    pub fn tiles(&self) -> &[Tile; 11] {
        &self.tiles
    }

    pub fn tile(&self, id: TileId) -> &Tile {
        &self.tiles[id.index()]
    }

    pub fn signature(&self, id: TileId) -> Signature {
        self.tiles[id.index()].signature
    }

    pub fn glyph(&self, id: TileId) -> char {
        self.tiles[id.index()].glyph
    }

    /// Tiles carrying exactly this signature (empty for odd parity).
    pub fn tiles_with_signature(&self, sig: Signature) -> impl Iterator<Item = TileId> + '_ {
        let (ids, len) = &self.by_signature[sig.index()];
        ids[..*len as usize].iter().map(|&i| TileId::from_index(i as usize))
    }

    /// How many tiles carry this signature: 1, 4, or 0.
    pub fn multiplicity(&self, sig: Signature) -> usize {
        self.by_signature[sig.index()].1 as usize
    }

    /// Number of tiles whose signature satisfies `constraint`.
    pub fn count_matching(&self, constraint: &EdgeConstraint) -> usize {
        self.tiles
            .iter()
            .filter(|t| constraint.admits(t.signature))
            .count()
    }

    /// Tiles whose signature satisfies `constraint`, in id order.
    pub fn list_matching(&self, constraint: &EdgeConstraint) -> Vec<TileId> {
        self.tiles
            .iter()
            .filter(|t| constraint.admits(t.signature))
            .map(|t| t.id)
            .collect()
    }
}

/// Per-edge requirements for a single tile, with an optional "these two
/// edges must not both carry connection points" restriction.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeConstraint {
    requirements: [EdgeRequirement; 4],
    not_both_o: Option<(Edge, Edge)>,
}

impl EdgeConstraint {
    /// No restriction on any edge.
    pub fn free() -> Self {
        EdgeConstraint::default()
    }

    pub fn with(mut self, edge: Edge, requirement: EdgeRequirement) -> Self {
        self.requirements[edge.position()] = requirement;
        self
    }

    pub fn must_x(self, edge: Edge) -> Self {
        self.with(edge, EdgeRequirement::MustX)
    }

    pub fn must_o(self, edge: Edge) -> Self {
        self.with(edge, EdgeRequirement::MustO)
    }

    /// Pin two edges to the positions of a two-letter word.
    pub fn with_pair(self, first: Edge, second: Edge, word: EdgeWord) -> Self {
        assert_eq!(word.len(), 2);
        self.with(first, EdgeRequirement::exactly(word.state(0)))
            .with(second, EdgeRequirement::exactly(word.state(1)))
    }

    /// Require that `a` and `b` do not both carry connection points.
    ///
    /// Rejected when both edges are already pinned to o, since no tile
    /// could ever satisfy that.
    pub fn not_both_o(mut self, a: Edge, b: Edge) -> Result<Self> {
        if self.requirements[a.position()] == EdgeRequirement::MustO
            && self.requirements[b.position()] == EdgeRequirement::MustO
        {
            return Err(Error::ContradictoryConstraint);
        }
        self.not_both_o = Some((a, b));
        Ok(self)
    }

    pub fn requirement(&self, edge: Edge) -> EdgeRequirement {
        self.requirements[edge.position()]
    }

    pub fn admits(&self, sig: Signature) -> bool {
        for edge in Edge::ALL {
            if !self.requirements[edge.position()].allows(sig.get(edge)) {
                return false;
            }
        }
        if let Some((a, b)) = self.not_both_o {
            if sig.get(a) == EdgeState::O && sig.get(b) == EdgeState::O {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set() -> TileSet {
        TileSet::standard()
    }

    #[test]
    fn eleven_tiles_with_even_signatures() {
        let set = set();
        assert_eq!(set.tiles().len(), 11);
        for tile in set.tiles() {
            assert!(tile.signature.connection_count() % 2 == 0);
        }
    }

    /// The 1/6/4 multiplicity split over the sixteen possible signatures.
    #[test]
    fn signature_multiplicities() {
        let set = set();
        let mut total = 0;
        for idx in 0..16 {
            let sig = Signature::from_index(idx);
            let mult = set.multiplicity(sig);
            match sig.connection_count() {
                0 | 2 => assert_eq!(mult, 1, "signature {}", sig.word()),
                4 => assert_eq!(mult, 4),
                _ => assert_eq!(mult, 0, "odd signature {}", sig.word()),
            }
            total += mult;
        }
        assert_eq!(total, 11);
    }

    #[test]
    fn four_point_tiles_are_t7_through_t10() {
        let set = set();
        let all_o: Vec<TileId> = set.tiles_with_signature(Signature::ALL_O).collect();
        assert_eq!(all_o, [TileId::T7, TileId::T8, TileId::T9, TileId::T10]);
    }

    #[test]
    fn blank_and_double_point_signatures() {
        let set = set();
        assert_eq!(set.signature(TileId::T0), Signature::ALL_X);
        // T5 is the left-right line; pinned by the matching oracle.
        let c = EdgeConstraint::free()
            .must_o(Edge::Left)
            .must_o(Edge::Right)
            .must_x(Edge::Top)
            .must_x(Edge::Bottom);
        assert_eq!(set.list_matching(&c), [TileId::T5]);
        assert_eq!(set.signature(TileId::T7), Signature::ALL_O);
    }

    #[test]
    fn free_constraint_matches_all_eleven() {
        assert_eq!(set().count_matching(&EdgeConstraint::free()), 11);
    }

    /// Two pinned edges leave 2 choices unless pinned to oo, which leaves 5.
    /// This holds for every edge pair, not only adjacent ones.
    #[test]
    fn pair_counts_two_or_five() {
        let set = set();
        let pairs = [
            (Edge::Bottom, Edge::Right),
            (Edge::Bottom, Edge::Left),
            (Edge::Top, Edge::Right),
            (Edge::Top, Edge::Left),
            (Edge::Top, Edge::Bottom),
            (Edge::Left, Edge::Right),
        ];
        for (a, b) in pairs {
            for word in EdgeWord::enumerate(2) {
                let c = EdgeConstraint::free().with_pair(a, b, word);
                let expected = if word.connection_count() == 2 { 5 } else { 2 };
                assert_eq!(
                    set.count_matching(&c),
                    expected,
                    "edges {a:?},{b:?} pinned to {word}"
                );
            }
        }
    }

    #[test]
    fn single_edge_counts_four_or_seven() {
        let set = set();
        for edge in Edge::ALL {
            assert_eq!(set.count_matching(&EdgeConstraint::free().must_x(edge)), 4);
            assert_eq!(set.count_matching(&EdgeConstraint::free().must_o(edge)), 7);
        }
    }

    #[test]
    fn not_both_o_excludes_the_oo_tiles() {
        let set = set();
        let c = EdgeConstraint::free()
            .not_both_o(Edge::Bottom, Edge::Right)
            .unwrap();
        // 11 tiles minus the 5 whose bottom and right are both o.
        assert_eq!(set.count_matching(&c), 6);
    }

    #[test]
    fn contradictory_pair_constraint_is_rejected() {
        let err = EdgeConstraint::free()
            .must_o(Edge::Top)
            .must_o(Edge::Left)
            .not_both_o(Edge::Top, Edge::Left)
            .unwrap_err();
        assert_eq!(err, Error::ContradictoryConstraint);
    }

    #[test]
    fn count_matches_list_length() {
        let set = set();
        for idx in 0..16 {
            let word = EdgeWord::from_index(4, idx);
            let mut c = EdgeConstraint::free();
            for (edge, state) in Edge::ALL.into_iter().zip(word.states()) {
                c = c.with(edge, EdgeRequirement::exactly(state));
            }
            assert_eq!(set.count_matching(&c), set.list_matching(&c).len());
        }
    }

    #[test]
    fn custom_table_rejects_broken_multisets() {
        let mut sigs = standard_signatures();
        sigs[5] = sigs[6]; // two top-bottom lines, no left-right line
        assert_eq!(TileSet::custom(sigs).unwrap_err(), Error::InvalidTileTable);
    }

    #[test]
    fn tile_id_parsing() {
        assert_eq!("T10".parse::<TileId>().unwrap(), TileId::T10);
        assert_eq!("t3".parse::<TileId>().unwrap(), TileId::T3);
        assert_eq!("4".parse::<TileId>().unwrap(), TileId::T4);
        assert!("T11".parse::<TileId>().is_err());
        assert!("blob".parse::<TileId>().is_err());
    }
}
