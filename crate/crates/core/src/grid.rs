//! Mosaic boards and constrained backtracking enumeration.
//!
//! A board is suitably connected when every pair of side-by-side tiles
//! agrees about the connection point on their shared edge. A knot mosaic is
//! a suitably connected board with no connection points on its outer
//! boundary; a quasimosaic may carry them. The backtracking search fills
//! cells one at a time (row-major unless told otherwise), pruning a
//! placement the moment it disagrees with an already-placed neighbour or
//! with a boundary requirement.
//!
//! Cells are indexed (row, col) with row 0 at the top. Boundary words read
//! left to right along the top and bottom sides and top to bottom along the
//! left and right sides.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::tiles::{Edge, Signature, TileId, TileSet};
use crate::word::{EdgeRequirement, EdgeState, EdgeWord};

/// Default cap on `rows * cols` for backtracking searches. Larger boards
/// are better served by the transfer-matrix route.
pub const DEFAULT_CELL_LIMIT: usize = 16;

/// A rows x cols board of tiles, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MosaicGrid {
    rows: usize,
    cols: usize,
    tiles: Vec<TileId>,
}

impl MosaicGrid {
    pub fn new(rows: usize, cols: usize, tiles: Vec<TileId>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::OutOfDomain {
                what: "board",
                rows,
                cols,
            });
        }
        if tiles.len() != rows * cols {
            return Err(Error::TileCountMismatch {
                rows,
                cols,
                expected: rows * cols,
                got: tiles.len(),
            });
        }
        Ok(MosaicGrid { rows, cols, tiles })
    }

    /// Board with every cell holding the same tile.
    pub fn filled(rows: usize, cols: usize, tile: TileId) -> Self {
        MosaicGrid::new(rows, cols, vec![tile; rows * cols]).expect("positive dimensions")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> TileId {
        self.tiles[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, tile: TileId) {
        self.tiles[row * self.cols + col] = tile;
    }

    pub fn tiles(&self) -> &[TileId] {
        &self.tiles
    }

    /// Suitably connected under a caller-chosen tile table.
    pub fn is_suitably_connected_in(&self, set: &TileSet) -> bool {
        for r in 0..self.rows {
            for c in 0..self.cols {
                let sig = set.signature(self.get(r, c));
                if c + 1 < self.cols
                    && sig.right() != set.signature(self.get(r, c + 1)).left()
                {
                    return false;
                }
                if r + 1 < self.rows
                    && sig.bottom() != set.signature(self.get(r + 1, c)).top()
                {
                    return false;
                }
            }
        }
        true
    }

    /// Connection words along (top, bottom, left, right) outer sides.
    pub fn boundary_words(&self, set: &TileSet) -> [EdgeWord; 4] {
        let state = |r: usize, c: usize, e: Edge| set.signature(self.get(r, c)).get(e);
        let top: Vec<EdgeState> = (0..self.cols).map(|c| state(0, c, Edge::Top)).collect();
        let bottom: Vec<EdgeState> = (0..self.cols)
            .map(|c| state(self.rows - 1, c, Edge::Bottom))
            .collect();
        let left: Vec<EdgeState> = (0..self.rows).map(|r| state(r, 0, Edge::Left)).collect();
        let right: Vec<EdgeState> = (0..self.rows)
            .map(|r| state(r, self.cols - 1, Edge::Right))
            .collect();
        [
            EdgeWord::from_states(&top),
            EdgeWord::from_states(&bottom),
            EdgeWord::from_states(&left),
            EdgeWord::from_states(&right),
        ]
    }
}

/// True when every side-by-side tile pair agrees on its shared edge.
pub fn is_suitably_connected(grid: &MosaicGrid) -> bool {
    grid.is_suitably_connected_in(&TileSet::standard())
}

/// True for suitably connected boards with an all-x outer boundary.
pub fn is_knot_mosaic(grid: &MosaicGrid) -> bool {
    let set = TileSet::standard();
    grid.is_suitably_connected_in(&set)
        && grid
            .boundary_words(&set)
            .iter()
            .all(|w| w.connection_count() == 0)
}

/// Per-edge requirements along the four outer sides of a board.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundarySpec {
    top: Vec<EdgeRequirement>,
    bottom: Vec<EdgeRequirement>,
    left: Vec<EdgeRequirement>,
    right: Vec<EdgeRequirement>,
}

impl BoundarySpec {
    pub fn new(
        top: Vec<EdgeRequirement>,
        bottom: Vec<EdgeRequirement>,
        left: Vec<EdgeRequirement>,
        right: Vec<EdgeRequirement>,
    ) -> Self {
        BoundarySpec {
            top,
            bottom,
            left,
            right,
        }
    }

    /// No requirement anywhere: enumerates quasimosaics.
    pub fn free(rows: usize, cols: usize) -> Self {
        BoundarySpec::new(
            vec![EdgeRequirement::Free; cols],
            vec![EdgeRequirement::Free; cols],
            vec![EdgeRequirement::Free; rows],
            vec![EdgeRequirement::Free; rows],
        )
    }

    /// Every outer edge pinned to x: enumerates knot mosaics.
    pub fn all_x(rows: usize, cols: usize) -> Self {
        BoundarySpec::new(
            vec![EdgeRequirement::MustX; cols],
            vec![EdgeRequirement::MustX; cols],
            vec![EdgeRequirement::MustX; rows],
            vec![EdgeRequirement::MustX; rows],
        )
    }

    pub fn top(&self) -> &[EdgeRequirement] {
        &self.top
    }

    pub fn bottom(&self) -> &[EdgeRequirement] {
        &self.bottom
    }

    pub fn left(&self) -> &[EdgeRequirement] {
        &self.left
    }

    pub fn right(&self) -> &[EdgeRequirement] {
        &self.right
    }

    /// Pin the bottom side, left to right, to `word`.
    pub fn with_bottom_word(mut self, word: EdgeWord) -> Self {
        assert_eq!(word.len(), self.bottom.len(), "bottom word length");
        self.bottom = word.states().map(EdgeRequirement::exactly).collect();
        self
    }

    /// Pin the right side, top to bottom, to `word`.
    pub fn with_right_word(mut self, word: EdgeWord) -> Self {
        assert_eq!(word.len(), self.right.len(), "right word length");
        self.right = word.states().map(EdgeRequirement::exactly).collect();
        self
    }

    /// Pin the top side, left to right, to `word`.
    pub fn with_top_word(mut self, word: EdgeWord) -> Self {
        assert_eq!(word.len(), self.top.len(), "top word length");
        self.top = word.states().map(EdgeRequirement::exactly).collect();
        self
    }

    /// Pin the left side, top to bottom, to `word`.
    pub fn with_left_word(mut self, word: EdgeWord) -> Self {
        assert_eq!(word.len(), self.left.len(), "left word length");
        self.left = word.states().map(EdgeRequirement::exactly).collect();
        self
    }

    fn fits_board(&self, rows: usize, cols: usize) -> bool {
        self.top.len() == cols
            && self.bottom.len() == cols
            && self.left.len() == rows
            && self.right.len() == rows
    }
}

/// Knobs for the backtracking search.
#[derive(Debug, Clone)]
pub struct SearchOptions<'a> {
    pub tiles: &'a TileSet,
    /// Threads to spread the first cell's tile choices over; 1 = sequential.
    pub workers: usize,
    /// Cap on `rows * cols`.
    pub cell_limit: usize,
    /// Cell visit order as (row, col) pairs; `None` = row-major. Any
    /// permutation of the cells yields the same counts.
    pub visit_order: Option<Vec<(usize, usize)>>,
}

impl<'a> SearchOptions<'a> {
    pub fn new(tiles: &'a TileSet) -> Self {
        SearchOptions {
            tiles,
            workers: 1,
            cell_limit: DEFAULT_CELL_LIMIT,
            visit_order: None,
        }
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn cell_limit(mut self, limit: usize) -> Self {
        self.cell_limit = limit;
        self
    }

    pub fn visit_order(mut self, order: Vec<(usize, usize)>) -> Self {
        self.visit_order = Some(order);
        self
    }
}

const EMPTY: u8 = u8::MAX;

/// Backtracking search over one board shape.
struct Search<'a> {
    rows: usize,
    cols: usize,
    boundary: &'a BoundarySpec,
    signatures: [Signature; 11],
    /// Cells pinned to a single tile before the search starts.
    pinned: Vec<Option<TileId>>,
    /// Cell visit order, as flat indices.
    order: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(
        set: &TileSet,
        rows: usize,
        cols: usize,
        boundary: &'a BoundarySpec,
        pinned: Vec<Option<TileId>>,
        visit_order: Option<&[(usize, usize)]>,
    ) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::OutOfDomain {
                what: "board",
                rows,
                cols,
            });
        }
        if !boundary.fits_board(rows, cols) {
            return Err(Error::BoundaryMismatch { rows, cols });
        }
        let order = match visit_order {
            None => (0..rows * cols).collect(),
            Some(cells) => {
                let mut seen = vec![false; rows * cols];
                let mut order = Vec::with_capacity(rows * cols);
                for &(r, c) in cells {
                    assert!(r < rows && c < cols, "visit order cell out of range");
                    let idx = r * cols + c;
                    assert!(!seen[idx], "visit order repeats ({r},{c})");
                    seen[idx] = true;
                    order.push(idx);
                }
                assert!(
                    order.len() == rows * cols,
                    "visit order must cover every cell"
                );
                order
            }
        };
        let mut signatures = [Signature::ALL_X; 11];
        for (i, tile) in set.tiles().iter().enumerate() {
            signatures[i] = tile.signature;
        }
        Ok(Search {
            rows,
            cols,
            boundary,
            signatures,
            pinned,
            order,
        })
    }

    /// Placement check against boundary requirements and placed neighbours.
    fn fits(&self, cells: &[u8], cell: usize, sig: Signature) -> bool {
        let r = cell / self.cols;
        let c = cell % self.cols;
        if r == 0 {
            if !self.boundary.top[c].allows(sig.top()) {
                return false;
            }
        } else {
            let n = cells[cell - self.cols];
            if n != EMPTY && self.signatures[n as usize].bottom() != sig.top() {
                return false;
            }
        }
        if r == self.rows - 1 {
            if !self.boundary.bottom[c].allows(sig.bottom()) {
                return false;
            }
        } else {
            let n = cells[cell + self.cols];
            if n != EMPTY && self.signatures[n as usize].top() != sig.bottom() {
                return false;
            }
        }
        if c == 0 {
            if !self.boundary.left[r].allows(sig.left()) {
                return false;
            }
        } else {
            let n = cells[cell - 1];
            if n != EMPTY && self.signatures[n as usize].right() != sig.left() {
                return false;
            }
        }
        if c == self.cols - 1 {
            if !self.boundary.right[r].allows(sig.right()) {
                return false;
            }
        } else {
            let n = cells[cell + 1];
            if n != EMPTY && self.signatures[n as usize].left() != sig.right() {
                return false;
            }
        }
        true
    }

    fn descend(&self, cells: &mut [u8], pos: usize, visit: &mut impl FnMut(&[u8])) {
        if pos == self.order.len() {
            visit(cells);
            return;
        }
        let cell = self.order[pos];
        let pin = self.pinned[cell];
        for t in 0..11u8 {
            if let Some(p) = pin {
                if p.index() != t as usize {
                    continue;
                }
            }
            if !self.fits(cells, cell, self.signatures[t as usize]) {
                continue;
            }
            cells[cell] = t;
            self.descend(cells, pos + 1, visit);
            cells[cell] = EMPTY;
        }
    }

    fn visit_all(&self, visit: &mut impl FnMut(&[u8])) {
        let mut cells = vec![EMPTY; self.rows * self.cols];
        self.descend(&mut cells, 0, visit);
    }

    fn count(&self, workers: usize) -> BigUint {
        if workers <= 1 || self.order.len() < 2 {
            let mut total = BigUint::zero();
            self.visit_all(&mut |_| total += 1u32);
            return total;
        }
        // Split the first visited cell's tile choices across workers.
        // Partial counts combine by addition, so the result matches the
        // sequential run exactly.
        let first = self.order[0];
        let empty = vec![EMPTY; self.rows * self.cols];
        let branches: Vec<u8> = (0..11u8)
            .filter(|&t| match self.pinned[first] {
                Some(p) => p.index() == t as usize,
                None => true,
            })
            .filter(|&t| self.fits(&empty, first, self.signatures[t as usize]))
            .collect();
        let workers = workers.min(branches.len().max(1));
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|k| {
                    let branches = &branches;
                    scope.spawn(move || {
                        let mut subtotal = BigUint::zero();
                        let mut cells = vec![EMPTY; self.rows * self.cols];
                        for &t in branches.iter().skip(k).step_by(workers) {
                            cells[first] = t;
                            self.descend(&mut cells, 1, &mut |_| subtotal += 1u32);
                            cells[first] = EMPTY;
                        }
                        subtotal
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search worker panicked"))
                .sum()
        })
    }
}

fn check_cell_limit(rows: usize, cols: usize, limit: usize) -> Result<()> {
    if rows.saturating_mul(cols) > limit {
        Err(Error::CellLimitExceeded { rows, cols, limit })
    } else {
        Ok(())
    }
}

/// Exact number of suitably connected boards meeting `boundary`, using the
/// standard tile table and default options.
pub fn count_constrained(rows: usize, cols: usize, boundary: &BoundarySpec) -> Result<BigUint> {
    count_constrained_with(rows, cols, boundary, &SearchOptions::new(&TileSet::standard()))
}

pub fn count_constrained_with(
    rows: usize,
    cols: usize,
    boundary: &BoundarySpec,
    options: &SearchOptions,
) -> Result<BigUint> {
    check_cell_limit(rows, cols, options.cell_limit)?;
    let search = Search::new(
        options.tiles,
        rows,
        cols,
        boundary,
        vec![None; rows * cols],
        options.visit_order.as_deref(),
    )?;
    Ok(search.count(options.workers))
}

/// Every suitably connected board meeting `boundary`, in row-major fill
/// order of the search.
pub fn enumerate_constrained(
    rows: usize,
    cols: usize,
    boundary: &BoundarySpec,
) -> Result<Vec<MosaicGrid>> {
    enumerate_constrained_with(rows, cols, boundary, &SearchOptions::new(&TileSet::standard()))
}

/// Enumeration variant of [`count_constrained_with`]; always sequential.
pub fn enumerate_constrained_with(
    rows: usize,
    cols: usize,
    boundary: &BoundarySpec,
    options: &SearchOptions,
) -> Result<Vec<MosaicGrid>> {
    check_cell_limit(rows, cols, options.cell_limit)?;
    let search = Search::new(
        options.tiles,
        rows,
        cols,
        boundary,
        vec![None; rows * cols],
        options.visit_order.as_deref(),
    )?;
    let mut grids = Vec::new();
    search.visit_all(&mut |cells| {
        let tiles = cells
            .iter()
            .map(|&t| TileId::from_index(t as usize))
            .collect();
        grids.push(MosaicGrid { rows, cols, tiles });
    });
    Ok(grids)
}

/// Visit every suitably connected filling of a board; `visit` receives the
/// tiles as row-major indices into the tile table. Callers enforce their
/// own size guards.
pub(crate) fn for_each_grid(
    set: &TileSet,
    rows: usize,
    cols: usize,
    boundary: &BoundarySpec,
    visit: &mut impl FnMut(&[u8]),
) -> Result<()> {
    let search = Search::new(set, rows, cols, boundary, vec![None; rows * cols], None)?;
    search.visit_all(visit);
    Ok(())
}

/// The four class totals of 3x3 quasimosaics, split by where the centre
/// tile's connection points sit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterClassCounts {
    /// Centre tile blank.
    pub all_x: BigUint,
    /// Centre tile with two points on opposite edges.
    pub opposite: BigUint,
    /// Centre tile with two points on adjacent edges.
    pub adjacent: BigUint,
    /// Centre tile with four points.
    pub all_o: BigUint,
}

impl CenterClassCounts {
    pub fn total(&self) -> BigUint {
        &self.all_x + &self.opposite + &self.adjacent + &self.all_o
    }
}

/// Counts of free-boundary 3x3 boards per centre word.
///
/// The centre word reads the four edges around the middle tile in the
/// cyclic order (top, right, bottom, left), first edge most significant.
/// Class totals are invariant under rotations of that word, so the choice
/// of starting edge is immaterial; odd-parity words always count zero.
pub fn q33_center_word_counts() -> [BigUint; 16] {
    q33_center_word_counts_in(&TileSet::standard())
}

pub fn q33_center_word_counts_in(set: &TileSet) -> [BigUint; 16] {
    let boundary = BoundarySpec::free(3, 3);
    let search = Search::new(set, 3, 3, &boundary, vec![None; 9], None)
        .expect("3x3 board is always valid");
    let mut counts: [BigUint; 16] = Default::default();
    let center = 4;
    search.visit_all(&mut |cells| {
        let sig = set.signature(TileId::from_index(cells[center] as usize));
        let word = sig.top().bit() << 3 | sig.right().bit() << 2 | sig.bottom().bit() << 1
            | sig.left().bit();
        counts[word] += 1u32;
    });
    counts
}

/// Class totals (all-x, opposite pair, adjacent pair, all-o) of the centre
/// word over all free-boundary 3x3 boards.
pub fn q33_center_class_counts() -> CenterClassCounts {
    q33_center_class_counts_in(&TileSet::standard())
}

pub fn q33_center_class_counts_in(set: &TileSet) -> CenterClassCounts {
    let words = q33_center_word_counts_in(set);
    let mut classes = CenterClassCounts {
        all_x: BigUint::zero(),
        opposite: BigUint::zero(),
        adjacent: BigUint::zero(),
        all_o: BigUint::zero(),
    };
    for (idx, count) in words.iter().enumerate() {
        // Word bit layout: top=8, right=4, bottom=2, left=1.
        match idx.count_ones() {
            0 => classes.all_x += count,
            2 if idx == 0b1010 || idx == 0b0101 => classes.opposite += count,
            2 => classes.adjacent += count,
            4 => classes.all_o += count,
            _ => debug_assert!(count.is_zero(), "odd centre word with nonzero count"),
        }
    }
    classes
}

/// Counts of the nine constrained quasimosaic shapes, using xx as the
/// representative non-oo word.
pub fn type_counts() -> [u64; 9] {
    type_counts_with(&TileSet::standard(), EdgeWord::from_index(2, 0))
        .expect("xx is a valid non-oo word")
}

/// Counts of the nine constrained quasimosaic shapes.
///
/// The shapes, with every unnamed edge left free:
///
/// 1. single tile, (bottom, right) pinned to `non_oo`
/// 2. single tile, (bottom, right) pinned to oo
/// 3. domino `[A|B]`, A's (bottom, left) pinned to `non_oo`, B's bottom x
/// 4. domino, A's (bottom, left) pinned to `non_oo`, B's bottom o
/// 5. domino, A's (bottom, left) pinned to oo, B's bottom x
/// 6. domino, A's (bottom, left) pinned to oo, B's bottom o
/// 7. L-shape (corner M, right neighbour B, lower neighbour C), B's
///    (bottom, right) and C's (bottom, right) both pinned to `non_oo`
/// 8. L-shape, B's pair pinned to oo, C's pair pinned to `non_oo`
/// 9. L-shape, both pairs pinned to oo
///
/// Every count is independent of the representative `non_oo` word and of
/// which outer edges carry the pins; the standard table yields
/// (2, 5, 4, 7, 10, 22, 11, 32, 98).
pub fn type_counts_with(set: &TileSet, non_oo: EdgeWord) -> Result<[u64; 9]> {
    if non_oo.len() != 2 || non_oo.connection_count() == 2 {
        return Err(Error::InvalidWord {
            reason: format!("representative word must be a two-letter word other than oo, got {non_oo}"),
        });
    }
    let oo = EdgeWord::from_index(2, 3);
    let word_state = |w: EdgeWord, i: usize| w.state(i);

    let single = |pair: EdgeWord| -> u64 {
        set.tiles()
            .iter()
            .filter(|t| {
                t.signature.bottom() == word_state(pair, 0)
                    && t.signature.right() == word_state(pair, 1)
            })
            .count() as u64
    };

    // Domino [A|B]: A's right edge glues to B's left edge.
    let domino = |pair: EdgeWord, b_bottom: EdgeState| -> u64 {
        let mut count = 0;
        for a in set.tiles() {
            if a.signature.bottom() != word_state(pair, 0)
                || a.signature.left() != word_state(pair, 1)
            {
                continue;
            }
            for b in set.tiles() {
                if b.signature.left() == a.signature.right()
                    && b.signature.bottom() == b_bottom
                {
                    count += 1;
                }
            }
        }
        count
    };

    // L-shape: corner M with B to its right and C below it.
    let l_shape = |b_pair: EdgeWord, c_pair: EdgeWord| -> u64 {
        let mut count = 0;
        for m in set.tiles() {
            for b in set.tiles() {
                if b.signature.left() != m.signature.right()
                    || b.signature.bottom() != word_state(b_pair, 0)
                    || b.signature.right() != word_state(b_pair, 1)
                {
                    continue;
                }
                for c in set.tiles() {
                    if c.signature.top() == m.signature.bottom()
                        && c.signature.bottom() == word_state(c_pair, 0)
                        && c.signature.right() == word_state(c_pair, 1)
                    {
                        count += 1;
                    }
                }
            }
        }
        count
    };

    Ok([
        single(non_oo),
        single(oo),
        domino(non_oo, EdgeState::X),
        domino(non_oo, EdgeState::O),
        domino(oo, EdgeState::X),
        domino(oo, EdgeState::O),
        l_shape(non_oo, non_oo),
        l_shape(oo, non_oo),
        l_shape(oo, oo),
    ])
}

/// All knot mosaics two rows and two columns larger whose central block is
/// `grid`. Every suitably connected input has exactly two of them.
pub fn twofold_extensions(grid: &MosaicGrid) -> Result<Vec<MosaicGrid>> {
    twofold_extensions_in(&TileSet::standard(), grid, DEFAULT_CELL_LIMIT)
}

pub fn twofold_extensions_in(
    set: &TileSet,
    grid: &MosaicGrid,
    cell_limit: usize,
) -> Result<Vec<MosaicGrid>> {
    if !grid.is_suitably_connected_in(set) {
        return Err(Error::NotSuitablyConnected);
    }
    let rows = grid.rows() + 2;
    let cols = grid.cols() + 2;
    check_cell_limit(rows, cols, cell_limit)?;
    let mut pinned = vec![None; rows * cols];
    for r in 0..grid.rows() {
        for c in 0..grid.cols() {
            pinned[(r + 1) * cols + (c + 1)] = Some(grid.get(r, c));
        }
    }
    let boundary = BoundarySpec::all_x(rows, cols);
    let search = Search::new(set, rows, cols, &boundary, pinned, None)?;
    let mut extensions = Vec::new();
    search.visit_all(&mut |cells| {
        let tiles = cells
            .iter()
            .map(|&t| TileId::from_index(t as usize))
            .collect();
        extensions.push(MosaicGrid { rows, cols, tiles });
    });
    Ok(extensions)
}
