//! ASCII rendering of mosaic boards.
//!
//! One glyph per tile, tiles in a row separated by nothing, rows separated
//! by newlines, with a trailing newline. The glyph table lives with the
//! tile definitions (see [`crate::tiles`]): blank ` `, arcs `7` `r` `L`
//! `J`, lines `-` `|`, double arcs `S` `Z`, crossings `+` `x`. Parsing is
//! the exact inverse of rendering.

use crate::error::{Error, Result};
use crate::grid::MosaicGrid;
use crate::tiles::{TileId, TileSet};

/// Render a board as one glyph per tile.
pub fn render_ascii(grid: &MosaicGrid) -> String {
    let set = TileSet::standard();
    let mut out = String::with_capacity((grid.cols() + 1) * grid.rows());
    for r in 0..grid.rows() {
        for c in 0..grid.cols() {
            out.push(set.glyph(grid.get(r, c)));
        }
        out.push('\n');
    }
    out
}

/// Parse the output of [`render_ascii`] back into a board.
pub fn parse_ascii(text: &str) -> Result<MosaicGrid> {
    let set = TileSet::standard();
    let lines: Vec<&str> = text.lines().collect();
    if lines.is_empty() {
        return Err(Error::AsciiParse {
            reason: "empty text".into(),
        });
    }
    let cols = lines[0].chars().count();
    if cols == 0 {
        return Err(Error::AsciiParse {
            reason: "empty first row".into(),
        });
    }
    let mut tiles: Vec<TileId> = Vec::with_capacity(lines.len() * cols);
    for (row, line) in lines.iter().enumerate() {
        let mut width = 0;
        for glyph in line.chars() {
            let tile = set
                .tiles()
                .iter()
                .find(|t| t.glyph == glyph)
                .map(|t| t.id)
                .ok_or_else(|| Error::AsciiParse {
                    reason: format!("unknown glyph '{glyph}' in row {row}"),
                })?;
            tiles.push(tile);
            width += 1;
        }
        if width != cols {
            return Err(Error::AsciiParse {
                reason: format!("row {row} has {width} tiles, expected {cols}"),
            });
        }
    }
    MosaicGrid::new(lines.len(), cols, tiles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{enumerate_constrained, BoundarySpec};
    use crate::tiles::TileId::*;

    #[test]
    fn blank_tile_renders_blank() {
        assert_eq!(render_ascii(&MosaicGrid::filled(1, 1, T0)), " \n");
    }

    #[test]
    fn unknot_renders_as_a_closed_loop() {
        // The two 2x2 knot mosaics are the blank board and the unknot.
        let grids = enumerate_constrained(2, 2, &BoundarySpec::all_x(2, 2)).unwrap();
        let unknot = grids
            .iter()
            .find(|g| **g != MosaicGrid::filled(2, 2, T0))
            .unwrap();
        assert_eq!(render_ascii(unknot), "r7\nLJ\n");
    }

    #[test]
    fn parse_inverts_render() {
        let g = MosaicGrid::new(2, 3, vec![T2, T5, T1, T3, T9, T4]).unwrap();
        assert_eq!(parse_ascii(&render_ascii(&g)).unwrap(), g);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(parse_ascii("").is_err());
        assert!(parse_ascii("r7\nL").is_err());
        assert!(parse_ascii("ab\ncd").is_err());
    }
}
