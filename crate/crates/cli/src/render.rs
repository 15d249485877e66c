//! ASCII Young diagrams, English convention: one character per box, rows
//! growing south.
//!
//! * plain: `#` for every box;
//! * `brim`: b-rim boxes carry their position `1..=b` within their piece;
//! * `rect`: b-rim boxes of the k-th piece carry the k-th letter, and the
//!   rest of that piece's bounding rectangle is `%` (which may stick out of
//!   the diagram);
//! * `ladders`: every box carries a letter naming its ladder.

use std::collections::BTreeMap;

use mullreg_core::mullineux::RimDecomposition;
use mullreg_core::{ladder, AbParams, BoxCoord, Partition};

pub const EMPTY: char = '.';
pub const PLAIN: char = '#';
pub const RECT_FILL: char = '%';

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Overlay {
    Brim,
    Rect,
    Ladders,
}

/// Symbol for the `k`-th item (0-based) of a labelled family.
fn letter(k: usize) -> char {
    const ALPHABET: &[u8] = b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
    ALPHABET.get(k).map_or('*', |&c| c as char)
}

fn digit(k: usize) -> char {
    char::from_digit(k as u32, 36).unwrap_or('*')
}

struct Canvas {
    cells: Vec<Vec<char>>,
}

impl Canvas {
    fn for_partition(lambda: &Partition) -> Self {
        let cells = lambda.parts().iter().map(|&n| vec![PLAIN; n]).collect();
        Canvas { cells }
    }

    fn set(&mut self, cell: BoxCoord, c: char) {
        let (r, col) = (cell.row - 1, cell.col - 1);
        if self.cells.len() <= r {
            self.cells.resize(r + 1, Vec::new());
        }
        let row = &mut self.cells[r];
        if row.len() <= col {
            row.resize(col + 1, EMPTY);
        }
        row[col] = c;
    }

    fn finish(self) -> String {
        if self.cells.is_empty() {
            return String::from("(empty)\n");
        }
        let mut out = String::new();
        for row in self.cells {
            out.extend(row);
            out.push('\n');
        }
        out
    }
}

pub fn plain(lambda: &Partition) -> String {
    Canvas::for_partition(lambda).finish()
}

pub fn brim(lambda: &Partition, d: &RimDecomposition) -> String {
    let mut canvas = Canvas::for_partition(lambda);
    for piece in d.pieces() {
        for (k, &cell) in piece.iter().enumerate() {
            canvas.set(cell, digit(k + 1));
        }
    }
    canvas.finish()
}

pub fn rect(lambda: &Partition, d: &RimDecomposition) -> String {
    let mut canvas = Canvas::for_partition(lambda);
    for (k, (piece, r)) in d.pieces().zip(&d.rectangles).enumerate() {
        for row in r.north_east.row..=r.south_west.row {
            for col in r.south_west.col..=r.north_east.col {
                canvas.set(BoxCoord::new(row, col), RECT_FILL);
            }
        }
        for &cell in piece {
            canvas.set(cell, letter(k));
        }
    }
    canvas.finish()
}

pub fn ladders(lambda: &Partition, params: AbParams) -> String {
    let mut canvas = Canvas::for_partition(lambda);
    let mut names: BTreeMap<BoxCoord, usize> = BTreeMap::new();
    for cell in lambda.boxes() {
        let foot = *ladder(cell, params, false).last().expect("ladder contains its anchor");
        let next = names.len();
        let k = *names.entry(foot).or_insert(next);
        canvas.set(cell, letter(k));
    }
    canvas.finish()
}

/// One line per rectangle: index, dimensions and corners.
pub fn rect_legend(d: &RimDecomposition) -> String {
    d.rectangles
        .iter()
        .enumerate()
        .map(|(k, r)| {
            format!(
                "{}: {}x{} rows {}-{} cols {}-{}\n",
                letter(k),
                r.height,
                r.width,
                r.north_east.row,
                r.south_west.row,
                r.south_west.col,
                r.north_east.col
            )
        })
        .collect()
}
