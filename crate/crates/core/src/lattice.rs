//! Binary layers and the synchronous totalistic update.
//!
//! The grid frame is fixed; cells beyond the edge are permanently empty.

use std::fmt;

use crate::error::{Error, Result};
use crate::rule::TotalisticRule;

/// One horizontal slice of a tower: a rectangular grid of occupied/empty cells.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Layer {
    width: usize,
    height: usize,
    cells: Vec<bool>,
}

/// Inclusive bounding rectangle of occupied cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub min_row: usize,
    pub max_row: usize,
    pub min_col: usize,
    pub max_col: usize,
}

impl Bounds {
    pub fn width(&self) -> usize {
        self.max_col - self.min_col + 1
    }

    pub fn height(&self) -> usize {
        self.max_row - self.min_row + 1
    }
}

/// The eight symmetries of the square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dihedral {
    Identity,
    Rot90,
    Rot180,
    Rot270,
    FlipHorizontal,
    FlipVertical,
    Transpose,
    AntiTranspose,
}

impl Dihedral {
    pub const ALL: [Dihedral; 8] = [
        Dihedral::Identity,
        Dihedral::Rot90,
        Dihedral::Rot180,
        Dihedral::Rot270,
        Dihedral::FlipHorizontal,
        Dihedral::FlipVertical,
        Dihedral::Transpose,
        Dihedral::AntiTranspose,
    ];

    /// Source cell for output `(row, col)` in an `n`-by-`n` grid.
    fn source(self, n: usize, row: usize, col: usize) -> (usize, usize) {
        let last = n - 1;
        match self {
            Dihedral::Identity => (row, col),
            Dihedral::Rot90 => (last - col, row),
            Dihedral::Rot180 => (last - row, last - col),
            Dihedral::Rot270 => (col, last - row),
            Dihedral::FlipHorizontal => (row, last - col),
            Dihedral::FlipVertical => (last - row, col),
            Dihedral::Transpose => (col, row),
            Dihedral::AntiTranspose => (last - col, last - row),
        }
    }
}

impl Layer {
    /// All-empty layer.
    pub fn empty(width: usize, height: usize) -> Result<Self> {
        Self::check_dims(width, height)?;
        Ok(Self {
            width,
            height,
            cells: vec![false; width * height],
        })
    }

    /// All-occupied layer.
    pub fn filled(width: usize, height: usize) -> Result<Self> {
        Self::check_dims(width, height)?;
        Ok(Self {
            width,
            height,
            cells: vec![true; width * height],
        })
    }

    /// Builds a layer from row-major cells.
    pub fn from_cells(width: usize, height: usize, cells: Vec<bool>) -> Result<Self> {
        Self::check_dims(width, height)?;
        if cells.len() != width * height {
            return Err(Error::invalid(
                "layer",
                format!(
                    "{} cells supplied for a {width}x{height} grid",
                    cells.len()
                ),
            ));
        }
        Ok(Self {
            width,
            height,
            cells,
        })
    }

    /// Builds a layer by evaluating `f(row, col)` for every cell.
    pub fn from_fn(
        width: usize,
        height: usize,
        mut f: impl FnMut(usize, usize) -> bool,
    ) -> Result<Self> {
        Self::check_dims(width, height)?;
        let mut cells = Vec::with_capacity(width * height);
        for row in 0..height {
            for col in 0..width {
                cells.push(f(row, col));
            }
        }
        Ok(Self {
            width,
            height,
            cells,
        })
    }

    fn check_dims(width: usize, height: usize) -> Result<()> {
        if width == 0 || height == 0 {
            return Err(Error::invalid(
                "layer",
                format!("dimensions must be at least 1x1, got {width}x{height}"),
            ));
        }
        width
            .checked_mul(height)
            .ok_or_else(|| Error::invalid("layer", "dimensions overflow"))?;
        Ok(())
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    /// Panics if `(row, col)` lies outside the frame.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.height && col < self.width, "cell out of frame");
        self.cells[row * self.width + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, occupied: bool) {
        assert!(row < self.height && col < self.width, "cell out of frame");
        self.cells[row * self.width + col] = occupied;
    }

    pub fn population(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.cells.iter().any(|&c| c)
    }

    /// Occupied cells as `(row, col)`, row-major.
    pub fn occupied(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let width = self.width;
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, &c)| c)
            .map(move |(i, _)| (i / width, i % width))
    }

    /// Tight bounding rectangle of occupied cells, `None` when empty.
    pub fn bounds(&self) -> Option<Bounds> {
        let mut it = self.occupied();
        let (r0, c0) = it.next()?;
        let mut b = Bounds {
            min_row: r0,
            max_row: r0,
            min_col: c0,
            max_col: c0,
        };
        for (r, c) in it {
            b.min_row = b.min_row.min(r);
            b.max_row = b.max_row.max(r);
            b.min_col = b.min_col.min(c);
            b.max_col = b.max_col.max(c);
        }
        Some(b)
    }

    /// Sum of the 3x3 block centered at `(row, col)`, center counted once.
    pub fn neighborhood_total(&self, row: usize, col: usize) -> Result<u32> {
        if row >= self.height || col >= self.width {
            return Err(Error::invalid(
                "cell",
                format!(
                    "({row}, {col}) outside {}x{} frame",
                    self.width, self.height
                ),
            ));
        }
        let mut total = 0;
        for r in row.saturating_sub(1)..=(row + 1).min(self.height - 1) {
            for c in col.saturating_sub(1)..=(col + 1).min(self.width - 1) {
                total += self.cells[r * self.width + c] as u32;
            }
        }
        Ok(total)
    }

    /// One synchronous update of every cell under `rule`.
    pub fn step(&self, rule: TotalisticRule) -> Layer {
        let (w, h) = (self.width, self.height);
        let table: [bool; 10] = std::array::from_fn(|n| rule.fires(n));

        // Horizontal 3-sums per row, then add three rows of them.
        let mut row_sums = vec![0u8; w * h];
        for r in 0..h {
            let src = &self.cells[r * w..(r + 1) * w];
            let dst = &mut row_sums[r * w..(r + 1) * w];
            for c in 0..w {
                let left = if c > 0 { src[c - 1] as u8 } else { 0 };
                let right = if c + 1 < w { src[c + 1] as u8 } else { 0 };
                dst[c] = left + src[c] as u8 + right;
            }
        }

        let mut cells = vec![false; w * h];
        for r in 0..h {
            let mid = &row_sums[r * w..(r + 1) * w];
            let above = (r > 0).then(|| &row_sums[(r - 1) * w..r * w]);
            let below = (r + 1 < h).then(|| &row_sums[(r + 1) * w..(r + 2) * w]);
            let out = &mut cells[r * w..(r + 1) * w];
            for c in 0..w {
                let mut total = mid[c];
                if let Some(a) = above {
                    total += a[c];
                }
                if let Some(b) = below {
                    total += b[c];
                }
                out[c] = table[total as usize];
            }
        }
        Layer {
            width: w,
            height: h,
            cells,
        }
    }

    /// Cellwise AND with `mask`.
    pub fn apply_mask(&self, mask: &Layer) -> Result<Layer> {
        self.ensure_same_frame(mask)?;
        Ok(Layer {
            width: self.width,
            height: self.height,
            cells: self
                .cells
                .iter()
                .zip(&mask.cells)
                .map(|(&a, &b)| a && b)
                .collect(),
        })
    }

    pub(crate) fn ensure_same_frame(&self, other: &Layer) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(Error::FrameMismatch {
                left_width: self.width,
                left_height: self.height,
                right_width: other.width,
                right_height: other.height,
            });
        }
        Ok(())
    }

    /// Applies a square symmetry. Fails on non-square layers.
    pub fn transform(&self, t: Dihedral) -> Result<Layer> {
        if self.width != self.height {
            return Err(Error::invalid(
                "layer",
                format!(
                    "symmetry transforms need a square frame, got {}x{}",
                    self.width, self.height
                ),
            ));
        }
        let n = self.width;
        Layer::from_fn(n, n, |r, c| {
            let (sr, sc) = t.source(n, r, c);
            self.cells[sr * n + sc]
        })
    }

    /// Symmetries of the square that leave this layer unchanged.
    pub fn symmetry_group(&self) -> Vec<Dihedral> {
        Dihedral::ALL
            .into_iter()
            .filter(|&t| self.transform(t).is_ok_and(|l| &l == self))
            .collect()
    }

    /// `#`/`.` rows joined by newlines, no trailing newline.
    pub fn to_ascii(&self) -> String {
        let mut s = String::with_capacity((self.width + 1) * self.height);
        for r in 0..self.height {
            if r > 0 {
                s.push('\n');
            }
            for c in 0..self.width {
                s.push(if self.cells[r * self.width + c] { '#' } else { '.' });
            }
        }
        s
    }
}

impl fmt::Debug for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Layer {}x{}", self.width, self.height)?;
        f.write_str(&self.to_ascii())
    }
}

pub fn neighborhood_total(layer: &Layer, row: usize, col: usize) -> Result<u32> {
    layer.neighborhood_total(row, col)
}

pub fn step_layer(layer: &Layer, rule: TotalisticRule) -> Layer {
    layer.step(rule)
}

pub fn apply_mask(layer: &Layer, mask: &Layer) -> Result<Layer> {
    layer.apply_mask(mask)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rule::decode_rule;

    fn rule(code: u32) -> TotalisticRule {
        decode_rule(code).unwrap()
    }

    fn square_in_frame(frame: usize, side: usize) -> Layer {
        let off = (frame - side) / 2;
        Layer::from_fn(frame, frame, |r, c| {
            (off..off + side).contains(&r) && (off..off + side).contains(&c)
        })
        .unwrap()
    }

    #[test]
    fn zero_dimensions_rejected() {
        assert!(Layer::empty(0, 3).is_err());
        assert!(Layer::filled(3, 0).is_err());
        assert!(Layer::from_cells(2, 2, vec![true; 3]).is_err());
    }

    #[test]
    fn neighborhood_totals() {
        let empty = Layer::empty(5, 5).unwrap();
        assert_eq!(empty.neighborhood_total(2, 3).unwrap(), 0);
        let full = Layer::filled(5, 5).unwrap();
        assert_eq!(full.neighborhood_total(2, 2).unwrap(), 9);
        assert_eq!(full.neighborhood_total(0, 0).unwrap(), 4);
        assert_eq!(full.neighborhood_total(0, 2).unwrap(), 6);
        assert!(full.neighborhood_total(5, 0).is_err());
        assert!(full.neighborhood_total(0, 5).is_err());
    }

    #[test]
    fn single_cell_frame() {
        let one = Layer::filled(1, 1).unwrap();
        assert_eq!(one.neighborhood_total(0, 0).unwrap(), 1);
        assert!(one.step(rule(2)).get(0, 0));
        assert!(!one.step(rule(512)).get(0, 0));
    }

    #[test]
    fn rule_512_erodes_solid_square() {
        let out = Layer::filled(9, 9).unwrap().step(rule(512));
        assert_eq!(out, square_in_frame(9, 7));
    }

    #[test]
    fn rule_0_kills_everything() {
        let l = square_in_frame(6, 4);
        assert!(l.step(rule(0)).is_empty());
    }

    #[test]
    fn rule_1023_births_everywhere() {
        let out = Layer::empty(4, 4).unwrap().step(rule(1023));
        assert_eq!(out, Layer::filled(4, 4).unwrap());
    }

    #[test]
    fn plus_pentomino_under_816() {
        let plus = Layer::from_fn(5, 5, |r, c| {
            (r == 2 && (1..=3).contains(&c)) || (c == 2 && (1..=3).contains(&r))
        })
        .unwrap();
        // Per-cell sums of the plus sign:
        //   0 1 1 1 0
        //   1 3 4 3 1
        //   1 4 5 4 1
        //   1 3 4 3 1
        //   0 1 1 1 0
        // Rule 816 fires on {4,5,8,9}, so exactly the plus cells are reborn.
        let expected = plus.clone();
        assert_eq!(plus.step(rule(816)), expected);
    }

    #[test]
    fn mask_examples() {
        let l = square_in_frame(5, 3);
        assert_eq!(l.apply_mask(&Layer::filled(5, 5).unwrap()).unwrap(), l);
        assert!(l
            .apply_mask(&Layer::empty(5, 5).unwrap())
            .unwrap()
            .is_empty());
        let solid = Layer::filled(3, 3).unwrap();
        let mut center = Layer::empty(3, 3).unwrap();
        center.set(1, 1, true);
        assert_eq!(solid.apply_mask(&center).unwrap(), center);
        assert!(matches!(
            solid.apply_mask(&Layer::filled(4, 3).unwrap()),
            Err(Error::FrameMismatch { .. })
        ));
    }

    #[test]
    fn bounds_of_centered_square() {
        let b = square_in_frame(9, 5).bounds().unwrap();
        assert_eq!((b.min_row, b.max_row, b.min_col, b.max_col), (2, 6, 2, 6));
        assert_eq!(b.width(), 5);
        assert!(Layer::empty(3, 3).unwrap().bounds().is_none());
    }

    #[test]
    fn dihedral_transforms_compose_to_identity() {
        let l = Layer::from_fn(4, 4, |r, c| (r * 7 + c * 3) % 5 == 0).unwrap();
        assert_eq!(l.transform(Dihedral::Rot90).unwrap().transform(Dihedral::Rot270).unwrap(), l);
        for t in [
            Dihedral::Rot180,
            Dihedral::FlipHorizontal,
            Dihedral::FlipVertical,
            Dihedral::Transpose,
            Dihedral::AntiTranspose,
        ] {
            assert_eq!(l.transform(t).unwrap().transform(t).unwrap(), l, "{t:?}");
        }
        assert_eq!(Layer::filled(3, 3).unwrap().symmetry_group().len(), 8);
        assert!(Layer::filled(3, 2).unwrap().transform(Dihedral::Rot90).is_err());
    }
}
