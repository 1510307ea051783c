//! Synthetic ground plans used as stand-ins for surveyed footprints.

use crate::error::{Error, Result};
use crate::lattice::Layer;

/// An `n`-by-`n` fully occupied square.
pub fn solid_square(n: usize) -> Result<Layer> {
    Layer::filled(n, n)
}

/// Nested centered squares with alternating fill: a cell is occupied when an
/// odd number of the squares cover it. `widths` must be strictly decreasing
/// and share the parity of the first (outermost) width, which sets the frame.
///
/// `stepped_squares(&[31, 23, 15])` is a 4-cell-wide outer terrace, an empty
/// 4-cell gallery, and a solid 15x15 core.
pub fn stepped_squares(widths: &[usize]) -> Result<Layer> {
    let frame = *widths
        .first()
        .ok_or_else(|| Error::invalid("stepped plan", "no widths"))?;
    if frame == 0 {
        return Err(Error::invalid("stepped plan", "widths must be positive"));
    }
    for w in widths.windows(2) {
        if w[1] >= w[0] || w[1] == 0 || (w[0] - w[1]) % 2 != 0 {
            return Err(Error::invalid(
                "stepped plan",
                format!("widths {} then {} are not nested and centered", w[0], w[1]),
            ));
        }
    }
    Layer::from_fn(frame, frame, |r, c| {
        let depth = widths
            .iter()
            .filter(|&&w| {
                let off = (frame - w) / 2;
                (off..off + w).contains(&r) && (off..off + w).contains(&c)
            })
            .count();
        depth % 2 == 1
    })
}

/// An `n`-by-`n` square whose four corners are cut back in `steps`
/// staircase steps of `step` cells each, giving a stepped Greek cross.
pub fn stepped_cross(n: usize, steps: usize, step: usize) -> Result<Layer> {
    if step == 0 || 2 * steps * step >= n {
        return Err(Error::invalid(
            "stepped cross",
            format!("{steps} steps of {step} do not fit in {n}"),
        ));
    }
    Layer::from_fn(n, n, |r, c| {
        let dr = r.min(n - 1 - r) / step;
        let dc = c.min(n - 1 - c) / step;
        dr + dc >= steps
    })
}
