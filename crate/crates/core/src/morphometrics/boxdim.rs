use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::growth::Tower;

/// Box-counting estimate from a log-log least-squares fit.
#[derive(Clone, Debug, PartialEq)]
pub struct DimensionEstimate {
    pub slope: f64,
    pub r_squared: f64,
    /// `(box_size, occupied_box_count)`, box sizes ascending.
    pub samples: Vec<(u64, u64)>,
}

/// Largest exponent allowed; keeps box sizes well inside `u64`.
const MAX_EXPONENT: u32 = 40;

/// Counts occupied cubes of side 1, 2, 4, ..., `2^max_exponent`, anchored at
/// the low corner of the tower's occupied bounding box, and fits
/// `ln(count)` against `ln(1/size)`.
pub fn box_counting_dimension(tower: &Tower, max_exponent: u32) -> Result<DimensionEstimate> {
    if max_exponent < 2 {
        return Err(Error::invalid(
            "box sizes",
            format!("max_exponent {max_exponent} gives fewer than 3 box sizes"),
        ));
    }
    if max_exponent > MAX_EXPONENT {
        return Err(Error::OutOfRange {
            what: "max_exponent",
            value: max_exponent as i64,
            min: 2,
            max: MAX_EXPONENT as i64,
        });
    }
    let voxels: Vec<[u64; 3]> = tower
        .voxels()
        .map(|(k, r, c)| [k as u64, r as u64, c as u64])
        .collect();
    if voxels.is_empty() {
        return Err(Error::invalid("tower", "no occupied voxels to count"));
    }
    let mut origin = voxels[0];
    for v in &voxels {
        for axis in 0..3 {
            origin[axis] = origin[axis].min(v[axis]);
        }
    }

    let mut samples = Vec::with_capacity(max_exponent as usize + 1);
    for e in 0..=max_exponent {
        let size = 1u64 << e;
        let boxes: HashSet<[u64; 3]> = voxels
            .iter()
            .map(|v| std::array::from_fn(|a| (v[a] - origin[a]) >> e))
            .collect();
        samples.push((size, boxes.len() as u64));
    }

    let points: Vec<(f64, f64)> = samples
        .iter()
        .map(|&(size, count)| (-(size as f64).ln(), (count as f64).ln()))
        .collect();
    let (slope, r_squared) = least_squares(&points);
    Ok(DimensionEstimate {
        slope,
        r_squared,
        samples,
    })
}

/// Slope and coefficient of determination of the best-fit line. A flat
/// response is a perfect fit.
fn least_squares(points: &[(f64, f64)]) -> (f64, f64) {
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for &(x, y) in points {
        let (dx, dy) = (x - mean_x, y - mean_y);
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    let slope = sxy / sxx;
    let r_squared = if syy == 0.0 {
        1.0
    } else {
        ((sxy * sxy) / (sxx * syy)).clamp(0.0, 1.0)
    };
    (slope, r_squared)
}

/// Smallest exponent whose box covers the tower's longest occupied extent,
/// but never below 2.
pub fn default_max_exponent(tower: &Tower) -> u32 {
    let mut lo = [usize::MAX; 3];
    let mut hi = [0usize; 3];
    for (k, r, c) in tower.voxels() {
        for (a, v) in [k, r, c].into_iter().enumerate() {
            lo[a] = lo[a].min(v);
            hi[a] = hi[a].max(v);
        }
    }
    let extent = (0..3)
        .filter(|&a| lo[a] != usize::MAX)
        .map(|a| hi[a] - lo[a] + 1)
        .max()
        .unwrap_or(1);
    extent.next_power_of_two().trailing_zeros().max(2)
}
