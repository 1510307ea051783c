//! Wavefront OBJ export: one unit cube per occupied voxel, y up.
//!
//! Cube corners are emitted in this order (offsets from the voxel's low
//! corner `(x, y, z) = (col, layer, row)`):
//!
//! ```text
//! 1 (0,0,0)  2 (1,0,0)  3 (1,1,0)  4 (0,1,0)
//! 5 (0,0,1)  6 (1,0,1)  7 (1,1,1)  8 (0,1,1)
//! ```
//!
//! Faces wind counter-clockwise seen from outside. Face indices are the
//! corner numbers above shifted by `8 * n` for the n-th cube. Vertices are
//! not shared between cubes.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::growth::Tower;

const CORNERS: [[u64; 3]; 8] = [
    [0, 0, 0],
    [1, 0, 0],
    [1, 1, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 0, 1],
    [1, 1, 1],
    [0, 1, 1],
];

const FACES: [[usize; 4]; 6] = [
    [1, 4, 3, 2], // z-
    [5, 6, 7, 8], // z+
    [1, 2, 6, 5], // y-
    [4, 8, 7, 3], // y+
    [1, 5, 8, 4], // x-
    [2, 3, 7, 6], // x+
];

pub fn export_obj(tower: &Tower) -> Result<String> {
    let population = tower.population();
    if population == 0 {
        return Err(Error::invalid("tower", "no occupied voxels to export"));
    }
    let mut out = String::with_capacity(population * 160);
    for (n, (k, r, c)) in tower.voxels().enumerate() {
        let (x, y, z) = (c as u64, k as u64, r as u64);
        for [dx, dy, dz] in CORNERS {
            writeln!(out, "v {} {} {}", x + dx, y + dy, z + dz).expect("write to string");
        }
        let base = 8 * n;
        for [a, b, c, d] in FACES {
            writeln!(out, "f {} {} {} {}", base + a, base + b, base + c, base + d)
                .expect("write to string");
        }
    }
    Ok(out)
}
