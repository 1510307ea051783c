//! Brute-force reference implementations. They share no code paths with the
//! library beyond cell access on `Layer`.

#![allow(dead_code)]

use rand::Rng;
use voxtower::{Layer, Termination, Tower};

pub fn naive_total(layer: &Layer, row: usize, col: usize) -> usize {
    let mut total = 0;
    for dr in -1i64..=1 {
        for dc in -1i64..=1 {
            let (r, c) = (row as i64 + dr, col as i64 + dc);
            if r >= 0 && c >= 0 && (r as usize) < layer.height() && (c as usize) < layer.width() {
                total += layer.get(r as usize, c as usize) as usize;
            }
        }
    }
    total
}

pub fn naive_step(layer: &Layer, code: u32) -> Layer {
    let mut out = Layer::empty(layer.width(), layer.height()).unwrap();
    for row in 0..layer.height() {
        for col in 0..layer.width() {
            let s = naive_total(layer, row, col);
            out.set(row, col, (code >> s) & 1 == 1);
        }
    }
    out
}

/// Layers and termination tag from the same stopping rules as the library,
/// with a linear scan for repeats.
pub fn naive_grow(plan: &Layer, code: u32, max_layers: usize) -> (Vec<Layer>, Termination) {
    let mut layers = vec![plan.clone()];
    while layers.len() < max_layers {
        let next = naive_step(layers.last().unwrap(), code);
        if next.population() == 0 {
            return (layers, Termination::Empty);
        }
        if let Some(i) = layers.iter().position(|l| *l == next) {
            return (
                layers.clone(),
                Termination::Cycle {
                    period: layers.len() - i,
                },
            );
        }
        layers.push(next);
    }
    (layers, Termination::HeightLimit)
}

pub fn naive_iou(a: &[Layer], b: &[Layer]) -> f64 {
    let (mut inter, mut union) = (0u64, 0u64);
    for k in 0..a.len().max(b.len()) {
        let la = a.get(k);
        let lb = b.get(k);
        let (w, h) = la.or(lb).unwrap().dims();
        for r in 0..h {
            for c in 0..w {
                let x = la.is_some_and(|l| l.get(r, c));
                let y = lb.is_some_and(|l| l.get(r, c));
                inter += (x && y) as u64;
                union += (x || y) as u64;
            }
        }
    }
    if union == 0 {
        1.0
    } else {
        inter as f64 / union as f64
    }
}

/// Occupied box counts by visiting every box of the grid anchored at the
/// occupied bounding box's low corner.
pub fn naive_box_counts(tower: &Tower, max_exponent: u32) -> Vec<(u64, u64)> {
    let layers = tower.layers();
    let (w, h, n) = (tower.width(), tower.depth(), tower.height());
    let occ = |k: usize, r: usize, c: usize| layers[k].get(r, c);
    let mut lo = [usize::MAX; 3];
    for k in 0..n {
        for r in 0..h {
            for c in 0..w {
                if occ(k, r, c) {
                    lo = [lo[0].min(k), lo[1].min(r), lo[2].min(c)];
                }
            }
        }
    }
    (0..=max_exponent)
        .map(|e| {
            let s = 1usize << e;
            let mut count = 0;
            for k0 in (lo[0]..n).step_by(s) {
                for r0 in (lo[1]..h).step_by(s) {
                    for c0 in (lo[2]..w).step_by(s) {
                        let hit = (k0..(k0 + s).min(n)).any(|k| {
                            (r0..(r0 + s).min(h))
                                .any(|r| (c0..(c0 + s).min(w)).any(|c| occ(k, r, c)))
                        });
                        count += hit as u64;
                    }
                }
            }
            (s as u64, count)
        })
        .collect()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Checks a candidate tuple by testing every interval endpoint as the scale.
pub fn tuple_fits(xs: &[u64], terms: &[u64], tol: f64) -> bool {
    let mut scales = Vec::new();
    for (&x, &p) in xs.iter().zip(terms) {
        scales.push(x as f64 * (1.0 - tol) / p as f64);
        scales.push(x as f64 * (1.0 + tol) / p as f64);
    }
    scales.iter().any(|&s| {
        xs.iter()
            .zip(terms)
            .all(|(&x, &p)| (x as f64 - s * p as f64).abs() <= tol * x as f64 * (1.0 + 1e-12))
    })
}

fn advance(terms: &mut [u64], max: u64) -> bool {
    for i in (0..terms.len()).rev() {
        if terms[i] < max {
            terms[i] += 1;
            for t in &mut terms[i + 1..] {
                *t = 1;
            }
            return true;
        }
    }
    false
}

/// Enumerates every tuple in order of largest term, then lexicographically.
pub fn brute_force_ratio(xs: &[u64], tol: f64) -> Option<Vec<u64>> {
    let bound = *xs.iter().max().unwrap();
    for max in 1..=bound {
        let mut terms = vec![1u64; xs.len()];
        loop {
            if terms.contains(&max)
                && terms.iter().copied().fold(0, gcd) == 1
                && tuple_fits(xs, &terms, tol)
            {
                return Some(terms);
            }
            if !advance(&mut terms, max) {
                break;
            }
        }
    }
    None
}

pub fn random_layer(rng: &mut impl Rng, w: usize, h: usize, density: f64) -> Layer {
    Layer::from_fn(w, h, |_, _| rng.gen_bool(density)).unwrap()
}

/// Random tower whose upper layers are all non-empty.
pub fn random_tower(rng: &mut impl Rng) -> Tower {
    let (w, h) = (rng.gen_range(1..8), rng.gen_range(1..8));
    let n = rng.gen_range(1..6);
    let layers = (0..n)
        .map(|_| loop {
            let density = rng.gen_range(0.1..0.9);
            let l = random_layer(rng, w, h, density);
            if l.population() > 0 {
                break l;
            }
        })
        .collect();
    let term = match rng.gen_range(0..3) {
        0 => Termination::Empty,
        1 => Termination::HeightLimit,
        _ => Termination::Cycle {
            period: rng.gen_range(1..5),
        },
    };
    let code = rng.gen_bool(0.5).then(|| rng.gen_range(0..1024));
    Tower::new(layers, code, term).unwrap()
}

/// Symmetrizes a random square under the full dihedral group.
pub fn dihedral_symmetric(rng: &mut impl Rng, n: usize) -> Layer {
    let base = random_layer(rng, n, n, 0.4);
    let mut out = base.clone();
    for t in voxtower::Dihedral::ALL {
        let img = base.transform(t).unwrap();
        for r in 0..n {
            for c in 0..n {
                if img.get(r, c) {
                    out.set(r, c, true);
                }
            }
        }
    }
    out
}
