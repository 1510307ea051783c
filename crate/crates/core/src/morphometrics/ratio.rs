use std::fmt;

use crate::error::{Error, Result};

/// Smallest coprime integer proportions matching a list of measurements.
#[derive(Clone, Debug, PartialEq)]
pub struct RatioSignature {
    pub terms: Vec<u64>,
    pub tolerance_used: f64,
}

/// Colon-separated terms, e.g. `4:6:9`.
impl fmt::Display for RatioSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(":"))
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Finds the coprime tuple `p` with the smallest largest term such that every
/// `segments[i]` lies within `tolerance * segments[i]` of `s * p[i]` for one
/// shared scale `s > 0`. Ties on the largest term go to the
/// lexicographically smallest tuple. Terms never exceed `max(segments)`.
///
/// Returns `Ok(None)` when no tuple fits.
pub fn ratio_signature(segments: &[u64], tolerance: f64) -> Result<Option<RatioSignature>> {
    if segments.is_empty() {
        return Err(Error::invalid("segments", "no measurements"));
    }
    if segments.contains(&0) {
        return Err(Error::invalid("segments", "measurements must be positive"));
    }
    if !(0.0..0.5).contains(&tolerance) {
        return Err(Error::invalid(
            "tolerance",
            format!("{tolerance} outside [0, 0.5)"),
        ));
    }

    if tolerance == 0.0 {
        let g = segments.iter().copied().fold(0, gcd);
        return Ok(Some(RatioSignature {
            terms: segments.iter().map(|&x| x / g).collect(),
            tolerance_used: 0.0,
        }));
    }

    let bound = *segments.iter().max().expect("non-empty");
    let mut search = Search {
        segments,
        tolerance,
        max_term: 0,
        terms: Vec::with_capacity(segments.len()),
    };
    for max_term in 1..=bound {
        search.max_term = max_term;
        if search.descend(0.0, f64::INFINITY, false) {
            return Ok(Some(RatioSignature {
                terms: search.terms,
                tolerance_used: tolerance,
            }));
        }
    }
    Ok(None)
}

struct Search<'a> {
    segments: &'a [u64],
    tolerance: f64,
    max_term: u64,
    terms: Vec<u64>,
}

// Relative slack for float comparisons of scale bounds.
const EPS: f64 = 1e-12;

impl Search<'_> {
    /// Depth-first over terms in ascending order; `[lo, hi]` is the set of
    /// scales consistent with the terms chosen so far.
    fn descend(&mut self, lo: f64, hi: f64, hit_max: bool) -> bool {
        let i = self.terms.len();
        if i == self.segments.len() {
            return hit_max && self.terms.iter().copied().fold(0, gcd) == 1;
        }
        let x = self.segments[i] as f64;
        let (x_lo, x_hi) = (x * (1.0 - self.tolerance), x * (1.0 + self.tolerance));

        let first = if hi.is_finite() {
            ((x_lo / hi) * (1.0 - EPS)).ceil().max(1.0) as u64
        } else {
            1
        };
        let last = if lo > 0.0 {
            (((x_hi / lo) * (1.0 + EPS)).floor() as u64).min(self.max_term)
        } else {
            self.max_term
        };

        for p in first..=last {
            let pf = p as f64;
            let new_lo = lo.max(x_lo / pf);
            let new_hi = hi.min(x_hi / pf);
            if new_lo > new_hi * (1.0 + EPS) {
                continue;
            }
            self.terms.push(p);
            if self.descend(new_lo, new_hi, hit_max || p == self.max_term) {
                return true;
            }
            self.terms.pop();
        }
        false
    }
}
