use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::growth::Tower;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProfileKind {
    /// Width of the tight bounding box of occupied cells.
    Extent,
    /// Occupied cell count.
    Population,
}

impl fmt::Display for ProfileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProfileKind::Extent => "extent",
            ProfileKind::Population => "population",
        })
    }
}

impl FromStr for ProfileKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "extent" => Ok(ProfileKind::Extent),
            "population" => Ok(ProfileKind::Population),
            other => Err(format!("unknown profile kind {other:?} (expected extent|population)")),
        }
    }
}

/// One value per tower layer, ground first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    pub kind: ProfileKind,
    pub values: Vec<u64>,
}

/// A maximal run of equal profile values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub value: u64,
    pub run_length: usize,
}

pub fn elevation_profile(tower: &Tower, kind: ProfileKind) -> Profile {
    let values = tower
        .layers()
        .iter()
        .map(|layer| match kind {
            ProfileKind::Extent => layer.bounds().map_or(0, |b| b.width() as u64),
            ProfileKind::Population => layer.population() as u64,
        })
        .collect();
    Profile { kind, values }
}

/// Run-length encodes `profile`, folding runs shorter than `min_plateau`
/// into the run before them. The first run is always kept.
pub fn segment_profile(profile: &Profile, min_plateau: usize) -> Result<Vec<Segment>> {
    if min_plateau == 0 {
        return Err(Error::invalid("min_plateau", "must be at least 1"));
    }
    if profile.values.is_empty() {
        return Err(Error::invalid("profile", "no values to segment"));
    }

    let mut raw: Vec<Segment> = Vec::new();
    for &v in &profile.values {
        match raw.last_mut() {
            Some(seg) if seg.value == v => seg.run_length += 1,
            _ => raw.push(Segment {
                value: v,
                run_length: 1,
            }),
        }
    }

    let mut merged: Vec<Segment> = Vec::with_capacity(raw.len());
    for seg in raw {
        match merged.last_mut() {
            None => merged.push(seg),
            Some(prev) if seg.run_length < min_plateau || prev.value == seg.value => {
                prev.run_length += seg.run_length
            }
            Some(_) => merged.push(seg),
        }
    }
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::{grow_tower, GrowthConfig};
    use crate::lattice::{Dihedral, Layer};
    use crate::rule::decode_rule;

    fn segs(values: &[u64], min: usize) -> Vec<(u64, usize)> {
        let p = Profile {
            kind: ProfileKind::Extent,
            values: values.to_vec(),
        };
        segment_profile(&p, min)
            .unwrap()
            .into_iter()
            .map(|s| (s.value, s.run_length))
            .collect()
    }

    #[test]
    fn pyramid_profiles() {
        let t = grow_tower(
            &Layer::filled(9, 9).unwrap(),
            decode_rule(512).unwrap(),
            &GrowthConfig::default(),
        )
        .unwrap();
        assert_eq!(elevation_profile(&t, ProfileKind::Extent).values, vec![9, 7, 5, 3, 1]);
        assert_eq!(
            elevation_profile(&t, ProfileKind::Population).values,
            vec![81, 49, 25, 9, 1]
        );
    }

    #[test]
    fn segmentation_examples() {
        assert_eq!(segs(&[9, 9, 9, 5, 5, 1], 1), vec![(9, 3), (5, 2), (1, 1)]);
        assert_eq!(segs(&[7, 7, 7, 7], 1), vec![(7, 4)]);
        assert_eq!(segs(&[9, 9, 8, 9, 9], 2), vec![(9, 5)]);
        // A short first run survives and absorbs what follows it.
        assert_eq!(segs(&[3, 5, 5, 5], 2), vec![(3, 1), (5, 3)]);
        assert_eq!(segs(&[3, 2, 5, 5, 5], 2), vec![(3, 2), (5, 3)]);
    }

    #[test]
    fn segmentation_errors() {
        let empty = Profile {
            kind: ProfileKind::Extent,
            values: vec![],
        };
        assert!(segment_profile(&empty, 1).is_err());
        let p = Profile {
            kind: ProfileKind::Extent,
            values: vec![1],
        };
        assert!(segment_profile(&p, 0).is_err());
    }

    #[test]
    fn extent_invariant_under_square_symmetries() {
        let plan = Layer::from_fn(11, 11, |r, c| (r * 3 + c * 5) % 7 < 4).unwrap();
        let rule = decode_rule(816).unwrap();
        let base = elevation_profile(
            &grow_tower(&plan, rule, &GrowthConfig::default()).unwrap(),
            ProfileKind::Extent,
        );
        for t in [Dihedral::Rot180, Dihedral::FlipHorizontal, Dihedral::FlipVertical] {
            let p2 = plan.transform(t).unwrap();
            let prof = elevation_profile(
                &grow_tower(&p2, rule, &GrowthConfig::default()).unwrap(),
                ProfileKind::Extent,
            );
            assert_eq!(prof, base, "{t:?}");
        }
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("extent".parse::<ProfileKind>().unwrap(), ProfileKind::Extent);
        assert_eq!("population".parse::<ProfileKind>().unwrap(), ProfileKind::Population);
        assert!("height".parse::<ProfileKind>().is_err());
    }
}
