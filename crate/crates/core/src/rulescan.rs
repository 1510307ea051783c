//! Exhaustive search of the rule space for the tower that best matches a target.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::growth::{grow_tower, GrowthConfig, Termination, Tower};
use crate::lattice::Layer;
use crate::morphometrics::{elevation_profile, Profile, ProfileKind};
use crate::rule::TotalisticRule;

/// Similarity measure used to rank candidate rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Metric {
    /// Voxel intersection-over-union; higher is better.
    Iou,
    /// L1 distance between elevation profiles; lower is better.
    Profile(ProfileKind),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanResult {
    pub rule_code: u32,
    pub score: f64,
    pub termination: Termination,
    pub height: usize,
}

/// Voxel IoU of two towers in the same frame. The shorter tower is treated
/// as padded with empty layers. Two empty towers score 1.
pub fn iou_score(a: &Tower, b: &Tower) -> Result<f64> {
    a.ground().ensure_same_frame(b.ground())?;
    let (mut inter, mut union) = (0usize, 0usize);
    for k in 0..a.height().max(b.height()) {
        match (a.layers().get(k), b.layers().get(k)) {
            (Some(la), Some(lb)) => {
                for (&x, &y) in la.cells().iter().zip(lb.cells()) {
                    inter += (x && y) as usize;
                    union += (x || y) as usize;
                }
            }
            (Some(l), None) | (None, Some(l)) => union += l.population(),
            (None, None) => unreachable!(),
        }
    }
    if union == 0 {
        return Ok(1.0);
    }
    Ok(inter as f64 / union as f64)
}

/// L1 distance between two profiles of the same kind, the shorter one
/// zero-padded on top.
pub fn profile_distance(a: &Profile, b: &Profile) -> Result<f64> {
    if a.kind != b.kind {
        return Err(Error::invalid(
            "profiles",
            format!("kind mismatch: {} vs {}", a.kind, b.kind),
        ));
    }
    let n = a.values.len().max(b.values.len());
    let at = |p: &Profile, i: usize| p.values.get(i).copied().unwrap_or(0);
    let total: u64 = (0..n).map(|i| at(a, i).abs_diff(at(b, i))).sum();
    Ok(total as f64)
}

/// Grows every rule from `plan`, scores each tower against `target`, and
/// returns the best `top_n`, ties broken by ascending rule code.
pub fn scan_rules(
    plan: &Layer,
    target: &Tower,
    metric: Metric,
    config: &GrowthConfig,
    top_n: usize,
) -> Result<Vec<ScanResult>> {
    scan_rules_with_threads(plan, target, metric, config, top_n, 1)
}

/// As [`scan_rules`], evaluating rules on `threads` worker threads.
pub fn scan_rules_with_threads(
    plan: &Layer,
    target: &Tower,
    metric: Metric,
    config: &GrowthConfig,
    top_n: usize,
    threads: usize,
) -> Result<Vec<ScanResult>> {
    if top_n == 0 {
        return Err(Error::invalid("top_n", "must be at least 1"));
    }
    if threads == 0 {
        return Err(Error::invalid("threads", "must be at least 1"));
    }
    plan.ensure_same_frame(target.ground())?;
    config.validate()?;
    if plan.is_empty() {
        return Err(Error::EmptyPlan);
    }

    let target_profile = match metric {
        Metric::Profile(kind) => Some(elevation_profile(target, kind)),
        Metric::Iou => None,
    };
    let evaluate = |rule: TotalisticRule| -> Result<ScanResult> {
        let tower = grow_tower(plan, rule, config)?;
        let score = match (metric, &target_profile) {
            (Metric::Profile(kind), Some(tp)) => {
                profile_distance(&elevation_profile(&tower, kind), tp)?
            }
            _ => iou_score(&tower, target)?,
        };
        Ok(ScanResult {
            rule_code: rule.code(),
            score,
            termination: tower.termination(),
            height: tower.height(),
        })
    };

    let rules: Vec<TotalisticRule> = TotalisticRule::all().collect();
    let mut results: Vec<ScanResult> = if threads == 1 {
        rules.into_iter().map(evaluate).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::invalid("thread pool", e.to_string()))?;
        pool.install(|| rules.into_par_iter().map(evaluate).collect::<Result<_>>())?
    };

    let better = |a: &ScanResult, b: &ScanResult| -> Ordering {
        let by_score = match metric {
            Metric::Iou => b.score.total_cmp(&a.score),
            Metric::Profile(_) => a.score.total_cmp(&b.score),
        };
        by_score.then(a.rule_code.cmp(&b.rule_code))
    };
    results.sort_by(better);
    results.truncate(top_n);
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rule::decode_rule;

    fn tower(layers: Vec<Layer>) -> Tower {
        Tower::new(layers, None, Termination::HeightLimit).unwrap()
    }

    fn single_voxel(frame: usize, row: usize, col: usize) -> Layer {
        Layer::from_fn(frame, frame, |r, c| r == row && c == col).unwrap()
    }

    #[test]
    fn iou_examples() {
        let t = tower(vec![Layer::filled(3, 3).unwrap(), Layer::filled(3, 3).unwrap()]);
        assert_eq!(iou_score(&t, &t).unwrap(), 1.0);
        let a = tower(vec![single_voxel(3, 0, 0)]);
        let b = tower(vec![single_voxel(3, 2, 2)]);
        assert_eq!(iou_score(&a, &b).unwrap(), 0.0);
        let bottom = tower(vec![Layer::filled(3, 3).unwrap()]);
        assert_eq!(iou_score(&t, &bottom).unwrap(), 0.5);
        let e = tower(vec![Layer::empty(3, 3).unwrap()]);
        assert_eq!(iou_score(&e, &e).unwrap(), 1.0);
        let other = tower(vec![Layer::filled(4, 3).unwrap()]);
        assert!(matches!(iou_score(&t, &other), Err(Error::FrameMismatch { .. })));
    }

    #[test]
    fn profile_distance_examples() {
        let p = |v: &[u64]| Profile {
            kind: ProfileKind::Extent,
            values: v.to_vec(),
        };
        assert_eq!(profile_distance(&p(&[9, 7, 5]), &p(&[9, 7, 5])).unwrap(), 0.0);
        assert_eq!(profile_distance(&p(&[9, 7, 5]), &p(&[9, 7])).unwrap(), 5.0);
        assert_eq!(profile_distance(&p(&[81, 49]), &p(&[81, 25])).unwrap(), 24.0);
        let q = Profile {
            kind: ProfileKind::Population,
            values: vec![1],
        };
        assert!(profile_distance(&p(&[1]), &q).is_err());
    }

    #[test]
    fn erosion_pyramid_self_match() {
        let plan = Layer::filled(9, 9).unwrap();
        let cfg = GrowthConfig::default();
        let target = grow_tower(&plan, decode_rule(512).unwrap(), &cfg).unwrap();
        let res = scan_rules(&plan, &target, Metric::Iou, &cfg, 1024).unwrap();
        assert_eq!(res.len(), 1024);
        let perfect: Vec<u32> = res
            .iter()
            .take_while(|r| r.score == 1.0)
            .map(|r| r.rule_code)
            .collect();
        assert!(perfect.contains(&512));
        assert!(perfect.windows(2).all(|w| w[0] < w[1]));
        assert!(res.windows(2).all(|w| w[0].score >= w[1].score));
    }

    #[test]
    fn profile_metric_sorts_ascending() {
        let plan = Layer::filled(9, 9).unwrap();
        let cfg = GrowthConfig::default();
        let target = grow_tower(&plan, decode_rule(512).unwrap(), &cfg).unwrap();
        let res = scan_rules(&plan, &target, Metric::Profile(ProfileKind::Extent), &cfg, 5).unwrap();
        assert_eq!(res.len(), 5);
        assert_eq!(res[0].score, 0.0);
        assert!(res.windows(2).all(|w| w[0].score <= w[1].score));
    }

    #[test]
    fn frame_mismatch_rejected() {
        let cfg = GrowthConfig::default();
        let target = grow_tower(&Layer::filled(9, 9).unwrap(), decode_rule(512).unwrap(), &cfg).unwrap();
        let err = scan_rules(&Layer::filled(7, 7).unwrap(), &target, Metric::Iou, &cfg, 1);
        assert!(matches!(err, Err(Error::FrameMismatch { .. })));
        assert!(scan_rules(&Layer::filled(9, 9).unwrap(), &target, Metric::Iou, &cfg, 0).is_err());
    }
}
