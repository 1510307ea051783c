use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::Layer;
use crate::rule::TotalisticRule;

/// Long-run behavior of a rule on a finite frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BehaviorClass {
    /// Settles on a fixed configuration (the empty layer included).
    LimitPoint,
    /// Settles on a periodic orbit of period two or more.
    LimitCycle,
    /// No repeat seen within the horizon.
    Unresolved,
}

impl BehaviorClass {
    pub fn label(self) -> &'static str {
        match self {
            BehaviorClass::LimitPoint => "I",
            BehaviorClass::LimitCycle => "II",
            BehaviorClass::Unresolved => "UNRESOLVED",
        }
    }
}

impl fmt::Display for BehaviorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub class: BehaviorClass,
    /// Steps before the orbit is entered; the horizon when unresolved.
    pub transient: usize,
    pub period: Option<usize>,
}

/// Iterates `rule` from `plan` for up to `horizon` steps on the fixed frame,
/// unmasked, and reports the first revisited configuration.
pub fn classify_rule(plan: &Layer, rule: TotalisticRule, horizon: usize) -> Result<ClassReport> {
    if horizon == 0 {
        return Err(Error::invalid("horizon", "must be at least 1"));
    }
    let mut visited: HashMap<Layer, usize> = HashMap::new();
    let mut current = plan.clone();
    visited.insert(current.clone(), 0);
    for t in 1..=horizon {
        current = current.step(rule);
        if let Some(&first) = visited.get(&current) {
            let period = t - first;
            let class = if period == 1 {
                BehaviorClass::LimitPoint
            } else {
                BehaviorClass::LimitCycle
            };
            return Ok(ClassReport {
                class,
                transient: first,
                period: Some(period),
            });
        }
        visited.insert(current.clone(), t);
    }
    Ok(ClassReport {
        class: BehaviorClass::Unresolved,
        transient: horizon,
        period: None,
    })
}
