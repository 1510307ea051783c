//! Stacking successive generations into a tower.
//!
//! Layer 0 is the ground plan. Each layer above is the rule applied to the
//! one below it, optionally masked by the plan footprint. Growth stops at the
//! roofline (next layer empty), on a repeated layer, or at the height cap.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::Layer;
use crate::rule::TotalisticRule;

/// Why growth stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Termination {
    /// The next layer would have been empty.
    Empty,
    /// The next layer repeated the layer `period` floors below it.
    Cycle { period: usize },
    /// `max_layers` reached.
    HeightLimit,
}

impl Termination {
    pub fn tag(&self) -> &'static str {
        match self {
            Termination::Empty => "EMPTY",
            Termination::Cycle { .. } => "CYCLE",
            Termination::HeightLimit => "HEIGHT_LIMIT",
        }
    }
}

/// `EMPTY`, `HEIGHT_LIMIT`, or `CYCLE:<period>`.
impl fmt::Display for Termination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Termination::Cycle { period } => write!(f, "CYCLE:{period}"),
            other => f.write_str(other.tag()),
        }
    }
}

impl FromStr for Termination {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "EMPTY" => Ok(Termination::Empty),
            "HEIGHT_LIMIT" => Ok(Termination::HeightLimit),
            _ => {
                let period = s
                    .strip_prefix("CYCLE:")
                    .ok_or_else(|| format!("unknown termination tag {s:?}"))?;
                match period.parse::<usize>() {
                    Ok(p) if p >= 1 && period.bytes().all(|b| b.is_ascii_digit()) => {
                        Ok(Termination::Cycle { period: p })
                    }
                    _ => Err(format!("invalid cycle period in {s:?}")),
                }
            }
        }
    }
}

/// How new layers are confined horizontally.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ClipMode {
    /// Confined only by the plan's frame.
    #[default]
    BoundingBox,
    /// Additionally ANDed with the plan's occupied footprint.
    Mask,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrowthConfig {
    pub max_layers: usize,
    pub clip_mode: ClipMode,
    pub halt_on_cycle: bool,
}

impl Default for GrowthConfig {
    fn default() -> Self {
        Self {
            max_layers: 64,
            clip_mode: ClipMode::BoundingBox,
            halt_on_cycle: true,
        }
    }
}

impl GrowthConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_layers == 0 {
            return Err(Error::invalid("growth config", "max_layers must be at least 1"));
        }
        Ok(())
    }
}

/// A bottom-to-top stack of same-sized layers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tower {
    layers: Vec<Layer>,
    rule_code: Option<u32>,
    termination: Termination,
}

impl Tower {
    /// Assembles a tower from existing layers (e.g. read from disk).
    ///
    /// All layers must share one frame, and only the ground layer may be empty.
    pub fn new(
        layers: Vec<Layer>,
        rule_code: Option<u32>,
        termination: Termination,
    ) -> Result<Self> {
        let first = layers
            .first()
            .ok_or_else(|| Error::invalid("tower", "no layers"))?;
        for (k, layer) in layers.iter().enumerate().skip(1) {
            if layer.dims() != first.dims() {
                return Err(Error::invalid(
                    "tower",
                    format!(
                        "layer {k} is {}x{}, ground is {}x{}",
                        layer.width(),
                        layer.height(),
                        first.width(),
                        first.height()
                    ),
                ));
            }
            if layer.is_empty() {
                return Err(Error::invalid("tower", format!("layer {k} is empty")));
            }
        }
        if let Some(code) = rule_code {
            TotalisticRule::from_code(code)?;
        }
        if let Termination::Cycle { period: 0 } = termination {
            return Err(Error::invalid("tower", "cycle period must be at least 1"));
        }
        Ok(Self {
            layers,
            rule_code,
            termination,
        })
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn ground(&self) -> &Layer {
        &self.layers[0]
    }

    /// Number of stored layers.
    pub fn height(&self) -> usize {
        self.layers.len()
    }

    pub fn width(&self) -> usize {
        self.layers[0].width()
    }

    /// Rows per layer (the plan's depth).
    pub fn depth(&self) -> usize {
        self.layers[0].height()
    }

    pub fn rule_code(&self) -> Option<u32> {
        self.rule_code
    }

    pub fn termination(&self) -> Termination {
        self.termination
    }

    /// Total occupied voxels.
    pub fn population(&self) -> usize {
        self.layers.iter().map(Layer::population).sum()
    }

    /// Occupied voxels as `(layer, row, col)`, layers ascending then row-major.
    pub fn voxels(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.layers
            .iter()
            .enumerate()
            .flat_map(|(k, l)| l.occupied().map(move |(r, c)| (k, r, c)))
    }
}

/// Grows a tower from `plan` by repeatedly applying `rule`.
pub fn grow_tower(plan: &Layer, rule: TotalisticRule, config: &GrowthConfig) -> Result<Tower> {
    config.validate()?;
    if plan.is_empty() {
        return Err(Error::EmptyPlan);
    }

    let mut layers = vec![plan.clone()];
    let mut seen: HashMap<Layer, usize> = HashMap::new();
    if config.halt_on_cycle {
        seen.insert(plan.clone(), 0);
    }

    let termination = loop {
        if layers.len() >= config.max_layers {
            break Termination::HeightLimit;
        }
        let below = layers.last().expect("tower is never empty");
        let mut next = below.step(rule);
        if config.clip_mode == ClipMode::Mask {
            next = next.apply_mask(plan)?;
        }
        if next.is_empty() {
            break Termination::Empty;
        }
        if config.halt_on_cycle {
            if let Some(&earlier) = seen.get(&next) {
                break Termination::Cycle {
                    period: layers.len() - earlier,
                };
            }
            seen.insert(next.clone(), layers.len());
        }
        layers.push(next);
    };

    Ok(Tower {
        layers,
        rule_code: Some(rule.code()),
        termination,
    })
}
