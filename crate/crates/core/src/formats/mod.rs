//! Text and byte formats: ground plans, slice stacks, and OBJ meshes.
//!
//! Parsers reject malformed input rather than repairing it, and every parse
//! error carries a 1-based line number.

mod obj;
mod pbm;
mod plan;
mod slices;

pub use obj::export_obj;
pub use pbm::{parse_pbm, write_pbm};
pub use plan::{parse_plan_text, render_plan_text};
pub use slices::{export_slices, parse_slices};

use crate::error::{Error, Result};
use crate::lattice::Layer;

/// A validated ground plan with a label naming where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanDocument {
    pub layer: Layer,
    pub source_name: String,
}

impl PlanDocument {
    /// Rejects plans without an occupied cell.
    pub fn new(layer: Layer, source_name: impl Into<String>) -> Result<Self> {
        if layer.is_empty() {
            return Err(Error::EmptyPlan);
        }
        Ok(Self {
            layer,
            source_name: source_name.into(),
        })
    }
}

/// Parses either plan format, choosing plain PBM when the input starts
/// with its `P` magic.
pub fn parse_plan_any(input: &[u8]) -> Result<PlanDocument> {
    if input.first() == Some(&b'P') {
        parse_pbm(input)
    } else {
        let text = std::str::from_utf8(input)
            .map_err(|e| Error::parse(1, format!("plan is not valid UTF-8: {e}")))?;
        parse_plan_text(text)
    }
}
