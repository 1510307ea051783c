//! Grow 3D voxel towers from 2D ground plans with 9-neighbor totalistic
//! cellular automata, then measure them and search the rule space for the
//! rule that best reproduces a target form.
//!
//! Each layer of a tower is the previous layer stepped once under a rule;
//! the vertical axis plays the role of time. The grid never grows past the
//! plan's frame.
//!
//! ```
//! use voxtower::{grow_tower, GrowthConfig, Layer, TotalisticRule, Termination};
//!
//! let plan = Layer::filled(9, 9).unwrap();
//! let rule = TotalisticRule::from_code(512).unwrap();
//! let tower = grow_tower(&plan, rule, &GrowthConfig::default()).unwrap();
//! assert_eq!(tower.height(), 5);
//! assert_eq!(tower.termination(), Termination::Empty);
//! ```

pub mod error;
pub mod formats;
pub mod growth;
pub mod lattice;
pub mod morphometrics;
pub mod plans;
pub mod rule;
pub mod rulescan;

pub use error::{Error, Result};
pub use formats::{
    export_obj, export_slices, parse_pbm, parse_plan_any, parse_plan_text, parse_slices,
    render_plan_text, write_pbm, PlanDocument,
};
pub use growth::{grow_tower, ClipMode, GrowthConfig, Termination, Tower};
pub use lattice::{apply_mask, neighborhood_total, step_layer, Bounds, Dihedral, Layer};
pub use morphometrics::{
    box_counting_dimension, classify_rule, default_max_exponent, elevation_profile,
    ratio_signature, segment_profile, BehaviorClass, ClassReport, DimensionEstimate, Profile,
    ProfileKind, RatioSignature, Segment,
};
pub use rule::{
    decode_rule, encode_rule, render_rule, rule_output, TotalisticRule, MAX_RULE_CODE,
    RULE_SPACE_SIZE,
};
pub use rulescan::{
    iou_score, profile_distance, scan_rules, scan_rules_with_threads, Metric, ScanResult,
};
