//! Measurements over grown towers: elevation profiles and their plateaus,
//! integer ratio signatures, box-counting dimension, and behavior classes.

mod boxdim;
mod classify;
mod profile;
mod ratio;

pub use boxdim::{box_counting_dimension, default_max_exponent, DimensionEstimate};
pub use classify::{classify_rule, BehaviorClass, ClassReport};
pub use profile::{elevation_profile, segment_profile, Profile, ProfileKind, Segment};
pub use ratio::{ratio_signature, RatioSignature};
