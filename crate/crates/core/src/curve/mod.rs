//! Configurations of four points, their genus-one double covers, and the
//! marked triples `(E, Q, omega)` they correspond to.

mod bridge;
mod config;
mod model;
mod weierstrass;

pub use bridge::{
    conf3_to_pair, forward_map, forward_map_with, inverse_map, normalization_constant,
    quotient_value_g, ramification_values, DifferentialPair, Extended, LiftSign, MarkedTriple,
};
pub use config::{
    cross_ratio, ferrari_resolvent, j_from_cross_ratio, j_from_invariants, normalize_barycenter,
    quartic_from_config, quartic_from_points, quartic_invariants, Configuration, Quartic,
};
pub use model::{branch_cubic_model, cubic_to_short_weierstrass, CubicModel};
pub use weierstrass::{CurvePoint, HalvingSet, WeierstrassCurve};
