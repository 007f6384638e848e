//! Polynomial invariants, bound formulas and the table of classical indices.

mod bounds;
mod bracket;
mod jones;
mod records;

pub use bounds::{
    bound_arc_upper, bound_bridge_lower, bound_crossing_lower, bound_crossing_upper, bound_link_planar, check_bounds,
    BoundCheck, BoundReport,
};
pub use bracket::{bracket_by_contraction, kauffman_bracket, loop_value, STATE_SUM_LIMIT};
pub use jones::{jones, jones_from_bracket, jones_of, jones_of_pd, torus_jones_oracle, JonesPoly};
pub use records::{knot_records, parse_records, record, records_to_json, KnotRecord, RECORDS_VERSION};
