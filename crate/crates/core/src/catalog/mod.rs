//! Built-in examples, the JSON file formats and report rendering.

mod presets;
mod report;
mod reports;
mod spec;

pub use presets::{
    group_algebra, monoid_bialgebra, preset, smallest_primitive_root, sweedler4, taft, truncpoly,
    Group, PRESET_NAMES,
};
pub use report::{Report, Value};
pub use reports::{
    algebra_report, check_report, double_report, hopf_report, subpair_report, verify_report,
};
pub use spec::{
    embedding_to_json, load_embedding, load_spec, parse_embedding, AlgebraSpec, Triple,
};
