//! File formats, seeded generators and built-in fixtures.

pub mod fixtures;
pub mod format;
pub mod gen;

pub use fixtures::{builtin_fixture, Fixture, FIXTURE_NAMES};
pub use format::{parse_cds, parse_instance, parse_solution, write_cds, write_instance, write_solution};
pub use gen::{gen_random, GenConfig, GraphKind};
