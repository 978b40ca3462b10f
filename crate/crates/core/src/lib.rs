//! Counting plane trees with several marked roots of prescribed degree.

pub mod cli;
pub mod closed_form;
pub mod degree_spec;
pub mod error;
pub mod exact;
pub mod genfun;
pub mod identities;
pub mod oracle;
pub mod recursion;
pub mod series;
pub mod tables;
pub mod verify;

pub use closed_form::{count, count_full, count_partial, count_total};
pub use degree_spec::{max_degree, validate, DegreeSpec, Rule, ValidityReport};
pub use error::{Error, Result};
pub use exact::{binomial_ext, factorial, falling_ratio, ExactInt, ExactRat};
pub use recursion::{count_by_contraction, count_by_deletion, Engine, MemoTable, Recursions};
pub use oracle::{dyck_valley_total, enumerate_one_rooted, oracle_count, permutation_model_count};
pub use tables::{Sequence, Table, TableKind};
