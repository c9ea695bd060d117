//! Codewords of Z2^alpha x R^beta, generator specs and the closure oracle.

mod ambient;
mod codeset;
mod spec;

pub use ambient::{Ambient, Codeword};
pub use codeset::{additive_span, closure_basis, enumerate_closure, CodeSet, DEFAULT_BUDGET};
pub use spec::{
    cardinality_formula, cardinality_log2, enumerate_specs, spanning_keys, spanning_set, validate_spec, Case, CodeSpec,
    ScalarDomain, SpanElement, Violation,
};
