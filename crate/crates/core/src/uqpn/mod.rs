//! The quantized enveloping superalgebra `U_q p_n` given by the RTT presentation.

pub mod checks;
pub mod element;
pub mod limits;
pub mod pbw;
pub mod relations;
pub mod representation;
pub mod symbol;

pub use element::{AlgebraElement, TensorElement};
pub use relations::{closed_form_relation, coproduct, extract_relations, Relation, RelationSet};
pub use symbol::{generators, parse_word, pbw_compare, GeneratorSymbol, Letter, Word};
pub use representation::Representation;
pub use pbw::{is_reduced, Straightener};
pub use checks::{verify_pbw, verify_relations, verify_representations};
pub use limits::{verify_classical_limit, verify_cobracket_limit};
