pub mod calligraph;
pub mod canonical;
pub mod class;
pub mod graph;
pub mod henneberg;
pub mod invariants;
pub mod oracle;
pub mod par;
pub mod rigidity;

pub use calligraph::{find_split, glue, is_calligraph, Calligraph, CalligraphicSplit, GlueKind};
pub use class::{class_product, ClassVector, Engine, EngineConfig, EngineError, Method, TraceNode};
pub use graph::{GraphError, MarkedGraph, Vertex};
pub use oracle::{count_realizations_oracle, OracleConfig, OracleError, OracleField};
pub use rigidity::{is_minimally_rigid, laman_violation, LamanViolation};
