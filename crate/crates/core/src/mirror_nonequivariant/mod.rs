//! Non-equivariant hypergeometric series and invariant extraction.

pub mod hypergeometric;
pub mod invariants;
pub mod tuple;
pub mod xclass;

pub use hypergeometric::{i_series, mirror_map_j, y_series, z_series};
pub use invariants::{gw_invariant, sq_invariant, table1, Flavor, InvariantEngine, InvariantRecord, Table1Row};
pub use tuple::{tuple_stats, ExponentTuple, TupleStats};
pub use xclass::{XClass, XClassSeries, XCtx};
