//! Dense vector primitives, seeded hierarchical RNG streams, and the small
//! linear-algebra routines the rest of the crate builds on.

mod linalg;
mod rng;
mod vector;

pub use linalg::{top_right_singular_vector, TopSingularVector};
pub use rng::{inverse_normal_cdf, RngStream};
pub use vector::{axpy, dot, mean_of_rows, sub, ParamVector};
