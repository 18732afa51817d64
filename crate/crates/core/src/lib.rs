//! Exact arithmetic and linear algebra behind a family of Hassett maximal
//! cubic fourfolds: the quaternary form `F`, its primitive image, the ADC
//! descent for `x² + y² + 3z²` and `x² + 3y² + 3z²`, local solvability
//! certificates, the rank-5 lattices `M_{α,β}`, and the four-plane cubic
//! configurations.

pub mod adc;
pub mod arith;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod hassett_rep;
pub mod json;
pub mod lattices;
pub mod linalg;
pub mod local_global;
pub mod qforms;

pub use error::{Error, Result};
pub use qforms::{builtin, BuiltinForm, IntVector, Integer, QuadraticForm, Rational};
