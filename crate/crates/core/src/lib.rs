//! Convolutional Goppa codes on the trivial fibration `P^m x A^1 -> A^1`.
//!
//! Codes are built by evaluating monomial sections of `O(r)` along
//! affine-linear sections `z -> (alpha_1 z + beta_1, ..., alpha_m z + beta_m, z)`.
//! Every classical invariant of the result (dimension, degree, memory, Forney
//! indices, free distance, MDS status) is computed exactly.

pub mod cli;
pub mod config;
pub mod examples;
pub mod field;
pub mod free_distance;
pub mod goppa;
pub mod linalg;
pub mod poly;
pub mod polymat;

pub use field::{Elem, Field, FieldElement, FieldError, FieldSpec};
pub use poly::{vec_weight, Degree, Poly, PolyError, PolyVector};
pub use polymat::{EncoderProfile, MatrixError, PolyMatrix, SnfDecomposition};
