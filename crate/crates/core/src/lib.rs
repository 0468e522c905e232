#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod brackets;
pub mod classifier;
pub mod degree;
pub mod element;
pub mod error;
pub mod generator;
pub mod halfint;
pub mod involution;
pub mod jacobi;
pub mod linalg;
pub mod params;
pub mod scalar;
pub mod uea;

pub use brackets::{bracket_elements, color_bracket, super_bracket, vir_bracket, CocycleTables};
pub use degree::Degree;
pub use element::Element;
pub use error::{Error, Result};
pub use generator::{degree_of, Central, Family, Generator};
pub use halfint::HalfInt;
pub use params::{AlgebraParams, RhoMode, Window};
pub use scalar::Scalar;
