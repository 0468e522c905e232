use alloc::string::String;

use crate::generator::Generator;
use crate::halfint::HalfInt;
use crate::involution::InvolutionKind;

/// Errors raised by the algebra engines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("spin value must be a non-negative half-integer, got {0}")]
    NotASpinValue(HalfInt),

    #[error("cannot parse `{0}` as a half-integer")]
    Parse(String),

    #[error("generator {generator} is not valid for (l1, l2) = ({l1}, {l2})")]
    InvalidGenerator {
        generator: Generator,
        l1: HalfInt,
        l2: HalfInt,
    },

    #[error("{0} is not a generator of the superalgebra v(l1, l2)")]
    NotInSuperalgebra(Generator),

    #[error("{0} has no realization in the enveloping algebra")]
    NoRealization(Generator),

    #[error("{kind} is not defined at (l1, l2) = ({l1}, {l2})")]
    InvolutionUndefined {
        kind: InvolutionKind,
        l1: HalfInt,
        l2: HalfInt,
    },

    #[error("{kind} assigns no image to {generator}")]
    NoInvolutionImage {
        kind: InvolutionKind,
        generator: Generator,
    },

    #[error("window bounds must be at least 1")]
    EmptyWindow,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
