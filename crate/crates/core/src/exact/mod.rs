//! Exact rational arithmetic and univariate polynomial algebra.

mod poly;
mod ratfunc;
mod rational;
mod resultant;
mod roots;

pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use rational::{
    common_denominator, content, format_rational, int, integer_nth_root, integer_sqrt, is_square_rational,
    parse_rational, rat, rational_nth_root, serde_rational, sign, small_primes, trial_factor,
};
pub use resultant::{determinant, discriminant, resultant, sylvester_resultant};
pub use roots::rational_roots;
pub(crate) use roots::{integer_candidates, refine, Refined};

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
    #[error("undecided: {0}")]
    Undecided(String),
}
