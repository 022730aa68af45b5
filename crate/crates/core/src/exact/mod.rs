//! Exact arithmetic: coefficient domains, sparse graded polynomials modulo
//! monomial relations, and integer matrices with Smith normal form.

mod coeff;
mod graded;
mod matrix;
mod monomial;
mod smith;
mod spec;

pub use coeff::{as_integer, binomial, factorial, rat, rat_frac, Coeff, Gf2};
pub use graded::{poly_mul, GradedElement};
pub use matrix::IntegerMatrix;
pub use monomial::Monomial;
pub use smith::{smith_normal_form, SmithForm};
pub use spec::{TruncatedRingSpec, Variable};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
