//! Rational functions over ℚ in the variables `x_i`, `y_j` whose denominators
//! are products of linear forms.

mod format;
mod linear;
mod poly;
mod ratfunc;
mod var;

pub use format::{parse_json, Format};
pub use linear::LinearForm;
pub use poly::{Monomial, Polynomial};
pub use ratfunc::RatFunc;
pub use var::{Ambient, Family, Variable};

pub type Rational = num_rational::BigRational;

/// Integer literal as a [`Rational`].
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

pub(crate) fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: num_bigint::BigInt = p.trim().parse().ok()?;
            let q: num_bigint::BigInt = q.trim().parse().ok()?;
            if q == num_bigint::BigInt::from(0) {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}
