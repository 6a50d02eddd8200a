//! Exact rational scalars.
//!
//! Every computation in this crate runs over arbitrary-precision fractions;
//! no floating point appears anywhere. `Rational` is kept in lowest terms
//! with a positive denominator by construction.

use num::bigint::BigInt;
use num::rational::BigRational;

use crate::error::{Error, Result};

/// The scalar type of the whole library: an exact fraction with
/// arbitrary-precision numerator and positive denominator, always reduced.
pub type Rational = BigRational;

/// An integer as a `Rational`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The reduced fraction `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `Some(n)` when `q` is an integer that fits in `i64`.
pub fn as_integer(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        i64::try_from(q.numer().clone()).ok()
    } else {
        None
    }
}

/// Renders `p/q`, or just `p` when the denominator is 1.
pub fn render(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// The integer value of a quantity that must come out integral,
/// e.g. a degree or a dimension.
pub fn expect_integer(q: &Rational, what: &str) -> Result<i64> {
    as_integer(q).ok_or_else(|| Error::NonIntegerInvariant(format!("{what} = {}", render(q))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Signed;

    #[test]
    fn stored_in_lowest_terms_with_positive_denominator() {
        let q = ratio(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert!(q.denom().is_positive());
    }

    #[test]
    fn product_reduces_deterministically() {
        assert_eq!(ratio(2, 3) * ratio(3, 4), ratio(1, 2));
    }

    #[test]
    fn rendering() {
        assert_eq!(render(&ratio(-3, 2)), "-3/2");
        assert_eq!(render(&rat(14)), "14");
        assert_eq!(render(&ratio(8, 4)), "2");
    }

    #[test]
    fn integer_extraction() {
        assert_eq!(as_integer(&rat(-7)), Some(-7));
        assert_eq!(as_integer(&ratio(1, 2)), None);
        assert!(expect_integer(&ratio(1, 2), "degree").is_err());
    }
}
