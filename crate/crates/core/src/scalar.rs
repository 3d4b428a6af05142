//! Scalar abstractions.
//!
//! Group-algebra coefficients only need a field-like [`Coefficient`]; the
//! exact paths (trace matrices, ranks) instantiate it with [`num_rational::Ratio`]
//! over an integer type, while growth fits and majorant sums are generic over
//! a floating-point [`Real`].

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Float, FromPrimitive, Num, Signed};

/// Coefficient ring for group-algebra elements.
pub trait Coefficient: Num + Clone + PartialEq + Debug + FromPrimitive + Send + Sync {}

impl<T> Coefficient for T where T: Num + Clone + PartialEq + Debug + FromPrimitive + Send + Sync {}

/// Integer types usable underneath an exact [`Ratio`].
pub trait ExactInteger: Integer + Signed + Clone + Debug + FromPrimitive + Send + Sync {}

impl<T> ExactInteger for T where T: Integer + Signed + Clone + Debug + FromPrimitive + Send + Sync {}

/// Floating-point type for growth fits and numeric series.
pub trait Real: Float + FromPrimitive + Debug + Send + Sync {}

impl Real for f32 {}
impl Real for f64 {}

/// Renders a ratio as `num/den`, always with an explicit denominator.
pub fn ratio_string<T: ExactInteger + std::fmt::Display>(value: &Ratio<T>) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_ratio(text: &str) -> Option<Ratio<BigInt>> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(Ratio::new(n, d))
        }
        None => text.parse::<BigInt>().ok().map(Ratio::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_roundtrip() {
        let r = Ratio::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(ratio_string(&r), "-3/2");
        assert_eq!(parse_ratio("-3/2"), Some(r));
        assert_eq!(ratio_string(&parse_ratio("5").unwrap()), "5/1");
        assert_eq!(parse_ratio("1/0"), None);
    }
}
