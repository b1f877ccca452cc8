//! Exact ordered scalars used by the standard (infinite-carrier) models.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// An exact, totally ordered number type.
///
/// Equation verdicts compare values for equality, so only exact types
/// qualify; binary floating point is deliberately not an implementor.
pub trait Scalar:
    Clone + Ord + Hash + Debug + Display + FromStr + Num + Signed + Send + Sync + 'static
{
    /// Builds `num / den`. Panics if `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn half() -> Self {
        Self::from_ratio(1, 2)
    }

    /// `max(-1, min(1, self))`.
    fn clamp_unit(self) -> Self {
        let one = Self::one();
        let minus_one = -Self::one();
        if self > one {
            one
        } else if self < minus_one {
            minus_one
        } else {
            self
        }
    }

    fn in_unit_interval(&self) -> bool {
        *self <= Self::one() && *self >= -Self::one()
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone
        + Integer
        + Signed
        + Hash
        + Debug
        + Display
        + FromStr
        + From<i64>
        + Send
        + Sync
        + 'static,
{
    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(T::from(num), T::from(den))
    }
}

/// Parses `"a"`, `"a/b"` or a decimal literal such as `"0.25"` exactly.
pub fn parse_scalar<S: Scalar>(text: &str) -> Option<S> {
    let text = text.trim();
    if let Ok(v) = text.parse::<S>() {
        return Some(v);
    }
    let (sign, body) = match text.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1i64, text),
    };
    let (int, frac) = body.split_once('.')?;
    if frac.is_empty() || frac.len() > 15 || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let int: i64 = if int.is_empty() { 0 } else { int.parse().ok()? };
    let den = 10i64.checked_pow(frac.len() as u32)?;
    let num = int.checked_mul(den)?.checked_add(frac.parse::<i64>().ok()?)?;
    Some(S::from_ratio(sign * num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type R = Ratio<i64>;

    #[test]
    fn clamp_unit_truncates_both_ends() {
        assert_eq!(R::from_ratio(3, 2).clamp_unit(), R::from_ratio(1, 1));
        assert_eq!(R::from_ratio(-7, 3).clamp_unit(), R::from_ratio(-1, 1));
        assert_eq!(R::from_ratio(1, 3).clamp_unit(), R::from_ratio(1, 3));
    }

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_scalar::<R>("-3/10"), Some(R::from_ratio(-3, 10)));
        assert_eq!(parse_scalar::<R>("0.25"), Some(R::from_ratio(1, 4)));
        assert_eq!(parse_scalar::<R>("-.5"), Some(R::from_ratio(-1, 2)));
        assert_eq!(parse_scalar::<BigRational>("7"), Some(BigRational::from_ratio(7, 1)));
        assert_eq!(parse_scalar::<R>("x"), None);
    }
}
