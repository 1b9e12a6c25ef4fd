//! Arbitrary-precision rational scalars.
//!
//! Every mass, transport cost and curvature value in this crate is an exact
//! rational. [`Rational`] is `num_rational::BigRational`, which maintains the
//! two invariants we rely on everywhere: the denominator is positive and the
//! fraction is fully reduced.

use alloc::string::String;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Int = BigInt;
pub type Rational = num_rational::BigRational;

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_zero(r: &Rational) -> bool {
    r.numer().is_zero()
}

pub fn is_negative(r: &Rational) -> bool {
    r.numer().is_negative()
}

/// Nearest f64; corpus values are far inside the representable range.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Canonical `"num/den"` rendering, denominator always present (`0` prints
/// as `"0/1"`).
pub fn fmt(r: &Rational) -> String {
    let mut s = String::new();
    let _ = write!(s, "{}/{}", r.numer(), r.denom());
    s
}

/// Parse `"num/den"` or a bare integer.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().ok()?;
    let d: BigInt = d.trim().parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting_always_carries_denominator() {
        assert_eq!(fmt(&int(0)), "0/1");
        assert_eq!(fmt(&int(3)), "3/1");
        assert_eq!(fmt(&rat(2, 4)), "1/2");
        assert_eq!(fmt(&rat(-2, 4)), "-1/2");
        assert_eq!(fmt(&rat(2, -4)), "-1/2");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["0/1", "-5/3", "7/1", "12/35"] {
            assert_eq!(fmt(&parse(s).unwrap()), s);
        }
        assert_eq!(parse(" 4 "), Some(int(4)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x/2"), None);
    }
}
