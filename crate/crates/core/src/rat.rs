//! Exact rational scalars (the ground field).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// Arbitrary-precision rational number; always a reduced fraction with
/// positive denominator.
pub type Rat = BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`.
pub fn rat_frac(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_zero(r: &Rat) -> bool {
    r.is_zero()
}

pub fn is_one(r: &Rat) -> bool {
    r.is_one()
}

pub fn is_negative(r: &Rat) -> bool {
    r.is_negative()
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_formatted() {
        let r = rat_frac(4, 6);
        assert_eq!(format_rat(&r), "2/3");
        assert_eq!(format_rat(&rat(-7)), "-7");
        assert_eq!(format_rat(&rat_frac(3, -6)), "-1/2");
    }
}
