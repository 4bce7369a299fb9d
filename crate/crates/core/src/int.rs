//! The exact integer scalar every algorithm in this crate is generic over.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

/// Exact signed integers: `i64`, `i128` and [`BigInt`].
///
/// Fixed-width implementations are only correct while every intermediate value
/// fits. Modular products go through [`Int::mul_mod`], which never overflows;
/// code whose values grow without bound (continued fractions) uses the checked
/// operations and reports [`crate::Error::Overflow`].
pub trait Int:
    Integer
    + Signed
    + Roots
    + Clone
    + Debug
    + Display
    + Hash
    + FromPrimitive
    + ToPrimitive
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + Send
    + Sync
    + 'static
{
    /// `self * rhs` reduced into `[0, m)`, exact for any `m > 0` representable in `Self`.
    fn mul_mod(&self, rhs: &Self, m: &Self) -> Self;

    /// Small constant.
    fn lit(v: i64) -> Self {
        Self::from_i64(v).expect("literal fits every Int")
    }

    /// Checked conversion from another scalar.
    fn from_int<U: Int>(v: &U) -> Option<Self> {
        match v.to_i128() {
            Some(x) => Self::from_i128(x),
            None => Self::from_big(&to_big(v)),
        }
    }

    fn from_big(v: &BigInt) -> Option<Self>;
}

/// Lossless widening to [`BigInt`].
pub fn to_big<T: Int>(v: &T) -> BigInt {
    match v.to_i128() {
        Some(x) => BigInt::from(x),
        None => v
            .to_string()
            .parse()
            .expect("decimal rendering of an integer parses"),
    }
}

impl Int for i64 {
    fn mul_mod(&self, rhs: &Self, m: &Self) -> Self {
        ((*self as i128 * *rhs as i128).rem_euclid(*m as i128)) as i64
    }

    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i64()
    }
}

impl Int for i128 {
    fn mul_mod(&self, rhs: &Self, m: &Self) -> Self {
        let a = self.rem_euclid(*m);
        let b = rhs.rem_euclid(*m);
        match a.checked_mul(b) {
            Some(p) => p.rem_euclid(*m),
            None => {
                let p = (BigInt::from(a) * BigInt::from(b)).mod_floor(&BigInt::from(*m));
                p.to_i128().expect("residue is below the modulus")
            }
        }
    }

    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
}

impl Int for BigInt {
    fn mul_mod(&self, rhs: &Self, m: &Self) -> Self {
        (self * rhs).mod_floor(m)
    }

    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_mod_agrees_across_widths() {
        let m = (1i64 << 62) - 57;
        let a = m - 3;
        let b = m - 11;
        let wide = i64::mul_mod(&a, &b, &m);
        let big = BigInt::mul_mod(&BigInt::from(a), &BigInt::from(b), &BigInt::from(m));
        assert_eq!(BigInt::from(wide), big);
        assert_eq!(BigInt::from(wide), BigInt::from(33));

        let m128 = i128::MAX - 158;
        let r = i128::mul_mod(&(m128 - 1), &(m128 - 1), &m128);
        assert_eq!(r, 1);
    }

    #[test]
    fn negative_operands_reduce_into_range() {
        assert_eq!(i64::mul_mod(&-3, &5, &7), 6);
        assert_eq!(
            BigInt::mul_mod(&BigInt::from(-3), &BigInt::from(5), &BigInt::from(7)),
            BigInt::from(6)
        );
    }

    #[test]
    fn conversions() {
        let big: BigInt = "340282366920938463463374607431768211457".parse().unwrap();
        assert_eq!(i128::from_int(&big), None);
        assert_eq!(BigInt::from_int(&big), Some(big.clone()));
        assert_eq!(i64::from_int(&BigInt::from(-5)), Some(-5));
        assert_eq!(to_big(&-7i64), BigInt::from(-7));
    }
}
