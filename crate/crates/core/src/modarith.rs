//! Modular arithmetic in prime fields: powers, Jacobi symbols, square roots,
//! primality, and identification of roots of unity.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::int::Int;

/// How the primitive h-th root of unity mod p was fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RootConvention {
    /// The numerically smallest residue among the primitive h-th roots
    /// (h = 4: the smaller square root of -1; h = 3: the smaller root of x^2 + x + 1).
    CanonicalMinRoot,
}

/// A root of unity `zeta^exponent` of order dividing `order`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RootOfUnityValue {
    pub order: u32,
    pub exponent: u32,
    pub convention: RootConvention,
}

impl RootOfUnityValue {
    pub fn new(order: u32, exponent: u32) -> Self {
        assert!(
            exponent < order,
            "exponent {exponent} out of range for order {order}"
        );
        Self {
            order,
            exponent,
            convention: RootConvention::CanonicalMinRoot,
        }
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0
    }

    /// `Some(+1)` or `Some(-1)` when the value is real, `None` otherwise.
    pub fn as_sign(&self) -> Option<i8> {
        if self.exponent == 0 {
            Some(1)
        } else if 2 * self.exponent == self.order {
            Some(-1)
        } else {
            None
        }
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.order, (self.order - self.exponent) % self.order)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        Self::new(self.order, (self.exponent + other.exponent) % self.order)
    }
}

impl fmt::Display for RootOfUnityValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(s) = self.as_sign() {
            return write!(f, "{}", if s > 0 { "+1" } else { "-1" });
        }
        match (self.order, self.exponent) {
            (4, 1) => write!(f, "i"),
            (4, 3) => write!(f, "-i"),
            (_, 1) => write!(f, "zeta{}", self.order),
            (_, e) => write!(f, "zeta{}^{}", self.order, e),
        }
    }
}

/// `base^exp mod modulus`, in `[0, modulus)`.
///
/// Panics if `modulus < 2` or `exp < 0`.
pub fn mod_pow<T: Int>(base: &T, exp: &T, modulus: &T) -> T {
    assert!(*modulus >= T::lit(2), "modulus must be at least 2");
    assert!(!exp.is_negative(), "exponent must be nonnegative");
    let two = T::lit(2);
    let mut result = T::one();
    let mut b = base.mod_floor(modulus);
    let mut e = exp.clone();
    while !e.is_zero() {
        if e.is_odd() {
            result = result.mul_mod(&b, modulus);
        }
        e = e.div_floor(&two);
        if !e.is_zero() {
            b = b.mul_mod(&b, modulus);
        }
    }
    result
}

/// Modular inverse by the extended Euclidean algorithm, if `gcd(a, m) = 1`.
pub fn mod_inverse<T: Int>(a: &T, m: &T) -> Option<T> {
    let ext = a.mod_floor(m).extended_gcd(m);
    if ext.gcd.is_one() {
        Some(ext.x.mod_floor(m))
    } else {
        None
    }
}

/// The Jacobi symbol `(a/n)` for odd positive `n`.
pub fn jacobi<T: Int>(a: &T, n: &T) -> Result<i8> {
    if !n.is_positive() || n.is_even() {
        return Err(Error::InvalidModulus(n.to_string()));
    }
    let three = T::lit(3);
    let four = T::lit(4);
    let five = T::lit(5);
    let eight = T::lit(8);
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut sign = 1i8;
    while !a.is_zero() {
        while a.is_even() {
            a = a / T::lit(2);
            let r = n.mod_floor(&eight);
            if r == three || r == five {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a.mod_floor(&four) == three && n.mod_floor(&four) == three {
            sign = -sign;
        }
        a = a.mod_floor(&n);
    }
    Ok(if n.is_one() { sign } else { 0 })
}

/// Square root of a quadratic residue mod an odd prime, canonicalized to the
/// smaller of the two roots, so `0 < r <= (p-1)/2`.
pub fn sqrt_mod<T: Int>(a: &T, p: &T) -> Result<T> {
    if *p == T::lit(2) {
        return Err(Error::EvenPrime);
    }
    if jacobi(a, p)? != 1 {
        return Err(Error::NotAResidue {
            a: a.to_string(),
            p: p.to_string(),
        });
    }
    let a = a.mod_floor(p);
    let one = T::one();
    let two = T::lit(2);

    // p - 1 = q * 2^s with q odd
    let mut q = p.clone() - one.clone();
    let mut s = 0u32;
    while q.is_even() {
        q = q / two.clone();
        s += 1;
    }

    let root = if s == 1 {
        let e = (p.clone() + one.clone()) / T::lit(4);
        mod_pow(&a, &e, p)
    } else {
        // smallest nonresidue; deterministic, so the result never depends on a random draw
        let mut z = two.clone();
        while jacobi(&z, p)? != -1 {
            z = z + one.clone();
        }
        let mut m = s;
        let mut c = mod_pow(&z, &q, p);
        let mut t = mod_pow(&a, &q, p);
        let mut r = mod_pow(&a, &((q.clone() + one.clone()) / two.clone()), p);
        while !t.is_one() {
            let mut i = 0u32;
            let mut t2 = t.clone();
            while !t2.is_one() {
                t2 = t2.mul_mod(&t2, p);
                i += 1;
            }
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = b.mul_mod(&b, p);
            }
            m = i;
            c = b.mul_mod(&b, p);
            t = t.mul_mod(&c, p);
            r = r.mul_mod(&b, p);
        }
        r
    };

    let other = p.clone() - root.clone();
    Ok(if other < root { other } else { root })
}

const SMALL_PRIMES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Miller-Rabin with the fixed bases 2, 3, ..., 37.
///
/// Deterministic for every `n < 3.3 * 10^24`, which covers all 64-bit inputs.
/// Above that the answer is a strong probable-prime test to those bases.
pub fn is_prime<T: Int>(n: &T) -> bool {
    if *n < T::lit(2) {
        return false;
    }
    for &sp in &SMALL_PRIMES {
        let sp = T::lit(sp as i64);
        if *n == sp {
            return true;
        }
        if n.is_multiple_of(&sp) {
            return false;
        }
    }
    let one = T::one();
    let n_minus_1 = n.clone() - one.clone();
    let mut d = n_minus_1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d = d / T::lit(2);
        s += 1;
    }
    'bases: for &base in &SMALL_PRIMES {
        let mut x = mod_pow(&T::lit(base as i64), &d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.mul_mod(&x, n);
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// All primes `<= limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i.saturating_mul(i);
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// The canonical primitive h-th root of unity mod p, for h in {2, 3, 4}.
pub fn canonical_root_of_unity<T: Int>(p: &T, h: u32) -> Result<T> {
    check_order(p, h)?;
    let one = T::one();
    Ok(match h {
        2 => p.clone() - one,
        4 => sqrt_mod(&(p.clone() - one), p)?,
        3 => {
            // roots of x^2 + x + 1 are (-1 +- sqrt(-3)) / 2
            let r = sqrt_mod(&(p.clone() - T::lit(3)), p)?;
            let half = mod_inverse(&T::lit(2), p).expect("p is odd");
            let z1 = (r.clone() - one.clone()).mod_floor(p).mul_mod(&half, p);
            let z2 = (p.clone() - r - one).mod_floor(p).mul_mod(&half, p);
            if z1 < z2 {
                z1
            } else {
                z2
            }
        }
        _ => unreachable!(),
    })
}

fn check_order<T: Int>(p: &T, h: u32) -> Result<()> {
    if !(2..=4).contains(&h) {
        return Err(Error::PreconditionFailed(format!(
            "root of unity order {h} is not in {{2, 3, 4}}"
        )));
    }
    if *p == T::lit(2) {
        return Err(Error::EvenPrime);
    }
    if !(p.clone() - T::one()).is_multiple_of(&T::lit(h as i64)) {
        return Err(Error::WrongResidueClass {
            p: p.to_string(),
            order: h,
        });
    }
    Ok(())
}

/// Express a residue `v` with `v^h = 1 mod p` as a power of the canonical
/// primitive h-th root of unity.
pub fn classify_root_of_unity<T: Int>(v: &T, p: &T, h: u32) -> Result<RootOfUnityValue> {
    check_order(p, h)?;
    let v = v.mod_floor(p);
    if !mod_pow(&v, &T::lit(h as i64), p).is_one() {
        return Err(Error::NotARootOfUnity {
            value: v.to_string(),
            p: p.to_string(),
            order: h,
        });
    }
    let zeta = canonical_root_of_unity(p, h)?;
    let mut power = T::one();
    for e in 0..h {
        if power == v {
            return Ok(RootOfUnityValue::new(h, e));
        }
        power = power.mul_mod(&zeta, p);
    }
    unreachable!("the h-th roots of unity mod p are exactly the powers of zeta")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn mod_pow_examples() {
        assert_eq!(mod_pow(&2i64, &10, &1000), 24);
        assert_eq!(mod_pow(&5i64, &0, &7), 1);
        assert_eq!(mod_pow(&81i64, &39, &157), 1);
        assert_eq!(mod_pow(&-2i64, &3, &7), 6);
        let big = mod_pow(&BigInt::from(81), &BigInt::from(39), &BigInt::from(157));
        assert_eq!(big, BigInt::from(1));
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi(&17i64, &13), Ok(1));
        assert_eq!(jacobi(&-23i64, &13), Ok(1));
        for a in -5i64..5 {
            assert_eq!(jacobi(&a, &1), Ok(1));
        }
        assert_eq!(jacobi(&2i64, &3), Ok(-1));
        assert_eq!(jacobi(&6i64, &9), Ok(0));
        assert!(jacobi(&3i64, &8).is_err());
        assert!(jacobi(&3i64, &-7).is_err());
        assert!(jacobi(&3i64, &0).is_err());
    }

    #[test]
    fn sqrt_mod_examples() {
        assert_eq!(sqrt_mod(&4i64, &13), Ok(2));
        assert_eq!(sqrt_mod(&39i64, &61), Ok(10));
        assert_eq!(sqrt_mod(&39i64, &157), Ok(14));
        // p = 1 mod 16 exercises the Tonelli-Shanks loop
        assert_eq!(sqrt_mod(&2i64, &17), Ok(6));
        assert!(matches!(
            sqrt_mod(&5i64, &13),
            Err(Error::NotAResidue { .. })
        ));
        assert_eq!(sqrt_mod(&1i64, &2), Err(Error::EvenPrime));
    }

    #[test]
    fn is_prime_examples() {
        assert!(is_prime(&61i64));
        assert!(!is_prime(&1i64));
        assert!(!is_prime(&2183i64));
        assert!(!is_prime(&0i64));
        assert!(!is_prime(&-7i64));
        assert!(is_prime(&2i64));
        // strong pseudoprime to every base up to 31; only 37 exposes it
        assert!(!is_prime(&3825123056546413051i64));
        assert!(is_prime(&18446744073709551557i128));
    }

    #[test]
    fn sieve_matches_primality() {
        let sieve = primes_up_to(2000);
        let direct: Vec<u64> = (0..=2000u64).filter(|&n| is_prime(&(n as i64))).collect();
        assert_eq!(sieve, direct);
        assert!(primes_up_to(1).is_empty());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_root_of_unity(&1i64, &13, 3).unwrap().exponent, 0);
        let minus_one = classify_root_of_unity(&60i64, &61, 4).unwrap();
        assert_eq!(minus_one.exponent, 2);
        assert_eq!(minus_one.as_sign(), Some(-1));
        let cube = classify_root_of_unity(&9i64, &13, 3).unwrap();
        assert_ne!(cube.exponent, 0);
        assert!(matches!(
            classify_root_of_unity(&2i64, &13, 3),
            Err(Error::NotARootOfUnity { .. })
        ));
        assert!(matches!(
            classify_root_of_unity(&1i64, &11, 4),
            Err(Error::WrongResidueClass { .. })
        ));
    }

    #[test]
    fn canonical_roots_are_minimal() {
        // order-3 elements mod 13 are 3 and 9
        assert_eq!(canonical_root_of_unity(&13i64, 3), Ok(3));
        // square roots of -1 mod 13 are 5 and 8
        assert_eq!(canonical_root_of_unity(&13i64, 4), Ok(5));
        assert_eq!(canonical_root_of_unity(&13i64, 2), Ok(12));
    }

    #[test]
    fn display() {
        assert_eq!(RootOfUnityValue::new(4, 1).to_string(), "i");
        assert_eq!(RootOfUnityValue::new(4, 3).to_string(), "-i");
        assert_eq!(RootOfUnityValue::new(4, 2).to_string(), "-1");
        assert_eq!(RootOfUnityValue::new(3, 0).to_string(), "+1");
        assert_eq!(RootOfUnityValue::new(3, 2).to_string(), "zeta3^2");
    }
}
