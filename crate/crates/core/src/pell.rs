//! Fundamental units of real quadratic fields.
//!
//! Elements of the ring of integers of `Q(sqrt d)` are kept in half
//! coordinates `(t + u sqrt d) / 2`, which covers `d = 1 mod 4` and
//! `d = 2, 3 mod 4` with one representation: the element is integral exactly
//! when `t^2 - d u^2 = 0 mod 4`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::int::Int;
use crate::modarith::{jacobi, mod_inverse};

/// Default cap on continued-fraction steps before giving up.
pub const DEFAULT_ITERATION_CAP: u64 = 1_000_000;

/// `(t + u sqrt d) / 2`, an algebraic integer of `Q(sqrt d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticInteger<T> {
    d: T,
    t: T,
    u: T,
}

impl<T: Int> QuadraticInteger<T> {
    pub fn new(d: T, t: T, u: T) -> Result<Self> {
        if !is_integral(&d, &t, &u) {
            return Err(Error::PreconditionFailed(format!(
                "({t} + {u}*sqrt({d}))/2 is not an algebraic integer"
            )));
        }
        Ok(Self { d, t, u })
    }

    pub fn d(&self) -> &T {
        &self.d
    }

    pub fn t(&self) -> &T {
        &self.t
    }

    pub fn u(&self) -> &T {
        &self.u
    }

    pub fn conjugate(&self) -> Self {
        Self {
            d: self.d.clone(),
            t: self.t.clone(),
            u: -self.u.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            d: self.d.clone(),
            t: -self.t.clone(),
            u: -self.u.clone(),
        }
    }

    /// `(t^2 - d u^2) / 4`.
    pub fn norm(&self) -> Result<T> {
        let tt = self.t.checked_mul(&self.t).ok_or(Error::Overflow("norm"))?;
        let duu = self
            .u
            .checked_mul(&self.u)
            .and_then(|v| v.checked_mul(&self.d))
            .ok_or(Error::Overflow("norm"))?;
        Ok(tt.checked_sub(&duu).ok_or(Error::Overflow("norm"))? / T::lit(4))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.d != other.d {
            return Err(Error::PreconditionFailed(format!(
                "elements of Q(sqrt {}) and Q(sqrt {})",
                self.d, other.d
            )));
        }
        let ovf = || Error::Overflow("quadratic integer product");
        let tt = self.t.checked_mul(&other.t).ok_or_else(ovf)?;
        let duu = self
            .u
            .checked_mul(&other.u)
            .and_then(|v| v.checked_mul(&self.d))
            .ok_or_else(ovf)?;
        let tu = self.t.checked_mul(&other.u).ok_or_else(ovf)?;
        let ut = self.u.checked_mul(&other.t).ok_or_else(ovf)?;
        let two = T::lit(2);
        Ok(Self {
            d: self.d.clone(),
            t: tt.checked_add(&duu).ok_or_else(ovf)? / two.clone(),
            u: tu.checked_add(&ut).ok_or_else(ovf)? / two,
        })
    }

    /// Image in `Z/lZ` under `sqrt d -> root`.
    pub fn reduce_mod(&self, l: &T, root: &T) -> Result<T> {
        if *l == T::lit(2) {
            return Err(Error::EvenPrime);
        }
        if !(root.clone() * root.clone() - self.d.clone()).is_multiple_of(l) {
            return Err(Error::RootMismatch {
                root: root.to_string(),
                d: self.d.to_string(),
                p: l.to_string(),
            });
        }
        let half =
            mod_inverse(&T::lit(2), l).ok_or_else(|| Error::InvalidModulus(l.to_string()))?;
        let t = self.t.mod_floor(l);
        let u = self.u.mod_floor(l);
        let x = (t + u.mul_mod(root, l)).mod_floor(l);
        Ok(x.mul_mod(&half, l))
    }
}

fn is_integral<T: Int>(d: &T, t: &T, u: &T) -> bool {
    let four = T::lit(4);
    let tt = t.mod_floor(&four);
    let uu = u.mod_floor(&four);
    (tt.clone() * tt - d.mod_floor(&four) * uu.clone() * uu).is_multiple_of(&four)
}

impl<T: Int> fmt::Display for QuadraticInteger<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let two = T::lit(2);
        let halves = !(self.t.is_even() && self.u.is_even());
        let (t, u) = if halves {
            (self.t.clone(), self.u.clone())
        } else {
            (self.t.clone() / two.clone(), self.u.clone() / two)
        };
        let sign = if u.is_negative() { "-" } else { "+" };
        let u = u.abs();
        let body = if u.is_one() {
            format!("{t} {sign} sqrt({})", self.d)
        } else {
            format!("{t} {sign} {u}*sqrt({})", self.d)
        };
        if halves {
            write!(f, "({body})/2")
        } else {
            write!(f, "{body}")
        }
    }
}

/// A unit `eps = (t + u sqrt d) / 2 > 1` with `t^2 - d u^2 = 4 * norm`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticUnit<T> {
    elem: QuadraticInteger<T>,
    norm: i8,
}

impl<T: Int> QuadraticUnit<T> {
    pub fn new(d: T, t: T, u: T) -> Result<Self> {
        if !t.is_positive() || !u.is_positive() {
            return Err(Error::PreconditionFailed("a unit > 1 has t, u > 0".into()));
        }
        let elem = QuadraticInteger::new(d, t, u)?;
        let n = elem.norm()?;
        let norm = if n.is_one() {
            1
        } else if n == -T::one() {
            -1
        } else {
            return Err(Error::PreconditionFailed(format!(
                "{elem} has norm {n}, not +-1"
            )));
        };
        Ok(Self { elem, norm })
    }

    pub fn d(&self) -> &T {
        &self.elem.d
    }

    pub fn t(&self) -> &T {
        &self.elem.t
    }

    pub fn u(&self) -> &T {
        &self.elem.u
    }

    pub fn norm(&self) -> i8 {
        self.norm
    }

    pub fn element(&self) -> &QuadraticInteger<T> {
        &self.elem
    }

    pub fn conjugate(&self) -> QuadraticInteger<T> {
        self.elem.conjugate()
    }

    /// `eps^k` for `k >= 1`.
    pub fn pow(&self, k: u32) -> Result<Self> {
        assert!(k >= 1);
        let mut acc = self.elem.clone();
        for _ in 1..k {
            acc = acc.mul(&self.elem)?;
        }
        let norm = if self.norm < 0 && k % 2 == 1 { -1 } else { 1 };
        Ok(Self { elem: acc, norm })
    }
}

impl<T: Int> fmt::Display for QuadraticUnit<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.elem.fmt(f)
    }
}

impl<T: Int> Serialize for QuadraticUnit<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("QuadraticUnit", 5)?;
        st.serialize_field("d", &self.d().to_string())?;
        st.serialize_field("t", &self.t().to_string())?;
        st.serialize_field("u", &self.u().to_string())?;
        st.serialize_field("norm", &self.norm)?;
        st.serialize_field("display", &self.to_string())?;
        st.end()
    }
}

pub fn is_squarefree<T: Int>(d: &T) -> bool {
    if *d <= T::one() {
        return false;
    }
    let mut n = d.clone();
    let mut p = T::lit(2);
    while p.clone() * p.clone() <= n {
        if n.is_multiple_of(&p) {
            n = n / p.clone();
            if n.is_multiple_of(&p) {
                return false;
            }
        }
        p = p + T::one();
    }
    true
}

/// Fundamental unit of the ring of integers of `Q(sqrt d)`.
pub fn fundamental_unit<T: Int>(d: &T) -> Result<QuadraticUnit<T>> {
    fundamental_unit_with_cap(d, DEFAULT_ITERATION_CAP)
}

/// Continued fraction of `(P0 + sqrt d) / Q0` with `(P0, Q0) = (1, 2)` for
/// `d = 1 mod 4` and `(0, 1)` otherwise. With period `l` detected by the
/// state `(P, Q)` returning to `(P1, Q1)`, the convergent data
/// `G = Q0*A - P0*B` and `B` at index `l - 1` solve `G^2 - d B^2 = (-1)^l Q0^2`.
pub fn fundamental_unit_with_cap<T: Int>(d: &T, cap: u64) -> Result<QuadraticUnit<T>> {
    if !is_squarefree(d) {
        return Err(Error::NotSquarefree(d.to_string()));
    }
    let ovf = || Error::Overflow("continued fraction");
    let one_mod_4 = d.mod_floor(&T::lit(4)).is_one();
    let (p0, q0) = if one_mod_4 {
        (T::one(), T::lit(2))
    } else {
        (T::zero(), T::one())
    };
    let root = d.sqrt();

    let (mut g2, mut g1) = (-p0.clone(), q0.clone());
    let (mut b2, mut b1) = (T::one(), T::zero());
    let (mut p, mut q) = (p0, q0);
    let mut first_state: Option<(T, T)> = None;

    for step in 0..cap {
        let a = (p.clone() + root.clone()).div_floor(&q);
        let g = a
            .checked_mul(&g1)
            .and_then(|v| v.checked_add(&g2))
            .ok_or_else(ovf)?;
        let b = a
            .checked_mul(&b1)
            .and_then(|v| v.checked_add(&b2))
            .ok_or_else(ovf)?;
        let p_next = a.clone() * q.clone() - p.clone();
        let q_next = (d.clone() - p_next.clone() * p_next.clone()) / q.clone();

        match &first_state {
            None => first_state = Some((p_next.clone(), q_next.clone())),
            Some((p1, q1)) if *p1 == p_next && *q1 == q_next => {
                // g1, b1 hold index l - 1
                let (t, u) = if one_mod_4 {
                    (g1, b1)
                } else {
                    let two = T::lit(2);
                    (
                        g1.checked_mul(&two).ok_or_else(ovf)?,
                        b1.checked_mul(&two).ok_or_else(ovf)?,
                    )
                };
                let unit = QuadraticUnit::new(d.clone(), t, u)?;
                debug_assert_eq!(unit.norm() == 1, step % 2 == 0);
                return Ok(unit);
            }
            Some(_) => {}
        }

        g2 = std::mem::replace(&mut g1, g);
        b2 = std::mem::replace(&mut b1, b);
        p = p_next;
        q = q_next;
    }
    Err(Error::RegulatorTooLarge {
        d: d.to_string(),
        cap,
    })
}

/// The `s` in `{+1, -1}` with `s * eps = 1 mod 4`.
pub fn normalize_sign<T: Int>(eps: &QuadraticUnit<T>) -> Result<i8> {
    let four = T::lit(4);
    for s in [1i8, -1] {
        // eps - s = ((t - 2s) + u sqrt d) / 2, divisible by 4 iff ((t - 2s)/4 + (u/4) sqrt d)/2 is integral
        let x = eps.t().clone() - T::lit(2 * s as i64);
        if x.is_multiple_of(&four)
            && eps.u().is_multiple_of(&four)
            && is_integral(
                eps.d(),
                &(x / four.clone()),
                &(eps.u().clone() / four.clone()),
            )
        {
            return Ok(s);
        }
    }
    Err(Error::NotCongruentPlusMinusOne)
}

/// `eps` in the residue field of a degree-1 prime above `l`, with `sqrt d -> root`.
pub fn unit_mod_prime<T: Int>(eps: &QuadraticUnit<T>, l: &T, root: &T) -> Result<T> {
    if *l == T::lit(2) {
        return Err(Error::EvenPrime);
    }
    if jacobi(eps.d(), l)? != 1 {
        return Err(Error::NotSplit {
            p: l.to_string(),
            disc: eps.d().to_string(),
        });
    }
    eps.element().reduce_mod(l, root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn fundamental_unit_examples() {
        let e39 = fundamental_unit(&39i64).unwrap();
        assert_eq!((e39.t(), e39.u(), e39.norm()), (&50, &8, 1));
        assert_eq!(e39.to_string(), "25 + 4*sqrt(39)");
        let e69 = fundamental_unit(&69i64).unwrap();
        assert_eq!((e69.t(), e69.u(), e69.norm()), (&25, &3, 1));
        assert_eq!(e69.to_string(), "(25 + 3*sqrt(69))/2");
        let e17 = fundamental_unit(&17i64).unwrap();
        assert_eq!((e17.t(), e17.u(), e17.norm()), (&8, &2, -1));
        assert_eq!(e17.to_string(), "4 + sqrt(17)");
        let e5 = fundamental_unit(&5i64).unwrap();
        assert_eq!((e5.t(), e5.u(), e5.norm()), (&1, &1, -1));
        let e2 = fundamental_unit(&2i64).unwrap();
        assert_eq!((e2.t(), e2.u(), e2.norm()), (&2, &2, -1));
        let e111 = fundamental_unit(&111i64).unwrap();
        assert_eq!((e111.t(), e111.u()), (&590, &56));
        let e93 = fundamental_unit(&93i64).unwrap();
        assert_eq!((e93.t(), e93.u()), (&29, &3));
    }

    #[test]
    fn large_regulator_needs_wide_scalar() {
        // 1728148040 + 140634693 sqrt(151): t^2 no longer fits in i64
        assert!(matches!(fundamental_unit(&151i64), Err(Error::Overflow(_))));
        let e = fundamental_unit(&151i128).unwrap();
        assert_eq!((e.t(), e.u()), (&3456296080, &281269386));
        let big = fundamental_unit(&BigInt::from(991)).unwrap();
        assert_eq!(big.norm(), 1);
        assert!(matches!(
            fundamental_unit(&991i128),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn rejects_non_squarefree() {
        assert!(matches!(
            fundamental_unit(&12i64),
            Err(Error::NotSquarefree(_))
        ));
        assert!(matches!(
            fundamental_unit(&1i64),
            Err(Error::NotSquarefree(_))
        ));
        assert!(matches!(
            fundamental_unit(&9i64),
            Err(Error::NotSquarefree(_))
        ));
    }

    #[test]
    fn iteration_cap() {
        assert!(matches!(
            fundamental_unit_with_cap(&94i64, 3),
            Err(Error::RegulatorTooLarge { .. })
        ));
    }

    #[test]
    fn normalize_sign_examples() {
        let e39 = fundamental_unit(&39i64).unwrap();
        assert_eq!(normalize_sign(&e39), Ok(1));
        let e111 = fundamental_unit(&111i64).unwrap();
        assert_eq!(normalize_sign(&e111), Ok(-1));
        assert_eq!(normalize_sign(&e39.pow(2).unwrap()), Ok(1));
        // (25 + 3 sqrt 69)/2 is not congruent to +-1 mod 4
        let e69 = fundamental_unit(&69i64).unwrap();
        assert_eq!(normalize_sign(&e69), Err(Error::NotCongruentPlusMinusOne));
    }

    #[test]
    fn unit_mod_prime_examples() {
        let e39 = fundamental_unit(&39i64).unwrap();
        assert_eq!(unit_mod_prime(&e39, &61, &10), Ok(4));
        let e17 = fundamental_unit(&17i64).unwrap();
        assert_eq!(unit_mod_prime(&e17, &13, &2), Ok(6));
        let e69 = fundamental_unit(&69i64).unwrap();
        assert_eq!(unit_mod_prime(&e69, &13, &2), Ok(9));
        assert!(matches!(
            unit_mod_prime(&e39, &61, &11),
            Err(Error::RootMismatch { .. })
        ));
        assert!(matches!(
            unit_mod_prime(&e39, &11, &1),
            Err(Error::NotSplit { .. })
        ));
    }

    #[test]
    fn conjugate_and_product() {
        let e = fundamental_unit(&17i64).unwrap();
        let prod = e.element().mul(&e.conjugate()).unwrap();
        assert_eq!((prod.t(), prod.u()), (&-2, &0));
        assert_eq!(prod.norm(), Ok(1));
        let sq = e.pow(2).unwrap();
        assert_eq!(sq.norm(), 1);
        assert_eq!((sq.t(), sq.u()), (&66, &16));
    }

    #[test]
    fn integrality() {
        assert!(QuadraticInteger::new(39i64, 1, 1).is_err());
        assert!(QuadraticInteger::new(69i64, 1, 1).is_ok());
        assert!(QuadraticUnit::new(39i64, 2, 2).is_err());
    }
}
