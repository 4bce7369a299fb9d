//! Power residue symbols of quadratic units at split primes, the rational
//! quartic symbol, and root counting for `x^3 - 3x - C` over prime fields.
//!
//! For a prime `l` split in `Q(sqrt d)` the residue field of either prime above
//! `l` is `Z/lZ`; the prime is picked by the image `root` of `sqrt d`. The h-th
//! power residue symbol of `alpha` is the h-th root of unity congruent to
//! `alpha^((l-1)/h)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::int::Int;
use crate::modarith::{
    classify_root_of_unity, is_prime, jacobi, mod_pow, sqrt_mod, RootOfUnityValue,
};
use crate::pell::{QuadraticInteger, QuadraticUnit};

/// One evaluated symbol and the data that fixes it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "T: std::fmt::Display"))]
pub struct SymbolValue<T> {
    pub value: RootOfUnityValue,
    #[serde(serialize_with = "crate::report::as_string")]
    pub prime: T,
    #[serde(serialize_with = "crate::report::as_string")]
    pub root_used: T,
    pub subject: String,
}

impl<T: Int> SymbolValue<T> {
    /// Convention-free predicate: the subject is an h-th power mod the prime.
    pub fn is_power(&self) -> bool {
        self.value.is_one()
    }
}

fn check_symbol_args<T: Int>(d: &T, l: &T, h: u32, sign: i8) -> Result<()> {
    if !(2..=4).contains(&h) {
        return Err(Error::PreconditionFailed(format!(
            "symbol order {h} is not in {{2, 3, 4}}"
        )));
    }
    if sign != 1 && sign != -1 {
        return Err(Error::PreconditionFailed(format!("sign {sign} is not +-1")));
    }
    if *l == T::lit(2) {
        return Err(Error::EvenPrime);
    }
    if !is_prime(l) {
        return Err(Error::NotPrime(l.to_string()));
    }
    if !(l.clone() - T::one()).is_multiple_of(&T::lit(h as i64)) {
        return Err(Error::WrongResidueClass {
            p: l.to_string(),
            order: h,
        });
    }
    if d.is_multiple_of(l) {
        return Err(Error::Ramified {
            p: l.to_string(),
            disc: d.to_string(),
        });
    }
    if jacobi(d, l)? != 1 {
        return Err(Error::NotSplit {
            p: l.to_string(),
            disc: d.to_string(),
        });
    }
    Ok(())
}

fn subject<T: Int>(x: &QuadraticInteger<T>, sign: i8) -> String {
    if sign < 0 {
        format!("-({x})")
    } else {
        x.to_string()
    }
}

/// `(sign * x / p)_h` for the prime `p` above `l` where `sqrt d -> root`.
pub fn element_symbol<T: Int>(
    x: &QuadraticInteger<T>,
    l: &T,
    h: u32,
    sign: i8,
    root: &T,
) -> Result<SymbolValue<T>> {
    check_symbol_args(x.d(), l, h, sign)?;
    let mut v = x.reduce_mod(l, root)?;
    if sign < 0 {
        v = (l.clone() - v).mod_floor(l);
    }
    if v.is_zero() {
        return Err(Error::PreconditionFailed(format!(
            "{x} is divisible by a prime above {l}"
        )));
    }
    let e = (l.clone() - T::one()) / T::lit(h as i64);
    let value = classify_root_of_unity(&mod_pow(&v, &e, l), l, h)?;
    Ok(SymbolValue {
        value,
        prime: l.clone(),
        root_used: root.clone(),
        subject: subject(x, sign),
    })
}

/// `(sign * eps / l)_h`, evaluated at the prime where `sqrt d` maps to the
/// smaller square root of `d` mod `l`.
pub fn unit_symbol<T: Int>(
    eps: &QuadraticUnit<T>,
    l: &T,
    h: u32,
    sign: i8,
) -> Result<SymbolValue<T>> {
    check_symbol_args(eps.d(), l, h, sign)?;
    let root = sqrt_mod(eps.d(), l)?;
    element_symbol(eps.element(), l, h, sign, &root)
}

/// The symbol at both primes above `l`: roots `r` and `l - r`.
pub fn conjugate_evaluations<T: Int>(
    eps: &QuadraticUnit<T>,
    l: &T,
    h: u32,
    sign: i8,
) -> Result<(SymbolValue<T>, SymbolValue<T>)> {
    let first = unit_symbol(eps, l, h, sign)?;
    let other_root = l.clone() - first.root_used.clone();
    let second = element_symbol(eps.element(), l, h, sign, &other_root)?;
    Ok((first, second))
}

/// Checks the two evaluations against each other.
///
/// Evaluating at `l - r` is evaluating the conjugate at `r`, and
/// `eps * conj(eps) = N(eps)`, so the product of the two values must be the
/// symbol of the rational integer `N(sign * eps) = N(eps)`. When that symbol is
/// trivial (norm +1, or `(-1/l)_h = 1`) the exponents are inverse, and two
/// `+-1` values are equal.
pub fn conjugation_check<T: Int>(eps: &QuadraticUnit<T>, l: &T, h: u32, sign: i8) -> Result<bool> {
    let (a, b) = conjugate_evaluations(eps, l, h, sign)?;
    let norm = T::lit(eps.norm() as i64).mod_floor(l);
    let e = (l.clone() - T::one()) / T::lit(h as i64);
    let norm_symbol = classify_root_of_unity(&mod_pow(&norm, &e, l), l, h)?;
    let product_ok = a.value.mul(&b.value) == norm_symbol;
    let signs_ok = match (a.value.as_sign(), b.value.as_sign()) {
        (Some(x), Some(y)) if norm_symbol.is_one() => x == y,
        _ => true,
    };
    Ok(product_ok && signs_ok)
}

/// `(a/p)_4` for a quadratic residue `a` mod a prime `p = 1 mod 4`, as +-1.
pub fn rational_quartic<T: Int>(a: &T, p: &T) -> Result<i8> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if !(p.clone() - T::one()).is_multiple_of(&T::lit(4)) {
        return Err(Error::WrongResidueClass {
            p: p.to_string(),
            order: 4,
        });
    }
    if jacobi(a, p)? != 1 {
        return Err(Error::NotQuadraticResidue {
            a: a.to_string(),
            p: p.to_string(),
        });
    }
    let v = mod_pow(a, &((p.clone() - T::one()) / T::lit(4)), p);
    if v.is_one() {
        Ok(1)
    } else {
        debug_assert_eq!(v, p.clone() - T::one());
        Ok(-1)
    }
}

/// `x^3 - 3x - C`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(bound(serialize = "T: std::fmt::Display"))]
pub struct CubicPolynomial<T> {
    #[serde(serialize_with = "crate::report::as_string")]
    pub constant_term: T,
}

impl<T: Int> CubicPolynomial<T> {
    pub fn new(constant_term: T) -> Self {
        Self { constant_term }
    }

    /// `-4(-3)^3 - 27 C^2 = 108 - 27 C^2`.
    pub fn discriminant(&self) -> T {
        T::lit(108) - T::lit(27) * self.constant_term.clone() * self.constant_term.clone()
    }

    pub fn evaluate_mod(&self, x: &T, p: &T) -> T {
        let x = x.mod_floor(p);
        let x3 = x.mul_mod(&x, p).mul_mod(&x, p);
        (x3 - T::lit(3) * x - self.constant_term.clone()).mod_floor(p)
    }
}

impl<T: Int> std::fmt::Display for CubicPolynomial<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "x^3 - 3x - {}", self.constant_term)
    }
}

/// Residues mod `(x^3 - 3x - C, p)` as coefficient triples `c0 + c1 x + c2 x^2`.
struct CubicRing<'a, T> {
    c: T,
    p: &'a T,
}

impl<T: Int> CubicRing<'_, T> {
    fn mul(&self, a: &[T; 3], b: &[T; 3]) -> [T; 3] {
        let p = self.p;
        let mut prod: [T; 5] = std::array::from_fn(|_| T::zero());
        for i in 0..3 {
            for j in 0..3 {
                prod[i + j] = (prod[i + j].clone() + a[i].mul_mod(&b[j], p)).mod_floor(p);
            }
        }
        // x^4 = 3x^2 + C x, x^3 = 3x + C
        let three = T::lit(3);
        let [c0, c1, c2, c3, c4] = prod;
        let r2 = c2 + c4.mul_mod(&three, p);
        let r1 = c1 + c4.mul_mod(&self.c, p) + c3.mul_mod(&three, p);
        let r0 = c0 + c3.mul_mod(&self.c, p);
        [r0.mod_floor(p), r1.mod_floor(p), r2.mod_floor(p)]
    }

    fn pow_x(&self, e: &T) -> [T; 3] {
        let mut result = [T::one(), T::zero(), T::zero()];
        let mut base = [T::zero(), T::one(), T::zero()];
        let mut e = e.clone();
        let two = T::lit(2);
        while !e.is_zero() {
            if e.is_odd() {
                result = self.mul(&result, &base);
            }
            e = e / two.clone();
            if !e.is_zero() {
                base = self.mul(&base, &base);
            }
        }
        result
    }
}

fn trim<T: Int>(mut v: Vec<T>) -> Vec<T> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Monic gcd over `Z/pZ` of coefficient vectors (lowest degree first).
fn poly_gcd<T: Int>(a: Vec<T>, b: Vec<T>, p: &T) -> Vec<T> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let inv = crate::modarith::mod_inverse(b.last().unwrap(), p).expect("p is prime");
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let factor = a.last().unwrap().mul_mod(&inv, p);
            for (i, bc) in b.iter().enumerate() {
                a[i + shift] = (a[i + shift].clone() - factor.mul_mod(bc, p)).mod_floor(p);
            }
            a = trim(a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(lead) = a.last() {
        let inv = crate::modarith::mod_inverse(lead, p).expect("p is prime");
        for c in a.iter_mut() {
            *c = c.mul_mod(&inv, p);
        }
    }
    a
}

/// Number of roots of `f` in `Z/pZ`, as `deg gcd(x^p - x, f)`.
pub fn cubic_root_count<T: Int>(f: &CubicPolynomial<T>, p: &T) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let bad = T::lit(6) * f.discriminant();
    if bad.is_multiple_of(p) {
        return Err(Error::BadPrime {
            p: p.to_string(),
            disc: f.discriminant().to_string(),
        });
    }
    let ring = CubicRing {
        c: f.constant_term.mod_floor(p),
        p,
    };
    let mut xp = ring.pow_x(p).to_vec();
    xp[1] = (xp[1].clone() - T::one()).mod_floor(p);
    let modulus = vec![
        (-f.constant_term.clone()).mod_floor(p),
        (-T::lit(3)).mod_floor(p),
        T::zero(),
        T::one(),
    ];
    let g = poly_gcd(modulus, xp, p);
    Ok(g.len().saturating_sub(1) as u32)
}
