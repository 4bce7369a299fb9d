//! Positive definite binary quadratic forms `ax^2 + bxy + cy^2`: reduction,
//! Dirichlet composition, class enumeration and the map from split primes to
//! form classes.
//!
//! Classes of primitive forms of discriminant `D < 0` are identified with the
//! ideal classes of the order of discriminant `D`; a split prime `l` goes to the
//! class of `(l, b, (b^2 - D) / 4l)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::int::Int;
use crate::modarith::{is_prime, jacobi, sqrt_mod};

/// Default limit on `|D|` for class enumeration.
pub const DEFAULT_DISC_BOUND: u64 = 10_000_000;

/// Largest class number [`group_structure`] accepts.
pub const STRUCTURE_BOUND: u64 = 10_000;

/// Largest integer [`representations`] will search for.
pub const REPRESENTATION_BOUND: u64 = 1_000_000_000_000;

/// A primitive positive definite form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadraticForm<T> {
    a: T,
    b: T,
    c: T,
}

impl<T: Int> QuadraticForm<T> {
    pub fn new(a: T, b: T, c: T) -> Result<Self> {
        let f = Self { a, b, c };
        if !f.a.is_positive() || !f.discriminant().is_negative() {
            return Err(Error::NotPositiveDefinite(f.to_string()));
        }
        if !f.a.gcd(&f.b).gcd(&f.c).is_one() {
            return Err(Error::Imprimitive(f.to_string()));
        }
        Ok(f)
    }

    /// The form `(a, b, (b^2 - D) / 4a)` of discriminant `disc`.
    pub fn from_disc(a: T, b: T, disc: &T) -> Result<Self> {
        check_disc(disc)?;
        let four_a = T::lit(4) * a.clone();
        let num = b.clone() * b.clone() - disc.clone();
        if four_a.is_zero() || !num.is_multiple_of(&four_a) {
            return Err(Error::PreconditionFailed(format!(
                "no form ({a}, {b}, *) has discriminant {disc}"
            )));
        }
        Self::new(a, b, num / four_a)
    }

    /// `x^2 + xy + (1-D)/4 y^2` or `x^2 - (D/4) y^2`.
    pub fn principal(disc: &T) -> Result<Self> {
        check_disc(disc)?;
        let b = disc.mod_floor(&T::lit(2));
        Self::from_disc(T::one(), b, disc)
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn c(&self) -> &T {
        &self.c
    }

    pub fn discriminant(&self) -> T {
        self.b.clone() * self.b.clone() - T::lit(4) * self.a.clone() * self.c.clone()
    }

    /// `(a, -b, c)`, the inverse class.
    pub fn opposite(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -self.b.clone(),
            c: self.c.clone(),
        }
    }

    pub fn evaluate(&self, x: &T, y: &T) -> T {
        self.a.clone() * x.clone() * x.clone()
            + self.b.clone() * x.clone() * y.clone()
            + self.c.clone() * y.clone() * y.clone()
    }

    /// `|b| <= a <= c`, with `b >= 0` if `|b| = a` or `a = c`.
    pub fn is_reduced(&self) -> bool {
        let abs_b = self.b.abs();
        if abs_b > self.a || self.a > self.c {
            return false;
        }
        if abs_b == self.a || self.a == self.c {
            return !self.b.is_negative();
        }
        true
    }

    /// The unique reduced form properly equivalent to `self`.
    pub fn reduce(&self) -> Self {
        let disc = self.discriminant();
        let two = T::lit(2);
        let four = T::lit(4);
        let (mut a, mut b, mut c) = (self.a.clone(), self.b.clone(), self.c.clone());
        loop {
            // b into (-a, a]
            if b.abs() > a || b == -a.clone() {
                let two_a = two.clone() * a.clone();
                b = a.clone() - (a.clone() - b).mod_floor(&two_a);
                c = (b.clone() * b.clone() - disc.clone()) / (four.clone() * a.clone());
            }
            if a > c {
                std::mem::swap(&mut a, &mut c);
                b = -b;
                continue;
            }
            if a == c && b.is_negative() {
                b = -b;
            }
            break;
        }
        Self { a, b, c }
    }
}

impl<T: Int> fmt::Display for QuadraticForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

impl<T: Int> Serialize for QuadraticForm<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn check_disc<T: Int>(disc: &T) -> Result<()> {
    let r = disc.mod_floor(&T::lit(4));
    if !disc.is_negative() || !(r.is_zero() || r.is_one()) {
        return Err(Error::InvalidDiscriminant(disc.to_string()));
    }
    Ok(())
}

/// Free-function form of [`QuadraticForm::reduce`].
pub fn reduce<T: Int>(f: &QuadraticForm<T>) -> QuadraticForm<T> {
    f.reduce()
}

/// An equivalence class of forms, stored as its reduced representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormClass<T> {
    rep: QuadraticForm<T>,
    disc: T,
}

impl<T: Int> FormClass<T> {
    pub fn new(f: &QuadraticForm<T>) -> Self {
        Self {
            disc: f.discriminant(),
            rep: f.reduce(),
        }
    }

    pub fn principal(disc: &T) -> Result<Self> {
        Ok(Self::new(&QuadraticForm::principal(disc)?))
    }

    pub fn rep(&self) -> &QuadraticForm<T> {
        &self.rep
    }

    pub fn disc(&self) -> &T {
        &self.disc
    }

    pub fn is_principal(&self) -> bool {
        self.rep.a.is_one()
    }

    pub fn inverse(&self) -> Self {
        Self::new(&self.rep.opposite())
    }

    /// True for the principal class and the classes of order 2.
    pub fn is_ambiguous(&self) -> bool {
        *self == self.inverse()
    }
}

impl<T: Int> fmt::Display for FormClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(f)
    }
}

impl<T: Int> Serialize for FormClass<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Dirichlet composition followed by reduction.
pub fn compose<T: Int>(f: &FormClass<T>, g: &FormClass<T>) -> Result<FormClass<T>> {
    if f.disc != g.disc {
        return Err(Error::DiscMismatch(f.disc.to_string(), g.disc.to_string()));
    }
    let (f1, f2) = if f.rep.a > g.rep.a {
        (&g.rep, &f.rep)
    } else {
        (&f.rep, &g.rep)
    };
    let (a1, b1) = (&f1.a, &f1.b);
    let (a2, b2, c2) = (&f2.a, &f2.b, &f2.c);
    let two = T::lit(2);

    let s = (b1.clone() + b2.clone()) / two.clone();
    let n = b2.clone() - s.clone();

    let (y1, d) = if a2.is_multiple_of(a1) {
        (T::zero(), a1.clone())
    } else {
        let e = a2.extended_gcd(a1);
        (e.x, e.gcd)
    };
    let (x2, y2, d1) = if s.is_multiple_of(&d) {
        (T::zero(), -T::one(), d.clone())
    } else {
        let e = s.extended_gcd(&d);
        (e.x, -e.y, e.gcd)
    };

    let v1 = a1.clone() / d1.clone();
    let v2 = a2.clone() / d1.clone();
    let r = (y1 * y2 * n - x2 * c2.clone()).mod_floor(&v1);
    let b3 = b2.clone() + two * v2.clone() * r;
    let a3 = v1 * v2;
    let c3 = (b3.clone() * b3.clone() - f.disc.clone()) / (T::lit(4) * a3.clone());
    let composite = QuadraticForm {
        a: a3,
        b: b3,
        c: c3,
    };
    debug_assert_eq!(composite.discriminant(), f.disc);
    Ok(FormClass::new(&composite))
}

/// `f^k`; negative `k` uses the inverse class.
pub fn class_pow<T: Int>(f: &FormClass<T>, k: i64) -> FormClass<T> {
    let mut base = if k < 0 { f.inverse() } else { f.clone() };
    let mut e = k.unsigned_abs();
    let mut acc = FormClass::principal(&f.disc).expect("class discriminant is valid");
    while e > 0 {
        if e & 1 == 1 {
            acc = compose(&acc, &base).expect("same discriminant");
        }
        e >>= 1;
        if e > 0 {
            base = compose(&base, &base).expect("same discriminant");
        }
    }
    acc
}

/// All classes of primitive forms of one negative discriminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGroup<T> {
    disc: T,
    classes: Vec<FormClass<T>>,
    class_number: u64,
}

impl<T: Int> ClassGroup<T> {
    pub fn disc(&self) -> &T {
        &self.disc
    }

    /// Reduced representatives, sorted by `(a, b)`; the principal class is first.
    pub fn classes(&self) -> &[FormClass<T>] {
        &self.classes
    }

    pub fn class_number(&self) -> u64 {
        self.class_number
    }

    pub fn principal(&self) -> &FormClass<T> {
        &self.classes[0]
    }

    pub fn position(&self, f: &FormClass<T>) -> Option<usize> {
        self.classes.binary_search(f).ok()
    }

    pub fn contains(&self, f: &FormClass<T>) -> bool {
        self.position(f).is_some()
    }

    /// Multiplication table by class index.
    pub fn cayley_table(&self) -> Vec<Vec<usize>> {
        self.classes
            .iter()
            .map(|x| {
                self.classes
                    .iter()
                    .map(|y| {
                        let z = compose(x, y).expect("same discriminant");
                        self.position(&z)
                            .expect("group is closed under composition")
                    })
                    .collect()
            })
            .collect()
    }
}

/// Enumerate the reduced primitive forms of `disc` with `|disc| <= 10^7`.
pub fn enumerate_classes<T: Int>(disc: &T) -> Result<ClassGroup<T>> {
    enumerate_classes_bounded(disc, DEFAULT_DISC_BOUND)
}

pub fn enumerate_classes_bounded<T: Int>(disc: &T, bound: u64) -> Result<ClassGroup<T>> {
    check_disc(disc)?;
    let abs_d = disc.abs();
    if abs_d.to_u64().is_none_or(|v| v > bound) {
        return Err(Error::BoundExceeded {
            what: "|D|",
            value: abs_d.to_string(),
            bound: bound.to_string(),
        });
    }
    let abs_d = abs_d.to_i64().expect("bounded");
    let d = -abs_d;
    let mut forms = Vec::new();
    let mut a = 1i64;
    while 3 * a * a <= abs_d {
        let mut b = -a + 1;
        if (b - d).rem_euclid(2) != 0 {
            b += 1;
        }
        while b <= a {
            let num = b * b - d;
            if num % (4 * a) == 0 {
                let c = num / (4 * a);
                let boundary = b.abs() == a || a == c;
                if c >= a
                    && !(boundary && b < 0)
                    && num_integer::gcd(num_integer::gcd(a, b), c) == 1
                {
                    forms.push((a, b, c));
                }
            }
            b += 2;
        }
        a += 1;
    }
    let classes: Vec<FormClass<T>> = forms
        .into_iter()
        .map(|(a, b, c)| {
            let rep = QuadraticForm {
                a: T::lit(a),
                b: T::lit(b),
                c: T::lit(c),
            };
            FormClass {
                rep,
                disc: disc.clone(),
            }
        })
        .collect();
    debug_assert!(classes.windows(2).all(|w| w[0] < w[1]));
    Ok(ClassGroup {
        disc: disc.clone(),
        class_number: classes.len() as u64,
        classes,
    })
}

/// Least `k >= 1` with `f^k` principal.
pub fn order_of<T: Int>(f: &FormClass<T>, group: &ClassGroup<T>) -> u64 {
    let h = group.class_number;
    divisors(h)
        .into_iter()
        .find(|&k| class_pow(f, k as i64).is_principal())
        .expect("class order divides the class number")
}

/// Invariant factors `d_1 | d_2 | ... | d_r` of the class group, from the
/// element order statistics. The trivial group gives `[1]`.
pub fn group_structure<T: Int>(group: &ClassGroup<T>) -> Result<Vec<u64>> {
    let h = group.class_number;
    if h > STRUCTURE_BOUND {
        return Err(Error::BoundExceeded {
            what: "class number",
            value: h.to_string(),
            bound: STRUCTURE_BOUND.to_string(),
        });
    }
    let orders: Vec<u64> = group.classes.iter().map(|f| order_of(f, group)).collect();
    Ok(invariant_factors(h, &orders))
}

/// Invariant factors of an abelian group of order `h` with the given multiset of element orders.
pub(crate) fn invariant_factors(h: u64, orders: &[u64]) -> Vec<u64> {
    // per prime: exponents of the cyclic factors of the p-part, descending
    let mut parts: Vec<(u64, Vec<u32>)> = Vec::new();
    for (p, e) in factorize(h) {
        let cofactor = h / p.pow(e);
        // |G_p[p^j]| for j = 0..=e
        let torsion: Vec<u64> = (0..=e)
            .map(|j| orders.iter().filter(|&&o| valuation(o, p) <= j).count() as u64 / cofactor)
            .collect();
        // number of cyclic factors of exponent >= j
        let ranks: Vec<u32> = (1..=e as usize)
            .map(|j| ilog(torsion[j] / torsion[j - 1], p))
            .collect();
        let max_rank = ranks.first().copied().unwrap_or(0);
        let exps: Vec<u32> = (1..=max_rank)
            .map(|i| ranks.iter().filter(|&&r| r >= i).count() as u32)
            .collect();
        parts.push((p, exps));
    }
    let count = parts.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    if count == 0 {
        return vec![1];
    }
    let mut factors: Vec<u64> = (0..count)
        .map(|i| {
            parts
                .iter()
                .map(|(p, exps)| exps.get(i).map_or(1, |&x| p.pow(x)))
                .product()
        })
        .collect();
    factors.reverse();
    factors
}

fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

fn ilog(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n > 1 {
        n /= p;
        k += 1;
    }
    k
}

pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n.is_multiple_of(k) {
            small.push(k);
            if k * k != n {
                large.push(n / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Class of a prime ideal above the split odd prime `l`: the reduced form of
/// `(l, b, (b^2 - D) / 4l)` with `b = D mod 2`, `b^2 = D mod 4l`, `b` built
/// from the smaller square root of `D` mod `l`.
///
/// Choosing `b` or `-b` gives inverse classes; this fixes one of them.
pub fn prime_to_class<T: Int>(l: &T, disc: &T) -> Result<FormClass<T>> {
    check_disc(disc)?;
    if *l == T::lit(2) {
        return Err(Error::EvenPrime);
    }
    if !is_prime(l) {
        return Err(Error::NotPrime(l.to_string()));
    }
    if disc.is_multiple_of(l) {
        return Err(Error::Ramified {
            p: l.to_string(),
            disc: disc.to_string(),
        });
    }
    if jacobi(disc, l)? != 1 {
        return Err(Error::NotSplit {
            p: l.to_string(),
            disc: disc.to_string(),
        });
    }
    let r = sqrt_mod(disc, l)?;
    let b = if (r.clone() - disc.clone()).is_even() {
        r
    } else {
        l.clone() - r
    };
    let f = QuadraticForm::from_disc(l.clone(), b, disc)?;
    Ok(FormClass::new(&f))
}

/// Every `(x, y)` with `y >= 0` and `f(x, y) = n`, ordered by `y`, then `|x|`,
/// then `x >= 0` before `x < 0`.
pub fn representations<T: Int>(f: &QuadraticForm<T>, n: &T) -> Result<Vec<(T, T)>> {
    if n.to_u64().is_none_or(|v| v > REPRESENTATION_BOUND) {
        if n.is_negative() {
            return Ok(Vec::new());
        }
        return Err(Error::BoundExceeded {
            what: "n",
            value: n.to_string(),
            bound: REPRESENTATION_BOUND.to_string(),
        });
    }
    let disc = f.discriminant();
    let abs_d = disc.abs();
    let two_a = T::lit(2) * f.a.clone();
    // 4a f(x,y) = (2ax + by)^2 + |D| y^2, so |D| y^2 <= 4an
    let four_an = T::lit(4)
        .checked_mul(&f.a)
        .and_then(|v| v.checked_mul(n))
        .ok_or(Error::Overflow("representation search"))?;
    let y_max = (four_an.clone() / abs_d.clone()).sqrt();
    let mut out = Vec::new();
    let mut y = T::zero();
    while y <= y_max {
        let rad = four_an.clone() - abs_d.clone() * y.clone() * y.clone();
        let s = rad.sqrt();
        if s.clone() * s.clone() == rad {
            let by = f.b.clone() * y.clone();
            let mut xs: Vec<T> = [s.clone() - by.clone(), -s - by]
                .into_iter()
                .filter(|num| num.is_multiple_of(&two_a))
                .map(|num| num / two_a.clone())
                .collect();
            xs.sort_by(|p, q| p.abs().cmp(&q.abs()).then(q.cmp(p)));
            xs.dedup();
            out.extend(xs.into_iter().map(|x| (x, y.clone())));
        }
        y = y + T::one();
    }
    Ok(out)
}

/// The first representation in [`representations`] order, if any.
pub fn represents<T: Int>(f: &QuadraticForm<T>, n: &T) -> Result<Option<(T, T)>> {
    Ok(representations(f, n)?.into_iter().next())
}

/// The first representation with `gcd(x, y) = 1`, if any.
pub fn represents_primitive<T: Int>(f: &QuadraticForm<T>, n: &T) -> Result<Option<(T, T)>> {
    Ok(representations(f, n)?
        .into_iter()
        .find(|(x, y)| x.gcd(y).is_one()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(a: i64, b: i64, c: i64) -> QuadraticForm<i64> {
        QuadraticForm::new(a, b, c).unwrap()
    }

    fn class(a: i64, b: i64, c: i64) -> FormClass<i64> {
        FormClass::new(&form(a, b, c))
    }

    #[test]
    fn constructor_rejects_bad_forms() {
        assert!(matches!(
            QuadraticForm::new(1i64, 0, -1),
            Err(Error::NotPositiveDefinite(_))
        ));
        assert!(matches!(
            QuadraticForm::new(-1i64, 0, -1),
            Err(Error::NotPositiveDefinite(_))
        ));
        assert!(matches!(
            QuadraticForm::new(2i64, 2, 2),
            Err(Error::Imprimitive(_))
        ));
        assert!(QuadraticForm::<i64>::principal(&-5).is_err());
        assert!(QuadraticForm::<i64>::principal(&8).is_err());
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(form(1, 1, 6).reduce(), form(1, 1, 6));
        assert_eq!(form(23, 25, 7).reduce(), form(1, 1, 5));
        // (61, b, c) of discriminant -156 for every b in 0..244 with b^2 = -156 mod 244
        let bs: Vec<i64> = (0..244).filter(|b| (b * b + 156) % 244 == 0).collect();
        assert_eq!(bs.len(), 4);
        for b in bs {
            let f = QuadraticForm::from_disc(61, b, &-156).unwrap();
            assert_eq!(f.reduce(), form(3, 0, 13));
        }
    }

    #[test]
    fn reduce_tie_breaks() {
        assert_eq!(form(2, -2, 3).reduce(), form(2, 2, 3));
        assert_eq!(form(3, -1, 3).reduce(), form(3, 1, 3));
        assert!(form(3, 1, 3).is_reduced());
        assert!(!form(3, -1, 3).is_reduced());
        assert!(!form(2, -2, 3).is_reduced());
    }

    #[test]
    fn principal_forms() {
        assert_eq!(QuadraticForm::principal(&-23i64).unwrap(), form(1, 1, 6));
        assert_eq!(QuadraticForm::principal(&-68i64).unwrap(), form(1, 0, 17));
        assert_eq!(QuadraticForm::principal(&-3i64).unwrap(), form(1, 1, 1));
    }

    #[test]
    fn compose_examples() {
        for d in [-23i64, -39, -68, -111] {
            let g = enumerate_classes(&d).unwrap();
            for x in g.classes() {
                assert_eq!(&compose(g.principal(), x).unwrap(), x);
                assert!(compose(x, &x.inverse()).unwrap().is_principal());
            }
        }
        assert_eq!(
            compose(&class(2, 1, 5), &class(2, 1, 5)).unwrap(),
            class(3, 3, 4)
        );
        assert!(matches!(
            compose(&class(1, 1, 6), &class(1, 1, 5)),
            Err(Error::DiscMismatch(..))
        ));
    }

    #[test]
    fn class_pow_examples() {
        let f = class(3, 2, 6);
        assert!(class_pow(&f, 0).is_principal());
        assert_eq!(class_pow(&f, 1), f);
        assert_eq!(class_pow(&f, 2), class(2, 2, 9));
        assert_eq!(class_pow(&f, -1), f.inverse());
        assert!(class_pow(&f, 4).is_principal());
        assert_eq!(class_pow(&f, 3), f.inverse());
    }

    #[test]
    fn class_numbers() {
        assert_eq!(enumerate_classes(&-23i64).unwrap().class_number(), 3);
        assert_eq!(enumerate_classes(&-2183i64).unwrap().class_number(), 42);
        assert_eq!(enumerate_classes(&-3i64).unwrap().class_number(), 1);
        assert_eq!(enumerate_classes(&-4i64).unwrap().class_number(), 1);
        // non-fundamental: -12 has only (1,0,3); (2,2,2) is imprimitive
        assert_eq!(enumerate_classes(&-12i64).unwrap().class_number(), 1);
        assert!(matches!(
            enumerate_classes_bounded(&-1003i64, 1000),
            Err(Error::BoundExceeded { .. })
        ));
        assert!(matches!(
            enumerate_classes(&-5i64),
            Err(Error::InvalidDiscriminant(_))
        ));
    }

    #[test]
    fn orders_and_structure() {
        let g39 = enumerate_classes(&-39i64).unwrap();
        assert_eq!(order_of(g39.principal(), &g39), 1);
        assert_eq!(order_of(&class(2, 1, 5), &g39), 4);
        let g68 = enumerate_classes(&-68i64).unwrap();
        assert_eq!(order_of(&class(3, 2, 6), &g68), 4);
        assert_eq!(group_structure(&g68).unwrap(), vec![4]);
        assert_eq!(
            group_structure(&enumerate_classes(&-111i64).unwrap()).unwrap(),
            vec![8]
        );
        assert_eq!(
            group_structure(&enumerate_classes(&-3i64).unwrap()).unwrap(),
            vec![1]
        );
        // -420 = -4*3*5*7: h = 8, elementary abelian
        assert_eq!(
            group_structure(&enumerate_classes(&-420i64).unwrap()).unwrap(),
            vec![2, 2, 2]
        );
    }

    #[test]
    fn invariant_factor_assembly() {
        // Z/2 x Z/6 has orders 1, 2, 2, 2, 3, 3, 6, 6, 6, 6, 6, 6
        let orders = [1, 2, 2, 2, 3, 3, 6, 6, 6, 6, 6, 6];
        assert_eq!(invariant_factors(12, &orders), vec![2, 6]);
        assert_eq!(invariant_factors(1, &[1]), vec![1]);
    }

    #[test]
    fn prime_to_class_examples() {
        assert_eq!(prime_to_class(&61i64, &-156).unwrap(), class(3, 0, 13));
        assert_eq!(prime_to_class(&157i64, &-156).unwrap(), class(1, 0, 39));
        let c13 = prime_to_class(&13i64, &-23).unwrap();
        assert!(c13 == class(2, 1, 3) || c13 == class(2, -1, 3));
        assert!(matches!(
            prime_to_class(&5i64, &-23),
            Err(Error::NotSplit { .. })
        ));
        assert!(matches!(
            prime_to_class(&23i64, &-23),
            Err(Error::Ramified { .. })
        ));
        assert!(matches!(
            prime_to_class(&15i64, &-23),
            Err(Error::NotPrime(_))
        ));
        assert_eq!(prime_to_class(&2i64, &-23), Err(Error::EvenPrime));
    }

    #[test]
    fn represents_examples() {
        assert_eq!(represents(&form(1, 0, 39), &157).unwrap(), Some((1, 2)));
        assert_eq!(represents(&form(3, 0, 13), &337).unwrap(), Some((2, 5)));
        assert_eq!(represents(&form(1, 0, 39), &61).unwrap(), None);
        assert_eq!(represents(&form(4, -1, 7), &73).unwrap(), Some((2, 3)));
        assert_eq!(represents(&form(1, 0, 1), &0).unwrap(), Some((0, 0)));
        assert!(matches!(
            represents(&form(1, 0, 1), &1_000_000_000_001),
            Err(Error::BoundExceeded { .. })
        ));
        // 25 = 5^2 + 0 is imprimitive, 25 = 3^2 + 4^2 is primitive
        assert_eq!(represents(&form(1, 0, 1), &25).unwrap(), Some((5, 0)));
        assert_eq!(
            represents_primitive(&form(1, 0, 1), &25).unwrap(),
            Some((4, 3))
        );
    }
}
