//! Slow, obviously-correct reference computations.
#![allow(dead_code)]

use num_integer::Integer;
use reciprocity::{
    conjugation_check, fundamental_unit, is_squarefree, jacobi, primes_up_to, BigInt, ClassGroup,
};

pub fn isqrt_exact(v: u128) -> Option<u128> {
    // squares mod 64 take only 12 values
    const SQ64: u64 = {
        let mut mask = 0u64;
        let mut i = 0;
        while i < 64 {
            mask |= 1 << ((i * i) % 64);
            i += 1;
        }
        mask
    };
    if SQ64 >> (v % 64) & 1 == 0 {
        return None;
    }
    let mut r = (v as f64).sqrt() as u128;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    (r * r == v).then_some(r)
}

/// Smallest `(t, u)`, `t, u > 0`, with `t^2 - d u^2 = +-4`, found by trying `u = 1, 2, ...`.
/// For `d != 1 mod 4` only even `u` can occur.
pub fn pell_bruteforce(d: u64) -> (u128, u128, i8) {
    let d = d as u128;
    let step = if d % 4 == 1 { 1 } else { 2 };
    let mut u: u128 = step;
    loop {
        let du2 = d * u * u;
        if du2 > 4 {
            if let Some(t) = isqrt_exact(du2 - 4) {
                return (t, u, -1);
            }
        }
        if let Some(t) = isqrt_exact(du2 + 4) {
            return (t, u, 1);
        }
        u += step;
    }
}

pub fn squarefree_below(n: u64) -> Vec<u64> {
    (2..n).filter(|d| is_squarefree(&(*d as i64))).collect()
}

/// Reduced primitive forms of `disc < 0`, counted by scanning `a`, `b`, `c` boxes
/// independently and testing each triple.
pub fn class_number_scan(disc: i64) -> u64 {
    let n = -disc;
    let mut count = 0;
    let mut a = 1;
    while 3 * a * a <= n {
        for b in -a..=a {
            for c in a..=(n + b * b) {
                let lhs = b * b - 4 * a * c;
                if lhs < disc {
                    break;
                }
                if lhs != disc {
                    continue;
                }
                if (b.abs() == a || a == c) && b < 0 {
                    continue;
                }
                if a.gcd(&b).gcd(&c) != 1 {
                    continue;
                }
                count += 1;
            }
        }
        a += 1;
    }
    count
}

pub fn negative_discriminants(max_abs: i64) -> Vec<i64> {
    (3..=max_abs)
        .map(|n| -n)
        .filter(|d| d.rem_euclid(4) == 0 || d.rem_euclid(4) == 1)
        .collect()
}

pub fn cubic_roots_scan(c: i64, p: i64) -> u32 {
    (0..p)
        .filter(|x| {
            let x = *x as i128;
            (x * x * x - 3 * x - c as i128).rem_euclid(p as i128) == 0
        })
        .count() as u32
}

/// Identity, inverses, associativity and commutativity of the Cayley table.
pub fn group_laws_hold(group: &ClassGroup<i64>) -> Result<(), String> {
    let t = group.cayley_table();
    let n = t.len();
    let e = group
        .position(group.principal())
        .ok_or("no principal class")?;
    for x in 0..n {
        if t[e][x] != x || t[x][e] != x {
            return Err(format!("identity fails at {}", group.classes()[x]));
        }
        let inv = group
            .position(&group.classes()[x].inverse())
            .ok_or("inverse not in group")?;
        if t[x][inv] != e {
            return Err(format!("inverse fails at {}", group.classes()[x]));
        }
        for y in 0..n {
            if t[x][y] != t[y][x] {
                return Err(format!("not commutative at {x},{y}"));
            }
            for z in 0..n {
                if t[t[x][y]][z] != t[x][t[y][z]] {
                    return Err(format!("not associative at {x},{y},{z}"));
                }
            }
        }
    }
    Ok(())
}

fn pow_mod(mut b: u128, mut e: u128, m: u128) -> u128 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// For each `h in {2,3,4}` and split prime `l < l_max`, `l = 1 mod h`: the images of
/// `eps` under both square roots of `d` multiply to `N(eps)`, so their `(l-1)/h`
/// powers multiply to `N(eps)^((l-1)/h)`; and the library's check agrees.
/// Returns the number of cases checked, or the first failure.
pub fn conjugation_sweep(d: i64, l_max: u64) -> Result<usize, String> {
    let eps = fundamental_unit(&BigInt::from(d)).map_err(|e| e.to_string())?;
    let mut cases = 0;
    for l in primes_up_to(l_max) {
        if l == 2 || (d as u64).is_multiple_of(l) || jacobi(&d, &(l as i64)) != Ok(1) {
            continue;
        }
        let lb = l as u128;
        let r = (0..lb).find(|r| (r * r) % lb == d as u128 % lb).unwrap();
        let t = (eps.t() % BigInt::from(l))
            .to_string()
            .parse::<u128>()
            .unwrap();
        let u = (eps.u() % BigInt::from(l))
            .to_string()
            .parse::<u128>()
            .unwrap();
        let half = lb.div_ceil(2);
        let img = |root: u128| (t + u * root % lb) % lb * half % lb;
        let (a, b) = (img(r), img(lb - r));
        let norm = if eps.norm() == 1 { 1 } else { lb - 1 };
        if a * b % lb != norm {
            return Err(format!(
                "d = {d}, l = {l}: images do not multiply to the norm"
            ));
        }
        for h in 2..=4u32 {
            if (l - 1) % h as u64 != 0 {
                continue;
            }
            let e = (l as u128 - 1) / h as u128;
            if pow_mod(a, e, lb) * pow_mod(b, e, lb) % lb != pow_mod(norm, e, lb) {
                return Err(format!("d = {d}, l = {l}, h = {h}: powers disagree"));
            }
            for sign in [1, -1] {
                let ok = conjugation_check(&eps, &BigInt::from(l), h, sign)
                    .map_err(|e| e.to_string())?;
                if !ok {
                    return Err(format!("conjugation_check({d}, {l}, {h}, {sign}) is false"));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}
