//! Sweeps that compare a unit's power residue symbol at split primes with the
//! class of the prime in a form class group.
//!
//! Every criterion has (at least) two independently computed sides: the
//! symbol, evaluated in a prime field, and the class of a prime above `l`,
//! obtained by composing forms. Where a third route exists (splitting of a
//! cubic, Scholz's rational quartic symbols, brute-force representation by an
//! explicit form) it is checked as well. No side is trusted over another:
//! any disagreement is a mismatch.
//!
//! Primes are processed in parallel and merged in ascending order, so reports
//! do not depend on scheduling.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::int::Int;
use crate::modarith::{is_prime, jacobi, primes_up_to};
use crate::pell::{fundamental_unit, normalize_sign, QuadraticUnit};
use crate::qforms::{
    class_pow, enumerate_classes, group_structure, prime_to_class, represents_primitive,
    ClassGroup, FormClass, QuadraticForm, STRUCTURE_BOUND,
};
use crate::report::{
    Anomaly, AnomalyKind, Mismatch, PrimeRecord, PropositionId, SweepRange, VerificationReport,
};
use crate::symbols::{cubic_root_count, rational_quartic, unit_symbol, CubicPolynomial};

/// Default largest integer for brute-force representation searches.
pub const DEFAULT_BRUTEFORCE_CAP: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    /// Representation cross-checks run only while the represented integer is `<=` this.
    pub bruteforce_cap: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            bruteforce_cap: DEFAULT_BRUTEFORCE_CAP,
        }
    }
}

/// Where a prime's class power lands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ClassOutcome {
    Principal,
    OrderTwo,
    Other,
}

impl ClassOutcome {
    fn of<T: Int>(power: &FormClass<T>) -> Self {
        if power.is_principal() {
            Self::Principal
        } else if class_pow(power, 2).is_principal() {
            Self::OrderTwo
        } else {
            Self::Other
        }
    }

    fn sign(self) -> Option<i8> {
        match self {
            Self::Principal => Some(1),
            Self::OrderTwo => Some(-1),
            Self::Other => None,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Self::Principal => "principal",
            Self::OrderTwo => "order 2",
            Self::Other => "order > 2",
        }
    }
}

/// Per-prime result before merging.
struct Outcome {
    key: String,
    record: PrimeRecord,
    mismatch: Option<String>,
    anomalies: Vec<(AnomalyKind, String)>,
}

fn merge(report: &mut VerificationReport, outcomes: Vec<Outcome>) {
    for o in outcomes {
        let prime = o.record.prime;
        if let Some(note) = o.mismatch {
            report.mismatches.push(Mismatch {
                prime,
                symbol: o.record.symbol.clone(),
                class: o.record.class.clone(),
                representation: o.record.representation.clone(),
                note,
            });
        }
        for (kind, detail) in o.anomalies {
            report.anomalies.push(Anomaly {
                prime: Some(prime),
                kind,
                detail,
            });
        }
        report.record(o.key, o.record);
    }
}

fn lit<T: Int>(v: u64) -> T {
    T::from_u64(v).expect("sweep primes fit the scalar")
}

fn sign_label(s: Option<i8>) -> &'static str {
    match s {
        Some(1) => "+1",
        Some(-1) => "-1",
        _ => "none",
    }
}

fn sweep_primes(max: u64, filter: impl Fn(u64) -> bool) -> Vec<u64> {
    primes_up_to(max)
        .into_iter()
        .filter(|&l| filter(l))
        .collect()
}

fn structural_anomalies<T: Int>(group: &ClassGroup<T>) -> Result<Vec<Anomaly>> {
    if group.class_number() > STRUCTURE_BOUND {
        return Ok(Vec::new());
    }
    let factors = group_structure(group)?;
    let even = factors.iter().filter(|f| *f % 2 == 0).count();
    if even > 1 {
        return Ok(vec![Anomaly {
            prime: None,
            kind: AnomalyKind::TwoPartNotCyclic,
            detail: format!(
                "class group of discriminant {} has invariants {factors:?}",
                group.disc()
            ),
        }]);
    }
    Ok(Vec::new())
}

/// `n^k` if it stays `<= cap`.
fn capped_pow(n: u64, k: u64, cap: u64) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..k {
        acc = acc.checked_mul(n).filter(|&v| v <= cap)?;
    }
    Some(acc)
}

/// Which of `plus` / `minus` primitively represents `n`: `Some(+1)`, `Some(-1)`,
/// or `None` if neither or both do. Also returns a rendering of the hit.
fn represent_side<T: Int>(
    n: u64,
    plus: &QuadraticForm<T>,
    minus: &QuadraticForm<T>,
) -> Result<(Option<i8>, String)> {
    let n: T = lit(n);
    let a = represents_primitive(plus, &n)?;
    let b = represents_primitive(minus, &n)?;
    let show = |f: &QuadraticForm<T>, (x, y): &(T, T)| format!("{f}@({x},{y})");
    Ok(match (a, b) {
        (Some(r), None) => (Some(1), show(plus, &r)),
        (None, Some(r)) => (Some(-1), show(minus, &r)),
        (Some(r), Some(s)) => (None, format!("{} and {}", show(plus, &r), show(minus, &s))),
        (None, None) => (None, format!("{n} not represented by {plus} or {minus}")),
    })
}

fn class_number_quarter<T: Int>(group: &ClassGroup<T>) -> Result<i64> {
    let h = group.class_number();
    if !h.is_multiple_of(4) {
        return Err(Error::StructureError(format!(
            "class number {h} of discriminant {} is not divisible by 4",
            group.disc()
        )));
    }
    Ok((h / 4) as i64)
}

/// Quadratic character of the fundamental unit of `Q(sqrt p)`, `p = 1 mod 8`,
/// at primes `q = 1 mod 4` with `(p/q) = 1`: `+1` exactly when `[q]^(h/4)` is
/// principal in discriminant `-4p`, `-1` when it is the class of
/// `2x^2 + 2xy + (p+1)/2 y^2`. Scholz's `(q/p)_4 (p/q)_4` is a third side.
pub fn verify_dirichlet<T: Int>(
    p: &T,
    q_max: u64,
    cfg: &SweepConfig,
) -> Result<VerificationReport> {
    let pu = p
        .to_u64()
        .filter(|_| is_prime(p))
        .ok_or_else(|| Error::PreconditionFailed(format!("p = {p} must be a prime")))?;
    if pu % 8 != 1 {
        return Err(Error::PreconditionFailed(format!(
            "p = {pu} is not 1 mod 8"
        )));
    }
    let disc = -T::lit(4) * p.clone();
    let group = enumerate_classes(&disc)?;
    let quarter = class_number_quarter(&group)?;
    let eps = fundamental_unit(p)?;
    let plus = QuadraticForm::new(T::one(), T::zero(), p.clone())?;
    let minus = QuadraticForm::new(T::lit(2), T::lit(2), (p.clone() + T::one()) / T::lit(2))?;

    let mut report = VerificationReport::new(
        PropositionId::Dirichlet { p: pu },
        SweepRange { min: 2, max: q_max },
    );
    report.anomalies.extend(structural_anomalies(&group)?);

    let primes = sweep_primes(q_max, |q| {
        q % 4 == 1 && q != pu && jacobi(&(pu as i64), &(q as i64)) == Ok(1)
    });
    let outcomes = primes
        .par_iter()
        .map(|&q| -> Result<Outcome> {
            let qt: T = lit(q);
            let symbol = unit_symbol(&eps, &qt, 2, 1)?.value.as_sign();
            let class = prime_to_class(&qt, &disc)?;
            let outcome = ClassOutcome::of(&class_pow(&class, quarter));
            let scholz = rational_quartic(&qt, p)? * rational_quartic(p, &qt)?;

            let mut notes = Vec::new();
            let mut anomalies = Vec::new();
            if outcome == ClassOutcome::Other {
                anomalies.push((AnomalyKind::HalfPowerNotPrincipal, format!("[q] = {class}")));
            } else if symbol != outcome.sign() {
                notes.push("symbol disagrees with class".to_string());
            }
            if symbol != Some(scholz) {
                notes.push(format!("symbol disagrees with Scholz product {scholz:+}"));
            }
            let mut representation = None;
            if let Some(n) = capped_pow(q, quarter as u64, cfg.bruteforce_cap) {
                let (side, shown) = represent_side(n, &plus, &minus)?;
                if side != outcome.sign() {
                    notes.push(format!("representation of q^(h/4) disagrees: {shown}"));
                }
                representation = Some(shown);
            }
            Ok(Outcome {
                key: format!("{} / {}", sign_label(symbol), outcome.label()),
                record: PrimeRecord {
                    prime: q,
                    symbol: sign_label(symbol).to_string(),
                    class: class.to_string(),
                    outcome: outcome.label().to_string(),
                    representation,
                },
                mismatch: (!notes.is_empty()).then(|| notes.join("; ")),
                anomalies,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    merge(&mut report, outcomes);
    Ok(report)
}

/// `(eps_p / q) = (q/p)_4 (p/q)_4` for primes `q = 1 mod 4` with `(p/q) = 1`,
/// where `eps_p` is the fundamental unit of `Q(sqrt p)`, `p = 1 mod 4`.
pub fn verify_scholz<T: Int>(p: &T, q_max: u64) -> Result<VerificationReport> {
    let pu = p
        .to_u64()
        .filter(|_| is_prime(p))
        .ok_or_else(|| Error::PreconditionFailed(format!("p = {p} must be a prime")))?;
    if pu % 4 != 1 {
        return Err(Error::PreconditionFailed(format!(
            "p = {pu} is not 1 mod 4"
        )));
    }
    let eps = fundamental_unit(p)?;
    let mut report = VerificationReport::new(
        PropositionId::Scholz { p: pu },
        SweepRange { min: 2, max: q_max },
    );
    let primes = sweep_primes(q_max, |q| {
        q % 4 == 1 && q != pu && jacobi(&(pu as i64), &(q as i64)) == Ok(1)
    });
    let outcomes = primes
        .par_iter()
        .map(|&q| -> Result<Outcome> {
            let qt: T = lit(q);
            let symbol = unit_symbol(&eps, &qt, 2, 1)?.value.as_sign();
            let product = rational_quartic(&qt, p)? * rational_quartic(p, &qt)?;
            Ok(Outcome {
                key: format!("{} / {product:+}", sign_label(symbol)),
                record: PrimeRecord {
                    prime: q,
                    symbol: sign_label(symbol).to_string(),
                    class: String::new(),
                    outcome: format!("{product:+}"),
                    representation: None,
                },
                mismatch: (symbol != Some(product))
                    .then(|| "symbol disagrees with (q/p)_4 (p/q)_4".to_string()),
                anomalies: Vec::new(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    merge(&mut report, outcomes);
    Ok(report)
}

/// Discriminant of the cubic class field and constant term of `x^3 - 3x - C`
/// for the two supported `m`.
pub fn kronecker_data(m: u64) -> Result<(i64, i64)> {
    match m {
        69 => Ok((-23, 25)),
        93 => Ok((-31, 29)),
        _ => Err(Error::PreconditionFailed(format!(
            "m = {m} is not 69 or 93"
        ))),
    }
}

/// Cubic character of the fundamental unit of `Q(sqrt m)`, `m in {69, 93}`,
/// at primes `p = 1 mod 3` with `(disc/p) = 1`: a cube exactly when `p` is
/// represented by the principal form of `disc`, exactly when `x^3 - 3x - C`
/// splits completely mod `p`.
pub fn verify_kronecker<T: Int>(
    m: u64,
    p_max: u64,
    cfg: &SweepConfig,
) -> Result<VerificationReport> {
    let (disc_i, c) = kronecker_data(m)?;
    let disc = T::lit(disc_i);
    let group = enumerate_classes(&disc)?;
    if group.class_number() != 3 {
        return Err(Error::StructureError(format!(
            "class number of {disc} is {}, expected 3",
            group.class_number()
        )));
    }
    let eps: QuadraticUnit<T> = fundamental_unit(&lit(m))?;
    let cubic = CubicPolynomial::new(T::lit(c));
    let principal = QuadraticForm::principal(&disc)?;

    let mut report = VerificationReport::new(
        PropositionId::Kronecker { m, disc: disc_i },
        SweepRange { min: 2, max: p_max },
    );
    let primes = sweep_primes(p_max, |p| {
        p % 3 == 1 && jacobi(&disc_i, &(p as i64)) == Ok(1)
    });
    let outcomes = primes
        .par_iter()
        .map(|&p| -> Result<Outcome> {
            let pt: T = lit(p);
            let cube = unit_symbol(&eps, &pt, 3, 1)?;
            let class = prime_to_class(&pt, &disc)?;
            let principal_class = class.is_principal();
            let roots = cubic_root_count(&cubic, &pt)?;

            let mut notes = Vec::new();
            let mut anomalies = Vec::new();
            if cube.is_power() != principal_class {
                notes.push("cubic symbol disagrees with class".to_string());
            }
            if roots != 0 && roots != 3 {
                anomalies.push((
                    AnomalyKind::RootCountNotZeroOrThree,
                    format!("{cubic} has {roots} roots"),
                ));
            }
            if (roots == 3) != principal_class {
                notes.push(format!("{cubic} has {roots} roots mod p"));
            }
            let mut representation = None;
            if p <= cfg.bruteforce_cap {
                let rep = represents_primitive(&principal, &pt)?;
                if rep.is_some() != principal_class {
                    notes.push(format!(
                        "representation by {principal} disagrees with class"
                    ));
                }
                representation = rep.map(|(x, y)| format!("{principal}@({x},{y})"));
            }
            let symbol = if cube.is_power() { "cube" } else { "non-cube" };
            let outcome = if principal_class {
                "principal"
            } else {
                "non-principal"
            };
            Ok(Outcome {
                key: format!("{symbol} / {outcome}"),
                record: PrimeRecord {
                    prime: p,
                    symbol: cube.value.to_string(),
                    class: class.to_string(),
                    outcome: format!("{outcome}, {roots} roots"),
                    representation,
                },
                mismatch: (!notes.is_empty()).then(|| notes.join("; ")),
                anomalies,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    merge(&mut report, outcomes);
    Ok(report)
}

/// Quartic character of `s * eps`, `eps` the fundamental unit of
/// `Q(sqrt pq)` and `s * eps = 1 mod 4`, at primes `l = 1 mod 4` with
/// `(pq/l) = 1`.
///
/// Primes with `(l/p) = 1` lie in the principal genus of discriminant `-pq`;
/// there the symbol must be `+1` exactly when `[l]^(h/4)` is principal and
/// `-1` when it has order 2, with `l^(h/4)` primitively represented by
/// `x^2 + pq y^2` or `q x^2 + p y^2` accordingly. A `+-i` symbol or a
/// non-principal `[l]^(h/2)` there is an anomaly. Primes with `(l/p) = -1`
/// are a control group: both the symbol and the class must fall outside
/// `{+1, -1}` / the 2-torsion, and anything else is a mismatch.
pub fn verify_quartic<T: Int>(
    p: &T,
    q: &T,
    l_max: u64,
    cfg: &SweepConfig,
) -> Result<VerificationReport> {
    verify_quartic_impl(p, q, l_max, None, cfg)
}

/// [`verify_quartic`] with `s` replaced by `sign`; `sign = -s` is a negative control.
pub fn verify_quartic_with_sign<T: Int>(
    p: &T,
    q: &T,
    l_max: u64,
    sign: i8,
    cfg: &SweepConfig,
) -> Result<VerificationReport> {
    verify_quartic_impl(p, q, l_max, Some(sign), cfg)
}

/// Checks `p = 5 mod 8`, `q = 3 mod 4`, both prime, `(p/q) = 1`.
pub fn check_quartic_params<T: Int>(p: &T, q: &T) -> Result<(u64, u64)> {
    let fail = |why: String| Error::PreconditionFailed(why);
    let pu = p
        .to_u64()
        .filter(|_| is_prime(p))
        .ok_or_else(|| fail(format!("p = {p} must be a prime")))?;
    let qu = q
        .to_u64()
        .filter(|_| is_prime(q))
        .ok_or_else(|| fail(format!("q = {q} must be a prime")))?;
    if pu % 8 != 5 {
        return Err(fail(format!("p = {pu} is not 5 mod 8")));
    }
    if qu % 4 != 3 {
        return Err(fail(format!("q = {qu} is not 3 mod 4")));
    }
    if jacobi(p, q)? != 1 {
        return Err(fail(format!("({pu}/{qu}) is not +1")));
    }
    Ok((pu, qu))
}

fn verify_quartic_impl<T: Int>(
    p: &T,
    q: &T,
    l_max: u64,
    sign: Option<i8>,
    cfg: &SweepConfig,
) -> Result<VerificationReport> {
    let (pu, qu) = check_quartic_params(p, q)?;
    let pq = p.clone() * q.clone();
    let disc = -pq.clone();
    let group = enumerate_classes(&disc)?;
    let quarter = class_number_quarter(&group)?;
    let eps = fundamental_unit(&pq)?;
    let s = match sign {
        Some(s) => s,
        None => normalize_sign(&eps)?,
    };
    let plus = QuadraticForm::new(T::one(), T::zero(), pq.clone())?;
    let minus = QuadraticForm::new(q.clone(), T::zero(), p.clone())?;
    let pq_u = pu * qu;

    let mut report = VerificationReport::new(
        PropositionId::Quartic { p: pu, q: qu },
        SweepRange { min: 2, max: l_max },
    );
    report.anomalies.extend(structural_anomalies(&group)?);

    let primes = sweep_primes(l_max, |l| {
        l % 4 == 1 && jacobi(&(pq_u as i128), &(l as i128)) == Ok(1)
    });
    let outcomes = primes
        .par_iter()
        .map(|&l| -> Result<Outcome> {
            let lt: T = lit(l);
            let in_genus = jacobi(&lt, p)? == 1;
            let value = unit_symbol(&eps, &lt, 4, s)?.value;
            let class = prime_to_class(&lt, &disc)?;
            let outcome = ClassOutcome::of(&class_pow(&class, quarter));
            let symbol = value.as_sign();

            let mut notes = Vec::new();
            let mut anomalies = Vec::new();
            let mut representation = None;
            if in_genus {
                if symbol.is_none() {
                    anomalies.push((AnomalyKind::SymbolNotReal, format!("symbol {value}")));
                }
                if outcome == ClassOutcome::Other {
                    anomalies.push((AnomalyKind::HalfPowerNotPrincipal, format!("[l] = {class}")));
                }
                if let (Some(a), Some(b)) = (symbol, outcome.sign()) {
                    if a != b {
                        notes.push("symbol disagrees with class".to_string());
                    }
                }
                if let Some(n) = capped_pow(l, quarter as u64, cfg.bruteforce_cap) {
                    let (side, shown) = represent_side(n, &plus, &minus)?;
                    if side != outcome.sign() {
                        notes.push(format!("representation of l^(h/4) disagrees: {shown}"));
                    }
                    representation = Some(shown);
                }
            } else if symbol.is_some() || outcome != ClassOutcome::Other {
                notes.push(format!(
                    "outside the principal genus, yet symbol {value} and class power {}",
                    outcome.label()
                ));
            }
            Ok(Outcome {
                key: format!("{value} / {}", outcome.label()),
                record: PrimeRecord {
                    prime: l,
                    symbol: value.to_string(),
                    class: class.to_string(),
                    outcome: outcome.label().to_string(),
                    representation,
                },
                mismatch: (!notes.is_empty()).then(|| notes.join("; ")),
                anomalies,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    merge(&mut report, outcomes);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dirichlet_small() {
        let r = verify_dirichlet(&17i64, 100, &SweepConfig::default()).unwrap();
        let r13 = r.records.iter().find(|x| x.prime == 13).unwrap();
        assert_eq!(r13.symbol, "-1");
        assert_eq!(r13.class, "(2,2,9)");
        assert_eq!(r13.representation.as_deref(), Some("(2,2,9)@(1,1)"));
        assert!(r.verified(), "{r}");
        assert_eq!(r.tested, r.by_class.values().sum::<u64>());
        assert_eq!(
            verify_dirichlet(&17i64, 3, &SweepConfig::default())
                .unwrap()
                .tested,
            0
        );
    }

    #[test]
    fn dirichlet_preconditions() {
        let cfg = SweepConfig::default();
        assert!(matches!(
            verify_dirichlet(&13i64, 100, &cfg),
            Err(Error::PreconditionFailed(_))
        ));
        assert!(matches!(
            verify_dirichlet(&33i64, 100, &cfg),
            Err(Error::PreconditionFailed(_))
        ));
        assert!(matches!(
            verify_dirichlet(&-17i64, 100, &cfg),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn kronecker_small() {
        let r = verify_kronecker::<i64>(69, 20, &SweepConfig::default()).unwrap();
        assert_eq!(r.tested, 1);
        let r13 = &r.records[0];
        assert_eq!(r13.prime, 13);
        assert_ne!(r13.symbol, "+1");
        assert_eq!(r13.outcome, "non-principal, 0 roots");
        assert!(r.verified());
        assert!(matches!(
            verify_kronecker::<i64>(70, 20, &SweepConfig::default()),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn quartic_small() {
        let r = verify_quartic(&13i64, &3, 400, &SweepConfig::default()).unwrap();
        assert!(r.verified(), "{r}");
        let got: Vec<(u64, &str)> = r
            .records
            .iter()
            .filter(|x| [61, 157, 181, 277, 313, 337].contains(&x.prime))
            .map(|x| (x.prime, x.symbol.as_str()))
            .collect();
        assert_eq!(
            got,
            vec![
                (61, "-1"),
                (157, "+1"),
                (181, "+1"),
                (277, "+1"),
                (313, "-1"),
                (337, "-1")
            ]
        );
        // l = 5 is outside the principal genus: the symbol is +-i
        let r5 = r.records.iter().find(|x| x.prime == 5).unwrap();
        assert!(r5.symbol == "i" || r5.symbol == "-i");
        assert_eq!(r5.outcome, "order > 2");
    }

    #[test]
    fn quartic_preconditions() {
        let cfg = SweepConfig::default();
        assert!(matches!(
            verify_quartic(&17i64, &3, 100, &cfg),
            Err(Error::PreconditionFailed(_))
        ));
        assert!(matches!(
            verify_quartic(&13i64, &5, 100, &cfg),
            Err(Error::PreconditionFailed(_))
        ));
        // (5/7) = -1
        assert!(matches!(
            verify_quartic(&5i64, &7, 100, &cfg),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn quartic_wrong_sign_is_detected() {
        let r = verify_quartic_with_sign(&13i64, &3, 400, -1, &SweepConfig::default()).unwrap();
        assert!(!r.mismatches.is_empty());
    }

    #[test]
    fn expected_values() {
        let mut r = verify_quartic(&13i64, &3, 400, &SweepConfig::default()).unwrap();
        r.check_expected(&[(61, "-1".into()), (157, "+1".into())]);
        assert!(r.verified());
        r.check_expected(&[(61, "+1".into()), (7, "+1".into())]);
        assert_eq!(r.mismatches.len(), 2);
    }

    #[test]
    fn capped_powers() {
        assert_eq!(capped_pow(10, 2, 100), Some(100));
        assert_eq!(capped_pow(10, 3, 100), None);
        assert_eq!(capped_pow(10, 0, 100), Some(1));
        assert_eq!(capped_pow(u64::MAX, 2, u64::MAX), None);
    }
}
