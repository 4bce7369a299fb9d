//! Sweep outcomes.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

pub(crate) fn as_string<T: fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Which statement a sweep checks, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PropositionId {
    /// Quadratic character of the unit of `Q(sqrt p)`, `p = 1 mod 8`, against forms of discriminant `-4p`.
    Dirichlet { p: u64 },
    /// `(eps_p / q) = (q/p)_4 (p/q)_4`.
    Scholz { p: u64 },
    /// Cubic character of the unit of `Q(sqrt m)` against forms of discriminant `disc`.
    Kronecker { m: u64, disc: i64 },
    /// Quartic character of `s * eps` in `Q(sqrt pq)` against forms of discriminant `-pq`.
    Quartic { p: u64, q: u64 },
}

impl PropositionId {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Dirichlet { .. } => "dirichlet",
            Self::Scholz { .. } => "scholz",
            Self::Kronecker { .. } => "kronecker",
            Self::Quartic { .. } => "quartic",
        }
    }

    pub fn params(&self) -> BTreeMap<&'static str, i64> {
        let mut m = BTreeMap::new();
        match *self {
            Self::Dirichlet { p } | Self::Scholz { p } => {
                m.insert("p", p as i64);
            }
            Self::Kronecker { m: mm, disc } => {
                m.insert("m", mm as i64);
                m.insert("disc", disc);
            }
            Self::Quartic { p, q } => {
                m.insert("p", p as i64);
                m.insert("q", q as i64);
            }
        }
        m
    }
}

impl fmt::Display for PropositionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self
            .params()
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(f, "{}({})", self.name(), params.join(", "))
    }
}

/// Primes `min..=max` that were considered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepRange {
    pub min: u64,
    pub max: u64,
}

/// Everything computed at one prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeRecord {
    pub prime: u64,
    pub symbol: String,
    /// Reduced form of the class of a prime above `prime`.
    pub class: String,
    /// What the class side predicts, e.g. `principal`.
    pub outcome: String,
    /// `form@(x,y)` found by brute force, when searched.
    pub representation: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub prime: u64,
    pub symbol: String,
    pub class: String,
    pub representation: Option<String>,
    pub note: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AnomalyKind {
    /// A symbol expected to be +-1 came out as a primitive root of unity.
    SymbolNotReal,
    /// `[p]^(h/2)` is not principal, so the prime's class is outside the cases compared.
    HalfPowerNotPrincipal,
    /// The 2-part of the class group is not cyclic.
    TwoPartNotCyclic,
    /// `x^3 - 3x - C` had exactly one root at a prime split in its quadratic resolvent field.
    RootCountNotZeroOrThree,
}

impl fmt::Display for AnomalyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::SymbolNotReal => "symbol_not_real",
            Self::HalfPowerNotPrincipal => "half_power_not_principal",
            Self::TwoPartNotCyclic => "two_part_not_cyclic",
            Self::RootCountNotZeroOrThree => "root_count_not_zero_or_three",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Anomaly {
    /// `None` for structural anomalies that are not tied to a prime.
    pub prime: Option<u64>,
    pub kind: AnomalyKind,
    pub detail: String,
}

/// Outcome of one sweep.
///
/// `by_class` counts primes per `"<symbol> / <class outcome>"` key, so
/// `tested` is always the sum of its values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub proposition: PropositionId,
    pub range: SweepRange,
    pub tested: u64,
    pub by_class: BTreeMap<String, u64>,
    pub mismatches: Vec<Mismatch>,
    pub anomalies: Vec<Anomaly>,
    /// Per-prime detail, ascending; not part of the serialized report.
    pub records: Vec<PrimeRecord>,
}

impl VerificationReport {
    pub fn new(proposition: PropositionId, range: SweepRange) -> Self {
        Self {
            proposition,
            range,
            tested: 0,
            by_class: BTreeMap::new(),
            mismatches: Vec::new(),
            anomalies: Vec::new(),
            records: Vec::new(),
        }
    }

    pub fn verified(&self) -> bool {
        self.mismatches.is_empty() && self.anomalies.is_empty()
    }

    pub fn record(&mut self, key: String, record: PrimeRecord) {
        self.tested += 1;
        *self.by_class.entry(key).or_insert(0) += 1;
        self.records.push(record);
    }

    pub fn count_anomalies(&self, kind: AnomalyKind) -> usize {
        self.anomalies.iter().filter(|a| a.kind == kind).count()
    }

    /// Compare computed symbols against `(prime, expected symbol)` pairs; each
    /// disagreement, or a prime that was not swept, becomes a mismatch.
    pub fn check_expected(&mut self, expected: &[(u64, String)]) {
        for (prime, want) in expected {
            match self.records.iter().find(|r| r.prime == *prime) {
                Some(r) if r.symbol == *want => {}
                Some(r) => {
                    let m = Mismatch {
                        prime: *prime,
                        symbol: r.symbol.clone(),
                        class: r.class.clone(),
                        representation: r.representation.clone(),
                        note: format!("expected symbol {want}"),
                    };
                    self.mismatches.push(m);
                }
                None => self.mismatches.push(Mismatch {
                    prime: *prime,
                    symbol: String::new(),
                    class: String::new(),
                    representation: None,
                    note: format!("expected symbol {want}, but the prime is not in the sweep"),
                }),
            }
        }
        self.mismatches.sort_by_key(|m| m.prime);
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("VerificationReport", 7)?;
        st.serialize_field("proposition", self.proposition.name())?;
        st.serialize_field("params", &self.proposition.params())?;
        st.serialize_field("range", &self.range)?;
        st.serialize_field("tested", &self.tested)?;
        st.serialize_field("by_class", &self.by_class)?;
        st.serialize_field("mismatches", &self.mismatches)?;
        st.serialize_field("anomalies", &self.anomalies)?;
        st.end()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "proposition: {}", self.proposition)?;
        writeln!(f, "range: {}..={}", self.range.min, self.range.max)?;
        writeln!(f, "tested: {}", self.tested)?;
        for (k, v) in &self.by_class {
            writeln!(f, "  {k}: {v}")?;
        }
        writeln!(f, "mismatches: {}", self.mismatches.len())?;
        for m in &self.mismatches {
            write!(f, "  {} symbol={} class={}", m.prime, m.symbol, m.class)?;
            if let Some(r) = &m.representation {
                write!(f, " rep={r}")?;
            }
            writeln!(f, " ({})", m.note)?;
        }
        writeln!(f, "anomalies: {}", self.anomalies.len())?;
        for a in &self.anomalies {
            match a.prime {
                Some(p) => writeln!(f, "  {p} {}: {}", a.kind, a.detail)?,
                None => writeln!(f, "  {}: {}", a.kind, a.detail)?,
            }
        }
        write!(
            f,
            "status: {}",
            if self.verified() {
                "verified"
            } else {
                "FAILED"
            }
        )
    }
}
