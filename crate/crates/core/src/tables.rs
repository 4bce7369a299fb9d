//! Class-number tables for `m = 27b^2 -+ 4` and the two worked quartic examples,
//! recomputed from scratch.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pell::{fundamental_unit, is_squarefree, normalize_sign};
use crate::qforms::{enumerate_classes, representations, QuadraticForm};
use crate::symbols::unit_symbol;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `m = 27b^2 - 4`
    Minus4,
    /// `m = 27b^2 + 4`
    Plus4,
}

impl Family {
    pub fn m(self, b: i64) -> Option<i64> {
        let base = b.checked_mul(b)?.checked_mul(27)?;
        match self {
            Self::Minus4 => base.checked_sub(4),
            Self::Plus4 => base.checked_add(4),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minus4" => Ok(Self::Minus4),
            "plus4" => Ok(Self::Plus4),
            _ => Err(Error::PreconditionFailed(format!(
                "unknown family {s:?}, expected minus4 or plus4"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    pub b: i64,
    pub disc: i64,
    pub class_number: Option<u64>,
    /// Why `class_number` is missing.
    pub note: Option<String>,
}

/// `(b, -m, h(-m))` for each `b`. Even `b` and non-squarefree `m` get a note instead of `h`.
pub fn class_table(family: Family, b_values: &[i64]) -> Result<Vec<ClassRow>> {
    b_values
        .iter()
        .map(|&b| {
            let m = family.m(b).ok_or(Error::Overflow("27b^2 +- 4"))?;
            let disc = -m;
            let skip = |note: String| ClassRow {
                b,
                disc,
                class_number: None,
                note: Some(note),
            };
            if b % 2 == 0 {
                return Ok(skip(format!("b = {b} is even")));
            }
            if !is_squarefree(&m) {
                return Ok(skip(format!("{m} is not squarefree")));
            }
            let h = enumerate_classes(&disc)?.class_number();
            Ok(ClassRow {
                b,
                disc,
                class_number: Some(h),
                note: None,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Example {
    /// `p = 13, q = 3`
    One,
    /// `p = 37, q = 3`
    Two,
}

impl std::str::FromStr for Example {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "example1" => Ok(Self::One),
            "example2" => Ok(Self::Two),
            _ => Err(Error::PreconditionFailed(format!("unknown table {s:?}"))),
        }
    }
}

struct ExampleData {
    pq: i64,
    primes: &'static [u64],
    expected: &'static [i8],
    /// Label, form, and the symbol a prime represented by it should have.
    forms: &'static [(&'static str, (i64, i64, i64), i8)],
}

impl Example {
    fn data(self) -> ExampleData {
        match self {
            Self::One => ExampleData {
                pq: 39,
                primes: &[61, 157, 181, 277, 313, 337],
                expected: &[-1, 1, 1, 1, -1, -1],
                forms: &[("Q1", (1, 0, 39), 1), ("Q2", (3, 0, 13), -1)],
            },
            Self::Two => ExampleData {
                pq: 111,
                primes: &[73, 157, 181, 229, 337],
                expected: &[-1, -1, -1, 1, 1],
                forms: &[
                    ("Q1", (1, 0, 111), 1),
                    ("Q2", (3, 0, 37), 1),
                    ("Q4", (4, 1, 7), -1),
                    ("Q4'", (4, -1, 7), -1),
                ],
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExampleRow {
    pub prime: u64,
    pub label: String,
    pub form: String,
    pub x: i64,
    pub y: i64,
    /// Quartic symbol of `s * eps`.
    pub symbol: String,
    pub expected: String,
    /// Symbol implied by the representing form.
    pub predicted: String,
}

impl ExampleRow {
    pub fn agrees(&self) -> bool {
        self.symbol == self.expected && self.symbol == self.predicted
    }
}

fn sign_str(s: i8) -> String {
    format!("{s:+}")
}

/// Each prime of the example with a representation by one of the listed forms
/// (preferring one with `x, y >= 0`), the symbol, and the tabulated value.
pub fn example_table(which: Example) -> Result<Vec<ExampleRow>> {
    let data = which.data();
    let eps = fundamental_unit(&data.pq)?;
    let s = normalize_sign(&eps)?;
    let forms = data
        .forms
        .iter()
        .map(|&(label, (a, b, c), sign)| Ok((label, QuadraticForm::new(a, b, c)?, sign)))
        .collect::<Result<Vec<_>>>()?;

    data.primes
        .iter()
        .zip(data.expected)
        .map(|(&l, &want)| {
            let li = l as i64;
            let mut hits = Vec::new();
            for (label, f, sign) in &forms {
                for r in representations(f, &li)? {
                    hits.push((*label, f, r, *sign));
                }
            }
            let (label, form, (x, y), predicted) = hits
                .iter()
                .find(|(_, _, (x, y), _)| *x >= 0 && *y >= 0)
                .or(hits.first())
                .copied()
                .ok_or_else(|| {
                    Error::StructureError(format!("{l} is not represented by any listed form"))
                })?;
            let symbol = unit_symbol(&eps, &li, 4, s)?.value.to_string();
            Ok(ExampleRow {
                prime: l,
                label: label.to_string(),
                form: form.to_string(),
                x,
                y,
                symbol,
                expected: sign_str(want),
                predicted: sign_str(predicted),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_rows() {
        let rows = class_table(Family::Minus4, &[1]).unwrap();
        assert_eq!(
            rows,
            vec![ClassRow {
                b: 1,
                disc: -23,
                class_number: Some(3),
                note: None
            }]
        );
        let rows = class_table(Family::Plus4, &[1, 2]).unwrap();
        assert_eq!(rows[0].class_number, Some(3));
        assert!(rows[1].note.is_some());
    }

    #[test]
    fn non_squarefree_is_skipped() {
        // 27*19^2 + 4 = 7^2 * 199, 27*115^2 - 4 = 11^2 * 13 * 227
        let plus = class_table(Family::Plus4, &[17, 19, 21]).unwrap();
        assert_eq!(
            plus.iter()
                .map(|r| r.class_number.is_some())
                .collect::<Vec<_>>(),
            [true, false, true]
        );
        assert_eq!(plus[1].note.as_deref(), Some("9751 is not squarefree"));
        let minus = class_table(Family::Minus4, &[115]).unwrap();
        assert_eq!(minus[0].class_number, None);
    }

    #[test]
    fn example_rows() {
        let rows = example_table(Example::One).unwrap();
        let r313 = rows.iter().find(|r| r.prime == 313).unwrap();
        assert_eq!((r313.form.as_str(), r313.x, r313.y), ("(3,0,13)", 10, 1));
        let r181 = rows.iter().find(|r| r.prime == 181).unwrap();
        assert_eq!((r181.label.as_str(), r181.x, r181.y), ("Q1", 5, 2));
        assert!(rows.iter().all(ExampleRow::agrees), "{rows:?}");

        let rows = example_table(Example::Two).unwrap();
        let r73 = &rows[0];
        assert_eq!(
            (r73.label.as_str(), r73.x, r73.y, r73.symbol.as_str()),
            ("Q4'", 2, 3, "-1")
        );
        assert!(rows.iter().all(ExampleRow::agrees), "{rows:?}");
    }
}
