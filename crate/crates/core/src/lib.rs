//! Power residue symbols of units in real quadratic fields, checked against
//! classes of binary quadratic forms.
//!
//! Everything is generic over an exact integer type implementing [`Int`]
//! (`i64`, `i128`, `BigInt`). Fixed-width arithmetic is checked: overflow is
//! reported as [`Error::Overflow`], never wrapped.

pub mod error;
pub mod int;
pub mod modarith;
pub mod pell;
pub mod qforms;
pub mod report;
pub mod symbols;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
pub use int::Int;
pub use modarith::{
    canonical_root_of_unity, classify_root_of_unity, is_prime, jacobi, mod_inverse, mod_pow,
    primes_up_to, sqrt_mod, RootConvention, RootOfUnityValue,
};
pub use pell::{
    fundamental_unit, is_squarefree, normalize_sign, unit_mod_prime, QuadraticInteger,
    QuadraticUnit,
};
pub use qforms::{
    class_pow, compose, enumerate_classes, group_structure, order_of, prime_to_class,
    representations, represents, represents_primitive, ClassGroup, FormClass, QuadraticForm,
};
pub use report::{
    Anomaly, AnomalyKind, Mismatch, PrimeRecord, PropositionId, SweepRange, VerificationReport,
};
pub use symbols::{
    conjugation_check, cubic_root_count, element_symbol, rational_quartic, unit_symbol,
    CubicPolynomial, SymbolValue,
};
pub use verify::{
    verify_dirichlet, verify_kronecker, verify_quartic, verify_quartic_with_sign, verify_scholz,
    SweepConfig,
};

pub use num_bigint::BigInt;

pub type Form = QuadraticForm<i64>;
pub type Class = FormClass<i64>;
pub type Group = ClassGroup<i64>;
pub type Unit = QuadraticUnit<BigInt>;
pub type BigForm = QuadraticForm<BigInt>;
pub type BigClass = FormClass<BigInt>;
