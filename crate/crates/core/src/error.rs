use thiserror::Error;

/// Every failure mode of the library. Values are carried as decimal strings so
/// the error type stays independent of the scalar in use.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} must be odd and positive")]
    InvalidModulus(String),
    #[error("{a} is not a quadratic residue mod {p}")]
    NotAResidue { a: String, p: String },
    #[error("the prime 2 is not supported here")]
    EvenPrime,
    #[error("{value} is not a {order}-th root of unity mod {p}")]
    NotARootOfUnity {
        value: String,
        p: String,
        order: u32,
    },
    #[error("{p} is not congruent to 1 mod {order}")]
    WrongResidueClass { p: String, order: u32 },
    #[error("form {0} is not positive definite")]
    NotPositiveDefinite(String),
    #[error("form {0} is not primitive")]
    Imprimitive(String),
    #[error("{0} is not a negative discriminant (must be < 0 and 0 or 1 mod 4)")]
    InvalidDiscriminant(String),
    #[error("discriminants {0} and {1} differ")]
    DiscMismatch(String, String),
    #[error("{what} = {value} exceeds the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: String,
        bound: String,
    },
    #[error("{p} does not split in the field of discriminant {disc}")]
    NotSplit { p: String, disc: String },
    #[error("{p} ramifies (divides {disc})")]
    Ramified { p: String, disc: String },
    #[error("{0} is not a prime")]
    NotPrime(String),
    #[error("{0} is not squarefree (or not > 1)")]
    NotSquarefree(String),
    #[error("continued fraction of sqrt({d}) did not close within {cap} steps")]
    RegulatorTooLarge { d: String, cap: u64 },
    #[error("unit is not congruent to +1 or -1 mod 4")]
    NotCongruentPlusMinusOne,
    #[error("{root} is not a square root of {d} mod {p}")]
    RootMismatch { root: String, d: String, p: String },
    #[error("{a} is not a quadratic residue mod {p}; its quartic symbol is not +-1")]
    NotQuadraticResidue { a: String, p: String },
    #[error("{p} divides 6 times the polynomial discriminant {disc}")]
    BadPrime { p: String, disc: String },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("class group structure: {0}")]
    StructureError(String),
    #[error("integer overflow in {0}; use a wider scalar")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
