use thiserror::Error;

/// Errors produced while constructing or analyzing groups and rings.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed group spec `{0}`: {1}")]
    BadSpec(String, String),

    #[error("invalid Cayley table: {0}")]
    InvalidCayley(String),

    #[error("group of order {0} exceeds the {1}-element cap")]
    OrderCap(usize, usize),

    #[error("{0} requires a p-group (order {1} is not a prime power)")]
    NotPGroup(&'static str, usize),

    #[error("{0} requires an abelian group")]
    NotAbelian(&'static str),

    #[error("subgroup is not normal (witness: g={0}, h={1})")]
    NotNormal(usize, usize),

    #[error("mixed primes: {0} is only defined for p-primary groups over one prime")]
    MixedPrimes(&'static str),

    #[error("elements belong to different rings")]
    RingMismatch,

    #[error("automorphism is not central (witness element {0})")]
    NotCentral(usize),

    #[error("the order-p criterion is proved for odd p only; group has p = 2")]
    CriterionInapplicableP2,

    #[error("the order-p criterion applies to non-abelian groups only")]
    CriterionInapplicableAbelian,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("ring of size {0} exceeds the enumeration cap {1}")]
    RingCap(u128, usize),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
