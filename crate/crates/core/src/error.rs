use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("binomial coefficient with negative top {0} is not supported")]
    NegativeBinomialTop(i64),

    #[error("filter modulus {0} is not supported (expected 4 or 6)")]
    FilterModulus(u32),

    #[error("filter residue {residue} must be below the modulus {modulus}")]
    FilterResidue { residue: u32, modulus: u32 },

    #[error("roots-of-unity filter for C({top}, {residue} + {modulus}l) disagrees with direct summation: direct {direct}, filter {filter}")]
    FilterMismatch {
        top: u32,
        residue: u32,
        modulus: u32,
        direct: String,
        filter: String,
    },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("term with half-exponent {0} cannot be placed in a power series")]
    NotASeries(i64),

    #[error("series inversion needs a constant term of +1 or -1, found {0}")]
    NonUnitConstant(String),

    #[error("infinite q-Pochhammer product needs a truncation order")]
    InfiniteProduct,

    #[error("truncated product base must be a positive integer power of q, got q^({0}/2)")]
    NonIntegralBase(i64),

    #[error("partition parts must be positive, got lower bound {0}/2")]
    NonPositivePart(i64),

    #[error("enumeration oracle supports b <= 16 and M <= 8, got b = {hi}, M = {parts}")]
    OracleRange { hi: i64, parts: i64 },

    #[error("invalid A-polynomial parameters: {0}")]
    APolyParams(String),

    #[error("ground set with {size} elements exceeds the enumeration bound {bound}")]
    EnumerationBound { size: usize, bound: usize },

    #[error("layout {layout} {reason}")]
    Layout {
        layout: &'static str,
        reason: String,
    },

    #[error("subset {0:#b} is outside the domain of the involution")]
    NotInDomain(u32),

    #[error("({n}, {m}) is outside the domain of {case}")]
    Domain { case: &'static str, n: i64, m: i64 },

    #[error("unknown identity case `{0}`")]
    UnknownCase(String),

    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("stabilization guard failed for {case} at order {order}")]
    Unstable { case: &'static str, order: usize },

    #[error("{0}")]
    LawViolation(String),
}
