use alloc::string::String;
use core::fmt;

/// Errors reported by the fallible operations of this crate.
///
/// Mixing elements of different groups in arithmetic is a programmer error
/// and panics instead of returning one of these.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Group parameters violate `p | m`, or a component is zero.
    InvalidParams { m: u64, p: u64, n: usize },
    /// A permutation image array is not a bijection on `{1..n}`.
    NotABijection,
    /// An input array does not have length `n`.
    LengthMismatch { expected: usize, got: usize },
    /// The element's total weight is not `0 (mod p)`, so it lies outside
    /// `G(m, p, n)` and the requested statistic is undefined for it.
    NotAMember { total_weight: u64, p: u64 },
    /// An enumeration or search would exceed the configured cap.
    CapExceeded { required: u128, cap: u128 },
    /// The group order `m^n * n! / p` overflows the supported range.
    OrderOverflow,
    /// Malformed element text.
    Parse(String),
    /// A documented precondition of the operation does not hold for the
    /// given input; the message names the violated condition.
    Precondition(&'static str),
    /// The statistic fails the subadditive-statistic contract on the given
    /// carrier (nonzero at the identity, zero away from it, or a violated
    /// subadditivity triple).
    InvalidStatistic(&'static str),
    /// The statistic is not constant on conjugacy classes, so the requested
    /// poset symmetry is not defined.
    NotAClassFunction,
    /// The operation is only defined for `p = 1` or `p = m`.
    UnsupportedParams { m: u64, p: u64 },
}

impl core::error::Error for Error {}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParams { m, p, n } => {
                write!(
                    f,
                    "invalid group parameters G({m},{p},{n}): need m,p,n >= 1 and p | m"
                )
            }
            Error::NotABijection => write!(f, "permutation images are not a bijection"),
            Error::LengthMismatch { expected, got } => {
                write!(f, "expected array of length {expected}, got {got}")
            }
            Error::NotAMember { total_weight, p } => {
                write!(
                    f,
                    "element has total weight {total_weight} which is not 0 mod {p}"
                )
            }
            Error::CapExceeded { required, cap } => {
                write!(f, "size {required} exceeds the configured cap {cap}")
            }
            Error::OrderOverflow => write!(f, "group order overflows u128"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
            Error::InvalidStatistic(what) => write!(f, "invalid statistic: {what}"),
            Error::NotAClassFunction => {
                write!(f, "statistic is not constant on conjugacy classes")
            }
            Error::UnsupportedParams { m, p } => {
                write!(f, "operation undefined for G({m},{p},n) with 1 < p < m")
            }
        }
    }
}
