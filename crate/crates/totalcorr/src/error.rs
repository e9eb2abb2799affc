use core::fmt;

/// Errors reported by state constructors, the matrix kernel, and the
/// correlation measures.
///
/// Subsystem labels in messages are 1-based, matching the public interfaces.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A matrix with zero rows or columns was requested.
    EmptyMatrix,
    /// A matrix entry is NaN or infinite.
    NonFiniteEntry,
    /// A square matrix was required.
    NonSquare { rows: usize, cols: usize },
    /// Hermiticity defect `max |a_ij - conj(a_ji)|` exceeds tolerance.
    NonHermitian { defect: f64 },
    /// An eigenvalue lies below `-zero_threshold`, so the operator logarithm
    /// is undefined.
    NegativeEigenvalue { eigenvalue: f64, threshold: f64 },
    /// Two matrices that must share dimensions do not.
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// A system shape must contain at least one party.
    EmptyShape,
    /// Every local dimension must be at least 2.
    BadLocalDimension { party: usize, dim: usize },
    /// The product of local dimensions overflows `usize`.
    ShapeTooLarge,
    /// The matrix size does not match the total dimension of the shape.
    WrongMatrixSize {
        expected: usize,
        rows: usize,
        cols: usize,
    },
    /// |tr(rho) - 1| exceeds tolerance.
    TraceNotOne { deviation: f64 },
    /// The minimum eigenvalue lies below the positive-semidefiniteness
    /// tolerance.
    NotPositiveSemidefinite { min_eigenvalue: f64 },
    /// A state vector is not normalized.
    BadNorm { norm: f64 },
    /// An amplitude vector has the wrong length for its shape.
    LengthMismatch { expected: usize, got: usize },
    /// A subsystem set must name at least one party.
    EmptySubsystemSet,
    /// A subsystem label appears more than once.
    DuplicateSubsystem { label: usize },
    /// A subsystem label is outside 1..=n.
    SubsystemOutOfRange { label: usize, num_parties: usize },
    /// A subsystem set was built for a system of a different arity.
    SubsystemArityMismatch {
        set_parties: usize,
        state_parties: usize,
    },
    /// A tensor product of zero factors was requested.
    EmptyTensorProduct,
    /// GHZ states need at least two qubits.
    BadArity { n: usize, min: usize },
    /// A mixing parameter must lie in [0, 1].
    BadMixingParameter { p: f64 },
    /// A probability is negative.
    NegativeProbability { index: usize, value: f64 },
    /// A probability vector does not sum to 1.
    DistributionNotNormalized { sum: f64 },
    /// More classical outcomes than the smallest local dimension supports.
    TooManyOutcomes { outcomes: usize, min_dim: usize },
    /// A Ginibre rank outside 1..=D was requested.
    BadRank { rank: usize, dim: usize },
    /// Two states that must share a system shape do not.
    ShapeMismatch,
    /// The measure needs at least two parties.
    SinglePartySystem,
    /// A bipartition cut must be a nonempty proper subset of the parties.
    BadCut { num_parties: usize },
    /// A reduction order `k` outside its valid range.
    BadK { k: usize, min: usize, max: usize },
    /// The operation requires a pure state.
    NotPure { entropy: f64 },
    /// The operation requires a system of a specific arity.
    WrongArity { expected: usize, got: usize },
    /// A relative-entropy term in an identity is infinite, so the identity
    /// cannot be evaluated.
    InfiniteTerm,
    /// A measure that must be nonnegative came out below the clamping band,
    /// indicating numerical breakdown rather than roundoff.
    NegativeMeasure { measure: &'static str, value: f64 },
    /// Permutation labels must be a rearrangement of (1, 2, 3).
    BadPermutation { labels: [usize; 3] },
    /// An ensemble run needs at least one sample.
    BadSampleCount,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyMatrix => write!(f, "matrix must have at least one row and column"),
            Error::NonFiniteEntry => write!(f, "matrix contains a NaN or infinite entry"),
            Error::NonSquare { rows, cols } => {
                write!(f, "expected a square matrix, got {rows}x{cols}")
            }
            Error::NonHermitian { defect } => {
                write!(f, "matrix is not Hermitian (defect {defect:.3e})")
            }
            Error::NegativeEigenvalue {
                eigenvalue,
                threshold,
            } => write!(
                f,
                "eigenvalue {eigenvalue:.3e} below -{threshold:.3e}; operator logarithm undefined"
            ),
            Error::DimensionMismatch { left, right } => write!(
                f,
                "dimension mismatch: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::EmptyShape => write!(f, "system shape must contain at least one party"),
            Error::BadLocalDimension { party, dim } => write!(
                f,
                "local dimension of party {party} is {dim}; every party needs dimension >= 2"
            ),
            Error::ShapeTooLarge => write!(f, "total dimension overflows usize"),
            Error::WrongMatrixSize {
                expected,
                rows,
                cols,
            } => write!(
                f,
                "matrix is {rows}x{cols} but the shape requires {expected}x{expected}"
            ),
            Error::TraceNotOne { deviation } => write!(
                f,
                "invariant violation: trace differs from 1 by {deviation:.3e}"
            ),
            Error::NotPositiveSemidefinite { min_eigenvalue } => write!(
                f,
                "invariant violation: minimum eigenvalue {min_eigenvalue:.3e} is negative beyond tolerance"
            ),
            Error::BadNorm { norm } => {
                write!(f, "amplitude vector has norm {norm:.12} instead of 1")
            }
            Error::LengthMismatch { expected, got } => write!(
                f,
                "amplitude vector has {got} entries but the shape requires {expected}"
            ),
            Error::EmptySubsystemSet => write!(f, "subsystem set must name at least one party"),
            Error::DuplicateSubsystem { label } => {
                write!(f, "subsystem {label} listed more than once")
            }
            Error::SubsystemOutOfRange {
                label,
                num_parties,
            } => write!(
                f,
                "subsystem {label} out of range; parties are labeled 1..={num_parties}"
            ),
            Error::SubsystemArityMismatch {
                set_parties,
                state_parties,
            } => write!(
                f,
                "subsystem set was built for {set_parties} parties but the state has {state_parties}"
            ),
            Error::EmptyTensorProduct => write!(f, "tensor product needs at least one factor"),
            Error::BadArity { n, min } => {
                write!(f, "arity {n} not supported; need at least {min} parties")
            }
            Error::BadMixingParameter { p } => {
                write!(f, "mixing parameter p = {p} outside [0, 1]")
            }
            Error::NegativeProbability { index, value } => {
                write!(f, "probability #{index} is negative ({value:.3e})")
            }
            Error::DistributionNotNormalized { sum } => {
                write!(f, "probabilities sum to {sum:.15} instead of 1")
            }
            Error::TooManyOutcomes { outcomes, min_dim } => write!(
                f,
                "{outcomes} outcomes exceed the smallest local dimension {min_dim}"
            ),
            Error::BadRank { rank, dim } => {
                write!(f, "rank {rank} outside 1..={dim}")
            }
            Error::ShapeMismatch => write!(f, "states live on different system shapes"),
            Error::SinglePartySystem => {
                write!(f, "measure undefined for a single-party system")
            }
            Error::BadCut { num_parties } => write!(
                f,
                "cut must be a nonempty proper subset of parties 1..={num_parties}"
            ),
            Error::BadK { k, min, max } => {
                if max < min {
                    write!(f, "no valid reduction order k for this arity (got k = {k})")
                } else {
                    write!(f, "reduction order k = {k} outside {min}..={max}")
                }
            }
            Error::NotPure { entropy } => write!(
                f,
                "state is not pure (entropy {entropy:.3e} bits exceeds tolerance)"
            ),
            Error::WrongArity { expected, got } => {
                write!(f, "check requires a {expected}-party system, got {got} parties")
            }
            Error::InfiniteTerm => write!(
                f,
                "a relative-entropy term is infinite (support condition failed)"
            ),
            Error::NegativeMeasure { measure, value } => write!(
                f,
                "{measure} came out {value:.3e}, below the allowed roundoff band"
            ),
            Error::BadPermutation { labels } => write!(
                f,
                "({}, {}, {}) is not a permutation of (1, 2, 3)",
                labels[0], labels[1], labels[2]
            ),
            Error::BadSampleCount => write!(f, "ensemble needs at least one sample"),
        }
    }
}

impl core::error::Error for Error {}
