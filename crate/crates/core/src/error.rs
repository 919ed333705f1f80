use core::fmt;

use crate::Label;

/// Errors shared across the crate. Each variant names the violated
/// precondition; none of them can arise from values built through the
/// checked constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Grids need at least two rows.
    RowCountTooSmall { m: usize },
    /// Grids need at least three columns (two would duplicate the column
    /// wrap edge and give a multigraph).
    ColCountTooSmall { n: usize },
    /// The operation only makes sense for an even column count; no
    /// face-magic labeling exists when n is odd.
    ColCountOdd { n: usize },
    /// The path-partition machinery requires an odd row count.
    RowCountEven { m: usize },
    /// The operation requires an even row count.
    RowCountOdd { m: usize },
    /// A labeling table must hold exactly m*n values.
    ValueCount { expected: usize, got: usize },
    /// Labels must lie in 1..=m*n.
    LabelRange { value: Label, max: Label },
    /// Labels must form a bijection onto 1..=m*n.
    LabelRepeated { value: Label },
    /// The two values live on grids of different dimensions.
    DimsMismatch,
    /// The 4m symmetry words did not induce 4m distinct cell permutations.
    GroupDegenerate { expected: usize, got: usize },
    /// A sum sequence must have exactly n/2 - 1 entries.
    SequenceLen { expected: usize, got: usize },
    /// Sum sequence entries are positive integers.
    SequenceValueZero,
    /// The labeling does not have constant face sums.
    NotMagic,
    /// `alpha` must be a permutation of 1..=m.
    AlphaNotPermutation,
    /// The sequence is a palindrome, so an orientation map `rho` is required.
    RhoRequired,
    /// The sequence is not a palindrome; `rho` must be omitted.
    RhoUnexpected,
    /// `rho` must assign a value to each of the m paths.
    RhoLen { expected: usize, got: usize },
    /// `rho` entries select one of the two path ends and must be 1 or 2.
    RhoValue { value: u8 },
    /// A construction parameter lies outside its admissible interval.
    ParamRange {
        name: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },
    /// A path label fell outside 1..=m*n.
    WitnessLabelRange { value: i64 },
    /// Consecutive path labels must sum to the prescribed sequence entry.
    WitnessSum { position: usize },
    /// A path visited the same complementary pair twice.
    WitnessRepeatedVertex,
    /// A path partition must consist of exactly m paths.
    PartitionPathCount { expected: usize, got: usize },
    /// The paths of a partition must cover every complementary pair exactly once.
    PartitionNotDisjoint,
    /// The grid exceeds the exhaustive-search cell budget.
    BudgetExceeded { cells: usize, budget: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::RowCountTooSmall { m } => {
                write!(f, "grid needs at least 2 rows, got m = {m}")
            }
            Error::ColCountTooSmall { n } => {
                write!(
                    f,
                    "grid needs at least 3 columns (n = 2 duplicates the wrap edge), got n = {n}"
                )
            }
            Error::ColCountOdd { n } => {
                write!(
                    f,
                    "operation requires an even column count; no face-magic labeling exists for odd n (got n = {n})"
                )
            }
            Error::RowCountEven { m } => {
                write!(
                    f,
                    "the path-partition machinery requires an odd row count, got m = {m}"
                )
            }
            Error::RowCountOdd { m } => {
                write!(f, "operation requires an even row count, got m = {m}")
            }
            Error::ValueCount { expected, got } => {
                write!(f, "labeling needs exactly {expected} values, got {got}")
            }
            Error::LabelRange { value, max } => {
                write!(f, "label {value} outside 1..={max}")
            }
            Error::LabelRepeated { value } => {
                write!(f, "label {value} used more than once; labels must be a bijection")
            }
            Error::DimsMismatch => write!(f, "grid dimensions do not match"),
            Error::GroupDegenerate { expected, got } => {
                write!(
                    f,
                    "symmetry group degenerate: expected {expected} distinct cell permutations, found {got}"
                )
            }
            Error::SequenceLen { expected, got } => {
                write!(f, "sum sequence needs n/2 - 1 = {expected} entries, got {got}")
            }
            Error::SequenceValueZero => write!(f, "sum sequence entries must be positive"),
            Error::NotMagic => write!(f, "labeling is not face-magic"),
            Error::AlphaNotPermutation => {
                write!(f, "alpha must be a permutation of 1..=m")
            }
            Error::RhoRequired => {
                write!(f, "sequence is a palindrome: an orientation map rho is required")
            }
            Error::RhoUnexpected => {
                write!(f, "sequence is not a palindrome: rho must be omitted")
            }
            Error::RhoLen { expected, got } => {
                write!(f, "rho needs {expected} entries, got {got}")
            }
            Error::RhoValue { value } => {
                write!(f, "rho entries must be 1 or 2, got {value}")
            }
            Error::ParamRange { name, value, lo, hi } => {
                write!(f, "parameter {name} = {value} outside {lo}..={hi}")
            }
            Error::WitnessLabelRange { value } => {
                write!(f, "path label {value} outside the label range")
            }
            Error::WitnessSum { position } => {
                write!(
                    f,
                    "path labels at positions {position},{} do not sum to the sequence entry",
                    position + 1
                )
            }
            Error::WitnessRepeatedVertex => {
                write!(f, "path visits a complementary pair twice")
            }
            Error::PartitionPathCount { expected, got } => {
                write!(f, "partition needs exactly {expected} paths, got {got}")
            }
            Error::PartitionNotDisjoint => {
                write!(f, "partition paths must cover every complementary pair exactly once")
            }
            Error::BudgetExceeded { cells, budget } => {
                write!(
                    f,
                    "{cells} cells exceed the search budget of {budget}; raise the budget to search this grid"
                )
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
