use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows} rows but a row of length {cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },
    #[error("matrix is not positive semidefinite (eigenvalue {eigenvalue:e})")]
    NotPositiveSemidefinite { eigenvalue: f64 },
    #[error("matrix is numerically singular")]
    Singular,
    #[error("group axiom violated: {0}")]
    GroupAxiom(#[from] AxiomViolation),
    #[error("table entry out of range at ({row}, {col}): {value}")]
    TableEntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("representation image count {images} does not match group order {order}")]
    ImageCountMismatch { images: usize, order: usize },
    #[error("image of element {index} is numerically singular")]
    SingularImage { index: usize },
    #[error("curve does not evaluate to the identity at parameter zero (deviation {deviation:e})")]
    CurveNotIdentity { deviation: f64 },
    #[error("parameter index {index} out of range for {count} parameters")]
    ParameterOutOfRange { index: usize, count: usize },
    #[error("coefficient vector length {got} does not match generator count {expected}")]
    CoefficientLengthMismatch { got: usize, expected: usize },
    #[error("generator basis is not linearly independent")]
    DependentBasis,
    #[error("bracket leaves the span of the basis (residual {residual:e}): not closed")]
    NotClosed { residual: f64 },
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("quaternion is not unit (norm {norm})")]
    NonUnitQuaternion { norm: f64 },
    #[error("quaternion has non-zero real part ({real})")]
    NonPureQuaternion { real: f64 },
    #[error("axis is not a unit vector (norm {norm})")]
    NonUnitAxis { norm: f64 },
    #[error("matrix does not satisfy the metric-preservation constraint (deviation {deviation:e})")]
    NotLorentz { deviation: f64 },
    #[error("time-time entry {value} has magnitude below 1: corrupted input")]
    InvalidTimeComponent { value: f64 },
    #[error("stability bound violated: dt/dx = {ratio} exceeds 0.5")]
    Unstable { ratio: f64 },
    #[error("lattice extent {0} below minimum of 8 sites")]
    ExtentTooSmall(usize),
    #[error("unsupported spatial dimensionality {0} (expected 1 or 3)")]
    BadDims(usize),
    #[error("initial-condition spec {0:?} not recognized")]
    BadInitialCondition(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// First violated group axiom, with witness elements.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AxiomViolation {
    #[error("closure fails: table[{a}][{b}] = {value} is out of range")]
    Closure { a: usize, b: usize, value: usize },
    #[error("associativity fails at triple ({a}, {b}, {c})")]
    Associativity { a: usize, b: usize, c: usize },
    #[error("no two-sided identity element exists")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
}
