//! Exact arithmetic for finite-dimensional Lie superalgebras over fields of
//! characteristic 2.
//!
//! In characteristic 2 the odd-odd bracket of a Lie superalgebra degenerates
//! and is replaced by a *squaring* `s: g_1 -> g_0` whose polarization
//! recovers the bracket: `[x,y] = s(x+y) + s(x) + s(y)`.  Everything in this
//! crate is built around that convention: verification of the modified
//! Jacobi identities, degree-1/2 cohomology with squaring components,
//! left-symmetric and left-alternative products, queerification, connections
//! with their torsion/curvature pairs, and Lagrangian (`T*`/`ΠT*`)
//! extensions of quasi-Frobenius Lie superalgebras.
//!
//! All computations are exact, over `GF(2^k)` with bit-packed elements.

pub mod catalog;
pub mod cohomology;
pub mod connections;
pub mod field;
pub mod format;
pub mod forms;
pub mod lagrange;
pub mod leftsym;
pub mod linalg;
pub mod superalg;

pub use field::{El, Field};
pub use linalg::{Matrix, Subspace};
pub use superalg::{LieSuperalgebra, SuperDim};

use std::fmt;

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DegreeOutOfRange(u32),
    ReducibleModulus(u32),
    DivisionByZero,
    FieldMismatch,
    AmbientMismatch,
    NotASubspace,
    DimensionMismatch,
    NotOdd,
    NotHomogeneous,
    NotAnIdeal,
    InvalidRepresentation(String),
    NotRestricted(String),
    NotLeftSymmetric(String),
    NotLeftAlternative(String),
    NotADerivation(String),
    NotInvertible,
    NotRotaBaxter(String),
    NotCompatible(String),
    NotFlat(String),
    NotPostLie(String),
    NotFlatParallel(String),
    NotLagrangianCocycle(String),
    BaseMismatch,
    DimensionTooLarge(String),
    QuasiFrobeniusViolation(String),
    ConstraintViolation(String),
    UnknownEntry(String),
    Parse { line: usize, msg: String },
    Verification(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Error::*;
        match self {
            DegreeOutOfRange(k) => write!(f, "extension degree {} out of range 1..=16", k),
            ReducibleModulus(m) => write!(f, "modulus {:#x} is reducible over GF(2)", m),
            DivisionByZero => write!(f, "division by zero"),
            FieldMismatch => write!(f, "elements belong to different fields"),
            AmbientMismatch => write!(f, "subspaces have different ambient dimensions"),
            NotASubspace => write!(f, "second space is not contained in the first"),
            DimensionMismatch => write!(f, "vector length does not match the algebra dimension"),
            NotOdd => write!(f, "vector is not purely odd"),
            NotHomogeneous => write!(f, "subspace is not spanned by parity-homogeneous vectors"),
            NotAnIdeal => write!(f, "subspace is not an ideal"),
            InvalidRepresentation(s) => write!(f, "not a representation: {}", s),
            NotRestricted(s) => write!(f, "not a restricted Lie algebra: {}", s),
            NotLeftSymmetric(s) => write!(f, "product is not left-symmetric: {}", s),
            NotLeftAlternative(s) => write!(f, "product is not left-alternative: {}", s),
            NotADerivation(s) => write!(f, "map is not a derivation: {}", s),
            NotInvertible => write!(f, "map is not invertible"),
            NotRotaBaxter(s) => write!(f, "map is not a Rota-Baxter operator: {}", s),
            NotCompatible(s) => write!(f, "product is not compatible with the algebra: {}", s),
            NotFlat(s) => write!(f, "connection is not flat/torsion-free: {}", s),
            NotPostLie(s) => write!(f, "not a post-Lie superalgebra: {}", s),
            NotFlatParallel(s) => write!(f, "connection is not flat parallel: {}", s),
            NotLagrangianCocycle(s) => write!(f, "cocycle fails a Lagrangian condition: {}", s),
            BaseMismatch => write!(f, "extension tuples live over different bases"),
            DimensionTooLarge(s) => write!(f, "exhaustive search refused: {}", s),
            QuasiFrobeniusViolation(s) => write!(f, "form is not quasi-Frobenius: {}", s),
            ConstraintViolation(s) => write!(f, "parameter constraint violated: {}", s),
            UnknownEntry(s) => write!(f, "unknown catalog entry: {}", s),
            Parse { line, msg } => write!(f, "parse error at line {}: {}", line, msg),
            Verification(s) => write!(f, "verification failed: {}", s),
        }
    }
}

impl std::error::Error for Error {}

/// Outcome of an identity check: an empty failure list means pass.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub failures: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(&mut self, msg: String) {
        self.failures.push(msg);
    }

    pub fn merge(&mut self, other: Report) {
        self.failures.extend(other.failures);
    }

    /// Turns a failing report into an error built by `f`.
    pub fn into_result<F: FnOnce(String) -> Error>(self, f: F) -> Result<(), Error> {
        if self.passed() {
            Ok(())
        } else {
            Err(f(self.failures.join("; ")))
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "pass")
        } else {
            writeln!(f, "{} failure(s):", self.failures.len())?;
            for e in &self.failures {
                writeln!(f, "  {}", e)?;
            }
            Ok(())
        }
    }
}

/// Deterministic pseudo-random stream of field elements.
///
/// A fixed-increment linear congruential generator; the identity suites use
/// it so that "random connection" tests are reproducible bit for bit.
#[derive(Debug, Clone)]
pub struct ElStream {
    state: u64,
}

impl ElStream {
    pub fn new(seed: u64) -> Self {
        ElStream {
            state: seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.state
    }

    /// Next element of `field`, uniform over the 2^k words.
    pub fn next_el(&mut self, field: field::Field) -> u32 {
        (self.next_u64() >> 33) as u32 & (field.order() - 1)
    }
}
