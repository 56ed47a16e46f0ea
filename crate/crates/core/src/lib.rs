//! Exact arithmetic for rank-2 even lattices and the automorphism groups of
//! the K3 surfaces they carry as Néron–Severi lattices.
//!
//! Everything here is integer-exact: elements of real quadratic orders are
//! pairs of (doubled) integers, cone membership is decided by sign tests on
//! quadratic irrationals, and group structure claims come with finite-depth
//! word certificates instead of floating-point evidence.
//!
//! The crate is organised bottom-up:
//!
//! * [`quad`] — arithmetic in the order of `Q(√D)` attached to a non-square
//!   radicand `D`, plus exact quadratic rationals for cone geometry.
//! * [`cf`] — periodic continued-fraction expansion of `√D`.
//! * [`pell`] — fundamental units and the generalized Pell equations
//!   `a² − D·b² = N` for `N ∈ {±1, ±4}`, with solvability certificates.
//! * [`lattice`] — even rank-2 Gram forms, root and isotropic classes,
//!   isometries, and the discriminant group with its induced actions.
//! * [`cone`] — positive-cone chambers: walls, boundary rays, and exact
//!   chamber-preservation tests.
//! * [`aut`] — assembly of the automorphism group: gluing filter, group
//!   classification with word-collision certificates, and full reports.
//!
//! All number types are generic over a [`scalar::Scalar`]; the aliases below
//! fix the arbitrary-precision instantiation used by the CLI.

pub mod aut;
pub mod cf;
pub mod cone;
pub mod disc;
pub mod lattice;
pub mod pell;
pub mod quad;
pub mod scalar;

pub use scalar::Scalar;

use std::fmt;

/// Arbitrary-precision scalar used by the CLI and the report layer.
pub type Big = num_bigint::BigInt;

pub type BigQuadInt = quad::QuadInt<Big>;
pub type BigQuadRat = quad::QuadRat<Big>;
pub type BigGram = lattice::GramForm<Big>;
pub type BigVector = lattice::LatticeVector<Big>;
pub type BigIsometry = lattice::IsometryMatrix<Big>;
pub type BigChamber = cone::Chamber<Big>;
pub type BigAutReport = aut::AutReport<Big>;

/// Domain errors. Values are carried as strings so the error type stays
/// independent of the scalar parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Radicand was a perfect square (or not positive).
    InvalidRadicand(String),
    /// Doubled coordinates `(a, b)` do not lie in the order for this radicand.
    OrderViolation { a: String, b: String, d: String },
    /// Two quadratic numbers over different radicands were combined.
    MismatchedRadicands(String, String),
    /// Division by zero in quadratic-rational arithmetic.
    ZeroDenominator,
    /// Right-hand side of a Pell problem outside {±1, ±4}.
    UnsupportedRhs(String),
    /// A claimed Pell solution does not satisfy its equation.
    NotASolution,
    /// Gram form with an odd diagonal entry (the lattice must be even).
    OddDiagonal(String),
    /// Gram form with determinant zero.
    DegenerateForm,
    /// Operation requires signature (1,1).
    NotHyperbolic { signature: (u8, u8) },
    /// Family parameter d must be odd and ≥ 3.
    InvalidFamilyParameter(String),
    /// Matrix does not satisfy `Mᵀ·Q·M = Q`.
    NotAnIsometry,
    /// Isometries over different Gram forms were combined.
    MismatchedForms,
    /// Enumeration bound must be non-negative.
    NegativeBound(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidRadicand(d) => {
                write!(f, "radicand {d} must be a positive non-square integer")
            }
            Error::OrderViolation { a, b, d } => write!(
                f,
                "({a} + {b}√{d})/2 is not in the order: need 2 | a−bD and 4 | a²−Db²"
            ),
            Error::MismatchedRadicands(a, b) => {
                write!(f, "mismatched radicands √{a} vs √{b}")
            }
            Error::ZeroDenominator => write!(f, "division by zero"),
            Error::UnsupportedRhs(n) => {
                write!(f, "unsupported Pell right-hand side {n}: expected ±1 or ±4")
            }
            Error::NotASolution => write!(f, "pair does not solve the Pell equation"),
            Error::OddDiagonal(g) => {
                write!(f, "diagonal entry {g} is odd: the lattice must be even")
            }
            Error::DegenerateForm => write!(f, "Gram determinant is zero"),
            Error::NotHyperbolic { signature } => write!(
                f,
                "signature ({}, {}) unsupported: need (1,1)",
                signature.0, signature.1
            ),
            Error::InvalidFamilyParameter(d) => {
                write!(f, "family parameter d = {d} must be an odd integer ≥ 3")
            }
            Error::NotAnIsometry => write!(f, "matrix does not preserve the Gram form"),
            Error::MismatchedForms => write!(f, "isometries belong to different Gram forms"),
            Error::NegativeBound(b) => write!(f, "bound {b} must be non-negative"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
