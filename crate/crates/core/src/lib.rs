//! Cohomology rings of moment-angle complexes and their real and generalized
//! analogues, computed from finite combinatorial dga/dgc models attached to a
//! simplicial complex.
//!
//! The crate is organized bottom-up:
//!
//! * [`scalar`], [`matrix`], [`snf`]: exact linear algebra, generic over the
//!   scalar type (arbitrary-precision integers, rationals, prime fields).
//! * [`vertex_set`], [`simplicial`], [`chains`]: simplicial complexes on a
//!   fixed ground set, barycentric subdivision, dual-block pairs, and ordered
//!   simplicial (co)chain complexes.
//! * [`based`], [`homology`]: degree-graded complexes with named bases and
//!   their (co)homology with invariant factors and chosen representatives.
//! * [`monomial`], [`rewrite`], [`models`]: the finite algebra and coalgebra
//!   models, their differentials, products and coproducts.
//! * [`ring`], [`hochster`], [`polytope`]: cohomology rings, bigraded Betti
//!   tables, and the polytopal comparison of cup products with the
//!   component-wise product.
//! * [`verify`]: executable invariant suites and a seeded random-complex
//!   generator.

pub mod based;
pub mod chains;
pub mod error;
pub mod hochster;
pub mod homology;
pub mod matrix;
pub mod models;
pub mod monomial;
pub mod polytope;
pub mod rewrite;
pub mod ring;
pub mod scalar;
pub mod simplicial;
pub mod snf;
pub mod verify;
pub mod vertex_set;

/// Arbitrary-precision integer scalar used for all integral computations.
pub type Int = num_bigint::BigInt;
/// Exact rational scalar used for computations over the field of fractions.
pub type Rat = num_rational::BigRational;

/// Matrix over the integers.
pub type IntMat = matrix::Mat<Int>;
/// Matrix over the rationals.
pub type RatMat = matrix::Mat<Rat>;
/// Matrix over a prime field with runtime modulus.
pub type FpMat = matrix::Mat<scalar::Fp>;

pub use error::Error;
