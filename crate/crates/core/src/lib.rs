//! Exact-arithmetic toolkit for special forms: alternating tensors on
//! Euclidean space whose components in an orthonormal basis are integers
//! (the interesting ones all being -1, 0 or +1).
//!
//! The crate provides
//!
//! * [`exterior`] — canonical component storage, wedge, Hodge star, plane
//!   contraction, restriction and linear operations over exact integers;
//! * [`symmetry`] — the hyperoctahedral group `S_d ⋉ Z_2^d` acting on
//!   components, census searches for permutation/orthogonal symmetries and
//!   antisymmetries, commutator subgroups, stability groups, presentations
//!   and canonical orbit representatives;
//! * [`construct`] — nested embedding schemes that build higher forms from
//!   lower ones, plus a catalog of named forms (volume forms, Kähler forms,
//!   the octonionic 3-form, the Spin(7) 4-form, the ten dimensional 6-form,
//!   the complex-coordinate 4-form family and the twelve dimensional
//!   8-forms);
//! * [`spectral`] — 2k-forms as exact endomorphisms of k-forms,
//!   characteristic polynomials over big integers, eigenspace dimensions and
//!   infinitesimal stabilizer dimensions;
//! * [`su2`] — the exact `su(2)` generator fixture over `Q[√3]` and
//!   `Q[i,√3]` together with its verification report;
//! * [`invariants`] — scalar invariants of 2-forms in four dimensions, the
//!   orbit classifier, and distance-labelled vertex graphs of supports.
//!
//! All arithmetic is exact. Core containers are generic over the coefficient
//! scalar (anything integer-like via `num-traits`/`num-integer`); the aliases
//! below fix the concrete types used throughout the crate.
//!
//! ```
//! use num_bigint::BigInt;
//! use specforms::construct;
//! use specforms::spectral::endomorphism_matrix;
//! use specforms::symmetry::permutation_census;
//!
//! // the octonionic 3-form: seven components, all ±1
//! let psi = construct::g2();
//! assert_eq!(psi.weight(), 7);
//! assert!(psi.is_special());
//!
//! // its permutation symmetry group has order 21 and acts transitively
//! let census = permutation_census(&psi).unwrap();
//! assert_eq!(census.symmetry_order(), 21);
//! assert!(census.democratic);
//!
//! // the volume form on R^4 acts on 2-forms with spectrum ±1
//! let eps = construct::epsilon(4).unwrap();
//! let matrix = endomorphism_matrix(&eps, 2).unwrap();
//! let poly = matrix.map(|v| BigInt::from(*v)).char_poly();
//! assert_eq!(poly.coeffs().len(), 7); // degree C(4,2) = 6
//! ```

pub mod construct;
pub mod error;
pub mod exterior;
pub mod invariants;
pub mod linalg;
pub mod scalar;
pub mod spectral;
pub mod su2;
pub mod symmetry;

pub use error::Error;

/// Default coefficient type for forms. Form coefficients stay tiny (wedge
/// products of the catalog forms never leave `i64` range).
pub type Coeff = i64;

/// The concrete form type used by the higher-level modules.
pub type Form = exterior::SpecialForm<Coeff>;

/// Exact endomorphism matrices; characteristic polynomials and kernel ranks
/// need arbitrary precision.
pub type EndomorphismMatrix = linalg::Matrix<num_bigint::BigInt>;

/// Polynomials with arbitrary-precision integer coefficients.
pub type IntPolynomial = linalg::Poly<num_bigint::BigInt>;

/// Convenience result alias.
pub type Result<T> = std::result::Result<T, Error>;
