//! Exact arithmetic and geometry of Lipschitz and Hurwitz integer
//! quaternions.
//!
//! Values are stored in doubled coordinates so that the half-odd elements
//! of the Hurwitz order are represented exactly.

pub mod arith;
pub mod cross;
pub mod error;
pub mod euclid;
pub mod experiment;
pub mod factor;
pub mod gaussian;
pub mod lattice;
pub mod literal;
pub mod quat;
pub mod verify;

pub use cross::{cross3, cross3_lipschitz, cross_general, determinant, ScaledQuaternion};
pub use error::{Error, Result};
pub use euclid::{
    cofactor, divmod, gaussian_gcd, gcd, is_lipschitz_multiple, is_multiple, DivisionResult,
    GcdResult,
};
pub use experiment::GcdConvention;
pub use factor::{factor_modelled, unit_migration_equal, ModelledFactorization, PrimeModel};
pub use gaussian::GaussianInteger;
pub use lattice::{orthogonal_basis, EnumBound, OrthogonalBasis, RepresentationKind};
pub use literal::{format_quaternion, parse_gaussian, parse_quaternion};
pub use quat::{units, HalfInteger, HurwitzQuaternion, Side};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
