//! Exact symbolic computation in the rational cohomology Hopf algebras of
//! `BU` and `BSO`.
//!
//! The crate classifies near-primitive characteristic classes, builds the
//! algebras of generalised Miller–Morita–Mumford (MMM) classes, decides which
//! MMM characteristic numbers depend only on the cobordism class of the total
//! space, and checks all of it on concrete projective bundles.
//!
//! Layout, bottom-up:
//!
//! - [`exactq`]: rationals, dense matrices, row reduction and subspaces.
//! - [`gradedalg`]: graded-commutative polynomials over weighted alphabets,
//!   tensors, monomial enumeration and the shared text grammar.
//! - [`hopfmodel`]: `H*(BU;Q)` and `H*(BSO;Q)`, their coproducts, Newton
//!   primitives, character components, the `L`-class and restrictions.
//! - [`nearprim`]: spaces of near-primitives, three ways, and `NP_d`.
//! - [`mmm`]: the algebras `C_d`, the hat map, the ideal `K`, and the
//!   bordism-invariance decision procedure.
//! - [`bundles`]: projective bundles with explicit cohomology rings.

pub mod bundles;
pub mod error;
pub mod exactq;
pub mod gradedalg;
pub mod hopfmodel;
pub mod mmm;
pub mod nearprim;

pub use error::{Error, Result};
pub use exactq::{QMatrix, Rational, Subspace};
pub use gradedalg::{GeneratorAlphabet, Monomial, Parity, Polynomial, TensorElement};
pub use hopfmodel::{HopfModel, ModelKind, RestrictedModel};
pub use mmm::{Flavor, MmmAlgebra};
pub use nearprim::NearPrimQuery;
