//! Two-component spinor algebra built from a complex pairing, the
//! `SL(2,C) → SO⁺(1,3)` covering map, boost-generated momentum space, and
//! Dirac bispinors in the momentum representation.
//!
//! All algebra is generic over [`ComplexScalar`](scalar::ComplexScalar), so
//! every identity can be checked bit-exactly with Gaussian rationals
//! ([`Exact`]) or at scale with floats ([`Float`]).

pub mod dirac;
pub mod error;
pub mod lorentz;
pub mod matrix;
pub mod momentum;
pub mod sampling;
pub mod scalar;
pub mod spin_tensor;
pub mod spinor;

pub use dirac::{Bispinor, GammaKind, GammaSet, SpinorField};
pub use error::{Error, Result, ScalarError};
pub use lorentz::{lift_lorentz, lorentz_matrix, LorentzMatrix};
pub use matrix::{Matrix2, Matrix4};
pub use momentum::{boost_for_momentum, Boost, EnergySign, MomentumState, UnitaryMetric};
pub use scalar::{
    Backend, ComplexScalar, Exact, Float, Rational, RealScalar, Scalar, TolerancePolicy,
};
pub use spin_tensor::{CausalClass, FourVector, Herm2, PauliBasis};
pub use spinor::{CoSpinorDotted, CovariantSpinor, EpsilonConvention, Spinor2};
