//! Complex scalars with two interchangeable backends.
//!
//! Every algebraic routine in this crate is generic over [`ComplexScalar`].
//! Two implementations ship:
//!
//! * [`Exact`]: Gaussian rationals backed by arbitrary-precision integers.
//!   Identities hold bit-exactly and [`ComplexScalar::approx_eq`] is plain
//!   equality.
//! * [`Float`]: `Complex<f64>`, compared through a [`TolerancePolicy`].
//!
//! Mixing backends inside one computation is impossible by construction: a
//! generic routine is instantiated for exactly one scalar type. The dynamic
//! [`Scalar`] enum exists for I/O boundaries, where the backend is only known
//! at runtime, and reports a mismatch as an error rather than coercing.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::ScalarError;

/// Arbitrary-precision rational number.
pub type Rational = BigRational;
/// Exact complex scalar (Gaussian rational).
pub type Exact = Complex<Rational>;
/// 64-bit floating point complex scalar.
pub type Float = Complex<f64>;

/// Which arithmetic a value or run uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl std::fmt::Display for Backend {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Backend::Exact => f.write_str("exact"),
            Backend::Float => f.write_str("float"),
        }
    }
}

/// Absolute and relative tolerances for float comparisons.
///
/// Ignored by the exact backend.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TolerancePolicy {
    abs_eps: f64,
    rel_eps: f64,
}

impl TolerancePolicy {
    pub fn new(abs_eps: f64, rel_eps: f64) -> Result<Self, ScalarError> {
        if !(abs_eps > 0.0 && abs_eps.is_finite()) || !(rel_eps > 0.0 && rel_eps.is_finite()) {
            return Err(ScalarError::InvalidTolerance { abs_eps, rel_eps });
        }
        Ok(Self { abs_eps, rel_eps })
    }

    /// Same value for both tolerances.
    pub fn uniform(eps: f64) -> Result<Self, ScalarError> {
        Self::new(eps, eps)
    }

    pub fn abs_eps(&self) -> f64 {
        self.abs_eps
    }

    pub fn rel_eps(&self) -> f64 {
        self.rel_eps
    }

    /// `|a-b| <= abs_eps + rel_eps * max(|a|, |b|)` for already-computed magnitudes.
    pub fn accepts(&self, diff: f64, scale: f64) -> bool {
        diff <= self.abs_eps + self.rel_eps * scale
    }
}

impl Default for TolerancePolicy {
    fn default() -> Self {
        Self {
            abs_eps: 1e-12,
            rel_eps: 1e-12,
        }
    }
}

/// Real field underlying a [`ComplexScalar`].
pub trait RealScalar:
    Clone
    + Debug
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    fn abs(&self) -> Self;

    /// Square root of a non-negative value.
    ///
    /// The exact backend only succeeds on squares of rationals.
    fn sqrt_nonneg(&self) -> Result<Self, ScalarError>;

    fn to_f64(&self) -> f64;

    fn approx_eq(&self, other: &Self, pol: &TolerancePolicy) -> bool;

    /// Whether `self` is zero relative to a magnitude `scale`
    /// (`|self| <= abs_eps + rel_eps * |scale|` on floats, `self == 0` exactly).
    fn is_negligible(&self, scale: &Self, pol: &TolerancePolicy) -> bool;

    fn max_of(a: Self, b: Self) -> Self {
        if b > a {
            b
        } else {
            a
        }
    }

    fn half() -> Self {
        Self::from_ratio(1, 2)
    }

    fn is_positive(&self) -> bool {
        *self > Self::zero()
    }
}

impl RealScalar for f64 {
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn sqrt_nonneg(&self) -> Result<Self, ScalarError> {
        if self.is_nan() || *self < 0.0 {
            return Err(ScalarError::NegativeSqrt(self.to_string()));
        }
        Ok(self.sqrt())
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn approx_eq(&self, other: &Self, pol: &TolerancePolicy) -> bool {
        pol.accepts((self - other).abs(), self.abs().max(other.abs()))
    }

    fn is_negligible(&self, scale: &Self, pol: &TolerancePolicy) -> bool {
        pol.accepts(self.abs(), scale.abs())
    }
}

impl RealScalar for Rational {
    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    fn abs(&self) -> Self {
        num_traits::Signed::abs(self)
    }

    fn sqrt_nonneg(&self) -> Result<Self, ScalarError> {
        if num_traits::Signed::is_negative(self) {
            return Err(ScalarError::NegativeSqrt(self.to_string()));
        }
        // BigRational is kept in lowest terms, so the root is rational iff
        // numerator and denominator are both perfect squares.
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Ok(Rational::new(n, d))
        } else {
            Err(ScalarError::NotExactlyRepresentable(self.to_string()))
        }
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn approx_eq(&self, other: &Self, _pol: &TolerancePolicy) -> bool {
        self == other
    }

    fn is_negligible(&self, _scale: &Self, _pol: &TolerancePolicy) -> bool {
        self.is_zero()
    }
}

/// Complex field used by every algebraic routine in the crate.
pub trait ComplexScalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    type Real: RealScalar;

    const BACKEND: Backend;

    fn new(re: Self::Real, im: Self::Real) -> Self;

    fn re(&self) -> Self::Real;

    fn im(&self) -> Self::Real;

    fn conj(&self) -> Self;

    /// `z * conj(z)`, always real and non-negative.
    fn norm_sqr(&self) -> Self::Real {
        self.re() * self.re() + self.im() * self.im()
    }

    fn from_real(r: Self::Real) -> Self {
        Self::new(r, Self::Real::zero())
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_real(Self::Real::from_ratio(num, den))
    }

    fn from_i64(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    /// The imaginary unit.
    fn imag_unit() -> Self {
        Self::new(Self::Real::zero(), Self::Real::one())
    }

    fn scale(&self, r: &Self::Real) -> Self {
        Self::new(self.re() * r.clone(), self.im() * r.clone())
    }

    /// `max(|re|, |im|)`: the sup-norm of the value viewed as a point of R².
    fn max_abs_component(&self) -> Self::Real {
        Self::Real::max_of(self.re().abs(), self.im().abs())
    }

    fn to_float(&self) -> Float {
        Float::new(self.re().to_f64(), self.im().to_f64())
    }

    fn approx_eq(&self, other: &Self, pol: &TolerancePolicy) -> bool;
}

impl ComplexScalar for Float {
    type Real = f64;

    const BACKEND: Backend = Backend::Float;

    fn new(re: f64, im: f64) -> Self {
        Complex::new(re, im)
    }

    fn re(&self) -> f64 {
        self.re
    }

    fn im(&self) -> f64 {
        self.im
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn approx_eq(&self, other: &Self, pol: &TolerancePolicy) -> bool {
        pol.accepts((self - other).norm(), self.norm().max(other.norm()))
    }
}

impl ComplexScalar for Exact {
    type Real = Rational;

    const BACKEND: Backend = Backend::Exact;

    fn new(re: Rational, im: Rational) -> Self {
        Complex::new(re, im)
    }

    fn re(&self) -> Rational {
        self.re.clone()
    }

    fn im(&self) -> Rational {
        self.im.clone()
    }

    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }

    fn approx_eq(&self, other: &Self, _pol: &TolerancePolicy) -> bool {
        self == other
    }
}

/// Explicit, lossy conversion from the exact backend.
pub fn to_float(z: &Exact) -> Float {
    z.to_float()
}

/// A complex scalar whose backend is only known at runtime.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(Exact),
    Float(Float),
}

impl Scalar {
    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Exact(_) => Backend::Exact,
            Scalar::Float(_) => Backend::Float,
        }
    }

    pub fn to_float(&self) -> Float {
        match self {
            Scalar::Exact(z) => z.to_float(),
            Scalar::Float(z) => *z,
        }
    }
}

impl From<Exact> for Scalar {
    fn from(z: Exact) -> Self {
        Scalar::Exact(z)
    }
}

impl From<Float> for Scalar {
    fn from(z: Float) -> Self {
        Scalar::Float(z)
    }
}

/// Compare two runtime-tagged scalars.
///
/// Exact values compare by equality; floats by
/// `|a-b| <= abs_eps + rel_eps * max(|a|,|b|)`. Comparing across backends is
/// an error.
pub fn approx_equal(a: &Scalar, b: &Scalar, pol: &TolerancePolicy) -> Result<bool, ScalarError> {
    match (a, b) {
        (Scalar::Exact(x), Scalar::Exact(y)) => Ok(x.approx_eq(y, pol)),
        (Scalar::Float(x), Scalar::Float(y)) => Ok(x.approx_eq(y, pol)),
        _ => Err(ScalarError::BackendMismatch {
            left: a.backend(),
            right: b.backend(),
        }),
    }
}

/// Square root of a non-negative real.
pub fn sqrt_nonneg<R: RealScalar>(x: &R) -> Result<R, ScalarError> {
    x.sqrt_nonneg()
}

/// Shorthand for an exact rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::from_ratio(num, den)
}

/// Shorthand for the Gaussian rational `re + im*i` with integer parts.
pub fn gauss(re: i64, im: i64) -> Exact {
    Exact::new(rat(re, 1), rat(im, 1))
}
