//! Seeded random inputs for the property suites.
//!
//! Float draws are uniform on simple boxes and discs. Exact draws are small
//! rationals, and exact momenta are built so that `p₀` is rational.

use num_traits::Zero;
use rand::Rng;

use crate::matrix::Matrix2;
use crate::momentum::{EnergySign, MomentumState};
use crate::scalar::{ComplexScalar, Exact, Float, Rational, RealScalar};
use crate::spin_tensor::Herm2;
use crate::spinor::Spinor2;

/// Float SL(2,C) draws whose raw determinant is below this are redrawn.
pub const SL2_DET_FLOOR: f64 = 1e-2;

/// Backend-specific random generation.
pub trait Sample: ComplexScalar {
    /// A real number of order one.
    fn sample_real<G: Rng + ?Sized>(rng: &mut G) -> Self::Real;

    /// A complex number of order one.
    fn sample<G: Rng + ?Sized>(rng: &mut G) -> Self;

    /// An element of SL(2,C).
    fn sample_sl2<G: Rng + ?Sized>(rng: &mut G) -> Matrix2<Self>;

    /// A positive-energy mass-shell state. On the exact backend `p₀` is rational.
    fn sample_momentum<G: Rng + ?Sized>(rng: &mut G) -> MomentumState<Self::Real>;
}

impl Sample for Float {
    fn sample_real<G: Rng + ?Sized>(rng: &mut G) -> f64 {
        rng.gen_range(-1.0..=1.0)
    }

    /// Uniform on the closed unit disc.
    fn sample<G: Rng + ?Sized>(rng: &mut G) -> Float {
        loop {
            let z = Float::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
            if z.norm_sqr() <= 1.0 {
                return z;
            }
        }
    }

    fn sample_sl2<G: Rng + ?Sized>(rng: &mut G) -> Matrix2<Float> {
        loop {
            let m = Matrix2::from_fn(|_, _| Self::sample(rng));
            let det = m.det();
            if det.norm() >= SL2_DET_FLOOR {
                return m.scale(&(Float::new(1.0, 0.0) / det.sqrt()));
            }
        }
    }

    fn sample_momentum<G: Rng + ?Sized>(rng: &mut G) -> MomentumState<f64> {
        let m = rng.gen_range(0.5..=5.0);
        let p = std::array::from_fn(|_| rng.gen_range(-5.0..=5.0));
        MomentumState::positive(m, p).expect("positive mass")
    }
}

fn small_rational<G: Rng + ?Sized>(rng: &mut G) -> Rational {
    Rational::new(
        rng.gen_range(-12i64..=12).into(),
        rng.gen_range(1i64..=6).into(),
    )
}

impl Sample for Exact {
    fn sample_real<G: Rng + ?Sized>(rng: &mut G) -> Rational {
        small_rational(rng)
    }

    fn sample<G: Rng + ?Sized>(rng: &mut G) -> Exact {
        Exact::new(small_rational(rng), small_rational(rng))
    }

    /// `[[a, b], [c, (1 + bc)/a]]` with `a ≠ 0`.
    fn sample_sl2<G: Rng + ?Sized>(rng: &mut G) -> Matrix2<Exact> {
        let a = loop {
            let a = Self::sample(rng);
            if !a.is_zero() {
                break a;
            }
        };
        let b = Self::sample(rng);
        let c = Self::sample(rng);
        let d = (Exact::from_i64(1) + b.clone() * c.clone()) / a.clone();
        Matrix2::new(a, b, c, d)
    }

    /// With `K = p₁² + p₂² + m²` and `t > 0`, `p₀ = (t + K/t)/2` and
    /// `p₃ = (K/t - t)/2` satisfy `p₀² - p₃² = K`.
    fn sample_momentum<G: Rng + ?Sized>(rng: &mut G) -> MomentumState<Rational> {
        let m = Rational::from_i64(rng.gen_range(1..=6));
        let p1 = Rational::from_i64(rng.gen_range(-6..=6));
        let p2 = Rational::from_i64(rng.gen_range(-6..=6));
        let t = Rational::new(
            rng.gen_range(1i64..=8).into(),
            rng.gen_range(1i64..=3).into(),
        );
        let k = p1.clone() * p1.clone() + p2.clone() * p2.clone() + m.clone() * m.clone();
        let p3 = (k / t.clone() - t) * Rational::half();
        MomentumState::positive(m, [p1, p2, p3]).expect("p₀ is rational by construction")
    }
}

pub fn random_spinor<S: Sample, G: Rng + ?Sized>(rng: &mut G) -> Spinor2<S> {
    Spinor2::new(S::sample(rng), S::sample(rng))
}

/// An invertible 2×2 matrix with unrestricted determinant.
pub fn random_gl2<S: Sample, G: Rng + ?Sized>(rng: &mut G) -> Matrix2<S> {
    loop {
        let m = Matrix2::from_fn(|_, _| S::sample(rng));
        if !m.det().is_zero() {
            return m;
        }
    }
}

pub fn random_hermitian<S: Sample, G: Rng + ?Sized>(rng: &mut G) -> Herm2<S> {
    let a = S::from_real(S::sample_real(rng));
    let d = S::from_real(S::sample_real(rng));
    let b = S::sample(rng);
    Herm2::symmetrized(Matrix2::new(a, b.clone(), b.conj(), d))
}

/// A mass-shell state with the requested energy sign.
pub fn random_momentum<S: Sample, G: Rng + ?Sized>(
    rng: &mut G,
    sign: EnergySign,
) -> MomentumState<S::Real> {
    let s = S::sample_momentum(rng);
    MomentumState::new(s.mass().clone(), s.spatial().clone(), sign).expect("same p₀ up to sign")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sl2_samples_are_unimodular() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            assert_eq!(Exact::sample_sl2(&mut rng).det(), Exact::from_i64(1));
            let det = Float::sample_sl2(&mut rng).det();
            assert!((det - Float::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn exact_momenta_on_shell() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let s = random_momentum::<Exact, _>(&mut rng, EnergySign::Negative);
            assert!(s.mass_shell_defect().is_zero());
            assert!(s.energy() < &Rational::zero());
        }
    }

    #[test]
    fn seeded_draws_repeat() {
        let a: Vec<Spinor2<Float>> = {
            let mut rng = ChaCha8Rng::seed_from_u64(42);
            (0..5).map(|_| random_spinor(&mut rng)).collect()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let b: Vec<Spinor2<Float>> = (0..5).map(|_| random_spinor(&mut rng)).collect();
        assert_eq!(a, b);
    }
}
