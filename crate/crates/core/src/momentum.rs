//! The unitary metric `U = (C⁻¹)ᵀ conj(C⁻¹)` carried by an SL(2,C) change of
//! frame, its reading as a unit time-like covector `u_μ`, and the boost that
//! produces a prescribed momentum `p_μ = m u_μ`.
//!
//! Spatial momenta are taken as covariant components `p_k`; the contravariant
//! ones are `p^k = -p_k`. The boost `diag(a, 1/a)` with `a > 1` gives `u₃ < 0`,
//! i.e. motion along `+x³`.

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lorentz::{lorentz_matrix, LorentzMatrix};
use crate::matrix::Matrix2;
use crate::scalar::{ComplexScalar, RealScalar, TolerancePolicy};
use crate::spin_tensor::{decompose, recompose, scalar_square, FourVector, Herm2};
use crate::spinor::Spinor2;

/// A positive-definite Hermitian `U_{rṡ}` with `det U = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMetric<S> {
    u: Herm2<S>,
}

impl<S: ComplexScalar> UnitaryMetric<S> {
    pub fn new(u: Herm2<S>, pol: &TolerancePolicy) -> Result<Self> {
        let det = u.det();
        if !det.approx_eq(&S::Real::one(), pol) {
            return Err(Error::NotUnimodular {
                det: format!("{det:?}"),
            });
        }
        if !u.is_positive_definite() {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(Self { u })
    }

    pub fn identity() -> Self {
        Self {
            u: Herm2::identity(),
        }
    }

    /// `U = u_μ σ^μ` for a future unit covector; not validated.
    pub fn from_covector(u: &FourVector<S::Real>) -> Self {
        Self { u: recompose(u) }
    }

    /// `U_{rṡ}`, row `r`, column `ṡ`.
    pub fn lower(&self) -> &Matrix2<S> {
        self.u.matrix()
    }

    pub fn herm(&self) -> &Herm2<S> {
        &self.u
    }

    /// `U^{rṡ} = u₀ conj(σ)⁰ - u_k conj(σ)^k`, so that `U_{rṡ} U^{ṵṡ} = δ`.
    pub fn upper(&self) -> Matrix2<S> {
        self.u.matrix().adjugate().transpose()
    }

    pub fn covector(&self) -> FourVector<S::Real> {
        covector_from_metric(self)
    }

    /// `U_{rṡ} i^r conj(i^ṡ)`.
    pub fn form(&self, i: &Spinor2<S>) -> S::Real {
        let u = self.u.matrix();
        let mut acc = S::zero();
        for r in 0..2 {
            for s in 0..2 {
                acc = acc + u.m[r][s].clone() * i.0[r].clone() * i.0[s].conj();
            }
        }
        acc.re()
    }
}

/// `U = (C⁻¹)ᵀ conj(C⁻¹)`.
pub fn metric_from_sl2<S: ComplexScalar>(
    c: &Matrix2<S>,
    pol: &TolerancePolicy,
) -> Result<UnitaryMetric<S>> {
    let det = c.det();
    if !det.approx_eq(&S::one(), pol) {
        return Err(Error::NotUnimodular {
            det: format!("{det:?}"),
        });
    }
    let inv = c.inverse()?;
    let u = &inv.transpose() * &inv.conj();
    Ok(UnitaryMetric {
        u: Herm2::symmetrized(u),
    })
}

/// `u_μ = ½ tr(σ_μ U)`.
pub fn covector_from_metric<S: ComplexScalar>(u: &UnitaryMetric<S>) -> FourVector<S::Real> {
    decompose(&u.u)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EnergySign {
    #[default]
    Positive,
    Negative,
}

impl EnergySign {
    pub fn apply<R: RealScalar>(self, x: R) -> R {
        match self {
            EnergySign::Positive => x,
            EnergySign::Negative => -x,
        }
    }
}

/// A mass-shell momentum: mass `m > 0`, covariant spatial components `p_k`
/// and `p₀ = ±√(p² + m²)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumState<R> {
    m: R,
    p: [R; 3],
    sign: EnergySign,
    p0: R,
}

impl<R: RealScalar> MomentumState<R> {
    /// Fails on `m ≤ 0`, or on the exact backend when `p² + m²` is not the
    /// square of a rational.
    pub fn new(m: R, p: [R; 3], sign: EnergySign) -> Result<Self> {
        if !m.is_positive() {
            return Err(Error::NonPositiveMass(format!("{m:?}")));
        }
        let e2 = p
            .iter()
            .fold(m.clone() * m.clone(), |acc, x| acc + x.clone() * x.clone());
        let p0 = sign.apply(e2.sqrt_nonneg()?);
        Ok(Self { m, p, sign, p0 })
    }

    pub fn positive(m: R, p: [R; 3]) -> Result<Self> {
        Self::new(m, p, EnergySign::Positive)
    }

    pub fn at_rest(m: R) -> Result<Self> {
        Self::positive(m, [R::zero(), R::zero(), R::zero()])
    }

    pub fn mass(&self) -> &R {
        &self.m
    }

    /// Covariant spatial components `p_k`.
    pub fn spatial(&self) -> &[R; 3] {
        &self.p
    }

    pub fn energy(&self) -> &R {
        &self.p0
    }

    pub fn sign(&self) -> EnergySign {
        self.sign
    }

    /// `p_μ`.
    pub fn covariant(&self) -> FourVector<R> {
        FourVector {
            v: [
                self.p0.clone(),
                self.p[0].clone(),
                self.p[1].clone(),
                self.p[2].clone(),
            ],
        }
    }

    /// `p^μ`.
    pub fn contravariant(&self) -> FourVector<R> {
        self.covariant().flip_index()
    }

    /// The future unit covector `u_μ = ±p_μ/m` with `u₀ > 0`.
    pub fn velocity(&self) -> FourVector<R> {
        let inv = R::one() / self.m.clone();
        self.covariant().scale(&self.sign.apply(inv))
    }

    /// Unitary metric of the rest frame moved to `u = velocity()`.
    pub fn metric<S: ComplexScalar<Real = R>>(&self) -> UnitaryMetric<S> {
        UnitaryMetric::from_covector(&self.velocity())
    }

    /// `|g^{μν} p_μ p_ν - m²|`.
    pub fn mass_shell_defect(&self) -> R {
        (scalar_square(&self.covariant()) - self.m.clone() * self.m.clone()).abs()
    }
}

/// The Hermitian positive-definite boost `C` with `metric_from_sl2(C)` equal
/// to the metric of a given unit covector.
///
/// `C = M/√s` with `M = A + I`, `A = conj(U)⁻¹` and `s = det M = 2(u₀ + 1)`.
/// The metric and the Lorentz matrix are quadratic in `C` and stay rational
/// on the exact backend; only [`Boost::matrix`] needs `√s`.
#[derive(Debug, Clone, PartialEq)]
pub struct Boost<S: ComplexScalar> {
    shifted: Matrix2<S>,
    det: S::Real,
}

impl<S: ComplexScalar> Boost<S> {
    pub fn for_covector(u: &FourVector<S::Real>) -> Self {
        let a = UnitaryMetric::<S>::from_covector(u)
            .lower()
            .conj()
            .adjugate();
        let shifted = a + Matrix2::identity();
        let det = shifted.det().re();
        Self { shifted, det }
    }

    /// `M = A + I`.
    pub fn shifted(&self) -> &Matrix2<S> {
        &self.shifted
    }

    /// `s = det M`.
    pub fn scale_squared(&self) -> &S::Real {
        &self.det
    }

    /// `C = M/√s`. Exact only when `2(u₀ + 1)` is a rational square.
    pub fn matrix(&self) -> Result<Matrix2<S>> {
        let root = self.det.sqrt_nonneg()?;
        Ok(self.shifted.scale_real(&(S::Real::one() / root)))
    }

    /// `(C⁻¹)ᵀ conj(C⁻¹) = adj(M)ᵀ conj(adj M) / s`.
    pub fn metric(&self) -> UnitaryMetric<S> {
        let adj = self.shifted.adjugate();
        let u = (&adj.transpose() * &adj.conj()).scale_real(&(S::Real::one() / self.det.clone()));
        UnitaryMetric {
            u: Herm2::symmetrized(u),
        }
    }

    /// `L(C) = L(M)/s`.
    pub fn lorentz(&self) -> LorentzMatrix<S::Real> {
        let l = lorentz_matrix(&self.shifted);
        let inv = S::Real::one() / self.det.clone();
        LorentzMatrix::from_fn(|r, c| l.l[r][c].clone() * inv.clone())
    }
}

/// Boost for a positive-energy particle of mass `m` and covariant spatial
/// momentum `p`.
pub fn boost_for_momentum<S: ComplexScalar>(m: &S::Real, p: &[S::Real; 3]) -> Result<Boost<S>> {
    let state = MomentumState::positive(m.clone(), p.clone())?;
    Ok(Boost::for_covector(&state.velocity()))
}

/// One grid point of [`sweep_momentum_space`].
#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint<S: ComplexScalar> {
    pub p: [S::Real; 3],
    pub boost: Boost<S>,
    pub u: FourVector<S::Real>,
}

/// Boosts and covectors over a momentum grid. Every covector is checked for
/// `g^{μν}u_μu_ν = 1` relative to `u₀²` and for `u₀ > 0`.
pub fn sweep_momentum_space<S: ComplexScalar>(
    m: &S::Real,
    grid: &[[S::Real; 3]],
    pol: &TolerancePolicy,
) -> Result<Vec<SweepPoint<S>>> {
    grid.iter()
        .enumerate()
        .map(|(index, p)| {
            sweep_point(m, p, pol).map_err(|e| Error::GridPoint {
                index,
                source: Box::new(e),
            })
        })
        .collect()
}

fn sweep_point<S: ComplexScalar>(
    m: &S::Real,
    p: &[S::Real; 3],
    pol: &TolerancePolicy,
) -> Result<SweepPoint<S>> {
    let boost = boost_for_momentum::<S>(m, p)?;
    let u = boost.metric().covector();
    let u0 = u.v[0].clone();
    let defect = scalar_square(&u) - S::Real::one();
    if !u0.is_positive() || !defect.is_negligible(&(u0.clone() * u0), pol) {
        return Err(Error::NotUnimodular {
            det: format!("{:?}", scalar_square(&u)),
        });
    }
    Ok(SweepPoint {
        p: p.clone(),
        boost,
        u,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lorentz::lift_lorentz;
    use crate::scalar::{gauss, rat, Exact, Float, Rational};
    use proptest::prelude::*;

    fn r3(a: i64, b: i64, c: i64) -> [Rational; 3] {
        [rat(a, 1), rat(b, 1), rat(c, 1)]
    }

    #[test]
    fn metric_examples() {
        let pol = TolerancePolicy::default();
        let id = metric_from_sl2(&Matrix2::<Exact>::identity(), &pol).unwrap();
        assert_eq!(id, UnitaryMetric::identity());
        assert_eq!(
            id.covector(),
            FourVector::new(rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1))
        );

        // SU(2) element with rational entries: (3 + 4ι)/5 on the diagonal
        let a = Exact::new(rat(3, 5), rat(4, 5));
        let su2 = Matrix2::diag(a.clone(), a.conj());
        assert_eq!(
            metric_from_sl2(&su2, &pol).unwrap(),
            UnitaryMetric::identity()
        );
        let rot = Matrix2::new(gauss(0, 0), gauss(1, 0), gauss(-1, 0), gauss(0, 0));
        assert_eq!(
            metric_from_sl2(&rot, &pol).unwrap(),
            UnitaryMetric::identity()
        );

        let c = Matrix2::diag(Exact::from_real(rat(2, 1)), Exact::from_real(rat(1, 2)));
        let u = metric_from_sl2(&c, &pol).unwrap();
        assert_eq!(
            u.lower(),
            &Matrix2::diag(Exact::from_real(rat(1, 4)), gauss(4, 0))
        );
        assert_eq!(
            u.covector(),
            FourVector::new(rat(17, 8), rat(0, 1), rat(0, 1), rat(-15, 8))
        );
        assert_eq!(
            u.upper(),
            Matrix2::diag(gauss(4, 0), Exact::from_real(rat(1, 4)))
        );

        let bad = Matrix2::<Exact>::identity().scale(&gauss(2, 0));
        assert!(matches!(
            metric_from_sl2(&bad, &pol),
            Err(Error::NotUnimodular { .. })
        ));
    }

    #[test]
    fn boost_moves_along_positive_axis() {
        let pol = TolerancePolicy::default();
        let c = Matrix2::diag(Exact::from_real(rat(2, 1)), Exact::from_real(rat(1, 2)));
        let u = metric_from_sl2(&c, &pol).unwrap().covector();
        assert!(u.flip_index().v[3] > rat(0, 1));
        // the same direction as the Lorentz image of the rest frame
        assert_eq!(lorentz_matrix(&c).l[3][0], rat(15, 8));
    }

    #[test]
    fn metric_transports_unitary_form() {
        let pol = TolerancePolicy::default();
        let c: Matrix2<Exact> = Matrix2::new(gauss(1, 1), gauss(2, 0), gauss(0, 1), gauss(1, 2));
        let det = c.det();
        let c = Matrix2::new(
            c.m[0][0].clone() / det.clone(),
            c.m[0][1].clone() / det,
            c.m[1][0].clone(),
            c.m[1][1].clone(),
        );
        assert_eq!(c.det(), gauss(1, 0));
        let u = metric_from_sl2(&c, &pol).unwrap();
        let i0 = Spinor2::new(gauss(2, -1), gauss(1, 3));
        let moved = i0.transform(&c);
        assert_eq!(u.form(&moved), i0.c1().norm_sqr() + i0.c2().norm_sqr());
    }

    #[test]
    fn momentum_state_basics() {
        let s = MomentumState::positive(rat(4, 1), r3(1, 2, 2)).unwrap();
        assert_eq!(s.energy(), &rat(5, 1));
        assert_eq!(s.mass_shell_defect(), rat(0, 1));
        assert_eq!(
            s.contravariant().v,
            [rat(5, 1), rat(-1, 1), rat(-2, 1), rat(-2, 1)]
        );
        let n = MomentumState::new(rat(4, 1), r3(0, 0, 3), EnergySign::Negative).unwrap();
        assert_eq!(n.energy(), &rat(-5, 1));
        assert_eq!(n.velocity().v[0], rat(5, 4));
        assert!(matches!(
            MomentumState::positive(rat(0, 1), r3(0, 0, 0)),
            Err(Error::NonPositiveMass(_))
        ));
        assert!(matches!(
            MomentumState::positive(rat(1, 1), r3(1, 0, 0)),
            Err(Error::Scalar(_))
        ));
        assert!(MomentumState::positive(-1.0, [0.0; 3]).is_err());
    }

    #[test]
    fn boost_examples() {
        let id = boost_for_momentum::<Exact>(&rat(1, 1), &r3(0, 0, 0)).unwrap();
        assert_eq!(id.matrix().unwrap(), Matrix2::identity());

        let b = boost_for_momentum::<Exact>(&rat(4, 1), &r3(0, 0, 3)).unwrap();
        let u = b.metric().covector();
        assert_eq!(u.v, [rat(5, 4), rat(0, 1), rat(0, 1), rat(3, 4)]);
        // 2(u₀ + 1) = 9/2 is not a rational square
        assert!(b.matrix().is_err());
        assert_eq!(b.lorentz().l[0][0], rat(5, 4));

        let b = boost_for_momentum::<Exact>(&rat(4, 1), &r3(1, 2, 2)).unwrap();
        assert_eq!(
            b.metric().covector().v,
            [rat(5, 4), rat(1, 4), rat(1, 2), rat(1, 2)]
        );

        // 2(u₀ + 1) = 2(7/2 + 1) = 9
        let b = boost_for_momentum::<Exact>(&rat(2, 1), &r3(6, 3, 0)).unwrap();
        let c = b.matrix().unwrap();
        assert_eq!(c.det(), gauss(1, 0));
        assert_eq!(c, c.adjoint());
        let pol = TolerancePolicy::default();
        assert_eq!(metric_from_sl2(&c, &pol).unwrap(), b.metric());
        assert_eq!(lorentz_matrix(&c), b.lorentz());
        assert_eq!(lift_lorentz::<Exact>(&b.lorentz(), &pol).unwrap(), c);

        assert!(matches!(
            boost_for_momentum::<Float>(&0.0, &[1.0, 0.0, 0.0]),
            Err(Error::NonPositiveMass(_))
        ));
    }

    #[test]
    fn boost_matrix_matches_closed_form_root() {
        // A^{1/2} = (A + I)/√(tr A + 2) and C² = A
        let b = boost_for_momentum::<Float>(&1.5, &[0.3, -2.0, 0.7]).unwrap();
        let c = b.matrix().unwrap();
        let a = b.shifted().clone() - Matrix2::identity();
        assert!((&c * &c).max_deviation(&a) < 1e-12);
        assert!(c.m[0][0].re > 0.0 && (c.det() - Float::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn sweep_examples() {
        let pol = TolerancePolicy::default();
        let rest = sweep_momentum_space::<Float>(&1.0, &[[0.0; 3]], &pol).unwrap();
        assert_eq!(rest.len(), 1);
        assert!(
            rest[0]
                .boost
                .matrix()
                .unwrap()
                .max_deviation(&Matrix2::identity())
                < 1e-15
        );

        let mut grid = Vec::new();
        for x in -5..=5 {
            for y in -5..=5 {
                for z in -5..=5 {
                    grid.push([x, y, z].map(f64::from));
                }
            }
        }
        let points = sweep_momentum_space::<Float>(&1.0, &grid, &pol).unwrap();
        assert_eq!(points.len(), 1331);
        for pt in &points {
            assert!((scalar_square(&pt.u) - 1.0).abs() < 1e-12);
            for k in 0..3 {
                assert!((pt.u.v[k + 1] - pt.p[k]).abs() < 1e-12);
            }
        }

        let big = sweep_momentum_space::<Float>(&1.0, &[[1e6, 0.0, 0.0], [0.0, -6e5, 8e5]], &pol)
            .unwrap();
        for pt in &big {
            let u0 = pt.u.v[0];
            assert!((scalar_square(&pt.u) - 1.0).abs() <= 1e-12 * u0 * u0);
        }

        let err = sweep_momentum_space::<Float>(&-1.0, &[[0.0; 3]], &pol).unwrap_err();
        assert!(matches!(err, Error::GridPoint { index: 0, .. }));
        let err = sweep_momentum_space::<Exact>(&rat(1, 1), &[r3(0, 0, 0), r3(1, 0, 0)], &pol)
            .unwrap_err();
        assert!(matches!(err, Error::GridPoint { index: 1, .. }));
    }

    fn sl2() -> impl Strategy<Value = Matrix2<Float>> {
        let c = || (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(a, b)| Float::new(a, b));
        (c(), c(), c(), c())
            .prop_map(|(a, b, c, d)| Matrix2::new(a, b, c, d))
            .prop_filter("well conditioned", |m| m.det().norm() > 0.05)
            .prop_map(|m| {
                let s = m.det().sqrt();
                m.scale(&(Float::new(1.0, 0.0) / s))
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn metric_positive_unimodular(c in sl2()) {
            let pol = TolerancePolicy::uniform(1e-9).unwrap();
            let u = metric_from_sl2(&c, &pol).unwrap();
            prop_assert!(u.herm().is_positive_definite());
            prop_assert!((u.herm().det() - 1.0).abs() < 1e-9);
            let cov = u.covector();
            prop_assert!((scalar_square(&cov) - 1.0).abs() < 1e-9 * cov.v[0] * cov.v[0]);
            prop_assert!(cov.v[0] > 0.0);
        }

        #[test]
        fn boost_round_trip(m in 0.1f64..5.0, p in prop::array::uniform3(-5.0f64..5.0)) {
            let pol = TolerancePolicy::uniform(1e-10).unwrap();
            let b = boost_for_momentum::<Float>(&m, &p).unwrap();
            let u = metric_from_sl2(&b.matrix().unwrap(), &pol).unwrap().covector();
            let state = MomentumState::positive(m, p).unwrap();
            prop_assert!(u.max_deviation(&state.velocity()) < 1e-10);
        }

        #[test]
        fn exact_metric_det_one(a in 1i64..9, b in -9i64..9, c in -9i64..9, bi in -5i64..5) {
            let a = Exact::new(rat(a, 1), rat(1, 3));
            let b = Exact::new(rat(b, 2), rat(bi, 1));
            let c = gauss(c, 1);
            let d = (Exact::from_i64(1) + b.clone() * c.clone()) / a.clone();
            let m = Matrix2::new(a, b, c, d);
            let u = metric_from_sl2(&m, &TolerancePolicy::default()).unwrap();
            prop_assert_eq!(u.herm().det(), rat(1, 1));
            prop_assert!(u.herm().is_positive_definite());
        }
    }
}
