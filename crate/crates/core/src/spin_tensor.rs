//! The mixed spin-tensor `V^{rṡ} = i^r conj(i^ṡ) + k^r conj(k^ṡ)`, its
//! expansion in the Pauli basis, and the Minkowski scalar square.
//!
//! `Herm(2)` and Minkowski space are identified through `V = v^μ σ_μ` with
//! `v^μ = ½ tr(σ^μ V)`; under this map `det V = g_{μν} v^μ v^ν` with
//! `g = diag(1,-1,-1,-1)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix2;
use crate::scalar::{ComplexScalar, RealScalar, TolerancePolicy};
use crate::spinor::Spinor2;

/// Minkowski metric signature `(+,-,-,-)`.
pub const METRIC: [i64; 4] = [1, -1, -1, -1];

/// The unit matrix and the three Pauli matrices.
#[derive(Debug, Clone, Copy)]
pub struct PauliBasis;

impl PauliBasis {
    /// `σ_μ` for `μ = 0..4`. Upper and lower positions share the same matrices.
    pub fn sigma<S: ComplexScalar>(mu: usize) -> Matrix2<S> {
        let (o, z, i) = (S::one(), S::zero(), S::imag_unit());
        match mu {
            0 => Matrix2::new(o, z.clone(), z, S::one()),
            1 => Matrix2::new(z.clone(), o.clone(), o, z),
            2 => Matrix2::new(z.clone(), -i.clone(), i, z),
            3 => Matrix2::new(o, z.clone(), z, -S::one()),
            _ => panic!("Pauli index {mu} out of range"),
        }
    }

    /// `conj(σ_μ)`, which also equals `σ_μᵀ`.
    pub fn sigma_bar<S: ComplexScalar>(mu: usize) -> Matrix2<S> {
        Self::sigma::<S>(mu).conj()
    }

    pub fn all<S: ComplexScalar>() -> [Matrix2<S>; 4] {
        std::array::from_fn(Self::sigma::<S>)
    }
}

/// A 2×2 Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Herm2<S> {
    m: Matrix2<S>,
}

impl<S: ComplexScalar> Herm2<S> {
    /// Validate Hermiticity. Float input within tolerance is replaced by
    /// `(M + M⁺)/2`; exact input must be exactly Hermitian.
    pub fn new(m: Matrix2<S>, pol: &TolerancePolicy) -> Result<Self> {
        let adj = m.adjoint();
        if !m.approx_eq(&adj, pol) {
            return Err(Error::NotHermitian {
                deviation: m.max_deviation(&adj).to_f64(),
            });
        }
        Ok(Self::symmetrized(m))
    }

    /// `(M + M⁺)/2` without validation. Used for products that are Hermitian
    /// in exact arithmetic, such as `C V C⁺`.
    pub(crate) fn symmetrized(m: Matrix2<S>) -> Self {
        let adj = m.adjoint();
        Self {
            m: (m + adj).scale_real(&S::Real::half()),
        }
    }

    pub fn identity() -> Self {
        Self {
            m: Matrix2::identity(),
        }
    }

    pub fn matrix(&self) -> &Matrix2<S> {
        &self.m
    }

    pub fn into_matrix(self) -> Matrix2<S> {
        self.m
    }

    /// `det H`, real for Hermitian matrices.
    pub fn det(&self) -> S::Real {
        self.m.det().re()
    }

    /// Sylvester criterion: `H¹¹ > 0` and `det H > 0`.
    pub fn is_positive_definite(&self) -> bool {
        self.m.m[0][0].re().is_positive() && self.det().is_positive()
    }

    pub fn scale_real(&self, r: &S::Real) -> Self {
        Self {
            m: self.m.scale_real(r),
        }
    }
}

/// A real four-vector with components `v^0..v^3` (or `v_0..v_3` when used as a
/// covector; the container does not track index position).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FourVector<R> {
    pub v: [R; 4],
}

impl<R: RealScalar> FourVector<R> {
    pub fn new(v0: R, v1: R, v2: R, v3: R) -> Self {
        Self {
            v: [v0, v1, v2, v3],
        }
    }

    pub fn zero() -> Self {
        Self {
            v: std::array::from_fn(|_| R::zero()),
        }
    }

    /// `g_{μν} v^μ v^ν`.
    pub fn scalar_square(&self) -> R {
        scalar_square(self)
    }

    /// Apply the metric: turns contravariant components into covariant ones
    /// and vice versa.
    pub fn flip_index(&self) -> Self {
        Self {
            v: std::array::from_fn(|mu| {
                if METRIC[mu] < 0 {
                    -self.v[mu].clone()
                } else {
                    self.v[mu].clone()
                }
            }),
        }
    }

    pub fn scale(&self, r: &R) -> Self {
        Self {
            v: std::array::from_fn(|mu| self.v[mu].clone() * r.clone()),
        }
    }

    /// Sup-norm of `self - other`.
    pub fn max_deviation(&self, other: &Self) -> R {
        (0..4).fold(R::zero(), |acc, mu| {
            R::max_of(acc, (self.v[mu].clone() - other.v[mu].clone()).abs())
        })
    }

    pub fn to_f64(&self) -> [f64; 4] {
        std::array::from_fn(|mu| self.v[mu].to_f64())
    }
}

/// Causal character of a four-vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CausalClass {
    TimelikeFuture,
    IsotropicFuture,
    Other,
}

/// `V^{rṡ} = i^r conj(i^ṡ) + k^r conj(k^ṡ)`.
pub fn build_v<S: ComplexScalar>(i: &Spinor2<S>, k: &Spinor2<S>) -> Herm2<S> {
    let m =
        Matrix2::from_fn(|r, s| i.0[r].clone() * i.0[s].conj() + k.0[r].clone() * k.0[s].conj());
    // exactly Hermitian entry by entry, no symmetrization needed
    Herm2 { m }
}

/// `v^μ = ½ tr(σ^μ V)`.
pub fn decompose<S: ComplexScalar>(h: &Herm2<S>) -> FourVector<S::Real> {
    FourVector {
        v: pauli_traces(&h.m),
    }
}

/// `½ Re tr(σ^μ X)` for `μ = 0..4`, read off the entries of `X`.
pub fn pauli_traces<S: ComplexScalar>(x: &Matrix2<S>) -> [S::Real; 4] {
    let [[a, b], [c, d]] = &x.m;
    let half = S::Real::half();
    [
        (a.re() + d.re()) * half.clone(),
        (b.re() + c.re()) * half.clone(),
        (c.im() - b.im()) * half.clone(),
        (a.re() - d.re()) * half,
    ]
}

/// `V = v^μ σ_μ`.
pub fn recompose<S: ComplexScalar>(v: &FourVector<S::Real>) -> Herm2<S> {
    let m = (0..4).fold(Matrix2::zero(), |acc, mu| {
        acc + PauliBasis::sigma::<S>(mu).scale_real(&v.v[mu])
    });
    Herm2 { m }
}

/// `(v^0)² - (v^1)² - (v^2)² - (v^3)²`.
pub fn scalar_square<R: RealScalar>(v: &FourVector<R>) -> R {
    (0..4).fold(R::zero(), |acc, mu| {
        let sq = v.v[mu].clone() * v.v[mu].clone();
        if METRIC[mu] < 0 {
            acc - sq
        } else {
            acc + sq
        }
    })
}

pub fn classify_causal<R: RealScalar>(v: &FourVector<R>, pol: &TolerancePolicy) -> CausalClass {
    let t = v.v[0].clone();
    let scale = t.clone() * t.clone();
    if !t.is_positive() || t.is_negligible(&R::zero(), pol) {
        return CausalClass::Other;
    }
    let sq = scalar_square(v);
    if sq.is_negligible(&scale, pol) {
        CausalClass::IsotropicFuture
    } else if sq.is_positive() {
        CausalClass::TimelikeFuture
    } else {
        CausalClass::Other
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gauss, rat, Exact, Float, Rational};
    use crate::spinor::symplectic;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn herm(m: Matrix2<Exact>) -> Herm2<Exact> {
        Herm2::new(m, &TolerancePolicy::default()).unwrap()
    }

    fn fv(v: [i64; 4]) -> FourVector<Rational> {
        FourVector {
            v: v.map(|x| rat(x, 1)),
        }
    }

    #[test]
    fn pauli_basis_relations() {
        let s = PauliBasis::all::<Exact>();
        for mu in 0..4 {
            assert_eq!(s[mu].transpose(), PauliBasis::sigma_bar(mu));
            for nu in 0..4 {
                let tr = (&s[mu] * &s[nu]).trace();
                assert_eq!(tr, gauss(if mu == nu { 2 } else { 0 }, 0));
            }
        }
    }

    #[test]
    fn pauli_traces_match_products() {
        let x: Matrix2<Exact> = Matrix2::new(gauss(1, 2), gauss(-3, 5), gauss(7, -1), gauss(2, 4));
        let direct = pauli_traces(&x);
        for (mu, d) in direct.iter().enumerate() {
            let tr = (&PauliBasis::sigma::<Exact>(mu) * &x).trace().re() * rat(1, 2);
            assert_eq!(d, &tr, "mu = {mu}");
        }
    }

    #[test]
    fn build_v_examples() {
        let e1 = Spinor2::new(gauss(1, 0), gauss(0, 0));
        let e2 = Spinor2::new(gauss(0, 0), gauss(1, 0));
        assert_eq!(build_v(&e1, &e2), Herm2::identity());
        let dep = Spinor2::new(gauss(2, 0), gauss(0, 0));
        let v = build_v(&e1, &dep);
        assert_eq!(v.matrix(), &Matrix2::diag(gauss(5, 0), gauss(0, 0)));
        assert_eq!(v.det(), rat(0, 1));
        assert!(symplectic(&e1, &dep).is_zero());
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose(&Herm2::<Exact>::identity()), fv([1, 0, 0, 0]));
        assert_eq!(decompose(&herm(PauliBasis::sigma(3))), fv([0, 0, 0, 1]));
        let v = herm(Matrix2::new(
            gauss(2, 0),
            gauss(0, 1),
            gauss(0, -1),
            gauss(0, 0),
        ));
        let d = decompose(&v);
        assert_eq!(d, fv([1, 0, -1, 1]));
        assert_eq!(recompose::<Exact>(&d), v);
    }

    #[test]
    fn recompose_examples() {
        assert_eq!(recompose::<Exact>(&fv([1, 0, 0, 0])), Herm2::identity());
        assert_eq!(
            recompose::<Exact>(&fv([0, 1, 0, 0])).matrix(),
            &PauliBasis::sigma(1)
        );
    }

    #[test]
    fn scalar_square_examples() {
        assert_eq!(scalar_square(&fv([1, 0, 0, 0])), rat(1, 1));
        assert_eq!(scalar_square(&fv([1, 1, 0, 0])), rat(0, 1));
        assert_eq!(scalar_square(&fv([3, 1, 2, -2])), rat(0, 1));
    }

    #[test]
    fn hermitian_validation() {
        let pol = TolerancePolicy::default();
        let bad = Matrix2::new(gauss(1, 0), gauss(0, 1), gauss(0, 1), gauss(1, 0));
        assert!(matches!(
            Herm2::new(bad, &pol),
            Err(Error::NotHermitian { .. })
        ));
        let diag_imag = Matrix2::new(gauss(1, 1), gauss(0, 0), gauss(0, 0), gauss(1, 0));
        assert!(Herm2::new(diag_imag, &pol).is_err());
        // float noise below tolerance is absorbed and symmetrized away
        let f = Matrix2::new(
            Float::new(1.0, 1e-14),
            Float::new(0.5, 0.25),
            Float::new(0.5 + 1e-14, -0.25),
            Float::new(2.0, 0.0),
        );
        let h = Herm2::new(f, &pol).unwrap();
        assert_eq!(h.matrix(), &h.matrix().adjoint());
        let far = Matrix2::new(
            Float::new(1.0, 0.0),
            Float::new(0.5, 0.0),
            Float::new(0.5 + 1e-6, 0.0),
            Float::new(2.0, 0.0),
        );
        assert!(Herm2::new(far, &pol).is_err());
    }

    #[test]
    fn causal_examples() {
        let pol = TolerancePolicy::default();
        let i = Spinor2::new(gauss(1, 2), gauss(-1, 0));
        let k = Spinor2::new(gauss(0, 1), gauss(3, 1));
        assert_eq!(
            classify_causal(&decompose(&build_v(&i, &k)), &pol),
            CausalClass::TimelikeFuture
        );
        let k2 = i.scale(&gauss(2, 0));
        assert_eq!(
            classify_causal(&decompose(&build_v(&i, &k2)), &pol),
            CausalClass::IsotropicFuture
        );
        let z = Spinor2::<Exact>::zero();
        assert_eq!(
            classify_causal(&decompose(&build_v(&z, &z)), &pol),
            CausalClass::Other
        );
        assert_eq!(
            classify_causal(&fv([-1, 0, 0, 0]), &pol),
            CausalClass::Other
        );
        assert_eq!(classify_causal(&fv([1, 2, 0, 0]), &pol), CausalClass::Other);

        let fi = Spinor2::new(Float::new(0.3, -0.1), Float::new(0.7, 0.2));
        let fk = fi.scale(&Float::new(0.0, 3.0));
        assert_eq!(
            classify_causal(&decompose(&build_v(&fi, &fk)), &pol),
            CausalClass::IsotropicFuture
        );
    }

    fn gauss_strategy() -> impl Strategy<Value = Exact> {
        (-20i64..20, 1i64..8, -20i64..20, 1i64..8)
            .prop_map(|(a, b, c, d)| Exact::new(rat(a, b), rat(c, d)))
    }

    fn spinor_strategy() -> impl Strategy<Value = Spinor2<Exact>> {
        (gauss_strategy(), gauss_strategy()).prop_map(|(a, b)| Spinor2::new(a, b))
    }

    fn componentwise(v: &Herm2<Exact>) -> FourVector<Rational> {
        // v^0 = ½(V¹¹+V²²), v^1 = ½(V¹²+V²¹), v^2 = (ι/2)(V¹²-V²¹), v^3 = ½(V¹¹-V²²)
        let m = &v.matrix().m;
        let half = Exact::from_real(rat(1, 2));
        let iota = gauss(0, 1);
        let c = [
            half.clone() * (m[0][0].clone() + m[1][1].clone()),
            half.clone() * (m[0][1].clone() + m[1][0].clone()),
            half.clone() * iota * (m[0][1].clone() - m[1][0].clone()),
            half * (m[0][0].clone() - m[1][1].clone()),
        ];
        for z in &c {
            assert!(z.im.is_zero());
        }
        FourVector { v: c.map(|z| z.re) }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn spin_tensor_properties(i in spinor_strategy(), k in spinor_strategy()) {
            let v = build_v(&i, &k);
            prop_assert_eq!(v.matrix().adjoint(), v.matrix().clone());
            prop_assert!(v.matrix().m[0][0].re >= rat(0, 1));
            prop_assert_eq!(v.det(), symplectic(&i, &k).norm_sqr());
            let independent = !symplectic(&i, &k).is_zero();
            prop_assert_eq!(v.is_positive_definite(), independent);
            let four = decompose(&v);
            prop_assert_eq!(four.clone(), componentwise(&v));
            prop_assert_eq!(scalar_square(&four), v.det());
            prop_assert_eq!(recompose::<Exact>(&four), v);
        }

        #[test]
        fn decompose_recompose_inverse(a in -30i64..30, b in -30i64..30, c in -30i64..30, d in -30i64..30, den in 1i64..9) {
            let v = FourVector::new(rat(a, den), rat(b, den), rat(c, den), rat(d, den));
            let h = recompose::<Exact>(&v);
            prop_assert_eq!(decompose(&h), v.clone());
            prop_assert_eq!(h.det(), scalar_square(&v));
        }
    }
}
