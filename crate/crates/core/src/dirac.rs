//! The antilinear automorphism `i ↦ k` induced by a unitary metric, the pair
//! `(i^r, β_ṙ)` it produces, the P reflection swapping the pair, and the
//! bispinor `ψ(p) = (i¹, i², β₁̇, β₂̇)` that solves the free Dirac equation.
//!
//! Gamma matrices are in Weyl form, `γ⁰ = [[0, I], [I, 0]]` and
//! `γ^k = [[0, -σ̄_k], [σ̄_k, 0]]` with `σ̄_k = conj(σ_k)`. The lower block of
//! `ψ` is `(p_μ σ̄^μ / m) i` where `p_μ σ̄^μ = p₀ I + p_k σ̄_k`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{max_norm, Matrix2, Matrix4};
use crate::momentum::{EnergySign, MomentumState, UnitaryMetric};
use crate::scalar::{ComplexScalar, RealScalar, TolerancePolicy};
use crate::spin_tensor::{build_v, decompose, FourVector, Herm2, PauliBasis, METRIC};
use crate::spinor::{CoSpinorDotted, EpsilonConvention, Spinor2};

/// Which gamma matrices to use. `Corrupted` flips the sign of the lower-left
/// block of `γ²` and exists only as a negative control for the verifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GammaKind {
    #[default]
    Standard,
    Corrupted,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GammaSet<S> {
    gammas: [Matrix4<S>; 4],
}

impl<S: ComplexScalar> GammaSet<S> {
    pub fn standard() -> Self {
        let zero = Matrix2::zero();
        let id = Matrix2::identity();
        let gammas = std::array::from_fn(|mu| {
            if mu == 0 {
                Matrix4::from_blocks(&zero, &id, &id, &zero)
            } else {
                let bar = PauliBasis::sigma_bar::<S>(mu);
                Matrix4::from_blocks(&zero, &-bar.clone(), &bar, &zero)
            }
        });
        Self { gammas }
    }

    pub fn corrupted() -> Self {
        let mut set = Self::standard();
        for r in 2..4 {
            for c in 0..2 {
                set.gammas[2].m[r][c] = -set.gammas[2].m[r][c].clone();
            }
        }
        set
    }

    pub fn of_kind(kind: GammaKind) -> Self {
        match kind {
            GammaKind::Standard => Self::standard(),
            GammaKind::Corrupted => Self::corrupted(),
        }
    }

    pub fn gamma(&self, mu: usize) -> &Matrix4<S> {
        &self.gammas[mu]
    }

    /// `γ^μγ^ν + γ^νγ^μ`.
    pub fn anticommutator(&self, mu: usize, nu: usize) -> Matrix4<S> {
        &self.gammas[mu] * &self.gammas[nu] + &self.gammas[nu] * &self.gammas[mu]
    }

    /// Largest entry of `γ^μγ^ν + γ^νγ^μ - 2g^{μν} I` over all 16 pairs.
    pub fn clifford_defect(&self) -> S::Real {
        let mut worst = S::Real::zero();
        for (mu, g) in METRIC.iter().enumerate() {
            for nu in 0..4 {
                let target = if mu == nu {
                    Matrix4::identity().scale(&S::from_i64(2 * g))
                } else {
                    Matrix4::zero()
                };
                worst = S::Real::max_of(worst, self.anticommutator(mu, nu).max_deviation(&target));
            }
        }
        worst
    }

    /// `p_μ γ^μ - m I`.
    pub fn dirac_operator(&self, state: &MomentumState<S::Real>) -> Matrix4<S> {
        let p = state.covariant();
        let slash = (0..4).fold(Matrix4::zero(), |acc, mu| {
            acc + self.gammas[mu].scale(&S::from_real(p.v[mu].clone()))
        });
        slash - Matrix4::identity().scale(&S::from_real(state.mass().clone()))
    }
}

/// Four components in the order `(i¹, i², β₁̇, β₂̇)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bispinor<S>(pub [S; 4]);

impl<S: ComplexScalar> Bispinor<S> {
    pub fn from_pair(i: &Spinor2<S>, beta: &CoSpinorDotted<S>) -> Self {
        Self([
            i.0[0].clone(),
            i.0[1].clone(),
            beta.0[0].clone(),
            beta.0[1].clone(),
        ])
    }

    pub fn zero() -> Self {
        Self(std::array::from_fn(|_| S::zero()))
    }

    pub fn upper(&self) -> Spinor2<S> {
        Spinor2::new(self.0[0].clone(), self.0[1].clone())
    }

    pub fn lower(&self) -> CoSpinorDotted<S> {
        CoSpinorDotted::new(self.0[2].clone(), self.0[3].clone())
    }

    /// `ψ⁺γ⁰ψ = 2 Re(conj(i¹)β₁̇ + conj(i²)β₂̇)`.
    pub fn gamma0_norm(&self) -> S::Real {
        let cross = self.0[0].conj() * self.0[2].clone() + self.0[1].conj() * self.0[3].clone();
        cross.re() * S::Real::from_i64(2)
    }
}

/// Spinor values `î(p)` on a finite set of covariant spatial momenta.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorField<S: ComplexScalar> {
    pub points: Vec<([S::Real; 3], Spinor2<S>)>,
}

impl<S: ComplexScalar> SpinorField<S> {
    pub fn new(points: Vec<([S::Real; 3], Spinor2<S>)>) -> Self {
        Self { points }
    }

    pub fn constant(grid: &[[S::Real; 3]], value: &Spinor2<S>) -> Self {
        Self::new(grid.iter().map(|p| (p.clone(), value.clone())).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// `k` with `conj(k^ṵ) = ε^{ṡṵ} (±U)_{rṡ} i^r`, summed over `r` and `ṡ`.
/// Antilinear in `i`; applying it twice gives `-i` for any unimodular `U`.
pub fn hodge_automorphism<S: ComplexScalar>(
    i: &Spinor2<S>,
    u: &UnitaryMetric<S>,
    sign: EnergySign,
) -> Spinor2<S> {
    let beta = beta_from_i(i, u);
    let conj_k: [S; 2] = std::array::from_fn(|uu| {
        (0..2).fold(S::zero(), |acc, s| {
            acc + EpsilonConvention::upper::<S>(s, uu) * beta.0[s].clone()
        })
    });
    let k = Spinor2::new(conj_k[0].conj(), conj_k[1].conj());
    match sign {
        EnergySign::Positive => k,
        EnergySign::Negative => k.scale(&-S::one()),
    }
}

/// `β_ṡ = U_{rṡ} i^r`, i.e. `β = Uᵀ i = u_μ σ̄^μ i`.
pub fn beta_from_i<S: ComplexScalar>(i: &Spinor2<S>, u: &UnitaryMetric<S>) -> CoSpinorDotted<S> {
    CoSpinorDotted(u.lower().transpose().apply(&i.0))
}

/// `i^r = U^{rṡ} β_ṡ`, the inverse of [`beta_from_i`].
pub fn inverse_beta<S: ComplexScalar>(
    beta: &CoSpinorDotted<S>,
    u: &UnitaryMetric<S>,
) -> Spinor2<S> {
    Spinor2(u.upper().apply(&beta.0))
}

/// `(i^r, β_ṙ) ↦ (β_ṙ, i^r)`: the components are kept and their roles swapped.
pub fn p_reflect<S: ComplexScalar>(
    pair: (&Spinor2<S>, &CoSpinorDotted<S>),
) -> (CoSpinorDotted<S>, Spinor2<S>) {
    (
        CoSpinorDotted(pair.0 .0.clone()),
        Spinor2(pair.1 .0.clone()),
    )
}

/// Metric components after the swap: `(U_{..}, U^{..}) ↦ ((U^{..})ᵀ, (U_{..})ᵀ)`.
pub fn p_reflect_metric<S: ComplexScalar>(
    lower: &Matrix2<S>,
    upper: &Matrix2<S>,
) -> (Matrix2<S>, Matrix2<S>) {
    (upper.transpose(), lower.transpose())
}

/// Induced action on `V^{rṡ}`: the diagonal entries swap and the off-diagonal
/// ones change sign, which reverses the spatial part of `decompose(V)`.
pub fn p_reflect_tensor<S: ComplexScalar>(v: &Herm2<S>) -> Herm2<S> {
    Herm2::symmetrized(v.matrix().adjugate())
}

/// Residual of `β_ṡ = U_{rṡ} i^r`.
pub fn lowering_relation<S: ComplexScalar>(
    i: &Spinor2<S>,
    beta: &CoSpinorDotted<S>,
    lower: &Matrix2<S>,
) -> [S; 2] {
    let image = lower.transpose().apply(&i.0);
    [
        image[0].clone() - beta.0[0].clone(),
        image[1].clone() - beta.0[1].clone(),
    ]
}

/// Residual of `i^r = U^{rṡ} β_ṡ`.
pub fn raising_relation<S: ComplexScalar>(
    i: &Spinor2<S>,
    beta: &CoSpinorDotted<S>,
    upper: &Matrix2<S>,
) -> [S; 2] {
    let image = upper.apply(&beta.0);
    [
        image[0].clone() - i.0[0].clone(),
        image[1].clone() - i.0[1].clone(),
    ]
}

/// `p_μ σ̄^μ = p₀ I + p_k conj(σ_k)`.
pub fn momentum_slash<S: ComplexScalar>(state: &MomentumState<S::Real>) -> Matrix2<S> {
    let p = state.covariant();
    (0..4).fold(Matrix2::zero(), |acc, mu| {
        acc + PauliBasis::sigma_bar::<S>(mu).scale_real(&p.v[mu])
    })
}

/// `ψ(p) = (î; (p_μ σ̄^μ / m) î)`.
pub fn build_psi_at<S: ComplexScalar>(
    i: &Spinor2<S>,
    state: &MomentumState<S::Real>,
) -> Bispinor<S> {
    let inv_m = S::Real::one() / state.mass().clone();
    let lower = momentum_slash::<S>(state).scale_real(&inv_m).apply(&i.0);
    Bispinor::from_pair(i, &CoSpinorDotted(lower))
}

/// A grid momentum and the bispinor built there.
pub type FieldPoint<S> = (MomentumState<<S as ComplexScalar>::Real>, Bispinor<S>);

/// `ψ` at every point of a field, with the energy sign applied to `p₀`.
pub fn build_psi<S: ComplexScalar>(
    field: &SpinorField<S>,
    m: &S::Real,
    sign: EnergySign,
) -> Result<Vec<FieldPoint<S>>> {
    field
        .points
        .iter()
        .enumerate()
        .map(|(index, (p, i))| {
            let state =
                MomentumState::new(m.clone(), p.clone(), sign).map_err(|e| Error::GridPoint {
                    index,
                    source: Box::new(e),
                })?;
            let psi = build_psi_at(i, &state);
            Ok((state, psi))
        })
        .collect()
}

/// `‖(p_μγ^μ - m)ψ‖∞`.
pub fn dirac_residual<S: ComplexScalar>(
    psi: &Bispinor<S>,
    state: &MomentumState<S::Real>,
    gammas: &GammaSet<S>,
) -> S::Real {
    max_norm(&gammas.dirac_operator(state).apply(&psi.0))
}

/// `v^μ = ½(î⁺σ^μ î + k̂⁺σ^μ k̂)`.
pub fn current_vector<S: ComplexScalar>(i: &Spinor2<S>, k: &Spinor2<S>) -> FourVector<S::Real> {
    decompose(&build_v(i, k))
}

/// The current of `î` and its image under the automorphism for `state`,
/// together with `ψ⁺γ⁰ψ`.
pub fn state_current<S: ComplexScalar>(
    i: &Spinor2<S>,
    state: &MomentumState<S::Real>,
) -> (FourVector<S::Real>, S::Real) {
    let u = state.metric::<S>();
    let k = hodge_automorphism(i, &u, state.sign());
    (current_vector(i, &k), build_psi_at(i, state).gamma0_norm())
}

/// Current rescaled to `ψ⁺γ⁰ψ = 2m`, next to `p^μ`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizationCheck<R> {
    /// `ψ⁺γ⁰ψ` before rescaling.
    pub norm: R,
    /// `v^μ` after rescaling.
    pub current: FourVector<R>,
    /// `p^μ`.
    pub momentum: FourVector<R>,
}

impl<R: RealScalar> NormalizationCheck<R> {
    pub fn deviation(&self) -> R {
        self.current.max_deviation(&self.momentum)
    }

    pub fn holds(&self, pol: &TolerancePolicy) -> bool {
        (0..4).all(|mu| self.current.v[mu].approx_eq(&self.momentum.v[mu], pol))
    }
}

/// Rescales `î` so that `ψ⁺γ⁰ψ = 2m` and compares the current with `p^μ`.
///
/// Both sides are quadratic in `î`, so the rescaling is the factor `2m/(ψ⁺γ⁰ψ)`
/// applied to the current; no square root is taken.
pub fn normalization_check<S: ComplexScalar>(
    i: &Spinor2<S>,
    state: &MomentumState<S::Real>,
) -> Result<NormalizationCheck<S::Real>> {
    let (v, norm) = state_current(i, state);
    if !norm.is_positive() {
        return Err(Error::NotNormalizable(format!("ψ⁺γ⁰ψ = {norm:?}")));
    }
    let factor = S::Real::from_i64(2) * state.mass().clone() / norm.clone();
    Ok(NormalizationCheck {
        norm,
        current: v.scale(&factor),
        momentum: state.contravariant(),
    })
}
