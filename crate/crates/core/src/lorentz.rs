//! The active action `V ↦ C V C⁺` on `Herm(2)` and its 4×4 real matrix
//! `L(C)^μ_ν = ½ tr(σ^μ C σ_ν C⁺)`.
//!
//! For `det C = 1` the image is a proper orthochronous Lorentz transformation
//! and `C ↦ L(C)` is two-to-one with kernel `{±I}`. For general invertible
//! `C` the map is conformal with factor `|det C|²`. [`lift_lorentz`] goes the
//! other way and produces one of the two preimages of a given `L`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix2;
use crate::scalar::{ComplexScalar, RealScalar, TolerancePolicy};
use crate::spin_tensor::{
    decompose, pauli_traces, recompose, scalar_square, FourVector, Herm2, PauliBasis, METRIC,
};

/// A real 4×4 matrix `L^μ_ν`, stored as `l[μ][ν]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LorentzMatrix<R> {
    pub l: [[R; 4]; 4],
}

impl<R: RealScalar> LorentzMatrix<R> {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> R) -> Self {
        Self {
            l: std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))),
        }
    }

    pub fn identity() -> Self {
        Self::from_fn(|r, c| if r == c { R::one() } else { R::zero() })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|r, c| self.l[c][r].clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::from_fn(|r, c| {
            (0..4).fold(R::zero(), |acc, k| {
                acc + self.l[r][k].clone() * rhs.l[k][c].clone()
            })
        })
    }

    pub fn apply(&self, v: &FourVector<R>) -> FourVector<R> {
        FourVector {
            v: std::array::from_fn(|r| {
                (0..4).fold(R::zero(), |acc, c| {
                    acc + self.l[r][c].clone() * v.v[c].clone()
                })
            }),
        }
    }

    /// Determinant by Laplace expansion along the first two rows.
    pub fn det(&self) -> R {
        let m = &self.l;
        let minor_top = |a: usize, b: usize| {
            m[0][a].clone() * m[1][b].clone() - m[0][b].clone() * m[1][a].clone()
        };
        let minor_bot = |a: usize, b: usize| {
            m[2][a].clone() * m[3][b].clone() - m[2][b].clone() * m[3][a].clone()
        };
        // complementary column pairs with their Laplace signs
        let pairs = [
            ((0, 1), (2, 3), false),
            ((0, 2), (1, 3), true),
            ((0, 3), (1, 2), false),
            ((1, 2), (0, 3), false),
            ((1, 3), (0, 2), true),
            ((2, 3), (0, 1), false),
        ];
        pairs
            .iter()
            .fold(R::zero(), |acc, &((a, b), (c, d), negative)| {
                let term = minor_top(a, b) * minor_bot(c, d);
                if negative {
                    acc - term
                } else {
                    acc + term
                }
            })
    }

    /// `Lᵀ g L`.
    pub fn metric_pullback(&self) -> Self {
        Self::from_fn(|r, c| {
            (0..4).fold(R::zero(), |acc, k| {
                let term = self.l[k][r].clone() * self.l[k][c].clone();
                if METRIC[k] < 0 {
                    acc - term
                } else {
                    acc + term
                }
            })
        })
    }

    /// `‖Lᵀ g L - g‖∞` (largest entry magnitude).
    pub fn metric_defect(&self) -> R {
        let g = Self::from_fn(|r, c| {
            if r == c {
                R::from_i64(METRIC[r])
            } else {
                R::zero()
            }
        });
        self.metric_pullback().max_deviation(&g)
    }

    pub fn max_deviation(&self, other: &Self) -> R {
        let mut worst = R::zero();
        for r in 0..4 {
            for c in 0..4 {
                worst = R::max_of(worst, (self.l[r][c].clone() - other.l[r][c].clone()).abs());
            }
        }
        worst
    }

    pub fn approx_eq(&self, other: &Self, pol: &TolerancePolicy) -> bool {
        (0..4).all(|r| (0..4).all(|c| self.l[r][c].approx_eq(&other.l[r][c], pol)))
    }

    /// Checks `Lᵀ g L = g`, `det L = 1` and `L⁰₀ ≥ 1` under `pol`.
    pub fn check_proper_orthochronous(&self, pol: &TolerancePolicy) -> Result<()> {
        let scale = self.max_entry();
        let defect = self.metric_defect();
        if !defect.is_negligible(&(scale.clone() * scale), pol) {
            return Err(Error::NotProperOrthochronous(format!(
                "metric not preserved (defect {:e})",
                defect.to_f64()
            )));
        }
        let det = self.det();
        if !det.approx_eq(&R::one(), pol) {
            return Err(Error::NotProperOrthochronous(format!(
                "determinant {}",
                det.to_f64()
            )));
        }
        let l00 = self.l[0][0].clone();
        if l00 < R::one() && !l00.approx_eq(&R::one(), pol) {
            return Err(Error::NotProperOrthochronous(format!(
                "L00 = {} < 1",
                l00.to_f64()
            )));
        }
        Ok(())
    }

    fn max_entry(&self) -> R {
        self.l
            .iter()
            .flatten()
            .fold(R::one(), |acc, x| R::max_of(acc, x.abs()))
    }

    pub fn to_f64(&self) -> [[f64; 4]; 4] {
        std::array::from_fn(|r| std::array::from_fn(|c| self.l[r][c].to_f64()))
    }
}

/// `C V C⁺`.
pub fn act<S: ComplexScalar>(c: &Matrix2<S>, v: &Herm2<S>) -> Herm2<S> {
    Herm2::symmetrized(&(c * v.matrix()) * &c.adjoint())
}

/// `L(C)^μ_ν = ½ tr(σ^μ C σ_ν C⁺)`.
pub fn lorentz_matrix<S: ComplexScalar>(c: &Matrix2<S>) -> LorentzMatrix<S::Real> {
    let c_adj = c.adjoint();
    let columns: [[S::Real; 4]; 4] =
        std::array::from_fn(|nu| pauli_traces(&(&(c * &PauliBasis::sigma::<S>(nu)) * &c_adj)));
    LorentzMatrix::from_fn(|mu, nu| columns[nu][mu].clone())
}

/// `‖L(C) L(D) - L(CD)‖∞`.
pub fn homomorphism_defect<S: ComplexScalar>(c: &Matrix2<S>, d: &Matrix2<S>) -> S::Real {
    let product = lorentz_matrix(c).mul(&lorentz_matrix(d));
    product.max_deviation(&lorentz_matrix(&(c * d)))
}

/// Whether `L(C) L(D) = L(CD)` under `pol`.
pub fn verify_homomorphism<S: ComplexScalar>(
    c: &Matrix2<S>,
    d: &Matrix2<S>,
    pol: &TolerancePolicy,
) -> bool {
    let product = lorentz_matrix(c).mul(&lorentz_matrix(d));
    product.approx_eq(&lorentz_matrix(&(c * d)), pol)
}

/// Outcome of comparing `g(Lv, Lv)` with `|det C|² g(v, v)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConformalCheck<R> {
    /// `|det C|²`.
    pub factor: R,
    pub square_before: R,
    pub square_after: R,
}

impl<R: RealScalar> ConformalCheck<R> {
    pub fn deviation(&self) -> R {
        (self.square_after.clone() - self.factor.clone() * self.square_before.clone()).abs()
    }

    pub fn holds(&self, pol: &TolerancePolicy) -> bool {
        self.square_after
            .approx_eq(&(self.factor.clone() * self.square_before.clone()), pol)
    }
}

/// Conformal factor `|det C|²` of `L(C)` together with the squares it relates.
/// An isotropic `v` is mapped to an isotropic vector for every `C`.
pub fn conformal_factor<S: ComplexScalar>(
    c: &Matrix2<S>,
    v: &FourVector<S::Real>,
) -> ConformalCheck<S::Real> {
    let moved = lorentz_matrix(c).apply(v);
    ConformalCheck {
        factor: c.det().norm_sqr(),
        square_before: scalar_square(v),
        square_after: scalar_square(&moved),
    }
}

/// A preimage `C ∈ SL(2,C)` of a proper orthochronous `L`; the other one is `-C`.
///
/// `L` is split as boost × rotation. The boost is the positive square root of
/// `W = w^μ σ_μ` with `w = L e₀`; the remaining rotation is converted to an
/// SU(2) element through its unit quaternion. The returned sign makes
/// `Re tr C > 0`; when `Re tr C = 0` the first nonzero entry (row-major) is
/// made to have positive real part, or positive imaginary part if it is
/// purely imaginary.
pub fn lift_lorentz<S: ComplexScalar>(
    l: &LorentzMatrix<S::Real>,
    pol: &TolerancePolicy,
) -> Result<Matrix2<S>> {
    l.check_proper_orthochronous(pol)?;
    let w = FourVector {
        v: std::array::from_fn(|mu| l.l[mu][0].clone()),
    };
    let boost = positive_sqrt_unimodular::<S>(&recompose::<S>(&w))?;
    let residual = lorentz_matrix(&boost.adjugate()).mul(l);
    let rotation = su2_from_rotation::<S>(&residual)?;
    Ok(fix_sign(&boost * &rotation))
}

/// `H^{1/2} = (H + I)/√(tr H + 2)` for Hermitian positive-definite `H` with
/// `det H = 1`.
pub(crate) fn positive_sqrt_unimodular<S: ComplexScalar>(h: &Herm2<S>) -> Result<Matrix2<S>> {
    let tr = h.matrix().trace().re();
    let norm = (tr + S::Real::from_i64(2)).sqrt_nonneg()?;
    let shifted = h.matrix().clone() + Matrix2::identity();
    Ok(shifted.scale_real(&(S::Real::one() / norm)))
}

/// Unit quaternion `(w, x, y, z)` of the spatial block of `r`, returned as
/// `w I - ι(x σ₁ + y σ₂ + z σ₃)`.
fn su2_from_rotation<S: ComplexScalar>(r: &LorentzMatrix<S::Real>) -> Result<Matrix2<S>> {
    let m = |a: usize, b: usize| r.l[a][b].clone();
    let one = S::Real::one();
    let quarter = S::Real::from_ratio(1, 4);
    let trace = m(1, 1) + m(2, 2) + m(3, 3);
    let diag = [m(1, 1), m(2, 2), m(3, 3)];
    // Shepperd's method: divide by the largest of the four candidate pivots
    let (w, x, y, z) = if trace > diag[0] && trace > diag[1] && trace > diag[2] {
        let s = (trace + one).sqrt_nonneg()? * S::Real::from_i64(2);
        (
            s.clone() * quarter,
            (m(3, 2) - m(2, 3)) / s.clone(),
            (m(1, 3) - m(3, 1)) / s.clone(),
            (m(2, 1) - m(1, 2)) / s,
        )
    } else if diag[0] >= diag[1] && diag[0] >= diag[2] {
        let s = (one + m(1, 1) - m(2, 2) - m(3, 3)).sqrt_nonneg()? * S::Real::from_i64(2);
        (
            (m(3, 2) - m(2, 3)) / s.clone(),
            s.clone() * quarter,
            (m(1, 2) + m(2, 1)) / s.clone(),
            (m(1, 3) + m(3, 1)) / s,
        )
    } else if diag[1] >= diag[2] {
        let s = (one + m(2, 2) - m(1, 1) - m(3, 3)).sqrt_nonneg()? * S::Real::from_i64(2);
        (
            (m(1, 3) - m(3, 1)) / s.clone(),
            (m(1, 2) + m(2, 1)) / s.clone(),
            s.clone() * quarter,
            (m(2, 3) + m(3, 2)) / s,
        )
    } else {
        let s = (one + m(3, 3) - m(1, 1) - m(2, 2)).sqrt_nonneg()? * S::Real::from_i64(2);
        (
            (m(2, 1) - m(1, 2)) / s.clone(),
            (m(1, 3) + m(3, 1)) / s.clone(),
            (m(2, 3) + m(3, 2)) / s.clone(),
            s * quarter,
        )
    };
    Ok(Matrix2::new(
        S::new(w.clone(), -z.clone()),
        S::new(-y.clone(), -x.clone()),
        S::new(y, -x),
        S::new(w, z),
    ))
}

fn fix_sign<S: ComplexScalar>(c: Matrix2<S>) -> Matrix2<S> {
    let zero = S::Real::zero();
    let tr = c.trace().re();
    let flip = if tr != zero {
        tr < zero
    } else {
        let first = c.m.iter().flatten().find(|z| !z.is_zero());
        match first {
            Some(z) if z.re() != zero => z.re() < zero,
            Some(z) => z.im() < zero,
            None => false,
        }
    };
    if flip {
        -c
    } else {
        c
    }
}

/// `decompose(act(C, recompose(v)))`, the action of `C` on a four-vector
/// routed through `Herm(2)`.
pub fn act_on_vector<S: ComplexScalar>(
    c: &Matrix2<S>,
    v: &FourVector<S::Real>,
) -> FourVector<S::Real> {
    decompose(&act(c, &recompose::<S>(v)))
}
