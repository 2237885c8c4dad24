//! Two-component spinors and the scalar products induced by the pairing
//! `u(i, α) = i¹α¹ + i²α²`.
//!
//! An element of the first set is identified with its component pair
//! `(i¹, i²)`. Elements of the second set are never stored: they are the
//! complex conjugates of first-set elements, so every routine taking "an
//! element of the second set" accepts the first-set spinor and conjugates it
//! internally.
//!
//! Index conventions: `ε₁₂ = ε^{12} = +1`, `ε₂₁ = ε^{21} = -1`, which
//! satisfies `ε_{ru} ε^{su} = δ_r^s`. The same numerical symbol serves dotted
//! and undotted indices.

use crate::error::Result;
use crate::matrix::Matrix2;
use crate::scalar::ComplexScalar;

/// The Levi-Civita symbol in two dimensions, shared by all index types.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EpsilonConvention;

impl EpsilonConvention {
    /// Covariant components `ε_{rs}`.
    pub const LOWER: [[i64; 2]; 2] = [[0, 1], [-1, 0]];
    /// Contravariant components `ε^{rs}`.
    pub const UPPER: [[i64; 2]; 2] = [[0, 1], [-1, 0]];

    pub fn lower<S: ComplexScalar>(r: usize, s: usize) -> S {
        S::from_i64(Self::LOWER[r][s])
    }

    pub fn upper<S: ComplexScalar>(r: usize, s: usize) -> S {
        S::from_i64(Self::UPPER[r][s])
    }
}

/// Undotted contravariant spinor `i^r`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spinor2<S>(pub [S; 2]);

/// Undotted covariant spinor `i_r = ε_{rs} i^s`.
#[derive(Debug, Clone, PartialEq)]
pub struct CovariantSpinor<S>(pub [S; 2]);

/// Dotted covariant spinor `β_ṙ`.
///
/// Under a change of basis `i ↦ C i` it transforms with `conj(C)^{-T}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoSpinorDotted<S>(pub [S; 2]);

impl<S: ComplexScalar> Spinor2<S> {
    pub fn new(c1: S, c2: S) -> Self {
        Self([c1, c2])
    }

    pub fn zero() -> Self {
        Self([S::zero(), S::zero()])
    }

    pub fn c1(&self) -> &S {
        &self.0[0]
    }

    pub fn c2(&self) -> &S {
        &self.0[1]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|z| z.is_zero())
    }

    pub fn scale(&self, lambda: &S) -> Self {
        Self([
            self.0[0].clone() * lambda.clone(),
            self.0[1].clone() * lambda.clone(),
        ])
    }

    pub fn scale_real(&self, lambda: &S::Real) -> Self {
        Self([self.0[0].scale(lambda), self.0[1].scale(lambda)])
    }

    pub fn add(&self, other: &Self) -> Self {
        Self([
            self.0[0].clone() + other.0[0].clone(),
            self.0[1].clone() + other.0[1].clone(),
        ])
    }

    /// Componentwise conjugate: the parameters of the paired second-set element.
    pub fn conj_params(&self) -> [S; 2] {
        [self.0[0].conj(), self.0[1].conj()]
    }

    /// `i'^r = C^r_s i^s`.
    pub fn transform(&self, c: &Matrix2<S>) -> Self {
        Self(c.apply(&self.0))
    }

    /// `i_r = ε_{rs} i^s`, i.e. `(i₁, i₂) = (i², -i¹)`.
    pub fn lower_index(&self) -> CovariantSpinor<S> {
        CovariantSpinor(std::array::from_fn(|r| {
            (0..2).fold(S::zero(), |acc, s| {
                acc + EpsilonConvention::lower::<S>(r, s) * self.0[s].clone()
            })
        }))
    }
}

impl<S: ComplexScalar> CovariantSpinor<S> {
    /// `i^s = ε^{rs} i_r`, the inverse of [`Spinor2::lower_index`].
    pub fn raise_index(&self) -> Spinor2<S> {
        Spinor2(std::array::from_fn(|s| {
            (0..2).fold(S::zero(), |acc, r| {
                acc + EpsilonConvention::upper::<S>(r, s) * self.0[r].clone()
            })
        }))
    }
}

impl<S: ComplexScalar> CoSpinorDotted<S> {
    pub fn new(b1: S, b2: S) -> Self {
        Self([b1, b2])
    }

    pub fn zero() -> Self {
        Self([S::zero(), S::zero()])
    }

    pub fn scale(&self, lambda: &S) -> Self {
        Self([
            self.0[0].clone() * lambda.clone(),
            self.0[1].clone() * lambda.clone(),
        ])
    }

    /// `β' = conj(C)^{-T} β`, the law matching `i ↦ C i` on the undotted side.
    pub fn transform(&self, c: &Matrix2<S>) -> Result<Self> {
        let m = c.conj().inverse()?.transpose();
        Ok(Self(m.apply(&self.0)))
    }
}

/// `u(i, α)` with `α` the conjugate of `a`: `i¹ conj(a¹) + i² conj(a²)`.
pub fn pairing<S: ComplexScalar>(i: &Spinor2<S>, a: &Spinor2<S>) -> S {
    pairing_params(i, &a.conj_params())
}

/// `u(i, α) = i¹α¹ + i²α²` for raw second-set parameters.
pub fn pairing_params<S: ComplexScalar>(i: &Spinor2<S>, alpha: &[S; 2]) -> S {
    i.0[0].clone() * alpha[0].clone() + i.0[1].clone() * alpha[1].clone()
}

fn det3<S: ComplexScalar>(m: &[[S; 3]; 3]) -> S {
    let minor =
        |a: usize, b: usize| m[1][a].clone() * m[2][b].clone() - m[1][b].clone() * m[2][a].clone();
    m[0][0].clone() * minor(1, 2) - m[0][1].clone() * minor(0, 2) + m[0][2].clone() * minor(0, 1)
}

/// The 3×3 determinant of pairings between three first-set elements and three
/// second-set elements (given as the spinors they conjugate).
///
/// Zero for every input: the pairing matrix factors through C².
pub fn rank33_determinant<S: ComplexScalar>(m: [&Spinor2<S>; 3], n: [&Spinor2<S>; 3]) -> S {
    let grid: [[S; 3]; 3] = std::array::from_fn(|r| std::array::from_fn(|c| pairing(m[r], n[c])));
    det3(&grid)
}

/// The 2×2 minor `u(i,α)u(k,β) - u(i,β)u(k,α)` with `α, β` the conjugates of
/// `a, b`. Equals `[i,k] · conj([a,b])`.
pub fn fundamental_relation<S: ComplexScalar>(
    i: &Spinor2<S>,
    k: &Spinor2<S>,
    a: &Spinor2<S>,
    b: &Spinor2<S>,
) -> S {
    pairing(i, a) * pairing(k, b) - pairing(i, b) * pairing(k, a)
}

/// Symplectic product `[i,k] = ε_{rs} i^r k^s = i¹k² - i²k¹`.
pub fn symplectic<S: ComplexScalar>(i: &Spinor2<S>, k: &Spinor2<S>) -> S {
    let mut acc = S::zero();
    for r in 0..2 {
        for s in 0..2 {
            acc = acc + EpsilonConvention::lower::<S>(r, s) * i.0[r].clone() * k.0[s].clone();
        }
    }
    acc
}

/// Unitary product `⟨i,k⟩ = i¹ conj(k¹) + i² conj(k²)`.
pub fn unitary_product<S: ComplexScalar>(i: &Spinor2<S>, k: &Spinor2<S>) -> S {
    pairing(i, k)
}
