//! Small dense complex matrices.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{ComplexScalar, RealScalar, TolerancePolicy};

/// 2×2 complex matrix, row-major: `m[row][col]`.
///
/// When it holds a spin-tensor such as `V^{rṡ}` or `U_{rṡ}`, the undotted
/// index `r` is the row and the dotted index `ṡ` the column.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix2<S> {
    pub m: [[S; 2]; 2],
}

impl<S: ComplexScalar> Matrix2<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Self {
            m: [[a, b], [c, d]],
        }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> S) -> Self {
        Self {
            m: [[f(0, 0), f(0, 1)], [f(1, 0), f(1, 1)]],
        }
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| S::zero())
    }

    pub fn identity() -> Self {
        Self::diag(S::one(), S::one())
    }

    pub fn diag(a: S, d: S) -> Self {
        Self::new(a, S::zero(), S::zero(), d)
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.m[r][c]
    }

    pub fn det(&self) -> S {
        let [[a, b], [c, d]] = &self.m;
        a.clone() * d.clone() - b.clone() * c.clone()
    }

    pub fn trace(&self) -> S {
        self.m[0][0].clone() + self.m[1][1].clone()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|r, c| self.m[c][r].clone())
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Self::from_fn(|r, c| self.m[r][c].conj())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(|r, c| self.m[c][r].conj())
    }

    /// Classical adjugate, `adj(A) A = det(A) I`.
    pub fn adjugate(&self) -> Self {
        let [[a, b], [c, d]] = &self.m;
        Self::new(d.clone(), -b.clone(), -c.clone(), a.clone())
    }

    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::Singular);
        }
        let adj = self.adjugate();
        Ok(Self::from_fn(|r, c| adj.m[r][c].clone() / det.clone()))
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_fn(|r, c| self.m[r][c].clone() * s.clone())
    }

    pub fn scale_real(&self, s: &S::Real) -> Self {
        Self::from_fn(|r, c| self.m[r][c].scale(s))
    }

    pub fn apply(&self, v: &[S; 2]) -> [S; 2] {
        [
            self.m[0][0].clone() * v[0].clone() + self.m[0][1].clone() * v[1].clone(),
            self.m[1][0].clone() * v[0].clone() + self.m[1][1].clone() * v[1].clone(),
        ]
    }

    /// Largest `max(|re|,|im|)` over the entries of `self - other`.
    pub fn max_deviation(&self, other: &Self) -> S::Real {
        let mut worst = S::Real::zero();
        for r in 0..2 {
            for c in 0..2 {
                let d = (self.m[r][c].clone() - other.m[r][c].clone()).max_abs_component();
                worst = S::Real::max_of(worst, d);
            }
        }
        worst
    }

    pub fn approx_eq(&self, other: &Self, pol: &TolerancePolicy) -> bool {
        (0..2).all(|r| (0..2).all(|c| self.m[r][c].approx_eq(&other.m[r][c], pol)))
    }

    pub fn map<T>(&self, f: impl Fn(&S) -> T) -> [[T; 2]; 2] {
        [
            [f(&self.m[0][0]), f(&self.m[0][1])],
            [f(&self.m[1][0]), f(&self.m[1][1])],
        ]
    }
}

impl<S: ComplexScalar> Add for Matrix2<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|r, c| self.m[r][c].clone() + rhs.m[r][c].clone())
    }
}

impl<S: ComplexScalar> Sub for Matrix2<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|r, c| self.m[r][c].clone() - rhs.m[r][c].clone())
    }
}

impl<S: ComplexScalar> Neg for Matrix2<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_fn(|r, c| -self.m[r][c].clone())
    }
}

impl<S: ComplexScalar> Mul for &Matrix2<S> {
    type Output = Matrix2<S>;
    fn mul(self, rhs: Self) -> Matrix2<S> {
        Matrix2::from_fn(|r, c| {
            self.m[r][0].clone() * rhs.m[0][c].clone() + self.m[r][1].clone() * rhs.m[1][c].clone()
        })
    }
}

impl<S: ComplexScalar> Mul for Matrix2<S> {
    type Output = Matrix2<S>;
    fn mul(self, rhs: Self) -> Matrix2<S> {
        &self * &rhs
    }
}

/// 4×4 complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix4<S> {
    pub m: [[S; 4]; 4],
}

impl<S: ComplexScalar> Matrix4<S> {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> S) -> Self {
        Self {
            m: std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))),
        }
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| S::zero())
    }

    pub fn identity() -> Self {
        Self::from_fn(|r, c| if r == c { S::one() } else { S::zero() })
    }

    /// Assemble `[[a, b], [c, d]]` from 2×2 blocks.
    pub fn from_blocks(a: &Matrix2<S>, b: &Matrix2<S>, c: &Matrix2<S>, d: &Matrix2<S>) -> Self {
        Self::from_fn(|r, col| {
            let block = match (r < 2, col < 2) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            block.m[r % 2][col % 2].clone()
        })
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_fn(|r, c| self.m[r][c].clone() * s.clone())
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(|r, c| self.m[c][r].conj())
    }

    pub fn apply(&self, v: &[S; 4]) -> [S; 4] {
        std::array::from_fn(|r| {
            (0..4).fold(S::zero(), |acc, c| {
                acc + self.m[r][c].clone() * v[c].clone()
            })
        })
    }

    pub fn max_deviation(&self, other: &Self) -> S::Real {
        let mut worst = S::Real::zero();
        for r in 0..4 {
            for c in 0..4 {
                let d = (self.m[r][c].clone() - other.m[r][c].clone()).max_abs_component();
                worst = S::Real::max_of(worst, d);
            }
        }
        worst
    }
}

impl<S: ComplexScalar> Add for Matrix4<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|r, c| self.m[r][c].clone() + rhs.m[r][c].clone())
    }
}

impl<S: ComplexScalar> Sub for Matrix4<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|r, c| self.m[r][c].clone() - rhs.m[r][c].clone())
    }
}

impl<S: ComplexScalar> Mul for &Matrix4<S> {
    type Output = Matrix4<S>;
    fn mul(self, rhs: Self) -> Matrix4<S> {
        Matrix4::from_fn(|r, c| {
            (0..4).fold(S::zero(), |acc, k| {
                acc + self.m[r][k].clone() * rhs.m[k][c].clone()
            })
        })
    }
}

/// Sup-norm of a complex vector viewed in R^{2n}.
pub fn max_norm<S: ComplexScalar>(v: &[S]) -> S::Real {
    v.iter().fold(S::Real::zero(), |acc, z| {
        S::Real::max_of(acc, z.max_abs_component())
    })
}
