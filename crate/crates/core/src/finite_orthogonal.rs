//! The quadratic space `(F₃⁵, q)` obtained by reducing `h` modulo `θ`.
//!
//! `q(v) = 2v₁² + v₂² + v₃² + v₄² + v₅²` and its polarization
//! `B(v, w) = 2v₁w₁ + Σ_{k≥2} v_k w_k` satisfy `B(v, v) = q(v)`.
//! The orthogonal group is enumerated by breadth-first closure of the
//! reflections in all non-isotropic vectors.

use std::collections::HashSet;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::closure::{self, GroupElement};
use crate::eisenstein::F3Elem;
use crate::error::{Error, Result};

pub const DIM: usize = 5;

/// Diagonal of the reduced Gram matrix `diag(−1, 1, 1, 1, 1) mod 3`.
pub const Q_DIAG: [u8; DIM] = [2, 1, 1, 1, 1];

/// `2·3⁴·(3²−1)(3⁴−1)`.
pub const ORTHOGONAL_ORDER: usize = 103_680;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct F3Vector(pub [F3Elem; DIM]);

impl F3Vector {
    pub fn from_u8s(c: [u8; DIM]) -> Self {
        Self(c.map(F3Elem::new))
    }

    pub fn basis(k: usize) -> Self {
        let mut c = [0; DIM];
        c[k] = 1;
        Self::from_u8s(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: F3Elem) -> Self {
        Self(self.0.map(|x| x * c))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] + other.0[i]))
    }

    /// Representative of the projective class with first nonzero coordinate 1.
    pub fn projective_canonical(&self) -> Option<Self> {
        let lead = self.0.iter().find(|c| !c.is_zero())?;
        Some(self.scale(lead.inv()?))
    }

    /// All 3⁵ vectors, in base-3 counting order.
    pub fn all() -> impl Iterator<Item = Self> {
        (0..243u32).map(|mut n| {
            let mut c = [0u8; DIM];
            for slot in c.iter_mut().rev() {
                *slot = (n % 3) as u8;
                n /= 3;
            }
            Self::from_u8s(c)
        })
    }

    pub fn nonzero() -> impl Iterator<Item = Self> {
        Self::all().filter(|v| !v.is_zero())
    }
}

impl fmt::Display for F3Vector {
    /// `[0,1,2,0,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl std::str::FromStr for F3Vector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid F3 vector {s:?}"));
        let inner = s
            .trim()
            .strip_prefix(['[', '('])
            .and_then(|t| t.strip_suffix([']', ')']))
            .ok_or_else(bad)?;
        let vals: Vec<i64> = inner
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let arr: [i64; DIM] = vals.try_into().map_err(|_| bad())?;
        Ok(Self(arr.map(F3Elem::from_i64)))
    }
}

pub fn q_value(v: &F3Vector) -> F3Elem {
    bilinear(v, v)
}

pub fn bilinear(v: &F3Vector, w: &F3Vector) -> F3Elem {
    let s: u32 = (0..DIM)
        .map(|i| Q_DIAG[i] as u32 * v.0[i].value() as u32 * w.0[i].value() as u32)
        .sum();
    F3Elem::from_i64(s as i64)
}

/// The 40 projective null points, canonical representatives in ascending order.
pub fn null_points() -> Vec<F3Vector> {
    projective_points()
        .into_iter()
        .filter(|p| q_value(p).is_zero())
        .collect()
}

/// All 121 points of `P(F₃⁵)`, canonical representatives in ascending order.
pub fn projective_points() -> Vec<F3Vector> {
    let mut pts: Vec<F3Vector> = F3Vector::nonzero()
        .filter(|v| v.projective_canonical().as_ref() == Some(v))
        .collect();
    pts.sort();
    pts
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonIsotropicSplit {
    /// Projective points with `q = 1`.
    pub q1: usize,
    /// Projective points with `q = 2`.
    pub q2: usize,
}

pub fn nonisotropic_split() -> NonIsotropicSplit {
    let pts = projective_points();
    let count = |t: F3Elem| pts.iter().filter(|p| q_value(p) == t).count();
    NonIsotropicSplit {
        q1: count(F3Elem::ONE),
        q2: count(F3Elem::TWO),
    }
}

/// A 5×5 matrix over `F₃`, acting on column vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F3Matrix(pub [[F3Elem; DIM]; DIM]);

impl F3Matrix {
    pub fn identity() -> Self {
        Self::scalar(F3Elem::ONE)
    }

    pub fn scalar(c: F3Elem) -> Self {
        let mut m = [[F3Elem::ZERO; DIM]; DIM];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = c;
        }
        Self(m)
    }

    pub fn from_u8s(rows: [[u8; DIM]; DIM]) -> Self {
        Self(rows.map(|r| r.map(F3Elem::new)))
    }

    pub fn apply(&self, v: &F3Vector) -> F3Vector {
        F3Vector(std::array::from_fn(|i| {
            let s: u32 = (0..DIM)
                .map(|j| self.0[i][j].value() as u32 * v.0[j].value() as u32)
                .sum();
            F3Elem::from_i64(s as i64)
        }))
    }

    pub fn transpose(&self) -> Self {
        Self(std::array::from_fn(|i| std::array::from_fn(|j| self.0[j][i])))
    }

    pub fn neg(&self) -> Self {
        Self(self.0.map(|r| r.map(|x| -x)))
    }

    /// `c` when the matrix is `c·I` with `c ≠ 0`.
    pub fn as_scalar(&self) -> Option<F3Elem> {
        let c = self.0[0][0];
        if c.is_zero() {
            return None;
        }
        (*self == Self::scalar(c)).then_some(c)
    }

    /// `MᵀGM = G` for the Gram matrix of `q`.
    pub fn preserves_q(&self) -> bool {
        (0..DIM).all(|i| {
            (0..DIM).all(|j| {
                let s: u32 = (0..DIM)
                    .map(|k| {
                        self.0[k][i].value() as u32 * Q_DIAG[k] as u32 * self.0[k][j].value() as u32
                    })
                    .sum();
                let expected = if i == j { Q_DIAG[i] as u32 } else { 0 };
                s % 3 == expected
            })
        })
    }

    /// Row-major base-3 packing of the 25 entries.
    pub fn packed_key(&self) -> u64 {
        self.0
            .iter()
            .flatten()
            .fold(0u64, |acc, x| acc * 3 + x.value() as u64)
    }

    pub fn from_packed_key(mut key: u64) -> Result<Self> {
        let mut m = [[F3Elem::ZERO; DIM]; DIM];
        for i in (0..DIM * DIM).rev() {
            m[i / DIM][i % DIM] = F3Elem::new((key % 3) as u8);
            key /= 3;
        }
        if key != 0 {
            return Err(Error::Parse("packed F3 matrix key out of range".into()));
        }
        Ok(Self(m))
    }

    /// Key of the class `{M, −M}` in the projective group.
    pub fn projective_key(&self) -> u64 {
        self.packed_key().min(self.neg().packed_key())
    }
}

impl Mul for F3Matrix {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = [[F3Elem::ZERO; DIM]; DIM];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let mut s = 0u8;
                for k in 0..DIM {
                    s += self.0[i][k].value() * rhs.0[k][j].value();
                }
                *slot = F3Elem::new(s % 3);
            }
        }
        Self(out)
    }
}

impl GroupElement for F3Matrix {
    type Key = u64;

    fn key(&self) -> u64 {
        self.packed_key()
    }

    fn compose(&self, rhs: &Self) -> Self {
        *self * *rhs
    }
}

impl fmt::Display for F3Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", F3Vector(*row))?;
        }
        Ok(())
    }
}

/// `x ↦ x − 2B(x,v)q(v)⁻¹v`, the orthogonal reflection in `v`.
pub fn f3_reflection(v: &F3Vector) -> Result<F3Matrix> {
    let qinv = q_value(v).inv().ok_or(Error::IsotropicVector)?;
    let c = F3Elem::TWO * qinv;
    Ok(F3Matrix(std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let delta = if i == j { F3Elem::ONE } else { F3Elem::ZERO };
            delta - c * F3Elem::new(Q_DIAG[j]) * v.0[i] * v.0[j]
        })
    })))
}

/// Distinct reflections in the 162 non-isotropic vectors (81 matrices, since `v` and `2v` agree).
pub fn reflection_generators() -> Vec<F3Matrix> {
    let mut gens: Vec<F3Matrix> = F3Vector::nonzero()
        .filter_map(|v| f3_reflection(&v).ok())
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    gens.sort_by_key(|m| m.packed_key());
    gens
}

/// An enumerated subgroup of `O(F₃⁵, q)`, elements sorted by packed key.
#[derive(Debug, Clone)]
pub struct OrthogonalGroup {
    elements: Vec<F3Matrix>,
}

impl OrthogonalGroup {
    /// Closure of the given generators; they must preserve `q`.
    pub fn generated_by(generators: &[F3Matrix], cap: usize) -> Result<Self> {
        if let Some(bad) = generators.iter().find(|g| !g.preserves_q()) {
            return Err(Error::Internal(format!("generator does not preserve q:\n{bad}")));
        }
        let elements = closure::closure(F3Matrix::identity(), generators, cap)?;
        Ok(Self { elements })
    }

    /// Rebuild from packed keys (e.g. a cache file). Every key must decode to
    /// a distinct `q`-preserving matrix and the identity must be present.
    pub fn from_packed_keys(keys: &[u64]) -> Result<Self> {
        let mut elements = keys
            .iter()
            .map(|&k| F3Matrix::from_packed_key(k))
            .collect::<Result<Vec<_>>>()?;
        elements.sort_by_key(|m| m.packed_key());
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse("duplicate group element".into()));
        }
        if elements.iter().any(|m| !m.preserves_q()) {
            return Err(Error::Parse("element does not preserve q".into()));
        }
        let id = F3Matrix::identity().packed_key();
        if elements.binary_search_by_key(&id, |m| m.packed_key()).is_err() {
            return Err(Error::Parse("identity missing".into()));
        }
        Ok(Self { elements })
    }

    pub fn elements(&self) -> &[F3Matrix] {
        &self.elements
    }

    pub fn packed_keys(&self) -> Vec<u64> {
        self.elements.iter().map(|m| m.packed_key()).collect()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &F3Matrix) -> bool {
        self.elements
            .binary_search_by_key(&m.packed_key(), |x| x.packed_key())
            .is_ok()
    }

    /// Number of classes modulo the scalars `{±I}` contained in the group.
    pub fn projective_order(&self) -> usize {
        let minus = F3Matrix::scalar(F3Elem::TWO);
        if self.contains(&minus) {
            self.order() / 2
        } else {
            self.order()
        }
    }
}

/// The full orthogonal group `O(F₃⁵, q)`.
pub fn orthogonal_group(cap: usize) -> Result<OrthogonalGroup> {
    OrthogonalGroup::generated_by(&reflection_generators(), cap)
}

/// Dense linear algebra over `F₃` for small matrices of any shape.
pub mod linalg {
    use crate::eisenstein::F3Elem;

    pub type Mat = Vec<Vec<F3Elem>>;

    /// Row-reduces in place; returns the pivot columns.
    pub fn row_reduce(m: &mut Mat) -> Vec<usize> {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].inv().expect("nonzero pivot");
            for x in m[r].iter_mut() {
                *x = *x * inv;
            }
            for i in 0..rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c];
                    for j in 0..cols {
                        let t = m[r][j];
                        m[i][j] = m[i][j] - f * t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(m: &Mat) -> usize {
        row_reduce(&mut m.clone()).len()
    }

    /// A basis of `{x : m·x = 0}`.
    pub fn nullspace(m: &Mat) -> Vec<Vec<F3Elem>> {
        let cols = m.first().map_or(0, Vec::len);
        let mut r = m.clone();
        let pivots = row_reduce(&mut r);
        (0..cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut x = vec![F3Elem::ZERO; cols];
                x[free] = F3Elem::ONE;
                for (row, &pc) in pivots.iter().enumerate() {
                    x[pc] = -r[row][free];
                }
                x
            })
            .collect()
    }

    pub fn inverse(m: &Mat) -> Option<Mat> {
        let n = m.len();
        let mut aug: Mat = m
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend((0..n).map(|j| if i == j { F3Elem::ONE } else { F3Elem::ZERO }));
                r
            })
            .collect();
        let pivots = row_reduce(&mut aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
    }

    pub fn mul_vec(m: &Mat, v: &[F3Elem]) -> Vec<F3Elem> {
        m.iter()
            .map(|row| row.iter().zip(v).fold(F3Elem::ZERO, |acc, (&a, &b)| acc + a * b))
            .collect()
    }
}
