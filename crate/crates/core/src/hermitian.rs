//! The hermitian lattice `(E⁵, h)` with `h(v, w) = −v₁w̄₁ + v₂w̄₂ + … + v₅w̄₅`.
//!
//! `h` is linear in the first argument and conjugate-linear in the second.
//! The coordinate basis `γ₁, …, γ₅` is orthogonal with `h(γ₁, γ₁) = −1` and
//! `h(γ_k, γ_k) = 1` for `k > 1`. Isometries act on column vectors and are
//! exactly the matrices with `M*GM = G`, `G = diag(−1, 1, 1, 1, 1)`.
//!
//! `Γ₀` is the kernel of the reduction `PAut(E⁵, h) → PAut(F₃⁵, q)`; an
//! isometry belongs to it when it reduces to a scalar matrix modulo `θ`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::eisenstein::EisensteinInt;
use crate::error::{Error, Result};
use crate::finite_orthogonal::{F3Matrix, F3Vector};

pub const RANK: usize = 5;

/// Diagonal of the Gram matrix `G`.
pub const GRAM_DIAG: [i64; RANK] = [-1, 1, 1, 1, 1];

type E = EisensteinInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeVector(pub [EisensteinInt; RANK]);

impl LatticeVector {
    pub const ZERO: Self = Self([E::ZERO; RANK]);

    pub fn from_ints(c: [i64; RANK]) -> Self {
        Self(c.map(E::from_int))
    }

    /// `γ_{k+1}`.
    pub fn basis(k: usize) -> Self {
        let mut v = Self::ZERO;
        v.0[k] = E::ONE;
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: EisensteinInt) -> Result<Self> {
        let mut out = *self;
        for x in out.0.iter_mut() {
            *x = c.checked_mul(*x)?;
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = *self;
        for (x, y) in out.0.iter_mut().zip(other.0) {
            *x = x.checked_add(y)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let mut out = *self;
        for (x, y) in out.0.iter_mut().zip(other.0) {
            *x = x.checked_sub(y)?;
        }
        Ok(out)
    }

    /// Coordinatewise reduction modulo `θ`.
    pub fn reduce(&self) -> F3Vector {
        F3Vector(self.0.map(E::reduce_mod_theta))
    }

    /// Not divisible by `θ`.
    pub fn is_primitive_at_theta(&self) -> bool {
        !self.reduce().is_zero()
    }

    /// The six associates `u·v`.
    pub fn unit_multiples(&self) -> [Self; 6] {
        E::UNITS.map(|u| self.scale(u).expect("unit scaling cannot grow coordinates"))
    }

    /// Lexicographically least associate.
    pub fn canonical(&self) -> Self {
        self.unit_multiples().into_iter().min().expect("six associates")
    }

    /// Every coordinate has modulus at most `height`, i.e. norm at most `height²`.
    pub fn within_height(&self, height: i64) -> bool {
        let bound = height.saturating_mul(height);
        self.0.iter().all(|c| c.norm() <= bound)
    }
}

impl fmt::Display for LatticeVector {
    /// `[a+bw, a+bw, a+bw, a+bw, a+bw]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl FromStr for LatticeVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid lattice vector {s:?}"));
        let inner = s
            .trim()
            .strip_prefix(['[', '('])
            .and_then(|t| t.strip_suffix([']', ')']))
            .ok_or_else(bad)?;
        let coords: Vec<E> = inner.split(',').map(str::parse).collect::<Result<_>>()?;
        Ok(Self(coords.try_into().map_err(|_| bad())?))
    }
}

/// `h(v, w)`.
pub fn herm(v: &LatticeVector, w: &LatticeVector) -> Result<EisensteinInt> {
    let mut acc = E::ZERO;
    for k in 0..RANK {
        let term = v.0[k].checked_mul(w.0[k].checked_conj()?)?;
        acc = if GRAM_DIAG[k] < 0 {
            acc.checked_sub(term)?
        } else {
            acc.checked_add(term)?
        };
    }
    Ok(acc)
}

/// `h(v, v)`, always a rational integer.
pub fn herm_norm(v: &LatticeVector) -> Result<i64> {
    herm(v, v)?
        .as_rational()
        .ok_or_else(|| Error::Internal("h(v,v) is not rational".into()))
}

/// Counts of positive and negative entries of a diagonal Gram matrix.
pub fn diagonal_signature(diag: &[i64]) -> (usize, usize) {
    (
        diag.iter().filter(|&&d| d > 0).count(),
        diag.iter().filter(|&&d| d < 0).count(),
    )
}

/// The signature of `h`: `(4, 1)`.
pub fn signature() -> (usize, usize) {
    diagonal_signature(&GRAM_DIAG)
}

pub fn gram_trace() -> i64 {
    GRAM_DIAG.iter().sum()
}

pub fn gram_determinant() -> i64 {
    GRAM_DIAG.iter().product()
}

/// Self-duality of the free lattice with diagonal integer Gram matrix.
///
/// The dual of `⊕ E·b_k` with `h(b_k, b_k) = d_k` is `⊕ d_k⁻¹E·b_k`, which
/// equals the lattice exactly when every `d_k` is a unit, i.e. `|det| = 1`.
pub fn is_self_dual(diag: &[i64]) -> bool {
    let det = diag
        .iter()
        .try_fold(1i64, |acc, &d| acc.checked_mul(d));
    !diag.is_empty() && det.is_some_and(|d| d.abs() == 1)
}

pub fn verify_self_dual() -> bool {
    is_self_dual(&GRAM_DIAG)
}

/// An exact 5×5 matrix over `Z[ω]` preserving `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Isometry {
    m: [[EisensteinInt; RANK]; RANK],
}

impl Isometry {
    /// Checks `M*GM = G`.
    pub fn new(m: [[EisensteinInt; RANK]; RANK]) -> Result<Self> {
        let iso = Self { m };
        if iso.preserves_form()? {
            Ok(iso)
        } else {
            Err(Error::NotIsometry)
        }
    }

    pub fn identity() -> Self {
        Self::scalar_unchecked(E::ONE)
    }

    /// `u·I` for a unit `u`.
    pub fn scalar(u: EisensteinInt) -> Result<Self> {
        if !u.is_unit() {
            return Err(Error::BadUnit(u));
        }
        Ok(Self::scalar_unchecked(u))
    }

    fn scalar_unchecked(u: EisensteinInt) -> Self {
        let mut m = [[E::ZERO; RANK]; RANK];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = u;
        }
        Self { m }
    }

    pub fn entries(&self) -> &[[EisensteinInt; RANK]; RANK] {
        &self.m
    }

    pub fn column(&self, j: usize) -> LatticeVector {
        LatticeVector(std::array::from_fn(|i| self.m[i][j]))
    }

    fn preserves_form(&self) -> Result<bool> {
        for i in 0..RANK {
            for j in 0..RANK {
                let mut s = E::ZERO;
                for k in 0..RANK {
                    let t = self.m[k][i].checked_conj()?.checked_mul(self.m[k][j])?;
                    s = if GRAM_DIAG[k] < 0 { s.checked_sub(t)? } else { s.checked_add(t)? };
                }
                let expected = if i == j { E::from_int(GRAM_DIAG[i]) } else { E::ZERO };
                if s != expected {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let mut m = [[E::ZERO; RANK]; RANK];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let mut s = E::ZERO;
                for k in 0..RANK {
                    s = s.checked_add(self.m[i][k].checked_mul(rhs.m[k][j])?)?;
                }
                *slot = s;
            }
        }
        Ok(Self { m })
    }

    /// `G⁻¹M*G`, which is integral whenever `M` is.
    pub fn inverse(&self) -> Result<Self> {
        let mut m = [[E::ZERO; RANK]; RANK];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let c = self.m[j][i].checked_conj()?;
                *slot = if GRAM_DIAG[i] * GRAM_DIAG[j] < 0 { c.checked_neg()? } else { c };
            }
        }
        Ok(Self { m })
    }

    pub fn checked_pow(&self, n: u32) -> Result<Self> {
        (0..n).try_fold(Self::identity(), |acc, _| acc.checked_mul(self))
    }

    /// Smallest `k ≤ max` with `Mᵏ = I`.
    pub fn order(&self, max: u32) -> Result<Option<u32>> {
        let mut acc = *self;
        for k in 1..=max {
            if acc == Self::identity() {
                return Ok(Some(k));
            }
            acc = acc.checked_mul(self)?;
        }
        Ok(None)
    }

    pub fn apply(&self, v: &LatticeVector) -> Result<LatticeVector> {
        let mut out = LatticeVector::ZERO;
        for (i, slot) in out.0.iter_mut().enumerate() {
            for j in 0..RANK {
                *slot = slot.checked_add(self.m[i][j].checked_mul(v.0[j])?)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.m.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", LatticeVector(*row))?;
        }
        Ok(())
    }
}

impl FromStr for Isometry {
    type Err = Error;

    /// Five rows in vector format, optionally wrapped in an outer pair of brackets.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid matrix {s:?}"));
        let body = s.trim();
        let body = match body.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            Some(inner) if inner.trim_start().starts_with('[') => inner,
            _ => body,
        };
        let rows: Vec<LatticeVector> = body
            .split(']')
            .map(|r| r.trim().trim_start_matches([',', ';']).trim())
            .filter(|r| !r.is_empty())
            .map(|r| format!("{r}]").parse())
            .collect::<Result<_>>()?;
        let rows: [LatticeVector; RANK] = rows.try_into().map_err(|_| bad())?;
        Self::new(rows.map(|r| r.0))
    }
}

/// The complex reflection `x ↦ x − (1 − ζ)·h(x, v)/h(v, v)·v`.
///
/// It fixes `v^⊥` pointwise and sends `v` to `ζv`. Norm-1 vectors admit every
/// unit `ζ ≠ 1`; norm-2 vectors only `ζ = −1`.
pub fn reflection(v: &LatticeVector, zeta: EisensteinInt) -> Result<Isometry> {
    if !zeta.is_unit() || zeta == E::ONE {
        return Err(Error::BadUnit(zeta));
    }
    let n = herm_norm(v)?;
    if n != 1 && n != 2 {
        return Err(Error::BadNorm(n));
    }
    let one_minus_zeta = E::ONE.checked_sub(zeta)?;
    let mut m = [[E::ZERO; RANK]; RANK];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            // (1 − ζ)·v_i·G_jj·conj(v_j) / n
            let mut t = one_minus_zeta
                .checked_mul(v.0[i])?
                .checked_mul(v.0[j].checked_conj()?)?;
            if GRAM_DIAG[j] < 0 {
                t = t.checked_neg()?;
            }
            let t = t
                .divide_exact(E::from_int(n))
                .map_err(|_| Error::NonIntegral { zeta, norm: n })?;
            let delta = if i == j { E::ONE } else { E::ZERO };
            *slot = delta.checked_sub(t)?;
        }
    }
    Isometry::new(m)
}

/// Entrywise reduction modulo `θ`; the result must preserve `q`.
pub fn reduce_isometry(m: &Isometry) -> Result<F3Matrix> {
    let red = F3Matrix(m.m.map(|row| row.map(E::reduce_mod_theta)));
    if !red.preserves_q() {
        return Err(Error::Internal(format!("reduction does not preserve q:\n{red}")));
    }
    Ok(red)
}

/// Projective triviality modulo `θ`.
pub fn in_gamma0(m: &Isometry) -> bool {
    F3Matrix(m.m.map(|row| row.map(E::reduce_mod_theta)))
        .as_scalar()
        .is_some()
}

/// Eisenstein integers of modulus at most `height`, grouped by norm.
fn elements_by_norm(height: i64) -> BTreeMap<i64, Vec<EisensteinInt>> {
    let bound = height * height;
    // a² − ab + b² ≥ max(a², b²)·3/4, so |a|, |b| ≤ 2·height suffices.
    let r = 2 * height;
    let mut map: BTreeMap<i64, Vec<E>> = BTreeMap::new();
    for a in -r..=r {
        for b in -r..=r {
            let x = E::new(a, b);
            let n = x.norm();
            if n <= bound {
                map.entry(n).or_default().push(x);
            }
        }
    }
    map
}

/// All unit classes of nonzero `v` with `h(v, v) = norm_target` whose
/// coordinates have modulus at most `height_bound`.
///
/// Each class is returned by its lexicographically least associate, and the
/// list is sorted.
pub fn enumerate_vectors(norm_target: i64, height_bound: i64) -> Vec<LatticeVector> {
    if height_bound < 1 {
        return Vec::new();
    }
    let by_norm = elements_by_norm(height_bound);
    let all: Vec<(E, i64)> = by_norm
        .iter()
        .flat_map(|(&n, xs)| xs.iter().map(move |&x| (x, n)))
        .collect();

    let mut out = Vec::new();
    for &(x2, n2) in &all {
        for &(x3, n3) in &all {
            for &(x4, n4) in &all {
                for &(x5, n5) in &all {
                    let n1 = n2 + n3 + n4 + n5 - norm_target;
                    let Some(firsts) = by_norm.get(&n1) else {
                        continue;
                    };
                    for &x1 in firsts {
                        let v = LatticeVector([x1, x2, x3, x4, x5]);
                        if !v.is_zero() && v.canonical() == v {
                            out.push(v);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}
