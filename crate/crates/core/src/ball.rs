//! The complex hyperbolic ball `B⁴ = { [z] ∈ P⁴ : h(z, z) < 0 }`.
//!
//! Distances use `cosh²(d/2) = h(x,y)h(y,x) / (h(x,x)h(y,y))`, evaluated as
//! `sinh²(d/2)` through the component of `y` orthogonal to `x`.
//!
//! Points are stored in double-double precision. Rounding homogeneous f64
//! coordinates of a point at `|z₁|² = R` already moves it by about `ε·R` in
//! the metric, and reflection words reach `R ~ 10⁶` quickly.

use std::fmt;
use std::str::FromStr;

use num_complex::{Complex, Complex64};
use twofloat::TwoFloat;

use crate::error::{Error, Result};
use crate::finite_orthogonal::F3Vector;
use crate::hermitian::{self, Isometry, LatticeVector, GRAM_DIAG, RANK};

/// Rejection margin for `h(z, z) < 0`.
pub const BALL_EPS: f64 = 1e-9;
pub const DEFAULT_MEMBERSHIP_TOL: f64 = 1e-8;
pub const INVARIANCE_TOL: f64 = 1e-10;

pub type CVector = [Complex64; RANK];

type Dd = TwoFloat;
type Cdd = Complex<TwoFloat>;
type DdVector = [Cdd; RANK];

fn dd(x: f64) -> Dd {
    TwoFloat::from(x)
}

fn cdd(z: Complex64) -> Cdd {
    Complex::new(dd(z.re), dd(z.im))
}

fn round(z: Cdd) -> Complex64 {
    Complex64::new(z.re.into(), z.im.into())
}

fn herm_dd(z: &DdVector, w: &DdVector) -> Cdd {
    (0..RANK).fold(Complex::new(dd(0.0), dd(0.0)), |acc, k| {
        let t = z[k] * w[k].conj();
        if GRAM_DIAG[k] < 0 {
            acc - t
        } else {
            acc + t
        }
    })
}

/// `ω = −1/2 + i√3/2`.
fn omega_dd() -> Cdd {
    Complex::new(dd(-0.5), dd(3.0).sqrt() / 2.0)
}

fn lattice_to_dd(v: &LatticeVector) -> DdVector {
    let w = omega_dd();
    v.0.map(|x| Complex::new(dd(x.a as f64), dd(0.0)) + w * dd(x.b as f64))
}

/// `h(z, w)` on f64 vectors, evaluated in double-double and rounded.
pub fn herm_c(z: &CVector, w: &CVector) -> Complex64 {
    round(herm_dd(&z.map(cdd), &w.map(cdd)))
}

pub fn lattice_to_complex(v: &LatticeVector) -> CVector {
    lattice_to_dd(v).map(round)
}

/// Normalized to `h(z, z) = −1` with `z₁` real and positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BallPoint {
    exact: DdVector,
    coords: CVector,
}

impl BallPoint {
    pub fn new(raw: CVector) -> Result<Self> {
        Self::from_dd(raw.map(cdd))
    }

    fn from_dd(raw: DdVector) -> Result<Self> {
        let n = herm_dd(&raw, &raw).re;
        let nf: f64 = n.into();
        if !nf.is_finite() || nf >= -BALL_EPS {
            return Err(Error::NotInBall(nf));
        }
        // h < 0 forces |z₁|² > 0.
        let z1 = raw[0];
        let modulus = (z1.re * z1.re + z1.im * z1.im).sqrt();
        let s = z1.conj() / (modulus * (-n).sqrt());
        let mut exact = raw.map(|z| z * s);
        exact[0].im = dd(0.0);
        Ok(Self {
            exact,
            coords: exact.map(round),
        })
    }

    pub fn from_reals(raw: [f64; RANK]) -> Result<Self> {
        Self::new(raw.map(|x| Complex64::new(x, 0.0)))
    }

    pub fn center() -> Self {
        Self::from_reals([1.0, 0.0, 0.0, 0.0, 0.0]).expect("center")
    }

    /// The representative rounded to f64.
    pub fn coords(&self) -> &CVector {
        &self.coords
    }

    /// Largest coordinate difference between the gauged representatives.
    pub fn max_deviation(&self, other: &Self) -> f64 {
        (0..RANK)
            .map(|k| (self.coords[k] - other.coords[k]).norm())
            .fold(0.0, f64::max)
    }
}

pub fn make_point(raw: CVector) -> Result<BallPoint> {
    BallPoint::new(raw)
}

impl fmt::Display for BallPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|z| format_complex(*z, 12)).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for BallPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_cvector(s)?)
    }
}

/// `re+imi` with the given number of decimals; pure reals print without `i`.
pub fn format_complex(z: Complex64, decimals: usize) -> String {
    let clean = |x: f64| if x.abs() < 0.5 * 10f64.powi(-(decimals as i32)) { 0.0 } else { x };
    let (re, im) = (clean(z.re), clean(z.im));
    if im == 0.0 {
        format!("{re:.decimals$}")
    } else {
        let sign = if im < 0.0 { '-' } else { '+' };
        format!("{re:.decimals$}{sign}{:.decimals$}i", im.abs())
    }
}

/// Accepts `1`, `-0.5`, `0.41i`, `-i`, `1+2i`, `1.5e-3-2i`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("bad complex number {s:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    // Split before the last sign that is not an exponent sign.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re_part, im_part) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse::<f64>().map_err(|_| bad())?,
    };
    let re = re_part.parse::<f64>().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

/// Five comma-separated complex numbers in `[…]` or `(…)`.
pub fn parse_cvector(s: &str) -> Result<CVector> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .or_else(|| t.strip_prefix('(').and_then(|x| x.strip_suffix(')')))
        .unwrap_or(t);
    let parts = inner.split(',').map(parse_complex).collect::<Result<Vec<_>>>()?;
    parts
        .try_into()
        .map_err(|v: Vec<_>| Error::Parse(format!("expected {RANK} coordinates, got {}", v.len())))
}

/// `sinh²(d/2)` between two normalized points.
fn sinh2_half(x: &BallPoint, y: &BallPoint) -> f64 {
    let (x, y) = (&x.exact, &y.exact);
    let c = herm_dd(y, x) / herm_dd(x, x).re;
    let perp: DdVector = std::array::from_fn(|k| y[k] - c * x[k]);
    let s: f64 = (herm_dd(&perp, &perp).re / -herm_dd(y, y).re).into();
    s.max(0.0)
}

pub fn dist(x: &BallPoint, y: &BallPoint) -> f64 {
    2.0 * sinh2_half(x, y).sqrt().asinh()
}

/// The value `cosh²(d/2)` of the distance convention, for cross-checks.
pub fn cosh2_half(x: &BallPoint, y: &BallPoint) -> f64 {
    let (x, y) = (&x.exact, &y.exact);
    (herm_dd(x, y).norm_sqr() / (herm_dd(x, x).re * herm_dd(y, y).re)).into()
}

/// A norm-1 lattice vector, defining the hyperplane `v^⊥`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperplaneNormal {
    vector: LatticeVector,
    exact: DdVector,
    complex: CVector,
}

impl HyperplaneNormal {
    pub fn new(v: LatticeVector) -> Result<Self> {
        let n = hermitian::herm_norm(&v)?;
        if n != 1 {
            return Err(Error::BadNorm(n));
        }
        let exact = lattice_to_dd(&v);
        Ok(Self {
            vector: v,
            exact,
            complex: exact.map(round),
        })
    }

    pub fn vector(&self) -> &LatticeVector {
        &self.vector
    }

    pub fn complex(&self) -> &CVector {
        &self.complex
    }
}

/// Distance from `x` to `v^⊥`: `sinh²(d/2) = −|h(x,v)|² / (h(x,x)h(v,v))`.
pub fn hyperplane_gap(x: &BallPoint, v: &HyperplaneNormal) -> f64 {
    let hxv = herm_dd(&x.exact, &v.exact);
    let s: f64 = (hxv.norm_sqr() / (-herm_dd(&x.exact, &x.exact).re * herm_dd(&v.exact, &v.exact).re)).into();
    2.0 * s.max(0.0).sqrt().asinh()
}

/// First normal of height at most `height_bound` whose hyperplane lies within
/// `tol` of `x`. `ℋ` is infinite, so a `None` only covers the scanned normals.
pub fn in_arrangement(x: &BallPoint, height_bound: i64, tol: f64) -> Option<HyperplaneNormal> {
    scan_normals(x, &hermitian::enumerate_vectors(1, height_bound), tol)
}

/// [`in_arrangement`] over a precomputed normal list.
pub fn scan_normals(x: &BallPoint, normals: &[LatticeVector], tol: f64) -> Option<HyperplaneNormal> {
    normals
        .iter()
        .filter_map(|v| HyperplaneNormal::new(*v).ok())
        .find(|n| hyperplane_gap(x, n) < tol)
}

pub fn apply(m: &Isometry, x: &BallPoint) -> Result<BallPoint> {
    let w = omega_dd();
    let z: DdVector = std::array::from_fn(|i| {
        let row = &m.entries()[i];
        (0..RANK).fold(Complex::new(dd(0.0), dd(0.0)), |acc, j| {
            let e = Complex::new(dd(row[j].a as f64), dd(0.0)) + w * dd(row[j].b as f64);
            acc + e * x.exact[j]
        })
    });
    BallPoint::from_dd(z)
}

/// Null point of `(F₃⁵, q)` attached to a primitive null lattice vector.
pub fn cusp_class(n: &LatticeVector) -> Result<F3Vector> {
    let h = hermitian::herm_norm(n)?;
    if h != 0 || n.is_zero() {
        return Err(Error::NotNull(h));
    }
    if !n.is_primitive_at_theta() {
        return Err(Error::Imprimitive);
    }
    n.reduce()
        .projective_canonical()
        .ok_or_else(|| Error::Internal("primitive vector reduced to zero".into()))
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::eisenstein::EisensteinInt as E;
    use crate::finite_orthogonal::null_points;
    use crate::hermitian::{enumerate_vectors, in_gamma0, reflection};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn gamma(k: usize) -> LatticeVector {
        LatticeVector::basis(k - 1)
    }

    /// Points with `Σ|z_k/z₁|² < 1/2`, i.e. within distance `2·asinh(1)` of
    /// the center.
    fn random_point(rng: &mut impl Rng) -> BallPoint {
        random_point_within(rng, 0.5)
    }

    fn random_point_within(rng: &mut impl Rng, bound: f64) -> BallPoint {
        loop {
            let mut z = [c(1.0, 0.0); RANK];
            for x in z.iter_mut().skip(1) {
                *x = c(rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5));
            }
            let s: f64 = z[1..].iter().map(|x| x.norm_sqr()).sum();
            if s < bound {
                let phase = Complex64::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..6.28));
                return BallPoint::new(z.map(|x| x * phase)).unwrap();
            }
        }
    }

    /// Triflections and order-2 reflections in the height-1 norm-1 vectors.
    fn generators() -> Vec<Isometry> {
        enumerate_vectors(1, 1)
            .iter()
            .flat_map(|v| [reflection(v, E::OMEGA).unwrap(), reflection(v, -E::ONE).unwrap()])
            .collect()
    }

    fn random_word(rng: &mut impl Rng, gens: &[Isometry]) -> Isometry {
        let len = rng.gen_range(1..=5);
        (0..len).fold(Isometry::identity(), |acc, _| {
            acc.checked_mul(&gens[rng.gen_range(0..gens.len())]).unwrap()
        })
    }

    #[test]
    fn make_point_examples() {
        let center = BallPoint::center();
        assert_eq!(center.coords()[0], c(1.0, 0.0));
        let scaled = BallPoint::from_reals([2.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        assert!(scaled.max_deviation(&center) < 1e-15);
        assert!(matches!(
            BallPoint::from_reals([1.0, 1.0, 0.0, 0.0, 0.0]),
            Err(Error::NotInBall(_))
        ));
        let p = BallPoint::new([c(0.0, 3.0), c(1.0, 1.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!((herm_c(p.coords(), p.coords()).re + 1.0).abs() <= 1e-12);
        assert!(p.coords()[0].im == 0.0 && p.coords()[0].re > 0.0);
    }

    #[test]
    fn dist_examples() {
        let center = BallPoint::center();
        assert_eq!(dist(&center, &center), 0.0);
        let p = BallPoint::from_reals([1.0, 0.6, 0.0, 0.0, 0.0]).unwrap();
        // cosh²(d/2) = 1/(1 − 0.36)
        let d = dist(&center, &p);
        assert!((cosh2_half(&center, &p) - 1.5625).abs() < 1e-12);
        assert!((d - 2.0 * 1.25f64.acosh()).abs() < 1e-12);
        assert!((d - 2.0 * 2f64.ln()).abs() < 1e-12);
        assert!((dist(&p, &center) - d).abs() < 1e-15);
    }

    #[test]
    fn dist_agrees_with_cosh_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let (x, y) = (random_point(&mut rng), random_point(&mut rng));
            let d = 2.0 * cosh2_half(&x, &y).max(1.0).sqrt().acosh();
            assert!((dist(&x, &y) - d).abs() < 1e-6 * (1.0 + d));
        }
    }

    #[test]
    fn gap_examples() {
        let center = BallPoint::center();
        let g2 = HyperplaneNormal::new(gamma(2)).unwrap();
        assert_eq!(hyperplane_gap(&center, &g2), 0.0);

        let p = BallPoint::from_reals([1.0, 0.6, 0.0, 0.0, 0.0]).unwrap();
        let gap = hyperplane_gap(&p, &g2);
        assert!((gap - 2.0 * 0.75f64.asinh()).abs() < 1e-12);
        // Oracle: the foot of the perpendicular from p to γ₂^⊥ is the center.
        assert!((gap - dist(&p, &center)).abs() < 1e-12);

        let r = reflection(&gamma(2), E::OMEGA).unwrap();
        let rp = apply(&r, &p).unwrap();
        assert!((hyperplane_gap(&rp, &g2) - gap).abs() < INVARIANCE_TOL);
        assert!(matches!(HyperplaneNormal::new(gamma(1)), Err(Error::BadNorm(-1))));
    }

    #[test]
    fn gap_is_distance_to_foot() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let normals = enumerate_vectors(1, 1);
        for _ in 0..100 {
            let x = random_point(&mut rng);
            let n = HyperplaneNormal::new(normals[rng.gen_range(0..normals.len())]).unwrap();
            let (xc, vc) = (x.coords(), n.complex());
            let t = herm_c(xc, vc) / herm_c(vc, vc);
            let foot = BallPoint::new(std::array::from_fn(|k| xc[k] - t * vc[k])).unwrap();
            assert!(herm_c(foot.coords(), vc).norm() < 1e-12);
            assert!((hyperplane_gap(&x, &n) - dist(&x, &foot)).abs() < 1e-9);
        }
    }

    #[test]
    fn arrangement_examples() {
        let center = BallPoint::center();
        let hit = in_arrangement(&center, 1, 1e-8).unwrap();
        assert!(hermitian::herm(hit.vector(), &gamma(1)).unwrap().is_zero());

        let p = BallPoint::new([c(1.0, 0.0), c(0.31, 0.0), c(0.17, 0.0), c(0.05, 0.0), c(0.0, 0.41)]).unwrap();
        // Oracle: the smallest gap over every height-1 normal.
        let normals = enumerate_vectors(1, 1);
        let min_gap = normals
            .iter()
            .map(|v| hyperplane_gap(&p, &HyperplaneNormal::new(*v).unwrap()))
            .fold(f64::INFINITY, f64::min);
        assert!(min_gap > 0.05);
        assert_eq!(in_arrangement(&p, 1, 1e-8), None);
        assert_eq!(in_arrangement(&p, 1, 1e-8), in_arrangement(&p, 1, 1e-8));

        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            assert_eq!(scan_normals(&random_point(&mut rng), &normals, 0.0), None);
        }
    }

    #[test]
    fn apply_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let x = random_point(&mut rng);
        assert!(apply(&Isometry::identity(), &x).unwrap().max_deviation(&x) < 1e-14);
        let center = BallPoint::center();
        let r = reflection(&gamma(2), E::OMEGA).unwrap();
        assert!(apply(&r, &center).unwrap().max_deviation(&center) < 1e-14);

        let gens = generators();
        for _ in 0..100 {
            let (m, n) = (random_word(&mut rng, &gens), random_word(&mut rng, &gens));
            let x = random_point(&mut rng);
            let y = apply(&m, &x).unwrap();
            let hy = herm_c(y.coords(), y.coords()).re;
            assert!(hy < 0.0);
            assert!((hy + 1.0).abs() <= 1e-12 * y.coords()[0].norm_sqr());
            let mn = apply(&m.checked_mul(&n).unwrap(), &x).unwrap();
            let m_n = apply(&m, &apply(&n, &x).unwrap()).unwrap();
            assert!(dist(&mn, &m_n) < 1e-12);
        }
    }

    #[test]
    fn invariance_under_reflection_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let gens = generators();
        let normals = enumerate_vectors(1, 1);
        for _ in 0..100 {
            let m = random_word(&mut rng, &gens);
            let (x, y) = (random_point(&mut rng), random_point(&mut rng));
            let (mx, my) = (apply(&m, &x).unwrap(), apply(&m, &y).unwrap());
            let err = (dist(&x, &y) - dist(&mx, &my)).abs();
            assert!(err < INVARIANCE_TOL);

            let v = normals[rng.gen_range(0..normals.len())];
            let mv = m.apply(&v).unwrap();
            let (n, mn) = (HyperplaneNormal::new(v).unwrap(), HyperplaneNormal::new(mv).unwrap());
            assert!((hyperplane_gap(&x, &n) - hyperplane_gap(&mx, &mn)).abs() < INVARIANCE_TOL);
        }
    }

    #[test]
    fn invariance_far_from_center() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let gens = generators();
        for _ in 0..100 {
            let m = (0..4).fold(Isometry::identity(), |acc, _| acc.checked_mul(&random_word(&mut rng, &gens)).unwrap());
            let (x, y) = (random_point_within(&mut rng, 0.99), random_point_within(&mut rng, 0.99));
            let (mx, my) = (apply(&m, &x).unwrap(), apply(&m, &y).unwrap());
            assert!((dist(&x, &y) - dist(&mx, &my)).abs() < INVARIANCE_TOL);
        }
    }

    #[test]
    fn triangle_inequality() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..1000 {
            let (x, y, z) = (random_point(&mut rng), random_point(&mut rng), random_point(&mut rng));
            assert!(dist(&x, &z) <= dist(&x, &y) + dist(&y, &z) + 1e-9);
        }
    }

    #[test]
    fn triflection_fixes_its_mirror() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let normals = enumerate_vectors(1, 1);
        let mut checked = 0;
        while checked < 100 {
            let v = normals[rng.gen_range(0..normals.len())];
            let n = HyperplaneNormal::new(v).unwrap();
            let x = random_point(&mut rng);
            let t = herm_c(x.coords(), n.complex());
            let Ok(foot) = BallPoint::new(std::array::from_fn(|k| x.coords()[k] - t * n.complex()[k])) else {
                continue;
            };
            let r = reflection(&v, E::OMEGA).unwrap();
            assert!(apply(&r, &foot).unwrap().max_deviation(&foot) < 1e-12);
            assert!(scan_normals(&foot, &[v], 1e-8).is_some());
            let rx = apply(&r, &x).unwrap();
            assert_eq!(scan_normals(&rx, &[v], 1e-8).is_some(), scan_normals(&x, &[v], 1e-8).is_some());
            checked += 1;
        }
    }

    #[test]
    fn text_round_trip() {
        assert_eq!(parse_complex("0.41i").unwrap(), c(0.0, 0.41));
        assert_eq!(parse_complex("1-2i").unwrap(), c(1.0, -2.0));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("1.5e-3+2e-1i").unwrap(), c(1.5e-3, 0.2));
        assert_eq!(parse_complex(" -0.5 ").unwrap(), c(-0.5, 0.0));
        assert!(parse_complex("1+").is_err());
        assert!(parse_cvector("[1,0,0]").is_err());
        let p: BallPoint = "[1,0.31,0.17,0.05,0.41i]".parse().unwrap();
        let q: BallPoint = p.to_string().parse().unwrap();
        assert!(p.max_deviation(&q) < 1e-11);
        assert_eq!(format_complex(c(1.0, -0.5), 3), "1.000-0.500i");
    }

    #[test]
    fn cusp_class_examples() {
        let n = LatticeVector::from_ints([1, 1, 0, 0, 0]);
        assert_eq!(cusp_class(&n).unwrap(), F3Vector::from_u8s([1, 1, 0, 0, 0]));
        let nw = LatticeVector([E::ONE, E::OMEGA, E::ZERO, E::ZERO, E::ZERO]);
        assert_eq!(cusp_class(&nw).unwrap(), F3Vector::from_u8s([1, 1, 0, 0, 0]));
        let t = LatticeVector([E::THETA, E::THETA, E::ZERO, E::ZERO, E::ZERO]);
        assert_eq!(cusp_class(&t), Err(Error::Imprimitive));
        assert_eq!(cusp_class(&gamma(2)), Err(Error::NotNull(1)));
        assert_eq!(cusp_class(&LatticeVector::ZERO), Err(Error::NotNull(0)));
    }

    #[test]
    fn cusps_surject_and_are_gamma0_invariant() {
        let nulls: Vec<LatticeVector> = enumerate_vectors(0, 2)
            .into_iter()
            .filter(LatticeVector::is_primitive_at_theta)
            .collect();
        let classes: BTreeSet<F3Vector> = nulls.iter().map(|n| cusp_class(n).unwrap()).collect();
        assert_eq!(classes, null_points().into_iter().collect());
        assert_eq!(classes.len(), 40);

        let triflections: Vec<Isometry> = enumerate_vectors(1, 1)
            .iter()
            .map(|v| reflection(v, E::OMEGA).unwrap())
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..100 {
            let k = random_word(&mut rng, &triflections);
            assert!(in_gamma0(&k));
            let n = nulls[rng.gen_range(0..nulls.len())];
            assert_eq!(cusp_class(&k.apply(&n).unwrap()).unwrap(), cusp_class(&n).unwrap());
        }
    }
}
