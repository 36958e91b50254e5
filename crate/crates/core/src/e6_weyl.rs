//! The marking lattice `L = Z^{1,6}` and the combinatorics of the 27 lines.
//!
//! `L` has basis `e₀, …, e₆` with `e₀·e₀ = 1`, `e_k·e_k = −1` and
//! `η = 3e₀ − (e₁ + … + e₆)`. Roots are the vectors with `r·r = −2`,
//! `r·η = 0`; line classes satisfy `e·e = −1`, `e·η = 1`. The Weyl group
//! `W(E₆)` is generated by the root reflections `x ↦ x + (x·r)r` and is
//! stored as permutations of the 27 lines.
//!
//! Reducing the root lattice `η^⊥` modulo 3 leaves a one-dimensional radical;
//! the 5-dimensional quotient is isometric to `(F₃⁵, q)` up to scaling the
//! form, which realizes `W(E₆) ≅ PO(F₃⁵, q)`.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::closure::{self, GroupElement};
use crate::eisenstein::F3Elem;
use crate::error::{Error, Result};
use crate::finite_orthogonal::{self, linalg, F3Matrix, F3Vector};

pub const WEYL_E6_ORDER: usize = 51_840;
pub const NUM_LINES: usize = 27;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MarkingVector(pub [i64; 7]);

impl MarkingVector {
    /// `e_k`, `k = 0..=6`.
    pub fn basis(k: usize) -> Self {
        let mut c = [0; 7];
        c[k] = 1;
        Self(c)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }

    pub fn scale(&self, c: i64) -> Self {
        Self(self.0.map(|x| c * x))
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }
}

/// `η = 3e₀ − (e₁ + … + e₆)`.
pub const ETA: MarkingVector = MarkingVector([3, -1, -1, -1, -1, -1, -1]);

/// `u₀v₀ − Σ_{k≥1} u_k v_k`.
pub fn dot(u: &MarkingVector, v: &MarkingVector) -> i64 {
    u.0[0] * v.0[0] - (1..7).map(|k| u.0[k] * v.0[k]).sum::<i64>()
}

fn box_search(pred: impl Fn(&MarkingVector) -> bool) -> Vec<MarkingVector> {
    let mut out = Vec::new();
    for n in 0..5i64.pow(7) {
        let mut r = n;
        let v = MarkingVector(std::array::from_fn(|_| {
            let c = r % 5 - 2;
            r /= 5;
            c
        }));
        if pred(&v) {
            out.push(v);
        }
    }
    out.sort();
    out
}

/// The 72 roots, by exhaustive search of `[−2, 2]⁷`.
///
/// The box suffices: `r·η = 0` gives `Σ a_k = −3a₀` and `r·r = −2` gives
/// `Σ a_k² = a₀² + 2`. Cauchy–Schwarz `(Σ a_k)² ≤ 6 Σ a_k²` yields
/// `9a₀² ≤ 6a₀² + 12`, so `|a₀| ≤ 2`, hence `Σ a_k² ≤ 6` and `|a_k| ≤ 2`.
pub fn roots() -> Vec<MarkingVector> {
    box_search(|v| dot(v, v) == -2 && dot(v, &ETA) == 0)
}

/// The 27 line classes, by exhaustive search of `[−2, 2]⁷`.
///
/// Here `Σ a_k = 1 − 3a₀` and `Σ a_k² = a₀² + 1`; Cauchy–Schwarz gives
/// `3a₀² − 6a₀ − 5 ≤ 0`, so `a₀ ∈ {0, 1, 2}`, `Σ a_k² ≤ 5` and `|a_k| ≤ 2`.
pub fn lines() -> Vec<MarkingVector> {
    box_search(is_line)
}

pub fn is_line(v: &MarkingVector) -> bool {
    dot(v, v) == -1 && dot(v, &ETA) == 1
}

/// Distinct lines meet iff their product is 1.
pub fn incidence(e: &MarkingVector, f: &MarkingVector) -> Result<bool> {
    for x in [e, f] {
        if !is_line(x) {
            return Err(Error::NotALine(format!("{:?}", x.0)));
        }
    }
    Ok(dot(e, f) == 1)
}

/// Parameters `(n, k, λ, μ)` if the graph is strongly regular.
pub fn strongly_regular_parameters(adj: &[Vec<bool>]) -> Option<(usize, usize, usize, usize)> {
    let n = adj.len();
    let deg: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&b| b).count()).collect();
    let k = *deg.first()?;
    if deg.iter().any(|&d| d != k) {
        return None;
    }
    let (mut lambda, mut mu) = (None, None);
    for i in 0..n {
        for j in i + 1..n {
            let common = (0..n).filter(|&x| adj[i][x] && adj[j][x]).count();
            let slot = if adj[i][j] { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => return None,
                _ => {}
            }
        }
    }
    Some((n, k, lambda.unwrap_or(0), mu.unwrap_or(0)))
}

/// The 27 lines with their intersection pattern.
#[derive(Debug, Clone)]
pub struct LineConfiguration {
    lines: Vec<MarkingVector>,
    index: HashMap<MarkingVector, usize>,
    meets: Vec<Vec<bool>>,
}

impl Default for LineConfiguration {
    fn default() -> Self {
        Self::new()
    }
}

impl LineConfiguration {
    pub fn new() -> Self {
        let lines = lines();
        let index = lines.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        let meets = lines
            .iter()
            .map(|a| lines.iter().map(|b| a != b && dot(a, b) == 1).collect())
            .collect();
        Self { lines, index, meets }
    }

    pub fn lines(&self) -> &[MarkingVector] {
        &self.lines
    }

    pub fn index_of(&self, v: &MarkingVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn meets(&self, i: usize, j: usize) -> bool {
        self.meets[i][j]
    }

    /// Intersection graph (lines meeting).
    pub fn incidence_matrix(&self) -> &[Vec<bool>] {
        &self.meets
    }

    /// Complement: skew lines. This is the Schläfli graph.
    pub fn skew_matrix(&self) -> Vec<Vec<bool>> {
        (0..NUM_LINES)
            .map(|i| (0..NUM_LINES).map(|j| i != j && !self.meets[i][j]).collect())
            .collect()
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        self.meets
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| j).collect())
            .collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.meets.iter().map(|r| r.iter().filter(|&&b| b).count()).collect()
    }

    /// The 45 triples of pairwise meeting lines summing to `η`.
    pub fn tritangents(&self) -> Vec<[usize; 3]> {
        let n = NUM_LINES;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.meets[i][j] {
                    continue;
                }
                for k in j + 1..n {
                    if self.meets[i][k]
                        && self.meets[j][k]
                        && self.lines[i].add(&self.lines[j]).add(&self.lines[k]) == ETA
                    {
                        out.push([i, j, k]);
                    }
                }
            }
        }
        out
    }

    /// All 72 sets of six pairwise skew lines, index-sorted.
    pub fn sixers(&self) -> Vec<[usize; 6]> {
        fn extend(cfg: &LineConfiguration, cur: &mut Vec<usize>, out: &mut Vec<[usize; 6]>) {
            if cur.len() == 6 {
                out.push(cur.as_slice().try_into().expect("six"));
                return;
            }
            let start = cur.last().map_or(0, |&l| l + 1);
            for c in start..NUM_LINES {
                if cur.iter().all(|&x| !cfg.meets[x][c]) {
                    cur.push(c);
                    extend(cfg, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        extend(self, &mut Vec::new(), &mut out);
        out
    }

    /// Double-sixes as ordered pairs `(a, b)` with `a_i` skew to `b_i` and
    /// meeting `b_j` for `j ≠ i`; each unordered pair appears once, `a < b`.
    pub fn double_sixes(&self) -> Vec<([usize; 6], [usize; 6])> {
        let mut out = Vec::new();
        for a in self.sixers() {
            let partner: Option<Vec<usize>> = (0..6)
                .map(|i| {
                    let cands: Vec<usize> = (0..NUM_LINES)
                        .filter(|l| !a.contains(l))
                        .filter(|&l| !self.meets[a[i]][l])
                        .filter(|&l| (0..6).all(|j| j == i || self.meets[a[j]][l]))
                        .collect();
                    (cands.len() == 1).then(|| cands[0])
                })
                .collect();
            let Some(b) = partner else { continue };
            let b: [usize; 6] = b.try_into().expect("six");
            let pairwise_skew = (0..6).all(|i| (i + 1..6).all(|j| !self.meets[b[i]][b[j]]));
            let mut b_sorted = b;
            b_sorted.sort();
            if pairwise_skew && a < b_sorted {
                out.push((a, b));
            }
        }
        out
    }
}

/// `x ↦ x + (x·r)r`, valid since `r·r = −2`.
pub fn reflect(x: &MarkingVector, r: &MarkingVector) -> MarkingVector {
    x.add(&r.scale(dot(x, r)))
}

/// An element of `W(E₆)` as a permutation of the configuration's line indices:
/// line `i` is sent to line `perm[i]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylElement {
    pub perm: [u8; NUM_LINES],
}

impl WeylElement {
    pub fn identity() -> Self {
        Self {
            perm: std::array::from_fn(|i| i as u8),
        }
    }

    pub fn image(&self, line: usize) -> usize {
        self.perm[line] as usize
    }

    pub fn inverse(&self) -> Self {
        let mut perm = [0u8; NUM_LINES];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p as usize] = i as u8;
        }
        Self { perm }
    }

    /// Permutation induced by a linear map on `L`; fails if some line is not
    /// sent to a line.
    pub fn from_linear(cfg: &LineConfiguration, f: impl Fn(&MarkingVector) -> MarkingVector) -> Result<Self> {
        let mut perm = [0u8; NUM_LINES];
        for (i, l) in cfg.lines().iter().enumerate() {
            let img = f(l);
            perm[i] = cfg
                .index_of(&img)
                .ok_or_else(|| Error::NotALine(format!("{:?}", img.0)))? as u8;
        }
        Ok(Self { perm })
    }

    /// The 7×7 integer matrix (columns are images of `e₀, …, e₆`).
    ///
    /// The lines span `L`: `e_k` is a line for `k ≥ 1` and
    /// `e₀ = (e₀ − e₁ − e₂) + e₁ + e₂`.
    pub fn matrix(&self, cfg: &LineConfiguration) -> [[i64; 7]; 7] {
        let img = |v: &MarkingVector| cfg.lines()[self.image(cfg.index_of(v).expect("line"))];
        let mut cols = [MarkingVector([0; 7]); 7];
        for (k, col) in cols.iter_mut().enumerate().skip(1) {
            *col = img(&MarkingVector::basis(k));
        }
        let c12 = MarkingVector::basis(0)
            .sub(&MarkingVector::basis(1))
            .sub(&MarkingVector::basis(2));
        cols[0] = img(&c12).add(&cols[1]).add(&cols[2]);
        std::array::from_fn(|i| std::array::from_fn(|j| cols[j].0[i]))
    }

    pub fn apply_matrix(m: &[[i64; 7]; 7], x: &MarkingVector) -> MarkingVector {
        MarkingVector(std::array::from_fn(|i| (0..7).map(|j| m[i][j] * x.0[j]).sum()))
    }
}

impl GroupElement for WeylElement {
    type Key = [u8; NUM_LINES];

    fn key(&self) -> Self::Key {
        self.perm
    }

    fn compose(&self, rhs: &Self) -> Self {
        Self {
            perm: std::array::from_fn(|i| self.perm[rhs.perm[i] as usize]),
        }
    }
}

/// One reflection per pair `±r` (36 in total).
pub fn root_reflections(cfg: &LineConfiguration) -> Result<Vec<WeylElement>> {
    roots()
        .into_iter()
        .filter(|r| *r > r.neg())
        .map(|r| WeylElement::from_linear(cfg, |x| reflect(x, &r)))
        .collect()
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    config: LineConfiguration,
    elements: Vec<WeylElement>,
}

impl WeylGroup {
    pub fn enumerate(cap: usize) -> Result<Self> {
        let config = LineConfiguration::new();
        let gens = root_reflections(&config)?;
        let elements = closure::closure(WeylElement::identity(), &gens, cap)?;
        Ok(Self { config, elements })
    }

    /// Rebuild from stored permutations; each must be a genuine permutation
    /// preserving incidence and fixing `η`, and the identity must be present.
    pub fn from_permutations(perms: &[[u8; NUM_LINES]]) -> Result<Self> {
        let config = LineConfiguration::new();
        let mut elements: Vec<WeylElement> = perms.iter().map(|&perm| WeylElement { perm }).collect();
        elements.sort();
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse("duplicate Weyl element".into()));
        }
        if elements.binary_search(&WeylElement::identity()).is_err() {
            return Err(Error::Parse("identity missing".into()));
        }
        for g in &elements {
            let mut seen = [false; NUM_LINES];
            for &p in &g.perm {
                if p as usize >= NUM_LINES || std::mem::replace(&mut seen[p as usize], true) {
                    return Err(Error::Parse("not a permutation of the lines".into()));
                }
            }
            let preserves = (0..NUM_LINES)
                .all(|i| (0..NUM_LINES).all(|j| config.meets(i, j) == config.meets(g.image(i), g.image(j))));
            if !preserves || WeylElement::apply_matrix(&g.matrix(&config), &ETA) != ETA {
                return Err(Error::Parse("permutation is not induced by W(E6)".into()));
            }
        }
        Ok(Self { config, elements })
    }

    pub fn config(&self) -> &LineConfiguration {
        &self.config
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> Result<Vec<WeylElement>> {
        root_reflections(&self.config)
    }

    /// Orbit of one line under the group.
    pub fn line_orbit(&self, line: usize) -> Vec<usize> {
        let mut seen: Vec<usize> = self.elements.iter().map(|g| g.image(line)).collect::<HashSet<_>>().into_iter().collect();
        seen.sort();
        seen
    }
}

/// The simple roots `e₁−e₂, e₂−e₃, e₃−e₄, e₄−e₅, e₅−e₆, e₀−e₁−e₂−e₃`.
pub fn simple_roots() -> [MarkingVector; 6] {
    let e = MarkingVector::basis;
    [
        e(1).sub(&e(2)),
        e(2).sub(&e(3)),
        e(3).sub(&e(4)),
        e(4).sub(&e(5)),
        e(5).sub(&e(6)),
        e(0).sub(&e(1)).sub(&e(2)).sub(&e(3)),
    ]
}

/// Integer coordinates of `x ∈ η^⊥` in the simple-root basis.
///
/// The `e₀`-coefficient comes only from the last simple root; the remainder
/// lies in the span of `e_i − e_{i+1}`, whose coordinates are partial sums.
pub fn simple_root_coordinates(x: &MarkingVector) -> Result<[i64; 6]> {
    if dot(x, &ETA) != 0 {
        return Err(Error::Internal("vector is not orthogonal to eta".into()));
    }
    let alpha = simple_roots();
    let c6 = x.0[0];
    let y = x.sub(&alpha[5].scale(c6));
    let mut c = [0i64; 6];
    let mut partial = 0;
    for i in 0..5 {
        partial += y.0[i + 1];
        c[i] = partial;
    }
    c[5] = c6;
    let back = (0..6).fold(MarkingVector([0; 7]), |acc, i| acc.add(&alpha[i].scale(c[i])));
    if back != *x {
        return Err(Error::Internal("simple-root coordinates do not reconstruct the vector".into()));
    }
    Ok(c)
}

/// Gram matrix `(α_i·α_j)` of the simple roots.
pub fn simple_root_gram() -> [[i64; 6]; 6] {
    let a = simple_roots();
    std::array::from_fn(|i| std::array::from_fn(|j| dot(&a[i], &a[j])))
}

/// Which multiple of `q` the reduced quotient form matches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormScale {
    Q,
    TwoQ,
}

/// The reduction `W(E₆) → O(F₃⁵, q)` through `η^⊥ / 3η^⊥` modulo its radical.
#[derive(Debug, Clone)]
pub struct Mod3Map {
    /// Spanning vector of the radical, in simple-root coordinates.
    pub radical: [F3Elem; 6],
    pub radical_dimension: usize,
    /// `u₁, …, u₅` whose reduced Gram matrix is that of `q` or `2q`.
    pub quotient_basis: [[F3Elem; 6]; 5],
    pub scale: FormScale,
    /// Image of each Weyl element, aligned with `WeylGroup::elements()`.
    pub images: Vec<F3Matrix>,
    /// Distinct images modulo `±I`.
    pub projective_image_order: usize,
    /// Elements mapping to `±I`.
    pub kernel_size: usize,
}

impl Mod3Map {
    pub fn is_isomorphism_onto(&self, projective_orthogonal_order: usize) -> bool {
        self.kernel_size == 1 && self.projective_image_order == projective_orthogonal_order
    }
}

struct QuotientFrame {
    basis: [[F3Elem; 6]; 5],
    /// Inverse of the change of basis `[u₁ … u₅ | r]`.
    inverse: linalg::Mat,
}

impl QuotientFrame {
    fn push(&self, config: &LineConfiguration, g: &WeylElement) -> Result<F3Matrix> {
        let m = g.matrix(config);
        let alpha = simple_roots();
        // Action on F₃⁶ in simple-root coordinates, by columns.
        let mut action = vec![vec![F3Elem::ZERO; 6]; 6];
        for (j, a) in alpha.iter().enumerate() {
            let c = simple_root_coordinates(&WeylElement::apply_matrix(&m, a))?;
            for i in 0..6 {
                action[i][j] = F3Elem::from_i64(c[i]);
            }
        }
        let mut out = [[F3Elem::ZERO; 5]; 5];
        for j in 0..5 {
            let w = linalg::mul_vec(&action, &self.basis[j]);
            let coords = linalg::mul_vec(&self.inverse, &w);
            for i in 0..5 {
                out[i][j] = coords[i];
            }
        }
        Ok(F3Matrix(out))
    }
}

fn reduced_gram() -> linalg::Mat {
    simple_root_gram()
        .iter()
        .map(|r| r.iter().map(|&x| F3Elem::from_i64(x)).collect())
        .collect()
}

fn form6(g: &linalg::Mat, x: &[F3Elem], y: &[F3Elem]) -> F3Elem {
    let gy = linalg::mul_vec(g, y);
    x.iter().zip(&gy).fold(F3Elem::ZERO, |acc, (&a, &b)| acc + a * b)
}

fn nonzero_f3_6() -> Vec<Vec<F3Elem>> {
    (1..729u32)
        .map(|mut n| {
            (0..6)
                .map(|_| {
                    let d = F3Elem::new((n % 3) as u8);
                    n /= 3;
                    d
                })
                .collect()
        })
        .collect()
}

/// Product of the diagonal of a greedily chosen orthogonal frame of the
/// nondegenerate quotient.
fn quotient_discriminant(g: &linalg::Mat) -> Option<F3Elem> {
    let vectors = nonzero_f3_6();
    let mut chosen: Vec<&Vec<F3Elem>> = Vec::new();
    let mut disc = F3Elem::ONE;
    for _ in 0..5 {
        let v = vectors
            .iter()
            .find(|v| !form6(g, v, v).is_zero() && chosen.iter().all(|u| form6(g, u, v).is_zero()))?;
        disc = disc * form6(g, v, v);
        chosen.push(v);
    }
    Some(disc)
}

/// Backtracking search for `u₁, …, u₅` with `B(u_i, u_j) = target_ii·δ_ij`.
fn find_orthogonal_frame(g: &linalg::Mat, target: [F3Elem; 5]) -> Option<[[F3Elem; 6]; 5]> {
    let vectors = nonzero_f3_6();

    fn search(
        g: &linalg::Mat,
        target: &[F3Elem; 5],
        vectors: &[Vec<F3Elem>],
        chosen: &mut Vec<Vec<F3Elem>>,
    ) -> bool {
        let k = chosen.len();
        if k == 5 {
            return true;
        }
        for v in vectors {
            if form6(g, v, v) == target[k] && chosen.iter().all(|u| form6(g, u, v).is_zero()) {
                chosen.push(v.clone());
                if search(g, target, vectors, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    let mut chosen = Vec::new();
    search(g, &target, &vectors, &mut chosen).then(|| {
        std::array::from_fn(|i| std::array::from_fn(|j| chosen[i][j]))
    })
}

fn quotient_frame() -> Result<(QuotientFrame, [F3Elem; 6], usize, FormScale)> {
    let g = reduced_gram();
    let radical = linalg::nullspace(&g);
    let radical_dimension = radical.len();
    let r: [F3Elem; 6] = radical
        .first()
        .and_then(|r| r.as_slice().try_into().ok())
        .ok_or_else(|| Error::Internal("reduced E6 Gram matrix is nondegenerate".into()))?;
    if radical_dimension != 1 {
        return Err(Error::IsometryNotFound);
    }

    // q and 2q have different discriminants in dimension 5, and a frame with
    // prescribed values exists iff the discriminant agrees.
    let disc = quotient_discriminant(&g).ok_or(Error::IsometryNotFound)?;
    let q_diag = finite_orthogonal::Q_DIAG.map(F3Elem::new);
    let q_disc = q_diag.iter().fold(F3Elem::ONE, |acc, &x| acc * x);
    let (target, scale) = if disc == q_disc {
        (q_diag, FormScale::Q)
    } else {
        (q_diag.map(|x| x * F3Elem::TWO), FormScale::TwoQ)
    };
    let basis = find_orthogonal_frame(&g, target).ok_or(Error::IsometryNotFound)?;

    let change: linalg::Mat = (0..6)
        .map(|i| (0..6).map(|j| if j < 5 { basis[j][i] } else { r[i] }).collect())
        .collect();
    let inverse = linalg::inverse(&change).ok_or(Error::IsometryNotFound)?;
    Ok((QuotientFrame { basis, inverse }, r, radical_dimension, scale))
}

/// Builds the reduction map and pushes every Weyl element through it.
pub fn mod3_map(group: &WeylGroup) -> Result<Mod3Map> {
    let (frame, radical, radical_dimension, scale) = quotient_frame()?;
    let images = group
        .elements()
        .iter()
        .map(|g| frame.push(group.config(), g))
        .collect::<Result<Vec<_>>>()?;
    if let Some(bad) = images.iter().find(|m| !m.preserves_q()) {
        return Err(Error::Internal(format!("image does not preserve q:\n{bad}")));
    }
    let projective: HashSet<u64> = images.iter().map(F3Matrix::projective_key).collect();
    let kernel_size = images.iter().filter(|m| m.as_scalar().is_some()).count();
    Ok(Mod3Map {
        radical,
        radical_dimension,
        quotient_basis: frame.basis,
        scale,
        images,
        projective_image_order: projective.len(),
        kernel_size,
    })
}

/// Image of a single element; for spot checks without enumerating the group.
pub fn mod3_image(config: &LineConfiguration, g: &WeylElement) -> Result<F3Matrix> {
    let (frame, ..) = quotient_frame()?;
    frame.push(config, g)
}

/// Image of a reduced vector of `η^⊥` (simple-root coordinates) in `F₃⁵`.
pub fn quotient_coordinates(x: &MarkingVector) -> Result<F3Vector> {
    let (frame, ..) = quotient_frame()?;
    let c = simple_root_coordinates(x)?.map(F3Elem::from_i64);
    let coords = linalg::mul_vec(&frame.inverse, &c);
    Ok(F3Vector(std::array::from_fn(|i| coords[i])))
}
