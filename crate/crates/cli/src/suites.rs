//! Invariant suites behind `cubix verify`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::time::Instant;

use cubix_core::ball::{self, BallPoint, HyperplaneNormal};
use cubix_core::closure;
use cubix_core::e6_weyl::{self, LineConfiguration};
use cubix_core::finite_orthogonal::{self, F3Matrix, OrthogonalGroup};
use cubix_core::hermitian::{self, enumerate_vectors, in_gamma0, reduce_isometry, reflection, Isometry};
use cubix_core::milnor::{self, ExponentVector};
use cubix_core::{EisensteinInt as E, F3Elem, F3Vector, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cache::Cache;
use crate::report::Check;
use crate::sampling;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum SuiteName {
    All,
    Lattice,
    Finite,
    Weyl,
    Ball,
    Milnor,
}

impl SuiteName {
    pub fn members() -> [SuiteName; 5] {
        [Self::Lattice, Self::Finite, Self::Weyl, Self::Ball, Self::Milnor]
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::All => "all",
            Self::Lattice => "lattice",
            Self::Finite => "finite",
            Self::Weyl => "weyl",
            Self::Ball => "ball",
            Self::Milnor => "milnor",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Options {
    pub height: i64,
    pub tol: f64,
    pub cap: usize,
    pub seed: u64,
    pub cache: Cache,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            height: 2,
            tol: ball::DEFAULT_MEMBERSHIP_TOL,
            cap: closure::DEFAULT_CAP,
            seed: 0x5eed,
            cache: Cache::default(),
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SuiteOutcome {
    pub checks: Vec<Check>,
    pub counts: BTreeMap<String, u64>,
    /// Suite-specific findings that are not pass/fail.
    pub findings: serde_json::Map<String, Value>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    fn count(&mut self, k: &str, v: usize) {
        self.counts.insert(k.to_string(), v as u64);
    }

    fn timed<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let t = Instant::now();
        let out = f();
        self.findings
            .insert(format!("{name}_seconds"), json!(t.elapsed().as_secs_f64()));
        out
    }

    fn merge(&mut self, prefix: &str, other: SuiteOutcome) {
        for mut c in other.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
        self.counts.extend(other.counts);
        if !other.findings.is_empty() {
            self.findings.insert(prefix.to_string(), Value::Object(other.findings));
        }
    }
}

pub fn run(name: SuiteName, opts: &Options) -> Result<SuiteOutcome> {
    match name {
        SuiteName::All => {
            let mut all = SuiteOutcome::default();
            for s in SuiteName::members() {
                all.merge(s.as_str(), run(s, opts)?);
            }
            Ok(all)
        }
        SuiteName::Lattice => lattice(opts),
        SuiteName::Finite => finite(opts),
        SuiteName::Weyl => weyl(opts),
        SuiteName::Ball => ball_suite(opts),
        SuiteName::Milnor => Ok(milnor_suite()),
    }
}

/// Self-duality, signature, and the reflections of the height-bounded
/// norm-1 and norm-2 vectors.
pub fn lattice(opts: &Options) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    out.push(Check::eq("signature", hermitian::signature(), (4, 1)));
    out.push(Check::eq("self_dual", hermitian::verify_self_dual(), true));

    let norm1 = enumerate_vectors(1, opts.height);
    let norm2 = enumerate_vectors(2, opts.height);
    out.count("norm1_vectors", norm1.len());
    out.count("norm2_vectors", norm2.len());

    let omega_sq = E::OMEGA_SQ;
    let mut bad = Vec::new();
    let mut triflections = Vec::new();
    for v in &norm1 {
        for zeta in [E::OMEGA, omega_sq] {
            let r = reflection(v, zeta)?;
            let inverse_integral = r.inverse().and_then(|i| i.checked_mul(&r)).map(|p| p == Isometry::identity());
            if r.order(6)? != Some(3) || !in_gamma0(&r) || inverse_integral != Ok(true) {
                bad.push(format!("{v} zeta={zeta}"));
            }
            triflections.push(r);
        }
    }
    out.count("triflections", triflections.len());
    out.push(Check::new(
        "triflections",
        bad.is_empty() && !norm1.is_empty(),
        if bad.is_empty() {
            format!("{} triflections: isometries of order 3 in Gamma0", triflections.len())
        } else {
            format!("failing: {}", bad.join("; "))
        },
    ));

    let mut bad = Vec::new();
    let mut involutions = 0usize;
    for v in norm1.iter().chain(&norm2) {
        let r = reflection(v, -E::ONE)?;
        if r.order(2)? != Some(2) || in_gamma0(&r) {
            bad.push(v.to_string());
        }
        involutions += 1;
    }
    out.count("order2_reflections", involutions);
    out.push(Check::new(
        "order2_not_in_gamma0",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{involutions} order-2 reflections, none in Gamma0")
        } else {
            format!("failing: {}", bad.join("; "))
        },
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let all_refl: Vec<Isometry> = norm1
        .iter()
        .chain(&norm2)
        .map(|v| reflection(v, -E::ONE))
        .chain(triflections.iter().cloned().map(Ok))
        .collect::<Result<_>>()?;
    let mut stable = 0;
    for _ in 0..100 {
        let k = sampling::random_word(&mut rng, &triflections, 3);
        let g = sampling::random_word(&mut rng, &all_refl, 3);
        let conj = g.checked_mul(&k)?.checked_mul(&g.inverse()?)?;
        if in_gamma0(&conj) {
            stable += 1;
        }
    }
    out.push(Check::eq("gamma0_conjugation_stable", stable, 100));
    Ok(out)
}

/// Distinct mod-θ images of the order-2 reflections in norm-1 and norm-2
/// vectors of the given height.
pub fn reflection_images(height: i64) -> Result<Vec<F3Matrix>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for v in enumerate_vectors(1, height).iter().chain(&enumerate_vectors(2, height)) {
        let m = reduce_isometry(&reflection(v, -E::ONE)?)?;
        if seen.insert(m.packed_key()) {
            out.push(m);
        }
    }
    out.sort_by_key(F3Matrix::packed_key);
    Ok(out)
}

/// Projective `q`-value shared by the reductions of the height-bounded
/// norm-1 normals, if they all agree.
pub fn normal_reduction_class(height: i64) -> Option<F3Elem> {
    let values: BTreeSet<u8> = enumerate_vectors(1, height)
        .iter()
        .map(|v| finite_orthogonal::q_value(&v.reduce()).value())
        .collect();
    (values.len() == 1).then(|| F3Elem::new(*values.first().expect("nonempty")))
}

pub fn finite(opts: &Options) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    let nulls = out.timed("null_points", finite_orthogonal::null_points);
    out.count("null_points", nulls.len());
    out.push(Check::eq("null_points", nulls.len(), 40));

    let points = finite_orthogonal::projective_points();
    out.count("projective_points", points.len());
    let split = finite_orthogonal::nonisotropic_split();
    out.count("nonisotropic_points", split.q1 + split.q2);
    out.count("split_q1", split.q1);
    out.count("split_q2", split.q2);
    let mut sizes = [split.q1, split.q2];
    sizes.sort();
    out.push(Check::eq("nonisotropic_points", split.q1 + split.q2, 81));
    out.push(Check::eq("nonisotropic_split", sizes, [36, 45]));

    let class = normal_reduction_class(opts.height);
    let class_size = match class.map(|c| c.value()) {
        Some(1) => Some(split.q1),
        Some(2) => Some(split.q2),
        _ => None,
    };
    out.findings.insert(
        "normal_reduction_class".into(),
        json!({
            "height": opts.height,
            "q": class.map(|c| c.value()),
            "class_size": class_size,
        }),
    );
    out.push(Check::new(
        "normal_reduction_class",
        class_size.is_some(),
        match (class, class_size) {
            (Some(c), Some(n)) => format!("norm-1 normals reduce into the q={c} class of size {n}"),
            _ => "norm-1 normals reduce to more than one class".into(),
        },
    ));

    let group = out.timed("orthogonal_group", || opts.cache.orthogonal_group(opts.cap))?;
    out.count("orthogonal_order", group.order());
    out.count("po_order", group.projective_order());
    out.push(Check::eq("orthogonal_order", group.order(), finite_orthogonal::ORTHOGONAL_ORDER));
    out.push(Check::eq("projective_order", group.projective_order(), 51_840));
    out.push(Check::eq("transitive_on_null_points", null_orbit_size(&group, &nulls), nulls.len()));

    let images = reflection_images(opts.height)?;
    out.count("reflection_images", images.len());
    let generated = out.timed("surjectivity", || OrthogonalGroup::generated_by(&images, opts.cap))?;
    out.count("generated_order", generated.order());
    out.push(Check::eq(
        "reflection_images_generate",
        generated.order(),
        finite_orthogonal::ORTHOGONAL_ORDER,
    ));
    Ok(out)
}

fn null_orbit_size(group: &OrthogonalGroup, nulls: &[F3Vector]) -> usize {
    let Some(start) = nulls.first() else { return 0 };
    group
        .elements()
        .iter()
        .filter_map(|g| g.apply(start).projective_canonical())
        .collect::<BTreeSet<_>>()
        .len()
}

pub fn weyl(opts: &Options) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    let cfg = out.timed("configuration", LineConfiguration::new);

    let roots = e6_weyl::roots();
    let tritangents = cfg.tritangents();
    let double_sixes = cfg.double_sixes();
    let sixers = cfg.sixers();
    for (k, n, want) in [
        ("roots", roots.len(), 72),
        ("lines", cfg.lines().len(), 27),
        ("tritangents", tritangents.len(), 45),
        ("double_sixes", double_sixes.len(), 36),
        ("sixers", sixers.len(), 72),
    ] {
        out.count(k, n);
        out.push(Check::eq(k, n, want));
    }
    out.push(Check::eq("degree_10", cfg.degrees().iter().all(|&d| d == 10), true));
    out.push(Check::eq(
        "schlafli_srg",
        e6_weyl::strongly_regular_parameters(&cfg.skew_matrix()),
        Some((27, 16, 10, 8)),
    ));
    out.push(Check::eq(
        "incidence_srg",
        e6_weyl::strongly_regular_parameters(cfg.incidence_matrix()),
        Some((27, 10, 1, 5)),
    ));

    let w = out.timed("weyl_group", || opts.cache.weyl_group(opts.cap))?;
    out.count("weyl_order", w.order());
    out.push(Check::eq("weyl_order", w.order(), e6_weyl::WEYL_E6_ORDER));
    out.push(Check::eq("transitive_on_lines", w.line_orbit(0).len(), 27));

    let o = out.timed("orthogonal_group", || opts.cache.orthogonal_group(opts.cap))?;
    out.count("po_order", o.projective_order());
    out.push(Check::eq("weyl_equals_po", w.order(), o.projective_order()));

    let map = out.timed("mod3_map", || e6_weyl::mod3_map(&w))?;
    out.count("mod3_kernel", map.kernel_size);
    out.count("mod3_image", map.projective_image_order);
    out.findings.insert("mod3_form_scale".into(), json!(map.scale));
    out.push(Check::eq("mod3_radical_dimension", map.radical_dimension, 1));
    out.push(Check::eq("mod3_kernel_trivial", map.kernel_size, 1));
    out.push(Check::eq("mod3_image_full", map.projective_image_order, o.projective_order()));
    out.push(Check::eq(
        "mod3_images_in_orthogonal_group",
        map.images.iter().all(|m| o.contains(m)),
        true,
    ));
    Ok(out)
}

pub fn ball_suite(opts: &Options) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    let center = BallPoint::center();
    let p = BallPoint::from_reals([1.0, 0.6, 0.0, 0.0, 0.0])?;
    let d = ball::dist(&center, &p);
    out.push(Check::new(
        "dist_two_ln_two",
        (d - 2.0 * 2f64.ln()).abs() < ball::INVARIANCE_TOL,
        format!("{d:.12}"),
    ));
    let g2 = HyperplaneNormal::new(hermitian::LatticeVector::basis(1))?;
    let gap = ball::hyperplane_gap(&p, &g2);
    out.push(Check::new(
        "gap_two_asinh",
        (gap - 2.0 * 0.75f64.asinh()).abs() < ball::INVARIANCE_TOL,
        format!("{gap:.12}"),
    ));
    out.push(Check::eq(
        "center_in_arrangement",
        ball::in_arrangement(&center, 1, opts.tol).is_some(),
        true,
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let gens = sampling::reflection_generators();
    let normals = enumerate_vectors(1, 1);
    let (mut worst_dist, mut worst_gap) = (0.0f64, 0.0f64);
    out.timed("invariance", || -> Result<()> {
        for _ in 0..100 {
            let m = sampling::random_word(&mut rng, &gens, 5);
            let (x, y) = (sampling::random_point(&mut rng), sampling::random_point(&mut rng));
            let (mx, my) = (ball::apply(&m, &x)?, ball::apply(&m, &y)?);
            worst_dist = worst_dist.max((ball::dist(&x, &y) - ball::dist(&mx, &my)).abs());
            let v = normals[rng.gen_range(0..normals.len())];
            let (n, mn) = (HyperplaneNormal::new(v)?, HyperplaneNormal::new(m.apply(&v)?)?);
            worst_gap = worst_gap.max((ball::hyperplane_gap(&x, &n) - ball::hyperplane_gap(&mx, &mn)).abs());
        }
        Ok(())
    })?;
    out.push(Check::new(
        "dist_invariance",
        worst_dist < ball::INVARIANCE_TOL,
        format!("max deviation {worst_dist:.3e} over 100 words"),
    ));
    out.push(Check::new(
        "gap_invariance",
        worst_gap < ball::INVARIANCE_TOL,
        format!("max deviation {worst_gap:.3e} over 100 words"),
    ));

    let mut worst_slack = f64::NEG_INFINITY;
    for _ in 0..1000 {
        let (x, y, z) = (
            sampling::random_point(&mut rng),
            sampling::random_point(&mut rng),
            sampling::random_point(&mut rng),
        );
        worst_slack = worst_slack.max(ball::dist(&x, &z) - ball::dist(&x, &y) - ball::dist(&y, &z));
    }
    out.push(Check::new(
        "triangle_inequality",
        worst_slack <= 1e-9,
        format!("max d(x,z) - d(x,y) - d(y,z) = {worst_slack:.3e} over 1000 triples"),
    ));

    let classes = out.timed("cusps", || cusp_classes(opts.height))?;
    out.count("cusps", classes.len());
    let nulls = finite_orthogonal::null_points();
    let hit = nulls.iter().filter(|p| classes.contains_key(p)).count();
    out.push(Check::new(
        "cusp_surjection",
        hit == nulls.len() && classes.len() == nulls.len(),
        format!("{hit} of {} null points realized at height {}", nulls.len(), opts.height),
    ));
    Ok(out)
}

/// Each null point hit by a primitive null vector of the given height, with
/// its first (least) lift.
pub fn cusp_classes(height: i64) -> Result<BTreeMap<F3Vector, hermitian::LatticeVector>> {
    let mut out = BTreeMap::new();
    for n in enumerate_vectors(0, height) {
        if n.is_primitive_at_theta() {
            out.entry(ball::cusp_class(&n)?).or_insert(n);
        }
    }
    Ok(out)
}

pub fn milnor_suite() -> SuiteOutcome {
    let mut out = SuiteOutcome::default();
    let ev = |v: &[i64]| ExponentVector::new(v.to_vec()).expect("valid exponents");
    let angles = |e: &ExponentVector| {
        milnor::monodromy_eigenvalues(e)
            .iter()
            .map(|z| z.to_string())
            .collect::<Vec<_>>()
    };

    let a2 = ev(&[2, 2, 2, 3]);
    out.push(Check::eq("milnor_2223", milnor::milnor_number(&a2), 2));
    out.push(Check::eq("eigenvalues_2223", angles(&a2), vec!["1/6".to_string(), "5/6".into()]));
    out.push(Check::eq(
        "all_order_six_2223",
        milnor::monodromy_eigenvalues(&a2).iter().all(|z| z.order() == 6),
        true,
    ));
    out.push(Check::eq("order_2223", milnor::monodromy_order(&a2), 6));

    let node = ev(&[2, 2, 2]);
    out.push(Check::eq("milnor_222", milnor::milnor_number(&node), 1));
    out.push(Check::eq("eigenvalues_222", angles(&node), vec!["1/2".to_string()]));
    out.push(Check::eq("order_222", milnor::monodromy_order(&node), 2));

    let mut consistent = true;
    for v in [&[2, 2, 3, 3][..], &[3, 3, 3], &[2, 3, 5], &[4, 4, 2, 2], &[6, 3]] {
        let e = ev(v);
        let mut eig = milnor::monodromy_eigenvalues(&e);
        let mut conj: Vec<_> = eig.iter().map(|z| z.conj()).collect();
        eig.sort();
        conj.sort();
        consistent &= eig.len() as u64 == milnor::milnor_number(&e) && eig == conj;
    }
    out.push(Check::eq("count_and_conjugation", consistent, true));
    out
}
