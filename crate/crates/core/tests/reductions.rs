//! Cross-module checks: lattice reflections against their mod-θ images, and
//! the Weyl group against the finite orthogonal group.

use std::collections::BTreeSet;

use cubix_core::ball::cusp_class;
use cubix_core::e6_weyl::{self, LineConfiguration, WeylGroup};
use cubix_core::finite_orthogonal::{self, f3_reflection, OrthogonalGroup};
use cubix_core::hermitian::{enumerate_vectors, in_gamma0, reduce_isometry, reflection, Isometry};
use cubix_core::EisensteinInt as E;

#[test]
fn order_two_reflections_reduce_to_f3_reflections() {
    for n in [1, 2] {
        for v in enumerate_vectors(n, 1) {
            let r = reflection(&v, -E::ONE).unwrap();
            let red = reduce_isometry(&r).unwrap();
            assert_eq!(red, f3_reflection(&v.reduce()).unwrap(), "{v}");
            assert_eq!(finite_orthogonal::q_value(&v.reduce()).value() as i64, n);
        }
    }
}

#[test]
fn triflections_reduce_to_identity() {
    for v in enumerate_vectors(1, 1) {
        for z in [E::OMEGA, E::OMEGA_SQ] {
            let r = reflection(&v, z).unwrap();
            assert_eq!(reduce_isometry(&r).unwrap(), finite_orthogonal::F3Matrix::identity());
            assert!(in_gamma0(&r));
        }
    }
}

#[test]
fn reduction_lands_in_orthogonal_group() {
    let group = finite_orthogonal::orthogonal_group(200_000).unwrap();
    let gens: Vec<Isometry> = enumerate_vectors(2, 1)
        .iter()
        .map(|v| reflection(v, -E::ONE).unwrap())
        .collect();
    let mut word = Isometry::identity();
    for (i, g) in gens.iter().cycle().step_by(7).take(40).enumerate() {
        word = word.checked_mul(g).unwrap();
        if i % 5 == 0 {
            assert!(group.contains(&reduce_isometry(&word).unwrap()));
        }
    }
}

#[test]
fn height_one_reflections_already_generate() {
    let images: BTreeSet<u64> = enumerate_vectors(1, 1)
        .iter()
        .chain(&enumerate_vectors(2, 1))
        .map(|v| reduce_isometry(&reflection(v, -E::ONE).unwrap()).unwrap().packed_key())
        .collect();
    let gens: Vec<_> = images
        .iter()
        .map(|&k| finite_orthogonal::F3Matrix::from_packed_key(k).unwrap())
        .collect();
    let g = OrthogonalGroup::generated_by(&gens, 200_000).unwrap();
    assert_eq!(g.order(), finite_orthogonal::ORTHOGONAL_ORDER);
}

#[test]
fn cusp_classes_at_height_one() {
    // Only a subset of the cusps lifts at height 1.
    let classes: BTreeSet<_> = enumerate_vectors(0, 1)
        .iter()
        .filter(|n| n.is_primitive_at_theta())
        .map(|n| cusp_class(n).unwrap())
        .collect();
    let nulls: BTreeSet<_> = finite_orthogonal::null_points().into_iter().collect();
    assert!(classes.is_subset(&nulls));
    assert!(!classes.is_empty());
}

#[test]
fn weyl_reflections_map_to_f3_reflections() {
    let cfg = LineConfiguration::new();
    let w = WeylGroup::enumerate(200_000).unwrap();
    let map = e6_weyl::mod3_map(&w).unwrap();
    let reflections: BTreeSet<u64> = finite_orthogonal::reflection_generators()
        .iter()
        .map(|m| m.packed_key())
        .collect();
    for g in e6_weyl::root_reflections(&cfg).unwrap() {
        let idx = w.elements().binary_search(&g).unwrap();
        let key = map.images[idx].packed_key();
        let neg_key = map.images[idx].neg().packed_key();
        assert!(reflections.contains(&key) || reflections.contains(&neg_key));
    }
}
