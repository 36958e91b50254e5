//! Seeded random inputs for the invariance suites.

use cubix_core::ball::BallPoint;
use cubix_core::hermitian::{enumerate_vectors, reflection, Isometry, RANK};
use cubix_core::EisensteinInt;
use num_complex::Complex64;
use rand::Rng;

/// A point with `Σ|z_k/z₁|² < 1/2` in a random projective gauge.
///
/// f64 coordinates of a point at `|z₁|² = R` only determine it to about
/// `ε·R` in the metric, so the suites stay at moderate range.
pub fn random_point(rng: &mut impl Rng) -> BallPoint {
    loop {
        let mut z = [Complex64::new(1.0, 0.0); RANK];
        for x in z.iter_mut().skip(1) {
            *x = Complex64::new(rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5));
        }
        let s: f64 = z[1..].iter().map(|x| x.norm_sqr()).sum();
        if s < 0.5 {
            let phase = Complex64::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..std::f64::consts::TAU));
            if let Ok(p) = BallPoint::new(z.map(|x| x * phase)) {
                return p;
            }
        }
    }
}

/// Triflections (`ζ = ω`) and order-2 reflections in the height-1 norm-1
/// vectors.
pub fn reflection_generators() -> Vec<Isometry> {
    enumerate_vectors(1, 1)
        .iter()
        .flat_map(|v| {
            [EisensteinInt::OMEGA, -EisensteinInt::ONE]
                .into_iter()
                .filter_map(move |z| reflection(v, z).ok())
        })
        .collect()
}

/// A product of 1 to `max_len` generators.
pub fn random_word(rng: &mut impl Rng, gens: &[Isometry], max_len: usize) -> Isometry {
    let len = rng.gen_range(1..=max_len);
    (0..len).fold(Isometry::identity(), |acc, _| {
        acc.checked_mul(&gens[rng.gen_range(0..gens.len())])
            .expect("short words stay far from overflow")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubix_core::ball::herm_c;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn points_are_normalized_and_moderate() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let p = random_point(&mut rng);
            let z = p.coords();
            assert!((herm_c(z, z).re + 1.0).abs() < 1e-12);
            assert!(z[0].norm_sqr() < 2.0 + 1e-9);
        }
    }

    #[test]
    fn generators_are_reflections() {
        let gens = reflection_generators();
        assert_eq!(gens.len(), 2 * enumerate_vectors(1, 1).len());
        for g in &gens {
            assert!(matches!(g.order(6).unwrap(), Some(2) | Some(3)));
        }
    }
}
