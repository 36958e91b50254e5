//! Milnor numbers and Milnor-fiber monodromy of Brieskorn singularities
//! `x₁^{a₁} + … + x_n^{a_n}`.
//!
//! Eigenvalues are kept as exact angles `k/m` (value `e^{2πik/m}`).

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(exponents: Vec<i64>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::EmptyExponents);
        }
        if let Some(&a) = exponents.iter().find(|&&a| a < 2) {
            return Err(Error::BadExponent(a));
        }
        Ok(Self(exponents))
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }
}

impl TryFrom<Vec<i64>> for ExponentVector {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<ExponentVector> for Vec<i64> {
    fn from(e: ExponentVector) -> Self {
        e.0
    }
}

/// Comma-separated, e.g. `2,2,2,3`.
impl FromStr for ExponentVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v = s
            .split(',')
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().map_err(|e| Error::Parse(format!("exponent {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `e^{2πi k/m}` with `0 ≤ k < m`, `gcd(k, m) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    k: u64,
    m: u64,
}

impl RootOfUnity {
    pub fn new(k: i64, m: i64) -> Result<Self> {
        if m <= 0 {
            return Err(Error::Parse(format!("denominator {m} must be positive")));
        }
        let k = k.rem_euclid(m);
        let g = k.gcd(&m);
        Ok(Self {
            k: (k / g) as u64,
            m: (m / g) as u64,
        })
    }

    pub fn numerator(&self) -> u64 {
        self.k
    }

    pub fn denominator(&self) -> u64 {
        self.m
    }

    /// Multiplicative order, which equals the reduced denominator.
    pub fn order(&self) -> u64 {
        self.m
    }

    pub fn conj(&self) -> Self {
        Self {
            k: (self.m - self.k) % self.m,
            m: self.m,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let m = self.m.lcm(&o.m);
        Self::new((self.k * (m / self.m) + o.k * (m / o.m)) as i64, m as i64).expect("positive")
    }

    pub fn to_complex(&self) -> num_complex::Complex64 {
        num_complex::Complex64::from_polar(1.0, std::f64::consts::TAU * self.k as f64 / self.m as f64)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.k, self.m)
    }
}

impl FromStr for RootOfUnity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (k, m) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("expected k/m, got {s:?}")))?;
        let p = |t: &str| t.trim().parse::<i64>().map_err(|e| Error::Parse(e.to_string()));
        Self::new(p(k)?, p(m)?)
    }
}

impl Serialize for RootOfUnity {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RootOfUnity {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `∏ (a_i − 1)`.
pub fn milnor_number(e: &ExponentVector) -> u64 {
    e.0.iter().map(|&a| (a - 1) as u64).product()
}

/// Products `∏ ζ_i` over `ζ_i^{a_i} = 1`, `ζ_i ≠ 1`, sorted by angle.
pub fn monodromy_eigenvalues(e: &ExponentVector) -> Vec<RootOfUnity> {
    let m = e.0.iter().fold(1i64, |acc, &a| acc.lcm(&a));
    // Work with numerators over the common denominator m.
    let mut sums = vec![0i64];
    for &a in &e.0 {
        let step = m / a;
        sums = sums
            .iter()
            .flat_map(|&s| (1..a).map(move |j| (s + j * step) % m))
            .collect();
    }
    let mut out: Vec<RootOfUnity> = sums
        .into_iter()
        .map(|s| RootOfUnity::new(s, m).expect("positive"))
        .collect();
    out.sort_by(|x, y| (x.k * y.m).cmp(&(y.k * x.m)).then(x.m.cmp(&y.m)));
    out
}

/// Lcm of the eigenvalue orders.
pub fn monodromy_order(e: &ExponentVector) -> u64 {
    monodromy_eigenvalues(e).iter().fold(1, |acc, z| acc.lcm(&z.order()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::new(v.to_vec()).unwrap()
    }

    fn angles(v: &[i64]) -> Vec<String> {
        monodromy_eigenvalues(&ev(v)).iter().map(|z| z.to_string()).collect()
    }

    /// Float oracle: multiply actual complex roots of unity, then read off
    /// the angle by rounding against the common denominator.
    fn float_oracle(v: &[i64]) -> Vec<(i64, i64)> {
        use num_complex::Complex64;
        let m = v.iter().fold(1i64, |acc, &a| acc.lcm(&a));
        let mut prods = vec![Complex64::new(1.0, 0.0)];
        for &a in v {
            prods = prods
                .iter()
                .flat_map(|p| {
                    (1..a).map(move |j| p * Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / a as f64))
                })
                .collect();
        }
        let mut out: Vec<(i64, i64)> = prods
            .iter()
            .map(|z| {
                let t = z.arg().rem_euclid(std::f64::consts::TAU) / std::f64::consts::TAU;
                let k = (t * m as f64).round() as i64 % m;
                let g = k.gcd(&m);
                (k / g, m / g)
            })
            .collect();
        out.sort_by(|x, y| (x.0 * y.1).cmp(&(y.0 * x.1)));
        out
    }

    fn as_pairs(v: &[i64]) -> Vec<(i64, i64)> {
        monodromy_eigenvalues(&ev(v))
            .iter()
            .map(|z| (z.numerator() as i64, z.denominator() as i64))
            .collect()
    }

    #[test]
    fn milnor_number_examples() {
        assert_eq!(milnor_number(&ev(&[2, 2, 2, 3])), 2);
        assert_eq!(milnor_number(&ev(&[2, 2, 3, 3])), 4);
        assert_eq!(milnor_number(&ev(&[2, 2, 2])), 1);
    }

    #[test]
    fn bad_exponents() {
        assert_eq!(ExponentVector::new(vec![2, 1]), Err(Error::BadExponent(1)));
        assert_eq!(ExponentVector::new(vec![]), Err(Error::EmptyExponents));
        assert!("2,x".parse::<ExponentVector>().is_err());
        assert_eq!("2, 2,2,3".parse::<ExponentVector>().unwrap(), ev(&[2, 2, 2, 3]));
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(angles(&[2, 2, 2, 3]), ["1/6", "5/6"]);
        assert_eq!(monodromy_order(&ev(&[2, 2, 2, 3])), 6);
        assert!(monodromy_eigenvalues(&ev(&[2, 2, 2, 3])).iter().all(|z| z.order() == 6));

        assert_eq!(angles(&[2, 2, 2]), ["1/2"]);
        assert_eq!(monodromy_order(&ev(&[2, 2, 2])), 2);

        // Two factors of −1 cancel: eigenvalues 1, 1, ω, ω².
        assert_eq!(angles(&[2, 2, 3, 3]), ["0/1", "0/1", "1/3", "2/3"]);
        assert_eq!(monodromy_order(&ev(&[2, 2, 3, 3])), 3);
    }

    #[test]
    fn oracle_agreement() {
        for v in [&[2, 2, 2, 3][..], &[2, 2, 3, 3], &[2, 2, 2], &[3, 4, 5], &[2, 3, 5], &[6, 6]] {
            assert_eq!(as_pairs(v), float_oracle(v), "{v:?}");
        }
    }

    #[test]
    fn root_of_unity_text() {
        let z: RootOfUnity = "10/12".parse().unwrap();
        assert_eq!(z.to_string(), "5/6");
        assert_eq!(z.conj().to_string(), "1/6");
        assert_eq!(z.mul(&z.conj()).to_string(), "0/1");
        assert_eq!(RootOfUnity::new(-1, 3).unwrap().to_string(), "2/3");
        assert!((z.to_complex() - (-num_complex::Complex64::new(-0.5, 3f64.sqrt() / 2.0))).norm() < 1e-12);
        let json = serde_json::to_string(&z).unwrap();
        assert_eq!(json, "\"5/6\"");
    }

    proptest! {
        #[test]
        fn count_matches_milnor_number(v in proptest::collection::vec(2i64..7, 1..5)) {
            let e = ev(&v);
            prop_assert_eq!(monodromy_eigenvalues(&e).len() as u64, milnor_number(&e));
        }

        #[test]
        fn closed_under_conjugation(v in proptest::collection::vec(2i64..7, 1..5)) {
            let e = ev(&v);
            let mut eig = monodromy_eigenvalues(&e);
            let mut conj: Vec<_> = eig.iter().map(RootOfUnity::conj).collect();
            eig.sort();
            conj.sort();
            prop_assert_eq!(eig, conj);
        }

        #[test]
        fn matches_float_oracle(v in proptest::collection::vec(2i64..6, 1..4)) {
            prop_assert_eq!(as_pairs(&v), float_oracle(&v));
        }
    }
}
