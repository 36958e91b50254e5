//! Exact arithmetic in the Eisenstein integers `Z[ω]`, `ω = (−1 + √−3)/2`.
//!
//! Elements are stored in the basis `{1, ω}` with `i64` coefficients. Every
//! operation is checked: the `checked_*` methods report [`Error::Overflow`],
//! and the operator impls panic on overflow instead of wrapping.
//!
//! The prime `θ = ω − ω̄ = √−3` is represented as `1 + 2ω`. Reduction modulo
//! `θ` sends `a + bω` to `a + b (mod 3)`, since `ω ≡ 1 (mod θ)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element `a + bω` of `Z[ω]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EisensteinInt {
    pub a: i64,
    pub b: i64,
}

impl EisensteinInt {
    pub const ZERO: Self = Self::new(0, 0);
    pub const ONE: Self = Self::new(1, 0);
    pub const OMEGA: Self = Self::new(0, 1);
    /// `ω² = −1 − ω = ω̄`.
    pub const OMEGA_SQ: Self = Self::new(-1, -1);
    /// `θ = √−3 = 1 + 2ω`.
    pub const THETA: Self = Self::new(1, 2);

    /// The six units, as successive powers of the primitive sixth root `1 + ω = −ω²`.
    pub const UNITS: [Self; 6] = [
        Self::new(1, 0),
        Self::new(1, 1),
        Self::new(0, 1),
        Self::new(-1, 0),
        Self::new(-1, -1),
        Self::new(0, -1),
    ];

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub const fn from_int(a: i64) -> Self {
        Self { a, b: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// The rational integer `a`, when `b = 0`.
    pub fn as_rational(self) -> Option<i64> {
        (self.b == 0).then_some(self.a)
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        Ok(Self::new(
            self.a.checked_add(rhs.a).ok_or(Error::Overflow)?,
            self.b.checked_add(rhs.b).ok_or(Error::Overflow)?,
        ))
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        Ok(Self::new(
            self.a.checked_sub(rhs.a).ok_or(Error::Overflow)?,
            self.b.checked_sub(rhs.b).ok_or(Error::Overflow)?,
        ))
    }

    pub fn checked_neg(self) -> Result<Self> {
        Ok(Self::new(
            self.a.checked_neg().ok_or(Error::Overflow)?,
            self.b.checked_neg().ok_or(Error::Overflow)?,
        ))
    }

    /// `(a + bω)(c + dω) = (ac − bd) + (ad + bc − bd)ω`, using `ω² = −1 − ω`.
    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        let (a, b, c, d) = (self.a, self.b, rhs.a, rhs.b);
        let ac = a.checked_mul(c).ok_or(Error::Overflow)?;
        let bd = b.checked_mul(d).ok_or(Error::Overflow)?;
        let ad = a.checked_mul(d).ok_or(Error::Overflow)?;
        let bc = b.checked_mul(c).ok_or(Error::Overflow)?;
        let re = ac.checked_sub(bd).ok_or(Error::Overflow)?;
        let om = ad
            .checked_add(bc)
            .and_then(|s| s.checked_sub(bd))
            .ok_or(Error::Overflow)?;
        Ok(Self::new(re, om))
    }

    /// `conj(a + bω) = (a − b) − bω`, since `ω̄ = −1 − ω`.
    pub fn checked_conj(self) -> Result<Self> {
        Ok(Self::new(
            self.a.checked_sub(self.b).ok_or(Error::Overflow)?,
            self.b.checked_neg().ok_or(Error::Overflow)?,
        ))
    }

    pub fn conj(self) -> Self {
        self.checked_conj().expect("Eisenstein overflow in conj")
    }

    /// `a² − ab + b²`.
    pub fn checked_norm(self) -> Result<i64> {
        let (a, b) = (self.a as i128, self.b as i128);
        let n = (a * a)
            .checked_sub(a * b)
            .and_then(|t| t.checked_add(b * b))
            .ok_or(Error::Overflow)?;
        i64::try_from(n).map_err(|_| Error::Overflow)
    }

    pub fn norm(self) -> i64 {
        self.checked_norm().expect("Eisenstein overflow in norm")
    }

    pub fn is_unit(self) -> bool {
        self.norm() == 1
    }

    /// Multiplicative order of a unit; `None` for non-units.
    pub fn unit_order(self) -> Option<u32> {
        let idx = Self::UNITS.iter().position(|&u| u == self)?;
        // UNITS[k] = ζ₆^k has order 6 / gcd(k, 6).
        Some(match idx {
            0 => 1,
            3 => 2,
            2 | 4 => 3,
            _ => 6,
        })
    }

    pub fn checked_pow(self, mut exp: u32) -> Result<Self> {
        let mut base = self;
        let mut acc = Self::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.checked_mul(base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.checked_mul(base)?;
            }
        }
        Ok(acc)
    }

    /// The exact quotient `q` with `self = q·d`.
    pub fn divide_exact(self, d: Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = d.checked_norm()?;
        let num = self.checked_mul(d.checked_conj()?)?;
        if num.a % n != 0 || num.b % n != 0 {
            return Err(Error::NotDivisible(self, d));
        }
        Ok(Self::new(num.a / n, num.b / n))
    }

    pub fn divisible_by(self, d: Self) -> bool {
        self.divide_exact(d).is_ok()
    }

    /// Reduction modulo `θ`; the kernel is exactly `θ·Z[ω]`.
    pub fn reduce_mod_theta(self) -> F3Elem {
        F3Elem::from_i64(self.a.rem_euclid(3) + self.b.rem_euclid(3))
    }

    /// The complex value, with `ω = −1/2 + i·√3/2`.
    pub fn to_complex(self) -> num_complex::Complex64 {
        let half_sqrt3 = 3f64.sqrt() / 2.0;
        num_complex::Complex64::new(self.a as f64 - 0.5 * self.b as f64, half_sqrt3 * self.b as f64)
    }
}

impl From<i64> for EisensteinInt {
    fn from(a: i64) -> Self {
        Self::from_int(a)
    }
}

impl Add for EisensteinInt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("Eisenstein overflow in add")
    }
}

impl Sub for EisensteinInt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("Eisenstein overflow in sub")
    }
}

impl Mul for EisensteinInt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("Eisenstein overflow in mul")
    }
}

impl Neg for EisensteinInt {
    type Output = Self;
    fn neg(self) -> Self {
        self.checked_neg().expect("Eisenstein overflow in neg")
    }
}

impl fmt::Display for EisensteinInt {
    /// `a+bw`, `a-bw`, `a`, `bw`; a coefficient of ±1 on `w` is written as `w` / `-w`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = |b: i64| match b {
            1 => "w".to_string(),
            -1 => "-w".to_string(),
            b => format!("{b}w"),
        };
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => f.write_str(&w(b)),
            (a, b) if b > 0 => write!(f, "{a}+{}", w(b)),
            (a, b) => write!(f, "{a}{}", w(b)),
        }
    }
}

impl FromStr for EisensteinInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("invalid Eisenstein integer {s:?}"));
        if s.is_empty() {
            return Err(bad());
        }
        let int = |t: &str| t.parse::<i64>().map_err(|_| bad());
        let Some(body) = s.strip_suffix('w').or_else(|| s.strip_suffix('ω')) else {
            return Ok(Self::from_int(int(&s)?));
        };
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (a, coeff) = match split {
            Some(i) => (int(&body[..i])?, &body[i..]),
            None => (0, body),
        };
        let b = match coeff {
            "" | "+" => 1,
            "-" => -1,
            t => int(t.strip_prefix('+').unwrap_or(t))?,
        };
        Ok(Self::new(a, b))
    }
}

impl Serialize for EisensteinInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for EisensteinInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An element of the field with three elements, stored as 0, 1 or 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
#[repr(transparent)]
pub struct F3Elem(u8);

impl F3Elem {
    pub const ZERO: Self = Self(0);
    pub const ONE: Self = Self(1);
    pub const TWO: Self = Self(2);

    pub fn from_i64(v: i64) -> Self {
        Self(v.rem_euclid(3) as u8)
    }

    /// Panics unless `v < 3`.
    pub const fn new(v: u8) -> Self {
        assert!(v < 3, "F3 element out of range");
        Self(v)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Every nonzero element is its own inverse.
    pub fn inv(self) -> Option<Self> {
        (self.0 != 0).then_some(self)
    }
}

impl Add for F3Elem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self((self.0 + rhs.0) % 3)
    }
}

impl Sub for F3Elem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self((self.0 + 3 - rhs.0) % 3)
    }
}

impl Mul for F3Elem {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self((self.0 * rhs.0) % 3)
    }
}

impl Neg for F3Elem {
    type Output = Self;
    fn neg(self) -> Self {
        Self((3 - self.0) % 3)
    }
}

impl fmt::Display for F3Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for F3Elem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.0)
    }
}

impl<'de> Deserialize<'de> for F3Elem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = u8::deserialize(d)?;
        if v > 2 {
            return Err(serde::de::Error::custom("F3 element must be 0, 1 or 2"));
        }
        Ok(Self(v))
    }
}
