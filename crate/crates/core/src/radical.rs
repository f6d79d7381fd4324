//! Exact sums of square roots with nonnegative integer coefficients.
//!
//! A [`RadicalSum`] is `Σ c_s·√s` over squarefree radicands `s`, with the
//! rational-integer part stored under radicand 1. Square roots of distinct
//! squarefree integers are linearly independent over the rationals, so the
//! term map is a unique normal form and equality is decided symbolically.
//! Strict ordering is decided by rigorous fixed-point interval bounds.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};

use num_bigint::BigUint;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Working precisions (fractional bits) tried in turn by [`RadicalSum::compare`].
const PRECISIONS: [u32; 5] = [64, 128, 256, 512, 1024];

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct RadicalSum {
    terms: BTreeMap<u64, u128>,
}

/// Splits `k = m²·s` with `s` squarefree. Returns `(m, s)`.
pub fn split_square(k: u64) -> (u64, u64) {
    debug_assert!(k > 0);
    let mut m = 1u64;
    let mut s = k;
    let mut p = 2u64;
    while p.saturating_mul(p) <= s {
        let pp = p * p;
        while s.is_multiple_of(pp) {
            s /= pp;
            m *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (m, s)
}

impl RadicalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_int(k: u128) -> Self {
        Self::from_term(k, 1)
    }

    /// `c·√s` for an already squarefree `s`.
    fn from_term(c: u128, s: u64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(s, c);
        }
        Self { terms }
    }

    /// `√k` in normal form.
    pub fn sqrt_int(k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("square root of 0 has no radical term".into()));
        }
        let (m, s) = split_square(k);
        Ok(Self::from_term(m as u128, s))
    }

    /// `c·√k` in normal form; `c = 0` gives zero for any `k`.
    pub fn term(c: u128, k: u64) -> Result<Self> {
        if c == 0 {
            return Ok(Self::zero());
        }
        Self::sqrt_int(k)?.checked_scale(c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(radicand, coefficient)` pairs in ascending radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, u128)> + '_ {
        self.terms.iter().map(|(&s, &c)| (s, c))
    }

    pub fn coefficient(&self, radicand: u64) -> u128 {
        self.terms.get(&radicand).copied().unwrap_or(0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.checked_add_assign(other)?;
        Ok(out)
    }

    fn checked_add_assign(&mut self, other: &Self) -> Result<()> {
        for (&s, &c) in &other.terms {
            let slot = self.terms.entry(s).or_insert(0);
            *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
        }
        Ok(())
    }

    /// Adds `c·√s` for a squarefree `s`.
    pub(crate) fn add_term(&mut self, c: u128, s: u64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(s).or_insert(0);
        *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
        Ok(())
    }

    pub fn checked_scale(&self, m: u128) -> Result<Self> {
        if m == 0 {
            return Ok(Self::zero());
        }
        let mut terms = BTreeMap::new();
        for (&s, &c) in &self.terms {
            terms.insert(s, c.checked_mul(m).ok_or(Error::Overflow)?);
        }
        Ok(Self { terms })
    }

    /// Multiplies every coefficient by `m`.
    ///
    /// Panics on coefficient overflow; use [`checked_scale`](Self::checked_scale)
    /// to handle it.
    pub fn scale(&self, m: u128) -> Self {
        self.checked_scale(m).expect("radical coefficient overflow")
    }

    /// Double-precision shadow. Every term is nonnegative, so the relative
    /// error stays within a few ulps per term.
    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(&s, &c)| c as f64 * (s as f64).sqrt())
            .fold(0.0, |acc, x| acc + x)
    }

    /// Lower and upper bounds of `self · 2^bits`.
    fn bounds(&self, bits: u32) -> (BigUint, BigUint) {
        let mut lo = BigUint::default();
        let mut hi = BigUint::default();
        for (&s, &c) in &self.terms {
            let c = BigUint::from(c);
            if s == 1 {
                let exact = c << bits;
                lo += &exact;
                hi += exact;
            } else {
                let root = (BigUint::from(s) << (2 * bits)).sqrt();
                let t = &c * root;
                // s is squarefree and > 1, so √s is irrational and the
                // floor is strict: root < √s·2^bits < root + 1.
                hi += &t + &c;
                lo += t;
            }
        }
        (lo, hi)
    }

    /// Exact comparison.
    ///
    /// Equality is read off the normal form. Otherwise both sides are
    /// enclosed in intervals at 64 fractional bits, doubling up to 1024
    /// until the intervals separate.
    pub fn compare(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        for bits in PRECISIONS {
            let (alo, ahi) = self.bounds(bits);
            let (blo, bhi) = other.bounds(bits);
            if ahi < blo {
                return Ordering::Less;
            }
            if alo > bhi {
                return Ordering::Greater;
            }
        }
        panic!("radical comparison undecided at 1024 bits: {self} vs {other}");
    }
}

impl Ord for RadicalSum {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl PartialOrd for RadicalSum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for RadicalSum {
    type Output = RadicalSum;
    fn add(mut self, rhs: RadicalSum) -> RadicalSum {
        self += &rhs;
        self
    }
}

impl Add<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn add(self, rhs: &RadicalSum) -> RadicalSum {
        self.checked_add(rhs).expect("radical coefficient overflow")
    }
}

impl AddAssign<&RadicalSum> for RadicalSum {
    fn add_assign(&mut self, rhs: &RadicalSum) {
        self.checked_add_assign(rhs)
            .expect("radical coefficient overflow");
    }
}

impl std::iter::Sum for RadicalSum {
    fn sum<I: Iterator<Item = RadicalSum>>(iter: I) -> Self {
        iter.fold(RadicalSum::zero(), |acc, x| acc + x)
    }
}

/// Renders `c1*sqrt(s1) + c2*sqrt(s2) + …` with radicands ascending.
/// The integer part prints bare and unit coefficients are omitted.
impl fmt::Display for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&s, &c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match (s, c) {
                (1, c) => write!(f, "{c}")?,
                (s, 1) => write!(f, "sqrt({s})")?,
                (s, c) => write!(f, "{c}*sqrt({s})")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RadicalSum({self})")
    }
}

impl Serialize for RadicalSum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RadicalSum", 2)?;
        st.serialize_field("exact", &self.to_string())?;
        st.serialize_field("approx", &self.to_f64())?;
        st.end()
    }
}
