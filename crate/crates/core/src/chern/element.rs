//! Elements of the free graded-commutative algebra over the rationals on even
//! generators `s_n` (degree `2n`), odd transgressed generators `w_n` (degree
//! `2n - 1`) and a single odd generator `eta` (degree `2k + 1`).
//!
//! Monomials are stored canonically: `eta` leftmost, then the commuting `s`
//! factors in ascending order with repetition, then strictly ascending `w`
//! factors. Koszul reordering signs are folded into coefficients during
//! multiplication; `eta^2 = 0` and `w_i^2 = 0` make products with repeated odd
//! factors vanish.

use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// A canonical monomial. The degree depends on the ambient twist degree
/// `2k + 1`, so it is computed by [`Monomial::degree`] with `k` supplied.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    pub eta: bool,
    pub s: Vec<u32>,
    pub omega: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Self {
            eta: false,
            s: Vec::new(),
            omega: Vec::new(),
        }
    }

    pub fn eta() -> Self {
        Self {
            eta: true,
            s: Vec::new(),
            omega: Vec::new(),
        }
    }

    pub fn s(n: u32) -> Self {
        assert!(n >= 1, "s_0 is the index, not a generator");
        Self {
            eta: false,
            s: vec![n],
            omega: Vec::new(),
        }
    }

    pub fn omega(n: u32) -> Self {
        assert!(n >= 1, "w_0 is not a generator");
        Self {
            eta: false,
            s: Vec::new(),
            omega: vec![n],
        }
    }

    pub fn degree(&self, k: u32) -> u32 {
        let eta = if self.eta { 2 * k + 1 } else { 0 };
        let s: u32 = self.s.iter().map(|i| 2 * i).sum();
        let omega: u32 = self.omega.iter().map(|i| 2 * i - 1).sum();
        eta + s + omega
    }

    pub fn is_one(&self) -> bool {
        !self.eta && self.s.is_empty() && self.omega.is_empty()
    }

    /// Graded-commutative product; `None` when a repeated odd factor kills it.
    /// The sign collects the Koszul transpositions needed to reach canonical
    /// order.
    pub fn mul(&self, other: &Self) -> Option<(Self, i8)> {
        if self.eta && other.eta {
            return None;
        }
        let mut sign = 1i8;
        // other's eta moves left past all of self's omega factors
        if other.eta && self.omega.len() % 2 == 1 {
            sign = -sign;
        }
        // merge omega lists, counting inversions
        let mut omega = Vec::with_capacity(self.omega.len() + other.omega.len());
        let (mut i, mut j) = (0, 0);
        while i < self.omega.len() && j < other.omega.len() {
            if self.omega[i] == other.omega[j] {
                return None; // w^2 = 0
            }
            if self.omega[i] < other.omega[j] {
                omega.push(self.omega[i]);
                i += 1;
            } else {
                // other.omega[j] jumps over the remaining factors of self
                if (self.omega.len() - i) % 2 == 1 {
                    sign = -sign;
                }
                omega.push(other.omega[j]);
                j += 1;
            }
        }
        omega.extend_from_slice(&self.omega[i..]);
        omega.extend_from_slice(&other.omega[j..]);

        let mut s = Vec::with_capacity(self.s.len() + other.s.len());
        s.extend_from_slice(&self.s);
        s.extend_from_slice(&other.s);
        s.sort_unstable();

        Some((
            Self {
                eta: self.eta || other.eta,
                s,
                omega,
            },
            sign,
        ))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        if self.eta {
            parts.push("eta".to_string());
        }
        let mut i = 0;
        while i < self.s.len() {
            let n = self.s[i];
            let count = self.s[i..].iter().take_while(|&&m| m == n).count();
            if count == 1 {
                parts.push(format!("s_{n}"));
            } else {
                parts.push(format!("s_{n}^{count}"));
            }
            i += count;
        }
        for w in &self.omega {
            parts.push(format!("w_{w}"));
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// A finite rational combination of monomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FormalElement {
    terms: BTreeMap<Monomial, BigRational>,
}

impl FormalElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(Monomial::one())
    }

    pub fn eta() -> Self {
        Self::from_monomial(Monomial::eta())
    }

    /// `s_n`, with the index-zero convention `s_0 = 0`.
    pub fn s(n: u32) -> Self {
        if n == 0 {
            Self::zero()
        } else {
            Self::from_monomial(Monomial::s(n))
        }
    }

    /// `w_n`; `w_0 = 0` by the same convention.
    pub fn omega(n: u32) -> Self {
        if n == 0 {
            Self::zero()
        } else {
            Self::from_monomial(Monomial::omega(n))
        }
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, BigRational::from_integer(1.into()));
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn contains_eta(&self) -> bool {
        self.terms.keys().any(|m| m.eta)
    }

    fn insert(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, by: &BigRational) -> Self {
        if by.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * by))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Exact graded-commutative product (no truncation).
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, sign)) = ma.mul(mb) {
                    let mut c = ca * cb;
                    if sign < 0 {
                        c = -c;
                    }
                    out.insert(m, c);
                }
            }
        }
        out
    }

    /// Drops every term of degree above `max_degree`.
    pub fn truncate(&self, k: u32, max_degree: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree(k) <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The part of the element divisible by `eta`, with `eta` removed.
    /// `eta` sits leftmost in every monomial, so stripping it costs no sign.
    pub fn eta_stripped(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.eta)
                .map(|(m, c)| {
                    let mut stripped = m.clone();
                    stripped.eta = false;
                    (stripped, c.clone())
                })
                .collect(),
        }
    }
}

impl From<Monomial> for FormalElement {
    fn from(m: Monomial) -> Self {
        Self::from_monomial(m)
    }
}

impl fmt::Display for FormalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let (sign, abs) = if c < &BigRational::zero() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if abs == BigRational::from_integer(1.into()) && !m.is_one() {
                write!(f, "{m}")?;
            } else if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs} {m}")?;
            }
        }
        Ok(())
    }
}
