//! Formal verification of the Chern-series recursions in a graded-commutative
//! differential algebra.
//!
//! The algebra is generated by even classes `s_n`, transgressed odd classes
//! `w_n` and one odd class `eta` of degree `2k + 1`. The differential is the
//! degree `+1` derivation determined on generators by
//!
//! ```text
//! d s_n = lambda(n, k) eta s_{n-k}    d w_n = lambda(n, k) eta w_{n-k}    d eta = 0
//! ```
//!
//! with `lambda(n, k) = (-1)^{k+1} n! / (n-k)!`, the index-zero convention
//! `s_0 = 0` (so `d s_n` vanishes for `n <= k`, except through the optional
//! index field), and everything computed modulo terms of degree above the
//! truncation bound. The twist class is normalized so its integer multiplier
//! is one; rescaling `eta` rescales both sides of every closure identity and
//! changes no verdict. The operations here establish, by symbolic expansion,
//! which sign closes the even series `sum s_n / n!` under `d - eps eta`, and
//! which coefficient pattern closes the transgressed odd series.

mod element;
mod newton;

pub use element::{FormalElement, Monomial};
pub use newton::{
    newton_c_to_s, newton_s_to_c, special_tensor_coefficient, tensor_power_sums, Scalar,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChernError {
    #[error("need n >= k >= 1, got n={n}, k={k}")]
    BadArguments { n: u32, k: u32 },
    #[error("truncation degree {truncation} too small for k={k}; need at least 2k+2 = {}", 2 * k + 2)]
    BadTruncation { k: u32, truncation: u32 },
    #[error("neither sign annihilates the even series; the derivation is broken")]
    NoClosingSign,
    #[error("expected {expected} seed coefficients, got {got}")]
    WrongSeedCount { expected: usize, got: usize },
    #[error("clutching input must live in the fibre factor (no eta)")]
    ContainsEta,
}

/// `lambda(n, k) = (-1)^{k+1} n! / (n-k)!`, the structure constant of the
/// differential. An exact rational that is in fact an integer.
pub fn lambda_coeff(n: u32, k: u32) -> Result<BigRational, ChernError> {
    if k < 1 || n < k {
        return Err(ChernError::BadArguments { n, k });
    }
    Ok(BigRational::from(lambda_int(n, k)))
}

fn lambda_int(n: u32, k: u32) -> BigInt {
    debug_assert!(n >= k && k >= 1);
    let mut value = BigInt::one();
    for i in (n - k + 1)..=n {
        value *= BigInt::from(i);
    }
    if k.is_multiple_of(2) {
        value = -value;
    }
    value
}

/// The closing sign of a twisted series.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `(-1)^{k+1}`.
    pub fn from_parity_of(k: u32) -> Self {
        if k % 2 == 1 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    fn apply(self, x: &FormalElement) -> FormalElement {
        match self {
            Sign::Plus => x.clone(),
            Sign::Minus => x.neg(),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

/// Solution of the odd-series recursion
/// `a_{m+k} lambda(m+k, k) = eps a_m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OddSeriesSolution {
    /// `a_1 ..= a_last` with `last = floor((N+1)/2)`.
    pub coefficients: Vec<BigRational>,
    /// Whether the weighting `a_n = lambda(n, k)/n!` (zero for `n < k`)
    /// satisfies the same closure; expansion shows it does not.
    pub lambda_weighted_closes: bool,
}

/// Twist degree, truncation bound and the (normally zero) index of the
/// Fredholm component, fixing one instance of the algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ChernContext {
    k: u32,
    truncation: u32,
    index: i64,
}

impl ChernContext {
    pub fn new(k: u32, truncation: u32) -> Result<Self, ChernError> {
        if k < 1 {
            return Err(ChernError::BadArguments { n: 0, k });
        }
        Ok(Self {
            k,
            truncation,
            index: 0,
        })
    }

    /// Default bound `4k + 6`: two full recursion steps beyond eta's degree.
    pub fn with_default_truncation(k: u32) -> Result<Self, ChernError> {
        Self::new(k, 4 * k + 6)
    }

    /// Same algebra over the index-`j` component, where `s_0 = j` and the
    /// single formula `d s_k = lambda(k, k) j eta` becomes visible.
    pub fn with_index(mut self, index: i64) -> Self {
        self.index = index;
        self
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn eta_degree(&self) -> u32 {
        2 * self.k + 1
    }

    /// Product truncated to the context bound.
    pub fn mul(&self, a: &FormalElement, b: &FormalElement) -> FormalElement {
        a.mul(b).truncate(self.k, self.truncation)
    }

    /// The graded derivation on one monomial, computed exactly.
    fn d_monomial(&self, mono: &Monomial) -> FormalElement {
        // anything containing eta dies: d produces another eta and eta^2 = 0
        if mono.eta {
            return FormalElement::zero();
        }
        let k = self.k;
        let mut out = FormalElement::zero();

        for idx in 0..mono.s.len() {
            let n = mono.s[idx];
            let (coeff, image) = if n > k {
                (
                    BigRational::from(lambda_int(n, k)),
                    FormalElement::eta().mul(&FormalElement::s(n - k)),
                )
            } else if n == k && self.index != 0 {
                // s_0 equals the index on this component
                (
                    BigRational::from(lambda_int(k, k) * BigInt::from(self.index)),
                    FormalElement::eta(),
                )
            } else {
                continue;
            };
            // the prefix consists of s factors only, all even: no Leibniz sign
            let mut rest = mono.clone();
            rest.s.remove(idx);
            out = out.add(&image.mul(&FormalElement::from(rest)).scale(&coeff));
        }

        for idx in 0..mono.omega.len() {
            let w = mono.omega[idx];
            if w <= k {
                continue;
            }
            let coeff = BigRational::from(lambda_int(w, k));
            // prefix of idx odd factors (the s factors are even)
            let leibniz = if idx % 2 == 0 { Sign::Plus } else { Sign::Minus };
            let prefix = Monomial {
                eta: false,
                s: mono.s.clone(),
                omega: mono.omega[..idx].to_vec(),
            };
            let suffix = Monomial {
                eta: false,
                s: Vec::new(),
                omega: mono.omega[idx + 1..].to_vec(),
            };
            let image = FormalElement::eta().mul(&FormalElement::omega(w - k));
            let term = FormalElement::from(prefix)
                .mul(&image)
                .mul(&FormalElement::from(suffix))
                .scale(&coeff);
            out = out.add(&leibniz.apply(&term));
        }
        out
    }

    /// Exact differential, no truncation (raises degree by one).
    fn d_raw(&self, x: &FormalElement) -> FormalElement {
        let mut out = FormalElement::zero();
        for (mono, coeff) in x.terms() {
            out = out.add(&self.d_monomial(mono).scale(coeff));
        }
        out
    }

    /// The differential, truncated to the context bound.
    pub fn differential(&self, x: &FormalElement) -> FormalElement {
        self.d_raw(x).truncate(self.k, self.truncation)
    }

    /// Checks `d(d(x)) = 0` exactly for every monomial in the `s` generators
    /// of degree within the truncation bound.
    pub fn d_squared_check(&self) -> bool {
        self.s_monomials()
            .into_iter()
            .all(|m| self.d_raw(&self.d_raw(&FormalElement::from(m))).is_zero())
    }

    /// All monomials in `s_1 ..= s_{N/2}` of degree `<= N`.
    fn s_monomials(&self) -> Vec<Monomial> {
        fn extend(budget: u32, max_index: u32, stack: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            out.push(Monomial {
                eta: false,
                s: stack.clone(),
                omega: Vec::new(),
            });
            for i in 1..=max_index {
                if 2 * i > budget {
                    break;
                }
                // ascending stack keeps each multiset unique
                if stack.last().is_some_and(|&last| i < last) {
                    continue;
                }
                stack.push(i);
                extend(budget - 2 * i, max_index, stack, out);
                stack.pop();
            }
        }
        let mut out = Vec::new();
        let mut stack = Vec::new();
        extend(self.truncation, self.truncation / 2, &mut stack, &mut out);
        out
    }

    /// The even series `sum_{n=1}^{N/2} s_n / n!`.
    pub fn chern_even(&self) -> FormalElement {
        let mut out = FormalElement::zero();
        let mut factorial = BigInt::one();
        for n in 1..=self.truncation / 2 {
            factorial *= BigInt::from(n);
            let coeff = BigRational::new(BigInt::one(), factorial.clone());
            out = out.add(&FormalElement::s(n).scale(&coeff));
        }
        out
    }

    /// The unique sign `eps` with `(d - eps eta) chern_even = 0` modulo terms
    /// of degree above `N + 1` (the differential raises degree by one, so the
    /// comparison happens there; `N >= 2k + 2` makes it non-vacuous).
    pub fn twisted_closure_sign(&self) -> Result<Sign, ChernError> {
        self.require_truncation()?;
        let ch = self.chern_even();
        let bound = self.truncation + 1;
        let d_ch = self.d_raw(&ch).truncate(self.k, bound);
        let eta_ch = FormalElement::eta().mul(&ch).truncate(self.k, bound);
        for sign in [Sign::Plus, Sign::Minus] {
            if d_ch == sign.apply(&eta_ch) {
                return Ok(sign);
            }
        }
        Err(ChernError::NoClosingSign)
    }

    /// Extends seed coefficients `a_1 ..= a_k` to the unique solution of
    /// `a_{m+k} lambda(m+k, k) = eps a_m`, which makes `sum a_n w_n` closed
    /// under `d - eps eta`; also reports whether the `lambda(n,k)/n!`
    /// weighting satisfies the same closure.
    pub fn odd_series_coefficients(
        &self,
        eps: Sign,
        seeds: &[BigRational],
    ) -> Result<OddSeriesSolution, ChernError> {
        self.require_truncation()?;
        let k = self.k as usize;
        if seeds.len() != k {
            return Err(ChernError::WrongSeedCount {
                expected: k,
                got: seeds.len(),
            });
        }
        let last = self.truncation.div_ceil(2) as usize;
        let mut a = seeds.to_vec();
        for m in 1..=last.saturating_sub(k) {
            let lam = BigRational::from(lambda_int((m + k) as u32, self.k));
            let eps_rat = BigRational::from(BigInt::from(eps.to_i8()));
            a.push(eps_rat * &a[m - 1] / lam);
        }
        a.truncate(last);

        debug_assert!(self.odd_series_closes(&a, eps), "solved series must close");

        // the lambda-weighted series: lambda(n,k)/n! for n >= k, zero below
        let mut factorial = BigInt::one();
        let mut weighted = Vec::with_capacity(last);
        for n in 1..=last as u32 {
            factorial *= BigInt::from(n);
            if n >= self.k {
                weighted.push(BigRational::new(lambda_int(n, self.k), factorial.clone()));
            } else {
                weighted.push(BigRational::zero());
            }
        }

        Ok(OddSeriesSolution {
            coefficients: a,
            lambda_weighted_closes: self.odd_series_closes(&weighted, eps),
        })
    }

    /// Whether `sum a_n w_n` is annihilated by `d - eps eta`, by expansion.
    fn odd_series_closes(&self, a: &[BigRational], eps: Sign) -> bool {
        let mut series = FormalElement::zero();
        for (i, coeff) in a.iter().enumerate() {
            series = series.add(&FormalElement::omega(i as u32 + 1).scale(coeff));
        }
        let bound = self.truncation + 1;
        let d_series = self.d_raw(&series).truncate(self.k, bound);
        let eta_series = FormalElement::eta().mul(&series).truncate(self.k, bound);
        d_series == eps.apply(&eta_series)
    }

    /// Action of the clutching map on a fibre class `x`: the pullback is
    /// `1 (x) x + w (x) dbar(x)` where `dbar` strips `eta` from the
    /// differential (the Kunneth factor `w` stands in for `eta`). Returns the
    /// pair `(fibre part, w part)`; iterating is consistent because `w^2 = 0`
    /// in the base of the clutch.
    pub fn clutching_pullback(
        &self,
        x: &FormalElement,
    ) -> Result<(FormalElement, FormalElement), ChernError> {
        if x.contains_eta() {
            return Err(ChernError::ContainsEta);
        }
        let w_part = self
            .d_raw(x)
            .eta_stripped()
            .truncate(self.k, self.truncation);
        Ok((x.clone(), w_part))
    }

    fn require_truncation(&self) -> Result<(), ChernError> {
        if self.truncation < 2 * self.k + 2 {
            return Err(ChernError::BadTruncation {
                k: self.k,
                truncation: self.truncation,
            });
        }
        Ok(())
    }
}

/// Convenience: `1/n!` as an exact rational.
pub fn inverse_factorial(n: u32) -> BigRational {
    let mut f = BigInt::one();
    for i in 1..=n {
        f *= BigInt::from(i);
    }
    BigRational::new(BigInt::one(), f)
}
