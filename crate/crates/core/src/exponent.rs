//! Exponents of the form `r / (p^e - 1)`.

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::is_prime;

/// Largest Frobenius step searched when converting a fraction.
pub const MAX_ORDER: u32 = 64;

/// `α = r / (p^e − 1)`. Two exponents are equal when their values are.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RationalExponent {
    r: u64,
    e: u32,
    p: u64,
}

fn checked_q(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e)
        .filter(|q| *q < u64::MAX / 2)
        .ok_or_else(|| Error::ExponentOverflow(format!("{p}^{e}")))
}

/// Multiplicative order of `p` modulo `d`, searched up to [`MAX_ORDER`].
pub fn multiplicative_order(p: u64, d: u64) -> Option<u32> {
    if d == 1 {
        return Some(1);
    }
    let mut acc = 1u128;
    for e in 1..=MAX_ORDER {
        acc = acc * p as u128 % d as u128;
        if acc == 1 {
            return Some(e);
        }
    }
    None
}

impl RationalExponent {
    pub fn new(r: u64, e: u32, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        if r == 0 {
            return Err(Error::Precondition("the exponent must be positive".into()));
        }
        if e == 0 {
            return Err(Error::Precondition("the Frobenius step e must be at least 1".into()));
        }
        checked_q(p, e)?;
        Ok(RationalExponent { r, e, p })
    }

    /// Converts `num/den` (with `p ∤ den`) using the multiplicative order of
    /// `p` modulo `den` as the Frobenius step.
    pub fn from_fraction(num: u64, den: u64, p: u64) -> Result<Self> {
        if den == 0 || num == 0 {
            return Err(Error::Precondition(format!("{num}/{den} is not a positive rational")));
        }
        if den.is_multiple_of(p) {
            return Err(Error::Precondition(format!("denominator {den} is divisible by {p}")));
        }
        let ratio = Ratio::new(num, den);
        let (num, den) = (*ratio.numer(), *ratio.denom());
        let e = multiplicative_order(p, den).ok_or_else(|| {
            Error::Precondition(format!("order of {p} modulo {den} exceeds {MAX_ORDER}"))
        })?;
        let q = checked_q(p, e)?;
        let r = num
            .checked_mul((q - 1) / den)
            .ok_or_else(|| Error::ExponentOverflow(format!("{num}/{den} over {p}^{e} - 1")))?;
        Self::new(r, e, p)
    }

    pub fn numerator(&self) -> u64 {
        self.r
    }

    /// The Frobenius step `e`.
    pub fn step(&self) -> u32 {
        self.e
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// `q = p^e`.
    pub fn q(&self) -> u64 {
        self.p.pow(self.e)
    }

    pub fn denominator(&self) -> u64 {
        self.q() - 1
    }

    pub fn value(&self) -> Ratio<u128> {
        Ratio::new(self.r as u128, self.denominator() as u128)
    }

    pub fn is_integer(&self) -> bool {
        self.r.is_multiple_of(self.denominator())
    }

    /// `⌈α⌉`.
    pub fn ceil(&self) -> u64 {
        self.r.div_ceil(self.denominator())
    }

    /// `p·α`, same step.
    pub fn times_p(&self) -> Result<Self> {
        let r = self
            .r
            .checked_mul(self.p)
            .ok_or_else(|| Error::ExponentOverflow(format!("{} * {}", self.r, self.p)))?;
        Self::new(r, self.e, self.p)
    }

    /// `q·α = r + α`, same step.
    pub fn times_q(&self) -> Result<Self> {
        let r = self
            .r
            .checked_mul(self.q())
            .ok_or_else(|| Error::ExponentOverflow(format!("{} * {}", self.r, self.q())))?;
        Self::new(r, self.e, self.p)
    }

    /// `α + n`, same step.
    pub fn plus_integer(&self, n: u64) -> Result<Self> {
        let r = n
            .checked_mul(self.denominator())
            .and_then(|x| x.checked_add(self.r))
            .ok_or_else(|| Error::ExponentOverflow(format!("{self} + {n}")))?;
        Self::new(r, self.e, self.p)
    }

    /// Same value over `p^(k·e) − 1`.
    pub fn refine(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::Precondition("refinement factor must be positive".into()));
        }
        let e = self
            .e
            .checked_mul(k)
            .ok_or_else(|| Error::ExponentOverflow(format!("step {} * {k}", self.e)))?;
        let big = checked_q(self.p, e)? - 1;
        let r = self
            .r
            .checked_mul(big / self.denominator())
            .ok_or_else(|| Error::ExponentOverflow(format!("refining {self}")))?;
        Self::new(r, e, self.p)
    }

    /// Splits `α = m + α'` with `m` a non-negative integer and `0 < α' ≤ 1`.
    pub(crate) fn skoda_split(&self) -> (u64, Self) {
        let m = self.ceil() - 1;
        let rest = RationalExponent { r: self.r - m * self.denominator(), ..*self };
        (m, rest)
    }
}

impl PartialEq for RationalExponent {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.value() == other.value()
    }
}

impl Eq for RationalExponent {}

impl PartialOrd for RationalExponent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        (self.p == other.p).then(|| self.value().cmp(&other.value()))
    }
}

impl fmt::Display for RationalExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.r, self.denominator())
    }
}
