//! Sparse multivariate polynomials over a [`Ring`].

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Elem;
use crate::ring::{Monomial, Ring};

/// A polynomial with nonzero coefficients, terms kept in ascending monomial
/// order (the leading term is last).
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, Elem)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Arc<Ring>, c: Elem) -> Self {
        Self::term(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::term(ring, 1, Monomial::var(ring.nvars(), i))
    }

    pub fn term(ring: &Arc<Ring>, c: Elem, m: Monomial) -> Self {
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, Elem)>) -> Self {
        let field = ring.field();
        let mut acc: HashMap<Monomial, Elem> = HashMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert(0);
            *e = field.add(*e, c);
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_by(|a, b| ring.cmp(&a.0, &b.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Terms already sorted ascending with nonzero coefficients.
    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<(Monomial, Elem)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Less));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> &[(Monomial, Elem)] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<(Monomial, Elem)> {
        self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Elem)> {
        self.terms.last()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<Elem> {
        self.terms.last().map(|t| t.1)
    }

    pub fn constant_coefficient(&self) -> Elem {
        match self.terms.first() {
            Some((m, c)) if m.is_one() => *c,
            _ => 0,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Elem {
        self.terms
            .binary_search_by(|(t, _)| self.ring.cmp(t, m))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "polynomials from different rings"
        );
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), field.neg(*c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: Elem) -> Polynomial {
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), field.mul(*a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.field().inv(c)),
        }
    }

    pub fn mul_term(&self, c: Elem, m: &Monomial) -> Polynomial {
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), field.mul(*a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let terms = merge_combine(&self.ring, &self.terms, 1, None, &other.terms);
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let minus_one = self.ring.field().neg(1);
        let terms = merge_combine(&self.ring, &self.terms, minus_one, None, &other.terms);
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `self - c * m * other`.
    pub(crate) fn sub_mul_term(&self, c: Elem, m: &Monomial, other: &Polynomial) -> Polynomial {
        let neg = self.ring.field().neg(c);
        let terms = merge_combine(&self.ring, &self.terms, neg, Some(m), &other.terms);
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.checked_mul(other).expect("exponent overflow in polynomial product")
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other);
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let (small, large) = if self.num_terms() <= other.num_terms() { (self, other) } else { (other, self) };
        let field = self.ring.field();
        let mut acc: HashMap<Monomial, Elem> = HashMap::with_capacity(large.num_terms() * 2);
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let m = ma
                    .checked_mul(mb)
                    .ok_or_else(|| Error::ExponentOverflow(format!("product of {self} and {other}")))?;
                let e = acc.entry(m).or_insert(0);
                *e = field.add(*e, field.mul(*ca, *cb));
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_by(|a, b| self.ring.cmp(&a.0, &b.0));
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Term-wise `p^e`-th power: `(sum c_i m_i)^(p^e) = sum c_i^(p^e) m_i^(p^e)`.
    pub fn frobenius(&self, e: u32) -> Result<Polynomial> {
        let p = self.ring.characteristic();
        let q = p
            .checked_pow(e)
            .ok_or_else(|| Error::ExponentOverflow(format!("{p}^{e}")))?;
        let field = self.ring.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mq = m
                .checked_pow(q)
                .ok_or_else(|| Error::ExponentOverflow(format!("({self})^{q}")))?;
            terms.push((mq, field.frobenius(*c, e)));
        }
        // Raising every exponent by the same factor preserves the order.
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// `self^n`, writing `n` in base `p` and using `f^(p^i)` term-wise.
    pub fn pow(&self, n: u64) -> Result<Polynomial> {
        if n == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let p = self.ring.characteristic();
        let max_deg = self.total_degree().unwrap_or(0) as u64;
        if max_deg.checked_mul(n).is_none_or(|d| d > u32::MAX as u64) {
            return Err(Error::ExponentOverflow(format!("({self})^{n}")));
        }
        let mut result = Polynomial::one(&self.ring);
        let mut rest = n;
        let mut level = 0u32;
        while rest > 0 {
            let digit = rest % p;
            if digit > 0 {
                let base = self.frobenius(level)?;
                result = result.checked_mul(&base.pow_small(digit)?)?;
            }
            rest /= p;
            level += 1;
        }
        Ok(result)
    }

    fn pow_small(&self, mut n: u64) -> Result<Polynomial> {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        self.check_ring(divisor);
        let (lm, lc) = divisor.leading_term()?;
        let field = self.ring.field();
        let lc_inv = field.inv(*lc);
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return None;
            }
            let t = lm.quotient_of(m);
            let coeff = field.mul(*c, lc_inv);
            rem = rem.sub_mul_term(coeff, &t, divisor);
            quot.push((t, coeff));
        }
        quot.reverse();
        Some(Polynomial::from_sorted(&self.ring, quot))
    }

    /// Re-embeds into `target`, whose last `nvars()` variables are this ring's.
    pub(crate) fn embed_shifted(&self, target: &Arc<Ring>, shift: usize) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = smallvec::SmallVec::from_elem(0, shift);
            e.extend_from_slice(m.exponents());
            (Monomial::from_parts(e), *c)
        });
        Polynomial::from_terms(target, terms)
    }

    /// Drops the first `shift` variables, which must not occur.
    pub(crate) fn restrict_shifted(&self, target: &Arc<Ring>, shift: usize) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            debug_assert!(m.exponents()[..shift].iter().all(|&e| e == 0));
            (Monomial::from_parts(m.exponents()[shift..].into()), *c)
        });
        Polynomial::from_terms(target, terms)
    }

    /// True if none of the first `block` variables occurs.
    pub(crate) fn avoids_block(&self, block: usize) -> bool {
        self.terms.iter().all(|(m, _)| m.exponents()[..block].iter().all(|&e| e == 0))
    }
}

/// Merges `a + c * m * b` for ascending term lists, dropping zeros.
fn merge_combine(
    ring: &Ring,
    a: &[(Monomial, Elem)],
    c: Elem,
    m: Option<&Monomial>,
    b: &[(Monomial, Elem)],
) -> Vec<(Monomial, Elem)> {
    let field = ring.field();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|(t, bc)| {
        let t = match m {
            Some(m) => t.mul(m),
            None => t.clone(),
        };
        (t, field.mul(*bc, c))
    });
    let mut next_b = bi.next();
    while let Some((tb, cb)) = next_b.take() {
        while i < a.len() && ring.cmp(&a[i].0, &tb) == Ordering::Less {
            out.push(a[i].clone());
            i += 1;
        }
        if i < a.len() && a[i].0 == tb {
            let s = field.add(a[i].1, cb);
            if s != 0 {
                out.push((tb, s));
            }
            i += 1;
        } else if cb != 0 {
            out.push((tb, cb));
        }
        next_b = bi.next();
    }
    out.extend_from_slice(&a[i..]);
    out
}

impl fmt::Display for Polynomial {
    /// Terms in descending order, joined by ` + `; coefficients are canonical
    /// residues.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = self.ring.field();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                field.fmt_elem(*c, f)?;
            } else {
                if *c != 1 {
                    field.fmt_elem(*c, f)?;
                    f.write_str("*")?;
                }
                m.fmt_with(self.ring.vars(), f)?;
            }
        }
        Ok(())
    }
}
