//! Polynomial rings `F_{p^k}[x_1, ..., x_n]` with a fixed monomial order.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::field::GaloisField;

pub type Exponents = SmallVec<[u32; 8]>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
}

/// Pair selection used by Buchberger's algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Selection {
    /// Smallest lcm first.
    #[default]
    Normal,
    /// Smallest sugar degree first, ties by lcm.
    Sugar,
}

/// The order actually used for comparisons; elimination rings put a block of
/// tag variables in front of the user's variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum TermOrder {
    Plain(MonomialOrder),
    Eliminate { block: usize, rest: MonomialOrder },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    field: GaloisField,
    vars: Vec<String>,
    order: TermOrder,
    selection: Selection,
}

impl Ring {
    pub fn new(field: GaloisField, vars: Vec<String>) -> Result<Arc<Self>> {
        Self::with_order(field, vars, MonomialOrder::Grevlex)
    }

    pub fn with_order(field: GaloisField, vars: Vec<String>, order: MonomialOrder) -> Result<Arc<Self>> {
        if vars.is_empty() {
            return Err(Error::Precondition("a ring needs at least one variable".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::Precondition(format!("duplicate variable {v}")));
            }
            if field.generator_name() == Some(v.as_str()) {
                return Err(Error::Precondition(format!("variable {v} clashes with the field generator")));
            }
        }
        Ok(Arc::new(Ring { field, vars, order: TermOrder::Plain(order), selection: Selection::Normal }))
    }

    /// Same ring with a different pair-selection strategy.
    pub fn with_selection(&self, selection: Selection) -> Arc<Self> {
        Arc::new(Ring { selection, ..self.clone() })
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic() as u64
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn monomial_order(&self) -> MonomialOrder {
        match self.order {
            TermOrder::Plain(o) => o,
            TermOrder::Eliminate { rest, .. } => rest,
        }
    }

    pub fn selection(&self) -> Selection {
        self.selection
    }

    /// Ring with `block` fresh tag variables in front, ordered so that any
    /// monomial involving a tag is larger than every tag-free monomial.
    pub(crate) fn elimination_ring(&self, block: usize) -> Arc<Self> {
        let mut vars: Vec<String> = (0..block).map(|i| format!("_tag{i}")).collect();
        vars.extend(self.vars.iter().cloned());
        Arc::new(Ring {
            field: self.field.clone(),
            vars,
            order: TermOrder::Eliminate { block, rest: self.monomial_order() },
            selection: self.selection,
        })
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.order {
            TermOrder::Plain(MonomialOrder::Grevlex) => grevlex(&a.exps, a.deg, &b.exps, b.deg),
            TermOrder::Plain(MonomialOrder::Lex) => a.exps.cmp(&b.exps),
            TermOrder::Eliminate { block, rest } => {
                let (ta, ra) = a.exps.split_at(block);
                let (tb, rb) = b.exps.split_at(block);
                let dta: u32 = ta.iter().sum();
                let dtb: u32 = tb.iter().sum();
                grevlex(ta, dta, tb, dtb).then_with(|| match rest {
                    MonomialOrder::Grevlex => grevlex(ra, a.deg - dta, rb, b.deg - dtb),
                    MonomialOrder::Lex => ra.cmp(rb),
                })
            }
        }
    }
}

#[inline]
fn grevlex(a: &[u32], da: u32, b: &[u32], db: u32) -> Ordering {
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))
    }
}

/// Exponent vector with cached total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    deg: u32,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, n), deg: 0 }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        let mut deg = 0u32;
        for &e in exps {
            deg = deg
                .checked_add(e)
                .ok_or_else(|| Error::ExponentOverflow("total degree exceeds u32".into()))?;
        }
        Ok(Monomial { exps: SmallVec::from_slice(exps), deg })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    /// Product. Panics on exponent overflow; entry points that can create
    /// large exponents check with [`Monomial::checked_mul`] first.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow in monomial product")
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Exponents::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b)?);
        }
        Some(Monomial { exps, deg: self.deg.checked_add(other.deg)? })
    }

    pub fn checked_pow(&self, n: u64) -> Option<Monomial> {
        let n: u32 = n.try_into().ok()?;
        let mut exps = Exponents::with_capacity(self.exps.len());
        for a in &self.exps {
            exps.push(a.checked_mul(n)?);
        }
        Some(Monomial { exps, deg: self.deg.checked_mul(n)? })
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Monomial { exps, deg: other.deg - self.deg }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Support bitmask used as a cheap divisibility filter.
    #[inline]
    pub(crate) fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
    }

    pub(crate) fn from_parts(exps: Exponents) -> Monomial {
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn fmt_with(&self, vars: &[String], f: &mut impl fmt::Write) -> fmt::Result {
        let mut first = true;
        for (e, v) in self.exps.iter().zip(vars) {
            if *e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            f.write_char('1')?;
        }
        Ok(())
    }
}
