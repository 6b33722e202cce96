//! Finite fields `F_p` and `F_{p^k} = F_p[t]/(m(t))`.
//!
//! Elements are encoded as `u32`. For prime fields the encoding is the residue
//! in `[0, p)`. For extensions the element `d_0 + d_1 t + ... + d_{k-1} t^{k-1}`
//! is encoded as `d_0 + d_1 p + ... + d_{k-1} p^{k-1}`.

use std::fmt;

use crate::error::{Error, Result};

/// Encoded field element.
pub type Elem = u32;

/// Largest supported field size.
const MAX_FIELD_SIZE: u64 = 1 << 30;

/// Upper bound on extension degrees accepted by the exhaustive irreducibility test.
const MAX_DEGREE: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaloisField {
    p: u32,
    k: u32,
    /// Monic modulus, low degree first, length `k + 1`. Empty for prime fields.
    modulus: Vec<u32>,
    generator: Option<String>,
    size: u32,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl GaloisField {
    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p as u64 > MAX_FIELD_SIZE {
            return Err(Error::InvalidField(format!("characteristic {p} is too large")));
        }
        Ok(GaloisField { p, k: 1, modulus: Vec::new(), generator: None, size: p })
    }

    /// Extension `F_p[gen]/(modulus)`; `modulus` is given low degree first and
    /// must be monic and irreducible of degree at least 2.
    pub fn extension(p: u32, modulus: &[i64], generator: &str) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        let mut m: Vec<u32> = modulus.iter().map(|&c| c.rem_euclid(p as i64) as u32).collect();
        while m.last() == Some(&0) {
            m.pop();
        }
        if m.len() < 3 {
            return Err(Error::InvalidField("modulus must have degree at least 2".into()));
        }
        if *m.last().unwrap() != 1 {
            return Err(Error::InvalidField("modulus must be monic".into()));
        }
        let k = (m.len() - 1) as u32;
        if k > MAX_DEGREE {
            return Err(Error::InvalidField(format!("extension degree {k} is too large")));
        }
        let size = (p as u64)
            .checked_pow(k)
            .filter(|&s| s <= MAX_FIELD_SIZE)
            .ok_or_else(|| Error::InvalidField(format!("field of size {p}^{k} is too large")))?;
        if !is_irreducible(p, &m) {
            return Err(Error::InvalidField(format!(
                "modulus {} is reducible over F_{p}",
                format_digits(&m, generator)
            )));
        }
        Ok(GaloisField {
            p,
            k,
            modulus: m,
            generator: Some(generator.to_string()),
            size: size as u32,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn generator_name(&self) -> Option<&str> {
        self.generator.as_deref()
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The class of the adjoined generator, when `k > 1`.
    pub fn generator(&self) -> Option<Elem> {
        (self.k > 1).then_some(self.p)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.size
    }

    pub fn from_i64(&self, v: i64) -> Elem {
        v.rem_euclid(self.p as i64) as Elem
    }

    pub fn from_u64(&self, v: u64) -> Elem {
        (v % self.p as u64) as Elem
    }

    fn digits(&self, a: Elem) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.k as usize);
        let mut a = a;
        for _ in 0..self.k {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    fn pack_digits(&self, d: &[u32]) -> Elem {
        d.iter().rev().fold(0u32, |acc, &x| acc * self.p + x)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.k == 1 {
            let s = a + b;
            if s >= self.p {
                s - self.p
            } else {
                s
            }
        } else {
            let (da, db) = (self.digits(a), self.digits(b));
            let d: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
            self.pack_digits(&d)
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.k == 1 {
            if a == 0 {
                0
            } else {
                self.p - a
            }
        } else {
            let d: Vec<u32> = self.digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
            self.pack_digits(&d)
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if self.k == 1 {
            ((a as u64 * b as u64) % self.p as u64) as Elem
        } else {
            let (da, db) = (self.digits(a), self.digits(b));
            let p = self.p as u64;
            let mut prod = vec![0u64; da.len() + db.len() - 1];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
                }
            }
            let k = self.k as usize;
            for top in (k..prod.len()).rev() {
                let c = prod[top];
                if c != 0 {
                    for (i, &m) in self.modulus[..k].iter().enumerate() {
                        let idx = top - k + i;
                        prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
                    }
                    prod[top] = 0;
                }
            }
            let d: Vec<u32> = prod[..k].iter().map(|&x| x as u32).collect();
            self.pack_digits(&d)
        }
    }

    pub fn pow(&self, a: Elem, mut n: u64) -> Elem {
        let mut base = a;
        let mut acc: Elem = 1;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(a != 0, "inverse of zero in F_{}", self.size);
        self.pow(a, self.size as u64 - 2)
    }

    /// `a^(p^j)`.
    pub fn frobenius(&self, a: Elem, j: u32) -> Elem {
        let j = j % self.k;
        (0..j).fold(a, |x, _| self.pow(x, self.p as u64))
    }

    /// The unique `d` with `d^p = a`, i.e. `a^(p^(k-1))`.
    pub fn pth_root(&self, a: Elem) -> Elem {
        self.frobenius(a, self.k - 1)
    }

    /// The unique `d` with `d^(p^e) = a`, i.e. `a^(p^(k e - e))`.
    pub fn root_iter(&self, a: Elem, e: u32) -> Elem {
        let k = self.k as u64;
        let shift = ((k - 1) * e as u64) % k;
        self.frobenius(a, shift as u32)
    }

    /// Writes an element; extension elements with several terms are parenthesized.
    pub fn fmt_elem(&self, a: Elem, f: &mut impl fmt::Write) -> fmt::Result {
        if self.k == 1 {
            return write!(f, "{a}");
        }
        let d = self.digits(a);
        let nonzero = d.iter().filter(|&&x| x != 0).count();
        let s = format_digits(&d, self.generator.as_deref().unwrap_or("t"));
        if nonzero > 1 {
            write!(f, "({s})")
        } else {
            write!(f, "{s}")
        }
    }

    pub fn elem_to_string(&self, a: Elem) -> String {
        let mut s = String::new();
        self.fmt_elem(a, &mut s).expect("writing to a String");
        s
    }
}

impl fmt::Display for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "F{}", self.p)
        } else {
            let g = self.generator.as_deref().unwrap_or("t");
            write!(f, "F{}^{}:{}", self.p, self.k, format_digits(&self.modulus, g))
        }
    }
}

fn format_digits(d: &[u32], var: &str) -> String {
    let mut parts = Vec::new();
    for (i, &c) in d.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        parts.push(match (c, mono.is_empty()) {
            (_, true) => c.to_string(),
            (1, false) => mono,
            (_, false) => format!("{c}*{mono}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Remainder of `a` modulo the monic polynomial `m` over `F_p` (low degree first).
fn poly_rem(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    let p = p as u64;
    let mut r: Vec<u64> = a.iter().map(|&x| x as u64).collect();
    let dm = m.len() - 1;
    while r.len() > dm {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if c != 0 {
            for (i, &mi) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - c) * mi as u64) % p;
            }
        }
        r.pop();
    }
    r.into_iter().map(|x| x as u32).collect()
}

/// Exhaustive search for a monic factor of degree `1..=deg/2`.
fn is_irreducible(p: u32, m: &[u32]) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                cand.push((c % p as u64) as u32);
                c /= p as u64;
            }
            cand.push(1);
            if poly_rem(p, m, &cand).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> GaloisField {
        GaloisField::extension(3, &[1, 0, 1], "i").unwrap()
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert!(GaloisField::prime(12).is_err());
        assert!(GaloisField::prime(1).is_err());
        assert!(GaloisField::prime(13).is_ok());
    }

    #[test]
    fn rejects_reducible_modulus() {
        // t^2 + 1 = (t + 2)(t + 3) over F_5
        assert!(GaloisField::extension(5, &[1, 0, 1], "t").is_err());
        assert!(GaloisField::extension(3, &[2, 0, 1], "t").is_err());
        assert!(GaloisField::extension(3, &[1, 0, 2], "t").is_err());
        assert!(GaloisField::extension(2, &[1, 1, 0, 1], "t").is_ok());
    }

    #[test]
    fn every_nonzero_element_is_invertible() {
        for field in [GaloisField::prime(13).unwrap(), f9(), GaloisField::extension(2, &[1, 1, 0, 1], "t").unwrap()] {
            for a in field.elements().skip(1) {
                assert_eq!(field.mul(a, field.inv(a)), 1, "{field} {a}");
            }
            for a in field.elements() {
                assert_eq!(field.pow(a, field.size() as u64), a);
            }
        }
    }

    #[test]
    fn pth_root_of_zero() {
        assert_eq!(GaloisField::prime(13).unwrap().pth_root(0), 0);
        assert_eq!(f9().pth_root(0), 0);
    }

    #[test]
    fn pth_root_in_prime_field_is_identity() {
        let f = GaloisField::prime(13).unwrap();
        // brute force: the unique d with d^13 = 5
        let found: Vec<Elem> = f.elements().filter(|&d| f.pow(d, 13) == 5).collect();
        assert_eq!(found, vec![5]);
        assert_eq!(f.pth_root(5), 5);
    }

    #[test]
    fn pth_root_in_f9() {
        let f = f9();
        let i = f.generator().unwrap();
        let found: Vec<Elem> = f.elements().filter(|&d| f.pow(d, 3) == i).collect();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0], f.neg(i));
        assert_eq!(f.pth_root(i), f.neg(i));
        assert_eq!(f.mul(i, i), f.from_i64(-1));
    }

    #[test]
    fn iterated_roots_match_repeated_roots() {
        let f = GaloisField::extension(2, &[1, 1, 0, 1], "t").unwrap();
        for a in f.elements() {
            for e in 0..5 {
                let slow = (0..e).fold(a, |x, _| f.pth_root(x));
                assert_eq!(f.root_iter(a, e), slow);
                assert_eq!(f.pow(f.root_iter(a, e), 2u64.pow(e)), a);
            }
        }
    }

    #[test]
    fn display() {
        let f = f9();
        assert_eq!(f.to_string(), "F3^2:i^2 + 1");
        assert_eq!(f.elem_to_string(f.generator().unwrap()), "i");
        assert_eq!(f.elem_to_string(f.add(f.generator().unwrap(), 2)), "(i + 2)");
    }
}
