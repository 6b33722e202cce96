//! Frobenius powers `I^[q]` and Frobenius roots `I^[1/q]`.
//!
//! Every polynomial decomposes uniquely as `g = Σ_μ h_μ^q x^μ` with `μ` ranging
//! over exponent vectors in `[0, q)^n`. The root `I^[1/q]` is generated by all
//! `h_μ` over all generators `g` of `I`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::{Exponents, Monomial, Ring};

/// `e` with `p^e = q`.
pub fn frobenius_exponent(ring: &Ring, q: u64) -> Result<u32> {
    let p = ring.characteristic();
    let mut e = 0;
    let mut acc = 1u64;
    while acc < q {
        acc = match acc.checked_mul(p) {
            Some(a) => a,
            None => break,
        };
        e += 1;
    }
    if acc == q {
        Ok(e)
    } else {
        Err(Error::NotPowerOfP { q, p })
    }
}

/// `I^[q]`, generated by the `q`-th powers of the reduced basis.
pub fn bracket_power(ideal: &Ideal, q: u64) -> Result<Ideal> {
    let e = frobenius_exponent(ideal.ring(), q)?;
    if e == 0 {
        return Ok(ideal.clone());
    }
    let gens = ideal
        .groebner_basis()
        .iter()
        .map(|g| g.frobenius(e))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(ideal.ring(), gens))
}

/// The pairs `(μ, h_μ)` of `g = Σ_μ h_μ^q x^μ`, `q = p^e`, sorted by `μ`.
pub fn root_components(g: &Polynomial, e: u32) -> Result<Vec<(Monomial, Polynomial)>> {
    let ring = g.ring();
    let q = ring
        .characteristic()
        .checked_pow(e)
        .filter(|&q| q <= u32::MAX as u64)
        .ok_or_else(|| Error::ExponentOverflow(format!("{}^{e}", ring.characteristic())))?
        as u32;
    let field = ring.field();
    let mut buckets: HashMap<Exponents, Vec<(Monomial, u32)>> = HashMap::new();
    for (m, c) in g.terms() {
        let mut quot = Exponents::new();
        let mut rem = Exponents::new();
        for &x in m.exponents() {
            quot.push(x / q);
            rem.push(x % q);
        }
        buckets
            .entry(rem)
            .or_default()
            .push((Monomial::from_exponents(&quot)?, field.root_iter(*c, e)));
    }
    let mut keys: Vec<_> = buckets.keys().cloned().collect();
    keys.sort();
    Ok(keys
        .into_iter()
        .map(|k| {
            let h = Polynomial::from_terms(ring, buckets.remove(&k).unwrap());
            (Monomial::from_parts(k), h)
        })
        .collect())
}

/// `I^[1/q]`: the smallest ideal `J` with `I ⊆ J^[q]`.
pub fn frobenius_root(ideal: &Ideal, q: u64) -> Result<Ideal> {
    let e = frobenius_exponent(ideal.ring(), q)?;
    if e == 0 {
        return Ok(ideal.clone());
    }
    let mut pool = Vec::new();
    for g in ideal.groebner_basis() {
        pool.extend(root_components(g, e)?.into_iter().map(|(_, h)| h));
    }
    Ok(Ideal::new(ideal.ring(), pool).to_groebner())
}

/// `(f·I)^[1/q]`, skipping the basis computation of `f·I`.
pub fn frobenius_root_of_product(f: &Polynomial, ideal: &Ideal, q: u64) -> Result<Ideal> {
    let e = frobenius_exponent(ideal.ring(), q)?;
    let mut pool = Vec::new();
    for g in ideal.groebner_basis() {
        pool.extend(root_components(&f.checked_mul(g)?, e)?.into_iter().map(|(_, h)| h));
    }
    Ok(Ideal::new(ideal.ring(), pool).to_groebner())
}
