//! Checkers for structural identities, shared by property tests and the
//! acceptance suite. Each returns `Ok(true)` when the identity holds.

use std::sync::Arc;

use num_rational::Ratio;
use rand::Rng;

use crate::error::Result;
use crate::exponent::RationalExponent;
use crate::fjacobian::fjacobian_from_seed;
use crate::fjumping::{fflag, fjumping_ideal};
use crate::flag::IterationPolicy;
use crate::frobenius::{bracket_power, frobenius_root};
use crate::ideal::Ideal;
use crate::oracles::{monomial_root_oracle, random_polynomial};
use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring};
use crate::testideal::{tau_alpha, tau_general, tau_minus_epsilon};

/// `τ(f^α)` straight from `(f^{⌈α q^s⌉})^[1/q^s]`, without the chain or the
/// integer-part reduction; stops when two consecutive levels agree.
pub fn tau_by_closed_form(f: &Polynomial, alpha: &RationalExponent, max_level: u32) -> Result<Option<Ideal>> {
    let q = alpha.q();
    let value = alpha.value();
    let mut prev: Option<Ideal> = None;
    for s in 1..=max_level {
        let qs = q.pow(s);
        let exponent = (value * Ratio::from(qs as u128)).ceil().to_integer() as u64;
        let k = frobenius_root(&Ideal::principal(&f.pow(exponent)?), qs)?;
        if prev.as_ref() == Some(&k) {
            return Ok(Some(k));
        }
        prev = Some(k);
    }
    Ok(None)
}

/// `c ≤ c'` implies `τ(f^{c'}) ⊆ τ(f^c)`.
pub fn tau_monotone(f: &Polynomial, c: Ratio<u64>, c2: Ratio<u64>, policy: IterationPolicy) -> Result<bool> {
    let (lo, hi) = if c <= c2 { (c, c2) } else { (c2, c) };
    Ok(tau_general(f, lo, policy)?.contains_ideal(&tau_general(f, hi, policy)?))
}

/// `τ(f^{pλ}) ⊆ τ(f^λ)^[p]`.
pub fn mult_p(f: &Polynomial, lambda: Ratio<u64>, policy: IterationPolicy) -> Result<bool> {
    let p = f.ring().characteristic();
    let big = tau_general(f, lambda * p, policy)?;
    Ok(bracket_power(&tau_general(f, lambda, policy)?, p)?.contains_ideal(&big))
}

/// `τ(f^{α+1}) = f·τ(f^α)`, the left side computed by [`tau_by_closed_form`].
/// `None` when the closed form did not settle within `max_level`.
pub fn skoda(f: &Polynomial, alpha: &RationalExponent, policy: IterationPolicy, max_level: u32) -> Result<Option<bool>> {
    let shifted = alpha.plus_integer(1)?;
    let Some(left) = tau_by_closed_form(f, &shifted, max_level)? else { return Ok(None) };
    Ok(Some(left == tau_alpha(f, alpha, policy)?.scale(f)))
}

/// `τ(f^α) ⊆ τ(f^{α−ε})`, with equality exactly when `α` is not a jumping number.
pub fn left_limit(f: &Polynomial, alpha: &RationalExponent, policy: IterationPolicy) -> Result<bool> {
    let tau = tau_alpha(f, alpha, policy)?;
    let left = tau_minus_epsilon(f, alpha, policy)?;
    let jumping = !fjumping_ideal(f, alpha, policy)?.is_unit();
    Ok(left.contains_ideal(&tau) && (tau == left) != jumping)
}

/// The flag ascends.
pub fn flag_ascends(f: &Polynomial, alpha: &RationalExponent, policy: IterationPolicy) -> Result<bool> {
    let trace = fflag(f, alpha, policy)?;
    Ok(trace.ideals.windows(2).all(|w| w[1].contains_ideal(&w[0])))
}

/// `I^j(f^{qα}) = I^{j−1}(f^α)^[q]` for `2 ≤ j ≤ depth`.
pub fn flag_shift(f: &Polynomial, alpha: &RationalExponent, depth: usize, policy: IterationPolicy) -> Result<bool> {
    let q = alpha.q();
    let small = fflag(f, alpha, policy)?;
    let big = fflag(f, &alpha.times_q()?, policy)?;
    for j in 2..=depth.max(2) {
        if *big.entry(j) != bracket_power(small.entry(j - 1), q)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `𝔍(f^{pα}) = 𝔍(f^α)^[p]`.
pub fn fjumping_p_power(f: &Polynomial, alpha: &RationalExponent, policy: IterationPolicy) -> Result<bool> {
    let p = f.ring().characteristic();
    let big = fjumping_ideal(f, &alpha.times_p()?, policy)?;
    Ok(big == bracket_power(&fjumping_ideal(f, alpha, policy)?, p)?)
}

/// `f^ℓ·𝔍(f^α) ⊆ 𝔍(f^{α+ℓ})`.
pub fn fjumping_shift(f: &Polynomial, alpha: &RationalExponent, shift: u64, policy: IterationPolicy) -> Result<bool> {
    let big = fjumping_ideal(f, &alpha.plus_integer(shift)?, policy)?;
    Ok(big.contains_ideal(&fjumping_ideal(f, alpha, policy)?.scale(&f.pow(shift)?)))
}

/// `f^r I ⊆ I^[q]` for a candidate root `I`.
pub fn is_root_candidate(ideal: &Ideal, f: &Polynomial, alpha: &RationalExponent) -> Result<bool> {
    let fr = f.pow(alpha.numerator())?;
    Ok(bracket_power(ideal, alpha.q())?.contains_ideal(&ideal.scale(&fr)))
}

/// Nonzero ideals strictly inside `τ(f^α)` built from it, none of which may satisfy
/// the root condition.
pub fn root_minimality(f: &Polynomial, alpha: &RationalExponent, policy: IterationPolicy) -> Result<bool> {
    let tau = tau_alpha(f, alpha, policy)?;
    let ring = f.ring();
    let mut shrunk = vec![tau.product(&Ideal::maximal(ring))];
    for v in 0..ring.nvars() {
        shrunk.push(tau.scale(&Polynomial::var(ring, v)));
    }
    shrunk.push(tau.scale(f));
    if !is_root_candidate(&tau, f, alpha)? {
        return Ok(false);
    }
    for ideal in shrunk {
        if ideal != tau && is_root_candidate(&ideal, f, alpha)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `J_F` from `seed^[p]` for `f^p` equals `J_F(f)^[p]`.
pub fn fjacobian_p_power(f: &Polynomial, seed: &Ideal, policy: IterationPolicy) -> Result<bool> {
    let p = f.ring().characteristic();
    let small = fjacobian_from_seed(f, seed, policy)?.into_limit();
    let big = fjacobian_from_seed(&f.pow(p)?, &bracket_power(seed, p)?, policy)?.into_limit();
    Ok(big == bracket_power(&small, p)?)
}

/// Homogeneous input gives a homogeneous `J_F`.
pub fn fjacobian_homogeneous(f: &Polynomial, seed: &Ideal, policy: IterationPolicy) -> Result<bool> {
    Ok(fjacobian_from_seed(f, seed, policy)?.limit().is_homogeneous())
}

pub fn monomial_root_agrees(ideal: &Ideal, q: u64) -> Result<bool> {
    Ok(monomial_root_oracle(ideal, q)? == frobenius_root(ideal, q)?)
}

/// A nonconstant polynomial vanishing at the origin.
pub fn random_local_polynomial(ring: &Arc<Ring>, rng: &mut impl Rng, max_degree: u32, max_terms: usize) -> Polynomial {
    loop {
        let f = random_polynomial(ring, rng, max_degree, max_terms);
        let g = f.sub(&Polynomial::constant(ring, f.constant_coefficient()));
        if !g.is_zero() {
            return g;
        }
    }
}

/// A random homogeneous polynomial of the given degree.
pub fn random_homogeneous(ring: &Arc<Ring>, rng: &mut impl Rng, degree: u32, max_terms: usize) -> Polynomial {
    let n = ring.nvars();
    let size = ring.field().size();
    loop {
        let terms: Vec<(Monomial, u32)> = (0..rng.gen_range(1..=max_terms.max(1)))
            .map(|_| {
                let mut exps = vec![0u32; n];
                for _ in 0..degree {
                    exps[rng.gen_range(0..n)] += 1;
                }
                (Monomial::from_exponents(&exps).expect("small exponents"), rng.gen_range(1..size))
            })
            .collect();
        let f = Polynomial::from_terms(ring, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// A random monomial ideal with up to `max_gens` generators of degree at most `max_degree`.
pub fn random_monomial_ideal(ring: &Arc<Ring>, rng: &mut impl Rng, max_gens: usize, max_degree: u32) -> Ideal {
    let gens = (0..rng.gen_range(1..=max_gens.max(1)))
        .map(|_| {
            let exps: Vec<u32> = (0..ring.nvars()).map(|_| rng.gen_range(0..=max_degree)).collect();
            Polynomial::term(ring, 1, Monomial::from_exponents(&exps).expect("small exponents"))
        })
        .collect();
    Ideal::new(ring, gens)
}
