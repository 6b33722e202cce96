//! Test ideals `τ(f^c)` of a single polynomial.
//!
//! For `α = a/(q−1)` with `0 < α ≤ 1` the chain `K_0 = (f)`,
//! `K_{s+1} = (f^a K_s)^[1/q]` satisfies `K_s = (f^{⌈α q^s⌉})^[1/q^s]`; it
//! ascends to `τ(f^α)` and stays put once two consecutive entries agree.
//! Likewise `L_1 = (f^a)^[1/q]`, `L_{ℓ+1} = (f^a L_ℓ)^[1/q]` descends to
//! `τ(f^{α−ε})`. Exponents above one are reduced with `τ(f^{c+1}) = f·τ(f^c)`.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::exponent::RationalExponent;
use crate::flag::{stabilize, FlagTrace, IterationPolicy};
use crate::frobenius::{frobenius_root, frobenius_root_of_product};
use crate::ideal::Ideal;
use crate::poly::Polynomial;

fn check_nonzero(f: &Polynomial) -> Result<()> {
    if f.is_zero() {
        Err(Error::Precondition("the polynomial must be nonzero".into()))
    } else {
        Ok(())
    }
}

fn check_characteristic(f: &Polynomial, alpha: &RationalExponent) -> Result<()> {
    let p = f.ring().characteristic();
    if alpha.characteristic() != p {
        return Err(Error::Precondition(format!(
            "exponent {alpha} is over p = {} but the ring has characteristic {p}",
            alpha.characteristic()
        )));
    }
    Ok(())
}

/// `τ(f^{s/p^b}) = (f^s)^[1/p^b]`.
pub fn tau_dyadic(f: &Polynomial, s: u64, b: u32) -> Result<Ideal> {
    check_nonzero(f)?;
    let ring = f.ring();
    if f.is_unit() || s == 0 {
        return Ok(Ideal::unit(ring));
    }
    let p = ring.characteristic();
    let q = p
        .checked_pow(b)
        .ok_or_else(|| Error::ExponentOverflow(format!("{p}^{b}")))?;
    let (whole, rest) = (s / q, s % q);
    let shift = f.pow(whole)?;
    if rest == 0 {
        return Ok(Ideal::principal(&shift));
    }
    let root = frobenius_root(&Ideal::principal(&f.pow(rest)?), q)?;
    Ok(root.scale(&shift).to_groebner())
}

/// The ascending chain for `τ(f^α)`, each entry multiplied by `f^⌊α'⌋` as needed.
pub fn tau_alpha_trace(f: &Polynomial, alpha: &RationalExponent, policy: IterationPolicy) -> Result<FlagTrace> {
    check_nonzero(f)?;
    check_characteristic(f, alpha)?;
    let ring = f.ring();
    let recurrence = format!("K_(s+1) = (f^{} K_s)^[1/{}]", alpha.numerator(), alpha.q());
    if f.is_unit() {
        let unit = Ideal::unit(ring);
        return Ok(FlagTrace { ideals: vec![unit.clone(), unit], stabilization_index: 1, recurrence });
    }
    let (m, base) = alpha.skoda_split();
    let q = base.q();
    let fa = f.pow(base.numerator())?;
    let first = frobenius_root_of_product(&fa, &Ideal::principal(f), q)?;
    let mut trace = stabilize(first, &recurrence, policy, |k| frobenius_root_of_product(&fa, k, q))?;
    if m > 0 {
        let shift = f.pow(m)?;
        for ideal in &mut trace.ideals {
            *ideal = ideal.scale(&shift).to_groebner();
        }
    }
    Ok(trace)
}

/// `τ(f^α)` for `α = r/(p^e − 1)`.
pub fn tau_alpha(f: &Polynomial, alpha: &RationalExponent, policy: IterationPolicy) -> Result<Ideal> {
    Ok(tau_alpha_trace(f, alpha, policy)?.into_limit())
}

/// The descending chain for `τ(f^{α−ε})`.
pub fn tau_minus_epsilon_trace(
    f: &Polynomial,
    alpha: &RationalExponent,
    policy: IterationPolicy,
) -> Result<FlagTrace> {
    check_nonzero(f)?;
    check_characteristic(f, alpha)?;
    let ring = f.ring();
    let recurrence = format!("L_(l+1) = (f^{} L_l)^[1/{}]", alpha.numerator(), alpha.q());
    if f.is_unit() {
        let unit = Ideal::unit(ring);
        return Ok(FlagTrace { ideals: vec![unit.clone(), unit], stabilization_index: 1, recurrence });
    }
    let (m, base) = alpha.skoda_split();
    let q = base.q();
    let fa = f.pow(base.numerator())?;
    let first = frobenius_root(&Ideal::principal(&fa), q)?;
    let mut trace = stabilize(first, &recurrence, policy, |l| frobenius_root_of_product(&fa, l, q))?;
    if m > 0 {
        let shift = f.pow(m)?;
        for ideal in &mut trace.ideals {
            *ideal = ideal.scale(&shift).to_groebner();
        }
    }
    Ok(trace)
}

/// `τ(f^{α−ε})` for all sufficiently small `ε > 0`.
pub fn tau_minus_epsilon(f: &Polynomial, alpha: &RationalExponent, policy: IterationPolicy) -> Result<Ideal> {
    Ok(tau_minus_epsilon_trace(f, alpha, policy)?.into_limit())
}

/// `τ(f^c)` for an arbitrary positive rational `c`.
///
/// Writing `c = a/(p^b d)` with `p ∤ d`, this is `τ(f^{a/d})^[1/p^b]`.
pub fn tau_general(f: &Polynomial, c: Ratio<u64>, policy: IterationPolicy) -> Result<Ideal> {
    check_nonzero(f)?;
    if *c.numer() == 0 {
        return Err(Error::Precondition("the exponent must be positive".into()));
    }
    let p = f.ring().characteristic();
    let (num, mut den) = (*c.numer(), *c.denom());
    let mut b = 0u32;
    while den % p == 0 {
        den /= p;
        b += 1;
    }
    if den == 1 {
        return tau_dyadic(f, num, b);
    }
    let alpha = RationalExponent::from_fraction(num, den, p)?;
    let tau = tau_alpha(f, &alpha, policy)?;
    let q = p
        .checked_pow(b)
        .ok_or_else(|| Error::ExponentOverflow(format!("{p}^{b}")))?;
    frobenius_root(&tau, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_ideal, parse_poly, parse_ring};

    fn alpha(r: u64, e: u32, p: u64) -> RationalExponent {
        RationalExponent::new(r, e, p).unwrap()
    }

    fn closed_form(f: &Polynomial, exponent: u64, q: u64) -> Ideal {
        frobenius_root(&Ideal::principal(&f.pow(exponent).unwrap()), q).unwrap()
    }

    #[test]
    fn cusp_values() {
        let r = parse_ring("F13[x,y]").unwrap();
        let f = parse_poly("x^2 + y^3", &r).unwrap();
        let pol = IterationPolicy::default();
        for a in [10, 11] {
            assert_eq!(tau_alpha(&f, &alpha(a, 1, 13), pol).unwrap().to_strings(), ["x", "y"]);
        }
        assert!(tau_alpha(&f, &alpha(9, 1, 13), pol).unwrap().is_unit());
        assert!(tau_minus_epsilon(&f, &alpha(10, 1, 13), pol).unwrap().is_unit());
        assert_eq!(tau_minus_epsilon(&f, &alpha(11, 1, 13), pol).unwrap().to_strings(), ["x", "y"]);
    }

    #[test]
    fn chain_matches_closed_form() {
        let r = parse_ring("F3[x,y]").unwrap();
        let f = parse_poly("x^2 + y^3 + x*y", &r).unwrap();
        let a = alpha(5, 2, 3); // 5/8
        let (fa, q) = (f.pow(5).unwrap(), 9u64);
        let mut k = Ideal::principal(&f);
        let mut l = Ideal::unit(&r);
        let mut geometric = 0u64;
        for s in 1..=3u32 {
            k = frobenius_root_of_product(&fa, &k, q).unwrap();
            l = frobenius_root_of_product(&fa, &l, q).unwrap();
            geometric = geometric * q + 5;
            assert_eq!(k, closed_form(&f, geometric + 1, q.pow(s)), "K_{s}");
            assert_eq!(l, closed_form(&f, geometric, q.pow(s)), "L_{s}");
        }
        let tau = tau_alpha(&f, &a, IterationPolicy::default()).unwrap();
        assert!(tau.contains_ideal(&k));
    }

    #[test]
    fn monomial_examples() {
        let r = parse_ring("F7[x,y]").unwrap();
        let x = parse_poly("x", &r).unwrap();
        let pol = IterationPolicy::default();
        assert_eq!(tau_general(&x, Ratio::new(5, 3), pol).unwrap().to_strings(), ["x"]);
        assert_eq!(tau_general(&x, Ratio::new(5, 2), pol).unwrap().to_strings(), ["x^2"]);
        assert!(tau_alpha(&x, &alpha(6, 1, 7), pol).unwrap().to_strings() == ["x"]);
        assert!(tau_minus_epsilon(&x, &alpha(6, 1, 7), pol).unwrap().is_unit());
        let g = parse_poly("x^3*y^2", &r).unwrap();
        assert_eq!(tau_alpha(&g, &alpha(3, 1, 7), pol).unwrap().to_strings(), ["x*y"]);
        assert_eq!(tau_alpha(&g, &alpha(4, 1, 7), pol).unwrap().to_strings(), ["x^2*y"]);
    }

    #[test]
    fn general_exponents_in_characteristic_two() {
        let r = parse_ring("F2[x,y]").unwrap();
        let x = parse_poly("x", &r).unwrap();
        let pol = IterationPolicy::default();
        assert_eq!(tau_general(&x, Ratio::new(5, 3), pol).unwrap().to_strings(), ["x"]);
        assert_eq!(tau_general(&x, Ratio::new(9, 4), pol).unwrap().to_strings(), ["x^2"]);
        assert_eq!(tau_general(&x, Ratio::new(7, 12), pol).unwrap(), Ideal::unit(&r));
    }

    #[test]
    fn skoda_shift_in_trace() {
        let r = parse_ring("F5[x,y]").unwrap();
        let f = parse_poly("x*y + y^2", &r).unwrap();
        let trace = tau_alpha_trace(&f, &alpha(10, 1, 5), IterationPolicy::default()).unwrap();
        assert!(trace.ideals.iter().all(|i| i.contains(&f.pow(2).unwrap())));
        let base = tau_alpha(&f, &alpha(2, 1, 5), IterationPolicy::default()).unwrap();
        assert_eq!(*trace.limit(), base.scale(&f.pow(2).unwrap()));
    }

    #[test]
    fn units_and_zero() {
        let r = parse_ring("F5[x]").unwrap();
        let one = Polynomial::one(&r);
        assert!(tau_alpha(&one, &alpha(7, 1, 5), IterationPolicy::default()).unwrap().is_unit());
        assert!(tau_dyadic(&Polynomial::zero(&r), 1, 1).is_err());
        let x = parse_poly("x", &r).unwrap();
        assert!(tau_alpha(&x, &alpha(1, 1, 7), IterationPolicy::default()).is_err());
        assert_eq!(tau_dyadic(&x, 26, 1).unwrap(), parse_ideal("x^5", &r).unwrap());
    }
}
