//! F-Jacobian ideals of hypersurfaces and related checks.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flag::{stabilize, FlagTrace, IterationPolicy};
use crate::frobenius::{bracket_power, frobenius_root};
use crate::ideal::Ideal;
use crate::poly::Polynomial;

fn check_same_ring(a: &Polynomial, b: &Polynomial) -> Result<()> {
    if **a.ring() == **b.ring() {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// Membership in `m^[p] = (x_1^p, …, x_n^p)`: every term has some exponent `≥ p`.
fn in_bracket_maximal(g: &Polynomial, p: u64) -> bool {
    g.terms()
        .iter()
        .all(|(m, _)| m.exponents().iter().any(|&a| a as u64 >= p))
}

/// Fedder's criterion at the origin: `R/(f)` is F-pure there iff `f^{p−1} ∉ m^[p]`.
pub fn fedder_fpure_at_origin(f: &Polynomial) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::Precondition("the polynomial must be nonzero".into()));
    }
    if f.constant_coefficient() != 0 {
        return Err(Error::NotLocal(format!("{f} does not vanish at the origin")));
    }
    let p = f.ring().characteristic();
    Ok(!in_bracket_maximal(&f.pow(p - 1)?, p))
}

/// The flag `I^{j+1} = ((I^j)^[p] : f^{p−1})` from `seed`; its limit is `J_F(f)`.
pub fn fjacobian_from_seed(f: &Polynomial, seed: &Ideal, policy: IterationPolicy) -> Result<FlagTrace> {
    if **f.ring() != **seed.ring() {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Err(Error::Precondition("the polynomial must be nonzero".into()));
    }
    let p = f.ring().characteristic();
    let fp = f.pow(p - 1)?;
    if !seed.contains(f) {
        return Err(Error::Precondition(format!("seed {seed} does not contain {f}")));
    }
    let bracket = bracket_power(seed, p)?;
    if !bracket.contains_ideal(&seed.scale(&fp)) {
        return Err(Error::Precondition(format!(
            "f^{} * seed is not contained in seed^[{p}] for seed {seed}",
            p - 1
        )));
    }
    let recurrence = format!("I_(j+1) = (I_j^[{p}] : f^{})", p - 1);
    stabilize(seed.clone(), &recurrence, policy, |i| bracket_power(i, p)?.colon(&fp))
}

/// The three conditions characterizing `J_F(f)` as a minimal fixed ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FixedIdealConditions {
    pub contains_f: bool,
    pub differs_from_principal: bool,
    pub fixed: bool,
}

impl FixedIdealConditions {
    pub fn all(&self) -> bool {
        self.contains_f && self.differs_from_principal && self.fixed
    }
}

/// Checks `f ∈ I`, `I ≠ (f)` and `(I^[p] : f^{p−1}) = I`.
pub fn fixed_ideal_conditions(ideal: &Ideal, f: &Polynomial) -> Result<FixedIdealConditions> {
    if **f.ring() != **ideal.ring() {
        return Err(Error::RingMismatch);
    }
    let p = f.ring().characteristic();
    let fixed = if f.is_zero() {
        ideal.is_unit()
    } else {
        bracket_power(ideal, p)?.colon(&f.pow(p - 1)?)? == *ideal
    };
    Ok(FixedIdealConditions {
        contains_f: ideal.contains(f),
        differs_from_principal: *ideal != Ideal::principal(f),
        fixed,
    })
}

pub fn minimal_fixed_ideal_check(ideal: &Ideal, f: &Polynomial) -> Result<bool> {
    Ok(fixed_ideal_conditions(ideal, f)?.all())
}

#[derive(Debug, Clone)]
pub struct LeibnizResult {
    /// `f·J_F(g) + g·J_F(f)`.
    pub ideal: Ideal,
    /// Whether `f·J_F(g) ∩ g·J_F(f) = (fg)` held.
    pub intersection_identity: bool,
}

/// `J_F(fg) = f·J_F(g) + g·J_F(f)` for coprime `f`, `g`.
pub fn leibniz_fjacobian(f: &Polynomial, g: &Polynomial, jf: &Ideal, jg: &Ideal) -> Result<LeibnizResult> {
    check_same_ring(f, g)?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::Precondition("factors must be nonzero".into()));
    }
    let fg = f.checked_mul(g)?;
    let product = Ideal::principal(&fg);
    if Ideal::principal(f).intersection(&Ideal::principal(g))? != product {
        return Err(Error::NotCoprime(f.to_string(), g.to_string()));
    }
    let left = jg.scale(f);
    let right = jf.scale(g);
    let intersection_identity = left.intersection(&right)? == product;
    Ok(LeibnizResult { ideal: left.sum(&right).to_groebner(), intersection_identity })
}

#[derive(Debug, Clone)]
pub struct CyclicClosure {
    pub ideal: Ideal,
    /// All computed `A_e`, starting at `e = 1`.
    pub steps: Vec<Ideal>,
    pub stabilized: bool,
}

/// The ascending union `⋃_e ((((f^{q−1} a)^[1/q], f)^[q] : f^{q−1})`, `q = p^e`,
/// up to `e = max_step`. Each value contains `J_F(f)` when `a` is coprime to `f`.
pub fn cyclic_dmodule_ideal(f: &Polynomial, a: &Polynomial, max_step: u32) -> Result<CyclicClosure> {
    check_same_ring(f, a)?;
    if f.is_zero() || a.is_zero() {
        return Err(Error::Precondition("f and a must be nonzero".into()));
    }
    let p = f.ring().characteristic();
    let fideal = Ideal::principal(f);
    let mut steps: Vec<Ideal> = Vec::new();
    for e in 1..=max_step.max(1) {
        let q = p
            .checked_pow(e)
            .ok_or_else(|| Error::ExponentOverflow(format!("{p}^{e}")))?;
        let fq = f.pow(q - 1)?;
        let root = frobenius_root(&Ideal::principal(&fq.checked_mul(a)?), q)?;
        let next = bracket_power(&root.sum(&fideal), q)?.colon(&fq)?;
        if let Some(last) = steps.last() {
            if *last == next || next.is_unit() {
                steps.push(next.clone());
                return Ok(CyclicClosure { ideal: next, steps, stabilized: true });
            }
        }
        let done = next.is_unit();
        steps.push(next.clone());
        if done {
            return Ok(CyclicClosure { ideal: next, steps, stabilized: true });
        }
    }
    let ideal = steps.last().unwrap().clone();
    Ok(CyclicClosure { ideal, steps, stabilized: false })
}

/// Checks `(τ_i^[p] : τ_i) ⊆ (τ_{i+1}^[p] : τ_{i+1})` along a strictly ascending chain.
/// Returns the first index `i` where it fails, if any.
pub fn vassilev_step_check(chain: &[Ideal]) -> Result<Option<usize>> {
    for (i, w) in chain.windows(2).enumerate() {
        if **w[0].ring() != **w[1].ring() {
            return Err(Error::RingMismatch);
        }
        if !w[1].contains_ideal(&w[0]) || w[0] == w[1] {
            return Err(Error::Precondition(format!(
                "chain is not strictly ascending at position {i}: {} then {}",
                w[0], w[1]
            )));
        }
    }
    let Some(first) = chain.first() else { return Ok(None) };
    let p = first.ring().characteristic();
    let colons = chain
        .iter()
        .map(|t| bracket_power(t, p)?.colon_ideal(t))
        .collect::<Result<Vec<_>>>()?;
    Ok(colons.windows(2).position(|w| !w[1].contains_ideal(&w[0])))
}

/// Report label for an isolated singularity, from the computed `J_F`.
pub fn isolated_label(jf: &Ideal) -> Option<&'static str> {
    if jf.is_unit() {
        Some("fregular_inferred")
    } else if *jf == Ideal::maximal(jf.ring()) {
        Some("maximal")
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_ideal, parse_poly, parse_ring};

    #[test]
    fn fedder_on_fermat_cubic() {
        for (p, expected) in [(7, true), (5, false), (13, true), (2, false)] {
            let r = parse_ring(&format!("F{p}[x,y,z]")).unwrap();
            let f = parse_poly("x^3 + y^3 + z^3", &r).unwrap();
            assert_eq!(fedder_fpure_at_origin(&f).unwrap(), expected, "p = {p}");
        }
        let r = parse_ring("F3[x,y]").unwrap();
        assert!(fedder_fpure_at_origin(&parse_poly("x", &r).unwrap()).unwrap());
        let err = fedder_fpure_at_origin(&parse_poly("x + 1", &r).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotLocal(_)));
    }

    #[test]
    fn fermat_cubic_from_maximal_seed() {
        for (p, unit) in [(7, false), (5, true)] {
            let r = parse_ring(&format!("F{p}[x,y,z]")).unwrap();
            let f = parse_poly("x^3 + y^3 + z^3", &r).unwrap();
            let trace = fjacobian_from_seed(&f, &Ideal::maximal(&r), IterationPolicy::default()).unwrap();
            assert_eq!(trace.limit().is_unit(), unit, "p = {p}");
        }
    }

    #[test]
    fn fixed_ideal_examples() {
        let r = parse_ring("F3[x,y]").unwrap();
        let f = parse_poly("x^2 + y^2", &r).unwrap();
        assert!(minimal_fixed_ideal_check(&Ideal::maximal(&r), &f).unwrap());
        let c = fixed_ideal_conditions(&Ideal::principal(&f), &f).unwrap();
        assert!(c.contains_f && !c.differs_from_principal);
        assert!(minimal_fixed_ideal_check(&Ideal::unit(&r), &f).unwrap());
    }

    #[test]
    fn leibniz_examples() {
        let r = parse_ring("F3^2:i^2+1[x,y]").unwrap();
        let one = Ideal::unit(&r);
        let f = parse_poly("x + i*y", &r).unwrap();
        let g = parse_poly("x - i*y", &r).unwrap();
        let out = leibniz_fjacobian(&f, &g, &one, &one).unwrap();
        assert_eq!(out.ideal, Ideal::maximal(&r));
        assert!(out.intersection_identity);
        let h = parse_poly("x", &r).unwrap();
        let k = parse_poly("x + y^3", &r).unwrap();
        let out = leibniz_fjacobian(&h, &k, &one, &one).unwrap();
        assert_eq!(out.ideal, parse_ideal("x, y^3", &r).unwrap());
        let err = leibniz_fjacobian(&h, &parse_poly("x*y", &r).unwrap(), &one, &one).unwrap_err();
        assert!(matches!(err, Error::NotCoprime(..)));
    }

    #[test]
    fn cyclic_closure_examples() {
        let r = parse_ring("F5[x,y]").unwrap();
        let x = parse_poly("x", &r).unwrap();
        let one = Polynomial::one(&r);
        assert!(cyclic_dmodule_ideal(&x, &one, 2).unwrap().ideal.is_unit());
    }

    #[test]
    fn vassilev_examples() {
        let r = parse_ring("F7[x,y,z]").unwrap();
        let x = parse_poly("x", &r).unwrap();
        let chain = [Ideal::principal(&x), Ideal::unit(&r)];
        assert_eq!(vassilev_step_check(&chain).unwrap(), None);
        let f = parse_poly("x^3 + y^3 + z^3", &r).unwrap();
        let chain = [Ideal::principal(&f), Ideal::maximal(&r), Ideal::unit(&r)];
        assert_eq!(vassilev_step_check(&chain).unwrap(), None);
        let bad = [parse_ideal("x", &r).unwrap(), parse_ideal("y", &r).unwrap()];
        assert!(vassilev_step_check(&bad).is_err());
    }
}
