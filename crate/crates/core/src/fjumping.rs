//! F-jumping ideals and the flag `I^{j+1} = ((I^j)^[q] : f^r)` started at `τ(f^α)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponent::RationalExponent;
use crate::flag::{stabilize, FlagTrace, IterationPolicy};
use crate::frobenius::{bracket_power, frobenius_root_of_product};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::testideal::tau_alpha;

/// Answer of the jumping-number decision together with its certificate.
#[derive(Debug, Clone)]
pub struct JumpVerdict {
    pub is_jumping: bool,
    /// The F-jumping ideal; the unit ideal exactly when `α` is not a jumping number.
    pub certificate: Ideal,
    pub trace: FlagTrace,
}

#[derive(Debug, Clone, Serialize)]
struct VerdictJson {
    is_jumping: bool,
    ideal: Vec<String>,
}

impl JumpVerdict {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(VerdictJson { is_jumping: self.is_jumping, ideal: self.certificate.to_strings() })
            .expect("plain data serializes")
    }
}

/// One flag step `(I^[q] : g)`, with `g = f^r` precomputed.
pub fn flag_step(ideal: &Ideal, fr: &Polynomial, q: u64) -> Result<Ideal> {
    bracket_power(ideal, q)?.colon(fr)
}

/// The F-flag of `f` and `α`, stopped at its first repeat.
pub fn fflag(f: &Polynomial, alpha: &RationalExponent, policy: IterationPolicy) -> Result<FlagTrace> {
    let first = tau_alpha(f, alpha, policy)?;
    let q = alpha.q();
    let fr = f.pow(alpha.numerator())?;
    let recurrence = format!("I_(j+1) = (I_j^[{q}] : f^{})", alpha.numerator());
    stabilize(first, &recurrence, policy, |i| flag_step(i, &fr, q))
}

/// The F-jumping ideal, the union of the flag.
pub fn fjumping_ideal(f: &Polynomial, alpha: &RationalExponent, policy: IterationPolicy) -> Result<Ideal> {
    Ok(fflag(f, alpha, policy)?.into_limit())
}

pub fn is_fjumping_number(f: &Polynomial, alpha: &RationalExponent, policy: IterationPolicy) -> Result<JumpVerdict> {
    let trace = fflag(f, alpha, policy)?;
    let certificate = trace.limit().clone();
    Ok(JumpVerdict { is_jumping: !certificate.is_unit(), certificate, trace })
}

/// Smallest `ℓ ≤ max_level` with `f^{r(1+q+…+q^{ℓ−1})}·J ⊆ I^[q^ℓ]`, or `None`.
///
/// Requires `I ⊆ J`, `f^r I ⊆ I^[q]` and `f^r J ⊆ J^[q]`.
pub fn same_fsubmodule(
    i: &Ideal,
    j: &Ideal,
    f: &Polynomial,
    alpha: &RationalExponent,
    max_level: u32,
) -> Result<Option<u32>> {
    let q = alpha.q();
    let fr = f.pow(alpha.numerator())?;
    if !j.contains_ideal(i) {
        return Err(Error::Precondition(format!("{i} is not contained in {j}")));
    }
    for (name, ideal) in [("I", i), ("J", j)] {
        if !bracket_power(ideal, q)?.contains_ideal(&ideal.scale(&fr)) {
            return Err(Error::Precondition(format!(
                "f^{} * {name} is not contained in {name}^[{q}] for {name} = {ideal}",
                alpha.numerator()
            )));
        }
    }
    // T_ℓ = (f^{r(1+…+q^{ℓ−1})} J)^[1/q^ℓ]; containment in I^[q^ℓ] is T_ℓ ⊆ I.
    let mut t = j.clone();
    for level in 1..=max_level {
        t = frobenius_root_of_product(&fr, &t, q)?;
        if i.contains_ideal(&t) {
            return Ok(Some(level));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_ideal, parse_poly, parse_ring};
    use crate::testideal::tau_minus_epsilon;

    fn cusp() -> Polynomial {
        let r = parse_ring("F13[x,y]").unwrap();
        parse_poly("x^2 + y^3", &r).unwrap()
    }

    fn alpha(r: u64, e: u32, p: u64) -> RationalExponent {
        RationalExponent::new(r, e, p).unwrap()
    }

    #[test]
    fn cusp_flags() {
        let f = cusp();
        let pol = IterationPolicy::default();
        let t = fflag(&f, &alpha(11, 1, 13), pol).unwrap();
        assert_eq!(t.to_strings(), vec![vec!["x", "y"], vec!["1"], vec!["1"]]);
        assert_eq!(t.stabilization_index, 2);
        let t = fflag(&f, &alpha(10, 1, 13), pol).unwrap();
        assert_eq!(t.to_strings(), vec![vec!["x", "y"], vec!["x", "y"]]);
        assert_eq!(t.stabilization_index, 1);
        let v = is_fjumping_number(&f, &alpha(10, 1, 13), pol).unwrap();
        assert!(v.is_jumping);
        assert_eq!(v.to_json().to_string(), r#"{"ideal":["x","y"],"is_jumping":true}"#);
    }

    #[test]
    fn monomial_hypersurface() {
        let r = parse_ring("F7[x,y]").unwrap();
        let f = parse_poly("x^3*y^2", &r).unwrap();
        let j = fjumping_ideal(&f, &alpha(4, 1, 7), IterationPolicy::default()).unwrap();
        assert_eq!(j, parse_ideal("x^2", &r).unwrap());
    }

    #[test]
    fn same_submodule_examples() {
        let f = cusp();
        let pol = IterationPolicy::default();
        for (a, expected) in [(11, true), (10, false)] {
            let al = alpha(a, 1, 13);
            let i = tau_alpha(&f, &al, pol).unwrap();
            let j = tau_minus_epsilon(&f, &al, pol).unwrap();
            assert_eq!(same_fsubmodule(&i, &j, &f, &al, 4).unwrap().is_some(), expected, "{a}/12");
            assert_eq!(same_fsubmodule(&j, &j, &f, &al, 4).unwrap(), Some(1));
        }
        let r = f.ring();
        let bad = same_fsubmodule(&Ideal::unit(r), &Ideal::maximal(r), &f, &alpha(10, 1, 13), 2);
        assert!(matches!(bad, Err(Error::Precondition(_))));
    }

    #[test]
    fn smooth_divisor() {
        let r = parse_ring("F5[x,y]").unwrap();
        let x = parse_poly("x", &r).unwrap();
        let pol = IterationPolicy::default();
        for a in 1..4 {
            assert!(!is_fjumping_number(&x, &alpha(a, 1, 5), pol).unwrap().is_jumping);
        }
        assert!(is_fjumping_number(&x, &alpha(4, 1, 5), pol).unwrap().is_jumping);
    }
}
