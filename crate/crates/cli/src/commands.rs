use std::sync::Arc;

use fjump::fjacobian::{fedder_fpure_at_origin, fjacobian_from_seed};
use fjump::fjumping::is_fjumping_number;
use fjump::frobenius::{bracket_power, frobenius_exponent, frobenius_root};
use fjump::parse::parse_ring_with_order;
use fjump::testideal::{tau_general, tau_minus_epsilon};
use fjump::{parse_ideal, parse_poly, Error, FlagTrace, Ideal, Polynomial, RationalExponent, Ring, Selection};
use num_rational::Ratio;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::Settings;
use crate::Failure;

fn build_ring(text: &str, settings: &Settings) -> Result<Arc<Ring>, Failure> {
    let ring = parse_ring_with_order(text, settings.order)?;
    Ok(if settings.sugar { ring.with_selection(Selection::Sugar) } else { ring })
}

pub struct PolyInput {
    ring: Arc<Ring>,
    f: Polynomial,
}

impl PolyInput {
    pub fn parse(ring: &str, poly: &str, settings: &Settings) -> Result<Self, Failure> {
        let ring = build_ring(ring, settings)?;
        let f = parse_poly(poly, &ring)?;
        Ok(PolyInput { ring, f })
    }
}

pub struct IdealInput {
    ring: Arc<Ring>,
    ideal: Ideal,
}

impl IdealInput {
    pub fn parse(ring: &str, ideal: &str, settings: &Settings) -> Result<Self, Failure> {
        let ring = build_ring(ring, settings)?;
        let ideal = parse_ideal(ideal, &ring)?;
        Ok(IdealInput { ring, ideal })
    }
}

fn parse_fraction(text: &str) -> Result<(u64, u64), Failure> {
    let bad = || Failure::input(format!("`{text}` is not a positive fraction"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim().parse::<u64>().map_err(|_| bad())?, d.trim().parse::<u64>().map_err(|_| bad())?),
        None => (text.trim().parse::<u64>().map_err(|_| bad())?, 1),
    };
    if num == 0 || den == 0 {
        return Err(bad());
    }
    Ok((num, den))
}

/// `r/d` with `d = p^e − 1`, or `auto:num/den`.
pub fn parse_alpha(text: &str, p: u64) -> Result<RationalExponent, Failure> {
    if let Some(rest) = text.strip_prefix("auto:") {
        let (num, den) = parse_fraction(rest)?;
        return Ok(RationalExponent::from_fraction(num, den, p)?);
    }
    let (r, d) = parse_fraction(text)?;
    let mut q = p;
    let mut e = 1;
    while q - 1 < d {
        q = q
            .checked_mul(p)
            .ok_or_else(|| Error::ExponentOverflow(format!("denominator {d}")))?;
        e += 1;
    }
    if q - 1 != d {
        return Err(Failure::precondition(format!(
            "denominator {d} is not of the form {p}^e - 1; use auto:{r}/{d}"
        )));
    }
    Ok(RationalExponent::new(r, e, p)?)
}

fn ideal_json(ideal: &Ideal) -> Value {
    json!({ "ideal": ideal.to_strings() })
}

fn render(value: Value) -> String {
    value.to_string() + "\n"
}

fn flag_json(trace: &FlagTrace) -> Value {
    json!(trace.to_strings())
}

pub fn tau(input: &PolyInput, exp: &str, settings: &Settings) -> Result<String, Failure> {
    let (num, den) = parse_fraction(exp)?;
    let ideal = tau_general(&input.f, Ratio::new(num, den), settings.policy)?;
    Ok(render(ideal_json(&ideal)))
}

pub fn tau_eps(input: &PolyInput, alpha: &str, settings: &Settings) -> Result<String, Failure> {
    let alpha = parse_alpha(alpha, input.ring.characteristic())?;
    Ok(render(ideal_json(&tau_minus_epsilon(&input.f, &alpha, settings.policy)?)))
}

pub fn jump(input: &PolyInput, alpha: &str, trace: bool, settings: &Settings) -> Result<String, Failure> {
    let alpha = parse_alpha(alpha, input.ring.characteristic())?;
    let verdict = is_fjumping_number(&input.f, &alpha, settings.policy)?;
    let mut out = verdict.to_json();
    if trace {
        out["flag"] = flag_json(&verdict.trace);
        out["stabilization_index"] = json!(verdict.trace.stabilization_index);
    }
    Ok(render(out))
}

pub fn sweep(input: &PolyInput, e: u32, jobs: usize, settings: &Settings) -> Result<String, Failure> {
    let p = input.ring.characteristic();
    let den = RationalExponent::new(1, e, p)?.denominator();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|err| Failure::precondition(format!("cannot start {jobs} workers: {err}")))?;
    let rows: Vec<Result<(u64, String, bool, String), Error>> = pool.install(|| {
        (1..=den)
            .into_par_iter()
            .map(|r| {
                let alpha = RationalExponent::new(r, e, p)?;
                let v = is_fjumping_number(&input.f, &alpha, settings.policy)?;
                Ok((r, alpha.to_string(), v.is_jumping, v.certificate.to_string()))
            })
            .collect()
    });
    let mut writer = csv::Writer::from_writer(Vec::new());
    let csv_err = |err: csv::Error| Failure::precondition(format!("csv output failed: {err}"));
    writer.write_record(["r", "alpha", "is_jumping", "ideal"]).map_err(csv_err)?;
    for row in rows {
        let (r, alpha, jumping, ideal) = row?;
        writer
            .write_record([r.to_string(), alpha, jumping.to_string(), ideal])
            .map_err(csv_err)?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|err| Failure::precondition(format!("csv output failed: {err}")))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
}

pub fn fjac(input: &PolyInput, seed: &str, trace: bool, settings: &Settings) -> Result<String, Failure> {
    let seed = parse_ideal(seed, &input.ring)?;
    let flag = fjacobian_from_seed(&input.f, &seed, settings.policy)?;
    let jf = flag.limit();
    let fpure = match fedder_fpure_at_origin(&input.f) {
        Ok(b) => Value::Bool(b),
        Err(Error::NotLocal(_)) => Value::Null,
        Err(err) => return Err(err.into()),
    };
    let mut out = json!({
        "fjacobian": jf.to_strings(),
        "labels": {
            "fpure": fpure,
            "fregular_inferred": jf.is_unit(),
            "maximal": *jf == Ideal::maximal(&input.ring),
        },
        "stabilization_index": flag.stabilization_index,
    });
    if trace {
        out["flag"] = flag_json(&flag);
    }
    Ok(render(out))
}

pub fn fedder(input: &PolyInput) -> Result<String, Failure> {
    Ok(render(json!(fedder_fpure_at_origin(&input.f)?)))
}

pub fn froot(input: &IdealInput, q: u64) -> Result<String, Failure> {
    frobenius_exponent(&input.ring, q)?;
    Ok(render(ideal_json(&frobenius_root(&input.ideal, q)?)))
}

pub fn bpower(input: &IdealInput, q: u64) -> Result<String, Failure> {
    Ok(render(ideal_json(&bracket_power(&input.ideal, q)?)))
}

pub fn colon(input: &IdealInput, by: &str) -> Result<String, Failure> {
    let divisor = parse_ideal(by, &input.ring)?;
    Ok(render(ideal_json(&input.ideal.colon_ideal(&divisor)?)))
}

pub fn gb(input: &IdealInput) -> Result<String, Failure> {
    Ok(render(ideal_json(&input.ideal)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_forms() {
        let a = parse_alpha("10/12", 13).unwrap();
        assert_eq!((a.numerator(), a.step()), (10, 1));
        let b = parse_alpha("140/168", 13).unwrap();
        assert_eq!((b.numerator(), b.step()), (140, 2));
        let c = parse_alpha("auto:5/6", 13).unwrap();
        assert_eq!(c, a);
        assert_eq!(parse_alpha("1/5", 13).unwrap_err().code, 3);
        assert_eq!(parse_alpha("x/5", 13).unwrap_err().code, 2);
    }
}
