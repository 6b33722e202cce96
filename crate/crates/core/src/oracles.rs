//! Independent verifiers: closed-form monomial roots, a seeded adjunction
//! fuzzer and a jumping-number sweep.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponent::RationalExponent;
use crate::fjumping::is_fjumping_number;
use crate::flag::IterationPolicy;
use crate::frobenius::{bracket_power, frobenius_exponent, frobenius_root};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring};

/// Root of a monomial ideal by dividing every exponent by `q`, rounding down.
pub fn monomial_root_oracle(ideal: &Ideal, q: u64) -> Result<Ideal> {
    let ring = ideal.ring();
    frobenius_exponent(ring, q)?;
    let mut gens = Vec::new();
    for g in ideal.generators() {
        if g.is_zero() {
            continue;
        }
        if !g.is_monomial() {
            return Err(Error::NonMonomial);
        }
        let (m, _) = &g.terms()[0];
        let exps: Vec<u32> = m.exponents().iter().map(|&a| (a as u64 / q) as u32).collect();
        gens.push(Polynomial::term(ring, 1, Monomial::from_exponents(&exps)?));
    }
    Ok(Ideal::new(ring, gens))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FuzzConfig {
    pub trials: usize,
    pub seed: u64,
    pub max_generators: usize,
    pub max_degree: u32,
    pub max_terms: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig { trials: 500, seed: 0x5eed, max_generators: 3, max_degree: 6, max_terms: 4 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FuzzInputs {
    pub i: Vec<String>,
    pub j: Vec<String>,
    pub q: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct FuzzVerdict {
    /// `I ⊆ J^[q]`.
    pub in_bracket: bool,
    /// `I^[1/q] ⊆ J`.
    pub root_in: bool,
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FuzzRecord {
    pub seed: u64,
    pub inputs: FuzzInputs,
    pub verdict: FuzzVerdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct FuzzReport {
    pub records: Vec<FuzzRecord>,
}

impl FuzzReport {
    pub fn failures(&self) -> Vec<&FuzzRecord> {
        self.records.iter().filter(|r| !r.verdict.agree).collect()
    }

    /// One JSON object per trial.
    pub fn to_json_lines(&self) -> String {
        self.records
            .iter()
            .map(|r| serde_json::to_string(r).expect("plain data serializes") + "\n")
            .collect()
    }
}

/// A random nonzero polynomial.
pub fn random_polynomial(ring: &Arc<Ring>, rng: &mut impl Rng, max_degree: u32, max_terms: usize) -> Polynomial {
    let size = ring.field().size();
    let n = ring.nvars();
    loop {
        let count = rng.gen_range(1..=max_terms.max(1));
        let terms: Vec<(Monomial, u32)> = (0..count)
            .map(|_| {
                let degree = rng.gen_range(0..=max_degree);
                let mut exps = vec![0u32; n];
                for _ in 0..degree {
                    if n > 0 {
                        exps[rng.gen_range(0..n)] += 1;
                    }
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

pub fn random_ideal(ring: &Arc<Ring>, rng: &mut impl Rng, config: &FuzzConfig) -> Ideal {
    let count = rng.gen_range(1..=config.max_generators.max(1));
    let gens = (0..count)
        .map(|_| random_polynomial(ring, rng, config.max_degree, config.max_terms))
        .collect();
    Ideal::new(ring, gens)
}

fn fuzz_trial(ring: &Arc<Ring>, qs: &[u64], config: &FuzzConfig, seed: u64) -> Result<FuzzRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = qs[rng.gen_range(0..qs.len())];
    let j = random_ideal(ring, &mut rng, config);
    let i = match rng.gen_range(0..4) {
        0 => {
            let bracket = bracket_power(&j, q)?;
            let gens = bracket
                .groebner_basis()
                .iter()
                .map(|g| g.mul(&random_polynomial(ring, &mut rng, 2, 2)))
                .collect();
            Ideal::new(ring, gens)
        }
        1 => {
            let bigger = FuzzConfig { max_degree: config.max_degree * 3, ..*config };
            random_ideal(ring, &mut rng, &bigger)
        }
        _ => random_ideal(ring, &mut rng, config),
    };
    let in_bracket = bracket_power(&j, q)?.contains_ideal(&i);
    let root_in = j.contains_ideal(&frobenius_root(&i, q)?);
    Ok(FuzzRecord {
        seed,
        inputs: FuzzInputs { i: i.to_strings(), j: j.to_strings(), q },
        verdict: FuzzVerdict { in_bracket, root_in, agree: in_bracket == root_in },
    })
}

/// Checks `I ⊆ J^[q] ⟺ I^[1/q] ⊆ J` on random pairs; every trial is replayable from its seed.
pub fn adjunction_fuzzer(ring: &Arc<Ring>, qs: &[u64], config: &FuzzConfig) -> Result<FuzzReport> {
    if qs.is_empty() {
        return Err(Error::Precondition("no Frobenius powers to test".into()));
    }
    for &q in qs {
        frobenius_exponent(ring, q)?;
    }
    let mut master = ChaCha8Rng::seed_from_u64(config.seed);
    let seeds: Vec<u64> = (0..config.trials).map(|_| master.gen()).collect();
    let records = seeds
        .into_iter()
        .map(|s| fuzz_trial(ring, qs, config, s))
        .collect::<Result<Vec<_>>>()?;
    Ok(FuzzReport { records })
}

/// Replays a single trial from its recorded seed.
pub fn replay_trial(ring: &Arc<Ring>, qs: &[u64], config: &FuzzConfig, seed: u64) -> Result<FuzzRecord> {
    fuzz_trial(ring, qs, config, seed)
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepEntry {
    pub r: u64,
    pub alpha: String,
    pub is_jumping: bool,
    pub ideal: Vec<String>,
}

/// Classifies every `α = r/(p^e − 1)`, `r = 1..p^e − 1`.
pub fn jumping_sweep_oracle(f: &Polynomial, e: u32, policy: IterationPolicy) -> Result<Vec<SweepEntry>> {
    if f.is_zero() {
        return Err(Error::Precondition("the polynomial must be nonzero".into()));
    }
    let p = f.ring().characteristic();
    let top = RationalExponent::new(1, e, p)?.denominator();
    (1..=top)
        .map(|r| {
            let alpha = RationalExponent::new(r, e, p)?;
            let v = is_fjumping_number(f, &alpha, policy)?;
            Ok(SweepEntry { r, alpha: alpha.to_string(), is_jumping: v.is_jumping, ideal: v.certificate.to_strings() })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_ideal, parse_poly, parse_ring};

    #[test]
    fn monomial_roots() {
        let r = parse_ring("F7[x,y]").unwrap();
        let i = parse_ideal("x^3*y^7", &r).unwrap();
        assert_eq!(monomial_root_oracle(&i, 7).unwrap(), parse_ideal("y", &r).unwrap());
        let r2 = parse_ring("F2[x,y]").unwrap();
        let i = parse_ideal("x^2*y, y^3", &r2).unwrap();
        assert_eq!(monomial_root_oracle(&i, 2).unwrap(), parse_ideal("x, y", &r2).unwrap());
        let i = parse_ideal("x^5", &parse_ring("F3[x]").unwrap()).unwrap();
        assert_eq!(monomial_root_oracle(&i, 3).unwrap().to_strings(), ["x"]);
        assert_eq!(monomial_root_oracle(&parse_ideal("x + y", &r).unwrap(), 7).unwrap_err(), Error::NonMonomial);
    }

    #[test]
    fn fuzzer_is_deterministic_and_clean() {
        let r = parse_ring("F3[x,y]").unwrap();
        let config = FuzzConfig { trials: 40, ..FuzzConfig::default() };
        let a = adjunction_fuzzer(&r, &[3, 9], &config).unwrap();
        let b = adjunction_fuzzer(&r, &[3, 9], &config).unwrap();
        assert_eq!(a.to_json_lines(), b.to_json_lines());
        assert!(a.failures().is_empty());
        assert!(a.records.iter().any(|t| t.verdict.in_bracket));
        assert!(a.records.iter().any(|t| !t.verdict.in_bracket));
        let again = replay_trial(&r, &[3, 9], &config, a.records[7].seed).unwrap();
        assert_eq!(serde_json::to_string(&again).unwrap(), serde_json::to_string(&a.records[7]).unwrap());
    }

    #[test]
    fn sweep_of_smooth_divisor() {
        let r = parse_ring("F3[x]").unwrap();
        let x = parse_poly("x", &r).unwrap();
        let out = jumping_sweep_oracle(&x, 1, IterationPolicy::default()).unwrap();
        let flags: Vec<bool> = out.iter().map(|s| s.is_jumping).collect();
        assert_eq!(flags, [false, true]);
    }
}
