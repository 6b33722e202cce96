//! Stabilizing chains of ideals.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::Ideal;

/// Default cap on the number of steps of any stabilizing chain.
pub const DEFAULT_CAP: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IterationPolicy {
    /// Maximum number of steps before giving up.
    pub cap: usize,
    /// Compute one step past the first repeat and check it agrees.
    pub paranoid: bool,
}

impl Default for IterationPolicy {
    fn default() -> Self {
        IterationPolicy { cap: DEFAULT_CAP, paranoid: false }
    }
}

/// A monotone chain of ideals ending in its first repeat.
#[derive(Debug, Clone)]
pub struct FlagTrace {
    /// All computed entries; the last two are equal.
    pub ideals: Vec<Ideal>,
    /// 1-based index `N` of the first entry equal to its successor.
    pub stabilization_index: usize,
    /// Which recurrence produced the chain.
    pub recurrence: String,
}

impl FlagTrace {
    pub fn limit(&self) -> &Ideal {
        self.ideals.last().expect("a trace is never empty")
    }

    pub fn into_limit(mut self) -> Ideal {
        self.ideals.pop().expect("a trace is never empty")
    }

    /// The 1-based entry `I^j`; entries past the end equal the limit.
    pub fn entry(&self, j: usize) -> &Ideal {
        assert!(j >= 1, "flag entries are 1-based");
        &self.ideals[(j - 1).min(self.ideals.len() - 1)]
    }

    /// The distinct entries `I^1, ..., I^N`.
    pub fn distinct(&self) -> &[Ideal] {
        &self.ideals[..self.stabilization_index]
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.ideals.iter().map(Ideal::to_strings).collect()
    }
}

/// Runs `I^{j+1} = step(I^j)` from `first` until two consecutive entries agree.
pub(crate) fn stabilize(
    first: Ideal,
    recurrence: &str,
    policy: IterationPolicy,
    mut step: impl FnMut(&Ideal) -> Result<Ideal>,
) -> Result<FlagTrace> {
    let mut ideals = vec![first.to_groebner()];
    loop {
        if ideals.len() > policy.cap {
            return Err(Error::CapExceeded { what: recurrence.to_string(), cap: policy.cap });
        }
        let last = ideals.last().unwrap();
        let next = step(last)?.to_groebner();
        if next == *last {
            if policy.paranoid {
                let extra = step(&next)?;
                if extra != next {
                    return Err(Error::Unstable(format!(
                        "{recurrence}: {next} repeated once but the next step gave {extra}"
                    )));
                }
            }
            ideals.push(next);
            let n = ideals.len() - 1;
            return Ok(FlagTrace { ideals, stabilization_index: n, recurrence: recurrence.to_string() });
        }
        ideals.push(next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_ideal, parse_ring};
    use crate::poly::Polynomial;

    #[test]
    fn stops_at_first_repeat() {
        let r = parse_ring("F3[x]").unwrap();
        let start = parse_ideal("x^4", &r).unwrap();
        let x = Polynomial::var(&r, 0);
        let trace = stabilize(start, "colon by x", IterationPolicy::default(), |i| i.colon(&x)).unwrap();
        assert_eq!(trace.stabilization_index, 5);
        assert_eq!(trace.ideals.len(), 6);
        assert!(trace.limit().is_unit());
        assert_eq!(trace.distinct().len(), 5);
    }

    #[test]
    fn cap_is_enforced() {
        let r = parse_ring("F3[x]").unwrap();
        let start = parse_ideal("x^40", &r).unwrap();
        let x = Polynomial::var(&r, 0);
        let policy = IterationPolicy { cap: 8, paranoid: true };
        let err = stabilize(start, "colon by x", policy, |i| i.colon(&x)).unwrap_err();
        assert_eq!(err, Error::CapExceeded { what: "colon by x".into(), cap: 8 });
    }
}
