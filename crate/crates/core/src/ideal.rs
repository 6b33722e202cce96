//! Ideals with a lazily computed, write-once reduced Gröbner basis.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{monic_reducers, normal_form_with, reduced_groebner_basis, Reducers};
use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring};

#[derive(Clone)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
    reducers: OnceLock<Reducers>,
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Self {
        for g in &gens {
            assert!(**g.ring() == **ring, "generator {g} does not belong to {ring}");
        }
        Ideal { ring: ring.clone(), gens, gb: OnceLock::new(), reducers: OnceLock::new() }
    }

    pub fn principal(f: &Polynomial) -> Self {
        Self::new(f.ring(), vec![f.clone()])
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<Ring>) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)])
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &Arc<Ring>) -> Self {
        Self::new(ring, (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect())
    }

    fn from_basis(ring: &Arc<Ring>, basis: Vec<Polynomial>) -> Self {
        let ideal = Self::new(ring, basis.clone());
        let _ = ideal.gb.set(basis);
        ideal
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced Gröbner basis, sorted by descending leading monomial.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.gb.get_or_init(|| reduced_groebner_basis(&self.ring, &self.gens))
    }

    /// Same ideal with its reduced basis as the generating set.
    pub fn to_groebner(&self) -> Ideal {
        Ideal::from_basis(&self.ring, self.groebner_basis().to_vec())
    }

    fn reducers(&self) -> &Reducers {
        self.reducers.get_or_init(|| monic_reducers(self.groebner_basis()))
    }

    fn check_ring(&self, other: &Arc<Ring>) -> Result<()> {
        if Arc::ptr_eq(&self.ring, other) || *self.ring == **other {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form_with(f, self.reducers())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        f.is_zero() || self.normal_form(f).is_zero()
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        if self.is_unit() || other.gens.iter().all(Polynomial::is_zero) {
            return true;
        }
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn is_zero(&self) -> bool {
        self.groebner_basis().is_empty()
    }

    pub fn is_unit(&self) -> bool {
        matches!(self.groebner_basis(), [g] if g.is_one())
    }

    /// Generated by monomials (decided on the reduced basis).
    pub fn is_monomial(&self) -> bool {
        self.groebner_basis().iter().all(Polynomial::is_monomial)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.groebner_basis().iter().all(Polynomial::is_homogeneous)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        self.check_ring(&other.ring).expect("ideal sum across rings");
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        self.check_ring(&other.ring).expect("ideal product across rings");
        let a = self.groebner_basis();
        let b = other.groebner_basis();
        let gens = a.iter().flat_map(|f| b.iter().map(move |g| f.mul(g))).collect();
        Ideal::new(&self.ring, gens)
    }

    /// `f · I`.
    pub fn scale(&self, f: &Polynomial) -> Ideal {
        let gens = self.groebner_basis().iter().map(|g| g.mul(f)).collect();
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ J`: the tag-free part of a basis of `w·I + (1 − w)·J` under an
    /// order eliminating `w`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(&other.ring)?;
        let ring = &self.ring;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(ring));
        }
        if self.is_unit() {
            return Ok(other.to_groebner());
        }
        if other.is_unit() || other.contains_ideal(self) {
            return Ok(self.to_groebner());
        }
        if self.contains_ideal(other) {
            return Ok(other.to_groebner());
        }
        if self.is_monomial() && other.is_monomial() {
            let gens = self
                .groebner_basis()
                .iter()
                .flat_map(|f| {
                    other.groebner_basis().iter().map(move |g| {
                        let m = f.leading_monomial().unwrap().lcm(g.leading_monomial().unwrap());
                        Polynomial::term(ring, 1, m)
                    })
                })
                .collect();
            return Ok(Ideal::new(ring, gens).to_groebner());
        }
        let big = ring.elimination_ring(1);
        let w = Polynomial::var(&big, 0);
        let one_minus_w = Polynomial::one(&big).sub(&w);
        let mut gens = Vec::new();
        for g in self.groebner_basis() {
            gens.push(g.embed_shifted(&big, 1).mul(&w));
        }
        for g in other.groebner_basis() {
            gens.push(g.embed_shifted(&big, 1).mul(&one_minus_w));
        }
        let basis = reduced_groebner_basis(&big, &gens);
        let kept: Vec<Polynomial> =
            basis.iter().filter(|g| g.avoids_block(1)).map(|g| g.restrict_shifted(ring, 1)).collect();
        Ok(Ideal::new(ring, kept).to_groebner())
    }

    /// `(I : g) = { h : h·g ∈ I }`.
    pub fn colon(&self, g: &Polynomial) -> Result<Ideal> {
        self.check_ring(g.ring())?;
        if g.is_zero() {
            return Err(Error::Precondition("colon by the zero polynomial".into()));
        }
        let ring = &self.ring;
        if self.is_unit() {
            return Ok(Ideal::unit(ring));
        }
        if g.is_unit() {
            return Ok(self.to_groebner());
        }
        // h·g ∈ I ⟺ h·NF(g) ∈ I
        let g = self.normal_form(g);
        if g.is_zero() {
            return Ok(Ideal::unit(ring));
        }
        if g.is_unit() {
            return Ok(self.to_groebner());
        }
        if g.is_monomial() && self.is_monomial() {
            let m = g.leading_monomial().unwrap();
            let gens = self
                .groebner_basis()
                .iter()
                .map(|f| {
                    let fm = f.leading_monomial().unwrap();
                    Polynomial::term(ring, 1, fm.gcd(m).quotient_of(fm))
                })
                .collect();
            return Ok(Ideal::new(ring, gens).to_groebner());
        }
        let meet = self.intersection(&Ideal::principal(&g))?;
        let gens = meet
            .groebner_basis()
            .iter()
            .map(|h| {
                h.div_exact(&g).unwrap_or_else(|| {
                    panic!("internal invariant violated: {h} lies in ({g}) but is not divisible by it")
                })
            })
            .collect();
        Ok(Ideal::new(ring, gens).to_groebner())
    }

    /// `(I : J) = ⋂_{g ∈ gens J} (I : g)`; `(I : 0) = R`.
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(&other.ring)?;
        let mut acc = Ideal::unit(&self.ring);
        for g in other.groebner_basis() {
            acc = acc.intersection(&self.colon(g)?)?;
        }
        Ok(acc)
    }

    /// Canonical form: reduced basis as strings, descending leading monomials.
    pub fn to_strings(&self) -> Vec<String> {
        self.groebner_basis().iter().map(|g| g.to_string()).collect()
    }

    pub fn monomial_generators(&self) -> Result<Vec<Monomial>> {
        if !self.is_monomial() {
            return Err(Error::NonMonomial);
        }
        Ok(self.groebner_basis().iter().map(|g| g.leading_monomial().unwrap().clone()).collect())
    }
}

impl PartialEq for Ideal {
    /// Identity of reduced Gröbner bases.
    fn eq(&self, other: &Self) -> bool {
        self.check_ring(&other.ring).is_ok() && self.groebner_basis() == other.groebner_basis()
    }
}

impl Eq for Ideal {}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}
