//! Buchberger's algorithm with the Gebauer–Möller pair criteria.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring, Selection};

struct Reducer {
    poly: Polynomial,
    lm: Monomial,
    mask: u64,
    sugar: u32,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Divisor lookup over the active part of a basis.
struct Basis {
    polys: Vec<Reducer>,
    active: Vec<bool>,
}

impl Basis {
    fn find_reducer(&self, m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        self.polys
            .iter()
            .enumerate()
            .find(|(i, r)| self.active[*i] && r.mask & !mask == 0 && r.lm.divides(m))
            .map(|(i, _)| i)
    }
}

/// Full reduction of `f`; `find` returns a monic reducer for a monomial.
fn reduce_full<'a>(f: Polynomial, find: impl Fn(&Monomial) -> Option<&'a Polynomial>) -> Polynomial {
    let ring = f.ring().clone();
    let mut rest = f;
    let mut done: Vec<(Monomial, u32)> = Vec::new();
    loop {
        let Some((m, c)) = rest.leading_term().cloned() else { break };
        match find(&m) {
            Some(g) => {
                let lm = g.leading_monomial().expect("nonzero reducer");
                let t = lm.quotient_of(&m);
                rest = rest.sub_mul_term(c, &t, g);
            }
            None => {
                let mut terms = rest.into_terms();
                done.push(terms.pop().expect("nonempty"));
                rest = Polynomial::from_sorted(&ring, terms);
            }
        }
    }
    done.reverse();
    Polynomial::from_sorted(&ring, done)
}

/// Remainder of `f` modulo a Gröbner basis (any order of elements).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let reducers = monic_reducers(basis);
    normal_form_with(f, &reducers)
}

pub(crate) type Reducers = Vec<(Monomial, u64, Polynomial)>;

pub(crate) fn monic_reducers(basis: &[Polynomial]) -> Reducers {
    basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let g = g.monic();
            let lm = g.leading_monomial().unwrap().clone();
            (lm.clone(), lm.support_mask(), g)
        })
        .collect()
}

pub(crate) fn normal_form_with(f: &Polynomial, reducers: &Reducers) -> Polynomial {
    reduce_full(f.clone(), |m| {
        let mask = m.support_mask();
        reducers
            .iter()
            .find(|(lm, lmask, _)| lmask & !mask == 0 && lm.divides(m))
            .map(|(_, _, g)| g)
    })
}

fn s_polynomial(a: &Polynomial, b: &Polynomial, lcm: &Monomial) -> Polynomial {
    let ta = a.leading_monomial().unwrap().quotient_of(lcm);
    let tb = b.leading_monomial().unwrap().quotient_of(lcm);
    a.mul_term(1, &ta).sub_mul_term(1, &tb, b)
}

fn pair_less(ring: &Ring, selection: Selection, a: &Pair, b: &Pair) -> bool {
    let by_lcm = || ring.cmp(&a.lcm, &b.lcm).then((a.i, a.j).cmp(&(b.i, b.j)));
    let ord = match selection {
        Selection::Normal => by_lcm(),
        Selection::Sugar => a.sugar.cmp(&b.sugar).then_with(by_lcm),
    };
    ord == Ordering::Less
}

/// Gebauer–Möller update with the new element at index `h`.
fn update(basis: &mut Basis, pairs: &mut Vec<Pair>, h: usize) {
    let lm_h = basis.polys[h].lm.clone();
    let sugar_h = basis.polys[h].sugar;
    let make = |basis: &Basis, g: usize| {
        let r = &basis.polys[g];
        let lcm = lm_h.lcm(&r.lm);
        let sugar = (sugar_h - lm_h.degree()).max(r.sugar - r.lm.degree()) + lcm.degree();
        Pair { i: g, j: h, lcm, sugar }
    };
    let mut c: Vec<Pair> = (0..h).filter(|&g| basis.active[g]).map(|g| make(basis, g)).collect();
    let mut d: Vec<Pair> = Vec::new();
    while let Some(p) = c.pop() {
        let coprime = lm_h.is_coprime(&basis.polys[p.i].lm);
        if coprime || (!c.iter().any(|q| q.lcm.divides(&p.lcm)) && !d.iter().any(|q| q.lcm.divides(&p.lcm))) {
            d.push(p);
        }
    }
    d.retain(|p| !lm_h.is_coprime(&basis.polys[p.i].lm));
    pairs.retain(|p| {
        !lm_h.divides(&p.lcm)
            || lm_h.lcm(&basis.polys[p.i].lm) == p.lcm
            || lm_h.lcm(&basis.polys[p.j].lm) == p.lcm
    });
    pairs.extend(d);
    for g in 0..h {
        if basis.active[g] && lm_h.divides(&basis.polys[g].lm) {
            basis.active[g] = false;
        }
    }
}

fn push(basis: &mut Basis, pairs: &mut Vec<Pair>, poly: Polynomial, sugar: u32) {
    let poly = poly.monic();
    let sugar = sugar.max(poly.total_degree().unwrap_or(0));
    let lm = poly.leading_monomial().unwrap().clone();
    let mask = lm.support_mask();
    basis.polys.push(Reducer { poly, lm, mask, sugar });
    basis.active.push(true);
    update(basis, pairs, basis.polys.len() - 1);
}

/// Reduced Gröbner basis, sorted by descending leading monomial.
/// The zero ideal gives an empty list and the unit ideal gives `[1]`.
pub fn reduced_groebner_basis(ring: &Arc<Ring>, gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut input: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if input.iter().any(|g| g.is_unit()) {
        return vec![Polynomial::one(ring)];
    }
    input.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));

    let selection = ring.selection();
    let mut basis = Basis { polys: Vec::new(), active: Vec::new() };
    let mut pairs: Vec<Pair> = Vec::new();

    let reduce = |basis: &Basis, f: Polynomial| {
        reduce_full(f, |m| basis.find_reducer(m).map(|i| &basis.polys[i].poly))
    };

    for g in input {
        let sugar = g.total_degree().unwrap_or(0);
        let h = reduce(&basis, g);
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return vec![Polynomial::one(ring)];
        }
        push(&mut basis, &mut pairs, h, sugar);
    }

    while !pairs.is_empty() {
        let mut best = 0;
        for k in 1..pairs.len() {
            if pair_less(ring, selection, &pairs[k], &pairs[best]) {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let s = s_polynomial(&basis.polys[pair.i].poly, &basis.polys[pair.j].poly, &pair.lcm);
        let h = reduce(&basis, s);
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return vec![Polynomial::one(ring)];
        }
        push(&mut basis, &mut pairs, h, pair.sugar);
    }

    // Minimal basis: active elements have pairwise non-dividing leading monomials.
    let minimal: Vec<Polynomial> = basis
        .polys
        .iter()
        .zip(&basis.active)
        .filter(|(_, &a)| a)
        .map(|(r, _)| r.poly.clone())
        .collect();
    // No tail term of g is divisible by lm(g), so g itself may stay in the reducer set.
    let reducers = monic_reducers(&minimal);
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for g in &minimal {
        let (lm, lc) = g.leading_term().unwrap().clone();
        let tail = Polynomial::from_sorted(ring, g.terms()[..g.num_terms() - 1].to_vec());
        let tail = normal_form_with(&tail, &reducers);
        reduced.push(tail.add(&Polynomial::term(ring, lc, lm)));
    }
    reduced.sort_by(|a, b| ring.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    reduced
}
