//! Text formats for rings, polynomials and ideals.
//!
//! Rings: `F<p>[v1,v2,...]` or `F<p>^<k>:<modulus>[v1,...]`, where the modulus
//! is a monic polynomial in a single identifier (conventionally `t`) that
//! then names the field generator, e.g. `F3^2:i^2+1[x,y]`.
//!
//! Polynomials: integers, variables, `+`, `-`, `*` (optional), `^` with a
//! non-negative integer exponent, and parentheses.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Elem, GaloisField};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::{MonomialOrder, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str, offset: usize) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let pos = offset + i;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v = text[start..i]
                    .parse::<u64>()
                    .map_err(|_| Error::parse(pos, format!("integer {} is too large", &text[start..i])))?;
                out.push((pos, Tok::Int(v)));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((pos, Tok::Ident(text[start..i].to_string())));
            }
            '+' | '-' | '*' | '^' | '(' | ')' => {
                out.push((
                    pos,
                    match c {
                        '+' => Tok::Plus,
                        '-' => Tok::Minus,
                        '*' => Tok::Star,
                        '^' => Tok::Caret,
                        '(' => Tok::LParen,
                        _ => Tok::RParen,
                    },
                ));
                i += 1;
            }
            _ => return Err(Error::parse(pos, format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

/// Expression evaluation target: ring polynomials, or field elements written
/// as polynomials in the generator (for moduli).
trait Algebra {
    type V: Clone;
    fn int(&self, v: u64) -> Self::V;
    fn ident(&self, name: &str, pos: usize) -> Result<Self::V>;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn neg(&self, a: &Self::V) -> Self::V;
    fn mul(&self, a: &Self::V, b: &Self::V, pos: usize) -> Result<Self::V>;
    fn pow(&self, a: &Self::V, n: u64, pos: usize) -> Result<Self::V>;
}

struct Parser<'a, A: Algebra> {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
    alg: &'a A,
}

impl<A: Algebra> Parser<'_, A> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |t| t.0)
    }

    fn expr(&mut self) -> Result<A::V> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.i += 1;
                let t = self.term()?;
                self.alg.neg(&t)
            }
            Some(Tok::Plus) => {
                self.i += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.i += 1;
                    let t = self.term()?;
                    acc = self.alg.add(&acc, &t);
                }
                Some(Tok::Minus) => {
                    self.i += 1;
                    let t = self.term()?;
                    acc = self.alg.add(&acc, &self.alg.neg(&t));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<A::V> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.i += 1;
                    let pos = self.pos();
                    let f = self.factor()?;
                    acc = self.alg.mul(&acc, &f, pos)?;
                }
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    let pos = self.pos();
                    let f = self.factor()?;
                    acc = self.alg.mul(&acc, &f, pos)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<A::V> {
        let pos = self.pos();
        let base = match self.toks.get(self.i).cloned() {
            Some((_, Tok::Int(v))) => {
                self.i += 1;
                self.alg.int(v)
            }
            Some((p, Tok::Ident(name))) => {
                self.i += 1;
                self.alg.ident(&name, p)?
            }
            Some((_, Tok::LParen)) => {
                self.i += 1;
                let v = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => self.i += 1,
                    _ => return Err(Error::parse(self.pos(), "expected ')'")),
                }
                v
            }
            Some((p, t)) => return Err(Error::parse(p, format!("unexpected token {t:?}"))),
            None => return Err(Error::parse(pos, "unexpected end of input")),
        };
        if self.peek() == Some(&Tok::Caret) {
            self.i += 1;
            let epos = self.pos();
            match self.toks.get(self.i).cloned() {
                Some((_, Tok::Int(n))) => {
                    self.i += 1;
                    return self.alg.pow(&base, n, epos);
                }
                _ => return Err(Error::parse(epos, "expected a non-negative integer exponent")),
            }
        }
        Ok(base)
    }
}

fn run<A: Algebra>(alg: &A, text: &str, offset: usize) -> Result<A::V> {
    let toks = tokenize(text, offset)?;
    let mut parser = Parser { toks, i: 0, end: offset + text.len(), alg };
    if parser.peek().is_none() {
        return Err(Error::parse(offset, "empty expression"));
    }
    let v = parser.expr()?;
    if parser.i != parser.toks.len() {
        return Err(Error::parse(parser.pos(), "trailing input"));
    }
    Ok(v)
}

struct PolyAlgebra<'a> {
    ring: &'a Arc<Ring>,
}

impl Algebra for PolyAlgebra<'_> {
    type V = Polynomial;

    fn int(&self, v: u64) -> Polynomial {
        Polynomial::constant(self.ring, self.ring.field().from_u64(v))
    }

    fn ident(&self, name: &str, pos: usize) -> Result<Polynomial> {
        if let Some(i) = self.ring.var_index(name) {
            return Ok(Polynomial::var(self.ring, i));
        }
        let field = self.ring.field();
        if field.generator_name() == Some(name) {
            return Ok(Polynomial::constant(self.ring, field.generator().expect("extension field")));
        }
        Err(Error::parse(pos, format!("unknown variable {name}")))
    }

    fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.add(b)
    }

    fn neg(&self, a: &Polynomial) -> Polynomial {
        a.neg()
    }

    fn mul(&self, a: &Polynomial, b: &Polynomial, pos: usize) -> Result<Polynomial> {
        a.checked_mul(b).map_err(|e| Error::parse(pos, e.to_string()))
    }

    fn pow(&self, a: &Polynomial, n: u64, pos: usize) -> Result<Polynomial> {
        a.pow(n).map_err(|e| Error::parse(pos, e.to_string()))
    }
}

/// Integer polynomials in one named variable, used for moduli.
struct UnivariateAlgebra {
    var: std::cell::RefCell<Option<String>>,
}

impl Algebra for UnivariateAlgebra {
    type V = Vec<i64>;

    fn int(&self, v: u64) -> Vec<i64> {
        vec![v as i64]
    }

    fn ident(&self, name: &str, pos: usize) -> Result<Vec<i64>> {
        let mut var = self.var.borrow_mut();
        match var.as_deref() {
            None => *var = Some(name.to_string()),
            Some(v) if v == name => {}
            Some(v) => {
                return Err(Error::parse(pos, format!("modulus uses two variables, {v} and {name}")))
            }
        }
        Ok(vec![0, 1])
    }

    fn add(&self, a: &Vec<i64>, b: &Vec<i64>) -> Vec<i64> {
        let n = a.len().max(b.len());
        (0..n).map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)).collect()
    }

    fn neg(&self, a: &Vec<i64>) -> Vec<i64> {
        a.iter().map(|x| -x).collect()
    }

    fn mul(&self, a: &Vec<i64>, b: &Vec<i64>, pos: usize) -> Result<Vec<i64>> {
        let mut out = vec![0i64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = x
                    .checked_mul(*y)
                    .and_then(|v| out[i + j].checked_add(v))
                    .ok_or_else(|| Error::parse(pos, "modulus coefficient overflow"))?;
            }
        }
        Ok(out)
    }

    fn pow(&self, a: &Vec<i64>, n: u64, pos: usize) -> Result<Vec<i64>> {
        if n > 64 {
            return Err(Error::parse(pos, "modulus degree too large"));
        }
        let mut acc = vec![1i64];
        for _ in 0..n {
            acc = self.mul(&acc, a, pos)?;
        }
        Ok(acc)
    }
}

fn parse_var_list(text: &str, offset: usize) -> Result<Vec<String>> {
    let mut vars = Vec::new();
    let mut pos = offset;
    for part in text.split(',') {
        let name = part.trim();
        let ok = !name.is_empty()
            && name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::parse(pos, format!("invalid variable name {name:?}")));
        }
        vars.push(name.to_string());
        pos += part.len() + 1;
    }
    Ok(vars)
}

pub fn parse_ring(text: &str) -> Result<Arc<Ring>> {
    parse_ring_with_order(text, MonomialOrder::Grevlex)
}

pub fn parse_ring_with_order(text: &str, order: MonomialOrder) -> Result<Arc<Ring>> {
    let text = text.trim();
    let rest = text.strip_prefix('F').ok_or_else(|| Error::parse(0, "ring must start with 'F'"))?;
    let open = text.find('[').ok_or_else(|| Error::parse(text.len(), "expected '['"))?;
    if !text.ends_with(']') {
        return Err(Error::parse(text.len(), "expected ']' at the end"));
    }
    let head = &rest[..open - 1];
    let vars = parse_var_list(&text[open + 1..text.len() - 1], open + 1)?;
    let digits_end = head.find(|c: char| !c.is_ascii_digit()).unwrap_or(head.len());
    let p: u32 = head[..digits_end]
        .parse()
        .map_err(|_| Error::parse(1, "expected the characteristic after 'F'"))?;
    let field = if digits_end == head.len() {
        GaloisField::prime(p)?
    } else {
        let ext = &head[digits_end..];
        let ext = ext
            .strip_prefix('^')
            .ok_or_else(|| Error::parse(1 + digits_end, "expected '^<k>:<modulus>'"))?;
        let colon = ext
            .find(':')
            .ok_or_else(|| Error::parse(2 + digits_end, "expected ':' before the modulus"))?;
        let k: u32 = ext[..colon]
            .trim()
            .parse()
            .map_err(|_| Error::parse(2 + digits_end, "expected the extension degree"))?;
        let mod_offset = 3 + digits_end + colon;
        let alg = UnivariateAlgebra { var: std::cell::RefCell::new(None) };
        let coeffs = run(&alg, &ext[colon + 1..], mod_offset)?;
        let gen = alg.var.into_inner().unwrap_or_else(|| "t".to_string());
        let field = GaloisField::extension(p, &coeffs, &gen)?;
        if field.degree() != k {
            return Err(Error::InvalidField(format!(
                "declared degree {k} but the modulus has degree {}",
                field.degree()
            )));
        }
        field
    };
    Ring::with_order(field, vars, order)
}

pub fn parse_poly(text: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    run(&PolyAlgebra { ring }, text, 0)
}

/// A field element written as an integer or a polynomial in the generator.
pub fn parse_elem(text: &str, ring: &Arc<Ring>) -> Result<Elem> {
    let f = parse_poly(text, ring)?;
    if !f.is_constant() {
        return Err(Error::parse(0, format!("{text} is not a field element")));
    }
    Ok(f.constant_coefficient())
}

/// Comma-separated generators, optionally wrapped in `()` or `[]`.
/// Commas inside parentheses do not split.
pub fn parse_ideal(text: &str, ring: &Arc<Ring>) -> Result<Ideal> {
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    let (body, offset) = match (trimmed.chars().next(), trimmed.chars().last()) {
        (Some('['), Some(']')) => (&trimmed[1..trimmed.len() - 1], lead + 1),
        (Some('('), Some(')')) if wraps_whole(trimmed) => (&trimmed[1..trimmed.len() - 1], lead + 1),
        _ => (trimmed, lead),
    };
    let mut gens = Vec::new();
    if body.trim().is_empty() {
        return Ok(Ideal::zero(ring));
    }
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in body.char_indices().chain(std::iter::once((body.len(), ','))) {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                let piece = &body[start..i];
                let piece = piece.trim_matches(|c| c == '"' || c == ' ');
                gens.push(run(&PolyAlgebra { ring }, piece, offset + start)?);
                start = i + 1;
            }
            _ => {}
        }
    }
    Ok(Ideal::new(ring, gens))
}

fn wraps_whole(s: &str) -> bool {
    let mut depth = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && i != s.len() - 1 {
                    return false;
                }
            }
            _ => {}
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_ring() {
        let r = parse_ring("F13[x,y]").unwrap();
        assert_eq!(r.characteristic(), 13);
        assert_eq!(r.field().degree(), 1);
        assert_eq!(r.vars(), ["x", "y"]);
    }

    #[test]
    fn extension_ring() {
        let r = parse_ring("F3^2:i^2+1[x]").unwrap();
        assert_eq!(r.field().size(), 9);
        let f = parse_poly("i*x + 2", &r).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.to_string(), "i*x + 2");
        let t = parse_ring("F2^3:t^3+t+1[x,y]").unwrap();
        assert_eq!(t.field().size(), 8);
    }

    #[test]
    fn two_term_polynomial() {
        let r = parse_ring("F13[x,y]").unwrap();
        let f = parse_poly("x^2 + y^3", &r).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.to_string(), "y^3 + x^2");
    }

    #[test]
    fn implicit_products_and_parentheses() {
        let r = parse_ring("F7[x,y,z]").unwrap();
        let a = parse_poly("2x^2y - (x+y)^2", &r).unwrap();
        let b = parse_poly("2*x^2*y - x^2 - 2*x*y - y^2", &r).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_poly("-15", &r).unwrap(), Polynomial::constant(&r, 6));
    }

    #[test]
    fn errors_carry_positions() {
        let r = parse_ring("F13[x,y]").unwrap();
        assert_eq!(
            parse_poly("x + w", &r).unwrap_err(),
            Error::Parse { pos: 4, msg: "unknown variable w".into() }
        );
        assert!(matches!(parse_poly("x +", &r), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_poly("x ^ y", &r), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_poly("x $ y", &r), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("99999999999999999999999", &r), Err(Error::Parse { .. })));
        assert!(parse_ring("G13[x]").is_err());
        assert!(parse_ring("F12[x]").is_err());
        assert!(parse_ring("F5^2:t^2+1[x]").is_err());
        assert!(parse_ring("F3^3:t^2+1[x]").is_err());
    }

    #[test]
    fn ideals() {
        let r = parse_ring("F7[x,y,z]").unwrap();
        let i = parse_ideal("(x, y, z)", &r).unwrap();
        assert_eq!(i.generators().len(), 3);
        let j = parse_ideal("(x+y)*(x-y), z", &r).unwrap();
        assert_eq!(j.generators().len(), 2);
        let k = parse_ideal("[\"x\", \"y\"]", &r).unwrap();
        assert_eq!(k.generators().len(), 2);
        assert!(parse_ideal("", &r).unwrap().is_zero());
    }

    #[test]
    fn print_parse_round_trip() {
        let r = parse_ring("F3^2:i^2+1[x,y]").unwrap();
        for s in ["(i + 1)*x^2*y + 2*i*y + 2", "x + i*y", "(2*i + 2)"] {
            let f = parse_poly(s, &r).unwrap();
            assert_eq!(parse_poly(&f.to_string(), &r).unwrap(), f);
        }
    }
}
