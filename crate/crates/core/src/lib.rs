//! Exact computations with generalized test ideals, F-jumping ideals and
//! F-Jacobian ideals of hypersurfaces in polynomial rings over finite fields.

pub mod error;
pub mod exponent;
pub mod field;
pub mod fjacobian;
pub mod fjumping;
pub mod flag;
pub mod frobenius;
pub mod groebner;
pub mod ideal;
pub mod oracles;
pub mod parse;
pub mod poly;
pub mod properties;
pub mod ring;
pub mod testideal;

pub use error::{Error, Result};
pub use exponent::RationalExponent;
pub use field::{Elem, GaloisField};
pub use flag::{FlagTrace, IterationPolicy};
pub use ideal::Ideal;
pub use parse::{parse_ideal, parse_poly, parse_ring};
pub use poly::Polynomial;
pub use ring::{Monomial, MonomialOrder, Ring, Selection};
