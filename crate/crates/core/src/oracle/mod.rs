//! Independent ground truth: literal polynomials over valued fields, the
//! classical Newton polygon, resultant-based root counts and exact solves
//! of linear systems. Nothing here uses the polyhedral engine.

pub mod field;
pub mod linear;
pub mod newton;
pub mod resultant;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::tropical::{Exponent, TropicalPolynomial};

pub use field::{PAdic, QPoly, RationalFunction, ValuedField};
pub use linear::linear_solve_trop;
pub use newton::{known_root_instance, np1d, KnownRootInstance};
pub use resultant::{resultant_count2, RootCounts};

/// A Laurent polynomial with explicit nonzero coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct LiteralPolynomial<F> {
    dim: usize,
    terms: BTreeMap<Exponent, F>,
}

impl<F: ValuedField> LiteralPolynomial<F> {
    /// Coefficients of repeated exponents are added; zero sums are dropped.
    pub fn new(dim: usize, terms: impl IntoIterator<Item = (Exponent, F)>) -> Result<Self> {
        let mut map: BTreeMap<Exponent, F> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: e.len(),
                });
            }
            let sum = match map.remove(&e) {
                Some(old) => old.add(&c),
                None => c,
            };
            if !sum.is_zero() {
                map.insert(e, sum);
            }
        }
        Ok(LiteralPolynomial { dim, terms: map })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, F> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &[i64]) -> Option<&F> {
        self.terms.get(e)
    }

    /// Term weights are coefficient valuations.
    pub fn to_tropical(&self) -> Result<TropicalPolynomial> {
        TropicalPolynomial::new(
            self.dim,
            self.terms
                .iter()
                .map(|(e, c)| (e.clone(), c.valuation().expect("nonzero coefficient"))),
        )
    }
}
