//! Structures derived from a base hyperring, and maps between them.

mod fundamental;
mod homomorphism;
mod localization;
mod matrix;
mod monomial;
mod product;
mod quotient;

pub use fundamental::{fundamental_ring, FundamentalRing};
pub use homomorphism::GoodHomomorphism;
pub use localization::{localization, Closure, LocalizedHyperring};
pub use matrix::{matrix_hyperring, MatrixRing, DEFAULT_MATRIX_BUDGET};
pub use monomial::{monomial_extension, MonomialExtension};
pub use product::{direct_product, ProductRing};
pub use quotient::{quotient, QuotientRing};

use crate::element_set::ElementSet;
use crate::hyperring::HyperStructure;

/// A bare multiplication table with a unit set, for structures whose
/// addition is not single-valued or not needed by the predicates.
#[derive(Debug, Clone)]
pub struct MulTable {
    order: usize,
    mul: Vec<ElementSet>,
    units: ElementSet,
    commutative: bool,
}

impl MulTable {
    /// Units are computed against `one` (`x` is a unit when `one ∈ x ∘ y`
    /// for some `y`).
    pub fn new(order: usize, mul: Vec<ElementSet>, one: Option<usize>) -> Self {
        assert_eq!(mul.len(), order * order);
        let commutative = (0..order).all(|x| (0..x).all(|y| mul[x * order + y] == mul[y * order + x]));
        let units = match one {
            Some(e) => (0..order)
                .filter(|&x| (0..order).any(|y| mul[x * order + y].contains(e)))
                .collect(),
            None => ElementSet::empty(),
        };
        MulTable {
            order,
            mul,
            units,
            commutative,
        }
    }

    /// All `e` with `a ∈ a ∘ e` for every `a`.
    pub fn identities(&self) -> ElementSet {
        (0..self.order)
            .filter(|&e| (0..self.order).all(|a| self.mul(a, e).contains(a)))
            .collect()
    }

    /// The first triple where the two bracketings differ.
    pub fn associativity_defect(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.set_mul(self.mul(x, y), z) != self.mul_set(x, self.mul(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }
}

impl HyperStructure for MulTable {
    fn order(&self) -> usize {
        self.order
    }

    fn mul(&self, x: usize, y: usize) -> &ElementSet {
        &self.mul[x * self.order + y]
    }

    fn units(&self) -> &ElementSet {
        &self.units
    }

    fn is_commutative(&self) -> bool {
        self.commutative
    }
}
