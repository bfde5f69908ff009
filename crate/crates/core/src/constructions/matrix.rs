use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::hyperring::Hyperring;

pub const DEFAULT_MATRIX_BUDGET: usize = 256;

/// `M₂(A)`: 2×2 matrices over `A` with entrywise addition. The product of
/// `X` and `Y` is every matrix whose `(i, j)` entry is drawn from
/// `Σ_k x_ik ∘ y_kj`, chosen independently per entry.
///
/// This product is not associative in general (the entry sums are sum-sets
/// of products, and regrouping changes which choices are correlated), so
/// the ring is assembled with any defect recorded, and sequence products
/// are left folds.
#[derive(Debug, Clone)]
pub struct MatrixRing {
    pub ring: Hyperring,
    base_order: usize,
}

/// Row-major entries `[a11, a12, a21, a22]`.
pub type Entries = [usize; 4];

pub fn matrix_hyperring(base: &Hyperring, budget: usize) -> Result<MatrixRing> {
    let b = base.order();
    let n = b.pow(4);
    if n > budget || n > crate::element_set::MAX_ORDER {
        return Err(Error::BudgetExceeded(format!(
            "M₂ over a base of order {b} has {n} elements (budget {})",
            budget.min(crate::element_set::MAX_ORDER)
        )));
    }
    let mut add = Vec::with_capacity(n * n);
    let mut hyp = Vec::with_capacity(n * n);
    for x in 0..n {
        let xe = decode(b, x);
        for y in 0..n {
            let ye = decode(b, y);
            add.push(encode(b, [
                base.add(xe[0], ye[0]),
                base.add(xe[1], ye[1]),
                base.add(xe[2], ye[2]),
                base.add(xe[3], ye[3]),
            ]));
            let entry = |i: usize, j: usize| {
                base.sum_set(base.hyp_at(xe[2 * i], ye[j]), base.hyp_at(xe[2 * i + 1], ye[2 + j]))
            };
            let cells = [entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)];
            let mut set = ElementSet::empty();
            for a in cells[0] {
                for bb in cells[1] {
                    for c in cells[2] {
                        for d in cells[3] {
                            set.insert(encode(b, [a, bb, c, d]));
                        }
                    }
                }
            }
            hyp.push(set);
        }
    }
    Ok(MatrixRing {
        ring: Hyperring::assemble(n, add, hyp)?,
        base_order: b,
    })
}

fn encode(b: usize, e: Entries) -> usize {
    ((e[0] * b + e[1]) * b + e[2]) * b + e[3]
}

fn decode(b: usize, x: usize) -> Entries {
    [x / (b * b * b), x / (b * b) % b, x / b % b, x % b]
}

impl MatrixRing {
    pub fn base_order(&self) -> usize {
        self.base_order
    }

    pub fn encode(&self, e: Entries) -> usize {
        encode(self.base_order, e)
    }

    pub fn entries(&self, x: usize) -> Entries {
        decode(self.base_order, x)
    }

    /// `diag(a, 0)`, i.e. `a` in the top-left corner.
    pub fn corner(&self, a: usize, zero: usize) -> usize {
        self.encode([a, zero, zero, zero])
    }

    /// `M₂(Q)`, the matrices with every entry in `Q`.
    pub fn lift_ideal(&self, q: &ElementSet) -> ElementSet {
        (0..self.ring.order())
            .filter(|&x| self.entries(x).iter().all(|&a| q.contains(a)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperring::{build_zmt, HyperStructure};
    use crate::ideal::is_hyperideal;

    #[test]
    fn corner_products_match_the_base() {
        let base = build_zmt(3, &[1, 2]).unwrap();
        let m = matrix_hyperring(&base, DEFAULT_MATRIX_BUDGET).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                let prod = m.ring.hyp_at(m.corner(x, 0), m.corner(y, 0));
                let expected: ElementSet = base.hyp_at(x, y).iter().map(|a| m.corner(a, 0)).collect();
                assert_eq!(*prod, expected);
            }
        }
    }

    #[test]
    fn zero_ideal_lifts_to_a_hyperideal() {
        let base = build_zmt(3, &[1, 2]).unwrap();
        let m = matrix_hyperring(&base, DEFAULT_MATRIX_BUDGET).unwrap();
        let q = m.lift_ideal(&ElementSet::singleton(0));
        assert_eq!(q, ElementSet::singleton(0));
        assert!(is_hyperideal(&m.ring, &q));
        assert_eq!(*m.ring.hyp_at(0, 0), ElementSet::singleton(0));
        assert!(!m.ring.is_commutative());
    }

    #[test]
    fn budget() {
        let base = build_zmt(6, &[1, 3]).unwrap();
        assert!(matches!(matrix_hyperring(&base, DEFAULT_MATRIX_BUDGET), Err(Error::BudgetExceeded(_))));
    }

    /// With singleton entries the product is the ordinary matrix product.
    #[test]
    fn ordinary_ring_gives_ordinary_matrices() {
        let base = build_zmt(2, &[1]).unwrap();
        let m = matrix_hyperring(&base, DEFAULT_MATRIX_BUDGET).unwrap();
        assert!(m.ring.is_valid());
        for x in 0..16 {
            for y in 0..16 {
                let (a, b) = (m.entries(x), m.entries(y));
                let c = [
                    (a[0] * b[0] + a[1] * b[2]) % 2,
                    (a[0] * b[1] + a[1] * b[3]) % 2,
                    (a[2] * b[0] + a[3] * b[2]) % 2,
                    (a[2] * b[1] + a[3] * b[3]) % 2,
                ];
                assert_eq!(*m.ring.hyp_at(x, y), ElementSet::singleton(m.encode(c)));
            }
        }
        assert_eq!(m.ring.one(), Some(m.encode([1, 0, 0, 1])));
    }
}
