use crate::element_set::ElementSet;
use crate::error::Result;
use crate::hyperring::Hyperring;

/// `A₁ × A₂` with componentwise operations. The pair `(a, b)` is stored as
/// `a · |A₂| + b`.
#[derive(Debug, Clone)]
pub struct ProductRing {
    pub ring: Hyperring,
    left: usize,
    right: usize,
}

pub fn direct_product(a1: &Hyperring, a2: &Hyperring) -> Result<ProductRing> {
    let (n1, n2) = (a1.order(), a2.order());
    let n = n1 * n2;
    let split = |z: usize| (z / n2, z % n2);
    let mut add = Vec::with_capacity(n * n);
    let mut hyp = Vec::with_capacity(n * n);
    for x in 0..n {
        let (x1, x2) = split(x);
        for y in 0..n {
            let (y1, y2) = split(y);
            add.push(a1.add(x1, y1) * n2 + a2.add(x2, y2));
            let mut set = ElementSet::empty();
            for a in a1.hyp_at(x1, y1) {
                for b in a2.hyp_at(x2, y2) {
                    set.insert(a * n2 + b);
                }
            }
            hyp.push(set);
        }
    }
    let mut ring = Hyperring::new(n, add, hyp)?;
    if let (Some(e1), Some(e2)) = (a1.one(), a2.one()) {
        ring = ring.with_identity(e1 * n2 + e2)?;
    }
    Ok(ProductRing {
        ring,
        left: n1,
        right: n2,
    })
}

impl ProductRing {
    pub fn pair(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.left && b < self.right);
        a * self.right + b
    }

    pub fn split(&self, z: usize) -> (usize, usize) {
        (z / self.right, z % self.right)
    }

    pub fn factor_orders(&self) -> (usize, usize) {
        (self.left, self.right)
    }

    /// `I × J`.
    pub fn product_set(&self, i: &ElementSet, j: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty();
        for a in i {
            for b in j {
                out.insert(self.pair(a, b));
            }
        }
        out
    }

    /// Projection of a set onto the first factor.
    pub fn first(&self, s: &ElementSet) -> ElementSet {
        s.map(|z| z / self.right)
    }

    pub fn second(&self, s: &ElementSet) -> ElementSet {
        s.map(|z| z % self.right)
    }
}
