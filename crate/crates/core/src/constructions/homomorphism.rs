use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::hyperring::{HyperStructure, Hyperring};
use crate::ideal::CClassCache;

use super::{FundamentalRing, ProductRing, QuotientRing};

/// A map with `θ(x + y) = θ(x) + θ(y)` and `θ(x ∘ y) = θ(x) ∘ θ(y)` as sets,
/// checked on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodHomomorphism {
    map: Vec<usize>,
}

impl GoodHomomorphism {
    pub fn new(source: &Hyperring, target: &Hyperring, map: Vec<usize>) -> Result<Self> {
        let n = source.order();
        if map.len() != n || map.iter().any(|&y| y >= target.order()) {
            return Err(Error::NotAHomomorphism("map is not total into the target".into()));
        }
        for x in 0..n {
            for y in 0..n {
                if map[source.add(x, y)] != target.add(map[x], map[y]) {
                    return Err(Error::NotAHomomorphism(format!("θ({x} + {y}) ≠ θ({x}) + θ({y})")));
                }
                let image = source.hyp_at(x, y).map(|z| map[z]);
                if image != *target.hyp_at(map[x], map[y]) {
                    return Err(Error::NotAHomomorphism(format!("θ({x} ∘ {y}) ≠ θ({x}) ∘ θ({y})")));
                }
            }
        }
        Ok(GoodHomomorphism { map })
    }

    pub fn identity(ring: &Hyperring) -> Self {
        GoodHomomorphism {
            map: (0..ring.order()).collect(),
        }
    }

    /// `a ↦ a + Q₁`.
    pub fn quotient_map(base: &Hyperring, q: &QuotientRing) -> Result<Self> {
        Self::new(base, &q.ring, q.class_map().to_vec())
    }

    /// `a ↦ γ*(a)`.
    pub fn fundamental_map(base: &Hyperring, f: &FundamentalRing) -> Result<Self> {
        Self::new(base, &f.ring, f.class_map().to_vec())
    }

    /// `(a, b) ↦ a`.
    pub fn first_projection(p: &ProductRing, a1: &Hyperring) -> Result<Self> {
        let map = (0..p.ring.order()).map(|z| p.split(z).0).collect();
        Self::new(&p.ring, a1, map)
    }

    /// `ℤ_{m,T} → ℤ_{d,T}`, `a ↦ a mod d`, for `d | m`.
    pub fn reduction(source: &Hyperring, target: &Hyperring) -> Result<Self> {
        let d = target.order();
        if source.order() % d != 0 {
            return Err(Error::NotAHomomorphism(format!("{d} does not divide {}", source.order())));
        }
        Self::new(source, target, (0..source.order()).map(|a| a % d).collect())
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, s: &ElementSet) -> ElementSet {
        s.map(|x| self.map[x])
    }

    pub fn preimage(&self, s: &ElementSet) -> ElementSet {
        (0..self.map.len()).filter(|&x| s.contains(self.map[x])).collect()
    }

    pub fn is_surjective(&self, target: &Hyperring) -> bool {
        self.image(&ElementSet::full(self.map.len())) == target.carrier()
    }

    pub fn kernel(&self, target: &Hyperring) -> ElementSet {
        self.preimage(&ElementSet::singleton(target.zero()))
    }

    /// A non-unit of the source sent to a unit of the target, if any.
    pub fn unit_condition_violation(&self, source: &Hyperring, target: &Hyperring) -> Option<usize> {
        (0..source.order()).find(|&x| !source.units().contains(x) && target.units().contains(self.map[x]))
    }

    /// `θ⁻¹(Q₂)`, under the requirement that non-units map to non-units.
    pub fn transport_preimage(&self, source: &Hyperring, target: &Hyperring, q2: &ElementSet) -> Result<ElementSet> {
        if let Some(x) = self.unit_condition_violation(source, target) {
            return Err(Error::PreconditionUnmet(format!("non-unit {x} maps to the unit {}", self.map[x])));
        }
        Ok(self.preimage(q2))
    }

    /// `θ(Q₁)`, for surjective `θ` with `Ker θ ⊆ Q₁` and `Q₁` a C-hyperideal.
    pub fn transport_image(
        &self,
        source: &Hyperring,
        target: &Hyperring,
        q1: &ElementSet,
        cache: &CClassCache,
    ) -> Result<ElementSet> {
        if let Some(x) = self.unit_condition_violation(source, target) {
            return Err(Error::PreconditionUnmet(format!("non-unit {x} maps to the unit {}", self.map[x])));
        }
        if !self.is_surjective(target) {
            return Err(Error::PreconditionUnmet("θ is not surjective".into()));
        }
        if !self.kernel(target).is_subset(q1) {
            return Err(Error::PreconditionUnmet(format!("Ker θ = {} ⊄ Q₁ = {q1}", self.kernel(target))));
        }
        if !cache.is_c_hyperideal(q1) {
            return Err(Error::PreconditionUnmet(format!("{q1} is not a C-hyperideal")));
        }
        Ok(self.image(q1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{direct_product, quotient};
    use crate::hyperring::build_zmt;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn quotient_map_sends_the_kernel_to_zero() {
        let r6 = build_zmt(6, &[1, 3]).unwrap();
        let q = quotient(&r6, &set(&[0, 3])).unwrap();
        let theta = GoodHomomorphism::quotient_map(&r6, &q).unwrap();
        assert_eq!(theta.image(&set(&[0, 3])), set(&[0]));
        assert_eq!(theta.kernel(&q.ring), set(&[0, 3]));
        assert!(theta.is_surjective(&q.ring));
    }

    #[test]
    fn identity_and_projection() {
        let r6 = build_zmt(6, &[1, 3]).unwrap();
        let id = GoodHomomorphism::identity(&r6);
        assert_eq!(GoodHomomorphism::new(&r6, &r6, id.table().to_vec()), Ok(id.clone()));
        assert_eq!(id.transport_preimage(&r6, &r6, &set(&[0, 3])).unwrap(), set(&[0, 3]));

        let z4 = build_zmt(4, &[1, 3]).unwrap();
        let p = direct_product(&r6, &z4).unwrap();
        let pi = GoodHomomorphism::first_projection(&p, &r6).unwrap();
        assert_eq!(pi.preimage(&set(&[0, 3])), p.product_set(&set(&[0, 3]), &z4.carrier()));
    }

    #[test]
    fn reductions_and_rejections() {
        let z12 = build_zmt(12, &[1, 5]).unwrap();
        let z4 = build_zmt(4, &[1, 5]).unwrap();
        assert!(GoodHomomorphism::reduction(&z12, &z4).is_ok());
        let z5 = build_zmt(5, &[1, 5]).unwrap();
        assert!(GoodHomomorphism::reduction(&z12, &z5).is_err());
        // Doubling respects + but not ∘.
        let z6 = build_zmt(6, &[1]).unwrap();
        let doubling = (0..6).map(|x| 2 * x % 6).collect();
        assert!(matches!(GoodHomomorphism::new(&z6, &z6, doubling), Err(Error::NotAHomomorphism(_))));
    }

    #[test]
    fn image_preconditions() {
        let r6 = build_zmt(6, &[1, 3]).unwrap();
        let q = quotient(&r6, &set(&[0, 3])).unwrap();
        let theta = GoodHomomorphism::quotient_map(&r6, &q).unwrap();
        let cache = CClassCache::new(&r6);
        // {0} does not contain the kernel.
        assert!(matches!(
            theta.transport_image(&r6, &q.ring, &set(&[0]), &cache),
            Err(Error::PreconditionUnmet(_))
        ));
    }
}
