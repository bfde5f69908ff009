use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::hyperring::Hyperring;
use crate::ideal::CClassCache;

/// `A / γ*`, an ordinary ring whose elements are the `γ*`-classes.
#[derive(Debug, Clone)]
pub struct FundamentalRing {
    pub ring: Hyperring,
    classes: Vec<ElementSet>,
    class_of: Vec<usize>,
    from_sums: bool,
}

/// `γ` relates `x` and `y` when both lie in one member of `𝔘`; `γ*` is its
/// transitive closure. When `𝔘` is over the cache budget the classes are
/// taken as the cosets of `γ*(0)`, which is the same partition.
///
/// The induced operations are checked to be single-valued and independent
/// of representatives; the first failure is reported with its witness.
pub fn fundamental_ring(base: &Hyperring, cache: &CClassCache) -> Result<FundamentalRing> {
    let n = base.order();
    let (class_of, from_sums) = match cache.sums() {
        Some(sums) => (partition_by_sums(n, sums), true),
        None => (partition_by_cosets(base, cache.gamma_zero()), false),
    };
    let k = class_of.iter().max().map_or(0, |m| m + 1);
    let mut classes = vec![ElementSet::empty(); k];
    for (x, &c) in class_of.iter().enumerate() {
        classes[c].insert(x);
    }
    let mut add = vec![usize::MAX; k * k];
    let mut mul = vec![usize::MAX; k * k];
    for x in 0..n {
        for y in 0..n {
            let cell = class_of[x] * k + class_of[y];
            let sum = class_of[base.add(x, y)];
            if add[cell] != usize::MAX && add[cell] != sum {
                return Err(Error::IllDefinedQuotient(format!("sum depends on representatives at ({x}, {y})")));
            }
            add[cell] = sum;
            for z in base.hyp_at(x, y) {
                let c = class_of[z];
                if mul[cell] != usize::MAX && mul[cell] != c {
                    return Err(Error::IllDefinedQuotient(format!(
                        "product class of ({x}, {y}) is not unique (element {z})"
                    )));
                }
                mul[cell] = c;
            }
        }
    }
    let hyp = mul.into_iter().map(ElementSet::singleton).collect();
    let ring = Hyperring::new(k, add, hyp)?;
    Ok(FundamentalRing {
        ring,
        classes,
        class_of,
        from_sums,
    })
}

fn partition_by_sums(n: usize, sums: &[ElementSet]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = x;
        while parent[c] != r {
            let next = parent[c];
            parent[c] = r;
            c = next;
        }
        r
    }
    for u in sums {
        if let Some(base) = u.first() {
            for x in u {
                let (a, b) = (find(&mut parent, base), find(&mut parent, x));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    relabel((0..n).map(|x| find(&mut parent, x)).collect())
}

fn partition_by_cosets(base: &Hyperring, gamma_zero: &ElementSet) -> Vec<usize> {
    let n = base.order();
    let mut root = vec![usize::MAX; n];
    for x in 0..n {
        if root[x] == usize::MAX {
            for g in gamma_zero {
                root[base.add(x, g)] = x;
            }
        }
    }
    relabel(root)
}

/// Number classes by their least member.
fn relabel(roots: Vec<usize>) -> Vec<usize> {
    let mut label = vec![usize::MAX; roots.len()];
    let mut next = 0;
    roots
        .iter()
        .map(|&r| {
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            label[r]
        })
        .collect()
}

impl FundamentalRing {
    pub fn classes(&self) -> &[ElementSet] {
        &self.classes
    }

    pub fn class_map(&self) -> &[usize] {
        &self.class_of
    }

    /// Whether the classes came from the `𝔘` fixpoint rather than the
    /// subgroup `γ*(0)`.
    pub fn from_sums(&self) -> bool {
        self.from_sums
    }

    /// `Q / γ*`, the classes meeting `Q`.
    pub fn image(&self, q: &ElementSet) -> ElementSet {
        q.iter().map(|x| self.class_of[x]).collect()
    }

    /// Whether `Q` is a union of classes.
    pub fn is_class_union(&self, q: &ElementSet) -> bool {
        q.iter().all(|x| self.classes[self.class_of[x]].is_subset(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperring::build_zmt;
    use crate::ideal::CClassCache;

    #[test]
    fn r6_has_two_classes() {
        let r6 = build_zmt(6, &[1, 3]).unwrap();
        let f = fundamental_ring(&r6, &CClassCache::new(&r6)).unwrap();
        assert_eq!(f.classes().len(), 2);
        assert_eq!(f.classes()[0], [0usize, 2, 4].into_iter().collect());
        assert!(f.ring.is_valid());
        assert!(f.from_sums());
        // ℤ_2: 1·1 = 1.
        assert_eq!(*f.ring.hyp_at(1, 1), ElementSet::singleton(1));
    }

    #[test]
    fn ordinary_rings_have_singleton_classes() {
        let z6 = build_zmt(6, &[1]).unwrap();
        let f = fundamental_ring(&z6, &CClassCache::new(&z6)).unwrap();
        assert_eq!(f.classes().len(), 6);
        assert_eq!(f.ring.add_table(), z6.add_table());
    }

    /// The 𝔘 route and the coset route give the same partition.
    #[test]
    fn routes_agree() {
        for m in [4usize, 6, 8, 9] {
            for a in 0..m {
                for b in a + 1..m {
                    let ring = build_zmt(m, &[a, b]).unwrap();
                    let full = CClassCache::new(&ring);
                    if full.sums().is_none() {
                        continue;
                    }
                    let starved = CClassCache::with_budget(&ring, 0);
                    if starved.sums().is_some() {
                        continue;
                    }
                    let x = fundamental_ring(&ring, &full).unwrap();
                    let y = fundamental_ring(&ring, &starved).unwrap();
                    assert!(!y.from_sums());
                    assert_eq!(x.classes(), y.classes(), "m={m} T={{{a},{b}}}");
                }
            }
        }
    }
}
