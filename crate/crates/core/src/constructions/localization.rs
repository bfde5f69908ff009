use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::hyperring::{HyperStructure, Hyperring};

use super::MulTable;

/// How `S` must be closed under `∘`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Closure {
    /// Every `r ∘ r'` meets `S`.
    Weak,
    /// Every `r ∘ r'` lies inside `S`.
    Strict,
}

/// `S⁻¹A`: classes of pairs `(x, r) ∈ A × S` under `(x₁, r₁) ~ (x₂, r₂)` iff
/// `t ∘ r₁ ∘ x₂ = t ∘ r₂ ∘ x₁` for some `t ∈ S`, with
///
/// * `x₁/r₁ ⊙ x₂/r₂ = {a/b : a ∈ x₁ ∘ x₂, b ∈ r₁ ∘ r₂}`,
/// * `x₁/r₁ ⊕ x₂/r₂ = {(a + b)/c : a ∈ r₁ ∘ x₂, b ∈ r₂ ∘ x₁, c ∈ r₁ ∘ r₂}`.
///
/// Denominators `c ∈ r₁ ∘ r₂` are restricted to `S`, which only matters in
/// the weak closure mode. The operations are evaluated on least
/// representatives; the first class pair where another representative gives
/// a different result is kept in `representative_defect`.
#[derive(Debug, Clone)]
pub struct LocalizedHyperring {
    table: MulTable,
    sum: Vec<ElementSet>,
    s: Vec<usize>,
    base_order: usize,
    class_of: Vec<usize>,
    classes: Vec<Vec<(usize, usize)>>,
    closure: Closure,
    representative_defect: Option<(usize, usize)>,
}

pub fn localization(base: &Hyperring, s: &ElementSet, closure: Closure) -> Result<LocalizedHyperring> {
    let one = base
        .one()
        .ok_or_else(|| Error::NotClosed("the ring has no identity, so S cannot contain 1".into()))?;
    if !s.contains(one) {
        return Err(Error::NotClosed(format!("1 = {one} is not in S = {s}")));
    }
    for r in s {
        for t in s {
            let p = base.hyp_at(r, t);
            let ok = match closure {
                Closure::Weak => p.intersects(s),
                Closure::Strict => p.is_subset(s),
            };
            if !ok {
                return Err(Error::NotClosed(format!("{r} ∘ {t} = {p} against S = {s}")));
            }
        }
    }
    let n = base.order();
    let denoms: Vec<usize> = s.to_vec();
    let pairs: Vec<(usize, usize)> = denoms.iter().flat_map(|&r| (0..n).map(move |x| (x, r))).collect();
    let index = |x: usize, r: usize| denoms.binary_search(&r).unwrap() * n + x;
    let related = |(x1, r1): (usize, usize), (x2, r2): (usize, usize)| {
        denoms
            .iter()
            .any(|&t| base.product(&[t, r1, x2]) == base.product(&[t, r2, x1]))
    };
    let p = pairs.len();
    let relation: Vec<bool> = (0..p * p).map(|i| related(pairs[i / p], pairs[i % p])).collect();
    let rel = |a: usize, b: usize| relation[a * p + b];
    for a in 0..p {
        for b in 0..p {
            if rel(a, b) != rel(b, a) {
                return Err(Error::NotAnEquivalence(format!("not symmetric at {:?}, {:?}", pairs[a], pairs[b])));
            }
            if !rel(a, b) {
                continue;
            }
            for c in 0..p {
                if rel(b, c) && !rel(a, c) {
                    return Err(Error::NotAnEquivalence(format!(
                        "not transitive at {:?} ~ {:?} ~ {:?}",
                        pairs[a], pairs[b], pairs[c]
                    )));
                }
            }
        }
    }

    let mut class_of = vec![usize::MAX; p];
    let mut classes: Vec<Vec<(usize, usize)>> = Vec::new();
    for a in 0..p {
        if class_of[a] == usize::MAX {
            let members: Vec<usize> = (a..p).filter(|&b| rel(a, b)).collect();
            for &b in &members {
                class_of[b] = classes.len();
            }
            classes.push(members.into_iter().map(|b| pairs[b]).collect());
        }
    }
    let k = classes.len();
    if k > crate::element_set::MAX_ORDER {
        return Err(Error::BudgetExceeded(format!("{k} fraction classes")));
    }
    let class = |x: usize, r: usize| class_of[index(x, r)];
    let denominators = |r1: usize, r2: usize| base.hyp_at(r1, r2).intersection(s);
    let times = |(x1, r1): (usize, usize), (x2, r2): (usize, usize)| -> ElementSet {
        let bs = denominators(r1, r2);
        let mut out = ElementSet::empty();
        for a in base.hyp_at(x1, x2) {
            for b in &bs {
                out.insert(class(a, b));
            }
        }
        out
    };
    let plus = |(x1, r1): (usize, usize), (x2, r2): (usize, usize)| -> ElementSet {
        let cs = denominators(r1, r2);
        let mut out = ElementSet::empty();
        for a in base.hyp_at(r1, x2) {
            for b in base.hyp_at(r2, x1) {
                for c in &cs {
                    out.insert(class(base.add(a, b), c));
                }
            }
        }
        out
    };
    let mut mul = Vec::with_capacity(k * k);
    let mut sum = Vec::with_capacity(k * k);
    let mut representative_defect = None;
    for i in 0..k {
        for j in 0..k {
            let (pi, pj) = (classes[i][0], classes[j][0]);
            let (m, a) = (times(pi, pj), plus(pi, pj));
            if representative_defect.is_none()
                && classes[i]
                    .iter()
                    .any(|&x| classes[j].iter().any(|&y| times(x, y) != m || plus(x, y) != a))
            {
                representative_defect = Some((i, j));
            }
            mul.push(m);
            sum.push(a);
        }
    }
    Ok(LocalizedHyperring {
        table: MulTable::new(k, mul, Some(class(one, one))),
        sum,
        s: denoms.clone(),
        base_order: n,
        class_of,
        classes,
        closure,
        representative_defect,
    })
}

impl LocalizedHyperring {
    fn index(&self, x: usize, r: usize) -> usize {
        self.s.binary_search(&r).expect("denominator outside S") * self.base_order + x
    }

    /// The class `x/r`.
    pub fn fraction(&self, x: usize, r: usize) -> usize {
        self.class_of[self.index(x, r)]
    }

    pub fn classes(&self) -> &[Vec<(usize, usize)>] {
        &self.classes
    }

    pub fn closure(&self) -> Closure {
        self.closure
    }

    /// `x/r ⊕ y/t` as a set of classes.
    pub fn sum(&self, a: usize, b: usize) -> &ElementSet {
        &self.sum[a * self.table.order() + b]
    }

    pub fn representative_defect(&self) -> Option<(usize, usize)> {
        self.representative_defect
    }

    /// The localization map `a ↦ a/1`.
    pub fn map(&self, a: usize, one: usize) -> usize {
        self.fraction(a, one)
    }

    /// `S⁻¹I`, the classes of fractions with numerator in `I`.
    pub fn localize(&self, i: &ElementSet) -> ElementSet {
        self.classes
            .iter()
            .enumerate()
            .filter(|(_, members)| members.iter().any(|&(x, _)| i.contains(x)))
            .map(|(c, _)| c)
            .collect()
    }

    /// Classes containing a fraction with a non-unit numerator.
    pub fn nonunit_numerators(&self, base_units: &ElementSet) -> ElementSet {
        self.classes
            .iter()
            .enumerate()
            .filter(|(_, members)| members.iter().any(|&(x, _)| !base_units.contains(x)))
            .map(|(c, _)| c)
            .collect()
    }
}

impl HyperStructure for LocalizedHyperring {
    fn order(&self) -> usize {
        self.table.order()
    }

    fn mul(&self, x: usize, y: usize) -> &ElementSet {
        self.table.mul(x, y)
    }

    fn units(&self) -> &ElementSet {
        self.table.units()
    }

    fn is_commutative(&self) -> bool {
        self.table.is_commutative()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperring::build_zmt;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    /// With `S = {1}` two fractions are equal iff `1∘1∘x` agree; in R6 that
    /// set is `{x, 3x}`, so the classes are the fibres of `x ↦ {x, 3x}`.
    #[test]
    fn trivial_denominators() {
        let r6 = build_zmt(6, &[1, 3]).unwrap();
        let loc = localization(&r6, &set(&[1]), Closure::Weak).unwrap();
        assert!(localization(&r6, &set(&[1]), Closure::Strict).is_err());
        let key = |x: usize| -> ElementSet { [x % 6, 3 * x % 6].into_iter().collect() };
        let mut expected: Vec<ElementSet> = (0..6).map(key).collect();
        expected.sort();
        expected.dedup();
        assert_eq!(loc.classes().len(), expected.len());
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(loc.fraction(x, 1) == loc.fraction(y, 1), key(x) == key(y));
            }
        }
    }

    #[test]
    fn units_as_denominators() {
        let r6 = build_zmt(6, &[1, 3]).unwrap();
        let loc = localization(&r6, &set(&[1, 5]), Closure::Weak).unwrap();
        assert!(loc.classes().len() <= 6);
        assert!(loc.representative_defect().is_none());
        assert_eq!(loc.localize(&set(&[0])), ElementSet::singleton(loc.fraction(0, 1)));
    }

    #[test]
    fn zero_divisor_collapses() {
        let z6 = build_zmt(6, &[1]).unwrap();
        let loc = localization(&z6, &set(&[0, 1]), Closure::Strict).unwrap();
        assert_eq!(loc.classes().len(), 1);
    }

    #[test]
    fn closure_errors() {
        let r6 = build_zmt(6, &[1, 3]).unwrap();
        assert!(matches!(localization(&r6, &set(&[5]), Closure::Weak), Err(Error::NotClosed(_))));
        // 2 ∘ 2 = {4, 0} misses {1, 2}.
        assert!(matches!(localization(&r6, &set(&[1, 2]), Closure::Weak), Err(Error::NotClosed(_))));
        let zt = build_zmt(6, &[2, 4]).unwrap();
        assert!(localization(&zt, &set(&[1]), Closure::Weak).is_err());
    }
}
