//! Finite multiplicative hyperrings given by Cayley tables.
//!
//! A multiplicative hyperring is an abelian group `(A, +)` together with a
//! hyperoperation `∘ : A × A → P*(A)` that is associative as a set operation,
//! distributes over `+` by inclusion, and satisfies the sign rule
//! `x ∘ (-y) = (-x) ∘ y = -(x ∘ y)`. Carriers are always `{0, .., order - 1}`.

use rayon::prelude::*;
use thiserror::Error;

use crate::element_set::{ElementSet, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperringError {
    #[error("order must be between 1 and {MAX_ORDER}, got {0}")]
    BadOrder(usize),
    #[error("table shape mismatch: {0}")]
    TableShape(String),
    #[error("(A, +) is not an abelian group: {0}")]
    NotAGroup(String),
    #[error("hyperproduct {0} ∘ {1} is empty")]
    EmptyHyperproduct(usize, usize),
    #[error("hyperoperation is not associative at ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("distributivity fails at ({0}, {1}, {2}): x∘(y+z) ⊄ x∘y + x∘z")]
    NonDistributive(usize, usize, usize),
    #[error("sign rule fails at ({0}, {1}): x∘(-y) ≠ -(x∘y)")]
    SignRuleViolation(usize, usize),
    #[error("subset hyperproduct has an empty operand")]
    EmptyOperand,
    #[error("element {0} is not an identity element")]
    NotAnIdentity(usize),
}

/// The multiplicative side of a finite hyperstructure.
///
/// Every predicate in this crate only needs products, units and the carrier
/// size, so constructions without a usable addition (monomial extensions,
/// localizations) implement this trait directly. Products of sequences are
/// left folds; for associative structures the bracketing is irrelevant.
pub trait HyperStructure: Sync {
    fn order(&self) -> usize;

    fn mul(&self, x: usize, y: usize) -> &ElementSet;

    /// Units relative to the designated identity; empty without one.
    fn units(&self) -> &ElementSet;

    fn is_commutative(&self) -> bool;

    /// `S ∘ y`, the union of `s ∘ y` over `s ∈ S`.
    fn set_mul(&self, s: &ElementSet, y: usize) -> ElementSet {
        let mut out = ElementSet::empty();
        for a in s {
            out.union_with(self.mul(a, y));
        }
        out
    }

    /// `x ∘ S`.
    fn mul_set(&self, x: usize, s: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty();
        for a in s {
            out.union_with(self.mul(x, a));
        }
        out
    }

    /// `x_1 ∘ x_2 ∘ .. ∘ x_n` as a left fold; a single element gives `{x}`.
    fn product(&self, seq: &[usize]) -> ElementSet {
        assert!(!seq.is_empty(), "hyperproduct of an empty sequence");
        let mut acc = ElementSet::singleton(seq[0]);
        for &x in &seq[1..] {
            acc = self.set_mul(&acc, x);
        }
        acc
    }

    /// `X_1 ∘ X_2 ∘ ..` for subsets, as a left fold.
    fn subset_product(&self, sets: &[ElementSet]) -> Result<ElementSet, HyperringError> {
        let (first, rest) = sets.split_first().ok_or(HyperringError::EmptyOperand)?;
        if sets.iter().any(ElementSet::is_empty) {
            return Err(HyperringError::EmptyOperand);
        }
        let mut acc = *first;
        for s in rest {
            let mut next = ElementSet::empty();
            for y in s {
                next.union_with(&self.set_mul(&acc, y));
            }
            acc = next;
        }
        Ok(acc)
    }

    /// The distinct powers `x, x^2, x^3, ..` up to (excluding) the first
    /// repetition. The sequence of powers of `x` is eventually periodic, so
    /// every power equals one of the returned sets.
    fn powers(&self, x: usize) -> Vec<ElementSet> {
        let mut seen = vec![ElementSet::singleton(x)];
        loop {
            let next = self.set_mul(seen.last().unwrap(), x);
            if seen.contains(&next) {
                return seen;
            }
            seen.push(next);
        }
    }
}

/// Computed structural properties of a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomFlags {
    pub commutative_add: bool,
    pub hyperop_commutative: bool,
    pub strongly_distributive: bool,
}

#[derive(Debug, Clone)]
pub struct Hyperring {
    order: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
    hyp: Vec<ElementSet>,
    zero: usize,
    identities: ElementSet,
    one: Option<usize>,
    units: ElementSet,
    flags: AxiomFlags,
    strong_distributivity_witness: Option<(usize, usize, usize)>,
    defect: Option<HyperringError>,
}

impl Hyperring {
    /// Validate the tables and build the hyperring.
    ///
    /// `add` and `hyp` are row-major `order × order` tables. Fails with the
    /// first violated axiom, checked in the order: group, nonempty products,
    /// associativity, distributivity, sign rule. Commutativity of `∘` is
    /// reported as a flag rather than an error.
    pub fn new(
        order: usize,
        add: Vec<usize>,
        hyp: Vec<ElementSet>,
    ) -> Result<Self, HyperringError> {
        let ring = Self::assemble(order, add, hyp)?;
        match ring.defect {
            Some(e) => Err(e),
            None => Ok(ring),
        }
    }

    /// Like [`Hyperring::new`], but an associativity, distributivity or sign
    /// defect is recorded on the result instead of rejecting it. Group and
    /// shape errors are still fatal. Constructions whose well-definedness is
    /// not guaranteed (hypermatrices, quotients) go through here so the
    /// defect can be surfaced with its witness.
    pub fn assemble(
        order: usize,
        add: Vec<usize>,
        hyp: Vec<ElementSet>,
    ) -> Result<Self, HyperringError> {
        if order == 0 || order > MAX_ORDER {
            return Err(HyperringError::BadOrder(order));
        }
        if add.len() != order * order || hyp.len() != order * order {
            return Err(HyperringError::TableShape(format!(
                "expected {} entries, got add={} hyp={}",
                order * order,
                add.len(),
                hyp.len()
            )));
        }
        if let Some(&bad) = add.iter().find(|&&v| v >= order) {
            return Err(HyperringError::TableShape(format!(
                "sum {bad} outside carrier"
            )));
        }
        let carrier = ElementSet::full(order);
        if let Some(i) = hyp.iter().position(|s| !s.is_subset(&carrier)) {
            return Err(HyperringError::TableShape(format!(
                "hyperproduct {} ∘ {} leaves the carrier",
                i / order,
                i % order
            )));
        }

        let (zero, neg) = check_group(order, &add)?;
        if let Some(i) = hyp.iter().position(ElementSet::is_empty) {
            return Err(HyperringError::EmptyHyperproduct(i / order, i % order));
        }

        let mut ring = Hyperring {
            order,
            add,
            neg,
            hyp,
            zero,
            identities: ElementSet::empty(),
            one: None,
            units: ElementSet::empty(),
            flags: AxiomFlags {
                commutative_add: true,
                hyperop_commutative: true,
                strongly_distributive: true,
            },
            strong_distributivity_witness: None,
            defect: None,
        };
        ring.flags.hyperop_commutative = (0..order)
            .all(|x| (x + 1..order).all(|y| ring.hyp_at(x, y) == ring.hyp_at(y, x)));
        ring.defect = ring.check_associativity().err();
        if ring.defect.is_none() {
            match ring.check_distributivity() {
                Ok(witness) => {
                    ring.flags.strongly_distributive = witness.is_none();
                    ring.strong_distributivity_witness = witness;
                }
                Err(e) => ring.defect = Some(e),
            }
        } else {
            ring.flags.strongly_distributive = false;
        }
        if ring.defect.is_none() {
            ring.defect = ring.check_sign_rule().err();
        }
        ring.identities = (0..order)
            .filter(|&e| (0..order).all(|a| ring.hyp_at(a, e).contains(a)))
            .collect();
        ring.one = ring.identities.first();
        ring.units = ring.compute_units();
        Ok(ring)
    }

    /// Designate which identity element plays the role of `1` for the unit
    /// predicate. The default is the smallest identity.
    pub fn with_identity(mut self, e: usize) -> Result<Self, HyperringError> {
        if !self.identities.contains(e) {
            return Err(HyperringError::NotAnIdentity(e));
        }
        self.one = Some(e);
        self.units = self.compute_units();
        Ok(self)
    }

    fn compute_units(&self) -> ElementSet {
        let Some(one) = self.one else {
            return ElementSet::empty();
        };
        (0..self.order)
            .filter(|&x| (0..self.order).any(|y| self.hyp_at(x, y).contains(one)))
            .collect()
    }

    fn check_associativity(&self) -> Result<(), HyperringError> {
        let n = self.order;
        let found = (0..n).into_par_iter().find_map_first(|x| {
            for y in 0..n {
                let xy = self.hyp_at(x, y);
                for z in 0..n {
                    let left = self.set_mul(xy, z);
                    let right = self.mul_set(x, self.hyp_at(y, z));
                    if left != right {
                        return Some((x, y, z));
                    }
                }
            }
            None
        });
        match found {
            Some((x, y, z)) => Err(HyperringError::NonAssociative(x, y, z)),
            None => Ok(()),
        }
    }

    /// Checks `x∘(y+z) ⊆ x∘y + x∘z` (and the right-hand version), returning a
    /// witness where the inclusion is strict, if any.
    fn check_distributivity(&self) -> Result<Option<(usize, usize, usize)>, HyperringError> {
        let n = self.order;
        let commutative = self.flags.hyperop_commutative;
        let results: Vec<Result<Option<(usize, usize, usize)>, HyperringError>> = (0..n)
            .into_par_iter()
            .map(|x| {
                let mut strict = None;
                for y in 0..n {
                    for z in 0..n {
                        let yz = self.add(y, z);
                        let left = self.hyp_at(x, yz);
                        let right = self.sum_set(self.hyp_at(x, y), self.hyp_at(x, z));
                        if !left.is_subset(&right) {
                            return Err(HyperringError::NonDistributive(x, y, z));
                        }
                        if strict.is_none() && *left != right {
                            strict = Some((x, y, z));
                        }
                        if !commutative {
                            let left = self.hyp_at(yz, x);
                            let right = self.sum_set(self.hyp_at(y, x), self.hyp_at(z, x));
                            if !left.is_subset(&right) {
                                return Err(HyperringError::NonDistributive(x, y, z));
                            }
                            if strict.is_none() && *left != right {
                                strict = Some((x, y, z));
                            }
                        }
                    }
                }
                Ok(strict)
            })
            .collect();
        let mut witness = None;
        for r in results {
            let w = r?;
            if witness.is_none() {
                witness = w;
            }
        }
        Ok(witness)
    }

    fn check_sign_rule(&self) -> Result<(), HyperringError> {
        for x in 0..self.order {
            for y in 0..self.order {
                let negated = self.neg_set(self.hyp_at(x, y));
                if *self.hyp_at(x, self.neg(y)) != negated || *self.hyp_at(self.neg(x), y) != negated
                {
                    return Err(HyperringError::SignRuleViolation(x, y));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn hyp_at(&self, x: usize, y: usize) -> &ElementSet {
        &self.hyp[x * self.order + y]
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order + y]
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg[y])
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    /// The designated identity `1`, if the ring has any identity element.
    pub fn one(&self) -> Option<usize> {
        self.one
    }

    /// All `e` with `a ∈ a ∘ e` for every `a`.
    pub fn identity_elements(&self) -> &ElementSet {
        &self.identities
    }

    pub fn has_identity(&self) -> bool {
        self.one.is_some()
    }

    pub fn flags(&self) -> AxiomFlags {
        self.flags
    }

    /// A triple where `x∘(y+z)` is strictly smaller than `x∘y + x∘z`.
    pub fn strong_distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        self.strong_distributivity_witness
    }

    /// The first violated axiom, for structures built with [`Hyperring::assemble`].
    pub fn defect(&self) -> Option<&HyperringError> {
        self.defect.as_ref()
    }

    pub fn is_valid(&self) -> bool {
        self.defect.is_none()
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub fn hyp_table(&self) -> &[ElementSet] {
        &self.hyp
    }

    /// `{a + b : a ∈ A, b ∈ B}`.
    pub fn sum_set(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        let mut out = ElementSet::empty();
        for x in small {
            for y in large {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    pub fn neg_set(&self, a: &ElementSet) -> ElementSet {
        a.map(|x| self.neg[x])
    }

    /// `x_1 ∘ .. ∘ x_n` for a nonempty sequence of elements.
    pub fn hyperproduct(&self, seq: &[usize]) -> ElementSet {
        self.product(seq)
    }

    /// `X_1 ∘ .. ∘ X_n` for nonempty subsets.
    pub fn subset_hyperproduct(&self, sets: &[ElementSet]) -> Result<ElementSet, HyperringError> {
        self.subset_product(sets)
    }
}

impl HyperStructure for Hyperring {
    fn order(&self) -> usize {
        self.order
    }

    #[inline]
    fn mul(&self, x: usize, y: usize) -> &ElementSet {
        &self.hyp[x * self.order + y]
    }

    fn units(&self) -> &ElementSet {
        &self.units
    }

    fn is_commutative(&self) -> bool {
        self.flags.hyperop_commutative
    }
}

fn check_group(order: usize, add: &[usize]) -> Result<(usize, Vec<usize>), HyperringError> {
    let at = |x: usize, y: usize| add[x * order + y];
    let zero = (0..order)
        .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
        .ok_or_else(|| HyperringError::NotAGroup("no additive identity".into()))?;
    for x in 0..order {
        for y in 0..order {
            if at(x, y) != at(y, x) {
                return Err(HyperringError::NotAGroup(format!(
                    "{x} + {y} ≠ {y} + {x}"
                )));
            }
            for z in 0..order {
                if at(at(x, y), z) != at(x, at(y, z)) {
                    return Err(HyperringError::NotAGroup(format!(
                        "addition not associative at ({x}, {y}, {z})"
                    )));
                }
            }
        }
    }
    let mut neg = vec![0; order];
    for (x, n) in neg.iter_mut().enumerate() {
        *n = (0..order)
            .find(|&y| at(x, y) == zero)
            .ok_or_else(|| HyperringError::NotAGroup(format!("{x} has no inverse")))?;
    }
    Ok((zero, neg))
}

/// `ℤ_m` with `a ∘ b = {a·t·b mod m : t ∈ T}`.
///
/// This family always satisfies the axioms; the tables are still validated.
pub fn build_zmt(m: usize, t: &[usize]) -> Result<Hyperring, HyperringError> {
    if m < 1 || m > MAX_ORDER {
        return Err(HyperringError::BadOrder(m));
    }
    if t.is_empty() {
        return Err(HyperringError::EmptyHyperproduct(0, 0));
    }
    let t: Vec<usize> = t.iter().map(|x| x % m).collect();
    let add = (0..m * m).map(|i| (i / m + i % m) % m).collect();
    let hyp = (0..m * m)
        .map(|i| {
            let ab = (i / m) * (i % m) % m;
            t.iter().map(|&s| ab * s % m).collect()
        })
        .collect();
    Hyperring::new(m, add, hyp)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    fn r6() -> Hyperring {
        build_zmt(6, &[1, 3]).unwrap()
    }

    /// Direct axiom loop over the mod-6 formulas, independent of the table code.
    #[test]
    fn r6_axioms_by_direct_loop() {
        let prod = |a: usize, b: usize| -> Vec<usize> {
            let mut v: Vec<usize> = [1, 3].iter().map(|t| a * t * b % 6).collect();
            v.sort();
            v.dedup();
            v
        };
        for x in 0..6 {
            for y in 0..6 {
                for z in 0..6 {
                    let mut l: Vec<usize> = prod(x, y).iter().flat_map(|&b| prod(b, z)).collect();
                    let mut r: Vec<usize> = prod(y, z).iter().flat_map(|&a| prod(x, a)).collect();
                    l.sort();
                    l.dedup();
                    r.sort();
                    r.dedup();
                    assert_eq!(l, r);
                    let lhs = prod(x, (y + z) % 6);
                    let rhs: Vec<usize> = prod(x, y)
                        .iter()
                        .flat_map(|&a| prod(x, z).into_iter().map(move |b| (a + b) % 6))
                        .collect();
                    assert!(lhs.iter().all(|v| rhs.contains(v)));
                }
            }
        }
        let ring = r6();
        assert!(ring.is_valid());
        assert_eq!(ring.order(), 6);
        assert!(ring.flags().hyperop_commutative);
    }

    #[test]
    fn r6_not_strongly_distributive() {
        let ring = r6();
        assert!(!ring.flags().strongly_distributive);
        // 1∘(1+1) = {2,0} while 1∘1 + 1∘1 = {2,4,0}.
        assert_eq!(*ring.hyp_at(1, ring.add(1, 1)), set(&[0, 2]));
        assert_eq!(
            ring.sum_set(ring.hyp_at(1, 1), ring.hyp_at(1, 1)),
            set(&[0, 2, 4])
        );
        let (x, y, z) = ring.strong_distributivity_witness().unwrap();
        assert_ne!(
            *ring.hyp_at(x, ring.add(y, z)),
            ring.sum_set(ring.hyp_at(x, y), ring.hyp_at(x, z))
        );
    }

    #[test]
    fn empty_hyperproduct_rejected() {
        let ring = r6();
        let mut hyp = ring.hyp_table().to_vec();
        hyp[2 * 6 + 3] = ElementSet::empty();
        let err = Hyperring::new(6, ring.add_table().to_vec(), hyp).unwrap_err();
        assert_eq!(err, HyperringError::EmptyHyperproduct(2, 3));
    }

    #[test]
    fn not_a_group_rejected() {
        let ring = r6();
        let mut add = ring.add_table().to_vec();
        add[1] = 2;
        assert!(matches!(
            Hyperring::new(6, add, ring.hyp_table().to_vec()),
            Err(HyperringError::NotAGroup(_))
        ));
    }

    #[test]
    fn non_associative_table_reported_with_witness() {
        // ℤ_3 with 1∘1 = {1,2} and everything else as in the ordinary ring.
        let base = build_zmt(3, &[1]).unwrap();
        let mut hyp = base.hyp_table().to_vec();
        hyp[3 + 1] = set(&[1, 2]);
        let err = Hyperring::new(3, base.add_table().to_vec(), hyp.clone()).unwrap_err();
        let HyperringError::NonAssociative(x, y, z) = err else {
            panic!("expected associativity failure, got {err:?}");
        };
        let loose = Hyperring::assemble(3, base.add_table().to_vec(), hyp).unwrap();
        assert_ne!(loose.set_mul(loose.hyp_at(x, y), z), loose.mul_set(x, loose.hyp_at(y, z)));
        assert!(!loose.is_valid());
    }

    #[test]
    fn sign_rule_violation_detected() {
        // Breaking the symmetry 1∘2 = 2∘1 = -(1∘1) must trip one of the axioms.
        let base = build_zmt(3, &[0, 1]).unwrap();
        let mut hyp = base.hyp_table().to_vec();
        hyp[3 + 2] = set(&[2]);
        hyp[2 * 3 + 1] = set(&[2]);
        let err = Hyperring::new(3, base.add_table().to_vec(), hyp).unwrap_err();
        assert!(matches!(
            err,
            HyperringError::NonAssociative(..)
                | HyperringError::NonDistributive(..)
                | HyperringError::SignRuleViolation(..)
        ));
    }

    #[test]
    fn zmt_degenerate_is_ordinary_ring() {
        for m in 2..=9 {
            let ring = build_zmt(m, &[1]).unwrap();
            assert!(ring.flags().strongly_distributive);
            for x in 0..m {
                for y in 0..m {
                    assert_eq!(*ring.hyp_at(x, y), ElementSet::singleton(x * y % m));
                }
            }
            let classical: ElementSet = (0..m).filter(|&x| gcd(x, m) == 1).collect();
            assert_eq!(*ring.units(), classical, "m = {m}");
        }
    }

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { gcd(b, a % b) }
    }

    #[test]
    fn units_and_identities() {
        let ring = r6();
        assert!(ring.identity_elements().contains(1));
        assert_eq!(*ring.units(), set(&[1, 5]));

        // Scan all pairs for 1 ∈ x∘y, directly from the formula.
        let z8 = build_zmt(8, &[1, 3]).unwrap();
        let expected: ElementSet = (0..8usize)
            .filter(|&x| (0..8usize).any(|y| [1usize, 3].iter().any(|t| x * t * y % 8 == 1)))
            .collect();
        assert_eq!(*z8.units(), expected);
        assert_eq!(expected, set(&[1, 3, 5, 7]));
        assert_eq!(*z8.identity_elements(), set(&[1, 3]));

        // With 3 designated as the identity the units are recomputed.
        let z8_three = z8.clone().with_identity(3).unwrap();
        let expected3: ElementSet = (0..8usize)
            .filter(|&x| (0..8usize).any(|y| [1usize, 3].iter().any(|t| x * t * y % 8 == 3)))
            .collect();
        assert_eq!(*z8_three.units(), expected3);
        assert!(z8.clone().with_identity(5).is_err());
    }

    #[test]
    fn no_identity_means_no_units() {
        let ring = build_zmt(6, &[2, 4]).unwrap();
        assert!(!ring.has_identity());
        assert!(ring.units().is_empty());
    }

    #[test]
    fn hyperproducts() {
        let ring = r6();
        assert_eq!(ring.hyperproduct(&[4]), ElementSet::singleton(4));
        assert_eq!(ring.hyperproduct(&[1, 1]), set(&[1, 3]));
        let s = set(&[1, 2, 5]);
        assert_eq!(
            ring.subset_hyperproduct(&[s, ElementSet::singleton(0)]).unwrap(),
            ElementSet::singleton(0)
        );
        assert_eq!(
            ring.subset_hyperproduct(&[ElementSet::singleton(2), ElementSet::singleton(5)])
                .unwrap(),
            ring.hyperproduct(&[2, 5])
        );
        assert_eq!(
            ring.subset_hyperproduct(&[s, ElementSet::empty()]),
            Err(HyperringError::EmptyOperand)
        );
    }

    #[test]
    fn fold_order_independence_small_rings() {
        for (m, t) in [(6usize, vec![1usize, 3]), (8, vec![2, 4]), (4, vec![1, 2]), (5, vec![2, 3])] {
            let ring = build_zmt(m, &t).unwrap();
            for a in 0..m {
                for b in 0..m {
                    for c in 0..m {
                        for d in 0..m {
                            let left = ring.product(&[a, b, c, d]);
                            let ab = ring.product(&[a, b]);
                            let cd = ring.product(&[c, d]);
                            let split = ring.subset_product(&[ab, cd]).unwrap();
                            let bcd = ring.product(&[b, c, d]);
                            let right = ring.mul_set(a, &bcd);
                            assert_eq!(left, split);
                            assert_eq!(left, right);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn zmt_family_always_validates() {
        for m in 1..=16usize {
            let elems: Vec<usize> = (0..m).collect();
            for size in 1..=3usize.min(m) {
                for t in combos(&elems, size) {
                    let ring = build_zmt(m, &t);
                    assert!(ring.is_ok(), "m={m} T={t:?}: {:?}", ring.err());
                }
            }
        }
    }

    fn combos(xs: &[usize], k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for (i, &x) in xs.iter().enumerate() {
            for mut rest in combos(&xs[i + 1..], k - 1) {
                rest.insert(0, x);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn powers_stop_at_first_repeat() {
        let ring = r6();
        let p = ring.powers(2);
        assert_eq!(p[0], ElementSet::singleton(2));
        assert_eq!(p[1], set(&[0, 4]));
        let next = ring.set_mul(p.last().unwrap(), 2);
        assert!(p.contains(&next));
    }
}
