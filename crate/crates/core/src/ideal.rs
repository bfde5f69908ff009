//! Hyperideals of a finite hyperring and the classical predicates on them.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::hyperring::{HyperStructure, Hyperring};

/// A subset closed under subtraction and absorbing under `∘`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperideal(ElementSet);

impl Hyperideal {
    pub fn new(ring: &Hyperring, members: ElementSet) -> Result<Self> {
        if is_hyperideal(ring, &members) {
            Ok(Hyperideal(members))
        } else {
            Err(Error::NotAHyperideal(members.to_string()))
        }
    }

    pub fn members(&self) -> &ElementSet {
        &self.0
    }

    pub fn is_proper(&self, ring: &Hyperring) -> bool {
        self.0.len() < ring.order()
    }
}

impl fmt::Display for Hyperideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_hyperideal(ring: &Hyperring, s: &ElementSet) -> bool {
    if s.is_empty() || !s.is_subset(&ring.carrier()) {
        return false;
    }
    s.iter().all(|x| s.iter().all(|y| s.contains(ring.sub(x, y))))
        && s.iter().all(|x| (0..ring.order()).all(|r| ring.hyp_at(r, x).is_subset(s)))
}

/// Least hyperideal containing the generators (and zero).
pub fn generated_hyperideal(ring: &Hyperring, generators: &ElementSet) -> ElementSet {
    let mut ideal = ElementSet::singleton(ring.zero());
    let mut queue: VecDeque<usize> = VecDeque::from([ring.zero()]);
    for g in generators {
        if !ideal.contains(g) {
            ideal.insert(g);
            queue.push_back(g);
        }
    }
    let push = |z: usize, ideal: &mut ElementSet, queue: &mut VecDeque<usize>| {
        if !ideal.contains(z) {
            ideal.insert(z);
            queue.push_back(z);
        }
    };
    while let Some(x) = queue.pop_front() {
        for y in ideal.iter().collect::<Vec<_>>() {
            push(ring.sub(x, y), &mut ideal, &mut queue);
            push(ring.sub(y, x), &mut ideal, &mut queue);
        }
        for r in 0..ring.order() {
            for z in ring.hyp_at(r, x) {
                push(z, &mut ideal, &mut queue);
            }
        }
    }
    ideal
}

/// Every hyperideal of the ring, canonically sorted (by size, then members).
/// The whole carrier is always the last entry.
///
/// Each hyperideal is generated by its own members, so closing single
/// elements onto already-found ideals reaches the whole lattice.
pub fn enumerate_hyperideals(ring: &Hyperring) -> Vec<ElementSet> {
    let start = generated_hyperideal(ring, &ElementSet::empty());
    let mut seen: HashSet<ElementSet> = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(ideal) = queue.pop_front() {
        for g in ring.carrier().difference(&ideal).iter() {
            let mut gens = ideal;
            gens.insert(g);
            let next = generated_hyperideal(ring, &gens);
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    let mut all: Vec<ElementSet> = seen.into_iter().collect();
    all.sort();
    all
}

fn require_proper(ring: &Hyperring, q: &ElementSet) -> Result<()> {
    if q.len() >= ring.order() {
        Err(Error::ImproperIdeal)
    } else {
        Ok(())
    }
}

/// A pair `(x, y)` outside `Q` with `x ∘ y ⊆ Q`, if any.
pub fn prime_witness<S: HyperStructure + ?Sized>(
    ring: &S,
    q: &ElementSet,
) -> Option<(usize, usize)> {
    let outside: Vec<usize> = (0..ring.order()).filter(|&x| !q.contains(x)).collect();
    for (i, &x) in outside.iter().enumerate() {
        for &y in &outside[i..] {
            if ring.mul(x, y).is_subset(q) || ring.mul(y, x).is_subset(q) {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn is_prime(ring: &Hyperring, q: &ElementSet) -> Result<bool> {
    require_proper(ring, q)?;
    Ok(prime_witness(ring, q).is_none())
}

/// `x ∘ y ⊆ Q` forces `x ∈ Q` or `y^t ⊆ Q` for some `t`. The powers of `y`
/// are eventually periodic, so the first repetition bounds `t`.
pub fn is_primary(ring: &Hyperring, q: &ElementSet) -> Result<bool> {
    require_proper(ring, q)?;
    let nilpotent_mod_q: Vec<bool> = (0..ring.order())
        .map(|y| ring.powers(y).iter().any(|p| p.is_subset(q)))
        .collect();
    Ok((0..ring.order()).all(|x| {
        q.contains(x)
            || (0..ring.order()).all(|y| !ring.hyp_at(x, y).is_subset(q) || nilpotent_mod_q[y])
    }))
}

/// Maximality against a precomputed list of all hyperideals.
pub fn is_maximal(ring: &Hyperring, ideals: &[ElementSet], q: &ElementSet) -> Result<bool> {
    require_proper(ring, q)?;
    Ok(!ideals
        .iter()
        .any(|i| i.len() < ring.order() && q.is_subset(i) && i != q))
}

pub fn maximal_ideals(ring: &Hyperring, ideals: &[ElementSet]) -> Vec<ElementSet> {
    ideals
        .iter()
        .filter(|i| is_maximal(ring, ideals, i).unwrap_or(false))
        .copied()
        .collect()
}

/// `J(A)`, the intersection of the maximal hyperideals.
pub fn jacobson(ring: &Hyperring, ideals: &[ElementSet]) -> Result<ElementSet> {
    let maximals = maximal_ideals(ring, ideals);
    if maximals.is_empty() {
        return Err(Error::NoMaximalIdeal);
    }
    Ok(maximals
        .iter()
        .fold(ring.carrier(), |acc, m| acc.intersection(m)))
}

pub fn is_local(ring: &Hyperring, ideals: &[ElementSet]) -> bool {
    maximal_ideals(ring, ideals).len() == 1
}

/// The prime radical of `Q`, with a flag set when no prime contains `Q` (in
/// which case the radical is the whole ring by convention).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Radical {
    pub members: ElementSet,
    pub no_prime_above: bool,
}

pub fn radical(ring: &Hyperring, ideals: &[ElementSet], q: &ElementSet) -> Radical {
    let primes: Vec<&ElementSet> = ideals
        .iter()
        .filter(|p| q.is_subset(p) && is_prime(ring, p).unwrap_or(false))
        .collect();
    Radical {
        members: primes.iter().fold(ring.carrier(), |acc, p| acc.intersection(p)),
        no_prime_above: primes.is_empty(),
    }
}

/// `{x : x^k ⊆ Q for some k ≥ 1}`.
pub fn power_members<S: HyperStructure + ?Sized>(ring: &S, q: &ElementSet) -> ElementSet {
    (0..ring.order())
        .filter(|&x| ring.powers(x).iter().any(|p| p.is_subset(q)))
        .collect()
}

/// `{x : x^k ⊆ Q}` for a fixed exponent.
pub fn power_members_at<S: HyperStructure + ?Sized>(ring: &S, q: &ElementSet, k: usize) -> ElementSet {
    (0..ring.order())
        .filter(|&x| ring.product(&vec![x; k]).is_subset(q))
        .collect()
}

/// `(Q : x) = {a : a ∘ x ⊆ Q}`.
pub fn colon(ring: &Hyperring, q: &ElementSet, x: usize) -> ElementSet {
    (0..ring.order())
        .filter(|&a| ring.hyp_at(a, x).is_subset(q))
        .collect()
}

/// `(B₂ : B₁) = {a : a ∘ B₁ ⊆ B₂}`.
pub fn colon_ideals(ring: &Hyperring, b2: &ElementSet, b1: &ElementSet) -> ElementSet {
    (0..ring.order())
        .filter(|&a| ring.mul_set(a, b1).is_subset(b2))
        .collect()
}

/// `I + J = A`.
pub fn are_coprime(ring: &Hyperring, i: &ElementSet, j: &ElementSet) -> bool {
    generated_hyperideal(ring, &ring.sum_set(i, j)) == ring.carrier()
}

/// The set product `I_1 ∘ .. ∘ I_k`.
pub fn ideal_set_product<S: HyperStructure + ?Sized>(ring: &S, ideals: &[ElementSet]) -> ElementSet {
    ring.subset_product(ideals)
        .expect("hyperideals are nonempty")
}

/// The hyperideal generated by `I_1 ∘ .. ∘ I_k`.
pub fn ideal_product(ring: &Hyperring, ideals: &[ElementSet]) -> ElementSet {
    generated_hyperideal(ring, &ideal_set_product(ring, ideals))
}

/// The classes `𝒞` (finite hyperproducts) and `𝔘` (finite sums of members of
/// `𝒞`) of a ring, plus the additive subgroup `γ*(0)`.
///
/// `𝔘` can be exponentially large, so its fixpoint runs under a budget. When
/// the budget is exceeded the strong-C test falls back to the subgroup
/// `γ*(0)`, generated by all differences `c - c'` of members of a common
/// product `C ∈ 𝒞`: a hyperideal is strong-C exactly when it contains this
/// subgroup, since the `γ*` classes are its cosets.
#[derive(Debug, Clone)]
pub struct CClassCache {
    products: Vec<ElementSet>,
    sums: Option<Vec<ElementSet>>,
    gamma_zero: ElementSet,
}

pub const DEFAULT_SUM_BUDGET: usize = 20_000;

impl CClassCache {
    pub fn new(ring: &Hyperring) -> Self {
        Self::with_budget(ring, DEFAULT_SUM_BUDGET)
    }

    pub fn with_budget(ring: &Hyperring, sum_budget: usize) -> Self {
        let products = product_class(ring);
        let sums = sum_class(ring, &products, sum_budget);
        let gamma_zero = difference_subgroup(ring, &products);
        CClassCache {
            products,
            sums,
            gamma_zero,
        }
    }

    /// `𝒞`, canonically sorted.
    pub fn products(&self) -> &[ElementSet] {
        &self.products
    }

    /// `𝔘`, canonically sorted; `None` when it exceeded the budget.
    pub fn sums(&self) -> Option<&[ElementSet]> {
        self.sums.as_deref()
    }

    /// The `γ*`-class of zero.
    pub fn gamma_zero(&self) -> &ElementSet {
        &self.gamma_zero
    }

    pub fn c_witness(&self, q: &ElementSet) -> Option<ElementSet> {
        self.products
            .iter()
            .find(|c| c.intersects(q) && !c.is_subset(q))
            .copied()
    }

    pub fn is_c_hyperideal(&self, q: &ElementSet) -> bool {
        self.c_witness(q).is_none()
    }

    pub fn is_strong_c_hyperideal(&self, q: &ElementSet) -> bool {
        match &self.sums {
            Some(sums) => !sums.iter().any(|d| d.intersects(q) && !d.is_subset(q)),
            None => self.gamma_zero.is_subset(q),
        }
    }

    /// The subgroup criterion regardless of whether `𝔘` is available.
    pub fn is_strong_c_by_subgroup(&self, q: &ElementSet) -> bool {
        self.gamma_zero.is_subset(q)
    }
}

fn product_class(ring: &Hyperring) -> Vec<ElementSet> {
    let mut seen: BTreeSet<ElementSet> = (0..ring.order()).map(ElementSet::singleton).collect();
    let mut frontier: Vec<ElementSet> = seen.iter().copied().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for c in &frontier {
            for a in 0..ring.order() {
                let p = ring.set_mul(c, a);
                if seen.insert(p) {
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

fn sum_class(ring: &Hyperring, products: &[ElementSet], budget: usize) -> Option<Vec<ElementSet>> {
    let mut seen: HashSet<ElementSet> = products.iter().copied().collect();
    let mut frontier: Vec<ElementSet> = products.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for d in &frontier {
            for c in products {
                let s = ring.sum_set(d, c);
                if seen.insert(s) {
                    if seen.len() > budget {
                        return None;
                    }
                    next.push(s);
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<ElementSet> = seen.into_iter().collect();
    all.sort();
    Some(all)
}

fn difference_subgroup(ring: &Hyperring, products: &[ElementSet]) -> ElementSet {
    let mut gens = ElementSet::empty();
    for c in products {
        if let Some(base) = c.first() {
            for x in c {
                gens.insert(ring.sub(x, base));
            }
        }
    }
    additive_closure(ring, &gens)
}

/// Subgroup of `(A, +)` generated by a set.
pub fn additive_closure(ring: &Hyperring, gens: &ElementSet) -> ElementSet {
    let mut group = ElementSet::singleton(ring.zero());
    let mut frontier: Vec<usize> = vec![ring.zero()];
    while let Some(x) = frontier.pop() {
        for g in gens {
            for z in [ring.add(x, g), ring.sub(x, g)] {
                if !group.contains(z) {
                    group.insert(z);
                    frontier.push(z);
                }
            }
        }
    }
    group
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperring::build_zmt;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    fn r6() -> Hyperring {
        build_zmt(6, &[1, 3]).unwrap()
    }

    /// Brute-force lattice: every subset that passes both closure checks.
    fn subsets_oracle(ring: &Hyperring) -> Vec<ElementSet> {
        let n = ring.order();
        let mut out: Vec<ElementSet> = (1u32..(1 << n))
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect::<ElementSet>())
            .filter(|s| {
                s.iter().all(|x| s.iter().all(|y| s.contains((x + n - y) % n)))
                    && s.iter().all(|x| (0..n).all(|r| ring.hyp_at(r, x).is_subset(s)))
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn r6_lattice() {
        let ring = r6();
        let ideals = enumerate_hyperideals(&ring);
        assert_eq!(ideals, vec![set(&[0]), set(&[0, 3]), set(&[0, 2, 4]), ring.carrier()]);
        assert!(is_hyperideal(&ring, &set(&[0, 3])));
        assert!(is_hyperideal(&ring, &set(&[0, 2, 4])));
        assert!(!is_hyperideal(&ring, &set(&[0, 1])));
        assert!(Hyperideal::new(&ring, set(&[0, 1])).is_err());
    }

    #[test]
    fn lattices_match_subset_oracle() {
        for (m, t) in [(4, vec![1]), (5, vec![1]), (7, vec![1]), (6, vec![2, 4]), (8, vec![1, 3]), (9, vec![3, 6]), (10, vec![2, 5])] {
            let ring = build_zmt(m, &t).unwrap();
            assert_eq!(enumerate_hyperideals(&ring), subsets_oracle(&ring), "m={m} T={t:?}");
        }
        let z4 = build_zmt(4, &[1]).unwrap();
        assert_eq!(enumerate_hyperideals(&z4), vec![set(&[0]), set(&[0, 2]), z4.carrier()]);
    }

    #[test]
    fn generation() {
        let ring = r6();
        assert_eq!(generated_hyperideal(&ring, &set(&[3])), set(&[0, 3]));
        assert_eq!(generated_hyperideal(&ring, &set(&[2])), set(&[0, 2, 4]));
        assert_eq!(generated_hyperideal(&ring, &set(&[0])), set(&[0]));
        assert_eq!(generated_hyperideal(&ring, &set(&[2, 3])), ring.carrier());
    }

    #[test]
    fn generated_is_least() {
        for (m, t) in [(6, vec![1, 3]), (8, vec![2, 4]), (12, vec![1, 5])] {
            let ring = build_zmt(m, &t).unwrap();
            let ideals = enumerate_hyperideals(&ring);
            for g in 0..m {
                let gen = generated_hyperideal(&ring, &ElementSet::singleton(g));
                assert!(is_hyperideal(&ring, &gen));
                for i in ideals.iter().filter(|i| i.contains(g)) {
                    assert!(gen.is_subset(i));
                }
            }
        }
    }

    #[test]
    fn r6_prime_maximal_radical() {
        let ring = r6();
        let ideals = enumerate_hyperideals(&ring);
        assert!(is_prime(&ring, &set(&[0, 3])).unwrap());
        assert!(!is_prime(&ring, &set(&[0])).unwrap());
        let (x, y) = prime_witness(&ring, &set(&[0])).unwrap();
        assert!(ring.hyp_at(x, y).is_subset(&set(&[0])));
        assert!(is_maximal(&ring, &ideals, &set(&[0, 3])).unwrap());
        assert!(!is_maximal(&ring, &ideals, &set(&[0])).unwrap());
        assert_eq!(is_prime(&ring, &ring.carrier()), Err(Error::ImproperIdeal));

        assert_eq!(radical(&ring, &ideals, &set(&[0])).members, set(&[0]));
        assert_eq!(radical(&ring, &ideals, &set(&[0, 3])).members, set(&[0, 3]));
        let whole = radical(&ring, &ideals, &ring.carrier());
        assert!(whole.no_prime_above);
        assert_eq!(whole.members, ring.carrier());

        assert_eq!(jacobson(&ring, &ideals).unwrap(), set(&[0]));
        assert!(!is_local(&ring, &ideals));
        assert!(are_coprime(&ring, &set(&[0, 3]), &set(&[0, 2, 4])));
        assert!(are_coprime(&ring, &ring.carrier(), &set(&[0])));
        assert!(!are_coprime(&ring, &set(&[0]), &set(&[0, 3])));
    }

    #[test]
    fn primary() {
        let z8 = build_zmt(8, &[1]).unwrap();
        assert!(is_primary(&z8, &set(&[0])).unwrap());
        assert!(!is_prime(&z8, &set(&[0])).unwrap());
        let r = r6();
        assert!(!is_primary(&r, &set(&[0])).unwrap());
        assert!(is_primary(&r, &set(&[0, 3])).unwrap());
    }

    #[test]
    fn colon_examples() {
        let ring = r6();
        assert_eq!(colon(&ring, &set(&[0, 3]), 2), set(&[0, 3]));
        assert_eq!(colon(&ring, &set(&[0]), 3), set(&[0, 2, 4]));
        assert_eq!(colon(&ring, &set(&[0, 3]), 3), ring.carrier());
        assert_eq!(colon_ideals(&ring, &set(&[0]), &set(&[0, 3])), set(&[0, 2, 4]));
    }

    #[test]
    fn power_members_examples() {
        let ring = r6();
        assert_eq!(power_members(&ring, &set(&[0])), set(&[0]));
        assert_eq!(power_members(&ring, &ring.carrier()), ring.carrier());
        let z8 = build_zmt(8, &[1]).unwrap();
        assert_eq!(power_members(&z8, &set(&[0])), set(&[0, 2, 4, 6]));
        assert_eq!(power_members_at(&z8, &set(&[0]), 2), set(&[0, 4]));
    }

    #[test]
    fn c_classes_r6() {
        let ring = r6();
        let cache = CClassCache::new(&ring);
        assert!(!cache.is_c_hyperideal(&set(&[0])));
        assert_eq!(cache.c_witness(&set(&[0])).map(|c| c.intersects(&set(&[0]))), Some(true));
        assert!(cache.products().contains(&set(&[0, 4])));
        assert!(cache.is_c_hyperideal(&set(&[0, 2, 4])));
        assert!(cache.is_c_hyperideal(&ring.carrier()));
        assert_eq!(*cache.gamma_zero(), set(&[0, 2, 4]));
        assert!(cache.sums().is_some());
    }

    /// The fixpoint definition of strong-C against the subgroup criterion.
    #[test]
    fn strong_c_routes_agree() {
        for m in [4usize, 6, 8, 9, 10, 12] {
            for a in 0..m {
                for b in a + 1..m {
                    let ring = build_zmt(m, &[a, b]).unwrap();
                    let cache = CClassCache::new(&ring);
                    let Some(_) = cache.sums() else { continue };
                    for q in enumerate_hyperideals(&ring) {
                        assert_eq!(
                            cache.is_strong_c_hyperideal(&q),
                            cache.is_strong_c_by_subgroup(&q),
                            "m={m} T={{{a},{b}}} Q={q}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn lattice_intersections_are_ideals() {
        for (m, t) in [(12, vec![1, 5]), (8, vec![2, 6]), (9, vec![1, 4])] {
            let ring = build_zmt(m, &t).unwrap();
            let ideals = enumerate_hyperideals(&ring);
            for i in &ideals {
                for j in &ideals {
                    assert!(is_hyperideal(&ring, &i.intersection(j)));
                }
                for x in 0..m {
                    let c = colon(&ring, i, x);
                    assert!(i.is_subset(&c));
                    assert!(is_hyperideal(&ring, &c));
                }
            }
        }
    }
}
