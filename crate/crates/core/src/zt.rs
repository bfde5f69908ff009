//! The integer hyperring `ℤ_T` (`a ∘ b = {a·t·b : t ∈ T}`) relative to a
//! principal hyperideal `⟨n⟩`, decided through residues mod `n`.
//!
//! A product `x_1 ∘ .. ∘ x_k` is the set `{x_1⋯x_k · p : p ∈ P_{k-1}(T)}` where
//! `P_j(T)` holds the `j`-fold products of elements of `T` (and `P_0 = {1}`).
//! Divisibility by `n` of each member depends only on `x_1⋯x_k mod n` and
//! `P_{k-1}(T) mod n`, so every question about containment in `⟨n⟩` is a
//! question about residues. The only units of `ℤ_T` are among `±1` and every
//! residue class contains infinitely many non-units, so the unit exclusion in
//! the absorbing predicates never removes a residue class.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hyperring::{build_zmt, Hyperring};
use crate::multiset::{combinations, distinct_submultisets};

const DEFAULT_POWER_BOUND: usize = 16;

#[derive(Debug, Clone)]
pub struct ZtContext {
    t: Vec<i64>,
    n: u64,
    /// `tpow[k]` is `P_k(T) mod n`, sorted.
    tpow: Vec<Vec<u64>>,
    /// `gcds[k] = gcd(n, P_k(T))`.
    gcds: Vec<u64>,
}

impl ZtContext {
    pub fn new(t: &[i64], n: u64) -> Result<Self> {
        Self::with_power_bound(t, n, DEFAULT_POWER_BOUND)
    }

    /// Caches `P_k(T)` for `k <= bound`; longer products fall back to
    /// computing the power set on demand.
    pub fn with_power_bound(t: &[i64], n: u64, bound: usize) -> Result<Self> {
        let t: Vec<i64> = t.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        if t.len() < 2 {
            return Err(Error::BadContext(format!("|T| must be at least 2, got {t:?}")));
        }
        if n < 2 {
            return Err(Error::BadContext(format!("modulus must be at least 2, got {n}")));
        }
        let reduced: BTreeSet<u64> = t.iter().map(|&x| x.rem_euclid(n as i64) as u64).collect();
        let mut tpow: Vec<Vec<u64>> = vec![vec![1 % n]];
        for _ in 0..bound {
            let prev = tpow.last().unwrap();
            let next: BTreeSet<u64> = prev
                .iter()
                .flat_map(|&p| reduced.iter().map(move |&s| mulmod(p, s, n)))
                .collect();
            tpow.push(next.into_iter().collect());
        }
        let gcds = tpow
            .iter()
            .map(|ps| ps.iter().fold(n, |g, &p| gcd(g, p)))
            .collect();
        Ok(ZtContext { t, n, tpow, gcds })
    }

    pub fn t(&self) -> &[i64] {
        &self.t
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// `P_k(T) mod n`.
    pub fn tpow(&self, k: usize) -> Vec<u64> {
        if let Some(p) = self.tpow.get(k) {
            return p.clone();
        }
        let mut cur = self.tpow.last().unwrap().clone();
        for _ in self.tpow.len()..=k {
            let next: BTreeSet<u64> = cur
                .iter()
                .flat_map(|&p| self.tpow[1].iter().map(move |&s| mulmod(p, s, self.n)))
                .collect();
            cur = next.into_iter().collect();
        }
        cur
    }

    fn gcd_of_power(&self, k: usize) -> u64 {
        match self.gcds.get(k) {
            Some(&g) => g,
            None => self.tpow(k).iter().fold(self.n, |g, &p| gcd(g, p)),
        }
    }

    /// Whether the hyperproduct of `k` factors whose ordinary product is `r`
    /// (mod n) lies in `⟨n⟩`.
    #[inline]
    pub fn product_in_ideal(&self, k: usize, r: u64) -> bool {
        debug_assert!(k >= 1);
        (r as u128 * self.gcd_of_power(k - 1) as u128) % self.n as u128 == 0
    }

    /// `x_1 ∘ .. ∘ x_k ⊆ ⟨n⟩` for residues `x_i`, checked literally against
    /// every member of `P_{k-1}(T)`.
    pub fn zt_hyperproduct_in_ideal(&self, residues: &[u64]) -> bool {
        assert!(!residues.is_empty(), "empty product");
        let r = self.residue_product(residues);
        self.tpow(residues.len() - 1)
            .iter()
            .all(|&p| r as u128 * p as u128 % self.n as u128 == 0)
    }

    pub fn residue_product(&self, residues: &[u64]) -> u64 {
        residues.iter().fold(1 % self.n, |acc, &x| mulmod(acc, x % self.n, self.n))
    }

    /// The integer hyperproduct of the given integers (no reduction).
    pub fn integer_product(&self, xs: &[i64]) -> BTreeSet<i128> {
        assert!(!xs.is_empty(), "empty product");
        let mut acc: BTreeSet<i128> = BTreeSet::from([xs[0] as i128]);
        for &x in &xs[1..] {
            acc = acc
                .iter()
                .flat_map(|&a| self.t.iter().map(move |&s| a * s as i128 * x as i128))
                .collect();
        }
        acc
    }

    /// `ℤ_m` with `T mod n` for `m = n`: the reduction of `ℤ_T` modulo `⟨n⟩`,
    /// in which `⟨n⟩` becomes the zero ideal. Only moduli up to 256 fit.
    pub fn reduced_ring(&self) -> Result<Hyperring> {
        if self.n > 256 {
            return Err(Error::ModulusTooLarge(self.n as usize));
        }
        let t: Vec<usize> = self.tpow[1].iter().map(|&x| x as usize).collect();
        Ok(build_zmt(self.n as usize, &t)?)
    }

    /// The canonical lift of a residue: its least non-negative representative
    /// that is not a unit of `ℤ`. Only the class of `1` is affected, lifting
    /// to `n + 1`.
    pub fn canonical_lift(&self, r: u64) -> i64 {
        let r = r % self.n;
        if r == 1 { self.n as i64 + 1 } else { r as i64 }
    }

    /// Residues sorted by canonical lift.
    fn lift_order(&self) -> Vec<u64> {
        let mut order: Vec<u64> = (0..self.n).collect();
        order.sort_by_key(|&r| self.canonical_lift(r));
        order
    }

    /// Decide an absorbing predicate for `⟨n⟩` by scanning residue multisets.
    /// The witness is the least failing multiset of canonical lifts (for the
    /// prime kind, the least ordered pair of sorted halves). `ZtKind::Plain`
    /// at `(v + 1, v)` is the v-absorbing predicate, since units never matter
    /// here.
    pub fn check(&self, kind: ZtKind, u: usize, v: usize) -> Result<ZtVerdict> {
        if v == 0 || u <= v {
            return Err(Error::BadQuery { u, v });
        }
        let order = self.lift_order();
        let found = match kind {
            ZtKind::Plain => (0..order.len()).into_par_iter().find_map_first(|first| {
                let mut idx = vec![first; u];
                self.search(&order, &mut idx, 1, order[first], v)
            }),
            ZtKind::Prime => self.prime_search(&order, u, v),
        };
        Ok(ZtVerdict {
            holds: found.is_none(),
            witness: found.map(|w| self.witness(kind, v, w)),
        })
    }

    fn search(&self, order: &[u64], idx: &mut [usize], depth: usize, prod: u64, v: usize) -> Option<Vec<u64>> {
        let u = idx.len();
        if depth == u {
            if !self.product_in_ideal(u, prod) {
                return None;
            }
            let absorbed = combinations(u, v).any(|pos| {
                let r = pos.iter().fold(1 % self.n, |a, &i| mulmod(a, order[idx[i]], self.n));
                self.product_in_ideal(v, r)
            });
            return (!absorbed).then(|| idx.iter().map(|&i| order[i]).collect());
        }
        for i in idx[depth - 1]..order.len() {
            idx[depth] = i;
            if let Some(w) = self.search(order, idx, depth + 1, mulmod(prod, order[i], self.n), v) {
                return Some(w);
            }
        }
        None
    }

    /// Membership of a product of `k` factors depends only on its residue, so
    /// a prime failure exists iff some residues `a`, `b` have `a` outside at
    /// size `v`, `b` outside at size `u - v` and `a·b` inside at size `u`.
    /// Every residue is the product of any number of factors (pad with `1`),
    /// so that residue test decides the verdict; the witness search then
    /// only runs when a failure is known to exist.
    fn prime_search(&self, order: &[u64], u: usize, v: usize) -> Option<Vec<u64>> {
        let n = self.n;
        let w = u - v;
        let good_b: Vec<u64> = (0..n).filter(|&b| !self.product_in_ideal(w, b)).collect();
        let fails = |a: u64, b: u64| {
            !self.product_in_ideal(v, a) && self.product_in_ideal(u, mulmod(a, b, n))
        };
        if !(0..n).any(|a| good_b.iter().any(|&b| fails(a, b))) {
            return None;
        }
        let least_left = self.first_multiset(order, v, &|a| good_b.iter().any(|&b| fails(a, b)))?;
        let a = self.residue_product(&least_left);
        let right = self.first_multiset(order, w, &|b| !self.product_in_ideal(w, b) && fails(a, b))?;
        Some(least_left.into_iter().chain(right).collect())
    }

    /// The least `k`-multiset (in lift order) whose residue product passes.
    fn first_multiset(&self, order: &[u64], k: usize, accept: &(dyn Fn(u64) -> bool + Sync)) -> Option<Vec<u64>> {
        fn go(ctx: &ZtContext, order: &[u64], idx: &mut Vec<usize>, k: usize, prod: u64, accept: &(dyn Fn(u64) -> bool + Sync)) -> bool {
            if idx.len() == k {
                return accept(prod);
            }
            let start = idx.last().copied().unwrap_or(0);
            for i in start..order.len() {
                idx.push(i);
                if go(ctx, order, idx, k, mulmod(prod, order[i], ctx.n), accept) {
                    return true;
                }
                idx.pop();
            }
            false
        }
        let mut idx = Vec::with_capacity(k);
        go(self, order, &mut idx, k, 1 % self.n, accept).then(|| idx.iter().map(|&i| order[i]).collect())
    }

    /// Re-check a given factor list: the evidence if it fails the predicate
    /// (in the given order for the prime kind), `None` if it does not.
    pub fn replay(&self, kind: ZtKind, v: usize, xs: &[i64]) -> Option<ZtWitness> {
        let u = xs.len();
        if v == 0 || u <= v {
            return None;
        }
        let n = self.n as i128;
        let inside = |s: &[i64]| self.integer_product(s).iter().all(|p| p % n == 0);
        let mut sorted = xs.to_vec();
        let subs = match kind {
            ZtKind::Prime => vec![xs[..v].to_vec(), xs[v..].to_vec()],
            ZtKind::Plain => {
                sorted.sort_unstable();
                distinct_submultisets(&sorted, v)
            }
        };
        if !inside(&sorted) || subs.iter().any(|s| inside(s)) {
            return None;
        }
        Some(ZtWitness {
            product: self.integer_product(&sorted),
            tuple: sorted,
            subproducts: subs.into_iter().map(|s| { let p = self.integer_product(&s); (s, p) }).collect(),
            modulus: self.n,
        })
    }

    fn witness(&self, kind: ZtKind, v: usize, residues: Vec<u64>) -> ZtWitness {
        let lifts: Vec<i64> = residues.iter().map(|&x| self.canonical_lift(x)).collect();
        let subproducts = match kind {
            ZtKind::Prime => vec![lifts[..v].to_vec(), lifts[v..].to_vec()],
            ZtKind::Plain => distinct_submultisets(&lifts, v),
        }
        .into_iter()
        .map(|sub| {
            let product = self.integer_product(&sub);
            (sub, product)
        })
        .collect();
        ZtWitness {
            product: self.integer_product(&lifts),
            tuple: lifts,
            subproducts,
            modulus: self.n,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZtKind {
    Plain,
    Prime,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZtVerdict {
    pub holds: bool,
    pub witness: Option<ZtWitness>,
}

/// A multiset of canonical lifts whose product lies in `⟨n⟩` while none of
/// the checked sub-products does. For the prime kind the tuple is ordered:
/// the first `v` lifts, then the remaining `u - v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZtWitness {
    pub tuple: Vec<i64>,
    pub product: BTreeSet<i128>,
    pub subproducts: Vec<(Vec<i64>, BTreeSet<i128>)>,
    pub modulus: u64,
}

impl fmt::Display for ZtWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &mut dyn Iterator<Item = String>| xs.collect::<Vec<_>>().join(",");
        writeln!(
            f,
            "witness: {}",
            join(&mut self.tuple.iter().map(|x| x.to_string()))
        )?;
        writeln!(
            f,
            "product: {{{}}} ⊆ ⟨{}⟩",
            join(&mut self.product.iter().map(|x| x.to_string())),
            self.modulus
        )?;
        for (sub, prod) in &self.subproducts {
            writeln!(
                f,
                "  {} -> {{{}}} ⊄ ⟨{}⟩",
                join(&mut sub.iter().map(|x| x.to_string())),
                join(&mut prod.iter().map(|x| x.to_string())),
                self.modulus
            )?;
        }
        Ok(())
    }
}

#[inline]
fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    (a as u128 * b as u128 % n as u128) as u64
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx150() -> ZtContext {
        ZtContext::new(&[2, 4], 150).unwrap()
    }

    #[test]
    fn worked_products() {
        let c = ctx150();
        assert_eq!(c.integer_product(&[3, 5]), BTreeSet::from([30, 60]));
        assert_eq!(c.integer_product(&[3, 5, 5]), BTreeSet::from([300, 600, 1200]));
        assert_eq!(c.integer_product(&[7]), BTreeSet::from([7]));
        assert!(c.zt_hyperproduct_in_ideal(&[3, 5, 5]));
        assert!(!c.zt_hyperproduct_in_ideal(&[3, 5]));
        assert!(c.zt_hyperproduct_in_ideal(&[0]));
        assert!(c.product_in_ideal(3, 75));
        assert!(!c.product_in_ideal(2, 15));
    }

    #[test]
    fn tpow_recurrence() {
        let c = ZtContext::with_power_bound(&[2, 3], 12, 3).unwrap();
        assert_eq!(c.tpow(0), vec![1]);
        assert_eq!(c.tpow(1), vec![2, 3]);
        assert_eq!(c.tpow(2), vec![4, 6, 9]);
        // Past the cached bound the set is still produced.
        let p5 = c.tpow(5);
        let direct: BTreeSet<u64> = (0..=5u32)
            .map(|i| 2u64.pow(i) * 3u64.pow(5 - i) % 12)
            .collect();
        assert_eq!(p5, direct.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn bad_contexts() {
        assert!(ZtContext::new(&[2], 10).is_err());
        assert!(ZtContext::new(&[2, 2], 10).is_err());
        assert!(ZtContext::new(&[2, 4], 1).is_err());
        assert!(ctx150().check(ZtKind::Plain, 2, 2).is_err());
    }

    #[test]
    fn reduced_ring_is_the_quotient_model() {
        let c = ZtContext::new(&[2, 4], 12).unwrap();
        let ring = c.reduced_ring().unwrap();
        use crate::hyperring::HyperStructure;
        for a in 0..12u64 {
            for b in 0..12u64 {
                let zero_product = *ring.mul(a as usize, b as usize)
                    == crate::element_set::ElementSet::singleton(0);
                assert_eq!(zero_product, c.zt_hyperproduct_in_ideal(&[a, b]));
            }
        }
        assert!(ZtContext::new(&[2, 4], 300).unwrap().reduced_ring().is_err());
    }

    #[test]
    fn example_150_small_queries() {
        let c = ctx150();
        let v = c.check(ZtKind::Plain, 3, 2).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.tuple, vec![3, 5, 5]);
        assert_eq!(w.product, BTreeSet::from([300, 600, 1200]));
        assert_eq!(
            w.subproducts,
            vec![
                (vec![3, 5], BTreeSet::from([30, 60])),
                (vec![5, 5], BTreeSet::from([50, 100])),
            ]
        );
    }

    #[test]
    fn example_15() {
        let c = ZtContext::new(&[2, 4], 15).unwrap();
        let plain = c.check(ZtKind::Plain, 3, 1).unwrap();
        assert!(!plain.holds);
        let w = plain.witness.unwrap();
        assert_eq!(w.tuple, vec![2, 3, 5]);
        assert_eq!(w.product, BTreeSet::from([120, 240, 480]));
        let paper = c.replay(ZtKind::Plain, 1, &[3, 3, 5]).unwrap();
        assert_eq!(paper.product, BTreeSet::from([180, 360, 720]));
        assert!(c.replay(ZtKind::Plain, 1, &[2, 3, 15]).is_none());
    }

    /// Under the ordered definition ⟨15⟩ is not (3,1)-absorbing prime:
    /// `3 ∘ 2 ∘ 5 = {120,240,480}` while `3` and `2 ∘ 5 = {20,40}` stay out.
    #[test]
    fn fifteen_is_not_31_prime() {
        let c = ZtContext::new(&[2, 4], 15).unwrap();
        let prime = c.check(ZtKind::Prime, 3, 1).unwrap();
        assert!(!prime.holds);
        let w = prime.witness.unwrap();
        assert_eq!(w.tuple, vec![3, 2, 5]);
        assert_eq!(w.product, BTreeSet::from([120, 240, 480]));
        assert_eq!(
            w.subproducts,
            vec![(vec![3], BTreeSet::from([3])), (vec![2, 5], BTreeSet::from([20, 40]))]
        );
        // The reordering 5, 3, 3 of the (3,3,5) product fails the same way.
        assert!(!c.zt_hyperproduct_in_ideal(&[5]) && !c.zt_hyperproduct_in_ideal(&[3, 3]));
    }

    #[test]
    fn lifts_skip_the_unit() {
        let c = ZtContext::new(&[2, 4], 15).unwrap();
        assert_eq!(c.canonical_lift(1), 16);
        assert_eq!(c.canonical_lift(0), 0);
        assert_eq!(c.canonical_lift(14), 14);
        assert_eq!(c.lift_order().last(), Some(&1));
    }

    #[test]
    fn prime_witness_is_a_failing_bipartition() {
        for (t, n) in [(vec![2i64, 4], 12u64), (vec![1, 3], 8), (vec![2, 3], 16)] {
            let c = ZtContext::new(&t, n).unwrap();
            for (u, v) in [(2, 1), (3, 1), (3, 2), (4, 2)] {
                let verdict = c.check(ZtKind::Prime, u, v).unwrap();
                if let Some(w) = verdict.witness {
                    let divisible = |s: &BTreeSet<i128>| s.iter().all(|x| x % n as i128 == 0);
                    assert!(divisible(&w.product));
                    assert_eq!(w.subproducts.len(), 2);
                    assert_eq!(w.subproducts[0].0, w.tuple[..v].to_vec());
                    assert!(w.subproducts.iter().all(|(_, p)| !divisible(p)));
                }
            }
        }
        // ⟨8⟩ in ℤ_{1,3}: 2·2·2 lands in the ideal but neither 2 nor 2·2 does.
        let c = ZtContext::new(&[1, 3], 8).unwrap();
        assert!(!c.check(ZtKind::Prime, 3, 1).unwrap().holds);
    }

    proptest! {
        /// Residue verdict against explicit integer products of arbitrary lifts.
        #[test]
        fn residue_membership_matches_integers(
            n in 2u64..=12,
            t in prop::sample::select(vec![vec![2i64, 4], vec![1, 3], vec![2, 3]]),
            xs in prop::collection::vec(-36i64..=36, 1..=4),
        ) {
            let c = ZtContext::new(&t, n).unwrap();
            let residues: Vec<u64> = xs.iter().map(|&x| x.rem_euclid(n as i64) as u64).collect();
            let direct = c.integer_product(&xs).iter().all(|&p| p % n as i128 == 0);
            prop_assert_eq!(c.zt_hyperproduct_in_ideal(&residues), direct);
            let r = c.residue_product(&residues);
            prop_assert_eq!(c.product_in_ideal(xs.len(), r), direct);
        }
    }
}
