//! Absorbing-type predicates on hyperideals: v-absorbing, (u,v)-absorbing,
//! AB-(u,v)-absorbing and (u,v)-absorbing prime, plus the `Abs`/`abs` indices.
//!
//! For commutative structures the predicates only depend on multisets of
//! factors. [`ProfileTable`] enumerates multisets level by level, but merges
//! multisets with the same *profile*: the product set together with the sets
//! of products of all sub-multisets that are `1..=J` elements smaller. The
//! profile of `M + y` is a function of the profile of `M` and `y`, and the
//! plain and AB predicates are functions of the profile, so the table size is
//! the number of distinct profiles rather than the number of multisets. Each
//! profile keeps its lexicographically least multiset, which makes witnesses
//! canonical.
//!
//! The prime predicate fails on a multiset as soon as *one* split into `v`
//! and `u - v` factors has both halves outside `Q`, which the level sets
//! cannot see. [`ProductIndex`] stores the product of every small multiset
//! and the prime scan pairs sorted halves directly.
//!
//! Non-commutative structures (hypermatrices) go through [`ordered_check`],
//! which quantifies over ordered tuples exactly as in the definitions.

use std::collections::HashMap;
use std::fmt;

use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::hyperring::HyperStructure;
use crate::ideal::ideal_set_product;
use crate::multiset::{combinations, distinct_submultisets, multisets};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// Factors range over non-units; some `v` of them absorb.
    Plain,
    /// Factors range over all elements; some `v` of them absorb.
    AB,
    /// Factors range over non-units; the first `v` or the last `u - v` absorb.
    Prime,
}

impl Kind {
    pub fn label(self) -> &'static str {
        match self {
            Kind::Plain => "uv-absorbing",
            Kind::AB => "ab-uv-absorbing",
            Kind::Prime => "uv-absorbing-prime",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbsorbingQuery {
    pub u: usize,
    pub v: usize,
    pub kind: Kind,
}

impl AbsorbingQuery {
    pub fn new(u: usize, v: usize, kind: Kind) -> Result<Self> {
        if v == 0 || u <= v {
            return Err(Error::BadQuery { u, v });
        }
        Ok(AbsorbingQuery { u, v, kind })
    }

    pub fn plain(u: usize, v: usize) -> Result<Self> {
        Self::new(u, v, Kind::Plain)
    }

    pub fn ab(u: usize, v: usize) -> Result<Self> {
        Self::new(u, v, Kind::AB)
    }

    pub fn prime(u: usize, v: usize) -> Result<Self> {
        Self::new(u, v, Kind::Prime)
    }

    fn includes_units(&self) -> bool {
        self.kind == Kind::AB
    }
}

impl fmt::Display for AbsorbingQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.kind.label(), self.u, self.v)
    }
}

/// A factor sequence whose product lies in `Q` while none of the checked
/// sub-products does.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub product: ElementSet,
    pub checked: Vec<(Vec<usize>, ElementSet)>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |xs: &[usize]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        writeln!(f, "witness: {}", list(&self.tuple))?;
        writeln!(f, "product: {} ⊆ Q", self.product)?;
        for (sub, p) in &self.checked {
            writeln!(f, "  {} -> {} ⊄ Q", list(sub), p)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn from_witness(witness: Option<Witness>) -> Self {
        Verdict {
            holds: witness.is_none(),
            witness,
        }
    }
}

/// The factor alphabet for a query: the carrier, or the carrier minus units.
pub fn alphabet<S: HyperStructure + ?Sized>(s: &S, include_units: bool) -> Vec<usize> {
    (0..s.order())
        .filter(|&x| include_units || !s.units().contains(x))
        .collect()
}

/// Most levels a profile can hold; queries have `u - v < u <= 5`.
const MAX_LEVELS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Profile {
    /// Level `j` is `sets[ends[j-1]..ends[j]]`: products of the
    /// sub-multisets with `j` elements removed, sorted and deduplicated.
    /// The empty set stands for the empty product.
    sets: Vec<ElementSet>,
    ends: [u16; MAX_LEVELS],
    depth: u8,
}

fn extend<S: HyperStructure + ?Sized>(s: &S, d: &ElementSet, y: usize) -> ElementSet {
    if d.is_empty() {
        ElementSet::singleton(y)
    } else {
        s.set_mul(d, y)
    }
}

impl Profile {
    fn empty(depth: usize) -> Self {
        assert!(depth < MAX_LEVELS, "profile depth {depth} too large");
        Profile {
            sets: vec![ElementSet::empty()],
            ends: [1; MAX_LEVELS],
            depth: depth as u8,
        }
    }

    fn level(&self, j: usize) -> &[ElementSet] {
        let start = if j == 0 { 0 } else { self.ends[j - 1] as usize };
        &self.sets[start..self.ends[j] as usize]
    }

    fn push<S: HyperStructure + ?Sized>(&self, s: &S, y: usize) -> Self {
        let mut sets = Vec::with_capacity(self.sets.len() * 2);
        let mut ends = [0u16; MAX_LEVELS];
        for j in 0..=self.depth as usize {
            let start = sets.len();
            sets.extend(self.level(j).iter().map(|d| extend(s, d, y)));
            if j > 0 {
                sets.extend_from_slice(self.level(j - 1));
            }
            sets[start..].sort_unstable();
            let mut kept = start;
            for i in start..sets.len() {
                if kept == start || sets[i] != sets[kept - 1] {
                    sets[kept] = sets[i];
                    kept += 1;
                }
            }
            sets.truncate(kept);
            ends[j] = kept as u16;
        }
        for e in self.depth as usize + 1..MAX_LEVELS {
            ends[e] = sets.len() as u16;
        }
        Profile {
            sets,
            ends,
            depth: self.depth,
        }
    }

    fn product(&self) -> &ElementSet {
        &self.sets[0]
    }
}

/// All profiles of multisets of size `1..=max_size` over an alphabet.
pub struct ProfileTable {
    alphabet: Vec<usize>,
    depth: usize,
    /// `levels[k]`: profiles of size-`k` multisets with their least multiset.
    levels: Vec<Vec<(Profile, Vec<usize>)>>,
}

impl ProfileTable {
    /// `depth` is the largest `u - v` any query will look at.
    pub fn build<S: HyperStructure + ?Sized>(
        s: &S,
        alphabet: Vec<usize>,
        max_size: usize,
        depth: usize,
    ) -> Self {
        let mut levels = vec![vec![(Profile::empty(depth), Vec::new())]];
        for _ in 0..max_size {
            let prev = levels.last().unwrap();
            let mut index: HashMap<Profile, usize> = HashMap::new();
            let mut next: Vec<(Profile, Vec<usize>)> = Vec::new();
            for (profile, rep) in prev {
                for &y in &alphabet {
                    let p = profile.push(s, y);
                    let mut m = rep.clone();
                    let at = m.partition_point(|&x| x <= y);
                    m.insert(at, y);
                    match index.get(&p) {
                        Some(&i) => {
                            if m < next[i].1 {
                                next[i].1 = m;
                            }
                        }
                        None => {
                            index.insert(p.clone(), next.len());
                            next.push((p, m));
                        }
                    }
                }
            }
            levels.push(next);
        }
        ProfileTable {
            alphabet,
            depth,
            levels,
        }
    }

    pub fn alphabet(&self) -> &[usize] {
        &self.alphabet
    }

    pub fn max_size(&self) -> usize {
        self.levels.len() - 1
    }

    /// Number of distinct profiles at each size.
    pub fn profile_counts(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Decide a plain or AB query against `Q`. The table's alphabet must
    /// match the query's unit convention; the witness is the least failing
    /// multiset.
    pub fn check<S: HyperStructure + ?Sized>(
        &self,
        s: &S,
        q: &ElementSet,
        query: &AbsorbingQuery,
    ) -> Verdict {
        assert!(query.kind != Kind::Prime, "prime queries go through ProductIndex");
        assert!(query.u <= self.max_size(), "table too small for {query}");
        assert!(query.u - query.v <= self.depth, "table depth too small for {query}");
        let failing = self.levels[query.u]
            .iter()
            .filter(|(p, _)| {
                p.product().is_subset(q) && p.level(query.u - query.v).iter().all(|d| !d.is_subset(q))
            })
            .map(|(_, rep)| rep)
            .min();
        Verdict::from_witness(failing.map(|rep| {
            let checked = distinct_submultisets(rep, query.v)
                .into_iter()
                .map(|sub| {
                    let p = s.product(&sub);
                    (sub, p)
                })
                .collect();
            Witness {
                tuple: rep.clone(),
                product: s.product(rep),
                checked,
            }
        }))
    }
}

/// Products of every multiset of size `1..=max_size` over an alphabet,
/// grouped by size in lexicographic order.
pub struct ProductIndex {
    alphabet: Vec<usize>,
    by_size: Vec<Vec<(Vec<usize>, ElementSet)>>,
    lookup: HashMap<Vec<usize>, ElementSet>,
}

impl ProductIndex {
    pub fn build<S: HyperStructure + ?Sized>(s: &S, alphabet: Vec<usize>, max_size: usize) -> Self {
        let mut lookup: HashMap<Vec<usize>, ElementSet> = HashMap::new();
        let mut by_size = vec![Vec::new()];
        for k in 1..=max_size {
            let mut level = Vec::new();
            for pos in multisets(alphabet.len(), k) {
                let m: Vec<usize> = pos.iter().map(|&i| alphabet[i]).collect();
                let p = if k == 1 {
                    ElementSet::singleton(m[0])
                } else {
                    s.set_mul(&lookup[&m[..k - 1]], m[k - 1])
                };
                lookup.insert(m.clone(), p);
                level.push((m, p));
            }
            by_size.push(level);
        }
        ProductIndex {
            alphabet,
            by_size,
            lookup,
        }
    }

    pub fn alphabet(&self) -> &[usize] {
        &self.alphabet
    }

    pub fn max_size(&self) -> usize {
        self.by_size.len() - 1
    }

    /// The product of a sorted multiset.
    pub fn product(&self, sorted: &[usize]) -> Option<&ElementSet> {
        self.lookup.get(sorted)
    }

    /// Decide a prime query. The witness is the least ordered tuple whose
    /// first `v` and last `u - v` factors both multiply outside `Q` while the
    /// whole product lies in `Q`; both halves of it come out sorted.
    pub fn check_prime(&self, q: &ElementSet, query: &AbsorbingQuery) -> Verdict {
        assert!(query.kind == Kind::Prime);
        assert!(query.u <= self.max_size(), "index too small for {query}");
        let (v, w) = (query.v, query.u - query.v);
        let outside = |k: usize| -> Vec<&(Vec<usize>, ElementSet)> {
            self.by_size[k].iter().filter(|(_, p)| !p.is_subset(q)).collect()
        };
        let rights = outside(w);
        let mut merged = Vec::with_capacity(query.u);
        for (left, lp) in outside(v) {
            for (right, rp) in &rights {
                merged.clear();
                merged.extend_from_slice(left);
                merged.extend_from_slice(right);
                merged.sort_unstable();
                let product = self.lookup[&merged];
                if product.is_subset(q) {
                    return Verdict::from_witness(Some(Witness {
                        tuple: left.iter().chain(right.iter()).copied().collect(),
                        product,
                        checked: vec![(left.clone(), *lp), (right.clone(), *rp)],
                    }));
                }
            }
        }
        Verdict::from_witness(None)
    }
}

/// The definitional check over ordered tuples, with sub-products taken in
/// position order. Exact for any structure, commutative or not; the witness
/// is the lexicographically least failing tuple.
pub fn ordered_check<S: HyperStructure + ?Sized>(
    s: &S,
    q: &ElementSet,
    query: &AbsorbingQuery,
) -> Verdict {
    let letters = alphabet(s, query.includes_units());
    if letters.is_empty() {
        return Verdict::from_witness(None);
    }
    let mut tuple = Vec::with_capacity(query.u);
    let mut prefix = Vec::with_capacity(query.u);
    Verdict::from_witness(ordered_search(s, q, query, &letters, &mut tuple, &mut prefix))
}

/// Depth-first over tuples in lexicographic order, carrying the left-fold
/// products of every prefix. For the prime kind a prefix of length `v`
/// inside `Q` settles its whole subtree.
fn ordered_search<S: HyperStructure + ?Sized>(
    s: &S,
    q: &ElementSet,
    query: &AbsorbingQuery,
    letters: &[usize],
    tuple: &mut Vec<usize>,
    prefix: &mut Vec<ElementSet>,
) -> Option<Witness> {
    let depth = tuple.len();
    if depth == query.u {
        let product = prefix[depth - 1];
        if !product.is_subset(q) {
            return None;
        }
        let subs: Vec<Vec<usize>> = match query.kind {
            Kind::Prime => vec![tuple[..query.v].to_vec(), tuple[query.v..].to_vec()],
            _ => combinations(query.u, query.v)
                .map(|pos| pos.iter().map(|&i| tuple[i]).collect())
                .collect(),
        };
        let mut checked = Vec::with_capacity(subs.len());
        for sub in subs {
            let p = s.product(&sub);
            if p.is_subset(q) {
                return None;
            }
            checked.push((sub, p));
        }
        return Some(Witness {
            tuple: tuple.clone(),
            product,
            checked,
        });
    }
    if query.kind == Kind::Prime && depth == query.v && prefix[depth - 1].is_subset(q) {
        return None;
    }
    for &x in letters {
        let next = match prefix.last() {
            Some(p) => s.set_mul(p, x),
            None => ElementSet::singleton(x),
        };
        tuple.push(x);
        prefix.push(next);
        let found = ordered_search(s, q, query, letters, tuple, prefix);
        tuple.pop();
        prefix.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

fn require_proper<S: HyperStructure + ?Sized>(s: &S, q: &ElementSet) -> Result<()> {
    if q.len() >= s.order() {
        Err(Error::ImproperIdeal)
    } else {
        Ok(())
    }
}

/// Decide a single query, choosing the multiset engine for commutative
/// structures and the ordered kernel otherwise.
pub fn check<S: HyperStructure + ?Sized>(
    s: &S,
    q: &ElementSet,
    query: &AbsorbingQuery,
) -> Result<Verdict> {
    require_proper(s, q)?;
    if !s.is_commutative() {
        return Ok(ordered_check(s, q, query));
    }
    let letters = alphabet(s, query.includes_units());
    if query.kind == Kind::Prime {
        return Ok(ProductIndex::build(s, letters, query.u).check_prime(q, query));
    }
    let table = ProfileTable::build(s, letters, query.u, query.u - query.v);
    Ok(table.check(s, q, query))
}

pub fn is_uv_absorbing<S: HyperStructure + ?Sized>(s: &S, q: &ElementSet, u: usize, v: usize) -> Result<Verdict> {
    check(s, q, &AbsorbingQuery::plain(u, v)?)
}

pub fn is_ab_uv_absorbing<S: HyperStructure + ?Sized>(s: &S, q: &ElementSet, u: usize, v: usize) -> Result<Verdict> {
    check(s, q, &AbsorbingQuery::ab(u, v)?)
}

pub fn is_uv_absorbing_prime<S: HyperStructure + ?Sized>(s: &S, q: &ElementSet, u: usize, v: usize) -> Result<Verdict> {
    check(s, q, &AbsorbingQuery::prime(u, v)?)
}

/// Whether `(v+1)`-fold products in `Q` always have a `v`-fold sub-product in
/// `Q`. `with_units` selects the variant quantifying over the whole ring
/// (the v-absorbing notion behind `Abs`) instead of the non-units.
pub fn is_v_absorbing<S: HyperStructure + ?Sized>(
    s: &S,
    q: &ElementSet,
    v: usize,
    with_units: bool,
) -> Result<Verdict> {
    let kind = if with_units { Kind::AB } else { Kind::Plain };
    check(s, q, &AbsorbingQuery::new(v + 1, v, kind)?)
}

/// `Abs(Q)` and `abs(Q)`. `Abs` is `None` when `Q` is not v-absorbing for any
/// `v`; `bound` records how far that was established (exactly, via a cycle in
/// the profile levels, or up to the cap).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbsIndices {
    pub abs_upper: Option<usize>,
    pub abs_lower: Option<usize>,
    pub bound: usize,
    pub exact_infinity: bool,
}

impl fmt::Display for AbsIndices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.abs_upper, self.abs_lower) {
            (Some(a), Some(b)) => write!(f, "Abs = {a}, abs = {b}"),
            _ if self.exact_infinity => write!(f, "Abs = ∞ (levels cycle after v = {}), abs undefined", self.bound),
            _ => write!(f, "Abs > {} (search cap), abs undefined", self.bound),
        }
    }
}

pub const DEFAULT_ABS_CAP: usize = 32;

pub fn abs_indices<S: HyperStructure + ?Sized>(s: &S, q: &ElementSet) -> Result<AbsIndices> {
    abs_indices_capped(s, q, DEFAULT_ABS_CAP)
}

/// `Abs(Q)` is the least `v` such that `Q` is v-absorbing over the whole
/// ring; `abs(Q)` is the least `v` such that `Q` is `(Abs(Q)+1, v)`-absorbing.
pub fn abs_indices_capped<S: HyperStructure + ?Sized>(
    s: &S,
    q: &ElementSet,
    cap: usize,
) -> Result<AbsIndices> {
    require_proper(s, q)?;
    let upper = if s.is_commutative() {
        least_v_absorbing(s, q, cap)
    } else {
        let mut found = Err(false);
        for v in 1..=cap {
            if ordered_check(s, q, &AbsorbingQuery::ab(v + 1, v)?).holds {
                found = Ok(v);
                break;
            }
        }
        found.map_err(|_| (cap, false))
    };
    match upper {
        Ok(a) => {
            let mut lower = a;
            for v in 1..a {
                if check(s, q, &AbsorbingQuery::plain(a + 1, v)?)?.holds {
                    lower = v;
                    break;
                }
            }
            Ok(AbsIndices {
                abs_upper: Some(a),
                abs_lower: Some(lower),
                bound: a,
                exact_infinity: false,
            })
        }
        Err((bound, exact)) => Ok(AbsIndices {
            abs_upper: None,
            abs_lower: None,
            bound,
            exact_infinity: exact,
        }),
    }
}

/// Walk the depth-1 profile levels `L_1, L_2, ..` over the whole carrier.
/// `Q` is v-absorbing iff `L_{v+1}` has no profile with product in `Q` and all
/// one-smaller sub-products outside `Q`. Since `L_{k+1}` is determined by
/// `L_k`, a repeated level proves that no larger `v` works either.
fn least_v_absorbing<S: HyperStructure + ?Sized>(
    s: &S,
    q: &ElementSet,
    cap: usize,
) -> std::result::Result<usize, (usize, bool)> {
    let letters = alphabet(s, true);
    let mut current: Vec<Profile> = vec![Profile::empty(1)];
    let mut history: HashMap<Vec<Profile>, usize> = HashMap::new();
    for k in 1..=cap + 1 {
        let mut next: Vec<Profile> = current
            .iter()
            .flat_map(|p| letters.iter().map(move |&y| p.push(s, y)))
            .collect();
        next.sort_unstable();
        next.dedup();
        current = next;
        if k >= 2 {
            let fails = current.iter().any(|p| {
                p.product().is_subset(q) && p.level(1).iter().all(|d| !d.is_subset(q))
            });
            if !fails {
                return Ok(k - 1);
            }
            if history.contains_key(&current) {
                return Err((k - 1, true));
            }
            history.insert(current.clone(), k);
        }
    }
    Err((cap, false))
}

/// The ideal-level form of the prime predicate: for all `u`-sequences of
/// proper hyperideals whose set product lies in `Q`, the product of the first
/// `v` or of the last `u - v` lies in `Q`.
pub fn ideal_product_prime_check<S: HyperStructure + ?Sized>(
    s: &S,
    q: &ElementSet,
    u: usize,
    v: usize,
    universe: &[ElementSet],
) -> Result<Option<Vec<ElementSet>>> {
    AbsorbingQuery::prime(u, v)?;
    require_proper(s, q)?;
    let proper: Vec<ElementSet> = universe
        .iter()
        .filter(|i| i.len() < s.order())
        .copied()
        .collect();
    if proper.is_empty() {
        return Ok(None);
    }
    let mut idx = vec![0usize; u];
    loop {
        let seq: Vec<ElementSet> = idx.iter().map(|&i| proper[i]).collect();
        if ideal_set_product(s, &seq).is_subset(q)
            && !ideal_set_product(s, &seq[..v]).is_subset(q)
            && !ideal_set_product(s, &seq[v..]).is_subset(q)
        {
            return Ok(Some(seq));
        }
        let mut i = u;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < proper.len() {
                break;
            }
            idx[i] = 0;
        }
    }
}

/// Tables for one ring, shared by every ideal and query up to the given
/// size: profiles over the non-units and over the whole carrier, and the
/// product index behind the prime predicate.
pub struct PredicateTable {
    nonunits: ProfileTable,
    all: ProfileTable,
    prime: ProductIndex,
}

impl PredicateTable {
    pub fn build<S: HyperStructure + ?Sized>(s: &S, max_u: usize) -> Self {
        let depth = max_u.saturating_sub(1);
        PredicateTable {
            nonunits: ProfileTable::build(s, alphabet(s, false), max_u, depth),
            all: ProfileTable::build(s, alphabet(s, true), max_u, depth),
            prime: ProductIndex::build(s, alphabet(s, false), max_u),
        }
    }

    pub fn max_u(&self) -> usize {
        self.all.max_size()
    }

    pub fn check<S: HyperStructure + ?Sized>(&self, s: &S, q: &ElementSet, query: &AbsorbingQuery) -> Verdict {
        if query.kind == Kind::Prime {
            return self.prime.check_prime(q, query);
        }
        let table = if query.includes_units() { &self.all } else { &self.nonunits };
        table.check(s, q, query)
    }

    pub fn holds<S: HyperStructure + ?Sized>(&self, s: &S, q: &ElementSet, query: &AbsorbingQuery) -> bool {
        self.check(s, q, query).holds
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperring::build_zmt;
    use crate::ideal::{enumerate_hyperideals, is_prime};
    use crate::zt::{ZtContext, ZtKind};

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn bad_queries() {
        assert_eq!(AbsorbingQuery::plain(2, 2), Err(Error::BadQuery { u: 2, v: 2 }));
        assert!(AbsorbingQuery::prime(3, 0).is_err());
        let ring = build_zmt(6, &[1, 3]).unwrap();
        assert_eq!(
            is_uv_absorbing(&ring, &ring.carrier(), 3, 2),
            Err(Error::ImproperIdeal)
        );
    }

    #[test]
    fn r6_examples() {
        let ring = build_zmt(6, &[1, 3]).unwrap();
        let zero = set(&[0]);
        assert!(is_v_absorbing(&ring, &zero, 2, true).unwrap().holds);
        assert!(!is_v_absorbing(&ring, &zero, 1, true).unwrap().holds);
        assert!(is_ab_uv_absorbing(&ring, &set(&[0, 3]), 3, 2).unwrap().holds);
        let idx = abs_indices(&ring, &zero).unwrap();
        assert_eq!(idx.abs_upper, Some(2));
        assert!(idx.abs_lower.unwrap() <= 2);
        let prime = abs_indices(&ring, &set(&[0, 3])).unwrap();
        assert_eq!((prime.abs_upper, prime.abs_lower), (Some(1), Some(1)));
    }

    #[test]
    fn primes_satisfy_every_query() {
        for (m, t) in [(6, vec![1, 3]), (8, vec![1, 3]), (12, vec![1, 5]), (9, vec![1, 2])] {
            let ring = build_zmt(m, &t).unwrap();
            let table = PredicateTable::build(&ring, 4);
            for q in enumerate_hyperideals(&ring) {
                if q.len() == m || !is_prime(&ring, &q).unwrap() {
                    continue;
                }
                for u in 2..=4 {
                    for v in 1..u {
                        for kind in [Kind::Plain, Kind::AB, Kind::Prime] {
                            let query = AbsorbingQuery::new(u, v, kind).unwrap();
                            assert!(table.holds(&ring, &q, &query), "{query} Q={q}");
                        }
                    }
                }
            }
        }
    }

    /// The profile engine against the ordered-tuple definition, witnesses
    /// included.
    #[test]
    fn profiles_match_ordered_definition() {
        for (m, t) in [(6, vec![1, 3]), (6, vec![2, 4]), (4, vec![1, 2]), (8, vec![2, 4]), (5, vec![2, 3])] {
            let ring = build_zmt(m, &t).unwrap();
            let table = PredicateTable::build(&ring, 4);
            for q in enumerate_hyperideals(&ring).into_iter().filter(|q| q.len() < m) {
                for u in 2..=4 {
                    for v in 1..u {
                        for kind in [Kind::Plain, Kind::AB, Kind::Prime] {
                            let query = AbsorbingQuery::new(u, v, kind).unwrap();
                            let fast = table.check(&ring, &q, &query);
                            let slow = ordered_check(&ring, &q, &query);
                            assert_eq!(fast.holds, slow.holds, "m={m} T={t:?} Q={q} {query}");
                            if let (Some(a), Some(b)) = (&fast.witness, &slow.witness) {
                                assert_eq!(a.tuple, b.tuple, "m={m} T={t:?} Q={q} {query}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn abs_cycle_detection_reports_infinity() {
        // Finite or not, the reported index must agree with direct scans.
        let ring = build_zmt(6, &[2, 4]).unwrap();
        for q in enumerate_hyperideals(&ring).into_iter().filter(|q| q.len() < 6) {
            let idx = abs_indices(&ring, &q).unwrap();
            if let Some(a) = idx.abs_upper {
                assert!(is_v_absorbing(&ring, &q, a, true).unwrap().holds);
                if a > 1 {
                    assert!(!is_v_absorbing(&ring, &q, a - 1, true).unwrap().holds);
                }
            } else {
                for v in 1..=6 {
                    assert!(!is_v_absorbing(&ring, &q, v, true).unwrap().holds, "Q={q} v={v}");
                }
            }
        }
    }

    /// Verdicts agree with the reduced ring; the ZT witness (ordered by lift)
    /// replays there as a failing tuple.
    #[test]
    fn zt_engine_matches_reduced_ring() {
        for (t, n) in [(vec![2i64, 4], 12u64), (vec![1, 3], 10), (vec![2, 3], 9), (vec![2, 4], 15)] {
            let ctx = ZtContext::new(&t, n).unwrap();
            let ring = ctx.reduced_ring().unwrap();
            let letters: Vec<usize> = (0..n as usize).collect();
            let table = ProfileTable::build(&ring, letters.clone(), 4, 3);
            let index = ProductIndex::build(&ring, letters, 4);
            let zero = ElementSet::singleton(0);
            for u in 2..=4 {
                for v in 1..u {
                    for (zk, k) in [(ZtKind::Plain, Kind::Plain), (ZtKind::Prime, Kind::Prime)] {
                        let query = AbsorbingQuery::new(u, v, k).unwrap();
                        let a = ctx.check(zk, u, v).unwrap();
                        let b = match k {
                            Kind::Prime => index.check_prime(&zero, &query),
                            _ => table.check(&ring, &zero, &query),
                        };
                        assert_eq!(a.holds, b.holds, "T={t:?} n={n} ({u},{v}) {k:?}");
                        if let Some(w) = a.witness {
                            let xs: Vec<usize> = w.tuple.iter().map(|&x| x.rem_euclid(n as i64) as usize).collect();
                            assert!(ring.product(&xs).is_subset(&zero));
                            let subs: Vec<Vec<usize>> = match k {
                                Kind::Prime => vec![xs[..v].to_vec(), xs[v..].to_vec()],
                                _ => distinct_submultisets(&xs, v),
                            };
                            assert!(subs.iter().all(|sub| !ring.product(sub).is_subset(&zero)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn ideal_form_matches_element_form_r6() {
        let ring = build_zmt(6, &[1, 3]).unwrap();
        let ideals = enumerate_hyperideals(&ring);
        for q in ideals.iter().filter(|q| q.len() < 6) {
            for (u, v) in [(2, 1), (3, 1), (3, 2)] {
                let elem = is_uv_absorbing_prime(&ring, q, u, v).unwrap().holds;
                let form = ideal_product_prime_check(&ring, q, u, v, &ideals).unwrap().is_none();
                assert_eq!(elem, form, "Q={q} ({u},{v})");
            }
        }
        assert_eq!(
            ideal_product_prime_check(&ring, &ring.carrier(), 3, 1, &ideals),
            Err(Error::ImproperIdeal)
        );
    }

    #[test]
    fn witness_replays() {
        let ring = build_zmt(8, &[2, 4]).unwrap();
        let q = set(&[0]);
        let v = is_uv_absorbing(&ring, &q, 3, 1).unwrap();
        let w = v.witness.expect("zero ideal of ℤ_{8,{2,4}} is not (3,1)-absorbing");
        assert!(ring.product(&w.tuple).is_subset(&q));
        assert!(w.checked.iter().all(|(_, p)| !p.is_subset(&q)));
        assert_eq!(w.checked.len(), distinct_submultisets(&w.tuple, 1).len());
    }
}
