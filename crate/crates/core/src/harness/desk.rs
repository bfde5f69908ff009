//! The instance universe a theorem run scans: rings with their ideal
//! lattices and predicate tables, product rings with their factors, matrix
//! bases and `ℤ_T` contexts.

use std::collections::{BTreeSet, HashMap};
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Deserialize;

use crate::absorbing::{check, AbsorbingQuery, Kind, PredicateTable};
use crate::constructions::direct_product;
use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::format::{Ring, RingSpec};
use crate::hyperring::{build_zmt, Hyperring};
use crate::ideal::{enumerate_hyperideals, is_prime, maximal_ideals, radical, CClassCache};
use crate::zt::{gcd, ZtContext};

/// A desk spec as read from TOML. Every field is optional; the defaults are
/// the standard desk.
///
/// ```toml
/// max_u = 4
/// witness_limit = 4
/// budget = 5000000
/// files = ["extra_ring.toml"]
///
/// [zmt]
/// moduli = [4, 6, 8, 9, 12]
/// t_size = 2
///
/// [products]
/// max_order = 36
///
/// [matrix]
/// max_u = 3
/// bases = [{ m = 2, T = [0] }, { m = 4, T = [2] }]
///
/// [zt]
/// contexts = [{ T = [2, 4], n = 150 }, { T = [2, 4], n = 15 }]
/// grid_t = [[2, 4], [1, 3], [2, 3]]
/// grid_n = [6, 8, 10, 12]
/// max_u = 4
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct DeskSpec {
    pub max_u: usize,
    pub witness_limit: usize,
    /// Instances a single property may scan before its verdict is cut short.
    pub budget: u64,
    pub zmt: ZmtGrid,
    pub products: ProductGrid,
    pub matrix: MatrixGrid,
    pub zt: ZtGrid,
    pub files: Vec<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ZmtGrid {
    pub moduli: Vec<usize>,
    pub t_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ProductGrid {
    /// Products larger than this are skipped; 0 disables products.
    pub max_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZmtSpec {
    pub m: usize,
    #[serde(rename = "T")]
    pub t: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct MatrixGrid {
    pub max_u: usize,
    pub bases: Vec<ZmtSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZtSpec {
    #[serde(rename = "T")]
    pub t: Vec<i64>,
    pub n: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ZtGrid {
    pub contexts: Vec<ZtSpec>,
    pub grid_t: Vec<Vec<i64>>,
    pub grid_n: Vec<u64>,
    pub max_u: usize,
}

impl Default for DeskSpec {
    fn default() -> Self {
        DeskSpec {
            max_u: 4,
            witness_limit: 4,
            budget: 5_000_000,
            zmt: ZmtGrid::default(),
            products: ProductGrid::default(),
            matrix: MatrixGrid::default(),
            zt: ZtGrid::default(),
            files: Vec::new(),
        }
    }
}

impl Default for ZmtGrid {
    fn default() -> Self {
        ZmtGrid {
            moduli: vec![4, 6, 8, 9, 12],
            t_size: 2,
        }
    }
}

impl Default for ProductGrid {
    fn default() -> Self {
        ProductGrid { max_order: 36 }
    }
}

impl Default for MatrixGrid {
    fn default() -> Self {
        let base = |m, t: &[usize]| ZmtSpec { m, t: t.to_vec() };
        MatrixGrid {
            max_u: 3,
            bases: vec![base(2, &[0]), base(3, &[0]), base(4, &[2]), base(4, &[0, 2])],
        }
    }
}

impl Default for ZtGrid {
    fn default() -> Self {
        ZtGrid {
            contexts: vec![ZtSpec { t: vec![2, 4], n: 150 }, ZtSpec { t: vec![2, 4], n: 15 }],
            grid_t: vec![vec![2, 4], vec![1, 3], vec![2, 3]],
            grid_n: vec![6, 8, 10, 12],
            max_u: 4,
        }
    }
}

impl DeskSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let spec: DeskSpec = toml::from_str(text).map_err(|e| Error::BadSpec(e.message().to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    /// Read a spec file; ring file paths are taken relative to it.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::BadSpec(format!("{}: {e}", path.display())))?;
        let mut spec = Self::parse(&text)?;
        let dir = path.parent().unwrap_or(Path::new("."));
        for f in &mut spec.files {
            if f.is_relative() {
                *f = dir.join(&*f);
            }
        }
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::BadSpec(msg));
        if !(2..=5).contains(&self.max_u) {
            return bad(format!("max_u must be in 2..=5, got {}", self.max_u));
        }
        if !(2..=4).contains(&self.matrix.max_u) {
            return bad(format!("matrix.max_u must be in 2..=4, got {}", self.matrix.max_u));
        }
        if !(2..=5).contains(&self.zt.max_u) {
            return bad(format!("zt.max_u must be in 2..=5, got {}", self.zt.max_u));
        }
        if let Some(m) = self.zmt.moduli.iter().find(|&&m| !(2..=12).contains(&m)) {
            return bad(format!("zmt modulus {m} outside 2..=12"));
        }
        if self.zmt.t_size == 0 {
            return bad("zmt.t_size must be positive".into());
        }
        if self.witness_limit == 0 {
            return bad("witness_limit must be positive".into());
        }
        Ok(())
    }
}

/// A ring of the stream with everything the properties ask about it.
pub struct RingCase {
    pub label: String,
    pub ring: Hyperring,
    /// `(m, T)` for grid rings.
    pub zmt: Option<(usize, Vec<usize>)>,
    /// All hyperideals, carrier last.
    pub ideals: Vec<ElementSet>,
    pub cache: CClassCache,
    pub maximal: Vec<ElementSet>,
    pub local: bool,
    primes: BTreeSet<ElementSet>,
    /// Every query up to `max_u` of every kind, on every proper hyperideal.
    verdicts: HashMap<(ElementSet, AbsorbingQuery), bool>,
}

impl RingCase {
    pub fn new(label: String, ring: Hyperring, max_u: usize) -> Self {
        let ideals = enumerate_hyperideals(&ring);
        let cache = CClassCache::new(&ring);
        let maximal = maximal_ideals(&ring, &ideals);
        let primes = ideals
            .iter()
            .filter(|p| p.len() < ring.order() && is_prime(&ring, p).unwrap_or(false))
            .copied()
            .collect();
        let table = PredicateTable::build(&ring, max_u);
        let mut verdicts = HashMap::new();
        for q in &ideals[..ideals.len() - 1] {
            for (u, v) in Desk::queries(max_u) {
                for kind in [Kind::Plain, Kind::AB, Kind::Prime] {
                    let query = AbsorbingQuery::new(u, v, kind).expect("u > v >= 1");
                    verdicts.insert((*q, query), table.holds(&ring, q, &query));
                }
            }
        }
        RingCase {
            label,
            zmt: None,
            local: maximal.len() == 1,
            ring,
            ideals,
            cache,
            maximal,
            primes,
            verdicts,
        }
    }

    pub fn proper(&self) -> &[ElementSet] {
        &self.ideals[..self.ideals.len() - 1]
    }

    pub fn is_prime(&self, q: &ElementSet) -> bool {
        self.primes.contains(q)
    }

    pub fn primes(&self) -> impl Iterator<Item = &ElementSet> {
        self.primes.iter()
    }

    pub fn is_c(&self, q: &ElementSet) -> bool {
        self.cache.is_c_hyperideal(q)
    }

    pub fn is_strong_c(&self, q: &ElementSet) -> bool {
        self.cache.is_strong_c_hyperideal(q)
    }

    pub fn radical(&self, q: &ElementSet) -> ElementSet {
        radical(&self.ring, &self.ideals, q).members
    }

    pub fn is_proper(&self, q: &ElementSet) -> bool {
        q.len() < self.ring.order()
    }

    /// Minimal members (under inclusion) of a family of sets.
    pub fn minimal(family: &[ElementSet]) -> Vec<ElementSet> {
        family
            .iter()
            .filter(|a| !family.iter().any(|b| b != *a && b.is_subset(a)))
            .copied()
            .collect()
    }

    /// Primes minimal over `Q`.
    pub fn minimal_primes(&self, q: &ElementSet) -> Vec<ElementSet> {
        let above: Vec<ElementSet> = self.primes.iter().filter(|p| q.is_subset(p)).copied().collect();
        Self::minimal(&above)
    }

    /// Decide a query on a proper subset closed enough for the predicate,
    /// from the precomputed verdicts when `Q` is a hyperideal.
    pub fn holds(&self, q: &ElementSet, query: &AbsorbingQuery) -> bool {
        match self.verdicts.get(&(*q, *query)) {
            Some(&holds) => holds,
            None => check(&self.ring, q, query).expect("proper subset").holds,
        }
    }

    /// `Q` is v-absorbing: every `(v+1)`-fold product in `Q` has a `v`-fold
    /// sub-product in `Q`, factors ranging over the whole ring.
    pub fn is_v_absorbing(&self, q: &ElementSet, v: usize) -> bool {
        self.holds(q, &AbsorbingQuery::ab(v + 1, v).expect("v >= 1"))
    }

    pub fn describe(&self, q: &ElementSet) -> String {
        format!("{} Q={}", self.label, q)
    }
}

/// A product ring of the stream, by index into [`Desk::rings`], together
/// with the indices of its factors.
pub struct ProductCase {
    pub index: usize,
    pub left: usize,
    pub right: usize,
    pub right_order: usize,
}

impl ProductCase {
    pub fn pair_set(&self, i: &ElementSet, j: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty();
        for a in i {
            for b in j {
                out.insert(a * self.right_order + b);
            }
        }
        out
    }
}

/// The materialized universe of a desk spec.
pub struct Desk {
    pub spec: DeskSpec,
    pub seed: u64,
    /// Grid rings with an identity, table files, then the product rings.
    pub rings: Vec<RingCase>,
    /// Index of the first product ring in `rings`.
    pub base_count: usize,
    pub products: Vec<ProductCase>,
    pub matrix_bases: Vec<(String, Hyperring)>,
    pub zt: Vec<ZtContext>,
}

fn zmt_label(m: usize, t: &[usize]) -> String {
    let t: Vec<String> = t.iter().map(|x| x.to_string()).collect();
    format!("Z_{{{m},{{{}}}}}", t.join(","))
}

/// `T` up to multiplication by a unit of `ℤ_m`: `x ↦ c·x` is an isomorphism
/// `ℤ_{m,T} → ℤ_{m,c⁻¹T}`, so one representative per class is enough for
/// building products.
fn t_class_key(m: usize, t: &[usize]) -> Vec<usize> {
    (1..m)
        .filter(|&c| gcd(c as u64, m as u64) == 1)
        .map(|c| {
            let mut scaled: Vec<usize> = t.iter().map(|x| x * c % m).collect();
            scaled.sort_unstable();
            scaled
        })
        .min()
        .unwrap_or_else(|| t.to_vec())
}

impl Desk {
    pub fn build(spec: &DeskSpec, seed: u64) -> Result<Self> {
        spec.validate()?;
        let mut grid: Vec<(String, Hyperring, Option<(usize, Vec<usize>)>)> = Vec::new();
        for &m in &spec.zmt.moduli {
            for t in crate::multiset::combinations(m - 1, spec.zmt.t_size) {
                let t: Vec<usize> = t.iter().map(|x| x + 1).collect();
                let ring = build_zmt(m, &t)?;
                if ring.has_identity() {
                    grid.push((zmt_label(m, &t), ring, Some((m, t))));
                }
            }
        }
        for path in &spec.files {
            let text = std::fs::read_to_string(path).map_err(|e| Error::BadSpec(format!("{}: {e}", path.display())))?;
            match RingSpec::parse(&text)?.build()? {
                Ring::Finite(ring) if ring.has_identity() => grid.push((path.display().to_string(), ring, None)),
                Ring::Finite(_) => return Err(Error::BadSpec(format!("{} has no identity", path.display()))),
                Ring::Zt(_) => return Err(Error::BadSpec(format!("{} is a ZT context, not a finite ring", path.display()))),
                Ring::Mul(_) => return Err(Error::BadSpec(format!("{} has no addition table", path.display()))),
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        grid.shuffle(&mut rng);

        let mut factors: Vec<usize> = Vec::new();
        let mut keys = BTreeSet::new();
        for (i, (_, _, zmt)) in grid.iter().enumerate() {
            if let Some((m, t)) = zmt {
                if keys.insert((*m, t_class_key(*m, t))) {
                    factors.push(i);
                }
            }
        }
        let mut pairs = Vec::new();
        for (a, &i) in factors.iter().enumerate() {
            for &j in &factors[a..] {
                let order = grid[i].1.order() * grid[j].1.order();
                if spec.products.max_order > 0 && order <= spec.products.max_order {
                    pairs.push((i, j));
                }
            }
        }

        let max_u = spec.max_u;
        let base_count = grid.len();
        let product_cases: Vec<RingCase> = pairs
            .par_iter()
            .map(|&(i, j)| {
                let p = direct_product(&grid[i].1, &grid[j].1)?;
                Ok(RingCase::new(format!("{} x {}", grid[i].0, grid[j].0), p.ring, max_u))
            })
            .collect::<Result<_>>()?;
        let products = pairs
            .iter()
            .enumerate()
            .map(|(k, &(i, j))| ProductCase {
                index: base_count + k,
                left: i,
                right: j,
                right_order: grid[j].1.order(),
            })
            .collect();
        let mut rings: Vec<RingCase> = grid
            .into_par_iter()
            .map(|(label, ring, zmt)| RingCase {
                zmt,
                ..RingCase::new(label, ring, max_u)
            })
            .collect();
        rings.extend(product_cases);

        let mut matrix_bases = Vec::new();
        for b in &spec.matrix.bases {
            let ring = build_zmt(b.m, &b.t)?;
            matrix_bases.push((zmt_label(b.m, &b.t), ring));
        }

        let mut zt = Vec::new();
        for c in &spec.zt.contexts {
            zt.push(ZtContext::new(&c.t, c.n)?);
        }
        for t in &spec.zt.grid_t {
            for &n in &spec.zt.grid_n {
                zt.push(ZtContext::new(t, n)?);
            }
        }

        Ok(Desk {
            spec: spec.clone(),
            seed,
            rings,
            base_count,
            products,
            matrix_bases,
            zt,
        })
    }

    pub fn base_rings(&self) -> &[RingCase] {
        &self.rings[..self.base_count]
    }

    pub fn base(&self, i: usize) -> &RingCase {
        &self.rings[i]
    }

    /// All `(u, v)` with `1 ≤ v < u ≤ max_u`.
    pub fn queries(max_u: usize) -> Vec<(usize, usize)> {
        (2..=max_u).flat_map(|u| (1..u).map(move |v| (u, v))).collect()
    }
}
