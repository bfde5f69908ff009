use std::collections::BTreeSet;

use crate::absorbing::{abs_indices, check, ideal_product_prime_check, AbsorbingQuery};
use crate::constructions::{
    fundamental_ring, localization, matrix_hyperring, monomial_extension, quotient, Closure, GoodHomomorphism,
    DEFAULT_MATRIX_BUDGET,
};
use crate::element_set::ElementSet;
use crate::hyperring::{build_zmt, HyperStructure, Hyperring};
use crate::ideal::{colon, enumerate_hyperideals, ideal_product, ideal_set_product, is_primary, jacobson, power_members_at};
use crate::multiset::{binomial, combinations};
use crate::zt::{ZtContext, ZtKind};

use super::{Desk, Outcome, RingCase, Scan, TheoremProperty};

/// Largest exponent tried for each factor in POWERS-LEMMA.
const POWER_CAP: usize = 3;
/// Degree bound of the monomial extension in POLYNOMIAL.
const POLY_DEGREE: usize = 2;

fn plain(u: usize, v: usize) -> AbsorbingQuery {
    AbsorbingQuery::plain(u, v).expect("u > v >= 1")
}

fn ab(u: usize, v: usize) -> AbsorbingQuery {
    AbsorbingQuery::ab(u, v).expect("u > v >= 1")
}

fn prime(u: usize, v: usize) -> AbsorbingQuery {
    AbsorbingQuery::prime(u, v).expect("u > v >= 1")
}

/// The query on an arbitrary structure; an improper set never satisfies it.
fn holds_on<S: HyperStructure + ?Sized>(s: &S, q: &ElementSet, query: AbsorbingQuery) -> bool {
    q.len() < s.order() && check(s, q, &query).map(|v| v.holds).unwrap_or(false)
}

fn set_power<S: HyperStructure + ?Sized>(s: &S, p: &ElementSet, k: usize) -> ElementSet {
    ideal_set_product(s, &vec![*p; k])
}

fn absorbing_for_some_u(c: &RingCase, q: &ElementSet, v: usize, max_u: usize) -> bool {
    (v + 1..=max_u).any(|u| c.holds(q, &plain(u, v)))
}

fn zt_label(z: &ZtContext) -> String {
    let t: Vec<String> = z.t().iter().map(|x| x.to_string()).collect();
    format!("Z_T T={{{}}} <{}>", t.join(","), z.modulus())
}

fn list(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn registry() -> &'static [TheoremProperty] {
    &REGISTRY
}

macro_rules! property {
    ($id:literal, $run:ident, $hyp:literal, $concl:literal) => {
        TheoremProperty {
            id: $id,
            hypothesis: $hyp,
            conclusion: $concl,
            run: $run,
        }
    };
}

static REGISTRY: [TheoremProperty; 38] = [
    property!("MONOTONICITY", monotonicity,
        "Q is (u,v)-absorbing; k >= u, r >= v, k > r (rings and ZT contexts)",
        "Q is (k,r)-absorbing"),
    property!("DOWNGRADE", downgrade,
        "Q is (u,v)-absorbing",
        "Q is (u,u-1)-absorbing, and (u-1)-absorbing with factors ranging over the whole ring"),
    property!("INTERSECTION", intersection,
        "Q1 is (u1,v1)-absorbing, Q2 is (u2,v2)-absorbing; v = v1+v2, u = max(u1,u2,v+1) <= max_u",
        "Q1 ∩ Q2 is (u,v)-absorbing"),
    property!("RADICAL-FORM", radical_form,
        "Q is a (u,v)-absorbing C-hyperideal",
        "rad(Q) = {x : x^v ⊆ Q}"),
    property!("RADICAL-ABSORBING", radical_absorbing,
        "Q is a (u,v)-absorbing C-hyperideal; k = max(ceil(u/v), v+1)",
        "rad(Q) is a proper (k,v)-absorbing hyperideal"),
    property!("MINIMAL-EXISTENCE", minimal_existence,
        "Q is a proper hyperideal, u > v",
        "the (u,v)-absorbing hyperideals containing Q have a minimal member"),
    property!("MINIMAL-V-ABSORBING", minimal_v_absorbing,
        "Q is a proper hyperideal, v >= 1",
        "the v-absorbing hyperideals containing Q have a minimal member"),
    property!("COUNTING", counting,
        "Q is (u,v)-absorbing with exactly r minimal primes; 2 <= k <= r <= u-1",
        "at least C(r,k) k-absorbing hyperideals are minimal over Q"),
    property!("POWERS-LEMMA", powers_lemma,
        "Q is (u,v)-absorbing; Q1..Qv pairwise incomparable prime C-hyperideals containing Q; xi ∈ Qi outside the other Qj; x1^k1 ∘ .. ∘ xv^kv ⊆ Q with ki <= 3",
        "x1 ∘ .. ∘ xv ⊆ Q"),
    property!("MINPRIME-PRODUCT", minprime_product,
        "Q is a (u,v)-absorbing strong C-hyperideal, 2 <= v < u; the minimal primes over Q are exactly v C-hyperideals Q1..Qv; zi ∈ Qi outside the other Qj",
        "Qj ∘ Π_{i≠j} zi ⊆ Q for every j"),
    property!("COPRIME-PRODUCT", coprime_product,
        "Q is a (u,v)-absorbing strong C-hyperideal, 2 <= v < u; the minimal primes over Q are exactly v C-hyperideals Q1..Qv",
        "Q1 ∘ .. ∘ Qv ⊆ Q and abs(Q) = v; for pairwise coprime Qi the hyperideal generated by Q1 ∘ .. ∘ Qv is Q"),
    property!("RADICAL-EQUIV", radical_equiv,
        "Q is a C-hyperideal with Q = rad(Q), u > v",
        "Q is (u,v)-absorbing iff Q is v-absorbing"),
    property!("ABS-EQUALS", abs_equals,
        "Q is a C-hyperideal with Q = rad(Q), (u,v)-absorbing for some u <= max_u",
        "abs(Q) = Abs(Q)"),
    property!("PRIMARY-POWER", primary_power,
        "Q is a primary C-hyperideal with prime radical P, P ∘ .. ∘ P (v factors) ⊆ Q, u >= v+1",
        "Q is (u,v)-absorbing"),
    property!("PRIMARY-POWER-ABS", primary_power_abs,
        "P is prime and P^v, the hyperideal generated by P ∘ .. ∘ P (v factors), is a proper primary C-hyperideal with radical P",
        "P^v is (u,v)-absorbing for every u > v and abs(P^v) = v"),
    property!("AB-EQUIVALENCE", ab_equivalence,
        "Q is a proper strong C-hyperideal and a+1 is not a unit for some a ∈ Q",
        "Q is AB-(u,v)-absorbing iff Q is (u,v)-absorbing"),
    property!("JACOBSON-COR", jacobson_cor,
        "Q is a proper strong C-hyperideal not contained in J(A)",
        "Q is AB-(u,v)-absorbing iff Q is (u,v)-absorbing"),
    property!("GAMMA-TRANSFER", gamma_transfer,
        "Q is a proper hyperideal that is a union of γ*-classes",
        "Q is AB-(u,v)-absorbing in A iff Q/γ* is AB-(u,v)-absorbing in A/γ*"),
    property!("PRODUCT-AB", product_ab,
        "A = A1 × A2, Q = Q1 × A2 with Q1 a proper hyperideal of A1",
        "Q (u,v)-absorbing iff Q1 AB-(u,v)-absorbing in A1 iff Q AB-(u,v)-absorbing"),
    property!("PRIME-SHIFT", prime_shift,
        "A is not local; Q is a proper strong C-hyperideal; u > v >= 2",
        "Q is (u,v)-absorbing prime iff Q is (u-1,v-1)-absorbing prime"),
    property!("PRIME-SYMMETRY", prime_symmetry,
        "Q is a proper C-hyperideal, u > v",
        "Q is (u,v)-absorbing prime iff Q is (u,u-v)-absorbing prime"),
    property!("PRIME-STEP", prime_step,
        "Q is a (u,v)-absorbing prime C-hyperideal, u+1 <= max_u",
        "Q is (u+1,v+1)-absorbing prime"),
    property!("PRIME-REDUCE", prime_reduce,
        "A is not local; Q is a proper strong C-hyperideal; w = u-v+1 >= 2",
        "Q is (w,1)-absorbing prime iff Q is prime"),
    property!("PRIME-COLLAPSE", prime_collapse,
        "A is not local; Q is a proper strong C-hyperideal",
        "Q is (u,v)-absorbing prime iff Q is prime"),
    property!("PRODUCT-PRIME", product_prime,
        "Q1, Q2 strong C-hyperideals of A1, A2 with Q1 × Q2 proper",
        "Q1 × Q2 (u,v)-absorbing prime iff Q1 × Q2 prime iff (Q1 prime, Q2 = A2) or (Q2 prime, Q1 = A1)"),
    property!("V-PLUS-ONE-LOCAL", v_plus_one_local,
        "Q is a proper strong C-hyperideal, v >= 1",
        "Q is (v+1,v)-absorbing prime iff Q is prime or A is local with M ∘ .. ∘ M (v factors) ⊆ Q"),
    property!("CONTAINMENT-COR", containment_cor,
        "Q is a (v+1,v)-absorbing prime strong C-hyperideal that is not prime; P ⊇ Q is a proper hyperideal; u > v",
        "P is (u,v)-absorbing prime"),
    property!("RADICAL-PRIME", radical_prime,
        "Q is a (u,v)-absorbing prime strong C-hyperideal",
        "rad(Q) is prime; if Q is not prime then A is local, and rad(Q) = M when u = v+1"),
    property!("HYPERFIELD-LEMMA", hyperfield_lemma,
        "every proper hyperideal of A is a prime C-hyperideal",
        "every nonzero element of A is a unit"),
    property!("LOCAL-NILPOTENT", local_nilpotent,
        "every hyperideal of A is a strong C-hyperideal, v >= 1",
        "every proper hyperideal is (v+1,v)-absorbing prime iff A is local with M ∘ .. ∘ M (v factors) = {0}"),
    property!("IDEAL-FORM", ideal_form,
        "Q is a proper hyperideal of a base ring, u > v",
        "Q is (u,v)-absorbing prime iff for proper hyperideals I1..Iu, I1 ∘ .. ∘ Iu ⊆ Q forces I1 ∘ .. ∘ Iv ⊆ Q or I(v+1) ∘ .. ∘ Iu ⊆ Q"),
    property!("COLON", colon_property,
        "Q is (u,v)-absorbing prime, v >= 2, x is neither in Q nor a unit",
        "(Q : x) is a proper (u-1,v-1)-absorbing prime hyperideal"),
    property!("MATRIX", matrix,
        "M2(Q) is (u,v)-absorbing prime in M2(A) for an identity-free base A",
        "Q is (u,v)-absorbing prime in A"),
    property!("POLYNOMIAL", polynomial,
        "Q is (u,v)-absorbing prime in a base ring A",
        "Q[x] is (u,v)-absorbing prime in A[x] (monomials of degree <= 2)"),
    property!("HOM-PREIMAGE", hom_preimage,
        "θ: A1 -> A2 is a good homomorphism sending non-units to non-units; Q2 is (u,v)-absorbing prime in A2",
        "θ⁻¹(Q2) is (u,v)-absorbing prime in A1"),
    property!("HOM-IMAGE", hom_image,
        "θ as in HOM-PREIMAGE and surjective; Q1 is a (u,v)-absorbing prime C-hyperideal containing ker θ",
        "θ(Q1) is (u,v)-absorbing prime in A2"),
    property!("QUOTIENT-COROLLARY", quotient_corollary,
        "Q1 ⊆ Q2 hyperideals, Q2 a proper C-hyperideal, A/Q1 well defined, x + Q1 not a unit for every non-unit x",
        "Q2 is (u,v)-absorbing prime iff Q2/Q1 is (u,v)-absorbing prime in A/Q1"),
    property!("LOCALIZATION", localization_property,
        "S strictly multiplicatively closed with 1 ∈ S, 0 ∉ S, S⁻¹A well defined; Q a C-hyperideal, Q ∩ S = ∅, (u,v)-absorbing prime, v >= 2",
        "S⁻¹Q is a proper (u-1,v-1)-absorbing prime hyperideal of S⁻¹A"),
];

fn monotonicity(d: &Desk, scan: &mut Scan) {
    let qs = Desk::queries(d.spec.max_u);
    for c in &d.rings {
        for q in c.proper() {
            for &(u, v) in &qs {
                for &(k, r) in &qs {
                    if k < u || r < v || (k, r) == (u, v) {
                        continue;
                    }
                    scan.visit(|| {
                        if !c.holds(q, &plain(u, v)) {
                            return Outcome::Skip;
                        }
                        Outcome::check(c.holds(q, &plain(k, r)), || {
                            format!("{} ({u},{v}) holds, ({k},{r}) fails", c.describe(q))
                        })
                    });
                }
            }
        }
    }
    let qs = Desk::queries(d.spec.zt.max_u);
    for z in &d.zt {
        let verdicts: Vec<bool> = qs
            .iter()
            .map(|&(u, v)| z.check(ZtKind::Plain, u, v).expect("valid query").holds)
            .collect();
        for (i, &(u, v)) in qs.iter().enumerate() {
            for (j, &(k, r)) in qs.iter().enumerate() {
                if k < u || r < v || i == j {
                    continue;
                }
                scan.visit(|| {
                    if !verdicts[i] {
                        return Outcome::Skip;
                    }
                    Outcome::check(verdicts[j], || format!("{} ({u},{v}) holds, ({k},{r}) fails", zt_label(z)))
                });
            }
        }
    }
}

fn downgrade(d: &Desk, scan: &mut Scan) {
    let qs = Desk::queries(d.spec.max_u);
    for c in &d.rings {
        for q in c.proper() {
            for &(u, v) in &qs {
                scan.visit(|| {
                    if !c.holds(q, &plain(u, v)) {
                        return Outcome::Skip;
                    }
                    let nonunits = c.holds(q, &plain(u, u - 1));
                    let whole = c.is_v_absorbing(q, u - 1);
                    Outcome::check(nonunits && whole, || {
                        format!(
                            "{} ({u},{v}) holds; ({u},{}) {nonunits}, {}-absorbing over A {whole}",
                            c.describe(q),
                            u - 1,
                            u - 1
                        )
                    })
                });
            }
        }
    }
}

fn intersection(d: &Desk, scan: &mut Scan) {
    let qs = Desk::queries(d.spec.max_u);
    for c in &d.rings {
        let proper = c.proper();
        for (i, q1) in proper.iter().enumerate() {
            for q2 in &proper[i..] {
                for &(u1, v1) in &qs {
                    for &(u2, v2) in &qs {
                        let v = v1 + v2;
                        let u = u1.max(u2).max(v + 1);
                        if u > d.spec.max_u {
                            continue;
                        }
                        scan.visit(|| {
                            if !c.holds(q1, &plain(u1, v1)) || !c.holds(q2, &plain(u2, v2)) {
                                return Outcome::Skip;
                            }
                            let meet = q1.intersection(q2);
                            Outcome::check(c.holds(&meet, &plain(u, v)), || {
                                format!(
                                    "{} Q1={q1} ({u1},{v1}) Q2={q2} ({u2},{v2}): intersection not ({u},{v})",
                                    c.label
                                )
                            })
                        });
                    }
                }
            }
        }
    }
}

fn radical_form(d: &Desk, scan: &mut Scan) {
    let qs = Desk::queries(d.spec.max_u);
    for c in &d.rings {
        for q in c.proper() {
            for &(u, v) in &qs {
                scan.visit(|| {
                    if !c.is_c(q) || !c.holds(q, &plain(u, v)) {
                        return Outcome::Skip;
                    }
                    let rad = c.radical(q);
                    let powers = power_members_at(&c.ring, q, v);
                    Outcome::check(rad == powers, || {
                        format!("{} ({u},{v}): rad = {rad}, {{x : x^{v} ⊆ Q}} = {powers}", c.describe(q))
                    })
                });
            }
        }
    }
}

fn radical_absorbing(d: &Desk, scan: &mut Scan) {
    let qs = Desk::queries(d.spec.max_u);
    for c in &d.rings {
        for q in c.proper() {
            for &(u, v) in &qs {
                scan.visit(|| {
                    if !c.is_c(q) || !c.holds(q, &plain(u, v)) {
                        return Outcome::Skip;
                    }
                    let k = u.div_ceil(v).max(v + 1);
                    let rad = c.radical(q);
                    Outcome::check(c.is_proper(&rad) && c.holds(&rad, &plain(k, v)), || {
                        format!("{} ({u},{v}): rad = {rad} is not ({k},{v})-absorbing", c.describe(q))
                    })
                });
            }
        }
    }
}

fn minimal_above(c: &RingCase, q: &ElementSet, member: impl Fn(&ElementSet) -> bool) -> Vec<ElementSet> {
    let family: Vec<ElementSet> = c
        .proper()
        .iter()
        .filter(|p| q.is_subset(p) && member(p))
        .copied()
        .collect();
    RingCase::minimal(&family)
}

fn minimal_existence(d: &Desk, scan: &mut Scan) {
    let qs = Desk::queries(d.spec.max_u);
    for c in &d.rings {
        for q in c.proper() {
            for &(u, v) in &qs {
                scan.visit(|| {
                    let mins = minimal_above(c, q, |p| c.holds(p, &plain(u, v)));
                    Outcome::check(!mins.is_empty(), || {
                        format!("{} ({u},{v}): no (u,v)-absorbing hyperideal contains Q", c.describe(q))
                    })
                });
            }
        }
    }
}

fn minimal_v_absorbing(d: &Desk, scan: &mut Scan) {
    for c in &d.rings {
        for q in c.proper() {
            for v in 1..d.spec.max_u {
                scan.visit(|| {
                    let mins = minimal_above(c, q, |p| c.is_v_absorbing(p, v));
                    Outcome::check(!mins.is_empty(), || {
                        format!("{} v={v}: no v-absorbing hyperideal contains Q", c.describe(q))
                    })
                });
            }
        }
    }
}

fn counting(d: &Desk, scan: &mut Scan) {
    let qs = Desk::queries(d.spec.max_u);
    for c in &d.rings {
        for q in c.proper() {
            let r = c.minimal_primes(q).len();
            for &(u, v) in &qs {
                for k in 2..u {
                    scan.visit(|| {
                        if k > r || r > u - 1 || !c.holds(q, &plain(u, v)) {
                            return Outcome::Skip;
                        }
                        let found = minimal_above(c, q, |p| c.is_v_absorbing(p, k)).len();
                        Outcome::check(found as u128 >= binomial(r, k), || {
                            format!(
                                "{} ({u},{v}) r={r} k={k}: {found} minimal k-absorbing, need {}",
                                c.describe(q),
                                binomial(r, k)
                            )
                        })
                    });
                }
            }
        }
    }
}

/// `v`-subsets of the prime C-hyperideals containing `Q` that are pairwise
/// incomparable, with the part of each member outside the others.
fn incomparable_prime_families(c: &RingCase, q: &ElementSet, v: usize) -> Vec<(Vec<ElementSet>, Vec<ElementSet>)> {
    let primes: Vec<ElementSet> = c.primes().filter(|p| q.is_subset(p) && c.is_c(p)).copied().collect();
    combinations(primes.len(), v)
        .map(|idx| idx.iter().map(|&i| primes[i]).collect::<Vec<_>>())
        .filter(|fam| {
            fam.iter()
                .enumerate()
                .all(|(i, a)| fam.iter().enumerate().all(|(j, b)| i == j || !a.is_subset(b)))
        })
        .map(|fam| {
            let own = private_parts(&fam);
            (fam, own)
        })
        .collect()
}

fn private_parts(fam: &[ElementSet]) -> Vec<ElementSet> {
    (0..fam.len())
        .map(|i| {
            fam.iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(fam[i], |acc, (_, other)| acc.difference(other))
        })
        .collect()
}

/// Every choice of one element from each set.
fn choices(sets: &[ElementSet]) -> Vec<Vec<usize>> {
    sets.iter().fold(vec![Vec::new()], |acc, s| {
        acc.iter()
            .flat_map(|prefix| {
                s.iter().map(move |x| {
                    let mut next = prefix.clone();
                    next.push(x);
                    next
                })
            })
            .collect()
    })
}

fn powers_lemma(d: &Desk, scan: &mut Scan) {
    let max_u = d.spec.max_u;
    for c in &d.rings {
        for q in c.proper() {
            for v in 1..max_u {
                if !absorbing_for_some_u(c, q, v, max_u) {
                    scan.visit(|| Outcome::Skip);
                    continue;
                }
                for (fam, own) in incomparable_prime_families(c, q, v) {
                    let exponents = choices(&vec![(1..=POWER_CAP).collect::<ElementSet>(); v]);
                    for xs in choices(&own) {
                        for ks in &exponents {
                            scan.visit(|| {
                                let seq: Vec<usize> = xs.iter().zip(ks).flat_map(|(&x, &k)| vec![x; k]).collect();
                                if !c.ring.product(&seq).is_subset(q) {
                                    return Outcome::Skip;
                                }
                                Outcome::check(c.ring.product(&xs).is_subset(q), || {
                                    let fam: Vec<String> = fam.iter().map(|p| p.to_string()).collect();
                                    format!(
                                        "{} v={v} primes {} x=({}) k=({})",
                                        c.describe(q),
                                        fam.join(" "),
                                        list(&xs),
                                        list(ks)
                                    )
                                })
                            });
                        }
                    }
                }
            }
        }
    }
}

/// The minimal primes over `Q` when they are exactly `v` C-hyperideals and
/// `Q` is a `(u,v)`-absorbing strong C-hyperideal for some `u`.
fn minprime_setting(c: &RingCase, q: &ElementSet, v: usize, max_u: usize) -> Option<Vec<ElementSet>> {
    if v < 2 || !c.is_strong_c(q) || !absorbing_for_some_u(c, q, v, max_u) {
        return None;
    }
    let mins = c.minimal_primes(q);
    (mins.len() == v && mins.iter().all(|p| c.is_c(p))).then_some(mins)
}

fn minprime_product(d: &Desk, scan: &mut Scan) {
    let max_u = d.spec.max_u;
    for c in &d.rings {
        for q in c.proper() {
            for v in 2..max_u {
                let Some(mins) = minprime_setting(c, q, v, max_u) else {
                    scan.visit(|| Outcome::Skip);
                    continue;
                };
                let own = private_parts(&mins);
                for zs in choices(&own) {
                    for j in 0..v {
                        scan.visit(|| {
                            let mut factors = vec![mins[j]];
                            factors.extend((0..v).filter(|&i| i != j).map(|i| ElementSet::singleton(zs[i])));
                            let prod = ideal_set_product(&c.ring, &factors);
                            Outcome::check(prod.is_subset(q), || {
                                format!("{} v={v} j={j} z=({}): product {prod}", c.describe(q), list(&zs))
                            })
                        });
                    }
                }
            }
        }
    }
}

fn pairwise_coprime(c: &RingCase, fam: &[ElementSet]) -> bool {
    fam.iter().enumerate().all(|(i, a)| {
        fam[i + 1..]
            .iter()
            .all(|b| crate::ideal::are_coprime(&c.ring, a, b))
    })
}

fn coprime_product(d: &Desk, scan: &mut Scan) {
    let max_u = d.spec.max_u;
    for c in &d.rings {
        for q in c.proper() {
            for v in 2..max_u {
                scan.visit(|| {
                    let Some(mins) = minprime_setting(c, q, v, max_u) else {
                        return Outcome::Skip;
                    };
                    let set_product = ideal_set_product(&c.ring, &mins);
                    let abs = abs_indices(&c.ring, q).ok().and_then(|a| a.abs_lower);
                    let equality = !pairwise_coprime(c, &mins) || ideal_product(&c.ring, &mins) == *q;
                    Outcome::check(set_product.is_subset(q) && abs == Some(v) && equality, || {
                        format!(
                            "{} v={v}: product {set_product}, abs {abs:?}, coprime equality {equality}",
                            c.describe(q)
                        )
                    })
                });
            }
        }
    }
}

fn radical_equiv(d: &Desk, scan: &mut Scan) {
    let qs = Desk::queries(d.spec.max_u);
    for c in &d.rings {
        for q in c.proper() {
            let radical_c = c.is_c(q) && c.radical(q) == *q;
            for &(u, v) in &qs {
                scan.visit(|| {
                    if !radical_c {
                        return Outcome::Skip;
                    }
                    let uv = c.holds(q, &plain(u, v));
                    let va = c.is_v_absorbing(q, v);
                    Outcome::check(uv == va, || {
                        format!("{} ({u},{v})-absorbing {uv}, {v}-absorbing {va}", c.describe(q))
                    })
                });
            }
        }
    }
}

fn abs_equals(d: &Desk, scan: &mut Scan) {
    let qs = Desk::queries(d.spec.max_u);
    for c in &d.rings {
        for q in c.proper() {
            scan.visit(|| {
                let hyp = c.is_c(q) && c.radical(q) == *q && qs.iter().any(|&(u, v)| c.holds(q, &plain(u, v)));
                if !hyp {
                    return Outcome::Skip;
                }
                match abs_indices(&c.ring, q) {
                    Ok(a) => Outcome::check(a.abs_upper.is_some() && a.abs_upper == a.abs_lower, || {
                        format!("{}: {a}", c.describe(q))
                    }),
                    Err(e) => Outcome::Fail(format!("{}: {e}", c.describe(q))),
                }
            });
        }
    }
}

fn primary_power(d: &Desk, scan: &mut Scan) {
    let max_u = d.spec.max_u;
    for c in &d.rings {
        for q in c.proper() {
            let rad = c.radical(q);
            let primary = c.is_c(q) && c.is_prime(&rad) && is_primary(&c.ring, q).unwrap_or(false);
            for v in 1..max_u {
                let covered = primary && set_power(&c.ring, &rad, v).is_subset(q);
                for u in v + 1..=max_u {
                    scan.visit(|| {
                        if !covered {
                            return Outcome::Skip;
                        }
                        Outcome::check(c.holds(q, &plain(u, v)), || {
                            format!("{} P={rad}: not ({u},{v})-absorbing", c.describe(q))
                        })
                    });
                }
            }
        }
    }
}

fn primary_power_abs(d: &Desk, scan: &mut Scan) {
    let max_u = d.spec.max_u;
    for c in &d.rings {
        for p in c.primes() {
            for v in 1..max_u {
                scan.visit(|| {
                    let pv = ideal_product(&c.ring, &vec![*p; v]);
                    let hyp = c.is_proper(&pv)
                        && c.is_c(&pv)
                        && c.radical(&pv) == *p
                        && is_primary(&c.ring, &pv).unwrap_or(false);
                    if !hyp {
                        return Outcome::Skip;
                    }
                    let failing_u = (v + 1..=max_u).find(|&u| !c.holds(&pv, &plain(u, v)));
                    let abs = abs_indices(&c.ring, &pv).ok().and_then(|a| a.abs_lower);
                    Outcome::check(failing_u.is_none() && abs == Some(v), || {
                        format!(
                            "{} P={p} v={v}: P^v = {pv}, first failing u {failing_u:?}, abs {abs:?}",
                            c.label
                        )
                    })
                });
            }
        }
    }
}

fn ab_matches_plain(d: &Desk, scan: &mut Scan, hyp: impl Fn(&RingCase, &ElementSet) -> bool) {
    let qs = Desk::queries(d.spec.max_u);
    for c in &d.rings {
        for q in c.proper() {
            let h = c.is_strong_c(q) && hyp(c, q);
            for &(u, v) in &qs {
                scan.visit(|| {
                    if !h {
                        return Outcome::Skip;
                    }
                    let a = c.holds(q, &ab(u, v));
                    let p = c.holds(q, &plain(u, v));
                    Outcome::check(a == p, || format!("{} ({u},{v}): AB {a}, plain {p}", c.describe(q)))
                });
            }
        }
    }
}

fn ab_equivalence(d: &Desk, scan: &mut Scan) {
    ab_matches_plain(d, scan, |c, q| {
        let one = c.ring.one().expect("desk rings have an identity");
        q.iter().any(|a| !c.ring.units().contains(c.ring.add(a, one)))
    });
}

fn jacobson_cor(d: &Desk, scan: &mut Scan) {
    ab_matches_plain(d, scan, |c, q| match jacobson(&c.ring, &c.ideals) {
        Ok(j) => !q.is_subset(&j),
        Err(_) => false,
    });
}

fn gamma_transfer(d: &Desk, scan: &mut Scan) {
    let qs = Desk::queries(d.spec.max_u);
    for c in &d.rings {
        let f = match fundamental_ring(&c.ring, &c.cache) {
            Ok(f) => f,
            Err(e) => {
                scan.visit(|| Outcome::Fail(format!("{}: {e}", c.label)));
                continue;
            }
        };
        for q in c.proper() {
            let image = f.image(q);
            let transferable = f.is_class_union(q) && image.len() < f.ring.order();
            for &(u, v) in &qs {
                scan.visit(|| {
                    if !transferable {
                        return Outcome::Skip;
                    }
                    let up = c.holds(q, &ab(u, v));
                    let down = holds_on(&f.ring, &image, ab(u, v));
                    Outcome::check(up == down, || {
                        format!("{} ({u},{v}): A {up}, A/γ* {down} (image {image})", c.describe(q))
                    })
                });
            }
        }
    }
}

fn product_ab(d: &Desk, scan: &mut Scan) {
    let qs = Desk::queries(d.spec.max_u);
    for p in &d.products {
        let (pc, a1, a2) = (&d.rings[p.index], d.base(p.left), d.base(p.right));
        for q1 in a1.proper() {
            let q = p.pair_set(q1, &a2.ring.carrier());
            for &(u, v) in &qs {
                scan.visit(|| {
                    let i = pc.holds(&q, &plain(u, v));
                    let ii = a1.holds(q1, &ab(u, v));
                    let iii = pc.holds(&q, &ab(u, v));
                    Outcome::check(i == ii && ii == iii, || {
                        format!("{} Q1={q1} ({u},{v}): (i) {i}, (ii) {ii}, (iii) {iii}", pc.label)
                    })
                });
            }
        }
    }
}

/// Visit every proper `Q` of every ring and every query, with a per-ideal
/// precondition and a per-query check that returns `None` when the
/// hypothesis fails.
fn scan_prime_queries(
    d: &Desk,
    scan: &mut Scan,
    pre: impl Fn(&RingCase, &ElementSet) -> bool,
    each: impl Fn(&RingCase, &ElementSet, usize, usize) -> Option<Result<(), String>>,
) {
    let qs = Desk::queries(d.spec.max_u);
    for c in &d.rings {
        for q in c.proper() {
            let ok = pre(c, q);
            for &(u, v) in &qs {
                scan.visit(|| {
                    if !ok {
                        return Outcome::Skip;
                    }
                    match each(c, q, u, v) {
                        None => Outcome::Skip,
                        Some(Ok(())) => Outcome::Pass,
                        Some(Err(w)) => Outcome::Fail(format!("{} ({u},{v}): {w}", c.describe(q))),
                    }
                });
            }
        }
    }
}

fn iff(a: bool, b: bool, names: (&str, &str)) -> Result<(), String> {
    if a == b {
        Ok(())
    } else {
        Err(format!("{} {a}, {} {b}", names.0, names.1))
    }
}

fn prime_shift(d: &Desk, scan: &mut Scan) {
    scan_prime_queries(
        d,
        scan,
        |c, q| !c.local && c.is_strong_c(q),
        |c, q, u, v| {
            (v >= 2).then(|| {
                iff(
                    c.holds(q, &prime(u, v)),
                    c.holds(q, &prime(u - 1, v - 1)),
                    ("(u,v)-prime", "(u-1,v-1)-prime"),
                )
            })
        },
    );
}

fn prime_symmetry(d: &Desk, scan: &mut Scan) {
    scan_prime_queries(
        d,
        scan,
        |c, q| c.is_c(q),
        |c, q, u, v| Some(iff(c.holds(q, &prime(u, v)), c.holds(q, &prime(u, u - v)), ("(u,v)-prime", "(u,u-v)-prime"))),
    );
}

fn prime_step(d: &Desk, scan: &mut Scan) {
    let max_u = d.spec.max_u;
    scan_prime_queries(
        d,
        scan,
        |c, q| c.is_c(q),
        |c, q, u, v| {
            if u + 1 > max_u || !c.holds(q, &prime(u, v)) {
                return None;
            }
            Some(if c.holds(q, &prime(u + 1, v + 1)) {
                Ok(())
            } else {
                Err("not (u+1,v+1)-prime".into())
            })
        },
    );
}

fn prime_reduce(d: &Desk, scan: &mut Scan) {
    for c in &d.rings {
        for q in c.proper() {
            let ok = !c.local && c.is_strong_c(q);
            for w in 2..=d.spec.max_u {
                scan.visit(|| {
                    if !ok {
                        return Outcome::Skip;
                    }
                    let a = c.holds(q, &prime(w, 1));
                    let b = c.is_prime(q);
                    Outcome::check(a == b, || format!("{} ({w},1)-prime {a}, prime {b}", c.describe(q)))
                });
            }
        }
    }
}

fn prime_collapse(d: &Desk, scan: &mut Scan) {
    scan_prime_queries(
        d,
        scan,
        |c, q| !c.local && c.is_strong_c(q),
        |c, q, u, v| Some(iff(c.holds(q, &prime(u, v)), c.is_prime(q), ("(u,v)-prime", "prime"))),
    );
}

fn product_prime(d: &Desk, scan: &mut Scan) {
    let qs = Desk::queries(d.spec.max_u);
    for p in &d.products {
        let (pc, a1, a2) = (&d.rings[p.index], d.base(p.left), d.base(p.right));
        for q1 in &a1.ideals {
            for q2 in &a2.ideals {
                let q = p.pair_set(q1, q2);
                let hyp = a1.is_strong_c(q1) && a2.is_strong_c(q2) && pc.is_proper(&q);
                let full1 = !a1.is_proper(q1);
                let full2 = !a2.is_proper(q2);
                for &(u, v) in &qs {
                    scan.visit(|| {
                        if !hyp {
                            return Outcome::Skip;
                        }
                        let i = pc.holds(&q, &prime(u, v));
                        let ii = pc.is_prime(&q);
                        let iii = (a1.is_prime(q1) && full2) || (a2.is_prime(q2) && full1);
                        Outcome::check(i == ii && ii == iii, || {
                            format!("{} Q1={q1} Q2={q2} ({u},{v}): (i) {i}, (ii) {ii}, (iii) {iii}", pc.label)
                        })
                    });
                }
            }
        }
    }
}

fn v_plus_one_local(d: &Desk, scan: &mut Scan) {
    for c in &d.rings {
        for q in c.proper() {
            let ok = c.is_strong_c(q);
            for v in 1..d.spec.max_u {
                scan.visit(|| {
                    if !ok {
                        return Outcome::Skip;
                    }
                    let lhs = c.holds(q, &prime(v + 1, v));
                    let local_power = c.local && set_power(&c.ring, &c.maximal[0], v).is_subset(q);
                    let rhs = c.is_prime(q) || local_power;
                    Outcome::check(lhs == rhs, || {
                        format!("{} v={v}: (v+1,v)-prime {lhs}, prime or local power {rhs}", c.describe(q))
                    })
                });
            }
        }
    }
}

fn containment_cor(d: &Desk, scan: &mut Scan) {
    let max_u = d.spec.max_u;
    for c in &d.rings {
        for q in c.proper() {
            for v in 1..max_u {
                let hyp = c.is_strong_c(q) && !c.is_prime(q) && c.holds(q, &prime(v + 1, v));
                for p in c.proper() {
                    for u in v + 1..=max_u {
                        scan.visit(|| {
                            if !hyp || !q.is_subset(p) {
                                return Outcome::Skip;
                            }
                            Outcome::check(c.holds(p, &prime(u, v)), || {
                                format!("{} v={v}: P={p} not ({u},{v})-prime", c.describe(q))
                            })
                        });
                    }
                }
            }
        }
    }
}

fn radical_prime(d: &Desk, scan: &mut Scan) {
    scan_prime_queries(
        d,
        scan,
        |c, q| c.is_strong_c(q),
        |c, q, u, v| {
            if !c.holds(q, &prime(u, v)) {
                return None;
            }
            let rad = c.radical(q);
            if !c.is_prime(&rad) {
                return Some(Err(format!("rad = {rad} is not prime")));
            }
            if c.is_prime(q) {
                return Some(Ok(()));
            }
            if !c.local {
                return Some(Err("Q is not prime and A is not local".into()));
            }
            if u == v + 1 && rad != c.maximal[0] {
                return Some(Err(format!("rad = {rad} differs from M = {}", c.maximal[0])));
            }
            Some(Ok(()))
        },
    );
}

fn hyperfield_lemma(d: &Desk, scan: &mut Scan) {
    for c in &d.rings {
        scan.visit(|| {
            if !c.proper().iter().all(|q| c.is_prime(q) && c.is_c(q)) {
                return Outcome::Skip;
            }
            let missing = (0..c.ring.order()).find(|&x| x != c.ring.zero() && !c.ring.units().contains(x));
            Outcome::check(missing.is_none(), || format!("{}: {missing:?} is not a unit", c.label))
        });
    }
}

fn local_nilpotent(d: &Desk, scan: &mut Scan) {
    for c in &d.rings {
        let hyp = c.ideals.iter().all(|q| c.is_strong_c(q));
        for v in 1..d.spec.max_u {
            scan.visit(|| {
                if !hyp {
                    return Outcome::Skip;
                }
                let lhs = c.proper().iter().all(|q| c.holds(q, &prime(v + 1, v)));
                let rhs = c.local && set_power(&c.ring, &c.maximal[0], v) == ElementSet::singleton(c.ring.zero());
                Outcome::check(lhs == rhs, || {
                    format!("{} v={v}: all (v+1,v)-prime {lhs}, local with M^v = 0 {rhs}", c.label)
                })
            });
        }
    }
}

fn ideal_form(d: &Desk, scan: &mut Scan) {
    let qs = Desk::queries(d.spec.max_u);
    for c in d.base_rings() {
        for q in c.proper() {
            for &(u, v) in &qs {
                scan.visit(|| {
                    let element = c.holds(q, &prime(u, v));
                    let ideal = ideal_product_prime_check(&c.ring, q, u, v, &c.ideals).expect("proper query");
                    Outcome::check(element == ideal.is_none(), || {
                        let seq: Vec<String> = ideal.iter().flatten().map(|i| i.to_string()).collect();
                        format!("{} ({u},{v}): element form {element}, ideal witness [{}]", c.describe(q), seq.join(" "))
                    })
                });
            }
        }
    }
}

fn colon_property(d: &Desk, scan: &mut Scan) {
    let qs = Desk::queries(d.spec.max_u);
    for c in &d.rings {
        for q in c.proper() {
            for &(u, v) in &qs {
                let hyp = v >= 2 && c.holds(q, &prime(u, v));
                for x in 0..c.ring.order() {
                    scan.visit(|| {
                        if !hyp || q.contains(x) || c.ring.units().contains(x) {
                            return Outcome::Skip;
                        }
                        let col = colon(&c.ring, q, x);
                        Outcome::check(c.is_proper(&col) && c.holds(&col, &prime(u - 1, v - 1)), || {
                            format!("{} ({u},{v}) x={x}: (Q:x) = {col}", c.describe(q))
                        })
                    });
                }
            }
        }
    }
}

fn matrix(d: &Desk, scan: &mut Scan) {
    let qs = Desk::queries(d.spec.matrix.max_u);
    for (label, base) in &d.matrix_bases {
        let m = match matrix_hyperring(base, DEFAULT_MATRIX_BUDGET) {
            Ok(m) => m,
            Err(e) => {
                scan.visit(|| Outcome::Fail(format!("M2({label}): {e}")));
                continue;
            }
        };
        let ideals = enumerate_hyperideals(base);
        for q in &ideals[..ideals.len() - 1] {
            let lifted = m.lift_ideal(q);
            for &(u, v) in &qs {
                scan.visit(|| {
                    if !holds_on(&m.ring, &lifted, prime(u, v)) {
                        return Outcome::Skip;
                    }
                    Outcome::check(holds_on(base, q, prime(u, v)), || {
                        format!("{label} Q={q} ({u},{v}): M2(Q) prime, Q not")
                    })
                });
            }
        }
    }
}

fn polynomial(d: &Desk, scan: &mut Scan) {
    let qs = Desk::queries(d.spec.max_u);
    for c in d.base_rings() {
        let ext = match monomial_extension(&c.ring, POLY_DEGREE) {
            Ok(e) => e,
            Err(e) => {
                scan.visit(|| Outcome::Fail(format!("{}[x]: {e}", c.label)));
                continue;
            }
        };
        for q in c.proper() {
            let lifted = ext.lift_ideal(q);
            for &(u, v) in &qs {
                scan.visit(|| {
                    if !c.holds(q, &prime(u, v)) {
                        return Outcome::Skip;
                    }
                    Outcome::check(holds_on(&ext, &lifted, prime(u, v)), || {
                        format!("{} ({u},{v}): Q[x] is not prime", c.describe(q))
                    })
                });
            }
        }
    }
}

struct Hom<'a> {
    label: String,
    source: &'a RingCase,
    target: Hyperring,
    target_ideals: Vec<ElementSet>,
    map: GoodHomomorphism,
}

impl Hom<'_> {
    fn unit_condition(&self) -> bool {
        self.map.unit_condition_violation(&self.source.ring, &self.target).is_none()
    }
}

/// Reductions `ℤ_{m,T} → ℤ_{d,T}`, quotient maps, the maps onto `A/γ*` and
/// first projections of products.
fn homomorphisms(d: &Desk) -> Vec<Hom<'_>> {
    fn push<'a>(
        out: &mut Vec<Hom<'a>>,
        label: String,
        source: &'a RingCase,
        target: Hyperring,
        map: crate::Result<GoodHomomorphism>,
    ) {
        if let Ok(map) = map {
            let target_ideals = enumerate_hyperideals(&target);
            out.push(Hom {
                label,
                source,
                target,
                target_ideals,
                map,
            });
        }
    }
    let mut out = Vec::new();
    for c in d.base_rings() {
        if let Some((m, t)) = &c.zmt {
            for div in (2..*m).filter(|k| m % k == 0) {
                let Ok(target) = build_zmt(div, t) else { continue };
                if target.has_identity() {
                    let map = GoodHomomorphism::reduction(&c.ring, &target);
                    push(&mut out, format!("{} -> Z_{div}", c.label), c, target, map);
                }
            }
        }
        for q1 in &c.proper()[1..] {
            if let Ok(quot) = quotient(&c.ring, q1) {
                if quot.is_well_defined() {
                    let map = GoodHomomorphism::quotient_map(&c.ring, &quot);
                    push(&mut out, format!("{} -> A/{q1}", c.label), c, quot.ring, map);
                }
            }
        }
        if let Ok(f) = fundamental_ring(&c.ring, &c.cache) {
            if f.ring.order() > 1 {
                let map = GoodHomomorphism::fundamental_map(&c.ring, &f);
                push(&mut out, format!("{} -> A/γ*", c.label), c, f.ring, map);
            }
        }
    }
    for p in &d.products {
        let (pc, a1) = (&d.rings[p.index], d.base(p.left));
        let map = (0..pc.ring.order()).map(|z| z / p.right_order).collect();
        let map = GoodHomomorphism::new(&pc.ring, &a1.ring, map);
        push(&mut out, format!("{} -> first factor", pc.label), pc, a1.ring.clone(), map);
    }
    out
}

fn hom_preimage(d: &Desk, scan: &mut Scan) {
    let qs = Desk::queries(d.spec.max_u);
    for h in homomorphisms(d) {
        let units_ok = h.unit_condition();
        for q2 in &h.target_ideals[..h.target_ideals.len() - 1] {
            for &(u, v) in &qs {
                scan.visit(|| {
                    if !units_ok || !holds_on(&h.target, q2, prime(u, v)) {
                        return Outcome::Skip;
                    }
                    let pre = h.map.preimage(q2);
                    Outcome::check(h.source.is_proper(&pre) && h.source.holds(&pre, &prime(u, v)), || {
                        format!("{} Q2={q2} ({u},{v}): preimage {pre}", h.label)
                    })
                });
            }
        }
    }
}

fn hom_image(d: &Desk, scan: &mut Scan) {
    let qs = Desk::queries(d.spec.max_u);
    for h in homomorphisms(d) {
        let hyp = h.unit_condition() && h.map.is_surjective(&h.target);
        let kernel = h.map.kernel(&h.target);
        for q1 in h.source.proper() {
            let ok = hyp && kernel.is_subset(q1) && h.source.is_c(q1);
            for &(u, v) in &qs {
                scan.visit(|| {
                    if !ok || !h.source.holds(q1, &prime(u, v)) {
                        return Outcome::Skip;
                    }
                    let image = h.map.image(q1);
                    Outcome::check(holds_on(&h.target, &image, prime(u, v)), || {
                        format!("{} Q1={q1} ({u},{v}): image {image}", h.label)
                    })
                });
            }
        }
    }
}

fn quotient_corollary(d: &Desk, scan: &mut Scan) {
    let qs = Desk::queries(d.spec.max_u);
    for c in d.base_rings() {
        for q1 in c.proper() {
            let Ok(quot) = quotient(&c.ring, q1) else { continue };
            let units = quot.ring.units();
            let hyp = quot.is_well_defined()
                && (0..c.ring.order())
                    .filter(|&x| !c.ring.units().contains(x))
                    .all(|x| !units.contains(quot.class_map()[x]));
            for q2 in c.proper() {
                let ok = hyp && q1.is_subset(q2) && c.is_c(q2);
                for &(u, v) in &qs {
                    scan.visit(|| {
                        if !ok {
                            return Outcome::Skip;
                        }
                        let up = c.holds(q2, &prime(u, v));
                        let image = quot.image(q2);
                        let down = holds_on(&quot.ring, &image, prime(u, v));
                        Outcome::check(up == down, || {
                            format!("{} Q1={q1} Q2={q2} ({u},{v}): A {up}, A/Q1 {down}", c.label)
                        })
                    });
                }
            }
        }
    }
}

fn strict_closure(ring: &Hyperring, seed: &ElementSet) -> ElementSet {
    let mut s = *seed;
    loop {
        let mut next = s;
        for a in &s {
            next.union_with(&ring.mul_set(a, &s));
        }
        if next == s {
            return s;
        }
        s = next;
    }
}

/// Candidate denominators: the closures of `{1}` and of the units, and the
/// complements of primes that are already closed.
fn denominator_sets(c: &RingCase) -> Vec<ElementSet> {
    let one = c.ring.one().expect("desk rings have an identity");
    let mut out = BTreeSet::new();
    out.insert(strict_closure(&c.ring, &ElementSet::singleton(one)));
    let mut units = *c.ring.units();
    units.insert(one);
    out.insert(strict_closure(&c.ring, &units));
    for p in c.primes() {
        let s = c.ring.carrier().difference(p);
        if strict_closure(&c.ring, &s) == s {
            out.insert(s);
        }
    }
    out.into_iter().filter(|s| !s.contains(c.ring.zero())).collect()
}

fn localization_property(d: &Desk, scan: &mut Scan) {
    let qs = Desk::queries(d.spec.max_u);
    for c in d.base_rings() {
        for s in denominator_sets(c) {
            let Ok(loc) = localization(&c.ring, &s, Closure::Strict) else { continue };
            let well_defined = loc.representative_defect().is_none();
            for q in c.proper() {
                let ok = well_defined && c.is_c(q) && !q.intersects(&s);
                let lq = loc.localize(q);
                for &(u, v) in &qs {
                    scan.visit(|| {
                        if !ok || v < 2 || !c.holds(q, &prime(u, v)) {
                            return Outcome::Skip;
                        }
                        Outcome::check(holds_on(&loc, &lq, prime(u - 1, v - 1)), || {
                            format!("{} S={s} ({u},{v}): S⁻¹Q = {lq} of {}", c.describe(q), loc.order())
                        })
                    });
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let ids: BTreeSet<&str> = registry().iter().map(|p| p.id).collect();
        assert_eq!(ids.len(), registry().len());
        assert!(registry().len() >= 27);
    }

    #[test]
    fn strict_closure_of_one_in_r6() {
        let r6 = build_zmt(6, &[1, 3]).unwrap();
        let s = strict_closure(&r6, &ElementSet::singleton(1));
        assert_eq!(s, [1, 3].into_iter().collect());
    }

    #[test]
    fn choices_enumerates_the_product() {
        let a: ElementSet = [1, 2].into_iter().collect();
        let b: ElementSet = [5].into_iter().collect();
        assert_eq!(choices(&[a, b]), vec![vec![1, 5], vec![2, 5]]);
        assert_eq!(choices(&[]), vec![Vec::<usize>::new()]);
    }
}
