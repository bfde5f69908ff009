//! Invariants of the absorbing predicates on random grid rings, ideals and
//! queries.

use proptest::prelude::*;

use hyperideal::absorbing::{check, AbsorbingQuery, Kind};
use hyperideal::constructions::direct_product;
use hyperideal::ideal::{enumerate_hyperideals, is_prime};
use hyperideal::zt::{ZtContext, ZtKind};
use hyperideal::{build_zmt, ElementSet, HyperStructure, Hyperring};

/// A valid `ℤ_{m,{a,b}}` with `m ≤ 9`, one of its proper hyperideals, and
/// a query with `u ≤ 4`.
fn instance() -> impl Strategy<Value = (Hyperring, ElementSet, usize, usize)> {
    (prop::sample::select(vec![4usize, 6, 8, 9]), 1usize..9, 1usize..9, 0usize..64, 2usize..=4)
        .prop_filter_map("invalid ring", |(m, a, b, pick, u)| {
            let (a, b) = (a % m, b % m);
            let ring = build_zmt(m, &[a, b]).ok()?;
            let ideals = enumerate_hyperideals(&ring);
            let q = ideals[pick % (ideals.len() - 1)];
            Some((ring, q, u, 1 + pick % (u - 1)))
        })
}

fn holds(ring: &Hyperring, q: &ElementSet, kind: Kind, u: usize, v: usize) -> bool {
    check(ring, q, &AbsorbingQuery::new(u, v, kind).unwrap()).unwrap().holds
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ab_implies_plain((ring, q, u, v) in instance()) {
        if holds(&ring, &q, Kind::AB, u, v) {
            prop_assert!(holds(&ring, &q, Kind::Plain, u, v));
        }
    }

    #[test]
    fn plain_is_monotone((ring, q, u, v) in instance()) {
        if holds(&ring, &q, Kind::Plain, u, v) {
            prop_assert!(holds(&ring, &q, Kind::Plain, u + 1, v));
            prop_assert!(holds(&ring, &q, Kind::Plain, u + 1, v + 1));
        }
    }

    #[test]
    fn witnesses_replay((ring, q, u, v) in instance(), kind in prop::sample::select(vec![Kind::Plain, Kind::AB, Kind::Prime])) {
        let verdict = check(&ring, &q, &AbsorbingQuery::new(u, v, kind).unwrap()).unwrap();
        prop_assert_eq!(verdict.holds, verdict.witness.is_none());
        if let Some(w) = verdict.witness {
            prop_assert_eq!(w.tuple.len(), u);
            prop_assert_eq!(ring.product(&w.tuple), w.product);
            prop_assert!(w.product.is_subset(&q));
            if kind != Kind::AB {
                prop_assert!(w.tuple.iter().all(|&x| !ring.units().contains(x)));
            }
            for (sub, p) in &w.checked {
                prop_assert_eq!(&ring.product(sub), p);
                prop_assert!(!p.is_subset(&q));
            }
        }
    }

    #[test]
    fn primes_absorb_everything((ring, q, u, v) in instance()) {
        if is_prime(&ring, &q).unwrap() {
            prop_assert!(holds(&ring, &q, Kind::Plain, u, v));
            prop_assert!(holds(&ring, &q, Kind::Prime, u, v));
        }
    }

    #[test]
    fn product_with_full_factor((ring, q, u, v) in instance()) {
        prop_assume!(ring.order() <= 6 && ring.has_identity());
        let z2 = build_zmt(2, &[1]).unwrap();
        let p = direct_product(&ring, &z2).unwrap();
        let lifted = p.product_set(&q, &z2.carrier());
        prop_assert_eq!(
            holds(&p.ring, &lifted, Kind::AB, u, v),
            holds(&ring, &q, Kind::AB, u, v)
        );
    }

    #[test]
    fn zt_witnesses_replay(n in 2u64..40, t in prop::sample::select(vec![vec![2i64, 4], vec![1, 3], vec![2, 3]]), u in 2usize..=3, v in 1usize..3, prime in any::<bool>()) {
        prop_assume!(v < u);
        let z = ZtContext::new(&t, n).unwrap();
        let kind = if prime { ZtKind::Prime } else { ZtKind::Plain };
        let verdict = z.check(kind, u, v).unwrap();
        if let Some(w) = verdict.witness {
            let again = z.replay(kind, v, &w.tuple);
            prop_assert_eq!(again, Some(w));
        }
    }
}
