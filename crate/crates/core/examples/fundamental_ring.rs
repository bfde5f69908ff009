//! The fundamental ring `A / γ*` of a hyperring, the C and strong C
//! hyperideals, and how an absorbing predicate passes to the image.
//!
//! ```text
//! cargo run --example fundamental_ring
//! ```

use hyperideal::absorbing::{check, AbsorbingQuery};
use hyperideal::constructions::{fundamental_ring, GoodHomomorphism};
use hyperideal::ideal::{enumerate_hyperideals, CClassCache};
use hyperideal::build_zmt;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (m, t) in [(6, vec![1, 3]), (12, vec![1, 5]), (8, vec![3])] {
        let ring = build_zmt(m, &t)?;
        let cache = CClassCache::new(&ring);
        let f = fundamental_ring(&ring, &cache)?;
        let phi = GoodHomomorphism::fundamental_map(&ring, &f)?;
        let classes: Vec<String> = f.classes().iter().map(|c| c.to_string()).collect();
        println!("ℤ_{m} with T = {t:?}: γ*(0) = {}, classes {}", cache.gamma_zero(), classes.join(" "));

        let query = AbsorbingQuery::plain(3, 2)?;
        for q in enumerate_hyperideals(&ring).into_iter().filter(|q| q.len() < m) {
            let image = phi.image(&q);
            let below = check(&ring, &q, &query)?.holds;
            let above = if image.len() < f.ring.order() {
                check(&f.ring, &image, &query)?.holds.to_string()
            } else {
                "improper".to_string()
            };
            println!(
                "  Q = {:<14} C {:<5} strong C {:<5} (3,2) {:<5} image {:<8} (3,2) {}",
                q.to_string(),
                cache.is_c_hyperideal(&q),
                cache.is_strong_c_hyperideal(&q),
                below,
                image.to_string(),
                above
            );
        }
    }
    Ok(())
}
