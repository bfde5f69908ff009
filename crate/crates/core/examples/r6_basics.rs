//! Build `ℤ_{6,{1,3}}`, print its multiplication table and classify every
//! hyperideal.
//!
//! ```text
//! cargo run --example r6_basics
//! ```

use hyperideal::ideal::{enumerate_hyperideals, is_local, is_maximal, is_primary, is_prime, radical, CClassCache};
use hyperideal::{build_zmt, HyperStructure};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = build_zmt(6, &[1, 3])?;
    println!("ℤ_6 with T = {{1,3}}: a ∘ b = {{a·b, 3·a·b}} mod 6");
    for x in 0..ring.order() {
        let row: Vec<String> = (0..ring.order()).map(|y| format!("{:>9}", ring.mul(x, y).to_string())).collect();
        println!("  {x} | {}", row.join(""));
    }
    println!("units: {}  identity: {:?}", ring.units(), ring.one());

    let ideals = enumerate_hyperideals(&ring);
    let cache = CClassCache::new(&ring);
    println!("{} hyperideals, local: {}", ideals.len(), is_local(&ring, &ideals));
    for q in ideals.iter().filter(|q| q.len() < ring.order()) {
        let rad = radical(&ring, &ideals, q);
        println!(
            "  Q = {:<10} prime {:<5} primary {:<5} maximal {:<5} C {:<5} strong C {:<5} √Q = {}",
            q.to_string(),
            is_prime(&ring, q)?,
            is_primary(&ring, q)?,
            is_maximal(&ring, &ideals, q)?,
            cache.is_c_hyperideal(q),
            cache.is_strong_c_hyperideal(q),
            rad.members,
        );
    }
    Ok(())
}
