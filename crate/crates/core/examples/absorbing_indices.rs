//! Decide the absorbing predicates for every proper hyperideal of a few
//! small rings and compute `Abs(Q)` and `abs(Q)`.
//!
//! ```text
//! cargo run --example absorbing_indices
//! ```

use hyperideal::absorbing::{abs_indices, check, is_v_absorbing, AbsorbingQuery, Kind};
use hyperideal::ideal::{enumerate_hyperideals, ideal_product};
use hyperideal::{build_zmt, ElementSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (m, t) in [(8, vec![1]), (12, vec![1, 5]), (9, vec![2])] {
        let ring = build_zmt(m, &t)?;
        println!("ℤ_{m} with T = {t:?}");
        for q in enumerate_hyperideals(&ring).into_iter().filter(|q| q.len() < m) {
            let mut line = format!("  Q = {:<16}", q.to_string());
            for (u, v) in [(2, 1), (3, 2), (3, 1)] {
                for kind in [Kind::Plain, Kind::AB, Kind::Prime] {
                    let verdict = check(&ring, &q, &AbsorbingQuery::new(u, v, kind)?)?;
                    if verdict.holds {
                        line.push_str(&format!(" {}({u},{v})", kind.label()));
                    }
                }
            }
            println!("{line}");
            println!("      {}", abs_indices(&ring, &q)?);
        }
    }

    // In ℤ_4 the powers of (2) stop shrinking at the second, so the
    // absorbing index stops growing with them.
    let z4 = build_zmt(4, &[1])?;
    let p: ElementSet = [0, 2].into_iter().collect();
    for k in 1..=3 {
        let pk = ideal_product(&z4, &vec![p; k]);
        let v = (1..=4).find(|&v| is_v_absorbing(&z4, &pk, v, false).map(|r| r.holds).unwrap_or(false));
        println!("ℤ_4: P^{k} = {pk}, least v with P^{k} v-absorbing: {v:?}");
    }

    let verdict = check(&build_zmt(8, &[1])?, &ElementSet::singleton(0), &AbsorbingQuery::plain(3, 2)?)?;
    if let Some(w) = verdict.witness {
        print!("⟨0⟩ in ℤ_8 is not (3,2)-absorbing:\n{w}");
    }
    Ok(())
}
