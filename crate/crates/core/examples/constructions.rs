//! Transport one predicate through each construction: direct products,
//! quotients, 2×2 hypermatrices, monomials and localization.
//!
//! ```text
//! cargo run --example constructions
//! ```

use hyperideal::absorbing::{check, AbsorbingQuery};
use hyperideal::constructions::{
    direct_product, localization, matrix_hyperring, monomial_extension, quotient, Closure, GoodHomomorphism,
    DEFAULT_MATRIX_BUDGET,
};
use hyperideal::{build_zmt, ElementSet, HyperStructure};

fn holds<S: HyperStructure + ?Sized>(s: &S, q: &ElementSet, query: &AbsorbingQuery) -> bool {
    check(s, q, query).map(|v| v.holds).unwrap_or(false)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ab21 = AbsorbingQuery::ab(2, 1)?;
    let ab32 = AbsorbingQuery::ab(3, 2)?;

    let z4 = build_zmt(4, &[1])?;
    let z6 = build_zmt(6, &[1, 5])?;
    let zero4 = ElementSet::singleton(0);
    let two4: ElementSet = [0, 2].into_iter().collect();

    let p = direct_product(&z4, &z6)?;
    let i_times_a = p.product_set(&zero4, &z6.carrier());
    println!(
        "ℤ_4 × ℤ_6 ({} elements): ⟨0⟩ × ℤ_6 is AB(3,2): {}, ⟨0⟩ in ℤ_4 is AB(3,2): {}",
        p.ring.order(),
        holds(&p.ring, &i_times_a, &ab32),
        holds(&z4, &zero4, &ab32)
    );

    let z8 = build_zmt(8, &[1])?;
    let q1: ElementSet = [0, 4].into_iter().collect();
    let q: ElementSet = [0, 2, 4, 6].into_iter().collect();
    let quo = quotient(&z8, &q1)?;
    let pi = GoodHomomorphism::quotient_map(&z8, &quo)?;
    println!(
        "ℤ_8 / ⟨4⟩ ({} classes): image of ⟨2⟩ = {}, AB(2,1) upstairs {} and downstairs {}",
        quo.ring.order(),
        quo.image(&q),
        holds(&z8, &q, &ab21),
        holds(&quo.ring, &pi.image(&q), &ab21)
    );

    let z2 = build_zmt(2, &[1])?;
    let m = matrix_hyperring(&z2, DEFAULT_MATRIX_BUDGET)?;
    let zero2 = ElementSet::singleton(0);
    let lifted = m.lift_ideal(&zero2);
    println!(
        "M_2(ℤ_2): {} matrices, M_2(⟨0⟩) has {} members, AB(2,1): {}",
        m.ring.order(),
        lifted.len(),
        holds(&m.ring, &lifted, &ab21)
    );

    let poly = monomial_extension(&z4, 2)?;
    let lifted = poly.lift_ideal(&two4);
    let x = poly.monomial(1, 1)?;
    println!(
        "ℤ_4 monomials up to degree {}: {} elements, x = {}, ⟨2⟩[x] is AB(2,1): {}",
        poly.max_degree(),
        poly.order(),
        x,
        holds(&poly, &lifted, &ab21)
    );

    let z12 = build_zmt(12, &[1, 5])?;
    let s: ElementSet = [1, 5, 7, 11].into_iter().collect();
    let loc = localization(&z12, &s, Closure::Strict)?;
    let local = loc.localize(&[0, 4, 8].into_iter().collect());
    println!(
        "ℤ_12 localized at the units: {} classes, S⁻¹⟨4⟩ = {}, AB(3,2): {}",
        loc.order(),
        local,
        holds(&loc, &local, &ab32)
    );
    Ok(())
}
