use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::hyperring::Hyperring;
use crate::ideal::is_hyperideal;

/// `A / Q₁`: the additive cosets of `Q₁` with
/// `(x + Q₁) ∘ (y + Q₁) = {z + Q₁ : z ∈ x ∘ y}`, computed on the least
/// representatives. Whether other representatives give the same set is
/// checked; the first pair that does not is kept in `representative_defect`.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    pub ring: Hyperring,
    classes: Vec<ElementSet>,
    class_of: Vec<usize>,
    representative_defect: Option<(usize, usize)>,
}

pub fn quotient(base: &Hyperring, q1: &ElementSet) -> Result<QuotientRing> {
    if !is_hyperideal(base, q1) {
        return Err(Error::NotAHyperideal(q1.to_string()));
    }
    let n = base.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<ElementSet> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let coset: ElementSet = q1.iter().map(|q| base.add(x, q)).collect();
        for y in &coset {
            class_of[y] = classes.len();
        }
        classes.push(coset);
    }
    let k = classes.len();
    let image = |s: &ElementSet| -> ElementSet { s.iter().map(|z| class_of[z]).collect() };
    let reps: Vec<usize> = classes.iter().map(|c| c.first().unwrap()).collect();
    let mut add = Vec::with_capacity(k * k);
    let mut hyp = Vec::with_capacity(k * k);
    let mut representative_defect = None;
    for i in 0..k {
        for j in 0..k {
            add.push(class_of[base.add(reps[i], reps[j])]);
            let prod = image(base.hyp_at(reps[i], reps[j]));
            if representative_defect.is_none() {
                let differs = classes[i]
                    .iter()
                    .any(|x| classes[j].iter().any(|y| image(base.hyp_at(x, y)) != prod));
                if differs {
                    representative_defect = Some((reps[i], reps[j]));
                }
            }
            hyp.push(prod);
        }
    }
    let mut ring = Hyperring::assemble(k, add, hyp)?;
    if let Some(one) = base.one() {
        if ring.identity_elements().contains(class_of[one]) {
            ring = ring.with_identity(class_of[one])?;
        }
    }
    Ok(QuotientRing {
        ring,
        classes,
        class_of,
        representative_defect,
    })
}

impl QuotientRing {
    /// Cosets, ordered by least member.
    pub fn classes(&self) -> &[ElementSet] {
        &self.classes
    }

    /// The quotient map as a table.
    pub fn class_map(&self) -> &[usize] {
        &self.class_of
    }

    pub fn representative_defect(&self) -> Option<(usize, usize)> {
        self.representative_defect
    }

    /// Well defined and satisfying every axiom.
    pub fn is_well_defined(&self) -> bool {
        self.representative_defect.is_none() && self.ring.is_valid()
    }

    /// `Q₂ / Q₁` as a subset of the quotient.
    pub fn image(&self, s: &ElementSet) -> ElementSet {
        s.iter().map(|x| self.class_of[x]).collect()
    }

    /// The union of the cosets in a quotient subset.
    pub fn preimage(&self, s: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty();
        for c in s {
            out.union_with(&self.classes[c]);
        }
        out
    }
}
