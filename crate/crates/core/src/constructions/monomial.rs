use crate::element_set::{ElementSet, MAX_ORDER};
use crate::error::{Error, Result};
use crate::hyperring::{HyperStructure, Hyperring};

use super::MulTable;

/// Monomials `a·xᵈ` over a commutative base with `d ≤ D`, under
/// `t xⁿ ⋄ s xᵐ = (t ∘ s) xⁿ⁺ᵐ`. The monomial `a·xᵈ` is stored as
/// `d · |A| + a`.
///
/// The table is total: degrees past `D` are clamped to `D`. Membership in
/// `Q[x]` only looks at coefficients, so clamping never changes a predicate
/// verdict; [`MonomialExtension::product`] reports the true degree and
/// rejects overflow.
#[derive(Debug, Clone)]
pub struct MonomialExtension {
    table: MulTable,
    base_order: usize,
    max_degree: usize,
}

pub fn monomial_extension(base: &Hyperring, max_degree: usize) -> Result<MonomialExtension> {
    let b = base.order();
    let n = b * (max_degree + 1);
    if n > MAX_ORDER {
        return Err(Error::BudgetExceeded(format!(
            "{n} monomials of degree ≤ {max_degree} over a base of order {b}"
        )));
    }
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let d = (x / b + y / b).min(max_degree);
            mul.push(base.hyp_at(x % b, y % b).iter().map(|a| d * b + a).collect());
        }
    }
    Ok(MonomialExtension {
        table: MulTable::new(n, mul, base.one()),
        base_order: b,
        max_degree,
    })
}

impl MonomialExtension {
    pub fn monomial(&self, coefficient: usize, degree: usize) -> Result<usize> {
        if degree > self.max_degree {
            return Err(Error::DegreeOverflow(degree, self.max_degree));
        }
        Ok(degree * self.base_order + coefficient)
    }

    pub fn coefficient(&self, m: usize) -> usize {
        m % self.base_order
    }

    pub fn degree(&self, m: usize) -> usize {
        m / self.base_order
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// The product of a sequence as (coefficient set, degree).
    pub fn product(&self, seq: &[usize]) -> Result<(ElementSet, usize)> {
        let degree: usize = seq.iter().map(|&m| self.degree(m)).sum();
        if degree > self.max_degree {
            return Err(Error::DegreeOverflow(degree, self.max_degree));
        }
        let coefficients = self.table.product(seq).map(|m| m % self.base_order);
        Ok((coefficients, degree))
    }

    /// `Q[x]`: the monomials whose coefficient lies in `Q`.
    pub fn lift_ideal(&self, q: &ElementSet) -> ElementSet {
        (0..self.table.order())
            .filter(|&m| q.contains(self.coefficient(m)))
            .collect()
    }

    /// The degree-0 slice as a subset.
    pub fn constants(&self) -> ElementSet {
        (0..self.base_order).collect()
    }
}

impl HyperStructure for MonomialExtension {
    fn order(&self) -> usize {
        self.table.order()
    }

    fn mul(&self, x: usize, y: usize) -> &ElementSet {
        self.table.mul(x, y)
    }

    fn units(&self) -> &ElementSet {
        self.table.units()
    }

    fn is_commutative(&self) -> bool {
        self.table.is_commutative()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperring::build_zmt;

    #[test]
    fn rule_and_overflow() {
        let base = build_zmt(12, &[2, 4]).unwrap();
        let ext = monomial_extension(&base, 3).unwrap();
        let (x3, x5) = (ext.monomial(3, 1).unwrap(), ext.monomial(5, 1).unwrap());
        let (coeffs, degree) = ext.product(&[x3, x5]).unwrap();
        // 3·5·{2,4} mod 12.
        assert_eq!(coeffs, [6usize, 0].into_iter().collect());
        assert_eq!(degree, 2);
        assert_eq!(ext.product(&[x3, x5, x5, x5]), Err(Error::DegreeOverflow(4, 3)));
        assert_eq!(ext.monomial(1, 4), Err(Error::DegreeOverflow(4, 3)));
    }

    #[test]
    fn degree_zero_slice_is_the_base() {
        let base = build_zmt(6, &[1, 3]).unwrap();
        let ext = monomial_extension(&base, 2).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(*ext.mul(x, y), *base.hyp_at(x, y));
            }
        }
        assert_eq!(ext.units().to_vec(), vec![1, 5]);
        assert_eq!(ext.lift_ideal(&[0usize, 3].into_iter().collect()).len(), 6);
    }
}
