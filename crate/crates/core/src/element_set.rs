//! Fixed-width membership sets over a carrier `{0, .., order - 1}`.
//!
//! Every finite structure in this crate has at most [`MAX_ORDER`] elements, so
//! a subset fits in four machine words. Sets are `Copy` and all set algebra is
//! word-parallel.

use std::cmp::Ordering;
use std::fmt;

/// Largest carrier size an [`ElementSet`] can describe.
pub const MAX_ORDER: usize = 256;

const WORDS: usize = MAX_ORDER / 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet {
    words: [u64; WORDS],
}

impl ElementSet {
    pub const fn empty() -> Self {
        ElementSet { words: [0; WORDS] }
    }

    /// The whole carrier `{0, .., order - 1}`.
    pub fn full(order: usize) -> Self {
        assert!(order <= MAX_ORDER, "order {order} exceeds {MAX_ORDER}");
        let mut s = Self::empty();
        for (w, word) in s.words.iter_mut().enumerate() {
            let lo = w * 64;
            if order >= lo + 64 {
                *word = u64::MAX;
            } else if order > lo {
                *word = (1u64 << (order - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(x: usize) -> Self {
        let mut s = Self::empty();
        s.insert(x);
        s
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        debug_assert!(x < MAX_ORDER);
        self.words[x >> 6] |= 1u64 << (x & 63);
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.words[x >> 6] &= !(1u64 << (x & 63));
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < MAX_ORDER && self.words[x >> 6] & (1u64 << (x & 63)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        let mut out = *self;
        out.union_with(other);
        out
    }

    #[inline]
    pub fn union_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= *b;
        }
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(other.words.iter()) {
            *a &= *b;
        }
        out
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(other.words.iter()) {
            *a &= !*b;
        }
        out
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            word: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image of the set under an element map.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Self {
        self.iter().map(f).collect()
    }
}

pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word] = w & (w - 1);
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl IntoIterator for &ElementSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::empty();
        for x in iter {
            s.insert(x);
        }
        s
    }
}

/// Canonical order: by cardinality, then lexicographically on the ascending
/// member list.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_covers_exactly_the_carrier() {
        for order in [0, 1, 6, 63, 64, 65, 128, 200, 256] {
            let s = ElementSet::full(order);
            assert_eq!(s.len(), order);
            assert_eq!(s.to_vec(), (0..order).collect::<Vec<_>>());
        }
    }

    #[test]
    fn display_and_order() {
        let a: ElementSet = [3, 0].into_iter().collect();
        let b: ElementSet = [0, 2, 4].into_iter().collect();
        assert_eq!(a.to_string(), "{0,3}");
        assert!(a < b);
        let c: ElementSet = [0, 4].into_iter().collect();
        assert!(a < c);
        assert_eq!(ElementSet::empty().first(), None);
        assert_eq!(b.first(), Some(0));
    }

    proptest! {
        #[test]
        fn algebra_matches_btreeset(xs in prop::collection::btree_set(0usize..256, 0..40),
                                    ys in prop::collection::btree_set(0usize..256, 0..40)) {
            let a: ElementSet = xs.iter().copied().collect();
            let b: ElementSet = ys.iter().copied().collect();
            let u: Vec<_> = xs.union(&ys).copied().collect();
            let i: Vec<_> = xs.intersection(&ys).copied().collect();
            let d: Vec<_> = xs.difference(&ys).copied().collect();
            prop_assert_eq!(a.union(&b).to_vec(), u);
            prop_assert_eq!(a.intersection(&b).to_vec(), i.clone());
            prop_assert_eq!(a.difference(&b).to_vec(), d);
            prop_assert_eq!(a.is_subset(&b), xs.is_subset(&ys));
            prop_assert_eq!(a.intersects(&b), !i.is_empty());
            prop_assert_eq!(a.len(), xs.len());
        }
    }
}
