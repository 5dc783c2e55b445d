//! Fixed-width bitsets over module element indices.
//!
//! Every module in the workbench has at most [`MAX_ELEMS`] elements, so a
//! subset of a module fits in four machine words.

/// Hard cap on module size. Operations that would construct a larger module
/// return a size-guard error instead.
pub const MAX_ELEMS: usize = 256;

const WORDS: usize = MAX_ELEMS / 64;

/// A subset of `0..256`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet([u64; WORDS]);

impl ElemSet {
    pub fn empty() -> Self {
        ElemSet([0; WORDS])
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty();
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn singleton(i: usize) -> Self {
        let mut s = Self::empty();
        s.insert(i);
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a |= b;
        }
        out
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= b;
        }
        out
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_ELEMS).filter(move |&i| self.contains(i))
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut a = ElemSet::empty();
        a.insert(3);
        a.insert(200);
        assert!(a.contains(3) && a.contains(200) && !a.contains(4));
        assert_eq!(a.len(), 2);
        let b = ElemSet::singleton(3);
        assert!(b.is_subset(&a));
        assert_eq!(a.intersect(&b), b);
        assert_eq!(a.union(&b), a);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![3, 200]);
    }
}
