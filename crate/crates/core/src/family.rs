//! Sets of state sets, stored as a bitset over the `2^n` subsets of the universe.

use smallvec::{smallvec, SmallVec};

use crate::universe::StateSet;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Family {
    words: SmallVec<[u64; 1]>,
}

/// Number of 64-bit words needed for a family over `n` elements.
pub(crate) fn family_words(n: usize) -> usize {
    (1usize << n).div_ceil(64)
}

/// Mask of the valid bits in a single-word family (`n < 6`).
pub(crate) fn small_mask(n: usize) -> u64 {
    let width = 1u32 << n;
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

impl Family {
    pub(crate) fn empty(n: usize) -> Self {
        Family { words: smallvec![0; family_words(n)] }
    }

    pub(crate) fn full(n: usize) -> Self {
        let mut words: SmallVec<[u64; 1]> = smallvec![u64::MAX; family_words(n)];
        if n < 6 {
            words[0] = small_mask(n);
        }
        Family { words }
    }

    /// `{∅}`.
    pub(crate) fn unit(n: usize) -> Self {
        let mut f = Family::empty(n);
        f.words[0] = 1;
        f
    }

    pub(crate) fn from_words(words: SmallVec<[u64; 1]>) -> Self {
        Family { words }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub(crate) fn contains(&self, set: StateSet) -> bool {
        let i = set.0 as usize;
        self.words.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    pub(crate) fn insert(&mut self, set: StateSet) {
        let i = set.0 as usize;
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = StateSet> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(StateSet((wi * 64 + b) as u32))
                }
            })
        })
    }

    pub(crate) fn or_assign(&mut self, other: &Family) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub(crate) fn and_assign(&mut self, other: &Family) {
        for (i, a) in self.words.iter_mut().enumerate() {
            *a &= other.words.get(i).copied().unwrap_or(0);
        }
    }

    /// `{ A ∪ C : A ∈ self, C ∈ other }` over a universe of `n` elements.
    pub(crate) fn join_all(&self, other: &Family, n: usize) -> Family {
        let mut out = Family::empty(n);
        if n <= 6 {
            let (mut left, right) = (self.words[0], other.words[0]);
            let mut acc = 0u64;
            while left != 0 {
                let a = left.trailing_zeros();
                left &= left - 1;
                let mut r = right;
                while r != 0 {
                    let c = r.trailing_zeros();
                    r &= r - 1;
                    acc |= 1 << (a | c);
                }
            }
            out.words[0] = acc;
        } else {
            for a in self.iter() {
                for c in other.iter() {
                    out.insert(a.union(c));
                }
            }
        }
        out
    }

    /// Smallest superset family closed under enlarging members.
    pub(crate) fn up_closed(&self, n: usize) -> Family {
        let full = (1u32 << n) - 1;
        let mut out = self.clone();
        for a in self.iter() {
            let free = full & !a.0;
            // enumerate all subsets of `free`
            let mut sub = free;
            loop {
                out.insert(StateSet(a.0 | sub));
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & free;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_all_small_and_large_agree() {
        for n in [2usize, 6, 7] {
            let mut f = Family::empty(n);
            f.insert(StateSet(0b01));
            f.insert(StateSet(0b10));
            let joined = f.join_all(&f, n);
            let got: Vec<u32> = joined.iter().map(|s| s.0).collect();
            assert_eq!(got, vec![0b01, 0b10, 0b11], "n={n}");
        }
    }

    #[test]
    fn full_family_has_all_subsets() {
        assert_eq!(Family::full(2).iter().count(), 4);
        assert_eq!(Family::full(7).iter().count(), 128);
        assert!(Family::empty(3).is_empty());
    }

    #[test]
    fn up_closure_adds_supersets() {
        let mut f = Family::empty(2);
        f.insert(StateSet(0b01));
        let up: Vec<u32> = f.up_closed(2).iter().map(|s| s.0).collect();
        assert_eq!(up, vec![0b01, 0b11]);
    }
}
