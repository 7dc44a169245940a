use std::fmt;
use std::sync::Arc;

use crate::error::RelError;

/// Largest supported carrier size. A subset of the carrier fits in one machine word.
pub const MAX_UNIVERSE: usize = 16;

/// An ordered list of distinct element labels. Index `i` names the `i`-th label.
///
/// Cloning is cheap; the label list is shared.
#[derive(Clone)]
pub struct Universe {
    names: Arc<[String]>,
}

impl Universe {
    pub fn new<I, S>(names: I) -> Result<Self, RelError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_UNIVERSE {
            return Err(RelError::UniverseTooLarge(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(RelError::DuplicateLabel(name.clone()));
            }
        }
        Ok(Self { names: names.into() })
    }

    /// The universe `{e0, .., e(n-1)}`, or `{a, b, c, ..}` for `n <= 26`.
    pub fn of_size(n: usize) -> Result<Self, RelError> {
        if n > MAX_UNIVERSE {
            return Err(RelError::UniverseTooLarge(n));
        }
        Self::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, label: &str) -> Result<usize, RelError> {
        self.names
            .iter()
            .position(|n| n == label)
            .ok_or_else(|| RelError::UnknownLabel(label.to_string()))
    }

    /// Number of subsets of the carrier, `2^n`.
    pub fn subset_count(&self) -> usize {
        1usize << self.len()
    }

    /// The full carrier as a state set.
    pub fn full_set(&self) -> StateSet {
        StateSet(((1u64 << self.len()) - 1) as u32)
    }

    pub fn state_set<'a, I>(&self, labels: I) -> Result<StateSet, RelError>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut set = StateSet::EMPTY;
        for label in labels {
            set = set.with(self.index_of(label)?);
        }
        Ok(set)
    }

    pub(crate) fn same_as(&self, other: &Universe) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Universe {}

impl std::hash::Hash for Universe {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.names.hash(state)
    }
}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

/// A subset of the universe, one bit per element index.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateSet(pub(crate) u32);

impl StateSet {
    pub const EMPTY: StateSet = StateSet(0);

    pub fn from_bits(bits: u32) -> Self {
        StateSet(bits)
    }

    pub fn singleton(index: usize) -> Self {
        StateSet(1 << index)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, index: usize) -> bool {
        self.0 >> index & 1 == 1
    }

    pub fn with(self, index: usize) -> Self {
        StateSet(self.0 | 1 << index)
    }

    pub fn union(self, other: StateSet) -> Self {
        StateSet(self.0 | other.0)
    }

    pub fn intersection(self, other: StateSet) -> Self {
        StateSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: StateSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Element indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    pub fn fits(self, universe: &Universe) -> bool {
        (self.0 as u64) >> universe.len() == 0
    }

    pub fn labels(self, universe: &Universe) -> Vec<String> {
        self.iter().map(|i| universe.name(i).to_string()).collect()
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_indices() {
        let u = Universe::new(["a", "b"]).unwrap();
        assert_eq!(u.len(), 2);
        assert_eq!(u.index_of("a").unwrap(), 0);
        assert_eq!(u.index_of("b").unwrap(), 1);
    }

    #[test]
    fn empty_carrier() {
        let u = Universe::new(Vec::<String>::new()).unwrap();
        assert_eq!(u.len(), 0);
        assert_eq!(u.subset_count(), 1);
        assert_eq!(u.full_set(), StateSet::EMPTY);
    }

    #[test]
    fn rejects_duplicates_and_overflow() {
        assert_eq!(
            Universe::new(["a", "a"]).unwrap_err(),
            RelError::DuplicateLabel("a".into())
        );
        let many: Vec<String> = (0..17).map(|i| format!("e{i}")).collect();
        assert_eq!(Universe::new(many).unwrap_err(), RelError::UniverseTooLarge(17));
        assert!(Universe::of_size(16).is_ok());
    }

    #[test]
    fn state_set_iteration_is_ascending() {
        let s = StateSet::from_bits(0b1011);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 1, 3]);
        assert_eq!(s.len(), 3);
        assert!(StateSet::from_bits(0b0011).is_subset(s));
    }
}
