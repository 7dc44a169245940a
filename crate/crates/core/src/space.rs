//! Enumeration and seeded sampling of multirelations, globally or within one
//! of the subclasses.
//!
//! Classes are generated row by row (each source independently picks a
//! target family from the class's per-row options), which keeps the search
//! spaces small: `2^n` subidentities against `2^(n·2^n)` multirelations.
//! Generated members are cross-checked against [`is_in_class`] in tests.
//!
//! [`is_in_class`]: crate::structure::is_in_class

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smallvec::smallvec;
use thiserror::Error;

use crate::family::{small_mask, Family};
use crate::relation::MultiRelation;
use crate::structure::ClassTag;
use crate::universe::{StateSet, Universe};

/// Default seed for every randomized mode.
pub const DEFAULT_SEED: u64 = 42;

/// Largest universe for which classes can be enumerated or sampled.
pub const MAX_SEARCH_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

impl SearchMode {
    pub fn sampled(samples: usize) -> Self {
        SearchMode::Sampled { samples, seed: DEFAULT_SEED }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("exhaustive search over {size} candidates exceeds the limit of {limit}")]
    TooLarge { size: u128, limit: u128 },
    #[error("search over universes larger than {max} elements is not supported (got {n})")]
    UniverseTooLarge { n: usize, max: usize },
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The members of one class over a fixed universe, addressable by index.
#[derive(Clone, Debug)]
pub struct ClassSpace {
    universe: Universe,
    tag: ClassTag,
    /// Per-source target families, when the class is enumerated row-wise.
    options: Option<Vec<Vec<Family>>>,
}

impl ClassSpace {
    pub fn new(universe: &Universe, tag: ClassTag) -> Result<Self, SpaceError> {
        let n = universe.len();
        if n > MAX_SEARCH_N {
            return Err(SpaceError::UniverseTooLarge { n, max: MAX_SEARCH_N });
        }
        let options = match tag {
            ClassTag::General => None,
            ClassTag::UpClosed | ClassTag::Nonterminal if n > 4 => None,
            _ => Some((0..n).map(|a| row_options(tag, n, a)).collect()),
        };
        Ok(ClassSpace { universe: universe.clone(), tag, options })
    }

    pub fn tag(&self) -> ClassTag {
        self.tag
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Number of members; saturates at `u128::MAX`.
    pub fn size(&self) -> u128 {
        let n = self.universe.len();
        match (&self.options, self.tag) {
            (Some(opts), _) => opts
                .iter()
                .try_fold(1u128, |acc, o| acc.checked_mul(o.len() as u128))
                .unwrap_or(u128::MAX),
            (None, ClassTag::General) => {
                let bits = (n << n) as u32;
                1u128.checked_shl(bits).unwrap_or(u128::MAX)
            }
            // row families over more than 4 elements are not tabulated
            (None, _) => u128::MAX,
        }
    }

    /// The `index`-th member in canonical enumeration order. Requires `index < size()`.
    pub fn nth(&self, index: u64) -> MultiRelation {
        let n = self.universe.len();
        match &self.options {
            None => {
                assert!(n <= 4, "general multirelations are indexed only for n <= 4");
                MultiRelation::from_code(&self.universe, index)
            }
            Some(opts) => {
                // mixed radix, last source varies fastest
                let mut rest = index;
                let mut rows = vec![Family::empty(n); n];
                for a in (0..n).rev() {
                    let base = opts[a].len() as u64;
                    rows[a] = opts[a][(rest % base) as usize].clone();
                    rest /= base;
                }
                MultiRelation::from_rows(&self.universe, &rows)
            }
        }
    }

    pub fn iter(&self) -> Result<impl Iterator<Item = MultiRelation> + '_, SpaceError> {
        let size = self.size();
        if size > u64::MAX as u128 || (self.options.is_none() && self.universe.len() > 4) {
            return Err(SpaceError::TooLarge { size, limit: u64::MAX as u128 });
        }
        Ok((0..size as u64).map(move |i| self.nth(i)))
    }

    /// A random member. Row densities vary per draw so that both sparse and
    /// dense multirelations turn up.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> MultiRelation {
        let n = self.universe.len();
        match (&self.options, self.tag) {
            (Some(opts), _) => {
                let rows: Vec<Family> =
                    opts.iter().map(|o| o[rng.random_range(0..o.len())].clone()).collect();
                MultiRelation::from_rows(&self.universe, &rows)
            }
            (None, ClassTag::UpClosed) => {
                let rows: Vec<Family> =
                    (0..n).map(|_| random_family(n, rng).up_closed(n)).collect();
                MultiRelation::from_rows(&self.universe, &rows)
            }
            (None, ClassTag::Nonterminal) => {
                let mut rows: Vec<Family> = (0..n).map(|_| random_family(n, rng)).collect();
                for row in &mut rows {
                    let mut words: smallvec::SmallVec<[u64; 1]> = row.words().into();
                    words[0] &= !1;
                    *row = Family::from_words(words);
                }
                MultiRelation::from_rows(&self.universe, &rows)
            }
            (None, _) => random_relation(&self.universe, rng),
        }
    }
}

fn random_family<R: Rng>(n: usize, rng: &mut R) -> Family {
    // density 1/2^k for k in 0..=3, then a random word under that density
    let k = rng.random_range(0..4u32);
    let mut word: u64 = rng.random();
    for _ in 0..k {
        word &= rng.random::<u64>();
    }
    Family::from_words(smallvec![word & small_mask(n)])
}

/// A random multirelation over a universe of at most six elements.
/// Each row gets its own density and a quarter of the rows are left empty.
pub fn random_relation<R: Rng>(universe: &Universe, rng: &mut R) -> MultiRelation {
    let n = universe.len();
    let rows: Vec<Family> = (0..n)
        .map(|_| {
            if rng.random_range(0..4u32) == 0 {
                Family::empty(n)
            } else {
                random_family(n, rng)
            }
        })
        .collect();
    MultiRelation::from_rows(universe, &rows)
}

/// All target families the source `a` may have within a class.
fn row_options(tag: ClassTag, n: usize, a: usize) -> Vec<Family> {
    let empty = Family::empty(n);
    let single = |set: StateSet| {
        let mut f = Family::empty(n);
        f.insert(set);
        f
    };
    match tag {
        ClassTag::SeqSubid => vec![empty, single(StateSet::singleton(a))],
        ClassTag::Terminal => vec![empty, single(StateSet::EMPTY)],
        ClassTag::Vector => vec![empty, Family::full(n)],
        ClassTag::Nonterminal => {
            // any family avoiding ∅
            let count = 1u64 << ((1u32 << n) - 1);
            (0..count)
                .map(|m| Family::from_words(smallvec![m << 1]))
                .collect()
        }
        ClassTag::UpClosed => {
            let count = 1u64 << (1u32 << n);
            (0..count)
                .map(|m| Family::from_words(smallvec![m]))
                .filter(|f| &f.up_closed(n) == f)
                .collect()
        }
        ClassTag::General => unreachable!("general class is indexed by code"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::is_in_class;

    #[test]
    fn class_sizes() {
        let u = Universe::of_size(2).unwrap();
        let size = |t| ClassSpace::new(&u, t).unwrap().size();
        assert_eq!(size(ClassTag::General), 256);
        assert_eq!(size(ClassTag::SeqSubid), 4);
        assert_eq!(size(ClassTag::Terminal), 4);
        assert_eq!(size(ClassTag::Vector), 4);
        assert_eq!(size(ClassTag::Nonterminal), 64);
        // upsets of a 4-element boolean lattice: 6 per row
        assert_eq!(size(ClassTag::UpClosed), 36);
    }

    #[test]
    fn enumerated_members_satisfy_their_class() {
        for n in 0..=2 {
            let u = Universe::of_size(n).unwrap();
            for tag in ClassTag::ALL {
                let space = ClassSpace::new(&u, tag).unwrap();
                let members: Vec<_> = space.iter().unwrap().collect();
                assert_eq!(members.len() as u128, space.size());
                for m in &members {
                    assert!(is_in_class(m, tag), "{tag} {m}");
                }
                let mut dedup = members.clone();
                dedup.sort_by_key(|m| m.code());
                dedup.dedup();
                assert_eq!(dedup.len(), members.len());
                // every class member is enumerated
                let all = ClassSpace::new(&u, ClassTag::General).unwrap();
                let count = all.iter().unwrap().filter(|r| is_in_class(r, tag)).count();
                assert_eq!(count, members.len(), "{tag} n={n}");
            }
        }
    }

    #[test]
    fn samples_satisfy_their_class() {
        let mut rng = rng_from_seed(DEFAULT_SEED);
        for n in [3, 5] {
            let u = Universe::of_size(n).unwrap();
            for tag in ClassTag::ALL {
                let space = ClassSpace::new(&u, tag).unwrap();
                for _ in 0..50 {
                    assert!(is_in_class(&space.sample(&mut rng), tag));
                }
            }
        }
    }

    #[test]
    fn too_large() {
        let u = Universe::of_size(5).unwrap();
        assert!(ClassSpace::new(&u, ClassTag::General).unwrap().iter().is_err());
        let u = Universe::of_size(7).unwrap();
        assert!(ClassSpace::new(&u, ClassTag::General).is_err());
    }
}
