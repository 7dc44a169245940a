//! Least and greatest fixpoints by Kleene iteration, the star/omega family
//! built on them, indexed powers, and the three termination predicates.
//!
//! The lattice of multirelations over `n` elements has height `n·2^n`, so an
//! isotone functional stabilises within `n·2^n + 1` applications whether or
//! not it is continuous. Every step checks that the chain keeps moving in the
//! right direction; a functional that is not isotone is reported rather than
//! iterated blindly.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::error::RelError;
use crate::relation::MultiRelation;
use crate::space::{rng_from_seed, ClassSpace, SearchMode, SpaceError};
use crate::structure::{domain, ClassTag};
use crate::universe::Universe;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixpointError {
    #[error("functional `{description}` is not isotone: chain broke at step {step}")]
    NotMonotone { description: String, step: usize },
    #[error("functional `{description}` did not stabilise within {cap} steps")]
    CapExceeded { description: String, cap: usize },
    #[error("exhaustive quantification is limited to universes of at most 2 elements (got {0})")]
    ExhaustiveTooLarge(usize),
    #[error(transparent)]
    Rel(#[from] RelError),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// A functional on multirelations over one universe, expected to be isotone.
pub struct MonotoneFunctional<'a> {
    description: String,
    f: Box<dyn Fn(&MultiRelation) -> MultiRelation + 'a>,
}

impl<'a> MonotoneFunctional<'a> {
    pub fn new(description: impl Into<String>, f: impl Fn(&MultiRelation) -> MultiRelation + 'a) -> Self {
        MonotoneFunctional { description: description.into(), f: Box::new(f) }
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn apply(&self, x: &MultiRelation) -> MultiRelation {
        (self.f)(x)
    }

    /// Samples pairs `X ⊆ Y` and checks `F(X) ⊆ F(Y)`; returns a violating pair.
    pub fn spot_check(
        &self,
        u: &Universe,
        samples: usize,
        seed: u64,
    ) -> Result<Option<(MultiRelation, MultiRelation)>, FixpointError> {
        let space = ClassSpace::new(u, ClassTag::General)?;
        let mut rng = rng_from_seed(seed);
        for _ in 0..samples {
            let x = space.sample(&mut rng);
            let y = x.union(&space.sample(&mut rng))?;
            if !self.apply(&x).is_subset(&self.apply(&y))? {
                return Ok(Some((x, y)));
            }
        }
        Ok(None)
    }
}

impl fmt::Debug for MonotoneFunctional<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MonotoneFunctional").field("description", &self.description).finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixpointResult {
    pub value: MultiRelation,
    /// Number of applications of the functional, including the one that
    /// confirmed stability.
    pub iterations: usize,
    pub converged: bool,
}

/// Iteration cap for a universe of `n` elements.
pub fn iteration_cap(n: usize) -> usize {
    (n << n) + 1
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Direction {
    Up,
    Down,
}

fn iterate(
    f: &MonotoneFunctional<'_>,
    start: MultiRelation,
    direction: Direction,
    cap: usize,
) -> Result<FixpointResult, FixpointError> {
    let mut current = start;
    for step in 1..=cap {
        let next = f.apply(&current);
        if next == current {
            return Ok(FixpointResult { value: current, iterations: step, converged: true });
        }
        let ordered = match direction {
            Direction::Up => current.is_subset(&next)?,
            Direction::Down => next.is_subset(&current)?,
        };
        if !ordered {
            return Err(FixpointError::NotMonotone { description: f.description.clone(), step });
        }
        current = next;
    }
    Err(FixpointError::CapExceeded { description: f.description.clone(), cap })
}

/// Least fixpoint, iterating upwards from `∅`.
pub fn lfp(f: &MonotoneFunctional<'_>, u: &Universe) -> Result<FixpointResult, FixpointError> {
    iterate(f, MultiRelation::empty(u), Direction::Up, iteration_cap(u.len()))
}

/// Greatest fixpoint, iterating downwards from `U`.
pub fn gfp(f: &MonotoneFunctional<'_>, u: &Universe) -> Result<FixpointResult, FixpointError> {
    iterate(f, MultiRelation::univ(u), Direction::Down, iteration_cap(u.len()))
}

/// The fixpoint operators, for callers that pick one at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixOp {
    Star,
    StarBinary,
    Omega,
    OmegaBinary,
    Infinity,
    Nabla,
}

impl FixOp {
    pub const ALL: [FixOp; 6] =
        [FixOp::Star, FixOp::StarBinary, FixOp::Omega, FixOp::OmegaBinary, FixOp::Infinity, FixOp::Nabla];

    pub fn name(self) -> &'static str {
        match self {
            FixOp::Star => "star",
            FixOp::StarBinary => "star_binary",
            FixOp::Omega => "omega",
            FixOp::OmegaBinary => "omega_binary",
            FixOp::Infinity => "infinity",
            FixOp::Nabla => "nabla",
        }
    }

    pub fn is_binary(self) -> bool {
        matches!(self, FixOp::StarBinary | FixOp::OmegaBinary)
    }

    pub fn from_name(name: &str) -> Option<FixOp> {
        FixOp::ALL.into_iter().find(|op| op.name() == name)
    }

    /// Runs the operator on `r` (and `s` for the binary ones).
    pub fn run(self, r: &MultiRelation, s: Option<&MultiRelation>) -> Result<FixpointResult, FixpointError> {
        let u = r.universe();
        let rhs = |s: Option<&MultiRelation>| -> Result<MultiRelation, FixpointError> {
            let s = s.cloned().unwrap_or_else(|| MultiRelation::one_sigma(u));
            r.same_universe(&s)?;
            Ok(s)
        };
        match self {
            FixOp::Star | FixOp::StarBinary => {
                let s = if self == FixOp::Star { MultiRelation::one_sigma(u) } else { rhs(s)? };
                let f = MonotoneFunctional::new(format!("X -> {s} + R.X"), |x| {
                    s.union(&r.seq(x).expect("same universe")).expect("same universe")
                });
                lfp(&f, u)
            }
            FixOp::Omega => {
                let f = MonotoneFunctional::new("X -> R.X", |x| r.seq(x).expect("same universe"));
                gfp(&f, u)
            }
            FixOp::OmegaBinary | FixOp::Infinity => {
                let s = if self == FixOp::Infinity { MultiRelation::one_sigma(u) } else { rhs(s)? };
                let f = MonotoneFunctional::new(format!("X -> {s} + R.X"), |x| {
                    s.union(&r.seq(x).expect("same universe")).expect("same universe")
                });
                gfp(&f, u)
            }
            FixOp::Nabla => {
                let f = MonotoneFunctional::new("p -> d(R.p)", |p| domain(&r.seq(p).expect("same universe")));
                iterate(&f, MultiRelation::one_sigma(u), Direction::Down, u.len() + 1)
            }
        }
    }
}

fn value(result: Result<FixpointResult, FixpointError>) -> MultiRelation {
    // the functionals built here are isotone, so iteration always converges
    result.expect("isotone functional converges").value
}

/// `R^* = μX. 1σ ∪ R·X`.
pub fn star(r: &MultiRelation) -> MultiRelation {
    value(FixOp::Star.run(r, None))
}

/// `R^* S = μX. S ∪ R·X`.
pub fn star_binary(r: &MultiRelation, s: &MultiRelation) -> Result<MultiRelation, RelError> {
    r.same_universe(s)?;
    Ok(value(FixOp::StarBinary.run(r, Some(s))))
}

/// `R^ω = νX. R·X`.
pub fn omega(r: &MultiRelation) -> MultiRelation {
    value(FixOp::Omega.run(r, None))
}

/// `R^ω S = νX. S ∪ R·X`.
pub fn omega_binary(r: &MultiRelation, s: &MultiRelation) -> Result<MultiRelation, RelError> {
    r.same_universe(s)?;
    Ok(value(FixOp::OmegaBinary.run(r, Some(s))))
}

/// `R^∞ = νX. 1σ ∪ R·X`.
pub fn infinity(r: &MultiRelation) -> MultiRelation {
    value(FixOp::Infinity.run(r, None))
}

/// Largest sequential subidentity `p` with `p = d(R·p)`.
pub fn nabla(r: &MultiRelation) -> MultiRelation {
    value(FixOp::Nabla.run(r, None))
}

fn unfold(r: &MultiRelation, x: &MultiRelation) -> MultiRelation {
    MultiRelation::one_sigma(r.universe())
        .union(&r.seq(x).expect("same universe"))
        .expect("same universe")
}

/// `R^(0) = ∅`, `R^(i+1) = 1σ ∪ R·R^(i)`.
pub fn power_paren(r: &MultiRelation, i: usize) -> MultiRelation {
    (0..i).fold(MultiRelation::empty(r.universe()), |x, _| unfold(r, &x))
}

/// `R^[0] = 1σ`, `R^[i+1] = 1σ ∪ R·R^[i]`.
pub fn power_bracket(r: &MultiRelation, i: usize) -> MultiRelation {
    (0..i).fold(MultiRelation::one_sigma(r.universe()), |x, _| unfold(r, &x))
}

/// Union of a sequence `x_0, x_1 = next(x_0), …` up to the point where it repeats.
fn union_of_iterates(start: MultiRelation, next: impl Fn(&MultiRelation) -> MultiRelation) -> MultiRelation {
    let cap = iteration_cap(start.universe().len());
    let mut acc = start.clone();
    let mut current = start;
    for _ in 0..cap {
        let following = next(&current);
        if following == current {
            break;
        }
        acc = acc.union(&following).expect("same universe");
        current = following;
    }
    acc
}

/// `⋃_i R^(i)`.
pub fn iter_star_paren(r: &MultiRelation) -> MultiRelation {
    union_of_iterates(MultiRelation::empty(r.universe()), |x| unfold(r, x))
}

/// `⋃_i R^[i]`.
pub fn iter_star_bracket(r: &MultiRelation) -> MultiRelation {
    union_of_iterates(MultiRelation::one_sigma(r.universe()), |x| unfold(r, x))
}

/// `⋃_k (1σ ∪ R)^k` with `P^0 = 1σ` and `P^(k+1) = P·P^k`.
pub fn sum_of_powers(r: &MultiRelation) -> MultiRelation {
    let one = MultiRelation::one_sigma(r.universe());
    let p = one.union(r).expect("same universe");
    union_of_iterates(one, |x| p.seq(x).expect("same universe"))
}

/// `R^ω = ∅`.
pub fn is_omega_trivial(r: &MultiRelation) -> bool {
    omega(r).is_empty()
}

fn for_all_y(
    r: &MultiRelation,
    mode: SearchMode,
    holds: impl Fn(&MultiRelation) -> bool,
) -> Result<bool, FixpointError> {
    let u = r.universe();
    let space = ClassSpace::new(u, ClassTag::General)?;
    match mode {
        SearchMode::Exhaustive => {
            if u.len() > 2 {
                return Err(FixpointError::ExhaustiveTooLarge(u.len()));
            }
            Ok(space.iter()?.all(|y| holds(&y)))
        }
        SearchMode::Sampled { samples, seed } => {
            let mut rng = rng_from_seed(seed);
            Ok((0..samples).all(|_| holds(&space.sample(&mut rng))))
        }
    }
}

/// `∀y. y ⊆ R·y ⇒ y = ∅`. Sampled mode can only miss counterexamples.
pub fn is_deflationary(r: &MultiRelation, mode: SearchMode) -> Result<bool, FixpointError> {
    for_all_y(r, mode, |y| y.is_empty() || !y.is_subset(&r.seq(y).expect("same universe")).expect("same universe"))
}

/// `∀y. d(y) ⊆ d(R·y) ⇒ d(y) = ∅`. Sampled mode can only miss counterexamples.
pub fn is_wellfounded(r: &MultiRelation, mode: SearchMode) -> Result<bool, FixpointError> {
    for_all_y(r, mode, |y| {
        let dy = domain(y);
        dy.is_empty() || !dy.is_subset(&domain(&r.seq(y).expect("same universe"))).expect("same universe")
    })
}
