//! Domain, terminal/nonterminal projections, closures and the subclass
//! predicates, plus the modal diamond and the projection preorders.
//!
//! The projections here are written against the set-builder descriptions
//! (e.g. "keep the pairs with empty target"), not by composing the algebra
//! operations. The law catalog relates the two, so each side checks the other.

mod iso;

pub use iso::{check_iso_roundtrips, IsoEntry, IsoIdentity, IsoReport, IsoStatus, ISO_IDENTITIES};

use std::fmt;
use std::str::FromStr;

use crate::error::RelError;
use crate::family::Family;
use crate::relation::MultiRelation;
use crate::universe::StateSet;

/// The subclasses of multirelations singled out by their fixpoint equations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    /// `R ∩ 1σ = R`
    SeqSubid,
    /// `R · 1π = R`; the parallel subidentities.
    Terminal,
    /// `(R · 1π) ‖ U = R`
    Vector,
    /// `R ‖ U = R`
    UpClosed,
    /// `R ∩ 1̄π = R`
    Nonterminal,
    General,
}

impl ClassTag {
    pub const ALL: [ClassTag; 6] = [
        ClassTag::SeqSubid,
        ClassTag::Terminal,
        ClassTag::Vector,
        ClassTag::UpClosed,
        ClassTag::Nonterminal,
        ClassTag::General,
    ];

    /// Short name used in the term syntax (`p:sub`).
    pub fn short_name(self) -> &'static str {
        match self {
            ClassTag::SeqSubid => "sub",
            ClassTag::Terminal => "term",
            ClassTag::Vector => "vec",
            ClassTag::UpClosed => "up",
            ClassTag::Nonterminal => "nt",
            ClassTag::General => "gen",
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for ClassTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassTag::ALL
            .into_iter()
            .find(|t| t.short_name() == s)
            .ok_or_else(|| format!("unknown sort `{s}`"))
    }
}

fn map_rows(r: &MultiRelation, f: impl Fn(usize, Family) -> Family) -> MultiRelation {
    let rows: Vec<Family> = r.rows().into_iter().enumerate().map(|(a, row)| f(a, row)).collect();
    MultiRelation::from_rows(r.universe(), &rows)
}

/// `d(R) = {(a,{a}) | ∃B. (a,B) ∈ R}`.
pub fn domain(r: &MultiRelation) -> MultiRelation {
    let u = r.universe();
    MultiRelation::from_index_pairs(u, r.sources().iter().map(|a| (a, StateSet::singleton(a))))
        .expect("sources lie in the universe")
}

/// Terminal part: the pairs `(a,∅)` of `R`.
pub fn tau(r: &MultiRelation) -> MultiRelation {
    let n = r.universe().len();
    map_rows(r, |_, row| {
        let mut out = Family::empty(n);
        if row.contains(StateSet::EMPTY) {
            out.insert(StateSet::EMPTY);
        }
        out
    })
}

/// Nonterminal part: the pairs `(a,A)` of `R` with `A ≠ ∅`.
pub fn nu(r: &MultiRelation) -> MultiRelation {
    r.difference(&tau(r)).expect("same universe")
}

/// `{(a,A) | ∃B. (a,B) ∈ R ∧ B ⊆ A}`.
pub fn up_closure(r: &MultiRelation) -> MultiRelation {
    let n = r.universe().len();
    map_rows(r, |_, row| row.up_closed(n))
}

/// `{(a,∅) | ∃B. (a,B) ∈ R}`.
pub fn to_terminal(r: &MultiRelation) -> MultiRelation {
    let u = r.universe();
    MultiRelation::from_index_pairs(u, r.sources().iter().map(|a| (a, StateSet::EMPTY)))
        .expect("sources lie in the universe")
}

/// The vector with the same domain as `R`: every target for every source.
pub fn vectorize(r: &MultiRelation) -> MultiRelation {
    let n = r.universe().len();
    map_rows(r, |_, row| if row.is_empty() { row } else { Family::full(n) })
}

/// Membership by the defining fixpoint equation of each class.
pub fn is_in_class(r: &MultiRelation, tag: ClassTag) -> bool {
    let u = r.universe();
    let fixed = |image: Result<MultiRelation, RelError>| image.map(|x| &x == r).unwrap_or(false);
    match tag {
        ClassTag::SeqSubid => fixed(r.inter(&MultiRelation::one_sigma(u))),
        ClassTag::Terminal => fixed(r.seq(&MultiRelation::one_pi(u))),
        ClassTag::Vector => fixed(
            r.seq(&MultiRelation::one_pi(u))
                .and_then(|t| t.par(&MultiRelation::univ(u))),
        ),
        ClassTag::UpClosed => fixed(r.par(&MultiRelation::univ(u))),
        ClassTag::Nonterminal => fixed(r.inter(&MultiRelation::co_one_pi(u))),
        ClassTag::General => true,
    }
}

/// `⟨R⟩p = d(R · p)` for a sequential subidentity `p`.
pub fn diamond(r: &MultiRelation, p: &MultiRelation) -> Result<MultiRelation, RelError> {
    r.same_universe(p)?;
    if !is_in_class(p, ClassTag::SeqSubid) {
        return Err(RelError::NotSubidentity);
    }
    Ok(domain(&r.seq(p)?))
}

pub fn leq_tau(r: &MultiRelation, s: &MultiRelation) -> Result<bool, RelError> {
    tau(r).is_subset(&tau(s))
}

pub fn leq_nu(r: &MultiRelation, s: &MultiRelation) -> Result<bool, RelError> {
    nu(r).is_subset(&nu(s))
}

pub fn eqv_tau(r: &MultiRelation, s: &MultiRelation) -> Result<bool, RelError> {
    r.same_universe(s)?;
    Ok(tau(r) == tau(s))
}

pub fn eqv_nu(r: &MultiRelation, s: &MultiRelation) -> Result<bool, RelError> {
    r.same_universe(s)?;
    Ok(nu(r) == nu(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::Universe;

    fn lit(u: &Universe, s: &str) -> MultiRelation {
        MultiRelation::parse_literal(u, s).unwrap()
    }

    #[test]
    fn domain_examples() {
        let u = Universe::new(["a", "b"]).unwrap();
        assert_eq!(domain(&lit(&u, "{(a,{})}")), lit(&u, "{(a,{a})}"));
        assert!(domain(&MultiRelation::empty(&u)).is_empty());
        assert_eq!(domain(&MultiRelation::univ(&u)), MultiRelation::one_sigma(&u));
        assert!(is_in_class(&domain(&lit(&u, "{(b,{a,b})}")), ClassTag::SeqSubid));
    }

    #[test]
    fn projection_examples() {
        let u = Universe::new(["a", "b"]).unwrap();
        let r = lit(&u, "{(a,{}),(b,{a})}");
        assert_eq!(tau(&r), lit(&u, "{(a,{})}"));
        assert_eq!(nu(&r), lit(&u, "{(b,{a})}"));
        let one = MultiRelation::one_sigma(&u);
        assert!(tau(&one).is_empty());
        assert_eq!(nu(&one), one);
        let top = MultiRelation::univ(&u);
        assert_eq!(tau(&top), MultiRelation::one_pi(&u));
        assert_eq!(nu(&top), MultiRelation::co_one_pi(&u));
    }

    #[test]
    fn closure_examples() {
        let u = Universe::new(["a", "b"]).unwrap();
        assert_eq!(up_closure(&lit(&u, "{(a,{a})}")), lit(&u, "{(a,{a}),(a,{a,b})}"));
        assert!(up_closure(&MultiRelation::empty(&u)).is_empty());
        let top = MultiRelation::univ(&u);
        assert_eq!(up_closure(&top), top);
        assert_eq!(to_terminal(&lit(&u, "{(a,{a,b})}")), lit(&u, "{(a,{})}"));
        assert!(vectorize(&MultiRelation::empty(&u)).is_empty());
        assert_eq!(
            vectorize(&lit(&u, "{(a,{})}")),
            lit(&u, "{(a,{}),(a,{a}),(a,{b}),(a,{a,b})}")
        );
    }

    #[test]
    fn class_examples() {
        for n in 1..=3 {
            let u = Universe::of_size(n).unwrap();
            assert!(!is_in_class(&MultiRelation::one_pi(&u), ClassTag::Vector));
            assert!(is_in_class(&MultiRelation::univ(&u), ClassTag::UpClosed));
            assert!(is_in_class(&MultiRelation::one_sigma(&u), ClassTag::Nonterminal));
            assert!(is_in_class(&MultiRelation::one_pi(&u), ClassTag::Terminal));
        }
    }

    #[test]
    fn diamond_examples() {
        let u = Universe::new(["a"]).unwrap();
        let one = MultiRelation::one_sigma(&u);
        let empty = MultiRelation::empty(&u);
        for p in [empty.clone(), one.clone()] {
            assert_eq!(diamond(&one, &p).unwrap(), p);
            assert!(diamond(&empty, &p).unwrap().is_empty());
        }
        assert_eq!(diamond(&lit(&u, "{(a,{})}"), &empty).unwrap(), one);
        assert_eq!(
            diamond(&one, &MultiRelation::one_pi(&u)).unwrap_err(),
            RelError::NotSubidentity
        );
    }

    #[test]
    fn preorder_examples() {
        let u = Universe::new(["a", "b"]).unwrap();
        let r = lit(&u, "{(a,{a}),(b,{})}");
        assert!(leq_tau(&MultiRelation::empty(&u), &r).unwrap());
        let with_pi = r.union(&MultiRelation::one_pi(&u)).unwrap();
        assert!(eqv_nu(&r, &with_pi).unwrap());
        assert!(eqv_tau(&lit(&u, "{(a,{a})}"), &MultiRelation::empty(&u)).unwrap());
        assert!(!leq_nu(&r, &MultiRelation::empty(&u)).unwrap());
    }
}
