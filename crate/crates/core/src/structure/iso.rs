//! Round trips between the sequential subidentities, the terminal elements
//! and the vectors, and between their nonterminal counterparts.

use serde::Serialize;

use super::domain;
use crate::relation::MultiRelation;
use crate::space::{rng_from_seed, ClassSpace, SearchMode, SpaceError};
use crate::structure::ClassTag;
use crate::universe::Universe;

type Sides = (MultiRelation, MultiRelation);

pub struct IsoIdentity {
    pub name: &'static str,
    pub text: &'static str,
    eval: fn(&MultiRelation) -> Sides,
}

impl IsoIdentity {
    /// Both sides of the identity at `x`.
    pub fn sides(&self, x: &MultiRelation) -> Sides {
        (self.eval)(x)
    }
}

fn seq(a: &MultiRelation, b: &MultiRelation) -> MultiRelation {
    a.seq(b).expect("same universe")
}

fn par(a: &MultiRelation, b: &MultiRelation) -> MultiRelation {
    a.par(b).expect("same universe")
}

fn nonterminal_part(x: &MultiRelation) -> MultiRelation {
    x.inter(&MultiRelation::co_one_pi(x.universe())).expect("same universe")
}

fn term(x: &MultiRelation) -> MultiRelation {
    seq(x, &MultiRelation::one_pi(x.universe()))
}

pub static ISO_IDENTITIES: [IsoIdentity; 8] = [
    IsoIdentity {
        name: "sub-vec-sub",
        text: "d(d(x).U) = d(x)",
        eval: |x| {
            let u = MultiRelation::univ(x.universe());
            (domain(&seq(&domain(x), &u)), domain(x))
        },
    },
    IsoIdentity {
        name: "vec-sub-vec",
        text: "d((x.1p)||U).U = (x.1p)||U",
        eval: |x| {
            let u = MultiRelation::univ(x.universe());
            let v = par(&term(x), &u);
            (seq(&domain(&v), &u), v)
        },
    },
    IsoIdentity {
        name: "vec-term-vec",
        text: "((x.1p)||U).1p = x.1p",
        eval: |x| {
            let u = MultiRelation::univ(x.universe());
            (term(&par(&term(x), &u)), term(x))
        },
    },
    IsoIdentity {
        name: "term-vec-term",
        text: "(((x.1p)||U).1p)||U = (x.1p)||U",
        eval: |x| {
            let u = MultiRelation::univ(x.universe());
            let v = par(&term(x), &u);
            (par(&term(&v), &u), v)
        },
    },
    IsoIdentity {
        name: "sub-ntvec-sub",
        text: "d(d(y).n1p) = d(y) with y = x & n1p",
        eval: |x| {
            let y = nonterminal_part(x);
            let c = MultiRelation::co_one_pi(x.universe());
            (domain(&seq(&domain(&y), &c)), domain(&y))
        },
    },
    IsoIdentity {
        name: "ntvec-sub-ntvec",
        text: "d(y.n1p).n1p = y.n1p with y = x & n1p",
        eval: |x| {
            let y = nonterminal_part(x);
            let c = MultiRelation::co_one_pi(x.universe());
            let v = seq(&y, &c);
            (seq(&domain(&v), &c), v)
        },
    },
    IsoIdentity {
        name: "term-ntvec-term",
        text: "((y.1p)||n1p).1p = y.1p with y = x & n1p",
        eval: |x| {
            let y = nonterminal_part(x);
            let c = MultiRelation::co_one_pi(x.universe());
            (term(&par(&term(&y), &c)), term(&y))
        },
    },
    IsoIdentity {
        name: "ntvec-term-ntvec",
        text: "((y.n1p).1p)||n1p = y.n1p with y = x & n1p",
        eval: |x| {
            let y = nonterminal_part(x);
            let c = MultiRelation::co_one_pi(x.universe());
            let v = seq(&y, &c);
            (par(&term(&v), &c), v)
        },
    },
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IsoStatus {
    Holds,
    Violated,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoEntry {
    pub identity: String,
    pub status: IsoStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<MultiRelation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoReport {
    pub n: usize,
    /// Number of multirelations each identity was evaluated on.
    pub checked: u64,
    pub exhaustive: bool,
    pub entries: Vec<IsoEntry>,
}

impl IsoReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.status == IsoStatus::Holds)
    }

    /// One line per identity.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let status = match e.status {
                IsoStatus::Holds => "HOLDS",
                IsoStatus::Violated => "VIOLATED",
            };
            out.push_str(&format!("ISO {} {}", e.identity, status));
            if let Some(w) = &e.witness {
                out.push_str(&format!(" {}", w.to_json_string()));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Checks every round trip on all multirelations over `u` (exhaustive mode)
/// or on seeded random ones. Violations carry the first witness found.
pub fn check_iso_roundtrips(u: &Universe, mode: SearchMode) -> Result<IsoReport, SpaceError> {
    let space = ClassSpace::new(u, ClassTag::General)?;
    let mut entries: Vec<IsoEntry> = ISO_IDENTITIES
        .iter()
        .map(|i| IsoEntry { identity: i.name.to_string(), status: IsoStatus::Holds, witness: None })
        .collect();
    let mut visit = |x: &MultiRelation| {
        for (entry, identity) in entries.iter_mut().zip(ISO_IDENTITIES.iter()) {
            if entry.witness.is_none() {
                let (lhs, rhs) = identity.sides(x);
                if lhs != rhs {
                    entry.status = IsoStatus::Violated;
                    entry.witness = Some(x.clone());
                }
            }
        }
    };
    let (checked, exhaustive) = match mode {
        SearchMode::Exhaustive => {
            let size = space.size();
            if size > 1 << 26 {
                return Err(SpaceError::TooLarge { size, limit: 1 << 26 });
            }
            space.iter()?.for_each(|x| visit(&x));
            (size as u64, true)
        }
        SearchMode::Sampled { samples, seed } => {
            let mut rng = rng_from_seed(seed);
            for _ in 0..samples {
                visit(&space.sample(&mut rng));
            }
            (samples as u64, false)
        }
    };
    Ok(IsoReport { n: u.len(), checked, exhaustive, entries })
}
