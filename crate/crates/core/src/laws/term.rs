//! Terms and laws over the multirelation signature.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::structure::ClassTag;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Const {
    Zero,
    OneSigma,
    OnePi,
    Univ,
    CoOnePi,
}

impl Const {
    pub const ALL: [Const; 5] = [Const::Zero, Const::OneSigma, Const::OnePi, Const::Univ, Const::CoOnePi];

    pub fn symbol(self) -> &'static str {
        match self {
            Const::Zero => "0",
            Const::OneSigma => "1s",
            Const::OnePi => "1p",
            Const::Univ => "U",
            Const::CoOnePi => "n1p",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnOp {
    Complement,
    Domain,
    Tau,
    Nu,
    Up,
    ToTerminal,
    Vectorize,
    Star,
    Omega,
    Infinity,
    Nabla,
    /// `⋃ R^(i)`
    ParenStar,
    /// `⋃ R^[i]`
    BracketStar,
    /// `⋃ (1σ ∪ R)^k`
    SumPowers,
}

impl UnOp {
    pub const ALL: [UnOp; 14] = [
        UnOp::Complement,
        UnOp::Domain,
        UnOp::Tau,
        UnOp::Nu,
        UnOp::Up,
        UnOp::ToTerminal,
        UnOp::Vectorize,
        UnOp::Star,
        UnOp::Omega,
        UnOp::Infinity,
        UnOp::Nabla,
        UnOp::ParenStar,
        UnOp::BracketStar,
        UnOp::SumPowers,
    ];

    /// Prefix function name in the term syntax.
    pub fn function_name(self) -> &'static str {
        match self {
            UnOp::Complement => "comp",
            UnOp::Domain => "d",
            UnOp::Tau => "tau",
            UnOp::Nu => "nu",
            UnOp::Up => "up",
            UnOp::ToTerminal => "term",
            UnOp::Vectorize => "vec",
            UnOp::Star => "star",
            UnOp::Omega => "omega",
            UnOp::Infinity => "inf",
            UnOp::Nabla => "nabla",
            UnOp::ParenStar => "pstar",
            UnOp::BracketStar => "gstar",
            UnOp::SumPowers => "sstar",
        }
    }

    /// Postfix spelling, for the three iterations that have one.
    pub fn postfix(self) -> Option<&'static str> {
        match self {
            UnOp::Star => Some("^*"),
            UnOp::Omega => Some("^w"),
            UnOp::Infinity => Some("^inf"),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinOp {
    Union,
    Meet,
    Par,
    Parikh,
    Seq,
    StarBinary,
    OmegaBinary,
    Diamond,
}

impl BinOp {
    /// Infix symbol and binding strength (higher binds tighter).
    pub fn infix(self) -> Option<(&'static str, u8)> {
        match self {
            BinOp::Union => Some(("+", 1)),
            BinOp::Meet => Some(("&", 2)),
            BinOp::Par => Some(("||", 3)),
            BinOp::Parikh => Some((";", 4)),
            BinOp::Seq => Some((".", 5)),
            _ => None,
        }
    }

    pub fn function_name(self) -> Option<&'static str> {
        match self {
            BinOp::StarBinary => Some("star"),
            BinOp::OmegaBinary => Some("omega"),
            BinOp::Diamond => Some("dia"),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String, ClassTag),
    Const(Const),
    Unary(UnOp, Box<Term>),
    Binary(BinOp, Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string(), ClassTag::General)
    }

    pub fn sorted(name: &str, sort: ClassTag) -> Term {
        Term::Var(name.to_string(), sort)
    }

    pub fn unary(op: UnOp, t: Term) -> Term {
        Term::Unary(op, Box::new(t))
    }

    pub fn binary(op: BinOp, l: Term, r: Term) -> Term {
        Term::Binary(op, Box::new(l), Box::new(r))
    }

    /// Variables in order of first occurrence, with their sorts.
    pub fn variables(&self) -> Vec<(String, ClassTag)> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut Vec<(String, ClassTag)>) {
        match self {
            Term::Var(name, sort) => {
                if !out.iter().any(|(n, _)| n == name) {
                    out.push((name.clone(), *sort));
                }
            }
            Term::Const(_) => {}
            Term::Unary(_, t) => t.collect_vars(out),
            Term::Binary(_, l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    fn strength(&self) -> u8 {
        match self {
            Term::Binary(op, _, _) => op.infix().map_or(u8::MAX, |(_, s)| s),
            _ => u8::MAX,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.strength() < min;
        if paren {
            f.write_str("(")?;
        }
        match self {
            Term::Var(name, ClassTag::General) => f.write_str(name)?,
            Term::Var(name, sort) => write!(f, "{name}:{sort}")?,
            Term::Const(c) => f.write_str(c.symbol())?,
            Term::Unary(op, t) => match op.postfix() {
                // postfix only on atoms, so `x^*` and `(x.y)^*` read naturally
                Some(post) => {
                    t.fmt_at(f, u8::MAX)?;
                    f.write_str(post)?;
                }
                None => {
                    write!(f, "{}(", op.function_name())?;
                    t.fmt_at(f, 0)?;
                    f.write_str(")")?;
                }
            },
            Term::Binary(op, l, r) => match op.infix() {
                Some((sym, s)) => {
                    l.fmt_at(f, s)?;
                    write!(f, " {sym} ")?;
                    r.fmt_at(f, s + 1)?;
                }
                None => {
                    write!(f, "{}(", op.function_name().unwrap_or("?"))?;
                    l.fmt_at(f, 0)?;
                    f.write_str(", ")?;
                    r.fmt_at(f, 0)?;
                    f.write_str(")")?;
                }
            },
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RelOp {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "<=")]
    Leq,
    /// Only allowed in hypotheses.
    #[serde(rename = "!=")]
    Neq,
}

impl RelOp {
    pub fn symbol(self) -> &'static str {
        match self {
            RelOp::Eq => "=",
            RelOp::Leq => "<=",
            RelOp::Neq => "!=",
        }
    }
}

/// `lhs rel rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Atom {
    pub lhs: Term,
    pub rel: RelOp,
    pub rhs: Term,
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.lhs, self.rel.symbol(), self.rhs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expected {
    Valid,
    Refuted,
}

/// Which models a law is stated for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LawModel {
    Relations,
    Algebra,
    Both,
}

impl LawModel {
    pub fn covers_relations(self) -> bool {
        matches!(self, LawModel::Relations | LawModel::Both)
    }

    pub fn covers_algebra(self) -> bool {
        matches!(self, LawModel::Algebra | LawModel::Both)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("variable `{name}` is used with sorts `{first}` and `{second}`")]
    ConflictingSort { name: String, first: ClassTag, second: ClassTag },
    #[error("the second argument of dia must be a subidentity, but `{0}` is sorted otherwise")]
    DiamondSort(String),
    #[error("`!=` is only allowed in hypotheses")]
    NeqConclusion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Law {
    pub name: String,
    pub hypotheses: Vec<Atom>,
    pub conclusion: Atom,
    pub expected: Expected,
    pub anchor: String,
    pub model: LawModel,
}

impl Law {
    /// Free variables: conclusion first, then hypotheses, each in order of
    /// first occurrence.
    pub fn variables(&self) -> Vec<(String, ClassTag)> {
        let mut out = Vec::new();
        self.conclusion.lhs.collect_vars(&mut out);
        self.conclusion.rhs.collect_vars(&mut out);
        for h in &self.hypotheses {
            h.lhs.collect_vars(&mut out);
            h.rhs.collect_vars(&mut out);
        }
        out
    }

    /// The law in the textual syntax accepted by the parser.
    pub fn text(&self) -> String {
        let conclusion = self.conclusion.to_string();
        if self.hypotheses.is_empty() {
            conclusion
        } else {
            let hyps: Vec<String> = self.hypotheses.iter().map(|h| h.to_string()).collect();
            format!("{} => {}", hyps.join(", "), conclusion)
        }
    }

    pub fn to_json(&self) -> LawJson {
        LawJson {
            name: self.name.clone(),
            hypotheses: self.hypotheses.iter().map(|h| h.to_string()).collect(),
            lhs: self.conclusion.lhs.to_string(),
            rhs: self.conclusion.rhs.to_string(),
            rel: self.conclusion.rel,
            expected: self.expected,
            anchor: self.anchor.clone(),
            model: self.model,
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

/// Serialized form of a law; terms are kept in the textual syntax.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawJson {
    pub name: String,
    pub hypotheses: Vec<String>,
    pub lhs: String,
    pub rhs: String,
    pub rel: RelOp,
    pub expected: Expected,
    pub anchor: String,
    pub model: LawModel,
}

/// Gives every occurrence of a variable the same sort: the explicit one if
/// any occurrence carries it, `sub` for bare diamond arguments, otherwise
/// general.
pub(crate) fn unify_sorts(terms: &mut [&mut Term]) -> Result<(), TermError> {
    let mut sorts: Vec<(String, ClassTag)> = Vec::new();
    fn gather(t: &Term, sorts: &mut Vec<(String, ClassTag)>) -> Result<(), TermError> {
        match t {
            Term::Var(name, sort) => {
                match sorts.iter_mut().find(|(n, _)| n == name) {
                    Some((_, existing)) if *existing == ClassTag::General => *existing = *sort,
                    Some((_, existing)) if *sort != ClassTag::General && existing != sort => {
                        return Err(TermError::ConflictingSort {
                            name: name.clone(),
                            first: *existing,
                            second: *sort,
                        })
                    }
                    Some(_) => {}
                    None => sorts.push((name.clone(), *sort)),
                }
                Ok(())
            }
            Term::Const(_) => Ok(()),
            Term::Unary(_, t) => gather(t, sorts),
            Term::Binary(_, l, r) => {
                gather(l, sorts)?;
                gather(r, sorts)
            }
        }
    }
    fn diamond_args(t: &Term, out: &mut Vec<String>) {
        match t {
            Term::Binary(BinOp::Diamond, l, r) => {
                if let Term::Var(name, _) = r.as_ref() {
                    out.push(name.clone());
                }
                diamond_args(l, out);
                diamond_args(r, out);
            }
            Term::Binary(_, l, r) => {
                diamond_args(l, out);
                diamond_args(r, out);
            }
            Term::Unary(_, t) => diamond_args(t, out),
            _ => {}
        }
    }
    fn apply(t: &mut Term, sorts: &[(String, ClassTag)]) {
        match t {
            Term::Var(name, sort) => {
                if let Some((_, s)) = sorts.iter().find(|(n, _)| n == name) {
                    *sort = *s;
                }
            }
            Term::Const(_) => {}
            Term::Unary(_, t) => apply(t, sorts),
            Term::Binary(_, l, r) => {
                apply(l, sorts);
                apply(r, sorts);
            }
        }
    }
    for t in terms.iter() {
        gather(t, &mut sorts)?;
    }
    let mut dia = Vec::new();
    for t in terms.iter() {
        diamond_args(t, &mut dia);
    }
    for name in dia {
        let entry = sorts.iter_mut().find(|(n, _)| *n == name).expect("gathered");
        match entry.1 {
            ClassTag::General => entry.1 = ClassTag::SeqSubid,
            ClassTag::SeqSubid => {}
            _ => return Err(TermError::DiamondSort(name)),
        }
    }
    for t in terms.iter_mut() {
        apply(t, &sorts);
    }
    Ok(())
}
