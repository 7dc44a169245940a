//! Models a law can be interpreted in, and term evaluation.

use std::collections::HashMap;
use std::fmt::Debug;

use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::term::{BinOp, Const, Term, UnOp};
use crate::error::RelError;
use crate::fixpoint;
use crate::relation::{Constant, MultiRelation};
use crate::space::{ClassSpace, SpaceError};
use crate::structure::{self, ClassTag};
use crate::universe::Universe;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable `{0}` is not bound")]
    Unbound(String),
    #[error("binding of `{name}` is not in sort `{sort}`")]
    SortViolation { name: String, sort: ClassTag },
    #[error("{model} does not interpret `{what}`")]
    Unsupported { model: String, what: String },
    #[error(transparent)]
    Rel(#[from] RelError),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// The members of one sort, addressable by index and samplable.
pub trait Domain {
    type Elem;
    /// Saturates at `u128::MAX` when too large to count.
    fn size(&self) -> u128;
    fn nth(&self, index: u64) -> Self::Elem;
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Elem;
}

/// An interpretation of the signature.
pub trait Model {
    type Elem: Clone + PartialEq + Debug;
    type Dom: Domain<Elem = Self::Elem>;

    /// Short label used in witnesses and reports, e.g. `relations n=2`.
    fn label(&self) -> String;
    fn domain(&self, sort: ClassTag) -> Result<Self::Dom, EvalError>;
    fn in_sort(&self, x: &Self::Elem, sort: ClassTag) -> Result<bool, EvalError>;
    fn constant(&self, c: Const) -> Result<Self::Elem, EvalError>;
    fn unary(&self, op: UnOp, x: &Self::Elem) -> Result<Self::Elem, EvalError>;
    fn binary(&self, op: BinOp, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem, EvalError>;
    fn leq(&self, x: &Self::Elem, y: &Self::Elem) -> bool;
    fn to_json(&self, x: &Self::Elem) -> serde_json::Value;
}

/// Multirelations over a fixed universe.
#[derive(Clone, Debug)]
pub struct RelModel {
    universe: Universe,
}

impl RelModel {
    pub fn new(universe: &Universe) -> Self {
        RelModel { universe: universe.clone() }
    }

    pub fn of_size(n: usize) -> Result<Self, RelError> {
        Ok(RelModel { universe: Universe::of_size(n)? })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }
}

impl Domain for ClassSpace {
    type Elem = MultiRelation;

    fn size(&self) -> u128 {
        ClassSpace::size(self)
    }

    fn nth(&self, index: u64) -> MultiRelation {
        ClassSpace::nth(self, index)
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> MultiRelation {
        ClassSpace::sample(self, rng)
    }
}

impl Model for RelModel {
    type Elem = MultiRelation;
    type Dom = ClassSpace;

    fn label(&self) -> String {
        format!("relations n={}", self.universe.len())
    }

    fn domain(&self, sort: ClassTag) -> Result<ClassSpace, EvalError> {
        Ok(ClassSpace::new(&self.universe, sort)?)
    }

    fn in_sort(&self, x: &MultiRelation, sort: ClassTag) -> Result<bool, EvalError> {
        if x.universe() != &self.universe {
            return Err(RelError::UniverseMismatch.into());
        }
        Ok(structure::is_in_class(x, sort))
    }

    fn constant(&self, c: Const) -> Result<MultiRelation, EvalError> {
        let which = match c {
            Const::Zero => Constant::Empty,
            Const::OneSigma => Constant::OneSigma,
            Const::OnePi => Constant::OnePi,
            Const::Univ => Constant::Univ,
            Const::CoOnePi => Constant::CoOnePi,
        };
        Ok(MultiRelation::constant(&self.universe, which))
    }

    fn unary(&self, op: UnOp, x: &MultiRelation) -> Result<MultiRelation, EvalError> {
        Ok(match op {
            UnOp::Complement => x.complement(),
            UnOp::Domain => structure::domain(x),
            UnOp::Tau => structure::tau(x),
            UnOp::Nu => structure::nu(x),
            UnOp::Up => structure::up_closure(x),
            UnOp::ToTerminal => structure::to_terminal(x),
            UnOp::Vectorize => structure::vectorize(x),
            UnOp::Star => fixpoint::star(x),
            UnOp::Omega => fixpoint::omega(x),
            UnOp::Infinity => fixpoint::infinity(x),
            UnOp::Nabla => fixpoint::nabla(x),
            UnOp::ParenStar => fixpoint::iter_star_paren(x),
            UnOp::BracketStar => fixpoint::iter_star_bracket(x),
            UnOp::SumPowers => fixpoint::sum_of_powers(x),
        })
    }

    fn binary(&self, op: BinOp, x: &MultiRelation, y: &MultiRelation) -> Result<MultiRelation, EvalError> {
        Ok(match op {
            BinOp::Union => x.union(y)?,
            BinOp::Meet => x.inter(y)?,
            BinOp::Par => x.par(y)?,
            BinOp::Parikh => x.parikh_seq(y)?,
            BinOp::Seq => x.seq(y)?,
            BinOp::StarBinary => fixpoint::star_binary(x, y)?,
            BinOp::OmegaBinary => fixpoint::omega_binary(x, y)?,
            BinOp::Diamond => structure::diamond(x, y)?,
        })
    }

    fn leq(&self, x: &MultiRelation, y: &MultiRelation) -> bool {
        x.is_subset(y).unwrap_or(false)
    }

    fn to_json(&self, x: &MultiRelation) -> serde_json::Value {
        serde_json::to_value(x.to_json()).expect("relation serializes")
    }
}

/// A term with variables replaced by positions in an assignment vector.
#[derive(Clone, Debug)]
pub(crate) enum Compiled {
    Var(usize),
    Const(Const),
    Unary(UnOp, Box<Compiled>),
    Binary(BinOp, Box<Compiled>, Box<Compiled>),
}

impl Compiled {
    /// Panics if a variable of `t` is missing from `vars`.
    pub(crate) fn new(t: &Term, vars: &[(String, ClassTag)]) -> Compiled {
        match t {
            Term::Var(name, _) => {
                Compiled::Var(vars.iter().position(|(v, _)| v == name).expect("variable listed"))
            }
            Term::Const(c) => Compiled::Const(*c),
            Term::Unary(op, t) => Compiled::Unary(*op, Box::new(Compiled::new(t, vars))),
            Term::Binary(op, l, r) => {
                Compiled::Binary(*op, Box::new(Compiled::new(l, vars)), Box::new(Compiled::new(r, vars)))
            }
        }
    }

    pub(crate) fn eval<M: Model>(&self, m: &M, vals: &[M::Elem]) -> Result<M::Elem, EvalError> {
        match self {
            Compiled::Var(i) => Ok(vals[*i].clone()),
            Compiled::Const(c) => m.constant(*c),
            Compiled::Unary(op, t) => m.unary(*op, &t.eval(m, vals)?),
            Compiled::Binary(op, l, r) => m.binary(*op, &l.eval(m, vals)?, &r.eval(m, vals)?),
        }
    }
}

/// Evaluates `t` in any model; every variable must be bound and within its sort.
pub fn eval_in<M: Model>(m: &M, t: &Term, env: &HashMap<String, M::Elem>) -> Result<M::Elem, EvalError> {
    let vars = t.variables();
    let mut vals = Vec::with_capacity(vars.len());
    for (name, sort) in &vars {
        let v = env.get(name).ok_or_else(|| EvalError::Unbound(name.clone()))?;
        if !m.in_sort(v, *sort)? {
            return Err(EvalError::SortViolation { name: name.clone(), sort: *sort });
        }
        vals.push(v.clone());
    }
    Compiled::new(t, &vars).eval(m, &vals)
}

/// Denotation of `t` as a multirelation over `u`.
pub fn eval_term(t: &Term, u: &Universe, env: &HashMap<String, MultiRelation>) -> Result<MultiRelation, EvalError> {
    eval_in(&RelModel::new(u), t, env)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::parse::parse_term;

    fn env(pairs: &[(&str, &MultiRelation)]) -> HashMap<String, MultiRelation> {
        pairs.iter().map(|(k, v)| (k.to_string(), (*v).clone())).collect()
    }

    #[test]
    fn domain_of_terminal_pair() {
        let u = Universe::new(["a", "b"]).unwrap();
        let r = MultiRelation::parse_literal(&u, "{(a,{})}").unwrap();
        let out = eval_term(&parse_term("d(x)").unwrap(), &u, &env(&[("x", &r)])).unwrap();
        assert_eq!(out, MultiRelation::parse_literal(&u, "{(a,{a})}").unwrap());
    }

    #[test]
    fn par_unit() {
        let u = Universe::of_size(2).unwrap();
        let r = MultiRelation::parse_literal(&u, "{(a,{a,b}), (b,{})}").unwrap();
        let out = eval_term(&parse_term("1p || x").unwrap(), &u, &env(&[("x", &r)])).unwrap();
        assert_eq!(out, r);
    }

    #[test]
    fn errors() {
        let u = Universe::of_size(2).unwrap();
        let r = MultiRelation::parse_literal(&u, "{(a,{a,b})}").unwrap();
        let t = parse_term("x . y").unwrap();
        assert_eq!(eval_term(&t, &u, &env(&[("x", &r)])), Err(EvalError::Unbound("y".into())));
        let t = parse_term("p:sub . x").unwrap();
        assert!(matches!(
            eval_term(&t, &u, &env(&[("p", &r), ("x", &r)])),
            Err(EvalError::SortViolation { .. })
        ));
        let other = Universe::of_size(3).unwrap();
        let s = MultiRelation::empty(&other);
        assert!(matches!(
            eval_term(&parse_term("x").unwrap(), &u, &env(&[("x", &s)])),
            Err(EvalError::Rel(RelError::UniverseMismatch))
        ));
    }
}
