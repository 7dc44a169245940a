//! Replays the stored counterexamples and checks that each still shows the
//! violation it is meant to show.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use super::algebra::{AlgebraError, FiniteAlgebra};
use super::catalog::find_law;
use super::check::{check_instance, check_law, hunt, CheckError, Instance, DEFAULT_SAMPLES};
use super::model::{Model, RelModel};
use crate::error::RelError;
use crate::fixpoint;
use crate::relation::MultiRelation;
use crate::space::{SearchMode, DEFAULT_SEED};
use crate::structure::{self, ClassTag};
use crate::universe::Universe;

pub const REPRO_NAMES: &[&str] = &[
    "mrcounter1",
    "interchangecounter",
    "ctrioidcounter1",
    "domrefs",
    "nutauhomcounter",
    "nutauprecongcounter",
    "nsalgidealcounter",
    "nucounter",
    "inftycounter",
    "nustarcounter",
    "preservation",
    "upclosed-peleg",
    "reldomain",
    "vector-terminal",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReproError {
    #[error("no stored counterexample named `{0}`")]
    Unknown(String),
    #[error("law `{0}` is missing from the catalog")]
    MissingLaw(String),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Rel(#[from] RelError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ReproOutcome {
    Pass,
    Fail,
}

impl fmt::Display for ReproOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReproOutcome::Pass => "PASS",
            ReproOutcome::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReproCheck {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReproItem {
    pub name: String,
    pub checks: Vec<ReproCheck>,
}

impl ReproItem {
    pub fn outcome(&self) -> ReproOutcome {
        if !self.checks.is_empty() && self.checks.iter().all(|c| c.passed) {
            ReproOutcome::Pass
        } else {
            ReproOutcome::Fail
        }
    }

    /// `<PASS|FAIL> <name>` followed by one indented line per check.
    pub fn lines(&self) -> Vec<String> {
        let mut out = vec![format!("{} {}", self.outcome(), self.name)];
        for c in &self.checks {
            let mark = if c.passed { "ok" } else { "FAILED" };
            out.push(format!("  {mark} {}: {}", c.label, c.detail));
        }
        out
    }
}

fn law(name: &str) -> Result<super::term::Law, ReproError> {
    find_law(name).ok_or_else(|| ReproError::MissingLaw(name.to_string()))
}

fn rel(u: &Universe, text: &str) -> Result<MultiRelation, RelError> {
    MultiRelation::parse_literal(u, text)
}

fn universe(names: &str) -> Universe {
    Universe::new(names.split(',')).expect("valid universe")
}

fn fact(label: &str, passed: bool, detail: impl Into<String>) -> ReproCheck {
    ReproCheck { label: label.to_string(), passed, detail: detail.into() }
}

/// The catalog law `name` fails at the given multirelations, with its
/// hypotheses satisfied.
fn violated(name: &str, u: &Universe, bindings: &[(&str, &str)]) -> Result<ReproCheck, ReproError> {
    let law = law(name)?;
    let mut env = HashMap::new();
    for (var, text) in bindings {
        env.insert(var.to_string(), rel(u, text)?);
    }
    let m = RelModel::new(u);
    Ok(match check_instance(&law, &m, &env)? {
        Instance::Violated { lhs, rhs } => {
            fact(name, true, format!("{} gives {lhs} {} {rhs}", law.conclusion, not(law.conclusion.rel)))
        }
        Instance::Satisfied => fact(name, false, format!("{} holds at the stored witness", law.conclusion)),
        Instance::Vacuous => fact(name, false, "a hypothesis fails at the stored witness"),
    })
}

fn not(rel: super::term::RelOp) -> &'static str {
    match rel {
        super::term::RelOp::Eq => "!=",
        super::term::RelOp::Leq => "not <=",
        super::term::RelOp::Neq => "=",
    }
}

/// The catalog law `name` fails on the builtin algebra at the given carrier
/// elements.
fn violated_in_algebra(name: &str, bindings: &[(&str, &str)]) -> Result<ReproCheck, ReproError> {
    let law = law(name)?;
    let alg = FiniteAlgebra::builtin();
    let mut env = HashMap::new();
    for (var, label) in bindings {
        env.insert(var.to_string(), alg.index_of(label)?);
    }
    Ok(match check_instance(&law, &alg, &env)? {
        Instance::Violated { lhs, rhs } => fact(
            name,
            true,
            format!("{} gives {} != {}", law.conclusion, alg.carrier()[lhs], alg.carrier()[rhs]),
        ),
        _ => fact(name, false, format!("{} holds at the stored witness", law.conclusion)),
    })
}

/// The hunter refutes `name` on multirelations of size at most 3.
fn hunted(name: &str) -> Result<ReproCheck, ReproError> {
    let h = hunt(&law(name)?, 3, DEFAULT_SAMPLES, DEFAULT_SEED)?;
    Ok(match h.verdict.witness() {
        Some(w) => fact(name, true, format!("hunter witness at n={}: {}", h.n, serde_json::Value::Object(w.bindings.clone()))),
        None => fact(name, false, format!("hunter found no witness up to n={}", h.n)),
    })
}

fn hunted_in_algebra(name: &str) -> Result<ReproCheck, ReproError> {
    let alg = FiniteAlgebra::builtin();
    let v = check_law(&law(name)?, &alg, SearchMode::Exhaustive)?;
    Ok(match v.witness() {
        Some(w) => fact(name, true, format!("witness {}", serde_json::Value::Object(w.bindings.clone()))),
        None => fact(name, false, format!("holds on {}", alg.label())),
    })
}

fn equals(label: &str, got: &MultiRelation, want: &MultiRelation) -> ReproCheck {
    fact(label, got == want, format!("{got}"))
}

fn mrcounter1() -> Result<Vec<ReproCheck>, ReproError> {
    let ab = universe("a,b");
    Ok(vec![
        // the printed R only pairs equal sources with themselves, so R || R = R;
        // two targets at one source are needed
        violated("mrcounter1-1", &ab, &[("x", "{(a,{a}), (a,{b})}")])?,
        violated("mrcounter1-2", &ab, &[("x", "{(a,{a})}"), ("y", "{(a,{a,b})}")])?,
        violated(
            "mrcounter1-3",
            &universe("a,b,c"),
            &[("x", "{(a,{b,c})}"), ("y", "{(a,{b})}"), ("z", "{(a,{c})}")],
        )?,
        hunted("mrcounter1-4")?,
        hunted("mrcounter1-5")?,
        violated("mrcounter1-6", &universe("a"), &[("x", "{(a,{a}), (a,{})}"), ("y", "{(a,{a})}"), ("z", "{}")])?,
    ])
}

fn interchangecounter() -> Result<Vec<ReproCheck>, ReproError> {
    let ab = universe("a,b");
    let r = "{(a,{a,b})}";
    let s = "{(a,{a}), (b,{a})}";
    let t = "{(a,{a}), (b,{a,b})}";
    let w1 = [("w", r), ("x", "{(a,{a}), (b,{b})}"), ("y", s), ("z", "{(a,{a}), (b,{b})}")];
    let w2 = [("x", r), ("y", r), ("z", s)];
    let w3 = [("x", r), ("y", s), ("z", t)];
    let w4 = [("x", r), ("y", s)];
    Ok(vec![
        violated("interchangecounter-1a", &ab, &w1)?,
        violated("interchangecounter-1b", &ab, &w1)?,
        violated("interchangecounter-2a", &ab, &w2)?,
        violated("interchangecounter-2b", &ab, &w2)?,
        violated("interchangecounter-3a", &ab, &w3)?,
        violated("interchangecounter-3b", &ab, &w3)?,
        violated("interchangecounter-4a", &ab, &w4)?,
        violated("interchangecounter-4b", &ab, &w4)?,
    ])
}

fn ctrioidcounter1() -> Result<Vec<ReproCheck>, ReproError> {
    let alg = FiniteAlgebra::builtin();
    let printed = ["0", "1s", "1s", "1s"];
    let derived = alg.domain_table();
    let xyz = [("x", "a"), ("y", "1p"), ("z", "0")];
    let xyp = [("x", "a"), ("y", "1p"), ("p", "0")];
    Ok(vec![
        fact("domain column", derived == printed, format!("{derived:?}")),
        violated_in_algebra("ctrioidcounter1-1", &xyz)?,
        violated_in_algebra("ctrioidcounter1-2", &xyz)?,
        violated_in_algebra("ctrioidcounter1-3", &xyp)?,
        violated_in_algebra("ctrioidcounter1-4", &xyp)?,
    ])
}

fn domrefs() -> Result<Vec<ReproCheck>, ReproError> {
    ["domrefs-1", "domrefs-2", "domrefs-3"].iter().map(|n| hunted_in_algebra(n)).collect()
}

fn nutauhomcounter() -> Result<Vec<ReproCheck>, ReproError> {
    let ab = universe("a,b");
    Ok(vec![
        violated("nutauhomcounter-1", &ab, &[("x", "{(a,{}), (b,{a})}"), ("y", "{(a,{})}")])?,
        violated("nutauhomcounter-2", &ab, &[("x", "{(a,{a,b})}"), ("y", "{(a,{}), (b,{a,b})}")])?,
        violated("nutauhomcounter-3", &ab, &[("x", "{(a,{a})}"), ("y", "{(a,{})}")])?,
    ])
}

fn nutauprecongcounter() -> Result<Vec<ReproCheck>, ReproError> {
    let ab = universe("a,b");
    let w1 = [("x", "{(a,{a})}"), ("y", "{}"), ("z", "{(a,{})}")];
    let w2 = [("x", "{(a,{})}"), ("y", "{}"), ("z", "{(a,{a})}")];
    let w3 = [("x", "{(a,{}), (b,{b})}"), ("y", "{(b,{b})}"), ("z", "{(a,{a,b})}")];
    Ok(vec![
        violated("nutauprecongcounter-1", &ab, &w1)?,
        violated("nutauprecongcounter-2", &ab, &w2)?,
        violated("nutauprecongcounter-3", &ab, &w3)?,
        violated("nutaucongcounter-1", &ab, &w1)?,
        violated("nutaucongcounter-2", &ab, &w2)?,
        violated("nutaucongcounter-3", &ab, &w3)?,
    ])
}

fn nsalgidealcounter() -> Result<Vec<ReproCheck>, ReproError> {
    let a = universe("a");
    let w = [("t", "{(a,{})}"), ("s", "{(a,{a})}")];
    Ok(vec![
        violated("nsalgidealcounter-1", &a, &w)?,
        violated("nsalgidealcounter-2", &a, &w)?,
        violated("nsalgidealcounter-3", &a, &w)?,
    ])
}

/// R and S over a, b, c whose binary omega is strictly above R^w + R^*S.
fn nu_witness() -> Result<(Universe, MultiRelation, MultiRelation), RelError> {
    let u = universe("a,b,c");
    let r = rel(&u, "{(a,{b,c}), (b,{a})}")?;
    let s = rel(&u, "{(c,{a})}")?;
    Ok((u, r, s))
}

/// {(a,A) : a in A} + {(b,A) : a in A} + {(c,{a})}, the greatest fixpoint of
/// X = S + R.X for the witness above.
fn nu_expected(u: &Universe) -> MultiRelation {
    let mut out = MultiRelation::empty(u);
    for bits in 0..(1u32 << 3) {
        let set = crate::universe::StateSet::from_bits(bits);
        if set.contains(0) {
            out.insert(0, set).expect("fits");
            out.insert(1, set).expect("fits");
        }
    }
    out.insert(2, crate::universe::StateSet::singleton(0)).expect("fits");
    out
}

fn nucounter() -> Result<Vec<ReproCheck>, ReproError> {
    let (u, r, s) = nu_witness()?;
    let omega = fixpoint::omega(&r);
    let star = fixpoint::star_binary(&r, &s)?;
    let nu = fixpoint::omega_binary(&r, &s)?;
    let lower = omega.union(&star)?;
    let strict = lower.is_subset(&nu)? && lower != nu;
    Ok(vec![
        equals("R^w is empty", &omega, &MultiRelation::empty(&u)),
        equals("least fixpoint R^*S", &star, &s),
        equals("greatest fixpoint R^wS", &nu, &nu_expected(&u)),
        fact("R^w + R^*S strictly below R^wS", strict, format!("{lower} < {nu}")),
        violated("nucounter", &u, &[("x", &r.to_string()), ("y", &s.to_string())])?,
    ])
}

fn inftycounter() -> Result<Vec<ReproCheck>, ReproError> {
    let (u, r, s) = nu_witness()?;
    let nu = fixpoint::omega_binary(&r, &s)?;
    let inf = fixpoint::infinity(&r);
    let prod = inf.seq(&s)?;
    Ok(vec![
        fact("R^wS differs from R^inf.S", nu != prod, format!("{nu} vs {prod}")),
        violated("inftycounter", &u, &[("x", &r.to_string()), ("y", &s.to_string())])?,
    ])
}

fn nustarcounter() -> Result<Vec<ReproCheck>, ReproError> {
    let u = universe("a,b,c,d");
    let r = rel(&u, "{(a,{b,c}), (b,{}), (c,{d})}")?;
    let a = u.index_of("a")?;
    let d = u.state_set(["d"])?;
    let lhs = structure::nu(&fixpoint::star(&r));
    let rhs = fixpoint::star(&structure::nu(&r));
    Ok(vec![
        fact("(a,{d}) in nu(R^*)", lhs.contains(a, d), format!("{lhs}")),
        fact("(a,{d}) not in nu(R)^*", !rhs.contains(a, d), format!("{rhs}")),
        violated("nustarcounter", &u, &[("x", &r.to_string())])?,
    ])
}

fn preservation() -> Result<Vec<ReproCheck>, ReproError> {
    let ab = universe("a,b");
    let subs = [("p", "{(a,{a})}"), ("q", "{}")];
    let terms = [("s", "{(a,{})}"), ("t", "{}")];
    Ok(vec![
        violated("nopres-sub-term-seq", &ab, &subs)?,
        violated("nopres-sub-vec-seq", &ab, &subs)?,
        violated("nopres-term-sub-seq", &ab, &terms)?,
        violated("nopres-term-vec-seq", &ab, &terms)?,
        violated("nopres-vec-sub-seq", &ab, &[("v", "{(a,{}), (a,{a}), (a,{b}), (a,{a,b})}"), ("w", "{}")])?,
        violated("nopres-n-sub-vec-seq", &ab, &[("p", "{(a,{a})}"), ("q", "{(b,{b})}")])?,
        violated("nopres-n-vec-sub-seq", &ab, &[("x", "{(a,{a})}"), ("y", "{(b,{b})}")])?,
        violated("nopres-n-term-vec-seq", &ab, &terms)?,
        violated("nopres-n-vec-term-seq", &ab, &[("x", "{(a,{a})}"), ("y", "{}")])?,
    ])
}

fn upclosed_peleg() -> Result<Vec<ReproCheck>, ReproError> {
    let ab = universe("a,b");
    let base = rel(&ab, "{(a,{})}")?;
    let r = base.par(&MultiRelation::univ(&ab))?;
    let s = MultiRelation::empty(&ab);
    let prod = r.seq(&s)?;
    let up = |x: &MultiRelation| structure::is_in_class(x, ClassTag::UpClosed);
    Ok(vec![
        fact("R and S up-closed", up(&r) && up(&s), format!("R = {r}")),
        equals("R.S = {(a,{})}", &prod, &base),
        fact("R.S not up-closed", !up(&prod), format!("{prod}")),
        violated("peleg-upclosed", &ab, &[("x", &r.to_string()), ("y", &s.to_string())])?,
    ])
}

fn reldomain() -> Result<Vec<ReproCheck>, ReproError> {
    Ok(vec![violated("domain-relational", &universe("a"), &[("x", "{(a,{})}")])?])
}

fn vector_terminal() -> Result<Vec<ReproCheck>, ReproError> {
    let ab = universe("a,b");
    let t = MultiRelation::univ(&ab).seq(&MultiRelation::empty(&ab))?;
    Ok(vec![
        equals("U.0 = 1p", &t, &MultiRelation::one_pi(&ab)),
        fact("U.0 is not a vector", !structure::is_in_class(&t, ClassTag::Vector), format!("{t}")),
        violated("vector-terminal", &ab, &[])?,
    ])
}

pub fn repro_item(name: &str) -> Result<ReproItem, ReproError> {
    let checks = match name {
        "mrcounter1" => mrcounter1()?,
        "interchangecounter" => interchangecounter()?,
        "ctrioidcounter1" => ctrioidcounter1()?,
        "domrefs" => domrefs()?,
        "nutauhomcounter" => nutauhomcounter()?,
        "nutauprecongcounter" => nutauprecongcounter()?,
        "nsalgidealcounter" => nsalgidealcounter()?,
        "nucounter" => nucounter()?,
        "inftycounter" => inftycounter()?,
        "nustarcounter" => nustarcounter()?,
        "preservation" => preservation()?,
        "upclosed-peleg" => upclosed_peleg()?,
        "reldomain" => reldomain()?,
        "vector-terminal" => vector_terminal()?,
        other => return Err(ReproError::Unknown(other.to_string())),
    };
    Ok(ReproItem { name: name.to_string(), checks })
}

pub fn repro_all() -> Result<Vec<ReproItem>, ReproError> {
    REPRO_NAMES.iter().map(|n| repro_item(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_name() {
        assert_eq!(repro_item("nope"), Err(ReproError::Unknown("nope".into())));
    }

    #[test]
    fn upclosed_item_passes() {
        let item = repro_item("upclosed-peleg").unwrap();
        assert_eq!(item.outcome(), ReproOutcome::Pass, "{:?}", item.lines());
    }
}
