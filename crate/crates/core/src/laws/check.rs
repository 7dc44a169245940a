//! Checking laws against a model, hunting counterexamples, and checking
//! finite algebras.

use std::collections::HashMap;

use serde::Serialize;
use serde_json::{Map, Value};
use thiserror::Error;

use super::algebra::FiniteAlgebra;
use super::catalog;
use super::model::{Compiled, Domain, EvalError, Model, RelModel};
use super::term::{Atom, Law, RelOp};
use crate::error::RelError;
use crate::relation::MultiRelation;
use crate::space::{rng_from_seed, SearchMode, DEFAULT_SEED};

/// Exhaustive checks are refused above this many assignments.
pub const EXHAUSTIVE_LIMIT: u128 = 1 << 26;

/// Above this many assignments the hunter and the suite sample instead.
pub const AUTO_EXHAUSTIVE_LIMIT: u128 = 1 << 20;

/// Samples drawn when a space is too large to enumerate.
pub const DEFAULT_SAMPLES: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("exhaustive search over {size} assignments exceeds the limit of {limit}")]
    TooLarge { size: u128, limit: u128 },
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Rel(#[from] RelError),
}

/// What a verdict was computed over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchSpace {
    pub model: String,
    pub exhaustive: bool,
    /// Assignments tried.
    pub assignments: u64,
    /// Assignments that satisfied the hypotheses.
    pub admitted: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// A violating assignment together with both sides of the conclusion.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub law: String,
    pub model: String,
    pub bindings: Map<String, Value>,
    pub lhs: Value,
    pub rhs: Value,
}

impl Witness {
    /// The bindings read back as multirelations.
    pub fn relations(&self) -> Result<HashMap<String, MultiRelation>, RelError> {
        self.bindings
            .iter()
            .map(|(k, v)| {
                let r: MultiRelation =
                    serde_json::from_value(v.clone()).map_err(|e| RelError::Json(e.to_string()))?;
                Ok((k.clone(), r))
            })
            .collect()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("witness serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Holds(SearchSpace),
    Refuted(Witness),
    /// Sampled search without a witness.
    Inconclusive(SearchSpace),
}

impl Verdict {
    pub fn status(&self) -> &'static str {
        match self {
            Verdict::Holds(_) => "HOLDS",
            Verdict::Refuted(_) => "REFUTED",
            Verdict::Inconclusive(_) => "INCONCLUSIVE",
        }
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Verdict::Refuted(_))
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Refuted(w) => Some(w),
            _ => None,
        }
    }

    /// `LAW <name> <STATUS> [witness-json]`.
    pub fn line(&self, name: &str) -> String {
        match self {
            Verdict::Refuted(w) => format!("LAW {name} REFUTED {}", w.to_json_string()),
            other => format!("LAW {name} {}", other.status()),
        }
    }
}

struct Compiledlaw {
    hyps: Vec<(Compiled, RelOp, Compiled)>,
    lhs: Compiled,
    rel: RelOp,
    rhs: Compiled,
}

enum Outcome<E> {
    Skipped,
    Passed,
    Failed(E, E),
}

fn related<M: Model>(m: &M, rel: RelOp, l: &M::Elem, r: &M::Elem) -> bool {
    match rel {
        RelOp::Eq => l == r,
        RelOp::Leq => m.leq(l, r),
        RelOp::Neq => l != r,
    }
}

impl Compiledlaw {
    fn new(law: &Law, vars: &[(String, crate::structure::ClassTag)]) -> Self {
        let atom = |a: &Atom| (Compiled::new(&a.lhs, vars), a.rel, Compiled::new(&a.rhs, vars));
        let (lhs, rel, rhs) = atom(&law.conclusion);
        Compiledlaw { hyps: law.hypotheses.iter().map(atom).collect(), lhs, rel, rhs }
    }

    fn test<M: Model>(&self, m: &M, vals: &[M::Elem]) -> Result<Outcome<M::Elem>, EvalError> {
        for (l, rel, r) in &self.hyps {
            if !related(m, *rel, &l.eval(m, vals)?, &r.eval(m, vals)?) {
                return Ok(Outcome::Skipped);
            }
        }
        let l = self.lhs.eval(m, vals)?;
        let r = self.rhs.eval(m, vals)?;
        Ok(if related(m, self.rel, &l, &r) { Outcome::Passed } else { Outcome::Failed(l, r) })
    }
}

/// Result of testing a law at one assignment.
#[derive(Clone, Debug, PartialEq)]
pub enum Instance<E> {
    /// Some hypothesis is false.
    Vacuous,
    Satisfied,
    Violated { lhs: E, rhs: E },
}

/// Tests `law` at a single assignment, checking sorts as [`eval_in`] does.
///
/// [`eval_in`]: super::model::eval_in
pub fn check_instance<M: Model>(law: &Law, m: &M, env: &HashMap<String, M::Elem>) -> Result<Instance<M::Elem>, CheckError> {
    let vars = law.variables();
    let mut vals = Vec::with_capacity(vars.len());
    for (name, sort) in &vars {
        let v = env.get(name).ok_or_else(|| EvalError::Unbound(name.clone()))?;
        if !m.in_sort(v, *sort)? {
            return Err(EvalError::SortViolation { name: name.clone(), sort: *sort }.into());
        }
        vals.push(v.clone());
    }
    Ok(match Compiledlaw::new(law, &vars).test(m, &vals)? {
        Outcome::Skipped => Instance::Vacuous,
        Outcome::Passed => Instance::Satisfied,
        Outcome::Failed(lhs, rhs) => Instance::Violated { lhs, rhs },
    })
}

/// Number of sorted assignments of the law's variables in `m`; saturates.
pub fn assignment_count<M: Model>(law: &Law, m: &M) -> Result<u128, CheckError> {
    let mut total: u128 = 1;
    for (_, sort) in law.variables() {
        total = total.saturating_mul(m.domain(sort)?.size());
    }
    Ok(total)
}

/// Checks `law` in `m`. Exhaustive mode walks assignments in canonical order
/// (first variable slowest), so the reported witness is the first violating
/// one in that order.
pub fn check_law<M: Model>(law: &Law, m: &M, mode: SearchMode) -> Result<Verdict, CheckError> {
    let vars = law.variables();
    let domains: Vec<M::Dom> = vars.iter().map(|(_, s)| m.domain(*s)).collect::<Result<_, _>>()?;
    let compiled = Compiledlaw::new(law, &vars);
    let witness = |vals: &[M::Elem], l: &M::Elem, r: &M::Elem| Witness {
        law: law.name.clone(),
        model: m.label(),
        bindings: vars.iter().zip(vals).map(|((name, _), v)| (name.clone(), m.to_json(v))).collect(),
        lhs: m.to_json(l),
        rhs: m.to_json(r),
    };
    let mut tried = 0u64;
    let mut admitted = 0u64;
    match mode {
        SearchMode::Exhaustive => {
            let size = domains.iter().fold(1u128, |acc, d| acc.saturating_mul(d.size()));
            if size > EXHAUSTIVE_LIMIT {
                return Err(CheckError::TooLarge { size, limit: EXHAUSTIVE_LIMIT });
            }
            let sizes: Vec<u64> = domains.iter().map(|d| d.size() as u64).collect();
            let tables: Vec<Option<Vec<M::Elem>>> = domains
                .iter()
                .zip(&sizes)
                .map(|(d, &s)| (s <= 1 << 16).then(|| (0..s).map(|i| d.nth(i)).collect()))
                .collect();
            let elem = |k: usize, i: u64| match &tables[k] {
                Some(t) => t[i as usize].clone(),
                None => domains[k].nth(i),
            };
            if sizes.iter().all(|&s| s > 0) {
                let mut idx = vec![0u64; vars.len()];
                let mut vals: Vec<M::Elem> = (0..vars.len()).map(|k| elem(k, 0)).collect();
                loop {
                    tried += 1;
                    match compiled.test(m, &vals)? {
                        Outcome::Skipped => {}
                        Outcome::Passed => admitted += 1,
                        Outcome::Failed(l, r) => return Ok(Verdict::Refuted(witness(&vals, &l, &r))),
                    }
                    // advance the mixed-radix counter, last variable fastest
                    let mut k = vars.len();
                    loop {
                        if k == 0 {
                            let space = SearchSpace { model: m.label(), exhaustive: true, assignments: tried, admitted, seed: None };
                            return Ok(Verdict::Holds(space));
                        }
                        k -= 1;
                        idx[k] += 1;
                        if idx[k] < sizes[k] {
                            vals[k] = elem(k, idx[k]);
                            break;
                        }
                        idx[k] = 0;
                        vals[k] = elem(k, 0);
                    }
                }
            }
            let space = SearchSpace { model: m.label(), exhaustive: true, assignments: 0, admitted: 0, seed: None };
            Ok(Verdict::Holds(space))
        }
        SearchMode::Sampled { samples, seed } => {
            let mut rng = rng_from_seed(seed);
            for _ in 0..samples {
                let vals: Vec<M::Elem> = domains.iter().map(|d| d.sample(&mut rng)).collect();
                tried += 1;
                match compiled.test(m, &vals)? {
                    Outcome::Skipped => {}
                    Outcome::Passed => admitted += 1,
                    Outcome::Failed(l, r) => return Ok(Verdict::Refuted(witness(&vals, &l, &r))),
                }
            }
            let space = SearchSpace { model: m.label(), exhaustive: false, assignments: tried, admitted, seed: Some(seed) };
            Ok(Verdict::Inconclusive(space))
        }
    }
}

/// [`check_law`] on multirelations over a universe of `n` elements.
pub fn check_law_at(law: &Law, n: usize, mode: SearchMode) -> Result<Verdict, CheckError> {
    check_law(law, &RelModel::of_size(n)?, mode)
}

/// Exhaustive when the space has at most [`AUTO_EXHAUSTIVE_LIMIT`]
/// assignments, otherwise `samples` seeded draws.
pub fn auto_mode<M: Model>(law: &Law, m: &M, samples: usize, seed: u64) -> Result<SearchMode, CheckError> {
    Ok(if assignment_count(law, m)? <= AUTO_EXHAUSTIVE_LIMIT {
        SearchMode::Exhaustive
    } else {
        SearchMode::Sampled { samples, seed }
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HuntResult {
    /// Universe size of the last stage searched.
    pub n: usize,
    pub verdict: Verdict,
}

/// Searches multirelations for a counterexample: every assignment at `n = 1`,
/// then `n = 2` (sampled when the space exceeds [`AUTO_EXHAUSTIVE_LIMIT`]),
/// then seeded samples at each larger `n` up to `max_n`.
pub fn hunt(law: &Law, max_n: usize, samples: usize, seed: u64) -> Result<HuntResult, CheckError> {
    let mut last = None;
    let mut all_exhaustive = true;
    for n in 1..=max_n {
        let m = RelModel::of_size(n)?;
        let mode = if n == 1 { SearchMode::Exhaustive } else if n == 2 { auto_mode(law, &m, samples, seed)? } else {
            SearchMode::Sampled { samples, seed }
        };
        let verdict = check_law(law, &m, mode)?;
        if verdict.is_refuted() {
            return Ok(HuntResult { n, verdict });
        }
        all_exhaustive &= verdict.holds();
        last = Some((n, verdict));
    }
    match last {
        Some((n, Verdict::Holds(space))) if !all_exhaustive => Ok(HuntResult { n, verdict: Verdict::Inconclusive(space) }),
        Some((n, verdict)) => Ok(HuntResult { n, verdict }),
        None => Ok(HuntResult {
            n: 0,
            verdict: Verdict::Inconclusive(SearchSpace {
                model: "relations".into(),
                exhaustive: false,
                assignments: 0,
                admitted: 0,
                seed: Some(DEFAULT_SEED),
            }),
        }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AxiomSet {
    CMonoid,
    CTrioid,
}

impl AxiomSet {
    pub fn laws(self) -> Vec<Law> {
        match self {
            AxiomSet::CMonoid => catalog::cmonoid_axioms(),
            AxiomSet::CTrioid => catalog::ctrioid_axioms(),
        }
    }
}

/// Per-law verdicts of a finite-algebra check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlgebraReport {
    pub algebra: String,
    pub axioms: Vec<(String, Verdict)>,
    /// The catalog laws stated for finite algebras that are expected to fail.
    pub refutations: Vec<(String, Verdict)>,
}

impl AlgebraReport {
    /// Holds if every axiom holds; otherwise the first refuted axiom.
    pub fn verdict(&self) -> Verdict {
        let assignments = self
            .axioms
            .iter()
            .map(|(_, v)| match v {
                Verdict::Holds(s) | Verdict::Inconclusive(s) => s.assignments,
                Verdict::Refuted(_) => 0,
            })
            .sum();
        let admitted = self
            .axioms
            .iter()
            .map(|(_, v)| match v {
                Verdict::Holds(s) | Verdict::Inconclusive(s) => s.admitted,
                Verdict::Refuted(_) => 0,
            })
            .sum();
        self.axioms
            .iter()
            .find(|(_, v)| v.is_refuted())
            .map(|(_, v)| v.clone())
            .unwrap_or(Verdict::Holds(SearchSpace {
                model: format!("algebra {}", self.algebra),
                exhaustive: true,
                assignments,
                admitted,
                seed: None,
            }))
    }

    /// Axioms hold and every expected refutation is refuted.
    pub fn as_expected(&self) -> bool {
        self.axioms.iter().all(|(_, v)| v.holds()) && self.refutations.iter().all(|(_, v)| v.is_refuted())
    }
}

/// Checks an axiom set over all carrier tuples, and the catalog's expected
/// refutations for finite algebras.
pub fn check_algebra(alg: &FiniteAlgebra, axioms: AxiomSet) -> Result<AlgebraReport, CheckError> {
    let run = |law: &Law| check_law(law, alg, SearchMode::Exhaustive).map(|v| (law.name.clone(), v));
    let axiom_verdicts = axioms.laws().iter().map(run).collect::<Result<_, _>>()?;
    let refutations = catalog::catalog()
        .iter()
        .filter(|l| l.model.covers_algebra() && l.expected == super::term::Expected::Refuted)
        .map(run)
        .collect::<Result<_, _>>()?;
    Ok(AlgebraReport { algebra: alg.name().to_string(), axioms: axiom_verdicts, refutations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::parse::parse_law;

    #[test]
    fn par_commutes_over_all_pairs() {
        let law = parse_law("parcomm", "x || y = y || x").unwrap();
        let v = check_law_at(&law, 2, SearchMode::Exhaustive).unwrap();
        let Verdict::Holds(space) = v else { panic!("{v:?}") };
        assert_eq!(space.assignments, 256 * 256);
        assert!(space.exhaustive);
    }

    #[test]
    fn first_witness_in_canonical_order() {
        let law = parse_law("sub", "x <= x || y").unwrap();
        let v = check_law_at(&law, 1, SearchMode::Exhaustive).unwrap();
        let w = v.witness().expect("refuted");
        // x = {(a,{})}, y = ∅ is the first violating pair at n = 1
        assert_eq!(w.bindings["x"]["pairs"], serde_json::json!([["a", []]]));
        assert_eq!(w.bindings["y"]["pairs"], serde_json::json!([]));
        assert!(v.line("sub").starts_with("LAW sub REFUTED {"));
    }

    #[test]
    fn hypotheses_filter_assignments() {
        let law = parse_law("h", "x = 0 => x . y = 0").unwrap();
        let Verdict::Holds(space) = check_law_at(&law, 1, SearchMode::Exhaustive).unwrap() else { panic!() };
        assert_eq!(space.assignments, 16);
        assert_eq!(space.admitted, 4);
    }

    #[test]
    fn sorted_variables_shrink_the_space() {
        let law = parse_law("s", "p:sub . p = p").unwrap();
        let Verdict::Holds(space) = check_law_at(&law, 3, SearchMode::Exhaustive).unwrap() else { panic!() };
        assert_eq!(space.assignments, 8);
    }

    #[test]
    fn exhaustive_refused_when_too_large() {
        let law = parse_law("big", "x . (y . z) = (x . y) . z").unwrap();
        assert!(matches!(check_law_at(&law, 3, SearchMode::Exhaustive), Err(CheckError::TooLarge { .. })));
    }

    #[test]
    fn sampled_is_inconclusive_without_witness() {
        let law = parse_law("u", "x + y = y + x").unwrap();
        let v = check_law_at(&law, 3, SearchMode::sampled(100)).unwrap();
        assert_eq!(v.status(), "INCONCLUSIVE");
    }

    #[test]
    fn hunter_finds_associativity_failure() {
        let law = parse_law("assoc", "x . (y . z) <= (x . y) . z").unwrap();
        let h = hunt(&law, 3, DEFAULT_SAMPLES, DEFAULT_SEED).unwrap();
        let w = h.verdict.witness().expect("refuted");
        let env = w.relations().unwrap();
        let u = env["x"].universe().clone();
        let lhs = crate::laws::eval_term(&law.conclusion.lhs, &u, &env).unwrap();
        let rhs = crate::laws::eval_term(&law.conclusion.rhs, &u, &env).unwrap();
        assert!(!lhs.is_subset(&rhs).unwrap());
    }
}
