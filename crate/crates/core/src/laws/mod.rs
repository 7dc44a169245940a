//! A term language over the signature, a catalog of laws, and a checker that
//! either confirms a law on small universes or hunts for a counterexample.

pub mod algebra;
pub mod catalog;
pub mod check;
pub mod model;
pub mod parse;
pub mod repro;
pub mod suite;
pub mod term;

pub use algebra::{AlgebraError, AlgebraJson, FiniteAlgebra};
pub use catalog::{catalog, find_law};
pub use check::{
    check_algebra, check_instance, check_law, check_law_at, hunt, AlgebraReport, AxiomSet, CheckError, HuntResult, Instance, SearchSpace,
    Verdict, Witness,
};
pub use model::{eval_in, eval_term, Domain, EvalError, Model, RelModel};
pub use parse::{parse_law, parse_law_text, parse_term, ParseError};
pub use repro::{repro_all, repro_item, ReproCheck, ReproError, ReproItem, ReproOutcome, REPRO_NAMES};
pub use suite::{run_law, run_suite, run_suite_with, SuiteEntry, SuiteOptions, SuiteReport};
pub use term::{Atom, BinOp, Const, Expected, Law, LawJson, LawModel, RelOp, Term, TermError, UnOp};
