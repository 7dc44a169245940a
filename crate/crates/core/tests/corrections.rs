//! Values that differ from the literature as printed, pinned so the corrected
//! forms used elsewhere stay justified.

use std::collections::HashMap;

use multirel::fixpoint;
use multirel::laws::{check_instance, find_law, parse_law, Instance, RelModel};
use multirel::{MultiRelation, Universe};

fn uni(names: &str) -> Universe {
    Universe::new(names.split(',')).unwrap()
}

fn rel(u: &Universe, text: &str) -> MultiRelation {
    MultiRelation::parse_literal(u, text).unwrap()
}

fn instance(law: &multirel::laws::Law, u: &Universe, env: &[(&str, &str)]) -> Instance<MultiRelation> {
    let env: HashMap<String, MultiRelation> = env.iter().map(|(k, v)| (k.to_string(), rel(u, v))).collect();
    check_instance(law, &RelModel::new(u), &env).unwrap()
}

#[test]
fn par_square_of_two_sources_is_itself() {
    let u = uni("a,b");
    let r = rel(&u, "{(a,{a}), (b,{b})}");
    assert_eq!(r.par(&r).unwrap(), r);
}

#[test]
fn interchange_with_shared_rows_is_not_a_counterexample() {
    let u = uni("a,b");
    let r = "{(a,{a}), (b,{a,b})}";
    let s = "{(a,{a}), (b,{a})}";
    let env = [("w", r), ("x", s), ("y", r), ("z", s)];
    for name in ["interchangecounter-1a", "interchangecounter-1b"] {
        assert_eq!(instance(&find_law(name).unwrap(), &u, &env), Instance::Satisfied, "{name}");
    }
}

#[test]
fn par_split_with_swapped_domain_factors_fails() {
    let law = parse_law(
        "swapped",
        "x || y = nu(x) || nu(y) + d(nu(x)).tau(y) + d(nu(y)).tau(x) + tau(x) || tau(y)",
    )
    .unwrap();
    let u = uni("a,b");
    assert!(matches!(instance(&law, &u, &[("x", "{(a,{a})}"), ("y", "{(a,{})}")]), Instance::Violated { .. }));
}

#[test]
fn subassociativity_goes_one_way_only() {
    let u = uni("a,b");
    let law = find_law("seq-subassoc").unwrap();
    let env = [("x", "{(b,{a,b})}"), ("y", "{(a,{a}), (a,{b}), (b,{a}), (b,{b}), (b,{a,b})}"), ("z", "{(a,{a}), (a,{b})}")];
    assert_eq!(instance(&law, &u, &env), Instance::Satisfied);
}

#[test]
fn terminal_part_of_top_is_the_parallel_unit() {
    let u = uni("a,b");
    let top = MultiRelation::univ(&u);
    assert_eq!(multirel::structure::tau(&top), MultiRelation::one_pi(&u));
    assert_ne!(multirel::structure::tau(&top), MultiRelation::co_one_pi(&u));
}

#[test]
fn printed_least_fixpoint_is_not_a_fixpoint() {
    let u = uni("a,b,c");
    let r = rel(&u, "{(a,{b,c}), (b,{a})}");
    let s = rel(&u, "{(c,{a})}");
    let printed = rel(&u, "{(a,{a}), (a,{b,c}), (b,{a}), (b,{b,c}), (c,{a})}");
    let step = s.union(&r.seq(&printed).unwrap()).unwrap();
    assert_ne!(step, printed);
    assert_eq!(fixpoint::star_binary(&r, &s).unwrap(), s);
}

#[test]
fn infinite_iterate_times_s_is_not_empty() {
    let u = uni("a,b,c");
    let r = rel(&u, "{(a,{b,c}), (b,{a})}");
    let s = rel(&u, "{(c,{a})}");
    let prod = fixpoint::infinity(&r).seq(&s).unwrap();
    assert!(prod.contains(2, multirel::StateSet::singleton(0)));
}

#[test]
fn precongruence_witness_uses_s_on_the_right() {
    let u = uni("a,b");
    let law = find_law("nutauprecongcounter-3").unwrap();
    let env = [("x", "{(a,{}), (b,{b})}"), ("y", "{(b,{b})}"), ("z", "{(a,{a,b})}")];
    assert!(matches!(instance(&law, &u, &env), Instance::Violated { .. }));
}
