use std::collections::HashMap;

use multirel::fixpoint::{self, nabla, omega, omega_binary, star, star_binary};
use multirel::laws::{self, check_instance, find_law, hunt, Instance, RelModel, Verdict};
use multirel::structure::{domain, is_in_class, nu, tau, up_closure, ClassTag};
use multirel::{MultiRelation, Universe};
use proptest::prelude::*;

fn rel_in(n: usize) -> impl Strategy<Value = MultiRelation> {
    any::<u64>().prop_map(move |code| MultiRelation::from_code(&Universe::of_size(n).unwrap(), code))
}

fn two() -> impl Strategy<Value = (MultiRelation, MultiRelation)> {
    (1usize..=3).prop_flat_map(|n| (rel_in(n), rel_in(n)))
}

fn three() -> impl Strategy<Value = (MultiRelation, MultiRelation, MultiRelation)> {
    (1usize..=3).prop_flat_map(|n| (rel_in(n), rel_in(n), rel_in(n)))
}

proptest! {
    #[test]
    fn json_and_literal_round_trip(r in (1usize..=3).prop_flat_map(rel_in)) {
        prop_assert_eq!(MultiRelation::from_json_str(&r.to_json_string()).unwrap(), r.clone());
        prop_assert_eq!(MultiRelation::parse_literal(r.universe(), &r.to_string()).unwrap(), r);
    }

    #[test]
    fn seq_units_and_zero(r in (1usize..=3).prop_flat_map(rel_in)) {
        let u = r.universe().clone();
        let one = MultiRelation::one_sigma(&u);
        let zero = MultiRelation::empty(&u);
        prop_assert_eq!(one.seq(&r).unwrap(), r.clone());
        prop_assert_eq!(r.seq(&one).unwrap(), r.clone());
        prop_assert_eq!(zero.seq(&r).unwrap(), zero.clone());
        prop_assert_eq!(r.par(&MultiRelation::one_pi(&u)).unwrap(), r.clone());
        prop_assert_eq!(r.par(&zero).unwrap(), zero);
    }

    #[test]
    fn par_is_commutative((r, s) in two()) {
        prop_assert_eq!(r.par(&s).unwrap(), s.par(&r).unwrap());
    }

    #[test]
    fn par_assoc_and_seq_right_distributes((r, s, t) in three()) {
        prop_assert_eq!(r.par(&s.par(&t).unwrap()).unwrap(), r.par(&s).unwrap().par(&t).unwrap());
        prop_assert_eq!(r.union(&s).unwrap().seq(&t).unwrap(), r.seq(&t).unwrap().union(&s.seq(&t).unwrap()).unwrap());
        // only one half of associativity survives
        let lhs = r.seq(&s).unwrap().seq(&t).unwrap();
        prop_assert!(lhs.is_subset(&r.seq(&s.seq(&t).unwrap()).unwrap()).unwrap());
    }

    #[test]
    fn projections_split_every_relation(r in (1usize..=3).prop_flat_map(rel_in)) {
        let u = r.universe().clone();
        prop_assert_eq!(tau(&r).union(&nu(&r)).unwrap(), r.clone());
        prop_assert!(tau(&r).inter(&nu(&r)).unwrap().is_empty());
        prop_assert!(is_in_class(&tau(&r), ClassTag::Terminal));
        prop_assert!(is_in_class(&nu(&r), ClassTag::Nonterminal));
        let d = domain(&r);
        prop_assert!(d.is_subset(&MultiRelation::one_sigma(&u)).unwrap());
        prop_assert_eq!(d.seq(&r).unwrap(), r);
    }

    #[test]
    fn up_closure_is_a_closure(r in (1usize..=3).prop_flat_map(rel_in)) {
        let c = up_closure(&r);
        prop_assert!(r.is_subset(&c).unwrap());
        prop_assert_eq!(up_closure(&c), c.clone());
        prop_assert!(is_in_class(&c, ClassTag::UpClosed));
        prop_assert_eq!(c.par(&MultiRelation::univ(r.universe())).unwrap(), c);
    }

    #[test]
    fn fixpoints_are_fixed((r, s) in two()) {
        let u = r.universe().clone();
        let one = MultiRelation::one_sigma(&u);
        let st = star(&r);
        prop_assert_eq!(one.union(&r.seq(&st).unwrap()).unwrap(), st);
        let sb = star_binary(&r, &s).unwrap();
        prop_assert_eq!(s.union(&r.seq(&sb).unwrap()).unwrap(), sb.clone());
        let w = omega(&r);
        prop_assert_eq!(r.seq(&w).unwrap(), w.clone());
        let wb = omega_binary(&r, &s).unwrap();
        prop_assert_eq!(s.union(&r.seq(&wb).unwrap()).unwrap(), wb.clone());
        prop_assert!(sb.union(&w).unwrap().is_subset(&wb).unwrap());
        let nb = nabla(&r);
        prop_assert_eq!(domain(&r.seq(&nb).unwrap()), nb);
    }

    #[test]
    fn fixpoint_ops_report_convergence(r in (1usize..=2).prop_flat_map(rel_in)) {
        for name in ["star", "omega", "infinity", "nabla"] {
            let op = fixpoint::FixOp::from_name(name).unwrap();
            let res = op.run(&r, None).unwrap();
            prop_assert!(res.converged);
            prop_assert!(res.iterations <= fixpoint::iteration_cap(r.universe().len()));
        }
    }

    #[test]
    fn valid_laws_hold_on_random_instances((x, y, z) in three()) {
        let env: HashMap<String, MultiRelation> =
            [("x", x), ("y", y), ("z", z)].into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        let m = RelModel::new(env["x"].universe());
        for name in ["c1", "c2", "c3", "c4", "c5", "c6", "cl4", "seq-subdist", "par-dist"] {
            let law = find_law(name).unwrap();
            let got = check_instance(&law, &m, &env).unwrap();
            prop_assert!(!matches!(got, Instance::Violated { .. }), "{} fails at {:?}", name, env);
        }
    }
}

#[test]
fn refutation_witnesses_re_evaluate() {
    for law in laws::catalog().into_iter().filter(|l| l.name.starts_with("mrcounter1") || l.name.starts_with("nopres-")) {
        let Verdict::Refuted(w) = hunt(&law, 3, 20_000, 7).unwrap().verdict else {
            panic!("{} not refuted", law.name);
        };
        let env = w.relations().unwrap();
        let m = RelModel::new(env.values().next().unwrap().universe());
        let got = check_instance(&law, &m, &env).unwrap();
        let Instance::Violated { lhs, rhs } = got else { panic!("{} witness does not violate", law.name) };
        assert_eq!(serde_json::to_value(&lhs).unwrap(), w.lhs, "{}", law.name);
        assert_eq!(serde_json::to_value(&rhs).unwrap(), w.rhs, "{}", law.name);
    }
}

#[test]
fn seeded_runs_are_deterministic() {
    let law = find_law("cl4").unwrap();
    let m = RelModel::of_size(3).unwrap();
    let mode = multirel::space::SearchMode::Sampled { samples: 2_000, seed: 9 };
    assert_eq!(laws::check_law(&law, &m, mode).unwrap(), laws::check_law(&law, &m, mode).unwrap());
    let law = find_law("mrcounter1-3").unwrap();
    assert_eq!(hunt(&law, 3, 5_000, 3).unwrap(), hunt(&law, 3, 5_000, 3).unwrap());
}
