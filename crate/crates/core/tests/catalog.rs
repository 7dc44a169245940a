use multirel::laws::{catalog, run_suite, Expected, LawModel, Verdict};
use multirel::space::SearchMode;

#[test]
fn whole_catalog_matches_expectations() {
    let report = run_suite(2, SearchMode::Exhaustive).unwrap();
    assert_eq!(report.entries.len(), catalog().len());
    let mismatches: Vec<_> = report.mismatches().iter().map(|e| e.line()).collect();
    assert!(mismatches.is_empty(), "{mismatches:#?}");
    for e in &report.entries {
        if e.expected == Expected::Refuted {
            assert!(matches!(e.verdict(), Verdict::Refuted(_)), "{}", e.law);
        }
    }
}

#[test]
fn laws_print_and_parse_back() {
    for law in catalog() {
        let again = multirel::laws::parse_law(&law.name, &law.text()).unwrap();
        assert_eq!(again.hypotheses, law.hypotheses, "{}", law.name);
        assert_eq!(again.conclusion, law.conclusion, "{}", law.name);
    }
}

#[test]
fn algebra_laws_are_few() {
    let alg_only = catalog().into_iter().filter(|l| l.model == LawModel::Algebra).count();
    assert_eq!(alg_only, 7);
}
