use fermat_zagreb::verify::{
    check_inequality_claim, family_instances, search_counterexample, Analysis, FamilyInstance,
    InequalityClaim, SearchConfig, Strategy,
};
use fermat_zagreb::{full_report, graph6, parse_edge_list, to_edge_list, Sign};

#[test]
fn failing_claim_fails_again_from_its_witness() {
    let inst = FamilyInstance::ThetaTail {
        a: 1,
        b: 2,
        c: 3,
        at: 2,
        tail: 7,
    };
    let g = inst.build();
    assert_eq!(g.n(), 12);
    let first = check_inequality_claim(&g, InequalityClaim::Holds).unwrap();
    assert!(!first.passed);
    assert!(first.detail.contains("sign=positive"), "{}", first.detail);

    let from_g6 = graph6::decode(&first.instance).unwrap();
    let again = check_inequality_claim(&from_g6, InequalityClaim::Holds).unwrap();
    assert_eq!(again, first);

    let from_edges = parse_edge_list(&to_edge_list(&from_g6), true).unwrap();
    let third = check_inequality_claim(&from_edges, InequalityClaim::Holds).unwrap();
    assert!(!third.passed);
    assert_eq!(third.detail, first.detail);
}

#[test]
fn multicyclic_claims_are_recorded_without_judgment() {
    let g = FamilyInstance::ThetaTail {
        a: 1,
        b: 2,
        c: 3,
        at: 2,
        tail: 7,
    }
    .build();
    let out =
        check_inequality_claim(&g, InequalityClaim::for_class(g.classify().unwrap().tag)).unwrap();
    assert!(out.passed);
    assert!(out.detail.contains("sign=positive"));
}

#[test]
fn search_findings_reproduce() {
    let s = search_counterexample(&SearchConfig::new(Strategy::FamilySweep)).unwrap();
    assert!(s.complete);
    for f in s.positive.iter().chain(s.negative.iter().take(50)) {
        let g = f.graph();
        let r = full_report(&g).unwrap();
        assert_eq!(
            (r.n, r.m, r.f1, r.f2, r.comparison),
            (f.n, f.m, f.f1, f.f2, Some(f.comparison)),
            "{}",
            f.name
        );
        assert!(f.cyclomatic >= 2);
    }
    let smallest = &s.positive[0];
    assert_eq!(smallest.comparison, Sign::Positive);
    assert!(family_instances().iter().any(|i| i.name() == smallest.name));
    let a = Analysis::new(&smallest.graph()).unwrap();
    assert_eq!(a.instance(), smallest.graph6);
}
