use quadwalk::algebra::rat::rat;
use quadwalk::classify::{census, run_suite, sweep, tally, Suite, SweepOptions};
use quadwalk::families::{classify_family, d10_detect, table_model, z_d10, FamilyTag};
use quadwalk::group::{group_order, group_order_with, GroupMethod};
use quadwalk::model::{enumerate_space, Model};

#[test]
fn census_counts() {
    let c = census(1);
    assert_eq!((c.raw, c.classes), (256, 79));
    let c = census(3);
    assert_eq!((c.raw, c.classes), (65536, 30307));
}

#[test]
fn full_sweep_counts() {
    let o = sweep(&SweepOptions::default()).unwrap();
    let s = &o.summary;
    assert_eq!(s.classes, 30307);
    assert_eq!(s.finite, 1457);
    assert_eq!(s.family_covered, 1454);
    assert_eq!(s.zero_orbit_sum, 79);
    assert_eq!(s.order_count(10), 3);
    let d10: Vec<&str> = o
        .records
        .iter()
        .filter(|r| r.group.order == Some(10))
        .map(|r| r.model.as_str())
        .collect();
    for m in &d10 {
        let m: Model = m.parse().unwrap();
        assert!(d10_detect(&m).is_some());
        assert!(!classify_family(&m).is_family_covered());
    }
    for r in &o.records {
        for t in &r.families {
            assert_eq!(Some(t.tag.group_order()), r.group.order, "{} tagged {}", r.model, t.tag);
        }
    }
}

#[test]
fn screen_agrees_with_exact_iteration_on_small_census() {
    for m in enumerate_space(1).classes {
        let screened = group_order(&m, 15, 200).unwrap();
        let exact = group_order_with(&m, 15, 16, GroupMethod::Exact).unwrap();
        assert_eq!(screened.order(), exact.order(), "{}", m);
    }
    for t in [FamilyTag::D10Left, FamilyTag::D10Mid, FamilyTag::D10Right] {
        let m = table_model(t).unwrap();
        assert_eq!(group_order_with(&m, 15, 200, GroupMethod::Exact).unwrap().order(), Some(10));
    }
}

#[test]
fn table_models() {
    for t in FamilyTag::ALL {
        let m = table_model(t).unwrap();
        let g = group_order(&m, 15, 200).unwrap();
        assert_eq!(g.order(), Some(t.group_order()), "{}", t);
        assert!(classify_family(&m).has(t));
    }
    let d4 = table_model(FamilyTag::F0).unwrap();
    assert_eq!(classify_family(&d4).get(FamilyTag::F0).unwrap().lambda, Some(rat(1) / rat(3)));
}

#[test]
fn z_series_first_terms() {
    let z = z_d10(4).unwrap();
    assert_eq!(z.coeffs(), &[rat(0), rat(1), rat(2), rat(12), rat(60)]);
}

#[test]
fn suites_at_small_order() {
    let recs = run_suite(Suite::All, 8);
    let (_, fail, _) = tally(&recs);
    let bad: Vec<_> = recs.iter().filter(|r| r.status.is_fail()).collect();
    assert_eq!(fail, 0, "{:?}", bad);
}
