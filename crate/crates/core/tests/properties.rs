use std::collections::HashMap;

use proptest::prelude::*;
use quadwalk::algebra::rat::{ratio, Rat};
use quadwalk::enumerate::{check_functional_equation, count_walks};
use quadwalk::families::{verify_scaling, Scaling};
use quadwalk::group::{compose, phi, psi, step_polynomial};
use quadwalk::model::{Model, DIRS};

fn small_rat() -> impl Strategy<Value = Rat> {
    prop_oneof![
        1 => Just(ratio(0, 1)),
        3 => (-4i64..=4, 1i64..=3).prop_map(|(n, d)| ratio(n, d)),
    ]
}

fn any_model() -> impl Strategy<Value = Model> {
    prop::array::uniform8(small_rat()).prop_map(Model::new)
}

fn interesting_model() -> impl Strategy<Value = Model> {
    any_model().prop_filter("interesting", |m| !m.is_uninteresting())
}

fn nonneg_model() -> impl Strategy<Value = Model> {
    prop::array::uniform8(0i64..=2).prop_map(Model::from_ints)
}

/// Sums the weights of all step sequences of length `n` that stay in the quadrant.
fn brute_force(m: &Model, n: usize) -> HashMap<(i64, i64), Rat> {
    fn go(m: &Model, left: usize, pos: (i64, i64), w: Rat, acc: &mut HashMap<(i64, i64), Rat>) {
        if left == 0 {
            *acc.entry(pos).or_insert_with(|| ratio(0, 1)) += w;
            return;
        }
        for &(u, v) in DIRS.iter() {
            let a = m.get(u, v);
            if *a == ratio(0, 1) {
                continue;
            }
            let next = (pos.0 + u as i64, pos.1 + v as i64);
            if next.0 < 0 || next.1 < 0 {
                continue;
            }
            go(m, left - 1, next, &w * a, acc);
        }
    }
    let mut acc = HashMap::new();
    go(m, n, (0, 0), ratio(1, 1), &mut acc);
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn involutions_preserve_the_kernel(m in interesting_model()) {
        let s = step_polynomial(&m);
        for g in [phi(&m).unwrap(), psi(&m).unwrap()] {
            prop_assert!(compose(&g, &g).unwrap().is_identity());
            prop_assert_eq!(g.apply(&s).unwrap(), s.clone());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn reflection_transposes_counts(m in any_model()) {
        let n = 12;
        let a = count_walks(&m, n);
        let b = count_walks(&m.reflect(), n);
        for k in 0..=n as i64 {
            for i in 0..=k {
                for j in 0..=k {
                    prop_assert_eq!(a.get(i, j, k as usize), b.get(j, i, k as usize));
                }
            }
        }
    }

    #[test]
    fn uniform_scaling_multiplies_by_power(m in any_model(), l in (1i64..=3, 1i64..=3)) {
        let lambda = ratio(l.0, l.1);
        let n = 12;
        let scaled = m.scale(&lambda).unwrap();
        let s = Scaling { c1: ratio(1, 1), c2: ratio(1, 1), c3: lambda };
        prop_assert!(verify_scaling(&scaled, &m, &s, n).is_pass());
    }

    #[test]
    fn directional_scaling(m in any_model(), c in ((1i64..=3, 1i64..=2), (1i64..=3, 1i64..=2), (1i64..=3, 1i64..=2))) {
        let s = Scaling { c1: ratio(c.0.0, c.0.1), c2: ratio(c.1.0, c.1.1), c3: ratio(c.2.0, c.2.1) };
        let scaled = s.apply(&m);
        prop_assert!(verify_scaling(&scaled, &m, &s, 8).is_pass());
    }

    #[test]
    fn dp_matches_path_enumeration(m in nonneg_model()) {
        let ct = count_walks(&m, 6);
        for n in 0..=6 {
            let bf = brute_force(&m, n);
            for i in 0..=n as i64 {
                for j in 0..=n as i64 {
                    let want = bf.get(&(i, j)).cloned().unwrap_or_else(|| ratio(0, 1));
                    prop_assert_eq!(ct.get(i, j, n), want, "f_{{{},{},{}}}", i, j, n);
                }
            }
        }
    }

    #[test]
    fn functional_equation_holds(m in any_model()) {
        let ct = count_walks(&m, 10);
        prop_assert!(check_functional_equation(&m, &ct).is_zero());
    }
}

#[test]
fn brute_force_oracle_small_case() {
    // simple walk: 2 walks of length 2 return to the origin
    let bf = brute_force(&Model::simple(), 2);
    assert_eq!(bf[&(0, 0)], ratio(2, 1));
    assert_eq!(bf[&(1, 1)], ratio(2, 1));
}
