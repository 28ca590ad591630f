use num_bigint::BigInt;
use proptest::prelude::*;
use quadwalk::algebra::mpoly::{MPoly, Monomial, Var};
use quadwalk::algebra::newton::algebraic_series_solve;
use quadwalk::algebra::rat::{rat, Rat};
use quadwalk::algebra::series::TSeries;
use quadwalk::enumerate::count_walks;
use quadwalk::families::{d10_model, z_d10, FamilyTag};
use quadwalk::guess::{annihilates, guess_algebraic, guess_ode, guess_recurrence, verify_fit, GuessedEquation};
use quadwalk::model::Model;

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

/// `P(t, T)` as a bivariate polynomial with `t ↦ x`, `T ↦ y`.
fn as_mpoly(eq: &GuessedEquation) -> MPoly {
    MPoly::from_terms(eq.coeffs.iter().enumerate().flat_map(|(k, p)| {
        p.iter()
            .enumerate()
            .map(move |(d, c)| (Monomial([d as u32, k as u32, 0]), Rat::from_integer(c.clone())))
    }))
}

#[test]
fn z_equation_round_trip() {
    let z = z_d10(60).unwrap();
    let eq = guess_algebraic(&z.truncate(40), 3, 1).unwrap().unwrap();
    // t + (2t − 1) T + 8t T² + 4t T³, i.e. −(Z − t(4Z³ + 8Z² + 2Z + 1))
    assert_eq!(eq.coeffs, vec![ints(&[0, 1]), ints(&[-1, 2]), ints(&[0, 8]), ints(&[0, 4])]);
    assert!(verify_fit(&eq, z.coeffs()));
    let mut bad = z.coeffs().to_vec();
    *bad.last_mut().unwrap() += rat(1);
    assert!(!verify_fit(&eq, &bad));
}

#[test]
fn kreweras_excursions_are_algebraic() {
    let f = count_walks(&Model::kreweras(), 75).series_f00();
    let eq = guess_algebraic(&f.truncate(59), 3, 6).unwrap().unwrap();
    assert!(annihilates(&eq, &f.coeffs()[..60]));
    assert!(verify_fit(&eq, f.coeffs()));
}

#[test]
fn simple_walk_recurrence_matches_catalan_products() {
    let f = count_walks(&Model::simple(), 150).series_f00();
    let eq = guess_recurrence(&f.coeffs()[..120], 2, 2).unwrap().unwrap();
    assert!(verify_fit(&eq, f.coeffs()));
    // f_{0,0,2k} = C_k C_{k+1}, so (n+4)(n+6) s(n+2) = 16 (n+1)(n+3) s(n)
    assert_eq!(eq.coeffs, vec![ints(&[-48, -64, -16]), ints(&[0, 0, 0]), ints(&[24, 10, 1])]);
}

#[test]
fn d10_left_recurrence_agrees_with_closed_form() {
    let f = count_walks(&d10_model(FamilyTag::D10Left).unwrap(), 100).series_f00();
    let eq = guess_recurrence(&f.coeffs()[..80], 3, 3).unwrap().unwrap();
    // (Z/t)(1 − 2Z + 2Z³) from the Newton solution of the Z equation, to more terms than the DP
    let z = z_d10(161).unwrap();
    let one = TSeries::one(161);
    let closed = z
        .mul(&one.sub(&z.scale(&rat(2))).add(&z.pow(3).scale(&rat(2))))
        .shift_down(1)
        .unwrap();
    assert!(annihilates(&eq, closed.coeffs()));
    assert!(verify_fit(&eq, closed.coeffs()));
}

#[test]
fn gessel_excursions_satisfy_an_ode() {
    let f = count_walks(&Model::gessel(), 125).series_f00();
    let eq = guess_ode(&f.truncate(99), 3, 8).unwrap().unwrap();
    assert!(verify_fit(&eq, f.coeffs()));
}

#[test]
fn recurrence_from_100_terms_checked_on_140() {
    let f = count_walks(&Model::simple(), 139).series_f00();
    let eq = guess_recurrence(&f.coeffs()[..100], 2, 2).unwrap().unwrap();
    assert!(verify_fit(&eq, f.coeffs()));
}

/// Random `P(t,T)` with `deg_T, deg_t ≤ 3` having a simple root `T(0) = f0`.
fn planted() -> impl Strategy<Value = (Vec<Vec<i64>>, i64)> {
    (prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 2..=4), -2i64..=2).prop_filter_map(
        "simple root",
        |(mut p, f0)| {
            let mut c0 = 0;
            for (k, row) in p.iter().enumerate().skip(1) {
                c0 += row[0] * f0.pow(k as u32);
            }
            p[0][0] = -c0;
            let d: i64 = p.iter().enumerate().skip(1).map(|(k, row)| k as i64 * row[0] * f0.pow(k as u32 - 1)).sum();
            let top = p.last().unwrap();
            (d != 0 && top.iter().any(|&c| c != 0)).then_some((p, f0))
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn planted_equations_are_recovered((p, f0) in planted()) {
        let order = 40;
        let coeffs: Vec<TSeries<Rat>> = p.iter().map(|row| {
            TSeries::new(row.iter().map(|&c| rat(c)).collect(), order)
        }).collect();
        let s = algebraic_series_solve(&coeffs, rat(f0), order).unwrap();
        let fit = s.truncate(31);
        let eq = guess_algebraic(&fit, 3, 3).unwrap();
        prop_assert!(eq.is_some(), "no equation for planted {:?}", p);
        let eq = eq.unwrap();
        prop_assert!(annihilates(&eq, fit.coeffs()));
        prop_assert!(verify_fit(&eq, s.coeffs()));
        let planted_poly = MPoly::from_terms(p.iter().enumerate().flat_map(|(k, row)| {
            row.iter().enumerate().map(move |(d, &c)| (Monomial([d as u32, k as u32, 0]), rat(c)))
        }));
        let g = MPoly::gcd(&as_mpoly(&eq), &planted_poly);
        prop_assert!(g.degree_in(Var::Y) > 0, "guess {} shares no factor with the planted equation", eq);
    }

    #[test]
    fn guessing_is_deterministic((p, f0) in planted()) {
        let coeffs: Vec<TSeries<Rat>> = p.iter().map(|row| TSeries::new(row.iter().map(|&c| rat(c)).collect(), 30)).collect();
        let s = algebraic_series_solve(&coeffs, rat(f0), 30).unwrap();
        prop_assert_eq!(guess_algebraic(&s, 3, 3).unwrap(), guess_algebraic(&s, 3, 3).unwrap());
    }
}
