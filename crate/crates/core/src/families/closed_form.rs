//! Algebraic closed forms for family 1b, family 2b and the D10 models.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::report::Status;
use super::substitution::{family1b_model, family2b_model};
use super::{d10_model, FamilyTag};
use crate::algebra::laurent::LaurentPoly;
use crate::algebra::mpoly::{MPoly, Var};
use crate::algebra::newton::algebraic_series_solve;
use crate::algebra::rat::{rat, Rat};
use crate::algebra::series::TSeries;
use crate::enumerate::count_walks;
use crate::error::{Error, Result};
use crate::guess::{guess_algebraic, guess_recurrence, verify_fit, GuessedEquation};

/// Polynomial in t with the given coefficients, as a series of the given order.
fn tpoly<C: crate::algebra::ring::Ring>(coeffs: Vec<C>, order: usize) -> TSeries<C> {
    TSeries::new(coeffs, order)
}

fn rs(coeffs: &[Rat], order: usize) -> TSeries<Rat> {
    tpoly(coeffs.to_vec(), order)
}

fn lift(s: &TSeries<Rat>) -> TSeries<MPoly> {
    s.map(|c| MPoly::constant(c.clone()))
}

fn xpoly(v: Var, coeffs: &[Rat], order: usize) -> TSeries<MPoly> {
    TSeries::constant(MPoly::univariate(v, coeffs), order)
}

fn cmp_series<C: crate::algebra::ring::Ring + PartialEq>(what: &str, got: &TSeries<C>, want: &TSeries<C>, n: usize) -> Status {
    for k in 0..=n {
        if got.coeff(k) != want.coeff(k) {
            return Status::fail(format!("{}: coefficient of t^{} differs", what, k));
        }
    }
    Status::Pass
}

fn err_status(e: Error) -> Status {
    Status::fail(e.to_string())
}

/// `Z(1 − λZ²)² = t(1 + 3λZ² + 4λ(1+λ)Z³ + 3λ²Z⁴ + λ³Z⁶)`, `Z(0) = 0`.
pub fn z_family1b(lambda: &Rat, order: usize) -> Result<TSeries<Rat>> {
    let l = lambda;
    let l2 = l * l;
    let z = Rat::zero();
    let p = [
        rs(&[z.clone(), rat(-1)], order),
        rs(&[rat(1)], order),
        rs(&[z.clone(), rat(-3) * l], order),
        rs(&[rat(-2) * l, rat(-4) * l * (rat(1) + l)], order),
        rs(&[z.clone(), rat(-3) * &l2], order),
        rs(&[l2.clone()], order),
        rs(&[z.clone(), -(&l2 * l)], order),
    ];
    algebraic_series_solve(&p, Rat::zero(), order)
}

/// `t(1 + 6Z + 12Z² + 4(2+λ)Z³) = Z(4Z + 1)`, `Z(0) = 0`.
pub fn z_family2b(lambda: &Rat, order: usize) -> Result<TSeries<Rat>> {
    let z = Rat::zero();
    let p = [
        rs(&[z.clone(), rat(-1)], order),
        rs(&[rat(1), rat(-6)], order),
        rs(&[rat(4), rat(-12)], order),
        rs(&[z, rat(-4) * (rat(2) + lambda)], order),
    ];
    algebraic_series_solve(&p, Rat::zero(), order)
}

/// `Z = t(4Z³ + 8Z² + 2Z + 1)`, `Z(0) = 0`.
pub fn z_d10(order: usize) -> Result<TSeries<Rat>> {
    let z = Rat::zero();
    let p = [
        rs(&[z.clone(), rat(-1)], order),
        rs(&[rat(1), rat(-2)], order),
        rs(&[z.clone(), rat(-8)], order),
        rs(&[z, rat(-4)], order),
    ];
    algebraic_series_solve(&p, Rat::zero(), order)
}

/// Solves `aT² + bT + c = 0` coefficientwise when `b` has valuation `v`, `a` has valuation
/// above `v` and `c` valuation at least `v`.
///
/// Each new coefficient is an exact division by the lowest coefficient of `b`, which fails
/// when no series root exists. The result has order `order(b) − v`.
pub fn solve_lazy_quadratic(a: &TSeries<MPoly>, b: &TSeries<MPoly>, c: &TSeries<MPoly>) -> Result<TSeries<MPoly>> {
    let v = b.valuation().ok_or(Error::NoRoot)?;
    let n = b.order().min(a.order()).min(c.order()) - v;
    let a = a.shift_down(v)?;
    let b = b.shift_down(v)?;
    let c = c.shift_down(v)?;
    if !a.coeff(0).is_zero() {
        return Err(Error::Precondition("leading coefficient must vanish faster than the linear one".into()));
    }
    let b0 = b.coeff(0).clone();
    let mut t: Vec<MPoly> = Vec::with_capacity(n + 1);
    let mut sq: Vec<MPoly> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut rhs = -c.coeff(k);
        for j in 1..=k {
            rhs = &rhs - &(a.coeff(j) * &sq[k - j]);
            rhs = &rhs - &(b.coeff(j) * &t[k - j]);
        }
        let tk = rhs.exact_div(&b0).ok_or(Error::NoRoot)?;
        t.push(tk);
        let mut s = MPoly::zero();
        for i in 0..=k {
            s = &s + &(&t[i] * &t[k - i]);
        }
        sq.push(s);
    }
    Ok(TSeries::new(t, n))
}

/// Family 1b with parameter λ: `Z`, `f_λ(0,0,t)` and `f_λ(x,0,t)` against DP.
pub fn verify_family1b_lambda(lambda: &Rat, n: usize) -> Status {
    match family1b_lambda(lambda, n) {
        Ok(s) => s,
        Err(e) => err_status(e),
    }
}

fn family1b_lambda(lambda: &Rat, n: usize) -> Result<Status> {
    if lambda.is_zero() {
        return Err(Error::Precondition("lambda must be nonzero".into()));
    }
    let l = lambda;
    let ord = n + 3;
    let ct = count_walks(&family1b_model(l), ord);
    let z = z_family1b(l, ord)?;
    let one = TSeries::one(ord);
    let z2 = z.mul(&z);
    let w = one.sub(&z2.scale(l));
    let w2 = w.mul(&w);

    // f(0,0,t)
    let z3 = z2.mul(&z);
    let z4 = z3.mul(&z);
    let z5 = z4.mul(&z);
    let num = z
        .sub(&z3.scale(&(rat(4) * l)))
        .sub(&z4.scale(&(rat(2) * l + rat(2) * l * l)))
        .sub(&z5.scale(&(l * l)));
    let f00 = num.mul(&w2.inv()?).shift_down(1)?;
    let s1 = cmp_series("f(0,0,t)", &f00, &ct.series_f00(), n);
    if !s1.is_pass() {
        return Ok(s1);
    }

    // M·f(x,0,t) with M = 2λ t² x (x+1)² Z (1−λZ²)²
    let (zx, wx, w2x) = (lift(&z), lift(&w), lift(&w2));
    let z2x = lift(&z2);
    let t = TSeries::<MPoly>::t(ord);
    let x = |c: &[i64]| xpoly(Var::X, &c.iter().map(|&k| rat(k)).collect::<Vec<_>>(), ord);
    let xl = |c: &[Rat]| xpoly(Var::X, c, ord);
    let ser_c = z
        .mul(&rs(&[rat(1)], ord)
            .add(&z.scale(&rat(2)))
            .add(&z2.scale(&(rat(2) * l)))
            .add(&z3.scale(&(rat(2) * l * l)))
            .add(&z4.scale(&(l * l))))
        .scale(&(rat(2) * l))
        .mul(&w2.inv()?);
    let dplus = x(&[1])
        .sub(&lift(&ser_c).mul(&x(&[0, 1])))
        .add(&z2x.scale_rat(&(l * l)).mul(&x(&[0, 0, 1])));
    let sqrt_dp = dplus.sqrt()?;
    // A = x²(λZ²−1) + 2xZ(λZ+1) − λZ³ + Z
    let a = lift(&z2.scale(l).sub(&one))
        .mul(&x(&[0, 0, 1]))
        .add(&lift(&z.mul(&z.scale(l).add(&one))).mul(&x(&[0, 2])))
        .add(&lift(&z.sub(&z3.scale(l))));
    let xx1 = x(&[0, 1, 1]); // x(x+1)
    let rhs = t
        .mul(&wx)
        .mul(&a)
        .mul(&sqrt_dp)
        .sub(&zx.mul(&w2x).mul(&xl(&[rat(0), rat(0), rat(-1)]).add(&t.mul(&xl(&[rat(1), rat(2), rat(0), l.clone()])))))
        .sub(&t.mul(&xx1).mul(&z2x).mul(&lift(&z3.scale(&(l * l)).add(&z2.mul(&z.add(&rs(&[rat(3)], ord))).scale(l)).sub(&one))).scale_rat(&(rat(2) * l)))
        .sub(&t.mul(&xx1).mul(&z2x).mul(&w2x).scale_rat(l));
    let m = t
        .mul(&t)
        .mul(&x(&[0, 1, 2, 1]))
        .mul(&zx)
        .mul(&w2x)
        .scale_rat(&(rat(2) * l));
    let lhs = m.mul(&ct.series_fx0());
    let s2 = cmp_series("f(x,0,t)", &lhs, &rhs, ord);
    Ok(Status::all([s1, s2]))
}

fn lpoly(terms: &[(i32, Rat)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().map(|(i, c)| ((*i, 0), c.clone())))
}

fn lift_l(s: &TSeries<Rat>) -> TSeries<LaurentPoly> {
    s.map(|c| LaurentPoly::constant(c.clone()))
}

fn y_coeff(p: &LaurentPoly, n: i32) -> LaurentPoly {
    LaurentPoly::from_terms(p.terms().filter(|((_, j), _)| *j == n).map(|(&(i, _), c)| ((i, 0), c.clone())))
}

/// Kernel roots of family 1b: `K(x,Y0,t) = 0`, `K(x,1/(λxY0),t) = 0`, the discriminant
/// factorization and `[y^n] 1/K` for `−2 ≤ n ≤ 2`.
pub fn verify_kernel_roots_1b(lambda: &Rat, n: usize) -> Status {
    match kernel_roots_1b(lambda, n) {
        Ok(s) => s,
        Err(e) => err_status(e),
    }
}

fn kernel_roots_1b(lambda: &Rat, n: usize) -> Result<Status> {
    let l = lambda;
    if l.is_zero() {
        return Err(Error::Precondition("lambda must be nonzero".into()));
    }
    let ord = n + 1;
    let am1 = lpoly(&[(-1, rat(1)), (0, rat(1))]);
    let a0 = lpoly(&[(-1, rat(1)), (1, l.clone())]);
    let a1 = lpoly(&[(0, l.clone()), (1, l.clone())]);
    let c = |p: &LaurentPoly| TSeries::constant(p.clone(), ord);
    let t = TSeries::<LaurentPoly>::t(ord);
    let one = TSeries::<LaurentPoly>::one(ord);
    let delta = TSeries::new(
        vec![
            lpoly(&[(0, rat(1))]),
            lpoly(&[(-1, rat(-2)), (1, rat(-2) * l)]),
            lpoly(&[(-2, rat(1)), (-1, rat(-4) * l), (0, rat(-6) * l), (1, rat(-4) * l), (2, l * l)]),
        ],
        ord,
    );
    let mut checks = Vec::new();
    let b = one.sub(&t.mul(&c(&a0)));
    let disc = b.mul(&b).sub(&t.mul(&t).mul(&c(&(&am1 * &a1))).scale_rat(&rat(4)));
    checks.push(cmp_series("discriminant", &delta, &disc, ord));

    let sq = delta.sqrt()?;
    let top = b.sub(&sq).shift_down(1)?;
    let two_a1 = a1.scale(&rat(2));
    let y0 = TSeries::new(
        top.coeffs()
            .iter()
            .map(|p| p.exact_div(&two_a1).ok_or(Error::InexactDivision))
            .collect::<Result<Vec<_>>>()?,
        n,
    );
    let (am1, a0, a1) = (c(&am1).truncate(n), c(&a0).truncate(n), c(&a1).truncate(n));
    let t = t.truncate(n);
    let k0 = y0.sub(&t.mul(&am1.add(&a0.mul(&y0)).add(&a1.mul(&y0.mul(&y0)))));
    checks.push(Status::check(k0.is_zero(), || "K(x,Y0,t) != 0".into()));
    let w = y0.mul(&TSeries::constant(LaurentPoly::monomial(1, 0, l.clone()), n));
    let k1 = w.sub(&t.mul(&am1.mul(&w.mul(&w)).add(&a0.mul(&w)).add(&a1)));
    checks.push(Status::check(k1.is_zero(), || "K(x,Y1,t) != 0".into()));

    // Z²Δ = t²Δ₋Δ₊
    let z = z_family1b(l, ord)?;
    let z2 = z.mul(&z);
    let w2 = rs(&[rat(1)], ord).sub(&z2.scale(l));
    let w2 = w2.mul(&w2);
    let cz = z
        .mul(&rs(&[rat(1)], ord)
            .add(&z.scale(&rat(2)))
            .add(&z2.scale(&(rat(2) * l)))
            .add(&z2.mul(&z).scale(&(rat(2) * l * l)))
            .add(&z2.mul(&z2).scale(&(l * l))))
        .scale(&(rat(2) * l))
        .mul(&w2.inv()?);
    let dp = one
        .sub(&lift_l(&cz).mul(&c(&lpoly(&[(1, rat(1))]))))
        .add(&lift_l(&z2.scale(&(l * l))).mul(&c(&lpoly(&[(2, rat(1))]))));
    let dm = TSeries::new(dp.coeffs().iter().map(|p| p.invert_x()).collect(), ord);
    let tt = TSeries::<LaurentPoly>::t(ord);
    checks.push(cmp_series(
        "discriminant factorization",
        &lift_l(&z2).mul(&delta),
        &tt.mul(&tt).mul(&dm).mul(&dp),
        ord,
    ));

    // [y^n] 1/K against the kernel series
    let inv_sq = sq.inv()?.truncate(n);
    let s = LaurentPoly::from_terms([
        ((-1, -1), rat(1)),
        ((-1, 0), rat(1)),
        ((0, -1), rat(1)),
        ((1, 1), l.clone()),
        ((1, 0), l.clone()),
        ((0, 1), l.clone()),
    ]);
    let mut powers = vec![LaurentPoly::one()];
    for k in 1..=n {
        powers.push(&powers[k - 1] * &s);
    }
    for e in -2i32..=2 {
        let direct = TSeries::new(powers.iter().map(|p| y_coeff(p, e)).collect(), n);
        let base = if e <= 0 { &y0 } else { &w };
        let formula = inv_sq.mul(&base.pow(e.unsigned_abs()));
        checks.push(cmp_series(&format!("[y^{}] 1/K", e), &formula, &direct, n));
    }
    Ok(Status::all(checks))
}

/// Family 2b with `a_{-1,0} = λ`: `Z`, `T = f(0,0,t)`, `U = f(x,0,t)` and the square-root formula for `f(0,y,t)`.
pub fn verify_family2b(lambda: &Rat, n: usize) -> Status {
    match family2b(lambda, n) {
        Ok(s) => s,
        Err(e) => err_status(e),
    }
}

fn family2b(lambda: &Rat, n: usize) -> Result<Status> {
    let l = lambda;
    let ord = n + 2;
    let ct = count_walks(&family2b_model(l), n);
    let z = lift(&z_family2b(l, ord)?);
    let z2 = z.mul(&z);
    let c = |v: &[Rat]| TSeries::new(v.iter().map(|r| MPoly::constant(r.clone())).collect(), ord);
    let cx = |v: Var, rows: &[&[Rat]]| -> TSeries<MPoly> {
        TSeries::new(rows.iter().map(|r| MPoly::univariate(v, r)).collect(), ord)
    };
    let r0 = Rat::zero;
    // (3t²(λ−4) + 3t + 1) and t(6t+1)(λ+2)
    let p1 = c(&[rat(1), rat(3), rat(3) * (l - rat(4))]);
    let p2 = c(&[r0(), l + rat(2), rat(6) * (l + rat(2))]);
    let common = p2.mul(&z2).sub(&p1.mul(&z));

    let a_t = c(&[r0(), r0(), r0(), r0(), rat(1)]);
    let b_t = c(&[r0(), r0(), rat(1), rat(2) * l]);
    let c_t = c(&[r0(), rat(1), rat(4)]).add(&common);
    let tt = solve_lazy_quadratic(&a_t, &b_t, &c_t)?;
    let mut checks = vec![Status::check(tt.coeff(0).is_one(), || "T(0) != 1".into())];
    checks.push(cmp_series("T = f(0,0,t)", &tt.map(|p| p.constant_term()), &ct.series_f00(), n));

    let one = rat(1);
    let a_u = cx(Var::X, &[&[], &[], &[], &[], &[one.clone(), rat(2), one.clone()]]);
    let b_u = cx(Var::X, &[&[], &[], &[one.clone(), rat(-1)], &[rat(2) * l]]);
    let c_u = cx(Var::X, &[&[], &[one.clone()], &[rat(4), one.clone()]]).add(&common);
    let u = solve_lazy_quadratic(&a_u, &b_u, &c_u)?;
    checks.push(Status::check(u.coeff(0).is_one(), || "U(0) != 1".into()));
    checks.push(cmp_series("U = f(x,0,t)", &u, &ct.series_fx0(), n));

    // V over y
    let yq = MPoly::univariate(Var::Y, &[one.clone(), l.clone(), one.clone()]);
    let a_v = TSeries::monomial(&yq * &yq, 4, ord);
    let yv = MPoly::y();
    let b_v = z2
        .mul(&c(&[r0(), r0(), rat(4) * (l + rat(2)), rat(24) * (l + rat(2))]))
        .sub(&z.mul(&c(&[r0(), rat(4), rat(12), rat(12) * l - rat(48)])))
        .mul(&TSeries::constant(yv.clone(), ord))
        .add(&cx(
            Var::Y,
            &[
                &[],
                &[r0(), rat(-1)],
                &[rat(2), rat(4) - rat(2) * l, rat(2)],
                &[rat(4) * l, rat(18), rat(6) * l, rat(2)],
            ],
        ));
    let c_v = cx(Var::Y, &[&[], &[rat(4), rat(2)], &[rat(16), rat(4) * l, one.clone()]]).add(&common.scale_rat(&rat(4)));
    let v = solve_lazy_quadratic(&a_v, &b_v, &c_v)?;
    checks.push(Status::check(*v.coeff(0) == MPoly::constant(rat(2)), || "V(0) != 2".into()));
    let vo = v.order();
    let arg = TSeries::one(vo).add(&TSeries::t(vo).mul(&TSeries::constant(yv.clone(), vo)).mul(&v));
    let top = arg.sqrt()?.sub(&TSeries::one(vo)).shift_down(1)?;
    let f0y = TSeries::new(
        top.coeffs()
            .iter()
            .map(|p| p.exact_div(&yv).ok_or(Error::InexactDivision))
            .collect::<Result<Vec<_>>>()?,
        vo - 1,
    );
    checks.push(cmp_series("f(0,y,t)", &f0y, &ct.series_f0y(), n.min(vo - 1)));
    Ok(Status::all(checks))
}

/// D10 closed forms: `f(0,0,t) = (Z/t)(1 − 2Z + 2Z³)` for the left and middle models, and the
/// square-root formula for `f(x,0,t) = f(0,x,t)` of the left model.
pub fn verify_d10_closed_forms(tag: FamilyTag, n: usize) -> Status {
    match d10_closed_forms(tag, n) {
        Ok(s) => s,
        Err(e) => err_status(e),
    }
}

fn d10_f00(z: &TSeries<Rat>) -> Result<TSeries<Rat>> {
    let ord = z.order();
    let z3 = z.pow(3);
    z.mul(&rs(&[rat(1)], ord).sub(&z.scale(&rat(2))).add(&z3.scale(&rat(2))))
        .shift_down(1)
}

fn d10_closed_forms(tag: FamilyTag, n: usize) -> Result<Status> {
    if !matches!(tag, FamilyTag::D10Left | FamilyTag::D10Mid) {
        return Ok(Status::skipped(format!("no closed form for {}", tag)));
    }
    let ord = n + 2;
    let model = d10_model(tag).expect("D10 tag");
    let ct = count_walks(&model, ord);
    let z = z_d10(ord)?;
    let f00 = d10_f00(&z)?;
    let mut checks = vec![cmp_series("f(0,0,t)", &f00, &ct.series_f00(), n)];
    if tag == FamilyTag::D10Mid {
        let left = count_walks(&d10_model(FamilyTag::D10Left).expect("D10 tag"), n);
        checks.push(cmp_series("returns equal left model", &ct.series_f00(), &left.series_f00(), n));
        return Ok(Status::all(checks));
    }
    let zx = lift(&z);
    let x = |c: &[i64]| xpoly(Var::X, &c.iter().map(|&k| rat(k)).collect::<Vec<_>>(), ord);
    let t = TSeries::<MPoly>::t(ord);
    // P(x,Z) = 2Z + (x−1)x(4Z³ + 8Z² − 2(x−1)Z + 1)
    let inner = lift(&z.pow(3).scale(&rat(4)).add(&z.pow(2).scale(&rat(8))).add(&rs(&[rat(1)], ord)))
        .sub(&zx.mul(&x(&[-2, 2])));
    let p = zx.scale_rat(&rat(2)).add(&x(&[0, -1, 1]).mul(&inner));
    let root = TSeries::one(ord)
        .sub(&x(&[0, 4]).mul(&lift(&z.mul(&z.add(&rs(&[rat(1)], ord))))))
        .sqrt()?;
    let factor = x(&[0, 1]).sub(&zx.scale_rat(&rat(2))).mul(&zx.mul(&x(&[0, 2])).add(&x(&[-1, 1])));
    let rhs = p.sub(&factor.mul(&root));
    let m = t.mul(&x(&[0, 0, 2, 4, 2])).mul(&zx);
    checks.push(cmp_series("f(x,0,t)", &m.mul(&ct.series_fx0()), &rhs, ord));
    checks.push(cmp_series("f(x,0,t) = f(0,x,t)", &ct.series_fx0(), &ct.series_f0y().map(swap_xy), ord));
    Ok(Status::all(checks))
}

/// Bounded-degree guesses for `f(0,0,t)` of a D10 model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct D10Guess {
    pub tag: FamilyTag,
    pub terms: usize,
    /// First algebraic equation found with `(deg_T, deg_t)` taken from the search list.
    pub algebraic: Option<GuessedEquation>,
    pub recurrence: Option<GuessedEquation>,
    /// Whether every guess also annihilates the series extended by a quarter.
    pub confirmed: bool,
}

/// Degree pairs tried for the algebraic guess, smallest first.
pub const D10_ALGEBRAIC_BOUNDS: [(usize, usize); 4] = [(2, 4), (3, 6), (4, 8), (4, 12)];

/// Guesses an algebraic equation and a P-recurrence for `f(0,0,t)` from `terms` DP terms.
pub fn d10_guess(tag: FamilyTag, terms: usize) -> Result<D10Guess> {
    let model = d10_model(tag).ok_or_else(|| Error::Precondition(format!("{} is not a D10 tag", tag)))?;
    let ext = (5 * terms).div_ceil(4);
    let f = count_walks(&model, ext - 1).series_f00();
    let data = &f.coeffs()[..terms];
    let series = TSeries::from_rats(data);
    let mut algebraic = None;
    for (dt, dd) in D10_ALGEBRAIC_BOUNDS {
        match guess_algebraic(&series, dt, dd) {
            Ok(Some(e)) => {
                algebraic = Some(e);
                break;
            }
            Ok(None) | Err(Error::InsufficientTerms { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    let recurrence = match guess_recurrence(data, 3, 3) {
        Ok(r) => r,
        Err(Error::InsufficientTerms { .. }) => None,
        Err(e) => return Err(e),
    };
    let confirmed = algebraic.iter().chain(recurrence.iter()).all(|e| verify_fit(e, f.coeffs()));
    Ok(D10Guess {
        tag,
        terms,
        algebraic,
        recurrence,
        confirmed,
    })
}

fn swap_xy(p: &MPoly) -> MPoly {
    MPoly::from_terms(p.terms().map(|(m, c)| {
        let mut e = m.0;
        e.swap(0, 1);
        (crate::algebra::mpoly::Monomial(e), c.clone())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_d10_first_terms() {
        let z = z_d10(4).unwrap();
        assert_eq!(z.coeffs(), &[rat(0), rat(1), rat(2), rat(12), rat(60)]);
    }

    #[test]
    fn family1b_small() {
        for l in [rat(1), rat(2)] {
            assert_eq!(verify_family1b_lambda(&l, 8), Status::Pass, "lambda {}", l);
        }
    }

    #[test]
    fn kernel_roots() {
        assert_eq!(verify_kernel_roots_1b(&rat(1), 6), Status::Pass);
    }

    #[test]
    fn family2b_small() {
        for l in [rat(0), rat(2)] {
            assert_eq!(verify_family2b(&l, 8), Status::Pass, "lambda {}", l);
        }
    }

    #[test]
    fn d10_small() {
        assert_eq!(verify_d10_closed_forms(FamilyTag::D10Left, 10), Status::Pass);
        assert_eq!(verify_d10_closed_forms(FamilyTag::D10Mid, 10), Status::Pass);
    }

    #[test]
    fn d10_guesses() {
        let g = d10_guess(FamilyTag::D10Left, 100).unwrap();
        let alg = g.algebraic.as_ref().unwrap();
        assert_eq!((alg.effective_order(), alg.effective_degree()), (3, 6));
        assert!(g.recurrence.is_some() && g.confirmed);
        let r = d10_guess(FamilyTag::D10Right, 100).unwrap();
        assert!(r.recurrence.is_some() && r.confirmed);
        assert!(d10_guess(FamilyTag::F0, 10).is_err());
    }

    #[test]
    fn lazy_quadratic_rejects_missing_root() {
        // t²T + 1 = 0 has no power-series root
        let o = 4;
        let a = TSeries::<MPoly>::zero(o);
        let b = TSeries::monomial(MPoly::one(), 2, o);
        let c = TSeries::constant(MPoly::one(), o);
        assert!(solve_lazy_quadratic(&a, &b, &c).is_err());
    }
}
