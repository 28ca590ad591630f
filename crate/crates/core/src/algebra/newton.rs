//! Newton iteration for power-series roots of polynomial equations.

use super::ring::Ring;
use super::series::TSeries;
use crate::error::{Error, Result};

/// Solves `Σ_k p[k](t) · F^k = 0` for the series `F` with `F(0) = f0`, to order `order`.
///
/// Requires `P(f0) ≡ 0 mod t` and `∂P/∂F (f0)` invertible at `t = 0` in the coefficient ring.
/// Precision doubles each step; the final residual is checked exactly.
pub fn algebraic_series_solve<C: Ring>(
    p: &[TSeries<C>],
    f0: C,
    order: usize,
) -> Result<TSeries<C>> {
    if p.is_empty() {
        return Err(Error::Precondition("empty equation".into()));
    }
    if p.iter().any(|c| c.order() < order) {
        return Err(Error::Precondition("equation known to lower order than requested".into()));
    }
    let at = |prec: usize| -> Vec<TSeries<C>> { p.iter().map(|c| c.truncate(prec)).collect() };
    let deriv: Vec<TSeries<C>> = (1..p.len())
        .map(|k| p[k].scale_rat(&super::rat::rat(k as i64)))
        .collect();
    let deriv_at = |prec: usize| -> Vec<TSeries<C>> { deriv.iter().map(|c| c.truncate(prec)).collect() };

    let mut f = TSeries::constant(f0, 0);
    if !f.eval_poly(&at(0)).is_zero() {
        return Err(Error::NoRoot);
    }
    let d0 = if deriv.is_empty() {
        TSeries::zero(0)
    } else {
        f.eval_poly(&deriv_at(0))
    };
    if d0.coeff(0).inverse().is_none() {
        return Err(Error::NonSimpleRoot);
    }

    let mut prec = 0usize;
    while prec < order {
        prec = (2 * prec + 1).min(order);
        let mut cs = f.into_coeffs();
        cs.resize(prec + 1, C::zero_elem());
        f = TSeries::new(cs, prec);
        let r = f.eval_poly(&at(prec));
        let d = f.eval_poly(&deriv_at(prec));
        f = f.sub(&r.mul(&d.inv()?));
    }
    if !f.eval_poly(&at(order)).is_zero() {
        return Err(Error::NoRoot);
    }
    Ok(f)
}

/// Solves `F = t · G(F)` written as `Σ_k g[k] F^k` with `F(0) = 0`.
pub fn solve_fixed_point<C: Ring>(g: &[TSeries<C>], order: usize) -> Result<TSeries<C>> {
    let mut p: Vec<TSeries<C>> = g.iter().map(|c| c.shift_up(1).truncate(order).neg()).collect();
    while p.len() < 2 {
        p.push(TSeries::zero(order));
    }
    p[1] = p[1].add(&TSeries::one(order));
    algebraic_series_solve(&p, C::zero_elem(), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::LaurentPoly;
    use crate::algebra::rat::{rat, Rat};
    use crate::algebra::series::rat_series;

    #[test]
    fn catalan_generating_function() {
        // C = 1 + t C²
        let n = 12;
        let p = vec![
            TSeries::<Rat>::one(n),
            TSeries::constant(rat(-1), n),
            TSeries::t(n),
        ];
        let c = algebraic_series_solve(&p, rat(1), n).unwrap();
        let expect = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012];
        assert_eq!(c, rat_series(&expect));
    }

    #[test]
    fn fixed_point_binary_trees() {
        // F = t(1 + F)²
        let n = 8;
        let g = vec![TSeries::<Rat>::one(n), TSeries::constant(rat(2), n), TSeries::one(n)];
        let f = solve_fixed_point(&g, n).unwrap();
        assert_eq!(f, rat_series(&[0, 1, 2, 5, 14, 42, 132, 429, 1430]));
    }

    #[test]
    fn laurent_coefficients() {
        // Y = t(1/x + x Y²)-type root: Y = t(x⁻¹ + x Y²)
        let n = 6;
        let xi = LaurentPoly::monomial(-1, 0, rat(1));
        let g = vec![
            TSeries::constant(xi, n),
            TSeries::zero(n),
            TSeries::constant(LaurentPoly::x(), n),
        ];
        let y = solve_fixed_point(&g, n).unwrap();
        assert_eq!(y.coeff(1), &LaurentPoly::monomial(-1, 0, rat(1)));
        assert_eq!(y.coeff(3), &LaurentPoly::monomial(-1, 0, rat(1)));
        assert_eq!(y.coeff(5), &LaurentPoly::monomial(-1, 0, rat(2)));
    }

    #[test]
    fn rejects_bad_initial_value() {
        let n = 4;
        let p = vec![TSeries::<Rat>::one(n), TSeries::constant(rat(-1), n)];
        assert_eq!(algebraic_series_solve(&p, rat(2), n), Err(Error::NoRoot));
        // (F - 1)² = t has a double root at t = 0
        let p = vec![
            TSeries::new(vec![rat(1), rat(-1)], n),
            TSeries::constant(rat(-2), n),
            TSeries::one(n),
        ];
        assert_eq!(algebraic_series_solve(&p, rat(1), n), Err(Error::NonSimpleRoot));
    }
}
