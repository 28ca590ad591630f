//! Reduced rational functions in x, y, λ.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Signed;

use super::mpoly::{MPoly, Monomial, Var};
use super::rat::{gcd_numers, lcm_denoms, Rat};
use super::ring::Ring;
use crate::error::{Error, Result};

/// `num/den` with `gcd(num, den) = 1`, jointly integer-primitive, and the graded-lex leading
/// coefficient of `den` positive. Equal fractions have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: MPoly,
    den: MPoly,
}

impl RatFun {
    /// Reduces `num/den` to normal form.
    pub fn new(num: MPoly, den: MPoly) -> Result<RatFun> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFun::zero());
        }
        let g = MPoly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        Ok(RatFun::normalize_content(num, den))
    }

    fn normalize_content(num: MPoly, den: MPoly) -> RatFun {
        let coeffs = num.terms().map(|(_, c)| c).chain(den.terms().map(|(_, c)| c));
        let l = lcm_denoms(coeffs.clone());
        let g = gcd_numers(coeffs);
        let mut s = Rat::new(l, g);
        if den.lead().expect("nonzero denominator").1.is_negative() {
            s = -s;
        }
        RatFun {
            num: num.scale(&s),
            den: den.scale(&s),
        }
    }

    pub fn zero() -> RatFun {
        RatFun {
            num: MPoly::zero(),
            den: MPoly::one(),
        }
    }

    pub fn one() -> RatFun {
        RatFun::from_poly(MPoly::one())
    }

    pub fn from_poly(p: MPoly) -> RatFun {
        if p.is_zero() {
            return RatFun::zero();
        }
        RatFun::normalize_content(p, MPoly::one())
    }

    pub fn constant(c: Rat) -> RatFun {
        RatFun::from_poly(MPoly::constant(c))
    }

    pub fn var(v: Var) -> RatFun {
        RatFun::from_poly(MPoly::var(v))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The polynomial value, if the denominator is constant.
    pub fn as_poly(&self) -> Option<MPoly> {
        if self.den.is_constant() {
            Some(self.num.scale(&self.den.constant_term().recip()))
        } else {
            None
        }
    }

    /// Larger of the total degrees of numerator and denominator.
    pub fn degree(&self) -> u32 {
        self.num.total_degree().max(self.den.total_degree())
    }

    pub fn inv(&self) -> Result<RatFun> {
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Result<RatFun> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        // numerator and denominator stay coprime under powers
        Ok(RatFun::normalize_content(base.num.pow(k), base.den.pow(k)))
    }

    pub fn try_div(&self, o: &RatFun) -> Result<RatFun> {
        if o.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RatFun::new(&self.num * &o.den, &self.den * &o.num)
    }

    /// Substitutes the given rational functions for the variables (`None` keeps the variable).
    pub fn substitute(&self, vals: &[Option<&RatFun>; 3]) -> Result<RatFun> {
        let mut degs = [0u32; 3];
        for v in Var::ALL {
            if vals[v as usize].is_some() {
                degs[v as usize] = self.num.degree_in(v).max(self.den.degree_in(v));
            }
        }
        let ctx = SubstCtx::new(vals, degs);
        let n = ctx.apply(&self.num);
        let d = ctx.apply(&self.den);
        if d.is_zero() {
            return Err(Error::DegenerateComposition);
        }
        RatFun::new(n, d)
    }

    pub fn eval_var(&self, v: Var, val: &Rat) -> Result<RatFun> {
        let d = self.den.eval_var(v, val);
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RatFun::new(self.num.eval_var(v, val), d)
    }
}

/// Homogenizing substitution: each substituted variable v with value a/b and degree bound d
/// contributes `a^e b^(d-e)`; the common factor `Π b^d` is dropped, so this is only meaningful
/// when applied to the numerator and denominator of one fraction with the same bounds.
struct SubstCtx {
    pows: [Option<(Vec<MPoly>, Vec<MPoly>)>; 3],
    degs: [u32; 3],
}

impl SubstCtx {
    fn new(vals: &[Option<&RatFun>; 3], degs: [u32; 3]) -> SubstCtx {
        let mk = |i: usize| {
            vals[i].map(|r| {
                let d = degs[i] as usize;
                let mut a = vec![MPoly::one()];
                let mut b = vec![MPoly::one()];
                for k in 1..=d {
                    a.push(&a[k - 1] * &r.num);
                    b.push(&b[k - 1] * &r.den);
                }
                (a, b)
            })
        };
        SubstCtx {
            pows: [mk(0), mk(1), mk(2)],
            degs,
        }
    }

    fn apply(&self, p: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in p.terms() {
            let mut rest = m.0;
            let mut acc = MPoly::one();
            for v in 0..3 {
                if let Some((a, b)) = &self.pows[v] {
                    let e = m.0[v] as usize;
                    let d = self.degs[v] as usize;
                    acc = &(&acc * &a[e]) * &b[d - e];
                    rest[v] = 0;
                }
            }
            out = &out + &acc.mul_monomial(&Monomial(rest)).scale(c);
        }
        out
    }
}

impl<'a> Add<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn add(self, o: &RatFun) -> RatFun {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFun::new(&self.num + &o.num, self.den.clone()).expect("nonzero den");
        }
        let g = MPoly::gcd(&self.den, &o.den);
        let sd = self.den.exact_div(&g).expect("gcd divides");
        let od = o.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &od) + &(&o.num * &sd);
        RatFun::new(num, &sd * &o.den).expect("nonzero den")
    }
}

impl<'a> Sub<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn sub(self, o: &RatFun) -> RatFun {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn mul(self, o: &RatFun) -> RatFun {
        if self.is_zero() || o.is_zero() {
            return RatFun::zero();
        }
        // cross-cancel so the final gcd works on smaller inputs
        let g1 = MPoly::gcd(&self.num, &o.den);
        let g2 = MPoly::gcd(&o.num, &self.den);
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = o.den.exact_div(&g1).unwrap();
        let n2 = o.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        RatFun::normalize_content(&n1 * &n2, &d1 * &d2)
    }
}

impl<'a> Div<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn div(self, o: &RatFun) -> RatFun {
        self.try_div(o).expect("division by zero rational function")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Ring for RatFun {
    fn zero_elem() -> Self {
        RatFun::zero()
    }
    fn one_elem() -> Self {
        RatFun::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_rat(r: Rat) -> Self {
        RatFun::constant(r)
    }
    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl From<MPoly> for RatFun {
    fn from(p: MPoly) -> Self {
        RatFun::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    fn x() -> MPoly {
        MPoly::x()
    }
    fn y() -> MPoly {
        MPoly::y()
    }
    fn c(n: i64) -> MPoly {
        MPoly::constant(rat(n))
    }

    #[test]
    fn reduce_common_factor() {
        let r = RatFun::new(&(&x() * &x()) - &c(1), &x() - &c(1)).unwrap();
        assert_eq!(r.num(), &(&x() + &c(1)));
        assert!(r.den().is_one());
    }

    #[test]
    fn reduce_content() {
        let r = RatFun::new(x().scale(&rat(2)), y().scale(&rat(4))).unwrap();
        assert_eq!(r.num(), &x());
        assert_eq!(r.den(), &y().scale(&rat(2)));
    }

    #[test]
    fn sign_normalization() {
        let r = RatFun::new(x(), -&y()).unwrap();
        assert_eq!(r.num(), &-&x());
        assert_eq!(r.den(), &y());
    }

    #[test]
    fn zero_denominator() {
        assert_eq!(RatFun::new(x(), MPoly::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn psi_second_component_all_ones_cancels() {
        // (1/y)·(x⁻¹+1+x)/(x⁻¹+1+x), cleared of x⁻¹
        let s = &(&c(1) + &x()) + &(&x() * &x());
        let r = RatFun::new(s.clone(), &y() * &s).unwrap();
        assert_eq!(r, RatFun::new(c(1), y()).unwrap());
    }

    #[test]
    fn arithmetic_and_substitution() {
        let a = RatFun::new(c(1), x()).unwrap();
        let b = RatFun::new(c(1), y()).unwrap();
        let s = &a + &b;
        assert_eq!(s, RatFun::new(&x() + &y(), &x() * &y()).unwrap());
        // substitute x -> 1/x into 1/x gives x
        let inv_x = RatFun::new(c(1), x()).unwrap();
        let back = inv_x.substitute(&[Some(&inv_x), None, None]).unwrap();
        assert_eq!(back, RatFun::var(Var::X));
        assert_eq!(&(&a * &b) / &a, b);
    }
}
