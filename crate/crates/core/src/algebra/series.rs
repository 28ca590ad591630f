//! Truncated power series in t over a pluggable coefficient ring.

use std::fmt;

use super::rat::Rat;
use super::ring::Ring;
use crate::error::{Error, Result};

/// `c_0 + c_1 t + ... + c_N t^N`, known modulo `t^(N+1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TSeries<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> TSeries<C> {
    /// Series of the given order from a (possibly shorter) coefficient list.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero_elem());
        coeffs.truncate(order + 1);
        TSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TSeries::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        TSeries::constant(C::one_elem(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        TSeries::new(vec![c], order)
    }

    /// The series `c·t^k`.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut v = vec![C::zero_elem(); order + 1];
        if k <= order {
            v[k] = c;
        }
        TSeries { coeffs: v }
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        TSeries::monomial(C::one_elem(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero_elem())
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero_elem())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> TSeries<D> {
        TSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        TSeries {
            coeffs: (0..=n).map(|k| self.coeffs[k].plus(&o.coeffs[k])).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        TSeries {
            coeffs: (0..=n).map(|k| self.coeffs[k].minus(&o.coeffs[k])).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.negated())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let mut out = vec![C::zero_elem(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero_elem() {
                    continue;
                }
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        TSeries { coeffs: out }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|a| a.times(c))
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        self.map(|a| a.scaled(r))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = TSeries::one(self.order());
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Multiplication by `t^k`; the order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut v = vec![C::zero_elem(); k];
        v.extend(self.coeffs.iter().cloned());
        TSeries { coeffs: v }
    }

    /// Division by `t^k`; fails unless the first `k` coefficients vanish. The order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::Precondition("shift exceeds series order".into()));
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero_elem()) {
            return Err(Error::InexactDivision);
        }
        Ok(TSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Multiplicative inverse modulo `t^(N+1)`; needs a unit constant term.
    pub fn inv(&self) -> Result<Self> {
        let b0 = self.coeffs[0].inverse().ok_or(Error::NotInvertible)?;
        let n = self.order();
        let mut b: Vec<C> = Vec::with_capacity(n + 1);
        b.push(b0.clone());
        for k in 1..=n {
            let mut acc = C::zero_elem();
            for j in 1..=k {
                if !self.coeffs[j].is_zero_elem() {
                    acc = acc.plus(&self.coeffs[j].times(&b[k - j]));
                }
            }
            b.push(acc.times(&b0).negated());
        }
        Ok(TSeries { coeffs: b })
    }

    /// Square root with constant term 1.
    pub fn sqrt(&self) -> Result<Self> {
        if self.coeffs[0] != C::one_elem() {
            return Err(Error::SqrtConstantTerm);
        }
        let half = C::from_rat(Rat::new(1.into(), 2.into()));
        let n = self.order();
        let mut r: Vec<C> = Vec::with_capacity(n + 1);
        r.push(C::one_elem());
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..k {
                acc = acc.minus(&r[j].times(&r[k - j]));
            }
            r.push(acc.times(&half));
        }
        Ok(TSeries { coeffs: r })
    }

    /// `Σ_k poly[k] · self^k` by Horner's rule.
    pub fn eval_poly(&self, poly: &[TSeries<C>]) -> Self {
        let mut acc = TSeries::zero(self.order());
        for c in poly.iter().rev() {
            acc = acc.mul(self).add(c);
        }
        acc
    }

    /// Formal derivative d/dt; the order drops by one.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return TSeries::zero(0);
        }
        TSeries {
            coeffs: (1..=n)
                .map(|k| self.coeffs[k].scaled(&Rat::from_integer(k.into())))
                .collect(),
        }
    }
}

impl TSeries<Rat> {
    pub fn from_rats(v: &[Rat]) -> Self {
        TSeries { coeffs: v.to_vec() }
    }
}

impl<C: Ring + fmt::Display> fmt::Display for TSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero_elem() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({})", c)?,
                1 => write!(f, "({})*t", c)?,
                _ => write!(f, "({})*t^{}", c, k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

/// Convenience: rational series from small integers.
pub fn rat_series(v: &[i64]) -> TSeries<Rat> {
    TSeries {
        coeffs: v.iter().map(|&k| Rat::from_integer(k.into())).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::LaurentPoly;
    use crate::algebra::rat::{rat, ratio};

    #[test]
    fn geometric_inverse() {
        let s = rat_series(&[1, -1, 0, 0, 0, 0]);
        assert_eq!(s.inv().unwrap(), rat_series(&[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn kernel_two_step_inverse() {
        // 1 - t(x + 1/x) -> Σ t^n (x+1/x)^n
        let n = 6;
        let step = LaurentPoly::from_terms([((1, 0), rat(1)), ((-1, 0), rat(1))]);
        let k = TSeries::new(vec![LaurentPoly::one(), -&step], n);
        let inv = k.inv().unwrap();
        for j in 0..=n {
            assert_eq!(inv.coeff(j), &step.pow(j as u32));
        }
    }

    #[test]
    fn non_invertible() {
        let s = rat_series(&[0, 1, 2]);
        assert_eq!(s.inv(), Err(Error::NotInvertible));
        let p = TSeries::new(vec![LaurentPoly::x().plus(&LaurentPoly::one())], 3);
        assert_eq!(p.inv(), Err(Error::NotInvertible));
    }

    #[test]
    fn sqrt_perfect_square_and_catalan() {
        let s = rat_series(&[1, 2, 1, 0, 0]);
        assert_eq!(s.sqrt().unwrap(), rat_series(&[1, 1, 0, 0, 0]));
        let r = rat_series(&[1, -4, 0, 0, 0, 0, 0]).sqrt().unwrap();
        // 1 - 2t - 2t² - 4t³ - 10t⁴ - 28t⁵ - 84t⁶
        assert_eq!(r, rat_series(&[1, -2, -2, -4, -10, -28, -84]));
        assert_eq!(r.mul(&r), rat_series(&[1, -4, 0, 0, 0, 0, 0]));
        assert_eq!(rat_series(&[2, 1]).sqrt(), Err(Error::SqrtConstantTerm));
    }

    #[test]
    fn shifting() {
        let s = rat_series(&[0, 0, 3, 4]);
        assert_eq!(s.shift_down(2).unwrap(), rat_series(&[3, 4]));
        assert_eq!(s.shift_down(3), Err(Error::InexactDivision));
        assert_eq!(s.shift_up(1).order(), 4);
        assert_eq!(s.scale_rat(&ratio(1, 2)).coeff(2), &ratio(3, 2));
    }
}
