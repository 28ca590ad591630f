//! Sparse Laurent polynomials in x and y.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::mpoly::{MPoly, Monomial, Var};
use super::rat::Rat;
use super::ring::Ring;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<(i32, i32), Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 0, Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        LaurentPoly::monomial(0, 0, c)
    }

    pub fn monomial(i: i32, j: i32, c: Rat) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn x() -> Self {
        LaurentPoly::monomial(1, 0, Rat::one())
    }

    pub fn y() -> Self {
        LaurentPoly::monomial(0, 1, Rat::one())
    }

    pub fn from_terms(it: impl IntoIterator<Item = ((i32, i32), Rat)>) -> Self {
        let mut p = LaurentPoly::zero();
        for ((i, j), c) in it {
            p.add_term(i, j, c);
        }
        p
    }

    /// Univariate in x: `Σ coeffs[k] x^(lo+k)`.
    pub fn x_poly(lo: i32, coeffs: &[Rat]) -> Self {
        LaurentPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| ((lo + k as i32, 0), c.clone())),
        )
    }

    /// Converts a polynomial in x and y. Panics if λ occurs.
    pub fn from_mpoly(p: &MPoly) -> Self {
        LaurentPoly::from_terms(p.terms().map(|(m, c)| {
            assert_eq!(m.exp(Var::L), 0, "λ not allowed in a Laurent polynomial");
            ((m.exp(Var::X) as i32, m.exp(Var::Y) as i32), c.clone())
        }))
    }

    /// Writes `self = x^i y^j · p` with `p` a polynomial not divisible by x or y.
    pub fn to_shifted_mpoly(&self) -> (i32, i32, MPoly) {
        if self.is_zero() {
            return (0, 0, MPoly::zero());
        }
        let i0 = self.min_x();
        let j0 = self.min_y();
        let p = MPoly::from_terms(self.terms.iter().map(|(&(i, j), c)| {
            (Monomial([(i - i0) as u32, (j - j0) as u32, 0]), c.clone())
        }));
        (i0, j0, p)
    }

    pub fn add_term(&mut self, i: i32, j: i32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: i32, j: i32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_x(&self) -> i32 {
        self.terms.keys().map(|k| k.0).min().unwrap_or(0)
    }

    pub fn max_x(&self) -> i32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn min_y(&self) -> i32 {
        self.terms.keys().map(|k| k.1).min().unwrap_or(0)
    }

    pub fn max_y(&self) -> i32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn shift(&self, di: i32, dj: i32) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), v)| ((i + di, j + dj), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = LaurentPoly::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    fn filter(&self, keep: impl Fn(i32, i32) -> bool) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, j), _)| keep(i, j))
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Terms x^i y^j with i ≥ 1 and j ≥ 1.
    pub fn positive_part(&self) -> Self {
        self.filter(|i, j| i >= 1 && j >= 1)
    }

    /// Everything `positive_part` discards.
    pub fn nonpositive_part(&self) -> Self {
        self.filter(|i, j| !(i >= 1 && j >= 1))
    }

    pub fn x_positive_part(&self) -> Self {
        self.filter(|i, _| i >= 1)
    }

    pub fn y_positive_part(&self) -> Self {
        self.filter(|_, j| j >= 1)
    }

    /// Replaces x by 1/x.
    pub fn invert_x(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&(i, j), v)| ((-i, j), v.clone())).collect(),
        }
    }

    pub fn swap_xy(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect(),
        }
    }

    /// Exact division by another Laurent polynomial.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (ai, aj, a) = self.to_shifted_mpoly();
        let (bi, bj, b) = d.to_shifted_mpoly();
        let q = a.exact_div(&b)?;
        Some(LaurentPoly::from_mpoly(&q).shift(ai - bi, aj - bj))
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &o.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &o.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut acc: BTreeMap<(i32, i32), Rat> = BTreeMap::new();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &o.terms {
                let e = acc.entry((i1 + i2, j1 + j2)).or_insert_with(Rat::zero);
                *e += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: acc }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

impl Ring for LaurentPoly {
    fn zero_elem() -> Self {
        LaurentPoly::zero()
    }
    fn one_elem() -> Self {
        LaurentPoly::one()
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
        LaurentPoly::constant(r)
    }
    /// Only monomials are units.
    fn inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&(i, j), c) = self.terms.iter().next().unwrap();
        Some(LaurentPoly::monomial(-i, -j, c.recip()))
    }
    fn scaled(&self, r: &Rat) -> Self {
        self.scale(r)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| {
                let mut s = c.to_string();
                if i != 0 {
                    s.push_str(&format!("*x^{}", i));
                }
                if j != 0 {
                    s.push_str(&format!("*y^{}", j));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    #[test]
    fn positive_parts() {
        // xy + x + 1/y + 1 -> xy
        let p = LaurentPoly::from_terms([
            ((1, 1), rat(1)),
            ((1, 0), rat(1)),
            ((0, -1), rat(1)),
            ((0, 0), rat(1)),
        ]);
        assert_eq!(p.positive_part(), LaurentPoly::monomial(1, 1, rat(1)));
        // x²y − x²/y -> x²y
        let q = LaurentPoly::from_terms([((2, 1), rat(1)), ((2, -1), rat(-1))]);
        assert_eq!(q.positive_part(), LaurentPoly::monomial(2, 1, rat(1)));
        assert_eq!(&p.positive_part() + &p.nonpositive_part(), p);
    }

    #[test]
    fn exact_division_laurent() {
        let a = LaurentPoly::from_terms([((-1, 0), rat(1)), ((1, 0), rat(1))]); // 1/x + x
        let b = LaurentPoly::from_terms([((-1, 0), rat(1)), ((0, 0), rat(1))]); // 1/x + 1
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b), Some(a.clone()));
        assert_eq!(a.exact_div(&b), None);
    }
}
