//! Sparse multivariate polynomials over the rationals in the variables x, y and λ.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp;
use super::rat::{add_to, gcd_numers, lcm_denoms, mul_rat, Rat};
use super::ring::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X = 0,
    Y = 1,
    L = 2,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::L];

    fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::L => "λ",
        }
    }
}

/// Exponent vector (x, y, λ). Ordered graded-lexicographically with x ≺ y ≺ λ.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v as usize] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v as usize]
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        (0..3).all(|i| self.0[i] <= o.0[i])
    }

    /// `o / self`, assuming `self` divides `o`.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        Monomial([o.0[0] - self.0[0], o.0[1] - self.0[1], o.0[2] - self.0[2]])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.0[2].cmp(&other.0[2]))
            .then(self.0[1].cmp(&other.0[1]))
            .then(self.0[0].cmp(&other.0[0]))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        MPoly::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        MPoly::term(Monomial::var(v), Rat::one())
    }

    pub fn x() -> Self {
        MPoly::var(Var::X)
    }

    pub fn y() -> Self {
        MPoly::var(Var::Y)
    }

    /// Univariate polynomial `Σ coeffs[k] v^k`.
    pub fn univariate(v: Var, coeffs: &[Rat]) -> Self {
        let mut p = MPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let mut e = [0; 3];
            e[v as usize] = k as u32;
            p.add_term(Monomial(e), c.clone());
        }
        p
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = MPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                add_to(o.get_mut(), &c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> + Clone {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(&Monomial::ONE).is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::ONE)
    }

    /// Leading term under graded-lex order.
    pub fn lead(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).min().unwrap_or(0)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, mul_rat(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut result = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Evaluates one variable at a rational value.
    pub fn eval_var(&self, v: Var, val: &Rat) -> MPoly {
        let mut out = MPoly::zero();
        let mut pows: Vec<Rat> = vec![Rat::one()];
        for (m, c) in &self.terms {
            let k = m.exp(v) as usize;
            while pows.len() <= k {
                let next = mul_rat(pows.last().unwrap(), val);
                pows.push(next);
            }
            let mut e = m.0;
            e[v as usize] = 0;
            out.add_term(Monomial(e), mul_rat(c, &pows[k]));
        }
        out
    }

    /// Coefficients with respect to `v`; entry k is the coefficient of v^k.
    pub fn coeffs_in(&self, v: Var) -> Vec<MPoly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![MPoly::zero(); if self.is_zero() { 0 } else { d + 1 }];
        for (m, c) in &self.terms {
            let k = m.exp(v) as usize;
            let mut e = m.0;
            e[v as usize] = 0;
            out[k].add_term(Monomial(e), c.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut e = m.0;
                e[v as usize] += k as u32;
                out.add_term(Monomial(e), a.clone());
            }
        }
        out
    }

    /// Splits off the rational content: returns `(c, p)` with `self = c·p`, `p` integral with
    /// coprime integer coefficients and positive leading coefficient.
    pub fn integer_primitive(&self) -> (Rat, MPoly) {
        if self.is_zero() {
            return (Rat::one(), MPoly::zero());
        }
        let l = lcm_denoms(self.terms.values());
        let g = gcd_numers(self.terms.values());
        let mut c = Rat::new(g, l);
        if self.lead().unwrap().1.is_negative() {
            c = -c;
        }
        let inv = c.recip();
        (c, self.scale(&inv))
    }

    /// Gcd-normal representative: integer-primitive with positive leading coefficient.
    pub fn normalized(&self) -> MPoly {
        self.integer_primitive().1
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &MPoly) -> Option<MPoly> {
        let (lm, lc) = d.lead()?;
        if d.terms.len() == 1 {
            let inv = lc.recip();
            let mut out = BTreeMap::new();
            for (m, c) in &self.terms {
                if !lm.divides(m) {
                    return None;
                }
                out.insert(lm.quotient_of(m), c * &inv);
            }
            return Some(MPoly { terms: out });
        }
        let lc_inv = lc.recip();
        let mut rem = self.clone();
        let mut q = MPoly::zero();
        while let Some((m, c)) = rem.lead() {
            if !lm.divides(m) {
                return None;
            }
            let qm = lm.quotient_of(m);
            let qc = mul_rat(c, &lc_inv);
            for (dm, dc) in &d.terms {
                rem.add_term(qm.mul(dm), -mul_rat(&qc, dc));
            }
            q.add_term(qm, qc);
        }
        Some(q)
    }

    /// Greatest common divisor, normalized to be integer-primitive with positive leading coefficient.
    pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
        if a.is_zero() {
            return b.normalized();
        }
        if b.is_zero() {
            return a.normalized();
        }
        if a.is_constant() || b.is_constant() {
            return MPoly::one();
        }
        if a.terms.len() == 1 && b.terms.len() == 1 {
            let ma = a.terms.keys().next().unwrap();
            let mb = b.terms.keys().next().unwrap();
            let e = [0, 1, 2].map(|i| ma.0[i].min(mb.0[i]));
            return MPoly::term(Monomial(e), Rat::one());
        }
        if coprime_certificate(a, b) {
            return MPoly::one();
        }
        let (_, ai) = a.integer_primitive();
        let (_, bi) = b.integer_primitive();
        if let Some(g) = heu_gcd(&to_ipoly(&ai), &to_ipoly(&bi), 0) {
            return from_ipoly(&g).normalized();
        }
        let main = Var::ALL
            .iter()
            .rev()
            .copied()
            .find(|&v| a.contains_var(v) || b.contains_var(v))
            .expect("nonconstant polynomial has a variable");
        gcd_in(a, b, main)
    }

    /// Content with respect to `v`: gcd of the coefficients in the remaining variables.
    pub fn content_in(&self, v: Var) -> MPoly {
        content_of(&self.coeffs_in(v))
    }

    pub fn derivative(&self, v: Var) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let k = m.exp(v);
            if k > 0 {
                let mut e = m.0;
                e[v as usize] -= 1;
                out.add_term(Monomial(e), c * Rat::from_integer(BigInt::from(k)));
            }
        }
        out
    }
}

/// Image of `p` in F_P[w] after evaluating the other variables at `pt`.
fn image_in(p: &MPoly, w: Var, pt: &[u64; 3]) -> Option<Vec<u64>> {
    let mut out = vec![0u64; p.degree_in(w) as usize + 1];
    for (m, c) in &p.terms {
        let mut v = modp::rat_mod(c)?;
        for u in Var::ALL {
            if u != w {
                v = modp::mulm(v, modp::powm(pt[u as usize], m.0[u as usize] as u64));
            }
        }
        let k = m.0[w as usize] as usize;
        out[k] = modp::addm(out[k], v);
    }
    Some(out)
}

/// Certifies `gcd(a, b) = 1` by modular images.
///
/// A nonconstant common factor G involves some variable w shared by `a` and `b`. If the
/// leading coefficient of `a` in w survives evaluation at a point, so does that of G, and the
/// image of G divides both images; a constant image gcd therefore rules out every such w.
/// Returns false when no certificate was found, which says nothing.
fn coprime_certificate(a: &MPoly, b: &MPoly) -> bool {
    let mut rng = modp::Residues::new(0x00c0_ffee);
    for w in Var::ALL {
        if !(a.contains_var(w) && b.contains_var(w)) {
            continue;
        }
        let mut certified = false;
        for _ in 0..3 {
            let pt = [rng.next_residue(), rng.next_residue(), rng.next_residue()];
            let (Some(ia), Some(ib)) = (image_in(a, w, &pt), image_in(b, w, &pt)) else {
                return false;
            };
            if ia.last() == Some(&0) {
                continue;
            }
            certified = modp::gcd_degree(&ia, &ib) == Some(0);
            break;
        }
        if !certified {
            return false;
        }
    }
    true
}

/// Integer polynomials for the heuristic gcd; no stored zeros.
type IPoly = BTreeMap<Monomial, BigInt>;

fn to_ipoly(p: &MPoly) -> IPoly {
    p.terms.iter().map(|(m, c)| (*m, c.to_integer())).collect()
}

fn from_ipoly(p: &IPoly) -> MPoly {
    MPoly {
        terms: p.iter().map(|(m, c)| (*m, Rat::from_integer(c.clone()))).collect(),
    }
}

fn ip_add_term(p: &mut IPoly, m: Monomial, c: BigInt) {
    if c.is_zero() {
        return;
    }
    let e = p.entry(m).or_insert_with(BigInt::zero);
    *e += c;
    if e.is_zero() {
        p.remove(&m);
    }
}

fn ip_has_var(p: &IPoly, v: Var) -> bool {
    p.keys().any(|m| m.exp(v) > 0)
}

fn ip_degree(p: &IPoly, v: Var) -> u32 {
    p.keys().map(|m| m.exp(v)).max().unwrap_or(0)
}

fn ip_content(p: &IPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p.values() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn ip_div_scalar(p: &IPoly, c: &BigInt) -> IPoly {
    p.iter().map(|(m, x)| (*m, x / c)).collect()
}

fn ip_eval(p: &IPoly, v: Var, xi: &BigInt) -> IPoly {
    let mut pows: Vec<BigInt> = vec![BigInt::one()];
    let mut out = IPoly::new();
    for (m, c) in p {
        let k = m.exp(v) as usize;
        while pows.len() <= k {
            let next = pows.last().unwrap() * xi;
            pows.push(next);
        }
        let mut e = m.0;
        e[v as usize] = 0;
        ip_add_term(&mut out, Monomial(e), c * &pows[k]);
    }
    out
}

/// Exact division over the integers; `false` if `d` does not divide `a`.
fn ip_divides(a: &IPoly, d: &IPoly) -> bool {
    let Some((lm, lc)) = d.iter().next_back() else {
        return false;
    };
    let mut rem = a.clone();
    while let Some((m, c)) = rem.iter().next_back() {
        if !lm.divides(m) {
            return false;
        }
        let (q, r) = c.div_rem(lc);
        if !r.is_zero() {
            return false;
        }
        let qm = lm.quotient_of(m);
        for (dm, dc) in d {
            ip_add_term(&mut rem, qm.mul(dm), -(&q * dc));
        }
    }
    true
}

fn sym_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Heuristic gcd of integer polynomials: evaluate the main variable at a large integer,
/// recurse, rebuild by ξ-adic expansion, accept only after trial division. The result carries
/// the gcd of the integer contents. `None` means the heuristic gave up.
fn heu_gcd(a: &IPoly, b: &IPoly, depth: u32) -> Option<IPoly> {
    if a.is_empty() {
        return Some(b.clone());
    }
    if b.is_empty() {
        return Some(a.clone());
    }
    let ca = ip_content(a);
    let cb = ip_content(b);
    let c = ca.gcd(&cb);
    let Some(v) = Var::ALL.iter().rev().copied().find(|&v| ip_has_var(a, v) || ip_has_var(b, v)) else {
        return Some(IPoly::from([(Monomial([0, 0, 0]), c)]));
    };
    if depth > 4 {
        return None;
    }
    let a = ip_div_scalar(a, &ca);
    let b = ip_div_scalar(b, &cb);
    let deg_bound = ip_degree(&a, v).min(ip_degree(&b, v));
    let norm = |p: &IPoly| p.values().map(|x| x.abs()).max().unwrap_or_else(BigInt::zero);
    let mut xi: BigInt = 2 * norm(&a).min(norm(&b)) + 29;
    for _ in 0..6 {
        let ea = ip_eval(&a, v, &xi);
        let eb = ip_eval(&b, v, &xi);
        if !ea.is_empty() && !eb.is_empty() {
            if let Some(mut gamma) = heu_gcd(&ea, &eb, depth + 1) {
                let mut g = IPoly::new();
                let mut i = 0u32;
                let mut ok = true;
                while !gamma.is_empty() {
                    if i > deg_bound {
                        ok = false;
                        break;
                    }
                    let mut next = IPoly::new();
                    for (m, x) in &gamma {
                        let gi = sym_mod(x, &xi);
                        let mut e = m.0;
                        e[v as usize] = i;
                        ip_add_term(&mut next, *m, (x - &gi) / &xi);
                        ip_add_term(&mut g, Monomial(e), gi);
                    }
                    gamma = next;
                    i += 1;
                }
                if ok && !g.is_empty() {
                    let gc = ip_content(&g);
                    let g = ip_div_scalar(&g, &gc);
                    if ip_divides(&a, &g) && ip_divides(&b, &g) {
                        return Some(g.iter().map(|(m, x)| (*m, x * &c)).collect());
                    }
                }
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

fn content_of(coeffs: &[MPoly]) -> MPoly {
    let mut g = MPoly::zero();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = MPoly::gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn trim(p: &mut Vec<MPoly>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Pseudo-remainder of `p` by `q`, both as coefficient vectors in one variable.
fn prem(p: &[MPoly], q: &[MPoly]) -> Vec<MPoly> {
    let dq = q.len() - 1;
    let lcq = &q[dq];
    let mut r: Vec<MPoly> = p.to_vec();
    trim(&mut r);
    while !r.is_empty() && r.len() - 1 >= dq {
        let dr = r.len() - 1;
        let lcr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * lcq;
        }
        let shift = dr - dq;
        for (j, qc) in q.iter().enumerate() {
            r[j + shift] = &r[j + shift] - &(&lcr * qc);
        }
        debug_assert!(r[dr].is_zero());
        trim(&mut r);
    }
    r
}

fn primitive_part(p: &[MPoly]) -> Vec<MPoly> {
    let c = content_of(p);
    let mut out: Vec<MPoly> = p
        .iter()
        .map(|x| x.exact_div(&c).expect("content divides"))
        .collect();
    // keep rational coefficients integral and small
    let l = lcm_denoms(out.iter().flat_map(|x| x.terms.values()));
    let g = gcd_numers(out.iter().flat_map(|x| x.terms.values()));
    if !g.is_zero() {
        let s = Rat::new(l, g);
        for x in out.iter_mut() {
            *x = x.scale(&s);
        }
    }
    out
}

fn gcd_in(a: &MPoly, b: &MPoly, v: Var) -> MPoly {
    let mut ac = a.coeffs_in(v);
    let mut bc = b.coeffs_in(v);
    let ca = content_of(&ac);
    let cb = content_of(&bc);
    let cont = MPoly::gcd(&ca, &cb);
    ac = primitive_part(&ac);
    bc = primitive_part(&bc);
    if ac.len() < bc.len() {
        std::mem::swap(&mut ac, &mut bc);
    }
    let (mut p, mut q) = (ac, bc);
    loop {
        if q.len() == 1 {
            return cont.normalized();
        }
        let r = prem(&p, &q);
        if r.is_empty() {
            let g = MPoly::from_coeffs_in(v, &q);
            return (&cont * &g).normalized();
        }
        let r = primitive_part(&r);
        p = q;
        q = r;
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        if self.is_zero() || o.is_zero() {
            return MPoly::zero();
        }
        if self.terms.values().all(|c| c.is_integer()) && o.terms.values().all(|c| c.is_integer()) {
            let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
            for (m1, c1) in &self.terms {
                for (m2, c2) in &o.terms {
                    *acc.entry(m1.mul(m2)).or_insert_with(BigInt::zero) += c1.numer() * c2.numer();
                }
            }
            return MPoly {
                terms: acc
                    .into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(m, c)| (m, Rat::from_integer(c)))
                    .collect(),
            };
        }
        let mut acc: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let e = acc.entry(m1.mul(m2)).or_insert_with(Rat::zero);
                *e += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MPoly { terms: acc }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Ring for MPoly {
    fn zero_elem() -> Self {
        MPoly::zero()
    }
    fn one_elem() -> Self {
        MPoly::one()
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
        MPoly::constant(r)
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_constant() && !self.is_zero() {
            Some(MPoly::constant(self.constant_term().recip()))
        } else {
            None
        }
    }
    fn scaled(&self, r: &Rat) -> Self {
        self.scale(r)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || *m == Monomial::ONE {
                parts.push(abs.to_string());
            }
            for v in Var::ALL {
                match m.exp(v) {
                    0 => {}
                    1 => parts.push(v.name().to_string()),
                    k => parts.push(format!("{}^{}", v.name(), k)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{rat, ratio};

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
    fn grlex_order() {
        let mx = Monomial([1, 0, 0]);
        let my = Monomial([0, 1, 0]);
        let ml = Monomial([0, 0, 1]);
        let mxx = Monomial([2, 0, 0]);
        assert!(mx < my && my < ml && ml < mxx);
        let p = &(&x() * &x()) + &y();
        assert_eq!(*p.lead().unwrap().0, mxx);
    }

    #[test]
    fn exact_division() {
        let a = &(&x() * &x()) - &c(1);
        let b = &x() - &c(1);
        assert_eq!(a.exact_div(&b), Some(&x() + &c(1)));
        assert_eq!(a.exact_div(&(&x() + &c(2))), None);
    }

    #[test]
    fn gcd_bivariate() {
        let f = &(&x() * &y()) + &c(1);
        let g1 = &x() - &y();
        let g2 = &(&x() * &x()) + &y();
        let a = &f * &g1;
        let b = &f * &g2;
        assert_eq!(MPoly::gcd(&a, &b), f.normalized());
        assert!(MPoly::gcd(&g1, &g2).is_one());
    }

    #[test]
    fn gcd_with_rational_content() {
        let f = (&x() - &y()).scale(&ratio(3, 2));
        let a = &f * &(&x() + &c(3));
        let b = &f * &y().scale(&rat(4));
        assert_eq!(MPoly::gcd(&a, &b), (&x() - &y()).normalized());
    }

    #[test]
    fn gcd_trivariate() {
        let l = MPoly::var(Var::L);
        let f = &(&x() * &l) - &(&y() * &y());
        let a = &f * &(&l + &x());
        let b = &f * &(&(&l * &y()) + &c(7));
        assert_eq!(MPoly::gcd(&a, &b), f.normalized());
    }

    #[test]
    fn display() {
        let p = &(&x().scale(&rat(3)) * &y()) - &c(2);
        assert_eq!(p.to_string(), "3*x*y - 2");
    }
}
