//! Iterated Laurent expansions of rational functions in x and y.
//!
//! A term order picks the outer variable and, for each variable, whether the expansion runs
//! in increasing or decreasing powers. Internally both directions are flipped to "increasing"
//! and the outer variable is renamed to the first coordinate.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::laurent::LaurentPoly;
use super::rat::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dir {
    /// Series in positive powers.
    Up,
    /// Series in negative powers.
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outer {
    X,
    Y,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TermOrder {
    pub outer: Outer,
    pub x_dir: Dir,
    pub y_dir: Dir,
}

impl TermOrder {
    pub const STANDARD: TermOrder = TermOrder {
        outer: Outer::X,
        x_dir: Dir::Up,
        y_dir: Dir::Up,
    };

    /// All eight combinations.
    pub fn all() -> Vec<TermOrder> {
        let mut v = Vec::new();
        for outer in [Outer::X, Outer::Y] {
            for x_dir in [Dir::Up, Dir::Down] {
                for y_dir in [Dir::Up, Dir::Down] {
                    v.push(TermOrder { outer, x_dir, y_dir });
                }
            }
        }
        v
    }

    fn fwd(&self, (i, j): (i32, i32)) -> (i32, i32) {
        let i = if self.x_dir == Dir::Up { i } else { -i };
        let j = if self.y_dir == Dir::Up { j } else { -j };
        match self.outer {
            Outer::X => (i, j),
            Outer::Y => (j, i),
        }
    }

    fn back(&self, (a, b): (i32, i32)) -> (i32, i32) {
        let (i, j) = match self.outer {
            Outer::X => (a, b),
            Outer::Y => (b, a),
        };
        let i = if self.x_dir == Dir::Up { i } else { -i };
        let j = if self.y_dir == Dir::Up { j } else { -j };
        (i, j)
    }

    fn transform(&self, p: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(p.terms().map(|(&e, c)| (self.fwd(e), c.clone())))
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = |d: Dir| if d == Dir::Up { "+" } else { "-" };
        let o = if self.outer == Outer::X { "x" } else { "y" };
        write!(f, "outer={} x{} y{}", o, d(self.x_dir), d(self.y_dir))
    }
}

/// A univariate Laurent series `Σ c[m] y^(val+m)`, exact for exponents below `val + c.len()`.
#[derive(Clone, Debug)]
struct LSer {
    val: i32,
    c: Vec<Rat>,
}

impl LSer {
    fn prec(&self) -> i32 {
        self.val + self.c.len() as i32
    }

    fn zero_from(val: i32, prec: i32) -> LSer {
        LSer {
            val,
            c: vec![Rat::zero(); (prec - val).max(0) as usize],
        }
    }

    fn get(&self, e: i32) -> Rat {
        if e < self.val {
            return Rat::zero();
        }
        debug_assert!(e < self.prec());
        self.c[(e - self.val) as usize].clone()
    }

    fn truncate(mut self, prec: i32) -> LSer {
        let len = (prec - self.val).max(0) as usize;
        if len < self.c.len() {
            self.c.truncate(len);
        }
        self
    }

    /// Reindexes to start at `val ≤ self.val`.
    fn with_val(self, val: i32) -> LSer {
        if val >= self.val {
            return self;
        }
        let mut c = vec![Rat::zero(); (self.val - val) as usize];
        c.extend(self.c);
        LSer { val, c }
    }

    fn mul(&self, o: &LSer, prec: i32) -> LSer {
        let val = self.val + o.val;
        let prec = prec.min(self.prec() + o.val).min(o.prec() + self.val);
        let mut out = LSer::zero_from(val, prec);
        let n = out.c.len();
        for (i, a) in self.c.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    out.c[i + j] += a * b;
                }
            }
        }
        out
    }

    /// Product with a finite polynomial given by its exponent map.
    fn mul_poly(&self, p: &BTreeMap<i32, Rat>, prec: i32) -> LSer {
        let pl = *p.keys().next().expect("nonzero polynomial");
        let val = self.val + pl;
        let prec = prec.min(self.prec() + pl);
        let mut out = LSer::zero_from(val, prec);
        for (&e, c) in p {
            for (m, a) in self.c.iter().enumerate() {
                let k = (e + self.val + m as i32 - val) as usize;
                if k >= out.c.len() {
                    break;
                }
                if !a.is_zero() {
                    out.c[k] += c * a;
                }
            }
        }
        out
    }

    fn add_assign(&mut self, o: &LSer) {
        let prec = self.prec().min(o.prec());
        let val = self.val.min(o.val);
        let mut s = std::mem::replace(self, LSer::zero_from(0, 0)).with_val(val).truncate(prec);
        for e in o.val..prec {
            s.c[(e - val) as usize] += o.get(e);
        }
        *self = s;
    }

    /// Inverse of a nonzero polynomial, known below `prec`.
    fn inverse_poly(p: &BTreeMap<i32, Rat>, prec: i32) -> LSer {
        let (&m, c0) = p.iter().next().expect("nonzero polynomial");
        let inv0 = c0.recip();
        let val = -m;
        let n = (prec - val).max(1) as usize;
        let mut b: Vec<Rat> = Vec::with_capacity(n);
        b.push(inv0.clone());
        for k in 1..n {
            let mut acc = Rat::zero();
            for (&e, c) in p.iter().skip(1) {
                let j = (e - m) as usize;
                if j > k {
                    break;
                }
                acc += c * &b[k - j];
            }
            b.push(-(acc * &inv0));
        }
        LSer { val, c: b }
    }
}

fn group_outer(p: &LaurentPoly) -> BTreeMap<i32, BTreeMap<i32, Rat>> {
    let mut m: BTreeMap<i32, BTreeMap<i32, Rat>> = BTreeMap::new();
    for (&(a, b), c) in p.terms() {
        m.entry(a).or_default().insert(b, c.clone());
    }
    m
}

/// A window of an iterated Laurent series.
///
/// In internal coordinates every coefficient below `lo` (in either coordinate, with the other
/// at most `hi`) is zero, and every coefficient in `[lo, hi]` is stored exactly.
#[derive(Clone, Debug)]
pub struct IterLaurent {
    order: TermOrder,
    lo: (i32, i32),
    hi: (i32, i32),
    data: Vec<Rat>,
    exact: bool,
}

impl IterLaurent {
    /// Expands `num/den` so that every coefficient `x^i y^j` with `(i, j)` in the box
    /// `[corner_a, corner_b]` (original coordinates) is known.
    pub fn expand(
        num: &LaurentPoly,
        den: &LaurentPoly,
        order: TermOrder,
        corner_a: (i32, i32),
        corner_b: (i32, i32),
    ) -> IterLaurent {
        assert!(!den.is_zero(), "zero denominator");
        let ta = order.fwd(corner_a);
        let tb = order.fwd(corner_b);
        let hi = (ta.0.max(tb.0), ta.1.max(tb.1));
        let n = group_outer(&order.transform(num));
        let d = group_outer(&order.transform(den));
        if n.is_empty() {
            return IterLaurent::zero(order, hi);
        }
        let i0 = *d.keys().next().unwrap();
        let d0 = &d[&i0];
        let v0 = -*d0.keys().next().unwrap();
        let pmin = *n.keys().next().unwrap();
        let kmax = hi.0 - pmin + i0;
        if kmax < 0 {
            return IterLaurent::zero(order, hi);
        }
        let kmax = kmax as usize;
        // d_{i0+j}: (j, min exponent, poly)
        let dj: Vec<(usize, i32, &BTreeMap<i32, Rat>)> = d
            .iter()
            .skip(1)
            .map(|(&a, p)| ((a - i0) as usize, *p.keys().next().unwrap(), p))
            .filter(|(j, _, _)| *j <= kmax)
            .collect();

        // valuation lower bounds
        let mut low = vec![0i32; kmax + 1];
        let mut present = vec![false; kmax + 1];
        low[0] = v0;
        present[0] = true;
        for k in 1..=kmax {
            let mut best: Option<i32> = None;
            for &(j, m, _) in &dj {
                if j <= k && present[k - j] {
                    let v = m + low[k - j];
                    best = Some(best.map_or(v, |b: i32| b.min(v)));
                }
            }
            if let Some(b) = best {
                low[k] = v0 + b;
                present[k] = true;
            }
        }

        // required precisions, propagated from the window back to g_0
        let mut need = vec![i32::MIN; kmax + 1];
        for (&p, np) in &n {
            let nl = *np.keys().next().unwrap();
            for a in (p - i0)..=hi.0 {
                let k = (a - p + i0) as usize;
                if present[k] {
                    need[k] = need[k].max(hi.1 + 1 - nl);
                }
            }
        }
        for k in (1..=kmax).rev() {
            if !present[k] || need[k] == i32::MIN {
                continue;
            }
            need[0] = need[0].max(need[k] - (low[k] - v0));
            for &(j, m, _) in &dj {
                if j <= k && present[k - j] {
                    need[k - j] = need[k - j].max(need[k] - v0 - m);
                }
            }
        }

        let mut exact = true;
        let g0 = LSer::inverse_poly(d0, need[0].max(v0 + 1));
        let mut g: Vec<Option<LSer>> = vec![None; kmax + 1];
        g[0] = Some(g0.clone());
        for k in 1..=kmax {
            if !present[k] || need[k] == i32::MIN {
                continue;
            }
            let target = need[k] - v0;
            let sval = low[k] - v0;
            let mut s = LSer::zero_from(sval, target);
            for &(j, _, p) in &dj {
                if j <= k {
                    if let Some(gk) = &g[k - j] {
                        let term = gk.mul_poly(p, target);
                        s.add_assign(&term);
                    }
                }
            }
            let s = s.with_val(sval);
            let mut gk = g0.mul(&s, need[k]);
            for c in gk.c.iter_mut() {
                *c = -c.clone();
            }
            if gk.prec() < need[k] {
                exact = false;
            }
            g[k] = Some(gk);
        }

        // assemble the window
        let lo_a = pmin - i0;
        let mut lo_b = i32::MAX;
        for (&p, np) in &n {
            let nl = *np.keys().next().unwrap();
            for a in (p - i0)..=hi.0 {
                let k = (a - p + i0) as usize;
                if let Some(gk) = &g[k] {
                    lo_b = lo_b.min(nl + gk.val);
                }
            }
        }
        if lo_b == i32::MAX || lo_b > hi.1 {
            return IterLaurent::zero(order, hi);
        }
        let mut out = IterLaurent {
            order,
            lo: (lo_a, lo_b),
            hi,
            data: Vec::new(),
            exact,
        };
        out.data = vec![Rat::zero(); out.width() * out.height()];
        for (&p, np) in &n {
            for a in (p - i0)..=hi.0 {
                let k = (a - p + i0) as usize;
                let Some(gk) = &g[k] else { continue };
                let prod = gk.mul_poly(np, hi.1 + 1);
                if prod.prec() <= hi.1 {
                    out.exact = false;
                }
                for b in prod.val.max(lo_b)..prod.prec().min(hi.1 + 1) {
                    let idx = out.index(a, b);
                    let v = prod.get(b);
                    if !v.is_zero() {
                        out.data[idx] += v;
                    }
                }
            }
        }
        out
    }

    fn zero(order: TermOrder, hi: (i32, i32)) -> IterLaurent {
        IterLaurent {
            order,
            lo: (hi.0 + 1, hi.1 + 1),
            hi,
            data: Vec::new(),
            exact: true,
        }
    }

    fn width(&self) -> usize {
        (self.hi.1 - self.lo.1 + 1).max(0) as usize
    }

    fn height(&self) -> usize {
        (self.hi.0 - self.lo.0 + 1).max(0) as usize
    }

    fn index(&self, a: i32, b: i32) -> usize {
        (a - self.lo.0) as usize * self.width() + (b - self.lo.1) as usize
    }

    fn get_internal(&self, a: i32, b: i32) -> Option<Rat> {
        if a > self.hi.0 || b > self.hi.1 {
            return None;
        }
        if a < self.lo.0 || b < self.lo.1 {
            return Some(Rat::zero());
        }
        Some(self.data[self.index(a, b)].clone())
    }

    pub fn term_order(&self) -> TermOrder {
        self.order
    }

    /// False if some stored coefficient could not be computed to full precision.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Coefficient of `x^i y^j`, or `None` outside the known region.
    pub fn coeff(&self, i: i32, j: i32) -> Option<Rat> {
        let (a, b) = self.order.fwd((i, j));
        self.get_internal(a, b)
    }

    /// Product with a Laurent polynomial; the known region shrinks accordingly.
    pub fn mul_laurent(&self, p: &LaurentPoly) -> IterLaurent {
        let tp = self.order.transform(p);
        if tp.is_zero() || self.data.is_empty() {
            let mut z = IterLaurent::zero(self.order, self.hi);
            if !tp.is_zero() {
                z.hi = (self.hi.0 + tp.min_x(), self.hi.1 + tp.min_y());
                z.lo = (z.hi.0 + 1, z.hi.1 + 1);
            }
            z.exact = self.exact;
            return z;
        }
        let (ua, ub) = (tp.min_x(), tp.min_y());
        let mut out = IterLaurent {
            order: self.order,
            lo: (self.lo.0 + ua, self.lo.1 + ub),
            hi: (self.hi.0 + ua, self.hi.1 + ub),
            data: Vec::new(),
            exact: self.exact,
        };
        out.data = vec![Rat::zero(); out.width() * out.height()];
        let w = self.width() as i32;
        for (&(pa, pb), c) in tp.terms() {
            for (idx, v) in self.data.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let a = self.lo.0 + idx as i32 / w + pa;
                let b = self.lo.1 + idx as i32 % w + pb;
                if a > out.hi.0 || b > out.hi.1 {
                    continue;
                }
                let k = out.index(a, b);
                out.data[k] += c * v;
            }
        }
        out
    }

    /// Known nonzero coefficients in original coordinates.
    pub fn nonzero_terms(&self) -> Vec<((i32, i32), Rat)> {
        let w = self.width() as i32;
        let mut v: Vec<((i32, i32), Rat)> = self
            .data
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| {
                let a = self.lo.0 + idx as i32 / w;
                let b = self.lo.1 + idx as i32 % w;
                (self.order.back((a, b)), c.clone())
            })
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    fn lp(t: &[((i32, i32), i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(t.iter().map(|&(e, c)| (e, rat(c))))
    }

    #[test]
    fn geometric_in_each_direction() {
        // 1/(1 - x): up gives Σ x^k, down gives -Σ_{k≥1} x^{-k}
        let num = LaurentPoly::one();
        let den = lp(&[((0, 0), 1), ((1, 0), -1)]);
        let up = IterLaurent::expand(&num, &den, TermOrder::STANDARD, (-5, -5), (5, 5));
        for k in 0..=5 {
            assert_eq!(up.coeff(k, 0), Some(rat(1)));
            assert_eq!(up.coeff(-k - 1, 0), Some(rat(0)));
        }
        let down_order = TermOrder {
            outer: Outer::X,
            x_dir: Dir::Down,
            y_dir: Dir::Up,
        };
        let dn = IterLaurent::expand(&num, &den, down_order, (-5, -5), (5, 5));
        for k in 1..=5 {
            assert_eq!(dn.coeff(-k, 0), Some(rat(-1)));
        }
        assert_eq!(dn.coeff(0, 0), Some(rat(0)));
        assert_eq!(dn.coeff(3, 0), Some(rat(0)));
    }

    #[test]
    fn outer_variable_matters() {
        // 1/(x - y): outer x (|x| small) is -1/y · 1/(1 - x/y) = -Σ x^k y^{-k-1}
        let den = lp(&[((1, 0), 1), ((0, 1), -1)]);
        let ox = IterLaurent::expand(&LaurentPoly::one(), &den, TermOrder::STANDARD, (0, -6), (4, 4));
        for k in 0..=4 {
            assert_eq!(ox.coeff(k, -k - 1), Some(rat(-1)), "k={}", k);
        }
        let oy = TermOrder {
            outer: Outer::Y,
            x_dir: Dir::Up,
            y_dir: Dir::Up,
        };
        let ey = IterLaurent::expand(&LaurentPoly::one(), &den, oy, (-6, 0), (4, 4));
        for k in 0..=4 {
            assert_eq!(ey.coeff(-k - 1, k), Some(rat(1)));
        }
    }

    #[test]
    fn product_with_denominator_recovers_numerator() {
        let num = lp(&[((0, 0), 3), ((1, 2), -2), ((-1, 1), 5)]);
        let den = lp(&[((0, 0), 2), ((1, 0), 1), ((0, 1), -1), ((1, 1), 3), ((0, -1), 1)]);
        for order in TermOrder::all() {
            let e = IterLaurent::expand(&num, &den, order, (-8, -8), (8, 8));
            assert!(e.is_exact());
            let back = e.mul_laurent(&den);
            for i in -4..=4 {
                for j in -4..=4 {
                    if let Some(v) = back.coeff(i, j) {
                        assert_eq!(v, num.coeff(i, j), "{} at ({},{})", order, i, j);
                    }
                }
            }
            // the region around the numerator must be known
            for &((i, j), _) in &[((0, 0), 0), ((1, 2), 0), ((-1, 1), 0)] {
                assert!(back.coeff(i, j).is_some(), "{} lost ({},{})", order, i, j);
            }
        }
    }
}
