//! Exact walk counts by dynamic programming, and the series they define.

use std::io::Write;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::mpoly::{MPoly, Monomial, Var};
use crate::algebra::rat::Rat;
use crate::algebra::series::TSeries;
use crate::model::{Model, DIRS};

/// `f_{i,j,n}` for `0 ≤ i, j ≤ n ≤ N`.
#[derive(Clone, Debug, PartialEq)]
pub struct CountTable {
    model: Model,
    order: usize,
    /// `levels[n][i * (n+1) + j]`
    levels: Vec<Vec<Rat>>,
}

fn step_recurrence<C: Clone + Zero>(
    prev: &[C],
    n: usize,
    steps: &[((i32, i32), C)],
    mul: impl Fn(&C, &C) -> C,
) -> Vec<C> {
    let w = n + 2;
    let mut next = vec![C::zero(); w * w];
    let pw = n + 1;
    for i in 0..pw {
        for j in 0..pw {
            let f = &prev[i * pw + j];
            if f.is_zero() {
                continue;
            }
            for ((u, v), a) in steps {
                let (ni, nj) = (i as i32 + u, j as i32 + v);
                if ni < 0 || nj < 0 {
                    continue;
                }
                let k = ni as usize * w + nj as usize;
                next[k] = next[k].clone() + mul(a, f);
            }
        }
    }
    next
}

/// Fills the table by `f_{i,j,n+1} = Σ a_{u,v} f_{i-u,j-v,n}` with zero boundary values.
pub fn count_walks(m: &Model, order: usize) -> CountTable {
    let levels = if m.is_integral() {
        let steps: Vec<((i32, i32), BigInt)> = m.steps().map(|(d, c)| (d, c.to_integer())).collect();
        let mut lv: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
        for n in 0..order {
            let next = step_recurrence(&lv[n], n, &steps, |a, b| a * b);
            lv.push(next);
        }
        lv.into_iter()
            .map(|l| l.into_iter().map(Rat::from_integer).collect())
            .collect()
    } else {
        let steps: Vec<((i32, i32), Rat)> = m.steps().map(|(d, c)| (d, c.clone())).collect();
        let mut lv: Vec<Vec<Rat>> = vec![vec![Rat::from_integer(1.into())]];
        for n in 0..order {
            let next = step_recurrence(&lv[n], n, &steps, |a, b| a * b);
            lv.push(next);
        }
        lv
    };
    CountTable {
        model: m.clone(),
        order,
        levels,
    }
}

impl CountTable {
    pub fn model(&self) -> &Model {
        &self.model
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `f_{i,j,n}`, zero outside the table's support.
    pub fn get(&self, i: i64, j: i64, n: usize) -> Rat {
        assert!(n <= self.order, "length {} beyond table order {}", n, self.order);
        if i < 0 || j < 0 || i as usize > n || j as usize > n {
            return Rat::zero();
        }
        self.levels[n][i as usize * (n + 1) + j as usize].clone()
    }

    pub fn set(&mut self, i: usize, j: usize, n: usize, v: Rat) {
        self.levels[n][i * (n + 1) + j] = v;
    }

    /// Total weight of walks of length n.
    pub fn total(&self, n: usize) -> Rat {
        self.levels[n].iter().sum()
    }

    pub fn series_f00(&self) -> TSeries<Rat> {
        TSeries::new((0..=self.order).map(|n| self.get(0, 0, n)).collect(), self.order)
    }

    fn axis_series(&self, v: Var, f: impl Fn(usize, usize) -> Rat) -> TSeries<MPoly> {
        TSeries::new(
            (0..=self.order)
                .map(|n| MPoly::univariate(v, &(0..=n).map(|k| f(k, n)).collect::<Vec<_>>()))
                .collect(),
            self.order,
        )
    }

    /// `f(x, 0, t)`.
    pub fn series_fx0(&self) -> TSeries<MPoly> {
        self.axis_series(Var::X, |k, n| self.get(k as i64, 0, n))
    }

    /// `f(0, y, t)`.
    pub fn series_f0y(&self) -> TSeries<MPoly> {
        self.axis_series(Var::Y, |k, n| self.get(0, k as i64, n))
    }

    /// `d(x, t) = Σ f_{i,i,n} x^i t^n`.
    pub fn series_diag(&self) -> TSeries<MPoly> {
        self.axis_series(Var::X, |k, n| self.get(k as i64, k as i64, n))
    }

    /// `f(x, y, t)` with polynomial coefficients.
    pub fn series_full(&self) -> TSeries<MPoly> {
        TSeries::new((0..=self.order).map(|n| self.level_poly(n)).collect(), self.order)
    }

    fn level_poly(&self, n: usize) -> MPoly {
        let w = n + 1;
        MPoly::from_terms(
            self.levels[n]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (Monomial([(k / w) as u32, (k % w) as u32, 0]), c.clone())),
        )
    }

    /// Writes `n,i,j,count` rows for the nonzero entries.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "n,i,j,count")?;
        for n in 0..=self.order {
            for i in 0..=n {
                for j in 0..=n {
                    let c = self.get(i as i64, j as i64, n);
                    if !c.is_zero() {
                        writeln!(w, "{},{},{},{}", n, i, j, c)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Residual of the functional equation, multiplied through by `xy`:
///
/// `xy·K·f − xy + t·(a_{-1,-1} + a_{0,-1}x + a_{1,-1}x²)·f(x,0) + t·(a_{-1,-1} + a_{-1,0}y + a_{-1,1}y²)·f(0,y) − t·a_{-1,-1}·f(0,0)`
///
/// where `K = 1 − t·Σ a_{u,v} x^u y^v`. Every coefficient `t^0 … t^N` must vanish.
pub fn check_functional_equation(m: &Model, ct: &CountTable) -> TSeries<MPoly> {
    let n = ct.order();
    let f = ct.series_full();
    let fx0 = ct.series_fx0();
    let f0y = ct.series_f0y();
    let f00 = ct.series_f00();
    let xy = MPoly::term(Monomial([1, 1, 0]), Rat::from_integer(1.into()));
    let xys = MPoly::from_terms(
        DIRS.iter()
            .zip(m.entries())
            .map(|(&(u, v), c)| (Monomial([(u + 1) as u32, (v + 1) as u32, 0]), c.clone())),
    );
    let bx = MPoly::univariate(Var::X, &[m.get(-1, -1).clone(), m.get(0, -1).clone(), m.get(1, -1).clone()]);
    let cy = MPoly::univariate(Var::Y, &[m.get(-1, -1).clone(), m.get(-1, 0).clone(), m.get(-1, 1).clone()]);
    let a = m.get(-1, -1).clone();
    let mut res = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut r = &xy * f.coeff(k);
        if k == 0 {
            r = &r - &xy;
        } else {
            r = &r - &(&xys * f.coeff(k - 1));
            r = &r + &(&bx * fx0.coeff(k - 1));
            r = &r + &(&cy * f0y.coeff(k - 1));
            r = &r - &MPoly::constant(&a * f00.coeff(k - 1));
        }
        res.push(r);
    }
    TSeries::new(res, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    #[test]
    fn first_values() {
        let ct = count_walks(&Model::simple(), 6);
        assert_eq!(ct.get(0, 0, 0), rat(1));
        assert_eq!(ct.get(0, 0, 2), rat(2));
        let k = count_walks(&Model::kreweras(), 6);
        assert_eq!(k.get(0, 0, 3), rat(2));
        assert_eq!(k.get(0, 0, 1), rat(0));
    }

    #[test]
    fn length_two_to_01_is_generic() {
        // f_{0,1,2} = a_{-1,1} a_{1,0} + a_{-1,0} a_{1,1}
        let m = Model::from_ints([2, 3, 5, 7, 11, 13, 17, 19]);
        let ct = count_walks(&m, 2);
        assert_eq!(ct.get(0, 1, 2), rat(5 * 17 + 3 * 19));
    }

    #[test]
    fn functional_equation_and_canary() {
        for m in [Model::all_ones(), Model::kreweras()] {
            let ct = count_walks(&m, 20);
            assert!(check_functional_equation(&m, &ct).is_zero());
        }
        let m = Model::all_ones();
        let mut ct = count_walks(&m, 10);
        let v = ct.get(1, 1, 4) + rat(1);
        ct.set(1, 1, 4, v);
        assert!(!check_functional_equation(&m, &ct).is_zero());
    }

    #[test]
    fn csv_export() {
        let ct = count_walks(&Model::kreweras(), 2);
        let mut out = Vec::new();
        ct.write_csv(&mut out).unwrap();
        let s = String::from_utf8(out).unwrap();
        assert!(s.starts_with("n,i,j,count\n0,0,0,1\n"));
    }
}
