//! Guessing algebraic equations, P-recurrences and linear ODEs for exact series.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rat::{lcm_denoms, Rat};
use crate::algebra::series::TSeries;
use crate::error::{Error, Result};

/// Spare equations required beyond the number of unknowns.
pub const DEFAULT_MARGIN: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EquationKind {
    /// `Σ_k p_k(t) T^k = 0`.
    Algebraic,
    /// `Σ_k p_k(n) s(n+k) = 0`.
    Recurrence,
    /// `Σ_k p_k(t) D_t^k s = 0`.
    Ode,
}

/// A primitive integer equation; `coeffs[k][d]` is the coefficient of `t^d` (or `n^d`) in `p_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GuessedEquation {
    pub kind: EquationKind,
    #[serde(with = "big_table")]
    pub coeffs: Vec<Vec<BigInt>>,
    /// Degree in `T`, or recurrence/ODE order.
    pub order: usize,
    /// Degree bound of the `p_k`.
    pub degree: usize,
    /// Number of data terms used for fitting.
    pub terms: usize,
    /// Linear equations beyond the number of unknowns.
    pub spare: usize,
}

mod big_table {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<Vec<String>> = v.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
        strs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        let strs = Vec::<Vec<String>>::deserialize(d)?;
        strs.iter()
            .map(|r| {
                r.iter()
                    .map(|c| c.parse().map_err(|_| serde::de::Error::custom(format!("bad integer {:?}", c))))
                    .collect()
            })
            .collect()
    }
}

impl GuessedEquation {
    /// Degree actually used by the `p_k`.
    pub fn effective_degree(&self) -> usize {
        self.coeffs
            .iter()
            .filter_map(|p| p.iter().rposition(|c| !c.is_zero()))
            .max()
            .unwrap_or(0)
    }

    /// Highest `k` with `p_k ≠ 0`.
    pub fn effective_order(&self) -> usize {
        self.coeffs.iter().rposition(|p| p.iter().any(|c| !c.is_zero())).unwrap_or(0)
    }

    /// Terms needed by [`verify_fit`].
    pub fn extended_terms(&self) -> usize {
        (5 * self.terms).div_ceil(4)
    }
}

fn poly_str(p: &[BigInt], var: &str) -> String {
    let mut parts = Vec::new();
    for (d, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mono = match d {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{}^{}", var, d),
        };
        let abs = c.abs();
        let body = if mono.is_empty() {
            abs.to_string()
        } else if abs.is_one() {
            mono
        } else {
            format!("{}*{}", abs, mono)
        };
        let sign = if c.is_negative() { "-" } else { "+" };
        if parts.is_empty() {
            parts.push(if c.is_negative() { format!("-{}", body) } else { body });
        } else {
            parts.push(format!("{} {}", sign, body));
        }
    }
    parts.join(" ")
}

impl fmt::Display for GuessedEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = if self.kind == EquationKind::Recurrence { "n" } else { "t" };
        let mut first = true;
        for (k, p) in self.coeffs.iter().enumerate() {
            if p.iter().all(|c| c.is_zero()) {
                continue;
            }
            let op = match (self.kind, k) {
                (EquationKind::Algebraic, 0) => String::new(),
                (EquationKind::Algebraic, 1) => "T".to_string(),
                (EquationKind::Algebraic, _) => format!("T^{}", k),
                (EquationKind::Recurrence, 0) => "s(n)".to_string(),
                (EquationKind::Recurrence, _) => format!("s(n+{})", k),
                (EquationKind::Ode, 0) => "s".to_string(),
                (EquationKind::Ode, _) => format!("D^{} s", k),
            };
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let ps = poly_str(p, var);
            if op.is_empty() {
                write!(f, "({})", ps)?;
            } else {
                write!(f, "({})*{}", ps, op)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " = 0")
    }
}

/// Fraction-free elimination of an integer matrix; returns a primitive nullspace vector
/// supported on the smallest possible prefix of columns, if the nullspace is nontrivial.
pub fn first_kernel_vector(rows: Vec<Vec<BigInt>>, ncols: usize) -> Option<Vec<BigInt>> {
    let mut a = rows;
    let nrows = a.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let piv_row = &top[r];
        for row in rest.iter_mut() {
            let f = row[c].clone();
            for j in c..ncols {
                let v = &piv_row[c] * &row[j] - &f * &piv_row[j];
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero());
                row[j] = q;
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    let free = (0..ncols).find(|c| !pivots.contains(c))?;
    let mut x: Vec<Rat> = vec![Rat::zero(); ncols];
    x[free] = Rat::one();
    for (i, &pc) in pivots.iter().enumerate().rev() {
        if pc > free {
            continue;
        }
        let mut s = Rat::zero();
        for j in pc + 1..=free {
            if !a[i][j].is_zero() {
                s += Rat::from_integer(a[i][j].clone()) * &x[j];
            }
        }
        x[pc] = -s / Rat::from_integer(a[i][pc].clone());
    }
    Some(primitive(&x))
}

/// Clears denominators, divides by the content and makes the last nonzero entry positive.
fn primitive(x: &[Rat]) -> Vec<BigInt> {
    let l = lcm_denoms(x);
    let mut v: Vec<BigInt> = x.iter().map(|r| (r * Rat::from_integer(l.clone())).to_integer()).collect();
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    if v.iter().rev().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) {
        for c in v.iter_mut() {
            *c = -&*c;
        }
    }
    v
}

/// Integer rows from rational rows, each scaled by its denominator lcm.
fn integer_rows(rows: Vec<Vec<Rat>>) -> Vec<Vec<BigInt>> {
    rows.into_iter()
        .map(|r| {
            let l = lcm_denoms(&r);
            r.iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect()
        })
        .collect()
}

fn rat_pow_usize(n: usize, d: usize) -> Rat {
    Rat::from_integer(BigInt::from(n).pow(d as u32))
}

/// Powers `s^0, ..., s^k` to the precision of `s`.
fn powers(s: &[Rat], k: usize) -> Vec<Vec<Rat>> {
    let ser = TSeries::new(s.to_vec(), s.len() - 1);
    let mut out = vec![TSeries::one(s.len() - 1)];
    for i in 1..=k {
        out.push(out[i - 1].mul(&ser));
    }
    out.into_iter().map(|p| p.into_coeffs()).collect()
}

/// `k`-th derivatives of `s`, each known to `len - k` terms.
fn derivatives(s: &[Rat], k: usize) -> Vec<Vec<Rat>> {
    let mut out = vec![s.to_vec()];
    for i in 1..=k {
        let prev = &out[i - 1];
        let d: Vec<Rat> = (1..prev.len()).map(|m| &prev[m] * Rat::from_integer(BigInt::from(m))).collect();
        out.push(d);
    }
    out
}

/// Linear system whose row `m` is the coefficient of `t^m` (or the recurrence at `n = m`).
struct System {
    kind: EquationKind,
    order: usize,
    degree: usize,
    basis: Vec<Vec<Rat>>,
    rows: usize,
}

impl System {
    fn new(kind: EquationKind, data: &[Rat], order: usize, degree: usize) -> Option<System> {
        let len = data.len();
        let (basis, rows) = match kind {
            EquationKind::Algebraic => {
                if len == 0 {
                    return None;
                }
                (powers(data, order), len)
            }
            EquationKind::Recurrence => {
                if len <= order {
                    return None;
                }
                (vec![data.to_vec()], len - order)
            }
            EquationKind::Ode => {
                if len <= order {
                    return None;
                }
                (derivatives(data, order), len - order)
            }
        };
        Some(System {
            kind,
            order,
            degree,
            basis,
            rows,
        })
    }

    fn unknowns(&self) -> usize {
        (self.order + 1) * (self.degree + 1)
    }

    fn entry(&self, m: usize, k: usize, d: usize) -> Rat {
        match self.kind {
            EquationKind::Algebraic | EquationKind::Ode => {
                if d > m {
                    Rat::zero()
                } else {
                    self.basis[k][m - d].clone()
                }
            }
            EquationKind::Recurrence => rat_pow_usize(m, d) * &self.basis[0][m + k],
        }
    }

    fn matrix(&self) -> Vec<Vec<Rat>> {
        (0..self.rows)
            .map(|m| {
                let mut row = Vec::with_capacity(self.unknowns());
                for k in 0..=self.order {
                    for d in 0..=self.degree {
                        row.push(self.entry(m, k, d));
                    }
                }
                row
            })
            .collect()
    }

    fn residual_zero(&self, coeffs: &[Vec<BigInt>]) -> bool {
        (0..self.rows).all(|m| {
            let mut s = Rat::zero();
            for (k, p) in coeffs.iter().enumerate() {
                for (d, c) in p.iter().enumerate() {
                    if !c.is_zero() {
                        s += Rat::from_integer(c.clone()) * self.entry(m, k, d);
                    }
                }
            }
            s.is_zero()
        })
    }
}

/// Guessing with a configurable confirmation margin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guesser {
    pub margin: usize,
}

impl Default for Guesser {
    fn default() -> Self {
        Guesser { margin: DEFAULT_MARGIN }
    }
}

impl Guesser {
    /// Terms needed for the given kind and bounds.
    pub fn needed(&self, kind: EquationKind, order: usize, degree: usize) -> usize {
        let unknowns = (order + 1) * (degree + 1);
        match kind {
            EquationKind::Algebraic => unknowns + self.margin,
            EquationKind::Recurrence | EquationKind::Ode => unknowns + order + self.margin,
        }
    }

    pub fn guess(&self, kind: EquationKind, data: &[Rat], order: usize, degree: usize) -> Result<Option<GuessedEquation>> {
        let needed = self.needed(kind, order, degree);
        if data.len() < needed {
            return Err(Error::InsufficientTerms { needed, have: data.len() });
        }
        let sys = System::new(kind, data, order, degree).expect("length checked");
        let n = sys.unknowns();
        let Some(v) = first_kernel_vector(integer_rows(sys.matrix()), n) else {
            return Ok(None);
        };
        let coeffs: Vec<Vec<BigInt>> = v.chunks(degree + 1).map(|c| c.to_vec()).collect();
        debug_assert!(sys.residual_zero(&coeffs));
        Ok(Some(GuessedEquation {
            kind,
            coeffs,
            order,
            degree,
            terms: data.len(),
            spare: sys.rows - n,
        }))
    }

    pub fn guess_algebraic(&self, s: &TSeries<Rat>, max_deg_f: usize, max_deg_t: usize) -> Result<Option<GuessedEquation>> {
        self.guess(EquationKind::Algebraic, s.coeffs(), max_deg_f, max_deg_t)
    }

    pub fn guess_recurrence(&self, seq: &[Rat], max_order: usize, max_deg: usize) -> Result<Option<GuessedEquation>> {
        self.guess(EquationKind::Recurrence, seq, max_order, max_deg)
    }

    pub fn guess_ode(&self, s: &TSeries<Rat>, max_order: usize, max_deg: usize) -> Result<Option<GuessedEquation>> {
        self.guess(EquationKind::Ode, s.coeffs(), max_order, max_deg)
    }
}

/// `P(t, T)` with `deg_T ≤ max_deg_T_var` and `deg_t ≤ max_deg_t` annihilating `s` to its full order.
pub fn guess_algebraic(s: &TSeries<Rat>, max_deg_f: usize, max_deg_t: usize) -> Result<Option<GuessedEquation>> {
    Guesser::default().guess_algebraic(s, max_deg_f, max_deg_t)
}

/// `Σ_{k ≤ max_order} p_k(n) seq(n+k) = 0` with `deg p_k ≤ max_deg`, for every available `n`.
pub fn guess_recurrence(seq: &[Rat], max_order: usize, max_deg: usize) -> Result<Option<GuessedEquation>> {
    Guesser::default().guess_recurrence(seq, max_order, max_deg)
}

/// `Σ_{k ≤ max_order} p_k(t) s^{(k)} = 0` with `deg p_k ≤ max_deg`, to the full available order.
pub fn guess_ode(s: &TSeries<Rat>, max_order: usize, max_deg: usize) -> Result<Option<GuessedEquation>> {
    Guesser::default().guess_ode(s, max_order, max_deg)
}

/// Whether the equation annihilates every term of `data`.
pub fn annihilates(eq: &GuessedEquation, data: &[Rat]) -> bool {
    match System::new(eq.kind, data, eq.coeffs.len() - 1, eq.degree) {
        Some(sys) => sys.residual_zero(&eq.coeffs),
        None => true,
    }
}

/// True iff `data` extends the fitted data by at least 25% and the equation annihilates all of it.
pub fn verify_fit(eq: &GuessedEquation, data: &[Rat]) -> bool {
    data.len() >= eq.extended_terms() && annihilates(eq, data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;
    use crate::algebra::series::rat_series;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn geometric_recurrence() {
        let seq: Vec<Rat> = (0..20).map(|n| rat(1 << n)).collect();
        let eq = guess_recurrence(&seq, 1, 0).unwrap().unwrap();
        assert_eq!(eq.coeffs, vec![ints(&[-2]), ints(&[1])]);
        assert_eq!(eq.to_string(), "(-2)*s(n) + (1)*s(n+1) = 0");
    }

    #[test]
    fn constant_series() {
        let s = TSeries::one(12);
        let eq = guess_algebraic(&s, 1, 0).unwrap().unwrap();
        assert_eq!(eq.coeffs, vec![ints(&[-1]), ints(&[1])]);
    }

    #[test]
    fn geometric_ode() {
        let s = rat_series(&[1; 16]);
        let eq = guess_ode(&s, 1, 1).unwrap().unwrap();
        assert_eq!(eq.coeffs, vec![ints(&[1, 0]), ints(&[-1, 1])]);
    }

    #[test]
    fn exp_ode() {
        let mut c = vec![rat(1)];
        for n in 1..20 {
            let prev: Rat = c[n - 1].clone();
            c.push(prev / rat(n as i64));
        }
        let s = TSeries::from_rats(&c);
        let eq = guess_ode(&s, 1, 0).unwrap().unwrap();
        assert_eq!(eq.coeffs, vec![ints(&[-1]), ints(&[1])]);
    }

    #[test]
    fn insufficient_terms() {
        let s = rat_series(&[1, 2, 3]);
        assert_eq!(
            guess_algebraic(&s, 1, 1),
            Err(Error::InsufficientTerms { needed: 12, have: 3 })
        );
    }

    #[test]
    fn none_for_transcendental_bounds() {
        let mut c = vec![rat(1)];
        for n in 1..40 {
            let prev: Rat = c[n - 1].clone();
            c.push(prev / rat(n as i64));
        }
        let s = TSeries::from_rats(&c);
        assert_eq!(guess_algebraic(&s, 2, 2).unwrap(), None);
    }

    #[test]
    fn fit_and_canary() {
        let seq: Vec<Rat> = (0..40).map(|n| rat(3i64.pow(n as u32 / 2))).collect();
        let eq = guess_recurrence(&seq[..30], 2, 0).unwrap().unwrap();
        assert!(verify_fit(&eq, &seq[..38]));
        assert!(!verify_fit(&eq, &seq[..34]));
        let mut bad = seq.clone();
        *bad.last_mut().unwrap() += rat(1);
        assert!(!verify_fit(&eq, &bad));
    }

    #[test]
    fn json_round_trip() {
        let seq: Vec<Rat> = (0..20).map(|n| rat(1 << n)).collect();
        let eq = guess_recurrence(&seq, 1, 0).unwrap().unwrap();
        let j = serde_json::to_string(&eq).unwrap();
        assert!(j.contains(r#""kind":"recurrence""#));
        assert!(j.contains(r#""coeffs":[["-2"],["1"]]"#));
        let back: GuessedEquation = serde_json::from_str(&j).unwrap();
        assert_eq!(back, eq);
    }

    #[test]
    fn kernel_vector_is_prefix_minimal() {
        let rows = vec![ints(&[1, 2, 3, 4]), ints(&[2, 4, 7, 9])];
        let v = first_kernel_vector(rows, 4).unwrap();
        assert_eq!(v, ints(&[-2, 1, 0, 0]));
        assert_eq!(first_kernel_vector(vec![ints(&[1, 0]), ints(&[0, 1])], 2), None);
    }
}
