//! The group of a model: the involutions Φ and Ψ, their compositions, signs and orbit sums.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::modp::{addm, invm, mulm, rat_mod, P};
use crate::algebra::mpoly::{MPoly, Var};
use crate::algebra::rat::Rat;
use crate::algebra::ratfun::RatFun;
use crate::error::{Error, Result};
use crate::model::Model;

pub const DEFAULT_BOUND: u32 = 15;
pub const DEFAULT_DEGREE_CAP: u32 = 200;

/// A map `(x, y) ↦ (rx, ry)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BirationalMap {
    pub rx: RatFun,
    pub ry: RatFun,
}

impl BirationalMap {
    pub fn identity() -> BirationalMap {
        BirationalMap {
            rx: RatFun::var(Var::X),
            ry: RatFun::var(Var::Y),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == BirationalMap::identity()
    }

    pub fn degree(&self) -> u32 {
        self.rx.degree().max(self.ry.degree())
    }

    /// Substitutes this map into `f`: returns `f(rx, ry)`.
    pub fn apply(&self, f: &RatFun) -> Result<RatFun> {
        f.substitute(&[Some(&self.rx), Some(&self.ry), None])
    }
}

impl fmt::Display for BirationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x, y) -> ({}, {})", self.rx, self.ry)
    }
}

/// `g ∘ h`: the map `p ↦ g(h(p))`.
pub fn compose(g: &BirationalMap, h: &BirationalMap) -> Result<BirationalMap> {
    Ok(BirationalMap {
        rx: h.apply(&g.rx)?,
        ry: h.apply(&g.ry)?,
    })
}

fn ensure_defined(m: &Model) -> Result<()> {
    match m.basic_degeneracy() {
        Some(d) => Err(Error::Uninteresting(d.to_string())),
        None => Ok(()),
    }
}

/// `Σ_k c[k+1] z^(k)` for the three multiplicities of a row or column, shifted to a polynomial.
fn poly3(v: Var, c: [&Rat; 3]) -> MPoly {
    MPoly::univariate(v, &[c[0].clone(), c[1].clone(), c[2].clone()])
}

/// Φ: `x ↦ (1/x) · Σ_v a_{-1,v} y^v / Σ_v a_{1,v} y^v`.
pub fn phi(m: &Model) -> Result<BirationalMap> {
    ensure_defined(m)?;
    let west = poly3(Var::Y, [m.get(-1, -1), m.get(-1, 0), m.get(-1, 1)]);
    let east = poly3(Var::Y, [m.get(1, -1), m.get(1, 0), m.get(1, 1)]);
    Ok(BirationalMap {
        rx: RatFun::new(west, &MPoly::x() * &east)?,
        ry: RatFun::var(Var::Y),
    })
}

/// Ψ: `y ↦ (1/y) · Σ_u a_{u,-1} x^u / Σ_u a_{u,1} x^u`.
pub fn psi(m: &Model) -> Result<BirationalMap> {
    ensure_defined(m)?;
    let south = poly3(Var::X, [m.get(-1, -1), m.get(0, -1), m.get(1, -1)]);
    let north = poly3(Var::X, [m.get(-1, 1), m.get(0, 1), m.get(1, 1)]);
    Ok(BirationalMap {
        rx: RatFun::var(Var::X),
        ry: RatFun::new(south, &MPoly::y() * &north)?,
    })
}

/// `S(x, y) = Σ a_{u,v} x^u y^v` as a rational function.
pub fn step_polynomial(m: &Model) -> RatFun {
    let p = MPoly::from_terms(m.steps().map(|((u, v), c)| {
        (
            crate::algebra::mpoly::Monomial([(u + 1) as u32, (v + 1) as u32, 0]),
            c.clone(),
        )
    }));
    RatFun::new(p, &MPoly::x() * &MPoly::y()).expect("nonzero denominator")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupStatus {
    Finite,
    NotFiniteWithinBound,
    DegreeCapExceeded,
}

impl fmt::Display for GroupStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupStatus::Finite => "finite",
            GroupStatus::NotFiniteWithinBound => "not-finite-within-bound",
            GroupStatus::DegreeCapExceeded => "degree-cap-exceeded",
        };
        write!(f, "{}", s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub map: BirationalMap,
    pub sign: i8,
}

#[derive(Clone, Debug)]
pub struct GroupDescriptor {
    pub status: GroupStatus,
    /// `n` with `|G| = 2n`, when finite.
    pub half_order: Option<u32>,
    /// `(ΦΨ)^k` with sign +1 for `k < n`, then `(ΦΨ)^k Φ` with sign −1.
    pub elements: Vec<GroupElement>,
}

impl GroupDescriptor {
    pub fn order(&self) -> Option<u32> {
        self.half_order.map(|n| 2 * n)
    }

    pub fn is_finite(&self) -> bool {
        self.status == GroupStatus::Finite
    }

    fn infinite(status: GroupStatus) -> GroupDescriptor {
        GroupDescriptor {
            status,
            half_order: None,
            elements: Vec::new(),
        }
    }
}

/// How `group_order` decides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupMethod {
    /// Exact rational-function iteration only.
    Exact,
    /// Modular point-orbit screen first; exact iteration only for candidates that return.
    Screened,
}

/// Computes the group with the screened method.
pub fn group_order(m: &Model, bound: u32, degree_cap: u32) -> Result<GroupDescriptor> {
    group_order_with(m, bound, degree_cap, GroupMethod::Screened)
}

pub fn group_order_with(
    m: &Model,
    bound: u32,
    degree_cap: u32,
    method: GroupMethod,
) -> Result<GroupDescriptor> {
    let f = phi(m)?;
    let g = psi(m)?;
    if method == GroupMethod::Screened && screen(m, bound) == Screen::NoReturn {
        return Ok(GroupDescriptor::infinite(GroupStatus::NotFiniteWithinBound));
    }
    let r = compose(&f, &g)?;
    let mut cur = r.clone();
    let mut rotations = vec![BirationalMap::identity()];
    for k in 1..=bound {
        if cur.is_identity() {
            let mut elements: Vec<GroupElement> = rotations
                .iter()
                .map(|map| GroupElement { map: map.clone(), sign: 1 })
                .collect();
            for rot in &rotations {
                elements.push(GroupElement {
                    map: compose(rot, &f)?,
                    sign: -1,
                });
            }
            return Ok(GroupDescriptor {
                status: GroupStatus::Finite,
                half_order: Some(k),
                elements,
            });
        }
        if k == bound {
            break;
        }
        if cur.degree() > degree_cap {
            return Ok(GroupDescriptor::infinite(GroupStatus::DegreeCapExceeded));
        }
        rotations.push(cur.clone());
        cur = compose(&r, &cur)?;
    }
    Ok(GroupDescriptor::infinite(GroupStatus::NotFiniteWithinBound))
}

/// `Σ_g sgn(g) · g(x) · g(y)`.
pub fn orbit_sum(g: &GroupDescriptor) -> Result<RatFun> {
    if !g.is_finite() {
        return Err(Error::InfiniteGroup);
    }
    let mut acc = RatFun::zero();
    for e in &g.elements {
        let term = &e.map.rx * &e.map.ry;
        acc = if e.sign > 0 { &acc + &term } else { &acc - &term };
    }
    Ok(acc)
}

/// Checks `S(g(x), g(y)) = S(x, y)` for every element.
pub fn check_kernel_invariance(m: &Model, g: &GroupDescriptor) -> Result<bool> {
    if !g.is_finite() {
        return Err(Error::InfiniteGroup);
    }
    let s = step_polynomial(m);
    for e in &g.elements {
        if e.map.apply(&s)? != s {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------------------------
// Modular screen

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Screen {
    /// The orbit of a sample point did not close within the bound: the group is not finite
    /// within the bound.
    NoReturn,
    /// The sample orbits closed, or the screen could not decide.
    Candidate,
}

struct ModModel {
    a: [u64; 8],
}

impl ModModel {
    fn eval3(&self, idx: [usize; 3], z: u64) -> u64 {
        addm(addm(self.a[idx[0]], mulm(self.a[idx[1]], z)), mulm(self.a[idx[2]], mulm(z, z)))
    }

    /// One application of ΦΨ (Ψ first), or `None` at a pole.
    fn step(&self, x: u64, y: u64) -> Option<(u64, u64)> {
        // Ψ: y ↦ south(x) / (y · north(x))
        let south = self.eval3([0, 3, 5], x);
        let north = self.eval3([2, 4, 7], x);
        let y1 = mulm(south, invm(mulm(y, north))?);
        // Φ: x ↦ west(y) / (x · east(y))
        let west = self.eval3([0, 1, 2], y1);
        let east = self.eval3([5, 6, 7], y1);
        let x1 = mulm(west, invm(mulm(x, east))?);
        if x1 == 0 || y1 == 0 {
            return None;
        }
        Some((x1, y1))
    }
}

fn screen(m: &Model, bound: u32) -> Screen {
    let mut a = [0u64; 8];
    for (k, c) in m.entries().iter().enumerate() {
        match rat_mod(c) {
            Some(v) => a[k] = v,
            None => return Screen::Candidate,
        }
    }
    let mm = ModModel { a };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_9a11);
    let mut decided = 0;
    for _ in 0..8 {
        let (x0, y0) = (rng.gen_range(2..P), rng.gen_range(2..P));
        let (mut x, mut y) = (x0, y0);
        let mut closed = false;
        let mut pole = false;
        for _ in 0..bound {
            match mm.step(x, y) {
                Some((x1, y1)) => {
                    x = x1;
                    y = y1;
                }
                None => {
                    pole = true;
                    break;
                }
            }
            if (x, y) == (x0, y0) {
                closed = true;
                break;
            }
        }
        if pole {
            continue;
        }
        if !closed {
            return Screen::NoReturn;
        }
        decided += 1;
        if decided == 2 {
            break;
        }
    }
    Screen::Candidate
}

/// Summary for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub status: GroupStatus,
    pub order: Option<u32>,
}

impl From<&GroupDescriptor> for GroupSummary {
    fn from(g: &GroupDescriptor) -> Self {
        GroupSummary {
            status: g.status,
            order: g.order(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    fn rf(n: MPoly, d: MPoly) -> RatFun {
        RatFun::new(n, d).unwrap()
    }

    #[test]
    fn all_ones_phi_is_inversion() {
        let f = phi(&Model::all_ones()).unwrap();
        assert_eq!(f.rx, rf(MPoly::one(), MPoly::x()));
        assert_eq!(f.ry, RatFun::var(Var::Y));
        assert!(compose(&f, &f).unwrap().is_identity());
        let s = step_polynomial(&Model::all_ones());
        assert_eq!(f.apply(&s).unwrap(), s);
    }

    #[test]
    fn d4_example_phi() {
        let m = Model::from_ints([2, -3, 5, -7, 13, 6, -9, 15]);
        let f = phi(&m).unwrap();
        assert_eq!(f.rx, rf(MPoly::one(), MPoly::x().scale(&rat(3))));
        let g = group_order_with(&m, 15, 200, GroupMethod::Exact).unwrap();
        assert_eq!(g.order(), Some(4));
        assert!(check_kernel_invariance(&m, &g).unwrap());
    }

    #[test]
    fn known_orders() {
        assert_eq!(group_order(&Model::kreweras(), 15, 200).unwrap().order(), Some(6));
        assert_eq!(group_order(&Model::gessel(), 15, 200).unwrap().order(), Some(8));
        assert_eq!(group_order(&Model::simple(), 15, 200).unwrap().order(), Some(4));
        let d10: Model = "0,1,1,1,2,1,2,1".parse().unwrap();
        assert_eq!(group_order(&d10, 15, 200).unwrap().order(), Some(10));
    }

    #[test]
    fn infinite_example() {
        let m = Model::from_steps(&[(1, 1), (1, 0), (0, -1), (-1, 1)]);
        let g = group_order(&m, 15, 200).unwrap();
        assert_eq!(g.status, GroupStatus::NotFiniteWithinBound);
        let e = group_order_with(&m, 15, 60, GroupMethod::Exact).unwrap();
        assert_eq!(e.status, GroupStatus::DegreeCapExceeded);
    }

    #[test]
    fn orbit_sums() {
        let g = group_order(&Model::gessel(), 15, 200).unwrap();
        assert!(orbit_sum(&g).unwrap().is_zero());
        let k = group_order(&Model::kreweras(), 15, 200).unwrap();
        assert!(orbit_sum(&k).unwrap().is_zero());
        let s = group_order(&Model::simple(), 15, 200).unwrap();
        assert!(!orbit_sum(&s).unwrap().is_zero());
    }
}
