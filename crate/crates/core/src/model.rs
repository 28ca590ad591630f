//! Walk models: eight step multiplicities, triviality, equivalences and the model space.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::rat::{gcd_numers, lcm_denoms, parse_rat, Rat};
use crate::error::{Error, Result};

/// The fixed direction order.
pub const DIRS: [(i32, i32); 8] = [
    (-1, -1),
    (-1, 0),
    (-1, 1),
    (0, -1),
    (0, 1),
    (1, -1),
    (1, 0),
    (1, 1),
];

/// Position of `(u, v)` in [`DIRS`].
pub fn dir_index(u: i32, v: i32) -> usize {
    DIRS.iter()
        .position(|&d| d == (u, v))
        .unwrap_or_else(|| panic!("({}, {}) is not a step direction", u, v))
}

/// Index of the reflected direction `(v, u)`.
const REFLECT: [usize; 8] = [0, 3, 5, 1, 6, 2, 4, 7];

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Model {
    a: [Rat; 8],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Degeneracy {
    /// `a_{1,v} = 0` for all v.
    NoEast,
    /// `a_{u,1} = 0` for all u.
    NoNorth,
    /// `a_{-1,v} = 0` for all v.
    NoWest,
    /// `a_{u,-1} = 0` for all u.
    NoSouth,
    /// No step with `u, v ≥ 0`: the walk never leaves the origin.
    NoQuadrantStep,
    /// Every step has `u ≥ v`: the walk is confined to `j ≤ i`, a half-plane problem.
    StaysBelowDiagonal,
    /// Every step has `u ≤ v`.
    StaysAboveDiagonal,
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Degeneracy::NoEast => "no east-pointing step",
            Degeneracy::NoNorth => "no north-pointing step",
            Degeneracy::NoWest => "no west-pointing step",
            Degeneracy::NoSouth => "no south-pointing step",
            Degeneracy::NoQuadrantStep => "no step into the quadrant",
            Degeneracy::StaysBelowDiagonal => "all steps satisfy u >= v",
            Degeneracy::StaysAboveDiagonal => "all steps satisfy u <= v",
        };
        write!(f, "{}", s)
    }
}

impl Model {
    pub fn new(a: [Rat; 8]) -> Model {
        Model { a }
    }

    pub fn from_ints(a: [i64; 8]) -> Model {
        Model {
            a: a.map(|k| Rat::from_integer(BigInt::from(k))),
        }
    }

    /// Model with multiplicity 1 on the listed directions and 0 elsewhere.
    pub fn from_steps(steps: &[(i32, i32)]) -> Model {
        let mut a = [0i64; 8];
        for &(u, v) in steps {
            a[dir_index(u, v)] = 1;
        }
        Model::from_ints(a)
    }

    pub fn all_ones() -> Model {
        Model::from_ints([1; 8])
    }

    pub fn kreweras() -> Model {
        Model::from_steps(&[(1, 1), (-1, 0), (0, -1)])
    }

    pub fn reversed_kreweras() -> Model {
        Model::from_steps(&[(-1, -1), (1, 0), (0, 1)])
    }

    pub fn gessel() -> Model {
        Model::from_steps(&[(-1, -1), (-1, 0), (1, 0), (1, 1)])
    }

    pub fn simple() -> Model {
        Model::from_steps(&[(-1, 0), (1, 0), (0, -1), (0, 1)])
    }

    pub fn entries(&self) -> &[Rat; 8] {
        &self.a
    }

    pub fn get(&self, u: i32, v: i32) -> &Rat {
        &self.a[dir_index(u, v)]
    }

    pub fn with(&self, u: i32, v: i32, val: Rat) -> Model {
        let mut m = self.clone();
        m.a[dir_index(u, v)] = val;
        m
    }

    /// Nonzero steps with their multiplicities.
    pub fn steps(&self) -> impl Iterator<Item = ((i32, i32), &Rat)> {
        DIRS.iter().zip(self.a.iter()).filter(|(_, c)| !c.is_zero()).map(|(&d, c)| (d, c))
    }

    fn all_zero(&self, dirs: &[(i32, i32)]) -> bool {
        dirs.iter().all(|&(u, v)| self.get(u, v).is_zero())
    }

    /// The four row/column conditions; these also make Φ or Ψ undefined.
    pub fn basic_degeneracy(&self) -> Option<Degeneracy> {
        if self.all_zero(&[(1, -1), (1, 0), (1, 1)]) {
            Some(Degeneracy::NoEast)
        } else if self.all_zero(&[(-1, 1), (0, 1), (1, 1)]) {
            Some(Degeneracy::NoNorth)
        } else if self.all_zero(&[(-1, -1), (-1, 0), (-1, 1)]) {
            Some(Degeneracy::NoWest)
        } else if self.all_zero(&[(-1, -1), (0, -1), (1, -1)]) {
            Some(Degeneracy::NoSouth)
        } else {
            None
        }
    }

    /// Why the model is trivial, or `None` if it is interesting.
    pub fn degeneracy(&self) -> Option<Degeneracy> {
        if let Some(d) = self.basic_degeneracy() {
            return Some(d);
        }
        if self.all_zero(&[(1, 1), (1, 0), (0, 1)]) {
            Some(Degeneracy::NoQuadrantStep)
        } else if self.all_zero(&[(-1, 0), (-1, 1), (0, 1)]) {
            Some(Degeneracy::StaysBelowDiagonal)
        } else if self.all_zero(&[(0, -1), (1, -1), (1, 0)]) {
            Some(Degeneracy::StaysAboveDiagonal)
        } else {
            None
        }
    }

    pub fn is_uninteresting(&self) -> bool {
        self.degeneracy().is_some()
    }

    pub fn reflect(&self) -> Model {
        Model {
            a: std::array::from_fn(|k| self.a[REFLECT[k]].clone()),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.reflect()
    }

    /// Reverses every arrow: `a'_{u,v} = a_{-u,-v}`.
    pub fn reverse(&self) -> Model {
        Model {
            a: std::array::from_fn(|k| self.a[7 - k].clone()),
        }
    }

    pub fn scale(&self, lambda: &Rat) -> Result<Model> {
        if lambda.is_zero() {
            return Err(Error::ZeroScale);
        }
        Ok(Model {
            a: std::array::from_fn(|k| &self.a[k] * lambda),
        })
    }

    /// Integer-primitive multiple with positive first nonzero entry, and the factor used.
    fn primitive(&self) -> (Model, Rat) {
        let l = lcm_denoms(self.a.iter());
        let g = gcd_numers(self.a.iter());
        let mut s = Rat::new(l, g);
        if let Some(first) = self.a.iter().find(|c| !c.is_zero()) {
            if first.is_negative() {
                s = -s;
            }
        }
        (self.scale(&s).expect("nonzero factor"), s)
    }

    pub fn canonicalize(&self) -> Result<CanonicalModel> {
        if let Some(d) = self.degeneracy() {
            return Err(Error::Uninteresting(d.to_string()));
        }
        let (p, sp) = self.primitive();
        let (r, sr) = self.reflect().primitive();
        let orbit_size = if p == r { 1 } else { 2 };
        let (model, scaling_factor) = if r <= p { (r, sr) } else { (p, sp) };
        Ok(CanonicalModel {
            model,
            orbit_size,
            scaling_factor,
        })
    }

    pub fn is_integral(&self) -> bool {
        self.a.iter().all(|c| c.is_integer())
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Model> {
        let mut vals = Vec::with_capacity(8);
        let mut pos = 0;
        for field in s.split(',') {
            let v = parse_rat(field).ok_or_else(|| Error::Parse {
                pos,
                msg: format!("not a rational number: {:?}", field.trim()),
            })?;
            vals.push(v);
            pos += field.len() + 1;
        }
        if vals.len() != 8 {
            return Err(Error::Parse {
                pos: s.len(),
                msg: format!("expected 8 multiplicities, found {}", vals.len()),
            });
        }
        Ok(Model {
            a: vals.try_into().expect("length checked"),
        })
    }
}

impl Serialize for Model {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Model {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Model, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalModel {
    pub model: Model,
    /// 1 for diagonal-symmetric classes, 2 otherwise.
    pub orbit_size: u8,
    /// `model = scaling_factor · m` or `scaling_factor · reflect(m)`.
    pub scaling_factor: Rat,
}

/// Result of sweeping all multiplicity vectors with entries in `0..=max_mult`.
#[derive(Clone, Debug)]
pub struct Census {
    pub max_mult: u32,
    pub raw: u64,
    pub interesting: u64,
    /// Canonical representatives, sorted lexicographically.
    pub classes: Vec<Model>,
}

impl Census {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

fn int_degenerate(a: &[i64; 8]) -> bool {
    let z = |idx: &[usize]| idx.iter().all(|&k| a[k] == 0);
    z(&[5, 6, 7]) || z(&[2, 4, 7]) || z(&[0, 1, 2]) || z(&[0, 3, 5]) || z(&[7, 6, 4]) || z(&[1, 2, 4]) || z(&[3, 5, 6])
}

fn int_canonical(a: &[i64; 8]) -> [i64; 8] {
    let g = a.iter().fold(0i64, |g, &x| g.gcd(&x));
    let p = a.map(|x| x / g);
    let r: [i64; 8] = std::array::from_fn(|k| p[REFLECT[k]]);
    p.min(r)
}

/// Enumerates all `(max_mult+1)^8` nonnegative integer models and collects canonical classes.
pub fn enumerate_space(max_mult: u32) -> Census {
    let base = max_mult as u64 + 1;
    let raw = base.pow(8);
    if max_mult == 0 {
        return Census {
            max_mult,
            raw,
            interesting: 0,
            classes: Vec::new(),
        };
    }
    let chunks = 64u64;
    let per = raw.div_ceil(chunks);
    let parts: Vec<(u64, BTreeSet<[i64; 8]>)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut seen = BTreeSet::new();
            let mut count = 0u64;
            for idx in (c * per)..((c + 1) * per).min(raw) {
                let mut k = idx;
                let a: [i64; 8] = std::array::from_fn(|_| {
                    let d = (k % base) as i64;
                    k /= base;
                    d
                });
                if int_degenerate(&a) {
                    continue;
                }
                count += 1;
                seen.insert(int_canonical(&a));
            }
            (count, seen)
        })
        .collect();
    let mut interesting = 0;
    let mut all = BTreeSet::new();
    for (c, s) in parts {
        interesting += c;
        all.extend(s);
    }
    Census {
        max_mult,
        raw,
        interesting,
        classes: all.into_iter().map(Model::from_ints).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{rat, ratio};

    #[test]
    fn reflection_table_matches_directions() {
        for (k, &(u, v)) in DIRS.iter().enumerate() {
            assert_eq!(DIRS[REFLECT[k]], (v, u));
        }
    }

    #[test]
    fn degeneracy_conditions() {
        let m = Model::all_ones().with(1, -1, rat(0)).with(1, 0, rat(0)).with(1, 1, rat(0));
        assert_eq!(m.degeneracy(), Some(Degeneracy::NoEast));
        assert_eq!(Model::kreweras().degeneracy(), None);
        assert_eq!(Model::from_ints([0; 8]).degeneracy(), Some(Degeneracy::NoEast));
        assert!(!Model::all_ones().is_uninteresting());
    }

    #[test]
    fn parse_and_display() {
        let k: Model = "0,1,0,1,0,0,0,1".parse().unwrap();
        assert_eq!(k, Model::kreweras());
        assert_eq!(k.to_string(), "0,1,0,1,0,0,0,1");
        let m: Model = "1/2, -3,0,0,0,0,0,1".parse().unwrap();
        assert_eq!(m.get(-1, -1), &ratio(1, 2));
        assert!(matches!("1,2,3".parse::<Model>(), Err(Error::Parse { .. })));
        assert!(matches!("1,2,x,0,0,0,0,0".parse::<Model>(), Err(Error::Parse { pos: 4, .. })));
    }

    #[test]
    fn reflect_single_step() {
        let m = Model::from_steps(&[(1, 0)]);
        assert_eq!(m.reflect(), Model::from_steps(&[(0, 1)]));
    }

    #[test]
    fn canonical_forms() {
        let threes = Model::from_ints([3; 8]);
        assert_eq!(threes.canonicalize().unwrap().model, Model::all_ones());
        let twos = Model::all_ones().scale(&rat(2)).unwrap();
        assert_eq!(twos.canonicalize().unwrap().model, Model::all_ones());
        let m = Model::kreweras();
        assert_eq!(m.canonicalize().unwrap().model, m.reflect().canonicalize().unwrap().model);
        let neg = Model::kreweras().scale(&ratio(-2, 3)).unwrap();
        assert_eq!(neg.canonicalize().unwrap().model, Model::kreweras());
        assert!(Model::from_ints([0; 8]).canonicalize().is_err());
    }

    #[test]
    fn int_canonical_agrees_with_rational() {
        for a in [[0, 1, 0, 1, 0, 0, 0, 1], [2, 0, 4, 2, 6, 0, 2, 2], [3, 1, 0, 2, 1, 2, 0, 3]] {
            let m = Model::from_ints(a);
            assert_eq!(Model::from_ints(int_canonical(&a)), m.canonicalize().unwrap().model);
            assert_eq!(int_degenerate(&a), m.is_uninteresting());
        }
    }

    #[test]
    fn small_census() {
        assert_eq!(enumerate_space(0).class_count(), 0);
        let c = enumerate_space(1);
        assert_eq!(c.raw, 256);
        assert_eq!(c.class_count(), 79);
    }
}
