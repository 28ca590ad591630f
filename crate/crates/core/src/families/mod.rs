//! The D4, D6, D8 and D10 families: membership and formula verification.

mod closed_form;
mod orbit;
mod report;
mod substitution;

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::rat::{rat, Rat};
use crate::error::{Error, Result};
use crate::model::Model;

pub use closed_form::{
    d10_guess, solve_lazy_quadratic, D10Guess, D10_ALGEBRAIC_BOUNDS, verify_d10_closed_forms, verify_family1b_lambda,
    verify_family2b, verify_kernel_roots_1b, z_d10, z_family1b, z_family2b,
};
pub use orbit::{orbit_prefactor, verify_orbit_formula, verify_positive_part, OrbitCheck};
pub use report::{CheckRecord, Status};
pub use substitution::{
    family1b_constants, family1b_model, family2b_constants, family2b_model, gessel_constants, kreweras_constants, reversed_kreweras_constants,
    verify_family1b_substitution, verify_family2b_substitution, verify_gessel_substitution,
    verify_kreweras_substitution, verify_reversed_kreweras_substitution, verify_scaling, Scaling,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilyTag {
    F0,
    F1a,
    F1b,
    F2a,
    F2b,
    F3a,
    F3b,
    F4a,
    F4b,
    D10Left,
    D10Mid,
    D10Right,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 12] = [
        FamilyTag::F0,
        FamilyTag::F1a,
        FamilyTag::F1b,
        FamilyTag::F2a,
        FamilyTag::F2b,
        FamilyTag::F3a,
        FamilyTag::F3b,
        FamilyTag::F4a,
        FamilyTag::F4b,
        FamilyTag::D10Left,
        FamilyTag::D10Mid,
        FamilyTag::D10Right,
    ];

    /// Order of the group of every interesting member.
    pub fn group_order(self) -> u32 {
        match self {
            FamilyTag::F0 => 4,
            FamilyTag::F1a
            | FamilyTag::F1b
            | FamilyTag::F2a
            | FamilyTag::F2b
            | FamilyTag::F3a
            | FamilyTag::F3b => 6,
            FamilyTag::F4a | FamilyTag::F4b => 8,
            FamilyTag::D10Left | FamilyTag::D10Mid | FamilyTag::D10Right => 10,
        }
    }

    pub fn is_d10(self) -> bool {
        self.group_order() == 10
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::F0 => "F0",
            FamilyTag::F1a => "F1a",
            FamilyTag::F1b => "F1b",
            FamilyTag::F2a => "F2a",
            FamilyTag::F2b => "F2b",
            FamilyTag::F3a => "F3a",
            FamilyTag::F3b => "F3b",
            FamilyTag::F4a => "F4a",
            FamilyTag::F4b => "F4b",
            FamilyTag::D10Left => "D10_left",
            FamilyTag::D10Mid => "D10_mid",
            FamilyTag::D10Right => "D10_right",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilyTag> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("unknown family tag {:?}", s),
            })
    }
}

/// One matched family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TagMatch {
    pub tag: FamilyTag,
    /// The defining equations hold for the reflected model rather than the model itself.
    pub reflected: bool,
    /// Family parameter, where one exists and is rational.
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "crate::algebra::rat::serde_opt_str"
    )]
    pub lambda: Option<Rat>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMembership {
    pub matches: Vec<TagMatch>,
}

impl FamilyMembership {
    pub fn tags(&self) -> Vec<FamilyTag> {
        let mut v: Vec<FamilyTag> = self.matches.iter().map(|m| m.tag).collect();
        v.dedup();
        v
    }

    pub fn has(&self, tag: FamilyTag) -> bool {
        self.matches.iter().any(|m| m.tag == tag)
    }

    pub fn get(&self, tag: FamilyTag) -> Option<&TagMatch> {
        self.matches.iter().find(|m| m.tag == tag)
    }

    pub fn is_empty(&self) -> bool {
        self.matches.is_empty()
    }

    /// Carries a tag from one of the D4, D6 or D8 families.
    pub fn is_family_covered(&self) -> bool {
        self.matches.iter().any(|m| !m.tag.is_d10())
    }
}

fn a(m: &Model, u: i32, v: i32) -> &Rat {
    m.get(u, v)
}

fn zero(m: &Model, dirs: &[(i32, i32)]) -> bool {
    dirs.iter().all(|&(u, v)| a(m, u, v).is_zero())
}

/// `λ` with `a_{-1,v} = λ a_{1,v}` for all `v`.
pub fn f0_lambda(m: &Model) -> Option<Rat> {
    let west = [a(m, -1, -1), a(m, -1, 0), a(m, -1, 1)];
    let east = [a(m, 1, -1), a(m, 1, 0), a(m, 1, 1)];
    let k = east.iter().position(|c| !c.is_zero())?;
    let lambda = west[k] / east[k];
    if lambda.is_zero() {
        return None;
    }
    west.iter().zip(east.iter()).all(|(w, e)| **w == &lambda * *e).then_some(lambda)
}

fn f1a(m: &Model) -> Option<Option<Rat>> {
    let p = a(m, -1, 1) * a(m, 1, -1);
    (zero(m, &[(1, 1), (-1, -1)]) && p == a(m, -1, 0) * a(m, 1, 0) && p == a(m, 0, 1) * a(m, 0, -1))
        .then_some(Some(p))
}

fn f1b(m: &Model) -> Option<Option<Rat>> {
    let p = a(m, -1, 0) * a(m, 1, 0);
    if !(zero(m, &[(1, -1), (-1, 1)]) && p == a(m, -1, -1) * a(m, 1, 1) && p == a(m, 0, -1) * a(m, 0, 1)) {
        return None;
    }
    let lambda = if (a(m, 1, 1) * a(m, -1, -1)).is_zero() {
        None
    } else {
        Some(substitution::family1b_constants(m).ok()?.0)
    };
    Some(lambda)
}

fn f2a(m: &Model) -> bool {
    let two = rat(2);
    let four = rat(4);
    zero(m, &[(1, 0), (1, 1)])
        && a(m, 0, -1) * a(m, -1, 1) == &two * a(m, 0, 1) * a(m, -1, -1)
        && a(m, 0, -1) * a(m, 0, -1) == &four * a(m, 1, -1) * a(m, -1, -1)
        && a(m, 0, -1) * a(m, 0, 1) == &two * a(m, -1, 1) * a(m, 1, -1)
}

fn f2b(m: &Model) -> bool {
    let two = rat(2);
    let four = rat(4);
    zero(m, &[(1, 0), (1, -1)])
        && a(m, 0, 1) * a(m, -1, -1) == &two * a(m, 0, -1) * a(m, -1, 1)
        && a(m, 0, 1) * a(m, 0, 1) == &four * a(m, 1, 1) * a(m, -1, 1)
        && a(m, 0, 1) * a(m, 0, -1) == &two * a(m, -1, -1) * a(m, 1, 1)
}

fn f3a(m: &Model) -> bool {
    let two = rat(2);
    let four = rat(4);
    zero(m, &[(-1, 0), (-1, -1)])
        && a(m, 0, 1) * a(m, 1, -1) == &two * a(m, 0, -1) * a(m, 1, 1)
        && a(m, 0, 1) * a(m, 0, 1) == &four * a(m, -1, 1) * a(m, 1, 1)
        && a(m, 0, 1) * a(m, 0, -1) == &two * a(m, 1, -1) * a(m, -1, 1)
}

fn f3b(m: &Model) -> bool {
    let two = rat(2);
    let four = rat(4);
    zero(m, &[(-1, 0), (-1, 1)])
        && a(m, 0, -1) * a(m, 1, 1) == &two * a(m, 0, 1) * a(m, 1, -1)
        && a(m, 0, -1) * a(m, 0, -1) == &four * a(m, -1, -1) * a(m, 1, -1)
        && a(m, 0, -1) * a(m, 0, 1) == &two * a(m, 1, 1) * a(m, -1, -1)
}

fn f4a(m: &Model) -> bool {
    zero(m, &[(1, 1), (0, 1), (0, -1), (-1, -1)]) && a(m, 1, -1) * a(m, -1, 1) == a(m, 1, 0) * a(m, -1, 0)
}

fn f4b(m: &Model) -> bool {
    zero(m, &[(1, -1), (0, -1), (0, 1), (-1, 1)]) && a(m, 1, 1) * a(m, -1, -1) == a(m, 1, 0) * a(m, -1, 0)
}

fn f2b_lambda(m: &Model) -> Option<Rat> {
    substitution::family2b_constants(m).ok().map(|s| s.0)
}

/// The three D10 models as displayed.
pub const D10_MODELS: [(FamilyTag, &str); 3] = [
    (FamilyTag::D10Left, "0,1,1,1,2,1,2,1"),
    (FamilyTag::D10Mid, "1,2,1,2,1,1,1,0"),
    (FamilyTag::D10Right, "1,2,1,1,2,0,1,1"),
];

/// The D10 model for a tag, as displayed (not necessarily canonical).
pub fn d10_model(tag: FamilyTag) -> Option<Model> {
    D10_MODELS
        .iter()
        .find(|(t, _)| *t == tag)
        .map(|(_, s)| s.parse().expect("valid model string"))
}

/// Matches against the three D10 models up to reflection and scaling.
pub fn d10_detect(m: &Model) -> Option<FamilyTag> {
    let c = m.canonicalize().ok()?.model;
    D10_MODELS.iter().find_map(|(tag, s)| {
        let d: Model = s.parse().expect("valid model string");
        (d.canonicalize().expect("interesting").model == c).then_some(*tag)
    })
}

fn tag_one(m: &Model, reflected: bool, out: &mut Vec<TagMatch>) {
    let mut push = |tag, lambda| {
        if !out.iter().any(|t: &TagMatch| t.tag == tag) {
            out.push(TagMatch { tag, reflected, lambda });
        }
    };
    if let Some(l) = f0_lambda(m) {
        push(FamilyTag::F0, Some(l));
    }
    if let Some(l) = f1a(m) {
        push(FamilyTag::F1a, l);
    }
    if let Some(l) = f1b(m) {
        push(FamilyTag::F1b, l);
    }
    if f2a(m) {
        push(FamilyTag::F2a, None);
    }
    if f2b(m) {
        push(FamilyTag::F2b, f2b_lambda(m));
    }
    if f3a(m) {
        push(FamilyTag::F3a, None);
    }
    if f3b(m) {
        push(FamilyTag::F3b, None);
    }
    if f4a(m) {
        push(FamilyTag::F4a, None);
    }
    if f4b(m) {
        push(FamilyTag::F4b, None);
    }
}

/// Evaluates every family's defining equations on the model and on its reflection.
pub fn classify_family(m: &Model) -> FamilyMembership {
    let mut matches = Vec::new();
    if m.is_uninteresting() {
        return FamilyMembership { matches };
    }
    tag_one(m, false, &mut matches);
    tag_one(&m.reflect(), true, &mut matches);
    if let Some(t) = d10_detect(m) {
        matches.push(TagMatch {
            tag: t,
            reflected: false,
            lambda: None,
        });
    }
    matches.sort_by_key(|t| t.tag);
    FamilyMembership { matches }
}

/// The model in the orientation in which the tag's defining equations hold.
pub fn oriented(m: &Model, t: &TagMatch) -> Model {
    if t.reflected {
        m.reflect()
    } else {
        m.clone()
    }
}

/// Examples displayed next to the family tables.
pub fn table_model(tag: FamilyTag) -> Option<Model> {
    let r = |n: i64, d: i64| Rat::new(n.into(), d.into());
    let m = match tag {
        FamilyTag::F0 => Model::from_ints([2, -3, 5, -7, 13, 6, -9, 15]),
        FamilyTag::F1a => Model::new([
            Rat::zero(),
            rat(5),
            rat(3),
            r(1, 2),
            rat(2),
            r(1, 3),
            r(1, 5),
            Rat::zero(),
        ]),
        FamilyTag::F1b => Model::new([
            rat(3),
            rat(5),
            Rat::zero(),
            rat(2),
            r(1, 2),
            Rat::zero(),
            r(1, 5),
            r(1, 3),
        ]),
        FamilyTag::F2a => Model::from_ints([1, 5, 7, 2, 7, 1, 0, 0]),
        FamilyTag::F2b => Model::from_ints([7, 5, 1, 7, 2, 0, 0, 1]),
        FamilyTag::F3a => Model::from_ints([0, 0, 1, 7, 2, 7, 5, 1]),
        FamilyTag::F3b => Model::from_ints([1, 0, 0, 2, 7, 1, 5, 7]),
        FamilyTag::F4a => Model::from_ints([0, 6, 3, 0, 0, 4, 2, 0]),
        FamilyTag::F4b => Model::from_ints([3, 6, 0, 0, 0, 0, 2, 4]),
        t => return d10_model(t),
    };
    Some(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tags(m: &Model) -> Vec<FamilyTag> {
        classify_family(m).tags()
    }

    #[test]
    fn table_examples() {
        let m = table_model(FamilyTag::F0).unwrap();
        let c = classify_family(&m);
        assert_eq!(c.tags(), vec![FamilyTag::F0]);
        assert_eq!(c.get(FamilyTag::F0).unwrap().lambda, Some(Rat::new(1.into(), 3.into())));
        assert_eq!(tags(&table_model(FamilyTag::F4a).unwrap()), vec![FamilyTag::F4a]);
        assert_eq!(tags(&Model::kreweras()), vec![FamilyTag::F1b, FamilyTag::F2b]);
        let c = classify_family(&Model::all_ones());
        assert_eq!(c.tags(), vec![FamilyTag::F0]);
        assert_eq!(c.get(FamilyTag::F0).unwrap().lambda, Some(rat(1)));
    }

    #[test]
    fn table_models_carry_their_tag() {
        for t in FamilyTag::ALL {
            let m = table_model(t).unwrap();
            assert!(classify_family(&m).has(t), "{} table model {}", t, m);
        }
    }

    #[test]
    fn d10_detection() {
        let left: Model = "0,1,1,1,2,1,2,1".parse().unwrap();
        assert_eq!(d10_detect(&left), Some(FamilyTag::D10Left));
        assert_eq!(d10_detect(&left.reflect()), Some(FamilyTag::D10Left));
        let right = d10_model(FamilyTag::D10Right).unwrap();
        assert_eq!(d10_detect(&right.reflect().scale(&rat(3)).unwrap()), Some(FamilyTag::D10Right));
        assert_eq!(d10_detect(&Model::all_ones()), None);
    }

    #[test]
    fn reflection_swaps_orientation() {
        let m = table_model(FamilyTag::F2a).unwrap();
        let c = classify_family(&m.reflect());
        assert!(c.get(FamilyTag::F2a).unwrap().reflected);
    }
}
