//! Families reached from a reference model by `f(x,y,t) = f_ref(c₁x, c₂y, c₃t)`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::report::Status;
use crate::algebra::rat::{rat_cbrt, rat_pow, rat_sqrt, Rat};
use crate::enumerate::count_walks;
use crate::error::{Error, Result};
use crate::model::Model;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scaling {
    #[serde(with = "crate::algebra::rat::serde_str")]
    pub c1: Rat,
    #[serde(with = "crate::algebra::rat::serde_str")]
    pub c2: Rat,
    #[serde(with = "crate::algebra::rat::serde_str")]
    pub c3: Rat,
}

impl Scaling {
    pub fn identity() -> Scaling {
        Scaling {
            c1: Rat::one(),
            c2: Rat::one(),
            c3: Rat::one(),
        }
    }

    /// The model whose counts are `c₁^i c₂^j c₃^n` times those of `base`.
    pub fn apply(&self, base: &Model) -> Model {
        let mut m = base.clone();
        for ((u, v), c) in base.steps() {
            let w = c * &self.c3 * rat_pow(&self.c1, u) * rat_pow(&self.c2, v);
            m = m.with(u, v, w);
        }
        m
    }
}

fn irrational() -> Error {
    Error::Precondition("irrational-scaling".into())
}

fn a(m: &Model, u: i32, v: i32) -> &Rat {
    m.get(u, v)
}

fn nonzero(m: &Model, dirs: &[(i32, i32)]) -> bool {
    dirs.iter().all(|&(u, v)| !a(m, u, v).is_zero())
}

fn zero(m: &Model, dirs: &[(i32, i32)]) -> bool {
    dirs.iter().all(|&(u, v)| a(m, u, v).is_zero())
}

/// Checks `f_{i,j,n}(m) = c₁^i c₂^j c₃^n f_{i,j,n}(base)` for all `n ≤ N` by two DP tables.
pub fn verify_scaling(m: &Model, base: &Model, s: &Scaling, order: usize) -> Status {
    let fm = count_walks(m, order);
    let fb = count_walks(base, order);
    let mut c3n = Rat::one();
    for n in 0..=order {
        let mut c1i = Rat::one();
        for i in 0..=n {
            let mut c2j = Rat::one();
            for j in 0..=n {
                let want = &c1i * &c2j * &c3n * fb.get(i as i64, j as i64, n);
                if fm.get(i as i64, j as i64, n) != want {
                    return Status::fail(format!("f_{{{},{},{}}} differs", i, j, n));
                }
                c2j *= &s.c2;
            }
            c1i *= &s.c1;
        }
        c3n *= &s.c3;
    }
    Status::Pass
}

fn run(m: &Model, base: &Model, s: Result<Scaling>, order: usize) -> Status {
    match s {
        Ok(s) => verify_scaling(m, base, &s, order),
        Err(Error::Precondition(r)) => Status::Skipped(r),
        Err(e) => Status::fail(e.to_string()),
    }
}

/// Case `a_{-1,-1} = a_{1,0} = a_{0,1} = 0` of family 1b, against classical Kreweras.
pub fn kreweras_constants(m: &Model) -> Result<Scaling> {
    if !zero(m, &[(-1, -1), (1, 0), (0, 1), (1, -1), (-1, 1)]) || !nonzero(m, &[(1, 1), (-1, 0), (0, -1)]) {
        return Err(Error::Precondition("not a scaled Kreweras model".into()));
    }
    let (a11, aw, as_) = (a(m, 1, 1), a(m, -1, 0), a(m, 0, -1));
    Ok(Scaling {
        c1: rat_cbrt(&(as_ * a11 / (aw * aw))).ok_or_else(irrational)?,
        c2: rat_cbrt(&(aw * a11 / (as_ * as_))).ok_or_else(irrational)?,
        c3: rat_cbrt(&(aw * as_ * a11)).ok_or_else(irrational)?,
    })
}

pub fn verify_kreweras_substitution(m: &Model, order: usize) -> Status {
    run(m, &Model::kreweras(), kreweras_constants(m), order)
}

/// Case `a_{1,1} = a_{-1,0} = a_{0,-1} = 0` of family 1b, against reversed Kreweras.
pub fn reversed_kreweras_constants(m: &Model) -> Result<Scaling> {
    if !zero(m, &[(1, 1), (-1, 0), (0, -1), (1, -1), (-1, 1)]) || !nonzero(m, &[(-1, -1), (1, 0), (0, 1)]) {
        return Err(Error::Precondition("not a scaled reversed Kreweras model".into()));
    }
    let c3 = rat_cbrt(&(a(m, -1, -1) * a(m, 1, 0) * a(m, 0, 1))).ok_or_else(irrational)?;
    Ok(Scaling {
        c1: a(m, 1, 0) / &c3,
        c2: a(m, 0, 1) / &c3,
        c3,
    })
}

pub fn verify_reversed_kreweras_substitution(m: &Model, order: usize) -> Status {
    run(m, &Model::reversed_kreweras(), reversed_kreweras_constants(m), order)
}

/// The reference model of family 1b: `a_{-1,-1} = a_{-1,0} = a_{0,-1} = 1`, `a_{1,1} = a_{1,0} = a_{0,1} = λ`.
pub fn family1b_model(lambda: &Rat) -> Model {
    Model::from_ints([1, 1, 0, 1, 0, 0, 0, 0])
        .with(1, 1, lambda.clone())
        .with(1, 0, lambda.clone())
        .with(0, 1, lambda.clone())
}

/// `(λ, scaling)` for a family-1b model with `a_{1,1} a_{-1,-1} ≠ 0`.
pub fn family1b_constants(m: &Model) -> Result<(Rat, Scaling)> {
    if !nonzero(m, &[(1, 1), (-1, -1), (1, 0), (0, 1), (0, -1)]) {
        return Err(Error::Precondition("needs a_{1,1} a_{-1,-1} a_{1,0} a_{0,1} a_{0,-1} != 0".into()));
    }
    let (a11, a10, a01) = (a(m, 1, 1), a(m, 1, 0), a(m, 0, 1));
    let lambda = a01 * a10 * a10 / (a(m, 0, -1) * a11 * a11);
    let s = Scaling {
        c1: a11 / a01,
        c2: a11 / a10,
        c3: a(m, -1, -1) * a11 * a11 / (a01 * a10),
    };
    Ok((lambda, s))
}

pub fn verify_family1b_substitution(m: &Model, order: usize) -> Status {
    match family1b_constants(m) {
        Ok((l, s)) => verify_scaling(m, &family1b_model(&l), &s, order),
        Err(Error::Precondition(r)) => Status::Skipped(r),
        Err(e) => Status::fail(e.to_string()),
    }
}

/// The reference model of family 2b with `a_{-1,0} = λ`.
pub fn family2b_model(lambda: &Rat) -> Model {
    Model::from_ints([1, 0, 1, 1, 2, 0, 0, 1]).with(-1, 0, lambda.clone())
}

/// `(λ, scaling)` for a family-2b model; needs `a_{-1,-1} a_{-1,1}` and `a_{-1,1}/a_{-1,-1}` to be squares.
pub fn family2b_constants(m: &Model) -> Result<(Rat, Scaling)> {
    if !nonzero(m, &[(-1, -1), (-1, 1), (0, -1)]) {
        return Err(Error::Precondition("needs a_{-1,-1} a_{-1,1} a_{0,-1} != 0".into()));
    }
    let (sw, nw) = (a(m, -1, -1), a(m, -1, 1));
    let root = rat_sqrt(&(sw * nw)).ok_or_else(irrational)?;
    let c2 = rat_sqrt(&(nw / sw)).ok_or_else(irrational)?;
    let s = Scaling {
        c1: a(m, 0, -1) / sw,
        c3: a(m, 0, -1) * &c2,
        c2,
    };
    Ok((a(m, -1, 0) / root, s))
}

pub fn verify_family2b_substitution(m: &Model, order: usize) -> Status {
    match family2b_constants(m) {
        Ok((l, s)) => verify_scaling(m, &family2b_model(&l), &s, order),
        Err(Error::Precondition(r)) => Status::Skipped(r),
        Err(e) => Status::fail(e.to_string()),
    }
}

/// Scaling of a family-4b model against the Gessel model.
pub fn gessel_constants(m: &Model) -> Result<Scaling> {
    if !zero(m, &[(1, -1), (0, -1), (0, 1), (-1, 1)]) || !nonzero(m, &[(1, 0), (-1, 0), (1, 1), (-1, -1)]) {
        return Err(Error::Precondition("not a family-4b model".into()));
    }
    let (e, w) = (a(m, 1, 0), a(m, -1, 0));
    Ok(Scaling {
        c1: rat_sqrt(&(e / w)).ok_or_else(irrational)?,
        c2: a(m, 1, 1) / e,
        c3: rat_sqrt(&(e * w)).ok_or_else(irrational)?,
    })
}

pub fn verify_gessel_substitution(m: &Model, order: usize) -> Status {
    run(m, &Model::gessel(), gessel_constants(m), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{rat, ratio};

    #[test]
    fn kreweras_example() {
        let m = Model::kreweras().with(0, -1, rat(8));
        let s = kreweras_constants(&m).unwrap();
        assert_eq!((s.c1.clone(), s.c2.clone(), s.c3.clone()), (rat(2), ratio(1, 4), rat(2)));
        assert_eq!(verify_kreweras_substitution(&m, 12), Status::Pass);
        assert_eq!(kreweras_constants(&Model::kreweras()).unwrap(), Scaling::identity());
        let irr = Model::kreweras().with(0, -1, rat(2));
        assert!(matches!(verify_kreweras_substitution(&irr, 5), Status::Skipped(_)));
    }

    #[test]
    fn gessel_examples() {
        let m = Model::gessel().with(1, 0, rat(2)).with(-1, 0, rat(2)).with(1, 1, rat(4));
        let s = gessel_constants(&m).unwrap();
        assert_eq!((s.c1, s.c2, s.c3), (rat(1), rat(2), rat(2)));
        assert_eq!(verify_gessel_substitution(&m, 12), Status::Pass);
        let m = Model::from_ints([4, 2, 0, 0, 0, 0, 8, 4]);
        assert_eq!(verify_gessel_substitution(&m, 12), Status::Pass);
    }

    #[test]
    fn scaling_apply_reproduces_model() {
        let m = Model::from_ints([4, 2, 0, 0, 0, 0, 8, 4]);
        let s = gessel_constants(&m).unwrap();
        assert_eq!(s.apply(&Model::gessel()), m);
        let m = Model::from_ints([4, 4, 1, 4, 2, 0, 0, 1]);
        let (l, s) = family2b_constants(&m).unwrap();
        assert_eq!(l, rat(2));
        assert_eq!(s.apply(&family2b_model(&l)), m);
    }

    #[test]
    fn perturbed_model_fails() {
        let m = Model::gessel().with(1, 0, rat(2)).with(-1, 0, rat(2)).with(1, 1, rat(4));
        let s = gessel_constants(&m).unwrap();
        let bad = m.with(-1, -1, rat(2));
        assert!(verify_scaling(&bad, &Model::gessel(), &s, 8).is_fail());
    }
}
