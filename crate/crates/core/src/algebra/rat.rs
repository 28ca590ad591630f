//! Exact rationals and a few number-theoretic helpers on them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"3"`, `"-7"` or `"1/2"`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => Some(Rat::from_integer(s.parse().ok()?)),
    }
}

fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        if k % 2 == 0 {
            return None;
        }
        return exact_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    if r.pow(k) == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact rational square root, if one exists.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    Some(Rat::new(exact_root(r.numer(), 2)?, exact_root(r.denom(), 2)?))
}

/// Exact rational cube root (sign preserving), if one exists.
pub fn rat_cbrt(r: &Rat) -> Option<Rat> {
    Some(Rat::new(exact_root(r.numer(), 3)?, exact_root(r.denom(), 3)?))
}

pub fn rat_pow(r: &Rat, e: i32) -> Rat {
    r.pow(e)
}

/// Least common multiple of denominators.
pub fn lcm_denoms<'a>(it: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Gcd of numerators (zero if all are zero).
pub fn gcd_numers<'a>(it: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    it.into_iter()
        .fold(BigInt::zero(), |acc, r| acc.gcd(r.numer()))
}

/// `a += b`, skipping renormalization when both are integers.
pub fn add_to(a: &mut Rat, b: &Rat) {
    if a.is_integer() && b.is_integer() {
        *a = Rat::from_integer(a.numer() + b.numer());
    } else {
        *a += b;
    }
}

/// `a · b`, skipping renormalization when both are integers.
pub fn mul_rat(a: &Rat, b: &Rat) -> Rat {
    if a.is_integer() && b.is_integer() {
        Rat::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

/// Serializes a rational as its `p/q` string.
pub mod serde_str {
    use super::{parse_rat, Rat};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {:?}", s)))
    }
}

/// [`serde_str`] for optional rationals.
pub mod serde_opt_str {
    use super::{parse_rat, Rat};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Rat>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.collect_str(r),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rat>, D::Error> {
        match Option::<String>::deserialize(d)? {
            Some(s) => parse_rat(&s)
                .map(Some)
                .ok_or_else(|| serde::de::Error::custom(format!("bad rational {:?}", s))),
            None => Ok(None),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rat("3"), Some(rat(3)));
        assert_eq!(parse_rat(" -1/2 "), Some(ratio(-1, 2)));
        assert_eq!(parse_rat("4/6"), Some(ratio(2, 3)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("x"), None);
        assert_eq!(parse_rat(""), None);
    }

    #[test]
    fn roots() {
        assert_eq!(rat_cbrt(&ratio(8, 27)), Some(ratio(2, 3)));
        assert_eq!(rat_cbrt(&ratio(-1, 64)), Some(ratio(-1, 4)));
        assert_eq!(rat_cbrt(&rat(2)), None);
        assert_eq!(rat_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rat_sqrt(&rat(-4)), None);
        assert_eq!(rat_sqrt(&rat(0)), Some(rat(0)));
    }
}
