//! Arithmetic modulo the Mersenne prime 2^61 − 1.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::rat::Rat;

pub const P: u64 = (1 << 61) - 1;

pub fn mulm(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

pub fn addm(a: u64, b: u64) -> u64 {
    (a + b) % P
}

pub fn subm(a: u64, b: u64) -> u64 {
    (a + P - b) % P
}

pub fn powm(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a);
        }
        a = mulm(a, a);
        e >>= 1;
    }
    r
}

pub fn invm(a: u64) -> Option<u64> {
    if a == 0 {
        None
    } else {
        Some(powm(a, P - 2))
    }
}

fn int_mod(n: &BigInt) -> u64 {
    n.mod_floor(&BigInt::from(P)).to_u64().expect("reduced residue")
}

/// Image of a rational, or `None` if the denominator vanishes mod P.
pub fn rat_mod(r: &Rat) -> Option<u64> {
    let d = int_mod(r.denom());
    let n = if r.numer().is_negative() {
        (P - int_mod(&-r.numer())) % P
    } else {
        int_mod(r.numer())
    };
    Some(mulm(n, invm(d)?))
}

fn trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// Remainder of dense univariate polynomials (low degree first).
fn rem(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let inv = invm(b[db]).expect("trimmed divisor");
    while r.len() > db {
        let dr = r.len() - 1;
        let q = mulm(r[dr], inv);
        for (j, &bc) in b.iter().enumerate() {
            let k = j + dr - db;
            r[k] = subm(r[k], mulm(q, bc));
        }
        trim(&mut r);
    }
    r
}

/// Degree of the monic gcd; `None` if both inputs vanish.
pub fn gcd_degree(a: &[u64], b: &[u64]) -> Option<usize> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    loop {
        if b.is_empty() {
            return if a.is_empty() { None } else { Some(a.len() - 1) };
        }
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
}

/// Deterministic pseudo-random residues (splitmix64).
pub struct Residues(u64);

impl Residues {
    pub fn new(seed: u64) -> Residues {
        Residues(seed)
    }

    pub fn next_residue(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^= z >> 31;
        2 + z % (P - 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::ratio;

    #[test]
    fn inverse_and_rationals() {
        let a = 123456789;
        assert_eq!(mulm(a, invm(a).unwrap()), 1);
        let h = rat_mod(&ratio(1, 2)).unwrap();
        assert_eq!(mulm(h, 2), 1);
        assert_eq!(addm(rat_mod(&ratio(-1, 1)).unwrap(), 1), 0);
    }

    #[test]
    fn univariate_gcd() {
        // (z+1)(z+2) and (z+1)(z+3)
        let a = [2, 3, 1];
        let b = [3, 4, 1];
        assert_eq!(gcd_degree(&a, &b), Some(1));
        assert_eq!(gcd_degree(&[1, 1], &[2, 1]), Some(0));
    }
}
