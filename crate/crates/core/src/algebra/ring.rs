use std::fmt::Debug;

use num_traits::{One, Zero};

use super::rat::Rat;

/// Coefficient ring for truncated series.
///
/// Method names are deliberately distinct from `num_traits` and `std::ops` so that
/// both can be in scope without ambiguity.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn is_zero_elem(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_rat(r: Rat) -> Self;
    /// Multiplicative inverse when the element is a unit of the ring.
    fn inverse(&self) -> Option<Self>;

    fn scaled(&self, r: &Rat) -> Self {
        self.times(&Self::from_rat(r.clone()))
    }
}

impl Ring for Rat {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
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
        r
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}
