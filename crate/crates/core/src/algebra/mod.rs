//! Exact algebra: rationals, multivariate polynomials and rational functions, Laurent
//! polynomials, truncated series and their iterated expansions.

pub mod iter_laurent;
pub mod laurent;
pub mod modp;
pub mod mpoly;
pub mod newton;
pub mod rat;
pub mod ratfun;
pub mod ring;
pub mod series;

pub use iter_laurent::{Dir, IterLaurent, Outer, TermOrder};
pub use laurent::LaurentPoly;
pub use mpoly::{MPoly, Monomial, Var};
pub use newton::{algebraic_series_solve, solve_fixed_point};
pub use rat::{parse_rat, rat, ratio, Rat};
pub use ratfun::RatFun;
pub use ring::Ring;
pub use series::TSeries;
