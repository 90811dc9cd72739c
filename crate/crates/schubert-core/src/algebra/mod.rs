//! Exact arithmetic: Laurent polynomials over the weight lattice, fractions with
//! binomial denominators, truncated graded series and coefficient sequences.

pub mod expr;
pub mod fraction;
pub mod laurent;
pub mod poly;
pub mod series;
pub mod ypoly;

pub use fraction::{Factor, FactoredFraction};
pub use laurent::Laurent;
pub use poly::{Mono, Poly, QPoly, ZPoly, LANE_H, LANE_Y};
pub use series::GradedSeries;
pub use ypoly::YPoly;
