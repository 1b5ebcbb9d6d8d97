//! Exact arithmetic in the coefficient field Q(q,t).

mod parse;
mod poly;
mod rat;

pub use parse::{parse_poly, parse_rat};
pub use poly::{glex_cmp, QtPoly};
pub use rat::QtRat;
