//! Exact arithmetic in Z[q,t] and Q(q,t).

pub mod gcd;
pub mod poly;
pub mod rat;
pub mod text;
pub mod upoly;

pub use gcd::poly_gcd;
pub use poly::{Mon, PolyQT};
pub use rat::{RatQT, RatT};
pub use text::{latex_rat, parse_poly, parse_rat, render_poly, render_rat};
