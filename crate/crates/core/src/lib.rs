//! Construction and verification of Hopf orders in `K[C_p^n]` and its
//! linear dual, over `K = F_p(t)` with the t-adic valuation.

pub mod cli;
pub mod groupalg;
pub mod identitylab;
pub mod linalg;
pub mod localfield;
pub mod orders;
