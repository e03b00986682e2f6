//! Polynomial identities behind the truncated-exponential Hopf orders.
//!
//! Everything is computed symbolically: `Q(x, y)` over the integers, then the
//! identities in `F_p[x, y, z, a] / (x^p, y^p)` with `z`, `a` generic.

mod multipoly;

pub use multipoly::{binomial_poly, trunc_exp_symbolic, Coefficient, ExpArg, Fp, Monomial, MultiPoly, QuotientPoly};

use num_bigint::BigInt;
use thiserror::Error;

use crate::localfield::PrimeConfig;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdentityError {
    #[error("u - 1 is not nilpotent: {0}")]
    NotNilpotent(String),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("integer polynomial is not divisible by {0}")]
    InexactDivision(u32),
}

/// `((x + y + xy)^p - x^p - y^p - (xy)^p) / p` over the integers.
pub fn q_polynomial_integer(p: u32) -> Result<MultiPoly<BigInt>, IdentityError> {
    let vars = ["x", "y"];
    let one = BigInt::from(1);
    let x = MultiPoly::var(&vars, "x", one.clone());
    let y = MultiPoly::var(&vars, "y", one);
    let xy = x.mul(&y);
    let s = x.add(&y).add(&xy);
    let numerator = s.pow(p).sub(&x.pow(p)).sub(&y.pow(p)).sub(&xy.pow(p));
    numerator
        .div_exact(&BigInt::from(p))
        .ok_or(IdentityError::InexactDivision(p))
}

/// The carry polynomial `Q(x, y)` reduced mod p.
pub fn q_polynomial(cfg: PrimeConfig) -> Result<MultiPoly<Fp>, IdentityError> {
    Ok(q_polynomial_integer(cfg.p())?.reduce_mod(cfg.p()))
}

fn quotient_ring(vars: &[&str], p: u32) -> QuotientPoly {
    QuotientPoly::new(MultiPoly::constant(vars, Fp::new(1, p)), &["x", "y"], p)
}

fn var(base: &QuotientPoly, vars: &[&str], name: &str) -> QuotientPoly {
    base.lift(MultiPoly::var(vars, name, Fp::new(1, base.prime())))
}

/// `z^p - z` as a polynomial.
fn wp_symbolic(base: &QuotientPoly, vars: &[&str], name: &str) -> QuotientPoly {
    let z = var(base, vars, name);
    z.pow(base.prime()).sub(&z)
}

/// Both sides of `(1+x+y+xy)^[z] = (1+x)^[z] (1+y)^[z] (1 + wp(z) Q(x,y))`.
pub fn identity_basic_sides(cfg: PrimeConfig) -> Result<(QuotientPoly, QuotientPoly), IdentityError> {
    let vars = ["x", "y", "z"];
    let p = cfg.p();
    let one = quotient_ring(&vars, p);
    let x = var(&one, &vars, "x");
    let y = var(&one, &vars, "y");
    let z = ExpArg::Var("z".into());
    let q = one.lift(q_polynomial(cfg)?.embed(&vars));

    let lhs = trunc_exp_symbolic(&one.add(&x).add(&y).add(&x.mul(&y)), &z)?;
    let rhs = trunc_exp_symbolic(&one.add(&x), &z)?
        .mul(&trunc_exp_symbolic(&one.add(&y), &z)?)
        .mul(&one.add(&wp_symbolic(&one, &vars, "z").mul(&q)));
    Ok((lhs, rhs))
}

pub fn verify_identity_basic(cfg: PrimeConfig) -> Result<bool, IdentityError> {
    let (lhs, rhs) = identity_basic_sides(cfg)?;
    Ok(lhs == rhs)
}

/// Both sides of the iterated identity
/// `((1+x+y+xy)^[z])^[a] = ((1+x)^[z] (1+y)^[z])^[a] (1 + wp(z) a Q(x,y))`.
pub fn identity_iterated_sides(cfg: PrimeConfig) -> Result<(QuotientPoly, QuotientPoly), IdentityError> {
    let vars = ["x", "y", "z", "a"];
    let p = cfg.p();
    let one = quotient_ring(&vars, p);
    let x = var(&one, &vars, "x");
    let y = var(&one, &vars, "y");
    let a = var(&one, &vars, "a");
    let z_exp = ExpArg::Var("z".into());
    let a_exp = ExpArg::Var("a".into());
    let q = one.lift(q_polynomial(cfg)?.embed(&vars));

    let inner = trunc_exp_symbolic(&one.add(&x).add(&y).add(&x.mul(&y)), &z_exp)?;
    let lhs = trunc_exp_symbolic(&inner, &a_exp)?;
    let d = trunc_exp_symbolic(&one.add(&x), &z_exp)?.mul(&trunc_exp_symbolic(&one.add(&y), &z_exp)?);
    let correction = one.add(&wp_symbolic(&one, &vars, "z").mul(&a).mul(&q));
    let rhs = trunc_exp_symbolic(&d, &a_exp)?.mul(&correction);
    Ok((lhs, rhs))
}

pub fn verify_identity_iterated(cfg: PrimeConfig) -> Result<bool, IdentityError> {
    let (lhs, rhs) = identity_iterated_sides(cfg)?;
    Ok(lhs == rhs)
}

/// `Q(x, y)^2` lies in the ideal `(x^p, y^p)` of `F_p[x, y]`.
pub fn verify_q_square(cfg: PrimeConfig) -> Result<bool, IdentityError> {
    let p = cfg.p();
    let q = q_polynomial(cfg)?;
    let sq = q.mul(&q);
    let in_ideal = sq.terms().all(|(m, _)| m[0] >= p || m[1] >= p);
    Ok(in_ideal)
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct IdentityOutcome {
    pub name: &'static str,
    pub p: u32,
    pub holds: bool,
}

/// Runs the three verifiers for one prime.
pub fn run_all(cfg: PrimeConfig) -> Result<Vec<IdentityOutcome>, IdentityError> {
    let p = cfg.p();
    Ok(vec![
        IdentityOutcome {
            name: "truncated-exponential product formula",
            p,
            holds: verify_identity_basic(cfg)?,
        },
        IdentityOutcome {
            name: "iterated truncated-exponential formula",
            p,
            holds: verify_identity_iterated(cfg)?,
        },
        IdentityOutcome {
            name: "Q(x,y)^2 in (x^p, y^p)",
            p,
            holds: verify_q_square(cfg)?,
        },
    ])
}
