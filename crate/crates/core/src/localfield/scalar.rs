use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::poly::FpPoly;
use super::LocalFieldError;

/// The residue characteristic. Coefficient arithmetic is done modulo `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeConfig {
    p: u32,
}

impl PrimeConfig {
    pub const SUPPORTED: [u32; 4] = [2, 3, 5, 7];

    pub fn new(p: u32) -> Result<Self, LocalFieldError> {
        if Self::SUPPORTED.contains(&p) {
            Ok(PrimeConfig { p })
        } else {
            Err(LocalFieldError::UnsupportedPrime(p))
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// p = 7 works, but p^n-dimensional checks get slow quickly.
    pub fn is_performance_limited(&self) -> bool {
        self.p >= 7
    }
}

/// A t-adic valuation: an integer, or `Infinity` for zero.
///
/// `Finite(_) < Infinity`, so `v >= k` is true for the valuation of zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Valuation::Infinity
    }

    /// `self >= k`, with `Infinity >= k` for every `k`.
    pub fn at_least(self, k: i64) -> bool {
        self >= Valuation::Finite(k)
    }
}

impl PartialEq<i64> for Valuation {
    fn eq(&self, other: &i64) -> bool {
        *self == Valuation::Finite(*other)
    }
}

impl PartialOrd<i64> for Valuation {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.partial_cmp(&Valuation::Finite(*other))
    }
}

impl Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinity,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_i64(*v),
            Valuation::Infinity => s.serialize_str("inf"),
        }
    }
}

/// An element of K = F_p(t), kept as a reduced fraction with monic
/// denominator, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LocalScalar {
    num: FpPoly,
    den: FpPoly,
}

impl LocalScalar {
    pub fn zero(cfg: PrimeConfig) -> Self {
        LocalScalar {
            num: FpPoly::zero(cfg.p),
            den: FpPoly::one(cfg.p),
        }
    }

    pub fn one(cfg: PrimeConfig) -> Self {
        Self::from_int(1, cfg)
    }

    pub fn from_int(c: i64, cfg: PrimeConfig) -> Self {
        LocalScalar {
            num: FpPoly::constant(c, cfg.p),
            den: FpPoly::one(cfg.p),
        }
    }

    /// The uniformizer `t`.
    pub fn t(cfg: PrimeConfig) -> Self {
        Self::t_pow(1, cfg)
    }

    /// `t^k` for any integer `k`.
    pub fn t_pow(k: i64, cfg: PrimeConfig) -> Self {
        let p = cfg.p;
        if k >= 0 {
            LocalScalar {
                num: FpPoly::monomial(1, k as usize, p),
                den: FpPoly::one(p),
            }
        } else {
            LocalScalar {
                num: FpPoly::one(p),
                den: FpPoly::monomial(1, (-k) as usize, p),
            }
        }
    }

    /// `c * t^k`
    pub fn monomial(c: i64, k: i64, cfg: PrimeConfig) -> Self {
        Self::t_pow(k, cfg) * Self::from_int(c, cfg)
    }

    pub fn from_poly(num: FpPoly) -> Self {
        let p = num.prime();
        LocalScalar {
            num,
            den: FpPoly::one(p),
        }
    }

    /// Builds `num / den` in canonical form.
    pub fn from_fraction(num: FpPoly, den: FpPoly) -> Result<Self, LocalFieldError> {
        if den.is_zero() {
            return Err(LocalFieldError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: FpPoly, den: FpPoly) -> Self {
        let p = num.prime();
        if num.is_zero() {
            return LocalScalar {
                num,
                den: FpPoly::one(p),
            };
        }
        if den.degree() == Some(0) {
            let inv = super::poly::inv_mod(den.leading(), p);
            return LocalScalar {
                num: num.scale(inv),
                den: FpPoly::one(p),
            };
        }
        // cancel common powers of t first; most denominators here are t^k
        let common = num.ord_t().unwrap().min(den.ord_t().unwrap());
        let (mut num, mut den) = (num.shift_down(common), den.shift_down(common));
        if !den.is_monomial() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_rem(&g).0;
                den = den.div_rem(&g).0;
            }
        }
        let lead = den.leading();
        if lead != 1 {
            let inv = super::poly::inv_mod(lead, p);
            num = num.scale(inv);
            den = den.scale(inv);
        }
        LocalScalar { num, den }
    }

    pub fn prime(&self) -> u32 {
        self.num.prime()
    }

    pub fn config(&self) -> PrimeConfig {
        PrimeConfig { p: self.num.prime() }
    }

    pub fn numerator(&self) -> &FpPoly {
        &self.num
    }

    pub fn denominator(&self) -> &FpPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True for elements of F_p (constants).
    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.degree().unwrap_or(0) == 0
    }

    /// The constant term as a residue, when `self` is in F_p.
    pub fn as_constant(&self) -> Option<u32> {
        self.is_constant()
            .then(|| self.num.coeffs().first().copied().unwrap_or(0))
    }

    pub fn valuation(&self) -> Valuation {
        match self.num.ord_t() {
            None => Valuation::Infinity,
            Some(a) => Valuation::Finite(a as i64 - self.den.ord_t().unwrap() as i64),
        }
    }

    /// Membership in the valuation ring R.
    pub fn is_integral(&self) -> bool {
        self.valuation().at_least(0)
    }

    /// Largest degree of numerator or denominator; used to police growth.
    pub fn degree_measure(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let mut base = self.clone();
        let mut acc = Self::one(self.config());
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `x^p`, computed coefficientwise.
    pub fn frobenius(&self) -> Self {
        // Frobenius is an injective ring map, so the fraction stays reduced and monic.
        LocalScalar {
            num: self.num.frobenius(),
            den: self.den.frobenius(),
        }
    }

    /// The Artin-Schreier map `x^p - x`.
    pub fn wp(&self) -> Self {
        &self.frobenius() - self
    }

    /// Generalized binomial coefficient `x (x-1) ... (x-m+1) / m!` for `0 <= m < p`.
    pub fn gen_binom(&self, m: i64) -> Result<Self, LocalFieldError> {
        let cfg = self.config();
        if m < 0 || m >= cfg.p as i64 {
            return Err(LocalFieldError::BinomialOutOfRange { m, p: cfg.p });
        }
        let mut acc = Self::one(cfg);
        let mut fact = 1i64;
        for k in 0..m {
            acc = &acc * &(self - &Self::from_int(k, cfg));
            fact *= k + 1;
        }
        let fact_inv = Self::from_int(fact, cfg).inv().expect("m! is a unit for m < p");
        Ok(&acc * &fact_inv)
    }
}

impl fmt::Display for LocalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return self.num.fmt_terms(f);
        }
        if self.num.term_count() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if self.den.term_count() > 1 {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl fmt::Debug for LocalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LocalScalar[p={}]({})", self.prime(), self)
    }
}

impl Serialize for LocalScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'a> Add<&'a LocalScalar> for &'a LocalScalar {
    type Output = LocalScalar;
    fn add(self, rhs: &LocalScalar) -> LocalScalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return LocalScalar::normalize(self.num.add(&rhs.num), self.den.clone());
        }
        LocalScalar::normalize(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl<'a> Sub<&'a LocalScalar> for &'a LocalScalar {
    type Output = LocalScalar;
    fn sub(self, rhs: &LocalScalar) -> LocalScalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LocalScalar> for &'a LocalScalar {
    type Output = LocalScalar;
    fn mul(self, rhs: &LocalScalar) -> LocalScalar {
        if self.is_zero() || rhs.is_zero() {
            return LocalScalar::zero(self.config());
        }
        if rhs.den.is_one() && self.den.is_one() {
            return LocalScalar {
                num: self.num.mul(&rhs.num),
                den: self.den.clone(),
            };
        }
        LocalScalar::normalize(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl<'a> Div<&'a LocalScalar> for &'a LocalScalar {
    type Output = LocalScalar;
    /// Panics on division by zero; use `checked_div` otherwise.
    fn div(self, rhs: &LocalScalar) -> LocalScalar {
        self.checked_div(rhs).expect("division by zero in K")
    }
}

impl Neg for &LocalScalar {
    type Output = LocalScalar;
    fn neg(self) -> LocalScalar {
        LocalScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LocalScalar> for LocalScalar {
            type Output = LocalScalar;
            fn $m(self, rhs: LocalScalar) -> LocalScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LocalScalar> for LocalScalar {
            type Output = LocalScalar;
            fn $m(self, rhs: &LocalScalar) -> LocalScalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for LocalScalar {
    type Output = LocalScalar;
    fn neg(self) -> LocalScalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(p: u32) -> PrimeConfig {
        PrimeConfig::new(p).unwrap()
    }

    #[test]
    fn rejects_unsupported_primes() {
        assert!(PrimeConfig::new(4).is_err());
        assert!(PrimeConfig::new(11).is_err());
        assert!(PrimeConfig::new(7).unwrap().is_performance_limited());
    }

    #[test]
    fn valuation_examples() {
        let c = cfg(2);
        let t = LocalScalar::t(c);
        let one = LocalScalar::one(c);
        let x = &(&t * &t) / &(&one + &t);
        assert_eq!(x.valuation(), 2);
        assert_eq!(LocalScalar::zero(c).valuation(), Valuation::Infinity);
        let y = &(&one + &t) / &t.pow(3);
        assert_eq!(y.valuation(), -3);
    }

    #[test]
    fn infinity_dominates_integers() {
        assert!(Valuation::Infinity.at_least(i64::MAX));
        assert!(Valuation::Finite(-3) < Valuation::Finite(2));
        assert!(Valuation::Finite(5) < Valuation::Infinity);
    }

    #[test]
    fn wp_of_constants_vanishes() {
        for p in [2, 3, 5, 7] {
            for c in 0..p as i64 {
                assert!(LocalScalar::from_int(c, cfg(p)).wp().is_zero());
            }
        }
    }

    #[test]
    fn wp_of_inverse_t_p2() {
        let c = cfg(2);
        let x = LocalScalar::t_pow(-1, c);
        let expected = &LocalScalar::t_pow(-2, c) + &LocalScalar::t_pow(-1, c);
        assert_eq!(x.wp(), expected);
        assert_eq!(x.wp().valuation(), -2);
    }

    #[test]
    fn frobenius_examples() {
        assert!(LocalScalar::one(cfg(5)).frobenius().is_one());
        let c2 = cfg(2);
        let t = LocalScalar::t(c2);
        let one = LocalScalar::one(c2);
        assert_eq!((&t + &one).frobenius(), &(&t * &t) + &one);
        let c3 = cfg(3);
        assert_eq!(LocalScalar::t_pow(-1, c3).frobenius(), LocalScalar::t_pow(-3, c3));
    }

    #[test]
    fn gen_binom_examples() {
        let c = cfg(3);
        let y = LocalScalar::t_pow(-1, c);
        assert!(y.gen_binom(0).unwrap().is_one());
        assert_eq!(y.gen_binom(1).unwrap(), y);
        // y(y-1)/2 = (1/t^2 - 1/t) * 2 = 2/t^2 + 1/t  (mod 3)
        let expected = &LocalScalar::monomial(2, -2, c) + &LocalScalar::t_pow(-1, c);
        assert_eq!(y.gen_binom(2).unwrap(), expected);
        assert!(y.gen_binom(3).is_err());
        assert!(y.gen_binom(-1).is_err());
    }

    #[test]
    fn canonical_printing() {
        let c = cfg(3);
        let one = LocalScalar::one(c);
        let t = LocalScalar::t(c);
        let x = &(&one + &t.pow(2)) / &t.pow(3);
        assert_eq!(x.to_string(), "(1+t^2)/t^3");
        let y = &one / &(&one + &t);
        assert_eq!(y.to_string(), "1/(1+t)");
        assert_eq!(LocalScalar::from_int(-1, c).to_string(), "2");
    }
}
