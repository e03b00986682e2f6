//! Sparse multivariate polynomials and their truncations modulo `(x^p, y^p, ...)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::IdentityError;

/// Coefficient ring for [`MultiPoly`].
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_one(&self) -> bool;
    /// The multiplicative identity of the ring `self` lives in.
    fn one_like(&self) -> Self;
}

impl Coefficient for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
}

/// A residue in F_p; the modulus travels with the value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    p: u32,
}

impl Fp {
    pub fn new(value: i64, p: u32) -> Self {
        Fp {
            value: value.rem_euclid(p as i64) as u32,
            p,
        }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn inv(&self) -> Option<Self> {
        (self.value != 0).then(|| Fp {
            value: inverse(self.value, self.p),
            p: self.p,
        })
    }
}

fn inverse(a: u32, p: u32) -> u32 {
    (1..p).find(|b| a * b % p == 1).expect("nonzero residue mod a prime")
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Coefficient for Fp {
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        Fp {
            value: (self.value + other.value) % self.p,
            p: self.p,
        }
    }
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        Fp {
            value: self.value * other.value % self.p,
            p: self.p,
        }
    }
    fn neg(&self) -> Self {
        Fp {
            value: (self.p - self.value) % self.p,
            p: self.p,
        }
    }
    fn is_one(&self) -> bool {
        self.value == 1
    }
    fn one_like(&self) -> Self {
        Fp::new(1, self.p)
    }
}

/// Exponent vector, one entry per declared variable.
pub type Monomial = Vec<u32>;

/// Sparse polynomial over `C` in an ordered list of named variables.
///
/// No zero coefficients are ever stored.
#[derive(Clone, PartialEq)]
pub struct MultiPoly<C: Coefficient> {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> MultiPoly<C> {
    pub fn zero(vars: &[&str]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    fn empty_like(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: C) -> Self {
        let mut out = Self::zero(vars);
        out.insert(vec![0; vars.len()], c);
        out
    }

    /// The variable `name` with coefficient `one`.
    pub fn var(vars: &[&str], name: &str, one: C) -> Self {
        let mut out = Self::zero(vars);
        let idx = out.var_index(name).expect("unknown variable");
        let mut mono = vec![0; vars.len()];
        mono[idx] = 1;
        out.insert(mono, one);
        out
    }

    pub fn constant_like(&self, c: C) -> Self {
        let mut out = self.empty_like();
        out.insert(vec![0; self.vars.len()], c);
        out
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &[u32]) -> Option<&C> {
        self.terms.get(mono)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Option<&C> {
        self.terms.get(&vec![0; self.vars.len()])
    }

    pub fn total_degree(mono: &[u32]) -> u32 {
        mono.iter().sum()
    }

    fn insert(&mut self, mono: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&mono);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    fn check_vars(&self, other: &Self) {
        assert!(
            self.vars == other.vars,
            "variable sets differ: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = self.empty_like();
        for (m, a) in &self.terms {
            out.insert(m.clone(), a.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_filtered(other, |_| true)
    }

    /// Product keeping only monomials accepted by `keep`.
    pub(crate) fn mul_filtered(&self, other: &Self, keep: impl Fn(&[u32]) -> bool) -> Self {
        self.check_vars(other);
        let mut out = self.empty_like();
        let mut mono = vec![0u32; self.vars.len()];
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                for (k, slot) in mono.iter_mut().enumerate() {
                    *slot = ma[k] + mb[k];
                }
                if keep(&mono) {
                    out.insert(mono.clone(), ca.mul(cb));
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let one = self.one_coefficient();
        let mut acc = self.constant_like(one);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn one_coefficient(&self) -> C {
        self.terms
            .values()
            .next()
            .map(Coefficient::one_like)
            .expect("power of the zero polynomial")
    }

    /// Substitute `value` for `name` (value is a constant).
    pub fn substitute_constant(&self, name: &str, value: &C) -> Self {
        let idx = self.var_index(name).expect("unknown variable");
        let mut out = self.empty_like();
        for (m, c) in &self.terms {
            let mut c = c.clone();
            for _ in 0..m[idx] {
                c = c.mul(value);
            }
            let mut m = m.clone();
            m[idx] = 0;
            out.insert(m, c);
        }
        out
    }

    /// Sets `name` to zero.
    pub fn set_zero(&self, name: &str) -> Self {
        let idx = self.var_index(name).expect("unknown variable");
        let mut out = self.empty_like();
        for (m, c) in &self.terms {
            if m[idx] == 0 {
                out.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Re-expresses the polynomial in a larger variable list (matching by name).
    pub fn embed(&self, vars: &[&str]) -> Self {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|w| w == v)
                    .unwrap_or_else(|| panic!("variable {v} missing from target ring"))
            })
            .collect();
        let mut out = Self::zero(vars);
        for (m, c) in &self.terms {
            let mut target = vec![0; vars.len()];
            for (k, &e) in m.iter().enumerate() {
                target[map[k]] = e;
            }
            out.insert(target, c.clone());
        }
        out
    }

    /// Restricts to a sub-list of variables; every dropped variable must have
    /// exponent zero in every term.
    pub fn project(&self, vars: &[&str]) -> Self {
        let map: Vec<Option<usize>> = self.vars.iter().map(|v| vars.iter().position(|w| w == v)).collect();
        let mut out = Self::zero(vars);
        for (m, c) in &self.terms {
            let mut target = vec![0; vars.len()];
            for (k, &e) in m.iter().enumerate() {
                match map[k] {
                    Some(j) => target[j] = e,
                    None => assert_eq!(e, 0, "variable {} still occurs", self.vars[k]),
                }
            }
            out.insert(target, c.clone());
        }
        out
    }

    /// Monomials in graded lexicographic order (declared variable order).
    pub fn grlex_terms(&self) -> Vec<(&Monomial, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| Self::total_degree(a).cmp(&Self::total_degree(b)).then_with(|| b.cmp(a)));
        v
    }
}

impl MultiPoly<BigInt> {
    /// Image under Z -> F_p.
    pub fn reduce_mod(&self, p: u32) -> MultiPoly<Fp> {
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        let modulus = BigInt::from(p);
        for (m, c) in &self.terms {
            let r = ((c % &modulus) + &modulus) % &modulus;
            out.insert(m.clone(), Fp::new(r.to_i64().unwrap(), p));
        }
        out
    }

    /// Exact division by an integer; `None` if some coefficient is not divisible.
    pub fn div_exact(&self, d: &BigInt) -> Option<Self> {
        let mut out = self.empty_like();
        for (m, c) in &self.terms {
            if !Zero::is_zero(&(c % d)) {
                return None;
            }
            out.insert(m.clone(), c / d);
        }
        Some(out)
    }
}

impl<C: Coefficient> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.grlex_terms().into_iter().enumerate() {
            let text = c.to_string();
            let (negative, body) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if i > 0 {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            } else if negative {
                write!(f, "-")?;
            }
            let is_const = m.iter().all(|&e| e == 0);
            let mut parts = Vec::new();
            if is_const || body != "1" {
                parts.push(body);
            }
            for (k, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(self.vars[k].clone()),
                    e => parts.push(format!("{}^{}", self.vars[k], e)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.vars.join(","), self)
    }
}

/// A polynomial over F_p in which the designated variables are truncated:
/// any monomial with exponent `>= p` in a nilpotent variable is dropped.
#[derive(Clone, PartialEq, Debug)]
pub struct QuotientPoly {
    poly: MultiPoly<Fp>,
    nilpotent: Arc<[usize]>,
    p: u32,
}

impl QuotientPoly {
    pub fn new(poly: MultiPoly<Fp>, nilpotent: &[&str], p: u32) -> Self {
        let idx: Vec<usize> = nilpotent
            .iter()
            .map(|n| poly.var_index(n).expect("unknown nilpotent variable"))
            .collect();
        let mut out = QuotientPoly {
            poly,
            nilpotent: idx.into(),
            p,
        };
        out.reduce();
        out
    }

    fn reduce(&mut self) {
        let nil = self.nilpotent.clone();
        let p = self.p;
        self.poly.terms.retain(|m, _| nil.iter().all(|&k| m[k] < p));
    }

    fn with_poly(&self, poly: MultiPoly<Fp>) -> Self {
        let mut out = QuotientPoly {
            poly,
            nilpotent: self.nilpotent.clone(),
            p: self.p,
        };
        out.reduce();
        out
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn poly(&self) -> &MultiPoly<Fp> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn one_like(&self) -> Self {
        self.with_poly(self.poly.constant_like(Fp::new(1, self.p)))
    }

    /// Lift an arbitrary polynomial in the same variables into this quotient.
    pub fn lift(&self, poly: MultiPoly<Fp>) -> Self {
        self.with_poly(poly)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.with_poly(self.poly.add(&other.poly))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.with_poly(self.poly.sub(&other.poly))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let nil = self.nilpotent.clone();
        let p = self.p;
        let prod = self.poly.mul_filtered(&other.poly, |m| nil.iter().all(|&k| m[k] < p));
        QuotientPoly {
            poly: prod,
            nilpotent: self.nilpotent.clone(),
            p,
        }
    }

    /// Multiplies by the integer `c` (reduced mod p).
    pub fn lift_scale(&self, c: i64) -> Self {
        self.with_poly(self.poly.scale(&Fp::new(c, self.p)))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// True iff every monomial involves some nilpotent variable.
    pub fn is_nilpotent(&self) -> bool {
        self.poly.terms().all(|(m, _)| self.nilpotent.iter().any(|&k| m[k] > 0))
    }
}

/// The exponent in a truncated exponential `u^[e]`.
#[derive(Clone, Debug)]
pub enum ExpArg {
    Var(String),
    Const(i64),
    Poly(MultiPoly<Fp>),
}

/// `C(e, m) = e (e-1) ... (e-m+1) / m!` as a polynomial over F_p.
pub fn binomial_poly(e: &MultiPoly<Fp>, m: u32, p: u32) -> MultiPoly<Fp> {
    assert!(m < p, "binomial index must be below p");
    let one = Fp::new(1, p);
    let mut acc = e.constant_like(one);
    let mut fact = 1i64;
    for k in 0..m {
        acc = acc.mul(&e.sub(&e.constant_like(Fp::new(k as i64, p))));
        fact *= (k + 1) as i64;
    }
    acc.scale(&Fp::new(fact, p).inv().unwrap())
}

/// `u^[e] = sum_{m<p} C(e, m) (u - 1)^m` in the truncated ring.
pub fn trunc_exp_symbolic(u: &QuotientPoly, e: &ExpArg) -> Result<QuotientPoly, IdentityError> {
    let p = u.p;
    let w = u.sub(&u.one_like());
    if !w.is_nilpotent() {
        return Err(IdentityError::NotNilpotent(format!("{}", w.poly)));
    }
    let e_poly = match e {
        ExpArg::Var(name) => {
            let vars: Vec<&str> = u.poly.vars.iter().map(|s| s.as_str()).collect();
            if u.poly.var_index(name).is_none() {
                return Err(IdentityError::UnknownVariable(name.clone()));
            }
            MultiPoly::var(&vars, name, Fp::new(1, p))
        }
        ExpArg::Const(c) => u.poly.constant_like(Fp::new(*c, p)),
        ExpArg::Poly(poly) => poly.clone(),
    };
    let mut acc = u.lift(u.poly.empty_like());
    let mut w_pow = u.one_like();
    for m in 0..p {
        let coeff = u.lift(binomial_poly(&e_poly, m, p));
        acc = acc.add(&coeff.mul(&w_pow));
        w_pow = w_pow.mul(&w);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bigint_reduction_of_negative_coefficients() {
        let vars = ["x"];
        let f = MultiPoly::constant(&vars, BigInt::from(-4)).add(&MultiPoly::var(&vars, "x", BigInt::from(7)));
        let r = f.reduce_mod(3);
        assert_eq!(r.constant_term().unwrap().value(), 2);
        assert_eq!(r.coeff(&[1]).unwrap().value(), 1);
    }

    #[test]
    fn grlex_printing() {
        let vars = ["x", "y"];
        let one = Fp::new(1, 2);
        let x = MultiPoly::var(&vars, "x", one);
        let y = MultiPoly::var(&vars, "y", one);
        let q = x.mul(&y).add(&x.mul(&x).mul(&y)).add(&x.mul(&y).mul(&y));
        assert_eq!(q.to_string(), "x*y + x^2*y + x*y^2");
    }

    #[test]
    fn quotient_drops_high_powers() {
        let vars = ["x", "z"];
        let one = Fp::new(1, 3);
        let x = QuotientPoly::new(MultiPoly::var(&vars, "x", one), &["x"], 3);
        assert!(x.pow(3).is_zero());
        assert!(!x.pow(2).is_zero());
    }

    #[test]
    fn trunc_exp_edge_cases() {
        let vars = ["x", "z"];
        let p = 2;
        let one = Fp::new(1, p);
        let base = QuotientPoly::new(MultiPoly::constant(&vars, one), &["x"], p);
        let x = base.lift(MultiPoly::var(&vars, "x", one));
        let u = base.add(&x);
        // exponent zero gives 1
        assert_eq!(trunc_exp_symbolic(&u, &ExpArg::Const(0)).unwrap(), base);
        // base 1 gives 1
        assert_eq!(trunc_exp_symbolic(&base, &ExpArg::Var("z".into())).unwrap(), base);
        // (1+x)^[z] = 1 + z x for p = 2
        let z = base.lift(MultiPoly::var(&vars, "z", one));
        let expected = base.add(&z.mul(&x));
        assert_eq!(trunc_exp_symbolic(&u, &ExpArg::Var("z".into())).unwrap(), expected);
        // constant term in u - 1 is rejected
        let bad = x.clone();
        assert!(trunc_exp_symbolic(&bad, &ExpArg::Const(1)).is_err());
    }

    #[test]
    fn fp_inverse() {
        for p in [2u32, 3, 5, 7] {
            for a in 1..p {
                let x = Fp::new(a as i64, p);
                assert!(x.mul(&x.inv().unwrap()).is_one());
            }
        }
    }
}
