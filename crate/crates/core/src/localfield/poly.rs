//! Dense univariate polynomials over F_p in the variable `t`.

use std::fmt;

/// Inverse of `a` modulo the prime `p` (a != 0 mod p).
pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    // Fermat: a^(p-2)
    let mut base = (a % p) as u64;
    let mut exp = p - 2;
    let mut acc = 1u64;
    let m = p as u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u32
}

/// Polynomial in `t` with coefficients in F_p, stored low degree first.
///
/// The coefficient vector never has trailing zeros, so the zero polynomial
/// is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u32,
    coeffs: Vec<u32>,
}

impl FpPoly {
    pub fn zero(p: u32) -> Self {
        FpPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u32) -> Self {
        Self::constant(1, p)
    }

    pub fn constant(c: i64, p: u32) -> Self {
        Self::from_coeffs(vec![c.rem_euclid(p as i64) as u32], p)
    }

    /// `c * t^k`
    pub fn monomial(c: i64, k: usize, p: u32) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c.rem_euclid(p as i64) as u32;
        Self::from_coeffs(coeffs, p)
    }

    pub fn from_coeffs(mut coeffs: Vec<u32>, p: u32) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Order of vanishing at t = 0, `None` for zero.
    pub fn ord_t(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    /// True iff the polynomial is `c * t^k` for a single `k`.
    pub fn is_monomial(&self) -> bool {
        match (self.ord_t(), self.degree()) {
            (Some(o), Some(d)) => o == d,
            _ => false,
        }
    }

    /// Divide by `t^k`; the caller guarantees `k <= ord_t`.
    pub fn shift_down(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        FpPoly {
            p: self.p,
            coeffs: self.coeffs[k.min(self.coeffs.len())..].to_vec(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        FpPoly { p: self.p, coeffs }
    }

    pub fn scale(&self, c: u32) -> Self {
        let c = c % self.p;
        if c == 0 {
            return Self::zero(self.p);
        }
        let p = self.p;
        FpPoly {
            p,
            coeffs: self.coeffs.iter().map(|&a| a * c % p).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let p = self.p;
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (&self.coeffs, &other.coeffs)
        } else {
            (&other.coeffs, &self.coeffs)
        };
        let mut coeffs = long.clone();
        for (c, s) in coeffs.iter_mut().zip(short.iter()) {
            *c = (*c + s) % p;
        }
        Self::from_coeffs(coeffs, p)
    }

    pub fn neg(&self) -> Self {
        let p = self.p;
        FpPoly {
            p,
            coeffs: self.coeffs.iter().map(|&a| (p - a) % p).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        if other.coeffs.len() == 1 {
            return self.scale(other.coeffs[0]);
        }
        if self.coeffs.len() == 1 {
            return other.scale(self.coeffs[0]);
        }
        let p = self.p as u64;
        let mut acc = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] += a as u64 * b as u64;
            }
            // keep the accumulators far from overflow
            if i % 1024 == 1023 {
                for v in acc.iter_mut() {
                    *v %= p;
                }
            }
        }
        Self::from_coeffs(acc.into_iter().map(|v| (v % p) as u32).collect(), self.p)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let p = self.p;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Self::zero(p), self.clone());
        }
        let lead_inv = inv_mod(divisor.leading(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd] * lead_inv % p;
            if c == 0 {
                continue;
            }
            quot[k] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = (rem[k + j] + (p - c) * d % p) % p;
            }
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot, p), Self::from_coeffs(rem, p))
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() || self.leading() == 1 {
            return self.clone();
        }
        self.scale(inv_mod(self.leading(), self.p))
    }

    /// `f(t)^p = f(t^p)` in characteristic p.
    pub fn frobenius(&self) -> Self {
        let p = self.p as usize;
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; (self.coeffs.len() - 1) * p + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * p] = c;
        }
        FpPoly { p: self.p, coeffs }
    }

    /// Coefficients written as signed residues are printed as-is in `[0, p)`.
    pub(crate) fn fmt_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}*t")?,
                (k, 1) => write!(f, "t^{k}")?,
                (k, c) => write!(f, "{c}*t^{k}")?,
            }
        }
        Ok(())
    }

    pub(crate) fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly[p={}](", self.p)?;
        self.fmt_terms(f)?;
        write!(f, ")")
    }
}
