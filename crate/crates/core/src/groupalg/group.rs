use crate::localfield::LocalScalar;

use super::{Ambient, GroupAlgError, GroupShape, TensorElement};

/// An element of the group algebra `K[C_p^n]` in the group-element basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    shape: GroupShape,
    coeffs: Vec<LocalScalar>,
}

impl GroupAlgebraElement {
    pub fn zero(shape: GroupShape) -> Self {
        GroupAlgebraElement {
            shape,
            coeffs: vec![LocalScalar::zero(shape.cfg()); shape.dim()],
        }
    }

    pub fn one(shape: GroupShape) -> Self {
        Self::group_element(shape, 0)
    }

    /// The basis element `g^a`, given by its index.
    pub fn group_element(shape: GroupShape, index: usize) -> Self {
        let mut out = Self::zero(shape);
        out.coeffs[index] = LocalScalar::one(shape.cfg());
        out
    }

    /// `g_i`, 1-based.
    pub fn generator(shape: GroupShape, i: usize) -> Self {
        Self::group_element(shape, shape.generator_index(i))
    }

    pub fn from_coeffs(shape: GroupShape, coeffs: Vec<LocalScalar>) -> Result<Self, GroupAlgError> {
        if coeffs.len() != shape.dim() {
            return Err(GroupAlgError::LengthMismatch {
                expected: shape.dim(),
                found: coeffs.len(),
            });
        }
        Ok(GroupAlgebraElement { shape, coeffs })
    }

    pub fn shape(&self) -> GroupShape {
        self.shape
    }

    pub fn coeffs(&self) -> &[LocalScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> &LocalScalar {
        &self.coeffs[index]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LocalScalar::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a)
    }

    pub fn scale(&self, c: &LocalScalar) -> Self {
        self.map(|a| a * c)
    }

    fn map(&self, f: impl Fn(&LocalScalar) -> LocalScalar) -> Self {
        GroupAlgebraElement {
            shape: self.shape,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(&LocalScalar, &LocalScalar) -> LocalScalar) -> Self {
        assert_eq!(self.shape, other.shape, "shape mismatch");
        GroupAlgebraElement {
            shape: self.shape,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    /// Group convolution.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.shape, other.shape, "shape mismatch");
        let shape = self.shape;
        let mut out = vec![LocalScalar::zero(shape.cfg()); shape.dim()];
        let rhs: Vec<(usize, &LocalScalar)> = other.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &rhs {
                let k = shape.add_index(i, j);
                out[k] = &out[k] + &(a * b);
            }
        }
        GroupAlgebraElement { shape, coeffs: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.shape);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `eps(g^a) = 1`
    pub fn counit(&self) -> LocalScalar {
        self.coeffs
            .iter()
            .fold(LocalScalar::zero(self.shape.cfg()), |acc, c| &acc + c)
    }

    /// `S(g^a) = g^{-a}`
    pub fn antipode(&self) -> Self {
        let shape = self.shape;
        let mut out = vec![LocalScalar::zero(shape.cfg()); shape.dim()];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[shape.neg_index(i)] = c.clone();
        }
        GroupAlgebraElement { shape, coeffs: out }
    }

    /// `Delta(g^a) = g^a (x) g^a`
    pub fn delta(&self) -> TensorElement {
        let shape = self.shape;
        let mut t = TensorElement::zero(shape, Ambient::Group);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                t.set(i, i, c.clone());
            }
        }
        t
    }

    /// `(u - 1)^p = 0`
    pub fn is_unipotent(&self) -> bool {
        self.sub(&Self::one(self.shape)).pow(self.shape.p()).is_zero()
    }

    /// Truncated exponential `u^[e] = sum_{m<p} C(e, m) (u - 1)^m`.
    pub fn trunc_exp(&self, e: &LocalScalar) -> Result<Self, GroupAlgError> {
        let shape = self.shape;
        let w = self.sub(&Self::one(shape));
        let mut powers = Vec::with_capacity(shape.p() as usize + 1);
        powers.push(Self::one(shape));
        for m in 1..=shape.p() as usize {
            powers.push(powers[m - 1].mul(&w));
        }
        if !powers[shape.p() as usize].is_zero() {
            return Err(GroupAlgError::NotUnipotent);
        }
        let mut acc = Self::zero(shape);
        for (m, w_m) in powers.iter().take(shape.p() as usize).enumerate() {
            let c = e.gen_binom(m as i64).expect("m < p");
            if !c.is_zero() {
                acc = acc.add(&w_m.scale(&c));
            }
        }
        Ok(acc)
    }

    /// Largest polynomial degree among the coefficients.
    pub fn degree_measure(&self) -> usize {
        self.coeffs.iter().map(LocalScalar::degree_measure).max().unwrap_or(0)
    }
}
