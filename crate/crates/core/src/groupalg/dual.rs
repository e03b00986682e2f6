use crate::localfield::LocalScalar;

use super::{Ambient, GroupAlgError, GroupShape, TensorElement};

/// A K-valued function on C_p^n, i.e. an element of `(K[C_p^n])^*` in
/// point-mass coordinates. Multiplication is pointwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualElement {
    shape: GroupShape,
    values: Vec<LocalScalar>,
}

impl DualElement {
    pub fn zero(shape: GroupShape) -> Self {
        DualElement {
            shape,
            values: vec![LocalScalar::zero(shape.cfg()); shape.dim()],
        }
    }

    /// The constant function 1 (the unit, and the counit of the group algebra).
    pub fn one(shape: GroupShape) -> Self {
        DualElement {
            shape,
            values: vec![LocalScalar::one(shape.cfg()); shape.dim()],
        }
    }

    pub fn point_mass(shape: GroupShape, index: usize) -> Self {
        let mut out = Self::zero(shape);
        out.values[index] = LocalScalar::one(shape.cfg());
        out
    }

    pub fn from_values(shape: GroupShape, values: Vec<LocalScalar>) -> Result<Self, GroupAlgError> {
        if values.len() != shape.dim() {
            return Err(GroupAlgError::LengthMismatch {
                expected: shape.dim(),
                found: values.len(),
            });
        }
        Ok(DualElement { shape, values })
    }

    pub fn shape(&self) -> GroupShape {
        self.shape
    }

    pub fn values(&self) -> &[LocalScalar] {
        &self.values
    }

    pub fn value(&self, index: usize) -> &LocalScalar {
        &self.values[index]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(LocalScalar::is_zero)
    }

    fn map(&self, f: impl Fn(&LocalScalar) -> LocalScalar) -> Self {
        DualElement {
            shape: self.shape,
            values: self.values.iter().map(f).collect(),
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(&LocalScalar, &LocalScalar) -> LocalScalar) -> Self {
        assert_eq!(self.shape, other.shape, "shape mismatch");
        DualElement {
            shape: self.shape,
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        }
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

    pub fn mul(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a * b)
    }

    pub fn pow(&self, e: u32) -> Self {
        self.map(|a| a.pow(e as i64))
    }

    /// `eps(f) = f(1)`
    pub fn counit(&self) -> LocalScalar {
        self.values[0].clone()
    }

    /// `S(f)(s) = f(s^{-1})`
    pub fn antipode(&self) -> Self {
        let shape = self.shape;
        DualElement {
            shape,
            values: (0..shape.dim())
                .map(|i| self.values[shape.neg_index(i)].clone())
                .collect(),
        }
    }

    /// `Delta(f)(s, r) = f(s r)`
    pub fn delta(&self) -> TensorElement {
        let shape = self.shape;
        let mut t = TensorElement::zero(shape, Ambient::Dual);
        for i in 0..shape.dim() {
            for j in 0..shape.dim() {
                let v = &self.values[shape.add_index(i, j)];
                if !v.is_zero() {
                    t.set(i, j, v.clone());
                }
            }
        }
        t
    }

    /// `Delta(f) = f (x) 1 + 1 (x) f`
    pub fn is_primitive(&self) -> bool {
        let one = DualElement::one(self.shape);
        let expected = TensorElement::outer_dual(self, &one).add(&TensorElement::outer_dual(&one, self));
        self.delta() == expected
    }

    pub fn degree_measure(&self) -> usize {
        self.values.iter().map(LocalScalar::degree_measure).max().unwrap_or(0)
    }
}
