use crate::localfield::LocalScalar;

use super::{Ambient, DualElement, GroupAlgError, GroupAlgebraElement, GroupShape};

/// A dense element of `B (x) B`, indexed by pairs of group elements.
///
/// On the group side the coefficient at `(s, r)` is that of `g^s (x) g^r`;
/// on the dual side it is the value of the function at `(s, r)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement {
    shape: GroupShape,
    side: Ambient,
    coeffs: Vec<LocalScalar>,
}

impl TensorElement {
    pub fn zero(shape: GroupShape, side: Ambient) -> Self {
        let d = shape.dim();
        TensorElement {
            shape,
            side,
            coeffs: vec![LocalScalar::zero(shape.cfg()); d * d],
        }
    }

    pub fn shape(&self) -> GroupShape {
        self.shape
    }

    pub fn side(&self) -> Ambient {
        self.side
    }

    pub fn get(&self, i: usize, j: usize) -> &LocalScalar {
        &self.coeffs[i * self.shape.dim() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: LocalScalar) {
        let d = self.shape.dim();
        self.coeffs[i * d + j] = value;
    }

    /// Row-major coefficients, `dim * dim` of them.
    pub fn coeffs(&self) -> &[LocalScalar] {
        &self.coeffs
    }

    pub fn outer_group(x: &GroupAlgebraElement, y: &GroupAlgebraElement) -> Self {
        Self::outer(x.shape(), Ambient::Group, x.coeffs(), y.coeffs())
    }

    pub fn outer_dual(f: &DualElement, h: &DualElement) -> Self {
        Self::outer(f.shape(), Ambient::Dual, f.values(), h.values())
    }

    fn outer(shape: GroupShape, side: Ambient, a: &[LocalScalar], b: &[LocalScalar]) -> Self {
        let mut t = Self::zero(shape, side);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    t.set(i, j, x * y);
                }
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.shape, self.side), (other.shape, other.side));
        TensorElement {
            shape: self.shape,
            side: self.side,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    /// Product in `B (x) B`: convolution in each slot on the group side,
    /// pointwise on the dual side.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!((self.shape, self.side), (other.shape, other.side));
        let shape = self.shape;
        let d = shape.dim();
        match self.side {
            Ambient::Dual => TensorElement {
                shape,
                side: Ambient::Dual,
                coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).collect(),
            },
            Ambient::Group => {
                let mut out = Self::zero(shape, Ambient::Group);
                let rhs: Vec<(usize, usize, &LocalScalar)> = (0..d * d)
                    .filter(|&k| !other.coeffs[k].is_zero())
                    .map(|k| (k / d, k % d, &other.coeffs[k]))
                    .collect();
                for k in 0..d * d {
                    let a = &self.coeffs[k];
                    if a.is_zero() {
                        continue;
                    }
                    let (i, j) = (k / d, k % d);
                    for &(r, s, b) in &rhs {
                        let idx = shape.add_index(i, r) * d + shape.add_index(j, s);
                        out.coeffs[idx] = &out.coeffs[idx] + &(a * b);
                    }
                }
                out
            }
        }
    }
}

/// `<F, X>` for a dual tensor `F` and a group tensor `X`; the pairing
/// factors componentwise so it is the sum of coefficientwise products.
pub fn pair_tensor(f: &TensorElement, x: &TensorElement) -> Result<LocalScalar, GroupAlgError> {
    if f.shape != x.shape {
        return Err(GroupAlgError::ShapeMismatch);
    }
    if f.side != Ambient::Dual || x.side != Ambient::Group {
        return Err(GroupAlgError::WrongSide);
    }
    Ok(f.coeffs
        .iter()
        .zip(&x.coeffs)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(LocalScalar::zero(f.shape.cfg()), |acc, (a, b)| &acc + &(a * b)))
}
