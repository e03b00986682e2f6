//! The group algebra `K[C_p^n]`, its linear dual, and the pairing
//! between them.
//!
//! Group-algebra elements are stored in the group-element basis and dual
//! elements as function values on the group, so the dual product is
//! pointwise.

mod automorphism;
mod dual;
mod group;
mod literal;
mod shape;
mod tensor;
mod xi;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::localfield::{LocalFieldError, LocalScalar};

pub use automorphism::apply_group_automorphism;
pub use dual::DualElement;
pub use group::GroupAlgebraElement;
pub use literal::ElementLiteral;
pub use shape::{GroupExponent, GroupShape, MAX_RANK};
pub use tensor::{pair_tensor, TensorElement};
pub use xi::{falling_basis_inverse, falling_basis_matrix, falling_dual, xi, xi_index};

pub(crate) use xi::invert_mod_p;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupAlgError {
    #[error("rank {0} is outside the supported range 1..={max}", max = MAX_RANK)]
    UnsupportedRank(usize),
    #[error("expected {expected} coefficients, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("bad group exponent `{0}`")]
    BadExponent(String),
    #[error("`{0}` is not a standard unit tuple")]
    NotUnitTuple(String),
    #[error("element is not unipotent: (u - 1)^p != 0")]
    NotUnipotent,
    #[error("operands live over different primes or ranks")]
    ShapeMismatch,
    #[error("operand is on the wrong side of the pairing")]
    WrongSide,
    #[error("matrix is not invertible mod p")]
    SingularAutomorphism,
    #[error("matrix must be {0}x{0}")]
    BadMatrix(usize),
    #[error("malformed element literal: {0}")]
    Literal(String),
    #[error(transparent)]
    Scalar(#[from] LocalFieldError),
}

/// Which of the two Hopf algebras an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambient {
    Group,
    Dual,
}

impl Ambient {
    pub fn opposite(self) -> Self {
        match self {
            Ambient::Group => Ambient::Dual,
            Ambient::Dual => Ambient::Group,
        }
    }
}

impl std::fmt::Display for Ambient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Ambient::Group => "group",
            Ambient::Dual => "dual",
        })
    }
}

/// `<f, x> = sum_s f(s) x(s)`
pub fn pair(f: &DualElement, x: &GroupAlgebraElement) -> Result<LocalScalar, GroupAlgError> {
    if f.shape() != x.shape() {
        return Err(GroupAlgError::ShapeMismatch);
    }
    Ok(f.values()
        .iter()
        .zip(x.coeffs())
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(LocalScalar::zero(f.shape().cfg()), |acc, (a, b)| &acc + &(a * b)))
}

/// An element of either ambient Hopf algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AmbientElement {
    Group(GroupAlgebraElement),
    Dual(DualElement),
}

/// The three structure maps evaluated on one element.
#[derive(Clone, Debug)]
pub struct HopfMaps {
    pub delta: TensorElement,
    pub counit: LocalScalar,
    pub antipode: AmbientElement,
}

impl AmbientElement {
    pub fn zero(ambient: Ambient, shape: GroupShape) -> Self {
        match ambient {
            Ambient::Group => AmbientElement::Group(GroupAlgebraElement::zero(shape)),
            Ambient::Dual => AmbientElement::Dual(DualElement::zero(shape)),
        }
    }

    pub fn one(ambient: Ambient, shape: GroupShape) -> Self {
        match ambient {
            Ambient::Group => AmbientElement::Group(GroupAlgebraElement::one(shape)),
            Ambient::Dual => AmbientElement::Dual(DualElement::one(shape)),
        }
    }

    /// Builds an element from its coordinates in the standard basis
    /// (group elements, or point masses).
    pub fn from_coords(ambient: Ambient, shape: GroupShape, coords: Vec<LocalScalar>) -> Result<Self, GroupAlgError> {
        Ok(match ambient {
            Ambient::Group => AmbientElement::Group(GroupAlgebraElement::from_coeffs(shape, coords)?),
            Ambient::Dual => AmbientElement::Dual(DualElement::from_values(shape, coords)?),
        })
    }

    pub fn ambient(&self) -> Ambient {
        match self {
            AmbientElement::Group(_) => Ambient::Group,
            AmbientElement::Dual(_) => Ambient::Dual,
        }
    }

    pub fn shape(&self) -> GroupShape {
        match self {
            AmbientElement::Group(x) => x.shape(),
            AmbientElement::Dual(f) => f.shape(),
        }
    }

    pub fn coords(&self) -> &[LocalScalar] {
        match self {
            AmbientElement::Group(x) => x.coeffs(),
            AmbientElement::Dual(f) => f.values(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(LocalScalar::is_zero)
    }

    fn same_side<'a>(&'a self, other: &'a Self) -> (&'a Self, &'a Self) {
        assert_eq!(self.ambient(), other.ambient(), "ambient mismatch");
        (self, other)
    }

    pub fn add(&self, other: &Self) -> Self {
        match self.same_side(other) {
            (AmbientElement::Group(a), AmbientElement::Group(b)) => AmbientElement::Group(a.add(b)),
            (AmbientElement::Dual(a), AmbientElement::Dual(b)) => AmbientElement::Dual(a.add(b)),
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        match self.same_side(other) {
            (AmbientElement::Group(a), AmbientElement::Group(b)) => AmbientElement::Group(a.sub(b)),
            (AmbientElement::Dual(a), AmbientElement::Dual(b)) => AmbientElement::Dual(a.sub(b)),
            _ => unreachable!(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        match self.same_side(other) {
            (AmbientElement::Group(a), AmbientElement::Group(b)) => AmbientElement::Group(a.mul(b)),
            (AmbientElement::Dual(a), AmbientElement::Dual(b)) => AmbientElement::Dual(a.mul(b)),
            _ => unreachable!(),
        }
    }

    pub fn scale(&self, c: &LocalScalar) -> Self {
        match self {
            AmbientElement::Group(x) => AmbientElement::Group(x.scale(c)),
            AmbientElement::Dual(f) => AmbientElement::Dual(f.scale(c)),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        match self {
            AmbientElement::Group(x) => AmbientElement::Group(x.pow(e)),
            AmbientElement::Dual(f) => AmbientElement::Dual(f.pow(e)),
        }
    }

    pub fn counit(&self) -> LocalScalar {
        match self {
            AmbientElement::Group(x) => x.counit(),
            AmbientElement::Dual(f) => f.counit(),
        }
    }

    pub fn antipode(&self) -> Self {
        match self {
            AmbientElement::Group(x) => AmbientElement::Group(x.antipode()),
            AmbientElement::Dual(f) => AmbientElement::Dual(f.antipode()),
        }
    }

    pub fn delta(&self) -> TensorElement {
        match self {
            AmbientElement::Group(x) => x.delta(),
            AmbientElement::Dual(f) => f.delta(),
        }
    }

    pub fn hopf_maps(&self) -> HopfMaps {
        HopfMaps {
            delta: self.delta(),
            counit: self.counit(),
            antipode: self.antipode(),
        }
    }

    pub fn degree_measure(&self) -> usize {
        self.coords().iter().map(LocalScalar::degree_measure).max().unwrap_or(0)
    }

    pub fn as_group(&self) -> Option<&GroupAlgebraElement> {
        match self {
            AmbientElement::Group(x) => Some(x),
            AmbientElement::Dual(_) => None,
        }
    }

    pub fn as_dual(&self) -> Option<&DualElement> {
        match self {
            AmbientElement::Dual(f) => Some(f),
            AmbientElement::Group(_) => None,
        }
    }
}

impl From<GroupAlgebraElement> for AmbientElement {
    fn from(x: GroupAlgebraElement) -> Self {
        AmbientElement::Group(x)
    }
}

impl From<DualElement> for AmbientElement {
    fn from(f: DualElement) -> Self {
        AmbientElement::Dual(f)
    }
}
