use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::groupalg::{Ambient, AmbientElement, GroupExponent, GroupShape, TensorElement};
use crate::linalg::{degree_cap_from_env, LinalgError, Matrix};
use crate::localfield::LocalScalar;

use super::OrdersError;

#[derive(Clone, Debug)]
enum Form {
    Generators(Vec<AmbientElement>),
    Basis(Vec<AmbientElement>),
}

/// A candidate R-order, given by `n` algebra generators or by an explicit
/// module basis of size `p^n`.
#[derive(Debug)]
pub struct OrderPresentation {
    ambient: Ambient,
    shape: GroupShape,
    form: Form,
    degree_cap: usize,
    basis: OnceLock<Result<Arc<BasisData>, OrdersError>>,
}

impl Clone for OrderPresentation {
    fn clone(&self) -> Self {
        OrderPresentation {
            ambient: self.ambient,
            shape: self.shape,
            form: self.form.clone(),
            degree_cap: self.degree_cap,
            basis: self.basis.clone(),
        }
    }
}

/// The monomial basis together with its coordinate map.
#[derive(Debug)]
pub struct BasisData {
    pub elements: Vec<AmbientElement>,
    /// Box exponents of each monomial; `None` for explicit bases.
    pub labels: Vec<Option<GroupExponent>>,
    /// Columns are basis elements in ambient coordinates.
    pub matrix: Matrix,
    pub inverse: Matrix,
}

impl BasisData {
    pub fn label(&self, m: usize) -> String {
        match &self.labels[m] {
            Some(e) => format!("m({e})"),
            None => format!("b{m}"),
        }
    }
}

/// Coordinates of an element on the basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub inside: bool,
    pub coords: Vec<LocalScalar>,
}

impl OrderPresentation {
    pub fn from_generators(generators: Vec<AmbientElement>) -> Result<Self, OrdersError> {
        let (ambient, shape) = common_frame(&generators)?;
        if generators.len() != shape.rank() {
            return Err(OrdersError::GeneratorCount {
                expected: shape.rank(),
                found: generators.len(),
            });
        }
        Ok(Self::build(ambient, shape, Form::Generators(generators)))
    }

    pub fn from_basis(basis: Vec<AmbientElement>) -> Result<Self, OrdersError> {
        let (ambient, shape) = common_frame(&basis)?;
        if basis.len() != shape.dim() {
            return Err(OrdersError::GeneratorCount {
                expected: shape.dim(),
                found: basis.len(),
            });
        }
        Ok(Self::build(ambient, shape, Form::Basis(basis)))
    }

    fn build(ambient: Ambient, shape: GroupShape, form: Form) -> Self {
        OrderPresentation {
            ambient,
            shape,
            form,
            degree_cap: degree_cap_from_env(),
            basis: OnceLock::new(),
        }
    }

    pub fn with_degree_cap(mut self, cap: usize) -> Self {
        self.degree_cap = cap;
        self.basis = OnceLock::new();
        self
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn shape(&self) -> GroupShape {
        self.shape
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn generators(&self) -> Option<&[AmbientElement]> {
        match &self.form {
            Form::Generators(g) => Some(g),
            Form::Basis(_) => None,
        }
    }

    pub fn explicit_basis(&self) -> Option<&[AmbientElement]> {
        match &self.form {
            Form::Basis(b) => Some(b),
            Form::Generators(_) => None,
        }
    }

    /// The box monomials `prod_k gen_k^{e_k}`, lexicographic in `e`, with
    /// their coordinate map. Computed once.
    pub fn basis(&self) -> Result<Arc<BasisData>, OrdersError> {
        self.basis.get_or_init(|| self.compute_basis().map(Arc::new)).clone()
    }

    fn compute_basis(&self) -> Result<BasisData, OrdersError> {
        let shape = self.shape;
        let (elements, labels) = match &self.form {
            Form::Basis(b) => (b.clone(), vec![None; b.len()]),
            Form::Generators(gens) => {
                let p = shape.p();
                let powers: Vec<Vec<AmbientElement>> = gens
                    .iter()
                    .map(|g| {
                        let mut pw = vec![AmbientElement::one(self.ambient, shape)];
                        for e in 1..p as usize {
                            pw.push(pw[e - 1].mul(g));
                        }
                        pw
                    })
                    .collect();
                let labels: Vec<GroupExponent> = (0..shape.dim()).map(|i| shape.exponent(i)).collect();
                let elements = labels
                    .par_iter()
                    .map(|e| {
                        e.0.iter()
                            .enumerate()
                            .fold(AmbientElement::one(self.ambient, shape), |acc, (k, &ek)| {
                                if ek == 0 {
                                    acc
                                } else {
                                    acc.mul(&powers[k][ek as usize])
                                }
                            })
                    })
                    .collect();
                (elements, labels.into_iter().map(Some).collect())
            }
        };
        let cols: Vec<Vec<LocalScalar>> = elements.iter().map(|e| e.coords().to_vec()).collect();
        let matrix = Matrix::from_columns(shape.cfg(), &cols)?;
        let inverse = matrix.inverse(self.degree_cap).map_err(|e| match e {
            LinalgError::Singular { rank, dim } => OrdersError::Dependent { rank, dim },
            other => other.into(),
        })?;
        Ok(BasisData {
            elements,
            labels,
            matrix,
            inverse,
        })
    }

    pub fn coordinates(&self, x: &AmbientElement) -> Result<Vec<LocalScalar>, OrdersError> {
        self.check_frame(x.ambient(), x.shape())?;
        Ok(self.basis()?.inverse.mul_vec(x.coords())?)
    }

    pub fn contains(&self, x: &AmbientElement) -> Result<Membership, OrdersError> {
        let coords = self.coordinates(x)?;
        Ok(Membership {
            inside: coords.iter().all(LocalScalar::is_integral),
            coords,
        })
    }

    /// Coordinates of a tensor on `basis (x) basis`, row-major.
    pub fn tensor_coordinates(&self, t: &TensorElement) -> Result<Matrix, OrdersError> {
        self.check_frame(t.side(), t.shape())?;
        let d = self.shape.dim();
        let rows: Vec<Vec<LocalScalar>> = (0..d).map(|i| (0..d).map(|j| t.get(i, j).clone()).collect()).collect();
        let tm = Matrix::from_rows(self.shape.cfg(), rows)?;
        let inv = &self.basis()?.inverse;
        Ok(inv.mul(&tm)?.mul(&inv.transpose())?)
    }

    fn check_frame(&self, ambient: Ambient, shape: GroupShape) -> Result<(), OrdersError> {
        if ambient != self.ambient {
            return Err(OrdersError::AmbientMismatch);
        }
        if shape != self.shape {
            return Err(OrdersError::ShapeMismatch);
        }
        Ok(())
    }
}

fn common_frame(elems: &[AmbientElement]) -> Result<(Ambient, GroupShape), OrdersError> {
    let first = elems
        .first()
        .ok_or(OrdersError::GeneratorCount { expected: 1, found: 0 })?;
    let frame = (first.ambient(), first.shape());
    if elems.iter().any(|e| (e.ambient(), e.shape()) != frame) {
        return Err(OrdersError::AmbientMismatch);
    }
    Ok(frame)
}
