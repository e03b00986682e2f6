use serde::{Deserialize, Serialize};

use crate::groupalg::{xi_index, AmbientElement, DualElement, GroupAlgebraElement, GroupShape};
use crate::linalg::{degree_cap_from_env, Matrix};
use crate::localfield::{LocalScalar, PrimeConfig, Valuation};

use super::{DualFamilyParams, OrderPresentation, OrdersError};

/// The named constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Tate,
    E2,
    E3,
    Dual1,
    Dual2,
    Dual3,
    Koch,
}

impl Family {
    pub fn parse(text: &str) -> Option<Self> {
        serde_json::from_value(serde_json::Value::String(text.to_string())).ok()
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Tate => "tate",
            Family::E2 => "e2",
            Family::E3 => "e3",
            Family::Dual1 => "dual1",
            Family::Dual2 => "dual2",
            Family::Dual3 => "dual3",
            Family::Koch => "koch",
        }
    }

    /// Fixed rank of the family; `None` for Koch, whose rank follows theta.
    pub fn rank(self) -> Option<usize> {
        match self {
            Family::Tate | Family::Dual1 => Some(1),
            Family::E2 | Family::Dual2 => Some(2),
            Family::E3 | Family::Dual3 => Some(3),
            Family::Koch => None,
        }
    }

    pub fn is_primal(self) -> bool {
        matches!(self, Family::Tate | Family::E2 | Family::E3)
    }
}

/// Invertible lower-triangular matrix over K.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaMatrix(Matrix);

impl ThetaMatrix {
    pub fn new(m: Matrix) -> Result<Self, OrdersError> {
        let n = m.rows();
        if n == 0 || m.cols() != n {
            return Err(OrdersError::BadTheta("theta must be square and nonempty".into()));
        }
        for i in 0..n {
            if m.get(i, i).is_zero() {
                return Err(OrdersError::BadTheta(format!("diagonal entry {} is zero", i + 1)));
            }
            for j in i + 1..n {
                if !m.get(i, j).is_zero() {
                    return Err(OrdersError::BadTheta(format!(
                        "entry ({}, {}) above the diagonal is nonzero",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(ThetaMatrix(m))
    }

    pub fn identity(cfg: PrimeConfig, n: usize) -> Self {
        ThetaMatrix(Matrix::identity(cfg, n))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.rows()
    }
}

/// `A = Theta^{-1} Theta^{(p)}` and whether it has entries in R.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KochMatrix {
    pub a: Matrix,
    /// First entry (row, column, valuation), 1-based, with negative valuation.
    pub offending: Option<(usize, usize, Valuation)>,
}

impl KochMatrix {
    pub fn is_integral(&self) -> bool {
        self.offending.is_none()
    }
}

pub fn koch_matrix(theta: &ThetaMatrix) -> Result<KochMatrix, OrdersError> {
    let m = theta.matrix();
    let n = m.rows();
    let mut frob = m.clone();
    for i in 0..n {
        for j in 0..n {
            frob.set(i, j, m.get(i, j).frobenius());
        }
    }
    let a = m.inverse(degree_cap_from_env())?.mul(&frob)?;
    let offending = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| !a.get(i, j).is_integral())
        .map(|(i, j)| (i + 1, j + 1, a.get(i, j).valuation()));
    Ok(KochMatrix { a, offending })
}

/// The generators `u_i = sum_j theta_{j,i} xi_j`, i.e. the columns of theta.
pub fn koch_generators(theta: &ThetaMatrix) -> Result<Vec<DualElement>, OrdersError> {
    let m = theta.matrix();
    let n = m.rows();
    let shape = GroupShape::new(m.cfg(), n)?;
    let xis: Vec<DualElement> = (1..=n).map(|i| xi_index(shape, i)).collect::<Result<_, _>>()?;
    Ok((0..n)
        .map(|i| {
            (0..n).fold(DualElement::zero(shape), |acc, j| {
                let c = m.get(j, i);
                if c.is_zero() {
                    acc
                } else {
                    acc.add(&xis[j].scale(c))
                }
            })
        })
        .collect())
}

/// Refuses to build when `A` is not integral.
pub fn koch_order(theta: &ThetaMatrix) -> Result<OrderPresentation, OrdersError> {
    let km = koch_matrix(theta)?;
    if let Some((row, col, valuation)) = km.offending {
        return Err(OrdersError::KochNotIntegral { row, col, valuation });
    }
    let gens = koch_generators(theta)?;
    OrderPresentation::from_generators(gens.into_iter().map(AmbientElement::Dual).collect())
}

/// `u_i^p = sum_j a_{j,i} u_j` for every `i`.
pub fn koch_relation_holds(theta: &ThetaMatrix) -> Result<bool, OrdersError> {
    let a = koch_matrix(theta)?.a;
    let gens = koch_generators(theta)?;
    let p = theta.matrix().cfg().p();
    let shape = gens[0].shape();
    Ok((0..gens.len()).all(|i| {
        let rhs = (0..gens.len()).fold(DualElement::zero(shape), |acc, j| acc.add(&gens[j].scale(a.get(j, i))));
        gens[i].pow(p) == rhs
    }))
}

fn rank_shape(cfg: PrimeConfig, n: usize) -> Result<GroupShape, OrdersError> {
    if !(1..=3).contains(&n) {
        return Err(OrdersError::BadFamily(format!(
            "families are defined for n = 1, 2, 3, not {n}"
        )));
    }
    Ok(GroupShape::new(cfg, n)?)
}

/// The dual family: `t^{i1}(xi_1 - mu xi_2 - alpha xi_3)`,
/// `t^{i2}(xi_2 - beta xi_3)`, `t^{i3} xi_3`, truncated to rank `n`.
pub fn build_dual(params: &DualFamilyParams, n: usize) -> Result<OrderPresentation, OrdersError> {
    let cfg = params.cfg();
    let shape = rank_shape(cfg, n)?;
    let xis: Vec<DualElement> = (1..=n).map(|i| xi_index(shape, i)).collect::<Result<_, _>>()?;
    let tp = |k: i64| LocalScalar::t_pow(k, cfg);
    let mut gens = Vec::with_capacity(n);
    let mut first = xis[0].clone();
    if n >= 2 {
        first = first.sub(&xis[1].scale(&params.mu));
    }
    if n >= 3 {
        first = first.sub(&xis[2].scale(&params.alpha));
    }
    gens.push(first.scale(&tp(params.i1)));
    if n >= 2 {
        let mut second = xis[1].clone();
        if n >= 3 {
            second = second.sub(&xis[2].scale(&params.beta));
        }
        gens.push(second.scale(&tp(params.i2)));
    }
    if n >= 3 {
        gens.push(xis[2].scale(&tp(params.i3)));
    }
    OrderPresentation::from_generators(gens.into_iter().map(AmbientElement::Dual).collect())
}

/// The primal family: `(g_1 - 1)/t^{i1}`, `(g_2 g_1^[mu] - 1)/t^{i2}`,
/// `(g_3 g_1^[alpha] (g_2 g_1^[mu])^[beta] - 1)/t^{i3}`, truncated to rank `n`.
pub fn build_primal(params: &DualFamilyParams, n: usize) -> Result<OrderPresentation, OrdersError> {
    let cfg = params.cfg();
    let shape = rank_shape(cfg, n)?;
    let one = GroupAlgebraElement::one(shape);
    let g: Vec<GroupAlgebraElement> = (1..=n).map(|i| GroupAlgebraElement::generator(shape, i)).collect();
    let tp = |k: i64| LocalScalar::t_pow(-k, cfg);
    let mut gens = vec![g[0].sub(&one).scale(&tp(params.i1))];
    if n >= 2 {
        let twisted = g[1].mul(&g[0].trunc_exp(&params.mu)?);
        gens.push(twisted.sub(&one).scale(&tp(params.i2)));
        if n >= 3 {
            let unit = g[0].trunc_exp(&params.alpha)?.mul(&twisted.trunc_exp(&params.beta)?);
            gens.push(g[2].mul(&unit).sub(&one).scale(&tp(params.i3)));
        }
    }
    OrderPresentation::from_generators(gens.into_iter().map(AmbientElement::Group).collect())
}
