use crate::groupalg::{Ambient, AmbientElement};
use crate::linalg::Matrix;
use crate::localfield::{LocalScalar, Valuation};

use super::{OrderPresentation, OrdersError};

/// `a` and `b` contain each other's bases.
pub fn orders_equal(a: &OrderPresentation, b: &OrderPresentation) -> Result<bool, OrdersError> {
    if a.ambient() != b.ambient() {
        return Err(OrdersError::AmbientMismatch);
    }
    if a.shape() != b.shape() {
        return Err(OrdersError::ShapeMismatch);
    }
    for (x, y) in [(a, b), (b, a)] {
        for m in &x.basis()?.elements {
            if !y.contains(m)?.inside {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The R-linear dual: the basis `f_m` of the opposite ambient with
/// `<f_m, b_m'> = delta`, returned as an explicit-basis presentation.
pub fn dualize(pres: &OrderPresentation) -> Result<OrderPresentation, OrdersError> {
    let basis = pres.basis()?;
    let shape = pres.shape();
    // pairing is the dot product of standard coordinates, so the dual basis
    // is given by the rows of the inverse basis matrix
    let elems = (0..basis.inverse.rows())
        .map(|m| AmbientElement::from_coords(pres.ambient().opposite(), shape, basis.inverse.row(m).to_vec()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(OrderPresentation::from_basis(elems)?.with_degree_cap(pres.degree_cap()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMatrix {
    /// Rows follow the dual basis, columns the group basis.
    pub matrix: Matrix,
    pub integral: bool,
    pub det_valuation: Valuation,
}

impl PairingMatrix {
    pub fn is_unimodular(&self) -> bool {
        self.integral && self.det_valuation == 0
    }
}

pub fn pairing_matrix(dual: &OrderPresentation, group: &OrderPresentation) -> Result<PairingMatrix, OrdersError> {
    if dual.ambient() != Ambient::Dual || group.ambient() != Ambient::Group {
        return Err(OrdersError::AmbientMismatch);
    }
    if dual.shape() != group.shape() {
        return Err(OrdersError::ShapeMismatch);
    }
    let (db, gb) = (dual.basis()?, group.basis()?);
    // P = D^T G with columns of D, G the ambient coordinates
    let matrix = db.matrix.transpose().mul(&gb.matrix)?;
    let det = matrix.determinant(dual.degree_cap())?;
    Ok(PairingMatrix {
        integral: matrix.is_integral(),
        det_valuation: det.valuation(),
        matrix,
    })
}

/// Trace of multiplication by `x` on the ambient algebra. On the group
/// basis `x g^s` has `g^s`-coefficient `x(1)`; on point masses `f delta_s`
/// has `delta_s`-coefficient `f(s)`.
pub fn regular_trace(x: &AmbientElement) -> LocalScalar {
    let shape = x.shape();
    match x {
        AmbientElement::Group(g) => g.coeff(0) * &LocalScalar::from_int(shape.dim() as i64, shape.cfg()),
        AmbientElement::Dual(f) => f
            .values()
            .iter()
            .fold(LocalScalar::zero(shape.cfg()), |acc, v| &acc + v),
    }
}

/// The trace form `T[m][m'] = Tr(mult by b_m b_m')` on the basis.
pub fn trace_form(pres: &OrderPresentation) -> Result<Matrix, OrdersError> {
    let basis = pres.basis()?;
    let d = basis.elements.len();
    let mut t = Matrix::zeros(pres.shape().cfg(), d, d);
    for a in 0..d {
        for b in a..d {
            let tr = regular_trace(&basis.elements[a].mul(&basis.elements[b]));
            t.set(b, a, tr.clone());
            t.set(a, b, tr);
        }
    }
    Ok(t)
}

/// `v(det T)` for the trace form. In the group algebra the trace form
/// vanishes identically in characteristic p, which is reported as an error.
pub fn discriminant_valuation(pres: &OrderPresentation) -> Result<i64, OrdersError> {
    let det = trace_form(pres)?.determinant(pres.degree_cap())?;
    det.valuation().finite().ok_or(OrdersError::DegenerateTraceForm)
}
