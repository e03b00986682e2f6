use serde::{Deserialize, Serialize};

use crate::groupalg::{Ambient, ElementLiteral};
use crate::linalg::Matrix;
use crate::localfield::{scalar_parse, LocalScalar, PrimeConfig};

use super::{
    build_dual, build_primal, koch_order, DualFamilyParams, Family, OrderPresentation, OrdersError, ThetaMatrix,
};

/// Family parameters as they appear in an order file.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i1: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i2: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i3: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<String>,
}

impl ParamsFile {
    /// Only the fields a rank-`n` family reads.
    pub fn from_params(params: &DualFamilyParams, n: usize) -> Self {
        let s = |x: &LocalScalar| Some(x.to_string());
        ParamsFile {
            i1: Some(params.i1),
            i2: (n >= 2).then_some(params.i2),
            i3: (n >= 3).then_some(params.i3),
            mu: if n >= 2 { s(&params.mu) } else { None },
            alpha: if n >= 3 { s(&params.alpha) } else { None },
            beta: if n >= 3 { s(&params.beta) } else { None },
        }
    }

    /// Missing fields default to zero.
    pub fn to_params(&self, cfg: PrimeConfig) -> Result<DualFamilyParams, OrdersError> {
        let scalar = |x: &Option<String>| -> Result<LocalScalar, OrdersError> {
            match x {
                Some(text) => Ok(scalar_parse(text, cfg)?),
                None => Ok(LocalScalar::zero(cfg)),
            }
        };
        Ok(DualFamilyParams::new(
            [self.i1.unwrap_or(0), self.i2.unwrap_or(0), self.i3.unwrap_or(0)],
            scalar(&self.mu)?,
            scalar(&self.alpha)?,
            scalar(&self.beta)?,
        ))
    }
}

/// On-disk description of an order: a named family, a Koch matrix, or an
/// explicit list of generators or basis elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderFile {
    pub p: u32,
    pub n: usize,
    pub ambient: Ambient,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<ElementLiteral>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<ElementLiteral>>,
}

impl OrderFile {
    pub fn family(family: Family, cfg: PrimeConfig, n: usize, params: &DualFamilyParams) -> Self {
        OrderFile {
            p: cfg.p(),
            n,
            ambient: if family.is_primal() {
                Ambient::Group
            } else {
                Ambient::Dual
            },
            family: Some(family),
            params: Some(ParamsFile::from_params(params, n)),
            theta: None,
            generators: None,
            basis: None,
        }
    }

    pub fn koch(theta: &ThetaMatrix) -> Self {
        let m = theta.matrix();
        OrderFile {
            p: m.cfg().p(),
            n: m.rows(),
            ambient: Ambient::Dual,
            family: Some(Family::Koch),
            params: None,
            theta: Some(
                m.to_rows()
                    .iter()
                    .map(|r| r.iter().map(|x| x.to_string()).collect())
                    .collect(),
            ),
            generators: None,
            basis: None,
        }
    }

    /// Generator or basis form of an arbitrary presentation.
    pub fn explicit(pres: &OrderPresentation) -> Self {
        let lits = |xs: &[crate::groupalg::AmbientElement]| xs.iter().map(ElementLiteral::from_element).collect();
        let shape = pres.shape();
        OrderFile {
            p: shape.p(),
            n: shape.rank(),
            ambient: pres.ambient(),
            family: None,
            params: None,
            theta: None,
            generators: pres.generators().map(lits),
            basis: pres.explicit_basis().map(lits),
        }
    }

    pub fn parse(text: &str) -> Result<Self, OrdersError> {
        serde_json::from_str(text).map_err(|e| OrdersError::File(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("order files always serialize")
    }

    pub fn cfg(&self) -> Result<PrimeConfig, OrdersError> {
        Ok(PrimeConfig::new(self.p)?)
    }

    /// Family parameters, when the file names a family.
    pub fn family_params(&self) -> Result<Option<DualFamilyParams>, OrdersError> {
        match &self.params {
            Some(p) => Ok(Some(p.to_params(self.cfg()?)?)),
            None => Ok(None),
        }
    }

    pub fn to_presentation(&self) -> Result<OrderPresentation, OrdersError> {
        let cfg = self.cfg()?;
        let forms = [self.family.is_some(), self.generators.is_some(), self.basis.is_some()];
        if forms.iter().filter(|&&b| b).count() != 1 {
            return Err(OrdersError::File(
                "exactly one of `family`, `generators`, `basis` must be given".into(),
            ));
        }
        let pres = if let Some(family) = self.family {
            self.family_presentation(family, cfg)?
        } else {
            let lits = self.generators.as_ref().or(self.basis.as_ref()).expect("checked above");
            let elems = lits
                .iter()
                .map(|l| {
                    if (l.p, l.n, l.ambient) != (self.p, self.n, self.ambient) {
                        return Err(OrdersError::File(
                            "element literal does not match the file header".into(),
                        ));
                    }
                    Ok(l.to_element()?)
                })
                .collect::<Result<Vec<_>, OrdersError>>()?;
            if self.generators.is_some() {
                OrderPresentation::from_generators(elems)?
            } else {
                OrderPresentation::from_basis(elems)?
            }
        };
        if pres.ambient() != self.ambient || pres.shape().rank() != self.n {
            return Err(OrdersError::File(
                "family does not match the declared ambient or rank".into(),
            ));
        }
        Ok(pres)
    }

    fn family_presentation(&self, family: Family, cfg: PrimeConfig) -> Result<OrderPresentation, OrdersError> {
        if family == Family::Koch {
            let rows = self
                .theta
                .as_ref()
                .ok_or_else(|| OrdersError::File("koch family needs `theta`".into()))?;
            let theta = parse_theta(rows, cfg)?;
            return koch_order(&theta);
        }
        if let Some(rank) = family.rank() {
            if rank != self.n {
                return Err(OrdersError::File(format!(
                    "family {} has rank {rank}, file says n = {}",
                    family.name(),
                    self.n
                )));
            }
        }
        let params = self.family_params()?.unwrap_or_else(|| DualFamilyParams::zero(cfg));
        if family.is_primal() {
            build_primal(&params, self.n)
        } else {
            build_dual(&params, self.n)
        }
    }
}

pub fn parse_theta(rows: &[Vec<String>], cfg: PrimeConfig) -> Result<ThetaMatrix, OrdersError> {
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|x| scalar_parse(x, cfg)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    ThetaMatrix::new(Matrix::from_rows(cfg, parsed)?)
}
