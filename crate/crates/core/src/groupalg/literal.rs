use serde::{Deserialize, Serialize};

use crate::localfield::{scalar_parse, LocalScalar, PrimeConfig};

use super::{Ambient, AmbientElement, GroupAlgError, GroupExponent, GroupShape};

/// JSON form of an element: sparse `(exponent, scalar)` pairs.
///
/// ```json
/// {"ambient":"group","p":2,"n":2,"coeffs":[["0,0","1"],["1,0","1/t"]]}
/// ```
/// Repeated exponents are summed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementLiteral {
    pub ambient: Ambient,
    pub p: u32,
    pub n: usize,
    pub coeffs: Vec<(String, String)>,
}

impl ElementLiteral {
    pub fn from_element(x: &AmbientElement) -> Self {
        let shape = x.shape();
        ElementLiteral {
            ambient: x.ambient(),
            p: shape.p(),
            n: shape.rank(),
            coeffs: x
                .coords()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (shape.exponent(i).to_string(), c.to_string()))
                .collect(),
        }
    }

    pub fn to_element(&self) -> Result<AmbientElement, GroupAlgError> {
        let cfg = PrimeConfig::new(self.p)?;
        let shape = GroupShape::new(cfg, self.n)?;
        let mut coords = vec![LocalScalar::zero(cfg); shape.dim()];
        for (exp, scalar) in &self.coeffs {
            let idx = shape.index_of(&GroupExponent::parse(exp, shape)?.0);
            coords[idx] = &coords[idx] + &scalar_parse(scalar, cfg)?;
        }
        AmbientElement::from_coords(self.ambient, shape, coords)
    }

    pub fn parse_json(text: &str) -> Result<AmbientElement, GroupAlgError> {
        let lit: ElementLiteral = serde_json::from_str(text).map_err(|e| GroupAlgError::Literal(e.to_string()))?;
        lit.to_element()
    }
}
