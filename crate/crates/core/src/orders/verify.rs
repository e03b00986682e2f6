use rayon::prelude::*;
use serde::Serialize;

use crate::groupalg::AmbientElement;
use crate::localfield::{LocalScalar, Valuation};

use super::{OrderPresentation, OrdersError};

/// Witnesses kept per axiom; the full count is reported separately.
pub const WITNESS_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AxiomStatus {
    Pass,
    Fail,
    Skipped,
}

impl AxiomStatus {
    fn from_witnesses(w: &[Witness]) -> Self {
        if w.is_empty() {
            AxiomStatus::Pass
        } else {
            AxiomStatus::Fail
        }
    }
}

/// A coordinate outside R: which basis element(s) produced it, at which
/// coordinate, and its valuation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub axiom: &'static str,
    pub source: String,
    pub coordinate: String,
    pub value: LocalScalar,
    pub valuation: Valuation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub algebra_closed: AxiomStatus,
    pub comult_closed: AxiomStatus,
    pub counit_integral: AxiomStatus,
    pub antipode_closed: AxiomStatus,
    pub generically_full: AxiomStatus,
    /// Rank of the box monomials when they fail to span.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    pub witness_count: usize,
    pub witnesses: Vec<Witness>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        [
            self.algebra_closed,
            self.comult_closed,
            self.counit_integral,
            self.antipode_closed,
            self.generically_full,
        ]
        .iter()
        .all(|s| *s == AxiomStatus::Pass)
    }
}

fn witnesses_from(
    axiom: &'static str,
    source: String,
    coords: &[LocalScalar],
    name: impl Fn(usize) -> String,
) -> Vec<Witness> {
    coords
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_integral())
        .map(|(k, c)| Witness {
            axiom,
            source: source.clone(),
            coordinate: name(k),
            value: c.clone(),
            valuation: c.valuation(),
        })
        .collect()
}

/// Checks closure under product, comultiplication, counit and antipode on
/// the monomial basis, plus generic fullness.
pub fn verify_hopf_order(pres: &OrderPresentation) -> Result<VerificationReport, OrdersError> {
    let basis = match pres.basis() {
        Ok(b) => b,
        Err(OrdersError::Dependent { rank, .. }) => {
            return Ok(VerificationReport {
                algebra_closed: AxiomStatus::Skipped,
                comult_closed: AxiomStatus::Skipped,
                counit_integral: AxiomStatus::Skipped,
                antipode_closed: AxiomStatus::Skipped,
                generically_full: AxiomStatus::Fail,
                rank: Some(rank),
                witness_count: 0,
                witnesses: vec![],
            })
        }
        Err(e) => return Err(e),
    };
    let d = basis.elements.len();
    let label = |m: usize| basis.label(m);

    // unit first, then every unordered pair (both ambients are commutative)
    let one = AmbientElement::one(pres.ambient(), pres.shape());
    let mut algebra = witnesses_from("algebra", "1".into(), &pres.coordinates(&one)?, label);
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|a| (a..d).map(move |b| (a, b))).collect();
    let product_witnesses: Vec<Vec<Witness>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let prod = basis.elements[a].mul(&basis.elements[b]);
            let coords = pres.coordinates(&prod)?;
            Ok(witnesses_from(
                "algebra",
                format!("{} * {}", label(a), label(b)),
                &coords,
                label,
            ))
        })
        .collect::<Result<_, OrdersError>>()?;
    algebra.extend(product_witnesses.into_iter().flatten());

    let comult: Vec<Witness> = (0..d)
        .into_par_iter()
        .map(|m| {
            let c = pres.tensor_coordinates(&basis.elements[m].delta())?;
            let flat: Vec<LocalScalar> = (0..d).flat_map(|i| c.row(i).to_vec()).collect();
            Ok(witnesses_from(
                "comultiplication",
                format!("delta({})", label(m)),
                &flat,
                |k| format!("{} (x) {}", label(k / d), label(k % d)),
            ))
        })
        .collect::<Result<Vec<_>, OrdersError>>()?
        .into_iter()
        .flatten()
        .collect();

    let counit: Vec<Witness> = (0..d)
        .flat_map(|m| {
            let e = basis.elements[m].counit();
            witnesses_from("counit", format!("eps({})", label(m)), &[e], |_| "value".into())
        })
        .collect();

    let antipode: Vec<Witness> = (0..d)
        .into_par_iter()
        .map(|m| {
            let coords = pres.coordinates(&basis.elements[m].antipode())?;
            Ok(witnesses_from("antipode", format!("S({})", label(m)), &coords, label))
        })
        .collect::<Result<Vec<_>, OrdersError>>()?
        .into_iter()
        .flatten()
        .collect();

    let statuses = [&algebra, &comult, &counit, &antipode].map(|w| AxiomStatus::from_witnesses(w));
    let all: Vec<Witness> = [algebra, comult, counit, antipode].into_iter().flatten().collect();
    Ok(VerificationReport {
        algebra_closed: statuses[0],
        comult_closed: statuses[1],
        counit_integral: statuses[2],
        antipode_closed: statuses[3],
        generically_full: AxiomStatus::Pass,
        rank: None,
        witness_count: all.len(),
        witnesses: all.into_iter().take(WITNESS_LIMIT).collect(),
    })
}

/// Coordinates of `gen_k^p` (1-based `k`) on the monomial basis.
pub fn pth_power_witness(pres: &OrderPresentation, k: usize) -> Result<Vec<LocalScalar>, OrdersError> {
    let gens = pres.generators().ok_or(OrdersError::NotGeneratorForm)?;
    let g = gens.get(k.wrapping_sub(1)).ok_or(OrdersError::GeneratorCount {
        expected: gens.len(),
        found: k,
    })?;
    pres.coordinates(&g.pow(pres.shape().p()))
}
