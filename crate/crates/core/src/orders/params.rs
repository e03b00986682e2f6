use serde::Serialize;

use crate::localfield::{LocalScalar, PrimeConfig, Valuation};

/// Parameters of the dual and primal families. Ranks below 3 ignore the
/// trailing fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFamilyParams {
    pub i1: i64,
    pub i2: i64,
    pub i3: i64,
    pub mu: LocalScalar,
    pub alpha: LocalScalar,
    pub beta: LocalScalar,
}

impl DualFamilyParams {
    /// All exponents and scalars zero: the maximal order.
    pub fn zero(cfg: PrimeConfig) -> Self {
        DualFamilyParams {
            i1: 0,
            i2: 0,
            i3: 0,
            mu: LocalScalar::zero(cfg),
            alpha: LocalScalar::zero(cfg),
            beta: LocalScalar::zero(cfg),
        }
    }

    pub fn new(i: [i64; 3], mu: LocalScalar, alpha: LocalScalar, beta: LocalScalar) -> Self {
        DualFamilyParams {
            i1: i[0],
            i2: i[1],
            i3: i[2],
            mu,
            alpha,
            beta,
        }
    }

    pub fn cfg(&self) -> PrimeConfig {
        self.mu.config()
    }

    pub fn exponents(&self, n: usize) -> Vec<i64> {
        [self.i1, self.i2, self.i3][..n.min(3)].to_vec()
    }
}

/// One inequality `v(lhs) >= bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub name: &'static str,
    pub valuation: Valuation,
    pub bound: i64,
    pub holds: bool,
}

impl ConditionCheck {
    fn new(name: &'static str, valuation: Valuation, bound: i64) -> Self {
        ConditionCheck {
            name,
            valuation,
            bound,
            holds: valuation.at_least(bound),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub nonnegative: bool,
    /// The Artin-Schreier inequalities that make the dual family an order.
    pub main: Vec<ConditionCheck>,
    /// `v(mu) >= i3 - i1` and `i2 >= i3`, used by the rank-3 primal family.
    pub mild: Vec<ConditionCheck>,
}

impl ConditionReport {
    pub fn main_holds(&self) -> bool {
        self.nonnegative && self.main.iter().all(|c| c.holds)
    }

    pub fn mild_holds(&self) -> bool {
        self.mild.iter().all(|c| c.holds)
    }

    pub fn all_hold(&self) -> bool {
        self.main_holds() && self.mild_holds()
    }

    /// Bits, low to high: nonnegative, then each main check, then each mild one.
    pub fn bitmask(&self) -> u32 {
        std::iter::once(self.nonnegative)
            .chain(self.main.iter().map(|c| c.holds))
            .chain(self.mild.iter().map(|c| c.holds))
            .enumerate()
            .fold(0, |acc, (k, b)| acc | (u32::from(b) << k))
    }
}

pub fn check_conditions(params: &DualFamilyParams, n: usize) -> ConditionReport {
    let p = params.cfg().p() as i64;
    let DualFamilyParams {
        i1,
        i2,
        i3,
        mu,
        alpha,
        beta,
    } = params;
    let nonnegative = params.exponents(n).iter().all(|&i| i >= 0);
    let mut main = Vec::new();
    let mut mild = Vec::new();
    if n >= 2 {
        main.push(ConditionCheck::new(
            "v(wp(mu)) >= i2 - p*i1",
            mu.wp().valuation(),
            i2 - p * i1,
        ));
    }
    if n >= 3 {
        let mixed = &alpha.wp() + &(&mu.wp() * beta);
        main.push(ConditionCheck::new(
            "v(wp(alpha) + wp(mu)*beta) >= i3 - p*i1",
            mixed.valuation(),
            i3 - p * i1,
        ));
        main.push(ConditionCheck::new(
            "v(wp(beta)) >= i3 - p*i2",
            beta.wp().valuation(),
            i3 - p * i2,
        ));
        mild.push(ConditionCheck::new("v(mu) >= i3 - i1", mu.valuation(), i3 - i1));
        mild.push(ConditionCheck::new("i2 >= i3", Valuation::Finite(*i2), *i3));
    }
    ConditionReport {
        nonnegative,
        main,
        mild,
    }
}

/// Whether `(alpha, beta)` and `(alpha', beta')` define the same extension
/// class: some `m, c` in F_p have `v(alpha - alpha' - m*mu - c) >= i3 - i1`
/// and `v(beta - beta' + m) >= i3 - i2`.
pub fn params_equivalent(
    a: (&LocalScalar, &LocalScalar),
    b: (&LocalScalar, &LocalScalar),
    mu: &LocalScalar,
    i: [i64; 3],
) -> bool {
    let cfg = mu.config();
    let p = cfg.p() as i64;
    let da = a.0 - b.0;
    let db = a.1 - b.1;
    (0..p).any(|m| {
        let mm = LocalScalar::from_int(m, cfg);
        if !(&db + &mm).valuation().at_least(i[2] - i[1]) {
            return false;
        }
        let shifted = &da - &(&mm * mu);
        (0..p).any(|c| {
            (&shifted - &LocalScalar::from_int(c, cfg))
                .valuation()
                .at_least(i[2] - i[0])
        })
    })
}
