use serde::Serialize;

use crate::localfield::PrimeConfig;

use super::GroupAlgError;

/// The elementary abelian group C_p^n, with elements indexed by their
/// exponent tuples `(a_1, ..., a_n)`, `a_1` most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupShape {
    cfg: PrimeConfig,
    n: usize,
}

/// Largest rank accepted by [`GroupShape::new`].
pub const MAX_RANK: usize = 4;

impl GroupShape {
    pub fn new(cfg: PrimeConfig, n: usize) -> Result<Self, GroupAlgError> {
        if n == 0 || n > MAX_RANK {
            return Err(GroupAlgError::UnsupportedRank(n));
        }
        Ok(GroupShape { cfg, n })
    }

    pub fn cfg(&self) -> PrimeConfig {
        self.cfg
    }

    pub fn p(&self) -> u32 {
        self.cfg.p()
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `p^n`
    pub fn dim(&self) -> usize {
        (self.p() as usize).pow(self.n as u32)
    }

    pub fn index_of(&self, exps: &[u32]) -> usize {
        debug_assert_eq!(exps.len(), self.n);
        let p = self.p() as usize;
        exps.iter().fold(0, |acc, &e| acc * p + (e as usize % p))
    }

    pub fn exponent(&self, mut idx: usize) -> GroupExponent {
        let p = self.p() as usize;
        let mut exps = vec![0u32; self.n];
        for slot in exps.iter_mut().rev() {
            *slot = (idx % p) as u32;
            idx /= p;
        }
        GroupExponent(exps)
    }

    /// Index of the product `g^a g^b`.
    pub fn add_index(&self, a: usize, b: usize) -> usize {
        let p = self.p() as usize;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.n {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    /// Index of the inverse `g^{-a}`.
    pub fn neg_index(&self, a: usize) -> usize {
        let p = self.p() as usize;
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.n {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        out
    }

    /// Index of the standard generator `g_i` (1-based `i`).
    pub fn generator_index(&self, i: usize) -> usize {
        let mut exps = vec![0u32; self.n];
        exps[i - 1] = 1;
        self.index_of(&exps)
    }
}

/// Exponent tuple of a group element, each entry in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupExponent(pub Vec<u32>);

impl GroupExponent {
    pub fn parse(text: &str, shape: GroupShape) -> Result<Self, GroupAlgError> {
        let parts: Result<Vec<u32>, _> = text.split(',').map(|s| s.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|_| GroupAlgError::BadExponent(text.to_string()))?;
        if parts.len() != shape.rank() || parts.iter().any(|&a| a >= shape.p()) {
            return Err(GroupAlgError::BadExponent(text.to_string()));
        }
        Ok(GroupExponent(parts))
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// A standard unit tuple `e_i` returns `Some(i)` (1-based).
    pub fn unit_position(&self) -> Option<usize> {
        let nonzero: Vec<usize> = (0..self.0.len()).filter(|&k| self.0[k] != 0).collect();
        match nonzero.as_slice() {
            [k] if self.0[*k] == 1 => Some(k + 1),
            _ => None,
        }
    }
}

impl std::fmt::Display for GroupExponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trip_and_group_law() {
        let shape = GroupShape::new(PrimeConfig::new(3).unwrap(), 3).unwrap();
        assert_eq!(shape.dim(), 27);
        for i in 0..shape.dim() {
            assert_eq!(shape.index_of(&shape.exponent(i).0), i);
            assert_eq!(shape.add_index(i, shape.neg_index(i)), 0);
            for j in 0..shape.dim() {
                let a = shape.exponent(i).0;
                let b = shape.exponent(j).0;
                let sum: Vec<u32> = a.iter().zip(&b).map(|(x, y)| (x + y) % 3).collect();
                assert_eq!(shape.add_index(i, j), shape.index_of(&sum));
            }
        }
        assert_eq!(shape.generator_index(1), 9);
        assert_eq!(shape.generator_index(3), 1);
    }

    #[test]
    fn exponent_parsing() {
        let shape = GroupShape::new(PrimeConfig::new(2).unwrap(), 3).unwrap();
        assert_eq!(GroupExponent::parse("1,0,1", shape).unwrap().0, vec![1, 0, 1]);
        assert!(GroupExponent::parse("2,0,0", shape).is_err());
        assert!(GroupExponent::parse("1,0", shape).is_err());
        assert_eq!(GroupExponent(vec![0, 1, 0]).unit_position(), Some(2));
        assert_eq!(GroupExponent(vec![0, 1, 1]).unit_position(), None);
        assert!(GroupShape::new(PrimeConfig::new(2).unwrap(), 5).is_err());
    }
}
