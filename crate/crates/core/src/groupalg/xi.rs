//! The xi-functionals, defined by their pairings against the
//! `(g_1 - 1)^{j_1} ... (g_n - 1)^{j_n}` basis of the group algebra.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::localfield::{LocalScalar, PrimeConfig};

use super::{DualElement, GroupAlgError, GroupExponent, GroupShape};

/// Row-major square matrix over F_p.
pub(crate) type FpMatrix = Vec<Vec<u32>>;

/// Gauss-Jordan inverse over F_p; `None` when singular.
pub(crate) fn invert_mod_p(m: &FpMatrix, p: u32) -> Option<FpMatrix> {
    let n = m.len();
    let p64 = p as u64;
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<u64> = row.iter().map(|&x| (x % p) as u64).collect();
            r.extend((0..n).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, pivot);
        let inv = mod_inverse(a[col][col], p64);
        for x in a[col].iter_mut() {
            *x = *x * inv % p64;
        }
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let factor = a[r][col];
                let (pivot_row, row) = if r < col {
                    let (lo, hi) = a.split_at_mut(col);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = a.split_at_mut(r);
                    (&lo[col], &mut hi[0])
                };
                for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                    *x = (*x + (p64 - factor) * y) % p64;
                }
            }
        }
    }
    Some(
        a.into_iter()
            .map(|row| row[n..].iter().map(|&x| x as u32).collect())
            .collect(),
    )
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    (1..p).find(|b| a * b % p == 1).expect("nonzero residue")
}

fn binom(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// `B[j][s]` = coefficient of `g^s` in `prod_k (g_k - 1)^{j_k}`, mod p.
pub fn falling_basis_matrix(shape: GroupShape) -> FpMatrix {
    let p = shape.p();
    let d = shape.dim();
    let mut b = vec![vec![0u32; d]; d];
    for (j, row) in b.iter_mut().enumerate() {
        let je = shape.exponent(j).0;
        for (s, entry) in row.iter_mut().enumerate() {
            let se = shape.exponent(s).0;
            let mut c: i64 = 1;
            for k in 0..je.len() {
                if se[k] > je[k] {
                    c = 0;
                    break;
                }
                let sign = if (je[k] - se[k]).is_multiple_of(2) { 1 } else { -1 };
                c = c * sign * (binom(je[k], se[k]) % p as u64) as i64 % p as i64;
            }
            *entry = c.rem_euclid(p as i64) as u32;
        }
    }
    b
}

type Cache = RwLock<HashMap<(u32, usize), Arc<FpMatrix>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Inverse of [`falling_basis_matrix`], computed once per `(p, n)`.
pub fn falling_basis_inverse(shape: GroupShape) -> Arc<FpMatrix> {
    let key = (shape.p(), shape.rank());
    if let Some(hit) = cache().read().unwrap().get(&key) {
        return hit.clone();
    }
    let inv =
        invert_mod_p(&falling_basis_matrix(shape), shape.p()).expect("the (g - 1)-monomial basis is always invertible");
    let inv = Arc::new(inv);
    // a concurrent writer may have won; both results are identical
    cache().write().unwrap().entry(key).or_insert(inv).clone()
}

/// The functional pairing to 1 against `(g - 1)^j` and 0 against every
/// other `(g - 1)`-monomial.
pub fn falling_dual(shape: GroupShape, j: &GroupExponent) -> DualElement {
    let inv = falling_basis_inverse(shape);
    let col = shape.index_of(&j.0);
    let cfg: PrimeConfig = shape.cfg();
    let values = (0..shape.dim())
        .map(|s| LocalScalar::from_int(inv[s][col] as i64, cfg))
        .collect();
    DualElement::from_values(shape, values).expect("dimension matches")
}

/// `xi_{e_i}` for a standard unit tuple `e_i`.
pub fn xi(shape: GroupShape, e: &GroupExponent) -> Result<DualElement, GroupAlgError> {
    if e.0.len() != shape.rank() || e.unit_position().is_none() {
        return Err(GroupAlgError::NotUnitTuple(e.to_string()));
    }
    Ok(falling_dual(shape, e))
}

/// `xi_i` by 1-based position.
pub fn xi_index(shape: GroupShape, i: usize) -> Result<DualElement, GroupAlgError> {
    if i == 0 || i > shape.rank() {
        return Err(GroupAlgError::NotUnitTuple(format!("position {i}")));
    }
    let mut e = vec![0; shape.rank()];
    e[i - 1] = 1;
    xi(shape, &GroupExponent(e))
}
