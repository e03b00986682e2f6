use super::{invert_mod_p, AmbientElement, DualElement, GroupAlgError, GroupAlgebraElement, GroupShape};

/// Acts by the automorphism `g^a -> g^{Ma}` of C_p^n.
///
/// On the group algebra this permutes the group-element basis; on the dual
/// it is precomposition with the inverse automorphism. Both amount to
/// moving the coordinate at `s` to `Ms`.
pub fn apply_group_automorphism(matrix: &[Vec<i64>], x: &AmbientElement) -> Result<AmbientElement, GroupAlgError> {
    let shape = x.shape();
    let perm = permutation(shape, matrix)?;
    let mut out = x.coords().to_vec();
    for (s, c) in x.coords().iter().enumerate() {
        out[perm[s]] = c.clone();
    }
    Ok(match x {
        AmbientElement::Group(_) => AmbientElement::Group(GroupAlgebraElement::from_coeffs(shape, out)?),
        AmbientElement::Dual(_) => AmbientElement::Dual(DualElement::from_values(shape, out)?),
    })
}

/// `perm[s]` = index of `M s`.
fn permutation(shape: GroupShape, matrix: &[Vec<i64>]) -> Result<Vec<usize>, GroupAlgError> {
    let n = shape.rank();
    let p = shape.p() as i64;
    if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
        return Err(GroupAlgError::BadMatrix(n));
    }
    let reduced: Vec<Vec<u32>> = matrix
        .iter()
        .map(|row| row.iter().map(|&m| m.rem_euclid(p) as u32).collect())
        .collect();
    if invert_mod_p(&reduced, shape.p()).is_none() {
        return Err(GroupAlgError::SingularAutomorphism);
    }
    Ok((0..shape.dim())
        .map(|s| {
            let a = shape.exponent(s).0;
            let image: Vec<u32> = reduced
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&a)
                        .map(|(&m, &x)| m as i64 * x as i64)
                        .sum::<i64>()
                        .rem_euclid(p) as u32
                })
                .collect();
            shape.index_of(&image)
        })
        .collect())
}
