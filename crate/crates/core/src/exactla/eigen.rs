use serde::Serialize;

use super::matrix::{normalize, Matrix, Vector};
use super::LaError;
use crate::exactfield::{Cyclotomic, RootOfUnity};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenSpace {
    pub eigenvalue: RootOfUnity,
    pub basis: Vec<Vector>,
}

/// Eigenspaces of an operator of known finite order, in candidate order
/// `ζ^0, ζ^1, …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenDecomposition {
    pub order: u32,
    pub spaces: Vec<EigenSpace>,
}

impl EigenDecomposition {
    pub fn dimension(&self) -> usize {
        self.spaces.iter().map(|s| s.basis.len()).sum()
    }

    /// Multiplicity of each eigenvalue, in decomposition order.
    pub fn multiplicities(&self) -> Vec<(RootOfUnity, usize)> {
        self.spaces.iter().map(|s| (s.eigenvalue, s.basis.len())).collect()
    }
}

/// A common eigenbasis: `table[i][r]` is the eigenvalue of family member `i`
/// on `basis[r]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimultaneousEigenbasis {
    pub basis: Vec<Vector>,
    pub table: Vec<Vec<RootOfUnity>>,
}

/// Eigenspaces of `m` restricted to the span of `within` (an invariant
/// subspace given by independent vectors).
fn split(m: &Matrix, ord: u32, within: &[Vector]) -> Result<Vec<EigenSpace>, LaError> {
    let n = m.rows();
    let b = Matrix::from_columns(n, within);
    let mb = m * &b;
    let mut out = Vec::new();
    let mut total = 0;
    for a in 0..ord {
        let lambda = RootOfUnity::new(ord, a as i64);
        let lb = b.scale(&lambda.to_cyclotomic());
        let coords = mb.sub(&lb).kernel();
        if coords.is_empty() {
            continue;
        }
        total += coords.len();
        let basis = coords
            .into_iter()
            .map(|c| {
                let mut v = b.mul_vec(&c);
                normalize(&mut v);
                v
            })
            .collect();
        out.push(EigenSpace {
            eigenvalue: lambda.reduced(),
            basis,
        });
        if total == within.len() {
            break;
        }
    }
    if total != within.len() {
        return Err(LaError::NotDiagonalizable);
    }
    Ok(out)
}

fn standard_basis(n: usize) -> Vec<Vector> {
    (0..n)
        .map(|i| {
            let mut v = vec![Cyclotomic::zero(); n];
            v[i] = Cyclotomic::one();
            v
        })
        .collect()
}

/// Eigenspaces of `m`, assuming `m^ord = I` (checked).
pub fn eigenspaces_finite_order(m: &Matrix, ord: u32) -> Result<EigenDecomposition, LaError> {
    if !m.is_square() {
        return Err(LaError::NotSquare);
    }
    if ord == 0 || !m.pow(ord).is_identity() {
        return Err(LaError::NotFiniteOrder { order: ord });
    }
    let spaces = split(m, ord, &standard_basis(m.rows()))?;
    Ok(EigenDecomposition { order: ord, spaces })
}

/// The eigenvalue of `m` on `v`, if `v` is an eigenvector.
pub fn eigenvalue_on(m: &Matrix, v: &[Cyclotomic]) -> Option<Cyclotomic> {
    let i = v.iter().position(|x| !x.is_zero())?;
    let mv = m.mul_vec(v);
    let lambda = mv[i].checked_div(&v[i]).ok()?;
    let ok = mv.iter().zip(v).all(|(a, b)| *a == &lambda * b);
    ok.then_some(lambda)
}

/// Common eigenbasis of a commuting family of finite-order operators, by
/// refining the eigenspaces of each member in turn.
pub fn simultaneous_diagonalize(family: &[Matrix], orders: &[u32]) -> Result<SimultaneousEigenbasis, LaError> {
    if family.len() != orders.len() {
        return Err(LaError::DimensionMismatch {
            left: (family.len(), 0),
            right: (orders.len(), 0),
        });
    }
    let Some(first) = family.first() else {
        return Ok(SimultaneousEigenbasis {
            basis: Vec::new(),
            table: Vec::new(),
        });
    };
    let n = first.rows();
    for (i, m) in family.iter().enumerate() {
        if m.rows() != n || m.cols() != n {
            return Err(LaError::NotSquare);
        }
        if orders[i] == 0 || !m.pow(orders[i]).is_identity() {
            return Err(LaError::NotFiniteOrder { order: orders[i] });
        }
    }
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            if !family[i].commutes_with(&family[j]) {
                return Err(LaError::NonCommuting { i, j });
            }
        }
    }
    let mut spaces = vec![standard_basis(n)];
    for (m, &ord) in family.iter().zip(orders) {
        let mut next = Vec::new();
        for s in &spaces {
            for e in split(m, ord, s)? {
                next.push(e.basis);
            }
        }
        spaces = next;
    }
    let basis: Vec<Vector> = spaces.into_iter().flatten().collect();
    let mut table = Vec::with_capacity(family.len());
    for m in family {
        let mut row = Vec::with_capacity(basis.len());
        for v in &basis {
            let lambda = eigenvalue_on(m, v)
                .and_then(|l| l.as_root_of_unity())
                .ok_or(LaError::NotDiagonalizable)?;
            row.push(lambda);
        }
        table.push(row);
    }
    Ok(SimultaneousEigenbasis { basis, table })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vector {
        v.iter().map(|&x| Cyclotomic::from_int(x)).collect()
    }

    #[test]
    fn swap_eigenspaces() {
        let swap = Matrix::from_ints(&[vec![0, 1], vec![1, 0]]);
        let d = eigenspaces_finite_order(&swap, 2).unwrap();
        assert_eq!(d.spaces.len(), 2);
        assert!(d.spaces[0].eigenvalue.is_one());
        assert_eq!(d.spaces[0].basis, vec![ints(&[1, 1])]);
        assert_eq!(d.spaces[1].eigenvalue, RootOfUnity::minus_one());
        assert_eq!(d.spaces[1].basis, vec![ints(&[1, -1])]);
    }

    #[test]
    fn wrong_order_rejected() {
        let swap = Matrix::from_ints(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(
            eigenspaces_finite_order(&swap, 3),
            Err(LaError::NotFiniteOrder { order: 3 })
        );
    }

    #[test]
    fn order_three_rotation() {
        // companion matrix of x^2 + x + 1
        let m = Matrix::from_ints(&[vec![0, -1], vec![1, -1]]);
        let d = eigenspaces_finite_order(&m, 3).unwrap();
        let vals: Vec<u32> = d.spaces.iter().map(|s| s.eigenvalue.a()).collect();
        assert_eq!(vals, vec![1, 2]);
        for s in &d.spaces {
            for v in &s.basis {
                assert_eq!(eigenvalue_on(&m, v), Some(s.eigenvalue.to_cyclotomic()));
            }
        }
    }

    #[test]
    fn identity_family() {
        let s = simultaneous_diagonalize(&[Matrix::identity(3)], &[1]).unwrap();
        assert_eq!(s.basis.len(), 3);
        assert!(s.table[0].iter().all(|x| x.is_one()));
    }

    #[test]
    fn non_commuting_pair_reported() {
        let a = Matrix::from_ints(&[vec![0, 1], vec![1, 0]]);
        let b = Matrix::from_ints(&[vec![1, 0], vec![0, -1]]);
        assert_eq!(
            simultaneous_diagonalize(&[a.clone(), a.clone(), b], &[2, 2, 2]),
            Err(LaError::NonCommuting { i: 0, j: 2 })
        );
    }

    #[test]
    fn refinement_splits_degenerate_space() {
        let a = Matrix::from_ints(&[vec![1, 0, 0], vec![0, -1, 0], vec![0, 0, -1]]);
        let b = Matrix::from_ints(&[vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]);
        let s = simultaneous_diagonalize(&[a.clone(), b.clone()], &[2, 2]).unwrap();
        assert_eq!(s.basis, vec![ints(&[1, 0, 0]), ints(&[0, 1, 1]), ints(&[0, 1, -1])]);
        let signs: Vec<Vec<u32>> = s
            .table
            .iter()
            .map(|row| row.iter().map(|x| x.order()).collect())
            .collect();
        assert_eq!(signs, vec![vec![1, 2, 2], vec![1, 1, 2]]);
    }
}
