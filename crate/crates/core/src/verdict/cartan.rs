use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exactfield::{Rational, RootOfUnity};

/// Generalized Cartan matrix read off a diagonal braiding:
/// `q_ab q_ba = q_aa^{a_ab}` with `-ord(q_aa) < a_ab ≤ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanData {
    pub a: Vec<Vec<i64>>,
    pub orders: Vec<u32>,
}

/// Why a braiding matrix is not of Cartan type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum NotCartan {
    /// `q_aa = 1`.
    FixedVertex(usize),
    /// No exponent in the window solves `q_aa^e = q_ab q_ba`.
    NoExponent(usize, usize),
}

/// Exponent search over `(-ord, 0]`, closest to zero first. The window holds
/// each power of `q_aa` exactly once, so the answer is unique when it exists.
pub fn cartan_type(q: &[Vec<RootOfUnity>]) -> Result<CartanData, NotCartan> {
    let m = q.len();
    let mut a = vec![vec![0i64; m]; m];
    let mut orders = Vec::with_capacity(m);
    for i in 0..m {
        let qii = q[i][i];
        if qii.is_one() {
            return Err(NotCartan::FixedVertex(i));
        }
        let ord = qii.order();
        orders.push(ord);
        a[i][i] = 2;
        for j in 0..m {
            if i == j {
                continue;
            }
            let p = q[i][j].mul(&q[j][i]);
            let e = (0..ord as i64)
                .map(|e| -e)
                .find(|&e| qii.pow(e) == p)
                .ok_or(NotCartan::NoExponent(i, j))?;
            a[i][j] = e;
        }
    }
    Ok(CartanData { a, orders })
}

/// Result of the finite-type test on a generalized Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteType {
    pub finite: bool,
    pub symmetrizable: bool,
    /// A minimal vertex set that is not of finite type, when `finite` is false.
    pub minimal: Option<Vec<usize>>,
    /// Best-effort name of that subdiagram, e.g. `A_5^(1)`.
    pub name: Option<String>,
}

/// Principal submatrix on `verts`.
fn sub(a: &[Vec<i64>], verts: &[usize]) -> Vec<Vec<i64>> {
    verts
        .iter()
        .map(|&i| verts.iter().map(|&j| a[i][j]).collect())
        .collect()
}

/// `d` with `d_i a_ij = d_j a_ji`, normalized to 1 on each component root.
fn symmetrizer(a: &[Vec<i64>]) -> Option<Vec<Rational>> {
    let m = a.len();
    let mut d: Vec<Option<Rational>> = vec![None; m];
    for root in 0..m {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(Rational::one());
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            let di = d[i].clone().expect("visited");
            for j in 0..m {
                if i == j || (a[i][j] == 0 && a[j][i] == 0) {
                    continue;
                }
                if a[i][j] == 0 || a[j][i] == 0 {
                    return None;
                }
                let dj = &di * Rational::from_integer(a[i][j].into()) / Rational::from_integer(a[j][i].into());
                match &d[j] {
                    Some(existing) if *existing != dj => return None,
                    Some(_) => {}
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                }
            }
        }
    }
    Some(d.into_iter().map(|x| x.expect("all visited")).collect())
}

/// Symmetrized form `(d_i a_ij)`, or `None` if `a` is not symmetrizable.
pub fn symmetrized(a: &[Vec<i64>]) -> Option<Vec<Vec<Rational>>> {
    let d = symmetrizer(a)?;
    Some(
        a.iter()
            .enumerate()
            .map(|(i, row)| row.iter().map(|&x| &d[i] * Rational::from_integer(x.into())).collect())
            .collect(),
    )
}

/// Pivots of symmetric Gaussian elimination; positive definite iff every
/// pivot is positive (equivalently all leading principal minors are).
fn positive_definite(mut s: Vec<Vec<Rational>>) -> bool {
    let m = s.len();
    for k in 0..m {
        if !s[k][k].is_positive() {
            return false;
        }
        for i in k + 1..m {
            if s[i][k].is_zero() {
                continue;
            }
            let f = &s[i][k] / &s[k][k];
            for j in k..m {
                let delta = &f * &s[k][j];
                s[i][j] -= delta;
            }
        }
    }
    true
}

fn determinant(mut s: Vec<Vec<Rational>>) -> Rational {
    let m = s.len();
    let mut det = Rational::one();
    for k in 0..m {
        let Some(p) = (k..m).find(|&i| !s[i][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            s.swap(p, k);
            det = -det;
        }
        det *= s[k][k].clone();
        for i in k + 1..m {
            let f = &s[i][k] / &s[k][k];
            for j in k..m {
                let delta = &f * &s[k][j];
                s[i][j] -= delta;
            }
        }
    }
    det
}

/// `Some(true)` for finite type, `Some(false)` for symmetrizable but not
/// positive definite, `None` when not symmetrizable (never finite).
fn finite_on(a: &[Vec<i64>], verts: &[usize]) -> Option<bool> {
    let s = symmetrized(&sub(a, verts))?;
    Some(positive_definite(s))
}

pub fn finite_type(c: &CartanData) -> FiniteType {
    let m = c.a.len();
    let all: Vec<usize> = (0..m).collect();
    let whole = finite_on(&c.a, &all);
    if whole == Some(true) {
        return FiniteType {
            finite: true,
            symmetrizable: true,
            minimal: None,
            name: None,
        };
    }
    // finite type passes to subdiagrams, so greedy deletion reaches a
    // minimal non-finite set
    let mut keep = all;
    let mut v = 0;
    while v < keep.len() {
        let trial: Vec<usize> = keep.iter().copied().filter(|&x| x != keep[v]).collect();
        if !trial.is_empty() && finite_on(&c.a, &trial) != Some(true) {
            keep = trial;
        } else {
            v += 1;
        }
    }
    let name = name_minimal(&sub(&c.a, &keep));
    FiniteType {
        finite: false,
        symmetrizable: whole.is_some(),
        minimal: Some(keep),
        name: Some(name),
    }
}

/// Names a minimal non-finite generalized Cartan matrix. Simply-laced affine
/// diagrams get their usual names; other shapes are reported generically.
pub fn name_minimal(a: &[Vec<i64>]) -> String {
    let m = a.len();
    let Some(s) = symmetrized(a) else {
        return "non-symmetrizable".into();
    };
    if !determinant(s).is_zero() {
        return "indefinite".into();
    }
    if m == 2 {
        return if a[0][1] * a[1][0] == 4 && a[0][1] == a[1][0] {
            "A_1^(1)".into()
        } else {
            "affine rank 2".into()
        };
    }
    let simply_laced = (0..m).all(|i| (0..m).all(|j| i == j || a[i][j] == 0 || a[i][j] == -1));
    if !simply_laced {
        return format!("affine rank {m}, not simply laced");
    }
    let adj: Vec<Vec<usize>> = (0..m)
        .map(|i| (0..m).filter(|&j| j != i && a[i][j] != 0).collect())
        .collect();
    let deg: Vec<usize> = adj.iter().map(|x| x.len()).collect();
    let edges: usize = deg.iter().sum::<usize>() / 2;
    let l = m - 1;
    if edges == m && deg.iter().all(|&d| d == 2) {
        return format!("A_{l}^(1)");
    }
    if edges + 1 == m {
        let branch: Vec<usize> = (0..m).filter(|&i| deg[i] >= 3).collect();
        if branch.len() == 1 && deg[branch[0]] == 4 {
            return "D_4^(1)".into();
        }
        if branch.len() == 2 {
            return format!("D_{l}^(1)");
        }
        if branch.len() == 1 && deg[branch[0]] == 3 {
            let c = branch[0];
            let mut arms: Vec<usize> = adj[c]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (c, start, 1);
                    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [2, 2, 2] => return "E_6^(1)".into(),
                [1, 3, 3] => return "E_7^(1)".into(),
                [1, 2, 5] => return "E_8^(1)".into(),
                _ => {}
            }
        }
    }
    format!("affine rank {m}")
}
