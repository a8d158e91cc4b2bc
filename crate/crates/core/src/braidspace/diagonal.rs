use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::{BraidError, DynkinDiagram, Subrack, YDModule};
use crate::exactfield::{Cyclotomic, RootOfUnity};
use crate::exactla::{simultaneous_diagonalize, LaError, Matrix, Vector};
use crate::permgroup::NormalForm;

/// The braided subspace `W = span{g_i v_r}` over an abelian subrack, with
/// `v_1..v_R` a common eigenbasis of all `ρ(γ_ij)`.
///
/// Row and column `a = i·R + r` of `q` belong to `g_i v_r`, and
/// `c(g_i v_r ⊗ g_j v_s) = q[a][b] g_j v_s ⊗ g_i v_r` for `b = j·R + s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalSubspace {
    pub subrack: Subrack,
    pub vectors: Vec<Vector>,
    pub q: Vec<Vec<RootOfUnity>>,
}

/// The `γ_ij` of a subrack, deduplicated, with their images under `ρ`.
struct GammaFamily {
    index: Vec<Vec<usize>>,
    distinct: Vec<NormalForm>,
    orders: Vec<u32>,
    mats: Vec<Matrix>,
}

impl GammaFamily {
    fn new(yd: &YDModule, t: &Subrack) -> Result<Self, BraidError> {
        let m = t.len();
        let mut seen: HashMap<NormalForm, usize> = HashMap::new();
        let mut distinct = Vec::new();
        let mut index = vec![vec![0; m]; m];
        for i in 0..m {
            for j in 0..m {
                let g = yd.gamma(&t.elements[i], &t.transporters[j])?;
                let next = distinct.len();
                let id = *seen.entry(g.clone()).or_insert(next);
                if id == next {
                    distinct.push(g);
                }
                index[i][j] = id;
            }
        }
        let orders = distinct.iter().map(|g| yd.element_order(g)).collect();
        let mats = if yd.rep().dim() == 1 {
            Vec::new()
        } else {
            distinct.iter().map(|g| yd.rho(g)).collect()
        };
        Ok(GammaFamily {
            index,
            distinct,
            orders,
            mats,
        })
    }

    fn scalar(&self) -> bool {
        self.mats.is_empty()
    }

    /// Some `(i, j)` with `γ_ij` equal to the given distinct member.
    fn pair_of(&self, id: usize) -> (usize, usize) {
        for (i, row) in self.index.iter().enumerate() {
            if let Some(j) = row.iter().position(|&x| x == id) {
                return (i, j);
            }
        }
        unreachable!("every distinct γ comes from a pair")
    }

    /// Distinct members used by pairs inside `keep`, ascending.
    fn used(&self, keep: &[usize]) -> Vec<usize> {
        let set: BTreeSet<usize> = keep
            .iter()
            .flat_map(|&i| keep.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.index[i][j])
            .collect();
        set.into_iter().collect()
    }

    /// A non-commuting pair of `γ_ab`, `γ_cd` with `a, b, c, d ∈ keep`.
    fn conflict(&self, keep: &[usize]) -> Option<((usize, usize), (usize, usize))> {
        if self.scalar() {
            return None;
        }
        let used = self.used(keep);
        for (x, &p) in used.iter().enumerate() {
            for &q in &used[x + 1..] {
                if !self.mats[p].commutes_with(&self.mats[q]) {
                    let first = self.pair_within(p, keep);
                    let second = self.pair_within(q, keep);
                    return Some((first, second));
                }
            }
        }
        None
    }

    fn pair_within(&self, id: usize, keep: &[usize]) -> (usize, usize) {
        for &i in keep {
            for &j in keep {
                if self.index[i][j] == id {
                    return (i, j);
                }
            }
        }
        self.pair_of(id)
    }
}

/// Builds `W` and its braiding matrix over `t`.
///
/// Fails with [`BraidError::NonSimultaneous`] when two of the operators
/// `ρ(γ_ij)` do not commute; see [`commuting_subfamilies`].
pub fn diagonal_subspace(yd: &YDModule, t: &Subrack) -> Result<DiagonalSubspace, BraidError> {
    let fam = GammaFamily::new(yd, t)?;
    let m = t.len();
    if fam.scalar() {
        let mut q = vec![vec![RootOfUnity::one(); m]; m];
        for (i, row) in q.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = yd.rho_scalar(&fam.distinct[fam.index[i][j]]).expect("one-dimensional");
            }
        }
        return Ok(DiagonalSubspace {
            subrack: t.clone(),
            vectors: vec![vec![Cyclotomic::one()]],
            q,
        });
    }
    let eig = simultaneous_diagonalize(&fam.mats, &fam.orders).map_err(|e| match e {
        LaError::NonCommuting { i, j } => BraidError::NonSimultaneous {
            first: fam.pair_of(i),
            second: fam.pair_of(j),
        },
        other => BraidError::La(other),
    })?;
    let r = eig.basis.len();
    let mut q = vec![vec![RootOfUnity::one(); m * r]; m * r];
    for i in 0..m {
        for a in 0..r {
            for j in 0..m {
                for s in 0..r {
                    q[i * r + a][j * r + s] = eig.table[fam.index[i][j]][s].reduced();
                }
            }
        }
    }
    Ok(DiagonalSubspace {
        subrack: t.clone(),
        vectors: eig.basis,
        q,
    })
}

/// Maximal sub-families of `t` (as position lists, sorted) on which every
/// `ρ(γ_ij)` commutes with every other. Explores at most `cap` branches.
pub fn commuting_subfamilies(yd: &YDModule, t: &Subrack, cap: usize) -> Result<Vec<Vec<usize>>, BraidError> {
    let fam = GammaFamily::new(yd, t)?;
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut visited: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut stack = vec![(0..t.len()).collect::<Vec<usize>>()];
    let mut steps = 0usize;
    while let Some(keep) = stack.pop() {
        if !visited.insert(keep.clone()) {
            continue;
        }
        steps += 1;
        if steps > cap {
            return Err(BraidError::CapExceeded {
                what: "commuting subfamily search",
                needed: steps as u128,
                cap: cap as u128,
            });
        }
        match fam.conflict(&keep) {
            None => {
                found.insert(keep);
            }
            Some(((a, b), (c, d))) => {
                let drop: BTreeSet<usize> = [a, b, c, d].into_iter().collect();
                for x in drop.into_iter().rev() {
                    stack.push(keep.iter().copied().filter(|&y| y != x).collect());
                }
            }
        }
    }
    let all: Vec<Vec<usize>> = found.into_iter().collect();
    let maximal = all
        .iter()
        .filter(|s| !all.iter().any(|o| o.len() > s.len() && s.iter().all(|x| o.contains(x))))
        .cloned()
        .collect();
    Ok(maximal)
}

impl DiagonalSubspace {
    /// `R`, the number of eigenvectors used per subrack element.
    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn dim(&self) -> usize {
        self.q.len()
    }

    pub fn entry(&self, i: usize, r: usize, j: usize, s: usize) -> RootOfUnity {
        let big_r = self.rank();
        self.q[i * big_r + r][j * big_r + s]
    }

    /// Vertex names `t<i>.v<r>`, 1-based.
    pub fn names(&self) -> Vec<String> {
        let r = self.rank();
        (0..self.dim())
            .map(|a| format!("t{}.v{}", a / r + 1, a % r + 1))
            .collect()
    }

    pub fn diagram(&self) -> DynkinDiagram {
        DynkinDiagram::from_q(&self.q, self.names())
    }

    /// The subspace spanned by `g_i v_r` for `i` in `elements` and `r` in
    /// `vectors`, both taken in the given order. Still of diagonal type.
    pub fn restrict(&self, elements: &[usize], vectors: &[usize]) -> DiagonalSubspace {
        let big_r = self.rank();
        let rows: Vec<usize> = elements
            .iter()
            .flat_map(|&i| vectors.iter().map(move |&r| i * big_r + r))
            .collect();
        let q = rows
            .iter()
            .map(|&a| rows.iter().map(|&b| self.q[a][b]).collect())
            .collect();
        DiagonalSubspace {
            subrack: self.subrack.select(elements, self.subrack.label.clone()),
            vectors: vectors.iter().map(|&r| self.vectors[r].clone()).collect(),
            q,
        }
    }

    /// Recomputes every `ρ(γ_ij)` and checks `v_s` is an eigenvector with the
    /// stored eigenvalue, which is what makes `c(W ⊗ W) = W ⊗ W`.
    pub fn verify_closed(&self, yd: &YDModule) -> Result<bool, BraidError> {
        let m = self.subrack.len();
        for i in 0..m {
            for j in 0..m {
                let g = yd.gamma(&self.subrack.elements[i], &self.subrack.transporters[j])?;
                let mat = yd.rho(&g);
                for (s, v) in self.vectors.iter().enumerate() {
                    let img = mat.mul_vec(v);
                    let lambda = self.entry(i, 0, j, s).to_cyclotomic();
                    let ok = img.iter().zip(v).all(|(x, y)| *x == &lambda * y);
                    if !ok {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}
