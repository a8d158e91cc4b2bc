use rayon::prelude::*;
use serde::Serialize;

use crate::braidspace::{
    diagonal_subspace, neighborhood_orbits, BraidError, CommutingGraph, DiagonalSubspace, Subrack, YDModule,
};
use crate::exactfield::RootOfUnity;
use crate::permgroup::Permutation;

/// Outcome of checking one commuting pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairCheck {
    Negative,
    /// The pair's diagonal subspace violates negativity.
    Violation(DiagonalSubspace),
    /// No common eigenbasis for the pair's operators.
    NonSimultaneous(String),
}

/// Summary of a completed negativity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NegativeCertificate {
    /// Pairs actually examined.
    pub pairs_checked: usize,
    /// Commuting pairs `(π, t)` those stand for.
    pub pairs_covered: usize,
    pub reduced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NegativityResult {
    Negative(NegativeCertificate),
    Violation {
        pair: (String, String),
        subspace: DiagonalSubspace,
    },
    NonSimultaneous {
        pair: (String, String),
        detail: String,
    },
}

fn is_negative(w: &DiagonalSubspace) -> bool {
    let m1 = RootOfUnity::minus_one();
    let d = w.dim();
    (0..d).all(|a| w.q[a][a] == m1 && (a + 1..d).all(|b| w.q[a][b].mul(&w.q[b][a]).is_one()))
}

/// Negativity of the two-element subrack `{s, t}`, or of `{s}` when equal.
pub fn check_pair(
    yd: &YDModule,
    s: (&Permutation, &Permutation),
    t: (&Permutation, &Permutation),
) -> Result<PairCheck, BraidError> {
    let pair = if s.0 == t.0 {
        Subrack {
            label: "pair".into(),
            elements: vec![s.0.clone()],
            transporters: vec![s.1.clone()],
        }
    } else {
        Subrack {
            label: "pair".into(),
            elements: vec![s.0.clone(), t.0.clone()],
            transporters: vec![s.1.clone(), t.1.clone()],
        }
    };
    match diagonal_subspace(yd, &pair) {
        Ok(w) if is_negative(&w) => Ok(PairCheck::Negative),
        Ok(w) => Ok(PairCheck::Violation(w)),
        Err(e @ BraidError::NonSimultaneous { .. }) => Ok(PairCheck::NonSimultaneous(e.to_string())),
        Err(e) => Err(e),
    }
}

fn fold(results: Vec<(Permutation, Permutation, usize, PairCheck)>, reduced: bool) -> NegativityResult {
    let mut covered = 0;
    let checked = results.len();
    for (s, t, weight, r) in results {
        match r {
            PairCheck::Negative => covered += weight,
            PairCheck::Violation(w) => {
                return NegativityResult::Violation {
                    pair: (s.to_string(), t.to_string()),
                    subspace: w,
                }
            }
            PairCheck::NonSimultaneous(detail) => {
                return NegativityResult::NonSimultaneous {
                    pair: (s.to_string(), t.to_string()),
                    detail,
                }
            }
        }
    }
    NegativityResult::Negative(NegativeCertificate {
        pairs_checked: checked,
        pairs_covered: covered,
        reduced,
    })
}

/// Checks every pair `(π, t)` with `t` commuting with `π`. Every commuting
/// pair of the class is conjugate to one of these, and conjugation preserves
/// the braiding, so this covers the whole class. With `reduce`, only one `t`
/// per centralizer orbit is checked.
pub fn negativity_check(yd: &YDModule, reduce: bool) -> Result<NegativityResult, BraidError> {
    let pi = yd.basepoint().clone();
    let id = Permutation::identity(pi.degree());
    let mut targets: Vec<(Permutation, usize)> = vec![(pi.clone(), 1)];
    if reduce {
        targets.extend(neighborhood_orbits(yd)?);
    } else {
        targets.extend(yd.commuting_elements().into_iter().map(|t| (t, 1)));
    }
    let results = targets
        .into_par_iter()
        .map(|(t, weight)| {
            let g = if t == pi { id.clone() } else { yd.transporter(&t)? };
            let r = check_pair(yd, (&pi, &id), (&t, &g))?;
            Ok((pi.clone(), t, weight, r))
        })
        .collect::<Result<Vec<_>, BraidError>>()?;
    Ok(fold(results, reduce))
}

/// Re-enumerates every unordered commuting pair of the whole class, with
/// independently computed transporters. Refuses classes above `cap`.
pub fn negativity_check_full_class(yd: &YDModule, cap: u128) -> Result<NegativityResult, BraidError> {
    let g = CommutingGraph::of_class(yd, cap)?;
    let transporters = g
        .vertices
        .par_iter()
        .map(|t| yd.transporter(t))
        .collect::<Result<Vec<_>, BraidError>>()?;
    let results = (0..g.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut js = vec![i];
            js.extend(g.neighbors(i).into_iter().filter(|&j| j > i));
            js.into_iter().map(move |j| (i, j))
        })
        .map(|(i, j)| {
            let s = (&g.vertices[i], &transporters[i]);
            let t = (&g.vertices[j], &transporters[j]);
            let r = check_pair(yd, s, t)?;
            Ok((g.vertices[i].clone(), g.vertices[j].clone(), 1, r))
        })
        .collect::<Result<Vec<_>, BraidError>>()?;
    Ok(fold(results, false))
}
