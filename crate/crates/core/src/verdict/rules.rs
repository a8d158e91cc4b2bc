use serde::Serialize;

use super::cartan::{cartan_type, finite_type, CartanData, NotCartan};
use crate::braidspace::{DiagonalSubspace, DynkinDiagram};
use crate::exactfield::RootOfUnity;

/// The criterion that produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// `q_ππ ≠ -1`, or `π` of odd order.
    Gate,
    /// Some vector `v` with `c(v ⊗ v) = v ⊗ v`.
    FixedVector,
    /// A braided subspace of Cartan type whose matrix is not of finite type.
    NonFiniteCartan,
    /// A four-cycle of `-1` vertices with edge labels alternating `x`, `x⁻¹`.
    Cycle,
    /// Every commuting pair has `q_aa = -1` and `q_ab q_ba = 1`.
    Negativity,
    /// Transcribed closed-form classification.
    ClosedForm,
    /// No criterion applies or the search hit a cap.
    Inconclusive,
}

/// The part of a diagonal subspace a rule fired on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleHit {
    pub rule: Rule,
    /// Vertices of the subspace's diagram that carry the witness.
    pub vertices: Vec<usize>,
    pub cartan: Option<CartanData>,
    pub name: Option<String>,
}

/// Gate on the basepoint scalar: `q_ππ` must be `-1` and `k` even.
pub fn gate(q_pi: RootOfUnity, k: u32) -> Option<String> {
    if k % 2 == 1 {
        return Some(format!("the basepoint has odd order {k}"));
    }
    if q_pi != RootOfUnity::minus_one() {
        return Some(format!("q_pi = {} is not -1", q_pi.reduced()));
    }
    None
}

pub fn fixed_vector(w: &DiagonalSubspace) -> Option<RuleHit> {
    (0..w.dim()).find(|&a| w.q[a][a].is_one()).map(|a| RuleHit {
        rule: Rule::FixedVector,
        vertices: vec![a],
        cartan: None,
        name: None,
    })
}

fn restrict_q(q: &[Vec<RootOfUnity>], verts: &[usize]) -> Vec<Vec<RootOfUnity>> {
    verts
        .iter()
        .map(|&a| verts.iter().map(|&b| q[a][b]).collect())
        .collect()
}

/// Vertex sets on which the braiding is of Cartan type: the whole diagram
/// when possible, otherwise a greedy choice avoiding incompatible pairs.
fn cartan_candidates(q: &[Vec<RootOfUnity>]) -> Vec<(Vec<usize>, CartanData)> {
    let m = q.len();
    let all: Vec<usize> = (0..m).collect();
    match cartan_type(q) {
        Ok(c) => vec![(all, c)],
        Err(NotCartan::FixedVertex(_)) => Vec::new(),
        Err(NotCartan::NoExponent(..)) => {
            let bad = |a: usize, b: usize| {
                let p = q[a][b].mul(&q[b][a]);
                let qa = q[a][a];
                let qb = q[b][b];
                let ok_a = (0..qa.order() as i64).any(|e| qa.pow(-e) == p);
                let ok_b = (0..qb.order() as i64).any(|e| qb.pow(-e) == p);
                !(ok_a && ok_b)
            };
            let mut keep: Vec<usize> = Vec::new();
            for a in 0..m {
                if keep.iter().all(|&b| !bad(a, b)) {
                    keep.push(a);
                }
            }
            match cartan_type(&restrict_q(q, &keep)) {
                Ok(c) if keep.len() > 1 => vec![(keep, c)],
                _ => Vec::new(),
            }
        }
    }
}

/// Cartan type plus a finite-type failure, reported on a minimal subdiagram.
pub fn non_finite_cartan(w: &DiagonalSubspace) -> Option<RuleHit> {
    for (verts, c) in cartan_candidates(&w.q) {
        let f = finite_type(&c);
        if !f.finite {
            let minimal = f.minimal.unwrap_or_default();
            return Some(RuleHit {
                rule: Rule::NonFiniteCartan,
                vertices: minimal.iter().map(|&i| verts[i]).collect(),
                cartan: Some(c),
                name: f.name,
            });
        }
    }
    None
}

/// An induced four-cycle `a - b - c - d - a` with every vertex `-1` and edge
/// labels `x, x⁻¹, x, x⁻¹` in order around it. Returned in cycle order.
pub fn cycle_rule(d: &DynkinDiagram) -> Option<RuleHit> {
    let m1 = RootOfUnity::minus_one();
    let m = d.len();
    let minus: Vec<bool> = d.vertices.iter().map(|q| *q == m1).collect();
    let lab = d.label_matrix();
    let nbrs: Vec<Vec<usize>> = (0..m)
        .map(|a| (0..m).filter(|&b| lab[a][b].is_some() && minus[b]).collect())
        .collect();
    // `a` is the least vertex of the cycle
    for a in (0..m).filter(|&a| minus[a]) {
        for &b in nbrs[a].iter().filter(|&&b| b > a) {
            let x = lab[a][b].expect("edge");
            for &c in nbrs[b].iter().filter(|&&c| c > a && lab[a][c].is_none()) {
                if lab[b][c] != Some(x.inv()) {
                    continue;
                }
                for &e in nbrs[c].iter().filter(|&&e| e > a && e != b && lab[b][e].is_none()) {
                    if lab[c][e] == Some(x) && lab[e][a] == Some(x.inv()) {
                        return Some(RuleHit {
                            rule: Rule::Cycle,
                            vertices: vec![a, b, c, e],
                            cartan: None,
                            name: Some(format!("4-cycle with labels {}, {}", x.reduced(), x.inv().reduced())),
                        });
                    }
                }
            }
        }
    }
    None
}

/// Applies the infinite-dimension rules in order: fixed vector, Cartan type
/// not of finite type, then the four-cycle pattern.
pub fn infinite_witness(w: &DiagonalSubspace) -> Option<RuleHit> {
    if let Some(hit) = fixed_vector(w) {
        return Some(hit);
    }
    if let Some(hit) = non_finite_cartan(w) {
        return Some(hit);
    }
    if w.dim() >= 4 {
        return cycle_rule(&w.diagram());
    }
    None
}
