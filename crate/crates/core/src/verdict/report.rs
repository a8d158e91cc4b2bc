use serde::{Deserialize, Serialize};

use super::{NegativeCertificate, Verdict};
use crate::reps::RepChoice;

/// Version tag carried by every report.
pub const SCHEMA: &str = "unmixed-report/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    /// Subrack label, e.g. `triple(2,3)`.
    pub label: String,
    /// Subrack elements in cycle notation, in basis order.
    pub subrack: Vec<String>,
    pub transporters: Vec<String>,
    /// Basis vector names `t<i>.v<r>`.
    pub basis: Vec<String>,
    /// Braiding matrix, entries `z(m,a)` in lowest terms.
    pub q: Vec<Vec<String>>,
    /// Vertices the rule fired on.
    pub vertices: Vec<usize>,
    pub diagram: String,
    pub cartan: Option<Vec<Vec<i64>>>,
    pub name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeReport {
    pub pairs_checked: usize,
    pub pairs_covered: usize,
    pub reduced: bool,
}

impl From<&NegativeCertificate> for NegativeReport {
    fn from(c: &NegativeCertificate) -> Self {
        NegativeReport {
            pairs_checked: c.pairs_checked,
            pairs_covered: c.pairs_covered,
            reduced: c.reduced,
        }
    }
}

/// Serializable summary of one decision. Field order is fixed, so the JSON
/// text is a function of the inputs alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub k: u32,
    pub n: u32,
    pub rep: String,
    pub degree: u64,
    pub q_pi: String,
    pub outcome: String,
    pub rule: String,
    pub detail: String,
    pub witness: Option<WitnessReport>,
    pub negative: Option<NegativeReport>,
}

impl Report {
    pub fn new(k: u32, n: u32, choice: &RepChoice, v: &Verdict) -> Report {
        let witness = v.witness.as_ref().map(|w| {
            let s = &w.subspace;
            WitnessReport {
                label: s.subrack.label.clone(),
                subrack: s.subrack.elements.iter().map(|p| p.to_string()).collect(),
                transporters: s.subrack.transporters.iter().map(|p| p.to_string()).collect(),
                basis: s.names(),
                q: s.q
                    .iter()
                    .map(|row| row.iter().map(|x| x.reduced().to_string()).collect())
                    .collect(),
                vertices: w.hit.vertices.clone(),
                diagram: s.diagram().to_dot(),
                cartan: w.hit.cartan.as_ref().map(|c| c.a.clone()),
                name: w.hit.name.clone(),
            }
        });
        Report {
            schema: SCHEMA.to_string(),
            k,
            n,
            rep: choice.to_string(),
            degree: choice.degree() as u64,
            q_pi: choice.pi_root().reduced().to_string(),
            outcome: v.outcome.to_string(),
            rule: v.rule.to_string(),
            detail: v.detail.clone(),
            witness,
            negative: v.negative.as_ref().map(NegativeReport::from),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
