//! The decision engine: gate, fixed vectors, Cartan type with the finite-type
//! test, the four-cycle rule, negativity, and the closed-form oracle.

pub mod cartan;
mod negativity;
mod oracle;
mod pipeline;
pub mod properties;
mod report;
mod rules;

use std::fmt;

use serde::Serialize;

pub use cartan::{cartan_type, finite_type, name_minimal, symmetrized, CartanData, FiniteType, NotCartan};
pub use negativity::{
    check_pair, negativity_check, negativity_check_full_class, NegativeCertificate, NegativityResult, PairCheck,
};
pub use oracle::theorem1_oracle;
pub use pipeline::{decide, decide_module, minimize_witness, EngineConfig};
pub use report::{Report, WitnessReport, SCHEMA};
pub use rules::{cycle_rule, fixed_vector, gate, infinite_witness, non_finite_cartan, Rule, RuleHit};

use crate::braidspace::{BraidError, DiagonalSubspace, YDModule};
use crate::permgroup::PermError;
use crate::reps::RepError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerdictError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("witness failed revalidation: {0}")]
    Revalidation(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    InfiniteDim,
    NegativeBraiding,
    Undecided,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::InfiniteDim => "infinite-dim",
            Outcome::NegativeBraiding => "negative-braiding",
            Outcome::Undecided => "undecided",
        })
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Gate => "gate",
            Rule::FixedVector => "fixed-vector",
            Rule::NonFiniteCartan => "non-finite-cartan",
            Rule::Cycle => "cycle",
            Rule::Negativity => "negativity",
            Rule::ClosedForm => "closed-form",
            Rule::Inconclusive => "inconclusive",
        })
    }
}

/// A diagonal braided subspace together with the rule that fired on it.
/// `hit.vertices` index into `subspace`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub subspace: DiagonalSubspace,
    pub hit: RuleHit,
}

impl Witness {
    /// Recomputes the braiding on the subspace from scratch and re-applies
    /// the rule to the recorded vertices.
    pub fn revalidate(&self, yd: &YDModule) -> Result<(), VerdictError> {
        let bad = |why: &str| Err(VerdictError::Revalidation(why.to_string()));
        if !self.subspace.verify_closed(yd)? {
            return bad("subspace is not closed under the braiding");
        }
        let q = &self.subspace.q;
        let v = &self.hit.vertices;
        if v.iter().any(|&a| a >= q.len()) {
            return bad("witness vertex out of range");
        }
        match self.hit.rule {
            Rule::FixedVector => {
                if v.len() != 1 || !q[v[0]][v[0]].is_one() {
                    return bad("no fixed vector");
                }
            }
            Rule::NonFiniteCartan => {
                let sub: Vec<Vec<_>> = v.iter().map(|&a| v.iter().map(|&b| q[a][b]).collect()).collect();
                let Ok(c) = cartan_type(&sub) else {
                    return bad("witness vertices are not of Cartan type");
                };
                if finite_type(&c).finite {
                    return bad("witness Cartan matrix is of finite type");
                }
            }
            Rule::Cycle => {
                let d = self.subspace.diagram().induced(v);
                if v.len() != 4 || cycle_rule(&d).is_none() {
                    return bad("witness is not an alternating four-cycle");
                }
            }
            _ => return bad("rule carries no subspace witness"),
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub rule: Rule,
    pub detail: String,
    pub witness: Option<Witness>,
    pub negative: Option<NegativeCertificate>,
}

impl Verdict {
    pub fn infinite(rule: Rule, detail: impl Into<String>, witness: Option<Witness>) -> Self {
        Verdict {
            outcome: Outcome::InfiniteDim,
            rule,
            detail: detail.into(),
            witness,
            negative: None,
        }
    }

    pub fn undecided(detail: impl Into<String>) -> Self {
        Verdict {
            outcome: Outcome::Undecided,
            rule: Rule::Inconclusive,
            detail: detail.into(),
            witness: None,
            negative: None,
        }
    }
}
