//! Text form of a representation choice.
//!
//! ```text
//! spec  := item (';' item)*
//! item  := 'chi=' chi | 'mu=' mu
//! chi   := 'k:' <j>                 weight character, j ones then zeros
//!        | '(' u1 ',' ... ',' un ')'
//! mu    := label ('*' label)*       one label per stabilizer part of size > 1,
//!                                   or one per part, in part order
//! label := trivial | sign | standard | standard_sign | catalog:<p1,p2,..>
//! ```
//!
//! A lone `mu=trivial` applies to every part. `eps`/`epsilon` and `sgn` are
//! accepted aliases. A missing `mu` means trivial on every part.

use std::fmt;

use super::character::GammaCharacter;
use super::induced::InducedRep;
use super::sn::{canonical_label, in_catalog, label_to_partition, Partition, SnIrrep};
use super::RepError;
use crate::exactfield::RootOfUnity;
use crate::permgroup::UnmixedClass;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChiSpec {
    Weight(u32),
    Vector(Vec<u32>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepSpec {
    pub chi: ChiSpec,
    pub mu: Vec<String>,
}

/// A fully resolved choice: orbit representative and one partition per part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RepChoice {
    pub chi: GammaCharacter,
    pub mu: Vec<Partition>,
}

impl std::str::FromStr for RepSpec {
    type Err = RepError;

    fn from_str(s: &str) -> Result<Self, RepError> {
        let bad = |why: &str| RepError::Parse(format!("{why} in rep spec {s:?}"));
        let mut chi = None;
        let mut mu = None;
        for item in s.split(';').map(str::trim).filter(|x| !x.is_empty()) {
            let (key, value) = item.split_once('=').ok_or_else(|| bad("missing '='"))?;
            match key.trim() {
                "chi" => {
                    if chi.is_some() {
                        return Err(bad("repeated chi"));
                    }
                    let v = value.trim();
                    chi = Some(if let Some(j) = v.strip_prefix("k:") {
                        ChiSpec::Weight(j.trim().parse().map_err(|_| bad("bad weight"))?)
                    } else {
                        let body = v
                            .strip_prefix('(')
                            .and_then(|x| x.strip_suffix(')'))
                            .ok_or_else(|| bad("chi must be k:<j> or (u1,..,un)"))?;
                        let u = body
                            .split(',')
                            .map(|w| w.trim().parse::<u32>())
                            .collect::<Result<Vec<_>, _>>()
                            .map_err(|_| bad("bad chi entry"))?;
                        ChiSpec::Vector(u)
                    });
                }
                "mu" => {
                    if mu.is_some() {
                        return Err(bad("repeated mu"));
                    }
                    let labels: Vec<String> = value.split('*').map(|l| l.trim().to_string()).collect();
                    if labels.iter().any(String::is_empty) {
                        return Err(bad("empty mu label"));
                    }
                    mu = Some(labels);
                }
                other => return Err(bad(&format!("unknown key {other:?}"))),
            }
        }
        Ok(RepSpec {
            chi: chi.ok_or_else(|| bad("missing chi"))?,
            mu: mu.unwrap_or_default(),
        })
    }
}

impl RepSpec {
    pub fn resolve(&self, k: u32, n: u32) -> Result<RepChoice, RepError> {
        let u = match &self.chi {
            ChiSpec::Weight(j) => {
                if *j > n {
                    return Err(RepError::Mismatch(format!("weight {j} exceeds n = {n}")));
                }
                GammaCharacter::weight(k, n, *j).u
            }
            ChiSpec::Vector(u) => {
                if u.len() != n as usize {
                    return Err(RepError::Mismatch(format!("chi has {} entries, expected {n}", u.len())));
                }
                if let Some(&x) = u.iter().find(|&&x| x >= k) {
                    return Err(RepError::Mismatch(format!("chi entry {x} not below k = {k}")));
                }
                u.clone()
            }
        };
        let chi = GammaCharacter::new(k, u).representative();
        let (_, young) = chi.orbit_and_stabilizer();
        let sizes: Vec<u32> = young.parts.iter().map(|p| p.len() as u32).collect();
        let big: Vec<usize> = (0..sizes.len()).filter(|&t| sizes[t] > 1).collect();
        let labels: Vec<String> = if self.mu.is_empty() {
            vec!["trivial".into(); sizes.len()]
        } else if self.mu.len() == sizes.len() {
            self.mu.clone()
        } else if self.mu.len() == 1 && is_trivial_label(&self.mu[0]) {
            vec!["trivial".into(); sizes.len()]
        } else if self.mu.len() == big.len() {
            let mut out = vec!["trivial".to_string(); sizes.len()];
            for (&t, l) in big.iter().zip(&self.mu) {
                out[t] = l.clone();
            }
            out
        } else {
            return Err(RepError::Mismatch(format!(
                "mu has {} labels but the stabilizer has parts of sizes {:?}",
                self.mu.len(),
                sizes
            )));
        };
        let mu = sizes
            .iter()
            .zip(&labels)
            .map(|(&m, l)| label_to_partition(m, l))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RepChoice { chi, mu })
    }
}

fn is_trivial_label(l: &str) -> bool {
    matches!(l.trim(), "trivial" | "eps" | "epsilon")
}

impl fmt::Display for RepChoice {
    /// Canonical spec string; parses back to the same choice.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi={}", self.chi)?;
        let labels: Vec<String> = self.mu.iter().map(canonical_label).collect();
        write!(f, ";mu={}", labels.join("*"))
    }
}

impl RepChoice {
    /// True if every μ factor has a built-in construction.
    pub fn is_cataloged(&self) -> bool {
        self.mu.iter().all(in_catalog)
    }

    /// The index `[S_n : Y]`, i.e. the orbit size of χ.
    pub fn index(&self) -> u128 {
        let n = self.chi.n() as u128;
        let fact = |m: u128| (1..=m).product::<u128>();
        self.mu.iter().fold(fact(n), |acc, p| acc / fact(p.size() as u128))
    }

    /// `deg ρ = [S_n : Y] · Π dim μ_t`, defined for gaps too.
    pub fn degree(&self) -> u128 {
        self.index() * self.mu.iter().map(Partition::dimension).product::<u128>()
    }

    /// `ρ(π) = χ(π) = ζ_k^{Σ u_j}`, the scalar by which the basepoint acts.
    pub fn pi_root(&self) -> RootOfUnity {
        let s: u64 = self.chi.u.iter().map(|&x| x as u64).sum();
        RootOfUnity::new(self.chi.k, (s % self.chi.k as u64) as i64)
    }

    pub fn build(&self, class: &UnmixedClass) -> Result<InducedRep, RepError> {
        let mus = self.mu.iter().map(SnIrrep::new).collect::<Result<Vec<_>, _>>()?;
        InducedRep::new(*class, self.chi.clone(), mus)
    }
}
