use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::negativity::{negativity_check, negativity_check_full_class, NegativityResult};
use super::rules::{gate, infinite_witness, Rule};
use super::{Outcome, Verdict, VerdictError, Witness};
use crate::braidspace::{
    commuting_subfamilies, diagonal_subspace, maximal_abelian_subracks, BraidError, DiagonalSubspace, Subrack, YDModule,
};
use crate::permgroup::UnmixedClass;
use crate::reps::RepChoice;

/// Caps and switches for [`decide`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// Largest class the unreduced cross-checks will enumerate.
    pub max_class_size: u128,
    /// Largest number of maximal abelian subracks (orbits when reducing)
    /// the clique stage will examine.
    pub max_subracks: usize,
    /// Quotient by the centralizer in the negativity and clique stages.
    pub symmetry_reduction: bool,
    /// Branch budget when a subrack has no common eigenbasis.
    pub max_subfamily_branches: usize,
    /// Largest eigenvector subset tried when shrinking a witness.
    pub max_eigen_subset: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            max_class_size: 10_000_000,
            max_subracks: 2_000,
            symmetry_reduction: true,
            max_subfamily_branches: 256,
            max_eigen_subset: 3,
        }
    }
}

impl EngineConfig {
    /// Defaults, overridden by `UNMIXED_MAX_SUBRACKS` and `UNMIXED_MAX_CLASS`
    /// when those parse.
    pub fn from_env() -> Self {
        let mut cfg = EngineConfig::default();
        if let Some(v) = std::env::var("UNMIXED_MAX_SUBRACKS").ok().and_then(|s| s.parse().ok()) {
            cfg.max_subracks = v;
        }
        if let Some(v) = std::env::var("UNMIXED_MAX_CLASS").ok().and_then(|s| s.parse().ok()) {
            cfg.max_class_size = v;
        }
        cfg
    }
}

/// Vectors grouped by the eigenvalues they carry. `Q[(i,r),(j,s)]` depends on
/// `s` alone through `ρ(γ_ij) v_s`, so equal columns are interchangeable.
fn signature_classes(w: &DiagonalSubspace) -> Vec<Vec<usize>> {
    let r = w.rank();
    let m = w.subrack.len();
    let mut classes: BTreeMap<Vec<(u32, u32)>, Vec<usize>> = BTreeMap::new();
    for s in 0..r {
        let sig: Vec<(u32, u32)> = (0..m)
            .flat_map(|i| (0..m).map(move |j| (i, j)))
            .map(|(i, j)| {
                let x = w.q[i * r][j * r + s].reduced();
                (x.m(), x.a())
            })
            .collect();
        classes.entry(sig).or_default().push(s);
    }
    let mut out: Vec<Vec<usize>> = classes.into_values().collect();
    out.sort();
    out
}

/// Count vectors `c` with `Σ c = total` and `c_t ≤ caps_t`, lexicographically.
fn compositions(caps: &[usize], total: usize) -> Vec<Vec<usize>> {
    fn rec(caps: &[usize], left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == caps.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for c in (0..=caps[cur.len()].min(left)).rev() {
            cur.push(c);
            rec(caps, left - c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(caps, total, &mut Vec::new(), &mut out);
    out
}

fn used(vertices: &[usize], r: usize) -> (Vec<usize>, Vec<usize>) {
    let elements = vertices.iter().map(|&a| a / r).collect::<BTreeSet<_>>();
    let vectors = vertices.iter().map(|&a| a % r).collect::<BTreeSet<_>>();
    (elements.into_iter().collect(), vectors.into_iter().collect())
}

/// Shrinks a witness. First looks for a rule firing on few eigenvectors
/// (up to `max_vectors`, one per signature class unless repeats are needed),
/// then drops the subrack elements and vectors the firing vertices do not
/// use. A smaller subspace is kept only if a rule still fires on it.
pub fn minimize_witness(w: Witness, max_vectors: usize) -> Witness {
    let r = w.subspace.rank();
    let m = w.subspace.subrack.len();
    let all: Vec<usize> = (0..m).collect();
    let mut best = w;
    if r > 1 {
        let classes = signature_classes(&best.subspace);
        let caps: Vec<usize> = classes.iter().map(Vec::len).collect();
        // smallest vector count first, then the smallest firing vertex set
        for total in 1..=max_vectors.min(r - 1) {
            let mut found: Option<Witness> = None;
            for counts in compositions(&caps, total) {
                let vectors: Vec<usize> = counts
                    .iter()
                    .zip(&classes)
                    .flat_map(|(&c, cl)| cl[..c].iter().copied())
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect();
                let small = best.subspace.restrict(&all, &vectors);
                if let Some(hit) = infinite_witness(&small) {
                    if found.as_ref().is_none_or(|f| hit.vertices.len() < f.hit.vertices.len()) {
                        found = Some(Witness { subspace: small, hit });
                    }
                }
            }
            if let Some(f) = found {
                best = f;
                break;
            }
        }
    }
    let r = best.subspace.rank();
    let (elements, vectors) = used(&best.hit.vertices, r);
    if elements.len() == best.subspace.subrack.len() && vectors.len() == r {
        return best;
    }
    let small = best.subspace.restrict(&elements, &vectors);
    match infinite_witness(&small) {
        Some(hit) => Witness { subspace: small, hit },
        None => best,
    }
}

/// First witness found on `t` or, failing a common eigenbasis, on its
/// maximal commuting sub-families.
fn witness_on(yd: &YDModule, t: &Subrack, cfg: &EngineConfig) -> Result<Option<Witness>, VerdictError> {
    let found = |subspace| {
        infinite_witness(&subspace).map(|hit| minimize_witness(Witness { subspace, hit }, cfg.max_eigen_subset))
    };
    match diagonal_subspace(yd, t) {
        Ok(w) => Ok(found(w)),
        Err(BraidError::NonSimultaneous { .. }) => {
            let families = match commuting_subfamilies(yd, t, cfg.max_subfamily_branches) {
                Ok(f) => f,
                Err(BraidError::CapExceeded { .. }) => return Ok(None),
                Err(e) => return Err(e.into()),
            };
            for f in families {
                let positions: Vec<String> = f.iter().map(|p| p.to_string()).collect();
                let sub = t.select(&f, format!("{}[{}]", t.label, positions.join(",")));
                if let Some(w) = found(diagonal_subspace(yd, &sub)?) {
                    return Ok(Some(w));
                }
            }
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

/// Hand-built subracks tried before any search, in order.
fn seeds(class: &UnmixedClass) -> Vec<Subrack> {
    let (k, n) = (class.k(), class.n());
    let mut out = Vec::new();
    if k == 2 && n >= 2 {
        out.extend(Subrack::block_pair_triple(class, n - 1, n).ok());
        if n >= 4 {
            out.extend(Subrack::canonical(class).ok());
        }
    }
    if k % 2 == 0 && k > 2 && n >= 2 {
        out.extend(Subrack::quadruple(class, 1, 2).ok());
        out.extend(Subrack::inversion_quadruple(class).ok());
    }
    out
}

fn finish(yd: &YDModule, w: Witness) -> Result<Verdict, VerdictError> {
    w.revalidate(yd)?;
    let mut detail = format!("{} on {}", w.hit.rule, w.subspace.subrack.label);
    if let Some(name) = &w.hit.name {
        detail.push_str(&format!(": {name}"));
    }
    Ok(Verdict::infinite(w.hit.rule, detail, Some(w)))
}

/// Decides a single module whose basepoint already passes the gate.
pub fn decide_module(yd: &YDModule, cfg: &EngineConfig) -> Result<Verdict, VerdictError> {
    for t in seeds(yd.class()) {
        if let Some(w) = witness_on(yd, &t, cfg)? {
            return finish(yd, w);
        }
    }
    // without reduction, re-enumerate the whole class when it is small enough
    let (result, scope) = if cfg.symmetry_reduction {
        (negativity_check(yd, true)?, "through the basepoint")
    } else {
        match negativity_check_full_class(yd, cfg.max_class_size) {
            Ok(r) => (r, "of the whole class"),
            Err(BraidError::CapExceeded { .. }) => (negativity_check(yd, false)?, "through the basepoint"),
            Err(e) => return Err(e.into()),
        }
    };
    let pending = match result {
        NegativityResult::Negative(cert) => {
            return Ok(Verdict {
                outcome: Outcome::NegativeBraiding,
                rule: Rule::Negativity,
                detail: format!(
                    "{} commuting pairs {scope}, {} checked",
                    cert.pairs_covered, cert.pairs_checked
                ),
                witness: None,
                negative: Some(cert),
            });
        }
        NegativityResult::Violation { pair, subspace } => {
            if let Some(hit) = infinite_witness(&subspace) {
                return finish(yd, minimize_witness(Witness { subspace, hit }, cfg.max_eigen_subset));
            }
            format!("negativity fails on the pair {} {}", pair.0, pair.1)
        }
        NegativityResult::NonSimultaneous { pair, detail } => {
            format!("pair {} {} has no common eigenbasis ({detail})", pair.0, pair.1)
        }
    };
    let inventory = match maximal_abelian_subracks(yd, cfg.symmetry_reduction, cfg.max_subracks) {
        Ok(inv) => inv,
        Err(e @ BraidError::CapExceeded { .. }) => {
            return Ok(Verdict::undecided(format!("{pending}; {e}")));
        }
        Err(e) => return Err(e.into()),
    };
    let found = inventory
        .orbits
        .par_iter()
        .map(|o| witness_on(yd, &o.subrack, cfg))
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        });
    match found {
        Some(Ok(Some(w))) => finish(yd, w),
        Some(Err(e)) => Err(e),
        _ => Ok(Verdict::undecided(format!(
            "{pending}; no rule applies on {} maximal abelian subracks",
            inventory.orbits.len()
        ))),
    }
}

/// The full pipeline: gate, catalog check, seeds, negativity, clique search.
pub fn decide(k: u32, n: u32, choice: &RepChoice, cfg: &EngineConfig) -> Result<Verdict, VerdictError> {
    let class = UnmixedClass::new(k, n)?;
    if let Some(reason) = gate(choice.pi_root(), k) {
        return Ok(Verdict::infinite(Rule::Gate, reason, None));
    }
    if !choice.is_cataloged() {
        return Ok(Verdict::undecided(format!(
            "{choice} uses an irrep of S_m outside the built-in catalog"
        )));
    }
    let yd = YDModule::new(choice.build(&class)?);
    decide_module(&yd, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::RepSpec;

    fn run(k: u32, n: u32, spec: &str) -> Verdict {
        let choice = spec.parse::<RepSpec>().unwrap().resolve(k, n).unwrap();
        decide(k, n, &choice, &EngineConfig::default()).unwrap()
    }

    #[test]
    fn odd_k_is_gated() {
        let v = run(3, 1, "chi=(1)");
        assert_eq!((v.outcome, v.rule), (Outcome::InfiniteDim, Rule::Gate));
    }

    #[test]
    fn top_characters_negative() {
        for mu in ["trivial", "sign"] {
            let v = run(2, 3, &format!("chi=k:3;mu={mu}"));
            assert_eq!(v.outcome, Outcome::NegativeBraiding, "{mu}");
        }
    }

    #[test]
    fn unreduced_mode_respects_class_cap() {
        let choice: RepChoice = "chi=k:3"
            .parse::<crate::reps::RepSpec>()
            .unwrap()
            .resolve(2, 3)
            .unwrap();
        let plain = EngineConfig {
            symmetry_reduction: false,
            ..EngineConfig::default()
        };
        let whole = decide(2, 3, &choice, &plain).unwrap();
        assert!(whole.detail.contains("whole class"), "{}", whole.detail);
        // 15 elements is over a cap of 10, so only pairs through π are checked
        let capped = EngineConfig {
            max_class_size: 10,
            ..plain
        };
        let local = decide(2, 3, &choice, &capped).unwrap();
        assert_eq!(local.outcome, Outcome::NegativeBraiding);
        assert!(local.detail.contains("basepoint"), "{}", local.detail);
        assert!(!local.negative.unwrap().reduced);
    }

    #[test]
    fn standard_n4_two_triangles() {
        let v = run(2, 4, "chi=k:1;mu=standard");
        assert_eq!(v.outcome, Outcome::InfiniteDim);
        let w = v.witness.unwrap();
        let d = w.subspace.diagram();
        assert_eq!(d.len(), 6);
        let comps = d.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));
        assert_eq!(w.hit.name.as_deref(), Some("A_2^(1)"));
    }

    #[test]
    fn theta_minus_six_cycle() {
        let v = run(2, 3, "chi=k:3;mu=standard");
        let w = v.witness.unwrap();
        assert_eq!(w.subspace.dim(), 6);
        assert_eq!(w.hit.name.as_deref(), Some("A_5^(1)"));
    }

    #[test]
    fn catalog_gap_is_undecided() {
        let v = run(2, 5, "chi=k:5;mu=catalog:3,2");
        assert_eq!(v.outcome, Outcome::Undecided);
    }

    #[test]
    fn minimize_keeps_a_firing_rule() {
        let v = run(2, 3, "chi=k:1;mu=trivial");
        let w = v.witness.unwrap();
        assert!(infinite_witness(&w.subspace).is_some());
    }
}
