//! A fixed catalog of irreducible representations of symmetric groups.
//!
//! Every irrep of `S_1`..`S_4` is available. For larger `m` only the trivial,
//! sign, standard `(m-1,1)` and standard-times-sign `(2,1^{m-2})` irreps are
//! built; other partitions are reported as catalog gaps.

use std::fmt;

use serde::Serialize;

use super::RepError;
use crate::exactfield::Cyclotomic;
use crate::exactla::Matrix;
use crate::permgroup::Permutation;

/// A partition of `m`, parts in non-increasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Partition(pub Vec<u32>);

impl Partition {
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Dimension of the Specht module, by the hook length formula.
    pub fn dimension(&self) -> u128 {
        let col_len = |c: u32| self.0.iter().filter(|&&r| r > c).count() as u128;
        let mut hooks: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for c in 0..row {
                hooks *= (row - c) as u128 + col_len(c) - i as u128 - 1;
            }
        }
        (1..=self.size() as u128).product::<u128>() / hooks
    }

    pub fn parse(s: &str) -> Result<Partition, RepError> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts: Vec<u32> = t
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|w| !w.is_empty())
            .map(|w| w.parse::<u32>().map_err(|_| RepError::Parse(s.to_string())))
            .collect::<Result<_, _>>()?;
        if parts.is_empty() || parts.contains(&0) {
            return Err(RepError::Parse(s.to_string()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    /// All partitions of `m` in reverse lexicographic order, starting at `(m)`.
    pub fn all(m: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, m, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", p.join(","))
    }
}

fn trivial_p(m: u32) -> Partition {
    Partition(vec![m])
}

fn sign_p(m: u32) -> Partition {
    Partition(vec![1; m as usize])
}

fn standard_p(m: u32) -> Option<Partition> {
    (m >= 2).then(|| {
        let mut p = vec![m - 1, 1];
        p.sort_unstable_by(|a, b| b.cmp(a));
        Partition(p)
    })
}

fn standard_sign_p(m: u32) -> Option<Partition> {
    (m >= 2).then(|| {
        let mut p = vec![2];
        p.extend(std::iter::repeat_n(1, m as usize - 2));
        Partition(p)
    })
}

/// Canonical label: the first of trivial, sign, standard, standard_sign that
/// names the partition, else `catalog:<parts>`.
pub fn canonical_label(p: &Partition) -> String {
    let m = p.size();
    if *p == trivial_p(m) {
        "trivial".into()
    } else if *p == sign_p(m) {
        "sign".into()
    } else if standard_p(m).as_ref() == Some(p) {
        "standard".into()
    } else if standard_sign_p(m).as_ref() == Some(p) {
        "standard_sign".into()
    } else {
        let parts: Vec<String> = p.0.iter().map(u32::to_string).collect();
        format!("catalog:{}", parts.join(","))
    }
}

/// Resolve a label for `S_m` to a partition (not checking catalog coverage).
pub fn label_to_partition(m: u32, label: &str) -> Result<Partition, RepError> {
    let l = label.trim();
    let unsupported = || RepError::UnknownLabel {
        m,
        label: l.to_string(),
    };
    match l {
        "trivial" | "epsilon" | "eps" => Ok(trivial_p(m)),
        "sign" | "sgn" => Ok(sign_p(m)),
        "standard" => standard_p(m).ok_or_else(unsupported),
        "standard_sign" => standard_sign_p(m).ok_or_else(unsupported),
        _ => {
            let body = l.strip_prefix("catalog:").ok_or_else(unsupported)?;
            let p = Partition::parse(body)?;
            if p.size() != m {
                return Err(unsupported());
            }
            Ok(p)
        }
    }
}

/// Partitions of `m` with a built-in construction, in canonical label order.
pub fn catalog(m: u32) -> Vec<Partition> {
    let mut out: Vec<Partition> = Vec::new();
    let mut push = |p: Partition| {
        if !out.contains(&p) {
            out.push(p);
        }
    };
    push(trivial_p(m));
    push(sign_p(m));
    if let Some(p) = standard_p(m) {
        push(p);
    }
    if let Some(p) = standard_sign_p(m) {
        push(p);
    }
    if m == 4 {
        push(Partition(vec![2, 2]));
    }
    out
}

pub fn in_catalog(p: &Partition) -> bool {
    catalog(p.size()).contains(p)
}

/// An irrep of `S_m` given by the images of `s_i = (i i+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnIrrep {
    m: u32,
    partition: Partition,
    gens: Vec<Matrix>,
}

fn standard_gens(m: u32) -> Vec<Matrix> {
    // basis f_i = e_i - e_{i+1}, i = 1..m-1
    let d = (m - 1) as usize;
    (1..m as usize)
        .map(|a| {
            let mut g = Matrix::zeros(d, d);
            for i in 1..=d {
                let col = i - 1;
                if i == a {
                    g.set(a - 1, col, Cyclotomic::from_int(-1));
                } else if i + 1 == a || i == a + 1 {
                    g.set(col, col, Cyclotomic::one());
                    g.set(a - 1, col, Cyclotomic::one());
                } else {
                    g.set(col, col, Cyclotomic::one());
                }
            }
            g
        })
        .collect()
}

impl SnIrrep {
    pub fn new(p: &Partition) -> Result<SnIrrep, RepError> {
        let m = p.size();
        let scalar = |c: i64| -> Vec<Matrix> { (1..m).map(|_| Matrix::scalar(1, Cyclotomic::from_int(c))).collect() };
        let gens = if *p == trivial_p(m) {
            scalar(1)
        } else if *p == sign_p(m) {
            scalar(-1)
        } else if standard_p(m).as_ref() == Some(p) {
            standard_gens(m)
        } else if standard_sign_p(m).as_ref() == Some(p) {
            standard_gens(m)
                .into_iter()
                .map(|g| g.scale(&Cyclotomic::from_int(-1)))
                .collect()
        } else if m == 4 && p.0 == [2, 2] {
            // through S_4 -> S_3 with (34) ↦ (12)
            let s3 = standard_gens(3);
            vec![s3[0].clone(), s3[1].clone(), s3[0].clone()]
        } else {
            return Err(RepError::CatalogGap {
                m,
                partition: p.to_string(),
            });
        };
        Ok(SnIrrep {
            m,
            partition: p.clone(),
            gens,
        })
    }

    pub fn from_label(m: u32, label: &str) -> Result<SnIrrep, RepError> {
        SnIrrep::new(&label_to_partition(m, label)?)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn label(&self) -> String {
        canonical_label(&self.partition)
    }

    pub fn dim(&self) -> usize {
        self.gens.first().map_or(1, Matrix::rows)
    }

    /// Image of `s_i = (i i+1)`, `1 <= i < m`.
    pub fn generator(&self, i: usize) -> &Matrix {
        &self.gens[i - 1]
    }

    /// Image of an arbitrary element, via a reduced word in the `s_i`.
    pub fn eval(&self, y: &Permutation) -> Matrix {
        assert_eq!(y.degree(), self.m as usize);
        let mut word = Vec::new();
        let mut cur = y.images().to_vec();
        // peel right descents: y = y' s_i with one fewer inversion
        while let Some(i) = (0..cur.len().saturating_sub(1)).find(|&i| cur[i] > cur[i + 1]) {
            cur.swap(i, i + 1);
            word.push(i + 1);
        }
        let mut out = Matrix::identity(self.dim());
        for &i in word.iter().rev() {
            out = &out * self.generator(i);
        }
        out
    }
}

impl fmt::Display for SnIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} of S_{}", self.label(), self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::permutations_of;

    fn relations_hold(rep: &SnIrrep) {
        let m = rep.m() as usize;
        for i in 1..m {
            let s = rep.generator(i);
            assert!((s * s).is_identity(), "{rep}: s_{i}^2");
            for j in i + 1..m {
                let t = rep.generator(j);
                let st = s * t;
                let e = if j == i + 1 { 3 } else { 2 };
                assert!(st.pow(e).is_identity(), "{rep}: (s_{i} s_{j})^{e}");
            }
        }
    }

    #[test]
    fn catalog_relations() {
        for m in 1..=6 {
            for p in catalog(m) {
                relations_hold(&SnIrrep::new(&p).unwrap());
            }
        }
    }

    #[test]
    fn catalog_completeness_small() {
        for m in 1..=4 {
            assert_eq!(catalog(m).len(), Partition::all(m).len());
            // sum of squared dimensions is m!
            let total: usize = catalog(m).iter().map(|p| SnIrrep::new(p).unwrap().dim().pow(2)).sum();
            assert_eq!(total, (1..=m as usize).product::<usize>());
        }
        assert_eq!(Partition::all(5).len(), 7);
        assert!(matches!(
            SnIrrep::new(&Partition(vec![3, 2])),
            Err(RepError::CatalogGap { .. })
        ));
    }

    #[test]
    fn eval_is_homomorphism() {
        let rep = SnIrrep::from_label(4, "catalog:2,2").unwrap();
        let mut all = Vec::new();
        permutations_of(4, &mut all);
        for x in &all {
            for y in all.iter().step_by(5) {
                assert_eq!(rep.eval(&x.compose(y)), &rep.eval(x) * &rep.eval(y));
            }
        }
    }

    #[test]
    fn standard_s3_on_three_cycle() {
        let rep = SnIrrep::from_label(3, "standard").unwrap();
        let c = Permutation::parse_cycles("(123)", 3).unwrap();
        let m = rep.eval(&c);
        // χ_(2,1) on a 3-cycle is -1; the permutation module would give 0
        assert_eq!(m.trace(), Cyclotomic::from_int(-1));
        assert!(m.pow(3).is_identity());
        assert!(!m.is_identity());
    }

    #[test]
    fn sign_on_transposition() {
        for m in 2..=6 {
            let rep = SnIrrep::from_label(m, "sign").unwrap();
            let t = Permutation::from_cycles(m as usize, &[vec![1, 2]]).unwrap();
            assert_eq!(rep.eval(&t), Matrix::scalar(1, Cyclotomic::from_int(-1)));
        }
    }

    #[test]
    fn hook_lengths() {
        let d = |v: Vec<u32>| Partition(v).dimension();
        assert_eq!(d(vec![3]), 1);
        assert_eq!(d(vec![2, 1]), 2);
        assert_eq!(d(vec![3, 2]), 5);
        assert_eq!(d(vec![3, 1, 1]), 6);
        // sum of squares is m!
        let total: u128 = Partition::all(6).iter().map(|p| p.dimension().pow(2)).sum();
        assert_eq!(total, 720);
    }

    #[test]
    fn labels() {
        assert_eq!(label_to_partition(2, "standard").unwrap(), Partition(vec![1, 1]));
        assert_eq!(canonical_label(&Partition(vec![1, 1])), "sign");
        assert_eq!(canonical_label(&Partition(vec![2, 1])), "standard");
        assert_eq!(canonical_label(&Partition(vec![2, 2])), "catalog:2,2");
        assert_eq!(canonical_label(&Partition(vec![1])), "trivial");
        assert!(label_to_partition(1, "standard").is_err());
        assert!(label_to_partition(3, "catalog:2,2").is_err());
        assert!(label_to_partition(3, "bogus").is_err());
    }
}
