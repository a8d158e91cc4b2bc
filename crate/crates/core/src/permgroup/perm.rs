use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::PermError;

/// A permutation of `{1, …, N}`; `images[i - 1]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x as usize > n || seen[x as usize - 1] {
                return Err(PermError::NotBijection(images.clone()));
            }
            seen[x as usize - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from disjoint cycles on `{1..n}`.
    pub fn from_cycles(n: usize, cycles: &[Vec<u32>]) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (1..=n as u32).collect();
        let mut used = vec![false; n];
        for c in cycles {
            for (idx, &x) in c.iter().enumerate() {
                if x == 0 || x as usize > n {
                    return Err(PermError::PointOutOfRange { point: x, degree: n });
                }
                if used[x as usize - 1] {
                    return Err(PermError::Parse(format!("point {x} repeated")));
                }
                used[x as usize - 1] = true;
                images[x as usize - 1] = c[(idx + 1) % c.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parse cycle notation on `{1..n}`: `"(1 2)(3 4)"`, `"()"` or `"id"`.
    /// Cycles written without separators, like `"(12)(34)"`, are read digit by
    /// digit and are only accepted when `n <= 9`.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self, PermError> {
        let t = s.trim();
        if t == "id" || t.is_empty() {
            return Ok(Permutation::identity(n));
        }
        let mut cycles = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| PermError::Parse(s.to_string()))?;
            let close = open.find(')').ok_or_else(|| PermError::Parse(s.to_string()))?;
            let body = open[..close].trim();
            rest = open[close + 1..].trim_start();
            if body.is_empty() {
                continue;
            }
            let cycle: Vec<u32> = if body.contains(|c: char| c.is_whitespace() || c == ',') {
                body.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|w| !w.is_empty())
                    .map(|w| w.parse::<u32>().map_err(|_| PermError::Parse(s.to_string())))
                    .collect::<Result<_, _>>()?
            } else if body.len() == 1 {
                vec![body.parse().map_err(|_| PermError::Parse(s.to_string()))?]
            } else {
                if n > 9 {
                    return Err(PermError::AmbiguousShorthand(s.to_string()));
                }
                body.chars()
                    .map(|c| c.to_digit(10).ok_or_else(|| PermError::Parse(s.to_string())))
                    .collect::<Result<_, _>>()?
            };
            cycles.push(cycle);
        }
        Permutation::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of the point `x` (1-based).
    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize - 1]
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        self.try_compose(other).expect("permutation degree mismatch")
    }

    pub fn try_compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize - 1] = i as u32 + 1;
        }
        Permutation { images: inv }
    }

    /// `self ▷ h = self · h · self⁻¹`.
    pub fn conjugate(&self, h: &Permutation) -> Permutation {
        self.try_conjugate(h).expect("permutation degree mismatch")
    }

    pub fn try_conjugate(&self, h: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != h.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), h.degree()));
        }
        // (g h g⁻¹)(g(x)) = g(h(x))
        let mut out = vec![0; h.degree()];
        for x in 1..=h.degree() as u32 {
            out[self.apply(x) as usize - 1] = self.apply(h.apply(x));
        }
        Ok(Permutation { images: out })
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Permutation::identity(self.degree());
        for _ in 0..e.unsigned_abs() {
            out = base.compose(&out);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i as u32 + 1)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| other.apply(x) == self.apply(other.images[i]))
    }

    /// Cycles including fixed points, each starting at its least point, sorted
    /// by least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n as u32 {
            if seen[start as usize - 1] {
                continue;
            }
            let mut c = vec![start];
            seen[start as usize - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x as usize - 1] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut m = BTreeMap::new();
        for c in self.cycles() {
            *m.entry(c.len() as u32).or_insert(0u32) += 1;
        }
        CycleType { multiplicities: m }
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// +1 for even, -1 for odd permutations.
    pub fn sign(&self) -> i32 {
        let even_cycles = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Cycle text without fixed points; `"()"` for the identity. Points are
    /// space separated so the text parses back at any degree.
    pub fn to_cycle_string(&self) -> String {
        let cs: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let pts: Vec<String> = c.iter().map(u32::to_string).collect();
                format!("({})", pts.join(" "))
            })
            .collect();
        if cs.is_empty() {
            "()".to_string()
        } else {
            cs.concat()
        }
    }

    /// Compact `"(12)(34)"` form, only for degree at most 9.
    pub fn to_shorthand(&self) -> Option<String> {
        if self.degree() > 9 {
            return None;
        }
        Some(self.to_cycle_string().replace(' ', ""))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.images.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let images = Vec::<u32>::deserialize(d)?;
        Permutation::from_images(images).map_err(serde::de::Error::custom)
    }
}

/// Cycle type `(1^{m_1}, 2^{m_2}, …)`; lengths with multiplicity zero are
/// omitted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct CycleType {
    multiplicities: BTreeMap<u32, u32>,
}

impl CycleType {
    pub fn new(multiplicities: BTreeMap<u32, u32>) -> Self {
        CycleType {
            multiplicities: multiplicities.into_iter().filter(|&(_, m)| m > 0).collect(),
        }
    }

    /// Type `(k^n)`.
    pub fn uniform(k: u32, n: u32) -> Self {
        Self::new(BTreeMap::from([(k, n)]))
    }

    pub fn multiplicities(&self) -> &BTreeMap<u32, u32> {
        &self.multiplicities
    }

    pub fn degree(&self) -> usize {
        self.multiplicities.iter().map(|(&j, &m)| (j * m) as usize).sum()
    }

    /// Cycle lengths in non-increasing order.
    pub fn lengths(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .multiplicities
            .iter()
            .flat_map(|(&j, &m)| std::iter::repeat_n(j, m as usize))
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .multiplicities
            .iter()
            .rev()
            .map(|(j, m)| if *m == 1 { j.to_string() } else { format!("{j}^{m}") })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Visit every permutation of the given cycle type on `{1..n}` once, in a
/// fixed order.
pub fn for_each_in_class<F: FnMut(&Permutation)>(t: &CycleType, n: usize, mut f: F) -> Result<(), PermError> {
    if t.degree() != n {
        return Err(PermError::InconsistentType {
            ty: t.to_string(),
            degree: n,
        });
    }
    let mut remaining: BTreeMap<u32, u32> = t.multiplicities.clone();
    let mut images: Vec<u32> = (1..=n as u32).collect();
    let mut used = vec![false; n];
    fill(&mut remaining, &mut images, &mut used, &mut f);
    Ok(())
}

fn fill<F: FnMut(&Permutation)>(
    remaining: &mut BTreeMap<u32, u32>,
    images: &mut Vec<u32>,
    used: &mut Vec<bool>,
    f: &mut F,
) {
    let Some(first) = used.iter().position(|u| !u) else {
        f(&Permutation { images: images.clone() });
        return;
    };
    let lengths: Vec<u32> = remaining.iter().filter(|(_, &m)| m > 0).map(|(&j, _)| j).collect();
    for len in lengths {
        *remaining.get_mut(&len).unwrap() -= 1;
        used[first] = true;
        let mut cycle = vec![first as u32 + 1];
        extend_cycle(len as usize, &mut cycle, remaining, images, used, f);
        used[first] = false;
        *remaining.get_mut(&len).unwrap() += 1;
    }
}

fn extend_cycle<F: FnMut(&Permutation)>(
    len: usize,
    cycle: &mut Vec<u32>,
    remaining: &mut BTreeMap<u32, u32>,
    images: &mut Vec<u32>,
    used: &mut Vec<bool>,
    f: &mut F,
) {
    if cycle.len() == len {
        for (i, &x) in cycle.iter().enumerate() {
            images[x as usize - 1] = cycle[(i + 1) % len];
        }
        fill(remaining, images, used, f);
        for &x in cycle.iter() {
            images[x as usize - 1] = x;
        }
        return;
    }
    let first = cycle[0] as usize - 1;
    for p in first + 1..used.len() {
        if used[p] {
            continue;
        }
        used[p] = true;
        cycle.push(p as u32 + 1);
        extend_cycle(len, cycle, remaining, images, used, f);
        cycle.pop();
        used[p] = false;
    }
}

/// All permutations of the given cycle type, sorted by image vector.
pub fn conjugacy_class(t: &CycleType, n: usize) -> Result<Vec<Permutation>, PermError> {
    let mut out = Vec::new();
    for_each_in_class(t, n, |p| out.push(p.clone()))?;
    out.sort();
    Ok(out)
}
