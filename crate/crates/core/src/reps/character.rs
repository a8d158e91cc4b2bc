use std::fmt;

use serde::Serialize;

use crate::exactfield::RootOfUnity;
use crate::permgroup::Permutation;

/// Character `χ_u` of `(Z/k)^n`: `χ_u(A_j) = ζ_k^{u_j}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct GammaCharacter {
    pub k: u32,
    pub u: Vec<u32>,
}

/// Young subgroup `S_{P_1} × ⋯ × S_{P_T}` given by its parts (sets of
/// positions, each sorted, parts sorted by least element).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct YoungSubgroup {
    pub parts: Vec<Vec<u32>>,
}

impl YoungSubgroup {
    pub fn order(&self) -> u128 {
        self.parts
            .iter()
            .map(|p| (1..=p.len() as u128).product::<u128>())
            .product()
    }

    pub fn contains(&self, y: &Permutation) -> bool {
        self.parts.iter().all(|p| p.iter().all(|&x| p.contains(&y.apply(x))))
    }
}

impl GammaCharacter {
    pub fn new(k: u32, u: Vec<u32>) -> Self {
        GammaCharacter {
            k,
            u: u.into_iter().map(|x| x % k).collect(),
        }
    }

    /// `χ_(j)`: `u = (1, …, 1, 0, …, 0)` with `j` ones.
    pub fn weight(k: u32, n: u32, j: u32) -> Self {
        let u = (0..n).map(|i| u32::from(i < j)).collect();
        GammaCharacter::new(k, u)
    }

    pub fn n(&self) -> usize {
        self.u.len()
    }

    /// `χ(A^d) = ζ_k^{Σ u_j d_j}`.
    pub fn eval(&self, d: &[u32]) -> RootOfUnity {
        let e: u64 = self.u.iter().zip(d).map(|(&a, &b)| a as u64 * b as u64).sum();
        RootOfUnity::new(self.k, (e % self.k as u64) as i64)
    }

    /// `(b·χ)` with `(b·u)_{b(j)} = u_j`.
    pub fn act(&self, b: &Permutation) -> GammaCharacter {
        let mut u = vec![0; self.n()];
        for j in 1..=self.n() as u32 {
            u[b.apply(j) as usize - 1] = self.u[j as usize - 1];
        }
        GammaCharacter { k: self.k, u }
    }

    pub fn is_orbit_representative(&self) -> bool {
        self.u.windows(2).all(|w| w[0] >= w[1])
    }

    /// The non-increasing representative of the orbit.
    pub fn representative(&self) -> GammaCharacter {
        let mut u = self.u.clone();
        u.sort_unstable_by(|a, b| b.cmp(a));
        GammaCharacter { k: self.k, u }
    }

    /// Orbit under coordinate permutation (sorted) and the stabilizer.
    pub fn orbit_and_stabilizer(&self) -> (Vec<GammaCharacter>, YoungSubgroup) {
        let mut orbit = Vec::new();
        let mut u = self.u.clone();
        u.sort_unstable();
        loop {
            orbit.push(GammaCharacter {
                k: self.k,
                u: u.clone(),
            });
            let Some(i) = (1..u.len()).rev().find(|&i| u[i - 1] < u[i]) else {
                break;
            };
            let j = (i..u.len()).rev().find(|&j| u[j] > u[i - 1]).unwrap();
            u.swap(i - 1, j);
            u[i..].reverse();
        }
        let mut values: Vec<u32> = self.u.clone();
        values.sort_unstable();
        values.dedup();
        let mut parts: Vec<Vec<u32>> = values
            .iter()
            .map(|&v| (1..=self.n() as u32).filter(|&j| self.u[j as usize - 1] == v).collect())
            .collect();
        parts.sort();
        (orbit, YoungSubgroup { parts })
    }

    /// Value sum `Σ u_j`; the basepoint acts by `ζ_k^{Σ u_j}`.
    pub fn weight_sum(&self) -> u64 {
        self.u.iter().map(|&x| x as u64).sum()
    }
}

impl fmt::Display for GammaCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u: Vec<String> = self.u.iter().map(u32::to_string).collect();
        write!(f, "({})", u.join(","))
    }
}

/// Non-increasing vectors in `{0..k-1}^n`, lexicographically ascending.
pub fn orbit_representatives(k: u32, n: u32) -> Vec<GammaCharacter> {
    fn rec(n: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..=max {
            cur.push(v);
            rec(n, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as usize, k - 1, &mut Vec::new(), &mut out);
    out.sort();
    out.into_iter().map(|u| GammaCharacter { k, u }).collect()
}
