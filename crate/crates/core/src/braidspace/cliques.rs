use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use super::{BraidError, Subrack, YDModule};
use crate::permgroup::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Bits::empty(n);
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }

    fn and_not(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & !b).collect())
    }

    fn or(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a | b).collect())
    }

    fn count_and(&self, o: &Bits) -> u32 {
        self.0.iter().zip(&o.0).map(|(a, b)| (a & b).count_ones()).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(w, &bits)| (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b))
    }
}

/// Commutation graph on a list of class elements: an edge joins two distinct
/// elements that commute.
#[derive(Clone, Debug)]
pub struct CommutingGraph {
    pub vertices: Vec<Permutation>,
    adj: Vec<Bits>,
}

impl CommutingGraph {
    pub fn new(vertices: Vec<Permutation>) -> Self {
        let n = vertices.len();
        let rows: Vec<Bits> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut b = Bits::empty(n);
                for j in 0..n {
                    if i != j && vertices[i].commutes_with(&vertices[j]) {
                        b.insert(j);
                    }
                }
                b
            })
            .collect();
        CommutingGraph { vertices, adj: rows }
    }

    /// The whole class, refused above `cap` elements.
    pub fn of_class(yd: &YDModule, cap: u128) -> Result<Self, BraidError> {
        Ok(CommutingGraph::new(yd.class_elements(cap)?))
    }

    /// The elements other than `π` that commute with `π`.
    pub fn neighborhood(yd: &YDModule) -> Self {
        CommutingGraph::new(yd.commuting_elements())
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.adj[v].iter().collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].0[b / 64] >> (b % 64) & 1 == 1
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.vertices.binary_search(p).ok()
    }

    /// Maximal cliques containing `start` that avoid `exclude`.
    fn cliques_from(&self, start: usize, exclude: &Bits, cap: usize) -> Result<Vec<Vec<usize>>, BraidError> {
        let mut out = Vec::new();
        let p = self.adj[start].and_not(exclude);
        let x = self.adj[start].and(exclude);
        self.expand(&mut vec![start], p, x, &mut out, cap)?;
        Ok(out)
    }

    fn expand(
        &self,
        r: &mut Vec<usize>,
        mut p: Bits,
        mut x: Bits,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<(), BraidError> {
        if p.is_empty() {
            if x.is_empty() {
                if out.len() >= cap {
                    return Err(BraidError::CapExceeded {
                        what: "maximal cliques",
                        needed: out.len() as u128 + 1,
                        cap: cap as u128,
                    });
                }
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return Ok(());
        }
        let pivot = p
            .or(&x)
            .iter()
            .max_by_key(|&u| (p.count_and(&self.adj[u]), std::cmp::Reverse(u)))
            .expect("p is not empty");
        let candidates: Vec<usize> = p.and_not(&self.adj[pivot]).iter().collect();
        for v in candidates {
            r.push(v);
            self.expand(r, p.and(&self.adj[v]), x.and(&self.adj[v]), out, cap)?;
            r.pop();
            p.remove(v);
            x.insert(v);
        }
        Ok(())
    }
}

/// All maximal cliques as sorted index lists, in lexicographic order.
/// Fails once more than `cap` would be produced.
pub fn maximal_cliques(g: &CommutingGraph, cap: usize) -> Result<Vec<Vec<usize>>, BraidError> {
    let n = g.len();
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let mut p = Bits::full(n);
    let mut x = Bits::empty(n);
    for v in 0..n {
        let found = {
            let mut sub = Vec::new();
            g.expand(
                &mut vec![v],
                p.and(&g.adj[v]),
                x.and(&g.adj[v]),
                &mut sub,
                cap.saturating_sub(out.len()),
            )?;
            sub
        };
        out.extend(found);
        p.remove(v);
        x.insert(v);
    }
    out.sort();
    Ok(out)
}

/// One centralizer orbit of maximal abelian subracks through `π`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubrackOrbit {
    /// Lexicographically least member, `π` first.
    pub subrack: Subrack,
    /// Number of maximal abelian subracks through `π` in this orbit.
    pub orbit_size: u128,
}

/// One conjugacy orbit of maximal abelian subracks of the whole class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InventoryEntry {
    pub size: usize,
    /// Number of subracks in the orbit.
    pub count: u128,
    /// Positions in [`CliqueInventory::orbits`] that this orbit meets.
    pub orbits: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueInventory {
    pub orbits: Vec<SubrackOrbit>,
    /// Conjugacy orbits; filled only under symmetry reduction.
    pub entries: Vec<InventoryEntry>,
    pub reduced: bool,
}

/// Elements of `N(π)` as index permutations under the centralizer.
struct Symmetry {
    images: Vec<Vec<u32>>,
}

impl Symmetry {
    fn new(yd: &YDModule, g: &CommutingGraph) -> Result<Self, BraidError> {
        let class = yd.class();
        let elements: Vec<Permutation> = class
            .centralizer_normal_forms()
            .iter()
            .map(|nf| class.assemble(nf))
            .collect();
        let images = elements
            .par_iter()
            .map(|z| {
                g.vertices
                    .iter()
                    .map(|t| g.index_of(&z.conjugate(t)).expect("N(π) is stable") as u32)
                    .collect()
            })
            .collect();
        Ok(Symmetry { images })
    }

    fn image(&self, z: usize, c: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = c.iter().map(|&x| self.images[z][x] as usize).collect();
        v.sort_unstable();
        v
    }

    fn all_images(&self, c: &[usize]) -> BTreeSet<Vec<usize>> {
        (0..self.images.len()).map(|z| self.image(z, c)).collect()
    }

    /// Orbits of single vertices, each listed ascending, ordered by least member.
    fn vertex_orbits(&self, n: usize) -> Vec<Vec<usize>> {
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for v in 0..n {
            if seen[v] {
                continue;
            }
            let orbit: BTreeSet<usize> = self.images.iter().map(|im| im[v] as usize).collect();
            for &w in &orbit {
                seen[w] = true;
            }
            out.push(orbit.into_iter().collect());
        }
        out
    }
}

fn to_subrack(yd: &YDModule, g: &CommutingGraph, clique: &[usize], label: String) -> Result<Subrack, BraidError> {
    let pi = yd.basepoint().clone();
    let mut elements = vec![pi.clone()];
    let mut transporters = vec![Permutation::identity(pi.degree())];
    for &v in clique {
        let t = g.vertices[v].clone();
        transporters.push(yd.transporter(&t)?);
        elements.push(t);
    }
    Subrack::new(label, &pi, elements, transporters)
}

/// Maximal abelian subracks of the class through `π`.
///
/// With `reduce`, one representative per centralizer orbit, found by
/// branching only on orbit representatives of vertices, plus the inventory
/// of conjugacy orbits of all maximal abelian subracks. Without it, every
/// maximal subrack through `π` as its own orbit. Fails past `cap` orbits
/// (raw cliques when not reducing).
pub fn maximal_abelian_subracks(yd: &YDModule, reduce: bool, cap: usize) -> Result<CliqueInventory, BraidError> {
    let g = CommutingGraph::neighborhood(yd);
    let n = g.len();
    if n == 0 {
        let t = Subrack::new(
            "clique-1",
            yd.basepoint(),
            vec![yd.basepoint().clone()],
            vec![Permutation::identity(yd.basepoint().degree())],
        )?;
        let reduced_entries = if reduce {
            vec![InventoryEntry {
                size: 1,
                count: yd.class().class_size(),
                orbits: vec![0],
            }]
        } else {
            Vec::new()
        };
        return Ok(CliqueInventory {
            orbits: vec![SubrackOrbit {
                subrack: t,
                orbit_size: 1,
            }],
            entries: reduced_entries,
            reduced: reduce,
        });
    }
    if !reduce {
        let cliques = maximal_cliques(&g, cap)?;
        let orbits = cliques
            .iter()
            .enumerate()
            .map(|(i, c)| {
                Ok(SubrackOrbit {
                    subrack: to_subrack(yd, &g, c, format!("clique-{}", i + 1))?,
                    orbit_size: 1,
                })
            })
            .collect::<Result<Vec<_>, BraidError>>()?;
        return Ok(CliqueInventory {
            orbits,
            entries: Vec::new(),
            reduced: false,
        });
    }

    let sym = Symmetry::new(yd, &g)?;
    let vorbits = sym.vertex_orbits(n);
    // branch on each orbit representative, excluding earlier orbits
    let branches: Vec<Result<Vec<Vec<usize>>, BraidError>> = vorbits
        .par_iter()
        .enumerate()
        .map(|(o, orbit)| {
            let mut exclude = Bits::empty(n);
            for earlier in &vorbits[..o] {
                for &v in earlier {
                    exclude.insert(v);
                }
            }
            g.cliques_from(orbit[0], &exclude, cap.saturating_mul(64).max(cap))
        })
        .collect();
    let mut reps: Vec<(Vec<usize>, u128)> = Vec::new();
    let mut owner: HashMap<Vec<usize>, usize> = HashMap::new();
    for found in branches {
        for c in found? {
            if owner.contains_key(&c) {
                continue;
            }
            let images = sym.all_images(&c);
            let canon = images.iter().next().expect("nonempty").clone();
            let id = reps.len();
            for im in &images {
                owner.insert(im.clone(), id);
            }
            reps.push((canon, images.len() as u128));
            if reps.len() > cap {
                return Err(BraidError::CapExceeded {
                    what: "subrack orbits",
                    needed: reps.len() as u128,
                    cap: cap as u128,
                });
            }
        }
    }
    // larger subracks first, then canonical order
    let mut order: Vec<usize> = (0..reps.len()).collect();
    order.sort_by(|&a, &b| {
        reps[b]
            .0
            .len()
            .cmp(&reps[a].0.len())
            .then_with(|| reps[a].0.cmp(&reps[b].0))
    });
    let mut position = vec![0; reps.len()];
    for (p, &id) in order.iter().enumerate() {
        position[id] = p;
    }
    let orbits = order
        .iter()
        .enumerate()
        .map(|(p, &id)| {
            Ok(SubrackOrbit {
                subrack: to_subrack(yd, &g, &reps[id].0, format!("clique-{}", p + 1))?,
                orbit_size: reps[id].1,
            })
        })
        .collect::<Result<Vec<_>, BraidError>>()?;

    // merge centralizer orbits that are conjugate under the whole group
    let mut parent: Vec<usize> = (0..orbits.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    let pi = yd.basepoint();
    for (p, orbit) in orbits.iter().enumerate() {
        for (x, h) in orbit.subrack.elements.iter().zip(&orbit.subrack.transporters) {
            if x == pi {
                continue;
            }
            let hinv = h.inverse();
            let mut moved: Vec<usize> = orbit
                .subrack
                .elements
                .iter()
                .filter(|t| *t != x)
                .map(|t| g.index_of(&hinv.conjugate(t)).expect("conjugate commutes with π"))
                .collect();
            moved.sort_unstable();
            let q = position[owner[&moved]];
            let (a, b) = (find(&mut parent, p), find(&mut parent, q));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for p in 0..orbits.len() {
        let r = find(&mut parent, p);
        groups.entry(r).or_default().push(p);
    }
    let class_size = yd.class().class_size();
    let entries = groups
        .into_values()
        .map(|members| {
            let size = orbits[members[0]].subrack.len();
            let through_pi: u128 = members.iter().map(|&p| orbits[p].orbit_size).sum();
            InventoryEntry {
                size,
                count: class_size * through_pi / size as u128,
                orbits: members,
            }
        })
        .collect();
    Ok(CliqueInventory {
        orbits,
        entries,
        reduced: true,
    })
}

/// Every maximal abelian subrack of the whole class, without symmetry
/// reduction. Intended for cross-checks on small classes.
pub fn unreduced_maximal_subracks(
    yd: &YDModule,
    class_cap: u128,
    clique_cap: usize,
) -> Result<Vec<Vec<Permutation>>, BraidError> {
    let g = CommutingGraph::of_class(yd, class_cap)?;
    let cliques = maximal_cliques(&g, clique_cap)?;
    Ok(cliques
        .into_iter()
        .map(|c| c.into_iter().map(|v| g.vertices[v].clone()).collect())
        .collect())
}

/// Centralizer orbits on the elements commuting with `π` (other than `π`):
/// least element and orbit size, ordered by least element.
pub fn neighborhood_orbits(yd: &YDModule) -> Result<Vec<(Permutation, usize)>, BraidError> {
    let g = CommutingGraph::neighborhood(yd);
    if g.is_empty() {
        return Ok(Vec::new());
    }
    let gens = yd.class().centralizer_generators();
    let n = g.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for v in 0..n {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        let mut stack = vec![v];
        let mut size = 0;
        while let Some(w) = stack.pop() {
            size += 1;
            for z in &gens {
                let u = g.index_of(&z.conjugate(&g.vertices[w])).expect("N(π) is stable");
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        out.push((g.vertices[v].clone(), size));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::UnmixedClass;
    use crate::reps::RepSpec;

    fn module(k: u32, n: u32, spec: &str) -> YDModule {
        let class = UnmixedClass::new(k, n).unwrap();
        let rep = spec
            .parse::<RepSpec>()
            .unwrap()
            .resolve(k, n)
            .unwrap()
            .build(&class)
            .unwrap();
        YDModule::new(rep)
    }

    #[test]
    fn bron_kerbosch_small_graphs() {
        // (2^2): triangle
        let yd = module(2, 2, "chi=k:0");
        let g = CommutingGraph::of_class(&yd, 100).unwrap();
        assert_eq!(g.len(), 3);
        assert!((0..3).all(|v| g.degree(v) == 2));
        assert_eq!(maximal_cliques(&g, 10).unwrap(), vec![vec![0, 1, 2]]);
        assert!(maximal_cliques(&g, 0).is_err());
    }

    #[test]
    fn cliques_match_subset_search() {
        let yd = module(2, 3, "chi=k:0");
        let g = CommutingGraph::of_class(&yd, 100).unwrap();
        let found = maximal_cliques(&g, 1000).unwrap();
        // brute force over all subsets of the 15 elements
        let n = g.len();
        let is_clique =
            |m: u32| (0..n).all(|a| m >> a & 1 == 0 || (0..n).all(|b| a == b || m >> b & 1 == 0 || g.has_edge(a, b)));
        let mut expected = Vec::new();
        for m in 1u32..1 << n {
            if is_clique(m) && (0..n).all(|v| m >> v & 1 == 1 || !is_clique(m | 1 << v)) {
                expected.push((0..n).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>());
            }
        }
        expected.sort();
        assert_eq!(found, expected);
    }

    #[test]
    fn k_cycle_single_subrack() {
        for k in [5u32, 6, 8, 12] {
            let yd = module(k, 1, "chi=(1)");
            let inv = maximal_abelian_subracks(&yd, true, 100).unwrap();
            assert_eq!(inv.orbits.len(), 1);
            let t = &inv.orbits[0].subrack;
            let pi = yd.basepoint();
            let mut expected: Vec<Permutation> = (1..k as i64)
                .filter(|&j| num_integer::gcd(j, k as i64) == 1)
                .map(|j| pi.pow(j))
                .collect();
            expected.sort();
            let mut got = t.elements.clone();
            got.sort();
            assert_eq!(got, expected, "k={k}");
            assert_eq!(inv.entries.len(), 1);
        }
    }

    #[test]
    fn s4_double_transpositions() {
        let yd = module(2, 2, "chi=k:0");
        let inv = maximal_abelian_subracks(&yd, true, 100).unwrap();
        assert_eq!(inv.orbits.len(), 1);
        assert_eq!(inv.orbits[0].subrack.len(), 3);
        assert_eq!(
            inv.entries,
            vec![InventoryEntry {
                size: 3,
                count: 1,
                orbits: vec![0]
            }]
        );
    }

    #[test]
    fn unreduced_lists_every_subrack_through_pi() {
        let yd = module(2, 3, "chi=k:0");
        let red = maximal_abelian_subracks(&yd, true, 100).unwrap();
        let raw = maximal_abelian_subracks(&yd, false, 100).unwrap();
        let total: u128 = red.orbits.iter().map(|o| o.orbit_size).sum();
        assert_eq!(raw.orbits.len() as u128, total);
    }

    #[test]
    fn neighborhood_orbit_sizes_sum() {
        for (k, n, spec) in [
            (2u32, 3u32, "chi=k:0"),
            (2, 4, "chi=k:0"),
            (4, 2, "chi=(0,0)"),
            (6, 2, "chi=(0,0)"),
        ] {
            let yd = module(k, n, spec);
            let total: usize = neighborhood_orbits(&yd).unwrap().iter().map(|o| o.1).sum();
            assert_eq!(total, yd.commuting_elements().len());
        }
    }
}
