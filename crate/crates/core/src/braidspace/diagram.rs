use std::fmt::Write as _;

use serde::Serialize;

use crate::exactfield::RootOfUnity;

/// Generalized Dynkin diagram of a diagonal braiding `(q_ab)`: vertex `a`
/// carries `q_aa`, and `a ≠ b` are joined when `q_ab q_ba ≠ 1`, the edge
/// carrying that product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DynkinDiagram {
    pub names: Vec<String>,
    pub vertices: Vec<RootOfUnity>,
    /// `(a, b, q_ab q_ba)` with `a < b`, sorted.
    pub edges: Vec<(usize, usize, RootOfUnity)>,
}

impl DynkinDiagram {
    pub fn from_q(q: &[Vec<RootOfUnity>], names: Vec<String>) -> Self {
        let m = q.len();
        assert_eq!(names.len(), m);
        let vertices = (0..m).map(|a| q[a][a].reduced()).collect();
        let mut edges = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                let p = q[a][b].mul(&q[b][a]);
                if !p.is_one() {
                    edges.push((a, b, p.reduced()));
                }
            }
        }
        DynkinDiagram { names, vertices, edges }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge_label(&self, a: usize, b: usize) -> Option<RootOfUnity> {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.edges.iter().find(|e| e.0 == a && e.1 == b).map(|e| e.2)
    }

    pub fn neighbors(&self, a: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(x, y, _)| {
                if x == a {
                    Some(y)
                } else if y == a {
                    Some(x)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, a: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == a || e.1 == a).count()
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let m = self.len();
        let mut comp = vec![usize::MAX; m];
        let mut out = Vec::new();
        for start in 0..m {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for w in self.neighbors(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// The full subdiagram on `keep`, renumbered in the given order.
    pub fn induced(&self, keep: &[usize]) -> DynkinDiagram {
        let pos = |v: usize| keep.iter().position(|&x| x == v);
        let mut edges: Vec<(usize, usize, RootOfUnity)> = self
            .edges
            .iter()
            .filter_map(|&(a, b, l)| {
                let (x, y) = (pos(a)?, pos(b)?);
                Some(if x < y { (x, y, l) } else { (y, x, l) })
            })
            .collect();
        edges.sort_by_key(|e| (e.0, e.1));
        DynkinDiagram {
            names: keep.iter().map(|&a| self.names[a].clone()).collect(),
            vertices: keep.iter().map(|&a| self.vertices[a]).collect(),
            edges,
        }
    }

    /// Graphviz text: vertex labels `q_aa`, edge labels `q_ab q_ba`, both as
    /// `z(m,a)` in lowest terms.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph dynkin {\n");
        for (a, q) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "  v{a} [label=\"{}\", xlabel=\"{}\"];", q.reduced(), self.names[a]);
        }
        for (a, b, l) in &self.edges {
            let _ = writeln!(s, "  v{a} -- v{b} [label=\"{}\"];", l.reduced());
        }
        s.push_str("}\n");
        s
    }

    /// `labels[a][b]` is the edge label, `None` when `a` and `b` are not joined.
    pub fn label_matrix(&self) -> Vec<Vec<Option<RootOfUnity>>> {
        let mut out = vec![vec![None; self.len()]; self.len()];
        for &(a, b, l) in &self.edges {
            out[a][b] = Some(l);
            out[b][a] = Some(l);
        }
        out
    }
}
