use std::collections::HashMap;

use super::character::{GammaCharacter, YoungSubgroup};
use super::sn::SnIrrep;
use super::RepError;
use crate::exactfield::{Cyclotomic, RootOfUnity};
use crate::exactla::Matrix;
use crate::permgroup::{NormalForm, Permutation, UnmixedClass};

/// `Ind_{Γ⋊Y}^{Γ⋊S_n}(χ ⊗ μ)` where `Y` is the stabilizer of `χ` and `μ` is a
/// tensor product of one catalog irrep per Young part.
#[derive(Clone, Debug)]
pub struct InducedRep {
    class: UnmixedClass,
    chi: GammaCharacter,
    young: YoungSubgroup,
    mus: Vec<SnIrrep>,
    cosets: Vec<Permutation>,
    coset_index: HashMap<Vec<Vec<u32>>, usize>,
    mu_dim: usize,
}

fn target_sets(b: &Permutation, parts: &[Vec<u32>]) -> Vec<Vec<u32>> {
    parts
        .iter()
        .map(|p| {
            let mut s: Vec<u32> = p.iter().map(|&x| b.apply(x)).collect();
            s.sort_unstable();
            s
        })
        .collect()
}

/// Ordered set partitions of `{1..n}` with the given block sizes,
/// lexicographic in the blocks.
fn ordered_set_partitions(n: u32, sizes: &[usize]) -> Vec<Vec<Vec<u32>>> {
    fn combos(pool: &[u32], size: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i]);
            combos(pool, size, i + 1, cur, out);
            cur.pop();
        }
    }
    fn rec(pool: Vec<u32>, sizes: &[usize], cur: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        let Some((&s, rest)) = sizes.split_first() else {
            out.push(cur.clone());
            return;
        };
        let mut choices = Vec::new();
        combos(&pool, s, 0, &mut Vec::new(), &mut choices);
        for c in choices {
            let remaining: Vec<u32> = pool.iter().copied().filter(|x| !c.contains(x)).collect();
            cur.push(c);
            rec(remaining, rest, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec((1..=n).collect(), sizes, &mut Vec::new(), &mut out);
    out
}

impl InducedRep {
    /// `chi` must be an orbit representative (non-increasing); `mus` holds one
    /// irrep per Young part, in part order.
    pub fn new(class: UnmixedClass, chi: GammaCharacter, mus: Vec<SnIrrep>) -> Result<Self, RepError> {
        if chi.k != class.k() || chi.n() != class.n() as usize {
            return Err(RepError::Mismatch("character does not match the class".into()));
        }
        if !chi.is_orbit_representative() {
            return Err(RepError::Mismatch(format!(
                "character {chi} is not a non-increasing orbit representative"
            )));
        }
        let (_, young) = chi.orbit_and_stabilizer();
        if young.parts.len() != mus.len() || young.parts.iter().zip(&mus).any(|(p, m)| p.len() != m.m() as usize) {
            return Err(RepError::Mismatch(
                "mu must give one irrep per stabilizer part, of matching degree".into(),
            ));
        }
        let sizes: Vec<usize> = young.parts.iter().map(Vec::len).collect();
        let n = class.n();
        let mut cosets = Vec::new();
        let mut coset_index = HashMap::new();
        for targets in ordered_set_partitions(n, &sizes) {
            let mut images = vec![0u32; n as usize];
            for (p, s) in young.parts.iter().zip(&targets) {
                for (&x, &y) in p.iter().zip(s) {
                    images[x as usize - 1] = y;
                }
            }
            coset_index.insert(targets, cosets.len());
            cosets.push(Permutation::from_images(images).expect("coset representative"));
        }
        let mu_dim = mus.iter().map(SnIrrep::dim).product();
        Ok(InducedRep {
            class,
            chi,
            young,
            mus,
            cosets,
            coset_index,
            mu_dim,
        })
    }

    pub fn class(&self) -> &UnmixedClass {
        &self.class
    }

    pub fn chi(&self) -> &GammaCharacter {
        &self.chi
    }

    pub fn mus(&self) -> &[SnIrrep] {
        &self.mus
    }

    pub fn young(&self) -> &YoungSubgroup {
        &self.young
    }

    pub fn dim(&self) -> usize {
        self.cosets.len() * self.mu_dim
    }

    /// Basis labels `(coset representative, μ index)` in matrix order.
    pub fn basis(&self) -> Vec<(Permutation, usize)> {
        self.cosets
            .iter()
            .flat_map(|c| (0..self.mu_dim).map(move |a| (c.clone(), a)))
            .collect()
    }

    pub fn cosets(&self) -> &[Permutation] {
        &self.cosets
    }

    fn mu_eval(&self, y: &Permutation) -> Matrix {
        let mut out = Matrix::identity(1);
        for (p, mu) in self.young.parts.iter().zip(&self.mus) {
            let local: Vec<u32> = p
                .iter()
                .map(|&x| {
                    let img = y.apply(x);
                    p.iter().position(|&z| z == img).expect("y preserves parts") as u32 + 1
                })
                .collect();
            let local = Permutation::from_images(local).expect("restriction to a part");
            out = out.kron(&mu.eval(&local));
        }
        out
    }

    /// For `g = (d, b)` and coset `i`: the coset `j` with `b b_i ∈ b_j Y`,
    /// the twist `χ(d')` and `y = b_j⁻¹ b b_i`.
    fn coset_step(&self, g: &NormalForm, i: usize) -> (usize, RootOfUnity, Permutation) {
        let bbi = g.b.compose(&self.cosets[i]);
        let j = self.coset_index[&target_sets(&bbi, &self.young.parts)];
        let bj = &self.cosets[j];
        let y = bj.inverse().compose(&bbi);
        let d_prime: Vec<u32> = (1..=self.class.n()).map(|x| g.d[bj.apply(x) as usize - 1]).collect();
        (j, self.chi.eval(&d_prime), y)
    }

    pub fn evaluate(&self, g: &NormalForm) -> Matrix {
        let dim = self.dim();
        let mut out = Matrix::zeros(dim, dim);
        for i in 0..self.cosets.len() {
            let (j, twist, y) = self.coset_step(g, i);
            let block = self.mu_eval(&y).scale(&twist.to_cyclotomic());
            out.set_block(j * self.mu_dim, i * self.mu_dim, &block);
        }
        out
    }

    pub fn evaluate_perm(&self, g: &Permutation) -> Result<Matrix, RepError> {
        let nf = self
            .class
            .normal_form(g)
            .map_err(|e| RepError::Mismatch(e.to_string()))?;
        Ok(self.evaluate(&nf))
    }

    /// Scalar by which the basepoint acts: `ζ_k^{Σ u_j}`. Checked against the
    /// evaluated matrix.
    pub fn pi_scalar(&self) -> Result<Cyclotomic, RepError> {
        let m = self.evaluate(&self.class.nf_basepoint());
        let s = m.as_scalar().ok_or(RepError::NotScalar)?;
        let expected = RootOfUnity::new(self.class.k(), (self.chi.weight_sum() % self.class.k() as u64) as i64);
        if s != expected.to_cyclotomic() {
            return Err(RepError::NotScalar);
        }
        Ok(s)
    }

    /// Same value as [`pi_scalar`] without building the matrix.
    pub fn pi_root(&self) -> RootOfUnity {
        RootOfUnity::new(self.class.k(), (self.chi.weight_sum() % self.class.k() as u64) as i64)
    }

    /// `ρ(g)` as a root of unity when `ρ` is one-dimensional.
    pub fn scalar(&self, g: &NormalForm) -> Option<RootOfUnity> {
        if self.dim() != 1 {
            return None;
        }
        // one part, so the coset is trivial and μ is trivial or sign on S_n
        let mut v = self.chi.eval(&g.d);
        let signed = self
            .mus
            .iter()
            .any(|m| m.m() > 1 && m.partition().0.len() == m.m() as usize);
        if signed && g.b.sign() < 0 {
            v = v.mul(&RootOfUnity::minus_one());
        }
        Some(v)
    }

    pub fn trace(&self, g: &NormalForm) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for i in 0..self.cosets.len() {
            let (j, twist, y) = self.coset_step(g, i);
            if j == i {
                acc = &acc + &(&self.mu_eval(&y).trace() * &twist.to_cyclotomic());
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(k: u32, n: u32, u: Vec<u32>, labels: &[&str]) -> InducedRep {
        let class = UnmixedClass::new(k, n).unwrap();
        let chi = GammaCharacter::new(k, u);
        let (_, young) = chi.orbit_and_stabilizer();
        let mus = young
            .parts
            .iter()
            .zip(labels)
            .map(|(p, l)| SnIrrep::from_label(p.len() as u32, l).unwrap())
            .collect();
        InducedRep::new(class, chi, mus).unwrap()
    }

    #[test]
    fn one_dimensional_sign_character() {
        let r = rep(2, 3, vec![1, 1, 1], &["trivial"]);
        assert_eq!(r.dim(), 1);
        let c = *r.class();
        for j in 1..=3 {
            assert!(r.evaluate_perm(&c.a(j)).unwrap().as_scalar().unwrap().is_minus_one());
        }
        assert!(r.evaluate_perm(&c.b(1)).unwrap().is_identity());
        assert!(r.pi_scalar().unwrap().is_minus_one());
    }

    #[test]
    fn dimension_of_rho3_case() {
        let r = rep(2, 4, vec![1, 0, 0, 0], &["trivial", "standard"]);
        assert_eq!(r.dim(), 8);
    }

    #[test]
    fn last_block_swap_matrix() {
        // χ_(1) ⊗ ε at n = 4: ρ(B_3) = Id_2 ⊕ swap
        let r = rep(2, 4, vec![1, 0, 0, 0], &["trivial", "trivial"]);
        let c = *r.class();
        let m = r.evaluate_perm(&c.b(3)).unwrap();
        let want = Matrix::from_ints(&[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 0, 1], vec![0, 0, 1, 0]]);
        assert_eq!(m, want);
    }

    #[test]
    fn trivial_rep_and_identity() {
        let r = rep(3, 2, vec![0, 0], &["trivial"]);
        let c = *r.class();
        for nf in c.centralizer_normal_forms() {
            assert!(r.evaluate(&nf).is_identity());
        }
        let r = rep(2, 3, vec![1, 0, 0], &["trivial", "sign"]);
        assert!(r.evaluate(&c_id(&r)).is_identity());
    }

    fn c_id(r: &InducedRep) -> NormalForm {
        r.class().nf_identity()
    }

    #[test]
    fn homomorphism_exhaustive_small() {
        let r = rep(4, 2, vec![3, 1], &["trivial", "trivial"]);
        let c = *r.class();
        let all = c.centralizer_normal_forms();
        for x in &all {
            for y in &all {
                assert_eq!(r.evaluate(&c.nf_mul(x, y)), &r.evaluate(x) * &r.evaluate(y));
            }
        }
    }

    #[test]
    fn trace_matches_matrix() {
        let r = rep(2, 3, vec![1, 1, 0], &["standard", "trivial"]);
        let c = *r.class();
        for nf in c.centralizer_normal_forms() {
            assert_eq!(r.trace(&nf), r.evaluate(&nf).trace());
        }
    }

    #[test]
    fn scalar_fast_path_matches_matrix() {
        for (k, n, u, l) in [
            (2, 3, vec![1, 1, 1], "sign"),
            (4, 2, vec![3, 3], "sign"),
            (6, 3, vec![3, 3, 3], "trivial"),
        ] {
            let r = rep(k, n, u, &[l]);
            let c = *r.class();
            for nf in c.centralizer_normal_forms().iter().step_by(7) {
                let s = r.scalar(nf).unwrap();
                assert_eq!(r.evaluate(nf).as_scalar().unwrap(), s.to_cyclotomic());
            }
        }
        assert!(rep(2, 3, vec![1, 0, 0], &["trivial", "trivial"])
            .scalar(&NormalForm {
                d: vec![0; 3],
                b: Permutation::identity(3)
            })
            .is_none());
    }

    #[test]
    fn pi_scalars() {
        assert!(rep(2, 3, vec![1, 1, 0], &["trivial", "trivial"])
            .pi_scalar()
            .unwrap()
            .is_one());
        assert!(rep(4, 2, vec![1, 1], &["trivial"]).pi_scalar().unwrap().is_minus_one());
    }
}
