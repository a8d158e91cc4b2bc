use std::fmt;

use serde::{Deserialize, Serialize};

use super::perm::{CycleType, Permutation};
use super::PermError;

/// The class of type `(k^n)` in `S_{kn}` with basepoint
/// `π = A_1 ⋯ A_n`, `A_j = (kj-k+1 … kj)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct UnmixedClass {
    k: u32,
    n: u32,
}

/// Centralizer element `A_1^{d_1} ⋯ A_n^{d_n} · Φ⁻¹(b)`, where `Φ⁻¹(b)` moves
/// block `j` onto block `b(j)` preserving offsets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct NormalForm {
    pub d: Vec<u32>,
    pub b: Permutation,
}

impl UnmixedClass {
    pub fn new(k: u32, n: u32) -> Result<Self, PermError> {
        if k < 2 || n < 1 {
            return Err(PermError::BadClass { k, n });
        }
        Ok(UnmixedClass { k, n })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Ground set size `N = kn`.
    pub fn degree(&self) -> usize {
        (self.k * self.n) as usize
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::uniform(self.k, self.n)
    }

    fn base(&self, j: u32) -> u32 {
        self.k * (j - 1)
    }

    /// The k-cycle `A_j`, `1 <= j <= n`.
    pub fn a(&self, j: u32) -> Permutation {
        assert!((1..=self.n).contains(&j));
        let b = self.base(j);
        let cycle: Vec<u32> = (b + 1..=b + self.k).collect();
        Permutation::from_cycles(self.degree(), &[cycle]).expect("valid block cycle")
    }

    pub fn basepoint(&self) -> Permutation {
        let cycles: Vec<Vec<u32>> = (1..=self.n)
            .map(|j| (self.base(j) + 1..=self.base(j) + self.k).collect())
            .collect();
        Permutation::from_cycles(self.degree(), &cycles).expect("valid basepoint")
    }

    /// The offset-preserving block permutation `Φ⁻¹(b)`.
    pub fn block_perm(&self, b: &Permutation) -> Permutation {
        assert_eq!(b.degree(), self.n as usize);
        let mut images = vec![0; self.degree()];
        for j in 1..=self.n {
            for t in 1..=self.k {
                images[(self.base(j) + t - 1) as usize] = self.base(b.apply(j)) + t;
            }
        }
        Permutation::from_images(images).expect("block permutation")
    }

    /// `B_i`, swapping blocks `i` and `i+1`.
    pub fn b(&self, i: u32) -> Permutation {
        assert!(i >= 1 && i < self.n);
        let t = Permutation::from_cycles(self.n as usize, &[vec![i, i + 1]]).unwrap();
        self.block_perm(&t)
    }

    /// `B_ij = B_i B_{i+1} ⋯ B_{j-1} ⋯ B_{i+1} B_i`, built from the product.
    pub fn b_ij(&self, i: u32, j: u32) -> Permutation {
        assert!(i < j && j <= self.n);
        let mut word: Vec<u32> = (i..j).collect();
        word.extend((i..j - 1).rev());
        word.iter()
            .fold(Permutation::identity(self.degree()), |acc, &l| acc.compose(&self.b(l)))
    }

    /// `A_1, …, A_n, B_1, …, B_{n-1}`.
    pub fn centralizer_generators(&self) -> Vec<Permutation> {
        let mut g: Vec<Permutation> = (1..=self.n).map(|j| self.a(j)).collect();
        g.extend((1..self.n).map(|i| self.b(i)));
        g
    }

    /// `k^n · n!`.
    pub fn centralizer_order(&self) -> u128 {
        let fact: u128 = (1..=self.n as u128).product();
        (self.k as u128).pow(self.n) * fact
    }

    /// Size of the class, `(kn)! / (k^n n!)`.
    pub fn class_size(&self) -> u128 {
        let total: u128 = (1..=self.degree() as u128).product();
        total / self.centralizer_order()
    }

    pub fn normal_form(&self, g: &Permutation) -> Result<NormalForm, PermError> {
        if g.degree() != self.degree() {
            return Err(PermError::DegreeMismatch(g.degree(), self.degree()));
        }
        let k = self.k;
        let mut d = vec![0u32; self.n as usize];
        let mut b = vec![0u32; self.n as usize];
        for j in 1..=self.n {
            let y = g.apply(self.base(j) + 1) - 1;
            let target = y / k + 1;
            b[j as usize - 1] = target;
            d[target as usize - 1] = y % k;
        }
        let b = Permutation::from_images(b).map_err(|_| PermError::NotInCentralizer)?;
        let nf = NormalForm { d, b };
        if &self.assemble(&nf) != g {
            return Err(PermError::NotInCentralizer);
        }
        Ok(nf)
    }

    pub fn assemble(&self, nf: &NormalForm) -> Permutation {
        let k = self.k;
        let mut images = vec![0; self.degree()];
        for j in 1..=self.n {
            let tj = nf.b.apply(j);
            let dj = nf.d[tj as usize - 1];
            for t in 0..k {
                images[(self.base(j) + t) as usize] = self.base(tj) + (t + dj) % k + 1;
            }
        }
        Permutation::from_images(images).expect("assembled centralizer element")
    }

    pub fn nf_identity(&self) -> NormalForm {
        NormalForm {
            d: vec![0; self.n as usize],
            b: Permutation::identity(self.n as usize),
        }
    }

    /// `(d1, b1)(d2, b2) = (d1 + b1·d2, b1 b2)` with `(b·d)_{b(j)} = d_j`.
    pub fn nf_mul(&self, x: &NormalForm, y: &NormalForm) -> NormalForm {
        let mut d = x.d.clone();
        for j in 1..=self.n {
            let t = x.b.apply(j) as usize - 1;
            d[t] = (d[t] + y.d[j as usize - 1]) % self.k;
        }
        NormalForm {
            d,
            b: x.b.compose(&y.b),
        }
    }

    pub fn nf_inverse(&self, x: &NormalForm) -> NormalForm {
        let binv = x.b.inverse();
        // inverse is (-(b⁻¹·d), b⁻¹)
        let mut d = vec![0; self.n as usize];
        for j in 1..=self.n {
            let t = binv.apply(j) as usize - 1;
            d[t] = (self.k - x.d[j as usize - 1]) % self.k;
        }
        NormalForm { d, b: binv }
    }

    /// Normal form of the basepoint: `d = (1, …, 1)`, `b = id`.
    pub fn nf_basepoint(&self) -> NormalForm {
        NormalForm {
            d: vec![1 % self.k; self.n as usize],
            b: Permutation::identity(self.n as usize),
        }
    }

    /// Every element of the centralizer, as normal forms, in a fixed order.
    pub fn centralizer_normal_forms(&self) -> Vec<NormalForm> {
        let n = self.n as usize;
        let mut perms = Vec::new();
        permutations_of(n, &mut perms);
        let count = (self.k as usize).pow(self.n);
        let mut out = Vec::with_capacity(count * perms.len());
        for b in &perms {
            for code in 0..count {
                let mut c = code;
                let mut d = vec![0u32; n];
                for x in d.iter_mut() {
                    *x = (c % self.k as usize) as u32;
                    c /= self.k as usize;
                }
                out.push(NormalForm { d, b: b.clone() });
            }
        }
        out
    }

    /// Class elements that commute with the basepoint, excluding it, as
    /// normal forms.
    pub fn commuting_class_normal_forms(&self) -> Vec<NormalForm> {
        let pi = self.nf_basepoint();
        let ty = self.cycle_type();
        self.centralizer_normal_forms()
            .into_iter()
            .filter(|nf| *nf != pi && self.assemble(nf).cycle_type() == ty)
            .collect()
    }

    /// A `g` with `g ▷ π = t`: the j-th cycle of `t` (ordered by least point,
    /// starting there) is the image of `A_j`. For `k = 2` an involution is
    /// returned instead, see [`involution_transporter`].
    pub fn transporter(&self, t: &Permutation) -> Result<Permutation, PermError> {
        if self.k == 2 {
            return self.involution_transporter(t);
        }
        self.canonical_transporter(t)
    }

    pub fn canonical_transporter(&self, t: &Permutation) -> Result<Permutation, PermError> {
        self.check_type(t)?;
        let mut images = vec![0; self.degree()];
        for (j, c) in t.cycles().iter().enumerate() {
            let base = self.k * j as u32;
            for (s, &x) in c.iter().enumerate() {
                images[(base + s as u32) as usize] = x;
            }
        }
        Ok(Permutation::from_images(images).expect("transporter"))
    }

    /// For `k = 2`: walk each alternating cycle `x1 -π- x2 -t- x3 …` of the two
    /// matchings from its least point and reflect it through `x1`.
    pub fn involution_transporter(&self, t: &Permutation) -> Result<Permutation, PermError> {
        if self.k != 2 {
            return Err(PermError::Unsupported("involution transporter needs k = 2"));
        }
        self.check_type(t)?;
        let pi = self.basepoint();
        let n = self.degree();
        let mut images: Vec<u32> = (1..=n as u32).collect();
        let mut seen = vec![false; n];
        for x1 in 1..=n as u32 {
            if seen[x1 as usize - 1] {
                continue;
            }
            let mut walk = vec![x1];
            let mut x = x1;
            loop {
                let y = pi.apply(x);
                walk.push(y);
                let z = t.apply(y);
                if z == x1 {
                    break;
                }
                walk.push(z);
                x = z;
            }
            let len = walk.len();
            for (i, &v) in walk.iter().enumerate() {
                seen[v as usize - 1] = true;
                images[v as usize - 1] = walk[(len - i) % len];
            }
        }
        Ok(Permutation::from_images(images).expect("reflection is a bijection"))
    }

    fn check_type(&self, t: &Permutation) -> Result<(), PermError> {
        if t.degree() != self.degree() || t.cycle_type() != self.cycle_type() {
            return Err(PermError::TypeMismatch {
                expected: self.cycle_type().to_string(),
                found: t.cycle_type().to_string(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for UnmixedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}^{}) in S_{}", self.k, self.n, self.degree())
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.d.iter().map(u32::to_string).collect();
        write!(f, "d=({}), b={}", d.join(","), self.b)
    }
}

/// All permutations of `{1..n}` in lexicographic order of image vectors.
pub fn permutations_of(n: usize, out: &mut Vec<Permutation>) {
    let mut cur: Vec<u32> = (1..=n as u32).collect();
    loop {
        out.push(Permutation::from_images(cur.clone()).unwrap());
        // next lexicographic permutation
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn generators_for_k2() {
        let c = UnmixedClass::new(2, 3).unwrap();
        let g = c.centralizer_generators();
        let want = ["(12)", "(34)", "(56)", "(13)(24)", "(35)(46)"];
        for (x, w) in g.iter().zip(want) {
            assert_eq!(*x, p(w, 6));
        }
        let c4 = UnmixedClass::new(2, 4).unwrap();
        assert_eq!(c4.b(3), p("(57)(68)", 8));
        assert_eq!(c.centralizer_order(), 48);
        assert_eq!(c.class_size(), 15);
    }

    #[test]
    fn generators_commute_with_basepoint() {
        for (k, n) in [(2, 3), (3, 2), (4, 3)] {
            let c = UnmixedClass::new(k, n).unwrap();
            let pi = c.basepoint();
            assert_eq!(pi.cycle_type(), c.cycle_type());
            assert!(c.centralizer_generators().iter().all(|g| g.commutes_with(&pi)));
        }
    }

    #[test]
    fn normal_form_examples() {
        let c = UnmixedClass::new(2, 3).unwrap();
        let pi = c.basepoint();
        let nf = c.normal_form(&pi.compose(&c.b(2))).unwrap();
        assert_eq!(nf.d, vec![1, 1, 1]);
        assert_eq!(nf.b, p("(23)", 3));
        assert_eq!(c.normal_form(&Permutation::identity(6)).unwrap(), c.nf_identity());
        assert_eq!(c.normal_form(&c.a(2)).unwrap().d, vec![0, 1, 0]);
        assert_eq!(
            c.normal_form(&p("(12)(35)(46)", 6)).unwrap(),
            NormalForm {
                d: vec![1, 0, 0],
                b: p("(23)", 3)
            }
        );
        assert_eq!(c.normal_form(&p("(23)", 6)), Err(PermError::NotInCentralizer));
    }

    #[test]
    fn normal_form_group_law() {
        let c = UnmixedClass::new(3, 3).unwrap();
        let all = c.centralizer_normal_forms();
        assert_eq!(all.len() as u128, c.centralizer_order());
        for x in all.iter().step_by(7) {
            for y in all.iter().step_by(11) {
                let prod = c.assemble(x).compose(&c.assemble(y));
                assert_eq!(c.normal_form(&prod).unwrap(), c.nf_mul(x, y));
            }
            assert_eq!(c.nf_mul(x, &c.nf_inverse(x)), c.nf_identity());
        }
    }

    #[test]
    fn b_ij_is_block_transposition() {
        let c = UnmixedClass::new(3, 4).unwrap();
        for i in 1..4 {
            for j in i + 1..=4 {
                let nf = c.normal_form(&c.b_ij(i, j)).unwrap();
                assert_eq!(nf.d, vec![0; 4]);
                assert_eq!(nf.b, Permutation::from_cycles(4, &[vec![i, j]]).unwrap());
            }
        }
    }

    #[test]
    fn transporter_examples() {
        let c = UnmixedClass::new(2, 3).unwrap();
        let pi = c.basepoint();
        assert!(c.transporter(&pi).unwrap().is_identity());
        assert_eq!(c.transporter(&p("(12)(35)(46)", 6)).unwrap(), p("(45)", 6));
        assert_eq!(c.transporter(&p("(12)(36)(45)", 6)).unwrap(), p("(46)", 6));
        let c3 = UnmixedClass::new(3, 2).unwrap();
        let t = p("(1 5 2)(3 6 4)", 6);
        assert_eq!(c3.transporter(&t).unwrap().conjugate(&c3.basepoint()), t);
        assert!(c3.transporter(&p("(12)", 6)).is_err());
    }

    #[test]
    fn lex_permutations() {
        let mut v = Vec::new();
        permutations_of(3, &mut v);
        let imgs: Vec<Vec<u32>> = v.iter().map(|p| p.images().to_vec()).collect();
        assert_eq!(imgs[0], vec![1, 2, 3]);
        assert_eq!(imgs[5], vec![3, 2, 1]);
        assert_eq!(imgs.len(), 6);
    }
}
