use num_integer::Integer;
use serde::Serialize;

use super::BraidError;
use crate::permgroup::{Permutation, UnmixedClass};

/// An abelian subrack `T = {t_1, …, t_m}` of the class together with
/// transporters `g_a ▷ π = t_a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subrack {
    pub label: String,
    pub elements: Vec<Permutation>,
    pub transporters: Vec<Permutation>,
}

impl Subrack {
    /// Checks transporters, distinctness and pairwise commutation.
    pub fn new(
        label: impl Into<String>,
        pi: &Permutation,
        elements: Vec<Permutation>,
        transporters: Vec<Permutation>,
    ) -> Result<Subrack, BraidError> {
        assert_eq!(elements.len(), transporters.len());
        for (t, g) in elements.iter().zip(&transporters) {
            if g.conjugate(pi) != *t {
                return Err(BraidError::BadTransporter {
                    g: g.to_string(),
                    t: t.to_string(),
                });
            }
        }
        for (a, t) in elements.iter().enumerate() {
            for u in &elements[a + 1..] {
                if t == u {
                    return Err(BraidError::Repeated(t.to_string()));
                }
                if !t.commutes_with(u) {
                    return Err(BraidError::NotCommuting(t.to_string(), u.to_string()));
                }
            }
        }
        Ok(Subrack {
            label: label.into(),
            elements,
            transporters,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The subrack on a subset of positions, in the given order.
    pub fn select(&self, positions: &[usize], label: impl Into<String>) -> Subrack {
        Subrack {
            label: label.into(),
            elements: positions.iter().map(|&a| self.elements[a].clone()).collect(),
            transporters: positions.iter().map(|&a| self.transporters[a].clone()).collect(),
        }
    }

    /// `{π, σ⁺ ▷ π, σ⁻ ▷ π}` for `k = 2` and blocks `i < j`, with
    /// `σ⁺ = (2i 2j-1)`, `σ⁻ = (2i 2j)`. The pair `(n-1, n)` is the triple
    /// used for weight-one characters; `(2l-1, 2l)` gives `α_l`, `β_l`.
    pub fn block_pair_triple(class: &UnmixedClass, i: u32, j: u32) -> Result<Subrack, BraidError> {
        if class.k() != 2 {
            return Err(BraidError::Unsupported("block-pair triples need k = 2"));
        }
        if !(1 <= i && i < j && j <= class.n()) {
            return Err(BraidError::Perm(crate::permgroup::PermError::BadIndices { i, j }));
        }
        let deg = class.degree();
        let pi = class.basepoint();
        let plus = Permutation::from_cycles(deg, &[vec![2 * i, 2 * j - 1]])?;
        let minus = Permutation::from_cycles(deg, &[vec![2 * i, 2 * j]])?;
        let elements = vec![pi.clone(), plus.conjugate(&pi), minus.conjugate(&pi)];
        let transporters = vec![Permutation::identity(deg), plus, minus];
        Subrack::new(format!("triple({i},{j})"), &pi, elements, transporters)
    }

    /// For `k = 2`: `T = {(σ^±_{l_m} ⋯ σ^±_{l_1}) ▷ π} ∪ {π}` with
    /// `σ⁺_l = (4l-2 4l-1)`, `σ⁻_l = (4l-2 4l)`, `1 ≤ l ≤ ⌊n/2⌋`. Order: `π`,
    /// then by number of factors, support and signs with `+` first, so the
    /// list starts `π, α_1, β_1, α_2, β_2, …`.
    pub fn canonical(class: &UnmixedClass) -> Result<Subrack, BraidError> {
        if class.k() != 2 {
            return Err(BraidError::Unsupported("the canonical subrack needs k = 2"));
        }
        let deg = class.degree();
        let pi = class.basepoint();
        let big_l = class.n() / 2;
        let sigma = |l: u32, plus: bool| -> Permutation {
            let other = if plus { 4 * l - 1 } else { 4 * l };
            Permutation::from_cycles(deg, &[vec![4 * l - 2, other]]).expect("transposition")
        };
        // each l is absent, + or -; collect (factor count, support, signs)
        let mut keys: Vec<(usize, Vec<u32>, Vec<bool>)> = Vec::new();
        let total = 3usize.pow(big_l);
        for code in 1..total {
            let mut c = code;
            let mut support = Vec::new();
            let mut signs = Vec::new();
            for l in 1..=big_l {
                match c % 3 {
                    1 => {
                        support.push(l);
                        signs.push(false);
                    }
                    2 => {
                        support.push(l);
                        signs.push(true);
                    }
                    _ => {}
                }
                c /= 3;
            }
            keys.push((support.len(), support, signs));
        }
        // `false` sorts first, so encode + as false
        keys.sort();
        let mut elements = vec![pi.clone()];
        let mut transporters = vec![Permutation::identity(deg)];
        for (_, support, minus) in keys {
            let mut g = Permutation::identity(deg);
            for (&l, &m) in support.iter().zip(&minus) {
                g = sigma(l, !m).compose(&g);
            }
            elements.push(g.conjugate(&pi));
            transporters.push(g);
        }
        Subrack::new("canonical", &pi, elements, transporters)
    }

    /// `{π^j : gcd(j, k) = 1}` with the class's transporters. For `n = 1`
    /// this is the unique maximal abelian subrack through `π`.
    pub fn powers(class: &UnmixedClass) -> Result<Subrack, BraidError> {
        let pi = class.basepoint();
        let k = class.k() as i64;
        let mut elements = Vec::new();
        let mut transporters = Vec::new();
        for j in (1..k).filter(|&j| j.gcd(&k) == 1) {
            let t = pi.pow(j);
            transporters.push(if j == 1 {
                Permutation::identity(class.degree())
            } else {
                class.transporter(&t)?
            });
            elements.push(t);
        }
        Subrack::new("powers", &pi, elements, transporters)
    }

    /// `{π, π⁻¹, π B_ij, (π B_ij)⁻¹}` with transporters `id, σ, σ_(i,j),
    /// σ̃_(i,j)`; needs `k = 2r` with `r > 1` (for `k = 2` the first two
    /// elements coincide).
    pub fn quadruple(class: &UnmixedClass, i: u32, j: u32) -> Result<Subrack, BraidError> {
        if !class.k().is_multiple_of(2) || class.k() == 2 {
            return Err(BraidError::Unsupported("quadruple subracks need k = 2r with r > 1"));
        }
        let inv = class.canonical_involutions(i, j)?;
        let pi = class.basepoint();
        let pij = pi.compose(&class.b_ij(i, j));
        let elements = vec![pi.clone(), pi.inverse(), pij.clone(), pij.inverse()];
        let transporters = vec![
            Permutation::identity(class.degree()),
            inv.sigma,
            inv.sigma_ij,
            inv.sigma_tilde_ij,
        ];
        Subrack::new(format!("quadruple({i},{j})"), &pi, elements, transporters)
    }

    /// `{π, π⁻¹, A_1⁻¹ A_2 ⋯ A_n, (A_1⁻¹ A_2 ⋯ A_n)⁻¹}` with transporters
    /// `id, σ, σ_1, σ_2 ⋯ σ_n`; needs `k = 2r`, `r > 1`, `n ≥ 2`.
    pub fn inversion_quadruple(class: &UnmixedClass) -> Result<Subrack, BraidError> {
        if !class.k().is_multiple_of(2) || class.k() == 2 || class.n() < 2 {
            return Err(BraidError::Unsupported(
                "the inversion quadruple needs k = 2r with r > 1 and n >= 2",
            ));
        }
        let deg = class.degree();
        let pi = class.basepoint();
        let mut sigma = Permutation::identity(deg);
        let mut rest = Permutation::identity(deg);
        for b in 1..=class.n() {
            let s = class.block_reflection(b)?;
            sigma = sigma.compose(&s);
            if b > 1 {
                rest = rest.compose(&s);
            }
        }
        let t3 = class.a(1).inverse().compose(&class.a(1).inverse()).compose(&pi);
        let elements = vec![pi.clone(), pi.inverse(), t3.clone(), t3.inverse()];
        let transporters = vec![Permutation::identity(deg), sigma, class.block_reflection(1)?, rest];
        Subrack::new("inversion-quadruple", &pi, elements, transporters)
    }
}
