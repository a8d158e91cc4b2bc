//! Structure of the pairs `(π, t)` with `t` in the class commuting with `π`.
//!
//! Writing `t = A^d Φ⁻¹(b)` and `g⁻¹ π g = A^e Φ⁻¹(b')` for a transporter
//! `g ▷ π = t`, the block permutations `b` and `b'` always have the same
//! cycle type, and `Σ (d_j + e_j)` is even for odd `n`, and divisible by 4
//! when both `n` and `k/2` are even. These facts are what make the
//! degree-one characters `χ_{c,…,c}` negative.

use serde::Serialize;

use crate::permgroup::{CycleType, NormalForm, PermError, Permutation, UnmixedClass};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairRecord {
    pub t: Permutation,
    pub transporter: Permutation,
    /// Normal form of `t` itself.
    pub forward: NormalForm,
    /// Normal form of `g⁻¹ π g`.
    pub backward: NormalForm,
}

impl PairRecord {
    pub fn block_types(&self) -> (CycleType, CycleType) {
        (self.forward.b.cycle_type(), self.backward.b.cycle_type())
    }

    /// `Σ_j (d_j + e_j)` with exponents in `[0, k)`.
    pub fn exponent_sum(&self) -> u64 {
        self.forward.d.iter().chain(&self.backward.d).map(|&x| x as u64).sum()
    }
}

/// One record per class element commuting with `π`, other than `π`, using
/// the class's standard transporter and, when `twist` is given, `g · twist`
/// instead (`twist` must centralize `π`).
pub fn commuting_pair_records(class: &UnmixedClass, twist: Option<&Permutation>) -> Result<Vec<PairRecord>, PermError> {
    let pi = class.basepoint();
    let mut ts: Vec<Permutation> = class
        .commuting_class_normal_forms()
        .iter()
        .map(|nf| class.assemble(nf))
        .collect();
    ts.sort();
    ts.into_iter()
        .map(|t| {
            let mut g = class.transporter(&t)?;
            if let Some(z) = twist {
                g = g.compose(z);
            }
            let back = g.inverse().compose(&pi).compose(&g);
            Ok(PairRecord {
                forward: class.normal_form(&t)?,
                backward: class.normal_form(&back)?,
                transporter: g,
                t,
            })
        })
        .collect()
}

/// The exponent-sum claim that applies to `(k, n)`: `Some(m)` means the sum
/// must vanish mod `m`; `None` when neither claim covers the class.
pub fn exponent_sum_modulus(k: u32, n: u32) -> Option<u64> {
    if !k.is_multiple_of(2) {
        return None;
    }
    let r = k / 2;
    if n % 2 == 1 {
        Some(2)
    } else if r.is_multiple_of(2) {
        Some(4)
    } else {
        None
    }
}

/// Records violating either property; empty when both hold.
pub fn violations(class: &UnmixedClass, records: &[PairRecord]) -> Vec<String> {
    let modulus = exponent_sum_modulus(class.k(), class.n());
    let mut out = Vec::new();
    for rec in records {
        let (b, b2) = rec.block_types();
        if b != b2 {
            out.push(format!("{}: block types {b} and {b2} differ", rec.t));
        }
        if let Some(m) = modulus {
            if rec.exponent_sum() % m != 0 {
                out.push(format!(
                    "{}: exponent sum {} is not divisible by {m}",
                    rec.t,
                    rec.exponent_sum()
                ));
            }
        }
    }
    out
}
