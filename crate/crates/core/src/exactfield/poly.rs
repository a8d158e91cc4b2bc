//! Dense univariate polynomials used behind the cyclotomic field: integer
//! cyclotomic polynomials and rational polynomial division / gcd.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

/// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
pub(crate) fn cyclotomic_poly(m: u32) -> Vec<i64> {
    assert!(m >= 1);
    // x^m - 1 divided by every Phi_d with d | m, d < m.
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            let phi_d = cyclotomic_poly(d);
            num = exact_div_monic(&num, &phi_d);
        }
    }
    num
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    let mut quo = vec![0i64; nd - dd + 1];
    for i in (0..=nd - dd).rev() {
        let c = rem[i + dd];
        quo[i] = c;
        if c != 0 {
            for (t, &dc) in den.iter().enumerate() {
                rem[i + t] -= c * dc;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quo
}

pub(crate) fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Remainder of `p` modulo `d` (d nonzero, trimmed).
pub(crate) fn rem(p: &[Rational], d: &[Rational]) -> Vec<Rational> {
    divrem(p, d).1
}

pub(crate) fn divrem(p: &[Rational], d: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r: Vec<Rational> = p.to_vec();
    trim(&mut r);
    let dd = d.len() - 1;
    let lead = d[dd].clone();
    if r.len() < d.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - dd];
    for i in (0..q.len()).rev() {
        let c = &r[i + dd] / &lead;
        if !c.is_zero() {
            for (t, dc) in d.iter().enumerate() {
                r[i + t] -= &c * dc;
            }
        }
        q[i] = c;
    }
    r.truncate(dd);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

pub(crate) fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Inverse of `a` modulo the irreducible `modulus` via the extended Euclidean
/// algorithm. Returns `None` when `a` is zero modulo `modulus`.
pub(crate) fn inverse_mod(a: &[Rational], modulus: &[Rational]) -> Option<Vec<Rational>> {
    let mut r0: Vec<Rational> = modulus.to_vec();
    let mut r1: Vec<Rational> = rem(a, modulus);
    if r1.is_empty() {
        return None;
    }
    let mut s0: Vec<Rational> = Vec::new();
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r0 is a nonzero constant gcd; s0 * a = r0 (mod modulus).
    if r0.len() != 1 {
        return None;
    }
    let g = r0[0].clone();
    let mut inv: Vec<Rational> = s0.into_iter().map(|c| c / &g).collect();
    inv = rem(&inv, modulus);
    Some(inv)
}

pub(crate) fn int_poly(coeffs: &[i64]) -> Vec<Rational> {
    coeffs
        .iter()
        .map(|&c| Rational::from_integer(BigInt::from(c)))
        .collect()
}
