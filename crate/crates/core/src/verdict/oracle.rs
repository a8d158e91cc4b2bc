use super::Outcome;
use crate::reps::{Partition, RepChoice};

fn is_linear(p: &Partition) -> bool {
    p.0.len() == 1 || p.0.iter().all(|&x| x == 1)
}

/// Closed-form classification of `M(C, ρ)` for `C` of type `(k^n)`, written
/// independently of the pipeline so the two can be compared. `None` when
/// `choice` does not fit `(k, n)`.
///
/// - `k` odd: infinite.
/// - `n = 1`, `k` even: negative iff `ρ(π) = -1` (this also covers `k = 2`).
/// - `k = 2`, `n > 1`: infinite for `n` even; for `n` odd negative exactly
///   for `χ_(n)` with `μ` trivial or sign.
/// - `k = 2r`, `r > 1`, `n > 1`: negative exactly when `deg ρ = 1`,
///   `ρ(π) = -1` and `χ = χ_{c,…,c}` with `c = r`, or `r` even and
///   `c ∈ {r/2, 3r/2}`.
pub fn theorem1_oracle(k: u32, n: u32, choice: &RepChoice) -> Option<Outcome> {
    if k < 2 || n < 1 || choice.chi.k != k || choice.chi.u.len() != n as usize {
        return None;
    }
    let inf = Some(Outcome::InfiniteDim);
    let neg = Some(Outcome::NegativeBraiding);
    let u = &choice.chi.u;
    if k % 2 == 1 {
        return inf;
    }
    let r = k / 2;
    if n == 1 {
        return if u[0] == r { neg } else { inf };
    }
    if k == 2 {
        if n.is_multiple_of(2) {
            return inf;
        }
        let top = u.iter().all(|&x| x == 1);
        let linear = choice.mu.len() == 1 && is_linear(&choice.mu[0]);
        return if top && linear { neg } else { inf };
    }
    let c = u[0];
    let degree_one = u.iter().all(|&x| x == c) && choice.mu.len() == 1 && is_linear(&choice.mu[0]);
    if !degree_one {
        return inf;
    }
    // ρ(π) = ζ_k^{cn}
    if (c as u64 * n as u64) % k as u64 != r as u64 {
        return inf;
    }
    if c == r || (r.is_multiple_of(2) && (2 * c == r || 2 * c == 3 * r)) {
        neg
    } else {
        inf
    }
}
