use super::class::UnmixedClass;
use super::perm::Permutation;
use super::PermError;

/// The involutions `σ`, `σ_(i,j)`, `σ̃_(i,j)` for even `k = 2r` with
/// `σ ▷ π = π⁻¹`, `σ_(i,j) ▷ π = π B_ij` and `σ̃_(i,j) ▷ π = (π B_ij)⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalInvolutions {
    pub sigma: Permutation,
    pub sigma_ij: Permutation,
    pub sigma_tilde_ij: Permutation,
}

impl UnmixedClass {
    /// `σ_j = ∏_{h=1}^{r} (2(j-1)r + h, 2jr - h + 1)`, reversing block `j`.
    pub fn block_reflection(&self, j: u32) -> Result<Permutation, PermError> {
        let k = self.k();
        if !k.is_multiple_of(2) {
            return Err(PermError::Unsupported("block reflections need even k"));
        }
        let r = k / 2;
        let pairs: Vec<Vec<u32>> = (1..=r).map(|h| vec![2 * (j - 1) * r + h, 2 * j * r - h + 1]).collect();
        Permutation::from_cycles(self.degree(), &pairs)
    }

    pub fn canonical_involutions(&self, i: u32, j: u32) -> Result<CanonicalInvolutions, PermError> {
        let k = self.k();
        if !k.is_multiple_of(2) {
            return Err(PermError::Unsupported("canonical involutions need even k"));
        }
        if !(1 <= i && i < j && j <= self.n()) {
            return Err(PermError::BadIndices { i, j });
        }
        let r = k / 2;
        let deg = self.degree();
        let mut sigma = Permutation::identity(deg);
        for b in 1..=self.n() {
            sigma = sigma.compose(&self.block_reflection(b)?);
        }
        // pairs written for blocks 1, 2 and moved onto blocks i, j
        let relabel = |x: u32| -> u32 {
            if x <= k {
                k * (i - 1) + x
            } else {
                k * (j - 1) + (x - k)
            }
        };
        let lift = |pairs: Vec<(u32, u32)>| -> Result<Permutation, PermError> {
            let cycles: Vec<Vec<u32>> = pairs.into_iter().map(|(a, b)| vec![relabel(a), relabel(b)]).collect();
            Permutation::from_cycles(deg, &cycles)
        };
        let sigma_ij = lift((1..=r).map(|h| (2 * h, 2 * r + 2 * h)).collect())?;
        let mut tilde = Vec::new();
        for a in (2..=2 * r).step_by(2) {
            if a < 4 * r + 2 - a {
                tilde.push((a, 4 * r + 2 - a));
            }
        }
        for a in (3..=r).step_by(2) {
            tilde.push((a, 2 * r + 2 - a));
        }
        for a in (2 * r + 3..=3 * r).step_by(2) {
            tilde.push((a, 6 * r + 2 - a));
        }
        // the two-block formula leaves the other cycles alone; reverse them too
        let mut sigma_tilde_ij = lift(tilde)?;
        for b in (1..=self.n()).filter(|&b| b != i && b != j) {
            sigma_tilde_ij = sigma_tilde_ij.compose(&self.block_reflection(b)?);
        }
        Ok(CanonicalInvolutions {
            sigma,
            sigma_ij,
            sigma_tilde_ij,
        })
    }
}
