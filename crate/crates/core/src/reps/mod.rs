//! Irreducible representations of the centralizer `(Z/k)^n ⋊ S_n`.

mod character;
mod induced;
mod sn;
mod spec;

pub use character::{orbit_representatives, GammaCharacter, YoungSubgroup};
pub use induced::InducedRep;
pub use sn::{canonical_label, catalog, in_catalog, label_to_partition, Partition, SnIrrep};
pub use spec::{ChiSpec, RepChoice, RepSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no irrep of S_{m} is called {label:?}")]
    UnknownLabel { m: u32, label: String },
    #[error("the irrep {partition} of S_{m} is not in the built-in catalog")]
    CatalogGap { m: u32, partition: String },
    #[error("{0}")]
    Mismatch(String),
    #[error("the basepoint does not act by the expected scalar")]
    NotScalar,
}

/// Odometer step, last position fastest. False once every combination is used.
fn advance(idx: &mut [usize], options: &[Vec<Partition>]) -> bool {
    for t in (0..idx.len()).rev() {
        idx[t] += 1;
        if idx[t] < options[t].len() {
            return true;
        }
        idx[t] = 0;
    }
    false
}

/// One entry of [`enumerate_irreps`]. `gap` is set when some μ factor has no
/// built-in construction; such entries can be named but not evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrepEntry {
    pub choice: RepChoice,
    pub gap: bool,
}

/// Every irrep of `(Z/k)^n ⋊ S_n` up to isomorphism: characters by ascending
/// orbit representative, then μ factors in catalog order (gaps last).
pub fn enumerate_irreps(k: u32, n: u32) -> Vec<IrrepEntry> {
    let mut out = Vec::new();
    for chi in orbit_representatives(k, n) {
        let (_, young) = chi.orbit_and_stabilizer();
        let options: Vec<Vec<Partition>> = young
            .parts
            .iter()
            .map(|p| {
                let m = p.len() as u32;
                let mut opts = catalog(m);
                opts.extend(Partition::all(m).into_iter().filter(|q| !in_catalog(q)));
                opts
            })
            .collect();
        let mut idx = vec![0usize; options.len()];
        loop {
            let mu: Vec<Partition> = idx.iter().zip(&options).map(|(&i, o)| o[i].clone()).collect();
            let choice = RepChoice { chi: chi.clone(), mu };
            let gap = !choice.is_cataloged();
            out.push(IrrepEntry { choice, gap });
            if !advance(&mut idx, &options) {
                break;
            }
        }
    }
    out
}
