//! Permutations, cycle types, conjugacy classes and the structured
//! centralizer `(Z/k)^n ⋊ S_n` of an unmixed permutation.

mod class;
mod involutions;
mod perm;

pub use class::{permutations_of, NormalForm, UnmixedClass};
pub use involutions::CanonicalInvolutions;
pub use perm::{conjugacy_class, for_each_in_class, CycleType, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("images {0:?} do not form a bijection")]
    NotBijection(Vec<u32>),
    #[error("point {point} outside 1..={degree}")]
    PointOutOfRange { point: u32, degree: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("cannot parse cycle notation {0:?}")]
    Parse(String),
    #[error("digit shorthand {0:?} is ambiguous for degree above 9; separate points with spaces")]
    AmbiguousShorthand(String),
    #[error("cycle type {ty} does not have degree {degree}")]
    InconsistentType { ty: String, degree: usize },
    #[error("need k >= 2 and n >= 1, got k={k}, n={n}")]
    BadClass { k: u32, n: u32 },
    #[error("element is not in the centralizer of the basepoint")]
    NotInCentralizer,
    #[error("expected cycle type {expected}, found {found}")]
    TypeMismatch { expected: String, found: String },
    #[error("invalid block indices ({i}, {j})")]
    BadIndices { i: u32, j: u32 },
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
}
