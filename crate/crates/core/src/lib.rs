// matrix code reads better with explicit indices
#![allow(clippy::needless_range_loop)]

pub mod braidspace;
pub mod exactfield;
pub mod exactla;
pub mod permgroup;
pub mod reps;
pub mod verdict;
