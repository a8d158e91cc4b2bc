//! Fixtures shared by the criterion benches.

use unmixed_core::braidspace::YDModule;
use unmixed_core::permgroup::UnmixedClass;
use unmixed_core::reps::{RepChoice, RepSpec};

/// Cases spanning each stage of the pipeline: gate, negativity, seed
/// witness and clique search.
pub const CASES: &[(&str, u32, u32, &str)] = &[
    ("gate_3x3", 3, 3, "chi=(1,1,1)"),
    ("negative_2x5", 2, 5, "chi=k:5;mu=trivial"),
    ("triple_2x5", 2, 5, "chi=k:5;mu=standard"),
    ("cycle_6x3", 6, 3, "chi=(1,1,1)"),
    ("negative_6x3", 6, 3, "chi=(3,3,3)"),
    ("triangles_2x4", 2, 4, "chi=k:1;mu=standard"),
];

pub fn choice(k: u32, n: u32, spec: &str) -> RepChoice {
    spec.parse::<RepSpec>()
        .and_then(|s| s.resolve(k, n))
        .expect("bench spec resolves")
}

pub fn module(k: u32, n: u32, spec: &str) -> YDModule {
    let class = UnmixedClass::new(k, n).expect("valid class");
    YDModule::new(choice(k, n, spec).build(&class).expect("cataloged"))
}
