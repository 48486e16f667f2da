//! Workloads shared by the benchmarks in `benches/`.

use flc_core::{CharSpec, Group};

/// Characters of increasing cost for each basic group.
pub fn cases() -> Vec<CharSpec> {
    let mut out = Vec::new();
    for group in [Group::Gl, Group::Sp, Group::SoOdd, Group::OEven] {
        for (rank, lambda) in [(2, "2,1"), (3, "2,1,1"), (3, "3,2,1")] {
            out.push(CharSpec::parse(group, rank, lambda).expect("valid bench case"));
        }
    }
    out
}

/// Label used for benchmark ids, e.g. `sp/(2,1,0)`.
pub fn label(spec: &CharSpec) -> String {
    format!("{}/{}", spec.group, spec.lambda)
}
