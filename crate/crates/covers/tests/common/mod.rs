//! Shared corpus builders for the integration suites. Everything is seeded,
//! so every run sees the same instances.
#![allow(dead_code)] // each test binary uses its own slice of this module

use std::collections::BTreeMap;

use covers::analysis::generate_random;
use covers::cover::CoverInstance;
use covers::multigraph::{Multigraph, VertexId};
use covers::rng::SplitMix64;

/// Seeded oracle-scale corpus: n ≤ 6, r ≤ 4, at most 12 edge records,
/// loops and parallel edges included.
pub fn oracle_corpus(count: u64) -> Vec<CoverInstance> {
    (0..count)
        .map(|k| {
            let mut rng = SplitMix64::new(0xC0FFEE ^ (k * 0x9E37));
            let n = 1 + rng.below(6) as u32;
            let r = 1 + rng.below(4) as u32;
            let loops = rng.below(4) as u32;
            let edges = if n == 1 { 0 } else { rng.below(13 - loops as u64) as u32 };
            generate_random(n, r, edges, loops, k).expect("corpus parameters are valid")
        })
        .collect()
}

/// True if two records join the same unordered endpoint pair.
pub fn has_parallel_edges(g: &Multigraph) -> bool {
    let pairs = g.endpoint_multiset();
    pairs.windows(2).any(|w| w[0] == w[1] && w[0].0 != w[0].1)
}

/// Side-by-side union of two instances over the same index, relabelling the
/// second instance's vertices past the first.
pub fn disjoint_union(a: &CoverInstance, b: &CoverInstance) -> CoverInstance {
    assert_eq!(a.r(), b.r(), "union needs a common index");
    let shift = a.base().vertices().iter().map(|v| v.0 + 1).max().unwrap_or(0);
    let mut base =
        Multigraph::with_vertices(shift + b.base().vertices().iter().map(|v| v.0 + 1).max().unwrap_or(0));
    let mut alpha = BTreeMap::new();
    for rec in a.base().edges() {
        let e = base.add_edge(rec.tail, rec.head).unwrap();
        alpha.insert(e, a.perm(rec.id).unwrap().clone());
    }
    for rec in b.base().edges() {
        let e = base
            .add_edge(VertexId(rec.tail.0 + shift), VertexId(rec.head.0 + shift))
            .unwrap();
        alpha.insert(e, b.perm(rec.id).unwrap().clone());
    }
    CoverInstance::new(base, a.r(), alpha).unwrap()
}
