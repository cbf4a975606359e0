//! Multigraphs with loops and parallel edges.
//!
//! A multigraph is a value: structural operations like contraction and
//! deletion return new instances, so intermediate graphs can be shared freely
//! inside a recursion tree. Vertices are dense integer ids; any string labels
//! live at the I/O boundary, not here. Edge ids are stable: contracting or
//! deleting one edge never renames the others.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} not in graph")]
    UnknownVertex(VertexId),
    #[error("edge {0} not in graph")]
    UnknownEdge(EdgeId),
    #[error("cannot contract a loop (edge {0})")]
    LoopContraction(EdgeId),
}

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub u32);

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// One stored edge. The record keeps a designated orientation (tail → head);
/// the underlying edge is undirected. A loop has `tail == head`.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct EdgeRecord {
    pub id: EdgeId,
    pub tail: VertexId,
    pub head: VertexId,
}

impl EdgeRecord {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    /// The endpoint other than `v`; for a loop this is `v` itself.
    pub fn other_end(&self, v: VertexId) -> VertexId {
        if self.tail == v {
            self.head
        } else {
            self.tail
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Multigraph {
    vertices: Vec<VertexId>, // sorted, distinct
    edges: Vec<EdgeRecord>,  // ids pairwise distinct, kept in insertion order
}

impl Multigraph {
    pub fn new() -> Multigraph {
        Multigraph::default()
    }

    /// A graph on vertices v0..v(n-1) with no edges.
    pub fn with_vertices(n: u32) -> Multigraph {
        Multigraph {
            vertices: (0..n).map(VertexId).collect(),
            edges: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self) -> VertexId {
        let id = VertexId(self.vertices.last().map_or(0, |v| v.0 + 1));
        self.vertices.push(id);
        id
    }

    /// Appends an edge record with the next free id, in the given orientation.
    pub fn add_edge(&mut self, tail: VertexId, head: VertexId) -> Result<EdgeId, GraphError> {
        if !self.has_vertex(tail) {
            return Err(GraphError::UnknownVertex(tail));
        }
        if !self.has_vertex(head) {
            return Err(GraphError::UnknownVertex(head));
        }
        let id = EdgeId(self.edges.iter().map(|e| e.id.0 + 1).max().unwrap_or(0));
        self.edges.push(EdgeRecord { id, tail, head });
        Ok(id)
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeRecord] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, e: EdgeId) -> Result<&EdgeRecord, GraphError> {
        self.edges
            .iter()
            .find(|rec| rec.id == e)
            .ok_or(GraphError::UnknownEdge(e))
    }

    /// Number of non-loop edges at `v` plus twice the number of loops at `v`.
    pub fn valency(&self, v: VertexId) -> Result<usize, GraphError> {
        if !self.has_vertex(v) {
            return Err(GraphError::UnknownVertex(v));
        }
        let mut total = 0;
        for rec in &self.edges {
            if rec.is_loop() {
                if rec.tail == v {
                    total += 2;
                }
            } else if rec.tail == v || rec.head == v {
                total += 1;
            }
        }
        Ok(total)
    }

    /// Contracts the non-loop edge `e`, merging its head into its tail.
    ///
    /// The merged vertex keeps the tail's id; the head's id is retired. Every
    /// other edge keeps its id with endpoints rewritten in place, so parallel
    /// and anti-parallel copies of `e` become loops at the merged vertex, as
    /// do loops that sat at the head.
    pub fn contract_edge(&self, e: EdgeId) -> Result<Multigraph, GraphError> {
        let rec = *self.edge(e)?;
        if rec.is_loop() {
            return Err(GraphError::LoopContraction(e));
        }
        let keep = rec.tail;
        let gone = rec.head;
        let vertices = self
            .vertices
            .iter()
            .copied()
            .filter(|&v| v != gone)
            .collect();
        let subst = |v: VertexId| if v == gone { keep } else { v };
        let edges = self
            .edges
            .iter()
            .filter(|f| f.id != e)
            .map(|f| EdgeRecord {
                id: f.id,
                tail: subst(f.tail),
                head: subst(f.head),
            })
            .collect();
        Ok(Multigraph { vertices, edges })
    }

    /// Removes the single record `e`; vertices are unchanged.
    pub fn delete_edge(&self, e: EdgeId) -> Result<Multigraph, GraphError> {
        self.edge(e)?;
        Ok(Multigraph {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().filter(|f| f.id != e).copied().collect(),
        })
    }

    /// Connected components under edge incidence, each block sorted, blocks
    /// ordered by their smallest vertex. Loops connect nothing new.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let index: BTreeMap<VertexId, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(k, &v)| (v, k))
            .collect();
        let mut adjacency = vec![Vec::new(); self.vertices.len()];
        for rec in &self.edges {
            if !rec.is_loop() {
                let a = index[&rec.tail];
                let b = index[&rec.head];
                adjacency[a].push(b);
                adjacency[b].push(a);
            }
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut blocks = Vec::new();
        for start in 0..self.vertices.len() {
            if seen[start] {
                continue;
            }
            let mut block = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(k) = stack.pop() {
                block.push(self.vertices[k]);
                for &next in &adjacency[k] {
                    if !seen[next] {
                        seen[next] = true;
                        stack.push(next);
                    }
                }
            }
            block.sort();
            blocks.push(block);
        }
        blocks
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.vertices.len() <= 1 || self.component_count() == 1
    }

    /// True iff every vertex has even valency; loops add 2, so they never
    /// change parity.
    pub fn all_degrees_even(&self) -> bool {
        let mut parity: BTreeMap<VertexId, bool> =
            self.vertices.iter().map(|&v| (v, false)).collect();
        for rec in &self.edges {
            if !rec.is_loop() {
                parity.entry(rec.tail).and_modify(|p| *p = !*p);
                parity.entry(rec.head).and_modify(|p| *p = !*p);
            }
        }
        parity.values().all(|&odd| !odd)
    }

    /// Connected, acyclic, loop-free: exactly n-1 edges forming one component.
    pub fn is_tree(&self) -> bool {
        !self.vertices.is_empty()
            && self.edge_count() == self.vertex_count() - 1
            && self.edges.iter().all(|e| !e.is_loop())
            && self.is_connected()
    }

    /// Canonical multiset of undirected endpoint pairs, loops as (v, v).
    pub fn endpoint_multiset(&self) -> Vec<(VertexId, VertexId)> {
        let mut pairs: Vec<(VertexId, VertexId)> = self
            .edges
            .iter()
            .map(|e| {
                if e.tail <= e.head {
                    (e.tail, e.head)
                } else {
                    (e.head, e.tail)
                }
            })
            .collect();
        pairs.sort();
        pairs
    }
}

/// Triangle a-b, b-c, c-a on vertices v0, v1, v2; handy in tests and docs.
pub fn triangle() -> Multigraph {
    let mut g = Multigraph::with_vertices(3);
    g.add_edge(VertexId(0), VertexId(1)).unwrap();
    g.add_edge(VertexId(1), VertexId(2)).unwrap();
    g.add_edge(VertexId(2), VertexId(0)).unwrap();
    g
}

/// Complete graph on 4 vertices: the 4-cycle v0-v1-v2-v3 plus both diagonals.
pub fn k4() -> Multigraph {
    let mut g = Multigraph::with_vertices(4);
    for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)] {
        g.add_edge(VertexId(a), VertexId(b)).unwrap();
    }
    g
}

/// Path on n vertices v0-v1-...-v(n-1).
pub fn path(n: u32) -> Multigraph {
    let mut g = Multigraph::with_vertices(n);
    for k in 1..n {
        g.add_edge(VertexId(k - 1), VertexId(k)).unwrap();
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn valency_examples() {
        let mut g = Multigraph::with_vertices(2);
        assert_eq!(g.valency(VertexId(0)).unwrap(), 0); // isolated
        g.add_edge(VertexId(0), VertexId(0)).unwrap(); // loop
        g.add_edge(VertexId(0), VertexId(1)).unwrap();
        assert_eq!(g.valency(VertexId(0)).unwrap(), 3); // loop counts twice
        assert_eq!(g.valency(VertexId(1)).unwrap(), 1);
        for v in k4().vertices() {
            assert_eq!(k4().valency(*v).unwrap(), 3);
        }
        assert!(matches!(
            g.valency(VertexId(9)),
            Err(GraphError::UnknownVertex(VertexId(9)))
        ));
    }

    #[test]
    fn contract_triangle_gives_parallel_pair() {
        let g = triangle();
        let h = g.contract_edge(EdgeId(0)).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 2);
        // both remaining edges join the merged vertex v0 to v2
        assert_eq!(
            h.endpoint_multiset(),
            vec![(VertexId(0), VertexId(2)), (VertexId(0), VertexId(2))]
        );
        assert!(h.edges().iter().all(|e| !e.is_loop()));
    }

    #[test]
    fn contract_double_edge_gives_loop() {
        let mut g = Multigraph::with_vertices(2);
        g.add_edge(VertexId(0), VertexId(1)).unwrap();
        g.add_edge(VertexId(0), VertexId(1)).unwrap();
        let h = g.contract_edge(EdgeId(0)).unwrap();
        assert_eq!(h.vertex_count(), 1);
        assert_eq!(h.edge_count(), 1);
        assert!(h.edges()[0].is_loop());
        assert_eq!(h.edges()[0].tail, VertexId(0));
        assert_eq!(h.edges()[0].id, EdgeId(1)); // id of the surviving copy
    }

    #[test]
    fn contract_path_keeps_tail_id() {
        let g = path(3);
        let h = g.contract_edge(EdgeId(0)).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 1);
        assert!(!h.edges()[0].is_loop());
        // v1 was merged into v0, so the surviving edge runs v0-v2
        assert_eq!(h.endpoint_multiset(), vec![(VertexId(0), VertexId(2))]);
        assert!(h.has_vertex(VertexId(0)));
        assert!(!h.has_vertex(VertexId(1)));
    }

    #[test]
    fn contract_rejects_loops_and_unknown_edges() {
        let mut g = Multigraph::with_vertices(1);
        let loop_id = g.add_edge(VertexId(0), VertexId(0)).unwrap();
        assert!(matches!(
            g.contract_edge(loop_id),
            Err(GraphError::LoopContraction(_))
        ));
        assert!(matches!(
            g.contract_edge(EdgeId(77)),
            Err(GraphError::UnknownEdge(_))
        ));
    }

    #[test]
    fn delete_examples() {
        let g = triangle();
        let h = g.delete_edge(EdgeId(1)).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 2);

        let mut looped = Multigraph::with_vertices(1);
        let l = looped.add_edge(VertexId(0), VertexId(0)).unwrap();
        let bare = looped.delete_edge(l).unwrap();
        assert_eq!(bare.vertex_count(), 1);
        assert_eq!(bare.edge_count(), 0);

        let mut double = Multigraph::with_vertices(2);
        double.add_edge(VertexId(0), VertexId(1)).unwrap();
        double.add_edge(VertexId(0), VertexId(1)).unwrap();
        let single = double.delete_edge(EdgeId(0)).unwrap();
        assert_eq!(single.edge_count(), 1);
        assert_eq!(single.edges()[0].id, EdgeId(1));

        assert!(matches!(
            g.delete_edge(EdgeId(9)),
            Err(GraphError::UnknownEdge(_))
        ));
    }

    #[test]
    fn components_examples() {
        assert_eq!(Multigraph::with_vertices(4).component_count(), 4);
        assert_eq!(triangle().component_count(), 1);
        let mut g = triangle();
        g.add_vertex();
        assert_eq!(g.component_count(), 2);
        // loops connect nothing
        let mut h = Multigraph::with_vertices(2);
        h.add_edge(VertexId(0), VertexId(0)).unwrap();
        assert_eq!(h.component_count(), 2);
    }

    #[test]
    fn degree_parity_examples() {
        assert!(!k4().all_degrees_even());
        assert!(triangle().all_degrees_even());
        let mut loops = Multigraph::with_vertices(1);
        for _ in 0..5 {
            loops.add_edge(VertexId(0), VertexId(0)).unwrap();
        }
        assert!(loops.all_degrees_even());
    }

    #[test]
    fn tree_recognition() {
        assert!(path(5).is_tree());
        assert!(!triangle().is_tree());
        let mut g = path(2);
        g.add_vertex(); // disconnected
        assert!(!g.is_tree());
        let mut h = Multigraph::with_vertices(1);
        h.add_edge(VertexId(0), VertexId(0)).unwrap();
        assert!(!h.is_tree());
    }

    /// Builds an arbitrary small multigraph from a seed of endpoint choices.
    fn arb_graph() -> impl Strategy<Value = Multigraph> {
        (1u32..6, prop::collection::vec((0u32..6, 0u32..6), 0..10)).prop_map(|(n, pairs)| {
            let mut g = Multigraph::with_vertices(n);
            for (a, b) in pairs {
                g.add_edge(VertexId(a % n), VertexId(b % n)).unwrap();
            }
            g
        })
    }

    proptest! {
        #[test]
        fn handshake_including_loops(g in arb_graph()) {
            let total: usize = g.vertices().iter().map(|&v| g.valency(v).unwrap()).sum();
            prop_assert_eq!(total, 2 * g.edge_count());
        }

        #[test]
        fn contraction_counts(g in arb_graph()) {
            for rec in g.edges().iter().filter(|e| !e.is_loop()) {
                let h = g.contract_edge(rec.id).unwrap();
                prop_assert_eq!(h.vertex_count(), g.vertex_count() - 1);
                prop_assert_eq!(h.edge_count(), g.edge_count() - 1);
            }
        }

        #[test]
        fn delete_then_restore_valencies(g in arb_graph()) {
            for rec in g.edges().iter().copied() {
                let mut h = g.delete_edge(rec.id).unwrap();
                h.add_edge(rec.tail, rec.head).unwrap();
                for &v in g.vertices() {
                    prop_assert_eq!(h.valency(v).unwrap(), g.valency(v).unwrap());
                }
            }
        }

        #[test]
        fn components_ignore_edge_order(g in arb_graph(), seed in any::<u64>()) {
            let mut shuffled = g.edges().to_vec();
            let mut rng = crate::rng::SplitMix64::new(seed);
            for i in (1..shuffled.len()).rev() {
                let j = rng.below(i as u64 + 1) as usize;
                shuffled.swap(i, j);
            }
            let mut h = Multigraph::with_vertices(g.vertex_count() as u32);
            for rec in shuffled {
                h.add_edge(rec.tail, rec.head).unwrap();
            }
            prop_assert_eq!(h.components(), g.components());
        }
    }
}
