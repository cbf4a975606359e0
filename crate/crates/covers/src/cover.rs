//! Cover instances: a base multigraph, an index r, and an arc function
//! assigning a permutation in Sym(r) to each stored edge orientation.
//!
//! Only the tail-to-head orientation of each edge stores a permutation; the
//! reverse arc is its inverse by definition, so the inverse-pair constraint on
//! opposite arcs can never be violated. Loops are single arcs and carry one
//! unconstrained permutation (not necessarily an involution).
//!
//! Contracting an edge e with permutation σ identifies the lifted vertex
//! (v, j^σ) with (u, j), where u and v are the tail and head of e. Chasing
//! that identification through every other lifted edge forces the rewrite
//! rules implemented in [`CoverInstance::contract`]; the unit tests pin the
//! derivation by comparing against contraction performed directly on the
//! expanded graph.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::multigraph::{EdgeId, GraphError, Multigraph, VertexId};
use crate::perm::Perm;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("index r must be at least 1")]
    ZeroIndex,
    #[error("no permutation stored for edge {0}")]
    MissingPerm(EdgeId),
    #[error("permutation stored for unknown edge {0}")]
    DanglingPerm(EdgeId),
    #[error("edge {edge} carries a permutation of degree {got}, expected {expected}")]
    WrongDegree { edge: EdgeId, got: usize, expected: usize },
    #[error("vertex map is not total: cover vertex {0} has no image")]
    PartialMap(VertexId),
    #[error("fibres over a connected base must share one size, found {0} and {1}")]
    UnequalFibres(usize, usize),
}

/// An r-fold cover presented as base graph + arc function.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverInstance {
    base: Multigraph,
    r: u32,
    alpha: BTreeMap<EdgeId, Perm>,
}

impl CoverInstance {
    /// Validates that `alpha` has exactly one permutation of degree `r` per
    /// edge of `base`.
    pub fn new(
        base: Multigraph,
        r: u32,
        alpha: BTreeMap<EdgeId, Perm>,
    ) -> Result<CoverInstance, CoverError> {
        if r == 0 {
            return Err(CoverError::ZeroIndex);
        }
        for rec in base.edges() {
            match alpha.get(&rec.id) {
                None => return Err(CoverError::MissingPerm(rec.id)),
                Some(p) if p.degree() != r as usize => {
                    return Err(CoverError::WrongDegree {
                        edge: rec.id,
                        got: p.degree(),
                        expected: r as usize,
                    })
                }
                Some(_) => {}
            }
        }
        if let Some(&extra) = alpha.keys().find(|e| base.edge(**e).is_err()) {
            return Err(CoverError::DanglingPerm(extra));
        }
        Ok(CoverInstance { base, r, alpha })
    }

    /// Cover with the identity permutation on every edge: r disjoint copies
    /// of the base.
    pub fn trivial(base: Multigraph, r: u32) -> Result<CoverInstance, CoverError> {
        let alpha = base
            .edges()
            .iter()
            .map(|rec| (rec.id, Perm::identity(r as usize)))
            .collect();
        CoverInstance::new(base, r, alpha)
    }

    pub fn base(&self) -> &Multigraph {
        &self.base
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// The permutation stored for the tail-to-head orientation of `e`.
    pub fn perm(&self, e: EdgeId) -> Option<&Perm> {
        self.alpha.get(&e)
    }

    /// The reverse-arc value, computed on demand as the inverse.
    pub fn reverse_perm(&self, e: EdgeId) -> Option<Perm> {
        self.alpha.get(&e).map(Perm::inverse)
    }

    pub fn vertex_count(&self) -> usize {
        self.base.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.base.edge_count()
    }

    /// Restriction of the instance to `base \ e`.
    pub fn delete(&self, e: EdgeId) -> Result<CoverInstance, CoverError> {
        let base = self.base.delete_edge(e)?;
        let mut alpha = self.alpha.clone();
        alpha.remove(&e);
        Ok(CoverInstance { base, r: self.r, alpha })
    }

    /// Contracts the non-loop edge `e` and rewrites the arc function.
    ///
    /// Let σ be the permutation on e, u its tail and v its head. Contraction
    /// identifies (v, j^σ) with (u, j); for every surviving edge f with
    /// permutation τ this forces, writing products left-factor-first:
    ///
    /// * head(f) = v, tail(f) outside {u, v}: f now heads at u with τσ⁻¹
    /// * tail(f) = v, head(f) outside {u, v}: f now starts at u with στ
    /// * parallel copy u → v: loop at u with τσ⁻¹
    /// * anti-parallel copy v → u: loop at u with στ
    /// * loop at v: loop at u with the conjugate στσ⁻¹
    /// * everything else: unchanged
    pub fn contract(&self, e: EdgeId) -> Result<CoverInstance, CoverError> {
        let rec = *self.base.edge(e)?;
        if rec.is_loop() {
            return Err(CoverError::Graph(GraphError::LoopContraction(e)));
        }
        let v = rec.head;
        let sigma = &self.alpha[&e];
        let sigma_inv = sigma.inverse();

        let base = self.base.contract_edge(e)?;
        let mut alpha = BTreeMap::new();
        for f in self.base.edges() {
            if f.id == e {
                continue;
            }
            let tau = &self.alpha[&f.id];
            let rewritten = if f.tail == v && f.head == v {
                sigma.compose_unchecked(tau).compose_unchecked(&sigma_inv)
            } else if f.head == v {
                // covers parallel copies u → v as well
                tau.compose_unchecked(&sigma_inv)
            } else if f.tail == v {
                // covers anti-parallel copies v → u as well
                sigma.compose_unchecked(tau)
            } else {
                tau.clone()
            };
            alpha.insert(f.id, rewritten);
        }
        Ok(CoverInstance { base, r: self.r, alpha })
    }

    /// Builds the explicit covering multigraph on base-vertex × {1..r}.
    ///
    /// A non-loop edge u → v with permutation σ lifts to the matching
    /// (u,i)-(v,i^σ). A loop at u lifts to exactly r records, one per index i:
    /// a loop at (u,i) when σ fixes i, otherwise one edge of a within-fibre
    /// cycle (so a 2-cycle of σ yields a double edge).
    pub fn expand(&self) -> ExplicitCover {
        let mut graph = Multigraph::new();
        let mut fibre_of = BTreeMap::new();
        let mut index_of = BTreeMap::new();
        let mut vertex_at = BTreeMap::new();
        for &bv in self.base.vertices() {
            for i in 1..=self.r {
                let xv = graph.add_vertex();
                fibre_of.insert(xv, bv);
                index_of.insert(xv, i);
                vertex_at.insert((bv, i), xv);
            }
        }
        let mut origin_of = BTreeMap::new();
        for rec in self.base.edges() {
            let sigma = &self.alpha[&rec.id];
            for i in 1..=self.r {
                let image = sigma.image0(i as usize - 1) as u32 + 1;
                let a = vertex_at[&(rec.tail, i)];
                let b = vertex_at[&(rec.head, image)];
                let lifted = graph.add_edge(a, b).expect("lift endpoints exist");
                origin_of.insert(lifted, rec.id);
            }
        }
        ExplicitCover {
            graph,
            fibre_of,
            index_of,
            origin_of,
            vertex_at,
        }
    }
}

/// The expanded cover graph together with its bookkeeping maps.
#[derive(Clone, Debug)]
pub struct ExplicitCover {
    graph: Multigraph,
    fibre_of: BTreeMap<VertexId, VertexId>,
    index_of: BTreeMap<VertexId, u32>,
    origin_of: BTreeMap<EdgeId, EdgeId>,
    vertex_at: BTreeMap<(VertexId, u32), VertexId>,
}

impl ExplicitCover {
    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    /// Base vertex under the covering projection.
    pub fn fibre_of(&self, v: VertexId) -> VertexId {
        self.fibre_of[&v]
    }

    /// Fibre index in {1..r}.
    pub fn index_of(&self, v: VertexId) -> u32 {
        self.index_of[&v]
    }

    /// (base vertex, fibre index) label of an explicit vertex.
    pub fn label(&self, v: VertexId) -> (VertexId, u32) {
        (self.fibre_of(v), self.index_of(v))
    }

    /// Explicit vertex sitting at (base vertex, index).
    pub fn vertex_at(&self, base: VertexId, index: u32) -> VertexId {
        self.vertex_at[&(base, index)]
    }

    /// All explicit vertices over `base`, in index order.
    pub fn fibre(&self, base: VertexId) -> Vec<VertexId> {
        self.vertex_at
            .iter()
            .filter(|&(&(bv, _), _)| bv == base)
            .map(|(_, &xv)| xv)
            .collect()
    }

    /// Base edge a lifted edge came from.
    pub fn origin_of(&self, e: EdgeId) -> EdgeId {
        self.origin_of[&e]
    }

    /// The covering projection as a vertex map.
    pub fn covering_map(&self) -> BTreeMap<VertexId, VertexId> {
        self.fibre_of.clone()
    }
}

/// Outcome of checking a vertex map for the covering property.
#[derive(Clone, Debug)]
pub struct CoveringCheck {
    pub ok: bool,
    /// Human-readable violations; the first names the first offending vertex
    /// or edge encountered.
    pub failures: Vec<String>,
}

/// Checks that `h` is a locally bijective homomorphism from `cover` onto
/// `base`: every edge maps onto an edge (loops onto loops), and around every
/// cover vertex the incident edges match those around its image one for one.
///
/// An edge whose endpoints project to the same base vertex is the lift of a
/// base loop. Such a lift is either a loop (its index was fixed) or one edge
/// of a within-fibre cycle, so it is the *incidences* that must balance: a
/// cover vertex needs exactly two loop-lift incidences per loop at its image,
/// and exactly as many fibre-crossing edges as its image has non-loop edges.
/// Returns diagnostics instead of erroring.
pub fn validate_covering_map(
    cover: &Multigraph,
    base: &Multigraph,
    h: &BTreeMap<VertexId, VertexId>,
) -> CoveringCheck {
    let mut failures = Vec::new();

    for &v in cover.vertices() {
        match h.get(&v) {
            None => failures.push(format!("cover vertex {v} has no image")),
            Some(&bv) if !base.has_vertex(bv) => {
                failures.push(format!("cover vertex {v} maps to unknown base vertex {bv}"))
            }
            Some(_) => {}
        }
    }
    if !failures.is_empty() {
        return CoveringCheck { ok: false, failures };
    }

    // homomorphism: the image of each edge must be realized by some base edge
    // (for h-degenerate edges that means a loop at the shared image)
    for rec in cover.edges() {
        let a = h[&rec.tail];
        let b = h[&rec.head];
        let realized = base
            .edges()
            .iter()
            .any(|f| (f.tail == a && f.head == b) || (f.tail == b && f.head == a));
        if !realized {
            failures.push(format!(
                "cover edge {} maps to ({a}, {b}) but the base has no such edge",
                rec.id
            ));
        }
    }

    // local bijection around every cover vertex
    for &v in cover.vertices() {
        let bv = h[&v];
        let (crossing, loop_lift_incidences) = projected_counts(cover, v, h);
        let (base_nonloop, base_loops) = nonloop_and_loop_counts(base, bv);
        if crossing != base_nonloop {
            failures.push(format!(
                "vertex {v}: {crossing} non-loop edges but its image {bv} has {base_nonloop}"
            ));
        }
        if loop_lift_incidences != 2 * base_loops {
            failures.push(format!(
                "vertex {v}: {loop_lift_incidences} loop-lift incidences but its image {bv} \
                 has {base_loops} loops (needs {})",
                2 * base_loops
            ));
        }
    }

    CoveringCheck {
        ok: failures.is_empty(),
        failures,
    }
}

/// (fibre-crossing edge count, loop-lift incidence count) at `v`; a cover
/// loop counts twice, a within-fibre non-loop edge once per endpoint at `v`.
fn projected_counts(
    g: &Multigraph,
    v: VertexId,
    h: &BTreeMap<VertexId, VertexId>,
) -> (usize, usize) {
    let mut crossing = 0;
    let mut degenerate = 0;
    for rec in g.edges() {
        if rec.is_loop() {
            if rec.tail == v {
                degenerate += 2;
            }
            continue;
        }
        if rec.tail != v && rec.head != v {
            continue;
        }
        if h[&rec.tail] == h[&rec.head] {
            degenerate += usize::from(rec.tail == v) + usize::from(rec.head == v);
        } else {
            crossing += 1;
        }
    }
    (crossing, degenerate)
}

fn nonloop_and_loop_counts(g: &Multigraph, v: VertexId) -> (usize, usize) {
    let mut nonloop = 0;
    let mut loops = 0;
    for rec in g.edges() {
        if rec.is_loop() {
            if rec.tail == v {
                loops += 1;
            }
        } else if rec.tail == v || rec.head == v {
            nonloop += 1;
        }
    }
    (nonloop, loops)
}

/// Preimage cardinality of each base vertex under `h`.
///
/// Over a connected base a covering map forces all fibres to one size, and
/// that is enforced here; a disconnected base may legitimately mix sizes
/// across components, so it is reported as-is.
pub fn fibre_sizes(
    cover: &Multigraph,
    base: &Multigraph,
    h: &BTreeMap<VertexId, VertexId>,
) -> Result<BTreeMap<VertexId, usize>, CoverError> {
    let mut sizes: BTreeMap<VertexId, usize> =
        base.vertices().iter().map(|&v| (v, 0)).collect();
    for &v in cover.vertices() {
        let &bv = h.get(&v).ok_or(CoverError::PartialMap(v))?;
        if !base.has_vertex(bv) {
            return Err(CoverError::Graph(GraphError::UnknownVertex(bv)));
        }
        *sizes.get_mut(&bv).expect("image is a base vertex") += 1;
    }
    if base.is_connected() {
        let mut values = sizes.values();
        if let Some(&first) = values.next() {
            if let Some(&bad) = values.find(|&&s| s != first) {
                return Err(CoverError::UnequalFibres(first, bad));
            }
        }
    }
    Ok(sizes)
}

/// The 3-fold cover of the triangle with arcs ε, (1 2) and (1 2 3); the
/// worked example used throughout the tests, with transversal polynomial
/// t^3 + 6t^2 + 12t + 8.
pub fn k3_example() -> CoverInstance {
    let base = crate::multigraph::triangle();
    let mut alpha = BTreeMap::new();
    alpha.insert(EdgeId(0), Perm::identity(3));
    alpha.insert(EdgeId(1), Perm::from_images(vec![2, 1, 3]).unwrap());
    alpha.insert(EdgeId(2), Perm::from_images(vec![2, 3, 1]).unwrap());
    CoverInstance::new(base, 3, alpha).unwrap()
}

/// K4 with identity on the outer 4-cycle and (1 2) on both diagonals; its
/// 2-fold expansion is the 3-cube with antipodal fibres.
pub fn k4_cube_example() -> CoverInstance {
    let base = crate::multigraph::k4();
    let swap = Perm::from_images(vec![2, 1]).unwrap();
    let mut alpha = BTreeMap::new();
    for k in 0..4 {
        alpha.insert(EdgeId(k), Perm::identity(2));
    }
    alpha.insert(EdgeId(4), swap.clone());
    alpha.insert(EdgeId(5), swap);
    CoverInstance::new(base, 2, alpha).unwrap()
}
