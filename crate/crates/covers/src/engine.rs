//! The two transversal-polynomial engines and the bivariate enumerator.
//!
//! `xi_brute` walks all r^n transversals and histograms induced edge counts;
//! it is the oracle everything else is checked against. `xi_dc` runs the
//! contraction-deletion recursion down to loops-only bases, where the
//! polynomial factors into per-vertex terms. Both must agree coefficient for
//! coefficient on every instance, independent of edge-selection policy.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use thiserror::Error;

use crate::cover::CoverInstance;
use crate::multigraph::{EdgeId, Multigraph, VertexId};
use crate::poly::{BiPolynomial, IntPolynomial};

/// Refuse exhaustive enumeration beyond this many transversals.
pub const DEFAULT_TRANSVERSAL_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("{transversals} transversals exceed the enumeration budget of {budget}")]
    BudgetExceeded { transversals: u128, budget: u64 },
    #[error("transversal stores no choice for vertex {0}")]
    MissingChoice(VertexId),
    #[error("transversal picks index {index} at vertex {vertex}, outside 1..={r}")]
    ChoiceOutOfRange { vertex: VertexId, index: u32, r: u32 },
}

/// A selection of one fibre index per base vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transversal {
    choice: BTreeMap<VertexId, u32>,
}

impl Transversal {
    pub fn new(choice: BTreeMap<VertexId, u32>) -> Transversal {
        Transversal { choice }
    }

    pub fn choice(&self, v: VertexId) -> Option<u32> {
        self.choice.get(&v).copied()
    }
}

impl FromIterator<(VertexId, u32)> for Transversal {
    fn from_iter<T: IntoIterator<Item = (VertexId, u32)>>(iter: T) -> Self {
        Transversal {
            choice: iter.into_iter().collect(),
        }
    }
}

/// Number of edges of the transversal subgraph induced by `t`.
///
/// A non-loop edge u → v with permutation σ contributes when the choice at v
/// is the σ-image of the choice at u (each parallel record counts
/// separately); a loop contributes when its permutation fixes the choice at
/// its vertex.
pub fn transversal_edge_count(
    c: &CoverInstance,
    t: &Transversal,
) -> Result<usize, EngineError> {
    let r = c.r();
    let mut pick = BTreeMap::new();
    for &v in c.base().vertices() {
        let i = t.choice(v).ok_or(EngineError::MissingChoice(v))?;
        if i == 0 || i > r {
            return Err(EngineError::ChoiceOutOfRange { vertex: v, index: i, r });
        }
        pick.insert(v, i);
    }
    let mut count = 0;
    for rec in c.base().edges() {
        let sigma = c.perm(rec.id).expect("validated instance");
        let at_tail = pick[&rec.tail];
        let image = sigma.apply(at_tail).expect("choice in range");
        if image == pick[&rec.head] {
            count += 1;
        }
    }
    Ok(count)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XiMethod {
    Brute,
    ContractionDeletion,
}

/// Counters surfaced through the CLI's --stats flag.
#[derive(Clone, Debug, Default)]
pub struct EngineStats {
    pub nodes: u64,
    pub leaves: u64,
    pub max_depth: u32,
    pub wall: Duration,
}

/// A computed transversal polynomial with its provenance.
#[derive(Clone, Debug)]
pub struct XiResult {
    pub poly: IntPolynomial,
    pub method: XiMethod,
    pub stats: EngineStats,
}

impl XiResult {
    fn new(poly: IntPolynomial, method: XiMethod, stats: EngineStats, c: &CoverInstance) -> XiResult {
        let expected = BigInt::from(c.r()).pow(c.vertex_count() as u32);
        assert_eq!(
            poly.eval(&BigInt::from(1)),
            expected,
            "transversal polynomial fails the r^n normalization"
        );
        XiResult { poly, method, stats }
    }
}

fn budgeted_total(c: &CoverInstance, budget: u64) -> Result<u128, EngineError> {
    let total = (c.r() as u128)
        .checked_pow(c.vertex_count() as u32)
        .unwrap_or(u128::MAX);
    if total > budget as u128 {
        return Err(EngineError::BudgetExceeded { transversals: total, budget });
    }
    Ok(total)
}

/// Per-level checks for the mixed-radix enumeration: each edge is decided at
/// the later of its two endpoint positions.
enum Check {
    /// digit at this level must equal map[digit at `other`] (0-based images)
    Match { other: usize, map: Vec<usize> },
    /// loop: the digit at this level must be a fixed point
    LoopFix { fixed: Vec<bool> },
}

fn level_checks(c: &CoverInstance) -> Vec<Vec<Check>> {
    let pos: BTreeMap<VertexId, usize> = c
        .base()
        .vertices()
        .iter()
        .enumerate()
        .map(|(k, &v)| (v, k))
        .collect();
    let r = c.r() as usize;
    let mut levels: Vec<Vec<Check>> = (0..c.base().vertex_count()).map(|_| Vec::new()).collect();
    for rec in c.base().edges() {
        let sigma = c.perm(rec.id).expect("validated instance");
        let pt = pos[&rec.tail];
        let ph = pos[&rec.head];
        if pt == ph {
            let fixed = (0..r).map(|i0| sigma.image0(i0) == i0).collect();
            levels[pt].push(Check::LoopFix { fixed });
        } else if pt < ph {
            let map = (0..r).map(|i0| sigma.image0(i0)).collect();
            levels[ph].push(Check::Match { other: pt, map });
        } else {
            let inv = sigma.inverse();
            let map = (0..r).map(|i0| inv.image0(i0)).collect();
            levels[pt].push(Check::Match { other: ph, map });
        }
    }
    levels
}

fn satisfied_at(level: &[Check], digits: &[usize], digit: usize) -> usize {
    level
        .iter()
        .filter(|check| match check {
            Check::Match { other, map } => map[digits[*other]] == digit,
            Check::LoopFix { fixed } => fixed[digit],
        })
        .count()
}

/// Exhaustive ξ with the default budget.
pub fn xi_brute(c: &CoverInstance) -> Result<XiResult, EngineError> {
    xi_brute_with_budget(c, DEFAULT_TRANSVERSAL_BUDGET)
}

/// Histogram of induced edge counts over all r^n transversals.
pub fn xi_brute_with_budget(c: &CoverInstance, budget: u64) -> Result<XiResult, EngineError> {
    budgeted_total(c, budget)?;
    let start = Instant::now();
    let n = c.base().vertex_count();
    let r = c.r() as usize;
    let mut walk = Walk {
        r,
        levels: level_checks(c),
        digits: vec![0usize; n],
        hist: vec![0u64; c.base().edge_count() + 1],
        stats: EngineStats::default(),
    };
    walk.descend(0, 0);

    let Walk { hist, mut stats, .. } = walk;
    stats.max_depth = n as u32;
    stats.wall = start.elapsed();
    Ok(XiResult::new(
        IntPolynomial::from_u64_counts(&hist),
        XiMethod::Brute,
        stats,
        c,
    ))
}

/// Depth-first enumeration state for `xi_brute`.
struct Walk {
    r: usize,
    levels: Vec<Vec<Check>>,
    digits: Vec<usize>,
    hist: Vec<u64>,
    stats: EngineStats,
}

impl Walk {
    fn descend(&mut self, level: usize, running: usize) {
        self.stats.nodes += 1;
        if level == self.digits.len() {
            self.stats.leaves += 1;
            self.hist[running] += 1;
            return;
        }
        for digit in 0..self.r {
            let here = satisfied_at(&self.levels[level], &self.digits, digit);
            self.digits[level] = digit;
            self.descend(level + 1, running + here);
        }
    }
}

/// ξ by contraction-deletion, branching on the live non-loop edge with the
/// smallest id.
pub fn xi_dc(c: &CoverInstance) -> XiResult {
    xi_dc_with_policy(c, &mut smallest_nonloop)
}

/// Deterministic default policy: smallest-id live non-loop edge.
pub fn smallest_nonloop(base: &Multigraph) -> EdgeId {
    base.edges()
        .iter()
        .filter(|rec| !rec.is_loop())
        .map(|rec| rec.id)
        .min()
        .expect("policy called on a base with a non-loop edge")
}

/// ξ by contraction-deletion with a caller-chosen edge-selection policy.
///
/// The recursion result is policy-independent; `pick` is only consulted on
/// bases that still have a non-loop edge and must return one of them.
pub fn xi_dc_with_policy(
    c: &CoverInstance,
    pick: &mut dyn FnMut(&Multigraph) -> EdgeId,
) -> XiResult {
    let start = Instant::now();
    let mut stats = EngineStats::default();
    let poly = xi_dc_rec(c, pick, &mut stats, 0);
    stats.wall = start.elapsed();
    XiResult::new(poly, XiMethod::ContractionDeletion, stats, c)
}

fn xi_dc_rec(
    c: &CoverInstance,
    pick: &mut dyn FnMut(&Multigraph) -> EdgeId,
    stats: &mut EngineStats,
    depth: u32,
) -> IntPolynomial {
    stats.nodes += 1;
    stats.max_depth = stats.max_depth.max(depth);
    if c.base().edges().iter().any(|rec| !rec.is_loop()) {
        let e = pick(c.base());
        debug_assert!(!c.base().edge(e).unwrap().is_loop());
        let contracted = c.contract(e).expect("picked edge is a live non-loop");
        let deleted = c.delete(e).expect("picked edge is live");
        let from_contraction = xi_dc_rec(&contracted, pick, stats, depth + 1);
        let from_deletion = xi_dc_rec(&deleted, pick, stats, depth + 1);
        from_contraction.mul_t_minus_one().add(&from_deletion)
    } else {
        stats.leaves += 1;
        loops_only_xi(c)
    }
}

/// Base case: every edge is a loop, so fibres choose independently and ξ is
/// the product over vertices of Σ_i t^(number of loops fixing i).
fn loops_only_xi(c: &CoverInstance) -> IntPolynomial {
    let r = c.r() as usize;
    let mut result = IntPolynomial::one();
    for &v in c.base().vertices() {
        let mut fix_counts = vec![0usize; r];
        for rec in c.base().edges() {
            if rec.tail == v && rec.head == v {
                let sigma = c.perm(rec.id).expect("validated instance");
                for (i0, count) in fix_counts.iter_mut().enumerate() {
                    if sigma.image0(i0) == i0 {
                        *count += 1;
                    }
                }
            }
        }
        let mut coeffs = vec![0u64; fix_counts.iter().max().copied().unwrap_or(0) + 1];
        for &k in &fix_counts {
            coeffs[k] += 1;
        }
        result = result.mul(&IntPolynomial::from_u64_counts(&coeffs));
    }
    result
}

/// Bivariate refinement ζ with the default budget.
pub fn zeta_brute(c: &CoverInstance) -> Result<BiPolynomial, EngineError> {
    zeta_brute_with_budget(c, DEFAULT_TRANSVERSAL_BUDGET)
}

/// Accumulates t^(edges) s^(components) over all transversal subgraphs.
///
/// Components are counted on the n chosen vertices; within-fibre loops add to
/// the edge count but never merge components.
pub fn zeta_brute_with_budget(
    c: &CoverInstance,
    budget: u64,
) -> Result<BiPolynomial, EngineError> {
    budgeted_total(c, budget)?;
    let n = c.base().vertex_count();
    let r = c.r() as usize;
    let pos: BTreeMap<VertexId, usize> = c
        .base()
        .vertices()
        .iter()
        .enumerate()
        .map(|(k, &v)| (v, k))
        .collect();

    // (tail position, head position, 0-based image map) per edge
    let lifted: Vec<(usize, usize, Vec<usize>)> = c
        .base()
        .edges()
        .iter()
        .map(|rec| {
            let sigma = c.perm(rec.id).expect("validated instance");
            let map = (0..r).map(|i0| sigma.image0(i0)).collect();
            (pos[&rec.tail], pos[&rec.head], map)
        })
        .collect();

    let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let mut digits = vec![0usize; n];
    loop {
        let mut edges = 0usize;
        let mut parent: Vec<usize> = (0..n).collect();
        for (pt, ph, map) in &lifted {
            if map[digits[*pt]] == digits[*ph] {
                edges += 1;
                if pt != ph {
                    union(&mut parent, *pt, *ph);
                }
            }
        }
        let components = (0..n).filter(|&k| find(&mut parent, k) == k).count();
        *counts.entry((edges, components)).or_insert(0) += 1;

        // mixed-radix odometer
        let mut level = 0;
        loop {
            if level == n {
                let mut zeta = BiPolynomial::zero();
                for ((t_pow, s_pow), count) in counts {
                    zeta.add_term(t_pow, s_pow, BigInt::from(count));
                }
                return Ok(zeta);
            }
            digits[level] += 1;
            if digits[level] < r {
                break;
            }
            digits[level] = 0;
            level += 1;
        }
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let ra = find(parent, a);
    let rb = find(parent, b);
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Number of transversals inducing no edges at all, by pruned enumeration.
/// This is the independent check on the constant term of ξ.
pub fn count_transversal_cocliques(c: &CoverInstance, budget: u64) -> Result<u64, EngineError> {
    budgeted_total(c, budget)?;
    let n = c.base().vertex_count();
    let r = c.r() as usize;
    let levels = level_checks(c);
    let mut digits = vec![0usize; n];

    fn walk(
        level: usize,
        n: usize,
        r: usize,
        levels: &[Vec<Check>],
        digits: &mut [usize],
    ) -> u64 {
        if level == n {
            return 1;
        }
        let mut total = 0;
        for digit in 0..r {
            if satisfied_at(&levels[level], digits, digit) == 0 {
                digits[level] = digit;
                total += walk(level + 1, n, r, levels, digits);
            }
        }
        total
    }
    Ok(walk(0, n, r, &levels, &mut digits))
}
