//! Verifiers for the structural facts the engines are expected to satisfy,
//! plus the seeded random-instance generator behind the test corpora.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cover::CoverInstance;
use crate::engine::xi_dc;
use crate::multigraph::{Multigraph, VertexId};
use crate::perm::Perm;
use crate::poly::IntPolynomial;
use crate::rng::SplitMix64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("two-fold analysis requires r = 2, got r = {0}")]
    NotTwoFold(u32),
    #[error("cannot generate an instance: {0}")]
    Generation(String),
    #[error("bound must be a rational strictly between 0 and 1, got {0}/{1}")]
    BadBound(u64, u64),
}

/// Divisibility report for ξ evaluated at -(r-1).
///
/// `value` must vanish modulo r^n on every valid instance; when the constant
/// term of ξ is zero the stronger modulus r^n(r-1) applies as well.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceReport {
    /// ξ(-(r-1)), exactly.
    pub value: BigInt,
    /// r^n.
    pub modulus: BigInt,
    pub holds: bool,
    /// value / r^n when divisibility holds.
    pub quotient: Option<BigInt>,
    pub constant_term_zero: bool,
    /// Result of the r^n(r-1) check; only run when the constant term is zero.
    pub extended_modulus_holds: Option<bool>,
}

/// Congruence check on a precomputed ξ for an n-vertex, index-r instance.
pub fn congruence_report(xi: &IntPolynomial, n: usize, r: u32) -> CongruenceReport {
    let value = xi.eval(&-BigInt::from(r - 1));
    let modulus = BigInt::from(r).pow(n as u32);
    let holds = (&value % &modulus).is_zero();
    let quotient = holds.then(|| &value / &modulus);
    let constant_term_zero = xi.constant_term().is_zero();
    let extended_modulus_holds = constant_term_zero.then(|| {
        let extended: BigInt = &modulus * (BigInt::from(r) - 1);
        if extended.is_zero() {
            // degenerate r = 1: only zero is divisible by zero
            value.is_zero()
        } else {
            (&value % extended).is_zero()
        }
    });
    CongruenceReport {
        value,
        modulus,
        holds,
        quotient,
        constant_term_zero,
        extended_modulus_holds,
    }
}

/// Computes ξ by contraction-deletion and checks its congruences.
pub fn check_congruence(c: &CoverInstance) -> CongruenceReport {
    congruence_report(&xi_dc(c).poly, c.vertex_count(), c.r())
}

/// What ξ(-1) turned out to be for a 2-fold cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoFoldClass {
    Plus,
    Minus,
    Zero,
    /// Impossible for a genuine 2-fold cover; reported rather than hidden.
    Other,
}

impl fmt::Display for TwoFoldClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            TwoFoldClass::Plus => "+2^n",
            TwoFoldClass::Minus => "-2^n",
            TwoFoldClass::Zero => "0",
            TwoFoldClass::Other => "unexpected",
        };
        write!(f, "{name}")
    }
}

#[derive(Clone, Debug)]
pub struct TwoFoldReport {
    /// ξ(-1), exactly.
    pub value: BigInt,
    pub class: TwoFoldClass,
    /// Every valency even, loops counting 2; connectivity not required.
    pub eulerian: bool,
    /// ±2^n observed on an eulerian base, 0 on a non-eulerian one.
    pub consistent: bool,
}

/// Evaluates ξ(-1) for a 2-fold cover and matches it against the eulerian
/// dichotomy: ±2^n when every valency is even, 0 otherwise. The sign is
/// observed, never predicted.
pub fn check_two_fold(c: &CoverInstance) -> Result<TwoFoldReport, AnalysisError> {
    if c.r() != 2 {
        return Err(AnalysisError::NotTwoFold(c.r()));
    }
    let value = xi_dc(c).poly.eval(&BigInt::from(-1));
    let magnitude = BigInt::from(2).pow(c.vertex_count() as u32);
    let class = if value == magnitude {
        TwoFoldClass::Plus
    } else if value == -&magnitude {
        TwoFoldClass::Minus
    } else if value.is_zero() {
        TwoFoldClass::Zero
    } else {
        TwoFoldClass::Other
    };
    let eulerian = c.base().all_degrees_even();
    let consistent = if eulerian {
        matches!(class, TwoFoldClass::Plus | TwoFoldClass::Minus)
    } else {
        matches!(class, TwoFoldClass::Zero)
    };
    Ok(TwoFoldReport {
        value,
        class,
        eulerian,
        consistent,
    })
}

/// The transversal polynomial shared by every r-fold cover of a tree on n
/// vertices: Σ_j r (r-1)^(n-1-j) C(n-1, j) t^j.
pub fn tree_closed_form(n: usize, r: u32) -> IntPolynomial {
    assert!(n >= 1, "trees have at least one vertex");
    let r = BigInt::from(r);
    let mut coeffs = Vec::with_capacity(n);
    let mut binomial = BigInt::one(); // C(n-1, j), updated incrementally
    for j in 0..n {
        let coefficient = &r * (&r - 1u32).pow((n - 1 - j) as u32) * &binomial;
        coeffs.push(coefficient);
        binomial = binomial * ((n - 1 - j) as u32) / ((j + 1) as u32);
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// Number of correspondence colourings of the instance: the constant term of
/// ξ, i.e. the number of transversal cocliques.
pub fn correspondence_colouring_count(c: &CoverInstance) -> BigInt {
    xi_dc(c).poly.constant_term()
}

/// Exact rational bound in (0, 1), used for the two unique-games thresholds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Result<Ratio, AnalysisError> {
        if den == 0 || num == 0 || num >= den {
            return Err(AnalysisError::BadBound(num, den));
        }
        Ok(Ratio { num, den })
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Degree-of-ξ classification of an instance against the two unique-games
/// regimes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UGReport {
    /// deg ξ: the maximum number of edges any labelling satisfies.
    pub max_satisfied: usize,
    pub total_edges: usize,
    /// max_satisfied ≥ (1 - ε)·|E|.
    pub case_a: bool,
    /// max_satisfied ≤ δ·|E|.
    pub case_b: bool,
}

/// Classifies an instance by deg ξ. Comparisons against (1-ε)|E| and δ|E|
/// are exact rational arithmetic, so boundary cases cannot misclassify.
pub fn ug_classify(c: &CoverInstance, epsilon: Ratio, delta: Ratio) -> UGReport {
    let xi = xi_dc(c).poly;
    let max_satisfied = xi.degree().expect("xi is never the zero polynomial");
    let total_edges = c.edge_count();
    // deg ≥ (1-ε)|E|  ⇔  deg·den ≥ (den-num)·|E|
    let case_a = (max_satisfied as u128) * (epsilon.den as u128)
        >= ((epsilon.den - epsilon.num) as u128) * (total_edges as u128);
    // deg ≤ δ|E|  ⇔  deg·den ≤ num·|E|
    let case_b = (max_satisfied as u128) * (delta.den as u128)
        <= (delta.num as u128) * (total_edges as u128);
    UGReport {
        max_satisfied,
        total_edges,
        case_a,
        case_b,
    }
}

/// Deterministic random instance: `edge_count` non-loop edges with uniform
/// endpoint pairs (parallel edges allowed), `loop_count` loops on uniform
/// vertices, and a uniform permutation on every edge. The seed fully
/// determines the instance.
pub fn generate_random(
    n: u32,
    r: u32,
    edge_count: u32,
    loop_count: u32,
    seed: u64,
) -> Result<CoverInstance, AnalysisError> {
    if n == 0 {
        return Err(AnalysisError::Generation("need at least one vertex".into()));
    }
    if r == 0 {
        return Err(AnalysisError::Generation("index r must be positive".into()));
    }
    if n == 1 && edge_count > 0 {
        return Err(AnalysisError::Generation(
            "non-loop edges need two distinct vertices".into(),
        ));
    }
    let mut rng = SplitMix64::new(seed);
    let mut base = Multigraph::with_vertices(n);
    let mut edges = Vec::new();
    for _ in 0..edge_count {
        let tail = VertexId(rng.below(n as u64) as u32);
        let head = loop {
            let h = VertexId(rng.below(n as u64) as u32);
            if h != tail {
                break h;
            }
        };
        edges.push(base.add_edge(tail, head).expect("fresh vertices"));
    }
    for _ in 0..loop_count {
        let v = VertexId(rng.below(n as u64) as u32);
        edges.push(base.add_edge(v, v).expect("fresh vertices"));
    }
    let alpha: BTreeMap<_, _> = edges
        .into_iter()
        .map(|e| (e, Perm::random(r as usize, &mut rng)))
        .collect();
    Ok(CoverInstance::new(base, r, alpha).expect("generated instance is valid"))
}

/// Deterministic random labelled tree instance on n vertices: vertex k
/// attaches to a uniform earlier vertex, and every edge gets a uniform
/// permutation.
pub fn generate_random_tree(n: u32, r: u32, seed: u64) -> Result<CoverInstance, AnalysisError> {
    if n == 0 {
        return Err(AnalysisError::Generation("need at least one vertex".into()));
    }
    if r == 0 {
        return Err(AnalysisError::Generation("index r must be positive".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let mut base = Multigraph::with_vertices(n);
    let mut edges = Vec::new();
    for k in 1..n {
        let parent = VertexId(rng.below(k as u64) as u32);
        edges.push(base.add_edge(parent, VertexId(k)).expect("fresh vertices"));
    }
    let alpha: BTreeMap<_, _> = edges
        .into_iter()
        .map(|e| (e, Perm::random(r as usize, &mut rng)))
        .collect();
    Ok(CoverInstance::new(base, r, alpha).expect("generated instance is valid"))
}
