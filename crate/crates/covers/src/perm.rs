//! Elements of the symmetric group Sym(r) acting on {1..r}.
//!
//! Permutations act on the right: we write `i^σ` for the image of `i`, and a
//! product `στ` applies the left factor first, so `i^(στ) = (i^σ)^τ`. Arc
//! rewrites under contraction depend on this convention; see
//! [`Perm::compose`].

use std::fmt;

use crate::rng::SplitMix64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("point {point} out of range for a permutation of degree {degree}")]
    PointOutOfRange { point: u32, degree: usize },
    #[error("image sequence is not a bijection: {reason}")]
    NotBijection { reason: String },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
}

/// A permutation of {1..r} in one-line notation: `images[i-1]` is `i^σ`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    /// The identity on {1..r}.
    pub fn identity(r: usize) -> Perm {
        Perm {
            images: (1..=r as u32).collect(),
        }
    }

    /// Builds a permutation from its one-line image sequence, checking that it
    /// is a bijection of {1..r} where r is the sequence length.
    pub fn from_images(images: Vec<u32>) -> Result<Perm, PermError> {
        let r = images.len();
        let mut seen = vec![false; r];
        for &v in &images {
            if v == 0 || v as usize > r {
                return Err(PermError::NotBijection {
                    reason: format!("image {v} outside 1..={r}"),
                });
            }
            if seen[v as usize - 1] {
                return Err(PermError::NotBijection {
                    reason: format!("image {v} repeated"),
                });
            }
            seen[v as usize - 1] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation of degree `r` from disjoint cycles, e.g.
    /// `from_cycles(3, &[&[1, 2]])` is the transposition (1 2).
    pub fn from_cycles(r: usize, cycles: &[&[u32]]) -> Result<Perm, PermError> {
        let mut images: Vec<u32> = (1..=r as u32).collect();
        let mut moved = vec![false; r];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p as usize > r {
                    return Err(PermError::PointOutOfRange { point: p, degree: r });
                }
                if moved[p as usize - 1] {
                    return Err(PermError::NotBijection {
                        reason: format!("point {p} appears in two cycles"),
                    });
                }
                moved[p as usize - 1] = true;
                images[p as usize - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Perm { images })
    }

    /// Uniform random permutation via Fisher-Yates on the given stream.
    pub fn random(r: usize, rng: &mut SplitMix64) -> Perm {
        let mut images: Vec<u32> = (1..=r as u32).collect();
        for i in (1..r).rev() {
            let j = rng.below(i as u64 + 1) as usize;
            images.swap(i, j);
        }
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// The image `i^σ` for `i` in {1..r}.
    pub fn apply(&self, i: u32) -> Result<u32, PermError> {
        if i == 0 || i as usize > self.images.len() {
            return Err(PermError::PointOutOfRange {
                point: i,
                degree: self.images.len(),
            });
        }
        Ok(self.images[i as usize - 1])
    }

    /// 0-based image lookup for inner loops; `i0` must be below the degree.
    #[inline]
    pub(crate) fn image0(&self, i0: usize) -> usize {
        debug_assert!(i0 < self.images.len());
        self.images[i0] as usize - 1
    }

    /// The product στ with the left factor applied first: `i^(στ) = (i^σ)^τ`.
    ///
    /// Example: in Sym(3), compose((1 2), (1 2 3)) sends 1 → 2 → 3, so the
    /// result is (1 3).
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    /// As [`Perm::compose`]; degrees must already agree.
    pub(crate) fn compose_unchecked(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self
                .images
                .iter()
                .map(|&mid| other.images[mid as usize - 1])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.images.len()];
        for (i0, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i0 as u32 + 1;
        }
        Perm { images }
    }

    /// The points of {1..r} fixed by σ, in increasing order.
    pub fn fixed_points(&self) -> Vec<u32> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i0, &v)| v == i0 as u32 + 1)
            .map(|(i0, _)| i0 as u32 + 1)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i0, &v)| v == i0 as u32 + 1)
    }
}

impl fmt::Display for Perm {
    /// One-line image sequence, e.g. `[2,1,3]` for (1 2) in Sym(3).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}
