//! Exact polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficient sums reach r^n and evaluations get compared modulo r^n, so
//! everything here is `BigInt` from the start; fixed-width arithmetic would
//! corrupt the congruence checks silently.

use std::fmt;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Univariate polynomial in t, dense ascending coefficients.
///
/// Normal form has no trailing zero coefficient; the zero polynomial is the
/// empty coefficient list.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> IntPolynomial {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> IntPolynomial {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> IntPolynomial {
        IntPolynomial::from_coeffs(vec![c])
    }

    /// Normalizes by dropping trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> IntPolynomial {
        let mut p = IntPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Histogram-to-polynomial: `counts[k]` becomes the coefficient of t^k.
    pub fn from_u64_counts(counts: &[u64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of t^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            coeffs[k] -= c;
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn scalar_mul(&self, k: &BigInt) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplication by t^k.
    pub fn shift_mul_by_t(&self, k: usize) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Exact convolution product.
    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial { coeffs }
    }

    /// Multiplication by (t - 1), the weight a contraction branch picks up.
    pub fn mul_t_minus_one(&self) -> IntPolynomial {
        self.shift_mul_by_t(1).sub(self)
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Ascending coefficient list, e.g. `[8, 12, 6, 1]`.
    pub fn coeff_list(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }
}

impl fmt::Display for IntPolynomial {
    /// Human-readable ascending form, e.g. `8 + 12t + 6t^2 + t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &BigInt::zero();
            let mag = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && k > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Bivariate polynomial in t and s, sparse map keyed by (t-power, s-power).
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiPolynomial {
    coeffs: BTreeMap<(usize, usize), BigInt>,
}

impl BiPolynomial {
    pub fn zero() -> BiPolynomial {
        BiPolynomial {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c * t^t_pow * s^s_pow`, dropping the entry if it cancels.
    pub fn add_term(&mut self, t_pow: usize, s_pow: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry((t_pow, s_pow)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&(t_pow, s_pow));
        }
    }

    /// Terms in ascending (t-power, s-power) order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.coeffs.iter().map(|(&(t, s), c)| (t, s, c))
    }

    pub fn coeff(&self, t_pow: usize, s_pow: usize) -> BigInt {
        self.coeffs
            .get(&(t_pow, s_pow))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Substitutes s = s0 and collects in t.
    pub fn specialize_s(&self, s0: &BigInt) -> IntPolynomial {
        let max_t = self.coeffs.keys().map(|&(t, _)| t).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); max_t + 1];
        for (&(t, s), c) in &self.coeffs {
            coeffs[t] += c * s0.pow(s as u32);
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for BiPolynomial {
    /// Ascending (t-power, s-power) term order, e.g. `2*t*s + 2*s^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (t, s, c) in self.terms() {
            let negative = c < &BigInt::zero();
            let mag = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (t == 0 && s == 0) {
                factors.push(mag.to_string());
            }
            match t {
                0 => {}
                1 => factors.push("t".into()),
                _ => factors.push(format!("t^{t}")),
            }
            match s {
                0 => {}
                1 => factors.push("s".into()),
                _ => factors.push(format!("s^{s}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64_coeffs(coeffs)
    }

    #[test]
    fn plumbing_examples() {
        // (t+1) + (t-1) = 2t
        assert_eq!(p(&[1, 1]).add(&p(&[-1, 1])), p(&[0, 2]));
        assert_eq!(p(&[0, 0, 1]).scalar_mul(&BigInt::from(3)), p(&[0, 0, 3]));
        assert_eq!(p(&[1]).shift_mul_by_t(3), p(&[0, 0, 0, 1]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p(&[2, 1]).mul(&p(&[2, 1])), p(&[4, 4, 1]));
        assert_eq!(p(&[3, 0, 7]).mul(&IntPolynomial::one()), p(&[3, 0, 7]));
        // squares of 2t+2; cross-checked against enumeration in the engine tests
        assert_eq!(p(&[2, 2]).mul(&p(&[2, 2])), p(&[4, 8, 4]));
    }

    #[test]
    fn eval_examples() {
        let xi = p(&[8, 12, 6, 1]); // t^3 + 6t^2 + 12t + 8
        assert_eq!(xi.eval(&BigInt::from(1)), BigInt::from(27));
        assert_eq!(xi.eval(&BigInt::from(-2)), BigInt::zero());
        assert_eq!(IntPolynomial::zero().eval(&BigInt::from(123)), BigInt::zero());
    }

    #[test]
    fn zero_is_empty_and_degreeless() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 0]).coeffs().len(), 0);
        assert_eq!(p(&[]).degree(), None);
        assert_eq!(p(&[5, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn mul_t_minus_one_matches_mul() {
        let q = p(&[3, -1, 4]);
        assert_eq!(q.mul_t_minus_one(), q.mul(&p(&[-1, 1])));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[8, 12, 6, 1]).to_string(), "8 + 12t + 6t^2 + t^3");
        assert_eq!(p(&[8, 12, 6, 1]).coeff_list(), "[8, 12, 6, 1]");
        assert_eq!(p(&[0, -2]).to_string(), "-2t");
        assert_eq!(p(&[2, 0, -1]).to_string(), "2 - t^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::zero().coeff_list(), "[]");
    }

    #[test]
    fn specialize_s_examples() {
        // 3s at s=1 is the constant 3
        let mut z = BiPolynomial::zero();
        z.add_term(0, 1, BigInt::from(3));
        assert_eq!(z.specialize_s(&BigInt::one()), p(&[3]));
        // t*s^2 at s=1 is t
        let mut z = BiPolynomial::zero();
        z.add_term(1, 2, BigInt::one());
        assert_eq!(z.specialize_s(&BigInt::one()), p(&[0, 1]));
        // s-powers actually expand
        let mut z = BiPolynomial::zero();
        z.add_term(0, 2, BigInt::from(5));
        assert_eq!(z.specialize_s(&BigInt::from(3)), p(&[45]));
    }

    #[test]
    fn bipoly_cancellation() {
        let mut z = BiPolynomial::zero();
        z.add_term(1, 1, BigInt::from(4));
        z.add_term(1, 1, BigInt::from(-4));
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn bipoly_display() {
        let mut z = BiPolynomial::zero();
        z.add_term(1, 1, BigInt::from(2));
        z.add_term(0, 2, BigInt::from(2));
        assert_eq!(z.to_string(), "2*s^2 + 2*t*s");
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-50i64..50, 0..6).prop_map(|cs| IntPolynomial::from_i64_coeffs(&cs))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn eval_is_multiplicative(a in small_poly(), b in small_poly(), x in -20i64..20) {
            let x = BigInt::from(x);
            prop_assert_eq!(a.mul(&b).eval(&x), a.eval(&x) * b.eval(&x));
        }

        #[test]
        fn degree_adds_under_mul(a in small_poly(), b in small_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!(
                a.mul(&b).degree().unwrap(),
                a.degree().unwrap() + b.degree().unwrap()
            );
        }

        #[test]
        fn normalization_idempotent(a in small_poly()) {
            let renorm = IntPolynomial::from_coeffs(a.coeffs().to_vec());
            prop_assert_eq!(&renorm, &a);
            prop_assert!(renorm.coeffs().last().is_none_or(|c| !c.is_zero()));
        }
    }
}
