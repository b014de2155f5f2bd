//! The degree of the locus of binary forms `f^a + g^b`, and the torus weights
//! behind it.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;

use crate::chow_ring::TruncatedPolynomial;
use crate::cycle_classes::{alpha_classes, beta_pushforward, gamma_class, PowerSumProblem};
use crate::{Error, Result};

/// Validates `(m, n, a, b)` and normalizes it to `m ≤ n`.
pub fn validate(m: u32, n: u32, a: u32, b: u32) -> Result<PowerSumProblem> {
    PowerSumProblem::new(m, n, a, b)
}

/// Builds the problem from `(d, a, b)` with `m = d / a`, `n = d / b`.
pub fn validate_from_degree(d: u64, a: u32, b: u32) -> Result<PowerSumProblem> {
    if d == 0 {
        return Err(Error::NotPositive("d"));
    }
    let part = |divisor: u32, name| -> Result<u32> {
        if divisor == 0 {
            return Err(Error::NotPositive(name));
        }
        let divisor = u64::from(divisor);
        if !d.is_multiple_of(divisor) {
            return Err(Error::NonIntegral { d, divisor });
        }
        u32::try_from(d / divisor).map_err(|_| Error::IndexOutOfRange {
            name: "d",
            value: d as i64,
            max: i64::from(u32::MAX),
        })
    };
    let m = part(a, "a")?;
    let n = part(b, "b")?;
    validate(m, n, a, b)
}

/// `∫ γ ∩ β_*[Tv_{m,n}]` over `P S_m × P S_n × P S_(m+n-2)`.
///
/// When `a = b` this counts ordered pairs `(f, g)`, so every unordered
/// decomposition is counted twice.
pub fn degree_of_power_sum_locus(problem: &PowerSumProblem) -> Result<BigInt> {
    degree_with_class(problem, &beta_pushforward(problem.m(), problem.n())?)
}

/// `∫ γ ∩ beta` for a caller-supplied pushforward class.
pub fn degree_with_class(problem: &PowerSumProblem, beta: &TruncatedPolynomial) -> Result<BigInt> {
    gamma_class(problem).pairing(beta)
}

/// One term `coeff · σ1^sigma1 · σ2^sigma2` of a polynomial in the Chern
/// classes of the rank-2 bundle, with `deg σ1 = 1`, `deg σ2 = 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernTerm {
    pub coeff: BigInt,
    pub sigma1: u32,
    pub sigma2: u32,
}

impl ChernTerm {
    pub fn new(coeff: impl Into<BigInt>, sigma1: u32, sigma2: u32) -> Self {
        Self { coeff: coeff.into(), sigma1, sigma2 }
    }

    pub fn degree(&self) -> u64 {
        u64::from(self.sigma1) + 2 * u64::from(self.sigma2)
    }
}

/// `Σ_{i+2j=degree} (-1)^(i+j) C(i+j, i) σ1^i σ2^j`, the degree part of `1 / c`.
pub fn inverse_chern_polynomial(degree: u32) -> Vec<ChernTerm> {
    (0..=degree / 2)
        .map(|j| {
            let i = degree - 2 * j;
            let mut c = binomial(BigInt::from(i + j), BigInt::from(i));
            if (i + j) % 2 == 1 {
                c = -c;
            }
            ChernTerm::new(c, i, j)
        })
        .collect()
}

/// `∫_{Tv_{m,n}} p(σ1, σ2)`, evaluated as `∫ p(α1, α2) ∩ β_*[Tv_{m,n}]`.
///
/// Every term must have weighted degree `m + n`.
pub fn integrate_chern_polynomial(problem: &PowerSumProblem, p: &[ChernTerm]) -> Result<BigInt> {
    let expected = u64::from(problem.m() + problem.n());
    if let Some(bad) = p.iter().find(|t| t.degree() != expected) {
        return Err(Error::ChernDegree { expected, found: bad.degree() });
    }
    let spec = problem.ambient();
    let (alpha1, alpha2) = alpha_classes(problem);
    let mut class = TruncatedPolynomial::zero(&spec);
    for term in p.iter().filter(|t| !t.coeff.is_zero()) {
        let monomial = alpha1.pow(term.sigma1).mul(&alpha2.pow(term.sigma2))?;
        class = class.add(&monomial.scale(&term.coeff))?;
    }
    class.pairing(&beta_pushforward(problem.m(), problem.n())?)
}

/// Torus weights of the two summands of a rank-2 fiber; compared as an
/// unordered pair.
#[derive(Debug, Clone, Copy, Eq)]
pub struct WeightPair {
    pub w1: i64,
    pub w2: i64,
}

impl WeightPair {
    pub fn new(w1: i64, w2: i64) -> Self {
        Self { w1, w2 }
    }

    /// The pair with the smaller weight first.
    pub fn sorted(&self) -> (i64, i64) {
        (self.w1.min(self.w2), self.w1.max(self.w2))
    }
}

impl PartialEq for WeightPair {
    fn eq(&self, other: &Self) -> bool {
        self.sorted() == other.sorted()
    }
}

impl core::hash::Hash for WeightPair {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.sorted().hash(state);
    }
}

/// A torus-fixed point `(x^i y^(m-i), x^j y^(n-j), x^k y^(m+n-2-k))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FixedPoint {
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

fn check_point(problem: &PowerSumProblem, i: u32, j: u32, k: u32) -> Result<()> {
    let bounds = [("i", i, problem.m()), ("j", j, problem.n()), ("k", k, problem.m() + problem.n() - 2)];
    for (name, value, max) in bounds {
        if value > max {
            return Err(Error::IndexOutOfRange { name, value: value.into(), max: max.into() });
        }
    }
    Ok(())
}

/// Weights `(2ai - d, (2bj - d) + 2k - 2i - 2j + 2)` of the rank-2 bundle at
/// the fixed point with exponents `(i, j, k)` of `x`.
pub fn fixed_point_weights(problem: &PowerSumProblem, i: u32, j: u32, k: u32) -> Result<WeightPair> {
    check_point(problem, i, j, k)?;
    let (a, b, d) = (i64::from(problem.a()), i64::from(problem.b()), problem.d() as i64);
    let (i, j, k) = (i64::from(i), i64::from(j), i64::from(k));
    Ok(WeightPair::new(2 * a * i - d, (2 * b * j - d) + 2 * k - 2 * i - 2 * j + 2))
}

/// Weight of the fiber of `O(t1, t2, t3)` at a fixed point, where `O(-1)` on
/// `P S_e` has weight `2i - e` at `x^i y^(e-i)`.
pub fn line_bundle_weight(problem: &PowerSumProblem, twist: [i64; 3], point: FixedPoint) -> Result<i64> {
    check_point(problem, point.i, point.j, point.k)?;
    let taut = |x: u32, e: u32| 2 * i64::from(x) - i64::from(e);
    let (m, n) = (problem.m(), problem.n());
    Ok(-twist[0] * taut(point.i, m) - twist[1] * taut(point.j, n) - twist[2] * taut(point.k, m + n - 2))
}

/// The fiber weights of `O(-a, 0, 0) ⊕ O(1, 1-b, -1)` at a fixed point.
pub fn split_bundle_weights(problem: &PowerSumProblem, point: FixedPoint) -> Result<WeightPair> {
    let (a, b) = (i64::from(problem.a()), i64::from(problem.b()));
    let first = line_bundle_weight(problem, [-a, 0, 0], point)?;
    let second = line_bundle_weight(problem, [1, 1 - b, -1], point)?;
    Ok(WeightPair::new(first, second))
}
