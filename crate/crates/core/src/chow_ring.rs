//! Truncated multigraded polynomial rings `Z[ζ1, …, ζk] / (ζ1^(c1+1), …, ζk^(ck+1))`.
//!
//! This is the Chow ring of `P^c1 × … × P^ck`: `ζi` is the pullback of the
//! hyperplane class of the `i`-th factor, and a monomial with any exponent above
//! its cap is zero. Degree-0 cycles integrate to the coefficient of the top
//! monomial `ζ1^c1 ⋯ ζk^ck`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Per-variable exponent caps of the ambient ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    caps: Vec<u32>,
}

impl RingSpec {
    pub fn new(caps: impl Into<Vec<u32>>) -> Result<Self> {
        let caps = caps.into();
        if caps.is_empty() {
            return Err(Error::EmptyRing);
        }
        Ok(Self { caps })
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn num_vars(&self) -> usize {
        self.caps.len()
    }

    /// Sum of the caps, the degree of the top class.
    pub fn top_degree(&self) -> u64 {
        self.caps.iter().map(|&c| u64::from(c)).sum()
    }

    fn fits(&self, exponents: &[u32]) -> bool {
        exponents.iter().zip(&self.caps).all(|(e, c)| e <= c)
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.caps.len() {
            return Err(Error::LengthMismatch { expected: self.caps.len(), found: len });
        }
        Ok(())
    }
}

/// An element of the truncated ring described by a [`RingSpec`].
///
/// Terms are kept in a map from exponent vectors to nonzero coefficients, so
/// two polynomials are equal exactly when their term maps are. Iteration order
/// is lexicographic in the exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPolynomial {
    spec: RingSpec,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl TruncatedPolynomial {
    pub fn zero(spec: &RingSpec) -> Self {
        Self { spec: spec.clone(), terms: BTreeMap::new() }
    }

    pub fn one(spec: &RingSpec) -> Self {
        Self::constant(spec, BigInt::one())
    }

    pub fn constant(spec: &RingSpec, c: BigInt) -> Self {
        let mut p = Self::zero(spec);
        p.add_term(&vec![0; spec.num_vars()], c);
        p
    }

    /// The single term `coeff · ζ^exponents`, or zero when an exponent exceeds
    /// its cap.
    pub fn monomial(spec: &RingSpec, exponents: &[i64], coeff: BigInt) -> Result<Self> {
        spec.check_len(exponents.len())?;
        let mut exps = Vec::with_capacity(exponents.len());
        for (index, &value) in exponents.iter().enumerate() {
            if value < 0 {
                return Err(Error::NegativeExponent { index, value });
            }
            exps.push(u32::try_from(value).unwrap_or(u32::MAX));
        }
        let mut p = Self::zero(spec);
        p.add_term(&exps, coeff);
        Ok(p)
    }

    /// The hyperplane class `ζ_index` (0-based).
    pub fn variable(spec: &RingSpec, index: usize) -> Result<Self> {
        if index >= spec.num_vars() {
            return Err(Error::IndexOutOfRange {
                name: "variable",
                value: index as i64,
                max: spec.num_vars() as i64 - 1,
            });
        }
        let mut exps = vec![0; spec.num_vars()];
        exps[index] = 1;
        let mut p = Self::zero(spec);
        p.add_term(&exps, BigInt::one());
        Ok(p)
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Result<BigInt> {
        self.spec.check_len(exponents.len())?;
        Ok(self.terms.get(exponents).cloned().unwrap_or_default())
    }

    /// Coefficient of the top monomial `ζ1^c1 ⋯ ζk^ck`.
    pub fn integrate(&self) -> BigInt {
        self.terms.get(self.spec.caps()).cloned().unwrap_or_default()
    }

    /// Largest total degree of a stored term, `None` for zero.
    pub fn max_degree(&self) -> Option<u64> {
        self.terms.keys().map(|e| total_degree(e)).max()
    }

    pub fn is_homogeneous(&self, degree: u64) -> bool {
        self.terms.keys().all(|e| total_degree(e) == degree)
    }

    pub fn homogeneous_part(&self, degree: u64) -> Self {
        self.filter_terms(|e| total_degree(e) == degree)
    }

    /// Drops every term of total degree above `max_degree`.
    pub fn truncate_degree(&self, max_degree: u64) -> Self {
        self.filter_terms(|e| total_degree(e) <= max_degree)
    }

    fn filter_terms(&self, keep: impl Fn(&[u32]) -> bool) -> Self {
        let terms = self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (e.clone(), c.clone())).collect();
        Self { spec: self.spec.clone(), terms }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        Self { spec: self.spec.clone(), terms }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero(&self.spec);
        }
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * factor)).collect();
        Self { spec: self.spec.clone(), terms }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_up_to_degree(other, u64::MAX)
    }

    /// Product with every term of total degree above `max_degree` discarded.
    ///
    /// Equal to `self.mul(other)?.truncate_degree(max_degree)`, without
    /// forming the discarded terms.
    pub fn mul_up_to_degree(&self, other: &Self, max_degree: u64) -> Result<Self> {
        self.same_ring(other)?;
        let (small, large) =
            if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let caps = self.spec.caps();
        let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        let mut buf = vec![0u32; caps.len()];
        for (ea, ca) in &small.terms {
            let da = total_degree(ea);
            if da > max_degree {
                continue;
            }
            'inner: for (eb, cb) in &large.terms {
                if da + total_degree(eb) > max_degree {
                    continue;
                }
                for (slot, ((x, y), cap)) in buf.iter_mut().zip(ea.iter().zip(eb).zip(caps)) {
                    let s = x + y;
                    if s > *cap {
                        continue 'inner;
                    }
                    *slot = s;
                }
                let prod = ca * cb;
                match acc.get_mut(buf.as_slice()) {
                    Some(c) => *c += prod,
                    None => {
                        acc.insert(buf.clone(), prod);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self { spec: self.spec.clone(), terms: acc })
    }

    /// `self^exp` by repeated squaring; `p^0 = 1`.
    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(&self.spec);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        result
    }

    /// `Σ_{i ≥ 0} (-u)^i`, the expansion of `1 / (1 + u)`.
    ///
    /// Requires `u` to have no constant term; the series then stops after
    /// `top_degree` steps because higher powers vanish.
    pub fn geometric_inverse(&self) -> Result<Self> {
        self.geometric_inverse_up_to_degree(self.spec.top_degree())
    }

    /// [`geometric_inverse`](Self::geometric_inverse) with every term of total
    /// degree above `max_degree` discarded.
    pub fn geometric_inverse_up_to_degree(&self, max_degree: u64) -> Result<Self> {
        if self.terms.keys().any(|e| total_degree(e) == 0) {
            return Err(Error::NonzeroConstantTerm);
        }
        let step = self.neg();
        let mut power = Self::one(&self.spec);
        let mut sum = power.clone();
        for _ in 0..max_degree.min(self.spec.top_degree()) {
            power = power.mul_up_to_degree(&step, max_degree)?;
            if power.is_zero() {
                break;
            }
            sum = sum.add(&power)?;
        }
        Ok(sum)
    }

    /// `integrate(self · other)`, computed by pairing complementary terms.
    pub fn pairing(&self, other: &Self) -> Result<BigInt> {
        self.same_ring(other)?;
        let caps = self.spec.caps();
        let mut complement = vec![0u32; caps.len()];
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            for (slot, (x, cap)) in complement.iter_mut().zip(e.iter().zip(caps)) {
                *slot = cap - x;
            }
            if let Some(d) = other.terms.get(complement.as_slice()) {
                total += c * d;
            }
        }
        Ok(total)
    }

    /// Reads `self` in a ring with caps componentwise at most the current ones,
    /// dropping the monomials that vanish there.
    pub fn restrict(&self, spec: &RingSpec) -> Result<Self> {
        if spec.num_vars() != self.spec.num_vars() {
            return Err(Error::SpecMismatch);
        }
        let terms =
            self.terms.iter().filter(|(e, _)| spec.fits(e)).map(|(e, c)| (e.clone(), c.clone())).collect();
        Ok(Self { spec: spec.clone(), terms })
    }

    /// Renames variables: variable `i` of `self` becomes variable `perm[i]` of
    /// the result, whose `perm[i]`-th cap is this ring's `i`-th cap.
    pub fn permute_variables(&self, perm: &[usize]) -> Result<Self> {
        let k = self.spec.num_vars();
        self.spec.check_len(perm.len())?;
        let mut seen = vec![false; k];
        for &p in perm {
            if p >= k || seen[p] {
                return Err(Error::IndexOutOfRange {
                    name: "permutation entry",
                    value: p as i64,
                    max: k as i64 - 1,
                });
            }
            seen[p] = true;
        }
        let mut caps = vec![0; k];
        for (i, &p) in perm.iter().enumerate() {
            caps[p] = self.spec.caps[i];
        }
        let spec = RingSpec { caps };
        let mut out = Self::zero(&spec);
        let mut buf = vec![0; k];
        for (e, c) in &self.terms {
            for (i, &p) in perm.iter().enumerate() {
                buf[p] = e[i];
            }
            out.add_term(&buf, c.clone());
        }
        Ok(out)
    }

    /// Adds `coeff · ζ^exponents` in place. Out-of-cap monomials are dropped.
    pub(crate) fn add_term(&mut self, exponents: &[u32], coeff: BigInt) {
        if coeff.is_zero() || !self.spec.fits(exponents) {
            return;
        }
        match self.terms.get_mut(exponents) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(exponents);
                }
            }
            None => {
                self.terms.insert(exponents.to_vec(), coeff);
            }
        }
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        Ok(())
    }

    /// LaTeX rendering with variables `\zeta_{1}, …`, terms sorted by exponent
    /// vector.
    pub fn to_latex(&self) -> String {
        self.render(
            |out, var, exp| {
                let _ = write!(out, "\\zeta_{{{}}}", var + 1);
                if exp > 1 {
                    let _ = write!(out, "^{{{exp}}}");
                }
            },
            "",
        )
    }

    fn render(&self, mut var: impl FnMut(&mut String, usize, u32), sep: &str) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (n, (e, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (n, c.is_negative()) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let constant = e.iter().all(|&x| x == 0);
            let mut first = true;
            if constant || !magnitude.is_one() {
                let _ = write!(out, "{magnitude}");
                first = false;
            }
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if !first {
                    out.push_str(sep);
                }
                var(&mut out, i, x);
                first = false;
            }
        }
        out
    }
}

/// Plain-text rendering, e.g. `2*z1*z2 - z3^2`.
impl fmt::Display for TruncatedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.render(
            |out, var, exp| {
                let _ = write!(out, "z{}", var + 1);
                if exp > 1 {
                    let _ = write!(out, "^{exp}");
                }
            },
            "*",
        );
        f.write_str(&s)
    }
}

fn total_degree(exponents: &[u32]) -> u64 {
    exponents.iter().map(|&e| u64::from(e)).sum()
}
