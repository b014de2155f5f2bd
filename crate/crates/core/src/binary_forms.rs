//! Binary forms over `Q` and the first transvectant.
//!
//! A form of degree `e` is stored by its coefficients `c_0, …, c_e` in the plain
//! monomial basis, `Σ c_i x^(e-i) y^i` (x-degree descending). The
//! binomial-normalized coordinates `f_i = c_i / C(e, i)` are available through
//! [`BinaryForm::from_binomial`] and [`BinaryForm::to_binomial`].

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<BigRational>,
}

impl BinaryForm {
    /// A form from plain-basis coefficients; the formal degree is
    /// `coeffs.len() - 1` even when leading coefficients vanish.
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyForm);
        }
        Ok(Self { coeffs })
    }

    pub fn from_integers(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero(degree: usize) -> Self {
        Self { coeffs: vec![BigRational::zero(); degree + 1] }
    }

    /// `c · x^(degree - i) y^i`.
    pub fn monomial(degree: usize, i: usize, c: BigRational) -> Result<Self> {
        if i > degree {
            return Err(Error::IndexOutOfRange { name: "i", value: i as i64, max: degree as i64 });
        }
        let mut f = Self::zero(degree);
        f.coeffs[i] = c;
        Ok(f)
    }

    /// The form `Σ C(e, i) f_i x^(e-i) y^i`.
    pub fn from_binomial(normalized: Vec<BigRational>) -> Result<Self> {
        let e = normalized.len().checked_sub(1).ok_or(Error::EmptyForm)?;
        let coeffs = normalized.into_iter().enumerate().map(|(i, f)| f * binom(e, i)).collect();
        Ok(Self { coeffs })
    }

    /// The binomial-normalized coordinates `f_i = c_i / C(e, i)`.
    pub fn to_binomial(&self) -> Vec<BigRational> {
        let e = self.degree();
        self.coeffs.iter().enumerate().map(|(i, c)| c / binom(e, i)).collect()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_degree(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_degree(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { coeffs })
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    pub fn mul_form(&self, other: &Self) -> Self {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    /// `self^k`, of formal degree `k · degree`. `k = 0` gives the constant 1.
    pub fn pow_form(&self, k: u32) -> Self {
        let mut result = Self { coeffs: vec![BigRational::one()] };
        for _ in 0..k {
            result = result.mul_form(self);
        }
        result
    }

    /// `∂/∂x`, of degree `e - 1`. Requires `e ≥ 1`.
    fn partial_x(&self) -> Self {
        let e = self.degree();
        let coeffs = (0..e).map(|i| &self.coeffs[i] * BigInt::from(e - i)).collect();
        Self { coeffs }
    }

    /// `∂/∂y`, of degree `e - 1`. Requires `e ≥ 1`.
    fn partial_y(&self) -> Self {
        let e = self.degree();
        let coeffs = (1..=e).map(|i| &self.coeffs[i] * BigInt::from(i)).collect();
        Self { coeffs }
    }

    fn same_degree(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(())
    }
}

/// The first transvectant `{f, g} = f_x g_y - f_y g_x`, a form of degree
/// `m + n - 2`.
pub fn transvectant(f: &BinaryForm, g: &BinaryForm) -> Result<BinaryForm> {
    if f.degree() == 0 || g.degree() == 0 {
        return Err(Error::DegreeTooLow);
    }
    let left = f.partial_x().mul_form(&g.partial_y());
    let right = f.partial_y().mul_form(&g.partial_x());
    left.sub(&right)
}

/// Index pairs `(i, j)` with `i + j = k + 1`, `i ≤ m`, `j ≤ n`: the monomials
/// `f_i g_j` that can occur in the coefficient `t_k` of `{f, g}`.
pub fn transvectant_support(m: usize, n: usize, k: usize) -> Result<Vec<(usize, usize)>> {
    if m == 0 || n == 0 {
        return Err(Error::DegreeTooLow);
    }
    let top = m + n - 2;
    if k > top {
        return Err(Error::IndexOutOfRange { name: "k", value: k as i64, max: top as i64 });
    }
    let total = k + 1;
    Ok((total.saturating_sub(n)..=m.min(total)).map(|i| (i, total - i)).collect())
}

/// The transvectant of two generic forms, with the binomial-normalized
/// coefficients `f_0..f_m`, `g_0..g_n` treated as indeterminates.
///
/// Each plain coefficient `t_k` of `{f, g}` is bilinear in the `f_i` and
/// `g_j`; this table stores the rational coefficient of `f_i g_j` in `t_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicTransvectant {
    m: usize,
    n: usize,
    coeffs: BTreeMap<(usize, usize, usize), BigRational>,
}

impl SymbolicTransvectant {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::DegreeTooLow);
        }
        let mut coeffs = BTreeMap::new();
        for i in 0..=m {
            let fi = BinaryForm::from_binomial(unit_vector(m, i))?;
            for j in 0..=n {
                let gj = BinaryForm::from_binomial(unit_vector(n, j))?;
                let t = transvectant(&fi, &gj)?;
                for (k, c) in t.coeffs.into_iter().enumerate() {
                    if !c.is_zero() {
                        coeffs.insert((k, i, j), c);
                    }
                }
            }
        }
        Ok(Self { m, n, coeffs })
    }

    pub fn degrees(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    /// Coefficient of `f_i g_j` in `t_k` (zero when absent).
    pub fn coefficient(&self, k: usize, i: usize, j: usize) -> BigRational {
        self.coeffs.get(&(k, i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero monomials `((i, j), coefficient)` of `t_k`.
    pub fn monomials(&self, k: usize) -> impl Iterator<Item = ((usize, usize), &BigRational)> {
        self.coeffs.range((k, 0, 0)..=(k, usize::MAX, usize::MAX)).map(|(&(_, i, j), c)| ((i, j), c))
    }

    /// Substitutes concrete forms for the indeterminates.
    pub fn evaluate(&self, f: &BinaryForm, g: &BinaryForm) -> Result<BinaryForm> {
        if f.degree() != self.m {
            return Err(Error::DegreeMismatch(f.degree(), self.m));
        }
        if g.degree() != self.n {
            return Err(Error::DegreeMismatch(g.degree(), self.n));
        }
        let (fb, gb) = (f.to_binomial(), g.to_binomial());
        let mut t = BinaryForm::zero(self.m + self.n - 2);
        for (&(k, i, j), c) in &self.coeffs {
            t.coeffs[k] += c * &fb[i] * &gb[j];
        }
        Ok(t)
    }
}

fn unit_vector(e: usize, i: usize) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); e + 1];
    v[i] = BigRational::one();
    v
}

fn binom(e: usize, i: usize) -> BigRational {
    BigRational::from_integer(binomial(BigInt::from(e), BigInt::from(i)))
}
