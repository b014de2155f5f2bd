//! JSON encodings of ring elements and binary forms, and the comma-separated
//! coefficient lists accepted on the command line.
//!
//! Big integers and rationals are always written as decimal strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use tvcount_core::{BinaryForm, RingSpec, TruncatedPolynomial};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed number {0:?}")]
    Number(String),
    #[error("empty coefficient list")]
    Empty,
    #[error("form of degree {degree} needs {} coefficients, got {found}", degree + 1)]
    CoefficientCount { degree: usize, found: usize },
    #[error(transparent)]
    Core(#[from] tvcount_core::Error),
}

/// `{"caps": [...], "terms": [{"exp": [...], "coeff": "<int>"}, ...]}` with
/// terms in lexicographic exponent order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub caps: Vec<u32>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i64>,
    pub coeff: String,
}

impl From<&TruncatedPolynomial> for PolynomialJson {
    fn from(p: &TruncatedPolynomial) -> Self {
        let terms = p
            .terms()
            .map(|(e, c)| TermJson { exp: e.iter().map(|&x| i64::from(x)).collect(), coeff: c.to_string() })
            .collect();
        Self { caps: p.spec().caps().to_vec(), terms }
    }
}

impl TryFrom<&PolynomialJson> for TruncatedPolynomial {
    type Error = FormatError;

    fn try_from(json: &PolynomialJson) -> Result<Self, FormatError> {
        let spec = RingSpec::new(json.caps.clone())?;
        let mut p = TruncatedPolynomial::zero(&spec);
        for term in &json.terms {
            let coeff: BigInt =
                term.coeff.trim().parse().map_err(|_| FormatError::Number(term.coeff.clone()))?;
            p = p.add(&TruncatedPolynomial::monomial(&spec, &term.exp, coeff)?)?;
        }
        Ok(p)
    }
}

/// `{"degree": e, "coeffs": ["c0", ...]}` in the plain basis, x-descending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    pub degree: usize,
    pub coeffs: Vec<String>,
}

impl From<&BinaryForm> for FormJson {
    fn from(f: &BinaryForm) -> Self {
        Self { degree: f.degree(), coeffs: f.coeffs().iter().map(ToString::to_string).collect() }
    }
}

impl TryFrom<&FormJson> for BinaryForm {
    type Error = FormatError;

    fn try_from(json: &FormJson) -> Result<Self, FormatError> {
        if json.coeffs.len() != json.degree + 1 {
            return Err(FormatError::CoefficientCount { degree: json.degree, found: json.coeffs.len() });
        }
        let coeffs = json.coeffs.iter().map(|c| parse_rational(c)).collect::<Result<_, _>>()?;
        Ok(BinaryForm::new(coeffs)?)
    }
}

/// Parses `"p/q"` or an integer.
pub fn parse_rational(s: &str) -> Result<BigRational, FormatError> {
    let bad = || FormatError::Number(s.to_owned());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Parses a comma-separated coefficient list such as `"1,-1/2,0"`.
pub fn parse_coefficients(s: &str) -> Result<Vec<BigRational>, FormatError> {
    if s.trim().is_empty() {
        return Err(FormatError::Empty);
    }
    s.split(',').map(parse_rational).collect()
}

pub fn format_coefficients(f: &BinaryForm) -> String {
    f.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3").unwrap(), BigRational::from_integer(3.into()));
        assert_eq!(parse_rational(" -2/4 ").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_coefficients("1,,2").is_err());
        assert!(parse_coefficients("  ").is_err());
    }

    #[test]
    fn form_json_checks_length() {
        let json = FormJson { degree: 2, coeffs: vec!["1".into(), "2".into()] };
        assert!(matches!(BinaryForm::try_from(&json), Err(FormatError::CoefficientCount { .. })));
        let json = FormJson { degree: 1, coeffs: vec!["1/3".into(), "2".into()] };
        let f = BinaryForm::try_from(&json).unwrap();
        assert_eq!(FormJson::from(&f), json);
    }

    #[test]
    fn polynomial_json_rejects_bad_terms() {
        let json =
            PolynomialJson { caps: vec![1, 1], terms: vec![TermJson { exp: vec![1], coeff: "2".into() }] };
        assert!(TruncatedPolynomial::try_from(&json).is_err());
        let json =
            PolynomialJson { caps: vec![1], terms: vec![TermJson { exp: vec![1], coeff: "2.5".into() }] };
        assert!(matches!(TruncatedPolynomial::try_from(&json), Err(FormatError::Number(_))));
    }
}
