//! Exact integer polynomials in one and two variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

/// Polynomial with arbitrary-precision integer coefficients in ascending degree.
/// Trailing zero coefficients are always trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
    var: String,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>, var: impl Into<String>) -> Self {
        let mut p = IntPolynomial {
            coeffs,
            var: var.into(),
        };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64], var: impl Into<String>) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), var)
    }

    pub fn zero(var: impl Into<String>) -> Self {
        Self::new(Vec::new(), var)
    }

    pub fn constant(c: impl Into<BigInt>, var: impl Into<String>) -> Self {
        Self::new(vec![c.into()], var)
    }

    pub fn one(var: impl Into<String>) -> Self {
        Self::constant(1, var)
    }

    /// `var - root`
    pub fn linear_factor(root: impl Into<BigInt>, var: impl Into<String>) -> Self {
        Self::new(vec![-root.into(), BigInt::one()], var)
    }

    /// `a + b * var`
    pub fn linear(a: impl Into<BigInt>, b: impl Into<BigInt>, var: impl Into<String>) -> Self {
        Self::new(vec![a.into(), b.into()], var)
    }

    pub fn monomial(c: impl Into<BigInt>, degree: usize, var: impl Into<String>) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::new(coeffs, var)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn with_var(mut self, var: impl Into<String>) -> Self {
        self.var = var.into();
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Formal substitution `self(x)`; the result lives in `x`'s variable.
    pub fn compose(&self, x: &IntPolynomial) -> IntPolynomial {
        self.coeffs
            .iter()
            .rev()
            .fold(IntPolynomial::zero(x.var()), |acc, c| {
                &(&acc * x) + &IntPolynomial::constant(c.clone(), x.var())
            })
    }

    /// Product of the given polynomials (the empty product is 1).
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a IntPolynomial>, var: &str) -> Self {
        factors
            .into_iter()
            .fold(IntPolynomial::one(var), |acc, f| &acc * f)
    }

    /// Coefficients as JSON numbers when they fit in `i64`, strings otherwise.
    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(bigint_json).collect())
    }
}

pub(crate) fn bigint_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(c.to_string()),
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        IntPolynomial::new(coeffs, self.var.clone())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: Self) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect(), self.var.clone())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero(self.var.clone());
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs, self.var.clone())
    }
}

/// Descending-degree human form, e.g. `t^2 - 18t + 72`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "{}", self.var)?,
                1 => write!(f, "{mag}{}", self.var)?,
                _ if unit => write!(f, "{}^{k}", self.var)?,
                _ => write!(f, "{mag}{}^{k}", self.var)?,
            }
        }
        Ok(())
    }
}

/// Polynomial in `t` and `u`; the key `(p, q)` holds the coefficient of
/// `t^p u^q`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPolynomial {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BiPolynomial {
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((0, 0), BigInt::one());
        BiPolynomial { terms }
    }

    /// Lifts a polynomial in `u` (its own variable name is ignored).
    pub fn from_u(p: &IntPolynomial) -> Self {
        let terms = p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(q, c)| ((0, q), c.clone()))
            .collect();
        BiPolynomial { terms }
    }

    pub fn t_monomial(c: impl Into<BigInt>, p: usize) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((p, 0), c);
        }
        BiPolynomial { terms }
    }

    pub fn coeff(&self, p: usize, q: usize) -> BigInt {
        self.terms.get(&(p, q)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), BigInt> {
        &self.terms
    }

    pub fn add(&self, other: &BiPolynomial) -> BiPolynomial {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            *terms.entry(*k).or_default() += c;
        }
        terms.retain(|_, c| !c.is_zero());
        BiPolynomial { terms }
    }

    pub fn mul(&self, other: &BiPolynomial) -> BiPolynomial {
        let mut terms: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for ((p1, q1), a) in &self.terms {
            for ((p2, q2), b) in &other.terms {
                *terms.entry((p1 + p2, q1 + q2)).or_default() += a * b;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        BiPolynomial { terms }
    }

    pub fn eval(&self, t: &BigInt, u: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|((p, q), c)| c * num_traits::pow(t.clone(), *p) * num_traits::pow(u.clone(), *q))
            .sum()
    }

    /// The one-variable polynomial obtained by setting `u = t`.
    pub fn diagonal(&self, var: &str) -> IntPolynomial {
        let deg = self.terms.keys().map(|(p, q)| p + q).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for ((p, q), c) in &self.terms {
            coeffs[p + q] += c;
        }
        IntPolynomial::new(coeffs, var)
    }

    /// `[[p, q, coeff], ...]` in key order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|((p, q), c)| {
                    Value::Array(vec![Value::from(*p), Value::from(*q), bigint_json(c)])
                })
                .collect(),
        )
    }
}

impl fmt::Display for BiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((p, q), c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mut mono = String::new();
            for (v, e) in [("t", *p), ("u", *q)] {
                match e {
                    0 => {}
                    1 => mono.push_str(v),
                    e => mono.push_str(&format!("{v}^{e}")),
                }
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_descending() {
        let p = IntPolynomial::from_i64s(&[72, -18, 1], "t");
        assert_eq!(p.to_string(), "t^2 - 18t + 72");
        assert_eq!(IntPolynomial::from_i64s(&[0, -1], "t").to_string(), "-t");
        assert_eq!(IntPolynomial::zero("t").to_string(), "0");
        assert_eq!(IntPolynomial::from_i64s(&[1, 0, 0], "t").degree(), Some(0));
    }

    #[test]
    fn product_of_linear_factors() {
        let fs: Vec<_> = [6, 12]
            .iter()
            .map(|&r| IntPolynomial::linear_factor(r, "t"))
            .collect();
        let p = IntPolynomial::product(&fs, "t");
        assert_eq!(p, IntPolynomial::from_i64s(&[72, -18, 1], "t"));
        assert_eq!(p.eval_i64(6), BigInt::zero());
    }

    #[test]
    fn compose_substitutes() {
        // p(t) = t^2 + 1, x = u - 1  =>  u^2 - 2u + 2
        let p = IntPolynomial::from_i64s(&[1, 0, 1], "t");
        let x = IntPolynomial::from_i64s(&[-1, 1], "u");
        assert_eq!(p.compose(&x), IntPolynomial::from_i64s(&[2, -2, 1], "u"));
    }

    #[test]
    fn bivariate_product() {
        // (1 + u + 2t)(1 + u + 4t)
        let pu = BiPolynomial::from_u(&IntPolynomial::from_i64s(&[1, 1], "u"));
        let a = pu.add(&BiPolynomial::t_monomial(2, 1));
        let b = pu.add(&BiPolynomial::t_monomial(4, 1));
        let ab = a.mul(&b);
        assert_eq!(ab.coeff(2, 0), BigInt::from(8));
        assert_eq!(ab.coeff(1, 1), BigInt::from(6));
        assert_eq!(ab.coeff(0, 2), BigInt::from(1));
        assert_eq!(
            ab.eval(&BigInt::from(-1), &BigInt::from(-1)),
            BigInt::from(8)
        );
    }
}
