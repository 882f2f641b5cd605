use std::fmt;

use crate::scalar::Scalar;

/// Dense univariate polynomial; `coefficients[i]` multiplies `x^i`.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<S> {
    coefficients: Vec<S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn new(mut coefficients: Vec<S>) -> Self {
        while coefficients.last().is_some_and(|c| c.is_zero()) {
            coefficients.pop();
        }
        Polynomial { coefficients }
    }

    pub fn zero() -> Self {
        Polynomial { coefficients: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// `a + b x`.
    pub fn linear(a: S, b: S) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coefficients(&self) -> &[S] {
        &self.coefficients
    }

    pub fn coefficient(&self, power: usize) -> S {
        self.coefficients.get(power).cloned().unwrap_or_else(S::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        Self::new((0..len).map(|i| self.coefficient(i) + other.coefficient(i)).collect())
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coefficients.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, x: &S) -> S {
        self.coefficients.iter().rev().fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }
}

impl<S: Scalar> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}
