use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{group_order, ColoredPermutation};
use crate::limits::Limits;
use crate::scalar::Scalar;

/// A formal linear combination of elements of `G(r, n)`.
///
/// Coefficients are keyed by canonical rank; zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupAlgebraElement<S> {
    r: u32,
    n: usize,
    coeffs: BTreeMap<usize, S>,
}

impl<S: Scalar> GroupAlgebraElement<S> {
    pub fn zero(r: u32, n: usize) -> Self {
        GroupAlgebraElement { r, n, coeffs: BTreeMap::new() }
    }

    /// The unit `1 · id`.
    pub fn identity(r: u32, n: usize) -> Self {
        Self::basis_rank(r, n, 0)
    }

    /// The basis element `δ_π`.
    pub fn basis(pi: &ColoredPermutation) -> Self {
        Self::basis_rank(pi.r(), pi.n(), pi.rank())
    }

    fn basis_rank(r: u32, n: usize, rank: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(rank, S::one());
        GroupAlgebraElement { r, n, coeffs }
    }

    /// Builds an element from `(rank, coefficient)` pairs, summing repeats.
    pub fn from_ranks(r: u32, n: usize, terms: impl IntoIterator<Item = (usize, S)>) -> Result<Self> {
        let order = group_order(r, n);
        let mut out = Self::zero(r, n);
        for (rank, c) in terms {
            if rank as u128 >= order {
                return Err(Error::OutOfRange { what: "rank", value: rank as u64, expected: format!("0..{order}") });
            }
            out.add_term(rank, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, rank: usize, c: S) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&rank) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(rank, sum);
        }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// `(rank, coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &S)> {
        self.coeffs.iter().map(|(&k, v)| (k, v))
    }

    pub fn coefficient_at(&self, rank: usize) -> S {
        self.coeffs.get(&rank).cloned().unwrap_or_else(S::zero)
    }

    pub fn coefficient(&self, pi: &ColoredPermutation) -> S {
        self.coefficient_at(pi.rank())
    }

    fn check_same_group(&self, other: &Self) -> Result<()> {
        if self.r != other.r || self.n != other.n {
            return Err(Error::GroupMismatch { r1: self.r, n1: self.n, r2: other.r, n2: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        let mut out = self.clone();
        for (&k, v) in &other.coeffs {
            out.add_term(k, v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, q: &S) -> Self {
        let mut out = Self::zero(self.r, self.n);
        for (&k, v) in &self.coeffs {
            out.add_term(k, v.clone() * q.clone());
        }
        out
    }

    /// Convolution: `(AB)[π] = Σ_{στ=π} A[σ] B[τ]`.
    ///
    /// Work is split over the support of `self`; partial sums are merged in
    /// canonical order, so the result does not depend on the thread count.
    pub fn multiply(&self, other: &Self, limits: &Limits) -> Result<Self> {
        self.check_same_group(other)?;
        let terms = self.coeffs.len() as u128 * other.coeffs.len() as u128;
        Limits::check("convolution", terms, limits.max_product_terms)?;
        let unrank = |(&k, v): (&usize, &S)| {
            ColoredPermutation::unrank(self.r, self.n, k).map(|p| (p, v.clone()))
        };
        let left: Vec<(ColoredPermutation, S)> = self.coeffs.iter().map(unrank).collect::<Result<_>>()?;
        let right: Vec<(ColoredPermutation, S)> = other.coeffs.iter().map(unrank).collect::<Result<_>>()?;

        let chunk = (left.len() / (4 * rayon::current_num_threads()).max(1)).max(1);
        let partials: Vec<HashMap<usize, S>> = left
            .par_chunks(chunk)
            .map(|block| {
                let mut acc: HashMap<usize, S> = HashMap::new();
                for (sigma, a) in block {
                    for (tau, b) in &right {
                        let rank = sigma.compose_unchecked(tau).rank();
                        let term = a.clone() * b.clone();
                        match acc.get_mut(&rank) {
                            Some(slot) => *slot = slot.clone() + term,
                            None => {
                                acc.insert(rank, term);
                            }
                        }
                    }
                }
                acc
            })
            .collect();
        let mut out = Self::zero(self.r, self.n);
        for partial in partials {
            let mut sorted: Vec<_> = partial.into_iter().collect();
            sorted.sort_by_key(|(k, _)| *k);
            for (k, v) in sorted {
                out.add_term(k, v);
            }
        }
        Ok(out)
    }

    /// Coefficientwise comparison using [`Scalar::approx_eq`].
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.r == other.r
            && self.n == other.n
            && self.coeffs.keys().chain(other.coeffs.keys()).all(|&k| self.coefficient_at(k).approx_eq(&other.coefficient_at(k)))
    }
}

impl<S: Scalar> fmt::Display for GroupAlgebraElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&k, v)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let pi = ColoredPermutation::unrank(self.r, self.n, k).map_err(|_| fmt::Error)?;
            write!(f, "{v}·[{pi}]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::enumerate_group;
    use crate::Rational;

    type Q = GroupAlgebraElement<Rational>;

    fn p(r: u32, s: &str) -> ColoredPermutation {
        ColoredPermutation::parse(r, s).unwrap()
    }

    #[test]
    fn additive_laws() {
        let a = Q::basis(&p(2, "2_1 1_0")).add(&Q::identity(2, 2)).unwrap();
        assert_eq!(a.add(&Q::zero(2, 2)).unwrap(), a);
        assert!(a.scale(&Rational::from_i64(0)).is_zero());
        assert!(a.sub(&a).unwrap().is_zero());
        assert!(a.add(&Q::zero(3, 2)).is_err());
    }

    #[test]
    fn scaled_class_sum() {
        let all: Vec<_> = enumerate_group(5, 1, &Limits::default()).unwrap().collect();
        let sum = all.iter().fold(Q::zero(5, 1), |acc, pi| acc.add(&Q::basis(pi)).unwrap());
        let scaled = sum.scale(&Rational::from_ratio(1, 750));
        assert!(scaled.terms().all(|(_, c)| *c == Rational::from_ratio(1, 750)));
        assert_eq!(scaled.support_len(), 5);
    }

    #[test]
    fn products_of_basis_elements_compose() {
        let l = Limits::default();
        for r in [4, 5] {
            let sigma = p(r, "3_1 1_1 5_0 2_1 4_3");
            let pi = p(r, "2_0 1_3 3_1 5_2 4_2");
            let prod = Q::basis(&sigma).multiply(&Q::basis(&pi), &l).unwrap();
            assert_eq!(prod, Q::basis(&sigma.compose(&pi).unwrap()));
        }
        let a = Q::basis(&p(3, "2_1 1_2 3_0")).scale(&Rational::from_ratio(2, 3));
        assert_eq!(Q::identity(3, 3).multiply(&a, &l).unwrap(), a);
        assert_eq!(a.multiply(&Q::identity(3, 3), &l).unwrap(), a);
    }

    #[test]
    fn symmetric_group_square() {
        // (e + s)(e + s) = 2e + 2s in S_2
        let l = Limits::default();
        let c = Q::identity(1, 2).add(&Q::basis(&p(1, "2_0 1_0"))).unwrap();
        let sq = c.multiply(&c, &l).unwrap();
        assert_eq!(sq, c.scale(&Rational::from_i64(2)));
        // C_0 · C_0 = e in S_2
        assert_eq!(Q::identity(1, 2).multiply(&Q::identity(1, 2), &l).unwrap(), Q::identity(1, 2));
    }

    #[test]
    fn float_instantiation_matches_exact() {
        let l = Limits::default();
        let terms: Vec<(usize, i64)> = (0..8).map(|k| (k, k as i64 - 3)).collect();
        let qa = Q::from_ranks(2, 2, terms.iter().map(|&(k, v)| (k, Rational::from_i64(v)))).unwrap();
        let fa = GroupAlgebraElement::<f64>::from_ranks(2, 2, terms.iter().map(|&(k, v)| (k, v as f64))).unwrap();
        let qsq = qa.multiply(&qa, &l).unwrap();
        let fsq = fa.multiply(&fa, &l).unwrap();
        for k in 0..8 {
            let exact = qsq.coefficient_at(k);
            let approx = fsq.coefficient_at(k);
            assert!((approx - (exact.numer().to_string().parse::<f64>().unwrap())).abs() < 1e-12);
        }
    }

    #[test]
    fn convolution_cap() {
        let l = Limits { max_product_terms: 3, ..Limits::default() };
        let a = Q::from_ranks(2, 2, (0..2).map(|k| (k, Rational::from_i64(1)))).unwrap();
        assert!(matches!(a.multiply(&a, &l), Err(Error::CapExceeded { .. })));
        assert!(Q::from_ranks(2, 2, [(8, Rational::from_i64(1))]).is_err());
    }
}
