//! Descent-number class sums `C_d`, the structure polynomial `φ(x)` and the
//! colored Eulerian idempotents.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::element::GroupAlgebraElement;
use super::partition::{verify_closure, ClassAlgebra, ClassPartition, StructureConstants};
use super::polynomial::Polynomial;
use crate::binomial::binomial_at;
use crate::error::{Error, Result};
use crate::group::ColoredGroup;
use crate::limits::Limits;
use crate::scalar::{format_rational, Scalar};
use crate::Rational;

/// `C_0, ..., C_n`; classes that are empty (e.g. `C_n` when `r = 1`) give
/// the zero element.
pub fn class_sums_des<S: Scalar>(group: &ColoredGroup) -> (ClassPartition, Vec<GroupAlgebraElement<S>>) {
    let partition = ClassPartition::by_des(group);
    let sums = (0..=group.n())
        .map(|d| {
            let terms = group.elements().iter().enumerate().filter(|(_, p)| p.des() == d).map(|(k, _)| (k, S::one()));
            GroupAlgebraElement::from_ranks(group.r(), group.n(), terms).expect("ranks come from the group")
        })
        .collect();
    (partition, sums)
}

/// One class sum per realized colored composition.
pub fn class_sums_mr<S: Scalar>(group: &ColoredGroup) -> (ClassPartition, Vec<GroupAlgebraElement<S>>) {
    let partition = ClassPartition::by_colored_composition(group);
    let sums = partition.class_sums();
    (partition, sums)
}

/// `Σ_d coeffs[d] C_d`.
pub fn combine_des<S: Scalar>(group: &ColoredGroup, coeffs: &[S]) -> GroupAlgebraElement<S> {
    let terms = group.elements().iter().enumerate().map(|(k, p)| (k, coeffs[p.des()].clone()));
    GroupAlgebraElement::from_ranks(group.r(), group.n(), terms).expect("ranks come from the group")
}

/// Coefficient of `C_d` in `φ(x)`, namely `C(x + n - d, n)`, for `d = 0..=n`.
pub fn structure_poly_coefficients<S: Scalar>(n: usize, x: &S) -> Vec<S> {
    (0..=n).map(|d| binomial_at(&(x.clone() + S::from_i64((n - d) as i64)), n)).collect()
}

/// `φ(x) = Σ_π C(x + n - des π, n) π`.
pub fn structure_poly_eval<S: Scalar>(group: &ColoredGroup, x: &S) -> GroupAlgebraElement<S> {
    combine_des(group, &structure_poly_coefficients(group.n(), x))
}

/// `r x y + x + y`.
pub fn phi_argument<S: Scalar>(r: u32, x: &S, y: &S) -> S {
    S::from_i64(r as i64) * x.clone() * y.clone() + x.clone() + y.clone()
}

/// Checks `φ(x) φ(y) = φ(rxy + x + y)` by full convolution.
pub fn verify_phi_identity<S: Scalar>(group: &ColoredGroup, pairs: &[(S, S)], limits: &Limits) -> Result<bool> {
    for (x, y) in pairs {
        let lhs = structure_poly_eval(group, x).multiply(&structure_poly_eval(group, y), limits)?;
        let rhs = structure_poly_eval(group, &phi_argument(group.r(), x, y));
        if !lhs.approx_eq(&rhs) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks `φ(x) φ(y) = φ(rxy + x + y)` through the des structure constants.
pub fn verify_phi_identity_collapsed<S: Scalar>(algebra: &DesAlgebra<S>, pairs: &[(S, S)]) -> bool {
    let n = algebra.n();
    pairs.iter().all(|(x, y)| {
        let lhs = algebra.multiply(&structure_poly_coefficients(n, x), &structure_poly_coefficients(n, y));
        let rhs = algebra.normalize(&structure_poly_coefficients(n, &phi_argument(algebra.r(), x, y)));
        lhs.iter().zip(&rhs).all(|(a, b)| a.approx_eq(b))
    })
}

/// Multiplication in the span of `C_0, ..., C_n`, on vectors indexed by
/// descent number.
#[derive(Debug, Clone)]
pub struct DesAlgebra<S> {
    r: u32,
    n: usize,
    /// Class index of each descent number, if the class is nonempty.
    class_of_des: Vec<Option<usize>>,
    des_of_class: Vec<usize>,
    inner: ClassAlgebra<S>,
}

impl<S: Scalar> DesAlgebra<S> {
    /// Builds the table from one representative per class, after checking
    /// closure when `verify` is set.
    pub fn new(group: &ColoredGroup, verify: bool, limits: &Limits) -> Result<Self> {
        let partition = ClassPartition::by_des(group);
        let constants = if verify {
            StructureConstants::from_report(&verify_closure(group, &partition, limits)?)?
        } else {
            StructureConstants::from_representatives(group, &partition)?
        };
        Ok(Self::from_constants(group, &partition, constants))
    }

    pub fn from_constants(group: &ColoredGroup, partition: &ClassPartition, constants: StructureConstants) -> Self {
        let mut class_of_des = vec![None; group.n() + 1];
        let mut des_of_class = Vec::with_capacity(partition.class_count());
        for (c, info) in partition.classes().iter().enumerate() {
            let d = group.element(info.representative).des();
            class_of_des[d] = Some(c);
            des_of_class.push(d);
        }
        DesAlgebra { r: group.r(), n: group.n(), class_of_des, des_of_class, inner: ClassAlgebra::new(constants) }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn constants(&self) -> &StructureConstants {
        self.inner.constants()
    }

    /// Zeroes the entries of empty classes, which do not affect the element.
    pub fn normalize(&self, v: &[S]) -> Vec<S> {
        (0..=self.n).map(|d| if self.class_of_des[d].is_some() { v[d].clone() } else { S::zero() }).collect()
    }

    pub fn multiply(&self, a: &[S], b: &[S]) -> Vec<S> {
        let project = |v: &[S]| -> Vec<S> { self.des_of_class.iter().map(|&d| v[d].clone()).collect() };
        let product = self.inner.multiply(&project(a), &project(b));
        let mut out = vec![S::zero(); self.n + 1];
        for (c, v) in product.into_iter().enumerate() {
            out[self.des_of_class[c]] = v;
        }
        out
    }
}

/// `α[i][d]`: coefficient of `x^i` in `C((x - 1)/r + n - d, n)`.
pub fn idempotent_coefficients<S: Scalar>(r: u32, n: usize) -> Vec<Vec<S>> {
    let inv_r = S::one() / S::from_i64(r as i64);
    let expansions: Vec<Polynomial<S>> = (0..=n)
        .map(|d| {
            let mut p = Polynomial::constant(S::one());
            for m in 0..n {
                let shift = S::from_i64((n - d) as i64 - m as i64) - inv_r.clone();
                let factor = Polynomial::linear(shift, inv_r.clone()).scale(&(S::one() / S::from_i64(m as i64 + 1)));
                p = p.mul(&factor);
            }
            p
        })
        .collect();
    (0..=n).map(|i| expansions.iter().map(|p| p.coefficient(i)).collect()).collect()
}

/// `c_i = Σ_d α[i][d] C_d` for `i = 0..=n`.
pub fn eulerian_idempotents<S: Scalar>(group: &ColoredGroup) -> Vec<GroupAlgebraElement<S>> {
    idempotent_coefficients::<S>(group.r(), group.n()).iter().map(|row| combine_des(group, row)).collect()
}

/// Exact idempotent coefficients by descent class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentTable {
    pub r: u32,
    pub n: usize,
    /// `coefficients[i][d]`, in lowest terms.
    pub coefficients: Vec<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentTableJson {
    pub r: u32,
    pub n: usize,
    pub idempotents: Vec<IdempotentJson>,
    pub common_denominator: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentJson {
    pub i: usize,
    pub by_des_class: Vec<DesCoefficientJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesCoefficientJson {
    pub des: usize,
    pub num: String,
    pub den: String,
}

impl IdempotentTable {
    pub fn new(r: u32, n: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidColorCount(r));
        }
        Ok(IdempotentTable { r, n, coefficients: idempotent_coefficients(r, n) })
    }

    pub fn coefficient(&self, i: usize, d: usize) -> &Rational {
        &self.coefficients[i][d]
    }

    /// Least common multiple of all denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.coefficients.iter().flatten().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
    }

    /// `c_i` as `(1/D)(a_0 C_0 + ... + a_n C_n)` with `D` the common
    /// denominator: returns the integers `a_d`.
    pub fn scaled_row(&self, i: usize) -> Vec<BigInt> {
        let den = Rational::from_integer(self.common_denominator());
        self.coefficients[i].iter().map(|q| (q * &den).to_integer()).collect()
    }

    /// Renders `c_i = 1/D (a_0 C_0 + ...)`.
    pub fn render_row(&self, i: usize) -> String {
        let mut terms = String::new();
        for (d, a) in self.scaled_row(i).iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (sign, mag) = if *a < BigInt::zero() { ("-", -a) } else { ("+", a.clone()) };
            if terms.is_empty() {
                if sign == "-" {
                    terms.push('-');
                }
            } else {
                terms.push_str(&format!(" {sign} "));
            }
            if mag.is_one() {
                terms.push_str(&format!("C_{d}"));
            } else {
                terms.push_str(&format!("{mag} C_{d}"));
            }
        }
        if terms.is_empty() {
            terms.push('0');
        }
        format!("c_{i} = 1/{} ({terms})", self.common_denominator())
    }

    pub fn to_json(&self) -> IdempotentTableJson {
        IdempotentTableJson {
            r: self.r,
            n: self.n,
            idempotents: self
                .coefficients
                .iter()
                .enumerate()
                .map(|(i, row)| IdempotentJson {
                    i,
                    by_des_class: row
                        .iter()
                        .enumerate()
                        .map(|(des, q)| DesCoefficientJson { des, num: q.numer().to_string(), den: q.denom().to_string() })
                        .collect(),
                })
                .collect(),
            common_denominator: self.common_denominator().to_string(),
        }
    }

    pub fn from_json(json: &IdempotentTableJson) -> Result<Self> {
        let mut coefficients = Vec::with_capacity(json.idempotents.len());
        for (pos, row) in json.idempotents.iter().enumerate() {
            if row.i != pos || row.by_des_class.len() != json.n + 1 {
                return Err(Error::Parse(format!("malformed idempotent row {pos}")));
            }
            let mut parsed = Vec::with_capacity(row.by_des_class.len());
            for (d, entry) in row.by_des_class.iter().enumerate() {
                let num: BigInt = entry.num.parse().map_err(|_| Error::Parse(entry.num.clone()))?;
                let den: BigInt = entry.den.parse().map_err(|_| Error::Parse(entry.den.clone()))?;
                if entry.des != d || den <= BigInt::zero() {
                    return Err(Error::Parse(format!("malformed coefficient at i={pos}, des={d}")));
                }
                let q = Rational::new(num.clone(), den.clone());
                if q.numer() != &num || q.denom() != &den {
                    return Err(Error::Parse(format!("{num}/{den} is not in lowest terms")));
                }
                parsed.push(q);
            }
            coefficients.push(parsed);
        }
        if coefficients.len() != json.n + 1 {
            return Err(Error::Parse("wrong number of idempotents".into()));
        }
        let table = IdempotentTable { r: json.r, n: json.n, coefficients };
        if table.common_denominator().to_string() != json.common_denominator {
            return Err(Error::Parse("common denominator mismatch".into()));
        }
        Ok(table)
    }

    /// Plain-text rendering, one idempotent per line.
    pub fn render(&self) -> String {
        (0..=self.n).map(|i| self.render_row(i)).collect::<Vec<_>>().join("\n")
    }

    /// Entry `(i, d)` as `num/den`.
    pub fn entry_string(&self, i: usize, d: usize) -> String {
        format_rational(&self.coefficients[i][d])
    }
}

/// Outcome of the orthogonal-idempotent checks on the coefficient vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentCheck {
    pub r: u32,
    pub n: usize,
    /// `(i, j)` pairs where `c_i c_j ≠ δ_ij c_i`.
    pub failed_products: Vec<(usize, usize)>,
    pub sums_to_identity: bool,
    pub top_is_uniform: bool,
}

impl IdempotentCheck {
    pub fn passed(&self) -> bool {
        self.failed_products.is_empty() && self.sums_to_identity && self.top_is_uniform
    }
}

/// Checks `c_i c_j = δ_ij c_i`, `Σ c_i = 1` and `c_n = |G|^{-1} Σ π` using
/// class-collapsed multiplication.
pub fn check_idempotents(algebra: &DesAlgebra<Rational>) -> IdempotentCheck {
    let (r, n) = (algebra.r(), algebra.n());
    let alpha: Vec<Vec<Rational>> =
        idempotent_coefficients::<Rational>(r, n).iter().map(|row| algebra.normalize(row)).collect();
    let zero = vec![Rational::zero(); n + 1];
    let mut failed_products = Vec::new();
    for i in 0..=n {
        for j in 0..=n {
            let product = algebra.multiply(&alpha[i], &alpha[j]);
            let expected = if i == j { &alpha[i] } else { &zero };
            if &product != expected {
                failed_products.push((i, j));
            }
        }
    }
    let mut sum = zero.clone();
    for row in &alpha {
        for (s, a) in sum.iter_mut().zip(row) {
            *s += a;
        }
    }
    let mut identity = zero.clone();
    identity[0] = Rational::one();
    let order = crate::group::group_order(r, n);
    let uniform = algebra.normalize(&vec![Rational::new(BigInt::one(), BigInt::from(order)); n + 1]);
    IdempotentCheck {
        r,
        n,
        failed_products,
        sums_to_identity: sum == identity,
        top_is_uniform: alpha[n] == uniform,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(r: u32, n: usize) -> ColoredGroup {
        ColoredGroup::new(r, n, &Limits::default()).unwrap()
    }

    fn q(num: i64, den: i64) -> Rational {
        Rational::from_ratio(num, den)
    }

    #[test]
    fn des_class_sizes() {
        let sizes = |r, n| -> Vec<usize> {
            class_sums_des::<Rational>(&group(r, n)).1.iter().map(|c| c.support_len()).collect()
        };
        assert_eq!(sizes(2, 2), vec![1, 6, 1]);
        assert_eq!(sizes(1, 2), vec![1, 1, 0]);
        assert_eq!(sizes(5, 3).iter().sum::<usize>(), 750);
        assert!(sizes(5, 3).iter().all(|&s| s > 0));
    }

    #[test]
    fn phi_at_zero_is_identity() {
        for (r, n) in [(1, 3), (2, 2), (3, 0)] {
            let g = group(r, n);
            assert_eq!(structure_poly_eval::<Rational>(&g, &Rational::zero()), GroupAlgebraElement::identity(r, n));
        }
    }

    #[test]
    fn phi_at_integers_matches_order_polynomial() {
        let g = group(2, 3);
        let phi = structure_poly_eval::<Rational>(&g, &Rational::from_i64(2));
        for p in g.elements() {
            let expected = crate::ppartition::omega_pi(p, 2);
            assert_eq!(phi.coefficient(p), Rational::from_integer(expected.into()));
        }
    }

    #[test]
    fn idempotent_table_r5_n3() {
        let table = IdempotentTable::new(5, 3).unwrap();
        assert_eq!(table.common_denominator(), BigInt::from(750));
        let rows: Vec<Vec<i64>> =
            vec![vec![504, -36, 24, -66], vec![218, 23, -22, 83], vec![27, 12, -3, -18], vec![1, 1, 1, 1]];
        for (i, row) in rows.iter().enumerate() {
            for (d, &a) in row.iter().enumerate() {
                assert_eq!(table.coefficient(i, d), &q(a, 750), "c_{i}, C_{d}");
            }
        }
        assert_eq!(table.entry_string(0, 0), "84/125");
        assert_eq!(table.render_row(0), "c_0 = 1/750 (504 C_0 - 36 C_1 + 24 C_2 - 66 C_3)");
        assert_eq!(table.render_row(3), "c_3 = 1/750 (C_0 + C_1 + C_2 + C_3)");
    }

    #[test]
    fn table_json_round_trip() {
        let table = IdempotentTable::new(5, 3).unwrap();
        let json = table.to_json();
        assert_eq!(json.idempotents[0].by_des_class[0], DesCoefficientJson { des: 0, num: "84".into(), den: "125".into() });
        assert_eq!(json.common_denominator, "750");
        let text = serde_json::to_string(&json).unwrap();
        let back: IdempotentTableJson = serde_json::from_str(&text).unwrap();
        assert_eq!(IdempotentTable::from_json(&back).unwrap(), table);
        let mut bad = json.clone();
        bad.idempotents[0].by_des_class[0].num = "168".into();
        bad.idempotents[0].by_des_class[0].den = "250".into();
        assert!(IdempotentTable::from_json(&bad).is_err());
    }

    #[test]
    fn idempotents_collapsed() {
        for (r, n) in [(1, 3), (2, 3), (2, 0), (3, 2)] {
            let g = group(r, n);
            let alg = DesAlgebra::<Rational>::new(&g, true, &Limits::default()).unwrap();
            assert!(check_idempotents(&alg).passed(), "r={r}, n={n}");
        }
    }

    #[test]
    fn idempotents_naive_small() {
        let g = group(2, 2);
        let cs = eulerian_idempotents::<Rational>(&g);
        let l = Limits::default();
        let mut total = GroupAlgebraElement::zero(2, 2);
        for (i, ci) in cs.iter().enumerate() {
            for (j, cj) in cs.iter().enumerate() {
                let prod = ci.multiply(cj, &l).unwrap();
                if i == j {
                    assert_eq!(&prod, ci);
                } else {
                    assert!(prod.is_zero());
                }
            }
            total = total.add(ci).unwrap();
        }
        assert_eq!(total, GroupAlgebraElement::identity(2, 2));
    }

    #[test]
    fn phi_identity_both_routes() {
        let ints: Vec<Rational> = (0..3).map(Rational::from_i64).collect();
        let pairs: Vec<(Rational, Rational)> =
            ints.iter().flat_map(|x| ints.iter().map(move |y| (x.clone(), y.clone()))).collect();
        let g = group(2, 2);
        assert!(verify_phi_identity(&g, &pairs, &Limits::default()).unwrap());
        let g = group(3, 3);
        let alg = DesAlgebra::<Rational>::new(&g, false, &Limits::default()).unwrap();
        assert!(verify_phi_identity_collapsed(&alg, &pairs));
        let rational = [(q(1, 3), q(-2, 5))];
        assert!(verify_phi_identity_collapsed(&alg, &rational));
    }

    #[test]
    fn phi_identity_rejects_wrong_argument() {
        let g = group(2, 2);
        let alg = DesAlgebra::<Rational>::new(&g, false, &Limits::default()).unwrap();
        let n = alg.n();
        let lhs = alg.multiply(&structure_poly_coefficients(n, &Rational::one()), &structure_poly_coefficients(n, &Rational::one()));
        let wrong = structure_poly_coefficients(n, &Rational::from_i64(2));
        assert_ne!(lhs, alg.normalize(&wrong));
    }

    #[test]
    fn float_table_close_to_exact() {
        let exact = idempotent_coefficients::<Rational>(5, 3);
        let approx = idempotent_coefficients::<f64>(5, 3);
        for (er, ar) in exact.iter().zip(&approx) {
            for (e, a) in er.iter().zip(ar) {
                let e = e.numer().to_string().parse::<f64>().unwrap() / e.denom().to_string().parse::<f64>().unwrap();
                assert!((e - a).abs() < 1e-12);
            }
        }
    }
}
