//! Set partitions of `G(r, n)`, their class sums, and the test for whether
//! the class sums span a subalgebra.

use std::collections::BTreeMap;
use std::fmt::Display;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::element::GroupAlgebraElement;
use crate::error::{Error, Result};
use crate::group::{ColoredGroup, ColoredPermutation};
use crate::limits::Limits;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    /// Printable class key, e.g. the descent number or colored composition.
    pub key: String,
    /// Rank of the first member in canonical order.
    pub representative: usize,
    pub size: usize,
}

/// A labelling of `G(r, n)` by classes, ordered by class key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPartition {
    r: u32,
    n: usize,
    name: String,
    labels: Vec<usize>,
    classes: Vec<ClassInfo>,
}

impl ClassPartition {
    /// Partitions the group by the value of `key`; classes are sorted by key.
    pub fn from_key<K, F>(group: &ColoredGroup, name: &str, key: F) -> Self
    where
        K: Ord + Display,
        F: Fn(&ColoredPermutation) -> K,
    {
        let keys: Vec<K> = group.elements().iter().map(&key).collect();
        let mut index: BTreeMap<&K, (usize, usize)> = BTreeMap::new();
        for (rank, k) in keys.iter().enumerate() {
            index.entry(k).or_insert((rank, 0)).1 += 1;
        }
        let mut classes = Vec::with_capacity(index.len());
        let mut label_of: BTreeMap<&K, usize> = BTreeMap::new();
        for (i, (k, (rep, size))) in index.iter().enumerate() {
            classes.push(ClassInfo { key: k.to_string(), representative: *rep, size: *size });
            label_of.insert(k, i);
        }
        let labels = keys.iter().map(|k| label_of[k]).collect();
        ClassPartition { r: group.r(), n: group.n(), name: name.to_string(), labels, classes }
    }

    /// Classes by descent number.
    pub fn by_des(group: &ColoredGroup) -> Self {
        Self::from_key(group, "des", |p| p.des())
    }

    /// Classes by colored composition (Mantaci–Reutenauer).
    pub fn by_colored_composition(group: &ColoredGroup) -> Self {
        Self::from_key(group, "mr", |p| p.mr_key())
    }

    /// Classes by descent set.
    pub fn by_descent_set(group: &ColoredGroup) -> Self {
        Self::from_key(group, "desset", |p| DisplaySet(p.descent_set()))
    }

    /// Classes by the number of descents under the boundary convention
    /// `π(0) = 0_a`, `π(n+1) = 0_b`.
    pub fn by_variant_des(group: &ColoredGroup, a: u32, b: u32) -> Result<Self> {
        if a >= group.r() || b >= group.r() {
            return Err(Error::OutOfRange {
                what: "boundary color",
                value: a.max(b) as u64,
                expected: format!("0..{}", group.r()),
            });
        }
        Ok(Self::from_key(group, &format!("des[{a},{b}]"), |p| {
            p.descent_set_variant(a, b).map(|s| s.len()).unwrap_or(usize::MAX)
        }))
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn label(&self, rank: usize) -> usize {
        self.labels[rank]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Ranks belonging to class `c`, ascending.
    pub fn members(&self, c: usize) -> impl Iterator<Item = usize> + '_ {
        self.labels.iter().enumerate().filter(move |(_, &l)| l == c).map(|(rank, _)| rank)
    }

    /// Whether the two partitions group the elements identically,
    /// regardless of class names.
    pub fn same_blocks(&self, other: &Self) -> bool {
        if self.labels.len() != other.labels.len() {
            return false;
        }
        let mut forward = vec![usize::MAX; self.classes.len()];
        let mut backward = vec![usize::MAX; other.classes.len()];
        for (&a, &b) in self.labels.iter().zip(&other.labels) {
            if forward[a] == usize::MAX && backward[b] == usize::MAX {
                forward[a] = b;
                backward[b] = a;
            } else if forward[a] != b || backward[b] != a {
                return false;
            }
        }
        true
    }

    /// Every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Self) -> bool {
        let mut image = vec![usize::MAX; self.classes.len()];
        for (&a, &b) in self.labels.iter().zip(&coarser.labels) {
            if image[a] == usize::MAX {
                image[a] = b;
            } else if image[a] != b {
                return false;
            }
        }
        true
    }

    /// `Σ_{π in class c} π`.
    pub fn class_sum<S: Scalar>(&self, c: usize) -> GroupAlgebraElement<S> {
        GroupAlgebraElement::from_ranks(self.r, self.n, self.members(c).map(|k| (k, S::one())))
            .expect("ranks come from the partition")
    }

    pub fn class_sums<S: Scalar>(&self) -> Vec<GroupAlgebraElement<S>> {
        (0..self.class_count()).map(|c| self.class_sum(c)).collect()
    }

    /// `Σ_c coeffs[c] · (class sum c)`.
    pub fn combine<S: Scalar>(&self, coeffs: &[S]) -> GroupAlgebraElement<S> {
        let terms = self.labels.iter().enumerate().map(|(rank, &c)| (rank, coeffs[c].clone()));
        GroupAlgebraElement::from_ranks(self.r, self.n, terms).expect("ranks come from the partition")
    }

    fn check_group(&self, r: u32, n: usize) -> Result<()> {
        if self.r != r || self.n != n {
            return Err(Error::GroupMismatch { r1: self.r, n1: self.n, r2: r, n2: n });
        }
        Ok(())
    }
}

struct DisplaySet(Vec<usize>);

impl PartialEq for DisplaySet {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}
impl Eq for DisplaySet {}
impl PartialOrd for DisplaySet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for DisplaySet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.cmp(&other.0)
    }
}
impl Display for DisplaySet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Two members of one class with different coefficients.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpanWitness<T> {
    pub class: usize,
    pub first: ColoredPermutation,
    pub first_coefficient: T,
    pub second: ColoredPermutation,
    pub second_coefficient: T,
}

/// Outcome of [`is_in_span`].
#[derive(Debug, Clone, PartialEq)]
pub enum SpanCheck<S> {
    /// Per-class coefficients.
    InSpan(Vec<S>),
    NotInSpan(SpanWitness<S>),
}

impl<S> SpanCheck<S> {
    pub fn coefficients(self) -> Option<Vec<S>> {
        match self {
            SpanCheck::InSpan(v) => Some(v),
            SpanCheck::NotInSpan(_) => None,
        }
    }
}

/// Whether `element` is a combination of the partition's class sums, i.e.
/// constant on every class.
pub fn is_in_span<S: Scalar>(element: &GroupAlgebraElement<S>, partition: &ClassPartition) -> Result<SpanCheck<S>> {
    partition.check_group(element.r(), element.n())?;
    let mut seen: Vec<Option<(usize, S)>> = vec![None; partition.class_count()];
    for rank in 0..partition.labels.len() {
        let c = partition.labels[rank];
        let v = element.coefficient_at(rank);
        match &seen[c] {
            None => seen[c] = Some((rank, v)),
            Some((first, w)) if *w != v => {
                return Ok(SpanCheck::NotInSpan(SpanWitness {
                    class: c,
                    first: ColoredPermutation::unrank(partition.r, partition.n, *first)?,
                    first_coefficient: w.clone(),
                    second: ColoredPermutation::unrank(partition.r, partition.n, rank)?,
                    second_coefficient: v,
                }));
            }
            Some(_) => {}
        }
    }
    Ok(SpanCheck::InSpan(seen.into_iter().map(|s| s.map(|(_, v)| v).unwrap_or_else(S::zero)).collect()))
}

/// Result for one product of class sums.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairOutcome {
    pub left: usize,
    pub right: usize,
    pub passed: bool,
    /// Coefficient of each class in the product, when it lies in the span.
    pub coefficients: Option<Vec<u64>>,
    pub witness: Option<SpanWitness<u64>>,
}

/// Closure test for every ordered pair of class sums.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub partition: String,
    pub r: u32,
    pub n: usize,
    pub class_keys: Vec<String>,
    pub class_sizes: Vec<usize>,
    pub passed: bool,
    pub pairs: Vec<PairOutcome>,
}

impl ClosureReport {
    pub fn first_failure(&self) -> Option<&PairOutcome> {
        self.pairs.iter().find(|p| !p.passed)
    }
}

/// Multiplies every pair of class sums and checks each product is constant
/// on classes. Total work is `|G|^2` compositions.
pub fn verify_closure(group: &ColoredGroup, partition: &ClassPartition, limits: &Limits) -> Result<ClosureReport> {
    partition.check_group(group.r(), group.n())?;
    let order = group.order();
    Limits::check("closure products", order as u128 * order as u128, limits.max_product_terms)?;
    let classes = partition.class_count();

    let pairs: Vec<Vec<PairOutcome>> = (0..classes)
        .into_par_iter()
        .map(|left| -> Result<Vec<PairOutcome>> {
            // counts[right * order + rank] = coefficient of `rank` in C_left · C_right
            let mut counts = vec![0u64; classes * order];
            for sigma in partition.members(left) {
                let s = group.element(sigma);
                for (tau, t) in group.elements().iter().enumerate() {
                    let right = partition.labels[tau];
                    counts[right * order + s.compose_unchecked(t).rank()] += 1;
                }
            }
            (0..classes)
                .map(|right| {
                    let row = &counts[right * order..(right + 1) * order];
                    pair_outcome(partition, left, right, row)
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let pairs: Vec<PairOutcome> = pairs.into_iter().flatten().collect();
    Ok(ClosureReport {
        partition: partition.name.clone(),
        r: group.r(),
        n: group.n(),
        class_keys: partition.classes.iter().map(|c| c.key.clone()).collect(),
        class_sizes: partition.classes.iter().map(|c| c.size).collect(),
        passed: pairs.iter().all(|p| p.passed),
        pairs,
    })
}

fn pair_outcome(partition: &ClassPartition, left: usize, right: usize, row: &[u64]) -> Result<PairOutcome> {
    let mut seen: Vec<Option<(usize, u64)>> = vec![None; partition.class_count()];
    for (rank, &v) in row.iter().enumerate() {
        let c = partition.labels[rank];
        match seen[c] {
            None => seen[c] = Some((rank, v)),
            Some((first, w)) if w != v => {
                let witness = SpanWitness {
                    class: c,
                    first: ColoredPermutation::unrank(partition.r, partition.n, first)?,
                    first_coefficient: w,
                    second: ColoredPermutation::unrank(partition.r, partition.n, rank)?,
                    second_coefficient: v,
                };
                return Ok(PairOutcome { left, right, passed: false, coefficients: None, witness: Some(witness) });
            }
            Some(_) => {}
        }
    }
    let coefficients = seen.into_iter().map(|s| s.map_or(0, |(_, v)| v)).collect();
    Ok(PairOutcome { left, right, passed: true, coefficients: Some(coefficients), witness: None })
}

/// `m[j][k][i]`: coefficient of class sum `i` in `(class sum j)(class sum k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstants {
    pub partition: String,
    pub r: u32,
    pub n: usize,
    pub class_keys: Vec<String>,
    pub class_sizes: Vec<usize>,
    #[serde(with = "decimal_tensor")]
    pub tensor: Vec<Vec<Vec<u64>>>,
}

mod decimal_tensor {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(t: &[Vec<Vec<u64>>], s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<Vec<Vec<String>>> =
            t.iter().map(|m| m.iter().map(|row| row.iter().map(u64::to_string).collect()).collect()).collect();
        strings.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Vec<u64>>>, D::Error> {
        let strings = Vec::<Vec<Vec<String>>>::deserialize(d)?;
        strings
            .iter()
            .map(|m| {
                m.iter()
                    .map(|row| row.iter().map(|s| s.parse().map_err(serde::de::Error::custom)).collect())
                    .collect()
            })
            .collect()
    }
}

impl StructureConstants {
    /// Reads the constants off a passing closure report.
    pub fn from_report(report: &ClosureReport) -> Result<Self> {
        if let Some(fail) = report.first_failure() {
            return Err(Error::ClosureNotEstablished(format!(
                "{} fails on classes ({}, {})",
                report.partition, fail.left, fail.right
            )));
        }
        let classes = report.class_sizes.len();
        let mut tensor = vec![vec![Vec::new(); classes]; classes];
        for p in &report.pairs {
            tensor[p.left][p.right] = p.coefficients.clone().unwrap_or_default();
        }
        Ok(StructureConstants {
            partition: report.partition.clone(),
            r: report.r,
            n: report.n,
            class_keys: report.class_keys.clone(),
            class_sizes: report.class_sizes.clone(),
            tensor,
        })
    }

    /// One representative row per class: for the representative `π_i` of
    /// class `i`, counts pairs `(σ, σ⁻¹π_i)` by class. Only meaningful once
    /// closure is known; costs `classes · |G|` compositions.
    pub fn from_representatives(group: &ColoredGroup, partition: &ClassPartition) -> Result<Self> {
        partition.check_group(group.r(), group.n())?;
        let classes = partition.class_count();
        let mut tensor = vec![vec![vec![0u64; classes]; classes]; classes];
        for (i, info) in partition.classes.iter().enumerate() {
            let pi = group.element(info.representative);
            for (sigma_rank, sigma) in group.elements().iter().enumerate() {
                let tau = sigma.inverse().compose_unchecked(pi);
                tensor[partition.labels[sigma_rank]][partition.labels[tau.rank()]][i] += 1;
            }
        }
        Ok(StructureConstants {
            partition: partition.name.clone(),
            r: group.r(),
            n: group.n(),
            class_keys: partition.classes.iter().map(|c| c.key.clone()).collect(),
            class_sizes: partition.classes.iter().map(|c| c.size).collect(),
            tensor,
        })
    }

    /// `Σ_i m[j][k][i] |class i| = |class j| |class k|` for every `j, k`.
    pub fn counts_consistent(&self) -> bool {
        let sizes = &self.class_sizes;
        self.tensor.iter().enumerate().all(|(j, plane)| {
            plane.iter().enumerate().all(|(k, row)| {
                let lhs: u128 = row.iter().zip(sizes).map(|(&m, &s)| m as u128 * s as u128).sum();
                lhs == sizes[j] as u128 * sizes[k] as u128
            })
        })
    }
}

/// Multiplication of class-coefficient vectors through structure constants.
#[derive(Debug, Clone)]
pub struct ClassAlgebra<S> {
    constants: StructureConstants,
    table: Vec<Vec<Vec<S>>>,
}

impl<S: Scalar> ClassAlgebra<S> {
    pub fn new(constants: StructureConstants) -> Self {
        let table = constants
            .tensor
            .iter()
            .map(|plane| plane.iter().map(|row| row.iter().map(|&m| S::from_i64(m as i64)).collect()).collect())
            .collect();
        ClassAlgebra { constants, table }
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn dimension(&self) -> usize {
        self.table.len()
    }

    pub fn multiply(&self, a: &[S], b: &[S]) -> Vec<S> {
        let dim = self.dimension();
        let mut out = vec![S::zero(); dim];
        for (j, aj) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (k, bk) in b.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let ab = aj.clone() * bk.clone();
                for (i, m) in self.table[j][k].iter().enumerate() {
                    if !m.is_zero() {
                        out[i] = out[i].clone() + ab.clone() * m.clone();
                    }
                }
            }
        }
        out
    }
}
