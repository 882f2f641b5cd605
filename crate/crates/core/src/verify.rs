//! Verification suites: each runs one family of identities over a parameter
//! range and reports every check that failed.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{
    check_idempotents, scan_variants, structure_poly_coefficients, verify_closure, verify_phi_identity,
    verify_phi_identity_collapsed, ClassPartition, DesAlgebra, IdempotentTable, StructureConstants,
};
use crate::binomial::binomial;
use crate::error::Result;
use crate::group::{ColoredGroup, ColoredPermutation};
use crate::limits::Limits;
use crate::poset::{chain_poset, random_poset_corpus, zigzag_poset, ColoredPoset};
use crate::ppartition::{
    barred_chain_total, count_ppartitions_bruteforce, eulerian_polynomial, factorization_sum, omega_detached_chain,
    omega_pi, omega_via_extensions, verify_steingrimsson,
};
use crate::scalar::Scalar;
use crate::Rational;

/// Failures beyond this many are counted but not stored.
pub const MAX_STORED_FAILURES: usize = 20;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: Value,
    pub checks: u64,
    pub failure_count: u64,
    pub failures: Vec<Value>,
    /// Suite-specific results (tables, witnesses, scans).
    pub details: Value,
}

impl SuiteReport {
    fn new(suite: &str, params: Value) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            params,
            checks: 0,
            failure_count: 0,
            failures: Vec::new(),
            details: Value::Null,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checks += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_STORED_FAILURES {
                self.failures.push(witness());
            }
        }
    }
}

/// Closed-form `Ω_P(j)` over colored linear extensions against the
/// brute-force count, plus the product rule on same-`r` neighbours.
pub fn ftcpp(seed: u64, cases: usize, max_r: u32, max_len: usize, max_j: u32, limits: &Limits) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(
        "ftcpp",
        json!({"seed": seed, "cases": cases, "max_r": max_r, "max_len": max_len, "max_j": max_j}),
    );
    let corpus = random_poset_corpus(seed, cases, max_r, max_len)?;
    for (idx, poset) in corpus.iter().enumerate() {
        for j in 0..=max_j {
            let brute = count_ppartitions_bruteforce(poset, j, limits)?;
            let closed = omega_via_extensions(poset, j, limits)?;
            report.check(brute == closed, || {
                json!({"case": idx, "poset": poset_json(poset), "j": j,
                       "bruteforce": brute.to_string(), "extensions": closed.to_string()})
            });
        }
    }
    for (idx, pair) in corpus.windows(2).enumerate() {
        let (p1, p2) = (&pair[0], &pair[1]);
        if p1.r() != p2.r() || p1.nonzero_count() + p2.nonzero_count() > max_len.max(4) {
            continue;
        }
        let union = p1.disjoint_union(&p2.shift_values(p1.n() as u32)?)?;
        for j in 0..=max_j.min(2) {
            let lhs = count_ppartitions_bruteforce(&union, j, limits)?;
            let rhs = count_ppartitions_bruteforce(p1, j, limits)? * count_ppartitions_bruteforce(p2, j, limits)?;
            report.check(lhs == rhs, || {
                json!({"product_rule": idx, "j": j, "union": lhs.to_string(), "product": rhs.to_string()})
            });
        }
    }
    Ok(report)
}

/// `Ω_{P(π)}(j) = C(rj + n - intdes π, n)` and `Ω_π(j) = C(j + n - des π, n)`
/// by brute force for every `π ∈ G(r, n)`.
pub fn order_poly(r: u32, n: usize, max_j: u32, limits: &Limits) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("order-poly", json!({"r": r, "n": n, "max_j": max_j}));
    let group = ColoredGroup::new(r, n, limits)?;
    for pi in group.elements() {
        let detached = ColoredPoset::detached_chain(r, n, pi.letters())?;
        let chain = ColoredPoset::word_chain(r, n, pi.letters())?;
        for j in 0..=max_j {
            let brute = count_ppartitions_bruteforce(&detached, j, limits)?;
            let formula = omega_detached_chain(pi, j);
            report.check(brute == formula, || {
                json!({"pi": pi.to_string(), "j": j, "poset": "detached", "bruteforce": brute.to_string(), "formula": formula.to_string()})
            });
            let brute = count_ppartitions_bruteforce(&chain, j, limits)?;
            let formula = omega_pi(pi, j);
            report.check(brute == formula, || {
                json!({"pi": pi.to_string(), "j": j, "poset": "chain", "bruteforce": brute.to_string(), "formula": formula.to_string()})
            });
        }
    }
    Ok(report)
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).map(move |mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

/// `CL(Z(I, π)) = {σ : Des(σ⁻¹π) = I}` (`exact = true`) or
/// `CL(C(I, π)) = {σ : Des(σ⁻¹π) ⊆ I}`, duplicate-free, for every `π` and `I`.
fn extension_check(suite: &str, r: u32, n: usize, exact: bool, limits: &Limits) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(suite, json!({"r": r, "n": n}));
    let group = ColoredGroup::new(r, n, limits)?;
    for pi in group.elements() {
        let des_of: Vec<Vec<usize>> =
            group.elements().iter().map(|sigma| sigma.inverse().compose_unchecked(pi).descent_set()).collect();
        for subset in subsets(n) {
            let mut expected: Vec<usize> = (0..group.order())
                .filter(|&k| if exact { des_of[k] == subset } else { is_subset(&des_of[k], &subset) })
                .collect();
            expected.sort_unstable();
            let poset = if exact { zigzag_poset(&subset, pi) } else { chain_poset(&subset, pi) };
            let mut got: Vec<usize> = match poset {
                Ok(p) => p.colored_linear_extensions(limits)?.iter().map(ColoredPermutation::rank).collect(),
                Err(crate::Error::MissingAnchor) => Vec::new(),
                Err(e) => return Err(e),
            };
            got.sort_unstable();
            let duplicate_free = got.windows(2).all(|w| w[0] != w[1]);
            report.check(got == expected && duplicate_free, || {
                json!({"pi": pi.to_string(), "I": subset, "extensions": got.len(), "expected": expected.len(),
                       "duplicate_free": duplicate_free})
            });
        }
    }
    Ok(report)
}

pub fn zigzag(r: u32, n: usize, limits: &Limits) -> Result<SuiteReport> {
    extension_check("zigzag", r, n, true, limits)
}

pub fn chain(r: u32, n: usize, limits: &Limits) -> Result<SuiteReport> {
    extension_check("chain", r, n, false, limits)
}

/// `C(rjk + j + k + n - des π, n) = Σ_{στ=π} Ω_σ(j) Ω_τ(k)` and the barred
/// chain-poset total, for every `π ∈ G(r, n)`.
pub fn barred(r: u32, n: usize, max_j: u32, max_k: u32, limits: &Limits) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("barred", json!({"r": r, "n": n, "max_j": max_j, "max_k": max_k}));
    let group = ColoredGroup::new(r, n, limits)?;
    for pi in group.elements() {
        for j in 0..=max_j {
            for k in 0..=max_k {
                let (r64, j64, k64) = (r as i64, j as i64, k as i64);
                let formula = binomial(r64 * j64 * k64 + j64 + k64 + n as i64 - pi.des() as i64, n);
                let factored = factorization_sum(pi, j, k, limits)?;
                let barred = barred_chain_total(pi, j, k);
                let barred_ok = matches!(&barred, Ok(v) if *v == formula);
                report.check(factored == formula && barred_ok, || {
                    json!({"pi": pi.to_string(), "j": j, "k": k, "formula": formula.to_string(),
                           "factorizations": factored.to_string(),
                           "barred": barred.as_ref().map(BigUint::to_string).unwrap_or_else(|e| e.to_string())})
                });
            }
        }
    }
    Ok(report)
}

/// `Σ_j (rj+1)^n t^j = Σ_π t^{des π} / (1-t)^{n+1}` up to `t^{max_j}`.
pub fn steingrimsson(r: u32, n: usize, max_j: u32, limits: &Limits) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("steingrimsson", json!({"r": r, "n": n, "max_j": max_j}));
    let ok = verify_steingrimsson(r, n, max_j, limits)?;
    let series = eulerian_polynomial(r, n, limits)?;
    report.check(ok, || json!({"r": r, "n": n, "eulerian": series.clone()}));
    report.details = json!({"eulerian": series});
    Ok(report)
}

/// Which statistic's level sets to test for closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionKind {
    Des,
    Mr,
    DesSet,
}

impl PartitionKind {
    pub fn build(self, group: &ColoredGroup) -> ClassPartition {
        match self {
            PartitionKind::Des => ClassPartition::by_des(group),
            PartitionKind::Mr => ClassPartition::by_colored_composition(group),
            PartitionKind::DesSet => ClassPartition::by_descent_set(group),
        }
    }

    pub fn suite_name(self) -> &'static str {
        match self {
            PartitionKind::Des => "closure-des",
            PartitionKind::Mr => "closure-mr",
            PartitionKind::DesSet => "closure-desset",
        }
    }
}

/// Closure of the class sums under multiplication; on success also checks
/// the structure constants two ways and, for `Mr`, that it refines `Des`.
pub fn closure(r: u32, n: usize, kind: PartitionKind, limits: &Limits) -> Result<(SuiteReport, Option<StructureConstants>)> {
    let mut report = SuiteReport::new(kind.suite_name(), json!({"r": r, "n": n}));
    let group = ColoredGroup::new(r, n, limits)?;
    let partition = kind.build(&group);
    let closure = verify_closure(&group, &partition, limits)?;
    for pair in &closure.pairs {
        report.check(pair.passed, || serde_json::to_value(pair).unwrap_or(Value::Null));
    }
    let mut constants = None;
    if closure.passed {
        let from_report = StructureConstants::from_report(&closure)?;
        let from_reps = StructureConstants::from_representatives(&group, &partition)?;
        report.check(from_report == from_reps, || json!({"structure_constants": "routes disagree"}));
        report.check(from_report.counts_consistent(), || json!({"structure_constants": "inconsistent class counts"}));
        constants = Some(from_report);
    }
    if kind == PartitionKind::Mr {
        report.check(partition.refines(&ClassPartition::by_des(&group)), || {
            json!({"refines_des": false})
        });
    }
    report.details = json!({"classes": closure.class_keys, "class_sizes": closure.class_sizes, "closed": closure.passed});
    Ok((report, constants))
}

/// `φ(x) φ(y) = φ(rxy + x + y)` for integer `x, y ∈ [0, max]` and a few
/// rational pairs, class-collapsed; also by full convolution when
/// `naive` is set.
pub fn phi(r: u32, n: usize, max: u32, naive: bool, limits: &Limits) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("phi", json!({"r": r, "n": n, "max": max, "naive": naive}));
    let group = ColoredGroup::new(r, n, limits)?;
    let algebra = DesAlgebra::<Rational>::new(&group, false, limits)?;
    let ints: Vec<Rational> = (0..=max as i64).map(Rational::from_i64).collect();
    let mut pairs: Vec<(Rational, Rational)> =
        ints.iter().flat_map(|x| ints.iter().map(move |y| (x.clone(), y.clone()))).collect();
    let extra = [(1, 3, -2, 5), (-1, 1, 7, 2)];
    pairs.extend(extra.iter().map(|&(a, b, c, d)| (Rational::from_ratio(a, b), Rational::from_ratio(c, d))));
    for (x, y) in &pairs {
        let ok = verify_phi_identity_collapsed(&algebra, &[(x.clone(), y.clone())]);
        report.check(ok, || json!({"x": x.to_string(), "y": y.to_string(), "route": "collapsed"}));
        if naive {
            let ok = verify_phi_identity(&group, &[(x.clone(), y.clone())], limits)?;
            report.check(ok, || json!({"x": x.to_string(), "y": y.to_string(), "route": "convolution"}));
        }
    }
    report.details = json!({
        "phi_at_1_by_des": structure_poly_coefficients(n, &Rational::from_i64(1)).iter().map(ToString::to_string).collect::<Vec<_>>()
    });
    Ok(report)
}

/// The `r = 5, n = 3` table, as `(1/750) · row`.
pub const REFERENCE_5_3: [[i64; 4]; 4] = [[504, -36, 24, -66], [218, 23, -22, 83], [27, 12, -3, -18], [1, 1, 1, 1]];

/// Orthogonal idempotents `c_0, ..., c_n`, summing to the identity, with
/// `c_n` the uniform average; at `(5, 3)` also compares against the
/// reference table.
pub fn idempotents(r: u32, n: usize, limits: &Limits) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("idempotents", json!({"r": r, "n": n}));
    let group = ColoredGroup::new(r, n, limits)?;
    let algebra = DesAlgebra::<Rational>::new(&group, false, limits)?;
    let check = check_idempotents(&algebra);
    for &(i, j) in &check.failed_products {
        report.check(false, || json!({"product": [i, j]}));
    }
    report.checks += ((n + 1) * (n + 1) - check.failed_products.len()) as u64;
    report.check(check.sums_to_identity, || json!({"sum_is_identity": false}));
    report.check(check.top_is_uniform, || json!({"top_is_uniform": false}));
    let table = IdempotentTable::new(r, n)?;
    if (r, n) == (5, 3) {
        for (i, row) in REFERENCE_5_3.iter().enumerate() {
            for (d, &a) in row.iter().enumerate() {
                let expected = Rational::from_ratio(a, 750);
                let got = table.coefficient(i, d).clone();
                report.check(got == expected, || {
                    json!({"i": i, "des": d, "expected": expected.to_string(), "got": got.to_string()})
                });
            }
        }
    }
    report.details = json!({"table": table.to_json(), "rendered": table.render()});
    Ok(report)
}

/// Boundary-variant descent numbers for every `(a, b)`; on `G(2, 2)` asserts
/// that closure holds exactly for the variants equal to the standard one.
pub fn variants(r: u32, n: usize, limits: &Limits) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("variants", json!({"r": r, "n": n}));
    let group = ColoredGroup::new(r, n, limits)?;
    let scan = scan_variants(&group, limits)?;
    if (r, n) == (2, 2) {
        for o in &scan.outcomes {
            report.check(o.closure_passed == o.same_as_standard, || serde_json::to_value(o).unwrap_or(Value::Null));
        }
    }
    report.details = serde_json::to_value(&scan).unwrap_or(Value::Null);
    Ok(report)
}

fn poset_json(p: &ColoredPoset) -> Value {
    serde_json::to_value(p).unwrap_or(Value::Null)
}
