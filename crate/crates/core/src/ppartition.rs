//! Colored P-partitions with parts in `[0, j]_(r)` and their order
//! polynomials.
//!
//! [`count_ppartitions_bruteforce`] enumerates maps directly from the four
//! defining conditions and is the oracle for everything else here; the
//! closed forms are computed from descent statistics alone.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::group::{enumerate_group, ColoredPermutation};
use crate::letter::{word_des, word_intdes, ColoredLetter};
use crate::limits::Limits;
use crate::poset::{zigzag_poset, ColoredPoset};

/// A part `(color, level)`; ordered color first.
type Part = (u32, u32);

/// Number of colored P-partitions of `poset` with parts in `[0, j]_(r)`.
///
/// A map `f` is counted when
/// 1. `f(0_k) = (k, 0)`;
/// 2. `a ≺ b` implies `f(a) <= f(b)`;
/// 3. if `f(a), f(b)` share the color block `k`, `a ≺ b` and
///    `|a|_{ε(a)-k} > |b|_{ε(b)-k}`, then `f(a) < f(b)`;
/// 4. `f(a) = (k, j)` implies `ε(a) = k`.
pub fn count_ppartitions_bruteforce(poset: &ColoredPoset, j: u32, limits: &Limits) -> Result<BigUint> {
    let r = poset.r();
    let elements = poset.elements();
    let free: Vec<usize> = (0..elements.len()).filter(|&i| !elements[i].is_zero()).collect();
    let choices = r as u128 * (j as u128 + 1);
    let total = (0..free.len()).try_fold(1u128, |acc, _| acc.checked_mul(choices)).unwrap_or(u128::MAX);
    Limits::check("brute-force P-partition maps", total, limits.max_bruteforce_maps)?;

    let parts: Vec<Part> = (0..r).flat_map(|c| (0..=j).map(move |x| (c, x))).collect();
    let mut assignment: Vec<Option<Part>> = elements.iter().map(|l| l.is_zero().then_some((l.color, 0))).collect();

    // pairs checked once both ends are assigned
    let pairs = poset.strict_pairs();
    let position: Vec<usize> = {
        let mut pos = vec![0; elements.len()];
        for (step, &e) in free.iter().enumerate() {
            pos[e] = step + 1;
        }
        pos
    };
    let mut checks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); free.len() + 1];
    for &(a, b) in &pairs {
        checks[position[a].max(position[b])].push((a, b));
    }
    // anchor-only pairs are consistent by construction
    debug_assert!(checks[0].iter().all(|&(a, b)| pair_ok(r, elements[a], elements[b], (elements[a].color, 0), (elements[b].color, 0))));

    let mut count = 0u64;
    #[allow(clippy::too_many_arguments)]
    fn go(
        step: usize,
        free: &[usize],
        parts: &[Part],
        checks: &[Vec<(usize, usize)>],
        elements: &[ColoredLetter],
        assignment: &mut [Option<Part>],
        r: u32,
        j: u32,
        count: &mut u64,
    ) {
        if step == free.len() {
            *count += 1;
            return;
        }
        let e = free[step];
        for &part in parts {
            if part.1 == j && elements[e].color != part.0 {
                continue;
            }
            assignment[e] = Some(part);
            let ok = checks[step + 1].iter().all(|&(a, b)| {
                let (fa, fb) = (assignment[a].expect("assigned"), assignment[b].expect("assigned"));
                pair_ok(r, elements[a], elements[b], fa, fb)
            });
            if ok {
                go(step + 1, free, parts, checks, elements, assignment, r, j, count);
            }
        }
        assignment[e] = None;
    }
    go(0, &free, &parts, &checks, elements, &mut assignment, r, j, &mut count);
    Ok(BigUint::from(count))
}

/// Conditions (ii) and (iii) for a single relation `a ≺ b`.
fn pair_ok(r: u32, a: ColoredLetter, b: ColoredLetter, fa: Part, fb: Part) -> bool {
    if fa > fb {
        return false;
    }
    if fa.0 == fb.0 {
        let k = fa.0;
        if a.unshift_color(k, r) > b.unshift_color(k, r) {
            return fa < fb;
        }
    }
    true
}

/// `Ω_w(j) = C(j + len - des(w), len)` for a word of nonzero letters.
pub fn omega_word(word: &[ColoredLetter], j: u32) -> BigUint {
    binomial(j as i64 + word.len() as i64 - word_des(word) as i64, word.len())
}

/// `Ω_π(j) = C(j + n - des(π), n)`, zero when `j < des(π)`.
pub fn omega_pi(pi: &ColoredPermutation, j: u32) -> BigUint {
    omega_word(pi.letters(), j)
}

/// `Ω_P(j)` as the sum of `Ω_π(j)` over the colored linear extensions of
/// `P`, with multiplicity.
pub fn omega_via_extensions(poset: &ColoredPoset, j: u32, limits: &Limits) -> Result<BigUint> {
    Ok(poset.colored_linear_extension_words(limits)?.iter().map(|w| omega_word(w, j)).sum())
}

/// `Ω_{P(w)}(j) = C(rj + len - intdes(w), len)` where `P(w)` is the chain on
/// `w` with no relation to the anchors.
pub fn omega_detached_word(r: u32, word: &[ColoredLetter], j: u32) -> BigUint {
    binomial(r as i64 * j as i64 + word.len() as i64 - word_intdes(word) as i64, word.len())
}

/// `Ω_{P(π)}(j) = C(rj + n - intdes(π), n)`.
pub fn omega_detached_chain(pi: &ColoredPermutation, j: u32) -> BigUint {
    omega_detached_word(pi.r(), pi.letters(), j)
}

/// Power-series coefficients up to a fixed order; index = power of `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedSeries {
    #[serde(rename = "t_coeffs", with = "decimal_vec")]
    pub coefficients: Vec<BigUint>,
}

impl TruncatedSeries {
    pub fn order(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn coefficient(&self, power: usize) -> BigUint {
        self.coefficients.get(power).cloned().unwrap_or_default()
    }

    /// Coefficients of `self / (1 - t)^m` up to `order`.
    pub fn divide_by_one_minus_t_pow(&self, m: usize, order: usize) -> TruncatedSeries {
        // 1/(1-t)^m = sum C(i + m - 1, m - 1) t^i
        let kernel = |i: usize| if m == 0 { BigUint::from((i == 0) as u8) } else { binomial((i + m - 1) as i64, m - 1) };
        let coefficients = (0..=order)
            .map(|power| (0..=power).map(|d| self.coefficient(d) * kernel(power - d)).sum())
            .collect();
        TruncatedSeries { coefficients }
    }
}

mod decimal_vec {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter().map(|s| s.parse().map_err(serde::de::Error::custom)).collect()
    }
}

/// Descent-number distribution over `G(r, n)`: coefficient of `t^d` is the
/// number of elements with `d` descents. Truncated at order `n`.
pub fn eulerian_polynomial(r: u32, n: usize, limits: &Limits) -> Result<TruncatedSeries> {
    let mut counts = vec![0u64; n + 1];
    for pi in enumerate_group(r, n, limits)? {
        counts[pi.des()] += 1;
    }
    Ok(TruncatedSeries { coefficients: counts.into_iter().map(BigUint::from).collect() })
}

/// Checks `(rj+1)^n = Σ_d #{des = d} C(j + n - d, n)` for `0 <= j <= max_j`.
pub fn verify_steingrimsson(r: u32, n: usize, max_j: u32, limits: &Limits) -> Result<bool> {
    let series = eulerian_polynomial(r, n, limits)?;
    let rhs = series.divide_by_one_minus_t_pow(n + 1, max_j as usize);
    Ok((0..=max_j).all(|j| BigUint::from(r as u64 * j as u64 + 1).pow(n as u32) == rhs.coefficient(j as usize)))
}

/// `Ω_{Z(I,π)}(j, k)`: pairs of a colored `Z(I,π)`-partition and a barring
/// of `Z(I,π)` with `k` bars.
///
/// With `r = 1` and `n ∈ I` no zig-zag poset exists and the count is zero.
pub fn barred_zigzag_count(subset: &[usize], pi: &ColoredPermutation, j: u32, k: u32, limits: &Limits) -> Result<BigUint> {
    let poset = match zigzag_poset(subset, pi) {
        Err(Error::MissingAnchor) => return Ok(BigUint::zero()),
        other => other?,
    };
    let n = pi.n() as i64;
    let mut total = BigUint::zero();
    for sigma in poset.colored_linear_extensions(limits)? {
        let tau = sigma.inverse().compose(pi)?;
        total += omega_pi(&sigma, j) * binomial(k as i64 + n - tau.des() as i64, pi.n());
    }
    Ok(total)
}

/// Every bar placement of a barred `C(I, π)` with `k` bars.
///
/// Entry `s` of a placement is the number of bars in space `s`: space `0` is
/// the left end and space `i` follows `π(i)`. Spaces in `I` get at least one
/// bar, the left end any number, all others none.
pub fn chain_bar_placements(subset: &[usize], n: usize, k: u32) -> Vec<Vec<u32>> {
    let mut spaces: Vec<usize> = subset.to_vec();
    spaces.sort_unstable();
    spaces.dedup();
    let need = spaces.len() as u32;
    if k < need {
        return Vec::new();
    }
    let mut slots = vec![0usize];
    slots.extend(&spaces);
    let mut out = Vec::new();
    // distribute k - |I| extra bars over the |I| + 1 open spaces
    fn go(slots: &[usize], idx: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if idx == slots.len() - 1 {
            cur[slots[idx]] += left;
            out.push(cur.clone());
            cur[slots[idx]] -= left;
            return;
        }
        for take in 0..=left {
            cur[slots[idx]] += take;
            go(slots, idx + 1, left - take, cur, out);
            cur[slots[idx]] -= take;
        }
    }
    let mut cur = vec![0u32; n + 1];
    for &s in &spaces {
        cur[s] = 1;
    }
    go(&slots, 0, k - need, &mut cur, &mut out);
    out
}

/// Splits `π` into the `k + 1` compartments cut out by a bar placement.
pub fn compartments(pi: &ColoredPermutation, bars: &[u32]) -> Vec<Vec<ColoredLetter>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for _ in 0..bars[0] {
        out.push(std::mem::take(&mut cur));
    }
    for (&letter, &count) in pi.letters().iter().zip(&bars[1..]) {
        cur.push(letter);
        for _ in 0..count {
            out.push(std::mem::take(&mut cur));
        }
    }
    out.push(cur);
    out
}

/// `Ω_{C(I,π)}(j)` for one barring: the last compartment is chained to the
/// anchors, every other one is a detached chain.
fn barred_chain_term(r: u32, parts: &[Vec<ColoredLetter>], j: u32) -> BigUint {
    let (last, rest) = parts.split_last().expect("at least one compartment");
    rest.iter().fold(omega_word(last, j), |acc, w| acc * omega_detached_word(r, w, j))
}

/// `Ω_{C(I,π)}(j, k)`, summed over every barring with `k` bars.
pub fn barred_chain_count(subset: &[usize], pi: &ColoredPermutation, j: u32, k: u32) -> BigUint {
    chain_bar_placements(subset, pi.n(), k)
        .iter()
        .map(|bars| barred_chain_term(pi.r(), &compartments(pi, bars), j))
        .sum()
}

/// `Σ_{I ⊆ [n]} Ω_{C(I,π)}(j, k)` by explicit bar placement, checked
/// against `C(rjk + j + k + n - des(π), n)`.
pub fn barred_chain_total(pi: &ColoredPermutation, j: u32, k: u32) -> Result<BigUint> {
    let n = pi.n();
    let mut total = BigUint::zero();
    for mask in 0u64..1 << n {
        let subset: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        total += barred_chain_count(&subset, pi, j, k);
    }
    let (r, j64, k64) = (pi.r() as i64, j as i64, k as i64);
    let expected = binomial(r * j64 * k64 + j64 + k64 + n as i64 - pi.des() as i64, n);
    if total != expected {
        return Err(Error::Verification(format!(
            "barred chain total for π = {pi}, j = {j}, k = {k}: counted {total}, expected {expected}"
        )));
    }
    Ok(total)
}

/// `Σ_{στ=π} Ω_σ(j) Ω_τ(k)` by direct enumeration over `σ`.
pub fn factorization_sum(pi: &ColoredPermutation, j: u32, k: u32, limits: &Limits) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for sigma in enumerate_group(pi.r(), pi.n(), limits)? {
        let tau = sigma.inverse().compose(pi)?;
        total += omega_pi(&sigma, j) * omega_pi(&tau, k);
    }
    Ok(total)
}

/// `(rj+1)^n`, the order polynomial of the antichain.
pub fn antichain_order_polynomial(r: u32, n: usize, j: u32) -> BigUint {
    BigUint::from(r as u64 * j as u64 + 1).pow(n as u32)
}
