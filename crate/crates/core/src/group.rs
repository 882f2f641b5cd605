//! The colored permutation group `G(r, n)`, its elements and their descent
//! statistics.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::letter::{format_word, parse_word, word_descents, word_intdes, ColoredLetter};
use crate::limits::Limits;

/// `r^n * n!`, saturating at `u128::MAX`.
pub fn group_order(r: u32, n: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 1..=n as u128 {
        acc = acc.saturating_mul(r as u128).saturating_mul(i);
    }
    acc
}

fn check_r(r: u32) -> Result<()> {
    if r == 0 {
        Err(Error::InvalidColorCount(r))
    } else {
        Ok(())
    }
}

/// An element of `G(r, n)` in one-line notation `pi(1) ... pi(n)`.
///
/// The full bijection on `[n]_(r)` is `pi(i_a) = |pi(i)|_{color + a}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PermutationJson", into = "PermutationJson")]
pub struct ColoredPermutation {
    r: u32,
    letters: Vec<ColoredLetter>,
}

/// Wire form: `{"r":4,"n":5,"letters":[[2,0],[1,3],...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationJson {
    pub r: u32,
    pub n: usize,
    pub letters: Vec<(u32, u32)>,
}

impl TryFrom<PermutationJson> for ColoredPermutation {
    type Error = Error;

    fn try_from(j: PermutationJson) -> Result<Self> {
        if j.letters.len() != j.n {
            return Err(Error::NotAPermutation(format!(
                "n = {} but {} letters given",
                j.n,
                j.letters.len()
            )));
        }
        ColoredPermutation::new(j.r, j.letters.into_iter().map(ColoredLetter::from).collect())
    }
}

impl From<ColoredPermutation> for PermutationJson {
    fn from(p: ColoredPermutation) -> Self {
        PermutationJson {
            r: p.r,
            n: p.letters.len(),
            letters: p.letters.into_iter().map(Into::into).collect(),
        }
    }
}

impl ColoredPermutation {
    pub fn new(r: u32, letters: Vec<ColoredLetter>) -> Result<Self> {
        check_r(r)?;
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for l in &letters {
            if l.value == 0 || l.value as usize > n || l.color >= r {
                return Err(Error::IllegalLetter { value: l.value, color: l.color, r, n });
            }
            if std::mem::replace(&mut seen[l.value as usize], true) {
                return Err(Error::NotAPermutation(format!("value {} repeated", l.value)));
            }
        }
        Ok(ColoredPermutation { r, letters })
    }

    /// Parses one-line notation such as `2_0 1_3 3_1 5_2 4_2`.
    pub fn parse(r: u32, s: &str) -> Result<Self> {
        Self::new(r, parse_word(s)?)
    }

    pub fn identity(r: u32, n: usize) -> Result<Self> {
        check_r(r)?;
        Ok(ColoredPermutation {
            r,
            letters: (1..=n as u32).map(|v| ColoredLetter::new(v, 0)).collect(),
        })
    }

    /// Relabels the values of a word order-preservingly onto `1..=len`,
    /// keeping colors. Descent positions are unchanged.
    pub fn standardize(r: u32, word: &[ColoredLetter]) -> Result<Self> {
        let mut values: Vec<u32> = word.iter().map(|l| l.value).collect();
        values.sort_unstable();
        let letters = word
            .iter()
            .map(|l| {
                let rank = values.binary_search(&l.value).unwrap_or(0) as u32;
                l.with_value(rank + 1)
            })
            .collect();
        Self::new(r, letters)
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[ColoredLetter] {
        &self.letters
    }

    /// `pi(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> ColoredLetter {
        self.letters[i - 1]
    }

    /// The underlying permutation `|pi|`.
    pub fn underlying(&self) -> Vec<u32> {
        self.letters.iter().map(|l| l.value).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.iter().enumerate().all(|(i, l)| l.color == 0 && l.value as usize == i + 1)
    }

    pub fn is_monochromatic(&self) -> bool {
        self.letters.windows(2).all(|w| w[0].color == w[1].color)
    }

    fn check_same_group(&self, other: &Self) -> Result<()> {
        if self.r != other.r || self.n() != other.n() {
            return Err(Error::GroupMismatch {
                r1: self.r,
                n1: self.n(),
                r2: other.r,
                n2: other.n(),
            });
        }
        Ok(())
    }

    /// `self ∘ pi`: if `pi(i) = j_k` and `self(j) = l_p` then the product
    /// sends `i` to `l_{k+p}`.
    pub fn compose(&self, pi: &Self) -> Result<Self> {
        self.check_same_group(pi)?;
        Ok(self.compose_unchecked(pi))
    }

    pub(crate) fn compose_unchecked(&self, pi: &Self) -> Self {
        let letters = pi
            .letters
            .iter()
            .map(|l| self.letters[l.value as usize - 1].shift_color(l.color, self.r))
            .collect();
        ColoredPermutation { r: self.r, letters }
    }

    pub fn inverse(&self) -> Self {
        let mut letters = vec![ColoredLetter::new(0, 0); self.n()];
        for (i, l) in self.letters.iter().enumerate() {
            letters[l.value as usize - 1] = ColoredLetter::new(i as u32 + 1, (self.r - l.color) % self.r);
        }
        ColoredPermutation { r: self.r, letters }
    }

    pub fn descent_profile(&self) -> DescentProfile {
        let descent_set = word_descents(&self.letters);
        let n = self.n();
        let internal_descent_set: Vec<usize> = descent_set.iter().copied().filter(|&i| i < n).collect();
        DescentProfile {
            des: descent_set.len(),
            intdes: internal_descent_set.len(),
            descent_set,
            internal_descent_set,
        }
    }

    pub fn descent_set(&self) -> Vec<usize> {
        word_descents(&self.letters)
    }

    pub fn des(&self) -> usize {
        self.descent_set().len()
    }

    pub fn intdes(&self) -> usize {
        word_intdes(&self.letters)
    }

    /// Descent set in `[0, n]` under the boundary convention
    /// `pi(0) = 0_a`, `pi(n+1) = 0_b`.
    ///
    /// `(a, b) = (0, 1)` recovers [`Self::descent_set`] whenever `r >= 2`.
    pub fn descent_set_variant(&self, a: u32, b: u32) -> Result<Vec<usize>> {
        for (what, v) in [("a", a), ("b", b)] {
            if v >= self.r {
                return Err(Error::OutOfRange {
                    what,
                    value: v as u64,
                    expected: format!("0..{}", self.r),
                });
            }
        }
        let n = self.n();
        let mut out = Vec::new();
        if n > 0 && ColoredLetter::zero(a) > self.letters[0] {
            out.push(0);
        }
        out.extend(self.letters.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]).map(|(i, _)| i + 1));
        if n > 0 && self.letters[n - 1] > ColoredLetter::zero(b) {
            out.push(n);
        }
        Ok(out)
    }

    /// The colored composition of maximal increasing monochromatic runs.
    pub fn mr_key(&self) -> ColoredComposition {
        let mut parts: Vec<(usize, u32)> = Vec::new();
        for (i, l) in self.letters.iter().enumerate() {
            let cut = i == 0 || {
                let prev = self.letters[i - 1];
                prev.color != l.color || prev.value > l.value
            };
            if cut {
                parts.push((1, l.color));
            } else if let Some(last) = parts.last_mut() {
                last.0 += 1;
            }
        }
        ColoredComposition { parts }
    }

    /// Position of this element in [`enumerate_group`] order.
    pub fn rank(&self) -> usize {
        let n = self.n();
        let r = self.r as usize;
        let mut perm_rank = 0usize;
        for i in 0..n {
            let smaller_later = self.letters[i + 1..].iter().filter(|l| l.value < self.letters[i].value).count();
            perm_rank = perm_rank * (n - i) + smaller_later;
        }
        let mut color_code = 0usize;
        for l in &self.letters {
            color_code = color_code * r + l.color as usize;
        }
        perm_rank * r.pow(n as u32) + color_code
    }

    /// Inverse of [`Self::rank`].
    pub fn unrank(r: u32, n: usize, rank: usize) -> Result<Self> {
        check_r(r)?;
        let order = group_order(r, n);
        if rank as u128 >= order {
            return Err(Error::OutOfRange { what: "rank", value: rank as u64, expected: format!("0..{order}") });
        }
        let colors_total = (r as usize).pow(n as u32);
        let (mut perm_rank, mut color_code) = (rank / colors_total, rank % colors_total);
        let mut digits = vec![0usize; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = perm_rank % base;
            perm_rank /= base;
        }
        let mut pool: Vec<u32> = (1..=n as u32).collect();
        let mut letters: Vec<ColoredLetter> = digits.iter().map(|&d| ColoredLetter::new(pool.remove(d), 0)).collect();
        for l in letters.iter_mut().rev() {
            l.color = (color_code % r as usize) as u32;
            color_code /= r as usize;
        }
        Ok(ColoredPermutation { r, letters })
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.letters))
    }
}

/// Descent statistics of one colored permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DescentProfile {
    pub descent_set: Vec<usize>,
    pub des: usize,
    pub internal_descent_set: Vec<usize>,
    pub intdes: usize,
}

/// Sequence of `(length, color)` runs; the Mantaci–Reutenauer class key.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColoredComposition {
    pub parts: Vec<(usize, u32)>,
}

impl ColoredComposition {
    pub fn total(&self) -> usize {
        self.parts.iter().map(|p| p.0).sum()
    }
}

impl fmt::Display for ColoredComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (len, color)) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({len},{color})")?;
        }
        f.write_str("]")
    }
}

/// Canonical stream over `G(r, n)`: underlying permutations in
/// lexicographic order, and for each one the colors as a base-`r` counter
/// with the least significant digit at position `n`.
#[derive(Debug, Clone)]
pub struct GroupIter {
    r: u32,
    perm: Vec<u32>,
    colors: Vec<u32>,
    remaining: u128,
}

/// Streams every element of `G(r, n)` exactly once, in canonical order.
pub fn enumerate_group(r: u32, n: usize, limits: &Limits) -> Result<GroupIter> {
    check_r(r)?;
    let order = group_order(r, n);
    Limits::check("group", order, limits.max_group_size)?;
    Ok(GroupIter {
        r,
        perm: (1..=n as u32).collect(),
        colors: vec![0; n],
        remaining: order,
    })
}

fn next_permutation(p: &mut [u32]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p.iter().rposition(|&x| x > p[i]).unwrap_or(i + 1);
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

impl Iterator for GroupIter {
    type Item = ColoredPermutation;

    fn next(&mut self) -> Option<ColoredPermutation> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let item = ColoredPermutation {
            r: self.r,
            letters: self.perm.iter().zip(&self.colors).map(|(&v, &c)| ColoredLetter::new(v, c)).collect(),
        };
        // advance the color counter, carrying into the permutation
        let mut carried = true;
        for c in self.colors.iter_mut().rev() {
            *c += 1;
            if *c < self.r {
                carried = false;
                break;
            }
            *c = 0;
        }
        if carried {
            next_permutation(&mut self.perm);
        }
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (n, Some(n))
    }
}

impl ExactSizeIterator for GroupIter {}

/// A materialized `G(r, n)` with elements indexed by canonical rank.
#[derive(Debug, Clone)]
pub struct ColoredGroup {
    r: u32,
    n: usize,
    elements: Vec<ColoredPermutation>,
}

impl ColoredGroup {
    pub fn new(r: u32, n: usize, limits: &Limits) -> Result<Self> {
        let elements = enumerate_group(r, n, limits)?.collect();
        Ok(ColoredGroup { r, n, elements })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[ColoredPermutation] {
        &self.elements
    }

    pub fn element(&self, rank: usize) -> &ColoredPermutation {
        &self.elements[rank]
    }

    pub fn identity(&self) -> &ColoredPermutation {
        &self.elements[0]
    }

    pub fn rank_of(&self, pi: &ColoredPermutation) -> Result<usize> {
        if pi.r() != self.r || pi.n() != self.n {
            return Err(Error::GroupMismatch { r1: self.r, n1: self.n, r2: pi.r(), n2: pi.n() });
        }
        Ok(pi.rank())
    }

    /// Rank of `element(a) ∘ element(b)`.
    pub fn compose_ranks(&self, a: usize, b: usize) -> usize {
        self.elements[a].compose_unchecked(&self.elements[b]).rank()
    }
}
