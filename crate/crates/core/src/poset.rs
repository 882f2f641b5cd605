//! Colored posets, their linear extensions and colored linear extensions.
//!
//! A colored poset always contains the anchor chain `0_1 ≺ ... ≺ 0_{r-1}`.
//! A linear extension is an anchored word (a shuffle of the nonzero letters
//! with the anchors); cutting it at the anchors and shifting the colors of
//! the `i`-th piece down by `i` gives `r` words whose shuffles are the
//! colored linear extensions.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::ColoredPermutation;
use crate::letter::{format_word, ColoredLetter};
use crate::limits::Limits;

const MAX_ELEMENTS: usize = 128;

/// A finite strict partial order on anchor letters and colored letters with
/// distinct absolute values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PosetJson", into = "PosetJson")]
pub struct ColoredPoset {
    r: u32,
    n: usize,
    /// Sorted by the letter order; anchors included.
    elements: Vec<ColoredLetter>,
    /// Relations as supplied, anchor chain excluded.
    covers: Vec<(ColoredLetter, ColoredLetter)>,
    /// `below[b]` has bit `a` set iff `elements[a] ≺ elements[b]`.
    below: Vec<u128>,
}

/// Wire form. Anchors are written `[0,k]` and the anchor chain is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub r: u32,
    pub n: usize,
    pub elements: Vec<(u32, u32)>,
    pub covers: Vec<((u32, u32), (u32, u32))>,
}

impl TryFrom<PosetJson> for ColoredPoset {
    type Error = Error;

    fn try_from(j: PosetJson) -> Result<Self> {
        let elements: Vec<ColoredLetter> = j.elements.into_iter().map(Into::into).collect();
        let covers: Vec<_> = j.covers.into_iter().map(|(a, b)| (a.into(), b.into())).collect();
        ColoredPoset::new(j.r, j.n, &elements, &covers)
    }
}

impl From<ColoredPoset> for PosetJson {
    fn from(p: ColoredPoset) -> Self {
        PosetJson {
            r: p.r,
            n: p.n,
            elements: p.elements.iter().filter(|l| !l.is_zero()).map(|&l| l.into()).collect(),
            covers: p.covers.iter().map(|&(a, b)| (a.into(), b.into())).collect(),
        }
    }
}

impl ColoredPoset {
    /// Builds a colored poset from elements and relations `a ≺ b`.
    ///
    /// The anchor chain is adjoined, and relations may mention anchors
    /// without listing them as elements.
    pub fn new(
        r: u32,
        n: usize,
        elements: &[ColoredLetter],
        relations: &[(ColoredLetter, ColoredLetter)],
    ) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidColorCount(r));
        }
        let mut all: Vec<ColoredLetter> = (1..r).map(ColoredLetter::zero).collect();
        for &l in elements {
            if l.color >= r || l.value as usize > n || (l.is_zero() && l.color == 0) {
                return Err(Error::IllegalLetter { value: l.value, color: l.color, r, n });
            }
            if l.is_zero() {
                continue;
            }
            if all.iter().any(|m| m.value == l.value) {
                return Err(Error::DuplicateValue(l.value));
            }
            all.push(l);
        }
        if all.len() > MAX_ELEMENTS {
            return Err(Error::CapExceeded {
                what: "poset elements",
                size: all.len() as u128,
                limit: MAX_ELEMENTS as u128,
            });
        }
        all.sort();

        let index = |l: &ColoredLetter| -> Result<usize> {
            all.binary_search(l).map_err(|_| Error::UnknownElement(l.to_string()))
        };
        let mut edges = Vec::with_capacity(relations.len() + r as usize);
        for k in 1..r.saturating_sub(1) {
            edges.push((index(&ColoredLetter::zero(k))?, index(&ColoredLetter::zero(k + 1))?));
        }
        let mut covers = Vec::new();
        for &(a, b) in relations {
            edges.push((index(&a)?, index(&b)?));
            if !covers.contains(&(a, b)) {
                covers.push((a, b));
            }
        }

        let mut below = vec![0u128; all.len()];
        loop {
            let mut changed = false;
            for &(a, b) in &edges {
                let add = below[a] | (1u128 << a);
                if below[b] | add != below[b] {
                    below[b] |= add;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if let Some(x) = (0..all.len()).find(|&x| below[x] >> x & 1 == 1) {
            return Err(Error::Cycle(all[x].to_string()));
        }
        Ok(ColoredPoset { r, n, elements: all, covers, below })
    }

    /// The chain `w(1) ≺ w(2) ≺ ... ≺ w(len)` followed by the anchors.
    ///
    /// For a colored permutation this is the poset whose only colored
    /// linear extension is the permutation itself.
    pub fn word_chain(r: u32, n: usize, word: &[ColoredLetter]) -> Result<Self> {
        let mut relations: Vec<_> = word.windows(2).map(|w| (w[0], w[1])).collect();
        if let (Some(&last), true) = (word.last(), r > 1) {
            relations.push((last, ColoredLetter::zero(1)));
        }
        Self::new(r, n, word, &relations)
    }

    /// The disjoint union of the chain `w(1) ≺ ... ≺ w(len)` and the anchor
    /// chain, i.e. `P(w)` with no relation to the anchors.
    pub fn detached_chain(r: u32, n: usize, word: &[ColoredLetter]) -> Result<Self> {
        let relations: Vec<_> = word.windows(2).map(|w| (w[0], w[1])).collect();
        Self::new(r, n, word, &relations)
    }

    /// `1_0, ..., n_0` pairwise incomparable, plus the anchor chain.
    pub fn antichain(r: u32, n: usize) -> Result<Self> {
        let letters: Vec<_> = (1..=n as u32).map(|v| ColoredLetter::new(v, 0)).collect();
        Self::new(r, n, &letters, &[])
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// All elements, anchors included, in letter order.
    pub fn elements(&self) -> &[ColoredLetter] {
        &self.elements
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = ColoredLetter> + '_ {
        self.elements.iter().copied().filter(|l| !l.is_zero())
    }

    pub fn nonzero_count(&self) -> usize {
        self.nonzero_elements().count()
    }

    pub fn relations(&self) -> &[(ColoredLetter, ColoredLetter)] {
        &self.covers
    }

    pub(crate) fn index_of(&self, l: ColoredLetter) -> Option<usize> {
        self.elements.binary_search(&l).ok()
    }

    /// Whether `a ≺ b` in the transitive closure.
    pub fn precedes(&self, a: ColoredLetter, b: ColoredLetter) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.below[j] >> i & 1 == 1,
            _ => false,
        }
    }

    /// Every pair `(a, b)` with `a ≺ b`, as element indices.
    pub(crate) fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for b in 0..self.elements.len() {
            for a in 0..self.elements.len() {
                if self.below[b] >> a & 1 == 1 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Every pair `(a, b)` with `a ≺ b`, as letters.
    pub fn strict_order(&self) -> Vec<(ColoredLetter, ColoredLetter)> {
        self.strict_pairs().into_iter().map(|(a, b)| (self.elements[a], self.elements[b])).collect()
    }

    /// Disjoint union with a poset on a disjoint set of absolute values.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        if self.r != other.r {
            return Err(Error::GroupMismatch { r1: self.r, n1: self.n, r2: other.r, n2: other.n });
        }
        if let Some(v) = self.nonzero_elements().find_map(|a| other.nonzero_elements().find(|b| b.value == a.value)) {
            return Err(Error::OverlappingValues(v.value));
        }
        let elements: Vec<_> = self.nonzero_elements().chain(other.nonzero_elements()).collect();
        let relations: Vec<_> = self.covers.iter().chain(&other.covers).copied().collect();
        Self::new(self.r, self.n.max(other.n), &elements, &relations)
    }

    /// The same poset with every nonzero value increased by `by`.
    pub fn shift_values(&self, by: u32) -> Result<Self> {
        let move_letter = |l: ColoredLetter| if l.is_zero() { l } else { l.with_value(l.value + by) };
        let elements: Vec<_> = self.nonzero_elements().map(move_letter).collect();
        let relations: Vec<_> = self.covers.iter().map(|&(a, b)| (move_letter(a), move_letter(b))).collect();
        Self::new(self.r, self.n + by as usize, &elements, &relations)
    }

    /// All linear extensions in lexicographic order (anchors included).
    pub fn linear_extensions(&self, limits: &Limits) -> Result<Vec<AnchoredWord>> {
        let mut out = Vec::new();
        let mut word = Vec::with_capacity(self.elements.len());
        self.extend_linear(0, &mut word, &mut out, limits.max_extensions)?;
        Ok(out)
    }

    fn extend_linear(
        &self,
        placed: u128,
        word: &mut Vec<ColoredLetter>,
        out: &mut Vec<AnchoredWord>,
        cap: u128,
    ) -> Result<()> {
        if word.len() == self.elements.len() {
            Limits::check("linear extensions", out.len() as u128 + 1, cap)?;
            out.push(AnchoredWord { r: self.r, letters: word.clone() });
            return Ok(());
        }
        for (i, &l) in self.elements.iter().enumerate() {
            if placed >> i & 1 == 0 && self.below[i] & !placed == 0 {
                word.push(l);
                self.extend_linear(placed | 1u128 << i, word, out, cap)?;
                word.pop();
            }
        }
        Ok(())
    }

    /// Colored linear extensions as raw words on this poset's values, with
    /// multiplicity across different linear extensions.
    pub fn colored_linear_extension_words(&self, limits: &Limits) -> Result<Vec<Vec<ColoredLetter>>> {
        let mut out = Vec::new();
        for w in self.linear_extensions(limits)? {
            let pieces = w.decompose();
            let count = shuffle_count(&pieces);
            Limits::check("colored linear extensions", out.len() as u128 + count, limits.max_extensions)?;
            out.extend(shuffles(&pieces));
        }
        Ok(out)
    }

    /// Colored linear extensions as elements of `G(r, m)`, where `m` is the
    /// number of nonzero elements. Values are relabeled order-preservingly
    /// when the poset's values are not exactly `1..=m`.
    pub fn colored_linear_extensions(&self, limits: &Limits) -> Result<Vec<ColoredPermutation>> {
        self.colored_linear_extension_words(limits)?
            .iter()
            .map(|w| ColoredPermutation::standardize(self.r, w))
            .collect()
    }
}

impl fmt::Display for ColoredPoset {
    /// Plain-text adjacency dump: each element followed by its immediate
    /// successors.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "colored poset r={} n={}", self.r, self.n)?;
        let lt = |a: usize, b: usize| self.below[b] >> a & 1 == 1;
        let size = self.elements.len();
        for (i, &x) in self.elements.iter().enumerate() {
            let ups: Vec<String> = (0..size)
                .filter(|&c| lt(i, c) && !(0..size).any(|m| lt(i, m) && lt(m, c)))
                .map(|c| self.elements[c].to_string())
                .collect();
            writeln!(f, "  {x} -> {}", ups.join(" "))?;
        }
        Ok(())
    }
}

/// A shuffle of a colored word with the anchor word `0_1 0_2 ... 0_{r-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AnchoredWord {
    r: u32,
    letters: Vec<ColoredLetter>,
}

impl AnchoredWord {
    pub fn new(r: u32, letters: Vec<ColoredLetter>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidColorCount(r));
        }
        let zeros: Vec<u32> = letters.iter().filter(|l| l.is_zero()).map(|l| l.color).collect();
        if zeros != (1..r).collect::<Vec<_>>() {
            return Err(Error::NotAPermutation(format!(
                "anchors of `{}` are not 0_1 ... 0_{}",
                format_word(&letters),
                r - 1
            )));
        }
        let mut values: Vec<u32> = letters.iter().filter(|l| !l.is_zero()).map(|l| l.value).collect();
        if letters.iter().any(|l| l.color >= r) {
            return Err(Error::NotAPermutation(format!("color out of range in `{}`", format_word(&letters))));
        }
        values.sort_unstable();
        if values.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotAPermutation(format!("repeated value in `{}`", format_word(&letters))));
        }
        Ok(AnchoredWord { r, letters })
    }

    pub fn letters(&self) -> &[ColoredLetter] {
        &self.letters
    }

    /// Splits at the anchors into `r` words; the `i`-th has its colors
    /// shifted down by `i` modulo `r`.
    pub fn decompose(&self) -> Vec<Vec<ColoredLetter>> {
        let mut pieces = vec![Vec::new(); self.r as usize];
        let mut block = 0usize;
        for &l in &self.letters {
            if l.is_zero() {
                block += 1;
            } else {
                pieces[block].push(l.unshift_color(block as u32, self.r));
            }
        }
        pieces
    }
}

impl fmt::Display for AnchoredWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.letters))
    }
}

/// `(sum of lengths)! / prod(length!)`.
pub fn shuffle_count(words: &[Vec<ColoredLetter>]) -> u128 {
    let mut total = 0u128;
    let mut acc = 1u128;
    for w in words {
        for i in 1..=w.len() as u128 {
            total += 1;
            acc = acc.saturating_mul(total) / i;
        }
    }
    acc
}

/// All shuffles of the given words, each word kept as a subsequence.
/// Output order is lexicographic in the sequence of source-word indices.
pub fn shuffles(words: &[Vec<ColoredLetter>]) -> Vec<Vec<ColoredLetter>> {
    fn go(
        words: &[Vec<ColoredLetter>],
        pos: &mut [usize],
        cur: &mut Vec<ColoredLetter>,
        total: usize,
        out: &mut Vec<Vec<ColoredLetter>>,
    ) {
        if cur.len() == total {
            out.push(cur.clone());
            return;
        }
        for i in 0..words.len() {
            if pos[i] < words[i].len() {
                cur.push(words[i][pos[i]]);
                pos[i] += 1;
                go(words, pos, cur, total, out);
                pos[i] -= 1;
                cur.pop();
            }
        }
    }
    let total = words.iter().map(Vec::len).sum();
    let mut out = Vec::new();
    go(words, &mut vec![0; words.len()], &mut Vec::with_capacity(total), total, &mut out);
    out
}

fn check_subset(subset: &[usize], n: usize) -> Result<()> {
    for &i in subset {
        if i == 0 || i > n {
            return Err(Error::OutOfRange { what: "position", value: i as u64, expected: format!("1..={n}") });
        }
    }
    Ok(())
}

/// `Z(I, pi)`: `pi(i) ≺ pi(i+1)` for `i ∉ I` and `pi(i) ≻ pi(i+1)` for
/// `i ∈ I`, with `pi(n+1) = 0_1`.
///
/// With `r = 1` there is no anchor `0_1`; reversing position `n` then has
/// no realization and is rejected with [`Error::MissingAnchor`].
pub fn zigzag_poset(subset: &[usize], pi: &ColoredPermutation) -> Result<ColoredPoset> {
    let n = pi.n();
    check_subset(subset, n)?;
    let r = pi.r();
    if r == 1 && subset.contains(&n) {
        return Err(Error::MissingAnchor);
    }
    let mut relations = Vec::new();
    for i in 1..=n {
        let a = pi.at(i);
        let b = if i < n { pi.at(i + 1) } else if r > 1 { ColoredLetter::zero(1) } else { continue };
        relations.push(if subset.contains(&i) { (b, a) } else { (a, b) });
    }
    ColoredPoset::new(r, n, pi.letters(), &relations)
}

/// `C(I, pi)`: only the relations `pi(i) ≺ pi(i+1)` for `i ∉ I`, with
/// `pi(n+1) = 0_1`.
pub fn chain_poset(subset: &[usize], pi: &ColoredPermutation) -> Result<ColoredPoset> {
    let n = pi.n();
    check_subset(subset, n)?;
    let r = pi.r();
    let mut relations = Vec::new();
    for i in (1..=n).filter(|i| !subset.contains(i)) {
        if i < n {
            relations.push((pi.at(i), pi.at(i + 1)));
        } else if r > 1 {
            relations.push((pi.at(i), ColoredLetter::zero(1)));
        }
    }
    ColoredPoset::new(r, n, pi.letters(), &relations)
}

/// Seeded random colored poset: `len` letters on values `1..=len` with
/// random colors; a random total order on letters and anchors (anchors kept
/// in chain order) supplies a DAG, each forward pair becoming a relation
/// with probability `edge_prob`.
pub fn random_poset<R: Rng>(rng: &mut R, r: u32, len: usize, edge_prob: f64) -> Result<ColoredPoset> {
    let letters: Vec<ColoredLetter> = (1..=len as u32).map(|v| ColoredLetter::new(v, rng.gen_range(0..r))).collect();
    // random interleaving of a shuffled letter list with the anchor chain
    let mut pool = letters.clone();
    for i in (1..pool.len()).rev() {
        pool.swap(i, rng.gen_range(0..=i));
    }
    let mut order = Vec::with_capacity(len + r as usize);
    let mut anchors = (1..r).map(ColoredLetter::zero).peekable();
    let mut rest = pool.into_iter().peekable();
    while anchors.peek().is_some() || rest.peek().is_some() {
        let left = anchors.len();
        let take_anchor = match (anchors.peek(), rest.peek()) {
            (Some(_), None) => true,
            (None, _) => false,
            (Some(_), Some(_)) => rng.gen_range(0..left + rest.len()) < left,
        };
        order.push(if take_anchor { anchors.next() } else { rest.next() }.expect("peeked"));
    }
    let mut relations = Vec::new();
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if (order[i].is_zero() && order[j].is_zero()) || !rng.gen_bool(edge_prob) {
                continue;
            }
            relations.push((order[i], order[j]));
        }
    }
    ColoredPoset::new(r, len, &letters, &relations)
}

/// The seeded test corpus: `cases` posets with `r` drawn from `1..=max_r`,
/// between `0` and `max_len` nonzero letters, and edge probability `0.4`.
pub fn random_poset_corpus(seed: u64, cases: usize, max_r: u32, max_len: usize) -> Result<Vec<ColoredPoset>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..cases)
        .map(|_| {
            let r = rng.gen_range(1..=max_r);
            let len = rng.gen_range(0..=max_len);
            random_poset(&mut rng, r, len, 0.4)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letter::parse_word;

    fn l(v: u32, c: u32) -> ColoredLetter {
        ColoredLetter::new(v, c)
    }

    pub(crate) fn four_colored_poset() -> ColoredPoset {
        ColoredPoset::new(
            4,
            3,
            &[l(1, 0), l(2, 1), l(3, 1)],
            &[(l(0, 2), l(1, 0)), (l(1, 0), l(3, 1)), (l(3, 1), l(0, 3)), (l(2, 1), l(1, 0))],
        )
        .unwrap()
    }

    fn words(v: &[&str]) -> Vec<Vec<ColoredLetter>> {
        let mut out: Vec<_> = v.iter().map(|s| parse_word(s).unwrap()).collect();
        out.sort();
        out
    }

    #[test]
    fn four_colored_poset_structure() {
        let p = four_colored_poset();
        assert_eq!(p.elements().len(), 6);
        assert!(p.precedes(l(0, 1), l(0, 3)));
        assert!(p.precedes(l(2, 1), l(0, 3)));
        assert!(!p.precedes(l(2, 1), l(0, 2)));
        assert!(!p.precedes(l(0, 2), l(2, 1)));
    }

    #[test]
    fn zero_chain_alone() {
        let p = ColoredPoset::new(3, 0, &[], &[]).unwrap();
        assert_eq!(p.elements(), &[l(0, 1), l(0, 2)]);
        assert_eq!(p.strict_order(), vec![(l(0, 1), l(0, 2))]);
    }

    #[test]
    fn construction_errors() {
        let cyc = ColoredPoset::new(2, 2, &[l(1, 0), l(2, 0)], &[(l(1, 0), l(2, 0)), (l(2, 0), l(1, 0))]);
        assert!(matches!(cyc, Err(Error::Cycle(_))));
        let dup = ColoredPoset::new(2, 2, &[l(1, 0), l(1, 1)], &[]);
        assert_eq!(dup, Err(Error::DuplicateValue(1)));
        assert!(matches!(ColoredPoset::new(2, 2, &[l(3, 0)], &[]), Err(Error::IllegalLetter { .. })));
        assert!(matches!(ColoredPoset::new(2, 2, &[l(0, 0)], &[]), Err(Error::IllegalLetter { .. })));
        assert!(matches!(ColoredPoset::new(2, 2, &[l(1, 0)], &[(l(1, 0), l(2, 0))]), Err(Error::UnknownElement(_))));
        // 0_2 ≺ 0_1 contradicts the anchor chain
        assert!(matches!(ColoredPoset::new(3, 0, &[], &[(l(0, 2), l(0, 1))]), Err(Error::Cycle(_))));
    }

    #[test]
    fn four_colored_poset_linear_extensions() {
        let ext = four_colored_poset().linear_extensions(&Limits::default()).unwrap();
        let got: Vec<_> = ext.iter().map(|w| w.letters().to_vec()).collect();
        let mut sorted = got.clone();
        sorted.sort();
        assert_eq!(got, sorted, "lexicographic output");
        assert_eq!(
            got,
            words(&["0_1 0_2 2_1 1_0 3_1 0_3", "0_1 2_1 0_2 1_0 3_1 0_3", "2_1 0_1 0_2 1_0 3_1 0_3"])
        );
    }

    #[test]
    fn decompositions() {
        let w = AnchoredWord::new(4, parse_word("0_1 0_2 2_1 1_0 3_1 0_3").unwrap()).unwrap();
        assert_eq!(w.decompose(), vec![vec![], vec![], parse_word("2_3 1_2 3_3").unwrap(), vec![]]);
        let w = AnchoredWord::new(3, parse_word("2_1 1_0 0_1 0_2").unwrap()).unwrap();
        assert_eq!(w.decompose()[0], parse_word("2_1 1_0").unwrap());
        let w = AnchoredWord::new(3, parse_word("0_1 0_2 2_1 1_0").unwrap()).unwrap();
        assert_eq!(w.decompose(), vec![vec![], vec![], parse_word("2_2 1_1").unwrap()]);
        assert!(AnchoredWord::new(3, parse_word("0_2 0_1 1_0").unwrap()).is_err());
    }

    #[test]
    fn four_colored_poset_colored_extensions() {
        let mut got = four_colored_poset().colored_linear_extension_words(&Limits::default()).unwrap();
        got.sort();
        assert_eq!(
            got,
            words(&["1_2 2_0 3_3", "1_2 2_1 3_3", "1_2 3_3 2_0", "1_2 3_3 2_1", "2_0 1_2 3_3", "2_1 1_2 3_3", "2_3 1_2 3_3"])
        );
    }

    #[test]
    fn chain_of_permutation_has_itself_only() {
        let pi = ColoredPermutation::parse(3, "2_1 3_0 1_2").unwrap();
        let p = ColoredPoset::word_chain(3, 3, pi.letters()).unwrap();
        assert_eq!(p.colored_linear_extensions(&Limits::default()).unwrap(), vec![pi]);
        let ext = p.linear_extensions(&Limits::default()).unwrap();
        assert_eq!(ext.len(), 1);
    }

    #[test]
    fn antichain_gives_whole_group() {
        let mut got = ColoredPoset::antichain(2, 2).unwrap().colored_linear_extensions(&Limits::default()).unwrap();
        got.sort_by_key(|p| p.rank());
        let all: Vec<_> = crate::group::enumerate_group(2, 2, &Limits::default()).unwrap().collect();
        assert_eq!(got, all);
        let only_anchor = ColoredPoset::new(2, 0, &[], &[]).unwrap();
        let ext = only_anchor.linear_extensions(&Limits::default()).unwrap();
        assert_eq!(ext.len(), 1);
        assert_eq!(ext[0].to_string(), "0_1");
    }

    #[test]
    fn zigzag_and_chain_examples() {
        let pi = ColoredPermutation::parse(3, "2_1 1_2 3_2").unwrap();
        let z = zigzag_poset(&[1], &pi).unwrap();
        assert!(z.precedes(l(1, 2), l(2, 1)));
        assert!(z.precedes(l(1, 2), l(3, 2)));
        assert!(z.precedes(l(3, 2), l(0, 1)));
        assert!(!z.precedes(l(2, 1), l(3, 2)));
        let c = chain_poset(&[1], &pi).unwrap();
        assert!(c.precedes(l(1, 2), l(0, 1)));
        assert!(!c.precedes(l(1, 2), l(2, 1)));
        assert!(!c.precedes(l(2, 1), l(0, 2)));
        assert_eq!(chain_poset(&[], &pi).unwrap(), zigzag_poset(&[], &pi).unwrap());
        let all = chain_poset(&[1, 2, 3], &pi).unwrap();
        assert_eq!(all.strict_order(), vec![(l(0, 1), l(0, 2))]);
        let z_all = zigzag_poset(&[1, 2, 3], &pi).unwrap();
        assert!(z_all.precedes(l(0, 1), l(3, 2)));
        assert!(zigzag_poset(&[4], &pi).is_err());
        let id = ColoredPermutation::identity(1, 2).unwrap();
        assert_eq!(zigzag_poset(&[2], &id), Err(Error::MissingAnchor));
    }

    #[test]
    fn disjoint_unions() {
        let a = ColoredPoset::new(3, 1, &[l(1, 0)], &[]).unwrap();
        let mut cl = a.colored_linear_extension_words(&Limits::default()).unwrap();
        cl.sort();
        assert_eq!(cl, words(&["1_0", "1_1", "1_2"]));
        let empty = ColoredPoset::new(3, 0, &[], &[]).unwrap();
        assert_eq!(a.disjoint_union(&empty).unwrap(), a);
        let one = ColoredPoset::new(2, 2, &[l(1, 0)], &[]).unwrap();
        let two = ColoredPoset::new(2, 2, &[l(2, 0)], &[]).unwrap();
        let u = one.disjoint_union(&two).unwrap();
        assert_eq!(u.elements().len(), 3);
        assert_eq!(u.colored_linear_extensions(&Limits::default()).unwrap().len(), 8);
        assert_eq!(one.disjoint_union(&one), Err(Error::OverlappingValues(1)));
    }

    #[test]
    fn json_round_trip() {
        let p = four_colored_poset();
        let s = serde_json::to_string(&p).unwrap();
        let back: ColoredPoset = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let q: ColoredPoset = serde_json::from_str(
            r#"{"r":4,"n":3,"elements":[[1,0],[2,1],[3,1]],"covers":[[[2,1],[1,0]],[[1,0],[3,1]],[[3,1],[0,3]]]}"#,
        )
        .unwrap();
        assert!(q.precedes(l(2, 1), l(0, 3)));
        assert!(!q.precedes(l(0, 2), l(1, 0)));
    }

    #[test]
    fn shuffle_counts() {
        let w = words(&["1_0 2_0", "3_0"]);
        assert_eq!(shuffles(&w).len() as u128, shuffle_count(&w));
        assert_eq!(shuffle_count(&w), 3);
        assert_eq!(shuffles(&[vec![], vec![]]), vec![Vec::<ColoredLetter>::new()]);
    }

    #[test]
    fn display_lists_covers() {
        let s = four_colored_poset().to_string();
        assert!(s.contains("1_0 -> 3_1"), "{s}");
        assert!(s.contains("0_2 -> 1_0"), "{s}");
    }
}
