use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A value with a color, written `v_c`.
///
/// Letters are ordered color first, then value, so that
/// `1_0 < 2_0 < ... < n_0 < 1_1 < ... < n_{r-1}`. Value `0` is reserved
/// for the anchor letters `0_1, ..., 0_{r-1}` of colored posets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "(u32, u32)", into = "(u32, u32)")]
pub struct ColoredLetter {
    pub value: u32,
    pub color: u32,
}

impl ColoredLetter {
    pub const fn new(value: u32, color: u32) -> Self {
        ColoredLetter { value, color }
    }

    /// The anchor letter `0_k`.
    pub const fn zero(color: u32) -> Self {
        ColoredLetter { value: 0, color }
    }

    pub const fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Adds `by` to the color modulo `r`.
    pub fn shift_color(self, by: u32, r: u32) -> Self {
        ColoredLetter { value: self.value, color: (self.color + by % r) % r }
    }

    /// Subtracts `by` from the color modulo `r`.
    pub fn unshift_color(self, by: u32, r: u32) -> Self {
        ColoredLetter { value: self.value, color: (self.color + r - by % r) % r }
    }

    pub fn with_value(self, value: u32) -> Self {
        ColoredLetter { value, color: self.color }
    }
}

impl Ord for ColoredLetter {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.color, self.value).cmp(&(other.color, other.value))
    }
}

impl PartialOrd for ColoredLetter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<(u32, u32)> for ColoredLetter {
    fn from((value, color): (u32, u32)) -> Self {
        ColoredLetter { value, color }
    }
}

impl From<ColoredLetter> for (u32, u32) {
    fn from(l: ColoredLetter) -> Self {
        (l.value, l.color)
    }
}

impl fmt::Display for ColoredLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.value, self.color)
    }
}

impl FromStr for ColoredLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (v, c) = s
            .trim()
            .split_once('_')
            .ok_or_else(|| Error::Parse(format!("expected `value_color`, got `{s}`")))?;
        let value = v.parse().map_err(|_| Error::Parse(format!("bad value in `{s}`")))?;
        let color = c.parse().map_err(|_| Error::Parse(format!("bad color in `{s}`")))?;
        Ok(ColoredLetter { value, color })
    }
}

/// Parses a space-separated word such as `2_0 1_3 3_1`.
pub fn parse_word(s: &str) -> Result<Vec<ColoredLetter>> {
    s.split_whitespace().map(str::parse).collect()
}

/// Formats a word as space-separated `v_c` tokens.
pub fn format_word(word: &[ColoredLetter]) -> String {
    let mut out = String::new();
    for (i, l) in word.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&l.to_string());
    }
    out
}

/// Descent positions (1-indexed) of a word of nonzero letters, using the
/// sentinel `0_1` after the last letter: the final position is a descent
/// iff the last letter has nonzero color.
///
/// Only relative order is used, so this applies equally to subwords on
/// arbitrary value sets.
pub fn word_descents(word: &[ColoredLetter]) -> Vec<usize> {
    let mut out: Vec<usize> = word
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .collect();
    if word.last().is_some_and(|l| l.color != 0) {
        out.push(word.len());
    }
    out
}

pub fn word_des(word: &[ColoredLetter]) -> usize {
    word_descents(word).len()
}

pub fn word_intdes(word: &[ColoredLetter]) -> usize {
    word.windows(2).filter(|w| w[0] > w[1]).count()
}
