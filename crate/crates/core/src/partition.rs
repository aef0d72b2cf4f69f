//! Set partitions of `[n] = {1, …, n}` in standard form.
//!
//! A [`SetPartition`] keeps both its blocks (sorted by minimum, each block
//! increasing) and its restricted growth function, so block-oriented
//! operations (slash product, refinement) and word-oriented ones (split
//! product, enumeration) are both direct.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::PartitionError;

/// A restricted growth function `a_1 … a_n`: `a_1 = 1` and every letter is at
/// most one more than the maximum of the letters before it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rgf(Vec<usize>);

impl Rgf {
    pub fn new(word: Vec<usize>) -> Result<Self, PartitionError> {
        let mut max = 0;
        for (idx, &a) in word.iter().enumerate() {
            if a == 0 {
                return Err(PartitionError::InvalidRgf {
                    position: idx + 1,
                    reason: "letters must be positive".into(),
                });
            }
            if a > max + 1 {
                return Err(PartitionError::InvalidRgf {
                    position: idx + 1,
                    reason: format!("letter {a} exceeds 1 + running maximum {max}"),
                });
            }
            max = max.max(a);
        }
        Ok(Self(word))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

pub(crate) fn is_rgf_word(word: &[usize]) -> bool {
    let mut max = 0;
    for &a in word {
        if a == 0 || a > max + 1 {
            return false;
        }
        max = max.max(a);
    }
    true
}

impl fmt::Display for Rgf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        let sep = if self.0.len() <= 9 { "" } else { "," };
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

impl FromStr for Rgf {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Self::default());
        }
        let word = if s.contains(',') {
            let mut word = Vec::new();
            for (offset, token) in tokens(s, &[',']) {
                word.push(parse_int(token, offset)?);
            }
            word
        } else {
            s.char_indices()
                .map(|(pos, c)| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| PartitionError::Parse {
                            position: pos,
                            reason: format!("unexpected character {c:?}"),
                        })
                })
                .collect::<Result<Vec<_>, _>>()?
        };
        Rgf::new(word)
    }
}

/// A partition of `[n]` in standard form. `n = 0` admits only the trivial
/// partition, which has no blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
    rgf: Vec<usize>,
}

impl SetPartition {
    pub fn trivial() -> Self {
        Self {
            blocks: Vec::new(),
            rgf: Vec::new(),
        }
    }

    /// The partition of `[n]` into singletons.
    pub fn singletons(n: usize) -> Self {
        Self::from_word((1..=n).collect())
    }

    /// The one-block partition of `[n]` (trivial when `n = 0`).
    pub fn one_block(n: usize) -> Self {
        Self::from_word(vec![1; n])
    }

    /// Builds from a word already known to satisfy the growth conditions.
    pub(crate) fn from_word(rgf: Vec<usize>) -> Self {
        debug_assert!(is_rgf_word(&rgf));
        let k = rgf.iter().copied().max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); k];
        for (i, &a) in rgf.iter().enumerate() {
            blocks[a - 1].push(i + 1);
        }
        Self { blocks, rgf }
    }

    /// Size of the ground set.
    pub fn n(&self) -> usize {
        self.rgf.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn is_trivial(&self) -> bool {
        self.rgf.is_empty()
    }

    /// 1-based index of the block containing `element`.
    pub fn block_of(&self, element: usize) -> usize {
        self.rgf[element - 1]
    }

    pub fn rgf(&self) -> Rgf {
        Rgf(self.rgf.clone())
    }

    pub fn rgf_word(&self) -> &[usize] {
        &self.rgf
    }

    /// Cut points `m` in `1..n` at which no block meets both `[1, m]` and
    /// `[m+1, n]`.
    pub fn slash_cuts(&self) -> Vec<usize> {
        let mut block_max = vec![0; self.blocks.len() + 1];
        for (label, block) in self.blocks.iter().enumerate() {
            block_max[label + 1] = *block.last().expect("blocks are nonempty");
        }
        let mut reach = 0;
        let mut cuts = Vec::new();
        for i in 1..self.n() {
            reach = reach.max(block_max[self.rgf[i - 1]]);
            if reach == i {
                cuts.push(i);
            }
        }
        cuts
    }

    /// Cut points `m` in `1..n` at which the RGF suffix `a_{m+1} … a_n` is
    /// itself a restricted growth function.
    pub fn split_cuts(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&m| is_rgf_word(&self.rgf[m..]))
            .collect()
    }

    /// The restriction to `[lo, hi]`, translated down to start at 1, or `None`
    /// when some block meets both the interval and its complement.
    pub fn segment(&self, lo: usize, hi: usize) -> Option<SetPartition> {
        let inside = |x: usize| lo <= x && x <= hi;
        let mut blocks = Vec::new();
        for block in &self.blocks {
            let count = block.iter().filter(|&&x| inside(x)).count();
            if count == block.len() {
                blocks.push(block.iter().map(|&x| x + 1 - lo).collect());
            } else if count != 0 {
                return None;
            }
        }
        normalize(blocks).ok()
    }

    /// The blocks lying inside `[lo, hi]`, translated down to start at 1.
    /// Callers guarantee that no block straddles the interval boundary.
    fn restrict(&self, lo: usize, hi: usize) -> SetPartition {
        let blocks = self
            .blocks
            .iter()
            .filter(|b| b[0] >= lo && b[0] <= hi)
            .map(|b| b.iter().map(|&x| x + 1 - lo).collect())
            .collect::<Vec<Vec<usize>>>();
        normalize(blocks).expect("restriction to a union of blocks is a partition")
    }
}

impl PartialOrd for SetPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by ground-set size, then RGF-lexicographically.
impl Ord for SetPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.rgf.cmp(&other.rgf))
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("()");
        }
        let sep = if self.n() <= 9 { "" } else { "," };
        let rendered: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(sep)
            })
            .collect();
        f.write_str(&rendered.join("|"))
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Splits on any of `seps`, yielding each trimmed token with its byte offset.
fn tokens<'a>(s: &'a str, seps: &'a [char]) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    let mut start = 0;
    s.split(move |c| seps.contains(&c)).map(move |tok| {
        let offset = start + (tok.len() - tok.trim_start().len());
        start += tok.len() + 1;
        (offset, tok.trim())
    })
}

fn parse_int(token: &str, offset: usize) -> Result<usize, PartitionError> {
    token.parse().map_err(|_| PartitionError::Parse {
        position: offset,
        reason: format!("expected a positive integer, found {token:?}"),
    })
}

fn parse_comma_blocks(s: &str) -> Result<Vec<Vec<usize>>, PartitionError> {
    let mut blocks = Vec::new();
    let mut start = 0;
    for block in s.split('|') {
        let mut elems = Vec::new();
        for (offset, token) in tokens(block, &[',']) {
            elems.push(parse_int(token, start + offset)?);
        }
        blocks.push(elems);
        start += block.len() + 1;
    }
    Ok(blocks)
}

fn parse_digit_blocks(s: &str) -> Result<Vec<Vec<usize>>, PartitionError> {
    let mut blocks = vec![Vec::new()];
    for (pos, c) in s.char_indices() {
        match c {
            '|' => blocks.push(Vec::new()),
            '1'..='9' => blocks
                .last_mut()
                .expect("at least one block")
                .push(c as usize - '0' as usize),
            c if c.is_whitespace() => {}
            _ => {
                return Err(PartitionError::Parse {
                    position: pos,
                    reason: format!("unexpected character {c:?}"),
                })
            }
        }
    }
    Ok(blocks)
}

/// Accepts `()` for the trivial partition, the comma form `1,3,6|2,4,5,9|7,8`
/// and the digit shorthand `136|2459|78`. Strings without commas are read as
/// shorthand first, then as single-integer blocks (`1|2|…|10`).
impl FromStr for SetPartition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Self::trivial());
        }
        if s.contains(',') {
            return normalize(parse_comma_blocks(s)?);
        }
        match parse_digit_blocks(s).and_then(normalize) {
            Ok(p) => Ok(p),
            Err(err) => parse_comma_blocks(s).and_then(normalize).map_err(|_| err),
        }
    }
}

/// Puts raw blocks into standard form, rejecting overlaps, empty blocks and
/// gaps in the ground set.
pub fn normalize(raw_blocks: Vec<Vec<usize>>) -> Result<SetPartition, PartitionError> {
    let total: usize = raw_blocks.iter().map(Vec::len).sum();
    let mut label = vec![0usize; total + 1];
    let mut blocks = Vec::with_capacity(raw_blocks.len());
    for mut block in raw_blocks {
        if block.is_empty() {
            return Err(PartitionError::EmptyBlock);
        }
        block.sort_unstable();
        for w in block.windows(2) {
            if w[0] == w[1] {
                return Err(PartitionError::Overlap(w[0]));
            }
        }
        blocks.push(block);
    }
    blocks.sort_unstable_by_key(|b| b[0]);
    for (idx, block) in blocks.iter().enumerate() {
        for &x in block {
            if x == 0 || x > total {
                let missing = (1..=total).find(|&y| !blocks.iter().any(|b| b.contains(&y)));
                return Err(PartitionError::Gap {
                    n: total,
                    missing: missing.unwrap_or(x),
                });
            }
            if label[x] != 0 {
                return Err(PartitionError::Overlap(x));
            }
            label[x] = idx + 1;
        }
    }
    label.remove(0);
    Ok(SetPartition { blocks, rgf: label })
}

pub fn to_rgf(partition: &SetPartition) -> Rgf {
    partition.rgf()
}

pub fn from_rgf(word: &Rgf) -> SetPartition {
    SetPartition::from_word(word.0.clone())
}

/// Translates every block of `partition` up by `m`.
pub fn shift(partition: &SetPartition, m: usize) -> Vec<Vec<usize>> {
    partition
        .blocks
        .iter()
        .map(|b| b.iter().map(|x| x + m).collect())
        .collect()
}

/// The slash product `π | σ = π ∪ (σ + |π|)`.
pub fn slash(left: &SetPartition, right: &SetPartition) -> SetPartition {
    let k = left.num_blocks();
    let mut blocks = left.blocks.clone();
    blocks.extend(shift(right, left.n()));
    let mut rgf = left.rgf.clone();
    rgf.extend(right.rgf.iter().map(|a| a + k));
    SetPartition { blocks, rgf }
}

/// The split product: the partition whose RGF is the concatenation of the
/// operands' RGFs.
pub fn split(left: &SetPartition, right: &SetPartition) -> SetPartition {
    let mut rgf = left.rgf.clone();
    rgf.extend_from_slice(&right.rgf);
    SetPartition::from_word(rgf)
}

/// True iff the partition is nontrivial and not a slash product of two
/// nontrivial partitions.
pub fn is_atomic(partition: &SetPartition) -> bool {
    !partition.is_trivial() && partition.slash_cuts().is_empty()
}

/// True iff the partition is nontrivial and not a split product of two
/// nontrivial partitions.
pub fn is_unsplitable(partition: &SetPartition) -> bool {
    !partition.is_trivial() && partition.split_cuts().is_empty()
}

/// The unique factorization `π = π_1 | … | π_t` into atomic partitions.
pub fn atomic_factor(partition: &SetPartition) -> Result<Vec<SetPartition>, PartitionError> {
    if partition.is_trivial() {
        return Err(PartitionError::TrivialInput);
    }
    let mut bounds = partition.slash_cuts();
    bounds.push(partition.n());
    let mut lo = 1;
    Ok(bounds
        .into_iter()
        .map(|hi| {
            let factor = partition.restrict(lo, hi);
            lo = hi + 1;
            factor
        })
        .collect())
}

/// The unique factorization `π = π_1 ∘ … ∘ π_t` into unsplitable partitions.
pub fn unsplitable_factor(partition: &SetPartition) -> Result<Vec<SetPartition>, PartitionError> {
    if partition.is_trivial() {
        return Err(PartitionError::TrivialInput);
    }
    let mut bounds = partition.split_cuts();
    bounds.push(partition.n());
    let mut lo = 0;
    Ok(bounds
        .into_iter()
        .map(|hi| {
            let factor = SetPartition::from_word(partition.rgf[lo..hi].to_vec());
            lo = hi;
            factor
        })
        .collect())
}

/// Refinement order: true iff every block of `finer` lies inside a block of
/// `coarser`.
pub fn coarser_eq(coarser: &SetPartition, finer: &SetPartition) -> Result<bool, PartitionError> {
    if coarser.n() != finer.n() {
        return Err(PartitionError::SizeMismatch {
            left: coarser.n(),
            right: finer.n(),
        });
    }
    Ok(finer.blocks.iter().all(|block| {
        let label = coarser.block_of(block[0]);
        block.iter().all(|&x| coarser.block_of(x) == label)
    }))
}

/// Iterator over `Π_n` in RGF-lexicographic order.
#[derive(Debug, Clone)]
pub struct Partitions {
    word: Vec<usize>,
    // prefix_max[i] = max(word[..=i])
    prefix_max: Vec<usize>,
    done: bool,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        Self {
            word: vec![1; n],
            prefix_max: vec![1; n],
            done: false,
        }
    }

    fn advance(&mut self) {
        let n = self.word.len();
        for i in (1..n).rev() {
            if self.word[i] <= self.prefix_max[i - 1] {
                self.word[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.word[i]);
                for j in i + 1..n {
                    self.word[j] = 1;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let item = SetPartition::from_word(self.word.clone());
        self.advance();
        Some(item)
    }
}

/// Every partition of `[n]`, RGF-lexicographic. Practical up to `n = 12`.
pub fn enumerate_partitions(n: usize) -> Vec<SetPartition> {
    Partitions::new(n).collect()
}
