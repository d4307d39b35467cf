//! Streaming generation of restricted growth strings with exactly `k` blocks,
//! and exhaustive aggregation of peak statistics over a partition class.
//!
//! Words are produced in lexicographic order. The generator keeps only the
//! current word and its running prefix maxima, so memory is `O(n)` no matter
//! how many words are emitted. The space can be split by fixed prefixes
//! (see [`prefixes`]) and the per-prefix totals merged in any order.

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::QPoly;
use crate::words::{stats, validate_rgs, Rgs, Word};

/// Set partitions of `[n]` into exactly `k` blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionClass {
    n: usize,
    k: usize,
}

impl PartitionClass {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidClass { n, k });
        }
        Ok(Self { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// Lexicographic generator over the restricted growth strings of a class,
/// optionally restricted to those starting with a fixed prefix.
#[derive(Debug, Clone)]
pub struct RgsIter {
    n: usize,
    k: u32,
    fixed: usize,
    word: Vec<u32>,
    prefix_max: Vec<u32>,
    started: bool,
    exhausted: bool,
}

impl RgsIter {
    pub fn new(class: PartitionClass) -> Self {
        Self::with_prefix(class, &[]).expect("the empty prefix is always admissible")
    }

    /// Generator for the words of `class` that begin with `prefix`.
    ///
    /// The prefix must itself be a restricted growth string using at most `k`
    /// letters and leaving enough room to introduce the remaining blocks.
    pub fn with_prefix(class: PartitionClass, prefix: &[u32]) -> Result<Self> {
        let (n, k) = (class.n, class.k);
        let reject = || Error::InvalidPrefix {
            prefix: prefix.to_vec(),
            n,
            k,
        };
        if prefix.len() > n || !validate_rgs(prefix) {
            return Err(reject());
        }
        let mut word = vec![0; n];
        let mut prefix_max = vec![0; n];
        let mut max = 0;
        for (i, &l) in prefix.iter().enumerate() {
            max = max.max(l);
            word[i] = l;
            prefix_max[i] = max;
        }
        if max as usize > k || k - max as usize > n - prefix.len() {
            return Err(reject());
        }
        Ok(Self {
            n,
            k: k as u32,
            fixed: prefix.len(),
            word,
            prefix_max,
            started: false,
            // Only the empty class has k = 0; for n >= 1 no word has zero blocks.
            exhausted: k == 0 && n > 0,
        })
    }

    /// Positions held by the generator state; independent of how many words are emitted.
    pub fn state_len(&self) -> usize {
        self.word.len()
    }

    /// Fills positions `from..n` with the smallest completion that reaches
    /// exactly `k` blocks: ones, then the missing letters `m+1..=k` in order.
    fn fill_from(&mut self, mut from: usize) {
        if from == 0 {
            if self.n == 0 {
                return;
            }
            self.word[0] = 1;
            self.prefix_max[0] = 1;
            from = 1;
        }
        let mut max = self.prefix_max[from - 1];
        let ramp_start = self.n - (self.k - max) as usize;
        for i in from..self.n {
            let l = if i < ramp_start { 1 } else { max + 1 };
            max = max.max(l);
            self.word[i] = l;
            self.prefix_max[i] = max;
        }
    }

    /// Steps to the next word and borrows it, without allocating.
    pub fn advance(&mut self) -> Option<&[u32]> {
        if self.exhausted {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_from(self.fixed);
            return Some(&self.word);
        }
        // Position 0 is always 1, so it never moves.
        let lowest = self.fixed.max(1);
        for i in (lowest..self.n).rev() {
            let before = self.prefix_max[i - 1];
            let next = self.word[i] + 1;
            if next <= before + 1 && next <= self.k {
                self.word[i] = next;
                self.prefix_max[i] = before.max(next);
                debug_assert!(self.k - self.prefix_max[i] <= (self.n - 1 - i) as u32);
                self.fill_from(i + 1);
                return Some(&self.word);
            }
        }
        self.exhausted = true;
        None
    }
}

impl Iterator for RgsIter {
    type Item = Rgs;

    fn next(&mut self) -> Option<Rgs> {
        let k = self.k;
        let letters = self.advance()?.to_vec();
        let word = Word::new(letters, k).expect("generated letters lie in [k]");
        Some(Rgs::try_from(word).expect("generator emits restricted growth strings"))
    }
}

pub fn iterate_rgs(class: PartitionClass) -> RgsIter {
    RgsIter::new(class)
}

/// Every admissible prefix of length `min(depth, n)` for `class`, in
/// lexicographic order. Together they split the class into disjoint pieces.
pub fn prefixes(class: PartitionClass, depth: usize) -> Vec<Vec<u32>> {
    fn extend(
        prefix: &mut Vec<u32>,
        max: u32,
        depth: usize,
        class: PartitionClass,
        out: &mut Vec<Vec<u32>>,
    ) {
        if prefix.len() == depth {
            out.push(prefix.clone());
            return;
        }
        let top = (max + 1).min(class.k as u32);
        for l in 1..=top {
            let new_max = max.max(l);
            let remaining = class.n - prefix.len() - 1;
            if class.k - new_max as usize > remaining {
                continue;
            }
            prefix.push(l);
            extend(prefix, new_max, depth, class, out);
            prefix.pop();
        }
    }
    let depth = depth.min(class.n);
    let mut out = Vec::new();
    if class.k == 0 && class.n > 0 {
        return out;
    }
    extend(&mut Vec::with_capacity(depth), 0, depth, class, &mut out);
    out
}

/// Exact totals and `q`-distributions of peak statistics over a partition class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AggregateTotals {
    pub class: PartitionClass,
    pub count: BigUint,
    pub total_peaks: BigUint,
    pub total_sym: BigUint,
    pub total_nonsym: BigUint,
    pub q_distribution_sym: QPoly,
    pub q_distribution_nonsym: QPoly,
}

/// Machine-word counters for one pass; converted to big integers on exit.
struct Tally {
    count: u64,
    sym: u64,
    nonsym: u64,
    sym_hist: Vec<u64>,
    nonsym_hist: Vec<u64>,
}

impl Tally {
    fn new(n: usize) -> Self {
        // A word of length n has at most (n - 1) / 2 peaks.
        let slots = n.saturating_sub(1) / 2 + 1;
        Self {
            count: 0,
            sym: 0,
            nonsym: 0,
            sym_hist: vec![0; slots],
            nonsym_hist: vec![0; slots],
        }
    }

    fn run(&mut self, mut iter: RgsIter) {
        while let Some(word) = iter.advance() {
            let s = stats(word);
            self.count += 1;
            self.sym += s.symmetric_peaks as u64;
            self.nonsym += s.non_symmetric_peaks as u64;
            self.sym_hist[s.symmetric_peaks] += 1;
            self.nonsym_hist[s.non_symmetric_peaks] += 1;
        }
    }

    fn into_totals(self, class: PartitionClass) -> AggregateTotals {
        let hist = |h: Vec<u64>| QPoly::from_coeffs(h.into_iter().map(BigInt::from).collect());
        AggregateTotals {
            class,
            count: self.count.into(),
            total_peaks: BigUint::from(self.sym) + BigUint::from(self.nonsym),
            total_sym: self.sym.into(),
            total_nonsym: self.nonsym.into(),
            q_distribution_sym: hist(self.sym_hist),
            q_distribution_nonsym: hist(self.nonsym_hist),
        }
    }
}

impl AggregateTotals {
    /// Totals of an empty set of words.
    pub fn empty(class: PartitionClass) -> Self {
        Tally::new(class.n).into_totals(class)
    }

    /// Sums two aggregates over disjoint parts of the same class.
    pub fn merge(mut self, other: &AggregateTotals) -> Self {
        debug_assert_eq!(self.class, other.class);
        self.count += &other.count;
        self.total_peaks += &other.total_peaks;
        self.total_sym += &other.total_sym;
        self.total_nonsym += &other.total_nonsym;
        self.q_distribution_sym += &other.q_distribution_sym;
        self.q_distribution_nonsym += &other.q_distribution_nonsym;
        self
    }

    pub fn to_record(&self) -> AggregateRecord {
        let strings = |p: &QPoly| p.coeffs().iter().map(ToString::to_string).collect();
        AggregateRecord {
            n: self.class.n,
            k: self.class.k,
            count: self.count.to_string(),
            total_peaks: self.total_peaks.to_string(),
            total_sym: self.total_sym.to_string(),
            total_nonsym: self.total_nonsym.to_string(),
            qdist_sym: strings(&self.q_distribution_sym),
            qdist_nonsym: strings(&self.q_distribution_nonsym),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("record serializes")
    }
}

/// Serialized form of [`AggregateTotals`]; big integers are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AggregateRecord {
    pub n: usize,
    pub k: usize,
    pub count: String,
    pub total_peaks: String,
    pub total_sym: String,
    pub total_nonsym: String,
    pub qdist_sym: Vec<String>,
    pub qdist_nonsym: Vec<String>,
}

/// Folds the statistics of every word in `class` starting with `prefix`.
pub fn aggregate_prefix(class: PartitionClass, prefix: &[u32]) -> Result<AggregateTotals> {
    let iter = RgsIter::with_prefix(class, prefix)?;
    let mut tally = Tally::new(class.n);
    tally.run(iter);
    Ok(tally.into_totals(class))
}

/// Folds the statistics of every word in `class` on the current thread.
pub fn aggregate(class: PartitionClass) -> AggregateTotals {
    aggregate_prefix(class, &[]).expect("the empty prefix is always admissible")
}

/// Same result as [`aggregate`], computed over the prefixes of length `depth` in parallel.
pub fn aggregate_split(class: PartitionClass, depth: usize) -> AggregateTotals {
    prefixes(class, depth)
        .par_iter()
        .map(|p| aggregate_prefix(class, p).expect("generated prefixes are admissible"))
        .reduce(|| AggregateTotals::empty(class), |a, b| a.merge(&b))
}
