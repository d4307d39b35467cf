//! Words over a 1-based alphabet `[k]`, restricted growth strings, and the
//! adjacent-letter statistics (peaks, rises, descents, records) computed on them.
//!
//! A peak at `i` is a factor `w[i] < w[i+1] > w[i+2]`. It is symmetric when
//! `w[i] == w[i+2]` (the pattern `aba`) and non-symmetric otherwise.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite word whose letters lie in `1..=alphabet`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u32>,
    alphabet: u32,
}

impl Word {
    /// Builds a word over `[alphabet]`, rejecting letters outside `1..=alphabet`.
    pub fn new(letters: Vec<u32>, alphabet: u32) -> Result<Self> {
        if let Some((position, &letter)) = letters
            .iter()
            .enumerate()
            .find(|(_, &l)| l == 0 || l > alphabet)
        {
            return Err(Error::LetterOutOfRange {
                letter,
                position: position + 1,
                bound: alphabet,
            });
        }
        Ok(Self { letters, alphabet })
    }

    /// Builds a word whose alphabet bound is its largest letter.
    pub fn from_letters(letters: Vec<u32>) -> Result<Self> {
        let alphabet = letters.iter().copied().max().unwrap_or(0);
        Self::new(letters, alphabet)
    }

    pub fn empty() -> Self {
        Self {
            letters: Vec::new(),
            alphabet: 0,
        }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn reversed(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        Self {
            letters,
            alphabet: self.alphabet,
        }
    }

    pub fn stats(&self) -> StatBundle {
        stats(&self.letters)
    }

    pub fn is_rgs(&self) -> bool {
        validate_rgs(&self.letters)
    }
}

impl AsRef<[u32]> for Word {
    fn as_ref(&self) -> &[u32] {
        &self.letters
    }
}

/// Writes `letters` as a digit string when every letter fits in one digit
/// (`alphabet <= 9`), otherwise comma separated. A lone letter over a wide
/// alphabet gets a trailing comma so `10,` is not read back as digits.
pub fn write_letters<W: fmt::Write>(out: &mut W, letters: &[u32], alphabet: u32) -> fmt::Result {
    if alphabet <= 9 {
        for &l in letters {
            out.write_char(char::from_digit(l, 10).unwrap_or('?'))?;
        }
    } else {
        for (i, l) in letters.iter().enumerate() {
            if i > 0 {
                out.write_char(',')?;
            }
            write!(out, "{l}")?;
        }
        if letters.len() == 1 {
            out.write_char(',')?;
        }
    }
    Ok(())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters, self.alphabet)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `"1213"` or `"1,2,13,4"`. The alphabet bound is the largest letter.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_err = |reason: &str| Error::ParseWord {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let letters = if s.is_empty() {
            Vec::new()
        } else if s.contains(',') {
            s.strip_suffix(',')
                .filter(|body| !body.is_empty() && !body.contains(','))
                .unwrap_or(s)
                .split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u32>()
                        .map_err(|_| parse_err("expected comma-separated positive integers"))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| parse_err("expected digits 1-9"))
                })
                .collect::<Result<Vec<_>>>()?
        };
        if letters.contains(&0) {
            return Err(parse_err("letters are 1-based; 0 is not allowed"));
        }
        Word::from_letters(letters)
    }
}

/// A restricted growth string: the canonical sequential form of a set partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rgs(Word);

impl Rgs {
    /// Number of blocks, which equals the largest letter.
    pub fn block_count(&self) -> u32 {
        self.0.letters.iter().copied().max().unwrap_or(0)
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    /// The blocks of the partition, each listed in increasing order (1-based elements).
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count() as usize];
        for (i, &l) in self.0.letters.iter().enumerate() {
            blocks[l as usize - 1].push(i + 1);
        }
        blocks
    }
}

impl TryFrom<Word> for Rgs {
    type Error = Error;

    fn try_from(word: Word) -> Result<Self> {
        if validate_rgs(&word.letters) {
            Ok(Rgs(word))
        } else {
            Err(Error::NotRgs(word.to_string()))
        }
    }
}

impl fmt::Display for Rgs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// True iff `w` starts with 1 and each letter is at most one more than the
/// maximum of the letters before it. The empty word is the partition of the
/// empty set.
pub fn validate_rgs(w: &[u32]) -> bool {
    let mut max = 0;
    for &l in w {
        if l == 0 || l > max + 1 {
            return false;
        }
        max = max.max(l);
    }
    true
}

/// Per-word statistics gathered in one pass.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct StatBundle {
    pub peaks: usize,
    pub symmetric_peaks: usize,
    pub non_symmetric_peaks: usize,
    pub rises: usize,
    pub descents: usize,
    pub records: usize,
}

#[inline]
fn peak_windows(w: &[u32]) -> impl Iterator<Item = (u32, u32, u32)> + '_ {
    w.windows(3)
        .map(|t| (t[0], t[1], t[2]))
        .filter(|&(a, b, c)| a < b && b > c)
}

pub fn count_peaks(w: &[u32]) -> usize {
    peak_windows(w).count()
}

pub fn count_symmetric_peaks(w: &[u32]) -> usize {
    peak_windows(w).filter(|&(a, _, c)| a == c).count()
}

pub fn count_non_symmetric_peaks(w: &[u32]) -> usize {
    peak_windows(w).filter(|&(a, _, c)| a != c).count()
}

/// Returns `(rises, descents)`.
pub fn count_rises_descents(w: &[u32]) -> (usize, usize) {
    w.windows(2).fold((0, 0), |(r, d), p| {
        (r + usize::from(p[0] < p[1]), d + usize::from(p[0] > p[1]))
    })
}

/// Positions holding a letter strictly larger than every earlier letter.
pub fn count_records(w: &[u32]) -> usize {
    let mut max = 0;
    let mut records = 0;
    for &l in w {
        if l > max {
            records += 1;
            max = l;
        }
    }
    records
}

pub fn stats(w: &[u32]) -> StatBundle {
    let mut s = StatBundle::default();
    let mut max = 0;
    for (i, &l) in w.iter().enumerate() {
        if l > max {
            s.records += 1;
            max = l;
        }
        if i + 1 < w.len() {
            let next = w[i + 1];
            if l < next {
                s.rises += 1;
                if i + 2 < w.len() && next > w[i + 2] {
                    if l == w[i + 2] {
                        s.symmetric_peaks += 1;
                    } else {
                        s.non_symmetric_peaks += 1;
                    }
                }
            } else if l > next {
                s.descents += 1;
            }
        }
    }
    s.peaks = s.symmetric_peaks + s.non_symmetric_peaks;
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Vec<u32> {
        s.parse::<Word>().unwrap().letters().to_vec()
    }

    #[test]
    fn rgs_validation() {
        assert!(validate_rgs(&w("112")));
        assert!(validate_rgs(&w("121")));
        assert!(!validate_rgs(&w("1322141251")));
        assert!(validate_rgs(&[]));
        assert!(!validate_rgs(&w("2")));
        assert!(!validate_rgs(&w("1131")));
    }

    #[test]
    fn running_example() {
        let word = w("1322141251");
        assert_eq!(count_peaks(&word), 3);
        assert_eq!(count_symmetric_peaks(&word), 1);
        assert_eq!(count_non_symmetric_peaks(&word), 2);
        let s = stats(&word);
        assert_eq!(
            (s.peaks, s.symmetric_peaks, s.non_symmetric_peaks),
            (3, 1, 2)
        );
    }

    #[test]
    fn peak_counters() {
        assert_eq!(count_peaks(&[1; 9]), 0);
        assert_eq!(count_peaks(&w("1213")), 1);
        assert_eq!(count_symmetric_peaks(&w("12345")), 0);
        assert_eq!(count_symmetric_peaks(&w("1212")), 1);
        assert_eq!(count_non_symmetric_peaks(&w("1231")), 1);
        assert_eq!(count_non_symmetric_peaks(&w("1212121")), 0);
        assert_eq!(count_peaks(&w("12")), 0);
        assert_eq!(count_peaks(&[]), 0);
    }

    #[test]
    fn rises_descents_records() {
        assert_eq!(count_rises_descents(&w("1121324323")), (4, 4));
        assert_eq!(count_rises_descents(&[]), (0, 0));
        assert_eq!(count_rises_descents(&w("1122")), (1, 0));
        assert_eq!(count_records(&w("1121324323")), 4);
        assert_eq!(count_records(&w("111")), 1);
        assert_eq!(count_records(&[]), 0);
    }

    #[test]
    fn stat_bundles() {
        let one = stats(&[1]);
        assert_eq!(
            one,
            StatBundle {
                records: 1,
                ..Default::default()
            }
        );
        assert_eq!(
            stats(&w("1213")),
            StatBundle {
                peaks: 1,
                symmetric_peaks: 1,
                non_symmetric_peaks: 0,
                rises: 2,
                descents: 1,
                records: 3,
            }
        );
    }

    #[test]
    fn parse_and_display() {
        let word: Word = "1,2,13,4".parse().unwrap();
        assert_eq!(word.letters(), &[1, 2, 13, 4]);
        assert_eq!(word.alphabet(), 13);
        assert_eq!(word.to_string(), "1,2,13,4");
        let word: Word = "1213".parse().unwrap();
        assert_eq!(word.to_string(), "1213");
        assert!("".parse::<Word>().unwrap().is_empty());
        assert!("1203".parse::<Word>().is_err());
        assert!("1,x".parse::<Word>().is_err());
        // A wide alphabet forces the comma form even for small letters.
        assert_eq!(Word::new(vec![1, 2], 10).unwrap().to_string(), "1,2");
        assert_eq!(Word::new(vec![10], 10).unwrap().to_string(), "10,");
        assert_eq!("10,".parse::<Word>().unwrap().letters(), &[10]);
        assert!("1,2,".parse::<Word>().is_err());
    }

    #[test]
    fn word_bounds() {
        assert!(Word::new(vec![1, 3], 2).is_err());
        assert!(Word::new(vec![0], 2).is_err());
        assert!(Word::new(vec![], 0).is_ok());
    }

    #[test]
    fn rgs_blocks() {
        let r = Rgs::try_from("11213".parse::<Word>().unwrap()).unwrap();
        assert_eq!(r.block_count(), 3);
        assert_eq!(r.blocks(), vec![vec![1, 2, 4], vec![3], vec![5]]);
        assert!(Rgs::try_from("21".parse::<Word>().unwrap()).is_err());
    }

    fn word_strategy(max_k: u32) -> impl Strategy<Value = Vec<u32>> {
        (1..=max_k).prop_flat_map(|k| prop::collection::vec(1..=k, 0..16))
    }

    fn rgs_strategy() -> impl Strategy<Value = Vec<u32>> {
        prop::collection::vec(0u32..6, 0..16).prop_map(|choices| {
            let mut out = Vec::with_capacity(choices.len());
            let mut max = 0;
            for c in choices {
                let l = c % (max + 1) + 1;
                max = max.max(l);
                out.push(l);
            }
            out
        })
    }

    proptest! {
        #[test]
        fn peaks_split_into_sym_and_nonsym(word in word_strategy(7)) {
            prop_assert_eq!(
                count_peaks(&word),
                count_symmetric_peaks(&word) + count_non_symmetric_peaks(&word)
            );
            let s = stats(&word);
            prop_assert_eq!(s.peaks, count_peaks(&word));
            prop_assert_eq!(s.symmetric_peaks, count_symmetric_peaks(&word));
            prop_assert_eq!(s.non_symmetric_peaks, count_non_symmetric_peaks(&word));
            prop_assert_eq!((s.rises, s.descents), count_rises_descents(&word));
            prop_assert_eq!(s.records, count_records(&word));
        }

        #[test]
        fn binary_words_have_no_non_symmetric_peaks(word in word_strategy(2)) {
            prop_assert_eq!(count_non_symmetric_peaks(&word), 0);
        }

        #[test]
        fn reversal_preserves_peaks(word in word_strategy(6)) {
            let rev: Vec<u32> = word.iter().rev().copied().collect();
            prop_assert_eq!(count_peaks(&word), count_peaks(&rev));
            prop_assert_eq!(count_symmetric_peaks(&word), count_symmetric_peaks(&rev));
            prop_assert_eq!(count_non_symmetric_peaks(&word), count_non_symmetric_peaks(&rev));
        }

        #[test]
        fn adjacent_pairs_partition(word in word_strategy(5)) {
            prop_assume!(!word.is_empty());
            let (r, d) = count_rises_descents(&word);
            let eq = word.windows(2).filter(|p| p[0] == p[1]).count();
            prop_assert_eq!(r + d + eq, word.len() - 1);
        }

        #[test]
        fn rgs_records_equal_block_count(rgs in rgs_strategy()) {
            prop_assert!(validate_rgs(&rgs));
            let k = rgs.iter().copied().max().unwrap_or(0) as usize;
            prop_assert_eq!(count_records(&rgs), k);
        }

        #[test]
        fn display_parse_roundtrip(word in word_strategy(12)) {
            let parsed: Word = Word::from_letters(word.clone()).unwrap().to_string().parse().unwrap();
            prop_assert_eq!(parsed.letters(), &word[..]);
        }
    }
}
