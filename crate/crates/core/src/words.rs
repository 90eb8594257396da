//! Binary words and the word-level facts the tree results rest on.
//!
//! A *long square* is a factor `uu` with `|u| >= 3`; a *long palindrome* is a
//! palindromic factor of length at least 4. Squares of period 1 and 2 and
//! palindromes of length 2 and 3 are allowed everywhere in this crate.
//!
//! The predicates operate on plain letter slices so that colorings with more
//! than two colors can reuse them; [`Word`] is the validated binary wrapper.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

/// Shortest period that makes a square "long".
pub const MIN_LONG_PERIOD: usize = 3;
/// Shortest length that makes a palindrome "long".
pub const MIN_LONG_PALINDROME: usize = 4;
/// Every binary word at least this long contains a long palindrome.
pub const PALINDROME_FORCING_LENGTH: usize = 9;
/// Largest length accepted by the census enumerators.
pub const CENSUS_LENGTH_GUARD: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("letter {letter} at position {position} is not binary")]
    NonBinaryLetter { position: usize, letter: u8 },
    #[error("character {ch:?} at position {position} is not '0' or '1'")]
    BadCharacter { position: usize, ch: char },
    #[error("census length {length} exceeds guard {guard}")]
    CensusTooLong { length: usize, guard: usize },
}

/// A finite word over `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Result<Self, WordError> {
        if let Some((position, &letter)) = letters.iter().enumerate().find(|(_, &l)| l > 1) {
            return Err(WordError::NonBinaryLetter { position, letter });
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// The word of length `len` spelled by the low `len` bits of `bits`, most
    /// significant first. Counting `bits` upward enumerates words
    /// lexicographically.
    pub fn from_bits(bits: u64, len: usize) -> Self {
        assert!(len <= 64, "bit-packed words hold at most 64 letters");
        Word(
            (0..len)
                .map(|i| ((bits >> (len - 1 - i)) & 1) as u8)
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.0
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Letter-wise complement `a -> 1 - a`.
    pub fn complement(&self) -> Word {
        Word(self.0.iter().map(|&l| 1 - l).collect())
    }

    pub fn factor(&self, start: usize, len: usize) -> Word {
        Word(self.0[start..start + len].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(position, ch)| match ch {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(WordError::BadCharacter { position, ch }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_letters(&self.0))
    }
}

/// Renders letters as decimal digits, which for binary words is the usual
/// `0`/`1` spelling.
pub fn render_letters(letters: &[u8]) -> String {
    letters
        .iter()
        .map(|&l| char::from_digit(u32::from(l), 36).unwrap_or('?'))
        .collect()
}

pub fn reverse(w: &Word) -> Word {
    w.reverse()
}

/// A long palindromic factor `letters[offset..offset + length]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PalindromeWitness {
    pub offset: usize,
    pub length: usize,
}

impl PalindromeWitness {
    pub fn holds_in(&self, letters: &[u8]) -> bool {
        self.length >= MIN_LONG_PALINDROME
            && self.offset + self.length <= letters.len()
            && is_palindrome(&letters[self.offset..self.offset + self.length])
    }
}

/// A long square `letters[offset..offset + 2 * period]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SquareWitness {
    pub offset: usize,
    pub period: usize,
}

impl SquareWitness {
    pub fn holds_in(&self, letters: &[u8]) -> bool {
        let (o, p) = (self.offset, self.period);
        p >= MIN_LONG_PERIOD
            && o + 2 * p <= letters.len()
            && letters[o..o + p] == letters[o + p..o + 2 * p]
    }
}

fn is_palindrome(letters: &[u8]) -> bool {
    letters.iter().eq(letters.iter().rev())
}

/// First long palindrome by offset, then length, among the windows of
/// length 4 and 5. Every long palindrome has a palindromic centre of one of
/// those two lengths, so `None` means the word is long-palindrome-free.
pub fn contains_long_palindrome(letters: &[u8]) -> Option<PalindromeWitness> {
    let n = letters.len();
    (0..n).find_map(|offset| {
        [4, 5]
            .into_iter()
            .filter(|&length| offset + length <= n)
            .find(|&length| is_palindrome(&letters[offset..offset + length]))
            .map(|length| PalindromeWitness { offset, length })
    })
}

/// First long square by offset, then period.
pub fn contains_long_square(letters: &[u8]) -> Option<SquareWitness> {
    let n = letters.len();
    (0..n).find_map(|offset| {
        (MIN_LONG_PERIOD..=(n - offset) / 2)
            .find(|&period| {
                letters[offset..offset + period] == letters[offset + period..offset + 2 * period]
            })
            .map(|period| SquareWitness { offset, period })
    })
}

/// Whether some long square ends exactly at the last letter.
pub(crate) fn has_long_square_suffix(letters: &[u8]) -> bool {
    let n = letters.len();
    (MIN_LONG_PERIOD..=n / 2).any(|p| letters[n - 2 * p..n - p] == letters[n - p..])
}

/// Whether the whole of `letters` is a long square.
pub(crate) fn is_long_square(letters: &[u8]) -> bool {
    let n = letters.len();
    n.is_multiple_of(2) && n / 2 >= MIN_LONG_PERIOD && letters[..n / 2] == letters[n / 2..]
}

pub fn is_long_square_free(letters: &[u8]) -> bool {
    contains_long_square(letters).is_none()
}

pub fn is_long_palindrome_free(letters: &[u8]) -> bool {
    contains_long_palindrome(letters).is_none()
}

/// Condition (i): `a[i] == a[i+3]` forces `a[i+1] != a[i+2]`, i.e. no
/// palindromic window of length 4.
pub fn condition_i(letters: &[u8]) -> bool {
    letters.windows(4).all(|w| w[0] != w[3] || w[1] != w[2])
}

/// Condition (ii): `a[i] == a[i+4]` forces `a[i+1] != a[i+3]`, i.e. no
/// palindromic window of length 5.
pub fn condition_ii(letters: &[u8]) -> bool {
    letters.windows(5).all(|w| w[0] != w[4] || w[1] != w[3])
}

/// Condition (iii): no run `aaa` starting at a 0-based position in
/// `1..=len-4` (positions 2..=6 for a word of length 9).
pub fn condition_iii(letters: &[u8]) -> bool {
    let n = letters.len();
    if n < 4 {
        return true;
    }
    (1..=n - 4).all(|i| letters[i] != letters[i + 1] || letters[i + 1] != letters[i + 2])
}

/// Long-palindrome-freeness decided by the two window conditions alone.
pub fn window_check(w: &Word) -> bool {
    condition_i(w.letters()) && condition_ii(w.letters())
}

fn census_by(length: usize, keep: impl Fn(&[u8]) -> bool + Sync) -> Result<Vec<Word>, WordError> {
    if length > CENSUS_LENGTH_GUARD {
        return Err(WordError::CensusTooLong {
            length,
            guard: CENSUS_LENGTH_GUARD,
        });
    }
    Ok((0..1u64 << length)
        .into_par_iter()
        .map(|bits| Word::from_bits(bits, length))
        .filter(|w| keep(w.letters()))
        .collect())
}

/// All long-palindrome-free binary words of `length`, lexicographically.
pub fn lpf_census(length: usize) -> Result<Vec<Word>, WordError> {
    census_by(length, is_long_palindrome_free)
}

/// All long-square-free binary words of `length`, lexicographically.
pub fn lsf_census(length: usize) -> Result<Vec<Word>, WordError> {
    census_by(length, is_long_square_free)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbxbaReport {
    pub max_x_len: usize,
    pub checked: u64,
    pub counterexamples: Vec<Word>,
}

impl AbxbaReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Checks that `01 x 10` contains a long palindrome for every binary `x`
/// with `|x| <= max_x_len`.
pub fn check_lemma_abxba(max_x_len: usize) -> AbxbaReport {
    assert!(
        max_x_len < 48,
        "sweep of 2^{max_x_len} words is not feasible"
    );
    let mut checked = 0u64;
    let mut counterexamples = Vec::new();
    for len in 0..=max_x_len {
        let found: Vec<Word> = (0..1u64 << len)
            .into_par_iter()
            .filter_map(|bits| {
                let mut letters = vec![0, 1];
                letters.extend(Word::from_bits(bits, len).into_letters());
                letters.extend([1, 0]);
                contains_long_palindrome(&letters)
                    .is_none()
                    .then_some(Word(letters))
            })
            .collect();
        checked += 1u64 << len;
        counterexamples.extend(found);
    }
    AbxbaReport {
        max_x_len,
        checked,
        counterexamples,
    }
}

/// Outcome of the length-9 palindrome sweep plus the length-8 boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Palindrome9Report {
    pub checked: usize,
    pub with_palindrome: usize,
    /// Long-palindrome-free words of length 9 (expected empty).
    pub free_length9: Vec<Word>,
    /// Long-palindrome-free words of length 8.
    pub free_length8: Vec<Word>,
    /// Length-9 words satisfying conditions (i) and (ii).
    pub satisfying_i_ii: usize,
    /// Length-9 words satisfying conditions (i), (ii) and (iii).
    pub satisfying_i_ii_iii: usize,
}

impl Palindrome9Report {
    pub fn holds(&self) -> bool {
        self.with_palindrome == self.checked && self.free_length9.is_empty()
    }

    /// Whether condition (iii) excludes nothing beyond (i) and (ii).
    pub fn condition_iii_redundant(&self) -> bool {
        self.satisfying_i_ii == self.satisfying_i_ii_iii
    }
}

pub fn check_lemma_palindrome9() -> Palindrome9Report {
    let n = PALINDROME_FORCING_LENGTH;
    let words: Vec<Word> = (0..1u64 << n).map(|b| Word::from_bits(b, n)).collect();
    let with_palindrome = words
        .iter()
        .filter(|w| contains_long_palindrome(w.letters()).is_some())
        .count();
    let satisfying_i_ii = words
        .iter()
        .filter(|w| condition_i(w.letters()) && condition_ii(w.letters()))
        .count();
    let satisfying_i_ii_iii = words
        .iter()
        .filter(|w| {
            let l = w.letters();
            condition_i(l) && condition_ii(l) && condition_iii(l)
        })
        .count();
    Palindrome9Report {
        checked: words.len(),
        with_palindrome,
        free_length9: lpf_census(n).expect("within guard"),
        free_length8: lpf_census(n - 1).expect("within guard"),
        satisfying_i_ii,
        satisfying_i_ii_iii,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// Scans every factor, independent of the window shortcut.
    fn palindrome_all_factors(letters: &[u8]) -> Option<PalindromeWitness> {
        let n = letters.len();
        for offset in 0..n {
            for length in MIN_LONG_PALINDROME..=n - offset {
                if is_palindrome(&letters[offset..offset + length]) {
                    return Some(PalindromeWitness { offset, length });
                }
            }
        }
        None
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(reverse(&w("001")), w("100"));
        assert_eq!(reverse(&w("")), w(""));
        assert_eq!(reverse(&w("0110")), w("0110"));
    }

    #[test]
    fn palindrome_examples() {
        assert_eq!(contains_long_palindrome(w("00010111").letters()), None);
        assert_eq!(
            contains_long_palindrome(w("0110").letters()),
            Some(PalindromeWitness {
                offset: 0,
                length: 4
            })
        );
        assert_eq!(
            contains_long_palindrome(w("01110").letters()),
            Some(PalindromeWitness {
                offset: 0,
                length: 5
            })
        );
    }

    #[test]
    fn palindrome_witness_is_a_window() {
        // 011110 is itself a palindrome, but the canonical witness is its centre.
        assert_eq!(
            contains_long_palindrome(w("011110").letters()),
            Some(PalindromeWitness {
                offset: 1,
                length: 4
            })
        );
    }

    #[test]
    fn square_examples() {
        assert_eq!(
            contains_long_square(w("010010").letters()),
            Some(SquareWitness {
                offset: 0,
                period: 3
            })
        );
        assert_eq!(contains_long_square(w("00010111").letters()), None);
        assert_eq!(
            contains_long_square(w("0110110").letters()),
            Some(SquareWitness {
                offset: 0,
                period: 3
            })
        );
        assert_eq!(contains_long_square(w("").letters()), None);
        assert_eq!(contains_long_square(w("00000").letters()), None);
        assert_eq!(
            contains_long_square(w("000000").letters()),
            Some(SquareWitness {
                offset: 0,
                period: 3
            })
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            "0120".parse::<Word>(),
            Err(WordError::BadCharacter {
                position: 2,
                ch: '2'
            })
        );
        assert_eq!(
            Word::new(vec![0, 3]),
            Err(WordError::NonBinaryLetter {
                position: 1,
                letter: 3
            })
        );
    }

    #[test]
    fn abxba_small() {
        let r = check_lemma_abxba(0);
        assert_eq!(r.checked, 1);
        assert!(r.holds());
        // x = 00 gives 010010, whose factor 1001 is a long palindrome.
        assert_eq!(
            contains_long_palindrome(w("010010").letters()),
            Some(PalindromeWitness {
                offset: 1,
                length: 4
            })
        );
        let r = check_lemma_abxba(2);
        assert_eq!(r.checked, 7);
        assert!(r.holds());
    }

    #[test]
    fn census_examples() {
        assert_eq!(lpf_census(3).unwrap().len(), 8);
        let c8 = lpf_census(8).unwrap();
        assert!(c8.contains(&w("00010111")));
        assert!(lpf_census(9).unwrap().is_empty());
        assert_eq!(
            lpf_census(25),
            Err(WordError::CensusTooLong {
                length: 25,
                guard: 24
            })
        );
        let lsf6 = lsf_census(6).unwrap();
        assert_eq!(lsf6.len(), 56);
        assert!(lsf6.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn census_is_closed_under_reversal_and_complement() {
        for len in 0..=10 {
            let c = lpf_census(len).unwrap();
            for word in &c {
                assert!(c.contains(&word.reverse()));
                assert!(c.contains(&word.complement()));
            }
        }
    }

    #[test]
    fn window_check_examples() {
        assert!(window_check(&w("00010111")));
        assert!(!window_check(&w("0000")));
        assert!(window_check(&w("")));
    }

    #[test]
    fn window_forms_agree_with_full_scan_exhaustively() {
        for len in 0..=14 {
            for bits in 0..1u64 << len {
                let word = Word::from_bits(bits, len);
                let full = palindrome_all_factors(word.letters());
                assert_eq!(window_check(&word), full.is_none(), "{word}");
                assert_eq!(
                    contains_long_palindrome(word.letters()).is_some(),
                    full.is_some(),
                    "{word}"
                );
            }
        }
    }

    #[test]
    fn palindrome9_report() {
        let r = check_lemma_palindrome9();
        assert!(r.holds());
        assert_eq!(r.checked, 512);
        assert_eq!(r.satisfying_i_ii, 0);
        assert!(r.condition_iii_redundant());
    }

    #[test]
    fn suffix_helpers() {
        assert!(has_long_square_suffix(w("1010010").letters()));
        assert!(!has_long_square_suffix(w("0100101").letters()));
        assert!(is_long_square(w("011011").letters()));
        assert!(!is_long_square(w("0101").letters()));
    }

    #[test]
    fn from_bits_is_lexicographic() {
        assert_eq!(Word::from_bits(0b011, 3), w("011"));
        assert_eq!(Word::from_bits(0, 0), Word::empty());
    }
}
