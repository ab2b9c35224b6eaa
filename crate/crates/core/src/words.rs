//! Alphabets, words, and detectors for squares, overlaps and cubes.
//!
//! Letters are stored as indices into an [`Alphabet`], so the order in which
//! the alphabet was written fixes lexicographic order for every enumeration in
//! the crate.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Index of a letter inside its alphabet.
pub type Letter = u8;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    /// Builds an alphabet from a string of single-character letters, in order.
    pub fn new(letters: &str) -> Result<Self> {
        Self::from_chars(letters.chars())
    }

    pub fn from_chars(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let mut out: Vec<char> = Vec::new();
        for c in letters {
            if c.is_whitespace() || c.is_control() {
                return Err(Error::UnprintableLetter(c));
            }
            if out.contains(&c) {
                return Err(Error::DuplicateLetter(c));
            }
            out.push(c);
        }
        if out.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if out.len() > usize::from(Letter::MAX) + 1 {
            return Err(Error::AlphabetTooLarge(out.len()));
        }
        Ok(Self { letters: out })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Always false; alphabets hold at least one letter.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn letter(&self, index: Letter) -> char {
        self.letters[usize::from(index)]
    }

    pub fn index_of(&self, c: char) -> Option<Letter> {
        self.letters
            .iter()
            .position(|&l| l == c)
            .map(|i| i as Letter)
    }

    /// Iterates over the letter indices `0..k` in alphabet order.
    pub fn indices(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.letters.len()).map(|i| i as Letter)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// A finite word over a shared alphabet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Arc<Alphabet>,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(alphabet: Arc<Alphabet>, letters: Vec<Letter>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| usize::from(l) >= alphabet.len()) {
            return Err(Error::IndexOutOfRange(usize::from(bad)));
        }
        Ok(Self { alphabet, letters })
    }

    pub(crate) fn from_parts(alphabet: Arc<Alphabet>, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&l| usize::from(l) < alphabet.len()));
        Self { alphabet, letters }
    }

    pub fn empty(alphabet: Arc<Alphabet>) -> Self {
        Self {
            alphabet,
            letters: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The factor `[start, start + len)`, as a new word.
    pub fn factor(&self, start: usize, len: usize) -> Word {
        Word::from_parts(
            self.alphabet.clone(),
            self.letters[start..start + len].to_vec(),
        )
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.letters.starts_with(&self.letters)
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        other.letters.ends_with(&self.letters)
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word::from_parts(self.alphabet.clone(), letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters
            .iter()
            .try_for_each(|&l| write!(f, "{}", self.alphabet.letter(l)))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_string())
    }
}

/// Maps each character of `text` to its letter index.
pub fn parse_word(text: &str, alphabet: &Arc<Alphabet>) -> Result<Word> {
    let letters = text
        .chars()
        .enumerate()
        .map(|(position, c)| {
            alphabet.index_of(c).ok_or(Error::UnknownLetter {
                letter: c,
                position,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Word::from_parts(alphabet.clone(), letters))
}

/// Number of (possibly overlapping) positions where `factor` occurs in `word`.
pub fn count_factor(word: &Word, factor: &Word) -> Result<usize> {
    if factor.is_empty() {
        return Err(Error::EmptyFactor);
    }
    if word.alphabet != factor.alphabet {
        return Err(Error::AlphabetMismatch);
    }
    Ok(word
        .letters
        .windows(factor.len())
        .filter(|w| *w == factor.letters.as_slice())
        .count())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternKind {
    /// `XX`, `|X| >= 1`.
    Square,
    /// `cXcXc`, `c` a letter and `|X| >= 0`.
    Overlap,
    /// `XXX`, `|X| >= 1`.
    Cube,
}

impl PatternKind {
    pub const ALL: [PatternKind; 3] =
        [PatternKind::Square, PatternKind::Overlap, PatternKind::Cube];

    /// Length of a factor of this kind with the given period.
    pub fn span(self, period: usize) -> usize {
        match self {
            PatternKind::Square => 2 * period,
            PatternKind::Overlap => 2 * period + 1,
            PatternKind::Cube => 3 * period,
        }
    }

    /// Shortest possible factor of this kind.
    pub fn min_span(self) -> usize {
        self.span(1)
    }

    pub fn name(self) -> &'static str {
        match self {
            PatternKind::Square => "square",
            PatternKind::Overlap => "overlap",
            PatternKind::Cube => "cube",
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PatternKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "square" => Ok(PatternKind::Square),
            "overlap" => Ok(PatternKind::Overlap),
            "cube" => Ok(PatternKind::Cube),
            other => Err(format!("unknown pattern {other:?}")),
        }
    }
}

/// A located pattern instance. For an overlap `cXcXc` the period is `|cX|`;
/// for squares and cubes it is `|X|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Occurrence {
    pub kind: PatternKind,
    pub start: usize,
    pub period: usize,
}

impl Occurrence {
    pub fn span(&self) -> usize {
        self.kind.span(self.period)
    }

    pub fn end(&self) -> usize {
        self.start + self.span()
    }

    /// Re-checks the occurrence against `letters` by direct comparison.
    pub fn matches(&self, letters: &[Letter]) -> bool {
        self.period >= 1
            && self.end() <= letters.len()
            && has_period(letters, self.start, self.span(), self.period)
    }
}

/// True iff `letters[start..start+span]` has period `period`.
fn has_period(letters: &[Letter], start: usize, span: usize, period: usize) -> bool {
    let block = &letters[start..start + span];
    block[..span - period] == block[period..]
}

/// Finds the occurrence with the smallest span, ties broken by smallest start.
///
/// Within one kind the span determines the period, so scanning periods in
/// increasing order and starts left to right yields that order directly.
pub fn find_pattern(word: &Word, kind: PatternKind) -> Option<Occurrence> {
    find_in_letters(&word.letters, kind)
}

pub(crate) fn find_in_letters(letters: &[Letter], kind: PatternKind) -> Option<Occurrence> {
    let n = letters.len();
    (1..).take_while(|&p| kind.span(p) <= n).find_map(|period| {
        let span = kind.span(period);
        (0..=n - span)
            .find(|&start| has_period(letters, start, span, period))
            .map(|start| Occurrence {
                kind,
                start,
                period,
            })
    })
}

/// True iff an occurrence of `kind` ends exactly at the last letter of `word`.
pub fn extend_check(word: &Word, kind: PatternKind) -> bool {
    ends_with_pattern(&word.letters, kind)
}

pub(crate) fn ends_with_pattern(letters: &[Letter], kind: PatternKind) -> bool {
    let n = letters.len();
    (1..).take_while(|&p| kind.span(p) <= n).any(|period| {
        let span = kind.span(period);
        has_period(letters, n - span, span, period)
    })
}

/// Lazily enumerates the pattern-free words of length `1..=max_len`.
///
/// Shorter words come first; within one length the order is lexicographic in
/// alphabet order. Each length is produced by a depth-first backtracking pass
/// that prunes any prefix on which [`extend_check`] fires.
pub fn enumerate_pattern_free(
    alphabet: &Arc<Alphabet>,
    kind: PatternKind,
    max_len: usize,
) -> PatternFreeWords {
    PatternFreeWords {
        alphabet: alphabet.clone(),
        kind,
        max_len,
        target: 1,
        buf: Vec::new(),
        cursor: vec![0],
        found_at_target: false,
    }
}

pub struct PatternFreeWords {
    alphabet: Arc<Alphabet>,
    kind: PatternKind,
    max_len: usize,
    target: usize,
    buf: Vec<Letter>,
    // cursor[d] is the next letter to try at depth d; len == buf.len() + 1
    cursor: Vec<usize>,
    found_at_target: bool,
}

impl Iterator for PatternFreeWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let k = self.alphabet.len();
        loop {
            if self.target > self.max_len {
                return None;
            }
            let depth = self.buf.len();
            let letter = self.cursor[depth];
            if letter == k {
                self.cursor.pop();
                if self.buf.pop().is_some() {
                    *self.cursor.last_mut().expect("cursor tracks depth") += 1;
                } else {
                    // Pattern-free words are factor closed: nothing at this
                    // length means nothing longer either.
                    if !self.found_at_target {
                        self.target = self.max_len + 1;
                        return None;
                    }
                    self.target += 1;
                    self.found_at_target = false;
                    self.cursor.push(0);
                }
                continue;
            }
            self.buf.push(letter as Letter);
            if ends_with_pattern(&self.buf, self.kind) {
                self.buf.pop();
                self.cursor[depth] += 1;
                continue;
            }
            if self.buf.len() == self.target {
                let word = Word::from_parts(self.alphabet.clone(), self.buf.clone());
                self.buf.pop();
                self.cursor[depth] += 1;
                self.found_at_target = true;
                return Some(word);
            }
            self.cursor.push(0);
        }
    }
}

/// Every word of exactly `len` letters, in lexicographic order.
pub fn all_words(alphabet: &Arc<Alphabet>, len: usize) -> impl Iterator<Item = Word> + '_ {
    let k = alphabet.len();
    let total = k
        .checked_pow(len as u32)
        .expect("word count overflows usize");
    (0..total).map(move |mut rank| {
        let mut letters = vec![0; len];
        for slot in letters.iter_mut().rev() {
            *slot = (rank % k) as Letter;
            rank /= k;
        }
        Word::from_parts(alphabet.clone(), letters)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ab(letters: &str) -> Arc<Alphabet> {
        Arc::new(Alphabet::new(letters).unwrap())
    }

    fn w(text: &str, alphabet: &Arc<Alphabet>) -> Word {
        parse_word(text, alphabet).unwrap()
    }

    /// Independent of `has_period`: compares explicit string slices.
    fn brute_find(text: &str, kind: PatternKind) -> Option<Occurrence> {
        let chars: Vec<char> = text.chars().collect();
        let n = chars.len();
        let mut best: Option<Occurrence> = None;
        for start in 0..n {
            for period in 1..=n {
                let span = kind.span(period);
                if start + span > n {
                    continue;
                }
                let hit = match kind {
                    PatternKind::Square => {
                        chars[start..start + period] == chars[start + period..start + span]
                    }
                    PatternKind::Cube => {
                        chars[start..start + period] == chars[start + period..start + 2 * period]
                            && chars[start..start + period]
                                == chars[start + 2 * period..start + span]
                    }
                    PatternKind::Overlap => {
                        let c = chars[start];
                        let x = &chars[start + 1..start + period];
                        chars[start + period] == c
                            && chars[start + span - 1] == c
                            && x == &chars[start + period + 1..start + 2 * period]
                    }
                };
                if hit {
                    let occ = Occurrence {
                        kind,
                        start,
                        period,
                    };
                    let key = |o: &Occurrence| (o.span(), o.start, o.period);
                    if best.is_none_or(|b| key(&occ) < key(&b)) {
                        best = Some(occ);
                    }
                }
            }
        }
        best
    }

    #[test]
    fn alphabet_rejects_duplicates_and_empty() {
        assert_eq!(Alphabet::new("010"), Err(Error::DuplicateLetter('0')));
        assert_eq!(Alphabet::new(""), Err(Error::EmptyAlphabet));
        assert_eq!(Alphabet::new("0 1"), Err(Error::UnprintableLetter(' ')));
    }

    #[test]
    fn parse_word_maps_and_reports_position() {
        let bin = ab("01");
        assert_eq!(w("0110", &bin).letters(), &[0, 1, 1, 0]);
        assert!(w("", &bin).is_empty());
        let tern = ab("012");
        assert_eq!(
            parse_word("012a", &tern),
            Err(Error::UnknownLetter {
                letter: 'a',
                position: 3
            })
        );
    }

    #[test]
    fn count_factor_examples() {
        let abc = ab("ab");
        let c = w("abaababa", &abc);
        assert_eq!(count_factor(&c, &w("aba", &abc)), Ok(3));
        assert_eq!(count_factor(&c, &w("a", &abc)), Ok(5));
        assert_eq!(count_factor(&w("", &abc), &w("a", &abc)), Ok(0));
        assert_eq!(count_factor(&c, &w("", &abc)), Err(Error::EmptyFactor));
    }

    #[test]
    fn find_pattern_examples() {
        let afl = ab("afl");
        assert_eq!(
            find_pattern(&w("alfalfa", &afl), PatternKind::Overlap),
            Some(Occurrence {
                kind: PatternKind::Overlap,
                start: 0,
                period: 3
            })
        );
        let bin = ab("01");
        // smallest span wins: 00 at 2 comes before the whole-word square (010)(010)
        let word = w("010010", &bin);
        assert_eq!(
            find_pattern(&word, PatternKind::Square),
            Some(Occurrence {
                kind: PatternKind::Square,
                start: 2,
                period: 1
            })
        );
        assert!(Occurrence {
            kind: PatternKind::Square,
            start: 0,
            period: 3
        }
        .matches(word.letters()));
        assert_eq!(find_pattern(&w("010010", &bin), PatternKind::Overlap), None);
        for kind in PatternKind::ALL {
            assert_eq!(find_pattern(&w("", &bin), kind), None);
        }
    }

    #[test]
    fn overlap_with_empty_middle_is_detected() {
        let bin = ab("01");
        assert_eq!(
            find_pattern(&w("1000", &bin), PatternKind::Overlap),
            Some(Occurrence {
                kind: PatternKind::Overlap,
                start: 1,
                period: 1
            })
        );
    }

    #[test]
    fn extend_check_examples() {
        let bin = ab("01");
        assert!(extend_check(&w("00", &bin), PatternKind::Square));
        assert!(!extend_check(&w("010", &bin), PatternKind::Overlap));
        assert!(!extend_check(&w("01101", &bin), PatternKind::Overlap));
        assert!(extend_check(&w("011011", &bin), PatternKind::Square));
        // a square that does not touch the last letter
        assert!(!extend_check(&w("001", &bin), PatternKind::Square));
    }

    #[test]
    fn enumerate_examples() {
        let bin = ab("01");
        let got: Vec<String> = enumerate_pattern_free(&bin, PatternKind::Overlap, 2)
            .map(|w| w.to_string())
            .collect();
        assert_eq!(got, ["0", "1", "00", "01", "10", "11"]);

        let tern = ab("012");
        let got: Vec<String> = enumerate_pattern_free(&tern, PatternKind::Square, 2)
            .map(|w| w.to_string())
            .collect();
        assert_eq!(got, ["0", "1", "2", "01", "02", "10", "12", "20", "21"]);

        for kind in PatternKind::ALL {
            assert_eq!(enumerate_pattern_free(&bin, kind, 0).count(), 0);
        }
    }

    #[test]
    fn enumeration_stops_when_a_length_is_empty() {
        // binary square-free words stop at length 3
        let bin = ab("01");
        let got: Vec<String> = enumerate_pattern_free(&bin, PatternKind::Square, 20)
            .map(|w| w.to_string())
            .collect();
        assert_eq!(got, ["0", "1", "01", "10", "010", "101"]);
    }

    #[test]
    fn enumeration_matches_filter_of_all_words() {
        for letters in ["0", "01", "012"] {
            let alphabet = ab(letters);
            for kind in PatternKind::ALL {
                let got: Vec<Word> = enumerate_pattern_free(&alphabet, kind, 7).collect();
                let want: Vec<Word> = (1..=7)
                    .flat_map(|n| all_words(&alphabet, n))
                    .filter(|w| brute_find(&w.to_string(), kind).is_none())
                    .collect();
                assert_eq!(got, want, "{letters} {kind}");
            }
        }
    }

    fn arb_word(k: usize, max: usize) -> impl Strategy<Value = String> {
        let letters: Vec<char> = "0123".chars().take(k).collect();
        prop::collection::vec(prop::sample::select(letters), 0..max)
            .prop_map(|v| v.into_iter().collect())
    }

    proptest! {
        #[test]
        fn detector_agrees_with_brute_force(text in arb_word(3, 16)) {
            let alphabet = ab("012");
            let word = w(&text, &alphabet);
            for kind in PatternKind::ALL {
                let got = find_pattern(&word, kind);
                prop_assert_eq!(got, brute_find(&text, kind));
                if let Some(occ) = got {
                    prop_assert!(occ.matches(word.letters()));
                }
            }
        }

        #[test]
        fn pattern_hierarchy(text in arb_word(3, 16)) {
            let word = w(&text, &ab("012"));
            let square_free = find_pattern(&word, PatternKind::Square).is_none();
            let overlap_free = find_pattern(&word, PatternKind::Overlap).is_none();
            let cube_free = find_pattern(&word, PatternKind::Cube).is_none();
            prop_assert!(!square_free || overlap_free);
            prop_assert!(!overlap_free || cube_free);
        }

        #[test]
        fn extend_check_tracks_prefixes(text in arb_word(2, 14)) {
            let alphabet = ab("01");
            let word = w(&text, &alphabet);
            for kind in PatternKind::ALL {
                let any_prefix_fires = (1..=word.len())
                    .any(|n| extend_check(&word.factor(0, n), kind));
                prop_assert_eq!(find_pattern(&word, kind).is_none(), !any_prefix_fires);
            }
        }
    }
}
