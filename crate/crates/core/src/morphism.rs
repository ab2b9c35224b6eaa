//! Morphisms between free monoids and the built-in catalog.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::words::{parse_word, Alphabet, Letter, Word};

/// A non-erasing morphism given by one image word per source letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    source: Arc<Alphabet>,
    target: Arc<Alphabet>,
    images: Vec<Word>,
}

impl Morphism {
    pub fn new(source: Arc<Alphabet>, target: Arc<Alphabet>, images: Vec<Word>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::ImageCount {
                expected: source.len(),
                found: images.len(),
            });
        }
        for (letter, image) in source.indices().zip(&images) {
            if **image.alphabet() != *target {
                return Err(Error::AlphabetMismatch);
            }
            if image.is_empty() {
                return Err(Error::ErasingImage {
                    letter: source.letter(letter),
                });
            }
        }
        Ok(Self {
            source,
            target,
            images,
        })
    }

    /// Convenience constructor from textual images.
    pub fn from_strs(source: &str, target: &str, images: &[&str]) -> Result<Self> {
        let source = Arc::new(Alphabet::new(source)?);
        let target = Arc::new(Alphabet::new(target)?);
        let images = images
            .iter()
            .map(|text| parse_word(text, &target))
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, images)
    }

    pub fn source(&self) -> &Arc<Alphabet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Alphabet> {
        &self.target
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, letter: Letter) -> &Word {
        &self.images[usize::from(letter)]
    }

    /// `Some(n)` iff every image has length exactly `n`.
    pub fn uniformity(&self) -> Option<usize> {
        let n = self.images[0].len();
        self.images.iter().all(|i| i.len() == n).then_some(n)
    }

    pub fn require_uniform(&self) -> Result<usize> {
        self.uniformity().ok_or(Error::NotUniform)
    }

    pub fn apply(&self, word: &Word) -> Result<Word> {
        if **word.alphabet() != *self.source {
            return Err(Error::AlphabetMismatch);
        }
        Ok(Word::from_parts(
            self.target.clone(),
            self.apply_letters(word.letters()),
        ))
    }

    pub(crate) fn apply_letters(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut out = Vec::with_capacity(letters.len() * self.images[0].len());
        for &l in letters {
            out.extend_from_slice(self.image(l).letters());
        }
        out
    }

    /// The first `target_len` letters of the fixed point obtained by iterating
    /// the morphism from `seed`.
    ///
    /// The fixed point `x` satisfies `x = h(x_0) h(x_1) ...`, so the prefix is
    /// grown image by image, reading each next letter from the prefix itself.
    pub fn iterate_prefix(&self, seed: Letter, target_len: usize) -> Result<Word> {
        if self.source != self.target {
            return Err(Error::NotEndomorphism);
        }
        if usize::from(seed) >= self.source.len() {
            return Err(Error::IndexOutOfRange(usize::from(seed)));
        }
        if target_len == 0 {
            return Err(Error::ZeroLength);
        }
        let first = self.image(seed).letters()[0];
        if first != seed {
            return Err(Error::NotProlongable {
                seed: self.source.letter(seed),
                first: self.source.letter(first),
            });
        }
        let mut out = self.image(seed).letters().to_vec();
        let mut next = 1;
        while out.len() < target_len {
            let Some(&letter) = out.get(next) else {
                return Err(Error::FiniteFixedPoint {
                    seed: self.source.letter(seed),
                    len: out.len(),
                    requested: target_len,
                });
            };
            out.extend_from_slice(self.image(letter).letters());
            next += 1;
        }
        out.truncate(target_len);
        Ok(Word::from_parts(self.target.clone(), out))
    }
}

pub fn make_morphism(
    source: Arc<Alphabet>,
    target: Arc<Alphabet>,
    images: Vec<Word>,
) -> Result<Morphism> {
    Morphism::new(source, target, images)
}

pub fn apply(m: &Morphism, word: &Word) -> Result<Word> {
    m.apply(word)
}

pub fn uniformity(m: &Morphism) -> Option<usize> {
    m.uniformity()
}

pub fn iterate_prefix(m: &Morphism, seed: Letter, target_len: usize) -> Result<Word> {
    m.iterate_prefix(seed, target_len)
}

/// Names of the built-in morphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogName {
    /// `0 -> 01, 1 -> 10`.
    ThueMorse,
    /// Leech's 13-uniform square-free morphism on three letters.
    Leech,
    /// 17-uniform overlap-free morphism on four letters.
    F4,
    /// Overlap-free morphism on four letters with 18-letter images.
    G4,
}

impl CatalogName {
    pub const ALL: [CatalogName; 4] = [
        CatalogName::ThueMorse,
        CatalogName::Leech,
        CatalogName::F4,
        CatalogName::G4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CatalogName::ThueMorse => "thue_morse",
            CatalogName::Leech => "leech",
            CatalogName::F4 => "f4",
            CatalogName::G4 => "g4",
        }
    }

    fn alphabet(self) -> &'static str {
        match self {
            CatalogName::ThueMorse => "01",
            CatalogName::Leech => "012",
            CatalogName::F4 | CatalogName::G4 => "0123",
        }
    }

    /// Images as displayed in the literature; spaces group letters and carry
    /// no meaning.
    pub fn displayed_images(self) -> &'static [&'static str] {
        match self {
            CatalogName::ThueMorse => &["01", "10"],
            CatalogName::Leech => &["0121021201210", "1202102012021", "2010210120102"],
            CatalogName::F4 => &[
                "0123 1230 1 0321 3210",
                "1230 2301 2 1032 0321",
                "2301 3012 3 2103 1032",
                "3012 0123 0 3210 2103",
            ],
            CatalogName::G4 => &[
                "0123 0122121120 3210",
                "1230 1300303301 0321",
                "2301 2012331022 1032",
                "3012 3011010013 2103",
            ],
        }
    }

    pub fn morphism(self) -> Morphism {
        let images: Vec<String> = self
            .displayed_images()
            .iter()
            .map(|s| s.chars().filter(|c| !c.is_whitespace()).collect())
            .collect();
        let images: Vec<&str> = images.iter().map(String::as_str).collect();
        Morphism::from_strs(self.alphabet(), self.alphabet(), &images)
            .expect("catalog entries are valid morphisms")
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CatalogName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CatalogName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownCatalog(s.to_string()))
    }
}

pub fn catalog(name: &str) -> Result<Morphism> {
    Ok(name.parse::<CatalogName>()?.morphism())
}
