//! Pattern avoidance for finite words and uniform morphisms.
//!
//! * [`words`]: alphabets, words, square/overlap/cube detection and
//!   enumeration of pattern-free words.
//! * [`morphism`]: morphisms, fixed-point prefixes and the built-in catalog
//!   (Thue-Morse, Leech, and two four-letter overlap-free morphisms).
//! * [`unstackable`]: checkers for morphisms with unstackable image words,
//!   a sufficient condition for overlap-free (or square-free) morphisms.
//! * [`certify`]: bounded brute-force certification and tile alignment
//!   diagnostics.
//! * [`cli`]: the `morphcheck` command line and its morphism file format.

pub mod certify;
pub mod cli;
pub mod error;
pub mod morphism;
pub mod unstackable;
pub mod words;

pub use error::{Error, Result};
pub use morphism::{catalog, CatalogName, Morphism};
pub use words::{find_pattern, parse_word, Alphabet, Letter, Occurrence, PatternKind, Word};
