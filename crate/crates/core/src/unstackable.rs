//! Checkers for morphisms with unstackable image words.
//!
//! Two definitions are covered. The overlap version asks for
//!
//! * (i) overlap-free images of every overlap-free word of length 3, and
//! * (ii) the border condition described on [`check_border_condition`].
//!
//! The square version replaces (i) by square-free images of square-free
//! length-3 words, adds marked ends (distinct first letters and distinct last
//! letters across images) and keeps the border condition.
//!
//! Both are sufficient conditions only: the Thue-Morse morphism is
//! overlap-free but fails the border condition.
//!
//! The border condition is read in its "only if" direction: whenever a
//! nonempty `V` with `|V| <= n/2` (floor) is a suffix of `h(a)` and a prefix of
//! `h(b)`, writing `h(a) = SV` and `h(b) = VU`, then `S` must not be a suffix
//! of any image and `U` must not be a prefix of any image. The empty `V` is
//! excluded since it would make `S = h(a)` trivially a suffix of an image.

use std::fmt;

use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::words::{
    all_words, find_in_letters, find_pattern, Letter, Occurrence, PatternKind, Word,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConditionId {
    Def1I,
    Def1Ii,
    Def4I,
    Def4Ii,
    Def4Iii,
    Lemma2I,
    Lemma2Ii,
    Lemma2Iii,
}

impl ConditionId {
    pub fn as_str(self) -> &'static str {
        match self {
            ConditionId::Def1I => "def1.i",
            ConditionId::Def1Ii => "def1.ii",
            ConditionId::Def4I => "def4.i",
            ConditionId::Def4Ii => "def4.ii",
            ConditionId::Def4Iii => "def4.iii",
            ConditionId::Lemma2I => "lemma2.i",
            ConditionId::Lemma2Ii => "lemma2.ii",
            ConditionId::Lemma2Iii => "lemma2.iii",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            ConditionId::Def1I => "images of overlap-free words of length 3 are overlap-free",
            ConditionId::Def4I => "images of square-free words of length 3 are square-free",
            ConditionId::Def1Ii | ConditionId::Def4Iii => {
                "short borders V force S and U to match no image suffix/prefix"
            }
            ConditionId::Def4Ii | ConditionId::Lemma2Iii => {
                "images begin with distinct letters and end with distinct letters"
            }
            ConditionId::Lemma2I => "every image is overlap-free",
            ConditionId::Lemma2Ii => "every concatenation h(a)h(b) is overlap-free",
        }
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum End {
    First,
    Last,
}

/// A single violation of a condition, carrying enough to replay it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `word` is pattern-free but `image = h(word)` contains `occurrence`.
    Image {
        word: Word,
        image: Word,
        occurrence: Occurrence,
    },
    /// `h(a) = S V`, `h(b) = V U`, and `S` ends the images of the letters in
    /// `s_suffix_of` or `U` starts the images of the letters in `u_prefix_of`.
    Border {
        a: Letter,
        b: Letter,
        v: Word,
        s: Word,
        u: Word,
        s_suffix_of: Vec<Letter>,
        u_prefix_of: Vec<Letter>,
    },
    /// `h(a)` and `h(b)` share their first (or last) letter.
    SharedEnd {
        end: End,
        a: Letter,
        b: Letter,
        letter: Letter,
    },
}

impl Witness {
    /// Replays the violation against `m` using only the recorded words.
    pub fn recheck(&self, m: &Morphism) -> bool {
        match self {
            Witness::Image {
                word,
                image,
                occurrence,
            } => {
                m.apply(word).as_ref() == Ok(image)
                    && occurrence.matches(image.letters())
                    && find_pattern(word, occurrence.kind).is_none()
            }
            Witness::Border {
                a,
                b,
                v,
                s,
                u,
                s_suffix_of,
                u_prefix_of,
            } => {
                let (ha, hb) = (m.image(*a), m.image(*b));
                s.concat(v).as_ref() == Ok(ha)
                    && v.concat(u).as_ref() == Ok(hb)
                    && (!s_suffix_of.is_empty() || !u_prefix_of.is_empty())
                    && s_suffix_of.iter().all(|&c| s.is_suffix_of(m.image(c)))
                    && u_prefix_of.iter().all(|&c| u.is_prefix_of(m.image(c)))
            }
            Witness::SharedEnd { end, a, b, letter } => {
                let pick = |c: Letter| {
                    let img = m.image(c).letters();
                    match end {
                        End::First => img[0],
                        End::Last => img[img.len() - 1],
                    }
                };
                a != b && pick(*a) == *letter && pick(*b) == *letter
            }
        }
    }

    pub fn describe(&self, m: &Morphism) -> String {
        let src = |l: &Letter| m.source().letter(*l);
        let letters = |ls: &[Letter]| {
            ls.iter()
                .map(|l| src(l).to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        match self {
            Witness::Image {
                word,
                image,
                occurrence,
            } => format!(
                "W={word} h(W)={image} has {} at start {} period {}",
                occurrence.kind, occurrence.start, occurrence.period
            ),
            Witness::Border {
                a,
                b,
                v,
                s,
                u,
                s_suffix_of,
                u_prefix_of,
            } => {
                let mut text = format!("a={} b={} V={v} S={s} U={u}", src(a), src(b));
                if !s_suffix_of.is_empty() {
                    text += &format!(
                        "; S is a suffix of h(c) for c in {{{}}}",
                        letters(s_suffix_of)
                    );
                }
                if !u_prefix_of.is_empty() {
                    text += &format!(
                        "; U is a prefix of h(c) for c in {{{}}}",
                        letters(u_prefix_of)
                    );
                }
                text
            }
            Witness::SharedEnd { end, a, b, letter } => format!(
                "h({}) and h({}) both {} with {}",
                src(a),
                src(b),
                match end {
                    End::First => "begin",
                    End::Last => "end",
                },
                m.target().letter(*letter)
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub condition: ConditionId,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
}

impl ConditionReport {
    fn new(condition: ConditionId, witnesses: Vec<Witness>) -> Self {
        Self {
            condition,
            holds: witnesses.is_empty(),
            witnesses,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Definition {
    /// Overlap-free morphism with unstackable image words.
    OverlapDef1,
    /// Square-free morphism with unstackable image words.
    SquareDef4,
}

impl Definition {
    pub fn kind(self) -> PatternKind {
        match self {
            Definition::OverlapDef1 => PatternKind::Overlap,
            Definition::SquareDef4 => PatternKind::Square,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub definition: Definition,
    pub pass: bool,
    pub reports: Vec<ConditionReport>,
    pub warnings: Vec<String>,
}

impl Verdict {
    fn new(definition: Definition, reports: Vec<ConditionReport>, m: &Morphism) -> Self {
        let mut warnings = Vec::new();
        if m.source().len() == 1 {
            warnings.push("unary source alphabet: the length-3 condition is vacuous".to_string());
        }
        Self {
            definition,
            pass: reports.iter().all(|r| r.holds),
            reports,
            warnings,
        }
    }

    pub fn report(&self, id: ConditionId) -> Option<&ConditionReport> {
        self.reports.iter().find(|r| r.condition == id)
    }

    /// Number of length-3 source words examined by the triple condition.
    pub fn words_checked(&self, m: &Morphism) -> usize {
        let kind = self.definition.kind();
        all_words(m.source(), 3)
            .filter(|w| find_pattern(w, kind).is_none())
            .count()
    }
}

/// Applies `m` to every `kind`-free word of length exactly 3 and records the
/// words whose image contains the pattern.
pub fn check_image_triples(m: &Morphism, kind: PatternKind) -> Result<ConditionReport> {
    let id = match kind {
        PatternKind::Overlap => ConditionId::Def1I,
        PatternKind::Square => ConditionId::Def4I,
        PatternKind::Cube => return Err(Error::UnsupportedPattern(kind)),
    };
    let witnesses = all_words(m.source(), 3)
        .filter(|w| find_pattern(w, kind).is_none())
        .filter_map(|word| {
            let image = m.apply(&word).expect("word is over the source alphabet");
            find_pattern(&image, kind).map(|occurrence| Witness::Image {
                word,
                image,
                occurrence,
            })
        })
        .collect();
    Ok(ConditionReport::new(id, witnesses))
}

/// Border condition of the overlap definition. Witnesses are ordered by
/// `(a, b, |V|)`, which fixes `V`.
pub fn check_border_condition(m: &Morphism) -> Result<ConditionReport> {
    border_report(m, ConditionId::Def1Ii)
}

fn border_report(m: &Morphism, id: ConditionId) -> Result<ConditionReport> {
    let n = m.require_uniform()?;
    let images = m.images();
    let mut witnesses = Vec::new();
    for a in m.source().indices() {
        let ha = m.image(a);
        for b in m.source().indices() {
            let hb = m.image(b);
            for len in 1..=n / 2 {
                if ha.letters()[n - len..] != hb.letters()[..len] {
                    continue;
                }
                let s = ha.factor(0, n - len);
                let u = hb.factor(len, n - len);
                let s_suffix_of: Vec<Letter> = m
                    .source()
                    .indices()
                    .filter(|&c| s.is_suffix_of(&images[usize::from(c)]))
                    .collect();
                let u_prefix_of: Vec<Letter> = m
                    .source()
                    .indices()
                    .filter(|&c| u.is_prefix_of(&images[usize::from(c)]))
                    .collect();
                if s_suffix_of.is_empty() && u_prefix_of.is_empty() {
                    continue;
                }
                witnesses.push(Witness::Border {
                    a,
                    b,
                    v: ha.factor(n - len, len),
                    s,
                    u,
                    s_suffix_of,
                    u_prefix_of,
                });
            }
        }
    }
    Ok(ConditionReport::new(id, witnesses))
}

/// First letters pairwise distinct and last letters pairwise distinct.
pub fn check_marked_ends(m: &Morphism) -> ConditionReport {
    marked_ends_report(m, ConditionId::Def4Ii)
}

fn marked_ends_report(m: &Morphism, id: ConditionId) -> ConditionReport {
    let mut witnesses = Vec::new();
    for end in [End::First, End::Last] {
        let pick = |c: Letter| {
            let img = m.image(c).letters();
            match end {
                End::First => img[0],
                End::Last => img[img.len() - 1],
            }
        };
        for a in m.source().indices() {
            for b in m.source().indices().filter(|&b| b > a) {
                if pick(a) == pick(b) {
                    witnesses.push(Witness::SharedEnd {
                        end,
                        a,
                        b,
                        letter: pick(a),
                    });
                }
            }
        }
    }
    ConditionReport::new(id, witnesses)
}

/// The three consequences of overlap-free triple images: overlap-free images,
/// overlap-free concatenations of two images (including `h(a)h(a)`), and
/// marked ends. Returns one report per consequence.
pub fn check_lemma_consequences(m: &Morphism) -> Result<Vec<ConditionReport>> {
    if m.source().len() < 2 {
        return Err(Error::UnaryAlphabet);
    }
    let single = |letters: Vec<Letter>| {
        let word = Word::from_parts(m.source().clone(), letters);
        let image = m.apply(&word).expect("word is over the source alphabet");
        find_in_letters(image.letters(), PatternKind::Overlap).map(|occurrence| Witness::Image {
            word,
            image,
            occurrence,
        })
    };
    let images_free = m
        .source()
        .indices()
        .filter_map(|a| single(vec![a]))
        .collect();
    let pairs_free = m
        .source()
        .indices()
        .flat_map(|a| m.source().indices().map(move |b| vec![a, b]))
        .filter_map(single)
        .collect();
    Ok(vec![
        ConditionReport::new(ConditionId::Lemma2I, images_free),
        ConditionReport::new(ConditionId::Lemma2Ii, pairs_free),
        marked_ends_report(m, ConditionId::Lemma2Iii),
    ])
}

pub fn check_overlap_def(m: &Morphism) -> Result<Verdict> {
    m.require_uniform()?;
    let reports = vec![
        check_image_triples(m, PatternKind::Overlap)?,
        border_report(m, ConditionId::Def1Ii)?,
    ];
    Ok(Verdict::new(Definition::OverlapDef1, reports, m))
}

pub fn check_square_def(m: &Morphism) -> Result<Verdict> {
    m.require_uniform()?;
    let reports = vec![
        check_image_triples(m, PatternKind::Square)?,
        marked_ends_report(m, ConditionId::Def4Ii),
        border_report(m, ConditionId::Def4Iii)?,
    ];
    Ok(Verdict::new(Definition::SquareDef4, reports, m))
}

pub fn check_definition(m: &Morphism, definition: Definition) -> Result<Verdict> {
    match definition {
        Definition::OverlapDef1 => check_overlap_def(m),
        Definition::SquareDef4 => check_square_def(m),
    }
}
