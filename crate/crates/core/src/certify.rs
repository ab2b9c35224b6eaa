//! Bounded brute-force certification of pattern-free morphisms, plus the
//! residue arithmetic used to diagnose where an overlap sits against the tiles
//! of a uniform morphism.
//!
//! A morphism `h` is pattern-free when `h(W)` is pattern-free exactly when `W`
//! is. The forward search looks for pattern-free `W` with a patterned image;
//! the backward search looks for patterned `W` with a pattern-free image. Both
//! walk words shortest first, lexicographically within a length, and report
//! the first hit in that order. Each length is checked in parallel and reduced
//! to its first hit, so the answer does not depend on scheduling.

use std::fmt::{self, Write as _};
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::unstackable::{check_border_condition, check_image_triples, check_marked_ends};
use crate::words::{
    all_words, enumerate_pattern_free, find_in_letters, Occurrence, PatternKind, Word,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Pattern-free word, patterned image.
    Forward,
    /// Patterned word, pattern-free image.
    Backward,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub direction: Direction,
    pub word: Word,
    pub image: Word,
    /// In `image` for forward counterexamples, in `word` for backward ones.
    pub occurrence: Occurrence,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stats {
    pub max_len: usize,
    /// `per_length[i]` words of length `i + 1` were examined.
    pub per_length: Vec<usize>,
    pub elapsed_ms: u128,
}

impl Stats {
    pub fn words_checked(&self) -> usize {
        self.per_length.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certification {
    pub counterexample: Option<Counterexample>,
    pub stats: Stats,
}

/// Searches pattern-free words of length `1..=max_len` for one whose image
/// contains the pattern.
pub fn certify_forward(m: &Morphism, kind: PatternKind, max_len: usize) -> Result<Certification> {
    if max_len < 1 {
        return Err(Error::MaxLenTooSmall {
            min: 1,
            got: max_len,
        });
    }
    let started = Instant::now();
    let mut stats = Stats {
        max_len,
        per_length: vec![0; max_len],
        elapsed_ms: 0,
    };
    let mut words = enumerate_pattern_free(m.source(), kind, max_len).peekable();
    let mut found = None;
    while let Some(first) = words.next() {
        let len = first.len();
        let mut batch = vec![first];
        while let Some(w) = words.next_if(|w| w.len() == len) {
            batch.push(w);
        }
        stats.per_length[len - 1] = batch.len();
        found = batch.par_iter().find_map_first(|word| {
            let image = m.apply_letters(word.letters());
            find_in_letters(&image, kind).map(|occurrence| Counterexample {
                direction: Direction::Forward,
                word: word.clone(),
                image: Word::from_parts(m.target().clone(), image),
                occurrence,
            })
        });
        if found.is_some() {
            break;
        }
    }
    stats.elapsed_ms = started.elapsed().as_millis();
    Ok(Certification {
        counterexample: found,
        stats,
    })
}

/// Searches words of length `1..=max_len` that contain the pattern for one
/// whose image is pattern-free. Patterned words are found by filtering all
/// `k^len` words.
pub fn certify_backward(m: &Morphism, kind: PatternKind, max_len: usize) -> Result<Certification> {
    if max_len < kind.min_span() {
        return Err(Error::MaxLenTooSmall {
            min: kind.min_span(),
            got: max_len,
        });
    }
    let started = Instant::now();
    let mut stats = Stats {
        max_len,
        per_length: vec![0; max_len],
        elapsed_ms: 0,
    };
    let mut found = None;
    for len in 1..=max_len {
        let batch: Vec<(Word, Occurrence)> = all_words(m.source(), len)
            .filter_map(|w| find_in_letters(w.letters(), kind).map(|occ| (w, occ)))
            .collect();
        stats.per_length[len - 1] = batch.len();
        found = batch.par_iter().find_map_first(|(word, occurrence)| {
            let image = m.apply_letters(word.letters());
            find_in_letters(&image, kind)
                .is_none()
                .then(|| Counterexample {
                    direction: Direction::Backward,
                    word: word.clone(),
                    image: Word::from_parts(m.target().clone(), image),
                    occurrence: *occurrence,
                })
        });
        if found.is_some() {
            break;
        }
    }
    stats.elapsed_ms = started.elapsed().as_millis();
    Ok(Certification {
        counterexample: found,
        stats,
    })
}

/// Positions of the three repeated letters of an overlap, reduced mod `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residues {
    pub r0: usize,
    pub r1: usize,
    pub r2: usize,
}

impl Residues {
    /// `r2 = 2 r1 - r0 (mod n)`.
    pub fn satisfies_relation(&self, n: usize) -> bool {
        (2 * self.r1 + n - self.r0) % n == self.r2
    }
}

/// `r_i = (j0 + i * period) mod n` for `i` in `0..3`.
pub fn residues(j0: usize, period: usize, n: usize) -> Result<Residues> {
    if n == 0 || period == 0 {
        return Err(Error::BadModulus);
    }
    Ok(Residues {
        r0: j0 % n,
        r1: (j0 + period) % n,
        r2: (j0 + 2 * period) % n,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlignmentCase {
    R0LeR2LtR1,
    R2LtR0LtR1,
    R1LtR0LeR2,
    R1LtR2LtR0,
    /// Period is a multiple of `n`; the three tiles coincide.
    Aligned,
    LongR0LtR1,
    LongR1LtR0,
    /// Period below `n` with `r0 < r1 < r2` or `r2 < r1 < r0`: the overlap
    /// sits inside the image of at most three letters.
    Monotone,
}

impl AlignmentCase {
    pub fn label(self) -> &'static str {
        match self {
            AlignmentCase::R0LeR2LtR1 => "r0≤r2<r1",
            AlignmentCase::R2LtR0LtR1 => "r2<r0<r1",
            AlignmentCase::R1LtR0LeR2 => "r1<r0≤r2",
            AlignmentCase::R1LtR2LtR0 => "r1<r2<r0",
            AlignmentCase::Aligned => "aligned",
            AlignmentCase::LongR0LtR1 => "long_r0<r1",
            AlignmentCase::LongR1LtR0 => "long_r1<r0",
            AlignmentCase::Monotone => "monotone",
        }
    }
}

impl fmt::Display for AlignmentCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlignmentDiagnosis {
    pub residues: Residues,
    /// Number of length-`n` tiles the occurrence touches.
    pub tile_span: usize,
    pub case: AlignmentCase,
}

/// Places an overlap of an `n`-uniform image against the tile grid.
///
/// Periods shorter than `n` are classified by the full order of the three
/// residues, longer ones by `r0` against `r1` only.
pub fn classify_alignment(occ: &Occurrence, n: usize) -> Result<AlignmentDiagnosis> {
    if occ.kind != PatternKind::Overlap {
        return Err(Error::NotAnOverlap(occ.kind));
    }
    let residues = residues(occ.start, occ.period, n)?;
    let tile_span = (occ.end() - 1) / n - occ.start / n + 1;
    let Residues { r0, r1, r2 } = residues;
    let case = if occ.period.is_multiple_of(n) {
        AlignmentCase::Aligned
    } else if occ.period > n {
        if r0 < r1 {
            AlignmentCase::LongR0LtR1
        } else {
            AlignmentCase::LongR1LtR0
        }
    } else if r0 < r1 {
        if r2 > r1 {
            AlignmentCase::Monotone
        } else if r2 >= r0 {
            AlignmentCase::R0LeR2LtR1
        } else {
            AlignmentCase::R2LtR0LtR1
        }
    } else if r2 < r1 {
        AlignmentCase::Monotone
    } else if r2 < r0 {
        AlignmentCase::R1LtR2LtR0
    } else {
        AlignmentCase::R1LtR0LeR2
    };
    Ok(AlignmentDiagnosis {
        residues,
        tile_span,
        case,
    })
}

/// Renders a counterexample against the tile structure of `m`.
///
/// For forward counterexamples of a uniform morphism the report gives the
/// residues and alignment case, the tiles touched, and either the preimage
/// factor (aligned case) or the border/marked-end witnesses that the
/// misalignment runs into. Backward counterexamples are replayed through the
/// image of the preimage pattern. Non-uniform morphisms get positions only.
pub fn explain(m: &Morphism, cex: &Counterexample) -> String {
    let mut out = String::new();
    let occ = cex.occurrence;
    let _ = writeln!(
        out,
        "{} counterexample: W={} h(W)={}",
        cex.direction, cex.word, cex.image
    );
    if cex.direction == Direction::Backward {
        explain_backward(m, cex, &mut out);
        return out;
    }
    let _ = writeln!(
        out,
        "{} in h(W) at start {} period {} (span {})",
        occ.kind,
        occ.start,
        occ.period,
        occ.span()
    );
    let Some(n) = m.uniformity() else {
        let _ = writeln!(out, "morphism is not uniform; positions only");
        write_positions(&mut out, &occ, None);
        return out;
    };
    write_positions(&mut out, &occ, Some(n));

    let first_tile = occ.start / n;
    let last_tile = (occ.end() - 1) / n;
    let _ = write!(out, "tiles:");
    for t in first_tile..=last_tile {
        let letter = cex.word.letters()[t];
        let _ = write!(
            out,
            " T{t}=h({})={}",
            m.source().letter(letter),
            m.image(letter)
        );
    }
    let _ = writeln!(out);

    if occ.kind == PatternKind::Overlap {
        if let Ok(diag) = classify_alignment(&occ, n) {
            let r = diag.residues;
            let _ = writeln!(
                out,
                "residues r0={} r1={} r2={} (2r1-r0 mod n holds: {}), tiles touched {}, case {}",
                r.r0,
                r.r1,
                r.r2,
                r.satisfies_relation(n),
                diag.tile_span,
                diag.case
            );
        }
    }

    let aligned = occ.period.is_multiple_of(n);
    if aligned && matches!(occ.kind, PatternKind::Overlap | PatternKind::Square) {
        let q = occ.period / n;
        let s0 = first_tile;
        let d = cex.word.letters()[s0];
        let pre_kind = occ.kind;
        let pre_len = pre_kind.span(q);
        let _ = write!(
            out,
            "aligned: period is {q} tile(s); repeated tile letter d={}",
            m.source().letter(d)
        );
        if s0 + pre_len <= cex.word.len() {
            let factor = cex.word.factor(s0, pre_len);
            let holds = Occurrence {
                kind: pre_kind,
                start: s0,
                period: q,
            }
            .matches(cex.word.letters());
            let _ = writeln!(
                out,
                "; preimage factor {factor} at {s0} {} a {}",
                if holds { "is" } else { "is not" },
                pre_kind
            );
        } else {
            let _ = writeln!(out, "; preimage factor runs past the end of W");
        }
        let ends = check_marked_ends(m);
        if !ends.holds {
            let _ = writeln!(
                out,
                "marked ends fail, so tiles sharing an end letter need not coincide:"
            );
            for w in &ends.witnesses {
                let _ = writeln!(out, "  {}", w.describe(m));
            }
        }
    } else if aligned {
        let _ = writeln!(out, "aligned: period is a multiple of n");
    } else {
        let _ = writeln!(out, "misaligned: period is not a multiple of n={n}");
        if let Ok(border) = check_border_condition(m) {
            if border.holds {
                let _ = writeln!(
                    out,
                    "border condition holds; the occurrence must come from a length-3 factor"
                );
            } else {
                let _ = writeln!(
                    out,
                    "border condition violations (S suffix / U prefix requirement):"
                );
                for w in &border.witnesses {
                    let _ = writeln!(out, "  {}", w.describe(m));
                }
            }
        }
        let triple_kind = match occ.kind {
            PatternKind::Square => Some(PatternKind::Square),
            PatternKind::Overlap => Some(PatternKind::Overlap),
            PatternKind::Cube => None,
        };
        if let Some(kind) = triple_kind {
            if let Ok(triples) = check_image_triples(m, kind) {
                if !triples.holds {
                    let _ = writeln!(out, "length-3 image violations:");
                    for w in triples.witnesses.iter().take(4) {
                        let _ = writeln!(out, "  {}", w.describe(m));
                    }
                }
            }
        }
    }
    out
}

fn write_positions(out: &mut String, occ: &Occurrence, n: Option<usize>) {
    let p = occ.period;
    let s = occ.start;
    let marks: Vec<(&str, usize)> = match occ.kind {
        PatternKind::Overlap => vec![("j0", s), ("j1", s + p), ("j2", s + 2 * p)],
        // c_{j0} X d_{i0} c_{j1} X d_{i1}
        PatternKind::Square => vec![
            ("j0", s),
            ("i0", s + p - 1),
            ("j1", s + p),
            ("i1", s + 2 * p - 1),
        ],
        PatternKind::Cube => vec![("j0", s), ("j1", s + p), ("j2", s + 2 * p)],
    };
    let _ = write!(out, "positions:");
    for (name, pos) in marks {
        match n {
            Some(n) => {
                let _ = write!(out, " {name}={pos} (tile {}, offset {})", pos / n, pos % n);
            }
            None => {
                let _ = write!(out, " {name}={pos}");
            }
        }
    }
    let _ = writeln!(out);
}

fn explain_backward(m: &Morphism, cex: &Counterexample, out: &mut String) {
    let occ = cex.occurrence;
    let _ = writeln!(
        out,
        "{} in W at start {} period {}",
        occ.kind, occ.start, occ.period
    );
    let offset = |upto: usize| -> usize {
        cex.word.letters()[..upto]
            .iter()
            .map(|&l| m.image(l).len())
            .sum()
    };
    let start = offset(occ.start);
    let period = offset(occ.start + occ.period) - start;
    let expected = Occurrence {
        kind: occ.kind,
        start,
        period,
    };
    let _ = writeln!(
        out,
        "the image should contain a {} at start {} period {}: {}",
        occ.kind,
        start,
        period,
        if expected.matches(cex.image.letters()) {
            "present"
        } else {
            "absent"
        }
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::catalog;
    use crate::unstackable::{check_overlap_def, check_square_def};
    use crate::words::parse_word;

    fn m(src: &str, images: &[&str]) -> Morphism {
        Morphism::from_strs(src, src, images).unwrap()
    }

    #[test]
    fn forward_examples() {
        let mu = catalog("thue_morse").unwrap();
        let run = certify_forward(&mu, PatternKind::Overlap, 8).unwrap();
        assert_eq!(run.counterexample, None);
        assert_eq!(run.stats.per_length.len(), 8);
        assert_eq!(run.stats.per_length[0], 2);

        let doubling = m("01", &["00", "11"]);
        let cex = certify_forward(&doubling, PatternKind::Square, 1)
            .unwrap()
            .counterexample
            .unwrap();
        assert_eq!(cex.word.to_string(), "0");
        assert_eq!(cex.image.to_string(), "00");
        assert_eq!((cex.occurrence.start, cex.occurrence.period), (0, 1));

        let leech = catalog("leech").unwrap();
        assert_eq!(
            certify_forward(&leech, PatternKind::Square, 6)
                .unwrap()
                .counterexample,
            None
        );
        assert_eq!(
            certify_forward(&leech, PatternKind::Square, 0),
            Err(Error::MaxLenTooSmall { min: 1, got: 0 })
        );
    }

    #[test]
    fn backward_examples() {
        let mu = catalog("thue_morse").unwrap();
        assert_eq!(
            certify_backward(&mu, PatternKind::Overlap, 5)
                .unwrap()
                .counterexample,
            None
        );
        let leech = catalog("leech").unwrap();
        assert_eq!(
            certify_backward(&leech, PatternKind::Square, 4)
                .unwrap()
                .counterexample,
            None
        );
        assert_eq!(
            certify_backward(&mu, PatternKind::Overlap, 2),
            Err(Error::MaxLenTooSmall { min: 3, got: 2 })
        );
        assert!(certify_backward(&mu, PatternKind::Square, 2).is_ok());
        // W = 000 is the only overlap of length 3 starting with 0
        let run = certify_backward(&mu, PatternKind::Overlap, 3).unwrap();
        assert_eq!(run.stats.per_length, [0, 0, 2]);
    }

    #[test]
    fn forward_counterexample_is_shortest() {
        let doubling = m("01", &["00", "11"]);
        let cex = certify_forward(&doubling, PatternKind::Overlap, 6)
            .unwrap()
            .counterexample
            .unwrap();
        // single letters map to 00/11 (no overlap); 00 -> 0000 has 000
        assert_eq!(cex.word.to_string(), "00");
    }

    #[test]
    fn residue_examples() {
        assert_eq!(
            residues(3, 4, 13).unwrap(),
            Residues {
                r0: 3,
                r1: 7,
                r2: 11
            }
        );
        assert_eq!(
            residues(0, 13, 13).unwrap(),
            Residues {
                r0: 0,
                r1: 0,
                r2: 0
            }
        );
        let r = residues(5, 9, 13).unwrap();
        assert_eq!(
            r,
            Residues {
                r0: 5,
                r1: 1,
                r2: 10
            }
        );
        assert!(r.satisfies_relation(13));
        assert_eq!(residues(0, 0, 13), Err(Error::BadModulus));
        assert_eq!(residues(0, 1, 0), Err(Error::BadModulus));
    }

    fn overlap(start: usize, period: usize) -> Occurrence {
        Occurrence {
            kind: PatternKind::Overlap,
            start,
            period,
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_alignment(&overlap(3, 13), 13).unwrap().case,
            AlignmentCase::Aligned
        );
        let d = classify_alignment(&overlap(10, 4), 13).unwrap();
        assert_eq!(
            d.residues,
            Residues {
                r0: 10,
                r1: 1,
                r2: 5
            }
        );
        assert_eq!(d.case, AlignmentCase::R1LtR2LtR0);
        assert_eq!(d.tile_span, 2);
        let d = classify_alignment(&overlap(0, 20), 13).unwrap();
        assert_eq!((d.residues.r0, d.residues.r1), (0, 7));
        assert_eq!(d.case, AlignmentCase::LongR0LtR1);
        assert_eq!(d.tile_span, 4);
        let square = Occurrence {
            kind: PatternKind::Square,
            start: 0,
            period: 2,
        };
        assert_eq!(
            classify_alignment(&square, 13),
            Err(Error::NotAnOverlap(PatternKind::Square))
        );
    }

    #[test]
    fn classify_covers_every_short_order() {
        let n = 10;
        // r0 < r1 with r2 wrapped below r0
        assert_eq!(
            classify_alignment(&overlap(6, 3), n).unwrap().case,
            AlignmentCase::R2LtR0LtR1
        );
        // r0 < r2 < r1
        assert_eq!(
            classify_alignment(&overlap(2, 7), n).unwrap().case,
            AlignmentCase::R0LeR2LtR1
        );
        // r2 == r0 at half the tile
        assert_eq!(
            classify_alignment(&overlap(1, 5), n).unwrap().case,
            AlignmentCase::R0LeR2LtR1
        );
        // r1 < r0 < r2
        assert_eq!(
            classify_alignment(&overlap(7, 6), n).unwrap().case,
            AlignmentCase::R1LtR0LeR2
        );
        assert_eq!(
            classify_alignment(&overlap(0, 3), n).unwrap().case,
            AlignmentCase::Monotone
        );
        assert_eq!(
            classify_alignment(&overlap(9, 8), n).unwrap().case,
            AlignmentCase::Monotone
        );
        assert_eq!(
            classify_alignment(&overlap(9, 28), n).unwrap().case,
            AlignmentCase::LongR1LtR0
        );
    }

    #[test]
    fn explain_aligned_overlap_names_tile_letter() {
        // h(0) and h(2) share both ends, so 0 2 0 ... maps to an aligned overlap
        let h = m("012", &["010", "121", "010"]);
        let cex = certify_forward(&h, PatternKind::Overlap, 4)
            .unwrap()
            .counterexample
            .unwrap();
        let text = explain(&h, &cex);
        assert!(text.contains("aligned: period is 1 tile(s)"), "{text}");
        assert!(text.contains("repeated tile letter d="), "{text}");
        assert!(text.contains("preimage factor"), "{text}");
    }

    #[test]
    fn explain_misaligned_lists_border_witnesses() {
        // binary words cannot avoid squares under mu: 01 -> 0110
        let mu = catalog("thue_morse").unwrap();
        let cex = certify_forward(&mu, PatternKind::Square, 3)
            .unwrap()
            .counterexample
            .unwrap();
        assert_eq!(cex.word.to_string(), "01");
        let text = explain(&mu, &cex);
        assert!(text.contains("misaligned"), "{text}");
        assert!(text.contains("a=0 b=1 V=1 S=0 U=0"), "{text}");
        assert!(text.contains("j0=1 (tile 0, offset 1)"), "{text}");
    }

    #[test]
    fn explain_non_uniform_gives_positions_only() {
        let h = m("01", &["0", "01"]);
        let word = parse_word("00", h.source()).unwrap();
        let image = h.apply(&word).unwrap();
        let cex = Counterexample {
            direction: Direction::Forward,
            word,
            image,
            occurrence: Occurrence {
                kind: PatternKind::Square,
                start: 0,
                period: 1,
            },
        };
        let text = explain(&h, &cex);
        assert!(text.contains("positions only"), "{text}");
    }

    #[test]
    fn certified_catalog_entries_pass_both_directions() {
        for (name, len) in [("leech", 5), ("f4", 4), ("g4", 4)] {
            let h = catalog(name).unwrap();
            if check_overlap_def(&h).unwrap().pass {
                assert_eq!(
                    certify_forward(&h, PatternKind::Overlap, len)
                        .unwrap()
                        .counterexample,
                    None
                );
                assert_eq!(
                    certify_backward(&h, PatternKind::Overlap, len)
                        .unwrap()
                        .counterexample,
                    None
                );
            }
            if check_square_def(&h).unwrap().pass {
                assert_eq!(
                    certify_forward(&h, PatternKind::Square, len)
                        .unwrap()
                        .counterexample,
                    None
                );
                assert_eq!(
                    certify_backward(&h, PatternKind::Square, len)
                        .unwrap()
                        .counterexample,
                    None
                );
            }
        }
    }
}
