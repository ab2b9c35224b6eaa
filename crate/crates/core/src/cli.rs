//! The `morphcheck` command line.
//!
//! Exit codes: 0 when the check passes (or nothing was found), 1 when a
//! witness or counterexample was found, 2 on usage, parse or precondition
//! errors.
//!
//! Morphism files look like
//!
//! ```text
//! # Thue-Morse
//! alphabet: 01
//! target: 01        # optional, defaults to the alphabet
//! 0 -> 01
//! 1 -> 10
//! ```
//!
//! `#` starts a comment, blank lines are ignored, whitespace around tokens
//! (and inside images) is dropped. Letters are single characters and the
//! order on the `alphabet:` line is the enumeration order.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::certify::{certify_backward, certify_forward, explain, Certification, Counterexample};
use crate::error::{Error, Result};
use crate::morphism::{CatalogName, Morphism};
use crate::unstackable::{check_definition, Definition, Verdict, Witness};
use crate::words::{find_pattern, parse_word, Alphabet, Occurrence, PatternKind, Word};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FOUND: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

/// Parses the textual morphism format.
pub fn parse_morphism_file(text: &str) -> Result<Morphism> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let err = |line: usize, message: String| Error::Parse { line, message };

    let mut source: Option<Arc<Alphabet>> = None;
    let mut target: Option<Arc<Alphabet>> = None;
    let mut rules: Vec<Option<(usize, Word)>> = Vec::new();
    let mut seen_rule = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("alphabet:") {
            if source.is_some() {
                return Err(err(line_no, "duplicate alphabet header".into()));
            }
            let letters: String = rest.chars().filter(|c| !c.is_whitespace()).collect();
            let alphabet = Alphabet::new(&letters).map_err(|e| err(line_no, e.to_string()))?;
            rules = vec![None; alphabet.len()];
            source = Some(Arc::new(alphabet));
            continue;
        }
        if let Some(rest) = line.strip_prefix("target:") {
            if source.is_none() || seen_rule {
                return Err(err(
                    line_no,
                    "target header must follow the alphabet header and precede rules".into(),
                ));
            }
            if target.is_some() {
                return Err(err(line_no, "duplicate target header".into()));
            }
            let letters: String = rest.chars().filter(|c| !c.is_whitespace()).collect();
            target = Some(Arc::new(
                Alphabet::new(&letters).map_err(|e| err(line_no, e.to_string()))?,
            ));
            continue;
        }
        let Some(src) = source.clone() else {
            return Err(err(
                line_no,
                "expected `alphabet: <letters>` header first".into(),
            ));
        };
        let tgt = target.get_or_insert_with(|| src.clone()).clone();
        seen_rule = true;
        let Some((lhs, rhs)) = line.split_once("->") else {
            return Err(err(line_no, "expected `<letter> -> <image>`".into()));
        };
        let lhs = lhs.trim();
        let mut chars = lhs.chars();
        let (Some(letter), None) = (chars.next(), chars.next()) else {
            return Err(err(
                line_no,
                format!("rule head {lhs:?} must be a single letter"),
            ));
        };
        let Some(index) = src.index_of(letter) else {
            return Err(err(
                line_no,
                format!("letter {letter:?} is not in the alphabet"),
            ));
        };
        let slot = &mut rules[usize::from(index)];
        if let Some((first, _)) = slot {
            return Err(err(
                line_no,
                format!("second rule for {letter:?} (first on line {first})"),
            ));
        }
        let image: String = rhs.chars().filter(|c| !c.is_whitespace()).collect();
        if image.is_empty() {
            return Err(err(
                line_no,
                format!("image of {letter:?} is empty; morphisms must be non-erasing"),
            ));
        }
        let image = parse_word(&image, &tgt).map_err(|e| err(line_no, e.to_string()))?;
        *slot = Some((line_no, image));
    }

    let source = source.ok_or_else(|| err(0, "missing `alphabet:` header".into()))?;
    let target = target.unwrap_or_else(|| source.clone());
    let mut images = Vec::with_capacity(rules.len());
    for (letter, rule) in source.letters().iter().zip(rules) {
        match rule {
            Some((_, image)) => images.push(image),
            None => return Err(err(0, format!("no rule for letter {letter:?}"))),
        }
    }
    Morphism::new(source, target, images)
}

/// Renders `m` in the morphism file format; parses back to the same morphism.
pub fn render_morphism(m: &Morphism, name: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(name) = name {
        out += &format!("# {name}\n");
    }
    out += &format!("alphabet: {}\n", m.source());
    if m.target() != m.source() {
        out += &format!("target: {}\n", m.target());
    }
    for (letter, image) in m.source().letters().iter().zip(m.images()) {
        out += &format!("{letter} -> {image}\n");
    }
    out
}

/// Reads a morphism file, falling back to a catalog name when no such file
/// exists.
pub fn load_morphism(arg: &str) -> Result<Morphism, String> {
    let path = Path::new(arg);
    if path.exists() {
        let text = fs::read_to_string(path).map_err(|e| format!("{arg}: {e}"))?;
        return parse_morphism_file(&text).map_err(|e| format!("{arg}: {e}"));
    }
    match arg.parse::<CatalogName>() {
        Ok(name) => Ok(name.morphism()),
        Err(_) => Err(format!("{arg}: no such file or catalog morphism")),
    }
}

#[derive(Debug, Serialize, PartialEq, Eq)]
pub struct JsonReport {
    pub command: String,
    pub verdict: String,
    pub witness: Option<JsonWitness>,
    pub stats: JsonStats,
}

#[derive(Debug, Serialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum JsonWitness {
    Image {
        word: String,
        image: String,
        occurrence: JsonOccurrence,
    },
    Border {
        a: String,
        b: String,
        #[serde(rename = "V")]
        v: String,
        #[serde(rename = "S")]
        s: String,
        #[serde(rename = "U")]
        u: String,
    },
}

#[derive(Debug, Serialize, PartialEq, Eq)]
pub struct JsonOccurrence {
    pub kind: String,
    pub start: usize,
    pub period: usize,
}

impl From<&Occurrence> for JsonOccurrence {
    fn from(o: &Occurrence) -> Self {
        Self {
            kind: o.kind.to_string(),
            start: o.start,
            period: o.period,
        }
    }
}

#[derive(Debug, Serialize, PartialEq, Eq)]
pub struct JsonStats {
    pub words_checked: usize,
    pub max_len: usize,
    pub elapsed_ms: u128,
}

#[derive(Debug, Parser)]
#[command(name = "morphcheck", version)]
#[command(about = "Check words and uniform morphisms for squares, overlaps and cubes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PatternArg {
    Overlap,
    Square,
    Cube,
}

impl From<PatternArg> for PatternKind {
    fn from(p: PatternArg) -> Self {
        match p {
            PatternArg::Overlap => PatternKind::Overlap,
            PatternArg::Square => PatternKind::Square,
            PatternArg::Cube => PatternKind::Cube,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MorphismPattern {
    Overlap,
    Square,
}

impl From<MorphismPattern> for PatternKind {
    fn from(p: MorphismPattern) -> Self {
        match p {
            MorphismPattern::Overlap => PatternKind::Overlap,
            MorphismPattern::Square => PatternKind::Square,
        }
    }
}

impl From<MorphismPattern> for Definition {
    fn from(p: MorphismPattern) -> Self {
        match p {
            MorphismPattern::Overlap => Definition::OverlapDef1,
            MorphismPattern::Square => Definition::SquareDef4,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DirectionArg {
    Forward,
    Backward,
    Both,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Look for a square, overlap or cube in a word
    CheckWord {
        word: String,
        #[arg(long, value_enum, default_value = "overlap")]
        pattern: PatternArg,
        /// Alphabet letters in order; defaults to the letters of WORD
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Check the unstackable image word conditions of a uniform morphism
    ///
    /// The border condition is checked for every nonempty V with
    /// |V| <= floor(n/2) that is a suffix of h(a) and a prefix of h(b)
    /// (a = b allowed): writing h(a) = SV and h(b) = VU, S must not be a
    /// suffix and U must not be a prefix of any image. The empty V is not
    /// considered.
    CheckMorphism {
        /// Morphism file, or a catalog name (thue_morse, leech, f4, g4)
        file: String,
        #[arg(long = "def", value_enum, default_value = "overlap")]
        definition: MorphismPattern,
        #[arg(long)]
        json: bool,
    },
    /// Search all words up to a length for a counterexample to pattern-freeness
    Certify {
        /// Morphism file, or a catalog name
        file: String,
        #[arg(long, value_enum, default_value = "overlap")]
        pattern: MorphismPattern,
        #[arg(long = "max-len", default_value_t = 6)]
        max_len: usize,
        #[arg(long, value_enum, default_value = "both")]
        direction: DirectionArg,
        #[arg(long)]
        json: bool,
    },
    /// Print the image of a word
    Apply { file: String, word: String },
    /// Print a prefix of the fixed point starting from a letter
    Iterate {
        file: String,
        #[arg(long)]
        seed: char,
        #[arg(long)]
        length: usize,
    },
    /// List or print the built-in morphisms
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
}

/// Runs the command line with explicit output streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_ERROR
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_ERROR
        }
    }
}

type CmdResult = std::result::Result<u8, String>;

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::CheckWord {
            word,
            pattern,
            alphabet,
        } => cmd_check_word(&word, pattern.into(), alphabet.as_deref(), out),
        Command::CheckMorphism {
            file,
            definition,
            json,
        } => cmd_check_morphism(&file, definition.into(), json, out),
        Command::Certify {
            file,
            pattern,
            max_len,
            direction,
            json,
        } => cmd_certify(&file, pattern.into(), max_len, direction, json, out),
        Command::Apply { file, word } => {
            let m = load_morphism(&file)?;
            let w = parse_word(&word, m.source()).map_err(|e| e.to_string())?;
            let image = m.apply(&w).map_err(|e| e.to_string())?;
            emit(out, format_args!("{image}\n"))?;
            Ok(EXIT_PASS)
        }
        Command::Iterate { file, seed, length } => {
            let m = load_morphism(&file)?;
            let seed = m
                .source()
                .index_of(seed)
                .ok_or_else(|| format!("seed {seed:?} is not in the alphabet"))?;
            let prefix = m.iterate_prefix(seed, length).map_err(|e| e.to_string())?;
            emit(out, format_args!("{prefix}\n"))?;
            Ok(EXIT_PASS)
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for name in CatalogName::ALL {
                    emit(out, format_args!("{name}\n"))?;
                }
                Ok(EXIT_PASS)
            }
            CatalogAction::Show { name } => {
                let name: CatalogName = name.parse().map_err(|e: Error| e.to_string())?;
                emit(
                    out,
                    format_args!("{}", render_morphism(&name.morphism(), Some(name.as_str()))),
                )?;
                Ok(EXIT_PASS)
            }
        },
    }
}

fn emit(out: &mut dyn Write, args: std::fmt::Arguments<'_>) -> std::result::Result<(), String> {
    out.write_fmt(args).map_err(|e| e.to_string())
}

fn cmd_check_word(
    text: &str,
    kind: PatternKind,
    alphabet: Option<&str>,
    out: &mut dyn Write,
) -> CmdResult {
    let alphabet = match alphabet {
        Some(letters) => Alphabet::new(letters),
        None => {
            let mut letters: Vec<char> = Vec::new();
            for c in text.chars() {
                if !letters.contains(&c) {
                    letters.push(c);
                }
            }
            if letters.is_empty() {
                letters.push('0');
            }
            Alphabet::from_chars(letters)
        }
    }
    .map_err(|e| e.to_string())?;
    let word = parse_word(text, &Arc::new(alphabet)).map_err(|e| e.to_string())?;
    match find_pattern(&word, kind) {
        None => {
            emit(out, format_args!("pattern-free\n"))?;
            Ok(EXIT_PASS)
        }
        Some(occ) => {
            let factor = word.factor(occ.start, occ.span());
            emit(
                out,
                format_args!(
                    "{kind} at start {} period {}: {factor}\n",
                    occ.start, occ.period
                ),
            )?;
            Ok(EXIT_FOUND)
        }
    }
}

fn json_witness(m: &Morphism, verdict: &Verdict) -> Option<JsonWitness> {
    let src = |l: u8| m.source().letter(l).to_string();
    verdict
        .reports
        .iter()
        .flat_map(|r| r.witnesses.iter())
        .find_map(|w| match w {
            Witness::Image {
                word,
                image,
                occurrence,
            } => Some(JsonWitness::Image {
                word: word.to_string(),
                image: image.to_string(),
                occurrence: occurrence.into(),
            }),
            Witness::Border { a, b, v, s, u, .. } => Some(JsonWitness::Border {
                a: src(*a),
                b: src(*b),
                v: v.to_string(),
                s: s.to_string(),
                u: u.to_string(),
            }),
            Witness::SharedEnd { .. } => None,
        })
}

fn cmd_check_morphism(
    file: &str,
    definition: Definition,
    json: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let started = Instant::now();
    let m = load_morphism(file)?;
    let verdict = check_definition(&m, definition).map_err(|e| e.to_string())?;
    let code = if verdict.pass { EXIT_PASS } else { EXIT_FOUND };
    if json {
        let report = JsonReport {
            command: "check-morphism".into(),
            verdict: if verdict.pass { "pass" } else { "fail" }.into(),
            witness: json_witness(&m, &verdict),
            stats: JsonStats {
                words_checked: verdict.words_checked(&m),
                max_len: 3,
                elapsed_ms: started.elapsed().as_millis(),
            },
        };
        write_json(out, &report)?;
        return Ok(code);
    }
    let (label, n) = match definition {
        Definition::OverlapDef1 => ("overlap-free (def1)", m.uniformity()),
        Definition::SquareDef4 => ("square-free (def4)", m.uniformity()),
    };
    emit(
        out,
        format_args!("definition: {label}, n = {}\n", n.unwrap_or_default()),
    )?;
    for warning in &verdict.warnings {
        emit(out, format_args!("warning: {warning}\n"))?;
    }
    for report in &verdict.reports {
        emit(
            out,
            format_args!(
                "{} {}: {}\n",
                report.condition,
                if report.holds { "holds" } else { "fails" },
                report.condition.description()
            ),
        )?;
        for w in &report.witnesses {
            emit(out, format_args!("  {}\n", w.describe(&m)))?;
        }
    }
    emit(
        out,
        format_args!("verdict: {}\n", if verdict.pass { "pass" } else { "fail" }),
    )?;
    Ok(code)
}

fn cmd_certify(
    file: &str,
    kind: PatternKind,
    max_len: usize,
    direction: DirectionArg,
    json: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let started = Instant::now();
    let m = load_morphism(file)?;
    // validate both bounds before running anything
    let min = match direction {
        DirectionArg::Forward => 1,
        DirectionArg::Backward | DirectionArg::Both => kind.min_span(),
    };
    if max_len < min {
        return Err(Error::MaxLenTooSmall { min, got: max_len }.to_string());
    }
    let mut runs: Vec<(&str, Certification)> = Vec::new();
    if matches!(direction, DirectionArg::Forward | DirectionArg::Both) {
        runs.push((
            "forward",
            certify_forward(&m, kind, max_len).map_err(|e| e.to_string())?,
        ));
    }
    let forward_found = runs.iter().any(|(_, r)| r.counterexample.is_some());
    if matches!(direction, DirectionArg::Backward | DirectionArg::Both) && !forward_found {
        runs.push((
            "backward",
            certify_backward(&m, kind, max_len).map_err(|e| e.to_string())?,
        ));
    }
    let found: Option<&Counterexample> = runs.iter().find_map(|(_, r)| r.counterexample.as_ref());
    let code = if found.is_some() {
        EXIT_FOUND
    } else {
        EXIT_PASS
    };

    if json {
        let report = JsonReport {
            command: "certify".into(),
            verdict: if found.is_some() { "found" } else { "none" }.into(),
            witness: found.map(|c| JsonWitness::Image {
                word: c.word.to_string(),
                image: c.image.to_string(),
                occurrence: (&c.occurrence).into(),
            }),
            stats: JsonStats {
                words_checked: runs.iter().map(|(_, r)| r.stats.words_checked()).sum(),
                max_len,
                elapsed_ms: started.elapsed().as_millis(),
            },
        };
        write_json(out, &report)?;
        return Ok(code);
    }

    for (name, run) in &runs {
        match &run.counterexample {
            None => emit(
                out,
                format_args!("{name}: no {kind} counterexample up to length {max_len}\n"),
            )?,
            Some(c) => emit(
                out,
                format_args!(
                    "{name}: counterexample W={} h(W)={} {} at start {} period {}\n",
                    c.word, c.image, c.occurrence.kind, c.occurrence.start, c.occurrence.period
                ),
            )?,
        }
        for (i, count) in run.stats.per_length.iter().enumerate() {
            emit(out, format_args!("  length {}: {count} words\n", i + 1))?;
        }
    }
    if let Some(c) = found {
        for line in explain(&m, c).lines() {
            emit(out, format_args!("  {line}\n"))?;
        }
    }
    emit(
        out,
        format_args!(
            "verdict: {}\n",
            if found.is_some() { "found" } else { "none" }
        ),
    )?;
    Ok(code)
}

fn write_json(out: &mut dyn Write, report: &JsonReport) -> std::result::Result<(), String> {
    let text = serde_json::to_string(report).map_err(|e| e.to_string())?;
    emit(out, format_args!("{text}\n"))
}
