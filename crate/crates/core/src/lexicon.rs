//! Word → part-of-speech frequency storage, raw-tag collapsing, and the
//! probability heuristics for unknown and capitalized words.
//!
//! The lexicon never assigns a single definite part-of-speech. Every token
//! gets a full probability distribution over the 18 collapsed categories, so
//! boundary labeling can run before any tagging has happened.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::path::Path;

use crate::error::SbdError;
use crate::tokenizer::{Token, TokenKind};

/// Number of collapsed part-of-speech categories.
pub const CATEGORY_COUNT: usize = 18;

/// The 18 collapsed categories. The declaration order is canonical: it fixes
/// the index layout of every serialized distribution and descriptor array.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PosCategory {
    Noun,
    Verb,
    Article,
    Modifier,
    Conjunction,
    Pronoun,
    Preposition,
    ProperNoun,
    Number,
    CommaOrSemicolon,
    LeftParen,
    RightParen,
    NonPunctChar,
    Possessive,
    ColonOrDash,
    Abbreviation,
    SentenceEndPunct,
    Others,
}

impl PosCategory {
    pub const ALL: [PosCategory; CATEGORY_COUNT] = [
        PosCategory::Noun,
        PosCategory::Verb,
        PosCategory::Article,
        PosCategory::Modifier,
        PosCategory::Conjunction,
        PosCategory::Pronoun,
        PosCategory::Preposition,
        PosCategory::ProperNoun,
        PosCategory::Number,
        PosCategory::CommaOrSemicolon,
        PosCategory::LeftParen,
        PosCategory::RightParen,
        PosCategory::NonPunctChar,
        PosCategory::Possessive,
        PosCategory::ColonOrDash,
        PosCategory::Abbreviation,
        PosCategory::SentenceEndPunct,
        PosCategory::Others,
    ];

    /// Position in the canonical ordering.
    pub fn index(self) -> usize {
        self as usize
    }

    /// Canonical name, as used in tag-map files.
    pub fn name(self) -> &'static str {
        match self {
            PosCategory::Noun => "noun",
            PosCategory::Verb => "verb",
            PosCategory::Article => "article",
            PosCategory::Modifier => "modifier",
            PosCategory::Conjunction => "conjunction",
            PosCategory::Pronoun => "pronoun",
            PosCategory::Preposition => "preposition",
            PosCategory::ProperNoun => "proper_noun",
            PosCategory::Number => "number",
            PosCategory::CommaOrSemicolon => "comma_or_semicolon",
            PosCategory::LeftParen => "left_paren",
            PosCategory::RightParen => "right_paren",
            PosCategory::NonPunctChar => "non_punct_char",
            PosCategory::Possessive => "possessive",
            PosCategory::ColonOrDash => "colon_or_dash",
            PosCategory::Abbreviation => "abbreviation",
            PosCategory::SentenceEndPunct => "sentence_end_punct",
            PosCategory::Others => "others",
        }
    }

    pub fn from_name(name: &str) -> Option<PosCategory> {
        PosCategory::ALL.iter().copied().find(|c| c.name() == name)
    }
}

/// A probability distribution over the 18 categories. Always sums to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CategoryDistribution {
    probs: [f64; CATEGORY_COUNT],
}

impl CategoryDistribution {
    fn zero() -> Self {
        CategoryDistribution {
            probs: [0.0; CATEGORY_COUNT],
        }
    }

    /// All mass on a single category.
    pub fn one_hot(cat: PosCategory) -> Self {
        let mut d = Self::zero();
        d.probs[cat.index()] = 1.0;
        d
    }

    /// Uniform 1/18 on every category.
    pub fn uniform() -> Self {
        CategoryDistribution {
            probs: [1.0 / CATEGORY_COUNT as f64; CATEGORY_COUNT],
        }
    }

    pub fn probs(&self) -> &[f64; CATEGORY_COUNT] {
        &self.probs
    }

    pub fn get(&self, cat: PosCategory) -> f64 {
        self.probs[cat.index()]
    }

    pub fn sum(&self) -> f64 {
        self.probs.iter().sum()
    }
}

/// Maps a raw tagset (Penn Treebank, Brown, ...) onto the 18 categories.
/// Total over its declared tagset: a tag either maps or is a parse error.
#[derive(Debug, Clone)]
pub struct TagMap {
    name: String,
    entries: HashMap<String, PosCategory>,
}

impl TagMap {
    pub fn new(name: &str, entries: HashMap<String, PosCategory>) -> Self {
        TagMap {
            name: name.to_string(),
            entries,
        }
    }

    /// Parses `RAWTAG categoryname` lines. `#` starts a comment line.
    pub fn parse(name: &str, source: &str) -> Result<TagMap, SbdError> {
        let mut entries = HashMap::new();
        for (idx, line) in source.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let (tag, cat_name) = match (parts.next(), parts.next(), parts.next()) {
                (Some(t), Some(c), None) => (t, c),
                _ => {
                    return Err(SbdError::Parse {
                        line: idx + 1,
                        message: format!("expected `RAWTAG categoryname`, got {line:?}"),
                    })
                }
            };
            let cat = PosCategory::from_name(cat_name).ok_or_else(|| SbdError::Parse {
                line: idx + 1,
                message: format!("unknown category name {cat_name:?}"),
            })?;
            if entries.insert(tag.to_string(), cat).is_some() {
                return Err(SbdError::Parse {
                    line: idx + 1,
                    message: format!("duplicate raw tag {tag:?}"),
                });
            }
        }
        Ok(TagMap::new(name, entries))
    }

    pub fn from_path(path: &Path) -> Result<TagMap, SbdError> {
        let source = std::fs::read_to_string(path)?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "tagmap".to_string());
        TagMap::parse(&name, &source)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn raw_tag_count(&self) -> usize {
        self.entries.len()
    }

    pub fn category_for(&self, raw_tag: &str) -> Option<PosCategory> {
        self.entries.get(raw_tag).copied()
    }

    /// Stable content fingerprint, independent of entry insertion order.
    /// Written into model files so a model cannot be applied through a tag
    /// map with a different category assignment.
    pub fn fingerprint(&self) -> String {
        let mut pairs: Vec<(&str, &'static str)> = self
            .entries
            .iter()
            .map(|(t, c)| (t.as_str(), c.name()))
            .collect();
        pairs.sort_unstable();
        let mut h = Fnv1a::new();
        for (tag, cat) in pairs {
            h.update(tag.as_bytes());
            h.update(b"/");
            h.update(cat.as_bytes());
            h.update(b"\n");
        }
        format!("{:016x}", h.finish())
    }
}

/// Distribution assigned to a lowercase word the lexicon has never seen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UnknownWordPolicy {
    /// Uniform over the open classes noun / verb / modifier / others.
    #[default]
    OpenClassUniform,
    /// Uniform over all 18 categories.
    UniformAll,
}

impl UnknownWordPolicy {
    pub fn name(self) -> &'static str {
        match self {
            UnknownWordPolicy::OpenClassUniform => "open_class_uniform",
            UnknownWordPolicy::UniformAll => "uniform_all",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "open_class_uniform" => Some(UnknownWordPolicy::OpenClassUniform),
            "uniform_all" => Some(UnknownWordPolicy::UniformAll),
            _ => None,
        }
    }

    fn distribution(self) -> CategoryDistribution {
        match self {
            UnknownWordPolicy::OpenClassUniform => {
                let mut d = CategoryDistribution::zero();
                for cat in [
                    PosCategory::Noun,
                    PosCategory::Verb,
                    PosCategory::Modifier,
                    PosCategory::Others,
                ] {
                    d.probs[cat.index()] = 0.25;
                }
                d
            }
            UnknownWordPolicy::UniformAll => CategoryDistribution::uniform(),
        }
    }
}

#[derive(Debug, Clone)]
struct LexEntry {
    raw: BTreeMap<String, u64>,
    categories: [u64; CATEGORY_COUNT],
    total: u64,
}

/// Case-sensitive word → frequency table over a raw tagset, collapsed through
/// a [`TagMap`]. Immutable after loading.
#[derive(Debug, Clone)]
pub struct Lexicon {
    name: String,
    entries: HashMap<String, LexEntry>,
    tag_map: TagMap,
    unknown_policy: UnknownWordPolicy,
}

impl Lexicon {
    /// Parses `word TAG/count [TAG/count ...]` lines. `#` starts a comment
    /// line; blank lines are skipped; duplicate word lines merge by summing.
    pub fn parse(name: &str, source: &str, tag_map: TagMap) -> Result<Lexicon, SbdError> {
        let mut entries: HashMap<String, LexEntry> = HashMap::new();
        for (idx, line) in source.lines().enumerate() {
            let line_no = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut parts = trimmed.split_whitespace();
            let word = parts.next().expect("non-empty line has a first field");
            let mut any = false;
            let entry = entries.entry(word.to_string()).or_insert_with(|| LexEntry {
                raw: BTreeMap::new(),
                categories: [0; CATEGORY_COUNT],
                total: 0,
            });
            for field in parts {
                any = true;
                let (tag, count_str) = field.split_once('/').ok_or_else(|| SbdError::Parse {
                    line: line_no,
                    message: format!("expected TAG/count, got {field:?}"),
                })?;
                let count: u64 = count_str.parse().map_err(|_| SbdError::Parse {
                    line: line_no,
                    message: format!("non-integer count {count_str:?}"),
                })?;
                if count == 0 {
                    return Err(SbdError::Parse {
                        line: line_no,
                        message: format!("count for tag {tag:?} must be positive"),
                    });
                }
                let cat = tag_map.category_for(tag).ok_or_else(|| SbdError::Parse {
                    line: line_no,
                    message: format!("unknown raw tag {tag:?} for tag map {:?}", tag_map.name()),
                })?;
                *entry.raw.entry(tag.to_string()).or_insert(0) += count;
                entry.categories[cat.index()] += count;
                entry.total += count;
            }
            if !any {
                return Err(SbdError::Parse {
                    line: line_no,
                    message: format!("word {word:?} has no TAG/count fields"),
                });
            }
        }
        Ok(Lexicon {
            name: name.to_string(),
            entries,
            tag_map,
            unknown_policy: UnknownWordPolicy::default(),
        })
    }

    pub fn from_path(path: &Path, tag_map: TagMap) -> Result<Lexicon, SbdError> {
        let source = std::fs::read_to_string(path)?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "lexicon".to_string());
        Lexicon::parse(&name, &source, tag_map)
    }

    pub fn with_unknown_policy(mut self, policy: UnknownWordPolicy) -> Lexicon {
        self.unknown_policy = policy;
        self
    }

    pub fn unknown_policy(&self) -> UnknownWordPolicy {
        self.unknown_policy
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn tag_map(&self) -> &TagMap {
        &self.tag_map
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.contains_key(word)
    }

    /// Summed raw counts across all entries.
    pub fn total_count(&self) -> u64 {
        self.entries.values().map(|e| e.total).sum()
    }

    /// Identity string for model/lexicon compatibility checks: name, entry
    /// count, total count, and a content fingerprint.
    pub fn identity(&self) -> String {
        let mut words: Vec<&String> = self.entries.keys().collect();
        words.sort_unstable();
        let mut h = Fnv1a::new();
        for word in words {
            h.update(word.as_bytes());
            for (tag, count) in &self.entries[word].raw {
                h.update(b" ");
                h.update(tag.as_bytes());
                h.update(b"/");
                h.update(count.to_string().as_bytes());
            }
            h.update(b"\n");
        }
        format!(
            "{}:{}:{}:{:016x}",
            self.name,
            self.entries.len(),
            self.total_count(),
            h.finish()
        )
    }

    /// Raw category frequency of a word (0 when absent).
    pub fn category_frequency(&self, word: &str, cat: PosCategory) -> u64 {
        self.entries
            .get(word)
            .map(|e| e.categories[cat.index()])
            .unwrap_or(0)
    }

    /// The key under which a word token resolves: the surface if present,
    /// else the lowercased surface if that is present, else absent.
    pub fn case_lookup_key<'a>(&'a self, token: &Token) -> Option<&'a str> {
        if let Some((key, _)) = self.entries.get_key_value(token.surface.as_str()) {
            return Some(key.as_str());
        }
        let lower = token.surface.to_lowercase();
        self.entries.get_key_value(lower.as_str()).map(|(k, _)| k.as_str())
    }

    /// Assigns a category distribution to any token. Total function: numbers,
    /// abbreviations, and punctuation get their dedicated category; known
    /// words get their frequency distribution; capitalized words get the
    /// proper-noun heuristics; unknown lowercase words follow the configured
    /// policy.
    pub fn distribution_for(&self, token: &Token) -> CategoryDistribution {
        match token.kind {
            TokenKind::Number => CategoryDistribution::one_hot(PosCategory::Number),
            TokenKind::Abbreviation => CategoryDistribution::one_hot(PosCategory::Abbreviation),
            TokenKind::Punctuation => {
                CategoryDistribution::one_hot(punctuation_category(&token.surface))
            }
            TokenKind::Other => CategoryDistribution::one_hot(PosCategory::Others),
            TokenKind::Word => self.word_distribution(token),
        }
    }

    fn word_distribution(&self, token: &Token) -> CategoryDistribution {
        match (self.case_lookup_key(token), token.is_capitalized) {
            (Some(key), false) => self.entry_distribution(key),
            (Some(key), true) => {
                let entry = &self.entries[key];
                if entry.categories[PosCategory::ProperNoun.index()] > 0 {
                    self.entry_distribution(key)
                } else {
                    // Capitalized, known, but never seen as a proper noun:
                    // half the mass goes to proper noun, the other half keeps
                    // the lexicon's proportions.
                    let base = self.entry_distribution(key);
                    let mut d = CategoryDistribution::zero();
                    for cat in PosCategory::ALL {
                        d.probs[cat.index()] = 0.5 * base.probs[cat.index()];
                    }
                    d.probs[PosCategory::ProperNoun.index()] = 0.5;
                    d
                }
            }
            (None, true) => {
                // Capitalized and unknown: very likely a proper noun.
                let mut d = CategoryDistribution::zero();
                let rest = 0.1 / (CATEGORY_COUNT - 1) as f64;
                for cat in PosCategory::ALL {
                    d.probs[cat.index()] = rest;
                }
                d.probs[PosCategory::ProperNoun.index()] = 0.9;
                d
            }
            (None, false) => self.unknown_policy.distribution(),
        }
    }

    fn entry_distribution(&self, key: &str) -> CategoryDistribution {
        let entry = &self.entries[key];
        let total = entry.total as f64;
        let mut d = CategoryDistribution::zero();
        for (i, &count) in entry.categories.iter().enumerate() {
            d.probs[i] = count as f64 / total;
        }
        d
    }

    /// Serializes back to the line format accepted by [`Lexicon::parse`],
    /// sorted by word, preserving all raw counts exactly.
    pub fn serialize(&self) -> String {
        let mut words: Vec<&String> = self.entries.keys().collect();
        words.sort_unstable();
        let mut out = String::new();
        for word in words {
            out.push_str(word);
            for (tag, count) in &self.entries[word].raw {
                let _ = write!(out, " {tag}/{count}");
            }
            out.push('\n');
        }
        out
    }
}

/// Category of a single-character punctuation token.
pub fn punctuation_category(surface: &str) -> PosCategory {
    match surface.chars().next() {
        Some(',') | Some(';') => PosCategory::CommaOrSemicolon,
        Some('(') | Some('[') | Some('{') => PosCategory::LeftParen,
        Some(')') | Some(']') | Some('}') => PosCategory::RightParen,
        Some(':') | Some('-') | Some('\u{2013}') | Some('\u{2014}') => PosCategory::ColonOrDash,
        Some('.') | Some('!') | Some('?') => PosCategory::SentenceEndPunct,
        Some('\'') | Some('\u{2019}') => PosCategory::Possessive,
        _ => PosCategory::NonPunctChar,
    }
}

struct Fnv1a(u64);

impl Fnv1a {
    fn new() -> Self {
        Fnv1a(0xcbf29ce484222325)
    }

    fn update(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(0x100000001b3);
        }
    }

    fn finish(&self) -> u64 {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tokenizer::tokenize;
    use proptest::prelude::*;

    fn penn_like_map() -> TagMap {
        let mut entries = HashMap::new();
        for (tag, cat) in [
            ("JJ", PosCategory::Modifier),
            ("NN", PosCategory::Noun),
            ("NNS", PosCategory::Noun),
            ("NNP", PosCategory::ProperNoun),
            ("VB", PosCategory::Verb),
            ("VBD", PosCategory::Verb),
            ("DT", PosCategory::Article),
            ("IN", PosCategory::Preposition),
            ("PRP", PosCategory::Pronoun),
            ("CC", PosCategory::Conjunction),
            ("CD", PosCategory::Number),
            ("ABBR", PosCategory::Abbreviation),
        ] {
            entries.insert(tag.to_string(), cat);
        }
        TagMap::new("test", entries)
    }

    fn word_token(surface: &str) -> Token {
        let toks = tokenize(surface);
        assert_eq!(toks.len(), 1, "{surface:?} should be a single token");
        toks.into_iter().next().unwrap()
    }

    #[test]
    fn category_order_is_stable() {
        assert_eq!(PosCategory::ALL.len(), CATEGORY_COUNT);
        assert_eq!(PosCategory::Noun.index(), 0);
        assert_eq!(PosCategory::ProperNoun.index(), 7);
        assert_eq!(PosCategory::Others.index(), 17);
        for (i, cat) in PosCategory::ALL.iter().enumerate() {
            assert_eq!(cat.index(), i);
            assert_eq!(PosCategory::from_name(cat.name()), Some(*cat));
        }
    }

    #[test]
    fn adult_frequencies() {
        let lex = Lexicon::parse("t", "adult JJ/2 NN/24", penn_like_map()).unwrap();
        let d = lex.distribution_for(&word_token("adult"));
        assert_eq!(d.get(PosCategory::Modifier), 2.0 / 26.0);
        assert_eq!(d.get(PosCategory::Noun), 24.0 / 26.0);
        let other_mass: f64 = PosCategory::ALL
            .iter()
            .filter(|c| !matches!(c, PosCategory::Modifier | PosCategory::Noun))
            .map(|c| d.get(*c))
            .sum();
        assert_eq!(other_mass, 0.0);
    }

    #[test]
    fn brown_style_tag_names_work_through_a_custom_map() {
        let mut entries = HashMap::new();
        entries.insert("AT".to_string(), PosCategory::Article);
        let map = TagMap::new("brown", entries);
        let lex = Lexicon::parse("t", "the AT/69016", map).unwrap();
        assert_eq!(lex.category_frequency("the", PosCategory::Article), 69016);
        let d = lex.distribution_for(&word_token("the"));
        assert_eq!(d.get(PosCategory::Article), 1.0);
    }

    #[test]
    fn duplicate_word_lines_merge() {
        let lex = Lexicon::parse("t", "the DT/100\nthe DT/50 NN/1", penn_like_map()).unwrap();
        assert_eq!(lex.category_frequency("the", PosCategory::Article), 150);
        assert_eq!(lex.category_frequency("the", PosCategory::Noun), 1);
    }

    #[test]
    fn empty_source_is_valid_empty_lexicon() {
        let lex = Lexicon::parse("t", "", penn_like_map()).unwrap();
        assert!(lex.is_empty());
    }

    #[test]
    fn parse_errors_name_the_line() {
        let cases = [
            ("a JJ/2\nb NN-24", 2),    // missing slash
            ("a JJ/x", 1),             // non-integer count
            ("ok NN/3\n\nbad ZZ/1", 3), // unknown raw tag
            ("zero NN/0", 1),          // zero count
        ];
        for (src, want_line) in cases {
            match Lexicon::parse("t", src, penn_like_map()) {
                Err(SbdError::Parse { line, .. }) => assert_eq!(line, want_line, "src={src:?}"),
                other => panic!("expected parse error for {src:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn comment_lines_are_ignored_for_numbering() {
        let src = "# header\nadult JJ/2 NN/24\n# trailing";
        let lex = Lexicon::parse("t", src, penn_like_map()).unwrap();
        assert_eq!(lex.len(), 1);
    }

    #[test]
    fn case_lookup_prefers_exact_then_lowercase() {
        let lex = Lexicon::parse("t", "the DT/10\nSmith NNP/5", penn_like_map()).unwrap();
        assert_eq!(lex.case_lookup_key(&word_token("the")), Some("the"));
        assert_eq!(lex.case_lookup_key(&word_token("The")), Some("the"));
        assert_eq!(lex.case_lookup_key(&word_token("Smith")), Some("Smith"));
        assert_eq!(lex.case_lookup_key(&word_token("Xqzw")), None);
    }

    #[test]
    fn unknown_capitalized_gets_090_proper_noun() {
        let lex = Lexicon::parse("t", "", penn_like_map()).unwrap();
        let d = lex.distribution_for(&word_token("Xqzw"));
        assert_eq!(d.get(PosCategory::ProperNoun), 0.9);
        for cat in PosCategory::ALL {
            if cat != PosCategory::ProperNoun {
                assert_eq!(d.get(cat), 0.1 / 17.0);
            }
        }
    }

    #[test]
    fn capitalized_known_without_proper_mass_splits_half() {
        // "American" known only as a modifier: 0.5 proper noun, 0.5 modifier.
        let lex = Lexicon::parse("t", "American JJ/7", penn_like_map()).unwrap();
        let d = lex.distribution_for(&word_token("American"));
        assert_eq!(d.get(PosCategory::ProperNoun), 0.5);
        assert_eq!(d.get(PosCategory::Modifier), 0.5);
    }

    #[test]
    fn capitalized_known_with_proper_mass_keeps_plain_distribution() {
        let lex = Lexicon::parse("t", "Friday NNP/90 NN/10", penn_like_map()).unwrap();
        let d = lex.distribution_for(&word_token("Friday"));
        assert_eq!(d.get(PosCategory::ProperNoun), 0.9);
        assert_eq!(d.get(PosCategory::Noun), 0.1);
    }

    #[test]
    fn half_split_preserves_lexicon_ratios() {
        let lex = Lexicon::parse("t", "Run VB/30 NN/10", penn_like_map()).unwrap();
        let d = lex.distribution_for(&word_token("Run"));
        let verb = d.get(PosCategory::Verb);
        let noun = d.get(PosCategory::Noun);
        assert!((verb / noun - 3.0).abs() < 1e-12);
        assert_eq!(d.get(PosCategory::ProperNoun), 0.5);
    }

    #[test]
    fn unknown_lowercase_follows_policy() {
        let lex = Lexicon::parse("t", "", penn_like_map()).unwrap();
        let d = lex.distribution_for(&word_token("zzyzx"));
        assert_eq!(d.get(PosCategory::Noun), 0.25);
        assert_eq!(d.get(PosCategory::Verb), 0.25);
        assert_eq!(d.get(PosCategory::Modifier), 0.25);
        assert_eq!(d.get(PosCategory::Others), 0.25);

        let lex = lex.with_unknown_policy(UnknownWordPolicy::UniformAll);
        let d = lex.distribution_for(&word_token("zzyzx"));
        for cat in PosCategory::ALL {
            assert_eq!(d.get(cat), 1.0 / 18.0);
        }
    }

    #[test]
    fn non_word_kinds_get_their_category() {
        let lex = Lexicon::parse("t", "", penn_like_map()).unwrap();
        let toks = tokenize("3.14 U.S. , ( ) : ' \" .");
        let expected = [
            (0, PosCategory::Number),
            (1, PosCategory::Abbreviation),
            (2, PosCategory::SentenceEndPunct), // "." after U.S
            (3, PosCategory::CommaOrSemicolon),
            (4, PosCategory::LeftParen),
            (5, PosCategory::RightParen),
            (6, PosCategory::ColonOrDash),
            (7, PosCategory::Possessive),
            (8, PosCategory::NonPunctChar),
            (9, PosCategory::SentenceEndPunct),
        ];
        for (i, cat) in expected {
            let d = lex.distribution_for(&toks[i]);
            assert_eq!(d.get(cat), 1.0, "token {i} {:?}", toks[i].surface);
        }
    }

    #[test]
    fn serialization_round_trips_counts() {
        let src = "adult JJ/2 NN/24\nthe DT/69016\nSmith NNP/5\n";
        let lex = Lexicon::parse("t", src, penn_like_map()).unwrap();
        let out = lex.serialize();
        let lex2 = Lexicon::parse("t", &out, penn_like_map()).unwrap();
        assert_eq!(lex2.serialize(), out);
        assert_eq!(lex.identity(), lex2.identity());
        assert_eq!(lex2.category_frequency("the", PosCategory::Article), 69016);
    }

    #[test]
    fn tagmap_fingerprint_is_order_independent() {
        let mut a = HashMap::new();
        a.insert("NN".to_string(), PosCategory::Noun);
        a.insert("VB".to_string(), PosCategory::Verb);
        let mut b = HashMap::new();
        b.insert("VB".to_string(), PosCategory::Verb);
        b.insert("NN".to_string(), PosCategory::Noun);
        assert_eq!(
            TagMap::new("x", a).fingerprint(),
            TagMap::new("y", b).fingerprint()
        );
    }

    #[test]
    fn tagmap_parse_rejects_bad_lines() {
        assert!(matches!(
            TagMap::parse("t", "NN"),
            Err(SbdError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            TagMap::parse("t", "NN nonsense_category"),
            Err(SbdError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            TagMap::parse("t", "NN noun\nNN verb"),
            Err(SbdError::Parse { line: 2, .. })
        ));
    }

    proptest! {
        /// Every distribution case sums to 1 within 1e-9, whatever the token.
        #[test]
        fn distributions_always_sum_to_one(
            surface in "[a-zA-Z][a-z]{0,8}",
            in_lexicon in proptest::bool::ANY,
            counts in proptest::collection::vec(1u64..500, 1..4),
        ) {
            let tags = ["JJ", "NN", "VB", "NNP"];
            let mut src = String::new();
            if in_lexicon {
                src.push_str(&surface.to_lowercase());
                for (i, c) in counts.iter().enumerate() {
                    src.push_str(&format!(" {}/{}", tags[i % tags.len()], c));
                }
            }
            let lex = Lexicon::parse("t", &src, penn_like_map()).unwrap();
            for text in [surface.clone(), surface.to_uppercase(), surface.to_lowercase()] {
                let d = lex.distribution_for(&word_token(&text));
                prop_assert!((d.sum() - 1.0).abs() < 1e-9, "sum={} for {text:?}", d.sum());
            }
            for text in ["3.14", "U.S.", ",", "(", "@"] {
                let tok = &tokenize(text)[0];
                let d = lex.distribution_for(tok);
                prop_assert!((d.sum() - 1.0).abs() < 1e-9);
            }
        }
    }
}
