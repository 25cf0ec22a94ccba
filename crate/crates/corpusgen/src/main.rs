//! Regenerates the bundled data files: a Penn-tagged demo lexicon and a
//! newswire-style gold corpus (one sentence per line). Output is a pure
//! function of the seeds below, so the checked-in files are reproducible.
//!
//! Usage: sbd-corpusgen [out-dir]   (default out-dir: data)

use std::fmt::Write as _;
use std::path::PathBuf;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sbd_core::evaluation::{baseline_always_boundary, GoldCorpus};

mod vocab;

const CORPUS_SEED: u64 = 19941013;
const DEMO_SEED: u64 = 7;
const CORPUS_LINES: usize = 4600;
const DEMO_LINES: usize = 40;

fn main() {
    let out_dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("data"));

    let lexicon_path = out_dir.join("lexicon/english.lex");
    let corpus_path = out_dir.join("corpus/newswire.txt");
    let demo_path = out_dir.join("corpus/demo.txt");
    std::fs::create_dir_all(lexicon_path.parent().unwrap()).unwrap();
    std::fs::create_dir_all(corpus_path.parent().unwrap()).unwrap();

    let lexicon = render_lexicon();
    std::fs::write(&lexicon_path, &lexicon).unwrap();
    println!("wrote {}", lexicon_path.display());

    let corpus = generate_corpus(CORPUS_SEED, CORPUS_LINES);
    std::fs::write(&corpus_path, &corpus).unwrap();
    println!("wrote {}", corpus_path.display());

    let demo = generate_corpus(DEMO_SEED, DEMO_LINES);
    std::fs::write(&demo_path, &demo).unwrap();
    println!("wrote {}", demo_path.display());

    report_stats("newswire", &corpus);
    report_stats("demo", &demo);
}

fn report_stats(name: &str, corpus_text: &str) {
    let gold = GoldCorpus::ingest(corpus_text);
    let candidates = gold.candidate_indices().len();
    let baseline = baseline_always_boundary(&gold).unwrap();
    println!(
        "{name}: {} lines, {candidates} candidates, {} boundaries, baseline {:.4}, {} lines without candidate",
        corpus_text.lines().count(),
        gold.boundary_set.len(),
        baseline,
        gold.lines_without_candidate,
    );
}

fn render_lexicon() -> String {
    let mut entries: Vec<(&str, &str)> = vocab::lexicon_tables().into_iter().flatten().copied().collect();
    entries.sort_unstable();
    let mut out = String::new();
    out.push_str("# Demo English lexicon, Penn Treebank tags plus the ABBR extension.\n");
    out.push_str("# Format: word TAG/count [TAG/count ...]\n");
    for (word, tags) in entries {
        let _ = writeln!(out, "{word} {tags}");
    }
    out
}

struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    fn new(seed: u64) -> Gen {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn pick<T: Copy>(&mut self, items: &[T]) -> T {
        items[self.rng.random_range(0..items.len())]
    }

    fn word_of<'a>(&mut self, table: &'a [(&'a str, &'a str)]) -> &'a str {
        self.pick(table).0
    }

    fn chance(&mut self, p: f64) -> bool {
        self.rng.random_range(0.0..1.0) < p
    }

    fn int(&mut self, lo: u32, hi: u32) -> String {
        self.rng.random_range(lo..=hi).to_string()
    }

    fn decimal(&mut self) -> String {
        format!(
            "{}.{}",
            self.rng.random_range(1..100),
            self.rng.random_range(0..100)
        )
    }

    // --- phrase builders -------------------------------------------------

    fn noun(&mut self) -> &'static str {
        self.pick(vocab::GEN_NOUNS_SING)
    }

    fn noun_plural(&mut self) -> &'static str {
        self.pick(vocab::GEN_NOUNS_PLUR)
    }

    fn adjective(&mut self) -> &'static str {
        self.word_of(vocab::ADJECTIVES)
    }

    fn vbd(&mut self) -> &'static str {
        self.word_of(vocab::VERBS_PAST)
    }

    fn vb(&mut self) -> &'static str {
        self.word_of(vocab::VERBS_BASE)
    }

    fn adverb(&mut self) -> &'static str {
        self.word_of(vocab::ADVERBS)
    }

    fn prep(&mut self) -> &'static str {
        self.pick(&["in", "on", "at", "by", "for", "with", "from", "after", "during"])
    }

    fn day(&mut self) -> &'static str {
        self.word_of(vocab::DAYS)
    }

    fn surname(&mut self) -> &'static str {
        if self.chance(0.5) {
            self.word_of(vocab::KNOWN_SURNAMES)
        } else {
            self.pick(vocab::UNKNOWN_SURNAMES)
        }
    }

    fn first_name(&mut self) -> &'static str {
        if self.chance(0.6) {
            self.word_of(vocab::KNOWN_FIRST_NAMES)
        } else {
            self.pick(vocab::UNKNOWN_FIRST_NAMES)
        }
    }

    fn honorific(&mut self) -> &'static str {
        self.word_of(vocab::HONORIFICS)
    }

    fn company_word(&mut self) -> &'static str {
        if self.chance(0.5) {
            self.word_of(vocab::KNOWN_COMPANY_WORDS)
        } else {
            self.pick(vocab::UNKNOWN_COMPANY_WORDS)
        }
    }

    fn place(&mut self) -> &'static str {
        if self.chance(0.6) {
            self.word_of(vocab::KNOWN_PLACES)
        } else {
            self.pick(vocab::UNKNOWN_PLACES)
        }
    }

    /// "Mr. Davis" / "Dr. Ellen Carter" / "Dr. J.M. Freeman"
    fn person(&mut self) -> String {
        let mut s = format!("{}.", self.honorific());
        if self.chance(0.15) {
            let _ = write!(s, " {}", self.pick(&["J.M.", "R.T.", "A.C.", "W.H.", "J.R.", "E.L."]));
        } else if self.chance(0.25) {
            s.push(' ');
            s.push_str(self.first_name());
        }
        s.push(' ');
        s.push_str(self.surname());
        s
    }

    /// Bare name with optional leading initial and generational suffix:
    /// "Smith", "Mary Davis", "T. Boone Pickens Jr."
    fn full_name(&mut self) -> String {
        let mut s = String::new();
        let style = self.rng.random_range(0..10);
        if style < 2 {
            let _ = write!(s, "{}. ", self.pick(&["J", "T", "R", "M", "A", "E", "W"]));
            let _ = write!(s, "{} ", self.first_name());
        } else if style < 7 {
            let _ = write!(s, "{} ", self.first_name());
        }
        s.push_str(self.surname());
        if self.chance(0.12) {
            let _ = write!(s, " {}.", self.pick(&["Jr", "Sr"]));
        }
        s
    }

    /// "Apex Data Inc." / "Global Corp."
    fn company(&mut self) -> String {
        let mut s = String::from(self.company_word());
        if self.chance(0.3) {
            s.push(' ');
            s.push_str(self.pick(&["Data", "Steel", "Motors", "Foods", "Air", "Press"]));
        }
        let _ = write!(s, " {}.", self.word_of(vocab::CORP_SUFFIXES));
        s
    }

    /// "the strong market" / "an early report" / "some new contracts",
    /// number-agreed, with an occasional possessive.
    fn noun_phrase(&mut self) -> String {
        let plural = self.chance(0.28);
        let adjective = if self.chance(0.45) {
            Some(self.adjective())
        } else {
            None
        };
        let head = if plural { self.noun_plural() } else { self.noun() };
        let first_word = adjective.unwrap_or(head);
        let det = if plural {
            self.pick(&["the", "the", "its", "some", "their"])
        } else {
            match self.pick(&["the", "the", "the", "a", "a", "its", "each", "every"]) {
                "a" if starts_with_vowel(first_word) => "an",
                d => d,
            }
        };
        let mut s = String::from(det);
        if let Some(adj) = adjective {
            let _ = write!(s, " {adj}");
        }
        let _ = write!(s, " {head}");
        if !plural && self.chance(0.12) {
            let _ = write!(s, "'s {}", self.noun());
        }
        s
    }

    /// Singular-only phrase for frames that need "was"/"has" agreement.
    fn singular_phrase(&mut self) -> String {
        let head = self.noun();
        let det = match self.pick(&["the", "the", "a", "its"]) {
            "a" if starts_with_vowel(head) => "an",
            d => d,
        };
        format!("{det} {head}")
    }

    fn prep_phrase(&mut self) -> String {
        format!("{} {}", self.prep(), self.noun_phrase())
    }

    fn capitalize(s: &str) -> String {
        let mut chars = s.chars();
        match chars.next() {
            Some(c) => c.to_uppercase().collect::<String>() + chars.as_str(),
            None => String::new(),
        }
    }

    /// Plain declarative clause, uncapitalized, no terminal punctuation.
    fn clause(&mut self) -> String {
        let mut s = self.noun_phrase();
        let _ = write!(s, " {}", self.vbd());
        match self.rng.random_range(0..4) {
            0 => {
                let _ = write!(s, " {}", self.noun_phrase());
            }
            1 => {
                let _ = write!(s, " {}", self.adverb());
            }
            2 => {
                let _ = write!(s, " {} {}", self.noun_phrase(), self.prep_phrase());
            }
            _ => {
                let _ = write!(s, " {}", self.prep_phrase());
            }
        }
        s
    }

    // --- sentence templates ----------------------------------------------

    fn plain(&mut self) -> String {
        format!("{}.", Self::capitalize(&self.clause()))
    }

    fn pronoun_start(&mut self) -> String {
        let p = self.pick(&["He", "She", "It", "They", "We"]);
        let mut s = format!("{p} {}", self.vbd());
        if self.chance(0.7) {
            let _ = write!(s, " {}", self.noun_phrase());
        }
        if self.chance(0.4) {
            let _ = write!(s, " {}", self.prep_phrase());
        }
        s.push('.');
        s
    }

    fn person_subject(&mut self) -> String {
        let mut s = self.person();
        if self.chance(0.6) {
            let _ = write!(s, " said {}", self.clause());
        } else {
            let _ = write!(s, " {} {}", self.vbd(), self.noun_phrase());
        }
        s.push('.');
        s
    }

    fn person_object(&mut self) -> String {
        format!(
            "{} {} {} {}.",
            Self::capitalize(&self.noun_phrase()),
            self.vbd(),
            self.person(),
            self.prep_phrase()
        )
    }

    fn numeric(&mut self) -> String {
        match self.rng.random_range(0..3) {
            0 => format!(
                "{} {} {}% to {}.",
                Self::capitalize(&self.noun_phrase()),
                self.pick(&["rose", "fell", "climbed", "dropped"]),
                self.decimal(),
                self.decimal()
            ),
            1 => format!(
                "{} {} ${} {} {}.",
                Self::capitalize(&self.noun_phrase()),
                self.pick(&["earned", "posted", "paid", "offered"]),
                self.int(1, 900),
                self.pick(&["million", "billion"]),
                self.prep_phrase()
            ),
            _ => format!(
                "{} {} {} {} points.",
                Self::capitalize(&self.noun_phrase()),
                self.pick(&["rose", "fell", "gained", "lost"]),
                self.pick(&["nearly", "about", "nearly", "about"]),
                self.int(2, 400)
            ),
        }
    }

    fn company_medial(&mut self) -> String {
        let mut s = self.company();
        if self.chance(0.5) {
            let _ = write!(s, " said it will {} {}", self.vb(), self.noun_phrase());
        } else {
            let _ = write!(s, " {} {}", self.vbd(), self.noun_phrase());
        }
        s.push('.');
        s
    }

    fn company_final(&mut self) -> String {
        // The sentence ends right at the corporate abbreviation, so its final
        // period is both an abbreviation period and a boundary.
        format!(
            "{} {} {} of {}",
            Self::capitalize(&self.noun_phrase()),
            self.vbd(),
            self.pick(&["a unit", "the stock", "a division", "the assets"]),
            self.company()
        )
    }

    fn quote(&mut self) -> String {
        let inner_mark = self.pick(&["!", "?", ".", "!", "?"]);
        let inner = Self::capitalize(&self.clause());
        if self.chance(0.75) {
            format!("\"{inner}{inner_mark}\" said {}.", self.person())
        } else {
            // Quote at the end: the boundary period sits before the closing
            // quotation mark.
            format!("{} said, \"{inner}.\"", Self::capitalize(&self.noun_phrase()))
        }
    }

    fn date(&mut self) -> String {
        let month = self.word_of(vocab::MONTH_ABBREVS);
        format!(
            "On {month}. {}, {} {} {}.",
            self.int(1, 28),
            self.noun_phrase(),
            self.vbd(),
            self.noun_phrase()
        )
    }

    fn time_final(&mut self) -> String {
        format!(
            "{} was due {} by {} {}",
            Self::capitalize(&self.singular_phrase()),
            self.day(),
            self.int(1, 12),
            self.pick(&["p.m.", "a.m."])
        )
    }

    fn time_medial_capitalized(&mut self) -> String {
        format!(
            "{} has an appointment at {} {} {} to get {} fixed.",
            self.pick(&["She", "He"]),
            self.int(1, 12),
            self.pick(&["p.m.", "a.m."]),
            self.day(),
            self.pick(&["her car", "his car", "the line"])
        )
    }

    fn time_medial_lowercase(&mut self) -> String {
        format!(
            "{} {} at {} {} on {}.",
            Self::capitalize(&self.noun_phrase()),
            self.pick(&["closed", "opened", "ended"]),
            self.int(1, 12),
            self.pick(&["p.m.", "a.m."]),
            self.day()
        )
    }

    fn question(&mut self) -> String {
        match self.rng.random_range(0..3) {
            0 => format!("Will {} {} {}?", self.noun_phrase(), self.vb(), self.noun_phrase()),
            1 => format!("What did {} {}?", self.noun_phrase(), self.vb()),
            _ => format!("Who {} {}?", self.vbd(), self.noun_phrase()),
        }
    }

    fn exclaim(&mut self) -> String {
        format!("{} was extraordinary!", Self::capitalize(&self.singular_phrase()))
    }

    fn us_sentence(&mut self) -> String {
        match self.rng.random_range(0..3) {
            0 => format!("The U.S. {} {} {}.", self.noun(), self.vbd(), self.noun_phrase()),
            1 => format!(
                "The U.S. {} {} {}.",
                self.pick(&["Treasury", "Senate", "Army"]),
                self.vbd(),
                self.noun_phrase()
            ),
            _ => format!(
                "{} was {} by {} in the U.S.",
                Self::capitalize(&self.singular_phrase()),
                self.pick(&["approved", "rejected", "sold", "bought"]),
                self.noun_phrase()
            ),
        }
    }

    fn parenthetical(&mut self) -> String {
        format!(
            "{} ({} this year) {} {}.",
            Self::capitalize(&self.noun_phrase()),
            self.pick(&["the third", "the second", "the first"]),
            self.vbd(),
            self.noun_phrase()
        )
    }

    fn initials(&mut self) -> String {
        let initial = self.pick(&["J", "T", "R", "M", "A", "E", "W"]);
        match self.rng.random_range(0..3) {
            0 => format!(
                "{initial}. {} {} {} {}.",
                self.surname(),
                self.vbd(),
                self.noun_phrase(),
                self.prep_phrase()
            ),
            1 => {
                let second = self.pick(&["J.M.", "R.T.", "A.C.", "W.H."]);
                format!("{second} {} joined {}.", self.surname(), self.noun_phrase())
            }
            // Coordinated full names inside the sentence.
            _ => {
                let body = format!(
                    "{} included {} and {}",
                    Self::capitalize(&self.singular_phrase()),
                    self.full_name(),
                    self.full_name()
                );
                Self::terminate(body)
            }
        }
    }

    /// Appends the sentence period unless the fragment already ends with an
    /// abbreviation period that doubles as the boundary.
    fn terminate(s: String) -> String {
        if s.ends_with('.') {
            s
        } else {
            s + "."
        }
    }

    fn name_start(&mut self) -> String {
        format!("{} {} {}.", self.surname(), self.vbd(), self.noun_phrase())
    }

    /// A sentence that begins with a day name, so boundaries right before
    /// "Saturday would ..." have training support.
    fn day_start(&mut self) -> String {
        match self.rng.random_range(0..3) {
            0 => format!(
                "{} {} be too late.",
                self.day(),
                self.pick(&["would", "will", "could"])
            ),
            1 => format!("{} was {}.", self.day(), self.adjective()),
            _ => format!("{} {} {}.", self.day(), self.vbd(), self.noun_phrase()),
        }
    }

    /// Sentence ending at a generational suffix, another abbreviation period
    /// that doubles as a boundary.
    fn suffix_final(&mut self) -> String {
        format!(
            "{} named {} {} {}",
            Self::capitalize(&self.singular_phrase()),
            self.first_name(),
            self.surname(),
            self.pick(&["Jr.", "Sr."])
        )
    }

    fn place_sentence(&mut self) -> String {
        format!(
            "In {}, {} {} {}.",
            self.place(),
            self.noun_phrase(),
            self.vbd(),
            self.noun_phrase()
        )
    }

    /// One generation step: usually a single sentence, but the time-final
    /// pattern always arrives paired with a day-initial follow-up so the
    /// "... by 5 p.m. Saturday would ..." boundary shape exists in training.
    fn sentences(&mut self) -> Vec<String> {
        // Weighted template mix; the weights set the boundary/non-boundary
        // candidate ratio and how often each hard pattern occurs.
        let roll = self.rng.random_range(0..100u32);
        let line = match roll {
            0..=25 => self.plain(),
            26..=37 => self.pronoun_start(),
            38..=46 => self.person_subject(),
            47..=49 => self.person_object(),
            50..=59 => self.numeric(),
            60..=63 => self.company_medial(),
            64..=65 => self.company_final(),
            66..=70 => self.quote(),
            71..=74 => self.date(),
            75..=76 => return vec![self.time_final(), self.day_start()],
            77..=78 => self.time_medial_capitalized(),
            79..=80 => self.time_medial_lowercase(),
            81..=85 => self.question(),
            86 => self.exclaim(),
            87..=90 => self.us_sentence(),
            91..=92 => self.parenthetical(),
            93..=94 => self.initials(),
            95 => self.name_start(),
            96 => self.place_sentence(),
            97..=98 => self.day_start(),
            _ => self.suffix_final(),
        };
        vec![line]
    }
}

fn starts_with_vowel(word: &str) -> bool {
    matches!(word.chars().next(), Some('a' | 'e' | 'i' | 'o' | 'u'))
}

fn generate_corpus(seed: u64, lines: usize) -> String {
    let mut g = Gen::new(seed);
    let mut out = String::new();
    let mut emitted = 0;
    while emitted < lines {
        for line in g.sentences() {
            if emitted == lines {
                break;
            }
            out.push_str(&line);
            out.push('\n');
            emitted += 1;
        }
    }
    out
}
