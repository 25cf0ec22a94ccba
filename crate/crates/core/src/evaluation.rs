//! Gold-corpus ingestion, dataset construction, the error metrics, and the
//! context-size / hidden-units experiment grid.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::descriptor::{assemble_window, document_descriptors, PaddingPolicy};
use crate::error::SbdError;
use crate::labeler::{classify, Decision, Label, Thresholds};
use crate::lexicon::Lexicon;
use crate::network::{Network, NetworkConfig, Sample};
use crate::tokenizer::{tokenize, Token};

/// A text with known sentence boundaries, expressed as the set of token
/// indices of the true boundary punctuation marks.
#[derive(Debug, Clone)]
pub struct GoldCorpus {
    pub text: String,
    pub boundary_set: BTreeSet<usize>,
    /// Lines that ended without any candidate punctuation and so contributed
    /// no gold boundary.
    pub lines_without_candidate: usize,
}

impl GoldCorpus {
    /// Builds a corpus from one-sentence-per-line text: lines are joined with
    /// single spaces and the last boundary candidate of each line becomes a
    /// gold boundary.
    pub fn ingest(source: &str) -> GoldCorpus {
        let lines: Vec<&str> = source.lines().filter(|l| !l.trim().is_empty()).collect();
        let mut text = String::new();
        let mut line_ranges = Vec::with_capacity(lines.len());
        for (i, line) in lines.iter().enumerate() {
            if i > 0 {
                text.push(' ');
            }
            let start = text.chars().count();
            text.push_str(line);
            let end = text.chars().count();
            line_ranges.push((start, end));
        }

        let tokens = tokenize(&text);
        let mut boundary_set = BTreeSet::new();
        let mut lines_without_candidate = 0;
        let mut token_cursor = 0usize;
        for &(start, end) in &line_ranges {
            let mut last_candidate = None;
            while token_cursor < tokens.len() && tokens[token_cursor].char_start < end {
                let t = &tokens[token_cursor];
                if t.char_start >= start && t.is_boundary_candidate() {
                    last_candidate = Some(token_cursor);
                }
                token_cursor += 1;
            }
            match last_candidate {
                Some(idx) => {
                    boundary_set.insert(idx);
                }
                None => lines_without_candidate += 1,
            }
        }

        GoldCorpus {
            text,
            boundary_set,
            lines_without_candidate,
        }
    }

    pub fn tokens(&self) -> Vec<Token> {
        tokenize(&self.text)
    }

    /// Token indices of all boundary candidates, in document order.
    pub fn candidate_indices(&self) -> Vec<usize> {
        self.tokens()
            .iter()
            .enumerate()
            .filter(|(_, t)| t.is_boundary_candidate())
            .map(|(i, _)| i)
            .collect()
    }

    /// Same text, different boundary truth — used by case-transform runs,
    /// where folding changes no token positions.
    pub fn with_text(&self, text: String) -> GoldCorpus {
        GoldCorpus {
            text,
            boundary_set: self.boundary_set.clone(),
            lines_without_candidate: self.lines_without_candidate,
        }
    }
}

/// One misclassified candidate, with a token-window snippet for inspection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorContext {
    pub token_index: usize,
    pub snippet: String,
    pub is_false_positive: bool,
}

/// The counts of Table-1-style evaluation: every candidate is exactly one of
/// correct, false positive, false negative, or no-opinion.
#[derive(Debug, Clone)]
pub struct EvalReport {
    pub total_candidates: usize,
    pub false_positives: usize,
    pub false_negatives: usize,
    pub no_opinion: usize,
    pub correct: usize,
    /// (false_positives + false_negatives) / decided items; `None` when every
    /// item was no-opinion.
    pub error_rate: Option<f64>,
    pub per_error_contexts: Vec<ErrorContext>,
}

impl EvalReport {
    pub fn accuracy(&self) -> f64 {
        self.correct as f64 / self.total_candidates as f64
    }
}

/// One Sample per boundary candidate: the labeler's context window plus the
/// gold truth as target.
pub fn build_samples(
    gold: &GoldCorpus,
    lexicon: &Lexicon,
    context_k: usize,
    padding: PaddingPolicy,
) -> Result<Vec<Sample>, SbdError> {
    if context_k == 0 || !context_k.is_multiple_of(2) {
        return Err(SbdError::Contract(format!(
            "context size must be a positive even integer, got {context_k}"
        )));
    }
    let tokens = gold.tokens();
    let descriptors = document_descriptors(&tokens, lexicon);
    let pad = padding.pad_array();
    let mut samples = Vec::new();
    for (index, token) in tokens.iter().enumerate() {
        if !token.is_boundary_candidate() {
            continue;
        }
        samples.push(Sample {
            input: assemble_window(&descriptors, index, context_k, &pad),
            target: if gold.boundary_set.contains(&index) {
                1.0
            } else {
                0.0
            },
        });
    }
    Ok(samples)
}

/// Scores a decision list against the gold truth. The decisions must cover
/// exactly the gold corpus's candidates, in order. `snippet_window` is the
/// number of tokens recorded on each side of an error.
pub fn evaluate(
    decisions: &[Decision],
    gold: &GoldCorpus,
    snippet_window: usize,
) -> Result<EvalReport, SbdError> {
    let tokens = gold.tokens();
    let candidates = gold.candidate_indices();
    if decisions.len() != candidates.len() {
        let index = candidates
            .get(decisions.len())
            .or_else(|| decisions.get(candidates.len()).map(|d| &d.token_index))
            .copied()
            .unwrap_or(0);
        return Err(SbdError::CandidateMismatch {
            index,
            message: format!(
                "{} decisions for {} candidates",
                decisions.len(),
                candidates.len()
            ),
        });
    }
    for (d, &c) in decisions.iter().zip(&candidates) {
        if d.token_index != c {
            return Err(SbdError::CandidateMismatch {
                index: c,
                message: format!("decision points at token {}, candidate is {}", d.token_index, c),
            });
        }
    }

    let mut report = EvalReport {
        total_candidates: decisions.len(),
        false_positives: 0,
        false_negatives: 0,
        no_opinion: 0,
        correct: 0,
        error_rate: None,
        per_error_contexts: Vec::new(),
    };
    for d in decisions {
        let truth = gold.boundary_set.contains(&d.token_index);
        match (d.label, truth) {
            (Label::NoOpinion, _) => report.no_opinion += 1,
            (Label::Boundary, true) | (Label::NonBoundary, false) => report.correct += 1,
            (Label::Boundary, false) => {
                report.false_positives += 1;
                report.per_error_contexts.push(ErrorContext {
                    token_index: d.token_index,
                    snippet: snippet_around(&tokens, d.token_index, snippet_window),
                    is_false_positive: true,
                });
            }
            (Label::NonBoundary, true) => {
                report.false_negatives += 1;
                report.per_error_contexts.push(ErrorContext {
                    token_index: d.token_index,
                    snippet: snippet_around(&tokens, d.token_index, snippet_window),
                    is_false_positive: false,
                });
            }
        }
    }
    let decided = report.total_candidates - report.no_opinion;
    if decided > 0 {
        report.error_rate =
            Some((report.false_positives + report.false_negatives) as f64 / decided as f64);
    }
    Ok(report)
}

fn snippet_around(tokens: &[Token], center: usize, window: usize) -> String {
    let lo = center.saturating_sub(window);
    let hi = (center + window + 1).min(tokens.len());
    let mut out = String::new();
    for (i, t) in tokens[lo..hi].iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        if lo + i == center {
            let _ = write!(out, "[{}]", t.surface);
        } else {
            out.push_str(&t.surface);
        }
    }
    out
}

/// Case-folding mode for the single-case experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseMode {
    Lower,
    Upper,
}

impl CaseMode {
    pub fn name(self) -> &'static str {
        match self {
            CaseMode::Lower => "lower",
            CaseMode::Upper => "upper",
        }
    }

    pub fn from_name(name: &str) -> Option<CaseMode> {
        match name {
            "lower" => Some(CaseMode::Lower),
            "upper" => Some(CaseMode::Upper),
            _ => None,
        }
    }
}

/// Folds the whole text to a single case.
pub fn case_transform(text: &str, mode: CaseMode) -> String {
    match mode {
        CaseMode::Lower => text.to_lowercase(),
        CaseMode::Upper => text.to_uppercase(),
    }
}

/// Accuracy of the strawman that labels every candidate a boundary.
pub fn baseline_always_boundary(gold: &GoldCorpus) -> Result<f64, SbdError> {
    let total = gold.candidate_indices().len();
    if total == 0 {
        return Err(SbdError::Contract(
            "baseline requires at least one candidate".into(),
        ));
    }
    Ok(gold.boundary_set.len() as f64 / total as f64)
}

/// Disjoint train/cross/test partition over candidate ordinals (positions in
/// the candidate sequence, not token indices).
#[derive(Debug, Clone)]
pub struct Split {
    pub train: Vec<usize>,
    pub cross: Vec<usize>,
    pub test: Vec<usize>,
}

impl Split {
    /// Seeded shuffle of `0..total` into train/cross/test of the given sizes,
    /// with the remainder as test.
    pub fn seeded(
        total: usize,
        train_size: usize,
        cross_size: usize,
        seed: u64,
    ) -> Result<Split, SbdError> {
        if train_size + cross_size > total {
            return Err(SbdError::Contract(format!(
                "split sizes {train_size}+{cross_size} exceed {total} candidates"
            )));
        }
        let mut order: Vec<usize> = (0..total).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // Fisher-Yates; rand's shuffle would also do, but this keeps the
        // draw sequence explicit and stable.
        for i in (1..order.len()).rev() {
            let j = (rand::Rng::random_range(&mut rng, 0..=i as u64)) as usize;
            order.swap(i, j);
        }
        let train = order[..train_size].to_vec();
        let cross = order[train_size..train_size + cross_size].to_vec();
        let test = order[train_size + cross_size..].to_vec();
        Ok(Split { train, cross, test })
    }

    pub fn validate_disjoint(&self, total: usize) -> Result<(), SbdError> {
        let mut seen = vec![false; total];
        for part in [&self.train, &self.cross, &self.test] {
            for &i in part {
                if i >= total {
                    return Err(SbdError::Contract(format!(
                        "split index {i} out of range for {total} candidates"
                    )));
                }
                if seen[i] {
                    return Err(SbdError::Contract(format!(
                        "split parts overlap at candidate {i}"
                    )));
                }
                seen[i] = true;
            }
        }
        Ok(())
    }

    pub fn select(&self, samples: &[Sample], part: &[usize]) -> Vec<Sample> {
        part.iter().map(|&i| samples[i].clone()).collect()
    }
}

/// One grid cell result, in the shape of the experiment tables.
#[derive(Debug, Clone, PartialEq)]
pub struct GridRow {
    pub context_k: usize,
    pub hidden_j: usize,
    pub epochs: usize,
    pub train_error: f64,
    pub cross_error: f64,
    pub test_errors: usize,
    pub test_error_pct: f64,
}

/// Trains one network per (k, j) combination on the same split and scores it
/// on the held-out test part with collapsed thresholds. Each cell derives its
/// seed from the base config's seed plus the cell index, so the whole grid is
/// deterministic.
pub fn run_grid(
    gold: &GoldCorpus,
    lexicon: &Lexicon,
    split: &Split,
    k_values: &[usize],
    j_values: &[usize],
    base: &NetworkConfig,
    padding: PaddingPolicy,
) -> Result<Vec<GridRow>, SbdError> {
    let total = gold.candidate_indices().len();
    split.validate_disjoint(total)?;
    let mut rows = Vec::new();
    let mut cell = 0u64;
    for &k in k_values {
        let samples = build_samples(gold, lexicon, k, padding)?;
        if samples.len() != total {
            return Err(SbdError::Contract(format!(
                "sample count {} does not match candidate count {total}",
                samples.len()
            )));
        }
        let train = split.select(&samples, &split.train);
        let cross = split.select(&samples, &split.cross);
        let test = split.select(&samples, &split.test);
        for &j in j_values {
            let config = NetworkConfig {
                context_k: k,
                hidden_j: j,
                seed: base.seed.wrapping_add(cell),
                ..base.clone()
            };
            let net = Network::init(config)?;
            let (trained, history) = net.train(&train, &cross)?;
            let mut test_errors = 0usize;
            for s in &test {
                let score = trained.forward(&s.input)?;
                let predicted = classify(score, Thresholds::default());
                let truth = if s.target > 0.5 {
                    Label::Boundary
                } else {
                    Label::NonBoundary
                };
                if predicted != truth {
                    test_errors += 1;
                }
            }
            rows.push(GridRow {
                context_k: k,
                hidden_j: j,
                epochs: history.epochs_run,
                train_error: history.train_error_per_epoch[history.best_epoch],
                cross_error: history.cross_error_per_epoch[history.best_epoch],
                test_errors,
                test_error_pct: if test.is_empty() {
                    0.0
                } else {
                    100.0 * test_errors as f64 / test.len() as f64
                },
            });
            cell += 1;
        }
    }
    Ok(rows)
}

/// Which quantity the first column of a grid table names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridAxis {
    Context,
    Hidden,
}

/// Renders grid rows as a tab-separated table in the layout of the
/// experiment tables: the varied quantity, then epochs, train error, cross
/// error, test errors, and test error percentage.
pub fn format_grid_table(rows: &[GridRow], axis: GridAxis) -> String {
    let mut out = String::new();
    let head = match axis {
        GridAxis::Context => "Context Size",
        GridAxis::Hidden => "# Hidden Units",
    };
    let _ = writeln!(
        out,
        "{head}\tTraining Epochs\tTraining Error\tCross Error\tTesting Errors\tTesting Error (%)"
    );
    for r in rows {
        let first = match axis {
            GridAxis::Context => format!("{}-context", r.context_k),
            GridAxis::Hidden => format!("{}", r.hidden_j),
        };
        let _ = writeln!(
            out,
            "{first}\t{}\t{:.3}\t{:.3}\t{}\t{:.2}%",
            r.epochs, r.train_error, r.cross_error, r.test_errors, r.test_error_pct
        );
    }
    out
}
