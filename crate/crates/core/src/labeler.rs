//! Sliding-window labeling: fire the network at every boundary candidate and
//! classify its score against the dual sensitivity thresholds.

use crate::descriptor::{assemble_window, document_descriptors, PaddingPolicy};
use crate::error::SbdError;
use crate::lexicon::Lexicon;
use crate::network::Network;
use crate::tokenizer::Token;

/// The dual sensitivity thresholds. Scores below `t0` are non-boundaries,
/// scores at or above `t1` are boundaries, anything between is no-opinion.
/// With `t0 == t1` every candidate gets a decided label.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    t0: f64,
    t1: f64,
}

impl Thresholds {
    pub fn new(t0: f64, t1: f64) -> Result<Thresholds, SbdError> {
        if !(0.0..=1.0).contains(&t0) || !(0.0..=1.0).contains(&t1) || t0 > t1 {
            return Err(SbdError::Contract(format!(
                "thresholds must satisfy 0 <= t0 <= t1 <= 1, got t0={t0}, t1={t1}"
            )));
        }
        Ok(Thresholds { t0, t1 })
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn t1(&self) -> f64 {
        self.t1
    }
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds { t0: 0.5, t1: 0.5 }
    }
}

/// Outcome for one candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Boundary,
    NonBoundary,
    NoOpinion,
}

impl Label {
    pub fn name(self) -> &'static str {
        match self {
            Label::Boundary => "boundary",
            Label::NonBoundary => "non_boundary",
            Label::NoOpinion => "no_opinion",
        }
    }
}

/// The labeler's verdict on one candidate punctuation token.
#[derive(Debug, Clone, PartialEq)]
pub struct Decision {
    /// Index of the candidate token in the document's token sequence.
    pub token_index: usize,
    pub score: f64,
    pub label: Label,
}

/// Classifies a score: boundary at `score >= t1`, non-boundary at
/// `score < t0`, no-opinion in between (equality at `t0` is no-opinion).
pub fn classify(score: f64, thresholds: Thresholds) -> Label {
    if score >= thresholds.t1 {
        Label::Boundary
    } else if score < thresholds.t0 {
        Label::NonBoundary
    } else {
        Label::NoOpinion
    }
}

/// Scores every boundary candidate in `tokens` with the network and emits a
/// [`Decision`] per candidate in document order. Context windows take the
/// k/2 tokens on each side of the candidate (not the candidate itself),
/// padding past document edges per `padding`.
pub fn label_document(
    tokens: &[Token],
    lexicon: &Lexicon,
    net: &Network,
    thresholds: Thresholds,
    padding: PaddingPolicy,
) -> Result<Vec<Decision>, SbdError> {
    let descriptors = document_descriptors(tokens, lexicon);
    let pad = padding.pad_array();
    let k = net.config().context_k;
    let mut decisions = Vec::new();
    for (index, token) in tokens.iter().enumerate() {
        if !token.is_boundary_candidate() {
            continue;
        }
        let input = assemble_window(&descriptors, index, k, &pad);
        let score = net.forward(&input)?;
        decisions.push(Decision {
            token_index: index,
            score,
            label: classify(score, thresholds),
        });
    }
    Ok(decisions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::{PosCategory, TagMap};
    use crate::network::{Network, NetworkConfig};
    use crate::tokenizer::tokenize;
    use proptest::prelude::*;
    use std::collections::HashMap;

    fn lexicon() -> Lexicon {
        let mut entries = HashMap::new();
        entries.insert("NN".to_string(), PosCategory::Noun);
        entries.insert("DT".to_string(), PosCategory::Article);
        let map = TagMap::new("test", entries);
        Lexicon::parse("t", "the DT/10\ndog NN/5", map).unwrap()
    }

    fn tiny_net(k: usize, seed: u64) -> Network {
        Network::init(NetworkConfig {
            context_k: k,
            hidden_j: 2,
            seed,
            ..NetworkConfig::default()
        })
        .unwrap()
    }

    #[test]
    fn thresholds_validate() {
        assert!(Thresholds::new(0.2, 0.8).is_ok());
        assert!(Thresholds::new(0.5, 0.5).is_ok());
        assert!(Thresholds::new(0.8, 0.2).is_err());
        assert!(Thresholds::new(-0.1, 0.5).is_err());
        assert!(Thresholds::new(0.5, 1.1).is_err());
    }

    #[test]
    fn classify_band_semantics() {
        let wide = Thresholds::new(0.2, 0.8).unwrap();
        assert_eq!(classify(0.9, wide), Label::Boundary);
        assert_eq!(classify(0.5, wide), Label::NoOpinion);
        assert_eq!(classify(0.1, wide), Label::NonBoundary);
        // Equality: >= t1 wins at the top, t0 itself is still no-opinion.
        assert_eq!(classify(0.8, wide), Label::Boundary);
        assert_eq!(classify(0.2, wide), Label::NoOpinion);
    }

    #[test]
    fn collapsed_thresholds_decide_everything() {
        let collapsed = Thresholds::new(0.5, 0.5).unwrap();
        assert_eq!(classify(0.9, collapsed), Label::Boundary);
        assert_eq!(classify(0.5, collapsed), Label::Boundary);
        assert_eq!(classify(0.499, collapsed), Label::NonBoundary);
    }

    #[test]
    fn decisions_cover_exactly_the_candidates() {
        let lex = lexicon();
        let net = tiny_net(4, 3);
        let toks = tokenize("the dog ran. the dog sat! really? yes, ok");
        let decisions =
            label_document(&toks, &lex, &net, Thresholds::default(), PaddingPolicy::Neutral)
                .unwrap();
        let candidate_indices: Vec<usize> = toks
            .iter()
            .enumerate()
            .filter(|(_, t)| t.is_boundary_candidate())
            .map(|(i, _)| i)
            .collect();
        assert_eq!(
            decisions.iter().map(|d| d.token_index).collect::<Vec<_>>(),
            candidate_indices
        );
    }

    #[test]
    fn no_candidates_means_no_decisions() {
        let lex = lexicon();
        let net = tiny_net(4, 3);
        let toks = tokenize("no punctuation here");
        let decisions =
            label_document(&toks, &lex, &net, Thresholds::default(), PaddingPolicy::Neutral)
                .unwrap();
        assert!(decisions.is_empty());
    }

    #[test]
    fn single_period_document_uses_full_padding() {
        let lex = lexicon();
        let net = tiny_net(6, 8);
        let toks = tokenize(".");
        let decisions =
            label_document(&toks, &lex, &net, Thresholds::default(), PaddingPolicy::Neutral)
                .unwrap();
        assert_eq!(decisions.len(), 1);
        assert!(decisions[0].score > 0.0 && decisions[0].score < 1.0);
    }

    #[test]
    fn scores_are_threshold_independent() {
        let lex = lexicon();
        let net = tiny_net(4, 5);
        let toks = tokenize("the dog. the dog! what?");
        let narrow =
            label_document(&toks, &lex, &net, Thresholds::new(0.5, 0.5).unwrap(), PaddingPolicy::Neutral)
                .unwrap();
        let wide =
            label_document(&toks, &lex, &net, Thresholds::new(0.2, 0.8).unwrap(), PaddingPolicy::Neutral)
                .unwrap();
        assert_eq!(narrow.len(), wide.len());
        for (a, b) in narrow.iter().zip(&wide) {
            assert_eq!(a.score.to_bits(), b.score.to_bits());
        }
    }

    proptest! {
        /// Widening the band can move decided items to no-opinion but can
        /// never flip boundary <-> non-boundary.
        #[test]
        fn widening_never_flips_decided_labels(
            score in 0.0001f64..0.9999,
            t0 in 0.0f64..0.5,
            t1 in 0.5f64..1.0,
        ) {
            let collapsed = Thresholds::new(0.5, 0.5).unwrap();
            let wide = Thresholds::new(t0, t1).unwrap();
            let base = classify(score, collapsed);
            let widened = classify(score, wide);
            if widened != Label::NoOpinion {
                prop_assert_eq!(base, widened);
            }
        }

        /// The decision invariant: label matches the score's band.
        #[test]
        fn label_matches_band(score in 0.0001f64..0.9999, a in 0.0f64..1.0, b in 0.0f64..1.0) {
            let (t0, t1) = if a <= b { (a, b) } else { (b, a) };
            let th = Thresholds::new(t0, t1).unwrap();
            let label = classify(score, th);
            match label {
                Label::Boundary => prop_assert!(score >= t1),
                Label::NonBoundary => prop_assert!(score < t0),
                Label::NoOpinion => prop_assert!(score >= t0 && score < t1),
            }
        }
    }
}
