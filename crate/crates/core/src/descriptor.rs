//! The 20-element descriptor array: 18 category probabilities plus a
//! capitalization flag and a follows-punctuation flag. Descriptor arrays are
//! the network's only view of the text.

use crate::lexicon::{Lexicon, CATEGORY_COUNT};
use crate::tokenizer::{Token, TokenKind};

/// Length of a descriptor array.
pub const DESCRIPTOR_LEN: usize = CATEGORY_COUNT + 2;

/// Index of the capitalization flag.
pub const CAPITALIZED_FLAG: usize = CATEGORY_COUNT;

/// Index of the follows-punctuation flag.
pub const FOLLOWS_PUNCT_FLAG: usize = CATEGORY_COUNT + 1;

/// One token's descriptor: indices 0..17 hold the category distribution in
/// canonical order, index 18 the capitalization flag, index 19 the
/// follows-punctuation flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DescriptorArray {
    values: [f64; DESCRIPTOR_LEN],
}

impl DescriptorArray {
    /// Builds the descriptor for `token`, where `prev` is the immediately
    /// preceding token (absent at document start).
    pub fn build(token: &Token, prev: Option<&Token>, lexicon: &Lexicon) -> DescriptorArray {
        let mut values = [0.0; DESCRIPTOR_LEN];
        let dist = lexicon.distribution_for(token);
        values[..CATEGORY_COUNT].copy_from_slice(dist.probs());
        values[CAPITALIZED_FLAG] = if token.is_capitalized { 1.0 } else { 0.0 };
        let follows = prev.is_some_and(|p| p.kind == TokenKind::Punctuation);
        values[FOLLOWS_PUNCT_FLAG] = if follows { 1.0 } else { 0.0 };
        DescriptorArray { values }
    }

    /// The ignorance prior used to pad context windows past document edges:
    /// uniform 1/18 over the categories, both flags zero.
    pub fn neutral() -> DescriptorArray {
        let mut values = [1.0 / CATEGORY_COUNT as f64; DESCRIPTOR_LEN];
        values[CAPITALIZED_FLAG] = 0.0;
        values[FOLLOWS_PUNCT_FLAG] = 0.0;
        DescriptorArray { values }
    }

    /// All-zero array; only meaningful as the alternative padding policy.
    pub fn zeros() -> DescriptorArray {
        DescriptorArray {
            values: [0.0; DESCRIPTOR_LEN],
        }
    }

    pub fn values(&self) -> &[f64; DESCRIPTOR_LEN] {
        &self.values
    }
}

/// What to feed the network for context positions that fall outside the
/// document.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PaddingPolicy {
    #[default]
    Neutral,
    Zeros,
}

impl PaddingPolicy {
    pub fn name(self) -> &'static str {
        match self {
            PaddingPolicy::Neutral => "neutral",
            PaddingPolicy::Zeros => "zeros",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "neutral" => Some(PaddingPolicy::Neutral),
            "zeros" => Some(PaddingPolicy::Zeros),
            _ => None,
        }
    }

    pub fn pad_array(self) -> DescriptorArray {
        match self {
            PaddingPolicy::Neutral => DescriptorArray::neutral(),
            PaddingPolicy::Zeros => DescriptorArray::zeros(),
        }
    }
}

/// Builds the descriptor array for every token of a document in one pass.
pub fn document_descriptors(tokens: &[Token], lexicon: &Lexicon) -> Vec<DescriptorArray> {
    tokens
        .iter()
        .enumerate()
        .map(|(i, t)| DescriptorArray::build(t, if i > 0 { Some(&tokens[i - 1]) } else { None }, lexicon))
        .collect()
}

/// Concatenates the k/2 descriptor arrays before and after `center` into the
/// k*20 network input, left to right, excluding `center`'s own array and
/// substituting `pad` for positions past either document edge.
pub fn assemble_window(
    descriptors: &[DescriptorArray],
    center: usize,
    context_k: usize,
    pad: &DescriptorArray,
) -> Vec<f64> {
    debug_assert!(context_k.is_multiple_of(2), "context size must be even");
    let half = context_k / 2;
    let mut input = Vec::with_capacity(context_k * DESCRIPTOR_LEN);
    for offset in 0..context_k {
        // Positions center-half .. center-1, then center+1 .. center+half.
        let pos = if offset < half {
            (center + offset).checked_sub(half)
        } else {
            Some(center + offset - half + 1)
        };
        let array = match pos {
            Some(p) if p < descriptors.len() => &descriptors[p],
            _ => pad,
        };
        input.extend_from_slice(array.values());
    }
    input
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::{PosCategory, TagMap};
    use crate::tokenizer::tokenize;
    use std::collections::HashMap;

    fn lexicon() -> Lexicon {
        let mut entries = HashMap::new();
        entries.insert("JJ".to_string(), PosCategory::Modifier);
        entries.insert("NN".to_string(), PosCategory::Noun);
        entries.insert("DT".to_string(), PosCategory::Article);
        let map = TagMap::new("test", entries);
        Lexicon::parse("t", "adult JJ/2 NN/24\nthe DT/100", map).unwrap()
    }

    #[test]
    fn probabilities_and_flags() {
        let lex = lexicon();
        let toks = tokenize("the adult");
        let d = DescriptorArray::build(&toks[1], Some(&toks[0]), &lex);
        assert_eq!(d.values()[PosCategory::Modifier.index()], 2.0 / 26.0);
        assert_eq!(d.values()[PosCategory::Noun.index()], 24.0 / 26.0);
        assert_eq!(d.values()[CAPITALIZED_FLAG], 0.0);
        assert_eq!(d.values()[FOLLOWS_PUNCT_FLAG], 0.0);
    }

    #[test]
    fn document_start_has_no_follows_flag() {
        let lex = lexicon();
        let toks = tokenize("The");
        let d = DescriptorArray::build(&toks[0], None, &lex);
        assert_eq!(d.values()[CAPITALIZED_FLAG], 1.0);
        assert_eq!(d.values()[FOLLOWS_PUNCT_FLAG], 0.0);
    }

    #[test]
    fn follows_punctuation_sets_flag() {
        let lex = lexicon();
        let toks = tokenize("p.m. Saturday");
        // toks: abbreviation "p.m", ".", "Saturday"
        let d = DescriptorArray::build(&toks[2], Some(&toks[1]), &lex);
        assert_eq!(d.values()[CAPITALIZED_FLAG], 1.0);
        assert_eq!(d.values()[FOLLOWS_PUNCT_FLAG], 1.0);
    }

    #[test]
    fn follows_flag_counts_any_punctuation_kind() {
        let lex = lexicon();
        let toks = tokenize(", then");
        let d = DescriptorArray::build(&toks[1], Some(&toks[0]), &lex);
        assert_eq!(d.values()[FOLLOWS_PUNCT_FLAG], 1.0);
    }

    #[test]
    fn neutral_is_uniform_with_zero_flags() {
        let d = DescriptorArray::neutral();
        let cat_sum: f64 = d.values()[..CATEGORY_COUNT].iter().sum();
        assert!((cat_sum - 1.0).abs() < 1e-12);
        for v in &d.values()[..CATEGORY_COUNT] {
            assert_eq!(*v, 1.0 / 18.0);
        }
        assert_eq!(d.values()[CAPITALIZED_FLAG], 0.0);
        assert_eq!(d.values()[FOLLOWS_PUNCT_FLAG], 0.0);
        assert_eq!(DescriptorArray::neutral(), d);
    }

    #[test]
    fn window_excludes_center_and_pads_edges() {
        let lex = lexicon();
        let toks = tokenize("the adult . the adult");
        let descriptors = document_descriptors(&toks, &lex);
        let pad = DescriptorArray::neutral();
        let input = assemble_window(&descriptors, 2, 4, &pad);
        assert_eq!(input.len(), 4 * DESCRIPTOR_LEN);
        // Window around index 2 with k=4: tokens 0,1 then 3,4 — no padding.
        assert_eq!(&input[..DESCRIPTOR_LEN], descriptors[0].values());
        assert_eq!(
            &input[DESCRIPTOR_LEN..2 * DESCRIPTOR_LEN],
            descriptors[1].values()
        );
        assert_eq!(
            &input[2 * DESCRIPTOR_LEN..3 * DESCRIPTOR_LEN],
            descriptors[3].values()
        );
        assert_eq!(&input[3 * DESCRIPTOR_LEN..], descriptors[4].values());
    }

    #[test]
    fn window_at_document_edges_is_fully_padded() {
        let lex = lexicon();
        let toks = tokenize(".");
        let descriptors = document_descriptors(&toks, &lex);
        let pad = DescriptorArray::neutral();
        let input = assemble_window(&descriptors, 0, 6, &pad);
        assert_eq!(input.len(), 6 * DESCRIPTOR_LEN);
        for block in input.chunks(DESCRIPTOR_LEN) {
            assert_eq!(block, pad.values());
        }
    }

    #[test]
    fn padding_policy_selects_array() {
        assert_eq!(PaddingPolicy::Neutral.pad_array(), DescriptorArray::neutral());
        assert_eq!(PaddingPolicy::Zeros.pad_array(), DescriptorArray::zeros());
        assert_eq!(PaddingPolicy::from_name("neutral"), Some(PaddingPolicy::Neutral));
        assert_eq!(PaddingPolicy::from_name("zeros"), Some(PaddingPolicy::Zeros));
        assert_eq!(PaddingPolicy::from_name("x"), None);
    }
}
