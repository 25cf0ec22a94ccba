//! Lexical analysis: splits a character stream into the token sequence the
//! rest of the pipeline consumes.
//!
//! A token is a run of alphabetic characters, a run of digits, or a single
//! non-alphanumeric character. Periods with a digit on both sides stay inside
//! a number token (`3.14`); periods with a letter on both sides stay inside an
//! abbreviation token (`Ph.D`, `J.R`). A trailing period is never part of a
//! token: `Ph.D.` tokenizes as abbreviation `Ph.D` plus a separate `.` that
//! still needs disambiguating.

/// Lexical class of a token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Word,
    Number,
    Abbreviation,
    Punctuation,
    /// Not produced by [`tokenize`]; exists for callers that construct tokens
    /// outside the normal lexer path.
    Other,
}

impl TokenKind {
    pub fn name(self) -> &'static str {
        match self {
            TokenKind::Word => "word",
            TokenKind::Number => "number",
            TokenKind::Abbreviation => "abbreviation",
            TokenKind::Punctuation => "punctuation",
            TokenKind::Other => "other",
        }
    }
}

/// One token of the source text. Offsets are 0-based code-point indices;
/// `char_end` is exclusive and `surface` equals the source slice between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub kind: TokenKind,
    pub char_start: usize,
    pub char_end: usize,
    /// True when the first character is an uppercase letter.
    pub is_capitalized: bool,
}

impl Token {
    /// True exactly for the punctuation tokens `.`, `!`, `?` — the marks whose
    /// role (sentence end or not) the network has to decide.
    pub fn is_boundary_candidate(&self) -> bool {
        self.kind == TokenKind::Punctuation && matches!(self.surface.as_str(), "." | "!" | "?")
    }
}

/// Splits `text` into tokens. Total over every input: whitespace separates
/// tokens and is dropped, everything else lands in exactly one token.
pub fn tokenize(text: &str) -> Vec<Token> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;

    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        if c.is_alphabetic() {
            i += 1;
            while i < chars.len() && chars[i].is_alphabetic() {
                i += 1;
            }
            // A period counts as internal only with a letter on both sides,
            // so a final period is left for the punctuation branch.
            let mut internal_period = false;
            while i + 1 < chars.len() && chars[i] == '.' && chars[i + 1].is_alphabetic() {
                internal_period = true;
                i += 2;
                while i < chars.len() && chars[i].is_alphabetic() {
                    i += 1;
                }
            }
            let kind = if internal_period {
                TokenKind::Abbreviation
            } else {
                TokenKind::Word
            };
            tokens.push(make_token(&chars, start, i, kind));
        } else if c.is_numeric() {
            i += 1;
            while i < chars.len() && chars[i].is_numeric() {
                i += 1;
            }
            // Same rule for decimal points: digit on both sides or it splits.
            while i + 1 < chars.len() && chars[i] == '.' && chars[i + 1].is_numeric() {
                i += 2;
                while i < chars.len() && chars[i].is_numeric() {
                    i += 1;
                }
            }
            tokens.push(make_token(&chars, start, i, TokenKind::Number));
        } else {
            i += 1;
            tokens.push(make_token(&chars, start, i, TokenKind::Punctuation));
        }
    }

    tokens
}

fn make_token(chars: &[char], start: usize, end: usize, kind: TokenKind) -> Token {
    Token {
        surface: chars[start..end].iter().collect(),
        kind,
        char_start: start,
        char_end: end,
        is_capitalized: chars[start].is_uppercase(),
    }
}
