//! The color lexicon: the word list that decides which detector attributes
//! count as colors. Ships with a default list; a config may point at a
//! replacement file (one word per line, `#` comments allowed).

use std::collections::BTreeSet;
use std::path::Path;

use crate::error::PipelineError;

/// Common color words. Attribute grouping only needs membership, so the
/// list errs on the generous side.
pub const DEFAULT_COLOR_LEXICON: &[&str] = &[
    "beige", "black", "blue", "brown", "cream", "crimson", "cyan", "golden", "gray", "green",
    "grey", "magenta", "maroon", "navy", "olive", "orange", "pink", "purple", "red", "silver",
    "tan", "teal", "turquoise", "violet", "white", "yellow",
];

pub fn default_color_lexicon() -> BTreeSet<String> {
    DEFAULT_COLOR_LEXICON.iter().map(|w| w.to_string()).collect()
}

/// Loads a lexicon file: one lowercase word per line; blank lines and
/// lines starting with `#` are skipped.
pub fn load_color_lexicon(path: &Path) -> Result<BTreeSet<String>, PipelineError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| PipelineError::io(path, e))?;
    let mut words = BTreeSet::new();
    for (number, line) in text.lines().enumerate() {
        let word = line.trim();
        if word.is_empty() || word.starts_with('#') {
            continue;
        }
        if !is_grammar_word(word) {
            return Err(PipelineError::validation(
                path,
                format!("line {}", number + 1),
                format!("color word must be a single lowercase word, got {word:?}"),
            ));
        }
        words.insert(word.to_string());
    }
    if words.is_empty() {
        return Err(PipelineError::validation(path, "file", "color lexicon is empty"));
    }
    Ok(words)
}

/// A single lowercase ASCII word, as required of color and attribute
/// tokens by the expression grammar.
pub fn is_grammar_word(word: &str) -> bool {
    !word.is_empty() && word.bytes().all(|b| b.is_ascii_lowercase())
}
