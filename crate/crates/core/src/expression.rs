//! A small closed grammar for referring expressions:
//!
//! ```text
//! EXPR     := ARTICLE SIZE? COLORS? ATTR? NOUN LOCATION?
//! ARTICLE  := "a" | "an" | "the"
//! SIZE     := "bigger" | "smaller" | "biggest" | "smallest"
//! COLORS   := COLOR ("and" COLOR)?
//! ```
//!
//! `render` and `parse_expression` are inverses: parsing a rendered tree
//! returns the tree unchanged.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::cue::{ColorCue, CueKind, CueSet, LocationPhrase, SizeForm};

/// Determiner opening an expression. Composition picks "the" whenever a
/// size form is present and the indefinite article otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Article {
    A,
    An,
    The,
}

impl Article {
    pub fn as_str(&self) -> &'static str {
        match self {
            Article::A => "a",
            Article::An => "an",
            Article::The => "the",
        }
    }

    pub fn from_word(word: &str) -> Option<Article> {
        match word {
            "a" => Some(Article::A),
            "an" => Some(Article::An),
            "the" => Some(Article::The),
        _ => None,
        }
    }

    /// "an" before a word starting with a vowel letter, "a" otherwise.
    pub fn indefinite_for(word: &str) -> Article {
        match word.as_bytes().first() {
            Some(b'a' | b'e' | b'i' | b'o' | b'u') => Article::An,
            _ => Article::A,
        }
    }
}

/// Structured form of a referring expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpressionAst {
    pub article: Article,
    pub size: Option<SizeForm>,
    pub color: Option<ColorCue>,
    pub attribute: Option<String>,
    pub noun: String,
    pub location: Option<LocationPhrase>,
}

impl ExpressionAst {
    /// Cue categories the expression draws on, in canonical order. The
    /// class cue is always present.
    pub fn cue_kinds(&self) -> Vec<CueKind> {
        let mut kinds = Vec::with_capacity(5);
        kinds.push(CueKind::Class);
        if self.size.is_some() {
            kinds.push(CueKind::Size);
        }
        if self.location.is_some() {
            kinds.push(CueKind::Location);
        }
        if self.color.is_some() {
            kinds.push(CueKind::Color);
        }
        if self.attribute.is_some() {
            kinds.push(CueKind::Attribute);
        }
        kinds
    }
}

/// Which optional cues to include when composing an expression. The class
/// noun is always included.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CueSelection {
    pub size: bool,
    pub location: bool,
    pub color: bool,
    pub attribute: bool,
}

impl CueSelection {
    pub const CLASS_ONLY: CueSelection =
        CueSelection { size: false, location: false, color: false, attribute: false };
}

/// Builds an expression from the selected cues, or `None` when a selected
/// cue is not available in `cues`.
pub fn compose(cues: &CueSet, selection: CueSelection) -> Option<ExpressionAst> {
    let size = if selection.size { Some(cues.size?) } else { None };
    let location = if selection.location { Some(cues.location?) } else { None };
    let color = if selection.color { Some(cues.color.clone()?) } else { None };
    let attribute = if selection.attribute { Some(cues.attribute.clone()?) } else { None };
    let article = if size.is_some() {
        Article::The
    } else {
        let first_word = color
            .as_ref()
            .map(|c| c.first.as_str())
            .or(attribute.as_deref())
            .unwrap_or(cues.category.as_str());
        Article::indefinite_for(first_word)
    };
    Some(ExpressionAst { article, size, color, attribute, noun: cues.category.clone(), location })
}

/// Renders an expression tree to its surface form.
pub fn render(ast: &ExpressionAst) -> String {
    let mut out = String::new();
    out.push_str(ast.article.as_str());
    if let Some(size) = ast.size {
        out.push(' ');
        out.push_str(size.as_str());
    }
    if let Some(color) = &ast.color {
        out.push(' ');
        out.push_str(&color.first);
        if let Some(second) = &color.second {
            out.push_str(" and ");
            out.push_str(second);
        }
    }
    if let Some(attribute) = &ast.attribute {
        out.push(' ');
        out.push_str(attribute);
    }
    out.push(' ');
    out.push_str(&ast.noun);
    if let Some(location) = ast.location {
        out.push(' ');
        out.push_str(location.as_str());
    }
    out
}

/// Failure to parse an expression, pointing at the offending word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub word_index: usize,
    pub message: String,
}

impl ParseError {
    fn new(word_index: usize, message: &str) -> Self {
        Self { word_index, message: message.to_string() }
    }
}

impl core::fmt::Display for ParseError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "word {}: {}", self.word_index + 1, self.message)
    }
}

impl core::error::Error for ParseError {}

/// Parses a surface expression back into a tree.
///
/// `categories` is the set of known class nouns (possibly multi-word) and
/// `colors` the set of known color words. Parsing is resolved in a fixed
/// order: article, optional size word, location phrase stripped from the
/// end (longest phrase first, always leaving at least one word), then the
/// longest suffix naming a known category becomes the noun, and whatever
/// sits in between must be a color group followed by at most one
/// attribute word. Article agreement is not enforced.
pub fn parse_expression(
    text: &str,
    categories: &BTreeSet<String>,
    colors: &BTreeSet<String>,
) -> Result<ExpressionAst, ParseError> {
    let words: Vec<&str> = text.split_whitespace().collect();
    if words.is_empty() {
        return Err(ParseError::new(0, "empty expression"));
    }
    let article = Article::from_word(words[0])
        .ok_or_else(|| ParseError::new(0, "expected an article: a, an or the"))?;

    let mut i = 1;
    let size = words.get(i).copied().and_then(SizeForm::from_word);
    if size.is_some() {
        i += 1;
    }

    let mut end = words.len();
    let mut location = None;
    for phrase in LocationPhrase::ALL {
        let phrase_words = phrase.words();
        if end - i > phrase_words.len() && words[end - phrase_words.len()..end] == *phrase_words {
            location = Some(phrase);
            end -= phrase_words.len();
            break;
        }
    }

    if end <= i {
        return Err(ParseError::new(words.len() - 1, "missing object class"));
    }

    let mut noun_start = None;
    for start in i..end {
        if categories.contains(&words[start..end].join(" ")) {
            noun_start = Some(start);
            break;
        }
    }
    let Some(noun_start) = noun_start else {
        return Err(ParseError::new(end - 1, "no known object class named"));
    };
    let noun = words[noun_start..end].join(" ");

    let mut color = None;
    let mut attribute = None;
    let mut j = i;
    if j < noun_start && colors.contains(words[j]) {
        let first = words[j].to_string();
        j += 1;
        let mut second = None;
        if j < noun_start && words[j] == "and" {
            if j + 1 < noun_start && colors.contains(words[j + 1]) {
                second = Some(words[j + 1].to_string());
                j += 2;
            } else {
                return Err(ParseError::new(j + 1, "expected a color word after \"and\""));
            }
        }
        color = Some(ColorCue { first, second });
    }
    if j < noun_start {
        let word = words[j];
        if colors.contains(word) {
            return Err(ParseError::new(j, "two colors must be joined by \"and\""));
        }
        if word == "and" {
            return Err(ParseError::new(j, "\"and\" may only join two colors"));
        }
        attribute = Some(word.to_string());
        j += 1;
    }
    if j < noun_start {
        return Err(ParseError::new(j, "at most one attribute word may precede the object class"));
    }

    Ok(ExpressionAst { article, size, color, attribute, noun, location })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn categories() -> BTreeSet<String> {
        ["dog", "cat", "parrot", "elephant", "polar bear"]
            .iter()
            .map(|s| s.to_string())
            .collect()
    }

    fn colors() -> BTreeSet<String> {
        ["brown", "white", "yellow", "green", "red", "blue", "black"]
            .iter()
            .map(|s| s.to_string())
            .collect()
    }

    fn cues_with_everything() -> CueSet {
        CueSet {
            category: "dog".to_string(),
            class_unique: false,
            size: Some(SizeForm::Smaller),
            location: Some(LocationPhrase::OnTheLeft),
            color: Some(ColorCue { first: "brown".to_string(), second: None }),
            attribute: Some("running".to_string()),
        }
    }

    #[test]
    fn compose_class_only_uses_indefinite_article() {
        let mut cues = cues_with_everything();
        let ast = compose(&cues, CueSelection::CLASS_ONLY).unwrap();
        assert_eq!(render(&ast), "a dog");

        cues.category = "elephant".to_string();
        let ast = compose(&cues, CueSelection::CLASS_ONLY).unwrap();
        assert_eq!(render(&ast), "an elephant");
    }

    #[test]
    fn compose_size_takes_definite_article() {
        let cues = cues_with_everything();
        let selection = CueSelection { size: true, location: true, ..CueSelection::CLASS_ONLY };
        let ast = compose(&cues, selection).unwrap();
        assert_eq!(render(&ast), "the smaller dog on the left");
    }

    #[test]
    fn compose_missing_selected_cue_yields_none() {
        let mut cues = cues_with_everything();
        cues.location = None;
        let selection = CueSelection { location: true, ..CueSelection::CLASS_ONLY };
        assert_eq!(compose(&cues, selection), None);
    }

    #[test]
    fn compose_article_agrees_with_first_word() {
        let mut cues = cues_with_everything();
        cues.category = "elephant".to_string();
        cues.color = Some(ColorCue { first: "orange".to_string(), second: None });
        let selection = CueSelection { color: true, ..CueSelection::CLASS_ONLY };
        let ast = compose(&cues, selection).unwrap();
        assert_eq!(render(&ast), "an orange elephant");

        cues.color = Some(ColorCue { first: "grey".to_string(), second: None });
        let ast = compose(&cues, selection).unwrap();
        assert_eq!(render(&ast), "a grey elephant");
    }

    #[test]
    fn render_two_colors_and_attribute() {
        let ast = ExpressionAst {
            article: Article::A,
            size: None,
            color: Some(ColorCue {
                first: "yellow".to_string(),
                second: Some("green".to_string()),
            }),
            attribute: Some("flying".to_string()),
            noun: "parrot".to_string(),
            location: None,
        };
        assert_eq!(render(&ast), "a yellow and green flying parrot");
    }

    #[test]
    fn parse_simple() {
        let ast = parse_expression("a dog", &categories(), &colors()).unwrap();
        assert_eq!(
            ast,
            ExpressionAst {
                article: Article::A,
                size: None,
                color: None,
                attribute: None,
                noun: "dog".to_string(),
                location: None,
            }
        );
    }

    #[test]
    fn parse_full_form() {
        let ast = parse_expression(
            "the smaller brown and white running dog in the back left",
            &categories(),
            &colors(),
        )
        .unwrap();
        assert_eq!(ast.article, Article::The);
        assert_eq!(ast.size, Some(SizeForm::Smaller));
        assert_eq!(
            ast.color,
            Some(ColorCue { first: "brown".to_string(), second: Some("white".to_string()) })
        );
        assert_eq!(ast.attribute, Some("running".to_string()));
        assert_eq!(ast.noun, "dog");
        assert_eq!(ast.location, Some(LocationPhrase::InTheBackLeft));
    }

    #[test]
    fn parse_multi_word_category() {
        let ast = parse_expression("a white polar bear", &categories(), &colors()).unwrap();
        assert_eq!(ast.noun, "polar bear");
        assert_eq!(ast.color, Some(ColorCue { first: "white".to_string(), second: None }));
    }

    #[test]
    fn parse_location_strip_leaves_noun() {
        // "the front" alone must not be eaten as a location phrase.
        let err = parse_expression("a in the front", &categories(), &colors()).unwrap_err();
        assert_eq!(err.word_index, 3);
    }

    #[test]
    fn parse_rejects_unknown_noun() {
        let err = parse_expression("a zebra", &categories(), &colors()).unwrap_err();
        assert_eq!(err.word_index, 1);
        assert!(err.message.contains("object class"));
    }

    #[test]
    fn parse_rejects_missing_article() {
        let err = parse_expression("dog", &categories(), &colors()).unwrap_err();
        assert_eq!(err.word_index, 0);
    }

    #[test]
    fn parse_rejects_bare_color_pair() {
        let err = parse_expression("a yellow green parrot", &categories(), &colors()).unwrap_err();
        assert_eq!(err.word_index, 2);
        assert!(err.message.contains("and"));
    }

    #[test]
    fn parse_rejects_non_color_after_and() {
        let err =
            parse_expression("a yellow and running parrot", &categories(), &colors()).unwrap_err();
        assert_eq!(err.word_index, 3);
    }

    #[test]
    fn parse_rejects_two_attributes() {
        let err =
            parse_expression("a running jumping dog", &categories(), &colors()).unwrap_err();
        assert_eq!(err.word_index, 2);
    }

    #[test]
    fn parse_rejects_empty() {
        assert!(parse_expression("   ", &categories(), &colors()).is_err());
    }

    #[test]
    fn round_trip_examples() {
        let cats = categories();
        let cols = colors();
        let examples = vec![
            "a dog",
            "an elephant",
            "the bigger cat",
            "the smallest dog on the right",
            "a brown dog in the middle",
            "a yellow and green parrot",
            "the smaller white running dog in the front left",
            "a black polar bear in the back",
        ];
        for text in examples {
            let ast = parse_expression(text, &cats, &cols).unwrap();
            assert_eq!(render(&ast), text);
            let reparsed = parse_expression(&render(&ast), &cats, &cols).unwrap();
            assert_eq!(reparsed, ast);
        }
    }
}
