//! N-Triples rendering, serialization, and parsing.
//!
//! Serialization is canonical: one triple per line, lines sorted as byte
//! strings, trailing newline. Two equal graphs therefore serialize to
//! identical bytes. Parsing is all-or-nothing and reports 1-based line and
//! column positions.

use std::fmt;

use super::graph::Graph;
use super::term::{Iri, Literal, RdfError, Term, Triple};

/// Renders an IRI in N-Triples form: `<iri>`.
pub fn render_iri(iri: &Iri) -> String {
    format!("<{iri}>")
}

/// Renders a literal in N-Triples form. Plain strings omit the datatype;
/// language strings use `@tag`; other datatypes use `^^<iri>`.
pub fn render_literal(lit: &Literal) -> String {
    let escaped = escape(lit.lexical_form());
    if let Some(tag) = lit.language() {
        format!("\"{escaped}\"@{tag}")
    } else if lit.is_plain_string() {
        format!("\"{escaped}\"")
    } else {
        format!("\"{escaped}\"^^{}", render_iri(lit.datatype()))
    }
}

/// Renders a term in N-Triples form.
pub fn render_term(term: &Term) -> String {
    match term {
        Term::Iri(iri) => render_iri(iri),
        Term::Literal(lit) => render_literal(lit),
    }
}

/// Renders one triple as an N-Triples statement (no trailing newline).
pub fn render_triple(triple: &Triple) -> String {
    format!(
        "{} {} {} .",
        render_iri(&triple.subject),
        render_iri(&triple.predicate),
        render_term(&triple.object)
    )
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '"' => out.push_str("\\\""),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                out.push_str(&format!("\\u{:04X}", c as u32));
            }
            c => out.push(c),
        }
    }
    out
}

/// Serializes a graph to canonical N-Triples text. The empty graph yields
/// the empty string; otherwise every line ends with `\n`.
pub fn serialize_ntriples(graph: &Graph) -> String {
    let mut lines: Vec<String> = graph.iter().map(|t| render_triple(&t)).collect();
    lines.sort_unstable();
    if lines.is_empty() {
        String::new()
    } else {
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}

/// Parse error with 1-based line and column (in characters).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct NtParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Parses N-Triples text into a graph. Blank lines and `#` comment lines are
/// skipped; a comment may also follow the terminating `.` of a statement.
/// Any malformed line fails the whole parse.
pub fn parse_ntriples(text: &str) -> Result<Graph, NtParseError> {
    let mut graph = Graph::new();
    for (index, line) in text.lines().enumerate() {
        let mut parser = LineParser::new(line, index + 1);
        if let Some(triple) = parser.parse_line()? {
            graph.insert(triple);
        }
    }
    Ok(graph)
}

struct LineParser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl LineParser {
    fn new(line: &str, line_no: usize) -> Self {
        Self {
            chars: line.chars().collect(),
            pos: 0,
            line: line_no,
        }
    }

    fn error(&self, at: usize, message: impl fmt::Display) -> NtParseError {
        NtParseError {
            line: self.line,
            column: at + 1,
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(' ') | Some('\t')) {
            self.pos += 1;
        }
    }

    fn parse_line(&mut self) -> Result<Option<Triple>, NtParseError> {
        self.skip_ws();
        match self.peek() {
            None | Some('#') => return Ok(None),
            _ => {}
        }

        let subject = self.parse_iri()?;
        self.skip_ws();
        let predicate = self.parse_iri()?;
        self.skip_ws();
        let object = self.parse_term()?;
        self.skip_ws();
        match self.bump() {
            Some('.') => {}
            _ => return Err(self.error(self.pos.saturating_sub(1), "expected '.'")),
        }
        self.skip_ws();
        match self.peek() {
            None | Some('#') => Ok(Some(Triple::new(subject, predicate, object))),
            Some(c) => Err(self.error(self.pos, format!("unexpected {c:?} after '.'"))),
        }
    }

    fn parse_iri(&mut self) -> Result<Iri, NtParseError> {
        let start = self.pos;
        match self.bump() {
            Some('<') => {}
            _ => return Err(self.error(start, "expected '<'")),
        }
        let mut text = String::new();
        loop {
            match self.bump() {
                Some('>') => break,
                Some(c) => text.push(c),
                None => return Err(self.error(start, "unterminated IRI")),
            }
        }
        Iri::new(text).map_err(|e| self.error(start, rdf_error_reason(&e)))
    }

    fn parse_term(&mut self) -> Result<Term, NtParseError> {
        match self.peek() {
            Some('<') => Ok(Term::Iri(self.parse_iri()?)),
            Some('"') => Ok(Term::Literal(self.parse_literal()?)),
            Some(c) => Err(self.error(self.pos, format!("expected IRI or literal, found {c:?}"))),
            None => Err(self.error(self.pos, "expected IRI or literal")),
        }
    }

    fn parse_literal(&mut self) -> Result<Literal, NtParseError> {
        let start = self.pos;
        self.bump(); // opening quote
        let mut lexical = String::new();
        loop {
            match self.bump() {
                Some('"') => break,
                Some('\\') => {
                    let esc_at = self.pos - 1;
                    let c = self
                        .bump()
                        .ok_or_else(|| self.error(esc_at, "unterminated escape sequence"))?;
                    match c {
                        't' => lexical.push('\t'),
                        'b' => lexical.push('\u{8}'),
                        'n' => lexical.push('\n'),
                        'r' => lexical.push('\r'),
                        'f' => lexical.push('\u{c}'),
                        '"' => lexical.push('"'),
                        '\'' => lexical.push('\''),
                        '\\' => lexical.push('\\'),
                        'u' => lexical.push(self.parse_unicode_escape(esc_at, 4)?),
                        'U' => lexical.push(self.parse_unicode_escape(esc_at, 8)?),
                        other => {
                            return Err(self.error(esc_at, format!("invalid escape '\\{other}'")))
                        }
                    }
                }
                Some(c) => lexical.push(c),
                None => return Err(self.error(start, "unterminated string literal")),
            }
        }

        match self.peek() {
            Some('@') => {
                self.bump();
                let tag_start = self.pos;
                let mut tag = String::new();
                while let Some(c) = self.peek() {
                    if c.is_ascii_alphanumeric() || c == '-' {
                        tag.push(c);
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                Literal::lang_string(lexical, &tag)
                    .map_err(|e| self.error(tag_start, rdf_error_reason(&e)))
            }
            Some('^') => {
                let caret_at = self.pos;
                self.bump();
                if self.bump() != Some('^') {
                    return Err(self.error(caret_at, "expected '^^' before datatype IRI"));
                }
                let dt_at = self.pos;
                let datatype = self.parse_iri()?;
                Literal::typed(lexical, datatype).map_err(|e| self.error(dt_at, rdf_error_reason(&e)))
            }
            _ => Ok(Literal::string(lexical)),
        }
    }

    fn parse_unicode_escape(&mut self, esc_at: usize, len: usize) -> Result<char, NtParseError> {
        let mut value = 0u32;
        for _ in 0..len {
            let c = self
                .bump()
                .ok_or_else(|| self.error(esc_at, "truncated unicode escape"))?;
            let digit = c
                .to_digit(16)
                .ok_or_else(|| self.error(esc_at, format!("invalid hex digit {c:?} in unicode escape")))?;
            value = value * 16 + digit;
        }
        char::from_u32(value)
            .ok_or_else(|| self.error(esc_at, format!("U+{value:04X} is not a valid character")))
    }
}

fn rdf_error_reason(error: &RdfError) -> String {
    match error {
        RdfError::InvalidIri { value, reason } => format!("invalid IRI {value:?}: {reason}"),
        RdfError::InvalidLiteral { reason, .. } => format!("invalid literal: {reason}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vocab;

    fn iri(text: &str) -> Iri {
        Iri::new(text).unwrap()
    }

    #[test]
    fn renders_each_term_kind() {
        assert_eq!(render_iri(&iri("http://x/a")), "<http://x/a>");
        assert_eq!(render_literal(&Literal::string("hi")), "\"hi\"");
        assert_eq!(
            render_literal(&Literal::lang_string("hallo", "de").unwrap()),
            "\"hallo\"@de"
        );
        assert_eq!(
            render_literal(&Literal::typed("6.4", vocab::xsd_decimal()).unwrap()),
            "\"6.4\"^^<http://www.w3.org/2001/XMLSchema#decimal>"
        );
    }

    #[test]
    fn escapes_specials_and_controls() {
        let lit = Literal::string("a\"b\\c\nd\re\tf\u{1}g");
        assert_eq!(
            render_literal(&lit),
            "\"a\\\"b\\\\c\\nd\\re\\tf\\u0001g\""
        );
    }

    #[test]
    fn serialization_is_sorted_with_trailing_newline() {
        let mut g = Graph::new();
        g.insert(Triple::new(iri("http://x/b"), iri("http://x/p"), Literal::string("2")));
        g.insert(Triple::new(iri("http://x/a"), iri("http://x/p"), Literal::string("1")));
        let text = serialize_ntriples(&g);
        assert_eq!(
            text,
            "<http://x/a> <http://x/p> \"1\" .\n<http://x/b> <http://x/p> \"2\" .\n"
        );
        assert_eq!(serialize_ntriples(&Graph::new()), "");
    }

    #[test]
    fn serialization_ignores_insertion_order() {
        let mut g = Graph::new();
        let mut h = Graph::new();
        let t1 = Triple::new(iri("http://x/a"), iri("http://x/p"), iri("http://x/b"));
        let t2 = Triple::new(iri("http://x/b"), iri("http://x/q"), Literal::string("v"));
        g.insert(t1.clone());
        g.insert(t2.clone());
        h.insert(t2);
        h.insert(t1);
        assert_eq!(serialize_ntriples(&g), serialize_ntriples(&h));
    }

    #[test]
    fn parses_comments_blank_lines_and_trailing_comment() {
        let text = "\n# header comment\n<http://x/a> <http://x/p> \"v\" . # trailing\n   \n";
        let g = parse_ntriples(text).unwrap();
        assert_eq!(g.len(), 1);
        assert!(g.contains(&Triple::new(
            iri("http://x/a"),
            iri("http://x/p"),
            Literal::string("v")
        )));
    }

    #[test]
    fn parses_every_literal_shape() {
        let text = concat!(
            "<http://x/a> <http://x/p> \"plain \\\"q\\\" \\\\ \\n\" .\n",
            "<http://x/a> <http://x/p> \"hallo\"@de-AT .\n",
            "<http://x/a> <http://x/p> \"6.4\"^^<http://www.w3.org/2001/XMLSchema#decimal> .\n",
            "<http://x/a> <http://x/p> \"\\u0041\\U0001F600\" .\n",
        );
        let g = parse_ntriples(text).unwrap();
        assert_eq!(g.len(), 4);
        let rendered = serialize_ntriples(&g);
        assert!(rendered.contains("\"hallo\"@de-at"));
        assert!(rendered.contains("A\u{1F600}"));
    }

    #[test]
    fn parse_reports_line_and_column() {
        let text = "<http://x/a> <http://x/p> \"v\" .\n<http://x/a> <http://x/p \"v\" .\n";
        let err = parse_ntriples(text).unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.column, 14);
        assert!(err.message.contains("unterminated IRI") || err.message.contains("invalid IRI"));
    }

    #[test]
    fn parse_is_all_or_nothing() {
        let text = "<http://x/a> <http://x/p> \"v\" .\nnot a triple\n";
        assert!(parse_ntriples(text).is_err());
    }

    #[test]
    fn parse_rejects_malformed_lines() {
        for bad in [
            "<http://x/a> <http://x/p> \"v\"",
            "<http://x/a> <http://x/p> .",
            "<http://x/a> \"lit\" <http://x/b> .",
            "<http://x/a> <http://x/p> \"v\" . extra",
            "<http://x/a> <http://x/p> \"v\"@ .",
            "<http://x/a> <http://x/p> \"v\"^^<http://www.w3.org/2001/XMLSchema#integer> .",
            "<http://x/a> <http://x/p> \"bad \\q escape\" .",
            "<not an iri> <http://x/p> \"v\" .",
        ] {
            assert!(parse_ntriples(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn parse_round_trips_serialization() {
        let mut g = Graph::new();
        g.insert(Triple::new(
            iri("http://x/s"),
            iri("http://x/p"),
            Literal::lang_string("grüß\tdich", "de").unwrap(),
        ));
        g.insert(Triple::new(
            iri("http://x/s"),
            iri("http://x/q"),
            Literal::typed("2021-02-25T23:01:21.000Z", vocab::xsd_date_time()).unwrap(),
        ));
        g.insert(Triple::new(iri("http://x/s"), iri("http://x/r"), iri("http://x/o")));
        let text = serialize_ntriples(&g);
        let parsed = parse_ntriples(&text).unwrap();
        assert_eq!(parsed, g);
        assert_eq!(serialize_ntriples(&parsed), text);
    }
}
