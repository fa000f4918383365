//! Query text parsing: a hand-written lexer and recursive-descent parser.
//!
//! Grammar (keywords case-insensitive, `#` starts a line comment):
//!
//! ```text
//! query   := prefix* select where order? limit?
//! prefix  := PREFIX name ':' IRIREF
//! select  := SELECT ( '*' | VAR+ )
//! where   := WHERE '{' ( triple | filter )* '}'
//! triple  := term term term '.'          (final '.' optional before '}')
//! filter  := FILTER '(' ( VAR ('='|'!=') constant
//!                       | CONTAINS '(' VAR ',' STRING ')' ) ')' '.'?
//! term    := VAR | 'a' | IRIREF | name ':' local | literal
//! literal := STRING ('@lang' | '^^' iri)? | NUMBER | true | false
//! order   := ORDER BY VAR
//! limit   := LIMIT NUMBER
//! ```
//!
//! `a` expands to `rdf:type` in predicate position, bare numbers become
//! `xsd:decimal` literals, and `true`/`false` become `xsd:boolean`.

use std::collections::BTreeMap;

use crate::rdf::{Iri, Literal, Term};
use crate::vocab;

use super::ast::{Filter, FilterOp, PatternTerm, Projection, Query, TriplePattern};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QueryError {
    #[error("parse error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown prefix '{prefix}' at {line}:{column}")]
    UnknownPrefix {
        prefix: String,
        line: usize,
        column: usize,
    },
    #[error("variable ?{variable} does not appear in any pattern")]
    UnboundVariable { variable: String },
}

/// Parses query text with no predeclared prefixes.
pub fn parse_query(text: &str) -> Result<Query, QueryError> {
    parse_query_with_prefixes(text, &[])
}

/// Parses query text with `presets` already in scope. A `PREFIX` line in
/// the text overrides a preset of the same name.
pub fn parse_query_with_prefixes(
    text: &str,
    presets: &[(&str, &str)],
) -> Result<Query, QueryError> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        prefixes: presets
            .iter()
            .map(|(p, base)| (p.to_string(), base.to_string()))
            .collect(),
    };
    let query = parser.query()?;
    validate_variables(&query)?;
    Ok(query)
}

fn validate_variables(query: &Query) -> Result<(), QueryError> {
    let bound = query.pattern_variables();
    let is_bound = |name: &str| bound.iter().any(|v| v == name);
    let mut referenced: Vec<&str> = Vec::new();
    if let Projection::Vars(vars) = &query.projection {
        referenced.extend(vars.iter().map(String::as_str));
    }
    referenced.extend(query.filters.iter().map(|f| f.var.as_str()));
    referenced.extend(query.order_by.iter().map(String::as_str));
    for name in referenced {
        if !is_bound(name) {
            return Err(QueryError::UnboundVariable {
                variable: name.to_owned(),
            });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Var(String),
    IriRef(String),
    Prefixed { prefix: String, local: String },
    Str { value: String, lang: Option<String> },
    Number(String),
    Star,
    Dot,
    Comma,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Eq,
    Ne,
    DoubleCaret,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Var(v) => format!("?{v}"),
            Tok::IriRef(_) => "an IRI".to_owned(),
            Tok::Prefixed { prefix, local } => format!("'{prefix}:{local}'"),
            Tok::Str { .. } => "a string".to_owned(),
            Tok::Number(n) => format!("'{n}'"),
            Tok::Star => "'*'".to_owned(),
            Tok::Dot => "'.'".to_owned(),
            Tok::Comma => "','".to_owned(),
            Tok::LBrace => "'{'".to_owned(),
            Tok::RBrace => "'}'".to_owned(),
            Tok::LParen => "'('".to_owned(),
            Tok::RParen => "')'".to_owned(),
            Tok::Eq => "'='".to_owned(),
            Tok::Ne => "'!='".to_owned(),
            Tok::DoubleCaret => "'^^'".to_owned(),
            Tok::Eof => "end of input".to_owned(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, QueryError> {
    let mut lexer = Lexer {
        chars: text.chars().collect(),
        pos: 0,
        line: 1,
        column: 1,
    };
    lexer.run()
}

impl Lexer {
    fn run(&mut self) -> Result<Vec<Token>, QueryError> {
        let mut out = Vec::new();
        loop {
            self.skip_trivia();
            let (line, column) = (self.line, self.column);
            let Some(c) = self.peek() else {
                out.push(Token { tok: Tok::Eof, line, column });
                return Ok(out);
            };
            let tok = match c {
                '?' => self.variable()?,
                '<' => self.iri_ref()?,
                '"' => self.string()?,
                '*' => self.single(Tok::Star),
                '.' => self.single(Tok::Dot),
                ',' => self.single(Tok::Comma),
                '{' => self.single(Tok::LBrace),
                '}' => self.single(Tok::RBrace),
                '(' => self.single(Tok::LParen),
                ')' => self.single(Tok::RParen),
                '=' => self.single(Tok::Eq),
                '!' => {
                    self.bump();
                    if self.peek() == Some('=') {
                        self.bump();
                        Tok::Ne
                    } else {
                        return Err(self.error_at(line, column, "expected '=' after '!'"));
                    }
                }
                '^' => {
                    self.bump();
                    if self.peek() == Some('^') {
                        self.bump();
                        Tok::DoubleCaret
                    } else {
                        return Err(self.error_at(line, column, "expected '^^'"));
                    }
                }
                c if c.is_ascii_digit() || c == '-' => self.number(line, column)?,
                c if is_name_start(c) => self.word(),
                other => {
                    return Err(self.error_at(
                        line,
                        column,
                        &format!("unexpected character {other:?}"),
                    ));
                }
            };
            out.push(Token { tok, line, column });
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn single(&mut self, tok: Tok) -> Tok {
        self.bump();
        tok
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while let Some(c) = self.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn error_at(&self, line: usize, column: usize, message: &str) -> QueryError {
        QueryError::Syntax {
            line,
            column,
            message: message.to_owned(),
        }
    }

    fn variable(&mut self) -> Result<Tok, QueryError> {
        let (line, column) = (self.line, self.column);
        self.bump();
        let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
        if name.is_empty() {
            return Err(self.error_at(line, column, "expected a variable name after '?'"));
        }
        Ok(Tok::Var(name))
    }

    fn iri_ref(&mut self) -> Result<Tok, QueryError> {
        let (line, column) = (self.line, self.column);
        self.bump();
        let mut text = String::new();
        loop {
            match self.bump() {
                Some('>') => return Ok(Tok::IriRef(text)),
                Some(c) if c != '\n' => text.push(c),
                _ => return Err(self.error_at(line, column, "unterminated IRI reference")),
            }
        }
    }

    fn string(&mut self) -> Result<Tok, QueryError> {
        let (line, column) = (self.line, self.column);
        self.bump();
        let mut value = String::new();
        loop {
            match self.bump() {
                Some('"') => break,
                Some('\\') => match self.bump() {
                    Some('"') => value.push('"'),
                    Some('\\') => value.push('\\'),
                    Some('n') => value.push('\n'),
                    Some('r') => value.push('\r'),
                    Some('t') => value.push('\t'),
                    other => {
                        return Err(self.error_at(
                            line,
                            column,
                            &format!("unsupported string escape {other:?}"),
                        ));
                    }
                },
                Some(c) => value.push(c),
                None => return Err(self.error_at(line, column, "unterminated string")),
            }
        }
        let lang = if self.peek() == Some('@') {
            self.bump();
            let tag = self.take_while(|c| c.is_ascii_alphanumeric() || c == '-');
            if tag.is_empty() {
                return Err(self.error_at(line, column, "expected a language tag after '@'"));
            }
            Some(tag)
        } else {
            None
        };
        Ok(Tok::Str { value, lang })
    }

    fn number(&mut self, line: usize, column: usize) -> Result<Tok, QueryError> {
        let mut text = String::new();
        if self.peek() == Some('-') {
            text.push('-');
            self.bump();
        }
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.error_at(line, column, "expected digits in number"));
        }
        text.push_str(&digits);
        // A '.' continues the number only when followed by a digit, so the
        // statement terminator in `... 10 .` still lexes as its own token.
        if self.peek() == Some('.')
            && self.chars.get(self.pos + 1).is_some_and(char::is_ascii_digit)
        {
            self.bump();
            text.push('.');
            text.push_str(&self.take_while(|c| c.is_ascii_digit()));
        }
        Ok(Tok::Number(text))
    }

    fn word(&mut self) -> Tok {
        let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-');
        if self.peek() == Some(':') {
            self.bump();
            let mut local = self.take_while(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'));
            // A prefixed name cannot end with '.': that dot terminates the
            // pattern. Give the characters back.
            while local.ends_with('.') {
                local.pop();
                self.pos -= 1;
                self.column -= 1;
            }
            Tok::Prefixed { prefix: name, local }
        } else {
            Tok::Ident(name)
        }
    }

    fn take_while(&mut self, keep: impl Fn(char) -> bool) -> String {
        let mut out = String::new();
        while let Some(c) = self.peek() {
            if keep(c) {
                out.push(c);
                self.bump();
            } else {
                break;
            }
        }
        out
    }
}

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    prefixes: BTreeMap<String, String>,
}

impl Parser {
    fn current(&self) -> &Token {
        &self.tokens[self.pos.min(self.tokens.len() - 1)]
    }

    fn advance(&mut self) -> Token {
        let token = self.current().clone();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        token
    }

    fn error(&self, message: impl Into<String>) -> QueryError {
        let token = self.current();
        QueryError::Syntax {
            line: token.line,
            column: token.column,
            message: message.into(),
        }
    }

    fn expect(&mut self, want: &Tok, context: &str) -> Result<(), QueryError> {
        if &self.current().tok == want {
            self.advance();
            Ok(())
        } else {
            Err(self.error(format!(
                "expected {} {context}, found {}",
                want.describe(),
                self.current().tok.describe()
            )))
        }
    }

    fn keyword(&self) -> Option<String> {
        match &self.current().tok {
            Tok::Ident(word) => Some(word.to_ascii_uppercase()),
            _ => None,
        }
    }

    fn eat_keyword(&mut self, word: &str) -> bool {
        if self.keyword().as_deref() == Some(word) {
            self.advance();
            true
        } else {
            false
        }
    }

    fn query(&mut self) -> Result<Query, QueryError> {
        while self.eat_keyword("PREFIX") {
            self.prefix_declaration()?;
        }
        if !self.eat_keyword("SELECT") {
            return Err(self.error(format!(
                "expected SELECT, found {}",
                self.current().tok.describe()
            )));
        }
        let projection = self.projection()?;
        if !self.eat_keyword("WHERE") {
            return Err(self.error(format!(
                "expected WHERE, found {}",
                self.current().tok.describe()
            )));
        }
        let (patterns, filters) = self.group()?;
        let order_by = if self.eat_keyword("ORDER") {
            if !self.eat_keyword("BY") {
                return Err(self.error("expected BY after ORDER"));
            }
            Some(self.variable()?)
        } else {
            None
        };
        let limit = if self.eat_keyword("LIMIT") {
            Some(self.limit_value()?)
        } else {
            None
        };
        if self.current().tok != Tok::Eof {
            return Err(self.error(format!(
                "expected end of query, found {}",
                self.current().tok.describe()
            )));
        }
        Ok(Query {
            prefixes: self.prefixes.clone(),
            projection,
            patterns,
            filters,
            order_by,
            limit,
        })
    }

    fn prefix_declaration(&mut self) -> Result<(), QueryError> {
        let name = match &self.current().tok {
            Tok::Prefixed { prefix, local } if local.is_empty() => prefix.clone(),
            _ => {
                return Err(self.error(format!(
                    "expected a prefix declaration like 'PREFIX ex: <iri>', found {}",
                    self.current().tok.describe()
                )));
            }
        };
        self.advance();
        match self.advance().tok {
            Tok::IriRef(base) => {
                self.prefixes.insert(name, base);
                Ok(())
            }
            other => Err(self.error(format!(
                "expected an IRI for prefix '{name}', found {}",
                other.describe()
            ))),
        }
    }

    fn projection(&mut self) -> Result<Projection, QueryError> {
        if self.current().tok == Tok::Star {
            self.advance();
            return Ok(Projection::All);
        }
        let mut vars = Vec::new();
        while let Tok::Var(name) = &self.current().tok {
            vars.push(name.clone());
            self.advance();
        }
        if vars.is_empty() {
            return Err(self.error(format!(
                "expected '*' or at least one variable after SELECT, found {}",
                self.current().tok.describe()
            )));
        }
        Ok(Projection::Vars(vars))
    }

    fn group(&mut self) -> Result<(Vec<TriplePattern>, Vec<Filter>), QueryError> {
        self.expect(&Tok::LBrace, "to open the WHERE group")?;
        let mut patterns = Vec::new();
        let mut filters = Vec::new();
        loop {
            if self.current().tok == Tok::RBrace {
                self.advance();
                return Ok((patterns, filters));
            }
            if self.current().tok == Tok::Eof {
                return Err(self.error("expected '}' to close the WHERE group"));
            }
            if self.keyword().as_deref() == Some("FILTER") {
                self.advance();
                filters.push(self.filter()?);
            } else {
                patterns.push(self.triple_pattern()?);
            }
        }
    }

    fn triple_pattern(&mut self) -> Result<TriplePattern, QueryError> {
        let subject = self.pattern_term(false)?;
        let predicate = self.pattern_term(true)?;
        let object = self.pattern_term(false)?;
        // The separating '.' may be omitted before the closing brace.
        if self.current().tok == Tok::Dot {
            self.advance();
        } else if self.current().tok != Tok::RBrace {
            return Err(self.error(format!(
                "expected '.' after a triple pattern, found {}",
                self.current().tok.describe()
            )));
        }
        Ok(TriplePattern { subject, predicate, object })
    }

    fn filter(&mut self) -> Result<Filter, QueryError> {
        self.expect(&Tok::LParen, "after FILTER")?;
        let filter = if self.eat_keyword("CONTAINS") {
            self.expect(&Tok::LParen, "after CONTAINS")?;
            let var = self.variable()?;
            self.expect(&Tok::Comma, "between CONTAINS arguments")?;
            let needle = match self.advance().tok {
                Tok::Str { value, lang: None } => value,
                other => {
                    return Err(self.error(format!(
                        "expected a plain string in CONTAINS, found {}",
                        other.describe()
                    )));
                }
            };
            self.expect(&Tok::RParen, "to close CONTAINS")?;
            Filter {
                var,
                op: FilterOp::Contains(needle),
            }
        } else {
            let var = self.variable()?;
            let op = match self.advance().tok {
                Tok::Eq => FilterOp::Eq(self.constant()?),
                Tok::Ne => FilterOp::Ne(self.constant()?),
                other => {
                    return Err(self.error(format!(
                        "expected '=' or '!=' in FILTER, found {}",
                        other.describe()
                    )));
                }
            };
            Filter { var, op }
        };
        self.expect(&Tok::RParen, "to close FILTER")?;
        if self.current().tok == Tok::Dot {
            self.advance();
        }
        Ok(filter)
    }

    fn variable(&mut self) -> Result<String, QueryError> {
        match &self.current().tok {
            Tok::Var(name) => {
                let name = name.clone();
                self.advance();
                Ok(name)
            }
            other => Err(self.error(format!("expected a variable, found {}", other.describe()))),
        }
    }

    fn limit_value(&mut self) -> Result<usize, QueryError> {
        match self.advance().tok {
            Tok::Number(text) => text
                .parse::<usize>()
                .map_err(|_| self.error(format!("LIMIT takes a non-negative integer, found '{text}'"))),
            other => Err(self.error(format!(
                "expected a number after LIMIT, found {}",
                other.describe()
            ))),
        }
    }

    /// Parses a pattern position. `a` is only recognized in predicate
    /// position, where it expands to `rdf:type`.
    fn pattern_term(&mut self, predicate_position: bool) -> Result<PatternTerm, QueryError> {
        if let Tok::Var(name) = &self.current().tok {
            let name = name.clone();
            self.advance();
            return Ok(PatternTerm::Var(name));
        }
        if predicate_position {
            if let Tok::Ident(word) = &self.current().tok {
                if word == "a" {
                    self.advance();
                    return Ok(PatternTerm::Constant(Term::Iri(vocab::rdf_type())));
                }
            }
        }
        Ok(PatternTerm::Constant(self.constant()?))
    }

    /// Parses a constant term: IRI, prefixed name, literal, number, or
    /// boolean.
    fn constant(&mut self) -> Result<Term, QueryError> {
        let token = self.current().clone();
        match &token.tok {
            Tok::IriRef(text) => {
                self.advance();
                let iri = self.check_iri(text, &token)?;
                Ok(Term::Iri(iri))
            }
            Tok::Prefixed { prefix, local } => {
                self.advance();
                let base = self.prefixes.get(prefix).ok_or(QueryError::UnknownPrefix {
                    prefix: prefix.clone(),
                    line: token.line,
                    column: token.column,
                })?;
                let iri = self.check_iri(&format!("{base}{local}"), &token)?;
                Ok(Term::Iri(iri))
            }
            Tok::Str { value, lang } => {
                let (value, lang) = (value.clone(), lang.clone());
                self.advance();
                if let Some(tag) = lang {
                    return Literal::lang_string(&value, &tag)
                        .map(Term::Literal)
                        .map_err(|e| self.error_at(&token, e.to_string()));
                }
                if self.current().tok == Tok::DoubleCaret {
                    self.advance();
                    let datatype = match self.constant()? {
                        Term::Iri(iri) => iri,
                        Term::Literal(_) => {
                            return Err(self.error("expected a datatype IRI after '^^'"));
                        }
                    };
                    return Literal::typed(&value, datatype)
                        .map(Term::Literal)
                        .map_err(|e| self.error_at(&token, e.to_string()));
                }
                Ok(Term::Literal(Literal::string(&value)))
            }
            Tok::Number(text) => {
                let text = text.clone();
                self.advance();
                Literal::typed(&text, vocab::xsd_decimal())
                    .map(Term::Literal)
                    .map_err(|e| self.error_at(&token, e.to_string()))
            }
            Tok::Ident(word) if word.eq_ignore_ascii_case("true") => {
                self.advance();
                Ok(Term::Literal(boolean("true")))
            }
            Tok::Ident(word) if word.eq_ignore_ascii_case("false") => {
                self.advance();
                Ok(Term::Literal(boolean("false")))
            }
            other => Err(self.error(format!("expected a term, found {}", other.describe()))),
        }
    }

    fn check_iri(&self, text: &str, token: &Token) -> Result<Iri, QueryError> {
        Iri::new(text).map_err(|e| self.error_at(token, e.to_string()))
    }

    fn error_at(&self, token: &Token, message: String) -> QueryError {
        QueryError::Syntax {
            line: token.line,
            column: token.column,
            message,
        }
    }
}

fn boolean(lexical: &str) -> Literal {
    Literal::typed(lexical, vocab::xsd_boolean()).expect("true/false are valid booleans")
}

#[cfg(test)]
mod tests {
    use super::*;

    const CC: &str = "http://w3id.org/cc-ontology#";

    fn with_cc(text: &str) -> Result<Query, QueryError> {
        parse_query_with_prefixes(text, &[("cc", CC)])
    }

    #[test]
    fn single_pattern_query() {
        let q = with_cc("SELECT ?s WHERE { ?s a cc:CVE . }").unwrap();
        assert_eq!(q.projection, Projection::Vars(vec!["s".to_owned()]));
        assert_eq!(q.patterns.len(), 1);
        assert_eq!(
            q.patterns[0].predicate,
            PatternTerm::Constant(Term::Iri(vocab::rdf_type()))
        );
        assert_eq!(
            q.patterns[0].object,
            PatternTerm::Constant(Term::Iri(Iri::new(format!("{CC}CVE")).unwrap()))
        );
    }

    #[test]
    fn declared_prefix_overrides_preset() {
        let q = with_cc("PREFIX cc: <http://other.example/> SELECT ?s WHERE { ?s a cc:X . }")
            .unwrap();
        assert_eq!(
            q.patterns[0].object,
            PatternTerm::Constant(Term::Iri(Iri::new("http://other.example/X").unwrap()))
        );
    }

    #[test]
    fn missing_brace_errors_at_final_line() {
        let err = with_cc("SELECT ?s\nWHERE {\n  ?s a cc:CVE .").unwrap_err();
        match err {
            QueryError::Syntax { line, message, .. } => {
                assert_eq!(line, 3);
                assert!(message.contains("'}'"), "message was: {message}");
            }
            other => panic!("expected syntax error, got {other}"),
        }
    }

    #[test]
    fn unbound_select_variable_is_rejected() {
        let err = with_cc("SELECT ?x WHERE { ?y a cc:CVE . }").unwrap_err();
        assert_eq!(
            err,
            QueryError::UnboundVariable {
                variable: "x".to_owned()
            }
        );
    }

    #[test]
    fn unknown_prefix_is_named() {
        let err = parse_query("SELECT ?s WHERE { ?s a nope:CVE . }").unwrap_err();
        match err {
            QueryError::UnknownPrefix { prefix, line, column } => {
                assert_eq!(prefix, "nope");
                assert_eq!(line, 1);
                assert!(column > 1);
            }
            other => panic!("expected unknown prefix, got {other}"),
        }
    }

    #[test]
    fn numbers_and_booleans_become_typed_literals() {
        let q = parse_query(
            "SELECT ?m WHERE { ?m <http://ex/score> 6.4 . ?m <http://ex/on> true . }",
        )
        .unwrap();
        assert_eq!(
            q.patterns[0].object,
            PatternTerm::Constant(Term::Literal(
                Literal::typed("6.4", vocab::xsd_decimal()).unwrap()
            ))
        );
        assert_eq!(
            q.patterns[1].object,
            PatternTerm::Constant(Term::Literal(
                Literal::typed("true", vocab::xsd_boolean()).unwrap()
            ))
        );
    }

    #[test]
    fn number_before_statement_dot_lexes_cleanly() {
        let q = parse_query("SELECT ?m WHERE { ?m <http://ex/score> 10 . }").unwrap();
        assert_eq!(
            q.patterns[0].object,
            PatternTerm::Constant(Term::Literal(
                Literal::typed("10", vocab::xsd_decimal()).unwrap()
            ))
        );
    }

    #[test]
    fn all_three_filter_forms_parse() {
        let q = with_cc(
            "SELECT ?s WHERE { ?s cc:p ?v . FILTER(?v = \"x\") . \
             FILTER(?v != \"y\"@en) FILTER(CONTAINS(?v, \"sub\")) }",
        )
        .unwrap();
        assert_eq!(q.filters.len(), 3);
        assert_eq!(
            q.filters[0].op,
            FilterOp::Eq(Term::Literal(Literal::string("x")))
        );
        assert_eq!(
            q.filters[1].op,
            FilterOp::Ne(Term::Literal(Literal::lang_string("y", "en").unwrap()))
        );
        assert_eq!(q.filters[2].op, FilterOp::Contains("sub".to_owned()));
    }

    #[test]
    fn typed_literal_with_unsupported_datatype_is_rejected() {
        let err = parse_query(
            "SELECT ?s WHERE { ?s <http://ex/p> \"1\"^^<http://www.w3.org/2001/XMLSchema#integer> . }",
        )
        .unwrap_err();
        match err {
            QueryError::Syntax { message, .. } => {
                assert!(message.contains("integer"), "message was: {message}");
            }
            other => panic!("expected syntax error, got {other}"),
        }
    }

    #[test]
    fn order_and_limit_parse() {
        let q = with_cc("SELECT ?s WHERE { ?s a cc:CVE . } ORDER BY ?s LIMIT 10").unwrap();
        assert_eq!(q.order_by.as_deref(), Some("s"));
        assert_eq!(q.limit, Some(10));
    }

    #[test]
    fn keywords_are_case_insensitive() {
        let q = with_cc("select ?s where { ?s a cc:CVE . } order by ?s limit 1").unwrap();
        assert_eq!(q.limit, Some(1));
    }

    #[test]
    fn comments_are_skipped() {
        let q = with_cc("# use case\nSELECT ?s # trailing\nWHERE { ?s a cc:CVE . }").unwrap();
        assert_eq!(q.patterns.len(), 1);
    }

    #[test]
    fn select_star_collects_variables_in_order() {
        let q = with_cc("SELECT * WHERE { ?b cc:p ?a . ?a ?p ?b . }").unwrap();
        assert_eq!(q.projection, Projection::All);
        assert_eq!(q.pattern_variables(), ["b", "a", "p"]);
    }

    #[test]
    fn printer_round_trips() {
        let q = with_cc(
            "PREFIX ex: <http://ex/>\nSELECT ?s ?v\nWHERE { ?s ex:p ?v . ?s a cc:CVE . \
             FILTER(CONTAINS(?v, \"x\")) }\nORDER BY ?v\nLIMIT 3",
        )
        .unwrap();
        let reparsed = parse_query(&q.to_text()).unwrap();
        assert_eq!(q, reparsed);
    }

    #[test]
    fn prefixed_local_cannot_swallow_statement_dot() {
        let q = with_cc("SELECT ?s WHERE { ?s a cc:CVE. }").unwrap();
        assert_eq!(
            q.patterns[0].object,
            PatternTerm::Constant(Term::Iri(Iri::new(format!("{CC}CVE")).unwrap()))
        );
    }
}
