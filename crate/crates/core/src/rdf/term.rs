//! Terms: IRIs, literals, and triples.

use std::fmt;

use crate::vocab;

/// Error raised when constructing an invalid term.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RdfError {
    #[error("invalid IRI {value:?}: {reason}")]
    InvalidIri { value: String, reason: String },
    #[error("invalid literal {lexical:?}: {reason}")]
    InvalidLiteral { lexical: String, reason: String },
}

/// An absolute IRI.
///
/// Invariants: non-empty, contains no whitespace and none of `<`, `>`, `"`,
/// and has a non-empty scheme before the first `:`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Iri(String);

impl Iri {
    pub fn new(value: impl Into<String>) -> Result<Self, RdfError> {
        let value = value.into();
        if value.is_empty() {
            return Err(RdfError::InvalidIri {
                value,
                reason: "must not be empty".into(),
            });
        }
        if let Some(c) = value
            .chars()
            .find(|c| c.is_whitespace() || matches!(c, '<' | '>' | '"'))
        {
            return Err(RdfError::InvalidIri {
                reason: format!("contains forbidden character {c:?}"),
                value,
            });
        }
        match value.split_once(':') {
            None => {
                return Err(RdfError::InvalidIri {
                    value,
                    reason: "missing scheme (no ':')".into(),
                })
            }
            Some(("", _)) => {
                return Err(RdfError::InvalidIri {
                    value,
                    reason: "scheme before ':' is empty".into(),
                })
            }
            Some(_) => {}
        }
        Ok(Self(value))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// The fragment after the last `#` or `/`, used for display labels.
    /// Falls back to the full text when that fragment is empty.
    pub fn local_name(&self) -> &str {
        let tail = match self.0.rfind(['#', '/']) {
            Some(i) => &self.0[i + 1..],
            None => &self.0,
        };
        if tail.is_empty() {
            &self.0
        } else {
            tail
        }
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for Iri {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl serde::Serialize for Iri {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

/// An RDF literal.
///
/// The datatype is always explicit; plain literals carry `xsd:string`.
/// A language tag is present if and only if the datatype is
/// `rdf:langString`. Supported datatypes are `xsd:string`, `xsd:decimal`,
/// `xsd:dateTime`, `xsd:boolean`, and `rdf:langString`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    lexical: String,
    datatype: Iri,
    lang: Option<String>,
}

impl Literal {
    /// A plain `xsd:string` literal.
    pub fn string(lexical: impl Into<String>) -> Self {
        Self {
            lexical: lexical.into(),
            datatype: vocab::xsd_string(),
            lang: None,
        }
    }

    /// A language-tagged string. Tags are normalized to lowercase.
    pub fn lang_string(lexical: impl Into<String>, tag: &str) -> Result<Self, RdfError> {
        let lexical = lexical.into();
        if tag.is_empty()
            || !tag.chars().all(|c| c.is_ascii_alphanumeric() || c == '-')
            || tag.starts_with('-')
            || tag.ends_with('-')
            || tag.contains("--")
            || !tag.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
        {
            return Err(RdfError::InvalidLiteral {
                lexical,
                reason: format!("invalid language tag {tag:?}"),
            });
        }
        Ok(Self {
            lexical,
            datatype: vocab::rdf_lang_string(),
            lang: Some(tag.to_ascii_lowercase()),
        })
    }

    /// A typed literal. The datatype must be one of the supported set, and
    /// `rdf:langString` is rejected here because it requires a tag.
    pub fn typed(lexical: impl Into<String>, datatype: Iri) -> Result<Self, RdfError> {
        let lexical = lexical.into();
        match datatype.as_str() {
            vocab::XSD_STRING => Ok(Self::string(lexical)),
            vocab::XSD_DECIMAL => {
                if !is_valid_decimal(&lexical) {
                    return Err(RdfError::InvalidLiteral {
                        lexical,
                        reason: "not a valid xsd:decimal lexical form".into(),
                    });
                }
                Ok(Self {
                    lexical,
                    datatype,
                    lang: None,
                })
            }
            vocab::XSD_BOOLEAN => {
                if !matches!(lexical.as_str(), "true" | "false" | "1" | "0") {
                    return Err(RdfError::InvalidLiteral {
                        lexical,
                        reason: "not a valid xsd:boolean lexical form".into(),
                    });
                }
                Ok(Self {
                    lexical,
                    datatype,
                    lang: None,
                })
            }
            vocab::XSD_DATE_TIME => Ok(Self {
                lexical,
                datatype,
                lang: None,
            }),
            vocab::RDF_LANG_STRING => Err(RdfError::InvalidLiteral {
                lexical,
                reason: "rdf:langString requires a language tag".into(),
            }),
            other => Err(RdfError::InvalidLiteral {
                lexical,
                reason: format!("unsupported datatype <{other}>"),
            }),
        }
    }

    /// An `xsd:decimal` literal from a finite float, using Rust's shortest
    /// round-trip rendering as the lexical form.
    pub fn decimal(value: f64) -> Result<Self, RdfError> {
        if !value.is_finite() {
            return Err(RdfError::InvalidLiteral {
                lexical: value.to_string(),
                reason: "xsd:decimal must be finite".into(),
            });
        }
        let mut lexical = value.to_string();
        if !lexical.contains('.') {
            // Keep integral scores in an unambiguous decimal shape (e.g. "9.8"
            // and "10.0" rather than "10").
            lexical.push_str(".0");
        }
        Self::typed(lexical, vocab::xsd_decimal())
    }

    pub fn lexical_form(&self) -> &str {
        &self.lexical
    }

    pub fn datatype(&self) -> &Iri {
        &self.datatype
    }

    pub fn language(&self) -> Option<&str> {
        self.lang.as_deref()
    }

    pub fn is_plain_string(&self) -> bool {
        self.datatype.as_str() == vocab::XSD_STRING
    }
}

/// xsd:decimal lexical form: optional sign, digits with at most one decimal
/// point, at least one digit, no exponent.
fn is_valid_decimal(s: &str) -> bool {
    let rest = s.strip_prefix(['+', '-']).unwrap_or(s);
    !rest.is_empty()
        && rest.chars().all(|c| c.is_ascii_digit() || c == '.')
        && rest.chars().filter(|&c| c == '.').count() <= 1
        && rest.chars().any(|c| c.is_ascii_digit())
}

/// A graph node: IRI or literal. Blank nodes do not exist in this model.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Iri(Iri),
    Literal(Literal),
}

impl Term {
    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(iri) => Some(iri),
            Term::Literal(_) => None,
        }
    }

    pub fn as_literal(&self) -> Option<&Literal> {
        match self {
            Term::Iri(_) => None,
            Term::Literal(lit) => Some(lit),
        }
    }

    /// String value used by query filters: IRI text or literal lexical form.
    pub fn string_value(&self) -> &str {
        match self {
            Term::Iri(iri) => iri.as_str(),
            Term::Literal(lit) => lit.lexical_form(),
        }
    }
}

impl From<Iri> for Term {
    fn from(iri: Iri) -> Self {
        Term::Iri(iri)
    }
}

impl From<Literal> for Term {
    fn from(lit: Literal) -> Self {
        Term::Literal(lit)
    }
}

/// A triple. Subject and predicate are IRIs by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub subject: Iri,
    pub predicate: Iri,
    pub object: Term,
}

impl Triple {
    pub fn new(subject: Iri, predicate: Iri, object: impl Into<Term>) -> Self {
        Self {
            subject,
            predicate,
            object: object.into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iri_accepts_typical_forms() {
        for text in [
            "http://w3id.org/cc-ontology#CVE",
            "https://example.com/a/b?q=1#frag",
            "urn:uuid:1234",
            "file:///tmp/x.nt",
        ] {
            assert_eq!(Iri::new(text).unwrap().as_str(), text);
        }
    }

    #[test]
    fn iri_rejects_invalid_forms() {
        for text in ["", "no-scheme", ":rest", "http://a b", "http://a<b", "http://a\"b", "tab\there:x"] {
            assert!(Iri::new(text).is_err(), "accepted {text:?}");
        }
    }

    #[test]
    fn iri_local_name_takes_fragment_or_last_segment() {
        assert_eq!(Iri::new("http://x/y#Metric").unwrap().local_name(), "Metric");
        assert_eq!(
            Iri::new("http://w3id.org/cc-ontology/ind/cve/CVE-2021-24109")
                .unwrap()
                .local_name(),
            "CVE-2021-24109"
        );
        assert_eq!(Iri::new("urn:isbn:123").unwrap().local_name(), "urn:isbn:123");
        // Empty tail falls back to the full text.
        assert_eq!(Iri::new("http://x/").unwrap().local_name(), "http://x/");
    }

    #[test]
    fn plain_and_typed_string_literals_are_identical() {
        let a = Literal::string("hi");
        let b = Literal::typed("hi", vocab::xsd_string()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.datatype().as_str(), vocab::XSD_STRING);
    }

    #[test]
    fn lang_literal_requires_tag_and_tag_requires_langstring() {
        let lit = Literal::lang_string("hello", "en-US").unwrap();
        assert_eq!(lit.language(), Some("en-us"));
        assert_eq!(lit.datatype().as_str(), vocab::RDF_LANG_STRING);
        assert!(Literal::typed("hello", vocab::rdf_lang_string()).is_err());
        assert!(Literal::lang_string("hello", "").is_err());
        assert!(Literal::lang_string("hello", "en US").is_err());
        assert!(Literal::lang_string("hello", "7en").is_err());
    }

    #[test]
    fn decimal_lexical_forms_are_checked() {
        for ok in ["0", "6.4", "-0.5", "+10.25", "10.", ".5"] {
            assert!(Literal::typed(ok, vocab::xsd_decimal()).is_ok(), "{ok}");
        }
        for bad in ["", "6.4e2", "1.2.3", "nan", "inf", "1_0", "."] {
            assert!(Literal::typed(bad, vocab::xsd_decimal()).is_err(), "{bad}");
        }
    }

    #[test]
    fn decimal_from_float() {
        assert_eq!(Literal::decimal(6.4).unwrap().lexical_form(), "6.4");
        assert_eq!(Literal::decimal(10.0).unwrap().lexical_form(), "10.0");
        assert!(Literal::decimal(f64::NAN).is_err());
        assert!(Literal::decimal(f64::INFINITY).is_err());
    }

    #[test]
    fn unsupported_datatypes_are_rejected() {
        let int = Iri::new("http://www.w3.org/2001/XMLSchema#integer").unwrap();
        assert!(Literal::typed("5", int).is_err());
    }

    #[test]
    fn boolean_lexical_forms() {
        for ok in ["true", "false", "1", "0"] {
            assert!(Literal::typed(ok, vocab::xsd_boolean()).is_ok());
        }
        assert!(Literal::typed("TRUE", vocab::xsd_boolean()).is_err());
    }
}
