//! Instance-graph validation against an ontology schema.
//!
//! Validation is advisory: it returns violations and never mutates the
//! graph, so imperfect real-world data can still be loaded and inspected.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::OntologySchema;
use crate::rdf::{render_term, render_triple, Graph, Iri, Term, Triple};
use crate::vocab;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ViolationKind {
    UnknownPredicate,
    UntypedSubject,
    DomainViolation,
    RangeViolation,
    DatatypeMismatch,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ViolationKind::UnknownPredicate => "UnknownPredicate",
            ViolationKind::UntypedSubject => "UntypedSubject",
            ViolationKind::DomainViolation => "DomainViolation",
            ViolationKind::RangeViolation => "RangeViolation",
            ViolationKind::DatatypeMismatch => "DatatypeMismatch",
        };
        f.write_str(name)
    }
}

/// One schema breach, tied to the offending triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub triple: Triple,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} ({})", self.kind, render_triple(&self.triple), self.detail)
    }
}

/// Checks every instance triple against the schema.
///
/// Annotation/vocabulary predicates (`rdf:type`, `rdfs:label`, and friends)
/// are exempt. `rdf:type` triples feed the subject/object type map instead;
/// only types naming declared classes count. Violations come out in a
/// deterministic order (sorted by triple rendering, then by check order).
pub fn validate(instance: &Graph, schema: &OntologySchema) -> Vec<Violation> {
    let exempt = [
        vocab::RDF_TYPE,
        vocab::RDFS_LABEL,
        vocab::RDFS_COMMENT,
        vocab::RDFS_SEE_ALSO,
        vocab::RDFS_SUB_CLASS_OF,
        vocab::RDFS_DOMAIN,
        vocab::RDFS_RANGE,
    ];

    let mut types: HashMap<Iri, BTreeSet<Iri>> = HashMap::new();
    for triple in instance.matching(None, Some(&vocab::rdf_type()), None) {
        if let Term::Iri(class) = &triple.object {
            if schema.class(class).is_some() {
                types.entry(triple.subject).or_default().insert(class.clone());
            }
        }
    }

    let local = |iri: &Iri| iri.local_name().to_string();
    let type_list = |set: &BTreeSet<Iri>| {
        set.iter().map(|t| t.local_name().to_string()).collect::<Vec<_>>().join(", ")
    };

    let mut violations = Vec::new();
    for triple in instance.to_sorted_triples() {
        if exempt.contains(&triple.predicate.as_str()) {
            continue;
        }

        let (domain, is_object_prop) = match (
            schema.object_property(&triple.predicate),
            schema.data_property(&triple.predicate),
        ) {
            (Some(p), _) => (p.domain.clone(), true),
            (None, Some(p)) => (p.domain.clone(), false),
            (None, None) => {
                violations.push(Violation {
                    kind: ViolationKind::UnknownPredicate,
                    detail: format!("predicate {} is not declared in the schema", local(&triple.predicate)),
                    triple,
                });
                continue;
            }
        };

        match types.get(&triple.subject) {
            None => violations.push(Violation {
                kind: ViolationKind::UntypedSubject,
                detail: format!(
                    "subject has no declared rdf:type; property {} requires domain {}",
                    local(&triple.predicate),
                    local(&domain)
                ),
                triple: triple.clone(),
            }),
            Some(subject_types) => {
                if !subject_types.iter().any(|t| schema.is_subclass_of(t, &domain)) {
                    violations.push(Violation {
                        kind: ViolationKind::DomainViolation,
                        detail: format!(
                            "subject is typed {}; property {} requires domain {}",
                            type_list(subject_types),
                            local(&triple.predicate),
                            local(&domain)
                        ),
                        triple: triple.clone(),
                    });
                }
            }
        }

        if is_object_prop {
            let range = schema
                .object_property(&triple.predicate)
                .expect("checked above")
                .range
                .clone();
            match &triple.object {
                Term::Literal(_) => violations.push(Violation {
                    kind: ViolationKind::RangeViolation,
                    detail: format!(
                        "object is a literal; object property {} requires range {}",
                        local(&triple.predicate),
                        local(&range)
                    ),
                    triple,
                }),
                Term::Iri(object) => match types.get(object) {
                    None => violations.push(Violation {
                        kind: ViolationKind::RangeViolation,
                        detail: format!(
                            "object has no declared rdf:type; property {} requires range {}",
                            local(&triple.predicate),
                            local(&range)
                        ),
                        triple: triple.clone(),
                    }),
                    Some(object_types) => {
                        if !object_types.iter().any(|t| schema.is_subclass_of(t, &range)) {
                            violations.push(Violation {
                                kind: ViolationKind::RangeViolation,
                                detail: format!(
                                    "object is typed {}; property {} requires range {}",
                                    type_list(object_types),
                                    local(&triple.predicate),
                                    local(&range)
                                ),
                                triple,
                            });
                        }
                    }
                },
            }
        } else {
            let declared = schema
                .data_property(&triple.predicate)
                .expect("checked above")
                .datatype
                .clone();
            match &triple.object {
                Term::Iri(_) => violations.push(Violation {
                    kind: ViolationKind::RangeViolation,
                    detail: format!(
                        "object is an IRI; data property {} requires a {} literal",
                        local(&triple.predicate),
                        local(&declared)
                    ),
                    triple,
                }),
                Term::Literal(lit) => {
                    if *lit.datatype() != declared {
                        violations.push(Violation {
                            kind: ViolationKind::DatatypeMismatch,
                            detail: format!(
                                "literal has datatype {}; property {} declares {}",
                                local(lit.datatype()),
                                local(&triple.predicate),
                                local(&declared)
                            ),
                            triple,
                        });
                    }
                }
            }
        }
    }
    violations
}

/// One line per violation; empty string when conformant.
pub fn violations_to_text(violations: &[Violation]) -> String {
    let mut out = String::new();
    for v in violations {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}

/// JSON array of violation objects.
pub fn violations_to_json(violations: &[Violation]) -> String {
    let items: Vec<serde_json::Value> = violations
        .iter()
        .map(|v| {
            serde_json::json!({
                "kind": v.kind.to_string(),
                "subject": v.triple.subject.as_str(),
                "predicate": v.triple.predicate.as_str(),
                "object": render_term(&v.triple.object),
                "detail": v.detail,
            })
        })
        .collect();
    serde_json::to_string_pretty(&serde_json::Value::Array(items))
        .expect("violation report serializes")
}
