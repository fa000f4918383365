//! Ontology schema: class/property definitions, triple emission, validation.
//!
//! The built-in schema models a cloud computing stack (providers, service
//! models, stack layers, service components) joined to a CVE vocabulary
//! (records, metrics, products, vendors, weaknesses, platforms, sources,
//! contributors). Its inventory is frozen at 27 classes, 16 object
//! properties, and 27 data properties; golden tests pin those counts.

mod builtin;
mod validate;

pub use validate::{validate, violations_to_json, violations_to_text, Violation, ViolationKind};

use std::collections::HashMap;

use crate::rdf::{Graph, Iri, Literal, Triple};
use crate::vocab::{self, Namespaces};

/// An ontology class declaration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDef {
    pub iri: Iri,
    pub label: String,
    /// Optional superclass; must name another declared class.
    pub parent: Option<Iri>,
    /// Optional cross-reference annotation (emitted as `rdfs:seeAlso`).
    pub see_also: Option<Iri>,
}

/// An object property declaration (IRI-valued).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectPropertyDef {
    pub iri: Iri,
    pub label: String,
    pub domain: Iri,
    pub range: Iri,
    /// Optional annotation (emitted as `rdfs:comment`).
    pub comment: Option<String>,
}

/// A data property declaration (literal-valued).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DataPropertyDef {
    pub iri: Iri,
    pub label: String,
    pub domain: Iri,
    pub datatype: Iri,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchemaError {
    #[error("duplicate IRI in schema: {0}")]
    DuplicateIri(Iri),
    #[error("class {class} names unknown parent {parent}")]
    UnknownParent { class: Iri, parent: Iri },
    #[error("subclass cycle through {0}")]
    SubclassCycle(Iri),
    #[error("property {property} references unknown class {class}")]
    UnknownClassRef { property: Iri, class: Iri },
    #[error("data property {property} uses unsupported datatype {datatype}")]
    UnsupportedDatatype { property: Iri, datatype: Iri },
}

/// An immutable, internally consistent ontology schema.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OntologySchema {
    classes: Vec<ClassDef>,
    object_properties: Vec<ObjectPropertyDef>,
    data_properties: Vec<DataPropertyDef>,
    class_index: HashMap<Iri, usize>,
    object_index: HashMap<Iri, usize>,
    data_index: HashMap<Iri, usize>,
}

impl OntologySchema {
    /// Validates and indexes the definitions: IRIs unique across all three
    /// collections, parents and domains/ranges resolve, subclassing is
    /// acyclic, datatypes are supported.
    pub fn new(
        classes: Vec<ClassDef>,
        object_properties: Vec<ObjectPropertyDef>,
        data_properties: Vec<DataPropertyDef>,
    ) -> Result<Self, SchemaError> {
        let mut class_index = HashMap::new();
        let mut object_index = HashMap::new();
        let mut data_index = HashMap::new();

        for (i, c) in classes.iter().enumerate() {
            if class_index.insert(c.iri.clone(), i).is_some() {
                return Err(SchemaError::DuplicateIri(c.iri.clone()));
            }
        }
        for (i, p) in object_properties.iter().enumerate() {
            if class_index.contains_key(&p.iri) || object_index.insert(p.iri.clone(), i).is_some()
            {
                return Err(SchemaError::DuplicateIri(p.iri.clone()));
            }
        }
        for (i, p) in data_properties.iter().enumerate() {
            if class_index.contains_key(&p.iri)
                || object_index.contains_key(&p.iri)
                || data_index.insert(p.iri.clone(), i).is_some()
            {
                return Err(SchemaError::DuplicateIri(p.iri.clone()));
            }
        }

        for c in &classes {
            if let Some(parent) = &c.parent {
                if !class_index.contains_key(parent) {
                    return Err(SchemaError::UnknownParent {
                        class: c.iri.clone(),
                        parent: parent.clone(),
                    });
                }
            }
        }
        // Subclass chains must terminate: a parent walk longer than the
        // number of classes can only mean a cycle.
        for c in &classes {
            let mut current = c;
            let mut steps = 0;
            while let Some(parent) = &current.parent {
                steps += 1;
                if steps > classes.len() {
                    return Err(SchemaError::SubclassCycle(c.iri.clone()));
                }
                current = &classes[class_index[parent]];
            }
        }

        for p in &object_properties {
            for class in [&p.domain, &p.range] {
                if !class_index.contains_key(class) {
                    return Err(SchemaError::UnknownClassRef {
                        property: p.iri.clone(),
                        class: class.clone(),
                    });
                }
            }
        }
        for p in &data_properties {
            if !class_index.contains_key(&p.domain) {
                return Err(SchemaError::UnknownClassRef {
                    property: p.iri.clone(),
                    class: p.domain.clone(),
                });
            }
            if !matches!(
                p.datatype.as_str(),
                vocab::XSD_STRING
                    | vocab::XSD_DECIMAL
                    | vocab::XSD_DATE_TIME
                    | vocab::XSD_BOOLEAN
                    | vocab::RDF_LANG_STRING
            ) {
                return Err(SchemaError::UnsupportedDatatype {
                    property: p.iri.clone(),
                    datatype: p.datatype.clone(),
                });
            }
        }

        Ok(Self {
            classes,
            object_properties,
            data_properties,
            class_index,
            object_index,
            data_index,
        })
    }

    /// The fixed cloud-stack + CVE schema under the given namespaces.
    pub fn builtin(ns: &Namespaces) -> Self {
        builtin::build(ns)
    }

    pub fn classes(&self) -> &[ClassDef] {
        &self.classes
    }

    pub fn object_properties(&self) -> &[ObjectPropertyDef] {
        &self.object_properties
    }

    pub fn data_properties(&self) -> &[DataPropertyDef] {
        &self.data_properties
    }

    pub fn class(&self, iri: &Iri) -> Option<&ClassDef> {
        self.class_index.get(iri).map(|&i| &self.classes[i])
    }

    pub fn object_property(&self, iri: &Iri) -> Option<&ObjectPropertyDef> {
        self.object_index.get(iri).map(|&i| &self.object_properties[i])
    }

    pub fn data_property(&self, iri: &Iri) -> Option<&DataPropertyDef> {
        self.data_index.get(iri).map(|&i| &self.data_properties[i])
    }

    /// Reflexive-transitive subclass test. An IRI that is not a declared
    /// class has no ancestors beyond itself.
    pub fn is_subclass_of(&self, sub: &Iri, ancestor: &Iri) -> bool {
        let mut current = sub.clone();
        loop {
            if current == *ancestor {
                return true;
            }
            match self.class(&current).and_then(|c| c.parent.clone()) {
                Some(parent) => current = parent,
                None => return false,
            }
        }
    }

    /// Materializes the schema as OWL/RDFS declaration triples.
    pub fn emit_triples(&self) -> Graph {
        let mut g = Graph::new();
        for c in &self.classes {
            g.insert(Triple::new(c.iri.clone(), vocab::rdf_type(), vocab::owl_class()));
            g.insert(Triple::new(
                c.iri.clone(),
                vocab::rdfs_label(),
                Literal::string(&c.label),
            ));
            if let Some(parent) = &c.parent {
                g.insert(Triple::new(
                    c.iri.clone(),
                    vocab::rdfs_sub_class_of(),
                    parent.clone(),
                ));
            }
            if let Some(see_also) = &c.see_also {
                g.insert(Triple::new(
                    c.iri.clone(),
                    vocab::rdfs_see_also(),
                    see_also.clone(),
                ));
            }
        }
        for p in &self.object_properties {
            g.insert(Triple::new(
                p.iri.clone(),
                vocab::rdf_type(),
                vocab::owl_object_property(),
            ));
            g.insert(Triple::new(
                p.iri.clone(),
                vocab::rdfs_label(),
                Literal::string(&p.label),
            ));
            g.insert(Triple::new(p.iri.clone(), vocab::rdfs_domain(), p.domain.clone()));
            g.insert(Triple::new(p.iri.clone(), vocab::rdfs_range(), p.range.clone()));
            if let Some(comment) = &p.comment {
                g.insert(Triple::new(
                    p.iri.clone(),
                    vocab::rdfs_comment(),
                    Literal::string(comment),
                ));
            }
        }
        for p in &self.data_properties {
            g.insert(Triple::new(
                p.iri.clone(),
                vocab::rdf_type(),
                vocab::owl_datatype_property(),
            ));
            g.insert(Triple::new(
                p.iri.clone(),
                vocab::rdfs_label(),
                Literal::string(&p.label),
            ));
            g.insert(Triple::new(p.iri.clone(), vocab::rdfs_domain(), p.domain.clone()));
            g.insert(Triple::new(p.iri.clone(), vocab::rdfs_range(), p.datatype.clone()));
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iri(text: &str) -> Iri {
        Iri::new(text).unwrap()
    }

    fn class(local: &str, parent: Option<&str>) -> ClassDef {
        ClassDef {
            iri: iri(&format!("http://x#{local}")),
            label: local.to_string(),
            parent: parent.map(|p| iri(&format!("http://x#{p}"))),
            see_also: None,
        }
    }

    #[test]
    fn single_root_class_emits_type_and_label() {
        let schema = OntologySchema::new(vec![class("A", None)], vec![], vec![]).unwrap();
        assert_eq!(schema.emit_triples().len(), 2);
    }

    #[test]
    fn duplicate_iris_rejected_across_collections() {
        let err = OntologySchema::new(vec![class("A", None), class("A", None)], vec![], vec![])
            .unwrap_err();
        assert!(matches!(err, SchemaError::DuplicateIri(_)));

        let err = OntologySchema::new(
            vec![class("A", None)],
            vec![],
            vec![DataPropertyDef {
                iri: iri("http://x#A"),
                label: "A".into(),
                domain: iri("http://x#A"),
                datatype: crate::vocab::xsd_string(),
            }],
        )
        .unwrap_err();
        assert!(matches!(err, SchemaError::DuplicateIri(_)));
    }

    #[test]
    fn unknown_parent_and_cycles_rejected() {
        let err =
            OntologySchema::new(vec![class("A", Some("Nope"))], vec![], vec![]).unwrap_err();
        assert!(matches!(err, SchemaError::UnknownParent { .. }));

        let err = OntologySchema::new(
            vec![class("A", Some("B")), class("B", Some("A"))],
            vec![],
            vec![],
        )
        .unwrap_err();
        assert!(matches!(err, SchemaError::SubclassCycle(_)));

        let err = OntologySchema::new(vec![class("A", Some("A"))], vec![], vec![]).unwrap_err();
        assert!(matches!(err, SchemaError::SubclassCycle(_)));
    }

    #[test]
    fn property_class_references_are_checked() {
        let err = OntologySchema::new(
            vec![class("A", None)],
            vec![ObjectPropertyDef {
                iri: iri("http://x#p"),
                label: "p".into(),
                domain: iri("http://x#A"),
                range: iri("http://x#Missing"),
                comment: None,
            }],
            vec![],
        )
        .unwrap_err();
        assert!(matches!(err, SchemaError::UnknownClassRef { .. }));
    }

    #[test]
    fn unsupported_datatype_rejected() {
        let err = OntologySchema::new(
            vec![class("A", None)],
            vec![],
            vec![DataPropertyDef {
                iri: iri("http://x#d"),
                label: "d".into(),
                domain: iri("http://x#A"),
                datatype: iri("http://www.w3.org/2001/XMLSchema#integer"),
            }],
        )
        .unwrap_err();
        assert!(matches!(err, SchemaError::UnsupportedDatatype { .. }));
    }

    #[test]
    fn subclass_closure_is_reflexive_and_transitive() {
        let schema = OntologySchema::new(
            vec![class("A", None), class("B", Some("A")), class("C", Some("B"))],
            vec![],
            vec![],
        )
        .unwrap();
        let a = iri("http://x#A");
        let b = iri("http://x#B");
        let c = iri("http://x#C");
        assert!(schema.is_subclass_of(&c, &c));
        assert!(schema.is_subclass_of(&c, &b));
        assert!(schema.is_subclass_of(&c, &a));
        assert!(!schema.is_subclass_of(&a, &c));
        assert!(!schema.is_subclass_of(&iri("http://x#Other"), &a));
    }
}
