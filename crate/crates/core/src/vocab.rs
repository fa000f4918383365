//! Well-known vocabulary IRIs and the namespace policy.
//!
//! Schema terms (classes and properties) live directly under the schema base
//! (default `http://w3id.org/cc-ontology#`); individuals live under a
//! parallel `/ind/` base (default `http://w3id.org/cc-ontology/ind/`).

use crate::rdf::{Iri, RdfError};

pub const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
pub const RDF_LANG_STRING: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
pub const RDFS_LABEL: &str = "http://www.w3.org/2000/01/rdf-schema#label";
pub const RDFS_COMMENT: &str = "http://www.w3.org/2000/01/rdf-schema#comment";
pub const RDFS_SEE_ALSO: &str = "http://www.w3.org/2000/01/rdf-schema#seeAlso";
pub const RDFS_SUB_CLASS_OF: &str = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
pub const RDFS_DOMAIN: &str = "http://www.w3.org/2000/01/rdf-schema#domain";
pub const RDFS_RANGE: &str = "http://www.w3.org/2000/01/rdf-schema#range";
pub const OWL_CLASS: &str = "http://www.w3.org/2002/07/owl#Class";
pub const OWL_OBJECT_PROPERTY: &str = "http://www.w3.org/2002/07/owl#ObjectProperty";
pub const OWL_DATATYPE_PROPERTY: &str = "http://www.w3.org/2002/07/owl#DatatypeProperty";
pub const XSD_STRING: &str = "http://www.w3.org/2001/XMLSchema#string";
pub const XSD_DECIMAL: &str = "http://www.w3.org/2001/XMLSchema#decimal";
pub const XSD_DATE_TIME: &str = "http://www.w3.org/2001/XMLSchema#dateTime";
pub const XSD_BOOLEAN: &str = "http://www.w3.org/2001/XMLSchema#boolean";
pub const DBPEDIA_COMPANY: &str = "http://dbpedia.org/ontology/Company";

/// Default schema namespace base.
pub const DEFAULT_NAMESPACE_BASE: &str = "http://w3id.org/cc-ontology#";

fn known(text: &str) -> Iri {
    Iri::new(text).expect("well-formed vocabulary IRI")
}

pub fn rdf_type() -> Iri {
    known(RDF_TYPE)
}
pub fn rdf_lang_string() -> Iri {
    known(RDF_LANG_STRING)
}
pub fn rdfs_label() -> Iri {
    known(RDFS_LABEL)
}
pub fn rdfs_comment() -> Iri {
    known(RDFS_COMMENT)
}
pub fn rdfs_see_also() -> Iri {
    known(RDFS_SEE_ALSO)
}
pub fn rdfs_sub_class_of() -> Iri {
    known(RDFS_SUB_CLASS_OF)
}
pub fn rdfs_domain() -> Iri {
    known(RDFS_DOMAIN)
}
pub fn rdfs_range() -> Iri {
    known(RDFS_RANGE)
}
pub fn owl_class() -> Iri {
    known(OWL_CLASS)
}
pub fn owl_object_property() -> Iri {
    known(OWL_OBJECT_PROPERTY)
}
pub fn owl_datatype_property() -> Iri {
    known(OWL_DATATYPE_PROPERTY)
}
pub fn xsd_string() -> Iri {
    known(XSD_STRING)
}
pub fn xsd_decimal() -> Iri {
    known(XSD_DECIMAL)
}
pub fn xsd_date_time() -> Iri {
    known(XSD_DATE_TIME)
}
pub fn xsd_boolean() -> Iri {
    known(XSD_BOOLEAN)
}
pub fn dbpedia_company() -> Iri {
    known(DBPEDIA_COMPANY)
}

/// Namespace configuration for minted IRIs.
///
/// The individual base is derived from the schema base by trimming the
/// trailing `#` or `/` and appending `/ind/`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Namespaces {
    schema_base: String,
    individual_base: String,
}

impl Namespaces {
    /// Builds namespaces from a schema base, which must be a valid IRI
    /// ending in `#` or `/`.
    pub fn from_base(base: &str) -> Result<Self, RdfError> {
        Iri::new(base)?;
        if !base.ends_with('#') && !base.ends_with('/') {
            return Err(RdfError::InvalidIri {
                value: base.to_string(),
                reason: "namespace base must end with '#' or '/'".into(),
            });
        }
        let trimmed = &base[..base.len() - 1];
        Ok(Self {
            schema_base: base.to_string(),
            individual_base: format!("{trimmed}/ind/"),
        })
    }

    pub fn schema_base(&self) -> &str {
        &self.schema_base
    }

    pub fn individual_base(&self) -> &str {
        &self.individual_base
    }

    /// Mints a schema term (class or property) IRI.
    ///
    /// Panics if `local` does not form a valid IRI; callers pass fixed local
    /// names from the built-in inventory.
    pub fn schema_term(&self, local: &str) -> Iri {
        Iri::new(format!("{}{local}", self.schema_base)).expect("schema local name forms a valid IRI")
    }

    /// Mints an individual IRI under the `/ind/` base. `path` may contain
    /// `/` separators (e.g. `cve/CVE-2021-24109`).
    pub fn individual(&self, path: &str) -> Iri {
        Iri::new(format!("{}{path}", self.individual_base))
            .expect("individual path forms a valid IRI")
    }
}

impl Default for Namespaces {
    fn default() -> Self {
        Self::from_base(DEFAULT_NAMESPACE_BASE).expect("default base is valid")
    }
}

/// Lowercases and strips `text` to a slug: ASCII alphanumerics kept, every
/// other character becomes `-`, runs collapsed, leading/trailing `-` trimmed.
pub fn slugify(text: &str) -> String {
    let mut slug = String::with_capacity(text.len());
    let mut pending_dash = false;
    for c in text.chars() {
        if c.is_ascii_alphanumeric() {
            if pending_dash && !slug.is_empty() {
                slug.push('-');
            }
            pending_dash = false;
            slug.push(c.to_ascii_lowercase());
        } else {
            pending_dash = true;
        }
    }
    slug
}

/// True when `text` is already a valid slug: non-empty, lowercase ASCII
/// alphanumerics and single `-` separators, no leading/trailing `-`.
pub fn is_valid_slug(text: &str) -> bool {
    !text.is_empty() && slugify(text) == text
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_namespaces_match_policy() {
        let ns = Namespaces::default();
        assert_eq!(ns.schema_base(), "http://w3id.org/cc-ontology#");
        assert_eq!(ns.individual_base(), "http://w3id.org/cc-ontology/ind/");
        assert_eq!(
            ns.schema_term("CVE").as_str(),
            "http://w3id.org/cc-ontology#CVE"
        );
        assert_eq!(
            ns.individual("cve/CVE-2021-24109").as_str(),
            "http://w3id.org/cc-ontology/ind/cve/CVE-2021-24109"
        );
    }

    #[test]
    fn custom_base_with_slash() {
        let ns = Namespaces::from_base("https://kg.example.org/sec/").unwrap();
        assert_eq!(ns.schema_term("CVE").as_str(), "https://kg.example.org/sec/CVE");
        assert_eq!(ns.individual_base(), "https://kg.example.org/sec/ind/");
    }

    #[test]
    fn base_must_be_iri_ending_in_hash_or_slash() {
        assert!(Namespaces::from_base("http://x/ontology").is_err());
        assert!(Namespaces::from_base("not an iri#").is_err());
    }

    #[test]
    fn slugify_examples() {
        assert_eq!(slugify("Azure Kubernetes Service (AKS)"), "azure-kubernetes-service-aks");
        assert_eq!(slugify("Microsoft"), "microsoft");
        assert_eq!(slugify("  weird -- name  "), "weird-name");
        assert_eq!(slugify("JRE_8.0"), "jre-8-0");
        assert_eq!(slugify(""), "");
        assert_eq!(slugify("---"), "");
    }

    #[test]
    fn slug_validity() {
        assert!(is_valid_slug("aks"));
        assert!(is_valid_slug("azure-appservice"));
        assert!(is_valid_slug("cve-2021"));
        assert!(!is_valid_slug(""));
        assert!(!is_valid_slug("AKS"));
        assert!(!is_valid_slug("a--b"));
        assert!(!is_valid_slug("-a"));
        assert!(!is_valid_slug("a b"));
    }
}
