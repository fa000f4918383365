//! The built-in cloud-stack + CVE schema inventory.
//!
//! Frozen: 27 classes, 16 object properties, 27 data properties. The cloud
//! side declares offerServices/provides/hasComponent/componentImpactedByCVE;
//! the CVE side adds twelve object properties whose names are our own
//! (each carries an `rdfs:comment` flagging it as invented) and the data
//! properties mirroring CVE Record 5.x fields.

use super::{ClassDef, DataPropertyDef, ObjectPropertyDef, OntologySchema};
use crate::vocab::{self, Namespaces};

/// (local name, label, parent local name, seeAlso IRI)
const CLASSES: [(&str, &str, Option<&str>, Option<&str>); 27] = [
    ("StackLayer", "Stack Layer", None, None),
    ("Application", "Application", Some("StackLayer"), None),
    ("Data", "Data", Some("StackLayer"), None),
    ("Middleware", "Middleware", Some("StackLayer"), None),
    ("Networking", "Networking", Some("StackLayer"), None),
    ("OperatingSystem", "Operating System", Some("StackLayer"), None),
    ("Runtime", "Runtime", Some("StackLayer"), None),
    ("Servers", "Servers", Some("StackLayer"), None),
    ("Storage", "Storage", Some("StackLayer"), None),
    ("Virtualization", "Virtualization", Some("StackLayer"), None),
    ("CloudProvider", "Cloud Provider", None, Some(vocab::DBPEDIA_COMPANY)),
    ("ServiceModel", "Service Model", None, None),
    (
        "InfrastructureAsAService",
        "Infrastructure as a Service",
        Some("ServiceModel"),
        None,
    ),
    ("PlatformAsAService", "Platform as a Service", Some("ServiceModel"), None),
    ("SoftwareAsAService", "Software as a Service", Some("ServiceModel"), None),
    ("FunctionAsAService", "Function as a Service", Some("ServiceModel"), None),
    (
        "CommunicationAsAService",
        "Communication as a Service",
        Some("ServiceModel"),
        None,
    ),
    ("DesktopAsAService", "Desktop as a Service", Some("ServiceModel"), None),
    ("ServiceComponent", "Service Component", None, None),
    ("CVE", "Common Vulnerabilities and Exposures (CVE)", None, None),
    ("CVEInformationSource", "CVE Information Source", None, None),
    ("Contributor", "Contributor", None, None),
    ("Metric", "Metric", None, None),
    ("Platform", "Platform", None, None),
    ("Product", "Product", None, None),
    ("ProductVendor", "Product Vendor", None, None),
    ("CWE", "Common Weakness Enumeration (CWE)", None, None),
];

/// (local name, domain, range, comment)
const OBJECT_PROPERTIES: [(&str, &str, &str, Option<&str>); 16] = [
    ("offerServices", "CloudProvider", "ServiceModel", None),
    ("provides", "ServiceModel", "StackLayer", None),
    ("hasComponent", "ServiceModel", "ServiceComponent", None),
    ("componentImpactedByCVE", "ServiceComponent", "CVE", None),
    (
        "hasMetric",
        "CVE",
        "Metric",
        Some("invented; links a CVE record to its CVSS metric entries"),
    ),
    (
        "hasWeakness",
        "CVE",
        "CWE",
        Some("invented; links a CVE record to the CWE weaknesses it observes"),
    ),
    (
        "affectsProduct",
        "CVE",
        "Product",
        Some("invented; links a CVE record to an affected product"),
    ),
    (
        "hasVendor",
        "Product",
        "ProductVendor",
        Some("invented; links a product to its vendor"),
    ),
    (
        "applicablePlatform",
        "CVE",
        "Platform",
        Some("invented; links a CVE record to a platform it applies to"),
    ),
    (
        "hasInformationSource",
        "CVE",
        "CVEInformationSource",
        Some("invented; populated from the record assigner short name"),
    ),
    (
        "hasContributor",
        "CVE",
        "Contributor",
        Some("invented; links a CVE record to credited contributors"),
    ),
    (
        "sourceOrganization",
        "CVEInformationSource",
        "ProductVendor",
        Some("invented; links an information source to its organization"),
    ),
    (
        "metricOfRecord",
        "Metric",
        "CVE",
        Some("invented; inverse direction of hasMetric"),
    ),
    (
        "productOfComponent",
        "ServiceComponent",
        "Product",
        Some("invented; links a service component to a matched product"),
    ),
    (
        "weaknessObservedIn",
        "CWE",
        "CVE",
        Some("invented; inverse direction of hasWeakness"),
    ),
    (
        "vendorOffersService",
        "ProductVendor",
        "ServiceModel",
        Some("invented; links a product vendor to service models it offers"),
    ),
];

/// (local name, domain, datatype)
const DATA_PROPERTIES: [(&str, &str, &str); 27] = [
    ("cveId", "CVE", vocab::XSD_STRING),
    ("description", "CVE", vocab::XSD_STRING),
    ("datePublished", "CVE", vocab::XSD_DATE_TIME),
    ("dateUpdated", "CVE", vocab::XSD_DATE_TIME),
    ("recordState", "CVE", vocab::XSD_STRING),
    ("assignerShortName", "CVE", vocab::XSD_STRING),
    ("referenceUrl", "CVE", vocab::XSD_STRING),
    ("baseScore", "Metric", vocab::XSD_DECIMAL),
    ("cvssVersion", "Metric", vocab::XSD_STRING),
    ("vectorString", "Metric", vocab::XSD_STRING),
    ("attackVector", "Metric", vocab::XSD_STRING),
    ("attackComplexity", "Metric", vocab::XSD_STRING),
    ("privilegesRequired", "Metric", vocab::XSD_STRING),
    ("userInteraction", "Metric", vocab::XSD_STRING),
    ("scopeValue", "Metric", vocab::XSD_STRING),
    ("confidentialityImpact", "Metric", vocab::XSD_STRING),
    ("integrityImpact", "Metric", vocab::XSD_STRING),
    ("availabilityImpact", "Metric", vocab::XSD_STRING),
    ("productName", "Product", vocab::XSD_STRING),
    ("defaultStatus", "Product", vocab::XSD_STRING),
    ("versionValue", "Product", vocab::XSD_STRING),
    ("versionStatus", "Product", vocab::XSD_STRING),
    ("vendorName", "ProductVendor", vocab::XSD_STRING),
    ("cweId", "CWE", vocab::XSD_STRING),
    ("cweName", "CWE", vocab::XSD_STRING),
    ("contributorName", "Contributor", vocab::XSD_STRING),
    ("platformName", "Platform", vocab::XSD_STRING),
];

pub(super) fn build(ns: &Namespaces) -> OntologySchema {
    let classes = CLASSES
        .iter()
        .map(|(local, label, parent, see_also)| ClassDef {
            iri: ns.schema_term(local),
            label: (*label).to_string(),
            parent: parent.map(|p| ns.schema_term(p)),
            see_also: see_also.map(|iri| {
                crate::rdf::Iri::new(iri).expect("seeAlso annotation is a valid IRI")
            }),
        })
        .collect();
    let object_properties = OBJECT_PROPERTIES
        .iter()
        .map(|(local, domain, range, comment)| ObjectPropertyDef {
            iri: ns.schema_term(local),
            label: (*local).to_string(),
            domain: ns.schema_term(domain),
            range: ns.schema_term(range),
            comment: comment.map(str::to_string),
        })
        .collect();
    let data_properties = DATA_PROPERTIES
        .iter()
        .map(|(local, domain, datatype)| DataPropertyDef {
            iri: ns.schema_term(local),
            label: (*local).to_string(),
            domain: ns.schema_term(domain),
            datatype: crate::rdf::Iri::new(*datatype).expect("datatype is a valid IRI"),
        })
        .collect();
    OntologySchema::new(classes, object_properties, data_properties)
        .expect("built-in schema is internally consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::Triple;

    #[test]
    fn inventory_counts_are_frozen() {
        let schema = OntologySchema::builtin(&Namespaces::default());
        assert_eq!(schema.classes().len(), 27);
        assert_eq!(schema.object_properties().len(), 16);
        assert_eq!(schema.data_properties().len(), 27);
    }

    #[test]
    fn named_subset_is_present_verbatim() {
        let ns = Namespaces::default();
        let schema = OntologySchema::builtin(&ns);
        for class in [
            "StackLayer",
            "Application",
            "Data",
            "Middleware",
            "Networking",
            "OperatingSystem",
            "Runtime",
            "Servers",
            "Storage",
            "Virtualization",
            "CloudProvider",
            "ServiceModel",
            "InfrastructureAsAService",
            "PlatformAsAService",
            "SoftwareAsAService",
            "FunctionAsAService",
            "CommunicationAsAService",
            "DesktopAsAService",
            "ServiceComponent",
            "CVE",
            "CVEInformationSource",
            "Contributor",
            "Metric",
            "Platform",
            "Product",
            "ProductVendor",
            "CWE",
        ] {
            assert!(schema.class(&ns.schema_term(class)).is_some(), "missing class {class}");
        }
        for prop in ["offerServices", "provides", "hasComponent", "componentImpactedByCVE"] {
            assert!(
                schema.object_property(&ns.schema_term(prop)).is_some(),
                "missing object property {prop}"
            );
        }
    }

    #[test]
    fn emitted_graph_matches_hand_count() {
        let ns = Namespaces::default();
        let schema = OntologySchema::builtin(&ns);
        let g = schema.emit_triples();
        // classes: 27 type + 27 label + 15 subClassOf + 1 seeAlso = 70
        // object properties: 16 * (type+label+domain+range) + 12 comments = 76
        // data properties: 27 * (type+label+domain+range) = 108
        assert_eq!(g.len(), 254);
    }

    #[test]
    fn emitted_graph_contains_named_declarations() {
        let ns = Namespaces::default();
        let g = OntologySchema::builtin(&ns).emit_triples();
        assert!(g.contains(&Triple::new(
            ns.schema_term("PlatformAsAService"),
            vocab::rdfs_sub_class_of(),
            ns.schema_term("ServiceModel"),
        )));
        assert!(g.contains(&Triple::new(
            ns.schema_term("componentImpactedByCVE"),
            vocab::rdfs_range(),
            ns.schema_term("CVE"),
        )));
        assert!(g.contains(&Triple::new(
            ns.schema_term("CloudProvider"),
            vocab::rdfs_see_also(),
            crate::rdf::Iri::new(vocab::DBPEDIA_COMPANY).unwrap(),
        )));
        assert!(g.contains(&Triple::new(
            ns.schema_term("baseScore"),
            vocab::rdfs_range(),
            vocab::xsd_decimal(),
        )));
    }

    #[test]
    fn invented_properties_carry_the_flag() {
        let ns = Namespaces::default();
        let schema = OntologySchema::builtin(&ns);
        let invented: Vec<_> = schema
            .object_properties()
            .iter()
            .filter(|p| p.comment.as_deref().is_some_and(|c| c.contains("invented")))
            .collect();
        assert_eq!(invented.len(), 12);
        for core in ["offerServices", "provides", "hasComponent", "componentImpactedByCVE"] {
            let p = schema.object_property(&ns.schema_term(core)).unwrap();
            assert!(p.comment.is_none(), "{core} must not be flagged");
        }
    }

    #[test]
    fn layer_individual_typed_by_subclass_satisfies_stacklayer() {
        let ns = Namespaces::default();
        let schema = OntologySchema::builtin(&ns);
        assert!(schema.is_subclass_of(&ns.schema_term("Runtime"), &ns.schema_term("StackLayer")));
        assert!(!schema.is_subclass_of(&ns.schema_term("Runtime"), &ns.schema_term("ServiceModel")));
    }

    #[test]
    fn custom_namespace_moves_every_term() {
        let ns = Namespaces::from_base("https://kg.example.org/x#").unwrap();
        let schema = OntologySchema::builtin(&ns);
        assert!(schema
            .classes()
            .iter()
            .all(|c| c.iri.as_str().starts_with("https://kg.example.org/x#")));
    }
}
