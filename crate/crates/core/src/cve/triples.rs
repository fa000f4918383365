//! Lowering of parsed CVE records onto the ontology.
//!
//! IRI minting is deterministic so re-ingestion is idempotent: the CVE
//! individual is `ind/cve/<cveId>`, metrics hang off it as `<cve>/metric/N`,
//! and products/vendors/weaknesses/platforms/contributors/sources derive
//! from slugs of their names. Product IRIs are global (shared across CVEs,
//! they are the linker's join keys); metric IRIs are per-CVE.

use crate::rdf::{Graph, Iri, Literal, Triple};
use crate::vocab::{self, slugify, Namespaces};

use super::record::{CveRecord, RecordState};

/// Materializes one record as instance triples.
///
/// REJECTED records keep only their identity: typing, cveId, recordState.
pub fn record_to_triples(record: &CveRecord, ns: &Namespaces) -> Graph {
    let mut g = Graph::new();
    let rdf_type = vocab::rdf_type();
    let rdfs_label = vocab::rdfs_label();

    let cve = ns.individual(&format!("cve/{}", record.cve_id));
    g.insert(Triple::new(cve.clone(), rdf_type.clone(), ns.schema_term("CVE")));
    g.insert(Triple::new(cve.clone(), ns.schema_term("cveId"), string(&record.cve_id)));
    g.insert(Triple::new(
        cve.clone(),
        ns.schema_term("recordState"),
        string(record.state.as_str()),
    ));
    if record.state == RecordState::Rejected {
        return g;
    }

    if let Some(description) = record.primary_description() {
        g.insert(Triple::new(
            cve.clone(),
            ns.schema_term("description"),
            string(&description.text),
        ));
    }
    if let Some(date) = &record.date_published {
        g.insert(Triple::new(
            cve.clone(),
            ns.schema_term("datePublished"),
            date_time(date),
        ));
    }
    if let Some(date) = &record.date_updated {
        g.insert(Triple::new(cve.clone(), ns.schema_term("dateUpdated"), date_time(date)));
    }
    for url in &record.references {
        g.insert(Triple::new(cve.clone(), ns.schema_term("referenceUrl"), string(url)));
    }

    if let Some(assigner) = &record.assigner_short_name {
        g.insert(Triple::new(
            cve.clone(),
            ns.schema_term("assignerShortName"),
            string(assigner),
        ));
        let source = ns.individual(&format!("source/{}", slugify(assigner)));
        g.insert(Triple::new(
            cve.clone(),
            ns.schema_term("hasInformationSource"),
            source.clone(),
        ));
        g.insert(Triple::new(
            source.clone(),
            rdf_type.clone(),
            ns.schema_term("CVEInformationSource"),
        ));
        g.insert(Triple::new(source, rdfs_label.clone(), string(assigner)));
    }

    for (i, metric) in record.metrics.iter().enumerate() {
        let iri = Iri::new(format!("{}/metric/{i}", cve.as_str()))
            .expect("metric IRI derives from a valid CVE IRI");
        g.insert(Triple::new(cve.clone(), ns.schema_term("hasMetric"), iri.clone()));
        g.insert(Triple::new(iri.clone(), rdf_type.clone(), ns.schema_term("Metric")));
        g.insert(Triple::new(
            iri.clone(),
            ns.schema_term("baseScore"),
            Literal::decimal(metric.base_score).expect("base score is finite"),
        ));
        g.insert(Triple::new(
            iri.clone(),
            ns.schema_term("cvssVersion"),
            string(&metric.cvss_version),
        ));
        if let Some(vector) = &metric.vector_string {
            g.insert(Triple::new(iri.clone(), ns.schema_term("vectorString"), string(vector)));
        }
        for (property, value) in [
            ("attackVector", &metric.attack_vector),
            ("attackComplexity", &metric.attack_complexity),
            ("privilegesRequired", &metric.privileges_required),
            ("userInteraction", &metric.user_interaction),
            ("scopeValue", &metric.scope_value),
            ("confidentialityImpact", &metric.confidentiality_impact),
            ("integrityImpact", &metric.integrity_impact),
            ("availabilityImpact", &metric.availability_impact),
        ] {
            g.insert(Triple::new(iri.clone(), ns.schema_term(property), string(value)));
        }
    }

    for weakness in &record.weaknesses {
        let iri = ns.individual(&format!("cwe/{}", weakness.cwe_id));
        g.insert(Triple::new(cve.clone(), ns.schema_term("hasWeakness"), iri.clone()));
        g.insert(Triple::new(iri.clone(), rdf_type.clone(), ns.schema_term("CWE")));
        g.insert(Triple::new(iri.clone(), ns.schema_term("cweId"), string(&weakness.cwe_id)));
        if let Some(name) = &weakness.cwe_name {
            g.insert(Triple::new(iri, ns.schema_term("cweName"), string(name)));
        }
    }

    for product in &record.affected {
        let iri = ns.individual(&format!(
            "product/{}/{}",
            slugify(&product.vendor),
            slugify(&product.product)
        ));
        g.insert(Triple::new(cve.clone(), ns.schema_term("affectsProduct"), iri.clone()));
        g.insert(Triple::new(iri.clone(), rdf_type.clone(), ns.schema_term("Product")));
        g.insert(Triple::new(iri.clone(), rdfs_label.clone(), string(&product.product)));
        g.insert(Triple::new(
            iri.clone(),
            ns.schema_term("productName"),
            string(&product.product),
        ));
        if let Some(status) = product.default_status {
            g.insert(Triple::new(
                iri.clone(),
                ns.schema_term("defaultStatus"),
                string(status.as_str()),
            ));
        }
        for version in &product.versions {
            g.insert(Triple::new(
                iri.clone(),
                ns.schema_term("versionValue"),
                string(&version.version),
            ));
            g.insert(Triple::new(
                iri.clone(),
                ns.schema_term("versionStatus"),
                string(version.status.as_str()),
            ));
        }

        let vendor = ns.individual(&format!("vendor/{}", slugify(&product.vendor)));
        g.insert(Triple::new(iri, ns.schema_term("hasVendor"), vendor.clone()));
        g.insert(Triple::new(vendor.clone(), rdf_type.clone(), ns.schema_term("ProductVendor")));
        g.insert(Triple::new(vendor.clone(), rdfs_label.clone(), string(&product.vendor)));
        g.insert(Triple::new(vendor, ns.schema_term("vendorName"), string(&product.vendor)));

        for platform in &product.platforms {
            let iri = ns.individual(&format!("platform/{}", slugify(platform)));
            g.insert(Triple::new(
                cve.clone(),
                ns.schema_term("applicablePlatform"),
                iri.clone(),
            ));
            g.insert(Triple::new(iri.clone(), rdf_type.clone(), ns.schema_term("Platform")));
            g.insert(Triple::new(iri.clone(), ns.schema_term("platformName"), string(platform)));
            g.insert(Triple::new(iri, rdfs_label.clone(), string(platform)));
        }
    }

    for (name, _credit_type) in &record.credits {
        let iri = ns.individual(&format!("contributor/{}", slugify(name)));
        g.insert(Triple::new(cve.clone(), ns.schema_term("hasContributor"), iri.clone()));
        g.insert(Triple::new(iri.clone(), rdf_type.clone(), ns.schema_term("Contributor")));
        g.insert(Triple::new(iri.clone(), ns.schema_term("contributorName"), string(name)));
        g.insert(Triple::new(iri, rdfs_label.clone(), string(name)));
    }

    g
}

fn date_time(lexical: &str) -> Literal {
    Literal::typed(lexical, vocab::xsd_date_time()).expect("dateTime accepts any lexical form")
}

fn string(lexical: &str) -> Literal {
    Literal::string(lexical)
}
