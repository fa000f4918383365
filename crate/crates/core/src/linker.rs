//! Product-to-component linking.
//!
//! CVE records name affected products in free-form vendor text; the catalog
//! names service components. This module bridges the two by exact matching
//! on normalized names: catalog entries compile into `MatchRule`s, and
//! `link` scans a graph's `Product` individuals for rule hits, emitting one
//! `componentImpactedByCVE` edge per (component, CVE) pair it can justify.
//!
//! Matching is deliberately exact (after normalization). Fuzzy behavior is
//! expressed through aliases on the catalog side, where it stays auditable.

use std::collections::BTreeSet;
use std::fmt;

use crate::catalog::ServiceCatalog;
use crate::rdf::{Graph, Iri, Term, Triple};
use crate::vocab::{self, Namespaces};

/// Where a match pattern came from: the component's display name or one of
/// its aliases. Kept verbatim for audit output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleOrigin {
    ComponentName,
    Alias(String),
}

impl fmt::Display for RuleOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleOrigin::ComponentName => f.write_str("component name"),
            RuleOrigin::Alias(text) => write!(f, "alias '{text}'"),
        }
    }
}

/// One normalized pattern a product name can hit. A vendor constraint, when
/// present, must also match the product's vendor name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchPattern {
    pub vendor: Option<String>,
    pub product: String,
    pub origin: RuleOrigin,
}

/// All patterns for one catalog component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchRule {
    pub component_id: String,
    pub component_iri: Iri,
    /// Non-empty; pre-normalized; distinct on (vendor, product) with the
    /// first origin kept.
    pub patterns: Vec<MatchPattern>,
}

/// One emitted link with the evidence that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkEntry {
    pub component: Iri,
    pub cve: Iri,
    pub product: Iri,
    /// Raw productName literal that matched (pre-normalization).
    pub product_name: String,
    pub origin: RuleOrigin,
}

/// Counters summarizing one link run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinkStats {
    pub products: usize,
    pub matched_products: usize,
    pub links: usize,
}

/// Audit trail for a link run: every (component, CVE) pair with the first
/// rule that justified it, plus the products nothing matched.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinkReport {
    pub links: Vec<LinkEntry>,
    pub unmatched_products: Vec<Iri>,
    pub stats: LinkStats,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinkError {
    #[error("no link between {component} and {cve} in the report")]
    LinkNotFound { component: String, cve: String },
}

/// Case-folds, strips the edges, collapses internal whitespace, and turns
/// the separators `.`, `_`, `-`, `/` into spaces.
pub fn normalize_name(text: &str) -> String {
    let spaced: String = text
        .chars()
        .map(|c| if matches!(c, '.' | '_' | '-' | '/') { ' ' } else { c })
        .collect();
    spaced
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
        .to_lowercase()
}

/// Compiles one rule per catalog component. The component name always
/// contributes a pattern; each alias adds one more, and an alias written
/// `vendor/product` carries a vendor constraint (split at the first `/`).
pub fn build_rules(catalog: &ServiceCatalog, ns: &Namespaces) -> Vec<MatchRule> {
    catalog
        .components()
        .iter()
        .map(|component| {
            let mut patterns = vec![MatchPattern {
                vendor: None,
                product: normalize_name(&component.name),
                origin: RuleOrigin::ComponentName,
            }];
            for alias in &component.aliases {
                let (vendor, product) = match alias.split_once('/') {
                    Some((vendor, product)) => {
                        (Some(normalize_name(vendor)), normalize_name(product))
                    }
                    None => (None, normalize_name(alias)),
                };
                patterns.push(MatchPattern {
                    vendor,
                    product,
                    origin: RuleOrigin::Alias(alias.clone()),
                });
            }
            // Set semantics on (vendor, product); separators-only aliases
            // normalize to nothing and would match nothing meaningful.
            let mut seen = BTreeSet::new();
            patterns.retain(|p| {
                !p.product.is_empty() && seen.insert((p.vendor.clone(), p.product.clone()))
            });
            MatchRule {
                component_id: component.id.clone(),
                component_iri: ns.individual(&component.id),
                patterns,
            }
        })
        .collect()
}

/// Matches every typed `Product` individual in `graph` against `rules` and
/// returns the new `componentImpactedByCVE` triples plus an audit report.
///
/// The returned graph contains only triples absent from the input, so
/// re-linking a merged graph yields an empty delta. Products are visited in
/// sorted IRI order and rules in catalog order, which makes the report's
/// first-match attribution deterministic.
pub fn link(graph: &Graph, rules: &[MatchRule], ns: &Namespaces) -> (Graph, LinkReport) {
    let rdf_type = vocab::rdf_type();
    let product_class: Term = ns.schema_term("Product").into();
    let product_name_prop = ns.schema_term("productName");
    let vendor_name_prop = ns.schema_term("vendorName");
    let has_vendor = ns.schema_term("hasVendor");
    let affects_product = ns.schema_term("affectsProduct");
    let impacted_by = ns.schema_term("componentImpactedByCVE");

    // Sort explicitly: `matching` orders by rendered triple, where the
    // closing `>` makes an IRI that prefixes another sort after it.
    let mut products: Vec<Iri> = graph
        .matching(None, Some(&rdf_type), Some(&product_class))
        .into_iter()
        .map(|t| t.subject)
        .collect();
    products.sort();

    let mut report = LinkReport::default();
    report.stats.products = products.len();
    let mut new_triples = Graph::new();
    let mut seen_pairs = BTreeSet::new();

    for product in &products {
        let mut names: Vec<String> = graph
            .matching(Some(product), Some(&product_name_prop), None)
            .into_iter()
            .filter_map(|t| match t.object {
                Term::Literal(lit) => Some(lit.lexical_form().to_owned()),
                Term::Iri(_) => None,
            })
            .collect();
        names.sort();
        let vendors: BTreeSet<String> = graph
            .matching(Some(product), Some(&has_vendor), None)
            .into_iter()
            .filter_map(|t| match t.object {
                Term::Iri(vendor) => Some(vendor),
                Term::Literal(_) => None,
            })
            .flat_map(|vendor| {
                graph
                    .matching(Some(&vendor), Some(&vendor_name_prop), None)
                    .into_iter()
                    .filter_map(|t| match t.object {
                        Term::Literal(lit) => Some(normalize_name(lit.lexical_form())),
                        Term::Iri(_) => None,
                    })
            })
            .collect();

        let mut product_matched = false;
        for rule in rules {
            let hit = rule.patterns.iter().find_map(|pattern| {
                let vendor_ok = pattern
                    .vendor
                    .as_ref()
                    .is_none_or(|v| vendors.contains(v));
                if !vendor_ok {
                    return None;
                }
                names
                    .iter()
                    .find(|name| normalize_name(name) == pattern.product)
                    .map(|name| (name.clone(), pattern.origin.clone()))
            });
            let Some((matched_name, origin)) = hit else {
                continue;
            };
            product_matched = true;

            let product_term: Term = product.clone().into();
            let mut cves: Vec<Iri> = graph
                .matching(None, Some(&affects_product), Some(&product_term))
                .into_iter()
                .map(|t| t.subject)
                .collect();
            cves.sort();
            for cve in cves {
                let key = (rule.component_iri.clone(), cve.clone());
                if !seen_pairs.insert(key) {
                    continue;
                }
                let triple =
                    Triple::new(rule.component_iri.clone(), impacted_by.clone(), cve.clone());
                if !graph.contains(&triple) {
                    new_triples.insert(triple);
                }
                report.links.push(LinkEntry {
                    component: rule.component_iri.clone(),
                    cve,
                    product: product.clone(),
                    product_name: matched_name.clone(),
                    origin: origin.clone(),
                });
            }
        }
        if product_matched {
            report.stats.matched_products += 1;
        } else {
            report.unmatched_products.push(product.clone());
        }
    }

    report.stats.links = report.links.len();
    (new_triples, report)
}

/// Renders the audit line for one linked pair, or an error if the report
/// does not contain it.
pub fn explain_link(report: &LinkReport, component: &Iri, cve: &Iri) -> Result<String, LinkError> {
    report
        .links
        .iter()
        .find(|entry| entry.component == *component && entry.cve == *cve)
        .map(|entry| {
            format!(
                "{} ← {} via product '{}' ({})",
                entry.component.local_name(),
                entry.cve.local_name(),
                entry.product_name,
                entry.origin,
            )
        })
        .ok_or_else(|| LinkError::LinkNotFound {
            component: component.as_str().to_owned(),
            cve: cve.as_str().to_owned(),
        })
}

impl LinkReport {
    /// Pretty JSON rendering with IRIs as plain strings.
    pub fn to_json(&self) -> String {
        let links: Vec<serde_json::Value> = self
            .links
            .iter()
            .map(|entry| {
                serde_json::json!({
                    "component": entry.component.as_str(),
                    "cve": entry.cve.as_str(),
                    "product": entry.product.as_str(),
                    "productName": entry.product_name,
                    "origin": entry.origin.to_string(),
                })
            })
            .collect();
        let unmatched: Vec<&str> = self
            .unmatched_products
            .iter()
            .map(Iri::as_str)
            .collect();
        let value = serde_json::json!({
            "links": links,
            "unmatchedProducts": unmatched,
            "stats": {
                "products": self.stats.products,
                "matchedProducts": self.stats.matched_products,
                "links": self.stats.links,
            },
        });
        serde_json::to_string_pretty(&value).expect("report JSON is serializable")
    }

    /// Aligned-column text rendering for terminals.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("links: {}\n", self.links.len()));
        let component_width = self
            .links
            .iter()
            .map(|e| e.component.local_name().len())
            .max()
            .unwrap_or(0);
        let cve_width = self
            .links
            .iter()
            .map(|e| e.cve.local_name().len())
            .max()
            .unwrap_or(0);
        for entry in &self.links {
            out.push_str(&format!(
                "  {:<component_width$}  {:<cve_width$}  via product '{}' ({})\n",
                entry.component.local_name(),
                entry.cve.local_name(),
                entry.product_name,
                entry.origin,
            ));
        }
        out.push_str(&format!(
            "unmatched products: {}\n",
            self.unmatched_products.len()
        ));
        for product in &self.unmatched_products {
            out.push_str(&format!("  {}\n", product.as_str()));
        }
        out.push_str(&format!(
            "stats: products {}, matched {}, links {}\n",
            self.stats.products, self.stats.matched_products, self.stats.links
        ));
        out
    }
}
