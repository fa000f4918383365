//! Declarative service catalog: providers, services, components.
//!
//! The catalog is user-supplied JSON rather than code so the modeled service
//! inventory can grow without rebuilds. `to_triples` lowers it to instance
//! triples conforming to the built-in schema.

use std::collections::BTreeSet;

use serde::Deserialize;

use crate::rdf::{Graph, Iri, Literal, Triple};
use crate::vocab::{self, is_valid_slug, Namespaces};

/// The six service model kinds, spelled as in catalog JSON.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
pub enum ServiceModelKind {
    #[serde(rename = "IaaS")]
    Iaas,
    #[serde(rename = "PaaS")]
    Paas,
    #[serde(rename = "SaaS")]
    Saas,
    #[serde(rename = "FaaS")]
    Faas,
    #[serde(rename = "CaaS")]
    Caas,
    #[serde(rename = "DaaS")]
    Daas,
}

impl ServiceModelKind {
    /// The schema class local name for this model.
    pub fn class_name(self) -> &'static str {
        match self {
            ServiceModelKind::Iaas => "InfrastructureAsAService",
            ServiceModelKind::Paas => "PlatformAsAService",
            ServiceModelKind::Saas => "SoftwareAsAService",
            ServiceModelKind::Faas => "FunctionAsAService",
            ServiceModelKind::Caas => "CommunicationAsAService",
            ServiceModelKind::Daas => "DesktopAsAService",
        }
    }

    /// The catalog JSON spelling.
    pub fn code(self) -> &'static str {
        match self {
            ServiceModelKind::Iaas => "IaaS",
            ServiceModelKind::Paas => "PaaS",
            ServiceModelKind::Saas => "SaaS",
            ServiceModelKind::Faas => "FaaS",
            ServiceModelKind::Caas => "CaaS",
            ServiceModelKind::Daas => "DaaS",
        }
    }
}

/// The nine stack layer kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
pub enum LayerKind {
    Application,
    Data,
    Middleware,
    Networking,
    OperatingSystem,
    Runtime,
    Servers,
    Storage,
    Virtualization,
}

impl LayerKind {
    /// The schema class local name (same as the JSON spelling).
    pub fn class_name(self) -> &'static str {
        match self {
            LayerKind::Application => "Application",
            LayerKind::Data => "Data",
            LayerKind::Middleware => "Middleware",
            LayerKind::Networking => "Networking",
            LayerKind::OperatingSystem => "OperatingSystem",
            LayerKind::Runtime => "Runtime",
            LayerKind::Servers => "Servers",
            LayerKind::Storage => "Storage",
            LayerKind::Virtualization => "Virtualization",
        }
    }

    /// The slug used for the layer's individual IRI (`ind/layer/<slug>`).
    pub fn slug(self) -> &'static str {
        match self {
            LayerKind::Application => "application",
            LayerKind::Data => "data",
            LayerKind::Middleware => "middleware",
            LayerKind::Networking => "networking",
            LayerKind::OperatingSystem => "operating-system",
            LayerKind::Runtime => "runtime",
            LayerKind::Servers => "servers",
            LayerKind::Storage => "storage",
            LayerKind::Virtualization => "virtualization",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProviderEntry {
    pub id: String,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ServiceEntry {
    pub id: String,
    pub name: String,
    pub provider: String,
    pub model: ServiceModelKind,
    pub provides: BTreeSet<LayerKind>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentEntry {
    pub id: String,
    pub name: String,
    pub service: String,
    pub layer: Option<LayerKind>,
    /// Extra matching vocabulary for the linker. An alias written
    /// `vendor/product` also constrains the vendor.
    pub aliases: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("catalog JSON error at {path}: {message}")]
    Json { path: String, message: String },
    #[error("invalid id {id:?}: ids must be lowercase alphanumeric+hyphen slugs")]
    InvalidSlug { id: String },
    #[error("duplicate id {id:?}")]
    DuplicateId { id: String },
    #[error("{referer:?} references unknown {kind} {missing:?}")]
    DanglingReference {
        kind: &'static str,
        referer: String,
        missing: String,
    },
    #[error("component {component:?} has an empty alias")]
    EmptyAlias { component: String },
}

/// A validated catalog: ids are slugs, globally unique, and every cross
/// reference resolves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ServiceCatalog {
    providers: Vec<ProviderEntry>,
    services: Vec<ServiceEntry>,
    components: Vec<ComponentEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCatalog {
    providers: Vec<RawProvider>,
    services: Vec<RawService>,
    components: Vec<RawComponent>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProvider {
    id: String,
    name: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawService {
    id: String,
    name: String,
    provider: String,
    model: ServiceModelKind,
    provides: Vec<LayerKind>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComponent {
    id: String,
    name: String,
    service: String,
    layer: Option<LayerKind>,
    aliases: Vec<String>,
}

impl ServiceCatalog {
    /// Parses and validates catalog JSON. JSON shape errors name the
    /// offending path; reference errors name the offending id.
    pub fn from_json(text: &str) -> Result<Self, CatalogError> {
        let mut deserializer = serde_json::Deserializer::from_str(text);
        let raw: RawCatalog =
            serde_path_to_error::deserialize(&mut deserializer).map_err(|e| CatalogError::Json {
                path: e.path().to_string(),
                message: e.inner().to_string(),
            })?;
        Self::new(
            raw.providers
                .into_iter()
                .map(|p| ProviderEntry { id: p.id, name: p.name })
                .collect(),
            raw.services
                .into_iter()
                .map(|s| ServiceEntry {
                    id: s.id,
                    name: s.name,
                    provider: s.provider,
                    model: s.model,
                    provides: s.provides.into_iter().collect(),
                })
                .collect(),
            raw.components
                .into_iter()
                .map(|c| {
                    let mut aliases = Vec::new();
                    for alias in c.aliases {
                        if !aliases.contains(&alias) {
                            aliases.push(alias);
                        }
                    }
                    ComponentEntry {
                        id: c.id,
                        name: c.name,
                        service: c.service,
                        layer: c.layer,
                        aliases,
                    }
                })
                .collect(),
        )
    }

    /// Validates entries assembled in code.
    pub fn new(
        providers: Vec<ProviderEntry>,
        services: Vec<ServiceEntry>,
        components: Vec<ComponentEntry>,
    ) -> Result<Self, CatalogError> {
        let mut ids = BTreeSet::new();
        let all_ids = providers
            .iter()
            .map(|p| &p.id)
            .chain(services.iter().map(|s| &s.id))
            .chain(components.iter().map(|c| &c.id));
        for id in all_ids {
            if !is_valid_slug(id) {
                return Err(CatalogError::InvalidSlug { id: id.clone() });
            }
            if !ids.insert(id.clone()) {
                return Err(CatalogError::DuplicateId { id: id.clone() });
            }
        }
        for service in &services {
            if !providers.iter().any(|p| p.id == service.provider) {
                return Err(CatalogError::DanglingReference {
                    kind: "provider",
                    referer: service.id.clone(),
                    missing: service.provider.clone(),
                });
            }
        }
        for component in &components {
            if !services.iter().any(|s| s.id == component.service) {
                return Err(CatalogError::DanglingReference {
                    kind: "service",
                    referer: component.id.clone(),
                    missing: component.service.clone(),
                });
            }
            if component.aliases.iter().any(|a| a.is_empty()) {
                return Err(CatalogError::EmptyAlias {
                    component: component.id.clone(),
                });
            }
        }
        Ok(Self {
            providers,
            services,
            components,
        })
    }

    pub fn providers(&self) -> &[ProviderEntry] {
        &self.providers
    }

    pub fn services(&self) -> &[ServiceEntry] {
        &self.services
    }

    pub fn components(&self) -> &[ComponentEntry] {
        &self.components
    }

    pub fn service(&self, id: &str) -> Option<&ServiceEntry> {
        self.services.iter().find(|s| s.id == id)
    }

    /// Components attached to a service, in declaration order.
    pub fn service_components(&self, service_id: &str) -> Vec<&ComponentEntry> {
        self.components.iter().filter(|c| c.service == service_id).collect()
    }

    /// The in-repo demonstration catalog: four providers and the Microsoft
    /// service/component inventory used across tests and docs.
    pub fn example() -> Self {
        let providers = [
            ("amazon", "Amazon"),
            ("google", "Google"),
            ("oracle", "Oracle"),
            ("microsoft", "Microsoft"),
        ]
        .map(|(id, name)| ProviderEntry {
            id: id.into(),
            name: name.into(),
        })
        .to_vec();

        let services = vec![
            ServiceEntry {
                id: "office365".into(),
                name: "Microsoft Office 365".into(),
                provider: "microsoft".into(),
                model: ServiceModelKind::Saas,
                provides: BTreeSet::new(),
            },
            ServiceEntry {
                id: "azure-appservice".into(),
                name: "Azure AppService".into(),
                provider: "microsoft".into(),
                model: ServiceModelKind::Paas,
                provides: BTreeSet::new(),
            },
            ServiceEntry {
                id: "aks".into(),
                name: "Azure Kubernetes Service (AKS)".into(),
                provider: "microsoft".into(),
                model: ServiceModelKind::Paas,
                provides: BTreeSet::new(),
            },
        ];

        let component = |id: &str, name: &str, service: &str, layer, aliases: &[&str]| {
            ComponentEntry {
                id: id.into(),
                name: name.into(),
                service: service.into(),
                layer,
                aliases: aliases.iter().map(|a| a.to_string()).collect(),
            }
        };
        let components = vec![
            component(
                "kubernetes",
                "Kubernetes",
                "aks",
                None,
                &["k8s", "microsoft/azure kubernetes service"],
            ),
            component("docker", "Docker", "aks", None, &[]),
            component("containerd", "Containerd", "aks", None, &[]),
            component("azure-java", "Azure Java", "azure-appservice", Some(LayerKind::Runtime), &[]),
            component(
                "azure-linux",
                "Azure Linux",
                "azure-appservice",
                Some(LayerKind::OperatingSystem),
                &[],
            ),
            component(
                "azure-kafka",
                "Azure Kafka",
                "azure-appservice",
                Some(LayerKind::Middleware),
                &[],
            ),
        ];

        Self::new(providers, services, components).expect("example catalog is valid")
    }

    /// Lowers the catalog to instance triples.
    ///
    /// Per provider: typing + label + one `offerServices` per owned service.
    /// Per service: typing under its model subclass + label + one `provides`
    /// per declared layer (layer individuals are typed, label-free) + one
    /// `hasComponent` per component. Per component: `ServiceComponent`
    /// typing + label + optional layer-class typing.
    pub fn to_triples(&self, ns: &Namespaces) -> Graph {
        let mut g = Graph::new();
        let rdf_type = vocab::rdf_type();
        let rdfs_label = vocab::rdfs_label();

        for provider in &self.providers {
            let iri = ns.individual(&provider.id);
            g.insert(Triple::new(iri.clone(), rdf_type.clone(), ns.schema_term("CloudProvider")));
            g.insert(Triple::new(iri, rdfs_label.clone(), Literal::string(&provider.name)));
        }

        for service in &self.services {
            let iri = ns.individual(&service.id);
            g.insert(Triple::new(
                iri.clone(),
                rdf_type.clone(),
                ns.schema_term(service.model.class_name()),
            ));
            g.insert(Triple::new(
                iri.clone(),
                rdfs_label.clone(),
                Literal::string(&service.name),
            ));
            g.insert(Triple::new(
                ns.individual(&service.provider),
                ns.schema_term("offerServices"),
                iri.clone(),
            ));
            for layer in &service.provides {
                let layer_iri = mint_layer_iri(ns, *layer);
                g.insert(Triple::new(iri.clone(), ns.schema_term("provides"), layer_iri.clone()));
                g.insert(Triple::new(
                    layer_iri,
                    rdf_type.clone(),
                    ns.schema_term(layer.class_name()),
                ));
            }
        }

        for component in &self.components {
            let iri = ns.individual(&component.id);
            g.insert(Triple::new(
                iri.clone(),
                rdf_type.clone(),
                ns.schema_term("ServiceComponent"),
            ));
            g.insert(Triple::new(
                iri.clone(),
                rdfs_label.clone(),
                Literal::string(&component.name),
            ));
            if let Some(layer) = component.layer {
                g.insert(Triple::new(
                    iri.clone(),
                    rdf_type.clone(),
                    ns.schema_term(layer.class_name()),
                ));
            }
            g.insert(Triple::new(
                ns.individual(&component.service),
                ns.schema_term("hasComponent"),
                iri,
            ));
        }
        g
    }
}

/// IRI of a stack layer individual (`ind/layer/<slug>`).
pub fn mint_layer_iri(ns: &Namespaces, layer: LayerKind) -> Iri {
    ns.individual(&format!("layer/{}", layer.slug()))
}
