//! CVE Record Format 5.x parsing.
//!
//! The deserializer is deliberately lenient about unknown fields (real
//! records carry plenty of extensions) but strict about the fields it maps:
//! bad ids, states, scores, or CVSS enums fail the record.

use serde::Deserialize;

/// Error for one CVE JSON document (or a fatal ingest problem).
#[derive(Debug, thiserror::Error)]
pub enum CveError {
    #[error("JSON parse error at byte {offset}: {message}")]
    Json { offset: usize, message: String },
    #[error("record has no cveMetadata.cveId")]
    MissingCveId,
    #[error("invalid CVE id {0:?} (expected CVE-YYYY-NNNN)")]
    InvalidCveId(String),
    #[error("unsupported dataVersion {0:?} (expected \"5.0\" or \"5.1\")")]
    UnsupportedDataVersion(String),
    #[error("invalid field {field}: {message}")]
    InvalidField { field: String, message: String },
    #[error("failed to read {path}: {reason}")]
    Io { path: String, reason: String },
}

fn invalid(field: impl Into<String>, message: impl Into<String>) -> CveError {
    CveError::InvalidField {
        field: field.into(),
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordState {
    Published,
    Rejected,
}

impl RecordState {
    pub fn as_str(self) -> &'static str {
        match self {
            RecordState::Published => "PUBLISHED",
            RecordState::Rejected => "REJECTED",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Description {
    pub lang: String,
    pub text: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VersionStatus {
    Affected,
    Unaffected,
    Unknown,
}

impl VersionStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            VersionStatus::Affected => "affected",
            VersionStatus::Unaffected => "unaffected",
            VersionStatus::Unknown => "unknown",
        }
    }

    fn parse(text: &str) -> Option<Self> {
        match text {
            "affected" => Some(Self::Affected),
            "unaffected" => Some(Self::Unaffected),
            "unknown" => Some(Self::Unknown),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VersionEntry {
    pub version: String,
    pub status: VersionStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffectedProduct {
    pub vendor: String,
    pub product: String,
    pub platforms: Vec<String>,
    pub versions: Vec<VersionEntry>,
    pub default_status: Option<VersionStatus>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CvssMetric {
    pub cvss_version: String,
    pub base_score: f64,
    pub vector_string: Option<String>,
    pub attack_vector: String,
    pub attack_complexity: String,
    pub privileges_required: String,
    pub user_interaction: String,
    pub scope_value: String,
    pub confidentiality_impact: String,
    pub integrity_impact: String,
    pub availability_impact: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeaknessRef {
    pub cwe_id: String,
    pub cwe_name: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CveRecord {
    pub cve_id: String,
    pub state: RecordState,
    pub assigner_short_name: Option<String>,
    pub date_published: Option<String>,
    pub date_updated: Option<String>,
    pub descriptions: Vec<Description>,
    pub affected: Vec<AffectedProduct>,
    pub metrics: Vec<CvssMetric>,
    pub weaknesses: Vec<WeaknessRef>,
    pub references: Vec<String>,
    pub credits: Vec<(String, String)>,
}

impl CveRecord {
    /// English description if present, otherwise the first one.
    pub fn primary_description(&self) -> Option<&Description> {
        self.descriptions
            .iter()
            .find(|d| d.lang == "en" || d.lang.starts_with("en-") || d.lang.starts_with("en_"))
            .or_else(|| self.descriptions.first())
    }
}

// Raw mirror of the 5.x format; unknown fields are ignored everywhere.

#[derive(Deserialize)]
struct RawRecord {
    #[serde(rename = "dataVersion")]
    data_version: Option<String>,
    #[serde(rename = "cveMetadata")]
    cve_metadata: Option<RawMetadata>,
    containers: Option<RawContainers>,
}

#[derive(Deserialize)]
struct RawMetadata {
    #[serde(rename = "cveId")]
    cve_id: Option<String>,
    state: Option<String>,
    #[serde(rename = "assignerShortName")]
    assigner_short_name: Option<String>,
    #[serde(rename = "datePublished")]
    date_published: Option<String>,
    #[serde(rename = "dateUpdated")]
    date_updated: Option<String>,
}

#[derive(Deserialize)]
struct RawContainers {
    cna: Option<RawCna>,
}

#[derive(Deserialize)]
struct RawCna {
    descriptions: Option<Vec<RawDescription>>,
    affected: Option<Vec<RawAffected>>,
    metrics: Option<Vec<RawMetricEntry>>,
    #[serde(rename = "problemTypes")]
    problem_types: Option<Vec<RawProblemType>>,
    references: Option<Vec<RawReference>>,
    credits: Option<Vec<RawCredit>>,
}

#[derive(Deserialize)]
struct RawDescription {
    lang: Option<String>,
    value: Option<String>,
}

#[derive(Deserialize)]
struct RawAffected {
    vendor: Option<String>,
    product: Option<String>,
    platforms: Option<Vec<String>>,
    versions: Option<Vec<RawVersion>>,
    #[serde(rename = "defaultStatus")]
    default_status: Option<String>,
}

#[derive(Deserialize)]
struct RawVersion {
    version: Option<String>,
    status: Option<String>,
}

#[derive(Deserialize)]
struct RawMetricEntry {
    #[serde(rename = "cvssV3_1")]
    cvss_v3_1: Option<RawCvssV3>,
    #[serde(rename = "cvssV3_0")]
    cvss_v3_0: Option<RawCvssV3>,
}

#[derive(Deserialize)]
struct RawCvssV3 {
    version: Option<String>,
    #[serde(rename = "baseScore")]
    base_score: Option<f64>,
    #[serde(rename = "vectorString")]
    vector_string: Option<String>,
    #[serde(rename = "attackVector")]
    attack_vector: Option<String>,
    #[serde(rename = "attackComplexity")]
    attack_complexity: Option<String>,
    #[serde(rename = "privilegesRequired")]
    privileges_required: Option<String>,
    #[serde(rename = "userInteraction")]
    user_interaction: Option<String>,
    scope: Option<String>,
    #[serde(rename = "confidentialityImpact")]
    confidentiality_impact: Option<String>,
    #[serde(rename = "integrityImpact")]
    integrity_impact: Option<String>,
    #[serde(rename = "availabilityImpact")]
    availability_impact: Option<String>,
}

#[derive(Deserialize)]
struct RawProblemType {
    descriptions: Option<Vec<RawProblemDescription>>,
}

#[derive(Deserialize)]
struct RawProblemDescription {
    #[serde(rename = "cweId")]
    cwe_id: Option<String>,
    description: Option<String>,
}

#[derive(Deserialize)]
struct RawReference {
    url: Option<String>,
}

#[derive(Deserialize)]
struct RawCredit {
    value: Option<String>,
    #[serde(rename = "type")]
    credit_type: Option<String>,
}

/// `CVE-YYYY-NNNN+`: four-digit year, sequence of at least four digits.
fn is_valid_cve_id(text: &str) -> bool {
    let Some(rest) = text.strip_prefix("CVE-") else {
        return false;
    };
    let Some((year, seq)) = rest.split_once('-') else {
        return false;
    };
    year.len() == 4
        && year.bytes().all(|b| b.is_ascii_digit())
        && seq.len() >= 4
        && seq.bytes().all(|b| b.is_ascii_digit())
}

/// `CWE-N+`.
fn is_valid_cwe_id(text: &str) -> bool {
    match text.strip_prefix("CWE-") {
        Some(digits) => !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()),
        None => false,
    }
}

fn check_enum(field: String, value: Option<String>, allowed: &[&str]) -> Result<String, CveError> {
    match value {
        None => Err(invalid(field, "required CVSS field is missing")),
        Some(v) if allowed.contains(&v.as_str()) => Ok(v),
        Some(v) => Err(invalid(
            field,
            format!("value {v:?} not in {{{}}}", allowed.join(", ")),
        )),
    }
}

/// Byte offset of a 1-based (line, column) position in `text`.
fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    let mut line_start = 0;
    let mut remaining = line.saturating_sub(1);
    for (i, b) in text.bytes().enumerate() {
        if remaining == 0 {
            break;
        }
        if b == b'\n' {
            remaining -= 1;
            line_start = i + 1;
        }
    }
    (line_start + column.saturating_sub(1)).min(text.len())
}

/// Parses one CVE Record Format 5.x document.
pub fn parse_cve_json(text: &str) -> Result<CveRecord, CveError> {
    let raw: RawRecord = serde_json::from_str(text).map_err(|e| CveError::Json {
        offset: byte_offset(text, e.line(), e.column()),
        message: e.to_string(),
    })?;

    match raw.data_version.as_deref() {
        Some("5.0") | Some("5.1") => {}
        Some(other) => return Err(CveError::UnsupportedDataVersion(other.to_string())),
        None => return Err(CveError::UnsupportedDataVersion("missing".to_string())),
    }

    let metadata = raw.cve_metadata.ok_or(CveError::MissingCveId)?;
    let cve_id = metadata.cve_id.ok_or(CveError::MissingCveId)?;
    if !is_valid_cve_id(&cve_id) {
        return Err(CveError::InvalidCveId(cve_id));
    }

    let state = match metadata.state.as_deref() {
        Some("PUBLISHED") => RecordState::Published,
        Some("REJECTED") => RecordState::Rejected,
        Some(other) => {
            return Err(invalid(
                "cveMetadata.state",
                format!("value {other:?} not in {{PUBLISHED, REJECTED}}"),
            ))
        }
        None => return Err(invalid("cveMetadata.state", "required field is missing")),
    };

    let cna = raw.containers.and_then(|c| c.cna);
    let (raw_descriptions, raw_affected, raw_metrics, raw_problem_types, raw_references, raw_credits) =
        match cna {
            Some(cna) => (
                cna.descriptions.unwrap_or_default(),
                cna.affected.unwrap_or_default(),
                cna.metrics.unwrap_or_default(),
                cna.problem_types.unwrap_or_default(),
                cna.references.unwrap_or_default(),
                cna.credits.unwrap_or_default(),
            ),
            None => Default::default(),
        };

    let mut descriptions = Vec::new();
    for (i, d) in raw_descriptions.into_iter().enumerate() {
        let text = d
            .value
            .ok_or_else(|| invalid(format!("containers.cna.descriptions[{i}].value"), "required field is missing"))?;
        descriptions.push(Description {
            lang: d.lang.unwrap_or_else(|| "en".to_string()),
            text,
        });
    }

    let mut affected = Vec::new();
    for (i, a) in raw_affected.into_iter().enumerate() {
        let field = |name: &str| format!("containers.cna.affected[{i}].{name}");
        let product = a
            .product
            .filter(|p| !p.is_empty())
            .ok_or_else(|| invalid(field("product"), "required field is missing or empty"))?;
        let mut versions = Vec::new();
        for (j, v) in a.versions.unwrap_or_default().into_iter().enumerate() {
            let vfield = |name: &str| format!("containers.cna.affected[{i}].versions[{j}].{name}");
            let version = v
                .version
                .ok_or_else(|| invalid(vfield("version"), "required field is missing"))?;
            let status_text = v
                .status
                .ok_or_else(|| invalid(vfield("status"), "required field is missing"))?;
            let status = VersionStatus::parse(&status_text).ok_or_else(|| {
                invalid(
                    vfield("status"),
                    format!("value {status_text:?} not in {{affected, unaffected, unknown}}"),
                )
            })?;
            versions.push(VersionEntry { version, status });
        }
        let default_status = match a.default_status {
            None => None,
            Some(text) => Some(VersionStatus::parse(&text).ok_or_else(|| {
                invalid(
                    field("defaultStatus"),
                    format!("value {text:?} not in {{affected, unaffected, unknown}}"),
                )
            })?),
        };
        affected.push(AffectedProduct {
            vendor: a.vendor.unwrap_or_else(|| "n/a".to_string()),
            product,
            platforms: a.platforms.unwrap_or_default(),
            versions,
            default_status,
        });
    }

    let mut metrics = Vec::new();
    if state == RecordState::Published {
        for (i, entry) in raw_metrics.into_iter().enumerate() {
            // Prefer CVSS 3.1; fall back to 3.0; anything else is ignored.
            let (cvss, default_version, key) = if let Some(v) = entry.cvss_v3_1 {
                (v, "3.1", "cvssV3_1")
            } else if let Some(v) = entry.cvss_v3_0 {
                (v, "3.0", "cvssV3_0")
            } else {
                continue;
            };
            let field = |name: &str| format!("containers.cna.metrics[{i}].{key}.{name}");

            let base_score = cvss
                .base_score
                .ok_or_else(|| invalid(field("baseScore"), "required field is missing"))?;
            if !base_score.is_finite() || !(0.0..=10.0).contains(&base_score) {
                return Err(invalid(
                    field("baseScore"),
                    format!("value {base_score} outside [0.0, 10.0]"),
                ));
            }

            metrics.push(CvssMetric {
                cvss_version: cvss.version.unwrap_or_else(|| default_version.to_string()),
                base_score,
                vector_string: cvss.vector_string,
                attack_vector: check_enum(
                    field("attackVector"),
                    cvss.attack_vector,
                    &["NETWORK", "ADJACENT_NETWORK", "LOCAL", "PHYSICAL"],
                )?,
                attack_complexity: check_enum(
                    field("attackComplexity"),
                    cvss.attack_complexity,
                    &["LOW", "HIGH"],
                )?,
                privileges_required: check_enum(
                    field("privilegesRequired"),
                    cvss.privileges_required,
                    &["NONE", "LOW", "HIGH"],
                )?,
                user_interaction: check_enum(
                    field("userInteraction"),
                    cvss.user_interaction,
                    &["NONE", "REQUIRED"],
                )?,
                scope_value: check_enum(field("scope"), cvss.scope, &["UNCHANGED", "CHANGED"])?,
                confidentiality_impact: check_enum(
                    field("confidentialityImpact"),
                    cvss.confidentiality_impact,
                    &["NONE", "LOW", "HIGH"],
                )?,
                integrity_impact: check_enum(
                    field("integrityImpact"),
                    cvss.integrity_impact,
                    &["NONE", "LOW", "HIGH"],
                )?,
                availability_impact: check_enum(
                    field("availabilityImpact"),
                    cvss.availability_impact,
                    &["NONE", "LOW", "HIGH"],
                )?,
            });
        }
    }

    let mut weaknesses = Vec::new();
    for (i, pt) in raw_problem_types.into_iter().enumerate() {
        for (j, d) in pt.descriptions.unwrap_or_default().into_iter().enumerate() {
            // Entries without a cweId are free-text problem descriptions.
            let Some(cwe_id) = d.cwe_id else { continue };
            if !is_valid_cwe_id(&cwe_id) {
                return Err(invalid(
                    format!("containers.cna.problemTypes[{i}].descriptions[{j}].cweId"),
                    format!("value {cwe_id:?} does not match CWE-N"),
                ));
            }
            weaknesses.push(WeaknessRef {
                cwe_id,
                cwe_name: d.description,
            });
        }
    }

    let mut references = Vec::new();
    for (i, r) in raw_references.into_iter().enumerate() {
        let url = r.url.ok_or_else(|| {
            invalid(format!("containers.cna.references[{i}].url"), "required field is missing")
        })?;
        references.push(url);
    }

    let mut credits = Vec::new();
    for (i, c) in raw_credits.into_iter().enumerate() {
        let name = c.value.ok_or_else(|| {
            invalid(format!("containers.cna.credits[{i}].value"), "required field is missing")
        })?;
        credits.push((name, c.credit_type.unwrap_or_else(|| "finder".to_string())));
    }

    Ok(CveRecord {
        cve_id,
        state,
        assigner_short_name: metadata.assigner_short_name,
        date_published: metadata.date_published,
        date_updated: metadata.date_updated,
        descriptions,
        affected,
        metrics,
        weaknesses,
        references,
        credits,
    })
}
