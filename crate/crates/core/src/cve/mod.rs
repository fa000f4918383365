//! CVE Record Format 5.x ingestion.
//!
//! Three stages: [`parse_cve_json`] lifts one JSON document into a
//! [`CveRecord`]; [`record_to_triples`] lowers a record onto the CVE side of
//! the ontology; [`ingest_directory`] batches both over a directory of
//! `*.json` files, collecting per-file failures instead of aborting.

mod ingest;
mod record;
mod triples;

pub use ingest::{ingest_directory, IngestFailure, IngestStats};
pub use record::{
    parse_cve_json, AffectedProduct, CveError, CveRecord, CvssMetric, Description, RecordState,
    VersionEntry, VersionStatus, WeaknessRef,
};
pub use triples::record_to_triples;
