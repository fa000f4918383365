//! Directory ingestion of CVE record files.
//!
//! Ingestion is resilient: one malformed file must not poison a batch, so
//! per-file failures are collected into the returned stats while every
//! well-formed record contributes its triples to the graph. Only a failure
//! to read the directory itself is fatal.

use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::rdf::Graph;
use crate::vocab::Namespaces;

use super::record::{parse_cve_json, CveError};
use super::triples::record_to_triples;

/// One file that could not be ingested, with the reason it was skipped.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct IngestFailure {
    /// File name relative to the ingested directory.
    pub file: String,
    /// Human-readable parse or read error.
    pub reason: String,
}

/// Outcome counters for one `ingest_directory` run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IngestStats {
    /// Number of candidate `.json` files found.
    pub files_read: usize,
    /// Files that parsed into a record and were lowered to triples.
    pub records_ok: usize,
    /// Files skipped because of a read or parse failure.
    pub records_skipped: usize,
    /// Per-file failure details, sorted by file name.
    pub failures: Vec<IngestFailure>,
}

/// Parses every `*.json` file under `dir` (non-recursive) and accumulates
/// the resulting triples into one graph.
///
/// Files are visited in sorted name order so the stats are deterministic.
/// The extension check is case-insensitive; other files are ignored.
pub fn ingest_directory(dir: &Path, ns: &Namespaces) -> Result<(Graph, IngestStats), CveError> {
    let entries = fs::read_dir(dir).map_err(|e| CveError::Io {
        path: dir.display().to_string(),
        reason: e.to_string(),
    })?;

    let mut files = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| CveError::Io {
            path: dir.display().to_string(),
            reason: e.to_string(),
        })?;
        let path = entry.path();
        let is_json = path
            .extension()
            .is_some_and(|ext| ext.eq_ignore_ascii_case("json"));
        if path.is_file() && is_json {
            files.push(path);
        }
    }
    files.sort();

    let mut graph = Graph::new();
    let mut stats = IngestStats {
        files_read: files.len(),
        ..IngestStats::default()
    };
    for path in &files {
        let name = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        let outcome = fs::read_to_string(path)
            .map_err(|e| e.to_string())
            .and_then(|text| parse_cve_json(&text).map_err(|e| e.to_string()));
        match outcome {
            Ok(record) => {
                graph.merge(&record_to_triples(&record, ns));
                stats.records_ok += 1;
            }
            Err(reason) => {
                stats.records_skipped += 1;
                stats.failures.push(IngestFailure { file: name, reason });
            }
        }
    }
    stats.failures.sort();
    Ok((graph, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    fn record_json(id: &str) -> String {
        format!(
            r#"{{
  "dataVersion": "5.1",
  "cveMetadata": {{"cveId": "{id}", "state": "PUBLISHED"}},
  "containers": {{"cna": {{
    "descriptions": [{{"lang": "en", "value": "d"}}],
    "affected": [{{"vendor": "v", "product": "p"}}]
  }}}}
}}"#
        )
    }

    #[test]
    fn ingests_good_files_and_skips_bad_ones() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("a.json"), record_json("CVE-2021-0001")).unwrap();
        fs::write(dir.path().join("b.json"), "{not json").unwrap();
        fs::write(dir.path().join("c.JSON"), record_json("CVE-2021-0002")).unwrap();
        fs::write(dir.path().join("notes.txt"), "ignore me").unwrap();

        let (graph, stats) = ingest_directory(dir.path(), &Namespaces::default()).unwrap();
        assert_eq!(stats.files_read, 3);
        assert_eq!(stats.records_ok, 2);
        assert_eq!(stats.records_skipped, 1);
        assert_eq!(stats.failures.len(), 1);
        assert_eq!(stats.failures[0].file, "b.json");
        assert!(!graph.is_empty());
    }

    #[test]
    fn skipped_files_leave_no_partial_triples() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("good.json"), record_json("CVE-2021-0001")).unwrap();
        // Valid JSON, invalid record: the id fails the CVE pattern.
        fs::write(dir.path().join("bad.json"), record_json("CVE-21-1")).unwrap();

        let ns = Namespaces::default();
        let (graph, stats) = ingest_directory(dir.path(), &ns).unwrap();
        assert_eq!(stats.records_ok, 1);
        assert_eq!(stats.records_skipped, 1);

        let only_good = {
            let (g, _) = {
                let dir2 = tempfile::tempdir().unwrap();
                fs::write(dir2.path().join("good.json"), record_json("CVE-2021-0001")).unwrap();
                ingest_directory(dir2.path(), &ns).unwrap()
            };
            g
        };
        assert_eq!(graph, only_good);
    }

    #[test]
    fn empty_directory_yields_empty_graph() {
        let dir = tempfile::tempdir().unwrap();
        let (graph, stats) = ingest_directory(dir.path(), &Namespaces::default()).unwrap();
        assert!(graph.is_empty());
        assert_eq!(stats, IngestStats::default());
    }

    #[test]
    fn missing_directory_is_a_fatal_error() {
        let err = ingest_directory(Path::new("/nonexistent/surely"), &Namespaces::default())
            .unwrap_err();
        match err {
            CveError::Io { path, .. } => assert!(path.contains("nonexistent")),
            other => panic!("expected Io error, got {other:?}"),
        }
    }

    #[test]
    fn failures_sort_by_file_name() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("z.json"), "{").unwrap();
        fs::write(dir.path().join("a.json"), "{").unwrap();
        let (_, stats) = ingest_directory(dir.path(), &Namespaces::default()).unwrap();
        let names: Vec<&str> = stats.failures.iter().map(|f| f.file.as_str()).collect();
        assert_eq!(names, ["a.json", "z.json"]);
    }
}
