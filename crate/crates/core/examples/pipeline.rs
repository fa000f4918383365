//! End-to-end library walkthrough: catalog + CVE records -> linked graph ->
//! query. Run from the repository root:
//!
//! ```console
//! $ cargo run -p cloudkg --example pipeline
//! ```

use cloudkg::catalog::ServiceCatalog;
use cloudkg::linker::{build_rules, link};
use cloudkg::query::{evaluate, parse_query};
use cloudkg::{cve, Namespaces};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ns = Namespaces::default();
    let catalog = ServiceCatalog::from_json(&std::fs::read_to_string("data/catalog.json")?)?;
    let mut graph = catalog.to_triples(&ns);

    let (cve_graph, stats) = cve::ingest_directory("data/cves".as_ref(), &ns)?;
    eprintln!("{} records ingested", stats.records_ok);
    graph.merge(&cve_graph);

    let (links, report) = link(&graph, &build_rules(&catalog, &ns), &ns);
    eprintln!("{} links found", report.stats.links);
    graph.merge(&links);

    let query = parse_query("SELECT ?s WHERE { ?s a <http://w3id.org/cc-ontology#CVE> . }")?;
    println!("{}", evaluate(&query, &graph).to_text());
    Ok(())
}
