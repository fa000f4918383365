//! cloudkg: build, validate, and query a cloud-service security knowledge
//! graph from the command line.
//!
//! Pipeline stages are composable through N-Triples files: `schema` and
//! `build` produce graphs, `query`, `validate`, and `export-dot` consume
//! them. All subcommands are deterministic: identical inputs produce
//! byte-identical outputs.
//!
//! Exit codes: 0 success, 1 partial success or validation findings, 2 I/O
//! or fatal errors (also used by usage errors), 3 query syntax errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};

use cloudkg::catalog::ServiceCatalog;
use cloudkg::cve::ingest_directory;
use cloudkg::linker::{build_rules, link, LinkReport};
use cloudkg::query::{
    cves_by_cwe, cves_for_service, evaluate, parse_query_with_prefixes, Query, QueryError,
};
use cloudkg::rdf::{export_dot, parse_ntriples, serialize_ntriples};
use cloudkg::schema::{validate, OntologySchema};
use cloudkg::vocab::DEFAULT_NAMESPACE_BASE;
use cloudkg::{Graph, Iri, Namespaces};

const EXIT_OK: u8 = 0;
const EXIT_PARTIAL: u8 = 1;
const EXIT_FATAL: u8 = 2;
const EXIT_QUERY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "cloudkg",
    version,
    about = "Cloud-service security knowledge graph toolkit"
)]
struct Cli {
    /// Ontology namespace base IRI; must end in '#' or '/'.
    #[arg(
        long,
        global = true,
        env = "CLOUDKG_NAMESPACE",
        default_value = DEFAULT_NAMESPACE_BASE
    )]
    namespace: String,

    /// Write output to this file instead of stdout.
    #[arg(short, long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    /// Print more detail on stderr (repeatable).
    #[arg(short, long, global = true, action = ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Export the built-in ontology schema as N-Triples.
    Schema,
    /// Build a knowledge graph from a catalog file and a CVE directory.
    ///
    /// Emits the merged catalog, CVE, and link triples as N-Triples and
    /// prints ingest and link summaries on stderr. Exits 1 if any record
    /// file had to be skipped.
    Build {
        /// Service catalog JSON file.
        catalog: PathBuf,
        /// Directory of CVE Record Format 5.x JSON files.
        cve_dir: PathBuf,
    },
    /// Run a query over an N-Triples graph file.
    ///
    /// QUERY is either query text in the supported SPARQL subset or a
    /// canned query name: 'cves-by-cwe' or 'cves-for-service:<iri>'. The
    /// prefixes cc:, ind:, rdf:, rdfs:, owl:, and xsd: are predeclared.
    Query {
        /// N-Triples graph file.
        graph: PathBuf,
        /// Query text or canned query name.
        query: String,
        /// Result rendering.
        #[arg(long, value_enum, default_value_t = QueryFormat::Table)]
        format: QueryFormat,
    },
    /// Check a graph against the built-in schema.
    ///
    /// Prints one line per violation (or a JSON array with --format json)
    /// and exits 1 when violations exist.
    Validate {
        /// N-Triples graph file.
        graph: PathBuf,
        /// Report rendering.
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Export a graph as Graphviz DOT, optionally restricted to the
    /// neighborhood of a focus node.
    ExportDot {
        /// N-Triples graph file.
        graph: PathBuf,
        /// Focus node IRI; omit to export the whole graph.
        #[arg(long, value_name = "IRI")]
        focus: Option<String>,
        /// Undirected hop limit around the focus (ignored without --focus).
        #[arg(long, default_value_t = 2)]
        radius: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum QueryFormat {
    Table,
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(run(cli))
}

fn run(cli: Cli) -> u8 {
    let ns = match Namespaces::from_base(&cli.namespace) {
        Ok(ns) => ns,
        Err(e) => return fatal(format!("invalid --namespace: {e}")),
    };
    match &cli.command {
        Command::Schema => cmd_schema(&cli, &ns),
        Command::Build { catalog, cve_dir } => cmd_build(&cli, &ns, catalog, cve_dir),
        Command::Query { graph, query, format } => cmd_query(&cli, &ns, graph, query, *format),
        Command::Validate { graph, format } => cmd_validate(&cli, &ns, graph, *format),
        Command::ExportDot { graph, focus, radius } => {
            cmd_export_dot(&cli, graph, focus.as_deref(), *radius)
        }
    }
}

fn fatal(message: impl AsRef<str>) -> u8 {
    eprintln!("error: {}", message.as_ref());
    EXIT_FATAL
}

fn cmd_schema(cli: &Cli, ns: &Namespaces) -> u8 {
    let schema = OntologySchema::builtin(ns);
    match write_output(cli, &serialize_ntriples(&schema.emit_triples())) {
        Ok(()) => EXIT_OK,
        Err(e) => fatal(e),
    }
}

fn cmd_build(cli: &Cli, ns: &Namespaces, catalog_path: &Path, cve_dir: &Path) -> u8 {
    let catalog_text = match fs::read_to_string(catalog_path) {
        Ok(text) => text,
        Err(e) => return fatal(format!("{}: {e}", catalog_path.display())),
    };
    let catalog = match ServiceCatalog::from_json(&catalog_text) {
        Ok(catalog) => catalog,
        Err(e) => return fatal(format!("{}: {e}", catalog_path.display())),
    };
    let (cve_graph, stats) = match ingest_directory(cve_dir, ns) {
        Ok(result) => result,
        Err(e) => return fatal(e.to_string()),
    };

    let mut graph = catalog.to_triples(ns);
    graph.merge(&cve_graph);
    let rules = build_rules(&catalog, ns);
    let (links, report) = link(&graph, &rules, ns);
    graph.merge(&links);

    eprintln!(
        "ingest: files read {}, records ok {}, records skipped {}",
        stats.files_read, stats.records_ok, stats.records_skipped
    );
    for failure in &stats.failures {
        eprintln!("  failed {}: {}", failure.file, failure.reason);
    }
    eprintln!(
        "link: products {}, matched {}, links {}",
        report.stats.products, report.stats.matched_products, report.stats.links
    );
    if cli.verbose > 0 {
        print_link_details(&report);
    }

    if let Err(e) = write_output(cli, &serialize_ntriples(&graph)) {
        return fatal(e);
    }
    if stats.records_skipped > 0 {
        EXIT_PARTIAL
    } else {
        EXIT_OK
    }
}

fn print_link_details(report: &LinkReport) {
    for entry in &report.links {
        eprintln!(
            "  link: {} ← {} via product '{}' ({})",
            entry.component.local_name(),
            entry.cve.local_name(),
            entry.product_name,
            entry.origin
        );
    }
    for product in &report.unmatched_products {
        eprintln!("  unmatched: {}", product.as_str());
    }
}

fn cmd_query(cli: &Cli, ns: &Namespaces, graph_path: &Path, query_text: &str, format: QueryFormat) -> u8 {
    let graph = match load_graph(graph_path) {
        Ok(graph) => graph,
        Err(code) => return code,
    };
    let query = match resolve_query(query_text, ns) {
        Ok(query) => query,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_QUERY;
        }
    };
    let table = evaluate(&query, &graph);
    let rendered = match format {
        QueryFormat::Table => table.to_text(),
        QueryFormat::Tsv => table.to_tsv(),
        QueryFormat::Json => {
            let mut json = table.to_json_rows();
            json.push('\n');
            json
        }
    };
    match write_output(cli, &rendered) {
        Ok(()) => EXIT_OK,
        Err(e) => fatal(e),
    }
}

/// Maps the query argument to a canned query or parses it as query text.
fn resolve_query(text: &str, ns: &Namespaces) -> Result<Query, QueryError> {
    if text == "cves-by-cwe" {
        return Ok(cves_by_cwe(ns));
    }
    if let Some(iri_text) = text.strip_prefix("cves-for-service:") {
        let service = Iri::new(iri_text).map_err(|e| QueryError::Syntax {
            line: 1,
            column: 1,
            message: format!("invalid service IRI in canned query: {e}"),
        })?;
        return Ok(cves_for_service(&service, ns));
    }
    parse_query_with_prefixes(
        text,
        &[
            ("cc", ns.schema_base()),
            ("ind", ns.individual_base()),
            ("rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"),
            ("rdfs", "http://www.w3.org/2000/01/rdf-schema#"),
            ("owl", "http://www.w3.org/2002/07/owl#"),
            ("xsd", "http://www.w3.org/2001/XMLSchema#"),
        ],
    )
}

fn cmd_validate(cli: &Cli, ns: &Namespaces, graph_path: &Path, format: ReportFormat) -> u8 {
    let graph = match load_graph(graph_path) {
        Ok(graph) => graph,
        Err(code) => return code,
    };
    let schema = OntologySchema::builtin(ns);
    let violations = validate(&graph, &schema);
    let rendered = match format {
        ReportFormat::Text => cloudkg::schema::violations_to_text(&violations),
        ReportFormat::Json => {
            let mut json = cloudkg::schema::violations_to_json(&violations);
            json.push('\n');
            json
        }
    };
    if let Err(e) = write_output(cli, &rendered) {
        return fatal(e);
    }
    if violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_PARTIAL
    }
}

fn cmd_export_dot(cli: &Cli, graph_path: &Path, focus: Option<&str>, radius: usize) -> u8 {
    let graph = match load_graph(graph_path) {
        Ok(graph) => graph,
        Err(code) => return code,
    };
    let focus_iri = match focus {
        None => None,
        Some(text) => match Iri::new(text) {
            Ok(iri) => Some(iri),
            Err(e) => return fatal(format!("invalid --focus: {e}")),
        },
    };
    let dot = export_dot(&graph, focus_iri.as_ref(), radius);
    match write_output(cli, &dot) {
        Ok(()) => EXIT_OK,
        Err(e) => fatal(e),
    }
}

fn load_graph(path: &Path) -> Result<Graph, u8> {
    let text = fs::read_to_string(path)
        .map_err(|e| fatal(format!("{}: {e}", path.display())))?;
    parse_ntriples(&text).map_err(|e| fatal(format!("{}: {e}", path.display())))
}

fn write_output(cli: &Cli, text: &str) -> Result<(), String> {
    match &cli.output {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| format!("stdout: {e}"))
        }
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
        }
    }
}
