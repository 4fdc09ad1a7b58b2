//! One function per subcommand. Each returns the process exit code; every
//! operational failure travels as an error and becomes exit 2 in `main`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use opskit::ld::parse_service_config;
use opskit::reason::{
    check_disjointness, materialize, validate_restrictions, violations_to_json,
    violations_to_text,
};
use opskit::schema::{diff_schemas, ops_prefix_map, schema_to_graph};
use opskit::sparql::{evaluate, parse_query_with_prefixes};
use opskit::triplify::{ingest_csv, parse_mapping_spec};
use opskit::turtle::serialize_turtle;
use opskit::Iri;
use serde_json::json;

use crate::load;

#[derive(Clone, Copy)]
pub enum OutputFormat {
    Text,
    Json,
}

pub fn build(profile: &str, out: &Path, format: OutputFormat) -> Result<ExitCode> {
    let schema = load::schema_for(profile)?;
    let graph = schema_to_graph(&schema);
    let turtle = serialize_turtle(&graph, &ops_prefix_map(schema.base()));
    std::fs::write(out, &turtle).with_context(|| format!("writing {}", out.display()))?;
    match format {
        OutputFormat::Text => println!(
            "wrote {}: {} triples, {} classes, {} properties",
            out.display(),
            graph.len(),
            schema.class_count(),
            schema.property_count()
        ),
        OutputFormat::Json => println!(
            "{}",
            json!({
                "path": out.display().to_string(),
                "triples": graph.len(),
                "classes": schema.class_count(),
                "properties": schema.property_count(),
            })
        ),
    }
    Ok(ExitCode::SUCCESS)
}

pub fn validate(data: &[PathBuf], profile: &str, format: OutputFormat) -> Result<ExitCode> {
    let schema = load::schema_for(profile)?;
    let raw = load::merge_files(data)?;
    let graph = materialize(&raw, &schema);
    let mut violations = check_disjointness(&graph, &schema);
    violations.extend(validate_restrictions(&graph, &schema));
    match format {
        OutputFormat::Text => {
            if violations.is_empty() {
                println!("no violations");
            } else {
                print!("{}", violations_to_text(&violations));
            }
        }
        OutputFormat::Json => println!("{}", violations_to_json(&violations)),
    }
    Ok(if violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

pub fn query(
    query: Option<String>,
    file: Option<PathBuf>,
    data: &[PathBuf],
    profile: &str,
    no_inference: bool,
    format: OutputFormat,
) -> Result<ExitCode> {
    let text = match (query, file) {
        (Some(text), None) => text,
        (None, Some(path)) => std::fs::read_to_string(&path)
            .with_context(|| format!("reading {}", path.display()))?,
        _ => bail!("provide a query string or --file"),
    };
    let schema = load::schema_for(profile)?;
    let mut graph = schema_to_graph(&schema);
    graph.merge(&load::merge_files(data)?);
    if !no_inference {
        graph = materialize(&graph, &schema);
    }
    let prefixes = ops_prefix_map(schema.base());
    let parsed = match parse_query_with_prefixes(&text, &prefixes) {
        Ok(parsed) => parsed,
        Err(diagnostics) => {
            for d in &diagnostics {
                eprintln!("{d}");
            }
            bail!("query did not parse");
        }
    };
    let table = evaluate(&parsed, &graph);
    match format {
        OutputFormat::Text => print!("{}", table.to_tsv()),
        OutputFormat::Json => println!("{}", table.to_sparql_json()),
    }
    Ok(ExitCode::SUCCESS)
}

pub fn diff(old: &Path, new: &Path, format: OutputFormat) -> Result<ExitCode> {
    let old_schema = load::schema_from_file(old)?;
    let new_schema = load::schema_from_file(new)?;
    let report = diff_schemas(&old_schema, &new_schema);
    match format {
        OutputFormat::Text => print!("{}", report.render_text()),
        OutputFormat::Json => println!("{}", report.to_json()),
    }
    Ok(ExitCode::SUCCESS)
}

pub fn ingest(
    spec: &Path,
    csv: &Path,
    out: &Path,
    profile: &str,
    format: OutputFormat,
) -> Result<ExitCode> {
    let schema = load::schema_for(profile)?;
    let spec_text =
        std::fs::read_to_string(spec).with_context(|| format!("reading {}", spec.display()))?;
    let mapping = parse_mapping_spec(&spec_text)?;
    let csv_text =
        std::fs::read_to_string(csv).with_context(|| format!("reading {}", csv.display()))?;
    let (graph, report) = ingest_csv(&mapping, &csv_text, &schema)?;
    let turtle = serialize_turtle(&graph, &ops_prefix_map(schema.base()));
    std::fs::write(out, &turtle).with_context(|| format!("writing {}", out.display()))?;
    match format {
        OutputFormat::Text => print!("{}", report.render_text()),
        OutputFormat::Json => println!("{}", report.to_json()),
    }
    Ok(ExitCode::SUCCESS)
}

pub fn serve(config_path: &Path) -> Result<ExitCode> {
    let text = std::fs::read_to_string(config_path)
        .with_context(|| format!("reading {}", config_path.display()))?;
    let mut config = parse_service_config(&text)?;

    // The config file's own base wins; the environment only fills a gap.
    let explicit_base = text
        .lines()
        .any(|line| line.contains('=') && line.split('=').next().map(str::trim) == Some("base"));
    if !explicit_base {
        if let Ok(value) = std::env::var("OPS_BASE_IRI") {
            config.base = Iri::new(value.trim())
                .with_context(|| "OPS_BASE_IRI is not a usable IRI".to_owned())?;
        }
    }

    // Data paths in the file resolve against the file's directory.
    let dir = config_path.parent().unwrap_or_else(|| Path::new("."));
    config.data = config
        .data
        .into_iter()
        .map(|p| if p.is_relative() { dir.join(p) } else { p })
        .collect();

    opskit_server::run_blocking(&config)?;
    Ok(ExitCode::SUCCESS)
}
