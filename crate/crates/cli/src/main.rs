use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use polyface::formulas::min_facets_4d;
use polyface::gale::{
    diagram_to_json, figure2_diagram, gale_faces, gale_missing_edges, DiagramVariant, VariantTag,
};
use polyface::{enumerate_faces, vertex_profile};
use polyface_cli::report::fvector_report;
use polyface_cli::scan::conjecture_scan;
use polyface_cli::suites::run_suite;
use polyface_cli::CliError;

/// Exact-arithmetic face-count verifier for polytopes with few vertices.
#[derive(Parser)]
#[command(name = "polyface", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a construction expression and report its f-vector and profile.
    Fvector {
        /// Expression, e.g. "pyramid(t=2, product(simplex(2), simplex(2)))".
        expr: String,
        /// Emit a flat CSV row instead of JSON.
        #[arg(long)]
        csv: bool,
        /// Write the report to a file instead of stdout.
        #[arg(long)]
        out: Option<String>,
    },
    /// Run the minimiser scan for all dimensions up to --dmax.
    Scan {
        #[arg(long)]
        dmax: i64,
        /// Emit the flat CSV (one row per dimension, face index and
        /// candidate) instead of JSON.
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        /// Emit the nested JSON report (default).
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<String>,
    },
    /// Run a named check suite ("all" runs every suite).
    Check {
        suite: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Minimum facet count of a 4-polytope with the given vertex count.
    Minfacets { f0: i64 },
    /// Build one of the six extremal diagrams and report its polytope.
    Gale {
        /// Variant tag: i, ii, iii, iv, v or vi (or 1-6).
        variant: String,
        /// Polytope dimension.
        d: usize,
        #[arg(long)]
        out: Option<String>,
    },
}

fn emit(out: &Option<String>, payload: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, payload)?,
        None => print!("{payload}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Fvector { expr, csv, out } => {
            let report = fvector_report(&expr)?;
            let payload = if csv { report.to_csv() } else { report.to_json() + "\n" };
            emit(&out, &payload)?;
            Ok(0)
        }
        Command::Scan { dmax, csv, json: _, out } => {
            let report = conjecture_scan(dmax)?;
            let payload = if csv {
                report.to_csv()
            } else {
                report.to_json() + "\n"
            };
            emit(&out, &payload)?;
            Ok(if report.pass { 0 } else { 1 })
        }
        Command::Check { suite, out } => {
            let reports = run_suite(&suite)?;
            let mut all_pass = true;
            let mut payload = String::new();
            for report in &reports {
                all_pass &= report.pass();
                payload.push_str(&report.to_json());
                payload.push('\n');
                for check in &report.checks {
                    eprintln!(
                        "[{}] {}: {} ({})",
                        if check.pass { "pass" } else { "FAIL" },
                        report.suite,
                        check.id,
                        check.detail
                    );
                }
            }
            emit(&out, &payload)?;
            Ok(if all_pass { 0 } else { 1 })
        }
        Command::Minfacets { f0 } => {
            println!("{}", min_facets_4d(f0)?);
            Ok(0)
        }
        Command::Gale { variant, d, out } => {
            let tag = VariantTag::parse(&variant)?;
            let diagram = figure2_diagram(DiagramVariant::new(tag, d)?)?;
            let polytope = gale_faces(&diagram)?;
            let lattice = enumerate_faces(&polytope)?;
            let f = lattice.f_vector();
            let profile = vertex_profile(&polytope, &lattice);
            let payload = serde_json::to_string_pretty(&serde_json::json!({
                "variant": tag.name(),
                "d": d,
                "diagram": serde_json::from_str::<serde_json::Value>(&diagram_to_json(&diagram))
                    .expect("diagram json"),
                "vertices": polytope.vertex_count(),
                "facets": polytope.facet_count(),
                "expected_facets": tag.expected_facets(d),
                "f_vector": f.counts().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "missing_edges": gale_missing_edges(&diagram)?
                    .iter()
                    .map(|&(u, v)| vec![u, v])
                    .collect::<Vec<_>>(),
                "simple_vertices": profile.simple_count(),
            }))
            .expect("report serializes")
                + "\n";
            emit(&out, &payload)?;
            Ok(if polytope.facet_count() == tag.expected_facets(d) {
                0
            } else {
                1
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
