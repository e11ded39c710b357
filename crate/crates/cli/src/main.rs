//! `trisurf` — command-line front end for the triangulated-surface library.
//!
//! Exit codes: 0 on success, 1 on a negative mathematical verdict (not a
//! manifold, non-isomorphic, no catalog match, truncated search), 2 on
//! usage, parse, or I/O errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use trisurf::catalog::{self, certificate_for, Certificate, ExportFormat, SubcaseOutcome};
use trisurf::complex::TriangulationComplex;
use trisurf::enumerate::{enumerate_degree_regular, SearchConfig};
use trisurf::graph::fingerprint;
use trisurf::io::{complex_to_text, map_to_text, parse_complex, parse_map};
use trisurf::iso::{are_isomorphic, automorphism_group, identify_group};
use trisurf::orientation::{genus, orientability};
use trisurf::params::admissible_parameters;

#[derive(Parser)]
#[command(name = "trisurf", version, about = "Triangulated closed surfaces: verification, invariants, and classification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a face list is a closed surface and report its invariants.
    Check {
        /// Face-list file (one triangle per line).
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Common-neighbor shapes of the edge graph, level by level.
    Invariants {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decide whether two face lists are isomorphic.
    Iso {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Automorphism group: order, structure, generators.
    Aut {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Dual polyhedral map of a map (a triangulation file is a map file).
    Dual {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write the dual here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively classify degree-regular surfaces for one Euler characteristic.
    Classify {
        /// Euler characteristic to classify (e.g. -2 for the double torus).
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        /// Keep only orientable classes.
        #[arg(long)]
        orientable: bool,
        /// Print search counters per parameter pair.
        #[arg(long)]
        stats: bool,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Disable the star-union lower-bound pruning (soundness cross-check).
        #[arg(long)]
        no_prune: bool,
        /// Stop after this many classes per parameter pair (exit 1 if truncated).
        #[arg(long)]
        limit: Option<usize>,
        /// Write one face-list file per class plus certificates.json here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the bundled catalog, export one member, or identify a complex.
    Catalog {
        /// Member to export (N1..N6); omit to list all.
        name: Option<String>,
        /// Name the catalog member this face list is isomorphic to.
        #[arg(long, conflicts_with = "name")]
        identify: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Rebuild the terminal link systems of the case analysis and check each
    /// against its named catalog member.
    VerifyProof {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Ok(true) = success, Ok(false) = negative verdict, Err = usage/parse error.
fn run(command: Command) -> Result<bool> {
    match command {
        Command::Check { file, format } => check(&file, format),
        Command::Invariants { file, format } => invariants(&file, format),
        Command::Iso { first, second, format } => iso(&first, &second, format),
        Command::Aut { file, format } => aut(&file, format),
        Command::Dual { file, format, out } => dual(&file, format, out.as_deref()),
        Command::Classify { chi, orientable, stats, jobs, no_prune, limit, out, format } => {
            classify(chi, orientable, stats, jobs, no_prune, limit, out.as_deref(), format)
        }
        Command::Catalog { name, identify, format } => {
            catalog_cmd(name.as_deref(), identify.as_deref(), format)
        }
        Command::VerifyProof { format } => verify_proof(format),
    }
}

fn read_complex(path: &Path) -> Result<TriangulationComplex> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_complex(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Formats an Euler characteristic with a true minus sign, as in χ=−2.
fn chi_str(chi: i64) -> String {
    if chi < 0 {
        format!("−{}", -chi)
    } else {
        chi.to_string()
    }
}

fn check(path: &Path, format: Format) -> Result<bool> {
    let k = read_complex(path)?;
    if let Err(reason) = k.is_combinatorial_2_manifold() {
        match format {
            Format::Text => println!("not a combinatorial 2-manifold: {reason}"),
            Format::Json => println!(
                "{}",
                json!({ "manifold": false, "reason": reason.to_string() })
            ),
        }
        return Ok(false);
    }
    let orientable = orientability(&k)?.is_orientable();
    let chi = k.euler_characteristic();
    let fv = k.f_vector();
    let dtype = k.degree_regular_type();
    match format {
        Format::Text => {
            let mut line = format!(
                "combinatorial 2-manifold, {}, χ={}",
                if orientable { "orientable" } else { "non-orientable" },
                chi_str(chi),
            );
            match dtype {
                Some(d) => write!(line, ", degree-regular type {d}").unwrap(),
                None => write!(line, ", not degree-regular").unwrap(),
            }
            println!("{line}");
        }
        Format::Json => {
            println!(
                "{}",
                json!({
                    "manifold": true,
                    "orientable": orientable,
                    "chi": chi,
                    "f_vector": [fv.f0, fv.f1, fv.f2],
                    "degree_regular_type": dtype,
                    "genus": if orientable { Some(genus(&k)?) } else { None },
                })
            );
        }
    }
    Ok(true)
}

fn invariants(path: &Path, format: Format) -> Result<bool> {
    let k = read_complex(path)?;
    let shapes = fingerprint(&k);
    match format {
        Format::Text => {
            for (m, shape) in shapes.iter().enumerate() {
                println!("G_{m}: {shape}");
            }
        }
        Format::Json => {
            let list: Vec<_> = shapes
                .iter()
                .enumerate()
                .map(|(m, shape)| json!({ "n": m, "shape": shape.to_string() }))
                .collect();
            println!("{}", json!({ "G_n": list }));
        }
    }
    Ok(true)
}

/// The first invariant that tells two non-isomorphic complexes apart, tried
/// from cheapest to strongest.
fn separating_invariant(k1: &TriangulationComplex, k2: &TriangulationComplex) -> String {
    if k1.vertex_count() != k2.vertex_count() {
        return format!("vertex count: {} vs {}", k1.vertex_count(), k2.vertex_count());
    }
    let (f1, f2) = (k1.f_vector(), k2.f_vector());
    if f1 != f2 {
        return format!(
            "f-vector: ({}, {}, {}) vs ({}, {}, {})",
            f1.f0, f1.f1, f1.f2, f2.f0, f2.f1, f2.f2
        );
    }
    let degrees = |k: &TriangulationComplex| {
        let mut d: Vec<usize> = (0..k.vertex_count())
            .map(|v| k.degree(v).expect("vertices of a built complex have neighbors"))
            .collect();
        d.sort_unstable();
        d
    };
    if degrees(k1) != degrees(k2) {
        return "degree sequence".to_string();
    }
    let m1 = k1.is_combinatorial_2_manifold().is_ok();
    if m1 != k2.is_combinatorial_2_manifold().is_ok() {
        return format!(
            "manifold: {} vs {}",
            if m1 { "yes" } else { "no" },
            if m1 { "no" } else { "yes" }
        );
    }
    let (fp1, fp2) = (fingerprint(k1), fingerprint(k2));
    for (m, (s1, s2)) in fp1.iter().zip(&fp2).enumerate() {
        if s1 != s2 {
            return format!("G_{m} shape: {s1} vs {s2}");
        }
    }
    let g1 = identify_group(&automorphism_group(k1));
    let g2 = identify_group(&automorphism_group(k2));
    if g1 != g2 {
        return format!("Aut structure: {g1} vs {g2}");
    }
    "none found (distinguished only by exhaustive search)".to_string()
}

fn iso(first: &Path, second: &Path, format: Format) -> Result<bool> {
    let k1 = read_complex(first)?;
    let k2 = read_complex(second)?;
    match are_isomorphic(&k1, &k2) {
        Some(witness) => {
            match format {
                Format::Text => println!("isomorphic: {}", witness.cycle_notation()),
                Format::Json => println!(
                    "{}",
                    json!({
                        "isomorphic": true,
                        "witness": {
                            "images": witness.images(),
                            "cycles": witness.cycle_notation(),
                        },
                    })
                ),
            }
            Ok(true)
        }
        None => {
            let separating = separating_invariant(&k1, &k2);
            match format {
                Format::Text => {
                    println!("non-isomorphic");
                    println!("separating invariant: {separating}");
                }
                Format::Json => println!(
                    "{}",
                    json!({ "isomorphic": false, "separating_invariant": separating })
                ),
            }
            Ok(false)
        }
    }
}

fn aut(path: &Path, format: Format) -> Result<bool> {
    let k = read_complex(path)?;
    let group = automorphism_group(&k);
    let structure = identify_group(&group);
    match format {
        Format::Text => {
            println!("order: {}", group.order());
            println!("structure: {structure}");
            println!("generators:");
            for g in group.generators() {
                println!("  {}", g.cycle_notation());
            }
        }
        Format::Json => println!(
            "{}",
            json!({
                "order": group.order(),
                "structure": structure.to_string(),
                "generators": group
                    .generators()
                    .iter()
                    .map(|g| g.cycle_notation())
                    .collect::<Vec<_>>(),
            })
        ),
    }
    Ok(true)
}

fn dual(path: &Path, format: Format, out: Option<&Path>) -> Result<bool> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let map = parse_map(&text).with_context(|| format!("parsing {}", path.display()))?;
    let dual = map.dual();
    let rendered = match format {
        Format::Text => map_to_text(&dual),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&json!({
                "n": dual.vertex_count(),
                "faces": dual.faces(),
                "equivelar_type": dual.equivelar_type().map(|t| t.to_string()),
                "chi": dual.euler_characteristic(),
            }))
            .expect("static schema");
            s.push('\n');
            s
        }
    };
    match out {
        Some(out_path) => fs::write(out_path, rendered)
            .with_context(|| format!("writing {}", out_path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(true)
}

#[allow(clippy::too_many_arguments)]
fn classify(
    chi: i64,
    orientable: bool,
    stats: bool,
    jobs: Option<usize>,
    no_prune: bool,
    limit: Option<usize>,
    out: Option<&Path>,
    format: Format,
) -> Result<bool> {
    if let Some(k) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .context("configuring worker threads")?;
    }
    let config = SearchConfig {
        orientable_only: orientable,
        prune_star_bound: !no_prune,
        parallel_width: 1024,
        limit,
    };

    let pairs = admissible_parameters(chi);
    let mut runs = Vec::new();
    let mut total = 0usize;
    let mut exhaustive = true;
    for (n, d) in &pairs {
        let result = enumerate_degree_regular(*n, *d, &config)
            .with_context(|| format!("classifying (n, d) = ({n}, {d})"))?;
        total += result.classes.len();
        exhaustive &= !result.truncated;
        runs.push(((*n, *d), result));
    }

    // Name every class: catalog members get their catalog names, everything
    // else a systematic label.
    let mut named: Vec<(String, &TriangulationComplex)> = Vec::new();
    for ((n, d), result) in &runs {
        for (i, k) in result.classes.iter().enumerate() {
            let name = catalog::identify(k)
                .map(str::to_string)
                .unwrap_or_else(|_| format!("n{n}d{d}-{}", i + 1));
            named.push((name, k));
        }
    }
    named.sort_by(|a, b| a.0.cmp(&b.0));

    if let Some(dir) = out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let mut certs: Vec<Certificate> = Vec::new();
        for (name, k) in &named {
            let path = dir.join(format!("{name}.tri"));
            fs::write(&path, complex_to_text(k))
                .with_context(|| format!("writing {}", path.display()))?;
            certs.push(certificate_for(name, k));
        }
        let mut text = serde_json::to_string_pretty(&certs).expect("static schema");
        text.push('\n');
        let path = dir.join("certificates.json");
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    }

    match format {
        Format::Text => {
            if pairs.is_empty() {
                println!("no admissible (n, d) parameters for χ={}", chi_str(chi));
            }
            let plural = |k: usize| if k == 1 { "class" } else { "classes" };
            for ((n, d), result) in &runs {
                let suffix = if result.truncated { " (truncated)" } else { "" };
                let count = result.classes.len();
                println!("({n}, {d}): {count} {}{suffix}", plural(count));
                if stats {
                    let s = &result.stats;
                    println!(
                        "  nodes {}, leaves {}, dead ends {}, star prunes {}, \
                         duplicate leaves {}, non-orientable leaves {}",
                        s.nodes,
                        s.leaves,
                        s.dead_ends,
                        s.star_prunes,
                        s.duplicate_leaves,
                        s.nonorientable_leaves
                    );
                }
            }
            println!("total: {total} {}", plural(total));
        }
        Format::Json => {
            let runs_json: Vec<_> = runs
                .iter()
                .map(|((n, d), result)| {
                    let names: Vec<&str> = named
                        .iter()
                        .filter(|(_, k)| result.classes.iter().any(|c| std::ptr::eq(c, *k)))
                        .map(|(name, _)| name.as_str())
                        .collect();
                    let mut obj = json!({
                        "n": n,
                        "d": d,
                        "classes": result.classes.len(),
                        "truncated": result.truncated,
                        "names": names,
                    });
                    if stats {
                        obj["stats"] = serde_json::to_value(&result.stats).unwrap();
                    }
                    obj
                })
                .collect();
            println!(
                "{}",
                json!({
                    "chi": chi,
                    "orientable_only": orientable,
                    "runs": runs_json,
                    "total_classes": total,
                })
            );
        }
    }
    Ok(exhaustive)
}

fn catalog_cmd(name: Option<&str>, identify: Option<&Path>, format: Format) -> Result<bool> {
    let entries = catalog::load_catalog().context("loading bundled catalog")?;

    if let Some(path) = identify {
        let k = read_complex(path)?;
        return match catalog::identify(&k) {
            Ok(found) => {
                match format {
                    Format::Text => println!("{found}"),
                    Format::Json => println!("{}", json!({ "identified": found })),
                }
                Ok(true)
            }
            Err(_) => {
                match format {
                    Format::Text => println!("no catalog member matches"),
                    Format::Json => {
                        println!("{}", json!({ "identified": serde_json::Value::Null }))
                    }
                }
                Ok(false)
            }
        };
    }

    if let Some(want) = name {
        let entry = entries
            .iter()
            .find(|e| e.name.eq_ignore_ascii_case(want))
            .with_context(|| format!("no catalog member named {want}"))?;
        let bytes = match format {
            Format::Text => catalog::export(entry, ExportFormat::Text),
            Format::Json => catalog::export(entry, ExportFormat::Json),
        };
        print!("{}", String::from_utf8(bytes).expect("exports are UTF-8"));
        return Ok(true);
    }

    match format {
        Format::Text => {
            for e in &entries {
                let c = &e.certificate;
                println!(
                    "{}: f=({}, {}, {}), χ={}, Aut={} (order {}), G2={}, G5={}, {}",
                    e.name,
                    c.f_vector[0],
                    c.f_vector[1],
                    c.f_vector[2],
                    chi_str(c.chi),
                    c.aut.structure,
                    c.aut.order,
                    c.g2_shape,
                    c.g5_shape,
                    if c.vertex_transitive { "vertex-transitive" } else { "not vertex-transitive" },
                );
            }
        }
        Format::Json => {
            let certs: Vec<&Certificate> = entries.iter().map(|e| &e.certificate).collect();
            println!("{}", serde_json::to_string_pretty(&certs).expect("static schema"));
        }
    }
    Ok(true)
}

fn verify_proof(format: Format) -> Result<bool> {
    let reports = catalog::verify_proof_maps().context("loading bundled catalog")?;
    let mut all_good = true;
    match format {
        Format::Text => {
            for r in &reports {
                let status = match &r.outcome {
                    SubcaseOutcome::Verified { witness } => {
                        format!("verified, witness {}", witness.cycle_notation())
                    }
                    SubcaseOutcome::ReconstructionIncomplete => {
                        "reconstruction incomplete — reported, not checked".to_string()
                    }
                    SubcaseOutcome::Failed { reason } => {
                        all_good = false;
                        format!("FAILED: {reason}")
                    }
                };
                println!(
                    "subcase {} → {}: {} faces listed, {} after closure — {status}",
                    r.subcase, r.expected, r.faces_listed, r.faces_closed
                );
            }
        }
        Format::Json => {
            let list: Vec<_> = reports
                .iter()
                .map(|r| {
                    let (outcome, witness, reason) = match &r.outcome {
                        SubcaseOutcome::Verified { witness } => {
                            ("verified", Some(witness.cycle_notation()), None)
                        }
                        SubcaseOutcome::ReconstructionIncomplete => ("incomplete", None, None),
                        SubcaseOutcome::Failed { reason } => {
                            all_good = false;
                            ("failed", None, Some(reason.clone()))
                        }
                    };
                    json!({
                        "subcase": r.subcase,
                        "expected": r.expected,
                        "faces_listed": r.faces_listed,
                        "faces_closed": r.faces_closed,
                        "outcome": outcome,
                        "witness": witness,
                        "reason": reason,
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&list).expect("static schema"));
        }
    }
    Ok(all_good)
}
