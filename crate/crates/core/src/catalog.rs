//! The named catalog N1–N6: the six orientable degree-regular triangulations
//! of the genus-2 surface on 12 vertices, embedded at compile time.
//!
//! Each entry ships as a face-list text file plus a JSON certificate
//! (f-vector, Euler characteristic, automorphism group, common-neighbor
//! shapes, vertex-transitivity). [`identify`] names an arbitrary complex by
//! its invariant key, and [`verify_proof_maps`] rebuilds the six terminal
//! link systems of the hand case analysis and checks that each lands on its
//! named member.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{Triangle, TriangulationComplex, VertexId};
use crate::graph::{edge_graph, graph_shape};
use crate::io::{complex_to_text, parse_complex};
use crate::iso::{
    are_isomorphic, automorphism_group, identify_group, is_vertex_transitive, GroupId,
};
use crate::orientation::{orientability, Orientability};
use crate::perm::Permutation;

/// Catalog member names, in catalog order.
pub const CATALOG_NAMES: [&str; 6] = ["N1", "N2", "N3", "N4", "N5", "N6"];

const CATALOG_DIR_FILES: [(&str, &str); 6] = [
    ("N1", include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../catalog/N1.tri"))),
    ("N2", include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../catalog/N2.tri"))),
    ("N3", include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../catalog/N3.tri"))),
    ("N4", include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../catalog/N4.tri"))),
    ("N5", include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../catalog/N5.tri"))),
    ("N6", include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../catalog/N6.tri"))),
];

const CERTIFICATES_FILE: &str =
    include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../catalog/certificates.json"));

#[derive(Debug, Error)]
pub enum CatalogError {
    /// The bundled data failed to parse, validate, or re-identify.
    #[error("catalog data is corrupt: {0}")]
    CorruptCatalog(String),
    /// The complex matches no catalog member's identification key.
    #[error("complex does not match any catalog member")]
    NoMatch,
}

/// Automorphism-group summary as persisted in `certificates.json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutCertificate {
    pub order: usize,
    pub structure: String,
    pub generators: Vec<String>,
}

/// The invariants persisted for one catalog member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub name: String,
    pub f_vector: [usize; 3],
    pub chi: i64,
    pub aut: AutCertificate,
    pub g2_shape: String,
    pub g5_shape: String,
    pub vertex_transitive: bool,
}

/// One named catalog member: canonical face list plus its certificate.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub complex: TriangulationComplex,
    pub certificate: Certificate,
}

/// Recomputes the full certificate of a complex from scratch.
pub fn certificate_for(name: &str, k: &TriangulationComplex) -> Certificate {
    let eg = edge_graph(k);
    let aut = automorphism_group(k);
    let fv = k.f_vector();
    Certificate {
        name: name.to_string(),
        f_vector: [fv.f0, fv.f1, fv.f2],
        chi: k.euler_characteristic(),
        aut: AutCertificate {
            order: aut.order(),
            structure: identify_group(&aut).to_string(),
            generators: aut.generators().iter().map(|g| g.cycle_notation()).collect(),
        },
        g2_shape: graph_shape(&eg.common_neighbor_graph(2)).to_string(),
        g5_shape: graph_shape(&eg.common_neighbor_graph(5)).to_string(),
        vertex_transitive: is_vertex_transitive(k),
    }
}

/// Names a complex by its identification key: the shape of the second
/// common-neighbor graph, the shape of the fifth, and the automorphism group
/// structure. The six keys are pairwise distinct, so a match is unambiguous.
///
/// Errs with [`CatalogError::NoMatch`] when the complex is not a 12-vertex
/// orientable degree-regular type-7 surface or its key matches no member.
pub fn identify(k: &TriangulationComplex) -> Result<&'static str, CatalogError> {
    if k.vertex_count() != 12
        || k.degree_regular_type() != Some(7)
        || k.is_combinatorial_2_manifold().is_err()
        || !matches!(orientability(k), Ok(Orientability::Orientable(_)))
    {
        return Err(CatalogError::NoMatch);
    }
    let eg = edge_graph(k);
    let g2 = graph_shape(&eg.common_neighbor_graph(2));
    let g5 = graph_shape(&eg.common_neighbor_graph(5));
    let (g2s, g5s) = (g2.to_string(), g5.to_string());
    let group = identify_group(&automorphism_group(k));
    match group {
        GroupId::Cyclic(12) if g2.is_null() => Ok("N2"),
        GroupId::Cyclic(12) if g2s == "C12" && g5s == "2×C6" => Ok("N1"),
        GroupId::Dihedral(6) if g2s == "C12" && g5s == "2×C6" => Ok("N3"),
        GroupId::Cyclic(2) if g2s == "P3+9×I" => Ok("N4"),
        GroupId::Dihedral(3) if g2s == "3×P2+6×I" && g5s == "3×C4" => Ok("N5"),
        GroupId::KleinFour if g2s == "4×P2+4×I" => Ok("N6"),
        _ => Err(CatalogError::NoMatch),
    }
}

/// Parses, validates, and re-identifies the six bundled members.
///
/// Every entry must be a 12-vertex orientable degree-regular type-7 surface
/// whose stored certificate matches a from-scratch recomputation and whose
/// identification key names it. Any failure is a [`CatalogError::CorruptCatalog`].
pub fn load_catalog() -> Result<Vec<CatalogEntry>, CatalogError> {
    let corrupt = |msg: String| CatalogError::CorruptCatalog(msg);
    let certs: Vec<Certificate> = serde_json::from_str(CERTIFICATES_FILE)
        .map_err(|e| corrupt(format!("certificates.json: {e}")))?;
    if certs.len() != 6 {
        return Err(corrupt(format!("expected 6 certificates, found {}", certs.len())));
    }

    let mut entries = Vec::with_capacity(6);
    for (name, text) in CATALOG_DIR_FILES {
        let k = parse_complex(text).map_err(|e| corrupt(format!("{name}.tri: {e}")))?;
        match identify(&k) {
            Ok(found) if found == name => {}
            Ok(found) => {
                return Err(corrupt(format!("{name}.tri identifies as {found}")));
            }
            Err(_) => return Err(corrupt(format!("{name}.tri matches no identification key"))),
        }
        let recomputed = certificate_for(name, &k);
        let stored = certs
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| corrupt(format!("no certificate for {name}")))?;
        if *stored != recomputed {
            return Err(corrupt(format!("certificate for {name} does not match recomputation")));
        }
        entries.push(CatalogEntry { name, complex: k, certificate: recomputed });
    }

    let keys: BTreeSet<_> = entries
        .iter()
        .map(|e| {
            (
                e.certificate.g2_shape.clone(),
                e.certificate.g5_shape.clone(),
                e.certificate.aut.structure.clone(),
            )
        })
        .collect();
    if keys.len() != 6 {
        return Err(corrupt("identification keys are not pairwise distinct".into()));
    }
    Ok(entries)
}

/// Serialization target for [`export`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    /// Face-list text, one face per line — re-parses byte-identically.
    Text,
    /// Pretty-printed JSON: name, face array, certificate.
    Json,
}

/// Renders one catalog entry as face-list text or JSON.
pub fn export(entry: &CatalogEntry, format: ExportFormat) -> Vec<u8> {
    match format {
        ExportFormat::Text => complex_to_text(&entry.complex).into_bytes(),
        ExportFormat::Json => {
            let faces: Vec<[VertexId; 3]> = entry
                .complex
                .faces()
                .iter()
                .map(|t| {
                    let [a, b, c] = t.vertices();
                    [a, b, c]
                })
                .collect();
            let value = serde_json::json!({
                "name": entry.name,
                "faces": faces,
                "certificate": entry.certificate,
            });
            let mut text = serde_json::to_string_pretty(&value).expect("static schema");
            text.push('\n');
            text.into_bytes()
        }
    }
}

// ---------------------------------------------------------------------------
// Link-system reconstructions
// ---------------------------------------------------------------------------

/// One terminal subcase of the hand case analysis: the vertex links it pins
/// down, and the catalog member it must reproduce. Labels 10 and 11 play the
/// roles written u and v in the case split.
struct LinkSystem {
    subcase: &'static str,
    expected: &'static str,
    links: &'static [(VertexId, [VertexId; 7])],
}

const U: VertexId = 10;
const V: VertexId = 11;

/// All six systems share the base link of vertex 0; each case fixes the link
/// of 1 and a few more, and each subcase closes the rest.
const LINK_SYSTEMS: [LinkSystem; 6] = [
    LinkSystem {
        subcase: "1.1",
        expected: "N1",
        links: &[
            (0, [1, 2, 3, 4, 5, 6, 7]),
            (1, [8, 2, 0, 7, 3, 6, 9]),
            (6, [7, 0, 5, 9, 1, 3, 2]),
            (3, [4, 0, 2, 6, 1, 7, U]),
            (7, [2, 6, 0, 1, 3, U, V]),
            (2, [8, 1, 0, 3, 6, 7, V]),
            (4, [U, 3, 0, 5, V, 9, 8]),
            (8, [2, 1, 9, 4, U, 5, V]),
            (V, [2, 7, U, 9, 4, 5, 8]),
        ],
    },
    LinkSystem {
        subcase: "1.2",
        expected: "N3",
        links: &[
            (0, [1, 2, 3, 4, 5, 6, 7]),
            (1, [8, 2, 0, 7, 3, 6, 9]),
            (6, [7, 0, 5, 9, 1, 3, 2]),
            (3, [4, 0, 2, 6, 1, 7, U]),
            (7, [2, 6, 0, 1, 3, U, V]),
            (2, [8, 1, 0, 3, 6, 7, V]),
            (4, [U, 3, 0, 5, 8, V, 9]),
            (8, [9, 1, 2, V, 4, 5, U]),
            (9, [8, 1, 6, 5, V, 4, U]),
            (5, [9, 6, 0, 4, 8, U, V]),
        ],
    },
    LinkSystem {
        subcase: "2.1",
        expected: "N4",
        links: &[
            (0, [1, 2, 3, 4, 5, 6, 7]),
            (1, [8, 2, 0, 7, 3, 9, 5]),
            (3, [4, 0, 2, 9, 1, 7, U]),
            (2, [9, 3, 0, 1, 8, 6, V]),
            (6, [V, 2, 8, 7, 0, 5, U]),
            (7, [6, 0, 1, 3, U, V, 8]),
            (U, [5, 6, V, 7, 3, 4, 9]),
            (5, [8, 1, 9, U, 6, 0, 4]),
            (8, [4, 5, 1, 2, 6, 7, V]),
            (4, [U, 9, V, 8, 5, 0, 3]),
        ],
    },
    LinkSystem {
        subcase: "2.2",
        expected: "N5",
        links: &[
            (0, [1, 2, 3, 4, 5, 6, 7]),
            (1, [8, 2, 0, 7, 3, 9, 5]),
            (3, [4, 0, 2, 9, 1, 7, U]),
            (2, [9, 3, 0, 1, 8, U, V]),
            (9, [5, 1, 3, 2, V, 4, 6]),
            (4, [V, 5, 0, 3, U, 6, 9]),
            (5, [V, 4, 0, 6, 9, 1, 8]),
            (U, [8, 6, 4, 3, 7, V, 2]),
            (6, [8, U, 4, 9, 5, 0, 7]),
            (7, [8, 6, 0, 1, 3, U, V]),
            (8, [V, 7, 6, U, 2, 1, 5]),
            (V, [7, 8, 5, 4, 9, 2, U]),
        ],
    },
    LinkSystem {
        subcase: "3.1",
        expected: "N6",
        links: &[
            (0, [1, 2, 3, 4, 5, 6, 7]),
            (1, [8, 2, 0, 7, 3, 9, 6]),
            (3, [2, 0, 4, 7, 1, 9, U]),
            (7, [4, 3, 1, 0, 6, 9, V]),
            (6, [5, 0, 7, 9, 1, 8, U]),
            (9, [3, 1, 6, 7, V, 5, U]),
            (5, [0, 4, 8, V, 9, U, 6]),
            (8, [1, 2, 4, 5, V, U, 6]),
            (4, [0, 3, 7, V, 2, 8, 5]),
            (2, [0, 1, 8, 4, V, U, 3]),
        ],
    },
    LinkSystem {
        subcase: "3.2",
        expected: "N2",
        links: &[
            (0, [1, 2, 3, 4, 5, 6, 7]),
            (1, [8, 2, 0, 7, 3, 9, 6]),
            (3, [2, 0, 4, 7, 1, 9, U]),
            (7, [4, 3, 1, 0, 6, 9, V]),
            (6, [5, 0, 7, 9, 1, 8, V]),
            (9, [1, 3, U, 8, V, 7, 6]),
            (8, [1, 2, 5, U, 9, V, 6]),
            (V, [4, 7, 9, 8, 6, 5, U]),
            (U, [2, 3, 9, 8, 5, V, 4]),
            (2, [0, 1, 8, 5, 4, U, 3]),
        ],
    },
];

/// Outcome of reconstructing one link system.
#[derive(Clone, Debug)]
pub enum SubcaseOutcome {
    /// The reconstruction is isomorphic to the expected member; the witness
    /// maps the reconstruction onto the catalog face list.
    Verified { witness: Permutation },
    /// The listed links (plus forced closures) determine fewer than 28
    /// faces; reported rather than guessed at.
    ReconstructionIncomplete,
    /// The reconstruction finished but failed validation or identification.
    Failed { reason: String },
}

/// Report for one subcase reconstruction.
#[derive(Clone, Debug)]
pub struct SubcaseReport {
    pub subcase: &'static str,
    pub expected: &'static str,
    /// Distinct faces read directly off the listed links.
    pub faces_listed: usize,
    /// Faces after closing links forced to be complete.
    pub faces_closed: usize,
    pub outcome: SubcaseOutcome,
}

/// Rebuilds each terminal subcase complex from its listed vertex links and
/// checks it is isomorphic to the named catalog member.
///
/// A link listed for a vertex contributes its seven faces outright. A vertex
/// whose faces already trace a single open path through all 12 − 5 = 7 of
/// its possible neighbors has only one way to finish — the path's endpoints
/// must join — so that closing face is added; the rule repeats until stable.
/// Anything still short of 28 faces is reported as incomplete.
pub fn verify_proof_maps() -> Result<Vec<SubcaseReport>, CatalogError> {
    let catalog = load_catalog()?;
    let by_name = |n: &str| {
        catalog
            .iter()
            .find(|e| e.name == n)
            .expect("load_catalog yields all six names")
    };

    let mut reports = Vec::with_capacity(6);
    for system in &LINK_SYSTEMS {
        let mut faces: BTreeSet<Triangle> = BTreeSet::new();
        for &(w, cyc) in system.links {
            for i in 0..7 {
                let t = Triangle::new(w, cyc[i], cyc[(i + 1) % 7])
                    .expect("link cycles have distinct consecutive vertices");
                faces.insert(t);
            }
        }
        let faces_listed = faces.len();
        close_forced_links(&mut faces, 12, 7);
        let faces_closed = faces.len();

        let outcome = if faces_closed < 28 {
            SubcaseOutcome::ReconstructionIncomplete
        } else {
            reconcile(&faces, by_name(system.expected))
        };
        reports.push(SubcaseReport {
            subcase: system.subcase,
            expected: system.expected,
            faces_listed,
            faces_closed,
            outcome,
        });
    }
    Ok(reports)
}

/// Builds, validates, and identifies a finished reconstruction against its
/// expected catalog entry.
fn reconcile(faces: &BTreeSet<Triangle>, expected: &CatalogEntry) -> SubcaseOutcome {
    let raw: Vec<[usize; 3]> = faces.iter().map(|t| t.vertices()).collect();
    let k = match TriangulationComplex::build(&raw) {
        Ok(k) => k,
        Err(e) => return SubcaseOutcome::Failed { reason: format!("invalid complex: {e}") },
    };
    match identify(&k) {
        Ok(name) if name == expected.name => {}
        Ok(name) => {
            return SubcaseOutcome::Failed {
                reason: format!("identifies as {name}, expected {}", expected.name),
            }
        }
        Err(e) => return SubcaseOutcome::Failed { reason: e.to_string() },
    }
    match are_isomorphic(&k, &expected.complex) {
        Some(witness) => SubcaseOutcome::Verified { witness },
        None => SubcaseOutcome::Failed {
            reason: format!("key matches {} but no isomorphism found", expected.name),
        },
    }
}

/// Adds every face forced by a vertex whose partial link is a single open
/// path on exactly `degree` vertices: a degree-`degree` vertex has no room
/// for more neighbors, so its link must close into a cycle. Repeats to a
/// fixed point.
fn close_forced_links(faces: &mut BTreeSet<Triangle>, n: usize, degree: usize) {
    loop {
        let mut forced: Option<Triangle> = None;
        for w in 0..n {
            // The partial link of w: neighbors and the edges between them.
            let mut adj: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
            for t in faces.iter().filter(|t| t.contains(w)) {
                let [a, b, c] = t.vertices();
                let (x, y) = if a == w { (b, c) } else if b == w { (a, c) } else { (a, b) };
                adj.entry(x).or_default().insert(y);
                adj.entry(y).or_default().insert(x);
            }
            if adj.len() != degree || adj.values().any(|s| s.len() > 2) {
                continue;
            }
            let ends: Vec<VertexId> =
                adj.iter().filter(|(_, s)| s.len() == 1).map(|(&v, _)| v).collect();
            let edge_count: usize = adj.values().map(BTreeSet::len).sum::<usize>() / 2;
            // A single open path on `degree` vertices has degree − 1 edges
            // and exactly two endpoints; anything else is either finished
            // (a cycle) or still undetermined (several path pieces).
            if ends.len() == 2 && edge_count == degree - 1 {
                forced = Some(
                    Triangle::new(w, ends[0], ends[1]).expect("path endpoints are distinct"),
                );
                break;
            }
        }
        match forced {
            Some(t) => {
                faces.insert(t);
            }
            None => return,
        }
    }
}
