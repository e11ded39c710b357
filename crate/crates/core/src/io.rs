//! Plain-text formats for complexes and polyhedral maps.
//!
//! Face-list format (one triangle per line):
//!
//! ```text
//! # comment lines start with '#'
//! 0 1 2
//! 0 2 u      # the letters u and v are accepted as labels 10 and 11
//! ```
//!
//! Each data line carries exactly three whitespace-separated labels; label
//! order within a line and line order within the file are irrelevant. Map
//! format is the same except a line holds a whole face as a cyclic vertex
//! sequence, so lines may have three or more labels.
//!
//! Serialization writes one face per line, vertices space-separated, faces
//! sorted; parsing a serialized file and re-serializing reproduces it byte
//! for byte.

use thiserror::Error;

use crate::complex::{ComplexError, TriangulationComplex};
use crate::maps::{MapError, PolyhedralMap};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: bad label {token:?} (expected a nonnegative integer, 'u', or 'v')")]
    BadLabel { line: usize, token: String },
    #[error("line {line}: expected exactly 3 labels, found {found}")]
    NotATriangle { line: usize, found: usize },
    #[error("line {line}: a face needs at least 3 labels, found {found}")]
    ShortFace { line: usize, found: usize },
    #[error("no faces in input")]
    Empty,
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Map(#[from] MapError),
}

/// `u` ↦ 10 and `v` ↦ 11; otherwise a decimal label.
fn parse_label(token: &str, line: usize) -> Result<usize, ParseError> {
    match token {
        "u" => Ok(10),
        "v" => Ok(11),
        t => t
            .parse::<usize>()
            .map_err(|_| ParseError::BadLabel { line, token: t.to_string() }),
    }
}

/// Strips comments and splits each remaining line into labels.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, data)| !data.is_empty())
}

/// Parses a face list into raw label triples (no normalization).
pub fn parse_face_list(text: &str) -> Result<Vec<[usize; 3]>, ParseError> {
    let mut faces = Vec::new();
    for (line, data) in data_lines(text) {
        let labels: Vec<usize> = data
            .split_whitespace()
            .map(|tok| parse_label(tok, line))
            .collect::<Result<_, _>>()?;
        if labels.len() != 3 {
            return Err(ParseError::NotATriangle { line, found: labels.len() });
        }
        faces.push([labels[0], labels[1], labels[2]]);
    }
    if faces.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(faces)
}

/// Parses and builds a complex (labels compressed onto `0..n`).
pub fn parse_complex(text: &str) -> Result<TriangulationComplex, ParseError> {
    Ok(TriangulationComplex::build(&parse_face_list(text)?)?)
}

/// One sorted face per line, single-space separated, trailing newline.
pub fn complex_to_text(k: &TriangulationComplex) -> String {
    let mut out = String::new();
    for t in k.faces() {
        let [a, b, c] = t.vertices();
        out.push_str(&format!("{a} {b} {c}\n"));
    }
    out
}

/// Parses a polyhedral map: each line a face as a cyclic vertex sequence.
pub fn parse_map(text: &str) -> Result<PolyhedralMap, ParseError> {
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for (line, data) in data_lines(text) {
        let labels: Vec<usize> = data
            .split_whitespace()
            .map(|tok| parse_label(tok, line))
            .collect::<Result<_, _>>()?;
        if labels.len() < 3 {
            return Err(ParseError::ShortFace { line, found: labels.len() });
        }
        faces.push(labels);
    }
    if faces.is_empty() {
        return Err(ParseError::Empty);
    }
    let n = faces.iter().flatten().max().unwrap() + 1;
    Ok(PolyhedralMap::new(n, faces)?)
}

/// One face per line in the map's canonical face order.
pub fn map_to_text(m: &PolyhedralMap) -> String {
    let mut out = String::new();
    for f in m.faces() {
        let labels: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn parses_labels_comments_and_letters() {
        let text = "# a tetrahedron on labels {0, 1, u, v}\n0 1 u\n0 1 v # inline comment\n0 u v\n1 u v\n";
        let k = parse_complex(text).unwrap();
        assert_eq!(k, samples::tetrahedron());
    }

    #[test]
    fn rejects_malformed_lines() {
        assert_eq!(
            parse_face_list("0 1\n"),
            Err(ParseError::NotATriangle { line: 1, found: 2 })
        );
        assert!(matches!(
            parse_face_list("0 1 x\n"),
            Err(ParseError::BadLabel { line: 1, .. })
        ));
        assert_eq!(parse_face_list("# nothing\n"), Err(ParseError::Empty));
        assert!(matches!(
            parse_complex("0 1 1\n"),
            Err(ParseError::Complex(ComplexError::DegenerateFace(0, 1, 1)))
        ));
    }

    #[test]
    fn serialized_complex_round_trips_byte_identically() {
        let text = complex_to_text(&samples::icosahedron());
        let again = complex_to_text(&parse_complex(&text).unwrap());
        assert_eq!(text, again);
    }

    #[test]
    fn map_round_trip() {
        let cube = samples::cube_map();
        let text = map_to_text(&cube);
        let parsed = parse_map(&text).unwrap();
        assert_eq!(map_to_text(&parsed), text);
    }
}
