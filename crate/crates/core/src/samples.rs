//! Small reference surfaces with known invariants, used as fixtures by the
//! test suites and handy as library examples.

use crate::complex::TriangulationComplex;
use crate::maps::PolyhedralMap;

/// Boundary of the 3-simplex: the 4-vertex sphere, every degree 3.
pub fn tetrahedron() -> TriangulationComplex {
    TriangulationComplex::build(&[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap()
}

/// The 6-vertex sphere, every degree 4: vertex pairs (0,5), (1,4), (2,3)
/// are the three antipodal non-edges.
pub fn octahedron() -> TriangulationComplex {
    TriangulationComplex::build(&[
        [0, 1, 2],
        [0, 2, 4],
        [0, 4, 3],
        [0, 3, 1],
        [5, 1, 2],
        [5, 2, 4],
        [5, 4, 3],
        [5, 3, 1],
    ])
    .unwrap()
}

/// The 12-vertex sphere, every degree 5. Vertex 0 on top, upper ring 1–5,
/// lower ring 6–10 (vertex 5+i sits under the edge {i, i+1}), vertex 11 on
/// the bottom.
pub fn icosahedron() -> TriangulationComplex {
    let ring = |i: usize| 1 + (i % 5); // upper ring, 1-based around
    let low = |i: usize| 6 + (i % 5);
    let mut faces = Vec::with_capacity(20);
    for i in 0..5 {
        faces.push([0, ring(i), ring(i + 1)]);
        faces.push([ring(i), ring(i + 1), low(i)]);
        faces.push([ring(i + 1), low(i), low(i + 1)]);
        faces.push([11, low(i), low(i + 1)]);
    }
    TriangulationComplex::build(&faces).unwrap()
}

/// The fixed-point-free antipodal symmetry of [`icosahedron`], order 2.
pub fn icosahedron_antipode() -> crate::perm::Permutation {
    // 0 ↔ 11; upper vertex i sits opposite lower vertex 6 + ((i + 1) % 5).
    crate::perm::Permutation::from_cycles(
        12,
        &[&[0, 11], &[1, 8], &[2, 9], &[3, 10], &[4, 6], &[5, 7]],
    )
    .unwrap()
}

/// The 6-vertex real projective plane: the quotient of the icosahedron by
/// its antipodal symmetry. Each face maps to the triple of vertex classes;
/// the 20 faces collapse in pairs to 10.
pub fn projective_plane_6() -> TriangulationComplex {
    let icosa = icosahedron();
    let sigma = icosahedron_antipode();
    // Class representative: the smaller of v and σ(v).
    let class = |v: usize| v.min(sigma.apply(v));
    let faces: Vec<[usize; 3]> = icosa
        .faces()
        .iter()
        .map(|t| {
            let [a, b, c] = t.vertices();
            [class(a), class(b), class(c)]
        })
        .collect();
    TriangulationComplex::build(&faces).unwrap()
}

/// The unique 7-vertex torus: faces `{i, i+1, i+3}` and `{i, i+2, i+3}`
/// mod 7. Every vertex has degree 6 and every pair is an edge.
pub fn torus_7() -> TriangulationComplex {
    let mut faces = Vec::with_capacity(14);
    for i in 0..7 {
        faces.push([i, (i + 1) % 7, (i + 3) % 7]);
        faces.push([i, (i + 2) % 7, (i + 3) % 7]);
    }
    TriangulationComplex::build(&faces).unwrap()
}

/// The cube as a polyhedral map: 8 vertices, six 4-gon faces.
pub fn cube_map() -> PolyhedralMap {
    PolyhedralMap::new(
        8,
        vec![
            vec![0, 1, 2, 3],
            vec![4, 5, 6, 7],
            vec![0, 1, 5, 4],
            vec![1, 2, 6, 5],
            vec![2, 3, 7, 6],
            vec![3, 0, 4, 7],
        ],
    )
    .unwrap()
}
