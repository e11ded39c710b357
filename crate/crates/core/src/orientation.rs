//! Orientability of connected combinatorial 2-manifolds.
//!
//! A face `(a, b, c)` with `a < b < c` can be traversed in two cyclic
//! directions; call `a → b → c` the positive one. An orientation assignment
//! picks a direction for every face, and it is coherent when every edge is
//! traversed once in each direction by its two faces. A connected closed
//! surface is orientable iff a coherent assignment exists, and then there
//! are exactly two (global flip).

use crate::complex::{ComplexError, Triangle, TriangulationComplex, VertexId};

/// A coherent choice of direction per face: `signs[i]` is `+1` when face `i`
/// (in the complex's sorted face order) is traversed `a → b → c` with its
/// vertices ascending, `-1` for the reverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationAssignment {
    signs: Vec<i8>,
}

impl OrientationAssignment {
    pub fn sign(&self, face_index: usize) -> i8 {
        self.signs[face_index]
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// The positively-oriented vertex cycle of face `i`.
    pub fn oriented_face(&self, k: &TriangulationComplex, i: usize) -> [VertexId; 3] {
        let [a, b, c] = k.faces()[i].vertices();
        if self.signs[i] > 0 {
            [a, b, c]
        } else {
            [a, c, b]
        }
    }

    /// Checks coherence: each edge is traversed in opposite directions by
    /// its two faces.
    pub fn is_coherent(&self, k: &TriangulationComplex) -> bool {
        k.edges().iter().all(|&(a, b)| {
            let Some((f, g)) = k.faces_across(a, b) else { return false };
            traverses_forward(self.oriented_face(k, f), a, b)
                != traverses_forward(self.oriented_face(k, g), a, b)
        })
    }
}

/// Whether the directed cycle `cyc` walks `a` immediately to `b`.
fn traverses_forward(cyc: [VertexId; 3], a: VertexId, b: VertexId) -> bool {
    (0..3).any(|i| cyc[i] == a && cyc[(i + 1) % 3] == b)
}

/// Outcome of the orientability test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Orientability {
    Orientable(OrientationAssignment),
    /// No coherent assignment: flipping along the faces of `face_cycle`
    /// (indices of a closed walk in the face-adjacency graph) returns to the
    /// start with reversed orientation.
    NonOrientable { conflict_edge: (VertexId, VertexId), face_cycle: Vec<usize> },
}

impl Orientability {
    pub fn is_orientable(&self) -> bool {
        matches!(self, Orientability::Orientable(_))
    }
}

/// Decides orientability of a connected combinatorial 2-manifold by
/// propagating directions over the face-adjacency graph, starting from the
/// lexicographically least face oriented by ascending vertex order.
pub fn orientability(k: &TriangulationComplex) -> Result<Orientability, ComplexError> {
    k.is_combinatorial_2_manifold()?;
    if !k.is_connected() {
        return Err(ComplexError::NotConnected);
    }
    let faces = k.faces();
    let mut signs: Vec<i8> = vec![0; faces.len()];
    // BFS parent links let a conflict be reported as the closed walk through
    // the tree from one endpoint to the other.
    let mut parent: Vec<usize> = (0..faces.len()).collect();
    signs[0] = 1;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(f) = queue.pop_front() {
        for (a, b) in faces[f].edges() {
            let (x, y) = k.faces_across(a, b).expect("manifold edge lies in two faces");
            let g = if x == f { y } else { x };
            // Coherence forces g's sign: the two faces must traverse (a, b)
            // in opposite directions.
            let f_fwd = traverses_forward(oriented(faces[f], signs[f]), a, b);
            let g_fwd_if_pos = traverses_forward(oriented(faces[g], 1), a, b);
            let needed: i8 = if f_fwd != g_fwd_if_pos { 1 } else { -1 };
            if signs[g] == 0 {
                signs[g] = needed;
                parent[g] = f;
                queue.push_back(g);
            } else if signs[g] != needed {
                return Ok(Orientability::NonOrientable {
                    conflict_edge: (a, b),
                    face_cycle: tree_walk(&parent, f, g),
                });
            }
        }
    }
    let assignment = OrientationAssignment { signs };
    debug_assert!(assignment.is_coherent(k));
    Ok(Orientability::Orientable(assignment))
}

fn oriented(t: Triangle, sign: i8) -> [VertexId; 3] {
    let [a, b, c] = t.vertices();
    if sign > 0 {
        [a, b, c]
    } else {
        [a, c, b]
    }
}

/// The walk f → root → g through BFS parent links, with the common prefix
/// trimmed: concatenating it with the conflicting edge closes an
/// orientation-reversing cycle of faces.
fn tree_walk(parent: &[usize], f: usize, g: usize) -> Vec<usize> {
    let path_to_root = |mut v: usize| {
        let mut p = vec![v];
        while parent[v] != v {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let mut pf = path_to_root(f); // f … root
    let mut pg = path_to_root(g); // g … root
    // Strip the shared tail so each path ends at their deepest common face.
    while pf.len() >= 2
        && pg.len() >= 2
        && pf[pf.len() - 1] == pg[pg.len() - 1]
        && pf[pf.len() - 2] == pg[pg.len() - 2]
    {
        pf.pop();
        pg.pop();
    }
    pg.pop(); // drop the duplicated meeting face
    pg.reverse();
    pf.extend(pg); // f → meeting face → g
    pf
}

/// Genus of a connected orientable surface: `χ = 2 − 2g`.
pub fn genus(k: &TriangulationComplex) -> Result<usize, ComplexError> {
    match orientability(k)? {
        Orientability::Orientable(_) => {}
        Orientability::NonOrientable { .. } => return Err(ComplexError::NotOrientable),
    }
    let chi = k.euler_characteristic();
    debug_assert!(chi % 2 == 0, "orientable surface has even Euler characteristic");
    Ok(((2 - chi) / 2) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn spheres_and_torus_are_orientable() {
        for k in [samples::tetrahedron(), samples::octahedron(), samples::icosahedron(), samples::torus_7()] {
            assert!(orientability(&k).unwrap().is_orientable());
        }
    }

    #[test]
    fn assignment_is_coherent() {
        let k = samples::icosahedron();
        match orientability(&k).unwrap() {
            Orientability::Orientable(a) => assert!(a.is_coherent(&k)),
            Orientability::NonOrientable { .. } => panic!("icosahedron must be orientable"),
        }
    }

    #[test]
    fn projective_plane_is_not_orientable() {
        let rp2 = samples::projective_plane_6();
        match orientability(&rp2).unwrap() {
            Orientability::Orientable(_) => panic!("RP² is not orientable"),
            Orientability::NonOrientable { conflict_edge, face_cycle } => {
                assert!(rp2.has_edge(conflict_edge.0, conflict_edge.1));
                assert!(!face_cycle.is_empty());
            }
        }
    }

    #[test]
    fn genus_values() {
        assert_eq!(genus(&samples::tetrahedron()).unwrap(), 0);
        assert_eq!(genus(&samples::octahedron()).unwrap(), 0);
        assert_eq!(genus(&samples::torus_7()).unwrap(), 1);
        assert_eq!(genus(&samples::projective_plane_6()), Err(ComplexError::NotOrientable));
    }

    #[test]
    fn non_manifold_and_disconnected_inputs_are_rejected() {
        let pinched = crate::complex::TriangulationComplex::build(&[[0, 1, 2], [0, 1, 3]]).unwrap();
        assert!(matches!(orientability(&pinched), Err(ComplexError::NotManifold(_))));
        let two = crate::complex::TriangulationComplex::build(&[
            [0, 1, 2],
            [0, 1, 3],
            [0, 2, 3],
            [1, 2, 3],
            [4, 5, 6],
            [4, 5, 7],
            [4, 6, 7],
            [5, 6, 7],
        ])
        .unwrap();
        assert_eq!(orientability(&two), Err(ComplexError::NotConnected));
    }
}
