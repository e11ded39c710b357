//! Two-dimensional abstract simplicial complexes in which every maximal face
//! is a triangle, together with the local structure (links, degrees) used to
//! recognize closed surfaces.
//!
//! A [`TriangulationComplex`] stores its faces as sorted vertex triples over
//! a dense label range `0..n`. A complex is a combinatorial 2-manifold when
//! the link of every vertex is a single cycle; that single condition makes
//! the face set a triangulation of a closed surface.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::perm::Permutation;

/// Dense vertex label, `0..n` within a complex.
pub type VertexId = usize;

/// A face: three distinct vertices, stored sorted ascending.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle([VertexId; 3]);

impl Triangle {
    /// Sorts the vertices; fails if two coincide.
    pub fn new(a: VertexId, b: VertexId, c: VertexId) -> Result<Self, ComplexError> {
        if a == b || a == c || b == c {
            return Err(ComplexError::DegenerateFace(a, b, c));
        }
        let mut v = [a, b, c];
        v.sort_unstable();
        Ok(Triangle(v))
    }

    pub fn vertices(&self) -> [VertexId; 3] {
        self.0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    /// The vertex of the face other than `a` and `b`.
    pub fn opposite(&self, a: VertexId, b: VertexId) -> VertexId {
        debug_assert!(self.contains(a) && self.contains(b) && a != b);
        self.0.into_iter().find(|&v| v != a && v != b).unwrap()
    }

    /// The three edges of the face, each sorted, in lexicographic order.
    pub fn edges(&self) -> [(VertexId, VertexId); 3] {
        let [a, b, c] = self.0;
        [(a, b), (a, c), (b, c)]
    }
}

impl fmt::Debug for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {} {})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {} {})", self.0[0], self.0[1], self.0[2])
    }
}

/// Face-count vector `(f0, f1, f2)` = (vertices, edges, triangles).
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FVector {
    pub f0: usize,
    pub f1: usize,
    pub f2: usize,
}

/// The link of a vertex when it is a single cycle: the neighbors in cyclic
/// order. Stored in the canonical rotation — starting at the smallest
/// neighbor, continuing toward the smaller of its two cycle-neighbors — so
/// equal cycles compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkCycle {
    pub vertex: VertexId,
    cycle: Vec<VertexId>,
}

impl LinkCycle {
    pub fn vertices(&self) -> &[VertexId] {
        &self.cycle
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("degenerate face ({0} {1} {2}): labels must be distinct")]
    DegenerateFace(usize, usize, usize),
    #[error("a complex needs at least one face")]
    EmptyInput,
    #[error("vertex {0} is not in the complex")]
    UnknownVertex(VertexId),
    #[error("link of vertex {0} is not a single cycle")]
    NotACycle(VertexId),
    #[error("not a combinatorial 2-manifold: link of vertex {0} is not a cycle")]
    NotManifold(VertexId),
    #[error("complex is not connected")]
    NotConnected,
    #[error("complex is not orientable")]
    NotOrientable,
}

/// A finite 2-complex given by its triangles. Construction normalizes labels
/// to `0..n` (order-preserving) and dedupes faces, so two complexes are equal
/// iff they have identical face sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TriangulationComplex {
    n: usize,
    faces: Vec<Triangle>,
    edges: Vec<(VertexId, VertexId)>,
    /// Indices into `faces`, per vertex.
    vertex_faces: Vec<Vec<usize>>,
    /// Sorted neighbor lists.
    neighbors: Vec<Vec<VertexId>>,
}

impl TriangulationComplex {
    /// Builds a complex from raw faces. Labels may be any nonnegative
    /// integers; they are compressed, order-preserving, onto `0..n`.
    pub fn build(raw_faces: &[[usize; 3]]) -> Result<Self, ComplexError> {
        if raw_faces.is_empty() {
            return Err(ComplexError::EmptyInput);
        }
        let mut labels = BTreeSet::new();
        for &[a, b, c] in raw_faces {
            if a == b || a == c || b == c {
                return Err(ComplexError::DegenerateFace(a, b, c));
            }
            labels.extend([a, b, c]);
        }
        let dense: Vec<usize> = labels.into_iter().collect();
        let rank = |x: usize| dense.binary_search(&x).unwrap();

        let mut faces: Vec<Triangle> = raw_faces
            .iter()
            .map(|&[a, b, c]| Triangle::new(rank(a), rank(b), rank(c)))
            .collect::<Result<_, _>>()?;
        faces.sort_unstable();
        faces.dedup();
        Ok(Self::from_normalized(dense.len(), faces))
    }

    fn from_normalized(n: usize, faces: Vec<Triangle>) -> Self {
        let mut edges = BTreeSet::new();
        let mut vertex_faces = vec![Vec::new(); n];
        let mut neighbor_sets = vec![BTreeSet::new(); n];
        for (i, t) in faces.iter().enumerate() {
            for v in t.vertices() {
                vertex_faces[v].push(i);
            }
            for (a, b) in t.edges() {
                edges.insert((a, b));
                neighbor_sets[a].insert(b);
                neighbor_sets[b].insert(a);
            }
        }
        TriangulationComplex {
            n,
            faces,
            edges: edges.into_iter().collect(),
            vertex_faces,
            neighbors: neighbor_sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Faces, sorted ascending.
    pub fn faces(&self) -> &[Triangle] {
        &self.faces
    }

    /// Edges (sorted pairs), sorted ascending.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        let e = (a.min(b), a.max(b));
        self.edges.binary_search(&e).is_ok()
    }

    pub fn has_face(&self, t: Triangle) -> bool {
        self.faces.binary_search(&t).is_ok()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: VertexId) -> Result<&[VertexId], ComplexError> {
        self.check_vertex(v)?;
        Ok(&self.neighbors[v])
    }

    /// Number of edges at `v`.
    pub fn degree(&self, v: VertexId) -> Result<usize, ComplexError> {
        Ok(self.neighbors(v)?.len())
    }

    /// Indices (into `faces()`) of the faces containing `v`.
    pub fn faces_at(&self, v: VertexId) -> Result<&[usize], ComplexError> {
        self.check_vertex(v)?;
        Ok(&self.vertex_faces[v])
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), ComplexError> {
        if v >= self.n {
            return Err(ComplexError::UnknownVertex(v));
        }
        Ok(())
    }

    pub fn f_vector(&self) -> FVector {
        FVector { f0: self.n, f1: self.edges.len(), f2: self.faces.len() }
    }

    pub fn euler_characteristic(&self) -> i64 {
        let f = self.f_vector();
        f.f0 as i64 - f.f1 as i64 + f.f2 as i64
    }

    /// The link of `v` as a graph on its neighbors: `(x, y)` is a link edge
    /// iff `{v, x, y}` is a face. Returned as sorted edge pairs.
    pub fn link_of(&self, v: VertexId) -> Result<Vec<(VertexId, VertexId)>, ComplexError> {
        self.check_vertex(v)?;
        let mut link: Vec<(VertexId, VertexId)> = self.vertex_faces[v]
            .iter()
            .map(|&i| {
                let [a, b, c] = self.faces[i].vertices();
                if a == v {
                    (b, c)
                } else if b == v {
                    (a, c)
                } else {
                    (a, b)
                }
            })
            .collect();
        link.sort_unstable();
        Ok(link)
    }

    /// The link of `v` as a single cycle, in canonical rotation. Errors with
    /// [`ComplexError::NotACycle`] when the link graph is not one cycle
    /// covering every neighbor of `v`.
    pub fn link_cycle(&self, v: VertexId) -> Result<LinkCycle, ComplexError> {
        let link = self.link_of(v)?;
        let nbrs = &self.neighbors[v];
        let deg = nbrs.len();
        // A cycle on `deg` vertices has exactly `deg` edges, each vertex
        // meeting exactly two.
        if deg < 3 || link.len() != deg {
            return Err(ComplexError::NotACycle(v));
        }
        let mut around: std::collections::HashMap<VertexId, Vec<VertexId>> = Default::default();
        for &(a, b) in &link {
            around.entry(a).or_default().push(b);
            around.entry(b).or_default().push(a);
        }
        if around.len() != deg || around.values().any(|ns| ns.len() != 2) {
            return Err(ComplexError::NotACycle(v));
        }
        // Walk from the smallest neighbor toward the smaller of its two
        // cycle-neighbors; a full tour must close up and cover everything.
        let start = nbrs[0];
        let mut cycle = vec![start];
        let first = &around[&start];
        let mut prev = start;
        let mut cur = first[0].min(first[1]);
        while cur != start {
            cycle.push(cur);
            let ns = &around[&cur];
            let next = if ns[0] == prev { ns[1] } else { ns[0] };
            prev = cur;
            cur = next;
            if cycle.len() > deg {
                return Err(ComplexError::NotACycle(v));
            }
        }
        if cycle.len() != deg {
            return Err(ComplexError::NotACycle(v));
        }
        Ok(LinkCycle { vertex: v, cycle })
    }

    /// True iff every vertex link is a single cycle. On failure reports the
    /// smallest offending vertex.
    pub fn is_combinatorial_2_manifold(&self) -> Result<(), ComplexError> {
        for v in 0..self.n {
            if self.link_cycle(v).is_err() {
                return Err(ComplexError::NotManifold(v));
            }
        }
        Ok(())
    }

    /// `Some(d)` when every vertex has degree exactly `d`.
    pub fn degree_regular_type(&self) -> Option<usize> {
        let d = self.neighbors[0].len();
        self.neighbors.iter().all(|ns| ns.len() == d).then_some(d)
    }

    /// Whether the 1-skeleton is connected.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Number of faces meeting the vertex set `s` (the union of the stars).
    pub fn star_union_face_count(&self, s: &[VertexId]) -> Result<usize, ComplexError> {
        for &v in s {
            self.check_vertex(v)?;
        }
        Ok(self
            .faces
            .iter()
            .filter(|t| s.iter().any(|&v| t.contains(v)))
            .count())
    }

    /// The complex with every vertex `v` renamed to `p.apply(v)`.
    pub fn relabel(&self, p: &Permutation) -> Self {
        assert_eq!(p.degree(), self.n, "permutation degree must match vertex count");
        let mut faces: Vec<Triangle> = self
            .faces
            .iter()
            .map(|t| {
                let [a, b, c] = t.vertices();
                Triangle::new(p.apply(a), p.apply(b), p.apply(c)).unwrap()
            })
            .collect();
        faces.sort_unstable();
        Self::from_normalized(self.n, faces)
    }

    /// The two faces sharing edge `(a, b)`, when the edge lies in exactly
    /// two faces.
    pub fn faces_across(&self, a: VertexId, b: VertexId) -> Option<(usize, usize)> {
        let mut hits = self.vertex_faces[a]
            .iter()
            .copied()
            .filter(|&i| self.faces[i].contains(b));
        let f = hits.next()?;
        let g = hits.next()?;
        hits.next().is_none().then_some((f, g))
    }
}

impl fmt::Debug for TriangulationComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TriangulationComplex(n={}, faces=[", self.n)?;
        for (i, t) in self.faces.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn tetrahedron_f_vector() {
        let k = samples::tetrahedron();
        assert_eq!(k.f_vector(), FVector { f0: 4, f1: 6, f2: 4 });
        assert_eq!(k.euler_characteristic(), 2);
    }

    #[test]
    fn rejects_degenerate_and_empty() {
        assert_eq!(
            TriangulationComplex::build(&[[0, 1, 1]]),
            Err(ComplexError::DegenerateFace(0, 1, 1))
        );
        assert_eq!(TriangulationComplex::build(&[]), Err(ComplexError::EmptyInput));
    }

    #[test]
    fn labels_are_normalized_dense() {
        // Sparse labels compress onto 0..n keeping their order.
        let k = TriangulationComplex::build(&[[10, 20, 30], [10, 20, 40], [10, 30, 40], [20, 30, 40]]).unwrap();
        assert_eq!(k.vertex_count(), 4);
        assert_eq!(k, samples::tetrahedron());
    }

    #[test]
    fn duplicate_faces_collapse() {
        let k = TriangulationComplex::build(&[[0, 1, 2], [2, 1, 0], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
        assert_eq!(k.f_vector().f2, 4);
    }

    #[test]
    fn tetrahedron_link_is_triangle() {
        let k = samples::tetrahedron();
        let lk = k.link_cycle(0).unwrap();
        assert_eq!(lk.vertices(), &[1, 2, 3]);
    }

    #[test]
    fn open_disk_link_is_not_a_cycle() {
        let k = TriangulationComplex::build(&[[0, 1, 2], [0, 1, 3]]).unwrap();
        assert_eq!(k.link_cycle(0), Err(ComplexError::NotACycle(0)));
    }

    #[test]
    fn manifold_checks() {
        assert!(samples::tetrahedron().is_combinatorial_2_manifold().is_ok());
        assert!(samples::octahedron().is_combinatorial_2_manifold().is_ok());
        assert!(samples::icosahedron().is_combinatorial_2_manifold().is_ok());
        // Two tetrahedra sharing the face {0,1,2}: the shared face sits in
        // links three deep, so vertex 0 fails.
        let k = TriangulationComplex::build(&[
            [0, 1, 2],
            [0, 1, 3],
            [0, 2, 3],
            [1, 2, 3],
            [0, 1, 4],
            [0, 2, 4],
            [1, 2, 4],
        ])
        .unwrap();
        assert_eq!(k.is_combinatorial_2_manifold(), Err(ComplexError::NotManifold(0)));
    }

    #[test]
    fn euler_characteristic_of_samples() {
        assert_eq!(samples::octahedron().euler_characteristic(), 2);
        assert_eq!(samples::icosahedron().euler_characteristic(), 2);
        assert_eq!(samples::torus_7().euler_characteristic(), 0);
        assert_eq!(samples::projective_plane_6().euler_characteristic(), 1);
    }

    #[test]
    fn degree_regularity() {
        assert_eq!(samples::octahedron().degree_regular_type(), Some(4));
        assert_eq!(samples::icosahedron().degree_regular_type(), Some(5));
        assert_eq!(samples::torus_7().degree_regular_type(), Some(6));
        // Stellar subdivision of one tetrahedron face mixes degrees 3 and 4.
        let k = TriangulationComplex::build(&[
            [0, 1, 2],
            [0, 1, 3],
            [0, 2, 3],
            [1, 2, 4],
            [1, 3, 4],
            [2, 3, 4],
        ])
        .unwrap();
        assert!(k.is_combinatorial_2_manifold().is_ok());
        assert_eq!(k.degree_regular_type(), None);
    }

    #[test]
    fn star_union_counts() {
        let k = samples::tetrahedron();
        assert_eq!(k.star_union_face_count(&[0]).unwrap(), 3);
        assert_eq!(k.star_union_face_count(&[0, 1]).unwrap(), 4);
        assert_eq!(k.star_union_face_count(&[]).unwrap(), 0);
        assert_eq!(k.star_union_face_count(&[9]), Err(ComplexError::UnknownVertex(9)));
    }

    #[test]
    fn relabel_preserves_structure() {
        let k = samples::octahedron();
        let p = Permutation::from_cycles(6, &[&[0, 3, 1], &[2, 5]]).unwrap();
        let kr = k.relabel(&p);
        assert_eq!(kr.f_vector(), k.f_vector());
        assert!(kr.is_combinatorial_2_manifold().is_ok());
        assert_eq!(kr.degree_regular_type(), Some(4));
    }

    #[test]
    fn disconnected_euler_is_fine() {
        // Two disjoint tetrahedra: χ = 4, no connectivity.
        let k = TriangulationComplex::build(&[
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
        assert!(!k.is_connected());
        assert_eq!(k.euler_characteristic(), 4);
        assert!(k.is_combinatorial_2_manifold().is_ok());
    }
}
