//! Closed polyhedral maps: surfaces tiled by polygons of arbitrary size.
//!
//! A [`PolyhedralMap`] is given by its faces as cyclic vertex sequences. To
//! be valid it must satisfy the polyhedral conditions: faces are simple
//! polygons, any two faces meet in at most one edge, every edge lies in
//! exactly two faces, the faces around each vertex close into a single
//! umbrella, and the whole map is connected. Triangulations embed via
//! [`PolyhedralMap::from_triangulation`]; [`PolyhedralMap::dual`] swaps the
//! roles of vertices and faces.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::complex::{FVector, TriangulationComplex, VertexId};
use crate::perm::Permutation;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MapError {
    #[error("map has no faces")]
    EmptyInput,
    #[error("face {index} has {len} vertices; a polygon needs at least 3")]
    FaceTooShort { index: usize, len: usize },
    #[error("face {index} repeats a vertex")]
    RepeatedVertex { index: usize },
    #[error("face {index} uses vertex {vertex}, beyond the declared {n} vertices")]
    LabelOutOfRange { index: usize, vertex: VertexId, n: usize },
    #[error("vertex {vertex} lies in no face")]
    IsolatedVertex { vertex: VertexId },
    #[error("faces {first} and {second} share {shared} vertices without sharing a single edge")]
    ImproperIntersection { first: usize, second: usize, shared: usize },
    #[error("edge ({a}, {b}) lies in {count} faces; a closed map needs exactly 2")]
    EdgeFaceCount { a: VertexId, b: VertexId, count: usize },
    #[error("the faces around vertex {vertex} do not close into a single cycle")]
    BrokenUmbrella { vertex: VertexId },
    #[error("map is not connected")]
    NotConnected,
}

/// Faces all of size `p`, vertices all of degree `q`, on `n` vertices.
/// Displays as the Schläfli-style symbol `{p,q}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivelarType {
    pub n: usize,
    pub p: usize,
    pub q: usize,
}

impl std::fmt::Display for EquivelarType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{},{}}}", self.p, self.q)
    }
}

/// A validated closed polyhedral map.
///
/// Faces are stored in a canonical form — each cycle rotated to start at its
/// smallest vertex and directed toward the smaller of that vertex's two
/// cycle neighbors, the face list sorted — so structural equality of two
/// `PolyhedralMap`s means equality of labeled maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedralMap {
    n: usize,
    faces: Vec<Vec<VertexId>>,
    edges: Vec<(VertexId, VertexId)>,
    neighbors: Vec<Vec<VertexId>>,
    vertex_faces: Vec<Vec<usize>>,
}

/// Rotates/reflects a cycle into the canonical representative described on
/// [`PolyhedralMap`].
fn canonical_cycle(cycle: &[VertexId]) -> Vec<VertexId> {
    let k = cycle.len();
    let mi = (0..k).min_by_key(|&i| cycle[i]).unwrap();
    let forward_second = cycle[(mi + 1) % k];
    let backward_second = cycle[(mi + k - 1) % k];
    if forward_second <= backward_second {
        (0..k).map(|i| cycle[(mi + i) % k]).collect()
    } else {
        (0..k).map(|i| cycle[(mi + k - i) % k]).collect()
    }
}

fn cycle_edges(face: &[VertexId]) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
    let k = face.len();
    (0..k).map(move |i| {
        let (a, b) = (face[i], face[(i + 1) % k]);
        (a.min(b), a.max(b))
    })
}

impl PolyhedralMap {
    /// Validates and normalizes a face list over the vertex set `0..n`.
    pub fn new(n: usize, faces: Vec<Vec<VertexId>>) -> Result<Self, MapError> {
        if faces.is_empty() {
            return Err(MapError::EmptyInput);
        }
        for (index, face) in faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(MapError::FaceTooShort { index, len: face.len() });
            }
            if let Some(&vertex) = face.iter().find(|&&v| v >= n) {
                return Err(MapError::LabelOutOfRange { index, vertex, n });
            }
            let mut seen = face.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != face.len() {
                return Err(MapError::RepeatedVertex { index });
            }
        }
        let mut faces: Vec<Vec<VertexId>> = faces.iter().map(|f| canonical_cycle(f)).collect();
        faces.sort();

        // Any two faces must meet in nothing, one vertex, or one full edge.
        for i in 0..faces.len() {
            for j in i + 1..faces.len() {
                let common: Vec<VertexId> =
                    faces[i].iter().copied().filter(|v| faces[j].contains(v)).collect();
                if common.len() < 2 {
                    continue;
                }
                let is_edge_of = |f: &[VertexId], a: VertexId, b: VertexId| {
                    cycle_edges(f).any(|e| e == (a.min(b), a.max(b)))
                };
                if common.len() > 2
                    || !is_edge_of(&faces[i], common[0], common[1])
                    || !is_edge_of(&faces[j], common[0], common[1])
                {
                    return Err(MapError::ImproperIntersection {
                        first: i,
                        second: j,
                        shared: common.len(),
                    });
                }
            }
        }

        // Every edge in exactly two faces.
        let mut edge_faces: BTreeMap<(VertexId, VertexId), Vec<usize>> = BTreeMap::new();
        for (fi, face) in faces.iter().enumerate() {
            for e in cycle_edges(face) {
                edge_faces.entry(e).or_default().push(fi);
            }
        }
        for (&(a, b), fs) in &edge_faces {
            if fs.len() != 2 {
                return Err(MapError::EdgeFaceCount { a, b, count: fs.len() });
            }
        }
        let edges: Vec<(VertexId, VertexId)> = edge_faces.keys().copied().collect();
        let mut neighbors: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for &(a, b) in &edges {
            neighbors[a].push(b);
            neighbors[b].push(a);
        }
        for nb in &mut neighbors {
            nb.sort_unstable();
        }
        let mut vertex_faces: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (fi, face) in faces.iter().enumerate() {
            for &v in face {
                vertex_faces[v].push(fi);
            }
        }

        // The faces around each vertex must close into one umbrella: each
        // face at v pairs the two neighbors of v it contains; those pairs
        // must form a single cycle through all neighbors of v.
        for v in 0..n {
            if vertex_faces[v].is_empty() {
                return Err(MapError::IsolatedVertex { vertex: v });
            }
            let mut pairs: HashMap<VertexId, Vec<VertexId>> = HashMap::new();
            for &fi in &vertex_faces[v] {
                let face = &faces[fi];
                let pos = face.iter().position(|&x| x == v).unwrap();
                let prev = face[(pos + face.len() - 1) % face.len()];
                let next = face[(pos + 1) % face.len()];
                pairs.entry(prev).or_default().push(next);
                pairs.entry(next).or_default().push(prev);
            }
            let ok = neighbors[v].iter().all(|w| pairs.get(w).map_or(false, |p| p.len() == 2))
                && pairs.len() == neighbors[v].len()
                && single_cycle(&pairs);
            if !ok {
                return Err(MapError::BrokenUmbrella { vertex: v });
            }
        }

        // Connectivity over the skeleton.
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        if count != n {
            return Err(MapError::NotConnected);
        }

        Ok(PolyhedralMap { n, faces, edges, neighbors, vertex_faces })
    }

    /// Views a triangulated surface as a map with triangular faces.
    pub fn from_triangulation(k: &TriangulationComplex) -> Result<Self, MapError> {
        let faces = k.faces().iter().map(|t| t.vertices().to_vec()).collect();
        PolyhedralMap::new(k.vertex_count(), faces)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Faces in canonical cycle form, sorted.
    pub fn faces(&self) -> &[Vec<VertexId>] {
        &self.faces
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors[v].len()
    }

    pub fn f_vector(&self) -> FVector {
        FVector { f0: self.n, f1: self.edges.len(), f2: self.faces.len() }
    }

    pub fn euler_characteristic(&self) -> i64 {
        let f = self.f_vector();
        f.f0 as i64 - f.f1 as i64 + f.f2 as i64
    }

    /// `Some` when all faces have one size `p` and all vertices one degree `q`.
    pub fn equivelar_type(&self) -> Option<EquivelarType> {
        let p = self.faces[0].len();
        if !self.faces.iter().all(|f| f.len() == p) {
            return None;
        }
        let q = self.neighbors[0].len();
        if !self.neighbors.iter().all(|nb| nb.len() == q) {
            return None;
        }
        Some(EquivelarType { n: self.n, p, q })
    }

    /// The dual map: one vertex per face of `self`; one face per vertex of
    /// `self`, listing the faces around that vertex in umbrella order.
    pub fn dual(&self) -> PolyhedralMap {
        let mut edge_faces: BTreeMap<(VertexId, VertexId), Vec<usize>> = BTreeMap::new();
        for (fi, face) in self.faces.iter().enumerate() {
            for e in cycle_edges(face) {
                edge_faces.entry(e).or_default().push(fi);
            }
        }
        let mut dual_faces = Vec::with_capacity(self.n);
        for v in 0..self.n {
            // Two faces at v are umbrella-consecutive iff they share an
            // edge through v.
            let mut adjacency: HashMap<usize, Vec<usize>> = HashMap::new();
            for &w in &self.neighbors[v] {
                let fs = &edge_faces[&(v.min(w), v.max(w))];
                adjacency.entry(fs[0]).or_default().push(fs[1]);
                adjacency.entry(fs[1]).or_default().push(fs[0]);
            }
            let start = *adjacency.keys().min().unwrap();
            let mut cycle = vec![start];
            let mut prev = start;
            let mut cur = *adjacency[&start].iter().min().unwrap();
            while cur != start {
                cycle.push(cur);
                let next =
                    adjacency[&cur].iter().copied().find(|&f| f != prev).expect("umbrella");
                prev = cur;
                cur = next;
            }
            dual_faces.push(cycle);
        }
        PolyhedralMap::new(self.faces.len(), dual_faces)
            .expect("the dual of a valid closed map is a valid closed map")
    }

    /// The map with every vertex `v` renamed to `p(v)`.
    pub fn relabel(&self, p: &Permutation) -> PolyhedralMap {
        assert_eq!(p.degree(), self.n, "permutation degree must match vertex count");
        let faces = self
            .faces
            .iter()
            .map(|f| f.iter().map(|&v| p.apply(v)).collect())
            .collect();
        PolyhedralMap::new(self.n, faces).expect("relabeling preserves validity")
    }

    fn bfs_distances(&self, from: VertexId) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[from] = 0;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.neighbors[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Whether a 2-regular pairing graph is one cycle through all its nodes.
fn single_cycle(pairs: &HashMap<VertexId, Vec<VertexId>>) -> bool {
    let start = *pairs.keys().min().unwrap();
    let mut visited = 1;
    let mut prev = start;
    let mut cur = pairs[&start][0];
    while cur != start {
        visited += 1;
        if visited > pairs.len() {
            return false;
        }
        let nexts = &pairs[&cur];
        // Step to the partner we did not arrive from; with multiplicity,
        // arriving from a doubled partner still consumes only one copy.
        let next = if nexts[0] == prev { nexts[1] } else { nexts[0] };
        prev = cur;
        cur = next;
    }
    visited == pairs.len()
}

/// Searches for a vertex bijection `w` with `m1.relabel(&w) == m2`,
/// respecting face cycles up to rotation and reflection.
pub fn maps_isomorphic(m1: &PolyhedralMap, m2: &PolyhedralMap) -> Option<Permutation> {
    if m1.n != m2.n || m1.f_vector() != m2.f_vector() {
        return None;
    }
    let lens = |m: &PolyhedralMap| {
        let mut l: Vec<usize> = m.faces.iter().map(|f| f.len()).collect();
        l.sort_unstable();
        l
    };
    if lens(m1) != lens(m2) {
        return None;
    }
    // Per-vertex invariant: degree, incident face sizes, distance profile.
    let sig = |m: &PolyhedralMap| -> Vec<(usize, Vec<usize>, Vec<usize>)> {
        (0..m.n)
            .map(|v| {
                let mut face_lens: Vec<usize> =
                    m.vertex_faces[v].iter().map(|&fi| m.faces[fi].len()).collect();
                face_lens.sort_unstable();
                let mut dists = m.bfs_distances(v);
                dists.sort_unstable();
                (m.degree(v), face_lens, dists)
            })
            .collect()
    };
    let sig1 = sig(m1);
    let sig2 = sig(m2);
    {
        let mut a = sig1.clone();
        let mut b = sig2.clone();
        a.sort();
        b.sort();
        if a != b {
            return None;
        }
    }
    let face_index: HashMap<Vec<VertexId>, usize> = m2
        .faces
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let mut key = f.clone();
            key.sort_unstable();
            (key, i)
        })
        .collect();

    struct Search<'a> {
        m1: &'a PolyhedralMap,
        m2: &'a PolyhedralMap,
        sig1: &'a [(usize, Vec<usize>, Vec<usize>)],
        sig2: &'a [(usize, Vec<usize>, Vec<usize>)],
        face_index: &'a HashMap<Vec<VertexId>, usize>,
        img: Vec<Option<VertexId>>,
        used: Vec<bool>,
    }
    impl Search<'_> {
        fn run(&mut self, assigned: usize) -> bool {
            let n = self.img.len();
            if assigned == n {
                return true;
            }
            let v = (0..n)
                .filter(|&v| self.img[v].is_none())
                .max_by_key(|&v| {
                    let anchors = self.m1.neighbors[v]
                        .iter()
                        .filter(|&&w| self.img[w].is_some())
                        .count();
                    (anchors, usize::MAX - v)
                })
                .unwrap();
            'cand: for u in 0..n {
                if self.used[u] || self.sig1[v] != self.sig2[u] {
                    continue;
                }
                for w in 0..n {
                    if let Some(wu) = self.img[w] {
                        if self.m1.has_edge(v, w) != self.m2.has_edge(u, wu) {
                            continue 'cand;
                        }
                    }
                }
                // Fully assigned faces at v must land on faces of m2 with
                // the same cyclic structure.
                for &fi in &self.m1.vertex_faces[v] {
                    let face = &self.m1.faces[fi];
                    let map = |x: VertexId| if x == v { Some(u) } else { self.img[x] };
                    let image: Option<Vec<VertexId>> = face.iter().map(|&x| map(x)).collect();
                    if let Some(image) = image {
                        let mut key = image.clone();
                        key.sort_unstable();
                        match self.face_index.get(&key) {
                            Some(&j) if canonical_cycle(&image) == self.m2.faces[j] => {}
                            _ => continue 'cand,
                        }
                    }
                }
                self.img[v] = Some(u);
                self.used[u] = true;
                if self.run(assigned + 1) {
                    return true;
                }
                self.img[v] = None;
                self.used[u] = false;
            }
            false
        }
    }
    let mut s = Search {
        m1,
        m2,
        sig1: &sig1,
        sig2: &sig2,
        face_index: &face_index,
        img: vec![None; m1.n],
        used: vec![false; m1.n],
    };
    if !s.run(0) {
        return None;
    }
    let p = Permutation::from_images(s.img.iter().map(|i| i.unwrap()).collect()).unwrap();
    debug_assert!(m1.relabel(&p) == *m2);
    Some(p)
}
