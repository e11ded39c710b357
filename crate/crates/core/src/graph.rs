//! Label-free graph invariants of a complex's edge graph.
//!
//! For a graph `G` and an integer `m`, the common-neighbor graph `G_m(G)`
//! joins `u ≠ v` exactly when they have precisely `m` common neighbors in
//! `G`. The isomorphism type of `G_m(EG(K))` is an isomorphism invariant of
//! the complex `K`, and for small complexes the whole family
//! `m = 0, …, n−2` is a cheap, surprisingly sharp fingerprint: most
//! non-isomorphic surfaces on few vertices already differ in one of these
//! shapes.

use std::fmt;

use crate::complex::TriangulationComplex;

/// Undirected simple graph on `0..n` (`n ≤ 64`), adjacency as bit rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= 64, "SimpleGraph supports at most 64 vertices");
        SimpleGraph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b && a < self.n && b < self.n);
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as sorted pairs, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            let mut row = self.adj[a] >> (a + 1) << (a + 1);
            while row != 0 {
                let b = row.trailing_zeros() as usize;
                out.push((a, b));
                row &= row - 1;
            }
        }
        out
    }

    pub fn common_neighbor_count(&self, a: usize, b: usize) -> usize {
        (self.adj[a] & self.adj[b]).count_ones() as usize
    }

    /// The graph on the same vertices joining `u ~ v` iff they have exactly
    /// `m` common neighbors.
    pub fn common_neighbor_graph(&self, m: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                if self.common_neighbor_count(a, b) == m {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// The graph relabeled by `p`.
    pub fn relabel(&self, p: &crate::perm::Permutation) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for (a, b) in self.edges() {
            g.add_edge(p.apply(a), p.apply(b));
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let mut row = self.adj[v];
                while row != 0 {
                    let w = row.trailing_zeros() as usize;
                    row &= row - 1;
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// The edge graph (1-skeleton) of a complex.
pub fn edge_graph(k: &TriangulationComplex) -> SimpleGraph {
    SimpleGraph::from_edges(k.vertex_count(), k.edges())
}

/// Isomorphism type of one connected component.
///
/// `Other` carries a canonical certificate — the lexicographically least
/// adjacency bit matrix over all orderings of the component — so equal
/// variants mean isomorphic components even outside the named families.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentShape {
    /// Cycle on `k ≥ 3` vertices.
    Cycle(usize),
    /// Path on `k ≥ 2` vertices (`Path(2)` is a single edge).
    Path(usize),
    /// A single vertex without edges.
    Isolated,
    /// Anything else: vertex count plus canonical adjacency rows.
    Other(usize, Vec<u64>),
}

/// Multiset of component shapes: the label-free isomorphism type of a graph
/// whose components are paths, cycles, and isolated vertices — with a
/// canonical-matrix fallback for anything richer.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphShape(Vec<ComponentShape>);

impl GraphShape {
    pub fn components(&self) -> &[ComponentShape] {
        &self.0
    }

    pub fn is_null(&self) -> bool {
        self.0.iter().all(|c| matches!(c, ComponentShape::Isolated))
    }
}

impl fmt::Display for GraphShape {
    /// Groups equal shapes with a multiplier: `3×P2+6×I`, `C12`, `2×C6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "empty");
        }
        let name = |c: &ComponentShape| match c {
            ComponentShape::Cycle(k) => format!("C{k}"),
            ComponentShape::Path(k) => format!("P{k}"),
            ComponentShape::Isolated => "I".to_string(),
            ComponentShape::Other(k, _) => format!("X{k}"),
        };
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            let count = j - i;
            let n = name(&self.0[i]);
            parts.push(if count == 1 { n } else { format!("{count}×{n}") });
            i = j;
        }
        write!(f, "{}", parts.join("+"))
    }
}

impl fmt::Debug for GraphShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GraphShape({self})")
    }
}

/// The label-free shape of a graph: classify each connected component and
/// sort the resulting multiset.
pub fn graph_shape(g: &SimpleGraph) -> GraphShape {
    let mut shapes: Vec<ComponentShape> = g.components().iter().map(|c| component_shape(g, c)).collect();
    shapes.sort();
    GraphShape(shapes)
}

fn component_shape(g: &SimpleGraph, comp: &[usize]) -> ComponentShape {
    let k = comp.len();
    if k == 1 {
        return ComponentShape::Isolated;
    }
    let degs: Vec<usize> = comp.iter().map(|&v| g.degree(v)).collect();
    let edge_count: usize = degs.iter().sum::<usize>() / 2;
    if degs.iter().all(|&d| d == 2) && edge_count == k {
        return ComponentShape::Cycle(k);
    }
    if edge_count == k - 1 && degs.iter().all(|&d| d <= 2) {
        return ComponentShape::Path(k);
    }
    ComponentShape::Other(k, canonical_component_matrix(g, comp))
}

/// Canonical adjacency matrix of the induced subgraph: the least sequence of
/// adjacency rows (row `i` = bits toward the `i` vertices placed before it,
/// compared as integers) over all orderings of `comp`. Vertices are placed
/// one at a time keeping exactly the placements that stay minimal; states
/// whose remaining candidates all see identical rows share their future and
/// are merged, which tames the otherwise factorial symmetric cases.
fn canonical_component_matrix(g: &SimpleGraph, comp: &[usize]) -> Vec<u64> {
    let k = comp.len();
    assert!(k <= 24, "canonical matrix is only computed for small components");
    // Adjacency of the induced subgraph on local indices.
    let local: Vec<u64> = comp
        .iter()
        .map(|&v| {
            let mut row = 0u64;
            for (j, &w) in comp.iter().enumerate() {
                if g.has_edge(v, w) {
                    row |= 1 << j;
                }
            }
            row
        })
        .collect();

    // A state: which vertices are placed (mask) plus, for each vertex, its
    // row toward the placed prefix in placement order. Rows of unplaced
    // vertices fully determine the reachable futures, so equal states merge.
    #[derive(PartialEq, Eq, Hash, Clone)]
    struct State {
        placed: u32,
        rows: Vec<u64>,
    }
    let mut states: std::collections::HashSet<State> =
        [State { placed: 0, rows: vec![0; k] }].into_iter().collect();
    let mut best_rows: Vec<u64> = Vec::new();
    for step in 0..k {
        let mut best_row = u64::MAX;
        let mut next: std::collections::HashSet<State> = Default::default();
        for state in &states {
            for cand in 0..k {
                if state.placed >> cand & 1 == 1 {
                    continue;
                }
                let row = state.rows[cand];
                if row > best_row {
                    continue;
                }
                if row < best_row {
                    best_row = row;
                    next.clear();
                }
                let mut s = state.clone();
                s.placed |= 1 << cand;
                for x in 0..k {
                    if s.placed >> x & 1 == 0 && local[x] >> cand & 1 == 1 {
                        s.rows[x] |= 1 << step;
                    }
                }
                s.rows[cand] = 0;
                next.insert(s);
            }
        }
        states = next;
        best_rows.push(best_row);
    }
    best_rows
}

/// The family of common-neighbor-graph shapes of the edge graph of `k`,
/// for `m = 0, …, n − 2` (two vertices share at most `n − 2` neighbors).
pub fn fingerprint(k: &TriangulationComplex) -> Vec<GraphShape> {
    let eg = edge_graph(k);
    let n = k.vertex_count();
    (0..=n.saturating_sub(2)).map(|m| graph_shape(&eg.common_neighbor_graph(m))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::samples;

    fn shape_str(g: &SimpleGraph) -> String {
        graph_shape(g).to_string()
    }

    #[test]
    fn edge_graph_of_tetrahedron_is_complete() {
        let eg = edge_graph(&samples::tetrahedron());
        assert_eq!(eg.edge_count(), 6);
        assert!((0..4).all(|v| eg.degree(v) == 3));
    }

    #[test]
    fn octahedron_edge_graph_misses_a_perfect_matching() {
        let eg = edge_graph(&samples::octahedron());
        assert_eq!(eg.edge_count(), 12);
        let non_edges: Vec<(usize, usize)> = (0..6)
            .flat_map(|a| ((a + 1)..6).map(move |b| (a, b)))
            .filter(|&(a, b)| !eg.has_edge(a, b))
            .collect();
        assert_eq!(non_edges.len(), 3);
        // The three non-edges are pairwise disjoint.
        let mut seen = std::collections::HashSet::new();
        for (a, b) in non_edges {
            assert!(seen.insert(a) && seen.insert(b));
        }
    }

    #[test]
    fn common_neighbors_in_complete_graph() {
        // In K4 every pair has exactly the 2 remaining vertices in common.
        let eg = edge_graph(&samples::tetrahedron());
        let g2 = eg.common_neighbor_graph(2);
        assert_eq!(g2.edge_count(), 6);
        assert_eq!(shape_str(&g2), "X4"); // K4 itself: not a path or cycle
        assert!(graph_shape(&eg.common_neighbor_graph(0)).is_null());
    }

    #[test]
    fn shapes_of_paths_cycles_and_mixtures() {
        // A 4-cycle, a 3-vertex path, and a lone edge.
        let mut g = SimpleGraph::new(9);
        for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (7, 8)] {
            g.add_edge(a, b);
        }
        assert_eq!(shape_str(&g), "C4+P2+P3");
        let null = SimpleGraph::new(5);
        assert_eq!(shape_str(&null), "5×I");
        assert!(graph_shape(&null).is_null());
    }

    #[test]
    fn shape_is_label_free() {
        let g = SimpleGraph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)]);
        let p = Permutation::from_cycles(7, &[&[0, 6, 3, 1], &[2, 5]]).unwrap();
        assert_eq!(graph_shape(&g), graph_shape(&g.relabel(&p)));
    }

    #[test]
    fn other_certificates_separate_non_isomorphic_graphs() {
        // K4 versus the "paw" (triangle plus pendant): same vertex count,
        // both irregular enough to fall into Other.
        let k4 = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let paw = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]);
        assert_ne!(graph_shape(&k4), graph_shape(&paw));
        // …and the certificate is invariant under relabeling.
        let p = Permutation::from_cycles(4, &[&[0, 3], &[1, 2]]).unwrap();
        assert_eq!(graph_shape(&paw), graph_shape(&paw.relabel(&p)));
    }

    #[test]
    fn fingerprint_has_n_minus_1_levels() {
        let fp = fingerprint(&samples::octahedron());
        assert_eq!(fp.len(), 5); // m = 0..=4
        // Octahedron: adjacent vertices share 2 neighbors, antipodal pairs share 4.
        assert_eq!(fp[2].to_string(), "X6"); // G_2 = the edge graph itself = K2,2,2
        assert_eq!(fp[4].to_string(), "3×P2"); // G_4 = the three antipodal pairs
    }

    #[test]
    fn fingerprint_commutes_with_relabeling() {
        let k = samples::icosahedron();
        let p = Permutation::from_cycles(12, &[&[0, 4, 8, 2], &[1, 7], &[3, 11, 5]]).unwrap();
        assert_eq!(fingerprint(&k), fingerprint(&k.relabel(&p)));
    }
}
