//! Exhaustive search for degree-regular triangulated closed surfaces.
//!
//! The search grows a face set one triangle at a time while maintaining, for
//! every vertex, its link as a disjoint union of simple paths; a link may
//! close into a cycle only when it spans exactly `d` vertices, at which
//! point the vertex is finished. Labelings are normalized so that each
//! isomorphism class is met a bounded number of times: the link of vertex 0
//! is fixed to the cycle `1,…,d` up front, and a previously unused vertex
//! may only enter as the smallest unused label. Every completion therefore
//! appears exactly once per normalized labeling, and exact deduplication on
//! canonical forms reduces the leaves to one representative per class.
//!
//! Branching happens at a deterministically chosen open vertex/endpoint
//! pair `(v, x)`: the candidate set ranges over every legal third vertex of
//! the one remaining face on the edge `{v, x}`, so sibling branches are
//! mutually exclusive and the tree never revisits a labeled complex.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::complex::{ComplexError, Triangle, TriangulationComplex};
use crate::iso::canonical;
use crate::orientation::{orientability, Orientability};
use crate::params::admissible_parameters;

/// Hard cap on the vertex budget; search state uses fixed-size tables.
pub const MAX_VERTICES: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("(n, d) = ({n}, {d}) is infeasible: {reason}")]
    InfeasibleParameters { n: usize, d: usize, reason: &'static str },
    #[error("n = {n} exceeds the supported maximum of {max} vertices")]
    TooManyVertices { n: usize, max: usize },
}

/// Tuning knobs for [`enumerate_degree_regular`].
#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Keep only orientable completions.
    pub orientable_only: bool,
    /// Apply the star-union lower-bound prune at every node.
    pub prune_star_bound: bool,
    /// Expand the tree breadth-first into at least this many subtrees and
    /// search them in parallel; `0` or `1` searches sequentially.
    pub parallel_width: usize,
    /// Truncate the final class list (after deduplication and sorting) to
    /// this many entries, flagging the result as truncated.
    pub limit: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            orientable_only: false,
            prune_star_bound: true,
            parallel_width: 0,
            limit: None,
        }
    }
}

/// Counters describing one search run. All counts are properties of the
/// (deterministic) search tree, so they do not depend on thread scheduling.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// States visited, including the root.
    pub nodes: u64,
    /// Completions on the full vertex budget.
    pub leaves: u64,
    /// Leaves that turned out non-orientable (counted whether or not they
    /// were kept).
    pub nonorientable_leaves: u64,
    /// Kept leaves discarded as repeats of an already-found class.
    pub duplicate_leaves: u64,
    /// States where some open endpoint admitted no continuation.
    pub dead_ends: u64,
    /// States cut by the star-union lower bound.
    pub star_prunes: u64,
    /// Closed-up completions that used fewer than `n` vertices.
    pub undersized_completions: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.leaves += other.leaves;
        self.nonorientable_leaves += other.nonorientable_leaves;
        self.duplicate_leaves += other.duplicate_leaves;
        self.dead_ends += other.dead_ends;
        self.star_prunes += other.star_prunes;
        self.undersized_completions += other.undersized_completions;
    }
}

/// Outcome of a search: one canonical representative per isomorphism class,
/// sorted by canonical form.
#[derive(Clone, Debug)]
pub struct ClassificationResult {
    pub classes: Vec<TriangulationComplex>,
    pub stats: SearchStats,
    pub truncated: bool,
}

/// A partially built degree-regular triangulation.
///
/// The state always contains the normalized seed: vertex 0 finished, with
/// link cycle `1, 2, …, d`. Faces added afterwards must keep every link a
/// union of paths (or close it exactly at degree `d`) and may introduce at
/// most one fresh vertex, which must be the smallest unused label.
#[derive(Clone)]
pub struct PartialComplex {
    n: usize,
    d: usize,
    target_faces: usize,
    faces: Vec<(u8, u8, u8)>,
    /// `fresh[i]` records whether face `i` of the post-seed suffix
    /// introduced a new vertex (for undo).
    fresh: Vec<bool>,
    edge_faces: [[u8; MAX_VERTICES]; MAX_VERTICES],
    apex: [[[u8; 2]; MAX_VERTICES]; MAX_VERTICES],
    degree: [u8; MAX_VERTICES],
    open_ends: [u8; MAX_VERTICES],
    star: [u8; MAX_VERTICES],
    closed: [bool; MAX_VERTICES],
    max_used: u8,
}

enum Selection {
    /// Every used vertex is finished.
    Complete,
    /// Some open endpoint admits no legal continuation.
    Dead,
    /// Branch at `(v, x)` over the candidate third vertices.
    Branch(u8, u8, Vec<u8>),
}

impl PartialComplex {
    /// Seeds the normalized search state for an `(n, d)` run.
    pub fn new(n: usize, d: usize) -> Result<Self, EnumerateError> {
        if n > MAX_VERTICES {
            return Err(EnumerateError::TooManyVertices { n, max: MAX_VERTICES });
        }
        let infeasible = |reason| EnumerateError::InfeasibleParameters { n, d, reason };
        if d < 3 {
            return Err(infeasible("a closed surface needs vertex degrees of at least 3"));
        }
        if n < d + 1 {
            return Err(infeasible("a vertex of degree d needs at least d + 1 vertices"));
        }
        if (n * d) % 6 != 0 {
            return Err(infeasible(
                "the face count nd/3 and edge count nd/2 must be integers",
            ));
        }
        let mut state = PartialComplex {
            n,
            d,
            target_faces: n * d / 3,
            faces: Vec::with_capacity(n * d / 3),
            fresh: Vec::new(),
            edge_faces: [[0; MAX_VERTICES]; MAX_VERTICES],
            apex: [[[0; 2]; MAX_VERTICES]; MAX_VERTICES],
            degree: [0; MAX_VERTICES],
            open_ends: [0; MAX_VERTICES],
            star: [0; MAX_VERTICES],
            closed: [false; MAX_VERTICES],
            max_used: d as u8,
        };
        for i in 1..d {
            state.apply(0, i as u8, i as u8 + 1);
        }
        state.apply(0, d as u8, 1);
        debug_assert!(state.closed[0]);
        Ok(state)
    }

    pub fn vertex_budget(&self) -> usize {
        self.n
    }

    pub fn target_degree(&self) -> usize {
        self.d
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> Vec<Triangle> {
        self.faces
            .iter()
            .map(|&(a, b, c)| Triangle::new(a as usize, b as usize, c as usize).unwrap())
            .collect()
    }

    /// Largest label in use.
    pub fn max_used(&self) -> usize {
        self.max_used as usize
    }

    /// Whether all `n` vertices are used and finished.
    pub fn is_complete(&self) -> bool {
        self.max_used as usize == self.n - 1 && (0..self.n).all(|v| self.closed[v])
    }

    pub fn to_complex(&self) -> Result<TriangulationComplex, ComplexError> {
        let faces: Vec<[usize; 3]> = self
            .faces
            .iter()
            .map(|&(a, b, c)| [a as usize, b as usize, c as usize])
            .collect();
        TriangulationComplex::build(&faces)
    }

    /// Adds the face `{a, b, c}` if it keeps the state extendable: labels
    /// must stay contiguous (at most one fresh vertex, the smallest unused
    /// label), no edge may exceed two faces, no vertex may exceed degree
    /// `d`, and links must stay unions of paths except for a closure at
    /// exactly degree `d`. Returns whether the face was added.
    pub fn try_add_face(&mut self, a: usize, b: usize, c: usize) -> bool {
        if a == b || a == c || b == c || a >= self.n || b >= self.n || c >= self.n {
            return false;
        }
        let fresh_labels: Vec<usize> =
            [a, b, c].into_iter().filter(|&v| v > self.max_used as usize).collect();
        match fresh_labels[..] {
            [] => {}
            [f] if f == self.max_used as usize + 1 => {}
            _ => return false,
        }
        if !self.check_add(a as u8, b as u8, c as u8) {
            return false;
        }
        let fresh = !fresh_labels.is_empty();
        self.apply(a as u8, b as u8, c as u8);
        if fresh {
            self.max_used += 1;
        }
        self.fresh.push(fresh);
        true
    }

    /// Removes the most recently added post-seed face. Returns `false` when
    /// only the seed remains.
    pub fn remove_last_face(&mut self) -> bool {
        if self.fresh.is_empty() {
            return false;
        }
        let fresh = self.fresh.pop().unwrap();
        self.unapply();
        if fresh {
            self.max_used -= 1;
        }
        true
    }

    fn apexes(&self, a: u8, b: u8) -> &[u8] {
        &self.apex[a as usize][b as usize][..self.edge_faces[a as usize][b as usize] as usize]
    }

    /// Pure legality test for the face `{a, b, c}` against the current
    /// links. Does not consider label freshness.
    fn check_add(&self, a: u8, b: u8, c: u8) -> bool {
        if self.edge_faces[a as usize][b as usize] > 0 && self.apexes(a, b).contains(&c) {
            return false; // duplicate face
        }
        for (w, p, q) in [(a, b, c), (b, a, c), (c, a, b)] {
            let (w, p, q) = (w as usize, p as usize, q as usize);
            if self.closed[w] {
                return false;
            }
            let ep = self.edge_faces[w][p];
            let eq = self.edge_faces[w][q];
            if ep >= 2 || eq >= 2 {
                return false;
            }
            let entering = (ep == 0) as u8 + (eq == 0) as u8;
            if self.degree[w] + entering > self.d as u8 {
                return false;
            }
            if ep == 1 && eq == 1 {
                // Both are path endpoints in lk(w). Joining the two ends of
                // one path closes a cycle, legal only over all d vertices.
                let (other_end, length) = self.walk_path(w, p as u8);
                if other_end == q as u8 && length != self.d {
                    return false;
                }
            }
        }
        true
    }

    /// Follows the link path of `w` from the endpoint `start` to its other
    /// end; returns that end and the number of vertices on the path.
    fn walk_path(&self, w: usize, start: u8) -> (u8, usize) {
        debug_assert_eq!(self.edge_faces[w][start as usize], 1);
        let mut prev = start;
        let mut cur = self.apex[w][start as usize][0];
        let mut length = 2;
        while self.edge_faces[w][cur as usize] == 2 {
            let pair = &self.apex[w][cur as usize];
            let next = if pair[0] == prev { pair[1] } else { pair[0] };
            prev = cur;
            cur = next;
            length += 1;
        }
        (cur, length)
    }

    /// Applies a face assumed legal.
    fn apply(&mut self, a: u8, b: u8, c: u8) {
        debug_assert!(self.check_add(a, b, c));
        for (x, y, third) in [(a, b, c), (a, c, b), (b, c, a)] {
            let (xi, yi) = (x as usize, y as usize);
            let count = self.edge_faces[xi][yi];
            self.apex[xi][yi][count as usize] = third;
            self.apex[yi][xi][count as usize] = third;
            self.edge_faces[xi][yi] += 1;
            self.edge_faces[yi][xi] += 1;
            if count == 0 {
                self.degree[xi] += 1;
                self.degree[yi] += 1;
                self.open_ends[xi] += 1;
                self.open_ends[yi] += 1;
            } else {
                self.open_ends[xi] -= 1;
                self.open_ends[yi] -= 1;
            }
        }
        let mut tri = [a, b, c];
        tri.sort_unstable();
        self.faces.push((tri[0], tri[1], tri[2]));
        for v in [a, b, c] {
            let vi = v as usize;
            self.star[vi] += 1;
            self.closed[vi] = self.degree[vi] == self.d as u8 && self.open_ends[vi] == 0;
        }
    }

    /// Reverses the most recent [`PartialComplex::apply`].
    fn unapply(&mut self) {
        let (a, b, c) = self.faces.pop().expect("a face to remove");
        for (x, y, third) in [(a, b, c), (a, c, b), (b, c, a)] {
            let (xi, yi) = (x as usize, y as usize);
            self.edge_faces[xi][yi] -= 1;
            self.edge_faces[yi][xi] -= 1;
            let count = self.edge_faces[xi][yi];
            if count == 0 {
                self.degree[xi] -= 1;
                self.degree[yi] -= 1;
                self.open_ends[xi] -= 1;
                self.open_ends[yi] -= 1;
            } else {
                // The surviving apex entry must be the other one.
                if self.apex[xi][yi][0] == third {
                    self.apex[xi][yi][0] = self.apex[xi][yi][1];
                }
                if self.apex[yi][xi][0] == third {
                    self.apex[yi][xi][0] = self.apex[yi][xi][1];
                }
                self.open_ends[xi] += 1;
                self.open_ends[yi] += 1;
            }
        }
        for v in [a, b, c] {
            let vi = v as usize;
            self.star[vi] -= 1;
            self.closed[vi] = self.degree[vi] == self.d as u8 && self.open_ends[vi] == 0;
        }
    }

    /// Whether some small vertex set already certifies that no completion
    /// with `nd/3` faces exists: faces avoiding a set `S` never decrease,
    /// and a completed complex has at least `d`, `2d−2`, or `3d−6` faces
    /// meeting `S` for `|S|` = 1, 2, 3 respectively (stars overlap in at
    /// most the two faces of a shared edge).
    pub fn star_bound_exceeded(&self) -> bool {
        let f2 = self.target_faces as i64;
        let len = self.faces.len() as i64;
        let d = self.d as i64;
        let n = self.n;
        let single = d;
        let pair = 2 * d - 2;
        let triple = 3 * d - 6;
        if len + single > f2 {
            for u in 0..n {
                if len - self.star[u] as i64 + single > f2 {
                    return true;
                }
            }
        }
        if len + pair > f2 {
            for u in 0..n {
                for w in u + 1..n {
                    let meet =
                        self.star[u] as i64 + self.star[w] as i64 - self.edge_faces[u][w] as i64;
                    if len - meet + pair > f2 {
                        return true;
                    }
                }
            }
        }
        if len + triple > f2 {
            for u in 0..n {
                for w in u + 1..n {
                    for y in w + 1..n {
                        let shared = self.edge_faces[u][w] as i64
                            + self.edge_faces[u][y] as i64
                            + self.edge_faces[w][y] as i64;
                        let whole = (self.edge_faces[u][w] > 0
                            && self.apexes(u as u8, w as u8).contains(&(y as u8)))
                            as i64;
                        let meet = self.star[u] as i64 + self.star[w] as i64
                            + self.star[y] as i64
                            - shared
                            + whole;
                        if len - meet + triple > f2 {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// Deterministic branch choice: the open `(v, x)` pair with the fewest
    /// legal continuations, scanning in lexicographic order and stopping
    /// early on a forced move. A zero-candidate endpoint kills the state:
    /// legality of a fixed face only decays as the state grows.
    fn select(&self) -> Selection {
        let fresh_limit = (self.max_used as usize + 1).min(self.n - 1);
        let mut best: Option<(u8, u8, Vec<u8>)> = None;
        let mut any_open = false;
        for v in 0..=self.max_used as usize {
            if self.closed[v] {
                continue;
            }
            any_open = true;
            for x in 0..=self.max_used as usize {
                if self.edge_faces[v][x] != 1 {
                    continue;
                }
                let cap = best.as_ref().map_or(usize::MAX, |b| b.2.len());
                let mut zs: Vec<u8> = Vec::new();
                let mut capped = false;
                for z in 0..=fresh_limit {
                    if z == v || z == x {
                        continue;
                    }
                    if self.check_add(v as u8, x as u8, z as u8) {
                        zs.push(z as u8);
                        if zs.len() >= cap {
                            capped = true;
                            break;
                        }
                    }
                }
                if zs.is_empty() {
                    return Selection::Dead;
                }
                if !capped {
                    let forced = zs.len() == 1;
                    best = Some((v as u8, x as u8, zs));
                    if forced {
                        return Selection::Branch(v as u8, x as u8, best.unwrap().2);
                    }
                }
            }
        }
        match best {
            Some((v, x, zs)) => Selection::Branch(v, x, zs),
            None => {
                debug_assert!(!any_open, "open vertices always have endpoints");
                Selection::Complete
            }
        }
    }
}

/// The optional search prune, exposed for inspection: `true` when the
/// star-union lower bound proves the state cannot complete.
pub fn prune_star_bound(state: &PartialComplex) -> bool {
    state.star_bound_exceeded()
}

fn handle_leaf(
    state: &PartialComplex,
    cfg: &SearchConfig,
    stats: &mut SearchStats,
    kept: &mut Vec<TriangulationComplex>,
) {
    if state.max_used() != state.n - 1 {
        stats.undersized_completions += 1;
        return;
    }
    stats.leaves += 1;
    let k = state.to_complex().expect("complete states are valid complexes");
    debug_assert_eq!(k.faces().len(), state.target_faces);
    let orientable = matches!(
        orientability(&k).expect("complete states are closed connected manifolds"),
        Orientability::Orientable(_)
    );
    if !orientable {
        stats.nonorientable_leaves += 1;
        if cfg.orientable_only {
            return;
        }
    }
    kept.push(k);
}

fn dfs(
    state: &mut PartialComplex,
    cfg: &SearchConfig,
    stats: &mut SearchStats,
    kept: &mut Vec<TriangulationComplex>,
) {
    stats.nodes += 1;
    if cfg.prune_star_bound && state.star_bound_exceeded() {
        stats.star_prunes += 1;
        return;
    }
    match state.select() {
        Selection::Complete => handle_leaf(state, cfg, stats, kept),
        Selection::Dead => stats.dead_ends += 1,
        Selection::Branch(v, x, zs) => {
            for z in zs {
                let fresh = z > state.max_used;
                state.apply(v, x, z);
                if fresh {
                    state.max_used += 1;
                }
                dfs(state, cfg, stats, kept);
                state.unapply();
                if fresh {
                    state.max_used -= 1;
                }
            }
        }
    }
}

/// Enumerates the isomorphism classes of closed triangulated surfaces on
/// exactly `n` vertices with every vertex of degree `d`.
pub fn enumerate_degree_regular(
    n: usize,
    d: usize,
    cfg: &SearchConfig,
) -> Result<ClassificationResult, EnumerateError> {
    let root = PartialComplex::new(n, d)?;
    let mut stats = SearchStats::default();
    let mut kept: Vec<TriangulationComplex> = Vec::new();

    if cfg.parallel_width <= 1 {
        let mut state = root;
        dfs(&mut state, cfg, &mut stats, &mut kept);
    } else {
        // Breadth-first expansion into independent subtrees.
        let mut frontier: VecDeque<PartialComplex> = VecDeque::from([root]);
        while !frontier.is_empty() && frontier.len() < cfg.parallel_width {
            let state = frontier.pop_front().unwrap();
            stats.nodes += 1;
            if cfg.prune_star_bound && state.star_bound_exceeded() {
                stats.star_prunes += 1;
                continue;
            }
            match state.select() {
                Selection::Complete => handle_leaf(&state, cfg, &mut stats, &mut kept),
                Selection::Dead => stats.dead_ends += 1,
                Selection::Branch(v, x, zs) => {
                    for z in zs {
                        let mut child = state.clone();
                        let fresh = z > child.max_used;
                        child.apply(v, x, z);
                        if fresh {
                            child.max_used += 1;
                        }
                        frontier.push_back(child);
                    }
                }
            }
        }
        let results: Vec<(SearchStats, Vec<TriangulationComplex>)> = frontier
            .into_par_iter()
            .map(|mut state| {
                let mut local_stats = SearchStats::default();
                let mut local_kept = Vec::new();
                dfs(&mut state, cfg, &mut local_stats, &mut local_kept);
                (local_stats, local_kept)
            })
            .collect();
        for (s, k) in results {
            stats.absorb(&s);
            kept.extend(k);
        }
    }

    // One representative per isomorphism class, in canonical-form order.
    let kept_count = kept.len();
    let mut canonical_leaves: Vec<(Vec<Triangle>, TriangulationComplex)> = kept
        .into_par_iter()
        .map(|k| {
            let form = canonical(&k).form;
            let faces: Vec<[usize; 3]> = form.iter().map(|t| t.vertices()).collect();
            let rep = TriangulationComplex::build(&faces).expect("canonical copy is valid");
            (form, rep)
        })
        .collect();
    canonical_leaves.sort_by(|a, b| a.0.cmp(&b.0));
    canonical_leaves.dedup_by(|a, b| a.0 == b.0);
    stats.duplicate_leaves = kept_count as u64 - canonical_leaves.len() as u64;
    let mut classes: Vec<TriangulationComplex> =
        canonical_leaves.into_iter().map(|(_, rep)| rep).collect();
    let truncated = cfg.limit.is_some_and(|l| classes.len() > l);
    if let Some(l) = cfg.limit {
        classes.truncate(l);
    }
    Ok(ClassificationResult { classes, stats, truncated })
}

/// Runs [`enumerate_degree_regular`] for every admissible `(n, d)` at the
/// given Euler characteristic.
pub fn classify_chi(
    chi: i64,
    cfg: &SearchConfig,
) -> Result<Vec<((usize, usize), ClassificationResult)>, EnumerateError> {
    let mut out = Vec::new();
    for (n, d) in admissible_parameters(chi) {
        let result = enumerate_degree_regular(n, d, cfg)?;
        out.push(((n, d), result));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;
    use crate::samples;

    fn seq() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn sphere_parameters_recover_the_platonic_triangulations() {
        let tetra = enumerate_degree_regular(4, 3, &seq()).unwrap();
        assert_eq!(tetra.classes.len(), 1);
        assert!(are_isomorphic(&tetra.classes[0], &samples::tetrahedron()).is_some());

        let octa = enumerate_degree_regular(6, 4, &seq()).unwrap();
        assert_eq!(octa.classes.len(), 1);
        assert!(are_isomorphic(&octa.classes[0], &samples::octahedron()).is_some());

        let icosa = enumerate_degree_regular(12, 5, &seq()).unwrap();
        assert_eq!(icosa.classes.len(), 1);
        assert!(are_isomorphic(&icosa.classes[0], &samples::icosahedron()).is_some());
    }

    #[test]
    fn infeasible_parameters_are_rejected() {
        assert_eq!(
            enumerate_degree_regular(5, 4, &seq()).unwrap_err(),
            EnumerateError::InfeasibleParameters {
                n: 5,
                d: 4,
                reason: "the face count nd/3 and edge count nd/2 must be integers",
            }
        );
        assert!(matches!(
            enumerate_degree_regular(4, 5, &seq()),
            Err(EnumerateError::InfeasibleParameters { .. })
        ));
        assert!(matches!(
            enumerate_degree_regular(6, 2, &seq()),
            Err(EnumerateError::InfeasibleParameters { .. })
        ));
        assert!(matches!(
            enumerate_degree_regular(18, 7, &seq()),
            Err(EnumerateError::TooManyVertices { n: 18, max: MAX_VERTICES })
        ));
    }

    #[test]
    fn seven_vertex_torus_is_unique() {
        let r = enumerate_degree_regular(7, 6, &seq()).unwrap();
        assert_eq!(r.classes.len(), 1);
        assert!(are_isomorphic(&r.classes[0], &samples::torus_7()).is_some());
        assert_eq!(r.classes[0].euler_characteristic(), 0);
        assert!(!r.truncated);
        assert!(r.stats.leaves > 0);
    }

    #[test]
    fn six_vertex_projective_plane_is_unique_and_nonorientable() {
        let all = enumerate_degree_regular(6, 5, &seq()).unwrap();
        assert_eq!(all.classes.len(), 1);
        assert!(are_isomorphic(&all.classes[0], &samples::projective_plane_6()).is_some());
        let orientable_only = enumerate_degree_regular(
            6,
            5,
            &SearchConfig { orientable_only: true, ..seq() },
        )
        .unwrap();
        assert_eq!(orientable_only.classes.len(), 0);
        assert!(orientable_only.stats.nonorientable_leaves > 0);
    }

    #[test]
    fn pruning_does_not_change_the_classification() {
        for (n, d) in [(6, 4), (6, 5), (7, 6)] {
            let pruned = enumerate_degree_regular(n, d, &seq()).unwrap();
            let unpruned = enumerate_degree_regular(
                n,
                d,
                &SearchConfig { prune_star_bound: false, ..seq() },
            )
            .unwrap();
            let forms_p: Vec<_> = pruned.classes.iter().map(crate::iso::canonical_form).collect();
            let forms_u: Vec<_> =
                unpruned.classes.iter().map(crate::iso::canonical_form).collect();
            assert_eq!(forms_p, forms_u, "prune must be sound for ({n}, {d})");
            assert!(unpruned.stats.nodes >= pruned.stats.nodes);
        }
    }

    #[test]
    fn parallel_search_matches_sequential_search() {
        let sequential = enumerate_degree_regular(7, 6, &seq()).unwrap();
        let parallel = enumerate_degree_regular(
            7,
            6,
            &SearchConfig { parallel_width: 8, ..seq() },
        )
        .unwrap();
        assert_eq!(parallel.stats, sequential.stats);
        let a: Vec<_> = sequential.classes.iter().map(crate::iso::canonical_form).collect();
        let b: Vec<_> = parallel.classes.iter().map(crate::iso::canonical_form).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn limit_truncates_after_dedup() {
        let r = enumerate_degree_regular(
            7,
            6,
            &SearchConfig { limit: Some(0), ..seq() },
        )
        .unwrap();
        assert!(r.classes.is_empty());
        assert!(r.truncated);
        let r = enumerate_degree_regular(
            7,
            6,
            &SearchConfig { limit: Some(5), ..seq() },
        )
        .unwrap();
        assert_eq!(r.classes.len(), 1);
        assert!(!r.truncated);
    }

    #[test]
    fn classify_chi_two_yields_the_three_sphere_families() {
        let runs = classify_chi(2, &seq()).unwrap();
        let summary: Vec<((usize, usize), usize)> =
            runs.iter().map(|((n, d), r)| ((*n, *d), r.classes.len())).collect();
        assert_eq!(summary, vec![((4, 3), 1), ((6, 4), 1), ((12, 5), 1)]);
    }

    #[test]
    fn manual_face_additions_respect_link_discipline() {
        // Build the octahedron by hand on top of the (6, 4) seed.
        let mut s = PartialComplex::new(6, 4).unwrap();
        assert_eq!(s.face_count(), 4);
        assert!(!s.is_complete());
        // lk(1) is the path 2–0–4; closing it now (cycle of 3 < d) is illegal.
        assert!(!s.try_add_face(1, 2, 4));
        // A second face on edge {1, 2} with a fresh apex.
        assert!(s.try_add_face(1, 2, 5));
        // Duplicate face and over-full edge are rejected.
        assert!(!s.try_add_face(1, 2, 5));
        assert!(!s.try_add_face(2, 1, 3));
        // Skipping a label is rejected: only 0..=5 exist for n = 6.
        assert!(!s.try_add_face(2, 3, 7));
        assert!(s.try_add_face(2, 3, 5));
        assert!(s.try_add_face(3, 4, 5));
        assert!(s.try_add_face(4, 1, 5));
        assert!(s.is_complete());
        let k = s.to_complex().unwrap();
        assert!(are_isomorphic(&k, &samples::octahedron()).is_some());
        // Undo works back to the seed and no further.
        assert!(s.remove_last_face());
        assert!(!s.is_complete());
        assert!(s.remove_last_face());
        assert!(s.remove_last_face());
        assert!(s.remove_last_face());
        assert!(!s.remove_last_face());
        assert_eq!(s.face_count(), 4);
    }

    #[test]
    fn star_bound_is_quiet_on_seeds() {
        for (n, d) in [(6, 4), (7, 6), (12, 7)] {
            let s = PartialComplex::new(n, d).unwrap();
            assert!(!prune_star_bound(&s), "seed for ({n}, {d}) must not be pruned");
        }
    }
}
