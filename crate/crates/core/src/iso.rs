//! Isomorphism, canonical forms, and automorphism groups of complexes.
//!
//! Two complexes are isomorphic when a vertex bijection carries the face set
//! of one onto the other. For connected manifolds the key observation is
//! that an isomorphism is determined by where it sends a single *flag*
//! (vertex ∈ edge ∈ face): walking outward from the flag, every vertex label
//! is forced by the link cycles. Rooting a deterministic breadth-first
//! labeling at each of the `6·f2` flags therefore yields a complete set of
//! candidate relabelings; the least resulting face list is a canonical form,
//! and the relabelings that achieve it recover the full automorphism group
//! in the same sweep.
//!
//! [`are_isomorphic`] deliberately does *not* reuse that machinery: it is an
//! independent backtracking search over vertex images (pruned by per-vertex
//! invariants), so the two routes can cross-check each other, and it also
//! covers complexes that are not manifolds.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::complex::{ComplexError, Triangle, TriangulationComplex, VertexId};
use crate::graph::edge_graph;
use crate::orientation::{orientability, Orientability};
use crate::perm::Permutation;

/// A vertex–edge–face incidence triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flag {
    pub vertex: VertexId,
    pub edge: (VertexId, VertexId),
    pub face: Triangle,
}

/// All flags of the complex: 6 per face.
pub fn flags(k: &TriangulationComplex) -> Vec<Flag> {
    let mut out = Vec::with_capacity(6 * k.faces().len());
    for &face in k.faces() {
        for edge in face.edges() {
            out.push(Flag { vertex: edge.0, edge, face });
            out.push(Flag { vertex: edge.1, edge, face });
        }
    }
    out
}

/// A canonical copy of a complex: the face list of the relabeled complex and
/// the relabeling (old → new) that produced it. Two complexes are isomorphic
/// iff their canonical forms are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub form: Vec<Triangle>,
    pub relabeling: Permutation,
}

/// The canonical face list of `k`.
///
/// The form is the least relabeled face list over an implementation-fixed
/// family of candidate relabelings (all flag-rooted labelings for connected
/// manifolds, all labelings otherwise). The specific total order is not part
/// of the contract; what is guaranteed is that the form is a relabeled copy
/// of `k` and that equality of forms is equivalent to isomorphism.
pub fn canonical_form(k: &TriangulationComplex) -> Vec<Triangle> {
    canonical(k).form
}

/// Canonical form plus the relabeling that realizes it.
pub fn canonical(k: &TriangulationComplex) -> Canonical {
    let (canonical, _) = canonical_search(k);
    canonical
}

/// The canonical copy as a complex.
pub fn canonical_complex(k: &TriangulationComplex) -> TriangulationComplex {
    let faces: Vec<[usize; 3]> = canonical_form(k).iter().map(|t| t.vertices()).collect();
    TriangulationComplex::build(&faces).expect("canonical form of a valid complex is valid")
}

/// The full automorphism group of `k`.
pub fn automorphism_group(k: &TriangulationComplex) -> AutGroup {
    let (canonical, minimizers) = canonical_search(k);
    // If L and L0 both send k to the same canonical copy, L0⁻¹∘L fixes k.
    let base_inv = canonical.relabeling.inverse();
    let mut elements: Vec<Permutation> =
        minimizers.iter().map(|l| base_inv.compose(l)).collect();
    elements.sort();
    elements.dedup();
    debug_assert!(elements.iter().all(|g| k.relabel(g) == *k));
    AutGroup::from_elements(elements)
}

/// Shared search: the canonical copy together with *all* relabelings that
/// achieve it.
fn canonical_search(k: &TriangulationComplex) -> (Canonical, Vec<Permutation>) {
    if k.is_combinatorial_2_manifold().is_ok() && k.is_connected() {
        manifold_canonical_search(k)
    } else {
        generic_canonical_search(k)
    }
}

// ---------------------------------------------------------------------------
// Flag-rooted canonical labelings (connected manifolds)
// ---------------------------------------------------------------------------

/// Deterministic labeling seeded at the ordered flag `(u, w, F)`, where `x`
/// is the remaining vertex of `F`: `u ↦ 0`, then each processed vertex walks
/// its link cycle from a start and direction fixed by the face through which
/// the vertex was first reached, labeling new vertices in walk order. The
/// construction only consults incidence and already-assigned labels, so it
/// commutes with isomorphisms.
fn flag_labeling(
    links: &[Vec<VertexId>],
    u: VertexId,
    w: VertexId,
    x: VertexId,
) -> Permutation {
    let n = links.len();
    const UNSET: usize = usize::MAX;
    let mut new_of_old = vec![UNSET; n];
    let mut order = Vec::with_capacity(n); // new label → old vertex
    let mut walk_seed = vec![(UNSET, UNSET); n]; // (start, second) of each vertex's walk
    new_of_old[u] = 0;
    order.push(u);
    walk_seed[u] = (w, x);
    let mut processed = 0;
    while processed < order.len() {
        let v = order[processed];
        processed += 1;
        let (t, p) = walk_seed[v];
        let cyc = &links[v];
        let d = cyc.len();
        let ti = cyc.iter().position(|&y| y == t).expect("walk start lies in the link");
        // `t` and `p` are consecutive in lk(v) because {v, t, p} is a face.
        let forward = cyc[(ti + 1) % d] == p;
        debug_assert!(forward || cyc[(ti + d - 1) % d] == p);
        let at = |i: usize| {
            if forward {
                cyc[(ti + i) % d]
            } else {
                cyc[(ti + d - i % d) % d]
            }
        };
        // Only the root's walk can start at an unlabeled vertex.
        if new_of_old[t] == UNSET {
            new_of_old[t] = order.len();
            order.push(t);
            walk_seed[t] = (v, p);
        }
        let mut prev = t;
        for i in 1..d {
            let c = at(i);
            if new_of_old[c] == UNSET {
                new_of_old[c] = order.len();
                order.push(c);
                walk_seed[c] = (v, prev);
            }
            prev = c;
        }
    }
    debug_assert!(new_of_old.iter().all(|&l| l != UNSET), "walks must reach every vertex");
    Permutation::from_images(new_of_old).expect("labeling is a bijection")
}

fn relabeled_face_list(k: &TriangulationComplex, p: &Permutation) -> Vec<Triangle> {
    let mut faces: Vec<Triangle> = k
        .faces()
        .iter()
        .map(|t| {
            let [a, b, c] = t.vertices();
            Triangle::new(p.apply(a), p.apply(b), p.apply(c)).unwrap()
        })
        .collect();
    faces.sort_unstable();
    faces
}

fn manifold_canonical_search(k: &TriangulationComplex) -> (Canonical, Vec<Permutation>) {
    let n = k.vertex_count();
    let links: Vec<Vec<VertexId>> = (0..n)
        .map(|v| k.link_cycle(v).expect("manifold link").vertices().to_vec())
        .collect();
    let mut best: Option<Vec<Triangle>> = None;
    let mut minimizers: Vec<Permutation> = Vec::new();
    for &face in k.faces() {
        let [a, b, c] = face.vertices();
        for (u, w, x) in
            [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)]
        {
            let labeling = flag_labeling(&links, u, w, x);
            let form = relabeled_face_list(k, &labeling);
            match &best {
                Some(b) if form > *b => {}
                Some(b) if form == *b => minimizers.push(labeling),
                _ => {
                    best = Some(form);
                    minimizers.clear();
                    minimizers.push(labeling);
                }
            }
        }
    }
    let form = best.expect("a complex has at least one face");
    let relabeling = minimizers[0].clone();
    (Canonical { form, relabeling }, minimizers)
}

// ---------------------------------------------------------------------------
// Generic canonical labelings (disconnected or non-manifold complexes)
// ---------------------------------------------------------------------------

/// Face key that makes partial codes prefixes of complete ones: compare by
/// largest vertex, then middle, then smallest. Every face completed when
/// label `L` is assigned has maximum `L`, hence a larger key than all faces
/// completed earlier.
fn colex_key(t: Triangle) -> (usize, usize, usize) {
    let [a, b, c] = t.vertices();
    (c, b, a)
}

struct GenericSearch<'a> {
    k: &'a TriangulationComplex,
    n: usize,
    best: Option<Vec<Triangle>>,
    minimizers: Vec<Permutation>,
}

impl GenericSearch<'_> {
    /// Extends the partial assignment (`who[l]` = old vertex with new label
    /// `l`) depth-first. `code` is the relabeled face list so far, a prefix
    /// of the branch's final code. `tied` is false once the branch is
    /// strictly below the incumbent, after which no pruning applies.
    fn assign(&mut self, who: &mut Vec<VertexId>, taken: &mut Vec<bool>, code: &mut Vec<Triangle>, tied: bool) {
        let depth = who.len();
        if depth == self.n {
            let images = invert_order(who);
            let labeling = Permutation::from_images(images).unwrap();
            let cmp = self.best.as_ref().map(|b| {
                code.iter()
                    .map(|&t| colex_key(t))
                    .cmp(b.iter().map(|&t| colex_key(t)))
            });
            match cmp {
                Some(std::cmp::Ordering::Greater) => {}
                Some(std::cmp::Ordering::Equal) => self.minimizers.push(labeling),
                _ => {
                    self.best = Some(code.clone());
                    self.minimizers = vec![labeling];
                }
            }
            return;
        }
        for cand in 0..self.n {
            if taken[cand] {
                continue;
            }
            // Faces completed by giving `cand` the new label `depth`.
            let mut block: Vec<Triangle> = self.k.faces_at(cand).unwrap()
                .iter()
                .filter_map(|&fi| {
                    let [a, b, c] = self.k.faces()[fi].vertices();
                    let newl = |v: VertexId| {
                        if v == cand {
                            Some(depth)
                        } else {
                            who.iter().position(|&o| o == v)
                        }
                    };
                    match (newl(a), newl(b), newl(c)) {
                        (Some(x), Some(y), Some(z)) => Some(Triangle::new(x, y, z).unwrap()),
                        _ => None,
                    }
                })
                .collect();
            block.sort_unstable_by_key(|&t| colex_key(t));
            // Prefix comparison against the incumbent.
            let mut branch_tied = tied;
            let mut prune = false;
            if branch_tied {
                if let Some(best) = &self.best {
                    for (i, t) in block.iter().enumerate() {
                        let pos = code.len() + i;
                        if pos >= best.len() {
                            // Longer tied prefix than the best's total
                            // length cannot happen: all codes have |faces|
                            // entries. Defensive: treat as worse.
                            prune = true;
                            break;
                        }
                        match colex_key(*t).cmp(&colex_key(best[pos])) {
                            std::cmp::Ordering::Greater => {
                                prune = true;
                                break;
                            }
                            std::cmp::Ordering::Less => {
                                branch_tied = false;
                                break;
                            }
                            std::cmp::Ordering::Equal => {}
                        }
                    }
                }
            }
            if prune {
                continue;
            }
            let keep = code.len();
            code.extend(block);
            who.push(cand);
            taken[cand] = true;
            self.assign(who, taken, code, branch_tied);
            taken[cand] = false;
            who.pop();
            code.truncate(keep);
        }
    }
}

/// `who[l]` = old vertex for new label `l` → images list old → new.
fn invert_order(who: &[VertexId]) -> Vec<usize> {
    let mut images = vec![0; who.len()];
    for (new, &old) in who.iter().enumerate() {
        images[old] = new;
    }
    images
}

fn generic_canonical_search(k: &TriangulationComplex) -> (Canonical, Vec<Permutation>) {
    let mut search = GenericSearch { k, n: k.vertex_count(), best: None, minimizers: Vec::new() };
    search.assign(&mut Vec::new(), &mut vec![false; k.vertex_count()], &mut Vec::new(), true);
    let mut form = search.best.expect("nonempty complex");
    form.sort_unstable(); // store in ordinary sorted order, same as faces()
    search.minimizers.sort();
    search.minimizers.dedup();
    (Canonical { form, relabeling: search.minimizers[0].clone() }, search.minimizers)
}

// ---------------------------------------------------------------------------
// Direct isomorphism search
// ---------------------------------------------------------------------------

/// Searches for a vertex bijection carrying `k1` onto `k2`; the witness `w`
/// satisfies `k1.relabel(&w) == k2`. Independent of the canonical-form
/// machinery by design.
pub fn are_isomorphic(k1: &TriangulationComplex, k2: &TriangulationComplex) -> Option<Permutation> {
    let n = k1.vertex_count();
    if n != k2.vertex_count() || k1.f_vector() != k2.f_vector() {
        return None;
    }
    // Per-vertex invariant: degree in the edge graph and in every
    // common-neighbor graph. Images must match it exactly.
    let sig = |k: &TriangulationComplex| -> Vec<Vec<usize>> {
        let eg = edge_graph(k);
        let mut sigs = vec![Vec::new(); n];
        for m in 0..n.saturating_sub(1) {
            let gm = eg.common_neighbor_graph(m);
            for (v, s) in sigs.iter_mut().enumerate() {
                s.push(gm.degree(v));
            }
        }
        for (v, s) in sigs.iter_mut().enumerate() {
            s.push(eg.degree(v));
        }
        sigs
    };
    let sig1 = sig(k1);
    let sig2 = sig(k2);
    {
        let mut m1 = sig1.clone();
        let mut m2 = sig2.clone();
        m1.sort();
        m2.sort();
        if m1 != m2 {
            return None;
        }
    }

    struct Search<'a> {
        k1: &'a TriangulationComplex,
        k2: &'a TriangulationComplex,
        sig1: &'a [Vec<usize>],
        sig2: &'a [Vec<usize>],
        img: Vec<Option<VertexId>>,
        used: Vec<bool>,
    }
    impl Search<'_> {
        fn run(&mut self, assigned: usize) -> bool {
            let n = self.img.len();
            if assigned == n {
                return true;
            }
            // Most-anchored unassigned vertex: maximizes assigned neighbors.
            let v = (0..n)
                .filter(|&v| self.img[v].is_none())
                .max_by_key(|&v| {
                    let anchors = self
                        .k1
                        .neighbors(v)
                        .unwrap()
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
                        if self.k1.has_edge(v, w) != self.k2.has_edge(u, wu) {
                            continue 'cand;
                        }
                    }
                }
                // Faces at v whose other vertices are assigned must map to faces.
                for &fi in self.k1.faces_at(v).unwrap() {
                    let [a, b, c] = self.k1.faces()[fi].vertices();
                    let map = |x: VertexId| if x == v { Some(u) } else { self.img[x] };
                    if let (Some(x), Some(y), Some(z)) = (map(a), map(b), map(c)) {
                        if !self.k2.has_face(Triangle::new(x, y, z).unwrap()) {
                            continue 'cand;
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
    let mut s = Search { k1, k2, sig1: &sig1, sig2: &sig2, img: vec![None; n], used: vec![false; n] };
    if !s.run(0) {
        return None;
    }
    let p = Permutation::from_images(s.img.iter().map(|i| i.unwrap()).collect()).unwrap();
    debug_assert!(k1.relabel(&p) == *k2);
    Some(p)
}

// ---------------------------------------------------------------------------
// Automorphism groups
// ---------------------------------------------------------------------------

/// A permutation group given by its full element list (always including the
/// identity) plus a small generating set.
#[derive(Clone, Debug)]
pub struct AutGroup {
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl AutGroup {
    /// Wraps a complete, closed element list (sorted and deduped here).
    pub fn from_elements(mut elements: Vec<Permutation>) -> Self {
        assert!(!elements.is_empty());
        elements.sort();
        elements.dedup();
        let generators = minimal_generators(&elements);
        AutGroup { elements, generators }
    }

    /// Closes a generating set under composition.
    pub fn from_generators(n: usize, generators: Vec<Permutation>) -> Self {
        let mut elements: BTreeSet<Permutation> = [Permutation::identity(n)].into();
        let mut queue: VecDeque<Permutation> = elements.iter().cloned().collect();
        while let Some(g) = queue.pop_front() {
            for h in &generators {
                let gh = h.compose(&g);
                if elements.insert(gh.clone()) {
                    queue.push_back(gh);
                }
            }
        }
        AutGroup { elements: elements.into_iter().collect(), generators }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// All elements, sorted, identity included.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Orbit of a vertex under the group.
    pub fn vertex_orbit(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.elements.iter().map(|g| g.apply(v)).collect()
    }
}

/// Greedy small generating set: repeatedly add the highest-order element not
/// yet generated (ties broken lexicographically), so cyclic groups get one
/// generator and dihedral groups a rotation–reflection pair.
fn minimal_generators(elements: &[Permutation]) -> Vec<Permutation> {
    let n = elements[0].degree();
    if elements.len() == 1 {
        return Vec::new();
    }
    let mut by_order: Vec<(usize, &Permutation)> = elements.iter().map(|p| (p.order(), p)).collect();
    by_order.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(b.1)));
    let mut gens: Vec<Permutation> = Vec::new();
    let mut closure: BTreeSet<Permutation> = [Permutation::identity(n)].into();
    for (_, p) in by_order {
        if closure.contains(p) {
            continue;
        }
        gens.push(p.clone());
        // Re-close.
        let mut queue: VecDeque<Permutation> = closure.iter().cloned().collect();
        while let Some(g) = queue.pop_front() {
            for h in &gens {
                let gh = h.compose(&g);
                if closure.insert(gh.clone()) {
                    queue.push_back(gh);
                }
            }
        }
        if closure.len() == elements.len() {
            break;
        }
    }
    gens
}

/// Small-group classification by element orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupId {
    Trivial,
    /// Cyclic of order `m`.
    Cyclic(usize),
    /// Dihedral with `2m` elements.
    Dihedral(usize),
    /// The Klein four-group.
    KleinFour,
    /// None of the named families; carries the order.
    Other(usize),
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::Trivial => write!(f, "Trivial"),
            GroupId::Cyclic(m) => write!(f, "Cyclic({m})"),
            GroupId::Dihedral(m) => write!(f, "Dihedral({m})"),
            GroupId::KleinFour => write!(f, "KleinFour"),
            GroupId::Other(o) => write!(f, "Other({o})"),
        }
    }
}

/// Names the abstract type of the group: trivial, cyclic, dihedral, or the
/// Klein four-group; everything else reports as `Other(order)`.
pub fn identify_group(g: &AutGroup) -> GroupId {
    let o = g.order();
    if o == 1 {
        return GroupId::Trivial;
    }
    if g.elements().iter().any(|p| p.order() == o) {
        return GroupId::Cyclic(o);
    }
    if o == 4 {
        // Order 4 and not cyclic forces exponent 2.
        return GroupId::KleinFour;
    }
    if o % 2 == 0 {
        let m = o / 2;
        for r in g.elements().iter().filter(|p| p.order() == m) {
            let mut powers: BTreeSet<Permutation> = BTreeSet::new();
            let mut q = Permutation::identity(r.degree());
            for _ in 0..m {
                powers.insert(q.clone());
                q = r.compose(&q);
            }
            let r_inv = r.inverse();
            for s in g.elements().iter().filter(|p| p.order() == 2 && !powers.contains(*p)) {
                if s.compose(r).compose(s) == r_inv {
                    // ⟨r⟩ ∪ s⟨r⟩ has 2m = |G| elements.
                    return GroupId::Dihedral(m);
                }
            }
        }
    }
    GroupId::Other(o)
}

// ---------------------------------------------------------------------------
// Actions and characters
// ---------------------------------------------------------------------------

/// Whether the automorphism group moves every vertex to every other.
pub fn is_vertex_transitive(k: &TriangulationComplex) -> bool {
    automorphism_group(k).vertex_orbit(0).len() == k.vertex_count()
}

/// Whether the automorphism group is transitive on flags.
pub fn is_flag_transitive(k: &TriangulationComplex) -> bool {
    let aut = automorphism_group(k);
    let all = flags(k);
    let image = |g: &Permutation, f: &Flag| -> Flag {
        let (a, b) = f.edge;
        let (x, y) = (g.apply(a), g.apply(b));
        let [p, q, r] = f.face.vertices();
        Flag {
            vertex: g.apply(f.vertex),
            edge: (x.min(y), x.max(y)),
            face: Triangle::new(g.apply(p), g.apply(q), g.apply(r)).unwrap(),
        }
    };
    let orbit: HashSet<Flag> = aut.elements().iter().map(|g| image(g, &all[0])).collect();
    orbit.len() == all.len()
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharacterError {
    #[error("permutation is not an automorphism of the complex")]
    NotAutomorphism,
    #[error("complex is not orientable")]
    NotOrientable,
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// The orientation character of an automorphism: `+1` when `p` carries
/// positively oriented faces to positively oriented faces, `−1` when it
/// reverses them all. Well defined on connected orientable manifolds, and a
/// homomorphism `Aut(K) → {±1}`.
pub fn orientation_character(
    k: &TriangulationComplex,
    p: &Permutation,
) -> Result<i8, CharacterError> {
    if k.relabel(p) != *k {
        return Err(CharacterError::NotAutomorphism);
    }
    let assignment = match orientability(k)? {
        Orientability::Orientable(a) => a,
        Orientability::NonOrientable { .. } => return Err(CharacterError::NotOrientable),
    };
    let mut value: Option<i8> = None;
    for i in 0..k.faces().len() {
        let [a, b, c] = assignment.oriented_face(k, i);
        let (x, y, z) = (p.apply(a), p.apply(b), p.apply(c));
        let image = Triangle::new(x, y, z).unwrap();
        let j = k.faces().binary_search(&image).expect("automorphism maps faces to faces");
        let oriented = assignment.oriented_face(k, j);
        let same = (0..3).any(|r| {
            oriented[r] == x && oriented[(r + 1) % 3] == y && oriented[(r + 2) % 3] == z
        });
        let sign = if same { 1 } else { -1 };
        match value {
            None => value = Some(sign),
            Some(prev) => {
                debug_assert_eq!(prev, sign, "character must agree on every face");
            }
        }
    }
    Ok(value.expect("complex has at least one face"))
}
