//! The barycentric subdivision H of the tetrahedron, the family G_i obtained
//! by pasting copies of H face to face, and exhaustive checks of the
//! properties that make every permeating subtree use every colour class.

use thiserror::Error;

use crate::coloring::{proper_3_coloring, Colour, VertexColoring};
use crate::corpus;
use crate::duality::{for_each_permeating_subtree, is_permeating_subtree};
use crate::embedding::EmbeddingError;
use crate::graph::edge_key;
use crate::oracle;
use crate::search::SearchBudget;
use crate::triangulation::{paste, Triangulation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HardnessError {
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

fn invariant<T>(msg: impl Into<String>) -> Result<T, HardnessError> {
    Err(HardnessError::Invariant(msg.into()))
}

/// Tetrahedron vertices are 0..4, edge barycentres 4..10 (edges in
/// lexicographic order), face barycentres 10..14.
pub const H_VERTICES: usize = 14;

fn edge_node(a: usize, b: usize) -> usize {
    const EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    4 + EDGES.iter().position(|&e| e == edge_key(a, b)).unwrap()
}

/// H with its colouring and the two designated faces: `g` is face 0 and `f`
/// is the lexicographically smallest face (as a sorted triple) sharing no
/// vertex with `g`.
#[derive(Debug, Clone)]
pub struct SpecialH {
    pub tri: Triangulation,
    pub colouring: VertexColoring,
    pub g: usize,
    pub f: usize,
}

impl SpecialH {
    pub fn degree4_vertices(&self) -> Vec<usize> {
        (0..self.tri.vertex_count())
            .filter(|&v| self.tri.degree(v) == 4)
            .collect()
    }
}

/// Builds H with the degree-4 vertices coloured `degree4`, tetrahedron
/// vertices the next colour and face barycentres the one after.
pub fn build_special_h(degree4: Colour) -> SpecialH {
    let mut faces = Vec::with_capacity(24);
    for (i, &[a, b, c]) in corpus::tetrahedron().faces().iter().enumerate() {
        let centre = 10 + i;
        for (x, y) in [(a, b), (b, c), (c, a)] {
            let m = edge_node(x, y);
            faces.push([x, m, centre]);
            faces.push([m, y, centre]);
        }
    }
    let tri = Triangulation::from_faces(H_VERTICES, &faces).expect("subdivision is a triangulation");
    let d = degree4.index();
    let colouring = VertexColoring::new(
        (0..H_VERTICES)
            .map(|v| match v {
                0..=3 => Colour::from_index(d + 1),
                4..=9 => Colour::from_index(d),
                _ => Colour::from_index(d + 2),
            })
            .collect(),
    );
    let g = 0;
    let outer = tri.face(g);
    let f = (0..tri.face_count())
        .filter(|&i| tri.face(i).iter().all(|v| !outer.contains(v)))
        .min_by_key(|&i| {
            let mut t = tri.face(i);
            t.sort_unstable();
            t
        })
        .expect("H has a face disjoint from g");
    SpecialH {
        tri,
        colouring,
        g,
        f,
    }
}

/// The colour of the degree-4 class of copy `i`.
pub fn copy_colour(i: usize) -> Colour {
    Colour::from_index(i)
}

/// G_i with its colouring, designated face and the embedding of every copy
/// of H.
#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub index: usize,
    pub tri: Triangulation,
    pub colouring: VertexColoring,
    /// Face index of f_i.
    pub f: usize,
    /// `copies[j][v]` is the id in G_i of vertex `v` of H_{j+1}.
    pub copies: Vec<Vec<usize>>,
    /// The glued triangles, sorted triples, in gluing order.
    pub pasting_triangles: Vec<[usize; 3]>,
}

impl FamilyMember {
    pub fn first() -> Self {
        let h = build_special_h(copy_colour(1));
        FamilyMember {
            index: 1,
            f: h.f,
            copies: vec![(0..H_VERTICES).collect()],
            tri: h.tri,
            colouring: h.colouring,
            pasting_triangles: Vec::new(),
        }
    }

    /// Checks vertex count, Eulerian, proper colouring, and that f is a face.
    pub fn check_invariants(&self) -> Result<(), HardnessError> {
        let n = self.tri.vertex_count();
        if n != 11 * self.index + 3 {
            return invariant(format!("G_{} has {n} vertices", self.index));
        }
        if !self.tri.is_eulerian() {
            return invariant(format!("G_{} is not Eulerian", self.index));
        }
        if !self.colouring.is_proper(self.tri.graph()) {
            return invariant(format!("G_{} colouring is not proper", self.index));
        }
        if self.f >= self.tri.face_count() {
            return invariant("f is not a face");
        }
        Ok(())
    }

    /// Vertices of copy H_i (1-based) in G ids.
    pub fn copy(&self, i: usize) -> &[usize] {
        &self.copies[i - 1]
    }
}

/// Glues the next copy of H onto `prev`: `g` of the copy is identified
/// colourwise with `f` of `prev`.
pub fn paste_next(prev: &FamilyMember) -> Result<FamilyMember, HardnessError> {
    let i = prev.index + 1;
    let h = build_special_h(copy_colour(i));
    let host_face = prev.tri.face(prev.f);
    let guest_face = h.tri.face(h.g);
    let mut matching = [(0, 0); 3];
    for (slot, &gv) in matching.iter_mut().zip(&guest_face) {
        let c = h.colouring.colour(gv);
        let Some(&hv) = host_face.iter().find(|&&x| prev.colouring.colour(x) == c) else {
            return invariant(format!("face f_{} has no {c} vertex", prev.index));
        };
        *slot = (gv, hv);
    }
    let pasted = paste(&prev.tri, prev.f, &h.tri, h.g, matching)?;
    let n = pasted.tri.vertex_count();
    let mut colours = prev.colouring.colours().to_vec();
    colours.resize(n, Colour::Blue);
    for v in 0..H_VERTICES {
        colours[pasted.guest_map[v]] = h.colouring.colour(v);
    }
    let f_triple = h.tri.face(h.f).map(|v| pasted.guest_map[v]);
    let Some(f) = pasted.tri.face_index(f_triple) else {
        return invariant(format!("f_{i} is not a face of G_{i}"));
    };
    let mut copies = prev.copies.clone();
    copies.push(pasted.guest_map.clone());
    let mut glued = host_face;
    glued.sort_unstable();
    let mut pasting_triangles = prev.pasting_triangles.clone();
    pasting_triangles.push(glued);
    let member = FamilyMember {
        index: i,
        tri: pasted.tri,
        colouring: VertexColoring::new(colours),
        f,
        copies,
        pasting_triangles,
    };
    member.check_invariants()?;
    Ok(member)
}

/// G_1, ..., G_len.
pub fn build_family(len: usize) -> Result<Vec<FamilyMember>, HardnessError> {
    let mut out: Vec<FamilyMember> = Vec::with_capacity(len);
    for i in 1..=len {
        let next = if i == 1 {
            FamilyMember::first()
        } else {
            paste_next(out.last().unwrap())?
        };
        out.push(next);
    }
    Ok(out)
}

/// G_{3k}.
pub fn generate_family(k: usize) -> Result<FamilyMember, HardnessError> {
    assert!(k >= 1, "k must be positive");
    Ok(build_family(3 * k)?.pop().unwrap())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma41Report {
    /// Permeating subtrees of H found by exhaustive enumeration.
    pub subtrees: usize,
    /// Those with no degree-4 vertex (expected 0).
    pub without_degree4: usize,
    /// Subsets of the degree-6 vertices that are permeating subtrees
    /// (brute force over all subsets; expected 0).
    pub avoiding_subsets: usize,
    /// Induced paths on degree-6 vertices checked for incident-face parity.
    pub paths_checked: usize,
    /// Paths whose incident-face count is not 2 mod 4 (expected 0).
    pub parity_failures: usize,
    /// Largest number of faces hit by an induced tree on degree-6 vertices.
    pub max_faces_hit_without_degree4: usize,
    pub complete: bool,
}

impl Lemma41Report {
    pub fn holds(&self) -> bool {
        self.complete
            && self.subtrees > 0
            && self.without_degree4 == 0
            && self.avoiding_subsets == 0
            && self.parity_failures == 0
    }
}

/// Every permeating subtree of H contains a degree-4 vertex.
pub fn verify_lemma_4_1(h: &SpecialH, budget: SearchBudget) -> Lemma41Report {
    let tri = &h.tri;
    let g = tri.graph();
    let (all, stats) = oracle::permeating_subtrees(tri, budget);
    let without_degree4 = all
        .iter()
        .filter(|t| t.iter().all(|&v| g.degree(v) != 4))
        .count();

    let high: Vec<usize> = (0..tri.vertex_count()).filter(|&v| g.degree(v) != 4).collect();
    let mut avoiding_subsets = 0;
    let mut paths_checked = 0;
    let mut parity_failures = 0;
    let mut max_hit = 0;
    for bits in 1u32..(1 << high.len()) {
        let set: Vec<usize> = (0..high.len())
            .filter(|&i| bits >> i & 1 == 1)
            .map(|i| high[i])
            .collect();
        let mut mask = vec![false; tri.vertex_count()];
        for &v in &set {
            mask[v] = true;
        }
        if g.find_cycle_within(&mask).is_some() || g.components_within(&mask).len() != 1 {
            continue;
        }
        let hit = (0..tri.face_count())
            .filter(|&f| tri.face(f).iter().any(|&v| mask[v]))
            .count();
        max_hit = max_hit.max(hit);
        if hit == tri.face_count() {
            avoiding_subsets += 1;
        }
        let is_path = set
            .iter()
            .all(|&v| g.neighbors(v).iter().filter(|&&u| mask[u]).count() <= 2);
        if is_path {
            paths_checked += 1;
            if hit % 4 != 2 {
                parity_failures += 1;
            }
        }
    }
    Lemma41Report {
        subtrees: all.len(),
        without_degree4,
        avoiding_subsets,
        paths_checked,
        parity_failures,
        max_faces_hit_without_degree4: max_hit,
        complete: stats.complete,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma42Report {
    pub index: usize,
    pub subtrees: u64,
    /// Subtrees whose restriction to the newest copy or to G_{i-1} fails.
    pub bad_restrictions: u64,
    /// Subtrees meeting the glued triangle in 0 or 3 vertices.
    pub bad_triangle_meets: u64,
    /// Restrictions to the newest copy that the oracle does not list.
    pub unknown_copy_restrictions: u64,
    /// Restrictions to G_{i-1} that the oracle does not list (only checked
    /// when G_{i-1} is a single copy).
    pub unknown_prev_restrictions: u64,
    pub distinct_copy_restrictions: usize,
    pub distinct_prev_restrictions: usize,
    pub complete: bool,
    pub nodes: u64,
}

impl Lemma42Report {
    pub fn holds(&self) -> bool {
        self.complete
            && self.subtrees > 0
            && self.bad_restrictions == 0
            && self.bad_triangle_meets == 0
            && self.unknown_copy_restrictions == 0
            && self.unknown_prev_restrictions == 0
    }
}

/// Every permeating subtree of G_i restricts to permeating subtrees of the
/// newest copy H_i and of G_{i-1}.
pub fn verify_lemma_4_2(
    prev: &FamilyMember,
    member: &FamilyMember,
    budget: SearchBudget,
) -> Lemma42Report {
    use std::collections::BTreeSet;
    let i = member.index;
    let h = build_special_h(copy_colour(i));
    let copy = member.copy(i);
    let n = member.tri.vertex_count();
    let n_prev = prev.tri.vertex_count();
    let mut local = vec![usize::MAX; n];
    for (v, &x) in copy.iter().enumerate() {
        local[x] = v;
    }
    let glued = *member.pasting_triangles.last().expect("i >= 2");

    let (h_subtrees, _) = oracle::permeating_subtrees(&h.tri, budget);
    let h_set: BTreeSet<Vec<usize>> = h_subtrees.into_iter().collect();
    let prev_set: Option<BTreeSet<Vec<usize>>> = (prev.index == 1)
        .then(|| oracle::permeating_subtrees(&prev.tri, budget).0.into_iter().collect());

    let mut report = Lemma42Report {
        index: i,
        subtrees: 0,
        bad_restrictions: 0,
        bad_triangle_meets: 0,
        unknown_copy_restrictions: 0,
        unknown_prev_restrictions: 0,
        distinct_copy_restrictions: 0,
        distinct_prev_restrictions: 0,
        complete: false,
        nodes: 0,
    };
    let mut copy_seen = BTreeSet::new();
    let mut prev_seen = BTreeSet::new();
    let stats = for_each_permeating_subtree(&member.tri, budget, |t| {
        report.subtrees += 1;
        let mut in_copy: Vec<usize> = t
            .iter()
            .filter(|&&v| local[v] != usize::MAX)
            .map(|&v| local[v])
            .collect();
        in_copy.sort_unstable();
        let in_prev: Vec<usize> = t.iter().copied().filter(|&v| v < n_prev).collect();
        if !is_permeating_subtree(&h.tri, &in_copy).is_permeating()
            || !is_permeating_subtree(&prev.tri, &in_prev).is_permeating()
        {
            report.bad_restrictions += 1;
        }
        let meet = t.iter().filter(|v| glued.contains(v)).count();
        if !(1..=2).contains(&meet) {
            report.bad_triangle_meets += 1;
        }
        if !h_set.contains(&in_copy) {
            report.unknown_copy_restrictions += 1;
        }
        if let Some(ps) = &prev_set {
            if !ps.contains(&in_prev) {
                report.unknown_prev_restrictions += 1;
            }
        }
        copy_seen.insert(in_copy);
        prev_seen.insert(in_prev);
        true
    });
    report.distinct_copy_restrictions = copy_seen.len();
    report.distinct_prev_restrictions = prev_seen.len();
    report.complete = stats.complete;
    report.nodes = stats.nodes;
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem13Report {
    pub k: usize,
    pub subtrees: u64,
    /// Per colour (blue, red, green): the fewest class members any subtree
    /// contains, and the fewest it leaves out. `None` if nothing was found.
    pub min_contained: [Option<usize>; 3],
    pub min_excluded: [Option<usize>; 3],
    pub complete: bool,
    pub nodes: u64,
}

impl Theorem13Report {
    /// True if every subtree seen contains and excludes at least `k` of each
    /// class.
    pub fn bound_holds(&self) -> bool {
        self.subtrees > 0
            && self
                .min_contained
                .iter()
                .chain(&self.min_excluded)
                .all(|m| m.is_some_and(|m| m >= self.k))
    }

    pub fn holds(&self) -> bool {
        self.complete && self.bound_holds()
    }
}

/// Enumerates the permeating subtrees of G_{3k} and records, per colour
/// class, the fewest vertices contained and excluded.
pub fn verify_theorem_1_3(member: &FamilyMember, k: usize, budget: SearchBudget) -> Theorem13Report {
    let col = &member.colouring;
    let sizes = Colour::ALL.map(|c| col.class(c).len());
    let mut min_contained = [None::<usize>; 3];
    let mut min_excluded = [None::<usize>; 3];
    let mut subtrees = 0;
    let stats = for_each_permeating_subtree(&member.tri, budget, |t| {
        subtrees += 1;
        let mut count = [0usize; 3];
        for &v in t {
            count[col.colour(v).index()] += 1;
        }
        for c in 0..3 {
            let inside = count[c];
            let outside = sizes[c] - inside;
            min_contained[c] = Some(min_contained[c].map_or(inside, |m: usize| m.min(inside)));
            min_excluded[c] = Some(min_excluded[c].map_or(outside, |m: usize| m.min(outside)));
        }
        true
    });
    Theorem13Report {
        k,
        subtrees,
        min_contained,
        min_excluded,
        complete: stats.complete,
        nodes: stats.nodes,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralReport {
    pub k: usize,
    pub lemma_4_1: bool,
    /// Every copy is an isomorphic, correctly coloured image of H.
    pub copies_faithful: bool,
    /// Copies sharing a vertex are consecutive.
    pub overlaps_consecutive: bool,
    /// Per colour: copies whose degree-4 class has that colour (pairwise
    /// vertex-disjoint by the previous check).
    pub copies_per_colour: [usize; 3],
}

impl StructuralReport {
    pub fn holds(&self) -> bool {
        self.lemma_4_1
            && self.copies_faithful
            && self.overlaps_consecutive
            && self.copies_per_colour.iter().all(|&c| c >= self.k)
    }
}

/// The lower bound without enumerating G: each copy forces a degree-4
/// vertex of its colour into every permeating subtree, and same-coloured
/// copies are vertex-disjoint. Exclusion follows from the complement.
pub fn structural_lower_bound(member: &FamilyMember, k: usize, budget: SearchBudget) -> StructuralReport {
    let h = build_special_h(Colour::Blue);
    let lemma_4_1 = verify_lemma_4_1(&h, budget).holds();
    let hg = h.tri.graph();
    let g = member.tri.graph();
    let mut copies_faithful = true;
    for (j, map) in member.copies.iter().enumerate() {
        let colour = copy_colour(j + 1);
        for v in 0..H_VERTICES {
            let expected = if hg.degree(v) == 4 {
                colour
            } else if v < 4 {
                Colour::from_index(colour.index() + 1)
            } else {
                Colour::from_index(colour.index() + 2)
            };
            if member.colouring.colour(map[v]) != expected {
                copies_faithful = false;
            }
            for &u in hg.neighbors(v) {
                if !g.has_edge(map[v], map[u]) {
                    copies_faithful = false;
                }
            }
        }
    }
    let mut overlaps_consecutive = true;
    let mut owner: Vec<Vec<usize>> = vec![Vec::new(); member.tri.vertex_count()];
    for (j, map) in member.copies.iter().enumerate() {
        for &x in map {
            owner[x].push(j);
        }
    }
    for list in &owner {
        if list.len() > 2 || list.len() == 2 && list[1] != list[0] + 1 {
            overlaps_consecutive = false;
        }
    }
    let mut copies_per_colour = [0; 3];
    for j in 1..=member.copies.len() {
        copies_per_colour[copy_colour(j).index()] += 1;
    }
    StructuralReport {
        k,
        lemma_4_1,
        copies_faithful,
        overlaps_consecutive,
        copies_per_colour,
    }
}

/// True if the propagated 3-colouring of `member` agrees with its stored one
/// up to renaming colours.
pub fn colouring_matches_propagation(tri: &Triangulation, col: &VertexColoring) -> bool {
    proper_3_coloring(tri).is_ok_and(|c| c.same_up_to_permutation(col))
}
