//! Permeating subtrees, tree pairs and Hamiltonian cycles of the dual, with
//! conversions between them.
//!
//! A permeating subtree is an induced tree that hits every face. Its
//! complement is another one, the two form a tree pair, and the dual edges
//! of the primal edges running between the two trees form a Hamiltonian
//! cycle of the dual.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, UndoUnionFind};
use crate::search::{Enumeration, Meter, Search, SearchBudget};
use crate::triangulation::Triangulation;

/// Outcome of checking a vertex set against the permeating-subtree
/// definition. Checks run in the order: range, faces, cycles, connectivity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubtreeVerdict {
    Permeating,
    Empty,
    VertexOutOfRange(usize),
    MissedFace { face: usize },
    InducedCycle { cycle: Vec<usize> },
    Disconnected { components: Vec<Vec<usize>> },
}

impl SubtreeVerdict {
    pub fn is_permeating(&self) -> bool {
        matches!(self, SubtreeVerdict::Permeating)
    }
}

impl fmt::Display for SubtreeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubtreeVerdict::Permeating => write!(f, "permeating subtree"),
            SubtreeVerdict::Empty => write!(f, "empty vertex set"),
            SubtreeVerdict::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            SubtreeVerdict::MissedFace { face } => write!(f, "face {face} is missed"),
            SubtreeVerdict::InducedCycle { cycle } => write!(f, "induced cycle {}", join(cycle, " ")),
            SubtreeVerdict::Disconnected { components } => {
                write!(f, "{} components", components.len())
            }
        }
    }
}

fn join(ids: &[usize], sep: &str) -> String {
    ids.iter().map(usize::to_string).collect::<Vec<_>>().join(sep)
}

/// Checks whether `vertices` induces a tree hitting every face of `tri`.
/// Duplicates are ignored.
pub fn is_permeating_subtree(tri: &Triangulation, vertices: &[usize]) -> SubtreeVerdict {
    let n = tri.vertex_count();
    if vertices.is_empty() {
        return SubtreeVerdict::Empty;
    }
    let mut mask = vec![false; n];
    for &v in vertices {
        if v >= n {
            return SubtreeVerdict::VertexOutOfRange(v);
        }
        mask[v] = true;
    }
    if let Some(face) = (0..tri.face_count()).find(|&f| tri.face(f).iter().all(|&v| !mask[v])) {
        return SubtreeVerdict::MissedFace { face };
    }
    if let Some(cycle) = tri.graph().find_cycle_within(&mask) {
        return SubtreeVerdict::InducedCycle { cycle };
    }
    let components = tri.graph().components_within(&mask);
    if components.len() > 1 {
        return SubtreeVerdict::Disconnected { components };
    }
    SubtreeVerdict::Permeating
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("not a permeating subtree: {0}")]
    NotPermeating(SubtreeVerdict),
    #[error("the two sides do not partition the {n} vertices")]
    NotPartition { n: usize },
    #[error("side {side} is not a permeating subtree: {verdict}")]
    Side { side: usize, verdict: SubtreeVerdict },
    #[error("sides induce {found} edges, expected {expected}")]
    EdgeCount { found: usize, expected: usize },
    #[error("cycle has {found} faces, expected {expected}")]
    CycleLength { found: usize, expected: usize },
    #[error("face {0} out of range")]
    FaceOutOfRange(usize),
    #[error("face {0} occurs twice")]
    RepeatedFace(usize),
    #[error("faces {a} and {b} do not share an edge")]
    NotAdjacent { a: usize, b: usize },
    #[error("face {face} is crossed {crossings} times, expected 2")]
    Crossings { face: usize, crossings: usize },
    #[error("crossed edges split the vertices into {0} sides, expected 2")]
    SideCount(usize),
    #[error("no face with vertices {0:?}")]
    UnknownFace([usize; 3]),
    #[error("malformed certificate: {0}")]
    Syntax(String),
}

/// A validated permeating subtree, stored as a sorted vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermeatingSubtree {
    vertices: Vec<usize>,
}

impl PermeatingSubtree {
    pub fn new(tri: &Triangulation, vertices: &[usize]) -> Result<Self, CertificateError> {
        match is_permeating_subtree(tri, vertices) {
            SubtreeVerdict::Permeating => {
                let mut vertices = vertices.to_vec();
                vertices.sort_unstable();
                vertices.dedup();
                Ok(PermeatingSubtree { vertices })
            }
            v => Err(CertificateError::NotPermeating(v)),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.vertices {
            m[v] = true;
        }
        m
    }
}

fn complement_of(n: usize, vertices: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; n];
    for &v in vertices {
        inside[v] = true;
    }
    (0..n).filter(|&v| !inside[v]).collect()
}

/// The complement of a permeating subtree. Panics if the complement is not
/// itself a permeating subtree, which cannot happen for a valid input.
pub fn complement_tree(tri: &Triangulation, tree: &PermeatingSubtree) -> PermeatingSubtree {
    let rest = complement_of(tri.vertex_count(), tree.vertices());
    match PermeatingSubtree::new(tri, &rest) {
        Ok(t) => t,
        Err(e) => panic!("complement of a permeating subtree failed validation: {e}"),
    }
}

/// Two permeating subtrees partitioning the vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePair {
    t1: Vec<usize>,
    t2: Vec<usize>,
}

impl TreePair {
    pub fn new(tri: &Triangulation, t1: &[usize], t2: &[usize]) -> Result<Self, CertificateError> {
        let n = tri.vertex_count();
        let mut count = vec![0u8; n];
        for &v in t1.iter().chain(t2) {
            if v >= n {
                return Err(CertificateError::NotPartition { n });
            }
            count[v] += 1;
        }
        if count.iter().any(|&c| c != 1) {
            return Err(CertificateError::NotPartition { n });
        }
        for (side, set) in [(1, t1), (2, t2)] {
            let verdict = is_permeating_subtree(tri, set);
            if !verdict.is_permeating() {
                return Err(CertificateError::Side { side, verdict });
            }
        }
        let g = tri.graph();
        let mask1: Vec<bool> = (0..n).map(|v| t1.contains(&v)).collect();
        let mask2: Vec<bool> = mask1.iter().map(|b| !b).collect();
        let found = g.induced_edge_count(&mask1) + g.induced_edge_count(&mask2);
        if found != n - 2 {
            return Err(CertificateError::EdgeCount {
                found,
                expected: n - 2,
            });
        }
        let mut t1 = t1.to_vec();
        let mut t2 = t2.to_vec();
        t1.sort_unstable();
        t2.sort_unstable();
        Ok(TreePair { t1, t2 })
    }

    /// The pair formed by a subtree and its complement.
    pub fn from_subtree(tri: &Triangulation, tree: &PermeatingSubtree) -> Self {
        let other = complement_tree(tri, tree);
        TreePair {
            t1: tree.vertices().to_vec(),
            t2: other.vertices,
        }
    }

    pub fn t1(&self) -> &[usize] {
        &self.t1
    }

    pub fn t2(&self) -> &[usize] {
        &self.t2
    }

    pub fn swapped(&self) -> TreePair {
        TreePair {
            t1: self.t2.clone(),
            t2: self.t1.clone(),
        }
    }

    /// True if both pairs have the same sides, in either order.
    pub fn same_partition(&self, other: &TreePair) -> bool {
        (self.t1 == other.t1 && self.t2 == other.t2) || (self.t1 == other.t2 && self.t2 == other.t1)
    }

    /// Ids of the edges with one end in each tree.
    pub fn crossing_edges(&self, tri: &Triangulation) -> Vec<usize> {
        let n = tri.vertex_count();
        let mut side = vec![false; n];
        for &v in &self.t1 {
            side[v] = true;
        }
        tri.embedding()
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| side[u] != side[v])
            .map(|(e, _)| e)
            .collect()
    }
}

/// A Hamiltonian cycle of the dual as a cyclic face sequence. Stored
/// canonically: it starts at face 0 and continues towards the lower-index of
/// its two cycle neighbours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualHamiltonianCycle {
    faces: Vec<usize>,
}

fn shared_edge(tri: &Triangulation, a: usize, b: usize) -> Option<usize> {
    tri.face_neighbours(a)
        .iter()
        .find(|&&(f, _)| f == b)
        .map(|&(_, e)| e)
}

impl DualHamiltonianCycle {
    pub fn new(tri: &Triangulation, faces: &[usize]) -> Result<Self, CertificateError> {
        let count = tri.face_count();
        if faces.len() != count {
            return Err(CertificateError::CycleLength {
                found: faces.len(),
                expected: count,
            });
        }
        let mut seen = vec![false; count];
        for &f in faces {
            if f >= count {
                return Err(CertificateError::FaceOutOfRange(f));
            }
            if std::mem::replace(&mut seen[f], true) {
                return Err(CertificateError::RepeatedFace(f));
            }
        }
        for i in 0..count {
            let (a, b) = (faces[i], faces[(i + 1) % count]);
            if shared_edge(tri, a, b).is_none() {
                return Err(CertificateError::NotAdjacent { a, b });
            }
        }
        let start = faces.iter().position(|&f| f == 0).expect("face 0 present");
        let mut canon: Vec<usize> = faces[start..].iter().chain(&faces[..start]).copied().collect();
        if canon[count - 1] < canon[1] {
            canon[1..].reverse();
        }
        Ok(DualHamiltonianCycle { faces: canon })
    }

    pub fn faces(&self) -> &[usize] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Ids of the primal edges crossed between consecutive faces, in cycle
    /// order.
    pub fn crossed_edges(&self, tri: &Triangulation) -> Vec<usize> {
        let k = self.faces.len();
        (0..k)
            .map(|i| {
                shared_edge(tri, self.faces[i], self.faces[(i + 1) % k]).expect("validated cycle")
            })
            .collect()
    }

    /// The cycle as a vertex sequence of the dual graph (face ids).
    pub fn as_dual_path(&self) -> &[usize] {
        &self.faces
    }
}

/// Contracts each tree of the pair: the edges between the trees, read in the
/// dual, form a Hamiltonian cycle.
pub fn tree_pair_to_ham_cycle(
    tri: &Triangulation,
    pair: &TreePair,
) -> Result<DualHamiltonianCycle, CertificateError> {
    let pair = TreePair::new(tri, &pair.t1, &pair.t2)?;
    let fc = tri.face_count();
    let mut crossing = vec![false; tri.edge_count()];
    for e in pair.crossing_edges(tri) {
        crossing[e] = true;
    }
    let mut next: Vec<Vec<usize>> = vec![Vec::new(); fc];
    for (f, slot) in next.iter_mut().enumerate() {
        for (g, e) in tri.face_neighbours(f) {
            if crossing[e] {
                slot.push(g);
            }
        }
        if slot.len() != 2 {
            return Err(CertificateError::Crossings {
                face: f,
                crossings: slot.len(),
            });
        }
    }
    let mut faces = vec![0];
    let mut prev = 0;
    let mut cur = next[0][0].min(next[0][1]);
    while cur != 0 && faces.len() <= fc {
        faces.push(cur);
        let step = if next[cur][0] == prev { next[cur][1] } else { next[cur][0] };
        prev = cur;
        cur = step;
    }
    DualHamiltonianCycle::new(tri, &faces)
}

/// Splits the vertices along the cycle: two vertices are on the same side
/// iff a path joins them without using a crossed edge.
pub fn ham_cycle_to_tree_pair(
    tri: &Triangulation,
    cycle: &DualHamiltonianCycle,
) -> Result<TreePair, CertificateError> {
    let cycle = DualHamiltonianCycle::new(tri, &cycle.faces)?;
    let edges = tri.embedding().edges();
    let removed: Vec<(usize, usize)> = cycle.crossed_edges(tri).iter().map(|&e| edges[e]).collect();
    let rest = tri.graph().without_edges(&removed);
    let comps = rest.components();
    if comps.len() != 2 {
        return Err(CertificateError::SideCount(comps.len()));
    }
    TreePair::new(tri, &comps[0], &comps[1])
}

/// Depth-first growth of connected induced trees from each root in turn.
///
/// Vertices below the root are excluded. The branching vertex is the
/// lowest-index vertex adjacent to exactly one tree vertex; it is first
/// included, then excluded. A vertex adjacent to two tree vertices is
/// blocked. A branch dies when a face has all three vertices excluded or
/// blocked, or when the excluded and blocked vertices contain a cycle (the
/// complement of a permeating subtree is a tree).
struct Growth<'a> {
    g: &'a Graph,
    faces_at: Vec<Vec<usize>>,
    face_count: usize,
    in_tree: Vec<bool>,
    dead: Vec<bool>,
    in_nbrs: Vec<u32>,
    hits: Vec<u32>,
    dead_on_face: Vec<u32>,
    hit_faces: usize,
    starved_faces: usize,
    cyclic_dead: usize,
    members: Vec<usize>,
    uf: UndoUnionFind,
    trail: Vec<Step>,
}

enum Step {
    Include(usize),
    Kill { v: usize, unions: usize, cyclic: bool },
}

impl<'a> Growth<'a> {
    fn new(tri: &'a Triangulation) -> Self {
        let n = tri.vertex_count();
        let mut faces_at = vec![Vec::new(); n];
        for (f, face) in tri.faces().iter().enumerate() {
            for &v in face {
                faces_at[v].push(f);
            }
        }
        Growth {
            g: tri.graph(),
            faces_at,
            face_count: tri.face_count(),
            in_tree: vec![false; n],
            dead: vec![false; n],
            in_nbrs: vec![0; n],
            hits: vec![0; tri.face_count()],
            dead_on_face: vec![0; tri.face_count()],
            hit_faces: 0,
            starved_faces: 0,
            cyclic_dead: 0,
            members: Vec::new(),
            uf: UndoUnionFind::new(n),
            trail: Vec::new(),
        }
    }

    fn failed(&self) -> bool {
        self.starved_faces > 0 || self.cyclic_dead > 0
    }

    fn kill(&mut self, v: usize) {
        self.dead[v] = true;
        for &f in &self.faces_at[v] {
            self.dead_on_face[f] += 1;
            if self.dead_on_face[f] == 3 && self.hits[f] == 0 {
                self.starved_faces += 1;
            }
        }
        let mut unions = 0;
        let mut cyclic = false;
        for &u in self.g.neighbors(v) {
            if self.dead[u] {
                unions += 1;
                if !self.uf.union(u, v) {
                    cyclic = true;
                }
            }
        }
        if cyclic {
            self.cyclic_dead += 1;
        }
        self.trail.push(Step::Kill { v, unions, cyclic });
    }

    fn include(&mut self, v: usize) {
        self.in_tree[v] = true;
        self.members.push(v);
        for &f in &self.faces_at[v] {
            if self.hits[f] == 0 {
                self.hit_faces += 1;
            }
            self.hits[f] += 1;
        }
        self.trail.push(Step::Include(v));
        for i in 0..self.g.degree(v) {
            let u = self.g.neighbors(v)[i];
            self.in_nbrs[u] += 1;
            if self.in_nbrs[u] == 2 && !self.in_tree[u] && !self.dead[u] {
                self.kill(u);
            }
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                Step::Include(v) => {
                    self.in_tree[v] = false;
                    self.members.pop();
                    for &f in &self.faces_at[v] {
                        self.hits[f] -= 1;
                        if self.hits[f] == 0 {
                            self.hit_faces -= 1;
                        }
                    }
                    for &u in self.g.neighbors(v) {
                        self.in_nbrs[u] -= 1;
                    }
                }
                Step::Kill { v, unions, cyclic } => {
                    for _ in 0..unions {
                        self.uf.undo();
                    }
                    if cyclic {
                        self.cyclic_dead -= 1;
                    }
                    for &f in &self.faces_at[v] {
                        if self.dead_on_face[f] == 3 && self.hits[f] == 0 {
                            self.starved_faces -= 1;
                        }
                        self.dead_on_face[f] -= 1;
                    }
                    self.dead[v] = false;
                }
            }
        }
    }

    fn frontier(&self) -> Option<usize> {
        (0..self.in_tree.len()).find(|&v| !self.in_tree[v] && !self.dead[v] && self.in_nbrs[v] == 1)
    }

    /// Returns false once the visitor asks to stop or the budget runs out.
    fn grow(
        &mut self,
        meter: &mut Meter,
        emit: bool,
        visit: &mut dyn FnMut(&[usize]) -> bool,
        emitted: &mut u64,
    ) -> bool {
        if !meter.tick() {
            return false;
        }
        if emit && self.hit_faces == self.face_count {
            *emitted += 1;
            let mut set = self.members.clone();
            set.sort_unstable();
            if !visit(&set) {
                return false;
            }
        }
        let Some(v) = self.frontier() else {
            return true;
        };
        let mark = self.trail.len();
        self.include(v);
        if !self.failed() && !self.grow(meter, true, visit, emitted) {
            self.undo_to(mark);
            return false;
        }
        self.undo_to(mark);
        self.kill(v);
        let keep_going = self.failed() || self.grow(meter, false, visit, emitted);
        self.undo_to(mark);
        keep_going
    }
}

/// Visits every permeating subtree of `tri` once (vertex lists sorted). The
/// visitor returns false to stop early. Visiting order is by smallest
/// member, not lexicographic.
pub fn for_each_permeating_subtree(
    tri: &Triangulation,
    budget: SearchBudget,
    mut visit: impl FnMut(&[usize]) -> bool,
) -> Enumeration {
    let mut meter = Meter::new(budget);
    let mut growth = Growth::new(tri);
    let mut emitted = 0;
    let mut stopped = false;
    for root in 0..tri.vertex_count() {
        if growth.failed() {
            break;
        }
        let mark = growth.trail.len();
        growth.include(root);
        let ok = growth.failed() || growth.grow(&mut meter, true, &mut visit, &mut emitted);
        growth.undo_to(mark);
        if !ok {
            stopped = true;
            break;
        }
        growth.kill(root);
    }
    Enumeration {
        emitted,
        nodes: meter.nodes,
        complete: !stopped && !meter.exceeded,
    }
}

/// All permeating subtrees in lexicographic order.
pub fn permeating_subtrees(
    tri: &Triangulation,
    budget: SearchBudget,
) -> (Vec<Vec<usize>>, Enumeration) {
    let mut out = Vec::new();
    let stats = for_each_permeating_subtree(tri, budget, |s| {
        out.push(s.to_vec());
        true
    });
    out.sort();
    (out, stats)
}

/// Some permeating subtree, or an exhaustive-failure verdict.
pub fn find_permeating_subtree(tri: &Triangulation, budget: SearchBudget) -> Search<PermeatingSubtree> {
    let mut found = None;
    let stats = for_each_permeating_subtree(tri, budget, |s| {
        found = Some(s.to_vec());
        false
    });
    match found {
        Some(v) => Search::Found(PermeatingSubtree { vertices: v }),
        None if stats.complete => Search::Exhausted,
        None => Search::Inconclusive { nodes: stats.nodes },
    }
}

/// Text certificates: `TREEPAIR <t1 ids> | <t2 ids>` and
/// `HAMCYCLE a,b,c a,b,c ...` (faces by their vertex triples).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    TreePair { t1: Vec<usize>, t2: Vec<usize> },
    HamCycle { faces: Vec<[usize; 3]> },
}

fn parse_ids(text: &str) -> Result<Vec<usize>, CertificateError> {
    text.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| CertificateError::Syntax(format!("bad vertex id {t:?}")))
        })
        .collect()
}

impl Certificate {
    pub fn from_pair(pair: &TreePair) -> Self {
        Certificate::TreePair {
            t1: pair.t1.clone(),
            t2: pair.t2.clone(),
        }
    }

    pub fn from_cycle(tri: &Triangulation, cycle: &DualHamiltonianCycle) -> Self {
        Certificate::HamCycle {
            faces: cycle.faces.iter().map(|&f| tri.face(f)).collect(),
        }
    }

    pub fn parse(line: &str) -> Result<Self, CertificateError> {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix("TREEPAIR") {
            let (a, b) = rest
                .split_once('|')
                .ok_or_else(|| CertificateError::Syntax("TREEPAIR needs `|`".into()))?;
            return Ok(Certificate::TreePair {
                t1: parse_ids(a)?,
                t2: parse_ids(b)?,
            });
        }
        if let Some(rest) = line.strip_prefix("HAMCYCLE") {
            let faces = rest
                .split_whitespace()
                .map(|tok| {
                    let ids: Vec<usize> = tok
                        .split(',')
                        .map(|t| t.parse())
                        .collect::<Result<_, _>>()
                        .map_err(|_| CertificateError::Syntax(format!("bad face {tok:?}")))?;
                    <[usize; 3]>::try_from(ids)
                        .map_err(|_| CertificateError::Syntax(format!("face {tok:?} is not a triple")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(Certificate::HamCycle { faces });
        }
        Err(CertificateError::Syntax(format!("unknown certificate {line:?}")))
    }

    /// Every non-blank, non-comment line parsed as a certificate.
    pub fn parse_all(text: &str) -> Result<Vec<Self>, CertificateError> {
        text.lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(Certificate::parse)
            .collect()
    }

    pub fn to_tree_pair(&self, tri: &Triangulation) -> Result<TreePair, CertificateError> {
        match self {
            Certificate::TreePair { t1, t2 } => TreePair::new(tri, t1, t2),
            Certificate::HamCycle { .. } => ham_cycle_to_tree_pair(tri, &self.to_cycle(tri)?),
        }
    }

    pub fn to_cycle(&self, tri: &Triangulation) -> Result<DualHamiltonianCycle, CertificateError> {
        match self {
            Certificate::HamCycle { faces } => {
                let ids = faces
                    .iter()
                    .map(|&t| tri.face_index(t).ok_or(CertificateError::UnknownFace(t)))
                    .collect::<Result<Vec<_>, _>>()?;
                DualHamiltonianCycle::new(tri, &ids)
            }
            Certificate::TreePair { .. } => tree_pair_to_ham_cycle(tri, &self.to_tree_pair(tri)?),
        }
    }

    /// Validates the certificate against `tri`.
    pub fn verify(&self, tri: &Triangulation) -> Result<(), CertificateError> {
        match self {
            Certificate::TreePair { .. } => self.to_tree_pair(tri).map(drop),
            Certificate::HamCycle { .. } => self.to_cycle(tri).map(drop),
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::TreePair { t1, t2 } => {
                write!(f, "TREEPAIR {} | {}", join(t1, " "), join(t2, " "))
            }
            Certificate::HamCycle { faces } => {
                write!(f, "HAMCYCLE")?;
                for t in faces {
                    write!(f, " {},{},{}", t[0], t[1], t[2])?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::oracle;

    // Octahedron labels: N = 0, equator a, b, c, d = 1..4, S = 5.
    const N: usize = 0;
    const A: usize = 1;
    const S: usize = 5;

    #[test]
    fn octahedron_verdicts() {
        let oct = corpus::octahedron();
        assert_eq!(is_permeating_subtree(&oct, &[N, A, S]), SubtreeVerdict::Permeating);
        assert!(matches!(
            is_permeating_subtree(&oct, &[N, A]),
            SubtreeVerdict::MissedFace { .. }
        ));
        assert!(matches!(
            is_permeating_subtree(&oct, &[0, 1, 2, 3, 4, 5]),
            SubtreeVerdict::InducedCycle { .. }
        ));
        assert!(matches!(
            is_permeating_subtree(&oct, &[N, S]),
            SubtreeVerdict::Disconnected { .. }
        ));
    }

    #[test]
    fn octahedron_complement_is_equator_path() {
        let oct = corpus::octahedron();
        let t = PermeatingSubtree::new(&oct, &[N, A, S]).unwrap();
        assert_eq!(complement_tree(&oct, &t).vertices(), &[2, 3, 4]);
    }

    #[test]
    fn tetrahedron_edge_complements() {
        let tet = corpus::tetrahedron();
        assert!(matches!(
            is_permeating_subtree(&tet, &[2]),
            SubtreeVerdict::MissedFace { .. }
        ));
        let t = PermeatingSubtree::new(&tet, &[0, 1]).unwrap();
        assert_eq!(complement_tree(&tet, &t).vertices(), &[2, 3]);
        let cyc = tree_pair_to_ham_cycle(&tet, &TreePair::from_subtree(&tet, &t)).unwrap();
        assert_eq!(cyc.len(), 4);
    }

    #[test]
    fn octahedron_round_trip() {
        let oct = corpus::octahedron();
        let pair = TreePair::new(&oct, &[N, A, S], &[2, 3, 4]).unwrap();
        let cyc = tree_pair_to_ham_cycle(&oct, &pair).unwrap();
        assert_eq!(cyc.len(), 8);
        assert_eq!(cyc.faces()[0], 0);
        assert!(cyc.faces()[1] < cyc.faces()[7]);
        let dual = oct.dual_embedding().to_graph();
        assert!(oracle::is_hamiltonian_cycle(&dual, cyc.faces()));
        let mut crossed = cyc.crossed_edges(&oct);
        crossed.sort_unstable();
        assert_eq!(crossed, pair.crossing_edges(&oct));
        let back = ham_cycle_to_tree_pair(&oct, &cyc).unwrap();
        assert!(back.same_partition(&pair));
    }

    #[test]
    fn invalid_pairs_name_the_violation() {
        let oct = corpus::octahedron();
        assert!(matches!(
            TreePair::new(&oct, &[N, A], &[2, 3, 4]),
            Err(CertificateError::NotPartition { .. })
        ));
        assert!(matches!(
            TreePair::new(&oct, &[N, S], &[1, 2, 3, 4]),
            Err(CertificateError::Side { side: 1, .. })
        ));
        assert!(matches!(
            DualHamiltonianCycle::new(&oct, &[0, 1, 2]),
            Err(CertificateError::CycleLength { .. })
        ));
    }

    #[test]
    fn search_agrees_with_oracle_on_corpus() {
        for (name, tri) in corpus::triangulations() {
            let budget = SearchBudget::default();
            let (fast, stats) = permeating_subtrees(&tri, budget);
            let (slow, ostats) = oracle::permeating_subtrees(&tri, budget);
            assert!(stats.complete && ostats.complete, "{name}");
            assert_eq!(fast, slow, "{name}");
            for s in &fast {
                let t = PermeatingSubtree::new(&tri, s).unwrap();
                complement_tree(&tri, &t);
            }
        }
    }

    #[test]
    fn finds_subtrees() {
        let budget = SearchBudget::default();
        let oct = corpus::octahedron();
        let t = find_permeating_subtree(&oct, budget).into_found().unwrap();
        assert!(is_permeating_subtree(&oct, t.vertices()).is_permeating());
        let tet = corpus::tetrahedron();
        let t = find_permeating_subtree(&tet, budget).into_found().unwrap();
        assert_eq!(t.len(), 2);
        assert!(find_permeating_subtree(&corpus::icosahedron(), SearchBudget::nodes(1)).is_inconclusive());
    }

    #[test]
    fn certificates_round_trip() {
        let oct = corpus::octahedron();
        let pair = TreePair::new(&oct, &[N, A, S], &[2, 3, 4]).unwrap();
        let cyc = tree_pair_to_ham_cycle(&oct, &pair).unwrap();
        let text = format!(
            "{}\n# comment\n{}\n",
            Certificate::from_pair(&pair),
            Certificate::from_cycle(&oct, &cyc)
        );
        assert!(text.starts_with("TREEPAIR 0 1 5 | 2 3 4\n# comment\nHAMCYCLE "));
        let certs = Certificate::parse_all(&text).unwrap();
        assert_eq!(certs.len(), 2);
        for c in &certs {
            c.verify(&oct).unwrap();
        }
        assert_eq!(certs[1].to_cycle(&oct).unwrap(), cyc);
        assert!(Certificate::parse("HAMCYCLE 0,1").is_err());
        assert!(matches!(
            Certificate::parse("HAMCYCLE 0,1,2").unwrap().verify(&oct),
            Err(CertificateError::CycleLength { .. })
        ));
    }
}
