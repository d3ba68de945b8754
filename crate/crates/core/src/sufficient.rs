//! Blue/red instances: hypothesis checking, the red dual, and the
//! construction of a permeating subtree from blue vertices plus a set of
//! degree-4 red vertices. Also the two reductions from 3-colourings.

use std::collections::VecDeque;

use thiserror::Error;

use crate::coloring::{Colour, VertexColoring};
use crate::duality::{
    tree_pair_to_ham_cycle, DualHamiltonianCycle, PermeatingSubtree, TreePair,
};
use crate::triangulation::{DualEdge, DualMultigraph, Triangulation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SufficientError {
    #[error("colouring has {found} entries, graph has {expected} vertices")]
    LengthMismatch { found: usize, expected: usize },
    #[error("vertex {0} is green; expected only blue and red")]
    NotTwoColoured(usize),
    #[error("hypotheses fail: {0}")]
    Hypotheses(HypothesisReport),
    #[error("colouring is not proper: edge {0}-{1} is monochromatic")]
    NotProper(usize, usize),
    #[error("red-green cycle without a degree-4 vertex: {0:?}")]
    RedGreenCycle(Vec<usize>),
    #[error("vertex sets X and Y must partition the vertices of degree at least 6")]
    BadPartition,
    #[error("vertex {0} of degree at least 6 is on the wrong side")]
    WrongSide(usize),
    #[error("induced cycle inside {side}: {cycle:?}")]
    CyclicSide { side: &'static str, cycle: Vec<usize> },
    #[error("internal contradiction: {0}")]
    Internal(String),
}

/// One verdict per hypothesis, each with a witness on failure.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HypothesisReport {
    /// A face with no blue vertex.
    pub missed_face: Option<usize>,
    /// A cycle of blue vertices.
    pub blue_cycle: Option<Vec<usize>>,
    /// A cycle of red vertices all of degree at least 5.
    pub high_red_cycle: Option<Vec<usize>>,
}

impl HypothesisReport {
    pub fn faces_covered(&self) -> bool {
        self.missed_face.is_none()
    }

    pub fn blue_acyclic(&self) -> bool {
        self.blue_cycle.is_none()
    }

    pub fn red_cycles_short(&self) -> bool {
        self.high_red_cycle.is_none()
    }

    pub fn holds(&self) -> bool {
        self.faces_covered() && self.blue_acyclic() && self.red_cycles_short()
    }
}

impl std::fmt::Display for HypothesisReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if let Some(face) = self.missed_face {
            parts.push(format!("face {face} has no blue vertex"));
        }
        if let Some(c) = &self.blue_cycle {
            parts.push(format!("blue cycle {c:?}"));
        }
        if let Some(c) = &self.high_red_cycle {
            parts.push(format!("red cycle {c:?} has no vertex of degree at most 4"));
        }
        if parts.is_empty() {
            write!(f, "all hypotheses hold")
        } else {
            write!(f, "{}", parts.join("; "))
        }
    }
}

fn check_two_colouring(tri: &Triangulation, col: &VertexColoring) -> Result<(), SufficientError> {
    if col.len() != tri.vertex_count() {
        return Err(SufficientError::LengthMismatch {
            found: col.len(),
            expected: tri.vertex_count(),
        });
    }
    if let Some(v) = col.class(Colour::Green).first() {
        return Err(SufficientError::NotTwoColoured(*v));
    }
    Ok(())
}

/// Evaluates the three hypotheses for a blue/red colouring.
pub fn check_hypotheses(
    tri: &Triangulation,
    col: &VertexColoring,
) -> Result<HypothesisReport, SufficientError> {
    check_two_colouring(tri, col)?;
    let g = tri.graph();
    let blue = col.mask(Colour::Blue);
    let missed_face = (0..tri.face_count()).find(|&f| tri.face(f).iter().all(|&v| !blue[v]));
    let blue_cycle = g.find_cycle_within(&blue);
    let high_red: Vec<bool> = (0..tri.vertex_count())
        .map(|v| !blue[v] && g.degree(v) >= 5)
        .collect();
    let high_red_cycle = g.find_cycle_within(&high_red);
    Ok(HypothesisReport {
        missed_face,
        blue_cycle,
        high_red_cycle,
    })
}

/// An edge of the red dual: one per red-red edge of the triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedDualEdge {
    pub primal: (usize, usize),
    pub primal_edge: usize,
    pub nodes: (usize, usize),
    pub short: bool,
}

impl RedDualEdge {
    pub fn is_loop(&self) -> bool {
        self.nodes.0 == self.nodes.1
    }
}

/// The planar dual of the red subgraph. Each node is a face of the red
/// subgraph, identified with the triangles inside it, and corresponds to one
/// component of the blue subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedDual {
    pub node_count: usize,
    /// Node containing each triangle.
    pub node_of_face: Vec<usize>,
    pub edges: Vec<RedDualEdge>,
    /// Blue components, sorted and ordered by smallest member.
    pub blue_components: Vec<Vec<usize>>,
    /// The blue component inside each node.
    pub component_of_node: Vec<usize>,
}

impl RedDual {
    pub fn short_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.short).count()
    }

    pub fn multigraph(&self) -> DualMultigraph {
        DualMultigraph::new(
            self.node_count,
            self.edges
                .iter()
                .map(|e| DualEdge {
                    faces: e.nodes,
                    primal_edge: e.primal_edge,
                })
                .collect(),
        )
    }

    /// True if the short edges connect all nodes.
    pub fn short_connected(&self) -> bool {
        short_spanning_tree(self).is_ok()
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Builds the red dual. Triangles sharing an edge that is not red-red lie in
/// the same face of the red subgraph.
pub fn red_dual(tri: &Triangulation, col: &VertexColoring) -> Result<RedDual, SufficientError> {
    let report = check_hypotheses(tri, col)?;
    if !report.holds() {
        return Err(SufficientError::Hypotheses(report));
    }
    let g = tri.graph();
    let red = col.mask(Colour::Red);
    let edges = tri.embedding().edges();
    let mut parent: Vec<usize> = (0..tri.face_count()).collect();
    for (e, &(u, v)) in edges.iter().enumerate() {
        if !(red[u] && red[v]) {
            let (a, b) = tri.edge_faces(e);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    let mut node_id = vec![usize::MAX; tri.face_count()];
    let mut node_count = 0;
    let mut node_of_face = Vec::with_capacity(tri.face_count());
    for f in 0..tri.face_count() {
        let r = find(&mut parent, f);
        if node_id[r] == usize::MAX {
            node_id[r] = node_count;
            node_count += 1;
        }
        node_of_face.push(node_id[r]);
    }

    let red_vertices = red.iter().filter(|&&r| r).count();
    let red_edges = g.induced_edge_count(&red);
    let red_components = g.components_within(&red).len();
    let expected_faces = 1 + red_components + red_edges - red_vertices;
    if node_count != expected_faces {
        return Err(SufficientError::Internal(format!(
            "red subgraph has {node_count} faces, Euler gives {expected_faces}"
        )));
    }

    let blue = col.mask(Colour::Blue);
    let blue_components = g.components_within(&blue);
    let label = g.component_labels(&blue);
    let mut component_of_node = vec![usize::MAX; node_count];
    for f in 0..tri.face_count() {
        let node = node_of_face[f];
        for &v in &tri.face(f) {
            if !blue[v] {
                continue;
            }
            let c = label[v];
            if component_of_node[node] == usize::MAX {
                component_of_node[node] = c;
            } else if component_of_node[node] != c {
                return Err(SufficientError::Internal(format!(
                    "red face {node} contains two blue components"
                )));
            }
        }
    }
    let mut seen = vec![false; blue_components.len()];
    for &c in &component_of_node {
        if c == usize::MAX || std::mem::replace(&mut seen[c], true) {
            return Err(SufficientError::Internal(
                "red faces and blue components are not in bijection".into(),
            ));
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(SufficientError::Internal(
            "a blue component lies in no red face".into(),
        ));
    }

    let dual_edges = edges
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| red[u] && red[v])
        .map(|(e, &(u, v))| {
            let (a, b) = tri.edge_faces(e);
            RedDualEdge {
                primal: (u, v),
                primal_edge: e,
                nodes: (node_of_face[a], node_of_face[b]),
                short: g.degree(u) <= 4 || g.degree(v) <= 4,
            }
        })
        .collect();
    Ok(RedDual {
        node_count,
        node_of_face,
        edges: dual_edges,
        blue_components,
        component_of_node,
    })
}

/// Breadth-first spanning tree of the short edges from node 0, trying edges
/// in primal edge order. Returns indices into `rd.edges`.
pub fn short_spanning_tree(rd: &RedDual) -> Result<Vec<usize>, SufficientError> {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); rd.node_count];
    for (i, e) in rd.edges.iter().enumerate() {
        if e.short && !e.is_loop() {
            incident[e.nodes.0].push(i);
            incident[e.nodes.1].push(i);
        }
    }
    for list in &mut incident {
        list.sort_by_key(|&i| rd.edges[i].primal_edge);
    }
    let mut reached = vec![false; rd.node_count];
    let mut tree = Vec::new();
    if rd.node_count == 0 {
        return Ok(tree);
    }
    reached[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for &i in &incident[x] {
            let (a, b) = rd.edges[i].nodes;
            let y = if a == x { b } else { a };
            if !reached[y] {
                reached[y] = true;
                tree.push(i);
                queue.push_back(y);
            }
        }
    }
    if tree.len() + 1 != rd.node_count {
        return Err(SufficientError::Internal(format!(
            "short edges leave {} of {} red faces unreached",
            rd.node_count - 1 - tree.len(),
            rd.node_count
        )));
    }
    Ok(tree)
}

/// Picks, for each tree edge, an endpoint of degree at most 4 (the smaller
/// id if both qualify), and checks the properties the construction relies
/// on. Returns the sorted set.
pub fn build_s(
    tri: &Triangulation,
    col: &VertexColoring,
    rd: &RedDual,
    tree: &[usize],
) -> Result<Vec<usize>, SufficientError> {
    let g = tri.graph();
    let blue = col.mask(Colour::Blue);
    let label = g.component_labels(&blue);
    let internal = |msg: String| Err(SufficientError::Internal(msg));
    let mut s = Vec::with_capacity(tree.len());
    for &i in tree {
        let e = &rd.edges[i];
        let (u, v) = e.primal;
        let x = match (g.degree(u) <= 4, g.degree(v) <= 4) {
            (true, true) => u.min(v),
            (true, false) => u,
            (false, true) => v,
            (false, false) => return internal(format!("tree edge {u}-{v} is long")),
        };
        if g.degree(x) != 4 {
            return internal(format!("vertex {x} of S has degree {}", g.degree(x)));
        }
        let rot = tri.rotation(x);
        let blue_pos: Vec<usize> = (0..4).filter(|&p| blue[rot[p]]).collect();
        if blue_pos.len() != 2 || blue_pos[1] - blue_pos[0] != 2 {
            return internal(format!(
                "vertex {x} of S does not have two opposite blue neighbours"
            ));
        }
        let (c1, c2) = (label[rot[blue_pos[0]]], label[rot[blue_pos[1]]]);
        let joined = (rd.component_of_node[e.nodes.0], rd.component_of_node[e.nodes.1]);
        if c1 == c2 || (c1, c2) != joined && (c2, c1) != joined {
            return internal(format!(
                "blue neighbours of {x} do not lie in the two components its edge joins"
            ));
        }
        s.push(x);
    }
    s.sort_unstable();
    let before = s.len();
    s.dedup();
    if s.len() != before {
        return internal("a vertex of S was chosen twice".into());
    }
    for (i, &a) in s.iter().enumerate() {
        if let Some(&b) = s[i + 1..].iter().find(|&&b| g.has_edge(a, b)) {
            return internal(format!("vertices {a} and {b} of S are adjacent"));
        }
    }
    Ok(s)
}

/// Everything the construction produces, for inspection and certificates.
#[derive(Debug, Clone)]
pub struct Theorem1Output {
    pub red_dual: RedDual,
    /// Indices into `red_dual.edges`.
    pub tree: Vec<usize>,
    pub s: Vec<usize>,
    pub subtree: PermeatingSubtree,
    pub pair: TreePair,
    pub cycle: DualHamiltonianCycle,
}

/// Runs the full construction: hypotheses, red dual, short spanning tree,
/// the set S, and the resulting tree pair and dual Hamiltonian cycle.
pub fn theorem1_pipeline(
    tri: &Triangulation,
    col: &VertexColoring,
) -> Result<Theorem1Output, SufficientError> {
    let rd = red_dual(tri, col)?;
    let tree = short_spanning_tree(&rd)?;
    let s = build_s(tri, col, &rd, &tree)?;
    let mut members = col.class(Colour::Blue);
    members.extend(&s);
    let subtree = PermeatingSubtree::new(tri, &members)
        .map_err(|e| SufficientError::Internal(format!("blue plus S: {e}")))?;
    let pair = TreePair::from_subtree(tri, &subtree);
    let cycle = tree_pair_to_ham_cycle(tri, &pair)
        .map_err(|e| SufficientError::Internal(e.to_string()))?;
    Ok(Theorem1Output {
        red_dual: rd,
        tree,
        s,
        subtree,
        pair,
        cycle,
    })
}

fn check_proper(tri: &Triangulation, three: &VertexColoring) -> Result<(), SufficientError> {
    if three.len() != tri.vertex_count() {
        return Err(SufficientError::LengthMismatch {
            found: three.len(),
            expected: tri.vertex_count(),
        });
    }
    match three.monochromatic_edge(tri.graph()) {
        Some((u, v)) => Err(SufficientError::NotProper(u, v)),
        None => Ok(()),
    }
}

/// Merges green into red, after checking that the red and green vertices
/// of degree other than 4 induce a forest.
pub fn corollary12_reduce(
    tri: &Triangulation,
    three: &VertexColoring,
) -> Result<VertexColoring, SufficientError> {
    check_proper(tri, three)?;
    let g = tri.graph();
    let mask: Vec<bool> = (0..tri.vertex_count())
        .map(|v| three.colour(v) != Colour::Blue && g.degree(v) != 4)
        .collect();
    if let Some(cycle) = g.find_cycle_within(&mask) {
        return Err(SufficientError::RedGreenCycle(cycle));
    }
    Ok(three.recoloured(|c| if c == Colour::Green { Colour::Red } else { c }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlorekOutcome {
    /// Blue is the final V1, red the rest.
    pub colouring: VertexColoring,
    /// Red degree-4 vertices moved out of V1, in order.
    pub moves: Vec<usize>,
}

/// Starts from V1 = X plus all red vertices and, while V1 induces a cycle,
/// moves the lowest red degree-4 vertex of that cycle out of V1.
pub fn florek_reduce(
    tri: &Triangulation,
    three: &VertexColoring,
    x: &[usize],
    y: &[usize],
) -> Result<FlorekOutcome, SufficientError> {
    check_proper(tri, three)?;
    let g = tri.graph();
    let n = tri.vertex_count();
    let mut side = vec![0u8; n];
    for &v in x {
        if v >= n || side[v] != 0 {
            return Err(SufficientError::BadPartition);
        }
        side[v] = 1;
    }
    for &v in y {
        if v >= n || side[v] != 0 {
            return Err(SufficientError::BadPartition);
        }
        side[v] = 2;
    }
    for v in 0..n {
        if (g.degree(v) >= 6) != (side[v] != 0) {
            return Err(SufficientError::BadPartition);
        }
        if side[v] == 1 && three.colour(v) == Colour::Blue
            || side[v] == 2 && three.colour(v) == Colour::Red
        {
            return Err(SufficientError::WrongSide(v));
        }
    }
    for (name, code) in [("X", 1u8), ("Y", 2u8)] {
        let mask: Vec<bool> = side.iter().map(|&s| s == code).collect();
        if let Some(cycle) = g.find_cycle_within(&mask) {
            return Err(SufficientError::CyclicSide { side: name, cycle });
        }
    }

    let mut v1: Vec<bool> = (0..n)
        .map(|v| side[v] == 1 || three.colour(v) == Colour::Red)
        .collect();
    let mut moves = Vec::new();
    while let Some(cycle) = g.find_cycle_within(&v1) {
        let Some(&v) = cycle
            .iter()
            .filter(|&&v| three.colour(v) == Colour::Red && g.degree(v) == 4)
            .min()
        else {
            return Err(SufficientError::Internal(format!(
                "cycle {cycle:?} in V1 has no red degree-4 vertex"
            )));
        };
        v1[v] = false;
        moves.push(v);
        if let Some(f) = (0..tri.face_count()).find(|&f| tri.face(f).iter().all(|&u| !v1[u])) {
            return Err(SufficientError::Internal(format!(
                "moving {v} uncovered face {f}"
            )));
        }
    }
    let blue: Vec<usize> = (0..n).filter(|&v| v1[v]).collect();
    Ok(FlorekOutcome {
        colouring: VertexColoring::from_blue_set(n, &blue),
        moves,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::proper_3_coloring;
    use crate::corpus;
    use crate::duality::is_permeating_subtree;
    use crate::oracle;

    #[test]
    fn octahedron_antipodal_instance() {
        let oct = corpus::octahedron();
        let col = VertexColoring::from_blue_set(6, &[0, 5]);
        assert!(check_hypotheses(&oct, &col).unwrap().holds());
        let rd = red_dual(&oct, &col).unwrap();
        assert_eq!(rd.node_count, 2);
        assert_eq!(rd.edges.len(), 4);
        assert!(rd.edges.iter().all(|e| e.short && !e.is_loop()));
        let tree = short_spanning_tree(&rd).unwrap();
        assert_eq!(tree.len(), 1);
        let lowest = rd.edges.iter().map(|e| e.primal_edge).min().unwrap();
        assert_eq!(rd.edges[tree[0]].primal_edge, lowest);
        let out = theorem1_pipeline(&oct, &col).unwrap();
        assert_eq!(out.s.len(), 1);
        assert_eq!(out.subtree.len(), 3);
        assert_eq!(out.cycle.len(), 8);
        let dual = oct.dual_embedding().to_graph();
        assert!(oracle::is_hamiltonian_cycle(&dual, out.cycle.faces()));
    }

    #[test]
    fn failing_hypotheses_have_witnesses() {
        let oct = corpus::octahedron();
        let r = check_hypotheses(&oct, &VertexColoring::from_blue_set(6, &[1, 2])).unwrap();
        let f = r.missed_face.unwrap();
        assert_eq!(oct.face(f).iter().filter(|v| [1, 2].contains(v)).count(), 0);
        // Two opposite equator vertices form a colour class and hit every face.
        let r = check_hypotheses(&oct, &VertexColoring::from_blue_set(6, &[1, 3])).unwrap();
        assert!(r.holds());
        let all = VertexColoring::from_blue_set(6, &[0, 1, 2, 3, 4, 5]);
        let r = check_hypotheses(&oct, &all).unwrap();
        assert!(r.blue_cycle.is_some() && r.faces_covered());
        let ico = corpus::icosahedron();
        let r = check_hypotheses(&ico, &VertexColoring::from_blue_set(12, &[])).unwrap();
        assert!(r.high_red_cycle.is_some());
        assert!(matches!(
            theorem1_pipeline(&ico, &VertexColoring::from_blue_set(12, &[])),
            Err(SufficientError::Hypotheses(_))
        ));
    }

    #[test]
    fn single_red_face_gives_empty_s() {
        let tri = corpus::bipyramid(5);
        let col = VertexColoring::from_blue_set(7, &[1, 2, 3, 4, 5]);
        assert!(check_hypotheses(&tri, &col).unwrap().blue_cycle.is_some());
        // Blue is the path 1-2-3 on the equator; red is the path 0-4-5.
        let tri = corpus::bipyramid(4);
        let col = VertexColoring::from_blue_set(6, &[1, 2, 3]);
        let out = theorem1_pipeline(&tri, &col).unwrap();
        assert_eq!(out.red_dual.node_count, 1);
        assert!(out.red_dual.edges.iter().all(RedDualEdge::is_loop));
        assert!(out.tree.is_empty() && out.s.is_empty());
        assert_eq!(out.subtree.vertices(), &[1, 2, 3]);
    }

    #[test]
    fn degree_three_red_edges_are_loops() {
        // Stack a vertex into a face of the octahedron and colour it red
        // together with one red neighbour.
        let oct = corpus::octahedron();
        let f = oct.face_index([0, 1, 2]).unwrap();
        let tri = oct.stack_vertex(f);
        let col = VertexColoring::from_blue_set(7, &[0, 2, 5]);
        let r = check_hypotheses(&tri, &col).unwrap();
        assert!(r.holds());
        let rd = red_dual(&tri, &col).unwrap();
        let e = rd.edges.iter().find(|e| e.primal == (1, 6)).unwrap();
        assert!(e.short && e.is_loop());
        let out = theorem1_pipeline(&tri, &col).unwrap();
        assert!(!out.tree.iter().any(|&i| rd.edges[i].is_loop()));
        assert!(is_permeating_subtree(&tri, out.subtree.vertices()).is_permeating());
    }

    #[test]
    fn corollary12_on_octahedron() {
        let oct = corpus::octahedron();
        let three = proper_3_coloring(&oct).unwrap();
        let inst = corollary12_reduce(&oct, &three).unwrap();
        assert!(check_hypotheses(&oct, &inst).unwrap().holds());
        assert!(theorem1_pipeline(&oct, &inst).is_ok());
        let bad = VertexColoring::from_blue_set(6, &[0]);
        assert!(matches!(
            corollary12_reduce(&oct, &bad),
            Err(SufficientError::NotProper(..))
        ));
    }

    #[test]
    fn florek_identity_when_already_acyclic() {
        let oct = corpus::octahedron();
        let three = proper_3_coloring(&oct).unwrap();
        // No vertex has degree 6, so X and Y are empty and V1 is the red pair.
        let out = florek_reduce(&oct, &three, &[], &[]).unwrap();
        assert!(out.moves.is_empty());
        assert_eq!(out.colouring.class(Colour::Blue), three.class(Colour::Red));
        assert!(check_hypotheses(&oct, &out.colouring).unwrap().holds());
        assert_eq!(
            florek_reduce(&oct, &three, &[0], &[]),
            Err(SufficientError::BadPartition)
        );
    }
}
