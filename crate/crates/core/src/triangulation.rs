//! Validated planar triangulations and their duals.

use std::collections::HashMap;

use crate::embedding::{EmbeddingError, PlanarEmbedding};
use crate::graph::Graph;

/// A connected simple plane graph on at least four vertices whose faces are
/// all triangles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    embedding: PlanarEmbedding,
    faces: Vec<[usize; 3]>,
    graph: Graph,
    lookup: HashMap<[usize; 3], usize>,
}

fn sorted3(mut t: [usize; 3]) -> [usize; 3] {
    t.sort_unstable();
    t
}

impl Triangulation {
    pub fn new(embedding: PlanarEmbedding) -> Result<Self, EmbeddingError> {
        let n = embedding.vertex_count();
        if n < 4 {
            return Err(EmbeddingError::TooFewVertices(n));
        }
        let components = embedding.component_count();
        if components != 1 {
            return Err(EmbeddingError::Disconnected { components });
        }
        let mut faces = Vec::with_capacity(embedding.face_count());
        for (i, f) in embedding.faces().iter().enumerate() {
            if f.len() != 3 {
                return Err(EmbeddingError::NonTriangularFace {
                    face: i,
                    length: f.len(),
                });
            }
            faces.push([f.vertices[0], f.vertices[1], f.vertices[2]]);
        }
        let lookup = faces
            .iter()
            .enumerate()
            .map(|(i, &f)| (sorted3(f), i))
            .collect();
        let graph = embedding.to_graph();
        Ok(Triangulation {
            embedding,
            faces,
            graph,
            lookup,
        })
    }

    pub fn from_rotations(rotations: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        Triangulation::new(PlanarEmbedding::from_rotations(rotations)?)
    }

    /// Builds a triangulation from its oriented face walks. In a walk
    /// `(a, b, c)`, `c` follows `a` in the clockwise rotation at `b`.
    /// Each rotation starts at the smallest neighbour.
    pub fn from_faces(n: usize, faces: &[[usize; 3]]) -> Result<Self, EmbeddingError> {
        let mut next: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
        for f in faces {
            for i in 0..3 {
                let (prev, v, succ) = (f[i], f[(i + 1) % 3], f[(i + 2) % 3]);
                for &x in f {
                    if x >= n {
                        return Err(EmbeddingError::NeighborOutOfRange {
                            vertex: v,
                            neighbor: x,
                            n,
                        });
                    }
                }
                if next[v].insert(prev, succ).is_some() {
                    return Err(EmbeddingError::InconsistentFaces { vertex: v });
                }
            }
        }
        let mut rotations = Vec::with_capacity(n);
        for (v, map) in next.iter().enumerate() {
            let Some(&start) = map.keys().min() else {
                return Err(EmbeddingError::UncoveredVertex { vertex: v });
            };
            let mut rot = vec![start];
            let mut cur = start;
            loop {
                cur = *map
                    .get(&cur)
                    .ok_or(EmbeddingError::InconsistentFaces { vertex: v })?;
                if cur == start {
                    break;
                }
                if rot.len() > map.len() {
                    return Err(EmbeddingError::InconsistentFaces { vertex: v });
                }
                rot.push(cur);
            }
            if rot.len() != map.len() {
                return Err(EmbeddingError::InconsistentFaces { vertex: v });
            }
            rotations.push(rot);
        }
        Triangulation::from_rotations(rotations)
    }

    pub fn embedding(&self) -> &PlanarEmbedding {
        &self.embedding
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.embedding.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.embedding.edge_count()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Faces as oriented vertex triples, in tracing order.
    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> [usize; 3] {
        self.faces[i]
    }

    /// Index of the face with the given vertex set, in any order.
    pub fn face_index(&self, triple: [usize; 3]) -> Option<usize> {
        self.lookup.get(&sorted3(triple)).copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.embedding.degree(v)
    }

    /// Neighbours of `v` in clockwise order.
    pub fn rotation(&self, v: usize) -> &[usize] {
        self.embedding.rotation(v)
    }

    /// Faces incident to `v`, in rotation order.
    pub fn faces_at(&self, v: usize) -> Vec<usize> {
        (0..self.degree(v))
            .map(|p| self.embedding.face_of(self.embedding.dart(v, p)))
            .collect()
    }

    /// The two faces on either side of edge `edge`.
    pub fn edge_faces(&self, edge: usize) -> (usize, usize) {
        let (u, v) = self.embedding.edges()[edge];
        let d = self.embedding.find_dart(u, v).expect("edge has a dart");
        (
            self.embedding.face_of(d),
            self.embedding.face_of(self.embedding.mate(d)),
        )
    }

    /// For each side of face `f` (in walk order): the face across it and the
    /// edge id.
    pub fn face_neighbours(&self, f: usize) -> [(usize, usize); 3] {
        let emb = &self.embedding;
        let darts = &emb.faces()[f].darts;
        [0, 1, 2].map(|i| (emb.face_of(emb.mate(darts[i])), emb.edge_of(darts[i])))
    }

    pub fn is_eulerian(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.degree(v).is_multiple_of(2))
    }

    /// Face-adjacency multigraph: one node per face, one edge per primal edge.
    pub fn dual(&self) -> DualMultigraph {
        let edges = (0..self.edge_count())
            .map(|e| DualEdge {
                faces: self.edge_faces(e),
                primal_edge: e,
            })
            .collect();
        DualMultigraph::new(self.face_count(), edges)
    }

    /// The dual as an embedded cubic graph: node `i` is face `i`, and its
    /// rotation lists the faces across each side of face `i` in walk order.
    pub fn dual_embedding(&self) -> PlanarEmbedding {
        let emb = &self.embedding;
        let rotations = emb
            .faces()
            .iter()
            .map(|f| f.darts.iter().map(|&d| emb.face_of(emb.mate(d))).collect())
            .collect();
        PlanarEmbedding::from_rotations(rotations).expect("dual of a triangulation is planar")
    }

    /// All 3-cycles whose vertex deletion disconnects the graph, as sorted
    /// triples in lexicographic order.
    pub fn separating_triangles(&self) -> Vec<[usize; 3]> {
        let g = &self.graph;
        let n = g.vertex_count();
        let mut out = Vec::new();
        for (u, v) in g.edges() {
            for &w in g.neighbors(v) {
                if w <= v || !g.has_edge(u, w) {
                    continue;
                }
                let mut mask = vec![true; n];
                mask[u] = false;
                mask[v] = false;
                mask[w] = false;
                if g.components_within(&mask).len() > 1 {
                    out.push([u, v, w]);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn mirrored(&self) -> Triangulation {
        Triangulation::new(self.embedding.mirrored()).expect("mirror of a triangulation")
    }

    /// Inserts a new vertex (id `n`) inside face `face`.
    pub fn stack_vertex(&self, face: usize) -> Triangulation {
        let n = self.vertex_count();
        let [a, b, c] = self.faces[face];
        let mut faces: Vec<[usize; 3]> = self
            .faces
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != face)
            .map(|(_, &f)| f)
            .collect();
        faces.extend([[a, b, n], [b, c, n], [c, a, n]]);
        Triangulation::from_faces(n + 1, &faces).expect("stacking keeps a triangulation")
    }

    /// Replaces edge `uv` by the other diagonal of its two faces, if the
    /// result is still a simple triangulation.
    pub fn flip_edge(&self, u: usize, v: usize) -> Option<Triangulation> {
        let emb = &self.embedding;
        let d = emb.find_dart(u, v)?;
        let f1 = emb.face_of(d);
        let f2 = emb.face_of(emb.mate(d));
        let x = emb.head(emb.next_in_face(d));
        let y = emb.head(emb.next_in_face(emb.mate(d)));
        if x == y || self.graph.has_edge(x, y) || self.degree(u) <= 3 || self.degree(v) <= 3 {
            return None;
        }
        let mut faces: Vec<[usize; 3]> = self
            .faces
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != f1 && i != f2)
            .map(|(_, &f)| f)
            .collect();
        faces.extend([[u, y, x], [y, v, x]]);
        Triangulation::from_faces(self.vertex_count(), &faces).ok()
    }
}

/// Result of gluing one triangulation into a face of another.
#[derive(Debug, Clone)]
pub struct Pasting {
    pub tri: Triangulation,
    /// Guest vertex id to id in the pasted triangulation.
    pub guest_map: Vec<usize>,
    /// Whether the guest had to be reflected to match orientations.
    pub mirrored: bool,
}

/// Glues `guest` into `host` by deleting `host_face` and `guest_face` and
/// identifying their boundaries according to `matching` (pairs of guest
/// vertex, host vertex). Guest vertices off the glued face get fresh ids in
/// ascending order after the host's. The guest is reflected first if its face
/// boundary would otherwise run in the same direction as the host's.
pub fn paste(
    host: &Triangulation,
    host_face: usize,
    guest: &Triangulation,
    guest_face: usize,
    matching: [(usize, usize); 3],
) -> Result<Pasting, EmbeddingError> {
    let hf = host.face(host_face);
    let gf = guest.face(guest_face);
    let mut gs: Vec<usize> = matching.iter().map(|m| m.0).collect();
    let mut hs: Vec<usize> = matching.iter().map(|m| m.1).collect();
    gs.sort_unstable();
    hs.sort_unstable();
    if gs != sorted3(gf).to_vec() || hs != sorted3(hf).to_vec() {
        return Err(EmbeddingError::InconsistentFaces { vertex: hf[0] });
    }

    let n = host.vertex_count();
    let mut guest_map = vec![usize::MAX; guest.vertex_count()];
    for &(g, h) in &matching {
        guest_map[g] = h;
    }
    let mut next = n;
    for slot in guest_map.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }

    // The glued boundary must be walked in opposite directions by the two
    // deleted faces.
    let mapped = gf.map(|v| guest_map[v]);
    let same_direction = (0..3).any(|r| (0..3).all(|i| mapped[(i + r) % 3] == hf[i]));
    let mut faces: Vec<[usize; 3]> = host
        .faces()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != host_face)
        .map(|(_, &f)| f)
        .collect();
    for (i, f) in guest.faces().iter().enumerate() {
        if i == guest_face {
            continue;
        }
        let m = f.map(|v| guest_map[v]);
        faces.push(if same_direction { [m[2], m[1], m[0]] } else { m });
    }
    let tri = Triangulation::from_faces(next, &faces)?;
    Ok(Pasting {
        tri,
        guest_map,
        mirrored: same_direction,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualEdge {
    /// The two faces joined; equal for a loop.
    pub faces: (usize, usize),
    /// Index of the primal edge this dual edge crosses.
    pub primal_edge: usize,
}

/// Multigraph whose nodes are faces; loops and parallel edges allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualMultigraph {
    node_count: usize,
    edges: Vec<DualEdge>,
    incidence: Vec<Vec<usize>>,
}

impl DualMultigraph {
    pub fn new(node_count: usize, edges: Vec<DualEdge>) -> Self {
        let mut incidence = vec![Vec::new(); node_count];
        for (i, e) in edges.iter().enumerate() {
            incidence[e.faces.0].push(i);
            if e.faces.1 != e.faces.0 {
                incidence[e.faces.1].push(i);
            }
        }
        DualMultigraph {
            node_count,
            edges,
            incidence,
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[DualEdge] {
        &self.edges
    }

    /// Indices of edges incident to `node`, ascending; a loop appears once.
    pub fn incident(&self, node: usize) -> &[usize] {
        &self.incidence[node]
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, node: usize) -> usize {
        self.incidence[node]
            .iter()
            .map(|&e| if self.edges[e].faces.0 == self.edges[e].faces.1 { 2 } else { 1 })
            .sum()
    }

    pub fn other_end(&self, edge: usize, node: usize) -> usize {
        let (a, b) = self.edges[edge].faces;
        if a == node {
            b
        } else {
            a
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.node_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.node_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &e in &self.incidence[v] {
                let u = self.other_end(e, v);
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Underlying simple graph, or `None` if there are loops or parallels.
    pub fn to_simple_graph(&self) -> Option<Graph> {
        let mut g = Graph::new(self.node_count);
        for e in &self.edges {
            let (a, b) = e.faces;
            if a == b || g.has_edge(a, b) {
                return None;
            }
            g.add_edge(a, b);
        }
        Some(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn from_faces_reproduces_faces() {
        let tet = corpus::tetrahedron();
        let rebuilt = Triangulation::from_faces(4, tet.faces()).unwrap();
        assert_eq!(rebuilt.face_count(), 4);
        for f in tet.faces() {
            assert!(rebuilt.face_index(*f).is_some());
        }
    }

    #[test]
    fn inconsistent_orientation_is_rejected() {
        let tet = corpus::tetrahedron();
        let mut faces = tet.faces().to_vec();
        faces[0] = [faces[0][2], faces[0][1], faces[0][0]];
        assert!(Triangulation::from_faces(4, &faces).is_err());
    }

    #[test]
    fn non_triangular_faces_rejected() {
        // A 4-cycle.
        let rots = vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]];
        assert!(matches!(
            Triangulation::from_rotations(rots),
            Err(EmbeddingError::NonTriangularFace { .. })
        ));
    }

    #[test]
    fn stacking_and_flipping() {
        let oct = corpus::octahedron();
        let s = oct.stack_vertex(0);
        assert_eq!(s.vertex_count(), 7);
        assert_eq!(s.face_count(), 10);
        assert!(!s.is_eulerian());
        // An octahedron edge can be flipped only if the far diagonal is absent.
        let (u, v) = oct.graph().edges()[0];
        let flipped = oct.flip_edge(u, v).unwrap();
        assert_eq!(flipped.edge_count(), 12);
        assert!(!flipped.graph().has_edge(u, v));
        // Every tetrahedron flip would create a parallel edge.
        assert!(corpus::tetrahedron().flip_edge(0, 1).is_none());
    }

    #[test]
    fn pasting_octahedra_keeps_eulerian() {
        let oct = corpus::octahedron();
        let [a, b, c] = oct.face(3);
        let g = oct.face(0);
        let p = paste(&oct, 3, &oct, 0, [(g[0], a), (g[1], b), (g[2], c)]).unwrap();
        assert_eq!(p.tri.vertex_count(), 9);
        assert!(p.tri.is_eulerian());
        assert_eq!(p.tri.separating_triangles(), vec![sorted3([a, b, c])]);
    }

    #[test]
    fn dual_degrees() {
        let oct = corpus::octahedron();
        let d = oct.dual();
        assert_eq!(d.node_count(), 8);
        assert!((0..8).all(|i| d.degree(i) == 3));
        assert!(d.is_connected());
        assert!(d.to_simple_graph().unwrap().bipartition().is_some());
        let emb = oct.dual_embedding();
        assert_eq!(emb.face_count(), 6);
    }
}
