//! Combinatorial planar embeddings given by rotation systems.
//!
//! A rotation system lists, for every vertex, its neighbours in clockwise
//! order. Each undirected edge contributes two darts (directed occurrences),
//! one in the rotation of each endpoint. Faces are traced with the rule
//! "reverse the dart, then step to the successor in the rotation at its head".

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{edge_key, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("vertex {vertex}: neighbour {neighbor} is out of range (n = {n})")]
    NeighborOutOfRange {
        vertex: usize,
        neighbor: usize,
        n: usize,
    },
    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("parallel edge {vertex}-{neighbor}")]
    ParallelEdge { vertex: usize, neighbor: usize },
    #[error("dart ({vertex}, {position}) towards {neighbor} has no mate")]
    MissingMate {
        vertex: usize,
        position: usize,
        neighbor: usize,
    },
    #[error("component of vertex {vertex} has Euler characteristic {characteristic}, expected 2")]
    NotPlanar { vertex: usize, characteristic: i64 },
    #[error("embedding has {components} components, expected a connected one")]
    Disconnected { components: usize },
    #[error("a triangulation needs at least 4 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("face {face} has length {length}, expected 3")]
    NonTriangularFace { face: usize, length: usize },
    #[error("faces around vertex {vertex} do not close up into one consistently oriented disc")]
    InconsistentFaces { vertex: usize },
    #[error("vertex {vertex} is not covered by any face")]
    UncoveredVertex { vertex: usize },
}

/// Flat dart index; dart `(v, i)` is the `i`-th entry of `v`'s rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart(pub usize);

/// A traced face. Isolated vertices get a degenerate face with no darts
/// whose only vertex is the isolated one, so that every component satisfies
/// `n - m + f = 2` on its own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
    pub vertices: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarEmbedding {
    rotations: Vec<Vec<usize>>,
    offsets: Vec<usize>,
    tails: Vec<usize>,
    mates: Vec<usize>,
    edge_of: Vec<usize>,
    edges: Vec<(usize, usize)>,
    faces: Vec<Face>,
    face_of: Vec<usize>,
}

impl PlanarEmbedding {
    /// Validates a rotation system of a simple graph and traces its faces.
    ///
    /// Every component must have Euler characteristic 2 (genus 0).
    pub fn from_rotations(rotations: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        let n = rotations.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut tails = Vec::new();
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        offsets.push(0);
        for (v, rot) in rotations.iter().enumerate() {
            for &u in rot {
                if u >= n {
                    return Err(EmbeddingError::NeighborOutOfRange {
                        vertex: v,
                        neighbor: u,
                        n,
                    });
                }
                if u == v {
                    return Err(EmbeddingError::Loop { vertex: v });
                }
                if index.insert((v, u), tails.len()).is_some() {
                    return Err(EmbeddingError::ParallelEdge {
                        vertex: v,
                        neighbor: u,
                    });
                }
                tails.push(v);
            }
            offsets.push(tails.len());
        }

        let mut mates = vec![0; tails.len()];
        let mut edge_of = vec![usize::MAX; tails.len()];
        let mut edges = Vec::new();
        for (v, rot) in rotations.iter().enumerate() {
            for (pos, &u) in rot.iter().enumerate() {
                let d = offsets[v] + pos;
                let Some(&m) = index.get(&(u, v)) else {
                    return Err(EmbeddingError::MissingMate {
                        vertex: v,
                        position: pos,
                        neighbor: u,
                    });
                };
                mates[d] = m;
                if edge_of[d] == usize::MAX {
                    edge_of[d] = edges.len();
                    edge_of[m] = edges.len();
                    edges.push(edge_key(v, u));
                }
            }
        }

        let mut emb = PlanarEmbedding {
            rotations,
            offsets,
            tails,
            mates,
            edge_of,
            edges,
            faces: Vec::new(),
            face_of: Vec::new(),
        };
        emb.trace();
        emb.check_euler()?;
        Ok(emb)
    }

    fn trace(&mut self) {
        let mut face_of = vec![usize::MAX; self.tails.len()];
        let mut faces = Vec::new();
        for v in 0..self.rotations.len() {
            if self.rotations[v].is_empty() {
                faces.push(Face {
                    darts: Vec::new(),
                    vertices: vec![v],
                });
                continue;
            }
            for d in self.offsets[v]..self.offsets[v + 1] {
                if face_of[d] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut darts = Vec::new();
                let mut vertices = Vec::new();
                let mut cur = d;
                loop {
                    face_of[cur] = id;
                    darts.push(Dart(cur));
                    vertices.push(self.tails[cur]);
                    cur = self.next_in_face(Dart(cur)).0;
                    if cur == d {
                        break;
                    }
                }
                faces.push(Face { darts, vertices });
            }
        }
        self.faces = faces;
        self.face_of = face_of;
    }

    fn check_euler(&self) -> Result<(), EmbeddingError> {
        let graph = self.to_graph();
        let comps = graph.components();
        let mut label = vec![0; self.rotations.len()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                label[v] = i;
            }
        }
        let mut chi = vec![0i64; comps.len()];
        for (i, c) in comps.iter().enumerate() {
            chi[i] += c.len() as i64;
        }
        for &(u, _) in &self.edges {
            chi[label[u]] -= 1;
        }
        for f in &self.faces {
            chi[label[f.vertices[0]]] += 1;
        }
        for (i, &x) in chi.iter().enumerate() {
            if x != 2 {
                return Err(EmbeddingError::NotPlanar {
                    vertex: comps[i][0],
                    characteristic: x,
                });
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn dart_count(&self) -> usize {
        self.tails.len()
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    /// Neighbours of `v` in clockwise order.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn dart(&self, v: usize, pos: usize) -> Dart {
        debug_assert!(pos < self.rotations[v].len());
        Dart(self.offsets[v] + pos)
    }

    /// `(vertex, position)` of a dart.
    pub fn dart_position(&self, d: Dart) -> (usize, usize) {
        let v = self.tails[d.0];
        (v, d.0 - self.offsets[v])
    }

    /// Dart from `u` to `v`, if the edge exists.
    pub fn find_dart(&self, u: usize, v: usize) -> Option<Dart> {
        self.rotations
            .get(u)?
            .iter()
            .position(|&w| w == v)
            .map(|p| Dart(self.offsets[u] + p))
    }

    pub fn tail(&self, d: Dart) -> usize {
        self.tails[d.0]
    }

    pub fn head(&self, d: Dart) -> usize {
        self.tails[self.mates[d.0]]
    }

    pub fn mate(&self, d: Dart) -> Dart {
        Dart(self.mates[d.0])
    }

    /// Clockwise successor of `d` around its tail.
    pub fn succ(&self, d: Dart) -> Dart {
        let (v, pos) = self.dart_position(d);
        Dart(self.offsets[v] + (pos + 1) % self.rotations[v].len())
    }

    /// Anticlockwise predecessor of `d` around its tail.
    pub fn pred(&self, d: Dart) -> Dart {
        let (v, pos) = self.dart_position(d);
        let k = self.rotations[v].len();
        Dart(self.offsets[v] + (pos + k - 1) % k)
    }

    pub fn next_in_face(&self, d: Dart) -> Dart {
        self.succ(self.mate(d))
    }

    pub fn edge_of(&self, d: Dart) -> usize {
        self.edge_of[d.0]
    }

    /// Edges as `(u, v)` with `u < v`, indexed in order of first dart.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.find_dart(u, v).map(|d| self.edge_of(d))
    }

    /// Faces in tracing order: vertices ascending, darts in rotation order.
    /// The face traced from dart `(0, 0)` is face 0.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Face traced through dart `d` (the face on its left in tracing order).
    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d.0]
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.rotations.len(), &self.edges)
    }

    pub fn component_count(&self) -> usize {
        self.to_graph().components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// The mirror image: every rotation reversed.
    pub fn mirrored(&self) -> PlanarEmbedding {
        let rots = self
            .rotations
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        PlanarEmbedding::from_rotations(rots).expect("mirror of a valid embedding is valid")
    }

    /// Subgraph induced by `keep` with the inherited embedding: each kept
    /// vertex's rotation is its original cyclic order restricted to kept
    /// neighbours. Vertices are relabelled densely; the second value maps new
    /// ids to old ones.
    pub fn induced(&self, keep: &[bool]) -> (PlanarEmbedding, Vec<usize>) {
        let old: Vec<usize> = (0..self.rotations.len()).filter(|&v| keep[v]).collect();
        let mut new_id = vec![usize::MAX; self.rotations.len()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let rots = old
            .iter()
            .map(|&v| {
                self.rotations[v]
                    .iter()
                    .filter(|&&u| keep[u])
                    .map(|&u| new_id[u])
                    .collect()
            })
            .collect();
        let emb = PlanarEmbedding::from_rotations(rots)
            .expect("restriction of a planar rotation system is planar");
        (emb, old)
    }
}

/// Faces of an embedding, as traced at construction.
pub fn trace_faces(embedding: &PlanarEmbedding) -> &[Face] {
    embedding.faces()
}

/// Subgraph of `embedding` induced by the vertex set `keep` (ids), with the
/// inherited embedding. See [`PlanarEmbedding::induced`].
pub fn induced_embedded_subgraph(
    embedding: &PlanarEmbedding,
    keep: &[usize],
) -> (PlanarEmbedding, Vec<usize>) {
    let mut mask = vec![false; embedding.vertex_count()];
    for &v in keep {
        mask[v] = true;
    }
    embedding.induced(&mask)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_has_one_face_of_length_two() {
        let emb = PlanarEmbedding::from_rotations(vec![vec![1], vec![0]]).unwrap();
        assert_eq!(emb.face_count(), 1);
        assert_eq!(emb.faces()[0].len(), 2);
    }

    #[test]
    fn missing_mate_names_the_dart() {
        let err = PlanarEmbedding::from_rotations(vec![vec![1, 2], vec![0], vec![]]).unwrap_err();
        assert_eq!(
            err,
            EmbeddingError::MissingMate {
                vertex: 0,
                position: 1,
                neighbor: 2
            }
        );
    }

    #[test]
    fn loops_and_parallels_rejected() {
        assert!(matches!(
            PlanarEmbedding::from_rotations(vec![vec![0]]),
            Err(EmbeddingError::Loop { vertex: 0 })
        ));
        assert!(matches!(
            PlanarEmbedding::from_rotations(vec![vec![1, 1], vec![0, 0]]),
            Err(EmbeddingError::ParallelEdge { .. })
        ));
    }

    #[test]
    fn k4_with_bad_rotation_is_not_planar() {
        // Same cyclic order everywhere gives a toroidal embedding of K4.
        let rots = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        assert!(matches!(
            PlanarEmbedding::from_rotations(rots),
            Err(EmbeddingError::NotPlanar { .. })
        ));
    }

    #[test]
    fn isolated_vertices_get_degenerate_faces() {
        let emb = PlanarEmbedding::from_rotations(vec![vec![], vec![2], vec![1]]).unwrap();
        assert_eq!(emb.face_count(), 2);
        assert!(emb.faces()[0].is_empty());
        assert_eq!(emb.faces()[0].vertices, vec![0]);
        assert_eq!(emb.component_count(), 2);
    }
}
