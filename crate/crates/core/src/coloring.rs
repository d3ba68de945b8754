//! Vertex colourings and the proper 3-colouring of Eulerian triangulations.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;
use crate::triangulation::Triangulation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    Blue,
    Red,
    Green,
}

impl Colour {
    pub const ALL: [Colour; 3] = [Colour::Blue, Colour::Red, Colour::Green];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Colour with index `i mod 3`.
    pub fn from_index(i: usize) -> Colour {
        Colour::ALL[i % 3]
    }

    pub fn name(self) -> &'static str {
        match self {
            Colour::Blue => "blue",
            Colour::Red => "red",
            Colour::Green => "green",
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown colour {0:?}")]
pub struct UnknownColour(pub String);

impl FromStr for Colour {
    type Err = UnknownColour;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "blue" => Ok(Colour::Blue),
            "red" => Ok(Colour::Red),
            "green" => Ok(Colour::Green),
            _ => Err(UnknownColour(s.to_string())),
        }
    }
}

/// A total assignment of colours to vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexColoring {
    colours: Vec<Colour>,
}

impl VertexColoring {
    pub fn new(colours: Vec<Colour>) -> Self {
        VertexColoring { colours }
    }

    /// Blue on `blue` vertices, red elsewhere.
    pub fn from_blue_set(n: usize, blue: &[usize]) -> Self {
        let mut colours = vec![Colour::Red; n];
        for &v in blue {
            colours[v] = Colour::Blue;
        }
        VertexColoring { colours }
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn colour(&self, v: usize) -> Colour {
        self.colours[v]
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    /// Vertices of colour `c`, ascending.
    pub fn class(&self, c: Colour) -> Vec<usize> {
        (0..self.colours.len())
            .filter(|&v| self.colours[v] == c)
            .collect()
    }

    pub fn mask(&self, c: Colour) -> Vec<bool> {
        self.colours.iter().map(|&x| x == c).collect()
    }

    /// True if only colours from `palette` occur.
    pub fn uses_only(&self, palette: &[Colour]) -> bool {
        self.colours.iter().all(|c| palette.contains(c))
    }

    /// The first monochromatic edge, if any.
    pub fn monochromatic_edge(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges()
            .into_iter()
            .find(|&(u, v)| self.colours[u] == self.colours[v])
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colours.len() == g.vertex_count() && self.monochromatic_edge(g).is_none()
    }

    /// True if the two colourings induce the same partition of the vertices.
    pub fn same_up_to_permutation(&self, other: &VertexColoring) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut forward = [None; 3];
        let mut backward = [None; 3];
        for (a, b) in self.colours.iter().zip(&other.colours) {
            let (i, j) = (a.index(), b.index());
            if *forward[i].get_or_insert(j) != j || *backward[j].get_or_insert(i) != i {
                return false;
            }
        }
        true
    }

    pub fn recoloured(&self, f: impl Fn(Colour) -> Colour) -> VertexColoring {
        VertexColoring {
            colours: self.colours.iter().map(|&c| f(c)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("colour propagation conflict at vertex {vertex} of face {face}")]
    Conflict { face: usize, vertex: usize },
}

/// The proper 3-colouring of a triangulation, if it has one (exactly when it
/// is Eulerian).
///
/// Colours are forced face by face: seeding one triangle fixes the third
/// vertex of every neighbouring triangle. The result is canonical: vertex 0 is
/// blue and its lowest-index neighbour is red.
pub fn proper_3_coloring(tri: &Triangulation) -> Result<VertexColoring, ColoringError> {
    let emb = tri.embedding();
    let n = tri.vertex_count();
    let mut col: Vec<Option<usize>> = vec![None; n];
    let [a, b, c] = tri.face(0);
    col[a] = Some(0);
    col[b] = Some(1);
    col[c] = Some(2);

    let mut seen = vec![false; tri.face_count()];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(f) = queue.pop_front() {
        for &d in &emb.faces()[f].darts {
            let back = emb.mate(d);
            let g = emb.face_of(back);
            let z = emb.head(emb.next_in_face(back));
            let (x, y) = (emb.tail(d), emb.head(d));
            let forced = 3 - col[x].unwrap() - col[y].unwrap();
            match col[z] {
                None => col[z] = Some(forced),
                Some(k) if k != forced => return Err(ColoringError::Conflict { face: g, vertex: z }),
                _ => {}
            }
            if !seen[g] {
                seen[g] = true;
                queue.push_back(g);
            }
        }
    }

    let raw: Vec<usize> = col.into_iter().map(|c| c.expect("connected")).collect();
    let first = raw[0];
    let second = raw[*tri.graph().neighbors(0).first().expect("vertex 0 has neighbours")];
    let mut perm = [0usize; 3];
    perm[first] = 0;
    perm[second] = 1;
    perm[3 - first - second] = 2;
    Ok(VertexColoring::new(
        raw.into_iter().map(|k| Colour::from_index(perm[k])).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn octahedron_classes_are_antipodal_pairs() {
        let col = proper_3_coloring(&corpus::octahedron()).unwrap();
        assert_eq!(col.class(Colour::Blue), vec![0, 5]);
        assert_eq!(col.class(Colour::Red), vec![1, 3]);
        assert_eq!(col.class(Colour::Green), vec![2, 4]);
    }

    #[test]
    fn tetrahedron_conflicts() {
        assert!(matches!(
            proper_3_coloring(&corpus::tetrahedron()),
            Err(ColoringError::Conflict { .. })
        ));
    }

    #[test]
    fn odd_bipyramids_conflict_even_ones_colour() {
        assert!(proper_3_coloring(&corpus::bipyramid(5)).is_err());
        let t = corpus::bipyramid(6);
        assert!(proper_3_coloring(&t).unwrap().is_proper(t.graph()));
    }

    #[test]
    fn permutation_equivalence() {
        let a = VertexColoring::new(vec![Colour::Blue, Colour::Red, Colour::Red]);
        let b = VertexColoring::new(vec![Colour::Green, Colour::Blue, Colour::Blue]);
        let c = VertexColoring::new(vec![Colour::Green, Colour::Blue, Colour::Green]);
        assert!(a.same_up_to_permutation(&b));
        assert!(!a.same_up_to_permutation(&c));
        assert_eq!("green".parse::<Colour>().unwrap(), Colour::Green);
        assert!("purple".parse::<Colour>().is_err());
    }
}
