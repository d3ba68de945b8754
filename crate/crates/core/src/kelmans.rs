//! Four-poles, Hamiltonicity with a prescribed edge pair, cyclic edge
//! connectivity, and contraction of the sides of a cyclic 3-edge cut.

use thiserror::Error;

use crate::embedding::{EmbeddingError, PlanarEmbedding};
use crate::graph::{edge_key, Graph};
use crate::oracle::{self, OracleError};
use crate::search::{Meter, Search, SearchBudget};
use crate::triangulation::Triangulation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KelmansError {
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("no edge {0}-{1}")]
    UnknownEdge(usize, usize),
    #[error("the two edges must differ")]
    SameEdge,
    #[error("edges {0:?} and {1:?} do not share a face")]
    NotCofacial((usize, usize), (usize, usize)),
    #[error("vertex {0} is not a terminal")]
    NotTerminal(usize),
    #[error("terminals {0} and {1} have different colours")]
    DifferentColours(usize, usize),
    #[error("not a cyclic 3-edge cut: {0}")]
    NotCyclicCut(String),
    #[error("the colour-swap terminal gadget is not available")]
    GadgetUnavailable,
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

fn require_edge(g: &Graph, e: (usize, usize)) -> Result<(usize, usize), KelmansError> {
    if g.has_edge(e.0, e.1) {
        Ok(edge_key(e.0, e.1))
    } else {
        Err(KelmansError::UnknownEdge(e.0, e.1))
    }
}

/// True if some face walk of `emb` uses both edges.
pub fn are_cofacial(emb: &PlanarEmbedding, x: (usize, usize), y: (usize, usize)) -> bool {
    let (Some(ex), Some(ey)) = (emb.edge_id(x.0, x.1), emb.edge_id(y.0, y.1)) else {
        return false;
    };
    emb.faces().iter().any(|f| {
        f.darts.iter().any(|&d| emb.edge_of(d) == ex) && f.darts.iter().any(|&d| emb.edge_of(d) == ey)
    })
}

fn check_pair(
    emb: &PlanarEmbedding,
    x: (usize, usize),
    y: (usize, usize),
) -> Result<((usize, usize), (usize, usize)), KelmansError> {
    let g = emb.to_graph();
    let (x, y) = (require_edge(&g, x)?, require_edge(&g, y)?);
    if x == y {
        return Err(KelmansError::SameEdge);
    }
    if !are_cofacial(emb, x, y) {
        return Err(KelmansError::NotCofacial(x, y));
    }
    Ok((x, y))
}

/// A cubic plane graph with two edges cut, each cut end capped by a new
/// degree-1 terminal.
#[derive(Debug, Clone)]
pub struct FourPole {
    pub embedding: PlanarEmbedding,
    /// `[x1, x2, y1, y2]`: x1 hangs off the smaller end of x, x2 off the
    /// larger, and likewise for y.
    pub terminals: [usize; 4],
    /// Bipartition side of every vertex; terminals take the side of the
    /// vertex they replace.
    pub side: Vec<bool>,
    pub x: (usize, usize),
    pub y: (usize, usize),
}

impl FourPole {
    pub fn vertex_count(&self) -> usize {
        self.embedding.vertex_count()
    }

    pub fn graph(&self) -> Graph {
        self.embedding.to_graph()
    }

    /// Exactly four degree-1 vertices, all others of degree 3, even order.
    pub fn check_invariants(&self) -> bool {
        let g = self.graph();
        let ones: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) == 1).collect();
        let mut t = self.terminals.to_vec();
        t.sort_unstable();
        ones == t
            && (0..g.vertex_count()).all(|v| g.degree(v) == 1 || g.degree(v) == 3)
            && g.vertex_count().is_multiple_of(2)
    }
}

/// Cuts the co-facial edges `x` and `y` of a cubic plane graph and caps
/// each of the four ends with a new terminal (ids n..n+4).
pub fn make_four_pole(
    emb: &PlanarEmbedding,
    x: (usize, usize),
    y: (usize, usize),
) -> Result<FourPole, KelmansError> {
    let g = emb.to_graph();
    if !g.is_cubic() {
        return Err(KelmansError::NotCubic);
    }
    let side = g.bipartition().ok_or(KelmansError::NotBipartite)?;
    let (x, y) = check_pair(emb, x, y)?;
    let n = emb.vertex_count();
    let mut rotations: Vec<Vec<usize>> = emb.rotations().to_vec();
    let mut new_side = side.clone();
    let ends = [(x.0, x.1), (x.1, x.0), (y.0, y.1), (y.1, y.0)];
    for (i, &(keep, gone)) in ends.iter().enumerate() {
        let t = n + i;
        let slot = rotations[keep].iter().position(|&u| u == gone).unwrap();
        rotations[keep][slot] = t;
        rotations.push(vec![keep]);
        new_side.push(side[gone]);
    }
    let embedding = PlanarEmbedding::from_rotations(rotations)?;
    Ok(FourPole {
        embedding,
        terminals: [n, n + 1, n + 2, n + 3],
        side: new_side,
        x,
        y,
    })
}

/// A Hamiltonian cycle through `x` avoiding `y`.
pub fn is_xplus_yminus_hamiltonian(
    emb: &PlanarEmbedding,
    x: (usize, usize),
    y: (usize, usize),
    budget: SearchBudget,
) -> Result<Search<Vec<usize>>, KelmansError> {
    let (x, y) = check_pair(emb, x, y)?;
    Ok(oracle::find_hamiltonian_cycle(&emb.to_graph(), &[x], &[y], budget)?)
}

/// A Hamiltonian cycle through both `x` and `y`.
pub fn is_xplus_yplus_hamiltonian(
    emb: &PlanarEmbedding,
    x: (usize, usize),
    y: (usize, usize),
    budget: SearchBudget,
) -> Result<Search<Vec<usize>>, KelmansError> {
    let (x, y) = check_pair(emb, x, y)?;
    Ok(oracle::find_hamiltonian_cycle(&emb.to_graph(), &[x, y], &[], budget)?)
}

/// Edges sharing an endpoint with `y`, other than `x` and `y`.
pub fn edges_adjacent_to(g: &Graph, x: (usize, usize), y: (usize, usize)) -> Vec<(usize, usize)> {
    let (x, y) = (edge_key(x.0, x.1), edge_key(y.0, y.1));
    let mut out: Vec<(usize, usize)> = [y.0, y.1]
        .iter()
        .flat_map(|&v| g.neighbors(v).iter().map(move |&u| edge_key(u, v)))
        .filter(|&e| e != x && e != y)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Outcome of the covering-path check for a pair of terminals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoveringPath {
    /// The four-pole minus the two terminals has no Hamiltonian path.
    Holds,
    /// A Hamiltonian path of the four-pole minus the two terminals.
    Violated(Vec<usize>),
    Inconclusive { nodes: u64 },
}

/// Checks that deleting two same-coloured terminals leaves a graph with no
/// Hamiltonian path.
pub fn covering_path_check(
    fp: &FourPole,
    u: usize,
    v: usize,
    budget: SearchBudget,
) -> Result<CoveringPath, KelmansError> {
    for t in [u, v] {
        if !fp.terminals.contains(&t) {
            return Err(KelmansError::NotTerminal(t));
        }
    }
    if fp.side[u] != fp.side[v] {
        return Err(KelmansError::DifferentColours(u, v));
    }
    let g = fp.graph();
    let keep: Vec<bool> = (0..g.vertex_count()).map(|w| w != u && w != v).collect();
    let (rest, old) = g.induced(&keep);
    Ok(match oracle::find_hamiltonian_path(&rest, budget) {
        Search::Found(p) => CoveringPath::Violated(p.into_iter().map(|w| old[w]).collect()),
        Search::Exhausted => CoveringPath::Holds,
        Search::Inconclusive { nodes } => CoveringPath::Inconclusive { nodes },
    })
}

/// A set of edges whose removal leaves at least two components containing
/// a cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutCertificate {
    pub edges: Vec<(usize, usize)>,
    /// Components after removing the edges, ordered by smallest member.
    pub components: Vec<Vec<usize>>,
    /// Whether each component contains a cycle.
    pub cyclic: Vec<bool>,
}

impl CutCertificate {
    /// Checks the certificate against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> bool {
        if !self.edges.iter().all(|&(u, v)| g.has_edge(u, v)) {
            return false;
        }
        match cut_components(g, &self.edges) {
            Some((comps, cyc)) => comps == self.components && cyc == self.cyclic,
            None => false,
        }
    }
}

fn cut_components(g: &Graph, cut: &[(usize, usize)]) -> Option<(Vec<Vec<usize>>, Vec<bool>)> {
    let rest = g.without_edges(cut);
    let comps = rest.components();
    let cyclic: Vec<bool> = comps
        .iter()
        .map(|c| {
            let mut mask = vec![false; g.vertex_count()];
            for &v in c {
                mask[v] = true;
            }
            rest.induced_edge_count(&mask) >= c.len()
        })
        .collect();
    (cyclic.iter().filter(|&&c| c).count() >= 2).then_some((comps, cyclic))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicConnectivity {
    pub value: usize,
    /// A smallest cyclic cut, or `None` if the graph has none (then the
    /// value is the cycle rank m - n + 1).
    pub cut: Option<CutCertificate>,
}

/// Smallest cyclic edge cut by trying every edge subset of size
/// 1, 2, ... below the cycle rank.
pub fn cyclic_edge_connectivity(g: &Graph, budget: SearchBudget) -> Search<CyclicConnectivity> {
    let edges = g.edges();
    let m = edges.len();
    let rank = (m + 1).saturating_sub(g.vertex_count());
    let mut meter = Meter::new(budget);
    for size in 1..rank {
        if size > m {
            break;
        }
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            if !meter.tick() {
                return Search::Inconclusive { nodes: meter.nodes };
            }
            let cut: Vec<(usize, usize)> = idx.iter().map(|&i| edges[i]).collect();
            if let Some((components, cyclic)) = cut_components(g, &cut) {
                return Search::Found(CyclicConnectivity {
                    value: size,
                    cut: Some(CutCertificate {
                        edges: cut,
                        components,
                        cyclic,
                    }),
                });
            }
            let Some(i) = (0..size).rev().find(|&i| idx[i] < m - size + i) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Search::Found(CyclicConnectivity {
        value: rank,
        cut: None,
    })
}

/// One side of a cyclic 3-cut with the other side contracted to a vertex.
#[derive(Debug, Clone)]
pub struct ContractedSide {
    pub embedding: PlanarEmbedding,
    /// Original id of each vertex; the contracted vertex (last) maps to
    /// `None`.
    pub original: Vec<Option<usize>>,
}

impl ContractedSide {
    pub fn contracted_vertex(&self) -> usize {
        self.original.len() - 1
    }

    pub fn graph(&self) -> Graph {
        self.embedding.to_graph()
    }
}

/// Contracts each side of a cyclic 3-edge cut of a cubic bipartite plane
/// graph. Returns the graph keeping the side of the smallest vertex first.
pub fn contract_cut_sides(
    emb: &PlanarEmbedding,
    cut: &[(usize, usize)],
) -> Result<(ContractedSide, ContractedSide), KelmansError> {
    let g = emb.to_graph();
    if !g.is_cubic() {
        return Err(KelmansError::NotCubic);
    }
    if cut.len() != 3 {
        return Err(KelmansError::NotCyclicCut(format!("{} edges", cut.len())));
    }
    let cut: Vec<(usize, usize)> = cut
        .iter()
        .map(|&e| require_edge(&g, e))
        .collect::<Result<_, _>>()?;
    let Some((comps, cyclic)) = cut_components(&g, &cut) else {
        return Err(KelmansError::NotCyclicCut(
            "fewer than two sides contain a cycle".into(),
        ));
    };
    if comps.len() != 2 || !cyclic.iter().all(|&c| c) {
        return Err(KelmansError::NotCyclicCut(format!(
            "{} components after the cut",
            comps.len()
        )));
    }
    let n = g.vertex_count();
    let mut side = vec![0usize; n];
    for &v in &comps[1] {
        side[v] = 1;
    }
    let first = contract_side(emb, &side, 0)?;
    let second = contract_side(emb, &side, 1)?;
    Ok((first, second))
}

fn contract_side(
    emb: &PlanarEmbedding,
    side: &[usize],
    keep: usize,
) -> Result<ContractedSide, KelmansError> {
    let n = emb.vertex_count();
    let kept: Vec<usize> = (0..n).filter(|&v| side[v] == keep).collect();
    let mut new_id = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        new_id[v] = i;
    }
    let c = kept.len();
    let mut rotations: Vec<Vec<usize>> = kept
        .iter()
        .map(|&v| {
            emb.rotation(v)
                .iter()
                .map(|&u| if side[u] == keep { new_id[u] } else { c })
                .collect()
        })
        .collect();

    // Walk around the contracted side: inside it, follow face boundaries;
    // at a cut dart, record the kept endpoint and turn to the next dart.
    let start = (0..emb.dart_count())
        .map(crate::embedding::Dart)
        .find(|&d| side[emb.tail(d)] != keep && side[emb.head(d)] == keep)
        .expect("cut has darts");
    let mut order = Vec::new();
    let mut d = start;
    loop {
        order.push(new_id[emb.head(d)]);
        d = emb.succ(d);
        while side[emb.head(d)] != keep {
            d = emb.succ(emb.mate(d));
        }
        if d == start || order.len() > 3 {
            break;
        }
    }
    if order.len() != 3 {
        return Err(KelmansError::NotCyclicCut("cut edges do not bound one face".into()));
    }
    rotations.push(order);
    let embedding = PlanarEmbedding::from_rotations(rotations)?;
    let g = embedding.to_graph();
    if !g.is_cubic() {
        return Err(KelmansError::NotCubic);
    }
    if g.bipartition().is_none() {
        return Err(KelmansError::NotBipartite);
    }
    let mut original: Vec<Option<usize>> = kept.into_iter().map(Some).collect();
    original.push(None);
    Ok(ContractedSide {
        embedding,
        original,
    })
}

/// Joins Hamiltonian cycles of the two contracted graphs into one of the
/// original graph. The cycle of the second side is found first; the first
/// side's cycle must then use the same two cut edges.
pub fn splice_hamiltonian(
    g: &Graph,
    first: &ContractedSide,
    second: &ContractedSide,
    budget: SearchBudget,
) -> Result<Search<Vec<usize>>, KelmansError> {
    let g2 = second.graph();
    let c2 = second.contracted_vertex();
    let cycle2 = match oracle::find_hamiltonian_cycle(&g2, &[], &[], budget)? {
        Search::Found(c) => c,
        Search::Exhausted => return Ok(Search::Exhausted),
        Search::Inconclusive { nodes } => return Ok(Search::Inconclusive { nodes }),
    };
    let k = cycle2.len();
    let at = cycle2.iter().position(|&v| v == c2).unwrap();
    // Path through the second side, from the vertex after c2 to the one
    // before it, in original ids.
    let path2: Vec<usize> = (1..k)
        .map(|i| second.original[cycle2[(at + i) % k]].unwrap())
        .collect();
    let (p_start, p_end) = (path2[0], *path2.last().unwrap());

    let c1 = first.contracted_vertex();
    let mut local1 = vec![usize::MAX; g.vertex_count()];
    for (i, o) in first.original.iter().enumerate() {
        if let Some(v) = o {
            local1[*v] = i;
        }
    }
    let cross = |end: usize| -> usize {
        let u = *g.neighbors(end).iter().find(|&&u| local1[u] != usize::MAX).unwrap();
        local1[u]
    };
    let (a, b) = (cross(p_start), cross(p_end));
    let g1 = first.graph();
    let cycle1 = match oracle::find_hamiltonian_cycle(&g1, &[(c1, a), (c1, b)], &[], budget)? {
        Search::Found(c) => c,
        Search::Exhausted => return Ok(Search::Exhausted),
        Search::Inconclusive { nodes } => return Ok(Search::Inconclusive { nodes }),
    };
    let k1 = cycle1.len();
    let at1 = cycle1.iter().position(|&v| v == c1).unwrap();
    // Orient the first path to end next to p_start.
    let mut path1: Vec<usize> = (1..k1)
        .map(|i| first.original[cycle1[(at1 + i) % k1]].unwrap())
        .collect();
    if local1[*path1.last().unwrap()] != a {
        path1.reverse();
    }
    let mut out = path1;
    out.extend(path2);
    Ok(Search::Found(out))
}

/// The dual edges (pairs of face ids) crossing the sides of a triangle.
pub fn dual_cut_of_triangle(tri: &Triangulation, triangle: [usize; 3]) -> Vec<(usize, usize)> {
    let emb = tri.embedding();
    let [a, b, c] = triangle;
    [(a, b), (b, c), (c, a)]
        .iter()
        .map(|&(u, v)| {
            let e = emb.edge_id(u, v).expect("triangle edge");
            let (f, g) = tri.edge_faces(e);
            edge_key(f, g)
        })
        .collect()
}

/// Replaces terminals of a four-pole by a gadget. Implementations must keep
/// the result cubic away from the terminals, planar and bipartite.
pub trait TerminalExtension {
    fn extend(&self, fp: &FourPole) -> Result<FourPole, KelmansError>;
}

/// The gadget that swaps the colours of a terminal pair. Its internal
/// structure is not known here, so it always reports
/// [`KelmansError::GadgetUnavailable`].
#[derive(Debug, Clone, Copy, Default)]
pub struct ColourSwapExtension;

impl TerminalExtension for ColourSwapExtension {
    fn extend(&self, _fp: &FourPole) -> Result<FourPole, KelmansError> {
        Err(KelmansError::GadgetUnavailable)
    }
}
