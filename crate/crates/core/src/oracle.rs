//! Brute-force ground truth.
//!
//! Nothing in here depends on the constructive modules; the searches use
//! only adjacency and face lists so they can independently check the results
//! of the tree-duality, sufficient-condition and hardness code. The `naive_*`
//! functions are the slowest possible filters (all subsets, all
//! permutations) and in turn check the pruned searches on small graphs.

use thiserror::Error;

use crate::graph::{edge_key, Graph, UndoUnionFind};
use crate::search::{Enumeration, Meter, Search, SearchBudget};
use crate::triangulation::Triangulation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("edge {0}-{1} is both required and forbidden")]
    Contradictory(usize, usize),
    #[error("edge {0}-{1} is not in the graph")]
    UnknownEdge(usize, usize),
}

/// True if `cycle` lists every vertex once and consecutive vertices
/// (cyclically) are adjacent.
pub fn is_hamiltonian_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.vertex_count();
    if cycle.len() != n || n < 3 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

/// True if `path` lists every vertex once with consecutive vertices adjacent.
pub fn is_hamiltonian_path(g: &Graph, path: &[usize]) -> bool {
    let n = g.vertex_count();
    if path.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in path {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

struct HamSearch {
    adj: Vec<Vec<usize>>,
    req: Vec<Vec<usize>>,
    visited: Vec<bool>,
    path: Vec<usize>,
    meter: Meter,
}

impl HamSearch {
    fn new(
        g: &Graph,
        required: &[(usize, usize)],
        forbidden: &[(usize, usize)],
        budget: SearchBudget,
    ) -> Result<Self, OracleError> {
        let n = g.vertex_count();
        for &(u, v) in required.iter().chain(forbidden) {
            if !g.has_edge(u, v) {
                return Err(OracleError::UnknownEdge(u, v));
            }
        }
        for &(u, v) in required {
            if forbidden.iter().any(|&e| edge_key(e.0, e.1) == edge_key(u, v)) {
                return Err(OracleError::Contradictory(u, v));
            }
        }
        let allowed = g.without_edges(forbidden);
        let mut req = vec![Vec::new(); n];
        for &(u, v) in required {
            if !req[u].contains(&v) {
                req[u].push(v);
                req[v].push(u);
            }
        }
        for r in &mut req {
            r.sort_unstable();
        }
        Ok(HamSearch {
            adj: (0..n).map(|v| allowed.neighbors(v).to_vec()).collect(),
            req,
            visited: vec![false; n],
            path: Vec::with_capacity(n),
            meter: Meter::new(budget),
        })
    }

    /// Runs the search; `visit` returns false to stop. Returns false if
    /// stopped (by the visitor or the budget).
    fn run(&mut self, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let n = self.adj.len();
        if n < 3 || self.req.iter().any(|r| r.len() > 2) {
            return true;
        }
        self.visited[0] = true;
        self.path.push(0);
        self.extend(visit)
    }

    fn extend(&mut self, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if !self.meter.tick() {
            return false;
        }
        let n = self.adj.len();
        let len = self.path.len();
        let v = self.path[len - 1];
        if len == n {
            let first = self.path[1];
            let prev = self.path[len - 2];
            let closes = self.adj[v].binary_search(&0).is_ok()
                && first < v
                && self.req[v].iter().all(|&w| w == prev || w == 0)
                && self.req[0].iter().all(|&w| w == first || w == v);
            return if closes { visit(&self.path) } else { true };
        }

        let candidates: Vec<usize> = if len == 1 {
            if self.req[0].len() == 2 {
                self.req[0].clone()
            } else {
                self.adj[0].clone()
            }
        } else {
            let prev = self.path[len - 2];
            let need: Vec<usize> = self.req[v].iter().copied().filter(|&w| w != prev).collect();
            match need.len() {
                0 => self.adj[v].clone(),
                1 => vec![need[0]],
                _ => return true,
            }
        };

        for w in candidates {
            if self.visited[w] {
                continue;
            }
            self.visited[w] = true;
            self.path.push(w);
            let go_on = !self.feasible(v, w) || self.extend(visit);
            self.path.pop();
            self.visited[w] = false;
            if !go_on {
                return false;
            }
        }
        true
    }

    /// After stepping from `v` to `w`, every unvisited neighbour of `v` still
    /// needs two usable neighbours and no required edge into the interior.
    fn feasible(&self, v: usize, w: usize) -> bool {
        if v == 0 {
            return true;
        }
        for &u in &self.adj[v] {
            if self.visited[u] {
                continue;
            }
            let usable = self.adj[u]
                .iter()
                .filter(|&&x| !self.visited[x] || x == w || x == 0)
                .count();
            if usable < 2 {
                return false;
            }
            if self.req[u].iter().any(|&x| self.visited[x] && x != w && x != 0) {
                return false;
            }
        }
        true
    }
}

/// A Hamiltonian cycle containing every `required` edge and no `forbidden`
/// one. Cycles start at vertex 0 and continue towards the smaller of its two
/// cycle neighbours.
pub fn find_hamiltonian_cycle(
    g: &Graph,
    required: &[(usize, usize)],
    forbidden: &[(usize, usize)],
    budget: SearchBudget,
) -> Result<Search<Vec<usize>>, OracleError> {
    let mut search = HamSearch::new(g, required, forbidden, budget)?;
    let mut found = None;
    let finished = search.run(&mut |c| {
        found = Some(c.to_vec());
        false
    });
    Ok(match found {
        Some(c) => Search::Found(c),
        None if finished => Search::Exhausted,
        None => Search::Inconclusive {
            nodes: search.meter.nodes,
        },
    })
}

/// Every Hamiltonian cycle, each once, in the canonical orientation used by
/// [`find_hamiltonian_cycle`], in lexicographic order.
pub fn enumerate_hamiltonian_cycles(g: &Graph, budget: SearchBudget) -> (Vec<Vec<usize>>, Enumeration) {
    let mut search = HamSearch::new(g, &[], &[], budget).expect("no constraints");
    let mut out = Vec::new();
    let complete = search.run(&mut |c| {
        out.push(c.to_vec());
        true
    });
    let summary = Enumeration {
        emitted: out.len() as u64,
        nodes: search.meter.nodes,
        complete,
    };
    (out, summary)
}

/// A Hamiltonian path with arbitrary endpoints.
pub fn find_hamiltonian_path(g: &Graph, budget: SearchBudget) -> Search<Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 {
        return Search::Exhausted;
    }
    let mut meter = Meter::new(budget);
    let mut visited = vec![false; n];
    let mut path = Vec::with_capacity(n);

    fn extend(
        g: &Graph,
        visited: &mut [bool],
        path: &mut Vec<usize>,
        meter: &mut Meter,
    ) -> Option<bool> {
        if !meter.tick() {
            return None;
        }
        if path.len() == visited.len() {
            return Some(true);
        }
        let v = *path.last().unwrap();
        for &w in g.neighbors(v) {
            if visited[w] {
                continue;
            }
            visited[w] = true;
            path.push(w);
            // An unvisited vertex with no unvisited neighbour other than
            // through the new end can only be the final vertex.
            let stranded = g
                .neighbors(v)
                .iter()
                .filter(|&&u| !visited[u])
                .filter(|&&u| g.neighbors(u).iter().all(|&x| visited[x] && x != w))
                .count();
            let result = if stranded > 0 {
                Some(false)
            } else {
                extend(g, visited, path, meter)
            };
            if result != Some(false) {
                return result;
            }
            path.pop();
            visited[w] = false;
        }
        Some(false)
    }

    for s in 0..n {
        visited[s] = true;
        path.push(s);
        match extend(g, &mut visited, &mut path, &mut meter) {
            Some(true) => return Search::Found(path),
            None => return Search::Inconclusive { nodes: meter.nodes },
            Some(false) => {}
        }
        path.pop();
        visited[s] = false;
    }
    Search::Exhausted
}

struct SubtreeOracle<'a> {
    g: &'a Graph,
    faces: &'a [[usize; 3]],
    faces_of: Vec<Vec<usize>>,
    faces_by_max: Vec<Vec<usize>>,
    hits: Vec<u32>,
    hit_faces: usize,
    in_set: Vec<bool>,
    members: Vec<usize>,
    components: usize,
    undo_stack: Vec<(usize, usize)>,
    uf: UndoUnionFind,
    meter: Meter,
}

impl<'a> SubtreeOracle<'a> {
    fn new(tri: &'a Triangulation, budget: SearchBudget) -> Self {
        let n = tri.vertex_count();
        let mut faces_of = vec![Vec::new(); n];
        let mut faces_by_max = vec![Vec::new(); n];
        for (i, f) in tri.faces().iter().enumerate() {
            for &v in f {
                faces_of[v].push(i);
            }
            faces_by_max[*f.iter().max().unwrap()].push(i);
        }
        SubtreeOracle {
            g: tri.graph(),
            faces: tri.faces(),
            faces_of,
            faces_by_max,
            hits: vec![0; tri.face_count()],
            hit_faces: 0,
            in_set: vec![false; n],
            members: Vec::new(),
            components: 0,
            undo_stack: Vec::new(),
            uf: UndoUnionFind::new(n),
            meter: Meter::new(budget),
        }
    }

    /// Smallest "largest outside neighbour" over the components of the
    /// current set: once the next candidate exceeds it, that component can
    /// never grow again.
    fn component_horizon(&self) -> Option<usize> {
        let n = self.in_set.len();
        let mut reach = vec![None::<usize>; n];
        let mut roots = Vec::new();
        for &v in &self.members {
            let r = self.uf.find(v);
            if !roots.contains(&r) {
                roots.push(r);
            }
            for &u in self.g.neighbors(v) {
                if !self.in_set[u] {
                    reach[r] = Some(reach[r].map_or(u, |x: usize| x.max(u)));
                }
            }
        }
        roots
            .into_iter()
            .map(|r| reach[r].map_or(0, |x| x + 1))
            .min()
    }

    fn add(&mut self, v: usize) {
        self.in_set[v] = true;
        self.members.push(v);
        let before = self.components;
        self.components += 1;
        let mut unions = 0;
        for &u in self.g.neighbors(v) {
            if self.in_set[u] && u != v {
                unions += 1;
                if self.uf.union(u, v) {
                    self.components -= 1;
                }
            }
        }
        self.undo_stack.push((before, unions));
        for &f in &self.faces_of[v] {
            if self.hits[f] == 0 {
                self.hit_faces += 1;
            }
            self.hits[f] += 1;
        }
    }

    fn remove(&mut self, v: usize) {
        for &f in &self.faces_of[v] {
            self.hits[f] -= 1;
            if self.hits[f] == 0 {
                self.hit_faces -= 1;
            }
        }
        let (before, unions) = self.undo_stack.pop().expect("balanced add/remove");
        for _ in 0..unions {
            self.uf.undo();
        }
        self.components = before;
        self.members.pop();
        self.in_set[v] = false;
    }

    fn rec(&mut self, start: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if !self.meter.tick() {
            return false;
        }
        let n = self.in_set.len();
        let horizon = self.component_horizon().unwrap_or(n);
        for j in start..n {
            if j > start && self.faces_by_max[j - 1].iter().any(|&f| self.hits[f] == 0) {
                break;
            }
            if j >= horizon {
                break;
            }
            let mut roots: Vec<usize> = self
                .g
                .neighbors(j)
                .iter()
                .filter(|&&u| self.in_set[u])
                .map(|&u| self.uf.find(u))
                .collect();
            let k = roots.len();
            roots.sort_unstable();
            roots.dedup();
            if roots.len() < k {
                continue;
            }
            self.add(j);
            let mut go_on = true;
            if self.components == 1 && self.hit_faces == self.faces.len() {
                go_on = visit(&self.members);
            }
            go_on = go_on && self.rec(j + 1, visit);
            self.remove(j);
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// Streams every permeating subtree (induced tree meeting every face) in
/// ascending lexicographic order of sorted vertex lists. `visit` returns false
/// to stop early.
pub fn enumerate_permeating_subtrees(
    tri: &Triangulation,
    budget: SearchBudget,
    mut visit: impl FnMut(&[usize]) -> bool,
) -> Enumeration {
    let mut oracle = SubtreeOracle::new(tri, budget);
    let mut emitted = 0u64;
    let complete = oracle.rec(0, &mut |s| {
        emitted += 1;
        visit(s)
    });
    Enumeration {
        emitted,
        nodes: oracle.meter.nodes,
        complete,
    }
}

/// Collects [`enumerate_permeating_subtrees`].
pub fn permeating_subtrees(tri: &Triangulation, budget: SearchBudget) -> (Vec<Vec<usize>>, Enumeration) {
    let mut out = Vec::new();
    let summary = enumerate_permeating_subtrees(tri, budget, |s| {
        out.push(s.to_vec());
        true
    });
    (out, summary)
}

/// Every simple cycle accepted by `predicate`, each once: starting at its
/// smallest vertex and continuing towards the smaller of that vertex's two
/// cycle neighbours. Ordered by start vertex, then lexicographically.
pub fn enumerate_cycles(
    g: &Graph,
    predicate: impl Fn(&[usize]) -> bool,
    budget: SearchBudget,
) -> (Vec<Vec<usize>>, Enumeration) {
    let n = g.vertex_count();
    let mut meter = Meter::new(budget);
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    let mut path = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        g: &Graph,
        s: usize,
        on_path: &mut [bool],
        path: &mut Vec<usize>,
        meter: &mut Meter,
        out: &mut Vec<Vec<usize>>,
        predicate: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        if !meter.tick() {
            return false;
        }
        let v = *path.last().unwrap();
        for &w in g.neighbors(v) {
            if w == s && path.len() >= 3 && path[1] < v {
                if predicate(path) {
                    out.push(path.clone());
                }
            } else if w > s && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                let ok = dfs(g, s, on_path, path, meter, out, predicate);
                path.pop();
                on_path[w] = false;
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    let mut complete = true;
    for s in 0..n {
        on_path[s] = true;
        path.push(s);
        let before = out.len();
        complete = dfs(g, s, &mut on_path, &mut path, &mut meter, &mut out, &predicate);
        out[before..].sort();
        path.pop();
        on_path[s] = false;
        if !complete {
            break;
        }
    }
    let summary = Enumeration {
        emitted: out.len() as u64,
        nodes: meter.nodes,
        complete,
    };
    (out, summary)
}

/// Every permeating subtree by testing all `2^n` vertex subsets. Sorted
/// lexicographically.
pub fn naive_permeating_subtrees(tri: &Triangulation) -> Vec<Vec<usize>> {
    let n = tri.vertex_count();
    assert!(n <= 20, "naive subset filter is for tiny graphs");
    let g = tri.graph();
    let mut out = Vec::new();
    for bits in 1u32..(1 << n) {
        let mask: Vec<bool> = (0..n).map(|v| bits >> v & 1 == 1).collect();
        let size = mask.iter().filter(|&&b| b).count();
        if !tri.faces().iter().all(|f| f.iter().any(|&v| mask[v])) {
            continue;
        }
        if g.induced_edge_count(&mask) != size - 1 {
            continue;
        }
        if g.components_within(&mask).len() != 1 {
            continue;
        }
        out.push((0..n).filter(|&v| mask[v]).collect());
    }
    out.sort();
    out
}

fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Every Hamiltonian cycle by trying all orderings of vertices `1..n` after
/// vertex 0, in the canonical orientation. Sorted lexicographically.
pub fn naive_hamiltonian_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    assert!(n <= 11, "naive permutation filter is for tiny graphs");
    if n < 3 {
        return Vec::new();
    }
    let mut rest: Vec<usize> = (1..n).collect();
    let mut out = Vec::new();
    loop {
        if rest[0] < rest[n - 2] {
            let mut cycle = vec![0];
            cycle.extend_from_slice(&rest);
            if is_hamiltonian_cycle(g, &cycle) {
                out.push(cycle);
            }
        }
        if !next_permutation(&mut rest) {
            break;
        }
    }
    out
}

/// Every simple cycle, found by testing all edge subsets for being a single
/// connected 2-regular subgraph. Returned in the canonical form of
/// [`enumerate_cycles`], sorted by start vertex then lexicographically.
pub fn naive_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let edges = g.edges();
    let m = edges.len();
    assert!(m <= 24, "naive edge-subset filter is for tiny graphs");
    let n = g.vertex_count();
    let mut out = Vec::new();
    for bits in 1u32..(1u32 << m) {
        let chosen: Vec<(usize, usize)> = (0..m)
            .filter(|&i| bits >> i & 1 == 1)
            .map(|i| edges[i])
            .collect();
        let mut sub = Graph::new(n);
        for &(u, v) in &chosen {
            sub.add_edge(u, v);
        }
        if (0..n).any(|v| sub.degree(v) != 0 && sub.degree(v) != 2) {
            continue;
        }
        let mask: Vec<bool> = (0..n).map(|v| sub.degree(v) == 2).collect();
        if sub.components_within(&mask).len() != 1 {
            continue;
        }
        let start = mask.iter().position(|&b| b).unwrap();
        let (a, b) = (sub.neighbors(start)[0], sub.neighbors(start)[1]);
        let mut cycle = vec![start, a.min(b)];
        while cycle.len() < chosen.len() {
            let (prev, cur) = (cycle[cycle.len() - 2], cycle[cycle.len() - 1]);
            let next = *sub.neighbors(cur).iter().find(|&&x| x != prev).unwrap();
            cycle.push(next);
        }
        out.push(cycle);
    }
    out.sort_by(|x, y| (x[0], x).cmp(&(y[0], y)));
    out
}

/// Minimum cyclic edge cut found by trying every vertex bipartition. Returns
/// the cut size and the side containing vertex 0, or `None` if no bipartition
/// has a cycle on both sides.
pub fn min_cyclic_cut_by_bipartition(g: &Graph) -> Option<(usize, Vec<bool>)> {
    let n = g.vertex_count();
    assert!((1..=20).contains(&n), "bipartition filter is for tiny graphs");
    let has_cycle = |mask: &[bool]| {
        let k = mask.iter().filter(|&&b| b).count();
        let comps = g.components_within(mask).len();
        g.induced_edge_count(mask) + comps > k
    };
    let mut best: Option<(usize, Vec<bool>)> = None;
    for bits in 0u32..(1 << (n - 1)) {
        let side: Vec<bool> = (0..n).map(|v| v == 0 || bits >> (v - 1) & 1 == 1).collect();
        let other: Vec<bool> = side.iter().map(|&b| !b).collect();
        if !has_cycle(&side) || !has_cycle(&other) {
            continue;
        }
        let cut = g.edges().iter().filter(|&&(u, v)| side[u] != side[v]).count();
        if best.as_ref().is_none_or(|b| cut < b.0) {
            best = Some((cut, side));
        }
    }
    best
}

/// Cyclic edge-connectivity by exhaustive bipartition: the minimum cyclic
/// cut, or the cycle rank `m - n + 1` when no cyclic cut exists.
pub fn cyclic_connectivity_by_bipartition(g: &Graph) -> usize {
    match min_cyclic_cut_by_bipartition(g) {
        Some((k, _)) => k,
        None => g.edge_count() + 1 - g.vertex_count(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn cube_is_hamiltonian() {
        let q3 = corpus::hypercube_q3();
        let c = find_hamiltonian_cycle(&q3, &[], &[], SearchBudget::default())
            .unwrap()
            .into_found()
            .unwrap();
        assert!(is_hamiltonian_cycle(&q3, &c));
        assert_eq!(c.len(), 8);
    }

    #[test]
    fn constraints_are_honoured() {
        let cube = corpus::cube().to_graph();
        // Two edges of the outer 4-face.
        let c = find_hamiltonian_cycle(&cube, &[(0, 1)], &[(1, 2)], SearchBudget::default())
            .unwrap()
            .into_found()
            .unwrap();
        assert!(is_hamiltonian_cycle(&cube, &c));
        let pos = |v: usize| c.iter().position(|&x| x == v).unwrap();
        let adjacent = |a: usize, b: usize| {
            let d = pos(a).abs_diff(pos(b));
            d == 1 || d == 7
        };
        assert!(adjacent(0, 1));
        assert!(!adjacent(1, 2));
        assert_eq!(
            find_hamiltonian_cycle(&cube, &[(0, 1)], &[(1, 0)], SearchBudget::default()),
            Err(OracleError::Contradictory(0, 1))
        );
        assert_eq!(
            find_hamiltonian_cycle(&cube, &[(0, 2)], &[], SearchBudget::default()),
            Err(OracleError::UnknownEdge(0, 2))
        );
    }

    #[test]
    fn non_hamiltonian_fixtures() {
        for g in [corpus::three_blob_theta(), corpus::petersen()] {
            assert!(find_hamiltonian_cycle(&g, &[], &[], SearchBudget::default())
                .unwrap()
                .is_exhausted());
        }
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let g = corpus::three_blob_theta();
        let r = find_hamiltonian_cycle(&g, &[], &[], SearchBudget::nodes(5)).unwrap();
        assert!(r.is_inconclusive());
    }

    #[test]
    fn k4_has_seven_cycles() {
        let k4 = corpus::tetrahedron().graph().clone();
        let (cycles, summary) = enumerate_cycles(&k4, |_| true, SearchBudget::default());
        assert!(summary.complete);
        assert_eq!(cycles.len(), 7);
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(cycles, naive_cycles(&k4));
    }

    #[test]
    fn forest_has_no_cycles() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]);
        assert!(enumerate_cycles(&path, |_| true, SearchBudget::default()).0.is_empty());
    }

    #[test]
    fn hamiltonian_paths() {
        let p = find_hamiltonian_path(&corpus::petersen(), SearchBudget::default());
        assert!(is_hamiltonian_path(&corpus::petersen(), p.found().unwrap()));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(find_hamiltonian_path(&star, SearchBudget::default()).is_exhausted());
    }

    #[test]
    fn tetrahedron_subtrees_match_naive() {
        let tet = corpus::tetrahedron();
        let (found, summary) = permeating_subtrees(&tet, SearchBudget::default());
        assert!(summary.complete);
        // Any edge or any induced path hits all four faces; K4 has 6 edges and
        // no induced paths of length 2.
        assert_eq!(found.len(), 6);
        assert_eq!(found, naive_permeating_subtrees(&tet));
    }

    #[test]
    fn bipartition_cut_values() {
        assert_eq!(cyclic_connectivity_by_bipartition(&corpus::hypercube_q3()), 4);
        assert_eq!(cyclic_connectivity_by_bipartition(corpus::tetrahedron().graph()), 3);
        assert_eq!(cyclic_connectivity_by_bipartition(&corpus::petersen()), 5);
    }
}
