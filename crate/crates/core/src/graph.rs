//! Plain undirected simple graphs with sorted adjacency lists.
//!
//! Everything combinatorial that does not need an embedding (components,
//! induced cycles, bipartitions) lives here.

use std::collections::VecDeque;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// Normalises an undirected edge so the smaller endpoint comes first.
pub fn edge_key(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a simple graph from an edge list.
    ///
    /// Panics on loops, duplicate edges or out-of-range endpoints; callers
    /// feed it validated data.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.adj.len() && v < self.adj.len(), "vertex out of range");
        assert_ne!(u, v, "loop at {u}");
        let pos = match self.adj[u].binary_search(&v) {
            Ok(_) => panic!("duplicate edge {u}-{v}"),
            Err(p) => p,
        };
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|a| a.len() == 3)
    }

    /// Copy of the graph with the given edges removed (missing edges ignored).
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Graph {
        let mut adj = self.adj.clone();
        for &(u, v) in removed {
            if let Ok(p) = adj[u].binary_search(&v) {
                adj[u].remove(p);
            }
            if let Ok(p) = adj[v].binary_search(&u) {
                adj[v].remove(p);
            }
        }
        Graph { adj }
    }

    /// Subgraph induced by `keep`, relabelled densely in ascending order.
    /// Returns the graph and the new-to-old vertex map.
    pub fn induced(&self, keep: &[bool]) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = (0..self.adj.len()).filter(|&v| keep[v]).collect();
        let mut new_id = vec![usize::MAX; self.adj.len()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = old
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&u| keep[u])
                    .map(|&u| new_id[u])
                    .collect()
            })
            .collect();
        (Graph { adj }, old)
    }

    /// Number of edges with both endpoints in `mask`.
    pub fn induced_edge_count(&self, mask: &[bool]) -> usize {
        let mut count = 0;
        for (u, nbrs) in self.adj.iter().enumerate() {
            if !mask[u] {
                continue;
            }
            count += nbrs.iter().filter(|&&v| v > u && mask[v]).count();
        }
        count
    }

    /// Connected components of the subgraph induced by `mask`, each sorted,
    /// ordered by smallest member.
    pub fn components_within(&self, mask: &[bool]) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if !mask[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if mask[u] && !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&vec![true; self.adj.len()])
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Component label for every vertex of `mask` (`usize::MAX` elsewhere).
    pub fn component_labels(&self, mask: &[bool]) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.adj.len()];
        for (i, comp) in self.components_within(mask).iter().enumerate() {
            for &v in comp {
                label[v] = i;
            }
        }
        label
    }

    /// A cycle in the subgraph induced by `mask`, as a vertex sequence, or
    /// `None` if that subgraph is a forest.
    pub fn find_cycle_within(&self, mask: &[bool]) -> Option<Vec<usize>> {
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut forest = Graph::new(n);
        for (u, v) in self.edges() {
            if !mask[u] || !mask[v] {
                continue;
            }
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return forest.shortest_path(u, v);
            }
            parent[ru] = rv;
            forest.add_edge(u, v);
        }
        None
    }

    /// Breadth-first shortest path from `s` to `t`, inclusive.
    pub fn shortest_path(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        let n = self.adj.len();
        let mut prev = vec![usize::MAX; n];
        prev[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if v == t {
                break;
            }
            for &u in &self.adj[v] {
                if prev[u] == usize::MAX {
                    prev[u] = v;
                    queue.push_back(u);
                }
            }
        }
        if prev[t] == usize::MAX {
            return None;
        }
        let mut path = vec![t];
        let mut v = t;
        while v != s {
            v = prev[v];
            path.push(v);
        }
        path.reverse();
        Some(path)
    }

    /// Proper 2-colouring (`false`/`true`) with vertex 0 of each component
    /// coloured `false`, or `None` if the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.adj.len();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for &u in &self.adj[v] {
                    match side[u] {
                        None => {
                            side[u] = Some(!sv);
                            queue.push_back(u);
                        }
                        Some(su) if su == sv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }
}

/// Union-find with undo (union by size, no path compression).
pub(crate) struct UndoUnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<Option<(usize, usize)>>,
}

impl UndoUnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UndoUnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    pub(crate) fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(None);
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.history.push(Some((ra, rb)));
        true
    }

    pub(crate) fn undo(&mut self) {
        if let Some(Some((ra, rb))) = self.history.pop() {
            self.parent[rb] = rb;
            self.size[ra] -= self.size[rb];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    #[test]
    fn counts_and_adjacency() {
        let g = k4();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_cubic());
        assert_eq!(g.neighbors(2), &[0, 1, 3]);
        assert!(g.has_edge(3, 1));
    }

    #[test]
    fn cycle_witness_is_a_cycle() {
        let g = k4();
        let cyc = g.find_cycle_within(&[true, true, true, false]).unwrap();
        assert_eq!(cyc.len(), 3);
        for i in 0..cyc.len() {
            assert!(g.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]));
        }
        assert!(g.find_cycle_within(&[true, true, false, false]).is_none());
    }

    #[test]
    fn components_and_bipartition() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3), (3, 4)]);
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3, 4]]);
        assert!(g.bipartition().is_some());
        assert!(k4().bipartition().is_none());
        let (h, map) = k4().induced(&[true, false, true, true]);
        assert_eq!(map, vec![0, 2, 3]);
        assert_eq!(h.edge_count(), 3);
    }

    #[test]
    #[should_panic(expected = "duplicate edge")]
    fn duplicate_edges_rejected() {
        Graph::from_edges(2, &[(0, 1), (1, 0)]);
    }
}
