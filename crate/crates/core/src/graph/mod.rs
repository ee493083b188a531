//! Immutable undirected simple graphs and radius-1 egocentric networks.

mod edgelist;

use std::collections::VecDeque;

pub use edgelist::{parse_edge_list, read_edge_list, write_edge_list};

use crate::error::{Error, Result};

/// Undirected simple graph over the dense vertex set `0..n`.
///
/// Edges are stored once as `(lo, hi)` pairs in ascending order; neighbor
/// lists are sorted. The graph never changes after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicates (in either orientation)
    /// collapse into a single edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut canon = Vec::new();
        for (a, b) in edges {
            if a >= n {
                return Err(Error::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        canon.dedup();

        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &canon {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: canon, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(lo, hi)` pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn is_regular(&self) -> bool {
        self.adj.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Extracts the egocentric network of `v`: the ego, its neighbors and
    /// every parent edge with both endpoints among them.
    pub fn ego_network(&self, v: usize) -> Result<EgoNetwork> {
        self.check_vertex(v)?;
        let mut members = Vec::with_capacity(self.degree(v) + 1);
        members.push(v);
        members.extend_from_slice(&self.adj[v]);

        let ego = EgoNetwork {
            ego: v,
            members,
            subgraph: Graph::empty(0),
        };
        let mut edges = Vec::new();
        for (local, &u) in ego.members.iter().enumerate() {
            for &w in &self.adj[u] {
                if let Some(lw) = ego.local_index(w) {
                    if lw > local {
                        edges.push((local, lw));
                    }
                }
            }
        }
        let subgraph = Graph::new(ego.members.len(), edges)?;
        Ok(EgoNetwork { subgraph, ..ego })
    }

    /// Maximal connected vertex sets, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced on `members`; local index `i` is `members[i]`.
    pub fn induced_subgraph(&self, members: &[usize]) -> Result<Graph> {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in members.iter().enumerate() {
            self.check_vertex(v)?;
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| local[a] != usize::MAX && local[b] != usize::MAX)
            .map(|&(a, b)| (local[a], local[b]));
        Graph::new(members.len(), edges)
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::invalid("permutation length differs from vertex count"));
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || hit[p] {
                return Err(Error::invalid("not a permutation"));
            }
            hit[p] = true;
        }
        Graph::new(self.n, self.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
    }
}

/// Convenience wrapper over [`Graph::new`] for slices.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::new(n, edges.iter().copied())
}

/// Radius-1 egocentric network of a vertex.
///
/// `members[0]` is the ego, followed by its neighbors in ascending parent id.
/// The subgraph uses local indices into `members`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgoNetwork {
    pub ego: usize,
    pub members: Vec<usize>,
    pub subgraph: Graph,
}

impl EgoNetwork {
    /// Maps a parent-graph vertex to its local index, if it is a member.
    pub fn local_index(&self, parent: usize) -> Option<usize> {
        if parent == self.ego {
            return Some(0);
        }
        self.members[1..].binary_search(&parent).ok().map(|i| i + 1)
    }
}
