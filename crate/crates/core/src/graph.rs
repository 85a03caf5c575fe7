//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! [`Graph`] is immutable once built. Deletion is expressed by taking an
//! induced subgraph on the complement, and every listing of vertex sets is
//! ordered by minimum vertex so results are reproducible.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitGraph;
use crate::error::{invalid, Error, Result};

pub type Vertex = usize;

/// A sorted, duplicate-free set of vertex indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn from_mask(mask: u64) -> Self {
        Self(crate::bits::iter_mask(mask).collect())
    }

    /// Bitmask encoding; `None` if any member is `>= 64`.
    pub fn to_mask(&self) -> Option<u64> {
        self.0
            .iter()
            .try_fold(0u64, |m, &v| (v < 64).then(|| m | (1 << v)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn min(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn insert(&mut self, v: Vertex) {
        if let Err(i) = self.0.binary_search(&v) {
            self.0.insert(i, v);
        }
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(i) => {
                self.0.remove(i);
                true
            }
            Err(_) => false,
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| other.contains(v)).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(v: [Vertex; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// An ordered vertex sequence. Validity against a graph is checked by
/// [`Graph::is_path`] / [`Graph::is_induced_path`], not on construction.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(pub Vec<Vertex>);

impl Path {
    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.0.len()
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.0.last().copied()
    }
}

impl From<Vec<Vertex>> for Path {
    fn from(v: Vec<Vertex>) -> Self {
        Path(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a simple graph. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return invalid(format!("edge ({u},{v}) out of range for n = {n}"));
            }
            if u == v {
                return invalid(format!("loop edge ({u},{u})"));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adj })
    }

    pub fn null() -> Self {
        Self::default()
    }

    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Self { adj }
    }

    /// Path on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path edges")
    }

    /// Cycle on `n >= 3` vertices; smaller `n` gives the path.
    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Self::new(n, edges).expect("valid cycle edges")
    }

    /// Star with center `0` and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Self::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid star edges")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_null(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet(self.vertices().collect())
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            invalid(format!("vertex {v} not in graph with n = {}", self.n()))
        }
    }

    pub fn check_subset(&self, set: &VertexSet) -> Result<()> {
        match set.iter().find(|&v| v >= self.n()) {
            Some(v) => invalid(format!("vertex {v} not in graph with n = {}", self.n())),
            None => Ok(()),
        }
    }

    /// Connected components, each listed once, ordered by minimum vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            out.push(comp.into_iter().collect());
        }
        out
    }

    /// Connected graphs are nonnull.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// `G[S]` together with the order-preserving map old index -> new index.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<Option<Vertex>>)> {
        self.check_subset(set)?;
        let mut map = vec![None; self.n()];
        for (i, v) in set.iter().enumerate() {
            map[v] = Some(i);
        }
        let adj = set
            .iter()
            .map(|v| self.adj[v].iter().filter_map(|&w| map[w]).collect())
            .collect();
        Ok((Graph { adj }, map))
    }

    /// `G - X`.
    pub fn remove_vertices(&self, removed: &VertexSet) -> Result<(Graph, Vec<Option<Vertex>>)> {
        self.check_subset(removed)?;
        self.induced_subgraph(&self.all_vertices().difference(removed))
    }

    /// Distinct vertices with every consecutive pair adjacent.
    pub fn is_path(&self, seq: &[Vertex]) -> bool {
        let mut seen = vec![false; self.n()];
        for &v in seq {
            if v >= self.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        seq.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }

    /// A path with no shortcut, i.e. no edge between non-consecutive vertices.
    pub fn is_induced_path(&self, seq: &[Vertex]) -> bool {
        if !self.is_path(seq) {
            return false;
        }
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in seq.iter().enumerate() {
            pos[v] = i;
        }
        seq.iter().enumerate().all(|(i, &v)| {
            self.adj[v]
                .iter()
                .all(|&w| pos[w] == usize::MAX || pos[w].abs_diff(i) == 1)
        })
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// A shortest path from `from` to `to`, preferring smaller neighbours.
    pub fn shortest_path(&self, from: Vertex, to: Vertex) -> Option<Path> {
        let mut parent = vec![usize::MAX; self.n()];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                break;
            }
            for &w in &self.adj[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if parent[to] == usize::MAX {
            return None;
        }
        let mut seq = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur];
            seq.push(cur);
        }
        seq.reverse();
        Some(Path(seq))
    }

    /// Exact diameter by all-pairs BFS. Errors on null or disconnected input.
    pub fn diameter(&self) -> Result<usize> {
        if self.is_null() {
            return invalid("diameter of the null graph");
        }
        let mut best = 0;
        for s in self.vertices() {
            for d in self.distances(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return invalid("diameter of a disconnected graph"),
                }
            }
        }
        Ok(best)
    }

    /// `v` is adjacent to every other vertex.
    pub fn is_apex(&self, v: Vertex) -> Result<bool> {
        self.check_vertex(v)?;
        Ok(self.degree(v) + 1 == self.n())
    }

    pub fn is_complete(&self) -> bool {
        self.vertices().all(|v| self.degree(v) + 1 == self.n())
    }

    /// Largest clique, by exhaustive search on the bitmask form.
    pub fn clique_number(&self) -> Result<usize> {
        Ok(self.to_bits("clique number")?.clique_number(self.full_mask()))
    }

    pub(crate) fn full_mask(&self) -> u64 {
        crate::bits::low_mask(self.n())
    }

    /// Bitmask adjacency, for the exact solvers.
    pub fn to_bits(&self, what: &'static str) -> Result<BitGraph> {
        if self.n() > 64 {
            return Err(Error::Capacity {
                what,
                limit: 64,
                got: self.n(),
            });
        }
        let adj = self
            .adj
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect();
        Ok(BitGraph::from_masks(adj))
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        if perm.len() != self.n() || VertexSet::from(perm.to_vec()).len() != self.n() {
            return invalid("relabelling is not a permutation");
        }
        Graph::new(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }
}
