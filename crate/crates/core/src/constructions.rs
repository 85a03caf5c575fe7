//! Generators: the lower-bound graphs `G_{r,k}`, the interval "chain"
//! graphs `G_{ℓ,k}` with root, Hamiltonian path and interval model, and
//! ladders.
//!
//! Recursive constructions number the base copy first and then each
//! attached copy in order.

use serde::{Deserialize, Serialize};

use crate::bounds::binomial;
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, Path, Vertex};
use num_traits::ToPrimitive;

/// Largest vertex count any generator will build.
pub const GENERATOR_LIMIT: usize = 1 << 20;

fn too_big(got: usize) -> Error {
    Error::Capacity {
        what: "generated graph",
        limit: GENERATOR_LIMIT,
        got,
    }
}

/// `|V(G_{r,k})|`, or `None` on overflow.
pub fn grohe_size(r: usize, k: usize) -> Option<usize> {
    if r == 0 || k == 0 {
        return None;
    }
    if k == 1 {
        return Some(1);
    }
    if r == 1 {
        return Some(k);
    }
    let base = grohe_size(r - 1, k)?;
    let copy = grohe_size(r, k - 1)?;
    base.checked_mul(copy.checked_add(1)?)
}

#[derive(Default)]
struct EdgeList {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl EdgeList {
    /// Appends a disjoint copy and returns its vertex offset.
    fn append(&mut self, other: &EdgeList) -> usize {
        let off = self.n;
        self.edges
            .extend(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        self.n += other.n;
        off
    }

    fn into_graph(self) -> Graph {
        Graph::new(self.n, self.edges).expect("generated edges are valid")
    }
}

fn grohe_edges(r: usize, k: usize) -> EdgeList {
    if k == 1 {
        return EdgeList { n: 1, edges: vec![] };
    }
    if r == 1 {
        let g = Graph::complete(k);
        return EdgeList {
            n: k,
            edges: g.edges().collect(),
        };
    }
    let mut out = grohe_edges(r - 1, k);
    let copy = grohe_edges(r, k - 1);
    for v in 0..out.n {
        let off = out.append(&copy);
        out.edges.extend((off..off + copy.n).map(|w| (v, w)));
    }
    out
}

/// `G_{r,k}`: a single vertex when `k = 1`, `K_k` when `r = 1`, otherwise
/// `G_{r-1,k}` with a copy of `G_{r,k-1}` fully joined to each of its
/// vertices.
pub fn grohe_graph(r: usize, k: usize) -> Result<Graph> {
    if r == 0 || k == 0 {
        return invalid(format!("grohe graph needs r, k >= 1, got r = {r}, k = {k}"));
    }
    match grohe_size(r, k) {
        Some(n) if n <= GENERATOR_LIMIT => Ok(grohe_edges(r, k).into_graph()),
        Some(n) => Err(too_big(n)),
        None => Err(too_big(usize::MAX)),
    }
}

/// Closed integer intervals, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntervalRepresentation {
    pub intervals: Vec<(i64, i64)>,
}

impl IntervalRepresentation {
    fn shift(&mut self, by: i64) {
        for iv in &mut self.intervals {
            iv.0 += by;
            iv.1 += by;
        }
    }

    fn min_left(&self) -> i64 {
        self.intervals.iter().map(|iv| iv.0).min().unwrap_or(0)
    }

    fn max_right(&self) -> i64 {
        self.intervals.iter().map(|iv| iv.1).max().unwrap_or(0)
    }
}

/// The intersection graph of closed intervals and the largest number of
/// intervals sharing a point.
pub fn intersection_graph(rep: &IntervalRepresentation) -> Result<(Graph, usize)> {
    let ivs = &rep.intervals;
    if let Some((i, iv)) = ivs.iter().enumerate().find(|(_, iv)| iv.0 > iv.1) {
        return invalid(format!("interval {i} has left {} > right {}", iv.0, iv.1));
    }
    let mut order: Vec<usize> = (0..ivs.len()).collect();
    order.sort_by_key(|&i| ivs[i]);
    let mut edges = Vec::new();
    for (a, &i) in order.iter().enumerate() {
        for &j in &order[a + 1..] {
            if ivs[j].0 > ivs[i].1 {
                break;
            }
            edges.push((i.min(j), i.max(j)));
        }
    }
    // sweep: an interval opening at x meets one closing at x
    let mut events: Vec<(i64, u8)> = ivs
        .iter()
        .flat_map(|&(l, r)| [(l, 0u8), (r, 1u8)])
        .collect();
    events.sort_unstable();
    let (mut open, mut best) = (0usize, 0usize);
    for (_, kind) in events {
        if kind == 0 {
            open += 1;
            best = best.max(open);
        } else {
            open -= 1;
        }
    }
    Ok((Graph::new(ivs.len(), edges)?, best))
}

/// `G_{ℓ,k}` with its root, a Hamiltonian path ending at the root, and an
/// interval model in which the root reaches furthest right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainArtifact {
    pub l: usize,
    pub k: usize,
    pub graph: Graph,
    pub root: Vertex,
    pub ham_path: Path,
    pub intervals: IntervalRepresentation,
}

struct Chain {
    edges: EdgeList,
    root: Vertex,
    ham: Vec<Vertex>,
    rep: IntervalRepresentation,
}

fn chain_base(l: usize) -> Chain {
    Chain {
        edges: EdgeList {
            n: l,
            edges: (1..l).map(|i| (i - 1, i)).collect(),
        },
        root: l - 1,
        ham: (0..l).collect(),
        rep: IntervalRepresentation {
            intervals: (0..l as i64).map(|i| (i, i + 1)).collect(),
        },
    }
}

/// `G_{1,k+1}, .., G_{l,k+1}` from `G_{1,k}, .., G_{l,k}`.
fn chain_step(prev: &[Chain]) -> Vec<Chain> {
    (1..=prev.len()).map(|l| chain_join(&prev[..l])).collect()
}

fn chain_join(parts: &[Chain]) -> Chain {
    let mut edges = EdgeList::default();
    let mut ham = Vec::new();
    let mut intervals = Vec::new();
    let mut offsets = Vec::with_capacity(parts.len());
    let mut cursor: Option<i64> = None;
    // original right end of each placed root
    let mut root_right = Vec::with_capacity(parts.len());
    for part in parts {
        let off = edges.append(&part.edges);
        offsets.push(off);
        ham.extend(part.ham.iter().map(|&v| v + off));
        let mut rep = part.rep.clone();
        if let Some(end) = cursor {
            rep.shift(end + 1 - rep.min_left());
        }
        cursor = Some(rep.max_right());
        root_right.push(rep.intervals[part.root].1);
        intervals.extend(rep.intervals);
    }
    for s in 0..parts.len().saturating_sub(1) {
        let r = offsets[s] + parts[s].root;
        let next = offsets[s + 1];
        edges
            .edges
            .extend((next..next + parts[s + 1].edges.n).map(|w| (r, w)));
        // reach the end of the next collection, stop before the one after
        intervals[r].1 = root_right[s + 1];
    }
    let last = parts.len() - 1;
    let root = offsets[last] + parts[last].root;
    intervals[root].1 = cursor.unwrap_or(0) + 1;
    Chain {
        edges,
        root,
        ham,
        rep: IntervalRepresentation { intervals },
    }
}

/// `|V(G_{ℓ,k})| = C(ℓ+k-1, k)`, or `None` when it does not fit.
pub fn chain_size(l: usize, k: usize) -> Option<usize> {
    if l == 0 || k == 0 {
        return None;
    }
    binomial((l + k - 1) as u64, k as u64).to_usize()
}

/// `G_{ℓ,k}`: the path on `ℓ` vertices rooted at an end when `k = 1`;
/// otherwise the disjoint union of `G_{1,k-1}, .., G_{ℓ,k-1}` where the root
/// of each copy is joined to all of the next copy, rooted at the root of
/// the last copy.
pub fn chain_graph(l: usize, k: usize) -> Result<ChainArtifact> {
    if l == 0 || k == 0 {
        return invalid(format!("chain graph needs l, k >= 1, got l = {l}, k = {k}"));
    }
    match chain_size(l, k) {
        Some(n) if n <= GENERATOR_LIMIT => {}
        Some(n) => return Err(too_big(n)),
        None => return Err(too_big(usize::MAX)),
    }
    let mut level: Vec<Chain> = (1..=l).map(chain_base).collect();
    for _ in 1..k {
        level = chain_step(&level);
    }
    let top = level.pop().expect("l >= 1");
    Ok(ChainArtifact {
        l,
        k,
        graph: top.edges.into_graph(),
        root: top.root,
        ham_path: Path(top.ham),
        intervals: top.rep,
    })
}

/// The `2 × t` grid; vertex `(row, col)` is `row·t + col`.
pub fn ladder(t: usize) -> Result<Graph> {
    if t == 0 {
        return invalid("ladder needs t >= 1");
    }
    if 2 * t > GENERATOR_LIMIT {
        return Err(too_big(2 * t));
    }
    let mut edges = Vec::with_capacity(3 * t);
    for c in 0..t {
        edges.push((c, t + c));
        if c + 1 < t {
            edges.push((c, c + 1));
            edges.push((t + c, t + c + 1));
        }
    }
    Graph::new(2 * t, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{is_pt_free, longest_induced_path};

    /// `G_{ℓ,k}` built straight from the definition with explicit vertex
    /// lists, no intervals.
    fn chain_plain(l: usize, k: usize) -> (usize, Vec<(usize, usize)>, usize) {
        if k == 1 {
            return (l, (1..l).map(|i| (i - 1, i)).collect(), l - 1);
        }
        let mut n = 0;
        let mut edges = Vec::new();
        let mut prev_root: Option<usize> = None;
        let mut root = 0;
        for s in 1..=l {
            let (m, e, r) = chain_plain(s, k - 1);
            edges.extend(e.into_iter().map(|(a, b)| (a + n, b + n)));
            if let Some(pr) = prev_root {
                edges.extend((n..n + m).map(|w| (pr, w)));
            }
            prev_root = Some(r + n);
            root = r + n;
            n += m;
        }
        (n, edges, root)
    }

    #[test]
    fn grohe_examples() {
        assert_eq!(grohe_graph(1, 3).unwrap(), Graph::complete(3));
        assert_eq!(grohe_graph(2, 2).unwrap().n(), 4);
        assert_eq!(grohe_graph(2, 3).unwrap().n(), 15);
        assert_eq!(grohe_graph(3, 2).unwrap().n(), 8);
        assert_eq!(grohe_graph(4, 2).unwrap().n(), 16);
        assert_eq!(grohe_graph(5, 1).unwrap().n(), 1);
        assert!(grohe_graph(0, 2).is_err());
        assert!(matches!(grohe_graph(30, 30), Err(Error::Capacity { .. })));
    }

    #[test]
    fn grohe_sizes_follow_recursion() {
        for r in 2..=4 {
            for k in 2..=3 {
                let n = grohe_size(r, k).unwrap();
                if n <= 200 {
                    assert_eq!(grohe_graph(r, k).unwrap().n(), n);
                    assert_eq!(
                        n,
                        grohe_size(r - 1, k).unwrap() * (1 + grohe_size(r, k - 1).unwrap())
                    );
                }
            }
        }
    }

    #[test]
    fn grohe_2_2_shape() {
        // base K2 on {0,1}, then vertex 2 joined to 0, vertex 3 joined to 1
        let g = grohe_graph(2, 2).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 3)]);
    }

    #[test]
    fn chain_examples() {
        for k in 1..=4 {
            let a = chain_graph(2, k).unwrap();
            assert_eq!(a.graph, Graph::complete(k + 1), "k = {k}");
        }
        assert_eq!(chain_graph(4, 2).unwrap().graph.n(), 10);
        assert_eq!(chain_graph(3, 3).unwrap().graph.n(), 10);
        assert!(chain_graph(0, 1).is_err());
    }

    #[test]
    fn chain_matches_plain_definition() {
        for l in 1..=5 {
            for k in 1..=3 {
                let a = chain_graph(l, k).unwrap();
                let (n, edges, root) = chain_plain(l, k);
                assert_eq!(a.graph, Graph::new(n, edges).unwrap(), "({l},{k})");
                assert_eq!(a.root, root);
                assert_eq!(a.graph.n(), chain_size(l, k).unwrap());
            }
        }
    }

    #[test]
    fn chain_artifacts_are_consistent() {
        for l in 1..=5 {
            for k in 1..=3 {
                let a = chain_graph(l, k).unwrap();
                let g = &a.graph;
                assert_eq!(a.ham_path.order(), g.n());
                assert!(g.is_path(a.ham_path.vertices()));
                assert_eq!(a.ham_path.last(), Some(a.root));
                let (ig, omega) = intersection_graph(&a.intervals).unwrap();
                assert_eq!(&ig, g, "({l},{k})");
                assert!(omega <= k + 1);
                let right = a.intervals.intervals[a.root].1;
                assert!(a
                    .intervals
                    .intervals
                    .iter()
                    .enumerate()
                    .all(|(v, iv)| v == a.root || iv.1 < right));
                assert!(is_pt_free(g, l + 1).unwrap());
            }
        }
        let a = chain_graph(4, 2).unwrap();
        assert_eq!(longest_induced_path(&a.graph).unwrap().order(), 4);
    }

    #[test]
    fn intervals_examples() {
        let disjoint = IntervalRepresentation {
            intervals: vec![(0, 1), (2, 3), (4, 5)],
        };
        let (g, w) = intersection_graph(&disjoint).unwrap();
        assert_eq!(g.m(), 0);
        assert_eq!(w, 1);
        let nested = IntervalRepresentation {
            intervals: vec![(0, 10), (1, 2), (3, 4)],
        };
        let (g, w) = intersection_graph(&nested).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
        assert_eq!(w, 2);
        let touching = IntervalRepresentation {
            intervals: vec![(0, 1), (1, 2), (1, 1)],
        };
        let (g, w) = intersection_graph(&touching).unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(w, 3);
        let bad = IntervalRepresentation {
            intervals: vec![(2, 1)],
        };
        assert!(intersection_graph(&bad).is_err());
    }

    #[test]
    fn ladder_examples() {
        assert_eq!(ladder(1).unwrap(), Graph::path(2));
        let l2 = ladder(2).unwrap();
        assert_eq!(l2.n(), 4);
        assert_eq!(l2.m(), 4);
        assert!((0..4).all(|v| l2.degree(v) == 2) && l2.is_connected());
        let l4 = ladder(4).unwrap();
        assert_eq!((l4.n(), l4.m()), (8, 10));
        assert!(ladder(0).is_err());
    }
}
