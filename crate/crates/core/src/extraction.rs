//! Extracting a long induced path from a long path in a graph of bounded
//! 2-treedepth.
//!
//! Given a path `P` on `n` vertices in `G` with `td2(G[V(P)]) <= k + 1`, the
//! extractor returns an induced path on at least `n^{1/k} / 2` vertices:
//!
//! 1. restrict to `G[V(P)]`, in which `P` is Hamiltonian;
//! 2. walk the cut-vertices along `P`; consecutive ones bound the blocks, and
//!    shortest paths through the blocks concatenate into an induced path `Q`;
//! 3. if `Q` is long enough, return it; otherwise some block is large, so
//!    delete a vertex that lowers its 2-treedepth, keep the longer half of
//!    the block's stretch of `P` that avoids it, and recurse with `k - 1`.

use num_bigint::BigUint;
use serde::Serialize;

use crate::blocks::cut_vertices;
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, Path, Vertex, VertexSet};
use crate::params::td2_value;

/// One round of the extractor. Vertices are labels of the input graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Round {
    pub k: usize,
    /// Order of the path this round started from.
    pub order: usize,
    /// Positions (0-based, along the path) of its cut-vertices.
    pub cut_positions: Vec<usize>,
    /// The concatenated induced path.
    pub q: Vec<Vertex>,
    /// Whether `q` was long enough to return.
    pub accepted: bool,
    /// First and last vertex of the block's stretch of the path, when
    /// recursing into it.
    pub block: Option<(Vertex, Vertex)>,
    pub deleted: Option<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extraction {
    pub path: Path,
    pub input_order: usize,
    pub k: usize,
    /// `(2·|path|)^k >= n`, i.e. `|path| >= n^{1/k} / 2`.
    pub guarantee_met: bool,
    pub rounds: Vec<Round>,
}

/// `(2·order)^k >= n`.
pub fn meets_guarantee(order: usize, n: usize, k: usize) -> bool {
    BigUint::from(2 * order).pow(k as u32) >= BigUint::from(n)
}

pub fn extract_induced_path(g: &Graph, p: &Path, k: usize) -> Result<Extraction> {
    if k == 0 {
        return invalid("extraction needs k >= 1");
    }
    if p.order() == 0 {
        return invalid("extraction needs a nonempty path");
    }
    if !g.is_path(p.vertices()) {
        return invalid("the given sequence is not a path of the graph");
    }
    let n = p.order();
    let (h, labels) = restrict(g, p.vertices())?;
    let td2 = td2_value(&h)?;
    if td2 > k + 1 {
        return invalid(format!(
            "2-treedepth of the path's induced subgraph is {td2}, above k + 1 = {}",
            k + 1
        ));
    }
    let mut rounds = Vec::new();
    let local = run(&h, k, &mut rounds)?;
    // rounds carry local labels of h; map back
    let to_g = |v: Vertex| labels[v];
    for r in &mut rounds {
        r.q.iter_mut().for_each(|v| *v = to_g(*v));
        r.deleted = r.deleted.map(to_g);
        r.block = r.block.map(|(s, e)| (to_g(s), to_g(e)));
    }
    let path: Vec<Vertex> = local.into_iter().map(to_g).collect();
    if !g.is_induced_path(&path) {
        return Err(Error::Invariant("extracted path is not induced".into()));
    }
    Ok(Extraction {
        guarantee_met: meets_guarantee(path.len(), n, k),
        path: Path(path),
        input_order: n,
        k,
        rounds,
    })
}

/// `G[seq]` relabelled so that `seq[i]` becomes `i`; also returns `seq`.
fn restrict(g: &Graph, seq: &[Vertex]) -> Result<(Graph, Vec<Vertex>)> {
    let set: VertexSet = seq.iter().copied().collect();
    let (sub, map) = g.induced_subgraph(&set)?;
    let perm: Vec<Vertex> = seq.iter().map(|&v| map[v].expect("in set")).collect();
    // perm[i] is the sub-index of seq[i]; invert so the path reads 0..n
    let mut inv = vec![0; perm.len()];
    for (i, &s) in perm.iter().enumerate() {
        inv[s] = i;
    }
    Ok((sub.relabel(&inv)?, seq.to_vec()))
}

/// `h` has Hamiltonian path `0, 1, .., n-1` and `td2(h) <= k + 1`. Returns
/// an induced path of `h`, recording rounds in `h`'s labels.
fn run(h: &Graph, k: usize, rounds: &mut Vec<Round>) -> Result<Vec<Vertex>> {
    let n = h.n();
    if n == 1 {
        return Ok(vec![0]);
    }
    let cuts = cut_vertices(h);
    let mut a: Vec<usize> = vec![0];
    a.extend(cuts.iter().filter(|&c| c != 0 && c != n - 1));
    a.push(n - 1);
    let cut_positions: Vec<usize> = cuts.iter().collect();

    let mut q: Vec<Vertex> = vec![0];
    for w in a.windows(2) {
        let block: VertexSet = (w[0]..=w[1]).collect();
        let (b, _) = h.induced_subgraph(&block)?;
        let seg = b
            .shortest_path(0, w[1] - w[0])
            .ok_or_else(|| Error::Invariant("block is disconnected".into()))?;
        q.extend(seg.vertices()[1..].iter().map(|&v| v + w[0]));
    }
    if !h.is_induced_path(&q) {
        return Err(Error::Invariant(
            "concatenated block paths do not form an induced path".into(),
        ));
    }

    let r = a.len() - 2;
    let enough = k == 1 || meets_guarantee(r + 2, n, k);
    let mut round = Round {
        k,
        order: n,
        cut_positions,
        q: q.clone(),
        accepted: enough,
        block: None,
        deleted: None,
    };
    if enough {
        rounds.push(round);
        return Ok(q);
    }

    // smallest block with (|B| - 1)/2 >= n^{1 - 1/k}, else the largest
    let threshold = BigUint::from(2u32).pow(k as u32) * BigUint::from(n).pow(k as u32 - 1);
    let sizes: Vec<usize> = a.windows(2).map(|w| w[1] - w[0] + 1).collect();
    let i = sizes
        .iter()
        .position(|&s| BigUint::from(s - 1).pow(k as u32) >= threshold)
        .unwrap_or_else(|| {
            let max = *sizes.iter().max().expect("at least one block");
            sizes.iter().position(|&s| s == max).unwrap()
        });
    let (start, end) = (a[i], a[i + 1]);
    let block: VertexSet = (start..=end).collect();
    let (b, _) = h.induced_subgraph(&block)?;
    let target = td2_value(&b)?;
    let mut deleted = None;
    for v in 0..b.n() {
        let (rest, _) = b.remove_vertices(&VertexSet::from([v]))?;
        if td2_value(&rest)? + 1 == target {
            deleted = Some(v);
            break;
        }
    }
    let v = deleted.ok_or_else(|| Error::Invariant("no vertex lowers the block's 2-treedepth".into()))?;
    // halves of the block's stretch of the path, in h's labels
    let left = start..start + v;
    let right = start + v + 1..end + 1;
    let keep = if left.len() >= right.len() { left } else { right };
    round.block = Some((start, end));
    round.deleted = Some(start + v);
    rounds.push(round);

    let seq: Vec<Vertex> = keep.collect();
    let (sub, labels) = restrict(h, &seq)?;
    let first = rounds.len();
    let inner = run(&sub, k - 1, rounds)?;
    for r in &mut rounds[first..] {
        r.q.iter_mut().for_each(|x| *x = labels[*x]);
        r.deleted = r.deleted.map(|x| labels[x]);
        r.block = r.block.map(|(s, e)| (labels[s], labels[e]));
    }
    Ok(inner.into_iter().map(|x| labels[x]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::chain_graph;
    use crate::paths::longest_induced_path;

    #[test]
    fn forest_returns_whole_path() {
        let p8 = Graph::path(8);
        let out = extract_induced_path(&p8, &Path((0..8).collect()), 1).unwrap();
        assert_eq!(out.path.vertices(), (0..8).collect::<Vec<_>>().as_slice());
        assert!(out.guarantee_met);
    }

    #[test]
    fn cycle_example() {
        let c6 = Graph::cycle(6);
        let out = extract_induced_path(&c6, &Path((0..6).collect()), 2).unwrap();
        assert!(c6.is_induced_path(out.path.vertices()));
        assert!(out.path.order() >= 2);
        assert!(out.guarantee_met);
    }

    #[test]
    fn chain_example() {
        let a = chain_graph(4, 2).unwrap();
        let out = extract_induced_path(&a.graph, &a.ham_path, 2).unwrap();
        assert!(a.graph.is_induced_path(out.path.vertices()));
        assert!(out.path.order() >= 2);
        let lip = longest_induced_path(&a.graph).unwrap().order();
        assert!(out.path.order() <= lip && lip <= 4);
        assert!(out.guarantee_met);
    }

    #[test]
    fn rejects_bad_inputs() {
        let k4 = Graph::complete(4);
        let p = Path(vec![0, 1, 2, 3]);
        // td2(K4) = 4 > 1 + 1
        assert!(extract_induced_path(&k4, &p, 1).is_err());
        assert!(extract_induced_path(&k4, &p, 3).is_ok());
        assert!(extract_induced_path(&Graph::path(3), &Path(vec![0, 2]), 2).is_err());
        assert!(extract_induced_path(&Graph::path(3), &Path(vec![]), 2).is_err());
        assert!(extract_induced_path(&Graph::path(3), &Path(vec![0]), 0).is_err());
    }

    #[test]
    fn follows_a_path_in_a_bigger_graph() {
        // path 4-3-2 inside a graph with extra vertices
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (2, 4)]).unwrap();
        let out = extract_induced_path(&g, &Path(vec![4, 3, 2]), 2).unwrap();
        assert!(g.is_induced_path(out.path.vertices()));
        assert!(out.path.vertices().iter().all(|v| [2, 3, 4].contains(v)));
    }

    #[test]
    fn guarantee_arithmetic() {
        assert!(meets_guarantee(2, 16, 2));
        assert!(!meets_guarantee(1, 5, 2));
        assert!(meets_guarantee(1, 4, 2));
    }
}
