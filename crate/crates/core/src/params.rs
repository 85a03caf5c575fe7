//! Exact treedepth, 2-treedepth, relative treedepth `td(G, S)`, and
//! pathwidth, with certificates that replay against the recursive
//! definitions.
//!
//! Depth parameters use a memoised branch-and-bound over vertex subsets:
//! `td` and `td(G, S)` memoise per connected subset, `td2` per block. The
//! lower bound at every state is `degeneracy + 1` (treewidth + 1 bounds
//! both parameters from below). Candidate vertices are tried in index
//! order and only a strict improvement replaces the incumbent, so the
//! recorded vertex is the smallest-index minimiser, except when the state
//! has an apex: then the smallest apex is taken directly, which is always
//! optimal.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bits::{bit, iter_mask, BitGraph, Mask};
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Largest graph accepted by the exact depth solvers and by [`pathwidth`].
pub const EXACT_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Td,
    Td2,
    Tds,
}

/// One deletion step: `vertex` is removed from `scope` and each child
/// dismantles one part of what remains (a component for `td` and
/// `td(G, S)`, a block for `td2`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertNode {
    pub scope: VertexSet,
    pub vertex: Vertex,
    pub children: Vec<CertNode>,
}

impl CertNode {
    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(CertNode::depth).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthCertificate {
    pub kind: Measure,
    pub claimed_value: usize,
    /// The prescribed set, for `td(G, S)` only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relative_to: Option<VertexSet>,
    pub roots: Vec<CertNode>,
}

impl DepthCertificate {
    pub fn depth(&self) -> usize {
        self.roots.iter().map(CertNode::depth).max().unwrap_or(0)
    }
}

fn depth_bits(g: &Graph, what: &'static str) -> Result<BitGraph> {
    if g.n() > EXACT_LIMIT {
        return Err(Error::Capacity {
            what,
            limit: EXACT_LIMIT,
            got: g.n(),
        });
    }
    g.to_bits(what)
}

#[derive(Debug, Clone, Copy, Default)]
struct Entry {
    lb: u32,
    exact: Option<(u32, u8)>,
}

fn lowest(mask: Mask) -> usize {
    mask.trailing_zeros() as usize
}

/// `td(G[x], S ∩ x)` for connected `x`; `td` is the case `S = V(G)`.
pub(crate) struct RelativeSolver<'a> {
    g: &'a BitGraph,
    s: Mask,
    memo: HashMap<Mask, Entry>,
}

impl<'a> RelativeSolver<'a> {
    pub(crate) fn new(g: &'a BitGraph, s: Mask) -> Self {
        Self {
            g,
            s,
            memo: HashMap::new(),
        }
    }

    /// Parts of `w` that still need dismantling.
    fn parts(&self, w: Mask) -> Vec<Mask> {
        self.g
            .components(w)
            .into_iter()
            .filter(|&c| c & self.s != 0)
            .collect()
    }

    /// Exact value if below `ub`; otherwise some value `>= ub` that bounds
    /// the true value from below.
    fn solve(&mut self, x: Mask, ub: u32) -> u32 {
        let entry = self.memo.get(&x).copied().unwrap_or_default();
        if let Some((v, _)) = entry.exact {
            return v;
        }
        if entry.lb >= ub {
            return entry.lb;
        }
        let sx = x & self.s;
        if x.count_ones() == 1 {
            return self.settle(x, 1, lowest(x));
        }
        let full = sx == x;
        if full && self.g.is_clique(x) {
            return self.settle(x, x.count_ones(), lowest(x));
        }
        let lb = entry
            .lb
            .max(self.g.degeneracy(sx) as u32 + 1)
            .max(1);
        if lb >= ub {
            self.memo.insert(x, Entry { lb, exact: None });
            return lb;
        }
        let apexes = if full { self.g.apexes(x) } else { 0 };
        let candidates = if apexes != 0 { apexes & apexes.wrapping_neg() } else { x };

        let mut best = ub;
        let mut choice = None;
        for v in iter_mask(candidates) {
            if best <= lb {
                break;
            }
            let mut worst = 0;
            for c in self.parts(x & !bit(v)) {
                worst = worst.max(self.solve(c, best - 1));
                if worst + 1 >= best {
                    break;
                }
            }
            if worst + 1 < best {
                best = worst + 1;
                choice = Some(v);
            }
        }
        match choice {
            Some(v) => self.settle(x, best, v),
            None => {
                self.memo.insert(
                    x,
                    Entry {
                        lb: lb.max(ub),
                        exact: None,
                    },
                );
                lb.max(ub)
            }
        }
    }

    fn settle(&mut self, x: Mask, value: u32, v: usize) -> u32 {
        self.memo.insert(
            x,
            Entry {
                lb: value,
                exact: Some((value, v as u8)),
            },
        );
        value
    }

    pub(crate) fn exact(&mut self, x: Mask) -> (u32, usize) {
        let ub = (x & self.s).count_ones() + 1;
        self.solve(x, ub);
        let (v, c) = self.memo[&x].exact.expect("search below |S|+1 is exact");
        (v, c as usize)
    }

    /// Value over the whole vertex set `w` (any number of components).
    pub(crate) fn value(&mut self, w: Mask) -> u32 {
        self.parts(w)
            .into_iter()
            .map(|c| self.exact(c).0)
            .max()
            .unwrap_or(0)
    }

    fn node(&mut self, x: Mask) -> CertNode {
        let (_, v) = self.exact(x);
        let children = self
            .parts(x & !bit(v))
            .into_iter()
            .map(|c| self.node(c))
            .collect();
        CertNode {
            scope: VertexSet::from_mask(x),
            vertex: v,
            children,
        }
    }

    pub(crate) fn forest(&mut self, w: Mask) -> Vec<CertNode> {
        self.parts(w).into_iter().map(|c| self.node(c)).collect()
    }
}

/// `td2` with memo keyed by block masks.
pub(crate) struct BlockSolver<'a> {
    g: &'a BitGraph,
    memo: HashMap<Mask, Entry>,
}

impl<'a> BlockSolver<'a> {
    pub(crate) fn new(g: &'a BitGraph) -> Self {
        Self {
            g,
            memo: HashMap::new(),
        }
    }

    fn parts(&self, w: Mask) -> Vec<Mask> {
        if w == 0 {
            Vec::new()
        } else {
            self.g.blocks(w).0
        }
    }

    /// `td2(G[w])` if below `ub`, else a lower bound `>= ub`.
    fn any(&mut self, w: Mask, ub: u32) -> u32 {
        let mut worst = 0;
        for b in self.parts(w) {
            worst = worst.max(self.block(b, ub));
            if worst >= ub {
                break;
            }
        }
        worst
    }

    fn block(&mut self, b: Mask, ub: u32) -> u32 {
        let entry = self.memo.get(&b).copied().unwrap_or_default();
        if let Some((v, _)) = entry.exact {
            return v;
        }
        if entry.lb >= ub {
            return entry.lb;
        }
        let size = b.count_ones();
        if size <= 2 || self.g.is_clique(b) {
            return self.settle(b, size, lowest(b));
        }
        let lb = entry.lb.max(self.g.degeneracy(b) as u32 + 1);
        if lb >= ub {
            self.memo.insert(b, Entry { lb, exact: None });
            return lb;
        }
        let apexes = self.g.apexes(b);
        let candidates = if apexes != 0 { apexes & apexes.wrapping_neg() } else { b };

        let mut best = ub;
        let mut choice = None;
        for v in iter_mask(candidates) {
            if best <= lb {
                break;
            }
            let d = self.any(b & !bit(v), best - 1);
            if d + 1 < best {
                best = d + 1;
                choice = Some(v);
            }
        }
        match choice {
            Some(v) => self.settle(b, best, v),
            None => {
                self.memo.insert(
                    b,
                    Entry {
                        lb: lb.max(ub),
                        exact: None,
                    },
                );
                lb.max(ub)
            }
        }
    }

    fn settle(&mut self, b: Mask, value: u32, v: usize) -> u32 {
        self.memo.insert(
            b,
            Entry {
                lb: value,
                exact: Some((value, v as u8)),
            },
        );
        value
    }

    pub(crate) fn exact_block(&mut self, b: Mask) -> (u32, usize) {
        self.block(b, b.count_ones() + 1);
        let (v, c) = self.memo[&b].exact.expect("search below |B|+1 is exact");
        (v, c as usize)
    }

    pub(crate) fn value(&mut self, w: Mask) -> u32 {
        self.parts(w)
            .into_iter()
            .map(|b| self.exact_block(b).0)
            .max()
            .unwrap_or(0)
    }

    fn node(&mut self, b: Mask) -> CertNode {
        let (_, v) = self.exact_block(b);
        let children = self
            .parts(b & !bit(v))
            .into_iter()
            .map(|c| self.node(c))
            .collect();
        CertNode {
            scope: VertexSet::from_mask(b),
            vertex: v,
            children,
        }
    }

    pub(crate) fn forest(&mut self, w: Mask) -> Vec<CertNode> {
        self.parts(w).into_iter().map(|b| self.node(b)).collect()
    }
}

/// Exact treedepth with an elimination-forest certificate.
pub fn treedepth(g: &Graph) -> Result<(usize, DepthCertificate)> {
    let bits = depth_bits(g, "treedepth")?;
    let mut solver = RelativeSolver::new(&bits, bits.full());
    let roots = solver.forest(bits.full());
    let cert = DepthCertificate {
        kind: Measure::Td,
        claimed_value: roots.iter().map(CertNode::depth).max().unwrap_or(0),
        relative_to: None,
        roots,
    };
    Ok((cert.claimed_value, cert))
}

/// Exact 2-treedepth with a block-recursive certificate.
pub fn treedepth2(g: &Graph) -> Result<(usize, DepthCertificate)> {
    let bits = depth_bits(g, "2-treedepth")?;
    let mut solver = BlockSolver::new(&bits);
    let roots = solver.forest(bits.full());
    let cert = DepthCertificate {
        kind: Measure::Td2,
        claimed_value: roots.iter().map(CertNode::depth).max().unwrap_or(0),
        relative_to: None,
        roots,
    };
    Ok((cert.claimed_value, cert))
}

/// Exact `td(G, S)`. Deletions may use any vertex of `G`, not only `S`.
pub fn treedepth_relative(g: &Graph, s: &VertexSet) -> Result<(usize, DepthCertificate)> {
    g.check_subset(s)?;
    let bits = depth_bits(g, "relative treedepth")?;
    let mask = s.to_mask().expect("checked against n <= 64");
    let mut solver = RelativeSolver::new(&bits, mask);
    let roots = solver.forest(bits.full());
    let cert = DepthCertificate {
        kind: Measure::Tds,
        claimed_value: roots.iter().map(CertNode::depth).max().unwrap_or(0),
        relative_to: Some(s.clone()),
        roots,
    };
    Ok((cert.claimed_value, cert))
}

/// Value-only variants, for sweeps that do not need certificates.
pub fn td_value(g: &Graph) -> Result<usize> {
    let bits = depth_bits(g, "treedepth")?;
    Ok(RelativeSolver::new(&bits, bits.full()).value(bits.full()) as usize)
}

pub fn td2_value(g: &Graph) -> Result<usize> {
    let bits = depth_bits(g, "2-treedepth")?;
    Ok(BlockSolver::new(&bits).value(bits.full()) as usize)
}

pub fn tds_value(g: &Graph, s: &VertexSet) -> Result<usize> {
    g.check_subset(s)?;
    let bits = depth_bits(g, "relative treedepth")?;
    let mask = s.to_mask().expect("checked against n <= 64");
    Ok(RelativeSolver::new(&bits, mask).value(bits.full()) as usize)
}

/// Replays `cert` against `g`: at every step the children must be exactly
/// the parts (components meeting `S`, or blocks) left after deleting the
/// node's vertex, and the resulting depth must equal `claimed_value`.
pub fn check_certificate(g: &Graph, cert: &DepthCertificate) -> bool {
    let Ok(bits) = depth_bits(g, "certificate check") else {
        return false;
    };
    let s = match (cert.kind, &cert.relative_to) {
        (Measure::Tds, Some(s)) if g.check_subset(s).is_ok() => s.to_mask().unwrap(),
        (Measure::Td | Measure::Td2, None) => bits.full(),
        _ => return false,
    };
    let parts = |w: Mask| -> Vec<Mask> {
        match cert.kind {
            Measure::Td2 if w == 0 => Vec::new(),
            Measure::Td2 => bits.blocks(w).0,
            _ => bits
                .components(w)
                .into_iter()
                .filter(|&c| c & s != 0)
                .collect(),
        }
    };
    fn replay(nodes: &[CertNode], w: Mask, parts: &dyn Fn(Mask) -> Vec<Mask>) -> Option<usize> {
        let expected = parts(w);
        if expected.len() != nodes.len() {
            return None;
        }
        let mut depth = 0;
        for (node, &scope) in nodes.iter().zip(&expected) {
            if node.vertex >= 64
                || node.scope.to_mask() != Some(scope)
                || scope & bit(node.vertex) == 0
            {
                return None;
            }
            let below = replay(&node.children, scope & !bit(node.vertex), parts)?;
            depth = depth.max(below + 1);
        }
        Some(depth)
    }
    replay(&cert.roots, bits.full(), &parts) == Some(cert.claimed_value)
}

/// A set `X ⊇ S'` with `td(G, S) <= td(G, S') + td(G - X, S \ X)`, built by
/// repeatedly deleting, in every component that still meets `S'`, a vertex
/// that lowers `td(C, S' ∩ C)` by one.
pub fn elimination_set(g: &Graph, s: &VertexSet, s_prime: &VertexSet) -> Result<VertexSet> {
    g.check_subset(s)?;
    g.check_subset(s_prime)?;
    let bits = depth_bits(g, "elimination set")?;
    let sp = s_prime.to_mask().unwrap();
    let mut solver = RelativeSolver::new(&bits, sp);
    let mut alive = bits.full();
    let mut x: Mask = 0;
    loop {
        let comps = solver.parts(alive);
        if comps.is_empty() {
            break;
        }
        for c in comps {
            let (_, v) = solver.exact(c);
            x |= bit(v);
        }
        alive = bits.full() & !x;
    }
    if sp & !x != 0 {
        return Err(Error::Invariant("elimination set misses S'".into()));
    }
    Ok(VertexSet::from_mask(x))
}

fn boundary(g: &BitGraph, scope: Mask, prefix: Mask) -> u32 {
    iter_mask(prefix)
        .filter(|&u| g.nbrs(u) & scope & !prefix != 0)
        .count() as u32
}

/// Layout of `scope` with vertex separation at most `width`, if one exists.
/// Prefixes are explored depth-first; a vertex whose neighbours are all
/// already placed is always placed next, which never increases any later
/// boundary.
fn separation_layout(g: &BitGraph, scope: Mask, width: u32) -> Option<Vec<usize>> {
    let mut parent: HashMap<Mask, Mask> = HashMap::new();
    parent.insert(0, 0);
    let mut stack = vec![0u64];
    while let Some(prefix) = stack.pop() {
        if prefix == scope {
            let mut order = Vec::new();
            let mut cur = prefix;
            while cur != 0 {
                let prev = parent[&cur];
                order.push(lowest(cur & !prev));
                cur = prev;
            }
            order.reverse();
            return Some(order);
        }
        let rest = scope & !prefix;
        let forced = iter_mask(rest).find(|&v| g.nbrs(v) & scope & !prefix == 0);
        let moves: Vec<usize> = match forced {
            Some(v) => vec![v],
            None => iter_mask(rest).collect(),
        };
        for v in moves.into_iter().rev() {
            let next = prefix | bit(v);
            if parent.contains_key(&next) || boundary(g, scope, next) > width {
                continue;
            }
            parent.insert(next, prefix);
            stack.push(next);
        }
    }
    None
}

/// Exact pathwidth with a layout of minimum vertex separation.
pub fn pathwidth_layout(g: &Graph) -> Result<(usize, Vec<Vertex>)> {
    let bits = depth_bits(g, "pathwidth")?;
    let mut width = 0;
    let mut layout = Vec::with_capacity(g.n());
    for c in bits.components(bits.full()) {
        let mut w = bits.degeneracy(c) as u32;
        let order = loop {
            if let Some(order) = separation_layout(&bits, c, w) {
                break order;
            }
            w += 1;
        };
        width = width.max(w as usize);
        layout.extend(order);
    }
    Ok((width, layout))
}

/// Exact pathwidth, computed as the vertex separation number.
pub fn pathwidth(g: &Graph) -> Result<usize> {
    Ok(pathwidth_layout(g)?.0)
}

/// Vertex separation of a given layout.
pub fn layout_width(g: &Graph, layout: &[Vertex]) -> Result<usize> {
    let bits = depth_bits(g, "layout width")?;
    if layout.len() != g.n() || VertexSet::from(layout.to_vec()).len() != g.n() {
        return invalid("layout is not a permutation of the vertices");
    }
    let mut prefix = 0;
    let mut width = 0;
    for &v in layout {
        prefix |= bit(v);
        width = width.max(boundary(&bits, bits.full(), prefix));
    }
    Ok(width as usize)
}
