//! Exact longest path, longest induced path, and induced-path freeness.
//!
//! Induced paths are grown from one endpoint while maintaining the set of
//! vertices that may no longer join the path: the path itself plus the
//! closed neighbourhoods of every path vertex except the current tip.

use crate::bits::{bit, iter_mask, BitGraph, Mask};
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, VertexSet};

/// Largest graph accepted by [`longest_path`] and [`hamiltonian_path`].
pub const LONGEST_PATH_LIMIT: usize = 32;

fn bits_for(g: &Graph, what: &'static str, limit: usize) -> Result<BitGraph> {
    if g.n() > limit {
        return Err(Error::Capacity {
            what,
            limit,
            got: g.n(),
        });
    }
    g.to_bits(what)
}

fn reach_from(g: &BitGraph, seeds: Mask, allowed: Mask) -> Mask {
    let mut seen = seeds & allowed;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in iter_mask(frontier) {
            next |= g.nbrs(v);
        }
        next &= allowed & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

struct InducedSearch<'a> {
    g: &'a BitGraph,
    /// Admissible endpoints (both ends must lie here).
    ends: Mask,
    path: Vec<usize>,
    best: Vec<usize>,
    /// Stop as soon as a path of this order is recorded.
    target: usize,
}

impl InducedSearch<'_> {
    fn done(&self) -> bool {
        self.best.len() >= self.target
    }

    fn grow(&mut self, forbidden: Mask) {
        let tip = *self.path.last().unwrap();
        if self.ends & bit(tip) != 0 && self.path.len() > self.best.len() {
            self.best = self.path.clone();
            if self.done() {
                return;
            }
        }
        let allowed = self.g.full() & !forbidden;
        let cand = self.g.nbrs(tip) & allowed;
        if cand == 0 {
            return;
        }
        let horizon = reach_from(self.g, cand, allowed).count_ones() as usize;
        if self.path.len() + horizon <= self.best.len() {
            return;
        }
        let next_forbidden = forbidden | self.g.nbrs(tip) | bit(tip);
        for w in iter_mask(cand) {
            self.path.push(w);
            self.grow(next_forbidden);
            self.path.pop();
            if self.done() {
                return;
            }
        }
    }
}

/// Longest induced path whose endpoints both lie in `ends`, stopping early
/// once a path of order `target` is found.
fn induced_search(g: &BitGraph, ends: Mask, target: usize) -> Option<Vec<usize>> {
    let mut search = InducedSearch {
        g,
        ends,
        path: Vec::new(),
        best: Vec::new(),
        target,
    };
    for s in iter_mask(ends) {
        search.path.push(s);
        search.grow(bit(s));
        search.path.pop();
        if search.done() {
            break;
        }
    }
    (!search.best.is_empty()).then_some(search.best)
}

pub(crate) fn longest_induced_path_bits(g: &BitGraph) -> Vec<usize> {
    induced_search(g, g.full(), usize::MAX).unwrap_or_default()
}

pub(crate) fn is_pt_free_bits(g: &BitGraph, t: usize) -> bool {
    if t == 0 {
        return false;
    }
    induced_search(g, g.full(), t).map_or(0, |p| p.len()) < t
}

/// A maximum-order induced path; the empty path for the null graph.
pub fn longest_induced_path(g: &Graph) -> Result<Path> {
    let bits = g.to_bits("longest induced path")?;
    Ok(Path(longest_induced_path_bits(&bits)))
}

/// No induced path on `t` vertices. Every graph contains `P_0`.
pub fn is_pt_free(g: &Graph, t: usize) -> Result<bool> {
    let bits = g.to_bits("induced path freeness")?;
    Ok(is_pt_free_bits(&bits, t))
}

/// A maximum-order induced path with both endpoints in `s`, or `None` when
/// `s` is empty.
pub fn longest_induced_s_path(g: &Graph, s: &VertexSet) -> Result<Option<Path>> {
    g.check_subset(s)?;
    let bits = g.to_bits("longest induced S-path")?;
    let ends = s.to_mask().unwrap_or(0);
    Ok(induced_search(&bits, ends, usize::MAX).map(Path))
}

struct PathSearch<'a> {
    g: &'a BitGraph,
    path: Vec<usize>,
    best: Vec<usize>,
    target: usize,
}

impl PathSearch<'_> {
    fn grow(&mut self, visited: Mask) {
        if self.path.len() > self.best.len() {
            self.best = self.path.clone();
        }
        if self.best.len() >= self.target {
            return;
        }
        let tip = *self.path.last().unwrap();
        let free = self.g.full() & !visited;
        let cand = self.g.nbrs(tip) & free;
        if cand == 0 {
            return;
        }
        let horizon = reach_from(self.g, cand, free).count_ones() as usize;
        if self.path.len() + horizon <= self.best.len() {
            return;
        }
        // fewest onward options first
        let mut order: Vec<usize> = iter_mask(cand).collect();
        order.sort_by_key(|&w| (self.g.nbrs(w) & free).count_ones());
        for w in order {
            self.path.push(w);
            self.grow(visited | bit(w));
            self.path.pop();
            if self.best.len() >= self.target {
                return;
            }
        }
    }
}

fn path_search(g: &BitGraph, target: usize) -> Vec<usize> {
    let cap = g
        .components(g.full())
        .iter()
        .map(|c| c.count_ones() as usize)
        .max()
        .unwrap_or(0)
        .min(target);
    let mut search = PathSearch {
        g,
        path: Vec::new(),
        best: Vec::new(),
        target: cap,
    };
    for s in 0..g.n() {
        search.path.push(s);
        search.grow(bit(s));
        search.path.pop();
        if search.best.len() >= cap {
            break;
        }
    }
    search.best
}

/// A maximum-order path subgraph.
pub fn longest_path(g: &Graph) -> Result<Path> {
    let bits = bits_for(g, "longest path", LONGEST_PATH_LIMIT)?;
    Ok(Path(path_search(&bits, usize::MAX)))
}

/// A Hamiltonian path if one exists. The null graph has the empty one.
pub fn hamiltonian_path(g: &Graph) -> Result<Option<Path>> {
    let bits = bits_for(g, "Hamiltonian path", LONGEST_PATH_LIMIT)?;
    let p = path_search(&bits, g.n());
    Ok((p.len() == g.n()).then_some(Path(p)))
}
