//! Component-wise connectivity and S-cores.
//!
//! An S-core of `G` is the subgraph induced by a set of blocks whose union
//! contains `S` and meets every component of `G` in a connected set (or not
//! at all). Relative treedepth `td(G, S)` does not change when `G` is
//! replaced by any of its S-cores.

use crate::blocks;
use crate::error::{invalid, Result};
use crate::graph::{Graph, VertexSet};

/// For every component `C` of `G`, `H ∩ C` is empty or induces a connected
/// subgraph.
pub fn is_component_wise_connected(g: &Graph, h: &VertexSet) -> Result<bool> {
    g.check_subset(h)?;
    for c in g.components() {
        let slice = h.intersection(&c);
        if !slice.is_empty() && !g.induced_subgraph(&slice)?.0.is_connected() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn union_of(all: &[VertexSet], chosen: &[usize]) -> VertexSet {
    chosen.iter().flat_map(|&i| all[i].iter()).collect()
}

fn core_holds(g: &Graph, all: &[VertexSet], s: &VertexSet, chosen: &[usize]) -> Result<bool> {
    let h = union_of(all, chosen);
    Ok(s.is_subset(&h) && is_component_wise_connected(g, &h)?)
}

/// Whether the blocks with indices `chosen` (into [`blocks::blocks`]) induce
/// an S-core.
pub fn is_s_core(g: &Graph, s: &VertexSet, chosen: &[usize]) -> Result<bool> {
    g.check_subset(s)?;
    let all = blocks::blocks(g);
    if let Some(&i) = chosen.iter().find(|&&i| i >= all.len()) {
        return invalid(format!("block index {i} out of range ({} blocks)", all.len()));
    }
    core_holds(g, &all, s, chosen)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SCore {
    /// `G[V(core)]`, renumbered in increasing vertex order.
    pub graph: Graph,
    /// Block indices into [`blocks::blocks`] of the ambient graph.
    pub blocks: Vec<usize>,
    pub vertices: VertexSet,
}

impl SCore {
    /// `S` renumbered into the core's vertex indices.
    pub fn map_set(&self, s: &VertexSet) -> VertexSet {
        s.iter()
            .filter_map(|v| self.vertices.as_slice().binary_search(&v).ok())
            .collect()
    }
}

/// Leaf block of the chosen family: it shares at most one vertex with the
/// union of the other chosen blocks.
fn attachment(all: &[VertexSet], chosen: &[usize], i: usize) -> Option<VertexSet> {
    let others = union_of(all, &chosen.iter().copied().filter(|&j| j != i).collect::<Vec<_>>());
    let shared = all[i].intersection(&others);
    (shared.len() <= 1).then_some(shared)
}

/// An inclusion-minimal S-core.
///
/// Starts from every block of every component that meets `S`, prunes leaf
/// blocks whose vertices other than their attaching cut-vertex avoid `S`
/// until none is left, then drops any block whose removal still leaves an
/// S-core.
pub fn minimal_s_core(g: &Graph, s: &VertexSet) -> Result<SCore> {
    g.check_subset(s)?;
    let all = blocks::blocks(g);
    let touched: Vec<VertexSet> = g
        .components()
        .into_iter()
        .filter(|c| c.iter().any(|v| s.contains(v)))
        .collect();
    let mut chosen: Vec<usize> = (0..all.len())
        .filter(|&i| touched.iter().any(|c| all[i].is_subset(c)))
        .collect();

    // leaf pruning
    loop {
        let prunable = chosen.iter().copied().find(|&i| {
            attachment(&all, &chosen, i).is_some_and(|shared| {
                let private = all[i].difference(&shared);
                // a lone block with nothing shared is its component's whole core
                !shared.is_empty() && private.iter().all(|v| !s.contains(v))
            })
        });
        match prunable {
            Some(i) => chosen.retain(|&j| j != i),
            None => break,
        }
    }

    // fixed-point pass for anything still redundant
    loop {
        let mut dropped = false;
        for &i in &chosen.clone() {
            let without: Vec<usize> = chosen.iter().copied().filter(|&j| j != i).collect();
            if core_holds(g, &all, s, &without)? {
                chosen = without;
                dropped = true;
            }
        }
        if !dropped {
            break;
        }
    }

    let vertices = union_of(&all, &chosen);
    let (graph, _) = g.induced_subgraph(&vertices)?;
    Ok(SCore {
        graph,
        blocks: chosen,
        vertices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::tds_value;

    fn bowtie() -> Graph {
        Graph::new(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap()
    }

    #[test]
    fn component_wise_examples() {
        let p4 = Graph::path(4);
        assert!(is_component_wise_connected(&p4, &VertexSet::from([0, 1])).unwrap());
        assert!(!is_component_wise_connected(&p4, &VertexSet::from([0, 3])).unwrap());
        let g = Graph::new(4, [(0, 1), (1, 2)]).unwrap();
        assert!(is_component_wise_connected(&g, &VertexSet::from([0, 1, 3])).unwrap());
        assert!(!is_component_wise_connected(&g, &VertexSet::from([0, 2, 3])).unwrap());
    }

    #[test]
    fn s_core_examples() {
        let p5 = Graph::path(5);
        let ends = VertexSet::from([0, 4]);
        assert!(is_s_core(&p5, &ends, &[0, 1, 2, 3]).unwrap());
        // dropping an inner edge block keeps every vertex, so the union
        // still induces the whole path
        for (drop, expect) in [(0, false), (1, true), (2, true), (3, false)] {
            let rest: Vec<usize> = (0..4).filter(|&i| i != drop).collect();
            assert_eq!(is_s_core(&p5, &ends, &rest).unwrap(), expect);
        }
        assert!(!is_s_core(&p5, &ends, &[0, 3]).unwrap());
        let bt = bowtie();
        assert!(is_s_core(&bt, &VertexSet::from([1, 2]), &[0]).unwrap());
        assert!(is_s_core(&bt, &bt.all_vertices(), &[0, 1]).unwrap());
        assert!(is_s_core(&bt, &VertexSet::from([1]), &[5]).is_err());
    }

    #[test]
    fn minimal_core_examples() {
        let p5 = Graph::path(5);
        let core = minimal_s_core(&p5, &VertexSet::from([1, 2])).unwrap();
        assert_eq!(core.blocks, vec![1]);
        assert_eq!(core.vertices, VertexSet::from([1, 2]));

        let bt = bowtie();
        let core = minimal_s_core(&bt, &VertexSet::from([1, 3])).unwrap();
        assert_eq!(core.blocks, vec![0, 1]);

        let c = Graph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let core = minimal_s_core(&c, &c.all_vertices()).unwrap();
        assert_eq!(core.vertices, c.all_vertices());
        assert_eq!(core.blocks.len(), 3);
        for drop in &core.blocks {
            let rest: Vec<usize> = core.blocks.iter().copied().filter(|b| b != drop).collect();
            assert!(!is_s_core(&c, &c.all_vertices(), &rest).unwrap());
        }
    }

    #[test]
    fn cut_vertex_alone_needs_one_block() {
        let bt = bowtie();
        let core = minimal_s_core(&bt, &VertexSet::from([0])).unwrap();
        assert_eq!(core.blocks.len(), 1);
    }

    #[test]
    fn components_without_s_are_dropped() {
        let g = Graph::new(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        let core = minimal_s_core(&g, &VertexSet::from([0])).unwrap();
        assert_eq!(core.vertices, VertexSet::from([0, 1]));
        let empty = minimal_s_core(&g, &VertexSet::new()).unwrap();
        assert!(empty.graph.is_null());
    }

    #[test]
    fn core_preserves_relative_treedepth_small() {
        let p5 = Graph::path(5);
        for code in 0u64..32 {
            let s = VertexSet::from_mask(code);
            let core = minimal_s_core(&p5, &s).unwrap();
            assert_eq!(
                tds_value(&p5, &s).unwrap(),
                tds_value(&core.graph, &core.map_set(&s)).unwrap()
            );
        }
    }
}
