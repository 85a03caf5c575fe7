//! Cut-vertices, blocks, and the forest of blocks.
//!
//! The forest of blocks of `G` has one node per block and one node per
//! cut-vertex, with an edge between a block and each cut-vertex it contains.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::paths;

pub(crate) struct Decomposition {
    /// Sorted vertex lists, ordered lexicographically.
    pub blocks: Vec<Vec<usize>>,
    /// Sorted.
    pub cut: Vec<usize>,
}

struct Frame<I> {
    v: usize,
    parent: usize,
    iter: I,
}

const NONE: usize = usize::MAX;

/// Iterative lowpoint DFS with an explicit edge stack. `vertices` lists the
/// vertices to decompose and `neighbors(v)` must stay inside that list.
/// Isolated vertices come out as singleton blocks.
pub(crate) fn decompose<V, N, I>(n: usize, vertices: V, neighbors: N) -> Decomposition
where
    V: IntoIterator<Item = usize>,
    N: Fn(usize) -> I,
    I: Iterator<Item = usize>,
{
    let mut disc = vec![NONE; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut stack: Vec<Frame<I>> = Vec::new();

    for root in vertices {
        if disc[root] != NONE {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        stack.push(Frame {
            v: root,
            parent: NONE,
            iter: neighbors(root),
        });
        while let Some(frame) = stack.last_mut() {
            let v = frame.v;
            let parent = frame.parent;
            if let Some(w) = frame.iter.next() {
                if w == parent {
                    continue;
                }
                if disc[w] == NONE {
                    edges.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push(Frame {
                        v: w,
                        parent: v,
                        iter: neighbors(w),
                    });
                } else if disc[w] < disc[v] {
                    edges.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if parent == NONE {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                if parent == root {
                    root_children += 1;
                } else {
                    is_cut[parent] = true;
                }
                let mut block = Vec::new();
                while let Some((a, b)) = edges.pop() {
                    block.push(a);
                    block.push(b);
                    if (a, b) == (parent, v) {
                        break;
                    }
                }
                block.sort_unstable();
                block.dedup();
                blocks.push(block);
            }
        }
        if root_children == 0 {
            blocks.push(vec![root]);
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }
    blocks.sort();
    let cut = (0..n).filter(|&v| is_cut[v]).collect();
    Decomposition { blocks, cut }
}

fn decompose_graph(g: &Graph) -> Decomposition {
    decompose(g.n(), g.vertices(), |v| g.neighbors(v).iter().copied())
}

/// Vertices whose removal increases the number of components.
pub fn cut_vertices(g: &Graph) -> VertexSet {
    decompose_graph(g).cut.into_iter().collect()
}

/// Blocks of `G`: maximal 2-connected subgraphs, cut edges, and isolated
/// vertices, ordered by their sorted vertex lists.
pub fn blocks(g: &Graph) -> Vec<VertexSet> {
    decompose_graph(g)
        .blocks
        .into_iter()
        .map(VertexSet::from)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockForest {
    pub blocks: Vec<VertexSet>,
    pub cuts: Vec<Vertex>,
    /// `(block index, cut index)` pairs.
    pub edges: Vec<(usize, usize)>,
}

pub fn block_forest(g: &Graph) -> BlockForest {
    let d = decompose_graph(g);
    let blocks: Vec<VertexSet> = d.blocks.into_iter().map(VertexSet::from).collect();
    let cuts = d.cut;
    let mut edges = Vec::new();
    for (bi, b) in blocks.iter().enumerate() {
        for (ci, &c) in cuts.iter().enumerate() {
            if b.contains(c) {
                edges.push((bi, ci));
            }
        }
    }
    BlockForest {
        blocks,
        cuts,
        edges,
    }
}

impl BlockForest {
    pub fn node_count(&self) -> usize {
        self.blocks.len() + self.cuts.len()
    }

    /// The forest as a plain graph: blocks are nodes `0..b`, cut-vertices
    /// follow as `b..b+c`.
    pub fn as_graph(&self) -> Graph {
        let b = self.blocks.len();
        Graph::new(
            self.node_count(),
            self.edges.iter().map(|&(bi, ci)| (bi, b + ci)),
        )
        .expect("forest edges are in range")
    }

    pub fn is_forest(&self) -> bool {
        let g = self.as_graph();
        g.m() + g.components().len() == g.n()
    }

    pub fn is_tree(&self) -> bool {
        self.is_forest() && self.as_graph().components().len() == 1
    }

    /// Node indices (in [`Self::as_graph`] numbering) of degree at most one.
    pub fn leaves(&self) -> Vec<usize> {
        let g = self.as_graph();
        g.vertices().filter(|&v| g.degree(v) <= 1).collect()
    }

    pub fn is_block_node(&self, node: usize) -> bool {
        node < self.blocks.len()
    }

    /// Node counts of all maximal paths, i.e. leaf-to-leaf paths plus
    /// isolated nodes.
    pub fn maximal_path_orders(&self) -> Vec<usize> {
        let g = self.as_graph();
        let leaves = self.leaves();
        let mut out = Vec::new();
        for (i, &a) in leaves.iter().enumerate() {
            if g.degree(a) == 0 {
                out.push(1);
                continue;
            }
            let dist = g.distances(a);
            for &b in &leaves[i + 1..] {
                if let Some(d) = dist[b] {
                    out.push(d + 1);
                }
            }
        }
        out
    }
}

/// Diameter of a forest of blocks that is a tree.
pub fn forest_diameter(f: &BlockForest) -> Result<usize> {
    if !f.is_tree() {
        return invalid("forest of blocks is not a tree (graph disconnected or null)");
    }
    f.as_graph().diameter()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureItem {
    pub item: u8,
    pub applicable: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub p4_free: bool,
    pub p5_free: bool,
    pub forest_diameter: usize,
    pub items: Vec<StructureItem>,
}

impl StructureReport {
    pub fn violated(&self) -> Vec<u8> {
        self.items
            .iter()
            .filter(|i| i.applicable && !i.holds)
            .map(|i| i.item)
            .collect()
    }

    pub fn any_applicable(&self) -> bool {
        self.items.iter().any(|i| i.applicable)
    }
}

/// `v` is adjacent to every other vertex of `block`.
fn apex_in(g: &Graph, v: Vertex, block: &VertexSet) -> bool {
    block.iter().all(|u| u == v || g.has_edge(u, v))
}

/// Checks the block structure forced by excluding induced `P4` or `P5` in a
/// connected graph:
///
/// 1. `P4`-free, forest diameter 2: the unique cut-vertex is an apex of `G`.
/// 2. `P5`-free, forest diameter 2: the cut-vertex fails to be an apex in at
///    most one block.
/// 3. `P5`-free, forest diameter 4: in every leaf block, its unique
///    cut-vertex is an apex of that block.
/// 4. `P5`-free, forest diameter 4: the cut-vertices induce a clique.
///
/// Items whose hypotheses fail are reported as not applicable.
pub fn verify_p4p5_structure(g: &Graph) -> Result<StructureReport> {
    if !g.is_connected() {
        return invalid("structure check needs a connected graph");
    }
    let bits = g.to_bits("P4/P5 structure check")?;
    let p4_free = paths::is_pt_free_bits(&bits, 4);
    let p5_free = paths::is_pt_free_bits(&bits, 5);
    let forest = block_forest(g);
    let diam = forest_diameter(&forest)?;

    let mut items = Vec::new();

    let star_case = diam == 2;
    let (item1, item2) = if star_case {
        let c = forest.cuts[0];
        let non_apex_blocks = forest
            .blocks
            .iter()
            .filter(|b| !apex_in(g, c, b))
            .count();
        (g.is_apex(c)?, non_apex_blocks <= 1)
    } else {
        (true, true)
    };
    items.push(StructureItem {
        item: 1,
        applicable: p4_free && star_case,
        holds: item1,
    });
    items.push(StructureItem {
        item: 2,
        applicable: p5_free && star_case,
        holds: item2,
    });

    let central_case = diam == 4;
    let (item3, item4) = if central_case {
        let leaf_ok = forest.blocks.iter().all(|b| {
            let inside: Vec<_> = forest.cuts.iter().filter(|&&c| b.contains(c)).collect();
            inside.len() != 1 || apex_in(g, *inside[0], b)
        });
        let cuts = &forest.cuts;
        let complete = cuts
            .iter()
            .enumerate()
            .all(|(i, &a)| cuts[i + 1..].iter().all(|&b| g.has_edge(a, b)));
        (leaf_ok, complete)
    } else {
        (true, true)
    };
    items.push(StructureItem {
        item: 3,
        applicable: p5_free && central_case,
        holds: item3,
    });
    items.push(StructureItem {
        item: 4,
        applicable: p5_free && central_case,
        holds: item4,
    });

    Ok(StructureReport {
        p4_free,
        p5_free,
        forest_diameter: diam,
        items,
    })
}
