//! Bitmask adjacency for graphs on at most 64 vertices.
//!
//! Every exact solver works on subsets encoded as `u64`, so vertex sets are
//! cheap memo keys.

pub type Mask = u64;

pub fn low_mask(n: usize) -> Mask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn bit(v: usize) -> Mask {
    1u64 << v
}

pub fn iter_mask(mut mask: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitGraph {
    adj: Vec<Mask>,
}

impl BitGraph {
    pub(crate) fn from_masks(adj: Vec<Mask>) -> Self {
        debug_assert!(adj.len() <= 64);
        Self { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn full(&self) -> Mask {
        low_mask(self.n())
    }

    #[inline]
    pub fn nbrs(&self, v: usize) -> Mask {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Vertices of `allowed` reachable from `start` (inclusive) inside `allowed`.
    pub fn reach(&self, start: usize, allowed: Mask) -> Mask {
        let mut seen = bit(start) & allowed;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in iter_mask(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Components of `G[mask]`, ordered by minimum vertex.
    pub fn components(&self, mut mask: Mask) -> Vec<Mask> {
        let mut out = Vec::new();
        while mask != 0 {
            let c = self.reach(mask.trailing_zeros() as usize, mask);
            out.push(c);
            mask &= !c;
        }
        out
    }

    pub fn is_connected(&self, mask: Mask) -> bool {
        mask != 0 && self.reach(mask.trailing_zeros() as usize, mask) == mask
    }

    pub fn is_clique(&self, mask: Mask) -> bool {
        iter_mask(mask).all(|v| self.adj[v] & mask == mask & !bit(v))
    }

    /// Vertices of `mask` adjacent to all other vertices of `mask`.
    pub fn apexes(&self, mask: Mask) -> Mask {
        iter_mask(mask)
            .filter(|&v| self.adj[v] & mask == mask & !bit(v))
            .fold(0, |m, v| m | bit(v))
    }

    /// Degeneracy of `G[mask]` (largest minimum degree over all subgraphs).
    pub fn degeneracy(&self, mut mask: Mask) -> usize {
        let mut best = 0;
        while mask != 0 {
            let (v, d) = iter_mask(mask)
                .map(|v| (v, (self.adj[v] & mask).count_ones() as usize))
                .min_by_key(|&(_, d)| d)
                .unwrap();
            best = best.max(d);
            mask &= !bit(v);
        }
        best
    }

    pub fn clique_number(&self, mask: Mask) -> usize {
        fn grow(g: &BitGraph, size: usize, cand: Mask, best: &mut usize) {
            if cand == 0 {
                *best = (*best).max(size);
                return;
            }
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let mut rest = cand;
            while rest != 0 {
                if size + rest.count_ones() as usize <= *best {
                    return;
                }
                let v = rest.trailing_zeros() as usize;
                rest &= !bit(v);
                grow(g, size + 1, rest & g.adj[v], best);
            }
            *best = (*best).max(size);
        }
        let mut best = 0;
        grow(self, 0, mask, &mut best);
        best
    }

    /// Blocks of `G[mask]` and its cut-vertices.
    pub fn blocks(&self, mask: Mask) -> (Vec<Mask>, Mask) {
        let d = crate::blocks::decompose(
            self.n(),
            iter_mask(mask),
            |v| iter_mask(self.adj[v] & mask),
        );
        let blocks = d
            .blocks
            .iter()
            .map(|b| b.iter().fold(0, |m, &v| m | bit(v)))
            .collect();
        let cuts = d.cut.iter().fold(0, |m, &v| m | bit(v));
        (blocks, cuts)
    }

    /// `G[mask]` is a block: connected with no cut-vertex.
    pub fn is_block(&self, mask: Mask) -> bool {
        if !self.is_connected(mask) {
            return false;
        }
        if mask.count_ones() <= 2 {
            return true;
        }
        self.blocks(mask).0.len() == 1
    }
}
