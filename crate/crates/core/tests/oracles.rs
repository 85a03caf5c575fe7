//! Solvers against literal, slow implementations of the definitions on
//! seeded random graphs a little larger than the unit tests reach.

use std::collections::{BTreeSet, HashMap};

use depthlab::blocks::{blocks, cut_vertices};
use depthlab::harness::random_graphs;
use depthlab::params::{
    check_certificate, pathwidth, treedepth, treedepth2, treedepth_relative,
};
use depthlab::paths::longest_induced_path;
use depthlab::{Graph, VertexSet};

type Set = BTreeSet<usize>;

fn components(g: &Graph, within: &Set) -> Vec<Set> {
    let mut left = within.clone();
    let mut out = Vec::new();
    while let Some(&s) = left.iter().next() {
        let mut comp = Set::new();
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            if left.remove(&v) {
                comp.insert(v);
                stack.extend(g.neighbors(v).iter().filter(|w| left.contains(w)));
            }
        }
        out.push(comp);
    }
    out
}

fn connected(g: &Graph, s: &Set) -> bool {
    components(g, s).len() <= 1
}

/// Maximal vertex sets inducing connected subgraphs without a cut-vertex,
/// by checking every subset.
fn blocks_of(g: &Graph, within: &Set) -> Vec<Set> {
    let verts: Vec<usize> = within.iter().copied().collect();
    let mut good: Vec<Set> = Vec::new();
    for mask in 1u32..1 << verts.len() {
        let s: Set = (0..verts.len()).filter(|i| mask >> i & 1 == 1).map(|i| verts[i]).collect();
        if !connected(g, &s) {
            continue;
        }
        let no_cut = s.len() <= 2
            || s.iter().all(|v| {
                let mut t = s.clone();
                t.remove(v);
                connected(g, &t)
            });
        if no_cut {
            good.push(s);
        }
    }
    good.iter()
        .filter(|s| !good.iter().any(|t| t.len() > s.len() && s.is_subset(t)))
        .cloned()
        .collect()
}

fn td(g: &Graph, s: &Set, memo: &mut HashMap<Set, usize>) -> usize {
    if s.is_empty() {
        return 0;
    }
    if let Some(&v) = memo.get(s) {
        return v;
    }
    let comps = components(g, s);
    let val = if comps.len() > 1 {
        comps.iter().map(|c| td(g, c, memo)).max().unwrap()
    } else {
        s.iter()
            .map(|&v| {
                let mut t = s.clone();
                t.remove(&v);
                td(g, &t, memo) + 1
            })
            .min()
            .unwrap()
    };
    memo.insert(s.clone(), val);
    val
}

fn td2(g: &Graph, s: &Set, memo: &mut HashMap<Set, usize>) -> usize {
    if s.is_empty() {
        return 0;
    }
    if let Some(&v) = memo.get(s) {
        return v;
    }
    let bs = blocks_of(g, s);
    let val = if bs.len() == 1 && bs[0] == *s {
        s.iter()
            .map(|&v| {
                let mut t = s.clone();
                t.remove(&v);
                td2(g, &t, memo) + 1
            })
            .min()
            .unwrap()
    } else {
        bs.iter().map(|b| td2(g, b, memo)).max().unwrap()
    };
    memo.insert(s.clone(), val);
    val
}

/// `td(G[within], S)`.
fn tds(g: &Graph, within: &Set, s: &Set, memo: &mut HashMap<(Set, Set), usize>) -> usize {
    if s.is_empty() {
        return 0;
    }
    let key = (within.clone(), s.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let meeting: Vec<Set> = components(g, within)
        .into_iter()
        .filter(|c| !c.is_disjoint(s))
        .collect();
    let val = if meeting.len() > 1 {
        meeting
            .iter()
            .map(|c| tds(g, c, &c.intersection(s).copied().collect(), memo))
            .max()
            .unwrap()
    } else {
        within
            .iter()
            .map(|&v| {
                let mut w = within.clone();
                w.remove(&v);
                let mut t = s.clone();
                t.remove(&v);
                tds(g, &w, &t, memo) + 1
            })
            .min()
            .unwrap()
    };
    memo.insert(key, val);
    val
}

/// Vertex separation number by DP over placed sets.
fn vsn(g: &Graph) -> usize {
    let n = g.n();
    let full = (1usize << n) - 1;
    let mut best = vec![usize::MAX; 1 << n];
    best[0] = 0;
    for mask in 0..=full {
        if best[mask] == usize::MAX {
            continue;
        }
        for v in 0..n {
            if mask >> v & 1 == 1 {
                continue;
            }
            let next = mask | 1 << v;
            let boundary = (0..n)
                .filter(|&u| next >> u & 1 == 1)
                .filter(|&u| g.neighbors(u).iter().any(|&w| next >> w & 1 == 0))
                .count();
            let cost = best[mask].max(boundary);
            best[next] = best[next].min(cost);
        }
    }
    best[full]
}

fn longest_induced(g: &Graph) -> usize {
    fn grow(g: &Graph, seq: &mut Vec<usize>, best: &mut usize) {
        *best = (*best).max(seq.len());
        let tip = *seq.last().unwrap();
        for &w in g.neighbors(tip) {
            if seq.contains(&w) {
                continue;
            }
            // w may touch only the tip among path vertices
            if seq[..seq.len() - 1].iter().any(|&u| g.has_edge(u, w)) {
                continue;
            }
            seq.push(w);
            grow(g, seq, best);
            seq.pop();
        }
    }
    let mut best = 0;
    for v in g.vertices() {
        grow(g, &mut vec![v], &mut best);
    }
    best
}

fn sample() -> Vec<Graph> {
    let mut out = Vec::new();
    for (n, p) in [(6, 0.3), (7, 0.4), (7, 0.6), (8, 0.3), (8, 0.5)] {
        out.extend(random_graphs(n, 12, 100 + n as u64, p).unwrap());
    }
    out
}

#[test]
fn treedepth_matches_definition() {
    for g in sample() {
        let all: Set = g.vertices().collect();
        let (v, cert) = treedepth(&g).unwrap();
        assert_eq!(v, td(&g, &all, &mut HashMap::new()), "{g:?}");
        assert!(check_certificate(&g, &cert));
    }
}

#[test]
fn treedepth2_matches_definition() {
    for g in sample() {
        let all: Set = g.vertices().collect();
        let (v, cert) = treedepth2(&g).unwrap();
        assert_eq!(v, td2(&g, &all, &mut HashMap::new()), "{g:?}");
        assert!(check_certificate(&g, &cert));
    }
}

#[test]
fn relative_treedepth_matches_definition() {
    for (i, g) in sample().into_iter().enumerate() {
        let all: Set = g.vertices().collect();
        let mask = (i * 37 + 11) % (1 << g.n());
        let s: Set = g.vertices().filter(|v| mask >> v & 1 == 1).collect();
        let (v, cert) = treedepth_relative(&g, &s.iter().copied().collect::<VertexSet>()).unwrap();
        assert_eq!(v, tds(&g, &all, &s, &mut HashMap::new()), "{g:?} S={s:?}");
        assert!(check_certificate(&g, &cert));
    }
}

#[test]
fn pathwidth_matches_dp() {
    for g in sample() {
        assert_eq!(pathwidth(&g).unwrap(), vsn(&g), "{g:?}");
    }
}

#[test]
fn blocks_and_cuts_match_brute_force() {
    for g in sample() {
        let all: Set = g.vertices().collect();
        let mut want: Vec<VertexSet> = blocks_of(&g, &all)
            .into_iter()
            .map(|b| b.into_iter().collect())
            .collect();
        want.sort();
        let mut got = blocks(&g);
        got.sort();
        assert_eq!(got, want, "{g:?}");
        let base = components(&g, &all).len();
        let cuts: VertexSet = g
            .vertices()
            .filter(|&v| {
                let mut t = all.clone();
                t.remove(&v);
                components(&g, &t).len() > base
            })
            .collect();
        assert_eq!(cut_vertices(&g), cuts);
    }
}

#[test]
fn longest_induced_path_matches_brute_force() {
    for g in sample() {
        let p = longest_induced_path(&g).unwrap();
        assert!(g.is_induced_path(p.vertices()));
        assert_eq!(p.order(), longest_induced(&g), "{g:?}");
    }
}
