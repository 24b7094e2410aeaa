//! Brute-force oracles, written without reference to the library's algorithms.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::OnceLock;

use glm_core::graph::generators;
use glm_core::transversal::ColouredGraph;
use glm_core::{Bramble, Graph, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | (1 << w)))
        .collect()
}

/// Vertices reachable from `from` inside `allowed` (bitmasks, n <= 32).
fn reach(adj: &[u32], from: u32, allowed: u32) -> u32 {
    let mut seen = from & allowed;
    loop {
        let mut next = seen;
        for (v, &a) in adj.iter().enumerate() {
            if seen >> v & 1 == 1 {
                next |= a & allowed;
            }
        }
        if next == seen {
            return seen;
        }
        seen = next;
    }
}

fn is_connected_mask(adj: &[u32], set: u32) -> bool {
    set != 0 && reach(adj, set & set.wrapping_neg(), set) == set
}

fn mask(vs: &[Vertex]) -> u32 {
    vs.iter().fold(0, |m, &v| m | (1 << v))
}

/// Smallest `S` such that no path from `a` to `b` avoids `S`, by enumeration.
pub fn min_vertex_cut(g: &Graph, a: &[Vertex], b: &[Vertex]) -> usize {
    let n = g.n();
    let adj = adjacency_masks(g);
    let (am, bm) = (mask(a), mask(b));
    (0..=n)
        .find(|&size| {
            (0u32..1 << n).filter(|s| s.count_ones() as usize == size).any(|s| {
                let allowed = !s & ((1u32 << n) - 1);
                reach(&adj, am & allowed, allowed) & bm == 0
            })
        })
        .unwrap()
}

/// Whether removing `cut` leaves no `a`–`b` path.
pub fn separates(g: &Graph, cut: &[Vertex], a: &[Vertex], b: &[Vertex]) -> bool {
    let adj = adjacency_masks(g);
    let allowed = !mask(cut) & ((1u32 << g.n()) - 1);
    reach(&adj, mask(a) & allowed, allowed) & mask(b) == 0
}

/// Minimum hitting set size of `sets` over `n` vertices, by enumeration.
pub fn min_hitting_set(n: usize, sets: &[Vec<Vertex>]) -> usize {
    let masks: Vec<u32> = sets.iter().map(|s| mask(s)).collect();
    (0..=n)
        .find(|&size| {
            (0u32..1 << n)
                .filter(|h| h.count_ones() as usize == size)
                .any(|h| masks.iter().all(|&m| m & h != 0))
        })
        .unwrap()
}

/// Minimum hitting set for hosts too large for full enumeration; tries
/// subsets of increasing size up to `max`.
pub fn min_hitting_set_upto(n: usize, sets: &[Vec<Vertex>], max: usize) -> Option<usize> {
    fn search(sets: &[BTreeSet<Vertex>], n: usize, start: usize, left: usize, chosen: &mut Vec<Vertex>) -> bool {
        if sets.iter().all(|s| chosen.iter().any(|v| s.contains(v))) {
            return true;
        }
        if left == 0 {
            return false;
        }
        for v in start..n {
            chosen.push(v);
            if search(sets, n, v + 1, left - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let sets: Vec<BTreeSet<Vertex>> = sets.iter().map(|s| s.iter().copied().collect()).collect();
    (0..=max).find(|&size| search(&sets, n, 0, size, &mut Vec::new()))
}

/// Whether any one-per-class choice is independent, by full enumeration.
pub fn has_transversal(cg: &ColouredGraph) -> bool {
    let classes = cg.classes();
    let g = cg.graph();
    let mut idx = vec![0usize; classes.len()];
    if classes.iter().any(|c| c.is_empty()) {
        return false;
    }
    loop {
        let pick: Vec<Vertex> = idx.iter().zip(classes).map(|(&i, c)| c[i]).collect();
        let independent = pick
            .iter()
            .enumerate()
            .all(|(x, &u)| pick[x + 1..].iter().all(|&v| !g.has_edge(u, v)));
        if independent {
            return true;
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return false;
            }
            idx[pos] += 1;
            if idx[pos] < classes[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Whether `pattern` is a minor of `g`, by assigning each host vertex to a
/// branch set or to none (`(p + 1)^n` assignments; tiny hosts only).
pub fn has_minor_brute(g: &Graph, pattern: &Graph) -> bool {
    let (n, p) = (g.n(), pattern.n());
    if p == 0 {
        return true;
    }
    let adj = adjacency_masks(g);
    let mut assign = vec![0usize; n];
    loop {
        let mut sets = vec![0u32; p];
        for (v, &a) in assign.iter().enumerate() {
            if a > 0 {
                sets[a - 1] |= 1 << v;
            }
        }
        let ok = sets.iter().all(|&s| is_connected_mask(&adj, s))
            && pattern.edges().iter().all(|&(x, y)| {
                (0..n).any(|v| sets[x] >> v & 1 == 1 && adj[v] & sets[y] != 0)
            });
        if ok {
            return true;
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return false;
            }
            assign[pos] += 1;
            if assign[pos] <= p {
                break;
            }
            assign[pos] = 0;
            pos += 1;
        }
    }
}

/// Treewidth as the best elimination ordering over all permutations.
pub fn treewidth_brute(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut order: Vec<Vertex> = (0..n).collect();
    let mut best = usize::MAX;
    permute(&mut order, 0, &mut |perm| {
        let mut adj = adjacency_masks(g);
        let mut width = 0;
        let mut gone = 0u32;
        for &v in perm {
            let nb = adj[v] & !gone;
            width = width.max(nb.count_ones() as usize);
            for u in 0..n {
                if nb >> u & 1 == 1 {
                    adj[u] |= nb & !(1 << u);
                }
            }
            gone |= 1 << v;
        }
        best = best.min(width);
    });
    best
}

pub fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Canonical form: the lexicographically least sorted edge list over all relabellings.
pub fn canonical(g: &Graph) -> Vec<(usize, usize)> {
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut perm: Vec<usize> = (0..g.n()).collect();
    permute(&mut perm, 0, &mut |p| {
        let mut e: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
            .collect();
        e.sort_unstable();
        if best.as_ref().is_none_or(|b| e < *b) {
            best = Some(e);
        }
    });
    best.unwrap()
}

/// One graph per isomorphism class on exactly `n` vertices.
pub fn nonisomorphic(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for bits in 0u32..1 << pairs.len() {
        let g = Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e)).unwrap();
        if seen.insert(canonical(&g)) {
            out.push(g);
        }
    }
    out
}

/// All graphs on at most `max_n <= 6` vertices up to isomorphism.
pub fn corpus(max_n: usize) -> Vec<Graph> {
    static ALL: OnceLock<Vec<Graph>> = OnceLock::new();
    assert!(max_n <= 6);
    ALL.get_or_init(|| (0..=6).flat_map(nonisomorphic).collect())
        .iter()
        .filter(|g| g.n() <= max_n)
        .cloned()
        .collect()
}

/// Whether every non-empty induced subgraph has a vertex of degree at most `d`.
pub fn is_degenerate_brute(g: &Graph, d: usize) -> bool {
    let adj = adjacency_masks(g);
    (1u32..1 << g.n()).all(|s| (0..g.n()).any(|v| s >> v & 1 == 1 && (adj[v] & s).count_ones() as usize <= d))
}

/// A random connected vertex set grown from a random vertex.
fn random_connected_set(g: &Graph, rng: &mut ChaCha8Rng, max: usize) -> Vec<Vertex> {
    let start = rng.gen_range(0..g.n());
    let target = rng.gen_range(1..=max);
    let mut set = vec![start];
    while set.len() < target {
        let frontier: Vec<Vertex> = set
            .iter()
            .flat_map(|&v| g.neighbors(v).iter().copied())
            .filter(|w| !set.contains(w))
            .collect();
        if frontier.is_empty() {
            break;
        }
        set.push(frontier[rng.gen_range(0..frontier.len())]);
    }
    set.sort_unstable();
    set
}

fn touch(g: &Graph, a: &[Vertex], b: &[Vertex]) -> bool {
    a.iter().any(|&u| b.contains(&u) || g.neighbors(u).iter().any(|w| b.contains(w)))
}

/// A random connected graph on `n` vertices with a random non-empty bramble.
pub fn random_bramble(n: usize, seed: u64) -> Bramble {
    let mut r = rng(seed);
    let g = generators::random_connected_with(n, r.gen_range(0.15..0.6), &mut r);
    let mut elements: Vec<Vec<Vertex>> = Vec::new();
    for _ in 0..40 {
        let e = random_connected_set(&g, &mut r, n.min(5));
        if !elements.contains(&e) && elements.iter().all(|x| touch(&g, x, &e)) {
            elements.push(e);
        }
    }
    Bramble::new(&g, elements).expect("generated elements form a bramble")
}

/// All forests between two classes of size three, up to relabelling within classes.
pub fn forests_between_triples() -> Vec<ColouredGraph> {
    let pairs: Vec<(usize, usize)> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for bits in 0u32..1 << 9 {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(6, edges.clone()).unwrap();
        if g.m() > g.n() - g.components().len() {
            continue;
        }
        let mut key = None;
        permute(&mut vec![0, 1, 2], 0, &mut |p| {
            permute(&mut vec![3, 4, 5], 0, &mut |q| {
                let mut e: Vec<_> = edges.iter().map(|&(u, v)| (p[u], q[v - 3])).collect();
                e.sort_unstable();
                if key.as_ref().is_none_or(|k| e < *k) {
                    key = Some(e);
                }
            });
        });
        if seen.insert(key.unwrap()) {
            out.push(ColouredGraph::new(g, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap());
        }
    }
    out
}
