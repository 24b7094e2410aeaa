use thiserror::Error;

use crate::graph::Graph;

/// Largest host accepted by [`treewidth_exact`].
pub const TREEWIDTH_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("exact treewidth supports at most {TREEWIDTH_LIMIT} vertices, graph has {0}")]
pub struct TreewidthError(pub usize);

/// Exact treewidth by dynamic programming over vertex subsets.
///
/// `TW(S)` is the best width of an elimination ordering whose first `|S|`
/// vertices are `S`; eliminating `v` after `S` costs the number of vertices
/// outside `S + v` reachable from `v` through `S`.
pub fn treewidth_exact(g: &Graph) -> Result<usize, TreewidthError> {
    let n = g.n();
    if n > TREEWIDTH_LIMIT {
        return Err(TreewidthError(n));
    }
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    // Stores TW + 1 so the empty set can hold "minus one".
    let mut tw = vec![u8::MAX; 1usize << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            let cost = (q_size(&adj, prev, v) + 1) as u8;
            let val = tw[prev as usize].max(cost);
            best = best.min(val);
        }
        tw[s as usize] = best;
    }
    Ok(tw[full as usize].saturating_sub(1) as usize)
}

/// Neighbours outside `s + v` of the component of `v` in `G[s + v]`.
fn q_size(adj: &[u32], s: u32, v: usize) -> u32 {
    let inside = s | (1 << v);
    let mut comp = 1u32 << v;
    let mut frontier = comp;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let u = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[u] & inside;
        }
        frontier = next & !comp;
        comp |= next;
    }
    let mut nb = 0;
    let mut c = comp;
    while c != 0 {
        let u = c.trailing_zeros() as usize;
        c &= c - 1;
        nb |= adj[u];
    }
    (nb & !inside).count_ones()
}
