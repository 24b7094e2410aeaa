//! From a bramble to a path system: a path meeting every element, its cut into
//! `l` spines whose private sub-brambles each have order `k`, and `k` disjoint
//! linking paths between every pair of spines.

mod menger;
mod path;

use std::collections::{BTreeMap, VecDeque};

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::bramble::{bitset, bramble_order, Bramble};
use crate::graph::{GraphError, Vertex};

pub use menger::{vertex_disjoint_paths, Menger};
pub use path::{Path, PathError, PathSystem, PathSystemDefect};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractionError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("bramble order too small: placed {placed} of {needed} spines")]
    InsufficientOrder { placed: usize, needed: usize },
    #[error("sub-bramble order undetermined: between {lower} and {upper}, threshold {k}")]
    Undetermined { k: usize, lower: usize, upper: usize },
    #[error("terminal sets share vertex {0}")]
    OverlappingTerminals(Vertex),
    #[error("terminal set is empty")]
    EmptyTerminals,
    #[error("no {k} disjoint paths between spines {i} and {j}; separator {cut:?}")]
    MengerContradiction {
        i: usize,
        j: usize,
        k: usize,
        cut: Vec<Vertex>,
    },
    #[error("assembled path system is invalid: {0}")]
    InvalidPathSystem(#[from] PathSystemDefect),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A path meeting every element of `b`.
///
/// Keeps a path that cannot be shortened without losing an element; while some
/// element `Z` is missed, an element `X` meeting the path only at its last
/// vertex `v` exists, and a shortest route from `v` through `X` into `Z`
/// avoiding the rest of the path extends it. Each extension hits strictly more
/// elements. An empty bramble yields the empty path.
pub fn hitting_path(b: &Bramble) -> Path {
    let g = b.graph();
    let n = g.n();
    let elems = b.elements();
    if elems.is_empty() {
        return Path(Vec::new());
    }
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in elems.iter().enumerate() {
        for &v in e {
            containing[v].push(i);
        }
    }
    let start = g
        .vertices()
        .max_by_key(|&v| (containing[v].len(), std::cmp::Reverse(v)))
        .expect("non-empty element implies a vertex");
    let mut path: VecDeque<Vertex> = VecDeque::from([start]);
    let mut on_path = vec![false; n];
    on_path[start] = true;
    // Number of path vertices inside each element.
    let mut hits = vec![0usize; elems.len()];
    for &i in &containing[start] {
        hits[i] += 1;
    }
    let removable = |v: Vertex, hits: &[usize]| containing[v].iter().all(|&i| hits[i] >= 2);
    loop {
        while path.len() > 1 {
            let (back, front) = (*path.back().unwrap(), *path.front().unwrap());
            let v = if removable(back, &hits) {
                path.pop_back()
            } else if removable(front, &hits) {
                path.pop_front()
            } else {
                break;
            }
            .expect("non-empty");
            debug_assert!(v == back || v == front);
            on_path[v] = false;
            for &i in &containing[v] {
                hits[i] -= 1;
            }
        }
        let Some(z) = hits.iter().position(|&h| h == 0) else {
            return Path(path.into_iter().collect());
        };
        let v = *path.back().unwrap();
        let x = containing[v]
            .iter()
            .copied()
            .find(|&i| hits[i] == 1)
            .expect("a shortest path has a private element at each end");
        let route = route_through(b, v, &elems[x], &elems[z], &on_path)
            .expect("touching elements admit a route");
        for &w in &route[1..] {
            path.push_back(w);
            on_path[w] = true;
            for &i in &containing[w] {
                hits[i] += 1;
            }
        }
    }
}

/// Shortest path from `v` inside `x ∪ z`, avoiding `blocked` except `v`,
/// ending at the first vertex of `z` reached. Neighbours are explored in
/// increasing order.
fn route_through(
    b: &Bramble,
    v: Vertex,
    x: &[Vertex],
    z: &[Vertex],
    blocked: &[bool],
) -> Option<Vec<Vertex>> {
    let g = b.graph();
    let n = g.n();
    let mut allowed = bitset(n, x);
    allowed.extend(z.iter().copied());
    let target = bitset(n, z);
    let mut prev = vec![usize::MAX; n];
    let mut seen = FixedBitSet::with_capacity(n);
    seen.insert(v);
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        if target.contains(u) {
            let mut route = vec![u];
            let mut w = u;
            while w != v {
                w = prev[w];
                route.push(w);
            }
            route.reverse();
            return Some(route);
        }
        for &w in g.neighbors(u) {
            if allowed.contains(w) && !blocked[w] && !seen.contains(w) {
                seen.insert(w);
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Whether the elements meeting `marked` and avoiding `forbidden` form a
/// sub-bramble of order at least `k`.
pub fn sub_bramble_order_at_least(
    b: &Bramble,
    marked: &[Vertex],
    forbidden: &[Vertex],
    k: usize,
    exact_limit: usize,
) -> Result<bool, ExtractionError> {
    if k == 0 {
        return Ok(true);
    }
    let n = b.graph().n();
    let (m, f) = (bitset(n, marked), bitset(n, forbidden));
    let sub = b.sub_bramble(|e| e.iter().any(|&v| m.contains(v)) && !e.iter().any(|&v| f.contains(v)));
    let cert = bramble_order(&sub, exact_limit);
    if cert.lower_bound >= k {
        Ok(true)
    } else if cert.order < k {
        Ok(false)
    } else {
        Err(ExtractionError::Undetermined {
            k,
            lower: cert.lower_bound,
            upper: cert.order,
        })
    }
}

/// Cuts `p` into `l` consecutive spines. Spine `i` ends at the smallest index
/// `t_i` for which the elements meeting `p[t_{i-1}..t_i]` but not `p[..t_{i-1}]`
/// have order at least `k`; adding one vertex raises the order by at most one,
/// so that order is exactly `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segmentation {
    pub spines: Vec<Path>,
    /// End positions `t_1 < ... < t_l` (exclusive indices into `p`).
    pub cuts: Vec<usize>,
}

pub fn segment_path(
    b: &Bramble,
    p: &Path,
    k: usize,
    l: usize,
    exact_limit: usize,
) -> Result<Segmentation, ExtractionError> {
    if k == 0 {
        return Err(ExtractionError::InvalidParameter("k must be positive".into()));
    }
    let vs = p.vertices();
    let mut spines = Vec::with_capacity(l);
    let mut cuts = Vec::with_capacity(l);
    let mut prev = 0;
    for placed in 0..l {
        let reaches = |t: usize| sub_bramble_order_at_least(b, &vs[prev..t], &vs[..prev], k, exact_limit);
        if prev >= vs.len() || !reaches(vs.len())? {
            return Err(ExtractionError::InsufficientOrder { placed, needed: l });
        }
        // Smallest t in (prev, len] with the property; the property is monotone in t.
        let (mut lo, mut hi) = (prev + 1, vs.len());
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if reaches(mid)? {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        spines.push(Path(vs[prev..lo].to_vec()));
        cuts.push(lo);
        prev = lo;
    }
    Ok(Segmentation { spines, cuts })
}

/// `l` disjoint spines with `k` disjoint links between each pair, from a bramble
/// of order at least `k * l`.
///
/// Each link family is first routed with the other spines removed, which keeps
/// links off foreign spines when possible, and in the whole graph otherwise.
pub fn many_paths(
    b: &Bramble,
    k: usize,
    l: usize,
    exact_limit: usize,
) -> Result<PathSystem, ExtractionError> {
    let g = b.graph();
    let p = hitting_path(b);
    let seg = segment_path(b, &p, k, l, exact_limit)?;
    let spines = seg.spines;
    let mut owner = vec![usize::MAX; g.n()];
    for (i, s) in spines.iter().enumerate() {
        for &v in s.vertices() {
            owner[v] = i;
        }
    }
    let mut links = BTreeMap::new();
    for i in 0..l {
        for j in i + 1..l {
            let (a, z) = (spines[i].vertices(), spines[j].vertices());
            let avoiding = g.edge_subgraph(|u, v| {
                let free = |w: Vertex| owner[w] == usize::MAX || owner[w] == i || owner[w] == j;
                free(u) && free(v)
            });
            let family = match vertex_disjoint_paths(&avoiding, a, z, k)? {
                Menger::Paths(ps) => ps,
                Menger::Cut(_) => match vertex_disjoint_paths(g, a, z, k)? {
                    Menger::Paths(ps) => ps,
                    Menger::Cut(cut) => {
                        return Err(ExtractionError::MengerContradiction { i, j, k, cut })
                    }
                },
            };
            links.insert((i, j), family);
        }
    }
    let system = PathSystem {
        spines,
        links,
        k,
        l,
    };
    system.validate(g)?;
    Ok(system)
}
