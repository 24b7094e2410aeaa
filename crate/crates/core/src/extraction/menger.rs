//! Vertex-disjoint `A`–`B` paths by unit-capacity max flow on the split graph.

use std::collections::VecDeque;

use super::{ExtractionError, Path};
use crate::graph::{Graph, Vertex};

/// Either `k` disjoint paths or a separator smaller than `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Menger {
    Paths(Vec<Path>),
    /// Vertices meeting every `A`–`B` path; fewer than the requested `k`.
    Cut(Vec<Vertex>),
}

struct Edge {
    to: usize,
    cap: usize,
    /// Capacity at construction; zero on reverse arcs.
    orig: usize,
    rev: usize,
}

struct Network {
    adj: Vec<Vec<Edge>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            adj: (0..nodes).map(|_| Vec::new()).collect(),
        }
    }

    fn add(&mut self, from: usize, to: usize, cap: usize) {
        let (rf, rt) = (self.adj[to].len(), self.adj[from].len());
        self.adj[from].push(Edge {
            to,
            cap,
            orig: cap,
            rev: rf,
        });
        self.adj[to].push(Edge {
            to: from,
            cap: 0,
            orig: 0,
            rev: rt,
        });
    }

    /// One BFS augmentation of a single unit; returns whether it succeeded.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for (i, e) in self.adj[u].iter().enumerate() {
                if e.cap > 0 && !seen[e.to] {
                    seen[e.to] = true;
                    prev[e.to] = Some((u, i));
                    queue.push_back(e.to);
                }
            }
        }
        if !seen[t] {
            return false;
        }
        let mut v = t;
        while let Some((u, i)) = prev[v] {
            self.adj[u][i].cap -= 1;
            let rev = self.adj[u][i].rev;
            self.adj[v][rev].cap += 1;
            v = u;
        }
        true
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for e in &self.adj[u] {
                if e.cap > 0 && !seen[e.to] {
                    seen[e.to] = true;
                    queue.push_back(e.to);
                }
            }
        }
        seen
    }
}

/// `k` pairwise vertex-disjoint paths from `a` to `b`, each with its first vertex
/// in `a`, last in `b`, and no internal vertex in either; or a cut of size `< k`.
pub fn vertex_disjoint_paths(
    g: &Graph,
    a: &[Vertex],
    b: &[Vertex],
    k: usize,
) -> Result<Menger, ExtractionError> {
    if k == 0 {
        return Ok(Menger::Paths(Vec::new()));
    }
    if a.is_empty() || b.is_empty() {
        return Err(ExtractionError::EmptyTerminals);
    }
    let n = g.n();
    let mut side = vec![0u8; n];
    for &v in a {
        g.check_vertex(v)?;
        side[v] = 1;
    }
    for &v in b {
        g.check_vertex(v)?;
        if side[v] == 1 {
            return Err(ExtractionError::OverlappingTerminals(v));
        }
        side[v] = 2;
    }
    let (source, sink) = (2 * n, 2 * n + 1);
    let big = n + 1;
    let mut net = Network::new(2 * n + 2);
    for v in g.vertices() {
        net.add(2 * v, 2 * v + 1, 1);
    }
    for &(u, v) in g.edges() {
        net.add(2 * u + 1, 2 * v, big);
        net.add(2 * v + 1, 2 * u, big);
    }
    for v in g.vertices() {
        match side[v] {
            1 => net.add(source, 2 * v, big),
            2 => net.add(2 * v + 1, sink, big),
            _ => {}
        }
    }
    let mut flow = 0;
    while flow < k && net.augment(source, sink) {
        flow += 1;
    }
    if flow < k {
        let seen = net.reachable(source);
        let cut = g
            .vertices()
            .filter(|&v| seen[2 * v] && !seen[2 * v + 1])
            .collect();
        return Ok(Menger::Cut(cut));
    }
    Ok(Menger::Paths(decompose(&mut net, n, &side, k)))
}

/// Walks unit flows out of the source; each walk is trimmed to its last `a`
/// vertex and the first `b` vertex after it.
fn decompose(net: &mut Network, n: usize, side: &[u8], k: usize) -> Vec<Path> {
    let (source, sink) = (2 * n, 2 * n + 1);
    let mut paths = Vec::with_capacity(k);
    for _ in 0..k {
        let mut walk = Vec::new();
        let mut u = source;
        while u != sink {
            let e = net.adj[u]
                .iter_mut()
                .find(|e| e.cap < e.orig)
                .expect("flow conservation");
            e.cap += 1;
            let to = e.to;
            if to < 2 * n && to % 2 == 0 {
                walk.push(to / 2);
            }
            u = to;
        }
        let start = walk.iter().rposition(|&v| side[v] == 1).expect("walk starts in a");
        let end = start
            + walk[start..]
                .iter()
                .position(|&v| side[v] == 2)
                .expect("walk ends in b");
        paths.push(Path(walk[start..=end].to_vec()));
    }
    paths.sort();
    paths
}
