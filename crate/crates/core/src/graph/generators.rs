//! Standard graph families used by the test corpus, the CLI and the benches.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Graph, Vertex};

/// Vertex index of grid cell `(row, col)` in a grid with `cols` columns.
pub fn grid_index(row: usize, col: usize, cols: usize) -> Vertex {
    row * cols + col
}

/// The `rows × cols` grid, cell `(r, c)` at index `r * cols + c`.
pub fn grid_rect(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = grid_index(r, c, cols);
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::from_edges_lossy(rows * cols, edges)
}

/// The `l × l` grid.
pub fn grid(l: usize) -> Graph {
    grid_rect(l, l)
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges_lossy(n, edges)
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::from_edges_lossy(a + b, edges)
}

/// Path on `n` vertices `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges_lossy(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    Graph::from_edges_lossy(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn star(leaves: usize) -> Graph {
    Graph::from_edges_lossy(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges_lossy(10, edges)
}

/// 1-subdivision of `K_l`: branch vertices `0..l`, then one vertex per pair `i < j`
/// in lexicographic order.
pub fn subdivided_complete(l: usize) -> Graph {
    let mut edges = Vec::new();
    let mut next = l;
    for i in 0..l {
        for j in i + 1..l {
            edges.push((i, next));
            edges.push((j, next));
            next += 1;
        }
    }
    Graph::from_edges_lossy(next, edges)
}

pub fn hypercube(dim: u32) -> Graph {
    let n = 1usize << dim;
    let edges = (0..n).flat_map(|v| (0..dim).map(move |b| (v, v ^ (1 << b))));
    Graph::from_edges_lossy(n, edges)
}

/// Erdős–Rényi `G(n, p)` drawn from a ChaCha8 stream seeded with `seed`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_gnp_with(n, p, &mut rng)
}

pub fn random_gnp_with<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges_lossy(n, edges)
}

/// Uniform random recursive tree: vertex `v > 0` attaches to a random earlier vertex.
pub fn random_tree_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges_lossy(n, edges)
}

/// A random connected graph: a random tree plus `G(n, p)` extra edges.
pub fn random_connected_with<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let tree = random_tree_with(n, rng);
    let extra = random_gnp_with(n, p, rng);
    Graph::from_edges_lossy(
        n,
        tree.edges().iter().chain(extra.edges()).copied(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(grid(3).m(), 12);
        assert_eq!(complete(5).m(), 10);
        assert_eq!(complete_bipartite(3, 3).m(), 9);
        assert_eq!(petersen().m(), 15);
        assert!(petersen().vertices().all(|v| petersen().degree(v) == 3));
        assert_eq!(subdivided_complete(4).n(), 10);
        assert_eq!(subdivided_complete(4).m(), 12);
        assert_eq!(hypercube(3).m(), 12);
    }

    #[test]
    fn grid_top_row_is_a_path() {
        let g = grid(3);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(2, 3));
        assert!(g.has_edge(0, 3));
    }

    #[test]
    fn random_connected_is_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..12 {
            assert!(random_connected_with(n, 0.2, &mut rng).is_connected());
        }
    }
}
