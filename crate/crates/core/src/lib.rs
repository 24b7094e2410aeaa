//! Grid-like-minors and the machinery around them: brambles and their order,
//! hitting paths, Menger path systems, independent transversals by resampling,
//! and complete-minor models in cartesian products.

pub mod bramble;
pub mod dot;
pub mod extraction;
pub mod graph;
pub mod gridlike;
pub mod product;
pub mod transversal;

pub use bramble::{
    bramble_order, check_bramble, crosses_bramble, is_bramble, treewidth_exact,
    verify_certificate, Bramble, BrambleDoc, BrambleError, OrderCertificate,
};
pub use extraction::{
    hitting_path, many_paths, segment_path, vertex_disjoint_paths, ExtractionError, Menger, Path,
    PathSystem,
};
pub use graph::minor::{
    find_minor_dense, find_minor_exact, verify_minor_model, ExactOutcome, MinorError,
    MinorModel, ModelDefect,
};
pub use graph::{degeneracy, is_bipartite, Bipartition, Degeneracy, DegeneracyBound, Graph, GraphError, Vertex};
pub use gridlike::{
    find_glm, grid_rows_columns_glm, intersection_graph, k_threshold, lower_bound_bramble,
    verify_glm, GlmDefect, GlmError, GridLikeMinor, LowerBoundCertificate,
};
pub use product::{
    cartesian_k2, cartesian_kq, intersection_minor_in_kq_product, product_complete_minor,
    product_minor_model, ProductError,
};
pub use transversal::{
    counterexample_graph, lll_threshold, transversal_general, transversal_greedy,
    transversal_lll, verify_transversal, ColouredGraph, Transversal, TransversalError,
};
