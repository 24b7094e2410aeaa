use glm_bench::*;
use glm_core::transversal::{lll_threshold, max_bichromatic_degeneracy};
use glm_core::{bramble_order, degeneracy};

#[test]
fn fixtures_have_their_stated_shape() {
    assert_eq!(sparse_graph(100), sparse_graph(100));
    assert!(degeneracy(&sparse_graph(1_000)).value <= 10);
    for r in 2..=4 {
        let cg = lll_instance(r);
        assert_eq!(cg.classes().len(), r);
        assert!(cg.classes().iter().all(|c| c.len() == lll_threshold(r, 1).unwrap()));
        assert!(max_bichromatic_degeneracy(&cg).map_or(0, |(_, _, d)| d) <= 1);
    }
    assert_eq!(bramble_order(&crosses(3), 64).order, 3);
    assert_eq!(clique_singletons(9).len(), 9);
}
