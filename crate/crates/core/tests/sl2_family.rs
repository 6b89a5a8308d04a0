//! Dessin-level checks on the standard family `D(SL(2,p), b, w^i)`.

use dessins::group::DEFAULT_CAP;
use dessins::numthy::primes_up_to;
use dessins::sl2lab::{family_smoothness_agrees, valency_p_graph_unique};

#[test]
fn covering_is_smooth_exactly_for_odd_face_order() {
    for p in primes_up_to(31).into_iter().filter(|&p| p >= 5) {
        assert!(family_smoothness_agrees(p, DEFAULT_CAP).unwrap(), "p = {p}");
    }
}

#[test]
fn valency_p_graph_is_unique() {
    for p in [5, 7, 11, 13] {
        assert!(valency_p_graph_unique(p, DEFAULT_CAP).unwrap(), "p = {p}");
    }
}
