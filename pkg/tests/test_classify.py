import random

import pytest

from splitchroma.classify import Branch, Verdict, classify
from splitchroma.generate import enumerate_small, gen_for_branch
from splitchroma.graph import GraphInputError
from splitchroma.oracle import chromatic_index_exact
from splitchroma.split import recognize

from conftest import G1, K4_PENDANT, STAR


def test_g1_is_class2_with_witness():
    cls = classify(G1, recognize(G1))
    assert (cls.verdict, cls.branch, cls.witness_vertex) == (Verdict.CLASS2, Branch.B0, 0)
    assert cls.colors_needed == 5


def test_star_is_odd_delta():
    cls = classify(STAR, recognize(STAR))
    assert (cls.verdict, cls.branch) == (Verdict.CLASS1, Branch.B1)


def test_pendant_is_one_sided_core():
    cls = classify(K4_PENDANT, recognize(K4_PENDANT))
    assert (cls.verdict, cls.branch) == (Verdict.CLASS1, Branch.B2)


def test_structure_of_other_graph_rejected():
    with pytest.raises(GraphInputError):
        classify(G1, recognize(K4_PENDANT))


def test_agrees_with_oracle_up_to_seven():
    for g, st in enumerate_small(7):
        cls = classify(g, st)
        res = chromatic_index_exact(g)
        assert res.chi_prime == cls.colors_needed, g.edges()


def test_verdict_independent_of_labels():
    rng = random.Random(5)
    for g, st in enumerate_small(7):
        base = classify(g, st)
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        other = classify(h, recognize(h))
        assert other.verdict is base.verdict
        assert other.delta == base.delta


@pytest.mark.parametrize("seed", range(40))
def test_b5_preconditions_that_always_hold(seed):
    _, _, cls = gen_for_branch(Branch.B5, seed, max_n=40)
    pre = cls.b5_preconditions
    for key in ("delta_even", "core_in_q_l", "core_in_q_r", "balanced_sides",
                "q_r_below_half_q", "no_mid_degree_vertex"):
        assert pre[key], key
    assert 2 * cls.structure.p >= cls.structure.r
