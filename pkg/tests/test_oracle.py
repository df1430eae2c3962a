import pytest

from splitchroma.coloring import verify_coloring
from splitchroma.errors import InconclusiveError
from splitchroma.graph import build_graph
from splitchroma.oracle import chromatic_index_exact, recognize_by_permutations

from conftest import G1, K3, P3, STAR, k


@pytest.mark.parametrize("g,chi", [(P3, 2), (K3, 3), (G1, 5), (STAR, 3), (k(4), 3), (k(5), 5)])
def test_chromatic_index(g, chi):
    res = chromatic_index_exact(g)
    assert res.chi_prime == chi
    assert res.certificate.k == chi
    assert verify_coloring(g, res.certificate) is None


def test_budget_gives_indeterminate():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    res = chromatic_index_exact(build_graph(10, outer + spokes + inner), budget=3)
    assert res.indeterminate and res.certificate is None


def test_edgeless_rejected():
    with pytest.raises(ValueError):
        chromatic_index_exact(build_graph(2, []))


def test_permutation_recognizer_star_and_limit():
    st = recognize_by_permutations(STAR)
    assert len(st.s_l) == 2
    big = k(11)
    with pytest.raises(InconclusiveError):
        recognize_by_permutations(big)
