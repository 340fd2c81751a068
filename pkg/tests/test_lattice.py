import itertools

import numpy as np
import pytest

from resgraph.errors import DomainError, OracleBoundError
from resgraph.graph import DualGraph, Edge, Vertex
from resgraph.lattice import (
    SupportSet,
    anti_nef_cycles_below,
    connected_subsets,
    cycle_blocks,
    degree,
    enumerate_effective_cycles,
    fundamental_cycle,
    is_anti_nef,
    laufer_sequence,
    oracle_minimal_anti_nef,
)

from conftest import NEGDEF, graph
from oracles import least_anti_nef

E8_Z = (2, 3, 4, 6, 5, 4, 3, 2)


def test_is_anti_nef_examples(a1, laufer):
    assert is_anti_nef(laufer.reduced())
    assert not is_anti_nef(laufer.basis("E2"))
    assert is_anti_nef(a1.basis("E"))
    # E2 alone is anti-nef on its own support
    assert is_anti_nef(laufer.basis("E2"), ["E2"])


def test_support_set_validation(laufer):
    with pytest.raises(DomainError):
        SupportSet(laufer, ())
    with pytest.raises(DomainError):
        SupportSet(laufer, ("E2", "E0"))
    assert SupportSet(laufer, ("E1", "E2")).ids == ("E2", "E1")


def test_fundamental_cycle_examples(a1, laufer, e8):
    assert fundamental_cycle(a1) == a1.basis("E")
    assert fundamental_cycle(laufer) == laufer.reduced()
    assert fundamental_cycle(e8).coefficients == E8_Z


def test_fundamental_cycle_rejects_disconnected_support(laufer):
    with pytest.raises(DomainError):
        fundamental_cycle(laufer, ["E2", "E0"])


def test_fundamental_cycle_needs_negative_definite():
    g = DualGraph((Vertex("E", 0),))
    with pytest.raises(DomainError):
        fundamental_cycle(g)


def test_degree_examples(a1, laufer, highpg):
    assert degree(laufer) == 1
    assert degree(highpg) == 2
    assert degree(a1) == 2


@pytest.mark.parametrize("name", NEGDEF)
def test_fundamental_cycle_properties_on_every_support(name):
    g = graph(name)
    for ids in connected_subsets(g):
        z, steps = laufer_sequence(g, ids)
        assert set(z.support) == set(ids)
        assert is_anti_nef(z, ids)
        assert z >= g.reduced(ids)
        assert steps == sum(z.coefficients) - len(ids)


@pytest.mark.parametrize("name", NEGDEF)
def test_oracle_agrees_with_laufer(name):
    g = graph(name)
    assert oracle_minimal_anti_nef(g, None, 2) == fundamental_cycle(g)


@pytest.mark.parametrize("name", ["laufer-chain", "cusp-triangle", "A1", "genus2-deg2"])
def test_oracle_on_every_support_against_pure_python(name):
    g = graph(name)
    for ids in connected_subsets(g):
        z = fundamental_cycle(g, ids)
        upper = [2 * c for c in z.coefficients]
        idx = {g.index(v) for v in ids}
        assert least_anti_nef(g, idx, upper) == z.coefficients
        assert oracle_minimal_anti_nef(g, ids, 2) == z


def test_e8_oracle(e8):
    assert oracle_minimal_anti_nef(e8, None, 2).coefficients == E8_Z


def test_oracle_bound_error(laufer):
    with pytest.raises(OracleBoundError):
        # the reduced cycle on E2+E1 is not anti-nef and nothing smaller exists
        oracle_minimal_anti_nef(laufer, ["E2", "E1", "E0"], bound=laufer.cycle((1, 1, 0)))


@pytest.mark.parametrize("name", ["laufer-chain", "cusp-triangle", "A1"])
def test_every_anti_nef_cycle_dominates_fundamental(name):
    g = graph(name)
    z = fundamental_cycle(g)
    found = list(anti_nef_cycles_below(g, None, 3 * z))
    assert found and all(d >= z for d in found)


def test_enumeration_examples(a1, laufer):
    assert [c.coefficients for c in enumerate_effective_cycles(a1, 2 * a1.basis("E"))] == [(1,), (2,)]
    assert len(list(enumerate_effective_cycles(laufer, laufer.reduced()))) == 7
    assert len(list(enumerate_effective_cycles(laufer, 2 * laufer.reduced()))) == 26


def test_enumeration_is_lexicographic(laufer):
    rows = [c.coefficients for c in enumerate_effective_cycles(laufer, laufer.cycle((1, 2, 1)))]
    assert rows == sorted(rows)
    assert rows[0] == (0, 0, 1)


def test_blocks_match_streaming_enumeration(laufer):
    bound = laufer.cycle((2, 3, 1))
    streamed = [c.coefficients for c in enumerate_effective_cycles(laufer, bound)]
    blocked = [tuple(int(x) for x in r) for b in cycle_blocks([0, 0, 0], bound.coefficients, block=5) for r in b]
    assert streamed == blocked


def test_blocks_with_lower_bound():
    rows = np.concatenate(list(cycle_blocks([1, 0], [2, 1], block=3)))
    assert rows.tolist() == [[1, 0], [1, 1], [2, 0], [2, 1]]


def test_connected_subsets_count(laufer, triangle):
    # a path on 3 vertices has 6 connected subsets, a triangle 7
    assert len(list(connected_subsets(laufer))) == 6
    assert len(list(connected_subsets(triangle))) == 7


def test_connected_subsets_are_connected(e8):
    subs = list(connected_subsets(e8))
    assert len(set(subs)) == len(subs)
    brute = [
        s for r in range(1, 9) for s in itertools.combinations(e8.ids, r) if e8.is_connected_subset(s)
    ]
    assert sorted(map(sorted, subs)) == sorted(map(sorted, brute))


def test_fundamental_cycle_with_double_edge():
    g = DualGraph((Vertex("a", -3), Vertex("b", -3)), (Edge("a", "b", 2),))
    z = fundamental_cycle(g)
    assert z.coefficients == (1, 1)
    assert oracle_minimal_anti_nef(g) == z
