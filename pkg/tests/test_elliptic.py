import pytest

from resgraph.elliptic import (
    compute_B,
    elliptic_sequence,
    maxell_shape_check,
    pg_upper_bound,
    sequence_chi_and_nef,
    tomari_cycles,
    verify_canonical_identity,
    verify_tomari,
)
from resgraph.errors import DomainError
from resgraph.graph import DualGraph, Edge, Vertex, canonical_cycle, euler_chi
from resgraph.lattice import is_anti_nef

from conftest import ELLIPTIC, graph
from oracles import box, dot
from test_classification import elliptic_with_chain


def elliptic_with_minus_three():
    return DualGraph((Vertex("E", -1, 1), Vertex("F", -3)), (Edge("E", "F"),))


def test_laufer_sequence(laufer):
    seq = elliptic_sequence(laufer)
    assert [z.coefficients for z in seq.cycles] == [(1, 1, 1), (1, 1, 0), (1, 0, 0)]
    assert seq.m == 2
    assert [c.coefficients for c in seq.partial_sums] == [(1, 1, 1), (2, 2, 1), (3, 2, 1)]
    assert seq.to_json()["supports"] == [["E2", "E1", "E0"], ["E2", "E1"], ["E2"]]


def test_sequence_on_sub_support(laufer):
    seq = elliptic_sequence(laufer, ["E2", "E1"])
    assert [z.coefficients for z in seq.cycles] == [(1, 1, 0), (1, 0, 0)]
    assert verify_tomari(laufer, ["E2", "E1"])


def test_sequence_requires_e_min_inside(laufer):
    with pytest.raises(DomainError):
        elliptic_sequence(laufer, ["E1", "E0"])
    with pytest.raises(DomainError):
        elliptic_sequence(graph("A1"))


@pytest.mark.parametrize("name", ELLIPTIC)
def test_sequence_strictly_shrinks(name):
    seq = elliptic_sequence(graph(name))
    sizes = [len(b.support) for b in seq.supports]
    assert sizes == sorted(sizes, reverse=True) and len(set(sizes)) == len(sizes)
    assert all(set(seq.e_min.support) <= set(b.support) for b in seq.supports)
    assert sequence_chi_and_nef(seq) is None


@pytest.mark.parametrize("k", range(6))
def test_chain_family(k):
    g = elliptic_with_chain(k)
    seq = elliptic_sequence(g)
    assert seq.m == k
    assert pg_upper_bound(g) == k + 1
    assert verify_canonical_identity(g)
    check = maxell_shape_check(g)
    assert check and check.m == k
    assert list(check.chain) == [f"C{i}" for i in range(k)]
    assert sequence_chi_and_nef(seq) is None


@pytest.mark.parametrize("k", range(4))
def test_tomari_on_chain_family(k):
    assert verify_tomari(elliptic_with_chain(k))


def test_tomari_laufer_set(laufer):
    found = {c.coefficients for c in tomari_cycles(laufer)}
    assert found == {(1, 1, 1), (2, 2, 1), (3, 2, 1)}


def test_tomari_against_pure_python(laufer):
    upper = [6, 4, 2]
    expected = set()
    for c in box(upper):
        if any(c) and all(dot(laufer, c, [int(i == j) for j in range(3)]) <= 0 for i in range(3)):
            if euler_chi(laufer.cycle(c)) == 0:
                expected.add(c)
    assert {c.coefficients for c in tomari_cycles(laufer)} == expected


@pytest.mark.parametrize("name", ELLIPTIC)
def test_tomari_catalog(name):
    assert verify_tomari(graph(name))


def test_pg_bounds(laufer, triangle, simple_elliptic):
    assert pg_upper_bound(laufer) == 3
    assert pg_upper_bound(triangle) == 1
    assert pg_upper_bound(simple_elliptic) == 1


def test_canonical_identity_catalog(laufer, triangle, simple_elliptic):
    for g in (laufer, triangle, simple_elliptic):
        assert verify_canonical_identity(g)
    assert canonical_cycle(triangle).coefficients == (1, 1, 1)


def test_shape_refuses_degree_two_tail():
    g = elliptic_with_minus_three()
    assert canonical_cycle(g).coefficients == (2, 1)
    assert verify_canonical_identity(g)
    assert pg_upper_bound(g) == 2
    with pytest.raises(DomainError):
        maxell_shape_check(g)


def test_shape_domain(triangle, highpg):
    with pytest.raises(DomainError):
        maxell_shape_check(triangle)
    with pytest.raises(DomainError):
        maxell_shape_check(highpg)


def test_shape_laufer(laufer):
    check = maxell_shape_check(laufer)
    assert check and check.chain == ("E1", "E0") and check.e_min_support == ("E2",)


def test_compute_b_examples(laufer):
    assert compute_B(laufer, laufer.reduced()) == laufer.reduced(["E2", "E1"])
    assert compute_B(laufer, laufer.cycle((2, 2, 1))) == laufer.basis("E2")


def test_compute_b_errors(laufer, simple_elliptic):
    with pytest.raises(DomainError):
        compute_B(laufer, laufer.basis("E1"))
    with pytest.raises(DomainError):
        # Z.E_min = -1
        compute_B(simple_elliptic, simple_elliptic.basis("E"))


@pytest.mark.parametrize("name", ELLIPTIC)
def test_partial_sums_anti_nef_on_e(name):
    g = graph(name)
    for c in elliptic_sequence(g).partial_sums:
        assert is_anti_nef(c) and euler_chi(c) == 0
