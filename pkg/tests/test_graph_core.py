import json
import random
from fractions import Fraction

import pytest

from resgraph import linalg
from resgraph.catalog import CATALOG
from resgraph.errors import DisconnectedGraphError, DomainError, GraphFormatError
from resgraph.graph import (
    DualGraph,
    Edge,
    Vertex,
    arithmetic_genus,
    canonical_cycle,
    canonical_degree,
    canonical_intersections,
    d_perp,
    euler_chi,
    format_rational,
    intersect,
    is_minimal_resolution_graph,
    is_negative_definite,
    is_numerically_gorenstein,
)

from conftest import NEGDEF, graph
from oracles import canonical_cycle_sympy, chi_recursive


def single(w, g=0):
    return DualGraph((Vertex("E", w, g),))


# -- construction -----------------------------------------------------------


def test_rejects_disconnected():
    with pytest.raises(DisconnectedGraphError):
        DualGraph((Vertex("a", -2), Vertex("b", -2)))


@pytest.mark.parametrize(
    "vertices, edges",
    [
        ((), ()),
        ((Vertex("a", -2), Vertex("a", -2)), ()),
        ((Vertex("a", -2),), (Edge("a", "a"),)),
        ((Vertex("a", -2), Vertex("b", -2)), (Edge("a", "c"),)),
        ((Vertex("a", -2), Vertex("b", -2)), (Edge("a", "b"), Edge("b", "a"))),
        ((Vertex("a", -2), Vertex("b", -2)), (Edge("a", "b", 0),)),
        ((Vertex("a", -2, -1),), ()),
        ((Vertex("a", True),), ()),
    ],
)
def test_rejects_malformed(vertices, edges):
    with pytest.raises(GraphFormatError):
        DualGraph(vertices, edges)


def test_json_round_trip(laufer):
    data = laufer.to_dict()
    assert list(data) == ["vertices", "edges"]
    assert data["edges"][0] == {"a": "E2", "b": "E1", "multiplicity": 1}
    again = DualGraph.from_dict(json.loads(json.dumps(data)))
    assert again == laufer


def test_from_dict_errors():
    with pytest.raises(GraphFormatError):
        DualGraph.from_dict({"vertices": [{"id": "a"}]})
    with pytest.raises(GraphFormatError):
        DualGraph.from_dict([1, 2])


def test_multiplicity_enters_matrix():
    g = DualGraph((Vertex("a", -3), Vertex("b", -3)), (Edge("a", "b", 2),))
    assert g.matrix == ((-3, 2), (2, -3))
    assert is_negative_definite(g)


# -- intersect ----------------------------------------------------------------


def test_intersect_examples(a1, laufer):
    e = a1.basis("E")
    assert intersect(e, e) == -2
    z = laufer.reduced()
    assert intersect(z, z) == -1
    m = laufer.cycle({"E2": 2, "E1": 2, "E0": 1})
    assert intersect(m, m) == -2


def test_intersect_rational(laufer):
    q = laufer.qcycle({"E2": Fraction(1, 2)})
    r = intersect(q, laufer.basis("E2"))
    assert r == Fraction(-1, 2) and isinstance(r, Fraction)
    assert isinstance(intersect(laufer.reduced(), laufer.reduced()), int)


def test_intersect_mismatched_graphs(a1, laufer):
    with pytest.raises(DomainError):
        intersect(a1.basis("E"), laufer.basis("E2"))


# -- negative definiteness ---------------------------------------------------


def test_negative_definite_examples(a1, laufer):
    assert is_negative_definite(a1)
    assert not is_negative_definite(single(0))
    assert linalg.leading_principal_minors(laufer.matrix) == [-1, 1, -1]
    assert is_negative_definite(laufer)


def test_minus_two_triangle_is_degenerate():
    # the elliptic I_3 fibre: (1,1,1) is in the kernel
    tri = DualGraph(
        tuple(Vertex(f"E{i}", -2) for i in (1, 2, 3)),
        (Edge("E1", "E2"), Edge("E2", "E3"), Edge("E1", "E3")),
    )
    assert linalg.det(tri.matrix) == 0
    assert not is_negative_definite(tri)


@pytest.mark.parametrize("name", NEGDEF)
def test_catalog_negative_definite(name):
    assert is_negative_definite(graph(name))


def test_det_against_permutation_expansion():
    import itertools

    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(1, 5)
        m = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        expected = 0
        for perm in itertools.permutations(range(n)):
            sign = 1
            for i in range(n):
                for j in range(i + 1, n):
                    if perm[i] > perm[j]:
                        sign = -sign
            term = sign
            for i in range(n):
                term *= m[i][perm[i]]
            expected += term
        assert linalg.det(m) == expected


# -- canonical class ----------------------------------------------------------


def test_canonical_intersections(a1, laufer, highpg):
    assert canonical_intersections(a1) == {"E": 0}
    assert canonical_intersections(laufer)["E2"] == 1
    assert canonical_intersections(highpg) == {"E": 4}


@pytest.mark.parametrize("name", NEGDEF)
def test_chi_of_each_curve_is_one_minus_genus(name):
    g = graph(name)
    for v in g.vertices:
        assert euler_chi(g.basis(v.id)) == 1 - v.genus


def test_euler_chi_examples(a1, laufer, highpg):
    assert euler_chi(a1.basis("E")) == 1
    assert arithmetic_genus(a1.basis("E")) == 0
    assert euler_chi(laufer.reduced()) == 0
    assert euler_chi(highpg.basis("E")) == -1
    assert arithmetic_genus(highpg.basis("E")) == 2


def test_euler_chi_domain(laufer):
    with pytest.raises(DomainError):
        euler_chi(laufer.cycle({"E2": -1}))
    with pytest.raises(DomainError):
        arithmetic_genus(laufer.zero())
    assert euler_chi(laufer.zero()) == 0


@pytest.mark.parametrize("name", NEGDEF)
def test_closed_chi_matches_recursive_additivity(name):
    import itertools

    g = graph(name)
    top = 4 if len(g) <= 3 else 1
    for coeffs in itertools.product(range(top + 1), repeat=len(g)):
        d = g.cycle(coeffs)
        assert euler_chi(d) == chi_recursive(g, coeffs)


def test_canonical_cycle_examples(a1, laufer, highpg):
    assert canonical_cycle(highpg) == highpg.qcycle({"E": 2})
    assert canonical_cycle(laufer) == laufer.qcycle((3, 2, 1))
    assert canonical_cycle(a1).is_zero


@pytest.mark.parametrize("name", NEGDEF)
def test_canonical_cycle_against_sympy(name):
    g = graph(name)
    zk = canonical_cycle(g)
    assert zk.coefficients == canonical_cycle_sympy(g)
    k = canonical_intersections(g)
    for v in g.ids:
        assert intersect(zk, g.basis(v)) + k[v] == 0


def test_canonical_cycle_requires_negative_definite():
    with pytest.raises(DomainError):
        canonical_cycle(single(0))


def test_numerically_gorenstein(a1, laufer):
    assert is_numerically_gorenstein(laufer)
    assert is_numerically_gorenstein(a1)
    g = single(-3)
    assert canonical_cycle(g) == g.qcycle({"E": Fraction(1, 3)})
    assert not is_numerically_gorenstein(g)


def test_rational_serialization():
    assert format_rational(Fraction(3)) == "3/1"
    assert format_rational(Fraction(-4, 6)) == "-2/3"
    assert format_rational(Fraction(2, -4)) == "-1/2"
    g = single(-3)
    assert canonical_cycle(g).to_json() == {"E": "1/3"}


def test_d_perp(a1, laufer):
    assert d_perp(laufer.reduced()) == laufer.reduced(["E2", "E1"])
    assert d_perp(a1.basis("E")).is_zero
    assert d_perp(laufer.basis("E2")) == laufer.basis("E0")


def test_canonical_degree_linear(laufer):
    assert canonical_degree(laufer.cycle({"E2": 2, "E1": 2, "E0": 1})) == 2


def test_minimal_resolution_flag(laufer):
    assert is_minimal_resolution_graph(laufer)
    assert not is_minimal_resolution_graph(single(-1, 0))
    assert is_minimal_resolution_graph(CATALOG["simple-elliptic-deg1"].graph)


class TestCycleArithmetic:
    def test_partial_order(self, laufer):
        z = laufer.reduced()
        e2 = laufer.basis("E2")
        assert e2 <= z and e2 < z and not z <= e2
        assert z >= e2 and z > e2
        assert not (laufer.basis("E0") <= e2 or e2 <= laufer.basis("E0"))

    def test_operations(self, laufer):
        z = laufer.reduced()
        assert (2 * z - laufer.basis("E0")).as_dict() == {"E2": 2, "E1": 2, "E0": 1}
        assert str(laufer.cycle({"E2": 2, "E0": 1})) == "2E2 + E0"
        assert (-z).is_effective is False
        assert (z * Fraction(1, 2)).coefficients == (Fraction(1, 2),) * 3

    def test_coefficients_must_be_integers(self, laufer):
        with pytest.raises(DomainError):
            laufer.cycle({"E2": 1.5})
        with pytest.raises(DomainError):
            laufer.cycle({"nope": 1})
        with pytest.raises(DomainError):
            laufer.cycle((1, 2))

    def test_hashable(self, laufer):
        assert len({laufer.reduced(), laufer.cycle((1, 1, 1)), laufer.zero()}) == 2
