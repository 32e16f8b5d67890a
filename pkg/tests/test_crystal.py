import pytest

from qtchar.crystal import (
    eps,
    eps_n,
    fit_coloring,
    generate_crystal,
    in_parity_set,
    kashiwara_e,
    kashiwara_f,
    layer_from_orientation,
    p_index,
    phi,
    phi_n,
    q_index,
    verify_crystal_axioms,
    weight,
    CrystalGraph,
)
from qtchar.errors import CapExceededError, NotLDominantError, NotInParitySetError
from qtchar.rootdata import DynkinDiagram, Weight, weyl_dimension
from qtchar.yalgebra import Monomial

from conftest import q, ym


def test_partial_sums():
    m = ym((1, 0), (2, 1))
    assert [phi_n(m, 2, n) for n in (-1, 0, 1, 2, 9)] == [0, 0, 1, 1, 1]
    m2 = ym((1, 0), (1, 2), (2, 3, -1))
    assert [eps_n(m2, 2, n) for n in (0, 3, 4)] == [1, 1, 0]
    assert eps_n(Monomial.one(), 1, 0) == 0 and phi_n(Monomial.one(), 1, 0) == 0


def test_statistics():
    m0 = ym((1, 0), (2, 1))
    assert phi(m0, 2) == 1 and q_index(m0, 2) == 1
    m = ym((1, 0), (1, 2), (2, 3, -1))
    assert eps(m, 2) == 1 and p_index(m, 2) == 3
    assert p_index(m0, 1) is None  # eps = 0
    assert q_index(ym((1, 0, -1)), 1) is None  # phi = 0
    assert weight(m0) == Weight({1: 1, 2: 1})


def test_operators_match_worked_example(a2):
    m0 = ym((1, 0), (2, 1))
    stepped = ym((1, 0), (1, 2), (2, 3, -1))
    assert kashiwara_f(a2, m0, 2) == stepped
    assert kashiwara_e(a2, stepped, 2) == m0
    assert kashiwara_e(a2, ym((1, 0)), 1) is None


def test_literal_variant_runs_backwards(a2):
    # the exchanged-inverse variant raises where the default lowers
    m0 = ym((1, 0), (2, 1))
    corrected = kashiwara_f(a2, m0, 2)
    literal = kashiwara_f(a2, m0, 2, literal=True)
    assert literal == corrected.inv() * m0 * m0  # m * A = m^2 / (m A^-1)


def test_parity_set_and_coloring_fit(a2):
    m0 = ym((1, 0), (2, 1))
    col = fit_coloring(a2, m0)
    assert col == {1: 1, 2: 0}
    assert in_parity_set(a2, m0, col)
    assert not in_parity_set(a2, m0, {1: 0, 2: 1})
    with pytest.raises(NotInParitySetError):
        fit_coloring(a2, ym((1, 0), (1, 1)))


CRYSTAL_ONE = {
    "highest": ((1, 0), (2, 1)),
    "edges": [
        (((1, 0), (2, 1)), ((1, 0), (1, 2), (2, 3, -1)), 2),
        (((1, 0), (1, 2), (2, 3, -1)), ((1, 0), (1, 4, -1)), 1),
        (((1, 0), (1, 4, -1)), ((1, 2, -1), (1, 4, -1), (2, 1)), 1),
        (((1, 0), (2, 1)), ((1, 2, -1), (2, 1, 2)), 1),
        (((1, 2, -1), (1, 4, -1), (2, 1)), ((1, 4, -1), (2, 3, -1)), 2),
        (((1, 2, -1), (2, 1, 2)), ((2, 1), (2, 3, -1)), 2),
        (((2, 1), (2, 3, -1)), ((1, 2), (2, 3, -2)), 2),
        (((1, 2), (2, 3, -2)), ((1, 4, -1), (2, 3, -1)), 1),
    ],
}

CRYSTAL_TWO = {
    "highest": ((1, 0, 2),),
    "edges": [
        (((1, 0, 2),), ((1, 0), (1, 2, -1), (2, 1)), 1),
        (((1, 0), (1, 2, -1), (2, 1)), ((1, 2, -2), (2, 1, 2)), 1),
        (((1, 0), (1, 2, -1), (2, 1)), ((1, 0), (2, 3, -1)), 2),
        (((1, 2, -2), (2, 1, 2)), ((1, 2, -1), (2, 1), (2, 3, -1)), 2),
        (((1, 0), (2, 3, -1)), ((1, 2, -1), (2, 1), (2, 3, -1)), 1),
        (((1, 2, -1), (2, 1), (2, 3, -1)), ((2, 3, -2),), 2),
    ],
}

CRYSTAL_THREE = {
    "highest": ((1, 0), (1, 2)),
    "edges": [
        (((1, 0), (1, 2)), ((1, 0), (1, 4, -1), (2, 3)), 1),
        (((1, 0), (1, 4, -1), (2, 3)), ((1, 2, -1), (1, 4, -1), (2, 1), (2, 3)), 1),
        (((1, 0), (1, 4, -1), (2, 3)), ((1, 0), (2, 5, -1)), 2),
        (((1, 2, -1), (1, 4, -1), (2, 1), (2, 3)), ((1, 2, -1), (2, 1), (2, 5, -1)), 2),
        (((1, 0), (2, 5, -1)), ((1, 2, -1), (2, 1), (2, 5, -1)), 1),
        (((1, 2, -1), (2, 1), (2, 5, -1)), ((2, 3, -1), (2, 5, -1)), 2),
    ],
}


@pytest.mark.parametrize("golden", [CRYSTAL_ONE, CRYSTAL_TWO, CRYSTAL_THREE])
def test_worked_crystal_graphs(a2, golden):
    g = generate_crystal(a2, ym(*golden["highest"]))
    expected_edges = {(ym(*src), ym(*dst), i) for src, dst, i in golden["edges"]}
    expected_vertices = {m for e in expected_edges for m in (e[0], e[1])}
    assert g.vertices == expected_vertices
    assert g.edges == expected_edges
    assert verify_crystal_axioms(g) == []


def test_same_weight_same_shape(a2):
    g2 = generate_crystal(a2, ym((1, 0, 2)))
    g3 = generate_crystal(a2, ym((1, 0), (1, 2)))
    assert g2.vertices != g3.vertices
    assert g2.canonical_hash() == g3.canonical_hash()


def test_vector_chains():
    for n in range(1, 5):
        g = generate_crystal(DynkinDiagram.type_a(n), Monomial.y(1, q(0)))
        assert len(g.vertices) == n + 1


@pytest.mark.parametrize(
    "kind,rank,weight_coeffs",
    [
        ("A", 2, {1: 1}),
        ("A", 2, {2: 1}),
        ("A", 3, {1: 1}),
        ("A", 3, {2: 1}),
        ("A", 3, {3: 1}),
        ("A", 2, {1: 2}),
        ("A", 3, {1: 2}),
        ("A", 2, {1: 1, 2: 1}),
        ("A", 3, {1: 1, 2: 1}),
        ("D", 4, {2: 1}),
    ],
)
def test_crystal_sizes_match_weyl_dimension(kind, rank, weight_coeffs):
    d = DynkinDiagram.type_a(rank) if kind == "A" else DynkinDiagram.type_d(rank)
    m0 = Monomial.one()
    for i, mult in weight_coeffs.items():
        m0 = m0 * Monomial.y(i, q(i % 2), mult)
    g = generate_crystal(d, m0)
    assert len(g.vertices) == weyl_dimension(d, Weight(weight_coeffs))
    assert verify_crystal_axioms(g) == []


def test_parity_closure(a2, d4):
    import random

    rng = random.Random(17)
    for d in (a2, d4):
        for _ in range(40):
            m0 = Monomial.from_factors(
                [
                    (
                        rng.randint(1, d.rank),
                        q(2 * rng.randint(0, 2) + 1),
                        rng.randint(1, 2),
                    )
                ]
            )
            coloring = fit_coloring(d, m0)
            g = generate_crystal(d, m0, coloring=coloring)
            for m in g.vertices:
                assert in_parity_set(d, m, coloring)


def test_generate_rejects_bad_input(a2):
    with pytest.raises(NotLDominantError):
        generate_crystal(a2, ym((1, 0, -1)))
    with pytest.raises(CapExceededError):
        generate_crystal(a2, ym((1, 0), (2, 1)), cap=3)


def test_corrupted_graph_is_reported(a2):
    g = generate_crystal(a2, ym((1, 0), (2, 1)))
    edges = set(g.edges)
    src, dst, i = next(iter(edges))
    edges.remove((src, dst, i))
    edges.add((src, src, i))
    bad = CrystalGraph(a2, g.coloring, g.highest, g.vertices, edges)
    assert verify_crystal_axioms(bad) != []


def test_layer_from_orientation(a2, a3):
    assert layer_from_orientation(a2, [(2, 1)]) == {1: 0, 2: 1}
    assert layer_from_orientation(a2, [(1, 2)]) == {1: 1, 2: 0}
    assert layer_from_orientation(a3, [(3, 2), (2, 1)]) == {1: 0, 2: 1, 3: 2}
    # two sinks at different depths still get unit drops along every edge
    assert layer_from_orientation(a3, [(2, 1), (2, 3)]) == {1: 0, 2: 1, 3: 0}
    with pytest.raises(Exception):
        layer_from_orientation(a2, [(1, 2), (2, 1)])
