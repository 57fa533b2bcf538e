import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hiveforge.errors import BudgetError, DomainError
from hiveforge.oblade import (
    BranchingTriple,
    build_shape,
    count_fillings,
    enumerate_fillings,
    honeycomb_dual,
    is_degenerate,
    kostant_vectors,
)
from hiveforge.rootsys import conjugate, root_system

LAM = (3, 4, 3, 5)
MU = (4, 3, 5, 4)


def test_shape_counts():
    sh = build_shape(5)
    assert sh.inner_vertex_count == 6
    assert len(sh.edges) == 30
    assert len(sh.boundary) == 12
    sh3 = build_shape(3)
    assert sh3.inner_vertex_count == 1 and len(sh3.edges) == 9
    sh2 = build_shape(2)
    assert sh2.inner_vertex_count == 0 and len(sh2.edges) == 3
    with pytest.raises(DomainError):
        build_shape(1)


def test_shape_free_parameter_count():
    for n in (3, 4, 5, 6):
        sh = build_shape(n)
        constraints = len(sh.boundary) + 2 * sh.inner_vertex_count
        assert len(sh.edges) - constraints == (n - 1) * (n - 2) // 2


def test_paper_counts():
    assert count_fillings(BranchingTriple(5, LAM, MU, (2, 2, 4, 2))) == 371
    assert count_fillings(BranchingTriple(5, LAM, MU, (7, 9, 8, 3))) == 3
    assert count_fillings(BranchingTriple(5, LAM, MU, (3, 4, 4, 7))) == 1427


def test_trivial_counts():
    assert count_fillings(BranchingTriple(5, LAM, (0, 0, 0, 0), LAM)) == 1
    # incompatible triple
    assert count_fillings(BranchingTriple(5, LAM, MU, (2, 2, 4, 3))) == 0
    # SU(2) Clebsch-Gordan
    assert count_fillings(BranchingTriple(2, (1,), (1,), (0,))) == 1
    assert count_fillings(BranchingTriple(2, (1,), (1,), (2,))) == 1
    assert count_fillings(BranchingTriple(2, (1,), (1,), (1,))) == 0
    assert count_fillings(BranchingTriple(2, (1,), (1,), (4,))) == 0


def test_enumeration_matches_count_and_validates():
    triple = BranchingTriple(5, LAM, MU, (7, 9, 8, 3))
    fills = list(enumerate_fillings(triple))
    assert len(fills) == 3
    assert all(f.validate() for f in fills)
    assert all(is_degenerate(f) for f in fills)


def test_forced_filling_when_mu_is_zero():
    triple = BranchingTriple(5, LAM, (0, 0, 0, 0), LAM)
    fills = list(enumerate_fillings(triple))
    assert len(fills) == 1 and fills[0].validate()


def test_unique_nondegenerate_filling():
    triple = BranchingTriple(5, LAM, MU, (2, 2, 4, 2))
    nondeg = [f for f in enumerate_fillings(triple) if not is_degenerate(f)]
    assert len(nondeg) == 1


def test_all_zero_triple_is_degenerate():
    z = (0, 0, 0, 0)
    f = next(enumerate_fillings(BranchingTriple(5, z, z, z)))
    assert is_degenerate(f) and set(f.labels) == {0}


def test_kostant_vectors():
    triple = BranchingTriple(5, LAM, MU, (2, 2, 4, 2))
    kv = kostant_vectors(triple)
    assert kv[0] == (5, 5, 4, 7)
    assert kv[1] == (1, 3, 2, 3)
    z = (0, 0, 0, 0)
    assert kostant_vectors(BranchingTriple(5, z, z, z)) == (z, z, z)
    with pytest.raises(DomainError):
        kostant_vectors(BranchingTriple(5, LAM, MU, (2, 2, 4, 3)))


def kostant_direction_sums(triple):
    """Per-family label sums on positive roots, as simple-root coefficient vectors."""
    shape = build_shape(triple.n)
    rank = triple.n - 1
    fills = enumerate_fillings(triple)
    out = []
    for f in fills:
        sums = {fam: [0] * rank for fam in (0, 1, 2)}
        for e in shape.edges:
            a, b = e.root
            for j in range(a - 1, b):
                sums[e.family][j] += f.labels[e.index]
        out.append({fam: tuple(v) for fam, v in sums.items()})
    return out


def test_kostant_consistency_fixed_triple():
    triple = BranchingTriple(5, LAM, MU, (7, 9, 8, 3))
    rs = root_system("A4")
    kv = kostant_vectors(triple)
    expected = {
        2: tuple(int(c) for c in rs.to_root_coords(kv[0])),
        1: tuple(int(c) for c in rs.to_root_coords(kv[1])),
        0: tuple(int(c) for c in rs.to_root_coords(kv[2])),
    }
    for sums in kostant_direction_sums(triple):
        assert sums == expected


def test_budget_error():
    with pytest.raises(BudgetError):
        count_fillings(BranchingTriple(5, LAM, MU, (2, 2, 4, 2)), budget=100)


def test_worker_split_matches_serial():
    triple = BranchingTriple(5, LAM, MU, (3, 4, 4, 7))
    assert count_fillings(triple, workers=2) == 1427
    serial = [f.labels for f in enumerate_fillings(triple)]
    parallel = [f.labels for f in enumerate_fillings(triple, workers=2)]
    assert serial == parallel


def test_enumeration_is_deterministic():
    triple = BranchingTriple(4, (2, 1, 0), (1, 1, 1), (2, 1, 1))
    a = [f.labels for f in enumerate_fillings(triple)]
    b = [f.labels for f in enumerate_fillings(triple)]
    assert a == b and len(a) == count_fillings(triple)


def random_small_triple(rng, n, span=3):
    from hiveforge.tensor import tensor_decompose

    while True:
        lam = tuple(rng.randint(0, span) for _ in range(n - 1))
        mu = tuple(rng.randint(0, span) for _ in range(n - 1))
        dec = tensor_decompose(n, lam, mu)
        if dec:
            nu = rng.choice(sorted(dec))
            return lam, mu, nu, dec[nu]


@pytest.mark.parametrize("n", [3, 4])
def test_count_symmetries(n):
    rng = random.Random(5 + n)
    rs = root_system(f"A{n-1}")
    for _ in range(6):
        lam, mu, nu, c = random_small_triple(rng, n)
        assert count_fillings(BranchingTriple(n, mu, lam, nu)) == c
        cj = tuple(reversed(lam)), tuple(reversed(mu)), tuple(reversed(nu))
        assert count_fillings(BranchingTriple(n, *cj)) == c
        assert conjugate(rs, lam) == cj[0]


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
@settings(max_examples=40, deadline=None)
def test_su2_counts_are_clebsch_gordan(a, b, c):
    expected = 1 if (a + b + c) % 2 == 0 and abs(a - b) <= c <= a + b else 0
    assert count_fillings(BranchingTriple(2, (a,), (b,), (c,))) == expected


def test_honeycomb_metric_and_closure():
    import math

    triple = BranchingTriple(5, LAM, MU, (2, 2, 4, 2))
    f = next(f for f in enumerate_fillings(triple) if not is_degenerate(f))
    hc = honeycomb_dual(f)
    assert len(hc.cells) == 6

    def xy(pos):
        c1, c2 = pos
        return (c2 * (-math.sqrt(3) / 2), c1 + c2 / 2)

    for cell in hc.cells:
        pts = [xy(hc.positions[t]) for t in cell.triangles]
        for a in range(6):
            d = math.dist(pts[a], pts[(a + 1) % 6])
            assert abs(d - cell.side_labels[a]) < 1e-9
        # angle-sum relations transported from the O-blade vertex rules
        e1, e2, e3, e4, e5, e6 = cell.side_labels
        assert e1 + e2 == e4 + e5 and e2 + e3 == e5 + e6
    assert all(cell.distinct_corner_count() == 6 for cell in hc.cells)


def test_honeycomb_pentagon_occurs():
    triple = BranchingTriple(5, LAM, MU, (3, 4, 4, 7))
    for f in enumerate_fillings(triple):
        profile = sorted(c.distinct_corner_count() for c in honeycomb_dual(f).cells)
        if profile == [5, 6, 6, 6, 6, 6]:
            return
    pytest.fail("no filling with exactly one pentagon found")


def test_honeycomb_all_zero_collapses():
    z = (0, 0, 0, 0)
    f = next(enumerate_fillings(BranchingTriple(5, z, z, z)))
    hc = honeycomb_dual(f)
    assert len(set(hc.positions)) == 1
