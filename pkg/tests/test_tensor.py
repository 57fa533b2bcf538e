import random

from hiveforge.rootsys import dimension, is_in_root_lattice, root_system, weyl_orbit, dominant_weights_below
from hiveforge.tensor import kostka, kostka_sequence, tensor_decompose

LAM = (3, 4, 3, 5)
MU = (4, 3, 5, 4)
DELTA = (0, 3, 0, 1)


def test_su2_clebsch_gordan():
    assert tensor_decompose(2, (1,), (1,)) == {(0,): 1, (2,): 1}
    assert tensor_decompose(2, (2,), (3,)) == {(1,): 1, (3,): 1, (5,): 1}


def test_trivial_factor():
    assert tensor_decompose(5, LAM, (0, 0, 0, 0)) == {LAM: 1}


def test_decomposition_is_symmetric():
    rng = random.Random(2)
    for _ in range(4):
        lam = tuple(rng.randint(0, 2) for _ in range(3))
        mu = tuple(rng.randint(0, 2) for _ in range(3))
        assert tensor_decompose(4, lam, mu) == tensor_decompose(4, mu, lam)


def test_keys_are_compatible():
    rs = root_system("A3")
    dec = tensor_decompose(4, (2, 1, 0), (1, 1, 2))
    for nu in dec:
        diff = tuple(a + b - c for a, b, c in zip((2, 1, 0), (1, 1, 2), nu))
        assert is_in_root_lattice(rs, diff)


def test_dimension_sum_rule_small():
    rng = random.Random(3)
    for n in (3, 4):
        rs = root_system(f"A{n-1}")
        for _ in range(10):
            lam = tuple(rng.randint(0, 3) for _ in range(n - 1))
            mu = tuple(rng.randint(0, 3) for _ in range(n - 1))
            dec = tensor_decompose(n, lam, mu)
            total = sum(c * dimension(rs, nu) for nu, c in dec.items())
            assert total == dimension(rs, lam) * dimension(rs, mu)


def test_kostka_paper_value():
    assert kostka(5, LAM, DELTA) == 1473


def test_kostka_highest_weight_and_incompatible():
    assert kostka(5, LAM, LAM) == 1
    assert kostka(5, LAM, (0, 3, 0, 2)) == 0


def test_kostka_accepts_non_dominant_delta():
    # Weyl-equivalent weights have equal multiplicity
    dom = kostka(4, (2, 1, 1), (1, 1, 0))
    assert dom == kostka(4, (2, 1, 1), (-1, 2, 0))  # one reflection away
    assert dom > 0


def test_kostka_sequence_paper():
    seq = kostka_sequence(5, LAM, DELTA, 10)
    assert seq == [0, 103, 685, 1198, 1424, 1468, 1473, 1473, 1473, 1473]


def test_kostka_sequence_trivial():
    assert kostka_sequence(5, LAM, LAM, 3) == [1, 1, 1]
    assert kostka_sequence(5, LAM, (0, 3, 0, 2), 4) == [0, 0, 0, 0]


def test_kostka_stabilizes_at_bound():
    rng = random.Random(4)
    for _ in range(5):
        lam = tuple(rng.randint(0, 2) for _ in range(3))
        below = sorted(dominant_weights_below(root_system("A3"), lam))
        if not below:
            continue
        delta = rng.choice(below)
        b = sum(lam)
        seq = kostka_sequence(4, lam, delta, b + 2)
        assert seq[-1] == seq[-2] == kostka(4, lam, delta)


def test_kostka_orbit_sum_equals_dimension():
    rs = root_system("A3")
    for lam in [(1, 0, 1), (2, 0, 0), (1, 1, 0), (2, 1, 0)]:
        total = 0
        for delta in dominant_weights_below(rs, lam):
            total += kostka(4, lam, delta) * len(weyl_orbit(rs, delta))
        assert total == dimension(rs, lam)


def test_worker_decomposition_matches_serial():
    dec1 = tensor_decompose(4, (2, 1, 1), (1, 2, 1))
    dec2 = tensor_decompose(4, (2, 1, 1), (1, 2, 1), workers=2)
    assert dec1 == dec2
