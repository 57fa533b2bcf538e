"""Root-system and weight arithmetic for the simple Lie types.

Weights are plain tuples of integers holding Dynkin coordinates
(components on the fundamental weights).  Row i of the Cartan matrix is
the i-th simple root written in Dynkin coordinates, so the reflection in
the i-th simple root acts as  w -> w - w[i] * cartan[i].

Node ordering: A/B/C/D follow the usual chain numbering (B: last node
short, C: last node long, D: fork on the last two nodes), G2 is (long,
short), F4 is (long, long, short, short), and E_r puts the length-(r-1)
chain first with the branch node r attached to node r-3.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm

from .errors import DomainError

Weight = tuple

_SERIES_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}

_POSITIVE_ROOT_COUNT = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "E": lambda r: {6: 36, 7: 63, 8: 120}[r],
    "F": lambda r: 24,
    "G": lambda r: 6,
}

_WEYL_ORDER = {
    "A": lambda r: factorial(r + 1),
    "B": lambda r: 2**r * factorial(r),
    "C": lambda r: 2**r * factorial(r),
    "D": lambda r: 2 ** (r - 1) * factorial(r),
    "E": lambda r: {6: 51840, 7: 2903040, 8: 696729600}[r],
    "F": lambda r: 1152,
    "G": lambda r: 12,
}


@dataclass(frozen=True)
class LieType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in "ABCDEFG" or len(self.series) != 1:
            raise DomainError(f"unknown series {self.series!r}")
        r = self.rank
        ok = (
            r >= _SERIES_MIN_RANK[self.series]
            if self.series in _SERIES_MIN_RANK
            else (self.series == "E" and r in (6, 7, 8))
            or (self.series == "F" and r == 4)
            or (self.series == "G" and r == 2)
        )
        if not ok:
            raise DomainError(f"rank {r} not allowed for series {self.series}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = re.fullmatch(r"([A-Ga-g])(\d+)", text.strip())
        if not m:
            raise DomainError(f"cannot parse Lie type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.series}{self.rank}"


def _cartan_matrix(series: str, rank: int) -> list[list[int]]:
    C = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def link(i, j, cij=-1, cji=-1):
        C[i][j] = cij
        C[j][i] = cji

    if series == "A":
        for i in range(rank - 1):
            link(i, i + 1)
    elif series == "B":
        for i in range(rank - 2):
            link(i, i + 1)
        link(rank - 2, rank - 1, -2, -1)
    elif series == "C":
        for i in range(rank - 2):
            link(i, i + 1)
        link(rank - 2, rank - 1, -1, -2)
    elif series == "D":
        for i in range(rank - 3):
            link(i, i + 1)
        link(rank - 3, rank - 2)
        link(rank - 3, rank - 1)
    elif series == "E":
        for i in range(rank - 2):
            link(i, i + 1)
        link(rank - 4, rank - 1)
    elif series == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif series == "G":
        link(0, 1, -3, -1)
    return C


def _simple_norms(series: str, rank: int) -> list[int]:
    # squared lengths of the simple roots, any common scale
    if series == "B":
        return [2] * (rank - 1) + [1]
    if series == "C":
        return [2] * (rank - 1) + [4]
    if series == "F":
        return [2, 2, 1, 1]
    if series == "G":
        return [6, 2]
    return [2] * rank


def _invert_rational(mat: list[list[int]]) -> list[list[Fraction]]:
    n = len(mat)
    a = [[Fraction(v) for v in row] + [Fraction(i == j) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [row[n:] for row in a]


class RootSystem:
    """Cartan data and positive roots of one simple Lie type."""

    def __init__(self, lie_type: LieType):
        self.lie_type = lie_type
        self.rank = lie_type.rank
        self.cartan = tuple(tuple(row) for row in _cartan_matrix(lie_type.series, lie_type.rank))
        self.inverse_cartan = tuple(tuple(row) for row in _invert_rational([list(r) for r in self.cartan]))
        self.simple_norms = tuple(_simple_norms(lie_type.series, lie_type.rank))
        for i in range(self.rank):
            for j in range(self.rank):
                assert self.cartan[i][j] * self.simple_norms[j] == self.cartan[j][i] * self.simple_norms[i]
        self._build_roots()

    def _build_roots(self):
        rank = self.rank
        rows = [tuple(r) for r in self.cartan]
        seen = set(rows)
        queue = list(rows)
        while queue:
            w = queue.pop()
            for i in range(rank):
                wi = w[i]
                if wi:
                    s = tuple(w[j] - wi * rows[i][j] for j in range(rank))
                    if s not in seen:
                        seen.add(s)
                        queue.append(s)
        positive = []
        for w in seen:
            coords = self.to_root_coords(w)
            if all(c >= 0 for c in coords):
                ic = tuple(int(c) for c in coords)
                assert all(c == int(c) for c in coords)
                positive.append((ic, w))
        positive.sort(key=lambda t: (sum(t[0]), t[0]))
        self.positive_roots = tuple(w for _, w in positive)
        self.positive_root_coords = tuple(c for c, _ in positive)
        self.simple_root_expansion = {w: c for c, w in positive}
        expected = _POSITIVE_ROOT_COUNT[self.lie_type.series](rank)
        assert len(self.positive_roots) == expected
        # integer functional  w -> <w, a^vee> * (a,a)/2  per positive root
        self._coroot_functionals = tuple(
            tuple(c * nn for c, nn in zip(coords, self.simple_norms)) for coords in self.positive_root_coords
        )

    def to_root_coords(self, w: Weight) -> tuple[Fraction, ...]:
        """Coefficients of w on the simple roots (columns of the inverse Cartan)."""
        inv = self.inverse_cartan
        rank = self.rank
        return tuple(sum(w[i] * inv[i][j] for i in range(rank)) for j in range(rank))

    def weyl_group_order(self) -> int:
        return _WEYL_ORDER[self.lie_type.series](self.rank)

    def __repr__(self):
        return f"RootSystem({self.lie_type})"


@lru_cache(maxsize=None)
def root_system(lie_type) -> RootSystem:
    if isinstance(lie_type, str):
        lie_type = LieType.parse(lie_type)
    return RootSystem(lie_type)


def weyl_vector(rs: RootSystem) -> Weight:
    return (1,) * rs.rank


def is_dominant(w: Weight) -> bool:
    return all(c >= 0 for c in w)


def dimension(rs: RootSystem, lam: Weight) -> int:
    """Weyl dimension formula, exact."""
    if len(lam) != rs.rank:
        raise DomainError("weight length does not match rank")
    if not is_dominant(lam):
        raise DomainError(f"dimension needs a dominant weight, got {lam}")
    num = 1
    den = 1
    for f in rs._coroot_functionals:
        num *= sum(fi * (li + 1) for fi, li in zip(f, lam))
        den *= sum(f)
    assert num % den == 0
    return num // den


def is_in_root_lattice(rs: RootSystem, w: Weight) -> bool:
    return all(c.denominator == 1 for c in rs.to_root_coords(w))


def conjugate(rs: RootSystem, lam: Weight) -> Weight:
    """Highest weight of the dual representation."""
    s, r = rs.lie_type.series, rs.rank
    if s == "A":
        return tuple(reversed(lam))
    if s == "D" and r % 2 == 1:
        return lam[:-2] + (lam[-1], lam[-2])
    if s == "E" and r == 6:
        return (lam[4], lam[3], lam[2], lam[1], lam[0], lam[5])
    return lam  # -1 is in the Weyl group


def reflect(rs: RootSystem, w: Weight, i: int) -> Weight:
    row = rs.cartan[i]
    wi = w[i]
    return tuple(w[j] - wi * row[j] for j in range(rs.rank))


def dominant_representative(rs: RootSystem, w: Weight) -> Weight:
    w = tuple(w)
    while True:
        for i, c in enumerate(w):
            if c < 0:
                w = reflect(rs, w, i)
                break
        else:
            return w


def weyl_orbit(rs: RootSystem, lam: Weight) -> set[Weight]:
    """Full Weyl-group orbit, by closure under simple reflections."""
    if not is_dominant(lam):
        raise DomainError("weyl_orbit expects a dominant weight")
    lam = tuple(lam)
    seen = {lam}
    queue = [lam]
    while queue:
        w = queue.pop()
        for i in range(rs.rank):
            if w[i]:
                s = reflect(rs, w, i)
                if s not in seen:
                    seen.add(s)
                    queue.append(s)
    return seen


def dominant_weights_below(rs: RootSystem, lam: Weight) -> set[Weight]:
    """All dominant mu with lam - mu a nonnegative integer sum of simple roots.

    These are exactly the dominant weights of the weight system of the
    irreducible module with highest weight lam.  Enumeration walks the
    staircase  {mu >= 0 : root_coords(mu) <= root_coords(lam)}  which is
    downward closed because the inverse Cartan matrix is positive.
    """
    if not is_dominant(lam):
        raise DomainError("dominant_weights_below expects a dominant weight")
    rank = rs.rank
    det = 1  # common denominator of the inverse Cartan matrix
    for row in rs.inverse_cartan:
        for v in row:
            det = lcm(det, v.denominator)
    inv_scaled = [[int(v * det) for v in row] for row in rs.inverse_cartan]
    q_lam = [sum(lam[i] * inv_scaled[i][j] for i in range(rank)) for j in range(rank)]
    out = []
    mu = [0] * rank

    def rec(pos, qpart):
        if pos == rank:
            if all((ql - qp) % det == 0 for ql, qp in zip(q_lam, qpart)):
                out.append(tuple(mu))
            return
        row = inv_scaled[pos]
        v = 0
        while True:
            q2 = [qp + v * rj for qp, rj in zip(qpart, row)]
            if any(a > b for a, b in zip(q2, q_lam)):
                break
            mu[pos] = v
            rec(pos + 1, q2)
            v += 1
        mu[pos] = 0

    rec(0, [0] * rank)
    return set(out)


# --- A-series helpers (partitions vs Dynkin coordinates) ---


def partition_from_dynkin(lam: Weight) -> tuple[int, ...]:
    """Young variables l_i = sum_{j>=i} lam_j, padded with a trailing 0."""
    n = len(lam) + 1
    parts = [0] * n
    acc = 0
    for i in range(n - 2, -1, -1):
        acc += lam[i]
        parts[i] = acc
    return tuple(parts)


def dynkin_from_partition(parts) -> Weight:
    return tuple(parts[i] - parts[i + 1] for i in range(len(parts) - 1))
