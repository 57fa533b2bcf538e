"""Weyl characters of SU(n) as exact Laurent polynomials.

Characters live in the torus coordinates y_1..y_{n-1}: the Schur
polynomial in X-variables is rewritten through X_1 = y_1,
X_j = y_j/y_{j-1} with y_n = 1, so a monomial's y-exponent vector is
exactly a weight in Dynkin coordinates.  A Laurent polynomial is a dict
mapping exponent tuples to nonzero coefficients (ints, or Fractions for
rational combinations).

Characters are assembled from dominant weight multiplicities (computed
by the Freudenthal recursion in Young variables, all-integer) expanded
over Weyl orbits; Schur polynomials for the symmetric-function basis
conversions are built independently by Jacobi-Trudi determinants, and
the two routes are cross-checked in the tests.  Character products
decomposed by iterated subtraction of highest terms give a

Littlewood-Richardson oracle that shares no machinery with the O-blade
counter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

from .errors import BudgetError, DomainError
from .rootsys import (
    Weight,
    dynkin_from_partition,
    is_dominant,
    partition_from_dynkin,
)

LaurentPoly = dict


# --- generic sparse polynomial helpers ---


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    out = dict(p)
    for k, v in q.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def poly_scale(p: LaurentPoly, c) -> LaurentPoly:
    if c == 0:
        return {}
    return {k: c * v for k, v in p.items()}


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if len(p) > len(q):
        p, q = q, p
    out = {}
    qi = q.items()
    for ke, ve in p.items():
        for kf, vf in qi:
            key = tuple(a + b for a, b in zip(ke, kf))
            s = out.get(key, 0) + ve * vf
            if s:
                out[key] = s
            else:
                del out[key]
    return out


def poly_sub(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return poly_add(p, poly_scale(q, -1))


def poly_eval(p: LaurentPoly, values) -> complex:
    total = 0
    for expo, coeff in sorted(p.items()):
        term = complex(coeff)
        for e, v in zip(expo, values):
            term *= v**e
        total += term
    return total


def poly_pretty(p: LaurentPoly, names=None) -> str:
    """Canonical text form, graded lexicographic on exponent vectors."""
    if not p:
        return "0"
    keys = sorted(p, key=lambda e: (-sum(abs(x) for x in e), tuple(-x for x in e)))
    nvars = len(keys[0])
    names = names or [f"y{i+1}" for i in range(nvars)]
    chunks = []
    for k in keys:
        c = p[k]
        mono = "*".join(
            (names[i] if e == 1 else f"{names[i]}^{e}") for i, e in enumerate(k) if e
        )
        if mono:
            chunks.append(f"{c}*{mono}")
        else:
            chunks.append(f"{c}")
    return " + ".join(chunks)


# --- dominant weight multiplicities (Freudenthal, in Young variables) ---


def _young(lam: Weight) -> tuple:
    return partition_from_dynkin(lam)


@lru_cache(maxsize=None)
def dominant_weight_multiplicities(n: int, lam: Weight) -> dict:
    """Map dominant weight (Dynkin) -> multiplicity in the irrep lam.

    Freudenthal recursion over Young variables; inner products are the
    A_{n-1}-invariant form n*<v,w> = n*sum(v_i w_i) - sum(v) sum(w),
    kept integral by clearing the 1/n.
    """
    if not is_dominant(lam):
        raise DomainError("dominant weight multiplicities need a dominant weight")
    lam = tuple(lam)
    lamy = _young(lam)
    rhoy = tuple(range(n - 1, -1, -1))
    roots = [(i, j) for i in range(n) for j in range(i + 1, n)]

    def ip(v, w):  # n * invariant form
        return n * sum(a * b for a, b in zip(v, w)) - sum(v) * sum(w)

    # dominant weights below lam, as sorted Young tuples of the same size
    from .rootsys import dominant_weights_below, root_system

    rs = root_system(f"A{n-1}")
    doms = dominant_weights_below(rs, lam)
    size = sum(lamy)
    table = {}  # Young tuple -> multiplicity
    order = []
    for mu in doms:
        muy = _young(mu)
        shift = (size - sum(muy)) // n
        muy = tuple(p + shift for p in muy)
        order.append(muy)
    order.sort(key=lambda t: ip(t, t), reverse=True)

    lam_norm = ip(tuple(a + b for a, b in zip(lamy, rhoy)), tuple(a + b for a, b in zip(lamy, rhoy)))
    lamy_shifted = order[0]
    assert lamy_shifted == lamy
    table[lamy] = 1
    for muy in order[1:]:
        mur = tuple(a + b for a, b in zip(muy, rhoy))
        den = lam_norm - ip(mur, mur)
        num = 0
        for i, j in roots:
            t = 1
            while True:
                w = list(muy)
                w[i] += t
                w[j] -= t
                key = tuple(sorted(w, reverse=True))
                m = table.get(key)
                if not m:
                    break
                num += 2 * m * n * (w[i] - w[j])  # 2 * n * <w, e_i - e_j>
                t += 1
        assert num % den == 0, (lam, muy)
        table[muy] = num // den
    out = {}
    for muy, m in table.items():
        out[dynkin_from_partition(muy)] = m
    return out


def _orbit_young(young: tuple):
    """Distinct permutations of a Young tuple."""
    seen = set()
    for p in permutations(young):
        if p not in seen:
            seen.add(p)
            yield p


def _x_exponent_to_y(a: tuple) -> tuple:
    n = len(a)
    return tuple(a[j] - a[j + 1] for j in range(n - 1))


@lru_cache(maxsize=None)
def weyl_character(n: int, lam: Weight) -> LaurentPoly:
    """Character of the SU(n) irrep lam, in torus coordinates y_1..y_{n-1}."""
    lam = tuple(lam)
    out = {}
    for mu, mult in dominant_weight_multiplicities(n, lam).items():
        for perm in _orbit_young(_young(mu)):
            key = _x_exponent_to_y(perm)
            out[key] = out.get(key, 0) + mult
    return out


def character_dimension(n: int, lam: Weight) -> int:
    return sum(weyl_character(n, lam).values())


# --- character products and the LR oracle ---


@lru_cache(maxsize=None)
def _height_weights(n: int) -> tuple:
    from .rootsys import root_system

    rs = root_system(f"A{n-1}")
    inv = rs.inverse_cartan
    return tuple(sum(inv[j][i] for j in range(n - 1)) for i in range(n - 1))


def _highest(keys, hw):
    best = None
    best_rank = None
    for k in keys:
        r = (sum(h * e for h, e in zip(hw, k)), k)
        if best_rank is None or r > best_rank:
            best_rank = r
            best = k
    return best


def decompose_product(n: int, lam: Weight, mu: Weight, term_budget: int = 5_000_000) -> dict:
    """LR decomposition by character multiplication and iterated subtraction.

    The product is reduced on its dominant monomials: the highest
    remaining term is a highest weight, and subtracting its multiple of
    the corresponding dominant character table peels one component off.
    """
    lam, mu = tuple(lam), tuple(mu)
    chl, chm = weyl_character(n, lam), weyl_character(n, mu)
    if len(chl) * len(chm) > term_budget:
        raise BudgetError("character product exceeds the term budget")
    prod = poly_mul(chl, chm)
    dom = {k: v for k, v in prod.items() if all(e >= 0 for e in k)}
    hw = _height_weights(n)
    result = {}
    while dom:
        top = _highest(dom.keys(), hw)
        mult = dom[top]
        assert mult > 0, "subtraction produced a negative dominant coefficient"
        result[top] = mult
        for w, m in dominant_weight_multiplicities(n, top).items():
            s = dom.get(w, 0) - mult * m
            if s:
                dom[w] = s
            else:
                dom.pop(w, None)
    return dict(sorted(result.items()))


# --- symmetric polynomial bases (in n X-variables, then on the torus) ---


@dataclass(frozen=True)
class SymmetricPolySpec:
    basis: str  # schur | elementary | monomial | power_sum
    index: tuple  # partition, weakly decreasing nonnegative

    def __post_init__(self):
        if self.basis not in ("schur", "elementary", "monomial", "power_sum"):
            raise DomainError(f"unknown basis {self.basis!r}")
        idx = tuple(self.index)
        if any(a < b for a, b in zip(idx, idx[1:])) or any(p < 0 for p in idx):
            raise DomainError("index must be a partition")


@lru_cache(maxsize=None)
def _complete_homogeneous(k: int, n: int) -> dict:
    """h_k in X_1..X_n as an X-exponent dict."""
    if k < 0:
        return {}
    if k == 0:
        return {(0,) * n: 1}
    out = {}

    def rec(pos, remaining, cur):
        if pos == n - 1:
            cur[pos] = remaining
            key = tuple(cur)
            out[key] = 1
            return
        for v in range(remaining + 1):
            cur[pos] = v
            rec(pos + 1, remaining - v, cur)

    rec(0, k, [0] * n)
    return out


def _det(matrix) -> dict:
    """Determinant of a matrix of X-polynomials, by first-column expansion."""
    m = len(matrix)
    nvars = len(next(iter(matrix[0][0])))
    memo = {}

    def rec(rows, col):
        if not rows:
            return {(0,) * nvars: 1}
        key = rows
        cached = memo.get(key)
        if cached is not None:
            return cached
        total = {}
        for pick, r in enumerate(rows):
            entry = matrix[r][col]
            if not entry:
                continue
            sub = rec(rows[:pick] + rows[pick + 1 :], col + 1)
            term = poly_mul(entry, sub)
            total = poly_add(total, term) if pick % 2 == 0 else poly_sub(total, term)
        memo[key] = total
        return total

    return rec(tuple(range(m)), 0)


def schur_x(partition: tuple, n: int) -> dict:
    """Schur polynomial s_partition in n X-variables (Jacobi-Trudi)."""
    p = tuple(partition) + (0,) * (n - len(partition))
    if len(p) > n and any(v for v in p[n:]):
        raise DomainError("partition has more parts than variables")
    p = p[:n]
    matrix = [[_complete_homogeneous(p[i] - i + j, n) for j in range(n)] for i in range(n)]
    return _det(matrix)


def elementary_x(k: int, n: int) -> dict:
    out = {}
    for idxs in combinations(range(n), k):
        key = tuple(1 if i in idxs else 0 for i in range(n))
        out[key] = 1
    return out


def monomial_x(partition: tuple, n: int) -> dict:
    p = tuple(partition) + (0,) * (n - len(partition))
    if len(p) > n:
        raise DomainError("partition has more parts than variables")
    return {perm: 1 for perm in _orbit_young(p[:n])}


def power_sum_x(k: int, n: int) -> dict:
    out = {}
    for i in range(n):
        key = tuple(k if j == i else 0 for j in range(n))
        out[key] = 1
    return out


def torus_specialize(px: dict) -> LaurentPoly:
    """Impose y_n = X_1...X_n = 1: rewrite X-monomials in y-exponents."""
    out = {}
    for a, c in px.items():
        key = _x_exponent_to_y(a)
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            del out[key]
    return out


def expand_basis(spec: SymmetricPolySpec, n: int) -> LaurentPoly:
    """The named symmetric polynomial in n variables, on the SU(n) torus."""
    idx = tuple(spec.index)
    if len([p for p in idx if p]) > n:
        raise DomainError("partition length exceeds the number of variables")
    if spec.basis == "schur":
        px = schur_x(idx, n)
    elif spec.basis == "monomial":
        px = monomial_x(idx, n)
    else:
        nvars = len(idx)
        px = {(0,) * n: 1}
        for part in idx:
            if part == 0:
                continue
            factor = elementary_x(part, n) if spec.basis == "elementary" else power_sum_x(part, n)
            px = poly_mul(px, factor)
    return torus_specialize(px)


def verify_alternative_R5_forms() -> bool:
    """All four printed expressions for the SU(5) R-combination agree."""
    n = 5

    def e(k):
        return torus_specialize(elementary_x(k, n))

    def pw(k):
        return torus_specialize(power_sum_x(k, n))

    def m(part):
        return torus_specialize(monomial_x(tuple(part), n))

    one = {(0,) * (n - 1): 1}

    character_form = poly_add(
        poly_scale(one, Fraction(45, 360)),
        poly_add(
            poly_scale(weyl_character(5, (1, 0, 0, 1)), Fraction(10, 360)),
            poly_scale(weyl_character(5, (0, 1, 1, 0)), Fraction(1, 360)),
        ),
    )

    schur_form = poly_add(
        poly_scale(torus_specialize(schur_x((2, 1, 1, 1, 0), n)), Fraction(1, 36)),
        poly_add(
            poly_scale(torus_specialize(schur_x((2, 2, 1, 0, 0), n)), Fraction(1, 360)),
            poly_scale(one, Fraction(1, 8)),
        ),
    )

    elementary_form = poly_scale(
        poly_add(
            poly_add(poly_mul(e(2), e(3)), poly_scale(poly_mul(e(1), e(4)), 9)),
            poly_add(poly_scale(e(5), -10), poly_scale(one, 45)),
        ),
        Fraction(1, 360),
    )

    monomial_form = poly_add(
        poly_scale(poly_add(poly_scale(m((1, 1, 1, 1, 1)), 4), m((2, 1, 1, 1, 0))), Fraction(1, 36)),
        poly_add(
            poly_scale(
                poly_add(
                    poly_scale(m((1, 1, 1, 1, 1)), 5),
                    poly_add(poly_scale(m((2, 1, 1, 1, 0)), 2), m((2, 2, 1, 0, 0))),
                ),
                Fraction(1, 360),
            ),
            poly_scale(one, Fraction(1, 8)),
        ),
    )

    p1, p2, p3, p4, p5 = pw(1), pw(2), pw(3), pw(4), pw(5)
    p1sq = poly_mul(p1, p1)
    p1cube = poly_mul(p1sq, p1)
    power_form = poly_scale(
        poly_add(
            poly_add(
                poly_scale(poly_mul(p1cube, p1sq), 3),
                poly_add(
                    poly_scale(poly_mul(p2, p1cube), -14),
                    poly_scale(poly_mul(p3, p1sq), 12),
                ),
            ),
            poly_add(
                poly_mul(poly_add(poly_mul(p2, p2), poly_scale(p4, 2)), p1),
                poly_scale(
                    poly_add(poly_scale(poly_mul(p2, p3), 3), poly_add(poly_scale(p5, -4), poly_scale(one, 90))),
                    4,
                ),
            ),
        ),
        Fraction(1, 2880),
    )

    def normalized(p):
        return {k: Fraction(v) for k, v in p.items()}

    ref = normalized(character_form)
    return all(
        normalized(form) == ref
        for form in (schur_form, elementary_form, monomial_form, power_form)
    )
