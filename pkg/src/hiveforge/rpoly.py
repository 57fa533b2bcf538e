"""The R and R-hat character combinations attached to each simple Lie group.

The support sets K and K-hat are the dominant weights interior to the
convex hull of the Weyl orbit of the Weyl vector rho, computed as the
dominant weight system of rho - xi:

  * rho in the root lattice:  xi = xi_hat = sum of simple roots;
  * otherwise  xi  halves every simple root alpha_j whose coefficient
    in the expansion of rho on simple roots is not an integer, while
    xi_hat keeps the full sum of simple roots.

For SU(n) the coefficients themselves are volume values,
r_kappa = J(rho, rho, kappa + rho), evaluated by stretch interpolation;
when the shift rho - kappa falls outside the root lattice (even n) the
value is taken from the doubled triple via degree-d homogeneity of J.
The published SU(7) combination is stored as data and re-verified
structurally rather than re-derived.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .characters import poly_eval, weyl_character
from .errors import DomainError
from .oblade import BranchingTriple, _as_budget, count_fillings
from .rootsys import (
    LieType,
    RootSystem,
    Weight,
    conjugate,
    dimension,
    dominant_weights_below,
    is_dominant,
    root_system,
    weyl_vector,
)
from .stretch import horn_volume
from .tensor import tensor_decompose

_SET_SIZE_LIMIT = 10_000_000  # staircase bound beyond which K is not materialized


@dataclass(frozen=True)
class CharacterCombo:
    lie_type: LieType
    coeffs: dict  # dominant Weight -> Fraction
    note: str = ""

    def normalization(self) -> Fraction:
        rs = root_system(self.lie_type)
        return sum((c * dimension(rs, k) for k, c in self.coeffs.items()), Fraction(0))


@dataclass(frozen=True)
class KappaSets:
    lie_type: LieType
    K: frozenset | None
    K_hat: frozenset | None
    rho_ring: Weight
    rho_hat_ring: Weight
    equal: bool


def _xi_dynkin(rs: RootSystem, halved: tuple) -> Weight:
    """Dynkin coordinates of sum_j c_j alpha_j with c_j in {1, 1/2}."""
    rank = rs.rank
    out = [Fraction(0)] * rank
    for i in range(rank):
        c = Fraction(1, 2) if halved[i] else Fraction(1)
        for j in range(rank):
            out[j] += c * rs.cartan[i][j]
    if any(v.denominator != 1 for v in out):
        raise DomainError("xi must have integer Dynkin coordinates")
    return tuple(int(v) for v in out)


def _staircase_estimate(rs: RootSystem, lam: Weight) -> int:
    q = rs.to_root_coords(lam)
    est = 1
    for j in range(rs.rank):
        est *= int(q[j] / rs.inverse_cartan[j][j]) + 1
        if est > _SET_SIZE_LIMIT:
            return est
    return est


@lru_cache(maxsize=None)
def kappa_sets(lie_type) -> KappaSets:
    """Supports of R and R-hat for one simple type.

    The sets are left as None when the weight system is too large to
    materialize (currently E7 and E8); the highest weights rho_ring and
    rho_hat_ring are always computed.
    """
    if isinstance(lie_type, str):
        lie_type = LieType.parse(lie_type)
    rs = root_system(lie_type)
    rho = weyl_vector(rs)
    q_rho = rs.to_root_coords(rho)
    rho_in_lattice = all(c.denominator == 1 for c in q_rho)
    halved = tuple(c.denominator != 1 for c in q_rho)

    if rho_in_lattice:
        xi = _xi_dynkin(rs, (False,) * rs.rank)
        rho_ring = tuple(r - x for r, x in zip(rho, xi))
        rho_hat_ring = rho_ring
    else:
        xi = _xi_dynkin(rs, halved)
        rho_ring = tuple(r - x for r, x in zip(rho, xi))
        if lie_type == LieType("A", 1):
            rho_hat_ring = rho  # degenerate rank-1 case, from the known A1 sets
        else:
            xi_hat = _xi_dynkin(rs, (False,) * rs.rank)
            rho_hat_ring = tuple(r - x for r, x in zip(rho, xi_hat))
    if not is_dominant(rho_ring) or not is_dominant(rho_hat_ring):
        raise DomainError(f"rho rings must be dominant, got {rho_ring}, {rho_hat_ring}")

    def maybe_set(top):
        if _staircase_estimate(rs, top) > _SET_SIZE_LIMIT:
            return None
        return frozenset(dominant_weights_below(rs, top))

    K = maybe_set(rho_ring)
    K_hat = K if rho_in_lattice else maybe_set(rho_hat_ring)
    return KappaSets(
        lie_type=lie_type,
        K=K,
        K_hat=K_hat,
        rho_ring=rho_ring,
        rho_hat_ring=rho_hat_ring,
        equal=rho_in_lattice,
    )


def r_coefficients(lie_type, which: str = "R", workers: int = 1, budget=None) -> CharacterCombo:
    """Coefficients r_kappa = J(rho, rho, kappa+rho) for SU(n) = A_{n-1}.

    For even n the base triples are incompatible and J is recovered from
    the doubled triple by homogeneity; those outputs carry a note since
    no published table exists to confirm them.
    """
    if isinstance(lie_type, str):
        lie_type = LieType.parse(lie_type)
    if lie_type.series != "A" or lie_type.rank < 2:
        raise DomainError("r_coefficients handles A-series of rank >= 2 only")
    if which not in ("R", "Rhat"):
        raise DomainError("which must be 'R' or 'Rhat'")
    budget = _as_budget(budget)
    n = lie_type.rank + 1
    d = (n - 1) * (n - 2) // 2
    ks = kappa_sets(lie_type)
    support = ks.K if which == "R" else ks.K_hat
    if support is None:
        raise DomainError(f"kappa set for {lie_type} is not materialized")
    rho = (1,) * lie_type.rank
    coeffs = {}
    doubled = False
    for kappa in sorted(support):
        nu = tuple(k + 1 for k in kappa)
        triple = BranchingTriple(n, rho, rho, nu)
        if triple.is_compatible():
            v = horn_volume(n, rho, rho, nu, workers=workers, budget=budget)
            coeffs[kappa] = v.value
        else:
            two = tuple(2 * x for x in rho)
            v = horn_volume(n, two, two, tuple(2 * x for x in nu), workers=workers, budget=budget)
            coeffs[kappa] = v.value / 2**d
            doubled = True
    combo = CharacterCombo(
        lie_type=lie_type,
        coeffs=coeffs,
        note="computed from doubled triples; no published table to confirm" if doubled else "",
    )
    if combo.normalization() != 1:
        raise DomainError(f"normalization failed for {lie_type}: {combo.normalization()}")
    return combo


# --- the published SU(7) combination, verified structurally ---

_R7_DENOM = 3 * math.factorial(13)
_R7_NUMERATORS = {
    (0, 0, 0, 0, 0, 0): 87766794,
    (0, 1, 1, 1, 1, 0): 2,
    (0, 1, 2, 0, 0, 1): 29,
    (1, 0, 0, 2, 1, 0): 29,
    (0, 2, 0, 0, 2, 0): 38,
    (0, 2, 0, 1, 0, 1): 647,
    (1, 0, 1, 0, 2, 0): 647,
    (0, 0, 0, 1, 2, 0): 3575,
    (0, 2, 1, 0, 0, 0): 3575,
    (1, 0, 1, 1, 0, 1): 13188,
    (0, 0, 0, 2, 0, 1): 75599,
    (1, 0, 2, 0, 0, 0): 75599,
    (1, 1, 0, 0, 1, 1): 88248,
    (2, 0, 0, 0, 0, 2): 313706,
    (0, 0, 1, 0, 1, 1): 554727,
    (1, 1, 0, 1, 0, 0): 554727,
    (0, 1, 0, 0, 0, 2): 2157704,
    (2, 0, 0, 0, 1, 0): 2157704,
    (0, 0, 1, 1, 0, 0): 3601542,
    (0, 1, 0, 0, 1, 0): 15350862,
    (1, 0, 0, 0, 0, 1): 46669412,
}

# dimensions quoted with the table, keyed by weight
_R7_QUOTED_DIMS = {
    (0, 0, 0, 0, 0, 0): 1,
    (0, 1, 1, 1, 1, 0): 105840,
    (0, 1, 2, 0, 0, 1): 30870,
    (1, 0, 0, 2, 1, 0): 30870,
    (0, 2, 0, 0, 2, 0): 27000,
    (0, 2, 0, 1, 0, 1): 26460,
    (1, 0, 1, 0, 2, 0): 26460,
    (0, 0, 0, 1, 2, 0): 3528,
    (0, 2, 1, 0, 0, 0): 3528,
    (1, 0, 1, 1, 0, 1): 24500,
    (0, 0, 0, 2, 0, 1): 2646,
    (1, 0, 2, 0, 0, 0): 2646,
    (1, 1, 0, 0, 1, 1): 10240,
    (2, 0, 0, 0, 0, 2): 735,
    (0, 0, 1, 0, 1, 1): 2940,
    (1, 1, 0, 1, 0, 0): 2940,
    (0, 1, 0, 0, 0, 2): 540,
    (2, 0, 0, 0, 1, 0): 540,
    (0, 0, 1, 1, 0, 0): 784,
    (0, 1, 0, 0, 1, 0): 392,
    (1, 0, 0, 0, 0, 1): 48,
}


def r7_combo() -> CharacterCombo:
    coeffs = {w: Fraction(num, _R7_DENOM) for w, num in _R7_NUMERATORS.items()}
    return CharacterCombo(lie_type=LieType("A", 6), coeffs=coeffs, note="stored table")


@dataclass(frozen=True)
class R7Report:
    support_matches_kappa_set: bool
    conjugate_pairs_share_coefficients: bool
    quoted_dimensions_match: bool
    normalization: Fraction
    coefficients_nonnegative: bool

    @property
    def ok(self) -> bool:
        return (
            self.support_matches_kappa_set
            and self.conjugate_pairs_share_coefficients
            and self.quoted_dimensions_match
            and self.normalization == 1
            and self.coefficients_nonnegative
        )


def verify_r7() -> R7Report:
    """Structural verification of the stored SU(7) combination."""
    combo = r7_combo()
    rs = root_system("A6")
    ks = kappa_sets("A6")
    support_ok = ks.K == frozenset(combo.coeffs)
    pairs_ok = all(
        combo.coeffs[w] == combo.coeffs[conjugate(rs, w)] for w in combo.coeffs
    )
    dims_ok = all(dimension(rs, w) == d for w, d in _R7_QUOTED_DIMS.items())
    total = combo.normalization()
    nonneg = all(c >= 0 for c in combo.coeffs.values())
    return R7Report(
        support_matches_kappa_set=support_ok,
        conjugate_pairs_share_coefficients=pairs_ok,
        quoted_dimensions_match=dims_ok,
        normalization=total,
        coefficients_nonnegative=nonneg,
    )


def g2_combo() -> CharacterCombo:
    """The known G2 combination (weights ordered long, short)."""
    coeffs = {
        (0, 0): Fraction(1, 9),
        (0, 1): Fraction(13, 144),
        (0, 2): Fraction(1, 432),
        (1, 0): Fraction(1, 72),
    }
    return CharacterCombo(lie_type=LieType("G", 2), coeffs=coeffs, note="stored table")


def local_average_volume(n: int, lam, mu, nu, combo: CharacterCombo, budget=None) -> Fraction:
    """J(lam', mu', nu') as a finite average of LR coefficients:
    sum over kappa in the combo support and tau of
    r_kappa * C_{lam,mu}^{tau} * C_{tau,kappa}^{nu}.
    """
    if combo.lie_type.series != "A" or combo.lie_type.rank != n - 1:
        raise DomainError("combo does not match the requested SU(n)")
    budget = _as_budget(budget)
    triple = BranchingTriple(n, tuple(lam), tuple(mu), tuple(nu))
    if not triple.is_compatible():
        raise DomainError("incompatible triple")
    dec = tensor_decompose(n, tuple(lam), tuple(mu), budget=budget)
    total = Fraction(0)
    for kappa, r in combo.coeffs.items():
        for tau, c1 in dec.items():
            c2 = count_fillings(BranchingTriple(n, tau, kappa, tuple(nu)), budget=budget)
            if c2:
                total += r * c1 * c2
    return total


# --- the iterated (Mittag-Leffler) series for R_n ---


def _pair_windows(n: int):
    return [(i, ip) for i in range(1, n + 1) for ip in range(i + 1, n + 1)]


def series_R(n: int, u, radius: int) -> float:
    """Box-truncated iterated series for R_n at angles u = (u_1..u_{n-1}).

    Sums the product over index windows 1 <= i < i' <= n of
    1 / (u_i + ... + u_{i'-1} + 2*pi*(p_i + ... + p_{i'-1})) over the box
    |p_j| <= radius, with sign (-1)^{(n-1) * sum_j j*p_j}, then multiplies
    by the product of 2*sin(half window sums).  n = 2 diverges and is
    rejected.  Accumulation is pairwise within fixed-order chunks.
    """
    if n < 3:
        raise DomainError("the iterated series diverges for n = 2")
    u = [float(x) for x in u]
    if len(u) != n - 1:
        raise DomainError(f"need {n - 1} angles")
    windows = _pair_windows(n)
    usum = {}
    for i, ip in windows:
        usum[(i, ip)] = sum(u[i - 1 : ip - 1])
        if abs(math.sin(usum[(i, ip)] / 2.0)) < 1e-12:
            raise DomainError("singular angles: a window sum is a multiple of 2*pi")

    prefactor = 1.0
    for w in windows:
        prefactor *= 2.0 * math.sin(usum[w] / 2.0)

    m = n - 1
    rng = np.arange(-radius, radius + 1)
    twopi = 2.0 * math.pi
    sign_even = (n - 1) % 2 == 0

    # broadcast axes: one per p_j, chunked over p_1
    chunk_totals = []
    shapes = [tuple(len(rng) if k == j else 1 for k in range(m - 1)) for j in range(m - 1)]
    grids = [rng.reshape(shapes[j]) for j in range(m - 1)]  # p_2..p_m
    for p1 in rng:
        denom_prod = None
        for i, ip in windows:
            s = usum[(i, ip)]
            psum = 0.0
            needs = range(i, ip)  # p_i..p_{ip-1}, 1-based
            arr = None
            for j in needs:
                g = p1 if j == 1 else grids[j - 2]
                arr = g if arr is None else arr + g
            if arr is None:
                vals = s
            else:
                vals = s + twopi * arr
            denom_prod = (1.0 / vals) if denom_prod is None else denom_prod * (1.0 / vals)
        if not sign_even:
            weighted = p1  # sum_j j*p_j
            for j in range(2, m + 1):
                weighted = weighted + j * grids[j - 2]
            signs = np.where((weighted % 2) == 0, 1.0, -1.0)
            denom_prod = denom_prod * signs
        chunk_totals.append(float(np.sum(denom_prod)))
    return prefactor * math.fsum(chunk_totals)


@lru_cache(maxsize=None)
def _series_combo(n: int) -> CharacterCombo:
    return r_coefficients(LieType("A", n - 1))


def character_form_value(n: int, u) -> float:
    """The character-side value of R_n at the torus point given by u."""
    u = [float(x) for x in u]
    if len(u) != n - 1:
        raise DomainError(f"need {n - 1} angles")
    tn = -sum((j + 1) * u[j] for j in range(n - 1)) / n
    t = [tn + sum(u[j:]) for j in range(n - 1)] + [tn]
    y = [cmath.exp(1j * sum(t[: j + 1])) for j in range(n - 1)]
    combo = _series_combo(n)
    total = 0j
    for kappa, r in sorted(combo.coeffs.items()):
        total += complex(r) * poly_eval(weyl_character(n, kappa), y)
    assert abs(total.imag) < 1e-8
    return total.real
