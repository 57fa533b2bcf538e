"""Stretching (LR) polynomials and Horn volume values, exactly.

For a compatible SU(n) triple with nonzero multiplicity, the map
s -> C_{s*lam, s*mu}^{s*nu} is a polynomial of degree at most
d = (n-1)(n-2)/2.  We sample s = 0..d, interpolate by exact Newton
forward differences, and by default verify the interpolant against one
extra sample at s = d+1.  The Horn volume value is the coefficient of
s^d; the triple is reported non-generic when that coefficient vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DomainError, InconsistencyError
from .oblade import BranchingTriple, _as_budget, count_fillings
from .rootsys import Weight

A_SERIES_ONLY = "stretching polynomials are only defined here for SU(n)"


@dataclass(frozen=True)
class StretchPolynomial:
    coeffs: tuple  # Fractions, index = power of s
    degree_bound: int
    n: int
    lam: Weight
    mu: Weight
    nu: Weight

    @property
    def degree(self) -> int:
        d = len(self.coeffs) - 1
        while d > 0 and self.coeffs[d] == 0:
            d -= 1
        return d

    def __str__(self):
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(f"{c}")
            elif k == 1:
                terms.append(f"{c}*s")
            else:
                terms.append(f"{c}*s^{k}")
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class VolumeValue:
    value: Fraction
    generic: bool


def _scaled(w: Weight, s: int) -> Weight:
    return tuple(s * c for c in w)


def _newton_interpolate(samples) -> tuple:
    """Exact interpolant through (k, samples[k]), coefficients in s powers."""
    m = len(samples)
    diffs = [Fraction(v) for v in samples]
    deltas = [diffs[0]]
    for level in range(1, m):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        deltas.append(diffs[0])
    coeffs = [Fraction(0)] * m
    basis = [Fraction(1)]  # binomial(s, k) written in the monomial basis
    for k, delta in enumerate(deltas):
        for p, b in enumerate(basis):
            coeffs[p] += delta * b
        # basis *= (s - k) / (k + 1)
        nxt = [Fraction(0)] * (len(basis) + 1)
        for p, b in enumerate(basis):
            nxt[p + 1] += b
            nxt[p] -= k * b
        basis = [v / (k + 1) for v in nxt]
    return tuple(coeffs)


def stretch_polynomial(
    n: int,
    lam: Weight,
    mu: Weight,
    nu: Weight,
    workers: int = 1,
    budget=None,
    check_guard: bool = True,
) -> StretchPolynomial:
    """Interpolate s -> C_{s*lam, s*mu}^{s*nu} through s = 0..d exactly."""
    triple = BranchingTriple(n, lam, mu, nu)
    if not triple.is_compatible():
        raise DomainError("triple is not compatible (lam+mu-nu outside the root lattice)")
    budget = _as_budget(budget)
    d = (n - 1) * (n - 2) // 2
    samples = []
    for s in range(d + 1):
        t = BranchingTriple(n, _scaled(lam, s), _scaled(mu, s), _scaled(nu, s))
        samples.append(count_fillings(t, workers=workers, budget=budget))
    if samples[1] == 0:
        raise DomainError("zero multiplicity at s=1; no stretching polynomial")
    coeffs = _newton_interpolate(samples)
    poly = StretchPolynomial(coeffs, d, n, tuple(lam), tuple(mu), tuple(nu))
    if check_guard:
        s = d + 1
        t = BranchingTriple(n, _scaled(lam, s), _scaled(mu, s), _scaled(nu, s))
        expect = count_fillings(t, workers=workers, budget=budget)
        if evaluate(poly, s) != expect:
            raise InconsistencyError(
                f"interpolant fails the guard sample at s={s}: {evaluate(poly, s)} != {expect}"
            )
    return poly


def evaluate(poly: StretchPolynomial, s: int) -> int:
    """Exact evaluation; the result must be an integer."""
    if s < 0:
        raise DomainError("scale must be nonnegative")
    acc = Fraction(0)
    power = 1
    for c in poly.coeffs:
        acc += c * power
        power *= s
    if acc.denominator != 1:
        raise InconsistencyError(f"non-integer value {acc} at s={s}")
    return int(acc)


def horn_volume(n: int, lam: Weight, mu: Weight, nu: Weight, workers: int = 1, budget=None) -> VolumeValue:
    """Leading (degree-d) coefficient of the stretching polynomial."""
    poly = stretch_polynomial(n, lam, mu, nu, workers=workers, budget=budget)
    top = poly.coeffs[poly.degree_bound] if len(poly.coeffs) > poly.degree_bound else Fraction(0)
    return VolumeValue(value=top, generic=top != 0)


def sanity_denominator_bound(poly: StretchPolynomial) -> bool:
    """All coefficient denominators divide d! (finite-difference property)."""
    f = factorial(poly.degree_bound)
    return all((c * f).denominator == 1 for c in poly.coeffs)
