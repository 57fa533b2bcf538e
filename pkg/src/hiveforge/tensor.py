"""Full tensor-product decomposition over SU(n) and Kostka numbers.

Kostka numbers are reached through the stabilization identity
K_{lam,delta} = C_{lam,p*rho}^{delta+p*rho} for p past the bound
b_lam = sum of the Dynkin components of lam; we evaluate once at
p = b_lam + 1.
"""

from __future__ import annotations

from .errors import DomainError
from .oblade import BranchingTriple, _as_budget, count_fillings
from .rootsys import (
    Weight,
    dominant_representative,
    dynkin_from_partition,
    is_dominant,
    partition_from_dynkin,
    root_system,
)

Decomposition = dict


def _candidate_partitions(total: int, parts: int, cap: int):
    """Nonincreasing tuples of `parts` nonnegative integers with the given sum."""
    out = []
    cur = [0] * parts

    def rec(pos, remaining, prev):
        if pos == parts - 1:
            if remaining <= prev:
                cur[pos] = remaining
                out.append(tuple(cur))
            return
        left = parts - pos - 1
        lo = -(-remaining // (left + 1))  # ceil: keep room for nonincreasing tail
        for v in range(min(prev, remaining), lo - 1, -1):
            cur[pos] = v
            rec(pos + 1, remaining - v, v)

    rec(0, total, min(cap, total))
    return out


def tensor_decompose(n: int, lam: Weight, mu: Weight, workers: int = 1, budget=None) -> Decomposition:
    """Map nu -> C_{lam,mu}^{nu} over all nu with nonzero multiplicity."""
    if not (is_dominant(lam) and is_dominant(mu)):
        raise DomainError("tensor_decompose expects dominant weights")
    budget = _as_budget(budget)
    la = partition_from_dynkin(lam)
    mb = partition_from_dynkin(mu)
    total = sum(la) + sum(mb)
    cap = la[0] + mb[0]
    result = {}
    cands = _candidate_partitions(total, n, cap)
    if workers > 1:
        import multiprocessing as mp

        args = [(n, lam, mu, dynkin_from_partition(p)) for p in cands]
        with mp.Pool(workers) as pool:
            counts = pool.map(_count_one, args, chunksize=max(1, len(args) // (8 * workers)))
        for (_, _, _, nu), c in zip(args, counts):
            if c:
                result[nu] = c
        if budget:
            budget.charge(sum(result.values()))
    else:
        for p in cands:
            nu = dynkin_from_partition(p)
            c = count_fillings(BranchingTriple(n, lam, mu, nu), budget=budget)
            if c:
                result[nu] = c
    return dict(sorted(result.items()))


def _count_one(args):
    n, lam, mu, nu = args
    return count_fillings(BranchingTriple(n, lam, mu, nu))


def kostka(n: int, lam: Weight, delta: Weight, budget=None) -> int:
    """Multiplicity of the weight delta in the weight system of lam."""
    if not is_dominant(lam):
        raise DomainError("kostka expects a dominant highest weight")
    rs = root_system(f"A{n - 1}")
    delta = dominant_representative(rs, tuple(delta))
    if (sum(partition_from_dynkin(lam)) - sum(partition_from_dynkin(delta))) % n:
        return 0
    p = sum(lam) + 1
    prho = (p,) * (n - 1)
    nu = tuple(d + p for d in delta)
    return count_fillings(BranchingTriple(n, lam, prho, nu), budget=budget)


def kostka_sequence(n: int, lam: Weight, delta: Weight, p_max: int, budget=None) -> list[int]:
    """[C_{lam, p*rho}^{delta + p*rho}] for p = 1..p_max."""
    if p_max < 1:
        raise DomainError("p_max must be >= 1")
    rs = root_system(f"A{n - 1}")
    delta = dominant_representative(rs, tuple(delta))
    budget = _as_budget(budget)
    out = []
    for p in range(1, p_max + 1):
        prho = (p,) * (n - 1)
        nu = tuple(d + p for d in delta)
        triple = BranchingTriple(n, lam, prho, nu)
        out.append(count_fillings(triple, budget=budget) if triple.is_compatible() else 0)
    return out
