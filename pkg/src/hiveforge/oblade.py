"""O-blade constraint model for SU(n) tensor multiplicities.

An O-blade for SU(n) is a triangle whose three sides carry the Dynkin
labels of highest weights lambda, mu (clockwise) and nu
(counterclockwise), and whose 3*n*(n-1)/2 inner edges carry nonnegative
integers subject to two families of linear constraints:

  * conservation at each of the 3(n-1) side vertices: the side's Dynkin
    label equals the sum of the two inner edges entering the triangle,
  * at each of the (n-1)(n-2)/2 inner vertices with cyclically ordered
    incident edges e1..e6: e1+e2 = e4+e5 and e2+e3 = e5+e6 (equality of
    opposite angle sums; the third relation follows).

The number of integer solutions is the Littlewood-Richardson
coefficient C_{lambda,mu}^{nu}.

Edge indexing (documented contract, stable across versions): edges come
in three direction families, 0 parallel to the lambda side, 1 parallel
to the mu side, 2 parallel to the nu side.  Within a family, edges are
grouped into the lines parallel to that side (line index j = 1..n-1,
counting away from the side) and ordered along each line; the global
index sorts by (family, line, position).  Each edge is tagged with the
positive root alpha_a + ... + alpha_b it contributes to when the labels
of its family are accumulated into the family's Kostant vector.

Internally, solutions are enumerated through the equivalent integer
chart given by heights on the triangular lattice: every filling arises
from exactly one integer assignment of the (n-1)(n-2)/2 interior
heights, with each inner-edge label a fixed +/-1 combination of four
heights, and the constraints become one inequality per inner edge.  The
search assigns interior heights in a fixed order, maintains a [lo, hi]
window per height under bound propagation, and backtracks on empty
windows; counting sums window widths at the last level instead of
materializing solutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetError, DomainError
from .rootsys import (
    Weight,
    conjugate,
    is_dominant,
    is_in_root_lattice,
    partition_from_dynkin,
    root_system,
)

_INF = 1 << 60

# cyclic (counterclockwise) neighbor steps around a lattice point
_CYCLE = ((1, 0, -1), (1, -1, 0), (0, -1, 1), (-1, 0, 1), (-1, 1, 0), (0, 1, -1))


@dataclass(frozen=True)
class Edge:
    index: int
    ends: tuple  # pair of lattice points (x, y, z)
    family: int  # 0 lambda-parallel, 1 mu-parallel, 2 nu-parallel
    line: int
    pos: int
    root: tuple  # (a, b): simple-root interval alpha_a..alpha_b, 1-based
    rhombus: tuple  # (b, c, a, d) point indices: label = h_b + h_c - h_a - h_d


class ObladeShape:
    """Static combinatorics of the SU(n) O-blade."""

    def __init__(self, n: int):
        if n < 2:
            raise DomainError("O-blades need n >= 2")
        self.n = n
        pts = []
        for x in range(n, -1, -1):
            for y in range(n - x + 1):
                pts.append((x, y, n - x - y))
        self.points = tuple(pts)
        self.point_index = {p: i for i, p in enumerate(pts)}
        self.inner_vertices = tuple(
            sorted((p for p in pts if min(p) >= 1), key=lambda p: (-p[0], p[1]))
        )
        self.inner_vertex_count = len(self.inner_vertices)
        assert self.inner_vertex_count == (n - 1) * (n - 2) // 2

        edges = []
        for j in range(1, n):  # family 0: lines z = j (lambda-parallel)
            line_pts = [(n - j - k, k, j) for k in range(n - j + 1)]
            for k in range(1, n - j + 1):
                kp = n - j - k + 1
                edges.append((0, j, k, (kp, kp + j - 1), (line_pts[k - 1], line_pts[k])))
        for j in range(1, n):  # family 1: lines x = j (mu-parallel)
            line_pts = [(j, n - j - k, k) for k in range(n - j + 1)]
            for k in range(1, n - j + 1):
                kp = n - j - k + 1
                edges.append((1, j, k, (kp, kp + j - 1), (line_pts[k - 1], line_pts[k])))
        for j in range(1, n):  # family 2: lines y = j (nu-parallel)
            line_pts = [(n - j - k, j, k) for k in range(n - j + 1)]
            for k in range(1, n - j + 1):
                edges.append((2, j, k, (k, k + j - 1), (line_pts[k - 1], line_pts[k])))
        edges.sort(key=lambda e: e[:3])

        built = []
        for idx, (fam, line, pos, root, (p, q)) in enumerate(edges):
            a, d = self._apexes(p, q)
            rh = (self.point_index[p], self.point_index[q], self.point_index[a], self.point_index[d])
            built.append(Edge(idx, (p, q), fam, line, pos, root, rh))
        self.edges = tuple(built)
        assert len(self.edges) == 3 * n * (n - 1) // 2
        self._edge_by_ends = {frozenset(e.ends): e.index for e in self.edges}

        # cyclically ordered incident edges per inner vertex
        incidence = []
        for v in self.inner_vertices:
            ring = []
            for step in _CYCLE:
                u = (v[0] + step[0], v[1] + step[1], v[2] + step[2])
                ring.append(self._edge_by_ends[frozenset((v, u))])
            incidence.append(tuple(ring))
        self.incidence = tuple(incidence)

        # boundary conservation: label -> the two inner edges at that side vertex
        groups = []
        for k in range(1, n):  # lambda side, vertex (n-k, k, 0)
            v = (n - k, k, 0)
            groups.append(("lambda", k, self._inward_edges(v, ((-1, 0, 1), (0, -1, 1)))))
        for k in range(1, n):  # mu side, vertex (0, n-k, k)
            v = (0, n - k, k)
            groups.append(("mu", k, self._inward_edges(v, ((1, -1, 0), (1, 0, -1)))))
        for k in range(1, n):  # nu side, vertex (n-k, 0, k)
            v = (n - k, 0, k)
            groups.append(("nu", k, self._inward_edges(v, ((-1, 1, 0), (0, 1, -1)))))
        self.boundary = tuple(groups)
        self.direction = {e.index: e.family for e in self.edges}

    def _apexes(self, p, q):
        common = []
        for step in _CYCLE:
            u = (p[0] + step[0], p[1] + step[1], p[2] + step[2])
            if u in self.point_index and max(abs(u[i] - q[i]) for i in range(3)) <= 1 and u != q:
                if sum(abs(u[i] - q[i]) for i in range(3)) == 2:
                    common.append(u)
        assert len(common) == 2, (p, q, common)
        return tuple(sorted(common))

    def _inward_edges(self, v, steps):
        out = []
        for s in steps:
            u = (v[0] + s[0], v[1] + s[1], v[2] + s[2])
            out.append(self._edge_by_ends[frozenset((v, u))])
        return tuple(sorted(out))

    def labels_from_heights(self, heights) -> tuple:
        out = []
        for e in self.edges:
            b, c, a, d = e.rhombus
            out.append(heights[b] + heights[c] - heights[a] - heights[d])
        return tuple(out)


@lru_cache(maxsize=None)
def build_shape(n: int) -> ObladeShape:
    return ObladeShape(n)


@dataclass(frozen=True)
class BranchingTriple:
    n: int
    lam: Weight
    mu: Weight
    nu: Weight

    def __post_init__(self):
        r = self.n - 1
        for w in (self.lam, self.mu, self.nu):
            if len(w) != r:
                raise DomainError(f"weights must have rank {r}, got {w}")
            if not is_dominant(w):
                raise DomainError(f"weights must be dominant, got {w}")

    def is_compatible(self) -> bool:
        rs = root_system(f"A{self.n - 1}")
        diff = tuple(a + b - c for a, b, c in zip(self.lam, self.mu, self.nu))
        return is_in_root_lattice(rs, diff)


@dataclass(frozen=True)
class ObladeFilling:
    shape: ObladeShape
    lam: Weight
    mu: Weight
    nu: Weight
    labels: tuple

    def validate(self) -> bool:
        """Check the pictograph rules directly (independent of the solver)."""
        sh, lab = self.shape, self.labels
        if len(lab) != len(sh.edges) or any(v < 0 for v in lab):
            return False
        side = {"lambda": self.lam, "mu": self.mu, "nu": self.nu}
        for name, k, pair in sh.boundary:
            if side[name][k - 1] != sum(lab[e] for e in pair):
                return False
        for ring in sh.incidence:
            e1, e2, e3, e4, e5, e6 = (lab[e] for e in ring)
            if e1 + e2 != e4 + e5 or e2 + e3 != e5 + e6:
                return False
        return True

    def to_json_dict(self) -> dict:
        return {
            "n": self.shape.n,
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "nu": list(self.nu),
            "labels": list(self.labels),
        }


def is_degenerate(filling: ObladeFilling) -> bool:
    return any(v == 0 for v in filling.labels)


def kostant_vectors(triple: BranchingTriple):
    """(lam+mu-nu, lam+conj(nu)-conj(mu), mu+conj(nu)-conj(lam))."""
    rs = root_system(f"A{triple.n - 1}")
    lam, mu, nu = triple.lam, triple.mu, triple.nu
    mub, nub, lamb = conjugate(rs, mu), conjugate(rs, nu), conjugate(rs, lam)
    vecs = (
        tuple(a + b - c for a, b, c in zip(lam, mu, nu)),
        tuple(a + b - c for a, b, c in zip(lam, nub, mub)),
        tuple(a + b - c for a, b, c in zip(mu, nub, lamb)),
    )
    for v in vecs:
        if not is_in_root_lattice(rs, v):
            raise DomainError(f"incompatible triple: {v} is not in the root lattice")
    return vecs


class Budget:
    """Shared counter capping the number of fillings a computation may count."""

    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def charge(self, k: int):
        self.used += k
        if self.used > self.limit:
            raise BudgetError(f"budget of {self.limit} fillings exceeded")


def _as_budget(budget):
    if budget is None or isinstance(budget, Budget):
        return budget
    return Budget(int(budget))


class _System:
    """Per-shape solver tables: constraints in height coordinates."""

    def __init__(self, shape: ObladeShape):
        self.shape = shape
        self.npts = len(shape.points)
        self.cons = tuple(e.rhombus for e in shape.edges)
        touch = [[] for _ in range(self.npts)]
        for ci, (b, c, a, d) in enumerate(self.cons):
            for p in (b, c, a, d):
                touch[p].append(ci)
        self.touch = tuple(tuple(t) for t in touch)
        self.order = tuple(shape.point_index[v] for v in shape.inner_vertices)

    def boundary_heights(self, triple: BranchingTriple):
        """Heights on the boundary, or None if the triple is incompatible."""
        n = self.shape.n
        la = partition_from_dynkin(triple.lam)
        mb = partition_from_dynkin(triple.mu)
        nc = partition_from_dynkin(triple.nu)
        excess = sum(la) + sum(mb) - sum(nc)
        if excess % n:
            return None
        t = excess // n
        h = [None] * self.npts
        idx = self.shape.point_index
        h[idx[(n, 0, 0)]] = 0
        acc = 0
        for k in range(1, n + 1):  # side A->B carries lambda
            acc += la[k - 1]
            h[idx[(n - k, k, 0)]] = acc
        for k in range(1, n + 1):  # side B->C carries mu
            acc += mb[k - 1]
            h[idx[(0, n - k, k)]] = acc
        acc = 0
        for k in range(1, n):  # side A->C carries nu (shifted by t)
            acc += nc[k - 1] + t
            h[idx[(n - k, 0, k)]] = acc
        return h


@lru_cache(maxsize=None)
def _system(n: int) -> _System:
    return _System(build_shape(n))


class _Search:
    def __init__(self, sys_: _System, boundary):
        self.sys = sys_
        self.lo = list(boundary)
        self.hi = list(boundary)
        interior = set(sys_.order)
        for i in range(sys_.npts):
            if i in interior:
                self.lo[i] = -_INF
                self.hi[i] = _INF
        self.ok = self._propagate(range(len(sys_.cons)), None)
        if self.ok:
            assert all(self.lo[i] > -_INF and self.hi[i] < _INF for i in sys_.order)

    def _propagate(self, seed, trail):
        cons = self.sys.cons
        touch = self.sys.touch
        lo, hi = self.lo, self.hi
        pending = list(seed)
        inq = bytearray(len(cons))
        for ci in pending:
            inq[ci] = 1
        while pending:
            ci = pending.pop()
            inq[ci] = 0
            b, c, a, d = cons[ci]
            changed = ()
            v = lo[a] + lo[d] - hi[c]
            if v > lo[b]:
                if v > hi[b]:
                    return False
                if trail is not None:
                    trail.append((0, b, lo[b]))
                lo[b] = v
                changed += (b,)
            v = lo[a] + lo[d] - hi[b]
            if v > lo[c]:
                if v > hi[c]:
                    return False
                if trail is not None:
                    trail.append((0, c, lo[c]))
                lo[c] = v
                changed += (c,)
            v = hi[b] + hi[c] - lo[d]
            if v < hi[a]:
                if v < lo[a]:
                    return False
                if trail is not None:
                    trail.append((1, a, hi[a]))
                hi[a] = v
                changed += (a,)
            v = hi[b] + hi[c] - lo[a]
            if v < hi[d]:
                if v < lo[d]:
                    return False
                if trail is not None:
                    trail.append((1, d, hi[d]))
                hi[d] = v
                changed += (d,)
            for p in changed:
                for cj in touch[p]:
                    if not inq[cj]:
                        inq[cj] = 1
                        pending.append(cj)
        return True

    def _assign(self, p, v, trail):
        lo, hi = self.lo, self.hi
        trail.append((0, p, lo[p]))
        trail.append((1, p, hi[p]))
        lo[p] = v
        hi[p] = v
        return self._propagate(self.sys.touch[p], trail)

    def _undo(self, trail, mark):
        lo, hi = self.lo, self.hi
        while len(trail) > mark:
            which, p, old = trail.pop()
            if which:
                hi[p] = old
            else:
                lo[p] = old

    def count(self, budget=None, first_window=None) -> int:
        if not self.ok:
            return 0
        order = self.sys.order
        depth = len(order)
        if depth == 0:
            if budget:
                budget.charge(1)
            return 1
        trail = []
        total = 0
        lo, hi = self.lo, self.hi

        def rec(level):
            nonlocal total
            p = order[level]
            if level == depth - 1:
                width = hi[p] - lo[p] + 1
                if budget:
                    budget.charge(width)
                total += width
                return
            a, b = lo[p], hi[p]
            for v in range(a, b + 1):
                mark = len(trail)
                if self._assign(p, v, trail):
                    rec(level + 1)
                self._undo(trail, mark)

        p0 = order[0]
        if first_window is not None:
            w0 = (max(lo[p0], first_window[0]), min(hi[p0], first_window[1]))
        else:
            w0 = (lo[p0], hi[p0])
        if depth == 1:
            width = w0[1] - w0[0] + 1
            if width <= 0:
                return 0
            if budget:
                budget.charge(width)
            return width
        for v in range(w0[0], w0[1] + 1):
            mark = len(trail)
            if self._assign(p0, v, trail):
                rec(1)
            self._undo(trail, mark)
        return total

    def first_window(self):
        if not self.ok or not self.sys.order:
            return None
        p0 = self.sys.order[0]
        return (self.lo[p0], self.hi[p0])

    def solutions(self):
        """Yield completed height vectors in lexicographic interior order."""
        if not self.ok:
            return
        order = self.sys.order
        depth = len(order)
        heights = list(self.lo)
        if depth == 0:
            yield heights
            return
        trail = []

        def rec(level):
            p = order[level]
            if level == depth - 1:
                for v in range(self.lo[p], self.hi[p] + 1):
                    heights[p] = v
                    yield heights
                return
            for v in range(self.lo[p], self.hi[p] + 1):
                mark = len(trail)
                if self._assign(p, v, trail):
                    heights[p] = v
                    yield from rec(level + 1)
                self._undo(trail, mark)

        yield from rec(0)


def _count_chunk(args):
    n, lam, mu, nu, win, limit = args
    triple = BranchingTriple(n, lam, mu, nu)
    sys_ = _system(n)
    boundary = sys_.boundary_heights(triple)
    if boundary is None:
        return 0
    search = _Search(sys_, boundary)
    budget = Budget(limit) if limit is not None else None
    return search.count(budget=budget, first_window=win)


def count_fillings(triple: BranchingTriple, workers: int = 1, budget=None) -> int:
    """Number of O-blade fillings, i.e. the LR coefficient C_{lam,mu}^{nu}."""
    budget = _as_budget(budget)
    sys_ = _system(triple.n)
    boundary = sys_.boundary_heights(triple)
    if boundary is None:
        return 0
    search = _Search(sys_, boundary)
    if workers <= 1 or not search.ok or not sys_.order:
        return search.count(budget=budget)
    w = search.first_window()
    width = w[1] - w[0] + 1
    workers = min(workers, width)
    if workers <= 1:
        return search.count(budget=budget)
    import multiprocessing as mp

    bounds = [w[0] + (width * k) // workers for k in range(workers + 1)]
    chunks = [
        (triple.n, triple.lam, triple.mu, triple.nu, (bounds[k], bounds[k + 1] - 1),
         None if budget is None else budget.limit // workers)
        for k in range(workers)
    ]
    with mp.Pool(workers) as pool:
        parts = pool.map(_count_chunk, chunks)
    total = sum(parts)
    if budget:
        budget.charge(total)
    return total


def _enumerate_chunk(args):
    n, lam, mu, nu, win = args
    triple = BranchingTriple(n, lam, mu, nu)
    sys_ = _system(n)
    boundary = sys_.boundary_heights(triple)
    search = _Search(sys_, boundary)
    out = []
    if not search.ok:
        return out
    p0 = sys_.order[0]
    lo = max(search.lo[p0], win[0])
    hi = min(search.hi[p0], win[1])
    if lo > hi:
        return out
    search.lo[p0], search.hi[p0] = lo, hi
    shape = sys_.shape
    for heights in search.solutions():
        out.append(shape.labels_from_heights(heights))
    return out


def enumerate_fillings(triple: BranchingTriple, workers: int = 1):
    """Yield every filling exactly once, in the canonical (height-lex) order.

    The order is independent of `workers`: parallel mode partitions the
    first height's window, buffers each chunk, and yields the chunks in
    window order.
    """
    sys_ = _system(triple.n)
    shape = sys_.shape
    boundary = sys_.boundary_heights(triple)
    if boundary is None:
        return
    search = _Search(sys_, boundary)
    if not search.ok:
        return
    if workers > 1 and sys_.order:
        w = search.first_window()
        width = w[1] - w[0] + 1
        workers = min(workers, width)
    if workers > 1 and sys_.order:
        import multiprocessing as mp

        bounds = [w[0] + (width * k) // workers for k in range(workers + 1)]
        chunks = [
            (triple.n, triple.lam, triple.mu, triple.nu, (bounds[k], bounds[k + 1] - 1))
            for k in range(workers)
        ]
        with mp.Pool(workers) as pool:
            for labels_list in pool.imap(_enumerate_chunk, chunks):
                for labels in labels_list:
                    yield ObladeFilling(shape, triple.lam, triple.mu, triple.nu, labels)
        return
    for heights in search.solutions():
        labels = shape.labels_from_heights(heights)
        yield ObladeFilling(shape, triple.lam, triple.mu, triple.nu, labels)


def honeycomb_dual(filling: ObladeFilling):
    """Metric-honeycomb geometry dual to a filling.

    Returns a HoneycombGeometry whose vertex positions are exact integer
    pairs (c1, c2) over the basis f1 = (0, 1), f2 = (-sqrt(3)/2, 1/2);
    every drawn edge has Euclidean length equal to its O-blade label.
    """
    shape = filling.shape
    n = shape.n
    labels = filling.labels

    ups = [(x, y, n - 1 - x - y) for x in range(n) for y in range(n - x)]
    downs = [(x, y, n - 2 - x - y) for x in range(n - 1) for y in range(n - 1 - x)]
    tri_index = {}
    tris = []
    for t in ups:
        tri_index[("U", t)] = len(tris)
        tris.append(("U", t))
    for t in downs:
        tri_index[("D", t)] = len(tris)
        tris.append(("D", t))

    def edge_between(p, q):
        return shape._edge_by_ends[frozenset((p, q))]

    # D(x,y,z) is adjacent to U(x+1,y,z), U(x,y+1,z), U(x,y,z+1); the dual
    # displacement is the label times the unit normal of the crossed edge.
    adjacency = []
    for x, y, z in downs:
        di = tri_index[("D", (x, y, z))]
        shared = {
            ("U", (x + 1, y, z)): ((x + 1, y + 1, z), (x + 1, y, z + 1), (1, 0)),
            ("U", (x, y + 1, z)): ((x + 1, y + 1, z), (x, y + 1, z + 1), (0, -1)),
            ("U", (x, y, z + 1)): ((x + 1, y, z + 1), (x, y + 1, z + 1), (-1, 1)),
        }
        for ukey, (p, q, disp) in shared.items():
            ei = edge_between(p, q)
            adjacency.append((di, tri_index[ukey], ei, disp))

    pos = [None] * len(tris)
    pos[tri_index[("U", (n - 1, 0, 0))]] = (0, 0)
    adj_by_tri = [[] for _ in tris]
    for di, ui, ei, disp in adjacency:
        adj_by_tri[di].append((ui, ei, disp, 1))
        adj_by_tri[ui].append((di, ei, disp, -1))
    stack = [tri_index[("U", (n - 1, 0, 0))]]
    while stack:
        t = stack.pop()
        c1, c2 = pos[t]
        for other, ei, (d1, d2), sgn in adj_by_tri[t]:
            if pos[other] is None:
                lab = labels[ei] * sgn
                pos[other] = (c1 + lab * d1, c2 + lab * d2)
                stack.append(other)

    edges_out = [(di, ui, labels[ei], shape.edges[ei].family) for di, ui, ei, _ in adjacency]

    # hexagon cell around each inner vertex: its six incident triangles,
    # ordered counterclockwise
    cells = []
    for v in shape.inner_vertices:
        x, y, z = v
        ring_keys = [
            ("U", (x, y - 1, z)),
            ("D", (x, y - 1, z - 1)),
            ("U", (x, y, z - 1)),
            ("D", (x - 1, y, z - 1)),
            ("U", (x - 1, y, z)),
            ("D", (x - 1, y - 1, z)),
        ]
        ring = [tri_index[k] for k in ring_keys]
        side_labels = []
        for a in range(6):
            t1, t2 = tris[ring[a]], tris[ring[(a + 1) % 6]]
            # the shared edge of two consecutive triangles is incident to v
            shared = tuple(sorted(set(_tri_corners(t1)) & set(_tri_corners(t2))))
            assert len(shared) == 2 and v in shared
            side_labels.append(labels[edge_between(*shared)])
        cells.append(HoneycombCell(vertex=v, triangles=tuple(ring), side_labels=tuple(side_labels)))

    return HoneycombGeometry(
        n=n,
        triangles=tuple(tris),
        positions=tuple(pos),
        edges=tuple(edges_out),
        cells=tuple(cells),
    )


def _tri_corners(tri):
    kind, (x, y, z) = tri
    if kind == "U":
        return ((x + 1, y, z), (x, y + 1, z), (x, y, z + 1))
    return ((x + 1, y + 1, z), (x + 1, y, z + 1), (x, y + 1, z + 1))


@dataclass(frozen=True)
class HoneycombCell:
    vertex: tuple
    triangles: tuple
    side_labels: tuple

    def distinct_corner_count(self) -> int:
        """6 for a genuine hexagon, 5 for a pentagon, and so on."""
        return sum(1 for s in self.side_labels if s > 0) or 1


@dataclass(frozen=True)
class HoneycombGeometry:
    n: int
    triangles: tuple
    positions: tuple  # integer (c1, c2) pairs over the 60-degree dual basis
    edges: tuple  # (tri_from, tri_to, length, family)
    cells: tuple
