"""Weighted-digraph analysis of a matrix.

Vertices are numbered 1..n in everything user-facing (cycles, cores,
reports); matrix indices stay 0-based internally.  Includes SCC block
triangularization, simple-cycle enumeration, leading-cycle statistics
(mu, omega, mu-tilde, depths) and the core / tangible-core /
anti-tangible-core decomposition of the leading cycles.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyCoreError, NoCyclesError, PreconditionError
from .matrix import Matrix, _check_cap

CORE = "core"
TCORE = "tcore"
ANTI_TCORE = "anti_tcore"


@dataclass(frozen=True)
class Cycle:
    """A simple cycle, stored at its canonical rotation (minimal start vertex)."""

    vertices: tuple  # 1-based
    weight: object   # Element

    @property
    def length(self):
        return len(self.vertices)

    @property
    def average(self):
        return Fraction(self.weight.value, self.length)

    @property
    def is_tangible(self):
        return self.weight.is_tangible


@dataclass(frozen=True)
class Digraph:
    """Adjacency view of the non-ZERO entries of a matrix."""

    n: int
    edges: tuple  # of (u, v, weight), 1-based

    @property
    def adjacency(self):
        adj = {u: [] for u in range(1, self.n + 1)}
        for u, v, _ in self.edges:
            adj[u].append(v)
        return adj


def build_digraph(A):
    edges = []
    for i in range(A.n):
        for j in range(A.n):
            if not A.entry(i, j).is_zero:
                edges.append((i + 1, j + 1, A.entry(i, j)))
    return Digraph(A.n, tuple(edges))


def simple_cycles(A, max_n=None):
    """All simple cycles of the digraph of A, one per rotation class.

    DFS from each start vertex s over vertices >= s only, so every cycle is
    produced exactly once with its minimal vertex first.
    """
    _check_cap(A.n, max_n, "simple-cycle enumeration")
    n = A.n
    cycles = []

    def weight_of(path):
        w = A.entry(path[-1] - 1, path[0] - 1)
        for a, b in zip(path, path[1:]):
            w = w * A.entry(a - 1, b - 1)
        return w

    def dfs(start, path, on_path):
        u = path[-1]
        for v in range(start, n + 1):
            if A.entry(u - 1, v - 1).is_zero:
                continue
            if v == start:
                cycles.append(Cycle(tuple(path), weight_of(path)))
            elif v not in on_path:
                on_path.add(v)
                path.append(v)
                dfs(start, path, on_path)
                path.pop()
                on_path.remove(v)

    for s in range(1, n + 1):
        dfs(s, [s], {s})
    return cycles


@dataclass(frozen=True)
class BlockForm:
    """Full block triangular form: SCC blocks in topological order.

    ``perm`` maps new position -> original 0-based index; ``ranges`` are
    (start, stop) slices of the permuted matrix, one per diagonal block.
    """

    source: object    # Matrix
    perm: tuple       # 0-based
    ranges: tuple     # of (start, stop)
    permuted: object  # Matrix

    @property
    def eta(self):
        return len(self.ranges)

    def block(self, i):
        lo, hi = self.ranges[i]
        return self.permuted.submatrix(range(lo, hi), range(lo, hi))

    def off_block(self, i, j):
        (rlo, rhi), (clo, chi) = self.ranges[i], self.ranges[j]
        return [[self.permuted.entry(r, c) for c in range(clo, chi)]
                for r in range(rlo, rhi)]

    def off_block_is_zero(self, i, j):
        return all(e.is_zero for row in self.off_block(i, j) for e in row)

    def block_vertices(self, i):
        lo, hi = self.ranges[i]
        return tuple(sorted(self.perm[p] + 1 for p in range(lo, hi)))

    def block_of_vertex(self, v):
        """Block index containing 1-based vertex v."""
        pos = self.perm.index(v - 1)
        for i, (lo, hi) in enumerate(self.ranges):
            if lo <= pos < hi:
                return i
        raise ValueError(f"vertex {v} out of range")


def scc_block_form(A):
    """Tarjan SCCs, condensed and ordered so zero blocks sit below the diagonal."""
    n = A.n
    index = {}
    low = {}
    on_stack = set()
    stack = []
    sccs = []
    counter = [0]

    def strongconnect(v):
        index[v] = low[v] = counter[0]
        counter[0] += 1
        stack.append(v)
        on_stack.add(v)
        for w in range(n):
            if A.entry(v, w).is_zero:
                continue
            if w not in index:
                strongconnect(w)
                low[v] = min(low[v], low[w])
            elif w in on_stack:
                low[v] = min(low[v], index[w])
        if low[v] == index[v]:
            comp = []
            while True:
                w = stack.pop()
                on_stack.remove(w)
                comp.append(w)
                if w == v:
                    break
            sccs.append(sorted(comp))

    for v in range(n):
        if v not in index:
            strongconnect(v)

    sccs.reverse()  # Tarjan emits sinks first; sources must come first.
    perm = tuple(v for comp in sccs for v in comp)
    ranges = []
    start = 0
    for comp in sccs:
        ranges.append((start, start + len(comp)))
        start += len(comp)
    permuted = A.permuted(perm)
    form = BlockForm(A, perm, tuple(ranges), permuted)
    for i in range(form.eta):
        for j in range(i):
            assert form.off_block_is_zero(i, j), "SCC order left a nonzero lower block"
    return form


@dataclass(frozen=True)
class LeadingCycleData:
    """Statistics of the cycles attaining the top average weight omega."""

    mu: int                   # least degree with dominating average weight
    omega: Fraction           # leading tangible average weight
    mu_tilde: int             # lcm of leading cycle lengths
    dominant_lengths: frozenset
    leading_cycles: tuple
    counts_by_length: dict    # length -> number of leading cycles
    depths: dict              # vertex -> number of leading cycles through it


def leading_data(A, max_n=None):
    f = A.char_poly(max_n)
    n = A.n
    averages = {}
    for k in range(1, n + 1):
        alpha = f.coeffs[n - k]
        if not alpha.is_zero:
            averages[k] = Fraction(alpha.value, k)
    if not averages:
        raise NoCyclesError("matrix has no cycles (all characteristic coefficients ZERO)")
    omega = max(averages.values())
    dominant = frozenset(k for k, avg in averages.items() if avg == omega)
    mu = min(dominant)
    leading = tuple(c for c in simple_cycles(A, max_n) if c.average == omega)
    assert leading, "leading coefficient without a leading cycle"
    mu_tilde = math.lcm(*(c.length for c in leading))
    counts = {}
    depths = {v: 0 for v in range(1, n + 1)}
    for c in leading:
        counts[c.length] = counts.get(c.length, 0) + 1
        for v in c.vertices:
            depths[v] += 1
    return LeadingCycleData(mu, omega, mu_tilde, dominant, leading, counts, depths)


@dataclass(frozen=True)
class CoreData:
    """Leading cycles split into core / tangible core / anti-tangible-core."""

    core: tuple
    tcore: tuple
    anti_tcore: tuple
    core_vertices: frozenset
    tcore_vertices: frozenset
    anti_tcore_vertices: frozenset


def cores(A, data=None, max_n=None):
    """Depth-1 filtering of the leading cycles, then the tangibility split."""
    if data is None:
        data = leading_data(A, max_n)
    admissible = tuple(c for c in data.leading_cycles
                       if all(data.depths[v] == 1 for v in c.vertices))
    tcore = tuple(c for c in admissible if c.is_tangible)
    anti = tuple(c for c in data.leading_cycles if c not in tcore)

    def verts(cycles):
        return frozenset(v for c in cycles for v in c.vertices)

    return CoreData(admissible, tcore, anti, verts(admissible), verts(tcore), verts(anti))


def core_submatrix(A, which, data=None, max_n=None):
    """Induced submatrix on the chosen core's vertex set, plus the 1-based index list."""
    cd = cores(A, data, max_n)
    try:
        vertices = {CORE: cd.core_vertices, TCORE: cd.tcore_vertices,
                    ANTI_TCORE: cd.anti_tcore_vertices}[which]
    except KeyError:
        raise PreconditionError(f"unknown core kind {which!r}") from None
    if not vertices:
        raise EmptyCoreError(f"{which} of the matrix is empty")
    idx = sorted(vertices)
    sub = A.submatrix([v - 1 for v in idx], [v - 1 for v in idx])
    return sub, tuple(idx)


def cycle_report(A, max_n=None):
    """JSON-ready census of all simple cycles with core membership flags."""
    try:
        data = leading_data(A, max_n)
        cd = cores(A, data, max_n)
    except NoCyclesError:
        data = None
        cd = None
    out = []
    for c in simple_cycles(A, max_n):
        leading = data is not None and c.average == data.omega
        out.append({
            "vertices": list(c.vertices),
            "weight": str(c.weight),
            "length": c.length,
            "average": str(c.average),
            "leading": leading,
            "in_core": cd is not None and c in cd.core,
            "in_tcore": cd is not None and c in cd.tcore,
            "in_anti_tcore": cd is not None and c in cd.anti_tcore,
        })
    return out
