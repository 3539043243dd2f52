"""Gain graphs: cycles, cycle matroids, compatible chromatic polynomials,
affinographic arrangements and (F_q, a)-colorings.

Vertices are numbered 1..n; edges are indexed from 0 and edge subsets are
bitmasks.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from . import _bits
from .arrangement import Arrangement, affine_circuits
from .assigning import AssigningMatroid
from .linalg import QQ, PrimeField
from .matroid import FULL_SUM_CAP, CapError, Matroid
from .poly import UniPoly

COLORING_BUDGET = 10**7


class MultiGraph:
    def __init__(self, n, edges):
        edges = [tuple(int(x) for x in e) for e in edges]
        for e in edges:
            if len(e) != 2 or not all(1 <= v <= n for v in e):
                raise ValueError(f"edge {e} has endpoints outside 1..{n}")
        if len(edges) > _bits.MAX_GROUND:
            raise CapError(f"{len(edges)} edges exceed the cap {_bits.MAX_GROUND}")
        self.n = n
        self.edges = tuple(edges)

    def __len__(self):
        return len(self.edges)

    @property
    def ground(self):
        return _bits.full(len(self.edges))

    def __eq__(self, other):
        return isinstance(other, MultiGraph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"MultiGraph({self.n}, {list(self.edges)})"

    def components(self, X=None):
        """Number of connected components of the spanning subgraph with edges X."""
        X = self.ground if X is None else X
        parent = list(range(self.n + 1))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        c = self.n
        for e in _bits.elements(X):
            u, v = (find(x) for x in self.edges[e])
            if u != v:
                parent[u] = v
                c -= 1
        return c


def default_orientation(G):
    return [tuple(e) for e in G.edges]


def check_orientation(G, D):
    if len(D) != len(G):
        raise ValueError("orientation needs one arc per edge")
    for e, (arc, edge) in enumerate(zip(D, G.edges)):
        if sorted(arc) != sorted(edge):
            raise ValueError(f"arc {arc} does not match edge {e} = {edge}")
    return [tuple(a) for a in D]


def _is_cycle(G, X):
    deg = {}
    for e in _bits.elements(X):
        for v in G.edges[e]:
            deg[v] = deg.get(v, 0) + 1
    if not deg or any(d != 2 for d in deg.values()):
        return False
    # connected on its own vertex set
    verts = set(deg)
    return G.components(X) == G.n - len(verts) + 1


def cycles(G):
    """Edge sets of all connected 2-regular subgraphs, increasing bitmask order."""
    if len(G) > FULL_SUM_CAP:
        raise CapError(f"{len(G)} edges exceed the enumeration cap {FULL_SUM_CAP}")
    return [X for X in _bits.submasks(G.ground) if X and _is_cycle(G, X)]


def cycle_matroid(G):
    return Matroid.from_rank_function(G.ground, lambda X: G.n - G.components(X))


@dataclass
class AssigningGraph:
    graph: MultiGraph
    labels: dict

    def __post_init__(self):
        if set(self.labels) != set(cycles(self.graph)):
            raise ValueError("labels must cover exactly the cycles of the graph")
        if any(v not in (0, 1) for v in self.labels.values()):
            raise ValueError("labels must be 0 or 1")

    @classmethod
    def constant(cls, G, value=0):
        return cls(G, {C: value for C in cycles(G)})

    def compatible(self, X):
        return not any(v == 1 and C & ~X == 0 for C, v in self.labels.items())


def all_graph_assignings(G):
    cs = cycles(G)
    for bits in range(1 << len(cs)):
        yield AssigningGraph(G, {C: bits >> k & 1 for k, C in enumerate(cs)})


def lift_assigning(GA):
    return AssigningMatroid(cycle_matroid(GA.graph), dict(GA.labels))


def compatible_chromatic(GA):
    G = GA.graph
    if len(G) > FULL_SUM_CAP:
        raise CapError(f"{len(G)} edges exceed the enumeration cap {FULL_SUM_CAP}")
    c = {}
    for X in _bits.submasks(G.ground):
        if GA.compatible(X):
            k = G.components(X)
            c[k] = c.get(k, 0) + (-1) ** _bits.popcount(X)
    return UniPoly(c)


def chromatic(G):
    return compatible_chromatic(AssigningGraph.constant(G, 0))


def graphic_arrangements(G, D=None, gains=None, field=QQ):
    """``(A_G, A_{G,a})``: hyperplanes ``x_head - x_tail = a_e`` per arc."""
    D = default_orientation(G) if D is None else check_orientation(G, D)
    gains = [0] * len(G) if gains is None else list(gains)
    if len(gains) != len(G):
        raise ValueError("gain vector needs one value per edge")
    normals = []
    for tail, head in D:
        v = [0] * G.n
        v[head - 1] += 1
        v[tail - 1] -= 1
        normals.append(v)
    A0 = Arrangement(G.n, [(v, 0) for v in normals], field)
    Aa = Arrangement(G.n, list(zip(normals, gains)), field)
    return A0, Aa


def _walk(G, C, start=None, first_edge=None):
    """``[(edge, from, to), ...]`` once around the cycle C."""
    es = _bits.elements(C)
    if len(es) == 1:
        u, v = G.edges[es[0]]
        return [(es[0], u, v)]
    verts = sorted({v for e in es for v in G.edges[e]})
    cur = verts[0] if start is None else start
    if first_edge is None:
        at = [e for e in es if cur in G.edges[e]]
        first_edge = min(at, key=lambda e: (_other(G, e, cur), e))
    out = []
    e = first_edge
    used = set()
    while True:
        nxt = _other(G, e, cur)
        out.append((e, cur, nxt))
        used.add(e)
        cur = nxt
        rest = [f for f in es if f not in used and cur in G.edges[f]]
        if not rest:
            break
        e = rest[0]
    return out


def _other(G, e, v):
    a, b = G.edges[e]
    return b if a == v else a


def cycle_gain_sum(G, D, gains, C, field=QQ, start=None, first_edge=None):
    """Signed gain around C: ``+a_e`` along an arc, ``-a_e`` against it."""
    D = default_orientation(G) if D is None else D
    total = field.zero
    for e, u, v in _walk(G, C, start, first_edge):
        a = field.element(gains[e])
        total = total + a if D[e] == (u, v) else total - a
    if isinstance(field, PrimeField):
        total %= field.p
    return total


def assigning_by_gain_sums(G, D, gains, field=QQ):
    return AssigningGraph(G, {C: 0 if cycle_gain_sum(G, D, gains, C, field) == 0 else 1 for C in cycles(G)})


def assigning_by_affine_circuits(G, D, gains, field=QQ):
    _, Aa = graphic_arrangements(G, D, gains, field)
    aff = set(affine_circuits(Aa))
    return AssigningGraph(G, {C: 0 if C in aff else 1 for C in cycles(G)})


def admissible_assigning(G, D=None, gains=None, field=QQ):
    """Assigning induced by the gains, checked by two independent tests."""
    D = default_orientation(G) if D is None else check_orientation(G, D)
    gains = [0] * len(G) if gains is None else gains
    x = assigning_by_affine_circuits(G, D, gains, field)
    y = assigning_by_gain_sums(G, D, gains, field)
    if x.labels != y.labels:
        raise ArithmeticError("affine-circuit and gain-sum assignings disagree")
    return x


def reduction_warnings(G, D, gains, q):
    """Cycles whose gain sum is nonzero over Q but vanishes mod q."""
    D = default_orientation(G) if D is None else D
    F = PrimeField(q)
    return [
        C
        for C in cycles(G)
        if cycle_gain_sum(G, D, gains, C, QQ) != 0 and cycle_gain_sum(G, D, gains, C, F) == 0
    ]


def count_colorings(G, D, gains, q, budget=COLORING_BUDGET):
    """Number of ``c: V -> F_q`` with ``c(head) - c(tail) != a_e`` on every arc."""
    F = PrimeField(q)
    if q**G.n > budget:
        raise CapError(f"{q}^{G.n} colorings exceed the enumeration budget {budget}")
    D = default_orientation(G) if D is None else check_orientation(G, D)
    gains = [0] * len(G) if gains is None else gains
    bad = reduction_warnings(G, D, gains, q)
    if bad:
        warnings.warn(f"reducing gains mod {q} makes {len(bad)} cycle(s) balanced", stacklevel=2)
    a = [F.element(g) for g in gains]
    # arcs checked when the later endpoint gets its colour
    checks = [[] for _ in range(G.n + 1)]
    for e, (tail, head) in enumerate(D):
        checks[max(tail, head)].append((tail, head, a[e]))
    colour = [0] * (G.n + 1)

    def ok(v):
        return all((colour[h] - colour[t]) % q != g for t, h, g in checks[v])

    def rec(v):
        if v > G.n:
            return 1
        total = 0
        for c in range(q):
            colour[v] = c
            if ok(v):
                total += rec(v + 1)
        return total

    return rec(1)
