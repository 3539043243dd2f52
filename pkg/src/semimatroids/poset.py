"""Finite posets and their incidence algebras.

Incidence functions are stored as dicts keyed by index pairs ``(i, j)`` with
``elements[i] <= elements[j]``.  Values may be ints or polynomials; anything
supporting ``+`` and ``*`` with ints works.
"""

from __future__ import annotations

from dataclasses import dataclass


class FinitePoset:
    """A poset materialised as a full relation matrix.

    `leq` is either a callable ``leq(x, y)`` or a square boolean matrix.
    """

    def __init__(self, elements, leq, check=True):
        self.elements = list(elements)
        n = len(self.elements)
        if callable(leq):
            rel = [[bool(leq(x, y)) for y in self.elements] for x in self.elements]
        else:
            rel = [list(map(bool, row)) for row in leq]
        if len(rel) != n or any(len(row) != n for row in rel):
            raise ValueError("relation matrix has the wrong shape")
        self.rel = rel
        self._index = None
        if check:
            self._check()
        # linear extension: sort by number of elements below
        below = [sum(rel[k][i] for k in range(n)) for i in range(n)]
        self.order = sorted(range(n), key=lambda i: (below[i], i))
        self.up = [[j for j in self.order if rel[i][j]] for i in range(n)]
        self.down = [[j for j in self.order if rel[j][i]] for i in range(n)]

    def _check(self):
        n = len(self.elements)
        rel = self.rel
        for i in range(n):
            if not rel[i][i]:
                raise ValueError(f"relation not reflexive at {self.elements[i]!r}")
            for j in range(n):
                if i != j and rel[i][j] and rel[j][i]:
                    raise ValueError("relation not antisymmetric")
                if rel[i][j]:
                    for k in range(n):
                        if rel[j][k] and not rel[i][k]:
                            raise ValueError("relation not transitive")

    def __len__(self):
        return len(self.elements)

    def index(self, x):
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.elements)}
        return self._index[x]

    def leq(self, i, j):
        return self.rel[i][j]

    def pairs(self):
        """All comparable index pairs ``(i, j)`` with ``i <= j``."""
        return [(i, j) for i in range(len(self)) for j in self.up[i]]

    def interval(self, i, j):
        """Indices of ``[x_i, x_j]`` in linear-extension order."""
        return [k for k in self.up[i] if self.rel[k][j]]

    def minimal(self):
        return [i for i in range(len(self)) if len(self.down[i]) == 1]

    def maximal(self):
        return [i for i in range(len(self)) if len(self.up[i]) == 1]


@dataclass
class IncidenceFunction:
    poset: FinitePoset
    values: dict

    def __call__(self, x, y):
        """Value on the elements ``x <= y`` (zero when incomparable)."""
        return self.values.get((self.poset.index(x), self.poset.index(y)), 0)

    def __getitem__(self, ij):
        return self.values.get(ij, 0)

    def __eq__(self, other):
        if not isinstance(other, IncidenceFunction) or other.poset is not self.poset:
            return NotImplemented
        keys = set(self.values) | set(other.values)
        return all(self[k] == other[k] for k in keys)

    def __mul__(self, other):
        return convolve(self, other, self.poset)


def zeta(P):
    return IncidenceFunction(P, {ij: 1 for ij in P.pairs()})


def identity(P):
    return IncidenceFunction(P, {(i, i): 1 for i in range(len(P))})


def delta(f, P):
    """Diagonal incidence function carrying ``f(x)`` at ``(x, x)``.

    `f` is a mapping or callable on the poset's elements.
    """
    get = f if callable(f) else f.__getitem__
    return IncidenceFunction(P, {(i, i): get(x) for i, x in enumerate(P.elements)})


def mobius_table(P):
    """Mobius function by the defining recursion over each principal up-set."""
    mu = {}
    for i in range(len(P)):
        mu[(i, i)] = 1
        for j in P.up[i][1:]:
            total = 0
            for k in P.up[i]:
                if k != j and P.rel[k][j]:
                    total += mu[(i, k)]
            mu[(i, j)] = -total
    return IncidenceFunction(P, mu)


def convolve(f, g, P):
    """``(f*g)(x, y) = sum over x <= z <= y of f(x, z) g(z, y)``."""
    out = {}
    fv, gv = f.values, g.values
    for i, j in P.pairs():
        total = 0
        for k in P.interval(i, j):
            a = fv.get((i, k))
            if a is None:
                continue
            b = gv.get((k, j))
            if b is None:
                continue
            total = total + a * b
        out[(i, j)] = total
    return IncidenceFunction(P, out)


def mobius_conjugation(f, P, mu=None):
    """``mu * delta(f) * zeta``."""
    if mu is None:
        mu = mobius_table(P)
    return convolve(convolve(mu, delta(f, P), P), zeta(P), P)
