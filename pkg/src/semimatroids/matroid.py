"""Finite matroids stored as explicit rank tables over bitmask subsets."""

from __future__ import annotations

from . import _bits
from .linalg import QQ
from .poly import BiPoly, UniPoly

FULL_SUM_CAP = 16  # largest ground set for operations that sum over 2^E


class CapError(ValueError):
    """A size or enumeration budget was exceeded."""


class Matroid:
    """Matroid on the elements of the bitmask `ground` with rank table `rank`.

    `rank` maps every submask of `ground` to its rank.  Element labels are
    preserved by deletion and contraction, so a minor lives on a submask of
    its parent's ground set.
    """

    def __init__(self, ground, rank):
        if ground.bit_length() > _bits.MAX_GROUND:
            raise CapError(f"ground set wider than {_bits.MAX_GROUND} bits")
        self.ground = ground
        self.rank_table = dict(rank)
        missing = [X for X in _bits.submasks(ground) if X not in self.rank_table]
        if missing:
            raise ValueError(f"rank table missing {len(missing)} subsets, e.g. {missing[0]}")
        self._circuits = None

    @property
    def ground_size(self):
        return _bits.popcount(self.ground)

    @property
    def elements(self):
        return _bits.elements(self.ground)

    def rank(self, X=None):
        return self.rank_table[self.ground if X is None else X]

    @property
    def r(self):
        return self.rank_table[self.ground]

    def __eq__(self, other):
        return (
            isinstance(other, Matroid)
            and self.ground == other.ground
            and self.rank_table == other.rank_table
        )

    def __hash__(self):
        return hash((self.ground, frozenset(self.rank_table.items())))

    def __repr__(self):
        return f"Matroid(n={self.ground_size}, r={self.r})"

    # constructors

    @classmethod
    def from_rank_function(cls, ground, fn):
        return cls(ground, {X: fn(X) for X in _bits.submasks(ground)})

    @classmethod
    def uniform(cls, r, n):
        if not 0 <= r <= n:
            raise ValueError("need 0 <= r <= n")
        return cls.from_rank_function(_bits.full(n), lambda X: min(r, _bits.popcount(X)))

    @classmethod
    def free(cls, n):
        return cls.uniform(n, n)

    @classmethod
    def from_matrix(cls, columns, field=QQ):
        """Vector matroid of `columns` (lists of field elements)."""
        n = len(columns)
        if n > _bits.MAX_GROUND:
            raise CapError(f"{n} columns exceed the ground-set cap {_bits.MAX_GROUND}")
        cols = [[field.element(x) for x in c] for c in columns]
        if cols and len({len(c) for c in cols}) != 1:
            raise ValueError("columns have different lengths")
        return cls.from_rank_function(
            _bits.full(n), lambda X: field.rank([cols[i] for i in _bits.elements(X)])
        )

    @classmethod
    def from_circuits(cls, n, circuits):
        """Matroid with the given circuit family (assumed to satisfy the axioms).

        Rank is the size of a largest circuit-free subset.
        """
        circs = [c for c in circuits]
        ground = _bits.full(n)
        indep = {X: not any(_bits.is_subset(C, X) for C in circs) for X in _bits.submasks(ground)}
        rank = {}
        for X in _bits.submasks(ground):
            if indep[X]:
                rank[X] = _bits.popcount(X)
            else:
                rank[X] = max(rank[X & ~(1 << e)] for e in _bits.elements(X))
        return cls(ground, rank)

    # axioms

    def axiom_violations(self):
        """List of human-readable violations of (R1)-(R3); empty when valid."""
        bad = []
        subs = _bits.submasks(self.ground)
        rk = self.rank_table
        for X in subs:
            if not 0 <= rk[X] <= _bits.popcount(X):
                bad.append(f"R1 fails at {X}")
            for e in _bits.elements(self.ground & ~X):
                Y = X | (1 << e)
                if not rk[X] <= rk[Y] <= rk[X] + 1:
                    bad.append(f"unit increase fails at {X}+{e}")
        for X in subs:
            for Y in subs:
                if rk[X & Y] + rk[X | Y] > rk[X] + rk[Y]:
                    bad.append(f"submodularity fails at {X},{Y}")
                    break
        return bad

    def is_valid(self):
        return not self.axiom_violations()

    # structure

    def is_independent(self, X):
        return self.rank_table[X] == _bits.popcount(X)

    def circuits(self):
        """Minimal dependent sets, in increasing bitmask order."""
        if self._circuits is None:
            out = []
            for X in _bits.submasks(self.ground):
                k = _bits.popcount(X)
                if k == 0 or self.rank_table[X] != k - 1:
                    continue
                if all(self.rank_table[X & ~(1 << e)] == k - 1 for e in _bits.elements(X)):
                    out.append(X)
            self._circuits = out
        return list(self._circuits)

    def loops(self):
        return [e for e in self.elements if self.rank_table[1 << e] == 0]

    def bases(self):
        r = self.r
        return [X for X in _bits.submasks(self.ground) if _bits.popcount(X) == r and self.rank_table[X] == r]

    def closure(self, X):
        rx = self.rank_table[X]
        cl = X
        for e in _bits.elements(self.ground & ~X):
            if self.rank_table[X | (1 << e)] == rx:
                cl |= 1 << e
        return cl

    def is_flat(self, X):
        return self.closure(X) == X

    def flats(self):
        return [X for X in _bits.submasks(self.ground) if self.is_flat(X)]

    # minors

    def delete(self, A):
        keep = self.ground & ~A
        return Matroid(keep, {X: self.rank_table[X] for X in _bits.submasks(keep)})

    def restrict(self, X):
        return self.delete(self.ground & ~X)

    def contract(self, A):
        A &= self.ground
        keep = self.ground & ~A
        ra = self.rank_table[A]
        return Matroid(keep, {Y: self.rank_table[Y | A] - ra for Y in _bits.submasks(keep)})

    def relabel(self):
        """Copy on contiguous labels ``0..k-1`` (elements keep their order)."""
        els = self.elements
        pos = {e: i for i, e in enumerate(els)}

        def move(X):
            return _bits.from_elements(pos[e] for e in _bits.elements(X))

        return Matroid(_bits.full(len(els)), {move(X): r for X, r in self.rank_table.items()})


def matroid_polynomials(M):
    """Characteristic and Tutte polynomials by the corank-nullity sum over 2^E."""
    if M.ground_size > FULL_SUM_CAP:
        raise CapError(f"ground set of {M.ground_size} exceeds the 2^E cap {FULL_SUM_CAP}")
    r = M.r
    chi_terms = {}
    counts = {}
    for X in _bits.submasks(M.ground):
        rx = M.rank_table[X]
        k = _bits.popcount(X)
        d = r - rx
        chi_terms[d] = chi_terms.get(d, 0) + (-1) ** k
        key = (r - rx, k - rx)
        counts[key] = counts.get(key, 0) + 1
    return UniPoly(chi_terms), corank_nullity_expand(counts)


def corank_nullity_expand(counts):
    """``sum c * (t-1)**a * (s-1)**b`` for ``{(a, b): c}``."""
    tm1 = BiPoly.t() - 1
    sm1 = BiPoly.s() - 1
    tp, sp = {}, {}
    total = BiPoly()
    for (a, b), c in counts.items():
        if a not in tp:
            tp[a] = tm1**a
        if b not in sp:
            sp[b] = sm1**b
        total = total + c * tp[a] * sp[b]
    return total
