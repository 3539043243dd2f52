"""Semimatroids: a ground set, a simplicial complex of central sets, a rank.

Subsets are bitmasks.  Minors keep their parent's element labels, so the
ground set of a semimatroid is an arbitrary bitmask rather than ``0..n-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import _bits
from .matroid import Matroid, corank_nullity_expand
from .poly import BiPoly, UniPoly, WhitneySeq
from .poset import FinitePoset, mobius_table


class _Top:
    """The artificial maximum adjoined to a flat semilattice."""

    def __repr__(self):
        return "TOP"

    def __reduce__(self):
        return (_top, ())


def _top():
    return TOP


TOP = _Top()


class Semimatroid:
    def __init__(self, ground, central, rank):
        central = frozenset(central)
        if 0 not in central:
            raise ValueError("the empty set must be central")
        for X in central:
            if X & ~ground:
                raise ValueError(f"central set {X} is not inside the ground set {ground}")
            for e in _bits.elements(X):
                if X & ~(1 << e) not in central:
                    raise ValueError(
                        f"central family is not downward closed: {X} is central but "
                        f"{X & ~(1 << e)} is not"
                    )
        rank = dict(rank)
        if set(rank) != central:
            raise ValueError("rank must be defined exactly on the central sets")
        self.ground = ground
        self.central = central
        self.rank_table = rank
        self.r = max(rank.values())
        self._key = (ground, frozenset(rank.items()))
        self._circuits = None
        self._bases = None

    # constructors

    @classmethod
    def empty(cls):
        return cls(0, [0], {0: 0})

    @classmethod
    def from_matroid(cls, M):
        return cls(M.ground, M.rank_table.keys(), M.rank_table)

    @classmethod
    def from_pointed_matroid(cls, N, p):
        """Semimatroid of the sets whose closure in `N` avoids `p`."""
        pb = 1 << p
        if not N.ground & pb:
            raise ValueError(f"{p} is not an element of the matroid")
        if N.rank(pb) == 0:
            raise ValueError(f"the distinguished element {p} is a loop")
        ground = N.ground & ~pb
        central = [X for X in _bits.submasks(ground) if not N.closure(X) & pb]
        return cls(ground, central, {X: N.rank(X) for X in central})

    # basic queries

    @property
    def ground_size(self):
        return _bits.popcount(self.ground)

    @property
    def elements(self):
        return _bits.elements(self.ground)

    def is_central(self, X):
        return X in self.central

    def rank(self, X):
        return self.rank_table[X]

    def sorted_central(self):
        return sorted(self.central)

    def __eq__(self, other):
        return isinstance(other, Semimatroid) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Semimatroid(n={self.ground_size}, |C|={len(self.central)}, r={self.r})"

    def is_independent(self, X):
        return X in self.central and self.rank_table[X] == _bits.popcount(X)

    def loops(self):
        return [e for e in self.elements if self.rank_table.get(1 << e, 1) == 0]

    def has_loop(self):
        return bool(self.loops())

    def bases(self):
        """Maximal independent central sets, by direct enumeration."""
        if self._bases is None:
            indep = [X for X in self.central if self.is_independent(X)]
            iset = set(indep)
            self._bases = sorted(
                X
                for X in indep
                if not any(X | (1 << e) in iset for e in _bits.elements(self.ground & ~X))
            )
        return list(self._bases)

    def bridges(self):
        bases = self.bases()
        out = []
        for e in self.elements:
            if all(B >> e & 1 for B in bases):
                out.append(e)
        return out

    def circuits(self):
        """Minimal dependent central sets, increasing bitmask order."""
        if self._circuits is None:
            out = []
            for X in sorted(self.central):
                k = _bits.popcount(X)
                if k == 0 or self.rank_table[X] == k:
                    continue
                if all(self.is_independent(X & ~(1 << e)) for e in _bits.elements(X)):
                    out.append(X)
            self._circuits = out
        return list(self._circuits)

    def closure(self, X):
        return closure(self, X)

    def is_flat(self, X):
        return X in self.central and closure(self, X) == X

    def relabel(self):
        """Copy on contiguous labels ``0..k-1``, preserving element order."""
        els = self.elements
        pos = {e: i for i, e in enumerate(els)}

        def move(X):
            return _bits.from_elements(pos[e] for e in _bits.elements(X))

        rank = {move(X): r for X, r in self.rank_table.items()}
        return Semimatroid(_bits.full(len(els)), rank.keys(), rank)


# axiom verification


@dataclass
class AxiomResult:
    passed: bool
    witness: tuple = ()


AXIOM_ORDER = ("simplicial", "ranks_consistent", "SR1", "SR2", "SR3", "SR4", "SR5")


@dataclass
class AxiomReport:
    results: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(r.passed for r in self.results.values())

    @property
    def first_failure(self):
        for name in AXIOM_ORDER:
            res = self.results.get(name)
            if res is not None and not res.passed:
                return name
        return None

    def to_json(self):
        return {
            name: {"pass": res.passed, "witness": [str(w) for w in res.witness]}
            for name, res in self.results.items()
        }


def verify_axioms(ground, central, rank):
    """Check the simplicial-complex condition, rank domain and SR1-SR5.

    Each failed check carries the first witness found when scanning central
    sets (and pairs of them) in increasing bitmask order.
    """
    C = sorted(set(central))
    cset = set(C)
    rep = AxiomReport()

    simp = AxiomResult(True)
    if 0 not in cset:
        simp = AxiomResult(False, (0,))
    else:
        for X in C:
            if X & ~ground:
                simp = AxiomResult(False, (X,))
                break
            sub = next((X & ~(1 << e) for e in _bits.elements(X) if X & ~(1 << e) not in cset), None)
            if sub is not None:
                simp = AxiomResult(False, (X, sub))
                break
    rep.results["simplicial"] = simp

    extra = sorted(set(rank) - cset)
    missing = [X for X in C if X not in rank]
    if extra:
        rep.results["ranks_consistent"] = AxiomResult(False, (extra[0],))
    elif missing:
        rep.results["ranks_consistent"] = AxiomResult(False, (missing[0],))
    else:
        rep.results["ranks_consistent"] = AxiomResult(True)

    C = [X for X in C if X in rank]
    rk = rank

    def first(pred):
        for X in C:
            for Y in C:
                if pred(X, Y):
                    return AxiomResult(False, (X, Y))
        return AxiomResult(True)

    sr1 = AxiomResult(True)
    for X in C:
        if not 0 <= rk[X] <= _bits.popcount(X):
            sr1 = AxiomResult(False, (X,))
            break
    rep.results["SR1"] = sr1

    rep.results["SR2"] = first(lambda X, Y: X & ~Y == 0 and rk[X] > rk[Y])

    def sr3_bad(X, Y):
        U, I = X | Y, X & Y
        if U not in rk or I not in rk:
            return False
        return rk[I] + rk[U] > rk[X] + rk[Y]

    rep.results["SR3"] = first(sr3_bad)

    def sr4_bad(X, Y):
        I = X & Y
        return I in rk and rk[X] == rk[I] and (X | Y) not in cset

    rep.results["SR4"] = first(sr4_bad)

    def sr5_bad(X, Y):
        if rk[X] >= rk[Y]:
            return False
        return not any(X | (1 << e) in cset for e in _bits.elements(Y & ~X))

    rep.results["SR5"] = first(sr5_bad)
    return rep


def check(S):
    return verify_axioms(S.ground, S.central, S.rank_table)


# closure, flats, minors


def closure(S, X):
    if X not in S.central:
        raise ValueError(f"{X} is not a central set")
    rx = S.rank_table[X]
    cl = X
    for e in _bits.elements(S.ground & ~X):
        Y = X | (1 << e)
        if Y in S.central and S.rank_table[Y] == rx:
            cl |= 1 << e
    return cl


@dataclass
class SemiFlatSemilattice:
    semimatroid: Semimatroid
    flats: list

    @property
    def bottom(self):
        return self.flats[0]

    def poset(self, augmented=False):
        """Flats ordered by inclusion; `augmented` adjoins TOP above everything."""
        els = list(self.flats) + ([TOP] if augmented else [])

        def leq(x, y):
            if y is TOP:
                return True
            if x is TOP:
                return False
            return x & ~y == 0

        return FinitePoset(els, leq, check=False)

    def __len__(self):
        return len(self.flats)

    def __iter__(self):
        return iter(self.flats)


def flats(S):
    fl = sorted(
        (X for X in S.central if closure(S, X) == X),
        key=lambda X: (S.rank_table[X], _bits.popcount(X), X),
    )
    return SemiFlatSemilattice(S, fl)


def delete(S, A):
    keep = S.ground & ~A
    central = [X for X in S.central if X & ~keep == 0]
    return Semimatroid(keep, central, {X: S.rank_table[X] for X in central})


def restrict(S, X):
    return delete(S, S.ground & ~X)


def contract(S, X):
    if X not in S.central:
        raise ValueError(f"cannot contract {X}: not a central set")
    keep = S.ground & ~X
    rx = S.rank_table[X]
    rank = {Y & ~X: S.rank_table[Y] - rx for Y in S.central if Y & X == X}
    return Semimatroid(keep, rank.keys(), rank)


# polynomials


def tutte_by_definition(S):
    counts = {}
    for X, rx in S.rank_table.items():
        key = (S.r - rx, _bits.popcount(X) - rx)
        counts[key] = counts.get(key, 0) + 1
    return corank_nullity_expand(counts)


def tutte_by_deletion_contraction(S):
    memo = {}
    t, s = BiPoly.t(), BiPoly.s()

    def rec(C):
        if C._key in memo:
            return memo[C._key]
        if C.ground == 0:
            res = BiPoly.constant(1)
        else:
            e = _bits.lowest(C.ground)
            eb = 1 << e
            if eb not in C.central:
                res = rec(delete(C, eb))
            elif C.rank_table[eb] == 0:
                res = s * rec(contract(C, eb))
            elif e in C.bridges():
                res = t * rec(delete(C, eb))
            else:
                res = rec(delete(C, eb)) + rec(contract(C, eb))
        memo[C._key] = res
        return res

    return rec(S)


TUTTE_ROUTES = {
    "definition": tutte_by_definition,
    "deletion_contraction": tutte_by_deletion_contraction,
}


def tutte(S, route="definition"):
    try:
        return TUTTE_ROUTES[route](S)
    except KeyError:
        raise ValueError(f"unknown Tutte route {route!r}") from None


def characteristic_by_definition(S):
    c = {}
    for X, rx in S.rank_table.items():
        d = S.r - rx
        c[d] = c.get(d, 0) + (-1) ** _bits.popcount(X)
    return UniPoly(c)


def characteristic_by_mobius(S):
    if S.has_loop():
        raise ValueError("the Mobius expansion needs a loopless semimatroid")
    L = flats(S)
    P = L.poset()
    mu = mobius_table(P)
    b = P.index(L.bottom)
    c = {}
    for j, X in enumerate(P.elements):
        m = mu[(b, j)]
        if m:
            d = S.r - S.rank_table[X]
            c[d] = c.get(d, 0) + m
    return UniPoly(c)


def characteristic_by_deletion_contraction(S):
    memo = {}
    tm1 = UniPoly.from_descending([1, -1])

    def rec(C):
        if C._key in memo:
            return memo[C._key]
        if C.ground == 0:
            res = UniPoly.constant(1)
        else:
            e = _bits.lowest(C.ground)
            eb = 1 << e
            if eb not in C.central:
                res = rec(delete(C, eb))
            elif C.rank_table[eb] == 0:
                res = UniPoly()
            elif e in C.bridges():
                res = tm1 * rec(delete(C, eb))
            else:
                res = rec(delete(C, eb)) - rec(contract(C, eb))
        memo[C._key] = res
        return res

    return rec(S)


CHI_ROUTES = {
    "definition": characteristic_by_definition,
    "mobius": characteristic_by_mobius,
    "deletion_contraction": characteristic_by_deletion_contraction,
}


def characteristic(S, route="definition"):
    try:
        fn = CHI_ROUTES[route]
    except KeyError:
        raise ValueError(f"unknown characteristic route {route!r}") from None
    return fn(S)


# Mobius function of the flat semilattice


def _require_flat_pair(S, X, Y):
    for Z in (X, Y):
        if not S.is_flat(Z):
            raise ValueError(f"{Z} is not a flat")
    if X & ~Y:
        raise ValueError(f"{X} is not contained in {Y}")


def mobius_closed_form(S, X, Y):
    """Signed count of central sets between X and Y whose closure is Y."""
    _require_flat_pair(S, X, Y)
    total = 0
    for Z in _bits.submasks(Y & ~X):
        W = Z | X
        if W in S.central and closure(S, W) == Y:
            total += (-1) ** _bits.popcount(Z)
    return total


def mobius_recursive(S, X, Y):
    _require_flat_pair(S, X, Y)
    mu = {X: 1}
    between = sorted(
        (F for F in flats(S) if X & ~F == 0 and F & ~Y == 0),
        key=_bits.popcount,
    )
    for F in between:
        if F == X:
            continue
        mu[F] = -sum(v for G, v in mu.items() if G & ~F == 0)
    return mu[Y]


def mobius_interval(S, X, Y):
    a = mobius_closed_form(S, X, Y)
    b = mobius_recursive(S, X, Y)
    if a != b:
        raise ArithmeticError(f"Mobius routes disagree on [{X},{Y}]: {a} != {b}")
    return a


# broken circuits


@dataclass
class BrokenCircuitAnalysis:
    ordering: tuple
    broken_circuits: list
    nbc_counts: WhitneySeq
    nbc_sets: list


def broken_circuit_analysis(S, ordering=None):
    """NBC central sets for a linear order of the ground set (ascending by default)."""
    if ordering is None:
        ordering = S.elements
    ordering = tuple(ordering)
    if sorted(ordering) != S.elements:
        raise ValueError("ordering must be a permutation of the ground set")
    pos = {e: i for i, e in enumerate(ordering)}
    broken = []
    for C in S.circuits():
        m = min(_bits.elements(C), key=pos.__getitem__)
        broken.append(C & ~(1 << m))
    broken = sorted(set(broken))
    counts = [0] * (S.r + 1)
    nbc = []
    for X in sorted(S.central):
        if any(B & ~X == 0 for B in broken):
            continue
        counts[_bits.popcount(X)] += 1
        nbc.append(X)
    return BrokenCircuitAnalysis(ordering, broken, WhitneySeq(tuple(counts), S.r), nbc)


# associated matroids


def rank_extension_matroid(S):
    """Matroid on the ground set whose rank is the largest central rank inside X."""
    rank = {}
    for X in _bits.submasks(S.ground):
        best = S.rank_table.get(X, 0)
        for e in _bits.elements(X):
            v = rank[X & ~(1 << e)]
            if v > best:
                best = v
        rank[X] = best
    return Matroid(S.ground, rank)


def from_pointed_matroid(N, p):
    return Semimatroid.from_pointed_matroid(N, p)
