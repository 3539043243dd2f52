"""Affine hyperplane arrangements over Q or F_p.

Hyperplane ``e`` is ``normal_e . x = offset_e``.  A zero normal is allowed:
with offset 0 it is the whole space (a degenerate hyperplane, a loop of the
semimatroid), otherwise it is empty and never central.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from . import _bits
from .assigning import AssigningMatroid
from .linalg import (
    QQ,
    GF,
    PrimeField,
    canonical_affine,
    dot,
    format_rational,
    kernel,
    normalize_first_nonzero,
    solve_affine,
)
from .matroid import CapError, Matroid, corank_nullity_expand
from .poly import UniPoly
from .poset import FinitePoset, mobius_table
from .semimatroid import Semimatroid

POINT_BUDGET = 10**7


@dataclass(frozen=True)
class Hyperplane:
    normal: tuple
    offset: object

    def __str__(self):
        return f"{list(map(str, self.normal))} . x = {self.offset}"


class Arrangement:
    def __init__(self, dim, hyperplanes, field=QQ):
        self.dim = dim
        self.field = field
        hs = []
        for h in hyperplanes:
            if isinstance(h, Hyperplane):
                normal, offset = h.normal, h.offset
            else:
                normal, offset = h
            if len(normal) != dim:
                raise ValueError(f"normal {normal} does not have length {dim}")
            hs.append(
                Hyperplane(tuple(field.element(x) for x in normal), field.element(offset))
            )
        if len(hs) > _bits.MAX_GROUND:
            raise CapError(f"{len(hs)} hyperplanes exceed the cap {_bits.MAX_GROUND}")
        self.hyperplanes = tuple(hs)
        self._rank_cache = {}

    def __len__(self):
        return len(self.hyperplanes)

    @property
    def ground(self):
        return _bits.full(len(self.hyperplanes))

    @property
    def normals(self):
        return [list(h.normal) for h in self.hyperplanes]

    @property
    def offsets(self):
        return [h.offset for h in self.hyperplanes]

    def is_central(self):
        return all(h.offset == 0 for h in self.hyperplanes)

    def __eq__(self, other):
        return (
            isinstance(other, Arrangement)
            and self.dim == other.dim
            and self.field == other.field
            and self.hyperplanes == other.hyperplanes
        )

    def __hash__(self):
        return hash((self.dim, self.field, self.hyperplanes))

    def __repr__(self):
        return f"Arrangement(dim={self.dim}, {len(self)} hyperplanes over {self.field!r})"

    def subarrangement(self, X):
        return Arrangement(self.dim, [self.hyperplanes[e] for e in _bits.elements(X)], self.field)

    def centralization(self):
        return Arrangement(self.dim, [(h.normal, 0) for h in self.hyperplanes], self.field)

    def translate(self, a):
        if len(a) != len(self):
            raise ValueError("translation vector must have one entry per hyperplane")
        return Arrangement(self.dim, [(h.normal, v) for h, v in zip(self.hyperplanes, a)], self.field)

    def system(self, X):
        idx = _bits.elements(X)
        return [list(self.hyperplanes[e].normal) for e in idx], [self.hyperplanes[e].offset for e in idx]

    def ranks(self, X):
        """``(rank of normals, rank of augmented rows)`` for the subset X."""
        if X not in self._rank_cache:
            rows, rhs = self.system(X)
            rn = self.field.rank(rows) if rows else 0
            ra = self.field.rank([r + [b] for r, b in zip(rows, rhs)]) if rows else 0
            self._rank_cache[X] = (rn, ra)
        return self._rank_cache[X]

    def intersection_key(self, X):
        """Canonical key of the affine subspace cut out by X, or None if empty."""
        rows, rhs = self.system(X)
        if not rows:
            return ()
        return canonical_affine(rows, rhs, self.field)

    def reduce_mod(self, p):
        """Image over F_p after clearing denominators hyperplane by hyperplane."""
        if self.field != QQ:
            raise ValueError("only rational arrangements can be reduced")
        hs = []
        for h in self.hyperplanes:
            vals = list(h.normal) + [h.offset]
            m = lcm(*(Fraction(v).denominator for v in vals))
            ints = [int(Fraction(v) * m) % p for v in vals]
            hs.append((ints[:-1], ints[-1]))
        return Arrangement(self.dim, hs, GF(p))

    def to_json(self):
        def enc(v):
            return format_rational(v) if self.field == QQ else int(v)

        return {
            "field": self.field.to_json(),
            "dim": self.dim,
            "hyperplanes": [
                {"normal": [enc(x) for x in h.normal], "offset": enc(h.offset)}
                for h in self.hyperplanes
            ],
        }


def normal_rank(A):
    """Dimension of the span of the normal vectors."""
    return A.ranks(A.ground)[0] if len(A) else 0


def central_family(A):
    """``{X: rank}`` over subsets with a nonempty common intersection."""
    fam = {}
    for X in _bits.submasks(A.ground):
        if any(X & ~(1 << e) not in fam for e in _bits.elements(X)):
            continue
        rn, ra = A.ranks(X)
        if rn == ra:
            fam[X] = ra
    return fam


def semimatroid_of(A):
    fam = central_family(A)
    return Semimatroid(A.ground, fam.keys(), fam)


def normal_matroid(A):
    """Matroid of the normal vectors (the matroid of the centralization)."""
    return Matroid.from_matrix([list(h.normal) for h in A.hyperplanes], A.field)


# polynomials


@dataclass(frozen=True)
class ArrangementPolynomials:
    chi: UniPoly
    chi_mobius: UniPoly
    tutte: object

    @property
    def agree(self):
        return self.chi == self.chi_mobius


def characteristic_by_sum(A):
    c = {}
    for X, r in central_family(A).items():
        d = A.dim - r
        c[d] = c.get(d, 0) + (-1) ** _bits.popcount(X)
    return UniPoly(c)


def tutte_by_sum(A):
    fam = central_family(A)
    rA = max(fam.values())
    counts = {}
    for X, r in fam.items():
        key = (rA - r, _bits.popcount(X) - r)
        counts[key] = counts.get(key, 0) + 1
    return corank_nullity_expand(counts)


@dataclass
class IntersectionSemilattice:
    """Distinct intersections, each with its dimension and one central set realising it."""

    keys: list
    dims: list
    witnesses: list
    poset: FinitePoset


def intersection_semilattice(A):
    """Intersection poset ordered by reverse inclusion, built geometrically."""
    seen = {}
    for X, r in sorted(central_family(A).items()):
        key = A.intersection_key(X)
        if key not in seen:
            seen[key] = (A.dim - r, X)
    keys = list(seen)
    dims = [seen[k][0] for k in keys]
    wits = [seen[k][1] for k in keys]
    rank = A.field.rank

    def contains(k_big, k_small):
        # subspace(k_small) is inside subspace(k_big)
        rows_small = [list(r) for r in k_small]
        rows_big = [list(r) for r in k_big]
        if not rows_big:
            return True
        if not rows_small:
            return False
        return rank(rows_small + rows_big) == rank(rows_small)

    n = len(keys)
    rel = [[i == j or (dims[j] < dims[i] and contains(keys[i], keys[j])) for j in range(n)] for i in range(n)]
    return IntersectionSemilattice(keys, dims, wits, FinitePoset(keys, rel, check=False))


def characteristic_by_mobius(A):
    L = intersection_semilattice(A)
    P = L.poset
    mu = mobius_table(P)
    b = P.index(())
    c = {}
    for j, d in enumerate(L.dims):
        m = mu[(b, j)]
        if m:
            c[d] = c.get(d, 0) + m
    return UniPoly(c)


def arrangement_polynomials(A):
    return ArrangementPolynomials(
        chi=characteristic_by_sum(A),
        chi_mobius=characteristic_by_mobius(A),
        tutte=tutte_by_sum(A),
    )


# localization and restriction


@dataclass
class RestrictedArrangement:
    """Traces of hyperplanes on an intersection, written in a chart of it.

    `labels[k]` is the index in the parent arrangement of the k-th trace.
    The chart is ``x = base + sum lambda_i basis_i``.
    """

    arrangement: Arrangement
    labels: list
    degenerate: bool
    base: list
    basis: list

    def characteristic(self):
        if self.degenerate:
            return UniPoly()
        return characteristic_by_sum(self.arrangement)


def restriction_at(A, X, all_hyperplanes=False):
    """Restriction to ``cap A_X`` for a central set X.

    By default only hyperplanes outside X leave traces, which is what the
    contraction ``C/X`` sees.  With `all_hyperplanes` every hyperplane does,
    so members of X become degenerate traces as soon as X is nonempty.
    Empty traces are dropped; a trace equal to the whole intersection is kept
    as a zero-normal hyperplane and marks the result degenerate.
    """
    rows, rhs = A.system(X)
    sol = solve_affine(rows, rhs, A.dim, A.field)
    if sol is None:
        raise ValueError(f"{X} is not a central set")
    x0, basis = sol
    F = A.field
    traces, labels = [], []
    degenerate = False
    for e in _bits.elements(A.ground if all_hyperplanes else A.ground & ~X):
        h = A.hyperplanes[e]
        normal = [dot(h.normal, b, F) for b in basis]
        offset = h.offset - dot(h.normal, x0, F)
        if isinstance(F, PrimeField):
            offset %= F.p
        if all(v == 0 for v in normal):
            if offset != 0:
                continue
            degenerate = True
        traces.append((normal, offset))
        labels.append(e)
    return RestrictedArrangement(Arrangement(len(basis), traces, F), labels, degenerate, x0, basis)


def localization(A, X):
    """Indices of the hyperplanes containing ``cap A_X``."""
    _, ra = A.ranks(X)
    out = 0
    for e in range(len(A)):
        if A.ranks(X | (1 << e)) == (ra, ra):
            out |= 1 << e
    return out


def localization_restriction(A, X, all_hyperplanes=False):
    """``(A^X, A|X)`` at the flat given by the central set X (which must be closed)."""
    rn, ra = A.ranks(X)
    if rn != ra:
        raise ValueError(f"{X} is not a central set")
    loc = localization(A, X)
    if loc != X:
        raise ValueError(f"{X} is not a flat: its closure is {loc}")
    return A.subarrangement(loc), restriction_at(A, X, all_hyperplanes)


def hcf_sides(A):
    """``T(A)`` and the two convolution sums (over central sets, over flats)."""
    from .semimatroid import flats

    S = semimatroid_of(A)
    lhs = tutte_by_sum(A)

    def term(X):
        a = tutte_by_sum(A.subarrangement(X)).subs(t=0)
        b = tutte_by_sum(restriction_at(A, X).arrangement).subs(s=0)
        return a * b

    terms = {X: term(X) for X in S.central}
    over_central = sum((terms[X] for X in sorted(terms)), lhs * 0)
    over_flats = sum((terms[X] for X in flats(S)), lhs * 0)
    return lhs, over_central, over_flats


# affine circuits, circuit vectors, discriminantal arrangement


def affine_circuits(A):
    """Minimal nonempty X with nonempty intersection unchanged by dropping any member."""
    fam = central_family(A)
    cand = []
    for X in sorted(fam):
        if X == 0:
            continue
        key = A.intersection_key(X)
        if all(A.intersection_key(X & ~(1 << e)) == key for e in _bits.elements(X)):
            cand.append(X)
    return [X for X in cand if not any(Y != X and Y & ~X == 0 for Y in cand)]


@dataclass(frozen=True)
class CircuitVector:
    circuit: int
    coefficients: tuple


def circuit_vectors(A):
    if not A.is_central():
        raise ValueError("circuit vectors need a central arrangement")
    F = A.field
    out = []
    M = normal_matroid(A)
    for C in M.circuits():
        idx = _bits.elements(C)
        # columns alpha_e for e in C; kernel of the dim x |C| matrix
        mat = [[A.hyperplanes[e].normal[i] for e in idx] for i in range(A.dim)]
        ker = kernel(mat, len(idx), F)
        if len(ker) != 1:
            raise ArithmeticError(f"circuit {C} has a {len(ker)}-dimensional kernel")
        full = [F.zero] * len(A)
        for e, v in zip(idx, ker[0]):
            full[e] = v
        out.append(CircuitVector(C, tuple(normalize_first_nonzero(full, F))))
    return out


def discriminantal(A):
    """Arrangement in F^|E| with one hyperplane ``c_C . x = 0`` per distinct circuit vector."""
    seen = []
    for cv in circuit_vectors(A):
        if cv.coefficients not in seen:
            seen.append(cv.coefficients)
    return Arrangement(len(A), [(c, 0) for c in seen], A.field)


def assigning_by_affine_circuits(A_o, a):
    M = normal_matroid(A_o)
    aff = set(affine_circuits(A_o.translate(a)))
    return AssigningMatroid(M, {C: 0 if C in aff else 1 for C in M.circuits()})


def assigning_by_circuit_vectors(A_o, a):
    M = normal_matroid(A_o)
    F = A_o.field
    vec = [F.element(v) for v in a]
    labels = {cv.circuit: 0 if dot(cv.coefficients, vec, F) == 0 else 1 for cv in circuit_vectors(A_o.centralization())}
    return AssigningMatroid(M, labels)


def assigning_of_translation(A_o, a):
    """The assigning induced by translating A_o by `a`, computed two ways."""
    x = assigning_by_affine_circuits(A_o, a)
    y = assigning_by_circuit_vectors(A_o, a)
    if x != y:
        raise ArithmeticError("affine-circuit and circuit-vector assignings disagree")
    return x


def translate(A_o, a):
    return A_o.translate(a)


# classification of parallel translations


def central_flats(A):
    """Flats of a central arrangement as closed index masks, by closure search."""
    if not A.is_central():
        raise ValueError("expected a central arrangement")
    rows = A.normals
    rank = A.field.rank

    def rk(mask):
        return rank([rows[e] for e in _bits.elements(mask)]) if mask else 0

    def close(mask):
        r = rk(mask)
        out = mask
        for e in range(len(A)):
            if not out >> e & 1 and rk(mask | (1 << e)) == r:
                out |= 1 << e
        return out

    start = close(0)
    found = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for F in frontier:
            for e in range(len(A)):
                if F >> e & 1:
                    continue
                G = close(F | (1 << e))
                if G not in found:
                    found.add(G)
                    nxt.append(G)
        frontier = nxt
    return sorted(found, key=lambda m: (rk(m), m))


def _primes():
    n = 2
    while True:
        if all(n % d for d in range(2, int(n**0.5) + 1)):
            yield n
        n += 1


def representative_point(delta, X):
    """A point on every hyperplane of `delta` indexed by X and on no other.

    X is a closed index mask.  The flat is parametrised by a kernel basis and
    sampled at parameters ``(1, B, B**2, ...)`` for B = 2, 3, 5, ...
    """
    F = delta.field
    if F != QQ:
        raise ValueError("representative points are only computed over Q")
    if not len(delta):
        return [F.zero] * delta.dim
    rows = [list(delta.hyperplanes[e].normal) for e in _bits.elements(X)]
    basis = kernel(rows, delta.dim, F) if rows else [
        [F.one if i == j else F.zero for i in range(delta.dim)] for j in range(delta.dim)
    ]
    avoid = [delta.hyperplanes[e].normal for e in range(len(delta)) if not X >> e & 1]
    for B in _primes():
        pt = [F.zero] * delta.dim
        for k, b in enumerate(basis):
            w = Fraction(B) ** k
            pt = [p + w * v for p, v in zip(pt, b)]
        if all(dot(c, pt, F) != 0 for c in avoid):
            return pt


def stratum_of(delta, a):
    """Mask of the hyperplanes of `delta` through `a`; names the stratum containing `a`."""
    F = delta.field
    vec = [F.element(v) for v in a]
    return _bits.from_elements(e for e, h in enumerate(delta.hyperplanes) if dot(h.normal, vec, F) == 0)


@dataclass
class TranslationClass:
    flat: int
    representative: list
    semimatroid: Semimatroid
    assigning: AssigningMatroid


def classify_translations(A_o):
    """One class per flat of the discriminantal arrangement, with a witness translation."""
    if A_o.field != QQ:
        raise ValueError("classification is implemented over Q only")
    if not A_o.is_central():
        raise ValueError("expected a central arrangement")
    delta = discriminantal(A_o)
    out = []
    for X in central_flats(delta):
        a = representative_point(delta, X)
        A_a = A_o.translate(a)
        out.append(TranslationClass(X, a, semimatroid_of(A_a), assigning_of_translation(A_o, a)))
    return out


# finite-field point counting


def count_points_finite_field(A, budget=POINT_BUDGET, chunk=1 << 20):
    """Number of points of F_p^n on no hyperplane, by enumeration."""
    if not isinstance(A.field, PrimeField):
        raise ValueError("point counting needs an arrangement over F_p")
    p, n = A.field.p, A.dim
    total_pts = p**n
    if total_pts > budget:
        raise CapError(f"{p}^{n} points exceed the enumeration budget {budget}")
    normals = np.array([[int(x) for x in h.normal] for h in A.hyperplanes], dtype=np.int64).reshape(len(A), n)
    offsets = [int(h.offset) for h in A.hyperplanes]
    count = 0
    for start in range(0, total_pts, chunk):
        ks = np.arange(start, min(start + chunk, total_pts), dtype=np.int64)
        coords = np.empty((n, ks.size), dtype=np.int64)
        rest = ks.copy()
        for i in range(n):
            coords[i] = rest % p
            rest //= p
        alive = np.ones(ks.size, dtype=bool)
        for h in range(len(A)):
            val = np.zeros(ks.size, dtype=np.int64)
            for i in range(n):
                c = normals[h, i]
                if c:
                    val = (val + c * coords[i]) % p
            alive &= val != offsets[h]
        count += int(alive.sum())
    return count
