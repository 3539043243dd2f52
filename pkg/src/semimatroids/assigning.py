"""Assigning matroids: a matroid with a 0/1 label on each circuit."""

from __future__ import annotations

from itertools import product

from . import _bits
from .matroid import Matroid, corank_nullity_expand
from .poly import BiPoly, UniPoly
from .semimatroid import Semimatroid, rank_extension_matroid, verify_axioms


class AssigningMatroid:
    def __init__(self, matroid, labels=None):
        circs = matroid.circuits()
        if labels is None:
            labels = {C: 0 for C in circs}
        labels = {int(C): int(v) for C, v in labels.items()}
        if set(labels) != set(circs):
            raise ValueError("assigning must label exactly the circuits of the matroid")
        if any(v not in (0, 1) for v in labels.values()):
            raise ValueError("assigning labels must be 0 or 1")
        self.matroid = matroid
        self.labels = labels

    @classmethod
    def constant(cls, matroid, value):
        return cls(matroid, {C: value for C in matroid.circuits()})

    def compatible_circuits(self):
        return sorted(C for C, v in self.labels.items() if v == 0)

    def __eq__(self, other):
        return (
            isinstance(other, AssigningMatroid)
            and self.matroid == other.matroid
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.matroid, frozenset(self.labels.items())))

    def __repr__(self):
        zeros = len(self.compatible_circuits())
        return f"AssigningMatroid({self.matroid!r}, {zeros}/{len(self.labels)} compatible)"


def compatible_family(A):
    """Subsets whose circuits all carry label 0, increasing bitmask order."""
    bad = [C for C, v in A.labels.items() if v == 1]
    return [X for X in _bits.submasks(A.matroid.ground) if not any(C & ~X == 0 for C in bad)]


def compatible_polynomials(A):
    """Compatible characteristic and Tutte polynomials."""
    M = A.matroid
    if M.ground == 0:
        return UniPoly.constant(1), BiPoly.constant(1)
    r = M.r
    chi = {}
    counts = {}
    for X in compatible_family(A):
        rx = M.rank(X)
        k = _bits.popcount(X)
        chi[r - rx] = chi.get(r - rx, 0) + (-1) ** k
        counts[(r - rx, k - rx)] = counts.get((r - rx, k - rx), 0) + 1
    return UniPoly(chi), corank_nullity_expand(counts)


def compatible_triple(A):
    """``(ground, family, rank)`` with the rank of the matroid restricted to the family."""
    fam = compatible_family(A)
    return A.matroid.ground, fam, {X: A.matroid.rank(X) for X in fam}


def is_semimatroid(A):
    """``(verdict, first_failing_axiom, report)`` for the compatible triple."""
    rep = verify_axioms(*compatible_triple(A))
    return rep.ok, rep.first_failure, rep


def to_semimatroid(A):
    ground, fam, rank = compatible_triple(A)
    return Semimatroid(ground, fam, rank)


def induced_assigning(S):
    """The rank-extension matroid with label 0 exactly on central circuits."""
    M = rank_extension_matroid(S)
    return AssigningMatroid(M, {C: 0 if C in S.central else 1 for C in M.circuits()})


def all_assignings(M):
    """Every assigning of `M`, in lexicographic order of label vectors."""
    circs = M.circuits()
    for labels in product((1, 0), repeat=len(circs)):
        yield AssigningMatroid(M, dict(zip(circs, labels)))


# Worked example on U_{2,4}: circuits C_i = E - e_i


def u24_circuit(i):
    """Bitmask of ``C_i = E - e_i`` for ``i`` in 1..4."""
    return 0b1111 & ~(1 << (i - 1))


def u24_assigning(zero_labels):
    """U_{2,4} with label 0 on the circuits ``C_i`` for i in `zero_labels`."""
    M = Matroid.uniform(2, 4)
    return AssigningMatroid(M, {u24_circuit(i): 0 if i in zero_labels else 1 for i in range(1, 5)})
