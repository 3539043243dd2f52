"""Exact linear algebra over Q and over prime fields F_p.

Rank over Q uses fraction-free (Bareiss) elimination on integer rows obtained
by clearing denominators.  Row reduction, kernels and solving go through a
small field interface so the same code serves Q and F_p.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def parse_rational(value):
    """Accept ints, Fractions and ``"p/q"`` strings."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not field elements")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read {value!r} as a rational")


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Rationals:
    name = "Q"
    characteristic = 0

    def element(self, x):
        return parse_rational(x)

    zero = Fraction(0)
    one = Fraction(1)

    def div(self, a, b):
        return a / b

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"

    def to_json(self):
        return "Q"

    def rank(self, rows):
        return rank_q(rows)


class PrimeField:
    def __init__(self, p):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"F{p}"
        self.zero = 0
        self.one = 1

    def element(self, x):
        q = parse_rational(x)
        if q.denominator % self.p == 0:
            raise ValueError(f"{x} has no image in F_{self.p}")
        return q.numerator * pow(q.denominator, -1, self.p) % self.p

    def div(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def to_json(self):
        return {"Fp": self.p}

    def rank(self, rows):
        return len(rref(rows, self)[1])


QQ = Rationals()


def GF(p):
    return PrimeField(p)


def _mod(field, x):
    return x % field.p if isinstance(field, PrimeField) else x


def integer_rows(rows):
    """Scale each rational row by the lcm of its denominators."""
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        m = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * m) for x in row])
    return out


def bareiss_rank(rows):
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            a = m[r][col]
            row_r, row_k = m[r], m[rank]
            for c in range(col + 1, ncols):
                row_r[c] = (p * row_r[c] - a * row_k[c]) // prev
            row_r[col] = 0
        prev = p
        rank += 1
    return rank


def rank_q(rows):
    return bareiss_rank(integer_rows(rows))


def rref(rows, field=QQ):
    """Reduced row echelon form; returns ``(nonzero_rows, pivot_columns)``."""
    m = [[field.element(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.div(field.one, m[r][c])
        m[r] = [_mod(field, x * inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [_mod(field, a - f * b) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def kernel(rows, ncols, field=QQ):
    """Basis of ``{x : A x = 0}`` for the matrix with the given rows."""
    red, pivots = rref(rows, field) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = _mod(field, -row[f])
        basis.append(v)
    return basis


def solve_affine(rows, rhs, ncols, field=QQ):
    """Parametrise ``{x : A x = b}``.

    Returns ``(x0, basis)`` with the solution set ``x0 + span(basis)``, or
    ``None`` when the system is inconsistent.
    """
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, field) if aug else ([], [])
    if ncols in pivots:
        return None
    x0 = [field.zero] * ncols
    for row, pc in zip(red, pivots):
        x0[pc] = row[ncols]
    return x0, kernel(rows, ncols, field)


def dot(u, v, field=QQ):
    return _mod(field, sum((a * b for a, b in zip(u, v)), field.zero))


def normalize_first_nonzero(v, field=QQ):
    """Scale so the first nonzero entry is 1."""
    lead = next((x for x in v if x != 0), None)
    if lead is None:
        return list(v)
    inv = field.div(field.one, lead)
    return [_mod(field, x * inv) for x in v]


def canonical_affine(rows, rhs, field=QQ):
    """A hashable key identifying the affine subspace ``{A x = b}``.

    The key is the RREF of the augmented system, unique for the subspace.
    Returns None for an empty solution set.
    """
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    if not aug:
        return ()
    red, pivots = rref(aug, field)
    ncols = len(aug[0]) - 1
    if ncols in pivots:
        return None
    return tuple(tuple(r) for r in red)
