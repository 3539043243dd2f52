"""Exact integer polynomials in one variable ``t`` and in two variables ``t, s``.

Coefficients are Python ints, stored sparsely with zero coefficients dropped.
Both classes are immutable and hashable, and mix freely with plain ints in
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ZERO_DEGREE = -1  # degree reported for the zero polynomial


def _clean(coeffs):
    return {k: v for k, v in coeffs.items() if v != 0}


class UniPoly:
    """Polynomial in ``t`` with integer coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        for d, v in (coeffs or {}).items():
            d = int(d)
            if d < 0:
                raise ValueError(f"negative exponent {d}")
            if int(v) != v:
                raise ValueError(f"non-integer coefficient {v!r}")
            c[d] = c.get(d, 0) + int(v)
        self._c = _clean(c)
        self._hash = None

    # constructors
    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, degree, c=1):
        return cls({degree: c})

    @classmethod
    def from_descending(cls, coeffs):
        """``[1, -4, 3]`` is ``t**2 - 4*t + 3``."""
        n = len(coeffs)
        return cls({n - 1 - i: c for i, c in enumerate(coeffs)})

    @staticmethod
    def _lift(other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, int):
            return UniPoly({0: other})
        return NotImplemented

    # structure
    @property
    def degree(self):
        return max(self._c) if self._c else ZERO_DEGREE

    def is_zero(self):
        return not self._c

    def coeff(self, d):
        return self._c.get(d, 0)

    def terms(self):
        """``(degree, coefficient)`` pairs, ascending by degree."""
        return sorted(self._c.items())

    def coefficients(self):
        """Dense coefficient list from the leading term down to the constant."""
        if not self._c:
            return []
        return [self._c.get(d, 0) for d in range(self.degree, -1, -1)]

    # arithmetic
    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for d, v in other._c.items():
            c[d] = c.get(d, 0) + v
        return UniPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly({d: -v for d, v in self._c.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        c = {}
        for d1, v1 in self._c.items():
            for d2, v2 in other._c.items():
                c[d1 + d2] = c.get(d1 + d2, 0) + v1 * v2
        return UniPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result, base = UniPoly({0: 1}), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("UniPoly", frozenset(self._c.items())))
        return self._hash

    def __call__(self, x):
        """Evaluate at `x` (any ring element that supports ``+``, ``*``, ``**``)."""
        total = 0
        for d, v in self._c.items():
            total = total + v * x**d
        return total

    def shift(self, k):
        """Multiply by ``t**k``."""
        return UniPoly({d + k: v for d, v in self._c.items()})

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self):
        return _render([((d,), v) for d, v in sorted(self._c.items(), reverse=True)], ("t",))


class BiPoly:
    """Polynomial in ``t`` and ``s``; keys are ``(t_degree, s_degree)``."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        for (i, j), v in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent {(i, j)}")
            if int(v) != v:
                raise ValueError(f"non-integer coefficient {v!r}")
            key = (int(i), int(j))
            c[key] = c.get(key, 0) + int(v)
        self._c = _clean(c)
        self._hash = None

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def t(cls):
        return cls({(1, 0): 1})

    @classmethod
    def s(cls):
        return cls({(0, 1): 1})

    @classmethod
    def from_uni(cls, p, var="t"):
        if var == "t":
            return cls({(d, 0): v for d, v in p.terms()})
        if var == "s":
            return cls({(0, d): v for d, v in p.terms()})
        raise ValueError(f"unknown variable {var!r}")

    @staticmethod
    def _lift(other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly({(0, 0): other})
        return NotImplemented

    def is_zero(self):
        return not self._c

    def coeff(self, i, j):
        return self._c.get((i, j), 0)

    def terms(self):
        return sorted(self._c.items())

    @property
    def degrees(self):
        """``(max t-degree, max s-degree)``; ``(-1, -1)`` for zero."""
        if not self._c:
            return (ZERO_DEGREE, ZERO_DEGREE)
        return (max(i for i, _ in self._c), max(j for _, j in self._c))

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return BiPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        c = {}
        for (i1, j1), v1 in self._c.items():
            for (i2, j2), v2 in other._c.items():
                k = (i1 + i2, j1 + j2)
                c[k] = c.get(k, 0) + v1 * v2
        return BiPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result, base = BiPoly({(0, 0): 1}), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("BiPoly", frozenset(self._c.items())))
        return self._hash

    def subs(self, t=None, s=None):
        """Substitute ring elements for ``t`` and/or ``s`` (None keeps the variable)."""
        t_img = BiPoly.t() if t is None else t
        s_img = BiPoly.s() if s is None else s
        tp, sp = {}, {}
        total = 0
        for (i, j), v in self._c.items():
            if i not in tp:
                tp[i] = t_img**i
            if j not in sp:
                sp[j] = s_img**j
            total = total + v * tp[i] * sp[j]
        if isinstance(total, int):
            total = BiPoly.constant(total)
        return total

    def to_uni(self, var="t"):
        """Drop to a UniPoly when only `var` occurs."""
        out = {}
        for (i, j), v in self._c.items():
            if var == "t":
                if j:
                    raise ValueError(f"{self} depends on s")
                out[i] = v
            else:
                if i:
                    raise ValueError(f"{self} depends on t")
                out[j] = v
        return UniPoly(out)

    def __repr__(self):
        return f"BiPoly({self})"

    def __str__(self):
        items = sorted(self._c.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))
        return _render(items, ("t", "s"))


def _render(items, names):
    if not items:
        return "0"
    parts = []
    for exps, v in items:
        mono = "*".join(
            n if e == 1 else f"{n}**{e}" for n, e in zip(names, exps) if e
        )
        mag = abs(v)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        sign = "-" if v < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


T = UniPoly.monomial(1)


def eval_uni(p, x):
    """Exact value of `p` at the rational `x`."""
    return Fraction(p(Fraction(x)))


def specialize_bi(p, t_image, s_image, sign_exponent=0):
    """``(-1)**sign_exponent * p(t_image, s_image)`` as a UniPoly."""
    total = UniPoly()
    tp, sp = {}, {}
    for (i, j), v in p.terms():
        if i not in tp:
            tp[i] = UniPoly._lift(t_image) ** i
        if j not in sp:
            sp[j] = UniPoly._lift(s_image) ** j
        total = total + v * tp[i] * sp[j]
    return -total if sign_exponent % 2 else total


def substitute_product(p):
    """``p(t*s)`` as a BiPoly."""
    return BiPoly({(d, d): v for d, v in p.terms()})


# Whitney numbers and coefficient shape


@dataclass(frozen=True)
class WhitneySeq:
    values: tuple
    rank: int

    def __post_init__(self):
        if len(self.values) != self.rank + 1:
            raise ValueError("Whitney sequence length must be rank + 1")

    def to_poly(self):
        """Rebuild ``sum (-1)**i w_i t**(rank - i)``."""
        return UniPoly({self.rank - i: (-1) ** i * w for i, w in enumerate(self.values)})

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)


def whitney_sequence(chi, rank):
    if chi.degree > rank:
        raise ValueError(f"degree {chi.degree} exceeds rank {rank}")
    return WhitneySeq(tuple((-1) ** i * chi.coeff(rank - i) for i in range(rank + 1)), rank)


@dataclass(frozen=True)
class ShapeReport:
    alternating_nonzero: bool
    unimodal: bool
    log_concave: bool

    @property
    def ok(self):
        return self.alternating_nonzero and self.unimodal and self.log_concave


def is_unimodal(seq):
    seq = list(seq)
    k = 0
    while k + 1 < len(seq) and seq[k] <= seq[k + 1]:
        k += 1
    return all(seq[i] >= seq[i + 1] for i in range(k, len(seq) - 1))


def is_log_concave(seq):
    seq = list(seq)
    return all(seq[k - 1] * seq[k + 1] <= seq[k] ** 2 for k in range(1, len(seq) - 1))


def shape_report(w):
    vals = list(w.values)
    return ShapeReport(
        alternating_nonzero=bool(vals) and vals[0] == 1 and all(v > 0 for v in vals),
        unimodal=is_unimodal(vals),
        log_concave=is_log_concave(vals),
    )


# JSON: lists of [exponent(s), "coefficient"] sorted by exponent


def poly_to_json(p):
    if isinstance(p, UniPoly):
        return [[d, str(v)] for d, v in p.terms()]
    return [[[i, j], str(v)] for (i, j), v in p.terms()]


def poly_from_json(data):
    if not data:
        return UniPoly()
    if isinstance(data[0][0], list):
        return BiPoly({tuple(e): int(v) for e, v in data})
    return UniPoly({e: int(v) for e, v in data})
