"""Convolution identities for the characteristic and Tutte polynomials."""

from __future__ import annotations

from dataclasses import dataclass

from .poly import BiPoly, substitute_product
from .semimatroid import (
    characteristic,
    contract,
    flats,
    restrict,
    tutte,
)

VARIANTS = ("char_ts", "tutte_central", "tutte_flats", "tutte_cyclic_flats")


@dataclass(frozen=True)
class ConvolutionReport:
    lhs: BiPoly
    rhs: BiPoly
    variant: str

    @property
    def equal(self):
        return (self.lhs - self.rhs).is_zero()

    def to_json(self):
        from .poly import poly_to_json

        return {
            "variant": self.variant,
            "lhs": poly_to_json(self.lhs),
            "rhs": poly_to_json(self.rhs),
            "equal": self.equal,
        }


def char_convolution(S):
    """Both sides of the product formula for ``chi(S; t*s)`` over the flats."""
    if S.has_loop():
        raise ValueError("the characteristic convolution needs a loopless semimatroid")
    lhs = substitute_product(characteristic(S))
    rhs = BiPoly()
    for X in flats(S):
        left = BiPoly.from_uni(characteristic(restrict(S, X)), "t")
        right = BiPoly.from_uni(characteristic(contract(S, X)), "s")
        rhs = rhs + BiPoly({(S.r - S.rank(X), 0): 1}) * left * right
    return ConvolutionReport(lhs, rhs, "char_ts")


def cyclic_flats(S):
    """Flats whose restriction has no bridge."""
    return [X for X in flats(S) if not restrict(S, X).bridges()]


def _index_sets(S, variant):
    if variant == "tutte_central":
        return sorted(S.central)
    if variant == "tutte_flats":
        return list(flats(S))
    if variant == "tutte_cyclic_flats":
        return cyclic_flats(S)
    raise ValueError(f"unknown Tutte convolution variant {variant!r}")


def tutte_convolution(S, variant="tutte_central"):
    lhs = tutte(S)
    rhs = BiPoly()
    for X in _index_sets(S, variant):
        a = tutte(restrict(S, X)).subs(t=0)
        b = tutte(contract(S, X)).subs(s=0)
        rhs = rhs + a * b
    return ConvolutionReport(lhs, rhs, variant)


def all_convolutions(S):
    reports = []
    if not S.has_loop():
        reports.append(char_convolution(S))
    for v in VARIANTS[1:]:
        reports.append(tutte_convolution(S, v))
    return reports
