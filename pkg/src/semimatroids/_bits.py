"""Bitmask helpers. Element ``i`` of a ground set is bit ``1 << i``."""

MAX_GROUND = 20


def popcount(mask):
    return bin(mask).count("1")


def elements(mask):
    """Indices of the set bits of `mask`, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def from_elements(items):
    mask = 0
    for i in items:
        mask |= 1 << i
    return mask


def full(n):
    return (1 << n) - 1


def submasks(mask):
    """All submasks of `mask` in increasing numeric order."""
    subs = []
    sub = mask
    while True:
        subs.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & mask
    subs.reverse()
    return subs


def lowest(mask):
    """Index of the lowest set bit; `mask` must be nonzero."""
    return (mask & -mask).bit_length() - 1


def is_subset(a, b):
    return a & ~b == 0


def fmt(mask, one_based=True):
    """Human readable ``{e1,e3}`` rendering."""
    off = 1 if one_based else 0
    return "{" + ",".join(f"e{i + off}" for i in elements(mask)) + "}"
