"""JSON readers and writers for every object the CLI handles.

Subsets are bitmasks over 0-based element indices, written as decimal strings.
Rationals are written as ``"p/q"`` (or ``"p"`` when integral).  Graph vertices
are 1-based.
"""

from __future__ import annotations

import json

from . import _bits
from .arrangement import Arrangement
from .assigning import AssigningMatroid
from .graph import MultiGraph, check_orientation, default_orientation
from .linalg import QQ, GF, format_rational, parse_rational
from .matroid import CapError, Matroid
from .semimatroid import Semimatroid


class ParseError(ValueError):
    """Malformed input; the message says where."""


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text, source="<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _need(obj, key, path, kind=None):
    if not isinstance(obj, dict):
        raise ParseError(f"{path}: expected an object")
    if key not in obj:
        raise ParseError(f"{path}: missing key {key!r}")
    val = obj[key]
    if kind is not None and not isinstance(val, kind):
        raise ParseError(f"{path}.{key}: expected {getattr(kind, '__name__', kind)}")
    return val


def _mask(v, path):
    try:
        m = int(v)
    except (TypeError, ValueError):
        raise ParseError(f"{path}: {v!r} is not a bitmask") from None
    if m < 0:
        raise ParseError(f"{path}: negative bitmask")
    return m


def _int(v, path):
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"{path}: expected an integer")
    return v


def _rational(v, path):
    try:
        return parse_rational(v)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ParseError(f"{path}: {v!r} is not a rational") from None


def _field(obj, path):
    if obj == "Q":
        return QQ
    if isinstance(obj, dict) and "Fp" in obj:
        try:
            return GF(_int(obj["Fp"], f"{path}.Fp"))
        except ValueError as exc:
            raise ParseError(f"{path}: {exc}") from None
    if obj == "Fp":
        raise ParseError(f"{path}: a prime field needs its characteristic")
    raise ParseError(f"{path}: unknown field {obj!r}")


# matroids


def matroid_from_json(obj, path="$"):
    if not isinstance(obj, dict):
        raise ParseError(f"{path}: expected an object")
    try:
        if "uniform" in obj:
            r, n = obj["uniform"]
            return Matroid.uniform(_int(r, path), _int(n, path))
        if "matrix" in obj:
            m = obj["matrix"]
            fname = _need(m, "field", f"{path}.matrix")
            field = GF(_int(_need(m, "p", f"{path}.matrix"), path)) if fname == "Fp" else _field(fname, path)
            cols = _need(m, "columns", f"{path}.matrix", list)
            return Matroid.from_matrix([[_rational(x, path) for x in c] for c in cols], field)
        if "graph" in obj:
            from .graph import cycle_matroid

            G, _, _ = graph_from_json(obj["graph"], f"{path}.graph")
            return cycle_matroid(G)
        n = _int(_need(obj, "ground_size", path), f"{path}.ground_size")
        rank = _need(obj, "rank", path, dict)
        table = {_mask(k, f"{path}.rank"): _int(v, f"{path}.rank[{k}]") for k, v in rank.items()}
        return Matroid(_bits.full(n), table)
    except (ParseError, CapError):
        raise
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{path}: {exc}") from None


def matroid_to_json(M):
    if M.ground != _bits.full(M.ground_size):
        raise ValueError("relabel the matroid before writing it")
    return {"ground_size": M.ground_size, "rank": {str(X): r for X, r in sorted(M.rank_table.items())}}


# semimatroids


def raw_triple_from_json(obj, path="$"):
    """``(ground, central, rank)`` without validation, for axiom checking."""
    if isinstance(obj, dict) and "central" in obj:
        n = _int(_need(obj, "ground_size", path), f"{path}.ground_size")
        central = [_mask(x, f"{path}.central") for x in _need(obj, "central", path, list)]
        rank = {_mask(k, f"{path}.rank"): _int(v, f"{path}.rank") for k, v in _need(obj, "rank", path, dict).items()}
        return _bits.full(n), central, rank
    if isinstance(obj, dict) and "assigning" in obj:
        from .assigning import compatible_triple

        return compatible_triple(assigning_from_json(obj, path))
    S = semimatroid_from_json(obj, path)
    return S.ground, sorted(S.central), dict(S.rank_table)


def semimatroid_from_json(obj, path="$"):
    if not isinstance(obj, dict):
        raise ParseError(f"{path}: expected an object")
    if "pointed" in obj:
        p = obj["pointed"]
        N = matroid_from_json(_need(p, "matroid", f"{path}.pointed"), f"{path}.pointed.matroid")
        e = _int(_need(p, "p", f"{path}.pointed"), f"{path}.pointed.p")
        try:
            return Semimatroid.from_pointed_matroid(N, e).relabel()
        except ValueError as exc:
            raise ParseError(f"{path}.pointed: {exc}") from None
    if "central" in obj:
        ground, central, rank = raw_triple_from_json(obj, path)
        try:
            return Semimatroid(ground, central, rank)
        except ValueError as exc:
            raise ParseError(f"{path}: {exc}") from None
    return Semimatroid.from_matroid(matroid_from_json(obj, path))


def semimatroid_to_json(S):
    if S.ground != _bits.full(S.ground_size):
        S = S.relabel()
    return {
        "ground_size": S.ground_size,
        "central": [str(X) for X in sorted(S.central)],
        "rank": {str(X): r for X, r in sorted(S.rank_table.items())},
    }


# assigning matroids


def assigning_from_json(obj, path="$"):
    M = matroid_from_json(_need(obj, "matroid", path), f"{path}.matroid")
    labels = {_mask(k, f"{path}.assigning"): _int(v, f"{path}.assigning[{k}]") for k, v in _need(obj, "assigning", path, dict).items()}
    try:
        return AssigningMatroid(M, labels)
    except ValueError as exc:
        raise ParseError(f"{path}.assigning: {exc}") from None


def assigning_to_json(A):
    return {
        "matroid": matroid_to_json(A.matroid),
        "assigning": {str(C): v for C, v in sorted(A.labels.items())},
    }


# arrangements


def arrangement_from_json(obj, path="$"):
    field = _field(_need(obj, "field", path), f"{path}.field")
    n = _int(_need(obj, "dim", path), f"{path}.dim")
    hs = []
    for i, h in enumerate(_need(obj, "hyperplanes", path, list)):
        hp = f"{path}.hyperplanes[{i}]"
        normal = _need(h, "normal", hp, list)
        if len(normal) != n:
            raise ParseError(f"{hp}.normal: expected {n} entries, got {len(normal)}")
        vals = [_rational(x, f"{hp}.normal") for x in normal]
        off = _rational(_need(h, "offset", hp), f"{hp}.offset")
        hs.append((vals, off))
    try:
        return Arrangement(n, hs, field)
    except CapError:
        raise
    except ValueError as exc:
        raise ParseError(f"{path}: {exc}") from None


def arrangement_to_json(A):
    return A.to_json()


# graphs


def graph_from_json(obj, path="$"):
    """``(graph, orientation, gains)``; orientation and gains default to the edge list and zeros."""
    n = _int(_need(obj, "vertices", path), f"{path}.vertices")
    edges = _need(obj, "edges", path, list)
    try:
        G = MultiGraph(n, edges)
    except CapError:
        raise
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{path}.edges: {exc}") from None
    D = obj.get("orientation")
    try:
        D = default_orientation(G) if D is None else check_orientation(G, [tuple(a) for a in D])
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{path}.orientation: {exc}") from None
    gains = obj.get("gains")
    if gains is None:
        gains = [0] * len(G)
    if len(gains) != len(G):
        raise ParseError(f"{path}.gains: expected {len(G)} entries")
    gains = [_rational(g, f"{path}.gains[{i}]") for i, g in enumerate(gains)]
    return G, D, gains


def graph_to_json(G, D=None, gains=None):
    out = {"vertices": G.n, "edges": [list(e) for e in G.edges]}
    if D is not None:
        out["orientation"] = [list(a) for a in D]
    if gains is not None:
        out["gains"] = [format_rational(g) for g in gains]
    return out
