"""Seeded random fixtures: arrangements, gain graphs, assignings, pointed matroids."""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

from .arrangement import Arrangement, semimatroid_of
from .assigning import AssigningMatroid, is_semimatroid, to_semimatroid
from .graph import MultiGraph, graphic_arrangements
from .matroid import Matroid
from .semimatroid import Semimatroid
from . import serialize

OFFSETS = (0, 0, 1, -1, 2, Fraction(1, 2))
GAINS = (0, 0, 1, -1, 2)


def random_normal(rng, n):
    while True:
        v = [rng.choice((-1, 0, 0, 1, 1, 2)) for _ in range(n)]
        if any(v):
            return v


def random_arrangement(rng, n=None, m=None, central=False):
    """Rational arrangement with n <= 4, |E| <= 6; normals are reused to force dependencies."""
    n = rng.randint(1, 4) if n is None else n
    m = rng.randint(1, 6) if m is None else m
    pool = [random_normal(rng, n) for _ in range(rng.randint(1, max(1, m - 1)))]
    hs = []
    for _ in range(m):
        if rng.random() < 0.5:
            normal = list(rng.choice(pool))
        else:
            normal = random_normal(rng, n)
        offset = 0 if central else rng.choice(OFFSETS)
        hs.append((normal, offset))
    return Arrangement(n, hs)


def random_graph(rng, max_vertices=5, max_edges=7, loops=True):
    n = rng.randint(1, max_vertices)
    m = rng.randint(1, max_edges)
    edges = []
    for _ in range(m):
        u = rng.randint(1, n)
        if n == 1 or (loops and rng.random() < 0.08):
            v = u
        else:
            v = rng.choice([x for x in range(1, n + 1) if x != u])
        edges.append((min(u, v), max(u, v)))
    G = MultiGraph(n, edges)
    D = [e if rng.random() < 0.5 else (e[1], e[0]) for e in G.edges]
    gains = [rng.choice(GAINS) for _ in G.edges]
    return G, D, gains


def random_matroid(rng, max_n=6):
    n = rng.randint(1, max_n)
    if rng.random() < 0.3:
        return Matroid.uniform(rng.randint(0, n), n)
    rows = rng.randint(1, 3)
    cols = [[rng.choice((-1, 0, 1, 1, 2)) for _ in range(rows)] for _ in range(n)]
    return Matroid.from_matrix(cols)


def random_assigning(rng, max_n=6):
    M = random_matroid(rng, max_n)
    return AssigningMatroid(M, {C: rng.randint(0, 1) for C in M.circuits()})


def random_pointed(rng, max_n=8):
    """``(N, p)`` with p not a loop of N."""
    while True:
        N = random_matroid(rng, max_n)
        cands = [e for e in N.elements if N.rank(1 << e) > 0]
        if cands:
            return N, rng.choice(cands)


def semimatroid_corpus(seed=0, count=200, max_ground=7):
    """At least `count` semimatroids from arrangements, assignings and pointed matroids."""
    rng = random.Random(seed)
    out = []
    seen = set()

    def add(S):
        S = S.relabel()
        if S.ground_size <= max_ground and S not in seen:
            seen.add(S)
            out.append(S)

    add(Semimatroid.empty())
    while len(out) < count:
        kind = rng.randrange(4)
        if kind == 0:
            add(semimatroid_of(random_arrangement(rng)))
        elif kind == 1:
            A = random_assigning(rng)
            if is_semimatroid(A)[0]:
                add(to_semimatroid(A))
        elif kind == 2:
            N, p = random_pointed(rng)
            add(Semimatroid.from_pointed_matroid(N, p))
        else:
            G, D, gains = random_graph(rng, max_edges=6)
            add(semimatroid_of(graphic_arrangements(G, D, gains)[1]))
    return out


def fixture(rng, kind=None):
    kind = kind or rng.choice(("arrangement", "graph", "assigning"))
    if kind == "arrangement":
        return {"kind": kind, "data": serialize.arrangement_to_json(random_arrangement(rng))}
    if kind == "graph":
        G, D, gains = random_graph(rng)
        return {"kind": kind, "data": serialize.graph_to_json(G, D, gains)}
    return {"kind": kind, "data": serialize.assigning_to_json(random_assigning(rng))}


def corpus_gen(seed, count, out_dir):
    """Write `count` fixture files; identical seeds give byte-identical files."""
    rng = random.Random(seed)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    kinds = ("arrangement", "graph", "assigning")
    for i in range(count):
        fx = fixture(rng, kinds[i % 3])
        fx["seed"] = seed
        fx["index"] = i
        path = out / f"fixture-{seed}-{i:04d}.json"
        path.write_text(serialize.dumps(fx), encoding="utf-8")
        paths.append(path)
    return paths
