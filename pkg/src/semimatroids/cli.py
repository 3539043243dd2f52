"""Command-line front end: read one JSON object, compute, print one JSON object.

Exit codes: 0 when every check passes, 1 when a check fails, 2 for unreadable
or rejected input, 3 when a size cap or enumeration budget is exceeded.
"""

from __future__ import annotations

import argparse
import sys
import warnings

from . import arrangement as arr
from . import graph as gr
from . import serialize as ser
from .assigning import (
    compatible_family,
    compatible_polynomials,
    induced_assigning,
    is_semimatroid,
    to_semimatroid,
)
from .convolution import all_convolutions
from .linalg import GF, QQ, format_rational
from .matroid import CapError
from .poly import (
    UniPoly,
    eval_uni,
    poly_to_json,
    shape_report,
    specialize_bi,
    whitney_sequence,
)
from .semimatroid import (
    CHI_ROUTES,
    TUTTE_ROUTES,
    broken_circuit_analysis,
    characteristic,
    flats,
    mobius_closed_form,
    rank_extension_matroid,
    tutte,
    verify_axioms,
)
from .semimatroid import Semimatroid

EXIT_OK, EXIT_CHECK, EXIT_PARSE, EXIT_CAP = 0, 1, 2, 3


class Checks:
    def __init__(self, enabled=True):
        self.enabled = enabled
        self.items = []

    def add(self, name, fn):
        if not self.enabled:
            return
        try:
            ok = bool(fn())
        except ArithmeticError as exc:
            self.items.append({"name": name, "pass": False, "detail": str(exc)})
            return
        self.items.append({"name": name, "pass": ok})

    @property
    def ok(self):
        return all(c["pass"] for c in self.items)


def _poly(p):
    out = {"terms": poly_to_json(p), "text": str(p)}
    if isinstance(p, UniPoly):
        out["coefficients"] = p.coefficients()
    return out


def _masks(xs):
    return [str(x) for x in xs]


def _chi_from_tutte(T, r):
    t = UniPoly.monomial(1)
    return specialize_bi(T, 1 - t, 0, r)


def _is_assigning(obj):
    return isinstance(obj, dict) and "assigning" in obj


# semimatroid verbs


def cmd_verify(obj, args, checks):
    ground, central, rank = ser.raw_triple_from_json(obj)
    rep = verify_axioms(ground, central, rank)
    return {"semimatroid": rep.ok, "failing_axiom": rep.first_failure, "axioms": rep.to_json()}


def _semimatroid_input(obj):
    if _is_assigning(obj):
        A = ser.assigning_from_json(obj)
        ok, failing, _ = is_semimatroid(A)
        if not ok:
            raise ser.ParseError(f"$: the compatible family is not a semimatroid ({failing} fails)")
        return to_semimatroid(A)
    return ser.semimatroid_from_json(obj)


def _chi_checks(S, checks, chi):
    routes = [r for r in CHI_ROUTES if r != "mobius" or not S.has_loop()]
    checks.add("chi_routes_agree", lambda: all(characteristic(S, r) == chi for r in routes))
    checks.add("chi_from_tutte", lambda: _chi_from_tutte(tutte(S), S.r) == chi)
    if not S.has_loop():
        w = whitney_sequence(chi, S.r)
        checks.add("whitney_shape", lambda: shape_report(w).ok)

        def comparison():
            M = rank_extension_matroid(S)
            wm = whitney_sequence(characteristic(Semimatroid.from_matroid(M)), M.r)
            return all(a <= b for a, b in zip(wm.values, w.values))

        checks.add("rank_extension_comparison", comparison)


def cmd_chi(obj, args, checks):
    S = _semimatroid_input(obj)
    chi = characteristic(S, args.route)
    _chi_checks(S, checks, chi)
    out = _poly(chi)
    out.update({"rank": S.r, "route": args.route})
    if not S.has_loop() or chi.is_zero():
        out["whitney"] = list(whitney_sequence(chi, S.r).values)
    return out


def cmd_tutte(obj, args, checks):
    S = _semimatroid_input(obj)
    T = tutte(S, args.route)
    checks.add("tutte_routes_agree", lambda: all(tutte(S, r) == T for r in TUTTE_ROUTES))
    checks.add("chi_from_tutte", lambda: _chi_from_tutte(T, S.r) == characteristic(S))
    out = _poly(T)
    out.update({"rank": S.r, "route": args.route})
    return out


def cmd_nbc(obj, args, checks):
    S = _semimatroid_input(obj)
    ordering = None
    if args.ordering:
        try:
            ordering = [int(x) for x in args.ordering.split(",")]
        except ValueError:
            raise ser.ParseError(f"--ordering: {args.ordering!r} is not a comma-separated list") from None
    bc = broken_circuit_analysis(S, ordering)
    chi = characteristic(S)
    checks.add("nbc_equals_whitney", lambda: bc.nbc_counts == whitney_sequence(chi, S.r))
    checks.add(
        "nbc_sum_equals_chi_at_minus_one",
        lambda: sum(bc.nbc_counts.values) == (-1) ** S.r * eval_uni(chi, -1),
    )
    return {
        "ordering": list(bc.ordering),
        "broken_circuits": _masks(bc.broken_circuits),
        "nbc_counts": list(bc.nbc_counts.values),
        "nbc_sets": _masks(bc.nbc_sets),
    }


def cmd_convolution(obj, args, checks):
    S = _semimatroid_input(obj)
    reports = all_convolutions(S)
    for rep in reports:
        checks.add(rep.variant, lambda rep=rep: rep.equal)
    tut = [r for r in reports if r.variant != "char_ts"]
    checks.add("tutte_variants_agree", lambda: len({r.rhs for r in tut}) == 1)
    return {"reports": [r.to_json() for r in reports]}


def cmd_assign(obj, args, checks):
    if _is_assigning(obj):
        A = ser.assigning_from_json(obj)
        ok, failing, rep = is_semimatroid(A)
        chi, T = compatible_polynomials(A)
        out = {
            "compatible_family": _masks(compatible_family(A)),
            "semimatroid": ok,
            "failing_axiom": failing,
            "chi": _poly(chi),
            "tutte": _poly(T),
        }
        if ok:
            S = to_semimatroid(A)
            checks.add("round_trip", lambda: set(compatible_family(induced_assigning(S))) == S.central)
            checks.add("polynomials_agree", lambda: (characteristic(S), tutte(S)) == (chi, T))
        return out
    S = ser.semimatroid_from_json(obj)
    A = induced_assigning(S)
    checks.add("round_trip", lambda: set(compatible_family(A)) == S.central)
    checks.add(
        "circuits_are_zero_labels",
        lambda: S.circuits() == A.compatible_circuits(),
    )
    checks.add(
        "polynomials_agree",
        lambda: compatible_polynomials(A) == (characteristic(S), tutte(S)),
    )
    return {"induced_assigning": ser.assigning_to_json(A)}


# arrangements


def _arr_chi_checks(A, checks, polys):
    S = arr.semimatroid_of(A)
    n, rA = A.dim, arr.normal_rank(A)
    checks.add("chi_sum_equals_mobius", lambda: polys.agree)
    checks.add("rank_equals_normal_rank", lambda: rA == S.r)
    checks.add("semimatroid_arrangement", lambda: polys.chi == characteristic(S).shift(n - S.r))
    if A.field == QQ:
        A_o = A.centralization()

        def via_matroid():
            alpha = arr.assigning_of_translation(A_o, A.offsets)
            return polys.chi == compatible_polynomials(alpha)[0].shift(n - rA)

        checks.add("characteristic_arrangement_matroid", via_matroid)


def cmd_arr_chi(obj, args, checks):
    A = ser.arrangement_from_json(obj)
    polys = arr.arrangement_polynomials(A)
    _arr_chi_checks(A, checks, polys)
    out = _poly(polys.chi)
    out["dim"] = A.dim
    return out


def cmd_arr_tutte(obj, args, checks):
    A = ser.arrangement_from_json(obj)
    T = arr.tutte_by_sum(A)
    lhs, central, flat = arr.hcf_sides(A)
    checks.add("hcf_central_sets", lambda: central == T)
    checks.add("hcf_flats", lambda: flat == T)
    checks.add("tutte_matches_semimatroid", lambda: tutte(arr.semimatroid_of(A)) == T)
    return _poly(T)


def _rat_list(v):
    return [format_rational(x) for x in v]


def cmd_arr_discriminantal(obj, args, checks):
    A = ser.arrangement_from_json(obj)
    A_o = A.centralization()
    cvs = arr.circuit_vectors(A_o)
    delta = arr.discriminantal(A_o)
    checks.add(
        "circuit_vectors_in_kernel",
        lambda: all(
            all(sum(c * h.normal[i] for c, h in zip(cv.coefficients, A_o.hyperplanes)) == 0 for i in range(A.dim))
            for cv in cvs
        ),
    )
    return {
        "circuit_vectors": [{"circuit": str(cv.circuit), "coefficients": _rat_list(cv.coefficients)} for cv in cvs],
        "discriminantal": delta.to_json(),
    }


def cmd_arr_classify(obj, args, checks):
    A = ser.arrangement_from_json(obj)
    if A.field != QQ:
        raise ser.ParseError("$.field: classification works over Q only")
    A_o = A.centralization()
    delta = arr.discriminantal(A_o)
    classes = arr.classify_translations(A_o)
    checks.add("distinct_semimatroids", lambda: len({c.semimatroid for c in classes}) == len(classes))
    checks.add("distinct_assignings", lambda: len({c.assigning for c in classes}) == len(classes))
    checks.add(
        "representatives_in_strata",
        lambda: all(arr.stratum_of(delta, c.representative) == c.flat for c in classes),
    )
    return {
        "count": len(classes),
        "classes": [
            {
                "flat": str(c.flat),
                "representative": _rat_list(c.representative),
                "semimatroid": ser.semimatroid_to_json(c.semimatroid),
                "assigning": {str(C): v for C, v in sorted(c.assigning.labels.items())},
            }
            for c in classes
        ],
    }


def _reduce(A, q):
    if A.field == QQ:
        if q is None:
            raise ser.ParseError("--q: a prime is needed to count points of a rational arrangement")
        return A.reduce_mod(q)
    if q is not None and q != A.field.p:
        raise ser.ParseError(f"--q: arrangement is over F_{A.field.p}")
    return A


def cmd_arr_count(obj, args, checks):
    A = ser.arrangement_from_json(obj)
    Aq = _reduce(A, args.q)
    q = Aq.field.p
    count = arr.count_points_finite_field(Aq)
    chi_q = arr.characteristic_by_sum(Aq)
    checks.add("count_equals_chi_at_q", lambda: count == eval_uni(chi_q, q))
    out = {"q": q, "count": count, "chi": _poly(chi_q)}
    if A.field == QQ:
        out["reduction_changes_semimatroid"] = arr.semimatroid_of(A) != arr.semimatroid_of(Aq)
    return out


# graphs


def _graph(obj):
    return ser.graph_from_json(obj)


def cmd_graph_admissible(obj, args, checks):
    G, D, gains = _graph(obj)
    GA = gr.admissible_assigning(G, D, gains)
    return {"cycles": _masks(gr.cycles(G)), "labels": {str(C): v for C, v in sorted(GA.labels.items())}}


def _graph_chi_checks(G, D, gains, GA, chi, checks, field=QQ):
    A_lift = gr.lift_assigning(GA)

    checks.add(
        "semimatroid_graph",
        lambda: chi == compatible_polynomials(A_lift)[0].shift(G.components()),
    )
    checks.add(
        "arrangement_equals_chromatic",
        lambda: chi == arr.characteristic_by_sum(gr.graphic_arrangements(G, D, gains, field)[1]),
    )

    def mobius_sum():
        S = to_semimatroid(A_lift)
        if S.has_loop():
            return chi.is_zero()
        total = UniPoly()
        for X in flats(S):
            total = total + UniPoly.monomial(G.n - S.rank(X), mobius_closed_form(S, 0, X))
        return total == chi

    checks.add("mobius_sum", mobius_sum)


def cmd_graph_chromatic(obj, args, checks):
    G, D, gains = _graph(obj)
    GA = gr.admissible_assigning(G, D, gains)
    chi = gr.compatible_chromatic(GA)
    _graph_chi_checks(G, D, gains, GA, chi, checks)
    out = _poly(chi)
    out["labels"] = {str(C): v for C, v in sorted(GA.labels.items())}
    return out


def cmd_graph_count(obj, args, checks):
    G, D, gains = _graph(obj)
    if args.q is None:
        raise ser.ParseError("--q: a prime is required")
    q = args.q
    F = GF(q)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        count = gr.count_colorings(G, D, gains, q)
    GA = gr.admissible_assigning(G, D, gains, F)
    chi = gr.compatible_chromatic(GA)
    checks.add("count_equals_chi_at_q", lambda: count == eval_uni(chi, q))
    _, Aq = gr.graphic_arrangements(G, D, gains, F)
    checks.add("count_equals_point_count", lambda: count == arr.count_points_finite_field(Aq))
    return {"q": q, "count": count, "chi": _poly(chi), "warnings": [str(w.message) for w in caught]}


def cmd_corpus_gen(args):
    from .corpus import corpus_gen

    paths = corpus_gen(args.seed, args.count, args.out)
    return {"files": [str(p) for p in paths]}


VERBS = {
    "verify": cmd_verify,
    "chi": cmd_chi,
    "tutte": cmd_tutte,
    "nbc": cmd_nbc,
    "convolution": cmd_convolution,
    "assign": cmd_assign,
    "arr-chi": cmd_arr_chi,
    "arr-tutte": cmd_arr_tutte,
    "arr-classify": cmd_arr_classify,
    "arr-count": cmd_arr_count,
    "arr-discriminantal": cmd_arr_discriminantal,
    "graph-chromatic": cmd_graph_chromatic,
    "graph-count": cmd_graph_count,
    "graph-admissible": cmd_graph_admissible,
}

GROUPED = {
    "arr": {
        "chi": "arr-chi",
        "tutte": "arr-tutte",
        "classify": "arr-classify",
        "count-points": "arr-count",
        "discriminantal": "arr-discriminantal",
    },
    "graph": {
        "chromatic": "graph-chromatic",
        "count-colorings": "graph-count",
        "admissible": "graph-admissible",
    },
}


def _prime(text):
    try:
        q = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    try:
        GF(q)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return q


def _add_common(p, verb):
    p.add_argument("input", help="JSON file, or - for standard input")
    p.add_argument("--no-check", action="store_true", help="skip the identity checks")
    if verb in ("chi",):
        p.add_argument("--route", choices=sorted(CHI_ROUTES), default="definition")
    if verb in ("tutte",):
        p.add_argument("--route", choices=sorted(TUTTE_ROUTES), default="definition")
    if verb == "nbc":
        p.add_argument("--ordering", help="comma-separated 0-based element order")
    if verb in ("arr-count", "graph-count"):
        p.add_argument("--q", type=_prime, help="prime field size")


def build_parser():
    parser = argparse.ArgumentParser(prog="semimatroids", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in VERBS:
        _add_common(sub.add_parser(verb), verb)
    for group, table in GROUPED.items():
        gp = sub.add_parser(group)
        gsub = gp.add_subparsers(dest="subverb", required=True)
        for name, verb in table.items():
            _add_common(gsub.add_parser(name), verb)
    cg = sub.add_parser("corpus-gen")
    cg.add_argument("--seed", type=int, default=0)
    cg.add_argument("--count", type=int, default=10)
    cg.add_argument("--out", default="corpus")
    return parser


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read(), "<stdin>"
        with open(path, encoding="utf-8") as fh:
            return fh.read(), path
    except OSError as exc:
        raise ser.ParseError(f"{path}: {exc.strerror}") from None


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    verb = args.verb
    if verb in GROUPED:
        verb = GROUPED[verb][args.subverb]
    try:
        if verb == "corpus-gen":
            stdout.write(ser.dumps(cmd_corpus_gen(args)))
            return EXIT_OK
        text, source = _read(args.input)
        obj = ser.loads(text, source)
        checks = Checks(not args.no_check)
        payload = VERBS[verb](obj, args, checks)
    except CapError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    except ValueError as exc:
        # ParseError and library precondition failures
        stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except ArithmeticError as exc:
        stderr.write(f"check failed: {exc}\n")
        return EXIT_CHECK
    payload["verb"] = verb
    payload["checks"] = checks.items
    payload["ok"] = checks.ok
    stdout.write(ser.dumps(payload))
    return EXIT_OK if checks.ok else EXIT_CHECK


def main():
    sys.exit(run())
