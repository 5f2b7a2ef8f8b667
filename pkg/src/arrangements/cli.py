"""Command-line front end.

Commands read an arrangement document (JSON) where one is needed, run the
requested computation, and print a text or JSON report.  Output is fully
deterministic for identical inputs.  Exit status: 0 on success, 1 on input
errors, 2 when a size or face budget is exceeded, 3 when `compare` finds
the two pipelines disagreeing.

The optional environment variable ARRANGEMENTS_THREADS sizes the worker
pool for independent per-node computations; output order never changes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arrangement import (InputError, SizeLimitError, complexify,
                          complexified_double, parse_arrangement, realify)
from .complexes import (BudgetExceeded, DEFAULT_FACE_BUDGET,
                        connected_graph_pair, k_hypergraph_pair, order_complex)
from .gm import gm_report, wedge_summary
from .homology import euler_characteristic, pair_homology
from .matroid import check_matroid_axioms, matroid_from_arrangement, mnev_check
from .orlik_solomon import (cone_arrangement, decone_poincare,
                            os_poincare_polynomial)
from .poset import build_intersection_poset, is_normal_crossings, is_generic
from .rationals import QI, QQ
from .regions import enumerate_regions
from .salvetti import imaginary_wedge_census, salvetti_census
from .twisted import (monodromy_from_tokens, one_dim_twisted_complex,
                      resonance_generic, twisted_dim_normal_crossing)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2
EXIT_MISMATCH = 3


class _Mismatch(Exception):
    pass


def _load(path):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_arrangement(text)


def _emit(args, payload, text_lines):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _maybe_complexify(arr, args):
    if getattr(args, "complexify", False):
        if arr.field is not QQ:
            raise InputError("--complexify applies to real (field Q) documents")
        return complexify(arr)
    return arr


def _cmd_poset(args):
    arr = _maybe_complexify(_load(args.document), args)
    poset = build_intersection_poset(arr)
    nodes = []
    lines = [f"poset of {arr.m} planes in {arr.field.tag}^{arr.ambient_dim}: "
             f"{len(poset)} nodes"]
    for node, mu in zip(poset.nodes, poset.mobius):
        gens = ",".join(arr.labels[i] for i in sorted(node.generators))
        nodes.append({"index": node.index, "dim": node.dim, "codim": node.codim,
                      "generators": [i + 1 for i in sorted(node.generators)],
                      "mobius": mu})
        lines.append(f"  node {node.index}: dim {node.dim}, codim {node.codim}, "
                     f"mu {mu}, planes {{{gens}}}")
    order = sorted([i, j] for (i, j) in poset.less)
    _emit(args, {"ambient_dim": arr.ambient_dim, "field": arr.field.tag,
                 "nodes": nodes, "strict_order": order}, lines)
    return EXIT_OK


def _cmd_betti(args):
    arr = _maybe_complexify(_load(args.document), args)
    report = gm_report(arr, budget=args.max_faces)
    if args.reduced:
        betti = report.reduced_betti()
        label = "reduced betti"
    else:
        betti = report.unreduced_betti()
        label = "betti"
    _emit(args, {"ambient_dim": report.ambient_dim, label.replace(" ", "_"): betti},
          [" ".join(str(b) for b in betti)])
    return EXIT_OK


def _cmd_gm(args):
    arr = _maybe_complexify(_load(args.document), args)
    report = gm_report(arr, budget=args.max_faces)
    lines = [f"complement cohomology over {report.ambient_dim} real dimensions "
             f"(degree 0 reduced)"]
    for d in report.degrees():
        lines.append(f"  degree {d}: rank {report.rank(d)}"
                     + (f", torsion {list(report.torsion_at(d))}"
                        if report.torsion_at(d) else ""))
    for c in report.contributions:
        gens = ",".join(str(g) for g in c.generators)
        lines.append(f"    deg {c.degree} <- node {c.node_index} "
                     f"(planes {{{gens}}}, dim {c.node_dim}, filtration "
                     f"{c.filtration}): pair degree {c.pair_degree}, "
                     f"rank {c.rank}")
    _emit(args, report.to_json(), lines)
    return EXIT_OK


def _cmd_os(args):
    arr = _load(args.document)
    if arr.field is QQ:
        arr = complexify(arr)
    coned = False
    if not arr.is_central():
        arr = cone_arrangement(arr)
        coned = True
    coeffs = os_poincare_polynomial(arr)
    payload = {"coned": coned, "graded_dimensions": coeffs}
    lines = []
    if coned:
        deconed = decone_poincare(coeffs)
        payload["deconed_dimensions"] = deconed
        lines.append("affine input was coned to a central arrangement")
        lines.append("coned dims:   " + " ".join(str(c) for c in coeffs))
        lines.append("deconed dims: " + " ".join(str(c) for c in deconed))
    else:
        lines.append(" ".join(str(c) for c in coeffs))
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_regions(args):
    arr = _load(args.document)
    regions = enumerate_regions(arr)
    bounded = sum(1 for r in regions if r.bounded)
    lines = [f"{len(regions)} regions, {bounded} bounded"]
    for r in regions:
        lines.append(f"  {r.sign_string()}  witness=("
                     + ", ".join(QQ.to_json(x) for x in r.witness) + ")"
                     + ("  bounded" if r.bounded else ""))
    _emit(args, {"count": len(regions), "bounded": bounded,
                 "regions": [r.to_json() for r in regions]}, lines)
    return EXIT_OK


def _cmd_salvetti(args):
    arr = _load(args.document)
    census = salvetti_census(arr)
    lines = [f"sign-sequence cells of the complexified complement "
             f"(plus one added point): {census.total_cells()} cells"]
    for d, c in sorted(census.counts.items(), reverse=True):
        lines.append(f"  dimension {d}: {c}")
    lines.append(f"euler characteristic of the compactification: "
                 f"{census.euler_characteristic()}")
    _emit(args, census.to_json(), lines)
    return EXIT_OK


def _cmd_wedges(args):
    arr = _load(args.document)
    if args.imaginary:
        census = imaginary_wedge_census(arr)
        lines = ["imaginary wedge cells (normal crossings)"]
        for c in census.cells:
            gens = ",".join(str(g) for g in c.generators) or "-"
            lines.append(f"  planes {{{gens}}}: dim {c.dim}")
        ranks = census.borel_moore_ranks()
        lines.append("borel-moore ranks: " +
                      " ".join(f"{d}:{r}" for d, r in sorted(ranks.items())))
        _emit(args, census.to_json(), lines)
        return EXIT_OK
    arr2 = _maybe_complexify(arr, args)
    summary = wedge_summary(arr2, budget=args.max_faces)
    lines = ["wedge decomposition of the compactified support"]
    for s in summary.summands:
        gens = ",".join(str(g) for g in s.generators)
        degs = s.shifted_degrees()
        if degs:
            parts = ", ".join(f"H_{d} rank {r}" for d, (r, t) in sorted(degs.items()))
            lines.append(f"  node {{{gens}}} (dim {s.node_dim}): {parts}")
    lines.append("borel-moore ranks: " +
                  " ".join(f"{d}:{summary.borel_moore_rank(d)}"
                           for d in summary.degrees()))
    _emit(args, summary.to_json(), lines)
    return EXIT_OK


def _cmd_graph_complex(args):
    n, k = args.n, args.k
    pair = k_hypergraph_pair(n, k) if k != 2 else connected_graph_pair(n)
    summary = pair_homology(pair, budget=args.max_faces)
    chi = euler_characteristic(pair, budget=args.max_faces)
    lines = [f"connected {k}-hypergraph pair on {n} nodes"]
    for d in summary.degrees():
        tors = summary.torsion_at(d)
        lines.append(f"  degree {d}: rank {summary.rank(d)}"
                     + (f", torsion {list(tors)}" if tors else ""))
    lines.append(f"relative euler characteristic: {chi}")
    _emit(args, {"n": n, "k": k, "homology": summary.to_json(),
                 "euler_characteristic": chi}, lines)
    return EXIT_OK


def _cmd_twisted(args):
    if not args.tau:
        raise InputError("twisted needs --tau with one value per hyperplane "
                         "(or 'generic')")
    arr = _load(args.document)
    md = monodromy_from_tokens(args.tau.split(","))
    if md.m != arr.m:
        raise InputError(f"--tau lists {md.m} values for {arr.m} hyperplanes")
    payload = {"monodromy": md.to_json()}
    lines = []
    generic = is_generic(arr)
    payload["generic_arrangement"] = generic
    if generic:
        pred = resonance_generic(md, arr.ambient_dim)
        payload["generic_prediction"] = pred.to_json()
        lines.append(f"generic: concentrated degree {pred.concentrated_degree}, "
                     f"dimension {pred.dimension}, bijective "
                     f"{pred.canonical_map_bijective} (applicable {pred.applicable})")
    if arr.field is QQ:
        pred = twisted_dim_normal_crossing(arr, md)
        payload["normal_crossing_prediction"] = pred.to_json()
        lines.append(f"normal crossing: dimension {pred.dimension} in degree "
                     f"{pred.concentrated_degree} (applicable {pred.applicable}: "
                     f"{pred.reason})")
    if arr.ambient_dim == 1 and arr.field is QQ:
        points = [p.equations.rows[0][-1] / p.equations.rows[0][0]
                  for p in arr.planes]
        summary = one_dim_twisted_complex(points, md)
        payload["one_dim_locally_finite"] = summary.to_json()
        lines.append("locally finite ranks: "
                     + " ".join(f"H{d}={summary.rank(d)}" for d in (1, 2)))
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_matroid(args):
    arr = _load(args.document)
    rf = matroid_from_arrangement(arr)
    violations = check_matroid_axioms(rf)
    lines = [f"rank function on {rf.m} elements"]
    lines.extend(f"  violation: {v}" for v in violations)
    if not violations:
        lines.append("  all rank axioms hold")
    _emit(args, {"rank_function": rf.to_json(), "violations": violations}, lines)
    return EXIT_OK


def _cmd_mnev(args):
    report = mnev_check(args.alpha)
    payload = report.to_json()
    if report.construction_failure:
        lines = [f"CONSTRUCTION FAILURE: {report.construction_failure}"]
    elif report.passed:
        lines = ["PASS: all incidence constraints hold"]
    else:
        failed = ", ".join(report.failed_constraints())
        lines = [f"FAIL at {failed}"]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_compare(args):
    arr = _load(args.document)
    if arr.field is QQ:
        arr = complexify(arr)
    arr.require_hyperplanes("pipeline comparison")
    working = arr if arr.is_central() else cone_arrangement(arr)
    os_dims = os_poincare_polynomial(working)
    report = gm_report(working, budget=args.max_faces)
    gm_dims = report.unreduced_betti()
    while len(gm_dims) < len(os_dims):
        gm_dims.append(0)
    while len(os_dims) < len(gm_dims):
        os_dims.append(0)
    match = os_dims == gm_dims and report.is_torsion_free()
    payload = {"os_dimensions": os_dims, "gm_dimensions": gm_dims,
               "torsion_free": report.is_torsion_free(), "match": match}
    lines = [f"algebra pipeline:  {' '.join(str(x) for x in os_dims)}",
             f"poset pipeline:    {' '.join(str(x) for x in gm_dims)}",
             "MATCH" if match else "MISMATCH"]
    _emit(args, payload, lines)
    if not match:
        raise _Mismatch
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="arrangements",
        description="exact invariants of affine plane arrangements")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, document=True, **extra):
        p = sub.add_parser(name, **extra)
        p.set_defaults(fn=fn)
        if document:
            p.add_argument("document", help="arrangement JSON file, or - for stdin")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--max-faces", type=int, default=DEFAULT_FACE_BUDGET,
                       help="face-count budget for homology computations")
        return p

    add("poset", _cmd_poset, help="intersection poset with Mobius values") \
        .add_argument("--complexify", action="store_true",
                      help="read a real document as a complex arrangement")
    p = add("betti", _cmd_betti, help="complement betti numbers (poset pipeline)")
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--complexify", action="store_true")
    add("gm", _cmd_gm, help="full complement-cohomology report") \
        .add_argument("--complexify", action="store_true")
    add("os", _cmd_os, help="graded dimensions of the exterior-algebra quotient")
    add("regions", _cmd_regions, help="regions of a real hyperplane arrangement")
    add("salvetti", _cmd_salvetti, help="sign-sequence cell census")
    p = add("wedges", _cmd_wedges, help="wedge decomposition of the support")
    p.add_argument("--imaginary", action="store_true",
                   help="imaginary wedge census (needs normal crossings)")
    p.add_argument("--complexify", action="store_true")
    p = add("graph-complex", _cmd_graph_complex, document=False,
            help="homology of connected graph/hypergraph pairs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p = add("twisted", _cmd_twisted, help="twisted homology dimension predictions")
    p.add_argument("--tau", help="comma-separated coefficients, e.g. -1,-1,i "
                                 "or generic,generic")
    add("matroid", _cmd_matroid, help="rank function and axiom check")
    p = add("mnev", _cmd_mnev, document=False,
            help="ten-line configuration demonstration")
    p.add_argument("--alpha", required=True,
                   help="Gaussian rational parameter, e.g. i or 2 or 1+i")
    add("compare", _cmd_compare, help="algebra vs poset pipeline on one input") \
        .add_argument("--self", action="store_true", dest="self_check",
                      help="kept for symmetry; compare always self-checks")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _Mismatch:
        print("ERROR pipeline-mismatch", file=sys.stderr)
        return EXIT_MISMATCH
    except (SizeLimitError, BudgetExceeded) as exc:
        print(f"ERROR budget-exceeded {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InputError as exc:
        print(f"ERROR bad-input {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
