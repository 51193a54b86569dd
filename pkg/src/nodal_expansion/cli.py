"""Command-line front end.

JSON results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 verification failure (theorem / corollary / proof-step violation),
2 usage or input error.  Floats are printed with 12 significant digits so
identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import certificate as ct
from . import expansion as xp
from . import fileio
from . import generators as gen
from .graph import GraphError, induced_subgraph, laplacian, sign_support
from .spectral import eigendecompose, select_eigenpair, spectral_gap_c

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def fmt(x: float) -> str:
    return f"{float(x):.12g}"


def _round_floats(obj):
    """Normalize every float to 12 significant digits for stable output."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return float(fmt(obj))
    if isinstance(obj, (np.floating,)):
        return float(fmt(float(obj)))
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def emit_json(obj) -> None:
    print(json.dumps(_round_floats(obj), indent=2))


def _load_weights(args, g):
    if getattr(args, "weights", None):
        return fileio.read_weights(args.weights, g.n)
    d = eigendecompose(laplacian(g))
    sel = select_eigenpair(d, args.eigvec)
    return sel.y * sel.y


def cmd_spectrum(args) -> int:
    g = fileio.read_edge_list(args.file)
    d = eigendecompose(laplacian(g))
    print(",".join(fmt(v) for v in d.values))
    return EXIT_OK


def cmd_analyze(args) -> int:
    g = fileio.read_edge_list(args.file)
    report = ct.verify_theorem1(g, args.k, mode=args.mode, budget=args.budget)
    emit_json(report.as_dict())
    return EXIT_OK if report.theorem_holds else EXIT_CHECK_FAILED


def cmd_expander_check(args) -> int:
    g = fileio.read_edge_list(args.file)
    w = _load_weights(args, g)
    v = xp.is_expander(g, w, args.c, mode=args.mode, budget=args.budget)
    emit_json(
        {
            "is_expander": bool(v.is_expander),
            "c": args.c,
            "mode": v.mode,
            "min_phi": None if v.min_phi is None else float(v.min_phi),
            "witness": None if v.witness is None else list(v.witness),
        }
    )
    return EXIT_OK


def cmd_partition(args) -> int:
    g = fileio.read_edge_list(args.file)
    w = _load_weights(args, g)
    cert = xp.find_partition(g, w, args.k, args.c, mode=args.mode, budget=args.budget)
    if cert is None:
        emit_json({"found": False, "k": args.k, "c": args.c, "mode": args.mode})
    else:
        emit_json(
            {
                "found": True,
                "k": args.k,
                "c": args.c,
                "mode": args.mode,
                "classes": [list(cls) for cls in cert.classes],
                "phis": [float(p) for p in cert.phis],
                "valid": bool(cert.valid),
            }
        )
    return EXIT_OK


def cmd_verify_proof(args) -> int:
    g = fileio.read_edge_list(args.file)
    pos = fileio.read_partition(args.pos)
    neg = fileio.read_partition(args.neg)
    p = ct.build_proof_objects(g, args.k, pos, neg)
    d = eigendecompose(laplacian(g))
    checks = [
        ct.check_B_sign_pattern(p),
        ct.check_Bz_zero(p),
        ct.check_interlacing(p, d),
    ]
    if p.a + p.b >= 2:
        ct.build_C(p)
        phis = ct.class_expansions(g, p.w, p)
        checks.append(ct.check_C_diagonal(p, phis))
        checks.append(ct.check_CminusB_psd(p))
        if p.c is not None and all(v is None or v < p.c for v in phis):
            checks.append(ct.check_lambda_max_C(p, phis))
    if p.a + p.b == args.k + 1:
        checks.append(ct.verify_prop_sum(g, args.k, pos, neg))
    emit_json({"k": args.k, "a": p.a, "b": p.b, "checks": [c.as_dict() for c in checks]})
    return EXIT_OK if all(c.passed for c in checks) else EXIT_CHECK_FAILED


def cmd_gen(args) -> int:
    family = args.family.replace("-", "_")
    params = [int(x) if float(x) == int(float(x)) else float(x) for x in args.params]
    if family == "path":
        g = gen.gen_path(int(params[0]))
    elif family == "cycle":
        g = gen.gen_cycle(int(params[0]))
    elif family == "complete":
        g = gen.gen_complete(int(params[0]))
    elif family == "gnp":
        g = gen.gen_gnp(int(params[0]), float(params[1]), args.seed)
    elif family == "random_regular":
        g = gen.gen_random_regular(int(params[0]), int(params[1]), args.seed)
    elif family == "expander_path_expander":
        path_len = int(params[2]) if len(params) > 2 else None
        g = gen.gen_expander_path_expander(
            int(params[0]), int(params[1]), path_len, args.seed
        )
    else:
        raise gen.GenerationError(f"unknown family {args.family!r}")
    text = fileio.format_edge_list(g)
    if args.output:
        with open(args.output, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_demo_counterexample(args) -> int:
    g = gen.gen_expander_path_expander(args.n_block, args.d, args.path_len, args.seed)
    d = eigendecompose(laplacian(g))
    sel = select_eigenpair(d, 2)
    y = sel.y
    w = y * y
    c = spectral_gap_c(d, 2)
    supp = sign_support(y)
    sub = induced_subgraph(g, supp.positive)
    w_sub = np.array([w[p] for p in sub.to_parent])
    weighted = xp.is_expander(sub.graph, w_sub, c, mode="exact")
    ones = np.ones(sub.graph.n)
    unweighted = xp.is_expander(sub.graph, ones, c, mode="exact")
    emit_json(
        {
            "n": g.n,
            "m": g.m,
            "lambda_2": float(d.values[1]),
            "lambda_3": float(d.values[2]),
            "c": float(c),
            "gap_ordering_holds": bool(d.values[1] < d.values[2] - d.values[1]),
            "positive_support": list(supp.positive),
            "weighted": {
                "min_phi": float(weighted.min_phi),
                "is_expander": bool(weighted.is_expander),
            },
            "unweighted": {
                "min_phi": float(unweighted.min_phi),
                "is_expander": bool(unweighted.is_expander),
                "witness": None
                if unweighted.witness is None
                else sorted(sub.to_parent[i] for i in unweighted.witness),
            },
        }
    )
    return EXIT_OK


def cmd_batch_verify(args) -> int:
    violations = 0
    for n in range(2, args.max_n + 1):
        if n <= 6:
            graphs = gen.enumerate_connected_graphs(n)
        else:
            graphs = gen.sample_connected_graphs(n, args.sample, args.seed)
        tested = 0
        for g in graphs:
            for k in range(2, n):
                report = ct.verify_theorem1(g, k, mode="exact")
                if report.degenerate_gap_flag:
                    continue
                tested += 1
                if not report.theorem_holds:
                    violations += 1
                    print(
                        f"VIOLATION n={n} k={k} edges={list(g.edges)}",
                        file=sys.stderr,
                    )
        print(f"n={n}: {tested} instances verified")
    print(f"violations: {violations}")
    return EXIT_OK if violations == 0 else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="nodal-expansion",
        description="Weighted expansion of Laplacian eigenvector supports, "
        "with mechanical theorem verification.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_mode(p):
        p.add_argument("--mode", choices=["exact", "heuristic"], default="exact")
        p.add_argument("--budget", type=int, default=xp.DEFAULT_BUDGET)

    p = sub.add_parser("spectrum", help="print Laplacian eigenvalues as CSV")
    p.add_argument("file")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("analyze", help="verify the main theorem for (graph, k)")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    add_mode(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("expander-check", help="c-expander verdict under weights")
    p.add_argument("file")
    p.add_argument("--c", type=float, required=True)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--eigvec", type=int, help="use squared k-th eigenvector")
    grp.add_argument("--weights", help="weights file")
    add_mode(p)
    p.set_defaults(func=cmd_expander_check)

    p = sub.add_parser("partition", help="search a (k,c)-partition")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--c", type=float, required=True)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--eigvec", type=int)
    grp.add_argument("--weights")
    add_mode(p)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("verify-proof", help="run all proof-step checks")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--pos", required=True, help="positive-side partition file")
    p.add_argument("--neg", required=True, help="negative-side partition file")
    p.set_defaults(func=cmd_verify_proof)

    p = sub.add_parser("gen", help="generate a graph family edge list")
    p.add_argument(
        "family",
        choices=[
            "path",
            "cycle",
            "complete",
            "gnp",
            "random-regular",
            "expander-path-expander",
        ],
    )
    p.add_argument("params", nargs="+")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser(
        "demo-counterexample",
        help="weighted vs unweighted expansion of the bridged-expanders family",
    )
    p.add_argument("--n-block", type=int, default=10)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--path-len", type=int, default=None)
    p.add_argument("--seed", type=int, default=7)
    p.set_defaults(func=cmd_demo_counterexample)

    p = sub.add_parser("batch-verify", help="exhaustive small-graph theorem sweep")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sample", type=int, default=50000)
    p.set_defaults(func=cmd_batch_verify)

    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (FileNotFoundError, fileio.ParseError, GraphError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
