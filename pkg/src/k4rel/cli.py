"""Command-line front end: table and figure data files, plus the verification run.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.  All outputs are
byte-stable for fixed inputs: integers everywhere except the plotdata ratios,
"." decimals, "\\n" line endings, no timestamps.
"""

from __future__ import annotations

import argparse
import sys

from . import closed_form as cf
from . import cube_graph as cg
from . import oracle as oc


def _write(out_path: str, text: str) -> None:
    if out_path == "-":
        sys.stdout.write(text)
    else:
        with open(out_path, "w", newline="\n") as fh:
            fh.write(text)


def render_profile(n: int) -> str:
    profile = cf.full_profile(n)
    lines = ["h,ex,xi,lambda"]
    for h in range(1, (1 << (n - 1)) + 1):
        lines.append(f"{h},{profile.ex[h]},{profile.xi[h]},{profile.lam[h]}")
    return "\n".join(lines) + "\n"


def render_intervals(n: int) -> str:
    lines = ["t,g_t,lower,upper,value"]
    for iv in cf.concentration_intervals(n):
        lines.append(f"{iv.t},{iv.length},{iv.lower},{iv.upper},{iv.value}")
    return "\n".join(lines) + "\n"


def render_conditional(n: int) -> str:
    lines = ["l,value"]
    for l in range(2, n):
        lines.append(f"{l},{(n - l) << l}")
    lines.append(f"cyclic,{cf.cyclic_lambda(n)}")
    # l = 0 and 1 supplements for the degree/size patterns
    lines.append(f"remark_l0,{n + 1}")
    lines.append(f"remark_l1,{2 * n}")
    return "\n".join(lines) + "\n"


def render_plotdata(n_list: list[int]) -> str:
    lines = [
        "# h_norm = h / 2^(n-1); xi_norm and lambda_norm divided by max xi over 1..2^(n-1)",
        "n\th_norm\txi_norm\tlambda_norm",
    ]
    for n in n_list:
        profile = cf.full_profile(n)
        half = 1 << (n - 1)
        xi_max = max(profile.xi[1:])
        for h in range(1, half + 1):
            lines.append(
                f"{n}\t{h / half:.6g}\t{profile.xi[h] / xi_max:.6g}"
                f"\t{profile.lam[h] / xi_max:.6g}"
            )
    return "\n".join(lines) + "\n"


def _build_graph(n: int, kind: str, seed: int, k: int | None) -> cg.CubeGraph:
    if kind == "canonical":
        return cg.canonical_member(n)
    if kind == "random":
        return cg.build_k4cube(cg.random_matching_tree(n, seed))
    if kind == "hypercube":
        return cg.build_hypercube(n)
    if kind == "enhanced":
        return cg.build_enhanced(n, k if k is not None else n - 1)
    raise ValueError(f"unknown kind {kind!r}")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="k4rel",
        description="Reliability parameters of generalized K4-hypercubes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", help="CSV of ex/xi/lambda for one dimension")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default="-")

    p = sub.add_parser("lambda", help="print lambda_h for one (h, n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--out", default="-")

    p = sub.add_parser("intervals", help="CSV of the concentration intervals")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default="-")

    p = sub.add_parser("conditional", help="CSV of the conditional edge-connectivities")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default="-")

    p = sub.add_parser("cyclic", help="print the cyclic edge-connectivity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default="-")

    p = sub.add_parser("bitmap", help="P1 bitmap of one adjacency matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("canonical", "random", "hypercube", "enhanced"),
                   default="canonical")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--out", default="-")

    p = sub.add_parser("plotdata", help="TSV of normalized xi/lambda curves")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--out", default="-")

    p = sub.add_parser("verify", help="run the brute-force verification suite")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seeds", type=int, default=5, help="number of random members")
    p.add_argument("--budget-nodes", type=int, default=oc.DEFAULT_BUDGET.node_limit)
    p.add_argument("--out", default="-")

    args = parser.parse_args(argv)
    try:
        if args.command == "profile":
            if not 3 <= args.n <= 24:
                raise ValueError(f"profile needs 3 <= n <= 24, got {args.n}")
            _write(args.out, render_profile(args.n))
        elif args.command == "lambda":
            _write(args.out, f"{cf.lambda_fast(args.h, args.n)}\n")
        elif args.command == "intervals":
            _write(args.out, render_intervals(args.n))
        elif args.command == "conditional":
            _write(args.out, render_conditional(args.n))
        elif args.command == "cyclic":
            _write(args.out, f"{cf.cyclic_lambda(args.n)}\n")
        elif args.command == "bitmap":
            if not 2 <= args.n <= 12:
                raise ValueError(f"bitmap needs 2 <= n <= 12, got {args.n}")
            graph = _build_graph(args.n, args.kind, args.seed, args.k)
            _write(args.out, cg.bitmap_pbm(graph))
        elif args.command == "plotdata":
            for n in args.n:
                if not 3 <= n <= 24:
                    raise ValueError(f"plotdata needs 3 <= n <= 24, got {n}")
            _write(args.out, render_plotdata(args.n))
        elif args.command == "verify":
            budget = oc.OracleBudget(node_limit=args.budget_nodes)
            report = oc.verify_member(args.n, list(range(1, args.seeds + 1)), budget)
            _write(args.out, report.to_text())
            if not report.passed:
                return 1
    except (ValueError, OSError) as exc:
        print(f"k4rel: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
