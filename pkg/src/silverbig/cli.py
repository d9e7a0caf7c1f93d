"""Command-line interface.

Exit codes: 0 success, 1 the checked claim is negative (verification
failed, graph not silver, a screen fired), 2 usage or file errors,
3 search budget exhausted. SILVERBIG_BUDGET overrides default budgets.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

from . import big, decider, designs, files, independence, silver

OK, NEGATIVE, USAGE, BUDGET = 0, 1, 2, 3


def _budget(args, default: int) -> int:
    if getattr(args, "budget", None):
        return args.budget
    env = os.environ.get("SILVERBIG_BUDGET")
    return int(env) if env else default


def _make(args) -> int:
    family = args.family
    if family in ("sts-bose", "sts-skolem", "sts13-cyclic", "sts13-noncyclic"):
        variant = {
            "sts-bose": "bose",
            "sts-skolem": "skolem",
            "sts13-cyclic": "cyclic13",
            "sts13-noncyclic": "noncyclic13",
        }[family]
        v = args.v if args.v is not None else (13 if family.startswith("sts13") else None)
        if v is None:
            raise ValueError(f"--v is required for family {family}")
        design = designs.make_sts(v, variant)
    elif family == "kts":
        if args.v is None:
            raise ValueError("--v is required for family kts")
        design = designs.make_kts(args.v)
    elif family in ("ag", "pg"):
        if args.n is None:
            raise ValueError(f"--n is required for family {family}")
        design = (
            designs.make_affine_plane(args.n)
            if family == "ag"
            else designs.make_projective_plane(args.n)
        )
    else:
        raise ValueError(f"unknown family {family}")
    files.write_design(design, args.output)
    nclasses = len(design.resolution.classes) if design.resolution else 0
    print(
        f"wrote {args.output}: 2-({design.v},{design.k},{design.lam}), "
        f"b={design.b}, r={design.r}, classes={nclasses}"
    )
    return OK


def _verify(args) -> int:
    design = files.read_design(args.design)
    report = designs.verify_design(design)
    print(f"v={design.v} k={design.k} lambda={design.lam} b={report.b} r={report.r}")
    print(f"pair coverage histogram: {report.histogram}")
    if report.violations:
        print(f"{len(report.violations)} violating pairs, first 10:")
        for pair, count in report.violations[:10]:
            print(f"  pair {pair} covered {count} times")
    print("ok" if report.ok else "NOT a valid design")
    return OK if report.ok else NEGATIVE


def _big(args) -> int:
    design = files.read_design(args.design)
    g = big.build_big(design, args.i)
    files.write_graph(g, args.output)
    print(f"wrote {args.output}: {g.n} vertices, {g.edge_count()} edges")
    return OK


def _alpha(args) -> int:
    g = files.read_graph(args.graph)
    budget = _budget(args, independence.DEFAULT_SEARCH_BUDGET)
    mis, exact = independence.max_independent_set(g, budget)
    print(f"alpha = {mis.size} ({'exact' if exact else 'budget exhausted'})")
    print(f"alpha-set: {files.alpha_set_to_text(mis).strip()}")
    if not exact:
        return BUDGET
    if args.output:
        files.write_alpha_set(mis, args.output)
        print(f"wrote {args.output}")
    if args.enumerate:
        sets, complete = independence.enumerate_alpha_sets(g, mis.size, budget)
        for s in sets:
            print(" ".join(map(str, s.vertices)))
        print(f"{len(sets)} alpha-sets ({'complete' if complete else 'partial'})")
        if not complete:
            return BUDGET
    return OK


def _screen(args) -> int:
    design = files.read_design(args.design)
    budget = _budget(args, designs.DEFAULT_COVER_BUDGET)
    verdicts = []
    inconclusive = False
    if args.i == 1:
        pc, pc_exact = designs.find_parallel_class(design, "full", budget)
        near, near_exact = designs.find_parallel_class(design, "near", budget)
        g = big.build_big(design, 1)
        mis, alpha_exact = independence.max_independent_set(g, budget)
        inconclusive = not (pc_exact and near_exact and alpha_exact)
        verdicts = silver.screen(
            design,
            1,
            pc=pc,
            near_pc=near,
            alpha=mis.size if alpha_exact else None,
        )
        print(f"pc={'yes' if pc else 'no'} near-pc={'yes' if near else 'no'}"
              f" alpha={mis.size if alpha_exact else '?'}")
    else:
        verdicts = silver.screen(design, 0)
    for v in verdicts:
        print(f"not silver: {v.reason}  {v.certificate}")
    if verdicts:
        return NEGATIVE
    print("no screen applies")
    return BUDGET if inconclusive else OK


def _silver_check(args) -> int:
    g = files.read_graph(args.graph)
    coloring = files.read_coloring(args.coloring)
    ind = files.read_alpha_set(args.alpha_set)
    if not independence.is_independent(g, ind.vertices):
        print("alpha-set is not independent")
        return NEGATIVE
    if not silver.is_proper(g, coloring):
        print("coloring is not proper")
        return NEGATIVE
    rainbow = silver.rainbow_vertices(g, coloring)
    missing = [x for x in ind.vertices if x not in rainbow]
    if missing:
        print(f"not silver: vertices {missing} are not rainbow")
        return NEGATIVE
    print(f"silver: all {ind.size} set vertices rainbow under "
          f"{coloring.num_colors} colors")
    return OK


def _write_verdict_artifacts(outdir: Path, tag: str, verdict: silver.Verdict):
    if verdict.coloring is not None:
        files.write_coloring(verdict.coloring, outdir / f"{tag}_coloring.txt")
    if verdict.alpha_set is not None:
        files.write_alpha_set(verdict.alpha_set, outdir / f"{tag}_alpha_set.txt")
    cert = verdict.certificate
    if isinstance(cert, decider.TripleCertificate):
        (outdir / f"{tag}_certificate.txt").write_text(_format_certificate(cert))


def _format_certificate(cert: decider.TripleCertificate, ncolors: int | None = None) -> str:
    lines = [f"b1 {cert.b1}", f"b2 {cert.b2}", f"b3 {cert.b3}"]
    for name, common in zip(("n12", "n23", "n13"), cert.pairwise_common):
        lines.append(f"{name} {' '.join(map(str, common))}")
    lines.append(f"total {cert.total}")
    if ncolors is not None:
        lines.append(f"colors {ncolors}")
    return "\n".join(lines) + "\n"


def _print_verdict(g: big.Graph, verdict: silver.Verdict) -> int:
    ncolors = (g.regular_degree() or 0) + 1
    if verdict.outcome == silver.SILVER:
        print(f"silver (witness coloring on {verdict.coloring.num_colors} colors, "
              f"alpha-set {verdict.alpha_set.vertices})")
        return OK
    if verdict.outcome == silver.NOT_SILVER:
        print(f"not silver: {verdict.reason}")
        refutations = (
            verdict.certificate
            if isinstance(verdict.certificate, tuple)
            else (verdict,)
        )
        for ref in refutations:
            if isinstance(ref.certificate, decider.TripleCertificate):
                print(f"alpha-set {ref.alpha_set.vertices}: counting certificate")
                print(_format_certificate(ref.certificate, ncolors), end="")
            elif ref.alpha_set is not None:
                print(f"alpha-set {ref.alpha_set.vertices}: {ref.reason}")
        return NEGATIVE
    print("unknown: budget exhausted")
    return BUDGET


def _silver_decide(args) -> int:
    design = files.read_design(args.design)
    g = big.build_big(design, args.i)
    budget = _budget(args, decider.DEFAULT_DECIDE_BUDGET)
    if args.alpha_set:
        ind = files.read_alpha_set(args.alpha_set)
        verdict = decider.decide_silver_for_set(g, ind, budget)
    else:
        verdict = decider.decide_silver_any(g, budget)
    if args.output:
        outdir = Path(args.output)
        outdir.mkdir(parents=True, exist_ok=True)
        if verdict.outcome == silver.SILVER:
            _write_verdict_artifacts(outdir, f"big{args.i}_silver", verdict)
        elif isinstance(verdict.certificate, tuple):
            for idx, ref in enumerate(verdict.certificate):
                _write_verdict_artifacts(outdir, f"big{args.i}_refutation{idx}", ref)
        else:
            _write_verdict_artifacts(outdir, f"big{args.i}", verdict)
    return _print_verdict(g, verdict)


def _silver_construct(args) -> int:
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    if args.product:
        plane = designs.make_affine_plane(args.plane)
        base = files.read_design(args.rbibd)
        out = designs.product_design(plane, base)
        design, coloring, ind = out.design, out.coloring, out.alpha_set
        i = 1
        files.write_design(design, outdir / "design.blk")
        print(f"wrote {outdir / 'design.blk'} "
              f"(2-({design.v},{design.k},1), b={design.b})")
    else:
        design = files.read_design(args.design)
        i = args.i
        result = silver.construct_silver_canonical(design, i)
        if result is None:
            print("no canonical silver coloring for this design family")
            return NEGATIVE
        coloring, ind = result
    g = big.build_big(design, i)
    files.write_graph(g, outdir / f"big{i}.graph")
    files.write_coloring(coloring, outdir / f"big{i}_coloring.txt")
    files.write_alpha_set(ind, outdir / f"big{i}_alpha_set.txt")
    assert silver.is_silver(g, coloring, ind)
    print(f"wrote {outdir / f'big{i}.graph'}, coloring "
          f"({coloring.num_colors} colors), alpha-set (size {ind.size}); verified silver")
    return OK


def _report(args) -> int:
    t0 = time.time()
    design = files.read_design(args.design)
    outdir = Path(args.output) if args.output else Path(
        str(Path(args.design).with_suffix("")) + "_report"
    )
    outdir.mkdir(parents=True, exist_ok=True)
    budget = _budget(args, decider.DEFAULT_DECIDE_BUDGET)
    search_budget = min(budget, independence.DEFAULT_SEARCH_BUDGET)

    files.write_design(design, outdir / "design.blk")
    report = designs.verify_design(design)
    lines = [
        f"design: v={design.v} k={design.k} lambda={design.lam} "
        f"b={report.b} r={report.r}",
        f"verify: {'ok' if report.ok else 'FAILED'}",
    ]
    exit_code = OK if report.ok else NEGATIVE

    pc, pc_exact = designs.find_parallel_class(design, "full", search_budget)
    near, near_exact = designs.find_parallel_class(design, "near", search_budget)
    lines.append(
        f"parallel class: {'yes' if pc else ('no' if pc_exact else 'unknown')}; "
        f"near: {'yes' if near else ('no' if near_exact else 'unknown')}"
    )

    for i in (0, 1):
        g = big.build_big(design, i)
        files.write_graph(g, outdir / f"big{i}.graph")
        params = big.expected_srg(design.v, design.k, i)
        srg = big.verify_srg(g, params)
        mis, alpha_exact = independence.max_independent_set(g, search_budget)
        files.write_alpha_set(mis, outdir / f"big{i}_alpha_set.txt")
        verdicts = silver.screen(
            design,
            i,
            pc=pc,
            near_pc=near,
            alpha=mis.size if (i == 1 and alpha_exact) else None,
        )
        verdict = (
            verdicts[0] if verdicts else decider.decide_silver_any(g, budget)
        )
        if verdict.outcome == silver.SILVER:
            _write_verdict_artifacts(outdir, f"big{i}_silver", verdict)
        elif isinstance(verdict.certificate, tuple):
            for idx, ref in enumerate(verdict.certificate):
                _write_verdict_artifacts(outdir, f"big{i}_refutation{idx}", ref)
        lines.append(
            f"{i}-BIG: n={g.n} degree={g.regular_degree()} "
            f"srg={params if not params.degenerate else 'degenerate'} "
            f"srg_ok={srg.ok} alpha={mis.size}"
            f"{'' if alpha_exact else '?'} verdict={verdict.outcome}"
            + (f" ({verdict.reason})" if verdict.reason else "")
        )
        if verdict.outcome == silver.UNKNOWN:
            exit_code = BUDGET
    lines.append(f"wall time: {time.time() - t0:.2f}s")
    lines.append(f"artifacts: {outdir}")
    text = "\n".join(lines) + "\n"
    (outdir / "report.txt").write_text(text)
    print(text, end="")
    return exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="silverbig",
        description="Steiner 2-designs, block intersection graphs, silver colorings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("make", help="construct a design and write it")
    p.add_argument(
        "--family",
        required=True,
        choices=["sts-bose", "sts-skolem", "sts13-cyclic", "sts13-noncyclic",
                 "kts", "ag", "pg"],
    )
    p.add_argument("--v", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_make)

    p = sub.add_parser("verify", help="check pair coverage of a design file")
    p.add_argument("design")
    p.set_defaults(func=_verify)

    p = sub.add_parser("big", help="write the i-block-intersection graph")
    p.add_argument("design")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_big)

    p = sub.add_parser("alpha", help="maximum independent set of a graph file")
    p.add_argument("graph")
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--budget", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_alpha)

    p = sub.add_parser("screen", help="apply the non-silverness screens")
    p.add_argument("--design", required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=_screen)

    ps = sub.add_parser("silver", help="silver coloring operations")
    silver_sub = ps.add_subparsers(dest="silver_command", required=True)

    p = silver_sub.add_parser("check", help="re-verify a coloring/alpha-set pair")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--alpha-set", required=True)
    p.set_defaults(func=_silver_check)

    p = silver_sub.add_parser("decide", help="decide silverness exhaustively")
    p.add_argument("--design", required=True)
    p.add_argument("--i", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--alpha-set")
    group.add_argument("--all-alpha", action="store_true")
    p.add_argument("--budget", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_silver_decide)

    p = silver_sub.add_parser("construct", help="emit a known silver coloring")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--canonical", action="store_true")
    mode.add_argument("--product", action="store_true")
    p.add_argument("--design")
    p.add_argument("--i", type=int)
    p.add_argument("--plane", type=int)
    p.add_argument("--rbibd")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_silver_construct)

    p = sub.add_parser("report", help="full pipeline on one design")
    p.add_argument("design")
    p.add_argument("--budget", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_report)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        if args.command == "silver" and args.silver_command == "construct":
            if args.product and not (args.plane and args.rbibd):
                raise ValueError("--product needs --plane and --rbibd")
            if args.canonical and (args.design is None or args.i is None):
                raise ValueError("--canonical needs --design and --i")
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()
