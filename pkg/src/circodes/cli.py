"""Command-line front end.

Exit codes: 0 success or verified-pass, 1 verified-fail (a witness
exists), 2 usage or applicability error, 3 solver budget exceeded.
Every subcommand prints a human-readable summary and, with ``--out``,
writes a JSON report conforming to schemas/report.schema.json.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bounds import best_lower_bound, exact_sid_value
from .core import Code, NotApplicableError, code_from_payload, make_graph
from .families import FAMILIES, build_family
from .grids import GridKind, dump_domain_csv, grid_density, grid_verify, lift
from .solver import SolveRequest, SolveStatus, min_code_size
from .sweep import SUITE_NAME, render_table, run_suite
from .verify import CodeKind, verify

PASS, FAIL, USAGE, BUDGET = 0, 1, 2, 3


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise NotApplicableError(f"could not parse {what} {text!r} as integers") from None


def _resolve_gens(args) -> list[int]:
    if getattr(args, "shape", None):
        if args.gens:
            raise NotApplicableError("give either --gens or --shape/--d, not both")
        if args.d is None:
            raise NotApplicableError("--shape needs --d")
        return list(GridKind.parse(args.shape).ring_gens(args.d))
    if not args.gens:
        raise NotApplicableError("missing --gens (or --shape with --d)")
    return _parse_int_list(args.gens, "--gens")


def _load_code(args, n: int, gens: tuple[int, ...]) -> Code:
    if args.inline and args.code:
        raise NotApplicableError("give either --code or --inline, not both")
    if args.inline:
        return Code.from_members(n, _parse_int_list(args.inline, "--inline"))
    if not args.code:
        raise NotApplicableError("missing code: use --code FILE or --inline LIST")
    with open(args.code) as fh:
        payload = json.load(fh)
    file_n, file_gens, code = code_from_payload(payload)
    if file_n != n:
        raise NotApplicableError(f"code file has n={file_n}, flags say n={n}")
    if file_gens is not None:
        folded = make_graph(file_n, file_gens).gens
        if folded != gens:
            raise NotApplicableError(
                f"code file generators {file_gens} fold to {folded}, flags give {gens}"
            )
    return code


def _emit(args, payload: dict) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(json.dumps(payload, indent=2) + "\n")


def _cmd_verify(args) -> int:
    graph = make_graph(args.n, _resolve_gens(args))
    code = _load_code(args, graph.n, graph.gens)
    kind = CodeKind.parse(args.kind)
    report = verify(graph, code, kind)
    summary = "PASS" if report.passed else "FAIL"
    print(f"verify {kind.token} in {graph}: |C|={len(code)} -> {summary}")
    if report.witness is not None:
        print(f"witness: {report.witness.describe()}")
    if report.note:
        print(f"note: {report.note}")
    _emit(args, {
        "command": "verify",
        "n": graph.n,
        "gens": list(graph.gens),
        "kind": kind.token,
        "code": list(code.members),
        "report": report.to_json(),
    })
    return PASS if report.passed else FAIL


def _cmd_construct(args) -> int:
    result = build_family(args.family, n=args.n, d=args.d, k=args.k)
    payload = result.to_payload()
    print(
        f"construct {result.family}: {result.kind.token} code of size "
        f"{result.claimed_size} in {result.graph}"
    )
    print("code:", ",".join(map(str, result.code.members)))
    _emit(args, payload)
    return PASS


def _cmd_bound(args) -> int:
    graph = make_graph(args.n, _resolve_gens(args))
    kind = CodeKind.parse(args.kind)
    report = best_lower_bound(graph, kind)
    exactness = "exact" if report.exact else "lower bound"
    print(f"bound {kind.token} in {graph}: {report.value} ({exactness}, {report.provenance})")
    for name, value in report.candidates:
        print(f"  candidate {name}: {value}")
    _emit(args, {
        "command": "bound",
        "n": graph.n,
        "gens": list(graph.gens),
        "report": report.to_json(),
    })
    return PASS


def _cmd_solve(args) -> int:
    graph = make_graph(args.n, _resolve_gens(args))
    kind = CodeKind.parse(args.kind)
    request = SolveRequest(
        graph,
        kind,
        max_size=args.max_size,
        deterministic=args.deterministic,
        time_budget=args.time_limit,
    )
    result = min_code_size(request)
    _emit(args, {
        "command": "solve",
        "n": graph.n,
        "gens": list(graph.gens),
        "kind": kind.token,
        "report": result.to_json(),
    })
    if result.status is SolveStatus.OPTIMAL:
        print(f"solve {kind.token} in {graph}: optimum {result.size} "
              f"({result.nodes_explored} nodes)")
        print("witness:", ",".join(map(str, result.witness.members)))
        return PASS
    if result.status is SolveStatus.INFEASIBLE:
        print(f"solve {kind.token} in {graph}: no such code exists (closed twins)")
        return FAIL
    print(
        f"solve {kind.token} in {graph}: budget exceeded, "
        f"size in [{result.lower_bound}, {result.upper_bound}]"
    )
    return BUDGET


def _cmd_lift(args) -> int:
    grid = GridKind.parse(args.grid)
    gens = grid.ring_gens(args.d)
    graph = make_graph(args.n, gens)
    code = _load_code(args, args.n, graph.gens)
    lifted = lift(code, args.n, args.d, grid)
    density = grid_density(lifted)
    print(f"lift {graph} -> {grid.value} grid: density {density}")
    report = None
    status = PASS
    if args.verify:
        kind = CodeKind.parse(args.verify)
        report = grid_verify(lifted, kind)
        print(f"grid verify {kind.token}: {'PASS' if report.passed else 'FAIL'}")
        if report.witness is not None:
            print(f"witness: {report.witness.describe()}")
        status = PASS if report.passed else FAIL
    if args.dump_domain:
        rows = dump_domain_csv(lifted, args.dump_domain)
        print(f"fundamental domain: {rows} cells -> {args.dump_domain}")
    _emit(args, {
        "command": "lift",
        "n": args.n,
        "d": args.d,
        "grid": grid.value,
        "code": list(code.members),
        "density": [density.numerator, density.denominator],
        "report": report.to_json() if report else None,
    })
    return status


def _cmd_exact(args) -> int:
    graph = make_graph(args.n, _resolve_gens(args))
    value = exact_sid_value(graph)
    _emit(args, {
        "command": "exact",
        "n": graph.n,
        "gens": list(graph.gens),
        "value": value,
    })
    if value is None:
        print(f"exact sid in {graph}: unknown (no formula covers this shape/window)")
        return USAGE
    print(value)
    return PASS


def _cmd_sweep(args) -> int:
    if args.suite != SUITE_NAME:
        raise NotApplicableError(f"unknown suite {args.suite!r}; available: {SUITE_NAME}")
    results = run_suite(jobs=args.jobs)
    print(render_table(results))
    for result in results:
        if not result.passed:
            for line in result.details:
                print(f"  [{result.number}] {line}")
    _emit(args, {
        "command": "sweep",
        "suite": args.suite,
        "pass": all(r.passed for r in results),
        "criteria": [r.to_json() for r in results],
    })
    return PASS if all(r.passed for r in results) else FAIL


def _add_graph_flags(sub, kind_flag: bool = True) -> None:
    sub.add_argument("--n", type=int, required=True, help="graph order")
    sub.add_argument("--gens", help="comma-separated generators, e.g. 1,4")
    sub.add_argument("--shape", choices=["square", "tri", "king"],
                     help="generator shorthand: 1,d / 1,d-1,d / 1,d-1,d,d+1")
    sub.add_argument("--d", type=int, help="d for --shape")
    if kind_flag:
        sub.add_argument("--kind", required=True, choices=["dom", "id", "ld", "sid"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circodes",
        description="verify, construct, bound, solve and lift location-type "
                    "codes in circulant graphs",
    )
    subs = parser.add_subparsers(dest="subcommand", required=True)

    p = subs.add_parser("verify", help="check a code against a kind")
    _add_graph_flags(p)
    p.add_argument("--code", help="JSON code file (explicit or residue form)")
    p.add_argument("--inline", help="comma-separated codewords")
    p.add_argument("--out", help="write a JSON report here")
    p.set_defaults(handler=_cmd_verify)

    p = subs.add_parser("construct", help="build a named code family")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--out", help="write the code payload here")
    p.set_defaults(handler=_cmd_construct)

    p = subs.add_parser("bound", help="best known lower bound with provenance")
    _add_graph_flags(p)
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_bound)

    p = subs.add_parser("solve", help="exact minimum code size")
    _add_graph_flags(p)
    p.add_argument("--max-size", type=int, dest="max_size")
    p.add_argument("--deterministic", action="store_true")
    p.add_argument("--time-limit", type=float, dest="time_limit", metavar="SEC")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_solve)

    p = subs.add_parser("lift", help="lift a ring code to a periodic grid code")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--grid", required=True, choices=["square", "tri", "king"])
    p.add_argument("--code")
    p.add_argument("--inline")
    p.add_argument("--verify", choices=["dom", "id", "ld", "sid"])
    p.add_argument("--dump-domain", dest="dump_domain", metavar="PATH",
                   help="write the fundamental domain as CSV (x,y,codeword)")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_lift)

    p = subs.add_parser("exact", help="exact optimal self-identifying size, when known")
    _add_graph_flags(p, kind_flag=False)
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_exact)

    p = subs.add_parser("sweep", help="run the acceptance suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(handler=_cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except NotApplicableError as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE
    except (ValueError, OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
