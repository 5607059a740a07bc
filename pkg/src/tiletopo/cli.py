"""Command-line surface: deterministic analyses and file outputs.

Exit codes: 0 success, 1 usage error, 2 parameter/regime error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .errors import (
    CertificateFailure,
    ChainViolation,
    IdentityFailure,
    TileError,
)
from .numsys import RawInstance, TileParams, format_address, normalize, point_eval


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _params_from(args) -> TileParams:
    if args.matrix is not None:
        m = [int(x) for x in args.matrix.split(",")]
        v = [int(x) for x in (args.v or "1,0").split(",")]
        if len(m) != 4 or len(v) != 2:
            raise TileError("--matrix needs 4 integers, --v needs 2")
        raw = RawInstance(((m[0], m[1]), (m[2], m[3])), (v[0], v[1]))
        params, _ = normalize(raw)
        return params
    if args.A is None or args.B is None:
        raise TileError("provide --A and --B (or --matrix/--v)")
    return TileParams(args.A, args.B)


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _write(args, name: str, content: str) -> Path | None:
    if args.out is None:
        return None
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    path = out / name
    path.write_text(content, encoding="utf-8")
    return path


def _cmd_normalize(args) -> int:
    m = [int(x) for x in args.matrix.split(",")]
    v = [int(x) for x in (args.v or "1,0").split(",")]
    raw = RawInstance(((m[0], m[1]), (m[2], m[3])), (v[0], v[1]))
    params, record = normalize(raw)
    payload = {
        "schema": "tiletopo/normalization@1",
        "A": params.a,
        "B": params.b,
        "reflected": params.reflected,
        "basis_change": [list(map(str, row)) for row in record.basis_change],
        "reflection": [list(map(str, row)) for row in record.reflection],
        "translation": [str(record.translation[0]), str(record.translation[1])],
    }
    text = (
        f"A={params.a} B={params.b} reflected={params.reflected}\n"
        f"basis_change={record.basis_change}\n"
        f"translation=({record.translation[0]}, {record.translation[1]})"
    )
    _emit(args, payload, text)
    return 0


def _cmd_classify(args) -> int:
    from .topology import Classification, classify, cut_point_address

    params = _params_from(args)
    cls = classify(params)
    payload = {
        "schema": "tiletopo/classification@1",
        "A": params.a,
        "B": params.b,
        "classification": cls.value,
    }
    text = cls.value
    if cls is Classification.HAS_CUT_POINT:
        addr = cut_point_address(params)
        z = point_eval(addr, params)
        payload["cut_point"] = {
            "address": format_address(addr),
            "value": [str(z[0]), str(z[1])],
        }
        text = f"{cls.value} z=0.{format_address(addr)}"
    _emit(args, payload, text)
    return 0


def _cmd_neighbors(args) -> int:
    from .neighbors import neighbor_set_formula, neighbor_set_search, reflect_neighbor_set

    params = _params_from(args)
    sset = neighbor_set_formula(params)
    if args.check:
        searched = neighbor_set_search(params)
        if searched.members != sset.members:
            print("formula and search disagree", file=sys.stderr)
            return 3
    if params.reflected:
        # mirror tile: neighbor vectors transform through the reflection
        sset = reflect_neighbor_set(sset)
    payload = sset.to_json()
    payload["reflected"] = params.reflected
    text = "\n".join(f"({x}, {y})" for (x, y) in sset.sorted_members())
    _emit(args, payload, text)
    return 0


def _cmd_contact_graph(args) -> int:
    from .contact import build_contact_graph, derive_order_extension, graph_to_dot, graph_to_json

    params = _params_from(args)
    graph = build_contact_graph(params)
    ordered = derive_order_extension(graph)
    if args.format == "dot":
        text = graph_to_dot(graph, ordered)
        print(text, end="")
        _write(args, f"contact_A{params.a}_B{params.b}.dot", text)
    else:
        payload = graph_to_json(graph, ordered)
        text = json.dumps(payload, indent=2, sort_keys=True)
        print(text)
        _write(args, f"contact_A{params.a}_B{params.b}.json", text + "\n")
    return 0


def _cmd_param(args) -> int:
    from .contact import (
        Walk,
        build_contact_graph,
        derive_order_extension,
        param_to_walk,
        perron_data,
        psi,
        walk_to_param,
    )

    if args.t is None and args.walk is None:
        raise TileError("param needs --t or --walk")
    params = _params_from(args)
    graph = build_contact_graph(params)
    ordered = derive_order_extension(graph)
    data = perron_data(graph)
    if args.walk is not None:
        # "start;o1,o2;p1,p2" with a periodic tail after the second ';'
        head, pre_txt, per_txt = (args.walk.split(";") + ["", ""])[:3]
        pre = tuple(int(x) for x in pre_txt.split(",") if x)
        per = tuple(int(x) for x in per_txt.split(",") if x) or (1,)
        walk = Walk(int(head), pre, per)
        t = walk_to_param(walk, data, ordered)
    else:
        t = Fraction(args.t)
        walk = param_to_walk(t, data, ordered)
    addr = psi(walk, ordered)
    value = point_eval(addr, params)
    payload = {
        "schema": "tiletopo/boundary-param@1",
        "t": str(t),
        "walk": {"start": walk.start, "pre": list(walk.pre), "period": list(walk.period)},
        "address": format_address(addr),
        "value": [str(value[0]), str(value[1])],
        "approx": [float(value[0]), float(value[1])],
    }
    text = (
        f"t={t} -> walk ({walk.start}; {list(walk.pre)} {list(walk.period)}*)\n"
        f"address 0.{format_address(addr)}\n"
        f"C(t) = ({value[0]}, {value[1]})"
    )
    _emit(args, payload, text)
    return 0


def _cmd_approx(args) -> int:
    from .render import polygon_to_json

    params = _params_from(args)
    payload = polygon_to_json(params, args.n, args.budget)
    text = json.dumps(payload, indent=2, sort_keys=True)
    print(text)
    _write(args, f"boundary_A{params.a}_B{params.b}_n{args.n}.json", text + "\n")
    return 0


def _cmd_cutpoint(args) -> int:
    from .topology import verify_cut_point

    params = _params_from(args)
    cert = verify_cut_point(params, depth=args.depth)
    payload = cert.to_json()
    text = (
        f"cut point certified: z=0.{format_address(cert.address)} "
        f"value=({cert.value[0]}, {cert.value[1]})"
    )
    _emit(args, payload, text)
    if args.out:
        _write(
            args,
            f"cutpoint_A{params.a}_B{params.b}.json",
            json.dumps(payload, indent=2, sort_keys=True) + "\n",
        )
    return 0


def _cmd_verify_chains(args) -> int:
    from .chains import ChainSetup, circular_chain_report, gamma_arcs, symmetry_and_junctions

    params = _params_from(args)
    setup = ChainSetup.build(params)
    report = circular_chain_report(setup)
    gamma_arcs(setup)
    symmetry_and_junctions(params)
    payload = report.to_json()
    _emit(args, payload, report.to_text())
    if args.out:
        _write(
            args,
            f"chains_A{params.a}_B{params.b}.json",
            json.dumps(payload, indent=2, sort_keys=True) + "\n",
        )
    if not report.ok:
        return 3
    return 0


def _cmd_render(args) -> int:
    from .render import render_boundary, render_cutpoint, render_patch

    params = _params_from(args)
    kind = args.kind
    if kind == "boundary":
        svg = render_boundary(params, args.n, args.budget)
    elif kind == "patch":
        svg = render_patch(params, args.n, args.budget)
    else:
        svg = render_cutpoint(params, args.n, args.budget)
    name = f"{kind}_A{params.a}_B{params.b}_n{args.n}.svg"
    path = _write(args, name, svg)
    if path is None:
        print(svg, end="")
    else:
        print(str(path))
    return 0


def _cmd_sweep(args) -> int:
    from .topology import Classification, classify, cut_point_address

    rows = []
    for b in range(2, args.Bmax + 1):
        for a in range(1, b + 1):
            params = TileParams(a, b)
            cls = classify(params)
            row = {
                "A": a,
                "B": b,
                "two_a_minus_b": 2 * a - b,
                "classification": cls.value,
            }
            if cls is Classification.HAS_CUT_POINT:
                row["cut_point"] = format_address(cut_point_address(params))
            rows.append(row)
    payload = {"schema": "tiletopo/sweep@1", "Bmax": args.Bmax, "rows": rows}
    lines = [f"{'A':>3} {'B':>3} {'2A-B':>5}  classification"]
    for row in rows:
        z = f"  z=0.{row['cut_point']}" if "cut_point" in row else ""
        lines.append(
            f"{row['A']:>3} {row['B']:>3} {row['two_a_minus_b']:>5}  "
            f"{row['classification']}{z}"
        )
    text = "\n".join(lines) + "\n"
    _emit(args, payload, text)
    if args.out:
        _write(args, "sweep.json", json.dumps(payload, indent=2, sort_keys=True) + "\n")
        _write(args, "sweep.txt", text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tiletopo", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, matrix=True):
        p.add_argument("--A", type=int)
        p.add_argument("--B", type=int)
        if matrix:
            p.add_argument("--matrix", help="m00,m01,m10,m11")
            p.add_argument("--v", help="vx,vy")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="output directory")

    p = sub.add_parser("normalize", help="reduce a raw instance to (A, B)")
    p.add_argument("--matrix", required=True)
    p.add_argument("--v")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_normalize)

    p = sub.add_parser("classify", help="topological classification")
    common(p)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("neighbors", help="neighbor set")
    common(p)
    p.add_argument("--check", action="store_true", help="cross-validate with the search")
    p.set_defaults(fn=_cmd_neighbors)

    p = sub.add_parser("contact-graph", help="contact graph and its ordering")
    common(p)
    p.set_defaults(fn=_cmd_contact_graph)
    p.set_defaults(format="json")
    p.add_argument("--dot", dest="format", action="store_const", const="dot")

    p = sub.add_parser("param", help="evaluate the boundary parametrization")
    common(p)
    p.add_argument("--t", help="rational parameter p/q in [0,1]")
    p.add_argument("--walk", help="walk 'start;o1,o2,...;p1,p2' (periodic tail)")
    p.set_defaults(fn=_cmd_param)

    p = sub.add_parser("approx", help="boundary polygon vertices")
    common(p)
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--budget", type=int, default=10**6)
    p.set_defaults(fn=_cmd_approx)

    p = sub.add_parser("cutpoint", help="cut point certificate")
    common(p)
    p.add_argument("--depth", type=int, default=12)
    p.set_defaults(fn=_cmd_cutpoint)

    p = sub.add_parser("verify-chains", help="chain and circular-chain checks")
    common(p)
    p.set_defaults(fn=_cmd_verify_chains)

    p = sub.add_parser("render", help="SVG output")
    common(p)
    p.add_argument("--kind", choices=("boundary", "patch", "cutpoint"), default="boundary")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--budget", type=int, default=10**6)
    p.set_defaults(fn=_cmd_render)

    p = sub.add_parser("sweep", help="classification grid")
    p.add_argument("--Bmax", type=int, default=12)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (ChainViolation, CertificateFailure, IdentityFailure) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 3
    except TileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
