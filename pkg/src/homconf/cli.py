"""Command-line client for the homconf operations.

By default every subcommand runs the shared handlers in-process; with
``--server URL`` it posts the same request to a running service instead.
Exit codes: 0 success, 1 usage error, 2 bad input, 3 verification failure,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import urllib.error
import urllib.request

from .errors import InputError, InvariantViolation
from .service import handlers
from .service.models import (
    CountRequest,
    MutationGraphRequest,
    NCRequest,
    QuiverRequest,
    TypeACheckRequest,
    TypeAPartitionRequest,
    VerifyRequest,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_VERIFY = 3
EXIT_INVARIANT = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); the contract wants 1
        raise UsageError(message)


_ENDPOINTS = {
    "enumerate": ("/configurations/enumerate", handlers.enumerate_configurations),
    "count": ("/count", handlers.count),
    "verify": ("/verify", handlers.verify),
    "nc": ("/nc/elements", handlers.nc_elements),
    "mutation-graph": ("/mutation-graph", handlers.mutation_graph),
    "hom-table": ("/hom-table", handlers.hom_table_doc),
    "typea-gamma": ("/typea/gamma", handlers.typea_gamma),
    "typea-f": ("/typea/f", handlers.typea_f),
    "typea-check": ("/typea/check", handlers.typea_check),
}


def _dispatch(op: str, request, server: str | None) -> dict:
    """Run a handler in-process, or POST the same payload to a server."""
    endpoint, func = _ENDPOINTS[op]
    if not server:
        return func(request).model_dump()
    url = server.rstrip("/") + endpoint
    data = json.dumps(request.model_dump()).encode()
    http_req = urllib.request.Request(url, data=data, headers={"Content-Type": "application/json"})
    try:
        with urllib.request.urlopen(http_req) as resp:
            return json.load(resp)
    except urllib.error.HTTPError as exc:
        try:
            body = json.load(exc)
        except Exception:
            body = {"detail": exc.reason, "kind": "input"}
        if body.get("kind") == "invariant":
            raise InvariantViolation(body.get("detail", "server invariant violation"))
        raise InputError(body.get("detail", f"server rejected the request ({exc.code})"))
    except urllib.error.URLError as exc:
        raise InputError(f"cannot reach server {server}: {exc.reason}")


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _json_text(data, compact: bool) -> str:
    if compact:
        return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _print_report(report: dict) -> int:
    for check in report["checks"]:
        if check.get("skipped"):
            status = "SKIP"
        else:
            status = "PASS" if check["passed"] else "FAIL"
        detail = f"  ({check['detail']})" if check.get("detail") else ""
        print(f"{status} {check['name']}{detail}")
    counts = " ".join(f"{k}={v}" for k, v in sorted(report["counts"].items()))
    verdict = "ok" if report["passed"] else "FAILED"
    print(f"{verdict} quiver={report['quiver']} {counts} wall={report['wall_time_s']}s")
    return EXIT_OK if report["passed"] else EXIT_VERIFY


def cmd_enumerate(args) -> int:
    req = QuiverRequest(quiver=args.quiver, allow_long=args.allow_long, threads=args.threads)
    data = _dispatch("enumerate", req, args.server)
    if args.format == "json":
        _emit(_json_text(data["configurations"], compact=bool(args.out)), args.out)
    else:
        _emit(_tsv_lines(data["quiver"], data["configurations"]), args.out)
    print(f"{data['count']} configurations for {data['quiver']}", file=sys.stderr)
    return EXIT_OK


def _tsv_lines(quiver_spec: str, configurations) -> str:
    from .cartan import parse_quiver
    from .mutation import display_key, object_label
    from .orbit import obj

    q = parse_quiver(quiver_spec)
    lines = []
    for conf in configurations:
        members = sorted(
            (obj(tuple(o["root"]), o["shift"]) for o in conf), key=display_key
        )
        lines.append("\t".join(object_label(q, x) for x in members))
    return "".join(line + "\n" for line in lines)


def cmd_count(args) -> int:
    req = CountRequest(
        quiver=args.quiver, what=args.what, allow_long=args.allow_long, threads=args.threads
    )
    data = _dispatch("count", req, args.server)
    print(_json_text(data, compact=False), end="")
    return EXIT_OK if data["matches"] else EXIT_VERIFY


def cmd_verify(args) -> int:
    req = VerifyRequest(
        quiver=args.quiver, suite=args.suite, allow_long=args.allow_long, threads=args.threads
    )
    report = _dispatch("verify", req, args.server)
    if args.report:
        _emit(_json_text(report, compact=True), args.report)
    return _print_report(report)


def cmd_nc(args) -> int:
    req = NCRequest(
        quiver=args.quiver,
        positive=args.positive,
        include_elements=args.list,
        allow_long=args.allow_long,
        threads=args.threads,
    )
    if args.quiver.replace(" ", "").upper().startswith(("E7", "E8")):
        print("note: this lattice is large; expect a long run", file=sys.stderr)
    data = _dispatch("nc", req, args.server)
    if args.list:
        _emit(_json_text(data["elements"], compact=bool(args.out)), args.out)
    else:
        print(data["count"])
    return EXIT_OK


def cmd_mutation_graph(args) -> int:
    req = MutationGraphRequest(
        quiver=args.quiver,
        include_dot=bool(args.dot),
        allow_long=args.allow_long,
        threads=args.threads,
    )
    data = _dispatch("mutation-graph", req, args.server)
    if args.dot:
        _emit(data["dot"], args.dot)
    else:
        _emit(_json_text({"nodes": data["nodes"], "edges": data["edges"]}, compact=bool(args.out)), args.out)
    print(
        f"{len(data['nodes'])} nodes, {len(data['edges'])} edges, "
        f"connected={data['connected']}",
        file=sys.stderr,
    )
    if args.check_connected:
        return EXIT_OK if data["connected"] else EXIT_VERIFY
    return EXIT_OK


def cmd_hom_table(args) -> int:
    req = QuiverRequest(quiver=args.quiver, allow_long=args.allow_long, threads=args.threads)
    data = _dispatch("hom-table", req, args.server)
    _emit(_json_text(data, compact=True), args.out)
    return EXIT_OK


def cmd_typea(args) -> int:
    if args.action in ("gamma", "f"):
        if not args.partition:
            raise UsageError(f"typea {args.action} requires --partition")
        req = TypeAPartitionRequest(n=args.n, partition=args.partition)
        data = _dispatch(f"typea-{args.action}", req, args.server)
        if args.action == "gamma":
            print(_json_text({"objects": data["objects"], "labels": data["labels"]}, compact=False), end="")
        else:
            print(data["image"])
        return EXIT_OK
    report = _dispatch("typea-check", TypeACheckRequest(n=args.n), args.server)
    return _print_report(report)


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser, quiver: bool = True):
    if quiver:
        p.add_argument("--quiver", required=True, help="quiver spec, e.g. A3 or A4:4>3,2>3,2>1")
    p.add_argument("--threads", type=int, default=1, help="worker processes for table building")
    p.add_argument("--allow-long", action="store_true", help="allow E7/E8 enumeration")
    p.add_argument("--server", default=None, help="base URL of a running homconf service")


def build_parser() -> _Parser:
    parser = _Parser(prog="homconf", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="enumerate all Hom-configurations")
    _add_common(p)
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="count objects and compare with the closed form")
    _add_common(p)
    p.add_argument("--what", choices=("homconf", "nc", "ncpos"), required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="run a verification suite")
    _add_common(p)
    p.add_argument(
        "--suite",
        default="all",
        choices=("all", "beta", "psi", "covering", "excseq", "thm55", "mutation", "counts", "structural"),
    )
    p.add_argument("--report", default=None, help="write the JSON run report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("nc", help="noncrossing partitions of the Weyl group")
    _add_common(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--list", action="store_true")
    group.add_argument("--count", action="store_true")
    p.add_argument("--positive", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_nc)

    p = sub.add_parser("mutation-graph", help="build the mutation graph")
    _add_common(p)
    p.add_argument("--dot", default=None, help="write DOT output to this file")
    p.add_argument("--check-connected", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_mutation_graph)

    p = sub.add_parser("hom-table", help="compute or fetch the cached Hom table")
    _add_common(p)
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_hom_table)

    p = sub.add_parser("typea", help="classical noncrossing partition maps")
    p.add_argument("action", choices=("gamma", "f", "check"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--partition", default=None, help="partition like '1,3|2|4'")
    p.add_argument("--server", default=None)
    p.set_defaults(func=cmd_typea)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
