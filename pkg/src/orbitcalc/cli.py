"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 invalid mathematical input,
3 internal invariant violation (including a failed self-check).
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from contextlib import redirect_stderr, redirect_stdout

from . import arthur, collapse, duality, groups, partition
from .checks import selfcheck
from .errors import CalcError, InvariantError, ParameterError
from .partition import ENUMERATION_CAP, Partition, parse_partition

EXIT_OK, EXIT_USAGE, EXIT_MATH, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fmt(p: Partition) -> str:
    return str(p) if p.parts else "[]"


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _group_arg(text: str) -> groups.GroupType:
    try:
        return groups.parse_group(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


PARTITION_OPS = {
    # name: (number of partitions, needs --group)
    "normalize": (1, False),
    "transpose": (1, False),
    "valid": (1, True),
    "special": (1, True),
    "metaplectic-special": (1, False),
    "collapse": (1, True),
    "special-collapse": (1, True),
    "maximal-specials": (1, True),
    "expand": (1, True),
    "metaplectic-expand": (1, False),
    "ls-dual": (1, True),
    "principal": (0, True),
    "leq": (2, False),
    "lex": (2, False),
    "add": (-1, False),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orbitcalc", description="Partition calculus for nilpotent orbits of classical groups.")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("partition", help="single-partition operations")
    p.add_argument("op", choices=sorted(PARTITION_OPS))
    p.add_argument("partitions", nargs="*", type=_partition_arg)
    p.add_argument("--group", type=_group_arg)
    p.add_argument("--json", action="store_true", dest="json_local")

    d = sub.add_parser("dual", help="Barbasch-Vogan dual of a dual-group partition")
    d.add_argument("partition", type=_partition_arg)
    d.add_argument("--group", type=_group_arg, required=True)
    d.add_argument("--json", action="store_true", dest="json_local")

    a = sub.add_parser("arthur", help="partition and Fourier bound of an Arthur parameter")
    a.add_argument("parameter", nargs="?", help="inline form: tau:a=3,orth,b=3 + tau2:a=2,sympl,b=1")
    a.add_argument("--group", type=_group_arg)
    a.add_argument("--param-json", help="parameter as JSON text, or @path to a JSON file")
    a.add_argument("--check", type=_partition_arg, help="locate this partition relative to the bound")
    a.add_argument("--order", choices=["dominance", "lexicographic"], default="dominance")
    a.add_argument("--json", action="store_true", dest="json_local")

    e = sub.add_parser("enumerate", help="list partitions of a size")
    e.add_argument("--group", type=_group_arg, required=True)
    e.add_argument("--filter", choices=["all", "valid", "special", "metaplectic_special"], default="all")
    e.add_argument("--cap", type=int, default=ENUMERATION_CAP)
    e.add_argument("--json", action="store_true", dest="json_local")

    g = sub.add_parser("poset", help="DOT Hasse diagram of the dominance order on valid partitions")
    g.add_argument("--group", type=_group_arg, required=True)
    g.add_argument("--highlight", help="inline Arthur parameter whose bound is marked")
    g.add_argument("--highlight-json", help="Arthur parameter as JSON text or @path")
    g.add_argument("--cap", type=int, default=ENUMERATION_CAP)

    s = sub.add_parser("selfcheck", help="exhaustive oracle and golden-table checks")
    s.add_argument("--max", type=int, default=12, dest="max_size")
    s.add_argument("--json", action="store_true", dest="json_local")
    return parser


def _load_json_arg(text: str) -> str:
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            return fh.read()
    return text


def _parameter(args, inline: str | None, as_json: str | None) -> arthur.ArthurParameter:
    if as_json:
        return arthur.ArthurParameter.from_json(_load_json_arg(as_json))
    if inline is None:
        raise UsageError("an Arthur parameter is required (inline or --param-json)")
    if args.group is None:
        raise UsageError("--group is required with an inline parameter")
    return arthur.parse_parameter(inline, args.group)


def _emit(data, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(data, sort_keys=False))
    else:
        print(text)


def cmd_partition(args, as_json: bool) -> int:
    count, needs_group = PARTITION_OPS[args.op]
    ps = args.partitions
    if count >= 0 and len(ps) != count:
        raise UsageError(f"'{args.op}' takes {count} partition(s), got {len(ps)}")
    if needs_group and args.group is None:
        raise UsageError(f"'{args.op}' needs --group")
    G = args.group
    op = args.op
    if op == "normalize":
        result = ps[0]
    elif op == "transpose":
        result = ps[0].transpose()
    elif op == "valid":
        result = groups.is_valid(ps[0], G)
    elif op == "special":
        result = groups.is_special(ps[0], G)
    elif op == "metaplectic-special":
        result = groups.is_metaplectic_special(ps[0])
    elif op == "collapse":
        result = collapse.parity_collapse(ps[0], G)
    elif op == "special-collapse":
        result = collapse.special_collapse(ps[0], G)
    elif op == "maximal-specials":
        result = collapse.maximal_specials_below(ps[0], G)
    elif op == "expand":
        result = collapse.special_expansion(ps[0], G)
    elif op == "metaplectic-expand":
        result = collapse.metaplectic_expansion(ps[0])
    elif op == "ls-dual":
        result = collapse.ls_dual(ps[0], G)
    elif op == "principal":
        result = groups.principal_partition(G)
    elif op == "leq":
        result = partition.dominance_leq(ps[0], ps[1])
    elif op == "lex":
        result = partition.lex_cmp(ps[0], ps[1]).value
    else:
        result = partition.add_rowwise(ps)

    if isinstance(result, Partition):
        data, text = list(result), _fmt(result)
    elif isinstance(result, list):
        data, text = [list(p) for p in result], "; ".join(_fmt(p) for p in result)
    elif isinstance(result, bool):
        data, text = result, str(result).lower()
    else:
        data, text = result, str(result)
    _emit({"op": op, "input": [list(p) for p in ps], "result": data}, as_json, text)
    return EXIT_OK


def cmd_dual(args, as_json: bool) -> int:
    trace = duality.bv_dual_trace(args.partition, args.group)
    _emit(trace.to_dict(), as_json, _fmt(trace.result))
    return EXIT_OK


def cmd_arthur(args, as_json: bool) -> int:
    psi = _parameter(args, args.parameter, args.param_json)
    problems = arthur.validate_parameter(psi)
    if problems:
        raise ParameterError("; ".join(problems))
    p = arthur.partition_of(psi)
    bound = arthur.fourier_bound(psi)
    data = {
        "parameter": psi.to_dict(),
        "partition": list(p),
        "generic": arthur.is_generic(psi),
        "bound": list(bound),
    }
    lines = [f"partition: {_fmt(p)}", f"generic: {str(data['generic']).lower()}", f"bound: {_fmt(bound)}"]
    if args.check is not None:
        relation = arthur.check_bound(args.check, psi, args.order).value
        data["check"] = {"partition": list(args.check), "order": args.order, "relation": relation}
        lines.append(f"relation ({args.order}): {relation}")
    _emit(data, as_json, "\n".join(lines))
    return EXIT_OK


def cmd_enumerate(args, as_json: bool) -> int:
    G = args.group
    items = partition.enumerate_partitions(G.partition_size, args.cap)
    if args.filter == "valid":
        items = [p for p in items if groups.is_valid(p, G)]
    elif args.filter == "special":
        items = [p for p in items if groups.is_valid(p, G) and groups.is_special(p, G)]
    elif args.filter == "metaplectic_special":
        items = [p for p in items if groups.has_symplectic_parity(p) and groups.is_metaplectic_special(p)]
    noun = "partition" if len(items) == 1 else "partitions"
    text = f"{len(items)} {noun}: " + "; ".join(_fmt(p) for p in items)
    data = {"group": G.tag(), "filter": args.filter, "count": len(items), "partitions": [list(p) for p in items]}
    _emit(data, as_json, text)
    return EXIT_OK


def cmd_poset(args, as_json: bool) -> int:
    from .poset import to_dot

    highlight = None
    if args.highlight or args.highlight_json:
        highlight = _parameter(args, args.highlight, args.highlight_json)
    sys.stdout.write(to_dot(args.group, highlight, args.cap))
    return EXIT_OK


def cmd_selfcheck(args, as_json: bool) -> int:
    report = selfcheck(args.max_size)
    print(report.to_json(indent=2))
    return EXIT_OK if report.agree else EXIT_INVARIANT


COMMANDS = {
    "partition": cmd_partition,
    "dual": cmd_dual,
    "arthur": cmd_arthur,
    "enumerate": cmd_enumerate,
    "poset": cmd_poset,
    "selfcheck": cmd_selfcheck,
}


def _dispatch(argv: list[str]) -> int:
    try:
        args, extra = build_parser().parse_known_args(argv)
        if extra:
            # partitions given after options, e.g. ``partition collapse --group Sp:4 3,1``
            if args.verb != "partition" or any(tok.startswith("-") and tok != "-" for tok in extra):
                raise UsageError(f"unrecognized arguments: {' '.join(extra)}")
            try:
                args.partitions += [parse_partition(tok) for tok in extra]
            except (ValueError, TypeError) as exc:
                raise UsageError(str(exc)) from None
        as_json = args.json or getattr(args, "json_local", False)
        return COMMANDS[args.verb](args, as_json)
    except UsageError as exc:
        print(f"error[usage] {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantError as exc:
        print(f"error[{exc.tag}] {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except CalcError as exc:
        print(f"error[{exc.tag}] {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, ValueError) as exc:
        print(f"error[usage] {exc}", file=sys.stderr)
        return EXIT_USAGE


def run(argv: list[str]) -> tuple[int, str, str]:
    """Run one command, capturing its output."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        try:
            code = _dispatch(list(argv))
        except SystemExit as exc:
            # --help
            code = exc.code if isinstance(exc.code, int) else EXIT_OK
    return code, out.getvalue(), err.getvalue()


def main(argv: list[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
