"""Command-line front end: ``python -m hecke_bn <subcommand> ...``.

Exit status is 0 on success, 1 when a computation refuses its inputs (the
reason goes to stderr), and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Optional, Sequence, TextIO

from .afunction import WeightParams, a_value
from .basic_sets import SpecializationParams, basic_set, resolve_case
from .decomposition import (
    extract_basic_set,
    fixture_path,
    load_matrix,
    verify_delta,
    verify_delta_a,
)
from .fock import NodeOrder, crystal_graph, flotw_set
from .jinduction import j_induce
from .partitions import (
    Multipartition,
    enumerate_multipartitions,
    enumerate_partitions,
    format_partition_parts,
    multipartition_key,
    parse_multipartition,
    parse_partition,
)


def _partition_arg(text):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _bipartition_arg(text):
    try:
        lam = parse_multipartition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if lam.level != 2:
        raise argparse.ArgumentTypeError(f"expected two components separated by '|', got {text!r}")
    return lam


def _charge_arg(text):
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"charge must be comma-separated integers, got {text!r}")


def _order_arg(text):
    try:
        return math.inf if text.lower() in ("inf", "infinity", "∞") else int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer or 'inf', got {text!r}")


def _nonneg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _sorted(lams):
    return sorted(lams, key=multipartition_key, reverse=True)


def _num(x):
    return "infinity" if x == math.inf else x


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hecke-bn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("text", "json")):
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser("enumerate", help="list multipartitions of n")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--r", type=int, default=2)
    fmt(p)

    p = sub.add_parser("a-value", help="a-invariants of bipartitions")
    p.add_argument("--n", type=_nonneg)
    p.add_argument("--a", type=_nonneg, required=True)
    p.add_argument("--b", type=_nonneg, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--all", action="store_true")
    g.add_argument("--bipartition", type=_bipartition_arg)
    fmt(p)

    p = sub.add_parser("j-induce", help="truncated induction J(nu)")
    p.add_argument("--a", type=_nonneg, required=True)
    p.add_argument("--b", type=_nonneg, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--partition", type=_partition_arg)
    g.add_argument("--all", action="store_true")
    p.add_argument("--n", type=_nonneg)
    fmt(p)

    p = sub.add_parser("crystal", help="crystal graph of the Fock space up to size n")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--u", type=_charge_arg, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--order", choices=[o.value for o in NodeOrder], default="flotw")
    fmt(p, ("text", "json", "dot"))

    p = sub.add_parser("flotw", help="FLOTW multipartitions of n (0 <= u_1 <= ... <= u_r < e)")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--u", type=_charge_arg, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    fmt(p)

    for name, help_ in (("basic-set", "canonical basic set"), ("params", "resolve the specialization case")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--a", type=_nonneg, required=True)
        p.add_argument("--b", type=_nonneg, required=True)
        p.add_argument("--xi-order", type=_order_arg, required=True)
        p.add_argument("--char", type=_nonneg, default=0)
        p.add_argument("--json", action="store_true", help="same as --format json")
        fmt(p)

    p = sub.add_parser("verify", help="check (Delta) and (Delta_a) on a decomposition matrix")
    p.add_argument("--matrix", default=None, help="JSON matrix (default: the bundled B_3 table)")
    p.add_argument("--a", type=_nonneg, required=True)
    p.add_argument("--b", type=_nonneg, required=True)
    fmt(p)
    return parser


def _resolve_matrix_path(path: Optional[str]):
    if path is None:
        return fixture_path()
    if os.path.exists(path):
        return path
    bundled = fixture_path(os.path.basename(path))
    if bundled.is_file():
        return bundled
    raise ValueError(f"matrix file not found: {path}")


def _compact(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))


def _emit_json(out: TextIO, obj) -> None:
    # one level of indentation keeps bipartitions like [[3, 1], [2]] on one line
    if isinstance(obj, list):
        body = ",\n".join("  " + _compact(x) for x in obj)
        out.write("[\n" + body + "\n]\n" if obj else "[]\n")
    elif isinstance(obj, dict):
        body = ",\n".join(f"  {_compact(k)}: {_compact(v)}" for k, v in obj.items())
        out.write("{\n" + body + "\n}\n" if obj else "{}\n")
    else:
        out.write(_compact(obj) + "\n")


def cmd_enumerate(args, out):
    lams = enumerate_multipartitions(args.n, args.r)
    if args.format == "json":
        _emit_json(out, [x.to_json() for x in lams])
    else:
        out.writelines(f"{x}\n" for x in lams)


def cmd_a_value(args, out):
    w = WeightParams(args.a, args.b)
    if args.all:
        if args.n is None:
            raise ValueError("--all needs --n")
        lams = enumerate_multipartitions(args.n, 2)
    else:
        lams = [args.bipartition]
    rows = [(lam, a_value(lam, w)) for lam in lams]
    if args.format == "json":
        _emit_json(out, [{"bipartition": lam.to_json(), "a": v} for lam, v in rows])
    elif args.all:
        width = max(len("bipartition"), *(len(str(lam)) for lam, _ in rows))
        out.write(f"{'bipartition':<{width}}  a\n")
        out.writelines(f"{str(lam):<{width}}  {v}\n" for lam, v in rows)
    else:
        out.write(f"{rows[0][1]}\n")


def cmd_j_induce(args, out):
    w = WeightParams(args.a, args.b)
    if args.all:
        if args.n is None:
            raise ValueError("--all needs --n")
        nus = enumerate_partitions(args.n)
    else:
        nus = [args.partition]
    rows = [(nu, j_induce(nu, w)) for nu in nus]
    if args.format == "json":
        data = [{"partition": list(nu), "J": J.to_json()} for nu, J in rows]
        _emit_json(out, data if args.all else data[0])
    elif args.all:
        out.writelines(f"{format_partition_parts(nu)} -> {J}\n" for nu, J in rows)
    else:
        out.write(f"{rows[0][1]}\n")


def cmd_crystal(args, out):
    g = crystal_graph(args.n, args.u, args.e, NodeOrder(args.order))
    if args.format == "json":
        _emit_json(out, g.to_json())
    elif args.format == "dot":
        out.write(g.to_dot())
    else:
        out.write(g.to_text())


def cmd_flotw(args, out):
    lams = _sorted(flotw_set(args.n, args.u, args.e))
    if args.format == "json":
        _emit_json(out, [x.to_json() for x in lams])
    else:
        out.writelines(f"{x}\n" for x in lams)


def _params(args) -> SpecializationParams:
    return SpecializationParams.of(args.n, args.a, args.b, args.xi_order, args.char)


def cmd_params(args, out):
    c = resolve_case(_params(args))
    if args.json or args.format == "json":
        _emit_json(out, c.to_json())
        return
    for key, val in c.to_json().items():
        out.write(f"{key}: {val}\n")


def cmd_basic_set(args, out):
    c = resolve_case(_params(args))
    res = basic_set(c)
    lam, B = _sorted(res.lambda_set), _sorted(res.basic_set)
    if args.json or args.format == "json":
        data = c.to_json()
        data.update(
            {
                "lambda_set": [x.to_json() for x in lam],
                "basic_set": [x.to_json() for x in B],
                "beta_status": res.beta_status.value,
                "beta": None
                if res.beta is None
                else [{"from": k.to_json(), "to": res.beta[k].to_json()} for k in lam],
            }
        )
        _emit_json(out, data)
        return
    out.write(f"case: {c.case.value}\n")
    out.write(f"e: {_num(c.e)}\n")
    if c.s is not None:
        out.write(f"s: {c.s}\n")
    out.write("Lambda: " + " ".join(map(str, lam)) + "\n")
    out.write("B: " + " ".join(map(str, B)) + "\n")
    out.write(f"beta: {res.beta_status.value}\n")
    if res.beta is not None and res.beta_status.value != "identity":
        out.writelines(f"  {k} -> {res.beta[k]}\n" for k in lam)


def cmd_verify(args, out):
    D = load_matrix(_resolve_matrix_path(args.matrix))
    w = WeightParams(args.a, args.b)
    avals = {lam: a_value(lam, w) for lam in D.rows}
    delta = verify_delta(D)
    B, beta = extract_basic_set(D, avals)
    delta_a = verify_delta_a(D, avals, B, beta)
    cols = _sorted(D.cols)
    if args.format == "json":
        _emit_json(
            out,
            {
                "delta": delta.ok,
                "delta_violations": delta.violations,
                "delta_a": delta_a.ok,
                "delta_a_violations": delta_a.violations,
                "basic_set": [x.to_json() for x in _sorted(B)],
                "beta": [{"from": mu.to_json(), "to": beta[mu].to_json()} for mu in cols],
            },
        )
    else:
        ok = lambda r: "OK" if r else "FAIL"  # noqa: E731
        out.write(f"Δ: {ok(delta)}, Δ_a: {ok(delta_a)}\n")
        for v in delta.violations + delta_a.violations:
            out.write(f"  {v}\n")
        out.write("beta:\n")
        out.writelines(f"  {mu} -> {beta[mu]}  (a={avals[beta[mu]]})\n" for mu in cols)
    return 0 if delta and delta_a else 1


COMMANDS = {
    "enumerate": cmd_enumerate,
    "a-value": cmd_a_value,
    "j-induce": cmd_j_induce,
    "crystal": cmd_crystal,
    "flotw": cmd_flotw,
    "params": cmd_params,
    "basic-set": cmd_basic_set,
    "verify": cmd_verify,
}


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    # "--u -1,0" would otherwise be read as an unknown option
    out, it = [], iter(argv)
    for tok in it:
        if tok == "--u":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--u={nxt}")
        else:
            out.append(tok)
    return out


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        status = COMMANDS[args.command](args, out)
    except (ValueError, ArithmeticError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    return status or 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
