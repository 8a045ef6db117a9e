"""Command-line front end.

    simconj analyze --alpha "(1 2 3 4 5 6)" --beta "(3 2 1 5 4 6)"
    simconj invert  --alpha "(1 2)(3 4)" --beta "(1 3 5)(2 4 6)"
    simconj verify  --alpha "(1 2)" --beta "(3 4)" --gamma "()"
    simconj sweep   --n 5
    simconj sharpness --n 7 --target 5

Exit codes: 0 success, 1 no witness, 2 usage error, 3 budget exceeded.
``--format structured`` prints a JSON document with a fixed key order and
no timing fields, so identical commands give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import oracle
from .construct import ConstructionError, NotFound, OutOfScope, simultaneous_inverter
from .perm import Malformed, Permutation, commutator, conjugate, format_cycles, inverse, moved_points, parse_cycles
from .structure import InverseFactorPresent, StructureError, classify_case, factor_action, pair_profile

EXIT_OK, EXIT_NOT_FOUND, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--n", type=int, default=None, help="degree (default: largest point mentioned)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET, help="enumeration budget")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-fallback", action="store_true", help="do not fall back on the search oracle")
    p.add_argument("--format", choices=("human", "structured"), default="human")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="simconj", description="Simultaneous inversion of permutation pairs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pair(name, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("--alpha", required=True)
        sp.add_argument("--beta", required=True)
        return sp

    pair("analyze", "commutator, local inverse pairs, factor chains and case tag")
    pair("invert", "construct gamma inverting alpha and beta")
    pair("verify", "check a supplied gamma").add_argument("--gamma", required=True)
    sp = sub.add_parser("sweep", parents=[common], help="run the solver over all (or sampled) pairs of S_n")
    sp.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    sp.add_argument("--samples", type=int, default=10_000)
    sp.add_argument("--dedup", action="store_true", help="one alpha per conjugacy class, weighted")
    sp.add_argument("--cross-check", type=float, default=0.0, help="fraction of pairs checked by coset scan")
    sp = sub.add_parser("sharpness", parents=[common], help="pairs with no inverter at a given commutator support")
    sp.add_argument("--target", type=int, default=5)
    sp.add_argument("--limit", type=int, default=10, help="number of pairs to list")
    return parser


def _perm(text: str, flag: str, n: int | None) -> Permutation:
    try:
        return parse_cycles(text, n)
    except Malformed as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _inputs(args, names=("alpha", "beta")) -> dict[str, Permutation]:
    perms = {k: _perm(getattr(args, k), f"--{k}", args.n) for k in names}
    n = max([args.n or 0] + [p.degree for p in perms.values()])
    return {k: p.extended(n) for k, p in perms.items()}


def _echo(command: str, inputs: dict[str, Permutation], args) -> list[str]:
    out = [command]
    for k, p in inputs.items():
        out += [f"--{k}", format_cycles(p)]
    if args.n is not None:
        out += ["--n", str(args.n)]
    if getattr(args, "no_fallback", False):
        out.append("--no-fallback")
    return out


def _profile(g: Permutation, h: Permutation) -> dict:
    try:
        prof = pair_profile(g, h)
    except InverseFactorPresent as exc:
        return {"error": str(exc)}
    return {
        "pairs": [list(p.points) for p in prof.pairs],
        "free": sorted(prof.free),
        "moved_by_product": len(moved_points(g * h)),
    }


def cmd_analyze(args) -> tuple[int, dict]:
    ins = _inputs(args)
    a, b = ins["alpha"], ins["beta"]
    c = commutator(a, b)
    n = a.degree
    out: dict = {
        "degree": n,
        "commutator": format_cycles(c),
        "moved": len(moved_points(c)),
        "fixed": n - len(moved_points(c)),
        "alpha_conjugate": format_cycles(conjugate(a, b)),
        "profile": _profile(a, b),
    }
    fa = factor_action(a, b)
    out["orbits"] = [[format_cycles(Permutation.from_cycles([fa.cycles[i]])) for i in o] for o in fa.orbits()]
    out["chains"] = [[format_cycles(Permutation.from_cycles([fa.cycles[i]])) for i in ch] for ch in fa.chains()]
    try:
        tag = classify_case(a, b)
        out["case"] = tag.case.value
        if tag.binding is not None:
            out["binding"] = tag.binding.as_dict()
    except StructureError as exc:
        out["case"] = f"error: {exc}"
    return EXIT_OK, {"command": _echo("analyze", ins, args), "inputs": _canon(ins), "outputs": out}


def _canon(ins: dict[str, Permutation]) -> dict[str, str]:
    return {k: format_cycles(p) for k, p in ins.items()}


def cmd_invert(args) -> tuple[int, dict]:
    ins = _inputs(args)
    a, b = ins["alpha"], ins["beta"]
    moved = len(moved_points(commutator(a, b)))
    base = {"command": _echo("invert", ins, args), "inputs": _canon(ins)}
    try:
        cert = simultaneous_inverter(a, b, allow_fallback=not args.no_fallback)
    except NotFound:
        base["outputs"] = {"moved": moved, "result": "NotFound", "message": f"no gamma exists; |M([alpha,beta])| = {moved}"}
        return EXIT_NOT_FOUND, base
    except OutOfScope:
        base["outputs"] = {"moved": moved, "result": "OutOfScope", "message": f"|M([alpha,beta])| = {moved} > 4"}
        return EXIT_NOT_FOUND, base
    except (ConstructionError, StructureError) as exc:
        base["outputs"] = {"moved": moved, "result": "ConstructionFailed", "message": str(exc)}
        return EXIT_NOT_FOUND, base
    out = {
        "moved": moved,
        "result": "Found",
        "gamma": format_cycles(cert.gamma),
        "method": cert.method.value,
        "case": cert.tag.case.value if cert.tag else None,
        "verified": cert.verified,
        "support_shrunk": cert.support_shrunk,
        "trace": list(cert.trace),
    }
    base["outputs"] = out
    return EXIT_OK, base


def cmd_verify(args) -> tuple[int, dict]:
    ins = _inputs(args, ("alpha", "beta", "gamma"))
    a, b, g = ins["alpha"], ins["beta"], ins["gamma"]
    ok_a = conjugate(a, g) == inverse(a)
    ok_b = conjugate(b, g) == inverse(b)
    out = {"alpha_inverted": ok_a, "beta_inverted": ok_b, "valid": ok_a and ok_b}
    return (EXIT_OK if out["valid"] else EXIT_NOT_FOUND), {
        "command": _echo("verify", ins, args),
        "inputs": _canon(ins),
        "outputs": out,
    }


def _need_n(args) -> int:
    if args.n is None or args.n < 1:
        raise UsageError("--n: a positive degree is required")
    return args.n


def cmd_sweep(args) -> tuple[int, dict]:
    n = _need_n(args)
    rep = oracle.theorem_sweep(
        n,
        mode=args.mode,
        budget=args.budget,
        seed=args.seed,
        samples=args.samples,
        dedup=args.dedup,
        jobs=args.jobs,
        cross_check=args.cross_check,
    )
    out = rep.as_dict()
    cmd = ["sweep", "--n", str(n), "--mode", args.mode, "--seed", str(args.seed)]
    if args.mode == "sampled":
        cmd += ["--samples", str(args.samples)]
    if args.dedup:
        cmd.append("--dedup")
    if args.cross_check:
        cmd += ["--cross-check", str(args.cross_check)]
    code = EXIT_OK if not rep.failures and not rep.disagreements else EXIT_NOT_FOUND
    return code, {"command": cmd, "inputs": {"n": n}, "outputs": out}


def cmd_sharpness(args) -> tuple[int, dict]:
    n = _need_n(args)
    res = oracle.sharpness_search(n, args.target, args.budget)
    listed = []
    for i, (a, b) in enumerate(res):
        if i >= args.limit:
            break
        listed.append([format_cycles(a), format_cycles(b)])
    out = {
        "target": args.target,
        "count": len(res),
        "class_representatives": len(res.representatives()),
        "pairs": listed,
    }
    cmd = ["sharpness", "--n", str(n), "--target", str(args.target), "--limit", str(args.limit)]
    return EXIT_OK, {"command": cmd, "inputs": {"n": n}, "outputs": out}


COMMANDS = {
    "analyze": cmd_analyze,
    "invert": cmd_invert,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "sharpness": cmd_sharpness,
}


def _human(report: dict) -> str:
    lines = ["$ simconj " + " ".join(_quote(t) for t in report["command"])]

    def emit(key, value, indent):
        pad = "  " * indent
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            for k, v in value.items():
                emit(k, v, indent + 1)
        else:
            lines.append(f"{pad}{key}: {value}")

    for k, v in report.get("outputs", {}).items():
        emit(k, v, 0)
    lines.append(f"status: {report['status']}")
    return "\n".join(lines)


def _quote(t: str) -> str:
    return f'"{t}"' if any(ch in t for ch in " ()") else t


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    fmt = "structured" if "structured" in argv and "--format" in argv else "human"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        code, report = COMMANDS[args.command](args)
        wall = report.get("outputs", {}).pop("wall_time", None)
    except UsageError as exc:
        msg = str(exc)
        for i, tok in enumerate(argv):
            if tok.startswith("-") and tok in msg.split():
                msg += f" (argument {i + 1}, token {tok!r})"
                break
        code, report, wall = EXIT_USAGE, {"command": argv, "error": f"usage: {msg}"}, None
    except oracle.BudgetExceeded as exc:
        code, report, wall = EXIT_BUDGET, {"command": argv, "error": str(exc)}, None
    report["status"] = code
    if fmt == "structured":
        print(json.dumps(report, indent=2), file=stdout)
    elif "error" in report:
        print(f"error: {report['error']}", file=stdout)
    else:
        text = _human(report)
        if wall is not None:
            text += f"\nwall_time: {wall:.3f}s"
        print(text, file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
