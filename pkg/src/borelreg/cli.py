"""Command-line front end.

Exit codes: 0 success, 1 computation error, 2 parse/usage error,
3 a bound violation found by ``verify``.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import List, Optional, TextIO

from . import betti, borel, decomposition, sweep, worked_examples
from .text import ParseError, format_components, format_document, parse_components, parse_document

EXIT_OK, EXIT_COMPUTE, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2, 3

IDEAL_COMMANDS = ("reg", "chain", "decompose", "power", "symbolic", "bracket", "is-borel", "reorder")


@dataclass
class JobSpec:
    command: str
    text: str = ""
    q: int = 1
    seed: int = 0
    trials: int = 1
    n: int = 3
    qmax: int = 3
    max_components: int = 4
    max_exponent: int = 6
    jobs: int = 1
    out: Optional[str] = None
    irr: bool = False
    oracle: bool = False
    mode: str = "primary"
    decomposition_text: Optional[str] = None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="borelreg", description="Regularity of Borel-type monomial ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("input", nargs="?", default="-", help="ideal file ('-' for stdin)")
        return sp

    sp = with_input("reg", "regularity via the sequential chain")
    sp.add_argument("--irr", action="store_true", help="also compute it from the irreducible decomposition")
    sp.add_argument("--oracle", action="store_true", help="also compute it from graded Betti numbers")
    with_input("chain", "list the sequential chain")
    sp = with_input("decompose", "irredundant decomposition")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--irreducible", dest="mode", action="store_const", const="irreducible")
    g.add_argument("--primary", dest="mode", action="store_const", const="primary")
    for name in ("power", "symbolic", "bracket"):
        sp = with_input(name, f"{name} power generators")
        sp.add_argument("-q", type=int, required=True)
        if name == "symbolic":
            sp.add_argument("--decomposition", help="file with one primary component per line")
    with_input("is-borel", "test the Borel-type property")
    with_input("reorder", "relabel variables to reach Borel type")

    sp = sub.add_parser("verify", help="seeded random check of the regularity bounds")
    sp.add_argument("--trials", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--qmax", type=int, default=3)
    sp.add_argument("--max-components", type=int, default=4)
    sp.add_argument("--max-exponent", type=int, default=6)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out", help="CSV path (default stdout)")

    sub.add_parser("example-suite", help="run the golden worked examples")
    return p


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def spec_from_args(args: argparse.Namespace) -> JobSpec:
    spec = JobSpec(command=args.command)
    if args.command in IDEAL_COMMANDS:
        spec.text = _read(args.input)
    for name in ("q", "seed", "trials", "n", "qmax", "max_components", "max_exponent", "jobs",
                 "out", "irr", "oracle", "mode"):
        if getattr(args, name, None) is not None:
            setattr(spec, name, getattr(args, name))
    if getattr(args, "decomposition", None):
        spec.decomposition_text = _read(args.decomposition)
    return spec


def _validate(spec: JobSpec) -> None:
    if spec.command in ("power", "symbolic", "bracket"):
        low = 0 if spec.command == "bracket" else 1
        if not low <= spec.q <= borel.Q_CAP:
            raise ParseError(f"-q must lie in {low}..{borel.Q_CAP}")
    if spec.command == "verify":
        if spec.trials < 1 or spec.n < 1 or spec.qmax < 1 or spec.jobs < 1:
            raise ParseError("--trials, --n, --qmax and --jobs must be positive")
        if spec.qmax > borel.Q_CAP:
            raise ParseError(f"--qmax must not exceed {borel.Q_CAP}")


def run(spec: JobSpec, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        _validate(spec)
        if spec.command in IDEAL_COMMANDS:
            ring, ideal = parse_document(spec.text)
            return _run_ideal(spec, ideal, out, err)
        if spec.command == "verify":
            return _run_verify(spec, out, err)
        if spec.command == "example-suite":
            checks = worked_examples.run_all()
            for c in checks:
                print(c.line(), file=out)
            return EXIT_OK if all(c.ok for c in checks) else EXIT_COMPUTE
        raise ParseError(f"unknown command {spec.command!r}")
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_USAGE
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_COMPUTE


def _run_ideal(spec: JobSpec, ideal, out: TextIO, err: TextIO) -> int:
    cmd = spec.command
    if cmd == "reg":
        r = borel.regularity_seq(ideal)
        print(r, file=out)
        status = EXIT_OK
        for flag, name, fn in ((spec.irr, "irr", borel.regularity_irr),
                               (spec.oracle, "oracle", betti.regularity_oracle)):
            if flag:
                other = fn(ideal)
                print(f"{name}: {other}", file=out)
                if other != r:
                    print(f"error: {name} regularity {other} differs from chain value {r}", file=err)
                    status = EXIT_COMPUTE
        return status
    if cmd == "chain":
        ch = borel.sequential_chain(ideal)
        for link in ch:
            print(f"{link.cut_index}: {link.ideal}", file=out)
        print(f"S: {ch.terminal}", file=out)
    elif cmd == "decompose":
        if spec.mode == "irreducible":
            comps = [(c.support, c.ideal()) for c in decomposition.irreducible_decomposition(ideal)]
        else:
            comps = [(c.radical, c.ideal) for c in decomposition.primary_decomposition(ideal)]
        out.write(format_components(ideal.ring, comps))
    elif cmd == "power":
        print(ideal.power(spec.q), file=out)
    elif cmd == "bracket":
        print(ideal.bracket_power(spec.q), file=out)
    elif cmd == "symbolic":
        dec = None
        if spec.decomposition_text is not None:
            _, dec = parse_components(spec.decomposition_text, ideal.ring)
        print(borel.symbolic_power(ideal, spec.q, dec), file=out)
    elif cmd == "is-borel":
        print("true" if borel.is_borel_type(ideal) else "false", file=out)
    elif cmd == "reorder":
        res = borel.reorder_to_borel(ideal)
        if res is None:
            print("none", file=out)
        else:
            perm, relabelled = res
            print("perm: " + " ".join(str(p) for p in perm), file=out)
            out.write(format_document(relabelled))
    return EXIT_OK


def _run_verify(spec: JobSpec, out: TextIO, err: TextIO) -> int:
    params = sweep.SweepParams(n=spec.n, qmax=spec.qmax, max_components=spec.max_components,
                               max_exponent=spec.max_exponent)
    trials = sweep.run_sweep(spec.trials, spec.seed, params, jobs=spec.jobs)
    if spec.out:
        with open(spec.out, "w", newline="") as fh:
            sweep.write_csv(trials, fh)
    else:
        sweep.write_csv(trials, out)
    bad = [t for t in trials if not t.report.all_hold]
    for t in bad:
        print(f"violation: seed={t.seed} q={t.report.q} report={t.report}", file=err)
        err.write(format_document(t.ideal))
    return EXIT_VIOLATION if bad else EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        spec = spec_from_args(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(spec)


if __name__ == "__main__":
    sys.exit(main())
