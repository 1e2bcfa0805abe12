"""``fibsum`` command line.

Exit codes: 0 when everything verified, 1 when at least one check failed,
2 on usage errors (unknown identity, malformed range, out-of-range argument).
"""
from __future__ import annotations

import argparse
import sys
import time
from typing import Optional, Sequence

from . import catalog as cat
from . import kernels, report, sequences
from .poly import MAX_N as POLY_MAX_N, Dattoli, check_dattoli
from .verifier import GridSpec, IntRange, RandomSpec, default_jobs, verify_all, verify_many

RANGE_OPTIONS = ("--n", "--r", "--s", "--t")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # one-line diagnostic, exit code 2
        self.exit(2, f"fibsum: error: {message}\n")


def _normalize_argv(argv: Sequence[str]) -> list[str]:
    # "--r -6..6" would otherwise be read as an unknown option "-6..6"
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in RANGE_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-") and not argv[i + 1].startswith("--"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _range(text: str) -> IntRange:
    try:
        return IntRange.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fibsum", description="Exact verification of Fibonacci/Lucas binomial-sum identities.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("list", help="list catalog entries")

    v = sub.add_parser("verify", help="verify identities on a grid or by seeded sampling")
    which = v.add_mutually_exclusive_group()
    which.add_argument("--all", action="store_true", help="whole catalog plus auxiliary sweeps")
    which.add_argument("--id", dest="identity", help="a single identity id (or 'all')")
    for opt, default in zip(RANGE_OPTIONS, (IntRange(0, 24), IntRange(-6, 6), IntRange(-6, 6), IntRange(-6, 6))):
        v.add_argument(opt, type=_range, default=default, metavar="LO..HI")
    v.add_argument("--seed", type=int, help="run seeded random sampling instead of the grid")
    v.add_argument("--samples", type=int, default=500)
    v.add_argument("--magnitude", type=int, default=40, help="bound M: n <= M, |r|,|s|,|t| <= M")
    v.add_argument("--format", choices=("json", "tsv", "human"), default="human")
    v.add_argument("--jobs", type=int, default=None, help="worker processes (default: CPU count)")
    v.add_argument("--timings", action="store_true", help="include wall times in json/tsv output")

    pl = sub.add_parser("poly", help="check the polynomial identities for n = 0..N")
    pl.add_argument("--id", dest="which", required=True, choices=[d.value for d in Dattoli])
    pl.add_argument("--n-max", type=int, required=True)

    e = sub.add_parser("eval", help="print F_n or L_n exactly")
    e.add_argument("--seq", required=True, choices=("fib", "lucas"))
    e.add_argument("--index", type=int, required=True)

    b = sub.add_parser("bench", help="time the sequence kernels")
    b.add_argument("--repeat", type=int, default=3)
    return p


def cmd_list(descs: Sequence[cat.IdentityDescriptor], out) -> int:
    for d in descs:
        flags = ", ".join(d.params.flags()) or "-"
        print(f"{d.id}\t{d.family.value}\t{d.params.used()}\t{flags}\t{d.paper_anchor}", file=out)
    return 0


def cmd_verify(args, descs: Sequence[cat.IdentityDescriptor], out) -> int:
    selected = descs
    run_all = args.all or args.identity in (None, "all")
    if not run_all:
        match = [d for d in descs if d.id == args.identity]
        if not match:
            raise UsageError(f"unknown identity id {args.identity!r}")
        selected = match
    try:
        grid = GridSpec(args.n, args.r, args.s, args.t)
        rand = RandomSpec(args.seed, args.samples, args.magnitude) if args.seed is not None else None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if jobs < 1:
        raise UsageError("--jobs must be >= 1")

    if rand is not None:
        reports = verify_many(selected, None, rand, jobs)
    elif run_all:
        reports = verify_all(grid, jobs=jobs, descs=selected)
    else:
        reports = verify_many(selected, grid, None, jobs)

    if args.format == "json":
        out.write(report.to_json(reports, timings=args.timings))
    elif args.format == "tsv":
        out.write(report.to_tsv(reports, timings=args.timings))
    else:
        out.write(report.to_human(reports))
    return 0 if all(r.ok for r in reports) else 1


def cmd_poly(which: str, n_max: int, out) -> int:
    if not 0 <= n_max <= POLY_MAX_N:
        raise UsageError(f"--n-max must lie in [0, {POLY_MAX_N}]")
    w = Dattoli(which)
    ok = True
    for n in range(n_max + 1):
        passed = check_dattoli(w, n)
        ok &= passed
        print(f"{w.name}\tn={n}\t{'pass' if passed else 'FAIL'}", file=out)
    return 0 if ok else 1


def _allow_long_int_str() -> None:
    # exact decimal output of F_n beyond n ~ 20000 exceeds the default digit limit
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


def cmd_eval(seq: str, index: int, out) -> int:
    if abs(index) > sequences.MAX_INDEX:
        raise UsageError("--index must satisfy |index| <= 2^31")
    _allow_long_int_str()
    value = sequences.fib(index) if seq == "fib" else sequences.lucas(index)
    print(value, file=out)
    return 0


def _best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def cmd_bench(repeat: int, out) -> int:
    _allow_long_int_str()
    backends = list(kernels.BACKENDS)
    header = ["index", "digits"] + [f"{b} doubling" for b in backends] + ["iterative oracle"]
    rows = []
    for idx in (10**3, 10**4, 10**5):
        expected = sequences.fib_oracle(idx)
        row = [str(idx), str(len(str(abs(expected))))]
        for name in backends:
            fp = kernels.get_backend(name).fib_pair
            if fp(idx)[0] != expected:
                print(f"fibsum: {name} kernel disagrees with the oracle at {idx}", file=sys.stderr)
                return 1
            row.append(f"{_best_of(lambda: fp(idx), repeat) * 1e6:.1f} us")
        row.append(f"{_best_of(lambda: sequences.fib_oracle(idx), repeat) * 1e6:.1f} us")
        rows.append(row)

    # end to end: one grid verification under each backend, cold caches
    grid = GridSpec(IntRange(0, 12), IntRange(-4, 4), IntRange(-4, 4), IntRange(-4, 4))
    desc = cat.get_identity("THM1-F")
    e2e = []
    previous = kernels.BACKEND
    try:
        for name in backends:
            kernels.use_backend(name)
            sequences.fib_lucas.cache_clear()
            sequences.binomial_row.cache_clear()
            cat._weights.cache_clear()
            start = time.perf_counter()
            rep = verify_many([desc], grid)[0]
            e2e.append((name, time.perf_counter() - start, rep.ok))
    finally:
        kernels.use_backend(previous)

    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    print(f"kernel backend in use: {kernels.BACKEND}", file=out)
    for r in [header] + rows:
        print("  ".join(c.rjust(w) for c, w in zip(r, widths)), file=out)
    print("THM1-F grid n 0..12, r,s,t -4..4:", file=out)
    for name, secs, ok in e2e:
        print(f"  {name:>8}: {secs:.3f} s ({'pass' if ok else 'FAIL'})", file=out)
    return 0


def main(argv: Optional[Sequence[str]] = None,
         catalog: Optional[Sequence[cat.IdentityDescriptor]] = None) -> int:
    """Entry point; ``catalog`` substitutes the identity list (used by mutation tests)."""
    argv = _normalize_argv(sys.argv[1:] if argv is None else list(argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    descs = list(catalog) if catalog is not None else cat.enumerate_catalog()
    out = sys.stdout
    try:
        if args.command == "list":
            return cmd_list(descs, out)
        if args.command == "verify":
            return cmd_verify(args, descs, out)
        if args.command == "poly":
            return cmd_poly(args.which, args.n_max, out)
        if args.command == "eval":
            return cmd_eval(args.seq, args.index, out)
        return cmd_bench(args.repeat, out)
    except UsageError as exc:
        print(f"fibsum: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
