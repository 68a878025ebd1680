"""Command-line front end: ``compute``, ``verify``, ``sweep`` and ``report``.

Exit codes: 0 when every theorem-backed case matches, 1 when at least one
does not, 2 on usage or I/O errors.
"""

import argparse
import os
import sys

from . import report
from .arith import PrimePower, enumerate_primitive_roots, jacobi
from .classnum import class_number_neg_p
from .constructions import (
    count_Np,
    mul_perm,
    power_perm,
    sequence_A,
    sigma_g_perm,
    sigma_ij,
    tau_p_perm,
)
from .errors import ZolotarevError
from .verifier import (
    REQUIRED_PARAMS,
    THEOREM_IDS,
    SweepRange,
    TheoremCase,
    summarize,
    sweep,
    verify,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

CONSTRUCTIONS = ("mul", "power", "sigma-ij", "tau-star", "sigma-g")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"missing --{' --'.join(missing)}")
    return [getattr(args, n) for n in names]


def _roots_arg(text):
    if text == "all":
        return "all"
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected 'all' or a positive integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("expected 'all' or a positive integer")
    return value


def _build_sign(args):
    c = args.construction
    if c is None:
        raise UsageError("compute sign needs --construction")
    if c == "mul":
        n, a = _need(args, "n", "a")
        return f"mul n={n} a={a}", mul_perm(n, a)
    if c == "power":
        p, k = _need(args, "p", "k")
        return f"power p={p} k={k}", power_perm(p, k)
    if c == "sigma-ij":
        i, j, p = _need(args, "i", "j", "p")
        return f"sigma_{{{i},{j}}} p={p}", sigma_ij(i, j, p)
    if c == "tau-star":
        (p,) = _need(args, "p")
        return f"tau_{p}", tau_p_perm(p)
    (p, g) = _need(args, "p", "g")
    r = args.r or 1
    return f"sigma_g p={p} r={r} g={g}", sigma_g_perm(PrimePower(p, r), g)


def cmd_compute(args, out):
    what = args.what
    if what == "sign":
        label, perm = _build_sign(args)
        print(f"sgn({label}) = {perm.sign():+d}", file=out)
        if args.show:
            print("one-line:", " ".join(map(str, perm.one_line())), file=out)
            cycles = perm.cycles()
            print("cycles:", "".join("(" + " ".join(map(str, c)) + ")" for c in cycles) or "()", file=out)
    elif what == "jacobi":
        a, n = _need(args, "a", "n")
        print(jacobi(a, n), file=out)
    elif what == "classnum":
        (p,) = _need(args, "p")
        res = class_number_neg_p(p)
        print(f"h(-{p}) = {res.h}", file=out)
        if args.show:
            print(f"sum_(i<=(p-1)/2) (i/p) = {res.eval_character_sum}", file=out)
            print(f"sum_(i<=p-1) i*(i/p) = {res.eval_weighted_sum}", file=out)
    elif what == "primroots":
        (p,) = _need(args, "p")
        roots = enumerate_primitive_roots(PrimePower(p, args.r or 1), limit=args.limit)
        print(" ".join(map(str, roots)), file=out)
    elif what == "np":
        (p,) = _need(args, "p")
        print(f"N_{p} = {count_Np(p)}", file=out)
    elif what == "sequence":
        i, p = _need(args, "i", "p")
        seq = sequence_A(i, p)
        print(f"{seq.label}: " + " ".join(map(str, seq)), file=out)
    return EXIT_OK


def _case_from_args(args):
    params = {}
    for name in REQUIRED_PARAMS[args.theorem]:
        value = getattr(args, name)
        if value is None and name == "r":
            value = 1
        if value is None:
            raise UsageError(f"{args.theorem} needs --{name}")
        params[name] = value
    extra = [n for n in ("p", "n", "a", "k", "r", "g")
             if n not in params and getattr(args, n) is not None]
    if extra:
        raise UsageError(f"{args.theorem} does not take --{' --'.join(extra)}")
    return TheoremCase(args.theorem, params)


def cmd_verify(args, out):
    record = verify(_case_from_args(args))
    out.write(report.render([record], args.format, out))
    return EXIT_MISMATCH if record.failed else EXIT_OK


def _check_writable(path):
    parent = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(parent) or not os.access(parent, os.W_OK):
        raise OSError(f"cannot write to {path}")
    if os.path.isdir(path) or (os.path.exists(path) and not os.access(path, os.W_OK)):
        raise OSError(f"cannot write to {path}")


def cmd_sweep(args, out):
    if args.out:
        _check_writable(args.out)
    rng = SweepRange(
        pmin=args.pmin, pmax=args.pmax, kmax=args.kmax,
        rmax_modulus=args.rmax_modulus, roots=args.roots,
        units=args.units, seed=args.seed,
    )
    records = sweep(args.theorem, rng, jobs=args.jobs)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(report.render(records, args.format, fh))
        summary_stream = out
    else:
        out.write(report.render(records, args.format, out))
        summary_stream = sys.stderr
    counts = summarize(records)
    print(f"{args.theorem}: " + report.format_summary(counts), file=summary_stream)
    return EXIT_MISMATCH if any(r.failed for r in records) else EXIT_OK


def cmd_report(args, out):
    records = []
    for path in args.inputs:
        records.extend(report.load_report(path))
    unique = {}
    for rec in records:
        unique.setdefault(tuple(report.to_row(rec).values()), rec)
    merged = sorted(unique.values(), key=lambda r: r.case.sort_key())
    if args.out:
        _check_writable(args.out)
        fmt = "json" if args.out.endswith(".json") else "csv"
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(report.render(merged, fmt))
    by_theorem = report.summary_by_theorem(merged)
    for tid, counts in by_theorem.items():
        print(f"{tid}: " + report.format_summary(counts), file=out)
    print("all: " + report.format_summary(summarize(merged)), file=out)
    flagged = [r for r in merged if r.status not in ("match", "conjecture-match")]
    if flagged:
        print("non-matches:", file=out)
        out.write(report.render_csv(flagged))
    return EXIT_MISMATCH if any(r.failed for r in merged) else EXIT_OK


def build_parser():
    parser = _Parser(prog="zolotarev", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add_params(p, names):
        for name in names:
            p.add_argument(f"--{name}", type=int)

    c = sub.add_parser("compute", help="compute a single value")
    c.add_argument("what", choices=("sign", "jacobi", "classnum", "primroots", "np", "sequence"))
    c.add_argument("--construction", choices=CONSTRUCTIONS)
    add_params(c, ("p", "n", "a", "k", "r", "g", "i", "j", "limit"))
    c.add_argument("--show", action="store_true", help="print supporting detail")

    v = sub.add_parser("verify", help="verify one theorem case")
    v.add_argument("--theorem", required=True, choices=THEOREM_IDS)
    add_params(v, ("p", "n", "a", "k", "r", "g"))
    v.add_argument("--format", choices=("table", "csv", "json"), default="table")

    s = sub.add_parser("sweep", help="verify a theorem over a parameter range")
    s.add_argument("--theorem", required=True, choices=THEOREM_IDS)
    s.add_argument("--pmin", type=int, default=3)
    s.add_argument("--pmax", type=int, default=100)
    s.add_argument("--kmax", type=int, default=100)
    s.add_argument("--rmax-modulus", type=int, default=None)
    s.add_argument("--roots", type=_roots_arg, default=8)
    s.add_argument("--units", type=_roots_arg, default="all",
                   help="lerch multipliers per modulus: 'all' or a sample size")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--format", choices=("table", "csv", "json"), default="table")
    s.add_argument("--out")
    s.add_argument("--jobs", type=int, default=1)

    r = sub.add_parser("report", help="merge sweep reports and summarise them")
    r.add_argument("--in", dest="inputs", nargs="*", default=[])
    r.add_argument("--out")
    return parser


_COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "sweep": cmd_sweep, "report": cmd_report}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required: compute, verify, sweep or report")
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"zolotarev: usage error: {exc}", file=sys.stderr)
    except report.ReportFormatError as exc:
        print(f"zolotarev: malformed report: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"zolotarev: I/O error: {exc}", file=sys.stderr)
    except ZolotarevError as exc:
        print(f"zolotarev: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
