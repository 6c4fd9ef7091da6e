"""Command-line front end: ``twisted-hurwitz <command> [options]``.

Results go to stdout and diagnostics to stderr.  Exit codes: 0 ok,
1 mismatch between models or a failed self-check, 2 invalid input,
3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Callable, Sequence

from . import golden
from .errors import DegeneracyError, DomainError, ResourceError
from .hurwitz import DEFAULT_MAX_WORK, _check_budget, enumerate_hurwitz
from .jack import hurwitz_by_zonal, jack_polynomial, verify_cauchy, zonal
from .partitions import Partition, hook_products, parse_partition, partitions_of
from .permutations import format_cycles
from .surgery import analyze, count_decompositions, parse_word, xi
from .symfunc import (
    PSeries,
    apply_twisted_cutjoin,
    cj_matrix_element_formula,
    format_series,
    generating_table,
    hurwitz_by_cutjoin,
    p_monomial,
    parse_series,
)

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3
METHODS = ("enumerate", "cutjoin", "zonal")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"not a rational number: {text!r}") from None


def fraction_to_json(q: Fraction) -> dict[str, str]:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def fraction_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _require(value, flag: str):
    if value is None:
        raise DomainError(f"{flag} is required for this command")
    return value


def _nonneg(value: int, flag: str) -> int:
    if value < 0:
        raise DomainError(f"{flag} must be non-negative, got {value}")
    return value


# ---------------------------------------------------------------- commands


def _hurwitz_value(method: str, m: int, lam: Partition, args) -> Fraction:
    if method == "enumerate":
        if lam.weight < 1:
            raise DomainError("the enumeration method needs |lambda| >= 1")
        counts = enumerate_hurwitz(lam.weight, m, workers=args.threads, max_work=args.max_work)
        return counts.values[lam]
    if method == "cutjoin":
        return hurwitz_by_cutjoin(m, lam)
    return hurwitz_by_zonal(m, lam)


def cmd_hurwitz(args, out) -> int:
    m = _nonneg(_require(args.m, "--m"), "--m")
    lam = parse_partition(_require(args.lam, "--lambda"))
    methods = METHODS if args.method == "all" else (args.method,)
    if "enumerate" in methods and lam.weight >= 1:
        _check_budget(lam.weight, m, args.max_work)
    values = {name: _hurwitz_value(name, m, lam, args) for name in methods}
    agree = len(set(values.values())) == 1
    if args.format == "json":
        doc = {"m": m, "lambda": list(lam), "values": {k: fraction_to_json(v) for k, v in values.items()}}
        if len(methods) > 1:
            doc["verdict"] = "AGREE" if agree else "MISMATCH"
        print(_dump(doc), file=out)
    else:
        for name, value in values.items():
            print(f"{name}: {_fmt(value)}", file=out)
        if len(methods) > 1:
            print("AGREE" if agree else "MISMATCH", file=out)
    return EXIT_OK if agree else EXIT_MISMATCH


def table_rows(n_max: int, m_max: int) -> list[dict]:
    return [
        {"n": lam.weight, "m": m, "lambda": list(lam), "value": fraction_to_json(value)}
        for m, lam, value in generating_table(n_max, m_max)
    ]


def emit_table(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return "\n".join(_dump(row) for row in rows)
    lines = []
    for row in rows:
        lam = ",".join(map(str, row["lambda"]))
        lines.append(f"m={row['m']} n={row['n']} lambda=({lam}) value={_fmt(fraction_from_json(row['value']))}")
    return "\n".join(lines)


def parse_table(text: str) -> list[dict]:
    """Inverse of the JSON table emission: one object per non-empty line."""
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def cmd_table(args, out) -> int:
    n_max = _nonneg(_require(args.n, "--n"), "--n")
    m_max = _nonneg(_require(args.m, "--m"), "--m")
    text = emit_table(table_rows(n_max, m_max), args.format)
    if text:
        print(text, file=out)
    return EXIT_OK


def _print_jack(lam: Partition, alpha: Fraction, fmt: str, out) -> None:
    j = jack_polynomial(lam, alpha)
    h, hp = hook_products(lam, alpha)
    if fmt == "json":
        doc = {
            "lambda": list(lam),
            "alpha": fraction_to_json(alpha),
            "eigenvalue": fraction_to_json(j.eigenvalue),
            "hook_products": [fraction_to_json(h), fraction_to_json(hp)],
            "terms": [{"p": list(mu), "coeff": fraction_to_json(c)} for mu, c in j.expansion.items()],
        }
        print(_dump(doc), file=out)
    else:
        print(f"J[{lam}] (alpha={_fmt(alpha)}) = {format_series(j.expansion)}", file=out)
        print(f"eigenvalue: {_fmt(j.eigenvalue)}", file=out)
        print(f"hook products: H={_fmt(h)} H'={_fmt(hp)} HH'={_fmt(h * hp)}", file=out)


def cmd_jack(args, out) -> int:
    lam = parse_partition(_require(args.lam, "--lambda"))
    alpha = _rational(args.alpha) if args.alpha is not None else Fraction(1)
    _print_jack(lam, alpha, args.format, out)
    return EXIT_OK


def cmd_zonal(args, out) -> int:
    _print_jack(parse_partition(_require(args.lam, "--lambda")), Fraction(2), args.format, out)
    return EXIT_OK


def cmd_surface(args, out) -> int:
    word = args.word if args.word is not None else ""
    rd = parse_word(word, args.n)
    report = analyze(rd)
    seq = xi(rd)
    xi_cycles = [format_cycles(s.as_permutation(2 * rd.n)) for s in seq.sigmas]
    if args.format == "json":
        doc = report.to_dict()
        doc["word"] = str(rd)
        doc["xi"] = xi_cycles
        print(_dump(doc), file=out)
    else:
        print(f"word: {rd or '(empty)'} on n={rd.n} disks", file=out)
        print(f"xi: {' '.join(xi_cycles) or '(empty)'}", file=out)
        print(f"euler characteristic: {report.euler_characteristic}", file=out)
        print(f"boundary type: ({report.boundary_type})", file=out)
        print(f"cover boundary type: ({report.cover_boundary_type})", file=out)
        for c in report.components:
            kind = "orientable" if c.orientable else "non-orientable"
            disks = ",".join(map(str, c.disks))
            print(
                f"component {{{disks}}}: chi={c.euler_characteristic}, {kind}, "
                f"boundary ({c.boundary_partition}): {c.classification}",
                file=out,
            )
    return EXIT_OK


def cmd_matrix(args, out) -> int:
    """Print the nonzero entries [p_mu] CJ~(p_lam) on weight n and cross-check them against the operator."""
    n = _nonneg(_require(args.n, "--n"), "--n")
    basis = partitions_of(n)
    ok = True
    rows = []
    for lam in basis:
        image = apply_twisted_cutjoin(p_monomial(lam))
        for mu in basis:
            entry = cj_matrix_element_formula(lam, mu)
            if image.coeff(mu) != entry:
                ok = False
                print(f"mismatch at {lam} -> {mu}: formula {entry}, operator {image.coeff(mu)}", file=sys.stderr)
            if entry:
                rows.append((lam, mu, entry))
    if args.format == "json":
        print(_dump([{"from": list(a), "to": list(b), "entry": e} for a, b, e in rows]), file=out)
    else:
        for a, b, e in rows:
            print(f"({a}) -> ({b}): {e}", file=out)
    return EXIT_OK if ok else EXIT_MISMATCH


# ---------------------------------------------------------------- selfcheck


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[], tuple[object, object]]  # (expected, actual)


def _zonal_checks() -> list[Check]:
    checks = []
    for lam, (series, hooks) in golden.ZONAL.items():
        checks.append(Check(f"zonal{list(lam)}", lambda lam=lam, s=series: (parse_series(s), zonal(lam).expansion)))
        checks.append(
            Check(f"hook_products{list(lam)}", lambda lam=lam, h=hooks: (Fraction(h), prod(hook_products(lam, 2))))
        )
    return checks


def _hurwitz_checks() -> list[Check]:
    checks = []
    for (m, lam), value in golden.HURWITZ.items():
        for method in METHODS:
            fn = {
                "enumerate": lambda m=m, lam=lam: enumerate_hurwitz(sum(lam), m).values[Partition(lam)],
                "cutjoin": lambda m=m, lam=lam: hurwitz_by_cutjoin(m, lam),
                "zonal": lambda m=m, lam=lam: hurwitz_by_zonal(m, lam),
            }[method]
            checks.append(Check(f"hurwitz[m={m},{list(lam)}]/{method}", lambda v=value, fn=fn: (Fraction(v), fn())))
    return checks


def _moebius_check() -> Check:
    def run():
        report = analyze(parse_word(golden.MOEBIUS_WORD))
        (comp,) = report.components
        actual = {
            "orientable": comp.orientable,
            "euler_characteristic": report.euler_characteristic,
            "boundary_type": tuple(report.boundary_type),
            "cover_boundary_type": tuple(report.cover_boundary_type),
            "classification": comp.classification,
        }
        return dict(golden.MOEBIUS), actual

    return Check("moebius", run)


def _sweep(n: int, m: int) -> tuple[dict, dict]:
    """Enumeration is the reference; every other model must reproduce it per partition."""
    reference = enumerate_hurwitz(n, m).values
    nf = factorial(n)
    models = {
        "cutjoin": {lam: hurwitz_by_cutjoin(m, lam) for lam in partitions_of(n)},
        "zonal": {lam: hurwitz_by_zonal(m, lam) for lam in partitions_of(n)},
        "surgery": {lam: Fraction(c, nf) for lam, c in count_decompositions(n, m).items()},
    }
    return {k: reference for k in models}, models


def _full_checks() -> list[Check]:
    checks = [Check(f"sweep[n={n},m={m}]", lambda n=n, m=m: _sweep(n, m)) for n in range(1, 5) for m in range(4)]
    for n in range(1, 6):
        for alpha in (1, 2):
            checks.append(Check(f"cauchy[n={n},alpha={alpha}]", lambda n=n, a=alpha: (True, verify_cauchy(n, a))))
    return checks


def selfcheck_checks(level: str) -> list[Check]:
    checks = _zonal_checks() + _hurwitz_checks() + [_moebius_check()]
    if level == "full":
        checks += _full_checks()
    return checks


def cmd_selfcheck(args, out) -> int:
    failures = 0
    for check in selfcheck_checks(args.level):
        expected, actual = check.run()
        if expected == actual:
            print(f"PASS {check.name}", file=out)
        else:
            failures += 1
            print(f"FAIL {check.name}", file=out)
            print(f"  expected: {_show(expected)}", file=out)
            print(f"  actual:   {_show(actual)}", file=out)
    print(f"{failures} failing check(s)" if failures else "all checks passed", file=out)
    return EXIT_MISMATCH if failures else EXIT_OK


def _show(value) -> str:
    if isinstance(value, PSeries):
        return format_series(value)
    if isinstance(value, Fraction):
        return _fmt(value)
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_show(v)}" for k, v in value.items()) + "}"
    return str(value)


# ---------------------------------------------------------------- entry point


COMMANDS = {
    "hurwitz": cmd_hurwitz,
    "table": cmd_table,
    "jack": cmd_jack,
    "zonal": cmd_zonal,
    "surface": cmd_surface,
    "matrix": cmd_matrix,
    "selfcheck": cmd_selfcheck,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twisted-hurwitz", description="Exact twisted Hurwitz numbers and zonal polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, help_text: str, *flags: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        if "n" in flags:
            p.add_argument("--n", type=int)
        if "m" in flags:
            p.add_argument("--m", type=int)
        if "lambda" in flags:
            p.add_argument("--lambda", dest="lam", metavar="PARTS", help='comma-separated parts, e.g. "2,1"')
        if "format" in flags:
            p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("hurwitz", "one twisted Hurwitz number", "m", "lambda", "format")
    p.add_argument("--method", choices=METHODS + ("all",), default="all")
    p.add_argument("--max-work", type=int, default=DEFAULT_MAX_WORK, help="enumeration budget in products")
    p.add_argument("--threads", type=int, default=1, help="worker processes for enumeration")

    add("table", "all values with 1 <= |lambda| <= n, m' <= m", "n", "m", "format")

    p = add("jack", "Jack polynomial in power sums", "lambda", "format")
    p.add_argument("--alpha", help='rational, e.g. "1/2" (default 1)')

    add("zonal", "zonal polynomial (alpha = 2)", "lambda", "format")

    p = add("surface", "analyze a ribbon-gluing word", "n", "format")
    p.add_argument("--word", help='e.g. "G[1,2]^{++};G[2,3]^{++};G[1,3]^{+-}"')

    add("matrix", "cut-and-join matrix on weight n", "n", "format")

    p = add("selfcheck", "run the built-in golden checks")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except DomainError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DegeneracyError as exc:
        print(f"degenerate input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"resource limit: {exc}; raise --max-work or reduce n/m", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
