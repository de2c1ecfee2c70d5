"""Command-line surface: counting, enumeration, verification, series,
bijection round-trips, and the lattice-path correspondence.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
refusal.  Output is deterministic byte for byte, including across worker
counts, so it can be diffed or golden-filed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from threecycle import avoid132, avoid231, avoid321, oracle, perm, series
from threecycle.errors import MembershipError, PermutationError, ResourceLimitError


class UsageError(Exception):
    pass


def _parse_pattern_set(text: str) -> tuple[perm.Perm, ...]:
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise UsageError(f"empty pattern in {text!r}")
        try:
            sigma = perm.check_permutation(tuple(int(ch) for ch in token))
        except (ValueError, PermutationError):
            raise UsageError(f"not a pattern: {token!r}") from None
        out.append(sigma)
    if len(set(out)) != len(out):
        raise UsageError(f"duplicate patterns in {text!r}")
    return tuple(out)


def _parse_n_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(lo)]
    except ValueError:
        raise UsageError(f"bad n or n-range: {text!r}") from None
    if not values or values[0] < 1:
        raise UsageError(f"n values must be >= 1: {text!r}")
    return values


def _parse_form(text: str) -> str | None:
    if text == "all":
        return None
    if text in (perm.FORM_312, perm.FORM_231):
        return text
    raise UsageError(f"form must be all, 312 or 231: {text!r}")


_PATTERN_NAMES = ("123", "132", "213", "231", "312", "321")


def formula_count(n: int, patterns: Sequence[perm.Perm], form: str | None) -> int:
    """Dispatch to the closed-form/bijective counting route; raises UsageError
    for combinations the formulas do not cover."""
    patterns = tuple(patterns)
    if len(patterns) == 2:
        if form is not None:
            raise UsageError("no formula for pattern pairs with a form filter")
        return oracle.closed_form_pair(n, patterns)
    if len(patterns) != 1:
        raise UsageError("formula engine handles one pattern or a pair")
    sigma = "".join(str(v) for v in patterns[0])
    if form is None:
        if sigma in ("231", "312"):
            return avoid231.count_231(n)
        if sigma in ("132", "213"):
            return avoid132.count_132(n)
        if sigma == "321":
            return avoid321.count_321_via_dyck(n)
        if sigma == "123":
            return oracle.closed_form_123(n)
    else:
        if sigma in ("132", "213"):
            # all-312 and all-231 subclasses are equinumerous by symmetry
            return avoid132.count_all312(n)
        if sigma == "321":
            return avoid321.fuss_catalan(n)
        if sigma == "231":
            return avoid231.count_231(n) if form == perm.FORM_312 else 0
        if sigma == "312":
            return avoid231.count_231(n) if form == perm.FORM_231 else 0
    raise UsageError(
        f"no formula for pattern {sigma} with form {form or 'all'};"
        " use --engine oracle"
    )


def _cmd_count(args: argparse.Namespace) -> int:
    patterns = _parse_pattern_set(args.pattern)
    form = _parse_form(args.form)
    ns = _parse_n_range(args.n)
    counts = []
    for n in ns:
        if args.engine == "formula":
            counts.append(formula_count(n, patterns, form))
        else:
            q = oracle.AvoidanceQuery(n, frozenset(patterns), form)
            counts.append(
                oracle.oracle_count(q, jobs=args.jobs, allow_large=args.allow_large)
            )
    if args.format == "text":
        print(" ".join(str(c) for c in counts))
    elif args.format == "bfile":
        for n, c in zip(ns, counts):
            print(f"{n} {c}")
    else:
        for n, c in zip(ns, counts):
            record = {
                "n": n,
                "patterns": ["".join(str(v) for v in p) for p in sorted(patterns)],
                "form": form,
                "count": c,
            }
            print(json.dumps(record, sort_keys=True))
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    patterns = _parse_pattern_set(args.pattern)
    form = _parse_form(args.form)
    for n in _parse_n_range(args.n):
        q = oracle.AvoidanceQuery(n, frozenset(patterns), form)
        for p in oracle.oracle_enumerate(q, allow_large=args.allow_large):
            if args.format == "jsonl":
                record = {
                    "n": n,
                    "perm": list(p),
                    "cycles": perm.format_cycles(p),
                }
                print(json.dumps(record, sort_keys=True))
            else:
                print(perm.format_one_line(p))
    return 0


def _cmd_series(args: argparse.Namespace) -> int:
    makers = {
        "A": series.series_A,
        "B": series.series_B,
        "catalan": series.catalan_series,
        "motzkin": series.motzkin_series,
    }
    s = makers[args.which](args.order)
    if args.format == "json":
        print(json.dumps([str(c) for c in s.coeffs]))
    else:
        for n, c in enumerate(s.coeffs):
            print(f"{n}: {c}")
    return 0


def _cmd_encode(args: argparse.Namespace) -> int:
    try:
        p = avoid231.encode(args.word)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(perm.format_one_line(p))
    return 0


def _cmd_decode(args: argparse.Namespace) -> int:
    if args.pattern != "231":
        raise UsageError("only the 231 bijection has a word decoding")
    p = perm.parse_one_line(args.perm)
    print(avoid231.decode(p))
    return 0


def _cmd_hpoly(args: argparse.Namespace) -> int:
    poly = avoid321.h_polynomial(args.n)
    print(" ".join(str(c) for c in poly.coefficients))
    return 0


def _cmd_paths(args: argparse.Namespace) -> int:
    given = [x is not None for x in (args.t, args.path, args.n)]
    if sum(given) != 1:
        raise UsageError("give exactly one of --t, --path, --n")
    if args.t is not None:
        t = tuple(int(tok) for tok in args.t.split(","))
        print(avoid321.tset_to_path(t))
    elif args.path is not None:
        t = avoid321.path_to_tset(args.path)
        print(",".join(str(v) for v in t))
    else:
        for t in avoid321.enumerate_tsets(args.n):
            print(",".join(str(v) for v in t) + " " + avoid321.tset_to_path(t))
    return 0


def _verify_pattern_rows(
    lines: list[str],
    names: Sequence[str],
    max_n: int,
    profiles: dict[int, list[list[int]]],
) -> bool:
    ok = True
    for name in names:
        sigma = tuple(int(ch) for ch in name)
        bad = []
        for n in range(1, max_n + 1):
            want = formula_count(n, (sigma,), None)
            got = oracle.profile_count(profiles[n], [sigma])
            if want != got:
                bad.append((n, want, got))
        if bad:
            ok = False
            lines.append(f"pattern {name}: MISMATCH {bad}")
        else:
            lines.append(f"pattern {name}: formula=oracle for n=1..{max_n}")
    return ok


def _cmd_verify(args: argparse.Namespace) -> int:
    max_n = args.max_n
    if max_n < 1:
        raise UsageError("--max-n must be >= 1")
    run_all = args.pattern == "all"
    names = _PATTERN_NAMES if run_all else None
    if not run_all:
        tokens = args.pattern.split(",")
        if len(tokens) not in (1, 2):
            raise UsageError("verify takes one pattern, a pair, or 'all'")
        _parse_pattern_set(args.pattern)
        names = tuple(tokens) if len(tokens) == 1 else None

    lines: list[str] = []
    ok = True
    profiles = {
        n: oracle.avoidance_profile(n, jobs=args.jobs, allow_large=args.allow_large)
        for n in range(1, max_n + 1)
    }

    if names:
        ok &= _verify_pattern_rows(lines, names, max_n, profiles)
    else:
        pair = _parse_pattern_set(args.pattern)
        bad = []
        for n in range(1, max_n + 1):
            want = oracle.closed_form_pair(n, pair)
            got = oracle.profile_count(profiles[n], pair)
            if want != got:
                bad.append((n, want, got))
        if bad:
            ok = False
            lines.append(f"pair {args.pattern}: MISMATCH {bad}")
        else:
            lines.append(f"pair {args.pattern}: closed-form=oracle for n=1..{max_n}")

    if run_all:
        import itertools

        bad_pairs = []
        for pair in itertools.combinations(
            [tuple(int(ch) for ch in s) for s in _PATTERN_NAMES], 2
        ):
            for n in range(1, max_n + 1):
                want = oracle.closed_form_pair(n, pair)
                got = oracle.profile_count(profiles[n], pair)
                if want != got:
                    bad_pairs.append((pair, n, want, got))
        if bad_pairs:
            ok = False
            lines.append(f"pairs: MISMATCH {bad_pairs}")
        else:
            lines.append(f"pairs: closed-form=oracle for n=1..{max_n} (15 pairs)")

        subclasses = (
            ("132", perm.FORM_312),
            ("321", perm.FORM_312),
            ("321", perm.FORM_231),
        )
        bad_sub = []
        for name, form in subclasses:
            sigma = tuple(int(ch) for ch in name)
            for n in range(1, max_n + 1):
                want = formula_count(n, (sigma,), form)
                got = oracle.profile_count(profiles[n], [sigma], form)
                if want != got:
                    bad_sub.append((name, form, n, want, got))
        if bad_sub:
            ok = False
            lines.append(f"subclasses: MISMATCH {bad_sub}")
        else:
            lines.append(
                f"subclasses: formula=oracle for n=1..{max_n} (132|312, 321|312, 321|231)"
            )

    if run_all or names == ("231",) or names == ("312",):
        image_ok = True
        for n in range(1, min(max_n, 4) + 1):
            want = set(
                oracle.oracle_enumerate(
                    oracle.AvoidanceQuery(n, frozenset({(2, 3, 1)}))
                )
            )
            got = {avoid231.encode(w) for w in avoid231.words(n - 1)}
            if want != got or len(got) != avoid231.count_231(n):
                image_ok = False
        if image_ok:
            lines.append(
                f"bijection 231: encode image matches oracle for n=1..{min(max_n, 4)}"
            )
        else:
            ok = False
            lines.append("bijection 231: MISMATCH")

    if run_all or names in (("132",), ("213",)):
        order = 20
        a = series.series_A(order)
        b = series.series_B(order)
        if b * (series.one(order) - a) == a.scale(2):
            lines.append(f"identity: series B*(1-A) = 2A to order {order}")
        else:
            ok = False
            lines.append("identity: series B*(1-A) = 2A FAILED")

    if run_all or names == ("321",):
        route_ok = all(
            avoid321.count_321_via_tsets(n)
            == avoid321.count_321_via_dyck(n)
            == avoid321.h_polynomial(n).evaluate(2)
            for n in range(1, 9)
        )
        ident_ok = all(avoid321.dyck_identity_check(n) for n in range(1, 11))
        if route_ok:
            lines.append("route check 321: staircase sum = Dyck sum = f(2) for n=1..8")
        else:
            ok = False
            lines.append("route check 321: MISMATCH")
        if ident_ok:
            lines.append("identity: Dyck binomial sum = Fuss-Catalan for n=1..10")
        else:
            ok = False
            lines.append("identity: Dyck binomial sum = Fuss-Catalan FAILED")

    for line in lines:
        print(line)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threecycle",
        description="Exact counts, constructions and cross-checks for "
        "pattern-avoiding permutations built from 3-cycles.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--jobs", type=int, default=1, help="worker processes")
        p.add_argument(
            "--allow-large",
            action="store_true",
            help=f"override the soft exhaustive-search bound n <= {oracle.SOFT_LIMIT}",
        )

    p = sub.add_parser("count", help="count avoiders for n or an n-range")
    p.add_argument("--pattern", required=True, help='e.g. "321" or a pair "132,213"')
    p.add_argument("--n", required=True, help='size parameter, e.g. "4" or "1..5"')
    p.add_argument("--form", default="all", help="cycle form filter: all, 312 or 231")
    p.add_argument("--engine", choices=("formula", "oracle"), default="formula")
    p.add_argument("--format", choices=("text", "jsonl", "bfile"), default="text")
    add_common(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="list the avoiders themselves")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--form", default="all")
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.add_argument(
        "--allow-large",
        action="store_true",
        help=f"override the soft exhaustive-search bound n <= {oracle.SOFT_LIMIT}",
    )
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="formula-vs-oracle and identity suites")
    p.add_argument("--pattern", default="all", help="a pattern, a pair, or 'all'")
    p.add_argument("--max-n", type=int, default=4)
    add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("series", help="print generating-function coefficients")
    p.add_argument("--which", choices=("A", "B", "catalan", "motzkin"), required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("encode", help="E/L/R word -> 231-avoiding permutation")
    p.add_argument("--word", required=True, help='letters E, L, R; "" gives the seed')
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("decode", help="231-avoiding permutation -> E/L/R word")
    p.add_argument("--perm", required=True, help='one-line notation, e.g. "6 5 1 2 4 3"')
    p.add_argument("--pattern", default="231")
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("hpoly", help="balanced-prefix polynomial coefficients")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_hpoly)

    p = sub.add_parser("paths", help="staircase set <-> lattice path")
    p.add_argument("--t", help='comma-separated staircase set, e.g. "1,4"')
    p.add_argument("--path", help='word over E/N, e.g. "EENEEN"')
    p.add_argument("--n", type=int, help="list all sets of this size with paths")
    p.set_defaults(func=_cmd_paths)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (PermutationError, MembershipError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
