"""Batch command line for the stable-character engine.

Five subcommands: ``expand`` (Schur products and skews), ``kappa`` (kernel
expansions and positivity verdicts), ``embed`` (decompositions), ``verify``
(the identity checkers, exit 1 on failure), ``scan`` (the quadratic kernel
scan, single point or CSV grid).  Exit codes: 0 success / all checks pass,
1 a verification or positivity check failed, 2 usage or parse error.

Rationals print as ``p/q`` (or a bare integer); output ordering is fixed, so
byte-identical inputs and seeds give byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from fractions import Fraction

from . import cache
from .bcd import bcd_multiply
from .embeddings import (
    EmbeddingTable,
    image_by_skewing,
    image_from_table,
    parity_coefficient,
    random_table,
    table_from_series,
    verify_constant_identity,
    verify_linear_identity,
)
from .kr import (
    format_weight_decomposition,
    kr_decomposition,
    quadratic_identity_check,
    rectangle_check,
    weights_json,
)
from .partitions import Partition, partitions_through
from .schur import FormalSum, schur_multiply, skew_expand
from .series import (
    Series,
    is_kappa_positive,
    is_product_s_positive,
    kappa_expansion,
    product_expansion,
    quadratic_boundary,
    quadratic_scan,
)


def _parse_partition(text: str) -> Partition:
    return Partition.from_text(text)


def _parse_series(text: str, order: int) -> Series:
    text = text.strip()
    if text == "one":
        return Series.one()
    if text == "geom":
        return Series.geom(order)
    if text == "geom2":
        return Series.geom2(order)
    return Series.from_text(text)


def _parse_pair(text: str) -> tuple[Partition, Partition]:
    if "/" not in text:
        raise ValueError(f"expected LAMBDA/MU, got {text!r}")
    left, right = text.split("/", 1)
    return _parse_partition(left), _parse_partition(right)


def _sum_json(f: FormalSum) -> dict:
    return {
        "schema": 1,
        "basis": f.basis,
        "terms": [
            {"mu": lam.to_json(), "coeff": str(c)} for lam, c in f.sorted_terms()
        ],
    }


# ---------------------------------------------------------------------------
# Subcommand handlers.
# ---------------------------------------------------------------------------


def _cmd_expand(args) -> int:
    if (args.multiply is None) == (args.skew is None):
        raise ValueError("expand needs exactly one of --multiply or --skew")
    if args.multiply is not None:
        lam, mu = _parse_pair(args.multiply)
        result = schur_multiply(
            FormalSum.single("schur", lam), FormalSum.single("schur", mu)
        )
    else:
        lam, mu = _parse_pair(args.skew)
        result = skew_expand(lam, mu)
    if args.json:
        print(json.dumps(_sum_json(result)))
    else:
        print(result)
    return 0


def _cmd_kappa(args) -> int:
    p = _parse_series(args.series, args.degree)
    if args.product:
        expansion_fn, verdict_fn = product_expansion, is_product_s_positive
    else:
        expansion_fn, verdict_fn = kappa_expansion, is_kappa_positive
    if args.check_positivity:
        verdict = verdict_fn(p, args.degree)
        print(verdict)
        return 0 if verdict.positive else 1
    expansion = expansion_fn(p, args.degree)
    if args.json:
        print(
            json.dumps(
                {
                    "schema": 1,
                    "degree": args.degree,
                    "graded": {
                        str(d): _sum_json(expansion.graded[d])["terms"]
                        for d in range(args.degree + 1)
                    },
                }
            )
        )
    else:
        for d in range(args.degree + 1):
            print(f"deg {d}: {expansion.graded[d]}")
    return 0


def _cmd_embed(args) -> int:
    lam = _parse_partition(args.lam)
    sources = [s for s in (args.series, args.table, args.family) if s is not None]
    if len(sources) != 1:
        raise ValueError("embed needs exactly one of --series, --table, --family")
    if args.family is not None:
        dec = kr_decomposition(lam, args.family)
    elif args.series is not None:
        dec = image_by_skewing(_parse_series(args.series, lam.size), lam)
    else:
        dec = image_from_table(EmbeddingTable.load(args.table), lam)
    if args.json:
        payload = dec.to_json()
        if args.family is not None:
            # Stable-range caveat: the decomposition is meaningful for ranks
            # exceeding the number of parts by more than two.
            payload["family"] = args.family
            payload["valid_for_rank_above"] = len(lam) + 2
        if args.weights:
            payload["weights"] = weights_json(lam)
            for term in payload["terms"]:
                term["weights"] = weights_json(Partition(term["mu"]))
        print(json.dumps(payload))
    elif args.weights:
        print(format_weight_decomposition(dec))
    else:
        print(dec)
    return 0


def _series_set(args, order: int) -> list[tuple[str, Series]]:
    names = args.series if args.series else ["one", "geom2", "geom", "1,1"]
    return [(name, _parse_series(name, order)) for name in names]


def _verify_report(lines: list[tuple[str, bool]], seed=None) -> int:
    failures = 0
    for text, ok in lines:
        print(f"{text}: {'PASS' if ok else 'FAIL'}")
        failures += 0 if ok else 1
    total = len(lines)
    suffix = f" (seed {seed})" if seed is not None else ""
    print(f"verify: {total - failures}/{total} checks passed{suffix}")
    return 0 if failures == 0 else 1


def _cmd_verify(args) -> int:
    lines: list[tuple[str, bool]] = []
    rng = random.Random(args.seed)
    if args.prop == "kr":
        for family in ("C", "BD"):
            for height in range(1, args.max + 1):
                for width in range(1, args.max + 1):
                    report = rectangle_check(height, width, family)
                    lines.append(
                        (f"kr family={family} rect={height}x{width}", report.matches)
                    )
        return _verify_report(lines)
    if args.prop == "eqquad":
        for family in ("C", "BD"):
            for height in range(1, args.max + 1):
                for width in range(1, args.max + 1):
                    report = quadratic_identity_check(height, width, family)
                    lines.append(
                        (f"eqquad family={family} rect={height}x{width}", report.holds)
                    )
        return _verify_report(lines)
    if args.prop == "parity":
        if args.series:
            series_list = [(name, _parse_series(name, 2 * args.k + 2)) for name in args.series]
        else:
            series_list = [("1,0,2", Series.from_text("1,0,2"))]
        for name, p in series_list:
            for k in range(args.k + 1):
                report = parity_coefficient(p, k)
                lines.append(
                    (
                        f"parity p={name} k={k}: {report.computed} = {report.expected}",
                        report.equal,
                    )
                )
        return _verify_report(lines)
    if args.prop == "oracle":
        largest = args.max_size
        for name, p in _series_set(args, largest + 2):
            table = table_from_series(p, largest + 2)
            ok = True
            for lam in partitions_through(largest):
                skew_route = image_by_skewing(p, lam)
                table_route = image_from_table(table, lam)
                if skew_route.terms != table_route.terms:
                    ok = False
                    break
            lines.append((f"oracle p={name} max-size={largest}", ok))
        return _verify_report(lines)
    if args.prop == "ringhom":
        bound = args.max_size
        shapes = list(partitions_through(bound))
        for name, p in _series_set(args, 2 * bound):
            images = {lam: image_by_skewing(p, lam).as_sum() for lam in shapes}
            ok = True
            for mu in shapes:
                for nu in shapes:
                    lhs = FormalSum.zero("sp")
                    product = schur_multiply(
                        FormalSum.single("schur", mu), FormalSum.single("schur", nu)
                    )
                    for lam, c in product.terms.items():
                        lhs = lhs + image_by_skewing(p, lam).as_sum().scaled(c)
                    rhs = bcd_multiply(images[mu], images[nu])
                    if lhs != rhs:
                        ok = False
                        break
                if not ok:
                    break
            lines.append((f"ringhom p={name} max-size={bound}", ok))
        return _verify_report(lines)
    if args.prop in ("linear", "constant"):
        ds = args.d if args.d else [1, 2, 3]
        for d in ds:
            for trial in range(args.trials):
                table = random_table(args.k + max(ds) + 1, d, rng)
                for k in range(d + 2, args.k + 1):
                    if args.prop == "linear":
                        report = verify_linear_identity(table, d, k)
                        lines.append(
                            (f"linear d={d} k={k} trial={trial}", report.equal)
                        )
                    else:
                        report = verify_constant_identity(table, d, k)
                        lines.append(
                            (f"constant d={d} k={k} trial={trial}", report.equal)
                        )
        return _verify_report(lines, seed=args.seed)
    raise ValueError(f"unknown prop {args.prop!r}")


_CSV_COLUMNS = [
    "schema",
    "a",
    "b",
    "degree",
    "coeff_s32211",
    "sign_s32211",
    "min_coeff",
    "min_shape",
    "signs_2t1t",
]


def _sign_char(value) -> str:
    return "+" if value > 0 else ("-" if value < 0 else "0")


def _scan_row(report) -> dict:
    critical = report.critical_coefficient
    return {
        "schema": 1,
        "a": str(report.a),
        "b": str(report.b),
        "degree": report.degree,
        "coeff_s32211": "n/a" if critical is None else str(critical),
        "sign_s32211": "?" if critical is None else _sign_char(critical),
        "min_coeff": str(report.binding_coefficient),
        "min_shape": report.binding_shape.to_text(),
        "signs_2t1t": ",".join(_sign_char(c) for _, c in report.hook_coefficients),
    }


def _parse_grid(spec: str) -> tuple[list[Fraction], list[Fraction]]:
    ranges = {}
    for piece in spec.split(","):
        name, _, body = piece.partition("=")
        name = name.strip()
        if name not in ("a", "b") or not body:
            raise ValueError(f"bad grid component {piece!r}")
        span, _, step = body.partition(":")
        lo, _, hi = span.partition("..")
        if not step or not hi:
            raise ValueError(f"bad grid component {piece!r}")
        lo, hi, step = Fraction(lo), Fraction(hi), Fraction(step)
        if step <= 0 or hi < lo:
            raise ValueError(f"bad grid range {piece!r}")
        values = []
        cur = lo
        while cur <= hi:
            values.append(cur)
            cur += step
        ranges[name] = values
    if "a" not in ranges or "b" not in ranges:
        raise ValueError("grid needs both a=lo..hi:step and b=lo..hi:step")
    return ranges["a"], ranges["b"]


def _cmd_scan(args) -> int:
    if args.grid is not None:
        if args.csv is None:
            raise ValueError("--grid requires --csv OUT")
        a_values, b_values = _parse_grid(args.grid)
        with open(args.csv, "w", encoding="utf-8", newline="") as handle:
            writer = csv.DictWriter(handle, fieldnames=_CSV_COLUMNS)
            writer.writeheader()
            for a in a_values:
                for b in b_values:
                    writer.writerow(_scan_row(quadratic_scan(a, b, args.degree)))
        print(f"wrote {len(a_values) * len(b_values)} rows to {args.csv}")
        return 0
    if args.a is None or args.b is None:
        raise ValueError("scan needs --a and --b (or --grid)")
    report = quadratic_scan(Fraction(args.a), Fraction(args.b), args.degree)
    if args.json:
        payload = _scan_row(report)
        payload["per_degree_min"] = [
            {"degree": d, "shape": lam.to_text(), "coeff": str(c)}
            for d, lam, c in report.per_degree_minimum
        ]
        print(json.dumps(payload))
        return 0
    exact, approx = quadratic_boundary(report.a)
    print(f"a = {report.a}  b = {report.b}  degree = {report.degree}")
    critical = report.critical_coefficient
    print(
        "coefficient of s[3,2,2,1,1]: "
        + ("n/a (degree < 9)" if critical is None else str(critical))
    )
    hooks = "  ".join(f"t={t}:{c}" for t, c in report.hook_coefficients)
    print(f"coefficients of s[2^t,1^t]: {hooks}")
    for d, lam, c in report.per_degree_minimum:
        print(f"deg {d} min: {c} at s[{lam.to_text() if not lam.is_empty else ''}]")
    print(
        f"binding shape: s[{report.binding_shape.to_text()}] coeff {report.binding_coefficient}"
    )
    exact_text = str(exact) if exact is not None else "irrational"
    print(f"boundary b(a) = {approx:.6f} ({exact_text})")
    return 0


# ---------------------------------------------------------------------------
# Parser wiring.
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stablechar",
        description="Exact computations in the stable character rings of the classical groups.",
        epilog=(
            "Series syntax: comma-separated rationals with leading 1 "
            "(e.g. 1,1/2,0,3), or a preset: one, geom (all ones), geom2 "
            "(1,0,1,0,...). Partitions: comma-separated parts, '-' for the "
            "empty partition. Set " + cache.ENV_VAR + " to persist the "
            "tableau memo cache between runs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="Schur products and skew expansions")
    p_expand.add_argument("--multiply", metavar="LAM/MU", help="expand s_LAM * s_MU")
    p_expand.add_argument("--skew", metavar="LAM/MU", help="expand the skew shape LAM/MU")
    p_expand.add_argument("--json", action="store_true")
    p_expand.set_defaults(func=_cmd_expand)

    p_kappa = sub.add_parser("kappa", help="kappa kernel expansion / positivity verdict")
    p_kappa.add_argument("--series", required=True)
    p_kappa.add_argument("--degree", type=int, required=True)
    p_kappa.add_argument(
        "--check-positivity",
        action="store_true",
        help="print only the verdict; exit 1 on a violation",
    )
    p_kappa.add_argument(
        "--product",
        action="store_true",
        help="expand the plain product kernel instead of kappa",
    )
    p_kappa.add_argument("--json", action="store_true")
    p_kappa.set_defaults(func=_cmd_kappa)

    p_embed = sub.add_parser("embed", help="image of a Schur function in the sp/o basis")
    p_embed.add_argument("--series")
    p_embed.add_argument("--table", metavar="FILE", help="JSON embedding table")
    p_embed.add_argument(
        "--family", choices=["C", "BD"], help="use the named rectangle family kernel"
    )
    p_embed.add_argument("--lambda", dest="lam", required=True)
    p_embed.add_argument("--weights", action="store_true", help="fundamental-weight rendering")
    p_embed.add_argument("--json", action="store_true")
    p_embed.set_defaults(func=_cmd_embed)

    p_verify = sub.add_parser(
        "verify", help="identity checkers; exit 0 iff every case passes"
    )
    p_verify.add_argument(
        "--prop",
        required=True,
        choices=["linear", "constant", "parity", "oracle", "ringhom", "eqquad", "kr"],
    )
    p_verify.add_argument("--max", type=int, default=4, help="rectangle bound (kr/eqquad)")
    p_verify.add_argument(
        "--max-size", type=int, default=8, help="largest shape size (oracle/ringhom)"
    )
    p_verify.add_argument("--d", type=int, action="append", help="diagonal(s) for linear/constant")
    p_verify.add_argument("--k", type=int, default=9, help="largest k (linear/constant/parity)")
    p_verify.add_argument("--series", action="append", help="series under test (repeatable)")
    p_verify.add_argument("--trials", type=int, default=5)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=_cmd_verify)

    p_scan = sub.add_parser("scan", help="quadratic kernel scan 1 + b x + a x^2")
    p_scan.add_argument("--a")
    p_scan.add_argument("--b")
    p_scan.add_argument("--degree", type=int, default=11)
    p_scan.add_argument("--grid", metavar="SPEC", help="a=lo..hi:step,b=lo..hi:step")
    p_scan.add_argument("--csv", metavar="OUT", help="write one CSV row per grid point")
    p_scan.add_argument("--json", action="store_true")
    p_scan.set_defaults(
        func=_cmd_scan,
    )
    p_scan.epilog = (
        "CSV columns: " + ",".join(_CSV_COLUMNS) + ". signs_2t1t lists the "
        "signs of the s[2^t,1^t] coefficients for t = 1, 2, ..."
    )

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cache_dir = os.environ.get(cache.ENV_VAR)
    if cache_dir:
        cache.load(cache_dir)
    try:
        code = args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        if cache_dir:
            try:
                cache.save(cache_dir)
            except OSError:
                pass
    return code


if __name__ == "__main__":
    sys.exit(main())
