"""Command-line front end.

Subcommands: construct, verify, census, lemma, pascal, detect.  Every JSON
report embeds a manifest (command, parameters, seed, version, inputs,
outputs) so identical invocations produce byte-identical output; wall-clock
timing goes to stderr, never into the reports.  Exit codes: 0 success,
1 a contracted identity or requested check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from itertools import combinations
from math import comb
from pathlib import Path

from . import __version__
from .charsum import delta_sum_check, gauss_sum_check, reciprocity_check, secant_census
from .construct import build_base, build_qr, build_random
from .detect import find_grid, find_prism, find_small_two_core
from .ffield import InvalidPrimeError, Prime, is_prime
from .geometry import ParabolaSpec, pascal_collinear
from .hypergraph import FormatError, decode, encode, is_linear
from .lemma import (
    EXHAUSTIVE_LIMIT,
    best_subset,
    coverage,
    delta_check,
    expected_coverage,
    lemma_bound,
)
from .rng import MASK64, sample_distinct, splitmix64_stream

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

CHECK_NAMES = ("linear", "gridfree", "prismfree", "corefree9")


def _print_json(obj, pretty: bool) -> None:
    if pretty:
        print(json.dumps(obj, indent=2))
    else:
        print(json.dumps(obj, separators=(",", ":")))


def _manifest(command: str, parameters: dict, seed=None, inputs=(), outputs=(), **extra) -> dict:
    out = {
        "command": command,
        "parameters": parameters,
        "seed": seed,
        "version": __version__,
        "inputs": list(inputs),
        "outputs": list(outputs),
    }
    out.update(extra)
    return out


def _prime_at_least(minimum: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
        if value < minimum or value % 2 == 0 or not is_prime(value):
            raise argparse.ArgumentTypeError(f"{value} is not an odd prime >= {minimum}")
        return value

    return parse


def _rho(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a rational (use num/den)") from None
    if not 0 <= value <= 1:
        raise argparse.ArgumentTypeError(f"rho must lie in [0, 1], got {value}")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not 0 <= value < (1 << 64):
        raise argparse.ArgumentTypeError("seed must lie in [0, 2^64)")
    return value


def _int_range(minimum: int):
    def parse(text: str) -> tuple[int, int]:
        lo, sep, hi = text.partition("..")
        try:
            lo_v = int(lo)
            hi_v = int(hi) if sep else lo_v
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not N or LO..HI") from None
        if lo_v > hi_v:
            raise argparse.ArgumentTypeError(f"empty range {text!r}")
        if lo_v < minimum:
            raise argparse.ArgumentTypeError(f"range must start at {minimum} or above")
        return lo_v, hi_v

    return parse


def cmd_construct(args) -> int:
    if args.kind == "random":
        if args.rho is None or args.seed is None:
            print("construct random needs --rho and --seed", file=sys.stderr)
            return EXIT_USAGE
    elif args.rho is not None or args.seed is not None:
        print(f"construct {args.kind} takes no --rho/--seed", file=sys.stderr)
        return EXIT_USAGE

    if args.kind == "base":
        h, vmap, report = build_base(args.p)
    elif args.kind == "qr":
        h, vmap, report = build_qr(args.p)
    else:
        h, vmap, report = build_random(
            args.p, args.rho.numerator, args.rho.denominator, args.seed
        )

    outputs = []
    report_path = None
    if args.out is not None:
        out_path = Path(args.out)
        report_path = out_path.with_suffix(".report.json")
        outputs = [str(out_path), str(report_path)]
    manifest = _manifest(
        command="construct",
        parameters={
            "kind": args.kind,
            "p": args.p,
            "rho": str(args.rho) if args.rho is not None else None,
            "out": args.out,
        },
        seed=args.seed,
        outputs=outputs,
    )
    payload = {"manifest": manifest, "report": report.to_json_dict()}
    if args.out is not None:
        text = encode(h, vmap)
        Path(args.out).write_text(text)
        body = json.dumps(payload, indent=2 if args.pretty else None,
                          separators=None if args.pretty else (",", ":"))
        report_path.write_text(body + "\n")
    _print_json(payload, args.pretty)
    return EXIT_OK


def _linear_witness(h):
    seen = {}
    for idx, (a, b, c) in enumerate(h.edges):
        for pair in ((a, b), (a, c), (b, c)):
            if pair in seen:
                return {"pair": list(pair), "edges": [seen[pair], idx]}
            seen[pair] = idx
    return None


def cmd_verify(args) -> int:
    text = Path(args.infile).read_text()
    h = decode(text)
    requested = args.checks.split(",") if args.checks else list(CHECK_NAMES)
    for name in requested:
        if name not in CHECK_NAMES:
            print(f"unknown check {name!r}; pick from {', '.join(CHECK_NAMES)}", file=sys.stderr)
            return EXIT_USAGE
    manifest = _manifest(
        command="verify",
        parameters={"checks": requested},
        inputs=[args.infile],
    )
    for name in requested:
        witness = None
        if name == "linear":
            if not is_linear(h):
                witness = _linear_witness(h)
        elif name == "gridfree":
            found = find_grid(h)
            if found is not None:
                witness = found.to_json_dict()
        elif name == "prismfree":
            found = find_prism(h)
            if found is not None:
                witness = found.to_json_dict()
        elif name == "corefree9":
            found = find_small_two_core(h, 9)
            if found is not None:
                witness = found.to_json_dict()
        if witness is not None:
            _print_json(
                {"manifest": manifest, "ok": False, "failed": name, "witness": witness},
                args.pretty,
            )
            return EXIT_VIOLATION
    _print_json({"manifest": manifest, "ok": True, "checks": requested}, args.pretty)
    return EXIT_OK


def cmd_census(args) -> int:
    lo, hi = args.p
    primes = []
    skipped = []
    for v in range(lo, hi + 1):
        if v >= 5 and v % 2 == 1 and is_prime(v):
            primes.append(v)
        else:
            skipped.append(v)
    manifest = _manifest(
        command="census",
        parameters={"p": f"{lo}..{hi}"},
        skipped=skipped,
    )
    _print_json({"manifest": manifest}, args.pretty)
    for p in primes:
        prime = Prime(p)
        gauss = gauss_sum_check(prime)
        if gauss != -1:
            print(f"gauss sum identity failed at p={p}: {gauss}", file=sys.stderr)
            return EXIT_VIOLATION
        delta = delta_sum_check(prime)
        if delta != -(p - 1):
            print(f"delta sum identity failed at p={p}: {delta}", file=sys.stderr)
            return EXIT_VIOLATION
        rec = reciprocity_check(prime)
        if not rec.consistent:
            print(f"reciprocity failed at p={p}", file=sys.stderr)
            return EXIT_VIOLATION
        _print_json(secant_census(prime).to_json_dict(), args.pretty)
    return EXIT_OK


def _lemma_family(N: int, seed: int):
    """Seeded exact-half pair family for N = 0, 1 (mod 4), else None."""
    if N % 4 not in (0, 1):
        return None
    pairs = list(combinations(range(N), 2))
    half = len(pairs) // 2
    pick = sample_distinct(len(pairs), half, (seed * 1_000_003 + N) & MASK64)
    return tuple(pairs[i] for i in sorted(pick))


def _exhaustive_average(N: int, k: int, fam) -> Fraction:
    total = sum(coverage(S, fam) for S in combinations(range(N), k))
    return Fraction(total, comb(N, k))


def cmd_lemma(args) -> int:
    lo, hi = args.N
    manifest = _manifest(
        command="lemma",
        parameters={"N": f"{lo}..{hi}"},
        seed=args.seed,
    )
    _print_json({"manifest": manifest}, args.pretty)
    for N in range(lo, hi + 1):
        k = N // 2
        v = 2 * k * N - k * k - k
        expectation = Fraction(v, 4)
        bound = lemma_bound(N)
        delta, delta_ok = delta_check(N)
        if not delta_ok:
            print(f"ceiling gap bound failed at N={N}", file=sys.stderr)
            return EXIT_VIOLATION
        fam = _lemma_family(N, args.seed)
        h_size = len(fam) if fam is not None else None
        best_cov = None
        best_set = None
        if fam is not None:
            if expected_coverage(N, k, fam) != expectation:
                print(f"expectation formula failed at N={N}", file=sys.stderr)
                return EXIT_VIOLATION
            if N <= 12 and _exhaustive_average(N, k, fam) != expectation:
                print(f"exhaustive average disagrees at N={N}", file=sys.stderr)
                return EXIT_VIOLATION
            if N <= EXHAUSTIVE_LIMIT:
                best_set, best_cov = best_subset(N, k, fam)
                if best_cov < bound:
                    print(f"attained coverage below bound at N={N}", file=sys.stderr)
                    return EXIT_VIOLATION
        record = {
            "N": N,
            "k": k,
            "pair_count": comb(N, 2),
            "h_size": h_size,
            "expectation": str(expectation),
            "bound": bound,
            "delta": str(delta),
            "delta_ok": delta_ok,
            "best_coverage": best_cov,
            "best_subset": list(best_set) if best_set is not None else None,
        }
        _print_json(record, args.pretty)
    return EXIT_OK


def cmd_pascal(args) -> int:
    prime = Prime(args.p)
    parabola = ParabolaSpec(prime(0))
    stream = splitmix64_stream(args.seed)
    failures = []
    for i in range(args.samples):
        xs = sample_distinct(args.p, 6, next(stream))
        hexagon = [parabola.point_at(x) for x in xs]
        if not pascal_collinear(hexagon, parabola):
            failures.append({"sample": i, "xs": list(xs)})
    manifest = _manifest(
        command="pascal",
        parameters={"p": args.p, "samples": args.samples},
        seed=args.seed,
    )
    _print_json(
        {
            "manifest": manifest,
            "p": args.p,
            "samples": args.samples,
            "all_collinear": not failures,
            "failures": failures,
        },
        args.pretty,
    )
    return EXIT_VIOLATION if failures else EXIT_OK


def cmd_detect(args) -> int:
    text = Path(args.infile).read_text()
    h = decode(text)
    if args.find == "grid":
        witness = find_grid(h)
    elif args.find == "prism":
        witness = find_prism(h)
    else:
        witness = find_small_two_core(h, args.max_vertices)
    manifest = _manifest(
        command="detect",
        parameters={"find": args.find, "max_vertices": args.max_vertices},
        inputs=[args.infile],
    )
    _print_json(
        {
            "manifest": manifest,
            "find": args.find,
            "found": witness is not None,
            "witness": witness.to_json_dict() if witness is not None else None,
        },
        args.pretty,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridfree",
        description="Grid-free hypergraph constructions over prime fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_con = sub.add_parser("construct", help="build an instance and its report")
    p_con.add_argument("kind", choices=("base", "random", "qr"))
    p_con.add_argument("--p", type=_prime_at_least(5), required=True)
    p_con.add_argument("--rho", type=_rho, default=None, help="inclusion probability num/den")
    p_con.add_argument("--seed", type=_seed, default=None)
    p_con.add_argument("--out", default=None, help="write .hg3 here plus a sibling .report.json")
    p_con.add_argument("--pretty", action="store_true")
    p_con.set_defaults(func=cmd_construct)

    p_ver = sub.add_parser("verify", help="run structural checks on a .hg3 file")
    p_ver.add_argument("--in", dest="infile", required=True)
    p_ver.add_argument(
        "--checks",
        default=None,
        help=f"comma-separated subset of {','.join(CHECK_NAMES)} (default all)",
    )
    p_ver.add_argument("--pretty", action="store_true")
    p_ver.set_defaults(func=cmd_verify)

    p_cen = sub.add_parser("census", help="secant census and character-sum audit")
    p_cen.add_argument("--p", type=_int_range(3), required=True, metavar="LO..HI")
    p_cen.add_argument("--pretty", action="store_true")
    p_cen.set_defaults(func=cmd_census)

    p_lem = sub.add_parser("lemma", help="coverage expectations and bounds")
    p_lem.add_argument("--N", type=_int_range(2), required=True, metavar="LO..HI")
    p_lem.add_argument("--seed", type=_seed, default=0)
    p_lem.add_argument("--pretty", action="store_true")
    p_lem.set_defaults(func=cmd_lemma)

    p_pas = sub.add_parser("pascal", help="random hexagon collinearity audit")
    p_pas.add_argument("--p", type=_prime_at_least(7), required=True)
    p_pas.add_argument("--samples", type=int, default=1000)
    p_pas.add_argument("--seed", type=_seed, default=0)
    p_pas.add_argument("--pretty", action="store_true")
    p_pas.set_defaults(func=cmd_pascal)

    p_det = sub.add_parser("detect", help="hunt one configuration in a .hg3 file")
    p_det.add_argument("--in", dest="infile", required=True)
    p_det.add_argument("--find", choices=("grid", "prism", "core"), required=True)
    p_det.add_argument("--max-vertices", type=int, default=9)
    p_det.add_argument("--pretty", action="store_true")
    p_det.set_defaults(func=cmd_detect)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        code = args.func(args)
    except FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"cannot read {exc.filename}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidPrimeError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    finally:
        elapsed = time.perf_counter() - start
        print(f"gridfree: {elapsed:.3f}s elapsed", file=sys.stderr)
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
