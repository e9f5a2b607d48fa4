"""Command-line front end.

Subcommands: gen, commutor, stringdata, star, verify.  Exit codes: 0 on
success, 1 on a verification failure or a commutor-method mismatch, 2 on
bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cartan import CartanType, all_reduced_words, build_root_datum, canonical_word
from .config import Settings, load_settings
from .errors import CrystalError, InputError
from .involutions import commutor_hk
from .paths import irreducible
from .serialize import (
    CrystalStore,
    commutor_to_dict,
    graph_json_bytes,
    graph_to_dot,
    to_canonical_json,
)
from .star import commutor_star, element, star
from .stringdata import downward_values, upward_values
from .tensor import tensor_cached
from .verify import SUITES, run_suite


def parse_weight(text: str, rank: int) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    try:
        coeffs = tuple(int(p) for p in parts)
    except ValueError:
        raise InputError(f"cannot parse weight {text!r}") from None
    if len(coeffs) != rank:
        raise InputError(f"weight {text!r} has {len(coeffs)} coefficients, expected {rank}")
    if any(c < 0 for c in coeffs):
        raise InputError(f"weight {text!r} is not dominant")
    return coeffs


def _datum(type_str: str):
    return build_root_datum(CartanType.parse(type_str))


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8", newline="")


def cmd_gen(args, settings: Settings) -> int:
    d = _datum(args.type)
    lam = parse_weight(args.weight, d.rank)
    if args.cache_dir is not None or settings.cache_dir is not None:
        store = CrystalStore(Path(args.cache_dir or settings.cache_dir))
        B = store.fetch(d, lam)
    else:
        B = irreducible(d, lam)
    if args.dot:
        _emit(graph_to_dot(B), args.out)
    else:
        _emit(graph_json_bytes(B).decode("utf-8"), args.out)
    return 0


def cmd_commutor(args, settings: Settings) -> int:
    d = _datum(args.type)
    lam = parse_weight(args.lam, d.rank)
    mu = parse_weight(args.mu, d.rank)
    src = tensor_cached(d, lam, mu)
    tgt = tensor_cached(d, mu, lam)
    maps = {}
    if args.method in ("hk", "both"):
        maps["hk"] = commutor_hk(irreducible(d, lam), irreducible(d, mu), src, tgt)
    if args.method in ("star", "both"):
        maps["star"] = commutor_star(d, lam, mu, src, tgt)
    if args.method == "both":
        hk, st = maps["hk"].mapping, maps["star"].mapping
        diffs = sorted(v for v in hk if hk[v] != st[v])
        payload = {
            "type": str(d.type), "lam": list(lam), "mu": list(mu),
            "equal": not diffs,
            "differences": [[v, hk[v], st[v]] for v in diffs],
        }
        _emit(to_canonical_json(payload), args.out)
        return 0 if not diffs else 1
    _emit(to_canonical_json(commutor_to_dict(maps[args.method])), args.out)
    return 0


def cmd_stringdata(args, settings: Settings) -> int:
    d = _datum(args.type)
    lam = parse_weight(args.weight, d.rank)
    B = irreducible(d, lam)
    if args.word:
        try:
            word = tuple(int(p) for p in args.word.split(","))
        except ValueError:
            raise InputError(f"cannot parse word {args.word!r}") from None
        words = [word]
    elif args.all_words:
        words = list(all_reduced_words(d))
    else:
        words = [canonical_word(d)]
    values = upward_values if args.direction == "upward" else downward_values
    rows = []
    for word in words:
        for v in B.vertices:
            rows.append({"id": v, "word": list(word),
                         "values": list(values(B, v, word))})
    for row in rows:
        _emit(to_canonical_json(row), args.out)
    return 0


def cmd_star(args, settings: Settings) -> int:
    d = _datum(args.type)
    mu = parse_weight(args.mu, d.rank)
    lam = parse_weight(args.lam, d.rank)
    x = element(d, mu, args.vertex)
    image = star(x, lam)
    _emit(f"{image.vertex}\n", args.out)
    return 0


def cmd_verify(args, settings: Settings) -> int:
    types = (args.types.split(",") if args.types
             else list(settings.types))
    max_coeff = args.max_coeff if args.max_coeff is not None else settings.max_coeff
    jobs = args.jobs if args.jobs is not None else settings.jobs
    report = run_suite(args.suite, types, max_coeff=max_coeff, jobs=jobs,
                       include_g2=args.include_g2)
    _emit(to_canonical_json(report.to_dict()), args.out)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crystals",
        description="Exact crystal graphs, commutors, and verification suites.")
    parser.add_argument("--config", help="path to a key = value config file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a crystal and print it")
    p.add_argument("type", help="Cartan type, e.g. A2")
    p.add_argument("weight", help="dominant weight, e.g. 1,1")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--dot", action="store_true", help="DOT output")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--cache-dir", help="store and reuse crystals under this directory")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("commutor", help="print a commutor bijection")
    p.add_argument("type")
    p.add_argument("lam", help="left highest weight")
    p.add_argument("mu", help="right highest weight")
    p.add_argument("--method", choices=["hk", "star", "both"], default="hk")
    p.add_argument("--out")
    p.set_defaults(func=cmd_commutor)

    p = sub.add_parser("stringdata", help="print string data as JSON rows")
    p.add_argument("type")
    p.add_argument("weight")
    p.add_argument("--word", help="comma-separated reduced word (default canonical)")
    p.add_argument("--all-words", action="store_true")
    p.add_argument("--direction", choices=["downward", "upward"], default="downward")
    p.add_argument("--out")
    p.set_defaults(func=cmd_stringdata)

    p = sub.add_parser("star", help="apply the involution to one vertex")
    p.add_argument("type")
    p.add_argument("mu", help="carrier weight of the element")
    p.add_argument("vertex", type=int, help="canonical id inside the carrier")
    p.add_argument("lam", help="context weight of the image carrier")
    p.add_argument("--out")
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("types", nargs="?", help="comma-separated types (default config)")
    p.add_argument("--max-coeff", type=int)
    p.add_argument("--jobs", type=int)
    p.add_argument("--include-g2", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = load_settings(args.config)
        return args.func(args, settings)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CrystalError as exc:
        print(f"verification error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
