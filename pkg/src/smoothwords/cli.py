"""Command-line interface.

One executable with subcommands over a global `--alphabet a,b` (either
order).  stdout carries data; stderr carries diagnostics.  Exit codes:
0 success, 1 verification or derivation failure, 2 usage error, 3 resource
cap refused the request.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Optional

from .bispecial import (
    DEFAULT_GENERATION_CAP,
    FAMILIES,
    exact_complexity,
    generation_stats,
    tree_generation,
    tree_derived_complexity,
)
from .checks import REFERENCE_EXPONENT_TABLE, SUITES, run_suite
from .derivation import derive_f, derive_huang, derive_r
from .errors import (
    DerivationError,
    InvalidFamilyError,
    ResourceCapError,
    SmoothWordsError,
)
from .generators import coupled_pair_prefix, kappa_prefix
from .smoothness import DEFAULT_LENGTH_CAP, enumerate_f_smooth, is_f_smooth, is_r_smooth
from .spectral import exponent_report
from .words import Alphabet, Word

_OPS = {"f": derive_f, "r": derive_r, "huang": derive_huang}


def _parse_alphabet(text: str) -> Alphabet:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"alphabet must be two comma-separated integers, got {text!r}")
    x, y = (int(p.strip()) for p in parts)
    return Alphabet(min(x, y), max(x, y))


def _round_floats(obj):
    if isinstance(obj, float):
        return round(obj, 12)
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def _emit_json(obj) -> None:
    print(json.dumps(_round_floats(obj), indent=2, ensure_ascii=False))


def _emit_csv(header: list[str], rows: list[list]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _render_step(word: Word) -> str:
    return word.render() if len(word) else "(empty)"


# -- subcommand handlers -----------------------------------------------------


def _cmd_derive(args, alphabet: Alphabet) -> int:
    word = alphabet.word(args.word)
    op = _OPS[args.op]
    if not args.chain:
        derived = op(word)
        if args.format == "json":
            _emit_json({
                "alphabet": str(alphabet),
                "operation": args.op,
                "input": word.render(),
                "result": derived.render(),
            })
        elif args.format == "csv":
            _emit_csv(["input", "operation", "result"],
                      [[word.render(), args.op, derived.render()]])
        else:
            print(_render_step(derived))
        return 0
    chain = [word]
    error: Optional[str] = None
    while len(chain[-1]):
        try:
            chain.append(op(chain[-1]))
        except DerivationError as exc:
            error = (f"step {len(chain)}: {chain[-1].render()} not derivable"
                     f" ({exc.report.reason})" if exc.report is not None
                     else f"step {len(chain)}: {chain[-1].render()} not derivable")
            break
    if args.format == "json":
        payload = {
            "alphabet": str(alphabet),
            "operation": args.op,
            "input": word.render(),
            "chain": [w.render() for w in chain],
        }
        if error is None:
            payload["height"] = len(chain) - 1
        else:
            payload["failed_at_step"] = len(chain)
            payload["error"] = error
        _emit_json(payload)
    elif args.format == "csv":
        _emit_csv(["step", "word"],
                  [[i, w.render()] for i, w in enumerate(chain)])
    else:
        for i, w in enumerate(chain):
            print(f"{i}: {_render_step(w)}")
    if error is not None:
        print(error, file=sys.stderr)
        return 1
    return 0


def _cmd_check(args, alphabet: Alphabet) -> int:
    word = alphabet.word(args.word)
    if args.kind == "f":
        cert = is_f_smooth(word)
        member = cert is not None
        payload = {
            "alphabet": str(alphabet),
            "word": word.render(),
            "kind": "f",
            "member": member,
        }
        if cert is not None:
            payload["height"] = cert.height
            payload["chain"] = [w.render() for w in cert.chain]
    else:
        member = is_r_smooth(word)
        payload = {
            "alphabet": str(alphabet),
            "word": word.render(),
            "kind": "r",
            "member": member,
        }
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "csv":
        _emit_csv(["word", "kind", "member"],
                  [[word.render(), args.kind, str(member).lower()]])
    else:
        print(f"member: {'yes' if member else 'no'}")
        if args.kind == "f" and cert is not None:
            print(f"height: {cert.height}")
            print("chain: " + " -> ".join(_render_step(w) for w in cert.chain))
    return 0


def _cmd_kappa(args, alphabet: Alphabet) -> int:
    start = args.start if args.start is not None else alphabet.b
    word = kappa_prefix(alphabet, args.length, start=start)
    if args.format == "json":
        _emit_json({
            "alphabet": str(alphabet),
            "start": start,
            "length": args.length,
            "word": word.render(),
        })
    elif args.format == "csv":
        _emit_csv(["alphabet", "start", "length", "word"],
                  [[str(alphabet), start, args.length, word.render()]])
    else:
        print(word.render())
    return 0


def _cmd_pair(args, alphabet: Alphabet) -> int:
    x, y = coupled_pair_prefix(alphabet, args.length)
    if args.format == "json":
        _emit_json({
            "alphabet": str(alphabet),
            "length": args.length,
            "x": x.render(),
            "y": y.render(),
        })
    elif args.format == "csv":
        _emit_csv(["side", "word"], [["x", x.render()], ["y", y.render()]])
    else:
        print(x.render())
        print(y.render())
    return 0


def _cmd_enumerate(args, alphabet: Alphabet) -> int:
    words = enumerate_f_smooth(alphabet, args.length, cap=args.cap)
    if args.format == "json":
        _emit_json({
            "alphabet": str(alphabet),
            "length": args.length,
            "count": len(words),
            "words": [w.render() for w in words],
        })
    elif args.format == "csv":
        _emit_csv(["word"], [[w.render()] for w in words])
    else:
        for w in words:
            print(w.render())
    return 0


def _cmd_complexity(args, alphabet: Alphabet) -> int:
    horizon = args.max
    if args.tree_only:
        table = tree_derived_complexity(alphabet, horizon + 2)
    else:
        table = exact_complexity(alphabet, horizon + 2, cap=args.cap)
    rows = [
        [n, table.p[n], table.s[n], table.b[n], table.lower[n], table.upper[n]]
        for n in range(horizon + 1)
    ]
    header = ["n", "p", "s", "b", "lower_bound", "upper_bound"]
    if args.format == "json":
        _emit_json({
            "alphabet": str(alphabet),
            "provenance": table.provenance,
            "columns": header,
            "rows": rows,
        })
    elif args.format == "csv":
        _emit_csv(header, rows)
    else:
        print(" ".join(header))
        for row in rows:
            print(" ".join(str(x) for x in row))
    return 0


def _cmd_tree(args, alphabet: Alphabet) -> int:
    if args.stats:
        stats = generation_stats(alphabet, args.family, args.generation,
                                 generation_cap=args.cap)
        histogram = {str(k): v for k, v in sorted(stats.histogram.items())}
        payload = {
            "alphabet": str(alphabet),
            "family": args.family,
            "generation": args.generation,
            "count": stats.count,
            "min_len": stats.min_len,
            "max_len": stats.max_len,
            "total_len": stats.total_len,
            "histogram": histogram,
        }
        if args.format == "json":
            _emit_json(payload)
        elif args.format == "csv":
            _emit_csv(["family", "generation", "count", "min_len", "max_len",
                       "total_len"],
                      [[args.family, args.generation, stats.count,
                        stats.min_len, stats.max_len, stats.total_len]])
        else:
            for key in ("family", "generation", "count", "min_len", "max_len",
                        "total_len"):
                print(f"{key}: {payload[key]}")
            print("histogram: " + ", ".join(
                f"{k}:{v}" for k, v in histogram.items()))
        return 0
    nodes = tree_generation(alphabet, args.family, args.generation,
                            generation_cap=args.cap)
    if args.format == "json":
        _emit_json({
            "alphabet": str(alphabet),
            "family": args.family,
            "generation": args.generation,
            "words": [n.word.render() for n in nodes],
        })
    elif args.format == "csv":
        _emit_csv(["word", "multiplicity"],
                  [[n.word.render(), n.multiplicity] for n in nodes])
    else:
        for n in nodes:
            print(_render_step(n.word))
    return 0


_TABLE_FIELDS = ("rho", "zeta", "beta")


def _reference_table_cells() -> list[tuple[str, dict[str, str]]]:
    """Computed exponent values formatted at the reference display widths."""
    cells = []
    for (a, b), row in REFERENCE_EXPONENT_TABLE.items():
        rep = exponent_report(Alphabet(a, b))
        formatted = {}
        for field in _TABLE_FIELDS:
            display = row[field]
            decimals = len(display.split(".")[1]) if "." in display else 0
            formatted[field] = f"{getattr(rep, field):.{decimals}f}"
        cells.append((f"{{{a},{b}}}", formatted))
    return cells


def _cmd_exponents(args, alphabet: Alphabet) -> int:
    if args.reference_table:
        cells = _reference_table_cells()
        if args.format == "json":
            _emit_json({
                "columns": [name for name, _ in cells],
                "rows": {f: [c[f] for _, c in cells] for f in _TABLE_FIELDS},
            })
        elif args.format == "csv":
            _emit_csv(["alphabet", *_TABLE_FIELDS],
                      [[name, *(c[f] for f in _TABLE_FIELDS)]
                       for name, c in cells])
        else:
            width = max(len(name) for name, _ in cells) + 2
            print("exponent".ljust(10) + "".join(
                name.ljust(width) for name, _ in cells))
            for field in _TABLE_FIELDS:
                print(field.ljust(10) + "".join(
                    c[field].ljust(width) for _, c in cells))
        return 0
    rep = exponent_report(alphabet)
    payload = {
        "alphabet": str(alphabet),
        "rho": rep.rho,
        "alpha": rep.alpha,
        "beta": rep.beta,
        "zeta": rep.zeta,
        "growth_lambda": rep.growth_lambda,
        "rho_prime": rep.rho_prime,
        "c_constant": rep.c_constant,
        "formulas": rep.formulas,
    }
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "csv":
        fields = ["rho", "alpha", "beta", "zeta", "growth_lambda",
                  "rho_prime", "c_constant"]
        _emit_csv(["field", "value", "formula"],
                  [[f,
                    "" if payload[f] is None else f"{payload[f]:.12f}",
                    rep.formulas[f]] for f in fields])
    else:
        for key in ("rho", "alpha", "beta", "zeta", "growth_lambda",
                    "rho_prime", "c_constant"):
            value = payload[key]
            shown = "n/a" if value is None else f"{value:.12f}"
            print(f"{key} = {shown}")
    return 0


def _cmd_verify(args, alphabet: Optional[Alphabet]) -> int:
    results = run_suite(args.suite, alphabet=alphabet, seed=args.seed)
    for result in results:
        print(result.line())
    return 0 if all(r.passed for r in results) else 1


# -- parser ------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, *, suppress: bool) -> None:
    # Accepted before or after the subcommand; the later value wins.
    p.add_argument("--alphabet", metavar="a,b",
                   default=argparse.SUPPRESS if suppress else None,
                   help="the two letters, either order (default 1,2)")
    p.add_argument("--format", choices=("text", "json", "csv"),
                   default=argparse.SUPPRESS if suppress else "text",
                   help="output format (default text)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smoothwords",
        description="Smooth words over two-letter alphabets: derivation, "
                    "generation, bispecial trees, complexity, exponents.",
    )
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", help="one derivation step or a full chain")
    p.add_argument("word")
    p.add_argument("--op", choices=sorted(_OPS), default="f")
    p.add_argument("--chain", action="store_true",
                   help="iterate to the empty word or the first failure")

    p = sub.add_parser("check", help="membership with certificate")
    p.add_argument("word")
    p.add_argument("--kind", choices=("f", "r"), default="f")

    p = sub.add_parser("kappa", help="prefix of the self-reading fixed point")
    p.add_argument("--start", type=int, default=None,
                   help="first letter (default: the larger letter)")
    p.add_argument("--length", type=int, required=True)

    p = sub.add_parser("pair", help="coupled pair of self-reading words")
    p.add_argument("--length", type=int, required=True)

    p = sub.add_parser("enumerate", help="all f-smooth words of one length")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_LENGTH_CAP,
                   help=f"length cap (default {DEFAULT_LENGTH_CAP})")

    p = sub.add_parser("complexity", help="factor complexity with bounds")
    p.add_argument("--max", type=int, required=True, metavar="N")
    p.add_argument("--tree-only", action="store_true",
                   help="derive counts from the bispecial trees instead of "
                        "enumerating")
    p.add_argument("--cap", type=int, default=DEFAULT_LENGTH_CAP)

    p = sub.add_parser("tree", help="one generation of a bispecial family")
    p.add_argument("--family", choices=FAMILIES, default="T")
    p.add_argument("--generation", type=int, required=True)
    p.add_argument("--stats", action="store_true",
                   help="lengths and totals instead of the word listing")
    p.add_argument("--cap", type=int, default=DEFAULT_GENERATION_CAP)

    p = sub.add_parser("exponents", help="growth exponents of the alphabet")
    p.add_argument("--reference-table", action="store_true",
                   help="nine-alphabet comparison table at display precision")

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), default="all")
    p.add_argument("--seed", type=int, default=0)

    for sp in sub.choices.values():
        _add_common(sp, suppress=True)
    return parser


_HANDLERS = {
    "derive": _cmd_derive,
    "check": _cmd_check,
    "kappa": _cmd_kappa,
    "pair": _cmd_pair,
    "enumerate": _cmd_enumerate,
    "complexity": _cmd_complexity,
    "tree": _cmd_tree,
    "exponents": _cmd_exponents,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        alphabet = (_parse_alphabet(args.alphabet)
                    if args.alphabet is not None else Alphabet(1, 2))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.command == "verify":
            only = alphabet if args.alphabet is not None else None
            return _cmd_verify(args, only)
        return _HANDLERS[args.command](args, alphabet)
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InvalidFamilyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DerivationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SmoothWordsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # Downstream consumer (head, less) closed the pipe; not an error.
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
