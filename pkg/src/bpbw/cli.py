"""``bpbw`` command line.

Exit codes: 0 clean, 1 semantic failure (invalid presentation, divergence,
nonzero residual, size guard), 2 input error (unreadable or malformed file,
bad expression).
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
from math import comb
from pathlib import Path

from .catalog import BUILTIN_NAMES, builtin_definition, load_builtin
from .deffile import dumps_definition, load_definition, parse_definition
from .envelope import check_confluence, graded_dimensions, hilbert_counts, pbw_basis
from .errors import BpbwError
from .straighten import RewriteCache, Strategy, straighten, u_mul
from .words import format_element, format_word, parse_element

GUARD = 10**6


class _Exit(Exception):
    def __init__(self, code: int, message: str = ""):
        self.code = code
        self.message = message


def _load(source: str):
    path = Path(source)
    if path.exists():
        return load_definition(path)
    if source in BUILTIN_NAMES:
        return parse_definition(builtin_definition(source), name=source)
    raise _Exit(2, f"no such definition file: {source}")


def _terms_json(t, P):
    return [
        {"word": [P.letters[i].name for i in w], "coeff": str(c)}
        for w, c in reversed(t.items())
    ]


def _element_json(t, P):
    return {"text": format_element(t, P), "terms": _terms_json(t, P)}


def _format_degree(g) -> str:
    return "(" + ",".join(str(x) for x in g) + ")"


def _guard(P, d: int, force: bool):
    m = P.size
    size = comb(m + d - 1, d) if m else (1 if d == 0 else 0)
    if size > GUARD and not force:
        raise _Exit(1, f"refusing to enumerate {size} basis words of length {d} (limit {GUARD}; use --force)")


class _Out:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list[str] = []
        self.doc: dict = {}

    def emit(self):
        if self.fmt == "json":
            print(json.dumps(self.doc, indent=2))
        else:
            for line in self.lines:
                print(line)


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args, out: _Out) -> int:
    P = _load(args.file)
    report = P.validate()
    out.lines = report.lines()
    out.doc = {"command": "validate", "ok": report.ok, "issues": report.issues}
    return 0 if report.ok else 1


def _require_valid(P):
    report = P.validate()
    if not report.ok:
        raise _Exit(1, "\n".join(report.lines()))


def cmd_nf(args, out: _Out) -> int:
    P = _load(args.file)
    _require_valid(P)
    t = parse_element(args.expression, P)
    nf = straighten(t, P, args.strategy)
    out.lines = [format_element(nf, P)]
    out.doc = {"command": "nf", "input": args.expression, "strategy": args.strategy, **_element_json(nf, P)}
    return 0


def cmd_mul(args, out: _Out) -> int:
    P = _load(args.file)
    _require_valid(P)
    cache = RewriteCache(P, args.strategy)
    factors = []
    for expr in (args.left, args.right):
        t = parse_element(expr, P)
        if not t.is_pbw_supported():
            t = straighten(t, P, args.strategy, cache)
            print(f"notice: {expr!r} is not PBW-supported; using its normal form "
                  f"{format_element(t, P)}", file=sys.stderr)
        factors.append(t)
    prod = u_mul(*factors, P, args.strategy, cache)
    out.lines = [format_element(prod, P)]
    out.doc = {"command": "mul", "left": args.left, "right": args.right,
               "strategy": args.strategy, **_element_json(prod, P)}
    return 0


def cmd_basis(args, out: _Out) -> int:
    P = _load(args.file)
    _guard(P, args.len, args.force)
    words = pbw_basis(P, args.len)
    out.lines = [format_word(w, P) for w in words]
    out.doc = {"command": "basis", "length": args.len,
               "words": [[P.letters[i].name for i in w] for w in words]}
    return 0


def cmd_hilbert(args, out: _Out) -> int:
    P = _load(args.file)
    _guard(P, args.max, args.force)
    counts = hilbert_counts(P, args.max)
    out.lines = [" ".join(str(c) for c in counts)]
    out.doc = {"command": "hilbert", "max": args.max, "counts": counts}
    return 0


def cmd_graded(args, out: _Out) -> int:
    P = _load(args.file)
    _guard(P, args.max, args.force)
    dims = graded_dimensions(P, args.max)
    out.lines = [f"{_format_degree(g)} {n}" for g, n in dims.items()]
    out.doc = {"command": "graded", "max": args.max,
               "buckets": [{"degree": list(g), "count": n} for g, n in dims.items()]}
    return 0


def cmd_check(args, out: _Out) -> int:
    P = _load(args.file)
    lines: list[str] = []
    doc: dict = {"command": "check", "max_len": args.max_len}
    report = P.validate()
    lines += ["OK validate"] if report.ok else report.lines()
    doc["validate"] = {"ok": report.ok, "issues": report.issues}
    if not report.ok:
        out.lines, out.doc = lines, doc
        return 1
    names = [let.name for let in P.letters]
    m = P.size

    anti = []
    pairs = 0
    for i in range(m):
        for j in range(i, m):
            if not (P.chi_letters(i, j) * P.chi_letters(j, i)).is_one():
                continue
            pairs += 1
            r = P.antisymmetry_residual(i, j)
            if r:
                anti.append((names[i], names[j], P.format_lie(r)))
    lines += [f"ANTISYMMETRY {a},{b} :: {r}" for a, b, r in anti] or [f"OK antisymmetry ({pairs} pairs)"]
    doc["antisymmetry"] = {"pairs": pairs, "failures": [{"pair": [a, b], "residual": r} for a, b, r in anti]}

    cache = RewriteCache(P, args.strategy)
    jac = []
    for a, b, c in itertools.product(range(m), repeat=3):
        r = P.jacobi_residual(a, b, c, args.strategy, cache)
        if r:
            jac.append(([names[a], names[b], names[c]], format_element(r, P)))
    lines += [f"JACOBI {','.join(t)} :: {r}" for t, r in jac] or [f"OK jacobi ({m ** 3} triples)"]
    doc["jacobi"] = {"triples": m**3, "failures": [{"triple": t, "residual": r} for t, r in jac]}

    conf = check_confluence(P, args.max_len)
    lines += conf.lines(P)
    doc["confluence"] = {
        "checked": conf.checked,
        "divergent": [
            {"word": [names[i] for i in d.word],
             "leftmost": _element_json(d.leftmost, P), "rightmost": _element_json(d.rightmost, P)}
            for d in conf.divergent
        ],
    }
    clean = not anti and not jac and conf.ok
    doc["ok"] = clean
    out.lines, out.doc = lines, doc
    return 0 if clean else 1


def cmd_builtin(args, out: _Out) -> int:
    if args.name not in BUILTIN_NAMES:
        raise _Exit(2, f"unknown builtin {args.name!r}; choose from {', '.join(BUILTIN_NAMES)}")
    if args.emit:
        sys.stdout.write(dumps_definition(load_builtin(args.name).presentation))
        out.lines, out.fmt = [], "text"
        return 0
    entry = load_builtin(args.name)
    P = entry.presentation
    out.lines = [f"{entry.name}: " + " < ".join(let.name for let in P.letters)]
    for i, j in itertools.product(range(P.size), repeat=2):
        br = P.bracket_letters(i, j)
        if br:
            out.lines.append(f"[{P.letters[i].name} {P.letters[j].name}] = {P.format_lie(br)}")
    out.doc = {"command": "builtin", "name": entry.name, "definition": builtin_definition(entry.name),
               "confluent": entry.confluent, "jacobi_zero": entry.jacobi_zero}
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--strategy", choices=[s.value for s in Strategy], default="leftmost")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--force", action="store_true", help="lift the basis-size guard")

    parser = argparse.ArgumentParser(prog="bpbw", description="PBW normal forms for braided m-Lie algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common])
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("nf", parents=[common])
    p.add_argument("file")
    p.add_argument("expression")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("mul", parents=[common])
    p.add_argument("file")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("basis", parents=[common])
    p.add_argument("file")
    p.add_argument("--len", type=int, required=True)
    p.set_defaults(func=cmd_basis)

    for name, func in (("hilbert", cmd_hilbert), ("graded", cmd_graded)):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("file")
        p.add_argument("--max", type=int, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("check", parents=[common])
    p.add_argument("file")
    p.add_argument("--max-len", type=int, default=5)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("builtin", parents=[common])
    p.add_argument("name")
    p.add_argument("--emit", action="store_true", help="print the definition file")
    p.set_defaults(func=cmd_builtin)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for attr in ("len", "max", "max_len"):
        if getattr(args, attr, 0) is not None and getattr(args, attr, 0) < 0:
            parser.error(f"--{attr.replace('_', '-')} must be nonnegative")
    out = _Out(args.format)
    try:
        code = args.func(args, out)
    except _Exit as exc:
        if exc.message:
            print(exc.message, file=sys.stderr)
        return exc.code
    except (BpbwError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
