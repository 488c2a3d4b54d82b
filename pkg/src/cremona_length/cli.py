"""Command-line front end.

Exit codes: 0 success, 1 parse error, 2 not a proper homaloidal type,
3 invalid matrix, 4 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import homaloidal as H
from . import monomial as M
from . import oracle

EXIT_OK, EXIT_PARSE, EXIT_TYPE, EXIT_MATRIX, EXIT_VERIFY = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


class _Fail(Exception):
    def __init__(self, code: int, message: str, record: dict | None = None):
        super().__init__(message)
        self.code = code
        self.record = record


def _type_json(t: H.HomaloidalType) -> dict:
    return {"text": str(t), "degree": t.degree, "mults": list(t.mults)}


def _parse_type(text: str) -> H.HomaloidalType:
    try:
        d, ms = H.parse_type_text(text)
    except SyntaxError as exc:
        raise _Fail(EXIT_PARSE, str(exc)) from None
    try:
        return H.parse_and_canonicalize(d, ms)
    except H.NotProper as exc:
        trace = [H.format_type(d_, m_) for d_, m_ in exc.trace]
        raise _Fail(EXIT_TYPE, f"{exc}\nHudson trace: " + " -> ".join(trace),
                    {"error": "not proper", "trace": trace}) from None
    except H.TypeError_ as exc:
        raise _Fail(EXIT_TYPE, str(exc), {"error": type(exc).__name__}) from None


def _parse_matrix_or_word(text: str) -> tuple[M.IntMatrix2, tuple[int, ...] | None]:
    try:
        if text.lstrip().startswith("["):
            return M.parse_matrix(text), None
        word = M.parse_word(text)
        return M.word_matrix(word), word
    except SyntaxError as exc:
        raise _Fail(EXIT_PARSE, str(exc)) from None


def _require_unimodular(m: M.IntMatrix2) -> None:
    if m.det not in (1, -1):
        raise _Fail(EXIT_MATRIX, f"{m}: |det| = {abs(m.det)}, expected 1")


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------- commands

def _verify_chain(steps: list[H.HomaloidalType]) -> list[str]:
    problems = []
    for t, nxt in zip(steps, steps[1:]):
        if len(t.mults) <= 16:
            brute = oracle.brute_predecessor(t)
            if brute.results != {nxt}:
                problems.append(f"brute-force predecessor of {t} is {sorted(map(str, brute.results))}, not {nxt}")
    if len(H.castelnuovo_chain(steps[0])) != len(steps):
        problems.append("Castelnuovo chain length differs")
    return problems


def cmd_length(args) -> tuple[dict, str]:
    t = _parse_type(args.type)
    steps = H.chain(t)
    result = {"type": _type_json(t), "length": len(steps) - 1}
    text = str(len(steps) - 1)
    if args.chain:
        result["chain"] = [_type_json(s) for s in steps]
        text += "\n" + " -> ".join(map(str, steps))
    verified = None
    if args.verify:
        problems = _verify_chain(steps)
        verified = not problems
        if problems:
            raise _Fail(EXIT_VERIFY, "\n".join(problems), {"result": result, "verified": False})
    return {"inputs": {"type": args.type}, "result": result, "verified": verified}, text


def cmd_chain(args) -> tuple[dict, str]:
    args.chain = True
    return cmd_length(args)


def cmd_wright(args) -> tuple[dict, str]:
    t = _parse_type(args.type)
    w = H.wright_distance(t)
    return {"inputs": {"type": args.type}, "result": {"type": _type_json(t), "wright_distance": w}}, str(w)


def cmd_hudson(args) -> tuple[dict, str]:
    try:
        d, ms = H.parse_type_text(args.type)
    except SyntaxError as exc:
        raise _Fail(EXIT_PARSE, str(exc)) from None
    if sum(ms) != 3 * (d - 1) or sum(m * m for m in ms) != d * d - 1:
        raise _Fail(EXIT_TYPE, f"{H.format_type(d, ms)} violates the Noether equalities",
                    {"error": "NoetherViolation"})
    verdict = H.hudson_is_proper(d, ms)
    trace = [H.format_type(d_, m_) for d_, m_ in verdict.trace]
    record = {
        "inputs": {"type": args.type},
        "result": {"proper": verdict.proper, "reason": verdict.reason, "trace": trace},
    }
    text = "proper" if verdict.proper else f"not proper ({verdict.reason})"
    if args.trace:
        text += "\n" + "\n".join(trace)
    if not verdict.proper:
        raise _Fail(EXIT_TYPE, text, record)
    return record, text


def _check_degree(d: int) -> None:
    if d < 1:
        raise _Fail(EXIT_PARSE, f"degree must be >= 1, got {d}")


def cmd_table(args) -> tuple[dict, str]:
    _check_degree(args.degree)
    rows = H.table_rows(args.degree)
    record = {"inputs": {"degree": args.degree}, "result": {"rows": [r.as_dict() for r in rows]}}
    return record, "\n".join(r.as_text() for r in rows)


def cmd_enumerate(args) -> tuple[dict, str]:
    _check_degree(args.degree)
    types = H.enumerate_types(args.degree)
    labels = H.type_labels(args.degree)
    record = {
        "inputs": {"degree": args.degree},
        "result": {"count": len(types), "types": [dict(_type_json(t), label=labels[t]) for t in types]},
    }
    return record, "\n".join(str(t) for t in types)


def _mono_length(m: M.IntMatrix2) -> tuple[dict, str]:
    _require_unimodular(m)
    n, w = M.gl2_length(m)
    witness = {"A": w.A.rows(), "B": w.B.rows(), "sign": w.sign, "word": list(w.word)}
    return {"length": n, "witness": witness, "witness_ok": w.check(m)}, str(n)


def _mono_dyn(m: M.IntMatrix2) -> tuple[dict, str]:
    _require_unimodular(m)
    x = M.dynamical_length(m)
    return {"dynamical_length": _frac(x)}, _frac(x)


def _mono_factor(m: M.IntMatrix2) -> tuple[dict, str]:
    try:
        word, flipped = M.factor_word(m)
    except M.InvalidMatrix as exc:
        raise _Fail(EXIT_MATRIX, str(exc)) from None
    text = ",".join(map(str, word)) + (" (after conjugating by tau)" if flipped else "")
    return {"word": list(word), "flipped": flipped, "letters": M.letters(word), "ell": M.ell(word)}, text


def _mono_cf(m: M.IntMatrix2, word) -> tuple[dict, str]:
    if word is not None:
        try:
            m = M.cf_to_word(word)
        except ValueError as exc:
            raise _Fail(EXIT_MATRIX, str(exc)) from None
    try:
        short, full = M.ordered_to_cf(m)
    except M.InvalidMatrix as exc:
        raise _Fail(EXIT_MATRIX, str(exc)) from None

    def show(terms):
        return f"[{terms[0]}; {', '.join(map(str, terms[1:]))}]" if len(terms) > 1 else f"[{terms[0]}]"

    result = {"matrix": m.rows(), "b/a": list(short), "d/c": list(full)}
    text = f"{m}\nb/a = {m.b}/{m.a} = {show(short)}\nd/c = {m.d}/{m.c} = {show(full)}"
    return result, text


def _mono_record(args, what: str) -> tuple[dict, str]:
    m, word = _parse_matrix_or_word(args.input)
    if what == "length":
        result, text = _mono_length(m)
    elif what == "dyn":
        result, text = _mono_dyn(m)
    elif what == "factor":
        result, text = _mono_factor(m)
    else:
        result, text = _mono_cf(m, word)
    return {"inputs": {"input": args.input, "matrix": m.rows(), "query": what}, "result": result}, text


def cmd_mono(args) -> tuple[dict, str]:
    return _mono_record(args, args.query or "length")


def _fixed(what: str):
    def run(args):
        return _mono_record(args, what)

    return run


def cmd_verify(args) -> tuple[dict, str]:
    scopes = ["predecessor", "length", "words"] if args.scope == "all" else [args.scope]
    report: dict[str, dict] = {}
    for scope in scopes:
        checked, failures = 0, []
        if scope in ("predecessor", "length"):
            for d in range(2, args.max_degree + 1):
                for t in H.enumerate_types(d):
                    checked += 1
                    if scope == "predecessor":
                        brute = oracle.brute_predecessor(t)
                        if brute.results != {H.predecessor(t)}:
                            failures.append(f"{t}: brute {sorted(map(str, brute.results))}")
                    else:
                        n = H.length(t)
                        for fresh in (0, 1):
                            budget = oracle.SearchBudget(max_degree=d + 2, max_depth=n + 1, max_fresh_points=fresh)
                            got = oracle.bounded_bfs_length(t, budget)
                            if got != n:
                                failures.append(f"{t}: bfs({fresh}) gave {got}, length {n}")
        else:
            for total in range(args.max_letters + 1):
                for word in _compositions(total):
                    checked += 1
                    if oracle.segment_min_cut(word) != M.ell(word):
                        failures.append(f"{word}: cut {oracle.segment_min_cut(word)} ell {M.ell(word)}")
        report[scope] = {"checked": checked, "failures": failures}
    ok = all(not r["failures"] for r in report.values())
    lines = [f"{s}: {'PASS' if not r['failures'] else 'FAIL'} ({r['checked']} checked)" for s, r in report.items()]
    for r in report.values():
        lines.extend("  " + f for f in r["failures"][:20])
    record = {"inputs": {"scope": args.scope}, "result": report, "verified": ok}
    if not ok:
        raise _Fail(EXIT_VERIFY, "\n".join(lines), record)
    return record, "\n".join(lines)


def _compositions(total: int):
    if total == 0:
        yield ()
        return
    for s in range(1, total + 1):
        for rest in _compositions(total - s):
            yield (s,) + rest


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a top-level --json from being reset by the subcommand
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit a machine-readable record")

    parser = _Parser(prog="cremona-length", description="Lengths of plane Cremona transformations.")
    parser.add_argument("--json", action="store_true", help="emit a machine-readable record")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.set_defaults(func=func)
        return p

    p = add("length", cmd_length, "length of a homaloidal type")
    p.add_argument("type", help='e.g. "(17; 6^8)"')
    p.add_argument("--chain", action="store_true", help="also print the predecessor chain")
    p.add_argument("--verify", action="store_true", help="cross-check each step by brute force")

    p = add("chain", cmd_chain, "predecessor chain down to (1)")
    p.add_argument("type")
    p.add_argument("--verify", action="store_true")

    p = add("wright", cmd_wright, "distance to the base vertex in the Wright complex")
    p.add_argument("type")

    p = add("hudson", cmd_hudson, "Hudson test on Noether-valid data")
    p.add_argument("type", help="negative entries allowed, e.g. \"(-7; -2^12)\"")
    p.add_argument("--trace", action="store_true", help="print the descent")

    p = add("table", cmd_table, "length table for one degree")
    p.add_argument("degree", type=int)

    p = add("enumerate", cmd_enumerate, "all proper types of one degree")
    p.add_argument("degree", type=int)

    for name, what, help_ in [
        ("mono-length", "length", "length of a monomial map"),
        ("mono-dyn", "dyn", "dynamical length of a monomial map"),
        ("factor", "factor", "L/R factorization of a non-negative matrix"),
        ("cf", "cf", "continued fractions of an ordered matrix (or matrix of an even word)"),
    ]:
        p = add(name, _fixed(what), help_)
        p.add_argument("input", help='matrix "[[a,b],[c,d]]" or word "3,5,7,1"')

    p = add("mono", cmd_mono, "monomial queries")
    p.add_argument("input")
    g = p.add_mutually_exclusive_group()
    for flag in ("length", "dyn", "factor", "cf"):
        g.add_argument(f"--{flag}", dest="query", action="store_const", const=flag)

    p = add("verify", cmd_verify, "run the oracle agreement checks")
    p.add_argument("scope", nargs="?", default="all", choices=["predecessor", "length", "words", "all"])
    p.add_argument("--max-degree", type=int, default=8)
    p.add_argument("--max-letters", type=int, default=14)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record, text = args.func(args)
        code = EXIT_OK
    except _Fail as exc:
        record = dict(exc.record or {})
        record.setdefault("error", str(exc))
        text, code = str(exc), exc.code
    record = {"command": args.command, **record, "exit_code": code}
    if args.json:
        print(json.dumps(record, sort_keys=True))
    elif code == EXIT_OK:
        print(text)
    else:
        print(text, file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
