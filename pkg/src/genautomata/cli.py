"""Command line interface.

Exit status: 0 on success, 1 for a negative verdict (not a GDFA, not
Wheeler, not isomorphic, a failed check, a non-member), 2 for usage or
input-format errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from pathlib import Path

from . import gbwt
from .core import classify, expand, language_member_naive, trim
from .errors import AutomatonError, ContractError, DomainError, FormatError, InputError
from .fm_index import FmIndex
from .generate import rejection_sample_wheeler
from .nerode import gdfa_isomorphic, minimize
from .oracle import naive_smlg
from .textformat import dump_gnfa, dump_order, parse_order, read_gnfa, write_gnfa
from .wheeler import StateOrder, check_wheeler_order, gdfa_wheeler_order

OK, NEGATIVE, USAGE = 0, 1, 2


class Negative(Exception):
    """A well-formed request whose answer is "no"."""


def _read_order(path: str, g) -> StateOrder:
    return StateOrder(parse_order(Path(path).read_text(), g))


def _read_patterns(path: str) -> list[str]:
    """One pattern per line; a line holding just ``""`` is the empty pattern."""
    out = []
    for line in Path(path).read_text().splitlines():
        if line.startswith("#"):
            continue
        s = line.strip()
        if not s:
            continue
        out.append("" if s == '""' else s)
    return out


def _load_gdfa(path: str):
    g = read_gnfa(path)
    cls = classify(g)
    if not cls.is_gdfa:
        v = cls.violations[0]
        raise Negative(f"not a GDFA: state {g.name(v.state)} has a {v.kind} conflict {list(v.labels)}")
    return g


# -- subcommands ---------------------------------------------------------------------


def cmd_validate(args) -> int:
    g = read_gnfa(args.file)
    cls = classify(g)
    trimmed = trim(g)
    print(f"states {g.n} edges {len(g.edges)} max-label {g.max_label_length}")
    print(f"epsilon-edges {'yes' if cls.has_epsilon else 'no'}")
    kind = "DFA" if cls.is_dfa else "GDFA" if cls.is_gdfa else "NFA" if cls.is_nfa else "GNFA"
    print(f"class {kind}")
    print(f"trimmed {'yes' if trimmed.n == g.n else 'no'}")
    if trimmed.is_empty_language:
        print("language empty")
    for v in cls.violations:
        print(f"violation state {g.name(v.state)} {v.kind} {' '.join(x or chr(34) * 2 for x in v.labels)}")
    return OK if cls.is_gdfa else NEGATIVE


def cmd_trim(args) -> int:
    g = trim(read_gnfa(args.file))
    write_gnfa(g, args.output)
    if g.is_empty_language:
        print("language empty", file=sys.stderr)
        return NEGATIVE
    return OK


def cmd_expand(args) -> int:
    g, _ = expand(read_gnfa(args.file))
    write_gnfa(g, args.output)
    return OK


def cmd_minimize(args) -> int:
    g = _load_gdfa(args.file)
    m = minimize(g)
    write_gnfa(m, args.output)
    print(f"{g.n} -> {m.n} states")
    return OK


def cmd_iso(args) -> int:
    a, b = _load_gdfa(args.a), _load_gdfa(args.b)
    same = gdfa_isomorphic(a, b)
    print("isomorphic" if same else "not isomorphic")
    return OK if same else NEGATIVE


def cmd_wheeler(args) -> int:
    g = _load_gdfa(args.file)
    result = gdfa_wheeler_order(g)
    if not result.is_wheeler:
        u, v = result.witness
        print(f"not Wheeler: {g.name(u)} and {g.name(v)} are incomparable")
        return NEGATIVE
    text = dump_order(result.order.sequence, g)
    print(text, end="")
    if args.emit_order:
        Path(args.emit_order).write_text(text)
    return OK


def cmd_check_order(args) -> int:
    g = read_gnfa(args.file)
    order = _read_order(args.order, g)
    report = check_wheeler_order(g, order, args.bound)
    print(f"initial-first {'holds' if report.initial_first else 'fails'}")
    for title, check in (
        ("co-lex", report.colex_consistent),
        ("labels", report.labels_monotone),
        ("sources", report.sources_monotone),
    ):
        status = "holds" if check.holds else "fails"
        if check.holds and not check.exact:
            status += f" (up to length {args.bound})"
        line = f"{title} {status}"
        if check.witness is not None:
            line += f" witness {check.witness}"
        print(line)
    return OK if report.is_wheeler else NEGATIVE


def cmd_bwt_build(args) -> int:
    g = read_gnfa(args.file)
    order = _read_order(args.order, g)
    try:
        bwt = gbwt.build_bwt(g, order)
    except ContractError as exc:
        raise Negative(str(exc)) from None
    Path(args.output).write_text(gbwt.dumps(bwt))
    print(f"payload {bwt.payload_bits()} bits")
    return OK


def cmd_bwt_decode(args) -> int:
    bwt, names = gbwt.loads(Path(args.file).read_text())
    g, _ = gbwt.decode_bwt(bwt)
    if names is not None:
        g = type(g)(g.n, g.edges, g.initial, g.finals, g.alphabet, names)
    write_gnfa(g, args.output)
    return OK


def cmd_index_build(args) -> int:
    g = read_gnfa(args.file)
    if args.order:
        order = _read_order(args.order, g)
    else:
        g = _load_gdfa(args.file)
        result = gdfa_wheeler_order(g)
        if not result.is_wheeler:
            u, v = result.witness
            raise Negative(f"not Wheeler: {g.name(u)} and {g.name(v)} are incomparable")
        order = result.order
    try:
        idx = FmIndex.from_automaton(g, order)
    except ContractError as exc:
        raise Negative(str(exc)) from None
    idx.save(args.output)
    print(f"indexed {idx.n} states, r={idx.r}, payload {idx.bwt.payload_bits()} bits")
    return OK


def cmd_query(args) -> int:
    idx = FmIndex.load(args.index)
    patterns = [args.pattern] if args.pattern is not None else _read_patterns(args.patterns)
    status = OK
    for p in patterns:
        iv = idx.smlg(p)
        record = {
            "pattern": p,
            "interval": [iv.lo, iv.hi],
            "states": idx.state_names(iv),
            "count": len(iv),
        }
        if args.member:
            record["member"] = idx.member(p)
            if not record["member"]:
                status = NEGATIVE
        if args.json:
            print(json.dumps(record))
        else:
            line = f"{p or chr(34) * 2}\t[{iv.lo},{iv.hi}]\t{' '.join(record['states'])}"
            if args.member:
                line += "\tmember" if record["member"] else "\tnon-member"
            print(line)
    return status


def cmd_xcheck(args) -> int:
    g = _load_gdfa(args.file)
    result = gdfa_wheeler_order(g)
    if not result.is_wheeler:
        raise Negative("not Wheeler")
    idx = FmIndex.from_automaton(g, result.order)
    pos = {u: result.order.position(u) for u in g.states}
    patterns = _read_patterns(args.patterns)
    rng = random.Random(args.seed)
    for _ in range(args.random):
        patterns.append("".join(rng.choice(g.alphabet.chars) for _ in range(rng.randint(0, 8))))
    bad = 0
    for p in patterns:
        iv = idx.smlg(p)
        expect = sorted(pos[u] for u in naive_smlg(g, p))
        got = list(iv.positions())
        if got != expect or idx.member(p) != language_member_naive(g, p):
            bad += 1
            print(f"mismatch {p!r}: index {got} reference {expect}")
    print(f"{len(patterns) - bad}/{len(patterns)} patterns agree")
    return OK if bad == 0 else NEGATIVE


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    g = rejection_sample_wheeler(rng, args.states, args.max_label, args.alphabet, args.max_tries)
    if g is None:
        raise Negative(f"no Wheeler GDFA found in {args.max_tries} draws")
    header = (
        f"# gen states={args.states} max-label={args.max_label} "
        f"alphabet={args.alphabet} seed={args.seed}\n"
    )
    Path(args.output).write_text(header + dump_gnfa(g))
    return OK


# -- argument parsing ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="genautomata", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="parse and classify an automaton")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    for name, func, text in (
        ("trim", cmd_trim, "remove useless states"),
        ("expand", cmd_expand, "split long labels into single characters"),
        ("minimize", cmd_minimize, "minimize a GDFA"),
    ):
        s = sub.add_parser(name, help=text)
        s.add_argument("file")
        s.add_argument("-o", "--output", required=True)
        s.set_defaults(func=func)

    s = sub.add_parser("iso", help="test two GDFAs for isomorphism")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("wheeler", help="compute the Wheeler order of a GDFA")
    s.add_argument("file")
    s.add_argument("--emit-order", metavar="FILE")
    s.set_defaults(func=cmd_wheeler)

    s = sub.add_parser("check-order", help="check the Wheeler properties of a given order")
    s.add_argument("file")
    s.add_argument("--order", required=True)
    s.add_argument("--bound", type=int, default=12)
    s.set_defaults(func=cmd_check_order)

    bwt = sub.add_parser("bwt", help="build or decode the encoding")
    bsub = bwt.add_subparsers(dest="bwt_command", required=True)
    s = bsub.add_parser("build")
    s.add_argument("file")
    s.add_argument("--order", required=True)
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_bwt_build)
    s = bsub.add_parser("decode")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_bwt_decode)

    idx = sub.add_parser("index", help="build a pattern index")
    isub = idx.add_subparsers(dest="index_command", required=True)
    s = isub.add_parser("build")
    s.add_argument("file")
    s.add_argument("--order")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_index_build)

    s = sub.add_parser("query", help="query an index")
    s.add_argument("index")
    group = s.add_mutually_exclusive_group(required=True)
    group.add_argument("--pattern")
    group.add_argument("--patterns", metavar="FILE")
    s.add_argument("--member", action="store_true", help="also test language membership")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_query)

    s = sub.add_parser("xcheck", help="compare index answers with brute force")
    s.add_argument("file")
    s.add_argument("--patterns", required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--random", type=int, default=100, help="extra random patterns")
    s.set_defaults(func=cmd_xcheck)

    s = sub.add_parser("gen", help="sample a random Wheeler GDFA")
    s.add_argument("--states", type=int, required=True)
    s.add_argument("--max-label", type=int, required=True)
    s.add_argument("--alphabet", required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-tries", type=int, default=10_000)
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except Negative as exc:
        print(exc, file=sys.stderr)
        return NEGATIVE
    except DomainError as exc:
        print(exc, file=sys.stderr)
        return NEGATIVE
    except (FormatError, InputError, ContractError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except AutomatonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
