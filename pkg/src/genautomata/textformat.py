"""Line-oriented text format for automata and state orders.

::

    # comment (only at the start of a line)
    alphabet abc
    states 3
    names u1 u2 u3          (optional)
    initial u1
    final u2 u3
    edge u1 u2 ab
    edge u1 u2 ""           (empty label)

Without a ``names`` line states are referred to by their numbers 1..n.
"""

from __future__ import annotations

from pathlib import Path

from .core import Alphabet, Edge, Gnfa
from .errors import AutomatonError, FormatError

EMPTY_LABEL_TOKEN = '""'


def _label_token(label: str) -> str:
    return label if label else EMPTY_LABEL_TOKEN


def parse_gnfa(text: str) -> Gnfa:
    alphabet = None
    n = None
    names = None
    initial = None
    finals: list[str] = []
    raw_edges: list[tuple[str, str, str, int]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.startswith("#") or not line.strip():
            continue
        parts = line.split()
        key, args = parts[0], parts[1:]
        if key == "alphabet":
            if alphabet is not None or len(args) > 1:
                raise FormatError(f"line {lineno}: bad alphabet declaration")
            try:
                alphabet = Alphabet(args[0] if args else "")
            except AutomatonError as exc:
                raise FormatError(f"line {lineno}: {exc}") from None
        elif key == "states":
            if n is not None or len(args) != 1 or not args[0].isdigit():
                raise FormatError(f"line {lineno}: expected 'states <count>'")
            n = int(args[0])
        elif key == "names":
            if names is not None:
                raise FormatError(f"line {lineno}: repeated names line")
            names = tuple(args)
        elif key == "initial":
            if initial is not None or len(args) != 1:
                raise FormatError(f"line {lineno}: expected 'initial <state>'")
            initial = args[0]
        elif key == "final":
            finals.extend(args)
        elif key == "edge":
            if len(args) != 3:
                raise FormatError(f"line {lineno}: expected 'edge <src> <dst> <label>'")
            label = "" if args[2] == EMPTY_LABEL_TOKEN else args[2]
            raw_edges.append((args[0], args[1], label, lineno))
        else:
            raise FormatError(f"line {lineno}: unknown directive {key!r}")
    if n is None:
        raise FormatError("missing 'states' line")
    if n == 0:
        if initial is not None or finals or raw_edges:
            raise FormatError("an automaton without states has no initial state, finals or edges")
        return Gnfa(0, (), 0, frozenset(), alphabet or Alphabet(""), names)
    if initial is None:
        raise FormatError("missing 'initial' line")
    if names is not None and len(names) != n:
        raise FormatError(f"names line lists {len(names)} names for {n} states")
    if names is not None and len(set(names)) != n:
        raise FormatError("state names must be distinct")
    by_name = {name: i for i, name in enumerate(names, 1)} if names is not None else None

    def state(token: str, lineno: int | None = None) -> int:
        where = f"line {lineno}: " if lineno else ""
        if by_name is not None:
            if token not in by_name:
                raise FormatError(f"{where}unknown state {token!r}")
            return by_name[token]
        if not token.isdigit() or not 1 <= int(token) <= n:
            raise FormatError(f"{where}state {token!r} is not in 1..{n}")
        return int(token)

    edges = []
    seen = set()
    for s, d, label, lineno in raw_edges:
        e = Edge(state(s, lineno), state(d, lineno), label)
        if e in seen:
            raise FormatError(f"line {lineno}: duplicate edge {s} {d} {_label_token(label)}")
        seen.add(e)
        edges.append(e)
    if alphabet is None:
        try:
            alphabet = Alphabet.from_labels(e.label for e in edges)
        except AutomatonError as exc:
            raise FormatError(str(exc)) from None
    for e in edges:
        if not alphabet.covers(e.label):
            raise FormatError(f"label {e.label!r} uses a character outside the alphabet")
    try:
        return Gnfa(n, tuple(edges), state(initial), frozenset(state(f) for f in finals), alphabet, names)
    except AutomatonError as exc:
        raise FormatError(str(exc)) from None


def dump_gnfa(g: Gnfa) -> str:
    """Canonical serialization: edges sorted by source, target, then co-lex label."""
    lines = [f"alphabet {g.alphabet.chars}".rstrip(), f"states {g.n}"]
    if g.names is not None:
        lines.append("names " + " ".join(g.names))
    if g.n:
        lines.append(f"initial {g.name(g.initial)}")
    lines.append(" ".join(["final"] + [g.name(u) for u in sorted(g.finals)]))
    key = g.alphabet.key
    for e in sorted(g.edges, key=lambda e: (e.src, e.dst, key(e.label))):
        lines.append(f"edge {g.name(e.src)} {g.name(e.dst)} {_label_token(e.label)}")
    return "\n".join(lines) + "\n"


def read_gnfa(path: str | Path) -> Gnfa:
    return parse_gnfa(Path(path).read_text())


def write_gnfa(g: Gnfa, path: str | Path) -> None:
    Path(path).write_text(dump_gnfa(g))


def parse_order(text: str, g: Gnfa) -> tuple[int, ...]:
    """Read a whitespace-separated permutation of state names."""
    tokens = [t for line in text.splitlines() if not line.startswith("#") for t in line.split()]
    try:
        seq = tuple(g.state_id(t) for t in tokens)
    except AutomatonError as exc:
        raise FormatError(str(exc)) from None
    if sorted(seq) != list(g.states):
        raise FormatError("order must list every state exactly once")
    return seq


def dump_order(seq, g: Gnfa) -> str:
    return " ".join(g.name(u) for u in seq) + "\n"
