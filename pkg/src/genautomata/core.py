"""Automata with string-labeled edges.

States are the integers ``1..n``.  An edge carries a label that is a string
over the alphabet; the empty string stands for an epsilon edge.  Strings are
compared co-lexicographically: right to left, using the alphabet declaration
order, with a proper suffix preceding any longer string that ends with it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import ContractError, DomainError, InputError

#: characters that can never appear in an alphabet.  ``#`` is the sentinel
#: used by the membership construction, ``"`` delimits the empty label.
RESERVED_CHARS = frozenset('#"')


def _allowed_char(ch: str) -> bool:
    return len(ch) == 1 and 33 <= ord(ch) <= 126 and ch not in RESERVED_CHARS


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of printable characters.

    The order of ``chars`` is the character order used by every co-lex
    comparison made against this alphabet.
    """

    chars: str

    def __post_init__(self):
        if len(set(self.chars)) != len(self.chars):
            raise InputError(f"alphabet has repeated characters: {self.chars!r}")
        for ch in self.chars:
            if not _allowed_char(ch):
                raise InputError(f"character {ch!r} is not allowed in an alphabet")

    @classmethod
    def from_labels(cls, labels: Iterable[str]) -> "Alphabet":
        """Alphabet of all characters used by ``labels``, in byte order."""
        return cls("".join(sorted(set("".join(labels)))))

    @cached_property
    def rank(self) -> dict[str, int]:
        return {ch: i for i, ch in enumerate(self.chars)}

    def __len__(self) -> int:
        return len(self.chars)

    def __iter__(self):
        return iter(self.chars)

    def __contains__(self, ch) -> bool:
        return ch in self.rank

    @property
    def largest(self) -> str:
        if not self.chars:
            raise DomainError("empty alphabet has no largest character")
        return self.chars[-1]

    def check(self, text: str) -> str:
        for ch in text:
            if ch not in self.rank:
                raise InputError(f"character {ch!r} is not in alphabet {self.chars!r}")
        return text

    def covers(self, text: str) -> bool:
        return all(ch in self.rank for ch in text)

    def key(self, text: str) -> tuple[int, ...]:
        """Sort key realising the co-lex order on strings over this alphabet."""
        rank = self.rank
        try:
            return tuple(rank[ch] for ch in reversed(text))
        except KeyError as exc:
            raise InputError(f"character {exc.args[0]!r} is not in alphabet {self.chars!r}") from None

    def merged(self, other: "Alphabet") -> "Alphabet":
        return Alphabet(self.chars + "".join(ch for ch in other.chars if ch not in self.rank))


def colex_compare(a: str, b: str, alphabet: Alphabet) -> int:
    """Return -1, 0 or 1 as ``a`` precedes, equals or follows ``b`` co-lexicographically."""
    ka, kb = alphabet.key(a), alphabet.key(b)
    return (ka > kb) - (ka < kb)


def is_strict_suffix(short: str, long: str) -> bool:
    return len(short) < len(long) and long.endswith(short)


class Edge(NamedTuple):
    src: int
    dst: int
    label: str


@dataclass(frozen=True)
class Gnfa:
    """Generalized NFA over string labels.

    ``n == 0`` (with ``initial == 0``) is reserved for the empty-language
    result of :func:`trim`; most operations refuse it.
    """

    n: int
    edges: tuple[Edge, ...]
    initial: int
    finals: frozenset[int]
    alphabet: Alphabet
    names: tuple[str, ...] | None = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(Edge(*e) for e in self.edges))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
        if self.n < 0:
            raise ContractError("negative number of states")
        if self.n == 0:
            if self.initial != 0 or self.edges or self.finals:
                raise ContractError("an automaton without states has no initial state, edges or finals")
        elif not 1 <= self.initial <= self.n:
            raise ContractError(f"initial state {self.initial} out of range 1..{self.n}")
        for u in self.finals:
            if not 1 <= u <= self.n:
                raise ContractError(f"final state {u} out of range 1..{self.n}")
        seen = set()
        for e in self.edges:
            if not (1 <= e.src <= self.n and 1 <= e.dst <= self.n):
                raise ContractError(f"edge {e} references a state outside 1..{self.n}")
            self.alphabet.check(e.label)
            if e in seen:
                raise ContractError(f"duplicate edge {e}")
            seen.add(e)
        if self.names is not None:
            if len(self.names) != self.n or len(set(self.names)) != self.n:
                raise ContractError("state names must be distinct and cover every state")

    # -- adjacency -----------------------------------------------------------

    @property
    def states(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def out_edges(self) -> tuple[tuple[Edge, ...], ...]:
        """``out_edges[u]`` lists edges leaving ``u``; index 0 is unused."""
        table: list[list[Edge]] = [[] for _ in range(self.n + 1)]
        for e in self.edges:
            table[e.src].append(e)
        return tuple(tuple(row) for row in table)

    @cached_property
    def in_edges(self) -> tuple[tuple[Edge, ...], ...]:
        table: list[list[Edge]] = [[] for _ in range(self.n + 1)]
        for e in self.edges:
            table[e.dst].append(e)
        return tuple(tuple(row) for row in table)

    @cached_property
    def max_label_length(self) -> int:
        return max((len(e.label) for e in self.edges), default=0)

    @property
    def is_empty_language(self) -> bool:
        return self.n == 0

    # -- naming --------------------------------------------------------------

    def name(self, u: int) -> str:
        return self.names[u - 1] if self.names is not None else str(u)

    @cached_property
    def _ids_by_name(self) -> dict[str, int]:
        return {self.name(u): u for u in self.states}

    def state_id(self, name: str) -> int:
        try:
            return self._ids_by_name[name]
        except KeyError:
            raise ContractError(f"unknown state name {name!r}") from None

    def renumbered(self, new_id: dict[int, int]) -> "Gnfa":
        """Copy with state ``u`` renamed to ``new_id[u]`` (a permutation of 1..n)."""
        if sorted(new_id) != list(self.states) or sorted(new_id.values()) != list(self.states):
            raise ContractError("renumbering must be a permutation of the states")
        names = None
        if self.names is not None:
            names = [""] * self.n
            for u, v in new_id.items():
                names[v - 1] = self.names[u - 1]
        return Gnfa(
            self.n,
            tuple(Edge(new_id[e.src], new_id[e.dst], e.label) for e in self.edges),
            new_id[self.initial],
            frozenset(new_id[u] for u in self.finals),
            self.alphabet,
            names,
        )

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)


# -- classification -----------------------------------------------------------


class Violation(NamedTuple):
    """Why a state breaks the GDFA conditions."""

    state: int
    kind: str  # "epsilon", "duplicate-label" or "prefix"
    labels: tuple[str, ...]


@dataclass(frozen=True)
class AutomatonClass:
    has_epsilon: bool
    is_nfa: bool
    is_gdfa: bool
    is_dfa: bool
    violations: tuple[Violation, ...]


def classify(g: Gnfa) -> AutomatonClass:
    """Decide which of the NFA / GDFA / DFA classes ``g`` belongs to."""
    violations = []
    has_eps = any(e.label == "" for e in g.edges)
    for u in g.states:
        labels = sorted(e.label for e in g.out_edges[u])
        if "" in labels:
            violations.append(Violation(u, "epsilon", ("",)))
        for x, y in zip(labels, labels[1:]):
            if x == y:
                violations.append(Violation(u, "duplicate-label", (x,)))
        # after a lexicographic sort, any prefix relation shows up between
        # some label and a later neighbour; checking all later labels that
        # still share the prefix keeps this exact
        distinct = sorted(set(l for l in labels if l))
        for i, x in enumerate(distinct):
            for y in distinct[i + 1:]:
                if not y.startswith(x):
                    break
                violations.append(Violation(u, "prefix", (x, y)))
    is_nfa = all(len(e.label) == 1 for e in g.edges)
    is_gdfa = not violations
    return AutomatonClass(has_eps, is_nfa, is_gdfa, is_gdfa and is_nfa, tuple(violations))


def require_gdfa(g: Gnfa, what: str = "operation") -> None:
    if g.is_empty_language:
        raise DomainError(f"{what}: the automaton accepts the empty language")
    cls = classify(g)
    if not cls.is_gdfa:
        v = cls.violations[0]
        raise DomainError(f"{what} needs a GDFA; state {v.state} has a {v.kind} conflict {v.labels}")


def require_nonempty(g: Gnfa, what: str = "operation") -> None:
    if g.is_empty_language:
        raise DomainError(f"{what}: the automaton accepts the empty language")


# -- trimming and expansion -----------------------------------------------------


def _closure(adj: list[list[int]], start: Iterable[int]) -> set[int]:
    seen = set(start)
    stack = list(seen)
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def trim(g: Gnfa) -> Gnfa:
    """Drop states that are unreachable or cannot reach a final state.

    Surviving states keep their relative order.  When the initial state itself
    is useless the language is empty and the zero-state automaton is returned.
    """
    if g.is_empty_language:
        return g
    fwd: list[list[int]] = [[] for _ in range(g.n + 1)]
    bwd: list[list[int]] = [[] for _ in range(g.n + 1)]
    for e in g.edges:
        fwd[e.src].append(e.dst)
        bwd[e.dst].append(e.src)
    useful = _closure(fwd, [g.initial]) & _closure(bwd, g.finals)
    if g.initial not in useful:
        return Gnfa(0, (), 0, frozenset(), g.alphabet, () if g.names is not None else None)
    kept = [u for u in g.states if u in useful]
    new_id = {u: i for i, u in enumerate(kept, 1)}
    edges = tuple(
        Edge(new_id[e.src], new_id[e.dst], e.label)
        for e in g.edges
        if e.src in new_id and e.dst in new_id
    )
    names = tuple(g.name(u) for u in kept) if g.names is not None else None
    return Gnfa(
        len(kept),
        edges,
        new_id[g.initial],
        frozenset(new_id[u] for u in g.finals if u in new_id),
        g.alphabet,
        names,
    )


def expand(g: Gnfa) -> tuple[Gnfa, dict[int, int]]:
    """Replace every edge with a label of length ``>= 2`` by a chain of single characters.

    Original states keep their ids, new states are numbered from ``n + 1``.
    For a GDFA the chains leaving one state share common prefixes (a trie),
    so the result is a DFA.  Otherwise every edge gets its own chain.
    Returns the expanded automaton and the map from original to expanded ids.
    """
    require_nonempty(g, "expand")
    shared = classify(g).is_gdfa
    edges: list[Edge] = []
    names = list(g.name(u) for u in g.states)
    next_id = g.n + 1

    def fresh(tag: str) -> int:
        nonlocal next_id
        names.append(tag)
        next_id += 1
        return next_id - 1

    for u in g.states:
        trie: dict[str, int] = {"": u}
        for chain_no, e in enumerate(sorted(g.out_edges[u], key=lambda e: (e.label, e.dst))):
            if len(e.label) <= 1:
                edges.append(e)
                continue
            prev = u
            for k in range(1, len(e.label)):
                prefix = e.label[:k]
                if shared:
                    if prefix not in trie:
                        trie[prefix] = fresh(f"~{g.name(u)}.{prefix}")
                        edges.append(Edge(prev, trie[prefix], e.label[k - 1]))
                    nxt = trie[prefix]
                else:
                    nxt = fresh(f"~{g.name(u)}.{chain_no}.{prefix}")
                    edges.append(Edge(prev, nxt, e.label[k - 1]))
                prev = nxt
            edges.append(Edge(prev, e.dst, e.label[-1]))
    out = Gnfa(next_id - 1, tuple(edges), g.initial, g.finals, g.alphabet, tuple(names))
    return out, {u: u for u in g.states}


class NfaRunner:
    """Character-by-character simulation of an automaton with labels of length <= 1."""

    def __init__(self, g: Gnfa):
        if any(len(e.label) > 1 for e in g.edges):
            raise ContractError("NfaRunner needs labels of length at most one; expand first")
        self.g = g
        self._eps: list[list[int]] = [[] for _ in range(g.n + 1)]
        self._delta: list[dict[str, list[int]]] = [dict() for _ in range(g.n + 1)]
        for e in g.edges:
            if e.label:
                self._delta[e.src].setdefault(e.label, []).append(e.dst)
            else:
                self._eps[e.src].append(e.dst)
        self._has_eps = any(self._eps)

    def closure(self, states: Iterable[int]) -> frozenset[int]:
        if not self._has_eps:
            return frozenset(states)
        return frozenset(_closure(self._eps, states))

    def start(self) -> frozenset[int]:
        if self.g.is_empty_language:
            return frozenset()
        return self.closure([self.g.initial])

    def step(self, states: Iterable[int], ch: str) -> frozenset[int]:
        out: set[int] = set()
        for u in states:
            out.update(self._delta[u].get(ch, ()))
        return self.closure(out)

    def run(self, text: str, states: Iterable[int] | None = None) -> frozenset[int]:
        current = self.start() if states is None else self.closure(states)
        for ch in text:
            if not current:
                break
            current = self.step(current, ch)
        return current


# -- languages ------------------------------------------------------------------


def reachable_states(g: Gnfa, alpha: str) -> frozenset[int]:
    """The set of states reached from the initial state by a path spelling ``alpha``."""
    if g.is_empty_language:
        return frozenset()
    if not g.alphabet.covers(alpha):
        return frozenset()
    m = len(alpha)
    # at[i] = states reachable after consuming alpha[:i] exactly at an edge boundary
    at: list[set[int]] = [set() for _ in range(m + 1)]
    at[0].add(g.initial)
    for i in range(m + 1):
        stack = list(at[i])
        while stack:
            u = stack.pop()
            for e in g.out_edges[u]:
                j = i + len(e.label)
                if j > m or not alpha.startswith(e.label, i):
                    continue
                if e.dst not in at[j]:
                    at[j].add(e.dst)
                    if j == i:
                        stack.append(e.dst)
    return frozenset(at[m])


def language_member_naive(g: Gnfa, alpha: str) -> bool:
    """Exact membership test by simulating the character-level expansion."""
    if g.is_empty_language or not g.alphabet.covers(alpha):
        return False
    expanded, _ = expand(g)
    return bool(NfaRunner(expanded).run(alpha) & expanded.finals)


def w_language_automaton(g: Gnfa) -> Gnfa:
    """Automaton for the strings that reach some state of ``g`` at an edge boundary.

    It is the expansion of ``g`` with every original state made final.
    """
    require_nonempty(g, "w_language_automaton")
    if any(e.label == "" for e in g.edges):
        raise DomainError("w_language_automaton does not accept epsilon edges")
    expanded, mapping = expand(g)
    return Gnfa(
        expanded.n,
        expanded.edges,
        expanded.initial,
        frozenset(mapping.values()),
        expanded.alphabet,
        expanded.names,
    )


def language_equiv(a: Gnfa, b: Gnfa) -> tuple[bool, str | None]:
    """Compare two languages exactly.

    Returns ``(True, None)`` when they are equal, otherwise ``(False, w)``
    with ``w`` a shortest distinguishing string (the first one found by a
    breadth-first search that tries characters in alphabet order).
    """
    sides = []
    for g in (a, b):
        if g.is_empty_language:
            sides.append(None)
        else:
            sides.append(NfaRunner(expand(g)[0]))
    alphabet = a.alphabet.merged(b.alphabet)

    def start(r):
        return r.start() if r is not None else frozenset()

    def accepts(r, s):
        return r is not None and bool(s & r.g.finals)

    def step(r, s, ch):
        if r is None or not s or not r.g.alphabet.covers(ch):
            return frozenset()
        return r.step(s, ch)

    ra, rb = sides
    first = (start(ra), start(rb))
    seen = {first}
    queue = deque([(first, "")])
    while queue:
        (sa, sb), word = queue.popleft()
        if accepts(ra, sa) != accepts(rb, sb):
            return False, word
        for ch in alphabet:
            nxt = (step(ra, sa, ch), step(rb, sb, ch))
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, word + ch))
    return True, None


def kernel(strings: Iterable[str]) -> frozenset[str]:
    """Members of ``strings`` that have no proper prefix in ``strings``."""
    pool = set(strings)
    return frozenset(
        x for x in pool if not any(x[:k] in pool for k in range(len(x)))
    )


def kernel_at(g: Gnfa, alpha: str) -> frozenset[str]:
    """Prefix-free kernel of the strings that extend ``alpha`` inside the W-language.

    For a trimmed GDFA this is the set of labels leaving the unique state
    reached by ``alpha``.
    """
    require_gdfa(g, "kernel_at")
    reached = reachable_states(g, alpha)
    if not reached:
        raise DomainError(f"{alpha!r} does not reach any state")
    (u,) = reached
    return frozenset(e.label for e in g.out_edges[u])


def i_sets(g: Gnfa, max_len: int) -> dict[int, set[str]]:
    """For every state ``u``, the strings of length ``<= max_len`` that reach ``u``."""
    out: dict[int, set[str]] = {u: set() for u in g.states}
    if g.is_empty_language:
        return out
    out[g.initial].add("")
    queue = deque([(g.initial, "")])
    while queue:
        u, w = queue.popleft()
        for e in g.out_edges[u]:
            x = w + e.label
            if len(x) <= max_len and x not in out[e.dst]:
                out[e.dst].add(x)
                queue.append((e.dst, x))
    return out
