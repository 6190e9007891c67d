"""Brute-force reference implementations used to validate the index.

Everything here works on explicit edge lists and explicit sets of strings.
Only the automaton types are shared with the rest of the package, so a bug
in the fast code paths cannot leak into the reference answers.
"""

from __future__ import annotations

from collections import deque

from .core import Gnfa
from .errors import InputError

DEFAULT_BOUND = 12


def _colex_less(x: str, y: str, order: str) -> bool:
    """Strict co-lex comparison written out character by character."""
    i, j = len(x) - 1, len(y) - 1
    while i >= 0 and j >= 0:
        if x[i] != y[j]:
            return order.index(x[i]) < order.index(y[j])
        i -= 1
        j -= 1
    return i < 0 and j >= 0


def _char_chains(g: Gnfa):
    """One private chain of intermediate nodes per edge; returns (transitions, node count).

    Nodes ``1..n`` are the original states.
    """
    trans: dict[int, list[tuple[str, int]]] = {}
    nxt = g.n + 1
    for src, dst, label in g.edges:
        prev = src
        for k, ch in enumerate(label):
            if k == len(label) - 1:
                node = dst
            else:
                node = nxt
                nxt += 1
            trans.setdefault(prev, []).append((ch, node))
            prev = node
    return trans, nxt - 1


def naive_smlg(g: Gnfa, alpha: str) -> frozenset[int]:
    """States ``u`` with some string reaching ``u`` that ends with ``alpha``.

    A forward walk started at every node, including the nodes inside labels,
    visits every occurrence of ``alpha`` on a path.  Assumes every state is
    reachable, so any walk extends back to the initial state.
    """
    if any(label == "" for _, _, label in g.edges):
        raise ValueError("naive_smlg expects an epsilon-free automaton")
    trans, total = _char_chains(g)
    frontier = set(range(1, total + 1))
    for ch in alpha:
        frontier = {v for u in frontier for c, v in trans.get(u, ()) if c == ch}
        if not frontier:
            break
    return frozenset(u for u in frontier if u <= g.n)


def naive_reach(g: Gnfa, alpha: str) -> frozenset[int]:
    """States reached from the initial state by reading exactly ``alpha``."""
    trans, _ = _char_chains(g)
    frontier = {g.initial}
    for ch in alpha:
        frontier = {v for u in frontier for c, v in trans.get(u, ()) if c == ch}
    return frozenset(u for u in frontier if u <= g.n)


def naive_g_prec(g: Gnfa, alpha: str) -> frozenset[int]:
    """States all of whose strings are co-lex smaller than ``alpha``.

    Computed prefix by prefix: ``u`` qualifies for a prefix ``p`` when every
    label entering ``u`` is smaller than ``p`` and every edge into ``u``
    whose label is a proper suffix of ``p`` comes from a state that
    qualifies for the remaining prefix.
    """
    order = g.alphabet.chars
    if any(ch not in order for ch in alpha):
        raise InputError(f"pattern {alpha!r} uses characters outside the alphabet")
    memo: dict[int, frozenset[int]] = {0: frozenset()}
    incoming: dict[int, list[tuple[int, str]]] = {u: [] for u in range(1, g.n + 1)}
    for src, dst, label in g.edges:
        incoming[dst].append((src, label))

    for m in range(1, len(alpha) + 1):
        p = alpha[:m]
        good = set()
        for u in range(1, g.n + 1):
            ok = True
            for src, label in incoming[u]:
                if not _colex_less(label, p, order):
                    ok = False
                    break
                if len(label) < m and p.endswith(label) and src not in memo[m - len(label)]:
                    ok = False
                    break
            if ok:
                good.add(u)
        memo[m] = frozenset(good)
    return memo[len(alpha)]


def enumerate_I(g: Gnfa, max_len: int = DEFAULT_BOUND) -> dict[int, set[str]]:
    """For each state, all strings of length ``<= max_len`` reaching it from the initial state."""
    result: dict[int, set[str]] = {u: set() for u in range(1, g.n + 1)}
    result[g.initial].add("")
    queue = deque([(g.initial, "")])
    while queue:
        u, w = queue.popleft()
        for src, dst, label in g.edges:
            if src != u:
                continue
            x = w + label
            if len(x) <= max_len and x not in result[dst]:
                result[dst].add(x)
                queue.append((dst, x))
    return result


def enumerate_language(g: Gnfa, max_len: int = DEFAULT_BOUND) -> set[str]:
    sets = enumerate_I(g, max_len)
    return {w for u in g.finals for w in sets[u]}


def moore_minimize_dfa(d: Gnfa):
    """Textbook Moore minimization of a trimmed, single-character DFA.

    Missing transitions go to an implicit dead state.  Returns
    ``(state_count, edges, initial, finals)`` with states numbered from 1 in
    order of their smallest member.
    """
    chars = d.alphabet.chars
    delta = {(src, label): dst for src, dst, label in d.edges}
    DEAD = 0
    states = list(range(0, d.n + 1))

    def target(u, c):
        return delta.get((u, c), DEAD) if u != DEAD else DEAD

    cls = {u: (u in d.finals, u == DEAD) for u in states}
    while True:
        sig = {u: (cls[u],) + tuple(cls[target(u, c)] for c in chars) for u in states}
        ids: dict = {}
        for u in states:
            ids.setdefault(sig[u], len(ids))
        new = {u: ids[sig[u]] for u in states}
        if len(set(new.values())) == len(set(cls.values())):
            break
        cls = new
    dead_class = cls[DEAD]
    blocks: dict = {}
    for u in range(1, d.n + 1):
        if cls[u] != dead_class:
            blocks.setdefault(cls[u], []).append(u)
    ordered = sorted(blocks.values(), key=min)
    num = {}
    for i, members in enumerate(ordered, 1):
        for u in members:
            num[u] = i
    edges = set()
    for members in ordered:
        u = members[0]
        for c in chars:
            v = target(u, c)
            if v != DEAD and cls[v] != dead_class:
                edges.add((num[u], num[v], c))
    finals = frozenset(num[u] for u in d.finals if u in num)
    return len(ordered), frozenset(edges), num[d.initial], finals


def classic_forward_search(d: Gnfa, order: tuple[int, ...], alpha: str) -> tuple[int, int]:
    """Forward search on a Wheeler DFA with explicit edge lists.

    Keeps the interval of order positions reached by the current pattern
    suffix occurrences: start with every state, and after each character
    take the smallest and largest target of that character leaving the
    current interval.  Returns ``(lo, hi)``; empty when ``lo > hi``.
    """
    pos = {u: k for k, u in enumerate(order, 1)}
    lo, hi = 1, len(order)
    for ch in alpha:
        targets = [pos[dst] for src, dst, label in d.edges if label == ch and lo <= pos[src] <= hi]
        if not targets:
            return 1, 0
        lo, hi = min(targets), max(targets)
    return lo, hi
