"""Seeded random automata for tests and the ``gen`` command."""

from __future__ import annotations

import random

from .core import Alphabet, Edge, Gnfa, trim
from .wheeler import gdfa_wheeler_order


def _random_label(rng: random.Random, alphabet: str, max_label: int) -> str:
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(1, max_label)))


def _fits(labels: set[str], label: str) -> bool:
    """True when ``label`` can join ``labels`` and keep them distinct and prefix-free."""
    return all(not (x.startswith(label) or label.startswith(x)) for x in labels)


def random_gdfa(
    rng: random.Random,
    n: int,
    max_label: int,
    alphabet: str,
    extra_edges: int | None = None,
) -> Gnfa:
    """A trimmed random GDFA with ``n`` states.

    A random spanning tree rooted at state 1 keeps everything reachable, its
    leaves are final so everything is co-reachable; extra edges (back edges,
    loops, cross edges) are added wherever the prefix-free rule allows.
    """
    out: dict[int, set[str]] = {u: set() for u in range(1, n + 1)}
    edges: list[Edge] = []
    has_child = set()
    for v in range(2, n + 1):
        for _ in range(50):
            p = rng.randint(1, v - 1)
            label = _random_label(rng, alphabet, max_label)
            if _fits(out[p], label):
                break
        else:
            # state v - 1 has no children yet, so any label fits there
            p = v - 1
            label = _random_label(rng, alphabet, max_label)
        out[p].add(label)
        edges.append(Edge(p, v, label))
        has_child.add(p)
    if extra_edges is None:
        extra_edges = rng.randint(0, max(1, n // 2))
    for _ in range(extra_edges):
        u, v = rng.randint(1, n), rng.randint(1, n)
        label = _random_label(rng, alphabet, max_label)
        if _fits(out[u], label):
            out[u].add(label)
            edges.append(Edge(u, v, label))
    finals = {u for u in range(1, n + 1) if u not in has_child or rng.random() < 0.3}
    return trim(Gnfa(n, tuple(edges), 1, frozenset(finals), Alphabet(alphabet)))


def random_wheeler_gdfa(
    rng: random.Random,
    n: int,
    max_label: int,
    alphabet: str,
    attempts: int | None = None,
) -> Gnfa:
    """A random Wheeler GDFA with ``n`` states.

    Starts from a random tree (always Wheeler) and tries ``attempts`` extra
    edges, keeping each only if the automaton stays Wheeler.
    """
    tree = random_gdfa(rng, n, max_label, alphabet, extra_edges=0)
    if attempts is None:
        attempts = rng.randint(n, 3 * n)
    g = tree
    for _ in range(attempts):
        u, v = rng.randint(1, n), rng.randint(1, n)
        label = _random_label(rng, alphabet, max_label)
        labels = {e.label for e in g.out_edges[u]}
        if not _fits(labels, label):
            continue
        cand = Gnfa(n, g.edges + (Edge(u, v, label),), g.initial, g.finals, g.alphabet)
        if gdfa_wheeler_order(cand).is_wheeler:
            g = cand
    return g


def rejection_sample_wheeler(
    rng: random.Random,
    n: int,
    max_label: int,
    alphabet: str,
    max_tries: int = 10_000,
) -> Gnfa | None:
    """Draw random trimmed GDFAs until one is Wheeler (None if ``max_tries`` draws all fail)."""
    for _ in range(max_tries):
        g = random_gdfa(rng, n, max_label, alphabet)
        if g.n == n and gdfa_wheeler_order(g).is_wheeler:
            return g
    return None


def random_nfa(rng: random.Random, n: int, alphabet: str, density: float = 1.5) -> Gnfa:
    """A trimmed random NFA (single-character labels, possibly nondeterministic)."""
    edges = set()
    has_child = set()
    for v in range(2, n + 1):
        p = rng.randint(1, v - 1)
        edges.add(Edge(p, v, rng.choice(alphabet)))
        has_child.add(p)
    for _ in range(int(density * n)):
        edges.add(Edge(rng.randint(1, n), rng.randint(1, n), rng.choice(alphabet)))
    finals = {u for u in range(1, n + 1) if u not in has_child or rng.random() < 0.3}
    return trim(Gnfa(n, tuple(sorted(edges)), 1, frozenset(finals), Alphabet(alphabet)))


def duplicate_state(rng: random.Random, g: Gnfa, x: int) -> Gnfa:
    """Split state ``x`` into two copies with the same outgoing edges.

    Incoming edges of ``x`` are shared randomly between the copies, with at
    least one for each.  Language and W-language are unchanged.
    """
    copy = g.n + 1
    edges = list(g.edges)
    for e in g.out_edges[x]:
        edges.append(Edge(copy, e.dst, e.label))
    incoming = [i for i, e in enumerate(edges) if e.dst == x]
    if len(incoming) < 2:
        raise ValueError("state needs at least two incoming edges to be split")
    moved = rng.sample(incoming, rng.randint(1, len(incoming) - 1))
    for i in moved:
        edges[i] = Edge(edges[i].src, copy, edges[i].label)
    finals = set(g.finals) | ({copy} if x in g.finals else set())
    return Gnfa(g.n + 1, tuple(edges), g.initial, frozenset(finals), g.alphabet)
