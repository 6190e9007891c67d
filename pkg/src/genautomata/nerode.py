"""Myhill-Nerode style minimization of GDFAs.

Two states of a trimmed GDFA are merged when they agree on finality, have
the same set of outgoing labels, and keep agreeing after following any
shared label.  Merging such classes yields the unique minimal GDFA for the
pair (language, W-language), up to isomorphism.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .core import Edge, Gnfa, NfaRunner, expand, require_gdfa, trim
from .errors import ContractError, DomainError


@dataclass(frozen=True)
class StatePartition:
    """A partition of the states ``1..n``.  Blocks are numbered from 1 in order of their smallest state."""

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = tuple(sorted((frozenset(b) for b in self.blocks), key=min))
        if any(not b for b in blocks):
            raise ContractError("partition blocks must be non-empty")
        members = [u for b in blocks for u in b]
        if len(members) != len(set(members)):
            raise ContractError("partition blocks must be disjoint")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def by_key(cls, states: Iterable[int], key) -> "StatePartition":
        groups: dict = {}
        for u in states:
            groups.setdefault(key(u), set()).add(u)
        return cls(tuple(frozenset(b) for b in groups.values()))

    @classmethod
    def singletons(cls, n: int) -> "StatePartition":
        return cls(tuple(frozenset([u]) for u in range(1, n + 1)))

    @cached_property
    def block_of(self) -> dict[int, int]:
        return {u: i for i, b in enumerate(self.blocks, 1) for u in b}

    def __len__(self) -> int:
        return len(self.blocks)

    def covers(self, n: int) -> bool:
        return sorted(self.block_of) == list(range(1, n + 1))


def _signature(g: Gnfa, block_of: dict[int, int], u: int):
    return block_of[u], frozenset((e.label, block_of[e.dst]) for e in g.out_edges[u])


def refine_partition(g: Gnfa, initial: StatePartition) -> StatePartition:
    """Coarsest refinement of ``initial`` that is right-invariant.

    In the result, states of one block have the same outgoing labels and
    their successors along any shared label lie in one block.
    """
    require_gdfa(g, "refine_partition")
    if not initial.covers(g.n):
        raise ContractError("initial partition does not cover the states")
    current = initial
    while True:
        block_of = current.block_of
        nxt = StatePartition.by_key(g.states, lambda u: _signature(g, block_of, u))
        if len(nxt) == len(current):
            return current
        current = nxt


def quotient(g: Gnfa, p: StatePartition) -> Gnfa:
    """Collapse every block of ``p`` into one state.

    Edges are taken from any member of a block; right-invariance guarantees
    that every member yields the same edges.
    """
    require_gdfa(g, "quotient")
    if not p.covers(g.n):
        raise ContractError("partition does not cover the states")
    block_of = p.block_of
    edges = set()
    for b in p.blocks:
        finality = {u in g.finals for u in b}
        if len(finality) > 1:
            raise ContractError(f"block {sorted(b)} mixes final and non-final states")
        sigs = {_signature(g, block_of, u)[1] for u in b}
        if len(sigs) > 1:
            raise ContractError(f"block {sorted(b)} is not right-invariant")
        rep = min(b)
        for e in g.out_edges[rep]:
            edges.add(Edge(block_of[rep], block_of[e.dst], e.label))
    names = None
    if g.names is not None:
        names = tuple(g.name(min(b)) for b in p.blocks)
    return Gnfa(
        len(p),
        tuple(sorted(edges)),
        block_of[g.initial],
        frozenset(block_of[u] for u in g.finals),
        g.alphabet,
        names,
    )


def minimize(g: Gnfa) -> Gnfa:
    """The minimal GDFA with the same language and W-language as ``g``."""
    require_gdfa(g, "minimize")
    g = trim(g)
    if g.is_empty_language:
        raise DomainError("minimize: the automaton accepts the empty language")
    start = StatePartition.by_key(g.states, lambda u: u in g.finals)
    return quotient(g, refine_partition(g, start))


def canonical_form(g: Gnfa):
    """Relabel reachable states in breadth-first order from the initial state.

    Outgoing edges are visited in co-lex order of their labels (by code
    point, so that automata over differently ordered alphabets compare
    equal).  Returns ``(n, edges, finals)`` with the new numbering.
    """
    order = {g.initial: 1}
    queue = deque([g.initial])
    while queue:
        u = queue.popleft()
        for e in sorted(g.out_edges[u], key=lambda e: e.label[::-1]):
            if e.dst not in order:
                order[e.dst] = len(order) + 1
                queue.append(e.dst)
    edges = frozenset(
        (order[e.src], order[e.dst], e.label) for e in g.edges if e.src in order
    )
    finals = frozenset(order[u] for u in g.finals if u in order)
    return len(order), edges, finals


def gdfa_isomorphic(a: Gnfa, b: Gnfa) -> bool:
    """Exact isomorphism test for trimmed GDFAs."""
    require_gdfa(a, "gdfa_isomorphic")
    require_gdfa(b, "gdfa_isomorphic")
    if a.n != b.n or len(a.edges) != len(b.edges):
        return False
    ca = canonical_form(a)
    return ca[0] == a.n and ca == canonical_form(b)


@dataclass(frozen=True)
class RightInvarianceReport:
    """Result of a bounded search for a right-invariance violation.

    ``counterexample`` is ``(alpha, beta, phi)``: ``alpha`` and ``beta`` reach
    the same set of states, but ``alpha + phi`` and ``beta + phi`` do not.
    """

    holds: bool
    bound: int
    counterexample: tuple[str, str, str] | None = None


def check_right_invariance(g: Gnfa, max_len: int) -> RightInvarianceReport:
    """Search all strings up to ``max_len`` for a violation of right-invariance.

    Strings are visited in length-then-alphabet order, so the reported
    counterexample is the first one in that order.
    """
    if g.is_empty_language:
        return RightInvarianceReport(True, max_len)
    expanded, mapping = expand(g)
    originals = frozenset(mapping.values())
    runner = NfaRunner(expanded)

    # breadth-first enumeration of the strings that are still alive in the expansion
    classes: dict[frozenset[int], list[tuple[str, frozenset[int]]]] = {}
    level = [("", runner.start())]
    for depth in range(max_len + 1):
        nxt = []
        for word, s in level:
            reached = s & originals
            if reached:
                classes.setdefault(reached, []).append((word, s))
            if depth < max_len:
                for ch in g.alphabet:
                    t = runner.step(s, ch)
                    if t:
                        nxt.append((word + ch, t))
        level = nxt

    for members in classes.values():
        alpha, s_alpha = members[0]
        for beta, s_beta in members[1:]:
            phi = _first_divergence(runner, originals, g.alphabet, s_alpha, s_beta, max_len - len(beta))
            if phi is not None:
                return RightInvarianceReport(False, max_len, (alpha, beta, phi))
    return RightInvarianceReport(True, max_len)


def _first_divergence(runner, originals, alphabet, s1, s2, budget):
    level = [("", s1, s2)]
    for depth in range(budget + 1):
        nxt = []
        for phi, a, b in level:
            ra, rb = a & originals, b & originals
            if ra != rb:
                return phi
            if depth < budget and a != b:
                for ch in alphabet:
                    ta, tb = runner.step(a, ch), runner.step(b, ch)
                    if ta or tb:
                        nxt.append((phi + ch, ta, tb))
        level = nxt
    return None
