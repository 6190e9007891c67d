"""Co-lex orders on states and Wheeler orders.

For a state ``u`` let ``I_u`` be the strings reaching ``u`` at an edge
boundary.  ``u`` precedes ``v`` in the co-lex relation when every string of
``I_u`` is co-lex smaller than every string of ``I_v``.  A GDFA is Wheeler
when this relation is total on its states.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .core import Gnfa, classify, expand, i_sets, is_strict_suffix, require_gdfa, require_nonempty, trim
from .errors import ContractError, DomainError


@dataclass(frozen=True)
class StateOrder:
    """A total order on the states ``1..n`` given as the sequence Q[1..n]."""

    sequence: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(self.sequence)
        if sorted(seq) != list(range(1, len(seq) + 1)):
            raise ContractError("an order must be a permutation of 1..n")
        object.__setattr__(self, "sequence", seq)

    @cached_property
    def _pos(self) -> dict[int, int]:
        return {u: i for i, u in enumerate(self.sequence, 1)}

    def position(self, u: int) -> int:
        """1-based rank of ``u`` in the order."""
        return self._pos[u]

    def __len__(self) -> int:
        return len(self.sequence)

    def __iter__(self):
        return iter(self.sequence)


@dataclass(frozen=True)
class PartialOrderRelation:
    """A strict partial order given by its set of pairs ``(u, v)`` with ``u < v``."""

    pairs: frozenset[tuple[int, int]]

    def less(self, u: int, v: int) -> bool:
        return (u, v) in self.pairs

    def comparable(self, u: int, v: int) -> bool:
        return u == v or (u, v) in self.pairs or (v, u) in self.pairs

    def restricted(self, states: Iterable[int]) -> "PartialOrderRelation":
        keep = set(states)
        return PartialOrderRelation(frozenset(p for p in self.pairs if p[0] in keep and p[1] in keep))

    def is_strict_partial_order(self) -> bool:
        succ: dict[int, set[int]] = {}
        for u, v in self.pairs:
            if u == v or (v, u) in self.pairs:
                return False
            succ.setdefault(u, set()).add(v)
        for u, v in self.pairs:
            if not succ.get(v, set()) <= succ[u]:
                return False
        return True

    def is_total_on(self, states: Iterable[int]) -> bool:
        return self.first_incomparable(states) is None

    def first_incomparable(self, states: Iterable[int]) -> tuple[int, int] | None:
        states = sorted(states)
        for i, u in enumerate(states):
            for v in states[i + 1:]:
                if not self.comparable(u, v):
                    return u, v
        return None

    def linearize(self, states: Iterable[int]) -> tuple[int, ...]:
        """Sort ``states`` by the relation (which must be total on them)."""
        states = list(states)
        below = {u: 0 for u in states}
        for u, v in self.pairs:
            if v in below and u in below:
                below[v] += 1
        return tuple(sorted(states, key=below.__getitem__))


def dfa_colex_order(d: Gnfa) -> PartialOrderRelation:
    """The co-lex relation on the states of a trimmed DFA.

    Computed as a greatest fixpoint over ordered pairs: a pair ``(u, v)`` is
    discarded when ``v`` is the initial state, when some character entering
    ``u`` is larger than some character entering ``v``, or when ``u`` and
    ``v`` are both entered by a character ``a`` from predecessors whose pair
    was already discarded.  The initial state counts as entered by the empty
    string, which is below every character.
    """
    require_nonempty(d, "dfa_colex_order")
    if not classify(d).is_dfa:
        raise DomainError("dfa_colex_order needs a DFA")
    rank = d.alphabet.rank
    n = d.n
    lo = [None] * (n + 1)
    hi = [None] * (n + 1)
    for e in d.edges:
        c = rank[e.label]
        lo[e.dst] = c if lo[e.dst] is None else min(lo[e.dst], c)
        hi[e.dst] = c if hi[e.dst] is None else max(hi[e.dst], c)
    lo[d.initial] = -1
    if hi[d.initial] is None:
        hi[d.initial] = -1
    if any(lo[u] is None for u in d.states):
        raise DomainError("dfa_colex_order needs a trimmed DFA (some state is unreachable)")

    delta = [dict() for _ in range(n + 1)]
    for e in d.edges:
        delta[e.src][e.label] = e.dst

    alive = set()
    dead = deque()
    for u in d.states:
        for v in d.states:
            if u == v:
                continue
            if v != d.initial and hi[u] <= lo[v]:
                alive.add((u, v))
            else:
                dead.append((u, v))
    while dead:
        up, vp = dead.popleft()
        du, dv = delta[up], delta[vp]
        if len(dv) < len(du):
            du, dv, swapped = dv, du, True
        else:
            swapped = False
        for a, x in du.items():
            y = dv.get(a)
            if y is None or x == y:
                continue
            pair = (y, x) if swapped else (x, y)
            if pair in alive:
                alive.remove(pair)
                dead.append(pair)
    return PartialOrderRelation(frozenset(alive))


def _require_trimmed(g: Gnfa, what: str) -> None:
    if trim(g).n != g.n:
        raise DomainError(f"{what} needs a trimmed automaton")


def gdfa_colex_relation(g: Gnfa) -> PartialOrderRelation:
    """The co-lex relation restricted to the original states of a trimmed GDFA."""
    require_gdfa(g, "gdfa_colex_relation")
    _require_trimmed(g, "gdfa_colex_relation")
    expanded, mapping = expand(g)
    return dfa_colex_order(expanded).restricted(mapping.values())


@dataclass(frozen=True)
class WheelerResult:
    """Either the Wheeler order of a GDFA or two states it cannot order."""

    order: StateOrder | None
    witness: tuple[int, int] | None

    @property
    def is_wheeler(self) -> bool:
        return self.order is not None


def gdfa_wheeler_order(g: Gnfa) -> WheelerResult:
    """Decide whether a trimmed GDFA is Wheeler and return its (unique) order."""
    rel = gdfa_colex_relation(g)
    witness = rel.first_incomparable(g.states)
    if witness is not None:
        return WheelerResult(None, witness)
    return WheelerResult(StateOrder(rel.linearize(g.states)), None)


def induced_gnfa_order(g: Gnfa, nfa_order: StateOrder) -> StateOrder:
    """Restrict an order on the states of ``expand(g)`` to the states of ``g``."""
    expanded, mapping = expand(g)
    if len(nfa_order) != expanded.n:
        raise ContractError(
            f"order covers {len(nfa_order)} states but the expansion has {expanded.n}"
        )
    back = {v: u for u, v in mapping.items()}
    return StateOrder(tuple(back[x] for x in nfa_order.sequence if x in back))


# -- order verification ----------------------------------------------------------


@dataclass(frozen=True)
class PropertyCheck:
    """Outcome of one order property.

    ``exact`` is False when the check could only inspect strings up to a
    length bound and found nothing wrong; a failure is always exact.
    """

    holds: bool
    exact: bool = True
    witness: tuple | None = None


@dataclass(frozen=True)
class OrderReport:
    initial_first: bool
    # u <= v implies that u precedes v in the co-lex preorder of strings
    colex_consistent: PropertyCheck
    # labels entering earlier states are smaller, unless one is a strict suffix
    labels_monotone: PropertyCheck
    # equal labels: the order of targets is reflected by the order of sources
    sources_monotone: PropertyCheck

    @property
    def is_wheeler(self) -> bool:
        return (
            self.initial_first
            and self.colex_consistent.holds
            and self.labels_monotone.holds
            and self.sources_monotone.holds
        )

    @property
    def exact(self) -> bool:
        return self.colex_consistent.exact


def _check_labels_monotone(g: Gnfa, pos: dict[int, int]) -> PropertyCheck:
    key = g.alphabet.key
    by_dst = sorted(g.edges, key=lambda e: pos[e.dst])
    for i, e1 in enumerate(by_dst):
        for e2 in by_dst[i + 1:]:
            if pos[e1.dst] == pos[e2.dst]:
                continue
            if is_strict_suffix(e2.label, e1.label):
                continue
            if key(e1.label) > key(e2.label):
                return PropertyCheck(False, True, (e1, e2))
    return PropertyCheck(True)


def _check_sources_monotone(g: Gnfa, pos: dict[int, int]) -> PropertyCheck:
    by_label: dict[str, list] = {}
    for e in g.edges:
        by_label.setdefault(e.label, []).append(e)
    for label in sorted(by_label):
        group = sorted(by_label[label], key=lambda e: pos[e.dst])
        for i, e1 in enumerate(group):
            for e2 in group[i + 1:]:
                if pos[e1.dst] < pos[e2.dst] and pos[e1.src] > pos[e2.src]:
                    return PropertyCheck(False, True, (e1, e2))
    return PropertyCheck(True)


def _check_colex_exact(g: Gnfa, order: StateOrder) -> PropertyCheck:
    rel = gdfa_colex_relation(g)
    seq = order.sequence
    for i, u in enumerate(seq):
        for v in seq[i + 1:]:
            if not rel.less(u, v):
                return PropertyCheck(False, True, (u, v))
    return PropertyCheck(True)


def _check_colex_bounded(g: Gnfa, order: StateOrder, bound: int) -> PropertyCheck:
    """Look for strings a in I_u, b in I_v (u before v), not both shared, with a >= b."""
    key = g.alphabet.key
    sets = i_sets(g, bound)
    seq = order.sequence
    for i, u in enumerate(seq):
        iu = sets[u]
        for v in seq[i + 1:]:
            iv = sets[v]
            if not iu or not iv:
                continue
            only_u = iu - iv
            only_v = iv - iu
            if only_u:
                a = max(only_u, key=key)
                b = min(iv, key=key)
                if key(a) >= key(b):
                    return PropertyCheck(False, True, (u, v, a, b))
            if only_v:
                a = max(iu, key=key)
                b = min(only_v, key=key)
                if key(a) >= key(b):
                    return PropertyCheck(False, True, (u, v, a, b))
    return PropertyCheck(True, False)


def check_wheeler_order(g: Gnfa, order: StateOrder, bound: int = 12) -> OrderReport:
    """Check the Wheeler properties of ``order`` on an epsilon-free GNFA.

    The label and source conditions are always decided exactly.  The co-lex
    condition is exact for GDFAs and bounded by ``bound`` otherwise.
    """
    require_nonempty(g, "check_wheeler_order")
    if any(e.label == "" for e in g.edges):
        raise DomainError("check_wheeler_order does not accept epsilon edges")
    if len(order) != g.n:
        raise ContractError(f"order has {len(order)} states, automaton has {g.n}")
    pos = {u: order.position(u) for u in g.states}
    cls = classify(g)
    if cls.is_gdfa and trim(g).n == g.n:
        colex = _check_colex_exact(g, order)
    else:
        colex = _check_colex_bounded(g, order, bound)
    return OrderReport(
        initial_first=order.sequence[0] == g.initial,
        colex_consistent=colex,
        labels_monotone=_check_labels_monotone(g, pos),
        sources_monotone=_check_sources_monotone(g, pos),
    )
