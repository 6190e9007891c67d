import itertools
import random

import pytest

from genautomata.core import Alphabet, Edge, Gnfa, language_member_naive, trim
from genautomata.errors import DomainError, QueryError
from genautomata.fm_index import FmIndex, StateInterval
from genautomata.oracle import classic_forward_search, enumerate_I, naive_g_prec, naive_reach, naive_smlg
from genautomata.wheeler import StateOrder, check_wheeler_order, gdfa_wheeler_order

from conftest import random_patterns


@pytest.fixture(scope="module")
def fig4_index(fx):
    return FmIndex.from_automaton(fx["fig4"])


def test_out_prefix(fig4_index):
    assert fig4_index.out_prefix(1, "b") == 1
    assert fig4_index.out_prefix(3, "b") == 2
    assert fig4_index.out_prefix(0, "b") == 0
    assert fig4_index.out_prefix(3, "abc") == 0
    with pytest.raises(QueryError):
        fig4_index.out_prefix(4, "b")


def test_max_prefix_in_at_most(fig4_index):
    assert fig4_index.max_prefix_in_at_most("b", 0) == 1
    assert fig4_index.max_prefix_in_at_most("b", 2) == 3
    assert fig4_index.max_prefix_in_at_most("b", 1) == 1
    assert fig4_index.max_prefix_in_at_most("bb", 0) == 3


def test_min_prefix_in_at_least(fig4_index):
    assert fig4_index.min_prefix_in_at_least("b", 2) == 2
    assert fig4_index.min_prefix_in_at_least("bc", 1) == 3
    assert fig4_index.min_prefix_in_at_least("c", 5) is None


def test_max_prefix_incoming_below(fig4_index):
    assert fig4_index.max_prefix_incoming_below(1, "b") == 1
    assert fig4_index.max_prefix_incoming_below(2, "abc") == 3
    # non-strict variant: "b" itself is allowed, "c" is not
    assert fig4_index.max_prefix_incoming_below(1, "b", inclusive=True) == 2


def test_max_state_incoming_suffixed(fig4_index):
    assert fig4_index.max_state_incoming_suffixed(2, "c") == 3
    assert fig4_index.max_state_incoming_suffixed(1, "b") == 2
    assert fig4_index.max_state_incoming_suffixed(2, "ab") == 2
    assert fig4_index.max_state_incoming_suffixed(2, "cc") == 0
    with pytest.raises(DomainError):
        fig4_index.max_state_incoming_suffixed(1, "ab")


def test_g_counts(fig4_index):
    assert fig4_index.g_counts("b").final == (1, 2)
    assert fig4_index.g_counts("abc").final == (2, 2)
    assert fig4_index.g_counts("").final == (0, 3)


def test_smlg_examples(fig4_index):
    assert fig4_index.smlg("b") == StateInterval(2, 2)
    assert fig4_index.smlg("bc") == StateInterval(3, 3)
    assert fig4_index.smlg("") == StateInterval(1, 3)
    assert fig4_index.smlg("abc").empty
    assert fig4_index.smlg("xb").empty
    assert fig4_index.state_names(fig4_index.smlg("b")) == ["u2"]


def test_member_examples(fig4_index, fx):
    assert fig4_index.member("abb")
    assert not fig4_index.member("a")
    assert not fig4_index.member("")
    assert not fig4_index.member("zz")
    assert FmIndex.from_automaton(fx["aa"]).member("")
    assert not FmIndex.from_automaton(fx["aa"]).member("a")


def test_index_requires_wheeler(fx):
    with pytest.raises(DomainError):
        FmIndex.from_automaton(fx["fig5_right"])


def test_index_serialization(fig4_index):
    again = FmIndex.loads(fig4_index.dumps())
    assert again.names == ("u1", "u2", "u3")
    for p in ("", "b", "bc", "abb", "cbc"):
        assert again.smlg(p) == fig4_index.smlg(p)
        assert again.member(p) == fig4_index.member(p)


def check_against_oracles(g, order, patterns):
    idx = FmIndex.from_automaton(g, order)
    pos = {u: order.position(u) for u in g.states}
    for p in patterns:
        iv = idx.smlg(p)
        assert list(iv.positions()) == sorted(pos[u] for u in naive_smlg(g, p)), p
        assert idx.member(p) == language_member_naive(g, p), p
        if g.alphabet.covers(p):
            assert list(idx.reach(p).positions()) == sorted(pos[u] for u in naive_reach(g, p)), p
            assert idx.g_counts(p).a[-1] == len(naive_g_prec(g, p)), p


def test_fixtures_against_oracles(fx):
    rng = random.Random(1)
    for name in ("fig4", "fig5_left", "aa", "diamond"):
        g = fx[name]
        check_against_oracles(g, gdfa_wheeler_order(g).order, random_patterns(rng, g, 150))


def test_gnfa_mode_duplicate_labels():
    g = Gnfa(4, [(1, 2, "a"), (1, 3, "a"), (2, 4, "bc"), (3, 4, "c")], 1, {4}, Alphabet("abc"))
    order = StateOrder((1, 2, 3, 4))
    assert check_wheeler_order(g, order).is_wheeler
    idx = FmIndex.from_automaton(g, order)
    assert idx.smlg("a") == StateInterval(2, 3)
    assert idx.member("ac") and idx.member("abc") and not idx.member("bc")
    check_against_oracles(g, order, ["", "a", "b", "c", "ac", "abc", "bc", "aa", "cc"])


def random_acyclic_gnfa(rng, n, alphabet):
    edges = set()
    for v in range(2, n + 1):
        for _ in range(rng.randint(1, 2)):
            u = rng.randint(1, v - 1)
            label = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 3)))
            edges.add(Edge(u, v, label))
    return trim(Gnfa(n, tuple(sorted(edges)), 1, frozenset({n}), Alphabet(alphabet)))


def find_order(g, bound):
    """Brute-force a Wheeler order; exact for acyclic automata with paths shorter than ``bound``."""
    sets = enumerate_I(g, bound)
    key = g.alphabet.key
    start = sorted(g.states, key=lambda u: (key(min(sets[u], key=key)), u))
    for perm in itertools.permutations(start):
        if perm[0] != g.initial:
            continue
        report = check_wheeler_order(g, StateOrder(perm), bound)
        if report.is_wheeler:
            return StateOrder(perm)
    return None


def test_random_gnfas_against_oracles():
    rng = random.Random(31)
    tested = nondeterministic = 0
    for _ in range(300):
        g = random_acyclic_gnfa(rng, rng.randint(2, 6), "ab")
        if g.is_empty_language or g.n > 6:
            continue
        order = find_order(g, 3 * g.n)
        if order is None:
            continue
        tested += 1
        labels = [(e.src, e.label) for e in g.edges]
        nondeterministic += len(labels) != len(set(labels))
        check_against_oracles(g, order, random_patterns(rng, g, 40))
    assert tested >= 50 and nondeterministic >= 5


def test_single_character_case_matches_forward_search():
    rng = random.Random(41)
    from genautomata.generate import random_wheeler_gdfa

    for _ in range(60):
        g = random_wheeler_gdfa(rng, rng.randint(1, 15), 1, "abc"[: rng.randint(1, 3)])
        order = gdfa_wheeler_order(g).order
        idx = FmIndex.from_automaton(g, order)
        for p in random_patterns(rng, g, 60):
            if not g.alphabet.covers(p):
                continue
            lo, hi = classic_forward_search(g, order.sequence, p)
            iv = idx.smlg(p)
            assert (iv.lo, iv.hi) == (lo, hi) or (iv.empty and lo > hi)


def test_prefix_counts_are_consistent(wheeler_gdfas):
    rng = random.Random(5)
    for g in wheeler_gdfas[:60]:
        idx = FmIndex.from_automaton(g)
        for p in random_patterns(rng, g, 30):
            if not g.alphabet.covers(p):
                continue
            counts = idx.g_counts(p)
            assert all(0 <= a <= b <= g.n for a, b in zip(counts.a, counts.b))
