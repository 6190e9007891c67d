"""Sanity checks for the brute-force reference implementations themselves."""

import random

import pytest

from genautomata.core import Alphabet, Gnfa
from genautomata.errors import InputError
from genautomata.generate import random_gdfa
from genautomata.oracle import (
    enumerate_I,
    enumerate_language,
    moore_minimize_dfa,
    naive_g_prec,
    naive_reach,
    naive_smlg,
)


def test_enumerate_I_aa(fx):
    assert enumerate_I(fx["aa"], 4) == {1: {"", "aa", "aaaa"}}


def test_enumerate_I_fig4(fx):
    sets = enumerate_I(fx["fig4"], 3)
    assert sets[1] == {""}
    assert sets[2] == {"b", "ab", "bb", "abb", "bbb"}
    assert sets[3] == {"c", "ac", "cbc"}


def test_g_prec_examples(fx):
    g = fx["fig4"]
    assert naive_g_prec(g, "c") == {1, 2}
    assert naive_g_prec(g, "b") == {1}
    assert naive_g_prec(g, "") == set()


def test_smlg_examples(fx):
    g = fx["fig4"]
    assert naive_smlg(g, "b") == {2}
    assert naive_smlg(g, "bc") == {3}
    assert naive_smlg(g, "") == {1, 2, 3}
    assert naive_reach(g, "ab") == {2}


def test_oracles_agree_with_string_sets():
    """naive_smlg and naive_g_prec against their definitions on enumerated strings."""
    rng = random.Random(2)
    for _ in range(40):
        g = random_gdfa(rng, rng.randint(1, 6), 2, "ab", extra_edges=0)  # trees: finite I-sets
        sets = enumerate_I(g, 40)
        for _ in range(20):
            p = "".join(rng.choice("ab") for _ in range(rng.randint(0, 4)))
            assert naive_smlg(g, p) == {u for u in g.states if any(w.endswith(p) for w in sets[u])}
            assert naive_g_prec(g, p) == {
                u for u in g.states if all(w[::-1] < p[::-1] for w in sets[u])
            }


def test_moore_small():
    # states 2 and 3 are equivalent
    d = Gnfa(4, [(1, 2, "a"), (1, 3, "b"), (2, 4, "c"), (3, 4, "c")], 1, {4}, Alphabet("abc"))
    n, edges, initial, finals = moore_minimize_dfa(d)
    assert n == 3 and initial == 1 and finals == {3}
    assert edges == {(1, 2, "a"), (1, 2, "b"), (2, 3, "c")}


def test_enumerate_language(fx):
    assert enumerate_language(fx["fig4"], 2) == {"b", "c", "ab", "ac", "bb"}


def test_g_prec_rejects_foreign_characters(fx):
    with pytest.raises(InputError):
        naive_g_prec(fx["fig4"], "bz")
