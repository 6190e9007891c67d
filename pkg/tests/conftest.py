import random
from pathlib import Path

import pytest

from genautomata.generate import random_gdfa, random_nfa, random_wheeler_gdfa
from genautomata.textformat import read_gnfa

DATA = Path(__file__).parent / "data"

FIXTURES = [
    "fig1", "fig2_left", "fig2_right", "fig3", "fig4", "fig5_left", "fig5_right",
    "fig7_center", "fig7_right", "aa", "diamond",
]


def load(name):
    return read_gnfa(DATA / f"{name}.gnfa")


@pytest.fixture(scope="session")
def fx():
    """All named example automata, keyed by file stem."""
    return {name: load(name) for name in FIXTURES}


def wheeler_corpus(seed, count, max_states=30, max_label=4, max_sigma=4):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_states)
        r = rng.randint(1, max_label)
        sigma = "abcd"[: rng.randint(1, max_sigma)]
        out.append(random_wheeler_gdfa(rng, n, r, sigma))
    return out


@pytest.fixture(scope="session")
def wheeler_gdfas():
    """500 seeded Wheeler GDFAs with n <= 30, r <= 4, sigma <= 4."""
    return wheeler_corpus(20261016, 500)


@pytest.fixture(scope="session")
def random_gdfas():
    rng = random.Random(4242)
    return [
        random_gdfa(rng, rng.randint(1, 12), rng.randint(1, 3), "abc"[: rng.randint(1, 3)])
        for _ in range(200)
    ]


@pytest.fixture(scope="session")
def random_nfas():
    rng = random.Random(777)
    return [random_nfa(rng, rng.randint(1, 8), "ab"[: rng.randint(1, 2)]) for _ in range(100)]


def random_patterns(rng, g, count):
    """Mix of empty, single-character, path-derived, random and foreign-character patterns."""
    chars = g.alphabet.chars
    pats = [""] + list(chars)
    foreign = next(c for c in "zyxwvu" if c not in chars)
    pats.append(foreign)
    pats.append(chars[0] + foreign)
    while len(pats) < count:
        kind = rng.random()
        if kind < 0.45:
            u = g.initial if rng.random() < 0.5 else rng.randint(1, g.n)
            w = ""
            for _ in range(rng.randint(1, 8)):
                if not g.out_edges[u]:
                    break
                e = rng.choice(g.out_edges[u])
                w += e.label
                u = e.dst
            if rng.random() < 0.6:
                i = rng.randint(0, len(w))
                w = w[i:rng.randint(i, len(w))]
            pats.append(w)
        elif kind < 0.9:
            pats.append("".join(rng.choice(chars) for _ in range(rng.randint(1, 8))))
        else:
            pats.append("".join(rng.choice(chars) for _ in range(rng.randint(12, 20))))
    return pats[:count]
