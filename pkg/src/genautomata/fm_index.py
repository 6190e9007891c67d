"""Pattern matching on a Wheeler GDFA (or Wheeler GNFA) through its encoding.

For a pattern ``alpha`` the index reports the states ``u`` such that some
string reaching ``u`` ends with ``alpha``.  Along the Wheeler order these
states form an interval ``[a + 1, b]``, where ``a`` counts the states all of
whose strings are co-lex smaller than ``alpha``.  Both counts are computed
prefix by prefix using only rank and select on the encoding.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import gbwt as gbwt_mod
from .core import Gnfa
from .errors import DomainError, QueryError
from .gbwt import GeneralizedBwt, IndexAux, build_bwt, derive_aux
from .wheeler import StateOrder, gdfa_wheeler_order


@dataclass(frozen=True)
class StateInterval:
    """States ``lo..hi`` of the Wheeler order (empty when ``lo > hi``)."""

    lo: int
    hi: int

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def positions(self) -> range:
        return range(self.lo, self.hi + 1)


@dataclass(frozen=True)
class GCounts:
    """``a[m]`` and ``b[m]`` for every prefix length ``m`` of the pattern."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def final(self) -> tuple[int, int]:
        return self.a[-1], self.b[-1]


class FmIndex:
    """Query structure over a :class:`GeneralizedBwt`.

    ``names[k-1]`` is the external name of the ``k``-th state of the order.
    """

    def __init__(self, bwt: GeneralizedBwt, names: tuple[str, ...] | None = None):
        if bwt.r < 1:
            raise DomainError("an index needs r >= 1")
        self.bwt = bwt
        self.aux: IndexAux = derive_aux(bwt)
        self.n = bwt.n
        self.r = bwt.r
        self.alphabet = bwt.alphabet
        self.names = tuple(names) if names is not None else tuple(str(k) for k in range(1, bwt.n + 1))
        if len(self.names) != self.n:
            raise DomainError("one name per state is required")

    @classmethod
    def from_automaton(cls, g: Gnfa, order: StateOrder | None = None, bound: int = 12) -> "FmIndex":
        """Index ``g``; without an order, ``g`` must be a Wheeler GDFA."""
        if order is None:
            result = gdfa_wheeler_order(g)
            if not result.is_wheeler:
                u, v = result.witness
                raise DomainError(f"not Wheeler: states {g.name(u)} and {g.name(v)} are incomparable")
            order = result.order
        bwt = build_bwt(g, order, bound)
        return cls(bwt, tuple(g.name(u) for u in order.sequence))

    def dumps(self) -> str:
        return gbwt_mod.dumps(self.bwt, self.names)

    @classmethod
    def loads(cls, text: str) -> "FmIndex":
        bwt, names = gbwt_mod.loads(text)
        return cls(bwt, names)

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps())

    @classmethod
    def load(cls, path: str | Path) -> "FmIndex":
        return cls.loads(Path(path).read_text())

    # -- primitive operations -------------------------------------------------------

    def _edges(self, i: int) -> int:
        return len(self.bwt.label_sequence(i))

    def out_prefix(self, k: int, rho: str) -> int:
        """Number of edges labeled ``rho`` leaving the first ``k`` states."""
        if not 0 <= k <= self.n:
            raise QueryError(f"state count {k} outside 0..{self.n}")
        i = len(rho)
        if k == 0 or not 1 <= i <= self.r:
            return 0
        out_v = self.bwt.out_vector(i)
        d = out_v.rank(out_v.select(k, 1), 0)
        return self.bwt.label_sequence(i).rank(d, rho)

    def max_prefix_in_at_most(self, rho: str, h: int) -> int:
        """Largest ``k`` such that at most ``h`` edges labeled ``rho`` enter the first ``k`` states."""
        i = len(rho)
        if not 1 <= i <= self.r:
            return self.n
        lab = self.bwt.label_sequence(i)
        if lab.rank(len(lab), rho) <= h:
            return self.n
        # the (h+1)-th rho edge in (target, label) order sits at position g
        first = self.aux.aux[i - 1].select(self.aux.dicts[i - 1].rank(rho), 1)
        g = first + h
        in_v = self.bwt.in_vector(i)
        f = in_v.rank(in_v.select(g, 0), 1) + 1
        return f - 1

    def min_prefix_in_at_least(self, rho: str, z: int) -> int | None:
        """Smallest ``t`` such that at least ``z >= 1`` edges labeled ``rho`` enter the first ``t`` states."""
        k = self.max_prefix_in_at_most(rho, z - 1)
        return None if k == self.n else k + 1

    def max_prefix_incoming_below(self, i: int, q: str, inclusive: bool = False) -> int:
        """Largest ``h`` such that every length-``i`` label entering the first ``h`` states is below ``q``.

        "Below" is strict co-lex order, or co-lex order with equality when
        ``inclusive`` is set.  ``q`` may have any length.
        """
        d = self.aux.dicts[i - 1]
        y = d.succ(q) if inclusive else d.succ_or_equal(q)
        if y is None:
            return self.n
        return self.max_prefix_in_at_most(y, 0)

    def max_state_incoming_suffixed(self, i: int, alpha: str) -> int:
        """Largest ``h`` such that state ``h`` has an incoming length-``i`` label ending with ``alpha`` (0 if none)."""
        if not len(alpha) <= i <= self.r:
            raise DomainError(f"need |alpha| <= i <= r, got |alpha|={len(alpha)}, i={i}")
        if not self.alphabet.chars:
            return 0
        top = self.alphabet.largest * (i - len(alpha)) + alpha
        a = self.aux.dicts[i - 1].pred(top)
        if a is None or not a.endswith(alpha):
            return 0
        lab = self.bwt.label_sequence(i)
        found = self.min_prefix_in_at_least(a, lab.rank(len(lab), a))
        return found if found is not None else 0

    # -- pattern queries ----------------------------------------------------------------

    def g_counts(self, alpha: str, anchored: bool = False) -> GCounts:
        """Prefix-by-prefix counts ``(a_m, b_m)`` for ``alpha``.

        With ``anchored`` the counts describe paths that start at the initial
        state, as if the pattern were preceded by a fresh sentinel character
        labeling an edge into the initial state.
        """
        if not self.alphabet.covers(alpha):
            raise DomainError(f"pattern {alpha!r} uses characters outside the alphabet")
        r, n = self.r, self.n
        a = [0]
        b = [1 if anchored else n]
        for m in range(1, len(alpha) + 1):
            prefix = alpha[:m]
            # suffixes of the prefix that can label an edge ending the path
            kmax = min(r, m) if anchored else min(r, m - 1)
            fs, gs = [], []
            for k in range(1, kmax + 1):
                rho = prefix[m - k:]
                f = self.out_prefix(a[m - k], rho)
                g = self.out_prefix(b[m - k], rho)
                assert g >= f
                fs.append((rho, f))
                gs.append((rho, f, g))
            lo = min(
                [self.max_prefix_in_at_most(rho, f) for rho, f in fs]
                + [self.max_prefix_incoming_below(i, prefix, inclusive=anchored) for i in range(1, r + 1)]
            )
            hi = lo
            if not anchored:
                for i in range(m, r + 1):
                    hi = max(hi, self.max_state_incoming_suffixed(i, prefix))
            for rho, f, g in gs:
                if g > f:
                    t = self.min_prefix_in_at_least(rho, g)
                    if t is not None:
                        hi = max(hi, t)
            assert lo <= hi
            a.append(lo)
            b.append(hi)
        return GCounts(tuple(a), tuple(b))

    def smlg(self, alpha: str) -> StateInterval:
        """States reached by some string ending with ``alpha``, as an interval of the order."""
        if not self.alphabet.covers(alpha):
            return StateInterval(1, 0)
        lo, hi = self.g_counts(alpha).final
        return StateInterval(lo + 1, hi)

    def reach(self, alpha: str) -> StateInterval:
        """States reached from the initial state by reading exactly ``alpha``."""
        if not self.alphabet.covers(alpha):
            return StateInterval(1, 0)
        lo, hi = self.g_counts(alpha, anchored=True).final
        return StateInterval(lo + 1, hi)

    def member(self, alpha: str) -> bool:
        iv = self.reach(alpha)
        if iv.empty:
            return False
        fin = self.bwt.fin
        return fin.rank(iv.hi, 1) - fin.rank(iv.lo - 1, 1) > 0

    def state_names(self, iv: StateInterval) -> list[str]:
        return [self.names[k - 1] for k in iv.positions()]
