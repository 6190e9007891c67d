"""Rank/select structures used by the index.

All positions are 1-based: ``rank(i, c)`` counts occurrences of ``c`` among
the first ``i`` entries (``0 <= i <= len``) and ``select(j, c)`` is the
position of the ``j``-th occurrence.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import Iterable, Sequence

from .core import Alphabet
from .errors import DomainError, QueryError

BLOCK = 64


class RankSelectBitVector:
    """Bit vector with sampled rank counts every ``BLOCK`` bits."""

    def __init__(self, bits: Iterable[int] | str):
        if isinstance(bits, str):
            if set(bits) - {"0", "1"}:
                raise DomainError("bit string must contain only 0 and 1")
            data = bytearray(ch == "1" for ch in bits)
        else:
            data = bytearray(bits)
            if any(b > 1 for b in data):
                raise DomainError("bits must be 0 or 1")
        self._bits = bytes(data)
        ones = [0]
        for start in range(0, len(data), BLOCK):
            ones.append(ones[-1] + data[start:start + BLOCK].count(1))
        self._ones = ones
        self._zeros = [k * BLOCK - c for k, c in enumerate(ones)]
        self._zeros[-1] = len(data) - ones[-1]

    def __len__(self) -> int:
        return len(self._bits)

    def __getitem__(self, i: int) -> int:
        """Bit at 1-based position ``i``."""
        if not 1 <= i <= len(self._bits):
            raise QueryError(f"position {i} outside 1..{len(self._bits)}")
        return self._bits[i - 1]

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self._bits)

    def __eq__(self, other) -> bool:
        return isinstance(other, RankSelectBitVector) and self._bits == other._bits

    def __hash__(self):
        return hash(self._bits)

    def count(self, c: int) -> int:
        ones = self._ones[-1]
        return ones if c else len(self._bits) - ones

    def rank(self, i: int, c: int = 1) -> int:
        if not 0 <= i <= len(self._bits):
            raise QueryError(f"rank position {i} outside 0..{len(self._bits)}")
        b = i // BLOCK
        ones = self._ones[b] + self._bits[b * BLOCK:i].count(1)
        return ones if c else i - ones

    def select(self, j: int, c: int = 1) -> int:
        if not 1 <= j <= self.count(c):
            raise QueryError(f"select({j}, {c}) with only {self.count(c)} occurrences")
        samples = self._ones if c else self._zeros
        # last block whose preceding count is < j
        b = bisect_left(samples, j) - 1
        target = 1 if c else 0
        k = b * BLOCK - 1
        for _ in range(j - samples[b]):
            k = self._bits.index(target, k + 1)
        return k + 1


class LabelSequence:
    """A sequence of equal-length labels with rank, select and access."""

    def __init__(self, length: int, items: Sequence[str]):
        self.length = length
        self.items = tuple(items)
        for x in self.items:
            if len(x) != length:
                raise DomainError(f"label {x!r} does not have length {length}")
        self._positions: dict[str, list[int]] = {}
        for k, x in enumerate(self.items, 1):
            self._positions.setdefault(x, []).append(k)

    def __len__(self) -> int:
        return len(self.items)

    def __eq__(self, other) -> bool:
        return isinstance(other, LabelSequence) and (self.length, self.items) == (other.length, other.items)

    def _check_label(self, rho: str) -> None:
        if len(rho) != self.length:
            raise DomainError(f"label {rho!r} does not have length {self.length}")

    def access(self, k: int) -> str:
        if not 1 <= k <= len(self.items):
            raise QueryError(f"position {k} outside 1..{len(self.items)}")
        return self.items[k - 1]

    def count(self, rho: str) -> int:
        self._check_label(rho)
        return len(self._positions.get(rho, ()))

    def rank(self, k: int, rho: str) -> int:
        self._check_label(rho)
        if not 0 <= k <= len(self.items):
            raise QueryError(f"rank position {k} outside 0..{len(self.items)}")
        return bisect_right(self._positions.get(rho, ()), k)

    def select(self, j: int, rho: str) -> int:
        self._check_label(rho)
        pos = self._positions.get(rho, ())
        if not 1 <= j <= len(pos):
            raise QueryError(f"select({j}, {rho!r}) with only {len(pos)} occurrences")
        return pos[j - 1]


class LabelDictionary:
    """The distinct labels of one length, sorted co-lexicographically.

    Queries may be strings of any length; they are placed among the members
    with the same co-lex comparator.
    """

    def __init__(self, length: int, labels: Iterable[str], alphabet: Alphabet):
        self.length = length
        self.alphabet = alphabet
        members = sorted(set(labels), key=alphabet.key)
        for x in members:
            if len(x) != length:
                raise DomainError(f"label {x!r} does not have length {length}")
        self.members = tuple(members)
        self._keys = [alphabet.key(x) for x in members]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, q: str) -> bool:
        k = self.alphabet.key(q)
        i = bisect_left(self._keys, k)
        return i < len(self._keys) and self._keys[i] == k

    def rank(self, q: str) -> int:
        """Number of members co-lex smaller than or equal to ``q``."""
        return bisect_right(self._keys, self.alphabet.key(q))

    def select(self, j: int) -> str:
        if not 1 <= j <= len(self.members):
            raise QueryError(f"select({j}) in a dictionary of {len(self.members)} labels")
        return self.members[j - 1]

    def pred(self, q: str) -> str | None:
        """Largest member that is co-lex smaller than or equal to ``q``."""
        i = bisect_right(self._keys, self.alphabet.key(q))
        return self.members[i - 1] if i else None

    def pred_strict(self, q: str) -> str | None:
        """Largest member strictly co-lex smaller than ``q``."""
        i = bisect_left(self._keys, self.alphabet.key(q))
        return self.members[i - 1] if i else None

    def succ(self, q: str) -> str | None:
        """Smallest member strictly co-lex larger than ``q``."""
        i = bisect_right(self._keys, self.alphabet.key(q))
        return self.members[i] if i < len(self.members) else None

    def succ_or_equal(self, q: str) -> str | None:
        """Smallest member co-lex larger than or equal to ``q``."""
        i = bisect_left(self._keys, self.alphabet.key(q))
        return self.members[i] if i < len(self.members) else None
