"""Burrows-Wheeler style encoding of a Wheeler GDFA (or Wheeler GNFA).

States are renumbered by the Wheeler order.  For every label length ``i``
the encoding keeps

* ``OUT_i``: for each state in order, one ``0`` per outgoing edge of label
  length ``i`` followed by a ``1``;
* ``IN_i``: the same for incoming edges;
* ``LAB_i``: the labels of length ``i``, sorted by source position and then
  co-lexicographically;

plus the bit vector ``FIN`` of final states.  Nothing else is needed to
rebuild the automaton.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from .core import Alphabet, Edge, Gnfa, require_nonempty
from .errors import ContractError, DomainError, FormatError
from .succinct import LabelDictionary, LabelSequence, RankSelectBitVector
from .wheeler import StateOrder, check_wheeler_order

log = logging.getLogger(__name__)

HEADER = "gbwt v1"


@dataclass(frozen=True)
class GeneralizedBwt:
    n: int
    r: int
    alphabet: Alphabet
    out_bits: tuple[RankSelectBitVector, ...]
    in_bits: tuple[RankSelectBitVector, ...]
    labels: tuple[LabelSequence, ...]
    fin: RankSelectBitVector

    def out_vector(self, i: int) -> RankSelectBitVector:
        return self.out_bits[i - 1]

    def in_vector(self, i: int) -> RankSelectBitVector:
        return self.in_bits[i - 1]

    def label_sequence(self, i: int) -> LabelSequence:
        return self.labels[i - 1]

    def edge_count(self, i: int) -> int:
        return len(self.labels[i - 1])

    def payload_bits(self) -> int:
        """Size of the encoding in bits: labels at ceil(log2 sigma) bits per character plus all bit vectors."""
        per_char = max(1, math.ceil(math.log2(max(2, len(self.alphabet)))))
        total = self.n
        for i in range(1, self.r + 1):
            total += len(self.out_bits[i - 1]) + len(self.in_bits[i - 1])
            total += i * per_char * len(self.labels[i - 1])
        return total


@dataclass(frozen=True)
class IndexAux:
    """Per-length helpers derived from a :class:`GeneralizedBwt`.

    ``aux[i-1]`` marks, in the list of length-``i`` labels sorted co-lex, the
    first occurrence of every distinct label.  ``dicts[i-1]`` holds the
    distinct labels themselves.
    """

    aux: tuple[RankSelectBitVector, ...]
    dicts: tuple[LabelDictionary, ...]


def _unary(degrees) -> str:
    return "".join("0" * d + "1" for d in degrees)


def build_bwt(g: Gnfa, order: StateOrder, bound: int = 12) -> GeneralizedBwt:
    """Encode ``g`` along the Wheeler order ``order``.

    Raises :class:`ContractError` when the order is refuted as a Wheeler order.
    """
    require_nonempty(g, "build_bwt")
    report = check_wheeler_order(g, order, bound)
    if not report.is_wheeler:
        raise ContractError(f"not a Wheeler order: {report}")
    if not report.exact:
        log.warning("co-lex consistency of the order was only checked up to length %d", bound)
    pos = {u: order.position(u) for u in g.states}
    r = max(1, g.max_label_length)
    key = g.alphabet.key
    outs, ins, labs = [], [], []
    for i in range(1, r + 1):
        edges = [e for e in g.edges if len(e.label) == i]
        out_deg = [0] * (g.n + 1)
        in_deg = [0] * (g.n + 1)
        for e in edges:
            out_deg[pos[e.src]] += 1
            in_deg[pos[e.dst]] += 1
        outs.append(RankSelectBitVector(_unary(out_deg[1:])))
        ins.append(RankSelectBitVector(_unary(in_deg[1:])))
        edges.sort(key=lambda e: (pos[e.src], key(e.label), pos[e.dst]))
        labs.append(LabelSequence(i, [e.label for e in edges]))
    fin = RankSelectBitVector([1 if u in g.finals else 0 for u in order.sequence])
    bwt = GeneralizedBwt(g.n, r, g.alphabet, tuple(outs), tuple(ins), tuple(labs), fin)
    log.info("gbwt: n=%d r=%d edges=%d payload=%d bits", g.n, r, len(g.edges), bwt.payload_bits())
    return bwt


def derive_aux(bwt: GeneralizedBwt) -> IndexAux:
    key = bwt.alphabet.key
    aux, dicts = [], []
    for i in range(1, bwt.r + 1):
        ordered = sorted(bwt.label_sequence(i).items, key=key)
        bits = [1 if k == 0 or ordered[k] != ordered[k - 1] else 0 for k in range(len(ordered))]
        aux.append(RankSelectBitVector(bits))
        dicts.append(LabelDictionary(i, ordered, bwt.alphabet))
    return IndexAux(tuple(aux), tuple(dicts))


def _split_by_degree(bits: RankSelectBitVector, items, n: int):
    """Assign ``items`` (in order) to states 1..n according to the unary degrees in ``bits``."""
    groups: list[list] = [[] for _ in range(n + 1)]
    state, k = 1, 0
    for b in str(bits):
        if b == "1":
            state += 1
        else:
            groups[state].append(items[k])
            k += 1
    return groups


def decode_bwt(bwt: GeneralizedBwt) -> tuple[Gnfa, StateOrder]:
    """Rebuild the automaton.  State ``k`` of the result is the ``k``-th state of the order."""
    n = bwt.n
    if n < 1:
        raise FormatError("an encoded automaton has at least one state")
    if len(bwt.fin) != n:
        raise FormatError(f"FIN has {len(bwt.fin)} bits for {n} states")
    key = bwt.alphabet.key
    edges: list[Edge] = []
    for i in range(1, bwt.r + 1):
        out_v, in_v, lab = bwt.out_vector(i), bwt.in_vector(i), bwt.label_sequence(i)
        e = len(lab)
        for name, v in (("OUT", out_v), ("IN", in_v)):
            if v.count(1) != n or v.count(0) != e:
                raise FormatError(f"{name}{i} does not describe {n} states and {e} edges")
        sources = _split_by_degree(out_v, lab.items, n)
        # incoming labels are non-decreasing along the order, so the sorted
        # multiset of labels spread by in-degree gives each state's labels
        targets = _split_by_degree(in_v, sorted(lab.items, key=key), n)
        src_of: dict[str, list[int]] = {}
        dst_of: dict[str, list[int]] = {}
        for u in range(1, n + 1):
            for x in sources[u]:
                src_of.setdefault(x, []).append(u)
            for x in targets[u]:
                dst_of.setdefault(x, []).append(u)
        for x, srcs in src_of.items():
            dsts = dst_of.get(x, [])
            if len(dsts) != len(srcs):
                raise FormatError(f"label {x!r} leaves {len(srcs)} times but enters {len(dsts)} times")
            # edges with one label pair up monotonically
            edges.extend(Edge(s, d, x) for s, d in zip(srcs, dsts))
    if len(set(edges)) != len(edges):
        raise FormatError("decoded automaton has duplicate edges")
    finals = frozenset(k for k in range(1, n + 1) if bwt.fin[k])
    g = Gnfa(n, tuple(edges), 1, finals, bwt.alphabet)
    return g, StateOrder(tuple(range(1, n + 1)))


# -- text serialization --------------------------------------------------------------


def dumps(bwt: GeneralizedBwt, names: tuple[str, ...] | None = None) -> str:
    lines = [HEADER, f"n {bwt.n}", f"r {bwt.r}", f"alphabet {bwt.alphabet.chars}".rstrip()]
    for i in range(1, bwt.r + 1):
        lines.append(f"OUT{i} {bwt.out_vector(i)}".rstrip())
        lines.append(f"IN{i} {bwt.in_vector(i)}".rstrip())
        lines.append(" ".join([f"LAB{i}", *bwt.label_sequence(i).items]))
    lines.append(f"FIN {bwt.fin}".rstrip())
    if names is not None:
        lines.append(" ".join(["names", *names]))
    return "\n".join(lines) + "\n"


def loads(text: str) -> tuple[GeneralizedBwt, tuple[str, ...] | None]:
    """Parse a payload; returns the encoding and the optional state-name list."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != HEADER:
        raise FormatError(f"missing '{HEADER}' header")
    fields: dict[str, list[str]] = {}
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] in fields:
            raise FormatError(f"repeated field {parts[0]}")
        fields[parts[0]] = parts[1:]

    def scalar(name: str) -> int:
        vals = fields.get(name)
        if not vals or len(vals) != 1 or not vals[0].isdigit():
            raise FormatError(f"field {name} must be a non-negative integer")
        return int(vals[0])

    def bits(name: str) -> RankSelectBitVector:
        vals = fields.get(name)
        if vals is None or len(vals) > 1:
            raise FormatError(f"field {name} must be one bit string")
        try:
            return RankSelectBitVector(vals[0] if vals else "")
        except DomainError as exc:
            raise FormatError(f"field {name}: {exc}") from None

    n, r = scalar("n"), scalar("r")
    alpha_tokens = fields.get("alphabet")
    if alpha_tokens is None or len(alpha_tokens) > 1:
        raise FormatError("field alphabet must be a single token")
    try:
        alphabet = Alphabet(alpha_tokens[0] if alpha_tokens else "")
        labs = []
        for i in range(1, r + 1):
            items = fields.get(f"LAB{i}")
            if items is None:
                raise FormatError(f"missing field LAB{i}")
            for x in items:
                alphabet.check(x)
            labs.append(LabelSequence(i, items))
    except (DomainError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(str(exc)) from None
    outs = tuple(bits(f"OUT{i}") for i in range(1, r + 1))
    ins = tuple(bits(f"IN{i}") for i in range(1, r + 1))
    names = tuple(fields["names"]) if "names" in fields else None
    if names is not None and len(names) != n:
        raise FormatError(f"names lists {len(names)} states, expected {n}")
    known = {"n", "r", "alphabet", "FIN", "names"} | {
        f"{k}{i}" for k in ("OUT", "IN", "LAB") for i in range(1, r + 1)
    }
    extra = set(fields) - known
    if extra:
        raise FormatError(f"unknown fields {sorted(extra)}")
    return GeneralizedBwt(n, r, alphabet, outs, ins, tuple(labs), bits("FIN")), names
