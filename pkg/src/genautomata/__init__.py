"""Generalized automata: Myhill-Nerode minimization, Wheeler orders and an FM-index."""

from .core import (
    Alphabet,
    AutomatonClass,
    Edge,
    Gnfa,
    NfaRunner,
    Violation,
    classify,
    colex_compare,
    expand,
    kernel,
    kernel_at,
    language_equiv,
    language_member_naive,
    reachable_states,
    trim,
    w_language_automaton,
)
from .errors import AutomatonError, ContractError, DomainError, FormatError, InputError, QueryError
from .fm_index import FmIndex, GCounts, StateInterval
from .gbwt import GeneralizedBwt, IndexAux, build_bwt, decode_bwt, derive_aux
from .nerode import (
    RightInvarianceReport,
    StatePartition,
    check_right_invariance,
    gdfa_isomorphic,
    minimize,
    quotient,
    refine_partition,
)
from .textformat import dump_gnfa, parse_gnfa, read_gnfa, write_gnfa
from .wheeler import (
    OrderReport,
    PartialOrderRelation,
    StateOrder,
    WheelerResult,
    check_wheeler_order,
    dfa_colex_order,
    gdfa_wheeler_order,
    induced_gnfa_order,
)

__version__ = "0.1.0"
