"""Powerful sets and powerful multisets over small ground sets.

A family ``S`` of subsets of ``E`` is powerful when every ``X`` contains a
power-of-two number of members.  Binary linear codes are the motivating
example; see the README for the vocabulary used throughout.
"""

from .core import (
    NON_INTEGER,
    Multiset,
    RankTable,
    SetSystem,
    as_multiset,
    as_set,
    is_isomorphic,
    is_powerful_multiset,
    is_powerful_set,
    make_multiset,
    make_set_system,
    normalize,
    power_set,
    rank_table,
)
from .elements import (
    CocircuitSet,
    ElementClass,
    add_coloop,
    add_frame,
    add_loop,
    add_star,
    classify,
    cocircuits,
    direct_sum,
    from_cocircuits,
    is_coloop,
    is_frame,
    is_loop,
    is_star,
)
from .enumeration import EnumerationReport, census, enumerate_naive, enumerate_powerful
from .linearity import LinearityReport, is_linear, is_subcardinal, linearity_report, xor_span
from .minors import MinorSpec, contract, delete, is_deletable, minor
from .subsets import Indicator, is_power_of_two, z_count, zeta_transform
from .verify import VerificationReport, verify_theorem

__version__ = "0.1.0"
