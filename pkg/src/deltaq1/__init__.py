"""Exact-arithmetic expansions of the Delta operator image of e_n at q=1.

Combinatorial models (M-sequences, decorated Dyck paths, labeled diagrams
with a sign-reversing involution, ordered set partitions, tableaux) are
cross-checked against an independent Macdonald eigenoperator computation,
all over exact integer and rational polynomial arithmetic in t.
"""

from .partitions import (
    Partition,
    distinct_orderings,
    padded_rearrangements,
    partitions_of,
    rearrangement_count,
    zee,
)
from .tarith import (
    TLaurent,
    TPoly,
    TRat,
    TSeries,
    partitions_bounded_rat,
    partitions_bounded_series,
    t_analog,
    t_pochhammer,
)
from .symfunc import (
    BASES,
    SymFuncExpr,
    character,
    degree_bound,
    hall_inner,
    plethysm_geometric,
    set_degree_bound,
)
from .specialize import (
    forgotten_at_one,
    forgotten_at_one_minus_t,
    forgotten_coefficient_series,
    hf_term_series,
    monomial_eval,
)
from .dyck import (
    DecoratedDyckPath,
    DyckPath,
    decoration_weight,
    enumerate_decorated,
    enumerate_paths,
)
from .msequences import (
    MSequence,
    OSPSequence,
    SSYTSequence,
    generic_polynomial,
    msequence_polynomial,
    msequences,
    osp_polynomial,
    osp_sequences,
    ssyt_polynomial,
    ssyt_sequences,
)
from .diagrams import (
    ColumnStack,
    LabeledDiagram,
    can_combine,
    combine,
    diagrams_of_weight,
    fixed_to_msequence,
    involution,
    split,
)
from .bijection import decorated_to_msequence, msequence_to_decorated
from .oracle import (
    delta_e,
    delta_general,
    elementary_eigenvalue,
    geometric_h_expansion,
    haglund_check,
    macdonald_q1,
)
from .verify import run_suite

__version__ = "0.1.0"
