"""Exact chromatic symmetric functions of unit interval orders.

The package computes chromatic symmetric functions and their graph
analogues in exact arithmetic, and ships verification suites that check
every positivity identity it implements against independent brute-force
oracles (see the README and the `chroma verify` command).
"""

from .combinat import (
    Graph,
    Poset,
    UnitIntervalOrder,
    catalan,
    clan_graph,
    conjugate,
    enumerate_uios,
    inc_graph,
    is_ab_free,
    partitions_of,
    realize,
    uio_from_next,
    uio_from_points,
    uio_recognize,
)
from .chromatic import (
    acyclic_orientation_sinks,
    check_sink_theorem,
    chromatic_symmetric,
    e_coefficients,
    positivity_report,
)
from .corrects import (
    covering_corrects_count,
    enumerate_corrects,
    is_correct,
    m_l1_via_corrects,
    power_via_corrects,
    verify_cancellations,
)
from .ghom import (
    GAnalogueContext,
    apply_ghom,
    elementary_g,
    gnechrom_check,
    monomial_g,
    power_g,
    schur_g,
)
from .lgvgrid import build_grid, lgv_check, path_sum, schur_via_lgv
from .polyring import Polynomial
from .symfunc import (
    SymFunc,
    TransitionMatrixCache,
    cauchy_check,
    convert,
    expand_concrete,
    jacobi_trudi_e,
    newton_p,
    transition_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "Poset",
    "UnitIntervalOrder",
    "GAnalogueContext",
    "Polynomial",
    "SymFunc",
    "TransitionMatrixCache",
    "acyclic_orientation_sinks",
    "apply_ghom",
    "build_grid",
    "catalan",
    "cauchy_check",
    "check_sink_theorem",
    "chromatic_symmetric",
    "clan_graph",
    "conjugate",
    "convert",
    "covering_corrects_count",
    "e_coefficients",
    "elementary_g",
    "enumerate_corrects",
    "enumerate_uios",
    "expand_concrete",
    "gnechrom_check",
    "inc_graph",
    "is_ab_free",
    "is_correct",
    "jacobi_trudi_e",
    "lgv_check",
    "m_l1_via_corrects",
    "monomial_g",
    "newton_p",
    "partitions_of",
    "path_sum",
    "positivity_report",
    "power_g",
    "power_via_corrects",
    "realize",
    "schur_g",
    "schur_via_lgv",
    "transition_matrix",
    "uio_from_next",
    "uio_from_points",
    "uio_recognize",
    "verify_cancellations",
]
