"""Local obstructions to convexity for combinatorial neural codes.

Decide whether a code is locally good (realizable by a good cover) or
locally great (every missing face has a collapsible link), with
machine-checkable certificates, plus an exact combinatorial audit of the
canonical open realization.  See the README for the file format and CLI.
"""

from .analysis import (
    AnalysisReport,
    classify,
    cone_minus_apex,
    contractibility_status,
    facet_intersections,
    is_locally_good,
    is_locally_great,
    is_max_intersection_complete,
    mandatory_codewords,
)
from .collapse import (
    Budget,
    CollapseOutcome,
    CollapseStep,
    available_kernels,
    certifies_collapse,
    elementary_collapse,
    free_pairs,
    greedy_collapse,
    is_collapsible,
    kernel_name,
    replay_certificate,
)
from .complexes import (
    Code,
    SimplicialComplex,
    closure,
    cone,
    face_label,
    face_members,
    face_of,
    is_k_sparse,
    link,
    maximal_codewords,
    order_complex,
    restriction,
)
from .errors import ConvexCodesError
from .homology import BettiVector, boundary_matrix, is_acyclic, reduced_betti
from .realization import (
    ArrangementCell,
    CodeComplexRealization,
    cell_region,
    code_complex_realization,
    code_link,
    enumerate_cells,
    good_cover_check,
    realized_code_from_U,
    realized_code_from_closures,
    v_region_contractibility,
)
from .verdicts import TriStatus, Verdict

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "ArrangementCell",
    "BettiVector",
    "Budget",
    "Code",
    "CodeComplexRealization",
    "CollapseOutcome",
    "CollapseStep",
    "ConvexCodesError",
    "SimplicialComplex",
    "TriStatus",
    "Verdict",
    "available_kernels",
    "boundary_matrix",
    "cell_region",
    "certifies_collapse",
    "classify",
    "closure",
    "code_complex_realization",
    "code_link",
    "cone",
    "cone_minus_apex",
    "contractibility_status",
    "elementary_collapse",
    "enumerate_cells",
    "face_label",
    "face_members",
    "face_of",
    "facet_intersections",
    "free_pairs",
    "good_cover_check",
    "greedy_collapse",
    "is_acyclic",
    "is_collapsible",
    "is_k_sparse",
    "is_locally_good",
    "is_locally_great",
    "is_max_intersection_complete",
    "kernel_name",
    "link",
    "mandatory_codewords",
    "maximal_codewords",
    "order_complex",
    "realized_code_from_U",
    "realized_code_from_closures",
    "reduced_betti",
    "replay_certificate",
    "restriction",
    "v_region_contractibility",
    "__version__",
]
