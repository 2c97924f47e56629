"""Link-based convexity obstructions for combinatorial codes.

The verdict chain this module serves: convex implies locally great implies
good-cover realizable, which is equivalent to locally good, which implies
connected.  None of the one-way arrows reverses in general.  Everything
here is decided at the level of links inside the code's complex:

* a code is locally good when every face of its complex that is missing
  from the code has a contractible link, and it suffices to check the
  intersections of maximal codewords (any face outside that family has a
  cone link, so it can never obstruct);
* a code is locally great when every missing face has a collapsible link,
  a strictly stronger, fully decidable demand that is checked against all
  missing faces.

Contractibility itself is semidecidable, so the checker climbs a ladder of
exact special cases (graphs, cones), then collapsibility, then homology,
and answers Unknown only when every rung fails inside budget.
"""

from __future__ import annotations

from dataclasses import dataclass

from .collapse import Budget, is_collapsible
from .complexes import (
    Code,
    SimplicialComplex,
    closure,
    cone,
    face_label,
    link,
    _face_sort_key,
)
from .errors import EmptyInput, InternalInconsistency, LabelOutOfRange, VoidComplex
from .homology import DEFAULT_PRIMES, reduced_betti
from .verdicts import (
    R_ALL_LINKS,
    R_BUDGET,
    R_COLLAPSE_CERT,
    R_CONE_APEX,
    R_INCONCLUSIVE,
    R_NONZERO_BETTI,
    R_NOT_COLLAPSIBLE,
    R_TREE_TEST,
    R_VACUOUS,
    TriStatus,
    Verdict,
)

IMPLICATION_NOTES = (
    "Verdict chain: convex implies locally great implies good-cover "
    "realizable, which holds exactly when the code is locally good, which "
    "implies the code complex is connected. No converse holds in general: "
    "locally good does not give locally great, and locally great does not "
    "give convex. Convexity itself is never decided here."
)


def _graph_summary(cx: SimplicialComplex) -> dict:
    """Vertex, edge, and component counts of a complex of dimension <= 1."""
    verts = [f for f in cx.faces() if f.bit_count() == 1]
    edges = [f for f in cx.faces() if f.bit_count() == 2]
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        lo = e & -e
        hi = e ^ lo
        a, b = find(lo), find(hi)
        if a != b:
            parent[a] = b
    components = len({find(v) for v in verts})
    return {"vertices": len(verts), "edges": len(edges), "components": components}


def contractibility_status(
    cx: SimplicialComplex,
    budget: Budget = Budget(),
    memo: dict | None = None,
    primes=DEFAULT_PRIMES,
) -> TriStatus:
    """Is the complex contractible?  Yes and No are proofs, Unknown is honest.

    Strategy ladder, in order: exact graph test for dimension <= 1 (a graph
    is contractible exactly when it is a tree, and the empty and multi-point
    complexes fail), cone detection (a vertex lying in every facet), a
    collapsibility certificate, then nonvanishing reduced homology over the
    given primes as a disproof.  A complex that is acyclic yet admits no
    collapse within budget stays Unknown.
    """
    if cx.is_void:
        raise VoidComplex("contractibility of the void complex is undefined")
    if cx.dimension() <= 1:
        g = _graph_summary(cx)
        is_tree = (
            g["vertices"] >= 1
            and g["components"] == 1
            and g["edges"] == g["vertices"] - 1
        )
        value = Verdict.YES if is_tree else Verdict.NO
        return TriStatus(value, R_TREE_TEST, certificate=g)
    common = cx.facets[0]
    for f in cx.facets:
        common &= f
    if common:
        apex = common & -common
        return TriStatus(Verdict.YES, R_CONE_APEX, certificate=apex)
    outcome = is_collapsible(cx, "strict", budget, memo)
    if outcome.status is Verdict.YES:
        return TriStatus(Verdict.YES, R_COLLAPSE_CERT, certificate=outcome.certificate)
    for p in primes:
        bv = reduced_betti(cx, p)
        if not bv.is_zero():
            return TriStatus(Verdict.NO, R_NONZERO_BETTI, certificate=bv)
    reason = R_BUDGET if outcome.budget_exhausted else R_INCONCLUSIVE
    return TriStatus(Verdict.UNKNOWN, reason)


def facet_intersections(cx: SimplicialComplex) -> frozenset[int]:
    """Closure of the facet set under pairwise intersection, nonempty members only.

    Every face whose link can fail to be contractible lies in this family,
    which is what lets the locally-good check skip the rest of the complex.
    """
    if cx.is_void:
        raise VoidComplex("the void complex has no facets")
    current = frozenset(f for f in cx.facets if f)
    while True:
        fresh = set()
        members = sorted(current)
        for i, a in enumerate(members):
            for b in members[i + 1 :]:
                c = a & b
                if c and c not in current:
                    fresh.add(c)
        if not fresh:
            return current
        current = current | fresh


def _check_code(code: Code) -> SimplicialComplex:
    if not code.words:
        raise EmptyInput("the code has no words")
    return closure(code)


def mandatory_codewords(
    code: Code,
    budget: Budget = Budget(),
    memo: dict | None = None,
    primes=DEFAULT_PRIMES,
) -> tuple[frozenset[int], frozenset[int]]:
    """Faces every code with this complex must contain, plus the undecided ones.

    A face is mandatory when its link is not contractible.  Only facet
    intersections can be mandatory, so only they are inspected.  Returns
    (found, unknown): ``found`` are proved mandatory, ``unknown`` are the
    faces whose link contractibility the ladder could not settle.
    """
    cx = _check_code(code)
    memo = {} if memo is None else memo
    found, unknown = set(), set()
    for sigma in sorted(facet_intersections(cx), key=_face_sort_key):
        st = contractibility_status(link(cx, sigma), budget, memo, primes)
        if st.is_no:
            found.add(sigma)
        elif st.is_unknown:
            unknown.add(sigma)
    return frozenset(found), frozenset(unknown)


def is_locally_good(
    code: Code,
    budget: Budget = Budget(),
    memo: dict | None = None,
    primes=DEFAULT_PRIMES,
) -> TriStatus:
    """Does the code contain every face that is mandatory for its complex?

    Quantifies over facet intersections missing from the code; the empty
    word never matters.  No carries the first obstructing face in
    (size, mask) order as witness, with the link's own negative
    certificate attached.
    """
    cx = _check_code(code)
    memo = {} if memo is None else memo
    unknown_seen = None
    checked = 0
    for sigma in sorted(facet_intersections(cx), key=_face_sort_key):
        if sigma in code.words:
            continue
        checked += 1
        st = contractibility_status(link(cx, sigma), budget, memo, primes)
        if st.is_no:
            return TriStatus(Verdict.NO, st.reason, witness=sigma, certificate=st.certificate)
        if st.is_unknown and unknown_seen is None:
            unknown_seen = TriStatus(Verdict.UNKNOWN, st.reason, witness=sigma)
    if unknown_seen is not None:
        return unknown_seen
    return TriStatus(Verdict.YES, R_ALL_LINKS if checked else R_VACUOUS)


def is_locally_great(
    code: Code,
    budget: Budget = Budget(),
    memo: dict | None = None,
) -> TriStatus:
    """Does every face missing from the code have a collapsible link?

    Quantifies over all nonempty faces of the complex outside the code,
    not just facet intersections.  Collapsibility is fully decidable, so
    within budget every answer is Yes or No; No carries the witness face
    whose link the exhaustive search rejected.
    """
    cx = _check_code(code)
    memo = {} if memo is None else memo
    unknown_seen = None
    checked = 0
    for sigma in cx.faces():
        if sigma == 0 or sigma in code.words:
            continue
        checked += 1
        outcome = is_collapsible(link(cx, sigma), "strict", budget, memo)
        if outcome.status is Verdict.NO:
            return TriStatus(
                Verdict.NO,
                R_NOT_COLLAPSIBLE,
                witness=sigma,
                certificate={"nodes_explored": outcome.nodes_explored},
            )
        if outcome.status is Verdict.UNKNOWN and unknown_seen is None:
            unknown_seen = TriStatus(Verdict.UNKNOWN, R_BUDGET, witness=sigma)
    if unknown_seen is not None:
        return unknown_seen
    return TriStatus(Verdict.YES, R_ALL_LINKS if checked else R_VACUOUS)


def is_max_intersection_complete(code: Code) -> bool:
    """True when every nonempty intersection of maximal codewords is a codeword."""
    cx = _check_code(code)
    return facet_intersections(cx) <= code.words


def cone_minus_apex(cx: SimplicialComplex) -> Code:
    """The code of all nonempty cone faces except the bare apex.

    Coning a complex and then dropping the apex singleton leaves exactly
    one missing face, the apex itself, whose link is the original complex.
    This packages any contractibility question as a code classification
    question, which is the engine behind the undecidability reduction for
    local goodness.
    """
    if cx.is_void:
        raise VoidComplex("cone_minus_apex needs a nonvoid complex")
    apex = cx.ambient_n + 1
    if apex > 64:
        raise LabelOutOfRange("no fresh label available below the 64-vertex limit")
    coned = cone(cx, apex)
    apex_mask = 1 << (apex - 1)
    words = frozenset(f for f in coned.faces() if f and f != apex_mask)
    return Code(apex, words)


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the classifier decides about one code."""

    code: Code
    sparsity: int
    max_intersection_complete: bool
    locally_good: TriStatus
    locally_great: TriStatus
    mandatory_found: frozenset[int]
    mandatory_unknown: frozenset[int]
    implication_notes: str


def classify(
    code: Code,
    budget: Budget = Budget(),
    primes=DEFAULT_PRIMES,
) -> AnalysisReport:
    """Run the full battery on one code, sharing one memo across all checks."""
    _check_code(code)
    memo: dict = {}
    good = is_locally_good(code, budget, memo, primes)
    great = is_locally_great(code, budget, memo)
    if great.is_yes and good.is_unknown:
        raise InternalInconsistency(
            "locally great was proved but locally good stayed unknown"
        )
    if good.is_no and great.is_yes:
        raise InternalInconsistency(
            f"locally good failed at witness {face_label(good.witness)} "
            "yet locally great was proved"
        )
    found, unknown = mandatory_codewords(code, budget, memo, primes)
    sparsity = max((w.bit_count() for w in code.words), default=0)
    return AnalysisReport(
        code=code,
        sparsity=sparsity,
        max_intersection_complete=is_max_intersection_complete(code),
        locally_good=good,
        locally_great=great,
        mandatory_found=found,
        mandatory_unknown=unknown,
        implication_notes=IMPLICATION_NOTES,
    )
