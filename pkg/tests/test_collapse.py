"""Elementary collapses and the exhaustive collapsibility search."""

import os
import subprocess
import sys

import pytest

from convexcodes.collapse import (
    Budget,
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
from convexcodes.complexes import (
    Code,
    SimplicialComplex,
    closure,
    face_of,
    order_complex,
    simplex_faces,
)
from convexcodes.errors import IllegalStep, VoidComplex
from convexcodes.instances import (
    all_facet_antichains,
    dunce_hat,
    random_complex,
)
from convexcodes.verdicts import Verdict

from . import oracles


def F(digits):
    return face_of(int(c) for c in digits)


TWO_FACETS = closure(Code(4, frozenset({F("123"), F("34")})))
POINT = SimplicialComplex.from_facets(1, [1])


def pairs(cx, mode):
    return [(s.sigma, s.tau) for s in free_pairs(cx, mode=mode)]


def subdivided_triangle():
    return order_complex(simplex_faces([1, 2, 3]))


def test_free_pairs_example():
    got = pairs(TWO_FACETS, "collapse")
    for want in [(F("1"), F("123")), (F("2"), F("123")), (F("13"), F("123")),
                 (F("23"), F("123")), (F("4"), F("34"))]:
        assert want in got
    assert all(s != F("3") for s, _ in got)  # 3 lies in both facets


def test_free_pairs_order():
    got = pairs(TWO_FACETS, "collapse")
    assert got == sorted(got, key=lambda st: (st[0].bit_count(), st[0], st[1]))
    strict = pairs(TWO_FACETS, "strict")
    assert strict == [(F("4"), F("34")), (F("12"), F("123")),
                      (F("13"), F("123")), (F("23"), F("123"))]


def test_free_pairs_dunce_hat_empty():
    assert free_pairs(dunce_hat(), mode="collapse") == []
    assert free_pairs(dunce_hat(), mode="strict") == []


def test_free_pairs_point_modes():
    assert free_pairs(POINT, mode="collapse") == []
    assert pairs(POINT, "generalized") == [(1, 1)]


def test_free_pairs_matches_definition():
    for seed in range(30):
        cx = random_complex(6, seed)
        if cx.is_void:
            continue
        for mode in ("generalized", "collapse", "strict"):
            assert pairs(cx, mode) == oracles.free_pairs_by_definition(cx, mode)


def test_elementary_collapse_examples():
    facet_del = elementary_collapse(TWO_FACETS, CollapseStep(F("123"), F("123")))
    assert set(facet_del.facets) == {F("12"), F("13"), F("23"), F("34")}
    after = elementary_collapse(TWO_FACETS, CollapseStep(F("1"), F("123")))
    assert set(after.facets) == {F("23"), F("34")}
    edge = closure(Code(4, frozenset({F("34")})))
    assert elementary_collapse(edge, CollapseStep(F("3"), F("34"))).facets == (F("4"),)


def test_elementary_collapse_removes_exactly_star():
    for seed in range(25):
        cx = random_complex(5, seed)
        for step in free_pairs(cx, mode="generalized")[:3]:
            after = elementary_collapse(cx, step)
            want = {f for f in cx.faces() if step.sigma & ~f != 0 or f == 0}
            assert set(after.faces()) == want


def test_elementary_collapse_illegal_steps():
    with pytest.raises(IllegalStep):
        elementary_collapse(TWO_FACETS, CollapseStep(F("3"), F("123")))  # not unique
    with pytest.raises(IllegalStep):
        elementary_collapse(TWO_FACETS, CollapseStep(F("1"), F("12")))  # tau not facet
    with pytest.raises(IllegalStep):
        elementary_collapse(TWO_FACETS, CollapseStep(F("4"), F("123")))  # sigma not in tau
    with pytest.raises(IllegalStep):
        elementary_collapse(TWO_FACETS, CollapseStep(0, F("123")))  # empty sigma


def test_is_collapsible_example():
    for engine in ("collapse", "strict"):
        out = is_collapsible(TWO_FACETS, engine)
        assert out.status is Verdict.YES
        assert certifies_collapse(TWO_FACETS, out.certificate)
        assert not out.budget_exhausted


def test_is_collapsible_dunce_hat():
    out = is_collapsible(dunce_hat())
    assert out.status is Verdict.NO
    assert out.certificate is None
    assert out.nodes_explored == 1 and not out.budget_exhausted


def test_simplices_collapse():
    for n in range(1, 6):
        cx = closure(Code(n, frozenset({(1 << n) - 1})))
        out = is_collapsible(cx)
        assert out.status is Verdict.YES
        assert certifies_collapse(cx, out.certificate)


def test_void_and_engine_validation():
    with pytest.raises(VoidComplex):
        is_collapsible(SimplicialComplex.void(2))
    with pytest.raises(VoidComplex):
        greedy_collapse(SimplicialComplex.void(2))
    with pytest.raises(ValueError):
        is_collapsible(POINT, engine="generalized")


def test_empty_face_complex_is_not_collapsible():
    out = is_collapsible(SimplicialComplex(2, (0,)))
    assert out.status is Verdict.NO


def test_certificates_replay_to_a_point():
    for seed in range(40):
        cx = random_complex(5, seed)
        if cx.is_void:
            continue
        out = is_collapsible(cx)
        if out.status is Verdict.YES:
            final = replay_certificate(cx, out.certificate)
            assert len(final.facets) == 1 and final.facets[0].bit_count() == 1
            assert certifies_collapse(cx, out.certificate)


def test_replay_rejects_facet_deletion():
    step = CollapseStep(F("123"), F("123"))
    with pytest.raises(IllegalStep):
        replay_certificate(TWO_FACETS, [step])
    # the same step passes when proper steps are not demanded
    replay_certificate(TWO_FACETS, [step], require_proper=False)


def test_engine_equivalence_on_all_small_antichains():
    memo_c, memo_s = {}, {}
    for cx in all_facet_antichains(4):
        a = is_collapsible(cx, "collapse", memo=memo_c)
        b = is_collapsible(cx, "strict", memo=memo_s)
        assert a.status is b.status
        assert a.status is not Verdict.UNKNOWN


def test_engine_equivalence_random():
    for seed in range(50):
        cx = random_complex(6, seed)
        if cx.is_void:
            continue
        a = is_collapsible(cx, "collapse")
        b = is_collapsible(cx, "strict")
        assert a.status is b.status


def test_memo_does_not_change_decisions():
    shared = {}
    for seed in range(30):
        cx = random_complex(5, seed)
        if cx.is_void:
            continue
        plain = is_collapsible(cx, memoize=False)
        fresh = is_collapsible(cx, memo={})
        reused = is_collapsible(cx, memo=shared)
        assert plain.status is fresh.status is reused.status
        if plain.status is Verdict.YES:
            assert certifies_collapse(cx, fresh.certificate)
            assert certifies_collapse(cx, reused.certificate)


def test_budget_exhaustion_reports_unknown():
    bary = subdivided_triangle()
    out = is_collapsible(bary, budget=Budget(nodes=1, greedy_restarts=0))
    assert out.status is Verdict.UNKNOWN
    assert out.budget_exhausted and out.nodes_explored == 1
    # the greedy front end must respect the same node budget
    out = is_collapsible(bary, budget=Budget(nodes=1, greedy_restarts=2))
    assert out.status is Verdict.UNKNOWN and out.budget_exhausted


def test_unknown_iff_budget_exhausted():
    for seed in range(25):
        cx = random_complex(5, seed)
        if cx.is_void:
            continue
        for nodes in (1, 3, 10_000):
            out = is_collapsible(cx, budget=Budget(nodes=nodes, greedy_restarts=0))
            assert (out.status is Verdict.UNKNOWN) == out.budget_exhausted


def test_greedy_examples():
    assert greedy_collapse(POINT).status is Verdict.YES
    assert greedy_collapse(POINT).certificate == ()
    for seed in (0, 1, 7):
        assert greedy_collapse(dunce_hat(), seed=seed).status is Verdict.UNKNOWN
    bary = subdivided_triangle()
    out = greedy_collapse(bary, seed=1, restarts=4)
    assert out.status is Verdict.YES
    assert certifies_collapse(bary, out.certificate)


def test_greedy_is_deterministic():
    bary = subdivided_triangle()
    a = greedy_collapse(bary, seed=3, restarts=4)
    b = greedy_collapse(bary, seed=3, restarts=4)
    assert a == b
    for seed in range(6):
        out = greedy_collapse(bary, seed=seed, restarts=6)
        if out.status is Verdict.YES:
            assert certifies_collapse(bary, out.certificate)


def test_facet_deletion_breaks_contractibility():
    # removing one facet from a collapsible complex leaves chi - 1 = -1 or
    # +1... either way nonzero, so some reduced Betti number survives
    from convexcodes.homology import reduced_betti

    hits = 0
    for seed in range(40):
        cx = random_complex(5, seed)
        if cx.is_void or is_collapsible(cx).status is not Verdict.YES:
            continue
        for facet in cx.facets:
            after = elementary_collapse(cx, CollapseStep(facet, facet))
            if after.is_void or not any(after.facets):
                continue
            assert any(
                any(reduced_betti(after, p).betti) for p in (2, 3, 5)
            )
            hits += 1
    assert hits > 20


def test_step_rendering():
    assert str(CollapseStep(F("1"), F("123"))) == "(1,123)"


@pytest.mark.skipif(
    "compiled" not in available_kernels(), reason="compiled kernel not built"
)
def test_kernels_agree_exactly():
    from convexcodes import _collapse_cy, _collapse_py

    for seed in range(40):
        cx = random_complex(6, seed)
        if cx.is_void:
            continue
        facets = tuple(cx.facets)
        for mode in (1, 2):
            a = _collapse_py.search(facets, mode, 200_000, 0, 2, {}, True)
            b = _collapse_cy.search(facets, mode, 200_000, 0, 2, {}, True)
            assert a == b
            assert _collapse_py.greedy(facets, mode, seed, 2) == _collapse_cy.greedy(
                facets, mode, seed, 2
            )
        for mode in (0, 1, 2):
            assert _collapse_py.free_pairs(facets, mode) == _collapse_cy.free_pairs(
                facets, mode
            )


def test_capacity_overflow_falls_back():
    # 2-skeleton of a 13-vertex simplex: 286 facets, beyond the compiled
    # kernel's table, and with no free pair it is a 1-node No either way
    faces = [face_of(t) for t in __import__("itertools").combinations(range(1, 14), 3)]
    cx = SimplicialComplex.from_facets(13, faces)
    assert len(cx.facets) == 286
    assert free_pairs(cx, mode="strict") == []
    out = is_collapsible(cx)
    assert out.status is Verdict.NO and out.nodes_explored == 1


def test_pure_kernel_env_override():
    code = (
        "import convexcodes\n"
        "print(convexcodes.kernel_name())\n"
    )
    env = dict(os.environ, CONVEXCODES_PURE_KERNEL="1")
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env
    )
    assert out.returncode == 0
    assert out.stdout.strip() == "pure-python"


def test_kernel_name_reports_selection():
    assert kernel_name() in available_kernels()
