import itertools

import pytest
from hypothesis import given, settings, strategies as st

from circodes.bounds import best_lower_bound
from circodes.core import Code, make_graph
from circodes.solver import (
    SolveRequest,
    SolveResult,
    SolveStatus,
    exhaustive_min_code_size,
    is_optimal,
    min_code_size,
    requirement_masks,
    _DEFINITION_CHECKS,
)
from circodes.verify import CodeKind


def solve(n, gens, kind, **kw):
    return min_code_size(SolveRequest(make_graph(n, gens), kind, **kw))


# -- exact values ------------------------------------------------------------

@pytest.mark.parametrize(
    "n,gens,expected",
    [(14, (1, 3), 8), (17, (1, 4), 10), (12, (1, 3), 8), (19, (1, 4), 11)],
)
def test_known_optimal_sid_sizes(n, gens, expected):
    result = solve(n, gens, CodeKind.SID)
    assert result.status is SolveStatus.OPTIMAL
    assert result.size == expected


def test_c13_identification_value_is_within_band_and_frozen():
    # exhaustively derived: the optimum for n=13 sits at the band floor
    result = solve(13, (1, 3), CodeKind.ID)
    assert result.size == 5
    oracle = exhaustive_min_code_size(make_graph(13, [1, 3]), CodeKind.ID)
    assert oracle[0] == 5


def test_nonattainment_values_exceed_the_floors():
    rid = solve(12, (1, 3, 4), CodeKind.ID)
    rsid = solve(12, (1, 3, 4), CodeKind.SID)
    assert rid.size == 5 and rid.size >= 4
    assert rsid.size == 8 and rsid.size >= 5


SMALL_SID_13 = {6: 6, 7: 7, 8: 8, 9: 6, 10: 8, 11: 7}


@pytest.mark.parametrize("n,expected", sorted(SMALL_SID_13.items()))
def test_small_ring_sid_values_below_formula_window(n, expected):
    # no closed formula covers n <= 11; frozen from the exhaustive oracle
    result = solve(n, (1, 3), CodeKind.SID)
    assert result.status is SolveStatus.OPTIMAL
    assert result.size == expected


# -- infeasibility -----------------------------------------------------------

@pytest.mark.parametrize(
    "n,gens,kind",
    [
        (4, (1, 2), CodeKind.ID),
        (5, (1, 2), CodeKind.SID),
        (8, (1, 3, 4), CodeKind.ID),
        (8, (1, 3, 4), CodeKind.SID),
        (7, (1, 2, 3), CodeKind.SID),
    ],
)
def test_twin_graphs_are_infeasible(n, gens, kind):
    result = solve(n, gens, kind)
    assert result.status is SolveStatus.INFEASIBLE
    assert result.size is None and result.witness is None
    assert exhaustive_min_code_size(make_graph(n, gens), kind) is None


def test_domination_feasible_despite_twins():
    result = solve(4, (1, 2), CodeKind.DOM)
    assert result.status is SolveStatus.OPTIMAL and result.size == 1


# -- oracle agreement (small slice; the acceptance sweep runs the full menu) -

@pytest.mark.parametrize("n", range(5, 10))
def test_solver_equals_oracle(n):
    gens = (1, 2) if n < 6 else (1, 3)
    graph = make_graph(n, gens)
    for kind in CodeKind:
        oracle = exhaustive_min_code_size(graph, kind)
        result = min_code_size(SolveRequest(graph, kind))
        if oracle is None:
            assert result.status is SolveStatus.INFEASIBLE
        else:
            assert result.status is SolveStatus.OPTIMAL
            assert result.size == oracle[0]


@given(st.data())
@settings(max_examples=120, deadline=None)
def test_solver_equals_oracle_fuzz(data):
    n = data.draw(st.integers(4, 8), label="n")
    gens = data.draw(
        st.sets(st.integers(1, n // 2), min_size=1, max_size=min(3, n // 2)),
        label="gens",
    )
    kind = data.draw(st.sampled_from(list(CodeKind)), label="kind")
    graph = make_graph(n, gens)
    oracle = exhaustive_min_code_size(graph, kind)
    result = min_code_size(SolveRequest(graph, kind))
    if oracle is None:
        assert result.status is SolveStatus.INFEASIBLE
    else:
        assert result.status is SolveStatus.OPTIMAL
        assert result.size == oracle[0]


def test_monotonicity_across_kinds():
    for n, gens in [(10, (1, 3)), (12, (1, 3, 4)), (11, (1, 2)), (12, (1, 6))]:
        graph = make_graph(n, gens)
        sizes = {}
        for kind in CodeKind:
            result = min_code_size(SolveRequest(graph, kind))
            sizes[kind] = result.size if result.status is SolveStatus.OPTIMAL else None
        if sizes[CodeKind.SID] is not None:
            assert sizes[CodeKind.SID] >= sizes[CodeKind.ID]
        if sizes[CodeKind.ID] is not None:
            assert sizes[CodeKind.ID] >= sizes[CodeKind.LD]
        assert sizes[CodeKind.LD] >= sizes[CodeKind.DOM]


def test_optimal_size_at_least_best_lower_bound():
    for n, gens, kind in [
        (17, (1, 3), CodeKind.SID),
        (22, (1, 3), CodeKind.ID),
        (12, (1, 3, 4), CodeKind.SID),
    ]:
        graph = make_graph(n, gens)
        result = min_code_size(SolveRequest(graph, kind))
        assert result.size >= best_lower_bound(graph, kind).value


# -- witnesses and determinism ------------------------------------------------

def _all_optimal_codes(graph, kind, size):
    check = _DEFINITION_CHECKS[kind]
    found = []
    for combo in itertools.combinations(range(graph.n), size):
        mask = 0
        for v in combo:
            mask |= 1 << v
        if check(graph, mask):
            found.append(combo)
    return found


def _min_rotation(members, n):
    return min(tuple(sorted((v - t) % n for v in members)) for t in range(n))


@pytest.mark.parametrize(
    "n,gens,kind",
    [
        (9, (1, 3), CodeKind.SID),
        (10, (1, 3), CodeKind.ID),
        (11, (1, 3), CodeKind.LD),
        (12, (1, 6), CodeKind.SID),
        (8, (1, 4), CodeKind.DOM),
        (12, (1, 3, 4), CodeKind.ID),
    ],
)
def test_deterministic_witness_is_lex_min_canonical(n, gens, kind):
    graph = make_graph(n, gens)
    first = min_code_size(SolveRequest(graph, kind, deterministic=True))
    second = min_code_size(SolveRequest(graph, kind, deterministic=True))
    assert first == second  # bit-identical reruns
    witness = first.witness.members
    assert _min_rotation(witness, n) == witness  # contains its minimum rotation
    optima = _all_optimal_codes(graph, kind, first.size)
    expected = min({_min_rotation(c, n) for c in optima})
    assert witness == expected


def test_witness_always_verifies():
    for n, gens, kind in [(17, (1, 4), CodeKind.SID), (20, (1, 3), CodeKind.ID)]:
        graph = make_graph(n, gens)
        result = min_code_size(SolveRequest(graph, kind))
        check = _DEFINITION_CHECKS[kind]
        assert check(graph, result.witness.mask)
        assert len(result.witness) == result.size


# -- budgets -------------------------------------------------------------------

def test_max_size_caps_the_deepening():
    capped = solve(17, (1, 3), CodeKind.SID, max_size=9)
    assert capped.status is SolveStatus.BUDGET_EXCEEDED
    assert capped.size is None
    assert capped.lower_bound == 10 and capped.upper_bound == 11
    exact = solve(17, (1, 3), CodeKind.SID, max_size=11)
    assert exact.status is SolveStatus.OPTIMAL and exact.size == 11


def test_max_size_below_lower_bound_reports_bounds():
    result = solve(17, (1, 3), CodeKind.SID, max_size=5)
    assert result.status is SolveStatus.BUDGET_EXCEEDED
    assert result.lower_bound == 9  # the proven bound still holds
    with pytest.raises(ValueError):
        solve(17, (1, 3), CodeKind.SID, max_size=0)


def test_time_budget_returns_partial_bounds():
    result = solve(50, (1, 7), CodeKind.ID, time_budget=0.05)
    assert result.status is SolveStatus.BUDGET_EXCEEDED
    assert result.lower_bound >= 18
    assert result.upper_bound == 50
    assert result.witness is not None and len(result.witness) == 50


def test_progress_callback_fires():
    events = []
    min_code_size(
        SolveRequest(
            make_graph(22, [1, 3]),
            CodeKind.ID,
            on_progress=events.append,
            progress_every=50,
        )
    )
    assert events and all({"nodes", "layer", "incumbent"} <= set(e) for e in events)


# -- is_optimal ----------------------------------------------------------------

def test_is_optimal_examples():
    g40 = make_graph(40, [1, 4])
    b1 = Code.from_members(40, [0, 1, 2, 8, 10, 12, 16, 18, 22, 24, 26, 32, 33, 34])
    assert is_optimal(g40, b1, CodeKind.ID) is True

    g30 = make_graph(30, [1, 15])
    code = Code.from_members(30, [v for v in range(30) if v % 3 != 2])
    assert is_optimal(g30, code, CodeKind.SID) is True

    g14 = make_graph(14, [1, 3])
    assert is_optimal(g14, Code.from_members(14, range(14)), CodeKind.SID) is False


def test_is_optimal_rejects_nonverifying_code():
    with pytest.raises(ValueError):
        is_optimal(make_graph(14, [1, 3]), Code.from_members(14, [0]), CodeKind.SID)


def test_is_optimal_indeterminate_on_budget():
    graph = make_graph(50, [1, 7])
    full = Code.from_members(50, range(50))
    assert is_optimal(graph, full, CodeKind.ID, time_budget=0.05) is None


# -- requirement construction ----------------------------------------------------

def test_requirement_masks_are_minimal_and_complete():
    graph = make_graph(10, [1, 3])
    for kind in CodeKind:
        reqs = requirement_masks(graph, kind)
        assert all(r for r in reqs)
        for a, b in itertools.combinations(reqs, 2):
            assert a & b != a and a & b != b  # no containment either way
        # hitting all requirements is exactly the definition
        check = _DEFINITION_CHECKS[kind]
        for mask in range(1, 1 << graph.n):
            hits = all(r & mask for r in reqs)
            assert hits == check(graph, mask)
