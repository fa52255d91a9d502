import itertools

import pytest
from hypothesis import given, strategies as st

from circodes.core import Code, NotApplicableError, make_graph
from circodes.verify import (
    ClosureWitness,
    CodeKind,
    PairWitness,
    TWIN_NOTE,
    UncoveredWitness,
    VerificationReport,
    is_dominating,
    is_identifying,
    is_locating_dominating,
    is_self_identifying,
    is_self_identifying_pairwise,
    sid_structure_audit,
    verify,
)

RING_17_14 = Code.from_members(17, [0, 1, 2, 3, 5, 7, 9, 11, 13, 15])
B1 = Code.from_members(40, [0, 1, 2, 8, 10, 12, 16, 18, 22, 24, 26, 32, 33, 34])
B3 = Code.from_members(20, [0, 4, 7, 11, 14, 17])
TRI_B = Code.from_members(57, [0, 2, 4, 6, 15, 18, 27, 29, 31, 33, 43, 45, 47])


def test_kind_order_reflects_implication_chain():
    assert CodeKind.SID > CodeKind.ID > CodeKind.LD > CodeKind.DOM
    assert CodeKind.parse("sid") is CodeKind.SID
    with pytest.raises(ValueError):
        CodeKind.parse("idk")


def test_dominating_examples():
    g14 = make_graph(14, [1, 3])
    assert is_dominating(g14, Code.from_members(14, [0, 1, 2, 3, 7, 8, 9, 10])).passed
    g = make_graph(9, [1, 4])
    assert is_dominating(g, Code.from_members(9, range(9))).passed
    report = is_dominating(make_graph(20, [1, 5]), Code.from_members(20, [0]))
    assert not report.passed
    assert report.witness == UncoveredWitness(2)


def test_identifying_examples():
    assert is_identifying(make_graph(40, [1, 4]), B1).passed
    lifted = Code.from_residues(80, 40, B1.members)
    assert is_identifying(make_graph(80, [1, 44]), lifted).passed


def test_identifying_twin_graph_always_fails():
    g = make_graph(4, [1, 2])
    for members in ([0], [0, 1], [0, 1, 2, 3]):
        report = is_identifying(g, Code.from_members(4, members))
        assert not report.passed
        assert report.note == TWIN_NOTE
        assert isinstance(report.witness, PairWitness)
        assert (report.witness.u, report.witness.v) == (0, 1)


def test_locating_dominating_examples():
    assert is_locating_dominating(make_graph(20, [1, 5]), B3).passed
    assert is_locating_dominating(make_graph(57, [1, 7, 8]), TRI_B).passed
    king = Code.from_residues(40, 10, [0, 4])
    assert is_locating_dominating(make_graph(40, [1, 7, 8, 9]), king).passed


def test_self_identifying_examples():
    assert is_self_identifying(
        make_graph(18, [1, 4]), Code.from_residues(18, 2, [0]), cross_check=True
    ).passed
    assert is_self_identifying(
        make_graph(21, [1, 3, 4, 5]), Code.from_residues(21, 3, [0]), cross_check=True
    ).passed
    assert is_self_identifying(make_graph(17, [1, 4]), RING_17_14, cross_check=True).passed


def test_self_identifying_reports_uncovered_vertex_first():
    report = is_self_identifying(make_graph(40, [1, 4]), Code.from_members(40, [0]))
    assert not report.passed
    assert report.witness == UncoveredWitness(2)


def test_self_identifying_closure_witness():
    # dominating everywhere, but two codewords pin down two vertices at once
    graph = make_graph(12, [1, 3])
    code = Code.from_members(12, [0, 1, 2, 3, 7, 8, 9, 10])
    report = is_self_identifying(graph, code)
    assert not report.passed
    assert report.witness == ClosureWitness(5, (5, 11))
    pairwise = is_self_identifying_pairwise(graph, code)
    assert not pairwise.passed
    assert isinstance(pairwise.witness, PairWitness)


def test_cross_check_mode_runs_both_deciders():
    graph = make_graph(14, [1, 3])
    code = Code.from_members(14, [0, 1, 2, 3, 7, 8, 9, 10])
    assert is_self_identifying(graph, code, cross_check=True).passed


def _first_confused_pair(graph, code, codewords_only):
    masks = graph.nbhd_masks
    for u, v in itertools.combinations(range(graph.n), 2):
        if codewords_only and (u in code or v in code):
            continue
        if masks[u] & code.mask == masks[v] & code.mask:
            return u, v
    return None


@pytest.mark.parametrize("seed", range(40))
def test_pair_witness_is_lexicographically_smallest(seed):
    import random

    rng = random.Random(seed)
    n = rng.randrange(8, 26)
    graph = make_graph(n, sorted(rng.sample(range(1, n // 2 + 1), rng.choice((1, 2)))))
    members = [v for v in range(n) if rng.random() < 0.45] or [0]
    code = Code.from_members(n, members)
    for decide, codewords_only in ((is_identifying, False), (is_locating_dominating, True)):
        report = decide(graph, code)
        if report.passed or not isinstance(report.witness, PairWitness):
            continue
        if report.note == TWIN_NOTE:
            continue
        expected = _first_confused_pair(graph, code, codewords_only)
        assert expected == (report.witness.u, report.witness.v)


def test_report_serialization_shape():
    graph = make_graph(4, [1, 2])
    report = is_identifying(graph, Code.from_members(4, [0]))
    data = report.to_json()
    assert data["kind"] == "id" and data["pass"] is False
    assert data["witness"]["type"] == "pair"
    assert set(data["witness"]) == {"type", "u", "v", "Iu", "Iv"}
    passing = verify(make_graph(20, [1, 5]), B3, CodeKind.LD).to_json()
    assert passing == {"kind": "ld", "pass": True, "witness": None}


def test_failing_report_requires_witness():
    with pytest.raises(ValueError):
        VerificationReport(CodeKind.DOM, False)


# -- distance-2 restriction equals all-pairs (exhaustive slice) -------------

@pytest.mark.parametrize("n", [6, 7, 8])
def test_pair_restriction_equals_all_pairs_exhaustive(n):
    graph = make_graph(n, [1, 3])
    for mask in range(1, 1 << n):
        code = Code(n, mask)
        assert (
            is_identifying(graph, code).passed
            == is_identifying(graph, code, all_pairs=True).passed
        )
        assert (
            is_locating_dominating(graph, code).passed
            == is_locating_dominating(graph, code, all_pairs=True).passed
        )
        assert (
            is_self_identifying_pairwise(graph, code).passed
            == is_self_identifying_pairwise(graph, code, all_pairs=True).passed
        )


@given(st.integers(0, 10 ** 9))
def test_verdicts_invariant_under_rotation_and_reflection(seed):
    import random

    rng = random.Random(seed)
    n = rng.randrange(6, 30)
    graph = make_graph(n, sorted(rng.sample(range(1, n // 2 + 1), rng.choice((1, 2)))))
    code = Code.from_members(n, [v for v in range(n) if rng.random() < 0.5] or [1])
    for kind in CodeKind:
        base = verify(graph, code, kind).passed
        assert verify(graph, code.rotated(rng.randrange(n)), kind).passed == base
        assert verify(graph, code.reflected(), kind).passed == base


# -- structure audit ---------------------------------------------------------

def test_structure_audit_holds_on_verified_codes():
    cases = [
        (make_graph(18, [1, 4]), Code.from_residues(18, 2, [0])),
        (make_graph(14, [1, 3]), Code.from_members(14, [0, 1, 2, 3, 7, 8, 9, 10])),
        (make_graph(17, [1, 4]), RING_17_14),
    ]
    for graph, code in cases:
        report = sid_structure_audit(graph, code)
        assert report.ok, report.violations


def test_structure_audit_rejects_bad_inputs():
    with pytest.raises(NotApplicableError):
        sid_structure_audit(
            make_graph(21, [1, 3, 4]), Code.from_residues(21, 3, [0])
        )
    with pytest.raises(NotApplicableError):
        # window 4*d2 - 1 < n fails for n = 13, d2 = 4
        sid_structure_audit(
            make_graph(13, [1, 4]), Code.from_members(13, [0, 2] + list(range(1, 13, 2)))
        )
    with pytest.raises(NotApplicableError):
        sid_structure_audit(make_graph(18, [1, 4]), Code.from_members(18, [0]))
