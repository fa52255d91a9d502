"""The acceptance sweep: eight self-contained criteria covering the
construction families, optimality equalities, solver exact values, the
exhaustive-oracle audit, non-attainment, grid transport, the published
identification band for C_n(1,3), and the property suites.

Each criterion returns a CriterionResult with one-line detail strings;
the CLI renders them as a pass/fail table and the test suite asserts
them individually.  Solver-heavy criteria accept a ``jobs`` argument and
fan instances out to a process pool; results are independent of the
worker count.
"""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .bounds import best_lower_bound, exact_sid_value
from .core import CirculantGraph, Code, make_graph, rotate_mask
from .families import FAMILIES, ConstructionResult, build_family
from .grids import grid_density, grid_verify, lift, literature_density, matching_grid
from .solver import (
    SolveRequest,
    SolveStatus,
    exhaustive_min_code_size,
    min_code_size,
)
from .verify import (
    CodeKind,
    is_dominating,
    is_identifying,
    is_locating_dominating,
    is_self_identifying,
    is_self_identifying_pairwise,
    sid_structure_audit,
    verify,
)

SUITE_NAME = "paper-acceptance"

RNG_SEED = 0x1D3C0DE5


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    details: list[str]
    seconds: float

    def to_json(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "pass": self.passed,
            "details": self.details,
            "seconds": round(self.seconds, 3),
        }


def _timed(fn: Callable[[], tuple[bool, list[str]]], number: int, title: str) -> CriterionResult:
    start = time.monotonic()
    passed, details = fn()
    return CriterionResult(number, title, passed, details, time.monotonic() - start)


# ---------------------------------------------------------------------------
# criterion 1: the construction sweep

CONSTRUCTION_POINTS: list[tuple[str, dict]] = [
    ("id_square_mod40", {"n": 40, "d": 4}),
    ("id_square_mod40", {"n": 80, "d": 44}),
    ("id_square_mod40", {"n": 80, "d": 4}),
    ("id_square_mod40", {"n": 120, "d": 44}),
    ("id_square_mod20", {"n": 20, "d": 6}),
    ("id_square_mod20", {"n": 40, "d": 26}),
    ("id_square_mod20", {"n": 60, "d": 26}),
    ("ld_square_mod20", {"n": 20, "d": 5}),
    ("ld_square_mod20", {"n": 40, "d": 25}),
    ("ld_square_mod20", {"n": 60, "d": 45}),
    ("ld_tri_mod57", {"n": 57, "d": 8}),
    ("ld_tri_mod57", {"n": 114, "d": 8}),
    ("ld_tri_mod57", {"n": 171, "d": 65}),
    ("id_tri_6d", {"d": 6}),
    ("id_tri_6d", {"d": 8}),
    ("id_tri_6d", {"d": 10}),
    ("ld_king_mod10", {"n": 40, "d": 8}),
    ("ld_king_mod10", {"n": 50, "d": 8}),
    ("ld_king_mod10", {"n": 80, "d": 18}),
    ("id_king_appendix", {"d": 15}),
    ("id_king_appendix", {"d": 21}),
    ("id_king_appendix", {"d": 27}),
    ("sid_square_even", {"n": 18, "d": 4}),
    ("sid_square_even", {"n": 20, "d": 4}),
    ("sid_square_even", {"n": 26, "d": 6}),
    ("sid_tri_even", {"n": 18, "d": 4}),
    ("sid_tri_even", {"n": 22, "d": 5}),
    ("sid_tri_even", {"n": 26, "d": 6}),
    ("sid_king_mod3", {"n": 21, "d": 4}),
    ("sid_king_mod3", {"n": 33, "d": 7}),
    ("sid_king_mod3", {"n": 39, "d": 7}),
    *[("sid_c13_optimal", {"n": n}) for n in range(12, 19)],
    ("sid_c14_odd", {"n": 13}),
    ("sid_c14_odd", {"n": 17}),
    ("sid_c14_odd", {"n": 19}),
    ("sid_antipodal", {"k": 5}),
    ("sid_antipodal", {"k": 15}),
    ("sid_antipodal", {"k": 16}),
    ("sid_antipodal", {"k": 17}),
]

# Reference codes the families must reproduce for small parameters.
# The customary n=12 block pattern {0,1,2,3,7,8,9,10} is provably not
# self-identifying (I(5) = {2,8} is contained in I(11); the +-3 offsets
# of antipodal vertices coincide at n=12), so the family emits the
# smallest genuine optimum instead; the optimal size 8 itself is
# correct.  See families.SID_C13_N12.
C13_REFERENCE_CODES: dict[int, tuple[int, ...]] = {
    13: (0, 1, 2, 3, 7, 8, 9, 10),
    14: (0, 1, 2, 3, 7, 8, 9, 10),
    15: (0, 1, 2, 3, 7, 8, 9, 10, 14),
    16: (0, 1, 2, 3, 7, 8, 9, 10, 14, 15),
    17: (0, 1, 2, 3, 7, 8, 9, 10, 14, 15, 16),
    18: (0, 1, 2, 3, 7, 8, 9, 10, 13, 14, 15),
}
C13_BLOCK_PATTERN_N12 = (0, 1, 2, 3, 7, 8, 9, 10)
C13_REFERENCE_SIZES = {12: 8, 13: 8, 14: 8, 15: 9, 16: 10, 17: 11, 18: 11}

C14_REFERENCE_CODE_N17 = (0, 1, 2, 3, 5, 7, 9, 11, 13, 15)


def _antipodal_row(k: int) -> tuple[int, ...]:
    half = [v for v in range(k) if v % 3 != 2]
    return tuple(sorted(half + [v + k for v in half]))


ANTIPODAL_REFERENCE_CODES = {
    15: tuple(v for v in range(30) if v % 3 != 2),
    16: _antipodal_row(16),
    17: _antipodal_row(17),
}


def _verify_construction(result: ConstructionResult) -> str | None:
    """None when the instance verifies for its claimed kind, else a
    failure description."""
    if result.kind is CodeKind.SID:
        report = is_self_identifying(result.graph, result.code, cross_check=True)
    else:
        report = verify(result.graph, result.code, result.kind)
    if not report.passed:
        return f"{result.family}{result.graph}: {report.witness.describe()}"
    return None


def criterion_1(jobs: int = 1) -> CriterionResult:
    def run() -> tuple[bool, list[str]]:
        details: list[str] = []
        failures = 0
        for family, params in CONSTRUCTION_POINTS:
            result = build_family(family, **params)
            problem = _verify_construction(result)
            if problem:
                failures += 1
                details.append("FAIL " + problem)
        for n, members in C13_REFERENCE_CODES.items():
            got = build_family("sid_c13_optimal", n=n).code.members
            if got != members:
                failures += 1
                details.append(f"FAIL reference code n={n}: built {got}, expected {members}")
        for n, size in C13_REFERENCE_SIZES.items():
            got = build_family("sid_c13_optimal", n=n).claimed_size
            if got != size:
                failures += 1
                details.append(f"FAIL reference size n={n}: built {got}, expected {size}")
        if build_family("sid_c14_odd", n=17).code.members != C14_REFERENCE_CODE_N17:
            failures += 1
            details.append("FAIL reference code for the odd-ring family at n=17")
        for k, members in ANTIPODAL_REFERENCE_CODES.items():
            got = build_family("sid_antipodal", k=k).code.members
            if got != members:
                failures += 1
                details.append(f"FAIL antipodal reference code k={k}")
        # documented erratum: the usual n=12 block pattern is not self-identifying
        printed = Code.from_members(12, C13_BLOCK_PATTERN_N12)
        if is_self_identifying(make_graph(12, [1, 3]), printed).passed:
            failures += 1
            details.append("FAIL expected the n=12 block pattern to be non-self-identifying")
        else:
            details.append(
                "note: the customary n=12 block pattern is not self-identifying "
                "(I(5) within I(11)); corrected optimum of the same size 8 emitted"
            )
        details.insert(0, f"{len(CONSTRUCTION_POINTS)} construction instances verified")
        return failures == 0, details

    return _timed(run, 1, "construction verification sweep")


# ---------------------------------------------------------------------------
# criterion 2: optimality equalities

def criterion_2(jobs: int = 1) -> CriterionResult:
    def run() -> tuple[bool, list[str]]:
        details: list[str] = []
        bad = 0
        checked = 0
        for family, params in CONSTRUCTION_POINTS:
            result = build_family(family, **params)
            graph, size = result.graph, result.claimed_size
            if FAMILIES[family].meets_bound:
                checked += 1
                if result.kind is CodeKind.SID:
                    exact = exact_sid_value(graph)
                    if exact != size:
                        bad += 1
                        details.append(
                            f"FAIL {family}{graph}: size {size} != exact value {exact}"
                        )
                else:
                    report = best_lower_bound(graph, result.kind)
                    if report.value != size or not report.exact:
                        bad += 1
                        details.append(
                            f"FAIL {family}{graph}: size {size} vs bound {report.value}"
                        )
            else:
                # converging families must sit strictly above the grid bound
                checked += 1
                bound = best_lower_bound(graph, result.kind).value
                if not size > bound:
                    bad += 1
                    details.append(
                        f"FAIL {family}{graph}: size {size} not above bound {bound}"
                    )
        details.insert(0, f"{checked} instances compared against bounds/exact formulas")
        return bad == 0, details

    return _timed(run, 2, "construction sizes meet the stated optima")


# ---------------------------------------------------------------------------
# criterion 3: solver versus exact values

SOLVER_EXACT_CASES: list[tuple[int, tuple[int, ...], int]] = [
    (12, (1, 3), 8),
    (14, (1, 3), 8),
    (15, (1, 3), 9),
    (17, (1, 3), 11),
    (17, (1, 4), 10),
    (19, (1, 4), 11),
]


def _solve_exact_case(case: tuple[int, tuple[int, ...], int]) -> tuple[str, bool]:
    n, gens, expected = case
    graph = make_graph(n, gens)
    result = min_code_size(SolveRequest(graph, CodeKind.SID))
    ok = result.status is SolveStatus.OPTIMAL and result.size == expected
    ok = ok and exact_sid_value(graph) == expected
    return (
        f"{graph} sid: solver={result.size} expected={expected} "
        f"nodes={result.nodes_explored}",
        ok,
    )


def criterion_3(jobs: int = 1) -> CriterionResult:
    def run() -> tuple[bool, list[str]]:
        rows = _pmap(_solve_exact_case, SOLVER_EXACT_CASES, jobs)
        details = [("ok " if ok else "FAIL ") + text for text, ok in rows]
        return all(ok for _, ok in rows), details

    return _timed(run, 3, "solver matches the exact self-identification values")


# ---------------------------------------------------------------------------
# criterion 4: solver versus the exhaustive oracle

def oracle_instances() -> list[tuple[int, tuple[int, ...]]]:
    """Every (n, generators) pair of the audit menu that yields a valid
    graph for n <= 12, deduplicated after generator folding."""
    out: list[tuple[int, tuple[int, ...]]] = []
    for n in range(3, 13):
        seen: set[tuple[int, ...]] = set()
        menu: list[list[int]] = [[1, 2], [1, 3], [1, 4], [1, 2, 3], [1, 3, 4], [1, 3, 4, 5]]
        if n % 2 == 0:
            menu.append([1, n // 2])
        for gens in menu:
            if any(not 1 <= g <= n // 2 for g in gens):
                continue
            canon = tuple(sorted({min(g, n - g) for g in gens}))
            if len(canon) != len(gens) or canon in seen:
                continue
            seen.add(canon)
            out.append((n, canon))
    return out


def _oracle_case(case: tuple[int, tuple[int, ...], int]) -> tuple[str, bool]:
    n, gens, kind_value = case
    kind = CodeKind(kind_value)
    graph = make_graph(n, gens)
    oracle = exhaustive_min_code_size(graph, kind)
    result = min_code_size(SolveRequest(graph, kind))
    if oracle is None:
        ok = result.status is SolveStatus.INFEASIBLE
        text = f"{graph} {kind.token}: no code exists, solver says {result.status.value}"
    else:
        ok = result.status is SolveStatus.OPTIMAL and result.size == oracle[0]
        # bound consistency on the side: no lower bound may exceed the optimum
        ok = ok and result.size >= best_lower_bound(graph, kind).value
        text = f"{graph} {kind.token}: oracle={oracle[0]} solver={result.size}"
    return text, ok


def criterion_4(jobs: int = 1) -> CriterionResult:
    def run() -> tuple[bool, list[str]]:
        cases = [
            (n, gens, kind.value)
            for n, gens in oracle_instances()
            for kind in CodeKind
        ]
        rows = _pmap(_oracle_case, cases, jobs)
        bad = [text for text, ok in rows if not ok]
        details = [f"{len(rows)} (graph, kind) instances agree with full enumeration"]
        details.extend("FAIL " + text for text in bad)
        return not bad, details

    return _timed(run, 4, "solver agrees with the exhaustive oracle up to n=12")


# ---------------------------------------------------------------------------
# criterion 5: strict non-attainment on C_12(1,3,4)

NONATTAINMENT_EXPECTED = {CodeKind.ID: 5, CodeKind.SID: 8}  # from the oracle


def criterion_5(jobs: int = 1) -> CriterionResult:
    def run() -> tuple[bool, list[str]]:
        graph = make_graph(12, [1, 3, 4])
        details = []
        ok = True
        for kind, floor in ((CodeKind.ID, 4), (CodeKind.SID, 5)):
            result = min_code_size(SolveRequest(graph, kind))
            oracle = exhaustive_min_code_size(graph, kind)
            expected = NONATTAINMENT_EXPECTED[kind]
            good = (
                result.status is SolveStatus.OPTIMAL
                and result.size == expected
                and oracle is not None
                and oracle[0] == expected
                and result.size >= floor
            )
            ok = ok and good
            details.append(
                ("ok " if good else "FAIL ")
                + f"{graph} {kind.token}: optimum {result.size} (> {floor - 1} required, "
                f"oracle {oracle[0] if oracle else None})"
            )
        return ok, details

    return _timed(run, 5, "strict non-attainment floors on C_12(1,3,4)")


# ---------------------------------------------------------------------------
# criterion 6: grid transport

def _expected_density(result: ConstructionResult) -> Fraction:
    return Fraction(result.claimed_size, result.graph.n)


def criterion_6(jobs: int = 1) -> CriterionResult:
    def run() -> tuple[bool, list[str]]:
        details: list[str] = []
        bad = 0
        lifted_count = 0
        for family, params in CONSTRUCTION_POINTS:
            result = build_family(family, **params)
            match = matching_grid(result.graph)
            if match is None:
                continue
            grid, d = match
            lifted_count += 1
            lifted = lift(result.code, result.graph.n, d, grid)
            report = grid_verify(lifted, result.kind)
            density = grid_density(lifted)
            optimum = literature_density(grid, result.kind)
            good = report.passed and density == _expected_density(result)
            if FAMILIES[family].meets_bound and result.kind is not CodeKind.SID:
                good = good and density == optimum
            elif family in ("sid_square_even", "sid_tri_even", "sid_king_mod3"):
                good = good and density == optimum
            else:
                good = good and density >= optimum
            if not good:
                bad += 1
                details.append(
                    f"FAIL {family}{result.graph} -> {grid.value}: "
                    f"verify={report.passed} density={density} optimum={optimum}"
                )
        details.insert(
            0, f"{lifted_count} lifted instances verified on their grids"
        )
        return bad == 0, details

    return _timed(run, 6, "grid transport preserves the kind and the density")


# ---------------------------------------------------------------------------
# criterion 7: the published identification band for C_n(1,3)

def _band_case(n: int) -> tuple[str, bool]:
    graph = make_graph(n, [1, 3])
    result = min_code_size(SolveRequest(graph, CodeKind.ID))
    low = math.ceil(4 * n / 11)
    ok = result.status is SolveStatus.OPTIMAL and result.size in (low, low + 1)
    return f"{graph} id: optimum {result.size} in [{low}, {low + 1}]", ok


def criterion_7(jobs: int = 1) -> CriterionResult:
    def run() -> tuple[bool, list[str]]:
        rows = _pmap(_band_case, list(range(12, 23)), jobs)
        details = [("ok " if ok else "FAIL ") + text for text, ok in rows]
        return all(ok for _, ok in rows), details

    return _timed(run, 7, "identification optima stay in the published band")


# ---------------------------------------------------------------------------
# criterion 8: property suites

def _random_graph(rng: random.Random, max_n: int = 40) -> CirculantGraph:
    n = rng.randrange(6, max_n + 1)
    width = rng.choice((1, 2, 2, 3))
    gens = rng.sample(range(1, n // 2 + 1), min(width, n // 2))
    return make_graph(n, gens)


def _random_code(rng: random.Random, n: int) -> Code:
    density = rng.choice((0.2, 0.35, 0.5, 0.65, 0.8))
    members = [v for v in range(n) if rng.random() < density]
    if not members:
        members = [rng.randrange(n)]
    return Code.from_members(n, members)


def _random_sid_instance(rng: random.Random) -> tuple[CirculantGraph, Code]:
    """A rotated instance of the parity construction, optionally perturbed."""
    d = rng.choice((4, 6, 8, 10))
    n = 4 * d + 2 + 2 * rng.randrange(0, 6)
    result = build_family("sid_square_even", n=n, d=d)
    code = result.code.rotated(rng.randrange(n))
    if rng.random() < 0.5:
        flip = 1 << rng.randrange(n)
        if code.mask ^ flip:
            code = Code(n, code.mask ^ flip)
    return result.graph, code


def check_implication_chain(cases: int = 1000, seed: int = RNG_SEED) -> list[str]:
    """SID implies ID implies LD implies DOM on every tested code."""
    rng = random.Random(seed)
    bad = []
    for i in range(cases):
        if i % 3 == 0:
            graph, code = _random_sid_instance(rng)
        else:
            graph = _random_graph(rng)
            code = _random_code(rng, graph.n)
        dom = is_dominating(graph, code).passed
        ld = is_locating_dominating(graph, code).passed
        id_ = is_identifying(graph, code).passed
        sid = is_self_identifying(graph, code).passed
        if (sid and not id_) or (id_ and not ld) or (ld and not dom):
            bad.append(f"{graph} code={code.members}: dom={dom} ld={ld} id={id_} sid={sid}")
    return bad


def check_rotation_reflection(cases: int = 1000, seed: int = RNG_SEED + 1) -> list[str]:
    """Verdicts are invariant under rotating or reflecting the code."""
    rng = random.Random(seed)
    bad = []
    for i in range(cases):
        if i % 4 == 0:
            graph, code = _random_sid_instance(rng)
        else:
            graph = _random_graph(rng)
            code = _random_code(rng, graph.n)
        kind = rng.choice(list(CodeKind))
        base = verify(graph, code, kind).passed
        t = rng.randrange(graph.n)
        if verify(graph, code.rotated(t), kind).passed != base:
            bad.append(f"{graph} {kind.token}: rotation by {t} changed the verdict")
        if verify(graph, code.reflected(), kind).passed != base:
            bad.append(f"{graph} {kind.token}: reflection changed the verdict")
    return bad


def check_sid_equivalence(cases: int = 1000, seed: int = RNG_SEED + 2) -> list[str]:
    """The closure characterization and the pairwise definition agree,
    on exhaustive small cases and on randomized instances."""
    bad = []
    for n in range(6, 10):
        graph = make_graph(n, [1, 3])
        for mask in range(1, 1 << n):
            code = Code(n, mask)
            a = is_self_identifying(graph, code).passed
            b = is_self_identifying_pairwise(graph, code).passed
            if a != b:
                bad.append(f"{graph} code mask {mask:#x}: closure={a} pairwise={b}")
    rng = random.Random(seed)
    for i in range(cases):
        if i % 2 == 0:
            graph, code = _random_sid_instance(rng)
        else:
            graph = _random_graph(rng)
            code = _random_code(rng, graph.n)
        a = is_self_identifying(graph, code).passed
        b = is_self_identifying_pairwise(graph, code).passed
        if a != b:
            bad.append(f"{graph} code={code.members}: closure={a} pairwise={b}")
    return bad


def check_pair_restriction(cases: int = 1000, seed: int = RNG_SEED + 3) -> list[str]:
    """Distance-2-restricted pair checking equals the all-pairs scan:
    exhaustively on C_n(1,3) for n <= 10 and on random codes up to n=60."""
    bad = []
    for n in range(6, 11):
        graph = make_graph(n, [1, 3])
        for mask in range(1, 1 << n):
            code = Code(n, mask)
            for near, far in (
                (is_identifying(graph, code), is_identifying(graph, code, all_pairs=True)),
                (
                    is_locating_dominating(graph, code),
                    is_locating_dominating(graph, code, all_pairs=True),
                ),
                (
                    is_self_identifying_pairwise(graph, code),
                    is_self_identifying_pairwise(graph, code, all_pairs=True),
                ),
            ):
                if near.passed != far.passed:
                    bad.append(
                        f"{graph} mask {mask:#x} {near.kind.token}: "
                        f"near={near.passed} all={far.passed}"
                    )
    rng = random.Random(seed)
    for _ in range(cases):
        graph = _random_graph(rng, max_n=60)
        code = _random_code(rng, graph.n)
        for near, far in (
            (is_identifying(graph, code), is_identifying(graph, code, all_pairs=True)),
            (
                is_locating_dominating(graph, code),
                is_locating_dominating(graph, code, all_pairs=True),
            ),
            (
                is_self_identifying_pairwise(graph, code),
                is_self_identifying_pairwise(graph, code, all_pairs=True),
            ),
        ):
            if near.passed != far.passed:
                bad.append(
                    f"{graph} {near.kind.token}: near={near.passed} all={far.passed}"
                )
    return bad


def check_structure_audit(cases: int = 1000, seed: int = RNG_SEED + 4) -> list[str]:
    """The structural audit holds on every verified self-identifying code
    in a qualifying two-generator graph."""
    bad = []
    for family, params in CONSTRUCTION_POINTS:
        result = build_family(family, **params)
        graph = result.graph
        if result.kind is not CodeKind.SID or len(graph.gens) != 2:
            continue
        if not 4 * graph.gens[1] - 1 < graph.n:
            continue
        report = sid_structure_audit(graph, result.code)
        if not report.ok:
            bad.append(f"{family}{graph}: {report.violations}")
    rng = random.Random(seed)
    for _ in range(cases):
        d = rng.choice((4, 6, 8))
        n = 4 * d + 2 + 2 * rng.randrange(0, 8)
        graph = make_graph(n, [1, d])
        code = Code(n, rotate_mask(sum(1 << v for v in range(0, n, 2)), rng.randrange(n), n))
        report = sid_structure_audit(graph, code)
        if not report.ok:
            bad.append(f"{graph} rotated parity code: {report.violations}")
    return bad


def criterion_8(jobs: int = 1) -> CriterionResult:
    def run() -> tuple[bool, list[str]]:
        suites: list[tuple[str, Callable[[], list[str]]]] = [
            ("implication chain", check_implication_chain),
            ("rotation/reflection invariance", check_rotation_reflection),
            ("closure vs pairwise self-identification", check_sid_equivalence),
            ("distance-2 vs all-pairs", check_pair_restriction),
            ("self-identification structure audit", check_structure_audit),
        ]
        details = []
        ok = True
        for name, checker in suites:
            bad = checker()
            ok = ok and not bad
            details.append(("ok " if not bad else "FAIL ") + name)
            details.extend("    " + b for b in bad[:5])
        return ok, details

    return _timed(run, 8, "property suites (>= 1000 randomized cases each)")


# ---------------------------------------------------------------------------
# suite driver

_CRITERIA: list[Callable[[int], CriterionResult]] = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
]


def _pmap(fn: Callable, items: Iterable, jobs: int) -> list:
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def run_suite(jobs: int = 1) -> list[CriterionResult]:
    """Run all eight acceptance criteria and return their results."""
    return [criterion(jobs) for criterion in _CRITERIA]


def render_table(results: list[CriterionResult]) -> str:
    lines = []
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        lines.append(f"criterion {r.number}  {r.title:<55s} {mark}  ({r.seconds:.1f}s)")
    total = sum(r.seconds for r in results)
    verdict = "PASS" if all(r.passed for r in results) else "FAIL"
    lines.append(f"suite {SUITE_NAME}: {verdict} in {total:.1f}s")
    return "\n".join(lines)
