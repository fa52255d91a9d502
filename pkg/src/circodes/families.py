"""Explicit code families in circulant graphs, each guarded by its
applicability window.

Applicability is checked eagerly and a rejection names the violated
congruence or inequality; silent misuse of a window would poison every
downstream optimality check.  Sizes follow the exact cardinality
formulas of the families, which the test suite re-verifies against the
generated codes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

from .core import CirculantGraph, Code, NotApplicableError, code_to_payload, make_graph
from .verify import CodeKind


@dataclass(frozen=True)
class ConstructionResult:
    family: str
    graph: CirculantGraph
    code: Code
    kind: CodeKind
    claimed_size: int

    def __post_init__(self):
        if len(self.code) != self.claimed_size:
            raise AssertionError(
                f"{self.family}: generated {len(self.code)} codewords, "
                f"formula claims {self.claimed_size}"
            )

    def to_payload(self) -> dict:
        out = code_to_payload(self.graph, self.code)
        out.update(
            {
                "family": self.family,
                "kind": self.kind.token,
                "claimed_size": self.claimed_size,
            }
        )
        return out


def _require(cond: bool, reason: str) -> None:
    if not cond:
        raise NotApplicableError(reason)


def periodic_code(n: int, period: int, residues: Iterable[int]) -> Code:
    """The code {u in Z_n : u mod period in residues}."""
    try:
        return Code.from_residues(n, period, residues)
    except ValueError as e:
        raise NotApplicableError(str(e)) from None


def _square_graph(n: int, d: int, family: str) -> CirculantGraph:
    # d may exceed n/2: the offset pair +-d coincides with +-(n-d) and the
    # generator folds accordingly (e.g. d=44 in Z_80 acts as 36).
    _require(2 <= d <= n - 2, f"{family}: d={d} must lie in [2, n-2] to act on Z_{n}")
    return make_graph(n, [1, d])


# ---------------------------------------------------------------------------
# two-generator graphs C_n(1, d)

SQUARE_ID_BASE_MOD40 = (0, 1, 2, 8, 10, 12, 16, 18, 22, 24, 26, 32, 33, 34)
SQUARE_ID_BASE_MOD20 = (0, 2, 8, 9, 11, 12, 18)
SQUARE_LD_BASE_MOD20 = (0, 4, 7, 11, 14, 17)


def id_square_mod40(n: int, d: int) -> ConstructionResult:
    """Identifying code of size 7n/20 in C_n(1,d) for n ~ 0, d ~ 4 (mod 40)."""
    _require(n % 40 == 0, f"id_square_mod40: n={n} must be divisible by 40")
    _require(d % 40 == 4, f"id_square_mod40: d={d} must be 4 (mod 40)")
    graph = _square_graph(n, d, "id_square_mod40")
    code = periodic_code(n, 40, SQUARE_ID_BASE_MOD40)
    return ConstructionResult("id_square_mod40", graph, code, CodeKind.ID, 7 * n // 20)


def id_square_mod20(n: int, d: int) -> ConstructionResult:
    """Identifying code of size 7n/20 in C_n(1,d) for n ~ 0, d ~ 6 (mod 20)."""
    _require(n % 20 == 0, f"id_square_mod20: n={n} must be divisible by 20")
    _require(d % 20 == 6, f"id_square_mod20: d={d} must be 6 (mod 20)")
    graph = _square_graph(n, d, "id_square_mod20")
    code = periodic_code(n, 20, SQUARE_ID_BASE_MOD20)
    return ConstructionResult("id_square_mod20", graph, code, CodeKind.ID, 7 * n // 20)


def ld_square_mod20(n: int, d: int) -> ConstructionResult:
    """Locating-dominating code of size 3n/10 in C_n(1,d) for n ~ 0, d ~ 5 (mod 20)."""
    _require(n % 20 == 0, f"ld_square_mod20: n={n} must be divisible by 20")
    _require(d % 20 == 5, f"ld_square_mod20: d={d} must be 5 (mod 20)")
    graph = _square_graph(n, d, "ld_square_mod20")
    code = periodic_code(n, 20, SQUARE_LD_BASE_MOD20)
    return ConstructionResult("ld_square_mod20", graph, code, CodeKind.LD, 3 * n // 10)


# ---------------------------------------------------------------------------
# three-generator graphs C_n(1, d-1, d)

TRI_LD_BASE_MOD57 = (0, 2, 4, 6, 15, 18, 27, 29, 31, 33, 43, 45, 47)


def ld_tri_mod57(n: int, d: int) -> ConstructionResult:
    """Locating-dominating code of size 13n/57 in C_n(1,d-1,d), d ~ 8 (mod 57)."""
    _require(d % 57 == 8, f"ld_tri_mod57: d={d} must be 8 (mod 57)")
    _require(d >= 8, f"ld_tri_mod57: d={d} must be at least 8")
    _require(n % 57 == 0, f"ld_tri_mod57: n={n} must be divisible by 57")
    _require(n >= 2 * d, f"ld_tri_mod57: n={n} must be at least 2d={2 * d}")
    graph = make_graph(n, [1, d - 1, d])
    code = periodic_code(n, 57, TRI_LD_BASE_MOD57)
    return ConstructionResult("ld_tri_mod57", graph, code, CodeKind.LD, 13 * n // 57)


def id_tri_6d(d: int) -> ConstructionResult:
    """Identifying code of size 3(d/2+1) in C_{6d}(1,d-1,d) for even d >= 6.

    The codeword density (d+2)/(4d) approaches 1/4 as d grows, so the
    family converges to the triangular lower bound without reaching it.
    """
    _require(d % 2 == 0, f"id_tri_6d: d={d} must be even")
    _require(d >= 6, f"id_tri_6d: d={d} must be at least 6")
    n = 6 * d
    graph = make_graph(n, [1, d - 1, d])
    code = periodic_code(n, 2 * d, range(0, d + 1, 2))
    return ConstructionResult("id_tri_6d", graph, code, CodeKind.ID, 3 * (d // 2 + 1))


# ---------------------------------------------------------------------------
# four-generator graphs C_n(1, d-1, d, d+1)

KING_LD_RESIDUES_MOD10 = (0, 4)


def ld_king_mod10(n: int, d: int) -> ConstructionResult:
    """Locating-dominating code of size n/5 in C_n(1,d-1,d,d+1), d ~ 8 (mod 10)."""
    _require(d % 10 == 8, f"ld_king_mod10: d={d} must be 8 (mod 10)")
    _require(d >= 8, f"ld_king_mod10: d={d} must be at least 8")
    _require(n % 10 == 0, f"ld_king_mod10: n={n} must be divisible by 10")
    _require(n >= 4 * d + 6, f"ld_king_mod10: n={n} must be at least 4d+6={4 * d + 6}")
    graph = make_graph(n, [1, d - 1, d, d + 1])
    code = periodic_code(n, 10, KING_LD_RESIDUES_MOD10)
    return ConstructionResult("ld_king_mod10", graph, code, CodeKind.LD, n // 5)


def id_king_appendix(d: int) -> ConstructionResult:
    """Identifying code of size 2d/3 in C_{3d-9}(1,d-1,d,d+1) for d ~ 3 (mod 6),
    d >= 15.

    The ring splits into three arcs [0,d), [d,2d) and [2d,n); codewords sit
    on residue 5 (mod 6) in the outer arcs and residues 0 and 4 (mod 6) in
    the middle arc, with two extra codewords at 0 and 2d that separate the
    handful of arc-boundary vertices.  Density tends to 2/9.
    """
    _require(d % 6 == 3, f"id_king_appendix: d={d} must be 3 (mod 6)")
    _require(d >= 15, f"id_king_appendix: d={d} must be at least 15")
    n = 3 * d - 9
    graph = make_graph(n, [1, d - 1, d, d + 1])
    members = {0, 2 * d}
    for v in range(n):
        if d <= v < 2 * d:
            if v % 6 in (0, 4):
                members.add(v)
        elif v % 6 == 5:
            members.add(v)
    code = Code.from_members(n, sorted(members))
    return ConstructionResult("id_king_appendix", graph, code, CodeKind.ID, 2 * d // 3)


# ---------------------------------------------------------------------------
# self-identifying families

def sid_square_even(n: int, d: int) -> ConstructionResult:
    """The even vertices form an optimal self-identifying code of size n/2
    in C_n(1,d) for even d >= 4 and even n >= 4d+2."""
    _require(d % 2 == 0, f"sid_square_even: d={d} must be even")
    _require(d >= 4, f"sid_square_even: d={d} must be at least 4")
    _require(n % 2 == 0, f"sid_square_even: n={n} must be even")
    _require(n >= 4 * d + 2, f"sid_square_even: n={n} must be at least 4d+2={4 * d + 2}")
    graph = make_graph(n, [1, d])
    code = periodic_code(n, 2, [0])
    return ConstructionResult("sid_square_even", graph, code, CodeKind.SID, n // 2)


def sid_tri_even(n: int, d: int) -> ConstructionResult:
    """The even vertices form an optimal self-identifying code of size n/2
    in C_n(1,d-1,d) for d >= 4 and even n >= 4d+2."""
    _require(d >= 4, f"sid_tri_even: d={d} must be at least 4")
    _require(n % 2 == 0, f"sid_tri_even: n={n} must be even")
    _require(n >= 4 * d + 2, f"sid_tri_even: n={n} must be at least 4d+2={4 * d + 2}")
    graph = make_graph(n, [1, d - 1, d])
    code = periodic_code(n, 2, [0])
    return ConstructionResult("sid_tri_even", graph, code, CodeKind.SID, n // 2)


def sid_king_mod3(n: int, d: int) -> ConstructionResult:
    """Residue class 0 (mod 3) is an optimal self-identifying code of size
    n/3 in C_n(1,d-1,d,d+1) for d ~ 1 (mod 3), d >= 4, 3 | n, n >= 4d+5."""
    _require(d % 3 == 1, f"sid_king_mod3: d={d} must be 1 (mod 3)")
    _require(d >= 4, f"sid_king_mod3: d={d} must be at least 4")
    _require(n % 3 == 0, f"sid_king_mod3: n={n} must be divisible by 3")
    _require(n >= 4 * d + 5, f"sid_king_mod3: n={n} must be at least 4d+5={4 * d + 5}")
    graph = make_graph(n, [1, d - 1, d, d + 1])
    code = periodic_code(n, 3, [0])
    return ConstructionResult("sid_king_mod3", graph, code, CodeKind.SID, n // 3)


def sid_c13_size(n: int) -> int:
    """Optimal self-identifying size in C_n(1,3) for n > 11."""
    if n <= 11:
        raise NotApplicableError(f"sid_c13_optimal: n={n} must exceed 11")
    k, r = divmod(n, 7)
    return 4 * k + (0, 1, 2, 3, 3, 4, 4)[r]


# At n=12 the usual remainder-5 tail {0..3, 7..10} collides with itself
# across the ring (the +-3 offsets of a vertex and of its antipode meet,
# e.g. I(5) = {2,8} but N[2] & N[8] = {5,11}), so it is not
# self-identifying there; this is the smallest genuine optimum instead.
SID_C13_N12 = (0, 1, 2, 3, 4, 7, 8, 9)


def sid_c13_optimal(n: int) -> ConstructionResult:
    """Optimal self-identifying code in C_n(1,3), n > 11.

    Four consecutive codewords followed by three gaps, repeated; the
    leftover block of n mod 7 vertices is patched per remainder without
    normalization (in particular the remainder-4 case appends
    {7k-1, 7k, 7k+1}).  n=12 is the lone special case, see SID_C13_N12.
    """
    size = sid_c13_size(n)
    graph = make_graph(n, [1, 3])
    if n == 12:
        return ConstructionResult(
            "sid_c13_optimal", graph, Code.from_members(n, SID_C13_N12), CodeKind.SID, size
        )
    k, r = divmod(n, 7)
    members = {i + 7 * j for i in range(4) for j in range(k)}
    if r == 1:
        members.add(7 * k)
    elif r == 2:
        members.update({7 * k, 7 * k + 1})
    elif r == 3:
        members.update({7 * k, 7 * k + 1, 7 * k + 2})
    elif r == 4:
        members.update({7 * k - 1, 7 * k, 7 * k + 1})
    elif r in (5, 6):
        members.update({i + 7 * k for i in range(4)})
    code = Code.from_members(n, sorted(members))
    return ConstructionResult("sid_c13_optimal", graph, code, CodeKind.SID, size)


def sid_c14_odd(n: int) -> ConstructionResult:
    """Optimal self-identifying code {0, 2} + odd vertices, of size k+2, in
    C_n(1,4) for odd n = 2k+1 with k > 5."""
    _require(n % 2 == 1, f"sid_c14_odd: n={n} must be odd")
    k = (n - 1) // 2
    _require(k > 5, f"sid_c14_odd: k={k} must exceed 5 (n >= 13)")
    graph = make_graph(n, [1, 4])
    code = Code.from_members(n, sorted({0, 2} | set(range(1, n, 2))))
    return ConstructionResult("sid_c14_odd", graph, code, CodeKind.SID, k + 2)


def sid_antipodal_size(k: int) -> int:
    """Optimal self-identifying size in C_{2k}(1,k) for k >= 5."""
    if k < 5:
        raise NotApplicableError(f"sid_antipodal: k={k} must be at least 5")
    return math.ceil(4 * k / 3) + (1 if k % 3 == 2 else 0)


def sid_antipodal(k: int) -> ConstructionResult:
    """Optimal self-identifying code in C_{2k}(1,k), k >= 5.

    For k ~ 0 (mod 3) take every vertex not congruent to 2 (mod 3);
    otherwise take that pattern on [0, k) and repeat it shifted by k.
    """
    size = sid_antipodal_size(k)
    n = 2 * k
    if k % 3 == 0:
        members = [v for v in range(n) if v % 3 != 2]
    else:
        half = [v for v in range(k) if v % 3 != 2]
        members = sorted(half + [v + k for v in half])
    graph = make_graph(n, [1, k])
    code = Code.from_members(n, members)
    return ConstructionResult("sid_antipodal", graph, code, CodeKind.SID, size)


# ---------------------------------------------------------------------------
# registry

@dataclass(frozen=True)
class Family:
    name: str
    kind: CodeKind
    params: tuple[str, ...]
    build: Callable[..., ConstructionResult]
    meets_bound: bool  # size equals the applicable lower bound / exact value


FAMILIES: dict[str, Family] = {
    f.name: f
    for f in [
        Family("id_square_mod40", CodeKind.ID, ("n", "d"), id_square_mod40, True),
        Family("id_square_mod20", CodeKind.ID, ("n", "d"), id_square_mod20, True),
        Family("ld_square_mod20", CodeKind.LD, ("n", "d"), ld_square_mod20, True),
        Family("ld_tri_mod57", CodeKind.LD, ("n", "d"), ld_tri_mod57, True),
        Family("id_tri_6d", CodeKind.ID, ("d",), id_tri_6d, False),
        Family("ld_king_mod10", CodeKind.LD, ("n", "d"), ld_king_mod10, True),
        Family("id_king_appendix", CodeKind.ID, ("d",), id_king_appendix, False),
        Family("sid_square_even", CodeKind.SID, ("n", "d"), sid_square_even, True),
        Family("sid_tri_even", CodeKind.SID, ("n", "d"), sid_tri_even, True),
        Family("sid_king_mod3", CodeKind.SID, ("n", "d"), sid_king_mod3, True),
        Family("sid_c13_optimal", CodeKind.SID, ("n",), sid_c13_optimal, True),
        Family("sid_c14_odd", CodeKind.SID, ("n",), sid_c14_odd, True),
        Family("sid_antipodal", CodeKind.SID, ("k",), sid_antipodal, True),
    ]
}


def build_family(name: str, **params: int) -> ConstructionResult:
    """Look up a family by name and build it, validating parameter names."""
    if name not in FAMILIES:
        raise NotApplicableError(
            f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}"
        )
    family = FAMILIES[name]
    given = {p: v for p, v in params.items() if v is not None}
    if set(given) != set(family.params):
        raise NotApplicableError(
            f"family {name} takes parameters ({', '.join(family.params)})"
        )
    return family.build(**given)


def applicable_families(graph: CirculantGraph, kind: CodeKind) -> list[ConstructionResult]:
    """All family instances of the requested kind that live on this graph.

    Used to seed the solver with an upper-bound incumbent and to decide
    when a lower bound is known to be attained.
    """
    n = graph.n
    gens = graph.gens
    out: list[ConstructionResult] = []

    def attempt(name: str, **params: int) -> None:
        try:
            result = FAMILIES[name].build(**params)
        except NotApplicableError:
            return
        if result.graph == graph and result.kind == kind:
            out.append(result)

    if len(gens) == 2 and gens[0] == 1:
        d0 = gens[1]
        for d in {d0, n - d0}:
            attempt("id_square_mod40", n=n, d=d)
            attempt("id_square_mod20", n=n, d=d)
            attempt("ld_square_mod20", n=n, d=d)
            attempt("sid_square_even", n=n, d=d)
        if d0 == 3:
            attempt("sid_c13_optimal", n=n)
        if d0 == 4:
            attempt("sid_c14_odd", n=n)
        if 2 * d0 == n:
            attempt("sid_antipodal", k=d0)
    elif len(gens) == 3 and gens[0] == 1 and gens[2] == gens[1] + 1:
        d = gens[2]
        attempt("ld_tri_mod57", n=n, d=d)
        attempt("sid_tri_even", n=n, d=d)
        if n == 6 * d:
            attempt("id_tri_6d", d=d)
    elif (
        len(gens) == 4
        and gens[0] == 1
        and gens[2] == gens[1] + 1
        and gens[3] == gens[1] + 2
    ):
        d = gens[2]
        attempt("ld_king_mod10", n=n, d=d)
        attempt("sid_king_mod3", n=n, d=d)
        if n == 3 * d - 9:
            attempt("id_king_appendix", d=d)
    return out
