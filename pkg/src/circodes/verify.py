"""Deciders for the four code kinds, with deterministic witnesses.

Failure witnesses are reproducible: the smallest failing vertex is
reported first, then the lexicographically smallest failing pair.  Pair
comparisons are restricted to vertices at graph distance <= 2 (vertices
further apart have disjoint closed neighbourhoods, so once domination
holds their identifying sets are nonempty and distinct); the all-pairs
scan is kept available for cross-checking.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .core import CirculantGraph, Code, NotApplicableError, closed_twins, iter_bits


class CodeKind(enum.IntEnum):
    """The four code kinds; the numeric order mirrors the implication
    chain SID => ID => LD => DOM."""

    DOM = 1
    LD = 2
    ID = 3
    SID = 4

    @property
    def token(self) -> str:
        return self.name.lower()

    @classmethod
    def parse(cls, text: str) -> "CodeKind":
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise ValueError(
                f"unknown code kind {text!r}; expected one of dom, ld, id, sid"
            ) from None


GridVertex = tuple[int, int]
VertexLike = Union[int, GridVertex]


def _vertex_json(v: VertexLike):
    return list(v) if isinstance(v, tuple) else v


@dataclass(frozen=True)
class UncoveredWitness:
    """A vertex whose identifying set is empty."""

    vertex: VertexLike

    def to_json(self) -> dict:
        return {"type": "uncovered", "vertex": _vertex_json(self.vertex)}

    def describe(self) -> str:
        return f"vertex {self.vertex} is not covered by any codeword"


@dataclass(frozen=True)
class PairWitness:
    """Two vertices the code cannot tell apart."""

    u: VertexLike
    v: VertexLike
    i_u: tuple
    i_v: tuple

    def to_json(self) -> dict:
        return {
            "type": "pair",
            "u": _vertex_json(self.u),
            "v": _vertex_json(self.v),
            "Iu": [_vertex_json(c) for c in self.i_u],
            "Iv": [_vertex_json(c) for c in self.i_v],
        }

    def describe(self) -> str:
        return (
            f"vertices {self.u} and {self.v} are confused: "
            f"I({self.u})={set(self.i_u)} vs I({self.v})={set(self.i_v)}"
        )


@dataclass(frozen=True)
class ClosureWitness:
    """A vertex whose codeword neighbourhoods intersect in more than itself."""

    vertex: VertexLike
    intersection: tuple

    def to_json(self) -> dict:
        return {
            "type": "sid",
            "u": _vertex_json(self.vertex),
            "intersection": [_vertex_json(c) for c in self.intersection],
        }

    def describe(self) -> str:
        return (
            f"closed neighbourhoods of I({self.vertex}) intersect in "
            f"{set(self.intersection)}, not just {{{self.vertex}}}"
        )


Witness = Union[UncoveredWitness, PairWitness, ClosureWitness]

TWIN_NOTE = "closed twins present: no code of this kind exists in this graph"


@dataclass(frozen=True)
class VerificationReport:
    kind: CodeKind
    passed: bool
    witness: Witness | None = None
    note: str | None = None

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError("a failing report must carry a witness")

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        out = {
            "kind": self.kind.token,
            "pass": self.passed,
            "witness": self.witness.to_json() if self.witness else None,
        }
        if self.note:
            out["note"] = self.note
        return out


def _iset_members(graph: CirculantGraph, code: Code, u: int) -> tuple[int, ...]:
    return tuple(iter_bits(graph.nbhd_masks[u] & code.mask))


def _check_compat(graph: CirculantGraph, code: Code) -> None:
    if graph.n != code.n:
        raise ValueError(f"code lives in Z_{code.n}, graph in Z_{graph.n}")


def _first_uncovered(graph: CirculantGraph, code: Code) -> int | None:
    for u in range(graph.n):
        if not graph.nbhd_masks[u] & code.mask:
            return u
    return None


def is_dominating(graph: CirculantGraph, code: Code) -> VerificationReport:
    """Every vertex must have a nonempty identifying set."""
    _check_compat(graph, code)
    u = _first_uncovered(graph, code)
    if u is None:
        return VerificationReport(CodeKind.DOM, True)
    return VerificationReport(CodeKind.DOM, False, UncoveredWitness(u))


def _pair_candidates(graph: CirculantGraph, u: int, all_pairs: bool) -> int:
    # Mask of v > u to compare against u.
    above = ~((1 << (u + 1)) - 1) & graph.full_mask
    if all_pairs:
        return above
    return graph.ball2_masks[u] & above


def _twin_report(graph: CirculantGraph, code: Code, kind: CodeKind) -> VerificationReport | None:
    twins = closed_twins(graph)
    if twins is None:
        return None
    u, v = twins
    witness = PairWitness(u, v, _iset_members(graph, code, u), _iset_members(graph, code, v))
    return VerificationReport(kind, False, witness, note=TWIN_NOTE)


def is_identifying(
    graph: CirculantGraph, code: Code, *, all_pairs: bool = False
) -> VerificationReport:
    """Dominating with pairwise distinct identifying sets."""
    _check_compat(graph, code)
    report = _twin_report(graph, code, CodeKind.ID)
    if report is not None:
        return report
    u = _first_uncovered(graph, code)
    if u is not None:
        return VerificationReport(CodeKind.ID, False, UncoveredWitness(u))
    masks = graph.nbhd_masks
    for u in range(graph.n):
        iu = masks[u] & code.mask
        for v in iter_bits(_pair_candidates(graph, u, all_pairs)):
            if iu == masks[v] & code.mask:
                witness = PairWitness(
                    u, v, _iset_members(graph, code, u), _iset_members(graph, code, v)
                )
                return VerificationReport(CodeKind.ID, False, witness)
    return VerificationReport(CodeKind.ID, True)


def is_locating_dominating(
    graph: CirculantGraph, code: Code, *, all_pairs: bool = False
) -> VerificationReport:
    """Dominating with distinct identifying sets on non-codewords."""
    _check_compat(graph, code)
    u = _first_uncovered(graph, code)
    if u is not None:
        return VerificationReport(CodeKind.LD, False, UncoveredWitness(u))
    masks = graph.nbhd_masks
    non_code = graph.full_mask & ~code.mask
    for u in iter_bits(non_code):
        iu = masks[u] & code.mask
        for v in iter_bits(_pair_candidates(graph, u, all_pairs) & non_code):
            if iu == masks[v] & code.mask:
                witness = PairWitness(
                    u, v, _iset_members(graph, code, u), _iset_members(graph, code, v)
                )
                return VerificationReport(CodeKind.LD, False, witness)
    return VerificationReport(CodeKind.LD, True)


def is_self_identifying(
    graph: CirculantGraph, code: Code, *, cross_check: bool = False
) -> VerificationReport:
    """Every identifying set is nonempty and pins down its vertex: the
    closed neighbourhoods of its codewords intersect exactly in {u}.

    With cross_check=True the independent pairwise decider is also run
    and a disagreement raises RuntimeError.
    """
    _check_compat(graph, code)
    report = _twin_report(graph, code, CodeKind.SID)
    if report is None:
        u = _first_uncovered(graph, code)
        if u is not None:
            report = VerificationReport(CodeKind.SID, False, UncoveredWitness(u))
    if report is None:
        masks = graph.nbhd_masks
        for u in range(graph.n):
            inter = graph.full_mask
            for c in iter_bits(masks[u] & code.mask):
                inter &= masks[c]
            if inter != 1 << u:
                witness = ClosureWitness(u, tuple(iter_bits(inter)))
                report = VerificationReport(CodeKind.SID, False, witness)
                break
        else:
            report = VerificationReport(CodeKind.SID, True)
    if cross_check:
        other = is_self_identifying_pairwise(graph, code)
        if other.passed != report.passed:
            raise RuntimeError(
                f"self-identification deciders disagree on {graph}: "
                f"closure says {report.passed}, pairwise says {other.passed}"
            )
    return report


def is_self_identifying_pairwise(
    graph: CirculantGraph, code: Code, *, all_pairs: bool = False
) -> VerificationReport:
    """Independent decider from the pairwise definition:
    I(u) \\ I(v) nonempty for every ordered pair of distinct vertices."""
    _check_compat(graph, code)
    report = _twin_report(graph, code, CodeKind.SID)
    if report is not None:
        return report
    u = _first_uncovered(graph, code)
    if u is not None:
        return VerificationReport(CodeKind.SID, False, UncoveredWitness(u))
    masks = graph.nbhd_masks
    for u in range(graph.n):
        iu = masks[u] & code.mask
        if all_pairs:
            others = graph.full_mask & ~(1 << u)
        else:
            others = graph.ball2_masks[u] & ~(1 << u)
        for v in iter_bits(others):
            iv = masks[v] & code.mask
            if iu & ~iv == 0 or iv & ~iu == 0:
                a, b = (u, v) if iu & ~iv == 0 else (v, u)
                witness = PairWitness(
                    a, b, _iset_members(graph, code, a), _iset_members(graph, code, b)
                )
                return VerificationReport(CodeKind.SID, False, witness)
    return VerificationReport(CodeKind.SID, True)


_VERIFIERS = {
    CodeKind.DOM: is_dominating,
    CodeKind.LD: is_locating_dominating,
    CodeKind.ID: is_identifying,
    CodeKind.SID: is_self_identifying,
}


def verify(graph: CirculantGraph, code: Code, kind: CodeKind) -> VerificationReport:
    """Dispatch to the decider for the requested kind."""
    return _VERIFIERS[kind](graph, code)


# ---------------------------------------------------------------------------
# structural audit for self-identifying codes in two-generator graphs

@dataclass(frozen=True)
class SidAuditReport:
    """Checks the structural facts every self-identifying code in a
    two-generator graph with 4*d2 - 1 < n must satisfy:

    * every codeword is covered by at least three codewords,
    * every non-codeword x has {x-g, x+g} in its identifying set for
      some generator g,
    * for generators (1, 3), a non-codeword with a two-element
      identifying set has exactly {x-3, x+3}.

    A violation on a code that verified as self-identifying indicates an
    internal inconsistency and is surfaced via ``violations``.
    """

    graph: CirculantGraph
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def sid_structure_audit(graph: CirculantGraph, code: Code) -> SidAuditReport:
    _check_compat(graph, code)
    if len(graph.gens) != 2:
        raise NotApplicableError(
            f"structure audit needs exactly two generators, got {graph.gens}"
        )
    d1, d2 = graph.gens
    if not 4 * d2 - 1 < graph.n:
        raise NotApplicableError(
            f"structure audit needs 4*{d2} - 1 < n, got n={graph.n}"
        )
    if not is_self_identifying(graph, code).passed:
        raise NotApplicableError("structure audit expects a verified self-identifying code")

    n = graph.n
    masks = graph.nbhd_masks
    violations: list[str] = []
    for x in range(n):
        iset = masks[x] & code.mask
        size = iset.bit_count()
        if x in code:
            if size < 3:
                violations.append(f"codeword {x} has |I| = {size} < 3")
            continue
        sym_pairs = [
            (1 << ((x - g) % n)) | (1 << ((x + g) % n)) for g in (d1, d2)
        ]
        if not any(iset & p == p for p in sym_pairs):
            violations.append(f"non-codeword {x} lacks a symmetric generator pair in I")
        if (d1, d2) == (1, 3) and size == 2 and iset != sym_pairs[1]:
            violations.append(
                f"non-codeword {x} has a two-element I-set other than {{x-3, x+3}}"
            )
    return SidAuditReport(graph, tuple(violations))
