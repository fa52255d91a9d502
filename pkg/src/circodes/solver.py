"""Exact minimum-cardinality search for codes in circulant graphs.

Every kind is a covering problem over fixed requirement sets:

* domination: C must intersect N[u] for every u;
* identification: additionally N[u] xor N[v] for pairs at distance <= 2
  (farther pairs are separated by domination alone);
* location-domination: {u, v} union (N(u) xor N(v)) for such pairs;
* self-identification: N[u] \\ N[v] for ordered pairs at distance <= 2.

The solver therefore runs one branch-and-bound over n-bit masks: unit
propagation on requirements, a packing lower bound from pairwise
disjoint unmet requirements, branching on the requirement with fewest
remaining candidates, and rotation symmetry breaking (per size layer it
only searches codes containing vertex 0, valid because every rotation
of a valid code is valid).  Layers are explored by iterative deepening
from the strongest known lower bound, so the first feasible layer is a
certified optimum and memory stays flat.

In graphs with exactly two generators g1 < g2 and 4*g2 - 1 < n, every
self-identifying code covers each non-codeword x by {x-g, x+g} for some
generator g; that structural fact is propagated as a clause whenever a
vertex is excluded.

The search itself is single-threaded and deterministic; batch callers
parallelize across instances, which keeps returned sizes independent of
worker counts.
"""

from __future__ import annotations

import enum
import itertools
import time
from dataclasses import dataclass, field
from typing import Callable

from .bounds import best_lower_bound
from .core import CirculantGraph, Code, closed_twins, iter_bits
from .families import applicable_families
from .verify import CodeKind, verify


class SolveStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SolveRequest:
    graph: CirculantGraph
    kind: CodeKind
    max_size: int | None = None
    deterministic: bool = False
    time_budget: float | None = None
    on_progress: Callable[[dict], None] | None = field(default=None, compare=False)
    progress_every: int = 250_000

    def __post_init__(self):
        if self.max_size is not None and not 1 <= self.max_size <= self.graph.n:
            raise ValueError(f"max_size must lie in [1, {self.graph.n}]")


@dataclass(frozen=True)
class SolveResult:
    status: SolveStatus
    size: int | None
    witness: Code | None
    nodes_explored: int
    lower_bound: int | None
    upper_bound: int | None

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "size": self.size,
            "witness": list(self.witness.members) if self.witness else None,
            "nodes_explored": self.nodes_explored,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
        }


class _BudgetExhausted(Exception):
    pass


def requirement_masks(graph: CirculantGraph, kind: CodeKind) -> list[int]:
    """The covering sets whose hitting sets are exactly the codes of this
    kind, deduplicated and reduced to the inclusion-minimal ones."""
    n = graph.n
    masks = graph.nbhd_masks
    reqs: set[int] = set(masks)
    if kind is not CodeKind.DOM:
        for u in range(n):
            near = graph.ball2_masks[u] & ~(1 << u)
            for v in iter_bits(near):
                if kind is CodeKind.SID:
                    reqs.add(masks[u] & ~masks[v])
                elif v > u:
                    if kind is CodeKind.ID:
                        reqs.add(masks[u] ^ masks[v])
                    else:  # LD
                        open_u = masks[u] & ~(1 << u)
                        open_v = masks[v] & ~(1 << v)
                        reqs.add((1 << u) | (1 << v) | (open_u ^ open_v))
    ordered = sorted(reqs, key=lambda m: (m.bit_count(), m))
    minimal: list[int] = []
    for r in ordered:
        if not any(kept & r == kept for kept in minimal):
            minimal.append(r)
    return minimal


def _sid_rule(graph: CirculantGraph, kind: CodeKind) -> tuple[int, int] | None:
    if kind is CodeKind.SID and len(graph.gens) == 2 and 4 * graph.gens[1] - 1 < graph.n:
        return graph.gens
    return None


class _Search:
    """One size layer of the branch-and-bound; reusable across layers."""

    def __init__(self, graph: CirculantGraph, kind: CodeKind, reqs: list[int],
                 deadline: float | None, progress: Callable[[dict], None] | None,
                 progress_every: int):
        self.n = graph.n
        self.reqs = reqs
        self.rule = _sid_rule(graph, kind)
        if self.rule:
            n = self.n
            g1, g2 = self.rule
            self.rule_pairs = [
                (
                    (1 << ((x - g1) % n)) | (1 << ((x + g1) % n)),
                    (1 << ((x - g2) % n)) | (1 << ((x + g2) % n)),
                )
                for x in range(n)
            ]
        self.deadline = deadline
        self.progress = progress
        self.progress_every = progress_every
        self.nodes = 0
        self.layer = 0
        self.incumbent: int | None = None

    def _tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % 2048 == 0:
            if time.monotonic() > self.deadline:
                raise _BudgetExhausted
        if self.progress is not None and self.nodes % self.progress_every == 0:
            self.progress(
                {
                    "nodes": self.nodes,
                    "layer": self.layer,
                    "incumbent": self.incumbent,
                }
            )

    def _propagate(
        self, chosen: int, banned: int, budget: int, reqs: list[int]
    ) -> tuple[int, int, list[int]] | None:
        """Apply unit and structural propagation to a fixpoint.

        Returns (chosen, budget, unmet requirements), or None on conflict.
        """
        while True:
            unhit: list[int] = []
            forced = 0
            for r in reqs:
                if r & chosen:
                    continue
                avail = r & ~banned
                if not avail:
                    return None
                if avail & (avail - 1) == 0:
                    forced |= avail
                else:
                    unhit.append(r)
            if self.rule:
                for x in iter_bits(banned):
                    p1, p2 = self.rule_pairs[x]
                    alive1 = not p1 & banned
                    alive2 = not p2 & banned
                    if not alive1 and not alive2:
                        return None
                    if alive1 != alive2:
                        live = p1 if alive1 else p2
                        if live & chosen != live:
                            forced |= live
            forced &= ~chosen
            if not forced:
                return chosen, budget, unhit
            count = forced.bit_count()
            if count > budget:
                return None
            chosen |= forced
            budget -= count
            reqs = unhit

    def run(self, size: int) -> int | None:
        """Search for a code of the given size containing vertex 0."""
        self.layer = size
        return self._dfs(1, 0, size - 1, self.reqs)

    def _dfs(self, chosen: int, banned: int, budget: int, reqs: list[int]) -> int | None:
        self._tick()
        state = self._propagate(chosen, banned, budget, reqs)
        if state is None:
            return None
        chosen, budget, reqs = state
        if not reqs:
            return chosen
        if budget <= 0:
            return None
        # Packing bound: pairwise disjoint unmet requirements each need
        # their own new codeword.  Also locate the tightest requirement.
        used = 0
        need = 0
        branch_avail = 0
        branch_count = self.n + 1
        for r in reqs:
            avail = r & ~banned
            count = avail.bit_count()
            if count < branch_count:
                branch_count = count
                branch_avail = avail
            if not avail & used:
                need += 1
                if need > budget:
                    return None
                used |= avail
        for v in iter_bits(branch_avail):
            found = self._dfs(chosen | (1 << v), banned, budget - 1, reqs)
            if found is not None:
                return found
            banned |= 1 << v
        return None

    def lex_smallest(self, size: int) -> int | None:
        """Lexicographically smallest feasible code of the given size that
        contains vertex 0, by include-first search in vertex order."""
        self.layer = size
        return self._lex_dfs(1, 1, 0, size - 1, self.reqs)

    def _lex_dfs(
        self, pos: int, chosen: int, banned: int, budget: int, reqs: list[int]
    ) -> int | None:
        self._tick()
        state = self._propagate(chosen, banned, budget, reqs)
        if state is None:
            return None
        chosen, budget, reqs = state
        if not reqs:
            # Everything is hit: the lex-smallest completion of this
            # branch pads with the smallest undecided vertices.
            fill = pos
            while budget and fill < self.n:
                if not (chosen | banned) >> fill & 1:
                    chosen |= 1 << fill
                    budget -= 1
                fill += 1
            return chosen if budget == 0 else None
        used = 0
        need = 0
        for r in reqs:
            avail = r & ~banned
            if not avail & used:
                need += 1
                if need > budget:
                    return None
                used |= avail
        while pos < self.n and (chosen | banned) >> pos & 1:
            pos += 1
        if pos == self.n:
            return None
        if budget > 0:
            found = self._lex_dfs(pos + 1, chosen | (1 << pos), banned, budget - 1, reqs)
            if found is not None:
                return found
        return self._lex_dfs(pos + 1, chosen, banned | (1 << pos), budget, reqs)


def min_code_size(request: SolveRequest) -> SolveResult:
    """Exact optimum size (and a witness) for the requested kind.

    Status is OPTIMAL with a verified witness, INFEASIBLE when the graph
    has closed twins and identification is impossible, or
    BUDGET_EXCEEDED carrying the best bounds proven so far.
    """
    graph, kind = request.graph, request.kind
    if kind in (CodeKind.ID, CodeKind.SID) and closed_twins(graph) is not None:
        return SolveResult(SolveStatus.INFEASIBLE, None, None, 0, None, None)

    lower = max(1, best_lower_bound(graph, kind).value)
    upper = graph.n
    incumbent = Code(graph.n, graph.full_mask)
    for result in applicable_families(graph, kind):
        if result.claimed_size < upper and verify(graph, result.code, kind).passed:
            upper, incumbent = result.claimed_size, result.code
    assert lower <= upper, f"bound {lower} exceeds construction size {upper} on {graph}"

    deadline = None
    if request.time_budget is not None:
        deadline = time.monotonic() + request.time_budget
    reqs = requirement_masks(graph, kind)
    search = _Search(graph, kind, reqs, deadline, request.on_progress, request.progress_every)
    search.incumbent = upper

    last_layer = upper - 1
    if request.max_size is not None:
        last_layer = min(last_layer, request.max_size)
    size = lower
    try:
        while size <= last_layer:
            found = search.run(size)
            if found is not None:
                actual = found.bit_count()
                assert actual == size, f"layer {size} produced a size-{actual} code"
                witness = Code(graph.n, found)
                return _finish(request, search, witness, size)
            size += 1
    except _BudgetExhausted:
        return SolveResult(
            SolveStatus.BUDGET_EXCEEDED, None, incumbent, search.nodes, size, upper
        )
    if last_layer >= upper - 1:
        # every size below the incumbent is infeasible, so it is optimal
        return _finish(request, search, incumbent, upper)
    # max_size stopped the deepening before reaching the incumbent size
    return SolveResult(
        SolveStatus.BUDGET_EXCEEDED,
        None,
        incumbent,
        search.nodes,
        max(lower, last_layer + 1),
        upper,
    )


def _finish(
    request: SolveRequest, search: _Search, witness: Code, size: int
) -> SolveResult:
    if request.deterministic:
        lex = search.lex_smallest(size)
        assert lex is not None, "deterministic pass lost a known-feasible layer"
        witness = Code(request.graph.n, lex)
    return SolveResult(SolveStatus.OPTIMAL, size, witness, search.nodes, size, size)


def is_optimal(
    graph: CirculantGraph, code: Code, kind: CodeKind, *, time_budget: float | None = None
) -> bool | None:
    """Whether the code's size equals the minimum for its kind; None when
    the solve ran out of budget and the answer is indeterminate."""
    report = verify(graph, code, kind)
    if not report.passed:
        raise ValueError(f"code does not verify as {kind.token} in {graph}")
    result = min_code_size(SolveRequest(graph, kind, time_budget=time_budget))
    if result.status is SolveStatus.BUDGET_EXCEEDED:
        return None
    return result.size == len(code)


# ---------------------------------------------------------------------------
# independent oracle: subset enumeration against the raw definitions

def _def_dominating(graph: CirculantGraph, cmask: int) -> bool:
    return all(nb & cmask for nb in graph.nbhd_masks)


def _def_identifying(graph: CirculantGraph, cmask: int) -> bool:
    masks = graph.nbhd_masks
    isets = [m & cmask for m in masks]
    if not all(isets):
        return False
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            if isets[u] == isets[v]:
                return False
    return True


def _def_locating_dominating(graph: CirculantGraph, cmask: int) -> bool:
    masks = graph.nbhd_masks
    isets = [m & cmask for m in masks]
    if not all(isets):
        return False
    outside = [u for u in range(graph.n) if not cmask >> u & 1]
    for i, u in enumerate(outside):
        for v in outside[i + 1 :]:
            if isets[u] == isets[v]:
                return False
    return True


def _def_self_identifying(graph: CirculantGraph, cmask: int) -> bool:
    masks = graph.nbhd_masks
    isets = [m & cmask for m in masks]
    for u in range(graph.n):
        for v in range(graph.n):
            if u != v and isets[u] & ~isets[v] == 0:
                return False
    return True


_DEFINITION_CHECKS = {
    CodeKind.DOM: _def_dominating,
    CodeKind.ID: _def_identifying,
    CodeKind.LD: _def_locating_dominating,
    CodeKind.SID: _def_self_identifying,
}


def exhaustive_min_code_size(
    graph: CirculantGraph, kind: CodeKind
) -> tuple[int, Code] | None:
    """Enumerate all nonempty subsets of Z_n by increasing size and test
    the raw definition; the reference oracle the solver is audited
    against.  Returns (size, first code found) or None when no code of
    this kind exists."""
    check = _DEFINITION_CHECKS[kind]
    for size in range(1, graph.n + 1):
        for combo in itertools.combinations(range(graph.n), size):
            cmask = 0
            for v in combo:
                cmask |= 1 << v
            if check(graph, cmask):
                return size, Code(graph.n, cmask)
    return None
