"""Circulant graphs and vertex codes with exact modular arithmetic.

Vertices live in Z_n, codes are stored as n-bit masks (Python ints), and
every operation is a pure function of immutable values, so everything in
this module is safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


class NotApplicableError(ValueError):
    """A construction, bound or reduction was asked outside its window.

    ``reason`` names the violated condition so callers can report it.
    """

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def rotate_mask(mask: int, t: int, n: int) -> int:
    """Cyclically shift an n-bit mask by t positions (bit i -> bit i+t)."""
    t %= n
    full = (1 << n) - 1
    return ((mask << t) | (mask >> (n - t))) & full if t else mask


def reflect_mask(mask: int, n: int) -> int:
    """Image of an n-bit mask under the automorphism v -> -v (mod n)."""
    out = 0
    for v in iter_bits(mask):
        out |= 1 << ((n - v) % n)
    return out


def iter_bits(mask: int):
    """Yield the set bit positions of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class CirculantGraph:
    """The graph on Z_n where u is adjacent to u +- g for each generator g.

    Generators are kept canonical: strictly increasing, inside [1, n//2].
    A generator equal to n/2 contributes a single neighbour (its two
    offsets coincide), which lowers the degree by one.
    """

    n: int
    gens: tuple[int, ...]

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"graph order must be at least 3, got n={self.n}")
        if not self.gens:
            raise ValueError("generator list must be nonempty")
        if list(self.gens) != sorted(set(self.gens)):
            raise ValueError(f"generators must be strictly increasing, got {self.gens}")
        for g in self.gens:
            if not 1 <= g <= self.n // 2:
                raise ValueError(
                    f"generator {g} outside [1, {self.n // 2}] for n={self.n}"
                )

    @property
    def has_antipodal_generator(self) -> bool:
        return 2 * self.gens[-1] == self.n

    @property
    def degree(self) -> int:
        return 2 * len(self.gens) - (1 if self.has_antipodal_generator else 0)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def nbhd_masks(self) -> tuple[int, ...]:
        """Closed neighbourhood of every vertex as a bit mask."""
        base = 1
        for g in self.gens:
            base |= 1 << (g % self.n)
            base |= 1 << (-g % self.n)
        return tuple(rotate_mask(base, u, self.n) for u in range(self.n))

    @cached_property
    def ball2_masks(self) -> tuple[int, ...]:
        """All vertices within graph distance 2 of every vertex."""
        ball = 0
        for w in iter_bits(self.nbhd_masks[0]):
            ball |= self.nbhd_masks[w]
        return tuple(rotate_mask(ball, u, self.n) for u in range(self.n))

    def nbhd_mask(self, u: int) -> int:
        return self.nbhd_masks[u % self.n]

    def closed_neighborhood(self, u: int) -> frozenset[int]:
        """N[u] = {u} union {u +- g mod n : g generator}, duplicates merged."""
        return frozenset(iter_bits(self.nbhd_masks[u % self.n]))

    def __str__(self) -> str:
        return f"C_{self.n}({','.join(map(str, self.gens))})"


def make_graph(n: int, gens: Iterable[int]) -> CirculantGraph:
    """Build a circulant graph, canonicalizing the generator list.

    Raw generators must lie in [1, n-1]; a generator g above n/2 denotes
    the same offset pair as n-g and is folded down, so e.g. (80, [1, 44])
    yields the graph with generators (1, 36).  Values outside [1, n-1]
    are rejected rather than reduced.
    """
    if n < 3:
        raise ValueError(f"graph order must be at least 3, got n={n}")
    raw = list(gens)
    if not raw:
        raise ValueError("generator list must be nonempty")
    folded = set()
    for g in raw:
        if not 1 <= g <= n - 1:
            raise ValueError(f"generator {g} outside [1, {n - 1}] for n={n}")
        folded.add(min(g, n - g))
    return CirculantGraph(n, tuple(sorted(folded)))


@dataclass(frozen=True)
class Code:
    """A nonempty subset of Z_n stored as an n-bit membership mask."""

    n: int
    mask: int

    def __post_init__(self):
        if self.mask == 0:
            raise ValueError("a code must be nonempty")
        if not 0 < self.mask < (1 << self.n):
            raise ValueError(f"code members must lie in [0, {self.n - 1}]")

    @classmethod
    def from_members(cls, n: int, members: Iterable[int]) -> "Code":
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise ValueError(f"code member {v} outside [0, {n - 1}]")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def from_residues(cls, n: int, period: int, residues: Iterable[int]) -> "Code":
        """The code {u in Z_n : u mod period in residues}; period must divide n."""
        if period <= 0 or n % period != 0:
            raise ValueError(f"period {period} does not divide n={n}")
        res = set(residues)
        for r in res:
            if not 0 <= r < period:
                raise ValueError(f"residue {r} outside [0, {period - 1}]")
        block = 0
        for r in res:
            block |= 1 << r
        mask = 0
        for start in range(0, n, period):
            mask |= block << start
        return cls(n, mask)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: int) -> bool:
        return bool(self.mask >> (v % self.n) & 1)

    def __iter__(self):
        return iter_bits(self.mask)

    def rotated(self, t: int) -> "Code":
        return Code(self.n, rotate_mask(self.mask, t, self.n))

    def reflected(self) -> "Code":
        return Code(self.n, reflect_mask(self.mask, self.n))


@dataclass(frozen=True)
class IdentifierSet:
    """I(C;u) = N[u] intersected with the code; owner in members iff owner is a codeword."""

    owner: int
    members: frozenset[int]

    def __bool__(self) -> bool:
        return bool(self.members)

    def __len__(self) -> int:
        return len(self.members)


def closed_neighborhood(graph: CirculantGraph, u: int) -> frozenset[int]:
    return graph.closed_neighborhood(u)


def identifier_set(graph: CirculantGraph, code: Code, u: int) -> IdentifierSet:
    """Exact intersection N[u] & C; an empty result is legal and signals
    a domination failure to callers."""
    if code.n != graph.n:
        raise ValueError(f"code lives in Z_{code.n}, graph in Z_{graph.n}")
    u %= graph.n
    members = graph.nbhd_masks[u] & code.mask
    return IdentifierSet(u, frozenset(iter_bits(members)))


def distance(graph: CirculantGraph, u: int, v: int) -> int | None:
    """Graph distance by breadth-first search; None when v is unreachable
    (possible when no generator is coprime with n)."""
    n = graph.n
    u %= n
    v %= n
    if u == v:
        return 0
    seen = 1 << u
    frontier = seen
    steps = 0
    while frontier:
        steps += 1
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= graph.nbhd_masks[w]
        nxt &= ~seen
        if nxt >> v & 1:
            return steps
        seen |= nxt
        frontier = nxt
    return None


def closed_twins(graph: CirculantGraph) -> tuple[int, int] | None:
    """Smallest pair of distinct vertices with identical closed
    neighbourhoods, or None.  By vertex transitivity it suffices to test
    whether N[0] is invariant under some nonzero rotation."""
    base = graph.nbhd_masks[0]
    for t in range(1, graph.n):
        if rotate_mask(base, t, graph.n) == base:
            return (0, t)
    return None


# ---------------------------------------------------------------------------
# canonical JSON forms

def code_to_payload(graph: CirculantGraph, code: Code) -> dict:
    """Canonical serialization: sorted member list plus the graph it lives in."""
    return {"n": graph.n, "gens": list(graph.gens), "code": list(code.members)}


def code_from_payload(data: dict) -> tuple[int, list[int] | None, Code]:
    """Parse a code payload in explicit-list or residue-class form.

    Returns (n, gens or None, code).  Residue payloads carry "period" and
    "residues" and denote {u : u mod period in residues}.
    """
    if not isinstance(data, dict):
        raise ValueError("code payload must be a JSON object")
    if "n" not in data:
        raise ValueError('code payload is missing "n"')
    n = data["n"]
    if not isinstance(n, int) or n < 3:
        raise ValueError(f'invalid "n" in code payload: {n!r}')
    gens = data.get("gens")
    if gens is not None and not (
        isinstance(gens, list) and all(isinstance(g, int) for g in gens)
    ):
        raise ValueError(f'invalid "gens" in code payload: {gens!r}')
    if "code" in data:
        code = Code.from_members(n, data["code"])
    elif "residues" in data:
        if "period" not in data:
            raise ValueError('residue-class payload is missing "period"')
        code = Code.from_residues(n, data["period"], data["residues"])
    else:
        raise ValueError('code payload needs either "code" or "residues"')
    return n, gens, code
