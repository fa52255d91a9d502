"""Lifts of circulant codes to periodic codes on the infinite square,
triangular and king grids, with exact densities and a finite, faithful
verification over one fundamental domain.

A circulant code C in the matching graph shape induces the grid code
{v in Z^2 : phi(v) in C}, where phi maps a grid vertex to a ring vertex
(x, y) -> x + y*s (mod n) with a grid-specific column shift s.  The
induced code is invariant under the kernel lattice of phi, which has
index n in Z^2, so one representative per lattice class suffices for
verification; pair checks only need the radius-2 ball because farther
vertices have disjoint closed neighbourhoods.
"""

from __future__ import annotations

import csv
import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .core import CirculantGraph, Code, NotApplicableError
from .verify import (
    ClosureWitness,
    CodeKind,
    PairWitness,
    UncoveredWitness,
    VerificationReport,
)

_SQUARE_OFFSETS = ((0, 0), (-1, 0), (1, 0), (0, -1), (0, 1))
_TRI_EXTRA = ((1, 1), (-1, -1))
_KING_EXTRA = ((1, 1), (-1, -1), (-1, 1), (1, -1))


class GridKind(enum.Enum):
    SQUARE = "square"
    TRIANGULAR = "tri"
    KING = "king"

    @classmethod
    def parse(cls, text: str) -> "GridKind":
        aliases = {
            "square": cls.SQUARE,
            "tri": cls.TRIANGULAR,
            "triangular": cls.TRIANGULAR,
            "king": cls.KING,
        }
        try:
            return aliases[text.strip().lower()]
        except KeyError:
            raise ValueError(f"unknown grid {text!r}; expected square, tri or king") from None

    @property
    def closed_offsets(self) -> tuple[tuple[int, int], ...]:
        if self is GridKind.SQUARE:
            return _SQUARE_OFFSETS
        if self is GridKind.TRIANGULAR:
            return _SQUARE_OFFSETS + _TRI_EXTRA
        return _SQUARE_OFFSETS + _KING_EXTRA

    def column_shift(self, d: int) -> int:
        """The s in phi(x, y) = x + y*s: moving one row up adds s."""
        return d - 1 if self is GridKind.TRIANGULAR else d

    def ring_gens(self, d: int) -> tuple[int, ...]:
        if self is GridKind.SQUARE:
            return (1, d)
        if self is GridKind.TRIANGULAR:
            return (1, d - 1, d)
        return (1, d - 1, d, d + 1)


def matching_grid(graph: CirculantGraph) -> tuple[GridKind, int] | None:
    """The grid family whose reduction matches this generator shape:
    (1,d) -> square, (1,d-1,d) -> triangular, (1,d-1,d,d+1) -> king."""
    g = graph.gens
    if len(g) == 2 and g[0] == 1 and g[1] >= 2:
        return GridKind.SQUARE, g[1]
    if len(g) == 3 and g == (1, g[2] - 1, g[2]) and g[2] >= 3:
        return GridKind.TRIANGULAR, g[2]
    if len(g) == 4 and g == (1, g[2] - 1, g[2], g[2] + 1) and g[2] >= 3:
        return GridKind.KING, g[2]
    return None


@dataclass(frozen=True)
class PeriodicGridCode:
    """A lattice-periodic code on an infinite grid, defined by pulling a
    ring code back through phi."""

    grid: GridKind
    n: int
    d: int
    source: Code

    @property
    def shift(self) -> int:
        return self.grid.column_shift(self.d)

    def phi(self, v: tuple[int, int]) -> int:
        x, y = v
        return (x + y * self.shift) % self.n

    def __contains__(self, v: tuple[int, int]) -> bool:
        return self.phi(v) in self.source

    def lattice_generators(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Generators of the period lattice, the kernel of phi."""
        return (self.n, 0), (-self.shift, 1)

    def density(self) -> Fraction:
        """Exact fraction of grid vertices in the code.

        The code is periodic under an index-n lattice, so the limiting
        window density equals the fundamental-domain fraction |C|/n.
        """
        return Fraction(len(self.source), self.n)


def lift(code: Code, n: int, d: int, grid: GridKind) -> PeriodicGridCode:
    """Pull a ring code back to the grid; the ring shape must match."""
    if code.n != n:
        raise NotApplicableError(f"code lives in Z_{code.n}, lift asked for n={n}")
    if grid is GridKind.SQUARE:
        if d < 2:
            raise NotApplicableError(f"square lift needs d >= 2, got d={d}")
    elif d < 3:
        raise NotApplicableError(f"{grid.value} lift needs d >= 3, got d={d}")
    top = max(grid.ring_gens(d))
    if not top <= n // 2:
        raise NotApplicableError(
            f"{grid.value} lift needs generator {top} <= n/2, got n={n}"
        )
    return PeriodicGridCode(grid, n, d, code)


def grid_density(lifted: PeriodicGridCode) -> Fraction:
    return lifted.density()


_LITERATURE = {
    GridKind.SQUARE: {
        CodeKind.LD: Fraction(3, 10),
        CodeKind.ID: Fraction(7, 20),
        CodeKind.SID: Fraction(1, 2),
    },
    GridKind.TRIANGULAR: {
        CodeKind.LD: Fraction(13, 57),
        CodeKind.ID: Fraction(1, 4),
        CodeKind.SID: Fraction(1, 2),
    },
    GridKind.KING: {
        CodeKind.LD: Fraction(1, 5),
        CodeKind.ID: Fraction(2, 9),
        CodeKind.SID: Fraction(1, 3),
    },
}


def literature_density(grid: GridKind, kind: CodeKind) -> Fraction:
    """Known optimal density for the grid and kind."""
    if kind is CodeKind.DOM:
        raise NotApplicableError("no optimal-density table entry for plain domination")
    return _LITERATURE[grid][kind]


def _ball2_offsets(grid: GridKind) -> tuple[tuple[int, int], ...]:
    ball = {
        (a + c, b + d_)
        for a, b in grid.closed_offsets
        for c, d_ in grid.closed_offsets
    }
    return tuple(sorted(ball))


def grid_verify(lifted: PeriodicGridCode, kind: CodeKind) -> VerificationReport:
    """Decide a code property for the infinite grid.

    Domination is checked on one representative (t, 0) of each of the n
    lattice classes; distinguishing checks run each representative
    against every grid vertex within the radius-2 ball (13/19/25 points
    for square/triangular/king).  Translating by the period lattice maps
    identifying sets onto each other, so this decides the property for
    the whole grid, with no window parameter to mis-set.
    """
    grid = lifted.grid
    offsets = grid.closed_offsets

    def iset(v: tuple[int, int]) -> frozenset[tuple[int, int]]:
        x, y = v
        return frozenset(
            (x + a, y + b) for a, b in offsets if (x + a, y + b) in lifted
        )

    reps = [(t, 0) for t in range(lifted.n)]
    for u in reps:
        if not iset(u):
            return VerificationReport(kind, False, UncoveredWitness(u))
    if kind is CodeKind.DOM:
        return VerificationReport(kind, True)

    pair_offsets = [o for o in _ball2_offsets(grid) if o != (0, 0)]
    for u in reps:
        iu = iset(u)
        for a, b in pair_offsets:
            v = (u[0] + a, u[1] + b)
            iv = iset(v)
            if kind is CodeKind.ID:
                bad = iu == iv
            elif kind is CodeKind.LD:
                bad = u not in lifted and v not in lifted and iu == iv
            else:  # SID: ordered pairs, the reversed order is scanned elsewhere
                bad = not (iu - iv)
            if bad:
                witness = PairWitness(u, v, tuple(sorted(iu)), tuple(sorted(iv)))
                return VerificationReport(kind, False, witness)
    if kind is CodeKind.SID:
        # Equivalent closure form, cheap extra guarantee on representatives.
        for u in reps:
            inter: set[tuple[int, int]] | None = None
            for c in iset(u):
                nc = {(c[0] + a, c[1] + b) for a, b in offsets}
                inter = nc if inter is None else inter & nc
            if inter != {u}:
                witness = ClosureWitness(u, tuple(sorted(inter or ())))
                return VerificationReport(kind, False, witness)
    return VerificationReport(kind, True)


def domain_rows(lifted: PeriodicGridCode) -> list[list[bool]]:
    """Membership over one exact rectangular tile: x in [0, n), y in
    [0, n / gcd(shift, n)).  Row y+1 repeats row y shifted by the column
    shift, and the tile extends to the whole grid by periodicity."""
    height = lifted.n // math.gcd(lifted.shift % lifted.n or lifted.n, lifted.n)
    return [
        [(x, y) in lifted for x in range(lifted.n)] for y in range(height)
    ]


def render_domain(lifted: PeriodicGridCode, codeword: str = "#", empty: str = ".") -> str:
    """ASCII picture of the fundamental tile, one text row per grid row."""
    rows = domain_rows(lifted)
    return "\n".join("".join(codeword if cell else empty for cell in row) for row in rows)


def dump_domain_csv(lifted: PeriodicGridCode, path) -> int:
    """Write the fundamental tile as CSV rows (x, y, codeword); returns
    the number of data rows written."""
    rows = domain_rows(lifted)
    count = 0
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "y", "codeword"])
        for y, row in enumerate(rows):
            for x, member in enumerate(row):
                writer.writerow([x, y, int(member)])
                count += 1
    return count
