"""Construction matrices: solution spectra, minimal realizable order, usage vectors."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .tiles import Pot


@dataclass(frozen=True)
class ConstructionMatrix:
    """Per-bond net counts of a pot, one row per bond type, one column per tile."""

    z: tuple[tuple[int, ...], ...]

    @property
    def bond_count(self) -> int:
        return len(self.z)

    @property
    def tile_count(self) -> int:
        return len(self.z[0]) if self.z else 0

    def augmented(self) -> tuple[tuple[Fraction, ...], ...]:
        """Balance rows augmented with 0, plus the proportion row summing to 1."""
        rows = [
            tuple(Fraction(x) for x in row) + (Fraction(0),) for row in self.z
        ]
        rows.append(tuple(Fraction(1) for _ in range(self.tile_count)) + (Fraction(1),))
        return tuple(rows)


def build_matrix(pot: Pot) -> ConstructionMatrix:
    z = tuple(
        tuple(t.net(bond) for t in pot.tiles) for bond in range(1, pot.bond_count + 1)
    )
    return ConstructionMatrix(z)


@dataclass(frozen=True)
class SpectrumSolution:
    """Affine solution set of the augmented system, in tile-proportion space."""

    consistent: bool
    particular: tuple[Fraction, ...] | None
    nullspace: tuple[tuple[Fraction, ...], ...]

    @property
    def unique(self) -> bool:
        return self.consistent and not self.nullspace


def solve(matrix: ConstructionMatrix) -> SpectrumSolution:
    """Exact Gauss-Jordan over the rationals on the augmented system."""
    rows = [list(r) for r in matrix.augmented()]
    ncols = matrix.tile_count
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] != 0 for row in rows[r:]):
        return SpectrumSolution(False, None, ())
    particular = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        particular[c] = rows[i][-1]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i, c in enumerate(pivots):
            vec[c] = -rows[i][f]
        basis.append(tuple(vec))
    return SpectrumSolution(True, tuple(particular), tuple(basis))


def unique_solution_order(sol: SpectrumSolution) -> int | None:
    """Smallest order scaling a unique nonnegative proportion vector to integers."""
    if not sol.unique or sol.particular is None:
        return None
    if any(x < 0 for x in sol.particular):
        return None
    return math.lcm(*(x.denominator for x in sol.particular))


def _usage_dfs(pot: Pot, n: int, collect_all: bool) -> list[tuple[int, ...]]:
    """Nonnegative integer tile usages summing to n with every bond balanced.

    Suffix pruning: at each depth the partial per-bond net must stay inside
    the [min, max] net achievable by any completion of the remaining budget.
    """
    tiles = pot.tiles
    k = len(tiles)
    m = pot.bond_count
    nets = [[t.net(b) for b in range(1, m + 1)] for t in tiles]
    if n % 2 == 1 and all(t.arms % 2 == 1 for t in tiles):
        # every arm count odd: total ends 2|E| forces an even usage sum
        return []
    suf_min = [[0] * m for _ in range(k + 1)]
    suf_max = [[0] * m for _ in range(k + 1)]
    for j in range(k - 1, -1, -1):
        for b in range(m):
            suf_min[j][b] = min(suf_min[j + 1][b], nets[j][b])
            suf_max[j][b] = max(suf_max[j + 1][b], nets[j][b])
    out: list[tuple[int, ...]] = []
    usage = [0] * k

    def place(j: int, left: int, net: list[int]) -> bool:
        if j == k - 1:
            cand = [net[b] + nets[j][b] * left for b in range(m)]
            if all(x == 0 for x in cand):
                usage[j] = left
                out.append(tuple(usage))
                if not collect_all:
                    return True
            return False
        for c in range(left + 1):
            new = [net[b] + nets[j][b] * c for b in range(m)]
            rest = left - c
            if all(
                suf_min[j + 1][b] * rest <= -new[b] <= suf_max[j + 1][b] * rest
                for b in range(m)
            ):
                usage[j] = c
                if place(j + 1, rest, new):
                    return True
        usage[j] = 0
        return False

    place(0, n, [0] * m)
    return out


def usage_vectors(pot: Pot, n: int) -> list[tuple[int, ...]]:
    """All balanced usage vectors of total n, in ascending lexicographic order."""
    if n < 1:
        raise ValueError("order must be positive")
    return sorted(_usage_dfs(pot, n, collect_all=True))


def first_usage_vector(pot: Pot, n: int) -> tuple[int, ...] | None:
    if n < 1:
        raise ValueError("order must be positive")
    found = _usage_dfs(pot, n, collect_all=False)
    return found[0] if found else None


def first_realizable_order(pot: Pot, below: int) -> int | None:
    """Least order in 1..below-1 with a balanced usage vector, else None."""
    for n in range(1, below):
        if first_usage_vector(pot, n) is not None:
            return n
    return None


@dataclass(frozen=True)
class MinOrderResult:
    """Outcome of the minimal-order hunt.

    status is "realizable" (order and witness set), "unrealizable" (proved
    impossible), or "unknown" (no witness below the search cap).
    """

    status: str
    order: int | None = None
    witness: tuple[int, ...] | None = None
    cap: int | None = None


def min_order(pot: Pot, cap: int = 64) -> MinOrderResult:
    """Smallest order of any complete complex from the pot, searched up to cap.

    The rational spectrum rules the pot out when it is inconsistent or when
    its unique solution has a negative entry; otherwise orders are tried in
    ascending sequence.
    """
    sol = solve(build_matrix(pot))
    if not sol.consistent:
        return MinOrderResult("unrealizable")
    if sol.unique and any(x < 0 for x in sol.particular):
        return MinOrderResult("unrealizable")
    for n in range(1, cap + 1):
        usage = first_usage_vector(pot, n)
        if usage is not None:
            return MinOrderResult("realizable", order=n, witness=usage)
    return MinOrderResult("unknown", cap=cap)
