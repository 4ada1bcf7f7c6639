"""Minimal bond-type and tile-type counts, by search over edge labelings.

Any pot that satisfies a scenario for a target graph induces, through a
realization of that target, an edge labeling (bond letter plus orientation)
whose induced pot also satisfies the scenario with no more bond or tile
types.  Searching labelings of one fixed target representative is therefore
enough to find the minima.

Two always-on reductions keep exactness: letters are introduced in
first-appearance order along the edge sequence (quotients bond renaming),
and the first edge of each letter is assigned a fixed orientation (flipping
every hat of one letter is a pot equivalence).  Loops get a single
orientation since both their ends sit on the same vertex.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .assembly import DEFAULT_BUDGET, Budget, BudgetExceeded, iter_complexes
from .matrix import first_realizable_order, usage_vectors
from .multigraph import (
    Multigraph,
    WheelStructure,
    degree_stats,
    isomorphic,
    wheel_structure,
)
from .tiles import CohesiveEnd, Pot, Tile


@dataclass(frozen=True)
class PruneFlags:
    """Optional search cuts that are justified only for scenario-3 wheel targets.

    adjacent_tile_repeat: skip labelings placing one tile type on adjacent
    vertices.  cycle_letter_cap: skip letters used on more than two rim
    edges.  cycle_spoke_separation: skip letters shared by a rim edge and a
    spoke not touching it.
    """

    adjacent_tile_repeat: bool = False
    cycle_letter_cap: bool = False
    cycle_spoke_separation: bool = False

    @classmethod
    def none(cls) -> "PruneFlags":
        return cls()

    @classmethod
    def wheel_lemmas(cls) -> "PruneFlags":
        return cls(True, True, True)

    def __bool__(self) -> bool:
        return (
            self.adjacent_tile_repeat
            or self.cycle_letter_cap
            or self.cycle_spoke_separation
        )


@dataclass(frozen=True)
class SearchSpec:
    """A minimality question: target graph, scenario, caps, optional prunes."""

    target: Multigraph
    scenario: int
    max_bonds: int | None = None
    max_tiles: int | None = None
    prune: PruneFlags = PruneFlags.none()

    def __post_init__(self) -> None:
        if self.scenario not in (1, 2, 3):
            raise ValueError("scenario must be 1, 2, or 3")
        if any(d < 1 for d in self.target.degree_sequence()):
            raise ValueError("isolated vertices cannot carry tiles")
        for name in ("max_bonds", "max_tiles"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ValueError(f"{name} must be positive")
        if self.prune:
            if self.scenario != 3:
                raise ValueError("lemma prunes apply only to scenario 3")
            if wheel_structure(self.target) is None:
                raise ValueError("lemma prunes apply only to wheel targets")


@dataclass(frozen=True)
class MinimaResult:
    """One minimization outcome; exhaustive means minimality is proved."""

    bonds: int
    tiles: int
    witness: Pot
    exhaustive: bool


@dataclass(frozen=True)
class MinimaPair:
    """Both lexicographic minimizations: bonds-then-tiles and tiles-then-bonds."""

    bond_first: MinimaResult
    tile_first: MinimaResult


def _edge_order(g: Multigraph) -> list[int]:
    """Edge sequence that finishes vertices early, for fast tile pruning.

    Greedy: repeatedly take the edge whose endpoints have the fewest
    unprocessed incidences, minimizing (smaller count, sum, index).
    """
    rem = [0] * g.order
    for u, v in g.edges:
        rem[u] += 1
        if v != u:
            rem[v] += 1

    def rank(i: int) -> tuple[int, int, int]:
        u, v = g.edges[i]
        return (min(rem[u], rem[v]), rem[u] + rem[v], i)

    remaining = set(range(g.size))
    out: list[int] = []
    while remaining:
        i = min(remaining, key=rank)
        out.append(i)
        remaining.remove(i)
        u, v = g.edges[i]
        rem[u] -= 1
        if v != u:
            rem[v] -= 1
    return out


class _Search:
    """One feasibility run: is there a labeling within the letter/tile caps
    whose induced pot passes the scenario?  Returns the first such pot."""

    def __init__(
        self,
        target: Multigraph,
        scenario: int,
        max_letters: int,
        max_tiles: int,
        enum_budget: int,
        node_budget: Budget | None,
        prune: PruneFlags,
        ws: WheelStructure | None,
        cache: dict,
    ):
        self.g = target
        self.n = target.order
        self.scenario = scenario
        self.max_letters = max_letters
        self.max_tiles = max_tiles
        self.enum_budget = enum_budget
        self.node_budget = node_budget
        self.prune = prune
        self.cache = cache
        self.clean = True
        self.seq = [target.edges[i] for i in _edge_order(target)]
        self.degs = target.degree_sequence()
        classes = sorted(set(self.degs))
        self.class_of = {d: i for i, d in enumerate(classes)}
        self.rem = [0] * self.n
        for u, v in self.seq:
            self.rem[u] += 1
            if v != u:
                self.rem[v] += 1
        self.ends: list[list[tuple[int, bool]]] = [[] for _ in range(self.n)]
        self.completed: list[tuple | None] = [None] * self.n
        self.key_counts = [defaultdict(int) for _ in classes]
        self.distinct = [0] * len(classes)
        self.adj = [target.neighbors(v) for v in range(self.n)]
        self.kind: list[str] | None = None
        self.hub = -1
        if prune:
            assert ws is not None
            self.hub = ws.hub
            self.kind = [
                "c" if p in ws.cycle_pairs else ("s" if p in ws.spoke_pairs else "")
                for p in self.seq
            ]
        self.cyc_uses: dict[int, int] = defaultdict(int)
        self.rim_pairs: dict[int, list[tuple[int, int]]] = defaultdict(list)
        self.spoke_feet: dict[int, list[int]] = defaultdict(list)

    def run(self) -> Pot | None:
        return self._dfs(0, 0)

    def _dfs(self, k: int, used: int) -> Pot | None:
        if self.node_budget is not None:
            self.node_budget.spend()
        if k == len(self.seq):
            return self._leaf()
        u, v = self.seq[k]
        loop = u == v
        kind = self.kind[k] if self.kind is not None else ""
        for letter in range(1, min(used + 1, self.max_letters) + 1):
            new = letter == used + 1
            if kind == "c":
                if self.prune.cycle_letter_cap and self.cyc_uses[letter] >= 2:
                    continue
                if self.prune.cycle_spoke_separation and any(
                    w != u and w != v for w in self.spoke_feet[letter]
                ):
                    continue
            elif kind == "s":
                foot = u if v == self.hub else v
                if self.prune.cycle_spoke_separation and any(
                    foot != a and foot != b for a, b in self.rim_pairs[letter]
                ):
                    continue
            orients = ((u, v),) if (new or loop) else ((u, v), (v, u))
            for tail, head in orients:
                pot = self._try(k, letter, tail, head, used + 1 if new else used, kind)
                if pot is not None:
                    return pot
        return None

    def _try(
        self, k: int, letter: int, tail: int, head: int, used: int, kind: str
    ) -> Pot | None:
        u, v = self.seq[k]
        loop = u == v
        self.ends[tail].append((letter, False))
        self.ends[head].append((letter, True))
        self.rem[u] -= 1
        if not loop:
            self.rem[v] -= 1
        if kind == "c":
            self.cyc_uses[letter] += 1
            self.rim_pairs[letter].append((u, v))
        elif kind == "s":
            self.spoke_feet[letter].append(u if v == self.hub else v)
        closed: list[int] = []
        ok = True
        for w in (u,) if loop else (u, v):
            if self.rem[w] == 0:
                if not self._close(w):
                    ok = False
                    break
                closed.append(w)
        result = self._dfs(k + 1, used) if ok else None
        if result is None:
            for w in reversed(closed):
                self._reopen(w)
            if kind == "c":
                self.cyc_uses[letter] -= 1
                self.rim_pairs[letter].pop()
            elif kind == "s":
                self.spoke_feet[letter].pop()
            self.rem[u] += 1
            if not loop:
                self.rem[v] += 1
            self.ends[head].pop()
            self.ends[tail].pop()
        return result

    def _close(self, w: int) -> bool:
        key = tuple(sorted(self.ends[w]))
        if self.prune.adjacent_tile_repeat:
            for x in self.adj[w]:
                if self.completed[x] == key:
                    return False
        cls = self.class_of[self.degs[w]]
        counts = self.key_counts[cls]
        if counts[key] == 0:
            # lower bound: each degree class needs at least one tile type,
            # and distinct shapes already seen only ever grow it
            bound = sum(max(d, 1) for d in self.distinct) + (
                1 if self.distinct[cls] else 0
            )
            if bound > self.max_tiles:
                return False
            self.distinct[cls] += 1
        counts[key] += 1
        self.completed[w] = key
        return True

    def _reopen(self, w: int) -> None:
        key = self.completed[w]
        self.completed[w] = None
        cls = self.class_of[self.degs[w]]
        self.key_counts[cls][key] -= 1
        if self.key_counts[cls][key] == 0:
            self.distinct[cls] -= 1

    def _leaf(self) -> Pot | None:
        tiles: list[Tile] = []
        seen: set[tuple] = set()
        for v in range(self.n):
            key = self.completed[v]
            if key not in seen:
                seen.add(key)
                tiles.append(Tile(tuple(CohesiveEnd(b, h) for b, h in key)))
        pot = Pot(tuple(tiles))
        return pot if self._passes(pot) else None

    def _passes(self, pot: Pot) -> bool:
        if self.scenario == 1:
            return True
        if first_realizable_order(pot, self.n) is not None:
            return False
        if self.scenario == 2:
            return True
        key = tuple(sorted(t.ends for t in pot.tiles))
        hit = self.cache.get(key)
        if hit is not None:
            ok, verified = hit
            if not verified:
                self.clean = False
            return ok
        ok, verified = True, True
        budget = Budget(self.enum_budget)
        try:
            for usage in usage_vectors(pot, self.n):
                for built in iter_complexes(pot, usage, budget):
                    if not isomorphic(built, self.g):
                        ok = False
                        break
                if not ok:
                    break
        except BudgetExceeded:
            # could not verify; treat as failing but poison exhaustiveness
            ok, verified = False, False
            self.clean = False
        self.cache[key] = (ok, verified)
        return ok


def search_minima(
    spec: SearchSpec,
    enum_budget: int = DEFAULT_BUDGET,
    node_budget: int | None = None,
) -> MinimaPair:
    """Minimal bond and tile counts for the posed question, in both orders.

    bond_first minimizes bond types, then tile types given that bond count;
    tile_first the reverse.  Caps default to edge count (bonds) and vertex
    count (tiles), which lose no generality.  Raises ValueError when nothing
    within the caps satisfies the scenario.
    """
    g = spec.target
    ws = wheel_structure(g) if spec.prune else None
    cache: dict = {}
    nb = Budget(node_budget) if node_budget is not None else None
    max_b = spec.max_bonds if spec.max_bonds is not None else g.size
    max_t = spec.max_tiles if spec.max_tiles is not None else g.order
    floor_t = len(set(g.degree_sequence()))

    def attempt(letters: int, tiles: int) -> tuple[Pot | None, bool]:
        run = _Search(
            g, spec.scenario, letters, tiles, enum_budget, nb, spec.prune, ws, cache
        )
        return run.run(), run.clean

    def minimize(bonds_first: bool) -> MinimaResult:
        clean = True
        wit: Pot | None = None
        primary = range(1, max_b + 1) if bonds_first else range(floor_t, max_t + 1)
        for x in primary:
            pot, c = attempt(x, max_t) if bonds_first else attempt(max_b, x)
            if pot is not None:
                wit = pot
                break
            clean = clean and c
        if wit is None:
            raise ValueError(
                f"no pot with at most {max_b} bond types and {max_t} tile types "
                f"satisfies scenario {spec.scenario} for the target"
            )
        secondary = (
            range(floor_t, wit.tile_count) if bonds_first else range(1, wit.bond_count)
        )
        for y in secondary:
            pot, c = attempt(wit.bond_count, y) if bonds_first else attempt(y, wit.tile_count)
            if pot is not None:
                wit = pot
                break
            clean = clean and c
        return MinimaResult(
            wit.bond_count, wit.tile_count, wit, exhaustive=clean and not spec.prune
        )

    return MinimaPair(minimize(True), minimize(False))


def check_bounds(g: Multigraph, scenario1_tiles: MinimaResult) -> bool:
    """Distinct-degree lower and even/odd-degree upper bound on tile minima."""
    st = degree_stats(g)
    return st.av <= scenario1_tiles.tiles <= st.ev + 2 * st.ov


def check_hierarchy(
    target: Multigraph, r1: MinimaResult, r2: MinimaResult, r3: MinimaResult
) -> bool:
    """Stricter scenarios can never need fewer bond or tile types.

    The results must all answer the same target; it is carried here so a
    mixed-up call site reads wrong at a glance.
    """
    del target
    return r1.bonds <= r2.bonds <= r3.bonds and r1.tiles <= r2.tiles <= r3.tiles
