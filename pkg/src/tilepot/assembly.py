"""Complete complexes: enumeration, realization witnesses, scenario verification.

A complete complex of a pot is a multigraph whose vertices carry tiles and
whose edges join complementary cohesive ends, with no end left unmatched.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .matrix import first_realizable_order, first_usage_vector, usage_vectors
from .multigraph import Multigraph, canonical_key, iso_invariant, isomorphic
from .tiles import Pot, tile_multiset_counter

DEFAULT_BUDGET = 10_000_000


class BudgetExceeded(RuntimeError):
    """Enumeration work limit hit; .partial holds whatever was found so far."""

    def __init__(self, limit: int, partial: "RealizationSet | None" = None):
        self.limit = limit
        self.partial = partial
        super().__init__(f"enumeration budget of {limit} nodes exceeded")


class Budget:
    """Mutable countdown of search nodes."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        if limit < 1:
            raise ValueError("budget must be positive")
        self.limit = limit
        self.used = 0

    def spend(self, k: int = 1) -> None:
        self.used += k
        if self.used > self.limit:
            raise BudgetExceeded(self.limit)


class UnbalancedUsage(ValueError):
    """Usage vector whose cohesive ends cannot all pair up."""


@dataclass(frozen=True)
class TileInstancing:
    """A usage vector expanded to one tile index per prospective vertex."""

    pot: Pot
    usage: tuple[int, ...]
    instances: tuple[int, ...]


def instantiate(pot: Pot, usage: tuple[int, ...]) -> TileInstancing:
    usage = tuple(usage)
    if len(usage) != pot.tile_count:
        raise ValueError(
            f"usage length {len(usage)} != tile count {pot.tile_count}"
        )
    if any(c < 0 for c in usage):
        raise ValueError("usage counts must be nonnegative")
    if sum(usage) < 1:
        raise ValueError("usage must place at least one tile")
    for bond in range(1, pot.bond_count + 1):
        net = sum(c * t.net(bond) for c, t in zip(usage, pot.tiles))
        if net != 0:
            raise UnbalancedUsage(
                f"bond type {bond} has net end count {net}, not 0"
            )
    instances = tuple(
        j for j, c in enumerate(usage) for _ in range(c)
    )
    return TileInstancing(pot, usage, instances)


def _tables(row_sums, col_sums, budget: Budget | None):
    """All nonnegative integer matrices with the given margins, sparsely.

    Yields tuples of (row, col, count) with count > 0.  The yielded tuple is
    fresh per table; budget is charged one node per cell assignment.
    """
    nrows, ncols = len(row_sums), len(col_sums)
    col_rem = list(col_sums)
    entries: list[tuple[int, int, int]] = []

    def place_row(i: int):
        if i == nrows:
            yield tuple(entries)
            return
        if row_sums[i] == 0:
            yield from place_row(i + 1)
            return
        yield from fill(i, 0, row_sums[i])

    def fill(i: int, j: int, need: int):
        if budget is not None:
            budget.spend()
        if j == ncols - 1:
            if need <= col_rem[j]:
                col_rem[j] -= need
                if need:
                    entries.append((i, j, need))
                yield from place_row(i + 1)
                if need:
                    entries.pop()
                col_rem[j] += need
            return
        rest = sum(col_rem[j + 1 :])
        for c in range(max(0, need - rest), min(need, col_rem[j]) + 1):
            col_rem[j] -= c
            if c:
                entries.append((i, j, c))
            yield from fill(i, j + 1, need - c)
            if c:
                entries.pop()
            col_rem[j] += c

    yield from place_row(0)


def iter_complexes(pot: Pot, usage, budget: Budget | None = None):
    """Complete complexes of the usage vector, one per isomorphism class.

    Matchings of complementary ends are enumerated bond by bond as
    contingency tables over tile instances, combined, and deduplicated up to
    isomorphism.  Yields representatives in discovery order.
    """
    inst = instantiate(pot, usage)
    n = len(inst.instances)
    per_bond: list[list[tuple[tuple[int, int], ...]]] = []
    for bond in range(1, pot.bond_count + 1):
        tails = [v for v in range(n) if pot.tiles[inst.instances[v]].unhatted_count(bond)]
        heads = [v for v in range(n) if pot.tiles[inst.instances[v]].hatted_count(bond)]
        row_sums = [pot.tiles[inst.instances[v]].unhatted_count(bond) for v in tails]
        col_sums = [pot.tiles[inst.instances[v]].hatted_count(bond) for v in heads]
        if not row_sums:
            continue
        matchings = []
        for entries in _tables(row_sums, col_sums, budget):
            edges = []
            for i, j, c in entries:
                edges.extend([(tails[i], heads[j])] * c)
            matchings.append(tuple(edges))
        per_bond.append(matchings)
    buckets: dict[tuple, list[Multigraph]] = {}
    for combo in itertools.product(*per_bond):
        if budget is not None:
            budget.spend()
        g = Multigraph(n, [e for part in combo for e in part])
        bucket = buckets.setdefault(iso_invariant(g), [])
        if any(isomorphic(g, h) for h in bucket):
            continue
        bucket.append(g)
        yield g


@dataclass(frozen=True)
class RealizationSet:
    """Isomorphism classes of complete complexes at one order."""

    order: int
    graphs: tuple[Multigraph, ...]
    complete: bool

    @property
    def class_count(self) -> int:
        return len(self.graphs)


def enumerate_complexes(
    pot: Pot, usage, budget_limit: int = DEFAULT_BUDGET
) -> RealizationSet:
    """Collect all isomorphism classes for a usage vector, budget permitting.

    Raises BudgetExceeded with the partial (complete=False) set attached when
    the work limit is hit.
    """
    budget = Budget(budget_limit)
    n = sum(usage)
    found: list[Multigraph] = []
    try:
        for g in iter_complexes(pot, usage, budget):
            found.append(g)
    except BudgetExceeded:
        partial = RealizationSet(n, tuple(sorted(found, key=canonical_key)), False)
        raise BudgetExceeded(budget_limit, partial) from None
    return RealizationSet(n, tuple(sorted(found, key=canonical_key)), True)


def enumerate_at_order(
    pot: Pot, n: int, budget_limit: int = DEFAULT_BUDGET
) -> RealizationSet:
    """Union of complete-complex classes over every usage vector at order n."""
    budget = Budget(budget_limit)
    buckets: dict[tuple, list[Multigraph]] = {}
    found: list[Multigraph] = []

    def absorb(g: Multigraph) -> None:
        bucket = buckets.setdefault(iso_invariant(g), [])
        if not any(isomorphic(g, h) for h in bucket):
            bucket.append(g)
            found.append(g)

    try:
        for usage in usage_vectors(pot, n):
            for g in iter_complexes(pot, usage, budget):
                absorb(g)
    except BudgetExceeded:
        partial = RealizationSet(n, tuple(sorted(found, key=canonical_key)), False)
        raise BudgetExceeded(budget_limit, partial) from None
    return RealizationSet(n, tuple(sorted(found, key=canonical_key)), True)


@dataclass(frozen=True)
class RealizationWitness:
    """Proof that a graph is a complete complex of a pot.

    tile_of[v] is the pot tile index at vertex v; edges[k] = (bond, tail,
    head) labels the k-th edge of the graph's normalized edge list, directed
    from the unhatted end to the hatted end.
    """

    tile_of: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]


def witness_is_valid(pot: Pot, graph: Multigraph, w: RealizationWitness) -> bool:
    """Exact check: every cohesive end consumed exactly once, all labels legal."""
    if len(w.tile_of) != graph.order or len(w.edges) != graph.size:
        return False
    if any(not 0 <= j < pot.tile_count for j in w.tile_of):
        return False
    have = [Counter() for _ in range(graph.order)]
    for (u, v), (bond, tail, head) in zip(graph.edges, w.edges):
        if {tail, head} != {u, v} or not 1 <= bond <= pot.bond_count:
            return False
        have[tail][(bond, False)] += 1
        have[head][(bond, True)] += 1
    return all(
        have[v] == tile_multiset_counter(pot.tiles[w.tile_of[v]])
        for v in range(graph.order)
    )


def realizes(pot: Pot, graph: Multigraph) -> RealizationWitness | None:
    """Find a realization witness, or None when the graph is not buildable.

    The witness returned is the lexicographically least (tile_of, edges)
    pair: vertices take the lowest workable tile indices in vertex order,
    then each edge in normalized order takes the lowest bond, with the
    low-to-high orientation tried first.
    """
    n, m = graph.order, pot.bond_count
    degs = graph.degree_sequence()
    cands = [
        [j for j, t in enumerate(pot.tiles) if t.arms == degs[v]] for v in range(n)
    ]
    if any(not c for c in cands):
        return None
    nets = [[t.net(b) for b in range(1, m + 1)] for t in pot.tiles]
    # per-bond net range achievable by vertices v.. under any candidate choice
    suf_lo = [[0] * m for _ in range(n + 1)]
    suf_hi = [[0] * m for _ in range(n + 1)]
    for v in range(n - 1, -1, -1):
        for b in range(m):
            vals = [nets[j][b] for j in cands[v]]
            suf_lo[v][b] = suf_lo[v + 1][b] + min(vals)
            suf_hi[v][b] = suf_hi[v + 1][b] + max(vals)
    tile_of = [0] * n

    def label_edges(rem: list[Counter]) -> list[tuple[int, int, int]] | None:
        assigned: list[tuple[int, int, int]] = []

        def fill(k: int) -> bool:
            if k == graph.size:
                return True
            u, v = graph.edges[k]
            for bond in range(1, m + 1):
                ends = ((u, v), (v, u)) if u != v else ((u, u),)
                for tail, head in ends:
                    if rem[tail][(bond, False)] and rem[head][(bond, True)]:
                        rem[tail][(bond, False)] -= 1
                        rem[head][(bond, True)] -= 1
                        assigned.append((bond, tail, head))
                        if fill(k + 1):
                            return True
                        assigned.pop()
                        rem[tail][(bond, False)] += 1
                        rem[head][(bond, True)] += 1
            return False

        return assigned if fill(0) else None

    def assign(v: int, net: list[int]) -> RealizationWitness | None:
        if v == n:
            rem = [tile_multiset_counter(pot.tiles[tile_of[w]]) for w in range(n)]
            labels = label_edges(rem)
            if labels is None:
                return None
            return RealizationWitness(tuple(tile_of), tuple(labels))
        for j in cands[v]:
            new = [net[b] + nets[j][b] for b in range(m)]
            if all(
                suf_lo[v + 1][b] <= -new[b] <= suf_hi[v + 1][b] for b in range(m)
            ):
                tile_of[v] = j
                found = assign(v + 1, new)
                if found is not None:
                    return found
        return None

    return assign(0, [0] * m)


def _greedy_complex(pot: Pot, usage) -> Multigraph:
    """One complete complex of a balanced usage, by pairing ends in order."""
    inst = instantiate(pot, usage)
    n = len(inst.instances)
    edges: list[tuple[int, int]] = []
    for bond in range(1, pot.bond_count + 1):
        tails = [
            v
            for v in range(n)
            for _ in range(pot.tiles[inst.instances[v]].unhatted_count(bond))
        ]
        heads = [
            v
            for v in range(n)
            for _ in range(pot.tiles[inst.instances[v]].hatted_count(bond))
        ]
        edges.extend(zip(tails, heads))
    return Multigraph(n, edges)


@dataclass(frozen=True)
class ScenarioReport:
    """Verdict of one scenario check against one target graph."""

    scenario: int
    verdict: str  # "pass" | "fail" | "indeterminate"
    witness: RealizationWitness | None = None
    counterexample: Multigraph | None = None
    detail: str = ""


def verify_scenario(
    pot: Pot,
    target: Multigraph,
    scenario: int,
    budget_limit: int = DEFAULT_BUDGET,
) -> ScenarioReport:
    """Check the pot against the target at the given strictness.

    Scenario 1: the target is a complete complex of the pot.
    Scenario 2: also no complete complex has smaller order.
    Scenario 3: also every complete complex at the target's order is
    isomorphic to the target.
    """
    if scenario not in (1, 2, 3):
        raise ValueError("scenario must be 1, 2, or 3")
    n = target.order
    witness = realizes(pot, target)
    if witness is None:
        return ScenarioReport(
            scenario, "fail", detail="target is not a complete complex of the pot"
        )
    if scenario == 1:
        return ScenarioReport(
            scenario, "pass", witness=witness, detail="target realized"
        )
    below = first_realizable_order(pot, n)
    if below is not None:
        usage = first_usage_vector(pot, below)
        return ScenarioReport(
            scenario,
            "fail",
            counterexample=_greedy_complex(pot, usage),
            detail=f"a complete complex already exists at order {below} < {n}",
        )
    if scenario == 2:
        return ScenarioReport(
            scenario,
            "pass",
            witness=witness,
            detail=f"target realized and no complete complex has order below {n}",
        )
    budget = Budget(budget_limit)
    try:
        for usage in usage_vectors(pot, n):
            for g in iter_complexes(pot, usage, budget):
                if not isomorphic(g, target):
                    return ScenarioReport(
                        scenario,
                        "fail",
                        counterexample=g,
                        detail=f"usage {usage} assembles a non-target graph",
                    )
    except BudgetExceeded:
        return ScenarioReport(
            scenario,
            "indeterminate",
            witness=witness,
            detail=f"enumeration budget of {budget_limit} exhausted",
        )
    return ScenarioReport(
        scenario,
        "pass",
        witness=witness,
        detail=f"all complete complexes at order {n} are isomorphic to the target",
    )
