"""Shared test fixtures: brute-force oracles and hypothesis strategies.

The oracles here deliberately avoid the package's own algorithms: graph
isomorphism and Hamiltonicity by raw permutation scan, realizable orders by
composition enumeration.  Slow on purpose; they are the ground truth the
fast implementations are checked against.
"""

from __future__ import annotations

import itertools
from collections import Counter

from hypothesis import strategies as st

from tilepot import CohesiveEnd, Multigraph, Pot, Tile


def fans(sizes: tuple[int, ...]) -> Multigraph:
    """Hub joined to disjoint rim cycles; a 2-cycle becomes a double edge.

    fans((n-1,)) is the n-wheel; splitting the rim into several cycles keeps
    the degree sequence but loses Hamiltonicity.
    """
    n = sum(sizes) + 1
    hub = n - 1
    edges: list[tuple[int, int]] = []
    base = 0
    for s in sizes:
        if s < 2:
            raise ValueError("fan cycles need at least 2 rim vertices")
        if s == 2:
            edges += [(base, base + 1), (base, base + 1)]
        else:
            edges += [(base + i, base + (i + 1) % s) for i in range(s)]
        base += s
    edges += [(v, hub) for v in range(n - 1)]
    return Multigraph(n, edges)


def iso_brute(g: Multigraph, h: Multigraph) -> bool:
    """Isomorphism by scanning every vertex permutation."""
    if g.order != h.order or g.size != h.size:
        return False
    target = Counter(h.edges)
    for perm in itertools.permutations(range(g.order)):
        if (
            Counter(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges)
            == target
        ):
            return True
    return False


def ham_brute(g: Multigraph) -> bool:
    """Hamiltonicity by scanning every vertex ordering."""
    n = g.order
    if n == 1:
        return True
    if n == 2:
        return g.multiplicity(0, 1) >= 2
    mult = Counter(g.edges)
    for perm in itertools.permutations(range(1, n)):
        seq = (0,) + perm
        if all(
            mult[tuple(sorted((seq[i], seq[(i + 1) % n])))] >= 1 for i in range(n)
        ):
            return True
    return False


def balanced_compositions(pot: Pot, n: int) -> list[tuple[int, ...]]:
    """All usage vectors at order n, by filtering raw compositions."""
    p = pot.tile_count
    out = []
    for splits in itertools.combinations(range(n + p - 1), p - 1):
        bounds = (-1,) + splits + (n + p - 1,)
        usage = tuple(bounds[i + 1] - bounds[i] - 1 for i in range(p))
        ok = all(
            sum(c * t.net(b) for c, t in zip(usage, pot.tiles)) == 0
            for b in range(1, pot.bond_count + 1)
        )
        if ok:
            out.append(usage)
    return sorted(out)


def brute_min_order(pot: Pot, cap: int) -> int | None:
    """Smallest order with a balanced usage vector, scanning 1..cap."""
    for n in range(1, cap + 1):
        if balanced_compositions(pot, n):
            return n
    return None


@st.composite
def multigraphs(draw, max_order: int = 6, max_edges: int = 8):
    order = draw(st.integers(1, max_order))
    k = draw(st.integers(0, max_edges))
    edges = draw(
        st.lists(
            st.tuples(st.integers(0, order - 1), st.integers(0, order - 1)),
            min_size=k,
            max_size=k,
        )
    )
    return Multigraph(order, edges)


@st.composite
def tiles(draw, max_bonds: int = 2, max_arms: int = 3):
    k = draw(st.integers(1, max_arms))
    ends = draw(
        st.lists(
            st.tuples(st.integers(1, max_bonds), st.booleans()),
            min_size=k,
            max_size=k,
        )
    )
    return Tile(tuple(CohesiveEnd(b, h) for b, h in ends))


@st.composite
def pots(draw, max_tiles: int = 3, max_bonds: int = 2, max_arms: int = 3):
    """Small pots with contiguous bond indices and distinct tiles."""
    count = draw(st.integers(1, max_tiles))
    chosen: list[Tile] = []
    seen = set()
    for _ in range(count):
        t = draw(tiles(max_bonds=max_bonds, max_arms=max_arms))
        if t.ends not in seen:
            seen.add(t.ends)
            chosen.append(t)
    # number bonds by first appearance, the text format's normal form
    remap: dict[int, int] = {}
    for t in chosen:
        for e in t.ends:
            if e.bond not in remap:
                remap[e.bond] = len(remap) + 1
    fixed = tuple(
        Tile(tuple(CohesiveEnd(remap[e.bond], e.hatted) for e in t.ends))
        for t in chosen
    )
    return Pot(fixed)


def permuted(g: Multigraph, perm: tuple[int, ...]) -> Multigraph:
    """Relabel vertices of g by perm."""
    return Multigraph(g.order, [(perm[u], perm[v]) for u, v in g.edges])


def hub_fixed_class_count(n: int) -> int:
    """Complete-complex classes of the two-tile wheel pot at usage (n-1, 1),
    counted without the package's assembly or isomorphism machinery.

    For n >= 5 rim vertices have degree 3 and the hub n-1, so every
    isomorphism fixes the hub and min-over-rim-relabelings of the edge list
    is an exact canonical form.  Each rim tile's single unhatted end picks a
    rim vertex with spare hatted capacity (two slots per rim tile); the
    hub's unhatted ends fill whatever remains.
    """
    if n < 5:
        raise ValueError("hub is only degree-distinguished for n >= 5")
    m = n - 1
    perms = [p + (m,) for p in itertools.permutations(range(m))]
    seen = set()
    for f in itertools.product(range(m), repeat=m):
        load = Counter(f)
        if any(v > 2 for v in load.values()):
            continue
        edges = [tuple(sorted((v, f[v]))) for v in range(m)]
        for w in range(m):
            edges.extend([(w, m)] * (2 - load.get(w, 0)))
        seen.add(
            min(
                tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges))
                for p in perms
            )
        )
    return len(seen)


def small_pot_representatives(
    max_tiles: int = 3, max_arms: int = 3, max_bonds: int = 2
) -> list[Pot]:
    """One pot per equivalence class over every pot within the size caps.

    Renaming bond letters, flipping every hat of one letter, and reordering
    tiles never change which multigraphs assemble, so one representative per
    orbit covers the whole family.
    """
    pool = [
        CohesiveEnd(b, h) for b in range(1, max_bonds + 1) for h in (False, True)
    ]
    tile_pool = [
        Tile(combo)
        for k in range(1, max_arms + 1)
        for combo in itertools.combinations_with_replacement(pool, k)
    ]
    reps: dict[tuple, Pot] = {}
    for size in range(1, max_tiles + 1):
        for combo in itertools.combinations(tile_pool, size):
            bonds = sorted({e.bond for t in combo for e in t.ends})
            if bonds != list(range(1, len(bonds) + 1)):
                continue
            best = None
            for p in itertools.permutations(bonds):
                perm = dict(zip(bonds, p))
                for r in range(len(bonds) + 1):
                    for flips in itertools.combinations(bonds, r):
                        cand = tuple(
                            sorted(
                                tuple(
                                    sorted(
                                        CohesiveEnd(
                                            perm[e.bond],
                                            e.hatted ^ (e.bond in flips),
                                        )
                                        for e in t.ends
                                    )
                                )
                                for t in combo
                            )
                        )
                        if best is None or cand < best:
                            best = cand
            if best not in reps:
                reps[best] = Pot(tuple(combo))
    return list(reps.values())
