"""Undirected multigraphs with loops: generators, isomorphism, Hamiltonicity."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache


class GraphFormatError(ValueError):
    """Malformed graph text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Multigraph:
    """Immutable undirected multigraph on vertices 0..order-1.

    Edges are unordered pairs; a repeated pair is a multiedge and (v, v) is a
    loop.  A loop adds 2 to the degree of its vertex.  Pairs are normalized
    and sorted on construction, so equal edge multisets compare equal.
    """

    order: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.order, int) or self.order < 1:
            raise ValueError("order must be a positive integer")
        norm = tuple(sorted((u, v) if u <= v else (v, u) for u, v in self.edges))
        for u, v in norm:
            if not 0 <= u <= v < self.order:
                raise ValueError(f"edge ({u}, {v}) out of range for order {self.order}")
        object.__setattr__(self, "edges", norm)

    @property
    def size(self) -> int:
        """Edge count, multiplicities and loops included."""
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for u, w in self.edges)

    def degree_sequence(self) -> tuple[int, ...]:
        degs = [0] * self.order
        for u, w in self.edges:
            degs[u] += 1
            degs[w] += 1
        return tuple(degs)

    def multiplicity(self, u: int, v: int) -> int:
        pair = (u, v) if u <= v else (v, u)
        return self.edges.count(pair)

    def loop_count(self, v: int) -> int:
        return self.edges.count((v, v))

    def neighbors(self, v: int) -> frozenset[int]:
        """Distinct neighbors of v; v itself never counts, even with a loop."""
        out = set()
        for u, w in self.edges:
            if u == v and w != v:
                out.add(w)
            elif w == v and u != v:
                out.add(u)
        return frozenset(out)


def wheel(n: int) -> Multigraph:
    """Wheel on n vertices: hub n-1 joined to every vertex of the rim cycle 0..n-2."""
    if n < 4:
        raise ValueError("wheel graphs need at least 4 vertices")
    rim = n - 1
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return Multigraph(n, edges)


def cycle(n: int) -> Multigraph:
    """Cycle on vertices 0..n-1."""
    if n < 3:
        raise ValueError("cycle graphs need at least 3 vertices")
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Multigraph:
    """Complete simple graph on n vertices."""
    if n < 1:
        raise ValueError("complete graphs need at least 1 vertex")
    return Multigraph(n, list(itertools.combinations(range(n), 2)))


@dataclass(frozen=True)
class DegreeStats:
    """Counts of distinct degrees: all (av), even (ev), and odd (ov)."""

    av: int
    ev: int
    ov: int


def degree_stats(g: Multigraph) -> DegreeStats:
    distinct = set(g.degree_sequence())
    ev = sum(1 for d in distinct if d % 2 == 0)
    return DegreeStats(len(distinct), ev, len(distinct) - ev)


@lru_cache(maxsize=None)
def _structure(g: Multigraph) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Pairwise multiplicity matrix and per-vertex loop counts."""
    n = g.order
    mult = [[0] * n for _ in range(n)]
    loops = [0] * n
    for u, v in g.edges:
        if u == v:
            loops[u] += 1
        else:
            mult[u][v] += 1
            mult[v][u] += 1
    return tuple(tuple(row) for row in mult), tuple(loops)


@lru_cache(maxsize=None)
def iso_invariant(g: Multigraph) -> tuple:
    """Cheap isomorphism-invariant fingerprint, for bucketing and fast rejection."""
    mult, loops = _structure(g)
    degs = g.degree_sequence()
    local = sorted(
        (
            degs[v],
            loops[v],
            tuple(sorted((degs[u], mult[v][u]) for u in range(g.order) if mult[v][u])),
        )
        for v in range(g.order)
    )
    return (g.order, g.size, tuple(local))


def _refine(n: int, colors: tuple[int, ...], mult) -> tuple[int, ...]:
    # iterate neighborhood signatures until the partition stops splitting
    while True:
        sigs = [
            (colors[v], tuple(sorted((colors[u], mult[v][u]) for u in range(n) if mult[v][u])))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = tuple(rank[s] for s in sigs)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _individualize(colors: tuple[int, ...], v: int) -> tuple[int, ...]:
    keyed = [(c, 1) for c in colors]
    keyed[v] = (colors[v], 0)
    rank = {s: i for i, s in enumerate(sorted(set(keyed)))}
    return tuple(rank[k] for k in keyed)


def _encode(n: int, perm: tuple[int, ...], mult, loops) -> tuple:
    lp = tuple(loops[v] for v in perm)
    tri = tuple(mult[perm[i]][perm[j]] for i in range(n) for j in range(i + 1, n))
    return (lp, tri)


@lru_cache(maxsize=None)
def _canonical(g: Multigraph) -> tuple[tuple[int, ...], tuple]:
    n = g.order
    mult, loops = _structure(g)
    degs = g.degree_sequence()
    base = {c: i for i, c in enumerate(sorted(set(zip(degs, loops))))}
    colors = tuple(base[(degs[v], loops[v])] for v in range(n))
    best: list = [None, None]

    def descend(cols: tuple[int, ...]) -> None:
        cols = _refine(n, cols, mult)
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(cols[v], []).append(v)
        ordered = [cells[c] for c in sorted(cells)]
        target = next((cell for cell in ordered if len(cell) > 1), None)
        if target is None:
            perm = tuple(cell[0] for cell in ordered)
            key = _encode(n, perm, mult, loops)
            if best[1] is None or key < best[1]:
                best[0], best[1] = perm, key
            return
        for v in target:
            descend(_individualize(cols, v))

    descend(colors)
    return best[0], (n, best[1])


def canonical_form(g: Multigraph) -> tuple[tuple[int, ...], tuple]:
    """Canonical relabeling of g.

    Returns (perm, key): perm[i] is the original vertex placed at canonical
    position i, and key is equal across two graphs iff they are isomorphic.
    Individualization-refinement over all branches; exact at the small orders
    used here.
    """
    return _canonical(g)


def canonical_key(g: Multigraph) -> tuple:
    return _canonical(g)[1]


def _joint_refine(g, h, multg, multh, loopsg, loopsh):
    n = g.order
    degg, degh = g.degree_sequence(), h.degree_sequence()
    vals = sorted(set(zip(degg, loopsg)) | set(zip(degh, loopsh)))
    base = {c: i for i, c in enumerate(vals)}
    cg = tuple(base[(degg[v], loopsg[v])] for v in range(n))
    ch = tuple(base[(degh[v], loopsh[v])] for v in range(n))
    while True:
        if Counter(cg) != Counter(ch):
            return None
        sg = [
            (cg[v], tuple(sorted((cg[u], multg[v][u]) for u in range(n) if multg[v][u])))
            for v in range(n)
        ]
        sh = [
            (ch[v], tuple(sorted((ch[u], multh[v][u]) for u in range(n) if multh[v][u])))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sg) | set(sh)))}
        ng = tuple(rank[s] for s in sg)
        nh = tuple(rank[s] for s in sh)
        if len(set(ng)) == len(set(cg)) and len(set(nh)) == len(set(ch)):
            return (ng, nh) if Counter(ng) == Counter(nh) else None
        cg, ch = ng, nh


def isomorphism(g: Multigraph, h: Multigraph) -> tuple[int, ...] | None:
    """A vertex bijection carrying the edge multiset of g onto h, or None.

    The returned tuple maps vertex v of g to position v's value in h.
    """
    n = g.order
    if n != h.order or g.size != h.size:
        return None
    if iso_invariant(g) != iso_invariant(h):
        return None
    multg, loopsg = _structure(g)
    multh, loopsh = _structure(h)
    pair = _joint_refine(g, h, multg, multh, loopsg, loopsh)
    if pair is None:
        return None
    cg, ch = pair
    bycolor: dict[int, list[int]] = {}
    for w in range(n):
        bycolor.setdefault(ch[w], []).append(w)
    class_size = Counter(cg)
    verts = sorted(range(n), key=lambda v: (class_size[cg[v]], cg[v], v))
    mapping = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = verts[k]
        for w in bycolor[cg[v]]:
            if used[w] or loopsg[v] != loopsh[w]:
                continue
            if all(multg[v][x] == multh[w][mapping[x]] for x in verts[:k]):
                mapping[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return tuple(mapping) if extend(0) else None


def isomorphic(g: Multigraph, h: Multigraph) -> bool:
    return isomorphism(g, h) is not None


def is_hamiltonian(g: Multigraph) -> bool:
    """True when some cycle visits every vertex exactly once.

    Edge multiplicities beyond the first are irrelevant at order >= 3 and
    loops never help.  A single vertex counts as trivially Hamiltonian; order
    2 needs a double edge to close the 2-cycle.
    """
    n = g.order
    if n == 1:
        return True
    if n == 2:
        return g.multiplicity(0, 1) >= 2
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    if any(len(a) < 2 for a in adj):
        return False
    seen = {0}
    stack = [0]
    while stack:
        for u in adj[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) < n:
        return False
    start_adj = set(adj[0])
    visited = [False] * n
    visited[0] = True

    def extend(v: int, left: int) -> bool:
        if left == 0:
            return v in start_adj
        for u in adj[v]:
            if not visited[u]:
                visited[u] = True
                if extend(u, left - 1):
                    return True
                visited[u] = False
        return False

    return extend(0, n - 1)


@dataclass(frozen=True)
class WheelStructure:
    """A wheel presentation of a graph: its hub and the rim/spoke edge pairs."""

    hub: int
    cycle_pairs: frozenset[tuple[int, int]]
    spoke_pairs: frozenset[tuple[int, int]]


def wheel_structure(g: Multigraph) -> WheelStructure | None:
    """Identify g as a wheel, returning one hub/rim presentation, else None."""
    n = g.order
    if n < 4:
        return None
    phi = isomorphism(wheel(n), g)
    if phi is None:
        return None
    rim = n - 1
    cyc = frozenset(
        tuple(sorted((phi[i], phi[(i + 1) % rim]))) for i in range(rim)
    )
    spokes = frozenset(tuple(sorted((phi[i], phi[rim]))) for i in range(rim))
    return WheelStructure(phi[rim], cyc, spokes)


def parse_graph(text: str) -> Multigraph:
    """Read graph text: an `n=<order>` header then one `u v` pair per line.

    Repeating a pair raises its multiplicity and `v v` is a loop.  Blank
    lines and `#` comments are ignored.
    """
    order: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if order is None:
            if not line.startswith("n="):
                raise GraphFormatError("expected 'n=<order>' header", lineno)
            try:
                order = int(line[2:])
            except ValueError:
                raise GraphFormatError(f"bad order {line[2:]!r}", lineno) from None
            if order < 1:
                raise GraphFormatError("order must be positive", lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError("expected 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"bad edge {line!r}", lineno) from None
        if not (0 <= u < order and 0 <= v < order):
            raise GraphFormatError(f"edge ({u}, {v}) out of range", lineno)
        edges.append((u, v))
    if order is None:
        raise GraphFormatError("missing 'n=<order>' header")
    return Multigraph(order, edges)


def render_graph(g: Multigraph) -> str:
    """Write graph text; parse_graph(render_graph(g)) == g."""
    lines = [f"n={g.order}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
