"""Cohesive ends, tiles, and pots, plus the text format and pot generators."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field



class PotFormatError(ValueError):
    """Malformed pot text."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


@dataclass(frozen=True, order=True)
class CohesiveEnd:
    """One sticky end: a bond type (1-based) that is either hatted or not.

    Two ends join iff they share a bond type and exactly one is hatted; the
    resulting edge is directed from the unhatted side to the hatted side.
    """

    bond: int
    hatted: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.bond, int) or self.bond < 1:
            raise ValueError("bond type must be a positive integer")

    def __str__(self) -> str:
        return f"a{self.bond}*" if self.hatted else f"a{self.bond}"


@dataclass(frozen=True)
class Tile:
    """A multiset of cohesive ends.  Arm count is the vertex degree it builds."""

    ends: tuple[CohesiveEnd, ...]

    def __post_init__(self) -> None:
        if not self.ends:
            raise ValueError("a tile needs at least one cohesive end")
        object.__setattr__(self, "ends", tuple(sorted(self.ends)))

    @property
    def arms(self) -> int:
        return len(self.ends)

    def unhatted_count(self, bond: int) -> int:
        return sum(1 for e in self.ends if e.bond == bond and not e.hatted)

    def hatted_count(self, bond: int) -> int:
        return sum(1 for e in self.ends if e.bond == bond and e.hatted)

    def net(self, bond: int) -> int:
        """Unhatted minus hatted occurrences of the bond type on this tile."""
        return self.unhatted_count(bond) - self.hatted_count(bond)

    def __str__(self) -> str:
        return "{" + ", ".join(str(e) for e in self.ends) + "}"


def _parse_end(token: str) -> CohesiveEnd:
    body = token[:-1] if token.endswith("*") else token
    if not body.startswith("a") or not body[1:].isdigit() or int(body[1:]) < 1:
        raise ValueError(token)
    return CohesiveEnd(int(body[1:]), token.endswith("*"))


def tile(*end_strings: str) -> Tile:
    """Build a tile from end tokens like "a1", "a2*"."""
    try:
        return Tile(tuple(_parse_end(t) for t in end_strings))
    except ValueError as exc:
        raise ValueError(f"bad cohesive end token {exc}") from None


@dataclass(frozen=True)
class Pot:
    """An ordered collection of distinct tiles.

    Bond types must be contiguous 1..bond_count across the whole pot; tiles
    must be pairwise distinct as multisets.
    """

    tiles: tuple[Tile, ...]
    bond_count: int = field(init=False)

    def __post_init__(self) -> None:
        if not self.tiles:
            raise ValueError("a pot needs at least one tile")
        seen = set()
        for t in self.tiles:
            if t.ends in seen:
                raise ValueError(f"duplicate tile {t}")
            seen.add(t.ends)
        bonds = {e.bond for t in self.tiles for e in t.ends}
        if bonds != set(range(1, len(bonds) + 1)):
            raise ValueError(f"bond types must be contiguous from 1, got {sorted(bonds)}")
        object.__setattr__(self, "bond_count", len(bonds))

    @property
    def tile_count(self) -> int:
        return len(self.tiles)

    def __str__(self) -> str:
        return "; ".join(str(t) for t in self.tiles)


def parse_pot(text: str) -> Pot:
    """Read pot text: one `name: end[, end]*` line per tile.

    End tokens are `a<digits>` with a trailing `*` marking the hatted side.
    Bond numbers are normalized to first-appearance order over the file.
    Duplicate tile names or duplicate tile multisets are errors.  Blank lines
    and `#` comments are ignored.
    """
    names: dict[str, int] = {}
    raw_tiles: list[list[CohesiveEnd]] = []
    renumber: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if ":" not in line:
            raise PotFormatError("expected 'name: end, end, ...'", lineno)
        name_part, _, ends_part = line.partition(":")
        name = name_part.strip()
        if not name:
            raise PotFormatError("empty tile name", lineno)
        if name in names:
            raise PotFormatError(f"duplicate tile name {name!r}", lineno)
        names[name] = lineno
        ends: list[CohesiveEnd] = []
        offset = len(name_part) + 1
        for piece in ends_part.split(","):
            token = piece.strip()
            column = offset + piece.index(token) + 1 if token else offset + 1
            offset += len(piece) + 1
            if not token:
                raise PotFormatError("empty cohesive end", lineno, column)
            try:
                end = _parse_end(token)
            except ValueError:
                raise PotFormatError(
                    f"bad cohesive end {token!r}", lineno, column
                ) from None
            if end.bond not in renumber:
                renumber[end.bond] = len(renumber) + 1
            ends.append(CohesiveEnd(renumber[end.bond], end.hatted))
        raw_tiles.append(ends)
    if not raw_tiles:
        raise PotFormatError("no tiles found")
    tiles = []
    keys: dict[tuple, str] = {}
    by_line = list(names)
    for i, ends in enumerate(raw_tiles):
        t = Tile(tuple(ends))
        if t.ends in keys:
            raise PotFormatError(
                f"tile {by_line[i]!r} repeats the multiset of {keys[t.ends]!r}",
                names[by_line[i]],
            )
        keys[t.ends] = by_line[i]
        tiles.append(t)
    return Pot(tuple(tiles))


def render_pot(pot: Pot) -> str:
    """Write pot text; parse_pot(render_pot(p)) == p."""
    lines = [f"t{i}: " + ", ".join(str(e) for e in t.ends) for i, t in enumerate(pot.tiles, 1)]
    return "\n".join(lines) + "\n"


def wheel_pot_s12(n: int) -> Pot:
    """Two-tile, one-bond pot whose smallest complete complex is the n-wheel.

    A rim tile carrying one unhatted and two hatted copies of the single bond
    type, and a hub tile carrying n-1 unhatted copies.
    """
    if n < 4:
        raise ValueError("wheel pots need n >= 4")
    rim = Tile((CohesiveEnd(1), CohesiveEnd(1, True), CohesiveEnd(1, True)))
    hub = Tile(tuple(CohesiveEnd(1) for _ in range(n - 1)))
    return Pot((rim, hub))


def wheel_pot_s3(n: int) -> Pot:
    """Pot of floor(n/2)+2 tiles on floor(n/2)+1 bond types building only n-wheels.

    One hub tile plus a chain of rim tiles whose bond types step around the
    rim; the chain closes differently for even and odd n.
    """
    if n < 4:
        raise ValueError("wheel pots need n >= 4")
    half = n // 2
    tiles = [Tile(tuple(CohesiveEnd(1) for _ in range(n - 1)))]
    tiles.append(Tile((CohesiveEnd(1, True), CohesiveEnd(2), CohesiveEnd(2))))
    for i in range(3, half + 2):
        tiles.append(
            Tile((CohesiveEnd(1, True), CohesiveEnd(i - 1, True), CohesiveEnd(i)))
        )
    if n % 2 == 0:
        tiles.append(
            Tile(
                (
                    CohesiveEnd(1, True),
                    CohesiveEnd(half, True),
                    CohesiveEnd(half + 1, True),
                )
            )
        )
    else:
        tiles.append(
            Tile(
                (
                    CohesiveEnd(1, True),
                    CohesiveEnd(half + 1, True),
                    CohesiveEnd(half + 1, True),
                )
            )
        )
    return Pot(tuple(tiles))


def cycle_pot_s3(n: int) -> Pot:
    """Pot of ceil(n/2)+1 tiles on ceil(n/2) bond types building only n-cycles.

    Derived from the wheel construction one order up by deleting the hub tile
    and stripping the hub-facing ends off every rim tile.
    """
    if n < 3:
        raise ValueError("cycle pots need n >= 3")
    base = wheel_pot_s3(n + 1)
    tiles = []
    for t in base.tiles[1:]:
        kept = tuple(
            CohesiveEnd(e.bond - 1, e.hatted) for e in t.ends if e.bond != 1
        )
        tiles.append(Tile(kept))
    return Pot(tuple(tiles))


def tile_multiset_counter(t: Tile) -> Counter:
    """Counter view of a tile's ends, keyed (bond, hatted)."""
    return Counter((e.bond, e.hatted) for e in t.ends)
