"""Core types for 2-colored complete graphs and red-blue clique partitions.

Every unordered vertex pair of a complete graph carries red, blue, or both
colors.  An edge carrying exactly one color is called pure.  The goal
throughout the package is to split the vertex set into a red clique (every
internal edge carries red) and a blue clique (every internal edge carries
blue), or to exhibit a small witness that no such split is forced to exist.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping

import numpy as np

__all__ = [
    "EdgeColor",
    "TwoColoredClique",
    "CliquePartition",
    "build_clique",
    "encode_2cg",
    "decode_2cg",
    "pair_index",
    "validate_partition",
    "mask_of",
    "bits_of",
]


class EdgeColor(enum.IntEnum):
    """Color set carried by one edge: red only, blue only, or both."""

    PURE_RED = 0
    PURE_BLUE = 1
    BOTH = 2

    @property
    def has_red(self) -> bool:
        return self is not EdgeColor.PURE_BLUE

    @property
    def has_blue(self) -> bool:
        return self is not EdgeColor.PURE_RED

    @property
    def char(self) -> str:
        return "RBX"[self]

    @classmethod
    def from_char(cls, ch: str) -> "EdgeColor":
        try:
            return cls("RBX".index(ch))
        except ValueError:
            raise ValueError(f"illegal edge color character {ch!r}") from None


def pair_index(n: int, u: int, v: int) -> int:
    """Flat index of pair (u, v), u < v, in row-major upper-triangular order."""
    if not 0 <= u < v < n:
        raise ValueError(f"vertex pair ({u}, {v}) out of range for n={n}")
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class TwoColoredClique:
    """Immutable edge coloring of the complete graph on vertices 0..n-1.

    Colors are stored as one byte per pair (0 red, 1 blue, 2 both) in
    row-major upper-triangular order.  Derived adjacency bitmasks are cached
    on first use; bit v of red_masks[u] is set iff edge (u, v) carries red.
    """

    n: int
    codes: bytes = field(repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        want = self.n * (self.n - 1) // 2
        if len(self.codes) != want:
            raise ValueError(
                f"expected {want} edge codes for n={self.n}, got {len(self.codes)}"
            )
        if any(c > 2 for c in self.codes):
            raise ValueError("edge codes must be 0 (red), 1 (blue), or 2 (both)")

    def color(self, u: int, v: int) -> EdgeColor:
        if u > v:
            u, v = v, u
        return EdgeColor(self.codes[pair_index(self.n, u, v)])

    def code_at(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self.codes[pair_index(self.n, u, v)]

    def has_red(self, u: int, v: int) -> bool:
        return self.code_at(u, v) != 1

    def has_blue(self, u: int, v: int) -> bool:
        return self.code_at(u, v) != 0

    @cached_property
    def _adjacency(self) -> tuple[tuple[int, ...], ...]:
        n = self.n
        if n >= 128:
            return self._adjacency_bulk()
        red = [0] * n
        blue = [0] * n
        k = 0
        for u in range(n):
            for v in range(u + 1, n):
                c = self.codes[k]
                k += 1
                if c != 1:
                    red[u] |= 1 << v
                    red[v] |= 1 << u
                if c != 0:
                    blue[u] |= 1 << v
                    blue[v] |= 1 << u
        pure_red = tuple(r & ~b for r, b in zip(red, blue))
        pure_blue = tuple(b & ~r for r, b in zip(red, blue))
        return tuple(red), tuple(blue), pure_red, pure_blue

    def _adjacency_bulk(self) -> tuple[tuple[int, ...], ...]:
        # Vectorized variant of _adjacency; identical output, used for large n.
        # Rows are filled one at a time: row u of the code matrix is a
        # contiguous slice of self.codes, so no index arrays are needed.
        n = self.n
        m = np.full((n, n), 3, dtype=np.uint8)
        arr = np.frombuffer(self.codes, dtype=np.uint8)
        k = 0
        for u in range(n):
            row = arr[k : k + n - 1 - u]
            m[u, u + 1 :] = row
            m[u + 1 :, u] = row
            k += n - 1 - u

        def pack(rows: np.ndarray) -> tuple[int, ...]:
            packed = np.packbits(rows, axis=1, bitorder="little")
            return tuple(int.from_bytes(row.tobytes(), "little") for row in packed)

        red = pack((m != 1) & (m != 3))
        blue = pack((m != 0) & (m != 3))
        pure_red = pack(m == 0)
        pure_blue = pack(m == 1)
        return red, blue, pure_red, pure_blue

    @property
    def red_masks(self) -> tuple[int, ...]:
        return self._adjacency[0]

    @property
    def blue_masks(self) -> tuple[int, ...]:
        return self._adjacency[1]

    @property
    def pure_red_masks(self) -> tuple[int, ...]:
        return self._adjacency[2]

    @property
    def pure_blue_masks(self) -> tuple[int, ...]:
        return self._adjacency[3]


def build_clique(n, assignments=()) -> TwoColoredClique:
    """Build a coloring from a pair-to-color map; unassigned pairs get Both.

    assignments may be a mapping {(u, v): EdgeColor}, an iterable of
    ((u, v), EdgeColor) items, or an iterable of (u, v, EdgeColor)
    triples; pair order does not matter.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    codes = bytearray([EdgeColor.BOTH]) * (n * (n - 1) // 2)
    items = assignments.items() if isinstance(assignments, Mapping) else assignments
    seen = set()
    for item in items:
        if len(item) == 3:
            u, v, color = item
        else:
            (u, v), color = item
        if u > v:
            u, v = v, u
        if not 0 <= u < v < n:
            raise ValueError(f"vertex pair ({u}, {v}) out of range for n={n}")
        if (u, v) in seen:
            raise ValueError(f"duplicate assignment for pair ({u}, {v})")
        seen.add((u, v))
        codes[pair_index(n, u, v)] = EdgeColor(color)
    return TwoColoredClique(n, bytes(codes))


def encode_2cg(g: TwoColoredClique) -> str:
    """Render a coloring in the .2cg text format (canonical, deterministic)."""
    lines = [f"2cg {g.n}"]
    k = 0
    for i in range(g.n - 1):
        row_len = g.n - 1 - i
        lines.append("".join("RBX"[c] for c in g.codes[k : k + row_len]))
        k += row_len
    return "\n".join(lines) + "\n"


def decode_2cg(data) -> TwoColoredClique:
    """Parse the .2cg format.

    Line 1 is "2cg <n>".  Then one line per row i = 0..n-2 holding exactly
    n-1-i characters from {R, B, X}; character j of row i is the color of
    edge (i, i+1+j).  Lines starting with '#' and blank lines are skipped.
    """
    if isinstance(data, bytes):
        data = data.decode("ascii", errors="replace")
    lines = [
        ln for ln in (raw.rstrip() for raw in data.split("\n"))
        if ln and not ln.startswith("#")
    ]
    if not lines:
        raise ValueError("empty .2cg input")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "2cg":
        raise ValueError(f"malformed .2cg header: {lines[0]!r}")
    try:
        n = int(header[1])
    except ValueError:
        raise ValueError(f"malformed .2cg header: {lines[0]!r}") from None
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    rows = lines[1:]
    want_rows = max(0, n - 1)
    if len(rows) != want_rows:
        raise ValueError(f"expected {want_rows} rows for n={n}, got {len(rows)}")
    codes = bytearray()
    for i, row in enumerate(rows):
        if len(row) != n - 1 - i:
            raise ValueError(
                f"row {i} must have {n - 1 - i} characters, got {len(row)}"
            )
        for ch in row:
            if ch not in "RBX":
                raise ValueError(f"illegal edge color character {ch!r} in row {i}")
            codes.append("RBX".index(ch))
    return TwoColoredClique(n, bytes(codes))


@dataclass(frozen=True)
class CliquePartition:
    """A split of the vertex set into a red clique and a blue clique."""

    red: frozenset[int]
    blue: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "red", frozenset(self.red))
        object.__setattr__(self, "blue", frozenset(self.blue))


def validate_partition(g: TwoColoredClique, part: CliquePartition):
    """Return None if part is a valid red-blue clique partition of g.

    Otherwise return a string naming the violated requirement, including
    the offending vertex or edge.  Every other module trusts this check.
    """
    n = g.n
    full = (1 << n) - 1
    for v in part.red | part.blue:
        if not 0 <= v < n:
            return f"vertex {v} out of range for n={n}"
    red_mask = mask_of(part.red)
    blue_mask = mask_of(part.blue)
    overlap = red_mask & blue_mask
    if overlap:
        v = (overlap & -overlap).bit_length() - 1
        return f"vertex {v} assigned to both sides"
    missing = full & ~(red_mask | blue_mask)
    if missing:
        v = (missing & -missing).bit_length() - 1
        return f"vertex {v} assigned to neither side"
    red_adj = g.red_masks
    blue_adj = g.blue_masks
    for u in bits_of(red_mask):
        bad = red_mask & ~red_adj[u] & ~(1 << u)
        if bad:
            v = (bad & -bad).bit_length() - 1
            return f"edge ({min(u, v)}, {max(u, v)}) in the red side carries no red"
    for u in bits_of(blue_mask):
        bad = blue_mask & ~blue_adj[u] & ~(1 << u)
        if bad:
            v = (bad & -bad).bit_length() - 1
            return f"edge ({min(u, v)}, {max(u, v)}) in the blue side carries no blue"
    return None
