"""Red-blue colorings of vertex triples.

For edge colorings, a partition into a red clique and a blue clique
exists whenever no small obstruction does.  Coloring triples instead of
pairs breaks that story already at six vertices: the coloring built by
`example1` has no monochromatic C4 analogue anyone could blame, yet no
partition of its vertices into a red triple-clique and a blue one.  The
functions here let a test suite verify those claims mechanically.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

__all__ = [
    "TripleColoring",
    "example1",
    "find_clique_cover",
    "find_same_color_triple_cover",
    "max_mono_clique",
    "triple_coloring_to_json",
    "triple_coloring_from_json",
]

_BRUTE_LIMIT = 20


@dataclass(frozen=True)
class TripleColoring:
    """Every 3-subset of 0..n-1 is red or blue; red is stored, blue implied."""

    n: int
    red: frozenset[tuple[int, int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for t in self.red:
            t = tuple(sorted(t))
            if len(set(t)) != 3:
                raise ValueError(f"triple {t} repeats a vertex")
            if t[0] < 0 or t[2] >= self.n:
                raise ValueError(f"triple {t} out of range for n={self.n}")
            norm.add(t)
        object.__setattr__(self, "red", frozenset(norm))

    def is_red(self, t) -> bool:
        return tuple(sorted(t)) in self.red

    def color_of(self, t) -> str:
        return "red" if self.is_red(t) else "blue"

    @property
    def blue(self) -> frozenset[tuple[int, int, int]]:
        return frozenset(
            t for t in combinations(range(self.n), 3) if t not in self.red
        )


def example1() -> TripleColoring:
    """Six vertices; reds are the cyclic consecutive triples of 1..5 plus
    the complement of each such triple."""
    def wrap(x: int) -> int:
        return (x - 1) % 5 + 1

    base = {
        tuple(sorted((i, wrap(i + 1), wrap(i + 2)))) for i in range(1, 6)
    }
    everything = set(range(6))
    red = set(base)
    for t in base:
        red.add(tuple(sorted(everything - set(t))))
    return TripleColoring(6, frozenset(red))


def _all_one_color(tc: TripleColoring, vertices, want_red: bool) -> bool:
    for t in combinations(sorted(vertices), 3):
        if tc.is_red(t) != want_red:
            return False
    return True


def find_clique_cover(tc: TripleColoring):
    """First (red side, blue side) bipartition where every triple inside
    the red side is red and every triple inside the blue side is blue,
    or None.  Sides of size two or less qualify vacuously.  Scans red
    sides as ascending bitmasks, so the result is deterministic."""
    if tc.n > _BRUTE_LIMIT:
        raise ValueError(f"refusing brute force beyond n={_BRUTE_LIMIT}")
    for mask in range(1 << tc.n):
        red_side = frozenset(v for v in range(tc.n) if (mask >> v) & 1)
        blue_side = frozenset(range(tc.n)) - red_side
        if _all_one_color(tc, red_side, True) and _all_one_color(tc, blue_side, False):
            return red_side, blue_side
    return None


def find_same_color_triple_cover(tc: TripleColoring):
    """Split six vertices into two triples of the same color.

    Scans candidates in lexicographic order over the triple avoiding
    vertex 0, so the partner triple always contains 0.  Returns
    (t1, t2, color) with t1 the 0-free triple, or None.
    """
    if tc.n != 6:
        raise ValueError("same-color triple covers are a six-vertex question")
    for t1 in combinations(range(1, 6), 3):
        t2 = tuple(sorted(set(range(6)) - set(t1)))
        c1 = tc.color_of(t1)
        if c1 == tc.color_of(t2):
            return t1, t2, c1
    return None


def max_mono_clique(tc: TripleColoring, color: str):
    """Largest vertex set whose triples are all the given color, with the
    lexicographically least witness of that size.  Size 2 is vacuous."""
    if color not in ("red", "blue"):
        raise ValueError(f"unknown color {color!r}")
    if tc.n > _BRUTE_LIMIT:
        raise ValueError(f"refusing brute force beyond n={_BRUTE_LIMIT}")
    want_red = color == "red"
    for size in range(tc.n, 2, -1):
        for vs in combinations(range(tc.n), size):
            if _all_one_color(tc, vs, want_red):
                return size, vs
    vacuous = min(tc.n, 2)
    return vacuous, tuple(range(vacuous))


def triple_coloring_to_json(tc: TripleColoring) -> dict:
    return {"n": tc.n, "red": sorted(list(t) for t in tc.red)}


def triple_coloring_from_json(doc: dict) -> TripleColoring:
    try:
        return TripleColoring(doc["n"], frozenset(tuple(t) for t in doc["red"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed triple coloring document: {exc}") from None
