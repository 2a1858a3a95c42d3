"""(1-1)-transversals for 2-intervals and 2-subtrees.

A 2-interval has one fragment left of zero and one right of zero; a
2-subtree has one fragment in each of two host trees.  For a family
whose members pairwise intersect, coloring each pair by where it meets
(red for the left/first host, blue for the right/second, Both for both)
yields a 2-colored clique.  A red-blue clique partition then hands us
two points that together pierce every member: pairwise intersecting
intervals on a line share a point, and so do pairwise intersecting
subtrees of a tree.  An obstruction certificate can never come back for
such colorings, so hitting one means the inputs are corrupt; we raise
InvariantViolation carrying the instance for offline inspection.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .core import TwoColoredClique, bits_of, encode_2cg, mask_of
from .partition import partition

__all__ = [
    "InvariantViolation",
    "TwoInterval",
    "Transversal",
    "HostTree",
    "SubtreePair",
    "coloring_from_2intervals",
    "pierce",
    "verify_transversal",
    "coloring_from_2subtrees",
    "pierce_subtrees",
    "verify_subtree_transversal",
    "parse_2iv",
    "parse_subtree_json",
    "lexbfs_order",
    "is_chordal",
    "color_graphs_chordal",
]

_RANKED_CUTOVER = 64


class InvariantViolation(RuntimeError):
    """The solver contradicted a mathematical guarantee.

    Raised when a coloring built from geometric inputs, which provably
    admits a partition, comes back with an obstruction instead.  The
    offending instance rides along for a bug report.
    """

    def __init__(self, message: str, instance_text: str | None = None):
        super().__init__(message)
        self.instance_text = instance_text


@dataclass(frozen=True)
class TwoInterval:
    """Closed interval pair [la, lb] before zero and [ra, rb] after it."""

    la: Fraction
    lb: Fraction
    ra: Fraction
    rb: Fraction

    def __post_init__(self):
        for name in ("la", "lb", "ra", "rb"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not (self.la <= self.lb < 0 < self.ra <= self.rb):
            raise ValueError(
                f"need la <= lb < 0 < ra <= rb, got "
                f"({self.la}, {self.lb}, {self.ra}, {self.rb})"
            )


@dataclass(frozen=True)
class Transversal:
    """Two piercing positions plus the partition sides that chose them.

    For intervals the points are Fractions on the line; for subtrees
    they are host vertex ids.  A side that came out empty leaves its
    point as None.
    """

    left_point: object | None
    right_point: object | None
    red: tuple[int, ...]
    blue: tuple[int, ...]


def _codes_small(family) -> bytes:
    codes = bytearray()
    for i in range(len(family)):
        fi = family[i]
        for j in range(i + 1, len(family)):
            fj = family[j]
            red = max(fi.la, fj.la) <= min(fi.lb, fj.lb)
            blue = max(fi.ra, fj.ra) <= min(fi.rb, fj.rb)
            if red and blue:
                codes.append(2)
            elif red:
                codes.append(0)
            elif blue:
                codes.append(1)
            else:
                raise ValueError(
                    f"not pairwise intersecting: members {i} and {j} are disjoint"
                )
    return bytes(codes)


def _codes_ranked(family) -> bytes:
    # Ranks preserve <=, so exact Fraction comparisons survive the trip
    # through int64 and the pairwise work becomes outer comparisons.
    # Row blocks keep the outer products bounded at any family size.
    n = len(family)
    points = sorted({p for f in family for p in (f.la, f.lb, f.ra, f.rb)})
    rank = {p: k for k, p in enumerate(points)}
    la = np.array([rank[f.la] for f in family], dtype=np.int64)
    lb = np.array([rank[f.lb] for f in family], dtype=np.int64)
    ra = np.array([rank[f.ra] for f in family], dtype=np.int64)
    rb = np.array([rank[f.rb] for f in family], dtype=np.int64)
    out = bytearray(n * (n - 1) // 2)
    pos = 0
    block = max(1, 2**22 // n)
    for r0 in range(0, n, block):
        r1 = min(r0 + block, n)
        red = np.maximum.outer(la[r0:r1], la) <= np.minimum.outer(lb[r0:r1], lb)
        blue = np.maximum.outer(ra[r0:r1], ra) <= np.minimum.outer(rb[r0:r1], rb)
        for i in range(r0, r1):
            red_row = red[i - r0, i + 1 :]
            blue_row = blue[i - r0, i + 1 :]
            bad = ~(red_row | blue_row)
            if bad.any():
                j = i + 1 + int(np.argmax(bad))
                raise ValueError(
                    f"not pairwise intersecting: members {i} and {j} are disjoint"
                )
            row = np.where(red_row, np.where(blue_row, 2, 0), 1).astype(np.uint8)
            out[pos : pos + row.size] = row.tobytes()
            pos += row.size
    return bytes(out)


def coloring_from_2intervals(family) -> TwoColoredClique:
    """Red where left fragments meet, blue where right fragments meet.

    Raises ValueError naming the first pair of members that are disjoint,
    since the piercing guarantee only holds for pairwise intersecting
    families.
    """
    family = list(family)
    n = len(family)
    if n >= _RANKED_CUTOVER:
        return TwoColoredClique(n, _codes_ranked(family))
    return TwoColoredClique(n, _codes_small(family))


def pierce(family) -> Transversal:
    """Pick one point left of zero and one right of zero covering everyone."""
    family = list(family)
    if not family:
        return Transversal(None, None, (), ())
    g = coloring_from_2intervals(family)
    outcome = partition(g)
    if not outcome.is_partition:
        raise InvariantViolation(
            "an intersecting 2-interval family produced an obstruction",
            encode_2cg(g),
        )
    red = tuple(sorted(outcome.partition.red))
    blue = tuple(sorted(outcome.partition.blue))
    # Pairwise intersecting intervals all contain the largest left end.
    left = max(family[i].la for i in red) if red else None
    right = max(family[i].ra for i in blue) if blue else None
    return Transversal(left, right, red, blue)


def verify_transversal(family, t: Transversal) -> str | None:
    """Return None if every member contains one of the two points."""
    family = list(family)
    for i, f in enumerate(family):
        left_hit = t.left_point is not None and f.la <= t.left_point <= f.lb
        right_hit = t.right_point is not None and f.ra <= t.right_point <= f.rb
        if not (left_hit or right_hit):
            return f"member {i} is not pierced"
    return None


@dataclass(frozen=True)
class HostTree:
    """Tree on vertices 0..n-1, validated connected with n-1 edges."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a host tree needs at least one vertex")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))
        if len(self.edges) != self.n - 1:
            raise ValueError(
                f"a tree on {self.n} vertices has {self.n - 1} edges, "
                f"got {len(self.edges)}"
            )
        if self._reach(0, frozenset(range(self.n))) != mask_of(range(self.n)):
            raise ValueError("host tree is not connected")

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def _reach(self, start: int, within: frozenset[int]) -> int:
        allowed = mask_of(within)
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits_of(frontier):
                nxt |= self.adjacency[v]
            frontier = nxt & allowed & ~seen
            seen |= frontier
        return seen

    def connected_subset(self, vertices: frozenset[int]) -> bool:
        if not vertices:
            return False
        start = min(vertices)
        return self._reach(start, vertices) == mask_of(vertices)


@dataclass(frozen=True)
class SubtreePair:
    """One nonempty connected piece in each of two host trees."""

    a_vertices: frozenset[int]
    b_vertices: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "a_vertices", frozenset(self.a_vertices))
        object.__setattr__(self, "b_vertices", frozenset(self.b_vertices))
        if not self.a_vertices or not self.b_vertices:
            raise ValueError("both fragments of a 2-subtree must be nonempty")


def coloring_from_2subtrees(tree_a: HostTree, tree_b: HostTree, members) -> TwoColoredClique:
    """Red where fragments in tree_a meet, blue where they meet in tree_b."""
    members = list(members)
    amasks = []
    bmasks = []
    for i, m in enumerate(members):
        if max(m.a_vertices) >= tree_a.n or min(m.a_vertices) < 0:
            raise ValueError(f"member {i} leaves the first host tree")
        if max(m.b_vertices) >= tree_b.n or min(m.b_vertices) < 0:
            raise ValueError(f"member {i} leaves the second host tree")
        if not tree_a.connected_subset(m.a_vertices):
            raise ValueError(f"member {i} is disconnected in the first host tree")
        if not tree_b.connected_subset(m.b_vertices):
            raise ValueError(f"member {i} is disconnected in the second host tree")
        amasks.append(mask_of(m.a_vertices))
        bmasks.append(mask_of(m.b_vertices))
    codes = bytearray()
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            red = amasks[i] & amasks[j] != 0
            blue = bmasks[i] & bmasks[j] != 0
            if red and blue:
                codes.append(2)
            elif red:
                codes.append(0)
            elif blue:
                codes.append(1)
            else:
                raise ValueError(f"not pairwise intersecting: members {i} and {j} are disjoint")
    return TwoColoredClique(len(members), bytes(codes))


def pierce_subtrees(tree_a: HostTree, tree_b: HostTree, members) -> Transversal:
    """Pick a vertex in each host tree so every member contains one."""
    members = list(members)
    if not members:
        return Transversal(None, None, (), ())
    g = coloring_from_2subtrees(tree_a, tree_b, members)
    outcome = partition(g)
    if not outcome.is_partition:
        raise InvariantViolation(
            "an intersecting 2-subtree family produced an obstruction",
            encode_2cg(g),
        )
    red = tuple(sorted(outcome.partition.red))
    blue = tuple(sorted(outcome.partition.blue))
    left = right = None
    if red:
        common = mask_of(range(tree_a.n))
        for i in red:
            common &= mask_of(members[i].a_vertices)
        if common == 0:
            raise InvariantViolation(
                "pairwise meeting subtrees of a tree share no vertex",
                encode_2cg(g),
            )
        left = (common & -common).bit_length() - 1
    if blue:
        common = mask_of(range(tree_b.n))
        for i in blue:
            common &= mask_of(members[i].b_vertices)
        if common == 0:
            raise InvariantViolation(
                "pairwise meeting subtrees of a tree share no vertex",
                encode_2cg(g),
            )
        right = (common & -common).bit_length() - 1
    return Transversal(left, right, red, blue)


def verify_subtree_transversal(members, t: Transversal) -> str | None:
    """Return None if every member contains one of the two host vertices."""
    for i, m in enumerate(members):
        left_hit = t.left_point is not None and t.left_point in m.a_vertices
        right_hit = t.right_point is not None and t.right_point in m.b_vertices
        if not (left_hit or right_hit):
            return f"member {i} is not pierced"
    return None


def parse_2iv(text: str) -> list[TwoInterval]:
    """One member per line as 'la lb ra rb'; blank lines and # comments skip.

    Endpoints parse as exact Fractions, so '1/3', '-0.25', and plain
    integers all work.
    """
    family = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 4:
            raise ValueError(f"line {lineno}: expected 4 endpoints, got {len(tokens)}")
        try:
            parts = [Fraction(tok) for tok in tokens]
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"line {lineno}: bad endpoint: {exc}") from None
        try:
            family.append(TwoInterval(*parts))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return family


def parse_subtree_json(text: str):
    """JSON with hostA, hostB (each n plus an edge list) and members
    (each an object with vertex lists a and b).  Returns
    (HostTree, HostTree, list[SubtreePair])."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"bad JSON: {exc}") from None
    try:
        tree_a = HostTree(doc["hostA"]["n"], frozenset(tuple(e) for e in doc["hostA"]["edges"]))
        tree_b = HostTree(doc["hostB"]["n"], frozenset(tuple(e) for e in doc["hostB"]["edges"]))
        members = [SubtreePair(frozenset(m["a"]), frozenset(m["b"])) for m in doc["members"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed subtree document: {exc}") from None
    return tree_a, tree_b, members


def lexbfs_order(adj, n: int) -> list[int]:
    """Lexicographic BFS visit order, least vertex on every tie."""
    classes = [list(range(n))]
    order = []
    while classes:
        head = classes[0]
        v = head.pop(0)
        if not head:
            classes.pop(0)
        order.append(v)
        av = adj[v]
        refined = []
        for cls in classes:
            inside = [w for w in cls if (av >> w) & 1]
            outside = [w for w in cls if not (av >> w) & 1]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        classes = refined
    return order


def is_chordal(adj, n: int) -> bool:
    """True iff the reversed LexBFS order is a perfect elimination order."""
    order = lexbfs_order(adj, n)
    peo = order[::-1]
    pos = [0] * n
    for i, v in enumerate(peo):
        pos[v] = i
    later = mask_of(range(n))
    for v in peo:
        later ^= 1 << v
        rest = adj[v] & later
        if rest:
            parent = min(bits_of(rest), key=lambda w: pos[w])
            if rest & ~adj[parent] & ~(1 << parent):
                return False
    return True


def color_graphs_chordal(g: TwoColoredClique) -> tuple[bool, bool]:
    """Chordality of the has-red graph and the has-blue graph.

    Both chordal rules out every obstruction: a monochromatic induced C4
    is an induced 4-cycle of one color graph, and a K5* is an induced
    5-cycle of both.
    """
    return (
        is_chordal(g.red_masks, g.n),
        is_chordal(g.blue_masks, g.n),
    )
