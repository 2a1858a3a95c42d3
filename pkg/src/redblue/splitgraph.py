"""Split graph recognition via the red-blue clique partition algorithm.

A graph is split iff its vertices divide into a clique and an independent
set.  Encoding edges as pure red and non-edges as pure blue turns that
question into the clique partition problem on a coloring with no Both
edges, and the obstruction certificates map exactly onto the classical
forbidden induced subgraphs: red C4 to an induced 4-cycle, blue C4 to an
induced pair of disjoint edges, K5* to an induced 5-cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import TwoColoredClique, pair_index
from .obstruct import C4Certificate, K5StarCertificate
from .partition import partition

__all__ = [
    "SimpleGraph",
    "SplitWitness",
    "SplitOutcome",
    "from_simple_graph",
    "recognize_split",
    "validate_split",
    "validate_split_witness",
    "parse_dimacs",
    "complement",
    "split_outcome_to_json",
]


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph on vertices 0..n-1, edges as sorted pairs."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges


def complement(g: SimpleGraph) -> SimpleGraph:
    missing = {
        (u, v) for u, v in combinations(range(g.n), 2) if (u, v) not in g.edges
    }
    return SimpleGraph(g.n, frozenset(missing))


def from_simple_graph(g: SimpleGraph) -> TwoColoredClique:
    """Pure red on edges, pure blue on non-edges; no Both edges at all."""
    codes = bytearray([1]) * (g.n * (g.n - 1) // 2)
    for u, v in g.edges:
        codes[pair_index(g.n, u, v)] = 0
    return TwoColoredClique(g.n, bytes(codes))


@dataclass(frozen=True)
class SplitWitness:
    """Forbidden induced subgraph: c4 and c5 carry a cycle tuple, 2k2 the
    four vertices of its two disjoint edges (v1, v2) and (v3, v4)."""

    kind: str
    vertices: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ("induced_c4", "induced_2k2", "induced_c5"):
            raise ValueError(f"unknown witness kind {self.kind!r}")
        object.__setattr__(self, "vertices", tuple(self.vertices))


@dataclass(frozen=True)
class SplitOutcome:
    """Either a (clique, independent) split or a witness, never both."""

    clique: frozenset[int] | None = None
    independent: frozenset[int] | None = None
    witness: SplitWitness | None = None

    @property
    def is_split(self) -> bool:
        return self.witness is None


def _witness_from_certificate(cert) -> SplitWitness:
    if isinstance(cert, K5StarCertificate):
        return SplitWitness("induced_c5", cert.cycle)
    if cert.color == "red":
        return SplitWitness("induced_c4", cert.cycle)
    # The blue C4's pure red diagonals are the two graph edges.
    v1, v2, v3, v4 = cert.cycle
    e1 = (min(v1, v3), max(v1, v3))
    e2 = (min(v2, v4), max(v2, v4))
    if e2 < e1:
        e1, e2 = e2, e1
    return SplitWitness("induced_2k2", e1 + e2)


def recognize_split(g: SimpleGraph) -> SplitOutcome:
    """Split the graph or return a forbidden induced subgraph witness."""
    outcome = partition(from_simple_graph(g))
    if outcome.is_partition:
        part = outcome.partition
        return SplitOutcome(clique=part.red, independent=part.blue)
    return SplitOutcome(witness=_witness_from_certificate(outcome.obstruction))


def validate_split(g: SimpleGraph, clique, independent) -> str | None:
    """Return None if (clique, independent) is a split of g, else a reason."""
    clique = frozenset(clique)
    independent = frozenset(independent)
    for v in clique | independent:
        if not 0 <= v < g.n:
            return f"vertex {v} out of range for n={g.n}"
    if clique & independent:
        v = min(clique & independent)
        return f"vertex {v} on both sides"
    if clique | independent != frozenset(range(g.n)):
        v = min(frozenset(range(g.n)) - (clique | independent))
        return f"vertex {v} on neither side"
    for u, v in combinations(sorted(clique), 2):
        if not g.has_edge(u, v):
            return f"clique side misses edge ({u}, {v})"
    for u, v in combinations(sorted(independent), 2):
        if g.has_edge(u, v):
            return f"independent side contains edge ({u}, {v})"
    return None


def validate_split_witness(g: SimpleGraph, w: SplitWitness) -> str | None:
    """Return None if w is an induced C4 / 2K2 / C5 of g, else a reason."""
    vs = w.vertices
    for v in vs:
        if not 0 <= v < g.n:
            return f"vertex {v} out of range for n={g.n}"
    if len(set(vs)) != len(vs):
        return f"witness {vs} repeats a vertex"
    if w.kind == "induced_c4":
        if len(vs) != 4:
            return "an induced C4 needs 4 vertices"
        want = {(min(vs[i], vs[(i + 1) % 4]), max(vs[i], vs[(i + 1) % 4])) for i in range(4)}
    elif w.kind == "induced_2k2":
        if len(vs) != 4:
            return "an induced 2K2 needs 4 vertices"
        want = {(min(vs[0], vs[1]), max(vs[0], vs[1])), (min(vs[2], vs[3]), max(vs[2], vs[3]))}
    else:
        if len(vs) != 5:
            return "an induced C5 needs 5 vertices"
        want = {(min(vs[i], vs[(i + 1) % 5]), max(vs[i], vs[(i + 1) % 5])) for i in range(5)}
    for u, v in combinations(sorted(vs), 2):
        present = g.has_edge(u, v)
        if (u, v) in want and not present:
            return f"witness edge ({u}, {v}) missing from the graph"
        if (u, v) not in want and present:
            return f"edge ({u}, {v}) breaks the induced pattern"
    return None


def parse_dimacs(text: str) -> SimpleGraph:
    """Parse DIMACS-like input: 'p edge <n> <m>' then 'e <u> <v>', 1-indexed."""
    n = None
    declared = 0
    edges = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate problem line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ValueError(f"line {lineno}: malformed problem line {line!r}")
            n, declared = int(tokens[2]), int(tokens[3])
            if n < 0 or declared < 0:
                raise ValueError(f"line {lineno}: negative count in problem line")
        elif tokens[0] == "e":
            if n is None:
                raise ValueError(f"line {lineno}: edge before problem line")
            if len(tokens) != 3:
                raise ValueError(f"line {lineno}: malformed edge line {line!r}")
            u, v = int(tokens[1]), int(tokens[2])
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"line {lineno}: vertex out of range in {line!r}")
            if u == v:
                raise ValueError(f"line {lineno}: loop at vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise ValueError(f"line {lineno}: unknown line type {tokens[0]!r}")
    if n is None:
        raise ValueError("missing problem line")
    if len(edges) != declared:
        raise ValueError(f"problem line declares {declared} edges, found {len(edges)}")
    return SimpleGraph(n, frozenset(edges))


def split_outcome_to_json(out: SplitOutcome) -> dict:
    if out.is_split:
        return {
            "status": "split",
            "clique": sorted(out.clique),
            "independent": sorted(out.independent),
        }
    w = out.witness
    if w.kind == "induced_2k2":
        return {
            "status": "witness",
            "kind": w.kind,
            "edges": [list(w.vertices[:2]), list(w.vertices[2:])],
        }
    return {"status": "witness", "kind": w.kind, "cycle": list(w.vertices)}
