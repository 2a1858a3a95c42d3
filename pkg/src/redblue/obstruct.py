"""Obstruction certificates: monochromatic induced 4-cycles and K5*.

A red C4 certificate is a 4-tuple (v1, v2, v3, v4) whose four cycle edges
all carry red while both diagonals are pure blue (swap colors for blue).
A K5* certificate is a 5-tuple on which every edge is pure and the red
edges form exactly the 5-cycle of consecutive pairs, so blue edges form
the complementary 5-cycle.

Certificates are machine-checkable against the coloring alone; K5* also
rules out any red-blue clique partition of the whole graph, while a C4
certificate carries no such implication.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .core import TwoColoredClique, pair_index

__all__ = [
    "C4Certificate",
    "K5StarCertificate",
    "ObstructionReport",
    "find_mono_induced_c4",
    "find_k5_star",
    "scan_obstructions",
    "validate_certificate",
    "certificate_to_json",
    "certificate_from_json",
]


def canonical_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least tuple over rotations and reflections."""
    k = len(cycle)
    rev = cycle[::-1]
    return min(
        min(cycle[i:] + cycle[:i] for i in range(k)),
        min(rev[i:] + rev[:i] for i in range(k)),
    )


@dataclass(frozen=True)
class C4Certificate:
    """Monochromatic induced 4-cycle; cycle is stored in canonical form."""

    color: str
    cycle: tuple[int, int, int, int]

    def __post_init__(self):
        if self.color not in ("red", "blue"):
            raise ValueError(f"certificate color must be red or blue, got {self.color!r}")
        cyc = tuple(self.cycle)
        if len(cyc) != 4 or len(set(cyc)) != 4:
            raise ValueError("a C4 certificate needs exactly 4 distinct vertices")
        object.__setattr__(self, "cycle", canonical_cycle(cyc))


@dataclass(frozen=True)
class K5StarCertificate:
    """Five vertices, all edges pure, red edges a 5-cycle; canonical form."""

    cycle: tuple[int, int, int, int, int]

    def __post_init__(self):
        cyc = tuple(self.cycle)
        if len(cyc) != 5 or len(set(cyc)) != 5:
            raise ValueError("a K5* certificate needs exactly 5 distinct vertices")
        object.__setattr__(self, "cycle", canonical_cycle(cyc))


@dataclass(frozen=True)
class ObstructionReport:
    """All obstructions of a coloring, one representative per dihedral orbit."""

    c4_red: tuple[C4Certificate, ...]
    c4_blue: tuple[C4Certificate, ...]
    k5: tuple[K5StarCertificate, ...]

    @property
    def obstruction_free(self) -> bool:
        return not (self.c4_red or self.c4_blue or self.k5)


# Pattern tables, cached per vertex count.  A C4 pattern is the six flat
# edge indices (four cycle edges, two diagonals) of one cyclic ordering of
# one 4-subset; only the 3 orderings in canonical form are listed.  A K5
# pattern is the ten indices (five cycle, five non-cycle) of one of the 12
# canonical cyclic orderings of a 5-subset.
_C4_TABLES: dict[int, list] = {}
_K5_TABLES: dict[int, list] = {}


def _c4_patterns(n: int) -> list:
    table = _C4_TABLES.get(n)
    if table is None:
        table = []
        for a, b, c, d in combinations(range(n), 4):
            for cyc in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
                w, x, y, z = cyc
                table.append(
                    (
                        cyc,
                        pair_index(n, min(w, y), max(w, y)),
                        pair_index(n, min(x, z), max(x, z)),
                        pair_index(n, min(w, x), max(w, x)),
                        pair_index(n, min(x, y), max(x, y)),
                        pair_index(n, min(y, z), max(y, z)),
                        pair_index(n, min(z, w), max(z, w)),
                    )
                )
        _C4_TABLES[n] = table
    return table


def _k5_patterns(n: int) -> list:
    table = _K5_TABLES.get(n)
    if table is None:
        table = []
        for subset in combinations(range(n), 5):
            a = subset[0]
            for perm in permutations(subset[1:]):
                if perm[0] > perm[3]:
                    continue
                cyc = (a,) + perm
                on_cycle = set()
                cyc_idx = []
                for i in range(5):
                    u, v = cyc[i], cyc[(i + 1) % 5]
                    on_cycle.add((min(u, v), max(u, v)))
                    cyc_idx.append(pair_index(n, min(u, v), max(u, v)))
                non_idx = [
                    pair_index(n, u, v)
                    for u, v in combinations(subset, 2)
                    if (u, v) not in on_cycle
                ]
                table.append((cyc, tuple(cyc_idx), tuple(non_idx)))
        _K5_TABLES[n] = table
    return table


def find_mono_induced_c4(g: TwoColoredClique, color: str):
    """First monochromatic induced C4 of the given color, or None.

    Search order is deterministic: 4-subsets in lexicographic order, then
    the three cyclic orderings of each subset in canonical form.
    """
    if color == "red":
        diag, avoid = 1, 1
    elif color == "blue":
        diag, avoid = 0, 0
    else:
        raise ValueError(f"color must be red or blue, got {color!r}")
    codes = g.codes
    for cyc, d0, d1, e0, e1, e2, e3 in _c4_patterns(g.n):
        if (
            codes[d0] == diag
            and codes[d1] == diag
            and codes[e0] != avoid
            and codes[e1] != avoid
            and codes[e2] != avoid
            and codes[e3] != avoid
        ):
            return C4Certificate(color, cyc)
    return None


def find_k5_star(g: TwoColoredClique):
    """First K5* witness, or None; same deterministic search order idea."""
    codes = g.codes
    for cyc, cyc_idx, non_idx in _k5_patterns(g.n):
        ok = True
        for i in cyc_idx:
            if codes[i] != 0:
                ok = False
                break
        if not ok:
            continue
        for i in non_idx:
            if codes[i] != 1:
                ok = False
                break
        if ok:
            return K5StarCertificate(cyc)
    return None


def scan_obstructions(g: TwoColoredClique) -> ObstructionReport:
    """Collect every obstruction, deduplicated to canonical representatives.

    Each induced C4 (a 4-subset plus a pairing into opposite corners) and
    each K5* (a 5-subset plus an unordered 5-cycle) corresponds to exactly
    one canonical tuple, so enumerating canonical orderings directly yields
    one entry per dihedral orbit.
    """
    codes = g.codes
    c4_red = []
    c4_blue = []
    for cyc, d0, d1, e0, e1, e2, e3 in _c4_patterns(g.n):
        if (
            codes[d0] == 1
            and codes[d1] == 1
            and codes[e0] != 1
            and codes[e1] != 1
            and codes[e2] != 1
            and codes[e3] != 1
        ):
            c4_red.append(C4Certificate("red", cyc))
        if (
            codes[d0] == 0
            and codes[d1] == 0
            and codes[e0] != 0
            and codes[e1] != 0
            and codes[e2] != 0
            and codes[e3] != 0
        ):
            c4_blue.append(C4Certificate("blue", cyc))
    k5 = []
    for cyc, cyc_idx, non_idx in _k5_patterns(g.n):
        if all(codes[i] == 0 for i in cyc_idx) and all(
            codes[i] == 1 for i in non_idx
        ):
            k5.append(K5StarCertificate(cyc))
    return ObstructionReport(tuple(c4_red), tuple(c4_blue), tuple(k5))


def _check_vertices(g: TwoColoredClique, cycle) -> str | None:
    for v in cycle:
        if not 0 <= v < g.n:
            return f"vertex {v} out of range for n={g.n}"
    if len(set(cycle)) != len(cycle):
        return f"cycle {cycle} repeats a vertex"
    return None


def validate_certificate(g: TwoColoredClique, cert) -> str | None:
    """Return None if cert is valid for g, else a message naming the bad edge."""
    if isinstance(cert, C4Certificate):
        bad = _check_vertices(g, cert.cycle)
        if bad:
            return bad
        w, x, y, z = cert.cycle
        red = cert.color == "red"
        diag_code = 1 if red else 0
        for u, v in ((w, x), (x, y), (y, z), (z, w)):
            c = g.code_at(u, v)
            if c == diag_code:
                return f"edge ({min(u, v)}, {max(u, v)}): cycle edge carries no {cert.color}"
        for u, v in ((w, y), (x, z)):
            if g.code_at(u, v) != diag_code:
                want = "blue" if red else "red"
                return f"edge ({min(u, v)}, {max(u, v)}): diagonal is not pure {want}"
        return None
    if isinstance(cert, K5StarCertificate):
        bad = _check_vertices(g, cert.cycle)
        if bad:
            return bad
        cyc = cert.cycle
        on_cycle = {
            (min(cyc[i], cyc[(i + 1) % 5]), max(cyc[i], cyc[(i + 1) % 5]))
            for i in range(5)
        }
        for u, v in combinations(sorted(cyc), 2):
            c = g.color(u, v)
            if (u, v) in on_cycle:
                if c.char != "R":
                    return f"edge ({u}, {v}): cycle edge is not pure red"
            elif c.char != "B":
                return f"edge ({u}, {v}): non-cycle edge is not pure blue"
        return None
    return f"unknown certificate type {type(cert).__name__}"


def certificate_to_json(cert) -> dict:
    if isinstance(cert, C4Certificate):
        return {"kind": "mono_c4", "color": cert.color, "cycle": list(cert.cycle)}
    if isinstance(cert, K5StarCertificate):
        return {"kind": "k5_star", "cycle": list(cert.cycle)}
    raise ValueError(f"unknown certificate type {type(cert).__name__}")


def certificate_from_json(obj: dict):
    kind = obj.get("kind")
    if kind == "mono_c4":
        return C4Certificate(obj["color"], tuple(obj["cycle"]))
    if kind == "k5_star":
        return K5StarCertificate(tuple(obj["cycle"]))
    raise ValueError(f"unknown certificate kind {kind!r}")
