"""Certifying partition of a 2-colored clique into a red and a blue clique.

Vertices are inserted one at a time while keeping a valid partition (R, B)
of the processed part.  For the incoming vertex p, the blockers are

    r_star = {r in R : edge (p, r) is pure blue}
    b_star = {b in B : edge (p, b) is pure red}

If either set is empty p joins the other side.  Otherwise the algorithm
tries exchange moves: a q in b_star with no pure blue edge into R moves to
R, and symmetrically for r_star; each such move shrinks |r_star| + |b_star|
by exactly one.  When no move applies, a local structure made of pure
edges must exist, and it is distilled into a machine-checkable obstruction:
a monochromatic induced C4 or a K5*.

A returned partition is always correct.  A returned K5* proves no partition
exists at all; a returned C4 only proves the obstruction-freeness hypothesis
fails, so the instance may or may not admit a partition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    CliquePartition,
    TwoColoredClique,
    bits_of,
    mask_of,
    validate_partition,
)
from .obstruct import C4Certificate, K5StarCertificate, validate_certificate

__all__ = [
    "InsertionState",
    "AlternatingCycle",
    "PartitionOutcome",
    "partition",
    "insert_vertex",
    "build_alternating_cycle",
    "shorten_or_certify",
    "extract_certificate",
    "validate_partition",
]


@dataclass(frozen=True)
class InsertionState:
    """Snapshot of one insertion step.

    red and blue partition the already-processed vertices; p is the vertex
    being inserted.  r_star, b_star, and phi = |r_star| + |b_star| are
    determined by (red, blue, p) and carried for inspection.
    """

    red: frozenset[int]
    blue: frozenset[int]
    p: int
    r_star: frozenset[int]
    b_star: frozenset[int]
    phi: int

    @classmethod
    def create(cls, g: TwoColoredClique, red, blue, p: int) -> "InsertionState":
        red = frozenset(red)
        blue = frozenset(blue)
        for v in red | blue | {p}:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} out of range for n={g.n}")
        if red & blue:
            raise ValueError("red and blue sides overlap")
        if p in red or p in blue:
            raise ValueError(f"vertex {p} is already placed")
        red_mask = mask_of(red)
        blue_mask = mask_of(blue)
        for u in red:
            bad = red_mask & ~g.red_masks[u] & ~(1 << u)
            if bad:
                v = (bad & -bad).bit_length() - 1
                raise ValueError(f"red side is not a red clique at edge ({u}, {v})")
        for u in blue:
            bad = blue_mask & ~g.blue_masks[u] & ~(1 << u)
            if bad:
                v = (bad & -bad).bit_length() - 1
                raise ValueError(f"blue side is not a blue clique at edge ({u}, {v})")
        r_star = frozenset(bits_of(red_mask & g.pure_blue_masks[p]))
        b_star = frozenset(bits_of(blue_mask & g.pure_red_masks[p]))
        return cls(red, blue, p, r_star, b_star, len(r_star) + len(b_star))


@dataclass(frozen=True)
class AlternatingCycle:
    """Closed cycle s1, q1, s2, q2, ..., sm, qm of pure edges.

    Edges (s_i, q_i) are pure red and (q_i, s_{i+1}) pure blue, indices
    cyclic.  The s vertices live in r_star, the q vertices in b_star.
    """

    s_vertices: tuple[int, ...]
    q_vertices: tuple[int, ...]

    def __post_init__(self):
        s = tuple(self.s_vertices)
        q = tuple(self.q_vertices)
        object.__setattr__(self, "s_vertices", s)
        object.__setattr__(self, "q_vertices", q)
        if len(s) != len(q):
            raise ValueError("alternating cycle needs equally many s and q vertices")
        if len(s) < 2:
            raise ValueError("alternating cycle needs at least two pure red edges")
        if len(set(s) | set(q)) != 2 * len(s):
            raise ValueError("alternating cycle repeats a vertex")

    @property
    def m(self) -> int:
        return len(self.s_vertices)


@dataclass(frozen=True)
class PartitionOutcome:
    """Either a valid partition or an obstruction certificate, never both."""

    partition: CliquePartition | None = None
    obstruction: C4Certificate | K5StarCertificate | None = None

    def __post_init__(self):
        if (self.partition is None) == (self.obstruction is None):
            raise ValueError("outcome must hold exactly one of partition, obstruction")

    @property
    def is_partition(self) -> bool:
        return self.partition is not None


def _checked(g: TwoColoredClique, cert):
    assert validate_certificate(g, cert) is None, (
        f"extracted certificate failed validation: {cert}"
    )
    return cert


def _insert(g: TwoColoredClique, red_mask: int, blue_mask: int, p: int):
    """Mask-level insertion loop; returns (red, blue) masks or a certificate."""
    pure_blue = g.pure_blue_masks
    pure_red = g.pure_red_masks
    pb_p = pure_blue[p]
    pr_p = pure_red[p]
    while True:
        r_star = red_mask & pb_p
        if not r_star:
            return red_mask | (1 << p), blue_mask
        b_star = blue_mask & pr_p
        if not b_star:
            return red_mask, blue_mask | (1 << p)
        phi = r_star.bit_count() + b_star.bit_count()
        moved = False
        m = b_star
        while m:
            low = m & -m
            m ^= low
            q = low.bit_length() - 1
            if not pure_blue[q] & red_mask:
                # q has red on all edges into R, so R u {q} stays a red clique
                red_mask |= low
                blue_mask ^= low
                moved = True
                break
        if not moved:
            m = r_star
            while m:
                low = m & -m
                m ^= low
                s = low.bit_length() - 1
                if not pure_red[s] & blue_mask:
                    blue_mask |= low
                    red_mask ^= low
                    moved = True
                    break
        if moved:
            new_phi = (red_mask & pb_p).bit_count() + (blue_mask & pr_p).bit_count()
            assert new_phi == phi - 1, (
                "exchange move must shrink |r_star| + |b_star| by exactly one"
            )
            continue
        state = InsertionState(
            red=frozenset(bits_of(red_mask)),
            blue=frozenset(bits_of(blue_mask)),
            p=p,
            r_star=frozenset(bits_of(r_star)),
            b_star=frozenset(bits_of(b_star)),
            phi=phi,
        )
        return extract_certificate(state, g)


def insert_vertex(state: InsertionState, g: TwoColoredClique):
    """Insert state.p, returning updated (red, blue) sets or a certificate."""
    res = _insert(g, mask_of(state.red), mask_of(state.blue), state.p)
    if isinstance(res, tuple):
        red_mask, blue_mask = res
        return frozenset(bits_of(red_mask)), frozenset(bits_of(blue_mask))
    return res


def build_alternating_cycle(state: InsertionState, g: TwoColoredClique):
    """Build the pure-edge alternating cycle, or a C4 found on the way.

    Requires a stuck state: r_star and b_star nonempty and neither exchange
    move applicable.  For q in b_star let t(q) be the least s in r_star with
    (q, s) pure blue; if none exists, the least pure blue witness r in R
    together with the least s in r_star closes a red C4 (p, q, s, r).
    Symmetrically u(s) is the least q in b_star with (s, q) pure red, with
    the blocked case yielding a blue C4 (p, s, q, b).  Otherwise the walk
    s -> u(s) -> t(u(s)) -> ... closes a cycle with m >= 2.
    """
    pure_blue = g.pure_blue_masks
    pure_red = g.pure_red_masks
    p = state.p
    red_mask = mask_of(state.red)
    blue_mask = mask_of(state.blue)
    r_star = red_mask & pure_blue[p]
    b_star = blue_mask & pure_red[p]
    if not r_star or not b_star:
        raise ValueError("state is not stuck: a blocker set is empty")
    for q in bits_of(b_star):
        if not pure_blue[q] & red_mask:
            raise ValueError(f"state is not stuck: vertex {q} can move to the red side")
    for s in bits_of(r_star):
        if not pure_red[s] & blue_mask:
            raise ValueError(f"state is not stuck: vertex {s} can move to the blue side")

    t = {}
    for q in bits_of(b_star):
        cand = r_star & pure_blue[q]
        if cand:
            t[q] = (cand & -cand).bit_length() - 1
        else:
            witness = red_mask & pure_blue[q]
            r = (witness & -witness).bit_length() - 1
            s = (r_star & -r_star).bit_length() - 1
            return _checked(g, C4Certificate("red", (p, q, s, r)))
    u = {}
    for s in bits_of(r_star):
        cand = b_star & pure_red[s]
        if cand:
            u[s] = (cand & -cand).bit_length() - 1
        else:
            witness = blue_mask & pure_red[s]
            b = (witness & -witness).bit_length() - 1
            q = (b_star & -b_star).bit_length() - 1
            return _checked(g, C4Certificate("blue", (p, s, q, b)))

    cur = (r_star & -r_star).bit_length() - 1
    seq = [cur]
    pos = {cur: 0}
    while True:
        nxt = u[cur] if len(seq) % 2 == 1 else t[cur]
        if nxt in pos:
            segment = seq[pos[nxt]:]
            if pos[nxt] % 2 == 1:
                segment = segment[1:] + segment[:1]
            break
        pos[nxt] = len(seq)
        seq.append(nxt)
        cur = nxt
    assert len(segment) >= 4, "alternating walk closed on a single pure edge"
    return AlternatingCycle(tuple(segment[0::2]), tuple(segment[1::2]))


def shorten_or_certify(cycle: AlternatingCycle, state: InsertionState, g: TwoColoredClique):
    """Shrink an alternating cycle to m=2 and read off the certificate.

    While m > 2, any pure diagonal (s_i, q_j) closes a strictly shorter
    alternating cycle, and if every diagonal carries both colors a red C4
    through p or through two q vertices exists.  At m = 2 the four cycle
    vertices plus p force a blue C4, a red C4, or a full K5*.
    """
    s = list(cycle.s_vertices)
    q = list(cycle.q_vertices)
    m = len(s)
    p = state.p
    code_at = g.code_at
    while m > 2:
        shorter = None
        for i in range(m):
            si = s[i]
            skip_a = i
            skip_b = (i - 1) % m
            for j in range(m):
                if j == skip_a or j == skip_b:
                    continue
                c = code_at(si, q[j])
                if c == 0:
                    mm = (i - j) % m
                    shorter = (
                        [si] + [s[(j + 1 + k) % m] for k in range(mm - 1)],
                        [q[(j + k) % m] for k in range(mm)],
                    )
                elif c == 1:
                    mm = (j - i) % m + 1
                    shorter = (
                        [s[(i + k) % m] for k in range(mm)],
                        [q[(i + k) % m] for k in range(mm)],
                    )
                if shorter:
                    break
            if shorter:
                break
        if shorter is None:
            # Every diagonal carries both colors, so (s1, q2) and (s3, q1)
            # carry red; one of two red C4s with pure blue diagonals closes.
            if code_at(q[0], q[1]) == 1:
                return _checked(g, C4Certificate("red", (s[0], q[0], p, q[1])))
            return _checked(g, C4Certificate("red", (q[0], q[1], s[1], s[2])))
        new_s, new_q = shorter
        assert 2 <= len(new_s) < m, "diagonal shortcut must shrink the cycle"
        s, q, m = new_s, new_q, len(new_s)
    s1, s2 = s
    q1, q2 = q
    if code_at(s1, s2) != 0:
        return _checked(g, C4Certificate("blue", (s1, s2, q1, q2)))
    if code_at(q1, q2) != 1:
        return _checked(g, C4Certificate("red", (q1, q2, s2, s1)))
    return _checked(g, K5StarCertificate((p, q1, s1, s2, q2)))


def extract_certificate(state: InsertionState, g: TwoColoredClique):
    """Certificate for a stuck insertion state (compose build and shorten)."""
    res = build_alternating_cycle(state, g)
    if isinstance(res, AlternatingCycle):
        res = shorten_or_certify(res, state, g)
    return res


def partition(g: TwoColoredClique, order=None) -> PartitionOutcome:
    """Partition the coloring or emit an obstruction certificate.

    order, when given, must be a permutation of range(g.n); vertices are
    inserted in that order.  All tie breaks go to the least vertex index,
    so the outcome is deterministic for a fixed order.
    """
    n = g.n
    if order is None:
        order = range(n)
    else:
        order = list(order)
        if sorted(order) != list(range(n)):
            raise ValueError("order must be a permutation of all vertices")
    red_mask = 0
    blue_mask = 0
    for p in order:
        res = _insert(g, red_mask, blue_mask, p)
        if not isinstance(res, tuple):
            return PartitionOutcome(obstruction=res)
        red_mask, blue_mask = res
    return PartitionOutcome(
        partition=CliquePartition(
            frozenset(bits_of(red_mask)), frozenset(bits_of(blue_mask))
        )
    )
