"""Reference oracles: brute force, seeded random instances, exhaustive sweeps.

Everything here is deliberately independent of the insertion algorithm so
the two can be pitted against each other in tests.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass

from .core import CliquePartition, TwoColoredClique, bits_of, encode_2cg
from .obstruct import _c4_patterns, _k5_patterns
from .partition import partition, validate_partition

__all__ = [
    "SplitMix64",
    "GeneratorWeights",
    "ExhaustiveReport",
    "brute_force_partition",
    "generate_random",
    "exhaustive_check",
]

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Tiny explicit 64-bit generator so every platform agrees bit for bit.

    State transition per draw (all arithmetic mod 2**64):

        state += 0x9E3779B97F4A7C15
        z = state
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
        z = (z ^ (z >> 27)) * 0x94D049BB133111EB
        output = z ^ (z >> 31)

    next_float maps the top 53 bits to [0, 1), so 1.0 is never produced.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53

    def next_below(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def shuffle(self, items: list) -> None:
        """Fisher-Yates from the top; deterministic for a fixed seed."""
        for i in range(len(items) - 1, 0, -1):
            j = self.next_below(i + 1)
            items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class GeneratorWeights:
    """Edge color probabilities (pure red, pure blue, both); must sum to 1."""

    p_red: float
    p_blue: float
    p_both: float

    def __post_init__(self):
        for w in (self.p_red, self.p_blue, self.p_both):
            if not 0.0 <= w <= 1.0:
                raise ValueError(f"weight {w} outside [0, 1]")
        total = self.p_red + self.p_blue + self.p_both
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"weights sum to {total}, expected 1")


def generate_random(n: int, weights, seed: int) -> TwoColoredClique:
    """Seeded random coloring; identical bytes on every platform.

    Edges are drawn in row-major upper-triangular order.  Each edge takes
    one next_float() draw x: pure red if x < p_red, pure blue if
    x < p_red + p_blue, both otherwise.
    """
    if not isinstance(weights, GeneratorWeights):
        weights = GeneratorWeights(*weights)
    rng = SplitMix64(seed)
    t_red = weights.p_red
    t_blue = weights.p_red + weights.p_blue
    m = n * (n - 1) // 2
    codes = bytearray(m)
    for k in range(m):
        x = rng.next_float()
        codes[k] = 0 if x < t_red else (1 if x < t_blue else 2)
    return TwoColoredClique(n, bytes(codes))


def brute_force_partition(g: TwoColoredClique):
    """First red-blue clique partition by subset enumeration, or None.

    Subsets of the vertex set are tried as the red side in increasing
    bitmask order, so the empty red side comes first.  Guarded to n <= 24.
    """
    n = g.n
    if n > 24:
        raise ValueError("brute force is limited to n <= 24")
    red_adj = g.red_masks
    blue_adj = g.blue_masks
    full = (1 << n) - 1
    for mask in range(1 << n):
        ok = True
        rest = full & ~mask
        for u in bits_of(mask):
            if mask & ~red_adj[u] & ~(1 << u):
                ok = False
                break
        if not ok:
            continue
        for u in bits_of(rest):
            if rest & ~blue_adj[u] & ~(1 << u):
                ok = False
                break
        if ok:
            return CliquePartition(frozenset(bits_of(mask)), frozenset(bits_of(rest)))
    return None


@dataclass(frozen=True)
class ExhaustiveReport:
    """Outcome of sweeping every coloring of a fixed vertex count."""

    n: int
    total_colorings: int
    obstruction_free_count: int
    all_obstruction_free_partitioned: bool
    failures: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "total_colorings": self.total_colorings,
            "obstruction_free_count": self.obstruction_free_count,
            "all_obstruction_free_partitioned": self.all_obstruction_free_partitioned,
            "failures": list(self.failures),
        }


def _patterns_by_depth(n: int) -> list[list[tuple]]:
    """Obstruction patterns bucketed by the last edge index they touch.

    A pattern only reads edges up to its bucket index, so during a
    digit-by-digit enumeration it can be evaluated as soon as that edge is
    assigned, and a hit rules out every completion of the current prefix.
    """
    m = n * (n - 1) // 2
    buckets: list[list[tuple]] = [[] for _ in range(m)]
    for _, d0, d1, e0, e1, e2, e3 in _c4_patterns(n):
        depth = max(d0, d1, e0, e1, e2, e3)
        buckets[depth].append(("r", d0, d1, e0, e1, e2, e3))
        buckets[depth].append(("b", d0, d1, e0, e1, e2, e3))
    for _, cyc_idx, non_idx in _k5_patterns(n):
        depth = max(max(cyc_idx), max(non_idx))
        buckets[depth].append(("k", cyc_idx, non_idx))
    return buckets


def _fires(pat: tuple, buf: bytearray) -> bool:
    kind = pat[0]
    if kind == "r":
        _, d0, d1, e0, e1, e2, e3 = pat
        return (
            buf[d0] == 1
            and buf[d1] == 1
            and buf[e0] != 1
            and buf[e1] != 1
            and buf[e2] != 1
            and buf[e3] != 1
        )
    if kind == "b":
        _, d0, d1, e0, e1, e2, e3 = pat
        return (
            buf[d0] == 0
            and buf[d1] == 0
            and buf[e0] != 0
            and buf[e1] != 0
            and buf[e2] != 0
            and buf[e3] != 0
        )
    _, cyc_idx, non_idx = pat
    for i in cyc_idx:
        if buf[i] != 0:
            return False
    for i in non_idx:
        if buf[i] != 1:
            return False
    return True


def _sweep_range(args) -> tuple[int, list[str]]:
    """Sweep one prefix subtree; returns (free leaf count, failure texts).

    Digits are enumerated most significant edge first, so leaves are visited
    in increasing base-3 code order and results merge deterministically.
    """
    n, prefix_len, prefix_code = args
    m = n * (n - 1) // 2
    buckets = _patterns_by_depth(n)
    buf = bytearray(m)
    # Replay the prefix digits, applying the same pruning a full scan would.
    for depth in range(prefix_len):
        shift = prefix_len - 1 - depth
        buf[depth] = (prefix_code // (3**shift)) % 3
        for pat in buckets[depth]:
            if _fires(pat, buf):
                return 0, []
    free = 0
    failures: list[str] = []

    def descend(depth: int):
        nonlocal free
        if depth == m:
            g = TwoColoredClique(n, bytes(buf))
            outcome = partition(g)
            if outcome.partition is None or validate_partition(g, outcome.partition):
                failures.append(encode_2cg(g))
            free += 1
            return
        checks = buckets[depth]
        for digit in (0, 1, 2):
            buf[depth] = digit
            for pat in checks:
                if _fires(pat, buf):
                    break
            else:
                descend(depth + 1)

    descend(prefix_len)
    return free, failures


def exhaustive_check(n: int, allow_big: bool = False, jobs: int = 1) -> ExhaustiveReport:
    """Check every coloring on n vertices: obstruction-free implies partition.

    Colorings are the base-3 codes over the C(n, 2) edges in row-major
    upper-triangular order, first edge as the most significant digit.  Any
    coloring on which some obstruction pattern fires is skipped (the
    algorithm owes nothing there); every obstruction-free coloring must
    yield a partition that validates, and violators are reported as .2cg
    text.  n = 6 is allowed only with allow_big; larger sweeps are refused.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n == 6 and not allow_big:
        raise ValueError("n=6 sweeps 14,348,907 colorings; pass allow_big=True")
    if n > 6:
        raise ValueError("exhaustive sweeps above n=6 are not supported")
    m = n * (n - 1) // 2
    total = 3**m
    if jobs < 1:
        raise ValueError("jobs must be positive")
    prefix_len = 0
    if jobs > 1:
        while 3**prefix_len < 4 * jobs and prefix_len < m:
            prefix_len += 1
    tasks = [(n, prefix_len, code) for code in range(3**prefix_len)]
    if jobs == 1 or len(tasks) == 1:
        results = [_sweep_range(t) for t in tasks]
    else:
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_sweep_range, tasks)
    free = sum(r[0] for r in results)
    failures: list[str] = []
    for r in results:
        failures.extend(r[1])
    return ExhaustiveReport(
        n=n,
        total_colorings=total,
        obstruction_free_count=free,
        all_obstruction_free_partitioned=not failures,
        failures=tuple(failures),
    )
