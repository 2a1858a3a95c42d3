"""Slow, independent reference implementations used only by tests.

Everything here is written the dumbest way possible, straight from the
definitions, so disagreements point at the package and not the oracle.
"""

from __future__ import annotations

from itertools import combinations, permutations

from redblue.core import CliquePartition, TwoColoredClique, pair_index
from redblue.obstruct import canonical_cycle


def naive_find_c4(g: TwoColoredClique, color: str) -> set:
    """All canonical monochromatic induced C4 cycles, by permutations."""
    want_has = (lambda u, v: g.has_red(u, v)) if color == "red" else (lambda u, v: g.has_blue(u, v))
    diag_code = 1 if color == "red" else 0
    found = set()
    for four in combinations(range(g.n), 4):
        for a, b, c, d in permutations(four):
            cyc = [(a, b), (b, c), (c, d), (d, a)]
            if all(want_has(u, v) for u, v in cyc) and g.color(a, c) == diag_code and g.color(b, d) == diag_code:
                found.add(canonical_cycle((a, b, c, d)))
    return found


def naive_find_k5(g: TwoColoredClique) -> set:
    """All canonical K5* cycles: ten pure edges, reds a 5-cycle."""
    found = set()
    for five in combinations(range(g.n), 5):
        if any(g.color(u, v) == 2 for u, v in combinations(five, 2)):
            continue
        for perm in permutations(five):
            cyc = {frozenset((perm[i], perm[(i + 1) % 5])) for i in range(5)}
            reds = {frozenset((u, v)) for u, v in combinations(five, 2) if g.color(u, v) == 0}
            if reds == cyc:
                found.add(canonical_cycle(perm))
                break
    return found


def naive_partition(g: TwoColoredClique) -> CliquePartition | None:
    """Try every subset as the red side; first hit in mask order."""
    n = g.n
    for mask in range(1 << n):
        red = [v for v in range(n) if (mask >> v) & 1]
        blue = [v for v in range(n) if not (mask >> v) & 1]
        if all(g.has_red(u, v) for u, v in combinations(red, 2)) and all(
            g.has_blue(u, v) for u, v in combinations(blue, 2)
        ):
            return CliquePartition(frozenset(red), frozenset(blue))
    return None


def naive_is_split(n: int, edges: frozenset) -> tuple | None:
    """First (clique, independent) bipartition in red-mask order, or None."""
    def adjacent(u, v):
        return (min(u, v), max(u, v)) in edges

    for mask in range(1 << n):
        clique = [v for v in range(n) if (mask >> v) & 1]
        indep = [v for v in range(n) if not (mask >> v) & 1]
        if all(adjacent(u, v) for u, v in combinations(clique, 2)) and not any(
            adjacent(u, v) for u, v in combinations(indep, 2)
        ):
            return frozenset(clique), frozenset(indep)
    return None


def naive_is_chordal(adj, n: int) -> bool:
    """No induced cycle of length four or more: a subset induces a cycle
    iff its induced graph is connected and 2-regular."""
    for size in range(4, n + 1):
        for sub in combinations(range(n), size):
            inside = 0
            for v in sub:
                inside |= 1 << v
            degs = [bin(adj[v] & inside).count("1") for v in sub]
            if any(d != 2 for d in degs):
                continue
            seen = {sub[0]}
            frontier = [sub[0]]
            while frontier:
                v = frontier.pop()
                for w in sub:
                    if w not in seen and (adj[v] >> w) & 1:
                        seen.add(w)
                        frontier.append(w)
            if len(seen) == size:
                return False
    return True


def all_colorings(n: int):
    """Every coloring of the complete graph on n vertices, big-endian."""
    m = n * (n - 1) // 2
    for code in range(3 ** m):
        buf = bytearray(m)
        x = code
        for k in range(m - 1, -1, -1):
            buf[k] = x % 3
            x //= 3
        yield TwoColoredClique(n, bytes(buf))


def random_coloring(rng, n: int) -> TwoColoredClique:
    m = n * (n - 1) // 2
    return TwoColoredClique(n, bytes(rng.choice((0, 1, 2)) for _ in range(m)))


def random_2intervals(rng, n: int):
    """Random family repaired until pairwise intersecting.

    Repairs only ever enlarge a fragment, so the loop terminates and
    never breaks an intersection it already made.
    """
    from fractions import Fraction

    from redblue.transversal import TwoInterval

    spans = []
    for _ in range(n):
        la = Fraction(-rng.randint(2, 40), rng.randint(1, 4))
        lb = la + Fraction(rng.randint(0, 20), rng.randint(1, 4))
        if lb >= 0:
            lb = la / 2
        ra = Fraction(rng.randint(1, 40), rng.randint(1, 4))
        rb = ra + Fraction(rng.randint(0, 20), rng.randint(1, 4))
        spans.append([la, lb, ra, rb])
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(i + 1, n):
                si, sj = spans[i], spans[j]
                left = max(si[0], sj[0]) <= min(si[1], sj[1])
                right = max(si[2], sj[2]) <= min(si[3], sj[3])
                if left or right:
                    continue
                changed = True
                if rng.random() < 0.5:
                    si[0] = min(si[0], sj[0])
                    si[1] = max(si[1], sj[1])
                else:
                    si[2] = min(si[2], sj[2])
                    si[3] = max(si[3], sj[3])
    return [TwoInterval(*s) for s in spans]


def random_host_tree(rng, n: int):
    from redblue.transversal import HostTree

    edges = {(rng.randrange(v), v) for v in range(1, n)}
    return HostTree(n, frozenset(edges))


def _tree_path(tree, a: int, b: int) -> set:
    parent = {a: None}
    frontier = [a]
    while b not in parent:
        v = frontier.pop()
        for w in range(tree.n):
            if w not in parent and (tree.adjacency[v] >> w) & 1:
                parent[w] = v
                frontier.append(w)
    path = set()
    v = b
    while v is not None:
        path.add(v)
        v = parent[v]
    return path


def _random_subtree(rng, tree) -> set:
    vertices = {rng.randrange(tree.n)}
    for _ in range(rng.randrange(tree.n)):
        boundary = set()
        for v in vertices:
            for w in range(tree.n):
                if w not in vertices and (tree.adjacency[v] >> w) & 1:
                    boundary.add(w)
        if not boundary:
            break
        vertices.add(rng.choice(sorted(boundary)))
    return vertices


def random_2subtrees(rng, tree_a, tree_b, n: int):
    """Random pairwise intersecting family of 2-subtrees.

    Disjoint pairs are repaired by growing one fragment along the host
    path to the other, which keeps it connected and only enlarges.
    """
    from redblue.transversal import SubtreePair

    fams = [[_random_subtree(rng, tree_a), _random_subtree(rng, tree_b)] for _ in range(n)]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(i + 1, n):
                fi, fj = fams[i], fams[j]
                if fi[0] & fj[0] or fi[1] & fj[1]:
                    continue
                changed = True
                side = 0 if rng.random() < 0.5 else 1
                tree = tree_a if side == 0 else tree_b
                a = min(fi[side])
                b = min(fj[side])
                fi[side] = fi[side] | _tree_path(tree, a, b) | fj[side]
    return [SubtreePair(frozenset(a), frozenset(b)) for a, b in fams]
