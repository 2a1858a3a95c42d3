import random

import pytest

from oracles import naive_partition, random_coloring
from redblue.core import build_clique, validate_partition
from redblue.obstruct import (
    C4Certificate,
    K5StarCertificate,
    validate_certificate,
)
from redblue.partition import (
    AlternatingCycle,
    InsertionState,
    PartitionOutcome,
    build_alternating_cycle,
    extract_certificate,
    insert_vertex,
    partition,
    shorten_or_certify,
)


def _pure_c5():
    red = {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}
    assign = {}
    for u in range(5):
        for v in range(u + 1, 5):
            assign[(u, v)] = 0 if (u, v) in red else 1
    return build_clique(5, assign)


def test_partition_outcome_holds_exactly_one_side():
    with pytest.raises(ValueError):
        PartitionOutcome()
    with pytest.raises(ValueError):
        PartitionOutcome(
            partition=naive_partition(build_clique(2, {(0, 1): 2})),
            obstruction=K5StarCertificate((0, 1, 2, 3, 4)),
        )


def test_tiny_instances():
    g0 = build_clique(0)
    out = partition(g0)
    assert out.is_partition and out.partition.red == frozenset() and out.partition.blue == frozenset()
    g1 = build_clique(1)
    out = partition(g1)
    assert out.partition.red == frozenset({0})
    g2 = build_clique(2, {(0, 1): 2})
    out = partition(g2)
    assert out.partition.red == frozenset({0, 1})
    assert validate_partition(g2, out.partition) is None


def test_monochromatic_instances_land_on_one_side():
    all_red = build_clique(3, {(0, 1): 0, (0, 2): 0, (1, 2): 0})
    out = partition(all_red)
    assert out.partition.red == frozenset({0, 1, 2})
    assert out.partition.blue == frozenset()


def test_pure_c5_yields_canonical_k5_star():
    out = partition(_pure_c5())
    assert not out.is_partition
    assert out.obstruction == K5StarCertificate((0, 1, 2, 3, 4))


def test_red_c4_instance_yields_certificate_despite_partition_existing():
    # one-sided semantics: a C4 certificate makes no claim about partitions
    g = build_clique(4, {(0, 1): 0, (1, 2): 0, (2, 3): 0, (0, 3): 2, (0, 2): 1, (1, 3): 1})
    out = partition(g)
    assert out.obstruction == C4Certificate("red", (0, 1, 2, 3))
    assert validate_certificate(g, out.obstruction) is None
    assert naive_partition(g) is not None


def test_insert_vertex_case_moves():
    # case (c): q = 1 moves from blue to red, then p lands in blue
    g = build_clique(3, {(0, 1): 0, (0, 2): 1, (1, 2): 0})
    state = InsertionState.create(g, {0}, {1}, 2)
    assert state.r_star == frozenset({0}) and state.b_star == frozenset({1})
    res = insert_vertex(state, g)
    assert res == (frozenset({0, 1}), frozenset({2}))

    # case (d): s = 0 moves from red to blue, then p lands in red
    g = build_clique(3, {(0, 1): 1, (0, 2): 1, (1, 2): 0})
    state = InsertionState.create(g, {0}, {1}, 2)
    assert state.phi == 2
    res = insert_vertex(state, g)
    assert res == (frozenset({2}), frozenset({0, 1}))

    # same move with the (0, 1) edge defaulting to Both
    g = build_clique(3, {(0, 2): 1, (1, 2): 0})
    state = InsertionState.create(g, {0}, {1}, 2)
    res = insert_vertex(state, g)
    assert res == (frozenset({0, 1}), frozenset({2}))


def test_insertion_state_validation():
    g = build_clique(3, {(0, 1): 1})
    with pytest.raises(ValueError):
        InsertionState.create(g, {0, 1}, set(), 2)  # (0,1) has no red
    with pytest.raises(ValueError):
        InsertionState.create(g, {0}, {0}, 2)
    with pytest.raises(ValueError):
        InsertionState.create(g, {0}, {1}, 1)
    with pytest.raises(ValueError):
        InsertionState.create(g, {0}, {5}, 2)


def test_blocked_u_walk_emits_blue_c4():
    # engineered stuck state: R = {0, 3}, B = {1, 2, 4}, p = 5
    assign = {
        (0, 3): 0,
        (1, 2): 1, (1, 4): 1, (2, 4): 1,
        (0, 1): 1, (0, 2): 2, (0, 4): 0,
        (1, 3): 2, (2, 3): 2, (3, 4): 2,
        (0, 5): 1, (3, 5): 2,
        (1, 5): 0, (2, 5): 2, (4, 5): 2,
    }
    g = build_clique(6, assign)
    out = partition(g, order=[0, 3, 1, 2, 4, 5])
    assert out.obstruction == C4Certificate("blue", (0, 1, 4, 5))
    assert validate_certificate(g, out.obstruction) is None


def _m3_instance(diag04, diag15, diag23, edge02=2, edge34=1):
    """Seven vertices set up so (R={0,1,2}, B={3,4,5}, p=6) is stuck with
    alternating cycle s = (0, 1, 2), q = (3, 4, 5)."""
    assign = {
        (0, 3): 0, (1, 4): 0, (2, 5): 0,
        (1, 3): 1, (2, 4): 1, (0, 5): 1,
        (0, 6): 1, (1, 6): 1, (2, 6): 1,
        (3, 6): 0, (4, 6): 0, (5, 6): 0,
        (0, 1): 2, (1, 2): 2, (0, 2): edge02,
        (3, 5): 1, (4, 5): 1, (3, 4): edge34,
        (0, 4): diag04, (1, 5): diag15, (2, 3): diag23,
    }
    return build_clique(7, assign)


def _m3_state(g):
    state = InsertionState.create(g, {0, 1, 2}, {3, 4, 5}, 6)
    cycle = AlternatingCycle((0, 1, 2), (3, 4, 5))
    return state, cycle


def test_shorten_all_both_diagonals_red_c4_through_p():
    g = _m3_instance(2, 2, 2, edge34=1)
    state, cycle = _m3_state(g)
    cert = shorten_or_certify(cycle, state, g)
    assert cert == C4Certificate("red", (0, 3, 6, 4))
    assert validate_certificate(g, cert) is None


def test_shorten_all_both_diagonals_red_c4_through_qs():
    g = _m3_instance(2, 2, 2, edge34=2)
    state, cycle = _m3_state(g)
    cert = shorten_or_certify(cycle, state, g)
    assert cert == C4Certificate("red", (1, 2, 3, 4))
    assert validate_certificate(g, cert) is None


def test_shorten_red_diagonal_then_blue_c4():
    g = _m3_instance(0, 2, 2, edge02=2)
    state, cycle = _m3_state(g)
    cert = shorten_or_certify(cycle, state, g)
    assert cert == C4Certificate("blue", (0, 2, 4, 5))
    assert validate_certificate(g, cert) is None


def test_shorten_red_diagonal_then_k5_star():
    g = _m3_instance(0, 2, 2, edge02=0)
    state, cycle = _m3_state(g)
    cert = shorten_or_certify(cycle, state, g)
    assert cert == K5StarCertificate((0, 2, 5, 6, 4))
    assert validate_certificate(g, cert) is None


def test_shorten_blue_diagonal_then_blue_c4():
    g = _m3_instance(1, 2, 2)
    state, cycle = _m3_state(g)
    cert = shorten_or_certify(cycle, state, g)
    assert cert == C4Certificate("blue", (0, 1, 3, 4))
    assert validate_certificate(g, cert) is None


def test_extract_certificate_matches_partition_on_stuck_state():
    g = _m3_instance(2, 2, 2)
    state, _ = _m3_state(g)
    cert = extract_certificate(state, g)
    assert validate_certificate(g, cert) is None
    walk = build_alternating_cycle(state, g)
    assert isinstance(walk, AlternatingCycle)
    assert set(walk.s_vertices) <= state.r_star
    assert set(walk.q_vertices) <= state.b_star


def test_order_must_be_a_permutation():
    g = build_clique(3)
    with pytest.raises(ValueError):
        partition(g, order=[0, 1])
    with pytest.raises(ValueError):
        partition(g, order=[0, 1, 1])
    with pytest.raises(ValueError):
        partition(g, order=[0, 1, 3])


def test_insertion_order_changes_sides_but_never_validity():
    rng = random.Random(23)
    for _ in range(100):
        g = random_coloring(rng, 8)
        order = list(range(8))
        rng.shuffle(order)
        out = partition(g, order=order)
        if out.is_partition:
            assert validate_partition(g, out.partition) is None
        else:
            assert validate_certificate(g, out.obstruction) is None


def test_partition_agrees_with_naive_where_it_must():
    # one-sided contract: a returned partition is always real, a K5* is
    # always fatal, and a coloring with no partition never yields one
    rng = random.Random(31)
    for _ in range(400):
        g = random_coloring(rng, rng.choice((4, 5, 6)))
        out = partition(g)
        ref = naive_partition(g)
        if out.is_partition:
            assert ref is not None
            assert validate_partition(g, out.partition) is None
        else:
            assert validate_certificate(g, out.obstruction) is None
            if isinstance(out.obstruction, K5StarCertificate):
                assert ref is None


def test_partition_is_deterministic():
    rng = random.Random(47)
    for _ in range(50):
        g = random_coloring(rng, 9)
        assert partition(g) == partition(g)


def test_larger_random_instance():
    rng = random.Random(3)
    n = 200
    m = n * (n - 1) // 2
    from redblue.core import TwoColoredClique

    g = TwoColoredClique(n, bytes(rng.choice((0, 1, 2)) for _ in range(m)))
    out = partition(g)
    if out.is_partition:
        assert validate_partition(g, out.partition) is None
    else:
        assert validate_certificate(g, out.obstruction) is None
