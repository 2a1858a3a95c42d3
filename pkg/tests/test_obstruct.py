import random

import pytest

from oracles import naive_find_c4, naive_find_k5, random_coloring
from redblue.core import build_clique, decode_2cg
from redblue.obstruct import (
    C4Certificate,
    K5StarCertificate,
    canonical_cycle,
    certificate_from_json,
    certificate_to_json,
    find_k5_star,
    find_mono_induced_c4,
    scan_obstructions,
    validate_certificate,
)


def test_canonical_cycle_rotations_and_reflections():
    base = canonical_cycle((0, 1, 2, 3))
    for cyc in [(1, 2, 3, 0), (3, 0, 1, 2), (3, 2, 1, 0), (0, 3, 2, 1)]:
        assert canonical_cycle(cyc) == base
    assert canonical_cycle((2, 0, 3, 1)) == (0, 2, 1, 3)
    assert canonical_cycle((4, 3, 2, 1, 0)) == (0, 1, 2, 3, 4)


def test_certificates_canonicalize_on_construction():
    c = C4Certificate("red", (3, 2, 1, 0))
    assert c.cycle == (0, 1, 2, 3)
    k = K5StarCertificate((2, 3, 4, 0, 1))
    assert k.cycle == (0, 1, 2, 3, 4)
    with pytest.raises(ValueError):
        C4Certificate("green", (0, 1, 2, 3))
    with pytest.raises(ValueError):
        C4Certificate("red", (0, 1, 2))
    with pytest.raises(ValueError):
        K5StarCertificate((0, 1, 2, 3, 3))


def _red_c4_instance():
    # cycle 0-1-2-3 red, diagonals pure blue
    return build_clique(
        4,
        {(0, 1): 0, (1, 2): 0, (2, 3): 0, (0, 3): 2, (0, 2): 1, (1, 3): 1},
    )


def _k5_star_instance():
    red = {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}
    assign = {}
    for u in range(5):
        for v in range(u + 1, 5):
            assign[(u, v)] = 0 if (u, v) in red else 1
    return build_clique(5, assign)


def test_find_on_fixtures():
    g = _red_c4_instance()
    c = find_mono_induced_c4(g, "red")
    assert c is not None and c.cycle == (0, 1, 2, 3)
    assert find_mono_induced_c4(g, "blue") is None
    assert find_k5_star(g) is None

    k = find_k5_star(_k5_star_instance())
    assert k is not None and k.cycle == (0, 1, 2, 3, 4)


def test_scan_matches_naive_on_random_instances():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.choice((4, 5, 6))
        g = random_coloring(rng, n)
        report = scan_obstructions(g)
        assert {c.cycle for c in report.c4_red} == naive_find_c4(g, "red")
        assert {c.cycle for c in report.c4_blue} == naive_find_c4(g, "blue")
        assert {c.cycle for c in report.k5} == naive_find_k5(g)
        assert report.obstruction_free == (
            not report.c4_red and not report.c4_blue and not report.k5
        )


def test_find_agrees_with_scan_presence():
    rng = random.Random(7)
    for _ in range(300):
        g = random_coloring(rng, 5)
        report = scan_obstructions(g)
        assert (find_mono_induced_c4(g, "red") is not None) == bool(report.c4_red)
        assert (find_mono_induced_c4(g, "blue") is not None) == bool(report.c4_blue)
        assert (find_k5_star(g) is not None) == bool(report.k5)


def test_validate_certificate_accepts_real_and_rejects_tampered():
    g = _red_c4_instance()
    good = C4Certificate("red", (0, 1, 2, 3))
    assert validate_certificate(g, good) is None
    # swap two vertices so a diagonal lands on a red edge
    bad = C4Certificate("red", (0, 2, 1, 3))
    assert validate_certificate(g, bad) is not None
    wrong_color = C4Certificate("blue", (0, 1, 2, 3))
    assert validate_certificate(g, wrong_color) is not None
    out_of_range = C4Certificate("red", (0, 1, 2, 9))
    assert "range" in validate_certificate(g, out_of_range)

    k5g = _k5_star_instance()
    assert validate_certificate(k5g, K5StarCertificate((0, 1, 2, 3, 4))) is None
    assert validate_certificate(k5g, K5StarCertificate((0, 2, 4, 1, 3))) is not None


def test_certificate_json_round_trip():
    for cert in (
        C4Certificate("red", (0, 1, 2, 3)),
        C4Certificate("blue", (0, 2, 1, 3)),
        K5StarCertificate((0, 1, 2, 3, 4)),
    ):
        doc = certificate_to_json(cert)
        assert certificate_from_json(doc) == cert
    with pytest.raises(ValueError):
        certificate_from_json({"kind": "mystery"})


def test_scan_dedupes_symmetric_hits():
    # an all-pure-blue K4 has every 4-cycle red-diagonal... none; but an
    # all-red K4 with two pure blue diagonals realizes one C4 exactly once
    g = _red_c4_instance()
    report = scan_obstructions(g)
    assert len(report.c4_red) == 1
